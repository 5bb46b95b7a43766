//! d-maximal green sequences of `A_n^d`, their Σ-equivalence classes, and the
//! two orders on classes.
//!
//! A green sequence is a maximal chain of the first order on triangulations of
//! `C(n+2d+1, 2d)`, read through cluster-tilting states. Each step exchanges
//! `A` for `B` with `A ≀ B`, and the flip support of the step is `A ∪ B`.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::combinat::VertexTuple;
use crate::error::{contract, integrity, Error, Result};
use crate::orders::{Limits, Relation, TriangulationPoset};
use crate::polytope::PolytopeSpec;
use crate::triangulation::{boundary_triangulation, Side, Triangulation};

use super::tilting::{cluster_state, exchanged_pair, universe, Framework, TiltingState};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGreenSequence", into = "RawGreenSequence")]
pub struct GreenSequence {
    d: usize,
    n: usize,
    states: Vec<TiltingState>,
    flips: Vec<VertexTuple>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGreenSequence {
    d: usize,
    n: usize,
    flips: Vec<VertexTuple>,
    states: Vec<Vec<VertexTuple>>,
}

impl From<GreenSequence> for RawGreenSequence {
    fn from(g: GreenSequence) -> Self {
        RawGreenSequence {
            d: g.d,
            n: g.n,
            flips: g.flips,
            states: g.states.into_iter().map(|s| s.tuples().to_vec()).collect(),
        }
    }
}

impl TryFrom<RawGreenSequence> for GreenSequence {
    type Error = Error;

    fn try_from(raw: RawGreenSequence) -> Result<Self> {
        let states = raw
            .states
            .into_iter()
            .map(|s| TiltingState::new(Framework::ClusterTilting, raw.d, raw.n, s))
            .collect::<Result<Vec<_>>>()?;
        GreenSequence::new(raw.d, raw.n, states, raw.flips)
    }
}

/// Bottom and top cluster-tilting states for `(d, n)`.
pub fn boundary_states(d: usize, n: usize) -> Result<(TiltingState, TiltingState)> {
    let spec = Framework::ClusterTilting.polytope(d, n)?;
    Ok((
        cluster_state(&boundary_triangulation(spec, Side::Lower))?,
        cluster_state(&boundary_triangulation(spec, Side::Upper))?,
    ))
}

impl GreenSequence {
    /// Validates endpoints, every mutation step and every flip support.
    pub fn new(
        d: usize,
        n: usize,
        states: Vec<TiltingState>,
        flips: Vec<VertexTuple>,
    ) -> Result<Self> {
        if states.len() != flips.len() + 1 {
            return Err(contract!(
                "{} states cannot carry {} flips",
                states.len(),
                flips.len()
            ));
        }
        if let Some(s) = states
            .iter()
            .find(|s| (s.framework(), s.d(), s.n()) != (Framework::ClusterTilting, d, n))
        {
            return Err(contract!(
                "state {:?} does not belong to d={d}, n={n}",
                s.tuples()
            ));
        }
        let (bottom, top) = boundary_states(d, n)?;
        if states[0] != bottom {
            return Err(contract!("sequence does not start at the projective state"));
        }
        if states[states.len() - 1] != top {
            return Err(contract!(
                "sequence does not end at the shifted projective state"
            ));
        }
        for (k, (pair, flip)) in states.windows(2).zip(&flips).enumerate() {
            let (a, b) = exchanged_pair(&pair[0], &pair[1])
                .ok_or_else(|| contract!("step {k} is not a left mutation"))?;
            if a.union(&b) != *flip {
                return Err(contract!("flip {flip} of step {k} is not {}", a.union(&b)));
            }
        }
        Ok(GreenSequence {
            d,
            n,
            states,
            flips,
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn states(&self) -> &[TiltingState] {
        &self.states
    }

    /// Flip supports, one `(2d+2)`-tuple per mutation.
    pub fn flips(&self) -> &[VertexTuple] {
        &self.flips
    }

    /// Number of mutations.
    pub fn len(&self) -> usize {
        self.flips.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flips.is_empty()
    }
}

/// `Σ(G)`: every summand appearing along the sequence.
pub fn summand_set(g: &GreenSequence) -> Vec<VertexTuple> {
    let mut sigma: Vec<VertexTuple> = g
        .states
        .iter()
        .flat_map(|s| s.tuples().iter().cloned())
        .collect();
    sigma.sort();
    sigma.dedup();
    sigma
}

/// The odd-dimensional polytope `C(n+2d+1, 2d+1)` classifying green classes.
pub fn odd_polytope(d: usize, n: usize) -> Result<PolytopeSpec> {
    let even = Framework::ClusterTilting.polytope(d, n)?;
    PolytopeSpec::new(even.m(), even.delta() + 1)
}

/// The triangulation of `C(n+2d+1, 2d+1)` formed by the flip supports.
pub fn odd_triangulation(g: &GreenSequence) -> Result<Triangulation> {
    let spec = odd_polytope(g.d, g.n)?;
    Triangulation::new(spec, g.flips.clone()).map_err(|e| match e {
        Error::Contract(msg) | Error::Integrity(msg) => {
            integrity!("flip supports do not triangulate {spec}: {msg}")
        }
        other => other,
    })
}

fn polygon_supports_fit(flips: &[&VertexTuple], d: usize) -> bool {
    let mut hull: Vec<_> = flips
        .iter()
        .flat_map(|f| f.entries().iter().copied())
        .collect();
    hull.sort_unstable();
    hull.dedup();
    hull.len() == 2 * d + 3
}

/// True iff `g2` arises from `g` by replacing `d+2` consecutive mutations
/// with `d+1` mutations between the same states, the two sides meeting only
/// at their ends and all their flips lying in one `(2d+3)`-set of vertices.
pub fn is_increasing_polygonal_deformation(g: &GreenSequence, g2: &GreenSequence) -> Result<bool> {
    if (g.d, g.n) != (g2.d, g2.n) {
        return Err(contract!("sequences have different parameters"));
    }
    let d = g.d;
    if g.len() != g2.len() + 1 || g.len() < d + 2 {
        return Ok(false);
    }
    let (s, s2) = (&g.states, &g2.states);
    let prefix = s.iter().zip(s2).take_while(|(a, b)| a == b).count();
    let suffix = s
        .iter()
        .rev()
        .zip(s2.iter().rev())
        .take_while(|(a, b)| a == b)
        .count();
    for p in 0..=g.len() - (d + 2) {
        let end = p + d + 2;
        if p + 1 > prefix || s.len() - end > suffix {
            continue;
        }
        let long = &s[p + 1..end];
        let short = &s2[p + 1..end - 1];
        if long.iter().any(|x| short.contains(x)) {
            continue;
        }
        let flips: Vec<_> = g.flips[p..end]
            .iter()
            .chain(&g2.flips[p..end - 1])
            .collect();
        if polygon_supports_fit(&flips, d) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// One Σ-class of green sequences.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreenClass {
    pub sigma: Vec<VertexTuple>,
    /// Indices into the sequence list of the owning [`GreenSystem`].
    pub representatives: Vec<usize>,
    pub odd_triangulation: Triangulation,
}

/// `Σ(C) ⊇ Σ(C′)`.
pub fn green_leq_2(c: &GreenClass, c2: &GreenClass) -> Result<bool> {
    if c.odd_triangulation.spec() != c2.odd_triangulation.spec() {
        return Err(contract!("classes have different parameters"));
    }
    Ok(c2.sigma.iter().all(|a| c.sigma.binary_search(a).is_ok()))
}

/// Number of bottom-to-top paths in the cover graph of `poset`.
pub fn count_maximal_chains(poset: &TriangulationPoset) -> u128 {
    let n = poset.len();
    let mut succ = vec![Vec::new(); n];
    for &(a, b) in poset.covers1() {
        succ[a].push(b);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| poset.hst1().up_set(i).count_ones(..));
    let mut ways = vec![0u128; n];
    for &i in &order {
        ways[i] = if i == poset.top() {
            1
        } else {
            succ[i]
                .iter()
                .map(|&j| ways[j])
                .fold(0u128, u128::saturating_add)
        };
    }
    ways[poset.bottom()]
}

/// Every green sequence of `A_n^d` with its classes and both class orders.
#[derive(Clone, Debug)]
pub struct GreenSystem {
    d: usize,
    n: usize,
    poset: TriangulationPoset,
    states: Vec<TiltingState>,
    masks: Vec<FixedBitSet>,
    universe: Vec<VertexTuple>,
    paths: Vec<Vec<u32>>,
    path_class: Vec<usize>,
    classes: Vec<GreenClass>,
    odd: TriangulationPoset,
    class_to_odd: Vec<usize>,
    deformations: Vec<(usize, usize)>,
    leq1: Relation,
    leq2: Relation,
}

fn enumerate_paths(poset: &TriangulationPoset, limits: Limits) -> Result<Vec<Vec<u32>>> {
    let chains = count_maximal_chains(poset);
    if chains > limits.max_chains as u128 {
        return Err(Error::Resource {
            what: "maximal chains",
            limit: limits.max_chains as u64,
        });
    }
    let mut succ = vec![Vec::new(); poset.len()];
    for &(a, b) in poset.covers1() {
        succ[a].push(b as u32);
    }
    let mut paths = Vec::with_capacity(chains as usize);
    let mut path = vec![poset.bottom() as u32];
    let mut cursor = vec![0usize];
    while let Some(&last) = path.last() {
        let depth = path.len() - 1;
        if last as usize == poset.top() {
            paths.push(path.clone());
            path.pop();
            cursor.pop();
            continue;
        }
        let k = cursor[depth];
        if let Some(&next) = succ[last as usize].get(k) {
            cursor[depth] += 1;
            path.push(next);
            cursor.push(0);
        } else {
            path.pop();
            cursor.pop();
        }
    }
    let support = |a: u32, b: u32| &poset.cover_flip(a as usize, b as usize).unwrap().support;
    paths.sort_by(|p, q| {
        p.windows(2)
            .map(|w| support(w[0], w[1]))
            .cmp(q.windows(2).map(|w| support(w[0], w[1])))
    });
    Ok(paths)
}

impl GreenSystem {
    pub fn build(d: usize, n: usize, limits: Limits) -> Result<Self> {
        let spec = Framework::ClusterTilting.polytope(d, n)?;
        let poset = TriangulationPoset::build(spec, limits)?;
        let states = poset
            .elements()
            .iter()
            .map(cluster_state)
            .collect::<Result<Vec<_>>>()?;
        let universe = universe(Framework::ClusterTilting, d, n);
        let masks: Vec<FixedBitSet> = states
            .iter()
            .map(|s| {
                let mut mask = FixedBitSet::with_capacity(universe.len());
                for a in s.tuples() {
                    mask.insert(universe.binary_search(a).expect("state inside universe"));
                }
                mask
            })
            .collect();
        let paths = enumerate_paths(&poset, limits)?;

        let sigma_of = |path: &mut dyn Iterator<Item = u32>| {
            let mut acc = FixedBitSet::with_capacity(universe.len());
            for i in path {
                acc.union_with(&masks[i as usize]);
            }
            acc
        };

        // Partition by Σ, in order of first appearance.
        let mut by_sigma: HashMap<FixedBitSet, usize> = HashMap::new();
        let mut raw_classes: Vec<(FixedBitSet, Vec<usize>)> = Vec::new();
        let mut path_class = Vec::with_capacity(paths.len());
        for (k, path) in paths.iter().enumerate() {
            let sigma = sigma_of(&mut path.iter().copied());
            let c = *by_sigma.entry(sigma.clone()).or_insert_with(|| {
                raw_classes.push((sigma, Vec::new()));
                raw_classes.len() - 1
            });
            raw_classes[c].1.push(k);
            path_class.push(c);
        }

        let odd = TriangulationPoset::build(odd_polytope(d, n)?, limits)?;
        let mut classes = Vec::with_capacity(raw_classes.len());
        let mut odd_index = Vec::with_capacity(raw_classes.len());
        for (sigma, reps) in &raw_classes {
            let g = materialize(d, n, &poset, &states, &paths[reps[0]]);
            let t = odd_triangulation(&g)?;
            let i = odd
                .index_of(&t)
                .ok_or_else(|| integrity!("odd triangulation {t} was not enumerated"))?;
            odd_index.push(i);
            classes.push(GreenClass {
                sigma: sigma.ones().map(|b| universe[b].clone()).collect(),
                representatives: reps.clone(),
                odd_triangulation: t,
            });
        }

        // Canonical class order follows the odd triangulations.
        let mut order: Vec<usize> = (0..classes.len()).collect();
        order.sort_by_key(|&c| (odd_index[c], classes[c].sigma.clone()));
        let mut renumber = vec![0usize; classes.len()];
        for (new, &old) in order.iter().enumerate() {
            renumber[old] = new;
        }
        let classes: Vec<GreenClass> = order.iter().map(|&c| classes[c].clone()).collect();
        let class_to_odd: Vec<usize> = order.iter().map(|&c| odd_index[c]).collect();
        let path_class: Vec<usize> = path_class.into_iter().map(|c| renumber[c]).collect();
        let class_of_sigma = |sigma: &FixedBitSet| by_sigma.get(sigma).map(|&c| renumber[c]);

        let deformations =
            deformation_pairs(d, &poset, &paths, &path_class, &class_of_sigma, &sigma_of)?;
        let leq1 = Relation::closure_of(classes.len(), &deformations)?;
        let leq2 = Relation::from_fn(classes.len(), |i, j| {
            classes[j]
                .sigma
                .iter()
                .all(|a| classes[i].sigma.binary_search(a).is_ok())
        });

        Ok(GreenSystem {
            d,
            n,
            poset,
            states,
            masks,
            universe,
            paths,
            path_class,
            classes,
            odd,
            class_to_odd,
            deformations,
            leq1,
            leq2,
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The first order on triangulations of `C(n+2d+1, 2d)`.
    pub fn poset(&self) -> &TriangulationPoset {
        &self.poset
    }

    /// Both orders on triangulations of `C(n+2d+1, 2d+1)`.
    pub fn odd_poset(&self) -> &TriangulationPoset {
        &self.odd
    }

    pub fn state(&self, element: usize) -> &TiltingState {
        &self.states[element]
    }

    pub fn sequence_count(&self) -> usize {
        self.paths.len()
    }

    /// Poset elements visited by sequence `k`.
    pub fn path(&self, k: usize) -> &[u32] {
        &self.paths[k]
    }

    pub fn sequence(&self, k: usize) -> GreenSequence {
        materialize(self.d, self.n, &self.poset, &self.states, &self.paths[k])
    }

    pub fn sequences(&self) -> impl Iterator<Item = GreenSequence> + '_ {
        (0..self.paths.len()).map(|k| self.sequence(k))
    }

    pub fn class_of_sequence(&self, k: usize) -> usize {
        self.path_class[k]
    }

    pub fn classes(&self) -> &[GreenClass] {
        &self.classes
    }

    /// Index in [`Self::odd_poset`] of the triangulation of class `c`.
    pub fn odd_index(&self, c: usize) -> usize {
        self.class_to_odd[c]
    }

    /// Class pairs `(c, c′)` where some representative of `c′` is an
    /// increasing elementary polygonal deformation of one of `c`.
    pub fn deformations(&self) -> &[(usize, usize)] {
        &self.deformations
    }

    pub fn leq1(&self) -> &Relation {
        &self.leq1
    }

    pub fn leq2(&self) -> &Relation {
        &self.leq2
    }

    pub fn green_leq_1(&self, c: usize, c2: usize) -> bool {
        self.leq1.leq(c, c2)
    }

    pub fn green_leq_2(&self, c: usize, c2: usize) -> bool {
        self.leq2.leq(c, c2)
    }

    /// Σ of a sequence given as a bitset over the cluster universe.
    pub fn sigma_mask(&self, k: usize) -> FixedBitSet {
        let mut acc = FixedBitSet::with_capacity(self.universe.len());
        for &i in &self.paths[k] {
            acc.union_with(&self.masks[i as usize]);
        }
        acc
    }
}

fn materialize(
    d: usize,
    n: usize,
    poset: &TriangulationPoset,
    states: &[TiltingState],
    path: &[u32],
) -> GreenSequence {
    let flips = path
        .windows(2)
        .map(|w| {
            poset
                .cover_flip(w[0] as usize, w[1] as usize)
                .expect("consecutive path elements form a cover")
                .support
                .clone()
        })
        .collect();
    GreenSequence {
        d,
        n,
        states: path.iter().map(|&i| states[i as usize].clone()).collect(),
        flips,
    }
}

fn deformation_pairs(
    d: usize,
    poset: &TriangulationPoset,
    paths: &[Vec<u32>],
    path_class: &[usize],
    class_of_sigma: &dyn Fn(&FixedBitSet) -> Option<usize>,
    sigma_of: &dyn Fn(&mut dyn Iterator<Item = u32>) -> FixedBitSet,
) -> Result<Vec<(usize, usize)>> {
    let mut succ = vec![Vec::new(); poset.len()];
    for &(a, b) in poset.covers1() {
        succ[a].push(b as u32);
    }
    let support = |a: u32, b: u32| &poset.cover_flip(a as usize, b as usize).unwrap().support;

    // All cover paths with `len` steps from `from` to `to`.
    fn walks(succ: &[Vec<u32>], from: u32, to: u32, len: usize, out: &mut Vec<Vec<u32>>) {
        fn go(succ: &[Vec<u32>], to: u32, len: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            let last = *cur.last().unwrap();
            if cur.len() == len + 1 {
                if last == to {
                    out.push(cur.clone());
                }
                return;
            }
            for &next in &succ[last as usize] {
                cur.push(next);
                go(succ, to, len, cur, out);
                cur.pop();
            }
        }
        go(succ, to, len, &mut vec![from], out);
    }

    let mut pairs = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut alternatives = Vec::new();
    for (k, path) in paths.iter().enumerate() {
        if path.len() < d + 3 {
            continue;
        }
        for p in 0..=path.len() - (d + 3) {
            let end = p + d + 2;
            alternatives.clear();
            walks(&succ, path[p], path[end], d + 1, &mut alternatives);
            let long = &path[p..=end];
            for alt in &alternatives {
                if alt[1..d + 1].iter().any(|x| long[1..d + 2].contains(x)) {
                    continue;
                }
                let flips: Vec<&VertexTuple> = long
                    .windows(2)
                    .chain(alt.windows(2))
                    .map(|w| support(w[0], w[1]))
                    .collect();
                if !polygon_supports_fit(&flips, d) {
                    continue;
                }
                let mut walk = path[..p]
                    .iter()
                    .chain(alt.iter())
                    .chain(path[end + 1..].iter())
                    .copied();
                let sigma = sigma_of(&mut walk);
                let target = class_of_sigma(&sigma)
                    .ok_or_else(|| integrity!("deformed sequence has an unseen Σ"))?;
                let pair = (path_class[k], target);
                if seen.insert(pair) {
                    pairs.push(pair);
                }
            }
        }
    }
    pairs.sort_unstable();
    Ok(pairs)
}

/// All green sequences of `A_n^d`, ordered lexicographically by flip supports.
pub fn enumerate_green_sequences(d: usize, n: usize, limits: Limits) -> Result<Vec<GreenSequence>> {
    let spec = Framework::ClusterTilting.polytope(d, n)?;
    let poset = TriangulationPoset::build(spec, limits)?;
    let states = poset
        .elements()
        .iter()
        .map(cluster_state)
        .collect::<Result<Vec<_>>>()?;
    let paths = enumerate_paths(&poset, limits)?;
    Ok(paths
        .iter()
        .map(|p| materialize(d, n, &poset, &states, p))
        .collect())
}

/// Σ-classes of green sequences, ordered by their odd triangulations.
pub fn green_classes(d: usize, n: usize, limits: Limits) -> Result<Vec<GreenClass>> {
    Ok(GreenSystem::build(d, n, limits)?.classes)
}
