//! Enumeration of all triangulations of `C(m, δ)` and the two higher
//! Stasheff–Tamari orders on them.
//!
//! The first order is generated by increasing bistellar flips. The second is
//! computed combinatorially: in even dimension `2d` by inclusion of submersion
//! sets of internal `d`-simplices (a simplex `A` is submerged iff no
//! `B ∈ e(T)` intertwines it), in odd dimension `2d+1` by reverse inclusion of
//! supermersion sets, which are the internal `d`-faces of the triangulation.

use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::combinat::{interleaves, VertexTuple};
use crate::error::{contract, integrity, Error, Result};
use crate::polytope::{BoundaryFaces, PolytopeSpec};
use crate::triangulation::{
    apply_flip, boundary_triangulation, decreasing_flips, increasing_flips, internal_faces,
    upper_set_tuples, FlipEvent, Side, Triangulation,
};

/// Desk-scale guards.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_triangulations: usize,
    pub max_chains: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_triangulations: 1_000_000,
            max_chains: 10_000_000,
        }
    }
}

/// All triangulations of `spec`, in canonical (lexicographic) order.
///
/// Breadth-first closure from the lower triangulation under increasing and
/// decreasing flips.
pub fn enumerate_triangulations(spec: PolytopeSpec, limits: Limits) -> Result<Vec<Triangulation>> {
    let start = boundary_triangulation(spec, Side::Lower);
    let mut seen: HashMap<Vec<VertexTuple>, ()> = HashMap::new();
    let mut found = vec![start.clone()];
    seen.insert(start.simplices().to_vec(), ());
    let mut queue = VecDeque::from([start]);
    while let Some(t) = queue.pop_front() {
        for flip in increasing_flips(&t)
            .iter()
            .chain(decreasing_flips(&t).iter())
        {
            let next = apply_flip(&t, flip)?;
            if seen.contains_key(next.simplices()) {
                continue;
            }
            if found.len() >= limits.max_triangulations {
                return Err(Error::Resource {
                    what: "triangulations",
                    limit: limits.max_triangulations as u64,
                });
            }
            seen.insert(next.simplices().to_vec(), ());
            found.push(next.clone());
            queue.push_back(next);
        }
    }
    found.sort();
    Ok(found)
}

/// A binary relation on `0..n` stored row-wise: `rows[i]` holds every `j`
/// with `i ≤ j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    rows: Vec<FixedBitSet>,
}

/// Which bound a pair of elements lacks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MissingBound {
    Meet,
    Join,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeWitness {
    pub a: usize,
    pub b: usize,
    pub missing: MissingBound,
}

impl Relation {
    pub fn from_fn(n: usize, mut leq: impl FnMut(usize, usize) -> bool) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut row = FixedBitSet::with_capacity(n);
                for j in 0..n {
                    if leq(i, j) {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        Relation { rows }
    }

    /// Reflexive-transitive closure of a directed acyclic graph.
    pub fn closure_of(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut succ = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(contract!("edge ({a},{b}) out of range for {n} elements"));
            }
            succ[a].push(b);
            indegree[b] += 1;
        }
        let mut order = Vec::with_capacity(n);
        let mut ready: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        while let Some(i) = ready.pop() {
            order.push(i);
            for &j in &succ[i] {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    ready.push(j);
                }
            }
        }
        if order.len() != n {
            return Err(integrity!("cover graph has a directed cycle"));
        }
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for &i in order.iter().rev() {
            let mut row = FixedBitSet::with_capacity(n);
            row.insert(i);
            for &j in &succ[i] {
                row.union_with(&rows[j]);
            }
            rows[i] = row;
        }
        Ok(Relation { rows })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    /// Every `j` with `i ≤ j`.
    pub fn up_set(&self, i: usize) -> &FixedBitSet {
        &self.rows[i]
    }

    /// All related pairs `(i, j)`, row-major.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.ones().map(move |j| (i, j)))
            .collect()
    }

    fn transpose(&self) -> Relation {
        let n = self.len();
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.ones() {
                rows[j].insert(i);
            }
        }
        Relation { rows }
    }

    /// First pair on which the relation is not a partial order, if any.
    pub fn partial_order_violation(&self) -> Option<(usize, usize)> {
        let n = self.len();
        for i in 0..n {
            if !self.leq(i, i) {
                return Some((i, i));
            }
            for j in self.rows[i].ones() {
                if j != i && self.leq(j, i) {
                    return Some((i, j));
                }
                if !self.rows[j].is_subset(&self.rows[i]) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// A linear extension: elements sorted by the size of their down-set.
    fn linear_extension(&self) -> Vec<usize> {
        let mut below = vec![0usize; self.len()];
        for row in &self.rows {
            for j in row.ones() {
                below[j] += 1;
            }
        }
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| (below[i], i));
        order
    }

    /// Transitive reduction. Fails when the relation is not antisymmetric.
    pub fn hasse(&self) -> Result<Vec<(usize, usize)>> {
        for i in 0..self.len() {
            for j in self.rows[i].ones() {
                if j != i && self.leq(j, i) {
                    return Err(integrity!("relation is not antisymmetric on ({i},{j})"));
                }
            }
        }
        let order = self.linear_extension();
        let mut rank = vec![0usize; self.len()];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r;
        }
        let mut covers = Vec::new();
        for i in 0..self.len() {
            let mut above: Vec<usize> = self.rows[i].ones().filter(|&j| j != i).collect();
            above.sort_by_key(|&j| rank[j]);
            let mut dominated = FixedBitSet::with_capacity(self.len());
            for j in above {
                if !dominated.contains(j) {
                    covers.push((i, j));
                    dominated.union_with(&self.rows[j]);
                }
            }
        }
        covers.sort_unstable();
        Ok(covers)
    }

    /// Checks that every pair has a meet and a join; returns the first pair
    /// lacking one.
    pub fn is_lattice(&self) -> (bool, Option<LatticeWitness>) {
        let down = self.transpose();
        let order = self.linear_extension();
        let mut rank = vec![0usize; self.len()];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r;
        }
        let n = self.len();
        for a in 0..n {
            for b in a + 1..n {
                for (rel, missing, pick_max) in [
                    (self, MissingBound::Join, false),
                    (&down, MissingBound::Meet, true),
                ] {
                    let mut common = rel.rows[a].clone();
                    common.intersect_with(&rel.rows[b]);
                    let candidate = if pick_max {
                        common.ones().max_by_key(|&z| rank[z])
                    } else {
                        common.ones().min_by_key(|&z| rank[z])
                    };
                    let ok = candidate.is_some_and(|z| common.is_subset(&rel.rows[z]));
                    if !ok {
                        return (false, Some(LatticeWitness { a, b, missing }));
                    }
                }
            }
        }
        (true, None)
    }
}

/// Free-function forms of the relation queries.
pub fn hasse(relation: &Relation) -> Result<Vec<(usize, usize)>> {
    relation.hasse()
}

pub fn is_lattice(relation: &Relation) -> (bool, Option<LatticeWitness>) {
    relation.is_lattice()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SubmersionKind {
    /// Even dimension: compared by inclusion.
    Submersion,
    /// Odd dimension: compared by reverse inclusion.
    Supermersion,
}

/// The internal `d`-simplices used to compare a triangulation in the second
/// order, with the direction they are compared in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubmersionSet {
    pub kind: SubmersionKind,
    pub tuples: Vec<VertexTuple>,
}

/// Internal `d`-simplices of an even-dimensional spec; the universe that
/// submersion sets live in.
pub(crate) fn internal_simplices(spec: PolytopeSpec, size: usize) -> Vec<VertexTuple> {
    let boundary = BoundaryFaces::new(spec, size);
    crate::combinat::subsets(spec.m(), size)
        .filter(|a| boundary.is_internal(a))
        .collect()
}

fn submersion_with(t: &Triangulation, universe: &[VertexTuple]) -> Result<SubmersionSet> {
    let delta = t.spec().delta();
    let d = delta / 2;
    if delta.is_multiple_of(2) {
        let e = upper_set_tuples(t)?;
        let tuples = universe
            .iter()
            .filter(|a| !e.iter().any(|b| interleaves(b.entries(), a.entries())))
            .cloned()
            .collect();
        Ok(SubmersionSet {
            kind: SubmersionKind::Submersion,
            tuples,
        })
    } else {
        Ok(SubmersionSet {
            kind: SubmersionKind::Supermersion,
            tuples: internal_faces(t, d)?,
        })
    }
}

pub fn submersion_set(t: &Triangulation) -> SubmersionSet {
    let spec = t.spec();
    let universe = if spec.delta().is_multiple_of(2) {
        internal_simplices(spec, spec.delta() / 2 + 1)
    } else {
        Vec::new()
    };
    submersion_with(t, &universe).expect("dimension parity checked")
}

fn sorted_subset(a: &[VertexTuple], b: &[VertexTuple]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

fn hst2_from_sets(a: &SubmersionSet, b: &SubmersionSet) -> bool {
    match a.kind {
        SubmersionKind::Submersion => sorted_subset(&a.tuples, &b.tuples),
        SubmersionKind::Supermersion => sorted_subset(&b.tuples, &a.tuples),
    }
}

/// `T ≤₂ U`.
pub fn hst2_leq(t: &Triangulation, u: &Triangulation) -> Result<bool> {
    if t.spec() != u.spec() {
        return Err(contract!(
            "cannot compare triangulations of {} and {}",
            t.spec(),
            u.spec()
        ));
    }
    Ok(hst2_from_sets(&submersion_set(t), &submersion_set(u)))
}

/// Result of comparing the two orders on every ordered pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coincidence {
    pub equal: bool,
    /// First pair `(i, j)` on which the orders disagree.
    pub counterexample: Option<(usize, usize)>,
    /// `≤₁ ⊆ ≤₂`; false means a bug, not a counterexample to the conjecture.
    pub first_implies_second: bool,
}

/// All triangulations of one spec with both orders.
#[derive(Clone, Debug)]
pub struct TriangulationPoset {
    spec: PolytopeSpec,
    elements: Vec<Triangulation>,
    index: HashMap<Vec<VertexTuple>, usize>,
    covers1: Vec<(usize, usize)>,
    cover_flips: HashMap<(usize, usize), FlipEvent>,
    submersion: Vec<SubmersionSet>,
    hst1: Relation,
    hst2: Relation,
    bottom: usize,
    top: usize,
}

impl TriangulationPoset {
    pub fn build(spec: PolytopeSpec, limits: Limits) -> Result<Self> {
        let elements = enumerate_triangulations(spec, limits)?;
        let index: HashMap<_, _> = elements
            .iter()
            .enumerate()
            .map(|(i, t)| (t.simplices().to_vec(), i))
            .collect();

        let mut covers1 = Vec::new();
        let mut cover_flips = HashMap::new();
        for (i, t) in elements.iter().enumerate() {
            for flip in increasing_flips(t) {
                let next = apply_flip(t, &flip)?;
                let j = *index
                    .get(next.simplices())
                    .ok_or_else(|| integrity!("flip of T{i} leaves the enumeration"))?;
                covers1.push((i, j));
                cover_flips.insert((i, j), flip);
            }
        }
        covers1.sort_unstable();
        let hst1 = Relation::closure_of(elements.len(), &covers1)?;

        let universe = if spec.delta().is_multiple_of(2) {
            internal_simplices(spec, spec.delta() / 2 + 1)
        } else {
            Vec::new()
        };
        let submersion = elements
            .iter()
            .map(|t| submersion_with(t, &universe))
            .collect::<Result<Vec<_>>>()?;
        let hst2 = Relation::from_fn(elements.len(), |i, j| {
            hst2_from_sets(&submersion[i], &submersion[j])
        });

        let find = |side| {
            let t = boundary_triangulation(spec, side);
            index
                .get(t.simplices())
                .copied()
                .ok_or_else(|| integrity!("{side:?} triangulation of {spec} not enumerated"))
        };
        let bottom = find(Side::Lower)?;
        let top = find(Side::Upper)?;

        Ok(TriangulationPoset {
            spec,
            elements,
            index,
            covers1,
            cover_flips,
            submersion,
            hst1,
            hst2,
            bottom,
            top,
        })
    }

    pub fn spec(&self) -> PolytopeSpec {
        self.spec
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Triangulation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Triangulation {
        &self.elements[i]
    }

    pub fn index_of(&self, t: &Triangulation) -> Option<usize> {
        self.index_of_simplices(t.simplices())
    }

    pub fn index_of_simplices(&self, simplices: &[VertexTuple]) -> Option<usize> {
        self.index.get(simplices).copied()
    }

    /// Increasing-flip cover pairs `(i, j)`, sorted.
    pub fn covers1(&self) -> &[(usize, usize)] {
        &self.covers1
    }

    /// The increasing flip taking element `i` to element `j`, if they form a
    /// cover.
    pub fn cover_flip(&self, i: usize, j: usize) -> Option<&FlipEvent> {
        self.cover_flips.get(&(i, j))
    }

    pub fn submersion(&self, i: usize) -> &SubmersionSet {
        &self.submersion[i]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn hst1(&self) -> &Relation {
        &self.hst1
    }

    pub fn hst2(&self) -> &Relation {
        &self.hst2
    }

    pub fn hst1_leq(&self, i: usize, j: usize) -> bool {
        self.hst1.leq(i, j)
    }

    pub fn hst2_leq(&self, i: usize, j: usize) -> bool {
        self.hst2.leq(i, j)
    }

    pub fn coincidence(&self) -> Coincidence {
        let n = self.len();
        let mut counterexample = None;
        let mut first_implies_second = true;
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (self.hst1.leq(i, j), self.hst2.leq(i, j));
                if a != b && counterexample.is_none() {
                    counterexample = Some((i, j));
                }
                if a && !b {
                    first_implies_second = false;
                }
            }
        }
        Coincidence {
            equal: counterexample.is_none(),
            counterexample,
            first_implies_second,
        }
    }
}

/// Compares the two orders on every ordered pair of triangulations of `spec`.
pub fn orders_coincide(spec: PolytopeSpec, limits: Limits) -> Result<Coincidence> {
    Ok(TriangulationPoset::build(spec, limits)?.coincidence())
}
