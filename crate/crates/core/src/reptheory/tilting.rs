//! Tilting modules (`Separated(n+2d, d)`) and cluster-tilting objects
//! (`CyclicSeparated(n+2d+1, d)`) as compatible tuple collections.
//!
//! A summand `M_A` is identified with its tuple `A`, and
//! `Ext^d(M_B, M_A) ≠ 0` exactly when `A ≀ B`.

use serde::{Deserialize, Serialize};

use crate::combinat::{
    binomial, compatible, enumerate_index_set, interleaves, IndexSetKind, VertexTuple, MAX_LABEL,
};
use crate::error::{contract, Result};
use crate::polytope::PolytopeSpec;
use crate::triangulation::{
    internal_faces, triangulation_from_tuples, upper_set_tuples, Triangulation, TupleFamily,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Framework {
    Tilting,
    ClusterTilting,
}

impl Framework {
    fn kind(self) -> IndexSetKind {
        match self {
            Framework::Tilting => IndexSetKind::Separated,
            Framework::ClusterTilting => IndexSetKind::CyclicSeparated,
        }
    }

    /// Vertex count of the ambient polytope, `n+2d` or `n+2d+1`.
    pub fn vertex_count(self, d: usize, n: usize) -> usize {
        match self {
            Framework::Tilting => n + 2 * d,
            Framework::ClusterTilting => n + 2 * d + 1,
        }
    }

    /// The even-dimensional polytope whose triangulations index the states.
    pub fn polytope(self, d: usize, n: usize) -> Result<PolytopeSpec> {
        if d == 0 || n == 0 {
            return Err(contract!(
                "algebra parameters must be positive, got d={d}, n={n}"
            ));
        }
        PolytopeSpec::new(self.vertex_count(d, n), 2 * d)
    }

    fn parameters(self, spec: PolytopeSpec) -> Result<(usize, usize)> {
        if !spec.delta().is_multiple_of(2) {
            return Err(contract!("{spec} is odd-dimensional"));
        }
        let d = spec.delta() / 2;
        let base = self.vertex_count(d, 0);
        if spec.m() <= base {
            return Err(contract!("{spec} is too small for {self:?} states"));
        }
        Ok((d, spec.m() - base))
    }
}

/// All tuples a state of `(framework, d, n)` may contain.
pub fn universe(framework: Framework, d: usize, n: usize) -> Vec<VertexTuple> {
    let m = framework.vertex_count(d, n);
    if m > usize::from(MAX_LABEL) {
        return Vec::new();
    }
    enumerate_index_set(m, d, framework.kind())
}

/// Number of summands of every state, `binom(n+d-1, d)`.
pub fn state_size(d: usize, n: usize) -> u64 {
    binomial((n + d).saturating_sub(1) as u64, d as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TiltingState {
    framework: Framework,
    d: usize,
    n: usize,
    tuples: Vec<VertexTuple>,
}

impl TiltingState {
    pub fn new(
        framework: Framework,
        d: usize,
        n: usize,
        mut tuples: Vec<VertexTuple>,
    ) -> Result<Self> {
        tuples.sort();
        if !is_tilting_state(&tuples, framework, d, n) {
            return Err(contract!(
                "{tuples:?} is not a {framework:?} state for d={d}, n={n}"
            ));
        }
        Ok(TiltingState {
            framework,
            d,
            n,
            tuples,
        })
    }

    pub(crate) fn from_sorted(
        framework: Framework,
        d: usize,
        n: usize,
        tuples: Vec<VertexTuple>,
    ) -> Self {
        debug_assert!(is_tilting_state(&tuples, framework, d, n));
        TiltingState {
            framework,
            d,
            n,
            tuples,
        }
    }

    pub fn framework(&self) -> Framework {
        self.framework
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Summand tuples in lexicographic order.
    pub fn tuples(&self) -> &[VertexTuple] {
        &self.tuples
    }

    pub fn contains(&self, a: &VertexTuple) -> bool {
        self.tuples.binary_search(a).is_ok()
    }

    /// The triangulation this state labels.
    pub fn triangulation(&self) -> Result<Triangulation> {
        let spec = self.framework.polytope(self.d, self.n)?;
        let family = match self.framework {
            Framework::Tilting => TupleFamily::UpperSet,
            Framework::ClusterTilting => TupleFamily::Internal,
        };
        triangulation_from_tuples(&self.tuples, spec, family)
    }
}

/// Tilting state of a triangulation of `C(n+2d, 2d)`: the tuples `e(T)`.
pub fn tilting_state(t: &Triangulation) -> Result<TiltingState> {
    let (d, n) = Framework::Tilting.parameters(t.spec())?;
    Ok(TiltingState::from_sorted(
        Framework::Tilting,
        d,
        n,
        upper_set_tuples(t)?,
    ))
}

/// Cluster-tilting state of a triangulation of `C(n+2d+1, 2d)`: its internal
/// `d`-simplices.
pub fn cluster_state(t: &Triangulation) -> Result<TiltingState> {
    let (d, n) = Framework::ClusterTilting.parameters(t.spec())?;
    Ok(TiltingState::from_sorted(
        Framework::ClusterTilting,
        d,
        n,
        internal_faces(t, d)?,
    ))
}

/// `Ext^d(M_B, M_A) ≠ 0`.
pub fn ext_nonzero(b: &VertexTuple, a: &VertexTuple) -> Result<bool> {
    a.intertwines(b)
}

pub fn is_tilting_state(tuples: &[VertexTuple], framework: Framework, d: usize, n: usize) -> bool {
    if d == 0 || n == 0 {
        return false;
    }
    let m = framework.vertex_count(d, n);
    if m > usize::from(MAX_LABEL) {
        return false;
    }
    let in_universe = |a: &VertexTuple| {
        a.len() == d + 1
            && a.lies_in(m)
            && a.entries().windows(2).all(|w| w[1] >= w[0] + 2)
            && (framework == Framework::Tilting
                || usize::from(a.entries()[d]) + 2 <= usize::from(a.entries()[0]) + m)
    };
    let mut sorted = tuples.to_vec();
    sorted.sort();
    sorted.dedup();
    sorted.len() == tuples.len()
        && tuples.len() as u64 == state_size(d, n)
        && tuples.iter().all(in_universe)
        && compatible(tuples)
}

/// States reached by exchanging one summand `A` for some `B` with `A ≀ B`.
pub fn left_mutations(s: &TiltingState) -> Vec<TiltingState> {
    let universe = universe(s.framework, s.d, s.n);
    let mut out = Vec::new();
    for (pos, a) in s.tuples.iter().enumerate() {
        for b in &universe {
            if !interleaves(a.entries(), b.entries()) || s.contains(b) {
                continue;
            }
            let fits = s.tuples.iter().enumerate().all(|(k, c)| {
                k == pos
                    || (!interleaves(c.entries(), b.entries())
                        && !interleaves(b.entries(), c.entries()))
            });
            if fits {
                let mut tuples = s.tuples.clone();
                tuples[pos] = b.clone();
                tuples.sort();
                out.push(TiltingState::from_sorted(s.framework, s.d, s.n, tuples));
            }
        }
    }
    out.sort();
    out
}

/// The summand exchanged by a left mutation, `(A, B)` with `A ≀ B`.
pub fn exchanged_pair(
    from: &TiltingState,
    to: &TiltingState,
) -> Option<(VertexTuple, VertexTuple)> {
    if from.framework != to.framework || from.d != to.d || from.n != to.n {
        return None;
    }
    let gone: Vec<_> = from.tuples.iter().filter(|a| !to.contains(a)).collect();
    let new: Vec<_> = to.tuples.iter().filter(|b| !from.contains(b)).collect();
    match (gone.as_slice(), new.as_slice()) {
        ([a], [b]) if interleaves(a.entries(), b.entries()) => Some(((*a).clone(), (*b).clone())),
        _ => None,
    }
}

/// `⊥T`: tuples `A` of `Separated(n+2d, d)` with no summand `B ≀ A`.
pub fn perp(s: &TiltingState) -> Result<Vec<VertexTuple>> {
    if s.framework != Framework::Tilting {
        return Err(contract!(
            "perpendicular categories are defined for tilting states"
        ));
    }
    Ok(universe(s.framework, s.d, s.n)
        .into_iter()
        .filter(|a| {
            !s.tuples
                .iter()
                .any(|b| interleaves(b.entries(), a.entries()))
        })
        .collect())
}

/// `⊥S ⊆ ⊥S′`.
pub fn hst2_by_perp(s: &TiltingState, s2: &TiltingState) -> Result<bool> {
    if (s.framework, s.d, s.n) != (s2.framework, s2.d, s2.n) {
        return Err(contract!("states have different parameters"));
    }
    let (p, q) = (perp(s)?, perp(s2)?);
    Ok(p.iter().all(|a| q.binary_search(a).is_ok()))
}
