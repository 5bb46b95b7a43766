//! Triangulations of `C(m, δ)` as sets of `(δ+1)`-tuples, and bistellar flips.

use std::collections::{BTreeSet, HashSet};

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::combinat::{Label, VertexTuple};
use crate::error::{contract, integrity, Result};
use crate::orders::{self, Limits};
use crate::polytope::{
    enumerate_facets, improperly_intersecting, simplex_volume, BoundaryFaces, PolytopeSpec,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Lower,
    Upper,
}

/// A triangulation: its polytope and its maximal simplices in lexicographic
/// order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawTriangulation", into = "RawTriangulation")]
pub struct Triangulation {
    spec: PolytopeSpec,
    simplices: Vec<VertexTuple>,
}

#[derive(Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTriangulation {
    m: usize,
    delta: usize,
    simplices: Vec<VertexTuple>,
}

impl From<Triangulation> for RawTriangulation {
    fn from(t: Triangulation) -> Self {
        RawTriangulation {
            m: t.spec.m(),
            delta: t.spec.delta(),
            simplices: t.simplices,
        }
    }
}

impl TryFrom<RawTriangulation> for Triangulation {
    type Error = crate::error::Error;

    fn try_from(raw: RawTriangulation) -> Result<Self> {
        Triangulation::new(PolytopeSpec::new(raw.m, raw.delta)?, raw.simplices)
    }
}

impl Triangulation {
    /// Validates `simplices` with [`is_triangulation`].
    pub fn new(spec: PolytopeSpec, mut simplices: Vec<VertexTuple>) -> Result<Self> {
        simplices.sort();
        if simplices.windows(2).any(|w| w[0] == w[1]) {
            return Err(contract!("duplicate simplex in triangulation of {spec}"));
        }
        if !is_triangulation(&simplices, spec) {
            return Err(integrity!("simplices do not triangulate {spec}"));
        }
        Ok(Triangulation { spec, simplices })
    }

    pub(crate) fn from_sorted(spec: PolytopeSpec, simplices: Vec<VertexTuple>) -> Self {
        debug_assert!(simplices.windows(2).all(|w| w[0] < w[1]));
        Triangulation { spec, simplices }
    }

    pub fn spec(&self) -> PolytopeSpec {
        self.spec
    }

    pub fn simplices(&self) -> &[VertexTuple] {
        &self.simplices
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn contains(&self, simplex: &VertexTuple) -> bool {
        self.simplices.binary_search(simplex).is_ok()
    }

    pub fn into_simplices(self) -> Vec<VertexTuple> {
        self.simplices
    }
}

impl std::fmt::Display for Triangulation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.simplices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

/// The lower or upper triangulation: the chosen facets of `C(m, δ+1)`
/// projected down to dimension `δ`.
pub fn boundary_triangulation(spec: PolytopeSpec, side: Side) -> Triangulation {
    let simplices = match spec.lifted() {
        None => vec![VertexTuple::from_sorted((1..=spec.m() as Label).collect())],
        Some(up) => {
            let facets = enumerate_facets(up);
            match side {
                Side::Lower => facets.lower,
                Side::Upper => facets.upper,
            }
        }
    };
    Triangulation::from_sorted(spec, simplices)
}

/// Checks that the simplices pairwise intersect properly and that their
/// volumes add up to the volume of the polytope.
pub fn is_triangulation(simplices: &[VertexTuple], spec: PolytopeSpec) -> bool {
    let size = spec.delta() + 1;
    if simplices.is_empty()
        || simplices
            .iter()
            .any(|s| s.len() != size || !s.lies_in(spec.m()))
    {
        return false;
    }
    let distinct: HashSet<_> = simplices.iter().collect();
    if distinct.len() != simplices.len() {
        return false;
    }
    let total: BigRational = boundary_triangulation(spec, Side::Lower)
        .simplices
        .iter()
        .map(simplex_volume)
        .fold(BigRational::zero(), |acc, v| acc + v);
    let covered = simplices
        .iter()
        .map(simplex_volume)
        .fold(BigRational::zero(), |acc, v| acc + v);
    if covered != total {
        return false;
    }
    simplices.iter().enumerate().all(|(i, s)| {
        simplices[i + 1..]
            .iter()
            .all(|t| !improperly_intersecting(s, t, spec).unwrap_or(true))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FlipDirection {
    Increasing,
    Decreasing,
}

/// A bistellar flip inside `C(H, δ)` for a `(δ+2)`-tuple `H`.
///
/// An increasing flip removes the lower triangulation of `C(H, δ)` and adds
/// the upper one; a decreasing flip does the reverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlipEvent {
    pub support: VertexTuple,
    pub removed: Vec<VertexTuple>,
    pub added: Vec<VertexTuple>,
    pub direction: FlipDirection,
}

/// Positions (into a sorted `(δ+2)`-tuple) of the lower and upper facets of
/// the simplex `C(δ+2, δ+1)`, i.e. of the two triangulations of `C(δ+2, δ)`.
#[derive(Clone, Debug)]
pub(crate) struct CircuitSplit {
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
}

impl CircuitSplit {
    pub(crate) fn new(delta: usize) -> Self {
        let simplex = PolytopeSpec::new(delta + 2, delta + 1).expect("simplex spec is valid");
        let positions = |fs: Vec<VertexTuple>| -> Vec<Vec<usize>> {
            fs.iter()
                .map(|f| f.entries().iter().map(|&l| usize::from(l) - 1).collect())
                .collect()
        };
        let facets = enumerate_facets(simplex);
        CircuitSplit {
            lower: positions(facets.lower),
            upper: positions(facets.upper),
        }
    }

    fn side(&self, direction: FlipDirection) -> (&[Vec<usize>], &[Vec<usize>]) {
        match direction {
            FlipDirection::Increasing => (&self.lower, &self.upper),
            FlipDirection::Decreasing => (&self.upper, &self.lower),
        }
    }

    fn event(&self, support: VertexTuple, direction: FlipDirection) -> FlipEvent {
        let (from, to) = self.side(direction);
        let mut removed: Vec<_> = from.iter().map(|p| support.pick(p)).collect();
        let mut added: Vec<_> = to.iter().map(|p| support.pick(p)).collect();
        removed.sort();
        added.sort();
        FlipEvent {
            support,
            removed,
            added,
            direction,
        }
    }
}

impl FlipEvent {
    /// The flip on `support` in the given direction, for triangulations of
    /// dimension `support.len() − 2`.
    pub fn new(support: VertexTuple, direction: FlipDirection) -> Result<Self> {
        if support.len() < 3 {
            return Err(contract!(
                "flip support {support} needs at least 3 vertices"
            ));
        }
        Ok(CircuitSplit::new(support.len() - 2).event(support, direction))
    }

    pub fn reversed(&self) -> FlipEvent {
        FlipEvent {
            support: self.support.clone(),
            removed: self.added.clone(),
            added: self.removed.clone(),
            direction: match self.direction {
                FlipDirection::Increasing => FlipDirection::Decreasing,
                FlipDirection::Decreasing => FlipDirection::Increasing,
            },
        }
    }
}

fn flips(t: &Triangulation, direction: FlipDirection) -> Vec<FlipEvent> {
    let spec = t.spec;
    if spec.is_simplex() {
        return Vec::new();
    }
    let split = CircuitSplit::new(spec.delta());
    let (from, _) = split.side(direction);
    // Every candidate support contains one of the simplices it would remove.
    let mut candidates = BTreeSet::new();
    for s in &t.simplices {
        for v in 1..=spec.m() as Label {
            if !s.contains(v) {
                candidates.insert(s.with(v));
            }
        }
    }
    candidates
        .into_iter()
        .filter(|h| from.iter().all(|p| t.contains(&h.pick(p))))
        .map(|h| split.event(h, direction))
        .collect()
}

/// All increasing flips of `t`, sorted by support.
pub fn increasing_flips(t: &Triangulation) -> Vec<FlipEvent> {
    flips(t, FlipDirection::Increasing)
}

/// All decreasing flips of `t`, sorted by support.
pub fn decreasing_flips(t: &Triangulation) -> Vec<FlipEvent> {
    flips(t, FlipDirection::Decreasing)
}

/// `(T \ removed) ∪ added`.
pub fn apply_flip(t: &Triangulation, flip: &FlipEvent) -> Result<Triangulation> {
    if flip.support.len() != t.spec.delta() + 2 || !flip.support.lies_in(t.spec.m()) {
        return Err(contract!(
            "flip support {} does not fit {}",
            flip.support,
            t.spec
        ));
    }
    let expected = CircuitSplit::new(t.spec.delta()).event(flip.support.clone(), flip.direction);
    if expected != *flip {
        return Err(contract!(
            "malformed flip event on support {}",
            flip.support
        ));
    }
    if let Some(missing) = flip.removed.iter().find(|s| !t.contains(s)) {
        return Err(contract!(
            "flip on {} not applicable: {missing} is absent",
            flip.support
        ));
    }
    if let Some(present) = flip.added.iter().find(|s| t.contains(s)) {
        return Err(contract!(
            "flip on {} not applicable: {present} already present",
            flip.support
        ));
    }
    let mut simplices: Vec<_> = t
        .simplices
        .iter()
        .filter(|s| !flip.removed.contains(s))
        .cloned()
        .chain(flip.added.iter().cloned())
        .collect();
    simplices.sort();
    Ok(Triangulation::from_sorted(t.spec, simplices))
}

fn faces_of(t: &Triangulation, size: usize) -> BTreeSet<VertexTuple> {
    t.simplices.iter().flat_map(|s| s.faces(size)).collect()
}

/// `e(T)`: the `d`-faces of `T` lying in no lower facet of `C(m, 2d)`.
pub fn upper_set_tuples(t: &Triangulation) -> Result<Vec<VertexTuple>> {
    let delta = t.spec.delta();
    if !delta.is_multiple_of(2) {
        return Err(contract!(
            "upper-set tuples need an even dimension, got {}",
            t.spec
        ));
    }
    let size = delta / 2 + 1;
    let boundary = BoundaryFaces::new(t.spec, size);
    Ok(faces_of(t, size)
        .into_iter()
        .filter(|f| !boundary.in_lower_facet(f))
        .collect())
}

/// The internal `k`-dimensional faces of `T`.
pub fn internal_faces(t: &Triangulation, k: usize) -> Result<Vec<VertexTuple>> {
    if k > t.spec.delta() {
        return Err(contract!("face dimension {k} exceeds {}", t.spec));
    }
    let boundary = BoundaryFaces::new(t.spec, k + 1);
    Ok(faces_of(t, k + 1)
        .into_iter()
        .filter(|f| boundary.is_internal(f))
        .collect())
}

/// Which tuple family a triangulation is reconstructed from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TupleFamily {
    /// `e(T)`, the tilting labels.
    UpperSet,
    /// The internal `d`-faces, the cluster-tilting labels.
    Internal,
}

/// The tuples of the given family that label `t`. Requires an even dimension.
pub fn family_tuples(t: &Triangulation, family: TupleFamily) -> Result<Vec<VertexTuple>> {
    match family {
        TupleFamily::UpperSet => upper_set_tuples(t),
        TupleFamily::Internal => {
            if !t.spec.delta().is_multiple_of(2) {
                return Err(contract!(
                    "internal labels need an even dimension, got {}",
                    t.spec
                ));
            }
            internal_faces(t, t.spec.delta() / 2)
        }
    }
}

/// The unique triangulation of an even-dimensional `spec` labelled by
/// `tuples`, located in the full enumeration.
pub fn triangulation_from_tuples(
    tuples: &[VertexTuple],
    spec: PolytopeSpec,
    family: TupleFamily,
) -> Result<Triangulation> {
    if !spec.delta().is_multiple_of(2) {
        return Err(contract!(
            "reconstruction from tuples needs an even dimension, got {spec}"
        ));
    }
    let mut wanted = tuples.to_vec();
    wanted.sort();
    let mut found = None;
    for t in orders::enumerate_triangulations(spec, Limits::default())? {
        if family_tuples(&t, family)? == wanted {
            if found.is_some() {
                return Err(integrity!(
                    "several triangulations of {spec} carry {wanted:?}"
                ));
            }
            found = Some(t);
        }
    }
    found.ok_or_else(|| integrity!("no triangulation of {spec} carries {wanted:?}"))
}
