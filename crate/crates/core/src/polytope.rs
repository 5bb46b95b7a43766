//! The cyclic polytope `C(m, δ)` with vertices `p(i) = (i, i², …, i^δ)`.
//!
//! Facets are classified by the sign of the monic polynomial
//! `q(t) = ∏_{y∈Y} (t − y)` at the remaining vertices: `q` vanishes on the
//! facet's vertices and `q(p(t)) = t^δ + (lower-order terms)` is an affine
//! function of the point whose last-coordinate coefficient is `+1`. A facet is
//! lower when every other vertex lies above it, i.e. `q(i) > 0` for all
//! `i ∉ Y`, which happens iff `#{y ∈ Y : y > i}` is even for every such `i`.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::{subsets, Label, VertexTuple, MAX_LABEL};
use crate::error::{contract, Error, Result};

/// Exact polynomial evaluation is guarded to this many vertices.
pub const ORACLE_MAX_VERTICES: usize = 12;

/// Where a `δ`-subset of vertices sits on the boundary of `C(m, δ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FacetClass {
    Lower,
    Upper,
    NotFacet,
}

/// The parameters `(m, δ)` of `C(m, δ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSpec")]
pub struct PolytopeSpec {
    m: usize,
    delta: usize,
}

#[derive(Deserialize)]
struct RawSpec {
    m: usize,
    delta: usize,
}

impl TryFrom<RawSpec> for PolytopeSpec {
    type Error = Error;

    fn try_from(raw: RawSpec) -> Result<Self> {
        PolytopeSpec::new(raw.m, raw.delta)
    }
}

impl PolytopeSpec {
    /// Requires `m ≥ δ + 1 ≥ 2`.
    pub fn new(m: usize, delta: usize) -> Result<Self> {
        if delta == 0 {
            return Err(contract!("dimension must be at least 1"));
        }
        if m < delta + 1 {
            return Err(contract!(
                "C({m},{delta}) needs at least {} vertices",
                delta + 1
            ));
        }
        if m > usize::from(MAX_LABEL) {
            return Err(contract!(
                "at most {MAX_LABEL} vertices are supported, got {m}"
            ));
        }
        Ok(PolytopeSpec { m, delta })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    /// True iff `C(m, δ)` is itself a simplex.
    pub fn is_simplex(&self) -> bool {
        self.m == self.delta + 1
    }

    /// `C(m, δ + 1)`, if it exists.
    pub fn lifted(&self) -> Option<PolytopeSpec> {
        PolytopeSpec::new(self.m, self.delta + 1).ok()
    }

    fn check_tuple(&self, t: &VertexTuple, size: usize, what: &str) -> Result<()> {
        if t.len() != size {
            return Err(contract!(
                "{what} in C({},{}) must have {size} vertices, got {t}",
                self.m,
                self.delta
            ));
        }
        if !t.lies_in(self.m) {
            return Err(contract!("{what} {t} has a label outside [{}]", self.m));
        }
        Ok(())
    }
}

impl std::fmt::Display for PolytopeSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "C({},{})", self.m, self.delta)
    }
}

/// Gale's evenness criterion in its lower/upper form.
pub fn classify_facet(y: &VertexTuple, spec: PolytopeSpec) -> Result<FacetClass> {
    spec.check_tuple(y, spec.delta, "facet candidate")?;
    Ok(facet_parity(y, spec.m))
}

fn facet_parity(y: &VertexTuple, m: usize) -> FacetClass {
    let (mut all_even, mut all_odd) = (true, true);
    for i in 1..=m as Label {
        if y.contains(i) {
            continue;
        }
        let above = y.entries().iter().filter(|&&v| v > i).count();
        if above % 2 == 0 {
            all_odd = false;
        } else {
            all_even = false;
        }
    }
    match (all_even, all_odd) {
        (true, _) => FacetClass::Lower,
        (_, true) => FacetClass::Upper,
        _ => FacetClass::NotFacet,
    }
}

/// The facets of `C(m, δ)`, split by side, each list in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Facets {
    pub lower: Vec<VertexTuple>,
    pub upper: Vec<VertexTuple>,
}

impl Facets {
    pub fn all(&self) -> impl Iterator<Item = &VertexTuple> {
        self.lower.iter().chain(self.upper.iter())
    }

    /// True iff `face` lies in some facet.
    pub fn on_boundary(&self, face: &VertexTuple) -> bool {
        self.all().any(|f| face.is_subset_of(f))
    }

    /// True iff `face` lies in some lower facet.
    pub fn in_lower(&self, face: &VertexTuple) -> bool {
        self.lower.iter().any(|f| face.is_subset_of(f))
    }
}

pub fn enumerate_facets(spec: PolytopeSpec) -> Facets {
    let mut facets = Facets {
        lower: Vec::new(),
        upper: Vec::new(),
    };
    for y in subsets(spec.m, spec.delta) {
        match facet_parity(&y, spec.m) {
            FacetClass::Lower => facets.lower.push(y),
            FacetClass::Upper => facets.upper.push(y),
            FacetClass::NotFacet => {}
        }
    }
    facets
}

/// True iff `a` lies in no facet of the polytope.
pub fn is_internal_simplex(a: &VertexTuple, spec: PolytopeSpec) -> bool {
    !enumerate_facets(spec).on_boundary(a)
}

/// Faces of a given size that lie on the boundary, for repeated membership
/// queries.
#[derive(Clone, Debug)]
pub struct BoundaryFaces {
    all: HashSet<VertexTuple>,
    lower: HashSet<VertexTuple>,
}

impl BoundaryFaces {
    pub fn new(spec: PolytopeSpec, size: usize) -> Self {
        let facets = enumerate_facets(spec);
        let lower: HashSet<_> = facets.lower.iter().flat_map(|f| f.faces(size)).collect();
        let mut all = lower.clone();
        all.extend(facets.upper.iter().flat_map(|f| f.faces(size)));
        BoundaryFaces { all, lower }
    }

    pub fn is_internal(&self, face: &VertexTuple) -> bool {
        !self.all.contains(face)
    }

    pub fn in_lower_facet(&self, face: &VertexTuple) -> bool {
        self.lower.contains(face)
    }
}

/// Product of pairwise differences `∏_{i<j} (a_j − a_i)`; the Vandermonde
/// determinant of the simplex's homogenized vertices.
pub(crate) fn vandermonde(a: &VertexTuple) -> BigInt {
    let e = a.entries();
    let mut acc = BigInt::one();
    for j in 0..e.len() {
        for i in 0..j {
            acc *= BigInt::from(i64::from(e[j]) - i64::from(e[i]));
        }
    }
    acc
}

/// Euclidean volume of `conv{p(a_0), …, p(a_δ)}` in dimension `δ = |A| − 1`.
pub fn simplex_volume(a: &VertexTuple) -> BigRational {
    let mut factorial = BigInt::one();
    for k in 2..a.len() {
        factorial *= BigInt::from(k);
    }
    BigRational::new(vandermonde(a).abs(), factorial)
}

/// Splits a sorted circuit into its odd- and even-position halves.
pub(crate) fn alternating_halves(z: &[Label]) -> (Vec<Label>, Vec<Label>) {
    let odd = z.iter().step_by(2).copied().collect();
    let even = z.iter().skip(1).step_by(2).copied().collect();
    (odd, even)
}

fn subset_of(small: &[Label], big: &[Label]) -> bool {
    small.iter().all(|x| big.binary_search(x).is_ok())
}

/// True iff the two full-dimensional simplices overlap in their interiors or
/// otherwise meet in something that is not a common face.
///
/// Points on the moment curve are in general position and every circuit has
/// `δ + 2` elements with alternating signs, so the simplices intersect
/// improperly exactly when some circuit has one half in `s` and the other in
/// `t`.
pub fn improperly_intersecting(
    s: &VertexTuple,
    t: &VertexTuple,
    spec: PolytopeSpec,
) -> Result<bool> {
    spec.check_tuple(s, spec.delta + 1, "simplex")?;
    spec.check_tuple(t, spec.delta + 1, "simplex")?;
    Ok(split_circuit_exists(s, t, spec.delta + 2))
}

pub(crate) fn split_circuit_exists(s: &VertexTuple, t: &VertexTuple, circuit: usize) -> bool {
    let pool = s.union(t);
    let found = pool.faces(circuit).any(|z| {
        let (odd, even) = alternating_halves(z.entries());
        (subset_of(&odd, s.entries()) && subset_of(&even, t.entries()))
            || (subset_of(&odd, t.entries()) && subset_of(&even, s.entries()))
    });
    found
}

/// Classifies `y` by evaluating `q(t) = ∏ (t − y)` exactly at every other
/// vertex. Independent of the parity rule in [`classify_facet`].
pub fn geometric_facet_oracle(y: &VertexTuple, spec: PolytopeSpec) -> Result<FacetClass> {
    if spec.m > ORACLE_MAX_VERTICES {
        return Err(Error::Resource {
            what: "vertices for exact facet evaluation",
            limit: ORACLE_MAX_VERTICES as u64,
        });
    }
    spec.check_tuple(y, spec.delta, "facet candidate")?;
    let (mut positive, mut negative) = (false, false);
    for i in 1..=spec.m as i64 {
        if y.contains(i as Label) {
            continue;
        }
        let value: BigInt = y
            .entries()
            .iter()
            .map(|&v| BigInt::from(i - i64::from(v)))
            .product();
        if value.is_positive() {
            positive = true;
        } else if value.is_negative() {
            negative = true;
        } else {
            debug_assert!(value.is_zero());
        }
    }
    Ok(match (positive, negative) {
        (_, false) => FacetClass::Lower,
        (false, true) => FacetClass::Upper,
        (true, true) => FacetClass::NotFacet,
    })
}
