//! JSON and DOT encodings, and decoders for untrusted input.
//!
//! The decoders bound the input size and the polytope size before running
//! any validation, so a hostile document cannot trigger an enumeration of
//! astronomically many faces.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::combinat::{binomial, VertexTuple};
use crate::error::{Error, Result};
use crate::orders::{Relation, TriangulationPoset};
use crate::polytope::PolytopeSpec;
use crate::reptheory::green::{GreenSequence, GreenSystem};
use crate::reptheory::tilting::{Framework, TiltingState};
use crate::triangulation::Triangulation;

/// Largest document the decoders accept, in bytes.
pub const MAX_INPUT_BYTES: usize = 1 << 20;

/// Largest number of `(δ+1)`-subsets of `[m]` a decoded polytope may have.
pub const MAX_DECODED_FACES: u64 = 1 << 21;

/// Largest number of states in a decoded green sequence.
pub const MAX_DECODED_STATES: usize = 4096;

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

fn check_input(text: &str) -> Result<()> {
    if text.len() > MAX_INPUT_BYTES {
        return Err(Error::Resource {
            what: "input bytes",
            limit: MAX_INPUT_BYTES as u64,
        });
    }
    Ok(())
}

fn check_polytope(spec: PolytopeSpec) -> Result<()> {
    if binomial(spec.m() as u64, spec.delta() as u64 + 1) > MAX_DECODED_FACES {
        return Err(Error::Resource {
            what: "polytope faces",
            limit: MAX_DECODED_FACES,
        });
    }
    Ok(())
}

/// Decodes a JSON integer array such as `[1,3,5]`.
pub fn parse_tuple(text: &str) -> Result<VertexTuple> {
    check_input(text)?;
    serde_json::from_str(text).map_err(parse_err)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TriangulationJson {
    m: usize,
    delta: usize,
    simplices: Vec<VertexTuple>,
}

/// Decodes `{"m":…, "delta":…, "simplices":[[…],…]}` and validates it as a
/// triangulation.
pub fn parse_triangulation(text: &str) -> Result<Triangulation> {
    check_input(text)?;
    let raw: TriangulationJson = serde_json::from_str(text).map_err(parse_err)?;
    let spec = PolytopeSpec::new(raw.m, raw.delta)?;
    check_polytope(spec)?;
    Triangulation::new(spec, raw.simplices)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GreenSequenceJson {
    d: usize,
    n: usize,
    flips: Vec<VertexTuple>,
    states: Vec<Vec<VertexTuple>>,
}

/// Decodes `{"d":…, "n":…, "flips":[…], "states":[…]}` and checks that it is
/// a maximal chain of left mutations with matching flip supports.
pub fn parse_green_sequence(text: &str) -> Result<GreenSequence> {
    check_input(text)?;
    let raw: GreenSequenceJson = serde_json::from_str(text).map_err(parse_err)?;
    check_polytope(Framework::ClusterTilting.polytope(raw.d, raw.n)?)?;
    if raw.states.len() > MAX_DECODED_STATES {
        return Err(Error::Resource {
            what: "green sequence states",
            limit: MAX_DECODED_STATES as u64,
        });
    }
    let states = raw
        .states
        .into_iter()
        .map(|s| TiltingState::new(Framework::ClusterTilting, raw.d, raw.n, s))
        .collect::<Result<Vec<_>>>()?;
    GreenSequence::new(raw.d, raw.n, states, raw.flips)
}

#[derive(Serialize)]
struct PosetDump<'a> {
    spec: PolytopeSpec,
    elements: Vec<&'a [VertexTuple]>,
    hst1_covers: &'a [(usize, usize)],
    hst2_leq: Vec<(usize, usize)>,
}

/// The poset dump: elements, first-order covers and the full second order.
pub fn poset_json(poset: &TriangulationPoset) -> String {
    let dump = PosetDump {
        spec: poset.spec(),
        elements: poset
            .elements()
            .iter()
            .map(Triangulation::simplices)
            .collect(),
        hst1_covers: poset.covers1(),
        hst2_leq: poset.hst2().pairs(),
    };
    serde_json::to_string_pretty(&dump).expect("poset dump serializes") + "\n"
}

/// The list of triangulations, each as `{"m","delta","simplices"}`.
pub fn triangulations_json(elements: &[Triangulation]) -> String {
    serde_json::to_string_pretty(elements).expect("triangulations serialize") + "\n"
}

fn dot_graph(out: &mut String, name: &str, nodes: usize, covers: &[(usize, usize)]) {
    let _ = writeln!(out, "digraph {name} {{");
    let _ = writeln!(out, "  rankdir=BT;");
    for i in 0..nodes {
        let _ = writeln!(out, "  {i} [label=\"T{i}\"];");
    }
    for (a, b) in covers {
        let _ = writeln!(out, "  {a} -> {b};");
    }
    out.push_str("}\n");
}

fn orders_dot(
    prefix: &str,
    first: &Relation,
    first_covers: Option<&[(usize, usize)]>,
    second: &Relation,
) -> Result<String> {
    let mut out = String::new();
    let owned;
    let covers = match first_covers {
        Some(c) => c,
        None => {
            owned = first.hasse()?;
            &owned
        }
    };
    dot_graph(&mut out, &format!("{prefix}1"), first.len(), covers);
    out.push('\n');
    dot_graph(
        &mut out,
        &format!("{prefix}2"),
        second.len(),
        &second.hasse()?,
    );
    Ok(out)
}

/// Hasse diagrams of both orders, one DOT graph each.
pub fn poset_dot(poset: &TriangulationPoset) -> Result<String> {
    orders_dot("hst", poset.hst1(), Some(poset.covers1()), poset.hst2())
}

#[derive(Serialize)]
struct ClassJson<'a> {
    sigma: &'a [VertexTuple],
    size: usize,
    odd_triangulation: &'a [VertexTuple],
}

#[derive(Serialize)]
struct GreenDump<'a> {
    sequences: Vec<GreenSequence>,
    classes: Vec<ClassJson<'a>>,
}

/// All sequences and all classes of a green system.
pub fn green_json(system: &GreenSystem) -> String {
    let dump = GreenDump {
        sequences: system.sequences().collect(),
        classes: system
            .classes()
            .iter()
            .map(|c| ClassJson {
                sigma: &c.sigma,
                size: c.representatives.len(),
                odd_triangulation: c.odd_triangulation.simplices(),
            })
            .collect(),
    };
    serde_json::to_string(&dump).expect("green dump serializes") + "\n"
}

/// Hasse diagrams of both orders on green classes.
pub fn green_dot(system: &GreenSystem) -> Result<String> {
    orders_dot("green", system.leq1(), None, system.leq2())
}
