//! The quiver `Q^(d,n)` of the higher Auslander algebra `A_n^d`.

use serde::{Deserialize, Serialize};

use crate::combinat::{enumerate_index_set, IndexSetKind, Label, VertexTuple};
use crate::error::{contract, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arrow {
    pub source: VertexTuple,
    pub target: VertexTuple,
    /// Position that was incremented.
    pub direction: usize,
}

/// Relation carried by the length-two path `A → A+e_i → A+e_i+e_j`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PathRelation {
    /// The path equals `A → A+e_j → A+e_i+e_j`.
    Commute {
        start: VertexTuple,
        i: usize,
        j: usize,
    },
    Zero {
        start: VertexTuple,
        i: usize,
        j: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverPresentation {
    pub vertices: Vec<VertexTuple>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<PathRelation>,
}

fn shift(a: &VertexTuple, i: usize) -> Option<VertexTuple> {
    let mut entries = a.entries().to_vec();
    entries[i] = entries[i].checked_add(1)?;
    VertexTuple::new(entries).ok()
}

pub fn build_quiver(d: usize, n: usize) -> Result<QuiverPresentation> {
    if d == 0 || n == 0 {
        return Err(contract!(
            "quiver parameters must be positive, got d={d}, n={n}"
        ));
    }
    if n + 2 * d - 2 > usize::from(Label::MAX) {
        return Err(contract!("quiver Q^({d},{n}) exceeds the label range"));
    }
    let vertices = enumerate_index_set(n + 2 * d - 2, d - 1, IndexSetKind::Separated);
    let is_vertex = |a: &VertexTuple| vertices.binary_search(a).is_ok();
    let step = |a: &VertexTuple, i: usize| shift(a, i).filter(|b| is_vertex(b));

    let mut arrows = Vec::new();
    let mut relations = Vec::new();
    for a in &vertices {
        for i in 0..d {
            let Some(b) = step(a, i) else { continue };
            for j in 0..d {
                if step(&b, j).is_none() {
                    continue;
                }
                let start = a.clone();
                relations.push(if step(a, j).is_some() {
                    PathRelation::Commute { start, i, j }
                } else {
                    PathRelation::Zero { start, i, j }
                });
            }
            arrows.push(Arrow {
                source: a.clone(),
                target: b,
                direction: i,
            });
        }
    }
    arrows.sort();
    relations.sort();
    Ok(QuiverPresentation {
        vertices,
        arrows,
        relations,
    })
}
