//! The cross-checks behind `hst verify`.
//!
//! Every check yields a status and, on failure, a JSON counterexample. Checks
//! marked informational are reported but never change the exit code.

use std::collections::HashMap;

use hst_core::combinat::binomial;
use hst_core::orders::{submersion_set, LatticeWitness};
use hst_core::polytope::is_internal_simplex;
use hst_core::reptheory::green::GreenSystem;
use hst_core::reptheory::tilting::{
    hst2_by_perp, left_mutations, perp, tilting_state, TiltingState,
};
use hst_core::{Limits, PolytopeSpec, Result, TriangulationPoset};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Serialize, Clone, Copy, PartialEq, Eq, Debug)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Serialize, Debug)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub required: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

impl Check {
    fn new(name: &'static str, failure: Option<Value>) -> Self {
        Check {
            name,
            status: if failure.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            required: true,
            detail: None,
            counterexample: failure,
        }
    }

    fn detail(mut self, detail: String) -> Self {
        self.detail = Some(detail);
        self
    }

    fn informational(mut self) -> Self {
        self.required = false;
        self
    }
}

#[derive(Serialize, Debug)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn failures(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.required && c.status == Status::Fail)
            .count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn to_json(&self) -> String {
        let mut value = serde_json::to_value(self).expect("report serializes");
        value["pass"] = json!(self.passed());
        serde_json::to_string_pretty(&value).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.subject);
        for c in &self.checks {
            let status = match (c.status, c.required) {
                (Status::Pass, _) => "pass",
                (Status::Fail, true) => "FAIL",
                (Status::Fail, false) => "fail (informational)",
            };
            out += &format!("{}: {status}", c.name);
            if let Some(detail) = &c.detail {
                out += &format!(" ({detail})");
            }
            out.push('\n');
            if let (Status::Fail, Some(example)) = (c.status, &c.counterexample) {
                out += &format!("counterexample: {example}\n");
            }
        }
        out
    }
}

fn lattice_example(witness: Option<LatticeWitness>) -> Value {
    json!(witness)
}

fn order_checks(poset: &TriangulationPoset, checks: &mut Vec<Check>) {
    let spec = poset.spec();
    let c = poset.coincidence();
    let pair = |(i, j): (usize, usize)| {
        json!({
            "i": i,
            "j": j,
            "t_i": poset.element(i).simplices(),
            "t_j": poset.element(j).simplices(),
            "first_order": poset.hst1_leq(i, j),
            "second_order": poset.hst2_leq(i, j),
        })
    };
    checks.push(Check::new(
        "orders equal",
        c.counterexample.filter(|_| !c.equal).map(pair),
    ));
    let inclusion = (0..poset.len())
        .flat_map(|i| (0..poset.len()).map(move |j| (i, j)))
        .find(|&(i, j)| poset.hst1_leq(i, j) && !poset.hst2_leq(i, j));
    checks.push(Check::new("first order inside second", inclusion.map(pair)));
    let (ok, witness) = poset.hst1().is_lattice();
    let lattice = Check::new("lattice", (!ok).then(|| lattice_example(witness)));
    checks.push(if spec.delta() <= 3 {
        lattice
    } else {
        lattice.informational()
    });
}

fn tilting_checks(poset: &TriangulationPoset, checks: &mut Vec<Check>) -> Result<()> {
    let spec = poset.spec();
    let (d, n) = (spec.delta() / 2, spec.m() - spec.delta());
    let states = poset
        .elements()
        .iter()
        .map(tilting_state)
        .collect::<Result<Vec<TiltingState>>>()?;
    let index: HashMap<&TiltingState, usize> =
        states.iter().enumerate().map(|(i, s)| (s, i)).collect();

    let expected = binomial((n + d - 1) as u64, d as u64) as usize;
    let wrong_size = states.iter().position(|s| s.tuples().len() != expected);
    checks.push(
        Check::new(
            "summand count",
            wrong_size.map(|i| json!({"i": i, "state": states[i].tuples(), "expected": expected})),
        )
        .detail(format!("{expected} summands per state")),
    );

    let mut mutation_failure = None;
    for (i, state) in states.iter().enumerate() {
        let mut flipped: Vec<usize> = poset
            .covers1()
            .iter()
            .filter(|c| c.0 == i)
            .map(|c| c.1)
            .collect();
        flipped.sort_unstable();
        let mut mutated = Vec::new();
        for s in left_mutations(state) {
            match index.get(&s) {
                Some(&j) => mutated.push(j),
                None => {
                    mutation_failure = Some(json!({"i": i, "mutation": s.tuples()}));
                    break;
                }
            }
        }
        mutated.sort_unstable();
        if mutation_failure.is_none() && flipped != mutated {
            mutation_failure = Some(json!({"i": i, "flips": flipped, "mutations": mutated}));
        }
        if mutation_failure.is_some() {
            break;
        }
    }
    checks.push(Check::new("flips are left mutations", mutation_failure));

    let perps = states.iter().map(perp).collect::<Result<Vec<_>>>()?;
    let mut perp_failure = None;
    'outer: for i in 0..poset.len() {
        for j in 0..poset.len() {
            let by_perp = hst2_by_perp(&states[i], &states[j])?;
            if by_perp != poset.hst2_leq(i, j) {
                perp_failure = Some(
                    json!({"i": i, "j": j, "second_order": poset.hst2_leq(i, j), "perp_inclusion": by_perp}),
                );
                break 'outer;
            }
        }
    }
    checks.push(Check::new("second order is perp inclusion", perp_failure));

    let internal: Vec<_> = hst_core::combinat::subsets(spec.m(), d + 1)
        .filter(|a| is_internal_simplex(a, spec))
        .collect();
    let mut membership_failure = None;
    'members: for (i, allowed) in perps.iter().enumerate() {
        let sub = submersion_set(poset.element(i)).tuples;
        for a in &internal {
            let (x, y) = (sub.contains(a), allowed.contains(a));
            if x != y {
                membership_failure =
                    Some(json!({"i": i, "tuple": a, "submerged": x, "in_perp": y}));
                break 'members;
            }
        }
    }
    checks.push(Check::new(
        "submersion is perp membership",
        membership_failure,
    ));
    Ok(())
}

fn green_checks(system: &GreenSystem, checks: &mut Vec<Check>) {
    let odd = system.odd_poset();
    let k = system.classes().len();
    let mut image: Vec<usize> = (0..k).map(|c| system.odd_index(c)).collect();
    image.sort_unstable();
    image.dedup();
    let bijective = image.len() == k && k == odd.len();
    checks.push(
        Check::new(
            "green classes biject with odd triangulations",
            (!bijective).then(|| json!({"classes": k, "distinct_images": image.len(), "triangulations": odd.len()})),
        )
        .detail(format!(
            "{} sequences, {k} classes, {} triangulations of {}",
            system.sequence_count(),
            odd.len(),
            odd.spec()
        )),
    );
    let mismatch = |leq: &dyn Fn(usize, usize) -> bool, odd_leq: &dyn Fn(usize, usize) -> bool| {
        (0..k)
            .flat_map(|a| (0..k).map(move |b| (a, b)))
            .find(|&(a, b)| leq(a, b) != odd_leq(system.odd_index(a), system.odd_index(b)))
            .map(|(a, b)| {
                json!({
                    "class_a": a,
                    "class_b": b,
                    "sigma_a": system.classes()[a].sigma,
                    "sigma_b": system.classes()[b].sigma,
                    "class_order": leq(a, b),
                    "odd_order": odd_leq(system.odd_index(a), system.odd_index(b)),
                })
            })
    };
    checks.push(Check::new(
        "first green order matches first order",
        mismatch(&|a, b| system.green_leq_1(a, b), &|x, y| odd.hst1_leq(x, y)),
    ));
    checks.push(Check::new(
        "second green order matches second order",
        mismatch(&|a, b| system.green_leq_2(a, b), &|x, y| odd.hst2_leq(x, y)),
    ));
    if system.d() == 1 {
        let pair = (0..k)
            .flat_map(|a| (0..k).map(move |b| (a, b)))
            .find(|&(a, b)| system.green_leq_1(a, b) != system.green_leq_2(a, b));
        checks.push(Check::new(
            "green orders equal",
            pair.map(|(a, b)| json!({"class_a": a, "class_b": b, "first": system.green_leq_1(a, b), "second": system.green_leq_2(a, b)})),
        ));
        let (ok, witness) = system.leq1().is_lattice();
        checks.push(Check::new(
            "green lattice",
            (!ok).then(|| lattice_example(witness)),
        ));
    }
}

/// Checks for `C(m, δ)`: the two orders, and whichever of the tilting and
/// green-sequence correspondences have this polytope as one of their sides.
pub fn polytope(spec: PolytopeSpec, limits: Limits) -> Result<Report> {
    let poset = TriangulationPoset::build(spec, limits)?;
    let mut checks = Vec::new();
    order_checks(&poset, &mut checks);
    let (m, delta) = (spec.m(), spec.delta());
    if delta % 2 == 0 {
        tilting_checks(&poset, &mut checks)?;
        if m > delta + 1 {
            let system = GreenSystem::build(delta / 2, m - delta - 1, limits)?;
            green_checks(&system, &mut checks);
        }
    } else if delta >= 3 {
        let system = GreenSystem::build((delta - 1) / 2, m - delta, limits)?;
        green_checks(&system, &mut checks);
    }
    Ok(Report {
        subject: format!("{spec}: {} triangulations", poset.len()),
        checks,
    })
}

/// Checks for the green sequences of `(d, n)`.
pub fn algebra(d: usize, n: usize, limits: Limits) -> Result<Report> {
    let system = GreenSystem::build(d, n, limits)?;
    let mut checks = Vec::new();
    green_checks(&system, &mut checks);
    Ok(Report {
        subject: format!(
            "d={d} n={n}: {} green sequences, {} classes",
            system.sequence_count(),
            system.classes().len()
        ),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_carry_counterexamples() {
        let report = Report {
            subject: "sample".into(),
            checks: vec![
                Check::new("kept", None),
                Check::new("broken", Some(json!({"i": 3}))),
                Check::new("soft", Some(json!(null))).informational(),
            ],
        };
        assert_eq!(report.failures(), 1);
        assert!(!report.passed());
        let text = report.to_text();
        assert!(text.contains("kept: pass\nbroken: FAIL\ncounterexample: {\"i\":3}\n"));
        assert!(text.contains("soft: fail (informational)\n"));
        let v: Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(v["pass"], false);
        assert_eq!(v["checks"][1]["counterexample"]["i"], 3);
    }

    #[test]
    fn informational_failures_do_not_fail_the_report() {
        let report = Report {
            subject: "sample".into(),
            checks: vec![Check::new("soft", Some(json!({}))).informational()],
        };
        assert!(report.passed());
    }
}
