//! Plain-text reports.

use std::fmt::Write as _;

use hst_core::reptheory::green::GreenSystem;
use hst_core::{Result, Triangulation, TriangulationPoset};

fn line(out: &mut String, args: std::fmt::Arguments<'_>) {
    out.write_fmt(args).expect("writing to a String");
    out.push('\n');
}

pub fn triangulations(all: &[Triangulation]) -> String {
    let mut out = String::new();
    line(&mut out, format_args!("{} triangulations", all.len()));
    for (i, t) in all.iter().enumerate() {
        line(&mut out, format_args!("T{i} = {t}"));
    }
    out
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn orders(poset: &TriangulationPoset) -> Result<String> {
    let mut out = String::new();
    let coincidence = poset.coincidence();
    let (lattice, _) = poset.hst1().is_lattice();
    line(
        &mut out,
        format_args!("{}: {} triangulations", poset.spec(), poset.len()),
    );
    line(
        &mut out,
        format_args!("first order covers: {}", poset.covers1().len()),
    );
    line(
        &mut out,
        format_args!("second order covers: {}", poset.hst2().hasse()?.len()),
    );
    line(
        &mut out,
        format_args!("orders equal: {}", yes_no(coincidence.equal)),
    );
    line(&mut out, format_args!("lattice: {}", yes_no(lattice)));
    line(&mut out, format_args!("bottom: T{}", poset.bottom()));
    line(&mut out, format_args!("top: T{}", poset.top()));
    for (i, t) in poset.elements().iter().enumerate() {
        line(&mut out, format_args!("T{i} = {t}"));
    }
    for &(i, j) in poset.covers1() {
        let flip = poset.cover_flip(i, j).expect("every cover carries a flip");
        line(&mut out, format_args!("T{i} -> T{j} via {}", flip.support));
    }
    Ok(out)
}

pub fn green(system: &GreenSystem) -> String {
    let mut out = String::new();
    line(
        &mut out,
        format_args!(
            "d={} n={}: {} green sequences, {} classes",
            system.d(),
            system.n(),
            system.sequence_count(),
            system.classes().len()
        ),
    );
    for (k, g) in system.sequences().enumerate() {
        let flips: Vec<String> = g.flips().iter().map(ToString::to_string).collect();
        line(&mut out, format_args!("G{k}: {}", flips.join(" ")));
    }
    for (c, class) in system.classes().iter().enumerate() {
        let sigma: Vec<String> = class.sigma.iter().map(ToString::to_string).collect();
        line(
            &mut out,
            format_args!(
                "class {c}: {} sequence(s), sigma {{{}}}, odd triangulation {}",
                class.representatives.len(),
                sigma.join(", "),
                class.odd_triangulation
            ),
        );
    }
    out
}
