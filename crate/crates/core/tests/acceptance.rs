//! Acceptance suite. Runs every criterion in sequence, prints one PASS/FAIL
//! line per criterion with its elapsed time, and exits non-zero if any
//! criterion fails or exceeds its time limit.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{digit_set, digits};
use hst_core::combinat::binomial;
use hst_core::orders::{enumerate_triangulations, submersion_set, Limits, TriangulationPoset};
use hst_core::polytope::{classify_facet, geometric_facet_oracle, is_internal_simplex};
use hst_core::reptheory::green::{
    enumerate_green_sequences, green_leq_2, is_increasing_polygonal_deformation, summand_set,
    GreenSystem,
};
use hst_core::reptheory::tilting::{
    cluster_state, hst2_by_perp, left_mutations, perp, tilting_state,
};
use hst_core::triangulation::{
    apply_flip, decreasing_flips, increasing_flips, internal_faces, upper_set_tuples,
};
use hst_core::{PolytopeSpec, VertexTuple};

type Outcome = Result<(), String>;

struct Criterion {
    name: &'static str,
    limit_secs: u64,
    check: fn() -> Outcome,
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn spec(m: usize, delta: usize) -> PolytopeSpec {
    PolytopeSpec::new(m, delta).unwrap()
}

fn poset(m: usize, delta: usize) -> TriangulationPoset {
    TriangulationPoset::build(spec(m, delta), Limits::default()).unwrap()
}

fn count(m: usize, delta: usize) -> usize {
    enumerate_triangulations(spec(m, delta), Limits::default())
        .unwrap()
        .len()
}

fn counts() -> Outcome {
    let mut cases = vec![(5, 2, 5), (7, 4, 7), (5, 3, 2), (6, 2, 14)];
    cases.extend((1..=6).map(|delta| (delta + 2, delta, 2)));
    for (m, delta, expected) in cases {
        let start = Instant::now();
        let got = count(m, delta);
        let took = start.elapsed();
        ensure!(
            got == expected,
            "C({m},{delta}): {got} triangulations, expected {expected}"
        );
        ensure!(
            took < Duration::from_secs(1),
            "C({m},{delta}) took {took:?}"
        );
    }
    Ok(())
}

fn table_reproduction() -> Outcome {
    let tilting_rows: [([&str; 6], [&str; 6]); 7] = [
        (
            ["12345", "12356", "13456", "12367", "13467", "14567"],
            ["135", "136", "146", "137", "147", "157"],
        ),
        (
            ["12346", "12456", "23456", "12367", "13467", "14567"],
            ["246", "136", "146", "137", "147", "157"],
        ),
        (
            ["12347", "12456", "23456", "12467", "23467", "14567"],
            ["246", "247", "146", "137", "147", "157"],
        ),
        (
            ["12347", "12457", "23456", "12567", "23467", "24567"],
            ["246", "247", "257", "137", "147", "157"],
        ),
        (
            ["12345", "12356", "13457", "12367", "13567", "34567"],
            ["135", "136", "357", "137", "147", "157"],
        ),
        (
            ["12345", "12357", "13457", "12567", "23567", "34567"],
            ["135", "257", "357", "137", "147", "157"],
        ),
        (
            ["12347", "12457", "23457", "12567", "23567", "34567"],
            ["357", "247", "257", "137", "147", "157"],
        ),
    ];
    let cluster_rows: [[&str; 3]; 7] = [
        ["135", "136", "146"],
        ["246", "136", "146"],
        ["246", "247", "146"],
        ["246", "247", "257"],
        ["135", "136", "357"],
        ["135", "257", "357"],
        ["357", "247", "257"],
    ];
    let p = poset(7, 4);
    ensure!(p.len() == 7, "C(7,4) has {} triangulations", p.len());
    let mut matched = vec![false; p.len()];
    for (row, ((simplices, e), internal)) in tilting_rows.iter().zip(&cluster_rows).enumerate() {
        let i = p.index_of_simplices(&digit_set(simplices)).ok_or(format!(
            "table row {} is not a triangulation of C(7,4)",
            row + 1
        ))?;
        ensure!(!matched[i], "table rows repeat T{i}");
        matched[i] = true;
        let t = p.element(i);
        ensure!(
            upper_set_tuples(t).unwrap() == digit_set(e),
            "row {}: e(T) differs",
            row + 1
        );
        ensure!(
            tilting_state(t).unwrap().tuples() == digit_set(e),
            "row {}: tilting state",
            row + 1
        );
        ensure!(
            internal_faces(t, 2).unwrap() == digit_set(internal),
            "row {}: internal faces",
            row + 1
        );
        ensure!(
            cluster_state(t).unwrap().tuples() == digit_set(internal),
            "row {}: cluster state",
            row + 1
        );
    }
    ensure!(
        p.index_of_simplices(&digit_set(&tilting_rows[0].0)) == Some(p.bottom()),
        "first row is not the lower triangulation"
    );
    Ok(())
}

fn facet_criterion() -> Outcome {
    let mut checked = 0u64;
    for delta in 1..=6usize {
        for m in delta + 1..=10 {
            for y in common::combinations(m as u8, delta) {
                let y = VertexTuple::new(y).unwrap();
                let a = classify_facet(&y, spec(m, delta)).unwrap();
                let b = geometric_facet_oracle(&y, spec(m, delta)).unwrap();
                ensure!(a == b, "{y} in C({m},{delta}): parity {a:?}, oracle {b:?}");
                checked += 1;
            }
        }
    }
    ensure!(checked > 0, "nothing checked");
    Ok(())
}

fn even_grid(max_m: usize) -> Vec<(usize, usize)> {
    let mut grid = Vec::new();
    for d in 1..=3 {
        for n in 1.. {
            if n + 2 * d > max_m {
                break;
            }
            grid.push((d, n));
        }
    }
    grid
}

fn tilting_correspondence() -> Outcome {
    for (d, n) in even_grid(8) {
        let p = poset(n + 2 * d, 2 * d);
        let states: Vec<_> = p
            .elements()
            .iter()
            .map(|t| tilting_state(t).unwrap())
            .collect();
        let perps: Vec<_> = states.iter().map(|s| perp(s).unwrap()).collect();
        let internal: Vec<VertexTuple> = common::combinations((n + 2 * d) as u8, d + 1)
            .into_iter()
            .map(|a| VertexTuple::new(a).unwrap())
            .filter(|a| is_internal_simplex(a, p.spec()))
            .collect();
        for i in 0..p.len() {
            let mut flipped: Vec<usize> = p
                .covers1()
                .iter()
                .filter(|c| c.0 == i)
                .map(|c| c.1)
                .collect();
            flipped.sort_unstable();
            let mut mutated: Vec<usize> = left_mutations(&states[i])
                .iter()
                .map(|s| {
                    states
                        .iter()
                        .position(|x| x == s)
                        .expect("mutation is a state")
                })
                .collect();
            mutated.sort_unstable();
            ensure!(
                flipped == mutated,
                "d={d} n={n} T{i}: covers {flipped:?}, mutations {mutated:?}"
            );
            for j in 0..p.len() {
                let by_perp = hst2_by_perp(&states[i], &states[j]).unwrap();
                ensure!(p.hst2_leq(i, j) == by_perp, "d={d} n={n}: T{i} vs T{j}");
            }
            let sub = submersion_set(p.element(i)).tuples;
            for a in &internal {
                ensure!(
                    sub.contains(a) == perps[i].contains(a),
                    "d={d} n={n} T{i}: {a} submerged {} but in perp {}",
                    sub.contains(a),
                    perps[i].contains(a)
                );
            }
        }
    }
    Ok(())
}

fn orders_equal() -> Outcome {
    for delta in 1..=4usize {
        for m in delta + 1..=9 {
            let p = poset(m, delta);
            let c = p.coincidence();
            ensure!(
                c.first_implies_second,
                "C({m},{delta}): first order not inside second"
            );
            ensure!(
                c.equal,
                "C({m},{delta}): orders differ at {:?}",
                c.counterexample
            );
            if delta == 2 || delta == 3 {
                let (ok, witness) = p.hst1().is_lattice();
                ensure!(ok, "C({m},{delta}) is not a lattice: {witness:?}");
            }
        }
    }
    Ok(())
}

const GREEN_GRID: [(usize, usize); 5] = [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3)];

fn green_bijection() -> Outcome {
    for (d, n) in GREEN_GRID {
        let classes = GreenSystem::build(d, n, Limits::default())
            .unwrap()
            .classes()
            .len();
        let odd = count(n + 2 * d + 1, 2 * d + 1);
        ensure!(
            classes == odd,
            "d={d} n={n}: {classes} classes, {odd} triangulations"
        );
    }
    Ok(())
}

fn a2_example() -> Outcome {
    let seqs = enumerate_green_sequences(1, 2, Limits::default()).unwrap();
    ensure!(seqs.len() == 2, "{} sequences", seqs.len());
    let (g, g2) = (&seqs[0], &seqs[1]);
    ensure!(
        summand_set(g) == digit_set(&["13", "14", "24", "25", "35"]),
        "Σ(G) = {:?}",
        summand_set(g)
    );
    ensure!(
        summand_set(g2) == digit_set(&["13", "14", "25", "35"]),
        "Σ(G′) = {:?}",
        summand_set(g2)
    );
    ensure!(
        is_increasing_polygonal_deformation(g, g2).unwrap(),
        "G′ is not a deformation of G"
    );
    ensure!(
        !is_increasing_polygonal_deformation(g2, g).unwrap(),
        "deformation runs both ways"
    );
    let sys = GreenSystem::build(1, 2, Limits::default()).unwrap();
    ensure!(
        sys.deformations() == [(0, 1)],
        "deformations {:?}",
        sys.deformations()
    );
    let classes = sys.classes();
    ensure!(
        green_leq_2(&classes[0], &classes[1]).unwrap(),
        "Σ(G) ⊉ Σ(G′)"
    );
    ensure!(
        !green_leq_2(&classes[1], &classes[0]).unwrap(),
        "Σ(G′) ⊇ Σ(G)"
    );
    ensure!(
        g.flips() == [digits("1234"), digits("1245"), digits("2345")],
        "G flips {:?}",
        g.flips()
    );
    Ok(())
}

fn green_orders() -> Outcome {
    for (d, n) in GREEN_GRID {
        let sys = GreenSystem::build(d, n, Limits::default()).unwrap();
        let odd = sys.odd_poset();
        let k = sys.classes().len();
        let mut image: Vec<usize> = (0..k).map(|c| sys.odd_index(c)).collect();
        image.sort_unstable();
        image.dedup();
        ensure!(
            image.len() == k && k == odd.len(),
            "d={d} n={n}: classes do not biject"
        );
        for a in 0..k {
            for b in 0..k {
                let (x, y) = (sys.odd_index(a), sys.odd_index(b));
                ensure!(
                    sys.green_leq_1(a, b) == odd.hst1_leq(x, y),
                    "d={d} n={n}: first order at {a},{b}"
                );
                ensure!(
                    sys.green_leq_2(a, b) == odd.hst2_leq(x, y),
                    "d={d} n={n}: second order at {a},{b}"
                );
            }
        }
        if d == 1 {
            ensure!(sys.leq1() == sys.leq2(), "n={n}: class orders differ");
            let (ok, witness) = sys.leq1().is_lattice();
            ensure!(ok, "n={n}: not a lattice, {witness:?}");
        }
    }
    Ok(())
}

fn structure() -> Outcome {
    for (d, n) in even_grid(9) {
        let p = poset(n + 2 * d, 2 * d);
        let expected = binomial((n + d - 1) as u64, d as u64) as usize;
        let size = p.element(0).len();
        for t in p.elements() {
            let e = upper_set_tuples(t).unwrap();
            ensure!(
                e.len() == expected,
                "{t}: |e(T)| = {}, expected {expected}",
                e.len()
            );
            ensure!(
                t.len() == size,
                "{t}: {} simplices, others have {size}",
                t.len()
            );
        }
    }
    for delta in 1..=6usize {
        for m in delta + 1..=9 {
            for t in enumerate_triangulations(spec(m, delta), Limits::default()).unwrap() {
                for flip in increasing_flips(&t)
                    .iter()
                    .chain(decreasing_flips(&t).iter())
                {
                    let back =
                        apply_flip(&apply_flip(&t, flip).unwrap(), &flip.reversed()).unwrap();
                    ensure!(back == t, "{t}: flip on {} is not undone", flip.support);
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let c = |name, limit_secs, check| Criterion {
        name,
        limit_secs,
        check,
    };
    let criteria = [
        c("triangulation counts", 10, counts as fn() -> Outcome),
        c("C(7,4) tables", 1, table_reproduction),
        c("facet criterion", 30, facet_criterion),
        c(
            "flips, mutations and perpendicular categories",
            120,
            tilting_correspondence,
        ),
        c("equality of the orders and lattices", 300, orders_equal),
        c("green classes and odd triangulations", 120, green_bijection),
        c("A_2 worked example", 1, a2_example),
        c("orders on green classes", 300, green_orders),
        c("structural invariants", 120, structure),
    ];
    let mut failed = 0;
    for (
        k,
        Criterion {
            name,
            limit_secs: limit,
            check,
        },
    ) in criteria.iter().enumerate()
    {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".to_string()));
        let took = start.elapsed();
        let outcome = outcome.and_then(|()| {
            if took > Duration::from_secs(*limit) {
                Err(format!("exceeded the {limit} s limit"))
            } else {
                Ok(())
            }
        });
        match outcome {
            Ok(()) => println!(
                "criterion {}: PASS  {name} ({took:.2?}, limit {limit} s)",
                k + 1
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({took:.2?}): {why}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} acceptance criteria failed");
        ExitCode::FAILURE
    }
}
