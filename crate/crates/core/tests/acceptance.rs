//! Acceptance suite. Prints one line per criterion and exits non-zero if any
//! criterion fails. Every comparison is exact.

use std::process::ExitCode;

use horadam::graph::{build_graph, degree_histogram, is_proper_coloring, two_coloring};
use horadam::hamilton::{cycle_guaranteed, hamiltonian_cycle, hamiltonian_path, path_endpoints, validate_walk, CycleOutcome};
use horadam::oracle::{brute_edge_count, brute_median_closed, brute_subcube_count};
use horadam::sequences::{
    cube_coefficient_rows, cube_coefficients, cube_number, cube_polynomial, degree_rows, degree_table,
    edge_count, edge_count_binomial, edge_count_convolution, fibonacci_number, vertex_count, vertex_count_closed,
    vertex_counts,
};
use horadam::series::{nonnegative_row, GeneratingFunction, Order};
use horadam::structure::{canonical_partition, check_embedding, grid_partition, median_of_triple, quotient_graph};
use horadam::{Params, Word};
use num_bigint::BigUint;

type Check = Result<Option<String>, String>;

fn params(a: u32, b: u32, n: usize) -> Params {
    Params::new(a, b, n).expect("valid parameters")
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn word(s: &str) -> Word {
    Word(s.bytes().map(|c| c - b'0').collect())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn grid(lo: u32, hi: u32) -> impl Iterator<Item = (u32, u32)> {
    (lo..=hi).flat_map(move |a| (lo..=hi).map(move |b| (a, b)))
}

fn small(p: &Params, cap: u64) -> bool {
    vertex_count(p) <= big(cap)
}

fn sequence_identities() -> Check {
    for (a, b) in grid(1, 4) {
        let s = GeneratingFunction::Vertices
            .expand(a, b, Order::new(25, 0))
            .map_err(|e| e.to_string())?;
        for n in 0..=25 {
            let p = params(a, b, n);
            let (rec, closed) = (vertex_count(&p), vertex_count_closed(&p));
            let coeff = s.coeff(n).to_biguint();
            ensure(rec == closed && Some(&rec) == coeff.as_ref(), || {
                format!("{p}: recurrence {rec}, closed form {closed}, series {coeff:?}")
            })?;
        }
    }
    for (a, b, n, want) in [(1, 1, 5, 8), (2, 1, 4, 29), (1, 2, 5, 21)] {
        let got = vertex_count(&params(a, b, n));
        ensure(got == big(want), || format!("s({a},{b},{n}) = {got}, expected {want}"))?;
    }
    Ok(None)
}

fn edge_formulas() -> Check {
    for (a, b) in grid(1, 4) {
        let e = GeneratingFunction::Edges
            .expand(a, b, Order::new(25, 0))
            .map_err(|e| e.to_string())?;
        for n in 1..=25 {
            let p = params(a, b, n);
            let rec = edge_count(&p);
            let conv = edge_count_convolution(&p);
            let binom = edge_count_binomial(&p);
            let coeff = e.coeff(n).to_biguint();
            ensure(rec == conv && rec == binom && Some(&rec) == coeff.as_ref(), || {
                format!("{p}: recurrence {rec}, convolution {conv}, binomial {binom}, series {coeff:?}")
            })?;
            if small(&p, 2000) {
                let g = build_graph(&p).map_err(|e| e.to_string())?;
                let brute = brute_edge_count(&g).map_err(|e| e.to_string())?;
                ensure(big(brute) == rec, || format!("{p}: pairwise scan {brute}, formula {rec}"))?;
            }
        }
    }
    for (a, b, n, want) in [(3, 2, 2, 14), (2, 2, 4, 88), (2, 1, 4, 58)] {
        let got = edge_count(&params(a, b, n));
        ensure(got == big(want), || format!("e({a},{b},{n}) = {got}, expected {want}"))?;
    }
    Ok(None)
}

fn special_identities() -> Check {
    for b in 1..=4 {
        for n in 0..=25 {
            let p = params(2, b, n);
            let (e, s) = (edge_count(&p), vertex_count(&p));
            ensure(e.clone() * 2u32 == s.clone() * n, || format!("{p}: 2e = {}, ns = {}", e * 2u32, s * n))?;
        }
        let s = vertex_counts(1, b, 25);
        // s_{-1} = 0
        let shifted = |i: usize| if i == 0 { big(0) } else { s[i - 1].clone() };
        for n in 0..=25 {
            let sum: BigUint = (0..n).map(|k| shifted(k) * shifted(n - k)).sum();
            let e = edge_count(&params(1, b, n));
            ensure(e == sum.clone() * b, || format!("a=1 b={b} n={n}: e = {e}, convolution {}", sum * b))?;
        }
    }
    Ok(None)
}

type Criterion = (&'static str, fn() -> Check);
type DegreeTable = ((u32, u32), Vec<Vec<u64>>);

fn published_degrees() -> [DegreeTable; 3] {
    [
        ((1, 2), vec![vec![1, 0, 0, 0, 0], vec![2, 1], vec![2, 3], vec![1, 4, 5, 1], vec![0, 5, 10, 6]]),
        (
            (2, 2),
            vec![
                vec![2],
                vec![1, 4, 1],
                vec![0, 4, 8, 4],
                vec![0, 1, 12, 18, 12, 1],
                vec![0, 0, 6, 32, 44, 32, 6],
            ],
        ),
        (
            (3, 2),
            vec![
                vec![2, 1],
                vec![1, 4, 5, 1],
                vec![0, 4, 10, 16, 8, 1],
                vec![0, 1, 12, 30, 47, 37, 11, 1],
                vec![0, 0, 6, 35, 92, 142, 138, 67, 14, 1],
            ],
        ),
    ]
}

fn degree_tables() -> Check {
    for (a, b) in grid(1, 4) {
        for n in 0..=8 {
            let p = params(a, b, n);
            if !small(&p, 20_000) {
                continue;
            }
            let table = degree_table(&p).map_err(|e| e.to_string())?;
            let hist = degree_histogram(&build_graph(&p).map_err(|e| e.to_string())?);
            let from_table: Vec<(usize, BigUint)> = table.nonzero();
            let from_graph: Vec<(usize, BigUint)> = hist.into_iter().map(|(k, c)| (k, big(c))).collect();
            ensure(from_table == from_graph, || format!("{p}: table {from_table:?}, graph {from_graph:?}"))?;
        }
    }
    // The published table starts at degree 1; its first row for (1, 2) puts
    // the single vertex of Π_1 under degree 1 although it has degree 0.
    let mut flagged = Vec::new();
    for ((a, b), rows) in published_degrees() {
        for (i, published) in rows.iter().enumerate() {
            let n = i + 1;
            let table = degree_table(&params(a, b, n)).map_err(|e| e.to_string())?;
            for k in 0..=2 * n + 1 {
                // degree 0 is not a published column
                let want = if k == 0 { 0 } else { published.get(k - 1).copied().unwrap_or(0) };
                let got = table.get(k);
                if got != big(want) {
                    if (a, b, n) == (1, 2, 1) && k <= 1 {
                        let shown = if k == 0 { "no column".to_string() } else { want.to_string() };
                        flagged.push(format!("a={a} b={b} n={n} k={k}: computed {got}, published {shown}"));
                    } else {
                        return Err(format!("a={a} b={b} n={n} k={k}: computed {got}, published {want}"));
                    }
                }
            }
        }
    }
    ensure(flagged.len() == 2, || format!("expected two flagged cells, found {flagged:?}"))?;
    Ok(Some(format!("flagged published cells: {}", flagged.join("; "))))
}

fn cube_coefficient_checks() -> Check {
    for (a, b) in grid(1, 3) {
        for n in 0..=5 {
            let p = params(a, b, n);
            let g = build_graph(&p).map_err(|e| e.to_string())?;
            let table = cube_coefficients(&p);
            for k in 0..=4 {
                let brute = brute_subcube_count(&g, k).map_err(|e| e.to_string())?;
                ensure(big(brute) == table.get(k), || format!("{p} k={k}: scan {brute}, recurrence {}", table.get(k)))?;
            }
            let poly = cube_polynomial(&p);
            ensure(poly.coefficients == table.values, || format!("{p}: polynomial {poly} disagrees"))?;
            ensure(cube_number(&p) == table.total(), || format!("{p}: cube number {}", cube_number(&p)))?;
        }
    }
    let published: [((u32, u32), [&str; 6]); 2] = [
        ((1, 2), ["1", "1", "2x+3", "4x+5", "4x^2+14x+11", "12x^2+32x+21"]),
        (
            (3, 2),
            [
                "1",
                "2x+3",
                "4x^2+14x+11",
                "8x^3+44x^2+74x+39",
                "16x^4+120x^3+316x^2+350x+139",
                "32x^5+304x^4+1096x^3+1884x^2+1554x+495",
            ],
        ),
    ];
    for ((a, b), polys) in published {
        for (n, want) in polys.iter().enumerate() {
            let got = cube_polynomial(&params(a, b, n)).to_string();
            ensure(got == *want, || format!("a={a} b={b} n={n}: {got}, published {want}"))?;
        }
    }
    Ok(None)
}

fn structure_checks() -> Check {
    for (a, b) in grid(1, 4) {
        for n in 0..=8 {
            let p = params(a, b, n);
            if !small(&p, 5000) {
                continue;
            }
            let g = build_graph(&p).map_err(|e| e.to_string())?;
            ensure(is_proper_coloring(&g, &two_coloring(&g)), || format!("{p}: coloring not proper"))?;
            check_embedding(&g).map_err(|e| e.to_string())?;
            if n >= 1 {
                let classes = grid_partition(&g).map_err(|e| e.to_string())?;
                ensure(big(classes.len() as u64) == fibonacci_number(n + 1), || format!("{p}: {} classes", classes.len()))?;
                quotient_graph(&g).map_err(|e| e.to_string())?;
            }
            if n >= 2 {
                canonical_partition(&g).map_err(|e| e.to_string())?;
            }
        }
    }
    Ok(None)
}

fn median_checks() -> Check {
    let mut instances = 0;
    for (a, b) in grid(1, 4) {
        for n in 0..=8 {
            let p = params(a, b, n);
            if !small(&p, 300) {
                continue;
            }
            let g = build_graph(&p).map_err(|e| e.to_string())?;
            ensure(brute_median_closed(&g).map_err(|e| e.to_string())?, || format!("{p}: not median closed"))?;
            instances += 1;
        }
    }
    let m = median_of_triple(&word("042"), &word("204"), &word("110"), &params(3, 2, 3)).map_err(|e| e.to_string())?;
    ensure(m == word("112"), || format!("median(042, 204, 110) = {:?}", m.letters()))?;
    Ok(Some(format!("{instances} instances")))
}

fn hamiltonicity() -> Check {
    let mut cycles = 0;
    for (a, b) in grid(1, 4) {
        for n in 1..=7 {
            let p = params(a, b, n);
            let g = build_graph(&p).map_err(|e| e.to_string())?;
            let path = hamiltonian_path(&g).map_err(|e| e.to_string())?;
            let contract = path_endpoints(&p).map_err(|e| e.to_string())?;
            ensure(
                validate_walk(&g, &path)
                    && g.vertex(path.vertices[0]) == &contract.start
                    && g.vertex(*path.vertices.last().unwrap()) == &contract.end,
                || format!("{p}: path does not meet its contract"),
            )?;
            let odd = g.order() % 2 == 1;
            match hamiltonian_cycle(&g).map_err(|e| e.to_string())? {
                CycleOutcome::Cycle(c) => {
                    ensure(!odd && cycle_guaranteed(&p) && validate_walk(&g, &c), || format!("{p}: bad cycle"))?;
                    cycles += 1;
                }
                CycleOutcome::Impossible { .. } => ensure(odd, || format!("{p}: impossible with even order"))?,
                CycleOutcome::NotGuaranteed => {
                    ensure(!odd && !cycle_guaranteed(&p), || format!("{p}: no cycle in a guaranteed class"))?
                }
            }
        }
    }
    for (a, b, n) in [(2, 2, 4), (1, 3, 5)] {
        let g = build_graph(&params(a, b, n)).map_err(|e| e.to_string())?;
        ensure(matches!(hamiltonian_cycle(&g), Ok(CycleOutcome::Cycle(_))), || format!("a={a} b={b} n={n}: no cycle"))?;
    }
    Ok(Some(format!("{cycles} cycles")))
}

fn generating_functions() -> Check {
    const N: usize = 12;
    for (a, b) in grid(1, 3) {
        let delta = GeneratingFunction::Degrees
            .expand(a, b, Order::new(N, 2 * N + 1))
            .map_err(|e| e.to_string())?;
        let rows = degree_rows(a, b, N).map_err(|e| e.to_string())?;
        let cubes = GeneratingFunction::Cubes
            .expand(a, b, Order::new(N, N + 1))
            .map_err(|e| e.to_string())?;
        let cube_rows = cube_coefficient_rows(a, b, N);
        for n in 0..=N {
            ensure(nonnegative_row(&delta, n).as_ref() == Some(&rows[n]), || {
                format!("a={a} b={b} n={n}: degree series row differs")
            })?;
            ensure(nonnegative_row(&cubes, n).as_ref() == Some(&cube_rows[n]), || {
                format!("a={a} b={b} n={n}: cube series row differs")
            })?;
        }
    }
    Ok(None)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("sequence identities", sequence_identities),
        ("edge formulas", edge_formulas),
        ("a=1 and a=2 edge identities", special_identities),
        ("degree tables", degree_tables),
        ("cube coefficients", cube_coefficient_checks),
        ("structure", structure_checks),
        ("median closure", median_checks),
        ("hamiltonicity", hamiltonicity),
        ("generating functions", generating_functions),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(None) => println!("criterion {} ({name}): PASS", i + 1),
            Ok(Some(note)) => println!("criterion {} ({name}): PASS [{note}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL [{why}]", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
