//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use hedet::conjecture::{check_prop41, check_theorem44, verify_a4, verify_prop43, verify_small_critical};
use hedet::encode::assemble_l;
use hedet::graphs::{
    canonical_form, complete, cycle, graph6_parse, is_k_colorable, join, tensor_product, CanonicalKey, Graph,
};
use hedet::groebner::{buchberger, contains_one, elimination_ideal, normal_form, s_polynomial, GbConfig, Ideal};
use hedet::poly::{parse_polynomial, Monomial, MonomialOrder, Polynomial, Rational, VarSet, Variable};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

struct Outcome {
    pass: bool,
    note: String,
}

fn outcome(pass: bool, note: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        note: note.into(),
    }
}

fn cli_json(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["hedet", "--no-ledger", "--format", "json"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = hedet::cli::run_with(argv, &mut out, &mut err);
    let v = serde_json::from_slice(&out).unwrap_or(Value::Null);
    (code, v)
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

/// Runs a CLI command expecting a single record; returns (verdict, elapsed).
fn cli_verdict(args: &[&str]) -> (String, Duration) {
    let t = Instant::now();
    let (code, v) = cli_json(args);
    let verdict = v["records"][0]["verdict"].as_str().unwrap_or("missing").to_string();
    let verdict = if code == 0 {
        verdict
    } else {
        format!("{verdict} (exit {code})")
    };
    (verdict, t.elapsed())
}

fn c1() -> Outcome {
    let budget = Duration::from_secs(30 * 60);
    let mut notes = Vec::new();
    let mut pass = true;
    for (n, np) in [("4", "4"), ("4", "5")] {
        let (v, t) = cli_verdict(&["thm44", "3", n, np]);
        pass &= v == "true" && t <= budget;
        notes.push(format!("thm44 3 {n} {np} = {v} in {}", secs(t)));
    }
    outcome(pass, format!("{} (budget 1800s each)", notes.join(", ")))
}

fn c2() -> Outcome {
    let budget = Duration::from_secs(10 * 60);
    let mut notes = Vec::new();
    let mut pass = true;
    for h in ["H0", "Grotzsch"] {
        let (v, t) = cli_verdict(&["pair", "H0", h, "--k", "4"]);
        pass &= v == "true" && t <= budget;
        notes.push(format!("pair H0 {h} k=4 = {v} in {}", secs(t)));
    }
    outcome(
        pass,
        format!("{} (budget 600s each; oracle cross-check inside)", notes.join(", ")),
    )
}

fn c3() -> Outcome {
    let budget = Duration::from_secs(10 * 60);
    let mut notes = Vec::new();
    let mut pass = true;
    for (a, b) in [(5, 5), (5, 7), (7, 7)] {
        let (ga, gb) = (cycle(a).unwrap(), cycle(b).unwrap());
        let oracle = !is_k_colorable(&tensor_product(&ga, &gb), 2);
        let (v, t) = cli_verdict(&["pair", &format!("C{a}"), &format!("C{b}"), "--k", "3"]);
        let ok = v == "true" && oracle && t <= budget;
        pass &= ok;
        notes.push(format!("C{a}xC{b} = {v} (oracle {oracle}) in {}", secs(t)));
    }
    outcome(pass, notes.join(", "))
}

fn c4() -> Outcome {
    let t = Instant::now();
    match verify_a4() {
        Ok(r) => {
            let pass = r.classes == 7
                && r.triangle_free_vertex.len() == 1
                && r.h0_identified
                && t.elapsed() <= Duration::from_secs(600);
            outcome(
                pass,
                format!(
                    "{} vertex-critical classes, {} with a vertex in no triangle, H0 identified: {}; {} of them edge-critical; {}",
                    r.classes,
                    r.triangle_free_vertex.len(),
                    r.h0_identified,
                    r.edge_critical,
                    secs(t.elapsed())
                ),
            )
        }
        Err(e) => outcome(false, e.to_string()),
    }
}

fn keyset(gs: &[Graph]) -> Vec<CanonicalKey> {
    let mut k: Vec<CanonicalKey> = gs.iter().map(|g| canonical_form(g).unwrap()).collect();
    k.sort();
    k
}

fn found_upto(k: usize, max_n: usize, only_n: Option<usize>) -> Vec<Graph> {
    let r = verify_small_critical(k, max_n).unwrap();
    r.rows
        .iter()
        .filter(|row| only_n.is_none_or(|n| row.n == n))
        .flat_map(|row| row.found.iter().map(|s| graph6_parse(s).unwrap()))
        .collect()
}

fn c5() -> Outcome {
    let three = keyset(&found_upto(3, 7, None)) == keyset(&[complete(3), cycle(5).unwrap(), cycle(7).unwrap()]);
    let four_small = keyset(&found_upto(4, 5, None)) == keyset(&[complete(4)]);
    let four_six = keyset(&found_upto(4, 6, Some(6))) == keyset(&[join(&complete(1), &cycle(5).unwrap())]);
    outcome(
        three && four_small && four_six,
        format!("3-critical ≤7 = {{K3,C5,C7}}: {three}; 4-critical ≤5 = {{K4}}: {four_small}; order 6 = {{K1+C5}}: {four_six}"),
    )
}

fn labeled_graphs(n: usize) -> Vec<Graph> {
    let m = n * (n - 1) / 2;
    (0..1u32 << m)
        .map(|mask| hedet::conjecture::labeled_graph(n, mask as u64))
        .collect()
}

fn c6() -> Outcome {
    let t = Instant::now();
    let mut small = Vec::new();
    for n in 1..=3 {
        small.extend(labeled_graphs(n));
    }
    let agree = |g: &Graph, h: &Graph, k: usize| {
        let alg = contains_one(&assemble_l(g, h, k).unwrap()).unwrap();
        let oracle = !is_k_colorable(&tensor_product(g, h), k - 1);
        if alg != oracle {
            eprintln!("mismatch k={k}: G={g} H={h} algebra={alg} oracle={oracle}");
        }
        alg == oracle
    };
    let (mut runs, mut mismatches) = (0, 0);
    for g in &small {
        for h in &small {
            for k in [3, 4] {
                runs += 1;
                mismatches += !agree(g, h, k) as usize;
            }
        }
    }
    let exhaustive = runs;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let four = labeled_graphs(4);
    for i in 0..200 {
        let g = four.choose(&mut rng).unwrap();
        let h = four.choose(&mut rng).unwrap();
        runs += 1;
        mismatches += !agree(g, h, 3 + i % 2) as usize;
    }
    outcome(
        mismatches == 0,
        format!(
            "{exhaustive} exhaustive + {} random runs, {mismatches} mismatches, {}",
            runs - exhaustive,
            secs(t.elapsed())
        ),
    )
}

fn c7() -> Outcome {
    let cfg = GbConfig::default();
    let t333 = check_theorem44(3, 3, 3, &cfg).map(|r| r.holds);
    let p333 = check_prop41(3, 3, 3);
    let t344 = check_theorem44(3, 4, 4, &cfg).map(|r| r.holds);
    let p344 = check_prop41(3, 4, 4);
    match (t333, p333, t344, p344) {
        (Ok(a), Ok(b), Ok(c), Ok(d)) => outcome(
            a && b.holds && b.v_size == 0 && c == d.holds && b.holds_vertex_one == b.holds && d.holds_vertex_one == d.holds,
            format!(
                "(3,3,3): algebraic {a}, combinatorial {} with |V| = {}; (3,4,4): algebraic {c}, combinatorial {} (|W| = {}, |V| = {})",
                b.holds, b.v_size, d.holds, d.w_size, d.v_size
            ),
        ),
        (a, b, c, d) => outcome(false, format!("error: {:?} {:?} {:?} {:?}", a.err(), b.err(), c.err(), d.err())),
    }
}

fn p(s: &str) -> Polynomial {
    parse_polynomial(s).unwrap()
}

fn ideal(gens: &[&str]) -> Ideal {
    Ideal::from_generators(gens.iter().map(|g| p(g)).collect())
}

/// Ten fixed ideals in x_1, x_2, x_3 of degree at most 3.
const IDEALS: [&[&str]; 10] = [
    &["x_1^2 + x_2^2 - 1", "x_1 - x_2"],
    &["x_1*x_2 - 1", "x_2^2 - x_1"],
    &["x_1^2 - x_2", "x_1^3 - x_3"],
    &["x_1 - 1", "x_1"],
    &["x_1*x_2", "x_2*x_3", "x_1*x_3"],
    &["x_1^2 - 1", "x_2^2 - 1", "x_1*x_2 - x_3"],
    &["x_1 + x_2 + x_3", "x_1*x_2 + x_2*x_3 + x_3*x_1", "x_1*x_2*x_3 - 1"],
    &["x_1^3 - x_2*x_3", "x_2^2 - x_1*x_3"],
    &["x_1^2*x_2 - x_3^2", "x_1*x_3 - x_2"],
    &["x_1^3 - 2*x_1*x_2", "x_1^2*x_2 - 2*x_2^2 + x_1"],
];

fn monomials_upto(d: u32) -> Vec<Monomial> {
    let v = [Variable::x(1), Variable::x(2), Variable::x(3)];
    let mut out = Vec::new();
    for a in 0..=d {
        for b in 0..=d - a {
            for c in 0..=d - a - b {
                out.push(Monomial::from_pairs(
                    v.into_iter().zip([a, b, c]).filter(|(_, e)| *e > 0),
                ));
            }
        }
    }
    out
}

/// Whether `f = sum h_i g_i` with every `deg h_i ≤ bound`, decided by
/// Gaussian elimination over the rationals.
fn cofactor_member(f: &Polynomial, gens: &[Polynomial], bound: u32) -> bool {
    let cof = monomials_upto(bound);
    // columns: (generator, cofactor monomial); rows: monomials of the products and f
    let mut cols: Vec<HashMap<Monomial, Rational>> = Vec::new();
    for g in gens {
        for m in &cof {
            cols.push(g.mul_monomial(m).terms().iter().cloned().collect());
        }
    }
    let mut rows: Vec<Monomial> = cols.iter().flat_map(|c| c.keys().cloned()).collect();
    rows.extend(f.terms().iter().map(|(m, _)| m.clone()));
    rows.sort_by_key(|m| m.to_string());
    rows.dedup();
    let w = cols.len() + 1;
    let mut a: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| {
            let mut row: Vec<Rational> = cols.iter().map(|c| c.get(r).cloned().unwrap_or_default()).collect();
            row.push(f.coefficient(r));
            row
        })
        .collect();
    // Row reduction; the system is consistent iff no pivot lands in the last column.
    let mut pivot_row = 0;
    for col in 0..w {
        let Some(pr) = (pivot_row..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(pivot_row, pr);
        let inv = a[pivot_row][col].inv();
        let prow: Vec<Rational> = a[pivot_row].iter().map(|x| x * &inv).collect();
        for (r, row) in a.iter_mut().enumerate() {
            if r != pivot_row && !row[col].is_zero() {
                let factor = row[col].clone();
                for c in col..w {
                    let sub = &factor * &prow[c];
                    row[c] = &row[c] - &sub;
                }
            }
        }
        a[pivot_row] = prow;
        if col == w - 1 {
            return false;
        }
        pivot_row += 1;
    }
    true
}

fn random_poly(rng: &mut ChaCha8Rng, deg: u32) -> Polynomial {
    let ms = monomials_upto(deg);
    let terms = (0..rng.gen_range(1..5)).map(|_| {
        (
            ms.choose(rng).unwrap().clone(),
            Rational::from_int(rng.gen_range(-3..4)),
        )
    });
    Polynomial::from_terms(terms)
}

fn c8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    // (a) reduced bases do not depend on generator order
    let mut shuffle_fail = 0;
    for gens in IDEALS {
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            let reference = buchberger(&ideal(gens), &order).unwrap().basis;
            for _ in 0..50 {
                let mut g: Vec<Polynomial> = gens.iter().map(|s| p(s)).collect();
                g.shuffle(&mut rng);
                if buchberger(&Ideal::from_generators(g), &order).unwrap().basis != reference {
                    shuffle_fail += 1;
                }
            }
        }
    }
    // (b) normal-form membership against the linear-algebra oracle
    let (mut tested, mut members, mut nf_fail) = (0, 0, 0);
    for gens in IDEALS {
        let gs: Vec<Polynomial> = gens.iter().map(|s| p(s)).collect();
        let gb = buchberger(&Ideal::from_generators(gs.clone()), &MonomialOrder::Grevlex).unwrap();
        let mut candidates: Vec<Polynomial> = (0..10).map(|_| random_poly(&mut rng, 3)).collect();
        for _ in 0..10 {
            let mut f = Polynomial::zero();
            for g in &gs {
                f = &f + &(&random_poly(&mut rng, 1) * g);
            }
            candidates.push(f);
        }
        for f in candidates {
            let alg = gb.contains(&f);
            let oracle = cofactor_member(&f, &gs, 4);
            tested += 1;
            members += alg as usize;
            if alg != oracle {
                nf_fail += 1;
                eprintln!("membership mismatch: f = {f}, ideal {gens:?}: normal form {alg}, cofactors {oracle}");
            }
        }
    }
    // (c) worked examples
    let lex = MonomialOrder::Lex;
    let x2 = VarSet::of([Variable::x(2)]);
    let x23 = VarSet::of([Variable::x(2), Variable::x(3)]);
    let examples = [
        normal_form(&p("x_1^2"), &[p("x_1 - 1")], &lex) == Polynomial::one(),
        normal_form(&p("x_1^2*x_2 + 1"), &[p("x_1 - x_2")], &lex) == p("x_2^3 + 1"),
        s_polynomial(&p("x_1^2 - 1"), &p("x_1 - 1"), &lex) == p("x_1 - 1"),
        buchberger(&ideal(&["x_1^2 + x_2^2 - 1", "x_1 - x_2"]), &lex)
            .unwrap()
            .basis
            == [p("x_2^2 - 1/2"), p("x_1 - x_2")],
        elimination_ideal(&ideal(&["x_1 - x_2", "x_1"]), &x2)
            .unwrap()
            .generators()
            == [p("x_2")],
        elimination_ideal(&ideal(&["x_1"]), &x2).unwrap().is_empty(),
        elimination_ideal(&ideal(&["x_1 - x_2^2", "x_1 - x_3"]), &x23)
            .unwrap()
            .generators()
            == [p("x_2^2 - x_3")],
    ];
    let ex_ok = examples.iter().filter(|b| **b).count();
    outcome(
        shuffle_fail == 0 && nf_fail == 0 && ex_ok == examples.len(),
        format!(
            "1000 shuffled bases, {shuffle_fail} differ; {tested} membership tests ({members} members), {nf_fail} oracle mismatches; {ex_ok}/{} worked examples",
            examples.len()
        ),
    )
}

fn c9() -> Outcome {
    let bad: Vec<usize> = (2..=10).filter(|&k| !verify_prop43(k)).collect();
    outcome(
        bad.is_empty(),
        format!("identity checked for k = 2..10, failures: {bad:?}"),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("inclusion test (3,4,4) and (3,4,5)", c1),
        ("fixed pairs H0/H0 and H0/Grotzsch at k=4", c2),
        ("cycle pairs at k=3", c3),
        ("order-7 4-critical family", c4),
        ("small critical catalogues", c5),
        ("fixed-pair ideal vs colouring oracle", c6),
        ("algebraic vs combinatorial route", c7),
        ("Gröbner engine suite", c8),
        ("cyclotomic identity", c9),
    ];
    let mut passed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = f();
        passed += o.pass as usize;
        println!(
            "criterion {} {}: {name}: {} [{}]",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.note,
            secs(t.elapsed())
        );
    }
    println!("acceptance: {passed}/{} criteria passed", criteria.len());
    if passed != criteria.len() {
        std::process::exit(1);
    }
}
