//! Acceptance run: one PASS/FAIL line per criterion on stdout, details of
//! failures on stderr, nonzero exit if any criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use dglie::dgla::{build_counterexample, choose_y, derivation_identity, ideal_span_at_degree, CounterexampleSpec};
use dglie::elimination::{ses_dimension_check, wlb2_schedule, wlb2_schedule_basis};
use dglie::exactlin::{rat, span, KeyedSubspace, Vector};
use dglie::freelie::{expand, Alphabet, FreeLie, Generator, LieElement, TensorElement, Word};
use dglie_cli::{cmd_ce_check, cmd_counterexample, cmd_dual_example, cmd_table1, cmd_table2, Preset, Report};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRng, TestRunner};

#[derive(Default)]
struct Outcome {
    failures: Vec<String>,
}

impl Outcome {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, got: T, want: T, what: &str) {
        if got != want {
            self.failures.push(format!("{what}: got {got:?}, want {want:?}"));
        }
    }

    fn report(&mut self, r: &Report) {
        for f in r.failures() {
            self.failures.push(format!("{} assertion failed: {f}", r.command));
        }
    }
}

fn criterion(n: u32, title: &str, limit: Duration, body: fn(&mut Outcome)) -> bool {
    let start = Instant::now();
    let mut out = Outcome::default();
    if let Err(p) = panic::catch_unwind(AssertUnwindSafe(|| body(&mut out))) {
        let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default();
        out.failures.push(format!("panicked: {msg}"));
    }
    let took = start.elapsed();
    out.check(took <= limit, format!("runtime {:.1} s exceeds {} s", took.as_secs_f64(), limit.as_secs()));
    let pass = out.failures.is_empty();
    println!("criterion {n}: {} {title} ({:.2} s)", if pass { "PASS" } else { "FAIL" }, took.as_secs_f64());
    for f in &out.failures {
        eprintln!("  criterion {n}: {f}");
    }
    pass
}

fn mobius(mut n: u64) -> i64 {
    let mut m = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            m = -m;
        }
        p += 1;
    }
    if n > 1 {
        m = -m;
    }
    m
}

fn multinomial(parts: &[u64]) -> i128 {
    let mut acc: i128 = 1;
    let mut total: i128 = 0;
    for &k in parts {
        for i in 1..=k as i128 {
            total += 1;
            acc = acc * total / i;
        }
    }
    acc
}

/// Dimension of the multidegree-`alpha` part of the free graded Lie algebra
/// on generators of odd degree, by the Möbius-inverted necklace count with
/// the super sign `(-1)^{n + n/d}`.
fn witt_odd(alpha: &[u64]) -> usize {
    let n: u64 = alpha.iter().sum();
    if n == 0 {
        return 0;
    }
    let g = alpha.iter().fold(0u64, |g, &x| gcd(g, x));
    let mut sum: i128 = 0;
    for d in (1..=g).filter(|d| g % d == 0) {
        let parts: Vec<u64> = alpha.iter().map(|x| x / d).collect();
        let sign = if (n + n / d).is_multiple_of(2) { 1 } else { -1 };
        sum += mobius(d) as i128 * sign * multinomial(&parts);
    }
    assert_eq!(sum % n as i128, 0);
    (sum / n as i128) as usize
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn col(r: &Report, table: &str, column: &str) -> Vec<i64> {
    r.table(table).and_then(|t| t.column(column)).unwrap_or_else(|| panic!("{} lacks {table}.{column}", r.command))
}

fn table1_reproduction(o: &mut Outcome) {
    let r = cmd_table1(10).unwrap();
    o.report(&r);
    o.eq(col(&r, "table1", "wl"), (2..=10).collect(), "table1 word lengths");
    o.eq(col(&r, "table1", "dim"), vec![1, 1, 1, 2, 3, 3, 3, 4, 5], "table1 dims");
    o.eq(cmd_table1(2).unwrap().to_tsv(), "wl\tdim\n2\t1\n".to_string(), "table1 at max_wl 2");
    let r = cmd_table1(14).unwrap();
    o.report(&r);
    let want: Vec<i64> = (2..=14u64).map(|n| witt_odd(&[n - 2, 2]) as i64).collect();
    o.eq(col(&r, "table1", "dim"), want, "table1 dims up to 14 against the necklace count");
    o.check(cmd_table1(15).is_err(), "max_wl 15 is rejected");
}

const TABLE2: [[i64; 9]; 9] = [
    [1, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 1, 0, 0, 0, 0, 0, 0],
    [0, 1, 1, 0, 0, 0, 0, 0, 0],
    [0, 1, 1, 1, 0, 0, 0, 0, 0],
    [0, 1, 2, 2, 1, 0, 0, 0, 0],
    [0, 1, 3, 3, 3, 1, 0, 0, 0],
    [0, 1, 3, 5, 5, 3, 1, 0, 0],
    [0, 1, 3, 7, 8, 7, 3, 1, 0],
    [0, 1, 4, 9, 14, 14, 9, 4, 1],
];
const TABLE2_SUMS: [i64; 9] = [2, 3, 2, 3, 6, 11, 18, 30, 56];

fn table2_reproduction(o: &mut Outcome) {
    let r = cmd_table2(9).unwrap();
    o.report(&r);
    let t = r.table("table2").unwrap();
    o.eq(t.rows.len(), 9, "table2 rows");
    for (k, row) in t.rows.iter().enumerate() {
        let j = k as u64 + 1;
        o.eq(row.cells[0], j as i64, "row index");
        o.eq(&row.cells[1..10], &TABLE2[k][..], &format!("table2 row {j}"));
        o.eq(row.cells[10], TABLE2_SUMS[k], &format!("table2 sum {j}"));
        let oracle: Vec<i64> = (0..9u64).map(|i| if i <= j { witt_odd(&[j - i, i]) as i64 } else { 0 }).collect();
        o.eq(&row.cells[1..10], &oracle[..], &format!("table2 row {j} against the necklace count"));
    }
}

fn elimination_consistency(o: &mut Outcome) {
    let a = Generator::new("a", 3).unwrap();
    let b = Generator::new("b", 3).unwrap();
    let (_, states) = wlb2_schedule(&a, &b, 9).unwrap();
    o.check(states.len() > 3, "schedule performed its splits");
    for pair in states.windows(2) {
        let x = &pair[1].history.last().unwrap().element;
        let rep = ses_dimension_check(&pair[0], &pair[1], x).unwrap();
        o.check(rep.ok(), format!("split {} fails at degrees {:?}", pair[1].stage, rep.failures()));
    }
    let basis = wlb2_schedule_basis(&a, &b, 9).unwrap();
    let lie = FreeLie::new(Alphabet::new(vec![a, b]).unwrap());
    for n in 1..=9 {
        let ours: Vec<&TensorElement> = basis.iter().filter(|e| e.wordlength == n).map(|e| &e.tensor).collect();
        let brute = lie.basis_bigraded(n, 1, 2);
        let mut s_ours: KeyedSubspace<Word> = KeyedSubspace::new();
        let independent = ours.iter().all(|t| s_ours.insert(t.terms()));
        let mut s_brute: KeyedSubspace<Word> = KeyedSubspace::new();
        for m in &brute {
            s_brute.insert(m.tensor.terms());
        }
        let same = s_ours.dim() == s_brute.dim() && ours.iter().all(|t| s_brute.contains(t.terms()));
        o.check(independent && same, format!("schedule basis differs from the brute-force layer at word length {n}"));
    }
}

fn relation_margins(o: &mut Outcome) {
    let lie = FreeLie::new(Alphabet::from_pairs(&[("a", 3), ("b", 3)]).unwrap());
    let mut prior: Vec<LieElement> = Vec::new();
    for j in [1u32, 3, 5, 7] {
        let c = choose_y(&lie, 0, 1, j, &prior).unwrap();
        o.eq(c.degree, 6 + 3 * j, &format!("degree of y_{j}"));
        o.eq(c.layer_dim, (j as usize).div_ceil(2), &format!("layer dim at y_{j}"));
        o.eq(c.layer_dim, witt_odd(&[j as u64, 2]), &format!("layer dim at y_{j} against the necklace count"));
        o.eq(c.ideal_dim, (j as usize - 1) / 2, &format!("ideal dim at y_{j}"));
        let ideal = ideal_span_at_degree(&lie, &prior, c.degree).unwrap();
        o.check(!ideal.contains(expand(lie.alphabet(), &c.y).terms()), format!("y_{j} lies in the ideal of the earlier relations"));
        prior.push(c.y);
    }
}

fn counterexample_case(o: &mut Outcome, deg_a: u32, deg_b: u32, count: u32) {
    let start = Instant::now();
    let r = cmd_counterexample(deg_a, deg_b, count, 30, true).unwrap();
    let took = start.elapsed();
    o.check(took <= Duration::from_secs(120), format!("({deg_a},{deg_b}) took {:.1} s", took.as_secs_f64()));
    let tag = format!("({deg_a},{deg_b},{count},30)");
    o.report(&r);
    let want_gens: Vec<i64> = [deg_a, deg_b].into_iter().chain((0..count).map(|k| 2 * deg_b + (2 * k + 1) * deg_a + 1)).map(i64::from).collect();
    o.eq(col(&r, "generators", "degree"), want_gens, &format!("{tag} generator degrees"));
    let mut want_sph = vec![(deg_a as i64, 1), (deg_b as i64, 1)];
    if deg_a == deg_b {
        want_sph = vec![(deg_a as i64, 2)];
    }
    want_sph.sort();
    let got_sph: Vec<(i64, i64)> = col(&r, "spherical", "degree").into_iter().zip(col(&r, "spherical", "dim")).collect();
    o.eq(got_sph, want_sph, &format!("{tag} spherical homology"));
    o.eq(col(&r, "odd_homology_growth", "dim"), (1..=count as i64).collect(), &format!("{tag} odd homology by count"));
    let degrees = col(&r, "homology", "degree");
    let h = col(&r, "homology", "dim");
    let q = col(&r, "homology", "quotient");
    for k in 0..degrees.len() {
        o.check(h[k] == q[k], format!("{tag} degree {}: H = {}, quotient = {}", degrees[k], h[k], q[k]));
    }
}

fn counterexample_verification(o: &mut Outcome) {
    counterexample_case(o, 3, 3, 4);
    counterexample_case(o, 3, 5, 3);
    counterexample_case(o, 5, 3, 2);
}

fn dual_example(o: &mut Outcome) {
    let r = cmd_dual_example(3, 3, 14).unwrap();
    o.report(&r);
    // generators a (3), b (2), n_i (2i + 2); the differential has no linear part
    let mut want_pi = [0i64; 15];
    for d in [3usize, 2, 4, 6, 8] {
        want_pi[d] += 1;
    }
    o.eq(col(&r, "homotopy", "dim"), want_pi[1..].to_vec(), "homotopy dims");
    let pi = col(&r, "homotopy", "dim");
    let odd: i64 = col(&r, "homotopy", "degree").iter().zip(&pi).filter(|(d, _)| *d % 2 == 1).map(|(_, k)| k).sum();
    o.eq(odd, 1, "odd homotopy total");
    let sph: Vec<(i64, i64)> = col(&r, "spherical", "degree").into_iter().zip(col(&r, "spherical", "dim")).filter(|(_, k)| *k > 0).collect();
    o.eq(sph, vec![(2, 1), (3, 1)], "spherical cohomology");
    o.check(r.assertion("every n_i is non-spherical") == Some(true), "n_i non-spherical");
    o.check(r.table("classes").is_some_and(|t| !t.rows.is_empty()), "degree 12 classes reported");
}

fn ce_duality(o: &mut Outcome) {
    let r = cmd_ce_check(Preset::SphereOdd, 8).unwrap();
    o.report(&r);
    o.eq(col(&r, "cohomology", "cochains"), vec![1, 0, 0, 0, 1, 0, 0, 0], "four-sphere cohomology");
    let r = cmd_ce_check(Preset::WedgeTwoSpheres, 4).unwrap();
    o.report(&r);
    let h = col(&r, "cohomology", "cochains");
    o.eq(h.iter().sum::<i64>(), 3, "wedge total cohomology in degrees up to 3");
    o.eq(h, vec![1, 0, 0, 2], "wedge cohomology");
    let r = cmd_ce_check(Preset::CounterexampleDefault, 20).unwrap();
    o.report(&r);
    let h = col(&r, "cohomology", "cochains");
    let even: i64 = h.iter().enumerate().filter(|(i, _)| *i > 0 && i % 2 == 0).map(|(_, k)| k).sum();
    o.eq(even, 2, "counter-example even cohomology");
    o.eq(h, col(&r, "cohomology", "generators"), "counter-example cochains against generator homology");
}

const CASES: u32 = 1000;

fn runner() -> TestRunner {
    let config = Config { cases: CASES, failure_persistence: None, ..Config::default() };
    let rng = TestRng::deterministic_rng(config.rng_algorithm);
    TestRunner::new_with_rng(config, rng)
}

fn sample(lie: &FreeLie, wl: u32, pick: usize, coeffs: &[i64]) -> (u32, TensorElement) {
    let mds: Vec<_> = lie.multidegrees_of_wordlength(wl).into_iter().filter(|m| lie.dim_multidegree(m) > 0).collect();
    let md = &mds[pick % mds.len()];
    let mut t = TensorElement::zero();
    for (b, c) in lie.basis_multidegree(md).iter().zip(coeffs.iter().cycle()) {
        t.add_scaled(&b.tensor, &rat(*c));
    }
    (lie.alphabet().multidegree_degree(md), t)
}

fn sign(p: u32) -> i64 {
    if p % 2 == 1 {
        -1
    } else {
        1
    }
}

fn property_suites(o: &mut Outcome) {
    let algebras: Vec<FreeLie> = [vec![("a", 1), ("b", 2)], vec![("a", 3), ("b", 3)], vec![("a", 2), ("b", 3), ("c", 1)]]
        .iter()
        .map(|p| FreeLie::new(Alphabet::from_pairs(p).unwrap()))
        .collect();
    let coeffs = || prop::collection::vec(-3i64..4, 1..4);

    let res = runner().run(&(0usize..3, 1u32..4, 1u32..4, 0usize..8, 0usize..8, coeffs(), coeffs()), |(alg, w1, w2, p1, p2, c1, c2)| {
        let lie = &algebras[alg];
        let (du, u) = sample(lie, w1, p1, &c1);
        let (dv, v) = sample(lie, w2, p2, &c2);
        prop_assert_eq!(u.commutator(&v, lie.alphabet()), v.commutator(&u, lie.alphabet()).scaled(&rat(-sign(du * dv))));
        Ok(())
    });
    o.check(res.is_ok(), format!("graded antisymmetry: {res:?}"));

    let res = runner().run(&(0usize..3, (1u32..3, 1u32..3, 1u32..3), (0usize..8, 0usize..8, 0usize..8), coeffs(), coeffs()), |(alg, w, p, c1, c2)| {
        let lie = &algebras[alg];
        let alph = lie.alphabet();
        let (dx, x) = sample(lie, w.0, p.0, &c1);
        let (dy, y) = sample(lie, w.1, p.1, &c2);
        let (dz, z) = sample(lie, w.2, p.2, &c1);
        let mut total = x.commutator(&y.commutator(&z, alph), alph).scaled(&rat(sign(dx * dz)));
        total.add_scaled(&y.commutator(&z.commutator(&x, alph), alph), &rat(sign(dy * dx)));
        total.add_scaled(&z.commutator(&x.commutator(&y, alph), alph), &rat(sign(dz * dy)));
        prop_assert!(total.is_zero());
        Ok(())
    });
    o.check(res.is_ok(), format!("graded Jacobi: {res:?}"));

    let cx = build_counterexample(&CounterexampleSpec::new(3, 3, 2, 26)).unwrap();
    let d = &cx.dgla;
    let res = runner().run(&(1u32..3, 1u32..3, 0usize..16, 0usize..16, coeffs()), |(w1, w2, p1, p2, c)| {
        let (du, u) = sample(d.lie(), w1, p1, &c);
        let (dv, v) = sample(d.lie(), w2, p2, &c);
        if du + dv > d.max_degree() {
            return Err(TestCaseError::reject("above cap"));
        }
        prop_assert!(derivation_identity(d, &u, du, &v));
        Ok(())
    });
    o.check(res.is_ok(), format!("derivation rule: {res:?}"));

    let res = runner().run(&(1usize..7, prop::collection::vec(prop::collection::vec(-4i64..5, 6), 0..7)), |(n, rows)| {
        let vectors: Vec<Vector> = rows.iter().map(|r| Vector::from_ints(&r[..n])).collect();
        let s = span(n, &vectors).unwrap();
        prop_assert_eq!(&span(n, &s.rows()).unwrap(), &s);
        for v in &vectors {
            prop_assert!(s.reduce(v.to_sparse()).is_empty());
        }
        Ok(())
    });
    o.check(res.is_ok(), format!("idempotent RREF: {res:?}"));

    for lie in &algebras {
        for wl in 1..=7 {
            let basis = lie.basis_wordlength(wl);
            let mut s: KeyedSubspace<Word> = KeyedSubspace::new();
            for b in &basis {
                s.insert(b.tensor.terms());
            }
            o.eq(s.dim(), basis.len(), &format!("expansion rank at word length {wl}"));
        }
    }
}

fn main() -> ExitCode {
    let s = Duration::from_secs;
    let results = [
        criterion(1, "two-b basis dimensions by word length", s(5), table1_reproduction),
        criterion(2, "dimension grid by word length and b-count", s(30), table2_reproduction),
        criterion(3, "elimination consistency up to word length 9", s(600), elimination_consistency),
        criterion(4, "relation margins at the relation degrees", s(60), relation_margins),
        criterion(5, "counter-example verification for (3,3), (3,5), (5,3)", s(360), counterexample_verification),
        criterion(6, "dual example", s(600), dual_example),
        criterion(7, "cochain duality on the presets", s(600), ce_duality),
        criterion(8, "property suites", s(600), property_suites),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("{passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
