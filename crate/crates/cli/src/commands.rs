use dglie::dgla::{build_counterexample, verify_counterexample, CounterexampleSpec, Dgla};
use dglie::elimination::wlb2_schedule_basis;
use dglie::exactlin::KeyedSubspace;
use dglie::freelie::{dim_formula_wlb2, Alphabet, FreeLie, Generator, Word};
use dglie::sullivan::{
    build_dual_example, ce_dualize, check_d_squared, cohomology, generator_homology_shifted, homotopy_groups, is_spherical_generator,
    spherical_cohomology,
};

use crate::config::{largest_count, Preset};
use crate::report::{Report, Table};
use crate::CliError;

fn n(x: usize) -> i64 {
    x as i64
}

fn odd_pair() -> Result<(Generator, Generator), CliError> {
    Ok((Generator::new("a", 3)?, Generator::new("b", 3)?))
}

/// Two-`b` basis by word length, from the elimination schedule, checked
/// against the closed form and the brute-force bigraded basis.
pub fn cmd_table1(max_wl: u32) -> Result<Report, CliError> {
    if !(2..=14).contains(&max_wl) {
        return Err(CliError::Usage(format!("max-wl must lie in 2..=14, got {max_wl}")));
    }
    let (a, b) = odd_pair()?;
    let basis = wlb2_schedule_basis(&a, &b, max_wl)?;
    let lie = FreeLie::new(Alphabet::new(vec![a, b])?);
    let alph = lie.alphabet().clone();

    let mut report = Report::new("table1");
    report.param("max_wl", max_wl);
    report.param("deg_a", 3);
    report.param("deg_b", 3);
    let mut dims = Table::new("table1", &["wl", "dim"]);
    let mut elements = Table::labeled("table1_basis", "element", &["wl", "k", "n-k"]).json_only();
    let (mut formula_ok, mut brute_ok, mut span_ok) = (true, true, true);
    for wl in 1..=max_wl {
        let layer: Vec<_> = basis.iter().filter(|e| e.wordlength == wl).collect();
        formula_ok &= layer.len() == dim_formula_wlb2(wl);
        let brute = lie.basis_bigraded(wl, 1, 2);
        brute_ok &= layer.len() == brute.len();
        let mut span: KeyedSubspace<Word> = KeyedSubspace::new();
        for e in &layer {
            span_ok &= span.insert(e.tensor.terms());
        }
        span_ok &= brute.iter().all(|m| span.contains(m.tensor.terms()));
        if wl >= 2 {
            dims.push(vec![wl as i64, n(layer.len())]);
        }
        for e in layer {
            let (k, rest) = e.factors;
            elements.push_labeled(format!("[{k},{rest}] = {}", e.element.render(&alph)), vec![wl as i64, k as i64, rest as i64]);
        }
    }
    report.tables.push(dims);
    report.tables.push(elements);
    report.check("two-b dimension equals the closed form", formula_ok);
    report.check("two-b dimension equals the brute-force bigraded count", brute_ok);
    report.check("schedule basis is independent and spans the brute-force layer", span_ok);
    Ok(report)
}

/// Dimensions of the free Lie algebra on two odd generators by word length
/// `j` and number `i` of `b`'s.
pub fn cmd_table2(max_wl: u32) -> Result<Report, CliError> {
    if !(1..=10).contains(&max_wl) {
        return Err(CliError::Usage(format!("max-wl must lie in 1..=10, got {max_wl}")));
    }
    let (a, b) = odd_pair()?;
    let lie = FreeLie::new(Alphabet::new(vec![a, b])?);
    let mut report = Report::new("table2");
    report.param("max_wl", max_wl);
    report.param("deg_a", 3);
    report.param("deg_b", 3);
    let names: Vec<String> = std::iter::once("wl".to_string()).chain((0..max_wl).map(|i| format!("b{i}"))).chain(std::iter::once("sum".into())).collect();
    let header: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut grid = Table::new("table2", &header);
    let (mut sums_ok, mut symmetric) = (true, true);
    for j in 1..=max_wl {
        let full: Vec<usize> = (0..=j).map(|i| lie.dim_multidegree(&[j - i, i])).collect();
        let total = lie.dim_wordlength(j);
        sums_ok &= full.iter().sum::<usize>() == total;
        symmetric &= (0..=j as usize).all(|i| full[i] == full[j as usize - i]);
        let mut cells = vec![j as i64];
        cells.extend((0..max_wl as usize).map(|i| n(full.get(i).copied().unwrap_or(0))));
        cells.push(n(total));
        grid.push(cells);
    }
    report.tables.push(grid);
    report.check("row sums equal the word-length dimension", sums_ok);
    report.check("exchanging a and b reflects each row", symmetric);
    Ok(report)
}

/// Builds the counter-example on `a`, `b` with `count` relations and, with
/// `verify`, runs every check on it.
pub fn cmd_counterexample(deg_a: u32, deg_b: u32, count: u32, cap: u32, verify: bool) -> Result<Report, CliError> {
    if count == 0 {
        return Err(CliError::Usage("count must be at least 1".into()));
    }
    let spec = CounterexampleSpec::new(deg_a, deg_b, count, cap);
    spec.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    let cx = build_counterexample(&spec)?;
    let alph = cx.dgla.alphabet();
    let base_alph = cx.base.alphabet();

    let mut report = Report::new("counterexample");
    report.param("deg_a", deg_a);
    report.param("deg_b", deg_b);
    report.param("count", count);
    report.param("cap", cap);
    report.param("verify", verify);

    let mut gens = Table::labeled("generators", "name", &["degree"]);
    for g in alph.generators() {
        gens.push_labeled(g.name(), vec![g.degree() as i64]);
    }
    report.tables.push(gens);
    let mut rels = Table::labeled("relations", "y", &["j", "degree", "layer_dim", "ideal_dim"]);
    for c in &cx.choices {
        rels.push_labeled(c.y.render(base_alph), vec![c.j as i64, c.degree as i64, n(c.layer_dim), n(c.ideal_dim)]);
    }
    report.tables.push(rels);
    report.check("each relation layer exceeds the ideal of the earlier relations", cx.choices.iter().all(|c| c.layer_dim > c.ideal_dim));
    if !verify {
        return Ok(report);
    }

    let r = verify_counterexample(&cx)?;
    let mut gh = Table::new("generator_homology", &["degree", "dim"]);
    for (d, k) in &r.generator_homology {
        gh.push(vec![*d as i64, n(*k)]);
    }
    report.tables.push(gh);
    let mut sph = Table::new("spherical", &["degree", "dim"]);
    for (d, k) in r.spherical.iter().filter(|(_, k)| **k > 0) {
        sph.push(vec![*d as i64, n(*k)]);
    }
    report.tables.push(sph);
    let mut hom = Table::new("homology", &["degree", "dim", "quotient"]);
    for (d, h) in &r.homology {
        hom.push(vec![*d as i64, n(*h), n(r.quotient_oracle[d])]);
    }
    report.tables.push(hom);

    // odd-degree homology of the realization for each prefix of the relations
    let mut growth = Table::new("odd_homology_growth", &["count", "dim"]);
    let mut odd_dims = Vec::new();
    for k in 1..=count {
        let prefix = build_counterexample(&CounterexampleSpec::new(deg_a, deg_b, k, cap))?;
        let shifted = generator_homology_shifted(&prefix.dgla, cap);
        let odd: usize = shifted.iter().filter(|(i, _)| *i % 2 == 1).map(|(_, k)| k).sum();
        growth.push(vec![k as i64, n(odd)]);
        odd_dims.push(odd);
    }
    report.tables.push(growth);

    let in_ab: usize = r.spherical.iter().filter(|(d, _)| **d == deg_a || **d == deg_b).map(|(_, k)| k).sum();
    report.check("differential squares to zero", r.d_squared_zero);
    report.check("differential satisfies the derivation rule", r.derivation_rule);
    report.check("minimal: the differential has no linear part", r.minimal);
    report.check("differential lies in the subalgebra on a and b", r.differential_in_base);
    report.check("even-degree homology of the realization has dimension 2", r.even_space_homology == 2);
    report.check("spherical homology has total dimension 2", r.spherical_total == 2);
    report.check("spherical homology sits in the degrees of a and b", in_ab == r.spherical_total);
    report.check("every added generator is non-spherical", r.x_nonspherical_direct.iter().all(|&b| b));
    report.check("every relation lies outside the ideal of the earlier relations", r.x_outside_prior_ideal.iter().all(|&b| b));
    report.check("ideal saturation agrees with the ad-span closed form", r.ideal_closed_form_agrees.iter().all(|&b| b));
    report.check("odd-degree homology grows strictly with count", odd_dims.windows(2).all(|w| w[0] < w[1]));
    report.check("homology equals the quotient by the relation ideal in every degree", r.homology_matches_oracle);
    report.check("projection onto the quotient is a chain map", r.coformality.chain_map_ok);
    report.check("projection onto the quotient is onto in homology", r.coformality.surjective_ok);
    report.check("projection onto the quotient is a quasi-isomorphism", r.coformality.ok);
    Ok(report)
}

/// Cochain algebra on `a`, `b`, `n_1..n_count` with `d n_1 = ab`, `d n_i = a n_{i-1}`.
pub fn cmd_dual_example(deg_a: u32, count: u32, cap: u32) -> Result<Report, CliError> {
    let s = build_dual_example(deg_a, count, cap).map_err(|e| CliError::Usage(e.to_string()))?;
    let gens = s.gens();
    let top = (0..gens.len()).map(|g| gens.degree(g)).max().unwrap_or(0);
    if top + 1 > cap {
        return Err(CliError::Usage(format!("cap {cap} must exceed the top generator degree {top}")));
    }
    let mut report = Report::new("dual-example");
    report.param("deg_a", deg_a);
    report.param("count", count);
    report.param("cap", cap);

    let mut gt = Table::labeled("generators", "name", &["degree"]);
    let mut dt = Table::labeled("differentials", "d", &["degree"]);
    for g in 0..gens.len() {
        gt.push_labeled(gens.generator(g).name(), vec![gens.degree(g) as i64]);
        if !s.diff(g).is_zero() {
            dt.push_labeled(format!("d {} = {}", gens.generator(g).name(), s.diff(g).render(gens)), vec![gens.degree(g) as i64 + 1]);
        }
    }
    report.tables.push(gt);
    report.tables.push(dt);

    let reliable = cap - 1;
    let mut ct = Table::new("cohomology", &["degree", "dim"]);
    for d in 0..=reliable {
        ct.push(vec![d as i64, n(cohomology(&s, d)?.dim)]);
    }
    report.tables.push(ct);
    let pi = homotopy_groups(&s, cap);
    let mut ht = Table::new("homotopy", &["degree", "dim"]);
    for (d, k) in &pi {
        ht.push(vec![*d as i64, n(*k)]);
    }
    report.tables.push(ht);
    let sph = spherical_cohomology(&s, reliable)?;
    let mut st = Table::new("spherical", &["degree", "dim"]);
    for (d, k) in &sph {
        st.push(vec![*d as i64, n(*k)]);
    }
    report.tables.push(st);

    // closed classes in the degree of n_1^3, reported only
    let probe = 6 * (deg_a - 1);
    if probe <= reliable {
        let h = cohomology(&s, probe)?;
        let mut kt = Table::labeled("classes", "representative", &["degree"]);
        for p in &h.representatives {
            kt.push_labeled(p.render(gens), vec![probe as i64]);
        }
        report.tables.push(kt);
    }

    let pi_odd: usize = pi.iter().filter(|(d, _)| *d % 2 == 1).map(|(_, k)| k).sum();
    let mut n_nonspherical = true;
    for g in 2..gens.len() {
        n_nonspherical &= !is_spherical_generator(&s, g)?;
    }
    report.check("differential squares to zero", check_d_squared(&s));
    report.check("odd homotopy has total dimension 1", pi_odd == 1);
    report.check("spherical cohomology has total dimension 2", sph.values().sum::<usize>() == 2);
    report.check("every n_i is non-spherical", n_nonspherical);
    Ok(report)
}

fn preset_dgla(preset: Preset, cap: u32) -> Result<Dgla, CliError> {
    Ok(match preset {
        Preset::SphereOdd => Dgla::with_zero_differential(Alphabet::from_pairs(&[("a", 3)])?, cap),
        Preset::WedgeTwoSpheres => Dgla::with_zero_differential(Alphabet::from_pairs(&[("a", 2), ("b", 2)])?, cap),
        Preset::CounterexampleDefault => {
            let spec = CounterexampleSpec::new(3, 3, largest_count(3, 3, cap), cap);
            spec.validate().map_err(|e| CliError::Usage(e.to_string()))?;
            build_counterexample(&spec)?.dgla
        }
    })
}

/// Dualizes a preset algebra to cochains and compares cohomology with the
/// shifted homology of the generators, degree by degree.
pub fn cmd_ce_check(preset: Preset, cap: u32) -> Result<Report, CliError> {
    let d = preset_dgla(preset, cap)?;
    let ce = ce_dualize(&d, cap)?;
    let want = generator_homology_shifted(&d, ce.reliable_degree);
    let mut report = Report::new("ce-check");
    report.param("preset", preset.name());
    report.param("cap", cap);
    report.param("reliable_degree", ce.reliable_degree);

    let mut table = Table::new("cohomology", &["degree", "cochains", "generators"]);
    let mut got = Vec::new();
    for i in 0..=ce.reliable_degree {
        let h = cohomology(&ce.algebra, i)?.dim;
        table.push(vec![i as i64, n(h), n(want[&i])]);
        got.push(h);
    }
    report.tables.push(table);
    report.check("cochain differential squares to zero", check_d_squared(&ce.algebra));
    report.check("cochain cohomology equals generator homology in every reliable degree", (0..=ce.reliable_degree).all(|i| got[i as usize] == want[&i]));
    match preset {
        Preset::SphereOdd => {
            let four_sphere = got.iter().enumerate().all(|(i, &h)| h == usize::from(i == 0 || i == 4));
            report.check("cohomology is that of the four-sphere", four_sphere);
        }
        Preset::WedgeTwoSpheres => {
            report.check("total cohomology in degrees up to 3 is 3", got.iter().take(4).sum::<usize>() == 3);
        }
        Preset::CounterexampleDefault => {
            let even: usize = got.iter().enumerate().filter(|(i, _)| *i > 0 && i % 2 == 0).map(|(_, h)| h).sum();
            report.check("reduced even-degree cohomology has total dimension 2", even == 2);
        }
    }
    Ok(report)
}
