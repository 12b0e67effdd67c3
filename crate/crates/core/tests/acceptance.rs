//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use circbetti::betti::{betti_hochster, betti_join, betti_join_all, BettiTable};
use circbetti::formulas::{
    betti_cycle, betti_cycle_complement, betti_h1, betti_h2, betti_h3, betti_multipartite,
    binomial_identities_check, reg_h1,
};
use circbetti::graph::{family_graph, FamilySpec, Graph};
use circbetti::homology::FieldSpec;
use circbetti::properties::{classification_oracle, compute_report, induced_matching_number};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn hochster(g: &Graph, field: FieldSpec) -> Result<BettiTable, String> {
    betti_hochster(g, field).map_err(|e| e.to_string())
}

fn family(f: FamilySpec) -> Result<Graph, String> {
    family_graph(&f).map_err(|e| e.to_string())
}

fn h1_sweep(field: FieldSpec) -> Outcome {
    let mut count = 0;
    for n in 5..=14 {
        for j in 1..=n / 2 {
            let formula = betti_h1(n, j).map_err(|e| e.to_string())?;
            let oracle = hochster(&family(FamilySpec::H1 { n, j })?, field)?;
            check(formula == oracle, || {
                format!("table mismatch at H1({n},{j})")
            })?;
            check(oracle.regularity() == reg_h1(n, j), || {
                format!(
                    "regularity {} != {} at H1({n},{j})",
                    oracle.regularity(),
                    reg_h1(n, j)
                )
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} instances"))
}

fn cycle_formula(field: FieldSpec) -> Outcome {
    for m in 5..=16 {
        let formula = betti_cycle(m).map_err(|e| e.to_string())?;
        let oracle = hochster(&Graph::cycle(m).unwrap(), field)?;
        check(formula == oracle, || format!("table mismatch at C_{m}"))?;
        check(oracle.proj_dim() == (2 * m + 1) / 3, || {
            format!("pd of C_{m}")
        })?;
        check(oracle.regularity() == (m + 1) / 3, || {
            format!("reg of C_{m}")
        })?;
    }
    Ok("m = 5..16".into())
}

fn h2_sweep(field: FieldSpec) -> Outcome {
    for (l, m) in [(2, 5), (2, 6), (2, 7), (3, 5), (3, 6), (2, 8)] {
        let formula = betti_h2(l, m).map_err(|e| e.to_string())?;
        let oracle = hochster(&family(FamilySpec::H2 { l, m })?, field)?;
        let seed = hochster(&Graph::cycle(m).unwrap(), field)?;
        let joined = betti_join_all(std::iter::repeat_n(&seed, l)).expect("l >= 1");
        check(joined == oracle, || {
            format!("join recursion mismatch at H2({l},{m})")
        })?;
        if formula != oracle {
            let diff: Vec<String> = oracle
                .entries()
                .map(|(i, d, _)| (i, d))
                .chain(formula.entries().map(|(i, d, _)| (i, d)))
                .filter(|&(i, d)| formula.get(i, d) != oracle.get(i, d))
                .map(|(i, d)| format!("({i},{d}): {} vs {}", formula.get(i, d), oracle.get(i, d)))
                .collect();
            return Err(format!(
                "formula mismatch at H2({l},{m}): {}",
                diff.join(", ")
            ));
        }
    }
    Ok("6 instances".into())
}

fn h3_sweep(field: FieldSpec) -> Outcome {
    let mut count = 0;
    for l in 2..=8 {
        for m in 2..=16 / l {
            let g = family(FamilySpec::H3 { l, m })?;
            let oracle = hochster(&g, field)?;
            let formula = betti_multipartite(&vec![m; l]).map_err(|e| e.to_string())?;
            let equal_parts = betti_h3(l, m).map_err(|e| e.to_string())?;
            check(formula == oracle && equal_parts == oracle, || {
                format!("table mismatch at H3({l},{m})")
            })?;
            check(oracle.entries().all(|(i, d, _)| d == i + 1), || {
                format!("entry off the linear strand at H3({l},{m})")
            })?;
            check(
                oracle.regularity() == 1 && oracle.proj_dim() == l * m - 1,
                || format!("reg/pd at H3({l},{m})"),
            )?;
            let nu = induced_matching_number(&g).map_err(|e| e.to_string())?;
            check(nu == 1, || {
                format!("induced matching number {nu} at H3({l},{m})")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} instances"))
}

fn random_factor(rng: &mut ChaCha8Rng, budget: usize) -> (String, Graph) {
    loop {
        let size = rng.gen_range(1..=budget);
        match rng.gen_range(0..4) {
            0 if size >= 3 => return (format!("C_{size}"), Graph::cycle(size).unwrap()),
            1 if size >= 2 => {
                return (
                    format!("co-C_{size}"),
                    Graph::cycle_complement(size).unwrap(),
                )
            }
            2 => return (format!("P_{size}"), Graph::path(size).unwrap()),
            3 => return (format!("E_{size}"), Graph::edgeless(size).unwrap()),
            _ => {}
        }
    }
}

fn join_recursion() -> Outcome {
    let q = FieldSpec::Rationals;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    for _ in 0..50 {
        let (gname, g) = random_factor(&mut rng, 13);
        let (hname, h) = random_factor(&mut rng, 14 - g.n());
        let (tg, th) = (hochster(&g, q)?, hochster(&h, q)?);
        let joined = hochster(&g.join(&h).unwrap(), q)?;
        check(betti_join(&tg, &th) == joined, || {
            format!("{gname} * {hname}")
        })?;
        if g.edge_count() > 0 || h.edge_count() > 0 {
            let expected = tg.regularity().max(th.regularity());
            check(joined.regularity() == expected, || {
                format!("regularity of {gname} * {hname}")
            })?;
        }
    }
    Ok("50 random pairs".into())
}

fn properties() -> Outcome {
    let mut instances = Vec::new();
    for n in 5..=12 {
        instances.extend((1..=n / 2).map(|j| FamilySpec::H1 { n, j }));
    }
    for l in 1..=4 {
        instances.extend((3..=14 / l).map(|m| FamilySpec::H2 { l, m }));
    }
    for l in 2..=6 {
        instances.extend((2..=12 / l).map(|m| FamilySpec::H3 { l, m }));
    }
    for f in &instances {
        let computed =
            compute_report(&family(*f)?, FieldSpec::Rationals).map_err(|e| e.to_string())?;
        let predicted = classification_oracle(f);
        check(computed.hierarchy_holds(), || {
            format!("hierarchy violated at {f}")
        })?;
        check(computed == predicted, || {
            format!("{f} differs on {:?}", computed.differences(&predicted))
        })?;
    }
    Ok(format!("{} instances", instances.len()))
}

fn spot_values() -> Outcome {
    let c5 = hochster(&Graph::cycle(5).unwrap(), FieldSpec::Rationals)?;
    let expected: Vec<(usize, usize, u64)> = vec![(1, 2, 5), (2, 3, 5), (3, 5, 1)];
    let got: Vec<(usize, usize, u64)> = c5
        .entries()
        .map(|(i, d, _)| (i, d, c5.get_u64(i, d)))
        .collect();
    check(got == expected, || format!("C_5 table {got:?}"))?;
    for k in 4..=12 {
        let g = Graph::cycle_complement(k).unwrap();
        let t = hochster(&g, FieldSpec::Rationals)?;
        check(t == betti_cycle_complement(k).unwrap(), || {
            format!("co-C_{k} table")
        })?;
        check(t.get_u64(k - 2, k) == 1, || {
            format!("beta_(k-2,k) at k = {k}")
        })?;
        for i in 1..k {
            let mirrored = if i + 2 <= k {
                t.get_u64(k - i - 2, k - i - 1)
            } else {
                0
            };
            let value = t.get_u64(i, i + 1);
            if i <= k - 3 {
                check(value == mirrored, || {
                    format!("palindromicity at k = {k}, i = {i}")
                })?;
            } else {
                check(value == 0, || {
                    format!("nonzero linear entry at k = {k}, i = {i}")
                })?;
            }
        }
    }
    Ok("C_5 and co-C_k for k = 4..12".into())
}

fn identity_battery() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    for _ in 0..1000 {
        let (u, v, t) = (
            rng.gen_range(0..=40),
            rng.gen_range(0..=40),
            rng.gen_range(0..=40),
        );
        check(binomial_identities_check(u, v, t), || {
            format!("identities fail at ({u},{v},{t})")
        })?;
    }
    Ok("1000 sampled triples".into())
}

fn characteristic_two() -> Outcome {
    let f = FieldSpec::Prime(2);
    let parts = [h1_sweep(f)?, cycle_formula(f)?, h2_sweep(f)?, h3_sweep(f)?];
    Ok(format!("criteria 1-4 over GF(2): {}", parts.join("; ")))
}

type Criterion = Box<dyn Fn() -> Outcome>;

fn main() -> ExitCode {
    let q = FieldSpec::Rationals;
    let criteria: Vec<(&str, Criterion)> = vec![
        ("H1 sweep", Box::new(move || h1_sweep(q))),
        ("cycle formula", Box::new(move || cycle_formula(q))),
        ("H2 sweep", Box::new(move || h2_sweep(q))),
        ("H3 and multipartite", Box::new(move || h3_sweep(q))),
        ("join recursion", Box::new(join_recursion)),
        ("property classifications", Box::new(properties)),
        ("spot values", Box::new(spot_values)),
        ("identity battery", Box::new(identity_battery)),
        ("characteristic robustness", Box::new(characteristic_two)),
    ];
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let id = (k + 1).to_string();
        if !filter.is_empty() && !filter.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {id} [{name}]: PASS ({detail}; {secs:.1}s)"),
            Err(why) => {
                failures += 1;
                println!("criterion {id} [{name}]: FAIL ({why}; {secs:.1}s)");
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
