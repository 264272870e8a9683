//! Acceptance criteria, one PASS/FAIL line each.

mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use multiserial::defining_pair::{generate_relations, nilpotency_bound, validate};
use multiserial::oracle::{oracle_dimension, Generators, OracleOptions};
use multiserial::presentation::{check_lemma_properties, derive_successors, maximal_paths};
use multiserial::symmetrize::{
    dimension_comparison, symmetrization, verify_quotient, Justification, RelationType,
};
use multiserial::{CycleAlgebra, DefiningPair, Rationals};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, what: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn oracle_of_pair(pair: &DefiningPair) -> Result<usize, String> {
    let gens = Generators::from(&generate_relations(pair));
    oracle_dimension(&Rationals, pair.quiver(), &gens, nilpotency_bound(pair), OracleOptions::default())
        .map(|r| r.dimension)
        .map_err(|e| e.to_string())
}

fn loop_mu2() -> Outcome {
    let pair = common::loop_mu2();
    let alg = CycleAlgebra::new(&pair).map_err(|e| e.to_string())?;
    ensure(alg.dimension() == 3, format!("closed-form dimension {}", alg.dimension()))?;
    let oracle = oracle_of_pair(&pair)?;
    ensure(oracle == 3, format!("oracle dimension {oracle}"))?;
    let g = alg.gram_matrix(&Rationals);
    ensure(g.dimension() == 3 && g.is_permutation(), "Gram is not a 3x3 permutation matrix")?;
    ensure(g.rank == 3, format!("Gram rank {}", g.rank))?;
    let basis = alg.basis();
    ensure(basis.len() * basis.len() == 9, "expected 9 basis pairs")?;
    let sym = alg.check_trace_symmetry();
    ensure(sym.passed, format!("trace symmetry: {:?}", sym.witnesses))
}

fn a3_gentle() -> Outcome {
    let p = common::a3_gentle();
    let t = derive_successors(&p).map_err(|e| e.to_string())?;
    let q = p.quiver();
    let ms: Vec<String> = maximal_paths(q, &t)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|m| q.format_path(m))
        .collect();
    ensure(ms == ["a", "b"], format!("maximal paths {ms:?}"))?;
    let sym = symmetrization(&p).map_err(|e| e.to_string())?;
    let gained = sym.star.quiver().arrow_count() - q.arrow_count();
    ensure(gained == 2, format!("Q* gained {gained} arrows"))?;
    ensure(sym.pair.len() == 4, format!("|S| = {}", sym.pair.len()))?;
    let alg = CycleAlgebra::new(&sym.pair).map_err(|e| e.to_string())?;
    ensure(alg.dimension() == 18, format!("closed-form dim A* = {}", alg.dimension()))?;
    let oracle_star = oracle_of_pair(&sym.pair)?;
    ensure(oracle_star == 18, format!("oracle dim A* = {oracle_star}"))?;
    let cmp = dimension_comparison(&Rationals, &p, OracleOptions::default()).map_err(|e| e.to_string())?;
    ensure(cmp.algebra == 5, format!("oracle dim A = {}", cmp.algebra))?;
    let cert = verify_quotient(&p).map_err(|e| e.to_string())?;
    ensure(cert.is_complete(), "certificate has uncertified generators")?;
    ensure(cert.failures().count() == 0, "failures present")
}

fn two_cycle() -> Outcome {
    let p = common::two_cycle();
    let sym = symmetrization(&p).map_err(|e| e.to_string())?;
    ensure(sym.star.star_arrows().is_empty(), "maximal paths present")?;
    ensure(sym.star.quiver() == p.quiver(), "Q* differs from Q")?;
    let q = sym.pair.quiver();
    let cycles: Vec<(String, u32)> = sym
        .pair
        .entries()
        .map(|(c, m)| (q.format_path(c.path()), m))
        .collect();
    ensure(
        cycles == [("a b".to_string(), 3), ("b a".to_string(), 3)],
        format!("S = {cycles:?}"),
    )?;
    let alg = CycleAlgebra::new(&sym.pair).map_err(|e| e.to_string())?;
    ensure(alg.dimension() == 14, format!("dim A* = {}", alg.dimension()))?;
    let oracle_star = oracle_of_pair(&sym.pair)?;
    ensure(oracle_star == 14, format!("oracle dim A* = {oracle_star}"))?;
    let cmp = dimension_comparison(&Rationals, &p, OracleOptions::default()).map_err(|e| e.to_string())?;
    ensure(cmp.algebra == 6, format!("dim A = {}", cmp.algebra))?;
    let cert = verify_quotient(&p).map_err(|e| e.to_string())?;
    ensure(cert.is_complete(), "certificate incomplete")?;
    let type2: Vec<_> = cert.entries.iter().filter(|e| e.kind == RelationType::Type2).collect();
    ensure(type2.len() == 2, format!("{} type 2 generators", type2.len()))?;
    ensure(
        type2
            .iter()
            .all(|e| matches!(e.justification, Justification::LongPath { .. })),
        "type 2 image not certified as a long path",
    )
}

fn random_pairs() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xdef1);
    let mut accepted = 0;
    let mut attempts = 0;
    while accepted < 200 {
        attempts += 1;
        ensure(attempts < 10_000, "could not draw 200 valid pairs")?;
        let pair = common::random_pair_candidate(&mut rng);
        if !validate(&pair).passed() {
            continue;
        }
        let alg = CycleAlgebra::new(&pair).map_err(|e| e.to_string())?;
        let label = format!("pair #{accepted}");
        let oracle = oracle_of_pair(&pair)?;
        ensure(alg.dimension() == oracle, format!("{label}: closed form {} vs oracle {oracle}", alg.dimension()))?;
        let g = alg.gram_matrix(&Rationals);
        ensure(g.is_permutation(), format!("{label}: Gram not a permutation matrix"))?;
        ensure(g.rank == alg.dimension(), format!("{label}: rank {} < {}", g.rank, alg.dimension()))?;
        ensure(alg.check_trace_symmetry().passed, format!("{label}: trace symmetry"))?;
        ensure(
            alg.check_special_multiserial().iter().all(|c| c.passed),
            format!("{label}: special multiserial"),
        )?;
        ensure(alg.check_nilpotency_bound().passed, format!("{label}: long paths survive"))?;
        accepted += 1;
    }
    Ok(())
}

fn random_presentations() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e5);
    for i in 0..200 {
        let p = common::random_presentation(&mut rng);
        let label = format!("presentation #{i}");
        let sym = symmetrization(&p).map_err(|e| format!("{label}: {e}"))?;
        ensure(validate(&sym.pair).passed(), format!("{label}: symmetrization is not a defining pair"))?;
        let cert = verify_quotient(&p).map_err(|e| e.to_string())?;
        ensure(cert.is_complete(), format!("{label}: certificate incomplete"))?;
        let lemma = check_lemma_properties(p.quiver(), &sym.tables).map_err(|e| e.to_string())?;
        ensure(lemma.items.len() == 7 && lemma.passed(), format!("{label}: lemma {lemma:?}"))?;
        let cmp = dimension_comparison(&Rationals, &p, OracleOptions::default()).map_err(|e| e.to_string())?;
        ensure(cmp.holds(), format!("{label}: dim A {} > dim A* {}", cmp.algebra, cmp.symmetric))?;
    }
    Ok(())
}

fn radical_square_zero() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x2);
    for i in 0..50 {
        let p = common::radical_square_zero(&mut rng);
        let label = format!("radical-square-zero #{i}");
        let sym = symmetrization(&p).map_err(|e| format!("{label}: {e}"))?;
        ensure(
            sym.star.star_arrows().len() == p.quiver().arrow_count(),
            format!("{label}: every arrow should be its own maximal path"),
        )?;
        ensure(validate(&sym.pair).passed(), format!("{label}: not a defining pair"))?;
        CycleAlgebra::new(&sym.pair).map_err(|e| format!("{label}: {e}"))?;
        let cert = verify_quotient(&p).map_err(|e| e.to_string())?;
        ensure(cert.is_complete(), format!("{label}: certificate incomplete"))?;
    }
    Ok(())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 6] = [
        ("1 loop-mu2 fixture", loop_mu2, Duration::from_secs(1)),
        ("2 A3-gentle fixture", a3_gentle, Duration::from_secs(5)),
        ("3 2-cycle fixture", two_cycle, Duration::from_secs(5)),
        ("4 random defining pairs", random_pairs, Duration::from_secs(60)),
        ("5 random presentations", random_presentations, Duration::from_secs(120)),
        ("6 radical square zero", radical_square_zero, Duration::from_secs(120)),
    ];
    let mut failed = Vec::new();
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed < limit, format!("took {elapsed:?}, limit {limit:?}"))
        });
        // written to the raw handle so the lines survive output capture
        let line = match &outcome {
            Ok(()) => format!("PASS  criterion {name} ({elapsed:.2?})"),
            Err(why) => {
                failed.push(name);
                format!("FAIL  criterion {name} ({elapsed:.2?}): {why}")
            }
        };
        writeln!(std::io::stdout(), "{line}").unwrap();
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
