//! One line per acceptance criterion. Seeds are fixed and printed; every
//! comparison is exact, and the time budgets are wall-clock limits.

mod common;

use std::time::{Duration, Instant};

use braidkit::braid::relations::verify_suite;
use braidkit::braid::{pure_braid_action, ArtinOracle, BraidWord, Comber, PureGen, PureWord};
use braidkit::homology::{
    betti_bpn, enumerate_simplices, khomology_bpn, khomology_of_2complex, presentation_homology, Presentation,
};
use braidkit::intlinalg::{cokernel, smith_normal_form, AbelianGroup, IntMatrix};
use braidkit::ktheory::{
    amalgam_over_z, b3_identities, certify_theta_trivial, cross_circle, ktheory_pn, xy_recurrence,
};
use braidkit::words::FreeWord;
use common::*;
use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const COMB_SEED: u64 = 0x00C0_FFEE;
const SNF_SEED: u64 = 0x5EED_0009;
const COMB_SAMPLES: usize = 200;
const COMB_MAX_LEN: usize = 12;
const SNF_SAMPLES: usize = 500;
const SNF_MAX_DIM: usize = 6;
const SNF_ENTRY: i64 = 9;
const COKER_BOUND: usize = 200;
const TARGETED_SAMPLES: usize = 120;

type Check = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn s(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn pure(n: usize, text: &str) -> PureWord {
    PureWord::parse(n, text).expect("valid pure word")
}

fn sigma(n: usize, text: &str) -> BraidWord {
    BraidWord::parse(n, text).expect("valid braid word")
}

fn c1_relations() -> Check {
    let oracle = ArtinOracle::default();
    let rep = verify_suite(4, &oracle).map_err(s)?;
    let expected = [
        ("P4 presentation", 11),
        ("R-relations", 6),
        ("R5'", 1),
        ("P4 dictionary", 6),
        ("P3 dictionary", 3),
        ("P4 center", 4),
    ];
    for (label, count) in expected {
        let g = rep.group(label).ok_or_else(|| format!("missing group {label}"))?;
        ensure(g.checks.len() == count && g.all_pass(), || {
            format!("{label}: {}/{} (want {count})", g.passed(), g.checks.len())
        })?;
    }
    ensure(rep.mutations_checked > 0 && rep.mutations_rejected == rep.mutations_checked, || {
        format!("mutations {}/{} rejected", rep.mutations_rejected, rep.mutations_checked)
    })?;
    // the centre identity, rebuilt here from its two sides
    let twist = sigma(4, "s1 s2 s3").pow(4);
    let product = pure(4, "A(1,2) a2 a1 b3 b2 b1").expand().map_err(s)?;
    ensure(oracle.braid_equal(&twist, &product).map_err(s)?, || "(s1 s2 s3)^4 != A12 a2 a1 b3 b2 b1".into())?;
    for i in 1..=3 {
        let si = BraidWord::sigma(4, i, 1).map_err(s)?;
        let lhs = si.multiply(&twist).map_err(s)?;
        let rhs = twist.multiply(&si).map_err(s)?;
        ensure(oracle.braid_equal(&lhs, &rhs).map_err(s)?, || format!("full twist does not commute with s{i}"))?;
    }
    let wrong = pure(4, "A(1,2) a1 a2 b1 b2 b3").expand().map_err(s)?;
    ensure(!oracle.braid_equal(&twist, &wrong).map_err(s)?, || "reversed centre order accepted".into())?;
    Ok(format!(
        "{} relations true, {}/{} mutations false",
        rep.groups.iter().map(|g| g.checks.len()).sum::<usize>(),
        rep.mutations_rejected,
        rep.mutations_checked
    ))
}

fn generator_of(n: usize, label: &str) -> PureGen {
    pure(n, label).letters()[0].0
}

fn c2_tables() -> Check {
    let oracle = ArtinOracle::default();
    let mut entries = 0;
    let mut witnesses = 0;
    for n in 3..=6 {
        for t in 1..n {
            let table = pure_braid_action(n, t).map_err(s)?;
            for (g, al) in table.acting_labels().iter().enumerate() {
                let a = generator_of(n, al).expand(n).map_err(s)?;
                for (x, tl) in table.target_labels().iter().enumerate() {
                    let target = generator_of(n, tl).expand(n).map_err(s)?;
                    let fwd =
                        PureWord::from_level_word(n, t, table.entry(g + 1, x + 1)).map_err(s)?.expand().map_err(s)?;
                    let inv = PureWord::from_level_word(n, t, table.inverse_entry(g + 1, x + 1))
                        .map_err(s)?
                        .expand()
                        .map_err(s)?;
                    let conj = target.conjugate(&a).map_err(s)?;
                    let conj_inv = target.conjugate(&a.invert()).map_err(s)?;
                    ensure(oracle.braid_equal(&conj, &fwd).map_err(s)?, || format!("n={n}: {al} . {tl} wrong"))?;
                    ensure(oracle.braid_equal(&conj_inv, &inv).map_err(s)?, || format!("n={n}: {al}^-1 . {tl} wrong"))?;
                    entries += 2;
                }
            }
            let cert = certify_theta_trivial(&table).map_err(s)?;
            cert.verify().map_err(s)?;
            let want = table.acting_rank() * table.target_rank();
            ensure(cert.forward_witnesses.len() == want && cert.inverse_witnesses.len() == want, || {
                format!("n={n} t={t}: witness count")
            })?;
            for (w, inverse) in cert
                .forward_witnesses
                .iter()
                .map(|w| (w, false))
                .chain(cert.inverse_witnesses.iter().map(|w| (w, true)))
            {
                let entry =
                    if inverse { table.inverse_entry(w.acting, w.target) } else { table.entry(w.acting, w.target) };
                let x = FreeWord::generator(table.target_rank(), w.target).map_err(s)?;
                let rebuilt = w.conjugator.multiply(&x).and_then(|v| v.multiply(&w.conjugator.invert())).map_err(s)?;
                ensure(&w.image == entry && rebuilt == *entry, || format!("n={n} t={t}: bad witness"))?;
                witnesses += 1;
            }
        }
    }
    Ok(format!("{entries} entries oracle-equal, {witnesses} conjugacy witnesses re-checked"))
}

fn c3_homology() -> Check {
    let h = presentation_homology(&Presentation::x_p4());
    let z = AbelianGroup::free;
    ensure((h.h0.clone(), h.h1.clone(), h.h2.clone()) == (z(1), z(5), z(6)), || {
        format!("H = ({}, {}, {})", h.h0, h.h1, h.h2)
    })?;
    let k = khomology_of_2complex(&h.h0, &h.h1, &h.h2);
    ensure((k.k0.clone(), k.k1.clone()) == (z(7), z(5)), || format!("K(X) = {k}"))?;
    let kc = cross_circle(&k);
    ensure((kc.k0.clone(), kc.k1.clone()) == (z(12), z(12)), || format!("K(X x S1) = {kc}"))?;
    Ok(format!("H = ({}, {}, {}), K = ({}, {}), x S1 = ({}, {})", h.h0, h.h1, h.h2, k.k0, k.k1, kc.k0, kc.k1))
}

fn c4_pipeline() -> Check {
    for n in 2..=8usize {
        let rep = ktheory_pn(n).map_err(s)?;
        let half = factorial(n as u64) / 2;
        ensure(rep.result.ranks() == (half, half), || format!("n={n}: {:?}", rep.result.ranks()))?;
        ensure(rep.result.k0.is_torsion_free() && rep.result.k1.is_torsion_free(), || format!("n={n}: torsion"))?;
        if n >= 3 {
            let mut trail = vec![rep.start.ranks()];
            trail.extend(rep.stages.iter().map(|st| st.output));
            // the recurrence, restated here
            let mut xy = vec![(1u64, n as u64 - 1)];
            for i in 2..=n - 2 {
                let (x, y) = xy[i - 2];
                let k = (n - i) as u64;
                xy.push((x + y * k, y + x * k));
            }
            ensure(trail == xy && xy_recurrence(n) == xy, || format!("n={n}: stages {trail:?} vs {xy:?}"))?;
        }
    }
    let rep = ktheory_pn(5).map_err(s)?;
    let mut trail = vec![rep.start.ranks()];
    trail.extend(rep.stages.iter().map(|st| st.output));
    trail.push(rep.result.ranks());
    ensure(trail == [(1, 4), (13, 7), (27, 33), (60, 60)], || format!("n=5 trace {trail:?}"))?;
    Ok(format!("(n!/2, n!/2) for n = 2..8; n = 5 trace {trail:?}"))
}

fn c5_rank_check() -> Check {
    let mut pairs = Vec::new();
    for n in 2..=9 {
        let homological = khomology_bpn(n).map_err(s)?.ranks();
        let analytic = ktheory_pn(n).map_err(s)?.result.ranks();
        ensure(homological == analytic, || format!("n={n}: {homological:?} vs {analytic:?}"))?;
        pairs.push(homological.0);
    }
    Ok(format!("ranks agree for n = 2..9: {pairs:?}"))
}

fn c6_betti() -> Check {
    for n in 2..=8usize {
        let b = betti_bpn(n).map_err(s)?;
        let poly = poincare_coefficients(n);
        ensure(b.betti == poly, || format!("n={n}: {:?} vs {poly:?}", b.betti))?;
        ensure(b.betti.iter().sum::<u64>() == factorial(n as u64), || format!("n={n}: sum"))?;
        ensure(b.even_sum() == b.odd_sum(), || format!("n={n}: alternating sum"))?;
        for (r, &count) in b.betti.iter().enumerate() {
            let simplices = enumerate_simplices(n, r).map_err(s)?;
            ensure(simplices.len() as u64 == count, || {
                format!("n={n} r={r}: {} simplices vs {count}", simplices.len())
            })?;
            ensure(simplices.windows(2).all(|w| w[0] < w[1]), || format!("n={n} r={r}: not sorted/unique"))?;
        }
    }
    let b4 = betti_bpn(4).map_err(s)?.betti;
    ensure(b4 == [1, 6, 11, 6], || format!("BP_4 {b4:?}"))?;
    Ok(format!("n = 2..8 coherent, BP_4 = {b4:?}"))
}

fn c7_b3() -> Check {
    let rep = amalgam_over_z(2, 3).map_err(s)?;
    ensure(rep.k.k0 == AbelianGroup::free(1) && rep.k.k1 == AbelianGroup::free(1), || format!("K(B3) = {}", rep.k))?;
    ensure(rep.ledger.k0_generators == ["[1]"], || format!("K0 ledger {:?}", rep.ledger.k0_generators))?;
    ensure(rep.ledger.k1_generators.len() == 1 && rep.ledger.k1_generators[0].starts_with("[σ1]"), || {
        format!("K1 ledger {:?}", rep.ledger.k1_generators)
    })?;
    let oracle = ArtinOracle::default();
    ensure(b3_identities(&oracle).map_err(s)?.iter().all(|c| c.1), || "B3 identities".into())?;
    // |K / N K| against an explicit count of Z^2 / (L + N Z^2)
    let mut variants = 0;
    for p in 1..=6i64 {
        for q in 1..=6i64 {
            let rep = amalgam_over_z(p as u64, q as u64).map_err(s)?;
            for (group, col) in [(&rep.k.k0, (1i64, 1i64)), (&rep.k.k1, (p, q))] {
                for n in 1..=24i64 {
                    let mut seen = std::collections::HashSet::new();
                    for k in 0..n {
                        seen.insert(((k * col.0).rem_euclid(n), (k * col.1).rem_euclid(n)));
                    }
                    let brute = BigInt::from(n * n / seen.len() as i64);
                    let predicted = mod_n_size(group.free_rank, &group.torsion, n as u64);
                    ensure(brute == predicted, || format!("(p,q)=({p},{q}) N={n}: {brute} vs {predicted}"))?;
                }
            }
            variants += 1;
        }
    }
    Ok(format!(
        "K(B3) = ({}, {}), ledger {:?} / {:?}, {variants} (p,q) variants match enumeration",
        rep.k.k0, rep.k.k1, rep.ledger.k0_generators, rep.ledger.k1_generators
    ))
}

fn random_pure(rng: &mut ChaCha8Rng, n: usize) -> PureWord {
    let len = rng.gen_range(0..=COMB_MAX_LEN);
    let letters: Vec<(PureGen, i64)> = (0..len)
        .map(|_| {
            let j = rng.gen_range(2..=n);
            let i = rng.gen_range(1..j);
            (PureGen::new(i, j).unwrap(), if rng.gen_bool(0.5) { 1 } else { -1 })
        })
        .collect();
    PureWord::new(n, letters).unwrap()
}

fn c8_combing() -> Check {
    let oracle = ArtinOracle::default();
    let mut rng = ChaCha8Rng::seed_from_u64(COMB_SEED);
    let mut passed = 0;
    for n in [4usize, 5] {
        let comber = Comber::new(n).map_err(s)?;
        for k in 0..COMB_SAMPLES {
            let w = random_pure(&mut rng, n);
            let form = comber.comb(&w).map_err(s)?;
            let mut product = PureWord::identity(n);
            for t in (1..n).rev() {
                let level = form.level(t);
                ensure(level.rank() == t, || format!("n={n} #{k}: level {t} has rank {}", level.rank()))?;
                product = product.multiply(&PureWord::from_level_word(n, t, level).map_err(s)?).map_err(s)?;
            }
            ensure(oracle.braid_equal(&product.expand().map_err(s)?, &w.expand().map_err(s)?).map_err(s)?, || {
                format!("n={n} #{k}: recombination of {w} differs")
            })?;
            // a normal form: combing the recombined word changes nothing
            ensure(comber.comb(&product).map_err(s)? == form, || format!("n={n} #{k}: not idempotent on {w}"))?;
            passed += 1;
        }
    }
    Ok(format!("{passed}/{} words, seed {COMB_SEED:#x}", 2 * COMB_SAMPLES))
}

/// Checks D = U A V, unimodularity, the divisibility chain and the
/// determinantal divisors. Returns the cokernel when it was enumerated.
fn check_snf(a: &IntMatrix, rows: &[Vec<i128>]) -> Result<bool, String> {
    let r = smith_normal_form(a);
    let prod = r.u.mul(a).and_then(|m| m.mul(&r.v)).map_err(s)?;
    ensure(prod == r.d, || format!("D != U A V for\n{a}"))?;
    ensure(r.d.is_diagonal(), || format!("D not diagonal for\n{a}"))?;
    ensure(is_unit(&det_big(&to_big_rows(&r.u))) && is_unit(&det_big(&to_big_rows(&r.v))), || {
        format!("U or V not unimodular for\n{a}")
    })?;
    let diag = r.diagonal();
    for w in diag.windows(2) {
        let chain = if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() };
        ensure(chain && w[0] >= BigInt::zero(), || format!("chain broken {diag:?}"))?;
    }
    let oracle: Vec<BigInt> = invariant_factors(rows).into_iter().map(BigInt::from).collect();
    ensure(diag == oracle, || format!("diagonal {diag:?} vs determinantal divisors {oracle:?}"))?;
    let Some(q) = FiniteQuotient::enumerate(rows, COKER_BOUND) else {
        return Ok(false);
    };
    let g = cokernel(a);
    ensure(g.free_rank == 0 && g.order() == Some(BigInt::from(q.order())), || {
        format!("|coker| {g} vs {} elements", q.order())
    })?;
    for k in 1..=q.order() as i128 {
        ensure(q.killed_by(k) == killed_by_factors(&g.torsion, k), || format!("coker {g}: {k}-torsion count differs"))?;
    }
    Ok(true)
}

fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for _ in 0..3 * n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i == j {
            m[i].iter_mut().for_each(|v| *v = -*v);
            continue;
        }
        let c = rng.gen_range(-2..=2);
        let src = m[j].clone();
        for (a, b) in m[i].iter_mut().zip(&src) {
            *a += c * b;
        }
    }
    m
}

fn c9_snf() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SNF_SEED);
    let mut enumerated = 0;
    for _ in 0..SNF_SAMPLES {
        let (r, c) = (rng.gen_range(1..=SNF_MAX_DIM), rng.gen_range(1..=SNF_MAX_DIM));
        let rows: Vec<Vec<i64>> =
            (0..r).map(|_| (0..c).map(|_| rng.gen_range(-SNF_ENTRY..=SNF_ENTRY)).collect()).collect();
        let a = IntMatrix::from_rows(c, &rows).map_err(s)?;
        let wide: Vec<Vec<i128>> = rows.iter().map(|row| row.iter().map(|&v| v as i128).collect()).collect();
        enumerated += usize::from(check_snf(&a, &wide)?);
    }
    // matrices U diag(d) V built to have small finite cokernels
    let mut targeted = 0;
    while targeted < TARGETED_SAMPLES {
        let m = rng.gen_range(1..=4);
        let extra = rng.gen_range(0..=2);
        let d: Vec<i64> = (0..m).map(|_| rng.gen_range(1..=7)).collect();
        if d.iter().product::<i64>() as usize > COKER_BOUND {
            continue;
        }
        let u = random_unimodular(&mut rng, m);
        let v = random_unimodular(&mut rng, m + extra);
        let mut rows = vec![vec![0i64; m + extra]; m];
        for i in 0..m {
            for j in 0..m + extra {
                rows[i][j] = (0..m).map(|k| u[i][k] * d[k] * v[k][j]).sum();
            }
        }
        let a = IntMatrix::from_rows(m + extra, &rows).map_err(s)?;
        let wide: Vec<Vec<i128>> = rows.iter().map(|row| row.iter().map(|&v| v as i128).collect()).collect();
        ensure(check_snf(&a, &wide)?, || "targeted sample not enumerated".into())?;
        let expected = AbelianGroup::from_factors(0, &d.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
        ensure(cokernel(&a) == expected, || format!("coker of U diag{d:?} V = {}", cokernel(&a)))?;
        targeted += 1;
    }
    Ok(format!(
        "{SNF_SAMPLES} random (seed {SNF_SEED:#x}), {enumerated} random + {targeted} targeted cokernels enumerated"
    ))
}

fn c10_variants() -> Check {
    let oracle = ArtinOracle::default();
    let rep = verify_suite(4, &oracle).map_err(s)?;
    for v in &rep.variants {
        ensure(v.is_definitive(), || format!("[{}] not definitive: {:?}", v.question, v.candidates))?;
    }
    let questions = ["relation 10", "tail of the r<i<s", "factor order of the P4 centre"];
    for q in questions {
        ensure(rep.variants.iter().any(|v| v.question.contains(q)), || format!("no verdict for {q}"))?;
    }
    for n in [4, 5, 6] {
        let r = verify_suite(n, &oracle).map_err(s)?;
        ensure(r.all_pass(), || format!("suite fails for n={n}: {}", r.summary()))?;
    }
    let chosen: Vec<&str> = rep.variants.iter().map(|v| v.chosen.as_str()).collect();
    Ok(format!("{} definitive verdicts {chosen:?}; suite passes for n = 4..6", rep.variants.len()))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("relation verification", Duration::from_secs(1), c1_relations),
        ("action-table soundness", Duration::from_secs(10), c2_tables),
        ("presentation homology", Duration::from_secs(5), c3_homology),
        ("K-theory pipeline", Duration::from_secs(10), c4_pipeline),
        ("rank-level Baum-Connes", Duration::from_secs(10), c5_rank_check),
        ("Betti/simplex coherence", Duration::from_secs(10), c6_betti),
        ("B3 amalgam", Duration::from_secs(5), c7_b3),
        ("combing", Duration::from_secs(20), c8_combing),
        ("SNF properties", Duration::from_secs(20), c9_snf),
        ("variant resolution", Duration::from_secs(10), c10_variants),
    ];
    println!("seeds: combing {COMB_SEED:#x}, snf {SNF_SEED:#x}");
    let mut failures = Vec::new();
    for (k, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let verdict = match &outcome {
            Ok(_) if took <= *budget => "PASS",
            _ => "FAIL",
        };
        let detail = match outcome {
            Ok(d) if took <= *budget => d,
            Ok(d) => format!("{d}; over budget"),
            Err(e) => e,
        };
        println!("{verdict} {:>2} {name}: {detail} [{} ms, budget {} ms]", k + 1, took.as_millis(), budget.as_millis());
        if verdict == "FAIL" {
            failures.push(k + 1);
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
