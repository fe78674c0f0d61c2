//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line per
//! criterion and exits nonzero if any fails. Run with
//! `cargo test --test acceptance`.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use common::{cw, group, random_dominant, random_element, random_parameter, raw_values, rng};
use modp_satake::field::FiniteField;
use modp_satake::hecke::{Basis, HeckeElement};
use modp_satake::mv_oracle::{convolution_table, satake_transform_oracle, TruncationWindow};
use modp_satake::root_datum::{AffineWeylElement, Coweight, Levi};
use modp_satake::satake_params::{
    binomial_relations, classify, strata, AntidominantMonoid, BinomialRelation, SatakeParameter, DEFAULT_RELATION_BOUND,
};

// Time limits.
const ORACLE_GL2_PER_PAIR: Duration = Duration::from_secs(10);
const ORACLE_GL3_PER_CASE: Duration = Duration::from_secs(120);
const CONVOLUTION_TOTAL: Duration = Duration::from_secs(60);

// Sample sizes.
const TRANSITIVITY_SAMPLES: usize = 100;
const ROUND_TRIP_SAMPLES: usize = 200;
const AXIOM_SAMPLES: usize = 100;
const LENGTH_SAMPLES: usize = 50;
const PRODUCT_LAW_PAIRS: usize = 200;
const ABSORBING_PAIRS: usize = 100;

// Coweight bounds.
const HECKE_SUPPORT_BOUND: i64 = 3;
const COSET_BOUND: i64 = 3;
const SATURATION_BOUND: i64 = 3;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn delta_check(window: &TruncationWindow, lambda: &Coweight) -> Result<(), String> {
    let expected = window.datum().longest_element().apply(lambda).map_err(err)?;
    let residues = satake_transform_oracle(window, lambda).map_err(err)?;
    let ok = residues.get(&expected) == Some(&1) && residues.iter().all(|(nu, r)| *nu == expected || *r == 0);
    ensure(ok, || format!("q = {}, lambda = {lambda}: residues {residues:?}, expected delta at {expected}", window.q()))
}

fn c1_oracle_gl2() -> Outcome {
    let lambdas = [cw(&[1, 0]), cw(&[1, 1]), cw(&[2, 0]), cw(&[2, 1]), cw(&[1, -1]), cw(&[2, 2])];
    let mut slowest = Duration::ZERO;
    let mut pairs = 0;
    for q in [2u64, 3, 4, 5] {
        for lambda in &lambdas {
            let start = Instant::now();
            let w = TruncationWindow::fitting(2, q, &[lambda]).map_err(err)?;
            delta_check(&w, lambda)?;
            let took = start.elapsed();
            ensure(took < ORACLE_GL2_PER_PAIR, || format!("q = {q}, lambda = {lambda} took {took:?}"))?;
            slowest = slowest.max(took);
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (q, lambda) pairs, slowest {slowest:.2?}"))
}

fn c2_oracle_gl3() -> Outcome {
    let mut slowest = Duration::ZERO;
    for q in [2u64, 3] {
        for lambda in [cw(&[1, 0, 0]), cw(&[1, 1, 0]), cw(&[1, 1, 1])] {
            let start = Instant::now();
            let w = TruncationWindow::new(3, q, 1).map_err(err)?;
            delta_check(&w, &lambda)?;
            let took = start.elapsed();
            ensure(took < ORACLE_GL3_PER_CASE, || format!("q = {q}, lambda = {lambda} took {took:?}"))?;
            slowest = slowest.max(took);
        }
    }
    Ok(format!("6 cases, slowest {slowest:.2?}"))
}

fn c3_convolution() -> Outcome {
    let start = Instant::now();
    let g = group("GL2");
    let mut small = Vec::new();
    for a in -1..=1 {
        for b in -1..=a {
            small.push(cw(&[a, b]));
        }
    }
    let mut compared = 0;
    let mut classical = None;
    for q in [2u64, 3] {
        let w = TruncationWindow::new(2, q, 1).map_err(err)?;
        for mu1 in &small {
            for mu2 in &small {
                let table = convolution_table(&w, mu1, mu2).map_err(err)?;
                let full = g.full_levi();
                let f1 = HeckeElement::basis_element(Arc::clone(&g), full.clone(), w.p(), Basis::Std, mu1.clone())
                    .map_err(err)?;
                let f2 =
                    HeckeElement::basis_element(Arc::clone(&g), full, w.p(), Basis::Std, mu2.clone()).map_err(err)?;
                let product = f1.convolve(&f2).map_err(err)?;
                let lambdas: BTreeSet<Coweight> = table.counts.keys().cloned().chain(product.support()).collect();
                for lambda in lambdas {
                    let raw = table.counts.get(&lambda).copied().unwrap_or(0);
                    ensure(raw % w.p() == product.coeff(&lambda), || {
                        format!(
                            "q = {q}, {mu1} * {mu2} at {lambda}: lattice count {raw}, Hecke coefficient {}",
                            product.coeff(&lambda)
                        )
                    })?;
                    compared += 1;
                }
                if *mu1 == cw(&[1, 0]) && *mu2 == cw(&[1, 0]) {
                    let raw = table.counts.get(&cw(&[1, 1])).copied().unwrap_or(0);
                    ensure(raw == q + 1, || format!("q = {q}: count at (1,1) is {raw}, expected {}", q + 1))?;
                    classical.get_or_insert_with(Vec::new).push(raw);
                }
            }
        }
    }
    let took = start.elapsed();
    ensure(took < CONVOLUTION_TOTAL, || format!("took {took:?}"))?;
    Ok(format!(
        "{compared} structure constants, (1,0)*(1,0) at (1,1) = {:?}, {took:.2?}",
        classical.unwrap_or_default()
    ))
}

fn c4_transitivity() -> Outcome {
    let mut r = rng(4);
    let mut checked = 0;
    for name in ["GL3", "GL4", "Sp4"] {
        let g = group(name);
        let torus = g.torus_levi();
        for levi in g.levis() {
            for _ in 0..TRANSITIVITY_SAMPLES {
                let p = [2u64, 3, 5, 7][checked % 4];
                let f = random_element(&g, &g.full_levi(), p, &mut r, HECKE_SUPPORT_BOUND, 3);
                let two_step = f
                    .satake_transform(&levi, Basis::Std)
                    .and_then(|x| x.satake_transform(&torus, Basis::Std))
                    .map_err(err)?;
                let direct = f.satake_transform(&torus, Basis::Std).map_err(err)?;
                ensure(two_step == direct, || format!("{name}, levi {:?}: {f:?}", levi.one_based()))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} random elements over GL3, GL4, Sp4 and all Levis"))
}

fn c5_ic_formula() -> Outcome {
    let g = group("GL3");
    let w0 = g.longest_element();
    let mut checked = 0;
    for a in -3..=3i64 {
        for b in -3..=a {
            for c in -3..=b {
                let lambda = cw(&[a, b, c]);
                for levi in g.levis() {
                    let w0l = g.longest_element_levi(&levi);
                    let f = HeckeElement::basis_element(Arc::clone(&g), g.full_levi(), 5, Basis::Ic, lambda.clone())
                        .map_err(err)?;
                    let image = f.satake_transform(&levi, Basis::Std).map_err(err)?;
                    let target = w0l.apply(&w0.apply(&lambda).map_err(err)?).map_err(err)?;
                    let expected = HeckeElement::basis_element(Arc::clone(&g), levi.clone(), 5, Basis::Ic, target)
                        .and_then(|x| x.to_std_basis())
                        .map_err(err)?;
                    ensure(image == expected, || format!("lambda = {lambda}, levi {:?}", levi.one_based()))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} (lambda, L) pairs"))
}

fn c6_algebra_axioms() -> Outcome {
    let mut r = rng(6);
    for (i, name) in ["GL2", "GL3", "Sp4", "SL3"].iter().cycle().take(ROUND_TRIP_SAMPLES).enumerate() {
        let g = group(name);
        let levi = common::random_levi(&g, &mut r);
        let p = [2u64, 3, 5][i % 3];
        let f = random_element(&g, &levi, p, &mut r, HECKE_SUPPORT_BOUND, 4);
        let back = f.to_ic_basis().and_then(|x| x.to_std_basis()).map_err(err)?;
        ensure(back == f, || format!("round trip failed on {f:?}"))?;
    }
    for (i, name) in ["GL2", "GL3", "Sp4"].iter().cycle().take(AXIOM_SAMPLES).enumerate() {
        let g = group(name);
        let full = g.full_levi();
        let p = [3u64, 2, 7][i % 3];
        let a = random_element(&g, &full, p, &mut r, 2, 3);
        let b = random_element(&g, &full, p, &mut r, 2, 3);
        let c = random_element(&g, &full, p, &mut r, 2, 3);
        let ab = a.convolve(&b).map_err(err)?;
        ensure(ab == b.convolve(&a).map_err(err)?, || format!("{name}: a*b != b*a"))?;
        let left = ab.convolve(&c).map_err(err)?;
        let right = a.convolve(&b.convolve(&c).map_err(err)?).map_err(err)?;
        ensure(left == right, || format!("{name}: (a*b)*c != a*(b*c)"))?;
    }
    Ok(format!("{ROUND_TRIP_SAMPLES} basis round trips, {AXIOM_SAMPLES} commutativity/associativity triples"))
}

fn c7_length() -> Outcome {
    let mut r = rng(7);
    for name in ["GL3", "Sp4"] {
        let g = group(name);
        for _ in 0..LENGTH_SAMPLES {
            let lambda = random_dominant(&g, &mut r, 6);
            let len = g.length(&AffineWeylElement::translation(&g, lambda.clone())).map_err(err)?;
            let two_rho = g.two_rho(&lambda);
            ensure(len as i64 == two_rho, || format!("{name}: length {len} != 2rho {two_rho} at {lambda}"))?;
        }
    }
    Ok(format!("{} dominant translations in GL3 and Sp4", 2 * LENGTH_SAMPLES))
}

fn c8_presentation() -> Outcome {
    let sl3 = AntidominantMonoid::new(group("SL3")).map_err(err)?;
    let rels = binomial_relations(&sl3.dominant_generators(), 4);
    let expected = vec![BinomialRelation { left: vec![3, 0, 0], right: vec![0, 1, 1] }];
    ensure(rels == expected, || format!("SL3 relations {rels:?}"))?;
    let gl2 = AntidominantMonoid::new(group("GL2")).map_err(err)?;
    let gens = gl2.generators().to_vec();
    ensure(gens == vec![cw(&[0, 1]), cw(&[1, 1]), cw(&[-1, -1])], || format!("GL2 generators {gens:?}"))?;
    Ok(format!("SL3: {} ({}); GL2 generators (0,1) (1,1) (-1,-1)", rels[0], rels[0].monomial_form()))
}

fn c9_stratification() -> Outcome {
    for name in ["GL2", "GL3", "SL3", "Sp4"] {
        let g = group(name);
        let s = strata(&g);
        let l = g.semisimple_rank();
        ensure(s.strata.len() == 1 << l, || format!("{name}: {} strata", s.strata.len()))?;
        for st in &s.strata {
            ensure(st.rank == g.rank() - st.levi.len(), || {
                format!("{name}: stratum {:?} rank {}", st.levi.one_based(), st.rank)
            })?;
        }
    }
    let gl2 = group("GL2");
    let s = strata(&gl2);
    let ranks: Vec<usize> = s.strata.iter().map(|x| x.rank).collect();
    ensure(ranks == vec![2, 1], || format!("GL2 ranks {ranks:?}"))?;
    ensure(s.closure(&gl2.torus_levi()).len() == 2 && s.closure(&gl2.full_levi()).len() == 1, || {
        "GL2 closure order".to_string()
    })?;

    let mut r = rng(9);
    let fields: Vec<Arc<FiniteField>> =
        [(2, 2), (3, 1), (5, 1), (2, 3)].iter().map(|(p, k)| Arc::new(FiniteField::new(*p, *k).unwrap())).collect();
    let names = ["GL2", "GL3", "SL3", "Sp4"];
    for i in 0..PRODUCT_LAW_PAIRS {
        let g = group(names[i % names.len()]);
        let monoid = AntidominantMonoid::new(Arc::clone(&g)).map_err(err)?;
        let field = &fields[i % fields.len()];
        let a = random_parameter(&g, field, &mut r);
        let b = random_parameter(&g, field, &mut r);
        let ab = a.multiply(&b).map_err(err)?;
        let union = a.stratum().union(b.stratum());
        ensure(*ab.stratum() == union, || format!("{}: product stratum {:?}", g.name(), ab.stratum().one_based()))?;
        // independent route: classify the pointwise product of generator values
        let (ra, rb) = (raw_values(&a, &monoid), raw_values(&b, &monoid));
        let pointwise: BTreeMap<_, _> = ra.iter().map(|(k, v)| (k.clone(), field.mul(v, &rb[k]))).collect();
        let reclassified = classify(&monoid, Arc::clone(field), &pointwise, DEFAULT_RELATION_BOUND).map_err(err)?;
        ensure(reclassified == ab, || format!("{}: pointwise product classifies differently", g.name()))?;
        // units are exactly the ordinary parameters
        for x in [&a, &b] {
            ensure(x.is_unit() == x.stratum().is_empty(), || "is_unit disagrees with the stratum".into())?;
            if x.is_unit() {
                let inv = x.inverse().ok_or("unit without inverse")?;
                let one = SatakeParameter::unit(Arc::clone(&g), Arc::clone(field));
                ensure(x.multiply(&inv).map_err(err)? == one, || "x * x^-1 != 1".into())?;
            } else {
                ensure(x.inverse().is_none(), || "non-unit with an inverse".into())?;
            }
        }
    }
    for i in 0..ABSORBING_PAIRS {
        let g = group(names[i % names.len()]);
        let field = &fields[i % fields.len()];
        let full = g.full_levi();
        let n = modp_satake::satake_params::perp_basis(&g, &full).len();
        let ss = SatakeParameter::new(
            Arc::clone(&g),
            Arc::clone(field),
            full,
            (0..n).map(|_| common::random_nonzero(field, &mut r)).collect(),
        )
        .map_err(err)?;
        let other = random_parameter(&g, field, &mut r);
        ensure(ss.multiply(&other).map_err(err)?.is_supersingular(), || "supersingular not absorbing".into())?;
        ensure(other.multiply(&ss).map_err(err)?.is_supersingular(), || "supersingular not absorbing".into())?;
    }
    Ok(format!("strata of GL2/GL3/SL3/Sp4, {PRODUCT_LAW_PAIRS} product pairs, {ABSORBING_PAIRS} absorbing pairs"))
}

fn c10_cosets() -> Outcome {
    let mut points = 0;
    for name in ["GL2", "GL3"] {
        let g = group(name);
        let monoid = AntidominantMonoid::new(Arc::clone(&g)).map_err(err)?;
        let dec = monoid.coset_decomposition(COSET_BOUND);
        let n = g.rank();
        let window: Vec<Coweight> = (0..(COSET_BOUND + 1).pow(n as u32))
            .map(|mut idx| {
                let mut v = vec![0; n];
                for x in v.iter_mut().rev() {
                    *x = idx % (COSET_BOUND + 1);
                    idx /= COSET_BOUND + 1;
                }
                Coweight(v)
            })
            .filter(|c| g.is_antidominant(c))
            .collect();
        let in_units = |u: &Coweight| (0..g.semisimple_rank()).all(|i| g.pair_simple(i, u) == 0);
        for lambda in &window {
            let hits: Vec<_> = dec.classes.iter().filter(|c| c.members.iter().any(|(m, _)| m == lambda)).collect();
            ensure(hits.len() == 1, || format!("{name}: {lambda} lies in {} classes", hits.len()))?;
            let (rep, unit) = dec.decompose(lambda).ok_or("missing decomposition")?;
            ensure(rep.add(&unit) == *lambda && in_units(&unit), || format!("{name}: bad factorization of {lambda}"))?;
            let min = window.iter().filter(|m| in_units(&lambda.sub(m))).min().expect("lambda is in its own coset");
            ensure(*min == rep, || format!("{name}: representative {rep} is not minimal ({min})"))?;
            points += 1;
        }
    }
    Ok(format!("{points} antidominant window points factor uniquely"))
}

fn c11_saturation() -> Outcome {
    let g = group("GL3");
    let levi = Levi::from_indices([0]);
    let w0 = g.longest_element();
    let w0l = g.longest_element_levi(&levi);
    let b = SATURATION_BOUND;
    let mut checked = 0;
    for x in -b..=b {
        for y in -b..=x {
            for z in -b..=y {
                let lambda = cw(&[x, y, z]);
                let top = w0l.apply(&w0.apply(&lambda).map_err(err)?).map_err(err)?;
                // exhaustive over the box, independent of the interval enumerator
                for i in -b..=b {
                    for j in -b..=b {
                        for k in -b..=b {
                            let mu = cw(&[i, j, k]);
                            if g.is_dominant_levi(&levi, &mu) && g.dominance_leq_levi(&levi, &mu, &top) {
                                let image = w0l.apply(&mu).map_err(err)?;
                                ensure(g.is_antidominant(&image), || format!("lambda = {lambda}, mu = {mu}"))?;
                                checked += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{checked} (lambda, mu) pairs"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("oracle delta, GL2", c1_oracle_gl2),
        ("oracle delta, GL3", c2_oracle_gl3),
        ("convolution counts vs Hecke constants, GL2", c3_convolution),
        ("transitivity of Satake transforms", c4_transitivity),
        ("IC-basis transform formula, GL3", c5_ic_formula),
        ("basis round trip and algebra axioms", c6_algebra_axioms),
        ("length of dominant translations", c7_length),
        ("monoid presentation recovery", c8_presentation),
        ("stratification suite", c9_stratification),
        ("unit-coset factorization", c10_cosets),
        ("saturation, GL3 with L = {alpha_1}", c11_saturation),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".to_string()));
        let took = start.elapsed();
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{took:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{took:.2?}]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
