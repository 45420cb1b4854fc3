//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use seminorm_core::arith::rational::Q;
use seminorm_core::arith::roots::count_real_roots;
use seminorm_core::arith::sturm::{sturm_count, Bound};
use seminorm_core::arith::UPoly;
use seminorm_core::classify::{
    classify, continuity_probe, make_function, make_function_filling, verify_r_subintegral, Assignment, ClassificationReport, CurveFunction,
    FiberReport, Locator, ProbeOutcome, ProbeSchedule,
};
use seminorm_core::curve::make_curve;
use seminorm_core::groebner::{buchberger, saturate, MPoly, MonomialOrder, PolyIdeal, Var};
use seminorm_core::parse::{parse_poly, parse_with, STXY};
use seminorm_core::report::{locus_agrees, locus_document, CORPUS, SINGULAR_CURVE};
use seminorm_core::Error;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;

fn poly(s: &str) -> MPoly {
    parse_poly(s).unwrap()
}

fn tpoly(s: &str) -> MPoly {
    parse_with(s, STXY).unwrap()
}

fn function(curve: &str, p: &str, q: &str, value: i64) -> CurveFunction {
    let c = make_curve(&poly(curve)).unwrap();
    make_function(&c, &poly(p), &poly(q), &[Assignment::at_origin(value)]).unwrap()
}

fn timed(curve: &str, p: &str, q: &str, value: i64) -> (CurveFunction, ClassificationReport, Duration) {
    let start = Instant::now();
    let f = function(curve, p, q, value);
    let r = classify(&f).unwrap();
    (f, r, start.elapsed())
}

fn check(cond: bool, what: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn verdict_string(r: &ClassificationReport) -> String {
    let v = r.verdicts;
    format!("regular {:?}, k_plus {:?}, k_r_plus {:?}, integral {:?}", v.regular, v.k_plus, v.k_r_plus, v.integral).to_lowercase()
}

fn criterion_1(fibers: &mut Vec<FiberReport>) -> Outcome {
    let (_, r, t) = timed("y^2 - x^3", "y", "x", 0);
    fibers.extend(r.fibers.iter().cloned());
    check(verdict_string(&r) == "regular no, k_plus yes, k_r_plus yes, integral yes", &verdict_string(&r))?;
    check(r.integral_relation == Some(tpoly("t^2 - x")), "certificate is not t^2 - x")?;
    check(t < Duration::from_secs(1), &format!("took {t:?}"))?;
    Ok(format!("cusp y/x: {}, certificate t^2 - x, {t:.2?}", verdict_string(&r)))
}

fn criterion_2(fibers: &mut Vec<FiberReport>) -> Outcome {
    let (_, r, t) = timed("y^2 - x^3*(x^2+1)^2", "y", "x*(x^2+1)", 0);
    fibers.extend(r.fibers.iter().cloned());
    check(!r.verdicts.k_plus.is_yes() && r.verdicts.k_r_plus.is_yes(), &verdict_string(&r))?;
    let w = r.fibers.iter().find(|f| !f.real).ok_or("no non-real fibre")?;
    check(w.point == "{x^2 + 1 = 0, y = 0}", &format!("non-real class {}", w.point))?;
    check(w.fiber_poly == "t^2 - x" && w.distinct_complex == Some(2), &format!("fibre {} with {:?} roots", w.fiber_poly, w.distinct_complex))?;
    let c5 = r.conditions.iter().find(|c| c.index == 5).unwrap();
    check(!c5.passed && c5.witness.as_ref().is_some_and(|w| w.point == "{x^2 + 1 = 0, y = 0}"), "condition 5 witness")?;
    check(t < Duration::from_secs(2), &format!("took {t:?}"))?;
    Ok(format!("{}; witness {} with fibre t^2 - x, 2 complex roots, {t:.2?}", verdict_string(&r), w.point))
}

fn criterion_3(fibers: &mut Vec<FiberReport>) -> Outcome {
    let (_, r, t) = timed("y^4 - x*(x^2+y^2)", "y^2", "x", 0);
    fibers.extend(r.fibers.iter().cloned());
    check(!r.verdicts.k_r_plus.is_yes() && r.verdicts.integral.is_yes(), &verdict_string(&r))?;
    check(r.integral_relation == Some(tpoly("t^2 - t - x")), "certificate is not t^2 - t - x")?;
    let f = &r.fibers[0];
    check(f.point == "(0, 0)" && f.distinct_real == Some(2) && f.real_roots == ["0", "1"], &format!("{f:?}"))?;
    check(!r.conditions[2].passed, "condition 3 passed")?;
    check(t < Duration::from_secs(2), &format!("took {t:?}"))?;
    Ok(format!("{}; real fibre roots {{0, 1}} at (0, 0), {t:.2?}", verdict_string(&r)))
}

fn criterion_4(fibers: &mut Vec<FiberReport>) -> Outcome {
    let (_, r, t) = timed("y^3 - x^2*y^2 + y*x^2*(x+1) - x^4*(x+1)", "y", "x", 0);
    fibers.extend(r.fibers.iter().cloned());
    let passed: Vec<bool> = r.conditions.iter().take(4).map(|c| c.passed).collect();
    check(passed == [true, true, true, false], &format!("conditions 1-4: {passed:?}"))?;
    let f = &r.fibers[0];
    check(f.distinct_complex == Some(3) && f.distinct_real == Some(1), &format!("{f:?}"))?;
    check(r.integral_relation == Some(tpoly("t^3 - x*t^2 + t*(x+1) - x*(x+1)")), "certificate")?;
    check(t < Duration::from_secs(3), &format!("took {t:?}"))?;
    Ok(format!("conditions 1-3 pass, 4 fails with fibre {} (3 roots, 1 real), {t:.2?}", f.fiber_poly))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let c = make_curve(&poly(SINGULAR_CURVE)).unwrap();
    let doc = locus_document(&c).map_err(|e| e.to_string())?;
    let t = start.elapsed();
    check(locus_agrees(&doc), &format!("{:?}", doc.points.iter().map(|p| (&p.label, p.real)).collect::<Vec<_>>()))?;
    check(t < Duration::from_secs(10), &format!("took {t:?}"))?;
    Ok(format!("{} classes, {} complex points, real points (0, 0), (1, 0), (2, 0), non-real over x^2 + 1 and x^2 + 4, {t:.2?}", doc.points.len(), doc.closed_points))
}

/// Random integer combination of the monomials of total degree `lo..=hi`.
fn random_poly(rng: &mut ChaCha8Rng, lo: u32, hi: u32, density: f64) -> MPoly {
    let mut acc = MPoly::zero();
    for d in lo..=hi {
        for i in 0..=d {
            if !rng.random_bool(density) {
                continue;
            }
            let c: i64 = *[-3, -2, -1, 1, 2, 3].choose(rng).unwrap();
            acc = acc.add(&MPoly::var(Var::X).pow(i).mul(&MPoly::var(Var::Y).pow(d - i)).scale(&Q::from_integer(c.into())));
        }
    }
    acc
}

/// A random function on a corpus curve; `None` when `q` vanishes on a
/// component. Denominators vanish at the origin, where every corpus curve is
/// singular, and numerators lean towards high order there, so all four
/// verdicts occur.
fn random_function(rng: &mut ChaCha8Rng, curve: &str) -> Option<CurveFunction> {
    let c = make_curve(&poly(curve)).unwrap();
    let q = loop {
        let hi = rng.random_range(1..=3);
        let q = random_poly(rng, 1, hi, 0.5);
        if !q.is_zero() {
            break q;
        }
    };
    let lo = rng.random_range(0..=2);
    let p = random_poly(rng, lo, 3, 0.4);
    let (f, _) = match make_function_filling(&c, &p, &q, &[]) {
        Ok(f) => f,
        Err(Error::ZeroDivisor { .. }) => return None,
        Err(e) => panic!("unexpected {e}"),
    };
    if rng.random_bool(0.5) {
        return Some(f);
    }
    let values: Vec<Assignment> = (0..f.real_points().len())
        .map(|i| Assignment { at: Locator::Index(i), value: MPoly::constant(Q::from_integer(rng.random_range(-1..=1).into())) })
        .collect();
    Some(make_function(&c, &p, &q, &values).unwrap())
}

fn criterion_6(fibers: &mut Vec<FiberReport>) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut n, mut tally) = (0, [0usize; 4]);
    let start = Instant::now();
    while n < 200 {
        let entry = CORPUS.choose(&mut rng).unwrap();
        let Some(f) = random_function(&mut rng, entry.curve) else { continue };
        let r = classify(&f).map_err(|e| e.to_string())?;
        fibers.extend(r.fibers.iter().cloned());
        check(r.verdicts.monotone(), &format!("chain broken for ({}) / ({}) on {}", f.p(), f.q(), entry.curve))?;
        let r_sub = match verify_r_subintegral(&f) {
            Ok(s) => s.r_subintegral,
            Err(Error::NotIntegral) => false,
            Err(e) => return Err(e.to_string()),
        };
        check(r_sub == r.verdicts.k_r_plus.is_yes(), &format!("fibre routes disagree for ({}) / ({}) on {}", f.p(), f.q(), entry.curve))?;
        let v = r.verdicts;
        for (k, b) in [v.regular, v.k_plus, v.k_r_plus, v.integral].iter().enumerate() {
            tally[k] += b.is_yes() as usize;
        }
        n += 1;
    }
    Ok(format!(
        "{n} random functions, chain and fibre-route agreement 100% (yes counts: regular {}, k_plus {}, k_r_plus {}, integral {}), {:.2?}",
        tally[0],
        tally[1],
        tally[2],
        tally[3],
        start.elapsed()
    ))
}

fn criterion_7(fibers: &mut Vec<FiberReport>) -> Outcome {
    // oracle: y = x*t turns the node into x^2 * (t^2 - x - 1)
    let node = poly("y^2 - x^2*(x+1)");
    let xt = MPoly::var(Var::X).mul(&MPoly::var(Var::T));
    let strict = tpoly("t^2 - x - 1");
    check(node.subst(Var::Y, &xt) == strict.mul(&poly("x^2")), "substitution oracle")?;
    let oracle = strict.subst(Var::X, &MPoly::zero());
    let f = function("y^2 - x^2*(x+1)", "y", "x", 1);
    let rep = &f.fibers().unwrap()[0];
    check(tpoly(&rep.fiber_poly) == oracle, &format!("fibre {} vs oracle {oracle}", rep.fiber_poly))?;
    check(rep.real_roots == ["-1", "1"], "roots")?;

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let e = CORPUS.choose(&mut rng).unwrap();
        let value = e.value.parse().unwrap();
        let f = function(e.curve, e.numerator, e.denominator, value);
        let base = classify(&f).unwrap();
        let g = random_poly(&mut rng, 0, 2, 0.35);
        let fp = f.p().add(&g.mul(f.curve().poly()));
        let moved = classify(&f.with_representative(&fp, f.q()).unwrap()).unwrap();
        let c = Q::new(rng.random_range(1..=9i64).into(), rng.random_range(1..=9i64).into()) * Q::from_integer(if rng.random_bool(0.5) { 1 } else { -1 }.into());
        let scaled = classify(&f.with_representative(&f.p().scale(&c), &f.q().scale(&c)).unwrap()).unwrap();
        for r in [&moved, &scaled] {
            check(r.verdicts == base.verdicts && r.integral_relation == base.integral_relation, &format!("{} changed under g = {g}, c = {c}", e.name))?;
            fibers.extend(r.fibers.iter().cloned());
        }
    }
    Ok("node fibre t^2 - 1 matches y = x*t substitution; 50 perturbations (p + gF, q) and (cp, cq) keep all verdicts".into())
}

/// Roots by simultaneous Newton iteration (Durand-Kerner) in doubles.
fn float_roots(coeffs: &[f64]) -> Vec<(f64, f64)> {
    let n = coeffs.len() - 1;
    let lc = coeffs[n];
    let a: Vec<f64> = coeffs.iter().map(|c| c / lc).collect();
    let mul = |x: (f64, f64), y: (f64, f64)| (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0);
    let div = |x: (f64, f64), y: (f64, f64)| {
        let d = y.0 * y.0 + y.1 * y.1;
        ((x.0 * y.0 + x.1 * y.1) / d, (x.1 * y.0 - x.0 * y.1) / d)
    };
    let eval = |z: (f64, f64)| a.iter().rev().fold((0.0, 0.0), |acc, c| {
        let m = mul(acc, z);
        (m.0 + c, m.1)
    });
    let mut z: Vec<(f64, f64)> = (0..n).map(|k| mul((0.4, 0.9), (0..k).fold((1.0, 0.0), |p, _| mul(p, (0.4, 0.9))))).collect();
    for _ in 0..2000 {
        let mut delta: f64 = 0.0;
        for i in 0..n {
            let mut den = (1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den = mul(den, (z[i].0 - z[j].0, z[i].1 - z[j].1));
                }
            }
            let step = div(eval(z[i]), den);
            z[i] = (z[i].0 - step.0, z[i].1 - step.1);
            delta = delta.max(step.0.abs() + step.1.abs());
        }
        if delta < 1e-15 {
            break;
        }
    }
    z
}

fn criterion_8(fibers: &[FiberReport]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut checked = 0;
    while checked < 500 {
        let deg = rng.random_range(1..=8usize);
        let mut cs: Vec<i64> = (0..=deg).map(|_| rng.random_range(-10..=10)).collect();
        if cs[deg] == 0 {
            cs[deg] = 1;
        }
        let p = UPoly::from_ints(&cs);
        let sq = p.squarefree_part().unwrap();
        let sq_f: Vec<f64> = sq.coeffs().iter().map(seminorm_core::arith::rational::to_f64).collect();
        let roots = if sq_f.len() > 1 { float_roots(&sq_f) } else { Vec::new() };
        let real: Vec<f64> = roots.iter().filter(|z| z.1.abs() < 1e-7 * (1.0 + z.0.abs())).map(|z| z.0).collect();
        let whole = count_real_roots(&p);
        check(whole == real.len(), &format!("{cs:?}: Sturm {whole}, floats {}", real.len()))?;
        if real.iter().all(|r| (r + 1.0).abs() > 1e-6 && (r - 2.0).abs() > 1e-6) && sq.degree().unwrap_or(0) > 0 {
            let lo = Bound::At(Q::from_integer((-1).into()));
            let hi = Bound::At(Q::from_integer(2.into()));
            let inside = sturm_count(&sq, &lo, &hi).unwrap();
            let want = real.iter().filter(|r| **r > -1.0 && **r < 2.0).count();
            check(inside == want, &format!("{cs:?} on (-1, 2): Sturm {inside}, floats {want}"))?;
        }
        checked += 1;
    }

    let vars = [Var::T, Var::X, Var::Y];
    for k in 0..20 {
        let gens: Vec<MPoly> = (0..rng.random_range(2..=3))
            .map(|_| {
                let mut g = MPoly::zero();
                while g.is_zero() {
                    for _ in 0..3 {
                        let mut m = MPoly::constant(Q::from_integer(rng.random_range(-3..=3i64).into()));
                        for _ in 0..rng.random_range(0..=2) {
                            m = m.mul(&MPoly::var(*vars.choose(&mut rng).unwrap()));
                        }
                        g = g.add(&m);
                    }
                }
                g
            })
            .collect();
        let q = MPoly::var(*vars.choose(&mut rng).unwrap()).add(&MPoly::constant(Q::from_integer(rng.random_range(-2..=2i64).into())));
        let ideal = PolyIdeal::new(gens.clone()).unwrap();
        let once = saturate(&ideal, &q).unwrap();
        let twice = saturate(&once, &q).unwrap();
        check(once.same_as(&twice), &format!("saturation not idempotent on ideal {k}"))?;
        for order in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
            let gb = buchberger(&gens, order);
            let mut shuffled = gens.clone();
            shuffled.shuffle(&mut rng);
            shuffled.reverse();
            check(buchberger(&shuffled, order).basis() == gb.basis(), &format!("reduced basis depends on input order for ideal {k}"))?;
        }
    }

    let mut real = 0;
    for f in fibers.iter().filter(|f| f.real) {
        if let (Some(c), Some(r)) = (f.distinct_complex, f.distinct_real) {
            check((c - r) % 2 == 0, &format!("parity at {}: {c} complex, {r} real", f.point))?;
            real += 1;
        }
    }
    Ok(format!("500 Sturm counts match doubles; 20 ideals saturate idempotently with order-free reduced bases; parity holds on {real} real fibre reports"))
}

fn criterion_9() -> Outcome {
    let schedule = ProbeSchedule::default();
    let mut consistent = 0;
    for e in CORPUS {
        let f = function(e.curve, e.numerator, e.denominator, e.value.parse().unwrap());
        let r = classify(&f).unwrap();
        for i in 0..f.real_points().len() {
            let out = continuity_probe(&f, i, &schedule);
            if r.verdicts.k_r_plus.is_yes() {
                check(matches!(out, ProbeOutcome::Consistent { .. }), &format!("{}: {out:?}", e.name))?;
                consistent += 1;
            }
            if e.name == "quartic" || e.name == "node" {
                check(matches!(out, ProbeOutcome::Violated(_)), &format!("{}: {out:?}", e.name))?;
            }
        }
    }
    Ok(format!("consistent at all {consistent} real bad points of k_r_plus members; violated for the quartic and the node with value 1"))
}

fn main() {
    let mut fibers = Vec::new();
    let results: Vec<(u8, &str, Outcome)> = vec![
        (1, "cusp", criterion_1(&mut fibers)),
        (2, "cusp with conjugate nodes", criterion_2(&mut fibers)),
        (3, "quartic", criterion_3(&mut fibers)),
        (4, "cubic", criterion_4(&mut fibers)),
        (5, "singular locus", criterion_5()),
        (6, "hierarchy", criterion_6(&mut fibers)),
        (7, "oracle equivalence", criterion_7(&mut fibers)),
        (8, "kernel suites", criterion_8(&fibers)),
        (9, "probe soundness", criterion_9()),
    ];
    let mut failed = 0;
    for (n, name, r) in &results {
        match r {
            Ok(msg) => println!("PASS criterion {n} ({name}): {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {n} ({name}): {msg}");
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
