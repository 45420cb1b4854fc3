use proptest::prelude::*;
use seminorm_core::arith::rational::Q;
use seminorm_core::arith::roots::count_real_roots;
use seminorm_core::arith::sturm::{sturm_count, Bound};
use seminorm_core::arith::UPoly;
use seminorm_core::classify::{
    classify, continuity_probe, make_function_filling, verify_r_subintegral, CurveFunction, ProbeOutcome, ProbeSchedule,
};
use seminorm_core::curve::make_curve;
use seminorm_core::groebner::{buchberger, saturate, MPoly, MonomialOrder, PolyIdeal, Var};
use seminorm_core::parse::{parse_poly, parse_with, STXY};
use seminorm_core::report::CORPUS;
use seminorm_core::Error;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn monomial(c: i64, e: [u32; 4]) -> MPoly {
    MPoly::monomial(e, q(c))
}

fn sum(terms: &[(i64, [u32; 4])]) -> MPoly {
    terms.iter().fold(MPoly::zero(), |acc, &(c, e)| acc.add(&monomial(c, e)))
}

fn coeff() -> impl Strategy<Value = i64> {
    prop_oneof![-3i64..=-1, 1i64..=3]
}

/// Terms in `x, y` of total degree `lo..=hi`.
fn xy_terms(lo: u32, hi: u32, max: usize) -> impl Strategy<Value = Vec<(i64, [u32; 4])>> {
    prop::collection::vec(
        (coeff(), lo..=hi, 0u32..=3).prop_map(|(c, d, i)| {
            let i = i.min(d);
            (c, [0, 0, i, d - i])
        }),
        0..=max,
    )
}

fn stxy_terms() -> impl Strategy<Value = Vec<(i64, [u32; 4])>> {
    prop::collection::vec((-40i64..=40, prop::array::uniform4(0u32..=3)), 0..8)
}

/// A function on a corpus curve whose denominator vanishes at the origin;
/// `None` when the denominator vanishes on a component.
fn corpus_function() -> impl Strategy<Value = Option<(usize, CurveFunction)>> {
    (0..CORPUS.len(), xy_terms(0, 3, 5), xy_terms(1, 3, 4)).prop_map(|(k, p, qt)| {
        let (p, den) = (sum(&p), sum(&qt));
        if den.is_zero() {
            return None;
        }
        let c = make_curve(&parse_poly(CORPUS[k].curve).unwrap()).unwrap();
        match make_function_filling(&c, &p, &den, &[]) {
            Ok((f, _)) => Some((k, f)),
            Err(Error::ZeroDivisor { .. }) => None,
            Err(e) => panic!("unexpected {e}"),
        }
    })
}

fn xy_ideal() -> impl Strategy<Value = Vec<MPoly>> {
    prop::collection::vec(xy_terms(0, 3, 4).prop_map(|t| sum(&t)), 1..=3)
        .prop_map(|gs| gs.into_iter().filter(|g| !g.is_zero()).collect::<Vec<_>>())
        .prop_filter("nonzero generators", |gs| !gs.is_empty())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn printed_polynomials_parse_back(terms in stxy_terms()) {
        let p = sum(&terms);
        prop_assert_eq!(parse_with(&p.to_string(), STXY).unwrap(), p);
    }

    #[test]
    fn sturm_counts_distinct_rational_roots(
        roots in prop::collection::btree_set(-6i64..=6, 0..6),
        extra in 1i64..=5,
        mult in 1u32..=2,
    ) {
        // prod (x - r)^mult * (x^2 + extra): only the listed real roots
        let mut a = UPoly::from_ints(&[extra, 0, 1]);
        for r in &roots {
            a = a.fmul(&UPoly::from_ints(&[-r, 1]).pow(mult));
        }
        prop_assert_eq!(count_real_roots(&a), roots.len());
        let inside = roots.iter().filter(|&&r| (-2..3).contains(&r)).count();
        let lo = Bound::At(q(-2) - Q::new(1.into(), 2.into()));
        let hi = Bound::At(q(2) + Q::new(1.into(), 2.into()));
        prop_assert_eq!(sturm_count(&a.squarefree_part().unwrap(), &lo, &hi).unwrap(), inside);
        prop_assert_eq!(sturm_count(&a, &lo, &hi).is_err(), mult == 2 && !roots.is_empty());
    }

    #[test]
    fn reduced_bases_ignore_generator_order(gens in xy_ideal(), rot in 0usize..3) {
        for o in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
            let gb = buchberger(&gens, o);
            for g in &gens {
                prop_assert!(gb.contains(g));
            }
            let mut shuffled = gens.clone();
            shuffled.rotate_left(rot % gens.len());
            shuffled.reverse();
            let again = buchberger(&shuffled, o);
            prop_assert_eq!(again.basis(), gb.basis());
        }
    }

    #[test]
    fn saturation_is_idempotent(gens in xy_ideal(), den in xy_terms(1, 2, 3)) {
        let den = sum(&den);
        prop_assume!(!den.is_zero());
        let once = saturate(&PolyIdeal::new(gens).unwrap(), &den);
        prop_assume!(once.is_ok());
        let once = once.unwrap();
        let twice = saturate(&once, &den).unwrap();
        prop_assert!(once.same_as(&twice));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn verdicts_form_a_chain(f in corpus_function()) {
        let Some((_, f)) = f else { return Ok(()) };
        let r = classify(&f).unwrap();
        prop_assert!(r.verdicts.monotone(), "{:?}", r.verdicts);
        prop_assert_eq!(r.verdicts.integral.is_yes(), r.integral_relation.is_some());
    }

    #[test]
    fn r_seminormal_iff_r_subintegral(f in corpus_function()) {
        let Some((_, f)) = f else { return Ok(()) };
        let r = classify(&f).unwrap();
        let (r_sub, sub) = match verify_r_subintegral(&f) {
            Ok(s) => (s.r_subintegral, s.subintegral),
            Err(Error::NotIntegral) => (false, false),
            Err(e) => panic!("unexpected {e}"),
        };
        prop_assert_eq!(r_sub, r.verdicts.k_r_plus.is_yes());
        prop_assert!(!r.verdicts.k_plus.is_yes() || sub);
    }

    #[test]
    fn verdicts_ignore_the_representative(f in corpus_function(), g in xy_terms(0, 2, 3), c in coeff()) {
        let Some((_, f)) = f else { return Ok(()) };
        let base = classify(&f).unwrap().verdicts;
        let shifted = f.p().add(&sum(&g).mul(f.curve().poly()));
        let moved = classify(&f.with_representative(&shifted, f.q()).unwrap()).unwrap().verdicts;
        prop_assert_eq!(moved, base);
        let scaled = f.with_representative(&f.p().scale(&q(c)), &f.q().scale(&q(c))).unwrap();
        prop_assert_eq!(classify(&scaled).unwrap().verdicts, base);
    }

    #[test]
    fn real_roots_share_the_parity_of_the_fibre(f in corpus_function()) {
        let Some((_, f)) = f else { return Ok(()) };
        for rep in classify(&f).unwrap().fibers.iter().filter(|r| r.real) {
            if let (Some(n), Some(r)) = (rep.distinct_complex, rep.distinct_real) {
                prop_assert!(r <= n && (n - r) % 2 == 0, "{} at {}", rep.fiber_poly, rep.point);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn probe_never_flags_r_seminormal_functions(f in corpus_function()) {
        let Some((_, f)) = f else { return Ok(()) };
        prop_assume!(classify(&f).unwrap().verdicts.k_r_plus.is_yes());
        for i in 0..f.real_points().len() {
            let out = continuity_probe(&f, i, &ProbeSchedule::default());
            prop_assert!(!matches!(out, ProbeOutcome::Violated(_)), "{:?} at point {}", out, i);
        }
    }
}

#[test]
fn parser_rejects_implicit_products() {
    assert!(parse_poly("2y").is_err());
    assert_eq!(parse_poly("2*y").unwrap(), MPoly::var(Var::Y).scale(&q(2)));
}
