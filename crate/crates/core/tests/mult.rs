use proptest::prelude::*;
use torimult::divisors::{limiting_relcan, relcan_minus, TWeilDivisor};
use torimult::mult::{
    adjoint_ideal, asymptotic_mult_ideal, compatible_boundary_search, exact_sequence_check, jumping_numbers, lct,
    log_mult_ideal, mult_ideal, stabilization_certificate, working_resolution, CancelToken, PairSpec, Threshold,
};
use torimult::ratgeom::cone::hilbert_basis;
use torimult::ratgeom::rational::{frac, int};
use torimult::sing::{classify_log, LogLevel};
use torimult::toric::{AffineToricVariety, PivotOrder};
use torimult::Rat;

fn var(rays: &[&[i64]]) -> AffineToricVariety {
    AffineToricVariety::new(rays.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn surface() -> impl Strategy<Value = AffineToricVariety> {
    (2i64..=7, 1i64..7)
        .prop_filter("coprime, q < p", |(p, q)| q < p && num_integer::gcd(*p, *q) == 1)
        .prop_map(|(p, q)| var(&[&[1, 0], &[q, p]]))
}

/// Exponents in the dual of `Cone((1,0),(q,p))`, as combinations of `(0,1)` and `(p,−q)`.
fn dual_ideal(x: &AffineToricVariety, raw: &[(i64, i64)]) -> Vec<Vec<i64>> {
    let (q, p) = (x.rays()[1][0], x.rays()[1][1]);
    raw.iter().map(|(a, b)| vec![b * p, a - b * q]).filter(|u| u != &vec![0, 0]).collect()
}

fn pair_on(x: &AffineToricVariety, raw: &[(i64, i64)], t: Rat) -> Option<PairSpec> {
    let gens = dual_ideal(x, raw);
    (!gens.is_empty()).then(|| PairSpec::ideal(x, t, gens).unwrap())
}

fn raw_ideal() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((0i64..4, 0i64..3), 1..4)
}

fn coeff() -> impl Strategy<Value = Rat> {
    (1i64..=8, 1i64..=6).prop_map(|(a, b)| frac(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn multiplier_ideals_shrink_with_t(x in surface(), raw in raw_ideal(), s in coeff(), extra in coeff()) {
        if let Some(p) = pair_on(&x, &raw, s.clone()) {
            let small = mult_ideal(&p).unwrap().0;
            let big = mult_ideal(&p.scaled(&((&s + &extra) / &s))).unwrap().0;
            prop_assert!(small.contains_module(&big));
        }
    }

    #[test]
    fn log_terminal_iff_trivial_multiplier_ideal(x in surface(), raw in raw_ideal(), t in coeff()) {
        if let Some(p) = pair_on(&x, &raw, t) {
            let lt = classify_log(&p).unwrap().log_level == Some(LogLevel::LogTerminal);
            prop_assert_eq!(lt, mult_ideal(&p).unwrap().0.is_unit());
        }
    }

    #[test]
    fn lct_is_where_the_ideal_first_drops(x in surface(), raw in raw_ideal()) {
        if let Some(p) = pair_on(&x, &raw, int(1)) {
            match lct(&p).unwrap() {
                Threshold::Finite(c) => {
                    prop_assert!(!mult_ideal(&p.scaled(&c)).unwrap().0.is_unit());
                    prop_assert!(mult_ideal(&p.scaled(&(&c * frac(99, 100)))).unwrap().0.is_unit());
                    let jumps = jumping_numbers(&p, &c).unwrap();
                    prop_assert_eq!(jumps, vec![c]);
                }
                Threshold::Infinity => prop_assert!(false, "nonzero ideal with infinite lct"),
            }
        }
    }

    #[test]
    fn limiting_relcan_bounded_by_minus_with_equality_at_m_star(x in surface(), m in 1i64..5) {
        let m_star = stabilization_certificate(&x).m_star;
        let f = working_resolution(&PairSpec::trivial(&x), m * m_star, PivotOrder::Forward).unwrap();
        let minus = relcan_minus(&f).unwrap();
        prop_assert!(limiting_relcan(&f, m).unwrap().le(&minus));
        prop_assert_eq!(limiting_relcan(&f, m_star).unwrap(), minus);
    }

    #[test]
    fn compatible_boundary_gives_the_same_ideal(x in surface(), raw in raw_ideal(), t in coeff()) {
        if let Some(p) = pair_on(&x, &raw, t) {
            let m = stabilization_certificate(&x).m_star;
            if let Some(b) = compatible_boundary_search(&p, m, m, &CancelToken::new()).unwrap() {
                let j = mult_ideal(&p).unwrap().0;
                let jd = log_mult_ideal(&b, &p).unwrap();
                prop_assert_eq!(&jd, &j);
                let lt = classify_log(&p).unwrap().log_level == Some(LogLevel::LogTerminal);
                prop_assert_eq!(lt, jd.is_unit());
            }
        }
    }
}

#[test]
fn quadric_maximal_ideal_against_valuations() {
    let x = var(&[&[1, 0], &[1, 2]]);
    let maximal = vec![vec![0, 1], vec![1, 0], vec![2, -1]];
    let p = PairSpec::ideal(&x, int(1), maximal.clone()).unwrap();
    let j = mult_ideal(&p).unwrap().0;
    let hb = hilbert_basis(x.cone()).unwrap();
    // A(w) = ⟨(1,0), w⟩ − 1 for the Gorenstein quadric; u ∈ J iff ⟨u,w⟩ + A(w) − Z(w) > −1.
    for a in -4i64..=4 {
        for b in -4i64..=4 {
            let u = [a, b];
            if !x.in_dual(&u) {
                continue;
            }
            let ok = hb.iter().all(|w| {
                let z = maximal.iter().map(|g| g[0] * w[0] + g[1] * w[1]).min().unwrap();
                u[0] * w[0] + u[1] * w[1] + w[0] - 1 - z > -1
            });
            assert_eq!(j.contains(&u), ok, "u = {u:?}");
        }
    }
    assert_eq!(j.gens(), maximal.as_slice());
}

#[test]
fn cusp_plane_adjoint_sequence() {
    let x = var(&[&[1, 0], &[0, 1]]);
    for t in [frac(1, 2), frac(5, 6), int(1), frac(3, 2)] {
        let p = PairSpec::ideal(&x, t, vec![vec![2, 0], vec![0, 3]]).unwrap();
        let h = TWeilDivisor::prime(&x, 0);
        let rep = exact_sequence_check(&p, &h).unwrap();
        assert!(rep.sandwich && rep.kernel_matches, "{rep:?}");
        assert!(rep.restriction.as_ref().is_some_and(|r| r.matches), "{rep:?}");
        assert_eq!(adjoint_ideal(&p, &h).unwrap(), rep.adjoint);
    }
}

#[test]
fn asymptotic_examples() {
    let plane = var(&[&[1, 0], &[0, 1]]);
    let r = asymptotic_mult_ideal(&plane, &TWeilDivisor::zero(&plane), &int(3)).unwrap();
    assert!(r.ideal.is_unit());
    let x = var(&[&[1, 0], &[1, 2]]);
    let l = TWeilDivisor::prime(&x, 0);
    let r = asymptotic_mult_ideal(&x, &l, &int(1)).unwrap();
    assert!(r.ideal.is_unit());
    assert_eq!(r.checked.first(), Some(&2));
}
