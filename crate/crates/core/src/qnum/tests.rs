use super::*;
use proptest::prelude::*;

#[test]
fn qpochhammer_empty_product_is_one() {
    assert_eq!(qpochhammer(&frac(7, 2), &frac(1, 3), 0), sc(1));
}

#[test]
fn qpochhammer_small_values() {
    // (1/2; 1/3)_2 = (1 - 1/2)(1 - 1/6) = 5/12
    assert_eq!(qpochhammer(&frac(1, 2), &frac(1, 3), 2), frac(5, 12));
    // (1; q)_r vanishes for r >= 1
    assert_eq!(qpochhammer(&sc(1), &frac(1, 3), 3), sc(0));
    assert_eq!(
        qpochhammer_multi(&[frac(1, 2), sc(2)], &frac(1, 3), 1),
        frac(1, 2) * sc(-1)
    );
}

#[test]
fn phi_series_terminating_2phi1() {
    // upper (9, 2) with q = 1/3: 9 = q^(-2), so the sum has three terms.
    // 1 - 21 - 1323/8 = -1483/8, summed by hand from the term recurrence.
    let q = frac(1, 3);
    let got = phi_series(&[sc(9), sc(2)], &[sc(5)], &q, &sc(7), 50).unwrap();
    assert_eq!(got, frac(-1483, 8));
}

#[test]
fn phi_series_compensating_factor_1phi1() {
    // 1phi1 carries ((-1)^k q^(k(k-1)/2)) per term: 1 - 60 - 675 = -734.
    let q = frac(1, 3);
    let got = phi_series(&[sc(9)], &[sc(2)], &q, &sc(5), 50).unwrap();
    assert_eq!(got, sc(-734));
}

#[test]
fn phi_series_reports_lower_parameter_pole() {
    // lower parameter 3 = q^(-1) with q = 1/3 kills a denominator at k = 1
    let q = frac(1, 3);
    let err = phi_series(&[sc(5)], &[sc(3)], &q, &sc(1), 50).unwrap_err();
    assert!(matches!(err, Error::PhiDivision(2)));
}

#[test]
fn qseries_exact_polynomial_algebra() {
    let one = QSeries::one();
    let x = QSeries::x_power(1);
    // finite sums and products of monomials never truncate
    let prod = (&one + &x) * (&one - &x);
    assert!(prod.is_exact());
    assert_eq!(prod, &one - &QSeries::x_power(2));
    assert_eq!(prod.coeff(0), sc(1));
    assert_eq!(prod.coeff(1), sc(0));
    assert_eq!(prod.coeff(2), sc(-1));
    assert_eq!(prod.coeff(9), sc(0));
    assert_eq!(prod.valuation(), Some(0));
    assert_eq!(prod.precision(), None);

    // Laurent directions: monomial inverses stay exact
    let m = QSeries::monomial(frac(2, 3), -4);
    let minv = m.recip();
    assert!(minv.is_exact());
    assert_eq!(minv, QSeries::monomial(frac(3, 2), 4));
    assert_eq!(&m * &minv, one);
    assert_eq!(pow_i(&m, -2), QSeries::monomial(frac(9, 4), 8));
}

#[test]
fn qseries_geometric_inverse() {
    let one = QSeries::one();
    let one_minus_x = &one - &QSeries::x_power(1);
    let inv = one_minus_x.recip();
    let prec = inv.precision().expect("a unit inverse is truncated");
    assert_eq!(prec, series_precision());
    for d in 0..prec {
        assert_eq!(inv.coeff(d), sc(1));
    }
    assert_eq!(inv.known_coeff(prec), None);
    assert_eq!(&inv * &one_minus_x, one);

    let t = inv.truncated(3);
    assert_eq!(t.precision(), Some(3));
    assert_eq!(t.coeff(2), sc(1));
    assert_eq!(t.known_coeff(3), None);
}

#[test]
fn qseries_zero_certification() {
    let n = series_precision();
    let x = QSeries::x_power(1);
    let one_minus_x = QSeries::one() - &x;
    let cancel = one_minus_x.recip() * &one_minus_x - QSeries::one();
    // vanishes modulo the window; beyond it nothing can be certified
    assert!(cancel.certified_zero_to(n).unwrap());
    assert!(matches!(
        cancel.certified_zero_to(n + 1),
        Err(Error::SeriesPrecision(_))
    ));
    // a visible nonzero coefficient decides immediately
    let nz = &x + &cancel;
    assert!(!nz.certified_zero_to(n).unwrap());
    // the exact zero certifies every order
    assert!(QSeries::zero().certified_zero_to(1_000_000).unwrap());
}

#[test]
fn qseries_division_certifies_closed_forms() {
    let x = QSeries::x_power(1);
    let quotient = (QSeries::one() - QSeries::x_power(2)) / (QSeries::one() - &x);
    assert!(!quotient.is_exact());
    let diff = &quotient - &(QSeries::one() + &x);
    assert!(diff.certified_zero_to(series_precision()).unwrap());
}

#[test]
fn qseries_equality_is_modulo_the_finer_window() {
    let a = (QSeries::one() - QSeries::x_power(1)).recip();
    let b = a.truncated(5);
    assert_eq!(a, b);
    let c = &b + &QSeries::x_power(3);
    assert_ne!(a, c);
}

#[test]
fn qseries_precision_control_is_scoped() {
    let prev = set_series_precision(8);
    let g = (QSeries::one() - QSeries::x_power(2)).recip();
    assert_eq!(g.precision(), Some(8));
    assert_eq!(g.coeff(6), sc(1));
    assert_eq!(g.coeff(3), sc(0));
    set_series_precision(prev);
    assert_eq!(series_precision(), prev);
}

#[test]
fn parameter_set_q_power_grid() {
    // q^(1/4) = 2/3, kappa = q^(3/2)
    let p = ParameterSet::from_q_powers(frac(2, 3), 2, vec![frac(3, 2)], Regime::Orthogonality)
        .unwrap();
    assert_eq!(p.q(), pow_i(&frac(2, 3), 4));
    assert_eq!(p.kappa(0), pow_i(&frac(2, 3), 6));
    assert_eq!(*p.kappa_half(0), pow_i(&frac(2, 3), 3));
    assert_eq!(p.kappa_q_exponent(0), Some(&frac(3, 2)));
    assert_eq!(p.q_pow(&frac(1, 2)).unwrap(), pow_i(&frac(2, 3), 2));
    assert_eq!(p.q_units(&frac(-5, 4)).unwrap(), -5);
    assert!(p.q_pow(&frac(1, 3)).is_err());

    let inv = p.inverted();
    assert_eq!(inv.regime(), Regime::Relaxed);
    assert_eq!(p.q() * inv.q(), sc(1));
    assert_eq!(p.kappa(0) * inv.kappa(0), sc(1));
    // exponents are relative to the inverted base, so they survive as-is
    assert_eq!(inv.kappa_q_exponent(0), Some(&frac(3, 2)));
}

#[test]
fn parameter_set_transport_along_orbit_map() {
    let p = ParameterSet::from_q_powers(
        frac(2, 3),
        2,
        vec![frac(3, 2), frac(1, 2)],
        Regime::Orthogonality,
    )
    .unwrap();
    let t = p.transported(&[1, 0, 0]);
    assert_eq!(t.num_orbits(), 3);
    assert_eq!(t.kappa(0), p.kappa(1));
    assert_eq!(t.kappa(1), p.kappa(0));
    assert_eq!(t.kappa(2), p.kappa(0));
    assert_eq!(t.kappa_q_exponent(0), Some(&frac(1, 2)));
    assert_eq!(t.kappa_q_exponent(2), Some(&frac(3, 2)));
    assert_eq!(t.q(), p.q());
}

#[test]
fn parameter_set_formal_series_field() {
    // L = 2: the base root is x = q^(1/4); kappa = q^(3/2) = x^6
    let p = ParameterSet::<QSeries>::formal_series(2, vec![frac(3, 2)]).unwrap();
    assert_eq!(p.q(), QSeries::x_power(4));
    assert_eq!(*p.kappa_half(0), QSeries::x_power(3));
    assert_eq!(p.kappa(0), QSeries::x_power(6));
    assert_eq!(p.kappa_q_exponent(0), Some(&frac(3, 2)));
    assert_eq!(p.q_pow(&frac(1, 2)).unwrap(), QSeries::x_power(2));
    assert!(p.q_pow(&frac(1, 3)).is_err());
    // the formal field demands strictly positive kappa exponents
    assert!(matches!(
        ParameterSet::<QSeries>::formal_series(2, vec![frac(-1, 2)]),
        Err(Error::SeriesAdmissibility(_))
    ));
}

#[test]
fn parameter_set_rejects_out_of_window_values() {
    assert!(ParameterSet::new(frac(3, 2), 1, vec![frac(1, 2)], Regime::Orthogonality).is_err());
    assert!(ParameterSet::new(frac(2, 3), 1, vec![sc(2)], Regime::Orthogonality).is_err());
    assert!(ParameterSet::new(frac(3, 2), 1, vec![sc(2)], Regime::Relaxed).is_ok());
    assert!(ParameterSet::new(frac(-1, 2), 1, vec![], Regime::Relaxed).is_err());
}

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (-12i64..=12, 1i64..=9).prop_map(|(n, d)| frac(n, d))
}

proptest! {
    #[test]
    fn qpochhammer_splits_multiplicatively(
        x in small_scalar(),
        qn in 1i64..=5,
        qd in 6i64..=9,
        r in 0usize..6,
        s in 0usize..6,
    ) {
        let q = frac(qn, qd);
        let lhs = qpochhammer(&x, &q, r + s);
        let shifted = pow_i(&q, r as i64) * &x;
        let rhs = qpochhammer(&x, &q, r) * qpochhammer(&shifted, &q, s);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn qseries_inverse_is_two_sided(
        coeffs in proptest::collection::vec(small_scalar(), 5),
        unit in small_scalar(),
        e in -4i64..=4,
    ) {
        prop_assume!(!num_traits::Zero::is_zero(&unit));
        let mut s = QSeries::monomial(unit, e);
        for (j, c) in coeffs.iter().enumerate() {
            s += QSeries::monomial(c.clone(), e + 1 + j as i64);
        }
        prop_assert_eq!(&s * &s.recip(), QSeries::one());
        prop_assert_eq!(&s.recip() * &s, QSeries::one());
    }

    #[test]
    fn qseries_ring_laws_mod_window(
        ca in proptest::collection::vec(small_scalar(), 3),
        cb in proptest::collection::vec(small_scalar(), 3),
        cc in proptest::collection::vec(small_scalar(), 3),
    ) {
        let build = |cs: &[Scalar], v: i64| {
            let mut s = QSeries::zero();
            for (j, c) in cs.iter().enumerate() {
                s += QSeries::monomial(c.clone(), v + j as i64);
            }
            s
        };
        let a = build(&ca, -1);
        let b = build(&cb, 0).truncated(4);
        let c = build(&cc, 1);
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn pow_i_is_a_group_homomorphism(x in small_scalar(), a in -6i64..=6, b in -6i64..=6) {
        prop_assume!(!num_traits::Zero::is_zero(&x));
        let lhs = pow_i(&x, a + b);
        let rhs = pow_i(&x, a) * pow_i(&x, b);
        prop_assert_eq!(lhs, rhs);
    }
}
