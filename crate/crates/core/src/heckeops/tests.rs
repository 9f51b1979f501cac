use super::{div_exact, matrix_on_span, required_scale, BasicRep, LaurentPoly};
use crate::initdata::{
    b_untwisted_zn, c2_exceptional, gl, koornwinder, reduced_twisted, AffineRoot, InitialData,
    LatticeChoice,
};
use crate::qnum::{frac, sc, ParameterSet, Regime, Scalar};
use crate::rootdata::{RootSystem, Vector};
use crate::weyl::{saturation_sorted, AffineWeyl};
use num_traits::{One, Zero};

/// q = (2/3)^(2L) with L the minimal usable scale; kappas pairwise distinct.
fn params_for(d: &InitialData) -> ParameterSet {
    let pool = [
        frac(1, 2),
        frac(3, 5),
        frac(2, 5),
        frac(5, 7),
        frac(4, 7),
        frac(3, 7),
        frac(2, 7),
    ];
    let kappas = (0..d.num_orbits()).map(|o| pool[o].clone()).collect();
    ParameterSet::new(frac(2, 3), required_scale(d), kappas, Regime::Orthogonality).unwrap()
}

fn monomial_grid(dim: usize, radius: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..dim {
        let mut next = Vec::new();
        for base in &out {
            for c in -radius..=radius {
                let mut b = base.clone();
                b.push(c);
                next.push(b);
            }
        }
        out = next;
    }
    out
}

/// A dense polynomial with pairwise distinct coefficients: cancellations in
/// operator identities must happen across terms, not per monomial.
fn mixed_poly(dim: usize, radius: i64) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for (n, e) in monomial_grid(dim, radius).into_iter().enumerate() {
        p.add_term(e, frac(n as i64 + 1, 3));
    }
    p
}

fn grid_radius(d: &InitialData) -> i64 {
    if d.lattice().rank() <= 2 {
        2
    } else {
        1
    }
}

#[test]
fn required_scale_examples() {
    assert_eq!(required_scale(&gl(2).unwrap()), 1);
    assert_eq!(required_scale(&gl(3).unwrap()), 1);
    // the affine node of the twisted data sits at level 1/2
    assert_eq!(required_scale(&koornwinder(1).unwrap()), 2);
    assert_eq!(required_scale(&koornwinder(2).unwrap()), 2);
    assert_eq!(required_scale(&c2_exceptional().unwrap()), 1);
    // weight-lattice pairings of A1 have denominator 2
    let a1 = reduced_twisted(
        RootSystem::type_a(1),
        LatticeChoice::Weight,
        LatticeChoice::Weight,
    )
    .unwrap();
    assert_eq!(required_scale(&a1), 2);
}

#[test]
fn expanded_action_matches_literal_division() {
    for d in [gl(3).unwrap(), koornwinder(2).unwrap(), c2_exceptional().unwrap()] {
        let params = params_for(&d);
        let rep = BasicRep::new(&d, &params).unwrap();
        let dim = d.lattice().rank();
        let r = grid_radius(&d);
        let f = mixed_poly(dim, r);
        for i in 0..=d.rank() {
            for e in monomial_grid(dim, r) {
                let m = LaurentPoly::monomial(e, Scalar::one());
                assert_eq!(
                    rep.t_apply(i, &m),
                    rep.t_apply_division(i, &m).unwrap(),
                    "{} i={i} on a monomial",
                    d.label()
                );
            }
            assert_eq!(
                rep.t_apply(i, &f),
                rep.t_apply_division(i, &f).unwrap(),
                "{} i={i} on a dense polynomial",
                d.label()
            );
        }
    }
}

#[test]
fn division_reports_nonzero_remainders() {
    // 1 - s x^(2,0) does not divide x^(1,0)
    let f = LaurentPoly::monomial(vec![1, 0], Scalar::one());
    assert!(div_exact(&f, &[2, 0], &frac(1, 2)).is_err());
    // but it divides 1 - s^2 x^(4,0)
    let mut g = LaurentPoly::one(2);
    g.add_term(vec![4, 0], -frac(1, 4));
    let q = div_exact(&g, &[2, 0], &frac(1, 2)).unwrap();
    let mut expect = LaurentPoly::one(2);
    expect.add_term(vec![2, 0], frac(1, 2));
    assert_eq!(q, expect);
}

#[test]
fn quadratic_relations_and_inverses() {
    let presets = [
        gl(2).unwrap(),
        gl(3).unwrap(),
        koornwinder(1).unwrap(),
        koornwinder(2).unwrap(),
        c2_exceptional().unwrap(),
        b_untwisted_zn(2).unwrap(),
        reduced_twisted(
            RootSystem::type_a(1),
            LatticeChoice::Weight,
            LatticeChoice::Weight,
        )
        .unwrap(),
    ];
    for d in presets {
        let params = params_for(&d);
        let rep = BasicRep::new(&d, &params).unwrap();
        let dim = d.lattice().rank();
        let f = mixed_poly(dim, grid_radius(&d));
        let one = LaurentPoly::one(dim);
        for i in 0..=d.rank() {
            let kap = rep.kappa_i(i);
            // constants: s_{i,q} fixes them, so T_i scales by kappa_i
            assert_eq!(rep.t_apply(i, &one), one.scale(&kap));
            // T_i^2 = (kappa_i - kappa_i^{-1}) T_i + 1
            let tf = rep.t_apply(i, &f);
            let ttf = rep.t_apply(i, &tf);
            assert_eq!(
                ttf,
                &tf.scale(&(&kap - &kap.recip())) + &f,
                "quadratic relation fails on {} at i={i}",
                d.label()
            );
            assert_eq!(rep.t_apply_inv(i, &tf), f);
        }
    }
}

#[test]
fn braid_relations_follow_the_affine_cartan_matrix() {
    for d in [
        gl(3).unwrap(),
        koornwinder(2).unwrap(),
        c2_exceptional().unwrap(),
        b_untwisted_zn(2).unwrap(),
    ] {
        let params = params_for(&d);
        let rep = BasicRep::new(&d, &params).unwrap();
        let cartan = d.affine_cartan();
        let dim = d.lattice().rank();
        let f = mixed_poly(dim, 1);
        for i in 0..=d.rank() {
            for j in 0..i {
                let m = match cartan[i][j] * cartan[j][i] {
                    0 => 2,
                    1 => 3,
                    2 => 4,
                    3 => 6,
                    // infinite order: no braid relation to check
                    _ => continue,
                };
                let w1: Vec<usize> = (0..m).map(|t| if t % 2 == 0 { i } else { j }).collect();
                let w2: Vec<usize> = (0..m).map(|t| if t % 2 == 0 { j } else { i }).collect();
                assert_eq!(
                    rep.t_word_apply(&w1, &f),
                    rep.t_word_apply(&w2, &f),
                    "braid relation of order {m} fails on {} at (i,j)=({i},{j})",
                    d.label()
                );
            }
        }
    }
}

#[test]
fn length_zero_elements_conjugate_the_generators() {
    let d = gl(2).unwrap();
    let params = params_for(&d);
    let rep = BasicRep::new(&d, &params).unwrap();
    let aw = AffineWeyl::new(&d);
    let (omega, word) = aw.reduced_word(&aw.translation(Vector::from_ints(&[1, 0])));
    assert_eq!(word.len(), 1);
    let perm = aw.simple_permutation(&omega);
    assert_eq!(perm, vec![1, 0]);
    let omega_inv = aw.inverse(&omega);
    let f = mixed_poly(2, 2);
    for i in 0..=1 {
        let conj = rep.w_act(&omega, &rep.t_apply(i, &rep.w_act(&omega_inv, &f)));
        assert_eq!(conj, rep.t_apply(perm[i], &f), "omega T_{i} omega^-1");
    }
}

#[test]
fn w_act_is_a_homomorphism_on_polynomials() {
    let d = koornwinder(2).unwrap();
    let params = params_for(&d);
    let rep = BasicRep::new(&d, &params).unwrap();
    let aw = AffineWeyl::new(&d);
    let f = mixed_poly(2, 1);
    let els = [
        aw.simple(0),
        aw.simple(2),
        aw.translation(Vector::from_ints(&[1, 0])),
        aw.translation(Vector::from_ints(&[-1, 1])),
        aw.compose(&aw.simple(1), &aw.translation(Vector::from_ints(&[0, 1]))),
    ];
    for a in &els {
        for b in &els {
            assert_eq!(
                rep.w_act(&aw.compose(a, b), &f),
                rep.w_act(a, &rep.w_act(b, &f))
            );
        }
    }
}

#[test]
fn t_elem_inverse_roundtrips() {
    for d in [koornwinder(2).unwrap(), c2_exceptional().unwrap()] {
        let params = params_for(&d);
        let rep = BasicRep::new(&d, &params).unwrap();
        let aw = AffineWeyl::new(&d);
        let f = mixed_poly(2, 1);
        let basis = d.dual_lattice().basis().to_vec();
        let mut els = vec![aw.simple(0), aw.simple(1)];
        for b in &basis {
            els.push(aw.translation(b.clone()));
            els.push(aw.translation(-b));
        }
        els.push(aw.compose(&els[0], &els[2]));
        for w in &els {
            assert_eq!(rep.t_elem_inv_apply(w, &rep.t_elem_apply(w, &f)), f);
        }
    }
}

#[test]
fn y_operators_commute_and_compose() {
    for d in [gl(2).unwrap(), koornwinder(2).unwrap(), c2_exceptional().unwrap()] {
        let params = params_for(&d);
        let rep = BasicRep::new(&d, &params).unwrap();
        let dim = d.lattice().rank();
        let f = mixed_poly(dim, 1);
        let basis = d.dual_lattice().basis().to_vec();
        let xi = &basis[0];
        let eta = &basis[basis.len() - 1];
        let ab = rep.y_apply(xi, &rep.y_apply(eta, &f));
        let ba = rep.y_apply(eta, &rep.y_apply(xi, &f));
        assert_eq!(ab, ba, "commutativity fails on {}", d.label());
        assert_eq!(rep.y_apply(&(xi + eta), &f), ab, "additivity fails");
        assert_eq!(rep.y_apply(&-xi, &rep.y_apply(xi, &f)), f, "inverse fails");
        let zero = Vector::zeros(d.root_system().ambient_dim());
        assert_eq!(rep.y_apply(&zero, &f), f);
    }
}

#[test]
fn y_is_independent_of_the_dominant_decomposition() {
    let d = koornwinder(2).unwrap();
    let params = params_for(&d);
    let rep = BasicRep::new(&d, &params).unwrap();
    let aw = AffineWeyl::new(&d);
    let f = mixed_poly(2, 1);
    // xi = eps_2 = (1,1) - (1,0) = (2,2) - (2,1), all four parts dominant
    let xi = Vector::from_ints(&[0, 1]);
    let split = |a: &[i64], b: &[i64]| -> LaurentPoly {
        let inv = rep.t_elem_inv_apply(&aw.translation(Vector::from_ints(b)), &f);
        rep.t_elem_apply(&aw.translation(Vector::from_ints(a)), &inv)
    };
    let via1 = split(&[1, 1], &[1, 0]);
    let via2 = split(&[2, 2], &[2, 1]);
    assert_eq!(via1, via2);
    assert_eq!(rep.y_apply(&xi, &f), via1);
}

#[test]
fn gl3_y_operators_match_the_classical_words() {
    let d = gl(3).unwrap();
    let params = params_for(&d);
    let rep = BasicRep::new(&d, &params).unwrap();
    let aw = AffineWeyl::new(&d);
    let eps: Vec<Vector> = (0..3).map(|i| Vector::unit(3, i)).collect();
    let (omega, word) = aw.reduced_word(&aw.translation(eps[0].clone()));
    assert_eq!(word.len(), 2);
    let f = mixed_poly(3, 1);
    // Y^{eps_1} = u(eps_1) T_2 T_1
    let y1 = rep.w_act(&omega, &rep.t_word_apply(&[2, 1], &f));
    assert_eq!(rep.y_apply(&eps[0], &f), y1);
    // Y^{eps_2} = T_1^{-1} u(eps_1) T_2
    let y2 = rep.t_apply_inv(1, &rep.w_act(&omega, &rep.t_apply(2, &f)));
    assert_eq!(rep.y_apply(&eps[1], &f), y2);
    // Y^{eps_3} = T_2^{-1} T_1^{-1} u(eps_1)
    let y3 = rep.t_apply_inv(2, &rep.t_apply_inv(1, &rep.w_act(&omega, &f)));
    assert_eq!(rep.y_apply(&eps[2], &f), y3);
}

#[test]
fn y_matrices_are_triangular_on_saturation_spans() {
    for d in [koornwinder(2).unwrap(), b_untwisted_zn(2).unwrap()] {
        let params = params_for(&d);
        let rep = BasicRep::new(&d, &params).unwrap();
        let span_vecs = saturation_sorted(&d, &Vector::from_ints(&[1, 1]));
        let span: Vec<Vec<i64>> = span_vecs.iter().map(|v| rep.coords(v)).collect();
        for xi in d.dual_lattice().basis() {
            let mat = matrix_on_span(&span, |p| rep.y_apply(xi, p));
            for (j, col) in mat.iter().enumerate() {
                assert!(!col[j].is_zero(), "diagonal entry vanishes at {j}");
                for (i, entry) in col.iter().enumerate().skip(j + 1) {
                    assert!(
                        entry.is_zero(),
                        "{}: Y^{xi} has a strictly lower entry at ({i},{j})",
                        d.label()
                    );
                }
            }
        }
    }
}

#[test]
fn symmetrizer_is_idempotent_with_invariant_image() {
    for d in [gl(2).unwrap(), koornwinder(1).unwrap(), koornwinder(2).unwrap()] {
        let params = params_for(&d);
        let rep = BasicRep::new(&d, &params).unwrap();
        let aw = AffineWeyl::new(&d);
        let dim = d.lattice().rank();
        let f = mixed_poly(dim, grid_radius(&d));
        let cf = rep.symmetrize(&f);
        assert_eq!(rep.symmetrize(&cf), cf, "idempotence fails on {}", d.label());
        for i in 1..=d.rank() {
            let si = aw.from_finite(d.weyl().elem_from_word(&[i]));
            assert_eq!(rep.w_act(&si, &cf), cf, "image not invariant");
            assert_eq!(rep.t_apply(i, &cf), cf.scale(&rep.kappa_i(i)), "T_i C_+ != kappa_i C_+");
        }
        let one = LaurentPoly::one(dim);
        assert_eq!(rep.symmetrize(&one), one);
    }
}

#[test]
fn c_functions_recover_the_t_action() {
    for d in [koornwinder(1).unwrap(), c2_exceptional().unwrap()] {
        let params = params_for(&d);
        let rep = BasicRep::new(&d, &params).unwrap();
        let aw = AffineWeyl::new(&d);
        let dim = d.lattice().rank();
        let f = mixed_poly(dim, 2);
        for i in 0..=d.rank() {
            let ai = d.affine_simple(i);
            let (num, den) = rep.c_function(&ai);
            let e2: Vec<i64> = rep.coords(&ai.grad).iter().map(|c| 2 * c).collect();
            let s2 = params.q_pow(&(&ai.level * sc(2))).unwrap();
            // the denominator is 1 - q^{2l} x^{2 beta}
            let mut expect_den = LaurentPoly::one(dim);
            expect_den.add_term(e2.clone(), -s2.clone());
            assert_eq!(den, expect_den);
            // pi(T_i) = kappa_i + kappa_i^{-1} c_{a_i} (s_{i,q} - 1)
            let sf = rep.w_act(&aw.simple(i), &f);
            let quot = div_exact(&(&num * &(&sf - &f)), &e2, &s2).unwrap();
            let kap = rep.kappa_i(i);
            let got = &f.scale(&kap) + &quot.scale(&kap.recip());
            assert_eq!(got, rep.t_apply(i, &f), "{} i={i}", d.label());
        }
    }
}

#[test]
fn c_functions_are_weyl_equivariant() {
    for d in [koornwinder(2).unwrap(), c2_exceptional().unwrap()] {
        let params = params_for(&d);
        let rep = BasicRep::new(&d, &params).unwrap();
        let aw = AffineWeyl::new(&d);
        let roots = [
            d.affine_simple(0),
            d.affine_simple(1),
            d.affine_simple(2),
            aw.act(&aw.simple(1), &d.affine_simple(2)),
        ];
        let els = [
            aw.simple(0),
            aw.simple(2),
            aw.translation(d.dual_lattice().basis()[0].clone()),
            aw.compose(&aw.simple(1), &aw.simple(0)),
        ];
        for a in &roots {
            let (num, den) = rep.c_function(a);
            for w in &els {
                let wa = aw.act(w, a);
                let (num_w, den_w) = rep.c_function(&wa);
                // c_a(w_q^{-1} t) = c_{wa}(t), as an identity of the
                // numerator and denominator polynomials separately
                assert_eq!(rep.w_act(w, &num), num_w);
                assert_eq!(rep.w_act(w, &den), den_w);
            }
        }
    }
}

#[test]
fn bernstein_zelevinsky_cross_relations() {
    for d in [
        gl(2).unwrap(),
        koornwinder(1).unwrap(),
        koornwinder(2).unwrap(),
        c2_exceptional().unwrap(),
    ] {
        let dual = d.dual();
        let map = d.dual_multiplicity_map(&dual);
        let params = params_for(&d);
        let rep = BasicRep::new(&d, &params).unwrap();
        let rs = d.root_system();
        let dim = d.lattice().rank();
        let f = mixed_poly(dim, 1);
        for i in 1..=d.rank() {
            let aid = dual.root_system().simple_root(i).clone();
            let aid_aff = AffineRoot::finite(aid.clone());
            let twice = aid_aff.double();
            let doubled = dual.is_affine_root(&twice);
            // the dual multiplicity of alpha_i^d, transported back
            let kd = params.kappa(map[dual.orbit_index(&aid_aff)]);
            let kd2 = if doubled {
                params.kappa(map[dual.orbit_index(&twice)])
            } else {
                kd.clone()
            };
            let c1 = &kd - &kd.recip();
            let c2 = &kd2 - &kd2.recip();
            let mut exponents: Vec<Vector> = d.dual_lattice().basis().to_vec();
            exponents.extend(d.dual_lattice().basis().iter().map(|b| -b));
            for xi in &exponents {
                let sxi = rs.simple_reflect(i, xi);
                let lhs = &rep.y_apply(xi, &rep.t_apply(i, &f))
                    - &rep.t_apply(i, &rep.y_apply(&sxi, &f));
                // (t^xi - t^{s_i xi}) / (1 - t^{-2 alpha_i^d}) expanded as a
                // geometric sum in u = t^{-alpha_i^d}, composed with Y
                let k_s = xi.dot(&aid.covector());
                assert!(k_s.is_integer());
                let k = i64::try_from(k_s.to_integer()).unwrap();
                let yterm =
                    |j: i64| -> LaurentPoly { rep.y_apply(&(xi - &aid.scale(&sc(j))), &f) };
                let mut rhs = LaurentPoly::zero();
                if doubled {
                    assert!(k % 2 == 0);
                    let m = k / 2;
                    if m > 0 {
                        for j in 0..m {
                            rhs = &rhs + &yterm(2 * j).scale(&c1);
                            rhs = &rhs + &yterm(2 * j + 1).scale(&c2);
                        }
                    } else {
                        for j in 1..=(-m) {
                            rhs = &rhs - &yterm(-2 * j).scale(&c1);
                            rhs = &rhs - &yterm(-2 * j + 1).scale(&c2);
                        }
                    }
                } else if k > 0 {
                    for j in 0..k {
                        rhs = &rhs + &yterm(j).scale(&c1);
                    }
                } else {
                    for j in 1..=(-k) {
                        rhs = &rhs - &yterm(-j).scale(&c1);
                    }
                }
                assert_eq!(
                    lhs,
                    rhs,
                    "cross relation fails on {} at i={i}, xi={xi}",
                    d.label()
                );
            }
        }
    }
}
