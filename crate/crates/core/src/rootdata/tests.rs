use super::*;
use crate::qnum::frac;

fn v(coords: &[i64]) -> Vector {
    Vector::from_ints(coords)
}

#[test]
fn root_counts_and_lengths() {
    assert_eq!(RootSystem::type_a(2).positive_roots().len(), 3);
    assert_eq!(RootSystem::type_a(3).positive_roots().len(), 6);
    assert_eq!(RootSystem::type_b(2).positive_roots().len(), 4);
    assert_eq!(RootSystem::type_b(3).positive_roots().len(), 9);
    assert_eq!(RootSystem::type_c(3).positive_roots().len(), 9);
    assert_eq!(RootSystem::type_d(4).positive_roots().len(), 12);

    assert!(!RootSystem::type_a(2).has_two_root_lengths());
    assert!(RootSystem::type_b(2).has_two_root_lengths());
    assert_eq!(RootSystem::type_c(2).root_lengths2(), vec![sc(2), sc(4)]);
}

#[test]
fn reflections_preserve_roots() {
    for rs in [
        RootSystem::type_a(2),
        RootSystem::type_b(3),
        RootSystem::type_c(2),
        RootSystem::type_d(3),
    ] {
        for a in rs.roots().collect::<Vec<_>>() {
            for i in 1..=rs.rank() {
                assert!(rs.is_root(&rs.simple_reflect(i, &a)));
            }
        }
    }
}

#[test]
fn highest_roots() {
    let b2 = RootSystem::type_b(2);
    assert_eq!(b2.highest_root(), v(&[1, 1]));
    assert_eq!(b2.highest_short_root(), v(&[1, 0]));
    assert_eq!(b2.height(&b2.highest_root()), sc(3));

    let c2 = RootSystem::type_c(2);
    assert_eq!(c2.highest_root(), v(&[2, 0]));
    assert_eq!(c2.highest_short_root(), v(&[1, 1]));

    let a2 = RootSystem::type_a(2);
    assert_eq!(a2.highest_root(), v(&[1, 0, -1]));
    // one root length: highest short root is the highest root
    assert_eq!(a2.highest_short_root(), a2.highest_root());
}

#[test]
fn fundamental_weights_satisfy_defining_property() {
    for rs in [
        RootSystem::type_a(3),
        RootSystem::type_b(3),
        RootSystem::type_c(2),
    ] {
        let ws = rs.fundamental_weights();
        for (i, w) in ws.iter().enumerate() {
            for j in 1..=rs.rank() {
                let p = w.dot(&rs.simple_root(j).covector());
                assert_eq!(p, sc((j == i + 1) as i64));
            }
            // weights live in the root span
            assert!(rs.coords_in_simple(w).is_some());
        }
    }
    let b2 = RootSystem::type_b(2);
    let ws = b2.fundamental_weights();
    assert_eq!(ws[0], v(&[1, 0]));
    assert_eq!(ws[1], Vector(vec![frac(1, 2), frac(1, 2)]));
}

#[test]
fn cartan_matrix_b2() {
    let b2 = RootSystem::type_b(2);
    assert_eq!(b2.cartan_matrix(), vec![vec![2, -1], vec![-2, 2]]);
}

#[test]
fn weyl_group_orders() {
    assert_eq!(WeylGroup::new(&RootSystem::type_a(2)).order(), 6);
    assert_eq!(WeylGroup::new(&RootSystem::type_a(3)).order(), 24);
    assert_eq!(WeylGroup::new(&RootSystem::type_b(2)).order(), 8);
    assert_eq!(WeylGroup::new(&RootSystem::type_b(3)).order(), 48);
    assert_eq!(WeylGroup::new(&RootSystem::type_c(2)).order(), 8);
    assert_eq!(WeylGroup::new(&RootSystem::type_d(4)).order(), 192);
}

#[test]
fn length_equals_inversion_count() {
    for rs in [RootSystem::type_a(2), RootSystem::type_b(2)] {
        let w = WeylGroup::new(&rs);
        for k in 0..w.order() {
            assert_eq!(w.elem(k).length(), w.inversions(k).len());
        }
        let w0 = w.longest();
        assert_eq!(w.elem(w0).length(), rs.positive_roots().len());
        assert_eq!(w.compose(w0, w0), w.identity());
    }
}

#[test]
fn group_operations_are_consistent() {
    let rs = RootSystem::type_b(2);
    let w = WeylGroup::new(&rs);
    let x = v(&[3, 7]);
    for a in 0..w.order() {
        assert_eq!(w.compose(a, w.inverse(a)), w.identity());
        for b in 0..w.order() {
            let ab = w.compose(a, b);
            assert_eq!(
                w.apply_elem(ab, &x),
                w.apply_elem(a, &w.apply_elem(b, &x))
            );
        }
        // the stored word reproduces the element
        assert_eq!(w.elem_from_word(&w.elem(a).word), a);
    }
}

#[test]
fn orbits() {
    let w = WeylGroup::new(&RootSystem::type_b(2));
    assert_eq!(w.orbit(&v(&[1, 0])).len(), 4);
    assert_eq!(w.orbit(&v(&[2, 1])).len(), 8);
    assert_eq!(w.orbit(&v(&[1, 1])).len(), 4);
    assert_eq!(w.orbit(&v(&[0, 0])).len(), 1);
}

#[test]
fn antidominant_rep_is_the_unique_minimum() {
    // brute-force oracle: enumerate all w with w(x) antidominant and check
    // the greedy word is the unique length minimizer
    let rs = RootSystem::type_b(2);
    let w = WeylGroup::new(&rs);
    for x0 in -2i64..=2 {
        for x1 in -2i64..=2 {
            let x = v(&[x0, x1]);
            let (xm, word) = w.antidominant_rep(&x);
            assert!(rs.is_antidominant(&xm));
            assert_eq!(w.apply_word(&word, &x), xm);
            let greedy = w.elem_from_word(&word);
            let minimal: Vec<usize> = (0..w.order())
                .filter(|&k| rs.is_antidominant(&w.apply_elem(k, &x)))
                .filter(|&k| {
                    (0..w.order()).all(|j| {
                        !rs.is_antidominant(&w.apply_elem(j, &x))
                            || w.elem(j).length() >= w.elem(k).length()
                    })
                })
                .collect();
            assert_eq!(minimal, vec![greedy]);
        }
    }
}

#[test]
fn dominance_order_examples() {
    let b2 = RootSystem::type_b(2);
    assert!(b2.dominance_le(&v(&[0, 0]), &v(&[1, 1])));
    assert!(b2.dominance_le(&v(&[1, 0]), &v(&[1, 1])));
    assert!(b2.dominance_le(&v(&[1, 1]), &v(&[2, 0])));
    assert!(b2.dominance_le(&v(&[0, 1]), &v(&[1, 0])));
    assert!(!b2.dominance_le(&v(&[1, 1]), &v(&[1, 0])));

    let a2 = RootSystem::type_a(2);
    // different coordinate sums: not in the root span, incomparable
    assert!(!a2.dominance_le(&v(&[1, 0, 0]), &v(&[1, 1, 0])));
    assert!(a2.dominance_le(&v(&[1, 1, 0]), &v(&[2, 0, 0])));
}

#[test]
fn bruhat_matches_subword_oracle() {
    // independent characterization: u <= w iff some subsequence of the fixed
    // reduced word of w multiplies to u
    let rs = RootSystem::type_b(2);
    let w = WeylGroup::new(&rs);
    let subword_le = |u: usize, wi: usize| -> bool {
        let word = &w.elem(wi).word;
        (0..(1u32 << word.len())).any(|mask| {
            let sub: Vec<usize> = word
                .iter()
                .enumerate()
                .filter(|(p, _)| mask & (1 << p) != 0)
                .map(|(_, &s)| s)
                .collect();
            w.elem_from_word(&sub) == u
        })
    };
    for u in 0..w.order() {
        for wi in 0..w.order() {
            assert_eq!(
                w.bruhat_le(u, wi),
                subword_le(u, wi),
                "bruhat mismatch at u={u}, w={wi}"
            );
        }
    }
}

#[test]
fn lattice_membership_and_coords() {
    let b2 = RootSystem::type_b(2);
    let root_lattice = Lattice::from_basis("ZR0", b2.simple_roots().to_vec());
    assert!(root_lattice.contains(&v(&[1, 0])));
    assert_eq!(root_lattice.coords(&v(&[1, 0])), Some(vec![1, 1]));
    let weight_lattice = Lattice::from_basis("P", b2.fundamental_weights());
    assert!(weight_lattice.contains(&Vector(vec![frac(1, 2), frac(1, 2)])));
    assert!(!root_lattice.contains(&Vector(vec![frac(1, 2), frac(1, 2)])));
    assert_eq!(
        weight_lattice.point(&[0, 1]),
        Vector(vec![frac(1, 2), frac(1, 2)])
    );
    // round trip
    let p = weight_lattice.point(&[3, -2]);
    assert_eq!(weight_lattice.coords(&p), Some(vec![3, -2]));
}
