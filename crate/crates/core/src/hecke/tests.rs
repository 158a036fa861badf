use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::root_datum::{build_root_datum, LatticeKind};

fn algebra(label: &str) -> Arc<HeckeAlgebra> {
    let d = build_root_datum(label, LatticeKind::Weight).unwrap();
    HeckeAlgebra::new(AffineWeylGroup::new(d).unwrap())
}

fn el(h: &HeckeAlgebra, s: &str) -> AffineWeylElement {
    h.group().parse_element(s).unwrap()
}

fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn mul(h: &HeckeAlgebra, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
    h.multiply(a, b).unwrap()
}

fn random_hecke(h: &HeckeAlgebra, rng: &mut ChaCha8Rng, terms: usize, len: usize) -> HeckeElement {
    let mut out = h.zero();
    for _ in 0..terms {
        let w = h.group().random_element(rng, len);
        let c = LaurentPoly::monomial(rng.gen_range(-3i64..=3), rng.gen_range(-3..=3));
        out = out.checked_add(&h.term(&w, c)).unwrap();
    }
    out
}

#[test]
fn unit_and_quadratic_relation() {
    let h = algebra("A2");
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let x = random_hecke(&h, &mut rng, 4, 4);
    assert_eq!(mul(&h, &h.one(), &x), x);
    assert_eq!(mul(&h, &x, &h.one()), x);
    for i in 0..=2 {
        let s = h.t_simple(i);
        let want = s.scale(&lp("-1 + v^2")).checked_add(&h.one().scale(&lp("v^2"))).unwrap();
        assert_eq!(mul(&h, &s, &s), want);
    }
}

/// Order of `s_i s_j`, or `None` if it exceeds 6.
fn coxeter_order(g: &AffineWeylGroup, i: usize, j: usize) -> Option<usize> {
    let p = g.mul(g.simple_reflection(i), g.simple_reflection(j));
    let mut x = p.clone();
    for m in 1..=6 {
        if x == g.identity() {
            return Some(m);
        }
        x = g.mul(&x, &p);
    }
    None
}

#[test]
fn braid_relations() {
    for label in ["A1", "A2", "B2", "G2", "A3"] {
        let h = algebra(label);
        let g = h.group().clone();
        for i in 0..=g.rank() {
            for j in i + 1..=g.rank() {
                let Some(m) = coxeter_order(&g, i, j) else { continue };
                let mut a = h.one();
                let mut b = h.one();
                for k in 0..m {
                    a = mul(&h, &a, &h.t_simple(if k % 2 == 0 { i } else { j }));
                    b = mul(&h, &b, &h.t_simple(if k % 2 == 0 { j } else { i }));
                }
                assert_eq!(a, b, "{label} s{i} s{j}");
            }
            for k in 0..g.omega().len() {
                let sigma = g.omega_permutation(k)[i];
                assert_eq!(
                    mul(&h, &h.t_omega(k), &h.t_simple(i)),
                    mul(&h, &h.t_simple(sigma), &h.t_omega(k))
                );
            }
        }
    }
}

#[test]
fn a1_four_fold_product() {
    let h = algebra("A1");
    let (s0, s1) = (h.t_simple(0), h.t_simple(1));
    let left = mul(&h, &mul(&h, &mul(&h, &s0, &s1), &s0), &s1);
    let right = mul(&h, &s0, &mul(&h, &s1, &mul(&h, &s0, &s1)));
    assert_eq!(left, right);
    assert_eq!(left, h.t(&el(&h, "s0*s1*s0*s1")));
}

#[test]
fn inverses() {
    let h = algebra("B2");
    assert_eq!(h.t_inverse(&h.group().identity()), h.one());
    let s = el(&h, "s1");
    assert_eq!(h.t_inverse(&s), h.t(&s).scale(&lp("v^-2")).checked_add(&h.one().scale(&lp("v^-2 - 1"))).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..30 {
        let w = h.group().random_element(&mut rng, 6);
        let inv = h.t_inverse(&w);
        assert_eq!(mul(&h, &inv, &h.t(&w)), h.one());
        assert_eq!(mul(&h, &h.t(&w), &inv), h.one());
    }
}

#[test]
fn inverse_does_not_depend_on_reduced_word() {
    let h = algebra("A2");
    let g = h.group().clone();
    // s1 s2 s1 = s2 s1 s2, and t_{alpha_1 + alpha_2} has several reduced words.
    assert_eq!(h.t_inverse_along(0, &[1, 2, 1]), h.t_inverse_along(0, &[2, 1, 2]));
    let w = el(&h, "t[1,1]");
    let len = g.length(&w) as usize;
    let r = g.reduced_word(&w);
    let mut found = 0;
    for code in 0..3usize.pow(len as u32) {
        let word: Vec<u8> = (0..len).map(|k| (code / 3usize.pow(k as u32) % 3) as u8).collect();
        if g.from_word(r.omega, &word) == w {
            assert_eq!(h.t_inverse_along(r.omega, &word), h.t_inverse(&w));
            found += 1;
        }
    }
    assert!(found > 1);
    // A1: t_alpha = s0 s1 = pi s1 pi s1.
    let a1 = algebra("A1");
    let t = el(&a1, "t[2]");
    let pi_word = mul(&a1, &mul(&a1, &a1.t_omega(1), &a1.t_simple(1)), &mul(&a1, &a1.t_omega(1), &a1.t_simple(1)));
    assert_eq!(pi_word, a1.t(&t));
}

#[test]
fn theta_values_in_a1() {
    let h = algebra("A1");
    assert_eq!(h.theta(&Weight::new(&[0])).unwrap(), h.one());
    assert_eq!(h.theta(&Weight::new(&[1])).unwrap(), h.term(&el(&h, "t[1]"), lp("v^-1")));
    // theta_{-omega} = v T_{t_omega}^-1 with t_omega = pi s1.
    let want = h
        .term(&el(&h, "t[-1]"), lp("v^-1"))
        .checked_add(&h.term(&el(&h, "pi"), lp("v^-1 - v")))
        .unwrap();
    assert_eq!(h.theta(&Weight::new(&[-1])).unwrap(), want);
    assert_eq!(
        h.to_json(&want).unwrap(),
        r#"[{"element":"t[-1]","coeff":"v^-1"},{"element":"t[1]*s1","coeff":"v^-1 - v"}]"#
    );
}

#[test]
fn theta_is_multiplicative_and_decomposition_free() {
    for label in ["A1", "A2", "B2"] {
        let h = algebra(label);
        let d = h.group().datum().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let small = d.weights_in_box(2);
        for _ in 0..12 {
            let a = &small[rng.gen_range(0..small.len())];
            let b = &small[rng.gen_range(0..small.len())];
            let ta = h.theta(a).unwrap();
            let tb = h.theta(b).unwrap();
            let sum = h.theta(&(a + b)).unwrap();
            assert_eq!(mul(&h, &ta, &tb), sum, "{label} {a} {b}");
            assert_eq!(mul(&h, &tb, &ta), sum, "{label} {a} {b}");
            // Enlarge the minimal decomposition by a random dominant weight.
            let (mu, nu) = h.minimal_decomposition(a);
            let extra = d.dominant_weights_up_to(4);
            let e = &extra[rng.gen_range(0..extra.len())];
            assert_eq!(h.theta_with_decomposition(&(&mu + e), &(&nu + e)).unwrap(), ta);
        }
    }
}

#[test]
fn bar_involution() {
    let h = algebra("A2");
    let s = el(&h, "s0");
    assert_eq!(h.bar_involution(&h.t(&s)).unwrap(), h.t_inverse(&s));
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10 {
        let a = random_hecke(&h, &mut rng, 3, 4);
        let b = random_hecke(&h, &mut rng, 3, 4);
        let ba = h.bar_involution(&a).unwrap();
        assert_eq!(h.bar_involution(&ba).unwrap(), a);
        assert_eq!(
            h.bar_involution(&mul(&h, &a, &b)).unwrap(),
            mul(&h, &ba, &h.bar_involution(&b).unwrap())
        );
    }
}

/// `C'_w` is characterized by self-duality, `P_{w,w} = 1` and the degree
/// bound; check all three directly.
fn assert_kl_characterization(h: &HeckeAlgebra, w: &AffineWeylElement) {
    let g = h.group();
    let c = h.kl_basis(w).unwrap();
    assert_eq!(h.bar_involution(&c).unwrap(), c, "{}", g.format_element(w));
    let lw = g.length(w) as i32;
    for (x, _) in c.terms() {
        let p = h.kl_polynomial(x, w).unwrap();
        assert!(g.bruhat_leq(x, w));
        assert!(p.has_nonnegative_coeffs());
        if x == w {
            assert!(p.is_one());
        } else {
            let lx = g.length(x) as i32;
            assert!(2 * p.max_exp().unwrap() < lw - lx);
            assert!(p.min_exp().unwrap() >= 0);
        }
    }
}

#[test]
fn kl_basis_small_cases() {
    let h = algebra("A1");
    assert_eq!(h.kl_basis(&h.group().identity()).unwrap(), h.one());
    let s = el(&h, "s0");
    let want = h.t(&s).checked_add(&h.one()).unwrap().scale(&lp("v^-1"));
    assert_eq!(h.kl_basis(&s).unwrap(), want);
    let pis = el(&h, "pi*s0");
    assert_eq!(h.kl_basis(&pis).unwrap(), mul(&h, &h.t_omega(1), &want));
    // Affine A1 is a free Coxeter group on two generators: all P_{x,w} = 1.
    for w in h.group().enumerate_up_to_length(8).unwrap() {
        assert_kl_characterization(&h, &w);
        for x in h.group().enumerate_up_to_length(h.group().length(&w)).unwrap() {
            let p = h.kl_polynomial(&x, &w).unwrap();
            assert_eq!(p.is_one(), h.group().bruhat_leq(&x, &w));
            assert!(p.is_one() || p.is_zero());
        }
    }
}

#[test]
fn kl_basis_characterization_in_rank_two() {
    for (label, len) in [("A2", 5), ("B2", 5)] {
        let h = algebra(label);
        for w in h.group().enumerate_up_to_length(len).unwrap() {
            assert_kl_characterization(&h, &w);
        }
    }
}

#[test]
fn kl_budget() {
    let d = build_root_datum("A1", LatticeKind::Weight).unwrap();
    let g = AffineWeylGroup::with_budget(
        d,
        crate::budget::Budget {
            max_kl_length: 3,
            ..Default::default()
        },
    )
    .unwrap();
    let h = HeckeAlgebra::new(g);
    assert!(h.kl_basis(&el(&h, "s0*s1*s0")).is_ok());
    assert!(matches!(h.kl_basis(&el(&h, "s0*s1*s0*s1")), Err(Error::Budget { .. })));
}

#[test]
fn center_elements_commute() {
    let h = algebra("A1");
    let z = h.center_element(&Weight::new(&[1])).unwrap();
    let sum = h.theta(&Weight::new(&[1])).unwrap().checked_add(&h.theta(&Weight::new(&[-1])).unwrap()).unwrap();
    assert_eq!(z, sum);
    assert_eq!(h.center_element(&Weight::new(&[0])).unwrap(), h.one());
    assert!(matches!(h.center_element(&Weight::new(&[-1])), Err(Error::NotDominant(_))));
    for label in ["A1", "A2", "B2"] {
        let h = algebra(label);
        let g = h.group().clone();
        for lambda in g.datum().dominant_weights_up_to(4) {
            let z = h.center_element(&lambda).unwrap();
            let gens: Vec<HeckeElement> = (0..=g.rank())
                .map(|i| h.t_simple(i))
                .chain((0..g.omega().len()).map(|k| h.t_omega(k)))
                .collect();
            for t in gens {
                assert_eq!(mul(&h, &z, &t), mul(&h, &t, &z), "{label} {lambda}");
            }
        }
    }
}

#[test]
fn center_respects_tensor_products() {
    let h = algebra("A2");
    let d = h.group().datum().clone();
    let (a, b) = (Weight::new(&[1, 0]), Weight::new(&[0, 1]));
    let prod = mul(&h, &h.center_element(&a).unwrap(), &h.center_element(&b).unwrap());
    // V(w1) x V(w2) = V(w1 + w2) + V(0)
    let want = h.center_element(&Weight::new(&[1, 1])).unwrap().checked_add(&h.one()).unwrap();
    assert_eq!(prod, want);
    let ch = d.tensor_character(&d.weights_of(&a).unwrap(), &d.weights_of(&b).unwrap());
    let mut from_chars = h.zero();
    for (nu, c) in d.decompose_character(&ch).unwrap() {
        from_chars = from_chars
            .checked_add(&h.center_element(&nu).unwrap().scale(&LaurentPoly::constant(c)))
            .unwrap();
    }
    assert_eq!(prod, from_chars);
}

#[test]
fn specialization_and_wakimoto_classes() {
    let h = algebra("A2");
    let g = h.group().clone();
    for lambda in g.datum().weights_in_box(2) {
        let t = GroupAlgebraElement::basis(&g, &g.translation(&lambda));
        assert_eq!(h.specialize_v1(&h.theta(&lambda).unwrap()).unwrap(), t);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10 {
        let a = random_hecke(&h, &mut rng, 3, 4);
        let b = random_hecke(&h, &mut rng, 3, 4);
        let lhs = h.specialize_v1(&mul(&h, &a, &b)).unwrap();
        let rhs = h.specialize_v1(&a).unwrap().multiply(&h.specialize_v1(&b).unwrap(), &g).unwrap();
        assert_eq!(lhs, rhs);
    }
    let ws = g.enumerate_up_to_length(3).unwrap();
    for w in &ws {
        assert_eq!(h.wakimoto_class(w).unwrap(), GroupAlgebraElement::basis(&g, w));
        for w2 in &ws {
            let e = h.euler_pairing(w, w2).unwrap();
            let want = if w != w2 { 0 } else if g.length(w).is_multiple_of(2) { 1 } else { -1 };
            assert_eq!(e, want.into());
        }
    }
}

#[test]
fn formats_round_trip() {
    let h = algebra("B2");
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..10 {
        let a = random_hecke(&h, &mut rng, 4, 5);
        let json = h.to_json(&a).unwrap();
        assert_eq!(h.parse_json(&json).unwrap(), a);
    }
    assert_eq!(h.format_text(&h.zero()).unwrap(), "0");
    let a1 = algebra("A1");
    assert_eq!(
        a1.format_text(&a1.theta(&Weight::new(&[-1])).unwrap()).unwrap(),
        "(v^-1)*T(t[-1]) + (v^-1 - v)*T(t[1]*s1)"
    );
    assert!(h.parse_json("[{\"element\":\"s9\",\"coeff\":\"1\"}]").is_err());
    assert!(h.parse_json("{}").is_err());
}

#[test]
fn mixing_algebras_is_rejected() {
    let a = algebra("A1");
    let b = algebra("A1");
    assert_eq!(a.multiply(&a.one(), &b.one()), Err(Error::DatumMismatch));
    assert_eq!(a.one().checked_add(&b.one()), Err(Error::DatumMismatch));
    assert!(a.bar_involution(&b.one()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn associativity(seed in any::<u64>()) {
        let h = algebra("G2");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_hecke(&h, &mut rng, 2, 4);
        let b = random_hecke(&h, &mut rng, 2, 4);
        let c = random_hecke(&h, &mut rng, 2, 4);
        prop_assert_eq!(mul(&h, &mul(&h, &a, &b), &c), mul(&h, &a, &mul(&h, &b, &c)));
    }
}
