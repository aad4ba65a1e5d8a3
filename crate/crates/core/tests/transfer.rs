mod common;

use proptest::prelude::*;

use mf_ainfinity::endo::{self, BKey, BVector};
use mf_ainfinity::exterior::Multivector;
use mf_ainfinity::report::Status;
use mf_ainfinity::transfer::{
    a_product, homotopy_h, homotopy_h_via_alpha, homotopy_h_with, incl_i, incl_i_via_alpha, proj_p,
    side_conditions, side_conditions_with, AKey, AVector, HomotopyCoefficients, IDENTITIES,
};

fn a_keys(n: usize) -> Vec<AKey> {
    [-1, 0, 1]
        .iter()
        .flat_map(|&t| Multivector::all(n).into_iter().map(move |th| AKey::new(t, th)))
        .collect()
}

#[test]
fn side_conditions_on_matrix() {
    for ctx in common::matrix() {
        let r = side_conditions(&ctx, 3);
        assert_eq!(r.status, Status::Pass, "{}", ctx.potential());
        let names: Vec<&str> = r.identities.iter().map(|i| i.identity.as_str()).collect();
        assert_eq!(names, IDENTITIES);
        assert!(r.identities.iter().all(|i| i.checked > 0));
    }
}

#[test]
fn dropping_coefficients_breaks_the_homotopy() {
    let ctx = common::ctx(2, "x1*x2");
    let r = side_conditions_with(&ctx, 2, HomotopyCoefficients::Dropped);
    assert_eq!(r.status, Status::Fail);
    let bad = r.identities.iter().find(|i| i.identity == "ip - 1 = dh + hd").unwrap();
    assert_eq!(bad.status, Status::Fail);
    assert!(!bad.witnesses.is_empty());
}

#[test]
fn h_raises_beta_and_lowers_f() {
    for n in 1..=3 {
        for k in endo::basis(n, 3, &[0, 1]) {
            let out = homotopy_h(&BVector::basis(k.clone()));
            for (o, _) in &out {
                assert!(o.beta.degree() > k.beta.degree(), "{} -> {}", k, o);
                assert_eq!(o.mono.degree() + 1, k.mono.degree());
                assert_eq!(o.mono.u(), k.mono.u());
                assert_eq!(o.cohomological(), k.cohomological() - 1);
            }
        }
    }
}

#[test]
fn s_is_constant_along_the_alpha_chain() {
    for k in endo::basis(3, 3, &[0]) {
        let s = k.mono.degree() + k.beta.degree();
        for (o, _) in &homotopy_h(&BVector::basis(k.clone())) {
            let j = o.theta.degree() - k.theta.degree();
            assert_eq!(o.mono.degree() + o.beta.degree() - j, s);
        }
    }
}

#[test]
fn alpha_forms_agree() {
    for n in 1..=3 {
        for k in a_keys(n) {
            let a = AVector::basis(k);
            assert_eq!(incl_i(&a, n), incl_i_via_alpha(&a, n));
        }
        for k in endo::basis(n, 2, &[0]) {
            let b = BVector::basis(k);
            assert_eq!(homotopy_h(&b), homotopy_h_via_alpha(&b));
        }
    }
}

#[test]
fn inclusion_is_an_algebra_map() {
    for n in 1..=3 {
        let keys = a_keys(n);
        let one = AVector::basis(AKey::new(0, Multivector::ONE));
        assert_eq!(incl_i(&one, n), endo::unit(n));
        for a in &keys {
            for b in &keys {
                let (va, vb) = (AVector::basis(*a), AVector::basis(*b));
                assert_eq!(
                    incl_i(&a_product(&va, &vb), n),
                    endo::m_product(&incl_i(&va, n), &incl_i(&vb, n)),
                    "{} {}",
                    a,
                    b
                );
            }
        }
    }
}

#[test]
fn projection_inverts_inclusion() {
    for n in 1..=4 {
        for k in a_keys(n) {
            let a = AVector::basis(k);
            assert_eq!(proj_p(&incl_i(&a, n)), a);
        }
    }
}

fn bkey3() -> impl Strategy<Value = BKey> {
    let basis = endo::basis(3, 3, &[-1, 0, 1]);
    (0..basis.len()).prop_map(move |i| basis[i].clone())
}

proptest! {
    #[test]
    fn homotopy_identities_rank3(k in bkey3()) {
        let b = BVector::basis(k);
        let hb = homotopy_h(&b);
        prop_assert!(homotopy_h(&hb).is_zero());
        prop_assert!(proj_p(&hb).is_zero());
        let lhs = incl_i(&proj_p(&b), 3).minus(&b);
        let rhs = endo::partial_d(&hb).plus(&homotopy_h(&endo::partial_d(&b)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dropped_coefficients_still_square_to_zero(k in bkey3()) {
        let h = |b: &BVector| homotopy_h_with(b, HomotopyCoefficients::Dropped);
        prop_assert!(h(&h(&BVector::basis(k))).is_zero());
    }
}
