//! The factorization `F` and the endomorphism algebra `B`.

mod common;

use proptest::prelude::*;

use mf_ainfinity::endo::{self, m_product, BKey, BVector};
use mf_ainfinity::koszul::{self, check_factorization, d_koszul, delta_f, gamma_wedge, times_up, FKey, FVector};
use mf_ainfinity::report::Status;
use mf_ainfinity::Context;

fn f_basis(n: usize, bound: u32) -> Vec<FVector> {
    koszul::basis(n, bound).into_iter().map(FVector::basis).collect()
}

/// Cohomological and internal degree of an `F` basis element.
fn f_degrees(k: &FKey, d: u32) -> (i64, i64) {
    let b = k.beta.degree() as i64;
    let t = k.mono.u() as i64;
    (-b + 2 * t, -b + d as i64 * t - k.mono.degree() as i64)
}

#[test]
fn koszul_squares_vanish() {
    for ctx in common::matrix() {
        for v in f_basis(ctx.n(), 3) {
            assert!(d_koszul(&d_koszul(&v)).is_zero());
            assert!(gamma_wedge(&ctx, &gamma_wedge(&ctx, &v)).is_zero());
            assert_eq!(delta_f(&ctx, &delta_f(&ctx, &v)), times_up(&ctx, &v));
        }
    }
    let _ctx = common::ctx(4, "x1*x2*x3 + x4^3");
    for v in f_basis(4, 3) {
        assert!(d_koszul(&d_koszul(&v)).is_zero());
    }
}

#[test]
fn delta_f_degrees() {
    for ctx in common::matrix() {
        for v in f_basis(ctx.n(), 3) {
            let (k, _) = v.iter().next().unwrap();
            let (c, i) = f_degrees(k, ctx.d());
            for (ok, _) in &delta_f(&ctx, &v) {
                assert_eq!(f_degrees(ok, ctx.d()), (c + 1, i));
            }
        }
    }
}

#[test]
fn factorization_on_matrix() {
    for ctx in common::matrix() {
        let r = check_factorization(&ctx, 3 + ctx.d());
        assert_eq!(r.status, Status::Pass, "{}", ctx.potential());
        assert!(r.checked_basis_count > 0);
    }
}

fn small_basis(n: usize, f: u32) -> Vec<BKey> {
    endo::basis(n, f, &[0, 1])
}

#[test]
fn product_is_associative_and_unital() {
    let n = 2;
    let basis = small_basis(n, 1);
    let one = endo::unit(n);
    for a in &basis {
        let va = BVector::basis(a.clone());
        assert_eq!(m_product(&one, &va), va);
        assert_eq!(m_product(&va, &one), va);
        for b in &basis {
            let vb = BVector::basis(b.clone());
            let ab = m_product(&va, &vb);
            for c in &basis {
                let vc = BVector::basis(c.clone());
                assert_eq!(m_product(&ab, &vc), m_product(&va, &m_product(&vb, &vc)));
            }
        }
    }
}

fn bkey(n: usize) -> impl Strategy<Value = BKey> {
    let basis = endo::basis(n, 2, &[-1, 0, 1]);
    (0..basis.len()).prop_map(move |i| basis[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn product_associative_rank3(a in bkey(3), b in bkey(3), c in bkey(3)) {
        let (va, vb, vc) = (BVector::basis(a.clone()), BVector::basis(b.clone()), BVector::basis(c));
        prop_assert_eq!(m_product(&m_product(&va, &vb), &vc), m_product(&va, &m_product(&vb, &vc)));
        let one = endo::unit(3);
        prop_assert_eq!(m_product(&one, &va), va.clone());
        let ab = m_product(&va, &vb);
        for (k, _) in &ab {
            prop_assert_eq!(k.cohomological(), a.cohomological() + b.cohomological());
            prop_assert_eq!(k.beta.degree(), a.beta.degree());
            prop_assert_eq!(k.mono.degree(), a.mono.degree() + b.mono.degree());
        }
    }

    #[test]
    fn leibniz_rank3(a in bkey(3), b in bkey(3)) {
        let ctx = common::ctx(3, "x1*x2*x3 - x2^3");
        let (va, vb) = (BVector::basis(a.clone()), BVector::basis(b));
        let s = if a.parity() == 0 { 1 } else { -1 };
        let ab = m_product(&va, &vb);
        let lhs = endo::partial_bar(&ctx, &ab);
        let mut rhs = m_product(&endo::partial_bar(&ctx, &va), &vb);
        rhs.add_scaled(&m_product(&va, &endo::partial_bar(&ctx, &vb)), &mf_ainfinity::rational::int(s));
        prop_assert_eq!(lhs, rhs);
        let lhs = endo::partial_d(&ab);
        let mut rhs = m_product(&endo::partial_d(&va), &vb);
        rhs.add_scaled(&m_product(&va, &endo::partial_d(&vb)), &mf_ainfinity::rational::int(s));
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn differentials_square_to_zero() {
    for ctx in common::matrix() {
        for k in endo::basis(ctx.n(), 2, &[-1, 0, 1]) {
            let b = BVector::basis(k.clone());
            assert!(endo::partial_d(&endo::partial_d(&b)).is_zero(), "{}", k);
            assert!(endo::partial_bar(&ctx, &endo::partial_bar(&ctx, &b)).is_zero(), "{}", k);
        }
    }
}

#[test]
fn extensional_consistency() {
    for ctx in common::matrix().into_iter().filter(|c| c.n() <= 3) {
        let n = ctx.n();
        let tests = f_basis(n, 1);
        let df = |v: &FVector| delta_f(&ctx, v);
        let dk = |v: &FVector| d_koszul(v);
        let gw = |v: &FVector| gamma_wedge(&ctx, v);
        for k in endo::basis(n, 1, &[0]) {
            let b = BVector::basis(k.clone());
            assert!(endo::extensional_defect(&df, &endo::partial_bar(&ctx, &b), &k, &tests).is_none());
            assert!(endo::extensional_defect(&dk, &endo::partial_d(&b), &k, &tests).is_none());
            assert!(endo::extensional_defect(&gw, &endo::perturbation(&ctx, &b), &k, &tests).is_none());
            assert_eq!(endo::perturbation(&ctx, &b), endo::commutator_via_action(n, &gw, &b));
        }
    }
}

#[test]
fn perturbation_degree_shifts() {
    for ctx in common::matrix() {
        for k in endo::basis(ctx.n(), 2, &[0]) {
            let out = endo::perturbation(&ctx, &BVector::basis(k.clone()));
            let dk = k.degrees(ctx.d());
            for (o, _) in &out {
                let g = o.degrees(ctx.d());
                assert_eq!(g.f_degree, dk.f_degree + ctx.d() - 1);
                assert!(g.beta_degree >= dk.beta_degree);
                assert_eq!(g.cohomological, dk.cohomological + 1);
                assert_eq!(g.internal, dk.internal);
            }
        }
        assert!(endo::perturbation(&ctx, &endo::unit(ctx.n())).is_zero());
    }
}

#[test]
fn corrupted_gamma_is_detected() {
    let pot = mf_ainfinity::Potential::parse("x1^3 + x2^3", 2).unwrap();
    let mut gamma = Context::new(pot.clone()).gammas().to_vec();
    gamma[0] = gamma[0].scale(&mf_ainfinity::rational::int(2));
    let bad = Context::with_gamma(pot, gamma).unwrap();
    let r = check_factorization(&bad, 3);
    assert_eq!(r.status, Status::Fail);
    assert!(r.counterexample.is_some());
}
