mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use mf_ainfinity::rational::{frac, int};
use mf_ainfinity::report::Status;
use mf_ainfinity::transfer::{AKey, AVector};
use mf_ainfinity::trees::{
    contributing_m, enumerate_trees, eval_tree, mu_k, tree_count, Engine, MuTable, RibbonTree, Strategy,
    TransferOptions,
};
use mf_ainfinity::verify;
use mf_ainfinity::{Error, Multivector};

fn u_times(c: mf_ainfinity::rational::Rational) -> AVector {
    AVector::single(AKey::new(1, Multivector::ONE), c)
}

#[test]
fn tree_counts_match_enumeration() {
    for k in 1..=5 {
        for m in 0..=4 {
            let exact: Vec<RibbonTree> = enumerate_trees(k, m).into_iter().filter(|t| t.bivalent() == m).collect();
            assert_eq!(num_bigint_len(exact.len()), tree_count(k, m), "k={} m={}", k, m);
            let distinct: BTreeSet<_> = exact.iter().cloned().collect();
            assert_eq!(distinct.len(), exact.len());
            for t in &exact {
                assert!(t.is_well_formed());
                assert_eq!(t.leaves(), k);
                assert_eq!(t.trivalent(), k - 1);
            }
        }
    }
}

fn num_bigint_len(n: usize) -> num_bigint::BigInt {
    n.into()
}

#[test]
fn enumeration_is_ordered_by_bivalent_count() {
    let ts = enumerate_trees(3, 3);
    let ms: Vec<usize> = ts.iter().map(|t| t.bivalent()).collect();
    let mut sorted = ms.clone();
    sorted.sort();
    assert_eq!(ms, sorted);
    assert_eq!(ts, enumerate_trees(3, 3));
}

#[test]
fn contributing_counts() {
    assert_eq!(contributing_m(3, 3, 4).values, vec![1]);
    assert_eq!(contributing_m(4, 4, 4).values, vec![1]);
    assert_eq!(contributing_m(4, 3, 4).values, vec![2]);
    assert_eq!(contributing_m(2, 4, 4).values, vec![0]);
    assert!(contributing_m(3, 4, 4).values.is_empty());
    assert!(!contributing_m(3, 3, 4).heuristic);
    let q = contributing_m(3, 2, 4);
    assert!(q.heuristic);
    assert_eq!(q.values, vec![0, 1, 2, 3, 4]);
}

#[test]
fn pinned_values() {
    let ctx = common::ctx(3, "x1*x2*x3");
    let got = mu_k(&ctx, &[common::v(&[1], 3), common::v(&[2], 3), common::v(&[3], 3)]);
    assert_eq!(got, u_times(frac(1, 6)));
    let ctx = common::ctx(1, "x1^3");
    let v1 = common::v(&[1], 1);
    assert_eq!(mu_k(&ctx, &[v1.clone(), v1.clone(), v1.clone()]), u_times(int(1)));
    assert!(mu_k(&ctx, std::slice::from_ref(&v1)).is_zero());
    let ctx = common::ctx(2, "x1^4 + x2^4");
    let v1 = common::v(&[1], 2);
    assert!(mu_k(&ctx, &[v1.clone(), v1.clone(), v1.clone()]).is_zero());
    assert_eq!(mu_k(&ctx, &[v1.clone(), v1.clone(), v1.clone(), v1.clone()]), u_times(int(1)));
}

#[test]
fn clifford_at_degree_two() {
    let ctx = common::ctx(2, "x1^2 + x2^2");
    let (v1, v2) = (common::v(&[1], 2), common::v(&[2], 2));
    let sq = mu_k(&ctx, &[v1.clone(), v1.clone()]);
    assert_eq!(sq, u_times(int(1)));
    let a = mu_k(&ctx, &[v1.clone(), v2.clone()]);
    let b = mu_k(&ctx, &[v2.clone(), v1.clone()]);
    assert!(a.plus(&b).is_zero());
    assert_eq!(a.filter(|k| k.u == 0), common::v(&[1, 2], 2));
}

#[test]
fn strategies_agree() {
    for ctx in common::matrix().into_iter().filter(|c| c.d() >= 3) {
        let memo = Engine::new(&ctx, TransferOptions::default());
        let unpruned = Engine::new(&ctx, TransferOptions { prune: false, ..Default::default() });
        let en = Engine::new(&ctx, TransferOptions { strategy: Strategy::Enumerated, ..Default::default() });
        let a = MuTable::compute(&memo, ctx.d() as usize + 1, 1);
        assert_eq!(a, MuTable::compute(&unpruned, ctx.d() as usize + 1, 1), "{}", ctx.potential());
        assert_eq!(a, MuTable::compute(&en, ctx.d() as usize + 1, 1), "{}", ctx.potential());
    }
}

#[test]
fn pruning_soundness() {
    for ctx in common::matrix().into_iter().filter(|c| c.d() >= 3) {
        let r = verify::check_pruning(&ctx, ctx.d() as usize + 1, 1);
        assert_eq!(r.status, Status::Pass, "{}", ctx.potential());
    }
}

#[test]
fn stable_in_bivalent_cap() {
    for ctx in common::matrix().into_iter().filter(|c| c.d() == 2) {
        let r = verify::check_m_stability(&ctx, 4, 1, &[2, 3, 4]);
        assert_eq!(r.status, Status::Pass, "{}", ctx.potential());
    }
}

#[test]
fn unique_tree_at_arity_d() {
    for (n, src) in [(3, "x1*x2*x3"), (2, "x1^3 + x2^3"), (2, "x1^4 + x2^4"), (3, "x1^4 - 2*x1^2*x2*x3 + 3*x2^3*x3 + x3^4")] {
        let ctx = common::ctx(n, src);
        let r = verify::check_unique_tree(&ctx, 1);
        assert_eq!(r.status, Status::Pass, "{}", src);
    }
    let ctx = common::ctx(3, "x1*x2*x3");
    let basis = mf_ainfinity::trees::theta_basis(3, 1);
    let nz = verify::nonzero_trees(&ctx, 3, 1, &basis);
    assert_eq!(nz.len(), 1);
    assert_eq!(nz[0].leaves(), 3);
    assert_eq!(nz[0].bivalent(), 1);
    println!("{}", nz[0]);
}

#[test]
fn grading_and_u_linearity() {
    for ctx in common::matrix() {
        let e = Engine::new(&ctx, TransferOptions::default());
        let t = MuTable::compute(&e, (ctx.d() as usize).max(3), 1);
        assert!(verify::check_grading_laws(&t).passed(), "{}", ctx.potential());
        assert!(verify::check_minimality(&t).passed());
        assert!(verify::check_u_linearity(&e, 3, 1).passed(), "{}", ctx.potential());
    }
}

#[test]
fn arity_mismatch_is_an_error() {
    let ctx = common::ctx(2, "x1^3 + x2^3");
    let t = RibbonTree::tri(RibbonTree::leaf(1), RibbonTree::leaf(2));
    let v = common::v(&[1], 2);
    assert!(matches!(eval_tree(&ctx, &t, std::slice::from_ref(&v)), Err(Error::ArityMismatch { leaves: 2, inputs: 1 })));
    let bad = RibbonTree::tri(RibbonTree::leaf(2), RibbonTree::leaf(1));
    assert!(eval_tree(&ctx, &bad, &[v.clone(), v]).is_err());
}

#[test]
fn json_round_trip() {
    for ctx in common::matrix() {
        let e = Engine::new(&ctx, TransferOptions::default());
        let t = MuTable::compute(&e, 3, 1);
        let s = t.to_json();
        let back = MuTable::from_json(&s).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.to_json(), s);
    }
    assert!(MuTable::from_json("{\"n\": 2}").is_err());
}

#[test]
fn serial_and_parallel_tables_are_identical() {
    let ctx = common::ctx(3, "x1^4 - 2*x1^2*x2*x3 + 3*x2^3*x3 + x3^4");
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| MuTable::compute(&Engine::new(&ctx, TransferOptions::default()), 4, 1).to_json())
    };
    let one = run(1);
    assert_eq!(one, run(4));
    assert_eq!(one, run(4));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn mu_is_multilinear(c1 in -3i64..=3, c2 in -3i64..=3, i in 1usize..=3, j in 1usize..=3) {
        let ctx = common::ctx(3, "x1*x2*x3");
        let a = common::v(&[i], 3).scale(&int(c1)).plus(&common::v(&[j], 3).scale(&int(c2)));
        let b = common::v(&[2], 3);
        let c = common::v(&[3], 3);
        let whole = mu_k(&ctx, &[a, b.clone(), c.clone()]);
        let parts = mu_k(&ctx, &[common::v(&[i], 3), b.clone(), c.clone()]).scale(&int(c1))
            .plus(&mu_k(&ctx, &[common::v(&[j], 3), b, c]).scale(&int(c2)));
        prop_assert_eq!(whole, parts);
    }
}

#[test]
fn cached_tree_values_match_direct_evaluation() {
    let ctx = common::ctx(2, "x1^3 - x1*x2^2");
    let e = Engine::new(&ctx, TransferOptions::default());
    let basis = mf_ainfinity::trees::theta_basis(2, 2);
    for k in 1..=3 {
        for t in enumerate_trees(k, 2) {
            for ins in mf_ainfinity::trees::tuples(&basis, k) {
                let keys: Vec<AKey> = ins.iter().map(|m| AKey::new(0, *m)).collect();
                let vs: Vec<AVector> = keys.iter().map(|a| AVector::basis(*a)).collect();
                assert_eq!(e.tree_value(&t, &keys).unwrap(), eval_tree(&ctx, &t, &vs).unwrap(), "{}", t);
            }
        }
    }
}
