mod common;

use mf_ainfinity::conventions::{StasheffSign, STASHEFF};
use mf_ainfinity::rational::{frac, int, Rational};
use mf_ainfinity::report::Status;
use mf_ainfinity::transfer::{AKey, AVector};
use mf_ainfinity::trees::{Engine, MuKey, MuTable, TransferOptions};
use mf_ainfinity::verify::{
    check_global_local, check_mu2, check_mu_d, check_window, corrupt, global_forms, local_forms, run_suite,
    stasheff_check, Suite, SuiteConfig,
};
use mf_ainfinity::{Error, Multivector};

fn full_table(ctx: &mf_ainfinity::Context, max_k: usize) -> MuTable {
    MuTable::compute(&Engine::new(ctx, TransferOptions::default()), max_k, ctx.n() as u32)
}

#[test]
fn every_suite_passes_on_the_matrix() {
    for ctx in common::matrix() {
        let r = run_suite(&ctx, Suite::All, &SuiteConfig::default(), None).unwrap();
        assert_eq!(r.status, Status::Pass, "{}", r.to_text());
        assert!(r.factorization.is_some() && r.side_conditions.is_some());
    }
}

#[test]
fn stasheff_up_to_five_at_degree_three() {
    for (n, src) in [(1, "x1^3"), (2, "x1^3 + x2^3"), (3, "x1*x2*x3"), (3, "x1^3 - 2*x1*x2*x3 + x2^2*x3 + 3*x3^3")] {
        let ctx = common::ctx(n, src);
        let t = full_table(&ctx, 5);
        for r in stasheff_check(&t, 5, STASHEFF).unwrap() {
            assert!(r.passed(), "{}: {:?}", src, r);
        }
        for r in stasheff_check(&t.twisted(), 5, StasheffSign::RPlusST).unwrap() {
            assert!(r.passed(), "{}: {:?}", src, r);
        }
    }
}

#[test]
fn degree_two_is_associative() {
    for ctx in common::matrix().into_iter().filter(|c| c.d() == 2) {
        let t = full_table(&ctx, 3);
        let rs = stasheff_check(&t, 3, STASHEFF).unwrap();
        assert!(rs.iter().all(|r| r.passed()), "{}", ctx.potential());
        for (k, v) in t.of_arity(3) {
            assert!(v.is_zero(), "{:?}", k);
        }
    }
}

#[test]
fn the_other_sign_form_fails_on_the_raw_table() {
    let ctx = common::ctx(2, "x1^3 + x2^3");
    let t = full_table(&ctx, 5);
    let rs = stasheff_check(&t, 5, StasheffSign::RPlusST).unwrap();
    assert!(rs.iter().any(|r| !r.passed()));
}

#[test]
fn corrupted_entries_are_caught() {
    let ctx = common::ctx(3, "x1*x2*x3");
    let t = full_table(&ctx, 4);
    let v = |i| Multivector::from_indices(&[i], 3).unwrap();
    let u = |c: Rational| AVector::single(AKey::new(1, Multivector::ONE), c);

    let bad = corrupt(&t, &MuKey { k: 3, inputs: vec![v(1), v(2), v(3)] }, u(frac(1, 3)));
    assert!(stasheff_check(&bad, 4, STASHEFF).unwrap().iter().any(|r| !r.passed()));
    assert!(!check_mu_d(&ctx, &bad).unwrap().passed());
    assert!(!check_global_local(&ctx, Some(&bad)).passed());

    let bad = corrupt(&t, &MuKey { k: 1, inputs: vec![v(1)] }, u(int(1)));
    assert!(!mf_ainfinity::verify::check_minimality(&bad).passed());
    assert!(!mf_ainfinity::verify::check_grading_laws(&bad).passed());

    let bad = corrupt(&t, &MuKey { k: 2, inputs: vec![v(2), v(1)] }, AVector::new());
    assert!(!check_mu2(&ctx, &bad).unwrap().passed());

    let ctx4 = common::ctx(2, "x1^4 + x2^4");
    let t4 = full_table(&ctx4, 4);
    let w = |i| Multivector::from_indices(&[i], 2).unwrap();
    let bad = corrupt(&t4, &MuKey { k: 3, inputs: vec![w(1), w(1), w(2)] }, u(int(1)));
    assert!(!check_window(&bad, 4).passed());
}

#[test]
fn missing_arity_is_reported() {
    let ctx = common::ctx(2, "x1^3 + x2^3");
    let t = MuTable::compute(&Engine::new(&ctx, TransferOptions::default()), 2, 1);
    assert!(matches!(check_mu_d(&ctx, &t), Err(Error::MissingArity(3))));
    assert!(matches!(stasheff_check(&t, 3, STASHEFF), Err(Error::MissingArity(3))));
    let other = common::ctx(3, "x1*x2*x3");
    assert!(run_suite(&other, Suite::Mu, &SuiteConfig::default(), Some(&t)).is_err());
}

#[test]
fn global_matches_local() {
    for ctx in common::matrix().into_iter().filter(|c| c.n() <= 3) {
        assert!(check_global_local(&ctx, None).passed(), "{}", ctx.potential());
    }
    let ctx = common::ctx(2, "x1^2 + 3*x1*x2");
    let s = vec![vec![int(1), int(0)], vec![int(0), int(1)]];
    assert_eq!(global_forms(&ctx, &s).unwrap(), frac(3, 2));
    assert_eq!(local_forms(&ctx, &s), frac(3, 2));
    assert!(global_forms(&ctx, &s[..1]).is_err());
    assert!(global_forms(&ctx, &[vec![int(1)], vec![int(1)]]).is_err());
}

#[test]
fn reports_are_deterministic() {
    let ctx = common::ctx(3, "2*x1^2 + 3*x1*x2 - x1*x3 + 5*x2^2 + 4*x2*x3 - 7*x3^2");
    let run = |threads| {
        rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap().install(|| {
            let r = run_suite(&ctx, Suite::All, &SuiteConfig::default(), None).unwrap();
            mf_ainfinity::report::to_canonical_json(&r)
        })
    };
    let a = run(1);
    assert_eq!(a, run(4));
    assert_eq!(a, run(4));
}
