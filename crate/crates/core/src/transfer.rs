//! The contraction of `(B, ∂)` onto `A = Sym(U, U⁻¹) ⊗ ΛE*`: the maps
//! `p`, `i`, `h` and `α`, and a checker for the side conditions.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::conventions::reversal_sign;
use crate::endo::{self, BKey, BVector};
use crate::exterior::{merge_sign, Form, Multivector};
use crate::lincomb::LinComb;
use crate::poly::PolyMonomial;
use crate::potential::Context;
use crate::rational::{self, Rational};
use crate::report::{Status, Witness, MAX_WITNESSES};

/// A basis element `u^t ⊗ θ` of `A`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct AKey {
    pub u: i32,
    pub theta: Multivector,
}

/// Ordered by `u` power, then lexicographically by the index list of `θ`.
impl Ord for AKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.u
            .cmp(&other.u)
            .then_with(|| self.theta.indices().cmp(&other.theta.indices()))
    }
}

impl PartialOrd for AKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl AKey {
    pub fn new(u: i32, theta: Multivector) -> Self {
        AKey { u, theta }
    }

    /// `|θ| + d·t`.
    pub fn internal(&self, d: u32) -> i64 {
        self.theta.degree() as i64 + d as i64 * self.u as i64
    }

    /// `|θ| + 2t`.
    pub fn cohomological(&self) -> i64 {
        self.theta.degree() as i64 + 2 * self.u as i64
    }
}

impl fmt::Display for AKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.u {
            0 => write!(f, "{}", self.theta),
            1 => write!(f, "u⊗{}", self.theta),
            t => write!(f, "u^{}⊗{}", t, self.theta),
        }
    }
}

impl fmt::Debug for AKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

pub type AVector = LinComb<AKey>;

/// `1 ⊗ θ` for a 1-based index list.
pub fn a_basis(theta: &[usize], n: usize) -> crate::Result<AVector> {
    Ok(AVector::basis(AKey::new(0, Multivector::from_indices(theta, n)?)))
}

/// `u^{t+t'} θ∧θ'`.
pub fn a_product(a: &AVector, b: &AVector) -> AVector {
    let mut out = AVector::new();
    for (k, c) in a {
        for (k2, c2) in b {
            if let Some(w) = k.theta.wedge(k2.theta) {
                out.add_signed(AKey::new(k.u + k2.u, w.mono), w.sign, &(c * c2));
            }
        }
    }
    out
}

/// Keeps the terms with no `dx` and no `x`.
pub fn proj_p(b: &BVector) -> AVector {
    let mut out = AVector::new();
    for (k, c) in b {
        if k.beta.is_one() && k.mono.is_scalar() {
            out.add_term(AKey::new(k.mono.u(), k.theta), c.clone());
        }
    }
    out
}

/// `i(u^t θ) = Σ_J (dx_J, u^t, v_{j_k}∧…∧v_{j_1}∧θ)`.
pub fn incl_i(a: &AVector, n: usize) -> BVector {
    let mut out = BVector::new();
    let all = Form::all(n);
    for (k, c) in a {
        let mono = PolyMonomial::u_power(n, k.u);
        for &j in &all {
            if let Some(s) = merge_sign(j.bits(), k.theta.bits()) {
                let sign = s * reversal_sign(j.degree());
                out.add_signed(
                    BKey::new(j, mono.clone(), Multivector::from_bits(j.bits() | k.theta.bits())),
                    sign,
                    c,
                );
            }
        }
    }
    out
}

/// Which coefficient the homotopy uses in front of its `|J| = k` summand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomotopyCoefficients {
    /// `k!/(s(s+1)…(s+k))`.
    Exact,
    /// Every coefficient replaced by 1 (a negative control).
    Dropped,
}

fn rising(s: u32, k: u32) -> BigInt {
    (0..=k).fold(BigInt::from(1), |acc, q| acc * BigInt::from(s + q))
}

fn homotopy_term(k: &BKey, c: &Rational, coeffs: HomotopyCoefficients, out: &mut BVector) {
    let s = k.mono.degree() + k.beta.degree();
    if s == 0 {
        return;
    }
    let n = k.mono.n();
    for i in 0..n {
        let Some((e, rest)) = k.mono.partial(i) else {
            continue;
        };
        let Some(w1) = Form::bit(i).wedge(k.beta) else {
            continue;
        };
        let ci = c * rational::int(e as i64);
        for j in Form::all(n) {
            let Some(s2) = merge_sign(w1.mono.bits(), j.bits()) else {
                continue;
            };
            let Some(s3) = merge_sign(j.bits(), k.theta.bits()) else {
                continue;
            };
            let kk = j.degree();
            let sign = w1.sign * s2 * s3 * reversal_sign(kk);
            let coeff = match coeffs {
                HomotopyCoefficients::Exact => {
                    Rational::new(rational::factorial(kk), rising(s, kk))
                }
                HomotopyCoefficients::Dropped => rational::one(),
            };
            out.add_signed(
                BKey::new(
                    Form::from_bits(w1.mono.bits() | j.bits()),
                    rest.clone(),
                    Multivector::from_bits(j.bits() | k.theta.bits()),
                ),
                sign,
                &(&ci * coeff),
            );
        }
    }
}

/// `h(β,f,θ) = Σ_J [|J|!/(s(s+1)…(s+|J|))] (df∧β∧dx_J, v_{J reversed}∧θ)`,
/// `s = deg f + deg β`, and `0` when `s = 0`.
pub fn homotopy_h(b: &BVector) -> BVector {
    homotopy_h_with(b, HomotopyCoefficients::Exact)
}

pub fn homotopy_h_with(b: &BVector, coeffs: HomotopyCoefficients) -> BVector {
    b.map_linear(|k, c, out| homotopy_term(k, c, coeffs, out))
}

/// `α(β,f,θ) = Σ_j (β∧dx_j, f, v_j∧θ)`.
pub fn alpha_map(b: &BVector) -> BVector {
    let mut out = BVector::new();
    for (k, c) in b {
        let n = k.mono.n();
        for j in 0..n {
            let (Some(w1), Some(w2)) = (
                k.beta.wedge(Form::bit(j)),
                Multivector::bit(j).wedge(k.theta),
            ) else {
                continue;
            };
            out.add_signed(BKey::new(w1.mono, k.mono.clone(), w2.mono), w1.sign * w2.sign, c);
        }
    }
    out
}

/// `i` rebuilt as `Σ_k (1/k!) α^k ∘ i_0` with `i_0(u^t θ) = (1, u^t, θ)`.
pub fn incl_i_via_alpha(a: &AVector, n: usize) -> BVector {
    let mut cur: BVector = a
        .iter()
        .map(|(k, c)| (BKey::new(Form::ONE, PolyMonomial::u_power(n, k.u), k.theta), c.clone()))
        .collect();
    let mut total = cur.clone();
    for k in 1..=n as u32 {
        cur = alpha_map(&cur);
        let inv = Rational::new(1.into(), rational::factorial(k));
        total.add_scaled(&cur, &inv);
    }
    total
}

/// `h` rebuilt as `Σ_k [1/(s(s+1)…(s+k))] α^k ∘ h̃_0` with
/// `h̃_0(β,f,θ) = Σ_i (dx_i∧β, ∂_i f, θ)`, `s` frozen at the input.
pub fn homotopy_h_via_alpha(b: &BVector) -> BVector {
    let mut total = BVector::new();
    for (k, c) in b {
        let s = k.mono.degree() + k.beta.degree();
        if s == 0 {
            continue;
        }
        let n = k.mono.n();
        let mut cur = BVector::new();
        for i in 0..n {
            let (Some((e, rest)), Some(w)) = (k.mono.partial(i), Form::bit(i).wedge(k.beta)) else {
                continue;
            };
            cur.add_signed(BKey::new(w.mono, rest, k.theta), w.sign, &(c * rational::int(e as i64)));
        }
        for kk in 0..=n as u32 {
            total.add_scaled(&cur, &Rational::new(1.into(), rising(s, kk)));
            cur = alpha_map(&cur);
        }
    }
    total
}

/// Side-condition report entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub status: Status,
    pub checked: usize,
    pub witnesses: Vec<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SideConditionsReport {
    pub n: usize,
    pub d: u32,
    pub potential: String,
    pub sample_bound: u32,
    pub status: Status,
    pub identities: Vec<IdentityReport>,
}

pub const IDENTITIES: [&str; 6] = ["pi = 1", "h^2 = 0", "ph = 0", "hi = 0", "ip - 1 = dh + hd", "i(aa') = i(a)i(a')"];

fn collect(identity: &str, results: Vec<Option<Witness>>) -> IdentityReport {
    let checked = results.len();
    let witnesses: Vec<Witness> = results.into_iter().flatten().take(MAX_WITNESSES).collect();
    IdentityReport {
        identity: identity.to_string(),
        status: Status::from_bool(witnesses.is_empty()),
        checked,
        witnesses,
    }
}

fn check(ok: bool, input: &dyn fmt::Display, expected: &dyn fmt::Display, got: &dyn fmt::Display) -> Option<Witness> {
    (!ok).then(|| Witness::new(input.to_string(), expected.to_string(), got.to_string()))
}

/// Verifies the contraction identities exactly on every basic tensor with
/// `f_degree ≤ sample_bound` and `u^t`, `t ∈ {−1, 0, 1}`, plus the algebra
/// map property of `i`.
pub fn side_conditions(ctx: &Context, sample_bound: u32) -> SideConditionsReport {
    side_conditions_with(ctx, sample_bound, HomotopyCoefficients::Exact)
}

pub fn side_conditions_with(ctx: &Context, sample_bound: u32, coeffs: HomotopyCoefficients) -> SideConditionsReport {
    let n = ctx.n();
    let h = |b: &BVector| homotopy_h_with(b, coeffs);
    let a_keys: Vec<AKey> = [-1, 0, 1]
        .iter()
        .flat_map(|&t| Multivector::all(n).into_iter().map(move |th| AKey::new(t, th)))
        .collect();
    let b_keys = endo::basis(n, sample_bound, &[-1, 0, 1]);
    let zero = AVector::new();
    let zero_b = BVector::new();

    let pi: Vec<Option<Witness>> = a_keys
        .par_iter()
        .map(|k| {
            let a = AVector::basis(*k);
            let got = proj_p(&incl_i(&a, n));
            check(got == a, k, &a, &got)
        })
        .collect();
    let hi: Vec<Option<Witness>> = a_keys
        .par_iter()
        .map(|k| {
            let got = h(&incl_i(&AVector::basis(*k), n));
            check(got.is_zero(), k, &zero_b, &got)
        })
        .collect();
    let per_b: Vec<[Option<Witness>; 3]> = b_keys
        .par_iter()
        .map(|k| {
            let b = BVector::basis(k.clone());
            let hb = h(&b);
            let hh = h(&hb);
            let ph = proj_p(&hb);
            let lhs = incl_i(&proj_p(&b), n).minus(&b);
            let rhs = endo::partial_d(&hb).plus(&h(&endo::partial_d(&b)));
            [
                check(hh.is_zero(), k, &zero_b, &hh),
                check(ph.is_zero(), k, &zero, &ph),
                check(lhs == rhs, k, &lhs, &rhs),
            ]
        })
        .collect();
    let mut hh = Vec::with_capacity(per_b.len());
    let mut ph = Vec::with_capacity(per_b.len());
    let mut homot = Vec::with_capacity(per_b.len());
    for [a, b, c] in per_b {
        hh.push(a);
        ph.push(b);
        homot.push(c);
    }
    let pairs: Vec<(AKey, AKey)> = Multivector::all(n)
        .into_iter()
        .flat_map(|a| Multivector::all(n).into_iter().map(move |b| (AKey::new(0, a), AKey::new(0, b))))
        .collect();
    let alg: Vec<Option<Witness>> = pairs
        .par_iter()
        .map(|(a, b)| {
            let (va, vb) = (AVector::basis(*a), AVector::basis(*b));
            let lhs = incl_i(&a_product(&va, &vb), n);
            let rhs = endo::m_product(&incl_i(&va, n), &incl_i(&vb, n));
            check(lhs == rhs, &format!("{} ; {}", a, b), &lhs, &rhs)
        })
        .collect();

    let identities = vec![
        collect(IDENTITIES[0], pi),
        collect(IDENTITIES[1], hh),
        collect(IDENTITIES[2], ph),
        collect(IDENTITIES[3], hi),
        collect(IDENTITIES[4], homot),
        collect(IDENTITIES[5], alg),
    ];
    SideConditionsReport {
        n,
        d: ctx.d(),
        potential: ctx.potential().to_string(),
        sample_bound,
        status: Status::from_bool(identities.iter().all(|r| r.status.passed())),
        identities,
    }
}
