//! The Koszul factorization `F = ΛE ⊗ R` with `δ_F = i_η + γ∧`.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::exterior::Form;
use crate::lincomb::LinComb;
use crate::poly::PolyMonomial;
use crate::potential::Context;
use crate::rational::Rational;
use crate::report::Status;

/// A basis element `dx_β · x^α u^t` of `F`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FKey {
    pub beta: Form,
    pub mono: PolyMonomial,
}

impl FKey {
    pub fn new(beta: Form, mono: PolyMonomial) -> Self {
        FKey { beta, mono }
    }
}

impl fmt::Display for FKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·{}", self.beta, self.mono)
    }
}

pub type FVector = LinComb<FKey>;

/// `i_η(dx_{j_1}∧…∧dx_{j_k} f) = Σ_a (-1)^{a-1} x_{j_a} (… \hat{dx_{j_a}} …) f`.
pub fn euler_contract(beta: Form, mono: &PolyMonomial, c: &Rational, out: &mut FVector) {
    let n = mono.n();
    for (a, j) in beta.zero_based().enumerate() {
        let rest = Form::from_bits(beta.bits() & !(1 << j));
        let sign = if a % 2 == 0 { 1 } else { -1 };
        out.add_signed(FKey::new(rest, mono.mul(&PolyMonomial::var(n, j))), sign, c);
    }
}

pub fn d_koszul(v: &FVector) -> FVector {
    v.map_linear(|k, c, out| euler_contract(k.beta, &k.mono, c, out))
}

/// `γ∧` with `γ = (u/d) Σ ∂_i p dx_i`; the operator supplies the `u`.
pub fn gamma_wedge(ctx: &Context, v: &FVector) -> FVector {
    v.map_linear(|k, c, out| gamma_wedge_term(ctx, k.beta, &k.mono, c, out))
}

pub(crate) fn gamma_wedge_term(ctx: &Context, beta: Form, mono: &PolyMonomial, c: &Rational, out: &mut FVector) {
    let shifted = mono.shift_u(1);
    for i in 0..ctx.n() {
        let Some(w) = Form::bit(i).wedge(beta) else {
            continue;
        };
        for (g, gc) in ctx.gamma(i).terms() {
            out.add_signed(FKey::new(w.mono, shifted.mul(g)), w.sign, &(c * gc));
        }
    }
}

pub fn delta_f(ctx: &Context, v: &FVector) -> FVector {
    d_koszul(v).plus(&gamma_wedge(ctx, v))
}

/// `u·p·v`.
pub fn times_up(ctx: &Context, v: &FVector) -> FVector {
    v.map_linear(|k, c, out| {
        let m = k.mono.shift_u(1);
        for (pm, pc) in ctx.p().terms() {
            out.add_term(FKey::new(k.beta, m.mul(pm)), c * pc);
        }
    })
}

/// All basis elements `dx_β x^α` with `|α| ≤ sym_bound`, `u^0`.
pub fn basis(n: usize, sym_bound: u32) -> Vec<FKey> {
    let monos = PolyMonomial::up_to_degree(n, sym_bound);
    Form::all(n)
        .into_iter()
        .flat_map(|b| monos.iter().map(move |m| FKey::new(b, m.clone())))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub basis: String,
    pub residual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorizationReport {
    pub status: Status,
    pub checked_basis_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

/// Checks `δ_F² = u·p` on every basis element up to the Sym bound.
pub fn check_factorization(ctx: &Context, sym_bound: u32) -> FactorizationReport {
    let basis = basis(ctx.n(), sym_bound);
    let failures: Vec<Option<Counterexample>> = basis
        .par_iter()
        .map(|k| {
            let v = FVector::basis(k.clone());
            let residual = delta_f(ctx, &delta_f(ctx, &v)).minus(&times_up(ctx, &v));
            (!residual.is_zero()).then(|| Counterexample {
                basis: k.to_string(),
                residual: residual.to_string(),
            })
        })
        .collect();
    let counterexample = failures.into_iter().flatten().next();
    FactorizationReport {
        status: Status::from_bool(counterexample.is_none()),
        checked_basis_count: basis.len(),
        counterexample,
    }
}
