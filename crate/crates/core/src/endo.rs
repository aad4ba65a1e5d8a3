//! The endomorphism algebra `B = ΛE ⊗ Sym E ⊗ Sym(U, U⁻¹) ⊗ ΛE*` and its
//! differentials.
//!
//! A basic tensor `(β, f, θ)` acts on `F` by `(β', f') ↦ ⟨θ, β'⟩ β f f'`, so
//! the product is composition of endomorphisms.

use std::collections::HashMap;
use std::fmt;

use crate::conventions::{self, parity_sign, COMMUTATOR_ORIENTATION};
use crate::exterior::{self, merge_sign, Form, Multivector};
use crate::koszul::{self, FKey, FVector};
use crate::lincomb::LinComb;
use crate::poly::PolyMonomial;
use crate::potential::Context;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BKey {
    pub beta: Form,
    pub mono: PolyMonomial,
    pub theta: Multivector,
}

pub type BVector = LinComb<BKey>;

/// The four gradings of a basic tensor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Degrees {
    pub internal: i64,
    pub cohomological: i64,
    pub f_degree: u32,
    pub beta_degree: u32,
}

impl BKey {
    pub fn new(beta: Form, mono: PolyMonomial, theta: Multivector) -> Self {
        BKey { beta, mono, theta }
    }

    /// Convenience constructor from 1-based index lists.
    pub fn from_parts(n: usize, beta: &[usize], exps: &[u32], u: i32, theta: &[usize]) -> crate::Result<Self> {
        if exps.len() != n {
            return Err(crate::Error::InvalidArgument(format!(
                "expected {} exponents, got {}",
                n,
                exps.len()
            )));
        }
        Ok(BKey {
            beta: Form::from_indices(beta, n)?,
            mono: PolyMonomial::new(exps, u),
            theta: Multivector::from_indices(theta, n)?,
        })
    }

    pub fn cohomological(&self) -> i64 {
        -(self.beta.degree() as i64) + self.theta.degree() as i64 + 2 * self.mono.u() as i64
    }

    /// Parity of the cohomological degree.
    pub fn parity(&self) -> u32 {
        (self.beta.degree() + self.theta.degree()) % 2
    }

    pub fn degrees(&self, d: u32) -> Degrees {
        let f = self.mono.degree();
        Degrees {
            internal: -(self.beta.degree() as i64) + self.theta.degree() as i64
                + d as i64 * self.mono.u() as i64
                - f as i64,
            cohomological: self.cohomological(),
            f_degree: f,
            beta_degree: self.beta.degree(),
        }
    }
}

impl fmt::Display for BKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.beta, self.mono, self.theta)
    }
}

impl fmt::Debug for BKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// `(β,f,θ)(β',f',θ') = ⟨θ,β'⟩ (β, ff', θ')`.
pub fn m_product(b: &BVector, b2: &BVector) -> BVector {
    let mut by_beta: HashMap<Form, Vec<(&BKey, &Rational)>> = HashMap::new();
    for (k, c) in b2 {
        by_beta.entry(k.beta).or_default().push((k, c));
    }
    let mut out = BVector::new();
    for (k, c) in b {
        let Some(right) = by_beta.get(&k.theta.dual()) else {
            continue;
        };
        let pr = exterior::pair(k.theta, k.theta.dual());
        for (k2, c2) in right {
            out.add_signed(BKey::new(k.beta, k.mono.mul(&k2.mono), k2.theta), pr, &(c * *c2));
        }
    }
    out
}

pub fn act_on_f(b: &BVector, v: &FVector) -> FVector {
    let mut out = FVector::new();
    for (k, c) in b {
        for (fk, fc) in v {
            let pr = exterior::pair(k.theta, fk.beta);
            if pr != 0 {
                out.add_signed(FKey::new(k.beta, k.mono.mul(&fk.mono)), pr, &(c * fc));
            }
        }
    }
    out
}

/// The identity endomorphism `Σ_J ⟨v_J, dx_J⟩ (dx_J, 1, v_J)`.
pub fn unit(n: usize) -> BVector {
    Form::all(n)
        .into_iter()
        .map(|j| {
            let c = Rational::from_integer(conventions::reversal_sign(j.degree()).into());
            (BKey::new(j, PolyMonomial::one(n), j.dual()), c)
        })
        .collect()
}

/// `ε_{|θ|}/ε_{|J|}` where `ε_p = ⟨v_I, dx_I⟩`.
fn pairing_ratio(theta: Multivector, j: Multivector) -> i8 {
    conventions::pairing_sign(theta.degree()) * conventions::pairing_sign(j.degree())
}

/// `ORIENTATION · (d_K∘b − (−1)^{|b|} b∘d_K)`.
pub fn partial_d_term(k: &BKey, c: &Rational, out: &mut BVector) {
    let n = k.mono.n();
    let o = COMMUTATOR_ORIENTATION;
    let mut left = FVector::new();
    koszul::euler_contract(k.beta, &k.mono, c, &mut left);
    for (fk, fc) in &left {
        out.add_signed(BKey::new(fk.beta, fk.mono.clone(), k.theta), o, fc);
    }
    // b∘d_K: only dx_J with J = θ ∪ {j} reaches dx_θ, with coefficient (−1)^{pos j} x_j.
    let s = -o * parity_sign(k.parity());
    for j in 0..n {
        if k.theta.contains(j) {
            continue;
        }
        let jset = Multivector::from_bits(k.theta.bits() | (1 << j));
        let pos = (k.theta.bits() & ((1u32 << j) - 1)).count_ones();
        let sign = s * parity_sign(pos) * pairing_ratio(k.theta, jset);
        out.add_signed(BKey::new(k.beta, k.mono.mul(&PolyMonomial::var(n, j)), jset), sign, c);
    }
}

/// `ORIENTATION · (γ∘b − (−1)^{|b|} b∘γ)`, i.e. `∂̄ − ∂`.
pub fn perturbation_term(ctx: &Context, k: &BKey, c: &Rational, out: &mut BVector) {
    let o = COMMUTATOR_ORIENTATION;
    let mut left = FVector::new();
    koszul::gamma_wedge_term(ctx, k.beta, &k.mono, c, &mut left);
    for (fk, fc) in &left {
        out.add_signed(BKey::new(fk.beta, fk.mono.clone(), k.theta), o, fc);
    }
    // b∘γ: dx_J with J = θ ∖ {i}, where dx_i ∧ dx_J = ± dx_θ.
    let s = -o * parity_sign(k.parity());
    let shifted = k.mono.shift_u(1);
    for i in k.theta.zero_based() {
        let jbits = k.theta.bits() & !(1 << i);
        let jset = Multivector::from_bits(jbits);
        let w = merge_sign(1 << i, jbits).expect("disjoint");
        let sign = s * w * pairing_ratio(k.theta, jset);
        for (g, gc) in ctx.gamma(i).terms() {
            out.add_signed(BKey::new(k.beta, shifted.mul(g), jset), sign, &(c * gc));
        }
    }
}

pub fn partial_d(b: &BVector) -> BVector {
    b.map_linear(partial_d_term)
}

pub fn perturbation(ctx: &Context, b: &BVector) -> BVector {
    b.map_linear(|k, c, out| perturbation_term(ctx, k, c, out))
}

pub fn partial_bar(ctx: &Context, b: &BVector) -> BVector {
    b.map_linear(|k, c, out| {
        partial_d_term(k, c, out);
        perturbation_term(ctx, k, c, out);
    })
}

/// The graded commutator `ORIENTATION·[L, b]` computed from the action of `b`
/// on the basis `dx_J` of `F` alone, with no closed form. Serves as the
/// reference for [`partial_d`], [`partial_bar`] and [`perturbation`].
pub fn commutator_via_action(n: usize, op: &dyn Fn(&FVector) -> FVector, b: &BVector) -> BVector {
    let o = COMMUTATOR_ORIENTATION;
    let mut out = BVector::new();
    let images: Vec<(Form, FVector)> = Form::all(n)
        .into_iter()
        .map(|j| (j, op(&FVector::basis(FKey::new(j, PolyMonomial::one(n))))))
        .collect();
    for (k, c) in b {
        let left = op(&FVector::single(FKey::new(k.beta, k.mono.clone()), c.clone()));
        for (fk, fc) in &left {
            out.add_signed(BKey::new(fk.beta, fk.mono.clone(), k.theta), o, fc);
        }
        let s = -o * parity_sign(k.parity());
        for (j, img) in &images {
            for (fk, fc) in img {
                let pr = exterior::pair(k.theta, fk.beta);
                if pr == 0 {
                    continue;
                }
                // (β,f,θ)∘(dx_J ↦ img) = Σ coefficient of dx_θ in img, over the dual basis.
                let dual_norm = conventions::pairing_sign(j.degree());
                out.add_signed(
                    BKey::new(k.beta, k.mono.mul(&fk.mono), j.dual()),
                    s * pr * dual_norm,
                    &(c * fc),
                );
            }
        }
    }
    out
}

/// Checks `act(∂̄b, v) = ORIENTATION·(δ_F(b v) − (−1)^{|b|} b(δ_F v))` on the given vectors.
pub fn extensional_defect(
    op: &dyn Fn(&FVector) -> FVector,
    closed: &BVector,
    b_key: &BKey,
    tests: &[FVector],
) -> Option<FVector> {
    let o = Rational::from_integer(COMMUTATOR_ORIENTATION.into());
    let b = BVector::basis(b_key.clone());
    let s = Rational::from_integer(parity_sign(b_key.parity()).into());
    for v in tests {
        let lhs = act_on_f(closed, v);
        let rhs = op(&act_on_f(&b, v)).minus(&act_on_f(&b, &op(v)).scale(&s)).scale(&o);
        let diff = lhs.minus(&rhs);
        if !diff.is_zero() {
            return Some(diff);
        }
    }
    None
}

/// All basic tensors with `|α| ≤ max_f` and `u^t` for `t` in `u_powers`.
pub fn basis(n: usize, max_f: u32, u_powers: &[i32]) -> Vec<BKey> {
    let monos = PolyMonomial::up_to_degree(n, max_f);
    let mut out = Vec::new();
    for beta in Form::all(n) {
        for theta in Multivector::all(n) {
            for m in &monos {
                for &t in u_powers {
                    out.push(BKey::new(beta, m.with_u(t), theta));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn bk(n: usize, beta: &[usize], e: &[u32], u: i32, theta: &[usize]) -> BKey {
        BKey::from_parts(n, beta, e, u, theta).unwrap()
    }

    #[test]
    fn product_examples() {
        let a = BVector::basis(bk(2, &[], &[0, 0], 0, &[1]));
        let b = BVector::basis(bk(2, &[1], &[0, 1], 0, &[2]));
        assert_eq!(m_product(&a, &b), BVector::basis(bk(2, &[], &[0, 1], 0, &[2])));
        let b = BVector::basis(bk(2, &[1, 2], &[0, 0], 0, &[1]));
        assert!(m_product(&a, &b).is_zero());
        let a = BVector::basis(bk(2, &[1], &[0, 0], 1, &[]));
        let b = BVector::basis(bk(2, &[], &[1, 0], 0, &[]));
        assert_eq!(m_product(&a, &b), BVector::basis(bk(2, &[1], &[1, 0], 1, &[])));
    }

    #[test]
    fn action_examples() {
        let a = BVector::basis(bk(2, &[], &[0, 0], 0, &[1]));
        let v = FVector::basis(FKey::new(Form::from_indices(&[1], 2).unwrap(), PolyMonomial::new(&[0, 1], 0)));
        assert_eq!(
            act_on_f(&a, &v),
            FVector::basis(FKey::new(Form::ONE, PolyMonomial::new(&[0, 1], 0)))
        );
        let w = FVector::basis(FKey::new(Form::ONE, PolyMonomial::new(&[0, 1], 0)));
        assert!(act_on_f(&a, &w).is_zero());
        let id = unit(2);
        for k in koszul::basis(2, 2) {
            let v = FVector::basis(k);
            assert_eq!(act_on_f(&id, &v), v);
        }
    }

    #[test]
    fn perturbation_example() {
        let ctx = Context::parse("x1*x2", 2).unwrap();
        let b = BVector::basis(bk(2, &[], &[0, 0], 0, &[1]));
        let got = perturbation(&ctx, &b);
        let expect: BVector = [
            (bk(2, &[1], &[0, 1], 1, &[1]), frac(-1, 2)),
            (bk(2, &[2], &[1, 0], 1, &[1]), frac(-1, 2)),
            (bk(2, &[], &[0, 1], 1, &[]), frac(-1, 2)),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expect);
        assert!(perturbation(&ctx, &unit(2)).is_zero());
        assert!(partial_d(&unit(2)).is_zero());
        assert!(partial_bar(&ctx, &unit(2)).is_zero());
    }

    #[test]
    fn closed_forms_match_action() {
        let ctx = Context::parse("x1^2*x2 - 2*x2^3", 2).unwrap();
        let dk = |v: &FVector| koszul::d_koszul(v);
        let gw = |v: &FVector| koszul::gamma_wedge(&ctx, v);
        let df = |v: &FVector| koszul::delta_f(&ctx, v);
        let tests: Vec<FVector> = koszul::basis(2, 1).into_iter().map(FVector::basis).collect();
        for k in basis(2, 2, &[-1, 0, 1]) {
            let b = BVector::basis(k.clone());
            assert_eq!(partial_d(&b), commutator_via_action(2, &dk, &b), "{}", k);
            assert_eq!(perturbation(&ctx, &b), commutator_via_action(2, &gw, &b), "{}", k);
            assert_eq!(partial_bar(&ctx, &b), commutator_via_action(2, &df, &b), "{}", k);
            assert!(extensional_defect(&df, &partial_bar(&ctx, &b), &k, &tests).is_none());
            assert!(extensional_defect(&dk, &partial_d(&b), &k, &tests).is_none());
        }
    }

    #[test]
    fn gradings() {
        let k = bk(2, &[1], &[0, 1], 0, &[]);
        let g = k.degrees(3);
        assert_eq!((g.internal, g.cohomological, g.f_degree, g.beta_degree), (-2, -1, 1, 1));
        let g = bk(2, &[], &[0, 0], 1, &[]).degrees(3);
        assert_eq!((g.internal, g.cohomological), (3, 2));
        let g = bk(2, &[], &[0, 0], 0, &[1]).degrees(3);
        assert_eq!((g.internal, g.cohomological), (1, 1));
        let _ = int(0);
    }
}
