//! The potential `p` and the per-chart data derived from it.

use std::fmt;

use crate::error::{Error, Result};
use crate::exterior::MAX_RANK;
use crate::poly::{PolyMonomial, Polynomial};
use crate::rational::{self, Rational};

/// A homogeneous polynomial of degree `d ≥ 2` in `n ≥ 1` variables, stored
/// without `u`.
#[derive(Clone, PartialEq, Eq)]
pub struct Potential {
    n: usize,
    d: u32,
    p: Polynomial,
}

impl Potential {
    pub fn new(p: Polynomial) -> Result<Self> {
        let n = p.n();
        if n == 0 || n > MAX_RANK {
            return Err(Error::InvalidArgument(format!(
                "rank must be in 1..={}, got {}",
                MAX_RANK, n
            )));
        }
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if p.terms().any(|(m, _)| m.u() != 0) {
            return Err(Error::InvalidArgument(
                "the potential must not contain u".into(),
            ));
        }
        let d = p.homogeneous_degree().ok_or_else(|| Error::Inhomogeneous {
            found: p.degrees(),
        })?;
        if d < 2 {
            return Err(Error::InvalidArgument(format!(
                "potential degree must be at least 2, got {}",
                d
            )));
        }
        Ok(Potential { n, d, p })
    }

    /// Parses and additionally requires the declared degree.
    pub fn parse_with_degree(source: &str, n: usize, d: u32) -> Result<Self> {
        let pot = crate::parse::parse_potential(source, n)?;
        if pot.d != d {
            return Err(Error::DegreeMismatch {
                expected: d,
                actual: pot.d,
            });
        }
        Ok(pot)
    }

    pub fn parse(source: &str, n: usize) -> Result<Self> {
        crate::parse::parse_potential(source, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.p
    }
}

impl fmt::Display for Potential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.p)
    }
}

impl fmt::Debug for Potential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Potential(n={}, d={}, {})", self.n, self.d, self.p)
    }
}

/// Chart data: the gradients of `p` and the u-free coefficients of `γ`.
#[derive(Clone, Debug)]
pub struct Context {
    potential: Potential,
    gradients: Vec<Polynomial>,
    gamma: Vec<Polynomial>,
}

impl Context {
    pub fn new(potential: Potential) -> Self {
        let d = rational::int(potential.d as i64);
        let gradients: Vec<Polynomial> =
            (0..potential.n).map(|i| potential.p.partial(i)).collect();
        let inv = rational::one() / d;
        let gamma = gradients.iter().map(|g| g.scale(&inv)).collect();
        Context {
            potential,
            gradients,
            gamma,
        }
    }

    pub fn parse(source: &str, n: usize) -> Result<Self> {
        Ok(Context::new(Potential::parse(source, n)?))
    }

    /// A context with an arbitrary `γ`, bypassing the consistency with `p`.
    /// Used to build negative controls.
    pub fn with_gamma(potential: Potential, gamma: Vec<Polynomial>) -> Result<Self> {
        if gamma.len() != potential.n || gamma.iter().any(|g| g.n() != potential.n) {
            return Err(Error::InvalidArgument("gamma must have n entries of rank n".into()));
        }
        let mut ctx = Context::new(potential);
        ctx.gamma = gamma;
        Ok(ctx)
    }

    pub fn potential(&self) -> &Potential {
        &self.potential
    }

    pub fn n(&self) -> usize {
        self.potential.n
    }

    pub fn d(&self) -> u32 {
        self.potential.d
    }

    pub fn p(&self) -> &Polynomial {
        &self.potential.p
    }

    /// `∂p/∂x_i`, 0-based.
    pub fn gradient(&self, i0: usize) -> &Polynomial {
        &self.gradients[i0]
    }

    pub fn gradients(&self) -> &[Polynomial] {
        &self.gradients
    }

    /// The coefficient of `dx_i` in `γ`, without its `u`, 0-based.
    pub fn gamma(&self, i0: usize) -> &Polynomial {
        &self.gamma[i0]
    }

    pub fn gammas(&self) -> &[Polynomial] {
        &self.gamma
    }

    /// `Σ x_i ∂p/∂x_i − d·p`, which vanishes for a homogeneous `p`.
    pub fn euler_defect(&self) -> Polynomial {
        let n = self.n();
        let mut sum = Polynomial::zero(n);
        for (i, g) in self.gradients.iter().enumerate() {
            sum = sum.add(&g.mul_monomial(&PolyMonomial::var(n, i), &rational::one()));
        }
        sum.sub(&self.potential.p.scale(&Rational::from_integer(self.d().into())))
    }
}
