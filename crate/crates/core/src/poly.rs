//! Polynomials in `x_1, …, x_n` with a Laurent variable `u`, exact
//! rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed as _, Zero};
use smallvec::SmallVec;

use crate::rational::{self, Rational};

pub type Exponents = SmallVec<[u32; 4]>;

/// `x^α u^t`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMonomial {
    exps: Exponents,
    u: i32,
}

impl PolyMonomial {
    pub fn one(n: usize) -> Self {
        PolyMonomial {
            exps: smallvec::smallvec![0; n],
            u: 0,
        }
    }

    pub fn new(exps: &[u32], u: i32) -> Self {
        PolyMonomial {
            exps: exps.iter().copied().collect(),
            u,
        }
    }

    /// `x_i` for a 0-based index.
    pub fn var(n: usize, i0: usize) -> Self {
        let mut m = Self::one(n);
        m.exps[i0] = 1;
        m
    }

    pub fn u_power(n: usize, t: i32) -> Self {
        let mut m = Self::one(n);
        m.u = t;
        m
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn u(&self) -> i32 {
        self.u
    }

    /// Total x-degree `|α|`.
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_scalar(&self) -> bool {
        self.degree() == 0
    }

    pub fn mul(&self, other: &PolyMonomial) -> PolyMonomial {
        debug_assert_eq!(self.n(), other.n());
        PolyMonomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            u: self.u + other.u,
        }
    }

    pub fn with_u(&self, t: i32) -> PolyMonomial {
        PolyMonomial {
            exps: self.exps.clone(),
            u: t,
        }
    }

    pub fn shift_u(&self, dt: i32) -> PolyMonomial {
        self.with_u(self.u + dt)
    }

    /// `∂/∂x_i` of the monomial (0-based), as `(multiplier, monomial)`.
    pub fn partial(&self, i0: usize) -> Option<(u32, PolyMonomial)> {
        let e = self.exps[i0];
        if e == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[i0] -= 1;
        Some((e, m))
    }

    /// All exponent vectors of rank `n` with total degree exactly `deg`, graded-lex.
    pub fn of_degree(n: usize, deg: u32) -> Vec<PolyMonomial> {
        fn rec(n: usize, left: u32, acc: &mut Vec<u32>, out: &mut Vec<PolyMonomial>) {
            if acc.len() + 1 == n {
                acc.push(left);
                out.push(PolyMonomial::new(acc, 0));
                acc.pop();
                return;
            }
            for e in (0..=left).rev() {
                acc.push(e);
                rec(n, left - e, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            if deg == 0 {
                out.push(PolyMonomial::one(0));
            }
            return out;
        }
        rec(n, deg, &mut Vec::with_capacity(n), &mut out);
        out
    }

    /// All monomials with total x-degree at most `max_deg` and `u^0`.
    pub fn up_to_degree(n: usize, max_deg: u32) -> Vec<PolyMonomial> {
        (0..=max_deg).flat_map(|k| Self::of_degree(n, k)).collect()
    }

    fn render_factors(&self) -> Vec<String> {
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("x{}", i + 1)),
                _ => parts.push(format!("x{}^{}", i + 1, e)),
            }
        }
        match self.u {
            0 => {}
            1 => parts.push("u".to_string()),
            t => parts.push(format!("u^{}", t)),
        }
        parts
    }
}

/// Graded-lex, largest first: higher total degree, then lexicographically
/// larger exponent vector, then the `u` power.
impl Ord for PolyMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| other.exps.cmp(&self.exps))
            .then_with(|| self.u.cmp(&other.u))
    }
}

impl PartialOrd for PolyMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PolyMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.render_factors();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl fmt::Debug for PolyMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<PolyMonomial, Rational>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::term(PolyMonomial::one(n), c)
    }

    pub fn term(m: PolyMonomial, c: Rational) -> Self {
        let mut p = Self::zero(m.n());
        p.add_term(m, c);
        p
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (PolyMonomial, Rational)>) -> Self {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PolyMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &PolyMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: PolyMonomial, c: Rational) {
        debug_assert_eq!(m.n(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut r = Self::zero(self.n);
        for (m, a) in &self.terms {
            for (m2, b) in &other.terms {
                r.add_term(m.mul(m2), a * b);
            }
        }
        r
    }

    pub fn mul_monomial(&self, m: &PolyMonomial, c: &Rational) -> Polynomial {
        let mut r = Self::zero(self.n);
        for (m2, b) in &self.terms {
            r.add_term(m.mul(m2), b * c);
        }
        r
    }

    /// Formal `∂/∂x_i`, 0-based; `u` is never differentiated.
    pub fn partial(&self, i0: usize) -> Polynomial {
        let mut r = Self::zero(self.n);
        for (m, c) in &self.terms {
            if let Some((e, m2)) = m.partial(i0) {
                r.add_term(m2, c * rational::int(e as i64));
            }
        }
        r
    }

    /// Iterated derivative along 1-based indices.
    pub fn mixed_partial(&self, indices: &[usize]) -> Polynomial {
        indices.iter().fold(self.clone(), |p, &i| p.partial(i - 1))
    }

    /// The x-degrees occurring, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.terms.keys().map(|m| m.degree()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Common total x-degree, if homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        match self.degrees().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    /// Constant term when the polynomial is a pure scalar (`x^0 u^0`).
    pub fn as_scalar(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                if m.is_scalar() && m.u() == 0 {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }
}

/// Nonzero partials as `(1-based index, ∂f/∂x_i)`.
pub fn de_rham(f: &Polynomial) -> Vec<(usize, Polynomial)> {
    (0..f.n())
        .filter_map(|i| {
            let d = f.partial(i);
            (!d.is_zero()).then_some((i + 1, d))
        })
        .collect()
}

pub fn mixed_partial(p: &Polynomial, indices: &[usize]) -> Polynomial {
    p.mixed_partial(indices)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let factors = m.render_factors();
            if factors.is_empty() {
                write!(f, "{}", rational::render(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", rational::render(&mag), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Binomial coefficient as a big integer.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    rational::factorial(n) / (rational::factorial(k) * rational::factorial(n - k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn x(n: usize, e: &[u32]) -> PolyMonomial {
        assert_eq!(e.len(), n);
        PolyMonomial::new(e, 0)
    }

    #[test]
    fn de_rham_examples() {
        let p = Polynomial::term(x(2, &[1, 1]), int(1));
        let d = de_rham(&p);
        assert_eq!(d.len(), 2);
        assert_eq!(d[0], (1, Polynomial::term(x(2, &[0, 1]), int(1))));
        assert_eq!(d[1], (2, Polynomial::term(x(2, &[1, 0]), int(1))));

        let p = Polynomial::term(x(1, &[3]), int(1));
        assert_eq!(de_rham(&p), vec![(1, Polynomial::term(x(1, &[2]), int(3)))]);

        let p = Polynomial::term(PolyMonomial::u_power(2, 2), int(5));
        assert!(de_rham(&p).is_empty());
    }

    #[test]
    fn mixed_partial_examples() {
        let p = Polynomial::term(x(3, &[1, 1, 1]), int(1));
        assert_eq!(mixed_partial(&p, &[1, 2, 3]).as_scalar(), Some(int(1)));
        let p = Polynomial::term(x(1, &[3]), int(1));
        assert_eq!(mixed_partial(&p, &[1, 1, 1]).as_scalar(), Some(int(6)));
        let p = Polynomial::term(x(2, &[1, 1]), int(1));
        assert_eq!(mixed_partial(&p, &[1, 1]).as_scalar(), Some(int(0)));
    }

    #[test]
    fn rendering_is_graded_lex() {
        let p = Polynomial::from_terms(
            2,
            [(x(2, &[0, 2]), int(-2)), (x(2, &[1, 1]), int(1))],
        );
        assert_eq!(p.to_string(), "x1*x2 - 2*x2^2");
        let q = Polynomial::from_terms(
            2,
            [(x(2, &[0, 3]), int(1)), (x(2, &[3, 0]), int(1)), (x(2, &[1, 0]), rational::frac(-1, 2))],
        );
        assert_eq!(q.to_string(), "x1^3 + x2^3 - 1/2*x1");
    }

    #[test]
    fn cancellation_drops_terms() {
        let a = Polynomial::term(x(2, &[1, 0]), int(2));
        let b = a.scale(&int(-1));
        assert!(a.add(&b).is_zero());
        assert_eq!(a.add(&b).len(), 0);
    }

    #[test]
    fn enumerate_monomials() {
        assert_eq!(PolyMonomial::of_degree(2, 2).len(), 3);
        assert_eq!(PolyMonomial::of_degree(3, 3).len(), 10);
        assert_eq!(PolyMonomial::up_to_degree(2, 3).len(), 10);
        assert_eq!(binomial(5, 2), BigInt::from(10));
    }
}
