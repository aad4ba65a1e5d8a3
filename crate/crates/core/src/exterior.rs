//! Exterior monomials in the 1-forms `dx_i` ([`Form`]) and in the dual
//! vectors `v_i = ∂/∂x_i` ([`Multivector`]).
//!
//! A monomial is stored as a bitmask of its index set; the implied order of
//! the factors is always increasing. Indices in the public API are 1-based
//! to match the variable names `x1, …, xn`.

use std::cmp::Ordering;
use std::fmt;

use crate::conventions;
use crate::error::{Error, Result};

/// Largest supported rank.
pub const MAX_RANK: usize = 30;

/// A monomial together with the Koszul sign produced while normalizing it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signed<T> {
    pub sign: i8,
    pub mono: T,
}

impl<T> Signed<T> {
    pub fn new(sign: i8, mono: T) -> Self {
        Signed { sign, mono }
    }
}

/// Sign of the permutation that sorts the concatenation `a ++ b`, or `None`
/// when the index sets meet.
pub(crate) fn merge_sign(a: u32, b: u32) -> Option<i8> {
    if a & b != 0 {
        return None;
    }
    let mut crossings = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        crossings += (a >> j).count_ones();
    }
    Some(if crossings.is_multiple_of(2) { 1 } else { -1 })
}

/// Lexicographic order on sorted index lists of equal length, graded by length.
fn graded_lex(a: u32, b: u32) -> Ordering {
    match a.count_ones().cmp(&b.count_ones()) {
        Ordering::Equal if a == b => Ordering::Equal,
        Ordering::Equal => {
            let x = a ^ b;
            if a & (x & x.wrapping_neg()) != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        }
        other => other,
    }
}

macro_rules! ext_monomial {
    ($name:ident, $sym:expr) => {
        #[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
        pub struct $name(u32);

        impl $name {
            pub const ONE: $name = $name(0);

            /// Strictly increasing 1-based indices, each at most `n`.
            pub fn from_indices(indices: &[usize], n: usize) -> Result<Self> {
                let mut bits = 0u32;
                let mut last = 0usize;
                for &i in indices {
                    if i == 0 || i > n || n > MAX_RANK {
                        return Err(Error::IndexOutOfRange { index: i, n });
                    }
                    if i <= last {
                        return Err(Error::InvalidArgument(format!(
                            "indices must be strictly increasing, got {:?}",
                            indices
                        )));
                    }
                    last = i;
                    bits |= 1 << (i - 1);
                }
                Ok($name(bits))
            }

            /// The wedge of generators in the given (arbitrary) order, normalized.
            pub fn product_of(indices: &[usize], n: usize) -> Result<Option<Signed<Self>>> {
                let mut acc = Signed::new(1, $name::ONE);
                for &i in indices {
                    let g = $name::generator(i, n)?;
                    match acc.mono.wedge(g) {
                        Some(s) => acc = Signed::new(acc.sign * s.sign, s.mono),
                        None => return Ok(None),
                    }
                }
                Ok(Some(acc))
            }

            pub fn generator(i: usize, n: usize) -> Result<Self> {
                $name::from_indices(&[i], n)
            }

            pub(crate) fn from_bits(bits: u32) -> Self {
                $name(bits)
            }

            pub(crate) fn bit(i0: usize) -> Self {
                $name(1 << i0)
            }

            pub fn bits(self) -> u32 {
                self.0
            }

            pub fn degree(self) -> u32 {
                self.0.count_ones()
            }

            pub fn is_one(self) -> bool {
                self.0 == 0
            }

            pub fn contains(self, i0: usize) -> bool {
                self.0 & (1 << i0) != 0
            }

            /// 1-based indices in increasing order.
            pub fn indices(self) -> Vec<usize> {
                self.zero_based().map(|i| i + 1).collect()
            }

            pub(crate) fn zero_based(self) -> impl Iterator<Item = usize> {
                let mut rest = self.0;
                std::iter::from_fn(move || {
                    if rest == 0 {
                        None
                    } else {
                        let j = rest.trailing_zeros() as usize;
                        rest &= rest - 1;
                        Some(j)
                    }
                })
            }

            /// `self ∧ other`, zero when the index sets meet.
            pub fn wedge(self, other: Self) -> Option<Signed<Self>> {
                merge_sign(self.0, other.0).map(|s| Signed::new(s, $name(self.0 | other.0)))
            }

            /// All monomials of rank `n`, graded-lex.
            pub fn all(n: usize) -> Vec<Self> {
                let mut v: Vec<Self> = (0u32..(1u32 << n)).map($name).collect();
                v.sort();
                v
            }

            /// Monomials of rank `n` with degree at most `cap`, graded-lex.
            pub fn up_to_degree(n: usize, cap: u32) -> Vec<Self> {
                $name::all(n).into_iter().filter(|m| m.degree() <= cap).collect()
            }
        }

        impl Ord for $name {
            fn cmp(&self, other: &Self) -> Ordering {
                graded_lex(self.0, other.0)
            }
        }

        impl PartialOrd for $name {
            fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
                Some(self.cmp(other))
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.is_one() {
                    return write!(f, "1");
                }
                let parts: Vec<String> =
                    self.indices().iter().map(|i| format!("{}{}", $sym, i)).collect();
                write!(f, "{}", parts.join("^"))
            }
        }
    };
}

ext_monomial!(Form, "dx");
ext_monomial!(Multivector, "v");

impl Multivector {
    /// Interior product `i_{dx_k} θ` (`k` is 0-based): removes `v_k` with the
    /// sign `(-1)^(position - 1)`.
    pub fn contract(self, k0: usize) -> Option<Signed<Multivector>> {
        if !self.contains(k0) {
            return None;
        }
        let below = (self.0 & ((1u32 << k0) - 1)).count_ones();
        let sign = if below.is_multiple_of(2) { 1 } else { -1 };
        Some(Signed::new(sign, Multivector(self.0 & !(1 << k0))))
    }

    /// The dual monomial on the `E` side with the same index set.
    pub fn dual(self) -> Form {
        Form(self.0)
    }
}

impl Form {
    pub fn dual(self) -> Multivector {
        Multivector(self.0)
    }
}

/// The natural pairing `⟨θ, β⟩`; zero unless the index sets coincide.
pub fn pair(theta: Multivector, beta: Form) -> i8 {
    if theta.bits() != beta.bits() {
        return 0;
    }
    conventions::pairing_sign(theta.degree())
}

/// `v_{j_k} ∧ … ∧ v_{j_1} ∧ θ` for `J = {j_1 < … < j_k}`.
pub fn reversed_then(j: Multivector, theta: Multivector) -> Option<Signed<Multivector>> {
    j.wedge(theta)
        .map(|s| Signed::new(s.sign * conventions::reversal_sign(j.degree()), s.mono))
}
