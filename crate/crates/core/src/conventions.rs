//! Global sign and normalization conventions.
//!
//! Everything that the construction leaves to a choice of convention is
//! fixed here, once, for the whole crate.

/// How `⟨θ, β⟩` is evaluated on monomials with the same index set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pairing {
    /// `⟨v_I, dx_I⟩ = 1` on sorted index lists.
    SortedDeterminant,
    /// `⟨v_I, dx_I⟩ = ι_{v_{i_1}} ⋯ ι_{v_{i_p}} dx_I = (-1)^{p(p-1)/2}`.
    InteriorProduct,
}

pub const PAIRING: Pairing = Pairing::InteriorProduct;

/// `∂b = ORIENTATION·[d_Koszul, b]`, likewise for `∂̄` with `δ_F`.
pub const COMMUTATOR_ORIENTATION: i8 = -1;

/// Finite tree edges carry `HOMOTOPY_EDGE_SIGN·h`.
pub const HOMOTOPY_EDGE_SIGN: i8 = -1;

/// Sign pattern of the A∞ relations
/// `Σ ± μ^{r+1+t}(1^{⊗r} ⊗ μ^s ⊗ 1^{⊗t}) = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StasheffSign {
    /// `(-1)^{r + st}`.
    RPlusST,
    /// `(-1)^{rs + t}`.
    RSPlusT,
}

/// The form satisfied by the tables this crate produces.
pub const STASHEFF: StasheffSign = StasheffSign::RSPlusT;

/// Default bivalent-vertex cap for quadratic potentials.
pub const DEFAULT_M_CAP: usize = 4;

/// Default truncation of `Sym E` in the factorization check.
pub fn default_sym_bound(d: u32) -> u32 {
    3 + d
}

pub(crate) fn parity_sign(e: u32) -> i8 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `(-1)^{k(k-1)/2}`, the sign of reversing `k` anticommuting factors.
pub fn reversal_sign(k: u32) -> i8 {
    parity_sign(k * k.saturating_sub(1) / 2)
}

/// `⟨v_I, dx_I⟩` for `|I| = p`.
pub fn pairing_sign(p: u32) -> i8 {
    match PAIRING {
        Pairing::SortedDeterminant => 1,
        Pairing::InteriorProduct => reversal_sign(p),
    }
}
