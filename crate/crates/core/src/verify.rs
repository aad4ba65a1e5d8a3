//! Checks of a computed [`MuTable`] against closed-form predictions and the
//! A∞ relations.

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::conventions::{parity_sign, StasheffSign};
use crate::error::{Error, Result};
use crate::exterior::Multivector;
use crate::poly::Polynomial;
use crate::potential::Context;
use crate::rational::{self, Rational};
use crate::report::{Status, Witness, MAX_WITNESSES};
use crate::transfer::{AKey, AVector};
use crate::trees::{self, render_avector, Engine, MuKey, MuTable, RibbonTree, TransferOptions};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check_name: String,
    pub status: Status,
    pub checked: usize,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    fn from_results(name: impl Into<String>, results: Vec<Option<Witness>>) -> Self {
        let checked = results.len();
        let witnesses: Vec<Witness> = results.into_iter().flatten().take(MAX_WITNESSES).collect();
        CheckReport {
            check_name: name.into(),
            status: Status::from_bool(witnesses.is_empty()),
            checked,
            witnesses,
            notes: Vec::new(),
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status.passed()
    }
}

fn show_inputs(inputs: &[Multivector]) -> String {
    let v: Vec<String> = inputs.iter().map(|t| t.to_string()).collect();
    format!("({})", v.join(", "))
}

fn compare(inputs: &[Multivector], expected: &AVector, got: &AVector) -> Option<Witness> {
    (expected != got).then(|| Witness::new(show_inputs(inputs), render_avector(expected), render_avector(got)))
}

fn scalar_u(c: Rational) -> AVector {
    AVector::single(AKey::new(1, Multivector::ONE), c)
}

/// The plain wedge `θ∧θ'` as an element of `A`.
fn wedge(a: Multivector, b: Multivector) -> AVector {
    match a.wedge(b) {
        Some(w) => AVector::single(AKey::new(0, w.mono), Rational::from_integer(w.sign.into())),
        None => AVector::new(),
    }
}

/// `μ¹ = 0` on every stored input.
pub fn check_minimality(table: &MuTable) -> CheckReport {
    let zero = AVector::new();
    let results = table.of_arity(1).map(|(k, v)| compare(&k.inputs, &zero, v)).collect();
    CheckReport::from_results("minimality", results)
}

/// Degree-one generators `v_1, …, v_n`.
fn generators(n: usize) -> Vec<Multivector> {
    (0..n).map(Multivector::bit).collect()
}

fn lookup<'a>(table: &'a MuTable, inputs: &[Multivector]) -> Result<&'a AVector> {
    table.get(inputs).ok_or_else(|| {
        if table.of_arity(inputs.len()).next().is_none() {
            Error::MissingArity(inputs.len())
        } else {
            Error::MalformedTable(format!("missing entry {}", show_inputs(inputs)))
        }
    })
}

/// `μ²` against the wedge (`d ≥ 3`) or the Clifford relation (`d = 2`).
pub fn check_mu2(ctx: &Context, table: &MuTable) -> Result<CheckReport> {
    let mut results = Vec::new();
    if ctx.d() >= 3 {
        for (k, v) in table.of_arity(2) {
            results.push(compare(&k.inputs, &wedge(k.inputs[0], k.inputs[1]), v));
        }
        return Ok(CheckReport::from_results("mu2 = wedge", results));
    }
    let gens = generators(ctx.n());
    let mut intro = true;
    for &a in &gens {
        for &b in &gens {
            let ab = lookup(table, &[a, b])?;
            let ba = lookup(table, &[b, a])?;
            let ia = a.zero_based().next().unwrap() + 1;
            let ib = b.zero_based().next().unwrap() + 1;
            let hess = ctx.p().mixed_partial(&[ia, ib]).as_scalar().expect("constant");
            results.push(compare(&[a, b], &scalar_u(hess.clone()), &ab.plus(ba)));
            // single ordered product against u/2!·∂²p
            let u_part = ab.coefficient(&AKey::new(1, Multivector::ONE));
            intro &= u_part == hess / rational::int(2);
        }
    }
    for (k, v) in table.of_arity(2) {
        let graded = v.filter(|a| a.u == 0);
        results.push(compare(&k.inputs, &wedge(k.inputs[0], k.inputs[1]), &graded));
    }
    Ok(CheckReport::from_results("mu2 clifford", results).with_note(format!(
        "single ordered mu2 u-part equals u/2!*d2p: {}",
        intro
    )))
}

/// `μ^k = 0` for `2 < k < d`.
pub fn check_window(table: &MuTable, d: u32) -> CheckReport {
    let zero = AVector::new();
    let results: Vec<Option<Witness>> = table
        .entries
        .iter()
        .filter(|(k, _)| k.k > 2 && (k.k as u32) < d)
        .map(|(k, v)| compare(&k.inputs, &zero, v))
        .collect();
    let mut r = CheckReport::from_results("trivial window", results);
    if d <= 3 {
        r = r.with_note("window is empty");
    }
    r
}

/// `(u/d!)·∂^d p/∂x_{i_1}…∂x_{i_d}`.
pub fn predicted_mu_d(ctx: &Context, indices: &[usize]) -> AVector {
    let c = ctx.p().mixed_partial(indices).as_scalar().expect("constant");
    let fact = Rational::from_integer(rational::factorial(ctx.d()));
    scalar_u(c / fact)
}

/// `μ^d` on every `d`-tuple of generators, repeats allowed.
pub fn check_mu_d(ctx: &Context, table: &MuTable) -> Result<CheckReport> {
    let d = ctx.d() as usize;
    let gens = generators(ctx.n());
    let mut results = Vec::new();
    for t in trees::tuples(&gens, d) {
        let got = lookup(table, &t)?;
        let idx: Vec<usize> = t.iter().map(|m| m.indices()[0]).collect();
        // at d = 2 the product also carries the wedge; only its u-part is predicted
        let got = if d == 2 { got.filter(|a| a.u == 1) } else { got.clone() };
        results.push(compare(&t, &predicted_mu_d(ctx, &idx), &got));
    }
    Ok(CheckReport::from_results("mu_d = u/d! mixed partial", results))
}

/// Internal degree is preserved and cohomological degree shifts by `2 − k`.
pub fn check_grading_laws(table: &MuTable) -> CheckReport {
    let d = table.d;
    let results = table
        .entries
        .iter()
        .map(|(key, v)| {
            let s: i64 = key.inputs.iter().map(|t| t.degree() as i64).sum();
            let bad: Vec<String> = v
                .keys()
                .filter(|a| a.internal(d) != s || a.cohomological() != s + 2 - key.k as i64)
                .map(|a| a.to_string())
                .collect();
            (!bad.is_empty()).then(|| {
                Witness::new(
                    show_inputs(&key.inputs),
                    format!("internal {}, cohomological {}", s, s + 2 - key.k as i64),
                    bad.join(", "),
                )
            })
        })
        .collect();
    CheckReport::from_results("grading laws", results)
}

/// `(1/ℓ!)·d(…d(dp ⌟ s_1)…) ⌟ s_ℓ` for constant sections `s_j = Σ_i c_{ji} v_i`.
pub fn global_forms(ctx: &Context, sections: &[Vec<Rational>]) -> Result<Rational> {
    let n = ctx.n();
    if sections.iter().any(|s| s.len() != n) {
        return Err(Error::InvalidArgument(format!("sections must have {} components", n)));
    }
    let mut f: Polynomial = ctx.p().clone();
    for s in sections {
        // contract d f with s: Σ_i s_i ∂_i f
        let mut next = Polynomial::zero(n);
        for (i, c) in s.iter().enumerate() {
            if !c.is_zero() {
                next = next.add(&f.partial(i).scale(c));
            }
        }
        f = next;
    }
    let fact = Rational::from_integer(rational::factorial(sections.len() as u32));
    let value = f.as_scalar().ok_or_else(|| {
        Error::InvalidArgument(format!(
            "{} sections do not reduce a degree-{} potential to a constant",
            sections.len(),
            ctx.d()
        ))
    })?;
    Ok(value / fact)
}

/// `(1/ℓ!)·Σ c_{1 i_1}⋯c_{ℓ i_ℓ} ∂^ℓ p/∂x_{i_1}…∂x_{i_ℓ}`.
pub fn local_forms(ctx: &Context, sections: &[Vec<Rational>]) -> Rational {
    let n = ctx.n();
    let l = sections.len();
    let idx: Vec<usize> = (1..=n).collect();
    let mut total = Rational::zero();
    for t in trees::tuples(&idx, l) {
        let mut c = Rational::one();
        for (j, &i) in t.iter().enumerate() {
            c *= &sections[j][i - 1];
        }
        if c.is_zero() {
            continue;
        }
        if let Some(v) = ctx.p().mixed_partial(&t).as_scalar() {
            total += c * v;
        }
    }
    total / Rational::from_integer(rational::factorial(l as u32))
}

/// Constant sections used by the global/local comparison: the generators and
/// a few integer combinations.
pub fn sample_sections(n: usize) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| rational::int((i == j) as i64)).collect())
        .collect();
    out.push((0..n).map(|j| rational::int(j as i64 + 1)).collect());
    out.push((0..n).map(|j| rational::frac(if j % 2 == 0 { 1 } else { -2 }, 3)).collect());
    out
}

/// Global and local formulas agree on all tuples of sample sections; on
/// generator tuples both agree with the `u`-part of the table's `μ^d`.
pub fn check_global_local(ctx: &Context, table: Option<&MuTable>) -> CheckReport {
    let d = ctx.d() as usize;
    let secs = sample_sections(ctx.n());
    let ids: Vec<usize> = (0..secs.len()).collect();
    let mut results: Vec<Option<Witness>> = trees::tuples(&ids, d)
        .par_iter()
        .map(|t| {
            let s: Vec<Vec<Rational>> = t.iter().map(|&i| secs[i].clone()).collect();
            let g = global_forms(ctx, &s).expect("d sections of a degree-d form");
            let l = local_forms(ctx, &s);
            (g != l).then(|| {
                Witness::new(format!("{:?}", t), rational::render(&l), rational::render(&g))
            })
        })
        .collect();
    if let Some(table) = table {
        let gens = generators(ctx.n());
        for t in trees::tuples(&gens, d) {
            let s: Vec<Vec<Rational>> = t
                .iter()
                .map(|m| {
                    let i = m.zero_based().next().unwrap();
                    (0..ctx.n()).map(|j| rational::int((i == j) as i64)).collect()
                })
                .collect();
            let g = global_forms(ctx, &s).expect("generator sections");
            let got = table
                .get(&t)
                .map(|v| v.coefficient(&AKey::new(1, Multivector::ONE)));
            results.push(match got {
                Some(c) if c == g => None,
                other => Some(Witness::new(
                    show_inputs(&t),
                    rational::render(&g),
                    other.map(|c| rational::render(&c)).unwrap_or_else(|| "missing".into()),
                )),
            });
        }
    }
    CheckReport::from_results("global = local", results)
}

fn stasheff_exponent(form: StasheffSign, r: usize, s: usize, t: usize) -> u32 {
    (match form {
        StasheffSign::RPlusST => r + s * t,
        StasheffSign::RSPlusT => r * s + t,
    }) as u32
}

/// `Σ_{r+s+t=N} ± μ^{r+1+t}(a_1,…,a_r, μ^s(a_{r+1},…,a_{r+s}), …)` on basis inputs.
pub fn stasheff_sum(
    mu: &dyn Fn(&[AKey]) -> Result<AVector>,
    inputs: &[AKey],
    form: StasheffSign,
) -> Result<AVector> {
    let big_n = inputs.len();
    let mut total = AVector::new();
    for s in 1..=big_n {
        for r in 0..=(big_n - s) {
            let t = big_n - r - s;
            let left_deg: i64 = inputs[..r].iter().map(|a| a.cohomological()).sum();
            let sign = parity_sign(stasheff_exponent(form, r, s, t))
                * parity_sign(((s as i64 * left_deg) % 2).unsigned_abs() as u32);
            let inner = mu(&inputs[r..r + s])?;
            for (ik, ic) in &inner {
                let mut outer_in: Vec<AKey> = inputs[..r].to_vec();
                outer_in.push(*ik);
                outer_in.extend_from_slice(&inputs[r + s..]);
                let outer = mu(&outer_in)?;
                total.add_scaled(&outer, &(ic * Rational::from_integer(sign.into())));
            }
        }
    }
    Ok(total)
}

/// The A∞ relations with `N ≤ max_relation` inputs drawn from the table's
/// arity-one inputs; one report per `N`.
pub fn stasheff_check(table: &MuTable, max_relation: usize, form: StasheffSign) -> Result<Vec<CheckReport>> {
    if table.max_k() < max_relation {
        return Err(Error::MissingArity(table.max_k() + 1));
    }
    let basis: Vec<Multivector> = table.of_arity(1).map(|(k, _)| k.inputs[0]).collect();
    let mu = |keys: &[AKey]| table.lookup(keys);
    let mut reports = Vec::new();
    for big_n in 1..=max_relation {
        let tuples = trees::tuples(&basis, big_n);
        let results: Vec<Result<Option<Witness>>> = tuples
            .par_iter()
            .map(|t| {
                let keys: Vec<AKey> = t.iter().map(|m| AKey::new(0, *m)).collect();
                let sum = stasheff_sum(&mu, &keys, form)?;
                Ok((!sum.is_zero()).then(|| Witness::new(show_inputs(t), "0", render_avector(&sum))))
            })
            .collect();
        let results = results.into_iter().collect::<Result<Vec<_>>>()?;
        let name = format!("stasheff N={} ({})", big_n, match form {
            StasheffSign::RPlusST => "(-1)^(r+st)",
            StasheffSign::RSPlusT => "(-1)^(rs+t)",
        });
        reports.push(CheckReport::from_results(name, results));
    }
    Ok(reports)
}

/// `μ^k(…, u·a_j, …) = u·μ^k(…)`, recomputed from scratch with shifted inputs.
pub fn check_u_linearity(engine: &Engine<'_>, max_k: usize, theta_cap: u32) -> CheckReport {
    let basis = trees::theta_basis(engine.context().n(), theta_cap);
    let mut jobs = Vec::new();
    for k in 1..=max_k {
        for t in trees::tuples(&basis, k) {
            for j in 0..k {
                for shift in [-1, 1] {
                    jobs.push((t.clone(), j, shift));
                }
            }
        }
    }
    let results = jobs
        .par_iter()
        .map(|(t, j, shift)| {
            let plain: Vec<AKey> = t.iter().map(|m| AKey::new(0, *m)).collect();
            let mut shifted = plain.clone();
            shifted[*j].u += shift;
            let base = engine.mu_basis(&plain);
            let expected: AVector = base.iter().map(|(a, c)| (AKey::new(a.u + shift, a.theta), c.clone())).collect();
            let got = engine.mu_basis(&shifted);
            (expected != got).then(|| {
                Witness::new(format!("{} with u^{} on slot {}", show_inputs(t), shift, j + 1), render_avector(&expected), render_avector(&got))
            })
        })
        .collect();
    CheckReport::from_results("u-linearity", results)
}

/// For `d = 2` the enumerated sums for the given caps agree with each other
/// and with the memoized sum over all trees.
pub fn check_m_stability(ctx: &Context, max_k: usize, theta_cap: u32, caps: &[usize]) -> CheckReport {
    let full = Engine::new(ctx, TransferOptions::default());
    let engines: Vec<(usize, Engine<'_>)> = caps
        .iter()
        .map(|&m| {
            (m, Engine::new(ctx, TransferOptions {
                strategy: trees::Strategy::Enumerated,
                prune: true,
                m_cap: m,
            }))
        })
        .collect();
    let basis = trees::theta_basis(ctx.n(), theta_cap);
    let keys: Vec<Vec<Multivector>> = (1..=max_k).flat_map(|k| trees::tuples(&basis, k)).collect();
    let results = keys
        .par_iter()
        .map(|t| {
            let a: Vec<AKey> = t.iter().map(|m| AKey::new(0, *m)).collect();
            let reference = full.mu_basis(&a);
            for (m, e) in &engines {
                let got = e.mu_basis(&a);
                if got != reference {
                    return Some(Witness::new(format!("{} with m_cap {}", show_inputs(t), m), render_avector(&reference), render_avector(&got)));
                }
            }
            None
        })
        .collect();
    CheckReport::from_results("m_cap stability", results)
}

/// The trees among `enumerate_trees(k, m_max)` that evaluate to a nonzero
/// operator on some tuple from `basis`.
pub fn nonzero_trees(ctx: &Context, k: usize, m_max: usize, basis: &[Multivector]) -> Vec<RibbonTree> {
    let inputs = trees::tuples(basis, k);
    let engine = Engine::new(ctx, TransferOptions::default());
    trees::enumerate_trees(k, m_max)
        .into_par_iter()
        .filter(|t| {
            inputs.iter().any(|ins| {
                let a: Vec<AKey> = ins.iter().map(|m| AKey::new(0, *m)).collect();
                !engine.tree_value(t, &a).expect("well-formed").is_zero()
            })
        })
        .collect()
}

/// Exactly one tree contributes to `μ^d` (`d ≥ 3`).
pub fn check_unique_tree(ctx: &Context, theta_cap: u32) -> CheckReport {
    let d = ctx.d() as usize;
    let basis = trees::theta_basis(ctx.n(), theta_cap);
    let nz = nonzero_trees(ctx, d, 1, &basis);
    let cm = trees::contributing_m(d, ctx.d(), 1);
    let mut results = vec![(nz.len() != 1).then(|| {
        Witness::new(format!("arity {}", d), "1 tree", format!("{:?}", nz))
    })];
    results.push((cm.values != vec![1]).then(|| {
        Witness::new(format!("contributing_m({}, {})", d, d), "[1]", format!("{:?}", cm.values))
    }));
    let mut r = CheckReport::from_results("unique contributing tree", results);
    if let [t] = nz.as_slice() {
        r = r.with_note(format!("tree: {}", t));
    }
    r
}

/// Summing over every tree with `m ≤ (k−2)/(d−2) + 2` gives the same
/// result as summing over the contributing ones.
pub fn check_pruning(ctx: &Context, max_k: usize, theta_cap: u32) -> CheckReport {
    let d = ctx.d();
    let pruned = Engine::new(ctx, TransferOptions { strategy: trees::Strategy::Enumerated, ..Default::default() });
    let basis = trees::theta_basis(ctx.n(), theta_cap);
    let mut jobs = Vec::new();
    for k in 2..=max_k {
        let m_all = if d > 2 { (k - 2) / (d as usize - 2) + 2 } else { 2 };
        let all = trees::enumerate_trees(k, m_all);
        for t in trees::tuples(&basis, k) {
            jobs.push((t, all.clone()));
        }
    }
    let results = jobs
        .par_iter()
        .map(|(t, all)| {
            let keys: Vec<AKey> = t.iter().map(|m| AKey::new(0, *m)).collect();
            let mut total = AVector::new();
            for tree in all {
                total.add_assign(&pruned.tree_value(tree, &keys).expect("well-formed"));
            }
            let got = pruned.mu_basis(&keys);
            (total != got).then(|| Witness::new(show_inputs(t), render_avector(&total), render_avector(&got)))
        })
        .collect();
    CheckReport::from_results("pruning soundness", results)
}

/// A table with one entry replaced, for negative controls.
pub fn corrupt(table: &MuTable, key: &MuKey, value: AVector) -> MuTable {
    let mut t = table.clone();
    t.entries.insert(key.clone(), value);
    t
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Side,
    Factorization,
    Mu,
    Stasheff,
    All,
}

impl Suite {
    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

/// Bounds for [`run_suite`]; `None` picks the default for the potential.
#[derive(Debug, Clone, Default)]
pub struct SuiteConfig {
    /// Truncation of `Sym E` in the factorization check (default `3 + d`).
    pub sym_bound: Option<u32>,
    /// f-degree bound of the side-condition sweep (default 3).
    pub side_bound: Option<u32>,
    /// Highest arity of the product table (default `max(d, 3)`).
    pub max_k: Option<usize>,
    /// Degree cap on table inputs (default 1).
    pub theta_cap: Option<u32>,
    /// Largest relation checked by the Stasheff suite (default 4).
    pub max_relation: Option<usize>,
    pub options: TransferOptions,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub n: usize,
    pub d: u32,
    pub potential: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factorization: Option<crate::koszul::FactorizationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub side_conditions: Option<crate::transfer::SideConditionsReport>,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn to_text(&self) -> String {
        let mut s = format!("suite {:?} for p = {} (n = {}, d = {}): {}\n", self.suite, self.potential, self.n, self.d, self.status);
        if let Some(f) = &self.factorization {
            s.push_str(&format!("  factorization: {} ({} basis elements)\n", f.status, f.checked_basis_count));
            if let Some(c) = &f.counterexample {
                s.push_str(&format!("    counterexample {}: {}\n", c.basis, c.residual));
            }
        }
        if let Some(r) = &self.side_conditions {
            for i in &r.identities {
                s.push_str(&format!("  {}: {} ({} cases)\n", i.identity, i.status, i.checked));
                for w in &i.witnesses {
                    s.push_str(&format!("    {}: expected {}, got {}\n", w.inputs, w.expected, w.got));
                }
            }
        }
        for c in &self.checks {
            s.push_str(&format!("  {}: {} ({} cases)\n", c.check_name, c.status, c.checked));
            for n in &c.notes {
                s.push_str(&format!("    note: {}\n", n));
            }
            for w in &c.witnesses {
                s.push_str(&format!("    {}: expected {}, got {}\n", w.inputs, w.expected, w.got));
            }
        }
        s
    }
}

fn check_table_matches(ctx: &Context, table: &MuTable) -> Result<()> {
    if table.n != ctx.n() || table.d != ctx.d() {
        return Err(Error::MalformedTable(format!(
            "table is for n = {}, d = {}, expected n = {}, d = {}",
            table.n,
            table.d,
            ctx.n(),
            ctx.d()
        )));
    }
    Ok(())
}

/// Runs the named checks. A supplied `table` replaces the computed one for
/// the table-based checks.
pub fn run_suite(ctx: &Context, suite: Suite, cfg: &SuiteConfig, table: Option<&MuTable>) -> Result<SuiteReport> {
    if let Some(t) = table {
        check_table_matches(ctx, t)?;
    }
    let d = ctx.d();
    let n = ctx.n();
    let engine = Engine::new(ctx, cfg.options);
    let mut checks = Vec::new();

    let factorization = suite.includes(Suite::Factorization).then(|| {
        crate::koszul::check_factorization(ctx, cfg.sym_bound.unwrap_or_else(|| crate::conventions::default_sym_bound(d)))
    });
    let side_conditions = suite
        .includes(Suite::Side)
        .then(|| crate::transfer::side_conditions(ctx, cfg.side_bound.unwrap_or(3)));

    if suite.includes(Suite::Mu) {
        let cap = cfg.theta_cap.unwrap_or(1).max(1);
        let max_k = cfg.max_k.unwrap_or((d as usize).max(3)).max(d as usize);
        let owned;
        let t = match table {
            Some(t) => t,
            None => {
                owned = MuTable::compute(&engine, max_k, cap);
                &owned
            }
        };
        checks.push(check_minimality(t));
        checks.push(check_grading_laws(t));
        checks.push(check_mu2(ctx, t)?);
        checks.push(check_window(t, d));
        checks.push(check_mu_d(ctx, t)?);
        checks.push(check_global_local(ctx, Some(t)));
        checks.push(check_u_linearity(&engine, max_k.min(3), 1));
        if d == 2 {
            checks.push(check_m_stability(ctx, 4.min(max_k.max(3)), 1, &[2, 3, 4]));
        } else if d <= 4 {
            checks.push(check_unique_tree(ctx, 1));
        }
    }

    if suite.includes(Suite::Stasheff) {
        let max_relation = cfg.max_relation.unwrap_or(4);
        let owned;
        let t = match table {
            Some(t) => t,
            None => {
                owned = MuTable::compute(&engine, max_relation, n as u32);
                &owned
            }
        };
        checks.extend(stasheff_check(t, max_relation, crate::conventions::STASHEFF)?);
        let other = match crate::conventions::STASHEFF {
            StasheffSign::RSPlusT => StasheffSign::RPlusST,
            StasheffSign::RPlusST => StasheffSign::RSPlusT,
        };
        for mut r in stasheff_check(&t.twisted(), max_relation, other)? {
            r.check_name = format!("{} on the table twisted by (-1)^(k(k-1)/2)", r.check_name);
            checks.push(r);
        }
    }

    let status = Status::from_bool(
        factorization.as_ref().is_none_or(|f| f.status.passed())
            && side_conditions.as_ref().is_none_or(|s| s.status.passed())
            && checks.iter().all(|c| c.passed()),
    );
    Ok(SuiteReport {
        suite,
        n,
        d,
        potential: ctx.potential().to_string(),
        status,
        factorization,
        side_conditions,
        checks,
    })
}
