//! Ribbon trees and the transferred products `μ^k`.
//!
//! A tree with leaves `1..k`, trivalent vertices (products) and bivalent
//! vertices (the perturbation `∂̄ − ∂`) defines an operator `A^{⊗k} → A`:
//! leaves apply `i`, finite edges apply the homotopy, the root applies `p`.
//! Trees are evaluated in the suspended frame, where the homotopy-decorated
//! subtrees have degree 0; the unsuspended product differs by a sign that
//! depends only on the input degrees.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::conventions::{parity_sign, reversal_sign, DEFAULT_M_CAP, HOMOTOPY_EDGE_SIGN};
use crate::endo::{self, BKey, BVector};
use crate::error::{Error, Result};
use crate::exterior::Multivector;
use crate::lincomb::LinComb;
use crate::poly::binomial;
use crate::potential::Context;
use crate::rational::{Rational, WireRational};
use crate::transfer::{self, AKey, AVector};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RibbonTree {
    /// Leaf at a 1-based position.
    Leaf(usize),
    Bi(Box<RibbonTree>),
    Tri(Box<RibbonTree>, Box<RibbonTree>),
}

impl RibbonTree {
    pub fn leaf(i: usize) -> Self {
        RibbonTree::Leaf(i)
    }

    pub fn bi(c: RibbonTree) -> Self {
        RibbonTree::Bi(Box::new(c))
    }

    pub fn tri(l: RibbonTree, r: RibbonTree) -> Self {
        RibbonTree::Tri(Box::new(l), Box::new(r))
    }

    pub fn leaves(&self) -> usize {
        match self {
            RibbonTree::Leaf(_) => 1,
            RibbonTree::Bi(c) => c.leaves(),
            RibbonTree::Tri(l, r) => l.leaves() + r.leaves(),
        }
    }

    pub fn bivalent(&self) -> usize {
        match self {
            RibbonTree::Leaf(_) => 0,
            RibbonTree::Bi(c) => 1 + c.bivalent(),
            RibbonTree::Tri(l, r) => l.bivalent() + r.bivalent(),
        }
    }

    fn first_leaf(&self) -> usize {
        match self {
            RibbonTree::Leaf(i) => *i,
            RibbonTree::Bi(c) => c.first_leaf(),
            RibbonTree::Tri(l, _) => l.first_leaf(),
        }
    }

    pub fn trivalent(&self) -> usize {
        match self {
            RibbonTree::Leaf(_) => 0,
            RibbonTree::Bi(c) => c.trivalent(),
            RibbonTree::Tri(l, r) => 1 + l.trivalent() + r.trivalent(),
        }
    }

    fn leaf_positions(&self, out: &mut Vec<usize>) {
        match self {
            RibbonTree::Leaf(i) => out.push(*i),
            RibbonTree::Bi(c) => c.leaf_positions(out),
            RibbonTree::Tri(l, r) => {
                l.leaf_positions(out);
                r.leaf_positions(out);
            }
        }
    }

    /// Leaves are `1..k` in planar order.
    pub fn is_well_formed(&self) -> bool {
        let mut v = Vec::new();
        self.leaf_positions(&mut v);
        v.iter().enumerate().all(|(i, &p)| p == i + 1)
    }
}

impl fmt::Display for RibbonTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RibbonTree::Leaf(i) => write!(f, "L{}", i),
            RibbonTree::Bi(c) => write!(f, "Bi({})", c),
            RibbonTree::Tri(l, r) => write!(f, "Tri({}, {})", l, r),
        }
    }
}

impl fmt::Debug for RibbonTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Binary planar shapes on leaves `lo..=hi`, split point ascending.
fn shapes(lo: usize, hi: usize) -> Vec<RibbonTree> {
    if lo == hi {
        return vec![RibbonTree::leaf(lo)];
    }
    let mut out = Vec::new();
    for m in lo..hi {
        let left = shapes(lo, m);
        let right = shapes(m + 1, hi);
        for l in &left {
            for r in &right {
                out.push(RibbonTree::tri(l.clone(), r.clone()));
            }
        }
    }
    out
}

fn stack(mut t: RibbonTree, m: usize) -> RibbonTree {
    for _ in 0..m {
        t = RibbonTree::bi(t);
    }
    t
}

/// Every way of placing exactly `m` bivalent vertices on the edges of `shape`.
fn placements(shape: &RibbonTree, m: usize) -> Vec<RibbonTree> {
    // All decorations of the subtree together with its outgoing edge, by count used.
    fn rec(node: &RibbonTree, m: usize) -> Vec<(RibbonTree, usize)> {
        let subs: Vec<(RibbonTree, usize)> = match node {
            RibbonTree::Leaf(_) => vec![(node.clone(), 0)],
            RibbonTree::Tri(l, r) => {
                let mut v = Vec::new();
                for (lt, lu) in rec(l, m) {
                    for (rt, ru) in rec(r, m - lu) {
                        v.push((RibbonTree::tri(lt.clone(), rt), lu + ru));
                    }
                }
                v
            }
            RibbonTree::Bi(_) => unreachable!("shapes carry no bivalent vertices"),
        };
        let mut out = Vec::new();
        for (s, used) in subs {
            for extra in 0..=(m - used) {
                out.push((stack(s.clone(), extra), used + extra));
            }
        }
        out
    }
    rec(shape, m).into_iter().filter(|(_, u)| *u == m).map(|(t, _)| t).collect()
}

/// All ribbon trees with `k` leaves and at most `m_max` bivalent vertices,
/// ordered by bivalent count, then shape, then placement. For `k = 1` these
/// are the chains `Bi(…Bi(L1))` with at least one vertex.
pub fn enumerate_trees(k: usize, m_max: usize) -> Vec<RibbonTree> {
    if k == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for m in 0..=m_max {
        if k == 1 {
            if m > 0 {
                out.push(stack(RibbonTree::leaf(1), m));
            }
            continue;
        }
        for s in shapes(1, k) {
            out.extend(placements(&s, m));
        }
    }
    out
}

/// `Cat(k−1)·C(m + 2k − 2, 2k − 2)`: trees with exactly `m` bivalent vertices.
pub fn tree_count(k: usize, m: usize) -> num_bigint::BigInt {
    if k == 0 {
        return 0.into();
    }
    if k == 1 {
        return if m > 0 { 1.into() } else { 0.into() };
    }
    let k = k as u32;
    let catalan = binomial(2 * (k - 1), k - 1) / num_bigint::BigInt::from(k);
    catalan * binomial(m as u32 + 2 * k - 2, 2 * k - 2)
}

/// The bivalent counts that can contribute to `μ^k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContributingM {
    pub values: Vec<usize>,
    /// Set when the set is a configured cap rather than a consequence of degrees.
    pub heuristic: bool,
}

/// For `d ≥ 3` only `m(d − 2) = k − 2` survives the f-degree count; for
/// `d = 2` every `m` can contribute and the range `0..=m_cap` is a cap.
pub fn contributing_m(k: usize, d: u32, m_cap: usize) -> ContributingM {
    if d == 2 {
        let lo = if k == 1 { 1 } else { 0 };
        return ContributingM {
            values: (lo..=m_cap).collect(),
            heuristic: true,
        };
    }
    let step = (d - 2) as i64;
    let need = k as i64 - 2;
    let values = if need >= 0 && need % step == 0 {
        vec![(need / step) as usize]
    } else {
        Vec::new()
    };
    ContributingM {
        values,
        heuristic: false,
    }
}

fn homotopy_edge(b: &BVector) -> BVector {
    let h = transfer::homotopy_h(b);
    if HOMOTOPY_EDGE_SIGN < 0 {
        h.neg()
    } else {
        h
    }
}

/// The trivalent vertex in the suspended frame: `(−1)^{|x|−1} x·y`, termwise in `x`.
fn suspended_product(x: &BVector, y: &BVector) -> BVector {
    let mut odd = BVector::new();
    let mut even = BVector::new();
    for (k, c) in x {
        if k.parity() == 1 {
            odd.add_term(k.clone(), c.clone());
        } else {
            even.add_term(k.clone(), c.clone());
        }
    }
    let mut out = endo::m_product(&odd, y);
    out.add_assign(&endo::m_product(&even, y).neg());
    out
}

/// Sign relating the suspended tree sum to `μ^k` on homogeneous inputs.
pub fn output_sign(inputs: &[AKey]) -> i8 {
    let k = inputs.len() as u32;
    let mut e = k;
    for (i, a) in inputs.iter().enumerate() {
        e += (k - 1 - i as u32) * a.theta.degree();
    }
    parity_sign(e) * reversal_sign(k)
}

/// Multilinear expansion of a tuple of vectors into basis tuples.
fn expand(inputs: &[AVector]) -> Vec<(Vec<AKey>, Rational)> {
    let mut acc: Vec<(Vec<AKey>, Rational)> = vec![(Vec::new(), Rational::one())];
    for a in inputs {
        let mut next = Vec::with_capacity(acc.len() * a.len());
        for (keys, c) in &acc {
            for (k, c2) in a {
                let mut ks = keys.clone();
                ks.push(*k);
                next.push((ks, c * c2));
            }
        }
        acc = next;
    }
    acc
}

fn eval_node(ctx: &Context, node: &RibbonTree, leaves: &[BVector]) -> BVector {
    let edge = |child: &RibbonTree, v: BVector| match child {
        RibbonTree::Leaf(_) => v,
        _ => homotopy_edge(&v),
    };
    match node {
        RibbonTree::Leaf(i) => leaves[*i - 1].clone(),
        RibbonTree::Bi(c) => {
            let v = eval_node(ctx, c, leaves);
            if v.is_zero() {
                return v;
            }
            endo::perturbation(ctx, &edge(c, v))
        }
        RibbonTree::Tri(l, r) => {
            let lv = eval_node(ctx, l, leaves);
            if lv.is_zero() {
                return lv;
            }
            let lv = edge(l, lv);
            let rv = eval_node(ctx, r, leaves);
            if rv.is_zero() {
                return rv;
            }
            suspended_product(&lv, &edge(r, rv))
        }
    }
}

/// The operator `μ^k_T` of a single tree.
pub fn eval_tree(ctx: &Context, tree: &RibbonTree, inputs: &[AVector]) -> Result<AVector> {
    let leaves = tree.leaves();
    if leaves != inputs.len() || !tree.is_well_formed() {
        return Err(Error::ArityMismatch {
            leaves,
            inputs: inputs.len(),
        });
    }
    let n = ctx.n();
    let mut out = AVector::new();
    for (keys, c) in expand(inputs) {
        let leaf_values: Vec<BVector> =
            keys.iter().map(|k| transfer::incl_i(&AVector::basis(*k), n)).collect();
        let v = transfer::proj_p(&eval_node(ctx, tree, &leaf_values));
        let s = Rational::from_integer(output_sign(&keys).into());
        out.add_scaled(&v, &(c * s));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Recursion over input slices that sums every tree at once.
    Memoized,
    /// Explicit enumeration over the contributing trees.
    Enumerated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TransferOptions {
    pub strategy: Strategy,
    /// Drop intermediate terms whose f-degree cannot reach 0 at the root.
    pub prune: bool,
    /// Bivalent cap used by the enumerated strategy when `d = 2`.
    pub m_cap: usize,
}

impl Default for TransferOptions {
    fn default() -> Self {
        TransferOptions {
            strategy: Strategy::Memoized,
            prune: true,
            m_cap: DEFAULT_M_CAP,
        }
    }
}

type SliceKey = (Vec<AKey>, Option<u32>);
type NodeKey = (RibbonTree, Vec<AKey>);

/// Evaluates `μ^k` with caches shared across calls on the same context.
pub struct Engine<'a> {
    ctx: &'a Context,
    options: TransferOptions,
    y_cache: RwLock<HashMap<SliceKey, Arc<BVector>>>,
    w_cache: RwLock<HashMap<SliceKey, Arc<BVector>>>,
    node_cache: RwLock<HashMap<NodeKey, Arc<BVector>>>,
}

impl<'a> Engine<'a> {
    pub fn new(ctx: &'a Context, options: TransferOptions) -> Self {
        Engine {
            ctx,
            options,
            y_cache: RwLock::new(HashMap::new()),
            w_cache: RwLock::new(HashMap::new()),
            node_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn context(&self) -> &Context {
        self.ctx
    }

    pub fn options(&self) -> TransferOptions {
        self.options
    }

    fn cached<K: std::hash::Hash + Eq + Clone>(
        cache: &RwLock<HashMap<K, Arc<BVector>>>,
        key: &K,
        compute: impl FnOnce() -> BVector,
    ) -> Arc<BVector> {
        if let Some(v) = cache.read().unwrap().get(key) {
            return v.clone();
        }
        let v = Arc::new(compute());
        cache.write().unwrap().entry(key.clone()).or_insert(v).clone()
    }

    fn prune(bound: Option<u32>, v: BVector) -> BVector {
        match bound {
            Some(b) => v.filter(|k: &BKey| k.mono.degree() <= b),
            None => v,
        }
    }

    /// Sum over subtrees on `slice` of their value at the outgoing edge, before `h`.
    fn w(&self, slice: &[AKey], bound: Option<u32>) -> Arc<BVector> {
        let key = (slice.to_vec(), bound);
        Self::cached(&self.w_cache, &key, || {
            let l = slice.len();
            let mut base = BVector::new();
            for m in 1..l {
                let (a, b) = slice.split_at(m);
                let ya = self.y(a, bound.map(|x| x + b.len() as u32));
                if ya.is_zero() {
                    continue;
                }
                let yb = self.y(b, bound.map(|x| x + a.len() as u32));
                base.add_assign(&suspended_product(&ya, &yb));
            }
            if l == 1 {
                let leaf = transfer::incl_i(&AVector::basis(slice[0]), self.ctx.n());
                base.add_assign(&endo::perturbation(self.ctx, &leaf));
            }
            let mut cur = Self::prune(bound, base);
            let mut total = cur.clone();
            while !cur.is_zero() {
                cur = Self::prune(bound, endo::perturbation(self.ctx, &homotopy_edge(&cur)));
                total.add_assign(&cur);
            }
            total
        })
    }

    /// Value on the edge leaving the slice: the leaf itself plus `H(W)`.
    fn y(&self, slice: &[AKey], bound: Option<u32>) -> Arc<BVector> {
        let key = (slice.to_vec(), bound);
        Self::cached(&self.y_cache, &key, || {
            let mut v = homotopy_edge(&self.w(slice, bound));
            if slice.len() == 1 {
                v.add_assign(&transfer::incl_i(&AVector::basis(slice[0]), self.ctx.n()));
            }
            v
        })
    }

    fn mu_basis_memoized(&self, keys: &[AKey]) -> AVector {
        let k = keys.len();
        let bound = (self.options.prune && k >= 2).then_some(0);
        let s = Rational::from_integer(output_sign(keys).into());
        transfer::proj_p(&self.w(keys, bound)).scale(&s)
    }

    /// The trees summed by the enumerated strategy.
    pub fn trees_for(&self, k: usize) -> Vec<RibbonTree> {
        let cm = contributing_m(k, self.ctx.d(), self.options.m_cap);
        let m_cap = if k == 1 { self.options.m_cap } else { cm.values.iter().copied().max().unwrap_or(0) };
        let trees = enumerate_trees(k, m_cap);
        if k == 1 {
            return trees;
        }
        trees.into_iter().filter(|t| cm.values.contains(&t.bivalent())).collect()
    }

    fn mu_basis_enumerated(&self, keys: &[AKey]) -> AVector {
        let mut out = AVector::new();
        for t in self.trees_for(keys.len()) {
            out.add_assign(&self.tree_value(&t, keys).expect("well-formed tree"));
        }
        out
    }

    /// Value of a subtree before its outgoing edge, shared across trees and tuples.
    fn node_value(&self, node: &RibbonTree, keys: &[AKey]) -> Arc<BVector> {
        let lo = node.first_leaf() - 1;
        let key = (node.clone(), keys[lo..lo + node.leaves()].to_vec());
        if let Some(v) = self.node_cache.read().unwrap().get(&key) {
            return v.clone();
        }
        let edge = |child: &RibbonTree, v: &BVector| match child {
            RibbonTree::Leaf(_) => v.clone(),
            _ => homotopy_edge(v),
        };
        let v = match node {
            RibbonTree::Leaf(i) => transfer::incl_i(&AVector::basis(keys[*i - 1]), self.ctx.n()),
            RibbonTree::Bi(c) => {
                let v = self.node_value(c, keys);
                if v.is_zero() {
                    BVector::new()
                } else {
                    endo::perturbation(self.ctx, &edge(c, &v))
                }
            }
            RibbonTree::Tri(l, r) => {
                let lv = self.node_value(l, keys);
                let rv = if lv.is_zero() { Arc::new(BVector::new()) } else { self.node_value(r, keys) };
                if rv.is_zero() {
                    BVector::new()
                } else {
                    suspended_product(&edge(l, &lv), &edge(r, &rv))
                }
            }
        };
        Self::cached(&self.node_cache, &key, || v)
    }

    /// `μ^k_T` of one tree on basis inputs; agrees with [`eval_tree`].
    pub fn tree_value(&self, tree: &RibbonTree, keys: &[AKey]) -> Result<AVector> {
        if tree.leaves() != keys.len() || !tree.is_well_formed() {
            return Err(Error::ArityMismatch {
                leaves: tree.leaves(),
                inputs: keys.len(),
            });
        }
        let s = Rational::from_integer(output_sign(keys).into());
        Ok(transfer::proj_p(&self.node_value(tree, keys)).scale(&s))
    }

    /// `μ^k` on a tuple of basis elements.
    pub fn mu_basis(&self, keys: &[AKey]) -> AVector {
        if keys.is_empty() {
            return AVector::new();
        }
        match self.options.strategy {
            Strategy::Memoized => self.mu_basis_memoized(keys),
            Strategy::Enumerated => self.mu_basis_enumerated(keys),
        }
    }

    /// `μ^k` extended multilinearly.
    pub fn mu(&self, inputs: &[AVector]) -> AVector {
        let mut out = AVector::new();
        for (keys, c) in expand(inputs) {
            out.add_scaled(&self.mu_basis(&keys), &c);
        }
        out
    }
}

/// `μ^k(a_1, …, a_k)` with default options.
pub fn mu_k(ctx: &Context, inputs: &[AVector]) -> AVector {
    Engine::new(ctx, TransferOptions::default()).mu(inputs)
}

/// Key of a table entry: arity and `u^0` inputs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MuKey {
    pub k: usize,
    pub inputs: Vec<Multivector>,
}

/// The computed products on all tuples of exterior monomials of bounded degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MuTable {
    pub n: usize,
    pub d: u32,
    pub potential: String,
    pub entries: BTreeMap<MuKey, AVector>,
}

/// All `k`-tuples from `basis`, lexicographic.
pub fn tuples<T: Clone>(basis: &[T], k: usize) -> Vec<Vec<T>> {
    let mut acc: Vec<Vec<T>> = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::with_capacity(acc.len() * basis.len());
        for t in &acc {
            for b in basis {
                let mut v = t.clone();
                v.push(b.clone());
                next.push(v);
            }
        }
        acc = next;
    }
    acc
}

/// Monomials of `ΛE*` of degree at most `cap`, graded-lex.
pub fn theta_basis(n: usize, cap: u32) -> Vec<Multivector> {
    Multivector::up_to_degree(n, cap)
}

impl MuTable {
    /// Computes `μ^k` for `1 ≤ k ≤ max_k` on every tuple of monomials of
    /// degree at most `theta_cap`.
    pub fn compute(engine: &Engine<'_>, max_k: usize, theta_cap: u32) -> MuTable {
        let ctx = engine.context();
        let basis = theta_basis(ctx.n(), theta_cap);
        let keys: Vec<MuKey> = (1..=max_k)
            .flat_map(|k| tuples(&basis, k).into_iter().map(move |inputs| MuKey { k, inputs }))
            .collect();
        let values: Vec<AVector> = keys
            .par_iter()
            .map(|key| {
                let a: Vec<AKey> = key.inputs.iter().map(|t| AKey::new(0, *t)).collect();
                engine.mu_basis(&a)
            })
            .collect();
        MuTable {
            n: ctx.n(),
            d: ctx.d(),
            potential: ctx.potential().to_string(),
            entries: keys.into_iter().zip(values).collect(),
        }
    }

    pub fn max_k(&self) -> usize {
        self.entries.keys().map(|k| k.k).max().unwrap_or(0)
    }

    pub fn get(&self, inputs: &[Multivector]) -> Option<&AVector> {
        self.entries.get(&MuKey {
            k: inputs.len(),
            inputs: inputs.to_vec(),
        })
    }

    pub fn of_arity(&self, k: usize) -> impl Iterator<Item = (&MuKey, &AVector)> {
        self.entries.iter().filter(move |(key, _)| key.k == k)
    }

    /// `μ^k` on arbitrary basis inputs, using `u`-linearity to reduce to the stored entries.
    pub fn lookup(&self, inputs: &[AKey]) -> Result<AVector> {
        let thetas: Vec<Multivector> = inputs.iter().map(|a| a.theta).collect();
        let shift: i32 = inputs.iter().map(|a| a.u).sum();
        let v = self.get(&thetas).ok_or_else(|| {
            if self.of_arity(inputs.len()).next().is_none() {
                Error::MissingArity(inputs.len())
            } else {
                Error::MalformedTable(format!(
                    "no entry for inputs {:?}",
                    thetas.iter().map(|t| t.indices()).collect::<Vec<_>>()
                ))
            }
        })?;
        Ok(v.iter().map(|(k, c)| (AKey::new(k.u + shift, k.theta), c.clone())).collect())
    }

    /// Multiplies every `μ^k` by `(−1)^{k(k−1)/2}`.
    pub fn twisted(&self) -> MuTable {
        let mut t = self.clone();
        for (key, v) in t.entries.iter_mut() {
            if reversal_sign(key.k as u32) < 0 {
                *v = v.neg();
            }
        }
        t
    }

    pub fn to_wire(&self) -> WireTable {
        WireTable {
            n: self.n,
            d: self.d,
            potential: self.potential.clone(),
            entries: self
                .entries
                .iter()
                .map(|(key, v)| WireEntry {
                    k: key.k,
                    inputs: key.inputs.iter().map(|t| t.indices()).collect(),
                    output: v.iter().map(|(a, c)| WireTerm::new(a, c)).collect(),
                })
                .collect(),
        }
    }

    pub fn from_wire(w: &WireTable) -> Result<MuTable> {
        let n = w.n;
        let mut entries = BTreeMap::new();
        for e in &w.entries {
            if e.inputs.len() != e.k {
                return Err(Error::MalformedTable(format!(
                    "entry of arity {} has {} inputs",
                    e.k,
                    e.inputs.len()
                )));
            }
            let inputs = e
                .inputs
                .iter()
                .map(|ix| Multivector::from_indices(ix, n))
                .collect::<Result<Vec<_>>>()?;
            let mut v = AVector::new();
            for t in &e.output {
                let c = WireRational { num: t.num.clone(), den: t.den.clone() }
                    .to_rational()
                    .ok_or_else(|| Error::MalformedTable(format!("bad rational {}/{}", t.num, t.den)))?;
                v.add_term(AKey::new(t.u, Multivector::from_indices(&t.theta, n)?), c);
            }
            if entries.insert(MuKey { k: e.k, inputs }, v).is_some() {
                return Err(Error::MalformedTable("duplicate entry".into()));
            }
        }
        Ok(MuTable {
            n,
            d: w.d,
            potential: w.potential.clone(),
            entries,
        })
    }

    pub fn to_json(&self) -> String {
        crate::report::to_canonical_json(&self.to_wire())
    }

    pub fn from_json(s: &str) -> Result<MuTable> {
        let w: WireTable = serde_json::from_str(s).map_err(|e| Error::MalformedTable(e.to_string()))?;
        Self::from_wire(&w)
    }

    /// Human-readable listing of the nonzero entries.
    pub fn to_text(&self) -> String {
        let mut s = format!("n = {}, d = {}, p = {}\n", self.n, self.d, self.potential);
        for (key, v) in &self.entries {
            if v.is_zero() {
                continue;
            }
            let ins: Vec<String> = key.inputs.iter().map(|t| t.to_string()).collect();
            s.push_str(&format!("mu{}({}) = {}\n", key.k, ins.join(", "), render_avector(v)));
        }
        s
    }
}

/// `c*u^t*θ` terms in canonical order, e.g. `v1^v2 - 1/2*u`.
pub fn render_avector(v: &AVector) -> String {
    use num_traits::Signed;
    if v.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (idx, (k, c)) in v.iter().enumerate() {
        let mag = c.abs();
        match (idx, c.is_negative()) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        let u = match k.u {
            0 => String::new(),
            1 => "u".into(),
            t => format!("u^{}", t),
        };
        let th = if k.theta.is_one() { String::new() } else { k.theta.to_string() };
        let body: Vec<&str> = [u.as_str(), th.as_str()].into_iter().filter(|x| !x.is_empty()).collect();
        if body.is_empty() {
            s.push_str(&crate::rational::render(&mag));
        } else if mag.is_one() {
            s.push_str(&body.join("*"));
        } else {
            s.push_str(&format!("{}*{}", crate::rational::render(&mag), body.join("*")));
        }
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireTerm {
    pub u: i32,
    pub theta: Vec<usize>,
    pub num: String,
    pub den: String,
}

impl WireTerm {
    fn new(a: &AKey, c: &Rational) -> Self {
        let w = WireRational::from(c);
        WireTerm {
            u: a.u,
            theta: a.theta.indices(),
            num: w.num,
            den: w.den,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireEntry {
    pub k: usize,
    pub inputs: Vec<Vec<usize>>,
    pub output: Vec<WireTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireTable {
    pub n: usize,
    pub d: u32,
    pub potential: String,
    pub entries: Vec<WireEntry>,
}

/// `LinComb` of `A` keyed by `u` power and `θ`, re-exported for callers.
pub type Products = LinComb<AKey>;
