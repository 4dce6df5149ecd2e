//! Ideals and submodules of free modules over the polynomial ring:
//! reduced Gröbner bases with caching, normal forms with witnesses,
//! elimination, saturation, colon ideals, dimension, radical membership,
//! and syzygies.

pub mod engine;

use crate::error::Error;
use crate::poly::{grevlex_cmp, Ctx, Polynomial, VariableContext};
use crate::Result;
use engine::{Element, Engine};
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, LazyLock, Mutex};

/// Scalar orders usable inside a block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SimpleOrder {
    Lex,
    GrevLex,
}

impl SimpleOrder {
    fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            SimpleOrder::Lex => {
                for i in 0..a.len() {
                    if a[i] != b[i] {
                        return a[i].cmp(&b[i]);
                    }
                }
                Ordering::Equal
            }
            SimpleOrder::GrevLex => grevlex_cmp(a, b),
        }
    }
}

/// A monomial order over a fixed variable context. Block orders compare
/// the first block (the variables to eliminate) before the rest, which
/// makes them elimination orders for that block.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    Block {
        /// Sorted variable indices of the first block.
        first: Vec<usize>,
        outer: SimpleOrder,
        inner: SimpleOrder,
    },
}

impl MonomialOrder {
    /// The standard elimination order for `vars`: block(vars; grevlex, grevlex).
    pub fn elimination(vars: &[usize]) -> Self {
        let mut first = vars.to_vec();
        first.sort_unstable();
        first.dedup();
        MonomialOrder::Block { first, outer: SimpleOrder::GrevLex, inner: SimpleOrder::GrevLex }
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => SimpleOrder::Lex.cmp(a, b),
            MonomialOrder::GrevLex => SimpleOrder::GrevLex.cmp(a, b),
            MonomialOrder::Block { first, outer, inner } => {
                let mut in_first = vec![false; a.len()];
                for &v in first {
                    in_first[v] = true;
                }
                let ra: Vec<u32> = first.iter().map(|&v| a[v]).collect();
                let rb: Vec<u32> = first.iter().map(|&v| b[v]).collect();
                match outer.cmp(&ra, &rb) {
                    Ordering::Equal => {
                        let ca: Vec<u32> = (0..a.len()).filter(|v| !in_first[*v]).map(|v| a[v]).collect();
                        let cb: Vec<u32> = (0..b.len()).filter(|v| !in_first[*v]).map(|v| b[v]).collect();
                        inner.cmp(&ca, &cb)
                    }
                    other => other,
                }
            }
        }
    }

    /// Human-readable form with variable names resolved through `ctx`.
    pub fn describe(&self, ctx: &Ctx) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::GrevLex => "grevlex".into(),
            MonomialOrder::Block { first, outer, inner } => {
                let names: Vec<&str> = first.iter().map(|&v| ctx.name(v)).collect();
                let show = |o: &SimpleOrder| match o {
                    SimpleOrder::Lex => "lex",
                    SimpleOrder::GrevLex => "grevlex",
                };
                format!("block[{}; {}|{}]", names.join(","), show(outer), show(inner))
            }
        }
    }
}

static ORDER_LOG: LazyLock<Mutex<BTreeSet<String>>> =
    LazyLock::new(|| Mutex::new(BTreeSet::new()));

fn record_order(ord: &MonomialOrder, ctx: &Ctx) {
    ORDER_LOG.lock().unwrap().insert(ord.describe(ctx));
}

/// Drains the set of monomial-order descriptions used since the last call.
pub fn take_order_log() -> Vec<String> {
    let mut log = ORDER_LOG.lock().unwrap();
    let out: Vec<String> = log.iter().cloned().collect();
    log.clear();
    out
}

/// Remainder and witness of a division: `input = Σ cofactorᵢ·basisᵢ + remainder`.
pub struct NormalForm {
    pub remainder: Polynomial,
    pub basis: Arc<Vec<Polynomial>>,
    pub cofactors: Vec<Polynomial>,
}

/// A polynomial ideal with cached reduced Gröbner bases per monomial order.
/// Generators are immutable after construction, so cache entries never go
/// stale; the cache is internally synchronized.
pub struct Ideal {
    ctx: Ctx,
    gens: Vec<Polynomial>,
    cache: Mutex<BTreeMap<MonomialOrder, Arc<Vec<Polynomial>>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ctx: self.ctx.clone(),
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Ideal⟨{}⟩", self.gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", "))
    }
}

impl Ideal {
    pub fn new(ctx: &Ctx, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if !g.context().same_as(ctx) {
                return Err(Error::ContextMismatch("ideal generator".into()));
            }
        }
        Ok(Ideal { ctx: ctx.clone(), gens, cache: Mutex::new(BTreeMap::new()) })
    }

    pub fn zero(ctx: &Ctx) -> Self {
        Ideal::new(ctx, Vec::new()).unwrap()
    }

    pub fn unit(ctx: &Ctx) -> Self {
        Ideal::new(ctx, vec![Polynomial::one(ctx)]).unwrap()
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Reduced Gröbner basis under `ord`; cached and deterministic.
    pub fn basis(&self, ord: &MonomialOrder) -> Arc<Vec<Polynomial>> {
        record_order(ord, &self.ctx);
        if let Some(b) = self.cache.lock().unwrap().get(ord) {
            return b.clone();
        }
        let eng = Engine::scalar(ord.clone());
        let elems: Vec<Element> = self.gens.iter().map(|g| eng.element_from_poly(g)).collect();
        let result = eng.buchberger(&elems, &self.ctx, false);
        let polys: Vec<Polynomial> = result
            .basis
            .iter()
            .map(|e| eng.element_to_poly(e, &self.ctx))
            .collect();
        let arc = Arc::new(polys);
        self.cache
            .lock()
            .unwrap()
            .entry(ord.clone())
            .or_insert_with(|| arc.clone());
        arc
    }

    pub fn groebner_basis(&self, ord: &MonomialOrder) -> Vec<Polynomial> {
        self.basis(ord).as_ref().clone()
    }

    /// Remainder of `p` modulo the reduced basis, with cofactors.
    pub fn normal_form_with_witness(&self, p: &Polynomial, ord: &MonomialOrder) -> NormalForm {
        let basis = self.basis(ord);
        let eng = Engine::scalar(ord.clone());
        let divisors: Vec<Element> = basis.iter().map(|g| eng.element_from_poly(g)).collect();
        let outcome = eng.reduce(&eng.element_from_poly(p), &divisors, &self.ctx);
        NormalForm {
            remainder: eng.element_to_poly(&outcome.remainder, &self.ctx),
            basis,
            cofactors: outcome.cofactors,
        }
    }

    pub fn normal_form(&self, p: &Polynomial, ord: &MonomialOrder) -> Polynomial {
        self.normal_form_with_witness(p, ord).remainder
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p, &MonomialOrder::GrevLex).is_zero()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.basis(&MonomialOrder::GrevLex).is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        let b = self.basis(&MonomialOrder::GrevLex);
        b.len() == 1 && b[0].is_one()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn equals(&self, other: &Ideal) -> bool {
        self.basis(&MonomialOrder::GrevLex) == other.basis(&MonomialOrder::GrevLex)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ctx(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ctx, gens)
    }

    pub fn add_generator(&self, p: &Polynomial) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.push(p.clone());
        Ideal::new(&self.ctx, gens)
    }

    /// Product ideal; the generator list is canonicalized through its own
    /// reduced basis to keep iterated products small.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ctx(other)?;
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        let raw = Ideal::new(&self.ctx, gens)?;
        let canon = raw.basis(&MonomialOrder::GrevLex).as_ref().clone();
        Ideal::new(&self.ctx, canon)
    }

    pub fn power(&self, k: u32) -> Result<Ideal> {
        if k == 0 {
            return Ok(Ideal::unit(&self.ctx));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    fn check_ctx(&self, other: &Ideal) -> Result<()> {
        if self.ctx.same_as(&other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch("ideal operation".into()))
        }
    }

    /// `I ∩ K[vars not in `vars`]`, via a block order with `vars` first.
    pub fn elimination(&self, vars: &[usize]) -> Result<Ideal> {
        for &v in vars {
            if v >= self.ctx.len() {
                return Err(Error::UnknownVariable(format!("#{v}")));
            }
        }
        let ord = MonomialOrder::elimination(vars);
        let basis = self.basis(&ord);
        let gens: Vec<Polynomial> = basis
            .iter()
            .filter(|g| {
                g.terms()
                    .iter()
                    .all(|(m, _)| vars.iter().all(|&v| m[v] == 0))
            })
            .cloned()
            .collect();
        Ideal::new(&self.ctx, gens)
    }

    /// `I : f^∞` via elimination of a fresh variable `t` from `I + ⟨1 − t·f⟩`.
    pub fn saturation(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::input("saturation by the zero polynomial"));
        }
        if !f.context().same_as(&self.ctx) {
            return Err(Error::ContextMismatch("saturation".into()));
        }
        let tname = self.ctx.fresh_name("t");
        let (ext, tindex) = self.ctx.extended(&[tname])?;
        let id_map: Vec<usize> = (0..self.ctx.len()).collect();
        let mut gens: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|g| g.map_context(&ext, &id_map))
            .collect();
        let t = Polynomial::variable(&ext, tindex);
        gens.push(Polynomial::one(&ext).sub(&t.mul(&f.map_context(&ext, &id_map))));
        let extended = Ideal::new(&ext, gens)?;
        let eliminated = extended.elimination(&[tindex])?;
        // generators no longer involve t; map back
        let gens_back: Vec<Polynomial> = eliminated
            .gens
            .iter()
            .map(|g| {
                let mut terms = Vec::new();
                for (m, c) in g.terms() {
                    debug_assert_eq!(m[tindex], 0);
                    terms.push((m[..self.ctx.len()].to_vec(), c.clone()));
                }
                Polynomial::from_terms(&self.ctx, terms)
            })
            .collect();
        Ideal::new(&self.ctx, gens_back)
    }

    /// Ideal intersection via the `t`-trick: eliminate `t` from `t·I + (1−t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ctx(other)?;
        let tname = self.ctx.fresh_name("t");
        let (ext, tindex) = self.ctx.extended(&[tname])?;
        let id_map: Vec<usize> = (0..self.ctx.len()).collect();
        let t = Polynomial::variable(&ext, tindex);
        let one_minus_t = Polynomial::one(&ext).sub(&t);
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(t.mul(&g.map_context(&ext, &id_map)));
        }
        for g in &other.gens {
            gens.push(one_minus_t.mul(&g.map_context(&ext, &id_map)));
        }
        let extended = Ideal::new(&ext, gens)?;
        let eliminated = extended.elimination(&[tindex])?;
        let gens_back: Vec<Polynomial> = eliminated
            .gens
            .iter()
            .map(|g| {
                let terms = g
                    .terms()
                    .iter()
                    .map(|(m, c)| (m[..self.ctx.len()].to_vec(), c.clone()))
                    .collect();
                Polynomial::from_terms(&self.ctx, terms)
            })
            .collect();
        Ideal::new(&self.ctx, gens_back)
    }

    /// `I : g = {h : h·g ∈ I}` for a single nonzero polynomial.
    pub fn colon_poly(&self, g: &Polynomial) -> Result<Ideal> {
        if g.is_zero() {
            return Err(Error::input("colon by the zero polynomial"));
        }
        let principal = Ideal::new(&self.ctx, vec![g.clone()])?;
        let inter = self.intersect(&principal)?;
        let gens: Vec<Polynomial> = inter
            .gens
            .iter()
            .map(|h| {
                h.div_exact(g)
                    .expect("members of I ∩ ⟨g⟩ are divisible by g")
            })
            .collect();
        Ideal::new(&self.ctx, gens)
    }

    /// `I : J = {h : h·J ⊆ I}` for a nonzero ideal `J`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ctx(other)?;
        let nonzero: Vec<&Polynomial> =
            other.gens.iter().filter(|g| !g.is_zero()).collect();
        if nonzero.is_empty() {
            return Err(Error::input("colon by the zero ideal"));
        }
        let mut acc: Option<Ideal> = None;
        for g in nonzero {
            let part = self.colon_poly(g)?;
            acc = Some(match acc {
                None => part,
                Some(a) => a.intersect(&part)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// `I : J^∞`, computed by iterating the colon until stabilization.
    pub fn saturation_ideal(&self, other: &Ideal) -> Result<Ideal> {
        let mut current = self.clone();
        loop {
            let next = current.colon(other)?;
            if next.equals(&current) {
                return Ok(next);
            }
            current = next;
        }
    }

    /// Rabinowitsch trick: `f` vanishes on `V(I)` iff
    /// `1 ∈ I + ⟨1 − t·f⟩` in an extended context.
    pub fn radical_membership(&self, f: &Polynomial) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        let tname = self.ctx.fresh_name("t");
        let (ext, tindex) = self.ctx.extended(&[tname])?;
        let id_map: Vec<usize> = (0..self.ctx.len()).collect();
        let mut gens: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|g| g.map_context(&ext, &id_map))
            .collect();
        let t = Polynomial::variable(&ext, tindex);
        gens.push(Polynomial::one(&ext).sub(&t.mul(&f.map_context(&ext, &id_map))));
        Ok(Ideal::new(&ext, gens)?.is_unit_ideal())
    }

    /// Krull dimension of `V(I)`: the size of a largest variable set
    /// independent modulo the leading-term ideal. The empty variety gets
    /// dimension −1.
    pub fn dimension(&self) -> i64 {
        let basis = self.basis(&MonomialOrder::GrevLex);
        let lts: Vec<Vec<u32>> = basis
            .iter()
            .map(|g| g.leading_term().unwrap().0.clone())
            .collect();
        max_independent_set(&lts, self.ctx.len())
    }
}

/// Largest subset `S` of variables such that no monomial in `lts` is
/// supported inside `S`; −1 when even the empty set fails (unit ideal).
pub(crate) fn max_independent_set(lts: &[Vec<u32>], nvars: usize) -> i64 {
    let supports: Vec<Vec<usize>> = lts
        .iter()
        .map(|m| (0..nvars).filter(|&v| m[v] > 0).collect())
        .collect();
    // a monomial with empty support (a unit) rules out every S
    if supports.iter().any(|s| s.is_empty()) {
        return -1;
    }
    let mut best: i64 = 0; // empty set is independent here
    for mask in 0u64..(1u64 << nvars) {
        let size = mask.count_ones() as i64;
        if size <= best {
            continue;
        }
        let independent = supports
            .iter()
            .all(|s| !s.iter().all(|&v| mask & (1 << v) != 0));
        if independent {
            best = size;
        }
    }
    best
}

/// Reduced Gröbner basis together with its expression over the input
/// generator list: `basis[i] = Σ_j transform[i][j]·gens[j]`.
pub fn groebner_basis_with_transform(
    ctx: &Ctx,
    gens: &[Polynomial],
    ord: &MonomialOrder,
) -> (Vec<Polynomial>, Vec<Vec<Polynomial>>) {
    record_order(ord, ctx);
    let eng = Engine::scalar(ord.clone());
    let elems: Vec<Element> = gens.iter().map(|g| eng.element_from_poly(g)).collect();
    let result = eng.buchberger(&elems, ctx, true);
    let basis = result
        .basis
        .iter()
        .map(|e| eng.element_to_poly(e, ctx))
        .collect();
    (basis, result.transform.unwrap())
}

/// Generating set of the syzygy module of `columns` (each column is a
/// vector of `rank` polynomials): rows `s` with `Σ_j s[j]·columns[j] = 0`.
/// The output is the reduced module Gröbner basis of the syzygy module,
/// one syzygy per row.
pub fn syzygies_of_columns(
    ctx: &Ctx,
    rank: usize,
    columns: &[Vec<Polynomial>],
) -> Result<Vec<Vec<Polynomial>>> {
    for col in columns {
        if col.len() != rank {
            return Err(Error::shape(format!(
                "column has {} components, ambient rank is {rank}",
                col.len()
            )));
        }
    }
    let eng = Engine::module(rank);
    let elems: Vec<Element> = columns
        .iter()
        .map(|c| eng.element_from_components(c))
        .collect();
    let raw = eng.syzygies(&elems, ctx);
    // canonicalize through the reduced module basis of the syzygy module
    let syz_eng = Engine::module(columns.len());
    let syz_elems: Vec<Element> = raw
        .iter()
        .map(|row| syz_eng.element_from_components(row))
        .collect();
    let reduced = syz_eng.buchberger(&syz_elems, ctx, false);
    Ok(reduced
        .basis
        .iter()
        .map(|e| syz_eng.element_to_components(e, ctx))
        .collect())
}

/// Normal form of a module element against a set of module generators
/// (used by tests to check syzygy-module membership).
pub fn module_normal_form(
    ctx: &Ctx,
    rank: usize,
    element: &[Polynomial],
    generators: &[Vec<Polynomial>],
) -> Vec<Polynomial> {
    let eng = Engine::module(rank);
    let elems: Vec<Element> = generators
        .iter()
        .map(|c| eng.element_from_components(c))
        .collect();
    let basis = eng.buchberger(&elems, ctx, false).basis;
    let outcome = eng.reduce(&eng.element_from_components(element), &basis, ctx);
    eng.element_to_components(&outcome.remainder, ctx)
}

/// Convenience constructor used throughout the tests.
pub fn ideal_of(ctx: &Ctx, gens: &[&str]) -> Result<Ideal> {
    let polys: Result<Vec<Polynomial>> = gens
        .iter()
        .map(|s| crate::poly::parse_expression(s, ctx))
        .collect();
    Ideal::new(ctx, polys?)
}

/// Re-exported so callers can build fresh contexts near their ideals.
pub use crate::poly::parse_expression;

#[allow(unused_imports)]
use crate::poly::Coeff;

#[cfg(test)]
mod tests;

#[allow(dead_code)]
fn _assert_send_sync() {
    fn check<T: Send + Sync>() {}
    check::<Ideal>();
    check::<VariableContext>();
}
