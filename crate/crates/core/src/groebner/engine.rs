//! Buchberger engine over elements of free modules. Ideals are the rank-1
//! case. Division tracks cofactors, the basis tracks its expression over
//! the input generators, and syzygies come from a second pass over all
//! S-pairs of the finished basis.

use super::MonomialOrder;
use crate::poly::{
    grevlex_cmp, mono_div, mono_divides, mono_lcm, mono_mul, Coeff, Ctx, Mono, Polynomial,
};
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::BTreeSet;

/// Module monomial: component index plus scalar monomial.
pub type ModMono = (u32, Mono);

/// Terms sorted strictly descending under the engine order.
#[derive(Clone, Debug)]
pub struct Element {
    pub terms: Vec<(ModMono, Coeff)>,
}

impl Element {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(ModMono, Coeff)> {
        self.terms.first()
    }
}

#[derive(Clone, Debug)]
pub enum EngineOrder {
    /// Rank-1 comparison by a scalar monomial order.
    Scalar(MonomialOrder),
    /// Position over term: lower component dominates, grevlex inside.
    PotGrevlex,
}

impl EngineOrder {
    fn cmp(&self, a: &ModMono, b: &ModMono) -> Ordering {
        match self {
            EngineOrder::Scalar(ord) => ord.cmp(&a.1, &b.1),
            EngineOrder::PotGrevlex => match b.0.cmp(&a.0) {
                Ordering::Equal => grevlex_cmp(&a.1, &b.1),
                other => other,
            },
        }
    }
}

pub struct Engine {
    pub order: EngineOrder,
    /// Rank of the ambient free module (1 for ideals).
    pub rank: usize,
}

pub struct GroebnerResult {
    /// Reduced basis, ascending by leading module monomial.
    pub basis: Vec<Element>,
    /// `basis[i] = Σ_j transform[i][j] · gens[j]` (present when tracked).
    pub transform: Option<Vec<Vec<Polynomial>>>,
}

pub struct DivisionOutcome {
    pub remainder: Element,
    /// Cofactor per divisor: `input = Σ cofactors[k]·divisors[k] + remainder`.
    pub cofactors: Vec<Polynomial>,
}

impl Engine {
    pub fn scalar(ord: MonomialOrder) -> Self {
        Engine { order: EngineOrder::Scalar(ord), rank: 1 }
    }

    pub fn module(rank: usize) -> Self {
        Engine { order: EngineOrder::PotGrevlex, rank }
    }

    pub fn element_from_poly(&self, p: &Polynomial) -> Element {
        let mut terms: Vec<(ModMono, Coeff)> = p
            .terms()
            .iter()
            .map(|(m, c)| ((0u32, m.clone()), c.clone()))
            .collect();
        self.sort_terms(&mut terms);
        Element { terms }
    }

    /// Builds an element from one polynomial per component.
    pub fn element_from_components(&self, comps: &[Polynomial]) -> Element {
        let mut terms = Vec::new();
        for (ci, p) in comps.iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push(((ci as u32, m.clone()), c.clone()));
            }
        }
        self.sort_terms(&mut terms);
        Element { terms }
    }

    pub fn element_to_poly(&self, e: &Element, ctx: &Ctx) -> Polynomial {
        Polynomial::from_terms(
            ctx,
            e.terms.iter().map(|((_, m), c)| (m.clone(), c.clone())).collect(),
        )
    }

    pub fn element_to_components(&self, e: &Element, ctx: &Ctx) -> Vec<Polynomial> {
        let mut comps: Vec<Vec<(Mono, Coeff)>> = vec![Vec::new(); self.rank];
        for ((ci, m), c) in &e.terms {
            comps[*ci as usize].push((m.clone(), c.clone()));
        }
        comps
            .into_iter()
            .map(|terms| Polynomial::from_terms(ctx, terms))
            .collect()
    }

    fn sort_terms(&self, terms: &mut Vec<(ModMono, Coeff)>) {
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        // merge duplicates (inputs from Polynomial are already unique)
        let mut out: Vec<(ModMono, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms.drain(..) {
            match out.last_mut() {
                Some(last) if last.0 == m => {
                    last.1 += c;
                    if last.1.is_zero() {
                        out.pop();
                    }
                }
                _ => {
                    if !c.is_zero() {
                        out.push((m, c));
                    }
                }
            }
        }
        *terms = out;
    }

    /// `a - (mono, coeff)·b`, both sorted; result sorted.
    fn sub_scaled(&self, a: &Element, b: &Element, mono: &Mono, coeff: &Coeff) -> Element {
        let scaled: Vec<(ModMono, Coeff)> = b
            .terms
            .iter()
            .map(|((ci, m), c)| ((*ci, mono_mul(m, mono)), c * coeff))
            .collect();
        let mut out = Vec::with_capacity(a.terms.len() + scaled.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() || j < scaled.len() {
            let take_left = if i == a.terms.len() {
                false
            } else if j == scaled.len() {
                true
            } else {
                match self.order.cmp(&a.terms[i].0, &scaled[j].0) {
                    Ordering::Greater => true,
                    Ordering::Less => false,
                    Ordering::Equal => {
                        let c = &a.terms[i].1 - &scaled[j].1;
                        if !c.is_zero() {
                            out.push((a.terms[i].0.clone(), c));
                        }
                        i += 1;
                        j += 1;
                        continue;
                    }
                }
            };
            if take_left {
                out.push(a.terms[i].clone());
                i += 1;
            } else {
                let (m, c) = &scaled[j];
                out.push((m.clone(), -c));
                j += 1;
            }
        }
        Element { terms: out }
    }

    /// Full normal form: every term is reduced, scanning divisors in order.
    pub fn reduce(&self, input: &Element, divisors: &[Element], ctx: &Ctx) -> DivisionOutcome {
        let mut work = input.clone();
        let mut remainder: Vec<(ModMono, Coeff)> = Vec::new();
        let mut cof: Vec<Vec<(Mono, Coeff)>> = vec![Vec::new(); divisors.len()];
        'outer: while let Some((lm, lc)) = work.terms.first().cloned() {
            for (k, g) in divisors.iter().enumerate() {
                if let Some((gm, gc)) = g.leading() {
                    if gm.0 == lm.0 && mono_divides(&gm.1, &lm.1) {
                        let qm = mono_div(&lm.1, &gm.1);
                        let qc = &lc / gc;
                        work = self.sub_scaled(&work, g, &qm, &qc);
                        cof[k].push((qm, qc));
                        continue 'outer;
                    }
                }
            }
            remainder.push(work.terms.remove(0));
        }
        DivisionOutcome {
            remainder: Element { terms: remainder },
            cofactors: cof
                .into_iter()
                .map(|terms| Polynomial::from_terms(ctx, terms))
                .collect(),
        }
    }

    /// Scales an element so its coefficients are coprime integers and the
    /// leading coefficient is positive. Returns the applied factor.
    fn primitive_normalize(&self, e: &mut Element) -> Coeff {
        use num_traits::Signed;
        if e.terms.is_empty() {
            return Coeff::one();
        }
        let mut num = num_bigint::BigInt::zero();
        let mut den = num_bigint::BigInt::one();
        for (_, c) in &e.terms {
            num = num_integer::gcd(num, c.numer().clone());
            den = num_integer::lcm(den, c.denom().clone());
        }
        let mut content = Coeff::new(num, den);
        if e.terms[0].1.is_negative() {
            content = -content;
        }
        let factor = content.recip();
        for (_, c) in &mut e.terms {
            *c *= &factor;
        }
        factor
    }

    /// Buchberger with the normal selection strategy; optional transform
    /// tracking. The returned basis is reduced, auto-reduced, monic, and
    /// sorted ascending by leading module monomial.
    pub fn buchberger(&self, gens: &[Element], ctx: &Ctx, track: bool) -> GroebnerResult {
        let mut basis: Vec<Element> = Vec::new();
        let mut transform: Vec<Vec<Polynomial>> = Vec::new();
        let zero_row = |n: usize| vec![Polynomial::zero(ctx); n];

        for (j, g) in gens.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let mut e = g.clone();
            let factor = self.primitive_normalize(&mut e);
            basis.push(e);
            if track {
                let mut row = zero_row(gens.len());
                row[j] = Polynomial::constant(ctx, factor);
                transform.push(row);
            }
        }

        // pending pairs keyed by (lcm total degree, i, j); BTreeSet pops
        // the normal-strategy minimum deterministically
        let mut pending: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
        let pairable = |a: &Element, b: &Element| -> Option<Mono> {
            let (la, _) = a.leading()?;
            let (lb, _) = b.leading()?;
            if la.0 != lb.0 {
                return None;
            }
            Some(mono_lcm(&la.1, &lb.1))
        };
        let add_pairs =
            |pending: &mut BTreeSet<(u32, usize, usize)>, basis: &[Element], upto: usize| {
                for i in 0..upto {
                    if let Some(lcm) = pairable(&basis[i], &basis[upto]) {
                        pending.insert((lcm.iter().sum(), i, upto));
                    }
                }
            };
        for n in 0..basis.len() {
            add_pairs(&mut pending, &basis, n);
        }

        while let Some(&(deg, i, j)) = pending.iter().next() {
            pending.remove(&(deg, i, j));
            let (li, ci) = basis[i].leading().unwrap().clone();
            let (lj, cj) = basis[j].leading().unwrap().clone();
            let lcm = mono_lcm(&li.1, &lj.1);

            // product criterion (ideals only)
            if self.rank == 1 && mono_mul(&li.1, &lj.1) == lcm {
                continue;
            }
            // chain criterion
            let mut chained = false;
            for (k, g) in basis.iter().enumerate() {
                if k == i || k == j {
                    continue;
                }
                let Some((lk, _)) = g.leading() else { continue };
                if lk.0 != li.0 || !mono_divides(&lk.1, &lcm) {
                    continue;
                }
                let pair_ik = {
                    let (a, b) = (i.min(k), i.max(k));
                    let d = mono_lcm(&basis[a].leading().unwrap().0 .1,
                                     &basis[b].leading().unwrap().0 .1);
                    (d.iter().sum::<u32>(), a, b)
                };
                let pair_jk = {
                    let (a, b) = (j.min(k), j.max(k));
                    let d = mono_lcm(&basis[a].leading().unwrap().0 .1,
                                     &basis[b].leading().unwrap().0 .1);
                    (d.iter().sum::<u32>(), a, b)
                };
                if !pending.contains(&pair_ik) && !pending.contains(&pair_jk) {
                    chained = true;
                    break;
                }
            }
            if chained {
                continue;
            }

            let ui = mono_div(&lcm, &li.1);
            let uj = mono_div(&lcm, &lj.1);
            // spoly = (ui/ci)·g_i − (uj/cj)·g_j
            let gi_scaled = self.sub_scaled(
                &Element { terms: Vec::new() },
                &basis[i],
                &ui,
                &(-ci.clone().recip()),
            );
            let spoly = self.sub_scaled(&gi_scaled, &basis[j], &uj, &cj.clone().recip());
            let outcome = self.reduce(&spoly, &basis, ctx);
            if outcome.remainder.is_zero() {
                continue;
            }
            let mut rem = outcome.remainder;
            let factor = self.primitive_normalize(&mut rem);
            if track {
                let mut row = zero_row(gens.len());
                let qi = Polynomial::from_terms(ctx, vec![(ui, ci.recip())]);
                let qj = Polynomial::from_terms(ctx, vec![(uj, cj.recip())]);
                for (t, r) in transform[i].iter().zip(row.iter_mut()) {
                    *r = r.add(&t.mul(&qi));
                }
                for (t, r) in transform[j].iter().zip(row.iter_mut()) {
                    *r = r.sub(&t.mul(&qj));
                }
                for (k, q) in outcome.cofactors.iter().enumerate() {
                    if q.is_zero() {
                        continue;
                    }
                    let t_row = transform[k].clone();
                    for (t, r) in t_row.iter().zip(row.iter_mut()) {
                        *r = r.sub(&t.mul(q));
                    }
                }
                let row = row
                    .into_iter()
                    .map(|p| p.scale(&factor))
                    .collect::<Vec<_>>();
                transform.push(row);
            }
            basis.push(rem);
            add_pairs(&mut pending, &basis, basis.len() - 1);
        }

        self.reduce_basis(basis, transform, ctx, track, gens.len())
    }

    fn reduce_basis(
        &self,
        basis: Vec<Element>,
        transform: Vec<Vec<Polynomial>>,
        ctx: &Ctx,
        track: bool,
        ngens: usize,
    ) -> GroebnerResult {
        let _ = ngens;
        // minimal basis: drop elements whose LT is divisible by another's
        let mut order: Vec<usize> = (0..basis.len()).collect();
        order.sort_by(|&a, &b| {
            self.order
                .cmp(&basis[a].leading().unwrap().0, &basis[b].leading().unwrap().0)
        });
        let mut keep: Vec<usize> = Vec::new();
        for &idx in &order {
            let lt = &basis[idx].leading().unwrap().0;
            let dominated = keep.iter().any(|&k| {
                let klt = &basis[k].leading().unwrap().0;
                klt.0 == lt.0 && mono_divides(&klt.1, &lt.1)
            });
            if !dominated {
                keep.push(idx);
            }
        }
        let mut kept: Vec<Element> = keep.iter().map(|&i| basis[i].clone()).collect();
        let mut kept_tr: Vec<Vec<Polynomial>> = if track {
            keep.iter().map(|&i| transform[i].clone()).collect()
        } else {
            Vec::new()
        };

        // tail reduction against the other kept elements
        for i in 0..kept.len() {
            let others: Vec<Element> = kept
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, e)| e.clone())
                .collect();
            let outcome = self.reduce(&kept[i], &others, ctx);
            if track {
                let mut row = kept_tr[i].clone();
                let mut oi = 0;
                for k in 0..kept.len() {
                    if k == i {
                        continue;
                    }
                    let q = &outcome.cofactors[oi];
                    oi += 1;
                    if q.is_zero() {
                        continue;
                    }
                    let t_row = kept_tr[k].clone();
                    for (t, r) in t_row.iter().zip(row.iter_mut()) {
                        *r = r.sub(&t.mul(q));
                    }
                }
                kept_tr[i] = row;
            }
            kept[i] = outcome.remainder;
        }

        // monic normalization
        for i in 0..kept.len() {
            let lc = kept[i].leading().unwrap().1.clone();
            let inv = lc.recip();
            for (_, c) in &mut kept[i].terms {
                *c *= &inv;
            }
            if track {
                for t in &mut kept_tr[i] {
                    *t = t.scale(&inv);
                }
            }
        }

        GroebnerResult {
            basis: kept,
            transform: if track { Some(kept_tr) } else { None },
        }
    }

    /// Syzygies of `gens`: rows `s` with `Σ s[j]·gens[j] = 0` that generate
    /// the full syzygy module. Requires a tracked basis.
    pub fn syzygies(&self, gens: &[Element], ctx: &Ctx) -> Vec<Vec<Polynomial>> {
        let result = self.buchberger(gens, ctx, true);
        let basis = &result.basis;
        let transform = result.transform.as_ref().unwrap();
        let mut rows: Vec<Vec<Polynomial>> = Vec::new();

        // S-pair syzygies of the finished basis, translated through the
        // transform (Schreyer-style generation)
        for i in 0..basis.len() {
            for j in (i + 1)..basis.len() {
                let (li, ci) = basis[i].leading().unwrap().clone();
                let (lj, cj) = basis[j].leading().unwrap().clone();
                if li.0 != lj.0 {
                    continue;
                }
                let lcm = mono_lcm(&li.1, &lj.1);
                let ui = mono_div(&lcm, &li.1);
                let uj = mono_div(&lcm, &lj.1);
                let gi_scaled = self.sub_scaled(
                    &Element { terms: Vec::new() },
                    &basis[i],
                    &ui,
                    &(-ci.clone().recip()),
                );
                let spoly = self.sub_scaled(&gi_scaled, &basis[j], &uj, &cj.clone().recip());
                let outcome = self.reduce(&spoly, basis, ctx);
                assert!(
                    outcome.remainder.is_zero(),
                    "S-polynomial of a Groebner basis must reduce to zero"
                );
                // syzygy over the basis: (ui/ci)e_i − (uj/cj)e_j − cofactors
                let mut over_basis = vec![Polynomial::zero(ctx); basis.len()];
                over_basis[i] = Polynomial::from_terms(ctx, vec![(ui, ci.recip())]);
                over_basis[j] = over_basis[j]
                    .sub(&Polynomial::from_terms(ctx, vec![(uj, cj.recip())]));
                for (k, q) in outcome.cofactors.iter().enumerate() {
                    over_basis[k] = over_basis[k].sub(q);
                }
                // translate to a row over the generators
                let mut row = vec![Polynomial::zero(ctx); gens.len()];
                for (k, c) in over_basis.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (t, r) in transform[k].iter().zip(row.iter_mut()) {
                        *r = r.add(&t.mul(c));
                    }
                }
                rows.push(row);
            }
        }

        // relations gens_i = Σ_k C[i][k]·basis[k] give rows of Id − C·T
        for (i, g) in gens.iter().enumerate() {
            let outcome = self.reduce(g, basis, ctx);
            assert!(
                outcome.remainder.is_zero(),
                "generator must reduce to zero against its own basis"
            );
            let mut row = vec![Polynomial::zero(ctx); gens.len()];
            row[i] = Polynomial::one(ctx);
            for (k, c) in outcome.cofactors.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (t, r) in transform[k].iter().zip(row.iter_mut()) {
                    *r = r.sub(&t.mul(c));
                }
            }
            rows.push(row);
        }

        rows.retain(|row| row.iter().any(|p| !p.is_zero()));
        rows
    }
}
