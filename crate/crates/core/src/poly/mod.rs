//! Sparse exact multivariate polynomial and rational-function arithmetic
//! over arbitrary-precision rationals, plus the expression parser.
//!
//! A [`Polynomial`] stores its nonzero terms sorted in descending graded
//! reverse lexicographic order; that canonical form makes equality
//! structural and printing deterministic.

mod context;
mod display;
mod gcd;
mod parse;
mod rational;

pub use context::VariableContext;
pub use parse::parse_expression;
pub use gcd::{gcd as poly_gcd, lcm as poly_lcm};
pub use rational::RationalFunction;

use crate::error::Error;
use crate::Result;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::sync::Arc;

/// Exact coefficient type of the whole engine.
pub type Coeff = BigRational;

/// Shared handle to a variable context.
pub type Ctx = Arc<VariableContext>;

pub fn coeff_from_i64(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub fn coeff_from_pair(num: i64, den: i64) -> Coeff {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Exponent vector; one entry per context variable.
pub type Mono = Vec<u32>;

pub fn mono_mul(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn mono_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// b / a, assuming divisibility.
pub fn mono_div(b: &[u32], a: &[u32]) -> Mono {
    b.iter().zip(a).map(|(x, y)| x - y).collect()
}

pub fn mono_lcm(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn mono_degree(a: &[u32]) -> u32 {
    a.iter().sum()
}

pub fn mono_is_one(a: &[u32]) -> bool {
    a.iter().all(|&e| e == 0)
}

/// Graded reverse lexicographic comparison; the canonical storage order.
pub fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let (da, db) = (mono_degree(a), mono_degree(b));
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            // smaller exponent in the rightmost differing slot wins
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

/// A sparse multivariate polynomial with exact rational coefficients.
///
/// Invariants: no zero coefficients are stored, every exponent vector has
/// the context's length, and terms are sorted descending under grevlex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ctx: Ctx,
    terms: Vec<(Mono, Coeff)>,
}

impl Polynomial {
    pub fn zero(ctx: &Ctx) -> Self {
        Polynomial { ctx: ctx.clone(), terms: Vec::new() }
    }

    pub fn one(ctx: &Ctx) -> Self {
        Polynomial::constant(ctx, Coeff::one())
    }

    pub fn constant(ctx: &Ctx, c: Coeff) -> Self {
        if c.is_zero() {
            return Polynomial::zero(ctx);
        }
        Polynomial { ctx: ctx.clone(), terms: vec![(vec![0; ctx.len()], c)] }
    }

    pub fn variable(ctx: &Ctx, index: usize) -> Self {
        assert!(index < ctx.len(), "variable index out of range");
        let mut m = vec![0; ctx.len()];
        m[index] = 1;
        Polynomial { ctx: ctx.clone(), terms: vec![(m, Coeff::one())] }
    }

    /// Builds a polynomial from arbitrary (monomial, coefficient) pairs,
    /// merging duplicates and dropping zeros.
    pub fn from_terms(ctx: &Ctx, terms: Vec<(Mono, Coeff)>) -> Self {
        let mut terms = terms;
        for (m, _) in &terms {
            assert_eq!(m.len(), ctx.len(), "exponent vector length mismatch");
        }
        terms.sort_by(|a, b| grevlex_cmp(&b.0, &a.0));
        let mut out: Vec<(Mono, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
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
        Polynomial { ctx: ctx.clone(), terms: out }
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    /// Terms in descending grevlex order.
    pub fn terms(&self) -> &[(Mono, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && mono_is_one(&self.terms[0].0) && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && mono_is_one(&self.terms[0].0))
    }

    /// The constant value, if this polynomial is constant.
    pub fn as_constant(&self) -> Option<Coeff> {
        if self.terms.is_empty() {
            Some(Coeff::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| mono_degree(m)).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m[var]).max().unwrap_or(0)
    }

    /// Leading term in the canonical grevlex order.
    pub fn leading_term(&self) -> Option<(&Mono, &Coeff)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    fn check_ctx(&self, other: &Polynomial) -> Result<()> {
        if self.ctx.same_as(&other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch(format!(
                "[{}] vs [{}]",
                self.ctx.names().join(","),
                other.ctx.names().join(",")
            )))
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ctx));
        }
        let mut terms: Vec<(Mono, Coeff)> = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                terms.push((mono_mul(ma, mb), ca * cb));
            }
        }
        Ok(Polynomial::from_terms(&self.ctx, terms))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.checked_add(other).expect("context mismatch in add")
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.checked_sub(other).expect("context mismatch in sub")
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.checked_mul(other).expect("context mismatch in mul")
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take_left = if i == self.terms.len() {
                false
            } else if j == other.terms.len() {
                true
            } else {
                match grevlex_cmp(&self.terms[i].0, &other.terms[j].0) {
                    Ordering::Greater => true,
                    Ordering::Less => false,
                    Ordering::Equal => {
                        let b = &other.terms[j].1;
                        let c = if negate_other {
                            &self.terms[i].1 - b
                        } else {
                            &self.terms[i].1 + b
                        };
                        if !c.is_zero() {
                            out.push((self.terms[i].0.clone(), c));
                        }
                        i += 1;
                        j += 1;
                        continue;
                    }
                }
            };
            if take_left {
                out.push(self.terms[i].clone());
                i += 1;
            } else {
                let (m, c) = &other.terms[j];
                out.push((m.clone(), if negate_other { -c } else { c.clone() }));
                j += 1;
            }
        }
        Polynomial { ctx: self.ctx.clone(), terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_term(&self, mono: &[u32], c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (mono_mul(m, mono), k * c))
                .collect(),
        }
    }

    pub fn power(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ctx);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Formal partial derivative.
    pub fn differentiate(&self, var: usize) -> Result<Polynomial> {
        if var >= self.ctx.len() {
            return Err(Error::UnknownVariable(format!("#{var}")));
        }
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            if m[var] == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2[var] -= 1;
            terms.push((m2, c * Coeff::from_integer(BigInt::from(m[var]))));
        }
        Ok(Polynomial::from_terms(&self.ctx, terms))
    }

    /// Exact composition; unassigned variables map to themselves. The
    /// result is a reduced rational function.
    pub fn substitute(&self, assignment: &[(usize, RationalFunction)]) -> Result<RationalFunction> {
        for (v, r) in assignment {
            if *v >= self.ctx.len() {
                return Err(Error::UnknownVariable(format!("#{v}")));
            }
            if !r.context().same_as(r.context()) {
                unreachable!();
            }
        }
        let target_ctx = assignment
            .first()
            .map(|(_, r)| r.context().clone())
            .unwrap_or_else(|| self.ctx.clone());
        for (_, r) in assignment {
            if !r.context().same_as(&target_ctx) {
                return Err(Error::ContextMismatch(
                    "substitution images in distinct contexts".into(),
                ));
            }
        }
        // variables not mentioned keep their name; they must exist in the
        // target context
        let mut images: Vec<Option<RationalFunction>> = vec![None; self.ctx.len()];
        for (v, r) in assignment {
            images[*v] = Some(r.clone());
        }
        for (v, img) in images.iter_mut().enumerate() {
            if img.is_none() {
                let name = self.ctx.name(v);
                let idx = target_ctx.index_of(name).ok_or_else(|| {
                    Error::ContextMismatch(format!(
                        "unassigned variable `{name}` missing from target context"
                    ))
                })?;
                *img = Some(RationalFunction::from_polynomial(Polynomial::variable(
                    &target_ctx,
                    idx,
                )));
            }
        }
        let images: Vec<RationalFunction> = images.into_iter().map(|o| o.unwrap()).collect();
        let mut acc = RationalFunction::zero(&target_ctx);
        for (m, c) in &self.terms {
            let mut term = RationalFunction::constant(&target_ctx, c.clone());
            for (v, &e) in m.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[v].power(e)?)?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Substitution by polynomials; panics if a denominator could appear
    /// (it cannot: all images are polynomials).
    pub fn substitute_poly(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ctx.len() {
            return Err(Error::shape(format!(
                "expected {} substitution images, got {}",
                self.ctx.len(),
                images.len()
            )));
        }
        let target = images
            .first()
            .map(|p| p.context().clone())
            .ok_or_else(|| Error::shape("substitute_poly on empty context"))?;
        let mut acc = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(&target, c.clone());
            for (v, &e) in m.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[v].power(e));
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Evaluates at a rational point.
    pub fn evaluate(&self, point: &[Coeff]) -> Result<Coeff> {
        if point.len() != self.ctx.len() {
            return Err(Error::shape(format!(
                "point has {} coordinates, context has {}",
                point.len(),
                self.ctx.len()
            )));
        }
        let mut acc = Coeff::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[v];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Maps this polynomial into another context; `var_map[i]` is the index
    /// of our variable `i` in the target context.
    pub fn map_context(&self, target: &Ctx, var_map: &[usize]) -> Polynomial {
        assert_eq!(var_map.len(), self.ctx.len());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut m2 = vec![0u32; target.len()];
                for (v, &e) in m.iter().enumerate() {
                    m2[var_map[v]] = e;
                }
                (m2, c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Support of the polynomial: the set of variables that occur.
    pub fn variables_used(&self) -> Vec<usize> {
        let mut used = vec![false; self.ctx.len()];
        for (m, _) in &self.terms {
            for (v, &e) in m.iter().enumerate() {
                if e > 0 {
                    used[v] = true;
                }
            }
        }
        (0..self.ctx.len()).filter(|&v| used[v]).collect()
    }

    /// Content: gcd of the coefficients, with the sign of the leading one.
    pub fn rational_content(&self) -> Coeff {
        if self.is_zero() {
            return Coeff::zero();
        }
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            num = num_integer::gcd(num, c.numer().clone());
            den = num_integer::lcm(den, c.denom().clone());
        }
        let mut content = BigRational::new(num, den);
        if self.terms[0].1.is_negative() {
            content = -content;
        }
        content
    }

    /// Divides by the rational content; leading coefficient becomes positive.
    pub fn primitive_part(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.rational_content();
        self.scale(&c.recip())
    }

    /// Monic normalization under grevlex.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.clone().recip();
                self.scale(&inv)
            }
        }
    }

    /// Exact division by `d`; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        assert!(self.ctx.same_as(&d.ctx));
        if self.is_zero() {
            return Some(self.clone());
        }
        if d.is_zero() {
            return None;
        }
        let mut rem = self.clone();
        let mut quo_terms: Vec<(Mono, Coeff)> = Vec::new();
        let (dm, dc) = {
            let (m, c) = d.leading_term().unwrap();
            (m.clone(), c.clone())
        };
        while let Some((rm, rc)) = rem.leading_term() {
            if !mono_divides(&dm, rm) {
                return None;
            }
            let qm = mono_div(rm, &dm);
            let qc = rc / &dc;
            rem = rem.sub(&d.mul_term(&qm, &qc));
            quo_terms.push((qm, qc));
        }
        Some(Polynomial::from_terms(&self.ctx, quo_terms))
    }
}
