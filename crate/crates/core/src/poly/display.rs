//! Canonical printing: explicit `*` and `^`, terms in descending grevlex
//! order. Parsing the printed form reproduces the polynomial exactly.

use super::{mono_is_one, Coeff, Mono, Polynomial, RationalFunction};
use num_traits::{One, Signed};
use std::fmt;

pub(crate) fn format_coeff(c: &Coeff) -> String {
    if c.denom().is_one() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn format_mono(p: &Polynomial, m: &Mono) -> String {
    let mut parts = Vec::new();
    for (v, &e) in m.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(p.context().name(v).to_string()),
            _ => parts.push(format!("{}^{}", p.context().name(v), e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms().iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if mono_is_one(m) {
                out.push_str(&format_coeff(&abs));
            } else {
                let mono = format_mono(self, m);
                if abs.is_one() {
                    out.push_str(&mono);
                } else {
                    out.push_str(&format_coeff(&abs));
                    out.push('*');
                    out.push_str(&mono);
                }
            }
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator().is_one() {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "({}) / ({})", self.numerator(), self.denominator())
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
