//! Multivariate gcd via content extraction and a subresultant polynomial
//! remainder sequence on the largest occurring variable. Only needed for
//! rational-function reduction, so simplicity wins over speed.

use super::{Coeff, Polynomial};
use num_traits::One;

/// gcd of the exponents-of-`var` profile: p as a univariate polynomial in
/// `var` with polynomial coefficients (the coefficients keep the full
/// context but have `var`-exponent zero).
fn coeffs_in(p: &Polynomial, var: usize) -> Vec<Polynomial> {
    let deg = p.degree_in(var) as usize;
    let ctx = p.context();
    let mut out = vec![Polynomial::zero(ctx); deg + 1];
    for (m, c) in p.terms() {
        let e = m[var] as usize;
        let mut m2 = m.clone();
        m2[var] = 0;
        out[e] = out[e].add(&Polynomial::from_terms(ctx, vec![(m2, c.clone())]));
    }
    out
}

fn leading_coeff_in(p: &Polynomial, var: usize) -> Polynomial {
    let coeffs = coeffs_in(p, var);
    coeffs.last().unwrap().clone()
}

/// Content of `p` with respect to `var`: gcd of its coefficients.
fn content_in(p: &Polynomial, var: usize) -> Polynomial {
    let coeffs = coeffs_in(p, var);
    let mut acc = Polynomial::zero(p.context());
    for c in coeffs {
        if !c.is_zero() {
            acc = gcd(&acc, &c);
        }
    }
    acc
}

/// Canonical pseudo-remainder: `lc(b)^(δ+1) a = q b + r` with
/// `deg_var r < deg_var b`.
fn pseudo_rem(a: &Polynomial, b: &Polynomial, var: usize) -> Polynomial {
    let db = b.degree_in(var);
    let delta = a.degree_in(var).saturating_sub(db);
    let lb = leading_coeff_in(b, var);
    let mut r = a.clone();
    let mut steps = 0u32;
    while !r.is_zero() && r.degree_in(var) >= db {
        let lr = leading_coeff_in(&r, var);
        let e = r.degree_in(var) - db;
        let mut shift = vec![0u32; a.context().len()];
        shift[var] = e;
        r = r.mul(&lb).sub(&b.mul(&lr).mul_term(&shift, &Coeff::one()));
        steps += 1;
    }
    // pad the multiplier up to lc(b)^(δ+1)
    for _ in steps..(delta + 1) {
        r = r.mul(&lb);
    }
    r
}

/// gcd up to a rational unit; the result is primitive with positive
/// leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    assert!(a.context().same_as(b.context()));
    if a.is_zero() {
        return b.primitive_part();
    }
    if b.is_zero() {
        return a.primitive_part();
    }
    let used: Vec<usize> = {
        let mut u = a.variables_used();
        for v in b.variables_used() {
            if !u.contains(&v) {
                u.push(v);
            }
        }
        u
    };
    let Some(&var) = used.iter().max() else {
        // both constants
        return Polynomial::one(a.context());
    };

    let cont_a = content_in(a, var);
    let cont_b = content_in(b, var);
    let cont_gcd = gcd(&cont_a, &cont_b);
    let pp_a = a.div_exact(&cont_a).expect("content divides");
    let pp_b = b.div_exact(&cont_b).expect("content divides");

    let (mut f, mut g) = if pp_a.degree_in(var) >= pp_b.degree_in(var) {
        (pp_a, pp_b)
    } else {
        (pp_b, pp_a)
    };
    let ctx = a.context().clone();
    let mut h = Polynomial::one(&ctx);
    let mut lead = Polynomial::one(&ctx);
    let pp_gcd = loop {
        if g.degree_in(var) == 0 {
            break Polynomial::one(&ctx);
        }
        let delta = f.degree_in(var) - g.degree_in(var);
        let r = pseudo_rem(&f, &g, var);
        if r.is_zero() {
            let cont = content_in(&g, var);
            break g.div_exact(&cont).expect("content divides");
        }
        let divisor = lead.mul(&h.power(delta));
        f = g;
        g = r.div_exact(&divisor).expect("subresultant division is exact");
        lead = leading_coeff_in(&f, var);
        if delta > 0 {
            h = lead
                .power(delta)
                .div_exact(&h.power(delta - 1))
                .expect("subresultant h-update is exact");
        }
    };
    pp_gcd.mul(&cont_gcd).primitive_part()
}

/// lcm up to a rational unit.
pub fn lcm(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() || b.is_zero() {
        return Polynomial::zero(a.context());
    }
    let g = gcd(a, b);
    a.div_exact(&g)
        .expect("gcd divides")
        .mul(b)
        .primitive_part()
}
