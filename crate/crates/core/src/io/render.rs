//! Canonical text for scalars, polynomials, rational functions and maps.
//!
//! Output is accepted by the parser and denotes the same object; terms
//! appear in descending lexicographic order, so equal objects print
//! identically.

use num_traits::{One, Signed, Zero};

use crate::algebra::{GaussRational, RatFunc, SparsePoly, UniPoly};
use crate::birmap::{BiRatFunc, BirMap, ProjMap};

/// `Some(true)` for a negative real or negative imaginary scalar,
/// `Some(false)` for a positive one, `None` when both parts are nonzero.
fn sign_of(c: &GaussRational) -> Option<bool> {
    let (re, im) = (c.re(), c.im());
    match (re.is_zero(), im.is_zero()) {
        (_, true) => Some(re.is_negative()),
        (true, false) => Some(im.is_negative()),
        (false, false) => None,
    }
}

fn monomial(exp: &[u32], names: &[&str]) -> String {
    let parts: Vec<String> = exp
        .iter()
        .zip(names)
        .filter(|(e, _)| **e > 0)
        .map(|(e, n)| if *e == 1 { n.to_string() } else { format!("{n}^{e}") })
        .collect();
    parts.join("*")
}

/// A sparse polynomial with the given variable names.
pub fn render_poly<const N: usize>(p: &SparsePoly<GaussRational, N>, names: &[&str; N]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let single = p.len() == 1;
    let mut out = String::new();
    for (k, (exp, c)) in p.terms().iter().enumerate() {
        let mono = monomial(exp, names);
        let (negative, body) = match sign_of(c) {
            Some(neg) => {
                let mag = if neg { -c.clone() } else { c.clone() };
                let body = match (mono.is_empty(), mag.is_one()) {
                    (true, _) => mag.to_string(),
                    (false, true) => mono,
                    (false, false) => format!("{mag}*{mono}"),
                };
                (neg, body)
            }
            None => {
                let body = match (mono.is_empty(), single) {
                    (true, true) => c.to_string(),
                    (true, false) => format!("({c})"),
                    (false, _) => format!("({c})*{mono}"),
                };
                (false, body)
            }
        };
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

fn render_quotient<const N: usize>(
    num: &SparsePoly<GaussRational, N>,
    den: &SparsePoly<GaussRational, N>,
    names: &[&str; N],
) -> String {
    let top = render_poly(num, names);
    if den.is_one() {
        return top;
    }
    let top = if num.len() > 1 { format!("({top})") } else { top };
    let single_power = den.len() == 1
        && den.terms()[0].1.is_one()
        && den.terms()[0].0.iter().filter(|e| **e > 0).count() == 1;
    let bottom = render_poly(den, names);
    if single_power {
        format!("{top}/{bottom}")
    } else {
        format!("{top}/({bottom})")
    }
}

/// A rational function of `x, y`.
pub fn render_birat(r: &BiRatFunc<GaussRational>) -> String {
    render_quotient(r.num(), r.den(), &["x", "y"])
}

fn univariate(p: &UniPoly<GaussRational>) -> SparsePoly<GaussRational, 1> {
    SparsePoly::from_terms(
        p.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| ([k as u32], c.clone())),
    )
}

/// A univariate polynomial in the named variable.
pub fn render_unipoly(p: &UniPoly<GaussRational>, var: &str) -> String {
    render_poly(&univariate(p), &[var])
}

/// A univariate rational function in the named variable.
pub fn render_ratfunc(r: &RatFunc<GaussRational>, var: &str) -> String {
    render_quotient(&univariate(r.num()), &univariate(r.den()), &[var])
}

pub fn render_proj(p: &ProjMap<GaussRational>) -> String {
    let parts: Vec<String> = p
        .components()
        .iter()
        .map(|c| render_poly(c.poly(), &["x", "y", "z"]))
        .collect();
    format!("[{}]", parts.join(" : "))
}

/// De Jonquières maps print as affine pairs, others as reduced triples.
pub fn render_map(m: &BirMap<GaussRational>) -> String {
    match m {
        BirMap::Jonq(j) => {
            let (fx, fy) = j.to_affine();
            format!("({}, {})", render_birat(&fx), render_birat(&fy))
        }
        BirMap::Proj(p) => render_proj(p),
    }
}

/// Affine form of any map whose image of the chart `z ≠ 0` is affine.
pub fn render_affine(m: &BirMap<GaussRational>) -> Option<String> {
    let (fx, fy) = match m {
        BirMap::Jonq(j) => j.to_affine(),
        BirMap::Proj(p) => p.to_affine().ok()?,
    };
    Some(format!("({}, {})", render_birat(&fx), render_birat(&fy)))
}

#[cfg(test)]
mod tests {
    use super::*;

    type G = GaussRational;
    type P = SparsePoly<G, 2>;

    fn term(c: G, e: [u32; 2]) -> P {
        P::monomial(c, e)
    }

    #[test]
    fn coefficients() {
        let names = ["x", "y"];
        let p = &term(G::from(1), [1, 0]) + &term(G::from(1), [0, 2]);
        assert_eq!(render_poly(&p, &names), "x + y^2");
        assert_eq!(render_poly(&term(G::from(2), [1, 1]), &names), "2*x*y");
        assert_eq!(render_poly(&term(G::ratio(3, 2), [0, 1]), &names), "3/2*y");
        assert_eq!(render_poly(&term(G::from_fractions(1, 1, 2, 1), [1, 0]), &names), "(1 + 2*i)*x");
        assert_eq!(render_poly(&term(G::i(), [1, 0]), &names), "i*x");
        let q = &term(G::from(1), [1, 0]) - &term(G::from(1), [0, 0]);
        assert_eq!(render_poly(&q, &names), "x - 1");
        assert_eq!(render_poly(&(-&q), &names), "-x + 1");
        assert_eq!(render_poly(&P::constant(G::from_fractions(1, 1, -1, 2)), &names), "1 - 1/2*i");
    }

    #[test]
    fn quotients() {
        let x = BiRatFunc::<G>::var(0);
        let y = BiRatFunc::<G>::var(1);
        assert_eq!(render_birat(&y.checked_div(&x).unwrap()), "y/x");
        let s = &x + &y;
        assert_eq!(render_birat(&s.checked_div(&(&x * &y)).unwrap()), "(x + y)/(x*y)");
        assert_eq!(render_birat(&x.pow(-2).unwrap()), "1/x^2");
    }
}
