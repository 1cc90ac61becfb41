//! Greatest common divisors of bivariate and homogeneous trivariate
//! polynomials.
//!
//! Bivariate gcds use the primitive polynomial remainder sequence over
//! `F[x][y]`, recursing to univariate gcds for contents.  Homogeneous gcds
//! split off monomial factors, try a modular coprimality certificate, and
//! only then dehomogenize and fall back to the exact bivariate gcd.


use super::modp::{PointStream, PrimeField, CERTIFICATE_PRIMES};
use super::multipoly::{BiPoly, Exponent};
use super::scalar::Scalar;
use super::trihom::TriHomPoly;
use super::unipoly::UniPoly;
use super::AlgebraError;

type Recursive<F> = Vec<UniPoly<F>>;

/// Coefficients of powers of `y`, each a polynomial in `x`.
fn to_recursive<F: Scalar>(p: &BiPoly<F>) -> Recursive<F> {
    let dy = p.degree_in(1).unwrap_or(0) as usize;
    let dx = p.degree_in(0).unwrap_or(0) as usize;
    let mut rows: Vec<Vec<F>> = vec![vec![F::zero(); dx + 1]; dy + 1];
    for (e, c) in p.terms() {
        rows[e[1] as usize][e[0] as usize] = c.clone();
    }
    let mut out: Recursive<F> = rows.into_iter().map(UniPoly::from_coeffs).collect();
    trim(&mut out);
    out
}

fn from_recursive<F: Scalar>(r: &[UniPoly<F>]) -> BiPoly<F> {
    BiPoly::from_terms(r.iter().enumerate().flat_map(|(j, cx)| {
        cx.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| ([i as u32, j as u32], c.clone()))
    }))
}

fn trim<F: Scalar>(r: &mut Recursive<F>) {
    while r.last().is_some_and(|c| c.is_zero()) {
        r.pop();
    }
}

fn content<F: Scalar>(r: &[UniPoly<F>]) -> UniPoly<F> {
    let mut g = UniPoly::zero();
    for c in r.iter().filter(|c| !c.is_zero()) {
        g = if g.is_zero() { c.monic() } else { g.gcd(c).expect("nonzero") };
        if g.is_one() {
            break;
        }
    }
    g
}

fn div_content<F: Scalar>(r: &[UniPoly<F>], c: &UniPoly<F>) -> Recursive<F> {
    r.iter()
        .map(|p| p.exact_div(c).expect("content divides every coefficient"))
        .collect()
}

fn primitive_part<F: Scalar>(r: &[UniPoly<F>]) -> Recursive<F> {
    let c = content(r);
    let mut out = div_content(r, &c);
    // Fix the scalar: leading coefficient of the leading x-polynomial is one.
    if let Some(lc) = out.last().and_then(|p| p.lc()).cloned() {
        let inv = lc.inv().expect("nonzero");
        for p in out.iter_mut() {
            *p = p.scale(&inv);
        }
    }
    out
}

/// A multiple of the remainder of `a` by `b` in `F[x][y]`.
fn pseudo_rem<F: Scalar>(a: &[UniPoly<F>], b: &[UniPoly<F>]) -> Recursive<F> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Recursive<F> = a.to_vec();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for p in r.iter_mut() {
            *p = &*p * lb;
        }
        for (k, bk) in b.iter().enumerate() {
            let t = bk * &lr;
            r[shift + k] = &r[shift + k] - &t;
        }
        debug_assert!(r[dr].is_zero());
        r.pop();
        trim(&mut r);
        // keep x-coefficients small
        if !r.is_empty() {
            let c = content(&r);
            if !c.is_one() {
                r = div_content(&r, &c);
            }
        }
    }
    r
}

/// Normalized gcd of two bivariate polynomials.
pub fn gcd_bivariate<F: Scalar>(a: &BiPoly<F>, b: &BiPoly<F>) -> Result<BiPoly<F>, AlgebraError> {
    if a.is_zero() && b.is_zero() {
        return Err(AlgebraError::ZeroInput("gcd"));
    }
    if a.is_zero() {
        return Ok(b.monic());
    }
    if b.is_zero() {
        return Ok(a.monic());
    }
    if a.is_constant() || b.is_constant() {
        return Ok(BiPoly::one());
    }
    let ra = to_recursive(a);
    let rb = to_recursive(b);
    let c = content(&ra).gcd(&content(&rb))?;
    let mut p = primitive_part(&ra);
    let mut q = primitive_part(&rb);
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    let g: Recursive<F> = loop {
        if q.len() <= 1 {
            // q has no y; being primitive it is a unit
            break if q.is_empty() { p } else { vec![UniPoly::one()] };
        }
        let r = pseudo_rem(&p, &q);
        if r.is_empty() {
            break q;
        }
        if r.len() == 1 {
            break vec![UniPoly::one()];
        }
        p = q;
        q = primitive_part(&r);
    };
    let g = primitive_part(&g);
    let out: Recursive<F> = g.iter().map(|cx| cx * &c).collect();
    Ok(from_recursive(&out).monic())
}

/// Modular proof that two forms without monomial factors are coprime.
///
/// Restricts both forms to a line through a coordinate vertex where the
/// first form does not vanish; a nonconstant common factor would survive
/// reduction modulo `p` with its full degree on that line.  `false` means
/// "not proven", never "not coprime".
pub fn certify_coprime<F: Scalar>(a: &TriHomPoly<F>, b: &TriHomPoly<F>) -> bool {
    for (attempt, &p) in CERTIFICATE_PRIMES.iter().take(2).enumerate() {
        let field = PrimeField::new(p);
        let Some(ra) = residues(a, &field) else { continue };
        let Some(rb) = residues(b, &field) else { continue };
        for (anchor, other, da) in [(&ra, &rb, a.degree()), (&rb, &ra, b.degree())] {
            let Some(axis) = (0..3).find(|&k| {
                let mut e = [0u32; 3];
                e[k] = da;
                anchor.iter().any(|(ex, c)| *ex == e && *c != 0)
            }) else {
                continue;
            };
            let mut stream = PointStream::new(0x5eed + attempt as u64 * 7919 + axis as u64);
            let point: [u64; 3] = std::array::from_fn(|k| {
                if k == axis {
                    0
                } else {
                    1 + stream.next_below(p - 1)
                }
            });
            let ua = restrict(anchor, axis, &point, &field);
            let ub = restrict(other, axis, &point, &field);
            if field.poly_gcd_degree(&ua, &ub) == Some(0) {
                return true;
            }
        }
    }
    false
}

fn residues<F: Scalar>(a: &TriHomPoly<F>, field: &PrimeField) -> Option<Vec<(Exponent<3>, u64)>> {
    a.terms()
        .iter()
        .map(|(e, c)| c.to_residue(field).map(|r| (*e, r)))
        .collect()
}

fn restrict(terms: &[(Exponent<3>, u64)], axis: usize, point: &[u64; 3], field: &PrimeField) -> Vec<u64> {
    let deg = terms.iter().map(|(e, _)| e[axis]).max().unwrap_or(0) as usize;
    let mut out = vec![0u64; deg + 1];
    for (e, c) in terms {
        let mut v = *c;
        for k in 0..3 {
            if k != axis && e[k] > 0 {
                v = field.mul(v, field.pow(point[k], e[k] as u64));
            }
        }
        let slot = &mut out[e[axis] as usize];
        *slot = field.add(*slot, v);
    }
    out
}

fn min_exponent(a: &Exponent<3>, b: &Exponent<3>) -> Exponent<3> {
    [a[0].min(b[0]), a[1].min(b[1]), a[2].min(b[2])]
}

/// Normalized gcd of two homogeneous forms.
pub fn gcd_forms<F: Scalar>(a: &TriHomPoly<F>, b: &TriHomPoly<F>) -> Result<TriHomPoly<F>, AlgebraError> {
    if a.is_zero() && b.is_zero() {
        return Err(AlgebraError::ZeroInput("gcd"));
    }
    if a.is_zero() {
        return Ok(b.monic());
    }
    if b.is_zero() {
        return Ok(a.monic());
    }
    let (ma, mb) = (a.monomial_content(), b.monomial_content());
    let m = min_exponent(&ma, &mb);
    let monomial = TriHomPoly::monomial(F::one(), m);
    let a1 = a.div_monomial(&ma);
    let b1 = b.div_monomial(&mb);
    if a1.is_monomial() || b1.is_monomial() || certify_coprime(&a1, &b1) {
        return Ok(monomial);
    }
    // Neither a1 nor b1 is divisible by z, so dehomogenizing keeps degrees.
    let g = gcd_bivariate(&a1.dehomogenize(), &b1.dehomogenize())?;
    let gd = g.total_degree().unwrap_or(0);
    let g = TriHomPoly::homogenize(&g, gd)?;
    Ok((&g * &monomial).monic())
}

/// Normalized gcd of a family of forms; zero forms are ignored.
pub fn gcd_forms_many<F: Scalar>(forms: &[TriHomPoly<F>]) -> Result<TriHomPoly<F>, AlgebraError> {
    let nonzero: Vec<&TriHomPoly<F>> = forms.iter().filter(|f| !f.is_zero()).collect();
    let Some(first) = nonzero.first() else {
        return Err(AlgebraError::ZeroInput("gcd"));
    };
    let m = nonzero
        .iter()
        .fold(first.monomial_content(), |acc, f| min_exponent(&acc, &f.monomial_content()));
    let monomial = TriHomPoly::monomial(F::one(), m);
    let reduced: Vec<TriHomPoly<F>> = nonzero
        .iter()
        .map(|f| f.div_monomial(&f.monomial_content()))
        .collect();
    if reduced.iter().any(|f| f.is_monomial()) {
        return Ok(monomial);
    }
    // Cheapest pairs first.
    let mut order: Vec<usize> = (0..reduced.len()).collect();
    order.sort_by_key(|&i| reduced[i].len());
    for (ix, &i) in order.iter().enumerate() {
        for &j in &order[ix + 1..] {
            if certify_coprime(&reduced[i], &reduced[j]) {
                return Ok(monomial);
            }
        }
    }
    let mut g = reduced[order[0]].monic();
    for &i in &order[1..] {
        if g.degree() == 0 {
            break;
        }
        g = gcd_forms(&g, &reduced[i])?;
    }
    Ok((&g * &monomial).monic())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::algebra::multipoly::SparsePoly;
    use crate::algebra::GaussRational;
    use proptest::prelude::*;

    type T = TriHomPoly<GaussRational>;
    type B = BiPoly<GaussRational>;

    fn x() -> T {
        T::var(0)
    }
    fn y() -> T {
        T::var(1)
    }
    fn z() -> T {
        T::var(2)
    }

    #[test]
    fn monomial_gcd_by_exponent_minima() {
        let a = &x() * &z().pow(3);
        let b = z().pow(4);
        assert_eq!(gcd_forms(&a, &b).unwrap(), z().pow(3));
    }

    #[test]
    fn unit_gcd() {
        let a = &(&x() * &x()) + &(&y() * &z());
        assert_eq!(gcd_forms(&a, &T::constant(GaussRational::one())).unwrap(), T::constant(GaussRational::one()));
    }

    #[test]
    fn both_zero_rejected() {
        assert!(gcd_forms(&T::zero(2), &T::zero(2)).is_err());
    }

    #[test]
    fn nonmonomial_common_factor_found() {
        let l = &x() + &(&y() + &z());
        let a = &l * &(&x() - &y());
        let b = &l * &(&(&x() * &z()) + &(&y() * &y()));
        let g = gcd_forms(&a, &b).unwrap();
        assert_eq!(g, l.monic());
        assert!(!certify_coprime(&a, &b));
    }

    #[test]
    fn bivariate_gcd_with_x_content() {
        let xb = B::var(0);
        let yb = B::var(1);
        let c = &xb + &B::one();
        let a = &(&c * &c) * &(&yb - &xb);
        let b = &c * &(&(&yb * &yb) + &B::one());
        let g = gcd_bivariate(&a, &b).unwrap();
        assert_eq!(g, c.monic());
    }

    fn bipoly() -> impl Strategy<Value = B> {
        prop::collection::vec(((0u32..3, 0u32..3), -3i64..=3), 1..5).prop_map(|terms| {
            SparsePoly::from_terms(terms.into_iter().map(|((i, j), c)| ([i, j], GaussRational::from(c))))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn bivariate_gcd_divides_and_cofactors_coprime(a in bipoly(), b in bipoly(), c in bipoly()) {
            prop_assume!(!c.is_zero());
            let a = &a * &c;
            let b = &b * &c;
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let g = gcd_bivariate(&a, &b).unwrap();
            let a1 = a.exact_div(&g).unwrap();
            let b1 = b.exact_div(&g).unwrap();
            if !(a1.is_zero() && b1.is_zero()) {
                prop_assert!(gcd_bivariate(&a1, &b1).unwrap().is_constant());
            }
            // c divides both, so it divides the gcd
            prop_assert!(g.exact_div(&c).is_ok());
        }

        #[test]
        fn form_gcd_divides_both(a in bipoly(), b in bipoly(), c in bipoly()) {
            prop_assume!(!c.is_zero() && !a.is_zero() && !b.is_zero());
            let (a, b) = (&a * &c, &b * &c);
            let ha = T::homogenize(&a, a.total_degree().unwrap() + 1).unwrap();
            let hb = T::homogenize(&b, b.total_degree().unwrap()).unwrap();
            let g = gcd_forms(&ha, &hb).unwrap();
            let a1 = ha.exact_div(&g).unwrap();
            let b1 = hb.exact_div(&g).unwrap();
            prop_assert_eq!(gcd_forms(&a1, &b1).unwrap().degree(), 0);
            let hc = T::homogenize(&c, c.total_degree().unwrap()).unwrap();
            prop_assert!(g.exact_div(&hc).is_ok());
        }
    }
}
