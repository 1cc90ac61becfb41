//! Polynomial solutions of `P(µ(x)) = λ²·P(x)` for affine `µ`.

use crate::algebra::linalg::nullspace;
use crate::algebra::{Mobius, Scalar, UniPoly};

use super::HeisenbergError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimSolution<F> {
    /// Monic basis of the solution space.
    pub basis: Vec<UniPoly<F>>,
    pub dimension: usize,
    pub max_degree_searched: usize,
}

/// Solve `P∘µ = λ²P` over polynomials of degree at most `max_deg` by an
/// exact nullspace computation on coefficient vectors.
pub fn claim_solve<F: Scalar>(mu: &Mobius<F>, lambda_sq: &F, max_deg: usize) -> Result<ClaimSolution<F>, HeisenbergError> {
    let (s, t) = mu.as_affine().ok_or(HeisenbergError::NotAffine)?;
    if lambda_sq.is_zero() || lambda_sq.is_one() {
        return Err(HeisenbergError::Domain("lambda^2 must not be 0 or 1".into()));
    }
    if max_deg == 0 {
        return Err(HeisenbergError::Domain("max_deg must be at least 1".into()));
    }
    let mu_poly = UniPoly::linear(s, t);
    // column j holds the coefficients of µ(x)^j − λ² x^j
    let columns: Vec<Vec<F>> = (0..=max_deg)
        .map(|j| {
            let image = mu_poly.pow(j as u32);
            let diff = &image - &UniPoly::monomial(lambda_sq.clone(), j);
            (0..=max_deg).map(|i| diff.coeff(i)).collect()
        })
        .collect();
    let matrix: Vec<Vec<F>> = (0..=max_deg)
        .map(|i| columns.iter().map(|c| c[i].clone()).collect())
        .collect();
    let mut basis: Vec<UniPoly<F>> = nullspace(&matrix, max_deg + 1)
        .into_iter()
        .map(|v| UniPoly::from_coeffs(v).monic())
        .collect();
    basis.sort_by_key(|p| p.degree());
    Ok(ClaimSolution {
        dimension: basis.len(),
        basis,
        max_degree_searched: max_deg,
    })
}

/// Whether `p(µ(x)) = λ²·p(x)` holds exactly.
pub fn satisfies_claim<F: Scalar>(p: &UniPoly<F>, mu: &Mobius<F>, lambda_sq: &F) -> bool {
    let Some((s, t)) = mu.as_affine() else {
        return false;
    };
    p.compose(&UniPoly::linear(s, t)) == p.scale(lambda_sq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GaussRational;

    type G = GaussRational;

    fn g(n: i64) -> G {
        G::from(n)
    }

    fn mu(a: i64, b: i64) -> Mobius<G> {
        Mobius::affine(g(a), g(b)).unwrap()
    }

    #[test]
    fn three_cases() {
        for max_deg in [2, 4, 6] {
            let one = claim_solve(&mu(2, 3), &g(2), max_deg).unwrap();
            assert_eq!(one.basis, vec![UniPoly::linear(g(1), g(3))]);
            let two = claim_solve(&mu(-2, 3), &g(4), max_deg).unwrap();
            assert_eq!(two.basis, vec![UniPoly::linear(g(1), g(-1)).pow(2)]);
            let none = claim_solve(&mu(1, 1), &g(2), max_deg).unwrap();
            assert_eq!(none.dimension, 0);
            for (m, l, sol) in [(mu(2, 3), g(2), one), (mu(-2, 3), g(4), two)] {
                assert!(sol.basis.iter().all(|p| satisfies_claim(p, &m, &l)));
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        let inv = Mobius::new(g(0), g(1), g(1), g(0)).unwrap();
        assert!(matches!(claim_solve(&inv, &g(2), 3), Err(HeisenbergError::NotAffine)));
        assert!(matches!(claim_solve(&mu(2, 3), &g(1), 3), Err(HeisenbergError::Domain(_))));
    }
}
