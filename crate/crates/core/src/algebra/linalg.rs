//! Dense exact linear algebra, just enough for small functional equations.

use super::scalar::Scalar;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Scalar>(rows: &mut [Vec<F>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("nonzero pivot");
        for v in rows[r].iter_mut() {
            *v = v.mul_ref(&inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= factor.mul_ref(p);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Basis of `{v : M v = 0}` for an `m × n` matrix, one vector per free
/// column with that column's entry set to one.
pub fn nullspace<F: Scalar>(matrix: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut rows: Vec<Vec<F>> = matrix.to_vec();
    let pivots = rref(&mut rows);
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![F::zero(); ncols];
            v[free] = F::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[r][free].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::algebra::GaussRational;

    fn g(n: i64) -> GaussRational {
        GaussRational::from(n)
    }

    #[test]
    fn kernel_of_rank_one_matrix() {
        let m = vec![vec![g(1), g(2), g(3)], vec![g(2), g(4), g(6)]];
        let ker = nullspace(&m, 3);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            for row in &m {
                let dot = row.iter().zip(v).fold(g(0), |acc, (a, b)| acc + a.mul_ref(b));
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        let m = vec![vec![g(1), g(1)], vec![g(1), g(-1)]];
        assert!(nullspace(&m, 2).is_empty());
    }
}
