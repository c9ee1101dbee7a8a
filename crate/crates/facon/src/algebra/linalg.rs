//! Exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::{AlgebraError, Rational};

/// Exact rank of a rectangular rational matrix by fraction-free (Bareiss)
/// elimination. Rows are first scaled to integers; scaling does not change
/// the rank.
pub fn rank_exact(matrix: &[Vec<Rational>]) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    debug_assert!(matrix.iter().all(|r| r.len() == cols));
    if cols == 0 {
        return 0;
    }

    let mut m: Vec<Vec<BigInt>> = matrix.iter().map(|row| clear_denominators(row)).collect();

    let mut rank = 0usize;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let num = &m[rank][col] * &m[i][j] - &m[i][col] * &m[rank][j];
                // Bareiss: division by the previous pivot is exact.
                m[i][j] = num / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for r in row {
        lcm = lcm.lcm(r.denom());
    }
    row.iter().map(|r| r.numer() * (&lcm / r.denom())).collect()
}

/// Basis of the right kernel `{v : M v = 0}` of a rational matrix with
/// `cols` columns, by reduced row echelon form. The basis is the canonical
/// one: each vector has a 1 at its free column and 0 at every other free
/// column, listed in ascending free-column order.
pub fn nullspace(matrix: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    // (pivot column, normalized row), kept mutually reduced.
    let mut rref: Vec<(usize, Vec<Rational>)> = Vec::new();

    for row in matrix {
        debug_assert_eq!(row.len(), cols);
        let mut r = row.clone();
        for (pc, base) in &rref {
            if !r[*pc].is_zero() {
                let factor = r[*pc].clone();
                for j in 0..cols {
                    let delta = &factor * &base[j];
                    r[j] -= delta;
                }
            }
        }
        let Some(lead) = (0..cols).find(|&j| !r[j].is_zero()) else {
            continue;
        };
        let inv = r[lead].recip();
        for x in r.iter_mut() {
            *x *= &inv;
        }
        for (_, base) in rref.iter_mut() {
            if !base[lead].is_zero() {
                let factor = base[lead].clone();
                for j in 0..cols {
                    let delta = &factor * &r[j];
                    base[j] -= delta;
                }
            }
        }
        let pos = rref.partition_point(|(pc, _)| *pc < lead);
        rref.insert(pos, (lead, r));
    }

    let pivot_cols: Vec<usize> = rref.iter().map(|(pc, _)| *pc).collect();
    let mut basis = Vec::new();
    for f in 0..cols {
        if pivot_cols.contains(&f) {
            continue;
        }
        let mut v = vec![Rational::zero(); cols];
        v[f] = Rational::one();
        for (pc, base) in &rref {
            v[*pc] = -base[f].clone();
        }
        basis.push(v);
    }
    basis
}

/// Divide an integer vector by the gcd of the absolute values of its
/// entries. Preserves signs; the result has entry gcd 1.
pub fn primitive_vector(v: &[i64]) -> Result<Vec<i64>, AlgebraError> {
    let mut g: i64 = 0;
    for &x in v {
        g = g.gcd(&x);
    }
    if g == 0 {
        return Err(AlgebraError::ZeroVector);
    }
    Ok(v.iter().map(|&x| x / g).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    /// Independent oracle: plain rational Gaussian elimination. Kept apart
    /// from the Bareiss path on purpose.
    fn rank_rational_gauss(matrix: &[Vec<Rational>]) -> usize {
        let mut m: Vec<Vec<Rational>> = matrix.to_vec();
        let rows = m.len();
        if rows == 0 {
            return 0;
        }
        let cols = m[0].len();
        let mut rank = 0;
        for col in 0..cols {
            let Some(p) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let inv = m[rank][col].recip();
            for x in m[rank][col..].iter_mut() {
                *x *= &inv;
            }
            let pivot_row = m[rank].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i != rank && !row[col].is_zero() {
                    let f = row[col].clone();
                    for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                        let delta = &f * p;
                        *x -= delta;
                    }
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_exact(&mat(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])), 3);
        assert_eq!(rank_exact(&mat(&[&[0, 0, 0], &[0, 0, 0]])), 0);
        assert_eq!(rank_exact(&mat(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn rank_matches_rational_gauss_oracle() {
        let mut rng = SplitMix64::for_task(0, "rank-oracle");
        for rows in 1..=6usize {
            for cols in 1..=6usize {
                for _ in 0..40 {
                    let m: Vec<Vec<Rational>> = (0..rows)
                        .map(|_| (0..cols).map(|_| q(rng.range_i64(-9, 9))).collect())
                        .collect();
                    assert_eq!(rank_exact(&m), rank_rational_gauss(&m), "matrix {m:?}");
                }
            }
        }
    }

    #[test]
    fn rank_with_rational_entries() {
        let m = vec![
            vec![Rational::new(1.into(), 2.into()), q(1)],
            vec![Rational::new(1.into(), 4.into()), Rational::new(1.into(), 2.into())],
        ];
        assert_eq!(rank_exact(&m), 1);
    }

    #[test]
    fn nullspace_of_plane_constraints() {
        // x + y + z = 0, x - z = 0 over 3 columns.
        let m = mat(&[&[1, 1, 1], &[1, 0, -1]]);
        let basis = nullspace(&m, 3);
        assert_eq!(basis.len(), 1);
        for row in &m {
            let dot: Rational =
                row.iter().zip(&basis[0]).map(|(a, b)| a * b).fold(q(0), |s, t| s + t);
            assert!(dot == q(0));
        }
    }

    #[test]
    fn nullspace_dimension_counts() {
        // Rank-1 matrix with 4 columns: kernel has dimension 3.
        let m = mat(&[&[1, 2, 3, 4], &[2, 4, 6, 8]]);
        let basis = nullspace(&m, 4);
        assert_eq!(basis.len(), 3);
        // Zero matrix: full kernel.
        assert_eq!(nullspace(&mat(&[&[0, 0]]), 2).len(), 2);
    }

    #[test]
    fn primitive_vector_examples() {
        assert_eq!(primitive_vector(&[-2, 2]).unwrap(), vec![-1, 1]);
        assert_eq!(primitive_vector(&[3, -6, 9]).unwrap(), vec![1, -2, 3]);
        assert_eq!(primitive_vector(&[1, -1]).unwrap(), vec![1, -1]);
        assert!(matches!(primitive_vector(&[0, 0]), Err(AlgebraError::ZeroVector)));
    }
}
