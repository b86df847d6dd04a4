use crate::error::{Error, Result};
use crate::scalar::Field;

/// Solves `A X = B` for square `A` by Gaussian elimination with partial
/// pivoting. `a` is row-major `n x n`, `b` is `n x m`.
pub fn solve<F: Field>(mut a: Vec<Vec<F>>, mut b: Vec<Vec<F>>) -> Result<Vec<Vec<F>>> {
    let n = a.len();
    if a.iter().any(|row| row.len() != n) || b.len() != n {
        return Err(Error::Dimension("solve expects a square system".into()));
    }
    for col in 0..n {
        let pivot = (col..n)
            .filter(|&r| !a[r][col].is_negligible())
            .max_by(|&r, &s| {
                a[r][col].abs().partial_cmp(&a[s][col].abs()).unwrap_or(std::cmp::Ordering::Equal)
            })
            .ok_or_else(|| Error::Numerical(format!("singular system at column {col}")))?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let p = a[col][col].clone();
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone() / p.clone();
            for c in col..n {
                let delta = factor.clone() * a[col][c].clone();
                a[r][c] = a[r][c].clone() - delta;
            }
            for c in 0..b[r].len() {
                let delta = factor.clone() * b[col][c].clone();
                b[r][c] = b[r][c].clone() - delta;
            }
        }
    }
    for (row, pivot) in b.iter_mut().zip(a.iter().enumerate().map(|(i, r)| r[i].clone())) {
        for v in row.iter_mut() {
            *v = v.clone() / pivot.clone();
        }
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn exact_and_float_agree() {
        let a: Vec<Vec<f64>> = vec![vec![0.0, 2.0, 1.0], vec![1.0, 1.0, 0.0], vec![3.0, 0.0, 1.0]];
        let b: Vec<Vec<f64>> = vec![vec![3.0], vec![2.0], vec![4.0]];
        let x = solve(a.clone(), b.clone()).unwrap();
        for (xi, e) in x.iter().zip([1.0, 1.0, 1.0]) {
            assert!((xi[0] - e).abs() < 1e-12);
        }
        let conv = |m: &Vec<Vec<f64>>| -> Vec<Vec<BigRational>> {
            m.iter().map(|r| r.iter().map(|&v| BigRational::from_float(v).unwrap()).collect()).collect()
        };
        let xq = solve(conv(&a), conv(&b)).unwrap();
        assert!(xq.iter().all(|r| r[0] == BigRational::from_float(1.0).unwrap()));
    }

    #[test]
    fn singular() {
        let a = vec![vec![1.0, 2.0], vec![2.0, 4.0]];
        assert!(solve(a, vec![vec![1.0], vec![2.0]]).is_err());
    }
}
