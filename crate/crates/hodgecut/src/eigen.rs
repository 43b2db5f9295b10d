//! Dense symmetric eigensolver: Householder tridiagonalization followed
//! by implicit-shift QL iteration on the tridiagonal form. Eigenvalues
//! only — nothing downstream consumes eigenvectors, and skipping the
//! accumulation keeps the reduction at one pass over the matrix.

use crate::error::{Error, Result};

const MAX_QL_ITERATIONS: usize = 60;

/// All eigenvalues of a symmetric matrix given as a flat row-major
/// `dim * dim` slice, returned in ascending order.
pub(crate) fn symmetric_eigenvalues(matrix: &[f64], dim: usize) -> Result<Vec<f64>> {
    assert_eq!(matrix.len(), dim * dim);
    if dim == 0 {
        return Err(Error::validation("eigendecomposition of empty matrix"));
    }
    if dim == 1 {
        return Ok(vec![matrix[0]]);
    }
    let mut a = matrix.to_vec();
    let (mut d, mut e) = tridiagonalize(&mut a, dim);
    ql_implicit_shift(&mut d, &mut e)?;
    d.sort_by(f64::total_cmp);
    Ok(d)
}

/// Reduces a symmetric matrix to tridiagonal form by a sequence of
/// Householder similarity transforms `A <- H A H`, applied as symmetric
/// rank-2 updates. Returns the diagonal and subdiagonal.
fn tridiagonalize(a: &mut [f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    let idx = |i: usize, j: usize| i * n + j;
    let mut v = vec![0.0; n];
    let mut p = vec![0.0; n];

    for k in 0..n.saturating_sub(2) {
        let mut norm_sq = 0.0;
        for i in k + 1..n {
            norm_sq += a[idx(i, k)] * a[idx(i, k)];
        }
        let mut norm = norm_sq.sqrt();
        if norm == 0.0 {
            continue;
        }
        // Sign chosen to avoid cancellation in the leading component.
        if a[idx(k + 1, k)] < 0.0 {
            norm = -norm;
        }
        for i in 0..=k {
            v[i] = 0.0;
        }
        v[k + 1] = a[idx(k + 1, k)] + norm;
        for i in k + 2..n {
            v[i] = a[idx(i, k)];
        }
        let vtv: f64 = v[k + 1..].iter().map(|x| x * x).sum();
        if vtv == 0.0 {
            continue;
        }
        let beta = 2.0 / vtv;

        // p = beta * A v, then q = p - (beta/2 v^T p) v, A <- A - v q^T - q v^T.
        for i in 0..n {
            let mut sum = 0.0;
            for j in k + 1..n {
                sum += a[idx(i, j)] * v[j];
            }
            p[i] = beta * sum;
        }
        let coeff = 0.5 * beta * v[k + 1..].iter().zip(&p[k + 1..]).map(|(x, y)| x * y).sum::<f64>();
        for i in 0..n {
            p[i] -= coeff * v[i];
        }
        for i in 0..n {
            for j in 0..n {
                a[idx(i, j)] -= v[i] * p[j] + p[i] * v[j];
            }
        }
    }

    let d: Vec<f64> = (0..n).map(|i| a[idx(i, i)]).collect();
    let mut e = vec![0.0; n];
    for i in 1..n {
        e[i] = a[idx(i, i - 1)];
    }
    (d, e)
}

/// Implicit-shift QL iteration on a symmetric tridiagonal matrix
/// (diagonal `d`, subdiagonal `e` with `e[0]` unused). Overwrites `d`
/// with the eigenvalues, unsorted.
fn ql_implicit_shift(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    for l in 0..n {
        let mut iterations = 0;
        loop {
            // Find the first negligible subdiagonal entry at or after l.
            let mut m = l;
            while m + 1 < n {
                let scale = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * scale {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > MAX_QL_ITERATIONS {
                return Err(Error::Numeric(format!(
                    "QL iteration did not converge at row {l}"
                )));
            }

            // Wilkinson-style shift from the top 2x2 block.
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c) = (1.0, 1.0);
            let mut p = 0.0;

            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if i == l {
                    d[l] -= p;
                    e[l] = g;
                    e[m] = 0.0;
                }
            }
        }
    }
    Ok(())
}
