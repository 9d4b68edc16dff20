//! Dense real symmetric eigensolver.
//!
//! Householder reduction to tridiagonal form followed by the implicit QL
//! iteration with Wilkinson-style shifts (the classic `tred2`/`tql2` pair).
//! Single threaded and deterministic.

use crate::error::{Error, Result};

/// Largest dimension accepted by the solver.
pub const MAX_DIM: usize = 2000;

#[derive(Clone, Debug, PartialEq)]
pub struct DenseSymMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl DenseSymMatrix {
    pub fn zeros(dim: usize) -> Self {
        DenseSymMatrix { dim, data: vec![0.0; dim * dim] }
    }

    /// Builds from row-major entries; rejects anything not exactly symmetric.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        let mut m = Self::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::ParameterRange(format!("row {i} has length {}, expected {dim}", row.len())));
            }
            for (j, &x) in row.iter().enumerate() {
                m.data[i * dim + j] = x;
            }
        }
        for i in 0..dim {
            for j in 0..i {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::ParameterRange(format!("entry ({i},{j}) breaks symmetry")));
                }
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    #[inline]
    pub fn set_sym(&mut self, i: usize, j: usize, x: f64) {
        self.data[i * self.dim + j] = x;
        self.data[j * self.dim + i] = x;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.dim).map(|i| self.row(i).iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max)
    }

    pub fn principal_submatrix(&self, keep: &[usize]) -> DenseSymMatrix {
        let mut out = Self::zeros(keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                out.data[a * keep.len() + b] = self.get(i, j);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        (0..self.dim).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    fn check(&self) -> Result<()> {
        if self.dim > MAX_DIM {
            return Err(Error::CapExceeded { what: "eigensolver", n: self.dim, cap: MAX_DIM });
        }
        if self.data.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(())
    }
}

/// Eigenvalues in descending order, with unit eigenvectors when requested
/// (`vectors[k]` pairs with `values[k]`).
#[derive(Clone, Debug)]
pub struct Eigen {
    pub values: Vec<f64>,
    pub vectors: Option<Vec<Vec<f64>>>,
}

pub fn eigenvalues(m: &DenseSymMatrix) -> Result<Vec<f64>> {
    Ok(decompose(m, false)?.values)
}

pub fn eigen(m: &DenseSymMatrix) -> Result<Eigen> {
    decompose(m, true)
}

/// Largest eigenvalue.
pub fn spectral_radius(m: &DenseSymMatrix) -> Result<f64> {
    if m.dim() == 0 {
        return Err(Error::ParameterRange("spectral radius of a 0x0 matrix".into()));
    }
    Ok(eigenvalues(m)?[0])
}

fn decompose(m: &DenseSymMatrix, want_vectors: bool) -> Result<Eigen> {
    m.check()?;
    let n = m.dim();
    if n == 0 {
        return Ok(Eigen { values: Vec::new(), vectors: want_vectors.then(Vec::new) });
    }
    let mut v: Vec<Vec<f64>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tridiagonalize(&mut v, &mut d, &mut e, want_vectors);
    tql2(&mut v, &mut d, &mut e, want_vectors);

    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| d[b].total_cmp(&d[a]));
    let values = idx.iter().map(|&k| d[k]).collect();
    let vectors = want_vectors.then(|| idx.iter().map(|&k| (0..n).map(|r| v[r][k]).collect()).collect());
    Ok(Eigen { values, vectors })
}

/// Householder reduction. On return `d` holds the diagonal and `e[1..]` the
/// subdiagonal; `v` holds the accumulated transform when `accumulate` is set.
fn tridiagonalize(v: &mut [Vec<f64>], d: &mut [f64], e: &mut [f64], accumulate: bool) {
    let n = d.len();
    d.copy_from_slice(&v[n - 1]);

    for i in (1..n).rev() {
        let scale: f64 = d[..i].iter().map(|x| x.abs()).sum();
        let mut h = 0.0;
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[i - 1][j];
                v[i][j] = 0.0;
                v[j][i] = 0.0;
            }
        } else {
            for x in &mut d[..i] {
                *x /= scale;
                h += *x * *x;
            }
            let mut f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            e[..i].fill(0.0);

            for j in 0..i {
                f = d[j];
                v[j][i] = f;
                g = e[j] + v[j][j] * f;
                for k in j + 1..i {
                    g += v[k][j] * d[k];
                    e[k] += v[k][j] * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    v[k][j] -= f * e[k] + g * d[k];
                }
                d[j] = v[i - 1][j];
                v[i][j] = 0.0;
            }
        }
        d[i] = h;
    }

    if !accumulate {
        for (i, x) in d.iter_mut().enumerate() {
            *x = v[i][i];
        }
        e[0] = 0.0;
        return;
    }

    for i in 0..n - 1 {
        v[n - 1][i] = v[i][i];
        v[i][i] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v[k][i + 1] / h;
            }
            for j in 0..=i {
                let g: f64 = (0..=i).map(|k| v[k][i + 1] * v[k][j]).sum();
                for k in 0..=i {
                    v[k][j] -= g * d[k];
                }
            }
        }
        for row in v.iter_mut().take(i + 1) {
            row[i + 1] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[n - 1][j];
        v[n - 1][j] = 0.0;
    }
    v[n - 1][n - 1] = 1.0;
    e[0] = 0.0;
}

/// Implicit QL on the symmetric tridiagonal matrix `(d, e)`.
fn tql2(v: &mut [Vec<f64>], d: &mut [f64], e: &mut [f64], accumulate: bool) {
    let n = d.len();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    let eps = f64::EPSILON;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > eps * tst1 {
            m += 1;
        }
        if m > l {
            loop {
                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for x in &mut d[l + 2..n] {
                    *x -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    if accumulate {
                        for row in v.iter_mut() {
                            let t = row[i + 1];
                            row[i + 1] = s * row[i] + c * t;
                            row[i] = c * row[i] - s * t;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
}

/// Cauchy interlacing between `m` and its principal submatrix on `keep`:
/// `λ_i ≥ η_i ≥ λ_{i+n-k}` for every `i`, with `slack` absolute tolerance.
pub fn interlace_check(m: &DenseSymMatrix, keep: &[usize], slack: f64) -> Result<bool> {
    if keep.is_empty() {
        return Err(Error::ParameterRange("interlacing needs a nonempty index set".into()));
    }
    let mut sorted = keep.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != keep.len() || sorted.last().is_some_and(|&i| i >= m.dim()) {
        return Err(Error::ParameterRange("index set must be distinct indices of the matrix".into()));
    }
    let lambda = eigenvalues(m)?;
    let eta = eigenvalues(&m.principal_submatrix(&sorted))?;
    let shift = m.dim() - eta.len();
    Ok(eta
        .iter()
        .enumerate()
        .all(|(i, &h)| lambda[i] + slack >= h && h + slack >= lambda[i + shift]))
}
