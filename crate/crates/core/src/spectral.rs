//! `A_α` matrices, quotient matrices and the closed-form characteristic
//! polynomials of the extremal family `K_s ∨ (K_{n1} ∪ i·K_1)`.
//!
//! Polynomial coefficients are assembled from integer subterms (`⌊3s/2⌋`
//! is always computed exactly) before the final conversion to `f64`.

use crate::eigen::{self, DenseSymMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{Cubic, Quadratic};
use crate::tol;

pub fn check_alpha(alpha: f64) -> Result<()> {
    if (0.0..1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::AlphaOutOfRange(alpha))
    }
}

/// `⌊3s/2⌋`.
#[inline]
pub fn floor_three_halves(s: usize) -> usize {
    3 * s / 2
}

/// `A_α(G) = α·D(G) + (1 - α)·A(G)`.
pub fn alpha_matrix(g: &Graph, alpha: f64) -> Result<DenseSymMatrix> {
    check_alpha(alpha)?;
    let n = g.n();
    if n > eigen::MAX_DIM {
        return Err(Error::CapExceeded { what: "A_alpha matrix", n, cap: eigen::MAX_DIM });
    }
    let mut m = DenseSymMatrix::zeros(n);
    for v in 0..n {
        m.set_sym(v, v, alpha * g.degree(v) as f64);
    }
    for (u, v) in g.edges() {
        m.set_sym(u, v, 1.0 - alpha);
    }
    Ok(m)
}

/// `Q(G) = D(G) + A(G)`.
pub fn signless_laplacian(g: &Graph) -> Result<DenseSymMatrix> {
    let n = g.n();
    if n > eigen::MAX_DIM {
        return Err(Error::CapExceeded { what: "signless Laplacian", n, cap: eigen::MAX_DIM });
    }
    let mut m = DenseSymMatrix::zeros(n);
    for v in 0..n {
        m.set_sym(v, v, g.degree(v) as f64);
    }
    for (u, v) in g.edges() {
        m.set_sym(u, v, 1.0);
    }
    Ok(m)
}

/// `ρ_α(G)`.
pub fn rho_alpha(g: &Graph, alpha: f64) -> Result<f64> {
    eigen::spectral_radius(&alpha_matrix(g, alpha)?)
}

/// `q(G)`, the signless Laplacian spectral radius.
pub fn signless_radius(g: &Graph) -> Result<f64> {
    eigen::spectral_radius(&signless_laplacian(g)?)
}

/// Ordered blocks of vertices covering `0..n` exactly once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for (i, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::InvalidPartition(format!("block {i} is empty")));
            }
            for &v in b {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("vertex {v} out of range")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&x| !x) {
            return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
        }
        Ok(VertexPartition { blocks })
    }

    pub fn singletons(n: usize) -> Self {
        VertexPartition { blocks: (0..n).map(|v| vec![v]).collect() }
    }

    pub fn whole(n: usize) -> Result<Self> {
        Self::new(n, vec![(0..n).collect()])
    }

    /// The natural partition of `K_s ∨ (K_{n1} ∪ i·K_1)` as laid out by
    /// [`crate::graph::construct_family`]: independent block, clique block
    /// (omitted when `n1 = 0`), hub block.
    pub fn family(s: usize, n1: usize, i: usize) -> Result<Self> {
        let n = s + n1 + i;
        let mut blocks = Vec::new();
        if i > 0 {
            blocks.push((s + n1..n).collect());
        }
        if n1 > 0 {
            blocks.push((s..s + n1).collect());
        }
        if s > 0 {
            blocks.push((0..s).collect());
        }
        Self::new(n, blocks)
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// Average block row sums `q_ij` of a symmetric matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientMatrix {
    pub entries: Vec<Vec<f64>>,
    pub block_sizes: Vec<usize>,
    pub equitable: bool,
    /// Largest per-vertex deviation from the block average.
    pub deviation: f64,
}

impl QuotientMatrix {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// `D^{1/2} Q D^{-1/2}` with `D = diag(block sizes)`; symmetric because
    /// `|V_i| q_ij = |V_j| q_ji` for any symmetric source matrix.
    pub fn symmetrized(&self) -> DenseSymMatrix {
        let k = self.dim();
        let mut out = DenseSymMatrix::zeros(k);
        for i in 0..k {
            for j in 0..=i {
                let (ni, nj) = (self.block_sizes[i] as f64, self.block_sizes[j] as f64);
                let a = self.entries[i][j] * (ni / nj).sqrt();
                let b = self.entries[j][i] * (nj / ni).sqrt();
                out.set_sym(i, j, 0.5 * (a + b));
            }
        }
        out
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        eigen::eigenvalues(&self.symmetrized())
    }

    pub fn spectral_radius(&self) -> Result<f64> {
        Ok(self.eigenvalues()?[0])
    }
}

pub fn quotient_of(m: &DenseSymMatrix, p: &VertexPartition) -> Result<QuotientMatrix> {
    if p.blocks().iter().map(Vec::len).sum::<usize>() != m.dim() {
        return Err(Error::InvalidPartition("partition does not match matrix size".into()));
    }
    VertexPartition::new(m.dim(), p.blocks().to_vec())?;
    let k = p.len();
    let mut entries = vec![vec![0.0; k]; k];
    let mut deviation: f64 = 0.0;
    for (i, bi) in p.blocks().iter().enumerate() {
        for (j, bj) in p.blocks().iter().enumerate() {
            let sums: Vec<f64> = bi.iter().map(|&v| bj.iter().map(|&u| m.get(v, u)).sum()).collect();
            let avg = sums.iter().sum::<f64>() / bi.len() as f64;
            entries[i][j] = avg;
            deviation = sums.iter().fold(deviation, |d, s| d.max((s - avg).abs()));
        }
    }
    Ok(QuotientMatrix {
        entries,
        block_sizes: p.blocks().iter().map(Vec::len).collect(),
        equitable: deviation <= tol::EQUITABLE,
        deviation,
    })
}

pub fn quotient_matrix(g: &Graph, alpha: f64, p: &VertexPartition) -> Result<QuotientMatrix> {
    quotient_of(&alpha_matrix(g, alpha)?, p)
}

/// Outcome of comparing the quotient and full spectral radii.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RadiusCheck {
    pub quotient: f64,
    pub full: f64,
    pub equal: bool,
}

/// Spectral radius of an equitable quotient against the full matrix.
pub fn quotient_radius_check(g: &Graph, alpha: f64, p: &VertexPartition) -> Result<RadiusCheck> {
    let m = alpha_matrix(g, alpha)?;
    let q = quotient_of(&m, p)?;
    if !q.equitable {
        return Err(Error::NotEquitable(q.deviation));
    }
    let quotient = q.spectral_radius()?;
    let full = eigen::spectral_radius(&m)?;
    Ok(RadiusCheck { quotient, full, equal: (quotient - full).abs() < tol::EIG_EQ })
}

/// The order of `K_s ∨ (K_{n1} ∪ (⌊3s/2⌋+1)K_1)` must leave `n1 ≥ 2`.
fn check_b1_range(s: usize, n: usize, alpha: f64) -> Result<()> {
    check_alpha(alpha)?;
    if s == 0 || n < s + floor_three_halves(s) + 3 {
        return Err(Error::ParameterRange(format!(
            "B1 needs s >= 1 and n >= s + floor(3s/2) + 3; got s = {s}, n = {n}"
        )));
    }
    Ok(())
}

/// Quotient matrix `B₁` of `K_s ∨ (K_{n-s-k-1} ∪ (k+1)K_1)`, `k = ⌊3s/2⌋`,
/// for the partition (independent, clique, hub).
pub fn b1_matrix(s: usize, n: usize, alpha: f64) -> Result<[[f64; 3]; 3]> {
    check_b1_range(s, n, alpha)?;
    let a = alpha;
    let k = floor_three_halves(s) as f64;
    let (s, n) = (s as f64, n as f64);
    Ok([
        [a * s, 0.0, (1.0 - a) * s],
        [0.0, n + (a * s - s - k) - 2.0, (1.0 - a) * s],
        [(1.0 - a) * (k + 1.0), (1.0 - a) * (n - s - k - 1.0), a * n - a * s + s - 1.0],
    ])
}

/// Eigenvalues of `B₁` (descending) through its symmetrization
/// `Q^{1/2} B₁ Q^{-1/2}`, `Q = diag(k+1, n-s-k-1, s)`.
pub fn b1_eigenvalues(s: usize, n: usize, alpha: f64) -> Result<Vec<f64>> {
    let b = b1_matrix(s, n, alpha)?;
    let k = floor_three_halves(s);
    let sizes = [k + 1, n - s - k - 1, s];
    let q = QuotientMatrix {
        entries: b.iter().map(|r| r.to_vec()).collect(),
        block_sizes: sizes.to_vec(),
        equitable: true,
        deviation: 0.0,
    };
    q.eigenvalues()
}

/// Characteristic polynomial of `B₁`.
pub fn char_poly_b1(s: usize, n: usize, alpha: f64) -> Result<Cubic> {
    check_b1_range(s, n, alpha)?;
    let a = alpha;
    let k = floor_three_halves(s) as f64;
    let (s, n) = (s as f64, n as f64);
    let a2 = -((a + 1.0) * n + a * s - k - 3.0);
    let a1 = -((a * n + s - 1.0) * k - a * n * n - (a * a + a) * s * n + (2.0 * a + 1.0) * n + (2.0 * a + 1.0) * s - 2.0);
    let a0 = -((2.0 * a * a - 3.0 * a + 1.0) * k + 2.0 * a * a - 3.0 * a + 1.0) * s * s
        - ((a * a - 2.0 * a + 1.0) * k * k - ((2.0 * a * a - 2.0 * a + 1.0) * n - 3.0 * a * a + 5.0 * a - 3.0) * k
            + a * a * n * n
            - (3.0 * a * a - a + 1.0) * n
            + 2.0 * a * a
            - 2.0 * a
            + 2.0)
            * s;
    Ok(Cubic::new(a2, a1, a0))
}

/// Which of the two independent-only shapes `K_s ∨ i·K_1` is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarShape {
    /// `i = ⌊3s/2⌋ + 1`, so `n = s + ⌊3s/2⌋ + 1`.
    B2,
    /// `i = ⌊3s/2⌋ + 2`, so `n = s + ⌊3s/2⌋ + 2`.
    B3,
}

impl StarShape {
    pub fn extra(self) -> usize {
        match self {
            StarShape::B2 => 1,
            StarShape::B3 => 2,
        }
    }

    pub fn order(self, s: usize) -> usize {
        s + floor_three_halves(s) + self.extra()
    }
}

fn check_star_range(shape: StarShape, s: usize, n: usize, alpha: f64) -> Result<()> {
    check_alpha(alpha)?;
    if s == 0 || n != shape.order(s) {
        return Err(Error::ParameterRange(format!(
            "{shape:?} needs s >= 1 and n = s + floor(3s/2) + {}; got s = {s}, n = {n}",
            shape.extra()
        )));
    }
    Ok(())
}

fn star_constant(shape: StarShape, s: usize, alpha: f64) -> f64 {
    let a = alpha;
    let k = floor_three_halves(s) as f64;
    let s = s as f64;
    match shape {
        StarShape::B2 => (2.0 * a - 1.0) * s * k + a * s * s + a * s - s,
        StarShape::B3 => (2.0 * a - 1.0) * s * k + a * s * s + (3.0 * a - 2.0) * s,
    }
}

/// Characteristic polynomial of the 2x2 quotient of `K_s ∨ i·K_1`.
pub fn char_poly_star(shape: StarShape, s: usize, n: usize, alpha: f64) -> Result<Quadratic> {
    check_star_range(shape, s, n, alpha)?;
    let b = -(alpha * n as f64 + s as f64 - 1.0);
    Ok(Quadratic::new(b, star_constant(shape, s, alpha)))
}

pub fn char_poly_b2(s: usize, n: usize, alpha: f64) -> Result<Quadratic> {
    char_poly_star(StarShape::B2, s, n, alpha)
}

pub fn char_poly_b3(s: usize, n: usize, alpha: f64) -> Result<Quadratic> {
    char_poly_star(StarShape::B3, s, n, alpha)
}

/// `(αn + s - 1 + √((αn + s - 1)² - 4c)) / 2`, the explicit largest root.
pub fn star_root_closed_form(shape: StarShape, s: usize, n: usize, alpha: f64) -> Result<f64> {
    check_star_range(shape, s, n, alpha)?;
    let t = alpha * n as f64 + s as f64 - 1.0;
    let disc = t * t - 4.0 * star_constant(shape, s, alpha);
    if disc < 0.0 {
        return Err(Error::NoRealRoot);
    }
    Ok((t + disc.sqrt()) / 2.0)
}

/// The order threshold `f(α)`.
pub fn f_threshold(alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    Ok(if alpha <= 0.5 {
        20.0
    } else if alpha <= 5.0 / 7.0 {
        25.0
    } else {
        7.0 / (1.0 - alpha) + 3.0
    })
}

/// Smallest integer order `n` with `n ≥ f(α)`.
pub fn min_order(alpha: f64) -> Result<usize> {
    Ok((f_threshold(alpha)? - 1e-9).ceil() as usize)
}

fn check_order(n: usize, alpha: f64) -> Result<()> {
    let min = min_order(alpha)?;
    if n < min {
        return Err(Error::ParameterRange(format!("n = {n} is below f(alpha) = {}", f_threshold(alpha)?)));
    }
    Ok(())
}

/// `φ(x)`; its largest root is `τ(n)`. Valid for any `n ≥ 4`.
pub fn phi(n: usize, alpha: f64) -> Result<Cubic> {
    check_alpha(alpha)?;
    let a = alpha;
    let n = n as f64;
    Ok(Cubic::new(
        -((a + 1.0) * n + a - 4.0),
        a * n * n + (a * a - 2.0 * a - 1.0) * n - 2.0 * a + 1.0,
        -a * a * n * n + (5.0 * a * a - 3.0 * a + 2.0) * n - 10.0 * a * a + 15.0 * a - 8.0,
    ))
}

/// `ψ(x)`; its largest root is `θ(n)`.
pub fn psi(n: usize, alpha: f64) -> Result<Cubic> {
    check_alpha(alpha)?;
    let a = alpha;
    let n = n as f64;
    Ok(Cubic::new(
        -((a + 1.0) * n + 2.0 * a - 6.0),
        a * n * n + (2.0 * a * a - 3.0 * a - 1.0) * n - 4.0 * a - 3.0,
        -2.0 * a * a * n * n + (18.0 * a * a - 14.0 * a + 8.0) * n - 72.0 * a * a + 118.0 * a - 56.0,
    ))
}

fn root_in(c: &Cubic, lo: f64, hi: f64) -> Result<f64> {
    let r = c.largest_root(Some((lo, hi)))?;
    if r > lo && r < hi {
        Ok(r)
    } else {
        Err(Error::Inconclusive(format!("largest root {r} escaped the bracket ({lo}, {hi})")))
    }
}

/// Largest root of `φ` for any `n ≥ 5`, bracketed in `(n - 3, n - 1)`.
pub fn phi_root(n: usize, alpha: f64) -> Result<f64> {
    if n < 5 {
        return Err(Error::ParameterRange(format!("phi root needs n >= 5, got {n}")));
    }
    root_in(&phi(n, alpha)?, n as f64 - 3.0, n as f64 - 1.0)
}

/// `τ(n)` for `n ≥ f(α)`.
pub fn tau(n: usize, alpha: f64) -> Result<f64> {
    check_order(n, alpha)?;
    phi_root(n, alpha)
}

/// `θ(n)` for `n ≥ f(α)`, bracketed in `(n - 5, n - 1)`.
pub fn theta(n: usize, alpha: f64) -> Result<f64> {
    check_order(n, alpha)?;
    root_in(&psi(n, alpha)?, n as f64 - 5.0, n as f64 - 1.0)
}

/// `[4, -(6n-14), 2n²-7n, -n²+7n-6]`, the signless-Laplacian threshold cubic
/// with the constant term as stated for the corollary. Note that
/// `4·φ(x)|_{α=1/2}` has constant term `-n²+7n-12`; the verify harness
/// reports the discrepancy instead of hiding it.
pub fn corollary_cubic_coeffs(n: usize) -> [f64; 4] {
    let n = n as f64;
    [4.0, -(6.0 * n - 14.0), 2.0 * n * n - 7.0 * n, -n * n + 7.0 * n - 6.0]
}

/// `μ(n)`, largest root of [`corollary_cubic_coeffs`], for `n ≥ 20`.
pub fn mu(n: usize) -> Result<f64> {
    if n < 20 {
        return Err(Error::ParameterRange(format!("mu(n) needs n >= 20, got {n}")));
    }
    Cubic::from_coeffs(corollary_cubic_coeffs(n))?.largest_root(Some((n as f64 - 3.0, n as f64 - 1.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{construct_family, extremal_g2};

    #[test]
    fn alpha_matrix_of_k2() {
        let k2 = Graph::complete(2).unwrap();
        let m0 = alpha_matrix(&k2, 0.0).unwrap();
        assert_eq!(m0.row(0), &[0.0, 1.0]);
        let mh = alpha_matrix(&k2, 0.5).unwrap();
        assert_eq!(mh.row(0), &[0.5, 0.5]);
        assert_eq!(mh.row(1), &[0.5, 0.5]);
        assert!(alpha_matrix(&k2, 1.0).is_err());
        assert!(alpha_matrix(&k2, -0.1).is_err());
    }

    #[test]
    fn complete_graph_radius() {
        for n in 2..=10 {
            let k = Graph::complete(n).unwrap();
            for a in [0.0, 0.3, 0.5, 0.9] {
                assert!((rho_alpha(&k, a).unwrap() - (n - 1) as f64).abs() < 1e-10);
            }
        }
        assert!((rho_alpha(&Graph::complete(3).unwrap(), 0.77).unwrap() - 2.0).abs() < 1e-12);
        assert_eq!(rho_alpha(&Graph::empty(4), 0.0).unwrap(), 0.0);
    }

    #[test]
    fn k2_join_4k1() {
        let g = construct_family(2, 0, 4).unwrap();
        let expect = (1.0 + 33f64.sqrt()) / 2.0;
        assert!((rho_alpha(&g, 0.0).unwrap() - expect).abs() < 1e-12);
        let p = VertexPartition::family(2, 0, 4).unwrap();
        let q = quotient_matrix(&g, 0.0, &p).unwrap();
        assert_eq!(q.entries, vec![vec![0.0, 2.0], vec![4.0, 1.0]]);
        assert!(q.equitable);
        let quad = char_poly_b2(2, 6, 0.0).unwrap();
        assert_eq!(quad.coeffs(), [1.0, -1.0, -8.0]);
        assert!((quad.largest_root().unwrap() - expect).abs() < 1e-14);
        assert!((star_root_closed_form(StarShape::B2, 2, 6, 0.0).unwrap() - expect).abs() < 1e-14);
        let quad3 = char_poly_b3(2, 7, 0.0).unwrap();
        assert_eq!(quad3.coeffs(), [1.0, -1.0, -10.0]);
        let g3 = construct_family(2, 0, 5).unwrap();
        assert!((rho_alpha(&g3, 0.0).unwrap() - quad3.largest_root().unwrap()).abs() < 1e-12);
        assert!(char_poly_b2(2, 7, 0.0).is_err());
        assert!(char_poly_b3(2, 6, 0.0).is_err());
    }

    #[test]
    fn trivial_partitions() {
        let g = crate::graph::path(5).unwrap();
        let m = alpha_matrix(&g, 0.3).unwrap();
        let q = quotient_of(&m, &VertexPartition::singletons(5)).unwrap();
        assert!(q.equitable);
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(q.entries[i][j], m.get(i, j));
            }
        }
        let c6 = Graph::new(6, &(0..6).map(|v| (v, (v + 1) % 6)).collect::<Vec<_>>()).unwrap();
        let q = quotient_matrix(&c6, 0.0, &VertexPartition::whole(6).unwrap()).unwrap();
        assert!(q.equitable);
        assert_eq!(q.entries, vec![vec![2.0 * 6.0 / 6.0]]);
        let q = quotient_matrix(&g, 0.0, &VertexPartition::whole(5).unwrap()).unwrap();
        assert!(!q.equitable);
        assert!(matches!(
            quotient_radius_check(&g, 0.0, &VertexPartition::whole(5).unwrap()),
            Err(Error::NotEquitable(_))
        ));
    }

    #[test]
    fn invalid_partitions() {
        assert!(VertexPartition::new(3, vec![vec![0, 1]]).is_err());
        assert!(VertexPartition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(VertexPartition::new(3, vec![vec![0, 1, 2], vec![]]).is_err());
        assert!(VertexPartition::new(3, vec![vec![0, 1, 3]]).is_err());
    }

    #[test]
    fn quotient_checks() {
        let g = construct_family(1, 17, 2).unwrap();
        let r = quotient_radius_check(&g, 0.0, &VertexPartition::family(1, 17, 2).unwrap()).unwrap();
        assert!(r.equal);
        let g = construct_family(2, 0, 4).unwrap();
        let r = quotient_radius_check(&g, 0.5, &VertexPartition::family(2, 0, 4).unwrap()).unwrap();
        assert!(r.equal);
        for n in 2..8 {
            let k = Graph::complete(n).unwrap();
            let r = quotient_radius_check(&k, 0.4, &VertexPartition::whole(n).unwrap()).unwrap();
            assert!(r.equal && (r.full - (n - 1) as f64).abs() < 1e-10);
        }
    }

    #[test]
    fn b1_specializations() {
        for n in [8usize, 12, 20, 31] {
            for a in [0.0, 0.25, 0.6, 0.95] {
                let close = |b: Cubic, p: Cubic| {
                    for (x, y) in b.coeffs().iter().zip(p.coeffs()) {
                        assert!((x - y).abs() <= 1e-12 * (1.0 + y.abs()), "{x} vs {y}");
                    }
                };
                close(char_poly_b1(1, n, a).unwrap(), phi(n, a).unwrap());
                if n >= 9 {
                    close(char_poly_b1(2, n, a).unwrap(), psi(n, a).unwrap());
                }
            }
        }
        assert!(char_poly_b1(3, 9, 0.0).is_err());
        assert!(char_poly_b1(0, 9, 0.0).is_err());
    }

    #[test]
    fn b1_root_matches_eigensolve() {
        let (s, n, a) = (3usize, 20usize, 0.25);
        let k = floor_three_halves(s);
        let g = construct_family(s, n - s - k - 1, k + 1).unwrap();
        let root = char_poly_b1(s, n, a).unwrap().largest_root(None).unwrap();
        assert!((root - rho_alpha(&g, a).unwrap()).abs() < 1e-9);
        let eig = b1_eigenvalues(s, n, a).unwrap();
        assert!((eig[0] - root).abs() < 1e-9);
    }

    #[test]
    fn tau_at_twenty() {
        let c = phi(20, 0.0).unwrap();
        assert_eq!(c.coeffs(), [1.0, -16.0, -19.0, 32.0]);
        let t = tau(20, 0.0).unwrap();
        assert!((t - 17.0066).abs() < 1e-4);
        let g2 = extremal_g2(20).unwrap();
        assert!((t - rho_alpha(&g2, 0.0).unwrap()).abs() < 1e-9);
        assert!(tau(19, 0.0).is_err());
        assert!(tau(24, 0.6).is_err());
        assert!(tau(25, 0.6).is_ok());
    }

    #[test]
    fn theta_below_tau() {
        for a in [0.0, 0.3, 0.5, 0.7, 0.8] {
            let n0 = min_order(a).unwrap();
            for n in n0..n0 + 5 {
                let (t, th) = (tau(n, a).unwrap(), theta(n, a).unwrap());
                assert!(th > n as f64 - 5.0 && th < t && t > n as f64 - 3.0 && t < n as f64 - 1.0);
            }
        }
    }

    #[test]
    fn thresholds() {
        assert_eq!(f_threshold(0.0).unwrap(), 20.0);
        assert_eq!(f_threshold(0.5).unwrap(), 20.0);
        assert_eq!(f_threshold(0.5000001).unwrap(), 25.0);
        assert_eq!(f_threshold(5.0 / 7.0).unwrap(), 25.0);
        assert!((f_threshold(0.9).unwrap() - 73.0).abs() < 1e-9);
        assert_eq!(min_order(0.9).unwrap(), 73);
        assert!(f_threshold(1.0).is_err());
    }

    #[test]
    fn corollary_cubic_at_twenty() {
        assert_eq!(corollary_cubic_coeffs(20), [4.0, -106.0, 660.0, -266.0]);
        let m = mu(20).unwrap();
        let c = Cubic::from_coeffs(corollary_cubic_coeffs(20)).unwrap();
        assert!(c.eval(m).abs() < 1e-9);
        assert!(mu(19).is_err());
    }
}
