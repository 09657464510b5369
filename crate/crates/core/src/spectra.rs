//! Largest eigenvalues of the signless Laplacian `Q = D + A` and of `A`.

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralResult {
    pub value: f64,
    /// Power iterations, or Jacobi sweeps when the dense solver was used.
    pub iterations: usize,
    /// `‖Mx − λx‖∞` for the unit eigenvector estimate.
    pub residual: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralConfig {
    pub tolerance: f64,
    pub max_power_iterations: usize,
    pub max_jacobi_sweeps: usize,
    /// Off-diagonal Frobenius norm at which Jacobi stops.
    pub jacobi_threshold: f64,
}

impl Default for SpectralConfig {
    fn default() -> Self {
        SpectralConfig {
            tolerance: 1e-10,
            max_power_iterations: 400,
            max_jacobi_sweeps: 100,
            jacobi_threshold: 1e-12,
        }
    }
}

/// Dense row-major signless Laplacian.
pub fn signless_laplacian(g: &Graph) -> Vec<f64> {
    let n = g.order();
    let mut m = vec![0.0; n * n];
    for u in 0..n {
        let row = g.rows()[u];
        m[u * n + u] = row.count_ones() as f64;
        for v in Bits(row) {
            m[u * n + v] = 1.0;
        }
    }
    m
}

pub fn adjacency_matrix(g: &Graph) -> Vec<f64> {
    let n = g.order();
    let mut m = vec![0.0; n * n];
    for u in 0..n {
        for v in Bits(g.rows()[u]) {
            m[u * n + v] = 1.0;
        }
    }
    m
}

/// q(G) with the default configuration.
pub fn q_index(g: &Graph) -> Result<SpectralResult> {
    q_index_with(g, &SpectralConfig::default())
}

pub fn q_index_with(g: &Graph, cfg: &SpectralConfig) -> Result<SpectralResult> {
    let n = g.order();
    let m = signless_laplacian(g);
    // Q is nonnegative and positive semidefinite, so the dominant
    // eigenvalue of Q is its largest one.
    if let Some(r) = power_iteration(&m, n, 0.0, cfg) {
        return Ok(r);
    }
    jacobi_largest(&m, n, cfg)
}

/// μ(G) with the default configuration.
pub fn mu_index(g: &Graph) -> Result<SpectralResult> {
    mu_index_with(g, &SpectralConfig::default())
}

pub fn mu_index_with(g: &Graph, cfg: &SpectralConfig) -> Result<SpectralResult> {
    let n = g.order();
    let m = adjacency_matrix(g);
    // A + I separates μ + 1 from the mirrored bipartite eigenvalue 1 − μ.
    if let Some(r) = power_iteration(&m, n, 1.0, cfg) {
        return Ok(r);
    }
    jacobi_largest(&m, n, cfg)
}

/// Power iteration on `M + shift·I` from the all-ones vector. Returns `None`
/// when the residual has not reached the tolerance within the cap.
fn power_iteration(m: &[f64], n: usize, shift: f64, cfg: &SpectralConfig) -> Option<SpectralResult> {
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    for it in 1..=cfg.max_power_iterations {
        mat_vec(m, n, &x, &mut y);
        let lambda: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let residual = x
            .iter()
            .zip(&y)
            .map(|(a, b)| (b - lambda * a).abs())
            .fold(0.0, f64::max);
        if residual <= cfg.tolerance {
            return Some(SpectralResult {
                value: lambda,
                iterations: it,
                residual,
            });
        }
        let norm = y.iter().zip(&x).map(|(b, a)| (b + shift * a).powi(2)).sum::<f64>().sqrt();
        if norm == 0.0 {
            return None;
        }
        for (a, b) in x.iter_mut().zip(&y) {
            *a = (b + shift * *a) / norm;
        }
    }
    None
}

fn mat_vec(m: &[f64], n: usize, x: &[f64], y: &mut [f64]) {
    for (i, yi) in y.iter_mut().enumerate() {
        *yi = m[i * n..(i + 1) * n].iter().zip(x).map(|(a, b)| a * b).sum();
    }
}

/// All eigenpairs of a dense symmetric matrix by cyclic Jacobi rotations.
/// Returns eigenvalues and the column-major eigenvector matrix.
pub fn jacobi_eigen(m: &[f64], n: usize, cfg: &SpectralConfig) -> Result<(Vec<f64>, Vec<f64>, usize)> {
    let mut a = m.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };
    let mut sweeps = 0;
    while off(&a) > cfg.jacobi_threshold {
        if sweeps == cfg.max_jacobi_sweeps {
            return Err(Error::NoConvergence {
                iterations: sweeps,
                residual: off(&a),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let values = (0..n).map(|i| a[i * n + i]).collect();
    Ok((values, v, sweeps))
}

/// Largest eigenvalue of a dense symmetric matrix via Jacobi.
pub fn jacobi_largest(m: &[f64], n: usize, cfg: &SpectralConfig) -> Result<SpectralResult> {
    let (values, vecs, sweeps) = jacobi_eigen(m, n, cfg)?;
    let (imax, &value) = values
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .expect("n >= 1");
    let x: Vec<f64> = (0..n).map(|k| vecs[k * n + imax]).collect();
    let mut y = vec![0.0; n];
    mat_vec(m, n, &x, &mut y);
    let residual = x
        .iter()
        .zip(&y)
        .map(|(a, b)| (b - value * a).abs())
        .fold(0.0, f64::max);
    if residual > cfg.tolerance {
        return Err(Error::NoConvergence {
            iterations: sweeps,
            residual,
        });
    }
    Ok(SpectralResult {
        value,
        iterations: sweeps,
        residual,
    })
}

/// Real polynomial of degree at most three, coefficients lowest power first.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() || coeffs.len() > 4 {
            return Err(Error::Precondition("polynomial degree must be 0..=3".into()));
        }
        if *coeffs.last().unwrap() == 0.0 {
            return Err(Error::Precondition("leading coefficient is zero".into()));
        }
        Ok(Polynomial { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn eval(&self, x: f64) -> f64 {
        horner(&self.coeffs, x)
    }

    pub fn derivative_at(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(0.0, |acc, (i, &c)| acc * x + i as f64 * c)
    }
}

fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &ci| acc * x + ci)
}

/// Root of `p` inside `bracket` by bisection, polished with Newton steps
/// that are only accepted while they stay inside the final bracket.
pub fn largest_real_root(p: &Polynomial, bracket: (f64, f64)) -> Result<f64> {
    let (mut lo, mut hi) = if bracket.0 <= bracket.1 {
        bracket
    } else {
        (bracket.1, bracket.0)
    };
    let (flo, fhi) = (p.eval(lo), p.eval(hi));
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() || !flo.is_finite() || !fhi.is_finite() {
        return Err(Error::NoSignChange { lo, hi });
    }
    let lo_neg = flo < 0.0;
    for _ in 0..200 {
        if hi - lo <= 1e-13 * hi.abs().max(1.0) {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let fm = p.eval(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm < 0.0) == lo_neg {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..4 {
        let d = p.derivative_at(x);
        if d == 0.0 {
            break;
        }
        let next = x - p.eval(x) / d;
        if !(lo..=hi).contains(&next) {
            break;
        }
        x = next;
    }
    Ok(x)
}

/// All eigenvalues of `Q` by expanding `det(xI − Q)` over permutations and
/// isolating the real roots. Cross-validation oracle for small graphs only.
pub fn characteristic_q_eigenvalues_bruteforce(g: &Graph) -> Result<Vec<f64>> {
    let n = g.order();
    if n > 6 {
        return Err(Error::Precondition(format!(
            "brute-force characteristic polynomial limited to n <= 6, got {n}"
        )));
    }
    let poly = characteristic_polynomial_q(g);
    let coeffs: Vec<f64> = poly.iter().map(|&c| c as f64).collect();
    Ok(real_rooted_roots(&coeffs))
}

/// Integer coefficients of `det(xI − Q)`, lowest power first.
pub fn characteristic_polynomial_q(g: &Graph) -> Vec<i64> {
    let n = g.order();
    let entry = |i: usize, j: usize| -> Vec<i64> {
        if i == j {
            vec![-(g.rows()[i].count_ones() as i64), 1]
        } else if g.has_edge(i, j) {
            vec![-1]
        } else {
            vec![0]
        }
    };
    let mut total = vec![0i64; n + 1];
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, 1, &mut |p, sign| {
        let mut term = vec![sign];
        for (i, &j) in p.iter().enumerate() {
            term = poly_mul(&term, &entry(i, j));
            if term.iter().all(|&c| c == 0) {
                return;
            }
        }
        for (k, c) in term.into_iter().enumerate() {
            total[k] += c;
        }
    });
    total
}

fn permutations(p: &mut Vec<usize>, k: usize, sign: i64, f: &mut dyn FnMut(&[usize], i64)) {
    if k == p.len() {
        f(p, sign);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, if i == k { sign } else { -sign }, f);
        p.swap(k, i);
    }
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Roots, with multiplicity, of a polynomial known to have only real roots.
///
/// Roots of the derivative split the line into monotone pieces; each piece
/// holds at most one simple root, and a derivative root where the polynomial
/// vanishes is a multiple root.
fn real_rooted_roots(c: &[f64]) -> Vec<f64> {
    let deg = c.len() - 1;
    if deg == 0 {
        return Vec::new();
    }
    if deg == 1 {
        return vec![-c[0] / c[1]];
    }
    let deriv: Vec<f64> = c.iter().enumerate().skip(1).map(|(i, &x)| i as f64 * x).collect();
    let crit = real_rooted_roots(&deriv);
    let lead = c[deg];
    let bound = 1.0 + c[..deg].iter().map(|x| (x / lead).abs()).fold(0.0, f64::max);

    let mut clusters: Vec<(f64, usize)> = Vec::new();
    for x in crit {
        match clusters.last_mut() {
            Some((v, m)) if (x - *v).abs() <= 1e-5 * v.abs().max(1.0) => {
                *v = (*v * *m as f64 + x) / (*m as f64 + 1.0);
                *m += 1;
            }
            _ => clusters.push((x, 1)),
        }
    }
    let is_zero = |x: f64| {
        let scale: f64 = c.iter().enumerate().map(|(i, a)| a.abs() * x.abs().powi(i as i32)).sum();
        horner(c, x).abs() <= 1e-9 * scale.max(1.0)
    };
    let mut points = vec![(-bound, false)];
    points.extend(clusters.iter().map(|&(x, _)| (x, is_zero(x))));
    points.push((bound, false));

    let mut roots = Vec::with_capacity(deg);
    for (x, m) in &clusters {
        if is_zero(*x) {
            roots.extend(std::iter::repeat_n(*x, m + 1));
        }
    }
    for w in points.windows(2) {
        let ((a, za), (b, zb)) = (w[0], w[1]);
        if za || zb {
            continue;
        }
        let p = Polynomial { coeffs: c.to_vec() };
        if let Ok(r) = largest_real_root(&p, (a, b)) {
            roots.push(r);
        }
    }
    roots.sort_by(f64::total_cmp);
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let e: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn q_index_examples() {
        assert!(close(q_index(&complete(2)).unwrap().value, 2.0, 1e-10));
        for n in 2..=12 {
            let r = q_index(&complete(n)).unwrap();
            assert!(close(r.value, 2.0 * n as f64 - 2.0, 1e-10));
            assert!(r.residual <= 1e-10);
        }
        let f5 = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        assert!(close(q_index(&f5).unwrap().value, (7.0 + 17f64.sqrt()) / 2.0, 1e-9));
        let s62 = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5)]).unwrap();
        assert!(close(q_index(&s62).unwrap().value, 4.0 + 2.0 * 3f64.sqrt(), 1e-9));
    }

    #[test]
    fn mu_index_examples() {
        for n in 2..=10 {
            assert!(close(mu_index(&complete(n)).unwrap().value, n as f64 - 1.0, 1e-10));
            if n >= 3 {
                assert!(close(mu_index(&cycle(n)).unwrap().value, 2.0, 1e-10));
            }
        }
        let k23 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(close(mu_index(&k23).unwrap().value, 6f64.sqrt(), 1e-10));
    }

    #[test]
    fn edgeless_graph_has_zero_index() {
        let g = Graph::empty(5).unwrap();
        assert_eq!(q_index(&g).unwrap().value, 0.0);
        assert_eq!(mu_index(&g).unwrap().value, 0.0);
    }

    #[test]
    fn pathological_tolerance_reports_non_convergence() {
        let cfg = SpectralConfig {
            tolerance: 0.0,
            max_power_iterations: 3,
            max_jacobi_sweeps: 1,
            jacobi_threshold: 0.0,
        };
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(matches!(q_index_with(&p4, &cfg), Err(Error::NoConvergence { .. })));
    }

    #[test]
    fn jacobi_agrees_with_power_iteration() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6)]).unwrap();
        let cfg = SpectralConfig::default();
        let dense = jacobi_largest(&signless_laplacian(&g), 7, &cfg).unwrap();
        assert!(close(dense.value, q_index(&g).unwrap().value, 1e-10));
    }

    #[test]
    fn root_examples() {
        let n = 5.0;
        let p = Polynomial::new(vec![2.0 * (n - 1.0), -(n + 2.0), 1.0]).unwrap();
        assert!(close(largest_real_root(&p, (5.0, 6.0)).unwrap(), (7.0 + 17f64.sqrt()) / 2.0, 1e-12));
        let n = 6.0;
        let p = Polynomial::new(vec![4.0, -(n + 2.0), 1.0]).unwrap();
        assert!(close(largest_real_root(&p, (7.0, 8.0)).unwrap(), 4.0 + 2.0 * 3f64.sqrt(), 1e-12));
        let n = 4.0;
        let cubic = Polynomial::new(vec![-2.0 * n + 4.0, 3.0 * n, -(n + 3.0), 1.0]).unwrap();
        let r = largest_real_root(&cubic, (4.5, 4.667)).unwrap();
        // independent: the cubic factors as (x − 2)(x² − 5x + 2) at n = 4
        assert!(close(r, (5.0 + 17f64.sqrt()) / 2.0, 1e-12));
        assert!(cubic.eval(r).abs() <= 1e-9);
        assert_eq!(
            largest_real_root(&cubic, (5.0, 6.0)),
            Err(Error::NoSignChange { lo: 5.0, hi: 6.0 })
        );
    }

    #[test]
    fn polynomial_rejects_bad_input() {
        assert!(Polynomial::new(vec![]).is_err());
        assert!(Polynomial::new(vec![1.0, 0.0]).is_err());
        assert!(Polynomial::new(vec![1.0; 5]).is_err());
    }

    #[test]
    fn bruteforce_examples() {
        let ev = characteristic_q_eigenvalues_bruteforce(&complete(2)).unwrap();
        assert_eq!(ev.len(), 2);
        assert!(close(ev[0], 0.0, 1e-9) && close(ev[1], 2.0, 1e-9));

        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(characteristic_polynomial_q(&star), vec![0, -4, 9, -6, 1]);
        let ev = characteristic_q_eigenvalues_bruteforce(&star).unwrap();
        for (a, b) in ev.iter().zip([0.0, 1.0, 1.0, 4.0]) {
            assert!(close(*a, b, 1e-7), "{ev:?}");
        }
        let ev = characteristic_q_eigenvalues_bruteforce(&cycle(4)).unwrap();
        for (a, b) in ev.iter().zip([0.0, 2.0, 2.0, 4.0]) {
            assert!(close(*a, b, 1e-7), "{ev:?}");
        }
        assert!(characteristic_q_eigenvalues_bruteforce(&complete(7)).is_err());
    }

    #[test]
    fn bruteforce_handles_high_multiplicity() {
        // K_6: eigenvalues 10 and 4 (five times)
        let ev = characteristic_q_eigenvalues_bruteforce(&complete(6)).unwrap();
        assert_eq!(ev.len(), 6);
        assert!(close(ev[5], 10.0, 1e-6));
        assert!(ev[..5].iter().all(|&x| close(x, 4.0, 1e-3)), "{ev:?}");
    }
}
