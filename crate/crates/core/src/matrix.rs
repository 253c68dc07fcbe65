//! Hermitian matrices with Gaussian-unit entries and exact characteristic
//! polynomials via fraction-free elimination.

use crate::gauss::{GaussInt, GaussianUnit};
use crate::graph::MixedGraph;
use crate::poly::IntPolynomial;
use crate::signed::SignedGraph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A Hermitian matrix with zero diagonal whose off-diagonal entries are
/// Gaussian units.
///
/// Matrices built from mixed graphs use only {0, 1, i, -i}; conjugating by a
/// diagonal of fourth roots of unity or encoding a signed graph can also
/// produce -1 entries, so the matrix type admits all units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermitianMatrix {
    n: usize,
    entries: Vec<GaussianUnit>,
}

impl HermitianMatrix {
    pub fn zero(n: usize) -> Self {
        HermitianMatrix {
            n,
            entries: vec![GaussianUnit::Zero; n * n],
        }
    }

    pub fn from_graph(g: &MixedGraph) -> Self {
        let n = g.order();
        let mut m = HermitianMatrix::zero(n);
        for u in 0..n {
            for v in 0..n {
                m.entries[u * n + v] = g.entry(u, v);
            }
        }
        m
    }

    pub fn from_signed(s: &SignedGraph) -> Self {
        let n = s.order();
        let mut m = HermitianMatrix::zero(n);
        for (u, v, sign) in s.signed_edges() {
            let unit = if sign {
                GaussianUnit::One
            } else {
                GaussianUnit::MinusOne
            };
            m.entries[u * n + v] = unit;
            m.entries[v * n + u] = unit;
        }
        m
    }

    /// Builds from an upper-triangular entry list, mirroring conjugates.
    pub fn from_upper(n: usize, upper: &[((usize, usize), GaussianUnit)]) -> Self {
        let mut m = HermitianMatrix::zero(n);
        for &((u, v), h) in upper {
            assert!(u < v && v < n, "upper entries need u < v < n");
            m.entries[u * n + v] = h;
            m.entries[v * n + u] = h.conj();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, u: usize, v: usize) -> GaussianUnit {
        self.entries[u * self.n + v]
    }

    pub fn set_pair(&mut self, u: usize, v: usize, h: GaussianUnit) {
        assert!(u != v, "diagonal stays zero");
        self.entries[u * self.n + v] = h;
        self.entries[v * self.n + u] = h.conj();
    }

    pub fn is_hermitian(&self) -> bool {
        for u in 0..self.n {
            if !self.entry(u, u).is_zero() {
                return false;
            }
            for v in 0..self.n {
                if self.entry(u, v) != self.entry(v, u).conj() {
                    return false;
                }
            }
        }
        true
    }

    /// Conjugates by diag(theta): entry (u, v) becomes
    /// theta(u) * h * conj(theta(v)). Total for any unit-valued theta.
    pub fn conjugate_by(&self, theta: &[GaussianUnit]) -> HermitianMatrix {
        assert_eq!(theta.len(), self.n);
        let mut out = HermitianMatrix::zero(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                out.entries[u * self.n + v] =
                    theta[u] * self.entry(u, v) * theta[v].conj();
            }
        }
        out
    }

    /// Re-encodes as a mixed graph when no -1 entries are present.
    pub fn to_mixed_graph(&self) -> Result<MixedGraph, (usize, usize)> {
        let mut undirected = Vec::new();
        let mut arcs = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                match self.entry(u, v) {
                    GaussianUnit::Zero => {}
                    GaussianUnit::One => undirected.push((u, v)),
                    GaussianUnit::I => arcs.push((u, v)),
                    GaussianUnit::MinusI => arcs.push((v, u)),
                    GaussianUnit::MinusOne => return Err((u, v)),
                }
            }
        }
        Ok(MixedGraph::build(self.n, &undirected, &arcs).expect("unit entries form a mixed graph"))
    }

    /// Exact characteristic polynomial det(xI - H).
    ///
    /// Evaluates the determinant at n+1 integer points by fraction-free
    /// elimination over the Gaussian integers and interpolates. Every
    /// determinant must come out real and the interpolation integral;
    /// violations panic since they indicate a bug, not bad input.
    pub fn char_poly(&self) -> IntPolynomial {
        let n = self.n;
        if n == 0 {
            return IntPolynomial::one();
        }
        let points: Vec<i64> = interpolation_points(n + 1);
        let values: Vec<BigInt> = points
            .iter()
            .map(|&x| {
                let det = self.det_shifted(x);
                assert!(
                    det.is_real(),
                    "characteristic determinant at {x} has imaginary part {}",
                    det.im
                );
                det.re
            })
            .collect();
        let poly = interpolate_integer(&points, &values);
        assert_eq!(poly.degree(), n, "characteristic polynomial degree");
        assert!(poly.is_monic(), "characteristic polynomial must be monic");
        poly
    }

    /// Hadamard bound on |det(xI - H)| over the complex entries; every
    /// Bareiss intermediate is a minor, hence also below this bound.
    fn hadamard_bound(&self, x: i64) -> f64 {
        let n = self.n;
        let mut log_prod = 0.0f64;
        for u in 0..n {
            let mut row = (x as f64) * (x as f64);
            for v in 0..n {
                if u != v && !self.entry(u, v).is_zero() {
                    row += 1.0;
                }
            }
            log_prod += row.ln() / 2.0;
        }
        log_prod.exp()
    }

    /// Bareiss elimination over machine-width Gaussian integers. Sound only
    /// when the Hadamard bound certifies that no intermediate product can
    /// overflow; callers check that first.
    fn det_shifted_i128(&self, x: i64) -> (i128, i128) {
        let n = self.n;
        let mut re = vec![0i128; n * n];
        let mut im = vec![0i128; n * n];
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    re[u * n + v] = x as i128;
                } else {
                    let (r, i) = self.entry(u, v).parts();
                    re[u * n + v] = -(r as i128);
                    im[u * n + v] = -(i as i128);
                }
            }
        }
        let mut sign = false;
        let (mut pr, mut pi) = (1i128, 0i128);
        for k in 0..n {
            if re[k * n + k] == 0 && im[k * n + k] == 0 {
                let Some(p) =
                    (k + 1..n).find(|&r| re[r * n + k] != 0 || im[r * n + k] != 0)
                else {
                    return (0, 0);
                };
                for j in 0..n {
                    re.swap(k * n + j, p * n + j);
                    im.swap(k * n + j, p * n + j);
                }
                sign = !sign;
            }
            let (akk_r, akk_i) = (re[k * n + k], im[k * n + k]);
            let norm = pr * pr + pi * pi;
            for i in k + 1..n {
                let (aik_r, aik_i) = (re[i * n + k], im[i * n + k]);
                for j in k + 1..n {
                    let (aij_r, aij_i) = (re[i * n + j], im[i * n + j]);
                    let (akj_r, akj_i) = (re[k * n + j], im[k * n + j]);
                    let num_r = aij_r * akk_r - aij_i * akk_i - (aik_r * akj_r - aik_i * akj_i);
                    let num_i = aij_r * akk_i + aij_i * akk_r - (aik_r * akj_i + aik_i * akj_r);
                    // Exact division by the previous pivot.
                    let q_r = num_r * pr + num_i * pi;
                    let q_i = num_i * pr - num_r * pi;
                    debug_assert!(q_r % norm == 0 && q_i % norm == 0);
                    re[i * n + j] = q_r / norm;
                    im[i * n + j] = q_i / norm;
                }
                re[i * n + k] = 0;
                im[i * n + k] = 0;
            }
            pr = akk_r;
            pi = akk_i;
        }
        let (dr, di) = (re[n * n - 1], im[n * n - 1]);
        if sign {
            (-dr, -di)
        } else {
            (dr, di)
        }
    }

    /// det(xI - H) for an integer x, by Bareiss elimination.
    fn det_shifted(&self, x: i64) -> GaussInt {
        // Machine arithmetic when every intermediate surely fits: the worst
        // term is a product of three minors times eight, so cap the bound
        // at 1e12 (8e36 < i128 max).
        if self.hadamard_bound(x) < 1.0e12 {
            let (r, i) = self.det_shifted_i128(x);
            return GaussInt::new(BigInt::from(r), BigInt::from(i));
        }
        self.det_shifted_big(x)
    }

    fn det_shifted_big(&self, x: i64) -> GaussInt {
        let n = self.n;
        let mut a: Vec<Vec<GaussInt>> = (0..n)
            .map(|u| {
                (0..n)
                    .map(|v| {
                        if u == v {
                            GaussInt::from_int(x)
                        } else {
                            let (re, im) = self.entry(u, v).parts();
                            GaussInt::new(BigInt::from(-re), BigInt::from(-im))
                        }
                    })
                    .collect()
            })
            .collect();
        let mut sign = false;
        let mut prev = GaussInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                    return GaussInt::zero();
                };
                a.swap(k, p);
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev);
                }
                a[i][k] = GaussInt::zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        if sign {
            -det
        } else {
            det
        }
    }

    /// Splits H = A + iB into the symmetric real part and antisymmetric
    /// imaginary part, as f64 matrices.
    pub fn real_imag_parts(&self) -> (Vec<Vec<f64>>, Vec<Vec<f64>>) {
        let n = self.n;
        let mut re = vec![vec![0.0; n]; n];
        let mut im = vec![vec![0.0; n]; n];
        for u in 0..n {
            for v in 0..n {
                let (r, i) = self.entry(u, v).parts();
                re[u][v] = r as f64;
                im[u][v] = i as f64;
            }
        }
        (re, im)
    }
}

fn interpolation_points(count: usize) -> Vec<i64> {
    // 0, 1, -1, 2, -2, ... keeps magnitudes small.
    let mut pts = Vec::with_capacity(count);
    let mut k = 0i64;
    while pts.len() < count {
        if k == 0 {
            pts.push(0);
        } else {
            pts.push(k);
            if pts.len() < count {
                pts.push(-k);
            }
        }
        k += 1;
    }
    pts
}

/// Lagrange interpolation through integer points with an integer result.
fn interpolate_integer(points: &[i64], values: &[BigInt]) -> IntPolynomial {
    assert_eq!(points.len(), values.len());
    let rational = |v: &BigInt| BigRational::from(v.clone());
    let mut acc: Vec<BigRational> = vec![BigRational::zero(); points.len()];
    for (j, (xj, yj)) in points.iter().zip(values).enumerate() {
        if yj.is_zero() {
            continue;
        }
        // Basis numerator prod_{k != j} (x - x_k), expanded incrementally.
        let mut basis: Vec<BigRational> = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (k, xk) in points.iter().enumerate() {
            if k == j {
                continue;
            }
            basis = mul_linear(&basis, *xk);
            denom *= rational(&BigInt::from(xj - xk));
        }
        let weight = rational(yj) / denom;
        for (i, b) in basis.iter().enumerate() {
            acc[i] += b * &weight;
        }
    }
    let coeffs: Vec<BigInt> = acc
        .into_iter()
        .map(|c| {
            assert!(c.is_integer(), "interpolation must be exact");
            c.to_integer()
        })
        .collect();
    IntPolynomial::new(coeffs)
}

/// Multiplies a rational coefficient vector by (x - root).
fn mul_linear(coeffs: &[BigRational], root: i64) -> Vec<BigRational> {
    let r = BigRational::from(BigInt::from(root));
    let mut out = vec![BigRational::zero(); coeffs.len() + 1];
    for (i, c) in coeffs.iter().enumerate() {
        out[i + 1] += c;
        out[i] -= c * &r;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};
    use crate::poly::IntPolynomial;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(coeffs)
    }

    #[test]
    fn single_edge_and_arc() {
        let edge = HermitianMatrix::from_graph(&path(2));
        assert_eq!(edge.char_poly(), p(&[-1, 0, 1]));
        let arc = MixedGraph::build(2, &[], &[(0, 1)]).unwrap();
        let m = HermitianMatrix::from_graph(&arc);
        assert_eq!(m.entry(0, 1), GaussianUnit::I);
        assert_eq!(m.entry(1, 0), GaussianUnit::MinusI);
        // Same spectrum as an undirected edge.
        assert_eq!(m.char_poly(), p(&[-1, 0, 1]));
    }

    #[test]
    fn known_cycle_polys() {
        let c24 = HermitianMatrix::from_graph(&cycle(4, 2).unwrap());
        assert_eq!(c24.char_poly(), p(&[4, 0, -4, 0, 1]));
        let c13 = HermitianMatrix::from_graph(&cycle(3, 1).unwrap());
        assert_eq!(c13.char_poly(), p(&[0, -3, 0, 1]));
        let c3 = HermitianMatrix::from_graph(&cycle(3, 0).unwrap());
        assert_eq!(c3.char_poly(), p(&[-2, -3, 0, 1]));
    }

    #[test]
    fn hermitian_always() {
        for g in [cycle(5, 1).unwrap(), cycle(6, 2).unwrap(), path(4)] {
            assert!(HermitianMatrix::from_graph(&g).is_hermitian());
        }
    }

    #[test]
    fn conjugation_preserves_char_poly() {
        use GaussianUnit::*;
        let g = cycle(5, 1).unwrap();
        let m = HermitianMatrix::from_graph(&g);
        let theta = vec![One, I, MinusOne, MinusI, I];
        let conj = m.conjugate_by(&theta);
        assert!(conj.is_hermitian());
        assert_eq!(conj.char_poly(), m.char_poly());
    }

    #[test]
    fn minus_one_entries_reject_mixed_encoding() {
        use GaussianUnit::*;
        let m = HermitianMatrix::from_upper(2, &[((0, 1), MinusOne)]);
        assert_eq!(m.to_mixed_graph(), Err((0, 1)));
        let ok = HermitianMatrix::from_upper(2, &[((0, 1), I)]);
        assert!(ok.to_mixed_graph().is_ok());
    }
}
