//! Numerical eigenvalues via a Jacobi solver on the real embedding,
//! closed-form spectra for the named families, cospectrality and
//! interlacing checks, and the exact "has an eigenvalue outside (-2, 2)"
//! decision.

use crate::charpoly::char_poly_exact;
use crate::error::SpectraError;
use crate::graph::MixedGraph;
use crate::matrix::HermitianMatrix;
use crate::poly::{
    cycle_type0_poly, cycle_type1_poly, cycle_type2_poly, path_poly, poly_from_cosine_multiset,
    IntPolynomial,
};
use serde_json::{json, Value};

pub const DEFAULT_TOL: f64 = 1e-11;

/// A real spectrum: floating values sorted descending, optionally with the
/// exact form 2cos(p pi / q) of every entry.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    exact: Option<Vec<(u64, u64)>>,
}

impl Spectrum {
    pub fn from_values(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
        Spectrum {
            values,
            exact: None,
        }
    }

    /// Builds from exact cosine entries 2cos(p pi / q).
    pub fn from_exact(mut entries: Vec<(u64, u64)>) -> Self {
        // Sort by descending value, i.e. ascending angle p/q.
        entries.sort_by(|a, b| (a.0 * b.1).cmp(&(b.0 * a.1)));
        let values = entries
            .iter()
            .map(|&(p, q)| 2.0 * (std::f64::consts::PI * p as f64 / q as f64).cos())
            .collect();
        Spectrum {
            values,
            exact: Some(entries),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn exact_entries(&self) -> Option<&[(u64, u64)]> {
        self.exact.as_deref()
    }

    /// Largest eigenvalue.
    pub fn lambda_1(&self) -> f64 {
        self.values[0]
    }

    pub fn min(&self) -> f64 {
        *self.values.last().expect("non-empty spectrum")
    }

    /// The monic integer polynomial with exactly these cosine roots, when an
    /// exact form is attached and Galois-closed.
    pub fn exact_poly(&self) -> Option<IntPolynomial> {
        poly_from_cosine_multiset(self.exact.as_deref()?)
    }

    pub fn matches(&self, other: &Spectrum, tol: f64) -> bool {
        self.values.len() == other.values.len()
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(a, b)| (a - b).abs() <= tol)
    }

    pub fn to_json(&self) -> Value {
        match &self.exact {
            Some(entries) => json!({
                "values": self.values,
                "exact": entries.iter().map(|&(p, q)| vec![p, q]).collect::<Vec<_>>(),
            }),
            None => json!({ "values": self.values }),
        }
    }
}

/// Eigenvalues of a Hermitian unit matrix to the requested tolerance.
///
/// H = A + iB embeds as the symmetric 2n x 2n block matrix [[A, -B], [B, A]]
/// whose spectrum is that of H doubled; a cyclic Jacobi sweep diagonalizes
/// it and the doubled values collapse by pairing.
pub fn eigenvalues(h: &HermitianMatrix, tol: f64) -> Result<Spectrum, SpectraError> {
    let n = h.dim();
    if n == 0 {
        return Ok(Spectrum::from_values(vec![]));
    }
    let (re, im) = h.real_imag_parts();
    let dim = 2 * n;
    let mut a = vec![vec![0.0f64; dim]; dim];
    for u in 0..n {
        for v in 0..n {
            a[u][v] = re[u][v];
            a[n + u][n + v] = re[u][v];
            a[u][n + v] = -im[u][v];
            a[n + u][v] = im[u][v];
        }
    }
    let mut doubled = jacobi_eigenvalues(&mut a, tol)?;
    doubled.sort_by(|x, y| y.partial_cmp(x).expect("finite eigenvalues"));
    let collapsed = (0..n)
        .map(|k| (doubled[2 * k] + doubled[2 * k + 1]) / 2.0)
        .collect();
    Ok(Spectrum::from_values(collapsed))
}

pub fn graph_eigenvalues(g: &MixedGraph, tol: f64) -> Result<Spectrum, SpectraError> {
    eigenvalues(&HermitianMatrix::from_graph(g), tol)
}

const MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi on a symmetric matrix; returns the diagonal after
/// convergence of the off-diagonal norm.
#[allow(clippy::needless_range_loop)]
fn jacobi_eigenvalues(a: &mut [Vec<f64>], tol: f64) -> Result<Vec<f64>, SpectraError> {
    let n = a.len();
    if n == 1 {
        return Ok(vec![a[0][0]]);
    }
    let scale: f64 = {
        let frob: f64 = a
            .iter()
            .flat_map(|row| row.iter().map(|x| x * x))
            .sum::<f64>()
            .sqrt();
        frob.max(1.0)
    };
    for _ in 0..MAX_SWEEPS {
        let off: f64 = {
            let mut s = 0.0;
            for p in 0..n {
                for q in p + 1..n {
                    s += a[p][q] * a[p][q];
                }
            }
            s.sqrt()
        };
        if off <= tol * scale {
            return Ok((0..n).map(|i| a[i][i]).collect());
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                if a[p][q].abs() <= f64::EPSILON * scale {
                    continue;
                }
                let apq = a[p][q];
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = {
                    let t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                    if theta < 0.0 {
                        -t
                    } else {
                        t
                    }
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    Err(SpectraError::NoConvergence { sweeps: MAX_SWEEPS })
}

/// A named family with a closed-form spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    /// Path on n vertices.
    Path(usize),
    /// All-undirected cycle.
    Cycle0(usize),
    /// One-arc cycle.
    Cycle1(usize),
    /// Two-arc cycle.
    Cycle2(usize),
    /// Two-arc 4-cycle with a pendant t-path.
    Gt(usize),
    /// Two-arc 4-cycle with pendant t- and (t+m)-paths on opposite vertices.
    Gttm(usize, usize),
    /// The n-vertex near-path tree with spectrum {0} u 2cos((2k+1)pi/(2n-2)).
    Dn(usize),
}

/// Exact spectrum of a closed-form family.
pub fn closed_form(family: ClosedForm) -> Spectrum {
    let entries: Vec<(u64, u64)> = match family {
        ClosedForm::Path(n) => {
            let n = n as u64;
            (1..=n).map(|k| (k, n + 1)).collect()
        }
        ClosedForm::Cycle0(n) => {
            let n = n as u64;
            (0..n).map(|k| (2 * k, n)).collect()
        }
        ClosedForm::Cycle2(n) => {
            let n = n as u64;
            (0..n).map(|k| (2 * k + 1, n)).collect()
        }
        ClosedForm::Cycle1(n) => {
            let n = n as u64;
            (0..n).map(|k| (2 * k + 1, 2 * n)).collect()
        }
        ClosedForm::Gt(t) => {
            let t = t as u64;
            let mut v: Vec<(u64, u64)> = (0..=t + 1).map(|k| (2 * k + 1, 2 * t + 4)).collect();
            v.push((1, 4));
            v.push((3, 4));
            v
        }
        ClosedForm::Gttm(t, m) => {
            let (t, m) = (t as u64, m as u64);
            let mut v: Vec<(u64, u64)> = (0..=t + m + 1)
                .map(|k| (2 * k + 1, 2 * t + 2 * m + 4))
                .collect();
            v.extend((0..=t + 1).map(|k| (2 * k + 1, 2 * t + 4)));
            v
        }
        ClosedForm::Dn(n) => {
            let n = n as u64;
            let mut v: Vec<(u64, u64)> = vec![(1, 2)];
            v.extend((0..=n - 2).map(|k| (2 * k + 1, 2 * n - 2)));
            v
        }
    };
    Spectrum::from_exact(normalize_entries(entries))
}

/// The matching exact characteristic polynomial of a closed-form family.
pub fn closed_form_poly(family: ClosedForm) -> IntPolynomial {
    match family {
        ClosedForm::Path(n) => path_poly(n),
        ClosedForm::Cycle0(n) => cycle_type0_poly(n),
        ClosedForm::Cycle1(n) => cycle_type1_poly(n),
        ClosedForm::Cycle2(n) => cycle_type2_poly(n),
        ClosedForm::Gt(t) => cycle_type1_poly(t + 2).mul(&IntPolynomial::from_i64(&[-2, 0, 1])),
        ClosedForm::Gttm(t, m) => cycle_type1_poly(t + 2).mul(&cycle_type1_poly(t + m + 2)),
        ClosedForm::Dn(n) => IntPolynomial::x().mul(&cycle_type1_poly(n - 1)),
    }
}

/// Folds angle fractions into [0, 1] and reduces them.
fn normalize_entries(entries: Vec<(u64, u64)>) -> Vec<(u64, u64)> {
    entries
        .into_iter()
        .map(|(p, q)| {
            let mut p = p % (2 * q);
            if p > q {
                p = 2 * q - p;
            }
            let g = gcd(p, q);
            if p == 0 {
                (0, 1)
            } else {
                (p / g, q / g)
            }
        })
        .collect()
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Exact cospectrality: equality of integer characteristic polynomials.
/// Graphs of different order are never cospectral.
pub fn cospectral(g1: &MixedGraph, g2: &MixedGraph) -> bool {
    g1.order() == g2.order() && char_poly_exact(g1) == char_poly_exact(g2)
}

/// Checks the interlacing inequalities lambda_i(g) >= lambda_i(<S>) >=
/// lambda_{i + n - m}(g) for the subgraph induced on S, within `tol`.
pub fn interlaces(g: &MixedGraph, subset: &[usize], tol: f64) -> Result<bool, SpectraError> {
    let outer = graph_eigenvalues(g, DEFAULT_TOL)?;
    let inner = graph_eigenvalues(&g.induced(subset), DEFAULT_TOL)?;
    let n = outer.len();
    let m = inner.len();
    assert!(m <= n);
    for i in 0..m {
        if outer.values()[i] < inner.values()[i] - tol {
            return Ok(false);
        }
        if inner.values()[i] < outer.values()[i + n - m] - tol {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact decision of the "(-2, 2)-out" property: some eigenvalue lies at or
/// beyond +-2, equivalently fewer than n roots fall strictly inside.
pub fn is_out(g: &MixedGraph) -> bool {
    let phi = char_poly_exact(g);
    phi.count_roots_in_i64(-2, 2) < g.order()
}

pub fn is_out_poly(phi: &IntPolynomial) -> bool {
    phi.count_roots_in_i64(-2, 2) < phi.degree()
}
