//! Exact integer polynomials: arithmetic, Sturm-sequence root counting and
//! the closed-form generating polynomials for cosine spectra.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::fmt;

/// Integer-coefficient polynomial, constant term first.
///
/// Characteristic polynomials produced by this crate are always monic of
/// degree equal to the graph order; intermediate values in recursions and
/// Sturm chains need not be.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Builds from constant-first coefficients, trimming leading zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial::new(vec![BigInt::zero()])
    }

    pub fn one() -> Self {
        IntPolynomial::new(vec![BigInt::one()])
    }

    /// The monomial x.
    pub fn x() -> Self {
        IntPolynomial::from_i64(&[0, 1])
    }

    pub fn constant(c: i64) -> Self {
        IntPolynomial::from_i64(&[c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// Degree; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("non-empty coefficient list")
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn constant_term(&self) -> &BigInt {
        &self.coeffs[0]
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + bigint_to_f64(c);
        }
        acc
    }

    pub fn add(&self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        IntPolynomial::new(out)
    }

    pub fn sub(&self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        IntPolynomial::new(out)
    }

    pub fn neg(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_i64(&self, c: i64) -> IntPolynomial {
        self.scale(&BigInt::from(c))
    }

    /// Multiplies by x^k.
    pub fn shift(&self, k: usize) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        IntPolynomial::new(out)
    }

    pub fn derivative(&self) -> IntPolynomial {
        if self.degree() == 0 {
            return IntPolynomial::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect();
        IntPolynomial::new(out)
    }

    /// Exact quotient; returns `None` when `rhs` does not divide `self`.
    pub fn div_exact(&self, rhs: &IntPolynomial) -> Option<IntPolynomial> {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(IntPolynomial::zero());
        }
        if self.degree() < rhs.degree() {
            return None;
        }
        // Long division over the rationals, demanding integrality at the end.
        let mut rem: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from(c.clone()))
            .collect();
        let divisor: Vec<BigRational> = rhs
            .coeffs
            .iter()
            .map(|c| BigRational::from(c.clone()))
            .collect();
        let dl = rhs.degree();
        let lead = divisor[dl].clone();
        let qdeg = self.degree() - dl;
        let mut quot = vec![BigRational::zero(); qdeg + 1];
        for k in (0..=qdeg).rev() {
            let q = &rem[k + dl] / &lead;
            if !q.is_zero() {
                for (j, d) in divisor.iter().enumerate() {
                    let t = &q * d;
                    rem[k + j] -= t;
                }
            }
            quot[k] = q;
        }
        if rem.iter().any(|r| !r.is_zero()) {
            return None;
        }
        let mut out = Vec::with_capacity(quot.len());
        for q in quot {
            if !q.is_integer() {
                return None;
            }
            out.push(q.to_integer());
        }
        Some(IntPolynomial::new(out))
    }

    /// Largest positive integer dividing every coefficient (1 for zero poly).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = gcd_bigint(&g, c);
        }
        if g.is_zero() {
            BigInt::one()
        } else {
            g
        }
    }

    /// Divides out the content, preserving sign of the leading coefficient.
    pub fn primitive(&self) -> IntPolynomial {
        let g = self.content();
        if g.is_one() {
            return self.clone();
        }
        IntPolynomial::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// GCD of two integer polynomials, primitive with positive leading
    /// coefficient.
    pub fn gcd(&self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut a = self.primitive();
        let mut b = rhs.primitive();
        if a.is_zero() {
            return normalize_positive(b);
        }
        while !b.is_zero() {
            let r = pseudo_rem_positive(&a, &b).primitive();
            a = b;
            b = r;
        }
        normalize_positive(a)
    }

    /// Square-free part self / gcd(self, self').
    pub fn square_free_part(&self) -> IntPolynomial {
        if self.degree() == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.primitive();
        }
        self.primitive()
            .div_exact(&g)
            .expect("gcd divides the primitive part")
    }

    /// Exact number of roots in the open interval (a, b), counted with
    /// multiplicity. Roots at the endpoints are excluded.
    pub fn count_roots_in(&self, a: &BigRational, b: &BigRational) -> usize {
        assert!(a < b, "interval endpoints must satisfy a < b");
        assert!(!self.is_zero(), "root counting needs a nonzero polynomial");
        let mut p = self.primitive();
        let mut total = 0;
        // Peel multiplicity layers: each root of multiplicity m is counted
        // once per layer of gcd(p, p').
        while p.degree() > 0 {
            let g = p.gcd(&p.derivative());
            let sf = p.div_exact(&g).expect("gcd divides");
            total += count_distinct_roots(&sf, a, b);
            p = g;
        }
        total
    }

    pub fn count_roots_in_i64(&self, a: i64, b: i64) -> usize {
        self.count_roots_in(
            &BigRational::from(BigInt::from(a)),
            &BigRational::from(BigInt::from(b)),
        )
    }

    /// Multiplicity of a rational point as a root: the number of leading
    /// derivatives (including the polynomial itself) vanishing there.
    pub fn root_multiplicity(&self, x: &BigRational) -> usize {
        let mut p = self.clone();
        let mut m = 0;
        while !p.is_zero() && p.eval_rational(x).is_zero() {
            m += 1;
            p = p.derivative();
        }
        m
    }

    /// Monic square root of a perfect-square monic polynomial.
    pub fn sqrt_exact(&self) -> Option<IntPolynomial> {
        if !self.is_monic() || !self.degree().is_multiple_of(2) {
            return None;
        }
        let t = self.degree() / 2;
        let two = BigInt::from(2);
        let mut r = vec![BigInt::zero(); t + 1];
        r[t] = BigInt::one();
        // Solve top-down: coefficient of x^(2t-k) fixes r[t-k].
        for k in 1..=t {
            let mut acc = BigInt::zero();
            for i in (t - k + 1)..=t {
                let j = 2 * t - k - i;
                if j <= t && j > t - k {
                    acc += &r[i] * &r[j];
                }
            }
            let num = self.coeff(2 * t - k) - acc;
            let (q, rem) = (&num / &two, &num % &two);
            if !rem.is_zero() {
                return None;
            }
            r[t - k] = q;
        }
        let candidate = IntPolynomial::new(r);
        if candidate.mul(&candidate) == *self {
            Some(candidate)
        } else {
            None
        }
    }

    /// JSON form: integer array, constant term first.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| {
                    let v = i64::try_from(c).expect("coefficient fits in i64");
                    serde_json::Value::from(v)
                })
                .collect(),
        )
    }

    pub fn from_json(v: &serde_json::Value) -> Option<IntPolynomial> {
        let arr = v.as_array()?;
        let mut coeffs = Vec::with_capacity(arr.len());
        for item in arr {
            coeffs.push(BigInt::from(item.as_i64()?));
        }
        Some(IntPolynomial::new(coeffs))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && self.degree() > 0 {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                1 => {
                    if mag.is_one() {
                        write!(f, "x")?
                    } else {
                        write!(f, "{mag}x")?
                    }
                }
                _ => {
                    if mag.is_one() {
                        write!(f, "x^{k}")?
                    } else {
                        write!(f, "{mag}x^{k}")?
                    }
                }
            }
        }
        Ok(())
    }
}

fn bigint_to_f64(c: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or(f64::NAN)
}

fn gcd_bigint(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

fn normalize_positive(p: IntPolynomial) -> IntPolynomial {
    if p.leading().is_negative() {
        p.neg()
    } else {
        p
    }
}

/// Pseudo-remainder of a by b using only positive scaling of a, so the sign
/// pattern of the remainder is the true one. Needed for Sturm chains.
fn pseudo_rem_positive(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let mut r = a.clone();
    let lead = b.leading().clone();
    let lead_abs = lead.abs();
    while !r.is_zero() && r.degree() >= b.degree() {
        let shift = r.degree() - b.degree();
        let r_lead = r.leading().clone();
        // |lc(b)| * r  -  sign(lc(b)) * lc(r) * x^shift * b
        let signed = if lead.is_negative() { -r_lead } else { r_lead };
        r = r.scale(&lead_abs).sub(&b.shift(shift).scale(&signed));
    }
    r
}

/// Sturm chain of a square-free polynomial.
fn sturm_chain(p: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = pseudo_rem_positive(&chain[n - 2], &chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r.neg().primitive());
    }
    chain
}

fn sign_variations(chain: &[IntPolynomial], x: &BigRational) -> usize {
    let mut count = 0;
    let mut last: Option<bool> = None;
    for p in chain {
        let v = p.eval_rational(x);
        if v.is_zero() {
            continue;
        }
        let neg = v.is_negative();
        if let Some(prev) = last {
            if prev != neg {
                count += 1;
            }
        }
        last = Some(neg);
    }
    count
}

/// Distinct roots of a square-free polynomial in the open interval (a, b).
fn count_distinct_roots(sf: &IntPolynomial, a: &BigRational, b: &BigRational) -> usize {
    if sf.degree() == 0 {
        return 0;
    }
    let chain = sturm_chain(sf);
    let half_open = sign_variations(&chain, a) - sign_variations(&chain, b);
    let at_b = usize::from(sf.eval_rational(b).is_zero());
    half_open - at_b
}

/// 2*T_n(x/2): the monic trace polynomial with p_n(2 cos t) = 2 cos(n t).
pub fn trace_poly(n: usize) -> IntPolynomial {
    let mut prev = IntPolynomial::constant(2);
    if n == 0 {
        return prev;
    }
    let x = IntPolynomial::x();
    let mut cur = x.clone();
    for _ in 1..n {
        let next = x.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Characteristic polynomial of the n-vertex path.
pub fn path_poly(n: usize) -> IntPolynomial {
    let mut prev = IntPolynomial::one();
    if n == 0 {
        return prev;
    }
    let x = IntPolynomial::x();
    let mut cur = x.clone();
    for _ in 1..n {
        let next = x.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Characteristic polynomial of the all-undirected cycle: p_n - 2.
pub fn cycle_type0_poly(n: usize) -> IntPolynomial {
    trace_poly(n).sub(&IntPolynomial::constant(2))
}

/// Characteristic polynomial of the one-arc cycle: phi(P_n) - phi(P_{n-2}).
pub fn cycle_type1_poly(n: usize) -> IntPolynomial {
    assert!(n >= 2);
    path_poly(n).sub(&path_poly(n - 2))
}

/// Characteristic polynomial of the two-consecutive-arc cycle: p_n + 2.
pub fn cycle_type2_poly(n: usize) -> IntPolynomial {
    trace_poly(n).add(&IntPolynomial::constant(2))
}

/// Minimal polynomial over Q of 2 cos(2 pi / m), computed exactly by
/// dividing known factors out of p_m - 2 and taking a polynomial square
/// root. Results are cached per process.
pub fn cosine_minimal_poly(m: usize) -> IntPolynomial {
    use std::sync::Mutex;
    use std::sync::OnceLock;
    static CACHE: OnceLock<Mutex<HashMap<usize, IntPolynomial>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return p.clone();
    }
    let result = cosine_minimal_poly_uncached(m);
    cache.lock().unwrap().insert(m, result.clone());
    result
}

fn cosine_minimal_poly_uncached(m: usize) -> IntPolynomial {
    assert!(m >= 1);
    match m {
        1 => return IntPolynomial::from_i64(&[-2, 1]),
        2 => return IntPolynomial::from_i64(&[2, 1]),
        _ => {}
    }
    let mut q = cycle_type0_poly(m);
    q = q
        .div_exact(&cosine_minimal_poly(1))
        .expect("x-2 divides p_m - 2");
    if m.is_multiple_of(2) {
        q = q
            .div_exact(&cosine_minimal_poly(2))
            .expect("x+2 divides p_m - 2 for even m");
    }
    for d in 3..m {
        if m.is_multiple_of(d) {
            let psi = cosine_minimal_poly(d);
            let sq = psi.mul(&psi);
            q = q.div_exact(&sq).expect("divisor orbit factor is exact");
        }
    }
    q.sqrt_exact()
        .expect("remaining factor is a perfect square")
}

/// Monic integer polynomial whose roots are exactly the listed cosine values
/// 2 cos(p pi / q), each once. Returns `None` when the multiset is not a
/// union of full Galois orbits (no integer polynomial has those roots).
pub fn poly_from_cosine_multiset(entries: &[(u64, u64)]) -> Option<IntPolynomial> {
    // Bucket each value by the order m of the root of unity behind it.
    let mut orbit_counts: HashMap<usize, HashMap<u64, usize>> = HashMap::new();
    for &(p, q) in entries {
        assert!(q > 0, "cosine denominator must be positive");
        let (b, m) = cosine_orbit_index(p, q);
        *orbit_counts
            .entry(m as usize)
            .or_default()
            .entry(b)
            .or_insert(0usize) += 1;
    }
    let mut result = IntPolynomial::one();
    for (m, counts) in sorted_by_key(orbit_counts) {
        let orbit = full_orbit(m);
        // Every orbit member must appear, all with one common multiplicity.
        let mult = *counts.values().next().expect("non-empty bucket");
        if orbit.len() != counts.len() {
            return None;
        }
        for b in &orbit {
            if counts.get(b) != Some(&mult) {
                return None;
            }
        }
        let psi = cosine_minimal_poly(m);
        for _ in 0..mult {
            result = result.mul(&psi);
        }
    }
    Some(result)
}

/// Reduces 2 cos(p pi / q) to (b, m) with the value equal to 2 cos(2 pi b / m),
/// gcd(b, m) = 1 and 0 <= b <= m/2.
fn cosine_orbit_index(p: u64, q: u64) -> (u64, u64) {
    // p/q in units of pi == p/(2q) in units of 2*pi.
    let mut num = p % (2 * q);
    let mut den = 2 * q;
    let g = gcd_u64(num, den);
    if num == 0 {
        return (0, 1);
    }
    num /= g;
    den /= g;
    // Fold into [0, 1/2] of a full turn: cos(2 pi x) = cos(2 pi (1-x)).
    if 2 * num > den {
        num = den - num;
        let g2 = gcd_u64(num, den);
        num /= g2;
        den /= g2;
    }
    (num, den)
}

fn full_orbit(m: usize) -> Vec<u64> {
    let m64 = m as u64;
    match m {
        1 => vec![0],
        2 => vec![1],
        _ => (1..=m64 / 2).filter(|&b| gcd_u64(b, m64) == 1).collect(),
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

fn sorted_by_key<V>(map: HashMap<usize, V>) -> Vec<(usize, V)> {
    let mut v: Vec<(usize, V)> = map.into_iter().collect();
    v.sort_by_key(|(k, _)| *k);
    v
}
