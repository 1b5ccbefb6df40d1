//! Exact univariate polynomials: integer Laurent polynomials for Δ, rational
//! polynomials with Sturm sequences for real-root counting.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

/// Integer Laurent polynomial `Σ coeffs[k] t^{low+k}`, trimmed at both ends.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LaurentPoly {
    pub low: i32,
    pub coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly {
            low: 0,
            coeffs: vec![1],
        }
    }

    pub fn new(low: i32, coeffs: Vec<i64>) -> LaurentPoly {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn high(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        let k = exp - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            0
        } else {
            self.coeffs[k as usize]
        }
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn eval_at_minus_one(&self) -> i64 {
        (self.low..=self.high())
            .map(|e| if e.rem_euclid(2) == 0 { 1 } else { -1 } * self.coeff(e))
            .sum()
    }

    /// Up to units `±t^k`: centre the exponents and make the top coefficient positive.
    pub fn normalized(&self) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        let span = self.coeffs.len() as i32 - 1;
        let sign = if *self.coeffs.last().unwrap() < 0 {
            -1
        } else {
            1
        };
        // for odd spans the centring is not symmetric; keep the lower half-step
        let low = -(span / 2) - (span % 2);
        LaurentPoly::new(low, self.coeffs.iter().map(|c| c * sign).collect())
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev()) && self.low == -self.high()
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.low + other.low, out)
    }

    /// Coefficients of `t^{-low}·p` as an ordinary polynomial.
    pub fn to_int_poly(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(|&c| BigInt::from(c)).collect()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for e in (self.low..=self.high()).rev() {
            let c = self.coeff(e);
            if c == 0 {
                continue;
            }
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            first = false;
            let mono = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{}", e),
            };
            if mono.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag == 1 {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}{}", mag, mono)?;
            }
        }
        Ok(())
    }
}

/// Dense rational polynomial, `coeffs[k]` multiplies `x^k`, trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> RatPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[BigInt]) -> RatPoly {
        RatPoly::new(
            coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (RatPoly::new(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = &rem[k] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let idx = k - dd + j;
                rem[idx] = &rem[idx] - &c * dc;
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    pub fn monic(&self) -> RatPoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lead) => {
                let lead = lead.clone();
                RatPoly::new(self.coeffs.iter().map(|c| c / &lead).collect())
            }
        }
    }

    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Square-free part `p / gcd(p, p')`.
    pub fn square_free(&self) -> RatPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.clone();
        }
        self.div_rem(&g).0
    }
}

/// Sturm chain of a polynomial; counts distinct real roots in half-open intervals.
pub struct SturmChain {
    chain: Vec<RatPoly>,
}

impl SturmChain {
    pub fn new(p: &RatPoly) -> SturmChain {
        let mut chain = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(d);
            loop {
                let n = chain.len();
                let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(r.neg());
            }
        }
        SturmChain { chain }
    }

    pub fn poly(&self) -> &RatPoly {
        &self.chain[0]
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.chain {
            let v = p.eval(x);
            let s = if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            };
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct roots in `(a, b]`; requires `p(a) ≠ 0`.
    pub fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }
}

/// `t^m − 1` divided by all `Φ_d`, `d | m`, `d < m`.
pub fn cyclotomic(m: usize) -> Vec<BigInt> {
    // Φ_m = Π_{d|m} (t^d − 1)^{μ(m/d)}
    let mut num: Vec<BigInt> = vec![BigInt::one()];
    let mut den: Vec<BigInt> = vec![BigInt::one()];
    for d in 1..=m {
        if m % d != 0 {
            continue;
        }
        let mu = mobius(m / d);
        if mu == 0 {
            continue;
        }
        let mut f = vec![BigInt::zero(); d + 1];
        f[0] = BigInt::from(-1);
        f[d] = BigInt::one();
        if mu == 1 {
            num = int_mul(&num, &f);
        } else {
            den = int_mul(&den, &f);
        }
    }
    let (q, r) = int_div_rem_monic(&num, &den);
    debug_assert!(r.iter().all(|c| c.is_zero()));
    q
}

fn mobius(mut n: usize) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

pub fn euler_phi(mut n: usize) -> usize {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn int_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Division by a monic integer polynomial.
pub fn int_div_rem_monic(a: &[BigInt], d: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    let dd = d.len() - 1;
    assert!(d[dd].is_one(), "divisor must be monic");
    let mut rem = a.to_vec();
    if rem.len() <= dd {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let c = rem[k].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dc) in d.iter().enumerate() {
            let idx = k - dd + j;
            rem[idx] -= &c * dc;
        }
        quot[k - dd] = c;
    }
    rem.truncate(dd);
    (quot, rem)
}

/// Polynomial through `(x_k, y_k)` for `x_k = 0,1,…,n` (Newton form, exact).
pub fn interpolate_integer_points(values: &[BigInt]) -> Vec<BigRational> {
    let n = values.len();
    let mut dd: Vec<BigRational> = values
        .iter()
        .map(|v| BigRational::from_integer(v.clone()))
        .collect();
    for level in 1..n {
        for k in (level..n).rev() {
            dd[k] = (&dd[k] - &dd[k - 1]) / BigRational::from_integer(BigInt::from(level));
        }
    }
    // expand Σ dd[k] Π_{j<k} (x − j)
    let mut coeffs = vec![BigRational::zero(); n];
    let mut basis = vec![BigRational::one()];
    for (k, c) in dd.iter().enumerate() {
        for (i, b) in basis.iter().enumerate() {
            coeffs[i] = &coeffs[i] + c * b;
        }
        // basis *= (x − k)
        let mut next = vec![BigRational::zero(); basis.len() + 1];
        for (i, b) in basis.iter().enumerate() {
            next[i + 1] = &next[i + 1] + b;
            next[i] = &next[i] - b * BigRational::from_integer(BigInt::from(k));
        }
        basis = next;
    }
    coeffs
}

/// Rewrite a symmetric Laurent polynomial in `x = t + t⁻¹`.
pub fn symmetric_to_x(p: &LaurentPoly) -> RatPoly {
    let g = p.high().max(0) as usize;
    // D_0 = 2, D_1 = x, D_{k+1} = x D_k − D_{k−1}; t^k + t^{-k} = D_k(x)
    let mut d: Vec<Vec<BigInt>> = vec![vec![BigInt::from(2)], vec![BigInt::zero(), BigInt::one()]];
    for k in 1..g {
        let mut next = vec![BigInt::zero(); k + 2];
        for (i, c) in d[k].iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in d[k - 1].iter().enumerate() {
            next[i] -= c;
        }
        d.push(next);
    }
    let mut out = vec![BigInt::zero(); g + 1];
    out[0] += BigInt::from(p.coeff(0));
    for k in 1..=g {
        let c = BigInt::from(p.coeff(k as i32));
        for (i, dc) in d[k].iter().enumerate() {
            out[i] += &c * dc;
        }
    }
    RatPoly::from_ints(&out)
}

pub fn to_i64_coeffs(coeffs: &[BigRational]) -> Option<Vec<i64>> {
    coeffs
        .iter()
        .map(|c| {
            if c.denom().is_one() {
                c.numer().to_i64()
            } else {
                None
            }
        })
        .collect()
}

pub fn gcd_u(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn laurent_display_and_normalize() {
        let p = LaurentPoly::new(0, vec![-1, 1, -1]);
        let n = p.normalized();
        assert_eq!(n, LaurentPoly::new(-1, vec![1, -1, 1]));
        assert_eq!(n.to_string(), "t - 1 + t^-1");
        assert!(n.is_symmetric());
        assert_eq!(LaurentPoly::one().to_string(), "1");
    }

    #[test]
    fn cyclotomic_polynomials() {
        let c = |m| {
            cyclotomic(m)
                .iter()
                .map(|x| x.to_i64().unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(c(1), vec![-1, 1]);
        assert_eq!(c(2), vec![1, 1]);
        assert_eq!(c(6), vec![1, -1, 1]);
        assert_eq!(c(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic(105).len() - 1, euler_phi(105));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        // 3 − 2x + x^3
        let vals: Vec<BigInt> = (0..5i64)
            .map(|x| BigInt::from(3 - 2 * x + x * x * x))
            .collect();
        let c = interpolate_integer_points(&vals);
        assert_eq!(to_i64_coeffs(&c).unwrap(), vec![3, -2, 0, 1, 0]);
    }

    #[test]
    fn sturm_counts_roots() {
        // (x − 1)^2 (x + 1) = x^3 − x^2 − x + 1: two distinct roots
        let p = RatPoly::new(vec![r(1), r(-1), r(-1), r(1)]);
        let s = SturmChain::new(&p);
        assert_eq!(s.count(&r(-2), &r(2)), 2);
        assert_eq!(s.count(&r(0), &r(2)), 1);
        assert_eq!(p.square_free().degree(), Some(2));
    }

    #[test]
    fn chebyshev_substitution() {
        // t − 1 + t^-1 = x − 1
        let p = LaurentPoly::new(-1, vec![1, -1, 1]);
        assert_eq!(symmetric_to_x(&p), RatPoly::new(vec![r(-1), r(1)]));
        // t^2 + t^-2 = x^2 − 2
        let p = LaurentPoly::new(-2, vec![1, 0, 0, 0, 1]);
        assert_eq!(symmetric_to_x(&p), RatPoly::new(vec![r(-2), r(0), r(1)]));
    }
}
