//! Rigorous rational enclosures of π and cos, used to place `2cos(2πs)`
//! relative to the unit-circle roots of Δ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Default cap on working precision, in bits.
pub const DEFAULT_PRECISION_CAP: u32 = 4096;

/// Precision cap from `TWISTLAB_PRECISION_CAP`, falling back to the default.
pub fn precision_cap() -> u32 {
    std::env::var("TWISTLAB_PRECISION_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&b: &u32| b >= 32)
        .unwrap_or(DEFAULT_PRECISION_CAP)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits as usize
}

pub fn round_down(x: &BigRational, bits: u32) -> BigRational {
    let scale = pow2(bits);
    let scaled = x * BigRational::from_integer(scale.clone());
    BigRational::new(scaled.numer().div_floor(scaled.denom()), scale)
}

pub fn round_up(x: &BigRational, bits: u32) -> BigRational {
    let scale = pow2(bits);
    let scaled = x * BigRational::from_integer(scale.clone());
    let (q, r) = scaled.numer().div_mod_floor(scaled.denom());
    let q = if r.is_zero() { q } else { q + 1 };
    BigRational::new(q, scale)
}

/// `atan(1/x)` for integer `x ≥ 2`, enclosed by consecutive alternating partial sums.
fn atan_inv(x: i64, bits: u32) -> Interval {
    let x2 = BigInt::from(x * x);
    let eps = BigRational::new(BigInt::one(), pow2(bits + 8));
    let mut sum = BigRational::zero();
    let mut power = BigInt::from(x); // x^{2k+1}
    let mut k: i64 = 0;
    loop {
        let term = BigRational::new(BigInt::one(), &power * BigInt::from(2 * k + 1));
        let next_power = &power * &x2;
        let next = BigRational::new(BigInt::one(), &next_power * BigInt::from(2 * k + 3));
        if k % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        if next < eps {
            // remainder has the sign of the next term and is bounded by it
            let (lo, hi) = if k % 2 == 0 {
                (&sum - &next, sum.clone())
            } else {
                (sum.clone(), &sum + &next)
            };
            return Interval {
                lo: round_down(&lo, bits + 4),
                hi: round_up(&hi, bits + 4),
            };
        }
        power = next_power;
        k += 1;
    }
}

/// π via Machin's formula `16 atan(1/5) − 4 atan(1/239)`.
pub fn pi_enclosure(bits: u32) -> Interval {
    let a = atan_inv(5, bits + 4);
    let b = atan_inv(239, bits + 4);
    let sixteen = BigRational::from_integer(BigInt::from(16));
    let four = BigRational::from_integer(BigInt::from(4));
    Interval {
        lo: round_down(&(&sixteen * &a.lo - &four * &b.hi), bits + 2),
        hi: round_up(&(&sixteen * &a.hi - &four * &b.lo), bits + 2),
    }
}

/// cos at a rational point `0 ≤ θ ≤ 4`, by the alternating Taylor series.
fn cos_point(theta: &BigRational, bits: u32) -> Interval {
    let eps = BigRational::new(BigInt::one(), pow2(bits + 8));
    let t2 = theta * theta;
    let mut term = BigRational::one();
    let mut sum = BigRational::zero();
    let mut k: i64 = 0;
    loop {
        if k % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        let next = &term * &t2 / BigRational::from_integer(BigInt::from((2 * k + 1) * (2 * k + 2)));
        // for θ ≤ 4 the terms decrease from k = 1 on
        if k >= 2 && next < eps {
            let (lo, hi) = if k % 2 == 0 {
                (&sum - &next, sum.clone())
            } else {
                (sum.clone(), &sum + &next)
            };
            return Interval {
                lo: round_down(&lo, bits + 4),
                hi: round_up(&hi, bits + 4),
            };
        }
        term = next;
        k += 1;
    }
}

/// Enclosure of `x = 2cos(2πs)` for rational `0 < s < 1`.
pub fn two_cos_two_pi(s: &BigRational, bits: u32) -> Interval {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let one = BigRational::one();
    let s = if s > &half { &one - s } else { s.clone() };
    let two = BigRational::from_integer(BigInt::from(2));
    if s == half {
        let m2 = -two;
        return Interval {
            lo: m2.clone(),
            hi: m2,
        };
    }
    let pi = pi_enclosure(bits + 4);
    let th_lo = round_down(&(&two * &s * &pi.lo), bits + 4);
    let th_hi = round_up(&(&two * &s * &pi.hi), bits + 4);
    // cos is decreasing on [0, π]
    let c_hi = cos_point(&th_lo, bits + 2).hi;
    let c_lo = cos_point(&th_hi, bits + 2).lo;
    let lo = (&two * c_lo).max(-two.clone());
    let hi = (&two * c_hi).min(two.clone());
    Interval { lo, hi }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn f(x: &BigRational) -> f64 {
        x.to_f64().unwrap()
    }

    #[test]
    fn pi_is_enclosed() {
        for bits in [16, 64, 200] {
            let p = pi_enclosure(bits);
            assert!(f(&p.lo) <= std::f64::consts::PI && std::f64::consts::PI <= f(&p.hi) + 1e-15);
            assert!(p.width() < BigRational::new(BigInt::one(), pow2(bits)));
        }
    }

    #[test]
    fn cosine_enclosures() {
        for (num, den) in [(1i64, 6i64), (1, 4), (1, 3), (11, 21), (5, 12), (1, 1000)] {
            let s = BigRational::new(BigInt::from(num), BigInt::from(den));
            let e = two_cos_two_pi(&s, 80);
            let exact = 2.0 * (2.0 * std::f64::consts::PI * num as f64 / den as f64).cos();
            assert!(
                f(&e.lo) - 1e-12 <= exact && exact <= f(&e.hi) + 1e-12,
                "{num}/{den}"
            );
            assert!(e.width() < BigRational::new(BigInt::one(), pow2(70)));
        }
    }

    #[test]
    fn rounding_is_directed() {
        let x = BigRational::new(BigInt::from(1), BigInt::from(3));
        assert!(round_down(&x, 10) <= x && x <= round_up(&x, 10));
    }
}
