//! Levine–Tristram signatures from a Seifert matrix, computed exactly.
//!
//! For `ω = e^{iθ}` and `u = tan(θ/2) > 0` the form `(1−ω)V + (1−ω̄)Vᵀ` is a
//! positive multiple of `u(V+Vᵀ) − i(V−Vᵀ)`, and `2cos θ = 2(1−u²)/(1+u²)`.
//! Off the roots of Δ the signature only depends on which root-free arc `ω`
//! lies in, so a rational `u` in the same arc gives the exact value.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::seifert::certified::{precision_cap, two_cos_two_pi};
use crate::seifert::linalg::symmetric_inertia;
use crate::seifert::matrix::{seifert_matrix, SeifertMatrix};
use crate::seifert::poly::{
    cyclotomic, euler_phi, int_div_rem_monic, symmetric_to_x, LaurentPoly, RatPoly, SturmChain,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LTValue {
    #[serde(serialize_with = "ser_rational")]
    pub s: BigRational,
    pub sigma: i64,
    pub certified: bool,
}

impl LTValue {
    /// Value in the sign convention where positive torus knots are positive.
    pub fn positive_knot_sign(&self) -> i64 {
        -self.sigma
    }
}

pub(crate) fn ser_rational<S: serde::Serializer>(
    x: &BigRational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(x))
}

pub fn format_rational(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn x_of_u(u: &BigRational) -> BigRational {
    let u2 = u * u;
    (rat(1) - &u2) * rat(2) / (rat(1) + u2)
}

/// A rational `u > 0` with `lo ≤ x(u) ≤ hi`, for `−2 ≤ lo < hi ≤ 2` or a
/// nondegenerate interval meeting `(−2, 2)`.
fn u_inside(lo: &BigRational, hi: &BigRational) -> BigRational {
    let mut ulo = BigRational::zero();
    let mut uhi = BigRational::one();
    while &x_of_u(&uhi) > hi {
        ulo = uhi.clone();
        uhi = &uhi * rat(2);
    }
    if &x_of_u(&uhi) >= lo {
        return uhi;
    }
    // x is decreasing in u: x(ulo) > hi, x(uhi) < lo
    loop {
        let mid = (&ulo + &uhi) / rat(2);
        let x = x_of_u(&mid);
        if &x > hi {
            ulo = mid;
        } else if &x < lo {
            uhi = mid;
        } else {
            return mid;
        }
    }
}

/// Signature of `a(V+Vᵀ) − i·b(V−Vᵀ)` through its real `2r × 2r` form.
fn hermitian_signature(v: &SeifertMatrix, u: &BigRational) -> Result<i64> {
    let r = v.size();
    if r == 0 {
        return Ok(0);
    }
    let a = u.numer().clone();
    let b = u.denom().clone();
    let s0 = v.symmetrized();
    let a0 = v.antisymmetrized();
    let mut m = vec![vec![BigInt::zero(); 2 * r]; 2 * r];
    for i in 0..r {
        for j in 0..r {
            let sv = &a * BigInt::from(s0[i][j]);
            let av = &b * BigInt::from(a0[i][j]);
            m[i][j] = sv.clone();
            m[i + r][j + r] = sv;
            m[i][j + r] = av.clone();
            m[i + r][j] = -av;
        }
    }
    let inertia = symmetric_inertia(m);
    if inertia.zero != 0 {
        return Err(Error::OnJump(format_rational(&x_of_u(u))));
    }
    Ok(inertia.signature() / 2)
}

fn half_signature(v: &SeifertMatrix) -> i64 {
    let s0 = v.symmetrized();
    let m = s0
        .iter()
        .map(|row| row.iter().map(|&e| BigInt::from(e)).collect())
        .collect();
    symmetric_inertia(m).signature()
}

/// `Δ(e^{2πij/m}) = 0` for `s = j/m` in lowest terms, decided by cyclotomic division.
fn is_root_of_unity_zero(delta: &LaurentPoly, s: &BigRational) -> bool {
    let m = match s.denom().to_usize() {
        Some(m) => m,
        None => return false,
    };
    let deg = (delta.high() - delta.low).max(0) as usize;
    if delta.is_zero() {
        return true;
    }
    if euler_phi(m) > deg {
        return false;
    }
    let ints: Vec<BigInt> = delta.coeffs.iter().map(|&c| BigInt::from(c)).collect();
    let (_, rem) = int_div_rem_monic(&ints, &cyclotomic(m));
    rem.iter().all(|c| c.is_zero())
}

/// Real polynomial whose roots in `(−2, 2)` are `t + t⁻¹` for the unit-circle roots of Δ.
fn x_polynomial(delta: &LaurentPoly) -> RatPoly {
    // Δ is symmetric after normalisation; centre it at t^0
    let shift = -(delta.low + delta.high()) / 2;
    let centred = LaurentPoly::new(delta.low + shift, delta.coeffs.clone());
    symmetric_to_x(&centred).square_free()
}

fn check_unit(s: &BigRational) -> Result<()> {
    if !s.is_positive() || s >= &BigRational::one() {
        return Err(Error::OutOfUnitInterval(format_rational(s)));
    }
    Ok(())
}

/// Levine–Tristram signature `σ_ω` at `ω = e^{2πis}` (internal sign: positive
/// torus knots are negative).
pub fn lt_signature(v: &SeifertMatrix, s: &BigRational) -> Result<LTValue> {
    check_unit(s)?;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let s_red = if s > &half {
        BigRational::one() - s
    } else {
        s.clone()
    };
    let value = |sigma| LTValue {
        s: s.clone(),
        sigma,
        certified: true,
    };
    if v.size() == 0 {
        return Ok(value(0));
    }
    let delta = v.alexander_poly();
    if is_root_of_unity_zero(&delta, &s_red) {
        return Err(Error::OnJump(format_rational(s)));
    }
    if s_red == half {
        return Ok(value(half_signature(v)));
    }
    let p = x_polynomial(&delta);
    let sturm = SturmChain::new(&p);
    let cap = precision_cap();
    let mut bits = 64u32;
    loop {
        let enc = two_cos_two_pi(&s_red, bits);
        let clear =
            enc.lo < enc.hi && !p.eval(&enc.lo).is_zero() && sturm.count(&enc.lo, &enc.hi) == 0;
        if clear {
            // widen to a larger root-free window so the sample has small height
            let (mut lo, mut hi) = (enc.lo.clone(), enc.hi.clone());
            let mut w = BigRational::new(BigInt::one(), BigInt::from(1024));
            loop {
                let lo2 = (&lo - &w).max(rat(-2));
                let hi2 = (&hi + &w).min(rat(2));
                if p.eval(&lo2).is_zero()
                    || sturm.count(&lo2, &hi2) != 0
                    || (lo2 == lo && hi2 == hi)
                {
                    break;
                }
                lo = lo2;
                hi = hi2;
                w = &w * rat(2);
            }
            let u = u_inside(&lo, &hi);
            return Ok(value(hermitian_signature(v, &u)?));
        }
        if bits >= cap {
            return Err(Error::PrecisionExhausted { bits });
        }
        bits = (bits * 2).min(cap);
    }
}

/// Convenience: `σ_ω` of a braid closure.
pub fn lt_signature_word(w: &BraidWord, s: &BigRational) -> Result<LTValue> {
    lt_signature(&seifert_matrix(w)?, s)
}

/// Isolating intervals `(a, b)` with non-root rational endpoints for the real
/// roots of `p` in `(−2, 2)`, pairwise disjoint and ordered.
fn isolate_roots(p: &RatPoly) -> Result<Vec<(BigRational, BigRational)>> {
    let sturm = SturmChain::new(p);
    let lo = rat(-2);
    let hi = rat(2);
    if p.eval(&lo).is_zero() || p.eval(&hi).is_zero() {
        return Err(Error::OnJump("±1".into()));
    }
    let cap = precision_cap() as usize;
    let mut out = Vec::new();
    let mut stack = vec![(lo, hi, 0usize)];
    while let Some((a, b, depth)) = stack.pop() {
        let c = sturm.count(&a, &b);
        if c == 0 {
            continue;
        }
        if c == 1 {
            out.push((a, b));
            continue;
        }
        if depth > cap {
            return Err(Error::PrecisionExhausted { bits: cap as u32 });
        }
        let m = non_root_split(p, &a, &b);
        stack.push((m.clone(), b, depth + 1));
        stack.push((a, m, depth + 1));
    }
    out.sort();
    let halve = |(a, b): (BigRational, BigRational)| {
        let m = non_root_split(p, &a, &b);
        if sturm.count(&a, &m) == 1 {
            (a, m)
        } else {
            (m, b)
        }
    };
    // keep ±2 and neighbouring intervals strictly apart so every gap has width
    if let Some(first) = out.first_mut() {
        while first.0 <= rat(-2) {
            *first = halve(first.clone());
        }
    }
    if let Some(last) = out.last_mut() {
        while last.1 >= rat(2) {
            *last = halve(last.clone());
        }
    }
    let mut i = 0;
    while i + 1 < out.len() {
        if out[i].1 < out[i + 1].0 {
            i += 1;
            continue;
        }
        out[i + 1] = halve(out[i + 1].clone());
        out[i] = halve(out[i].clone());
    }
    Ok(out)
}

/// A point strictly inside `(a, b)` near the midpoint that is not a root of `p`.
fn non_root_split(p: &RatPoly, a: &BigRational, b: &BigRational) -> BigRational {
    let width = b - a;
    for k in 0.. {
        // midpoint, then 1/2 ± 1/(k+3) fractions of the interval
        let t = if k == 0 {
            BigRational::new(BigInt::one(), BigInt::from(2))
        } else {
            BigRational::new(BigInt::from(k + 2), BigInt::from(2 * k + 5))
        };
        let m = a + &width * t;
        if !p.eval(&m).is_zero() {
            return m;
        }
    }
    unreachable!()
}

/// One root-free arc of the signature function, in `x = 2cos(2πs)` coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Arc {
    /// Sample abscissa strictly inside the arc.
    pub sample_u: BigRational,
    /// Approximate arc ends as fractions of a turn, ascending in `s ∈ [0, 1/2]`.
    pub s_lo: f64,
    pub s_hi: f64,
    pub sigma: i64,
}

fn s_of_x(x: f64) -> f64 {
    (x / 2.0).clamp(-1.0, 1.0).acos() / (2.0 * std::f64::consts::PI)
}

/// The signature on each arc between consecutive unit-circle roots of Δ, for
/// `s ∈ (0, 1/2]` (the function is symmetric under `s ↔ 1 − s`).
pub fn signature_arcs(v: &SeifertMatrix) -> Result<Vec<Arc>> {
    arcs_with(v, true)
}

fn arcs_with(v: &SeifertMatrix, sharp_ends: bool) -> Result<Vec<Arc>> {
    if v.size() == 0 {
        return Ok(vec![Arc {
            sample_u: BigRational::one(),
            s_lo: 0.0,
            s_hi: 0.5,
            sigma: 0,
        }]);
    }
    let p = x_polynomial(&v.alexander_poly());
    let mut roots = isolate_roots(&p)?;
    if sharp_ends {
        let sturm = SturmChain::new(&p);
        let eps = BigRational::new(BigInt::one(), BigInt::one() << 60usize);
        for iv in roots.iter_mut() {
            while &iv.1 - &iv.0 > eps {
                let m = non_root_split(&p, &iv.0, &iv.1);
                if sturm.count(&iv.0, &m) == 1 {
                    iv.1 = m;
                } else {
                    iv.0 = m;
                }
            }
        }
    }
    // gaps in decreasing x = increasing s
    let mut gaps = Vec::new();
    let mut upper = rat(2);
    let mut upper_f = 2.0f64;
    for (a, b) in roots.iter().rev() {
        let root_f = ((a + b) / rat(2)).to_f64().unwrap_or(0.0);
        gaps.push((b.clone(), upper.clone(), root_f, upper_f));
        upper = a.clone();
        upper_f = root_f;
    }
    gaps.push((rat(-2), upper, -2.0, upper_f));
    let mut arcs = Vec::new();
    for (lo, hi, lo_f, hi_f) in gaps {
        let u = u_inside(&lo, &hi);
        arcs.push(Arc {
            sigma: hermitian_signature(v, &u)?,
            sample_u: u,
            s_lo: s_of_x(hi_f),
            s_hi: s_of_x(lo_f),
        });
    }
    Ok(arcs)
}

/// `max |σ_ω|` over ω off the roots of Δ.
pub fn sigma_hat_matrix(v: &SeifertMatrix) -> Result<i64> {
    Ok(arcs_with(v, false)?
        .iter()
        .map(|a| a.sigma.abs())
        .max()
        .unwrap_or(0))
}

pub fn sigma_hat(w: &BraidWord) -> Result<i64> {
    let comps = w.closure_components();
    if comps != 1 {
        return Err(Error::NotAKnot { components: comps });
    }
    sigma_hat_matrix(&seifert_matrix(w)?)
}

/// Signature-profile CSV rows `(s_lo, s_hi, sigma)` over `(0, 1/2]`, internal sign.
pub fn profile_csv(v: &SeifertMatrix) -> Result<String> {
    let mut out = String::from("s_lo,s_hi,sigma\n");
    for a in signature_arcs(v)? {
        out.push_str(&format!("{:.12},{:.12},{}\n", a.s_lo, a.s_hi, a.sigma));
    }
    Ok(out)
}

/// Exact `s = num/den`, a convenience for callers holding integers.
pub fn ratio(num: i64, den: i64) -> BigRational {
    let g = num.gcd(&den);
    BigRational::new(BigInt::from(num / g), BigInt::from(den / g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_word;

    fn sm(s: &str, n: usize) -> SeifertMatrix {
        seifert_matrix(&parse_word(s, n).unwrap()).unwrap()
    }

    #[test]
    fn trefoil_at_half() {
        let v = sm("aaa", 2);
        assert_eq!(lt_signature(&v, &ratio(1, 2)).unwrap().sigma, -2);
        assert_eq!(lt_signature(&v, &ratio(1, 10)).unwrap().sigma, 0);
        assert_eq!(lt_signature(&v, &ratio(1, 5)).unwrap().sigma, -2);
        assert!(matches!(
            lt_signature(&v, &ratio(1, 6)),
            Err(Error::OnJump(_))
        ));
    }

    #[test]
    fn empty_matrix_is_zero() {
        let v = sm("a", 2);
        assert_eq!(lt_signature(&v, &ratio(1, 3)).unwrap().sigma, 0);
        assert_eq!(sigma_hat(&parse_word("a", 2).unwrap()).unwrap(), 0);
    }

    #[test]
    fn rejects_s_outside_unit_interval() {
        let v = sm("aaa", 2);
        assert!(lt_signature(&v, &ratio(3, 2)).is_err());
        assert!(lt_signature(&v, &BigRational::zero()).is_err());
    }

    #[test]
    fn jump_across_eleven_twentyfirsts() {
        let v = sm("(ab)^7", 3);
        let eps = ratio(1, 1000);
        let x = ratio(11, 21);
        let below = lt_signature(&v, &(&x - &eps)).unwrap().sigma;
        let above = lt_signature(&v, &(&x + &eps)).unwrap().sigma;
        assert_eq!((below.abs() - above.abs()).abs(), 2);
        assert!(lt_signature(&v, &x).is_err());
    }

    #[test]
    fn sigma_hat_small_knots() {
        assert_eq!(sigma_hat(&parse_word("aaa", 2).unwrap()).unwrap(), 2);
        assert_eq!(sigma_hat(&parse_word("(ab)^7", 3).unwrap()).unwrap(), 10);
        assert_eq!(sigma_hat(&parse_word("(ab)^4", 3).unwrap()).unwrap(), 6);
        assert_eq!(sigma_hat(&parse_word("aBaB", 3).unwrap()).unwrap(), 0);
    }

    #[test]
    fn symmetric_in_s() {
        let v = sm("(ab)^5", 3);
        for (a, b) in [(1, 7), (2, 9), (3, 8)] {
            let s = ratio(a, b);
            let t = BigRational::one() - &s;
            assert_eq!(
                lt_signature(&v, &s).unwrap(),
                LTValue {
                    s: s.clone(),
                    ..lt_signature(&v, &t).unwrap()
                }
            );
        }
    }

    #[test]
    fn profile_has_header_and_rows() {
        let csv = profile_csv(&sm("aaa", 2)).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "s_lo,s_hi,sigma");
        assert_eq!(lines.len(), 3);
        assert!(lines[2].ends_with(",-2"));
    }
}
