//! Levine–Tristram signatures of torus knots from the jump formula.
//!
//! Signs here follow the convention in which positive torus knots have
//! positive signature; the Seifert-matrix side uses the opposite sign.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::braid::torus_braid;
use crate::error::{Error, Result};
use crate::seifert::signature::ser_rational;
use crate::seifert::{format_rational, sigma_hat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TorusParams {
    p: i64,
    q: i64,
}

impl TorusParams {
    /// Coprime `p, q ≥ 2`, reordered so that `p < q`.
    pub fn new(p: i64, q: i64) -> Result<TorusParams> {
        let err = |reason: &str| Error::TorusParams {
            p,
            q,
            reason: reason.to_string(),
        };
        if p < 2 || q < 2 {
            return Err(err("both parameters must be at least 2"));
        }
        if p.gcd(&q) != 1 {
            return Err(err("parameters must be coprime"));
        }
        let (p, q) = if p < q { (p, q) } else { (q, p) };
        Ok(TorusParams { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JumpPoint {
    /// Numerator of `x = j/(pq)`.
    pub j: i64,
    #[serde(serialize_with = "ser_rational")]
    pub x: BigRational,
    pub a: i64,
    pub b: i64,
    pub delta: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignatureProfile {
    pub params: TorusParams,
    pub jumps: Vec<JumpPoint>,
    /// `cumulative[k]` is the signature just above `jumps[k].x`.
    pub cumulative: Vec<i64>,
}

impl SignatureProfile {
    /// Value on `(jumps[k-1].x, jumps[k].x)`; `0` before the first jump.
    pub fn value_before(&self, k: usize) -> i64 {
        if k == 0 {
            0
        } else {
            self.cumulative[k - 1]
        }
    }

    pub fn max_abs(&self) -> i64 {
        self.cumulative.iter().map(|c| c.abs()).max().unwrap_or(0)
    }

    /// First jump with `x ≥ s`.
    pub fn first_jump_at_or_above(&self, s: &BigRational) -> Option<&JumpPoint> {
        self.jumps.iter().find(|jp| &jp.x >= s)
    }

    /// CSV `j,x_num,x_den,a,b,delta,cumulative`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("j,x_num,x_den,a,b,delta,cumulative\n");
        for (jp, c) in self.jumps.iter().zip(&self.cumulative) {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                jp.j,
                jp.x.numer(),
                jp.x.denom(),
                jp.a,
                jp.b,
                jp.delta,
                c
            ));
        }
        out
    }
}

fn mod_inverse(a: i64, m: i64) -> i64 {
    let e = a.extended_gcd(&m);
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(m)
}

/// All discontinuities of the signature function on `(0, 1)` with their witnesses.
pub fn torus_jumps(t: &TorusParams) -> SignatureProfile {
    let (p, q) = (t.p, t.q);
    let pq = p * q;
    let p_inv = mod_inverse(p, q);
    let mut jumps = Vec::new();
    let mut cumulative = Vec::new();
    let mut total = 0;
    for j in 1..pq {
        if j % p == 0 || j % q == 0 {
            continue;
        }
        let a = (j * p_inv).rem_euclid(q);
        let b = (j - p * a) / q;
        debug_assert_eq!(p * a + q * b, j);
        let delta = if b < 0 { 2 } else { -2 };
        total += delta;
        jumps.push(JumpPoint {
            j,
            x: BigRational::new(BigInt::from(j), BigInt::from(pq)),
            a,
            b,
            delta,
        });
        cumulative.push(total);
    }
    SignatureProfile {
        params: *t,
        jumps,
        cumulative,
    }
}

/// Signature at `e^{2πis}`: the sum of jumps below `s`.
pub fn lt_signature_torus(t: &TorusParams, s: &BigRational) -> Result<i64> {
    if !s.is_positive() || s >= &BigRational::one() {
        return Err(Error::OutOfUnitInterval(format_rational(s)));
    }
    let prof = torus_jumps(t);
    let mut sum = 0;
    for jp in &prof.jumps {
        if &jp.x == s {
            return Err(Error::OnJump(format_rational(s)));
        }
        if &jp.x < s {
            sum += jp.delta;
        }
    }
    Ok(sum)
}

/// Signature at `s = 1/2`. For coprime `p, q` one of `p/2`, `q/2` is an
/// integer or `pq` is odd, so `1/2` is never a jump.
pub fn sigma_torus(t: &TorusParams) -> i64 {
    lt_signature_torus(t, &BigRational::new(BigInt::one(), BigInt::from(2)))
        .expect("1/2 is not a jump of a torus knot")
}

pub fn sigma_hat_torus(t: &TorusParams) -> i64 {
    torus_jumps(t).max_abs()
}

pub fn genus_torus(t: &TorusParams) -> i64 {
    (t.p - 1) * (t.q - 1) / 2
}

/// Untwisting bound established by the shipped scripts, where one exists.
pub fn claimed_untwisting_bound(t: &TorusParams) -> Option<i64> {
    let (p, q) = (t.p, t.q);
    match p {
        3 => Some((2 * q + 2) / 3),
        4 => match q.rem_euclid(12) {
            1 | 3 => Some(q),
            _ => Some(q + 1),
        },
        6 => Some((3 * q + 3) / 2),
        _ => None,
    }
}

/// CSV `p,q,sigma,sigma_hat,genus,two_gt_upper` for `T(p, n)`, `n ≤ n_max`, coprime to `p`.
pub fn sigma_table_csv(p: i64, n_max: i64) -> Result<String> {
    let mut out = String::from("p,q,sigma,sigma_hat,genus,two_gt_upper\n");
    for n in 2..=n_max {
        if n == p || n.gcd(&p) != 1 {
            continue;
        }
        let t = TorusParams::new(p, n)?;
        let bound = claimed_untwisting_bound(&t)
            .map(|b| (2 * b).to_string())
            .unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            p,
            n,
            sigma_torus(&t),
            sigma_hat_torus(&t),
            genus_torus(&t),
            bound
        ));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThreeStrandCheck {
    pub n: i64,
    pub sigma_hat: i64,
    pub expected: i64,
    /// σ̂ of `(ab)^n` from its Seifert matrix, when within the cross-check cap.
    pub seifert_sigma_hat: Option<i64>,
    pub ok: bool,
}

/// Checks `σ̂(T(3,n)) = 2⌈2n/3⌉`, cross-checking against the Seifert matrix of
/// `(ab)^n` for `n ≤ seifert_cap`.
pub fn theorem1_check(n: i64, seifert_cap: i64) -> Result<ThreeStrandCheck> {
    if n < 4 || n % 3 == 0 {
        return Err(Error::TorusParams {
            p: 3,
            q: n,
            reason: "need n ≥ 4 not divisible by 3".into(),
        });
    }
    let t = TorusParams::new(3, n)?;
    let sh = sigma_hat_torus(&t);
    let expected = 2 * ((2 * n + 2) / 3);
    let seifert_sigma_hat = if n <= seifert_cap {
        Some(sigma_hat(&torus_braid(3, n as usize))?)
    } else {
        None
    };
    let ok = sh == expected && seifert_sigma_hat.map_or(true, |v| v == sh);
    Ok(ThreeStrandCheck {
        n,
        sigma_hat: sh,
        expected,
        seifert_sigma_hat,
        ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::ratio;

    fn tp(p: i64, q: i64) -> TorusParams {
        TorusParams::new(p, q).unwrap()
    }

    #[test]
    fn trefoil_jumps() {
        let prof = torus_jumps(&tp(2, 3));
        let xs: Vec<(String, i64)> = prof
            .jumps
            .iter()
            .map(|j| (format_rational(&j.x), j.delta))
            .collect();
        assert_eq!(xs, vec![("1/6".to_string(), 2), ("5/6".to_string(), -2)]);
    }

    #[test]
    fn first_jumps_past_half() {
        let half = ratio(1, 2);
        let j = torus_jumps(&tp(3, 7));
        let jp = j.first_jump_at_or_above(&half).unwrap();
        assert_eq!((jp.x.clone(), jp.delta), (ratio(11, 21), 2));
        let j = torus_jumps(&tp(3, 8));
        let jp = j.first_jump_at_or_above(&half).unwrap();
        assert_eq!((jp.x.clone(), jp.delta), (ratio(13, 24), 2));
    }

    #[test]
    fn small_signatures() {
        assert_eq!(lt_signature_torus(&tp(2, 3), &ratio(1, 2)).unwrap(), 2);
        assert_eq!(sigma_torus(&tp(3, 4)), 6);
        assert_eq!(sigma_torus(&tp(3, 5)), 8);
        assert_eq!(sigma_torus(&tp(3, 7)), 8);
        assert_eq!(lt_signature_torus(&tp(3, 7), &ratio(1, 100)).unwrap(), 0);
        assert!(lt_signature_torus(&tp(2, 3), &ratio(1, 6)).is_err());
    }

    #[test]
    fn sigma_hat_and_genus() {
        assert_eq!(sigma_hat_torus(&tp(3, 7)), 10);
        assert_eq!(sigma_hat_torus(&tp(4, 5)), 10);
        assert_eq!(sigma_hat_torus(&tp(6, 5)), 16);
        assert_eq!(genus_torus(&tp(3, 7)), 6);
        assert_eq!(genus_torus(&tp(2, 3)), 1);
        for n in [5, 7, 9, 11] {
            let g = genus_torus(&tp(4, n));
            assert_eq!(g, 3 * (n - 1) / 2);
            // 2g/3 + 2 = n + 1
            assert_eq!(2 * g / 3 + 2, n + 1);
        }
    }

    #[test]
    fn parameters_are_normalised_and_checked() {
        assert_eq!(tp(7, 3), tp(3, 7));
        assert!(TorusParams::new(3, 6).is_err());
        assert!(TorusParams::new(1, 5).is_err());
    }

    #[test]
    fn profile_is_antisymmetric_and_closes() {
        for (p, q) in [(2, 9), (3, 10), (4, 7), (5, 6)] {
            let prof = torus_jumps(&tp(p, q));
            assert_eq!(prof.jumps.len() as i64, (p - 1) * (q - 1));
            assert_eq!(*prof.cumulative.last().unwrap(), 0);
            let n = prof.jumps.len();
            for k in 0..n {
                let a = &prof.jumps[k];
                let b = &prof.jumps[n - 1 - k];
                assert_eq!(&a.x + &b.x, ratio(1, 1));
                assert_eq!(a.delta, -b.delta);
            }
        }
    }

    #[test]
    fn three_strand_signature_grows_by_eight_per_period() {
        // the period is 6, not 3: σ(T(3,7)) = 8 = σ(T(3,4)) + 2
        for n in (4..=40).filter(|n| n % 3 != 0) {
            let a = sigma_torus(&TorusParams::new(3, n).unwrap());
            let b = sigma_torus(&TorusParams::new(3, n + 6).unwrap());
            assert_eq!(b, a + 8, "n={n}");
        }
        for k in (0..=12).step_by(2) {
            assert_eq!(
                sigma_torus(&TorusParams::new(3, 3 * k + 4).unwrap()),
                6 + 4 * k
            );
        }
        assert_eq!(sigma_torus(&TorusParams::new(3, 7).unwrap()), 8);
    }

    #[test]
    fn four_and_six_strand_sigma_hat() {
        for n in (3..=99).step_by(2) {
            assert_eq!(
                sigma_hat_torus(&TorusParams::new(4, n).unwrap()),
                2 * n,
                "T(4,{n})"
            );
        }
        for n in (5..=97).filter(|n| n % 2 != 0 && n % 3 != 0) {
            assert_eq!(
                sigma_hat_torus(&TorusParams::new(6, n).unwrap()),
                3 * n + 1,
                "T(6,{n})"
            );
        }
    }

    #[test]
    fn ceiling_formula_small_cases() {
        for (n, s) in [(4, 6), (5, 8), (7, 10)] {
            let r = theorem1_check(n, 8).unwrap();
            assert!(r.ok, "{r:?}");
            assert_eq!(r.sigma_hat, s);
            assert_eq!(r.seifert_sigma_hat, Some(s));
        }
        assert!(theorem1_check(6, 0).is_err());
    }

    #[test]
    fn csv_tables() {
        let prof = torus_jumps(&tp(2, 3));
        assert_eq!(
            prof.to_csv(),
            "j,x_num,x_den,a,b,delta,cumulative\n1,1,6,2,-1,2,2\n5,5,6,1,1,-2,0\n"
        );
        let t = sigma_table_csv(3, 5).unwrap();
        assert_eq!(
            t,
            "p,q,sigma,sigma_hat,genus,two_gt_upper\n3,2,2,2,1,\n3,4,6,6,3,6\n3,5,8,8,4,8\n"
        );
    }
}
