//! Exact twist counts for the doubling recursion on `T(3·2^k, 3·2^k + 1)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AsymptoticRow {
    pub k: u32,
    #[serde(serialize_with = "ser_big")]
    pub strands: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub doubling_twists: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub per_copy_bound: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub copies: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub total_bound: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub genus: BigInt,
    #[serde(serialize_with = "crate::seifert::signature::ser_rational")]
    pub ratio: BigRational,
}

fn ser_big<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// `d(0) = 0`, `d(k) = 1 + 4·d(k-1)`.
pub fn doubling_twists(k: u32) -> BigInt {
    (0..k).fold(BigInt::zero(), |d, _| BigInt::one() + d * 4)
}

pub fn asymptotic_row(k: u32) -> AsymptoticRow {
    let two_k = BigInt::one() << k;
    let strands = &two_k * 3;
    let d = doubling_twists(k);
    // ⌈2(3·2^k + 1)/3⌉ = 2^{k+1} + 1
    let per_copy: BigInt = (BigInt::from(2) * (&strands + BigInt::one()) + 2) / 3;
    let total = &d + &two_k * &per_copy;
    let genus: BigInt = (&strands - BigInt::one()) * &strands / 2;
    let ratio = BigRational::new(total.clone(), genus.clone());
    AsymptoticRow {
        k,
        strands,
        doubling_twists: d,
        per_copy_bound: per_copy,
        copies: two_k,
        total_bound: total,
        genus,
        ratio,
    }
}

pub fn asymptotic_table(k_max: u32) -> Result<Vec<AsymptoticRow>> {
    if k_max < 1 {
        return Err(Error::FamilyParam("k_max must be at least 1".into()));
    }
    Ok((1..=k_max).map(asymptotic_row).collect())
}

/// The limit of the ratio column.
pub fn limit_ratio() -> BigRational {
    BigRational::new(BigInt::from(14), BigInt::from(27))
}

pub fn asymptotic_csv(rows: &[AsymptoticRow]) -> String {
    let mut out = String::from(
        "k,strands,doubling_twists,per_copy_bound,total_bound,genus,ratio_num,ratio_den\n",
    );
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.k,
            r.strands,
            r.doubling_twists,
            r.per_copy_bound,
            r.total_bound,
            r.genus,
            r.ratio.numer(),
            r.ratio.denom()
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_rows() {
        let rows = asymptotic_table(3).unwrap();
        let d: Vec<_> = rows.iter().map(|r| r.doubling_twists.clone()).collect();
        assert_eq!(d, vec![1.into(), 5.into(), 21.into()]);
        assert_eq!(rows[0].per_copy_bound, 5.into());
        assert_eq!(rows[0].total_bound, 11.into());
        assert_eq!(rows[0].genus, 15.into());
        assert_eq!(rows[2].total_bound, 157.into());
    }

    #[test]
    fn closed_form_and_limit() {
        for k in 0..=12u32 {
            let four = BigInt::one() << (2 * k);
            assert_eq!(doubling_twists(k), (four - 1) / 3);
        }
        let rows = asymptotic_table(12).unwrap();
        for w in rows.windows(2).skip(1) {
            assert!(w[1].ratio < w[0].ratio);
        }
        assert!(rows.iter().all(|r| r.ratio > limit_ratio()));
        let gap = &rows[9].ratio - limit_ratio();
        assert!(gap < BigRational::new(1.into(), 100.into()));
    }

    #[test]
    fn csv_golden() {
        let csv = asymptotic_csv(&asymptotic_table(2).unwrap());
        assert_eq!(
            csv,
            "k,strands,doubling_twists,per_copy_bound,total_bound,genus,ratio_num,ratio_den\n\
             1,6,1,5,11,15,11,15\n\
             2,12,5,9,41,66,41,66\n"
        );
    }
}
