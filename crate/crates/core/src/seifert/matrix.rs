use num_bigint::BigInt;
use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::seifert::linalg::det_bareiss;
use crate::seifert::poly::{interpolate_integer_points, to_i64_coeffs, LaurentPoly};

/// A loop on the braid-closure Seifert surface: it runs through the bands of
/// two consecutive occurrences of generator `generator` (letters `first`, `second`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurfaceLoop {
    pub generator: usize,
    pub first: usize,
    pub second: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertMatrix {
    entries: Vec<Vec<i64>>,
    basis: Vec<SurfaceLoop>,
    source: BraidWord,
}

impl SeifertMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn basis(&self) -> &[SurfaceLoop] {
        &self.basis
    }

    pub fn source(&self) -> &BraidWord {
        &self.source
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    /// `V + Vᵀ`.
    pub fn symmetrized(&self) -> Vec<Vec<i64>> {
        let r = self.size();
        (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| self.entries[i][j] + self.entries[j][i])
                    .collect()
            })
            .collect()
    }

    /// `V − Vᵀ`.
    pub fn antisymmetrized(&self) -> Vec<Vec<i64>> {
        let r = self.size();
        (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| self.entries[i][j] - self.entries[j][i])
                    .collect()
            })
            .collect()
    }

    pub fn intersection_determinant(&self) -> BigInt {
        det_bareiss(to_big(&self.antisymmetrized()))
    }

    /// `det(V − tVᵀ)` as an ordinary polynomial in `t` (coefficients of `t^0..t^r`).
    pub fn alexander_raw(&self) -> Vec<i64> {
        let r = self.size();
        let values: Vec<BigInt> = (0..=r as i64)
            .map(|t| {
                let m: Vec<Vec<BigInt>> = (0..r)
                    .map(|i| {
                        (0..r)
                            .map(|j| BigInt::from(self.entries[i][j] - t * self.entries[j][i]))
                            .collect()
                    })
                    .collect();
                det_bareiss(m)
            })
            .collect();
        to_i64_coeffs(&interpolate_integer_points(&values))
            .expect("Alexander coefficients are integers within i64")
    }

    pub fn alexander_poly(&self) -> LaurentPoly {
        LaurentPoly::new(0, self.alexander_raw()).normalized()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "strands": self.source.strands(),
            "word": self.source.to_text(),
            "size": self.size(),
            "entries": self.entries,
        })
    }
}

pub(crate) fn to_big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}

/// Seifert matrix of the canonical surface of the braid closure: one disc per
/// strand, one half-twisted band per letter.
///
/// Basis: for each generator `i` (ascending), the loops through consecutive
/// occurrences of `σ_i^{±1}` in reading order. Conventions: a loop through two
/// positive bands has self-linking −1, through two negative bands +1, mixed 0;
/// consecutive loops on the same generator sharing a positive band link
/// `V[earlier][later] = 1`, sharing a negative band `V[later][earlier] = −1`;
/// interleaved loops on adjacent generators only link in the `V[upper][lower]`
/// entry, which is `1` when the upper loop starts inside the lower one and
/// `−1` when the lower loop starts inside the upper one.
pub fn seifert_matrix(w: &BraidWord) -> Result<SeifertMatrix> {
    let n = w.strands();
    let counts = w.generator_counts();
    if let Some(i) = (1..n).find(|&i| counts[i] == 0) {
        return Err(Error::MissingGenerator(i));
    }
    let letters = w.letters();
    let mut basis = Vec::new();
    for g in 1..n {
        let positions: Vec<usize> = letters
            .iter()
            .enumerate()
            .filter(|(_, l)| l.index() == g)
            .map(|(p, _)| p)
            .collect();
        for pair in positions.windows(2) {
            basis.push(SurfaceLoop {
                generator: g,
                first: pair[0],
                second: pair[1],
            });
        }
    }
    let r = basis.len();
    let mut v = vec![vec![0i64; r]; r];
    for (i, a) in basis.iter().enumerate() {
        let pa = letters[a.first].is_positive();
        let pb = letters[a.second].is_positive();
        v[i][i] = match (pa, pb) {
            (true, true) => -1,
            (false, false) => 1,
            _ => 0,
        };
        for (j, b) in basis.iter().enumerate().skip(i + 1) {
            if a.generator == b.generator {
                if a.second == b.first {
                    if letters[a.second].is_positive() {
                        v[i][j] = 1;
                    } else {
                        v[j][i] = -1;
                    }
                }
                continue;
            }
            // a has the smaller generator index (basis is sorted by generator)
            if b.generator != a.generator + 1 {
                continue;
            }
            if a.first < b.first && b.first < a.second && a.second < b.second {
                // upper loop b starts inside lower loop a
                v[j][i] = 1;
            } else if b.first < a.first && a.first < b.second && b.second < a.second {
                // lower loop a starts inside upper loop b
                v[j][i] = -1;
            }
        }
    }
    Ok(SeifertMatrix {
        entries: v,
        basis,
        source: w.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_word;

    fn sm(s: &str, n: usize) -> SeifertMatrix {
        seifert_matrix(&parse_word(s, n).unwrap()).unwrap()
    }

    #[test]
    fn trefoil_matrix() {
        let v = sm("aaa", 2);
        assert_eq!(v.entries(), &[vec![-1, 1], vec![0, -1]]);
        assert_eq!(v.symmetrized(), vec![vec![-2, 1], vec![1, -2]]);
        assert_eq!(v.alexander_poly().to_string(), "t - 1 + t^-1");
    }

    #[test]
    fn unknot_is_empty() {
        let v = sm("a", 2);
        assert_eq!(v.size(), 0);
        assert_eq!(v.alexander_poly(), LaurentPoly::one());
    }

    #[test]
    fn size_is_length_minus_generators() {
        assert_eq!(sm("(ab)^4", 3).size(), 6);
        assert_eq!(sm("(abc)^5", 4).size(), 12);
    }

    #[test]
    fn missing_generator_is_rejected() {
        assert_eq!(
            seifert_matrix(&parse_word("aa", 3).unwrap()),
            Err(Error::MissingGenerator(2))
        );
    }

    #[test]
    fn figure_eight() {
        let v = sm("aBaB", 3);
        assert_eq!(v.alexander_poly().to_string(), "t - 3 + t^-1");
    }

    #[test]
    fn knots_have_unimodular_intersection_form() {
        for (s, n) in [
            ("(ab)^4", 3),
            ("(ab)^7", 3),
            ("aBaB", 3),
            ("(abc)^5", 4),
            ("abCabcB", 4),
        ] {
            let v = sm(s, n);
            assert_eq!(parse_word(s, n).unwrap().closure_components(), 1);
            let d = v.intersection_determinant();
            assert!(d == BigInt::from(1) || d == BigInt::from(-1), "{s}: {d}");
            assert_eq!(v.alexander_poly().eval_at_one().abs(), 1, "{s}");
        }
    }
}
