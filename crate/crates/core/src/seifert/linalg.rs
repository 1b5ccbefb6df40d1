use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Fraction-free (Bareiss) determinant of a square integer matrix.
pub fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut sign = 1i32;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

/// Inertia of a symmetric integer matrix by fraction-free congruence elimination.
///
/// After `k` pivots the working matrix holds `d_k` times the Schur complement,
/// where `d_k` is the product of the true pivots, so every division is exact and
/// each true pivot has sign `sign(d_{k+1}) · sign(d_k)`.
pub fn symmetric_inertia(mut m: Vec<Vec<BigInt>>) -> Inertia {
    let mut out = Inertia {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    let mut prev = BigInt::one();
    while !m.is_empty() {
        let n = m.len();
        let pivot = match (0..n).find(|&i| !m[i][i].is_zero()) {
            Some(p) => p,
            None => match find_offdiagonal(&m) {
                Some((i, j)) => {
                    // row/col i += row/col j makes the (i,i) entry 2 m[i][j] ≠ 0
                    for k in 0..n {
                        let v = m[j][k].clone();
                        m[i][k] += v;
                    }
                    for k in 0..n {
                        let v = m[k][j].clone();
                        m[k][i] += v;
                    }
                    i
                }
                None => {
                    out.zero += n;
                    break;
                }
            },
        };
        let p = m[pivot][pivot].clone();
        if p.is_positive() == prev.is_positive() {
            out.positive += 1;
        } else {
            out.negative += 1;
        }
        let row = m[pivot].clone();
        let mut next = Vec::with_capacity(n - 1);
        for i in (0..n).filter(|&i| i != pivot) {
            let c = &m[i][pivot];
            let mut r = Vec::with_capacity(n - 1);
            for j in (0..n).filter(|&j| j != pivot) {
                let v = &p * &m[i][j] - c * &row[j];
                r.push(v / &prev);
            }
            next.push(r);
        }
        prev = p;
        m = next;
    }
    out
}

fn find_offdiagonal(m: &[Vec<BigInt>]) -> Option<(usize, usize)> {
    let n = m.len();
    for i in 0..n {
        for j in 0..n {
            if i != j && !m[i][j].is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        assert_eq!(det_bareiss(ints(&[&[2, 1], &[1, 2]])), BigInt::from(3));
        assert_eq!(
            det_bareiss(ints(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]])),
            BigInt::from(-2)
        );
        assert_eq!(det_bareiss(ints(&[&[1, 2], &[2, 4]])), BigInt::zero());
        assert_eq!(det_bareiss(Vec::new()), BigInt::from(1));
    }

    #[test]
    fn inertia_of_small_forms() {
        // trefoil V + V^T
        let i = symmetric_inertia(ints(&[&[-2, 1], &[1, -2]]));
        assert_eq!((i.positive, i.negative, i.zero), (0, 2, 0));
        // hyperbolic plane: zero diagonal
        let i = symmetric_inertia(ints(&[&[0, 1], &[1, 0]]));
        assert_eq!((i.positive, i.negative, i.zero), (1, 1, 0));
        let i = symmetric_inertia(ints(&[&[1, 1, 0], &[1, 1, 0], &[0, 0, -3]]));
        assert_eq!((i.positive, i.negative, i.zero), (1, 1, 1));
        // pivots 2, then 1/2 and -7/2 after elimination
        let i = symmetric_inertia(ints(&[&[2, 1, 1], &[1, 1, 0], &[1, 0, -3]]));
        assert_eq!((i.positive, i.negative, i.zero), (2, 1, 0));
    }
}
