//! Scripts for torus knots on four, six and `3·2^k` strands.

use std::sync::OnceLock;

use crate::braid::{equal_in_group, parse_word, torus_braid, BraidWord, Letter};
use crate::error::{Error, Result};
use crate::families::builder::Builder;
use crate::families::three::{t3_block, t3_cost};
use crate::moves::MoveScript;

/// Generators `lo..hi` (1-based, exclusive end) as letters.
fn row(lo: usize, hi: usize) -> String {
    (lo..hi)
        .map(|i| Letter::pos(i).to_char().expect("generator within alphabet"))
        .collect()
}

fn power(text: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => text.to_string(),
        _ => format!("({text})^{k}"),
    }
}

/// A factorisation `(abc)^3 = W1·c·W2` with `W1, W2` positive in `a, b`, and
/// `u` with `W1·W2 = u⁻¹(ab)^4u`.
struct ThreeTwistSplit {
    w1: BraidWord,
    w2: BraidWord,
    u: BraidWord,
}

fn three_twist_split() -> &'static ThreeTwistSplit {
    static SPLIT: OnceLock<ThreeTwistSplit> = OnceLock::new();
    SPLIT.get_or_init(|| {
        let target = parse_word("(abc)^3", 4).expect("literal");
        let ab4 = parse_word("(ab)^4", 3).expect("literal");
        for bits in 0u32..256 {
            let w: Vec<Letter> = (0..8)
                .map(|i| Letter::pos(1 + (bits >> i & 1) as usize))
                .collect();
            let ww = BraidWord::new(3, w.clone()).expect("3-strand letters");
            let Some(u) = (0..8)
                .map(|r| ab4.slice(0, r))
                .find(|u| equal_in_group(&ww, &(&(&u.inverse() * &ab4) * u)))
            else {
                continue;
            };
            for split in 0..=8 {
                let mut l = w[..split].to_vec();
                l.push(Letter::pos(3));
                l.extend_from_slice(&w[split..]);
                if equal_in_group(&BraidWord::new(4, l).expect("4-strand letters"), &target) {
                    return ThreeTwistSplit {
                        w1: ww.slice(0, split),
                        w2: ww.slice(split, 8),
                        u,
                    };
                }
            }
        }
        unreachable!("(abc)^3 has a single-c factorisation")
    })
}

fn text(w: &BraidWord) -> String {
    w.to_compact_text()
}

/// Cost of the generated `T(4,n)` script.
pub fn t4_cost(n: usize) -> u32 {
    let (k, eps) = split_twelve(n);
    let k = k as u32;
    match eps {
        1 => 4 * k + t3_cost(12 * k as usize + 1),
        3 => 4 * k + t3_cost(12 * k as usize + 4),
        -1 => 4 * k + t3_cost(12 * k as usize - 1),
        -3 => 4 * k + t3_cost(12 * k as usize - 4),
        5 => 4 * k + 5 + t3_cost(12 * k as usize + 1),
        _ => 4 * (k - 1) + 5 + t3_cost(12 * (k as usize - 1) + 4),
    }
}

/// `n = 12k + ε` with `ε ∈ {±1, ±3, ±5}`.
fn split_twelve(n: usize) -> (usize, i64) {
    let k = (n + 6) / 12;
    (k, n as i64 - 12 * k as i64)
}

pub fn t4_claim(n: usize) -> u32 {
    match split_twelve(n).1 {
        1 | 3 => n as u32,
        _ => n as u32 + 1,
    }
}

pub fn t4_script(n: usize) -> Result<MoveScript> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::FamilyParam(format!(
            "T(4,{n}) needs odd n ≥ 3 to be a knot"
        )));
    }
    let (k, eps) = split_twelve(n);
    let mut b = Builder::new(&format!("(abc)^{n}"), 4)?;
    let sp = three_twist_split();
    let rounds = if eps == -5 { k - 1 } else { k };
    if eps == -1 || eps == -3 {
        b.rewrite(
            0,
            3 * n,
            &format!(
                "{}{}",
                power("abc", 12 * k),
                power("CBA", eps.unsigned_abs() as usize)
            ),
            0,
        )?;
    }
    for j in 0..rounds {
        b.template(24 * j, "T3b", 0)?;
    }
    let off = 24 * rounds;
    let base = 12 * rounds;
    // `(ab)^base` now precedes the tail
    let m = match eps {
        1 => {
            b.destabilize(off + 2)?;
            base + 1
        }
        5 | -5 => {
            b.template(off, "T5_2", 0)?;
            for _ in 0..2 {
                for run in [4, 2] {
                    b.cc(off)?;
                    b.reduce(off, run)?;
                }
            }
            if eps == 5 {
                b.destabilize(off + 2)?;
                base + 1
            } else {
                finish_three(&mut b, off, base, sp)?
            }
        }
        3 => finish_three(&mut b, off, base, sp)?,
        -1 => {
            b.destabilize(off)?;
            b.rewrite(0, off + 2, &power("ab", base - 1), 0)?;
            base - 1
        }
        _ => {
            let inv = format!("{}C{}", text(&sp.w2.inverse()), text(&sp.w1.inverse()));
            b.rewrite(off, 9, &inv, 0)?;
            b.destabilize(off + sp.w2.len())?;
            let wrapped = format!(
                "{}{}{}",
                text(&sp.u.inverse()),
                power("ab", base - 4),
                text(&sp.u)
            );
            b.rewrite(0, off + 8, &wrapped, 0)?;
            let m = base - 4;
            t3_block(&mut b, sp.u.len(), m, 0)?;
            return Ok(b.finish(t4_claim(n)));
        }
    };
    if eps == 1 || eps == 5 || eps == -1 {
        t3_block(&mut b, 0, m, 0)?;
    }
    Ok(b.finish(t4_claim(n)))
}

/// `(abc)^3` at `off` after `(ab)^base`: single out `c`, destabilise, and
/// untwist the resulting `T(3, base+4)`.
fn finish_three(b: &mut Builder, off: usize, base: usize, sp: &ThreeTwistSplit) -> Result<usize> {
    b.rewrite(off, 9, &format!("{}c{}", text(&sp.w1), text(&sp.w2)), 0)?;
    b.destabilize(off + sp.w1.len())?;
    let wrapped = format!(
        "{}{}{}",
        text(&sp.u.inverse()),
        power("ab", base + 4),
        text(&sp.u)
    );
    b.rewrite(0, off + 8, &wrapped, 0)?;
    t3_block(b, sp.u.len(), base + 4, 0)?;
    Ok(base + 4)
}

/// Untwists the literal block `(row on N strands)^q` at `off`, generators
/// shifted by `shift`, by splitting full twists in half until three strands
/// remain. Returns the final window length.
fn untwist(b: &mut Builder, off: usize, strands: usize, q: usize, shift: usize) -> Result<usize> {
    if strands == 3 {
        return t3_block(b, off, q, shift);
    }
    let h = strands / 2;
    if strands % 2 != 0 || h < 3 {
        return Err(Error::FamilyParam(format!(
            "cannot split {strands} strands"
        )));
    }
    let (c, plus) = match q % strands {
        1 => (q / strands, true),
        r if r == strands - 1 => (q / strands + 1, false),
        _ => {
            return Err(Error::FamilyParam(format!(
                "T({strands},{q}) is not one twist row away from full twists"
            )))
        }
    };
    let full_row = row(1, strands);
    let mut len = q * (strands - 1);
    if !plus {
        let inverse_row: String = full_row
            .chars()
            .rev()
            .map(|ch| ch.to_ascii_uppercase())
            .collect();
        len = b.rewrite(
            off,
            len,
            &format!("{}{inverse_row}", power(&full_row, strands * c)),
            shift,
        )?;
    }
    let id = if h == 3 {
        "T4".to_string()
    } else {
        format!("T5_{h}")
    };
    let split_len = 2 * strands * (h - 1);
    for j in 0..c {
        b.template(off + j * split_len, &id, shift)?;
        len -= strands * (strands - 1) - split_len;
    }
    let b1 = row(1, h);
    let b2 = row(h + 1, strands);
    let mid = Letter::new(h, plus).to_char().expect("within alphabet");
    let inv = |s: &str| -> String { s.chars().rev().map(|ch| ch.to_ascii_uppercase()).collect() };
    let (g, g_inv) = if plus {
        (inv(&b2), b2.clone())
    } else {
        (b1.clone(), inv(&b1))
    };
    b.rewrite(
        off,
        len,
        &format!("{g}({b1})^{q}({b2})^{q}{mid}{g_inv}"),
        shift,
    )?;
    let first = off + g.len();
    let l1 = untwist(b, first, h, q, shift)?;
    let l2 = untwist(b, first + l1, h, q, shift + h)?;
    Ok(g.len() + l1 + l2 + 1 + g_inv.len())
}

fn untwist_cost(strands: usize, q: usize) -> u32 {
    if strands == 3 {
        return t3_cost(q);
    }
    let c = (q + 1) / strands;
    c as u32 + 2 * untwist_cost(strands / 2, q)
}

/// Cost of the generated `T(6,n)` script: `9k+2` for `n = 6k+1`, `9k` for `n = 6k-1`.
pub fn t6_cost(n: usize) -> u32 {
    untwist_cost(6, n)
}

pub fn t6_claim(n: usize) -> u32 {
    (3 * n as u32 + 3) / 2
}

pub fn t6_script(n: usize) -> Result<MoveScript> {
    if n < 5 || n % 2 == 0 || n % 3 == 0 {
        return Err(Error::FamilyParam(format!(
            "T(6,{n}) needs n ≥ 5 coprime to 6"
        )));
    }
    let mut b = Builder::new(&format!("({})^{n}", row(1, 6)), 6)?;
    untwist(&mut b, 0, 6, n, 0)?;
    Ok(b.finish(t6_claim(n)))
}

/// Largest `k` for which doubling scripts are generated (`T(24,25)`).
pub const MAX_DOUBLING_K: usize = 3;

/// `T(3·2^k, 3·2^k + 1)` split down to `2^k` copies of `T(3, 3·2^k + 1)`.
pub fn doubling_script(k: usize) -> Result<MoveScript> {
    if !(1..=MAX_DOUBLING_K).contains(&k) {
        return Err(Error::FamilyParam(format!(
            "doubling scripts are generated for 1 ≤ k ≤ {MAX_DOUBLING_K}, got {k}"
        )));
    }
    let n = 3 << k;
    let start = torus_braid(n, n + 1);
    let mut b = Builder::new(&format!("({})^{}", row(1, n), n + 1), n)?;
    debug_assert_eq!(b.word(), &start);
    untwist(&mut b, 0, n, n + 1, 0)?;
    Ok(b.finish(untwist_cost(n, n + 1)))
}

pub fn doubling_cost(k: usize) -> u32 {
    let n = 3 << k;
    untwist_cost(n, n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moves::verify_script;

    #[test]
    fn factorisation_of_three_twists() {
        let sp = three_twist_split();
        assert_eq!(sp.w1.len() + sp.w2.len(), 8);
        let w = &(&sp.w1.widen(4) * &parse_word("c", 4).unwrap()) * &sp.w2.widen(4);
        assert!(equal_in_group(&w, &parse_word("(abc)^3", 4).unwrap()));
    }

    #[test]
    fn small_four_strand_cases() {
        for n in [3, 5, 7, 9, 11, 13, 15, 17] {
            let s = t4_script(n).unwrap();
            let cert = verify_script(&s).unwrap();
            assert!(cert.verified, "n={n}: {}", cert.summary());
            assert_eq!(cert.total_cost, t4_cost(n), "n={n}");
        }
        assert!(t4_script(8).is_err());
    }

    #[test]
    fn six_strand_cases() {
        for (n, cost) in [(5, 9), (7, 11), (11, 18)] {
            let cert = verify_script(&t6_script(n).unwrap()).unwrap();
            assert!(cert.verified, "n={n}: {}", cert.summary());
            assert_eq!(cert.total_cost, cost);
            assert_eq!(t6_cost(n), cost);
        }
        assert!(t6_script(9).is_err());
    }

    #[test]
    fn doubling_once() {
        let cert = verify_script(&doubling_script(1).unwrap()).unwrap();
        assert!(cert.verified, "{}", cert.summary());
        assert_eq!(cert.total_cost, 11);
        assert_eq!(doubling_cost(2), 41);
        assert_eq!(doubling_cost(3), 157);
    }
}
