//! Untwisting scripts for 3-strand torus knots `T(3,m)`.
//!
//! Every routine works on a window `[off, off + 2m)` holding the literal block
//! `(ab)^m` on generators `shift+1, shift+2`, touches nothing outside it, and
//! returns the final length of the window. Costs are `⌈2m/3⌉` except `m = 2`.

use crate::error::{Error, Result};
use crate::families::builder::{closes_to_unknot, Builder};

/// Cost of the generated `T(3,m)` script.
pub fn t3_cost(m: usize) -> u32 {
    match m {
        1 => 0,
        2 => 1,
        _ => (2 * m as u32).div_ceil(3),
    }
}

pub(crate) fn t3_block(b: &mut Builder, off: usize, m: usize, shift: usize) -> Result<usize> {
    if m == 0 || m % 3 == 0 {
        return Err(Error::FamilyParam(format!("T(3,{m}) is not a knot")));
    }
    if m % 3 == 2 {
        return bridge(b, off, m, shift);
    }
    match m {
        1 => Ok(2),
        4 => {
            let finish = |w: &_| closes_to_unknot(w, shift, 3);
            b.changes_until(off, 8, 3, finish)
        }
        7 => seven(b, off, shift),
        10 => ten(b, off, shift),
        13 => thirteen(b, off, shift),
        _ if (m - 16) % 6 == 0 => sixteen(b, off, (m - 16) / 6, shift),
        _ => nineteen(b, off, (m - 19) / 6, shift),
    }
}

/// One crossing change turns `(ab)^m` into a conjugate of `(ab)^{m-1}`.
fn bridge(b: &mut Builder, off: usize, m: usize, shift: usize) -> Result<usize> {
    let len = 2 * m;
    b.cc(off + len - 4)?;
    // (ab)^{m-2} is central, so the changed window equals b(ab)^{m-1}B
    b.rewrite(off, len, &format!("b(ab)^{}B", m - 1), shift)?;
    let inner = t3_block(b, off + 1, m - 1, shift)?;
    Ok(inner + 2)
}

/// `a^{2j+1}` at `pos` brought down to a single letter by `j` changes.
fn peel(b: &mut Builder, pos: usize, run: usize) -> Result<()> {
    let mut r = run;
    while r > 1 {
        b.cc(pos)?;
        b.reduce(pos, r)?;
        r -= 2;
    }
    Ok(())
}

fn seven(b: &mut Builder, off: usize, shift: usize) -> Result<usize> {
    b.template(off, "T2b", shift)?;
    // a^7 b
    peel(b, off, 7)?;
    Ok(2)
}

fn ten(b: &mut Builder, off: usize, shift: usize) -> Result<usize> {
    let len = b.rewrite(off, 20, "AB(ab)^12AA", shift)?;
    b.template(off + 2, "T2a", shift)?;
    b.template(off + 8, "T2b", shift)?;
    let len = b.reduce(off, len - 12)?;
    // A b^5 a^4
    b.changes_until(off, len, 3, |w| closes_to_unknot(w, shift, 3))
}

fn thirteen(b: &mut Builder, off: usize, shift: usize) -> Result<usize> {
    // (ab)^13 = a·X·A with the three double twists of X spread out
    let len = b.rewrite(off, 26, "aAAA(ab)^12BAAA(ab)^6BAAA", shift)?;
    let six = b.shifted("(ab)^6", shift)?;
    for id in ["T2b", "T2a", "T2b"] {
        let at = b
            .find(&six, off)
            .filter(|&p| p < off + len)
            .expect("double twist present");
        b.template(at, id, shift)?;
    }
    let len = b.reduce(off, len - 18)?;
    // a^4 b^5 a^3 B A^3
    b.changes_until(off, len, 3, |w| closes_to_unknot(w, shift, 3))
}

/// Replaces every literal `(ab)^6` in the window by `a^6`; returns the new length.
fn flatten_double_twists(
    b: &mut Builder,
    off: usize,
    mut len: usize,
    count: usize,
    shift: usize,
) -> Result<usize> {
    let six = b.shifted("(ab)^6", shift)?;
    let mut from = off;
    for _ in 0..count {
        let at = b
            .find(&six, from)
            .filter(|&p| p + 12 <= off + len)
            .ok_or_else(|| Error::FamilyParam("missing double twist".into()))?;
        b.template(at, "T2b", shift)?;
        len -= 6;
        from = at;
    }
    Ok(len)
}

fn rep(text: &str, k: usize) -> String {
    if k == 0 {
        String::new()
    } else {
        format!("({text})^{k}")
    }
}

/// `T(3, 6k+16)`: `2k+4` double twists, then three changes in the middle.
fn sixteen(b: &mut Builder, off: usize, k: usize, shift: usize) -> Result<usize> {
    let m = 6 * k + 16;
    let len = b.rewrite(
        off,
        2 * m,
        &format!("ab(ab)^{}(BA)^{}", 12 * k + 24, 6 * k + 9),
        shift,
    )?;
    let spread = format!(
        "abAAA(ab)^6B{r}AAAA(ab)^6BAAA(ab)^6B{r}AAAA(ab)^6B",
        r = rep("AAAAA(ab)^6B", k)
    );
    let len = b.rewrite(off, len, &spread, shift)?;
    let len = flatten_double_twists(b, off, len, 2 * k + 4, shift)?;
    let len = b.reduce(off, len)?;
    // ab a^3B (aB)^k a^2B a^3B (aB)^k a^2B, slid into shape around the middle
    let len = b.rewrite(
        off,
        len,
        &format!("bbA{}bbabaBaaaB{}aaB", rep("bA", k), rep("aB", k)),
        shift,
    )?;
    let mid = off + 3 + 2 * k;
    let mid_len = b.rewrite(mid, 10, "bbbaaaaB", shift)?;
    let len = len - 10 + mid_len;
    b.changes_until(mid, mid_len, 3, |w| w.is_empty())?;
    b.reduce(off, len - mid_len)
}

/// `T(3, 6k+19)`: `2k+5` double twists, then three changes in the middle.
fn nineteen(b: &mut Builder, off: usize, k: usize, shift: usize) -> Result<usize> {
    let m = 6 * k + 19;
    let len = b.rewrite(
        off,
        2 * m,
        &format!("ab(ab)^{}(BA)^{}", 12 * k + 30, 6 * k + 12),
        shift,
    )?;
    let spread = format!(
        "abAAA(ab)^6B{r1}AAA(ab)^6BAAAA(ab)^6B{r0}AAAA(ab)^6B",
        r1 = rep("AAAAA(ab)^6B", k + 1),
        r0 = rep("AAAAA(ab)^6B", k)
    );
    let len = b.rewrite(off, len, &spread, shift)?;
    let len = flatten_double_twists(b, off, len, 2 * k + 5, shift)?;
    let len = b.reduce(off, len)?;
    let len = b.rewrite(
        off,
        len,
        &format!("bbA{}bbbAbbabaB{}aaB", rep("bA", k + 1), rep("aB", k)),
        shift,
    )?;
    let mid = off + 3 + 2 * (k + 1);
    b.changes_until(mid, 8, 3, |w| w.is_empty())?;
    b.reduce(off, len - 8)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moves::verify_script;

    fn script(m: usize) -> crate::moves::MoveScript {
        let mut b = Builder::new(&format!("(ab)^{m}"), 3).unwrap();
        t3_block(&mut b, 0, m, 0).unwrap();
        let c = b.cost();
        b.finish(c)
    }

    #[test]
    fn sporadic_costs() {
        for (m, cost) in [
            (1, 0),
            (2, 1),
            (4, 3),
            (5, 4),
            (7, 5),
            (8, 6),
            (10, 7),
            (13, 9),
        ] {
            let s = script(m);
            let cert = verify_script(&s).unwrap();
            assert!(cert.verified, "m={m}: {}", cert.summary());
            assert_eq!(cert.total_cost, cost, "m={m}");
            assert_eq!(t3_cost(m), cost);
        }
    }

    #[test]
    fn family_members() {
        for m in [16, 19, 22, 25] {
            let cert = verify_script(&script(m)).unwrap();
            assert!(cert.verified, "m={m}: {}", cert.summary());
            assert_eq!(cert.total_cost, t3_cost(m));
        }
    }

    #[test]
    fn shifted_block() {
        let mut b = Builder::new("c(bc)^7c", 4).unwrap();
        let len = t3_block(&mut b, 1, 7, 1).unwrap();
        assert_eq!(len, 2);
        assert_eq!(b.cost(), 5);
        assert_eq!(b.word().len(), 4);
    }
}
