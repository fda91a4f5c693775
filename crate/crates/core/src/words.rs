//! Structure constants on words of colored complete functions.
//!
//! Sym uses only color 0; MR uses colors 0 and 1.

use alloc::vec::Vec;

use crate::combinatorics::ColoredPart;
use crate::lincomb::{add_int, IntComb};

pub(crate) type Word = Vec<ColoredPart>;

/// `S^a * S^b`: one term per nonnegative integer matrix `M` with row sums
/// `a` and column sums `b`, namely the row reading of `M` with zero
/// entries dropped. Entry `(k, l)` carries color `a_k + b_l mod 2`.
pub(crate) fn internal_product(a: &[ColoredPart], b: &[ColoredPart]) -> IntComb<Word> {
    let mut out = IntComb::new();
    let wa: usize = a.iter().map(|p| p.size).sum();
    let wb: usize = b.iter().map(|p| p.size).sum();
    if wa != wb {
        return out;
    }
    if a.is_empty() {
        add_int(&mut out, Word::new(), 1);
        return out;
    }
    let mut caps: Vec<usize> = b.iter().map(|p| p.size).collect();
    let mut word = Word::with_capacity(a.len() * b.len());
    fill(a, b, 0, 0, a[0].size, &mut caps, &mut word, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn fill(
    a: &[ColoredPart],
    b: &[ColoredPart],
    row: usize,
    col: usize,
    left: usize,
    caps: &mut [usize],
    word: &mut Word,
    out: &mut IntComb<Word>,
) {
    if col + 1 == b.len() {
        // last column takes whatever is left of the row
        if left > caps[col] {
            return;
        }
        let pushed = left > 0;
        if pushed {
            word.push(ColoredPart::new(left, a[row].color ^ b[col].color));
        }
        caps[col] -= left;
        if row + 1 == a.len() {
            add_int(out, word.clone(), 1);
        } else {
            fill(a, b, row + 1, 0, a[row + 1].size, caps, word, out);
        }
        caps[col] += left;
        if pushed {
            word.pop();
        }
        return;
    }
    let room_after: usize = caps[col + 1..].iter().sum();
    let lo = left.saturating_sub(room_after);
    let hi = left.min(caps[col]);
    for m in lo..=hi {
        if m > 0 {
            word.push(ColoredPart::new(m, a[row].color ^ b[col].color));
        }
        caps[col] -= m;
        fill(a, b, row, col + 1, left - m, caps, word, out);
        caps[col] += m;
        if m > 0 {
            word.pop();
        }
    }
}

/// `Δ S^a = Π Δ S_{a_k}` with `Δ S_n = Σ S_i ⊗ S_{n−i}`.
pub(crate) fn coproduct(a: &[ColoredPart]) -> IntComb<(Word, Word)> {
    let mut acc: Vec<(Word, Word)> = alloc::vec![(Word::new(), Word::new())];
    for p in a {
        let mut next = Vec::with_capacity(acc.len() * (p.size + 1));
        for (l, r) in &acc {
            for i in 0..=p.size {
                let (mut l2, mut r2) = (l.clone(), r.clone());
                if i > 0 {
                    l2.push(ColoredPart::new(i, p.color));
                }
                if i < p.size {
                    r2.push(ColoredPart::new(p.size - i, p.color));
                }
                next.push((l2, r2));
            }
        }
        acc = next;
    }
    let mut out = IntComb::new();
    for t in acc {
        add_int(&mut out, t, 1);
    }
    out
}

/// `Λ_n` of the given color in the complete basis, from the recursion
/// `Σ_{i=0}^{n} (−1)^i Λ_i S_{n−i} = 0`.
pub(crate) fn lambda_in_complete(n: usize, color: u8) -> IntComb<Word> {
    let mut table: Vec<IntComb<Word>> = Vec::with_capacity(n + 1);
    let mut one = IntComb::new();
    add_int(&mut one, Word::new(), 1);
    table.push(one);
    for m in 1..=n {
        let mut cur = IntComb::new();
        for (i, lam) in table.iter().enumerate() {
            // Λ_m = Σ_{i<m} (−1)^{m−i+1} Λ_i S_{m−i}
            let sign = if (m - i + 1) % 2 == 0 { 1 } else { -1 };
            for (w, &c) in lam {
                let mut w2 = w.clone();
                w2.push(ColoredPart::new(m - i, color));
                add_int(&mut cur, w2, sign * c);
            }
        }
        table.push(cur);
    }
    table.pop().unwrap()
}
