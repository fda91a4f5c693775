use alloc::collections::{BTreeSet, VecDeque};
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::composition::write_list;
use super::{CombinatoricsError, Composition, TypeBComposition};

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self, CombinatoricsError> {
        let n = word.len();
        let mut seen = alloc::vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(CombinatoricsError::NotAPermutation);
            }
            seen[v] = true;
        }
        Ok(Permutation(word))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The longest element `n n−1 ⋯ 1`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    /// `σ(i)` for `1 ≤ i ≤ n`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        Permutation(other.0.iter().map(|&j| self.0[j - 1]).collect())
    }

    /// Positions `i` with `σ(i) > σ(i+1)`.
    pub fn descent_set(&self) -> Vec<usize> {
        (1..self.len()).filter(|&i| self.0[i - 1] > self.0[i]).collect()
    }

    pub fn ascent_set(&self) -> Vec<usize> {
        (1..self.len()).filter(|&i| self.0[i - 1] < self.0[i]).collect()
    }

    /// `D(σ)`, the composition of `n` with the same descent set as `σ`.
    pub fn descent_composition(&self) -> Composition {
        Composition::from_descent_set(self.len(), &self.descent_set())
    }

    pub fn inversions(&self) -> usize {
        let w = &self.0;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    /// Values with no smaller value to their left (in order of appearance).
    pub fn lr_minima(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut min = usize::MAX;
        for &v in &self.0 {
            if v < min {
                out.push(v);
                min = v;
            }
        }
        out
    }

    /// `Some(k)` if the descent set is exactly `{1, …, k}`.
    pub fn hook(&self) -> Option<usize> {
        let d = self.descent_set();
        d.iter().enumerate().all(|(i, &x)| x == i + 1).then_some(d.len())
    }

    /// Swap the entries at positions `i` and `i+1` (right multiplication by `s_i`).
    pub fn swap_positions(&self, i: usize) -> Self {
        let mut w = self.0.clone();
        w.swap(i - 1, i);
        Permutation(w)
    }

    /// `{τ : τ ≤ σ}` in the right weak order, including `σ`.
    pub fn weak_order_ideal(&self) -> BTreeSet<Permutation> {
        self.weak_order_closure(|p| p.descent_set())
    }

    /// `{τ : σ ≤ τ}` in the right weak order, including `σ`.
    pub fn weak_order_filter(&self) -> BTreeSet<Permutation> {
        self.weak_order_closure(|p| p.ascent_set())
    }

    fn weak_order_closure(&self, moves: impl Fn(&Permutation) -> Vec<usize>) -> BTreeSet<Permutation> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(self.clone());
        queue.push_back(self.clone());
        while let Some(p) = queue.pop_front() {
            for i in moves(&p) {
                let next = p.swap_positions(i);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        seen
    }

    /// `σ·w₀(J)`: reverses each maximal run of consecutive positions
    /// generated by the adjacent transpositions `s_i`, `i ∈ J`.
    pub fn reverse_blocks(&self, generators: &[usize]) -> Self {
        let mut w = self.0.clone();
        let mut k = 0;
        while k < generators.len() {
            let start = generators[k];
            let mut end = start;
            while k + 1 < generators.len() && generators[k + 1] == end + 1 {
                k += 1;
                end += 1;
            }
            w[start - 1..=end].reverse();
            k += 1;
        }
        Permutation(w)
    }

    /// All permutations of `n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut w: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation(w.clone()));
            // next permutation in lexicographic order
            let Some(i) = (1..w.len()).rev().find(|&i| w[i - 1] < w[i]) else {
                break;
            };
            let j = (i..w.len()).rev().find(|&j| w[j] > w[i - 1]).unwrap();
            w.swap(i - 1, j);
            w[i..].reverse();
        }
        out
    }

    /// All permutations with descent composition `shape`.
    pub fn with_descent_composition(shape: &Composition) -> Vec<Self> {
        let n = shape.weight();
        Self::all(n).into_iter().filter(|p| p.descent_composition() == *shape).collect()
    }

    /// The lexicographically smallest permutation with descent composition `shape`.
    ///
    /// Maximal runs of consecutive descents are filled with consecutive
    /// values in decreasing order, runs taken left to right.
    pub fn smallest_with_shape(shape: &Composition) -> Self {
        let n = shape.weight();
        let des = shape.descent_set();
        let mut w = Vec::with_capacity(n);
        let mut start = 1;
        while start <= n {
            let mut end = start;
            while end < n && des.binary_search(&end).is_ok() {
                end += 1;
            }
            w.extend((start..=end).rev());
            start = end + 1;
        }
        Permutation(w)
    }
}

/// The permutation order-isomorphic to `word`, ties broken left to right.
pub fn standardize<T: Ord>(word: &[T]) -> Permutation {
    let mut idx: Vec<usize> = (0..word.len()).collect();
    idx.sort_by(|&a, &b| word[a].cmp(&word[b]).then(a.cmp(&b)));
    let mut out = alloc::vec![0; word.len()];
    for (rank, &i) in idx.iter().enumerate() {
        out[i] = rank + 1;
    }
    Permutation(out)
}

/// Standardization of a word of signed letters `(value, barred)` in the
/// ordinal sum order: every barred letter precedes every unbarred one,
/// each block ordered by value.
pub fn standardize_signed(word: &[(usize, bool)]) -> Result<Permutation, CombinatoricsError> {
    let keys: Vec<(bool, usize)> = word.iter().map(|&(v, barred)| (!barred, v)).collect();
    let distinct: BTreeSet<&(bool, usize)> = keys.iter().collect();
    if distinct.len() != keys.len() {
        return Err(CombinatoricsError::DuplicateLetter);
    }
    Ok(standardize(&keys))
}

impl fmt::Display for Permutation {
    /// Concatenated digits for `n ≤ 9`, comma separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            self.0.iter().try_for_each(|v| write!(f, "{}", v))
        } else {
            write_list(f, self.0.iter())
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

impl FromStr for Permutation {
    type Err = CombinatoricsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let word = if s.contains(',') {
            super::composition::parse_list(s)?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or(CombinatoricsError::Parse(s.to_string())))
                .collect::<Result<Vec<_>, _>>()?
        };
        Self::new(word)
    }
}

/// A signed permutation `w = (σ, ε)` with `w(i) = ε_i σ(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    perm: Permutation,
    negative: Vec<bool>,
}

impl SignedPermutation {
    pub fn new(perm: Permutation, negative: Vec<bool>) -> Result<Self, CombinatoricsError> {
        if negative.len() != perm.len() {
            return Err(CombinatoricsError::LengthMismatch);
        }
        Ok(SignedPermutation { perm, negative })
    }

    /// Reads a boolean sign mask such as `"100100"` (1 = negative).
    pub fn from_mask(perm: Permutation, mask: &str) -> Result<Self, CombinatoricsError> {
        let negative = mask
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(CombinatoricsError::Parse(mask.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(perm, negative)
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { perm: Permutation::identity(n), negative: alloc::vec![false; n] }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn signs(&self) -> &[bool] {
        &self.negative
    }

    /// `w(i)` for `1 ≤ i ≤ n`, with `w(0) = 0`.
    pub fn value(&self, i: usize) -> i64 {
        if i == 0 {
            return 0;
        }
        let v = self.perm.apply(i) as i64;
        if self.negative[i - 1] {
            -v
        } else {
            v
        }
    }

    /// `self ∘ other` as maps on `{±1, …, ±n}`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.len();
        assert_eq!(n, other.len(), "composing signed permutations of different sizes");
        let mut word = Vec::with_capacity(n);
        let mut negative = Vec::with_capacity(n);
        for i in 1..=n {
            let j = other.perm.apply(i);
            word.push(self.perm.apply(j));
            negative.push(other.negative[i - 1] ^ self.negative[j - 1]);
        }
        SignedPermutation { perm: Permutation(word), negative }
    }

    /// Descents in `[0, n−1]`, with the convention `w(0) = 0`.
    pub fn descent_set(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.value(i) > self.value(i + 1)).collect()
    }

    pub fn descent_composition(&self) -> TypeBComposition {
        TypeBComposition::from_descent_set(self.len(), &self.descent_set())
    }

    /// All `2ⁿ n!` signed permutations of size `n`.
    pub fn all(n: usize) -> Vec<Self> {
        let perms = Permutation::all(n);
        let mut out = Vec::with_capacity(perms.len() << n);
        for p in perms {
            for mask in 0u64..1 << n {
                let negative = (0..n).map(|i| mask >> i & 1 == 1).collect();
                out.push(SignedPermutation { perm: p.clone(), negative });
            }
        }
        out
    }
}

impl fmt::Display for SignedPermutation {
    /// Comma-separated values, negatives with a leading `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, (1..=self.len()).map(|i| self.value(i)))
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn descent_composition_examples() {
        assert_eq!(Permutation::identity(5).descent_composition(), comp("5"));
        assert_eq!(Permutation::longest(4).descent_composition(), comp("1,1,1,1"));
        assert_eq!(p("46735182").descent_composition(), comp("3,2,2,1"));
    }

    #[test]
    fn standardization() {
        assert_eq!(standardize(&[1, 2, 3]), p("123"));
        assert_eq!(standardize(&['b', 'a', 'a']), p("312"));
        assert_eq!(standardize(&['a', 'b', 'a']), p("132"));
    }

    #[test]
    fn signed_standardization() {
        let word = [
            (1, false),
            (5, false),
            (4, false),
            (3, false),
            (2, true),
            (6, true),
            (9, true),
            (8, true),
            (7, true),
            (11, true),
            (10, false),
            (12, false),
            (13, false),
            (16, false),
            (15, true),
            (14, false),
            (18, false),
            (17, false),
            (19, false),
        ];
        let want: Permutation = "8,11,10,9,1,2,5,4,3,6,12,13,14,16,7,15,18,17,19".parse().unwrap();
        assert_eq!(standardize_signed(&word).unwrap(), want);
        assert_eq!(standardize_signed(&[(2, false), (1, false), (3, false)]).unwrap(), p("213"));
        assert_eq!(standardize_signed(&[(1, true), (2, false)]).unwrap(), p("12"));
        assert_eq!(standardize_signed(&[(1, false), (2, true)]).unwrap(), p("21"));
        assert_eq!(
            standardize_signed(&[(1, true), (1, true)]),
            Err(CombinatoricsError::DuplicateLetter)
        );
        // same value with both signs is two distinct letters
        assert_eq!(standardize_signed(&[(1, false), (1, true)]).unwrap(), p("21"));
    }

    #[test]
    fn lr_minima_examples() {
        assert_eq!(p("46735182").lr_minima(), vec![4, 3, 1]);
        assert_eq!(Permutation::identity(4).lr_minima(), vec![1]);
        assert_eq!(Permutation::longest(4).lr_minima(), vec![4, 3, 2, 1]);
    }

    #[test]
    fn weak_order_examples() {
        let ideal: Vec<Permutation> = p("231").weak_order_ideal().into_iter().collect();
        assert_eq!(ideal, vec![p("123"), p("213"), p("231")]);
        assert_eq!(Permutation::identity(3).weak_order_ideal().len(), 1);
        assert_eq!(Permutation::longest(3).weak_order_ideal().len(), 6);
        assert_eq!(Permutation::identity(4).weak_order_filter().len(), 24);
    }

    #[test]
    fn hooks() {
        assert_eq!(Permutation::identity(4).hook(), Some(0));
        assert_eq!(Permutation::longest(5).hook(), Some(4));
        assert_eq!(p("1324").hook(), None);
        assert_eq!(p("3214").hook(), Some(2));
    }

    #[test]
    fn smallest_with_shape_example() {
        let shape = comp("2,1,1,3,1,2,4,1,2,2");
        let alpha: Permutation = "1,5,4,3,2,6,9,8,7,11,10,12,13,16,15,14,18,17,19".parse().unwrap();
        assert_eq!(Permutation::smallest_with_shape(&shape), alpha);
        for n in 1..6 {
            for i in Composition::all(n) {
                let all = Permutation::with_descent_composition(&i);
                assert_eq!(all.iter().min(), Some(&Permutation::smallest_with_shape(&i)));
            }
        }
    }

    #[test]
    fn descent_classes_partition_the_group() {
        for n in 1..=7 {
            let total: usize =
                Composition::all(n).iter().map(|i| Permutation::with_descent_composition(i).len()).sum();
            assert_eq!(total, (1..=n).product::<usize>());
        }
    }

    #[test]
    fn type_b_descent_composition_examples() {
        let w = SignedPermutation::from_mask(p("231546"), "100100").unwrap();
        assert_eq!(w.descent_composition().parts(), vec![0, 2, 1, 3]);
        // The printed example for mask 000100 lists (2,3,1), but that
        // signed permutation has descents {2,3} under w(0) = 0, i.e. (2,1,3).
        let w = SignedPermutation::from_mask(p("231546"), "000100").unwrap();
        assert_eq!(w.descent_set(), vec![2, 3]);
        assert_eq!(w.descent_composition().parts(), vec![2, 1, 3]);
        assert_eq!(SignedPermutation::identity(4).descent_composition().parts(), vec![4]);
    }

    #[test]
    fn signed_composition_is_a_group_law() {
        let all = SignedPermutation::all(2);
        assert_eq!(all.len(), 8);
        let bar1 = SignedPermutation::from_mask(p("1"), "1").unwrap();
        assert_eq!(bar1.compose(&bar1), SignedPermutation::identity(1));
        for a in &all {
            for b in &all {
                for c in &all {
                    assert_eq!(a.compose(b).compose(c), a.compose(&b.compose(c)));
                }
            }
        }
    }

    #[test]
    fn reverse_blocks_is_longest_parabolic() {
        assert_eq!(Permutation::identity(5).reverse_blocks(&[1, 2, 4]), p("32154"));
        assert_eq!(Permutation::identity(3).reverse_blocks(&[]), p("123"));
    }
}
