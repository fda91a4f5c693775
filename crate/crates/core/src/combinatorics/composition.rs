use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::CombinatoricsError;

/// An ordered sequence of positive integers; `I ⊨ n` when the parts sum to `n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, CombinatoricsError> {
        if parts.contains(&0) {
            return Err(CombinatoricsError::ZeroPart);
        }
        Ok(Composition(parts))
    }

    /// Caller guarantees all parts are positive.
    pub(crate) fn from_parts(parts: Vec<usize>) -> Self {
        debug_assert!(!parts.contains(&0));
        Composition(parts)
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// The one-part composition `(n)`, or the empty one for `n = 0`.
    pub fn single(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Composition(alloc::vec![n])
        }
    }

    pub fn ones(n: usize) -> Self {
        Composition(alloc::vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// `Des(I) = {i₁, i₁+i₂, …, i₁+⋯+i_{r−1}}`.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.len().saturating_sub(1));
        for &p in self.0.iter().take(self.len().saturating_sub(1)) {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// Major index: the sum of the descent set.
    pub fn maj(&self) -> usize {
        self.descent_set().iter().sum()
    }

    /// The composition of `n` whose descent set is `descents` (sorted,
    /// strictly inside `1..n`).
    pub fn from_descent_set(n: usize, descents: &[usize]) -> Self {
        let mut parts = Vec::with_capacity(descents.len() + 1);
        let mut prev = 0;
        for &d in descents {
            debug_assert!(d > prev && d < n);
            parts.push(d - prev);
            prev = d;
        }
        if n > prev {
            parts.push(n - prev);
        }
        Composition(parts)
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// All compositions of `n`, in increasing lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        if n == 0 {
            return alloc::vec![Self::empty()];
        }
        let mut out: Vec<Self> = (0u64..1 << (n - 1))
            .map(|mask| {
                let descents: Vec<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                Self::from_descent_set(n, &descents)
            })
            .collect();
        out.sort();
        out
    }

    /// Every composition obtained by merging runs of adjacent parts,
    /// including `self`.
    pub fn coarsenings(&self) -> Vec<Self> {
        let gaps = self.len().saturating_sub(1);
        let n = self.weight();
        let des = self.descent_set();
        (0u64..1 << gaps)
            .map(|keep| {
                let kept: Vec<usize> =
                    des.iter().enumerate().filter(|(i, _)| keep >> i & 1 == 1).map(|(_, &d)| d).collect();
                Self::from_descent_set(n, &kept)
            })
            .collect()
    }

    /// Every composition whose descent set contains `Des(self)`, including `self`.
    pub fn refinements(&self) -> Vec<Self> {
        let n = self.weight();
        Self::all(n)
            .into_iter()
            .filter(|j| {
                let dj = j.descent_set();
                self.descent_set().iter().all(|d| dj.binary_search(d).is_ok())
            })
            .collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.0.iter())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

pub(crate) fn write_list<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = T>,
) -> fmt::Result {
    for (i, x) in items.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{}", x)?;
    }
    Ok(())
}

pub(crate) fn parse_list(s: &str) -> Result<Vec<usize>, CombinatoricsError> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| CombinatoricsError::Parse(s.to_string())))
        .collect()
}

impl FromStr for Composition {
    type Err = CombinatoricsError;

    /// Parses `"2,1,3"` (parentheses optional).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::new(parse_list(s)?)
    }
}

/// A composition whose first part may be zero, indexing descent classes
/// of the hyperoctahedral group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeBComposition {
    first: usize,
    rest: Composition,
}

impl TypeBComposition {
    /// `parts[0] ≥ 0`, the remaining parts `≥ 1`; at least one part.
    pub fn new(parts: &[usize]) -> Result<Self, CombinatoricsError> {
        let (&first, rest) = parts.split_first().ok_or(CombinatoricsError::Empty)?;
        Ok(TypeBComposition { first, rest: Composition::new(rest.to_vec())? })
    }

    pub fn first(&self) -> usize {
        self.first
    }

    /// The trailing ordinary composition `(i₁, …, i_r)`.
    pub fn tail(&self) -> &Composition {
        &self.rest
    }

    pub fn parts(&self) -> Vec<usize> {
        let mut p = alloc::vec![self.first];
        p.extend_from_slice(self.rest.parts());
        p
    }

    pub fn weight(&self) -> usize {
        self.first + self.rest.weight()
    }

    /// Descent set inside `[0, n−1]`: `{i₀, i₀+i₁, …, i₀+⋯+i_{r−1}}`.
    pub fn descent_set(&self) -> Vec<usize> {
        if self.rest.is_empty() {
            return Vec::new();
        }
        let mut out = alloc::vec![self.first];
        out.extend(self.rest.descent_set().into_iter().map(|d| d + self.first));
        out
    }

    /// Inverse of [`descent_set`](Self::descent_set) for `D ⊆ [0, n−1]` sorted.
    pub fn from_descent_set(n: usize, descents: &[usize]) -> Self {
        match descents.split_first() {
            None => TypeBComposition { first: n, rest: Composition::empty() },
            Some((&d0, others)) => {
                let shifted: Vec<usize> = others.iter().map(|d| d - d0).collect();
                TypeBComposition { first: d0, rest: Composition::from_descent_set(n - d0, &shifted) }
            }
        }
    }

    /// All `2ⁿ` type-B compositions of `n ≥ 1`, ordered by their part lists.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out: Vec<Self> = (0u64..1 << n)
            .map(|mask| {
                let d: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                Self::from_descent_set(n, &d)
            })
            .collect();
        out.sort_by_key(|c| c.parts());
        out
    }
}

impl fmt::Display for TypeBComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.parts().iter())
    }
}

impl fmt::Debug for TypeBComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B({})", self)
    }
}

impl FromStr for TypeBComposition {
    type Err = CombinatoricsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::new(&parse_list(s)?)
    }
}
