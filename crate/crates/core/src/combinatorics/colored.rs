use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::permutation::standardize_signed;
use super::{CombinatoricsError, Composition, Permutation};

/// One part of a colored composition.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ColoredPart {
    pub size: usize,
    pub color: u8,
}

impl ColoredPart {
    pub const fn new(size: usize, color: u8) -> Self {
        ColoredPart { size, color }
    }

    /// In level 2, color 1 is "barred".
    pub fn is_barred(&self) -> bool {
        self.color != 0
    }
}

/// A composition whose parts carry colors in `[0, level)`.
///
/// Level 2 compositions are the signed compositions indexing the
/// Mantaci–Reutenauer algebra; color 1 marks a barred part.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredComposition {
    parts: Vec<ColoredPart>,
    level: u8,
}

impl ColoredComposition {
    pub fn new(parts: Vec<ColoredPart>, level: u8) -> Result<Self, CombinatoricsError> {
        if level < 2 {
            return Err(CombinatoricsError::BadLevel(level));
        }
        if parts.iter().any(|p| p.size == 0) {
            return Err(CombinatoricsError::ZeroPart);
        }
        if let Some(p) = parts.iter().find(|p| p.color >= level) {
            return Err(CombinatoricsError::ColorOutOfRange { color: p.color, level });
        }
        Ok(ColoredComposition { parts, level })
    }

    pub(crate) fn from_parts(parts: Vec<ColoredPart>, level: u8) -> Self {
        debug_assert!(parts.iter().all(|p| p.size > 0 && p.color < level));
        ColoredComposition { parts, level }
    }

    /// Level-2 composition from `(size, barred)` pairs.
    pub fn signed(parts: &[(usize, bool)]) -> Result<Self, CombinatoricsError> {
        Self::new(parts.iter().map(|&(s, b)| ColoredPart::new(s, b as u8)).collect(), 2)
    }

    pub fn empty(level: u8) -> Self {
        ColoredComposition { parts: Vec::new(), level }
    }

    pub fn parts(&self) -> &[ColoredPart] {
        &self.parts
    }

    pub fn level(&self) -> u8 {
        self.level
    }

    /// Same parts read at another level; fails if a color does not fit.
    pub fn with_level(&self, level: u8) -> Result<Self, CombinatoricsError> {
        Self::new(self.parts.clone(), level)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().map(|p| p.size).sum()
    }

    /// `|J|`: forget the colors.
    pub fn underlying(&self) -> Composition {
        Composition::from_parts(self.parts.iter().map(|p| p.size).collect())
    }

    /// `|ε|`: the number of barred letters, i.e. the total size of the
    /// parts with nonzero color.
    pub fn barred_letters(&self) -> usize {
        self.parts.iter().filter(|p| p.is_barred()).map(|p| p.size).sum()
    }

    pub fn concat(&self, other: &Self) -> Self {
        debug_assert_eq!(self.level, other.level);
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        ColoredComposition { parts, level: self.level }
    }

    /// Level 2 color exchange.
    pub fn bar(&self) -> Self {
        debug_assert_eq!(self.level, 2);
        ColoredComposition {
            parts: self.parts.iter().map(|p| ColoredPart::new(p.size, 1 - p.color)).collect(),
            level: 2,
        }
    }

    /// All colored compositions of `n` at the given level, sorted.
    pub fn all(n: usize, level: u8) -> Vec<Self> {
        let mut out = Vec::new();
        for shape in Composition::all(n) {
            let k = shape.len() as u32;
            for code in 0..(level as u64).pow(k) {
                let mut c = code;
                let parts = shape
                    .parts()
                    .iter()
                    .map(|&s| {
                        let color = (c % level as u64) as u8;
                        c /= level as u64;
                        ColoredPart::new(s, color)
                    })
                    .collect();
                out.push(ColoredComposition { parts, level });
            }
        }
        out.sort();
        out
    }

    /// Every colored composition obtained by merging runs of adjacent parts
    /// of equal color, including `self`.
    pub fn same_color_coarsenings(&self) -> Vec<Self> {
        let mergeable: Vec<usize> =
            (1..self.len()).filter(|&i| self.parts[i - 1].color == self.parts[i].color).collect();
        (0u64..1 << mergeable.len())
            .map(|mask| {
                let mut parts: Vec<ColoredPart> = Vec::with_capacity(self.len());
                for (i, p) in self.parts.iter().enumerate() {
                    let merge = i > 0
                        && mergeable
                            .iter()
                            .position(|&g| g == i)
                            .is_some_and(|k| mask >> k & 1 == 1);
                    if merge {
                        parts.last_mut().unwrap().size += p.size;
                    } else {
                        parts.push(*p);
                    }
                }
                ColoredComposition { parts, level: self.level }
            })
            .collect()
    }

    fn require_signed(&self) -> Result<(), CombinatoricsError> {
        if self.level == 2 {
            Ok(())
        } else {
            Err(CombinatoricsError::BadLevel(self.level))
        }
    }

    /// Signs the letters of `sigma` blockwise and returns the descent
    /// composition of the signed standardization.
    pub fn rho_with(&self, sigma: &Permutation) -> Result<Composition, CombinatoricsError> {
        self.require_signed()?;
        if sigma.len() != self.weight() || sigma.descent_composition() != self.underlying() {
            return Err(CombinatoricsError::ShapeMismatch);
        }
        let mut word = Vec::with_capacity(sigma.len());
        let mut pos = 0;
        for part in &self.parts {
            for _ in 0..part.size {
                word.push((sigma.word()[pos], part.is_barred()));
                pos += 1;
            }
        }
        Ok(standardize_signed(&word)?.descent_composition())
    }

    /// `ρ(J)`, computed from the smallest permutation of shape `|J|`.
    pub fn rho(&self) -> Result<Composition, CombinatoricsError> {
        self.rho_with(&Permutation::smallest_with_shape(&self.underlying()))
    }

    /// `ρ(J)` by merging each barred part with an unbarred right neighbour.
    pub fn rho_merge(&self) -> Result<Composition, CombinatoricsError> {
        self.require_signed()?;
        let mut out = Vec::with_capacity(self.len());
        let mut i = 0;
        while i < self.len() {
            let p = self.parts[i];
            if p.is_barred() && i + 1 < self.len() && !self.parts[i + 1].is_barred() {
                out.push(p.size + self.parts[i + 1].size);
                i += 2;
            } else {
                out.push(p.size);
                i += 1;
            }
        }
        Ok(Composition::from_parts(out))
    }

    /// Flag major index `2·maj(ρ(J)) + |ε|`.
    pub fn bmaj(&self) -> Result<usize, CombinatoricsError> {
        Ok(2 * self.rho()?.maj() + self.barred_letters())
    }

    /// Per-part weights read right to left: the rightmost part weighs its
    /// color; each part to the left adds the representative in `[1, c]`
    /// of `(color(next) − color(part)) mod c`.
    pub fn part_weights(&self, colors: u8) -> Result<Vec<usize>, CombinatoricsError> {
        if colors < 2 {
            return Err(CombinatoricsError::BadLevel(colors));
        }
        if let Some(p) = self.parts.iter().find(|p| p.color >= colors) {
            return Err(CombinatoricsError::ColorOutOfRange { color: p.color, level: colors });
        }
        let c = colors as usize;
        let mut w = alloc::vec![0; self.len()];
        for i in (0..self.len()).rev() {
            w[i] = if i + 1 == self.len() {
                self.parts[i].color as usize
            } else {
                let diff = (self.parts[i + 1].color as usize + c - self.parts[i].color as usize) % c;
                w[i + 1] + if diff == 0 { c } else { diff }
            };
        }
        Ok(w)
    }

    /// `Σ size · weight` over the parts, with [`part_weights`](Self::part_weights).
    pub fn bmaj_weights(&self, colors: u8) -> Result<usize, CombinatoricsError> {
        let w = self.part_weights(colors)?;
        Ok(self.parts.iter().zip(w).map(|(p, w)| p.size * w).sum())
    }
}

impl fmt::Display for ColoredComposition {
    /// Level 2 renders barred parts with a minus sign (`2,-1`); higher
    /// levels use a color suffix (`3~2`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            match (self.level, p.color) {
                (_, 0) => write!(f, "{}", p.size)?,
                (2, _) => write!(f, "-{}", p.size)?,
                (_, c) => write!(f, "{}~{}", p.size, c)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ColoredComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for ColoredComposition {
    type Err = CombinatoricsError;

    /// Parts are `n`, `-n` (color 1) or `n~c`; the level is 2 unless a
    /// larger color appears, in which case it is `max color + 1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CombinatoricsError::Parse(s.to_string());
        let body = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if body.is_empty() {
            return Ok(Self::empty(2));
        }
        let mut parts = Vec::new();
        for tok in body.split(',') {
            let tok = tok.trim();
            let part = if let Some(rest) = tok.strip_prefix('-') {
                ColoredPart::new(rest.trim().parse().map_err(|_| bad())?, 1)
            } else if let Some((size, color)) = tok.split_once('~') {
                ColoredPart::new(
                    size.trim().parse().map_err(|_| bad())?,
                    color.trim().parse().map_err(|_| bad())?,
                )
            } else {
                ColoredPart::new(tok.parse().map_err(|_| bad())?, 0)
            };
            parts.push(part);
        }
        let level = parts.iter().map(|p| p.color.saturating_add(1)).max().unwrap_or(0).max(2);
        Self::new(parts, level)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn j(s: &str) -> ColoredComposition {
        s.parse().unwrap()
    }

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    const WORKED: &str = "2,1,1,-3,-1,-2,4,-1,2,2";

    #[test]
    fn worked_example() {
        let jj = j(WORKED);
        assert_eq!(jj.rho().unwrap(), comp("2,1,1,3,1,6,3,2"));
        assert_eq!(jj.rho_merge().unwrap(), comp("2,1,1,3,1,6,3,2"));
        assert_eq!(jj.rho().unwrap().maj(), 55);
        assert_eq!(jj.barred_letters(), 7);
        assert_eq!(jj.bmaj().unwrap(), 117);
        assert_eq!(jj.part_weights(2).unwrap(), vec![14, 12, 10, 9, 7, 5, 4, 3, 2, 0]);
        assert_eq!(jj.bmaj_weights(2).unwrap(), 117);
    }

    #[test]
    fn small_examples() {
        assert_eq!(j("2,3").rho().unwrap(), comp("2,3"));
        assert_eq!(j("-2").rho().unwrap(), comp("2"));
        assert_eq!(j("-2").rho_merge().unwrap(), comp("2"));
        assert_eq!(j("-1,1").rho_merge().unwrap(), comp("2"));
        assert_eq!(j("4").bmaj().unwrap(), 0);
        assert_eq!(j("-1,1").bmaj().unwrap(), 1);
        assert_eq!(j("-2").bmaj_weights(2).unwrap(), 2);
        assert_eq!(j("-1,-1").bmaj_weights(2).unwrap(), 4);
    }

    #[test]
    fn rho_agrees_with_merge_rule_and_weights() {
        for n in 1..=7 {
            for jj in ColoredComposition::all(n, 2) {
                let rho = jj.rho().unwrap();
                assert_eq!(rho, jj.rho_merge().unwrap(), "{}", jj);
                assert_eq!(jj.bmaj().unwrap(), jj.bmaj_weights(2).unwrap(), "{}", jj);
            }
        }
    }

    #[test]
    fn rho_is_independent_of_representative() {
        for n in 1..=6 {
            for jj in ColoredComposition::all(n, 2) {
                let want = jj.rho().unwrap();
                for sigma in Permutation::with_descent_composition(&jj.underlying()) {
                    assert_eq!(jj.rho_with(&sigma).unwrap(), want, "{} via {}", jj, sigma);
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        // Σ_I c^{ℓ(I)} = c (c+1)^{n-1}
        for n in 1..=6 {
            assert_eq!(ColoredComposition::all(n, 2).len(), 2 * 3usize.pow(n as u32 - 1));
            assert_eq!(ColoredComposition::all(n, 3).len(), 3 * 4usize.pow(n as u32 - 1));
        }
    }

    #[test]
    fn three_colors() {
        let jj = j("2~2,1,3~1");
        assert_eq!(jj.level(), 3);
        // rightmost weight 1; (1-0) mod 3 = 1 -> 2; (0-2) mod 3 = 1 -> 3
        assert_eq!(jj.part_weights(3).unwrap(), vec![3, 2, 1]);
        assert_eq!(jj.bmaj_weights(3).unwrap(), 2 * 3 + 2 + 3);
        assert!(jj.bmaj().is_err());
        assert!(jj.bmaj_weights(2).is_err());
    }

    #[test]
    fn parse_display() {
        assert_eq!(j(WORKED).to_string(), WORKED);
        assert_eq!(j("3~1"), j("-3"));
        assert!("0,1".parse::<ColoredComposition>().is_err());
        assert!("1~x".parse::<ColoredComposition>().is_err());
    }

    #[test]
    fn coarsenings_merge_only_equal_colors() {
        let mut c = j("1,1,-1,-1").same_color_coarsenings();
        c.sort();
        let mut want = vec![j("1,1,-1,-1"), j("2,-1,-1"), j("1,1,-2"), j("2,-2")];
        want.sort();
        assert_eq!(c, want);
    }
}
