//! Brute-force enumeration of Dyck paths and their left-to-right maxima.
//!
//! This is the ground truth every generating function and closed form is
//! checked against, so it stays deliberately literal.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Default ceiling on the semi-length accepted by [`enumerate`].
pub const DEFAULT_MAX_N: u32 = 16;

/// Paths are packed into a `u64`, one bit per step.
pub const HARD_MAX_N: u32 = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Up,
    Down,
}

/// A balanced sequence of `2n` steps that never dips below the axis.
///
/// Bit `i` of `downs` is set when step `i` is a down step.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct DyckPath {
    semi_length: u32,
    downs: u64,
}

impl DyckPath {
    pub fn empty() -> Self {
        DyckPath {
            semi_length: 0,
            downs: 0,
        }
    }

    pub fn from_steps(steps: &[Step]) -> Result<Self> {
        if steps.len() % 2 != 0 || steps.len() > 2 * HARD_MAX_N as usize {
            return Err(Error::Domain(format!(
                "a Dyck path needs an even number of at most {} steps, got {}",
                2 * HARD_MAX_N,
                steps.len()
            )));
        }
        let mut downs = 0u64;
        let mut h: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            match s {
                Step::Up => h += 1,
                Step::Down => {
                    h -= 1;
                    downs |= 1 << i;
                }
            }
            if h < 0 {
                return Err(Error::Domain(format!("path goes below the axis at step {i}")));
            }
        }
        if h != 0 {
            return Err(Error::Domain(format!("path ends at height {h}, not 0")));
        }
        Ok(DyckPath {
            semi_length: (steps.len() / 2) as u32,
            downs,
        })
    }

    /// Parses a `u`/`d` word such as `"uuddud"`.
    pub fn parse(word: &str) -> Result<Self> {
        let steps = word
            .chars()
            .map(|c| match c {
                'u' | 'U' => Ok(Step::Up),
                'd' | 'D' => Ok(Step::Down),
                other => Err(Error::Domain(format!("unexpected step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_steps(&steps)
    }

    pub fn semi_length(&self) -> u32 {
        self.semi_length
    }

    pub fn len(&self) -> usize {
        2 * self.semi_length as usize
    }

    pub fn is_empty(&self) -> bool {
        self.semi_length == 0
    }

    pub fn step(&self, i: usize) -> Step {
        if self.downs >> i & 1 == 1 {
            Step::Down
        } else {
            Step::Up
        }
    }

    pub fn steps(&self) -> impl Iterator<Item = Step> + '_ {
        (0..self.len()).map(move |i| self.step(i))
    }

    /// Heights of all `2n + 1` lattice points, starting with the origin.
    pub fn heights(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut h = 0u32;
        out.push(h);
        for s in self.steps() {
            match s {
                Step::Up => h += 1,
                Step::Down => h -= 1,
            }
            out.push(h);
        }
        out
    }

    /// Positions and heights of peak apexes, left to right.
    ///
    /// The apex of the peak formed by steps `i, i+1` is lattice point `i + 1`.
    pub fn peaks(&self) -> Vec<(usize, u32)> {
        let hs = self.heights();
        (0..self.len().saturating_sub(1))
            .filter(|&i| self.step(i) == Step::Up && self.step(i + 1) == Step::Down)
            .map(|i| (i + 1, hs[i + 1]))
            .collect()
    }

    pub fn height(&self) -> u32 {
        self.heights().into_iter().max().unwrap_or(0)
    }

    /// Number of returns to the axis after the start.
    pub fn returns(&self) -> u32 {
        self.heights().iter().skip(1).filter(|&&h| h == 0).count() as u32
    }

    /// Peaks higher than every earlier peak.
    pub fn strict_maxima(&self) -> u32 {
        let mut best = 0u32;
        let mut count = 0;
        for (_, h) in self.peaks() {
            if h > best {
                best = h;
                count += 1;
            }
        }
        count
    }

    /// Peaks whose apex is higher than every lattice point before it,
    /// checked point by point. Always agrees with [`Self::strict_maxima`].
    pub fn strict_maxima_by_points(&self) -> u32 {
        let hs = self.heights();
        self.peaks()
            .into_iter()
            .filter(|&(pos, h)| hs[..pos].iter().all(|&prev| prev < h))
            .count() as u32
    }

    /// Peaks at least as high as every earlier peak.
    pub fn weak_maxima(&self) -> u32 {
        let mut best = 0u32;
        let mut count = 0;
        for (_, h) in self.peaks() {
            if h >= best {
                best = h;
                count += 1;
            }
        }
        count
    }

    pub fn stats(&self) -> PathStats {
        let hs = self.heights();
        let mut strict = 0;
        let mut weak = 0;
        let mut peaks = 0;
        let mut best = 0;
        for i in 0..self.len().saturating_sub(1) {
            if self.step(i) == Step::Up && self.step(i + 1) == Step::Down {
                let h = hs[i + 1];
                peaks += 1;
                if h > best {
                    strict += 1;
                }
                if h >= best {
                    weak += 1;
                    best = h;
                }
            }
        }
        PathStats {
            semi_length: self.semi_length,
            height: hs.iter().copied().max().unwrap_or(0),
            strict_ltr: strict,
            weak_ltr: weak,
            peaks,
            returns: hs.iter().skip(1).filter(|&&h| h == 0).count() as u32,
        }
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.steps() {
            f.write_str(match s {
                Step::Up => "u",
                Step::Down => "d",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckPath({self})")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathStats {
    pub semi_length: u32,
    pub height: u32,
    pub strict_ltr: u32,
    pub weak_ltr: u32,
    pub peaks: u32,
    pub returns: u32,
}

/// Iterator over all Dyck paths of one semi-length in lexicographic order
/// with `Up < Down`.
pub struct DyckPaths {
    n: usize,
    // true = Down
    current: Option<Vec<bool>>,
}

impl DyckPaths {
    fn new(n: u32) -> Self {
        let n = n as usize;
        let first = (0..2 * n).map(|i| i >= n).collect();
        DyckPaths {
            n,
            current: Some(first),
        }
    }

    fn advance(&mut self) {
        let Some(steps) = self.current.as_mut() else {
            return;
        };
        // Rightmost up step that can become a down step: the height just
        // before it must be at least 1.
        let mut height_before = Vec::with_capacity(steps.len());
        let mut h = 0i64;
        for &down in steps.iter() {
            height_before.push(h);
            h += if down { -1 } else { 1 };
        }
        let pivot = (0..steps.len())
            .rev()
            .find(|&i| !steps[i] && height_before[i] >= 1);
        let Some(i) = pivot else {
            self.current = None;
            return;
        };
        let ups_before = steps[..i].iter().filter(|&&d| !d).count();
        steps[i] = true;
        let ups_left = self.n - ups_before;
        for (k, slot) in steps[i + 1..].iter_mut().enumerate() {
            *slot = k >= ups_left;
        }
    }
}

impl Iterator for DyckPaths {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let steps = self.current.as_ref()?;
        let downs = steps
            .iter()
            .enumerate()
            .filter(|(_, &d)| d)
            .fold(0u64, |acc, (i, _)| acc | 1 << i);
        let path = DyckPath {
            semi_length: self.n as u32,
            downs,
        };
        self.advance();
        Some(path)
    }
}

/// All Dyck paths of semi-length `n`, guarded by [`DEFAULT_MAX_N`].
pub fn enumerate(n: u32) -> Result<DyckPaths> {
    enumerate_with_limit(n, DEFAULT_MAX_N)
}

pub fn enumerate_with_limit(n: u32, limit: u32) -> Result<DyckPaths> {
    let limit = limit.min(HARD_MAX_N);
    if n > limit {
        return Err(Error::Guard {
            what: "semi-length",
            requested: n as u64,
            limit: limit as u64,
        });
    }
    Ok(DyckPaths::new(n))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct HeightRow {
    pub paths: u64,
    pub strict: u64,
    pub weak: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Totals {
    pub n: u32,
    pub catalan: u64,
    pub strict_total: u64,
    pub weak_total: u64,
    pub by_height: BTreeMap<u32, HeightRow>,
}

impl Totals {
    /// Occurrences of weak maxima that are not strict.
    pub fn weak_only(&self) -> u64 {
        self.weak_total - self.strict_total
    }
}

pub fn totals(n: u32) -> Result<Totals> {
    totals_with_limit(n, DEFAULT_MAX_N)
}

pub fn totals_with_limit(n: u32, limit: u32) -> Result<Totals> {
    let mut out = Totals {
        n,
        catalan: 0,
        strict_total: 0,
        weak_total: 0,
        by_height: BTreeMap::new(),
    };
    for p in enumerate_with_limit(n, limit)? {
        let s = p.stats();
        out.catalan += 1;
        out.strict_total += s.strict_ltr as u64;
        out.weak_total += s.weak_ltr as u64;
        let row = out.by_height.entry(s.height).or_default();
        row.paths += 1;
        row.strict += s.strict_ltr as u64;
        row.weak += s.weak_ltr as u64;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(w: &str) -> DyckPath {
        DyckPath::parse(w).unwrap()
    }

    #[test]
    fn counts_match_catalan() {
        let expected = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(enumerate(n as u32).unwrap().count() as u64, c, "n = {n}");
        }
    }

    #[test]
    fn lexicographic_and_distinct() {
        let words: Vec<String> = enumerate(5).unwrap().map(|p| p.to_string()).collect();
        // 'u' < 'd' as steps, so compare with the letters swapped
        let key = |w: &String| w.replace('u', "0").replace('d', "1");
        let mut sorted = words.clone();
        sorted.sort_by_key(key);
        sorted.dedup();
        assert_eq!(words, sorted);
        assert_eq!(words.first().unwrap(), "uuuuuddddd");
        assert_eq!(words.last().unwrap(), "ududududud");
    }

    #[test]
    fn empty_path() {
        let all: Vec<_> = enumerate(0).unwrap().collect();
        assert_eq!(all, vec![DyckPath::empty()]);
        let s = all[0].stats();
        assert_eq!((s.strict_ltr, s.weak_ltr, s.height, s.returns), (0, 0, 0, 0));
    }

    #[test]
    fn guard() {
        assert!(matches!(enumerate(17), Err(Error::Guard { .. })));
        assert!(enumerate_with_limit(17, 17).is_ok());
        assert!(enumerate_with_limit(40, 64).is_err());
    }

    #[test]
    fn strict_examples() {
        assert_eq!(p("ud").strict_maxima(), 1);
        assert_eq!(p("udud").strict_maxima(), 1);
        // first path of the length-14 illustration: peaks at A and P count
        let left = p("uuduuddudduudd");
        assert_eq!(left.strict_maxima(), 2);
        assert_eq!(left.height(), 3);
        assert_eq!(left.strict_maxima_by_points(), 2);
    }

    #[test]
    fn weak_examples() {
        assert_eq!(p("ud").weak_maxima(), 1);
        assert_eq!(p("udud").weak_maxima(), 2);
        assert_eq!(p("uudd").weak_maxima(), 1);
        let sum: u32 = enumerate(4).unwrap().map(|p| p.weak_maxima()).sum();
        assert_eq!(sum, 29);
    }

    #[test]
    fn returns_and_height() {
        let s = p("uduudd").stats();
        assert_eq!(s.returns, 2);
        assert_eq!(s.height, 2);
        assert_eq!(s.peaks, 2);
    }

    #[test]
    fn parse_rejects_bad_words() {
        assert!(DyckPath::parse("du").is_err());
        assert!(DyckPath::parse("uud").is_err());
        assert!(DyckPath::parse("uxd").is_err());
        assert!(DyckPath::parse("uudu").is_err());
    }

    #[test]
    fn totals_examples() {
        let t = totals(4).unwrap();
        assert_eq!((t.catalan, t.strict_total, t.weak_total), (14, 19, 29));
        assert_eq!(t.weak_only(), 10);
        let heights: Vec<u64> = t.by_height.values().map(|r| r.paths).collect();
        assert_eq!(heights, vec![1, 7, 5, 1]);

        let t = totals(1).unwrap();
        assert_eq!((t.catalan, t.strict_total, t.weak_total), (1, 1, 1));

        let t = totals(6).unwrap();
        assert_eq!((t.catalan, t.strict_total, t.weak_total), (132, 216, 341));
    }

    #[test]
    fn per_path_invariants() {
        for n in 1..=10 {
            for path in enumerate(n).unwrap() {
                let s = path.stats();
                assert!(1 <= s.strict_ltr && s.strict_ltr <= s.weak_ltr, "{path:?}");
                assert!(s.weak_ltr <= s.peaks);
                assert!(s.strict_ltr <= s.height);
                assert_eq!(s.strict_ltr, path.strict_maxima());
                assert_eq!(s.weak_ltr, path.weak_maxima());
                assert_eq!(path.strict_maxima(), path.strict_maxima_by_points(), "{path:?}");
            }
        }
    }
}
