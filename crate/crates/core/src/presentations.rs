//! Words in the infinite presentation
//! `F_N = < t_0, t_1, ... | t_k^-1 t_n t_k = t_{n+N-1}, k < n >`.
//!
//! Equality of words is decided through the faithful image in the grafting
//! group (see [`crate::grafting::phi`]); the rewriting here only produces
//! `pos * neg^-1` splits and sorted positive words.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::grafting::{phi, Pattern};
use crate::{Error, Result};

/// A word in the generators `t_k` of `F_N`, kept freely reduced.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FNWord {
    arity: usize,
    letters: Vec<(usize, i64)>,
}

impl FNWord {
    /// Builds a word and freely reduces it.
    pub fn new(arity: usize, letters: Vec<(usize, i64)>) -> Result<Self> {
        if arity < 2 {
            return Err(Error::InvalidArity(arity));
        }
        Ok(FNWord { arity, letters }.free_reduce())
    }

    pub fn identity(arity: usize) -> Result<Self> {
        FNWord::new(arity, Vec::new())
    }

    pub fn generator(arity: usize, index: usize) -> Result<Self> {
        FNWord::new(arity, vec![(index, 1)])
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of the absolute exponents.
    pub fn length(&self) -> u64 {
        self.letters.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&(_, e)| e > 0)
    }

    /// Merges adjacent letters with equal index and drops zero exponents.
    pub fn free_reduce(&self) -> FNWord {
        let mut out: Vec<(usize, i64)> = Vec::with_capacity(self.letters.len());
        for &(k, e) in &self.letters {
            if e == 0 {
                continue;
            }
            match out.last_mut() {
                Some((last, f)) if *last == k => {
                    *f += e;
                    if *f == 0 {
                        out.pop();
                    }
                }
                _ => out.push((k, e)),
            }
        }
        FNWord {
            arity: self.arity,
            letters: out,
        }
    }

    pub fn inverse(&self) -> FNWord {
        FNWord {
            arity: self.arity,
            letters: self.letters.iter().rev().map(|&(k, e)| (k, -e)).collect(),
        }
    }

    pub fn concat(&self, other: &FNWord) -> Result<FNWord> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        FNWord::new(self.arity, letters)
    }

    /// Expands exponents into single letters `(index, +1 | -1)`.
    pub fn syllables(&self) -> Vec<(usize, i64)> {
        self.letters
            .iter()
            .flat_map(|&(k, e)| std::iter::repeat_n((k, e.signum()), e.unsigned_abs() as usize))
            .collect()
    }

    fn from_syllables(arity: usize, syllables: &[(usize, i64)]) -> FNWord {
        FNWord {
            arity,
            letters: syllables.to_vec(),
        }
        .free_reduce()
    }

    /// Parses `t0 t1^-1 t4^2`. Letters may also be written `x<k>`; the
    /// empty word is `1` or blank.
    pub fn parse(text: &str, arity: usize) -> Result<FNWord> {
        if text.trim() == "1" {
            return FNWord::identity(arity);
        }
        let mut letters = Vec::new();
        let bytes = text.as_bytes();
        let mut i = 0;
        let syntax = |offset: usize, message: &str| Error::Syntax {
            offset,
            message: message.to_string(),
        };
        let number = |i: &mut usize| -> Option<u64> {
            let start = *i;
            while *i < bytes.len() && bytes[*i].is_ascii_digit() {
                *i += 1;
            }
            text[start..*i].parse().ok()
        };
        while i < bytes.len() {
            match bytes[i] {
                b if b.is_ascii_whitespace() => i += 1,
                b't' | b'x' => {
                    i += 1;
                    let at = i;
                    let k = number(&mut i).ok_or_else(|| syntax(at, "expected generator index"))?;
                    let mut e: i64 = 1;
                    if i < bytes.len() && bytes[i] == b'^' {
                        i += 1;
                        let negative = i < bytes.len() && bytes[i] == b'-';
                        if negative {
                            i += 1;
                        }
                        let at = i;
                        let m = number(&mut i).ok_or_else(|| syntax(at, "expected exponent"))?;
                        e = i64::try_from(m).map_err(|_| syntax(at, "exponent too large"))?;
                        if negative {
                            e = -e;
                        }
                    }
                    if i < bytes.len() && !bytes[i].is_ascii_whitespace() {
                        return Err(syntax(i, "expected whitespace between letters"));
                    }
                    letters.push((k as usize, e));
                }
                _ => return Err(syntax(i, "expected a letter t<k> or x<k>")),
            }
        }
        FNWord::new(arity, letters)
    }
}

/// Splits `w` as `pos * neg^-1` with `pos`, `neg` positive, by pushing the
/// leftmost inverse letter that precedes a positive one to the right:
/// `t_k^-1 t_n = t_{n+N-1} t_k^-1` and `t_n^-1 t_k = t_k t_{n+N-1}^-1` for
/// `k < n`, and `t_k^-1 t_k = 1`. Every step removes one inversion between a
/// negative and a later positive letter, so the loop terminates.
pub fn positive_normal_form(w: &FNWord) -> (FNWord, FNWord) {
    let shift = w.arity - 1;
    let mut s = w.syllables();
    while let Some(i) = (0..s.len().saturating_sub(1)).find(|&i| s[i].1 < 0 && s[i + 1].1 > 0) {
        let (a, b) = (s[i].0, s[i + 1].0);
        if a == b {
            s.drain(i..i + 2);
        } else if a < b {
            s[i] = (b + shift, 1);
            s[i + 1] = (a, -1);
        } else {
            s[i] = (b, 1);
            s[i + 1] = (a + shift, -1);
        }
    }
    let split = s.iter().position(|&(_, e)| e < 0).unwrap_or(s.len());
    let pos = FNWord::from_syllables(w.arity, &s[..split]);
    let neg: Vec<(usize, i64)> = s[split..].iter().rev().map(|&(k, _)| (k, 1)).collect();
    (pos, FNWord::from_syllables(w.arity, &neg))
}

/// Sorts a positive word into non-decreasing index order using
/// `t_n t_k = t_k t_{n+N-1}` (`k < n`). Returns `None` if `w` has an inverse
/// letter.
pub fn sort_positive(w: &FNWord) -> Option<FNWord> {
    if !w.is_positive() {
        return None;
    }
    let shift = w.arity - 1;
    let mut s: Vec<usize> = w.syllables().into_iter().map(|(k, _)| k).collect();
    while let Some(i) = (0..s.len().saturating_sub(1)).find(|&i| s[i] > s[i + 1]) {
        let (n, k) = (s[i], s[i + 1]);
        s[i] = k;
        s[i + 1] = n + shift;
    }
    let syllables: Vec<(usize, i64)> = s.into_iter().map(|k| (k, 1)).collect();
    Some(FNWord::from_syllables(w.arity, &syllables))
}

/// Decides `w1 = w2` in `F_N` by comparing images in `G_X` for the right
/// comb `X` with `N` leaves.
pub fn words_equal(w1: &FNWord, w2: &FNWord) -> Result<bool> {
    if w1.arity != w2.arity {
        return Err(Error::ArityMismatch {
            left: w1.arity,
            right: w2.arity,
        });
    }
    let pattern = Pattern::right_comb(w1.arity)?;
    Ok(phi(w1, &pattern)? == phi(w2, &pattern)?)
}

impl fmt::Display for FNWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, &(k, e)) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if e == 1 {
                write!(f, "t{k}")?;
            } else {
                write!(f, "t{k}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FNWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FNWord[N={}]({self})", self.arity)
    }
}
