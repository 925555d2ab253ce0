use std::fmt;

use super::BraidError;
use crate::words::{self, FreeWord, Syllable};

/// A word in the Artin generators `σ_1 … σ_{n-1}` of `B_n`.
///
/// Free reduction of σ-letters is exactly free reduction in `F_{n-1}`, so the
/// letters are kept as a [`FreeWord`] of rank `n - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    word: FreeWord,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        check_strands(strands)?;
        Ok(BraidWord { strands, word: FreeWord::identity(strands - 1) })
    }

    /// Build from `(index, exponent)` pairs, reducing on the way.
    pub fn new<I>(strands: usize, letters: I) -> Result<Self, BraidError>
    where
        I: IntoIterator<Item = (usize, i64)>,
    {
        check_strands(strands)?;
        let word = FreeWord::reduce(strands - 1, letters).map_err(|e| match e {
            words::WordError::GeneratorOutOfRange { index, .. } => BraidError::IndexOutOfRange { index, strands },
            other => BraidError::Word(other),
        })?;
        Ok(BraidWord { strands, word })
    }

    pub fn sigma(strands: usize, index: usize, exp: i64) -> Result<Self, BraidError> {
        Self::new(strands, [(index, exp)])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Syllable] {
        self.word.syllables()
    }

    /// Letter count with `σ_i^e` counted `|e|` times.
    pub fn len(&self) -> u64 {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    fn check(&self, other: &BraidWord) -> Result<(), BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch { left: self.strands, right: other.strands });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        self.check(other)?;
        let mut word = self.word.clone();
        word.append(&other.word);
        Ok(BraidWord { strands: self.strands, word })
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord { strands: self.strands, word: self.word.invert() }
    }

    pub fn pow(&self, exp: i64) -> BraidWord {
        BraidWord { strands: self.strands, word: self.word.pow(exp) }
    }

    /// `by · self · by⁻¹`.
    pub fn conjugate(&self, by: &BraidWord) -> Result<BraidWord, BraidError> {
        self.check(by)?;
        let mut word = by.word.clone();
        word.append(&self.word);
        word.append_inverse(&by.word);
        Ok(BraidWord { strands: self.strands, word })
    }

    /// The same braid viewed on `strands` strands (extra strands on the right).
    pub fn widen(&self, strands: usize) -> Result<BraidWord, BraidError> {
        if strands < self.strands {
            return Err(BraidError::StrandMismatch { left: self.strands, right: strands });
        }
        Ok(BraidWord { strands, word: self.word.with_rank(strands - 1).map_err(BraidError::Word)? })
    }

    /// Image in the symmetric group.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for s in self.letters() {
            if s.exp % 2 != 0 {
                p = p.compose(&Permutation::transposition(self.strands, s.gen));
            }
        }
        p
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    /// Delete the strand that starts in the last position.
    ///
    /// On pure braids this is the forgetful map `P_n → P_{n-1}`.
    pub fn forget_last_strand(&self) -> Result<BraidWord, BraidError> {
        let n = self.strands;
        if n < 3 {
            return Err(BraidError::InvalidStrands(n - 1));
        }
        let mut pos = n;
        let mut out = Vec::new();
        for s in self.letters() {
            let i = s.gen;
            for _ in 0..s.exp.unsigned_abs() {
                if pos == i {
                    pos = i + 1;
                } else if pos == i + 1 {
                    pos = i;
                } else if i + 1 < pos {
                    out.push((i, s.exp.signum()));
                } else {
                    out.push((i - 1, s.exp.signum()));
                }
            }
        }
        BraidWord::new(n - 1, out)
    }

    /// Parse `s1 s2^-1 s3^4`.
    pub fn parse(strands: usize, text: &str) -> Result<BraidWord, BraidError> {
        check_strands(strands)?;
        let err = |pos: usize, msg: String| BraidError::Word(words::WordError::Parse { pos, msg });
        let bytes = text.as_bytes();
        let digits = |from: usize| from + bytes[from..].iter().take_while(|b| b.is_ascii_digit()).count();
        let mut raw = Vec::new();
        let mut pos = 0;
        while pos < bytes.len() {
            if bytes[pos].is_ascii_whitespace() {
                pos += 1;
                continue;
            }
            let start = pos;
            if bytes[pos] != b's' {
                let c = text[pos..].chars().next().unwrap_or(' ');
                return Err(err(pos, format!("expected `s`, found `{c}`")));
            }
            let end = digits(pos + 1);
            let index =
                text[pos + 1..end].parse::<usize>().ok().filter(|&i| i >= 1 && i < strands).ok_or_else(|| {
                    err(start, format!("expected a generator s1..s{}, found `{}`", strands - 1, &text[start..end]))
                })?;
            pos = end;
            let mut exp = 1;
            if bytes.get(pos) == Some(&b'^') {
                let from = pos + 1;
                let sign = usize::from(bytes.get(from) == Some(&b'-'));
                let end = digits(from + sign);
                exp = text[from..end].parse().map_err(|_| err(from, "bad exponent".into()))?;
                pos = end;
            }
            raw.push((index, exp));
        }
        BraidWord::new(strands, raw)
    }
}

fn check_strands(strands: usize) -> Result<(), BraidError> {
    if strands < 2 {
        return Err(BraidError::InvalidStrands(strands));
    }
    Ok(())
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..self.strands).map(|i| format!("s{i}")).collect();
        let shown = self.word.display_with(&names).to_string();
        f.write_str(&shown)
    }
}

/// A permutation of `{1..n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    pub fn transposition(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return None;
            }
            seen[v - 1] = true;
        }
        Some(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&k| self.apply(k)).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v - 1] = k + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// A positive σ-word whose permutation is `self`.
    pub fn to_braid(&self) -> Result<BraidWord, BraidError> {
        // Peel descents from the right: p = (p ∘ τ_k) ∘ τ_k.
        let mut p = self.images.clone();
        let mut rev = Vec::new();
        while let Some(k) = (0..p.len().saturating_sub(1)).find(|&k| p[k] > p[k + 1]) {
            p.swap(k, k + 1);
            rev.push((k + 1, 1));
        }
        rev.reverse();
        BraidWord::new(self.images.len(), rev)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut any = false;
        for start in 1..=n {
            if seen[start - 1] || self.apply(start) == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut k = start;
            let mut first = true;
            while !seen[k - 1] {
                seen[k - 1] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{k}")?;
                first = false;
                k = self.apply(k);
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}
