//! Reduced words in finitely generated free groups.
//!
//! Words are stored run-length encoded: a sequence of syllables `x_g^e`
//! with `e != 0` and no two adjacent syllables on the same generator.
//! Generators are numbered from 1.

use std::fmt;

use thiserror::Error;

/// Hard ceiling on the letter count of a word produced by substitution.
pub const DEFAULT_MAX_LETTERS: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("generator x{index} out of range for a free group of rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("word length {len} exceeds the ceiling of {limit} letters")]
    TooLong { len: u64, limit: u64 },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// One syllable `x_gen^exp`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub gen: usize,
    pub exp: i64,
}

/// A freely reduced word over `rank` generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: usize,
    syllables: Vec<Syllable>,
}

fn push_syllable(out: &mut Vec<Syllable>, gen: usize, exp: i64) {
    if exp == 0 {
        return;
    }
    if let Some(last) = out.last_mut() {
        if last.gen == gen {
            last.exp += exp;
            if last.exp == 0 {
                out.pop();
            }
            return;
        }
    }
    out.push(Syllable { gen, exp });
}

impl FreeWord {
    pub fn identity(rank: usize) -> Self {
        FreeWord { rank, syllables: Vec::new() }
    }

    /// The single generator `x_index`.
    pub fn generator(rank: usize, index: usize) -> Result<Self, WordError> {
        Self::reduce(rank, [(index, 1)])
    }

    /// Freely reduce a raw sequence of `(generator, exponent)` pairs.
    pub fn reduce<I>(rank: usize, raw: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = (usize, i64)>,
    {
        let mut syllables = Vec::new();
        for (gen, exp) in raw {
            if gen == 0 || gen > rank {
                return Err(WordError::GeneratorOutOfRange { index: gen, rank });
            }
            push_syllable(&mut syllables, gen, exp);
        }
        Ok(FreeWord { rank, syllables })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters, counting `x^e` as `|e|` letters.
    pub fn len(&self) -> u64 {
        self.syllables.iter().map(|s| s.exp.unsigned_abs()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Sum of exponents of each generator (the image in the abelianization).
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0; self.rank];
        for s in &self.syllables {
            sums[s.gen - 1] += s.exp;
        }
        sums
    }

    /// Expanded letter sequence, `+g` for `x_g` and `-g` for its inverse.
    pub fn letters(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.len() as usize);
        for s in &self.syllables {
            let g = s.gen as i64 * s.exp.signum();
            out.extend(std::iter::repeat_n(g, s.exp.unsigned_abs() as usize));
        }
        out
    }

    fn from_letters(rank: usize, letters: &[i64]) -> Self {
        let mut syllables = Vec::new();
        for &l in letters {
            push_syllable(&mut syllables, l.unsigned_abs() as usize, l.signum());
        }
        FreeWord { rank, syllables }
    }

    /// Reinterpret the word in a free group of a different rank.
    pub fn with_rank(&self, rank: usize) -> Result<Self, WordError> {
        if let Some(s) = self.syllables.iter().find(|s| s.gen > rank) {
            return Err(WordError::GeneratorOutOfRange { index: s.gen, rank });
        }
        Ok(FreeWord { rank, syllables: self.syllables.clone() })
    }

    fn check_rank(&self, other: &FreeWord) -> Result<(), WordError> {
        if self.rank != other.rank {
            return Err(WordError::RankMismatch { left: self.rank, right: other.rank });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &FreeWord) -> Result<FreeWord, WordError> {
        self.check_rank(other)?;
        let mut syllables = self.syllables.clone();
        for s in &other.syllables {
            push_syllable(&mut syllables, s.gen, s.exp);
        }
        Ok(FreeWord { rank: self.rank, syllables })
    }

    /// Multiply in place, reusing the allocation of `self`.
    pub(crate) fn append(&mut self, other: &FreeWord) {
        debug_assert_eq!(self.rank, other.rank);
        for s in &other.syllables {
            push_syllable(&mut self.syllables, s.gen, s.exp);
        }
    }

    pub(crate) fn append_inverse(&mut self, other: &FreeWord) {
        debug_assert_eq!(self.rank, other.rank);
        for s in other.syllables.iter().rev() {
            push_syllable(&mut self.syllables, s.gen, -s.exp);
        }
    }

    pub fn invert(&self) -> FreeWord {
        let syllables = self.syllables.iter().rev().map(|s| Syllable { gen: s.gen, exp: -s.exp }).collect();
        FreeWord { rank: self.rank, syllables }
    }

    /// `by · self · by⁻¹`.
    pub fn conjugate(&self, by: &FreeWord) -> Result<FreeWord, WordError> {
        self.check_rank(by)?;
        let mut out = by.clone();
        out.append(self);
        out.append_inverse(by);
        Ok(out)
    }

    pub fn pow(&self, exp: i64) -> FreeWord {
        let base = if exp < 0 { self.invert() } else { self.clone() };
        let mut out = FreeWord::identity(self.rank);
        for _ in 0..exp.unsigned_abs() {
            out.append(&base);
        }
        out
    }

    /// Split into `(core, conjugator)` with `self = conjugator · core · conjugator⁻¹`
    /// and `core` cyclically reduced.
    pub fn cyclic_reduce(&self) -> (FreeWord, FreeWord) {
        let letters = self.letters();
        let (mut lo, mut hi) = (0usize, letters.len());
        while hi - lo >= 2 && letters[lo] == -letters[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        (FreeWord::from_letters(self.rank, &letters[lo..hi]), FreeWord::from_letters(self.rank, &letters[..lo]))
    }

    /// Some `g` with `g · self · g⁻¹ = other`, if the two words are conjugate.
    pub fn conjugacy_witness(&self, other: &FreeWord) -> Option<FreeWord> {
        if self.rank != other.rank {
            return None;
        }
        let (core_a, conj_a) = self.cyclic_reduce();
        let (core_b, conj_b) = other.cyclic_reduce();
        let la = core_a.letters();
        let lb = core_b.letters();
        if la.len() != lb.len() {
            return None;
        }
        // core_a = u v and core_b = v u, so core_b = u⁻¹ core_a u.
        let shift = find_rotation(&la, &lb)?;
        let u = FreeWord::from_letters(self.rank, &la[..shift]);
        let mut g = conj_b;
        g.append_inverse(&u);
        g.append_inverse(&conj_a);
        debug_assert_eq!(self.conjugate(&g).as_ref(), Ok(other));
        Some(g)
    }

    /// Render using custom generator names.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        NamedWord { word: self, names }
    }
}

/// Smallest `k` with `b` equal to `a` rotated left by `k`.
fn find_rotation(a: &[i64], b: &[i64]) -> Option<usize> {
    let n = a.len();
    if n == 0 {
        return Some(0);
    }
    // KMP search of b inside a·a.
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && b[i] != b[k] {
            k = fail[k - 1];
        }
        if b[i] == b[k] {
            k += 1;
        }
        fail[i] = k;
    }
    let mut q = 0;
    for i in 0..(2 * n - 1) {
        let c = a[i % n];
        while q > 0 && c != b[q] {
            q = fail[q - 1];
        }
        if c == b[q] {
            q += 1;
        }
        if q == n {
            return Some(i + 1 - n);
        }
    }
    None
}

fn write_syllables<F>(f: &mut fmt::Formatter<'_>, syllables: &[Syllable], name: F) -> fmt::Result
where
    F: Fn(usize) -> String,
{
    if syllables.is_empty() {
        return write!(f, "1");
    }
    for (k, s) in syllables.iter().enumerate() {
        if k > 0 {
            write!(f, " ")?;
        }
        write!(f, "{}", name(s.gen))?;
        if s.exp != 1 {
            write!(f, "^{}", s.exp)?;
        }
    }
    Ok(())
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_syllables(f, &self.syllables, |g| format!("x{g}"))
    }
}

struct NamedWord<'a> {
    word: &'a FreeWord,
    names: &'a [String],
}

impl fmt::Display for NamedWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_syllables(f, &self.word.syllables, |g| self.names.get(g - 1).cloned().unwrap_or_else(|| format!("x{g}")))
    }
}

/// A homomorphism `F_source → F_target`, given by the images of the generators.
///
/// Composition is "right acts first": `a.compose(&b)` is `a ∘ b`, the map
/// that applies `b` and then `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeEndo {
    source_rank: usize,
    target_rank: usize,
    images: Vec<FreeWord>,
}

impl FreeEndo {
    pub fn new(source_rank: usize, target_rank: usize, images: Vec<FreeWord>) -> Result<Self, WordError> {
        if images.len() != source_rank {
            return Err(WordError::RankMismatch { left: images.len(), right: source_rank });
        }
        for w in &images {
            if w.rank != target_rank {
                return Err(WordError::RankMismatch { left: w.rank, right: target_rank });
            }
        }
        Ok(FreeEndo { source_rank, target_rank, images })
    }

    pub fn identity(rank: usize) -> Self {
        let images = (1..=rank).map(|i| FreeWord { rank, syllables: vec![Syllable { gen: i, exp: 1 }] }).collect();
        FreeEndo { source_rank: rank, target_rank: rank, images }
    }

    pub fn source_rank(&self) -> usize {
        self.source_rank
    }

    pub fn target_rank(&self) -> usize {
        self.target_rank
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    /// Image of generator `x_index` (1-based).
    pub fn image(&self, index: usize) -> &FreeWord {
        &self.images[index - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.source_rank == self.target_rank
            && self
                .images
                .iter()
                .enumerate()
                .all(|(i, w)| w.syllables.len() == 1 && w.syllables[0] == Syllable { gen: i + 1, exp: 1 })
    }

    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord, WordError> {
        self.apply_limited(w, u64::MAX)
    }

    /// Apply to `w`, failing once the partial result exceeds `limit` letters.
    pub fn apply_limited(&self, w: &FreeWord, limit: u64) -> Result<FreeWord, WordError> {
        if w.rank != self.source_rank {
            return Err(WordError::RankMismatch { left: w.rank, right: self.source_rank });
        }
        let mut out = FreeWord::identity(self.target_rank);
        // `bound` over-approximates the length; the exact count is taken only near the limit
        let mut bound = 0u64;
        for s in &w.syllables {
            let img = &self.images[s.gen - 1];
            let img_len = img.len();
            for _ in 0..s.exp.unsigned_abs() {
                if s.exp > 0 {
                    out.append(img);
                } else {
                    out.append_inverse(img);
                }
                bound += img_len;
                if bound > limit {
                    bound = out.len();
                    if bound > limit {
                        return Err(WordError::TooLong { len: bound, limit });
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &FreeEndo) -> Result<FreeEndo, WordError> {
        if other.target_rank != self.source_rank {
            return Err(WordError::RankMismatch { left: self.source_rank, right: other.target_rank });
        }
        let images = other.images.iter().map(|w| self.apply(w)).collect::<Result<Vec<_>, _>>()?;
        Ok(FreeEndo { source_rank: other.source_rank, target_rank: self.target_rank, images })
    }
}

/// Parse whitespace-separated tokens `name` or `name^k`, resolving names
/// with `lookup`. Returns `(generator, exponent)` pairs with byte offsets.
pub(crate) fn parse_tokens<F>(text: &str, mut lookup: F) -> Result<Vec<(usize, i64)>, WordError>
where
    F: FnMut(&str) -> Option<usize>,
{
    let mut out = Vec::new();
    for (pos, token) in tokens_with_offsets(text) {
        let (name, exp) = split_power(token, pos)?;
        let gen = lookup(name).ok_or_else(|| WordError::Parse { pos, msg: format!("unknown generator `{name}`") })?;
        out.push((gen, exp));
    }
    Ok(out)
}

pub(crate) fn tokens_with_offsets(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let base = text.as_ptr() as usize;
    text.split_whitespace().map(move |t| (t.as_ptr() as usize - base, t))
}

/// Split `name^k` into the name and the exponent (1 when absent).
pub(crate) fn split_power(token: &str, pos: usize) -> Result<(&str, i64), WordError> {
    match token.split_once('^') {
        None => Ok((token, 1)),
        Some((name, exp)) => {
            let exp: i64 = exp
                .parse()
                .map_err(|_| WordError::Parse { pos: pos + name.len() + 1, msg: format!("bad exponent `{exp}`") })?;
            if name.is_empty() {
                return Err(WordError::Parse { pos, msg: "missing generator before `^`".into() });
            }
            Ok((name, exp))
        }
    }
}

impl FreeWord {
    /// Parse `x1 x2^-1 x1^3` over the default generator names `x1…x_rank`.
    pub fn parse(rank: usize, text: &str) -> Result<FreeWord, WordError> {
        let raw = parse_tokens(text, |name| name.strip_prefix('x')?.parse().ok())?;
        FreeWord::reduce(rank, raw)
    }

    /// Parse using an explicit list of generator names (index = position + 1).
    pub fn parse_named(names: &[String], text: &str) -> Result<FreeWord, WordError> {
        let raw = parse_tokens(text, |name| names.iter().position(|n| n == name).map(|p| p + 1))?;
        FreeWord::reduce(names.len(), raw)
    }
}
