use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{ArtinOracle, BraidError, BraidWord};
use crate::words::{FreeWord, WordError};

/// The Artin generator `A(i,j) = σ_{j-1} ⋯ σ_{i+1} σ_i² σ_{i+1}⁻¹ ⋯ σ_{j-1}⁻¹`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PureGen {
    pub i: usize,
    pub j: usize,
}

impl PureGen {
    pub fn new(i: usize, j: usize) -> Result<Self, BraidError> {
        if i == 0 || i >= j {
            return Err(BraidError::InvalidPureGen { i, j });
        }
        Ok(PureGen { i, j })
    }

    /// The free factor `F_{j-1} = ⟨A(1,j), …, A(j-1,j)⟩` this generator belongs to.
    pub fn level(&self) -> usize {
        self.j - 1
    }

    /// σ-expansion in `B_strands`.
    pub fn expand(&self, strands: usize) -> Result<BraidWord, BraidError> {
        if self.j > strands {
            return Err(BraidError::InvalidPureGen { i: self.i, j: self.j });
        }
        let mut letters: Vec<(usize, i64)> = ((self.i + 1)..self.j).rev().map(|k| (k, 1)).collect();
        letters.push((self.i, 2));
        letters.extend(((self.i + 1)..self.j).map(|k| (k, -1)));
        BraidWord::new(strands, letters)
    }
}

impl fmt::Display for PureGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A({},{})", self.i, self.j)
    }
}

/// A word in the generators `A(i,j)` of `P_n`, freely reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PureWord {
    strands: usize,
    letters: Vec<(PureGen, i64)>,
}

impl PureWord {
    pub fn identity(strands: usize) -> Self {
        PureWord { strands, letters: Vec::new() }
    }

    pub fn new<I>(strands: usize, letters: I) -> Result<Self, BraidError>
    where
        I: IntoIterator<Item = (PureGen, i64)>,
    {
        if strands < 2 {
            return Err(BraidError::InvalidStrands(strands));
        }
        let mut out = PureWord::identity(strands);
        for (g, e) in letters {
            if g.j > strands {
                return Err(BraidError::InvalidPureGen { i: g.i, j: g.j });
            }
            out.push(g, e);
        }
        Ok(out)
    }

    pub fn generator(strands: usize, i: usize, j: usize) -> Result<Self, BraidError> {
        Self::new(strands, [(PureGen::new(i, j)?, 1)])
    }

    fn push(&mut self, g: PureGen, e: i64) {
        if e == 0 {
            return;
        }
        if let Some(last) = self.letters.last_mut() {
            if last.0 == g {
                last.1 += e;
                if last.1 == 0 {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push((g, e));
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[(PureGen, i64)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of letters counted with multiplicity.
    pub fn len(&self) -> u64 {
        self.letters.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    pub fn multiply(&self, other: &PureWord) -> Result<PureWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch { left: self.strands, right: other.strands });
        }
        let mut out = self.clone();
        for &(g, e) in &other.letters {
            out.push(g, e);
        }
        Ok(out)
    }

    pub fn invert(&self) -> PureWord {
        PureWord { strands: self.strands, letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    /// σ-expansion.
    pub fn expand(&self) -> Result<BraidWord, BraidError> {
        let mut out = BraidWord::identity(self.strands)?;
        for &(g, e) in &self.letters {
            out = out.multiply(&g.expand(self.strands)?.pow(e))?;
        }
        Ok(out)
    }

    /// The word `w` over the generators of level `t` (i.e. `A(k, t+1)`), lifted.
    pub fn from_level_word(strands: usize, level: usize, w: &FreeWord) -> Result<PureWord, BraidError> {
        if w.rank() != level || level + 1 > strands {
            return Err(BraidError::InvalidLevel { level, strands });
        }
        PureWord::new(strands, w.syllables().iter().map(|s| (PureGen { i: s.gen, j: level + 1 }, s.exp)))
    }

    /// Parse tokens `A(i,j)` with optional `^k`, plus the aliases
    /// `a1 = A(2,3)`, `a2 = A(1,3)`, `b1 = A(3,4)`, `b2 = A(2,4)`, `b3 = A(1,4)`
    /// and `c = A(1,2) A(1,3) A(2,3) A(1,4) A(2,4) A(3,4)` (the generator
    /// `(σ1 σ2 σ3)^4` of the centre of `P_4`).
    pub fn parse(strands: usize, text: &str) -> Result<PureWord, BraidError> {
        let mut out = PureWord::identity(strands);
        if strands < 2 {
            return Err(BraidError::InvalidStrands(strands));
        }
        let mut p = Scanner { text, pos: 0 };
        loop {
            p.skip_ws();
            if p.done() {
                break;
            }
            let start = p.pos;
            let base: Vec<PureGen> = if p.eat("A(") {
                let i = p.number()?;
                p.skip_ws();
                p.expect(",")?;
                let j = p.number()?;
                p.skip_ws();
                p.expect(")")?;
                let g = PureGen::new(i as usize, j as usize).map_err(|_| p.err(start, "need 1 ≤ i < j"))?;
                vec![g]
            } else {
                let name = p.ident().to_string();
                if name.is_empty() {
                    let c = p.rest().chars().next().unwrap_or(' ');
                    return Err(p.err(start, &format!("unexpected character `{c}`")));
                }
                let g = |i, j| PureGen { i, j };
                match name.as_str() {
                    "a1" => vec![g(2, 3)],
                    "a2" => vec![g(1, 3)],
                    "b1" => vec![g(3, 4)],
                    "b2" => vec![g(2, 4)],
                    "b3" => vec![g(1, 4)],
                    "c" if strands == 4 => vec![g(1, 2), g(1, 3), g(2, 3), g(1, 4), g(2, 4), g(3, 4)],
                    _ => return Err(p.err(start, &format!("unknown pure generator `{name}`"))),
                }
            };
            let exp = if p.eat("^") { p.number()? } else { 1 };
            if let Some(bad) = base.iter().find(|g| g.j > strands) {
                return Err(p.err(start, &format!("{bad} needs at least {} strands", bad.j)));
            }
            let block: Vec<(PureGen, i64)> = base.iter().map(|&g| (g, 1)).collect();
            let block = PureWord { strands, letters: block };
            let block = if exp < 0 { block.invert() } else { block };
            for _ in 0..exp.unsigned_abs() {
                out = out.multiply(&block)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for PureWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, (g, e)) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

struct Scanner<'a> {
    text: &'a str,
    pos: usize,
}

impl Scanner<'_> {
    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }
    fn done(&self) -> bool {
        self.pos >= self.text.len()
    }
    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }
    fn eat(&mut self, s: &str) -> bool {
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }
    fn expect(&mut self, s: &str) -> Result<(), BraidError> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.err(self.pos, &format!("expected `{s}`")))
        }
    }
    fn ident(&mut self) -> &str {
        let len = self.rest().find(|c: char| !c.is_ascii_alphanumeric()).unwrap_or(self.rest().len());
        let start = self.pos;
        self.pos += len;
        &self.text[start..self.pos]
    }
    fn number(&mut self) -> Result<i64, BraidError> {
        self.skip_ws();
        let start = self.pos;
        let rest = self.rest();
        let mut len = rest.find(|c: char| !(c.is_ascii_digit() || c == '-')).unwrap_or(rest.len());
        if len == 0 {
            len = 1.min(rest.len());
        }
        self.pos += len;
        self.text[start..self.pos].parse().map_err(|_| self.err(start, "expected an integer"))
    }
    fn err(&self, pos: usize, msg: &str) -> BraidError {
        BraidError::Word(WordError::Parse { pos, msg: msg.to_string() })
    }
}

/// Rewrites pure σ-words as words in the `A(i,j)`.
///
/// Coset tracking through `B_n → S_n`: with a fixed positive σ-word `T_π` for
/// every permutation, a pure word `s_1 ⋯ s_m` equals the product of the
/// Schreier elements `T_{π_{k-1}} s_k T_{π_k}⁻¹`. Each Schreier element is
/// pure and is rewritten once, by reading its level coordinates off the Artin
/// representation, then cached.
#[derive(Debug, Default)]
pub struct PureRewriter {
    oracle: ArtinOracle,
    cache: HashMap<(Vec<usize>, usize, i64), PureWord>,
}

impl PureRewriter {
    pub fn new(oracle: ArtinOracle) -> Self {
        PureRewriter { oracle, cache: HashMap::new() }
    }

    pub fn pure_from_sigma(&mut self, w: &BraidWord) -> Result<PureWord, BraidError> {
        if !w.is_pure() {
            return Err(BraidError::NotPure(w.to_string()));
        }
        let n = w.strands();
        let mut out = PureWord::identity(n);
        let mut coset = super::Permutation::identity(n);
        for s in w.letters() {
            let sign = s.exp.signum();
            for _ in 0..s.exp.unsigned_abs() {
                let key = (coset.images().to_vec(), s.gen, sign);
                let next = coset.compose(&super::Permutation::transposition(n, s.gen));
                if !self.cache.contains_key(&key) {
                    let schreier = coset
                        .to_braid()?
                        .multiply(&BraidWord::sigma(n, s.gen, sign)?)?
                        .multiply(&next.to_braid()?.invert())?;
                    let rewritten = levels_to_pure(n, &self.oracle.levels_by_forgetting(&schreier)?)?;
                    self.cache.insert(key.clone(), rewritten);
                }
                out = out.multiply(&self.cache[&key])?;
                coset = next;
            }
        }
        Ok(out)
    }
}

/// `pure_from_sigma` with a fresh rewriter.
pub fn pure_from_sigma(w: &BraidWord) -> Result<PureWord, BraidError> {
    PureRewriter::default().pure_from_sigma(w)
}

/// Multiply out level words, top level (`F_{n-1}`) first.
pub fn levels_to_pure(strands: usize, levels: &[FreeWord]) -> Result<PureWord, BraidError> {
    let mut out = PureWord::identity(strands);
    for (k, w) in levels.iter().enumerate() {
        let level = strands - 1 - k;
        out = out.multiply(&PureWord::from_level_word(strands, level, w)?)?;
    }
    Ok(out)
}
