//! The Artin representation `B_n → Aut(F_n)` as a word-problem oracle.
//!
//! Convention: `σ_i` sends `x_i ↦ x_i x_{i+1} x_i⁻¹`, `x_{i+1} ↦ x_i` and fixes
//! the other generators, and letters act on the right: the image of a
//! generator under a braid word is obtained by feeding it through the letters
//! from left to right, so `ρ(uv) = ρ(v) ∘ ρ(u)`.
//!
//! With this orientation the image of `x_n` under an element `u` of the free
//! factor `U_n = ⟨A(1,n), …, A(n-1,n)⟩` has the form `W x_n W⁻¹`, and erasing
//! `x_n` from `W` is an isomorphism `U_n → F_{n-1}` sending `A(i,n)` to `x_i`.
//! [`ArtinOracle::decode_top_level`] uses this to read off free-group
//! coordinates without consulting any action table.

use super::{BraidError, BraidWord};
use crate::words::{FreeEndo, FreeWord, WordError, DEFAULT_MAX_LETTERS};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArtinOracle {
    max_letters: u64,
}

impl Default for ArtinOracle {
    fn default() -> Self {
        ArtinOracle { max_letters: DEFAULT_MAX_LETTERS }
    }
}

impl ArtinOracle {
    pub fn new(max_letters: u64) -> Self {
        ArtinOracle { max_letters }
    }

    pub fn max_letters(&self) -> u64 {
        self.max_letters
    }

    /// The automorphism of `F_n` attached to `σ_index^{sign}`.
    pub fn sigma_action(strands: usize, index: usize, sign: i64) -> FreeEndo {
        let n = strands;
        let gen = |g: usize| FreeWord::generator(n, g).expect("generator in range");
        let mut images: Vec<FreeWord> = (1..=n).map(gen).collect();
        let (i, j) = (index, index + 1);
        if sign > 0 {
            images[i - 1] = FreeWord::reduce(n, [(i, 1), (j, 1), (i, -1)]).unwrap();
            images[j - 1] = gen(i);
        } else {
            images[i - 1] = gen(j);
            images[j - 1] = FreeWord::reduce(n, [(j, -1), (i, 1), (j, 1)]).unwrap();
        }
        FreeEndo::new(n, n, images).unwrap()
    }

    fn feed(&self, strands: usize, w: &BraidWord, images: &mut [FreeWord]) -> Result<(), BraidError> {
        let plus: Vec<FreeEndo> = (1..strands).map(|i| Self::sigma_action(strands, i, 1)).collect();
        let minus: Vec<FreeEndo> = (1..strands).map(|i| Self::sigma_action(strands, i, -1)).collect();
        for s in w.letters() {
            let e = if s.exp > 0 { &plus[s.gen - 1] } else { &minus[s.gen - 1] };
            for _ in 0..s.exp.unsigned_abs() {
                for img in images.iter_mut() {
                    *img = e.apply_limited(img, self.max_letters).map_err(BraidError::Word)?;
                }
            }
        }
        Ok(())
    }

    /// `ρ(w)` as an automorphism of `F_n`.
    pub fn action(&self, w: &BraidWord) -> Result<FreeEndo, BraidError> {
        let n = w.strands();
        let mut images: Vec<FreeWord> = FreeEndo::identity(n).images().to_vec();
        self.feed(n, w, &mut images)?;
        FreeEndo::new(n, n, images).map_err(BraidError::Word)
    }

    /// Image of the single generator `x_k` under `ρ(w)`.
    pub fn image_of(&self, w: &BraidWord, k: usize) -> Result<FreeWord, BraidError> {
        let n = w.strands();
        let mut images = [FreeWord::generator(n, k).map_err(BraidError::Word)?];
        self.feed(n, w, &mut images)?;
        let [img] = images;
        Ok(img)
    }

    /// A pure braid is trivial iff it fixes `x_n` and its image in `P_{n-1}`
    /// (forget the last strand) is trivial: the kernel of forgetting is
    /// `U_n`, on which `x_n ↦ W x_n W⁻¹` is injective. One image per level is
    /// tracked instead of `n`.
    pub fn is_trivial(&self, w: &BraidWord) -> Result<bool, BraidError> {
        if !w.is_pure() {
            return Ok(false);
        }
        let mut cur = w.clone();
        loop {
            let n = cur.strands();
            let img = self.image_of(&cur, n)?;
            let s = img.syllables();
            if !(s.len() == 1 && s[0].gen == n && s[0].exp == 1) {
                return Ok(false);
            }
            if n == 2 {
                return Ok(true);
            }
            cur = cur.forget_last_strand()?;
        }
    }

    pub fn braid_equal(&self, u: &BraidWord, v: &BraidWord) -> Result<bool, BraidError> {
        if u.strands() != v.strands() {
            return Err(BraidError::StrandMismatch { left: u.strands(), right: v.strands() });
        }
        if u.permutation() != v.permutation() {
            return Ok(false);
        }
        // v⁻¹u and uv⁻¹ are conjugate; the first keeps the prefixes of a
        // combed word (top level first) cheap, the second is the fallback
        match self.is_trivial(&v.invert().multiply(u)?) {
            Err(BraidError::Word(WordError::TooLong { .. })) => self.is_trivial(&u.multiply(&v.invert())?),
            r => r,
        }
    }

    /// Whether `w` lies in the free factor `U_n` generated by `A(1,n) … A(n-1,n)`.
    pub fn is_top_level(&self, w: &BraidWord) -> Result<bool, BraidError> {
        if !w.is_pure() {
            return Ok(false);
        }
        if w.strands() == 2 {
            return Ok(true);
        }
        self.is_trivial(&w.forget_last_strand()?)
    }

    /// Coordinates of `w ∈ U_n` in the basis `A(1,n) … A(n-1,n)`, as a word
    /// over `n - 1` generators.
    pub fn decode_top_level(&self, w: &BraidWord) -> Result<FreeWord, BraidError> {
        if !self.is_top_level(w)? {
            return Err(BraidError::NotTopLevel(w.to_string()));
        }
        self.decode_unchecked(w)
    }

    fn decode_unchecked(&self, w: &BraidWord) -> Result<FreeWord, BraidError> {
        let n = w.strands();
        let img = self.image_of(w, n)?.letters();
        let m = img.len() / 2;
        let top = n as i64;
        let shaped = img.len() % 2 == 1 && img[m] == top && (0..m).all(|k| img[m + 1 + k] == -img[m - 1 - k]);
        if !shaped {
            return Err(BraidError::NotTopLevel(w.to_string()));
        }
        FreeWord::reduce(
            n - 1,
            img[..m].iter().filter(|l| l.abs() != top).map(|&l| (l.unsigned_abs() as usize, l.signum())),
        )
        .map_err(BraidError::Word)
    }

    /// Split a pure braid as `u · s(f(w))` with `u ∈ U_n` and `f` forgetting the
    /// last strand. Returns the coordinates of `u` and the σ-word `f(w)`.
    pub fn split_top_level(&self, w: &BraidWord) -> Result<(FreeWord, Option<BraidWord>), BraidError> {
        if !w.is_pure() {
            return Err(BraidError::NotPure(w.to_string()));
        }
        let n = w.strands();
        if n == 2 {
            return Ok((self.decode_unchecked(w)?, None));
        }
        let lower = w.forget_last_strand()?;
        let u = w.multiply(&lower.widen(n)?.invert())?;
        Ok((self.decode_unchecked(&u)?, Some(lower)))
    }

    /// Free-group coordinates of every level of a pure braid, top level
    /// (`F_{n-1}`) first, computed by repeatedly forgetting the last strand.
    pub fn levels_by_forgetting(&self, w: &BraidWord) -> Result<Vec<FreeWord>, BraidError> {
        let mut levels = Vec::with_capacity(w.strands() - 1);
        let mut current = Some(w.clone());
        while let Some(cur) = current {
            let (top, lower) = self.split_top_level(&cur)?;
            levels.push(top);
            current = lower;
        }
        Ok(levels)
    }
}

impl From<WordError> for BraidError {
    fn from(e: WordError) -> Self {
        BraidError::Word(e)
    }
}
