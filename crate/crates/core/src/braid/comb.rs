//! Artin combing: `P_n ≅ F_{n-1} ⋊ F_{n-2} ⋊ ⋯ ⋊ F_1`.

use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::{levels_to_pure, pure_braid_action, ActionTable, ArtinOracle, BraidError, PureGen, PureWord};
use crate::words::{FreeEndo, FreeWord, DEFAULT_MAX_LETTERS};

/// A pure braid as a product of free-group words, top level first:
/// `levels[0]` lies in `F_{n-1} = ⟨A(1,n) … A(n-1,n)⟩`, `levels[k]` in
/// `F_{n-1-k}`, and the braid is `levels[0] · levels[1] ⋯ levels[n-2]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombedForm {
    strands: usize,
    levels: Vec<FreeWord>,
}

impl CombedForm {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn levels(&self) -> &[FreeWord] {
        &self.levels
    }

    /// The word at level `t` (a word in `A(1,t+1) … A(t,t+1)`).
    pub fn level(&self, t: usize) -> &FreeWord {
        &self.levels[self.strands - 1 - t]
    }

    pub fn to_pure(&self) -> Result<PureWord, BraidError> {
        levels_to_pure(self.strands, &self.levels)
    }

    fn level_tokens(&self, k: usize) -> Vec<(String, i64)> {
        let top = self.strands - k;
        self.levels[k].syllables().iter().map(|s| (PureGen { i: s.gen, j: top }.to_string(), s.exp)).collect()
    }
}

impl std::fmt::Display for CombedForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for k in 0..self.levels.len() {
            let level = self.strands - 1 - k;
            let w = PureWord::from_level_word(self.strands, level, &self.levels[k]).map_err(|_| std::fmt::Error)?;
            writeln!(f, "F_{level}: {w}")?;
        }
        Ok(())
    }
}

impl Serialize for CombedForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let levels: Vec<Vec<(String, i64)>> = (0..self.levels.len()).map(|k| self.level_tokens(k)).collect();
        let mut st = serializer.serialize_struct("CombedForm", 2)?;
        st.serialize_field("n", &self.strands)?;
        st.serialize_field("levels", &levels)?;
        st.end()
    }
}

/// Combs pure words in `P_n`, caching the action tables of every level.
#[derive(Debug, Clone)]
pub struct Comber {
    strands: usize,
    /// `tables[t]` is the action on level `t`, for `t ≥ 2`.
    tables: Vec<Option<ActionTable>>,
    max_letters: u64,
}

impl Comber {
    pub fn new(strands: usize) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::InvalidStrands(strands));
        }
        let mut tables = vec![None, None];
        for t in 2..strands {
            tables.push(Some(pure_braid_action(strands, t)?));
        }
        Ok(Comber { strands, tables, max_letters: DEFAULT_MAX_LETTERS })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Push letters of the top free factor to the left using
    /// `a · x = φ(a)(x) · a`, then recurse on what is left.
    pub fn comb(&self, w: &PureWord) -> Result<CombedForm, BraidError> {
        let n = self.strands;
        if w.strands() != n {
            return Err(BraidError::StrandMismatch { left: w.strands(), right: n });
        }
        let mut rest: Vec<(PureGen, i64)> = w.letters().to_vec();
        let mut levels = Vec::with_capacity(n - 1);
        for t in (1..n).rev() {
            let top = t + 1;
            if t == 1 {
                let x = FreeWord::reduce(1, rest.iter().map(|&(_, e)| (1, e)))?;
                levels.push(x);
                break;
            }
            let table = self.tables[t].as_ref().expect("table for every level ≥ 2");
            // the prefix processed so far equals `head · lower` and `conj` is
            // conjugation by `lower` restricted to F_t
            let mut head = FreeWord::identity(t);
            let mut conj = FreeEndo::identity(t);
            let mut lower = Vec::new();
            // lower letters not yet folded into `conj`; only a later top letter needs them
            let mut pending: Vec<(usize, i64)> = Vec::new();
            for &(g, e) in &rest {
                if g.j == top {
                    for (idx, e) in pending.drain(..) {
                        let step = if e > 0 { table.forward(idx) } else { table.inverse(idx) };
                        for _ in 0..e.unsigned_abs() {
                            conj = conj.compose(step)?;
                        }
                        let size: u64 = conj.images().iter().map(|w| w.len()).sum();
                        if size > self.max_letters {
                            return Err(BraidError::Word(crate::words::WordError::TooLong {
                                len: size,
                                limit: self.max_letters,
                            }));
                        }
                    }
                    let x = FreeWord::reduce(t, [(g.i, e)])?;
                    head = head.multiply(&conj.apply_limited(&x, self.max_letters)?)?;
                } else {
                    pending.push((acting_index(g), e));
                    lower.push((g, e));
                }
            }
            levels.push(head);
            rest = lower;
        }
        Ok(CombedForm { strands: n, levels })
    }
}

/// Position of `A(r,s)` in the acting list `A(1,2), A(1,3), A(2,3), A(1,4), …`.
fn acting_index(g: PureGen) -> usize {
    (g.j - 1) * (g.j - 2) / 2 + g.i
}

/// Comb a pure word with freshly built tables.
pub fn comb(w: &PureWord) -> Result<CombedForm, BraidError> {
    Comber::new(w.strands())?.comb(w)
}

/// Multiply the levels back together and compare with `original` in `B_n`.
pub fn recombine(form: &CombedForm, original: &PureWord, oracle: &ArtinOracle) -> Result<bool, BraidError> {
    oracle.braid_equal(&form.to_pure()?.expand()?, &original.expand()?)
}
