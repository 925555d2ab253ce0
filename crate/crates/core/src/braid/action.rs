//! The conjugation action of `P_t` on the free factor
//! `F_t = ⟨A(1,t+1), …, A(t,t+1)⟩`.

use super::{ArtinOracle, BraidError, BraidWord, PureGen, PureWord};
use crate::words::{FreeEndo, FreeWord};

/// Reading of the `r < i < s` case of the conjugation table.
///
/// `Literal` ends the word with `A(r,m)⁻¹ A(s,m)`; `Corrected` ends it with
/// `A(r,m) A(s,m)`, making the entry a conjugate of `A(i,m)`. Only the
/// corrected form agrees with the braid group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseFourVariant {
    Literal,
    Corrected,
}

/// `A(r,s) · A(i,m) · A(r,s)⁻¹` as a word in `F_{m-1}`, where generator `x_k`
/// stands for `A(k,m)`. Requires `s < m` and `i < m`.
pub fn table_entry(acting: PureGen, i: usize, m: usize, variant: CaseFourVariant) -> Result<FreeWord, BraidError> {
    let PureGen { i: r, j: s } = acting;
    if s >= m || i == 0 || i >= m {
        return Err(BraidError::InvalidLevel { level: m - 1, strands: m });
    }
    let rank = m - 1;
    let x = |k: usize, e: i64| (k, e);
    let letters: Vec<(usize, i64)> = if i == r {
        vec![x(s, -1), x(i, 1), x(s, 1)]
    } else if i == s {
        // (A_rm A_im)⁻¹ A_im (A_rm A_im)
        vec![x(i, -1), x(r, -1), x(i, 1), x(r, 1), x(i, 1)]
    } else if r < i && i < s {
        // (A_rm A_sm)⁻¹ (A_sm A_rm) A_im (A_sm A_rm)⁻¹ tail
        let mut v = vec![x(s, -1), x(r, -1), x(s, 1), x(r, 1), x(i, 1), x(r, -1), x(s, -1)];
        match variant {
            CaseFourVariant::Literal => v.extend([x(r, -1), x(s, 1)]),
            CaseFourVariant::Corrected => v.extend([x(r, 1), x(s, 1)]),
        }
        v
    } else {
        vec![x(i, 1)]
    };
    FreeWord::reduce(rank, letters).map_err(BraidError::Word)
}

/// Where an action table came from, when it describes pure braids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidContext {
    pub strands: usize,
    pub level: usize,
    pub acting: Vec<PureGen>,
}

/// Automorphisms of a free group `F_k`, one per acting generator, together
/// with their inverses. `entry(g, x)` is the image of `x` under generator `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionTable {
    acting_labels: Vec<String>,
    target_labels: Vec<String>,
    forward: Vec<FreeEndo>,
    inverse: Vec<FreeEndo>,
    context: Option<BraidContext>,
}

/// An entry that failed an oracle check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableMismatch {
    pub acting: PureGen,
    pub target: PureGen,
    pub inverse: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error("{0} images given for {1} acting generators")]
    Shape(usize, usize),
    #[error("automorphism {0} has wrong ranks")]
    Rank(String),
    #[error("the given inverse of {0} does not invert it")]
    NotInverse(String),
}

impl ActionTable {
    /// Build from explicit automorphisms and inverses; both compositions are checked.
    pub fn new(
        acting_labels: Vec<String>,
        target_labels: Vec<String>,
        forward: Vec<FreeEndo>,
        inverse: Vec<FreeEndo>,
    ) -> Result<Self, TableError> {
        if forward.len() != acting_labels.len() || inverse.len() != acting_labels.len() {
            return Err(TableError::Shape(forward.len(), acting_labels.len()));
        }
        let k = target_labels.len();
        for ((f, g), name) in forward.iter().zip(&inverse).zip(&acting_labels) {
            let ranks_ok = [f, g].iter().all(|e| e.source_rank() == k && e.target_rank() == k);
            if !ranks_ok {
                return Err(TableError::Rank(name.clone()));
            }
            let fg = f.compose(g).map_err(|_| TableError::Rank(name.clone()))?;
            let gf = g.compose(f).map_err(|_| TableError::Rank(name.clone()))?;
            if !fg.is_identity() || !gf.is_identity() {
                return Err(TableError::NotInverse(name.clone()));
            }
        }
        Ok(ActionTable { acting_labels, target_labels, forward, inverse, context: None })
    }

    /// `m` acting generators, each acting trivially on `F_k`.
    pub fn trivial(m: usize, k: usize) -> Self {
        let id = FreeEndo::identity(k);
        ActionTable {
            acting_labels: (1..=m).map(|g| format!("g{g}")).collect(),
            target_labels: (1..=k).map(|x| format!("x{x}")).collect(),
            forward: vec![id.clone(); m],
            inverse: vec![id; m],
            context: None,
        }
    }

    pub fn acting_rank(&self) -> usize {
        self.forward.len()
    }

    pub fn target_rank(&self) -> usize {
        self.target_labels.len()
    }

    pub fn acting_labels(&self) -> &[String] {
        &self.acting_labels
    }

    pub fn target_labels(&self) -> &[String] {
        &self.target_labels
    }

    pub fn context(&self) -> Option<&BraidContext> {
        self.context.as_ref()
    }

    /// Image of target `x` under acting generator `g` (both 1-based).
    pub fn entry(&self, g: usize, x: usize) -> &FreeWord {
        self.forward[g - 1].image(x)
    }

    /// Image of target `x` under the inverse of acting generator `g`.
    pub fn inverse_entry(&self, g: usize, x: usize) -> &FreeWord {
        self.inverse[g - 1].image(x)
    }

    pub fn forward(&self, g: usize) -> &FreeEndo {
        &self.forward[g - 1]
    }

    pub fn inverse(&self, g: usize) -> &FreeEndo {
        &self.inverse[g - 1]
    }

    /// Keep only the acting generators selected by `keep` (1-based index, label).
    pub fn restrict_acting<F>(&self, mut keep: F) -> ActionTable
    where
        F: FnMut(usize, &str) -> bool,
    {
        let chosen: Vec<usize> = (0..self.acting_rank()).filter(|&g| keep(g + 1, &self.acting_labels[g])).collect();
        ActionTable {
            acting_labels: chosen.iter().map(|&g| self.acting_labels[g].clone()).collect(),
            target_labels: self.target_labels.clone(),
            forward: chosen.iter().map(|&g| self.forward[g].clone()).collect(),
            inverse: chosen.iter().map(|&g| self.inverse[g].clone()).collect(),
            context: self.context.as_ref().map(|c| BraidContext {
                strands: c.strands,
                level: c.level,
                acting: chosen.iter().map(|&g| c.acting[g]).collect(),
            }),
        }
    }

    /// Check every entry (and inverse entry) against the braid group:
    /// `a · x · a⁻¹ = entry(a, x)` and `a⁻¹ · x · a = inverse_entry(a, x)`.
    /// Returns the failures; tables without braid context have nothing to check.
    pub fn verify_with_oracle(&self, oracle: &ArtinOracle) -> Result<Vec<TableMismatch>, BraidError> {
        let Some(ctx) = &self.context else {
            return Ok(Vec::new());
        };
        let n = ctx.strands;
        let top = ctx.level + 1;
        let mut bad = Vec::new();
        for (g, a) in ctx.acting.iter().enumerate() {
            let a_word = a.expand(n)?;
            for x in 1..=ctx.level {
                let target = PureGen { i: x, j: top };
                let x_word = target.expand(n)?;
                for inverse in [false, true] {
                    let (conj, entry) = if inverse {
                        (x_word.conjugate(&a_word.invert())?, self.inverse_entry(g + 1, x))
                    } else {
                        (x_word.conjugate(&a_word)?, self.entry(g + 1, x))
                    };
                    let claimed = PureWord::from_level_word(n, ctx.level, entry)?.expand()?;
                    if !oracle.braid_equal(&conj, &claimed)? {
                        bad.push(TableMismatch { acting: *a, target, inverse });
                    }
                }
            }
        }
        Ok(bad)
    }
}

/// The action of the generators `A(r,s)`, `s ≤ t`, on `F_t = ⟨A(1,t+1) … A(t,t+1)⟩`
/// inside `P_n`, from the conjugation table. Inverse automorphisms are read off
/// the Artin representation and checked to invert the forward ones.
pub fn pure_braid_action(n: usize, t: usize) -> Result<ActionTable, BraidError> {
    if t == 0 || t + 1 > n {
        return Err(BraidError::InvalidLevel { level: t, strands: n });
    }
    let m = t + 1;
    let oracle = ArtinOracle::default();
    let acting: Vec<PureGen> = (2..=t).flat_map(|s| (1..s).map(move |r| PureGen { i: r, j: s })).collect();
    let mut forward = Vec::with_capacity(acting.len());
    let mut inverse = Vec::with_capacity(acting.len());
    for &a in &acting {
        let images =
            (1..=t).map(|i| table_entry(a, i, m, CaseFourVariant::Corrected)).collect::<Result<Vec<_>, _>>()?;
        forward.push(FreeEndo::new(t, t, images)?);
        let a_word = a.expand(m)?;
        let inv_images = (1..=t)
            .map(|i| -> Result<FreeWord, BraidError> {
                let x = PureGen { i, j: m }.expand(m)?;
                oracle.decode_top_level(&x.conjugate(&a_word.invert())?)
            })
            .collect::<Result<Vec<_>, _>>()?;
        inverse.push(FreeEndo::new(t, t, inv_images)?);
    }
    let acting_labels = acting.iter().map(|g| g.to_string()).collect();
    let target_labels = (1..=t).map(|i| PureGen { i, j: m }.to_string()).collect();
    let mut table = ActionTable::new(acting_labels, target_labels, forward, inverse)
        .map_err(|e| BraidError::Table(e.to_string()))?;
    table.context = Some(BraidContext { strands: n, level: t, acting });
    Ok(table)
}

/// Expansion helper shared with the relation checks.
pub(crate) fn level_word_braid(n: usize, level: usize, w: &FreeWord) -> Result<BraidWord, BraidError> {
    PureWord::from_level_word(n, level, w)?.expand()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(rank: usize, s: &str) -> FreeWord {
        FreeWord::parse(rank, s).unwrap()
    }

    #[test]
    fn sample_entries() {
        // n = 4, φ(A(2,3))(A(2,4)) = A(3,4)⁻¹ A(2,4) A(3,4)
        let t = pure_braid_action(4, 3).unwrap();
        let g = t.acting_labels().iter().position(|l| l == "A(2,3)").unwrap() + 1;
        assert_eq!(t.entry(g, 2), &w(3, "x3^-1 x2 x3"));
        let g = t.acting_labels().iter().position(|l| l == "A(1,2)").unwrap() + 1;
        assert_eq!(t.entry(g, 3), &w(3, "x3"));
        // n = 3, φ(A(1,2))(A(1,3)) = A(2,3)⁻¹ A(1,3) A(2,3)
        let t3 = pure_braid_action(3, 2).unwrap();
        assert_eq!(t3.entry(1, 1), &w(2, "x2^-1 x1 x2"));
    }

    #[test]
    fn tables_match_the_oracle() {
        let o = ArtinOracle::default();
        for n in 3..=5 {
            for t in 1..n {
                let table = pure_braid_action(n, t).unwrap();
                assert_eq!(table.verify_with_oracle(&o).unwrap(), vec![], "n={n} t={t}");
            }
        }
    }

    #[test]
    fn literal_case_four_fails() {
        let o = ArtinOracle::default();
        let a = PureGen { i: 1, j: 3 };
        let lit = table_entry(a, 2, 4, CaseFourVariant::Literal).unwrap();
        let x = PureGen { i: 2, j: 4 }.expand(4).unwrap();
        let lhs = x.conjugate(&a.expand(4).unwrap()).unwrap();
        assert!(!o.braid_equal(&lhs, &level_word_braid(4, 3, &lit).unwrap()).unwrap());
    }

    #[test]
    fn explicit_tables() {
        let swap = FreeEndo::new(2, 2, vec![w(2, "x2"), w(2, "x1")]).unwrap();
        let t = ActionTable::new(vec!["g".into()], vec!["x1".into(), "x2".into()], vec![swap.clone()], vec![swap]);
        assert!(t.is_ok());
        let f = FreeEndo::new(2, 2, vec![w(2, "x1 x2"), w(2, "x2")]).unwrap();
        let bad = ActionTable::new(vec!["g".into()], vec!["x1".into(), "x2".into()], vec![f.clone()], vec![f]);
        assert!(matches!(bad, Err(TableError::NotInverse(_))));
        let restricted = pure_braid_action(5, 4).unwrap().restrict_acting(|_, l| l.ends_with(",3)"));
        assert_eq!(restricted.acting_rank(), 2);
    }
}
