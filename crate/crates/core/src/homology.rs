//! Homology of presentation 2-complexes, Betti numbers of `BP_n` and the
//! simplices of its model.

use serde::{Deserialize, Serialize};

use crate::braid::relations::x_p4_relators;
use crate::intlinalg::{cokernel, kernel_rank, AbelianGroup, IntMatrix};
use crate::ktheory::KPair;
use crate::words::{FreeWord, WordError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomologyError {
    #[error("a presentation needs at least one generator")]
    NoGenerators,
    #[error("relator {0} is trivial after reduction")]
    TrivialRelator(usize),
    #[error("relator {index}: {source}")]
    Relator { index: usize, source: WordError },
    #[error("need n >= 2, got {0}")]
    SmallN(usize),
    #[error("n = {0} overflows 64-bit counts")]
    LargeN(usize),
    #[error("simplex dimension {r} out of range 0..={max}")]
    Dimension { r: usize, max: usize },
    #[error("image {index} lives in rank {got}, expected {want}")]
    Rank { index: usize, got: usize, want: usize },
    #[error("unknown presentation `{0}` (built-ins: X_P4, torus)")]
    Unknown(String),
}

/// `⟨generators | relators⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<FreeWord>,
}

#[derive(Serialize, Deserialize)]
struct PresentationJson {
    generators: Vec<String>,
    relators: Vec<String>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<FreeWord>) -> Result<Self, HomologyError> {
        if generators.is_empty() {
            return Err(HomologyError::NoGenerators);
        }
        for (k, r) in relators.iter().enumerate() {
            if r.rank() != generators.len() {
                return Err(HomologyError::Rank { index: k + 1, got: r.rank(), want: generators.len() });
            }
            if r.is_identity() {
                return Err(HomologyError::TrivialRelator(k + 1));
            }
        }
        Ok(Presentation { generators, relators })
    }

    /// Relators in word syntax over the given generator names.
    pub fn parse(generators: Vec<String>, relators: &[&str]) -> Result<Self, HomologyError> {
        let words = relators
            .iter()
            .enumerate()
            .map(|(k, r)| {
                FreeWord::parse_named(&generators, r).map_err(|source| HomologyError::Relator { index: k + 1, source })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(generators, words)
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        let raw: PresentationJson = serde_json::from_str(text).map_err(|e| e.to_string())?;
        let rels: Vec<&str> = raw.relators.iter().map(String::as_str).collect();
        Self::parse(raw.generators, &rels).map_err(|e| e.to_string())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PresentationJson {
            generators: self.generators.clone(),
            relators: self.relators.iter().map(|r| r.display_with(&self.generators).to_string()).collect(),
        })
        .expect("plain data")
    }

    /// The 2-complex of `F_3 ⋊ F_2` with relators R1–R4, R5′, R6.
    pub fn x_p4() -> Self {
        let gens = ["a1", "a2", "b1", "b2", "b3"].map(String::from).to_vec();
        let rels = x_p4_relators();
        let texts: Vec<&str> = rels.iter().map(|(_, r)| r.as_str()).collect();
        Self::parse(gens, &texts).expect("built-in presentation")
    }

    pub fn torus() -> Self {
        Self::parse(vec!["a".into(), "b".into()], &["a b a^-1 b^-1"]).expect("built-in presentation")
    }

    pub fn builtin(name: &str) -> Result<Self, HomologyError> {
        match name {
            "X_P4" => Ok(Self::x_p4()),
            "torus" => Ok(Self::torus()),
            other => Err(HomologyError::Unknown(other.to_string())),
        }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    /// `∂_2`: one column of exponent sums per relator.
    pub fn boundary_matrix(&self) -> IntMatrix {
        let g = self.generators.len();
        let mut m = IntMatrix::zeros(g, self.relators.len());
        for (j, r) in self.relators.iter().enumerate() {
            for (i, e) in r.exponent_sums().into_iter().enumerate() {
                m.set(i, j, e.into());
            }
        }
        m
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PresentationHomology {
    pub h0: AbelianGroup,
    pub h1: AbelianGroup,
    pub h2: AbelianGroup,
    pub warnings: Vec<String>,
}

/// `H_*` of the presentation complex (one 0-cell, so `∂_1 = 0`).
pub fn presentation_homology(p: &Presentation) -> PresentationHomology {
    let d2 = p.boundary_matrix();
    let mut warnings = Vec::new();
    for (k, r) in p.relators.iter().enumerate() {
        if r.exponent_sums().iter().any(|&e| e != 0) {
            warnings.push(format!(
                "relator {} ({}) has nonzero exponent sums; H_2 is read from the abelianized boundary",
                k + 1,
                r.display_with(&p.generators)
            ));
        }
    }
    for w in &warnings {
        log::warn!("{w}");
    }
    PresentationHomology {
        h0: AbelianGroup::free(1),
        h1: cokernel(&d2),
        h2: AbelianGroup::free(kernel_rank(&d2)),
        warnings,
    }
}

/// K-homology of a 2-dimensional complex: `K_0 = H_0 ⊕ H_2`, `K_1 = H_1`.
pub fn khomology_of_2complex(h0: &AbelianGroup, h1: &AbelianGroup, h2: &AbelianGroup) -> KPair {
    let mut k = KPair::new(h0.direct_sum(h2), h1.clone()).with_step("2-complex", "K_0 = H_0 + H_2, K_1 = H_1");
    if !k.torsion_free {
        k.notes.push("torsion carried through from homology; only torsion-free inputs are covered by the rule".into());
    }
    k
}

/// Betti numbers of `BP_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub n: usize,
    pub betti: Vec<u64>,
}

impl BettiTable {
    pub fn even_sum(&self) -> u64 {
        self.betti.iter().step_by(2).sum()
    }

    pub fn odd_sum(&self) -> u64 {
        self.betti.iter().skip(1).step_by(2).sum()
    }
}

/// Coefficients of `(1 + t)(1 + 2t) ⋯ (1 + (n-1)t)`.
pub fn betti_bpn(n: usize) -> Result<BettiTable, HomologyError> {
    if n < 2 {
        return Err(HomologyError::SmallN(n));
    }
    if n > 20 {
        return Err(HomologyError::LargeN(n));
    }
    let mut c: Vec<u64> = vec![1];
    for l in 1..n as u64 {
        let mut next = vec![0u64; c.len() + 1];
        for (k, &a) in c.iter().enumerate() {
            next[k] += a;
            next[k + 1] += a * l;
        }
        c = next;
    }
    Ok(BettiTable { n, betti: c })
}

/// `K_0(BP_n)`, `K_1(BP_n)` as even and odd Betti sums (torsion-free).
pub fn khomology_bpn(n: usize) -> Result<KPair, HomologyError> {
    let b = betti_bpn(n)?;
    Ok(KPair::free(b.even_sum() as usize, b.odd_sum() as usize)
        .with_step("Betti sums", format!("betti {:?}: even {} / odd {}", b.betti, b.even_sum(), b.odd_sum())))
}

/// An `r`-simplex label `((i_1, j_1), …, (i_r, j_r))` with
/// `i_1 < ⋯ < i_r ≤ n` and `j_k < i_k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SimplexLabel {
    pub pairs: Vec<(usize, usize)>,
}

impl std::fmt::Display for SimplexLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(i, j)| format!("({i},{j})")).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// All `r`-simplex labels, in lexicographic order.
pub fn enumerate_simplices(n: usize, r: usize) -> Result<Vec<SimplexLabel>, HomologyError> {
    if n < 2 {
        return Err(HomologyError::SmallN(n));
    }
    if r > n - 1 {
        return Err(HomologyError::Dimension { r, max: n - 1 });
    }
    fn go(n: usize, r: usize, from: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<SimplexLabel>) {
        if cur.len() == r {
            out.push(SimplexLabel { pairs: cur.clone() });
            return;
        }
        for i in from..=n {
            for j in 1..i {
                cur.push((i, j));
                go(n, r, i + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, r, 2, &mut Vec::new(), &mut out);
    Ok(out)
}

/// `K_*(BB_n)` modulo torsion.
pub fn full_braid_khomology_mod_torsion(n: usize) -> Result<KPair, HomologyError> {
    crate::ktheory::full_braid_khomology_mod_torsion(n).map_err(|_| HomologyError::SmallN(n))
}

/// The map on `H_1` induced by a homomorphism given by generator images:
/// column `k` holds the exponent sums of the image of generator `k`.
pub fn induced_h1(images: &[FreeWord], target_rank: usize) -> Result<IntMatrix, HomologyError> {
    let mut m = IntMatrix::zeros(target_rank, images.len());
    for (k, w) in images.iter().enumerate() {
        if w.rank() != target_rank {
            return Err(HomologyError::Rank { index: k + 1, got: w.rank(), want: target_rank });
        }
        for (i, e) in w.exponent_sums().into_iter().enumerate() {
            m.set(i, k, e.into());
        }
    }
    Ok(m)
}
