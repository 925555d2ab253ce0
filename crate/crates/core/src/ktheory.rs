//! Rank bookkeeping for the K-theory of pure braid group C*-algebras.
//!
//! Reduced and maximal group C*-algebras of `P_n` have the same K-theory
//! (`P_n` is K-amenable); this is taken as an assumption and recorded in the
//! provenance of every pipeline result.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::braid::{pure_braid_action, ActionTable, ArtinOracle, BraidError, BraidWord};
use crate::intlinalg::{cokernel, kernel_rank, AbelianGroup, IntMatrix};
use crate::words::FreeWord;

pub const K_AMENABILITY: &str = "reduced = maximal per K-amenability assumption";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KError {
    #[error("{0}: inputs with torsion are outside the rule's hypotheses")]
    Torsion(&'static str),
    #[error("certificate acts with {got} generators, stage needs {want}")]
    CertificateRank { got: usize, want: usize },
    #[error("certificate witness for ({0}, {1}) does not re-verify")]
    BadWitness(String, String),
    #[error("action is not inner on generators: {}", .0.iter().map(|(g, x)| format!("({g}, {x})")).collect::<Vec<_>>().join(", "))]
    NotInner(Vec<(String, String)>),
    #[error("certificates disagree on the acting generators")]
    MixedCertificates,
    #[error("n must be at least {min}, got {n}")]
    Range { n: usize, min: usize },
    #[error("rank check failed: got ({0}, {1}), expected ({2}, {3})")]
    RankCheck(u64, u64, u64, u64),
    #[error("p and q must be positive")]
    AmalgamIndex,
    #[error(transparent)]
    Braid(#[from] BraidError),
}

/// One applied rule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    pub rule: String,
    pub detail: String,
}

/// `(K_0, K_1)` with the rules that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KPair {
    pub k0: AbelianGroup,
    pub k1: AbelianGroup,
    pub torsion_free: bool,
    /// Set when the groups are only known up to torsion.
    pub modulo_torsion: bool,
    pub provenance: Vec<Step>,
    pub notes: Vec<String>,
}

impl KPair {
    pub fn new(k0: AbelianGroup, k1: AbelianGroup) -> Self {
        let torsion_free = k0.is_torsion_free() && k1.is_torsion_free();
        KPair { k0, k1, torsion_free, modulo_torsion: false, provenance: Vec::new(), notes: Vec::new() }
    }

    pub fn free(r0: usize, r1: usize) -> Self {
        Self::new(AbelianGroup::free(r0), AbelianGroup::free(r1))
    }

    pub fn ranks(&self) -> (u64, u64) {
        (self.k0.free_rank as u64, self.k1.free_rank as u64)
    }

    pub fn with_step(mut self, rule: &str, detail: impl Into<String>) -> Self {
        self.provenance.push(Step { rule: rule.to_string(), detail: detail.into() });
        self
    }

    fn inherit(mut self, from: &[&KPair]) -> Self {
        let mut prov: Vec<Step> = from.iter().flat_map(|p| p.provenance.iter().cloned()).collect();
        prov.append(&mut self.provenance);
        self.provenance = prov;
        self
    }
}

impl fmt::Display for KPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K0 = {}, K1 = {}", self.k0, self.k1)?;
        if self.modulo_torsion {
            write!(f, " (modulo torsion)")?;
        }
        Ok(())
    }
}

/// `K_*(C*_r(F_m)) = (Z, Z^m)`.
pub fn k_of_free_group(m: usize) -> KPair {
    KPair::free(1, m).with_step("free group", format!("K(C*_r(F_{m})) = (Z[1], Z^{m})"))
}

/// A witness `c` with `c · x · c⁻¹ = φ(g⁻¹)(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub acting: usize,
    /// Generator index inside the free group of `image`.
    pub target: usize,
    /// Position in the certificate's target labels.
    pub label: usize,
    pub image: FreeWord,
    pub conjugator: FreeWord,
}

/// Evidence that every acting generator moves every target generator to a
/// conjugate of itself, so `id_* - φ(g⁻¹)_*` vanishes on the classes `[u_x]`.
/// Convention: witnesses conjugate `x` onto `φ(g⁻¹)(x)`; forward entries
/// `φ(g)(x)` carry witnesses too.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaCertificate {
    pub acting_labels: Vec<String>,
    pub target_labels: Vec<String>,
    pub inverse_witnesses: Vec<Witness>,
    pub forward_witnesses: Vec<Witness>,
}

impl ThetaCertificate {
    pub fn acting_rank(&self) -> usize {
        self.acting_labels.len()
    }

    /// Re-check every witness by free-group multiplication.
    pub fn verify(&self) -> Result<(), KError> {
        for w in self.inverse_witnesses.iter().chain(&self.forward_witnesses) {
            let x = FreeWord::generator(w.image.rank(), w.target).expect("target in range");
            if x.conjugate(&w.conjugator).ok().as_ref() != Some(&w.image) {
                return Err(KError::BadWitness(
                    self.acting_labels[w.acting - 1].clone(),
                    self.target_labels[w.label - 1].clone(),
                ));
            }
        }
        Ok(())
    }

    /// The certificate for the same acting generators on a free product of
    /// the separate target groups.
    pub fn combine(parts: &[ThetaCertificate]) -> Result<ThetaCertificate, KError> {
        let Some(first) = parts.first() else {
            return Ok(ThetaCertificate {
                acting_labels: Vec::new(),
                target_labels: Vec::new(),
                inverse_witnesses: Vec::new(),
                forward_witnesses: Vec::new(),
            });
        };
        let mut out = ThetaCertificate { acting_labels: first.acting_labels.clone(), ..first.clone() };
        out.target_labels.clear();
        out.inverse_witnesses.clear();
        out.forward_witnesses.clear();
        for p in parts {
            if p.acting_labels != first.acting_labels {
                return Err(KError::MixedCertificates);
            }
            let offset = out.target_labels.len();
            out.target_labels.extend(p.target_labels.iter().cloned());
            let shift = |w: &Witness| Witness { label: w.label + offset, ..w.clone() };
            out.inverse_witnesses.extend(p.inverse_witnesses.iter().map(shift));
            out.forward_witnesses.extend(p.forward_witnesses.iter().map(shift));
        }
        Ok(out)
    }

    pub fn summary(&self) -> String {
        format!(
            "{} acting x {} targets, {} witnesses",
            self.acting_rank(),
            self.target_labels.len(),
            self.inverse_witnesses.len() + self.forward_witnesses.len()
        )
    }
}

/// Find conjugators for every `φ(g^{±1})(x)`; fail with the offending pairs.
pub fn certify_theta_trivial(table: &ActionTable) -> Result<ThetaCertificate, KError> {
    let mut inverse_witnesses = Vec::new();
    let mut forward_witnesses = Vec::new();
    let mut bad = Vec::new();
    for g in 1..=table.acting_rank() {
        for x in 1..=table.target_rank() {
            let gen = FreeWord::generator(table.target_rank(), x).expect("target in range");
            for (image, sink) in
                [(table.inverse_entry(g, x), &mut inverse_witnesses), (table.entry(g, x), &mut forward_witnesses)]
            {
                match gen.conjugacy_witness(image) {
                    Some(c) => {
                        sink.push(Witness { acting: g, target: x, label: x, image: image.clone(), conjugator: c })
                    }
                    None => bad.push((table.acting_labels()[g - 1].clone(), table.target_labels()[x - 1].clone())),
                }
            }
        }
    }
    if !bad.is_empty() {
        bad.dedup();
        return Err(KError::NotInner(bad));
    }
    let cert = ThetaCertificate {
        acting_labels: table.acting_labels().to_vec(),
        target_labels: table.target_labels().to_vec(),
        inverse_witnesses,
        forward_witnesses,
    };
    cert.verify()?;
    Ok(cert)
}

/// `K_*(A ⋊_r F_k) = (Z^{a0 + k a1}, Z^{a1 + k a0})` when the action is
/// certified inner on classes.
pub fn pv_crossed_by_free(a: &KPair, k: usize, cert: &ThetaCertificate) -> Result<KPair, KError> {
    if !a.torsion_free {
        return Err(KError::Torsion("Pimsner-Voiculescu rank rule"));
    }
    if cert.acting_rank() != k {
        return Err(KError::CertificateRank { got: cert.acting_rank(), want: k });
    }
    cert.verify()?;
    let (a0, a1) = a.ranks();
    let k64 = k as u64;
    let out = KPair::free((a0 + k64 * a1) as usize, (a1 + k64 * a0) as usize).with_step(
        "Pimsner-Voiculescu",
        format!(
            "crossed by F_{k}: ({a0}, {a1}) -> ({}, {}); theta = 0 by {}",
            a0 + k64 * a1,
            a1 + k64 * a0,
            cert.summary()
        ),
    );
    Ok(out.inherit(&[a]))
}

/// Künneth for torsion-free K-groups.
pub fn kunneth(a: &KPair, b: &KPair) -> Result<KPair, KError> {
    if !a.torsion_free || !b.torsion_free {
        return Err(KError::Torsion("Künneth torsion terms out of scope"));
    }
    let (a0, a1) = a.ranks();
    let (b0, b1) = b.ranks();
    let (k0, k1) = (a0 * b0 + a1 * b1, a0 * b1 + a1 * b0);
    Ok(KPair::free(k0 as usize, k1 as usize)
        .with_step("Künneth", format!("({a0}, {a1}) x ({b0}, {b1}) -> ({k0}, {k1})"))
        .inherit(&[a, b]))
}

/// Product with a circle: both degrees become `K_0 ⊕ K_1`.
pub fn cross_circle(a: &KPair) -> KPair {
    let sum = a.k0.direct_sum(&a.k1);
    let mut out = KPair::new(sum.clone(), sum)
        .with_step("circle factor", format!("K_i(X x S^1) = K_0(X) + K_1(X) = {}", a.k0.direct_sum(&a.k1)))
        .inherit(&[a]);
    out.modulo_torsion = a.modulo_torsion;
    out
}

/// One Pimsner-Voiculescu stage of the `P_n` pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PVStageTrace {
    pub stage: usize,
    pub input: (u64, u64),
    pub free_rank: usize,
    pub certificate: String,
    pub output: (u64, u64),
}

/// Named K-homology/K-theory classes matched by the assembly map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorLedger {
    pub group: String,
    pub k0_generators: Vec<String>,
    pub k1_generators: Vec<String>,
}

impl GeneratorLedger {
    pub fn matches(&self, k: &KPair) -> bool {
        k.ranks() == (self.k0_generators.len() as u64, self.k1_generators.len() as u64)
    }
}

/// The ledger for `Γ = F_3 ⋊ F_2` and for `P_4 = Γ × ⟨c⟩`.
pub fn p4_ledger() -> (GeneratorLedger, GeneratorLedger) {
    let mut g0 = vec!["[1]".to_string()];
    g0.extend((1..=6).map(|i| format!("f_*[D_Σ{i}]")));
    let g1: Vec<String> = ["α1", "α2", "β1", "β2", "β3"].iter().map(|s| format!("[{s}]")).collect();
    let gamma =
        GeneratorLedger { group: "Γ = F3 ⋊ F2".into(), k0_generators: g0.clone(), k1_generators: g1.clone() };
    let mut p0 = g0.clone();
    p0.extend(g1.iter().map(|g| format!("{g} x [c]")));
    let mut p1: Vec<String> = g0.iter().map(|g| format!("{g} x [c]")).collect();
    p1.extend(g1.iter().cloned());
    let p4 = GeneratorLedger { group: "P4 = Γ x <c>".into(), k0_generators: p0, k1_generators: p1 };
    (gamma, p4)
}

/// `n!/2` (for `n ≥ 2`).
pub fn half_factorial(n: usize) -> u64 {
    (1..=n as u64).product::<u64>() / 2
}

/// `(x_i, y_i)` for `i = 1 … n-2`: `x_1 = 1`, `y_1 = n-1`,
/// `x_i = x_{i-1} + y_{i-1}(n-i)`, `y_i = y_{i-1} + x_{i-1}(n-i)`.
pub fn xy_recurrence(n: usize) -> Vec<(u64, u64)> {
    if n < 3 {
        return Vec::new();
    }
    let n64 = n as u64;
    let mut out = vec![(1, n64 - 1)];
    for i in 2..=(n64 - 2) {
        let (x, y) = *out.last().unwrap();
        out.push((x + y * (n64 - i), y + x * (n64 - i)));
    }
    out
}

/// `K_*(C*_r(F_n) ⋊_r F_{n-1})` for the action of `⟨A(1,n) … A(n-1,n)⟩` on
/// `⟨A(1,n+1) … A(n,n+1)⟩` inside `P_{n+1}`.
pub fn k_of_free_crossed_free(n: usize) -> Result<KPair, KError> {
    if n < 2 {
        return Err(KError::Range { n, min: 2 });
    }
    let table = pure_braid_action(n + 1, n)?.restrict_acting(|_, l| l.ends_with(&format!(",{n})")));
    let cert = certify_theta_trivial(&table)?;
    pv_crossed_by_free(&k_of_free_group(n), n - 1, &cert)
}

/// Everything computed for `K_*(C*_r(P_n))`.
#[derive(Debug, Clone, Serialize)]
pub struct PnReport {
    pub n: usize,
    pub start: KPair,
    pub stages: Vec<PVStageTrace>,
    pub result: KPair,
    pub expected: u64,
    pub ledger: Option<GeneratorLedger>,
}

/// `P_n ≅ (F_{n-1} ⋊ ⋯ ⋊ F_2) × Z`: start from `K(C*_r(F_{n-1}))`, cross by
/// `F_{n-2}, …, F_2` with certificates read off the action tables, then take
/// the product with the central circle.
pub fn ktheory_pn(n: usize) -> Result<PnReport, KError> {
    if n < 2 {
        return Err(KError::Range { n, min: 2 });
    }
    let start =
        if n == 2 { KPair::free(1, 0).with_step("point", "P_2 / centre is trivial") } else { k_of_free_group(n - 1) };
    let mut current = start.clone();
    let mut stages = Vec::new();
    let tables: BTreeMap<usize, ActionTable> =
        (3..n).map(|t| pure_braid_action(n, t).map(|tab| (t, tab))).collect::<Result<_, _>>()?;
    for (stage, k) in (2..=n.saturating_sub(2)).rev().enumerate() {
        // F_k = <A(1,k+1) … A(k,k+1)> acts on every higher level
        let suffix = format!(",{})", k + 1);
        let parts = ((k + 1)..n)
            .map(|t| certify_theta_trivial(&tables[&t].restrict_acting(|_, l| l.ends_with(&suffix))))
            .collect::<Result<Vec<_>, _>>()?;
        let cert = ThetaCertificate::combine(&parts)?;
        let next = pv_crossed_by_free(&current, k, &cert)?;
        stages.push(PVStageTrace {
            stage: stage + 1,
            input: current.ranks(),
            free_rank: k,
            certificate: cert.summary(),
            output: next.ranks(),
        });
        current = next;
    }
    let mut result = cross_circle(&current).with_step("assumption", K_AMENABILITY);
    result.notes.push(K_AMENABILITY.to_string());
    let expected = half_factorial(n);
    if result.ranks() != (expected, expected) {
        let (a, b) = result.ranks();
        return Err(KError::RankCheck(a, b, expected, expected));
    }
    let ledger = (n == 4).then(|| p4_ledger().1);
    Ok(PnReport { n, start, stages, result, expected, ledger })
}

/// `K_*` of `⟨x, y | x^p = y^q⟩ = Z *_Z Z` from the six-term sequence.
#[derive(Debug, Clone, Serialize)]
pub struct AmalgamReport {
    pub p: u64,
    pub q: u64,
    pub k: KPair,
    pub a: IntMatrix,
    pub b: IntMatrix,
    pub a_injective: bool,
    pub b_injective: bool,
    pub ledger: GeneratorLedger,
    /// `(u, v)` with `(q/g) u - (p/g) v = 1`; `u[x] - v[y]` generates the free part of `K_1`.
    pub k1_free_coefficients: (i64, i64),
}

pub fn amalgam_over_z(p: u64, q: u64) -> Result<AmalgamReport, KError> {
    if p == 0 || q == 0 {
        return Err(KError::AmalgamIndex);
    }
    let a = IntMatrix::from_i64(2, 1, &[1, 1]).expect("shape");
    let b = IntMatrix::from_i64(2, 1, &[p as i64, q as i64]).expect("shape");
    let k0 = cokernel(&a);
    let k1 = cokernel(&b);
    let (a_inj, b_inj) = (kernel_rank(&a) == 0, kernel_rank(&b) == 0);
    let g = p.gcd(&q);
    let (pp, qq) = ((p / g) as i64, (q / g) as i64);
    // qq u - pp v = 1
    let e = qq.extended_gcd(&pp);
    let (u, v) = (e.x, -e.y);
    debug_assert_eq!(qq * u - pp * v, 1);
    let term = |c: i64, s: &str| match c {
        0 => None,
        1 => Some(format!("[{s}]")),
        -1 => Some(format!("-[{s}]")),
        c => Some(format!("{c}[{s}]")),
    };
    let free_gen =
        [term(u, "x"), term(-v, "y")].into_iter().flatten().collect::<Vec<_>>().join(" + ").replace("+ -", "- ");
    let mut k1_gens = vec![if (p, q) == (2, 3) { format!("[σ1] = {free_gen}") } else { free_gen }];
    if g > 1 {
        k1_gens.push(format!("{pp}[x] - {qq}[y] (order {g})"));
    }
    let mut k = KPair::new(k0, k1).with_step(
        "six-term sequence",
        format!("K0 = coker(a) with a(x) = (x, x); K1 = coker(b) with b(x) = ({p}x, {q}x)"),
    );
    if !(a_inj && b_inj) {
        k.notes.push("a or b fails to be injective; the sequence does not split".into());
    }
    let ledger = GeneratorLedger {
        group: format!("Z *_Z Z ({p}, {q})"),
        k0_generators: vec!["[1]".into()],
        k1_generators: k1_gens,
    };
    Ok(AmalgamReport { p, q, k, a, b, a_injective: a_inj, b_injective: b_inj, ledger, k1_free_coefficients: (u, v) })
}

/// `B_3 = ⟨x, y | x² = y³⟩` with `x = σ1σ2σ1`, `y = σ1σ2`; checks
/// `x² = y³`, `σ1 = y⁻¹x` and that `σ1`, `σ2` are conjugate (so `[σ1] = [σ2]`).
pub fn b3_identities(oracle: &ArtinOracle) -> Result<Vec<(String, bool)>, KError> {
    let b = |s: &str| BraidWord::parse(3, s).expect("built-in word");
    let x = b("s1 s2 s1");
    let y = b("s1 s2");
    let s1 = b("s1");
    let s2 = b("s2");
    Ok(vec![
        ("x^2 = y^3".into(), oracle.braid_equal(&x.pow(2), &y.pow(3))?),
        ("s1 = y^-1 x".into(), oracle.braid_equal(&s1, &y.invert().multiply(&x)?)?),
        ("s2 = y s1 y^-1".into(), oracle.braid_equal(&s2, &s1.conjugate(&y)?)?),
    ])
}

/// K-homology of `BB_n` up to torsion.
pub fn full_braid_khomology_mod_torsion(n: usize) -> Result<KPair, KError> {
    if n < 2 {
        return Err(KError::Range { n, min: 2 });
    }
    let mut k = KPair::free(1, 1)
        .with_step("rational", "H_0 = H_1 = Z and H^i(B_n) finite for i > 1, so K_0 = K_1 = Z modulo torsion");
    k.modulo_torsion = n > 2;
    if n == 4 {
        k.notes.push("K_0(C*_r(B_4)) = Z + Z/2 by an external computation; the torsion is not computed here".into());
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::FreeEndo;

    fn cert_for(n: usize, t: usize, s: usize) -> ThetaCertificate {
        let suffix = format!(",{s})");
        certify_theta_trivial(&pure_braid_action(n, t).unwrap().restrict_acting(|_, l| l.ends_with(&suffix))).unwrap()
    }

    #[test]
    fn pv_examples() {
        let c1 = certify_theta_trivial(&ActionTable::trivial(1, 3)).unwrap();
        let c2 = cert_for(4, 3, 3);
        assert_eq!(pv_crossed_by_free(&KPair::free(1, 3), 1, &c1).unwrap().ranks(), (4, 4));
        assert_eq!(pv_crossed_by_free(&KPair::free(1, 3), 2, &c2).unwrap().ranks(), (7, 5));
        let c3 = cert_for(5, 4, 4);
        assert_eq!(pv_crossed_by_free(&KPair::free(1, 4), 3, &c3).unwrap().ranks(), (13, 7));
        let c22 = ThetaCertificate::combine(&[cert_for(5, 3, 3), cert_for(5, 4, 3)]).unwrap();
        assert_eq!(pv_crossed_by_free(&KPair::free(13, 7), 2, &c22).unwrap().ranks(), (27, 33));
        assert!(pv_crossed_by_free(&KPair::free(1, 3), 1, &c2).is_err());
        let tors = KPair::new(AbelianGroup::cyclic(2), AbelianGroup::free(1));
        assert!(matches!(pv_crossed_by_free(&tors, 1, &c1), Err(KError::Torsion(_))));
    }

    #[test]
    fn swap_is_not_inner() {
        let x = |s: &str| FreeWord::parse(2, s).unwrap();
        let swap = FreeEndo::new(2, 2, vec![x("x2"), x("x1")]).unwrap();
        let t =
            ActionTable::new(vec!["g".into()], vec!["x1".into(), "x2".into()], vec![swap.clone()], vec![swap]).unwrap();
        assert!(matches!(certify_theta_trivial(&t), Err(KError::NotInner(_))));
    }

    #[test]
    fn kunneth_and_circle() {
        assert_eq!(kunneth(&KPair::free(7, 5), &KPair::free(1, 1)).unwrap().ranks(), (12, 12));
        assert_eq!(kunneth(&KPair::free(27, 33), &KPair::free(1, 1)).unwrap().ranks(), (60, 60));
        assert_eq!(kunneth(&KPair::free(4, 9), &KPair::free(1, 0)).unwrap().ranks(), (4, 9));
        assert_eq!(cross_circle(&KPair::free(7, 5)).ranks(), (12, 12));
        assert_eq!(cross_circle(&KPair::free(1, 0)).ranks(), (1, 1));
        let t = KPair::new(AbelianGroup::cyclic(2), AbelianGroup::trivial());
        assert!(kunneth(&t, &KPair::free(1, 1)).is_err());
        assert_eq!(cross_circle(&t).k1, AbelianGroup::cyclic(2));
    }

    #[test]
    fn pipeline() {
        assert_eq!(ktheory_pn(2).unwrap().result.ranks(), (1, 1));
        assert_eq!(ktheory_pn(3).unwrap().result.ranks(), (3, 3));
        let r4 = ktheory_pn(4).unwrap();
        assert_eq!(r4.result.ranks(), (12, 12));
        assert!(r4.ledger.as_ref().unwrap().matches(&r4.result));
        let r5 = ktheory_pn(5).unwrap();
        let outs: Vec<_> = r5.stages.iter().map(|s| s.output).collect();
        assert_eq!(outs, vec![(13, 7), (27, 33)]);
        assert_eq!(xy_recurrence(5), vec![(1, 4), (13, 7), (27, 33)]);
        assert_eq!(xy_recurrence(4), vec![(1, 3), (7, 5)]);
        assert_eq!(xy_recurrence(3), vec![(1, 2)]);
    }

    #[test]
    fn free_crossed_free() {
        assert_eq!(k_of_free_crossed_free(2).unwrap().ranks(), (3, 3));
        assert_eq!(k_of_free_crossed_free(3).unwrap().ranks(), (7, 5));
        assert_eq!(k_of_free_crossed_free(4).unwrap().ranks(), (13, 7));
    }

    #[test]
    fn amalgams() {
        let r = amalgam_over_z(2, 3).unwrap();
        assert_eq!((r.k.k0.to_string(), r.k.k1.to_string()), ("Z".to_string(), "Z".to_string()));
        assert_eq!(r.ledger.k1_generators, vec!["[σ1] = [x] - [y]".to_string()]);
        assert_eq!(amalgam_over_z(2, 4).unwrap().k.k1.to_string(), "Z + Z/2");
        assert_eq!(amalgam_over_z(1, 1).unwrap().k.ranks(), (1, 1));
        assert!(b3_identities(&ArtinOracle::default()).unwrap().iter().all(|c| c.1));
    }
}
