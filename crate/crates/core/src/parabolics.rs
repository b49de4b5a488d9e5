//! Parabolic types: Levi and unipotent root sets, non-degeneracy, the cone
//! `C(P)`, `J`-relevance and the enumeration of boundary strata.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::fans::{is_degenerate_j, CoreAssignment, Fan, FanError};
use crate::linalg;
use crate::num::{pair, sign, Q};
use crate::rootdata::{components, orthogonal_complement, DiagramSubset, RootDatum};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParabolicError {
    #[error("J = {0:?} contains a connected component of the Dynkin diagram")]
    DegenerateJ(DiagramSubset),
    #[error("non-degeneracy criteria disagree for T = {t:?}: {report:?}")]
    InternalDisagreement { t: DiagramSubset, report: NonDegeneracyReport },
    #[error(transparent)]
    Fan(#[from] FanError),
}

/// Root-level data of the standard parabolic of type `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicType {
    pub t: DiagramSubset,
    /// Φ_T = Φ ∩ Span(T).
    pub levi_roots: Vec<usize>,
    /// Φ_U: positive roots outside Span(T).
    pub unipotent_roots: Vec<usize>,
    /// Ψ = -Φ_U.
    pub psi: Vec<usize>,
}

impl ParabolicType {
    pub fn new(datum: &RootDatum, t: DiagramSubset) -> Self {
        let unipotent_roots = datum.unipotent_roots(t);
        let psi = unipotent_roots.iter().map(|&a| datum.negative(a)).collect();
        ParabolicType { t, levi_roots: datum.levi_roots(t), unipotent_roots, psi }
    }
}

/// The three equivalent descriptions of a non-degenerate type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NonDegeneracyReport {
    /// No irreducible component of Φ lies inside Φ_T.
    pub no_component_in_levi: bool,
    /// T contains no connected component of Δ.
    pub no_diagram_component: bool,
    /// Ψ spans the dual space.
    pub psi_spans: bool,
}

pub fn non_degeneracy_report(datum: &RootDatum, t: DiagramSubset) -> NonDegeneracyReport {
    let p = ParabolicType::new(datum, t);
    let levi: BTreeSet<usize> = p.levi_roots.iter().copied().collect();
    let no_component_in_levi = datum
        .irreducible_components()
        .iter()
        .all(|c| !c.iter().all(|a| levi.contains(a)));
    let no_diagram_component = datum.diagram_components().iter().all(|c| !c.is_subset(t));
    let psi_rows: Vec<Vec<i64>> = p.psi.iter().map(|&a| datum.root(a).to_vec()).collect();
    let psi_spans = linalg::rank(&linalg::from_int_rows(&psi_rows)) == datum.rank();
    NonDegeneracyReport { no_component_in_levi, no_diagram_component, psi_spans }
}

pub fn is_non_degenerate(datum: &RootDatum, t: DiagramSubset) -> Result<bool, ParabolicError> {
    let r = non_degeneracy_report(datum, t);
    if r.no_component_in_levi == r.no_diagram_component && r.no_diagram_component == r.psi_spans {
        Ok(r.psi_spans)
    } else {
        Err(ParabolicError::InternalDisagreement { t, report: r })
    }
}

/// A closed cone `{x : <a, x - apex> >= 0 for a in forms}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedCone {
    pub apex: Vec<Q>,
    pub forms: Vec<Vec<i64>>,
}

impl ClosedCone {
    pub fn contains(&self, x: &[Q]) -> bool {
        let d: Vec<Q> = x.iter().zip(&self.apex).map(|(a, b)| a - b).collect();
        self.forms.iter().all(|f| sign(&pair(f, &d)) >= 0)
    }

    pub fn interior_contains(&self, x: &[Q]) -> bool {
        let d: Vec<Q> = x.iter().zip(&self.apex).map(|(a, b)| a - b).collect();
        self.forms.iter().all(|f| sign(&pair(f, &d)) > 0)
    }
}

/// `C(P) = {x : <a, x - o> >= 0 for all a in Φ_U}`.
pub fn cone_cp(datum: &RootDatum, t: DiagramSubset, origin: &[Q]) -> ClosedCone {
    ClosedCone {
        apex: origin.to_vec(),
        forms: datum.unipotent_roots(t).iter().map(|&a| datum.root(a).to_vec()).collect(),
    }
}

/// Union of the connected components of `T` that meet `Δ \ J`.
pub fn t_tilde(datum: &RootDatum, j: DiagramSubset, t: DiagramSubset) -> DiagramSubset {
    components(datum, t)
        .into_iter()
        .filter(|c| !c.is_subset(j))
        .fold(DiagramSubset::EMPTY, DiagramSubset::union)
}

fn check_j(datum: &RootDatum, j: DiagramSubset) -> Result<(), ParabolicError> {
    if !j.is_subset(datum.full_subset()) || is_degenerate_j(datum, j) {
        Err(ParabolicError::DegenerateJ(j))
    } else {
        Ok(())
    }
}

/// `T = I ⊔ (J ∩ I^⊥)` with `I = T̃`.
pub fn is_j_relevant(datum: &RootDatum, j: DiagramSubset, t: DiagramSubset) -> Result<bool, ParabolicError> {
    check_j(datum, j)?;
    let i = t_tilde(datum, j, t);
    Ok(t == i.union(j.intersection(orthogonal_complement(datum, i))))
}

/// Every `α ∈ J` orthogonal to `T̃` lies in `T`.
pub fn is_j_relevant_via_perp(
    datum: &RootDatum,
    j: DiagramSubset,
    t: DiagramSubset,
) -> Result<bool, ParabolicError> {
    check_j(datum, j)?;
    let i = t_tilde(datum, j, t);
    Ok(j.intersection(orthogonal_complement(datum, i)).is_subset(t))
}

/// Searches all `I ⊆ Δ` with no connected component inside `J` for one with
/// `T = I ⊔ (J ∩ I^⊥)`.
pub fn is_j_relevant_exhaustive(
    datum: &RootDatum,
    j: DiagramSubset,
    t: DiagramSubset,
) -> Result<bool, ParabolicError> {
    check_j(datum, j)?;
    Ok(DiagramSubset::all(datum.rank()).any(|i| {
        let l = j.intersection(orthogonal_complement(datum, i));
        components(datum, i).iter().all(|c| !c.is_subset(j)) && i.intersection(l).is_empty() && t == i.union(l)
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumDescriptor {
    /// The relevant type `T = I ⊔ (J ∩ I^⊥)`.
    pub t: DiagramSubset,
    pub i: DiagramSubset,
    /// Levi roots of the stratum (conjugated by `weyl` for non-standard strata).
    pub levi_roots: Vec<usize>,
    pub levi_rank: usize,
    /// Weyl element conjugating the standard parabolic, if not standard.
    pub weyl: Option<usize>,
}

/// One stratum class per `J`-relevant standard type, ordered by bit mask.
pub fn enumerate_strata(datum: &RootDatum, j: DiagramSubset) -> Result<Vec<StratumDescriptor>, ParabolicError> {
    check_j(datum, j)?;
    let mut out = Vec::new();
    for t in DiagramSubset::all(datum.rank()) {
        if is_j_relevant(datum, j, t)? {
            out.push(StratumDescriptor {
                t,
                i: t_tilde(datum, j, t),
                levi_roots: datum.levi_roots(t),
                levi_rank: t.len(),
                weyl: None,
            });
        }
    }
    Ok(out)
}

/// All relevant parabolics containing the apartment's torus: one per cone
/// of `F^J`, read off from the cone's core `u·f_T`.
pub fn enumerate_strata_conjugates(
    datum: &RootDatum,
    j: DiagramSubset,
) -> Result<Vec<StratumDescriptor>, ParabolicError> {
    check_j(datum, j)?;
    let fan = Fan::build(datum, j)?;
    let w = datum.weyl_group();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for c in 0..fan.len() {
        let core = fan.core(c);
        let el = w.element(core.weyl);
        let mut parabolic: Vec<usize> = datum
            .levi_roots(core.core_type)
            .into_iter()
            .chain(datum.unipotent_roots(core.core_type))
            .map(|a| el.perm[a])
            .collect();
        parabolic.sort_unstable();
        if !seen.insert(parabolic) {
            continue;
        }
        let mut levi: Vec<usize> = datum.levi_roots(core.core_type).into_iter().map(|a| el.perm[a]).collect();
        levi.sort_unstable();
        out.push(StratumDescriptor {
            t: core.core_type,
            i: core.generating,
            levi_roots: levi,
            levi_rank: core.core_type.len(),
            weyl: Some(core.weyl),
        });
    }
    Ok(out)
}

/// Roots vanishing on the core of a fan cone: the root system of its façade.
pub fn facade_root_system(datum: &RootDatum, fan: &Fan, cone: usize, cores: &CoreAssignment) -> Vec<usize> {
    let rep = &fan.weyl_facets()[cores.core(cone).facet].rep;
    (0..datum.num_roots())
        .filter(|&a| datum.root(a).iter().zip(rep).map(|(x, y)| x * y).sum::<i64>() == 0)
        .collect()
}

/// Roots vanishing on a linear subspace given by spanning vectors.
pub fn roots_vanishing_on(datum: &RootDatum, vectors: &[Vec<Q>]) -> Vec<usize> {
    (0..datum.num_roots())
        .filter(|&a| vectors.iter().all(|v| pair(datum.root(a), v).is_zero()))
        .collect()
}
