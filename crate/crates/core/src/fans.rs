//! Relatively open rational cones, the Weyl fan and the fans `F^J`.
//!
//! Every fan here is a coarsening of the Weyl fan, so each cone is stored as
//! the set of Weyl facets it contains together with its description by root
//! forms: equalities (roots vanishing on the cone) and strict inequalities
//! (roots positive on the cone). Construction checks that the forms cut out
//! exactly the stored facets and that the cones partition the space.

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg;
use crate::num::{pair, q, sign, Q};
use crate::rootdata::{components, orthogonal_complement, DiagramSubset, RootDatum};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FanError {
    #[error("the roots do not span the ambient space; essentialize the datum first")]
    NotEssential,
    #[error("J = {0:?} contains a connected component of the Dynkin diagram")]
    DegenerateJ(DiagramSubset),
    #[error("cones do not partition the space: {0}")]
    PartitionFailure(String),
    #[error("parabolic type {q_type:?} does not match J = {j:?}")]
    TypeMismatch { q_type: DiagramSubset, j: DiagramSubset },
    #[error("Weyl element index {0} out of range")]
    BadWeylElement(usize),
    #[error("fan check failed: {0}")]
    CheckFailed(String),
}

/// A relatively open polyhedral cone `{x : e(x) = 0 for e in equalities,
/// s(x) > 0 for s in strict}` together with the extreme rays of its closure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cone {
    pub dim: usize,
    pub equalities: Vec<Vec<i64>>,
    pub strict: Vec<Vec<i64>>,
    pub rays: Vec<Vec<i64>>,
}

impl Cone {
    pub fn contains(&self, x: &[Q]) -> bool {
        self.equalities.iter().all(|e| pair(e, x).is_zero())
            && self.strict.iter().all(|s| sign(&pair(s, x)) > 0)
    }

    pub fn closure_contains(&self, x: &[Q]) -> bool {
        self.equalities.iter().all(|e| pair(e, x).is_zero())
            && self.strict.iter().all(|s| sign(&pair(s, x)) >= 0)
    }

    fn closure_contains_int(&self, x: &[i64]) -> bool {
        let p = |f: &Vec<i64>| f.iter().zip(x).map(|(a, b)| a * b).sum::<i64>();
        self.equalities.iter().all(|e| p(e) == 0) && self.strict.iter().all(|s| p(s) >= 0)
    }

    /// Dimension of the linear span.
    pub fn span_dim(&self) -> usize {
        self.dim - linalg::rank(&linalg::from_int_rows(&self.equalities))
    }

    /// Extreme rays of the closure recomputed from the inequality system alone.
    pub fn rays_from_forms(&self) -> Vec<Vec<i64>> {
        let eqs = linalg::from_int_rows(&self.equalities);
        let ineqs = linalg::from_int_rows(&self.strict);
        big_to_i64(linalg::extreme_rays(&eqs, &ineqs, self.dim))
    }

    /// The closure contains no line.
    pub fn is_strictly_convex(&self) -> bool {
        let mut all = self.equalities.clone();
        all.extend(self.strict.iter().cloned());
        let pointed = linalg::rank(&linalg::from_int_rows(&all)) == self.dim;
        let antipodal = self
            .rays
            .iter()
            .any(|r| self.rays.contains(&r.iter().map(|x| -x).collect()));
        pointed && !antipodal
    }
}

fn big_to_i64(v: Vec<Vec<num_bigint::BigInt>>) -> Vec<Vec<i64>> {
    v.into_iter()
        .map(|r| r.into_iter().map(|x| i64::try_from(x).expect("small ray")).collect())
        .collect()
}

fn primitive_i64(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |a, &b| num_integer::gcd(a, b));
    if g == 0 {
        v.to_vec()
    } else {
        v.iter().map(|x| x / g).collect()
    }
}

fn rank_i(rows: &[Vec<i64>]) -> usize {
    linalg::rank(&linalg::from_int_rows(rows))
}

/// A facet of the root hyperplane arrangement, `w·f_K` for the face `f_K`
/// of the fundamental chamber on which exactly the simple roots in `K` vanish.
#[derive(Debug, Clone)]
pub struct WeylFacet {
    /// Signs of the positive non-divisible roots on the facet.
    pub signs: Vec<i8>,
    /// An integer point of the facet.
    pub rep: Vec<i64>,
    /// Extreme rays of the closure (primitive, sorted).
    pub rays: Vec<Vec<i64>>,
    pub face_type: DiagramSubset,
    pub weyl: usize,
}

/// Core of a fan cone: the facet `u·f_T` where the cone is `u·D(I)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Core {
    pub generating: DiagramSubset,
    pub core_type: DiagramSubset,
    pub weyl: usize,
    pub facet: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoreAssignment(pub Vec<Core>);

impl CoreAssignment {
    pub fn core(&self, cone: usize) -> &Core {
        &self.0[cone]
    }
}

#[derive(Debug, Clone)]
pub struct FanCone {
    pub cone: Cone,
    /// Weyl facets contained in this cone, sorted.
    pub facets: Vec<usize>,
}

/// A W-invariant fan refined by the Weyl fan.
#[derive(Debug, Clone)]
pub struct Fan {
    datum: RootDatum,
    j: DiagramSubset,
    pos_nd: Vec<usize>,
    facets: Vec<WeylFacet>,
    facet_by_signs: HashMap<Vec<i8>, usize>,
    facet_table: HashMap<(usize, DiagramSubset), usize>,
    cones: Vec<FanCone>,
    owner: Vec<usize>,
    cores: CoreAssignment,
    face_order: OnceLock<Vec<Vec<bool>>>,
}

pub fn weyl_fan(datum: &RootDatum) -> Result<Fan, FanError> {
    Fan::build(datum, DiagramSubset::EMPTY)
}

pub fn fan_fj(datum: &RootDatum, j: DiagramSubset) -> Result<(Fan, CoreAssignment), FanError> {
    let fan = Fan::build(datum, j)?;
    let cores = fan.cores.clone();
    Ok((fan, cores))
}

/// Subsets `I ⊆ Δ` none of whose connected components lies inside `J`.
pub fn admissible_types(datum: &RootDatum, j: DiagramSubset) -> Vec<DiagramSubset> {
    DiagramSubset::all(datum.rank())
        .filter(|&i| components(datum, i).iter().all(|c| !c.is_subset(j)))
        .collect()
}

/// `J` contains a connected component of Δ.
pub fn is_degenerate_j(datum: &RootDatum, j: DiagramSubset) -> bool {
    datum.diagram_components().iter().any(|c| c.is_subset(j))
}

impl Fan {
    pub fn build(datum: &RootDatum, j: DiagramSubset) -> Result<Fan, FanError> {
        if !datum.is_essential() {
            return Err(FanError::NotEssential);
        }
        if !j.is_subset(datum.full_subset()) || is_degenerate_j(datum, j) {
            return Err(FanError::DegenerateJ(j));
        }
        let r = datum.rank();
        let w = datum.weyl_group();
        let pos_nd: Vec<usize> = datum.positive_roots().filter(|&a| datum.half(a).is_none()).collect();
        let signs_of = |x: &[i64]| -> Vec<i8> {
            pos_nd
                .iter()
                .map(|&a| datum.root(a).iter().zip(x).map(|(c, v)| c * v).sum::<i64>().signum() as i8)
                .collect()
        };

        let mut facets: Vec<WeylFacet> = Vec::new();
        let mut facet_by_signs = HashMap::new();
        let mut facet_table = HashMap::new();
        for (wi, el) in w.elements().iter().enumerate() {
            for k in DiagramSubset::all(r) {
                let y: Vec<i64> = (0..r).map(|i| i64::from(!k.contains(i))).collect();
                let rep = el.act_int(&y);
                let signs = signs_of(&rep);
                let idx = *facet_by_signs.entry(signs.clone()).or_insert_with(|| {
                    let mut rays: Vec<Vec<i64>> = (0..r)
                        .filter(|&i| !k.contains(i))
                        .map(|i| {
                            let e: Vec<i64> = (0..r).map(|t| i64::from(t == i)).collect();
                            primitive_i64(&el.act_int(&e))
                        })
                        .collect();
                    rays.sort();
                    facets.push(WeylFacet { signs, rep, rays, face_type: k, weyl: wi });
                    facets.len() - 1
                });
                facet_table.insert((wi, k), idx);
            }
        }

        let mut fan = Fan {
            datum: datum.clone(),
            j,
            pos_nd,
            facets,
            facet_by_signs,
            facet_table,
            cones: Vec::new(),
            owner: Vec::new(),
            cores: CoreAssignment::default(),
            face_order: OnceLock::new(),
        };

        let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut cones = Vec::new();
        let mut cores = Vec::new();
        for i in admissible_types(datum, j) {
            let l = j.intersection(orthogonal_complement(datum, i));
            let t = i.union(l);
            let mut base: BTreeSet<usize> = BTreeSet::new();
            for v in w.parabolic_subgroup(l) {
                for k in l.subsets() {
                    base.insert(fan.facet_table[&(v, i.union(k))]);
                }
            }
            let core_base = fan.facet_table[&(0, t)];
            for u in 0..w.order() {
                let mut img: Vec<usize> = base.iter().map(|&f| fan.act_on_facet(u, f)).collect();
                img.sort_unstable();
                if seen.contains_key(&img) {
                    continue;
                }
                seen.insert(img.clone(), cones.len());
                cores.push(Core { generating: i, core_type: t, weyl: u, facet: fan.act_on_facet(u, core_base) });
                cones.push(img);
            }
        }

        let mut owner = vec![usize::MAX; fan.facets.len()];
        for (c, fs) in cones.iter().enumerate() {
            for &f in fs {
                if owner[f] != usize::MAX {
                    return Err(FanError::PartitionFailure(format!(
                        "Weyl facet {f} lies in cones {} and {c}",
                        owner[f]
                    )));
                }
                owner[f] = c;
            }
        }
        if let Some(f) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(FanError::PartitionFailure(format!("Weyl facet {f} is not covered")));
        }
        fan.owner = owner;
        fan.cones = cones
            .into_iter()
            .map(|fs| fan.cone_from_facets(fs))
            .collect::<Result<_, _>>()?;
        fan.cores = CoreAssignment(cores);
        Ok(fan)
    }

    /// Describes a union of Weyl facets by root forms and checks that the
    /// forms select exactly these facets.
    fn cone_from_facets(&self, facets: Vec<usize>) -> Result<FanCone, FanError> {
        let d = &self.datum;
        let mut equalities = Vec::new();
        let mut strict = Vec::new();
        for (k, &a) in self.pos_nd.iter().enumerate() {
            let s: BTreeSet<i8> = facets.iter().map(|&f| self.facets[f].signs[k]).collect();
            if s.len() != 1 {
                continue;
            }
            match s.into_iter().next().unwrap() {
                0 => equalities.push(d.root(a).to_vec()),
                1 => strict.push(d.root(a).to_vec()),
                _ => strict.push(d.root(a).iter().map(|x| -x).collect()),
            }
        }
        equalities.sort();
        strict.sort();
        let mut cone = Cone { dim: d.rank(), equalities, strict, rays: Vec::new() };
        let member: BTreeSet<usize> = facets.iter().copied().collect();
        for (f, facet) in self.facets.iter().enumerate() {
            let inside = cone.equalities.iter().all(|e| dot_i(e, &facet.rep) == 0)
                && cone.strict.iter().all(|s| dot_i(s, &facet.rep) > 0);
            if inside != member.contains(&f) {
                return Err(FanError::PartitionFailure(format!(
                    "root forms of a cone do not cut out its facets (facet {f})"
                )));
            }
        }
        let mut cand: BTreeSet<Vec<i64>> = BTreeSet::new();
        for &f in &facets {
            cand.extend(self.facets[f].rays.iter().cloned());
        }
        let target = cone.dim.saturating_sub(1);
        cone.rays = cand
            .into_iter()
            .filter(|r| {
                let mut active = cone.equalities.clone();
                active.extend(cone.strict.iter().filter(|s| dot_i(s, r) == 0).cloned());
                rank_i(&active) == target
            })
            .collect();
        Ok(FanCone { cone, facets })
    }

    /// Index of the facet `u·f` for a Weyl element `u`.
    pub fn act_on_facet(&self, u: usize, f: usize) -> usize {
        let w = self.datum.weyl_group();
        let facet = &self.facets[f];
        self.facet_table[&(w.compose(u, facet.weyl), facet.face_type)]
    }

    /// Index of the cone `u·c`, or `None` if the image is not a cone of the fan.
    pub fn act_on_cone(&self, u: usize, c: usize) -> Option<usize> {
        let mut img: Vec<usize> = self.cones[c].facets.iter().map(|&f| self.act_on_facet(u, f)).collect();
        img.sort_unstable();
        let target = self.owner[img[0]];
        (self.cones[target].facets == img).then_some(target)
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn j(&self) -> DiagramSubset {
        self.j
    }

    pub fn dim(&self) -> usize {
        self.datum.rank()
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    pub fn cones(&self) -> &[FanCone] {
        &self.cones
    }

    pub fn cone(&self, c: usize) -> &Cone {
        &self.cones[c].cone
    }

    pub fn weyl_facets(&self) -> &[WeylFacet] {
        &self.facets
    }

    pub fn cores(&self) -> &CoreAssignment {
        &self.cores
    }

    pub fn core(&self, c: usize) -> &Core {
        &self.cores.0[c]
    }

    /// Index of the cone `{0}`.
    pub fn origin(&self) -> usize {
        self.owner[self.facet_table[&(0, self.datum.full_subset())]]
    }

    /// The unique cone containing `v`.
    pub fn cone_containing(&self, v: &[Q]) -> usize {
        let signs: Vec<i8> = self.pos_nd.iter().map(|&a| sign(&pair(self.datum.root(a), v))).collect();
        self.owner[self.facet_by_signs[&signs]]
    }

    /// Index of the facet `w·f_K`.
    pub fn facet_of(&self, w: usize, k: DiagramSubset) -> usize {
        self.facet_table[&(w, k)]
    }

    pub fn owner_of_facet(&self, f: usize) -> usize {
        self.owner[f]
    }

    /// Open cone `w·C(P_J)°` for the standard parabolic of type `J`.
    pub fn cone_of_parabolic(&self, q_type: DiagramSubset, w: usize) -> Result<usize, FanError> {
        if q_type != self.j {
            return Err(FanError::TypeMismatch { q_type, j: self.j });
        }
        if w >= self.datum.weyl_group().order() {
            return Err(FanError::BadWeylElement(w));
        }
        Ok(self.owner[self.facet_table[&(w, DiagramSubset::EMPTY)]])
    }

    /// Closure criterion: `f ⊆ ḡ` and `f̄ = Span(f) ∩ ḡ`.
    pub fn is_face(&self, f: usize, g: usize) -> bool {
        let (cf, cg) = (&self.cones[f].cone, &self.cones[g].cone);
        if !cf.rays.iter().all(|r| cg.closure_contains_int(r)) {
            return false;
        }
        let mut eqs = cg.equalities.clone();
        eqs.extend(cf.equalities.iter().cloned());
        let rays = big_to_i64(linalg::extreme_rays(
            &linalg::from_int_rows(&eqs),
            &linalg::from_int_rows(&cg.strict),
            cg.dim,
        ));
        rays == cf.rays
    }

    /// Supporting-form criterion: some linear form non-negative on `ḡ` cuts
    /// out exactly `f̄`. The candidate is the sum of the strict forms of `g`
    /// vanishing on `f`.
    pub fn is_face_by_supporting_form(&self, f: usize, g: usize) -> bool {
        let (cf, cg) = (&self.cones[f].cone, &self.cones[g].cone);
        if !cf.rays.iter().all(|r| cg.closure_contains_int(r)) {
            return false;
        }
        let rep = &self.facets[self.cones[f].facets[0]].rep;
        let mut alpha = vec![0i64; cg.dim];
        for s in cg.strict.iter().filter(|s| dot_i(s, rep) == 0) {
            for (a, b) in alpha.iter_mut().zip(s) {
                *a += b;
            }
        }
        let mut eqs = cg.equalities.clone();
        eqs.push(alpha);
        let rays = big_to_i64(linalg::extreme_rays(
            &linalg::from_int_rows(&eqs),
            &linalg::from_int_rows(&cg.strict),
            cg.dim,
        ));
        rays == cf.rays
    }

    /// `order[f][g]` iff `f` is a face of `g`.
    pub fn face_order(&self) -> &Vec<Vec<bool>> {
        self.face_order.get_or_init(|| {
            let n = self.cones.len();
            (0..n)
                .map(|f| (0..n).map(|g| self.maybe_face(f, g) && self.is_face(f, g)).collect())
                .collect()
        })
    }

    /// Cheap necessary condition for `f ⊆ ḡ`, on one facet of `f`.
    fn maybe_face(&self, f: usize, g: usize) -> bool {
        let rep = &self.facets[self.cones[f].facets[0]].rep;
        self.cones[g].cone.closure_contains_int(rep)
    }

    /// Stabilizer of a cone in W.
    pub fn stabilizer(&self, c: usize) -> Vec<usize> {
        (0..self.datum.weyl_group().order())
            .filter(|&u| self.act_on_cone(u, c) == Some(c))
            .collect()
    }

    /// Exact containment check on `points`: each lies in exactly one cone,
    /// namely [`cone_containing`](Self::cone_containing).
    pub fn check_partition(&self, points: &[Vec<Q>]) -> Result<(), FanError> {
        for p in points {
            let hits: Vec<usize> = (0..self.cones.len()).filter(|&c| self.cone(c).contains(p)).collect();
            if hits.len() != 1 || hits[0] != self.cone_containing(p) {
                return Err(FanError::PartitionFailure(format!(
                    "point {:?} lies in cones {hits:?}",
                    p.iter().map(ToString::to_string).collect::<Vec<_>>()
                )));
            }
        }
        Ok(())
    }

    /// Verifies the fan axioms, strict convexity, agreement of the two face
    /// criteria, W-invariance and the fixed-point property of cores.
    pub fn verify(&self, samples: usize, seed: u64) -> Result<(), FanError> {
        let fail = |m: String| Err(FanError::CheckFailed(m));
        self.check_partition(&sample_points(&self.datum, samples, seed))?;
        let origin = self.origin();
        if self.cones[origin].facets.len() != 1 || self.cone(origin).span_dim() != 0 {
            return fail("the origin is not a cone".into());
        }
        for (g, gc) in self.cones.iter().enumerate() {
            let cg = &gc.cone;
            if !cg.is_strictly_convex() {
                return fail(format!("cone {g} is not strictly convex"));
            }
            if cg.rays_from_forms() != cg.rays {
                return fail(format!("cone {g}: generators disagree with inequalities"));
            }
            // boundary is a union of cones
            for (f, facet) in self.facets.iter().enumerate() {
                if self.owner[f] == g || !cg.closure_contains_int(&facet.rep) {
                    continue;
                }
                let o = self.owner[f];
                if !self.cones[o].facets.iter().all(|&h| cg.closure_contains_int(&self.facets[h].rep)) {
                    return fail(format!("boundary of cone {g} meets cone {o} partially"));
                }
            }
        }
        let order = self.face_order();
        for f in 0..self.len() {
            if !order[origin][f] || !order[f][f] {
                return fail(format!("face order is not reflexive with minimum at cone {f}"));
            }
            for g in 0..self.len() {
                let closure_inside = self.cones[f].facets.iter().all(|&h| {
                    self.cone(g).closure_contains_int(&self.facets[h].rep)
                });
                if closure_inside != order[f][g] {
                    return fail(format!("cone {f} lies in the closure of {g} without being a face"));
                }
                if self.is_face_by_supporting_form(f, g) != order[f][g] {
                    return fail(format!("face criteria disagree on ({f}, {g})"));
                }
            }
        }
        let w = self.datum.weyl_group();
        for s in 0..self.datum.rank() {
            let u = w.simple_reflection(s);
            for c in 0..self.len() {
                if self.act_on_cone(u, c).is_none() {
                    return fail(format!("simple reflection {s} does not map cone {c} to a cone"));
                }
            }
        }
        for c in 0..self.len() {
            let core = self.core(c);
            if !self.cones[c].facets.contains(&core.facet) {
                return fail(format!("core of cone {c} is not inside it"));
            }
            let stab = self.stabilizer(c);
            for &f in &self.cones[c].facets {
                let fixed = stab
                    .iter()
                    .all(|&u| w.element(u).act_int(&self.facets[f].rep) == self.facets[f].rep);
                if fixed != (f == core.facet) {
                    return fail(format!("core of cone {c} is not the fixed part of its stabilizer"));
                }
            }
        }
        Ok(())
    }
}

fn dot_i(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Deterministic sample of at least `count` rational points: the origin, a
/// point of every Weyl facet, an integer grid, points on root walls and
/// seeded random rationals.
pub fn sample_points(datum: &RootDatum, count: usize, seed: u64) -> Vec<Vec<Q>> {
    let r = datum.rank();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Vec<Q>> = vec![vec![Q::zero(); r]];
    let w = datum.weyl_group();
    for el in w.elements() {
        for k in DiagramSubset::all(r) {
            let y: Vec<i64> = (0..r).map(|i| i64::from(!k.contains(i))).collect();
            out.push(el.act_int(&y).into_iter().map(q).collect());
        }
    }
    let side = 5i64;
    let total = side.pow(r as u32);
    if total as usize <= count {
        for n in 0..total {
            let mut m = n;
            out.push(
                (0..r)
                    .map(|_| {
                        let v = m % side - side / 2;
                        m /= side;
                        q(v)
                    })
                    .collect(),
            );
        }
    }
    let rand_point = |rng: &mut ChaCha8Rng| -> Vec<Q> {
        (0..r).map(|_| Q::new(rng.gen_range(-12i64..=12).into(), rng.gen_range(1i64..=5).into())).collect()
    };
    let positive: Vec<usize> = datum.positive_roots().collect();
    while out.len() < count {
        let x = rand_point(&mut rng);
        // midpoint of x and s_a(x) lies on the wall of a
        let a = positive[rng.gen_range(0..positive.len())];
        let ax = pair(datum.root(a), &x);
        let wall: Vec<Q> = x
            .iter()
            .zip(datum.coroot(a))
            .map(|(xi, hi)| xi - &ax * q(*hi) / q(2))
            .collect();
        out.push(x);
        out.push(wall);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat(n: &str) -> RootDatum {
        RootDatum::catalogue(n).unwrap()
    }

    #[test]
    fn weyl_fan_counts() {
        for (n, c) in [("A1", 3), ("A2", 13), ("B2", 17), ("G2", 25), ("A1xA1", 9), ("BC2", 17)] {
            assert_eq!(weyl_fan(&cat(n)).unwrap().len(), c, "{n}");
        }
    }

    #[test]
    fn a2_j1_merged_cones() {
        let d = cat("A2");
        let (fan, cores) = fan_fj(&d, DiagramSubset::singleton(0)).unwrap();
        assert_eq!(fan.len(), 7);
        let dims: Vec<usize> = fan.cones().iter().map(|c| c.cone.span_dim()).collect();
        assert_eq!(dims.iter().filter(|&&x| x == 2).count(), 3);
        assert_eq!(dims.iter().filter(|&&x| x == 1).count(), 3);
        let c0 = fan.cone_of_parabolic(DiagramSubset::singleton(0), 0).unwrap();
        assert_eq!(cores.core(c0).core_type, DiagramSubset::singleton(0));
        assert_eq!(fan.cones()[c0].facets.len(), 3);
        // the wall ker a1 with a2 > 0 lies in the merged cone
        assert_eq!(fan.cone_containing(&[q(0), q(1)]), c0);
    }

    #[test]
    fn cone_of_parabolic_equivariance() {
        let d = cat("A2");
        let fan = Fan::build(&d, DiagramSubset::singleton(0)).unwrap();
        let w = d.weyl_group();
        let id = fan.cone_of_parabolic(DiagramSubset::singleton(0), 0).unwrap();
        let s1 = fan.cone_of_parabolic(DiagramSubset::singleton(0), w.simple_reflection(0)).unwrap();
        let s2 = fan.cone_of_parabolic(DiagramSubset::singleton(0), w.simple_reflection(1)).unwrap();
        assert_eq!(id, s1);
        assert_ne!(id, s2);
        assert!(matches!(
            fan.cone_of_parabolic(DiagramSubset::singleton(1), 0),
            Err(FanError::TypeMismatch { .. })
        ));
    }

    #[test]
    fn degenerate_j_rejected() {
        let d = cat("A2");
        assert!(matches!(fan_fj(&d, d.full_subset()), Err(FanError::DegenerateJ(_))));
        let d = cat("A1xA1");
        assert!(fan_fj(&d, DiagramSubset::singleton(0)).is_err());
    }

    #[test]
    fn a2_faces_of_rays() {
        let d = cat("A2");
        let fan = weyl_fan(&d).unwrap();
        for f in 0..fan.len() {
            if fan.cone(f).span_dim() != 1 {
                continue;
            }
            let cofaces = (0..fan.len()).filter(|&g| g != f && fan.is_face(f, g)).count();
            assert_eq!(cofaces, 2);
        }
    }

    #[test]
    fn verify_small_fans() {
        for n in ["A1", "A2", "B2", "G2", "BC1"] {
            let d = cat(n);
            weyl_fan(&d).unwrap().verify(200, 7).unwrap();
            for i in 0..d.rank() {
                if let Ok(f) = Fan::build(&d, DiagramSubset::singleton(i)) {
                    f.verify(200, 7).unwrap();
                }
            }
        }
    }

    #[test]
    fn not_essential() {
        let v = |a: i64, b: i64, c: i64| vec![q(a), q(b), q(c)];
        let d = RootDatum::from_vectors("a1", vec![v(1, -1, 0), v(-1, 1, 0)], None).unwrap();
        assert_eq!(weyl_fan(&d).unwrap_err(), FanError::NotEssential);
        assert_eq!(weyl_fan(&d.essentialize()).unwrap().len(), 3);
    }
}
