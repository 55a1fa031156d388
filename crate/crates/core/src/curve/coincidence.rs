//! Coincidence polynomials `C_ij(t, s) = P_i(1,t) P_j(1,s) - P_j(1,t) P_i(1,s)`
//! and exact fiber computations built on them.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{isolate_complex_roots, AlgPoint1, BPoly, NfElem, Poly, Rat, UPoly};
use crate::param::ProjParam;

/// The cross-differences of a parameterization together with the value at
/// the parameter `[0:1]`.
#[derive(Clone, Debug)]
pub struct CrossSystem {
    affine: Vec<UPoly>,
    at_infinity: Vec<Rat>,
    cross: Vec<BPoly>,
}

impl CrossSystem {
    pub fn new(param: &ProjParam) -> Self {
        let affine: Vec<UPoly> = (0..=param.m()).map(|i| param.affine(i)).collect();
        let d = param.degree();
        let at_infinity = param.components().iter().map(|p| p.coeffs()[d].clone()).collect();
        let mut cross = Vec::new();
        for i in 0..affine.len() {
            for j in i + 1..affine.len() {
                let c = BPoly::cross_difference(&affine[i], &affine[j]);
                if !c.is_zero() {
                    cross.push(c);
                }
            }
        }
        CrossSystem { affine, at_infinity, cross }
    }

    pub fn cross(&self) -> &[BPoly] {
        &self.cross
    }

    /// `gcd` of all cross-differences, normalized.
    pub fn gcd(&self) -> BPoly {
        self.cross.iter().fold(BPoly::zero(), |acc, c| acc.gcd(c))
    }

    /// `gcd_ij C_ij(alpha, s)` over `Q(alpha)`, `alpha` a root of `q`. Its roots
    /// are the finite parameters with the same image as `alpha`.
    pub fn fiber_gcd(&self, q: &UPoly) -> Poly<NfElem> {
        let m = Arc::new(q.monic());
        self.cross
            .iter()
            .fold(Poly::zero(), |acc, c| acc.gcd(&c.specialize_t(|p| NfElem::new(&m, p))))
    }

    /// Number of roots of the irreducible `qb` sharing the image of `alpha`.
    pub fn partner_count(g: &Poly<NfElem>, qb: &UPoly) -> usize {
        let lifted = qb.map(|c| NfElem::rational(c.clone()));
        g.gcd(&lifted).deg()
    }

    /// Whether the roots of `q` have the same image as `[0:1]`.
    pub fn meets_infinity(&self, q: &UPoly) -> bool {
        let v = &self.at_infinity;
        let n = self.affine.len();
        for i in 0..n {
            for j in i + 1..n {
                let e = &self.affine[j].scale(&v[i]) - &self.affine[i].scale(&v[j]);
                if !q.divides(&e) {
                    return false;
                }
            }
        }
        true
    }

    /// Polynomial whose roots are the finite parameters mapped to `P(0, 1)`;
    /// `None` when no such parameter exists.
    fn infinity_partners(&self) -> Option<UPoly> {
        let v = &self.at_infinity;
        let n = self.affine.len();
        let mut g = UPoly::zero();
        for i in 0..n {
            for j in i + 1..n {
                g = g.gcd(&(&self.affine[j].scale(&v[i]) - &self.affine[i].scale(&v[j])));
            }
        }
        (!g.is_constant()).then_some(g)
    }

    /// Among `candidates`, the indices whose point has the same image as
    /// `alpha`, given that there are exactly `count` of them. `keep` is an
    /// index known to qualify (`alpha` itself).
    pub fn resolve(&self, alpha: &AlgPoint1, candidates: &[AlgPoint1], count: usize, keep: Option<usize>) -> Vec<usize> {
        let mut alpha = alpha.clone();
        let mut live: Vec<(usize, AlgPoint1)> = candidates.iter().cloned().enumerate().collect();
        let mut width = Rat::new(1.into(), 4.into());
        loop {
            let a = alpha.civ().expect("finite point");
            live.retain(|(i, b)| {
                if Some(*i) == keep {
                    return true;
                }
                let b = b.civ().expect("finite point");
                self.cross.iter().all(|c| c.eval_box(&a, &b).contains_zero())
            });
            assert!(live.len() >= count, "fiber count exceeds candidates");
            if live.len() == count {
                return live.into_iter().map(|(i, _)| i).collect();
            }
            alpha = alpha.refine(&width);
            for (_, b) in live.iter_mut() {
                *b = b.refine(&width);
            }
            width = width / Rat::from_integer(4.into());
        }
    }
}

/// Partition of `points` (finite points plus at most one `Infinity`) into
/// classes with equal image. Finite points must carry monic irreducible
/// minimal polynomials; the classes are listed by smallest member.
pub fn group_by_image(sys: &CrossSystem, points: &[AlgPoint1]) -> Vec<Vec<usize>> {
    let mut by_poly: BTreeMap<Vec<Rat>, Vec<usize>> = BTreeMap::new();
    for (i, p) in points.iter().enumerate() {
        if let Some(q) = p.minpoly() {
            by_poly.entry(q.coeffs().to_vec()).or_default().push(i);
        }
    }
    let inf = points.iter().position(|p| p.is_infinity());
    let mut class: Vec<usize> = (0..points.len()).collect();
    let mut fiber_cache: BTreeMap<Vec<Rat>, Poly<NfElem>> = BTreeMap::new();

    for (a, pa) in points.iter().enumerate() {
        let Some(qa) = pa.minpoly() else { continue };
        let g = fiber_cache.entry(qa.coeffs().to_vec()).or_insert_with(|| sys.fiber_gcd(qa)).clone();
        for (key, members) in &by_poly {
            let qb = UPoly::new(key.clone());
            let n = CrossSystem::partner_count(&g, &qb);
            if n == 0 {
                continue;
            }
            let cands: Vec<AlgPoint1> = members.iter().map(|&i| points[i].clone()).collect();
            let keep = members.iter().position(|&i| i == a);
            for k in sys.resolve(pa, &cands, n, keep) {
                merge(&mut class, a, members[k]);
            }
        }
        if let Some(ii) = inf {
            if sys.meets_infinity(qa) {
                merge(&mut class, a, ii);
            }
        }
    }

    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..points.len() {
        groups.entry(find(&class, i)).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort();
    out
}

fn find(class: &[usize], mut i: usize) -> usize {
    while class[i] != i {
        i = class[i];
    }
    i
}

fn merge(class: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(class, a), find(class, b));
    if ra != rb {
        class[ra.max(rb)] = ra.min(rb);
    }
}

/// Output of the properness test.
#[derive(Clone, Debug)]
pub struct CoincidenceData {
    /// `gcd_ij C_ij`, normalized; `t - s` for a proper parameterization.
    pub h: BPoly,
    pub generic_fiber_degree: usize,
    /// Distinct parameters with equal image, each unordered pair once.
    pub node_pairs: Vec<(AlgPoint1, AlgPoint1)>,
}

impl CoincidenceData {
    pub fn is_proper(&self) -> bool {
        self.generic_fiber_degree == 1
    }
}

/// Degree of the generic fiber, from the coincidence gcd alone.
pub fn generic_fiber_degree(param: &ProjParam) -> usize {
    CrossSystem::new(param).gcd().deg_s()
}

/// Computes the coincidence gcd and, for proper input, all pairs of distinct
/// parameters (possibly complex or `[0:1]`) identified by the map.
pub fn properness_check(param: &ProjParam) -> CoincidenceData {
    let sys = CrossSystem::new(param);
    let h = sys.gcd();
    let generic_fiber_degree = h.deg_s();
    let mut data = CoincidenceData { h, generic_fiber_degree, node_pairs: Vec::new() };
    if !data.is_proper() {
        return data;
    }
    let quotients: Vec<BPoly> =
        sys.cross.iter().map(|c| c.exact_div(&data.h).expect("gcd divides every cross-difference")).collect();

    let mut cand = UPoly::one();
    if !quotients.iter().any(|q| q.deg_s() == 0 && q.deg_t() == 0) {
        cand = &cand * &double_point_polynomial(&quotients);
    }
    if let Some(d) = sys.infinity_partners() {
        cand = &cand * &d;
    }
    if cand.is_constant() {
        return data;
    }
    let cand = cand.squarefree_part();
    let mut points = isolate_complex_roots(&cand).expect("squarefree");
    points.push(AlgPoint1::Infinity);
    for g in group_by_image(&sys, &points) {
        for (x, &i) in g.iter().enumerate() {
            for &j in &g[x + 1..] {
                data.node_pairs.push((points[i].clone(), points[j].clone()));
            }
        }
    }
    data
}

/// A nonzero polynomial in `t` vanishing at the first coordinate of every
/// common zero of the given bivariate polynomials (assumed coprime as a set
/// and not containing a nonzero constant).
fn double_point_polynomial(qs: &[BPoly]) -> UPoly {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0dd5);
    for _ in 0..64 {
        let mut l1 = BPoly::zero();
        let mut l2 = BPoly::zero();
        for q in qs {
            let a = UPoly::constant(Rat::from_integer(rng.gen_range(-9i64..=9).into()));
            let b = UPoly::constant(Rat::from_integer(rng.gen_range(-9i64..=9).into()));
            l1 = l1.add(&q.scale_t(&a));
            l2 = l2.add(&q.scale_t(&b));
        }
        if l1.is_zero() || l2.is_zero() {
            continue;
        }
        if l1.deg_s() == 0 || l2.deg_s() == 0 {
            // A factor free of s: its roots in t are candidates themselves.
            let r = if l1.deg_s() == 0 { l1.lc_s() } else { l2.lc_s() };
            if !r.is_zero() {
                return r;
            }
            continue;
        }
        let r = l1.resultant_s(&l2);
        if !r.is_zero() {
            return r;
        }
    }
    panic!("coprime cross-difference quotients yield no nonzero resultant");
}
