//! Hausdorff distances between sample clouds, sampled polylines and curves.

use rayon::prelude::*;

use super::cloud::{Curve, SampleCloud};
use crate::error::{Error, Result};

fn dist2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Balanced kd-tree over the points of a cloud, with coordinates stored in
/// tree order.
pub struct KdTree {
    dim: usize,
    coords: Vec<f64>,
    ids: Vec<usize>,
    slots: Vec<usize>,
}

impl KdTree {
    pub fn new(cloud: &SampleCloud) -> Self {
        let mut ids: Vec<usize> = (0..cloud.len()).collect();
        build(cloud, &mut ids, 0);
        let coords = ids.iter().flat_map(|&i| cloud.point(i).iter().copied()).collect();
        let mut slots = vec![0; ids.len()];
        for (slot, &i) in ids.iter().enumerate() {
            slots[i] = slot;
        }
        KdTree { dim: cloud.dim(), coords, ids, slots }
    }

    /// Index and squared distance of the nearest point.
    pub fn nearest(&self, q: &[f64]) -> (usize, f64) {
        let mut best = [(usize::MAX, f64::INFINITY)];
        self.search(q, 0, self.ids.len(), 0, &mut best);
        best[0]
    }

    /// The `k` nearest points, closest first.
    pub fn k_nearest(&self, q: &[f64], k: usize) -> Vec<(usize, f64)> {
        self.k_nearest_seeded(q, k, &[])
    }

    /// The `k` nearest points, with the points `seeds` tried first.
    pub fn k_nearest_seeded(&self, q: &[f64], k: usize, seeds: &[usize]) -> Vec<(usize, f64)> {
        let mut best = vec![(usize::MAX, f64::INFINITY); k.min(self.ids.len()).max(1)];
        for &i in seeds {
            self.offer(self.slots[i], q, &mut best);
        }
        self.search(q, 0, self.ids.len(), 0, &mut best);
        best
    }

    fn offer(&self, i: usize, q: &[f64], best: &mut [(usize, f64)]) {
        let d = dist2(&self.coords[i * self.dim..(i + 1) * self.dim], q);
        let worst = best.len() - 1;
        if d < best[worst].1 && best.iter().all(|b| b.0 != self.ids[i]) {
            best[worst] = (self.ids[i], d);
            let mut j = worst;
            while j > 0 && best[j].1 < best[j - 1].1 {
                best.swap(j, j - 1);
                j -= 1;
            }
        }
    }

    fn search(&self, q: &[f64], lo: usize, hi: usize, depth: usize, best: &mut [(usize, f64)]) {
        if lo >= hi {
            return;
        }
        if hi - lo <= LEAF {
            for i in lo..hi {
                self.offer(i, q, best);
            }
            return;
        }
        let mid = (lo + hi) / 2;
        self.offer(mid, q, best);
        let p = &self.coords[mid * self.dim..(mid + 1) * self.dim];
        let axis = depth % self.dim;
        let diff = q[axis] - p[axis];
        let (near, far) = if diff < 0.0 { ((lo, mid), (mid + 1, hi)) } else { ((mid + 1, hi), (lo, mid)) };
        self.search(q, near.0, near.1, depth + 1, best);
        if diff * diff < best[best.len() - 1].1 {
            self.search(q, far.0, far.1, depth + 1, best);
        }
    }
}

const LEAF: usize = 16;

fn build(cloud: &SampleCloud, idx: &mut [usize], depth: usize) {
    if idx.len() <= LEAF {
        return;
    }
    let axis = depth % cloud.dim();
    let mid = idx.len() / 2;
    idx.select_nth_unstable_by(mid, |&a, &b| cloud.point(a)[axis].total_cmp(&cloud.point(b)[axis]));
    let (left, right) = idx.split_at_mut(mid);
    build(cloud, left, depth + 1);
    build(cloud, &mut right[1..], depth + 1);
}

fn check_dims(a: &SampleCloud, b: &SampleCloud) -> Result<()> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyCloud);
    }
    if a.dim() != b.dim() {
        return Err(Error::Document(format!("dimension mismatch: {} vs {}", a.dim(), b.dim())));
    }
    Ok(())
}

fn par_max(it: impl ParallelIterator<Item = f64>) -> f64 {
    it.reduce(|| 0.0, f64::max)
}

/// Maximum of `f(p, nearest samples of the tree)` over the points `p` of `x`.
/// Points are taken in runs so that each query is seeded with the answer for
/// the previous point.
fn par_max_near(x: &SampleCloud, tree: &KdTree, f: impl Fn(&[f64], &[(usize, f64)]) -> f64 + Sync) -> f64 {
    const RUN: usize = 4096;
    par_max((0..x.len().div_ceil(RUN)).into_par_iter().map(|r| {
        let mut seeds = Vec::with_capacity(NEIGHBOURS);
        let mut m = 0.0f64;
        for i in r * RUN..((r + 1) * RUN).min(x.len()) {
            let p = x.point(i);
            let near = tree.k_nearest_seeded(p, NEIGHBOURS, &seeds);
            m = m.max(f(p, &near));
            seeds.clear();
            seeds.extend(near.iter().map(|n| n.0).filter(|&j| j != usize::MAX));
        }
        m
    }))
}

/// `max_{p in a} min_{q in b} |p - q|`.
pub fn directed_hausdorff(a: &SampleCloud, b: &SampleCloud) -> f64 {
    let tree = KdTree::new(b);
    par_max((0..a.len()).into_par_iter().map(|i| tree.nearest(a.point(i)).1.sqrt()))
}

/// Symmetric Hausdorff distance between the point sets.
pub fn hausdorff(a: &SampleCloud, b: &SampleCloud) -> Result<f64> {
    check_dims(a, b)?;
    Ok(directed_hausdorff(a, b).max(directed_hausdorff(b, a)))
}

fn segment_dist2(p: &[f64], a: &[f64], b: &[f64]) -> f64 {
    let ab: f64 = a.iter().zip(b).map(|(x, y)| (y - x) * (y - x)).sum();
    if ab == 0.0 {
        return dist2(p, a);
    }
    let t: f64 = p.iter().zip(a).zip(b).map(|((pi, ai), bi)| (pi - ai) * (bi - ai)).sum::<f64>() / ab;
    let t = t.clamp(0.0, 1.0);
    p.iter().zip(a).zip(b).map(|((pi, ai), bi)| (pi - (ai + t * (bi - ai))).powi(2)).sum()
}

const NEIGHBOURS: usize = 4;

/// Squared distance from `p` to the polyline of `b` through the segments at
/// the given nearest samples.
fn polyline_dist2(near: &[(usize, f64)], b: &SampleCloud, p: &[f64]) -> f64 {
    let n = b.len();
    let mut best = f64::INFINITY;
    for &(j, d) in near {
        if j == usize::MAX {
            continue;
        }
        best = best.min(d);
        if b.joined(j) {
            best = best.min(segment_dist2(p, b.point(j), b.point((j + 1) % n)));
        }
        let prev = if j == 0 { n - 1 } else { j - 1 };
        if n > 1 && b.joined(prev) {
            best = best.min(segment_dist2(p, b.point(prev), b.point(j)));
        }
    }
    best
}

/// Hausdorff distance between the polylines through consecutive samples.
pub fn hausdorff_polyline(a: &SampleCloud, b: &SampleCloud) -> Result<f64> {
    check_dims(a, b)?;
    let directed = |x: &SampleCloud, y: &SampleCloud| {
        let tree = KdTree::new(y);
        par_max_near(x, &tree, |p, near| polyline_dist2(near, y, p).sqrt())
    };
    Ok(directed(a, b).max(directed(b, a)))
}

/// Minimizes `|c(s) - p|^2` over `[lo, hi]` by chord steps on
/// `(c(s) - p) . c'(start) = 0`, with `c'` by central differences.
fn refine_on(curve: &dyn Curve, p: &[f64], lo: f64, hi: f64, start: f64) -> f64 {
    let (mut q, mut qa, mut qb) = (Vec::new(), Vec::new(), Vec::new());
    if !curve.point_into(start, &mut q) {
        return f64::INFINITY;
    }
    let mut best = dist2(&q, p);
    let h = 1e-4 * (hi - lo);
    if hi <= lo || !curve.point_into(start - h, &mut qa) || !curve.point_into(start + h, &mut qb) {
        return best;
    }
    let tangent: Vec<f64> = qa.iter().zip(&qb).map(|(a, b)| (b - a) / (2.0 * h)).collect();
    let den: f64 = tangent.iter().map(|d| d * d).sum();
    if den <= f64::MIN_POSITIVE {
        return best;
    }
    let mut s = start;
    for _ in 0..12 {
        let num: f64 = q.iter().zip(p).zip(&tangent).map(|((x, y), d)| (x - y) * d).sum();
        let next = (s - num / den).clamp(lo, hi);
        let step = (next - s).abs();
        if step == 0.0 {
            break;
        }
        s = next;
        if !curve.point_into(s, &mut q) {
            break;
        }
        best = best.min(dist2(&q, p));
        if step <= 1e-10 * (hi - lo) {
            break;
        }
    }
    best
}

/// Distance between two sample indices along the curve, cyclic when closed.
fn index_gap(c: &SampleCloud, i: usize, j: usize) -> usize {
    let d = i.abs_diff(j);
    if c.closed() {
        d.min(c.len() - d)
    } else {
        d
    }
}

fn directed_curve(x: &SampleCloud, y: &SampleCloud, ycurve: &dyn Curve) -> f64 {
    let tree = KdTree::new(y);
    par_max_near(x, &tree, |p, near| {
        let mut best = polyline_dist2(near, y, p);
        let mut done: Vec<usize> = Vec::with_capacity(NEIGHBOURS);
        for &(j, _) in near {
            if j == usize::MAX || done.iter().any(|&k| index_gap(y, j, k) <= 1) {
                continue;
            }
            done.push(j);
            let (lo, hi) = y.param_bracket(j);
            best = best.min(refine_on(ycurve, p, lo, hi, y.param(j)));
        }
        best.sqrt()
    })
}

/// Hausdorff distance between two curves: each sample of one curve is
/// projected onto the other by refining the parameter near its closest
/// samples.
pub fn curve_hausdorff(a: &dyn Curve, b: &dyn Curve, n: usize) -> Result<f64> {
    let ca = super::cloud::sample(a, n)?;
    let cb = super::cloud::sample(b, n)?;
    check_dims(&ca, &cb)?;
    Ok(directed_curve(&ca, &cb, b).max(directed_curve(&cb, &ca, a)))
}
