#![allow(dead_code)]

use std::collections::HashSet;

use plucker::lattice::{convex_hull, minkowski_sum, LatticePoint, LatticePolygon};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn pt(x: i64, y: i64) -> LatticePoint {
    LatticePoint::new(x, y)
}

/// Hull of 3 to 8 random points of `[0, side]²`, redrawn until two-dimensional.
pub fn random_polygon(rng: &mut impl Rng, side: i64) -> LatticePolygon {
    loop {
        let n = rng.random_range(3..=8);
        let pts: Vec<LatticePoint> =
            (0..n).map(|_| pt(rng.random_range(0..=side), rng.random_range(0..=side))).collect();
        let p = convex_hull(&pts).expect("nonempty");
        if p.dim() == 2 {
            return p;
        }
    }
}

/// `5Δ` at a random offset together with a few random points around it.
pub fn random_superset_of_five_delta(rng: &mut impl Rng) -> LatticePolygon {
    let o = pt(rng.random_range(-2..=2), rng.random_range(-2..=2));
    let mut pts: Vec<LatticePoint> = [(0, 0), (5, 0), (0, 5)].iter().map(|&(x, y)| o + pt(x, y)).collect();
    for _ in 0..rng.random_range(0..=4) {
        pts.push(pt(rng.random_range(-4..=9), rng.random_range(-4..=9)));
    }
    convex_hull(&pts).expect("nonempty")
}

/// `Δ` is a Minkowski summand of `conv(points)`: the lattice points `m` with
/// `m + Δ ⊆ conv(points)` span a polygon `M`, and `M + Δ` must give back the
/// hull. Any lattice summand `M'` satisfies `M' ⊆ M`, so this decides it.
pub fn brute_delta_summand(points: &[LatticePoint]) -> bool {
    let hull = convex_hull(points).expect("nonempty");
    if hull.dim() < 2 {
        return false;
    }
    let (lo, hi) = hull.bounding_box();
    let mut m = Vec::new();
    for x in lo.x..=hi.x {
        for y in lo.y..=hi.y {
            let p = pt(x, y);
            if [p, p + pt(1, 0), p + pt(0, 1)].iter().all(|&q| hull.contains(q)) {
                m.push(p);
            }
        }
    }
    if m.is_empty() {
        return false;
    }
    let summand = convex_hull(&m).expect("nonempty");
    sorted_vertices(&minkowski_sum(&summand, &LatticePolygon::standard_triangle(1))) == sorted_vertices(&hull)
}

pub fn sorted_vertices(p: &LatticePolygon) -> Vec<LatticePoint> {
    let mut v = p.vertices().to_vec();
    v.sort();
    v
}

/// Canonical forms of every `r^j` image of `conv{(1,0),(2,0),(1-k,1+2k)}` for
/// `k ≤ max_k`, built from the rotation orbit rather than any shape test.
pub fn thin_orbit(max_k: i64) -> HashSet<LatticePolygon> {
    let mut out = HashSet::new();
    for k in 0..=max_k {
        let t = LatticePolygon::from_coords(&[(1, 0), (2, 0), (1 - k, 1 + 2 * k)]).unwrap();
        let mut q = t.canonical();
        for _ in 0..3 {
            out.insert(q.canonical());
            q = q.rotate_r();
        }
    }
    out
}

/// Lattice points of `kΔ` in `(x, y)` order.
pub fn triangle_points(k: i64) -> Vec<LatticePoint> {
    LatticePolygon::standard_triangle(k).lattice_points()
}
