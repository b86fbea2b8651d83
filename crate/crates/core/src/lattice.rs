//! Exact planar lattice geometry.
//!
//! Everything here works over `i64` coordinates. Areas are kept doubled so the
//! area of the standard triangle (1/2) stays an integer; mixed volumes and
//! areas are exposed as [`Rational64`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fan::WeightedFan;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("{op} needs a two-dimensional polygon, got dimension {dim}")]
    Degenerate { op: &'static str, dim: u8 },
    #[error("empty point set")]
    Empty,
    #[error("zero covector has no direction")]
    ZeroCovector,
}

/// A point of the integer lattice, usually an exponent vector.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }

    /// z-component of the cross product `self × other`.
    pub fn cross(self, other: LatticePoint) -> i64 {
        self.x * other.y - self.y * other.x
    }

    pub fn dot(self, other: LatticePoint) -> i64 {
        self.x * other.x + self.y * other.y
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl Add for LatticePoint {
    type Output = LatticePoint;
    fn add(self, rhs: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for LatticePoint {
    type Output = LatticePoint;
    fn sub(self, rhs: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> LatticePoint {
        LatticePoint::new(-self.x, -self.y)
    }
}

impl Mul<i64> for LatticePoint {
    type Output = LatticePoint;
    fn mul(self, k: i64) -> LatticePoint {
        LatticePoint::new(self.x * k, self.y * k)
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((x, y): (i64, i64)) -> Self {
        LatticePoint::new(x, y)
    }
}

/// Primitive integer linear functional `(x, y) ↦ u·x + v·y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Covector {
    u: i64,
    v: i64,
}

impl Covector {
    /// `(x,y) ↦ -y`
    pub const DOWN: Covector = Covector { u: 0, v: -1 };
    /// `(x,y) ↦ x + y`
    pub const NORTH_EAST: Covector = Covector { u: 1, v: 1 };
    /// `(x,y) ↦ -x`
    pub const LEFT: Covector = Covector { u: -1, v: 0 };
    pub const UP: Covector = Covector { u: 0, v: 1 };
    pub const SOUTH_WEST: Covector = Covector { u: -1, v: -1 };
    pub const RIGHT: Covector = Covector { u: 1, v: 0 };

    /// The three directions in which a nondegenerate line meets the boundary.
    pub const ARROWS: [Covector; 3] = [Covector::DOWN, Covector::NORTH_EAST, Covector::LEFT];
    /// Their negatives.
    pub const OPPOSITE_ARROWS: [Covector; 3] = [Covector::UP, Covector::SOUTH_WEST, Covector::RIGHT];

    /// Reduces `(u, v)` to primitive form.
    pub fn new(u: i64, v: i64) -> Result<Self, GeometryError> {
        if u == 0 && v == 0 {
            return Err(GeometryError::ZeroCovector);
        }
        let g = u.gcd(&v);
        Ok(Covector { u: u / g, v: v / g })
    }

    pub fn u(self) -> i64 {
        self.u
    }

    pub fn v(self) -> i64 {
        self.v
    }

    pub fn eval(self, p: LatticePoint) -> i64 {
        self.u * p.x + self.v * p.y
    }

    pub fn as_point(self) -> LatticePoint {
        LatticePoint::new(self.u, self.v)
    }

    /// One of the six arrow directions (or their negatives).
    pub fn is_arrow_axis(self) -> bool {
        Covector::ARROWS.contains(&self) || Covector::OPPOSITE_ARROWS.contains(&self)
    }

    /// Counterclockwise angular order starting at direction (1,0).
    pub fn angle_cmp(self, other: Covector) -> Ordering {
        angle_cmp_from_east(self.as_point(), other.as_point())
    }
}

impl Neg for Covector {
    type Output = Covector;
    fn neg(self) -> Covector {
        Covector { u: -self.u, v: -self.v }
    }
}

impl fmt::Display for Covector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.u, self.v)
    }
}

/// Angle order of nonzero vectors on `[0, 2π)` measured from the positive x axis.
pub(crate) fn angle_cmp_from_east(a: LatticePoint, b: LatticePoint) -> Ordering {
    let half = |p: LatticePoint| if p.y > 0 || (p.y == 0 && p.x > 0) { 0 } else { 1 };
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&a.cross(b)))
}

/// Angle order on `(-π/2, 3π/2]`: the order in which CCW edges leave the
/// lexicographically minimal vertex of a convex polygon.
fn angle_cmp_from_south(a: LatticePoint, b: LatticePoint) -> Ordering {
    let half = |p: LatticePoint| if p.x > 0 || (p.x == 0 && p.y > 0) { 0 } else { 1 };
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&a.cross(b)))
}

/// Vertex or edge of a polygon.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Face {
    Vertex(LatticePoint),
    Edge(LatticePoint, LatticePoint),
}

impl Face {
    /// Lattice length: number of lattice points on the face minus one.
    pub fn lattice_length(&self) -> u64 {
        match *self {
            Face::Vertex(_) => 0,
            Face::Edge(a, b) => {
                let d = b - a;
                d.x.gcd(&d.y) as u64
            }
        }
    }

    pub fn is_vertex(&self) -> bool {
        matches!(self, Face::Vertex(_))
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        match *self {
            Face::Vertex(a) => a == p,
            Face::Edge(a, b) => on_segment(a, b, p),
        }
    }
}

pub fn lattice_length(face: &Face) -> u64 {
    face.lattice_length()
}

fn on_segment(a: LatticePoint, b: LatticePoint, p: LatticePoint) -> bool {
    (b - a).cross(p - a) == 0 && (p - a).dot(p - b) <= 0
}

/// Finite nonempty set of lattice points (a Newton diagram).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeDiagram {
    points: Vec<LatticePoint>,
}

impl LatticeDiagram {
    pub fn new(points: impl IntoIterator<Item = LatticePoint>) -> Result<Self, GeometryError> {
        let mut points: Vec<LatticePoint> = points.into_iter().collect();
        points.sort();
        points.dedup();
        if points.is_empty() {
            return Err(GeometryError::Empty);
        }
        Ok(LatticeDiagram { points })
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn hull(&self) -> LatticePolygon {
        convex_hull(&self.points).expect("diagram is nonempty")
    }

    /// Support set of the diagram itself: the points maximizing `g`.
    pub fn support(&self, g: Covector) -> Vec<LatticePoint> {
        let best = self.points.iter().map(|&p| g.eval(p)).max().expect("nonempty");
        self.points.iter().copied().filter(|&p| g.eval(p) == best).collect()
    }
}

/// Anything that can be tested for containment point by point.
pub trait PointSet {
    /// Points whose membership implies membership of the whole set in a convex region.
    fn witness_points(&self) -> &[LatticePoint];
}

impl PointSet for LatticeDiagram {
    fn witness_points(&self) -> &[LatticePoint] {
        &self.points
    }
}

impl PointSet for LatticePolygon {
    fn witness_points(&self) -> &[LatticePoint] {
        &self.vertices
    }
}

impl PointSet for [LatticePoint] {
    fn witness_points(&self) -> &[LatticePoint] {
        self
    }
}

/// Convex lattice polygon stored as a strictly convex CCW vertex cycle that
/// starts at the lexicographically minimal vertex.
///
/// Points and segments are representable; [`LatticePolygon::dim`] tells them apart.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePolygon {
    vertices: Vec<LatticePoint>,
}

/// Andrew's monotone chain. Collinear boundary points are dropped.
pub fn convex_hull(points: &[LatticePoint]) -> Result<LatticePolygon, GeometryError> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    match pts.len() {
        0 => return Err(GeometryError::Empty),
        1 | 2 => return Ok(LatticePolygon { vertices: pts }),
        _ => {}
    }
    let mut hull: Vec<LatticePoint> = Vec::with_capacity(2 * pts.len());
    for &p in &pts {
        while hull.len() >= 2 && (hull[hull.len() - 1] - hull[hull.len() - 2]).cross(p - hull[hull.len() - 2]) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len
            && (hull[hull.len() - 1] - hull[hull.len() - 2]).cross(p - hull[hull.len() - 2]) <= 0
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    if hull.len() == 2 && hull[0] == hull[1] {
        hull.pop();
    }
    Ok(LatticePolygon { vertices: hull })
}

impl LatticePolygon {
    /// Convex hull of the given points.
    pub fn from_points(points: &[LatticePoint]) -> Result<Self, GeometryError> {
        convex_hull(points)
    }

    pub fn from_coords(coords: &[(i64, i64)]) -> Result<Self, GeometryError> {
        let pts: Vec<LatticePoint> = coords.iter().map(|&c| c.into()).collect();
        convex_hull(&pts)
    }

    /// `k` times the standard triangle.
    pub fn standard_triangle(k: i64) -> Self {
        LatticePolygon::from_coords(&[(0, 0), (k, 0), (0, k)]).expect("nonempty")
    }

    /// Axis-parallel rectangle `[0,c] × [0,d]`.
    pub fn rectangle(c: i64, d: i64) -> Self {
        LatticePolygon::from_coords(&[(0, 0), (c, 0), (c, d), (0, d)]).expect("nonempty")
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn dim(&self) -> u8 {
        match self.vertices.len() {
            1 => 0,
            2 => 1,
            _ => 2,
        }
    }

    pub(crate) fn require_full(&self, op: &'static str) -> Result<(), GeometryError> {
        if self.dim() < 2 {
            Err(GeometryError::Degenerate { op, dim: self.dim() })
        } else {
            Ok(())
        }
    }

    /// CCW edges as (start, end) pairs. A segment yields both orientations.
    pub fn edges(&self) -> impl Iterator<Item = (LatticePoint, LatticePoint)> + '_ {
        let n = self.vertices.len();
        let count = if n == 1 { 0 } else { n };
        (0..count).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn doubled_area(&self) -> i64 {
        let n = self.vertices.len();
        if n < 3 {
            return 0;
        }
        (0..n).map(|i| self.vertices[i].cross(self.vertices[(i + 1) % n])).sum()
    }

    pub fn area(&self) -> Rational64 {
        Rational64::new(self.doubled_area(), 2)
    }

    /// Sum of the lattice lengths of all edges.
    pub fn lattice_perimeter(&self) -> u64 {
        if self.dim() < 2 {
            return 0;
        }
        self.edges().map(|(a, b)| Face::Edge(a, b).lattice_length()).sum()
    }

    /// The vertex or edge on which `g` attains its maximum.
    pub fn support_set(&self, g: Covector) -> Face {
        let n = self.vertices.len();
        let values: Vec<i64> = self.vertices.iter().map(|&p| g.eval(p)).collect();
        let best = *values.iter().max().expect("nonempty polygon");
        let maximizers: Vec<usize> = (0..n).filter(|&i| values[i] == best).collect();
        match maximizers.as_slice() {
            [i] => Face::Vertex(self.vertices[*i]),
            [i, j] => {
                // CCW orientation: the edge runs from i to i+1 unless it wraps.
                if (i + 1) % n == *j {
                    Face::Edge(self.vertices[*i], self.vertices[*j])
                } else {
                    Face::Edge(self.vertices[*j], self.vertices[*i])
                }
            }
            _ => unreachable!("strictly convex polygon has at most two maximizers"),
        }
    }

    /// `len(P^g)`.
    pub fn face_length(&self, g: Covector) -> u64 {
        self.support_set(g).lattice_length()
    }

    /// Closed membership test.
    pub fn contains(&self, p: LatticePoint) -> bool {
        match self.vertices.as_slice() {
            [a] => *a == p,
            [a, b] => on_segment(*a, *b, p),
            vs => {
                let n = vs.len();
                (0..n).all(|i| (vs[(i + 1) % n] - vs[i]).cross(p - vs[i]) >= 0)
            }
        }
    }

    /// Strict interior membership (always false for degenerate polygons).
    pub fn contains_strictly(&self, p: LatticePoint) -> bool {
        let vs = &self.vertices;
        let n = vs.len();
        n >= 3 && (0..n).all(|i| (vs[(i + 1) % n] - vs[i]).cross(p - vs[i]) > 0)
    }

    /// `(min, max)` corners of the bounding box.
    pub fn bounding_box(&self) -> (LatticePoint, LatticePoint) {
        bbox(&self.vertices)
    }

    /// All lattice points of the closed polygon, sorted by `(x, y)`.
    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        let (lo, hi) = self.bounding_box();
        let mut out = Vec::new();
        for x in lo.x..=hi.x {
            for y in lo.y..=hi.y {
                let p = LatticePoint::new(x, y);
                if self.contains(p) {
                    out.push(p);
                }
            }
        }
        out
    }

    pub fn lattice_point_count(&self) -> usize {
        self.lattice_points().len()
    }

    pub fn translate(&self, t: LatticePoint) -> Self {
        LatticePolygon { vertices: self.vertices.iter().map(|&p| p + t).collect() }
    }

    /// Translate so that the lexicographically minimal vertex sits at the origin.
    pub fn canonical(&self) -> Self {
        self.translate(-self.vertices[0])
    }

    pub fn is_translate_of(&self, other: &LatticePolygon) -> bool {
        self.canonical() == other.canonical()
    }

    fn map_linear(&self, f: impl Fn(LatticePoint) -> LatticePoint) -> Self {
        let pts: Vec<LatticePoint> = self.vertices.iter().map(|&p| f(p)).collect();
        convex_hull(&pts).expect("nonempty")
    }

    /// Every vertex scaled by `k ≥ 1`.
    pub fn dilate(&self, k: i64) -> Self {
        assert!(k >= 1, "dilation factor must be positive");
        self.map_linear(|p| p * k)
    }

    /// Central reflection `-P`.
    pub fn negate(&self) -> Self {
        self.map_linear(|p| -p)
    }

    /// Image under the exponent map `(a, b) ↦ (b, -a-b)` induced by
    /// `x ↦ 1/y, y ↦ x/y`, canonically translated.
    pub fn rotate_r(&self) -> Self {
        self.map_linear(|p| LatticePoint::new(p.y, -p.x - p.y)).canonical()
    }

    /// `rotate_r` applied `k` times.
    pub fn rotate_r_pow(&self, k: u8) -> Self {
        (0..k).fold(self.clone(), |p, _| p.rotate_r())
    }

    /// Lattice points strictly inside, via Pick's check.
    pub fn interior_lattice_points(&self) -> Result<u64, GeometryError> {
        self.require_full("interior_lattice_points")?;
        let twice = self.doubled_area() - self.lattice_perimeter() as i64 + 2;
        Ok((twice / 2) as u64)
    }

    /// Normal fan weighted by edge lattice lengths.
    pub fn edge_fan(&self) -> Result<WeightedFan, GeometryError> {
        self.require_full("edge_fan")?;
        let rays = self.edges().map(|(a, b)| {
            let d = b - a;
            let len = d.x.gcd(&d.y);
            let normal = Covector::new(d.y, -d.x).expect("distinct vertices");
            (normal, len as u64)
        });
        Ok(WeightedFan::from_rays(rays))
    }
}

impl fmt::Display for LatticePolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub(crate) fn bbox(points: &[LatticePoint]) -> (LatticePoint, LatticePoint) {
    let lo = LatticePoint::new(
        points.iter().map(|p| p.x).min().expect("nonempty"),
        points.iter().map(|p| p.y).min().expect("nonempty"),
    );
    let hi = LatticePoint::new(
        points.iter().map(|p| p.x).max().expect("nonempty"),
        points.iter().map(|p| p.y).max().expect("nonempty"),
    );
    (lo, hi)
}

/// Minkowski sum by merging the two CCW edge sequences.
pub fn minkowski_sum(p: &LatticePolygon, q: &LatticePolygon) -> LatticePolygon {
    let mut edges: Vec<LatticePoint> = p
        .edges()
        .chain(q.edges())
        .map(|(a, b)| b - a)
        .collect();
    edges.sort_by(|a, b| angle_cmp_from_south(*a, *b));
    let mut walk = Vec::with_capacity(edges.len() + 1);
    let mut cur = p.vertices[0] + q.vertices[0];
    walk.push(cur);
    for e in edges {
        cur = cur + e;
        walk.push(cur);
    }
    debug_assert_eq!(cur, p.vertices[0] + q.vertices[0], "edge walk must close");
    convex_hull(&walk).expect("nonempty")
}

/// `vol(P+Q) - vol(P) - vol(Q)`.
pub fn mixed_volume(p: &LatticePolygon, q: &LatticePolygon) -> Rational64 {
    let s = minkowski_sum(p, q);
    Rational64::new(s.doubled_area() - p.doubled_area() - q.doubled_area(), 2)
}

/// Some translation `t` with `Q + t ⊆ P`, searched over the bounding-box difference.
pub fn contains_translate<Q: PointSet + ?Sized>(p: &LatticePolygon, q: &Q) -> Option<LatticePoint> {
    let pts = q.witness_points();
    if pts.is_empty() {
        return Some(LatticePoint::ORIGIN);
    }
    let (plo, phi) = p.bounding_box();
    let (qlo, qhi) = bbox(pts);
    for ty in (plo.y - qlo.y)..=(phi.y - qhi.y) {
        for tx in (plo.x - qlo.x)..=(phi.x - qhi.x) {
            let t = LatticePoint::new(tx, ty);
            if pts.iter().all(|&v| p.contains(v + t)) {
                return Some(t);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[(i64, i64)]) -> LatticePolygon {
        LatticePolygon::from_coords(c).unwrap()
    }

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    #[test]
    fn hull_examples() {
        let d = poly(&[(0, 0), (1, 0), (0, 1)]);
        assert_eq!(d.vertices().len(), 3);
        let t = poly(&[(0, 0), (2, 0), (1, 0), (0, 2), (1, 1)]);
        assert_eq!(t.vertices(), &[pt(0, 0), pt(2, 0), pt(0, 2)]);
        let p = poly(&[(5, 5)]);
        assert_eq!(p.dim(), 0);
        let s = poly(&[(0, 0), (1, 1), (2, 2), (2, 2)]);
        assert_eq!(s.dim(), 1);
        assert_eq!(s.vertices(), &[pt(0, 0), pt(2, 2)]);
        assert!(convex_hull(&[]).is_err());
    }

    #[test]
    fn support_set_examples() {
        let t5 = LatticePolygon::standard_triangle(5);
        assert_eq!(t5.support_set(Covector::DOWN), Face::Edge(pt(0, 0), pt(5, 0)));
        let rect = LatticePolygon::rectangle(3, 4);
        assert_eq!(rect.support_set(Covector::NORTH_EAST), Face::Vertex(pt(3, 4)));
        let tri = poly(&[(0, 0), (0, 1), (1, 1)]);
        // CCW orientation runs down the left edge
        assert_eq!(tri.support_set(Covector::LEFT), Face::Edge(pt(0, 1), pt(0, 0)));
        let seg = poly(&[(0, 0), (3, 0)]);
        assert_eq!(seg.support_set(Covector::DOWN).lattice_length(), 3);
    }

    #[test]
    fn lattice_length_examples() {
        assert_eq!(Face::Edge(pt(0, 0), pt(3, 6)).lattice_length(), 3);
        assert_eq!(Face::Vertex(pt(4, 4)).lattice_length(), 0);
        assert_eq!(Face::Edge(pt(0, 0), pt(0, 7)).lattice_length(), 7);
    }

    #[test]
    fn area_examples() {
        assert_eq!(LatticePolygon::standard_triangle(1).doubled_area(), 1);
        assert_eq!(LatticePolygon::standard_triangle(5).doubled_area(), 25);
        assert_eq!(LatticePolygon::rectangle(3, 4).doubled_area(), 24);
        assert_eq!(poly(&[(0, 0), (4, 4)]).doubled_area(), 0);
    }

    #[test]
    fn minkowski_examples() {
        let d = LatticePolygon::standard_triangle(1);
        assert_eq!(minkowski_sum(&d, &d), LatticePolygon::standard_triangle(2));
        assert_eq!(minkowski_sum(&d, &poly(&[(3, -2)])), d.translate(pt(3, -2)));
        // the bottom edges are parallel and merge, leaving a pentagon
        let q = poly(&[(0, 0), (0, -1), (-1, -1)]);
        let sum = minkowski_sum(&d, &q);
        let sums: Vec<LatticePoint> = d
            .vertices()
            .iter()
            .flat_map(|&a| q.vertices().iter().map(move |&b| a + b))
            .collect();
        assert_eq!(sum, convex_hull(&sums).unwrap());
        assert_eq!(sum.vertices().len(), 5);
        assert_eq!(sum.doubled_area(), 6);
    }

    #[test]
    fn mixed_volume_examples() {
        let d = LatticePolygon::standard_triangle(1);
        assert_eq!(mixed_volume(&d, &d), Rational64::from_integer(1));
        assert_eq!(mixed_volume(&d, &d.dilate(3)), Rational64::from_integer(3));
        let h = poly(&[(0, 0), (1, 0)]);
        let v = poly(&[(0, 0), (0, 1)]);
        assert_eq!(mixed_volume(&h, &v), Rational64::from_integer(1));
    }

    #[test]
    fn dilate_negate_examples() {
        let d = LatticePolygon::standard_triangle(1);
        assert_eq!(d.dilate(5), LatticePolygon::standard_triangle(5));
        assert_eq!(d.dilate(1), d);
        assert_eq!(d.dilate(3).doubled_area(), 9);
        assert_eq!(d.negate(), poly(&[(0, 0), (-1, 0), (0, -1)]));
        assert_eq!(poly(&[(2, 3)]).negate(), poly(&[(-2, -3)]));
        let r = LatticePolygon::rectangle(3, 4);
        assert_eq!(r.negate().negate(), r);
    }

    #[test]
    fn rotate_r_examples() {
        let d = LatticePolygon::standard_triangle(1);
        assert_eq!(d.rotate_r(), d);
        let r = LatticePolygon::rectangle(3, 4);
        let rr = r.rotate_r();
        // (0,0),(3,0),(3,4),(0,4) ↦ (0,0),(0,-3),(4,-7),(4,-4), then lexmin vertex to the origin
        assert_eq!(rr, poly(&[(0, 3), (0, 0), (4, -4), (4, -1)]));
        assert_eq!(rr.doubled_area(), 24);
        assert!(r.rotate_r_pow(3).is_translate_of(&r));
    }

    #[test]
    fn contains_translate_examples() {
        let t5 = LatticePolygon::standard_triangle(5);
        assert_eq!(contains_translate(&t5, &t5), Some(LatticePoint::ORIGIN));
        assert_eq!(contains_translate(&LatticePolygon::rectangle(3, 4), &t5), None);
        assert!(contains_translate(&LatticePolygon::standard_triangle(6), &t5).is_some());
    }

    #[test]
    fn interior_points_examples() {
        assert_eq!(LatticePolygon::standard_triangle(4).interior_lattice_points(), Ok(3));
        assert_eq!(LatticePolygon::standard_triangle(1).interior_lattice_points(), Ok(0));
        assert_eq!(LatticePolygon::rectangle(3, 4).interior_lattice_points(), Ok(6));
        assert!(poly(&[(0, 0), (2, 0)]).interior_lattice_points().is_err());
    }

    #[test]
    fn edge_fan_examples() {
        let d = LatticePolygon::standard_triangle(1);
        let fan = d.edge_fan().unwrap();
        assert_eq!(fan.weight(Covector::DOWN), 1);
        assert_eq!(fan.weight(Covector::NORTH_EAST), 1);
        assert_eq!(fan.weight(Covector::LEFT), 1);
        assert_eq!(fan.len(), 3);
        let fan7 = LatticePolygon::standard_triangle(7).edge_fan().unwrap();
        assert!(fan7.rays().iter().all(|&(_, w)| w == 7));
        let tri = poly(&[(0, 0), (0, 1), (1, 1)]);
        let f = tri.edge_fan().unwrap();
        assert_eq!(f.weight(Covector::UP), 1);
        assert_eq!(f.weight(Covector::LEFT), 1);
        assert_eq!(f.weight(Covector::new(1, -1).unwrap()), 1);
        assert_eq!(f.len(), 3);
    }

    #[test]
    fn covector_normalizes() {
        let c = Covector::new(4, -6).unwrap();
        assert_eq!((c.u(), c.v()), (2, -3));
        assert_eq!(Covector::new(0, -5).unwrap(), Covector::DOWN);
        assert!(Covector::new(0, 0).is_err());
    }
}
