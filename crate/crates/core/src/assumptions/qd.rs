//! Diagrams of class `Q_d`: `d` lattice points that fit in `(d-1)Δ` and carry
//! no curve containing a nondegenerate line.
//!
//! Membership is certified by the combinatorial criterion: no subset `R` has
//! the standard triangle as a Minkowski summand of `conv R`.

use crate::lattice::{Covector, LatticeDiagram, LatticePoint, LatticePolygon};

/// Default number of partial subsets the backtracking search may visit.
pub const DEFAULT_QD_BUDGET: u64 = 200_000;

/// Whether `Δ` is a Minkowski summand of `conv(points)`.
///
/// In the plane this happens exactly when the hull is two-dimensional and its
/// support sets in the directions ↓, ↗, ← are all edges.
pub fn has_delta_summand(points: &[LatticePoint]) -> bool {
    if points.len() < 3 || collinear(points) {
        return false;
    }
    [Covector::DOWN, Covector::NORTH_EAST, Covector::LEFT]
        .iter()
        .all(|&g| maximizer_count(points, g) >= 2)
}

fn maximizer_count(points: &[LatticePoint], g: Covector) -> usize {
    let best = points.iter().map(|&p| g.eval(p)).max().unwrap_or(0);
    let mut seen: Vec<LatticePoint> = points.iter().copied().filter(|&p| g.eval(p) == best).collect();
    seen.sort();
    seen.dedup();
    seen.len()
}

fn collinear(points: &[LatticePoint]) -> bool {
    let a = points[0];
    match points.iter().find(|&&p| p != a) {
        None => true,
        Some(&b) => points.iter().all(|&p| (b - a).cross(p - a) == 0),
    }
}

/// `max(x+y) - min x - min y`: the smallest `k` with a translate inside `kΔ`.
fn triangle_span(points: &[LatticePoint]) -> i64 {
    let max_sum = points.iter().map(|p| p.x + p.y).max().unwrap_or(0);
    let min_x = points.iter().map(|p| p.x).min().unwrap_or(0);
    let min_y = points.iter().map(|p| p.y).min().unwrap_or(0);
    max_sum - min_x - min_y
}

/// Sufficient test for class `Q_d` (`d ≥ 3`).
pub fn is_class_qd(q: &LatticeDiagram, d: usize) -> bool {
    assert!(d >= 3, "class Q_d is only used for d >= 3");
    let pts = q.points();
    if pts.len() != d || triangle_span(pts) > d as i64 - 1 {
        return false;
    }
    let n = pts.len();
    let mut subset = Vec::with_capacity(n);
    for mask in 0u32..(1 << n) {
        if mask.count_ones() < 3 {
            continue;
        }
        subset.clear();
        subset.extend((0..n).filter(|i| mask >> i & 1 == 1).map(|i| pts[i]));
        if has_delta_summand(&subset) {
            return false;
        }
    }
    true
}

/// Outcome of a subdiagram search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QdSearch {
    Found(LatticeDiagram),
    Absent,
    /// The backtracking search ran out of budget; absence is not established.
    BudgetExhausted,
}

impl QdSearch {
    pub fn diagram(&self) -> Option<&LatticeDiagram> {
        match self {
            QdSearch::Found(q) => Some(q),
            _ => None,
        }
    }
}

/// `Q^γ ⊆ P^γ`: the `γ`-maximal points of `Q` reach the maximum over `P`.
fn respects_face(q: &[LatticePoint], p: &LatticePolygon, g: Covector) -> bool {
    let p_max = p.vertices().iter().map(|&v| g.eval(v)).max().expect("nonempty");
    q.iter().map(|&v| g.eval(v)).max() == Some(p_max)
}

const LINE_STEPS: [LatticePoint; 3] = [
    LatticePoint::new(1, 0),
    LatticePoint::new(0, 1),
    LatticePoint::new(1, -1),
];

fn candidate_segments(lattice: &[LatticePoint], p: &LatticePolygon, d: usize) -> Vec<Vec<LatticePoint>> {
    let mut out = Vec::new();
    for &step in &LINE_STEPS {
        for &start in lattice {
            let pts: Vec<LatticePoint> = (0..d as i64).map(|i| start + step * i).collect();
            if pts.iter().all(|&q| p.contains(q)) {
                out.push(pts);
            }
        }
    }
    out
}

/// Staircases alternating two of the line directions, and L-shapes that run
/// along one direction and turn once.
fn candidate_staircases(lattice: &[LatticePoint], p: &LatticePolygon, d: usize) -> Vec<Vec<LatticePoint>> {
    let steps = [
        LatticePoint::new(1, 0),
        LatticePoint::new(0, 1),
        LatticePoint::new(-1, 0),
        LatticePoint::new(0, -1),
        LatticePoint::new(1, -1),
        LatticePoint::new(-1, 1),
    ];
    let mut patterns: Vec<Vec<LatticePoint>> = Vec::new();
    for &a in &steps {
        for &b in &steps {
            if a == b || a == -b {
                continue;
            }
            patterns.push((0..d - 1).map(|i| if i % 2 == 0 { a } else { b }).collect());
            for turn in 1..d - 1 {
                patterns.push((0..d - 1).map(|i| if i < turn { a } else { b }).collect());
            }
        }
    }
    let mut out = Vec::new();
    for pattern in &patterns {
        for &start in lattice {
            let mut pts = vec![start];
            let mut cur = start;
            for &s in pattern {
                cur = cur + s;
                pts.push(cur);
            }
            if pts.iter().all(|&q| p.contains(q)) {
                out.push(pts);
            }
        }
    }
    out
}

/// A `d`-point subdiagram of `P ∩ ℤ²` of class `Q_d`, optionally with
/// `Q^γ ⊆ P^γ`.
///
/// Segments and staircases are tried first; then a deterministic backtracking
/// search over the lattice points of `P` that visits at most `budget` partial
/// subsets.
pub fn find_qd_subdiagram(p: &LatticePolygon, d: usize, face: Option<Covector>, budget: u64) -> QdSearch {
    assert!((3..=8).contains(&d), "subdiagram search supports 3 <= d <= 8");
    let lattice = p.lattice_points();
    if lattice.len() < d {
        return QdSearch::Absent;
    }
    let accept = |pts: &[LatticePoint]| -> Option<LatticeDiagram> {
        let q = LatticeDiagram::new(pts.iter().copied()).ok()?;
        let face_ok = face.is_none_or(|g| respects_face(q.points(), p, g));
        (face_ok && is_class_qd(&q, d)).then_some(q)
    };
    for cand in candidate_segments(&lattice, p, d)
        .into_iter()
        .chain(candidate_staircases(&lattice, p, d))
    {
        if let Some(q) = accept(&cand) {
            return QdSearch::Found(q);
        }
    }

    let mut search = Backtrack {
        lattice: &lattice,
        d,
        budget,
        visited: 0,
        chosen: Vec::with_capacity(d),
        exhausted: false,
        accept: &accept,
    };
    match search.run(0) {
        Some(q) => QdSearch::Found(q),
        None if search.exhausted => QdSearch::BudgetExhausted,
        None => QdSearch::Absent,
    }
}

struct Backtrack<'a, F: Fn(&[LatticePoint]) -> Option<LatticeDiagram>> {
    lattice: &'a [LatticePoint],
    d: usize,
    budget: u64,
    visited: u64,
    chosen: Vec<LatticePoint>,
    exhausted: bool,
    accept: &'a F,
}

impl<F: Fn(&[LatticePoint]) -> Option<LatticeDiagram>> Backtrack<'_, F> {
    fn run(&mut self, from: usize) -> Option<LatticeDiagram> {
        if self.chosen.len() == self.d {
            return (self.accept)(&self.chosen);
        }
        let need = self.d - self.chosen.len();
        for i in from..self.lattice.len() {
            if self.lattice.len() - i < need {
                break;
            }
            if self.visited >= self.budget {
                self.exhausted = true;
                return None;
            }
            self.visited += 1;
            let p = self.lattice[i];
            self.chosen.push(p);
            if triangle_span(&self.chosen) < self.d as i64 && !new_point_creates_summand(&self.chosen) {
                if let Some(q) = self.run(i + 1) {
                    return Some(q);
                }
                if self.exhausted {
                    return None;
                }
            }
            self.chosen.pop();
        }
        None
    }
}

/// The class condition is hereditary, so only subsets containing the newest
/// point need checking.
fn new_point_creates_summand(chosen: &[LatticePoint]) -> bool {
    let (last, rest) = chosen.split_last().expect("nonempty");
    let n = rest.len();
    let mut subset = Vec::with_capacity(chosen.len());
    for mask in 0u32..(1 << n) {
        if mask.count_ones() < 2 {
            continue;
        }
        subset.clear();
        subset.extend((0..n).filter(|i| mask >> i & 1 == 1).map(|i| rest[i]));
        subset.push(*last);
        if has_delta_summand(&subset) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagram(c: &[(i64, i64)]) -> LatticeDiagram {
        LatticeDiagram::new(c.iter().map(|&p| p.into())).unwrap()
    }

    #[test]
    fn segments_are_qd() {
        for d in 3..8 {
            let q = diagram(&(0..d as i64).map(|i| (i, 0)).collect::<Vec<_>>());
            assert!(is_class_qd(&q, d));
            let q = diagram(&(0..d as i64).map(|i| (i, -i)).collect::<Vec<_>>());
            assert!(is_class_qd(&q, d));
        }
    }

    #[test]
    fn figure_diagrams_are_q6() {
        let figs: [&[(i64, i64)]; 4] = [
            &[(0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (5, 0)],
            &[(0, 4), (1, 3), (2, 2), (2, 1), (2, 0), (3, 2)],
            &[(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (3, 2)],
            &[(0, 0), (1, 0), (2, 0), (0, 3), (0, 4), (0, 5)],
        ];
        for f in figs {
            assert!(is_class_qd(&diagram(f), 6), "{f:?}");
        }
    }

    #[test]
    fn full_two_delta_is_not_q6() {
        let q = diagram(&[(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]);
        assert!(!is_class_qd(&q, 6));
    }

    #[test]
    fn wrong_size_or_too_wide() {
        assert!(!is_class_qd(&diagram(&[(0, 0), (1, 0), (2, 0)]), 4));
        // 4 points spread over a 4-wide box do not fit in 3Δ
        assert!(!is_class_qd(&diagram(&[(0, 0), (4, 0), (0, 1), (1, 1)]), 4));
    }

    #[test]
    fn search_examples() {
        let t5 = LatticePolygon::standard_triangle(5);
        let q = find_qd_subdiagram(&t5, 6, None, DEFAULT_QD_BUDGET);
        let expected = diagram(&[(0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (5, 0)]);
        assert_eq!(q, QdSearch::Found(expected));

        let rect = LatticePolygon::rectangle(3, 4);
        let q = find_qd_subdiagram(&rect, 6, None, DEFAULT_QD_BUDGET);
        let found = q.diagram().expect("rectangle carries a Q6 staircase");
        assert!(is_class_qd(found, 6));
        assert!(found.points().iter().all(|&p| rect.contains(p)));

        let delta = LatticePolygon::standard_triangle(1);
        assert_eq!(find_qd_subdiagram(&delta, 4, None, DEFAULT_QD_BUDGET), QdSearch::Absent);
    }

    #[test]
    fn face_constraint_is_honoured() {
        let rect = LatticePolygon::rectangle(3, 4);
        let q = find_qd_subdiagram(&rect, 4, Some(Covector::DOWN), DEFAULT_QD_BUDGET);
        let q = q.diagram().unwrap();
        assert!(q.points().iter().any(|p| p.y == 0));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        // 2Δ ∪ more rows has no Q6 staircase found by heuristics; a tiny budget stops the search
        let p = LatticePolygon::from_coords(&[(0, 0), (2, 0), (2, 2), (0, 2)]).unwrap();
        assert_eq!(find_qd_subdiagram(&p, 6, None, 3), QdSearch::BudgetExhausted);
    }
}
