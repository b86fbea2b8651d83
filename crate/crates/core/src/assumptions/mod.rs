//! Tri-state decision of the three genericity assumptions under which the
//! inflection and bitangent formulas count actual torus points.
//!
//! Assumptions 1 and 3 are decided only through sufficient conditions, so a
//! condition that does not fire gives [`Verdict::Unknown`]. Assumption 2 has an
//! exact classification by thin triangles and is never `Unknown`.

mod qd;

use std::collections::BTreeSet;
use std::fmt;

pub use qd::{find_qd_subdiagram, has_delta_summand, is_class_qd, QdSearch, DEFAULT_QD_BUDGET};

use crate::lattice::{contains_translate, Covector, LatticePoint, LatticePolygon};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Verified,
    Unknown,
    FailsKnown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Verified => "Verified",
            Verdict::Unknown => "Unknown",
            Verdict::FailsKnown => "FailsKnown",
        })
    }
}

/// `r^rotation_power(P) - translation = conv{(1,0),(2,0),(1-k,1+2k)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThinTriangleWitness {
    pub k: u64,
    pub translation: LatticePoint,
    pub rotation_power: u8,
}

/// The thin triangle `conv{(1,0),(2,0),(1-k,1+2k)}`.
pub fn thin_triangle(k: u64) -> LatticePolygon {
    let k = k as i64;
    LatticePolygon::from_coords(&[(1, 0), (2, 0), (1 - k, 1 + 2 * k)]).expect("triangle")
}

/// One line of the evidence trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evidence {
    /// Name of the sufficient condition that was tested.
    pub check: &'static str,
    /// Power of the rotation `r` the condition was applied through.
    pub rotation: u8,
    pub held: bool,
    pub detail: String,
}

impl Evidence {
    fn new(check: &'static str, rotation: u8, held: bool, detail: impl Into<String>) -> Self {
        Evidence { check, rotation, held, detail: detail.into() }
    }
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.held { "held" } else { "failed" };
        write!(f, "{} [r^{}] {}: {}", self.check, self.rotation, mark, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssumptionReport {
    pub a1: Verdict,
    pub a2: Verdict,
    pub a3: Verdict,
    pub thin_witness: Option<ThinTriangleWitness>,
    pub evidence: Vec<Evidence>,
}

impl AssumptionReport {
    pub fn all_verified(&self) -> bool {
        [self.a1, self.a2, self.a3].iter().all(|&v| v == Verdict::Verified)
    }
}

/// Knobs for the assumption battery.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckerConfig {
    /// Cap on partial subsets visited by each `Q_d` backtracking search.
    pub qd_budget: u64,
    /// Short-circuit to all-verified when `P` contains a translate of `5Δ`.
    pub five_delta_fast_path: bool,
}

impl Default for CheckerConfig {
    fn default() -> Self {
        CheckerConfig { qd_budget: DEFAULT_QD_BUDGET, five_delta_fast_path: true }
    }
}

pub fn is_thin(p: &LatticePolygon) -> Option<ThinTriangleWitness> {
    if p.vertices().len() != 3 {
        return None;
    }
    let crate::lattice::Face::Edge(a, b) = p.support_set(Covector::DOWN) else {
        return None;
    };
    if b - a != LatticePoint::new(1, 0) {
        return None;
    }
    let apex = *p.vertices().iter().find(|&&v| v != a && v != b)?;
    let h = apex.y - a.y;
    if h < 1 || h % 2 == 0 {
        return None;
    }
    let k = (h - 1) / 2;
    (apex.x - a.x == -k).then(|| ThinTriangleWitness {
        k: k as u64,
        translation: a - LatticePoint::new(1, 0),
        rotation_power: 0,
    })
}

pub fn assumption2_holds(p: &LatticePolygon) -> (Verdict, Option<ThinTriangleWitness>) {
    for power in 0..3u8 {
        if let Some(w) = is_thin(&p.rotate_r_pow(power)) {
            return (Verdict::FailsKnown, Some(ThinTriangleWitness { rotation_power: power, ..w }));
        }
    }
    (Verdict::Verified, None)
}

fn render_points(pts: &[LatticePoint]) -> String {
    let inner: Vec<String> = pts.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn qd_evidence(check: &'static str, d: usize, outcome: &QdSearch, label: &str) -> Evidence {
    match outcome {
        QdSearch::Found(q) => Evidence::new(check, 0, true, format!("{label} {}", render_points(q.points()))),
        QdSearch::Absent => Evidence::new(check, 0, false, format!("no Q{d} subdiagram")),
        QdSearch::BudgetExhausted => Evidence::new(check, 0, false, format!("budget exhausted searching Q{d}")),
    }
}

/// Unimodular parallelogram `R` with `5R` inside `P`, spanned by `(u, v)`.
pub fn find_five_parallelogram(p: &LatticePolygon) -> Option<(LatticePoint, LatticePoint)> {
    if p.doubled_area() < 50 {
        return None;
    }
    let (lo, hi) = p.bounding_box();
    let diam = (hi.x - lo.x).max(hi.y - lo.y);
    let bound = (diam + 4) / 5;
    let positive = |w: LatticePoint| w.x > 0 || (w.x == 0 && w.y > 0);
    let mut spans = Vec::new();
    for x in -bound..=bound {
        for y in -bound..=bound {
            let w = LatticePoint::new(x, y);
            if positive(w) {
                spans.push(w);
            }
        }
    }
    for (i, &u) in spans.iter().enumerate() {
        for &v in &spans[i + 1..] {
            if u.cross(v).abs() != 1 {
                continue;
            }
            let corners = [LatticePoint::ORIGIN, u * 5, v * 5, (u + v) * 5];
            let big = LatticePolygon::from_points(&corners).expect("nonempty");
            if contains_translate(p, &big).is_some() {
                return Some((u, v));
            }
        }
    }
    None
}

/// Lattice-point ordinates of `P`.
fn ordinates(p: &LatticePolygon) -> BTreeSet<i64> {
    p.lattice_points().iter().map(|q| q.y).collect()
}

fn bottom_condition(p: &LatticePolygon, power: u8, budget: u64) -> Evidence {
    const NAME: &str = "no-bitangents-bottom-face";
    if p.support_set(Covector::DOWN).is_vertex() {
        return Evidence::new(NAME, power, true, "bottom face is a vertex");
    }
    let y0 = p.bounding_box().0.y;
    let mut rows: std::collections::BTreeMap<i64, usize> = Default::default();
    for q in p.lattice_points() {
        *rows.entry(q.y).or_default() += 1;
    }
    if let Some((y, _)) = rows.iter().find(|&(&y, &n)| n >= 2 && y >= y0 + 2) {
        return Evidence::new(NAME, power, true, format!("two lattice points at height {} above the bottom", y - y0));
    }
    match find_qd_subdiagram(p, 4, Some(Covector::DOWN), budget) {
        QdSearch::Found(q) => Evidence::new(
            NAME,
            power,
            true,
            format!("Q4 touching the bottom face {}", render_points(q.points())),
        ),
        QdSearch::Absent => Evidence::new(NAME, power, false, "no condition applies"),
        QdSearch::BudgetExhausted => Evidence::new(NAME, power, false, "budget exhausted searching Q4 on the bottom face"),
    }
}

pub fn check_assumption1(p: &LatticePolygon) -> (Verdict, Vec<Evidence>) {
    check_assumption1_with(p, &CheckerConfig::default())
}

pub fn check_assumption1_with(p: &LatticePolygon, cfg: &CheckerConfig) -> (Verdict, Vec<Evidence>) {
    let budget = cfg.qd_budget;
    let mut ev = Vec::new();

    let q6 = find_qd_subdiagram(p, 6, None, budget);
    if q6.diagram().is_some() {
        ev.push(qd_evidence("no-tritangents", 6, &q6, "Q6-generalized"));
    } else if let Some((u, v)) = find_five_parallelogram(p) {
        ev.push(Evidence::new("no-tritangents-parallelogram", 0, true, format!("5R with R spanned by {u}, {v}")));
    } else {
        let mut e = qd_evidence("no-tritangents", 6, &q6, "Q6-generalized");
        e.detail.push_str("; no 5R for a unimodular parallelogram R");
        ev.push(e);
    }

    let q5 = find_qd_subdiagram(p, 5, None, budget);
    ev.push(qd_evidence("no-bitangents", 5, &q5, "Q5"));
    let q4 = find_qd_subdiagram(p, 4, None, budget);
    ev.push(qd_evidence("no-inflections", 4, &q4, "Q4"));

    let is_delta = p.is_translate_of(&LatticePolygon::standard_triangle(1));
    for power in 0..3u8 {
        let rp = p.rotate_r_pow(power);
        ev.push(bottom_condition(&rp, power, budget));
        let ok = rp.dim() == 2 && !is_delta;
        let detail = if ok { "not in a segment and not Δ" } else { "polygon is a segment or Δ" };
        ev.push(Evidence::new("no-bitangents-pair-of-faces", power, ok, detail));
        let thin = is_thin(&rp);
        let detail = match thin {
            None => "not a thin triangle".to_string(),
            Some(w) => format!("thin triangle with k = {}", w.k),
        };
        ev.push(Evidence::new("no-inflections-at-infinity", power, thin.is_none(), detail));
    }

    let verdict = if ev.iter().all(|e| e.held) { Verdict::Verified } else { Verdict::Unknown };
    (verdict, ev)
}

pub fn check_assumption3(p: &LatticePolygon) -> (Verdict, Vec<Evidence>) {
    let mut ev = Vec::new();
    for power in 0..3u8 {
        let rp = p.rotate_r_pow(power);
        let pi = ordinates(&rp);
        let consecutive = pi.iter().any(|&a| (1..4).all(|i| pi.contains(&(a + i))));
        let (lo, hi) = rp.bounding_box();
        let span = hi.y - lo.y;
        if consecutive {
            ev.push(Evidence::new("no-vertical-bitangents", power, true, "four consecutive ordinates"));
        } else if span <= 3 {
            ev.push(Evidence::new("no-vertical-bitangents-degree", power, true, format!("y-degree {span}")));
        } else {
            ev.push(Evidence::new("no-vertical-bitangents", power, false, "no four consecutive ordinates"));
        }
        let wide = pi.len() >= 3;
        ev.push(Evidence::new("no-vertical-flex-tangents", power, wide, format!("{} distinct ordinates", pi.len())));
        let top_vertex = rp.support_set(Covector::UP).is_vertex();
        let detail = if wide {
            "at least three ordinates"
        } else if top_vertex {
            "top face is a vertex"
        } else {
            "fewer than three ordinates and top face is an edge"
        };
        ev.push(Evidence::new("no-vertical-asymptote-tangents", power, wide || top_vertex, detail));
    }
    let verdict = if ev.iter().all(|e| e.held) { Verdict::Verified } else { Verdict::Unknown };
    (verdict, ev)
}

pub fn full_assumption_report(p: &LatticePolygon) -> AssumptionReport {
    full_assumption_report_with(p, &CheckerConfig::default())
}

pub fn full_assumption_report_with(p: &LatticePolygon, cfg: &CheckerConfig) -> AssumptionReport {
    let (a2, thin_witness) = assumption2_holds(p);
    let thin_ev = match thin_witness {
        Some(w) => Evidence::new(
            "thin-triangle-classification",
            w.rotation_power,
            false,
            format!("thin triangle with k = {}", w.k),
        ),
        None => Evidence::new("thin-triangle-classification", 0, true, "no rotation is a thin triangle"),
    };

    if cfg.five_delta_fast_path {
        if let Some(t) = contains_translate(p, &LatticePolygon::standard_triangle(5)) {
            return AssumptionReport {
                a1: Verdict::Verified,
                a2: Verdict::Verified,
                a3: Verdict::Verified,
                thin_witness: None,
                evidence: vec![Evidence::new("5Δ", 0, true, format!("contains 5Δ translated by {t}")), thin_ev],
            };
        }
    }

    let (a1, mut evidence) = check_assumption1_with(p, cfg);
    let (a3, ev3) = check_assumption3(p);
    evidence.push(thin_ev);
    evidence.extend(ev3);
    AssumptionReport { a1, a2, a3, thin_witness, evidence }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[(i64, i64)]) -> LatticePolygon {
        LatticePolygon::from_coords(c).unwrap()
    }

    #[test]
    fn thin_examples() {
        let cubic = poly(&[(0, 3), (1, 0), (2, 0)]);
        let w = is_thin(&cubic).unwrap();
        assert_eq!(w.k, 1);
        assert_eq!(thin_triangle(1).translate(w.translation), cubic);

        let w = is_thin(&LatticePolygon::standard_triangle(1)).unwrap();
        assert_eq!(w.k, 0);
        assert_eq!(w.translation, LatticePoint::new(-1, 0));

        assert!(is_thin(&LatticePolygon::rectangle(3, 4)).is_none());
    }

    #[test]
    fn assumption2_examples() {
        assert_eq!(assumption2_holds(&poly(&[(0, 3), (1, 0), (2, 0)])).0, Verdict::FailsKnown);
        assert_eq!(assumption2_holds(&LatticePolygon::standard_triangle(5)), (Verdict::Verified, None));
        assert_eq!(assumption2_holds(&LatticePolygon::rectangle(3, 4)), (Verdict::Verified, None));
    }

    #[test]
    fn rotated_thin_witness_is_consistent() {
        let p = thin_triangle(2).rotate_r().rotate_r().translate(LatticePoint::new(4, -1));
        let (v, w) = assumption2_holds(&p);
        assert_eq!(v, Verdict::FailsKnown);
        let w = w.unwrap();
        assert_eq!(p.rotate_r_pow(w.rotation_power), thin_triangle(w.k).translate(w.translation));
    }

    #[test]
    fn assumption1_examples() {
        assert_eq!(check_assumption1(&LatticePolygon::standard_triangle(5)).0, Verdict::Verified);
        let (v, ev) = check_assumption1(&LatticePolygon::rectangle(3, 4));
        assert_eq!(v, Verdict::Verified, "{ev:#?}");
        let (v, ev) = check_assumption1(&LatticePolygon::standard_triangle(1));
        assert_eq!(v, Verdict::Unknown);
        let q4 = ev.iter().find(|e| e.check == "no-inflections").unwrap();
        assert!(!q4.held);
    }

    #[test]
    fn assumption3_examples() {
        assert_eq!(check_assumption3(&LatticePolygon::standard_triangle(5)).0, Verdict::Verified);
        assert_eq!(check_assumption3(&LatticePolygon::rectangle(3, 4)).0, Verdict::Verified);
        // ordinates {0,1,3}: no four consecutive, but the y-degree is 3
        let (_, ev) = check_assumption3(&thin_triangle(1));
        assert!(ev.iter().any(|e| e.check == "no-vertical-bitangents-degree" && e.rotation == 0 && e.held));
        assert_eq!(check_assumption3(&LatticePolygon::rectangle(9, 1)).0, Verdict::Unknown);
    }

    #[test]
    fn full_report_examples() {
        let r = full_assumption_report(&LatticePolygon::standard_triangle(7));
        assert!(r.all_verified());
        assert!(r.evidence.iter().any(|e| e.check == "5Δ"));

        let r = full_assumption_report(&LatticePolygon::rectangle(3, 4));
        assert!(r.all_verified(), "{:#?}", r.evidence);
        assert!(r.evidence.iter().all(|e| e.check != "5Δ"));

        let r = full_assumption_report(&poly(&[(0, 3), (1, 0), (2, 0)]));
        assert_eq!(r.a2, Verdict::FailsKnown);
    }

    #[test]
    fn five_parallelogram_in_big_square() {
        let sq = LatticePolygon::rectangle(5, 5);
        assert!(find_five_parallelogram(&sq).is_some());
        assert!(find_five_parallelogram(&LatticePolygon::rectangle(4, 9)).is_none());
    }
}
