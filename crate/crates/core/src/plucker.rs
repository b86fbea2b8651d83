//! Inflection and bitangent counts of a generic curve with a given Newton polygon.
//!
//! All counts are evaluated verbatim from the polygon. They are the true
//! counts for a generic curve only when the genericity assumptions hold; see
//! [`crate::assumptions`].

use num_rational::Rational64;
use num_traits::Zero;
use thiserror::Error;

use crate::assumptions::{self, AssumptionReport, Verdict};
use crate::fan::{FanError, WeightedFan};
use crate::lattice::{mixed_volume, Covector, GeometryError, LatticePolygon};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PluckerError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("dual fan: {0}")]
    Fan(#[from] FanError),
    #[error("dual area mismatch: closed formula {closed}, reconstructed polygon {reconstructed}")]
    AreaMismatch { closed: Rational64, reconstructed: Rational64 },
    #[error("bitangent count {0} is not an integer although all assumptions are verified")]
    NonIntegralBitangents(Rational64),
}

fn arrow_lengths(p: &LatticePolygon) -> u64 {
    Covector::ARROWS.iter().map(|&g| p.face_length(g)).sum()
}

fn opposite_lengths(p: &LatticePolygon) -> u64 {
    Covector::OPPOSITE_ARROWS.iter().map(|&g| p.face_length(g)).sum()
}

/// `6 vol(P) − 2 Σ_{↓,↗,←} len P^γ − Σ_{↑,↙,→} len P^γ`.
pub fn inflection_count(p: &LatticePolygon) -> Result<i64, PluckerError> {
    p.require_full("inflection_count")?;
    Ok(3 * p.doubled_area() - 2 * arrow_lengths(p) as i64 - opposite_lengths(p) as i64)
}

/// Tropical fan of the dual curve.
pub fn dual_fan(p: &LatticePolygon) -> Result<WeightedFan, PluckerError> {
    p.require_full("dual_fan")?;
    let two_vol = p.doubled_area();
    let mut candidates: Vec<Covector> = Covector::ARROWS.to_vec();
    for (n, _) in p.edge_fan()?.rays() {
        let g = -*n;
        if !candidates.contains(&g) {
            candidates.push(g);
        }
    }
    let rays = candidates.into_iter().map(|g| {
        let w = if Covector::ARROWS.contains(&g) {
            two_vol - p.face_length(g) as i64 + p.face_length(-g) as i64
        } else if Covector::OPPOSITE_ARROWS.contains(&g) {
            0
        } else {
            p.face_length(-g) as i64
        };
        debug_assert!(w >= 0, "negative dual weight {w} at {g}");
        (g, w.max(0) as u64)
    });
    let fan = WeightedFan::from_rays(rays);
    fan.check_balanced()?;
    Ok(fan)
}

/// Newton polygon of the dual curve, rebuilt from [`dual_fan`].
pub fn dual_polygon(p: &LatticePolygon) -> Result<LatticePolygon, PluckerError> {
    Ok(dual_fan(p)?.to_polygon()?)
}

fn unit_edge(a: (i64, i64), b: (i64, i64)) -> LatticePolygon {
    LatticePolygon::from_coords(&[a, b]).expect("nonempty")
}

/// Closed-form `vol(P^∨)` from the virtual-polygon identity
/// `P^∨ = 2SΔ + (−P) − l↓·E↓ − l↗·E↗ − l←·E←`, where `E_γ` is the edge of the
/// standard triangle with outer normal `γ`. Cross-checked against the area of
/// the reconstructed dual polygon.
pub fn dual_area_closed(p: &LatticePolygon) -> Result<Rational64, PluckerError> {
    p.require_full("dual_area_closed")?;
    let s = p.area();
    let delta = LatticePolygon::standard_triangle(1);
    let edges = [
        (Covector::DOWN, unit_edge((0, 0), (1, 0))),
        (Covector::NORTH_EAST, unit_edge((1, 0), (0, 1))),
        (Covector::LEFT, unit_edge((0, 0), (0, 1))),
    ];
    let l: Vec<Rational64> = edges
        .iter()
        .map(|(g, _)| Rational64::from_integer(p.face_length(*g) as i64))
        .collect();
    let two = Rational64::from_integer(2);
    let l_sum = l.iter().fold(Rational64::zero(), |a, &b| a + b);
    let edge_terms = edges
        .iter()
        .zip(&l)
        .fold(Rational64::zero(), |acc, ((_, e), &lg)| acc + lg * mixed_volume(p, e));
    let pair_terms = l[0] * l[1] + l[1] * l[2] + l[2] * l[0];
    let closed = two * s * s + two * s * mixed_volume(&delta, &p.negate()) - two * s * l_sum + s - edge_terms
        + pair_terms;

    let reconstructed = dual_polygon(p)?.area();
    if closed != reconstructed {
        return Err(PluckerError::AreaMismatch { closed, reconstructed });
    }
    Ok(closed)
}

/// `−10 vol(P) + vol(P^∨) + 3 Σ_{↓,↗,←} len P^γ + Σ_{↑,↙,→} len P^γ`.
pub fn bitangent_count(p: &LatticePolygon) -> Result<Rational64, PluckerError> {
    p.require_full("bitangent_count")?;
    let dual_vol = dual_area_closed(p)?;
    Ok(Rational64::from_integer(-10) * p.area()
        + dual_vol
        + Rational64::from_integer(3 * arrow_lengths(p) as i64 + opposite_lengths(p) as i64))
}

/// Number of vertical tangents: `2 vol(P) − len P^↓ − len P^↑`.
pub fn vertical_tangent_count(p: &LatticePolygon) -> Result<i64, PluckerError> {
    p.require_full("vertical_tangent_count")?;
    Ok(p.doubled_area() - p.face_length(Covector::DOWN) as i64 - p.face_length(Covector::UP) as i64)
}

/// Euler characteristic of the toric closure: `−2 vol(P) + lattice perimeter`.
pub fn euler_characteristic(p: &LatticePolygon) -> Result<i64, PluckerError> {
    p.require_full("euler_characteristic")?;
    Ok(-p.doubled_area() + p.lattice_perimeter() as i64)
}

/// Newton polygon of `x²y² · hess f` for a generic `f` supported far from the axes.
pub fn hessian_polytope(p: &LatticePolygon) -> Result<LatticePolygon, PluckerError> {
    p.require_full("hessian_polytope")?;
    Ok(p.dilate(3))
}

/// All invariants of one polygon.
#[derive(Clone, Debug, PartialEq)]
pub struct PluckerReport {
    pub polygon: LatticePolygon,
    pub vol: Rational64,
    pub inflections: i64,
    pub bitangents: Rational64,
    pub dual_fan: WeightedFan,
    pub dual_polygon: LatticePolygon,
    pub dual_vol: Rational64,
    pub euler_char: i64,
    pub genus: u64,
    pub vertical_tangents: i64,
    /// Caveats about how far the counts can be trusted.
    pub warnings: Vec<String>,
}

pub fn plucker_report(p: &LatticePolygon) -> Result<PluckerReport, PluckerError> {
    p.require_full("plucker_report")?;
    let dual_polygon = dual_polygon(p)?;
    let dual_vol = dual_area_closed(p)?;
    let mut warnings = Vec::new();
    let (a2, witness) = assumptions::assumption2_holds(p);
    if a2 == Verdict::FailsKnown {
        let w = witness.expect("failure carries a witness");
        warnings.push(format!(
            "thin triangle (k = {}, rotation power {}): curves have inflection points at infinity; \
             the inflection formula is not a count of torus inflection points",
            w.k, w.rotation_power
        ));
    }
    Ok(PluckerReport {
        polygon: p.clone(),
        vol: p.area(),
        inflections: inflection_count(p)?,
        bitangents: bitangent_count(p)?,
        dual_fan: dual_fan(p)?,
        dual_vol,
        dual_polygon,
        euler_char: euler_characteristic(p)?,
        genus: p.interior_lattice_points()?,
        vertical_tangents: vertical_tangent_count(p)?,
        warnings,
    })
}

impl PluckerReport {
    /// The bitangent formula is only claimed under all three assumptions; when
    /// they are verified the value has to be an integer.
    pub fn check_integrality(&self, assumptions: &AssumptionReport) -> Result<(), PluckerError> {
        if assumptions.all_verified() && !self.bitangents.is_integer() {
            return Err(PluckerError::NonIntegralBitangents(self.bitangents));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[(i64, i64)]) -> LatticePolygon {
        LatticePolygon::from_coords(c).unwrap()
    }

    fn r(n: i64) -> Rational64 {
        Rational64::from_integer(n)
    }

    fn quasi(c: i64, d: i64) -> LatticePolygon {
        poly(&[(0, 0), (c, 0), (0, d)])
    }

    #[test]
    fn inflection_examples() {
        assert_eq!(inflection_count(&LatticePolygon::standard_triangle(5)), Ok(45));
        assert_eq!(inflection_count(&LatticePolygon::rectangle(3, 4)), Ok(51));
        assert_eq!(inflection_count(&poly(&[(0, 0), (0, 1), (1, 1)])), Ok(0));
        assert_eq!(inflection_count(&quasi(5, 6)), Ok(68));
        assert!(inflection_count(&poly(&[(0, 0), (3, 0)])).is_err());
    }

    #[test]
    fn dual_fan_examples() {
        let fan = dual_fan(&poly(&[(0, 0), (0, 1), (1, 1)])).unwrap();
        assert_eq!(
            fan,
            WeightedFan::from_rays([
                (Covector::DOWN, 2),
                (Covector::NORTH_EAST, 1),
                (Covector::new(-1, 1).unwrap(), 1)
            ])
        );
        for d in 1..6 {
            let fan = dual_fan(&LatticePolygon::standard_triangle(d)).unwrap();
            let w = (d * d - d) as u64;
            assert_eq!(fan, WeightedFan::from_rays(Covector::ARROWS.map(|g| (g, w))));
        }
        let fan = dual_fan(&LatticePolygon::rectangle(3, 4)).unwrap();
        assert_eq!(fan, WeightedFan::from_rays(Covector::ARROWS.map(|g| (g, 24))));
    }

    #[test]
    fn dual_polygon_examples() {
        let dp = dual_polygon(&poly(&[(0, 0), (0, 1), (1, 1)])).unwrap();
        assert!(dp.is_translate_of(&poly(&[(0, 0), (2, 0), (1, 1)])));
        let dp = dual_polygon(&LatticePolygon::rectangle(3, 4)).unwrap();
        assert_eq!(dp, LatticePolygon::standard_triangle(24));
        let dp = dual_polygon(&quasi(2, 3)).unwrap();
        assert!(dp.is_translate_of(&poly(&[(2, 0), (0, 3), (0, 6), (6, 0)])));
        // a line has a point as its dual
        assert_eq!(dual_polygon(&LatticePolygon::standard_triangle(1)).unwrap().dim(), 0);
    }

    #[test]
    fn dual_area_examples() {
        assert_eq!(dual_area_closed(&LatticePolygon::rectangle(3, 4)), Ok(r(288)));
        assert_eq!(dual_area_closed(&quasi(2, 3)), Ok(r(15)));
        assert_eq!(dual_area_closed(&poly(&[(0, 0), (0, 1), (1, 1)])), Ok(r(1)));
    }

    #[test]
    fn bitangent_examples() {
        assert_eq!(bitangent_count(&LatticePolygon::standard_triangle(5)), Ok(r(120)));
        assert_eq!(bitangent_count(&LatticePolygon::rectangle(3, 4)), Ok(r(196)));
        assert_eq!(bitangent_count(&quasi(5, 6)), Ok(r(318)));
    }

    #[test]
    fn vertical_tangent_examples() {
        assert_eq!(vertical_tangent_count(&LatticePolygon::standard_triangle(2)), Ok(2));
        assert_eq!(vertical_tangent_count(&poly(&[(0, 0), (0, 1), (1, 1)])), Ok(0));
        assert_eq!(vertical_tangent_count(&LatticePolygon::rectangle(3, 4)), Ok(18));
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_characteristic(&LatticePolygon::standard_triangle(1)), Ok(2));
        assert_eq!(euler_characteristic(&LatticePolygon::standard_triangle(3)), Ok(0));
        assert_eq!(euler_characteristic(&LatticePolygon::rectangle(3, 4)), Ok(-10));
    }

    #[test]
    fn hessian_polytope_examples() {
        assert_eq!(
            hessian_polytope(&LatticePolygon::standard_triangle(1)),
            Ok(LatticePolygon::standard_triangle(3))
        );
        assert_eq!(
            hessian_polytope(&LatticePolygon::standard_triangle(5)),
            Ok(LatticePolygon::standard_triangle(15))
        );
        assert_eq!(
            hessian_polytope(&LatticePolygon::rectangle(3, 4)),
            Ok(LatticePolygon::rectangle(9, 12))
        );
    }

    #[test]
    fn report_examples() {
        let rep = plucker_report(&LatticePolygon::standard_triangle(5)).unwrap();
        assert_eq!((rep.inflections, rep.bitangents), (45, r(120)));
        assert_eq!(rep.genus, 6);
        let rep = plucker_report(&LatticePolygon::rectangle(3, 4)).unwrap();
        assert_eq!((rep.inflections, rep.bitangents), (51, r(196)));
        assert_eq!(rep.dual_polygon, LatticePolygon::standard_triangle(24));
        assert_eq!(rep.dual_vol, rep.dual_polygon.area());
        let rep = plucker_report(&poly(&[(0, 0), (0, 1), (1, 1)])).unwrap();
        assert_eq!(rep.inflections, 0);
        assert_eq!(rep.dual_fan.weight(Covector::DOWN), 2);
        let thin = plucker_report(&poly(&[(0, 3), (1, 0), (2, 0)])).unwrap();
        assert_eq!(thin.warnings.len(), 1);
    }
}
