//! Weighted one-dimensional fans in the dual plane.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::lattice::{convex_hull, Covector, LatticePoint, LatticePolygon};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FanError {
    #[error("fan is not balanced: weighted ray sum is {0}")]
    Unbalanced(LatticePoint),
}

/// Primitive directions with positive integer weights, kept in CCW angular order.
///
/// Zero-weight rays are stripped on construction; repeated directions are merged.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightedFan {
    rays: Vec<(Covector, u64)>,
}

impl WeightedFan {
    pub fn from_rays(rays: impl IntoIterator<Item = (Covector, u64)>) -> Self {
        let mut merged: BTreeMap<(i64, i64), u64> = BTreeMap::new();
        for (dir, w) in rays {
            *merged.entry((dir.u(), dir.v())).or_default() += w;
        }
        let mut rays: Vec<(Covector, u64)> = merged
            .into_iter()
            .filter(|&(_, w)| w > 0)
            .map(|((u, v), w)| (Covector::new(u, v).expect("stored primitive"), w))
            .collect();
        rays.sort_by(|a, b| a.0.angle_cmp(b.0));
        WeightedFan { rays }
    }

    pub fn rays(&self) -> &[(Covector, u64)] {
        &self.rays
    }

    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    /// Weight of the ray in direction `dir`, zero if absent.
    pub fn weight(&self, dir: Covector) -> u64 {
        self.rays.iter().find(|(d, _)| *d == dir).map_or(0, |&(_, w)| w)
    }

    /// `Σ weight · direction`.
    pub fn weighted_sum(&self) -> LatticePoint {
        self.rays
            .iter()
            .fold(LatticePoint::ORIGIN, |acc, &(d, w)| acc + d.as_point() * w as i64)
    }

    pub fn is_balanced(&self) -> bool {
        self.weighted_sum() == LatticePoint::ORIGIN
    }

    pub fn check_balanced(&self) -> Result<(), FanError> {
        let s = self.weighted_sum();
        if s == LatticePoint::ORIGIN {
            Ok(())
        } else {
            Err(FanError::Unbalanced(s))
        }
    }

    /// The lattice polygon whose normal fan is this fan, with edge lattice
    /// lengths equal to the weights. Canonically translated.
    ///
    /// An empty fan yields the single point at the origin.
    pub fn to_polygon(&self) -> Result<LatticePolygon, FanError> {
        self.check_balanced()?;
        let mut walk = vec![LatticePoint::ORIGIN];
        let mut cur = LatticePoint::ORIGIN;
        // Outer normal n of a CCW edge is the edge direction turned clockwise,
        // so the edge direction is n turned counterclockwise.
        for &(n, w) in &self.rays {
            cur = cur + LatticePoint::new(-n.v(), n.u()) * w as i64;
            walk.push(cur);
        }
        debug_assert_eq!(cur, LatticePoint::ORIGIN);
        Ok(convex_hull(&walk).expect("nonempty walk").canonical())
    }
}
