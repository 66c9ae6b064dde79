//! Exact lattice geometry: points, cones, the cone order, ray coordinates and
//! graded enumeration of the lattice points of a cone.
//!
//! Every cone handled here lives inside the nonnegative orthant, so each
//! nonzero lattice point of a cone has strictly positive weight. Several
//! algorithms in the crate rely on that fact to make their scans finite.

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;
use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest accepted absolute value of a coordinate. Keeps every product in
/// the 2x2 determinant formulas far away from `i64` overflow.
pub const MAX_COORD: i64 = 1 << 30;

/// Default cap on the number of points a single enumeration may visit.
pub const DEFAULT_POINT_LIMIT: usize = 10_000_000;

/// Point-count cap, overridable with `CONESEMI_CAPACITY`.
pub fn point_limit() -> usize {
    static LIMIT: OnceLock<usize> = OnceLock::new();
    *LIMIT.get_or_init(|| {
        std::env::var("CONESEMI_CAPACITY")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_POINT_LIMIT)
    })
}

/// A lattice point of Z^p with 1 <= p <= 3.
///
/// Ordering is the canonical total order: weight first, then lexicographic
/// on coordinates. It exists for deterministic output and duplicate-free
/// enumeration only.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntPoint {
    dim: u8,
    coords: [i64; 3],
}

impl IntPoint {
    pub fn new(coords: &[i64]) -> Result<Self> {
        if coords.is_empty() || coords.len() > 3 {
            return Err(Error::UnsupportedDimension(coords.len()));
        }
        if let Some(c) = coords.iter().find(|c| c.abs() > MAX_COORD) {
            return Err(Error::Parse(format!("coordinate {c} exceeds {MAX_COORD} in absolute value")));
        }
        let mut buf = [0; 3];
        buf[..coords.len()].copy_from_slice(coords);
        Ok(IntPoint { dim: coords.len() as u8, coords: buf })
    }

    pub fn zero(dim: usize) -> Self {
        assert!((1..=3).contains(&dim), "dimension must be 1, 2 or 3");
        IntPoint { dim: dim as u8, coords: [0; 3] }
    }

    /// Shorthand for a point of Z^2.
    pub fn xy(x: i64, y: i64) -> Self {
        IntPoint { dim: 2, coords: [x, y, 0] }
    }

    /// Shorthand for a point of Z^1.
    pub fn n(x: i64) -> Self {
        IntPoint { dim: 1, coords: [x, 0, 0] }
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords[..self.dim as usize]
    }

    pub fn x(&self) -> i64 {
        self.coords[0]
    }

    pub fn y(&self) -> i64 {
        self.coords[1]
    }

    pub fn is_zero(&self) -> bool {
        self.coords == [0; 3]
    }

    /// Sum of the coordinates.
    pub fn weight(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn scale(&self, k: i64) -> Self {
        IntPoint { dim: self.dim, coords: self.coords.map(|c| c * k) }
    }

    pub fn dot(&self, v: &[i64]) -> i64 {
        self.coords().iter().zip(v).map(|(a, b)| a * b).sum()
    }

    fn check_dim(&self, other: &IntPoint) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(())
    }
}

impl std::ops::Add for IntPoint {
    type Output = IntPoint;
    fn add(self, rhs: IntPoint) -> IntPoint {
        debug_assert_eq!(self.dim, rhs.dim);
        IntPoint {
            dim: self.dim,
            coords: [
                self.coords[0] + rhs.coords[0],
                self.coords[1] + rhs.coords[1],
                self.coords[2] + rhs.coords[2],
            ],
        }
    }
}

impl std::ops::Sub for IntPoint {
    type Output = IntPoint;
    fn sub(self, rhs: IntPoint) -> IntPoint {
        debug_assert_eq!(self.dim, rhs.dim);
        IntPoint {
            dim: self.dim,
            coords: [
                self.coords[0] - rhs.coords[0],
                self.coords[1] - rhs.coords[1],
                self.coords[2] - rhs.coords[2],
            ],
        }
    }
}

impl Ord for IntPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dim
            .cmp(&other.dim)
            .then_with(|| self.weight().cmp(&other.weight()))
            .then_with(|| self.coords.cmp(&other.coords))
    }
}

impl PartialOrd for IntPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IntPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for IntPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<i64>::deserialize(d)?;
        IntPoint::new(&v).map_err(serde::de::Error::custom)
    }
}

/// Exact coordinates of a point in the basis of the two extremal rays.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RayCoords {
    pub alpha: Rational64,
    pub beta: Rational64,
}

/// Two-dimensional simplicial frame: primitive rays in counterclockwise order
/// together with their inward normals.
///
/// For a point x, `n2 . x = det * alpha` and `n1 . x = det * beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Frame2 {
    pub r1: IntPoint,
    pub r2: IntPoint,
    pub det: i64,
    pub n1: [i64; 2],
    pub n2: [i64; 2],
}

impl Frame2 {
    fn new(r1: IntPoint, r2: IntPoint) -> Self {
        let det = r1.x() * r2.y() - r1.y() * r2.x();
        debug_assert!(det > 0);
        Frame2 { r1, r2, det, n1: [-r1.y(), r1.x()], n2: [r2.y(), -r2.x()] }
    }

    /// `det * alpha` for x.
    pub fn alpha_num(&self, x: &IntPoint) -> i64 {
        x.dot(&self.n2)
    }

    /// `det * beta` for x.
    pub fn beta_num(&self, x: &IntPoint) -> i64 {
        x.dot(&self.n1)
    }

    pub fn coords(&self, x: &IntPoint) -> RayCoords {
        RayCoords {
            alpha: Rational64::new(self.alpha_num(x), self.det),
            beta: Rational64::new(self.beta_num(x), self.det),
        }
    }

    /// Lattice point at ray coordinates `(a/det, b/det)`, if integral.
    pub fn point_from_nums(&self, a: i64, b: i64) -> Option<IntPoint> {
        let x = a * self.r1.x() + b * self.r2.x();
        let y = a * self.r1.y() + b * self.r2.y();
        if x % self.det == 0 && y % self.det == 0 {
            Some(IntPoint::xy(x / self.det, y / self.det))
        } else {
            None
        }
    }
}

/// An integer polyhedral cone inside the nonnegative orthant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cone {
    /// N^p.
    Full { dim: u8 },
    /// Planar cone spanned by two primitive rays of N^2, stored counterclockwise.
    Rays2D { r1: IntPoint, r2: IntPoint },
}

impl Cone {
    pub fn full(p: usize) -> Result<Self> {
        if !(1..=3).contains(&p) {
            return Err(Error::UnsupportedDimension(p));
        }
        Ok(Cone::Full { dim: p as u8 })
    }

    /// Cone spanned by two rays of N^2. Rays are reduced to primitive vectors
    /// and reordered counterclockwise.
    pub fn rays2d(r1: IntPoint, r2: IntPoint) -> Result<Self> {
        if r1.dim() != 2 || r2.dim() != 2 {
            return Err(Error::InvalidCone("planar cones need two rays of dimension 2".into()));
        }
        let prim = |r: IntPoint| -> Result<IntPoint> {
            if r.x() < 0 || r.y() < 0 || r.is_zero() {
                return Err(Error::InvalidCone(format!("ray {r} is not a nonzero vector of N^2")));
            }
            let g = r.x().gcd(&r.y());
            Ok(IntPoint::xy(r.x() / g, r.y() / g))
        };
        let (a, b) = (prim(r1)?, prim(r2)?);
        let det = a.x() * b.y() - a.y() * b.x();
        match det.cmp(&0) {
            Ordering::Equal => Err(Error::InvalidCone(format!("rays {a} and {b} are linearly dependent"))),
            Ordering::Greater => Ok(Cone::Rays2D { r1: a, r2: b }),
            Ordering::Less => Ok(Cone::Rays2D { r1: b, r2: a }),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Cone::Full { dim } => *dim as usize,
            Cone::Rays2D { .. } => 2,
        }
    }

    /// Extremal rays as primitive vectors.
    pub fn rays(&self) -> Vec<IntPoint> {
        match *self {
            Cone::Full { dim } => (0..dim as usize)
                .map(|i| {
                    let mut c = [0; 3];
                    c[i] = 1;
                    IntPoint::new(&c[..dim as usize]).expect("valid dimension")
                })
                .collect(),
            Cone::Rays2D { r1, r2 } => vec![r1, r2],
        }
    }

    /// Inward normals of the supporting hyperplanes; membership is
    /// nonnegativity against all of them.
    pub fn normals(&self) -> Vec<Vec<i64>> {
        match *self {
            Cone::Full { dim } => (0..dim as usize)
                .map(|i| (0..dim as usize).map(|j| i64::from(i == j)).collect())
                .collect(),
            Cone::Rays2D { r1, r2 } => {
                let f = Frame2::new(r1, r2);
                vec![f.n1.to_vec(), f.n2.to_vec()]
            }
        }
    }

    /// Ray frame for planar cones (N^2 uses the standard basis).
    pub fn frame(&self) -> Option<Frame2> {
        match *self {
            Cone::Full { dim: 2 } => Some(Frame2::new(IntPoint::xy(1, 0), IntPoint::xy(0, 1))),
            Cone::Rays2D { r1, r2 } => Some(Frame2::new(r1, r2)),
            Cone::Full { .. } => None,
        }
    }

    fn check_dim(&self, x: &IntPoint) -> Result<()> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: x.dim() });
        }
        Ok(())
    }

    pub fn contains(&self, x: &IntPoint) -> Result<bool> {
        self.check_dim(x)?;
        Ok(self.contains_unchecked(x))
    }

    /// Membership without the dimension check.
    pub(crate) fn contains_unchecked(&self, x: &IntPoint) -> bool {
        match *self {
            Cone::Full { .. } => x.coords().iter().all(|&c| c >= 0),
            Cone::Rays2D { r1, r2 } => {
                -r1.y() * x.x() + r1.x() * x.y() >= 0 && r2.y() * x.x() - r2.x() * x.y() >= 0
            }
        }
    }

    /// Coordinates of x in the basis of the two extremal rays. Negative
    /// values are returned as is.
    pub fn ray_coords(&self, x: &IntPoint) -> Result<RayCoords> {
        self.check_dim(x)?;
        self.frame().map(|f| f.coords(x)).ok_or(Error::UnsupportedDimension(self.dim()))
    }

    /// `x <=_C y`, i.e. `y - x` lies in the cone.
    pub fn order_leq(&self, x: &IntPoint, y: &IntPoint) -> Result<bool> {
        self.check_dim(x)?;
        x.check_dim(y)?;
        Ok(self.contains_unchecked(&(*y - *x)))
    }

    /// Lattice points of the cone with weight at most `max_weight`, in
    /// canonical order.
    pub fn points_up_to(&self, max_weight: i64) -> Result<Vec<IntPoint>> {
        self.points_up_to_with_limit(max_weight, point_limit())
    }

    pub fn points_up_to_with_limit(&self, max_weight: i64, limit: usize) -> Result<Vec<IntPoint>> {
        if max_weight < 0 {
            return Ok(Vec::new());
        }
        let p = self.dim();
        let w = max_weight as u128;
        // number of points of N^p with weight <= w is binom(w + p, p)
        let scanned: u128 = match p {
            1 => w + 1,
            2 => (w + 1) * (w + 2) / 2,
            _ => (w + 1) * (w + 2) * (w + 3) / 6,
        };
        if scanned > limit as u128 {
            return Err(Error::CapacityExceeded { limit });
        }
        let mut out = Vec::new();
        for t in 0..=max_weight {
            match p {
                1 => out.push(IntPoint::n(t)),
                2 => out.extend((0..=t).map(|x| IntPoint::xy(x, t - x)).filter(|x| self.contains_unchecked(x))),
                _ => {
                    for a in 0..=t {
                        for b in 0..=t - a {
                            out.push(IntPoint::new(&[a, b, t - a - b]).expect("bounded"));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// `{a lattice point : 0 <=_C a <=_C h}` in canonical order, including
    /// the origin and h itself. Empty when h is outside the cone.
    pub fn lower_set(&self, h: &IntPoint) -> Vec<IntPoint> {
        let mut out = Vec::new();
        if !self.contains_unchecked(h) {
            return out;
        }
        // the cone lies in N^p, so the lower set lies in the box [0, h]
        let c = h.coords();
        match c.len() {
            1 => out.extend((0..=c[0]).map(IntPoint::n)),
            2 => {
                for x in 0..=c[0] {
                    for y in 0..=c[1] {
                        let a = IntPoint::xy(x, y);
                        if self.contains_unchecked(&a) && self.contains_unchecked(&(*h - a)) {
                            out.push(a);
                        }
                    }
                }
            }
            _ => {
                for x in 0..=c[0] {
                    for y in 0..=c[1] {
                        for z in 0..=c[2] {
                            out.push(IntPoint::new(&[x, y, z]).expect("bounded"));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum ConeRepr {
    Full { p: usize },
    Rays2d { rays: Vec<IntPoint> },
}

impl Serialize for Cone {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            Cone::Full { dim } => ConeRepr::Full { p: dim as usize },
            Cone::Rays2D { r1, r2 } => ConeRepr::Rays2d { rays: vec![r1, r2] },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cone {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        match ConeRepr::deserialize(d)? {
            ConeRepr::Full { p } => Cone::full(p).map_err(D::Error::custom),
            ConeRepr::Rays2d { rays } => match rays.as_slice() {
                [a, b] => Cone::rays2d(*a, *b).map_err(D::Error::custom),
                _ => Err(D::Error::custom("rays2d cones take exactly two rays")),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag() -> Cone {
        Cone::rays2d(IntPoint::xy(1, 0), IntPoint::xy(1, 1)).unwrap()
    }

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn membership_examples() {
        assert!(diag().contains(&IntPoint::xy(3, 1)).unwrap());
        assert!(!diag().contains(&IntPoint::xy(1, 2)).unwrap());
        assert!(Cone::full(2).unwrap().contains(&IntPoint::xy(0, 0)).unwrap());
        assert_eq!(
            diag().contains(&IntPoint::n(1)),
            Err(Error::DimensionMismatch { expected: 2, found: 1 })
        );
    }

    #[test]
    fn ray_coords_examples() {
        let c = diag();
        assert_eq!(c.ray_coords(&IntPoint::xy(3, 1)).unwrap(), RayCoords { alpha: r(2, 1), beta: r(1, 1) });
        assert_eq!(c.ray_coords(&IntPoint::xy(2, 2)).unwrap(), RayCoords { alpha: r(0, 1), beta: r(2, 1) });
        let c = Cone::rays2d(IntPoint::xy(2, 1), IntPoint::xy(1, 3)).unwrap();
        assert_eq!(c.ray_coords(&IntPoint::xy(3, 4)).unwrap(), RayCoords { alpha: r(1, 1), beta: r(1, 1) });
        assert_eq!(c.ray_coords(&IntPoint::xy(1, 1)).unwrap(), RayCoords { alpha: r(2, 5), beta: r(1, 5) });
    }

    #[test]
    fn cone_order_examples() {
        let c = diag();
        assert!(c.order_leq(&IntPoint::xy(1, 1), &IntPoint::xy(2, 2)).unwrap());
        assert!(!c.order_leq(&IntPoint::xy(3, 1), &IntPoint::xy(4, 0)).unwrap());
        assert!(c.order_leq(&IntPoint::xy(5, 2), &IntPoint::xy(5, 2)).unwrap());
    }

    #[test]
    fn weights() {
        assert_eq!(IntPoint::xy(2, 2).weight(), 4);
        assert_eq!(IntPoint::xy(0, 0).weight(), 0);
        assert_eq!(IntPoint::xy(3, 1).weight(), 4);
    }

    #[test]
    fn enumeration_examples() {
        let pts = diag().points_up_to(2).unwrap();
        let want = [(0, 0), (1, 0), (1, 1), (2, 0)].map(|(x, y)| IntPoint::xy(x, y));
        assert_eq!(pts, want);
        let line = Cone::full(1).unwrap().points_up_to(3).unwrap();
        assert_eq!(line, (0..=3).map(IntPoint::n).collect::<Vec<_>>());
        for c in [diag(), Cone::full(3).unwrap()] {
            assert_eq!(c.points_up_to(0).unwrap(), vec![IntPoint::zero(c.dim())]);
        }
    }

    #[test]
    fn enumeration_respects_limit() {
        assert_eq!(
            Cone::full(2).unwrap().points_up_to_with_limit(100, 50),
            Err(Error::CapacityExceeded { limit: 50 })
        );
    }

    #[test]
    fn rays_are_normalized() {
        let c = Cone::rays2d(IntPoint::xy(3, 3), IntPoint::xy(4, 0)).unwrap();
        assert_eq!(c, diag());
        assert!(Cone::rays2d(IntPoint::xy(1, 1), IntPoint::xy(2, 2)).is_err());
        assert!(Cone::rays2d(IntPoint::xy(-1, 1), IntPoint::xy(2, 0)).is_err());
    }

    #[test]
    fn lower_set_of_diagonal_point() {
        let c = diag();
        let want = [(0, 0), (1, 1), (2, 2)].map(|(x, y)| IntPoint::xy(x, y));
        assert_eq!(c.lower_set(&IntPoint::xy(2, 2)), want);
        assert_eq!(c.lower_set(&IntPoint::xy(2, 1)).len(), 4);
    }

    #[test]
    fn cone_json_forms() {
        let c: Cone = serde_json::from_str(r#"{"type":"rays2d","rays":[[1,1],[1,0]]}"#).unwrap();
        assert_eq!(c, diag());
        assert_eq!(serde_json::to_string(&c).unwrap(), r#"{"type":"rays2d","rays":[[1,0],[1,1]]}"#);
        let f: Cone = serde_json::from_str(r#"{"type":"full","p":2}"#).unwrap();
        assert_eq!(f, Cone::full(2).unwrap());
        assert!(serde_json::from_str::<Cone>(r#"{"type":"full","p":4}"#).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn cones() -> impl Strategy<Value = Cone> {
            prop_oneof![
                Just(Cone::full(2).unwrap()),
                Just(Cone::rays2d(IntPoint::xy(1, 0), IntPoint::xy(1, 1)).unwrap()),
                Just(Cone::rays2d(IntPoint::xy(2, 1), IntPoint::xy(1, 3)).unwrap()),
                (1i64..6, 0i64..6, 0i64..6, 1i64..6)
                    .prop_filter("independent", |(a, b, c, d)| a * d != b * c)
                    .prop_map(|(a, b, c, d)| Cone::rays2d(IntPoint::xy(a, b), IntPoint::xy(c, d)).unwrap()),
            ]
        }

        fn cone_point(c: Cone) -> impl Strategy<Value = IntPoint> {
            let rays = c.rays();
            (0i64..8, 0i64..8).prop_map(move |(a, b)| rays[0].scale(a) + rays[1].scale(b))
        }

        proptest! {
            #[test]
            fn ray_coords_reconstruct(c in cones(), x in -50i64..=50, y in -50i64..=50) {
                let p = IntPoint::xy(x, y);
                let rc = c.ray_coords(&p).unwrap();
                let rays = c.rays();
                let rx = rc.alpha * Rational64::from(rays[0].x()) + rc.beta * Rational64::from(rays[1].x());
                let ry = rc.alpha * Rational64::from(rays[0].y()) + rc.beta * Rational64::from(rays[1].y());
                prop_assert_eq!(rx, Rational64::from(x));
                prop_assert_eq!(ry, Rational64::from(y));
                let det = c.frame().unwrap().det;
                prop_assert_eq!(det % rc.alpha.denom(), 0);
                prop_assert_eq!(det % rc.beta.denom(), 0);
                let nonneg = rc.alpha >= Rational64::from(0) && rc.beta >= Rational64::from(0);
                prop_assert_eq!(c.contains(&p).unwrap(), nonneg);
            }

            #[test]
            fn cone_order_is_partial_order(
                (c, x, y, z) in cones().prop_flat_map(|c| (Just(c), cone_point(c), cone_point(c), cone_point(c)))
            ) {
                prop_assert!(c.order_leq(&x, &x).unwrap());
                if c.order_leq(&x, &y).unwrap() && c.order_leq(&y, &x).unwrap() {
                    prop_assert_eq!(x, y);
                }
                if c.order_leq(&x, &y).unwrap() && c.order_leq(&y, &z).unwrap() {
                    prop_assert!(c.order_leq(&x, &z).unwrap());
                }
                // translating by a cone point never breaks the order
                prop_assert!(c.order_leq(&x, &(x + y)).unwrap());
            }

            #[test]
            fn enumeration_matches_rectangle_scan(c in cones(), w in 0i64..25) {
                let pts = c.points_up_to(w).unwrap();
                prop_assert!(pts.windows(2).all(|p| p[0] < p[1]));
                let mut scan = Vec::new();
                for x in 0..=w {
                    for y in 0..=w {
                        let p = IntPoint::xy(x, y);
                        if x + y <= w && c.contains(&p).unwrap() {
                            scan.push(p);
                        }
                    }
                }
                scan.sort();
                prop_assert_eq!(pts, scan);
            }
        }
    }
}
