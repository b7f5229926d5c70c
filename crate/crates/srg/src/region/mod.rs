//! Sets in the extended complex plane.
//!
//! A [`Region`] is either symbolic (a tree of primitives under union and
//! intersection, closed under real affine maps and inversion) or sampled (a
//! membership oracle with a bounding annulus and resolution). Every region is
//! symmetric about the real axis and closed; the point at infinity is tracked
//! explicitly.

mod intervals;
mod minkowski;
mod node;
mod primitive;
mod serial;

pub use minkowski::{minkowski_product, minkowski_sum, product_affine_sup, Certificate};
pub use primitive::{Primitive, BOUNDARY_TOL};

pub(crate) use node::Node;

use crate::error::{Result, SrgError};
use crate::exec;
use crate::xcomplex::XComplex;
use std::f64::consts::PI;
use std::sync::Arc;

/// Default absolute tolerance for numeric modulus queries.
pub const DEFAULT_SUP_TOL: f64 = 1e-3;
/// Default radial resolution for sampled regions.
pub const DEFAULT_RESOLUTION: f64 = 1e-3;
/// Default angular resolution for sampled regions (2 pi / 1024).
pub const DEFAULT_ANGLE_STEPS: usize = 1024;
/// Clip window for grid work on unbounded regions.
pub const UNBOUNDED_CLIP: f64 = 3.0;

type Oracle = Arc<dyn Fn(f64, f64) -> bool + Send + Sync>;

#[derive(Clone)]
pub(crate) struct Sampled {
    oracle: Oracle,
    rmin: f64,
    rmax: f64,
    has_inf: bool,
    resolution: f64,
}

#[derive(Clone)]
pub(crate) enum Repr {
    Symbolic(Node),
    Sampled(Sampled),
}

/// A closed, conjugate-symmetric subset of the extended complex plane.
#[derive(Clone)]
pub struct Region {
    pub(crate) repr: Repr,
}

impl std::fmt::Debug for Region {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.repr {
            Repr::Symbolic(n) => write!(f, "Region({})", serial::to_text_node(n)),
            Repr::Sampled(s) => write!(
                f,
                "Region(sampled, annulus [{}, {}], inf={}, res={})",
                s.rmin, s.rmax, s.has_inf, s.resolution
            ),
        }
    }
}

impl Region {
    // ---- constructors -------------------------------------------------

    pub fn disk(center: f64, radius: f64) -> Result<Region> {
        if !(radius > 0.0) || !center.is_finite() || !radius.is_finite() {
            return Err(SrgError::InvalidParameter(format!(
                "disk needs finite center and radius > 0, got ({center}, {radius})"
            )));
        }
        Ok(Region::from_node(Node::Prim(Primitive::Disk { center, radius })))
    }

    pub fn disk_exterior(center: f64, radius: f64) -> Result<Region> {
        if !(radius > 0.0) || !center.is_finite() || !radius.is_finite() {
            return Err(SrgError::InvalidParameter(format!(
                "disk exterior needs finite center and radius > 0, got ({center}, {radius})"
            )));
        }
        Ok(Region::from_node(Node::Prim(Primitive::DiskExterior {
            center,
            radius,
        })))
    }

    pub fn halfplane_ge(a: f64) -> Result<Region> {
        if !a.is_finite() {
            return Err(SrgError::InvalidParameter("half-plane bound must be finite".into()));
        }
        Ok(Region::from_node(Node::Prim(Primitive::HalfPlaneGE(a))))
    }

    pub fn halfplane_le(a: f64) -> Result<Region> {
        if !a.is_finite() {
            return Err(SrgError::InvalidParameter("half-plane bound must be finite".into()));
        }
        Ok(Region::from_node(Node::Prim(Primitive::HalfPlaneLE(a))))
    }

    pub fn cardioid(origin: f64, scale: f64, orientation: i8) -> Result<Region> {
        if !(scale > 0.0) || !origin.is_finite() || !scale.is_finite() {
            return Err(SrgError::InvalidParameter(format!(
                "cardioid needs finite origin and scale > 0, got ({origin}, {scale})"
            )));
        }
        if orientation != 1 && orientation != -1 {
            return Err(SrgError::InvalidParameter(
                "cardioid orientation must be +1 or -1".into(),
            ));
        }
        Ok(Region::from_node(Node::Prim(Primitive::Cardioid {
            origin,
            scale,
            orientation,
        })))
    }

    /// A finite point set. The list must be closed under conjugation.
    pub fn points(pts: Vec<XComplex>) -> Result<Region> {
        for p in &pts {
            if let XComplex::Finite { re, im } = p {
                if re.is_nan() || im.is_nan() {
                    return Err(SrgError::InvalidParameter("NaN point".into()));
                }
                if im.abs() > BOUNDARY_TOL {
                    let conj = p.conj();
                    if !pts.iter().any(|q| q.dist(&conj) <= BOUNDARY_TOL) {
                        return Err(SrgError::InvalidParameter(format!(
                            "point set is not conjugate-symmetric: missing conj of {p:?}"
                        )));
                    }
                }
            }
        }
        Ok(Region::from_node(Node::Prim(Primitive::Points(pts))))
    }

    pub fn empty() -> Region {
        Region::from_node(Node::Prim(Primitive::Empty))
    }

    pub fn full() -> Region {
        Region::from_node(Node::Prim(Primitive::Full))
    }

    /// A sampled region from a membership oracle on finite points.
    ///
    /// The oracle is only ever queried on the closed upper half-plane; the
    /// lower half is answered by conjugate symmetry, which makes every
    /// sampled region symmetric by construction.
    pub fn from_oracle(
        oracle: impl Fn(f64, f64) -> bool + Send + Sync + 'static,
        annulus: (f64, f64),
        contains_infinity: bool,
        resolution: f64,
    ) -> Result<Region> {
        if !(resolution > 0.0) {
            return Err(SrgError::InvalidParameter("resolution must be > 0".into()));
        }
        Ok(Region {
            repr: Repr::Sampled(Sampled {
                oracle: Arc::new(oracle),
                rmin: annulus.0.max(0.0),
                rmax: annulus.1,
                has_inf: contains_infinity,
                resolution,
            }),
        })
    }

    pub(crate) fn from_node(node: Node) -> Region {
        Region {
            repr: Repr::Symbolic(node),
        }
    }

    // ---- basic queries -------------------------------------------------

    pub fn contains(&self, z: &XComplex) -> bool {
        match &self.repr {
            Repr::Symbolic(n) => n.contains(z),
            Repr::Sampled(s) => match z {
                XComplex::Infinity => s.has_inf,
                XComplex::Finite { re, im } => (s.oracle)(*re, im.abs()),
            },
        }
    }

    pub fn contains_infinity(&self) -> bool {
        match &self.repr {
            Repr::Symbolic(n) => n.contains_infinity(),
            Repr::Sampled(s) => s.has_inf,
        }
    }

    /// Loose modulus bounds `(rmin, rmax)`; `rmax` may be infinite.
    pub fn annulus(&self) -> (f64, f64) {
        match &self.repr {
            Repr::Symbolic(n) => n.annulus(),
            Repr::Sampled(s) => (s.rmin, s.rmax),
        }
    }

    pub fn resolution(&self) -> f64 {
        match &self.repr {
            Repr::Symbolic(_) => DEFAULT_RESOLUTION,
            Repr::Sampled(s) => s.resolution,
        }
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self.repr, Repr::Symbolic(_))
    }

    /// True when no member can be found: the literal empty set, or no hit on
    /// a membership probe grid (and no point at infinity).
    pub fn is_effectively_empty(&self) -> bool {
        if self.contains_infinity() {
            return false;
        }
        if let Repr::Symbolic(n) = &self.repr {
            if n.is_empty_literal() {
                return true;
            }
            let mut pts = Vec::new();
            n.collect_points(&mut pts);
            if !pts.is_empty() {
                return false;
            }
        }
        let (rmin, rmax) = self.clipped_annulus();
        for i in 0..64 {
            let phi = PI * (i as f64) / 63.0;
            for j in 0..64 {
                let r = rmin + (rmax - rmin) * (j as f64) / 63.0;
                if self.contains(&XComplex::from_polar(r, phi)) {
                    return false;
                }
            }
        }
        true
    }

    fn clipped_annulus(&self) -> (f64, f64) {
        let (rmin, rmax) = self.annulus();
        let hi = if rmax.is_finite() { rmax } else { UNBOUNDED_CLIP.max(rmin * 2.0 + 1.0) };
        (rmin.min(hi), hi)
    }

    // ---- transformations -----------------------------------------------

    /// The image `{alpha z + beta : z in self}` for real `alpha != 0`.
    /// Infinity maps to infinity. Exact on symbolic regions.
    pub fn affine(&self, alpha: f64, beta: f64) -> Result<Region> {
        if alpha == 0.0 || !alpha.is_finite() || !beta.is_finite() {
            return Err(SrgError::InvalidParameter(
                "affine map needs finite alpha != 0 (0 * infinity is undefined)".into(),
            ));
        }
        Ok(match &self.repr {
            Repr::Symbolic(n) => Region::from_node(n.affine(alpha, beta)),
            Repr::Sampled(s) => {
                let inner = s.clone();
                let (a, b) = (alpha, beta);
                let oracle: Oracle =
                    Arc::new(move |re, im| (inner.oracle)((re - b) / a, (im / a).abs()));
                let hi = if s.rmax.is_finite() {
                    alpha.abs() * s.rmax + beta.abs()
                } else {
                    f64::INFINITY
                };
                let lo = (alpha.abs() * s.rmin - beta.abs())
                    .max(beta.abs() - alpha.abs() * s.rmax)
                    .max(0.0);
                Region {
                    repr: Repr::Sampled(Sampled {
                        oracle,
                        rmin: lo,
                        rmax: hi,
                        has_inf: s.has_inf,
                        resolution: s.resolution * alpha.abs(),
                    }),
                }
            }
        })
    }

    /// The image `{conj(z)^{-1} : z in self}` with `0 <-> infinity`.
    pub fn invert(&self) -> Region {
        match &self.repr {
            Repr::Symbolic(n) => Region::from_node(n.invert()),
            Repr::Sampled(s) => {
                let inner = s.clone();
                let had_zero = (s.oracle)(0.0, 0.0);
                let inner_inf = s.has_inf;
                let oracle: Oracle = Arc::new(move |re, im| {
                    let z = XComplex::finite(re, im);
                    match z.invert() {
                        XComplex::Finite { re, im } => (inner.oracle)(re, im.abs()),
                        XComplex::Infinity => inner_inf,
                    }
                });
                let rmin = if s.rmax.is_finite() && s.rmax > 0.0 { 1.0 / s.rmax } else { 0.0 };
                let rmax = if s.rmin > 0.0 { 1.0 / s.rmin } else { f64::INFINITY };
                Region {
                    repr: Repr::Sampled(Sampled {
                        oracle,
                        rmin,
                        rmax,
                        has_inf: had_zero,
                        resolution: s.resolution,
                    }),
                }
            }
        }
    }

    /// Set intersection. Symbolic when both operands are; otherwise sampled
    /// at the finer resolution.
    pub fn intersect(&self, other: &Region) -> Region {
        match (&self.repr, &other.repr) {
            (Repr::Symbolic(a), Repr::Symbolic(b)) => {
                Region::from_node(node::intersection(a.clone(), b.clone()))
            }
            _ => self.combine_sampled(other, true),
        }
    }

    /// Set union. Symbolic when both operands are; otherwise sampled at the
    /// finer resolution.
    pub fn union(&self, other: &Region) -> Region {
        match (&self.repr, &other.repr) {
            (Repr::Symbolic(a), Repr::Symbolic(b)) => {
                Region::from_node(node::union(a.clone(), b.clone()))
            }
            _ => self.combine_sampled(other, false),
        }
    }

    fn combine_sampled(&self, other: &Region, is_intersection: bool) -> Region {
        let a = self.clone();
        let b = other.clone();
        let oracle: Oracle = Arc::new(move |re, im| {
            let z = XComplex::finite(re, im);
            if is_intersection {
                a.contains(&z) && b.contains(&z)
            } else {
                a.contains(&z) || b.contains(&z)
            }
        });
        let (l1, h1) = self.annulus();
        let (l2, h2) = other.annulus();
        let (rmin, rmax, has_inf) = if is_intersection {
            (
                l1.max(l2),
                h1.min(h2),
                self.contains_infinity() && other.contains_infinity(),
            )
        } else {
            (
                l1.min(l2),
                h1.max(h2),
                self.contains_infinity() || other.contains_infinity(),
            )
        };
        Region {
            repr: Repr::Sampled(Sampled {
                oracle,
                rmin,
                rmax,
                has_inf,
                resolution: self.resolution().min(other.resolution()),
            }),
        }
    }

    // ---- modulus queries -------------------------------------------------

    /// Supremum of `|z|` over the region, within `tol` for regions with
    /// Lipschitz boundary; `+inf` when the region contains infinity.
    pub fn sup_modulus(&self, tol: f64) -> f64 {
        self.extreme_dist_to((0.0, 0.0), tol, true)
    }

    /// Infimum of `|z|` over the region (0 when the region contains 0).
    pub fn inf_modulus(&self, tol: f64) -> f64 {
        self.extreme_dist_to((0.0, 0.0), tol, false)
    }

    /// True iff the region avoids infinity and every point lies within
    /// `radius + tol` of `center` (a real point).
    pub fn subset_of_disk(&self, center: f64, radius: f64, tol: f64) -> bool {
        if radius <= 0.0 || tol <= 0.0 {
            return false;
        }
        if self.contains_infinity() {
            return false;
        }
        let d = self.extreme_dist_to((center, 0.0), tol.min(1e-6), true);
        d <= radius + tol
    }

    /// Extreme (max or min) distance from a fixed point `p` to the region.
    /// Returns +inf for an unbounded maximum, and the distance within `tol`
    /// otherwise. An empty region yields 0 for the max and +inf for the min.
    pub(crate) fn extreme_dist_to(&self, p: (f64, f64), tol: f64, maximize: bool) -> f64 {
        if maximize && self.contains_infinity() {
            return f64::INFINITY;
        }
        match &self.repr {
            Repr::Symbolic(n) => symbolic_extreme_dist(n, p, tol, maximize),
            Repr::Sampled(s) => sampled_extreme_dist(s, p, tol, maximize),
        }
    }

    // ---- serialization ---------------------------------------------------

    /// Line-oriented prefix text form. Only symbolic regions serialize.
    pub fn to_text(&self) -> Result<String> {
        match &self.repr {
            Repr::Symbolic(n) => Ok(serial::to_text_node(n)),
            Repr::Sampled(_) => Err(SrgError::UnsupportedForm(
                "sampled regions have no text form".into(),
            )),
        }
    }

    pub fn from_text(text: &str) -> Result<Region> {
        serial::from_text(text)
    }

    /// Upper bound on the circle number: the primitive count of a pure
    /// intersection tree of disks, half-planes, and disk exteriors.
    pub fn intersection_primitive_count(&self) -> Result<usize> {
        match &self.repr {
            Repr::Symbolic(n) => n.intersection_primitive_count().ok_or_else(|| {
                SrgError::UnsupportedForm(
                    "circle number needs an intersection of disks and half-planes".into(),
                )
            }),
            Repr::Sampled(_) => Err(SrgError::UnsupportedForm(
                "circle number is undefined for sampled regions".into(),
            )),
        }
    }
}

// ---- symbolic extreme-distance sweep -------------------------------------

/// Exact candidates along one ray: interval endpoints of the region's
/// intersection with the ray from the origin at angle `phi`.
fn ray_endpoints(n: &Node, phi: f64, clip: f64) -> Vec<f64> {
    let dir = (phi.cos(), phi.sin());
    match n.line_intervals((0.0, 0.0), dir) {
        Some(ivs) => {
            let ray = intervals::clamp_nonnegative(&ivs);
            let mut out = Vec::with_capacity(ray.len() * 2);
            for (lo, hi) in ray {
                out.push(lo);
                out.push(if hi.is_finite() { hi } else { clip });
            }
            out
        }
        None => fallback_ray_endpoints(n, phi, clip),
    }
}

/// Membership-march fallback for subtrees without closed-form intervals
/// (shifted or inverted cardioids). Boundaries are refined by bisection.
fn fallback_ray_endpoints(n: &Node, phi: f64, clip: f64) -> Vec<f64> {
    const STEPS: usize = 1024;
    let member = |t: f64| n.contains(&XComplex::from_polar(t, phi));
    let mut out = Vec::new();
    let mut prev = member(0.0);
    if prev {
        out.push(0.0);
    }
    for i in 1..=STEPS {
        let t = clip * (i as f64) / (STEPS as f64);
        let cur = member(t);
        if cur != prev {
            let (mut a, mut b) = (clip * ((i - 1) as f64) / (STEPS as f64), t);
            for _ in 0..50 {
                let m = 0.5 * (a + b);
                if member(m) == prev {
                    a = m;
                } else {
                    b = m;
                }
            }
            out.push(0.5 * (a + b));
            prev = cur;
        }
    }
    if prev {
        out.push(clip);
    }
    out
}

fn symbolic_extreme_dist(n: &Node, p: (f64, f64), tol: f64, maximize: bool) -> f64 {
    let worst = if maximize { 0.0 } else { f64::INFINITY };
    let better = |a: f64, b: f64| if maximize { a.max(b) } else { a.min(b) };

    // Unbounded trees only arise alongside infinity, which the caller has
    // already handled for the max; for the min an unbounded tail is harmless.
    let (rmin, rmax) = n.annulus();
    let clip = if rmax.is_finite() { rmax * 1.0001 + 1.0 } else { UNBOUNDED_CLIP.max(rmin + 1.0) };

    // Explicit points are candidates of their own.
    let mut best = worst;
    let mut pts = Vec::new();
    n.collect_points(&mut pts);
    for q in &pts {
        if let XComplex::Finite { re, im } = q {
            best = better(best, (re - p.0).hypot(*im));
        }
    }

    // Distance to a point on the ray at angle phi is convex in the radius,
    // so extremes over each ray sit at interval endpoints (for the max) or
    // at endpoints and the foot of the perpendicular (for the min).
    let eval_angle = |phi: f64| -> f64 {
        let ends = ray_endpoints(n, phi, clip);
        if ends.is_empty() {
            return worst;
        }
        let dir = (phi.cos(), phi.sin());
        let dist = |t: f64| (t * dir.0 - p.0).hypot(t * dir.1 - p.1);
        let mut acc = worst;
        for &t in &ends {
            acc = better(acc, dist(t));
        }
        if !maximize {
            // Interior minimum candidate: projection of p onto the ray.
            let tp = p.0 * dir.0 + p.1 * dir.1;
            if tp > 0.0 {
                let ivs = match n.line_intervals((0.0, 0.0), dir) {
                    Some(ivs) => intervals::clamp_nonnegative(&ivs),
                    None => ends.chunks(2).map(|c| (c[0], *c.last().unwrap())).collect(),
                };
                if intervals::contains(&ivs, tp, 0.0) {
                    acc = acc.min(dist(tp));
                }
            }
        }
        acc
    };

    const COARSE: usize = 1024;
    let vals = exec::par_map_indexed(COARSE + 1, |i| eval_angle(PI * i as f64 / COARSE as f64));

    let mut order: Vec<usize> = (0..=COARSE).collect();
    order.sort_by(|&a, &b| {
        if maximize {
            vals[b].partial_cmp(&vals[a]).unwrap()
        } else {
            vals[a].partial_cmp(&vals[b]).unwrap()
        }
    });
    for &i in order.iter().take(8) {
        best = better(best, vals[i]);
        let mut lo = PI * (i.saturating_sub(1)) as f64 / COARSE as f64;
        let mut hi = PI * ((i + 1).min(COARSE)) as f64 / COARSE as f64;
        for _ in 0..40 {
            if hi - lo < 1e-13 {
                break;
            }
            let mut bphi = lo;
            let mut bval = worst;
            for k in 0..=16 {
                let phi = lo + (hi - lo) * k as f64 / 16.0;
                let v = eval_angle(phi);
                if better(v, bval) == v {
                    bval = v;
                    bphi = phi;
                }
            }
            best = better(best, bval);
            let w = (hi - lo) / 8.0;
            lo = (bphi - w).max(lo);
            hi = (bphi + w).min(hi);
        }
    }
    let _ = tol;
    best
}

// ---- sampled extreme-distance sweep ---------------------------------------

fn sampled_extreme_dist(s: &Sampled, p: (f64, f64), tol: f64, maximize: bool) -> f64 {
    let worst = if maximize { 0.0 } else { f64::INFINITY };
    let better = |a: f64, b: f64| if maximize { a.max(b) } else { a.min(b) };
    let rmax = if s.rmax.is_finite() { s.rmax } else { UNBOUNDED_CLIP.max(s.rmin + 1.0) };
    let rmin = s.rmin.min(rmax);

    let n_ang = 256usize;
    let n_r = (((rmax - rmin) / s.resolution).ceil() as usize).clamp(64, 800);

    let scan = |n_ang: usize, n_r: usize, philo: f64, phihi: f64| -> (f64, f64) {
        let per_angle = exec::par_map_indexed(n_ang + 1, |i| {
            let phi = philo + (phihi - philo) * i as f64 / n_ang as f64;
            let (c, s_) = (phi.cos(), phi.sin());
            let mut acc = worst;
            for j in 0..=n_r {
                let r = rmin + (rmax - rmin) * j as f64 / n_r as f64;
                if (s.oracle)(r * c, (r * s_).abs()) {
                    let d = (r * c - p.0).hypot(r * s_ - p.1);
                    acc = better(acc, d);
                }
            }
            (acc, phi)
        });
        per_angle
            .into_iter()
            .fold((worst, philo), |a, b| if better(a.0, b.0) == a.0 { a } else { b })
    };

    let (mut best, mut bphi) = scan(n_ang, n_r, 0.0, PI);
    // Refine around the best angle until the estimate stops moving by tol.
    let mut window = PI / n_ang as f64;
    for _ in 0..12 {
        let (v, phi) = scan(24, (n_r * 2).min(4000), (bphi - window).max(0.0), (bphi + window).min(PI));
        let improved = better(v, best) == v && (v - best).abs() > tol * 0.01;
        best = better(best, v);
        bphi = phi;
        window /= 3.0;
        if !improved && window < 1e-6 {
            break;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(re: f64, im: f64) -> XComplex {
        XComplex::finite(re, im)
    }

    #[test]
    fn contains_examples() {
        let d = Region::disk(0.0, 1.0).unwrap();
        assert!(d.contains(&z(1.0, 0.0)));
        let m = Region::halfplane_ge(0.0).unwrap();
        assert!(m.contains(&XComplex::Infinity));
        let c = Region::cardioid(0.0, 1.0, 1).unwrap();
        assert!(c.contains(&XComplex::from_polar(0.5, std::f64::consts::FRAC_PI_2)));
    }

    #[test]
    fn affine_examples() {
        // Disk(1/2, 1/2) under 2z - 1 is the unit disk.
        let d = Region::disk(0.5, 0.5).unwrap().affine(2.0, -1.0).unwrap();
        assert_eq!(d.to_text().unwrap(), "DISK 0 1");
        // Half-plane under positive scaling and shift.
        let h = Region::halfplane_ge(0.75)
            .unwrap()
            .affine(2.0, 1.0)
            .unwrap();
        assert_eq!(h.to_text().unwrap(), "HALFPLANE_GE 2.5");
        assert!(h.contains(&XComplex::Infinity));
        // alpha = 0 is rejected.
        assert!(Region::disk(0.0, 1.0).unwrap().affine(0.0, 1.0).is_err());
    }

    #[test]
    fn invert_resolvent_geometry() {
        // Re z >= 1 + alpha*mu inverts to the disk spanning [0, 1/(1+alpha*mu)].
        let alpha_mu = 1.0;
        let h = Region::halfplane_ge(1.0 + alpha_mu).unwrap();
        let d = h.invert();
        let s = d.to_text().unwrap();
        assert_eq!(s, "DISK 0.25 0.25");
    }

    #[test]
    fn sup_modulus_closed_forms() {
        let d = Region::disk(0.125, 0.875).unwrap();
        assert!((d.sup_modulus(1e-6) - 1.0).abs() < 1e-9);
        let p = Region::points(vec![XComplex::ZERO]).unwrap();
        assert!(p.sup_modulus(1e-6).abs() < 1e-12);
        let h = Region::halfplane_ge(0.0).unwrap();
        assert!(h.sup_modulus(1e-6).is_infinite());
    }

    #[test]
    fn sup_modulus_crescent_matches_pythagoras() {
        // {Re z <= 1 - alpha*mu} intersect {|z - 1| <= alpha*L} has
        // sup|z| = sqrt(1 - 2 alpha mu + alpha^2 L^2).
        let (alpha, mu, l) = (0.4, 1.0, 2.0);
        let crescent = Region::halfplane_le(1.0 - alpha * mu)
            .unwrap()
            .intersect(&Region::disk(1.0, alpha * l).unwrap());
        let want = (1.0 - 2.0 * alpha * mu + alpha * alpha * l * l).sqrt();
        assert!((crescent.sup_modulus(1e-6) - want).abs() < 1e-9);
    }

    #[test]
    fn subset_of_disk_examples() {
        let d = Region::disk(0.125, 0.875).unwrap();
        assert!(d.subset_of_disk(0.125, 0.875, 1e-9));
        let card = Region::cardioid(0.0, 1.0, 1).unwrap();
        assert!(card.subset_of_disk(1.0 / 3.0, 2.0 / 3.0, 1e-9));
        assert!(!card.subset_of_disk(1.0 / 3.0, 2.0 / 3.0 - 1e-3, 1e-6));
        let h = Region::halfplane_ge(0.0).unwrap();
        assert!(!h.subset_of_disk(0.0, 100.0, 1e-9));
    }

    #[test]
    fn inf_modulus_of_inverted_region() {
        let d = Region::disk(3.0, 1.0).unwrap();
        let inv = d.invert();
        let sup_inv = inv.sup_modulus(1e-9);
        let inf_d = d.inf_modulus(1e-9);
        assert!((sup_inv - 1.0 / inf_d).abs() < 1e-9);
    }

    #[test]
    fn asymmetric_points_rejected() {
        assert!(Region::points(vec![z(0.0, 1.0)]).is_err());
        assert!(Region::points(vec![z(0.0, 1.0), z(0.0, -1.0)]).is_ok());
    }

    #[test]
    fn sampled_agrees_with_symbolic_disk() {
        let sym = Region::disk(0.5, 0.5).unwrap();
        let smp = Region::from_oracle(
            |re, im| (re - 0.5).hypot(im) <= 0.5,
            (0.0, 1.0),
            false,
            1e-3,
        )
        .unwrap();
        for i in 0..50 {
            for j in 0..50 {
                let p = z(-0.2 + 1.4 * i as f64 / 49.0, -0.7 + 1.4 * j as f64 / 49.0);
                assert_eq!(sym.contains(&p), smp.contains(&p), "at {p:?}");
            }
        }
        assert!((smp.sup_modulus(1e-3) - 1.0).abs() < 5e-3);
    }
}
