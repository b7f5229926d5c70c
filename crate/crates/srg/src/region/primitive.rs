//! Region primitives and their exact transformations.
//!
//! Every primitive is symmetric about the real axis: disk and
//! disk-exterior centers are real, half-plane boundaries are vertical,
//! cardioids sit on the real axis, and point lists must be closed under
//! conjugation. All sets are closed; boundary membership uses an absolute
//! tolerance of `BOUNDARY_TOL`.
//!
//! Inversion (`z -> conj(z)^{-1}`) is exact on generalized circles via their
//! signed real-axis intersections: a boundary meeting the real axis at the
//! signed pair `(x, y)` maps to the boundary meeting it at `(1/y, 1/x)`, with
//! the interior side fixed by mapping one interior witness.

use super::intervals::Iv;
use crate::xcomplex::XComplex;

/// Absolute tolerance for closed-set boundary membership.
pub const BOUNDARY_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub enum Primitive {
    /// Closed disk centered on the real axis. Does not contain infinity.
    Disk { center: f64, radius: f64 },
    /// Closed exterior of a disk centered on the real axis; contains infinity.
    DiskExterior { center: f64, radius: f64 },
    /// Closed half-plane `Re z >= a`, together with infinity.
    HalfPlaneGE(f64),
    /// Closed half-plane `Re z <= a`, together with infinity.
    HalfPlaneLE(f64),
    /// `origin + orientation * scale * {r e^{i phi} : 0 <= r <= cos^2(phi/2)}`.
    /// Does not contain infinity.
    Cardioid {
        origin: f64,
        scale: f64,
        orientation: i8,
    },
    /// A finite list of points, closed under conjugation; may list infinity.
    Points(Vec<XComplex>),
    Empty,
    Full,
}

impl Primitive {
    pub fn contains(&self, z: &XComplex) -> bool {
        match self {
            Primitive::Disk { center, radius } => match z {
                XComplex::Finite { re, im } => {
                    (re - center).hypot(*im) <= radius + BOUNDARY_TOL
                }
                XComplex::Infinity => false,
            },
            Primitive::DiskExterior { center, radius } => match z {
                XComplex::Finite { re, im } => {
                    (re - center).hypot(*im) >= radius - BOUNDARY_TOL
                }
                XComplex::Infinity => true,
            },
            Primitive::HalfPlaneGE(a) => match z {
                XComplex::Finite { re, .. } => *re >= a - BOUNDARY_TOL,
                XComplex::Infinity => true,
            },
            Primitive::HalfPlaneLE(a) => match z {
                XComplex::Finite { re, .. } => *re <= a + BOUNDARY_TOL,
                XComplex::Infinity => true,
            },
            Primitive::Cardioid {
                origin,
                scale,
                orientation,
            } => match z {
                XComplex::Finite { re, im } => {
                    // w = orientation * (z - origin) / scale, then
                    // |w| <= cos^2(arg(w)/2), i.e. 2|w|^2 - |w| - Re w <= 0.
                    let wr = f64::from(*orientation) * (re - origin) / scale;
                    let wi = f64::from(*orientation) * im / scale;
                    let r = wr.hypot(wi);
                    2.0 * r * r - r - wr <= BOUNDARY_TOL / scale
                }
                XComplex::Infinity => false,
            },
            Primitive::Points(pts) => pts.iter().any(|p| p.dist(z) <= BOUNDARY_TOL),
            Primitive::Empty => false,
            Primitive::Full => true,
        }
    }

    pub fn contains_infinity(&self) -> bool {
        match self {
            Primitive::DiskExterior { .. }
            | Primitive::HalfPlaneGE(_)
            | Primitive::HalfPlaneLE(_)
            | Primitive::Full => true,
            Primitive::Points(pts) => pts.iter().any(|p| p.is_infinity()),
            _ => false,
        }
    }

    /// Image under `z -> alpha z + beta` with real `alpha != 0`.
    /// Exact on every primitive.
    pub fn affine(&self, alpha: f64, beta: f64) -> Primitive {
        match self {
            Primitive::Disk { center, radius } => Primitive::Disk {
                center: alpha * center + beta,
                radius: alpha.abs() * radius,
            },
            Primitive::DiskExterior { center, radius } => Primitive::DiskExterior {
                center: alpha * center + beta,
                radius: alpha.abs() * radius,
            },
            Primitive::HalfPlaneGE(a) => {
                if alpha > 0.0 {
                    Primitive::HalfPlaneGE(alpha * a + beta)
                } else {
                    Primitive::HalfPlaneLE(alpha * a + beta)
                }
            }
            Primitive::HalfPlaneLE(a) => {
                if alpha > 0.0 {
                    Primitive::HalfPlaneLE(alpha * a + beta)
                } else {
                    Primitive::HalfPlaneGE(alpha * a + beta)
                }
            }
            Primitive::Cardioid {
                origin,
                scale,
                orientation,
            } => Primitive::Cardioid {
                origin: alpha * origin + beta,
                scale: alpha.abs() * scale,
                orientation: orientation * (alpha.signum() as i8),
            },
            Primitive::Points(pts) => {
                Primitive::Points(pts.iter().map(|p| p.affine(alpha, beta)).collect())
            }
            Primitive::Empty => Primitive::Empty,
            Primitive::Full => Primitive::Full,
        }
    }

    /// Image under inversion `z -> conj(z)^{-1}`.
    /// `None` for the cardioid, which leaves the generalized-circle family.
    pub fn invert(&self) -> Option<Primitive> {
        let near_zero = |t: f64| t.abs() <= BOUNDARY_TOL;
        match self {
            Primitive::Disk { center, radius } => {
                let (x, y) = (center - radius, center + radius);
                if near_zero(x) || near_zero(y) {
                    // Boundary through the origin: the image boundary is the
                    // vertical line at the inverse of the nonzero crossing.
                    let a = 1.0 / if near_zero(x) { y } else { x };
                    let witness = 1.0 / center; // center != 0 here
                    Some(if witness >= a {
                        Primitive::HalfPlaneGE(a)
                    } else {
                        Primitive::HalfPlaneLE(a)
                    })
                } else {
                    let (u, v) = (1.0 / x, 1.0 / y);
                    let (lo, hi) = (u.min(v), u.max(v));
                    let (c, r) = ((lo + hi) / 2.0, (hi - lo) / 2.0);
                    if center.abs() < radius - BOUNDARY_TOL {
                        // Origin strictly inside: the image wraps infinity.
                        Some(Primitive::DiskExterior { center: c, radius: r })
                    } else {
                        Some(Primitive::Disk { center: c, radius: r })
                    }
                }
            }
            Primitive::DiskExterior { center, radius } => {
                let (x, y) = (center - radius, center + radius);
                if near_zero(x) || near_zero(y) {
                    let a = 1.0 / if near_zero(x) { y } else { x };
                    // The exterior contains infinity, so the image contains 0.
                    Some(if 0.0 >= a {
                        Primitive::HalfPlaneGE(a)
                    } else {
                        Primitive::HalfPlaneLE(a)
                    })
                } else {
                    let (u, v) = (1.0 / x, 1.0 / y);
                    let (lo, hi) = (u.min(v), u.max(v));
                    let (c, r) = ((lo + hi) / 2.0, (hi - lo) / 2.0);
                    if center.abs() < radius - BOUNDARY_TOL {
                        Some(Primitive::Disk { center: c, radius: r })
                    } else {
                        Some(Primitive::DiskExterior { center: c, radius: r })
                    }
                }
            }
            Primitive::HalfPlaneGE(a) => {
                if near_zero(*a) {
                    Some(Primitive::HalfPlaneGE(0.0))
                } else if *a > 0.0 {
                    Some(Primitive::Disk {
                        center: 0.5 / a,
                        radius: 0.5 / a,
                    })
                } else {
                    Some(Primitive::DiskExterior {
                        center: 0.5 / a,
                        radius: -0.5 / a,
                    })
                }
            }
            Primitive::HalfPlaneLE(a) => {
                if near_zero(*a) {
                    Some(Primitive::HalfPlaneLE(0.0))
                } else if *a < 0.0 {
                    Some(Primitive::Disk {
                        center: 0.5 / a,
                        radius: -0.5 / a,
                    })
                } else {
                    Some(Primitive::DiskExterior {
                        center: 0.5 / a,
                        radius: 0.5 / a,
                    })
                }
            }
            Primitive::Cardioid { .. } => None,
            Primitive::Points(pts) => {
                Some(Primitive::Points(pts.iter().map(|p| p.invert()).collect()))
            }
            Primitive::Empty => Some(Primitive::Empty),
            Primitive::Full => Some(Primitive::Full),
        }
    }

    /// Intersection of the primitive with the line `origin + t * dir`,
    /// `|dir| = 1`, as closed intervals in `t`. `None` when no closed form
    /// exists (cardioids away from the origin, point lists).
    pub fn line_intervals(&self, origin: (f64, f64), dir: (f64, f64)) -> Option<Vec<Iv>> {
        const INF: f64 = f64::INFINITY;
        match self {
            Primitive::Disk { center, radius } => {
                Some(disk_line(origin, dir, *center, *radius))
            }
            Primitive::DiskExterior { center, radius } => {
                let inner = disk_line(origin, dir, *center, *radius);
                Some(complement_on_line(&inner))
            }
            Primitive::HalfPlaneGE(a) => Some(halfplane_line(origin, dir, *a, true)),
            Primitive::HalfPlaneLE(a) => Some(halfplane_line(origin, dir, *a, false)),
            Primitive::Cardioid {
                origin: o,
                scale,
                orientation,
            } => {
                // Closed form only for lines through the cardioid's own
                // origin. The set is star-shaped about that origin, so the
                // intersection is one interval straddling t = 0, with the
                // boundary radius cos^2(phi/2) (right-facing) or
                // sin^2(phi/2) (left-facing) in each direction.
                if origin.0 == 0.0 && origin.1 == 0.0 && *o == 0.0 {
                    let phi = dir.1.atan2(dir.0);
                    let bound = |ang: f64| {
                        if *orientation == 1 {
                            scale * (ang / 2.0).cos().powi(2)
                        } else {
                            scale * (ang / 2.0).sin().powi(2)
                        }
                    };
                    Some(vec![(-bound(phi + std::f64::consts::PI), bound(phi))])
                } else {
                    None
                }
            }
            Primitive::Points(_) => None,
            Primitive::Empty => Some(Vec::new()),
            Primitive::Full => Some(vec![(-INF, INF)]),
        }
    }

    /// Loose modulus bounds `(rmin, rmax)`: `rmin` never exceeds the true
    /// minimum modulus and `rmax` never undercuts the true maximum.
    pub fn annulus(&self) -> (f64, f64) {
        const INF: f64 = f64::INFINITY;
        match self {
            Primitive::Disk { center, radius } => {
                ((center.abs() - radius).max(0.0), center.abs() + radius)
            }
            Primitive::DiskExterior { center, radius } => {
                ((radius - center.abs()).max(0.0), INF)
            }
            Primitive::HalfPlaneGE(a) => (a.max(0.0), INF),
            Primitive::HalfPlaneLE(a) => ((-a).max(0.0), INF),
            Primitive::Cardioid { origin, scale, .. } => {
                // Contains its own origin (the cusp), spans at most
                // |origin| + scale from zero.
                (
                    (origin.abs() - scale).max(0.0).min(origin.abs()),
                    origin.abs() + scale,
                )
            }
            Primitive::Points(pts) => {
                let mut lo = INF;
                let mut hi: f64 = 0.0;
                for p in pts {
                    let m = p.modulus();
                    lo = lo.min(m);
                    hi = hi.max(m);
                }
                if pts.is_empty() {
                    (0.0, 0.0)
                } else {
                    (lo.min(hi), hi)
                }
            }
            Primitive::Empty => (0.0, 0.0),
            Primitive::Full => (0.0, INF),
        }
    }
}

fn disk_line(origin: (f64, f64), dir: (f64, f64), center: f64, radius: f64) -> Vec<Iv> {
    // |origin + t dir - center|^2 <= radius^2, |dir| = 1.
    let ox = origin.0 - center;
    let oy = origin.1;
    let b = ox * dir.0 + oy * dir.1;
    let c = ox * ox + oy * oy - radius * radius;
    let disc = b * b - c;
    if disc < 0.0 {
        Vec::new()
    } else {
        let s = disc.sqrt();
        vec![(-b - s, -b + s)]
    }
}

fn complement_on_line(ivs: &[Iv]) -> Vec<Iv> {
    const INF: f64 = f64::INFINITY;
    if ivs.is_empty() {
        return vec![(-INF, INF)];
    }
    // Inputs from disk_line are a single interval.
    let (lo, hi) = ivs[0];
    vec![(-INF, lo), (hi, INF)]
}

fn halfplane_line(origin: (f64, f64), dir: (f64, f64), a: f64, ge: bool) -> Vec<Iv> {
    const INF: f64 = f64::INFINITY;
    // Re(origin + t dir) >= a  (or <= a).
    let (o, d) = (origin.0, dir.0);
    if d.abs() < 1e-300 {
        let on_side = if ge { o >= a - BOUNDARY_TOL } else { o <= a + BOUNDARY_TOL };
        return if on_side { vec![(-INF, INF)] } else { Vec::new() };
    }
    let t0 = (a - o) / d;
    let right_of_t0 = (d > 0.0) == ge;
    if right_of_t0 {
        vec![(t0, INF)]
    } else {
        vec![(-INF, t0)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn disk(c: f64, r: f64) -> Primitive {
        Primitive::Disk { center: c, radius: r }
    }

    #[test]
    fn unit_disk_boundary_membership() {
        assert!(disk(0.0, 1.0).contains(&XComplex::ONE));
        assert!(!disk(0.0, 1.0).contains(&XComplex::finite(1.0 + 1e-9, 0.0)));
    }

    #[test]
    fn cardioid_boundary_point() {
        let c = Primitive::Cardioid {
            origin: 0.0,
            scale: 1.0,
            orientation: 1,
        };
        // At phi = pi/2 the boundary radius is cos^2(pi/4) = 1/2.
        let z = XComplex::from_polar(0.5, std::f64::consts::FRAC_PI_2);
        assert!(c.contains(&z));
        let outside = XComplex::from_polar(0.5 + 1e-6, std::f64::consts::FRAC_PI_2);
        assert!(!c.contains(&outside));
        // Cusp at the origin, rightmost point 1.
        assert!(c.contains(&XComplex::ZERO));
        assert!(c.contains(&XComplex::ONE));
        assert!(!c.contains(&XComplex::finite(-1e-6, 0.0)));
    }

    #[test]
    fn invert_halfplane_to_disk() {
        // Re z >= a (a > 0) inverts to the disk spanning [0, 1/a].
        let inv = Primitive::HalfPlaneGE(2.0).invert().unwrap();
        assert_eq!(inv, disk(0.25, 0.25));
    }

    #[test]
    fn invert_unit_disk_to_exterior() {
        let inv = disk(0.0, 1.0).invert().unwrap();
        assert_eq!(
            inv,
            Primitive::DiskExterior { center: 0.0, radius: 1.0 }
        );
    }

    #[test]
    fn invert_offset_disk_matches_boundary_fit() {
        // Disk(2, 0.5) has real crossings 1.5 and 2.5; its inverse spans
        // [0.4, 2/3]: center 8/15, radius 2/15.
        let inv = disk(2.0, 0.5).invert().unwrap();
        match inv {
            Primitive::Disk { center, radius } => {
                assert!((center - 8.0 / 15.0).abs() < 1e-15);
                assert!((radius - 2.0 / 15.0).abs() < 1e-15);
            }
            other => panic!("expected disk, got {other:?}"),
        }
    }

    #[test]
    fn invert_is_involution_on_circle_primitives() {
        let prims = [
            disk(2.0, 0.5),
            disk(0.0, 1.0),
            Primitive::DiskExterior { center: 1.0, radius: 2.0 },
            Primitive::HalfPlaneGE(1.5),
            Primitive::HalfPlaneLE(-0.25),
            Primitive::HalfPlaneGE(0.0),
        ];
        for p in prims {
            let back = p.invert().unwrap().invert().unwrap();
            match (&p, &back) {
                (
                    Primitive::Disk { center: c1, radius: r1 },
                    Primitive::Disk { center: c2, radius: r2 },
                )
                | (
                    Primitive::DiskExterior { center: c1, radius: r1 },
                    Primitive::DiskExterior { center: c2, radius: r2 },
                ) => {
                    assert!((c1 - c2).abs() < 1e-12 && (r1 - r2).abs() < 1e-12);
                }
                (Primitive::HalfPlaneGE(a1), Primitive::HalfPlaneGE(a2))
                | (Primitive::HalfPlaneLE(a1), Primitive::HalfPlaneLE(a2)) => {
                    assert!((a1 - a2).abs() < 1e-12);
                }
                (p, b) => panic!("involution changed shape: {p:?} -> {b:?}"),
            }
        }
    }
}
