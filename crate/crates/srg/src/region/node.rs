//! Symbolic region trees.
//!
//! A tree is unions and intersections over primitives, with two unresolved
//! wrapper nodes. Affine maps and inversions are applied eagerly: they push
//! through unions and intersections and resolve exactly on every primitive
//! except the cardioid under inversion, so after simplification wrappers
//! appear only around cardioid-rooted subtrees.

use super::intervals::{self, Iv};
use super::primitive::{Primitive, BOUNDARY_TOL};
use crate::xcomplex::XComplex;

#[derive(Clone, Debug, PartialEq)]
pub enum Node {
    Prim(Primitive),
    Union(Box<Node>, Box<Node>),
    Intersection(Box<Node>, Box<Node>),
    /// `alpha * inner + beta`; only wraps cardioid-rooted subtrees.
    Affine {
        alpha: f64,
        beta: f64,
        inner: Box<Node>,
    },
    /// `conj(inner)^{-1}`; only wraps cardioid-rooted subtrees.
    Invert(Box<Node>),
}

impl Node {
    pub fn contains(&self, z: &XComplex) -> bool {
        match self {
            Node::Prim(p) => p.contains(z),
            Node::Union(a, b) => a.contains(z) || b.contains(z),
            Node::Intersection(a, b) => a.contains(z) && b.contains(z),
            Node::Affine { alpha, beta, inner } => match z {
                XComplex::Infinity => inner.contains(z),
                XComplex::Finite { re, im } => {
                    inner.contains(&XComplex::finite((re - beta) / alpha, im / alpha))
                }
            },
            Node::Invert(inner) => inner.contains(&z.invert()),
        }
    }

    pub fn contains_infinity(&self) -> bool {
        match self {
            Node::Prim(p) => p.contains_infinity(),
            Node::Union(a, b) => a.contains_infinity() || b.contains_infinity(),
            Node::Intersection(a, b) => a.contains_infinity() && b.contains_infinity(),
            Node::Affine { inner, .. } => inner.contains_infinity(),
            Node::Invert(inner) => inner.contains(&XComplex::ZERO),
        }
    }

    /// Apply `z -> alpha z + beta` (`alpha != 0`), simplifying as it goes.
    pub fn affine(&self, alpha: f64, beta: f64) -> Node {
        match self {
            Node::Prim(p) => Node::Prim(p.affine(alpha, beta)),
            Node::Union(a, b) => union(a.affine(alpha, beta), b.affine(alpha, beta)),
            Node::Intersection(a, b) => {
                intersection(a.affine(alpha, beta), b.affine(alpha, beta))
            }
            Node::Affine {
                alpha: a2,
                beta: b2,
                inner,
            } => Node::Affine {
                alpha: alpha * a2,
                beta: alpha * b2 + beta,
                inner: inner.clone(),
            },
            Node::Invert(inner) => Node::Affine {
                alpha,
                beta,
                inner: Box::new(Node::Invert(inner.clone())),
            },
        }
    }

    /// Apply the inversion map, simplifying as it goes.
    pub fn invert(&self) -> Node {
        match self {
            Node::Prim(p) => match p.invert() {
                Some(q) => Node::Prim(q),
                None => Node::Invert(Box::new(Node::Prim(p.clone()))),
            },
            Node::Union(a, b) => union(a.invert(), b.invert()),
            Node::Intersection(a, b) => intersection(a.invert(), b.invert()),
            Node::Invert(inner) => (**inner).clone(),
            other @ Node::Affine { .. } => Node::Invert(Box::new(other.clone())),
        }
    }

    /// Exact intersection with the line `origin + t * dir` (`|dir| = 1`) as
    /// closed `t`-intervals; `None` when some subtree has no closed form.
    pub fn line_intervals(&self, origin: (f64, f64), dir: (f64, f64)) -> Option<Vec<Iv>> {
        match self {
            Node::Prim(p) => p.line_intervals(origin, dir),
            Node::Union(a, b) => Some(intervals::union(
                &a.line_intervals(origin, dir)?,
                &b.line_intervals(origin, dir)?,
            )),
            Node::Intersection(a, b) => Some(intervals::intersect(
                &a.line_intervals(origin, dir)?,
                &b.line_intervals(origin, dir)?,
            )),
            // Inversion preserves rays through the origin, so intervals along
            // such rays map exactly; other lines have no closed form.
            Node::Invert(inner) => {
                if origin.0 == 0.0 && origin.1 == 0.0 {
                    let inner_ivs = inner.line_intervals(origin, dir)?;
                    let ray = intervals::clamp_nonnegative(&inner_ivs);
                    let mut out = intervals::invert_nonnegative(&ray);
                    // Infinity in the inner set maps to t = 0.
                    if inner.contains_infinity() {
                        out.push((0.0, 0.0));
                        intervals::normalize(&mut out);
                    }
                    Some(out)
                } else {
                    None
                }
            }
            Node::Affine { .. } => None,
        }
    }

    /// Loose modulus bounds `(rmin, rmax)`.
    pub fn annulus(&self) -> (f64, f64) {
        match self {
            Node::Prim(p) => p.annulus(),
            Node::Union(a, b) => {
                let (l1, h1) = a.annulus();
                let (l2, h2) = b.annulus();
                (l1.min(l2), h1.max(h2))
            }
            Node::Intersection(a, b) => {
                let (l1, h1) = a.annulus();
                let (l2, h2) = b.annulus();
                (l1.max(l2), h1.min(h2))
            }
            Node::Affine { alpha, beta, inner } => {
                let (lo, hi) = inner.annulus();
                let a = alpha.abs();
                let b = beta.abs();
                let hi2 = if hi.is_infinite() { hi } else { a * hi + b };
                let lo2 = (a * lo - b).max(b - a * hi).max(0.0);
                (lo2, hi2)
            }
            Node::Invert(inner) => {
                let (lo, hi) = inner.annulus();
                let lo2 = if hi.is_infinite() { 0.0 } else if hi == 0.0 { f64::INFINITY } else { 1.0 / hi };
                let hi2 = if lo == 0.0 { f64::INFINITY } else { 1.0 / lo };
                (lo2, hi2)
            }
        }
    }

    /// True when the tree is literally the empty primitive after
    /// simplification rules have been applied during construction.
    pub fn is_empty_literal(&self) -> bool {
        matches!(self, Node::Prim(Primitive::Empty))
    }

    /// Count disk / half-plane / disk-exterior primitives in a pure
    /// intersection tree. `None` for any other form.
    pub fn intersection_primitive_count(&self) -> Option<usize> {
        match self {
            Node::Prim(Primitive::Full) => Some(0),
            Node::Prim(
                Primitive::Disk { .. }
                | Primitive::DiskExterior { .. }
                | Primitive::HalfPlaneGE(_)
                | Primitive::HalfPlaneLE(_),
            ) => Some(1),
            Node::Intersection(a, b) => Some(
                a.intersection_primitive_count()? + b.intersection_primitive_count()?,
            ),
            _ => None,
        }
    }

    /// All explicitly listed points in the tree (for grid seeding).
    pub fn collect_points(&self, out: &mut Vec<XComplex>) {
        match self {
            Node::Prim(Primitive::Points(pts)) => out.extend(pts.iter().copied()),
            Node::Union(a, b) | Node::Intersection(a, b) => {
                a.collect_points(out);
                b.collect_points(out);
            }
            _ => {}
        }
    }
}

/// Build a union with algebraic simplification.
pub fn union(a: Node, b: Node) -> Node {
    use Primitive::*;
    match (a, b) {
        (Node::Prim(Full), _) | (_, Node::Prim(Full)) => Node::Prim(Full),
        (Node::Prim(Empty), x) | (x, Node::Prim(Empty)) => x,
        (Node::Prim(Points(pts)), x) | (x, Node::Prim(Points(pts))) => {
            // Drop points the other side already covers.
            let rest: Vec<XComplex> = pts.into_iter().filter(|p| !x.contains(p)).collect();
            if rest.is_empty() {
                x
            } else {
                Node::Union(Box::new(x), Box::new(Node::Prim(Points(rest))))
            }
        }
        (Node::Prim(p), Node::Prim(q)) => match simplify_union_pair(&p, &q) {
            Some(s) => Node::Prim(s),
            None => Node::Union(Box::new(Node::Prim(p)), Box::new(Node::Prim(q))),
        },
        (a, b) => Node::Union(Box::new(a), Box::new(b)),
    }
}

/// Build an intersection with algebraic simplification.
pub fn intersection(a: Node, b: Node) -> Node {
    use Primitive::*;
    match (a, b) {
        (Node::Prim(Empty), _) | (_, Node::Prim(Empty)) => Node::Prim(Empty),
        (Node::Prim(Full), x) | (x, Node::Prim(Full)) => x,
        (Node::Prim(Points(pts)), x) | (x, Node::Prim(Points(pts))) => {
            let kept: Vec<XComplex> = pts.into_iter().filter(|p| x.contains(p)).collect();
            if kept.is_empty() {
                Node::Prim(Empty)
            } else {
                Node::Prim(Points(kept))
            }
        }
        (Node::Prim(p), Node::Prim(q)) => match simplify_intersection_pair(&p, &q) {
            Some(s) => s,
            None => Node::Intersection(Box::new(Node::Prim(p)), Box::new(Node::Prim(q))),
        },
        (a, b) => Node::Intersection(Box::new(a), Box::new(b)),
    }
}

fn simplify_union_pair(p: &Primitive, q: &Primitive) -> Option<Primitive> {
    use Primitive::*;
    match (p, q) {
        (Disk { center: c1, radius: r1 }, Disk { center: c2, radius: r2 }) => {
            if (c1 - c2).abs() + r1 <= r2 + BOUNDARY_TOL {
                Some(q.clone())
            } else if (c1 - c2).abs() + r2 <= r1 + BOUNDARY_TOL {
                Some(p.clone())
            } else {
                None
            }
        }
        (HalfPlaneGE(a), HalfPlaneGE(b)) => Some(HalfPlaneGE(a.min(*b))),
        (HalfPlaneLE(a), HalfPlaneLE(b)) => Some(HalfPlaneLE(a.max(*b))),
        _ => None,
    }
}

fn simplify_intersection_pair(p: &Primitive, q: &Primitive) -> Option<Node> {
    use Primitive::*;
    let prim = |x: Primitive| Some(Node::Prim(x));
    match (p, q) {
        (Disk { center: c1, radius: r1 }, Disk { center: c2, radius: r2 }) => {
            let d = (c1 - c2).abs();
            if d + r1 <= r2 + BOUNDARY_TOL {
                prim(p.clone())
            } else if d + r2 <= r1 + BOUNDARY_TOL {
                prim(q.clone())
            } else if d > r1 + r2 + BOUNDARY_TOL {
                prim(Empty)
            } else {
                None
            }
        }
        (Disk { center, radius }, HalfPlaneGE(a)) | (HalfPlaneGE(a), Disk { center, radius }) => {
            if center - radius >= a - BOUNDARY_TOL {
                prim(Disk { center: *center, radius: *radius })
            } else if center + radius < a - BOUNDARY_TOL {
                prim(Empty)
            } else {
                None
            }
        }
        (Disk { center, radius }, HalfPlaneLE(a)) | (HalfPlaneLE(a), Disk { center, radius }) => {
            if center + radius <= a + BOUNDARY_TOL {
                prim(Disk { center: *center, radius: *radius })
            } else if center - radius > a + BOUNDARY_TOL {
                prim(Empty)
            } else {
                None
            }
        }
        (Disk { center: c1, radius: r1 }, DiskExterior { center: c2, radius: r2 })
        | (DiskExterior { center: c2, radius: r2 }, Disk { center: c1, radius: r1 }) => {
            let d = (c1 - c2).abs();
            if d + r1 < r2 - BOUNDARY_TOL {
                // Disk strictly inside the removed part.
                prim(Empty)
            } else if d - r1 >= r2 - BOUNDARY_TOL {
                // Disk entirely outside the removed part.
                prim(Disk { center: *c1, radius: *r1 })
            } else {
                None
            }
        }
        (DiskExterior { center: c1, radius: r1 }, DiskExterior { center: c2, radius: r2 }) => {
            let d = (c1 - c2).abs();
            if d + r2 <= r1 + BOUNDARY_TOL {
                prim(DiskExterior { center: *c1, radius: *r1 })
            } else if d + r1 <= r2 + BOUNDARY_TOL {
                prim(DiskExterior { center: *c2, radius: *r2 })
            } else {
                None
            }
        }
        (HalfPlaneGE(a), HalfPlaneGE(b)) => prim(HalfPlaneGE(a.max(*b))),
        (HalfPlaneLE(a), HalfPlaneLE(b)) => prim(HalfPlaneLE(a.min(*b))),
        (HalfPlaneGE(a), HalfPlaneLE(b)) | (HalfPlaneLE(b), HalfPlaneGE(a)) => {
            if a > b + BOUNDARY_TOL {
                // Both half-planes carry infinity; the strip is empty.
                prim(Points(vec![XComplex::Infinity]))
            } else {
                None
            }
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn disk(c: f64, r: f64) -> Node {
        Node::Prim(Primitive::Disk { center: c, radius: r })
    }

    #[test]
    fn nested_disks_simplify_in_intersection() {
        // Disk(0, 0.75) sits inside Disk(0.125, 0.875).
        let n = intersection(disk(0.0, 0.75), disk(0.125, 0.875));
        assert_eq!(n, disk(0.0, 0.75));
    }

    #[test]
    fn full_is_identity_for_intersection() {
        let n = intersection(disk(0.3, 1.0), Node::Prim(Primitive::Full));
        assert_eq!(n, disk(0.3, 1.0));
    }

    #[test]
    fn disjoint_halfplanes_leave_infinity() {
        let n = intersection(
            Node::Prim(Primitive::HalfPlaneGE(2.0)),
            Node::Prim(Primitive::HalfPlaneLE(1.0)),
        );
        assert!(n.contains(&XComplex::Infinity));
        assert!(!n.contains(&XComplex::finite(1.5, 0.0)));
    }

    #[test]
    fn affine_pushes_through_and_absorbs() {
        // 2 * Disk(1/2, 1/2) - 1 = Disk(0, 1).
        let n = disk(0.5, 0.5).affine(2.0, -1.0);
        assert_eq!(n, disk(0.0, 1.0));
    }

    #[test]
    fn invert_distributes_over_intersection() {
        let lens = intersection(
            Node::Prim(Primitive::HalfPlaneGE(0.0)),
            disk(0.0, 1.0),
        );
        let inv = lens.invert();
        assert_eq!(inv.intersection_primitive_count(), Some(2));
        // z inside the lens maps to conj(z)^{-1} inside the image.
        let z = XComplex::from_polar(0.5, 0.7);
        assert!(lens.contains(&z));
        assert!(inv.contains(&z.invert()));
    }
}
