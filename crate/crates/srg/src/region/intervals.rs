//! Closed-interval lists on the real line.
//!
//! Used for exact intersections of regions with rays and lines. Intervals are
//! closed, sorted by left endpoint, and may extend to infinity on either side.

/// A closed interval `[lo, hi]`; `lo = -inf` and `hi = +inf` are allowed.
pub type Iv = (f64, f64);

const MERGE_EPS: f64 = 1e-14;

/// Sort and merge overlapping or touching intervals in place.
pub fn normalize(ivs: &mut Vec<Iv>) {
    ivs.retain(|&(lo, hi)| lo <= hi);
    ivs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let mut out: Vec<Iv> = Vec::with_capacity(ivs.len());
    for &(lo, hi) in ivs.iter() {
        match out.last_mut() {
            Some((_, phi)) if lo <= *phi + MERGE_EPS => {
                if hi > *phi {
                    *phi = hi;
                }
            }
            _ => out.push((lo, hi)),
        }
    }
    *ivs = out;
}

/// Union of two normalized lists.
pub fn union(a: &[Iv], b: &[Iv]) -> Vec<Iv> {
    let mut out: Vec<Iv> = a.iter().chain(b.iter()).copied().collect();
    normalize(&mut out);
    out
}

/// Intersection of two normalized lists.
pub fn intersect(a: &[Iv], b: &[Iv]) -> Vec<Iv> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let lo = a[i].0.max(b[j].0);
        let hi = a[i].1.min(b[j].1);
        if lo <= hi {
            out.push((lo, hi));
        }
        if a[i].1 < b[j].1 {
            i += 1;
        } else {
            j += 1;
        }
    }
    out
}

/// Clamp a list to `[0, +inf)`.
pub fn clamp_nonnegative(ivs: &[Iv]) -> Vec<Iv> {
    let mut out = Vec::new();
    for &(lo, hi) in ivs {
        if hi >= 0.0 {
            out.push((lo.max(0.0), hi));
        }
    }
    out
}

/// Image of a nonnegative list under `t -> 1/t` (with `1/0 = inf`, `1/inf = 0`).
pub fn invert_nonnegative(ivs: &[Iv]) -> Vec<Iv> {
    let inv = |t: f64| -> f64 {
        if t == 0.0 {
            f64::INFINITY
        } else if t.is_infinite() {
            0.0
        } else {
            1.0 / t
        }
    };
    let mut out: Vec<Iv> = ivs.iter().map(|&(lo, hi)| (inv(hi), inv(lo))).collect();
    normalize(&mut out);
    out
}

/// True when `t` lies in some interval, within `tol`.
pub fn contains(ivs: &[Iv], t: f64, tol: f64) -> bool {
    ivs.iter().any(|&(lo, hi)| t >= lo - tol && t <= hi + tol)
}

/// Largest finite right endpoint, or `+inf` if any interval is unbounded.
/// `None` when the list is empty.
pub fn sup(ivs: &[Iv]) -> Option<f64> {
    ivs.iter().map(|&(_, hi)| hi).fold(None, |acc, hi| {
        Some(match acc {
            None => hi,
            Some(a) => a.max(hi),
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_and_intersect() {
        let mut a = vec![(1.0, 2.0), (0.0, 1.5), (3.0, 4.0)];
        normalize(&mut a);
        assert_eq!(a, vec![(0.0, 2.0), (3.0, 4.0)]);
        let b = vec![(1.0, 3.5)];
        assert_eq!(intersect(&a, &b), vec![(1.0, 2.0), (3.0, 3.5)]);
        assert_eq!(union(&a, &b), vec![(0.0, 4.0)]);
    }

    #[test]
    fn inversion_of_ray_intervals() {
        let ivs = vec![(0.0, 2.0), (4.0, f64::INFINITY)];
        let inv = invert_nonnegative(&ivs);
        assert_eq!(inv, vec![(0.0, 0.25), (0.5, f64::INFINITY)]);
    }
}
