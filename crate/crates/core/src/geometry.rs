//! Support-set geometry: normalized directions, planar convex hulls, edge
//! directions, candidate types and the zonotope necessary conditions.

use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A nonzero primitive integer vector whose rightmost nonzero entry is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectionVec(Vec<i64>);

impl DirectionVec {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn has_zero(&self) -> bool {
        self.0.contains(&0)
    }

    /// True if `v` already satisfies the normalization invariants.
    pub fn is_normalized(v: &[i64]) -> bool {
        normalize_direction(v).is_ok_and(|d| d.0 == v)
    }
}

impl fmt::Display for DirectionVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Divides by the gcd of the entries and fixes the sign of the rightmost
/// nonzero entry to be positive.
pub fn normalize_direction(v: &[i64]) -> Result<DirectionVec> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g == 0 {
        return Err(Error::ZeroVector);
    }
    let last = *v.iter().rev().find(|&&x| x != 0).unwrap();
    let g = if last < 0 { -g } else { g };
    Ok(DirectionVec(v.iter().map(|x| x / g).collect()))
}

/// A multiset of directions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CandidateSet {
    directions: Vec<DirectionVec>,
}

impl CandidateSet {
    pub fn new(directions: Vec<DirectionVec>) -> Self {
        CandidateSet { directions }
    }

    pub fn len(&self) -> usize {
        self.directions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.directions.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, DirectionVec> {
        self.directions.iter()
    }

    pub fn contains(&self, d: &DirectionVec) -> bool {
        self.directions.contains(d)
    }

    pub fn multiplicity(&self, d: &DirectionVec) -> usize {
        self.directions.iter().filter(|x| *x == d).count()
    }

    /// Distinct elements occurring at least `k` times, sorted.
    pub fn with_multiplicity_at_least(&self, k: usize) -> Vec<DirectionVec> {
        let mut sorted = self.directions.clone();
        sorted.sort();
        let mut out = Vec::new();
        let mut i = 0;
        while i < sorted.len() {
            let j = (i..sorted.len())
                .find(|&j| sorted[j] != sorted[i])
                .unwrap_or(sorted.len());
            if j - i >= k {
                out.push(sorted[i].clone());
            }
            i = j;
        }
        out
    }

    /// Sorted copy of the underlying multiset.
    pub fn sorted(&self) -> Vec<DirectionVec> {
        let mut v = self.directions.clone();
        v.sort();
        v
    }
}

impl IntoIterator for CandidateSet {
    type Item = DirectionVec;
    type IntoIter = std::vec::IntoIter<DirectionVec>;
    fn into_iter(self) -> Self::IntoIter {
        self.directions.into_iter()
    }
}

pub type Point2 = [i64; 2];

/// Vertices of a planar convex hull in counterclockwise order, starting at
/// the lexicographically smallest vertex. No three vertices are collinear.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hull2D {
    vertices: Vec<Point2>,
}

impl Hull2D {
    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }
}

fn cross(o: Point2, a: Point2, b: Point2) -> i128 {
    let (ax, ay) = ((a[0] - o[0]) as i128, (a[1] - o[1]) as i128);
    let (bx, by) = ((b[0] - o[0]) as i128, (b[1] - o[1]) as i128);
    ax * by - ay * bx
}

/// Convex hull by Andrew's monotone chain.
pub fn hull2d(points: &[Point2]) -> Result<Hull2D> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() <= 2 {
        return Ok(Hull2D { vertices: pts });
    }
    let mut lower: Vec<Point2> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point2> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    Ok(Hull2D { vertices: lower })
}

/// One normalized direction per hull edge. A segment contributes its single
/// direction once; a point contributes nothing.
pub fn edge_direction_multiset(h: &Hull2D) -> CandidateSet {
    let v = &h.vertices;
    let dirs = match v.len() {
        0 | 1 => Vec::new(),
        2 => vec![normalize_direction(&[v[1][0] - v[0][0], v[1][1] - v[0][1]]).unwrap()],
        n => (0..n)
            .map(|i| {
                let (a, b) = (v[i], v[(i + 1) % n]);
                normalize_direction(&[b[0] - a[0], b[1] - a[1]]).unwrap()
            })
            .collect(),
    };
    CandidateSet::new(dirs)
}

/// Minkowski sum of two convex polygons by merging their edge sequences.
pub fn minkowski_sum(a: &Hull2D, b: &Hull2D) -> Hull2D {
    fn edges(h: &Hull2D) -> Vec<Point2> {
        let v = &h.vertices;
        match v.len() {
            0 | 1 => Vec::new(),
            2 => {
                let d = [v[1][0] - v[0][0], v[1][1] - v[0][1]];
                vec![d, [-d[0], -d[1]]]
            }
            n => (0..n)
                .map(|i| {
                    let (p, q) = (v[i], v[(i + 1) % n]);
                    [q[0] - p[0], q[1] - p[1]]
                })
                .collect(),
        }
    }
    // Edge angles measured counterclockwise from straight down, so that the
    // sequences starting at the lexicographically smallest vertex are sorted.
    fn half(d: Point2) -> u8 {
        if d[0] > 0 || (d[0] == 0 && d[1] > 0) {
            0
        } else {
            1
        }
    }
    fn before(x: Point2, y: Point2) -> bool {
        let (hx, hy) = (half(x), half(y));
        if hx != hy {
            return hx < hy;
        }
        cross([0, 0], x, y) > 0
    }
    if a.vertices.is_empty() || b.vertices.is_empty() {
        return Hull2D {
            vertices: Vec::new(),
        };
    }
    let (ea, eb) = (edges(a), edges(b));
    let start = [
        a.vertices[0][0] + b.vertices[0][0],
        a.vertices[0][1] + b.vertices[0][1],
    ];
    let mut out = vec![start];
    let (mut i, mut j) = (0, 0);
    let mut cur = start;
    while i < ea.len() || j < eb.len() {
        let step = if j == eb.len() || (i < ea.len() && before(ea[i], eb[j])) {
            i += 1;
            ea[i - 1]
        } else {
            j += 1;
            eb[j - 1]
        };
        cur = [cur[0] + step[0], cur[1] + step[1]];
        out.push(cur);
    }
    hull2d(&out).expect("nonempty")
}

/// Support points with constant-time membership.
pub struct SupportSet {
    points: Vec<Vec<i64>>,
    set: HashSet<Vec<i64>>,
    lo: Vec<i64>,
    hi: Vec<i64>,
}

impl SupportSet {
    pub fn new(points: Vec<Vec<i64>>) -> Self {
        let n = points.first().map_or(0, Vec::len);
        let mut lo = vec![i64::MAX; n];
        let mut hi = vec![i64::MIN; n];
        for p in &points {
            for i in 0..n {
                lo[i] = lo[i].min(p[i]);
                hi[i] = hi[i].max(p[i]);
            }
        }
        let set = points.iter().cloned().collect();
        SupportSet {
            points,
            set,
            lo,
            hi,
        }
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        self.set.contains(p)
    }

    /// Largest `k` for which `p + k*d` can still lie in the bounding box.
    fn max_step(&self, d: &[i64]) -> i64 {
        d.iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| (self.hi[i] - self.lo[i]) / x.abs())
            .min()
            .unwrap_or(0)
    }

    /// True if some other support point lies on the line through `p` along `d`.
    pub fn has_partner(&self, p: &[i64], d: &[i64]) -> bool {
        let kmax = self.max_step(d);
        let mut probe = p.to_vec();
        for k in 1..=kmax {
            for sign in [1, -1] {
                for (x, (&a, &b)) in probe.iter_mut().zip(p.iter().zip(d)) {
                    *x = a + sign * k * b;
                }
                if self.set.contains(&probe) {
                    return true;
                }
            }
        }
        false
    }
}

/// True iff every support point has a distinct partner along `d`.
pub fn pairing_filter(support: &SupportSet, d: &DirectionVec) -> bool {
    support.points.iter().all(|p| support.has_partner(p, &d.0))
}

/// Result of candidate generation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CandidateTypes {
    /// The support lies on one line with the given direction.
    Collinear(DirectionVec),
    /// Sorted candidate directions, none with a zero coordinate.
    Candidates(Vec<DirectionVec>),
}

/// Directions from the lexicographically smallest point `v` to the others,
/// without zero coordinates, that pass the pairing filter at every point. In
/// two dimensions only hull edge directions of multiplicity at least two are
/// considered.
pub fn candidate_types(support: &[Vec<i64>]) -> CandidateTypes {
    if support.len() < 2 {
        return CandidateTypes::Candidates(Vec::new());
    }
    let n = support[0].len();
    let v = support.iter().min().unwrap().clone();
    let diff = |u: &Vec<i64>| -> Vec<i64> { u.iter().zip(&v).map(|(a, b)| a - b).collect() };
    let other = support.iter().find(|u| **u != v).unwrap();
    let d0 = normalize_direction(&diff(other)).unwrap();
    let collinear = support.iter().all(|u| {
        let w = diff(u);
        (0..n).all(|i| {
            (0..n).all(|j| w[i] as i128 * d0.0[j] as i128 == w[j] as i128 * d0.0[i] as i128)
        })
    });
    if collinear {
        return if d0.has_zero() {
            CandidateTypes::Candidates(Vec::new())
        } else {
            CandidateTypes::Collinear(d0)
        };
    }
    let set = SupportSet::new(support.to_vec());
    let pool: Vec<DirectionVec> = if n == 2 {
        let pts: Vec<Point2> = support.iter().map(|p| [p[0], p[1]]).collect();
        let hull = hull2d(&pts).unwrap();
        edge_direction_multiset(&hull)
            .with_multiplicity_at_least(2)
            .into_iter()
            .filter(|d| !d.has_zero() && set.has_partner(&v, &d.0))
            .collect()
    } else {
        let mut dirs: Vec<DirectionVec> = support
            .iter()
            .filter(|u| **u != v)
            .map(|u| normalize_direction(&diff(u)).unwrap())
            .filter(|d| !d.has_zero())
            .collect();
        dirs.sort();
        dirs.dedup();
        dirs
    };
    let mut out: Vec<DirectionVec> = pool
        .into_iter()
        .filter(|d| pairing_filter(&set, d))
        .collect();
    out.sort();
    CandidateTypes::Candidates(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extremum {
    Min,
    Max,
}

impl fmt::Display for Extremum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Extremum::Min => "minimum",
            Extremum::Max => "maximum",
        })
    }
}

/// First coordinate (scanning from the last one down, minimum before
/// maximum) whose extremum is attained by more than one support point.
pub fn extremum_violation(support: &[Vec<i64>]) -> Option<(usize, Extremum)> {
    let n = support.first()?.len();
    for i in (0..n).rev() {
        let lo = support.iter().map(|p| p[i]).min().unwrap();
        let hi = support.iter().map(|p| p[i]).max().unwrap();
        if support.iter().filter(|p| p[i] == lo).count() > 1 {
            return Some((i, Extremum::Min));
        }
        if support.iter().filter(|p| p[i] == hi).count() > 1 {
            return Some((i, Extremum::Max));
        }
    }
    None
}

/// True iff every coordinate attains its minimum and its maximum at exactly
/// one support point.
pub fn zonotope_necessary_check(support: &[Vec<i64>]) -> bool {
    extremum_violation(support).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::four_variable_example;

    #[test]
    fn normalization() {
        assert_eq!(
            normalize_direction(&[4, -8, 6, -7]).unwrap().entries(),
            &[-4, 8, -6, 7]
        );
        assert_eq!(normalize_direction(&[-2, 0]).unwrap().entries(), &[1, 0]);
        assert_eq!(normalize_direction(&[0, 0, 0]), Err(Error::ZeroVector));
        assert!(DirectionVec::is_normalized(&[2, -4, 3, 5]));
        assert!(!DirectionVec::is_normalized(&[2, 4]));
    }

    #[test]
    fn square_hull_and_edges() {
        let h = hull2d(&[[0, 0], [2, 0], [0, 2], [2, 2], [1, 1]]).unwrap();
        assert_eq!(h.vertices(), &[[0, 0], [2, 0], [2, 2], [0, 2]]);
        let e = edge_direction_multiset(&h);
        assert_eq!(e.len(), 4);
        assert_eq!(e.multiplicity(&normalize_direction(&[1, 0]).unwrap()), 2);
        assert_eq!(e.multiplicity(&normalize_direction(&[0, 1]).unwrap()), 2);
    }

    #[test]
    fn degenerate_hulls() {
        assert_eq!(hull2d(&[[1, 1]]).unwrap().vertices(), &[[1, 1]]);
        let seg = hull2d(&[[0, 0], [1, 2], [2, 4]]).unwrap();
        assert_eq!(seg.vertices(), &[[0, 0], [2, 4]]);
        let e = edge_direction_multiset(&seg);
        assert_eq!(e.sorted(), vec![normalize_direction(&[1, 2]).unwrap()]);
        assert_eq!(hull2d(&[]), Err(Error::EmptyInput));
        assert!(edge_direction_multiset(&hull2d(&[[3, 3]]).unwrap()).is_empty());
    }

    #[test]
    fn staged_hull() {
        let pts = [
            [29, 3],
            [22, 5],
            [19, 1],
            [15, 7],
            [14, 0],
            [12, 3],
            [7, 2],
            [5, 5],
            [0, 4],
        ];
        let h = hull2d(&pts).unwrap();
        assert_eq!(h.vertices(), &[[0, 4], [14, 0], [29, 3], [15, 7]]);
        let swapped: Vec<Point2> = pts.iter().map(|p| [p[1], p[0]]).collect();
        let e = edge_direction_multiset(&hull2d(&swapped).unwrap());
        let mut expected = vec![
            normalize_direction(&[1, 5]).unwrap(),
            normalize_direction(&[-2, 7]).unwrap(),
            normalize_direction(&[1, 5]).unwrap(),
            normalize_direction(&[-2, 7]).unwrap(),
        ];
        expected.sort();
        assert_eq!(e.sorted(), expected);
    }

    #[test]
    fn pairing() {
        let s = SupportSet::new(vec![vec![1, 1], vec![0, 0]]);
        assert!(pairing_filter(&s, &normalize_direction(&[1, 1]).unwrap()));
        assert!(!pairing_filter(&s, &normalize_direction(&[1, -1]).unwrap()));
        let p = four_variable_example();
        let s = SupportSet::new(p.support());
        assert_eq!(s.points().len(), 27);
        assert!(pairing_filter(
            &s,
            &normalize_direction(&[2, -4, 3, 5]).unwrap()
        ));
    }

    #[test]
    fn candidates() {
        let p = four_variable_example();
        match candidate_types(&p.support()) {
            CandidateTypes::Candidates(c) => {
                assert!(c.contains(&normalize_direction(&[2, -4, 3, 5]).unwrap()));
                assert!(c.contains(&normalize_direction(&[-4, 8, -6, 7]).unwrap()));
                assert!(c.len() <= 26);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            candidate_types(&[vec![1, 1], vec![0, 0]]),
            CandidateTypes::Collinear(normalize_direction(&[1, 1]).unwrap())
        );
        // x^2 + x*y + x
        assert_eq!(
            candidate_types(&[vec![2, 0], vec![1, 1], vec![1, 0]]),
            CandidateTypes::Candidates(Vec::new())
        );
    }

    #[test]
    fn zonotope_conditions() {
        let p = four_variable_example();
        assert_eq!(extremum_violation(&p.support()), Some((3, Extremum::Min)));
        assert!(!zonotope_necessary_check(&p.support()));
        assert!(zonotope_necessary_check(&[vec![1, 1], vec![0, 0]]));
        assert!(zonotope_necessary_check(&[
            vec![2, 0],
            vec![1, 1],
            vec![0, 2]
        ]));
    }

    #[test]
    fn minkowski_of_segments_is_parallelogram() {
        let a = hull2d(&[[0, 0], [2, 1]]).unwrap();
        let b = hull2d(&[[0, 0], [-1, 3]]).unwrap();
        let s = minkowski_sum(&a, &b);
        assert_eq!(s.vertices(), &[[-1, 3], [0, 0], [2, 1], [1, 4]]);
    }
}
