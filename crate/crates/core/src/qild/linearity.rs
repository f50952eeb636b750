//! Deciding q-integer linearity with early exits.
//!
//! The check follows the Newton-polytope decomposition but stops at the
//! first certificate that the non-linear part `P0` cannot be a unit.

use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{
    candidate_types, edge_direction_multiset, extremum_violation, hull2d, CandidateTypes,
    DirectionVec, Extremum, Point2,
};
use crate::mpoly::MultiPoly;

use super::extract_type;
use super::newton::projected_support;

/// Why a polynomial is not q-integer linear.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Coordinate `var` (0-based) attains its extremum at several support
    /// points of the primitive part.
    NonUniqueExtremum { var: usize, kind: Extremum },
    /// The planar Newton polygon is not centrally symmetric.
    NotCentrallySymmetric,
    /// A bivariate candidate type failed the content test.
    FakeCandidate(DirectionVec),
    /// After removing all confirmed types, a factor of positive degree is left.
    NonUnitRemainder,
    /// The content with respect to `var` is not q-integer linear.
    Content { var: usize, inner: Box<Witness> },
}

impl Witness {
    /// Human-readable form using the given variable names.
    pub fn describe(&self, names: &[&str]) -> String {
        let name = |v: usize| {
            names
                .get(v)
                .map_or_else(|| format!("x{}", v + 1), |s| s.to_string())
        };
        match self {
            Witness::NonUniqueExtremum { var, kind } => {
                format!("non-unique {kind} of {}", name(*var))
            }
            Witness::NotCentrallySymmetric => "Newton polygon is not centrally symmetric".into(),
            Witness::FakeCandidate(d) => format!("candidate type {d} is not a type"),
            Witness::NonUnitRemainder => "non-linear factor of positive degree remains".into(),
            Witness::Content { var, inner } => {
                format!(
                    "content with respect to {}: {}",
                    name(*var),
                    inner.describe(names)
                )
            }
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe(&[]))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearityReport {
    pub linear: bool,
    pub witness: Option<Witness>,
    /// Number of candidate content tests performed.
    pub extractions: usize,
}

pub fn is_q_integer_linear(p: &MultiPoly) -> Result<bool> {
    Ok(linearity_report(p)?.linear)
}

pub fn linearity_report(p: &MultiPoly) -> Result<LinearityReport> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let active: Vec<usize> = (0..p.nvars()).collect();
    let mut extractions = 0;
    let witness = check(p, &active, &mut extractions)?;
    Ok(LinearityReport {
        linear: witness.is_none(),
        witness,
        extractions,
    })
}

fn check(p: &MultiPoly, active: &[usize], extractions: &mut usize) -> Result<Option<Witness>> {
    if !p.involves_any(active) || active.len() == 1 {
        return Ok(None);
    }
    let n = p.nvars();
    let (_, mut f) = p.content_and_primitive(active)?;
    let mins = f.min_exponents();
    let mut m = vec![0; n];
    for &v in active {
        m[v] = -mins[v];
    }
    f = f.shift(&m);

    for (idx, &i) in active.iter().enumerate() {
        let g = f.content(&[i]);
        if g.is_one() {
            continue;
        }
        f = f.div_exact(&g)?;
        let rest: Vec<usize> = active
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != idx)
            .map(|(_, &v)| v)
            .collect();
        if let Some(w) = check(&g, &rest, extractions)? {
            return Ok(Some(Witness::Content {
                var: i,
                inner: Box::new(w),
            }));
        }
    }
    if !f.involves_any(active) {
        return Ok(None);
    }

    let support = projected_support(&f, active);
    if let Some((i, kind)) = extremum_violation(&support) {
        return Ok(Some(Witness::NonUniqueExtremum {
            var: active[i],
            kind,
        }));
    }
    if active.len() == 2 {
        let pts: Vec<Point2> = support.iter().map(|p| [p[0], p[1]]).collect();
        let hull = hull2d(&pts)?;
        if hull.vertices().len() > 2 {
            let edges = edge_direction_multiset(&hull);
            if edges.iter().any(|d| edges.multiplicity(d) != 2) {
                return Ok(Some(Witness::NotCentrallySymmetric));
            }
        }
    }

    let candidates = match candidate_types(&support) {
        CandidateTypes::Collinear(d) => vec![d],
        CandidateTypes::Candidates(v) => v,
    };
    for lambda in candidates {
        *extractions += 1;
        match extract_type(&f, active, lambda.entries())? {
            Some((_, fstar, _)) => f = f.div_exact(&fstar)?,
            None if active.len() == 2 => return Ok(Some(Witness::FakeCandidate(lambda))),
            None => {}
        }
    }
    if f.involves_any(active) {
        return Ok(Some(Witness::NonUnitRemainder));
    }
    Ok(None)
}
