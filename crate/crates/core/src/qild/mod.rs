//! The decomposition `p = c * x^alpha * P0 * prod P_i(x^lambda_i)`.
//!
//! Two algorithms compute it: [`decompose_newton`] works on the Newton
//! polytope of the whole polynomial, [`decompose_bivariate_iter`] reduces to
//! a sequence of bivariate problems. [`is_q_integer_linear`] runs the first
//! one with early exits, and [`verify`] certifies any result.

mod bivariate;
mod linearity;
mod newton;
mod verify;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{normalize_direction, DirectionVec};
use crate::mpoly::{ExponentVector, MultiPoly};
use crate::qring::QCoef;

pub use bivariate::{decompose_bivariate_iter, decompose_bivariate_traced, Stage};
pub use linearity::{is_q_integer_linear, linearity_report, LinearityReport, Witness};
pub use newton::{decompose_newton, decompose_newton_with_stats};
pub use verify::{verify, verify_report};

/// One factor `P(x^lambda)`; `poly` is univariate in `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QilFactor {
    pub ty: DirectionVec,
    pub poly: MultiPoly,
}

impl fmt::Display for QilFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.ty, self.poly.to_string_with(&["y"]))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QilDecomposition {
    pub content: QCoef,
    pub monomial: ExponentVector,
    pub p0: MultiPoly,
    /// Sorted by type.
    pub factors: Vec<QilFactor>,
}

impl QilDecomposition {
    pub fn nvars(&self) -> usize {
        self.monomial.len()
    }

    /// `P_i(x^lambda_i)` as a Laurent polynomial in the input variables.
    pub fn factor_image(&self, i: usize) -> MultiPoly {
        let f = &self.factors[i];
        f.poly
            .embed(self.nvars(), &[0])
            .substitute_monomial(0, f.ty.entries())
    }

    /// Multiplies the decomposition back out.
    pub fn expand(&self) -> Result<MultiPoly> {
        let n = self.nvars();
        let mut acc = MultiPoly::monomial(n, self.monomial.clone(), self.content.clone());
        acc = acc.try_mul(&self.p0)?;
        for (i, f) in self.factors.iter().enumerate() {
            if f.ty.len() != n || f.poly.nvars() != 1 {
                return Err(Error::DimensionMismatch(n, f.ty.len()));
            }
            acc = acc.try_mul(&self.factor_image(i))?;
        }
        Ok(acc)
    }

    /// True when `P0` is a unit, i.e. every factor is q-integer linear.
    pub fn is_linear(&self) -> bool {
        self.p0.is_unit()
    }
}

impl fmt::Display for QilDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "content: {}", self.content)?;
        let m: Vec<String> = self.monomial.iter().map(i64::to_string).collect();
        writeln!(f, "monomial: [{}]", m.join(","))?;
        writeln!(f, "p0: {}", self.p0)?;
        write!(f, "factors:")?;
        for fac in &self.factors {
            write!(f, "\n  {fac}")?;
        }
        Ok(())
    }
}

/// Instrumentation counters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    /// Candidate types passed to the content test.
    pub extractions: usize,
}

/// Intermediate result over some active variables; the remaining variables
/// are parameters. Factor polynomials hold `y` in the slot named by the
/// producer (the last active slot) and may involve parameters.
#[derive(Clone, Debug)]
pub(crate) struct Partial {
    pub content: MultiPoly,
    pub monomial: ExponentVector,
    pub p0: MultiPoly,
    pub factors: Vec<(ExponentVector, MultiPoly)>,
}

impl Partial {
    pub fn unit(n: usize) -> Self {
        Partial {
            content: MultiPoly::one(n),
            monomial: vec![0; n],
            p0: MultiPoly::one(n),
            factors: Vec::new(),
        }
    }

    pub fn add_monomial(&mut self, m: &[i64]) {
        for (a, b) in self.monomial.iter_mut().zip(m) {
            *a += b;
        }
    }

    /// Absorbs a sub-result whose factor polynomials hold `y` in `from`,
    /// moving them to `to`.
    pub fn absorb(&mut self, sub: Partial, from: usize, to: usize) {
        self.content = &self.content * &sub.content;
        self.add_monomial(&sub.monomial);
        self.p0 = &self.p0 * &sub.p0;
        for (ty, poly) in sub.factors {
            self.factors.push((ty, poly.swap_vars(from, to)));
        }
    }

    /// Turns a parameter-free partial result into the public form, merging
    /// repeated types and moving units into the content.
    pub fn finish(self, y_slot: usize) -> Result<QilDecomposition> {
        let n = self.monomial.len();
        let mut content = self
            .content
            .as_constant()
            .ok_or_else(|| Error::Internal("content involves variables".into()))?;
        let (u, p0) = self.p0.normalize_unit();
        content = &content * &u;
        let mut grouped: BTreeMap<ExponentVector, MultiPoly> = BTreeMap::new();
        for (ty, poly) in self.factors {
            if (0..n).any(|v| v != y_slot && poly.degree(v) != 0) {
                return Err(Error::Internal("factor is not univariate".into()));
            }
            let uni = univariate(&poly, y_slot);
            match grouped.get_mut(&ty) {
                Some(acc) => *acc = &*acc * &uni,
                None => {
                    grouped.insert(ty, uni);
                }
            }
        }
        let mut factors = Vec::with_capacity(grouped.len());
        for (ty, poly) in grouped {
            let d = normalize_direction(&ty)?;
            if d.entries() != ty.as_slice() {
                return Err(Error::InvalidType(ty));
            }
            let (u, poly) = poly.normalize_unit();
            content = &content * &u;
            factors.push(QilFactor { ty: d, poly });
        }
        Ok(QilDecomposition {
            content,
            monomial: self.monomial,
            p0,
            factors,
        })
    }
}

fn univariate(p: &MultiPoly, slot: usize) -> MultiPoly {
    MultiPoly::from_terms(1, p.terms().map(|(e, c)| (vec![e[slot]], c.clone())))
}

/// Componentwise `a + k * b`.
pub(crate) fn axpy(a: &mut [i64], k: i64, b: &[i64]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x += k * y;
    }
}

/// The content test for one type over all variables: the univariate factor of
/// type `ty` contained in `p`, if there is one. `p` should be primitive with
/// respect to every variable.
pub fn extract_factor(p: &MultiPoly, ty: &DirectionVec) -> Result<Option<QilFactor>> {
    let n = p.nvars();
    if ty.len() != n {
        return Err(Error::DimensionMismatch(n, ty.len()));
    }
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let active: Vec<usize> = (0..n).collect();
    let Some((poly, _, _)) = extract_type(p, &active, ty.entries())? else {
        return Ok(None);
    };
    let poly = univariate(&poly, n - 1);
    Ok(Some(QilFactor {
        ty: ty.clone(),
        poly,
    }))
}

/// Extraction of the factor of type `lambda` (over `active`) from `f`, by the
/// content of the substituted numerator. Returns `(P, f*, shift)` with `P`
/// holding `y` in the last active slot, `f* = x^shift * P(x^lambda)` a
/// polynomial, or `None` when `lambda` is not a type of `f`.
pub(crate) fn extract_type(
    f: &MultiPoly,
    active: &[usize],
    lambda: &[i64],
) -> Result<Option<(MultiPoly, MultiPoly, ExponentVector)>> {
    let n = f.nvars();
    let (sub, d) = f.substitute_type(active, lambda)?;
    let others: Vec<usize> = active.iter().copied().filter(|&v| v != d).collect();
    let pstar = sub.content(&others);
    let low = pstar.min_degree(d);
    if pstar.degree(d) == low {
        return Ok(None);
    }
    let mut m = vec![0; n];
    m[d] = -low;
    let pstar = pstar.shift(&m);
    let step = lambda[active.iter().position(|&v| v == d).unwrap()];
    let p = match pstar.compress_var(d, step) {
        Ok(p) => p,
        Err(Error::NotDivisibleExponent { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    let p = p.normalize_unit().1;
    let mut ty = vec![0; n];
    for (&v, &l) in active.iter().zip(lambda) {
        ty[v] = l;
    }
    let image = p.substitute_monomial(d, &ty);
    let mins = image.min_exponents();
    let mut shift = vec![0; n];
    for &v in active {
        shift[v] = -mins[v];
    }
    let fstar = image.shift(&shift);
    let last = *active.last().unwrap();
    Ok(Some((p.swap_vars(d, last), fstar, shift)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::four_variable_example;
    use crate::text::{parse_poly, parse_univariate};

    fn golden() -> QilDecomposition {
        QilDecomposition {
            content: QCoef::one(),
            monomial: vec![8, 12, 12, 0],
            p0: parse_poly("q*x1*x3+x2^2*x3+x2^2*x4").unwrap().0,
            factors: vec![
                QilFactor {
                    ty: normalize_direction(&[-4, 8, -6, 7]).unwrap(),
                    poly: parse_univariate("7*q*y^2-2*y+2*q").unwrap(),
                },
                QilFactor {
                    ty: normalize_direction(&[2, -4, 3, 5]).unwrap(),
                    poly: parse_univariate("3*q^2*y^3+9*y+1").unwrap(),
                },
            ],
        }
    }

    #[test]
    fn golden_expands_to_sample() {
        assert_eq!(golden().expand().unwrap(), four_variable_example());
    }

    #[test]
    fn middle_coefficient_q_does_not_reproduce_sample() {
        let mut d = golden();
        d.factors[1].poly = parse_univariate("3*q^2*y^3+q*y+1").unwrap();
        assert_ne!(d.expand().unwrap(), four_variable_example());
    }

    #[test]
    fn newton_on_sample() {
        let d = decompose_newton(&four_variable_example()).unwrap();
        assert_eq!(d, golden());
    }

    #[test]
    fn bivariate_on_sample() {
        let d = decompose_bivariate_iter(&four_variable_example()).unwrap();
        assert_eq!(d, golden());
    }

    #[test]
    fn trivial_inputs() {
        let d = decompose_newton(&parse_poly("5").unwrap().0).unwrap();
        assert_eq!(d.content, QCoef::from_int(5));
        assert!(d.factors.is_empty() && d.p0.is_one());
        let d = decompose_newton(&parse_poly("x1^3 + q*x1").unwrap().0).unwrap();
        assert_eq!(d.monomial, vec![1]);
        assert_eq!(d.factors.len(), 1);
        assert_eq!(d.factors[0].ty.entries(), &[1]);
        assert_eq!(d.factors[0].poly.to_string_with(&["y"]), "y^2+q");
        assert_eq!(
            decompose_newton(&MultiPoly::zero(2)),
            Err(Error::ZeroPolynomial)
        );
    }
}

#[cfg(test)]
mod behaviour {
    use super::*;
    use crate::geometry::Extremum;
    use crate::samples::four_variable_example;
    use crate::text::parse_poly;

    fn poly(s: &str) -> MultiPoly {
        parse_poly(s).unwrap().0
    }

    #[test]
    fn stage_trace_on_sample() {
        let (_, stages) = decompose_bivariate_traced(&four_variable_example()).unwrap();
        assert_eq!(stages.len(), 3);
        assert_eq!(stages[0].types, vec![vec![-1, 2]]);
        assert_eq!(stages[0].monomial, vec![15, 0, 0, 0]);
        assert_eq!(stages[1].types, vec![vec![2, -4, 3]]);
        assert_eq!(stages[1].monomial, vec![0, 28, 0, 0]);
    }

    #[test]
    fn linearity_of_sample_stops_at_extremum() {
        let r = linearity_report(&four_variable_example()).unwrap();
        assert!(!r.linear);
        assert_eq!(r.extractions, 0);
        assert_eq!(
            r.witness,
            Some(Witness::NonUniqueExtremum {
                var: 3,
                kind: Extremum::Min
            })
        );
    }

    #[test]
    fn linearity_small_cases() {
        assert!(is_q_integer_linear(&poly("x1*x2 - q")).unwrap());
        assert!(!is_q_integer_linear(&poly("q*x1*x3 + x2^2*x3 + x2^2*x4")).unwrap());
        assert!(is_q_integer_linear(&poly("x1^3 + q*x1 + 4")).unwrap());
    }

    #[test]
    fn verify_rejects_tampering() {
        let p = four_variable_example();
        let d = decompose_newton(&p).unwrap();
        assert_eq!(verify_report(&p, &d), Ok(()));
        let mut bad = d.clone();
        bad.factors[0].poly = parse_poly("7*q*y^2-3*y+2*q").unwrap().0;
        assert!(!verify(&p, &bad));
        let mut dup = d.clone();
        dup.factors[1].ty = dup.factors[0].ty.clone();
        assert!(!verify(&p, &dup));
    }
}
