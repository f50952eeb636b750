//! Independent cross-checks for the decomposition algorithms.
//!
//! [`brute_force_decompose`] tries the direction of every pair of support
//! points instead of polytope-derived candidates. [`gcd_type_test`] decides a
//! bivariate type by a gcd with a q-shifted copy of the input.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::geometry::normalize_direction;
use crate::mpoly::MultiPoly;
use crate::qild::{Partial, QilDecomposition};
use crate::qring::QCoef;

pub fn brute_force_decompose(p: &MultiPoly) -> Result<QilDecomposition> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = p.nvars();
    if n == 0 {
        let mut part = Partial::unit(0);
        part.content = p.clone();
        return part.finish(0);
    }
    let active: Vec<usize> = (0..n).collect();
    solve(p, &active)?.finish(n - 1)
}

fn solve(p: &MultiPoly, active: &[usize]) -> Result<Partial> {
    let n = p.nvars();
    let mut out = Partial::unit(n);
    if !p.involves_any(active) {
        out.content = p.clone();
        return Ok(out);
    }
    let last = *active.last().unwrap();
    let c = p.content(active);
    let mut f = p.div_exact(&c)?;
    out.content = c;
    let low = f.min_exponents();
    let strip: Vec<i64> = (0..n)
        .map(|v| if active.contains(&v) { low[v] } else { 0 })
        .collect();
    f = f.shift(&strip.iter().map(|x| -x).collect::<Vec<_>>());
    out.add_monomial(&strip);

    if active.len() == 1 && f.involves_any(active) {
        let (u, g) = f.normalize_unit();
        out.content = out.content.scale(&u);
        let mut ty = vec![0; n];
        ty[last] = 1;
        out.factors.push((ty, g));
        return Ok(out);
    }
    for &i in active {
        let g = f.content(&[i]);
        if g.is_one() {
            continue;
        }
        f = f.div_exact(&g)?;
        let rest: Vec<usize> = active.iter().copied().filter(|&v| v != i).collect();
        let sub = solve(&g, &rest)?;
        out.absorb(sub, *rest.last().unwrap(), last);
    }

    if f.involves_any(active) {
        for lambda in pair_directions(&f, active) {
            if let Some((g, image, shift)) = confirm(&f, active, &lambda)? {
                f = f.div_exact(&image)?;
                out.add_monomial(&shift);
                let mut ty = vec![0; n];
                for (&v, &l) in active.iter().zip(&lambda) {
                    ty[v] = l;
                }
                out.factors.push((ty, g));
            }
        }
    }
    if f.involves_any(active) {
        let (u, g) = f.normalize_unit();
        out.content = out.content.scale(&u);
        out.p0 = &out.p0 * &g;
    } else {
        out.content = &out.content * &f;
    }
    Ok(out)
}

/// Normalized directions of all pairs of support points without zero
/// coordinates, kept only if every point has a partner along them.
fn pair_directions(f: &MultiPoly, active: &[usize]) -> Vec<Vec<i64>> {
    let pts: Vec<Vec<i64>> = f
        .terms()
        .map(|(e, _)| active.iter().map(|&v| e[v]).collect())
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    let set: HashSet<&Vec<i64>> = pts.iter().collect();
    let hi: Vec<i64> = (0..active.len())
        .map(|i| pts.iter().map(|p| p[i]).max().unwrap())
        .collect();
    let inside = |v: &[i64]| v.iter().zip(&hi).all(|(&x, &h)| (0..=h).contains(&x));
    let mut dirs = HashSet::new();
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i + 1..] {
            let diff: Vec<i64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
            if diff.contains(&0) {
                continue;
            }
            dirs.insert(normalize_direction(&diff).unwrap().into_entries());
        }
    }
    let mut out: Vec<Vec<i64>> = dirs
        .into_iter()
        .filter(|d| {
            pts.iter().all(|p| {
                (1..)
                    .try_for_each(|k| {
                        let up: Vec<i64> = p.iter().zip(d).map(|(a, b)| a + k * b).collect();
                        let down: Vec<i64> = p.iter().zip(d).map(|(a, b)| a - k * b).collect();
                        if set.contains(&up) || set.contains(&down) {
                            return Err(true);
                        }
                        if !inside(&up) && !inside(&down) {
                            return Err(false);
                        }
                        Ok(())
                    })
                    .unwrap_err()
            })
        })
        .collect();
    out.sort();
    out
}

/// The univariate part of type `lambda`, if any, as `(P, num(P(x^lambda)), shift)`.
#[allow(clippy::type_complexity)]
fn confirm(
    f: &MultiPoly,
    active: &[usize],
    lambda: &[i64],
) -> Result<Option<(MultiPoly, MultiPoly, Vec<i64>)>> {
    let n = f.nvars();
    let last = *active.last().unwrap();
    let step = *lambda.last().unwrap();
    let (sub, y) = f.substitute_type(active, lambda)?;
    debug_assert_eq!(y, last);
    let others = &active[..active.len() - 1];
    let g = sub.content(others);
    if g.degree(y) == g.min_degree(y) {
        return Ok(None);
    }
    let mut down = vec![0; n];
    down[y] = -g.min_degree(y);
    let g = g.shift(&down);
    if g.terms().any(|(e, _)| e[y] % step != 0) {
        return Ok(None);
    }
    let g = g
        .map_terms(|e, c| {
            let mut e = e.clone();
            e[y] /= step;
            (e, c.clone())
        })
        .normalize_unit()
        .1;
    let mut image = MultiPoly::zero(n);
    for (e, c) in g.terms() {
        let mut t = e.clone();
        t[y] = 0;
        for (&v, &l) in active.iter().zip(lambda) {
            t[v] += e[y] * l;
        }
        image.add_term(t, c);
    }
    let low = image.min_exponents();
    let shift: Vec<i64> = (0..n)
        .map(|v| if active.contains(&v) { -low[v] } else { 0 })
        .collect();
    Ok(Some((g, image.shift(&shift), shift)))
}

/// Whether `(lambda, mu)` is a type of the bivariate `p`, decided by
/// `gcd(p(x, y), p(q^mu x, q^-lambda y))` having positive degree.
pub fn gcd_type_test(p: &MultiPoly, lambda: i64, mu: i64) -> Result<bool> {
    if p.nvars() != 2 {
        return Err(Error::InvalidInput(format!(
            "expected a bivariate polynomial, got {} variables",
            p.nvars()
        )));
    }
    if lambda == 0 || mu == 0 {
        return Err(Error::InvalidInput(format!(
            "type ({lambda},{mu}) has a zero entry"
        )));
    }
    let shifted = p.map_terms(|e, c| (e.clone(), c * &QCoef::q_pow(mu * e[0] - lambda * e[1])));
    let g = p.gcd(&shifted)?;
    Ok(!g.is_constant())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::four_variable_example;
    use crate::text::{parse_poly, parse_univariate};

    fn poly(s: &str) -> MultiPoly {
        parse_poly(s).unwrap().0
    }

    #[test]
    fn gcd_test_examples() {
        assert!(gcd_type_test(&poly("x1*x2"), 1, 0).is_err());
        let p = &poly("x1*x2 - q") * &poly("x1 + x2");
        assert!(gcd_type_test(&p, 1, 1).unwrap());
        assert!(!gcd_type_test(&poly("x1*x2 - q"), 1, 2).unwrap());
        assert!(gcd_type_test(&poly("x1 + x2"), -1, 1).unwrap());
        assert!(gcd_type_test(&poly("x1 + x2 + x3"), -1, 1).is_err());
    }

    #[test]
    fn brute_force_on_small_inputs() {
        let d = brute_force_decompose(&poly("x1*x2 - q")).unwrap();
        assert_eq!(d.factors.len(), 1);
        assert_eq!(d.factors[0].ty.entries(), &[1, 1]);
        assert_eq!(d.factors[0].poly, parse_univariate("y - q").unwrap());
        assert!(d.p0.is_one());
    }

    #[test]
    fn brute_force_on_sample() {
        let p = four_variable_example();
        let d = brute_force_decompose(&p).unwrap();
        assert_eq!(d.monomial, vec![8, 12, 12, 0]);
        assert_eq!(d.p0, poly("q*x1*x3+x2^2*x3+x2^2*x4"));
        let types: Vec<&[i64]> = d.factors.iter().map(|f| f.ty.entries()).collect();
        assert_eq!(types, vec![&[-4, 8, -6, 7][..], &[2, -4, 3, 5][..]]);
        assert_eq!(d.expand().unwrap(), p);
    }
}
