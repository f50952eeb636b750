//! Decomposition driven by the Newton polytope of the whole polynomial.

use crate::error::{Error, Result};
use crate::geometry::{candidate_types, CandidateTypes};
use crate::mpoly::MultiPoly;

use super::{extract_type, Partial, QilDecomposition, Stats};

pub fn decompose_newton(p: &MultiPoly) -> Result<QilDecomposition> {
    decompose_newton_with_stats(p, &mut Stats::default())
}

pub fn decompose_newton_with_stats(p: &MultiPoly, stats: &mut Stats) -> Result<QilDecomposition> {
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
    run(p, &active, stats)?.finish(n - 1)
}

/// Decomposes `p` with respect to the `active` slots over the ring of the
/// remaining ones. Factor polynomials hold `y` in `active.last()`.
pub(crate) fn run(p: &MultiPoly, active: &[usize], stats: &mut Stats) -> Result<Partial> {
    let n = p.nvars();
    let mut out = Partial::unit(n);
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.involves_any(active) {
        out.content = p.clone();
        return Ok(out);
    }
    let last = *active.last().unwrap();

    let (c, mut f) = p.content_and_primitive(active)?;
    out.content = c;
    let mins = f.min_exponents();
    let mut m = vec![0; n];
    for &v in active {
        m[v] = mins[v];
    }
    f = f.shift(&m.iter().map(|x| -x).collect::<Vec<_>>());
    out.add_monomial(&m);

    if !f.involves_any(active) {
        out.content = &out.content * &f;
        return Ok(out);
    }

    if active.len() == 1 {
        let (u, poly) = f.normalize_unit();
        out.content = out.content.scale(&u);
        let mut ty = vec![0; n];
        ty[last] = 1;
        out.factors.push((ty, poly));
        return Ok(out);
    }

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
        let sub = run(&g, &rest, stats)?;
        out.absorb(sub, *rest.last().unwrap(), last);
    }

    if !f.involves_any(active) {
        out.content = &out.content * &f;
        return Ok(out);
    }

    let support = projected_support(&f, active);
    let candidates = match candidate_types(&support) {
        CandidateTypes::Collinear(d) => vec![d],
        CandidateTypes::Candidates(v) => v,
    };
    for lambda in candidates {
        stats.extractions += 1;
        if let Some((poly, fstar, shift)) = extract_type(&f, active, lambda.entries())? {
            f = f.div_exact(&fstar)?;
            out.add_monomial(&shift);
            let mut ty = vec![0; n];
            for (&v, &l) in active.iter().zip(lambda.entries()) {
                ty[v] = l;
            }
            out.factors.push((ty, poly));
        }
    }

    if f.involves_any(active) {
        let (u, f) = f.normalize_unit();
        out.content = out.content.scale(&u);
        out.p0 = &out.p0 * &f;
    } else {
        out.content = &out.content * &f;
    }
    Ok(out)
}

/// Distinct exponent vectors of `f` restricted to `active`.
pub(crate) fn projected_support(f: &MultiPoly, active: &[usize]) -> Vec<Vec<i64>> {
    let mut pts: Vec<Vec<i64>> = f
        .terms()
        .map(|(e, _)| active.iter().map(|&v| e[v]).collect())
        .collect();
    pts.sort();
    pts.dedup();
    pts
}
