//! Decomposition by a chain of bivariate problems.
//!
//! Stage `k` decomposes each pending polynomial in `(y, x_{k+1})` over the
//! ring of the later variables, where `y` stands for the monomial `x^mu`
//! accumulated so far. New types compose as `(mu * lambda, mu')`.

use crate::error::{Error, Result};
use crate::mpoly::{ExponentVector, MultiPoly};

use super::newton;
use super::{axpy, Partial, QilDecomposition, Stats};

/// Types found at one stage of the top-level chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stage {
    /// 1-based stage number; stage `k` introduces `x_{k+1}`.
    pub stage: usize,
    /// Types over `x_1..x_{k+1}`, in discovery order.
    pub types: Vec<ExponentVector>,
    /// Monomial factored out after this stage, with denominators of the
    /// non-linear part cleared.
    pub monomial: ExponentVector,
}

pub fn decompose_bivariate_iter(p: &MultiPoly) -> Result<QilDecomposition> {
    Ok(decompose_bivariate_traced(p)?.0)
}

pub fn decompose_bivariate_traced(p: &MultiPoly) -> Result<(QilDecomposition, Vec<Stage>)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = p.nvars();
    let mut stages = Vec::new();
    if n == 0 {
        let mut part = Partial::unit(0);
        part.content = p.clone();
        return Ok((part.finish(0)?, stages));
    }
    let slots: Vec<usize> = (0..n).collect();
    let mut stats = Stats::default();
    let part = run(p, &slots, &mut stats, Some(&mut stages))?;
    Ok((part.finish(n - 1)?, stages))
}

fn run(
    p: &MultiPoly,
    slots: &[usize],
    stats: &mut Stats,
    mut trace: Option<&mut Vec<Stage>>,
) -> Result<Partial> {
    let n = p.nvars();
    if slots.len() <= 2 || !p.involves_any(slots) {
        return newton::run(p, slots, stats);
    }
    let mut out = Partial::unit(n);
    let (c, mut f) = p.content_and_primitive(slots)?;
    out.content = c;
    let mins = f.min_exponents();
    let mut m = vec![0; n];
    for &v in slots {
        m[v] = mins[v];
    }
    f = f.shift(&m.iter().map(|x| -x).collect::<Vec<_>>());
    out.add_monomial(&m);

    let g = f.content(&slots[..2]);
    if !g.is_one() {
        f = f.div_exact(&g)?;
        let sub = run(&g, &slots[2..], stats, None)?;
        let last = *slots.last().unwrap();
        out.absorb(sub, last, last);
    }
    if !f.involves_any(slots) {
        out.content = &out.content * &f;
        return Ok(out);
    }

    let mut e0 = vec![0; n];
    e0[slots[0]] = 1;
    let mut pending: Vec<(ExponentVector, MultiPoly)> = vec![(e0, f)];
    for k in 1..slots.len() {
        let (y, x) = (slots[k - 1], slots[k]);
        let mut next = Vec::new();
        let mut found = Vec::new();
        for (mu, h) in pending {
            let part = newton::run(&h, &[y, x], stats)?;
            if part.content.is_constant() {
                out.content = &out.content * &part.content;
            } else {
                out.p0 = &out.p0 * &part.content;
            }
            axpy(&mut out.monomial, part.monomial[y], &mu);
            out.monomial[x] += part.monomial[x];
            out.p0 = &out.p0 * &part.p0.substitute_monomial(y, &mu);
            for (ty, poly) in part.factors {
                let mut nu: ExponentVector = mu.iter().map(|a| a * ty[y]).collect();
                nu[x] = ty[x];
                found.push(slots[..=k].iter().map(|&v| nu[v]).collect());
                next.push((nu, poly));
            }
        }
        pending = next;
        if let Some(t) = trace.as_deref_mut() {
            let mut monomial = out.monomial.clone();
            for (a, b) in monomial.iter_mut().zip(out.p0.min_exponents()) {
                *a += b.min(0);
            }
            t.push(Stage {
                stage: k,
                types: found,
                monomial,
            });
        }
    }
    out.factors.extend(pending);

    let mins = out.p0.min_exponents();
    let clear: Vec<i64> = mins.iter().map(|&b| -b.min(0)).collect();
    out.p0 = out.p0.shift(&clear);
    for (a, b) in out.monomial.iter_mut().zip(&clear) {
        *a -= b;
    }
    Ok(out)
}
