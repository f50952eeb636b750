//! Certification of a decomposition against its input.

use crate::geometry::DirectionVec;
use crate::mpoly::MultiPoly;

use super::{decompose_newton, QilDecomposition};

pub fn verify(p: &MultiPoly, d: &QilDecomposition) -> bool {
    verify_report(p, d).is_ok()
}

/// Like [`verify`], naming the first violated condition.
pub fn verify_report(p: &MultiPoly, d: &QilDecomposition) -> Result<(), String> {
    let n = p.nvars();
    if d.nvars() != n || d.p0.nvars() != n {
        return Err(format!(
            "decomposition has {} variables, input has {n}",
            d.nvars()
        ));
    }
    if d.content.is_zero() {
        return Err("content is zero".into());
    }
    if d.monomial.iter().any(|&a| a < 0) {
        return Err("monomial has a negative exponent".into());
    }
    for (i, f) in d.factors.iter().enumerate() {
        let ty = f.ty.entries();
        if ty.len() != n || !DirectionVec::is_normalized(ty) {
            return Err(format!("factor {} has an invalid type {}", i + 1, f.ty));
        }
        if d.factors[..i].iter().any(|g| g.ty == f.ty) {
            return Err(format!("type {} occurs twice", f.ty));
        }
        let poly = &f.poly;
        if poly.nvars() != 1 || poly.degree(0) <= 0 || poly.min_degree(0) != 0 {
            return Err(format!(
                "factor {} is not of positive degree with nonzero constant term",
                i + 1
            ));
        }
        if !poly.coefficient_content().is_one() || !poly.is_normalized() {
            return Err(format!("factor {} is not primitive and normalized", i + 1));
        }
    }
    if !d.p0.coefficient_content().is_one() || !d.p0.is_normalized() {
        return Err("p0 is not primitive and normalized".into());
    }
    if d.p0.min_exponents().iter().any(|&a| a != 0) {
        return Err("p0 has a monomial factor".into());
    }
    match d.expand() {
        Ok(e) if e == *p => {}
        Ok(_) => return Err("expansion differs from the input".into()),
        Err(e) => return Err(format!("expansion failed: {e}")),
    }
    if !d.p0.is_constant() {
        match decompose_newton(&d.p0) {
            Ok(r) if r.factors.is_empty() && r.p0 == d.p0 => {}
            Ok(_) => return Err("p0 has a q-integer linear factor".into()),
            Err(e) => return Err(format!("re-decomposing p0 failed: {e}")),
        }
    }
    Ok(())
}
