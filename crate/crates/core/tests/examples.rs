//! Worked examples for individual operations, checked through the public API.

use num_bigint::BigInt;

use qild::mpoly::MultiPoly;
use qild::oracle::brute_force_decompose;
use qild::qild::{decompose_bivariate_iter, decompose_newton, verify};
use qild::qring::QCoef;
use qild::samples::four_variable_example;
use qild::text::{parse_poly_in, parse_univariate};

fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn poly(src: &str, n: usize) -> MultiPoly {
    parse_poly_in(src, &names(n)).unwrap()
}

fn qc(terms: &[(i64, i64)]) -> QCoef {
    QCoef::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
}

#[test]
fn cyclotomic_gcd() {
    let a = qc(&[(2, 1), (0, -1)]);
    let b = qc(&[(3, 1), (0, -1)]);
    assert_eq!(a.gcd(&b), qc(&[(1, 1), (0, -1)]));
}

#[test]
fn compression_of_a_substituted_factor() {
    let f = parse_univariate("3*q^2*y^15+q*y^5+1").unwrap();
    assert_eq!(
        f.compress_var(0, 5).unwrap(),
        parse_univariate("3*q^2*y^3+q*y+1").unwrap()
    );
    assert!(f.compress_var(0, 4).is_err());
}

#[test]
fn substituted_numerator_content() {
    let p = four_variable_example();
    let active = [0, 1, 2, 3];
    let (s, slot) = p.substitute_type(&active, &[2, -4, 3, 5]).unwrap();
    assert_eq!(slot, 3);
    let g = s.content(&[0, 1, 2]);
    let mut m = vec![0; 4];
    m[3] = -g.min_exponents()[3];
    let (_, g) = g.shift(&m).normalize_unit();
    assert_eq!(g, poly("3*q^2*x4^15+9*x4^5+1", 4));
}

#[test]
fn three_variable_product() {
    let sq = poly("q^2*x2*x3^3 - 1", 3);
    let p = [
        poly("x1*x2^2 + q", 3),
        sq.clone(),
        sq,
        poly("x1^2 + x2*x3 + q*x3", 3),
        poly("q^-3*x1", 3),
    ]
    .iter()
    .try_fold(MultiPoly::one(3), |acc, f| acc.try_mul(f))
    .unwrap();
    let d = decompose_newton(&p).unwrap();
    assert!(verify(&p, &d));
    assert_eq!(d.factors.len(), 2);
    assert_eq!(d.monomial, vec![1, 0, 0]);
    assert_eq!(d.p0, poly("x1^2+x2*x3+q*x3", 3));
    assert_eq!(decompose_bivariate_iter(&p).unwrap(), d);
    assert_eq!(brute_force_decompose(&p).unwrap(), d);
}
