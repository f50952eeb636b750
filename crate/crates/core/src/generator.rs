//! Seeded random inputs for tests and benchmarks.

use num_bigint::BigInt;
use rand::Rng;

use crate::geometry::normalize_direction;
use crate::mpoly::MultiPoly;
use crate::qild::{QilDecomposition, QilFactor};
use crate::qring::QCoef;

/// Shape `(n, m, d0, d)` of a benchmark instance
/// `P0 * prod_{i<=m} num(P_i(x^lambda_i))` in `n` variables, where `P0` has
/// total degree and `q`-degree `d0` and `P_i = f_1 * f_2` with
/// `deg f_j = j * d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InstanceShape {
    pub nvars: usize,
    pub factors: usize,
    pub base_degree: u32,
    pub factor_degree: u32,
}

impl InstanceShape {
    pub fn new(nvars: usize, factors: usize, base_degree: u32, factor_degree: u32) -> Self {
        InstanceShape {
            nvars,
            factors,
            base_degree,
            factor_degree,
        }
    }
}

const BASE_TERMS: usize = 6;
const MAX_TYPE_ENTRY: i64 = 10;
const MAX_COEFF: i64 = 99;

fn nonzero_int<R: Rng>(rng: &mut R, bound: i64) -> BigInt {
    loop {
        let c = rng.gen_range(-bound..=bound);
        if c != 0 {
            return c.into();
        }
    }
}

/// A nonzero coefficient `sum_{k<=deg} c_k q^k`.
fn random_coef<R: Rng>(rng: &mut R, deg: u32, bound: i64) -> QCoef {
    loop {
        let c = QCoef::from_terms((0..=deg as i64).map(|k| {
            let v = if rng.gen_bool(0.5) {
                nonzero_int(rng, bound)
            } else {
                BigInt::from(0)
            };
            (k, v)
        }));
        if !c.is_zero() {
            return c;
        }
    }
}

fn random_univariate<R: Rng>(rng: &mut R, deg: u32, qdeg: u32, bound: i64) -> MultiPoly {
    let mut p = MultiPoly::zero(1);
    for k in 0..=deg {
        if k == 0 || k == deg || rng.gen_bool(0.7) {
            p.add_term(vec![k as i64], &random_coef(rng, qdeg, bound));
        }
    }
    p
}

fn random_base<R: Rng>(rng: &mut R, n: usize, d0: u32) -> MultiPoly {
    let mut p = MultiPoly::zero(n);
    let mut top = vec![0i64; n];
    for _ in 0..d0 {
        top[rng.gen_range(0..n)] += 1;
    }
    p.add_term(
        top,
        &(&random_coef(rng, d0, MAX_COEFF) + &QCoef::q_pow(d0 as i64)),
    );
    while p.len() < BASE_TERMS.min(monomial_count(n, d0)) {
        let total = rng.gen_range(0..=d0);
        let mut e = vec![0i64; n];
        for _ in 0..total {
            e[rng.gen_range(0..n)] += 1;
        }
        if p.coeff(&e).is_none() {
            p.add_term(e, &random_coef(rng, d0, MAX_COEFF));
        }
    }
    p
}

fn monomial_count(n: usize, d: u32) -> usize {
    // binomial(n + d, n), saturating
    let mut c: usize = 1;
    for i in 1..=n {
        c = c.saturating_mul(d as usize + i) / i;
    }
    c
}

fn random_type<R: Rng>(rng: &mut R, n: usize, bound: i64, allow_zero: bool) -> Vec<i64> {
    loop {
        let v: Vec<i64> = (0..n).map(|_| rng.gen_range(-bound..=bound)).collect();
        if v.iter().all(|&x| x == 0) || (!allow_zero && v.contains(&0)) {
            continue;
        }
        return v;
    }
}

/// `num(P(x^lambda))`: the Laurent image multiplied by the smallest monomial
/// that makes it a polynomial. Also returns that monomial's exponents.
pub fn numerator_image(poly: &MultiPoly, lambda: &[i64]) -> (MultiPoly, Vec<i64>) {
    let img = poly
        .embed(lambda.len(), &[0])
        .substitute_monomial(0, lambda);
    let shift: Vec<i64> = img.min_exponents().iter().map(|x| -x).collect();
    (img.shift(&shift), shift)
}

/// A benchmark-style instance.
pub fn random_instance<R: Rng>(rng: &mut R, shape: InstanceShape) -> MultiPoly {
    let n = shape.nvars;
    let mut p = random_base(rng, n, shape.base_degree);
    for _ in 0..shape.factors {
        let d = shape.factor_degree;
        let f1 = random_univariate(rng, d, d, 9);
        let f2 = random_univariate(rng, 2 * d, d, 9);
        let lambda = random_type(rng, n, MAX_TYPE_ENTRY, true);
        p = &p * &numerator_image(&(&f1 * &f2), &lambda).0;
    }
    p
}

/// A polynomial built as `x^alpha * prod num(P_i(x^lambda_i))` with distinct
/// normalized types without zero entries and q-primitive `P_i`, together with
/// its expected decomposition.
pub fn random_constructive<R: Rng>(
    rng: &mut R,
    nvars: usize,
    factors: usize,
) -> (MultiPoly, QilDecomposition) {
    let mut types: Vec<Vec<i64>> = Vec::new();
    while types.len() < factors {
        let t = normalize_direction(&random_type(rng, nvars, 3, false))
            .unwrap()
            .into_entries();
        if !types.contains(&t) {
            types.push(t);
        }
    }
    let mut monomial: Vec<i64> = (0..nvars).map(|_| rng.gen_range(0..=2)).collect();
    let mut p = MultiPoly::monomial(nvars, monomial.clone(), QCoef::one());
    let mut out = Vec::new();
    for ty in types {
        let poly = q_primitive(rng);
        let (img, shift) = numerator_image(&poly, &ty);
        p = &p * &img;
        for (a, s) in monomial.iter_mut().zip(&shift) {
            *a += s;
        }
        out.push(QilFactor {
            ty: normalize_direction(&ty).unwrap(),
            poly,
        });
    }
    out.sort_by(|a, b| a.ty.cmp(&b.ty));
    let expected = QilDecomposition {
        content: QCoef::one(),
        monomial,
        p0: MultiPoly::one(nvars),
        factors: out,
    };
    (p, expected)
}

/// Univariate of degree 1 to 3, primitive over `R`, nonzero constant term,
/// normalized.
fn q_primitive<R: Rng>(rng: &mut R) -> MultiPoly {
    loop {
        let deg = rng.gen_range(1..=3);
        let p = random_univariate(rng, deg, 2, 5);
        let c = p.coefficient_content();
        let Ok(p) = p.div_exact(&MultiPoly::constant(1, c)) else {
            continue;
        };
        let p = p.normalize_unit().1;
        if p.coefficient_content().is_one() && p.coeff(&[0]).is_some() && p.degree(0) > 0 {
            return p;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn instances_are_reproducible() {
        let shape = InstanceShape::new(3, 2, 3, 1);
        let a = random_instance(&mut ChaCha8Rng::seed_from_u64(7), shape);
        let b = random_instance(&mut ChaCha8Rng::seed_from_u64(7), shape);
        assert_eq!(a, b);
        assert!(!a.is_zero());
    }

    #[test]
    fn constructive_expected_value_expands() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let (p, d) = random_constructive(&mut rng, 3, 2);
            assert_eq!(d.expand().unwrap(), p);
        }
    }
}
