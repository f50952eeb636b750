//! Sparse multivariate Laurent polynomials over `R = Z[q, 1/q]`.
//!
//! A [`MultiPoly`] maps exponent vectors of a fixed length `nvars` to nonzero
//! [`QCoef`] coefficients. Exponents may be negative, so the type also covers
//! the Laurent intermediates of the decomposition algorithms. GCD-based
//! operations (contents, exact division) go through [`ZPoly`] with `q` as an
//! extra, least significant variable.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::modgcd;
use crate::qring::{write_term, QCoef};
use crate::zpoly::ZPoly;

pub type ExponentVector = Vec<i64>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<ExponentVector, QCoef>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: QCoef) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, QCoef::one())
    }

    pub fn monomial(nvars: usize, exps: ExponentVector, c: QCoef) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MultiPoly { nvars, terms }
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, QCoef::one())
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, combining duplicates.
    pub fn from_terms<I: IntoIterator<Item = (ExponentVector, QCoef)>>(
        nvars: usize,
        terms: I,
    ) -> Self {
        let mut out = MultiPoly::zero(nvars);
        for (e, c) in terms {
            out.add_term(e, &c);
        }
        out
    }

    /// Convenience constructor from `(exponents, q-exponent, integer)` triples.
    pub fn from_int_terms(nvars: usize, terms: &[(&[i64], i64, i64)]) -> Self {
        Self::from_terms(
            nvars,
            terms
                .iter()
                .map(|(e, qe, c)| (e.to_vec(), QCoef::from_terms([(*qe, BigInt::from(*c))]))),
        )
    }

    pub fn add_term(&mut self, exps: ExponentVector, c: &QCoef) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of exponents (`x1` most significant).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &QCoef)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i64]) -> Option<&QCoef> {
        self.terms.get(exps)
    }

    pub fn support(&self) -> Vec<ExponentVector> {
        self.terms.keys().cloned().collect()
    }

    /// True if no variable occurs, i.e. the polynomial lies in `R`.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn as_constant(&self) -> Option<QCoef> {
        if self.is_zero() {
            return Some(QCoef::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// True for `±q^k`.
    pub fn is_unit(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_unit())
    }

    pub fn single_term(&self) -> Option<(&ExponentVector, &QCoef)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn degree(&self, v: usize) -> i64 {
        self.terms.keys().map(|e| e[v]).max().unwrap_or(0)
    }

    pub fn min_degree(&self, v: usize) -> i64 {
        self.terms.keys().map(|e| e[v]).min().unwrap_or(0)
    }

    /// True if some variable in `vars` occurs with nonzero exponent.
    pub fn involves_any(&self, vars: &[usize]) -> bool {
        self.terms.keys().any(|e| vars.iter().any(|&v| e[v] != 0))
    }

    /// Variables that occur with nonzero exponent somewhere.
    pub fn used_vars(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&v| self.terms.keys().any(|e| e[v] != 0))
            .collect()
    }

    /// Componentwise minimum exponent (the largest monomial dividing `self`
    /// in the Laurent sense).
    pub fn min_exponents(&self) -> ExponentVector {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return vec![0; self.nvars];
        };
        let mut m = first.clone();
        for e in it {
            for (a, &b) in m.iter_mut().zip(e) {
                *a = (*a).min(b);
            }
        }
        m
    }

    /// Multiplies by `x^m` (entries may be negative).
    pub fn shift(&self, m: &[i64]) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(m).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &QCoef) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    fn check_dims(&self, other: &MultiPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_dims(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(MultiPoly::zero(self.nvars));
        }
        if let Some(c) = other.as_constant() {
            return Ok(self.scale(&c));
        }
        if let Some(c) = self.as_constant() {
            return Ok(other.scale(&c));
        }
        let mut acc: HashMap<ExponentVector, QCoef> =
            HashMap::with_capacity(self.len() * other.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: ExponentVector = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let p = ca * cb;
                match acc.entry(e) {
                    std::collections::hash_map::Entry::Occupied(mut o) => {
                        let s = o.get() + &p;
                        *o.get_mut() = s;
                    }
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(p);
                    }
                }
            }
        }
        Ok(MultiPoly {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient in the Laurent ring (monomials and `±q^k` are units).
    /// For polynomial inputs whose quotient is a polynomial this is ordinary
    /// exact division.
    pub fn div_exact(&self, d: &MultiPoly) -> Result<MultiPoly> {
        self.check_dims(d)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(MultiPoly::zero(self.nvars));
        }
        if let Some((e, c)) = d.single_term() {
            let inv_e: Vec<i64> = e.iter().map(|x| -x).collect();
            let mut out = MultiPoly::zero(self.nvars);
            for (ea, ca) in &self.terms {
                let ne = ea.iter().zip(&inv_e).map(|(a, b)| a + b).collect();
                out.terms.insert(ne, ca.div_exact(c)?);
            }
            return Ok(out);
        }
        let vars = union_vars(&[self, d]);
        let (za, sa) = to_zpoly_shifted(self, &vars);
        let (zd, sd) = to_zpoly_shifted(d, &vars);
        let zq = za.div_exact(&zd).ok_or(Error::NotDivisible)?;
        let shift: Vec<i64> = sa.iter().zip(&sd).map(|(a, b)| a - b).collect();
        Ok(from_zpoly(&zq, self.nvars, &vars, &shift))
    }

    /// Content over `R[other variables]` of `self` viewed as a polynomial in
    /// `vars`, normalized so that `±q^k` is stripped. Contents of the zero
    /// polynomial are zero.
    pub fn content(&self, vars: &[usize]) -> MultiPoly {
        if self.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        let in_vars: Vec<bool> = (0..self.nvars).map(|v| vars.contains(&v)).collect();
        let rest: Vec<usize> = self
            .used_vars()
            .into_iter()
            .filter(|&v| !in_vars[v])
            .collect();
        if rest.is_empty() {
            let mut g = QCoef::zero();
            for c in self.terms.values() {
                g = g.gcd(c);
                if g.is_one() {
                    break;
                }
            }
            return MultiPoly::constant(self.nvars, g);
        }
        let mut groups: BTreeMap<Vec<i64>, MultiPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let key: Vec<i64> = vars.iter().map(|&v| e[v]).collect();
            let mut rest_e = e.clone();
            for &v in vars {
                rest_e[v] = 0;
            }
            groups
                .entry(key)
                .or_insert_with(|| MultiPoly::zero(self.nvars))
                .terms
                .insert(rest_e, c.clone());
        }
        if groups.len() == 1 {
            return groups.into_values().next().unwrap().normalize_unit().1;
        }
        let refs: Vec<&MultiPoly> = groups.values().collect();
        let shift = common_shift(&refs, &rest);
        let zs: Vec<ZPoly> = refs.iter().map(|p| to_zpoly(p, &rest, &shift)).collect();
        let g = modgcd::gcd_many(rest.len() + 1, &zs);
        from_zpoly(&g, self.nvars, &rest, &shift).normalize_unit().1
    }

    /// Greatest common divisor in `R[x]` up to monomials and units, normalized.
    pub fn gcd(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_dims(other)?;
        if self.is_zero() {
            return Ok(other.normalize_unit().1);
        }
        if other.is_zero() {
            return Ok(self.normalize_unit().1);
        }
        let vars = union_vars(&[self, other]);
        let za = to_zpoly_shifted(self, &vars).0;
        let zb = to_zpoly_shifted(other, &vars).0;
        let g = modgcd::gcd(&za, &zb);
        let shift = vec![0; vars.len() + 1];
        let g = from_zpoly(&g, self.nvars, &vars, &shift);
        let m: Vec<i64> = g.min_exponents().iter().map(|x| -x).collect();
        Ok(g.shift(&m).normalize_unit().1)
    }

    /// `(content, primitive part)` with respect to `vars`.
    pub fn content_and_primitive(&self, vars: &[usize]) -> Result<(MultiPoly, MultiPoly)> {
        if self.is_zero() {
            return Ok((MultiPoly::zero(self.nvars), MultiPoly::zero(self.nvars)));
        }
        let c = self.content(vars);
        if c.is_one() {
            return Ok((c, self.clone()));
        }
        let p = self.div_exact(&c)?;
        Ok((c, p))
    }

    /// Content over `R` of all coefficients, normalized.
    pub fn coefficient_content(&self) -> QCoef {
        let mut g = QCoef::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Splits `self = unit * normalized` with `unit = ±q^k`: afterwards the
    /// smallest `q`-exponent is 0 and the leading term (lexicographically
    /// largest exponent, highest power of `q`) has a positive coefficient.
    pub fn normalize_unit(&self) -> (QCoef, MultiPoly) {
        let Some((_, lead)) = self.terms.last_key_value() else {
            return (QCoef::one(), self.clone());
        };
        let qmin = self.terms.values().map(|c| c.shift()).min().unwrap();
        let negative = lead.leading_integer().is_some_and(Signed::is_negative);
        let sign = if negative { -1 } else { 1 };
        let unit = &QCoef::from_int(sign) * &QCoef::q_pow(qmin);
        if unit.is_one() {
            return (unit, self.clone());
        }
        let inv = unit.unit_inverse().unwrap();
        (unit, self.scale(&inv))
    }

    pub fn is_normalized(&self) -> bool {
        self.normalize_unit().0.is_one()
    }

    /// Monomial substitution attached to a type: `x_d -> y * prod_j x_j^(-l_j)`
    /// and `x_j -> x_j^(l_d)` for the other active variables, where `d` is the
    /// rightmost active slot with nonzero `l`. Returns the numerator (non-active
    /// and `y` exponents untouched, other active exponents shifted to start at 0)
    /// together with the slot `d` that now holds `y`.
    pub fn substitute_type(&self, active: &[usize], lambda: &[i64]) -> Result<(MultiPoly, usize)> {
        if active.len() != lambda.len() {
            return Err(Error::InvalidType(lambda.to_vec()));
        }
        let Some(k) = lambda.iter().rposition(|&l| l != 0) else {
            return Err(Error::InvalidType(lambda.to_vec()));
        };
        let ld = lambda[k];
        if ld <= 0 {
            return Err(Error::InvalidType(lambda.to_vec()));
        }
        let d = active[k];
        let mut out: Vec<(ExponentVector, QCoef)> = Vec::with_capacity(self.len());
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            for (i, &v) in active.iter().enumerate() {
                if i != k {
                    ne[v] = ld * e[v] - lambda[i] * e[d];
                }
            }
            out.push((ne, c.clone()));
        }
        let mut sub = MultiPoly::from_terms(self.nvars, out);
        let mins = sub.min_exponents();
        let mut shift = vec![0; self.nvars];
        for (i, &v) in active.iter().enumerate() {
            if i != k {
                shift[v] = -mins[v];
            }
        }
        sub = sub.shift(&shift);
        Ok((sub, d))
    }

    /// Replaces `x_slot^(k * step)` by `x_slot^k`.
    pub fn compress_var(&self, slot: usize, step: i64) -> Result<MultiPoly> {
        if step <= 0 {
            return Err(Error::InvalidInput(format!(
                "compression step {step} must be positive"
            )));
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[slot] % step != 0 {
                return Err(Error::NotDivisibleExponent {
                    exponent: e[slot],
                    step,
                });
            }
            let mut ne = e.clone();
            ne[slot] /= step;
            terms.insert(ne, c.clone());
        }
        Ok(MultiPoly {
            nvars: self.nvars,
            terms,
        })
    }

    /// Replaces `x_slot^k` by `x^(k * ty)`; `ty` has full length and may involve
    /// `slot` itself. The result is a Laurent polynomial in general.
    pub fn substitute_monomial(&self, slot: usize, ty: &[i64]) -> MultiPoly {
        MultiPoly::from_terms(
            self.nvars,
            self.terms.iter().map(|(e, c)| {
                let k = e[slot];
                let mut ne = e.clone();
                ne[slot] = 0;
                for (a, &t) in ne.iter_mut().zip(ty) {
                    *a += k * t;
                }
                (ne, c.clone())
            }),
        )
    }

    /// Exchanges the exponents of two slots.
    pub fn swap_vars(&self, a: usize, b: usize) -> MultiPoly {
        if a == b {
            return self.clone();
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut ne = e.clone();
                    ne.swap(a, b);
                    (ne, c.clone())
                })
                .collect(),
        }
    }

    /// Re-embeds into a space with `nvars` variables, sending slot `i` to `map[i]`.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> MultiPoly {
        MultiPoly {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut ne = vec![0; nvars];
                    for (i, &t) in map.iter().enumerate() {
                        ne[t] += e[i];
                    }
                    (ne, c.clone())
                })
                .collect(),
        }
    }

    /// Applies `f(exponents, coefficient)` to every term and recombines.
    pub fn map_terms<F>(&self, mut f: F) -> MultiPoly
    where
        F: FnMut(&ExponentVector, &QCoef) -> (ExponentVector, QCoef),
    {
        MultiPoly::from_terms(self.nvars, self.terms.iter().map(|(e, c)| f(e, c)))
    }

    /// Prints with custom variable names, highest term first.
    pub fn to_string_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let tail = e
                .iter()
                .zip(names)
                .filter(|(&k, _)| k != 0)
                .map(|(&k, n)| {
                    if k == 1 {
                        n.to_string()
                    } else {
                        format!("{n}^{k}")
                    }
                })
                .collect::<Vec<_>>()
                .join("*");
            for (qe, ic) in c.terms().rev() {
                write_term(&mut out, ic, qe, &tail, first);
                first = false;
            }
        }
        out
    }
}

fn union_vars(polys: &[&MultiPoly]) -> Vec<usize> {
    let n = polys[0].nvars;
    (0..n)
        .filter(|&v| polys.iter().any(|p| p.terms.keys().any(|e| e[v] != 0)))
        .collect()
}

/// Componentwise minimum over `vars` and `q` (last entry) across all polynomials.
fn common_shift(polys: &[&MultiPoly], vars: &[usize]) -> Vec<i64> {
    let mut shift = vec![i64::MAX; vars.len() + 1];
    for p in polys {
        for (e, c) in &p.terms {
            for (s, &v) in shift.iter_mut().zip(vars) {
                *s = (*s).min(e[v]);
            }
            let last = shift.len() - 1;
            shift[last] = shift[last].min(c.shift());
        }
    }
    shift
}

fn to_zpoly_shifted(p: &MultiPoly, vars: &[usize]) -> (ZPoly, Vec<i64>) {
    let shift = common_shift(&[p], vars);
    (to_zpoly(p, vars, &shift), full_shift(p.nvars, vars, &shift))
}

fn full_shift(nvars: usize, vars: &[usize], shift: &[i64]) -> Vec<i64> {
    let mut out = vec![0; nvars + 1];
    for (i, &v) in vars.iter().enumerate() {
        out[v] = shift[i];
    }
    out[nvars] = shift[vars.len()];
    out
}

fn to_zpoly(p: &MultiPoly, vars: &[usize], shift: &[i64]) -> ZPoly {
    let k = vars.len();
    let mut terms = Vec::with_capacity(p.len());
    for (e, c) in &p.terms {
        let base: Vec<u32> = vars
            .iter()
            .zip(shift)
            .map(|(&v, s)| (e[v] - s) as u32)
            .collect();
        for (qe, ic) in c.terms() {
            let mut ze = base.clone();
            ze.push((qe - shift[k]) as u32);
            terms.push((ze, ic.clone()));
        }
    }
    ZPoly::from_terms(k + 1, terms)
}

/// Inverse of [`to_zpoly`]; `shift` is either per-`vars` (+ q) or full (`nvars + 1`).
fn from_zpoly(z: &ZPoly, nvars: usize, vars: &[usize], shift: &[i64]) -> MultiPoly {
    let full = if shift.len() == nvars + 1 {
        shift.to_vec()
    } else {
        full_shift(nvars, vars, shift)
    };
    let mut acc: BTreeMap<ExponentVector, Vec<(i64, BigInt)>> = BTreeMap::new();
    for (ze, c) in z.terms() {
        let mut e = vec![0i64; nvars];
        for (i, &v) in vars.iter().enumerate() {
            e[v] = ze[i] as i64 + full[v];
        }
        acc.entry(e)
            .or_default()
            .push((ze[vars.len()] as i64 + full[nvars], c.clone()));
    }
    MultiPoly {
        nvars,
        terms: acc
            .into_iter()
            .map(|(e, t)| (e, QCoef::from_terms(t)))
            .filter(|(_, c)| !c.is_zero())
            .collect(),
    }
}

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("dimension mismatch in addition")
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_sub(rhs)
            .expect("dimension mismatch in subtraction")
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_mul(rhs)
            .expect("dimension mismatch in multiplication")
    }
}

/// Prints with variables `x1, ..., xn`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.to_string_with(&refs))
    }
}
