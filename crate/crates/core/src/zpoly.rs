//! Sparse multivariate polynomials over `Z` with non-negative exponents.
//!
//! This is the working representation for GCD and exact division: the
//! Laurent variables of [`MultiPoly`](crate::mpoly::MultiPoly) and `q` are
//! shifted into the positive orthant and treated as ordinary variables.
//! Terms are kept sorted in strictly descending lexicographic order with
//! variable 0 most significant.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Exps = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZPoly {
    nvars: usize,
    terms: Vec<(Exps, BigInt)>,
}

impl ZPoly {
    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(nvars: usize, terms: Vec<(Exps, BigInt)>) -> Self {
        let mut map: HashMap<Exps, BigInt> = HashMap::with_capacity(terms.len());
        for (e, c) in terms {
            debug_assert_eq!(e.len(), nvars);
            *map.entry(e).or_insert_with(BigInt::zero) += c;
        }
        Self::from_map(nvars, map)
    }

    fn from_map(nvars: usize, map: HashMap<Exps, BigInt>) -> Self {
        let mut terms: Vec<(Exps, BigInt)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        ZPoly { nvars, terms }
    }

    /// Trusts the caller that terms are sorted descending, distinct and nonzero.
    pub(crate) fn from_sorted(nvars: usize, terms: Vec<(Exps, BigInt)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        ZPoly { nvars, terms }
    }

    pub fn zero(nvars: usize) -> Self {
        ZPoly {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        if c.is_zero() {
            return ZPoly::zero(nvars);
        }
        ZPoly {
            nvars,
            terms: vec![(vec![0; nvars], c)],
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Exps, BigInt)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Exps, BigInt)> {
        self.terms
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

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.iter().all(|&e| e == 0))
    }

    /// Lex-leading term.
    pub fn lead(&self) -> Option<&(Exps, BigInt)> {
        self.terms.first()
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.terms.iter().map(|t| t.0[v]).max().unwrap_or(0)
    }

    pub fn min_degree(&self, v: usize) -> u32 {
        self.terms.iter().map(|t| t.0[v]).min().unwrap_or(0)
    }

    pub fn max_degrees(&self) -> Vec<u32> {
        let mut out = vec![0; self.nvars];
        for (e, _) in &self.terms {
            for (o, &x) in out.iter_mut().zip(e) {
                *o = (*o).max(x);
            }
        }
        out
    }

    pub fn min_degrees(&self) -> Vec<u32> {
        let Some(first) = self.terms.first() else {
            return vec![0; self.nvars];
        };
        let mut out = first.0.clone();
        for (e, _) in &self.terms[1..] {
            for (o, &x) in out.iter_mut().zip(e) {
                *o = (*o).min(x);
            }
        }
        out
    }

    /// GCD of the integer coefficients, non-negative.
    pub fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> ZPoly {
        if c.is_zero() {
            return ZPoly::zero(self.nvars);
        }
        ZPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_scalar(&self, c: &BigInt) -> ZPoly {
        ZPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a / c)).collect(),
        }
    }

    /// Flips the sign if needed so that the leading coefficient is positive.
    pub fn with_positive_lead(self) -> ZPoly {
        match self.lead() {
            Some((_, c)) if c.is_negative() => self.scale(&-BigInt::one()),
            _ => self,
        }
    }

    pub fn mul_monomial(&self, m: &[u32]) -> ZPoly {
        ZPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(m).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Divides by `x^m`; the caller guarantees `m <= min_degrees()`.
    pub fn div_monomial(&self, m: &[u32]) -> ZPoly {
        ZPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(m).map(|(a, b)| a - b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &ZPoly) -> ZPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match a.0.cmp(&b.0) {
                std::cmp::Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = &a.1 + &b.1;
                    if !s.is_zero() {
                        out.push((a.0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        ZPoly::from_sorted(self.nvars, out)
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero(self.nvars);
        }
        let mut map: HashMap<Exps, BigInt> = HashMap::with_capacity(self.len() * other.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exps = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *map.entry(e).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        ZPoly::from_map(self.nvars, map)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &ZPoly) -> Option<ZPoly> {
        let (dl, dc) = d.lead()?;
        if self.is_zero() {
            return Some(ZPoly::zero(self.nvars));
        }
        if d.len() == 1 {
            return self.div_by_term(dl, dc);
        }
        // Every quotient monomial lies in the box [min(self) - min(d), max(self) - max(d)].
        let (amax, amin) = (self.max_degrees(), self.min_degrees());
        let (dmax, dmin) = (d.max_degrees(), d.min_degrees());
        let mut hi = Vec::with_capacity(self.nvars);
        let mut lo = Vec::with_capacity(self.nvars);
        for v in 0..self.nvars {
            if amax[v] < dmax[v] || amin[v] < dmin[v] {
                return None;
            }
            hi.push(amax[v] - dmax[v]);
            lo.push(amin[v] - dmin[v]);
        }
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return None;
        }
        let mut rem: BTreeMap<Exps, BigInt> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Exps, BigInt)> = Vec::new();
        while let Some((re, rc)) = rem.pop_last() {
            let mut qe = Vec::with_capacity(self.nvars);
            for v in 0..self.nvars {
                if re[v] < dl[v] {
                    return None;
                }
                let x = re[v] - dl[v];
                if x < lo[v] || x > hi[v] {
                    return None;
                }
                qe.push(x);
            }
            let (qc, r) = rc.div_rem(dc);
            if !r.is_zero() {
                return None;
            }
            for (e, c) in &d.terms[1..] {
                let key: Exps = e.iter().zip(&qe).map(|(a, b)| a + b).collect();
                let prod = &qc * c;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() -= prod;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(-prod);
                    }
                }
            }
            quot.push((qe, qc));
        }
        Some(ZPoly::from_sorted(self.nvars, quot))
    }

    fn div_by_term(&self, m: &[u32], c: &BigInt) -> Option<ZPoly> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, a) in &self.terms {
            let mut qe = Vec::with_capacity(self.nvars);
            for (x, y) in e.iter().zip(m) {
                qe.push(x.checked_sub(*y)?);
            }
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            terms.push((qe, q));
        }
        Some(ZPoly::from_sorted(self.nvars, terms))
    }

    /// Coefficients with respect to variable `v`, with `v`'s exponent zeroed.
    pub fn coefficients_in(&self, v: usize) -> Vec<ZPoly> {
        let mut groups: BTreeMap<u32, Vec<(Exps, BigInt)>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[v] = 0;
            groups.entry(e[v]).or_default().push((e2, c.clone()));
        }
        // Zeroing one coordinate keeps relative order within a group.
        groups
            .into_values()
            .map(|t| ZPoly::from_sorted(self.nvars, t))
            .collect()
    }

    /// Restricts to the listed variables (all others must have exponent 0).
    pub fn select_vars(&self, keep: &[usize]) -> ZPoly {
        ZPoly {
            nvars: keep.len(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (keep.iter().map(|&v| e[v]).collect(), c.clone()))
                .collect(),
        }
    }

    /// Inverse of [`select_vars`](Self::select_vars).
    pub fn embed_vars(&self, nvars: usize, keep: &[usize]) -> ZPoly {
        ZPoly {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut full = vec![0; nvars];
                    for (k, &v) in keep.iter().enumerate() {
                        full[v] = e[k];
                    }
                    (full, c.clone())
                })
                .collect(),
        }
    }
}
