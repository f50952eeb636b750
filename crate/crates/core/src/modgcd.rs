//! Multivariate GCD over `Z` by Brown's dense modular algorithm.
//!
//! Images modulo word-sized primes are computed by recursive evaluation and
//! Newton interpolation in the last variable, then combined by Chinese
//! remaindering. Every candidate is confirmed by trial division, so the
//! result is always correct; randomness only affects running time.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::zpoly::{Exps, ZPoly};

const PRIME_COUNT: usize = 600;

/// Primes just below `2^31`, largest first.
fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(PRIME_COUNT);
        let mut n: u64 = (1 << 31) - 1;
        while out.len() < PRIME_COUNT {
            if is_prime(n) {
                out.push(n);
            }
            n -= 2;
        }
        out
    })
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    // Deterministic for n < 3.3e24 with these bases.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u128(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pow_mod_u128(b: u64, mut e: u64, m: u64) -> u64 {
    let m = m as u128;
    let mut acc: u128 = 1;
    let mut base = b as u128 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u64
}

#[inline]
fn mulm(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

#[inline]
fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn powm(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm(acc, b, p);
        }
        b = mulm(b, b, p);
        e >>= 1;
    }
    acc
}

fn invm(a: u64, p: u64) -> u64 {
    powm(a, p - 2, p)
}

// ---- dense univariate polynomials over Z/p, coefficient i is that of x^i ----

type Uni = Vec<u64>;

fn trim(u: &mut Uni) {
    while u.last() == Some(&0) {
        u.pop();
    }
}

fn uni_eval(u: &Uni, x: u64, p: u64) -> u64 {
    u.iter()
        .rev()
        .fold(0, |acc, &c| addm(mulm(acc, x, p), c, p))
}

fn uni_mul(a: &Uni, b: &Uni, p: u64) -> Uni {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = addm(out[i + j], mulm(x, y, p), p);
        }
    }
    trim(&mut out);
    out
}

fn uni_scale(a: &Uni, c: u64, p: u64) -> Uni {
    let mut out: Uni = a.iter().map(|&x| mulm(x, c, p)).collect();
    trim(&mut out);
    out
}

fn uni_monic(a: &Uni, p: u64) -> Uni {
    match a.last() {
        Some(&lc) if lc != 1 => uni_scale(a, invm(lc, p), p),
        _ => a.clone(),
    }
}

fn uni_divrem(a: &Uni, b: &Uni, p: u64) -> (Uni, Uni) {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return (Vec::new(), a.clone());
    }
    let inv = invm(b[db], p);
    let mut r = a.clone();
    let mut q = vec![0u64; a.len() - db];
    for k in (0..q.len()).rev() {
        let c = mulm(r[k + db], inv, p);
        q[k] = c;
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                r[k + j] = subm(r[k + j], mulm(c, bj, p), p);
            }
        }
    }
    r.truncate(db);
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

fn uni_gcd(a: &Uni, b: &Uni, p: u64) -> Uni {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let (_, r) = uni_divrem(&a, &b, p);
        a = b;
        b = r;
    }
    uni_monic(&a, p)
}

// ---- sparse multivariate polynomials over Z/p ----

/// Terms sorted strictly descending in lex order, coefficients nonzero.
type ModPoly = Vec<(Exps, u64)>;

fn reduce(a: &ZPoly, p: u64) -> ModPoly {
    let pb = BigInt::from(p);
    a.terms()
        .iter()
        .filter_map(|(e, c)| {
            let r = c.mod_floor(&pb).to_u64().unwrap();
            (r != 0).then(|| (e.clone(), r))
        })
        .collect()
}

fn is_const(a: &ModPoly) -> bool {
    a.len() == 1 && a[0].0.iter().all(|&x| x == 0)
}

fn mod_monic(a: ModPoly, p: u64) -> ModPoly {
    match a.first() {
        Some(&(_, lc)) if lc != 1 => {
            let inv = invm(lc, p);
            a.into_iter().map(|(e, c)| (e, mulm(c, inv, p))).collect()
        }
        _ => a,
    }
}

/// True when `d` divides `a` over Z/p.
fn mod_divides(a: &ModPoly, d: &ModPoly, p: u64) -> bool {
    let Some((dl, dc)) = d.first() else {
        return false;
    };
    let nv = dl.len();
    let inv = invm(*dc, p);
    let mut amax = vec![0u32; nv];
    let mut dmax = vec![0u32; nv];
    for (e, _) in a {
        for v in 0..nv {
            amax[v] = amax[v].max(e[v]);
        }
    }
    for (e, _) in d {
        for v in 0..nv {
            dmax[v] = dmax[v].max(e[v]);
        }
    }
    if (0..nv).any(|v| amax[v] < dmax[v]) {
        return false;
    }
    let mut rem: BTreeMap<Exps, u64> = a.iter().cloned().collect();
    while let Some((re, rc)) = rem.pop_last() {
        let mut qe = Vec::with_capacity(nv);
        for v in 0..nv {
            if re[v] < dl[v] || re[v] - dl[v] > amax[v] - dmax[v] {
                return false;
            }
            qe.push(re[v] - dl[v]);
        }
        let qc = mulm(rc, inv, p);
        for (e, c) in &d[1..] {
            let key: Exps = e.iter().zip(&qe).map(|(x, y)| x + y).collect();
            let sub = mulm(qc, *c, p);
            let slot = rem.entry(key).or_insert(0);
            *slot = subm(*slot, sub, p);
            if *slot == 0 {
                let key: Exps = e.iter().zip(&qe).map(|(x, y)| x + y).collect();
                rem.remove(&key);
            }
        }
    }
    true
}

/// `a` viewed in the first `nv - 1` variables over `(Z/p)[x_{nv-1}]`.
type RecPoly = Vec<(Exps, Uni)>;

fn to_rec(a: &ModPoly, nv: usize) -> RecPoly {
    let mut out: RecPoly = Vec::new();
    for (e, c) in a {
        let main = &e[..nv - 1];
        let d = e[nv - 1] as usize;
        match out.last_mut() {
            Some((m, u)) if m.as_slice() == main => {
                if u.len() <= d {
                    u.resize(d + 1, 0);
                }
                u[d] = *c;
            }
            _ => {
                let mut u = vec![0u64; d + 1];
                u[d] = *c;
                out.push((main.to_vec(), u));
            }
        }
    }
    out
}

fn eval_rec(a: &RecPoly, x: u64, p: u64) -> ModPoly {
    a.iter()
        .filter_map(|(m, u)| {
            let v = uni_eval(u, x, p);
            (v != 0).then(|| (m.clone(), v))
        })
        .collect()
}

fn rec_content(a: &RecPoly, p: u64) -> Uni {
    let mut g: Uni = Vec::new();
    for (_, u) in a {
        g = uni_gcd(&g, u, p);
        if g.len() == 1 {
            break;
        }
    }
    g
}

fn rec_to_mod(a: &RecPoly) -> ModPoly {
    let mut out = Vec::new();
    for (m, u) in a {
        for d in (0..u.len()).rev() {
            if u[d] != 0 {
                let mut e = m.clone();
                e.push(d as u32);
                out.push((e, u[d]));
            }
        }
    }
    out
}

fn uni_to_mod(u: &Uni, nv: usize) -> ModPoly {
    let mut out = Vec::new();
    for d in (0..u.len()).rev() {
        if u[d] != 0 {
            let mut e = vec![0u32; nv];
            e[nv - 1] = d as u32;
            out.push((e, u[d]));
        }
    }
    out
}

/// Distinct evaluation points spread over `Z/p`.
struct Points {
    next: u64,
    step: u64,
    p: u64,
}

impl Points {
    fn new(p: u64, salt: u64) -> Self {
        Points {
            next: (salt.wrapping_mul(0x9E37_79B9_7F4A_7C15) >> 33) % p,
            step: 1_000_003 % p,
            p,
        }
    }
    fn take(&mut self) -> u64 {
        let x = self.next;
        self.next = addm(self.next, self.step, self.p);
        x
    }
}

/// Monic GCD over Z/p of polynomials in `nv` variables.
fn pgcd(a: &ModPoly, b: &ModPoly, nv: usize, p: u64) -> ModPoly {
    if a.is_empty() {
        return mod_monic(b.clone(), p);
    }
    if b.is_empty() {
        return mod_monic(a.clone(), p);
    }
    if nv == 0 {
        return vec![(Vec::new(), 1)];
    }
    if nv == 1 {
        let ua = to_rec(a, 1).pop().map(|t| t.1).unwrap_or_default();
        let ub = to_rec(b, 1).pop().map(|t| t.1).unwrap_or_default();
        return uni_to_mod(&uni_gcd(&ua, &ub, p), 1);
    }
    let mut ra = to_rec(a, nv);
    let mut rb = to_rec(b, nv);
    let ca = rec_content(&ra, p);
    let cb = rec_content(&rb, p);
    let c = uni_gcd(&ca, &cb, p);
    if ca.len() > 1 {
        for (_, u) in ra.iter_mut() {
            *u = uni_divrem(u, &ca, p).0;
        }
    }
    if cb.len() > 1 {
        for (_, u) in rb.iter_mut() {
            *u = uni_divrem(u, &cb, p).0;
        }
    }
    let lca = ra[0].1.clone();
    let lcb = rb[0].1.clone();
    let g = uni_gcd(&lca, &lcb, p);
    let deg_a = ra.iter().map(|t| t.1.len()).max().unwrap_or(1) - 1;
    let deg_b = rb.iter().map(|t| t.1.len()).max().unwrap_or(1) - 1;
    let bound = deg_a.min(deg_b) + g.len() - 1;

    let mut pts = Points::new(
        p,
        (nv as u64) << 40 ^ (a.len() as u64) << 20 ^ b.len() as u64,
    );
    let mut h: BTreeMap<Exps, Uni> = BTreeMap::new();
    let mut modulus: Uni = vec![1];
    let mut lm: Option<Exps> = None;
    let mut npts = 0usize;
    for _ in 0..p {
        let x = pts.take();
        if uni_eval(&lca, x, p) == 0 || uni_eval(&lcb, x, p) == 0 {
            continue;
        }
        let img = pgcd(&eval_rec(&ra, x, p), &eval_rec(&rb, x, p), nv - 1, p);
        if is_const(&img) {
            return uni_to_mod(&c, nv);
        }
        let img_lm = img[0].0.clone();
        match &lm {
            Some(cur) if &img_lm > cur => continue,
            Some(cur) if &img_lm < cur => {
                h.clear();
                modulus = vec![1];
                npts = 0;
                lm = Some(img_lm);
            }
            None => lm = Some(img_lm),
            _ => {}
        }
        let gx = uni_eval(&g, x, p);
        let mut changed = npts == 0;
        let mx = uni_eval(&modulus, x, p);
        let minv = invm(mx, p);
        let mut img_map: BTreeMap<&Exps, u64> =
            img.iter().map(|(e, c)| (e, mulm(*c, gx, p))).collect();
        for (m, u) in h.iter_mut() {
            let target = img_map.remove(m).unwrap_or(0);
            let diff = subm(target, uni_eval(u, x, p), p);
            if diff != 0 {
                changed = true;
                let corr = uni_scale(&modulus, mulm(diff, minv, p), p);
                add_into(u, &corr, p);
            }
        }
        for (m, v) in img_map {
            changed = true;
            h.insert(m.clone(), uni_scale(&modulus, mulm(v, minv, p), p));
        }
        h.retain(|_, u| !u.is_empty());
        modulus = uni_mul(&modulus, &vec![p - x, 1], p);
        npts += 1;
        if changed && npts <= bound {
            continue;
        }
        let rec: RecPoly = h
            .iter()
            .rev()
            .map(|(m, u)| (m.clone(), u.clone()))
            .collect();
        let cont = rec_content(&rec, p);
        let rec: RecPoly = rec
            .into_iter()
            .map(|(m, u)| (m, uni_divrem(&u, &cont, p).0))
            .collect();
        let cand = mod_monic(rec_to_mod(&rec), p);
        if mod_divides(a, &cand, p) && mod_divides(b, &cand, p) {
            return mod_monic(mod_mul(&cand, &uni_to_mod(&c, nv), p), p);
        }
        if npts > bound {
            // Every point so far was unlucky in the same way; start over.
            h.clear();
            modulus = vec![1];
            npts = 0;
            lm = None;
        }
    }
    unreachable!("evaluation points exhausted modulo {p}")
}

fn add_into(u: &mut Uni, v: &Uni, p: u64) {
    if u.len() < v.len() {
        u.resize(v.len(), 0);
    }
    for (a, &b) in u.iter_mut().zip(v) {
        *a = addm(*a, b, p);
    }
    trim(u);
}

fn mod_mul(a: &ModPoly, b: &ModPoly, p: u64) -> ModPoly {
    let mut map: HashMap<Exps, u64> = HashMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Exps = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let s = map.entry(e).or_insert(0);
            *s = addm(*s, mulm(*ca, *cb, p), p);
        }
    }
    let mut out: ModPoly = map.into_iter().filter(|t| t.1 != 0).collect();
    out.sort_unstable_by(|x, y| y.0.cmp(&x.0));
    out
}

fn symmetric(x: BigInt, m: &BigInt) -> BigInt {
    let x = x.mod_floor(m);
    if &x + &x > *m {
        x - m
    } else {
        x
    }
}

/// GCD of primitive-content inputs in all of their variables.
fn modular_gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let nv = a.nvars();
    let (ia, ib) = (a.int_content(), b.int_content());
    let ic = ia.gcd(&ib);
    let a = a.div_scalar(&ia);
    let b = b.div_scalar(&ib);
    let la = a.lead().unwrap().1.clone();
    let lb = b.lead().unwrap().1.clone();
    let gamma = la.gcd(&lb);

    let mut acc: Vec<(Exps, BigInt)> = Vec::new();
    let mut modulus = BigInt::zero();
    let mut lm: Option<Exps> = None;
    for &p in primes() {
        let pb = BigInt::from(p);
        if (&la % &pb).is_zero() || (&lb % &pb).is_zero() {
            continue;
        }
        let img = pgcd(&reduce(&a, p), &reduce(&b, p), nv, p);
        if is_const(&img) {
            return ZPoly::constant(nv, ic);
        }
        let img_lm = img[0].0.clone();
        match &lm {
            Some(cur) if &img_lm > cur => continue,
            Some(cur) if &img_lm < cur => {
                acc.clear();
                lm = Some(img_lm);
            }
            None => lm = Some(img_lm),
            _ => {}
        }
        let gp = gamma.mod_floor(&pb).to_u64().unwrap();
        let img: ModPoly = img.into_iter().map(|(e, c)| (e, mulm(c, gp, p))).collect();
        if acc.is_empty() {
            acc = img
                .into_iter()
                .map(|(e, c)| (e, symmetric(BigInt::from(c), &pb)))
                .collect();
            modulus = pb;
            continue;
        }
        let minv = invm(modulus.mod_floor(&pb).to_u64().unwrap(), p);
        let new_mod = &modulus * &pb;
        let mut merged: BTreeMap<Exps, (BigInt, u64)> = BTreeMap::new();
        for (e, h) in acc.drain(..) {
            merged.insert(e, (h, 0));
        }
        for (e, c) in img {
            merged.entry(e).or_insert((BigInt::zero(), 0)).1 = c;
        }
        let mut changed = false;
        for (e, (h, c)) in merged.into_iter().rev() {
            let hp = h.mod_floor(&pb).to_u64().unwrap();
            let t = mulm(subm(c, hp, p), minv, p);
            let x = if t == 0 {
                h
            } else {
                changed = true;
                symmetric(&h + &modulus * BigInt::from(t), &new_mod)
            };
            if !x.is_zero() {
                acc.push((e, x));
            }
        }
        modulus = new_mod;
        if changed {
            continue;
        }
        let cand = ZPoly::from_sorted(nv, acc.clone());
        let cc = cand.int_content();
        let cand = cand.div_scalar(&cc).with_positive_lead();
        if a.div_exact(&cand).is_some() && b.div_exact(&cand).is_some() {
            return cand.scale(&ic);
        }
    }
    unreachable!("ran out of primes in modular GCD")
}

/// GCD over `Z` with positive leading coefficient; `gcd(0, 0) = 0`.
pub fn gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_zero() {
        return b.clone().with_positive_lead();
    }
    if b.is_zero() {
        return a.clone().with_positive_lead();
    }
    let ma = a.min_degrees();
    let mb = b.min_degrees();
    let common: Vec<u32> = ma.iter().zip(&mb).map(|(x, y)| *x.min(y)).collect();
    let g = gcd_no_monomial(&a.div_monomial(&ma), &b.div_monomial(&mb));
    g.mul_monomial(&common)
}

fn gcd_no_monomial(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let nv = a.nvars();
    if a.len() == 1 || b.len() == 1 {
        return ZPoly::constant(nv, a.int_content().gcd(&b.int_content()));
    }
    let da = a.max_degrees();
    let db = b.max_degrees();
    if let Some(v) = (0..nv).find(|&v| (da[v] > 0) != (db[v] > 0)) {
        let (x, y) = if da[v] > 0 { (a, b) } else { (b, a) };
        let mut list = x.coefficients_in(v);
        list.push(y.clone());
        return gcd_many(nv, &list);
    }
    let used: Vec<usize> = (0..nv).filter(|&v| da[v] > 0).collect();
    modular_gcd(&a.select_vars(&used), &b.select_vars(&used)).embed_vars(nv, &used)
}

/// GCD of a list of polynomials in `nvars` variables.
pub fn gcd_many(nvars: usize, polys: &[ZPoly]) -> ZPoly {
    let mut ps: Vec<&ZPoly> = polys.iter().filter(|p| !p.is_zero()).collect();
    if ps.is_empty() {
        return ZPoly::zero(nvars);
    }
    ps.sort_by_key(|p| p.len());
    if ps.len() == 1 {
        return ps[0].clone().with_positive_lead();
    }
    if ps[0].is_constant() {
        return int_gcd_all(nvars, BigInt::zero(), &ps);
    }
    let mut g = if ps.len() > 2 {
        let mut mix: HashMap<Exps, BigInt> = HashMap::new();
        for (i, p) in ps[1..].iter().enumerate() {
            let r = BigInt::from(1 + (i as u64 * 7919) % 101);
            for (e, c) in p.terms() {
                *mix.entry(e.clone()).or_insert_with(BigInt::zero) += c * &r;
            }
        }
        let mix = ZPoly::from_terms(nvars, mix.into_iter().collect());
        if mix.is_zero() {
            gcd(ps[0], ps[1])
        } else {
            gcd(ps[0], &mix)
        }
    } else {
        gcd(ps[0], ps[1])
    };
    for (i, p) in ps.iter().enumerate().skip(1) {
        if g.is_constant() {
            let k = g.lead().map(|t| t.1.abs()).unwrap_or_default();
            return int_gcd_all(nvars, k, &ps[i..]);
        }
        if p.div_exact(&g).is_none() {
            g = gcd(&g, p);
        }
    }
    g
}

fn int_gcd_all(nvars: usize, start: BigInt, ps: &[&ZPoly]) -> ZPoly {
    let mut k = start;
    for p in ps {
        if k.is_one() {
            break;
        }
        k = k.gcd(&p.int_content());
    }
    ZPoly::constant(nvars, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(nvars: usize, t: &[(&[u32], i64)]) -> ZPoly {
        ZPoly::from_terms(
            nvars,
            t.iter()
                .map(|(e, c)| (e.to_vec(), BigInt::from(*c)))
                .collect(),
        )
    }

    #[test]
    fn primes_are_prime() {
        let ps = primes();
        assert_eq!(ps[0], 2147483647);
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        assert!(!is_prime(2147483647 - 2));
        assert!(is_prime(1_000_000_007));
    }

    #[test]
    fn univariate_gcd() {
        // (x+1)(x-2) and (x+1)(x+5) over Z
        let a = zp(1, &[(&[2], 1), (&[1], -1), (&[0], -2)]);
        let b = zp(1, &[(&[2], 1), (&[1], 6), (&[0], 5)]);
        assert_eq!(gcd(&a, &b), zp(1, &[(&[1], 1), (&[0], 1)]));
    }

    #[test]
    fn bivariate_gcd_with_integer_content() {
        // g = 3xy - 2, a = g (x + y^2), b = 2 g (x - 1)
        let g = zp(2, &[(&[1, 1], 3), (&[0, 0], -2)]);
        let a = g.mul(&zp(2, &[(&[1, 0], 1), (&[0, 2], 1)]));
        let b = g.mul(&zp(2, &[(&[1, 0], 2), (&[0, 0], -2)]));
        assert_eq!(gcd(&a, &b), g);
    }

    #[test]
    fn trivariate_gcd_with_large_coefficients() {
        let big = BigInt::parse_bytes(b"123456789012345678901234567890", 10).unwrap();
        let g = ZPoly::from_terms(
            3,
            vec![
                (vec![2, 0, 1], big.clone()),
                (vec![0, 1, 0], BigInt::from(-7)),
                (vec![0, 0, 3], BigInt::from(1)),
            ],
        );
        let u = zp(3, &[(&[1, 1, 0], 1), (&[0, 0, 1], 5), (&[0, 0, 0], 1)]);
        let v = zp(3, &[(&[0, 2, 0], 1), (&[1, 0, 0], -3), (&[0, 0, 2], 2)]);
        let a = g.mul(&u);
        let b = g.mul(&v);
        assert_eq!(gcd(&a, &b), g.with_positive_lead());
    }

    #[test]
    fn monomial_and_unused_variable_paths() {
        let a = zp(2, &[(&[2, 1], 4)]);
        let b = zp(2, &[(&[1, 3], 6), (&[3, 1], 2)]);
        assert_eq!(gcd(&a, &b), zp(2, &[(&[1, 1], 2)]));
        // gcd(x*(y+1), y+1) where x only occurs in the first argument
        let c = zp(2, &[(&[1, 1], 1), (&[1, 0], 1), (&[0, 1], 1), (&[0, 0], 1)]);
        let d = zp(2, &[(&[0, 1], 1), (&[0, 0], 1)]);
        assert_eq!(gcd(&c, &d), d);
    }

    #[test]
    fn gcd_many_coprime_and_common() {
        let f = zp(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let list: Vec<ZPoly> = (1..5)
            .map(|k| f.mul(&zp(2, &[(&[k, 0], 1), (&[0, 0], k as i64)])))
            .collect();
        assert_eq!(gcd_many(2, &list), f);
        let coprime = vec![
            zp(2, &[(&[1, 0], 1), (&[0, 0], 1)]),
            zp(2, &[(&[0, 1], 1), (&[0, 0], 1)]),
        ];
        assert_eq!(gcd_many(2, &coprime), zp(2, &[(&[0, 0], 1)]));
        assert!(gcd_many(2, &[]).is_zero());
    }
}
