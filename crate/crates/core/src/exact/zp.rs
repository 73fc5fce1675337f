//! Polynomials over 𝔽_ℓ for a word-sized odd prime ℓ, used to seed Hensel
//! lifting.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::PolyZ;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyZp {
    coeffs: Vec<u64>,
    p: u64,
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm(acc, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    acc
}

fn invm(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    powm(a, p - 2, p)
}

impl PolyZp {
    pub fn new(mut coeffs: Vec<u64>, p: u64) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyZp { coeffs, p }
    }

    pub fn from_poly_z(f: &PolyZ, p: u64) -> Self {
        let pb = BigInt::from(p);
        Self::new(
            f.coeffs()
                .iter()
                .map(|c| c.mod_floor(&pb).to_u64().unwrap())
                .collect(),
            p,
        )
    }

    /// Lift to ℤ with coefficients in `[0, p)`.
    pub fn to_poly_z(&self) -> PolyZ {
        PolyZ::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    fn constant(c: u64, p: u64) -> Self {
        Self::new(vec![c], p)
    }

    fn var(p: u64) -> Self {
        Self::new(vec![0, 1], p)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&0) + o.coeffs.get(i).unwrap_or(&0))
                .collect(),
            self.p,
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&0) + self.p - o.coeffs.get(i).unwrap_or(&0))
                .collect(),
            self.p,
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::new(Vec::new(), self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mulm(a, b, self.p)) % self.p;
            }
        }
        Self::new(out, self.p)
    }

    pub fn scale(&self, c: u64) -> Self {
        Self::new(self.coeffs.iter().map(|&a| mulm(a, c, self.p)).collect(), self.p)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(invm(self.lc(), self.p))
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = invm(d.lc(), self.p);
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::new(Vec::new(), self.p), self.clone());
        }
        let mut q = vec![0u64; r.len() - dd];
        for k in (0..q.len()).rev() {
            let t = mulm(r[k + dd], inv, self.p);
            if t == 0 {
                continue;
            }
            for (j, &dc) in d.coeffs.iter().enumerate() {
                r[k + j] = (r[k + j] + self.p - mulm(t, dc, self.p)) % self.p;
            }
            q[k] = t;
        }
        r.truncate(dd);
        (Self::new(q, self.p), Self::new(r, self.p))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s·self + t·o = g` monic.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::constant(1, p), Self::new(Vec::new(), p));
        let (mut t0, mut t1) = (Self::new(Vec::new(), p), Self::constant(1, p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = invm(r0.lc(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mulm(c, i as u64 % self.p, self.p))
                .collect(),
            self.p,
        )
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    fn pow_mod_big(&self, e: &BigUint, m: &Self) -> Self {
        let mut acc = Self::constant(1, self.p).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    fn pow_mod(&self, e: u64, m: &Self) -> Self {
        self.pow_mod_big(&BigUint::from(e), m)
    }
}

fn distinct_degree(f: &PolyZp) -> Vec<(PolyZp, usize)> {
    let p = f.p;
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = PolyZp::var(p);
    let mut h = x.rem(&rest);
    let mut d = 1;
    while let Some(deg) = rest.degree() {
        if deg < 2 * d {
            if deg > 0 {
                out.push((rest, deg));
            }
            break;
        }
        h = h.pow_mod(p, &rest);
        let g = rest.gcd(&h.sub(&x));
        if g.degree().unwrap_or(0) > 0 {
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    out
}

fn equal_degree(f: &PolyZp, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<PolyZp>) {
    let n = f.degree().unwrap();
    if n == d {
        out.push(f.monic());
        return;
    }
    let p = f.p;
    let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / 2u32;
    loop {
        let a = PolyZp::new((0..n).map(|_| rng.gen_range(0..p)).collect(), p);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = a.pow_mod_big(&e, f).sub(&PolyZp::constant(1, p));
        let g = f.gcd(&b);
        if let Some(dg) = g.degree() {
            if dg > 0 && dg < n {
                let h = f.div_rem(&g).0;
                equal_degree(&g, d, rng, out);
                equal_degree(&h, d, rng, out);
                return;
            }
        }
    }
}

/// Degrees of the irreducible factors of a squarefree polynomial over 𝔽_ℓ,
/// ascending, from distinct-degree factorization alone.
pub fn factor_degrees_zp(f: &PolyZp) -> Vec<usize> {
    let mut out = Vec::new();
    for (prod, d) in distinct_degree(&f.monic()) {
        let total = prod.degree().unwrap();
        out.extend(std::iter::repeat(d).take(total / d));
    }
    out
}

/// Monic irreducible factors of a squarefree polynomial over 𝔽_ℓ (ℓ odd),
/// sorted by degree then coefficients.
pub fn factor_squarefree_zp(f: &PolyZp) -> Vec<PolyZp> {
    assert!(f.p % 2 == 1, "odd characteristic only");
    let mut rng = ChaCha8Rng::seed_from_u64(f.p);
    let mut out = Vec::new();
    for (prod, d) in distinct_degree(&f.monic()) {
        equal_degree(&prod, d, &mut rng, &mut out);
    }
    out.sort_by(|a, b| a.coeffs.len().cmp(&b.coeffs.len()).then_with(|| a.coeffs.cmp(&b.coeffs)));
    out
}
