//! Polynomials over 𝔽₂ packed 64 coefficients to a word, their factorization,
//! and arithmetic in the residue rings `𝔽₂[y]/(f)`.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::{render_terms, PolyZ};
use super::ring::RingElem;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyF2 {
    // bit i of words[i / 64] is the coefficient of y^i; no trailing zero words
    words: Vec<u64>,
}

impl PolyF2 {
    fn from_words(mut words: Vec<u64>) -> Self {
        while words.last() == Some(&0) {
            words.pop();
        }
        PolyF2 { words }
    }

    pub fn zero() -> Self {
        PolyF2::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn var() -> Self {
        Self::monomial(1)
    }

    pub fn monomial(k: usize) -> Self {
        let mut w = vec![0u64; k / 64 + 1];
        w[k / 64] = 1 << (k % 64);
        PolyF2 { words: w }
    }

    /// From coefficients lowest degree first; only the parity of each entry
    /// matters.
    pub fn from_bits<I: IntoIterator<Item = u8>>(bits: I) -> Self {
        let mut words = Vec::new();
        for (i, b) in bits.into_iter().enumerate() {
            if i / 64 >= words.len() {
                words.push(0);
            }
            if b & 1 == 1 {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        Self::from_words(words)
    }

    pub fn from_poly_z(p: &PolyZ) -> Self {
        Self::from_bits(p.coeffs().iter().map(|c| u8::from(c.is_odd())))
    }

    pub fn to_poly_z(&self) -> PolyZ {
        PolyZ::new(self.bits().into_iter().map(BigInt::from).collect())
    }

    /// Coefficients lowest degree first.
    pub fn bits(&self) -> Vec<u8> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|i| u8::from(self.coeff(i))).collect(),
        }
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        let top = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.words.len().max(o.words.len());
        Self::from_words(
            (0..n)
                .map(|i| self.words.get(i).unwrap_or(&0) ^ o.words.get(i).unwrap_or(&0))
                .collect(),
        )
    }

    fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (ws, bs) = (k / 64, k % 64);
        let mut out = vec![0u64; self.words.len() + ws + 1];
        for (i, &w) in self.words.iter().enumerate() {
            out[i + ws] ^= w << bs;
            if bs > 0 {
                out[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        Self::from_words(out)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (Some(da), Some(db)) = (self.degree(), o.degree()) else {
            return Self::zero();
        };
        let mut out = vec![0u64; (da + db) / 64 + 2];
        for i in 0..=da {
            if !self.coeff(i) {
                continue;
            }
            let (ws, bs) = (i / 64, i % 64);
            for (j, &w) in o.words.iter().enumerate() {
                out[j + ws] ^= w << bs;
                if bs > 0 {
                    out[j + ws + 1] ^= w >> (64 - bs);
                }
            }
        }
        Self::from_words(out)
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let mut r = self.clone();
        let mut q = Self::zero();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let shift = dr - dd;
            r = r.add(&d.shl(shift));
            q = q.add(&Self::monomial(shift));
        }
        (q, r)
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    pub fn derivative(&self) -> Self {
        let Some(d) = self.degree() else {
            return Self::zero();
        };
        Self::from_bits((1..=d).map(|i| u8::from(i % 2 == 1 && self.coeff(i))))
    }

    /// Square root of a polynomial with only even-degree terms (a perfect
    /// square in characteristic 2).
    fn sqrt_of_square(&self) -> Self {
        let d = self.degree().unwrap_or(0);
        debug_assert!(self.derivative().is_zero());
        Self::from_bits((0..=d / 2).map(|i| u8::from(self.coeff(2 * i))))
    }

    pub fn mul_mod(&self, o: &Self, m: &Self) -> Self {
        self.mul(o).rem(m)
    }

    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one().rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m);
            }
            base = base.mul_mod(&base, m);
            e >>= 1;
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    pub fn is_irreducible(&self) -> bool {
        matches!(factor_f2(self).as_slice(), [(_, 1)]) && self.degree().unwrap_or(0) > 0
    }

    /// Degree first, then coefficients from the constant term upward.
    pub fn canonical_cmp(&self, o: &Self) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then_with(|| self.bits().cmp(&o.bits()))
    }
}

impl fmt::Display for PolyF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(&self.bits(), "y", |b| *b == 0, |_| (false, "1".into())))
    }
}

impl fmt::Debug for PolyF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2[{self}]")
    }
}

/// Squarefree decomposition: pairs `(g, i)` with `f = ∏ g^i`, `g` squarefree.
fn squarefree_decomposition(f: &PolyF2) -> Vec<(PolyF2, u32)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let fp = f.derivative();
    if fp.is_zero() {
        for (g, m) in squarefree_decomposition(&f.sqrt_of_square()) {
            out.push((g, 2 * m));
        }
        return out;
    }
    let mut c = f.gcd(&fp);
    let mut w = f.div_rem(&c).0;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.div_rem(&y).0;
        if z.degree().unwrap_or(0) > 0 {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = c.div_rem(&w).0;
    }
    if c.degree().unwrap_or(0) > 0 {
        for (g, m) in squarefree_decomposition(&c.sqrt_of_square()) {
            out.push((g, 2 * m));
        }
    }
    out
}

/// Splits a squarefree polynomial into products of irreducibles of equal
/// degree: pairs `(product, degree)`.
fn distinct_degree(f: &PolyF2) -> Vec<(PolyF2, usize)> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = PolyF2::var().rem(&rest);
    let mut d = 1;
    while let Some(deg) = rest.degree() {
        if deg < 2 * d {
            if deg > 0 {
                out.push((rest, deg));
            }
            break;
        }
        h = h.mul_mod(&h, &rest);
        let g = rest.gcd(&h.add(&PolyF2::var()));
        if g.degree().unwrap_or(0) > 0 {
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    out
}

/// Equal-degree splitting via the absolute trace map.
fn equal_degree(f: &PolyF2, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<PolyF2>) {
    let n = f.degree().unwrap();
    if n == d {
        out.push(f.clone());
        return;
    }
    loop {
        let a = PolyF2::from_bits((0..n).map(|_| rng.gen::<u8>()));
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let mut t = a.clone();
        let mut acc = a.clone();
        for _ in 1..d {
            t = t.mul_mod(&t, f);
            acc = acc.add(&t);
        }
        let g = f.gcd(&acc);
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

/// Irreducible factorization over 𝔽₂ as `(factor, multiplicity)` pairs sorted
/// by [`PolyF2::canonical_cmp`].
pub fn factor_f2(f: &PolyF2) -> Vec<(PolyF2, u32)> {
    assert!(!f.is_zero(), "factor_f2 of the zero polynomial");
    let mut rng = ChaCha8Rng::seed_from_u64(0x2b);
    let mut out = Vec::new();
    for (g, mult) in squarefree_decomposition(f) {
        for (prod, d) in distinct_degree(&g) {
            let mut irr = Vec::new();
            equal_degree(&prod, d, &mut rng, &mut irr);
            out.extend(irr.into_iter().map(|h| (h, mult)));
        }
    }
    out.sort_by(|a, b| a.0.canonical_cmp(&b.0).then(a.1.cmp(&b.1)));
    out
}

/// Element of `𝔽₂[y]/(f)`; a finite field when `f` is irreducible.
#[derive(Clone, PartialEq, Eq)]
pub struct GfElem {
    rep: PolyF2,
    modulus: Arc<PolyF2>,
}

impl GfElem {
    pub fn new(p: PolyF2, modulus: &Arc<PolyF2>) -> Self {
        GfElem { rep: p.rem(modulus), modulus: Arc::clone(modulus) }
    }

    pub fn rep(&self) -> &PolyF2 {
        &self.rep
    }

    pub fn modulus(&self) -> &PolyF2 {
        &self.modulus
    }
}

impl RingElem for GfElem {
    fn add_ref(&self, rhs: &Self) -> Self {
        GfElem { rep: self.rep.add(&rhs.rep), modulus: Arc::clone(&self.modulus) }
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        GfElem {
            rep: self.rep.mul_mod(&rhs.rep, &self.modulus),
            modulus: Arc::clone(&self.modulus),
        }
    }
    fn neg_ref(&self) -> Self {
        self.clone()
    }
    fn is_zero_elem(&self) -> bool {
        self.rep.is_zero()
    }
    fn zero_like(&self) -> Self {
        GfElem { rep: PolyF2::zero(), modulus: Arc::clone(&self.modulus) }
    }
    fn one_like(&self) -> Self {
        GfElem::new(PolyF2::one(), &self.modulus)
    }
}

impl fmt::Debug for GfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod ({})", self.rep, self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn p(bits: &[u8]) -> PolyF2 {
        PolyF2::from_bits(bits.iter().copied())
    }

    #[test]
    fn worked_factorizations() {
        assert_eq!(factor_f2(&p(&[1, 1, 1])), vec![(p(&[1, 1, 1]), 1)]);
        assert_eq!(factor_f2(&p(&[1, 0, 1])), vec![(p(&[1, 1]), 2)]);
        assert_eq!(factor_f2(&p(&[0, 1, 0, 1])), vec![(p(&[0, 1]), 1), (p(&[1, 1]), 2)]);
    }

    #[test]
    fn degree_and_display() {
        assert_eq!(p(&[1, 0, 1]).degree(), Some(2));
        assert_eq!(p(&[1, 1, 0, 1]).to_string(), "y^3 + y + 1");
        assert_eq!(PolyF2::monomial(130).degree(), Some(130));
    }

    #[test]
    fn irreducible_counts_match_necklace_formula() {
        // Number of monic irreducibles of degree n over 𝔽₂: 2, 1, 2, 3, 6, 9, 18.
        let want = [2, 1, 2, 3, 6, 9, 18];
        for (n, &w) in (1..=7).zip(want.iter()) {
            let count = (0u32..(1 << n))
                .map(|low| {
                    let bits = (0..=n).map(|i| if i == n { 1 } else { ((low >> i) & 1) as u8 });
                    PolyF2::from_bits(bits)
                })
                .filter(PolyF2::is_irreducible)
                .count();
            assert_eq!(count, w, "degree {n}");
        }
    }

    #[test]
    fn brute_force_agrees_on_small_degrees() {
        // Exhaustive irreducibility by trial division for every polynomial of
        // degree ≤ 9.
        fn brute_irreducible(f: &PolyF2) -> bool {
            let n = f.degree().unwrap();
            if n == 0 {
                return false;
            }
            for d in 1..=n / 2 {
                for low in 0u32..(1 << d) {
                    let g = PolyF2::from_bits((0..=d).map(|i| if i == d { 1 } else { ((low >> i) & 1) as u8 }));
                    if f.rem(&g).is_zero() {
                        return false;
                    }
                }
            }
            true
        }
        for v in 2u32..(1 << 10) {
            let f = PolyF2::from_bits((0..10).map(|i| ((v >> i) & 1) as u8));
            assert_eq!(f.is_irreducible(), brute_irreducible(&f), "{f}");
        }
    }

    proptest! {
        #[test]
        fn reconstruction(bits in prop::collection::vec(0u8..2, 2..90)) {
            let f = PolyF2::from_bits(bits);
            prop_assume!(!f.is_zero());
            let fac = factor_f2(&f);
            let prod = fac.iter().fold(PolyF2::one(), |acc, (g, m)| {
                (0..*m).fold(acc, |a, _| a.mul(g))
            });
            prop_assert_eq!(prod, f);
            for (g, _) in &fac {
                prop_assert!(distinct_degree(g).len() == 1);
            }
        }

        #[test]
        fn ring_axioms(a in prop::collection::vec(0u8..2, 0..80),
                       b in prop::collection::vec(0u8..2, 0..80),
                       c in prop::collection::vec(0u8..2, 0..80)) {
            let (a, b, c) = (PolyF2::from_bits(a), PolyF2::from_bits(b), PolyF2::from_bits(c));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            if !b.is_zero() {
                let (q, r) = a.div_rem(&b);
                prop_assert_eq!(q.mul(&b).add(&r), a.clone());
                prop_assert!(r.degree() < b.degree());
            }
        }
    }
}
