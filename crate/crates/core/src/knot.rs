//! 2-bridge normal forms, the census of hyperbolic 2-bridge knots, and the
//! word `w` in the one-relator presentation `⟨x₁, x₂ | w x₁ w⁻¹ = x₂⟩`.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// Schubert normal form `(p, q)`: `p ≥ 3` odd, `0 < q < p` odd, coprime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TwoBridgeForm {
    p: u64,
    q: u64,
}

/// Result of [`canonicalize`]: the form plus whether reaching it required
/// passing to the mirror image.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Canonical {
    pub form: TwoBridgeForm,
    pub mirrored: bool,
}

impl TwoBridgeForm {
    /// Validates an already-canonical pair.
    pub fn new(p: u64, q: u64) -> Result<Self> {
        let c = canonicalize(p as i64, q as i64)?;
        if c.form.q != q {
            return Err(Error::InvalidInput(format!(
                "({p}, {q}) is not in normal form; canonical form is {}",
                c.form
            )));
        }
        Ok(c.form)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// False exactly for the (2, p) torus knots, `q ≡ ±1 (mod p)`.
    pub fn is_hyperbolic(&self) -> bool {
        self.q != 1 && self.q != self.p - 1
    }

    pub fn is_figure_eight(&self) -> bool {
        self.p == 5
    }

    /// `w = x₁^ε₁ x₂^ε₂ ⋯ x₂^ε_{p−1}` with `ε_i = (−1)^⌊iq/p⌋`.
    pub fn riley_word(&self) -> RileyWord {
        let letters = (1..self.p)
            .map(|i| Letter {
                generator: if i % 2 == 1 { Generator::X1 } else { Generator::X2 },
                exponent: if (i * self.q / self.p) % 2 == 0 { 1 } else { -1 },
            })
            .collect();
        RileyWord { knot: *self, letters }
    }

    /// Canonical representative of the knot's class under
    /// `q ↦ ±q^{±1} (mod p)`: the smallest canonical `q` in the class.
    pub fn class_representative(&self) -> TwoBridgeForm {
        let inv = mod_inverse(self.q, self.p);
        let other = canonical_residue(inv, self.p).0;
        TwoBridgeForm { p: self.p, q: self.q.min(other) }
    }
}

impl fmt::Display for TwoBridgeForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    let e = (a as i64).extended_gcd(&(m as i64));
    e.x.rem_euclid(m as i64) as u64
}

/// The odd representative in `(0, p)` of `±r (mod p)` and whether the sign
/// flipped.
fn canonical_residue(r: u64, p: u64) -> (u64, bool) {
    if r % 2 == 1 {
        (r, false)
    } else {
        (p - r, true)
    }
}

/// Brings `(p, q)` to normal form: `q` is reduced modulo `p` and, if the
/// residue is even, replaced by `p − q` (the odd representative of `−q`),
/// which is the mirror image.
pub fn canonicalize(p: i64, q: i64) -> Result<Canonical> {
    if p < 3 {
        return Err(Error::InvalidInput(format!("p = {p} must be at least 3")));
    }
    if p % 2 == 0 {
        return Err(Error::InvalidInput(format!(
            "even p = {p}: a 2-bridge link, not a knot"
        )));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::InvalidInput(format!("p = {p} and q = {q} are not coprime")));
    }
    let r = q.rem_euclid(p) as u64;
    let (q, mirrored) = canonical_residue(r, p as u64);
    Ok(Canonical { form: TwoBridgeForm { p: p as u64, q }, mirrored })
}

/// Every canonical `q` for this `p`, torus knots included, ascending.
pub fn canonical_qs(p: u64) -> Vec<u64> {
    (1..p).step_by(2).filter(|q| q.gcd(&p) == 1).collect()
}

/// Hyperbolic 2-bridge knots with `p ≤ max_p`, one per knot up to mirror
/// image, sorted by `(p, q)`.
pub fn enumerate_census(max_p: u64) -> Vec<TwoBridgeForm> {
    let mut out = Vec::new();
    for p in (3..=max_p).step_by(2) {
        for q in canonical_qs(p) {
            let k = TwoBridgeForm { p, q };
            if k.is_hyperbolic() && k.class_representative() == k {
                out.push(k);
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Generator {
    X1,
    X2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Letter {
    pub generator: Generator,
    pub exponent: i8,
}

/// The word `w` of the relator `w x₁ w⁻¹ = x₂`; letters alternate `x₁, x₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RileyWord {
    knot: TwoBridgeForm,
    letters: Vec<Letter>,
}

impl RileyWord {
    pub fn knot(&self) -> TwoBridgeForm {
        self.knot
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn exponents(&self) -> Vec<i8> {
        self.letters.iter().map(|l| l.exponent).collect()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.exponent as i64).sum()
    }

    /// Letters in reverse order, exponents unchanged.
    pub fn reversed(&self) -> Vec<Letter> {
        self.letters.iter().rev().copied().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(p: u64, q: u64) -> TwoBridgeForm {
        TwoBridgeForm::new(p, q).unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(canonicalize(5, 3).unwrap().form, form(5, 3));
        let c = canonicalize(5, 13).unwrap();
        assert_eq!((c.form, c.mirrored), (form(5, 3), false));
        let c = canonicalize(5, 2).unwrap();
        assert_eq!((c.form, c.mirrored), (form(5, 3), true));
        let c = canonicalize(7, -3).unwrap();
        assert_eq!((c.form, c.mirrored), (form(7, 3), true));
        let err = canonicalize(4, 1).unwrap_err().to_string();
        assert!(err.contains("even p"), "{err}");
        assert!(canonicalize(1, 1).is_err());
        assert!(canonicalize(9, 3).is_err());
        assert!(TwoBridgeForm::new(5, 2).is_err());
    }

    #[test]
    fn hyperbolicity() {
        assert!(!form(3, 1).is_hyperbolic());
        assert!(form(5, 3).is_hyperbolic());
        assert!(!form(7, 1).is_hyperbolic());
        assert!(form(7, 5).is_hyperbolic());
        assert!(form(7, 3).is_hyperbolic());
    }

    #[test]
    fn riley_words() {
        let w = form(3, 1).riley_word();
        assert_eq!(w.exponents(), vec![1, 1]);
        assert_eq!(w.letters()[0].generator, Generator::X1);
        assert_eq!(w.letters()[1].generator, Generator::X2);
        assert_eq!(form(5, 3).riley_word().exponents(), vec![1, -1, -1, 1]);
        assert_eq!(form(7, 3).riley_word().exponents(), vec![1, 1, -1, -1, 1, 1]);
    }

    #[test]
    fn census_examples() {
        assert_eq!(enumerate_census(3), vec![]);
        assert_eq!(enumerate_census(5), vec![form(5, 3)]);
        assert!(enumerate_census(7).contains(&form(7, 3)));
        assert_eq!(enumerate_census(9), vec![form(5, 3), form(7, 3), form(9, 5)]);
    }

    #[test]
    fn census_has_no_duplicates_and_even_exponent_sums() {
        let census = enumerate_census(99);
        for k in &census {
            assert!(k.is_hyperbolic());
            assert_eq!(k.riley_word().exponent_sum() % 2, 0, "{k}");
            let inv = mod_inverse(k.q, k.p);
            for other in [k.q, k.p - k.q, inv, k.p - inv] {
                let c = canonicalize(k.p as i64, other as i64).unwrap().form;
                assert_eq!(c.class_representative(), *k);
                if c != *k {
                    assert!(!census.contains(&c));
                }
            }
        }
        // p = 11 gives 6_2 and 7_2.
        assert_eq!(census.iter().filter(|k| k.p == 11).count(), 2);
    }
}
