//! The parabolic representation `ρ(x₁) = (1 1; 0 1)`, `ρ(x₂) = (1 0; y 1)`:
//! the Riley polynomial `Λ = ρ(w)₁₁`, its factors, and the longitude image
//! `(±1 g; 0 ±1)` over each factor.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::dihedral::reduce_and_check_squarefree;
use crate::error::{ContradictionKind, Error, Result};
use crate::exact::{
    factor_z_with, minpoly_integral, FactorConfig, Mat2, PolyQ, PolyZ, QuotElem, QuotRing, RingElem,
};
use crate::knot::{Generator, Letter, RileyWord, TwoBridgeForm};

#[derive(Clone, Debug, PartialEq)]
pub struct RileyPolynomial {
    pub knot: TwoBridgeForm,
    /// `Λ`, with positive leading coefficient.
    pub lambda: PolyZ,
    /// Irreducible factors over ℤ, primitive with positive leading
    /// coefficient, sorted.
    pub factors: Vec<PolyZ>,
    /// Sign of `Λ(0)`; `|Λ(0)| = 1` always.
    pub constant_sign: i8,
}

fn letter_matrix<R: RingElem>(l: &Letter, one: &R, y: &R) -> Mat2<R> {
    let zero = one.zero_like();
    let s = if l.exponent > 0 { one.clone() } else { one.neg_ref() };
    match l.generator {
        Generator::X1 => Mat2::new(one.clone(), s, zero, one.clone()),
        Generator::X2 => Mat2::new(one.clone(), zero, s.mul_ref(y), one.clone()),
    }
}

fn word_matrix<'a, R: RingElem + 'a>(
    letters: impl IntoIterator<Item = &'a Letter>,
    one: &R,
    y: &R,
) -> Mat2<R> {
    letters
        .into_iter()
        .fold(Mat2::identity_like(one), |acc, l| acc.mul(&letter_matrix(l, one, y)))
}

/// `ρ(w)` over `ℤ[y]`.
pub fn word_image(w: &RileyWord) -> Mat2<PolyZ> {
    word_matrix(w.letters(), &PolyZ::one(), &PolyZ::var())
}

/// Builds `Λ`, verifies its shape and the relator `W X₁ = X₂ W` modulo `Λ`,
/// checks squarefreeness mod 2, then factors over ℤ.
pub fn riley_polynomial(w: &RileyWord) -> Result<RileyPolynomial> {
    riley_polynomial_with(w, &FactorConfig::default())
}

/// [`riley_polynomial`] with explicit factorization limits.
pub fn riley_polynomial_with(w: &RileyWord, fc: &FactorConfig) -> Result<RileyPolynomial> {
    let knot = w.knot();
    let big_w = word_image(w);
    let mut lambda = big_w.a.clone();
    if lambda.lc().is_negative() {
        lambda = -&lambda;
    }
    let want_deg = ((knot.p() - 1) / 2) as usize;
    if lambda.degree() != Some(want_deg) || !lambda.lc().is_one() || !lambda.coeff(0).abs().is_one() {
        return Err(Error::contradiction(
            ContradictionKind::RileyShape,
            format!("{knot}: Λ = {lambda}, expected degree {want_deg} with unit end coefficients"),
        ));
    }
    let x1 = Mat2::new(PolyZ::one(), PolyZ::one(), PolyZ::zero(), PolyZ::one());
    let x2 = Mat2::new(PolyZ::one(), PolyZ::zero(), PolyZ::var(), PolyZ::one());
    let diff = big_w.mul(&x1).sub(&x2.mul(&big_w));
    for e in [&diff.a, &diff.b, &diff.c, &diff.d] {
        if !e.rem(&lambda)?.is_zero() {
            return Err(Error::contradiction(
                ContradictionKind::Relator,
                format!("{knot}: W·X1 − X2·W has entry {e} not divisible by Λ"),
            ));
        }
    }
    reduce_and_check_squarefree(&lambda)?;
    let factors = factor_z_with(&lambda, fc)?;
    let constant_sign = if lambda.coeff(0).is_positive() { 1 } else { -1 };
    Ok(RileyPolynomial { knot, lambda, factors, constant_sign })
}

/// The longitude image over one irreducible factor `f` of `Λ`.
#[derive(Clone, Debug, PartialEq)]
pub struct CuspData {
    pub factor: PolyZ,
    /// `±1`: the diagonal of `ρ(λ)`.
    pub diagonal_sign: i8,
    pub g0: QuotElem<BigInt>,
    pub g: QuotElem<BigInt>,
    /// Minimal polynomial of `g₀` over ℚ.
    pub cusp_minpoly: PolyQ,
    pub cusp_degree: usize,
}

/// `ρ(λ)` for `λ = rev(w)·w·x₁^{−2e}`, `e = Σεᵢ`, computed in
/// `ℤ[y]/(f)`. It must be `(±1 g; 0 ±1)`, commute with `X₁`, and have `g`
/// divisible by 2 coordinatewise.
pub fn longitude(w: &RileyWord, f: &PolyZ) -> Result<CuspData> {
    let knot = w.knot();
    let ring = QuotRing::new(f.clone())?;
    let (one, y) = (ring.one(), ring.gen());
    let big_w = word_matrix(w.letters(), &one, &y);
    let rev = word_matrix(w.reversed().iter(), &one, &y);
    let e = w.exponent_sum();
    let shift = Mat2::new(one.clone(), ring.constant(BigInt::from(-2 * e)), ring.zero(), one.clone());
    let l = rev.mul(&big_w).mul(&shift);

    let fail = |what: &str| {
        Error::contradiction(ContradictionKind::Longitude, format!("{knot} mod {f}: {what}; ρ(λ) = {l:?}"))
    };
    if !l.c.is_zero_elem() {
        return Err(fail("lower-left entry is not zero"));
    }
    let diag = match (l.a.as_constant(), l.d.as_constant()) {
        (Some(a), Some(d)) if a == d && a.abs().is_one() => a,
        _ => return Err(fail("diagonal is not ±1")),
    };
    let x1 = Mat2::new(one.clone(), one.clone(), ring.zero(), one.clone());
    if l.mul(&x1) != x1.mul(&l) {
        return Err(fail("does not commute with X1"));
    }
    let g = if diag.is_negative() { l.b.neg_ref() } else { l.b.clone() };
    let two = BigInt::from(2);
    let mut half = Vec::with_capacity(ring.degree());
    for c in g.coords() {
        let (q, r) = c.div_rem(&two);
        if !r.is_zero() {
            return Err(fail("g is not divisible by 2"));
        }
        half.push(q);
    }
    let g0 = ring.elem(PolyZ::new(half));
    let cusp_minpoly = minpoly_integral(&g0);
    let cusp_degree = cusp_minpoly.degree().unwrap_or(0);
    Ok(CuspData {
        factor: f.clone(),
        diagonal_sign: if diag.is_positive() { 1 } else { -1 },
        g0,
        g,
        cusp_minpoly,
        cusp_degree,
    })
}

/// Minimal polynomial of the cusp parameter `g` and its degree.
pub fn cusp_field(cd: &CuspData) -> (PolyQ, usize) {
    let m = minpoly_integral(&cd.g);
    let d = m.degree().unwrap_or(0);
    (m, d)
}
