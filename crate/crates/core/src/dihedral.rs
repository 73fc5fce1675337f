//! Mod-2 analysis of the Riley polynomial: squarefreeness, the dihedral
//! quotient `D_m` attached to each irreducible factor over 𝔽₂, and the
//! independent check that `Λ mod 2` depends only on `p`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{ContradictionKind, Error, Result};
use crate::exact::{factor_f2, matrix_order, GfElem, Mat2, PolyF2, PolyZ, RingElem};

/// An irreducible factor of `Λ mod 2` and the order `m` of `ρ(x₁x₂)` over
/// the residue field it defines; the image of the knot group is `D_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DihedralImage {
    pub factor_mod2: PolyF2,
    pub m: u64,
}

/// Reduces `Λ` mod 2 and checks that no factor repeats.
pub fn reduce_and_check_squarefree(lambda: &PolyZ) -> Result<PolyF2> {
    if lambda.is_zero() || !lambda.lc().abs().is_odd() {
        return Err(Error::InvalidInput(
            "leading coefficient must be odd so the degree survives reduction mod 2".into(),
        ));
    }
    let reduced = PolyF2::from_poly_z(lambda);
    if !reduced.is_squarefree() {
        return Err(Error::contradiction(
            ContradictionKind::SquarefreeMod2,
            format!("{reduced} has a repeated factor over GF(2)"),
        ));
    }
    Ok(reduced)
}

/// `m` for one irreducible `f̄`: the order of `(1+y 1; y 1)` in
/// `SL(2, 𝔽₂[y]/(f̄))`, which must be odd, at least 3, and divide `p`.
pub fn dihedral_image(factor: &PolyF2, p: u64) -> Result<DihedralImage> {
    if !factor.is_irreducible() {
        return Err(Error::InvalidInput(format!("{factor} is not irreducible over GF(2)")));
    }
    let modulus = Arc::new(factor.clone());
    let y = GfElem::new(PolyF2::var(), &modulus);
    let one = y.one_like();
    let m = matrix_order(&Mat2::new(one.add_ref(&y), one.clone(), y, one))?;
    if m % 2 == 0 || m < 3 || p % m != 0 {
        return Err(Error::contradiction(
            ContradictionKind::DihedralOrder,
            format!("factor {factor} gives m = {m}, expected an odd divisor of {p} above 1"),
        ));
    }
    Ok(DihedralImage { factor_mod2: factor.clone(), m })
}

/// Dihedral images of every irreducible factor of `f mod 2`, in
/// [`factor_f2`] order. `f` must be squarefree mod 2.
pub fn images_of(f: &PolyZ, p: u64) -> Result<Vec<DihedralImage>> {
    let reduced = reduce_and_check_squarefree(f)?;
    factor_f2(&reduced)
        .into_iter()
        .map(|(g, _)| dihedral_image(&g, p))
        .collect()
}

/// `∏_{k=1}^{(p−1)/2} (y + ζᵏ + ζ⁻ᵏ)` for `ζ` a primitive `p`-th root of
/// unity over 𝔽₂, computed in `𝔽₂[x]/(Φ_p mod 2)` where `ζ = x`.
pub fn mod2_oracle(p: u64) -> Result<PolyF2> {
    if p < 3 || p % 2 == 0 {
        return Err(Error::InvalidInput(format!("oracle needs odd p ≥ 3, got {p}")));
    }
    let phi = Arc::new(PolyF2::from_poly_z(&cyclotomic(p)));
    let x = |k: u64| GfElem::new(PolyF2::monomial(k as usize), &phi);
    // Coefficients in y, lowest first, each in 𝔽₂[x]/(Φ̄_p).
    let mut acc = vec![x(0)];
    for k in 1..=(p - 1) / 2 {
        let c = x(k).add_ref(&x(p - k));
        let mut next = vec![acc[0].zero_like(); acc.len() + 1];
        for (i, a) in acc.iter().enumerate() {
            next[i] = next[i].add_ref(&a.mul_ref(&c));
            next[i + 1] = next[i + 1].add_ref(a);
        }
        acc = next;
    }
    let mut bits = Vec::with_capacity(acc.len());
    for (i, a) in acc.iter().enumerate() {
        match a.rep().degree() {
            None => bits.push(0),
            Some(0) => bits.push(1),
            Some(_) => {
                return Err(Error::contradiction(
                    ContradictionKind::Mod2Oracle,
                    format!("coefficient of y^{i} is not in GF(2): {}", a.rep()),
                ))
            }
        }
    }
    Ok(PolyF2::from_bits(bits))
}

/// `Φ_n` over ℤ by dividing `xⁿ − 1` by the cyclotomic factors of proper
/// divisors.
fn cyclotomic(n: u64) -> PolyZ {
    let mut num = PolyZ::monomial(1.into(), n as usize) - PolyZ::one();
    for d in (1..n).filter(|d| n % d == 0) {
        num = num.div_exact(&cyclotomic(d)).expect("cyclotomic divisibility");
    }
    num
}

fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
}

/// Total mod-2 degree carried by each dihedral order `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DihedralSpectrum {
    pub p: u64,
    pub degrees: BTreeMap<u64, usize>,
    /// Every `m` lies in `{3, 5}`, the only orders compatible with hidden
    /// symmetries.
    pub within_3_and_5: bool,
}

/// Checks that each divisor `m > 1` of `p` carries total degree `φ(m)/2`
/// and that no other `m` occurs.
pub fn dihedral_spectrum_check(images: &[DihedralImage], p: u64) -> Result<DihedralSpectrum> {
    let mut degrees = BTreeMap::new();
    for im in images {
        if im.m % 2 == 0 || p % im.m != 0 {
            return Err(Error::contradiction(
                ContradictionKind::DihedralOrder,
                format!("m = {} does not divide {p} or is even", im.m),
            ));
        }
        *degrees.entry(im.m).or_insert(0) += im.factor_mod2.degree().unwrap_or(0);
    }
    let expected: BTreeMap<u64, usize> = (2..=p)
        .filter(|m| p % m == 0)
        .map(|m| (m, (euler_phi(m) / 2) as usize))
        .collect();
    if degrees != expected {
        return Err(Error::contradiction(
            ContradictionKind::DihedralSpectrum,
            format!("degrees by m are {degrees:?}, expected {expected:?}"),
        ));
    }
    let within_3_and_5 = degrees.keys().all(|m| *m == 3 || *m == 5);
    Ok(DihedralSpectrum { p, degrees, within_3_and_5 })
}

/// Everything mod 2 about one knot's Riley polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mod2Analysis {
    pub reduced: PolyF2,
    pub images: Vec<DihedralImage>,
    pub oracle: PolyF2,
    pub spectrum: DihedralSpectrum,
}

pub fn analyze_mod2(lambda: &PolyZ, p: u64) -> Result<Mod2Analysis> {
    let reduced = reduce_and_check_squarefree(lambda)?;
    let oracle = mod2_oracle(p)?;
    if oracle != reduced {
        return Err(Error::contradiction(
            ContradictionKind::Mod2Oracle,
            format!("Λ mod 2 = {reduced}, but the cyclotomic product for p = {p} is {oracle}"),
        ));
    }
    let images = images_of(lambda, p)?;
    let spectrum = dihedral_spectrum_check(&images, p)?;
    Ok(Mod2Analysis { reduced, images, oracle, spectrum })
}
