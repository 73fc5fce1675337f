//! Invariants of the number field `ℚ[y]/(f)` for one irreducible factor `f`
//! of the Riley polynomial: discriminant, the splitting of 2, and exact
//! membership tests for quadratic subfields `ℚ(√n)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_prime::nt_funcs::{factorize64, is_prime64};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{ContradictionKind, Error, Result};
use crate::exact::zp::{factor_squarefree_zp, PolyZp};
use crate::exact::{
    discriminant, factor_f2, factor_z_with, has_nonreal_root, FactorConfig, PolyF2, PolyQ, PolyZ,
    QuotElem, QuotRing,
};

/// Why `√n` is known not to lie in the field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AbsenceReason {
    /// `2 ∤ disc(f)`, so 2 is unramified and `ℚ(i)` cannot be a subfield.
    OddDiscriminant { disc: BigInt },
    /// The field is ℚ.
    RationalField,
    /// A quadratic subfield needs even degree.
    OddDegree { degree: usize },
    /// `prime` ramifies in `ℚ(√n)` but does not divide `lc(f)·disc(f)`.
    Ramification { prime: u64 },
    /// `prime` is inert in `ℚ(√n)`, yet `f mod prime` has a factor of odd
    /// degree, so some prime of the field above it has odd residue degree.
    InertPrime { prime: u64, residue_degree: usize },
    /// `disc(f)·n` is not a square.
    QuadraticDiscriminant,
    /// `f` stays irreducible over `ℚ(√n)`: the norm of `f(t − k√n)` is
    /// irreducible over ℚ.
    NormIrreducible { shift: u32 },
}

#[derive(Clone, Debug, PartialEq)]
pub enum SqrtStatus {
    CertifiedAbsent(AbsenceReason),
    /// `z` with `z² = n` in `ℚ[y]/(f)`, verified exactly.
    PresentWitness(PolyQ),
    Undetermined(String),
}

impl SqrtStatus {
    pub fn is_absent(&self) -> bool {
        matches!(self, SqrtStatus::CertifiedAbsent(_))
    }

    pub fn witness(&self) -> Option<&PolyQ> {
        match self {
            SqrtStatus::PresentWitness(z) => Some(z),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqrtConfig {
    /// Witnesses whose coordinates need a larger common denominator are
    /// reported as undetermined.
    pub denominator_bound: BigInt,
    pub factor: FactorConfig,
    /// Odd primes examined by the inert-prime filter.
    pub inert_prime_limit: u64,
    /// Shifts `k` tried before giving up on a squarefree norm.
    pub max_shift: u32,
}

impl Default for SqrtConfig {
    fn default() -> Self {
        SqrtConfig {
            denominator_bound: BigInt::one() << 64,
            factor: FactorConfig::default(),
            inert_prime_limit: 400,
            max_shift: 16,
        }
    }
}

fn check_irreducible_input(f: &PolyZ) -> Result<()> {
    match f.degree() {
        None | Some(0) => Err(Error::InvalidInput(format!("{f} does not define a number field"))),
        _ => Ok(()),
    }
}

/// Residue degrees of the primes above 2: the degrees of the irreducible
/// factors of `f mod 2`, ascending.
pub fn two_splitting(f: &PolyZ) -> Result<Vec<usize>> {
    check_irreducible_input(f)?;
    let reduced = PolyF2::from_poly_z(f);
    if reduced.degree() != f.degree() || !reduced.is_squarefree() {
        return Err(Error::contradiction(
            ContradictionKind::SquarefreeMod2,
            format!("{f} is not squarefree of full degree mod 2"),
        ));
    }
    Ok(factor_f2(&reduced)
        .into_iter()
        .map(|(g, _)| g.degree().unwrap())
        .collect())
}

/// Decides whether `ℚ(i)` is a subfield, certifying absence from an odd
/// discriminant when possible.
pub fn qi_exclusion(f: &PolyZ, cfg: &SqrtConfig) -> Result<SqrtStatus> {
    check_irreducible_input(f)?;
    let disc = discriminant(f);
    if disc.is_odd() {
        return Ok(SqrtStatus::CertifiedAbsent(AbsenceReason::OddDiscriminant { disc }));
    }
    sqrt_in_field(f, -1, cfg)
}

/// Degree-2 factors with negative discriminant: the only shape an
/// arithmetic knot complement's trace field can take here.
pub fn arithmetic_candidate(f: &PolyZ) -> bool {
    f.degree() == Some(2) && discriminant(f).is_negative()
}

/// A factor some of whose roots are non-real; only those can carry the
/// holonomy of a hyperbolic structure.
pub fn geometric_candidate(f: &PolyZ) -> bool {
    has_nonreal_root(f)
}

fn is_squarefree_int(n: i64) -> bool {
    n != 0 && factorize64(n.unsigned_abs()).values().all(|&e| e == 1)
}

fn pow_mod(a: u64, mut e: u64, m: u64) -> u64 {
    let m = m as u128;
    let (mut acc, mut base) = (1u128, a as u128 % m);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u64
}

/// `n` is a non-residue mod the odd prime `ell` (which does not divide `n`).
fn is_nonresidue(n: i64, ell: u64) -> bool {
    let r = n.rem_euclid(ell as i64) as u64;
    pow_mod(r, (ell - 1) / 2, ell) == ell - 1
}

/// Decides whether `n` (squarefree) has a square root in `ℚ[y]/(f)`, `f`
/// irreducible over ℚ.
///
/// Cheap certificates come first: degree parity, primes ramified in
/// `ℚ(√n)` that are unramified in the field, and primes inert in `ℚ(√n)`
/// under which `f` has an odd-degree factor. Quadratic fields are settled by
/// their discriminant. Otherwise `f` is factored over `ℚ(√n)` through the
/// norm of `f(t − k√n)`; a proper factor yields `√n` as a polynomial in `y`,
/// which is checked exactly before being returned.
pub fn sqrt_in_field(f: &PolyZ, n: i64, cfg: &SqrtConfig) -> Result<SqrtStatus> {
    check_irreducible_input(f)?;
    if !is_squarefree_int(n) {
        return Err(Error::InvalidInput(format!("{n} is not squarefree")));
    }
    let f = f.primitive_part();
    let ring = QuotRing::new(f.to_q())?;
    if n == 1 {
        return Ok(SqrtStatus::PresentWitness(PolyQ::one()));
    }
    let d = f.degree().unwrap();
    if d == 1 {
        return Ok(SqrtStatus::CertifiedAbsent(AbsenceReason::RationalField));
    }
    if d % 2 == 1 {
        return Ok(SqrtStatus::CertifiedAbsent(AbsenceReason::OddDegree { degree: d }));
    }

    let disc = discriminant(&f);
    let bad = &disc * f.lc();
    let field_disc = if n.rem_euclid(4) == 1 { n } else { 4 * n };
    for &prime in factorize64(field_disc.unsigned_abs()).keys() {
        if !(&bad % prime).is_zero() {
            return Ok(SqrtStatus::CertifiedAbsent(AbsenceReason::Ramification { prime }));
        }
    }

    if let Some(reason) = inert_prime_certificate(&f, n, &bad, cfg.inert_prime_limit) {
        return Ok(SqrtStatus::CertifiedAbsent(reason));
    }

    if d == 2 {
        return Ok(quadratic_case(&f, n, &disc, &ring));
    }
    norm_factor_case(&f, n, &ring, cfg)
}

fn inert_prime_certificate(f: &PolyZ, n: i64, bad: &BigInt, limit: u64) -> Option<AbsenceReason> {
    if n.rem_euclid(8) == 5 && bad.is_odd() {
        let degs: Vec<usize> =
            factor_f2(&PolyF2::from_poly_z(f)).iter().map(|(g, _)| g.degree().unwrap()).collect();
        if let Some(&odd) = degs.iter().find(|&&s| s % 2 == 1) {
            return Some(AbsenceReason::InertPrime { prime: 2, residue_degree: odd });
        }
    }
    for ell in (3..=limit).filter(|&l| is_prime64(l)) {
        if (bad % ell).is_zero() || n % ell as i64 == 0 || !is_nonresidue(n, ell) {
            continue;
        }
        let reduced = PolyZp::from_poly_z(f, ell);
        for g in factor_squarefree_zp(&reduced) {
            let s = g.degree().unwrap();
            if s % 2 == 1 {
                return Some(AbsenceReason::InertPrime { prime: ell, residue_degree: s });
            }
        }
    }
    None
}

/// `f = ay² + by + c` with discriminant `D`: `√D = 2ay + b`, so `√n` lies in
/// the field iff `D = n·k²` for a rational `k`, and then `√n = (2ay + b)/k`.
fn quadratic_case(f: &PolyZ, n: i64, disc: &BigInt, ring: &QuotRing<BigRational>) -> SqrtStatus {
    let k2 = disc / n;
    if !(disc % n).is_zero() || k2.is_negative() {
        return SqrtStatus::CertifiedAbsent(AbsenceReason::QuadraticDiscriminant);
    }
    let k = k2.sqrt();
    if &k * &k != k2 {
        return SqrtStatus::CertifiedAbsent(AbsenceReason::QuadraticDiscriminant);
    }
    let kq = BigRational::from_integer(k);
    let z = PolyQ::new(vec![
        BigRational::from_integer(f.coeff(1)) / &kq,
        BigRational::from_integer(f.coeff(2) * 2) / &kq,
    ]);
    verify_witness(ring, z, n)
}

fn verify_witness(ring: &QuotRing<BigRational>, z: PolyQ, n: i64) -> SqrtStatus {
    let ze = ring.elem(z);
    if (&ze * &ze).as_constant() == Some(BigRational::from_integer(n.into())) {
        SqrtStatus::PresentWitness(ze.rep().clone())
    } else {
        SqrtStatus::Undetermined(format!("candidate {:?} failed exact verification", ze.rep()))
    }
}

/// `u + S·v` in `R[S]/(S² − n)`.
#[derive(Clone)]
struct Conj<T> {
    u: T,
    v: T,
}

/// `N(t) = f(t − k√n)·f(t + k√n) ∈ ℤ[t]`.
fn shifted_norm(f: &PolyZ, n: i64, k: u32) -> PolyZ {
    let nz = PolyZ::constant(n.into());
    let kz = PolyZ::constant(k.into());
    let t = PolyZ::var();
    // (t − kS)^i, starting from 1.
    let mut pw = Conj { u: PolyZ::one(), v: PolyZ::zero() };
    let mut acc = Conj { u: PolyZ::zero(), v: PolyZ::zero() };
    for c in f.coeffs() {
        let cz = PolyZ::constant(c.clone());
        acc.u = &acc.u + &(&pw.u * &cz);
        acc.v = &acc.v + &(&pw.v * &cz);
        // (u + Sv)(t − kS) = ut − knv + S(vt − ku)
        let u = &(&pw.u * &t) - &(&(&pw.v * &kz) * &nz);
        let v = &(&pw.v * &t) - &(&pw.u * &kz);
        pw = Conj { u, v };
    }
    &(&acc.u * &acc.u) - &(&(&acc.v * &acc.v) * &nz)
}

fn norm_factor_case(
    f: &PolyZ,
    n: i64,
    ring: &QuotRing<BigRational>,
    cfg: &SqrtConfig,
) -> Result<SqrtStatus> {
    for k in 1..=cfg.max_shift {
        let norm = shifted_norm(f, n, k);
        let nq = norm.to_q();
        if nq.gcd(&nq.derivative()).degree() != Some(0) {
            continue;
        }
        let factors = match factor_z_with(&norm, &cfg.factor) {
            Ok(fs) => fs,
            Err(e @ (Error::RecombinationBound(_) | Error::HenselPrecision(_))) => {
                return Ok(SqrtStatus::Undetermined(e.to_string()))
            }
            Err(e) => return Err(e),
        };
        if factors.len() == 1 {
            return Ok(SqrtStatus::CertifiedAbsent(AbsenceReason::NormIrreducible { shift: k }));
        }
        // G₁(y + kS) = A + S·B in K[S]/(S² − n). One of A ± √n·B vanishes,
        // so ±√n = −A/B.
        let nq_elem = ring.constant(BigRational::from_integer(n.into()));
        let kq = ring.constant(BigRational::from_integer(k.into()));
        let y = ring.gen();
        let mut acc = Conj { u: ring.zero(), v: ring.zero() };
        for c in factors[0].coeffs().iter().rev() {
            let u = &(&(&acc.u * &y) + &(&(&acc.v * &kq) * &nq_elem))
                + &ring.constant(BigRational::from_integer(c.clone()));
            let v = &(&acc.v * &y) + &(&acc.u * &kq);
            acc = Conj { u, v };
        }
        let Some(binv) = acc.v.inverse() else {
            return Ok(SqrtStatus::Undetermined("norm factor gave B = 0".into()));
        };
        let z: QuotElem<BigRational> = -&(&acc.u * &binv);
        let den = z.coords().iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        if den > cfg.denominator_bound {
            return Ok(SqrtStatus::Undetermined(format!(
                "witness denominator {den} exceeds the bound {}",
                cfg.denominator_bound
            )));
        }
        return Ok(verify_witness(ring, z.rep().clone(), n));
    }
    Ok(SqrtStatus::Undetermined(format!(
        "no shift k ≤ {} gave a squarefree norm",
        cfg.max_shift
    )))
}

/// Per-factor field data.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldInvariants {
    pub factor: PolyZ,
    pub degree: usize,
    pub disc: BigInt,
    pub disc_odd: bool,
    pub two_splitting: Vec<usize>,
    pub qi_status: SqrtStatus,
    pub sqrtm3_status: SqrtStatus,
    pub arithmetic_candidate: bool,
    pub geometric_candidate: bool,
}

pub fn field_invariants(f: &PolyZ, cfg: &SqrtConfig) -> Result<FieldInvariants> {
    let disc = discriminant(f);
    Ok(FieldInvariants {
        factor: f.clone(),
        degree: f.degree().unwrap_or(0),
        disc_odd: disc.is_odd(),
        disc,
        two_splitting: two_splitting(f)?,
        qi_status: qi_exclusion(f, cfg)?,
        sqrtm3_status: sqrt_in_field(f, -3, cfg)?,
        arithmetic_candidate: arithmetic_candidate(f),
        geometric_candidate: geometric_candidate(f),
    })
}
