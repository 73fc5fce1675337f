//! Factorization over ℤ: distinct-degree factorization modulo a good prime,
//! quadratic Hensel lifting, then subset recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::poly::PolyZ;
use super::zp::{factor_degrees_zp, factor_squarefree_zp, PolyZp};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorConfig {
    /// Cap on candidate subsets tried during recombination.
    pub max_subsets: u64,
    /// Cap on the bit size of the Hensel modulus.
    pub max_modulus_bits: u64,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig { max_subsets: 1 << 22, max_modulus_bits: 1 << 16 }
    }
}

const SMALL_PRIMES: [u64; 24] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

// Extra primes whose factor-degree patterns constrain possible factor degrees.
const PATTERN_PRIMES: [u64; 16] = [
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179,
];

// Modular images examined before settling on the one with fewest factors.
const PRIME_CANDIDATES: usize = 6;

fn reduce(f: &PolyZ, m: &BigInt) -> PolyZ {
    PolyZ::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn symmetric(f: &PolyZ, m: &BigInt) -> PolyZ {
    let half = m >> 1;
    PolyZ::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn div_rem_monic(a: &PolyZ, b: &PolyZ, m: &BigInt) -> (PolyZ, PolyZ) {
    let (q, r) = a.div_rem(b).expect("monic divisor");
    (reduce(&q, m), reduce(&r, m))
}

fn inverse_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// One quadratic Hensel step: from `f ≡ g·h`, `s·g + t·h ≡ 1 (mod m)` to the
/// same relations modulo `m²`, `h` monic throughout.
fn hensel_step(
    f: &PolyZ,
    g: &PolyZ,
    h: &PolyZ,
    s: &PolyZ,
    t: &PolyZ,
    m: &BigInt,
) -> (PolyZ, PolyZ, PolyZ, PolyZ) {
    let m2 = m * m;
    let e = reduce(&(f - &(g * h)), &m2);
    let (q, r) = div_rem_monic(&(s * &e), h, &m2);
    let g1 = reduce(&(&(g + &(t * &e)) + &(&q * g)), &m2);
    let h1 = reduce(&(h + &r), &m2);
    let b = reduce(&(&(&(s * &g1) + &(t * &h1)) - &PolyZ::one()), &m2);
    let (c, d) = div_rem_monic(&(s * &b), &h1, &m2);
    let s1 = reduce(&(s - &d), &m2);
    let t1 = reduce(&(&(t - &(t * &b)) - &(&c * &g1)), &m2);
    (g1, h1, s1, t1)
}

fn zp_product(fs: &[PolyZp], p: u64) -> PolyZp {
    fs.iter().fold(PolyZp::new(vec![1], p), |a, b| a.mul(b))
}

/// Lifts `f ≡ lc(f)·∏ factors (mod ℓ)` to monic factors modulo `target`, a
/// power of ℓ reached by repeated squaring.
fn multifactor_lift(f: &PolyZ, factors: &[PolyZp], ell: u64, target: &BigInt) -> Vec<PolyZ> {
    if factors.len() == 1 {
        let inv = inverse_mod(&f.lc(), target);
        return vec![reduce(&f.scale(&inv), target)];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let lc_mod = PolyZp::from_poly_z(&PolyZ::constant(f.lc()), ell);
    let g0 = zp_product(left, ell).mul(&lc_mod);
    let h0 = zp_product(right, ell);
    let (one, s0, t0) = g0.ext_gcd(&h0);
    debug_assert_eq!(one.degree(), Some(0));

    let mut m = BigInt::from(ell);
    let (mut g, mut h, mut s, mut t) =
        (g0.to_poly_z(), h0.to_poly_z(), s0.to_poly_z(), t0.to_poly_z());
    while &m < target {
        (g, h, s, t) = hensel_step(f, &g, &h, &s, &t, &m);
        m = &m * &m;
    }
    let mut out = multifactor_lift(&g, left, ell, target);
    out.extend(multifactor_lift(&h, right, ell, target));
    out
}

/// Bound on the coefficients of `lc(f)/lc(g) · g` for any factor `g` of `f`.
fn factor_coefficient_bound(f: &PolyZ) -> BigInt {
    let n = f.degree().unwrap();
    let norm2: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    (norm2.sqrt() + 1u32) * (BigInt::one() << n) * f.lc().abs()
}

fn choose_prime(f: &PolyZ) -> Option<(u64, Vec<PolyZp>)> {
    let mut best: Option<(u64, Vec<PolyZp>)> = None;
    let mut seen = 0;
    for &ell in &SMALL_PRIMES {
        let fp = PolyZp::from_poly_z(f, ell);
        if fp.degree() != f.degree() || !fp.is_squarefree() {
            continue;
        }
        let fac = factor_squarefree_zp(&fp);
        if best.as_ref().map_or(true, |(_, b)| fac.len() < b.len()) {
            best = Some((ell, fac));
        }
        seen += 1;
        if seen == PRIME_CANDIDATES || best.as_ref().is_some_and(|(_, b)| b.len() == 1) {
            break;
        }
    }
    best
}

/// `allowed[k]` is true when some sub-multiset of `degs` sums to `k`.
fn subset_sums(degs: &[usize], n: usize) -> Vec<bool> {
    let mut ok = vec![false; n + 1];
    ok[0] = true;
    for &d in degs {
        for k in (d..=n).rev() {
            if ok[k - d] {
                ok[k] = true;
            }
        }
    }
    ok
}

/// Degrees a factor over ℤ can have, given that its image modulo every good
/// prime is a product of modular factors.
fn allowed_degrees(f: &PolyZ, first: &[PolyZp]) -> Vec<bool> {
    let n = f.degree().unwrap();
    let degs: Vec<usize> = first.iter().map(|g| g.degree().unwrap()).collect();
    let mut allowed = subset_sums(&degs, n);
    for &ell in SMALL_PRIMES.iter().chain(PATTERN_PRIMES.iter()) {
        if allowed[1..n].iter().all(|a| !a) {
            break;
        }
        let fp = PolyZp::from_poly_z(f, ell);
        if fp.degree() != f.degree() || !fp.is_squarefree() {
            continue;
        }
        let here = subset_sums(&factor_degrees_zp(&fp), n);
        for (a, h) in allowed.iter_mut().zip(here) {
            *a &= h;
        }
    }
    allowed
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

pub fn factor_z(f: &PolyZ) -> Result<Vec<PolyZ>> {
    factor_z_with(f, &FactorConfig::default())
}

/// Irreducible factors over ℚ of a squarefree integer polynomial, as
/// primitive polynomials with positive leading coefficient sorted by
/// [`PolyZ::canonical_cmp`]. Their product is `±f / content(f)`.
pub fn factor_z_with(f: &PolyZ, cfg: &FactorConfig) -> Result<Vec<PolyZ>> {
    if f.is_zero() {
        return Err(Error::InvalidInput("factor_z of the zero polynomial".into()));
    }
    let f = f.primitive_part();
    let mut out = match f.degree().unwrap() {
        0 => return Ok(Vec::new()),
        1 => return Ok(vec![f]),
        _ => zassenhaus(&f, cfg)?,
    };
    out.sort_by(PolyZ::canonical_cmp);
    Ok(out)
}

fn zassenhaus(f: &PolyZ, cfg: &FactorConfig) -> Result<Vec<PolyZ>> {
    // Squarefree modulo a prime that keeps the degree implies squarefree
    // over ℚ; the rational gcd is only needed when no such prime turns up.
    let squarefree_mod_some_prime = SMALL_PRIMES.iter().chain(PATTERN_PRIMES.iter()).any(|&ell| {
        let fp = PolyZp::from_poly_z(f, ell);
        fp.degree() == f.degree() && fp.is_squarefree()
    });
    if !squarefree_mod_some_prime {
        let fq = f.to_q();
        if fq.gcd(&fq.derivative()).degree() != Some(0) {
            return Err(Error::NotSquarefree);
        }
    }
    let Some((ell, modular)) = choose_prime(f) else {
        return Err(Error::InvalidInput(
            "no small prime gives a squarefree reduction".into(),
        ));
    };
    if modular.len() == 1 {
        return Ok(vec![f.clone()]);
    }
    let n = f.degree().unwrap();
    let allowed = allowed_degrees(f, &modular);
    if allowed[1..n].iter().all(|a| !a) {
        return Ok(vec![f.clone()]);
    }

    let bound = factor_coefficient_bound(f) * 2u32;
    let mut target = BigInt::from(ell);
    while target <= bound {
        target = &target * &target;
    }
    if target.bits() > cfg.max_modulus_bits {
        return Err(Error::HenselPrecision(cfg.max_modulus_bits));
    }
    let mut lifted = multifactor_lift(f, &modular, ell, &target);

    let mut found = Vec::new();
    let mut rest = f.clone();
    let mut trials = 0u64;
    let mut size = 1;
    'sizes: while 2 * size <= lifted.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            trials += 1;
            if trials > cfg.max_subsets {
                return Err(Error::RecombinationBound(cfg.max_subsets));
            }
            let deg: usize = idx.iter().map(|&i| lifted[i].degree().unwrap()).sum();
            if !allowed[deg] {
                if !next_combination(&mut idx, lifted.len()) {
                    break;
                }
                continue;
            }
            let lc = PolyZ::constant(rest.lc());
            let cand = idx
                .iter()
                .fold(lc, |acc, &i| reduce(&(&acc * &lifted[i]), &target));
            let cand = symmetric(&cand, &target).primitive_part();
            if let Some(q) = rest.div_exact(&cand) {
                found.push(cand);
                rest = q;
                for &i in idx.iter().rev() {
                    lifted.remove(i);
                }
                continue 'sizes;
            }
            if !next_combination(&mut idx, lifted.len()) {
                break;
            }
        }
        size += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        found.push(rest.primitive_part());
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn z(cs: &[i64]) -> PolyZ {
        PolyZ::from_i64s(cs)
    }

    fn product(fs: &[PolyZ]) -> PolyZ {
        fs.iter().fold(PolyZ::one(), |a, b| &a * b)
    }

    #[test]
    fn worked_values() {
        assert_eq!(factor_z(&z(&[-1, 0, 1])).unwrap(), vec![z(&[-1, 1]), z(&[1, 1])]);
        assert_eq!(factor_z(&z(&[1, -1, 1])).unwrap(), vec![z(&[1, -1, 1])]);
        assert_eq!(factor_z(&z(&[1, 1, 1, 1, 1])).unwrap(), vec![z(&[1, 1, 1, 1, 1])]);
    }

    /// Exhaustive search for a monic factor of degree 1 or 2 with coefficients
    /// bounded by `b`.
    fn has_small_monic_factor(f: &PolyZ, b: i64) -> bool {
        for c0 in -b..=b {
            if f.div_exact(&z(&[c0, 1])).is_some() {
                return true;
            }
            for c1 in -b..=b {
                if f.div_exact(&z(&[c0, c1, 1])).is_some() {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn cyclotomic_phi5_has_no_small_factor() {
        let phi5 = z(&[1, 1, 1, 1, 1]);
        // Monic integer factors of a monic polynomial with roots on the unit
        // circle have coefficients bounded by binomials, ≤ 2 for degree 2.
        assert!(!has_small_monic_factor(&phi5, 3));
    }

    #[test]
    fn swinnerton_dyer_like_many_modular_factors() {
        // y^4 - 10y^2 + 1 is irreducible but splits into quadratics or
        // linears modulo every prime.
        let f = z(&[1, 0, -10, 0, 1]);
        assert_eq!(factor_z(&f).unwrap(), vec![f.clone()]);
        let g = &f * &z(&[-2, 0, 1]);
        assert_eq!(factor_z(&g).unwrap(), vec![z(&[-2, 0, 1]), f]);
    }

    #[test]
    fn non_monic_and_content() {
        let f = &z(&[3, 2]) * &z(&[-1, 0, 5]);
        let f = f.scale(&BigInt::from(-6));
        let fac = factor_z(&f).unwrap();
        assert_eq!(fac, vec![z(&[3, 2]), z(&[-1, 0, 5])]);
    }

    #[test]
    fn rejects_repeated_factors() {
        let f = &z(&[1, 1]) * &z(&[1, 1]);
        assert!(matches!(factor_z(&f), Err(Error::NotSquarefree)));
    }

    #[test]
    fn large_degree_product() {
        // Product of several cyclotomic polynomials, degree 40.
        let phi7 = z(&[1, 1, 1, 1, 1, 1, 1]);
        let phi9 = z(&[1, 0, 0, 1, 0, 0, 1]);
        let phi11 = z(&[1; 11]);
        let phi13 = z(&[1; 13]);
        let phi15 = z(&[1, -1, 0, 1, -1, 1, 0, -1, 1]);
        let fs = vec![phi7, phi9, phi11, phi13, phi15];
        let mut want = fs.clone();
        want.sort_by(PolyZ::canonical_cmp);
        assert_eq!(factor_z(&product(&fs)).unwrap(), want);
    }

    fn irreducible_quadratic_or_linear() -> impl Strategy<Value = PolyZ> {
        prop_oneof![
            (-20i64..20, 1i64..6).prop_map(|(a, b)| z(&[a, b])),
            (-20i64..20, -20i64..20, 1i64..4).prop_map(|(c, b, a)| z(&[c, b, a])),
            (-9i64..9, -9i64..9, -9i64..9).prop_map(|(c, b, a)| z(&[c, b, a, 1])),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn reconstruction(parts in prop::collection::vec(irreducible_quadratic_or_linear(), 1..5)) {
            let f = product(&parts);
            let fq = f.to_q();
            prop_assume!(fq.gcd(&fq.derivative()).degree() == Some(0));
            let fac = factor_z(&f).unwrap();
            let prod = product(&fac);
            prop_assert_eq!(prod.primitive_part(), f.primitive_part());
            for g in &fac {
                prop_assert!(g.lc().is_positive());
                prop_assert!(g.content().is_one());
                let again = factor_z(g).unwrap();
                prop_assert_eq!(again.len(), 1);
            }
            // At least as many factors as irreducible inputs of degree 1.
            prop_assert!(fac.len() >= parts.iter().filter(|p| p.degree() == Some(1)).count());
        }
    }
}
