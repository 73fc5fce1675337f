//! Orders of elements of SL(2) over the finite fields `𝔽₂[y]/(f)`.

use num_prime::nt_funcs::factorize64;

use super::f2::GfElem;
use super::mat2::Mat2;
use super::ring::RingElem;
use crate::error::{Error, Result};

/// Least `n ≥ 1` with `Mⁿ` scalar, for `M` of determinant 1 over `𝔽_{2^s}`.
///
/// In characteristic 2 the only scalar of determinant 1 is the identity. A
/// non-identity element with `M² = 1` is unipotent; otherwise the order
/// divides `2^s − 1` (split semisimple) or `2^s + 1` (non-split), and it is
/// recovered from whichever of those kills `M` by stripping prime factors.
pub fn matrix_order(m: &Mat2<GfElem>) -> Result<u64> {
    let s = m.a.modulus().degree().unwrap_or(0);
    if !m.det().is_one_elem() {
        return Err(Error::InvalidInput("matrix_order needs determinant 1".into()));
    }
    if m.is_identity() {
        return Ok(1);
    }
    if m.pow(2).is_identity() {
        return Ok(2);
    }
    if s == 0 || s > 62 {
        return Err(Error::OrderBound(s));
    }
    for n in [(1u64 << s) - 1, (1u64 << s) + 1] {
        if !m.pow(n).is_identity() {
            continue;
        }
        let mut order = n;
        for (prime, _) in factorize64(n) {
            while order % prime == 0 && m.pow(order / prime).is_identity() {
                order /= prime;
            }
        }
        return Ok(order);
    }
    Err(Error::OrderBound(s))
}
