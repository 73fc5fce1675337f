//! Resultants and discriminants over ℤ by the subresultant PRS.
//!
//! Convention: `Res(f, g) = lc(f)^deg(g) · ∏ g(α)` over the roots `α` of `f`,
//! which equals the Sylvester determinant and also
//! `(-1)^(deg f · deg g) · lc(g)^deg(f) · ∏ f(β)` over the roots of `g`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::PolyZ;

/// Pseudo-remainder of `a` by `b`: the remainder of `lc(b)^(δ+1)·a` where
/// `δ = deg a − deg b`.
pub fn pseudo_rem(a: &PolyZ, b: &PolyZ) -> PolyZ {
    let (da, db) = match (a.degree(), b.degree()) {
        (Some(da), Some(db)) if da >= db => (da, db),
        _ => return a.clone(),
    };
    let scale = b.lc().pow((da - db + 1) as u32);
    a.scale(&scale)
        .try_div_rem(b)
        .expect("pseudo-division is exact over ℤ")
        .1
}

pub fn resultant(f: &PolyZ, g: &PolyZ) -> BigInt {
    if f.is_zero() || g.is_zero() {
        return BigInt::zero();
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut sign = BigInt::one();
    let (mut da, mut db) = (a.degree().unwrap(), b.degree().unwrap());
    if da < db {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut da, &mut db);
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
    }
    if db == 0 {
        return sign * b.lc().pow(da as u32);
    }

    let (ca, cb) = (a.content(), b.content());
    a = PolyZ::new(a.coeffs().iter().map(|c| c / &ca).collect());
    b = PolyZ::new(b.coeffs().iter().map(|c| c / &cb).collect());
    let t = ca.pow(db as u32) * cb.pow(da as u32);

    let mut g_ = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        let divisor = &g_ * h.pow(delta);
        b = PolyZ::new(
            r.coeffs()
                .iter()
                .map(|c| {
                    let (q, rem) = c.div_rem(&divisor);
                    debug_assert!(rem.is_zero());
                    q
                })
                .collect(),
        );
        g_ = a.lc();
        h = match delta {
            0 => h,
            1 => g_.clone(),
            _ => g_.pow(delta) / h.pow(delta - 1),
        };
        match b.degree() {
            None => return BigInt::zero(),
            Some(0) => {
                let da = a.degree().unwrap() as u32;
                let hh = b.lc().pow(da) / h.pow(da - 1);
                return sign * t * hh;
            }
            Some(_) => {}
        }
    }
}

/// `(-1)^(d(d-1)/2) · Res(f, f') / lc(f)`.
pub fn discriminant(f: &PolyZ) -> BigInt {
    let d = f.degree().expect("discriminant of the zero polynomial");
    if d == 0 {
        return BigInt::zero();
    }
    let r = resultant(f, &f.derivative());
    let q = r.div_floor(&f.lc());
    if (d * (d - 1) / 2) % 2 == 1 {
        -q
    } else {
        q
    }
}

/// Convenience predicate used throughout the 2-adic certificates.
pub fn is_odd(n: &BigInt) -> bool {
    n.abs().is_odd()
}
