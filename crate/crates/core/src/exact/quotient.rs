//! Elements of `R[y]/(f)` for `R = ℤ` (with `f` monic up to sign) or `R = ℚ`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::poly::{Poly, PolyQ};
use super::ring::{Coeff, RingElem};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct QuotRing<C> {
    modulus: Arc<Poly<C>>,
}

#[derive(Clone, PartialEq, Eq)]
pub struct QuotElem<C> {
    rep: Poly<C>,
    modulus: Arc<Poly<C>>,
}

impl<C: Coeff> QuotRing<C> {
    /// The modulus must have positive degree and a unit leading coefficient.
    pub fn new(modulus: Poly<C>) -> Result<Self> {
        match modulus.degree() {
            None => return Err(Error::DivisionByZero),
            Some(0) => return Err(Error::InvalidInput("constant modulus".into())),
            Some(_) => {}
        }
        if !modulus.lc().is_unit() {
            return Err(Error::NonUnitLeading);
        }
        Ok(QuotRing { modulus: Arc::new(modulus) })
    }

    pub fn modulus(&self) -> &Poly<C> {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn elem(&self, p: Poly<C>) -> QuotElem<C> {
        QuotElem {
            rep: p.rem(&self.modulus).expect("unit leading coefficient"),
            modulus: Arc::clone(&self.modulus),
        }
    }

    pub fn constant(&self, c: C) -> QuotElem<C> {
        self.elem(Poly::constant(c))
    }

    pub fn zero(&self) -> QuotElem<C> {
        self.elem(Poly::zero())
    }

    pub fn one(&self) -> QuotElem<C> {
        self.elem(Poly::one())
    }

    /// The class of `y`.
    pub fn gen(&self) -> QuotElem<C> {
        self.elem(Poly::var())
    }
}

impl<C: Coeff> QuotElem<C> {
    pub fn rep(&self) -> &Poly<C> {
        &self.rep
    }

    pub fn modulus(&self) -> &Poly<C> {
        &self.modulus
    }

    pub fn ring(&self) -> QuotRing<C> {
        QuotRing { modulus: Arc::clone(&self.modulus) }
    }

    pub fn ring_degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    /// Power-basis coordinates `1, y, …, y^(d-1)`.
    pub fn coords(&self) -> Vec<C> {
        (0..self.ring_degree()).map(|i| self.rep.coeff(i)).collect()
    }

    pub fn one(&self) -> Self {
        self.ring().one()
    }

    /// `Some(c)` when the element is the constant `c`.
    pub fn as_constant(&self) -> Option<C> {
        self.rep.is_constant().then(|| self.rep.coeff(0))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl QuotElem<BigInt> {
    pub fn to_q(&self) -> QuotElem<BigRational> {
        QuotElem {
            rep: self.rep.to_q(),
            modulus: Arc::new(self.modulus.to_q()),
        }
    }
}

impl QuotElem<BigRational> {
    pub fn inverse(&self) -> Option<Self> {
        let inv: PolyQ = self.rep.inverse_mod(&self.modulus)?;
        Some(QuotElem { rep: inv, modulus: Arc::clone(&self.modulus) })
    }
}

impl<C: Coeff> RingElem for QuotElem<C> {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_zero_elem(&self) -> bool {
        self.rep.is_zero()
    }
    fn zero_like(&self) -> Self {
        self.ring().zero()
    }
    fn one_like(&self) -> Self {
        self.ring().one()
    }
}

fn same_ring<C: Coeff>(a: &QuotElem<C>, b: &QuotElem<C>) {
    debug_assert!(
        Arc::ptr_eq(&a.modulus, &b.modulus) || a.modulus == b.modulus,
        "operands live in different quotient rings"
    );
}

impl<'a, C: Coeff> Add<&'a QuotElem<C>> for &'a QuotElem<C> {
    type Output = QuotElem<C>;
    fn add(self, rhs: &QuotElem<C>) -> QuotElem<C> {
        same_ring(self, rhs);
        QuotElem { rep: &self.rep + &rhs.rep, modulus: Arc::clone(&self.modulus) }
    }
}

impl<'a, C: Coeff> Sub<&'a QuotElem<C>> for &'a QuotElem<C> {
    type Output = QuotElem<C>;
    fn sub(self, rhs: &QuotElem<C>) -> QuotElem<C> {
        same_ring(self, rhs);
        QuotElem { rep: &self.rep - &rhs.rep, modulus: Arc::clone(&self.modulus) }
    }
}

impl<'a, C: Coeff> Mul<&'a QuotElem<C>> for &'a QuotElem<C> {
    type Output = QuotElem<C>;
    fn mul(self, rhs: &QuotElem<C>) -> QuotElem<C> {
        same_ring(self, rhs);
        QuotElem {
            rep: (&self.rep * &rhs.rep).rem(&self.modulus).expect("unit leading coefficient"),
            modulus: Arc::clone(&self.modulus),
        }
    }
}

impl<C: Coeff> Neg for &QuotElem<C> {
    type Output = QuotElem<C>;
    fn neg(self) -> QuotElem<C> {
        QuotElem { rep: -&self.rep, modulus: Arc::clone(&self.modulus) }
    }
}

impl<C: Coeff> fmt::Debug for QuotElem<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} mod {:?}", self.rep, self.modulus)
    }
}
