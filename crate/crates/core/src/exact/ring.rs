use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Commutative ring element whose identities may depend on a runtime context
/// (a quotient modulus, say), so they are derived from an existing value.
pub trait RingElem: Clone + PartialEq + Debug {
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;

    fn is_one_elem(&self) -> bool {
        *self == self.one_like()
    }
}

/// Coefficient ring of a [`Poly`](super::Poly): context-free identities plus
/// exact division.
pub trait Coeff: RingElem + Zero + One + Display {
    /// `self / rhs` when the quotient exists in the ring.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;

    fn is_unit(&self) -> bool;
}

macro_rules! impl_ring_elem_num {
    ($t:ty) => {
        impl RingElem for $t {
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
                Zero::is_zero(self)
            }
            fn zero_like(&self) -> Self {
                <$t>::zero()
            }
            fn one_like(&self) -> Self {
                <$t>::one()
            }
        }
    };
}

impl_ring_elem_num!(BigInt);
impl_ring_elem_num!(BigRational);

impl Coeff for BigInt {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }

    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
}

impl Coeff for BigRational {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        (!Zero::is_zero(rhs)).then(|| self / rhs)
    }

    fn is_unit(&self) -> bool {
        !Zero::is_zero(self)
    }
}
