use std::fmt;

use super::ring::RingElem;

/// 2×2 matrix `(a b; c d)` over a commutative ring.
#[derive(Clone, PartialEq)]
pub struct Mat2<R> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub d: R,
}

impl<R: RingElem> Mat2<R> {
    pub fn new(a: R, b: R, c: R, d: R) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn scalar(s: R) -> Self {
        let z = s.zero_like();
        Mat2::new(s.clone(), z.clone(), z, s)
    }

    /// Identity in the ring that `like` lives in.
    pub fn identity_like(like: &R) -> Self {
        Self::scalar(like.one_like())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Mat2 {
            a: self.a.mul_ref(&o.a).add_ref(&self.b.mul_ref(&o.c)),
            b: self.a.mul_ref(&o.b).add_ref(&self.b.mul_ref(&o.d)),
            c: self.c.mul_ref(&o.a).add_ref(&self.d.mul_ref(&o.c)),
            d: self.c.mul_ref(&o.b).add_ref(&self.d.mul_ref(&o.d)),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Mat2 {
            a: self.a.sub_ref(&o.a),
            b: self.b.sub_ref(&o.b),
            c: self.c.sub_ref(&o.c),
            d: self.d.sub_ref(&o.d),
        }
    }

    pub fn det(&self) -> R {
        self.a.mul_ref(&self.d).sub_ref(&self.b.mul_ref(&self.c))
    }

    pub fn trace(&self) -> R {
        self.a.add_ref(&self.d)
    }

    /// Adjugate; the inverse when the determinant is 1.
    pub fn adjugate(&self) -> Self {
        Mat2 {
            a: self.d.clone(),
            b: self.b.neg_ref(),
            c: self.c.neg_ref(),
            d: self.a.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        [&self.a, &self.b, &self.c, &self.d].iter().all(|x| x.is_zero_elem())
    }

    pub fn is_scalar(&self) -> bool {
        self.b.is_zero_elem() && self.c.is_zero_elem() && self.a == self.d
    }

    pub fn is_identity(&self) -> bool {
        self.is_scalar() && self.a.is_one_elem()
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity_like(&self.a);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn map<S>(&self, f: impl Fn(&R) -> S) -> Mat2<S> {
        Mat2 { a: f(&self.a), b: f(&self.b), c: f(&self.c), d: f(&self.d) }
    }
}

impl<R: fmt::Debug> fmt::Debug for Mat2<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} {:?}; {:?} {:?})", self.a, self.b, self.c, self.d)
    }
}
