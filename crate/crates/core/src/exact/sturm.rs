use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::poly::PolyZ;
use super::resultant::pseudo_rem;

/// Number of distinct real roots of a nonzero integer polynomial, from a
/// Sturm sequence built with sign-preserving pseudo-remainders.
pub fn count_real_roots(f: &PolyZ) -> usize {
    let f = f.primitive_part();
    if f.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let mut chain = vec![f.clone(), f.derivative().primitive_part()];
    loop {
        let n = chain.len();
        let (a, b) = (&chain[n - 2], &chain[n - 1]);
        if b.degree().unwrap_or(0) == 0 {
            break;
        }
        // prem scales by lc(b)^(δ+1); undo its sign so the chain stays Sturm.
        let delta = a.degree().unwrap() - b.degree().unwrap();
        let mut r = pseudo_rem(a, b);
        if b.lc().is_negative() && delta % 2 == 0 {
            r = -&r;
        }
        if r.is_zero() {
            break;
        }
        let c = r.content();
        chain.push(-&PolyZ::new(r.coeffs().iter().map(|x| x / &c).collect()));
    }
    let at_pos_inf = sign_changes(chain.iter().map(|p| p.lc()));
    let at_neg_inf = sign_changes(chain.iter().map(|p| {
        if p.degree().unwrap() % 2 == 1 {
            -p.lc()
        } else {
            p.lc()
        }
    }));
    at_neg_inf - at_pos_inf
}

fn sign_changes(vals: impl Iterator<Item = BigInt>) -> usize {
    let signs: Vec<bool> = vals.filter(|v| !v.is_zero()).map(|v| v.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// True when some root of `f` is not real.
pub fn has_nonreal_root(f: &PolyZ) -> bool {
    count_real_roots(f) < f.degree().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(cs: &[i64]) -> PolyZ {
        PolyZ::from_i64s(cs)
    }

    #[test]
    fn counts() {
        assert_eq!(count_real_roots(&z(&[1, -1, 1])), 0);
        assert_eq!(count_real_roots(&z(&[-1, 0, 1])), 2);
        assert_eq!(count_real_roots(&z(&[1, 1])), 1);
        // y^3 - y^2 + 2y - 1: the 5_2 trace polynomial has one real root.
        assert_eq!(count_real_roots(&z(&[-1, 2, -1, 1])), 1);
        // (y-1)(y-2)(y-3)(y-4)(y+5)
        let p = [1, 2, 3, 4, -5]
            .iter()
            .fold(z(&[1]), |acc, &r| &acc * &z(&[-r, 1]));
        assert_eq!(count_real_roots(&p), 5);
        assert_eq!(count_real_roots(&p.scale(&BigInt::from(-3))), 5);
        assert!(has_nonreal_root(&z(&[1, 0, 0, 0, 1])));
        assert_eq!(count_real_roots(&z(&[-2, 0, 0, 0, 1])), 2);
    }

    #[test]
    fn negative_leading_coefficients_in_chain() {
        // -y^3 + 3y - 1 has three real roots.
        assert_eq!(count_real_roots(&z(&[-1, 3, 0, -1])), 3);
        assert_eq!(count_real_roots(&z(&[1, -3, 0, 1])), 3);
    }
}
