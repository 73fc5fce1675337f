//! Dense linear algebra over ℚ.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{PolyQ, PolyZ};
use super::quotient::QuotElem;
use super::zp::PolyZp;

#[derive(Clone, Debug, PartialEq)]
pub struct RatMatrix {
    rows: Vec<Vec<BigRational>>,
    ncols: usize,
}

impl RatMatrix {
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
        RatMatrix { rows, ncols }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.rows[i]
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.ncols {
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = BigRational::one() / &m[r][c];
            for x in m[r].iter_mut() {
                *x *= &inv;
            }
            for i in 0..m.len() {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in c..self.ncols {
                        let t = &f * &m[r][j];
                        m[i][j] -= t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.len() {
                break;
            }
        }
        (RatMatrix { rows: m, ncols: self.ncols }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<BigRational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.ncols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![BigRational::zero(); self.ncols];
                v[fc] = BigRational::one();
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.rows[i][fc].clone();
                }
                v
            })
            .collect()
    }

    pub fn determinant(&self) -> BigRational {
        assert_eq!(self.nrows(), self.ncols, "determinant of a non-square matrix");
        let mut m = self.rows.clone();
        let n = m.len();
        let mut det = BigRational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
                return BigRational::zero();
            };
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            det *= &m[c][c];
            for i in c + 1..n {
                if m[i][c].is_zero() {
                    continue;
                }
                let f = &m[i][c] / &m[c][c];
                for j in c..n {
                    let t = &f * &m[c][j];
                    m[i][j] -= t;
                }
            }
        }
        det
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// Incrementally maintained echelon basis that remembers how each basis
/// vector was assembled from the inputs, so the first linear dependency comes
/// out with explicit coefficients.
struct DependencyTracker {
    dim: usize,
    rows: Vec<(usize, Vec<BigRational>, Vec<BigRational>)>,
    count: usize,
}

impl DependencyTracker {
    fn new(dim: usize) -> Self {
        DependencyTracker { dim, rows: Vec::new(), count: 0 }
    }

    /// Adds the next vector; returns `c` with `Σ c_j v_j = 0`, `c_last = 1`,
    /// once the new vector lies in the span of the earlier ones.
    fn push(&mut self, v: Vec<BigRational>) -> Option<Vec<BigRational>> {
        assert_eq!(v.len(), self.dim);
        let k = self.count;
        self.count += 1;
        let mut vec = v;
        let mut comb = vec![BigRational::zero(); k + 1];
        comb[k] = BigRational::one();
        for (pc, row, rcomb) in &self.rows {
            if vec[*pc].is_zero() {
                continue;
            }
            let f = vec[*pc].clone();
            for (x, r) in vec.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
            for (x, r) in comb.iter_mut().zip(rcomb) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        match vec.iter().position(|x| !x.is_zero()) {
            None => Some(comb),
            Some(pc) => {
                let inv = BigRational::one() / &vec[pc];
                vec.iter_mut().for_each(|x| *x *= &inv);
                comb.iter_mut().for_each(|x| *x *= &inv);
                self.rows.push((pc, vec, comb));
                None
            }
        }
    }
}

/// Monic minimal polynomial over ℚ of an element of `ℚ[y]/(f)`: the first
/// linear relation among `1, e, e², …` in the power basis, i.e. the minimal
/// polynomial of multiplication-by-`e`.
pub fn minpoly_in_quotient(elt: &QuotElem<BigRational>) -> PolyQ {
    let d = elt.ring_degree();
    let mut tracker = DependencyTracker::new(d);
    let mut power = elt.one();
    loop {
        if let Some(c) = tracker.push(power.coords()) {
            return PolyQ::new(c);
        }
        power = &power * elt;
    }
}

/// Characteristic polynomial of multiplication by `elt` on `ℤ[y]/(f)`, for
/// monic `f` (up to sign), from the power sums of its roots.
pub fn charpoly_integral(elt: &QuotElem<BigInt>) -> PolyZ {
    let d = elt.ring_degree();
    let mut f = elt.modulus().clone();
    if f.lc() < BigInt::zero() {
        f = -&f;
    }
    assert!(f.lc().is_one(), "charpoly_integral needs a monic modulus");
    // Newton: p_k + a_{d-1} p_{k-1} + ... + a_{d-k+1} p_1 + k a_{d-k} = 0.
    let mut sums = vec![BigInt::from(d)];
    for k in 1..d {
        let mut s = BigInt::from(k) * f.coeff(d - k);
        for i in 1..k {
            s += f.coeff(d - i) * &sums[k - i];
        }
        sums.push(-s);
    }
    let trace = |e: &QuotElem<BigInt>| -> BigInt {
        e.coords().iter().zip(&sums).map(|(c, s)| c * s).sum()
    };
    let mut traces = Vec::with_capacity(d);
    let mut power = elt.clone();
    for k in 0..d {
        if k > 0 {
            power = &power * elt;
        }
        traces.push(trace(&power));
    }
    // k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} s_i.
    let mut e = vec![BigInt::one()];
    for k in 1..=d {
        let mut acc = BigInt::zero();
        for i in 1..=k {
            let term = &e[k - i] * &traces[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e.push(acc / BigInt::from(k));
    }
    let coeffs = (0..=d)
        .map(|j| {
            let k = d - j;
            if k % 2 == 0 {
                e[k].clone()
            } else {
                -e[k].clone()
            }
        })
        .collect();
    PolyZ::new(coeffs)
}

const SQUAREFREE_TEST_PRIMES: [u64; 12] = [10007, 10009, 10037, 10039, 10061, 10067, 10069, 10079, 10091, 10093, 10099, 10103];

/// Minimal polynomial of an element of `ℤ[y]/(f)`, `f` monic up to sign.
/// When the characteristic polynomial is squarefree modulo a prime it is the
/// minimal polynomial; otherwise falls back to [`minpoly_in_quotient`].
pub fn minpoly_integral(elt: &QuotElem<BigInt>) -> PolyQ {
    if elt.modulus().lc().abs_is_one() {
        let c = charpoly_integral(elt);
        for &ell in &SQUAREFREE_TEST_PRIMES {
            if PolyZp::from_poly_z(&c, ell).is_squarefree() {
                return c.to_q();
            }
        }
    }
    minpoly_in_quotient(&elt.to_q())
}

trait AbsIsOne {
    fn abs_is_one(&self) -> bool;
}

impl AbsIsOne for BigInt {
    fn abs_is_one(&self) -> bool {
        self.is_one() || (-self).is_one()
    }
}
