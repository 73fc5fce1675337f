//! Exact arithmetic kernel: polynomials over ℤ, ℚ and 𝔽₂, quotient rings,
//! 2×2 matrices, linear algebra over ℚ and factorization.

pub mod f2;
pub mod linalg;
pub mod mat2;
pub mod order;
pub mod poly;
pub mod quotient;
pub mod resultant;
pub mod ring;
pub mod sturm;
pub mod zfactor;
pub mod zp;

pub use f2::{factor_f2, GfElem, PolyF2};
pub use linalg::{charpoly_integral, minpoly_in_quotient, minpoly_integral, RatMatrix};
pub use mat2::Mat2;
pub use order::matrix_order;
pub use poly::{Poly, PolyQ, PolyZ};
pub use quotient::{QuotElem, QuotRing};
pub use resultant::{discriminant, resultant};
pub use sturm::{count_real_roots, has_nonreal_root};
pub use ring::{Coeff, RingElem};
pub use zfactor::{factor_z, factor_z_with, FactorConfig};
