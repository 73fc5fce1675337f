use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A computed fact that disagrees with a published theorem. Always fatal to
/// the knot being analysed and always surfaced to the caller.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Contradiction {
    pub kind: ContradictionKind,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ContradictionKind {
    /// Riley polynomial has a repeated factor modulo 2.
    SquarefreeMod2,
    /// A mod-2 dihedral image has even order or order not dividing p.
    DihedralOrder,
    /// Per-divisor degree totals do not match phi(m)/2.
    DihedralSpectrum,
    /// Reduction mod 2 differs from the cyclotomic product for p.
    Mod2Oracle,
    /// Longitude image is not a parabolic fixing infinity, or g/2 is not integral.
    Longitude,
    /// The word/matrix convention failed its own relator identity.
    Relator,
    /// deg or end coefficients of the Riley polynomial are off.
    RileyShape,
}

impl fmt::Display for Contradiction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}", self.kind, self.detail)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("leading coefficient is not a unit of the coefficient ring")]
    NonUnitLeading,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("factor recombination exceeded {0} subset trials")]
    RecombinationBound(u64),
    #[error("Hensel lifting would need a modulus above {0} bits")]
    HenselPrecision(u64),
    #[error("matrix order not found among 1, 2, divisors of 2^{0}-1 and 2^{0}+1")]
    OrderBound(usize),
    #[error("contradiction with a published result: {0}")]
    Contradiction(Contradiction),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn contradiction(kind: ContradictionKind, detail: impl Into<String>) -> Self {
        Error::Contradiction(Contradiction {
            kind,
            detail: detail.into(),
        })
    }
}
