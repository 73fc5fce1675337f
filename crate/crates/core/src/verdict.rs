//! Per-knot orchestration: runs every module, evaluates the hidden-symmetry
//! obstructions on each geometric candidate factor, and records which facts
//! were recomputed here versus quoted.

use serde::Serialize;

use crate::dihedral::{analyze_mod2, images_of, DihedralImage, Mod2Analysis};
use crate::error::{Contradiction, Error, Result};
use crate::exact::PolyQ;
use crate::field::{field_invariants, sqrt_in_field, FieldInvariants, SqrtConfig, SqrtStatus};
use crate::knot::{canonicalize, TwoBridgeForm};
use crate::prep::{cusp_field, longitude, riley_polynomial_with, CuspData, RileyPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SymmetryGroup {
    V,
    D4,
}

/// `D4` exactly when `q² ≡ −1 (mod p)`, the amphichiral case; `V` otherwise.
pub fn symmetry_group(k: &TwoBridgeForm) -> SymmetryGroup {
    let (p, q) = (k.p() as u128, k.q() as u128);
    if (q * q + 1) % p == 0 {
        SymmetryGroup::D4
    } else {
        SymmetryGroup::V
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum ObstructionKind {
    /// The cusp field lies in neither `ℚ(√−3)` nor `ℚ(i)`.
    CuspField,
    /// `ℚ(i)` is certifiably not a subfield. Supporting only: it rules out
    /// one of the two rigid cusp fields.
    Qi,
    /// Some mod-2 dihedral image is not `D₃` or `D₅`.
    Dihedral,
    /// More than two primes' worth of residue degree above 2 would be
    /// needed: degree above 3.
    Degree,
}

impl ObstructionKind {
    /// Whether firing alone rules out hidden symmetries for the factor.
    pub fn sufficient(self) -> bool {
        !matches!(self, ObstructionKind::Qi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    /// Index into the report's factor list.
    pub factor: usize,
    pub sufficient: bool,
    pub certificate: String,
}

/// Whether a field `ℚ(g)` sits inside `ℚ(√n)`.
#[derive(Clone, Debug, PartialEq)]
pub enum Containment {
    Contained,
    NotContained(String),
    Undetermined(String),
}

/// `ℚ(g) ⊆ ℚ(√n)` iff `[ℚ(g):ℚ] ≤ 2` and either `g` is rational or
/// `√n ∈ ℚ(g)`.
pub fn cusp_containment(minpoly: &PolyQ, n: i64, cfg: &SqrtConfig) -> Result<Containment> {
    let d = minpoly.degree().unwrap_or(0);
    if d <= 1 {
        return Ok(Containment::Contained);
    }
    if d > 2 {
        return Ok(Containment::NotContained(format!("cusp field has degree {d}")));
    }
    Ok(match sqrt_in_field(&minpoly.to_primitive_z(), n, cfg)? {
        SqrtStatus::PresentWitness(_) => Containment::Contained,
        SqrtStatus::CertifiedAbsent(r) => Containment::NotContained(format!("{r:?}")),
        SqrtStatus::Undetermined(why) => Containment::Undetermined(why),
    })
}

/// Everything computed for one irreducible factor of `Λ`.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorAnalysis {
    pub field: FieldInvariants,
    pub cusp: CuspData,
    /// Minimal polynomial of `g` over ℚ.
    pub cusp_field_minpoly: PolyQ,
    pub cusp_field_degree: usize,
    pub cusp_in_sqrt_m3: Containment,
    pub cusp_in_qi: Containment,
    /// Dihedral images from this factor's reduction mod 2.
    pub dihedral: Vec<DihedralImage>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HiddenSymmetryVerdict {
    NoHiddenSymmetriesCertified,
    ObstructionInconclusive,
    /// The figure-eight knot: arithmetic, outside the obstruction argument.
    ExcludedArithmetic,
    NotApplicableTorusKnot,
    /// Analysis stopped at a contradiction.
    Unavailable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UniquenessVerdict {
    /// The complement is the only knot complement in its commensurability
    /// class. Quoted, with the ingredients listed in the provenance.
    UniqueInCommensurabilityClass,
    /// (2, p) torus knots: all complements are commensurable.
    TorusKnotInfiniteClass,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    /// Recomputed for this knot.
    MachineVerified,
    /// A published theorem whose proof is not re-run here.
    TheoremCited,
    /// Taken from the wider literature rather than proved or computed.
    LiteratureDerived,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub claim: &'static str,
    pub basis: Basis,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status", content = "contradiction")]
pub enum ReportStatus {
    Ok,
    Contradiction(Contradiction),
}

#[derive(Clone, Debug, PartialEq)]
pub struct KnotReport {
    pub input: (i64, i64),
    pub knot: TwoBridgeForm,
    pub mirrored: bool,
    pub hyperbolic: bool,
    pub status: ReportStatus,
    pub riley: Option<RileyPolynomial>,
    pub mod2: Option<Mod2Analysis>,
    pub factors: Vec<FactorAnalysis>,
    pub symmetry_group: Option<SymmetryGroup>,
    pub obstructions: Vec<Obstruction>,
    pub hidden_symmetries: HiddenSymmetryVerdict,
    pub uniqueness: UniquenessVerdict,
    pub provenance: Vec<Provenance>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AnalysisConfig {
    pub sqrt: SqrtConfig,
}

fn analyze_factor(
    k: &TwoBridgeForm,
    riley: &RileyPolynomial,
    f: &crate::exact::PolyZ,
    cfg: &AnalysisConfig,
) -> Result<FactorAnalysis> {
    let w = k.riley_word();
    let field = field_invariants(f, &cfg.sqrt)?;
    let cusp = longitude(&w, f)?;
    let (cusp_field_minpoly, cusp_field_degree) = cusp_field(&cusp);
    let cusp_in_sqrt_m3 = cusp_containment(&cusp_field_minpoly, -3, &cfg.sqrt)?;
    let cusp_in_qi = cusp_containment(&cusp_field_minpoly, -1, &cfg.sqrt)?;
    let dihedral = images_of(f, riley.knot.p())?;
    Ok(FactorAnalysis {
        field,
        cusp,
        cusp_field_minpoly,
        cusp_field_degree,
        cusp_in_sqrt_m3,
        cusp_in_qi,
        dihedral,
    })
}

/// Fired obstructions for every geometric candidate factor.
pub fn hidden_symmetry_obstruction(factors: &[FactorAnalysis]) -> Vec<Obstruction> {
    let mut out = Vec::new();
    for (i, fa) in factors.iter().enumerate() {
        if !fa.field.geometric_candidate {
            continue;
        }
        let mut fire = |kind: ObstructionKind, certificate: String| {
            out.push(Obstruction { kind, factor: i, sufficient: kind.sufficient(), certificate })
        };
        if let (Containment::NotContained(a), Containment::NotContained(b)) =
            (&fa.cusp_in_sqrt_m3, &fa.cusp_in_qi)
        {
            fire(
                ObstructionKind::CuspField,
                format!("cusp field of degree {}: not in Q(sqrt-3) ({a}); not in Q(i) ({b})", fa.cusp_field_degree),
            );
        }
        if fa.field.qi_status.is_absent() {
            fire(ObstructionKind::Qi, format!("discriminant {} is odd", fa.field.disc));
        }
        let ms: Vec<u64> = fa.dihedral.iter().map(|d| d.m).collect();
        if ms.iter().any(|m| *m != 3 && *m != 5) {
            fire(ObstructionKind::Dihedral, format!("mod-2 dihedral orders {ms:?} not within {{3, 5}}"));
        }
        if fa.field.degree > 3 {
            fire(ObstructionKind::Degree, format!("factor degree {} exceeds 3", fa.field.degree));
        }
    }
    out
}

fn verdict_from(factors: &[FactorAnalysis], obstructions: &[Obstruction]) -> HiddenSymmetryVerdict {
    let all_blocked = factors
        .iter()
        .enumerate()
        .filter(|(_, fa)| fa.field.geometric_candidate)
        .all(|(i, _)| obstructions.iter().any(|o| o.factor == i && o.sufficient));
    let any_candidate = factors.iter().any(|fa| fa.field.geometric_candidate);
    if any_candidate && all_blocked {
        HiddenSymmetryVerdict::NoHiddenSymmetriesCertified
    } else {
        HiddenSymmetryVerdict::ObstructionInconclusive
    }
}

fn provenance(hyperbolic: bool, complete: bool) -> Vec<Provenance> {
    use Basis::*;
    let mut v = Vec::new();
    if complete {
        v.extend([
            Provenance { claim: "word convention satisfies the relator modulo the Riley polynomial", basis: MachineVerified },
            Provenance { claim: "Riley polynomial has degree (p-1)/2 and unit end coefficients", basis: MachineVerified },
            Provenance { claim: "Riley polynomial is squarefree mod 2", basis: MachineVerified },
            Provenance { claim: "Riley polynomial mod 2 equals the cyclotomic trace product for p", basis: MachineVerified },
            Provenance { claim: "mod-2 dihedral orders are odd divisors of p with phi(m)/2 degree each", basis: MachineVerified },
            Provenance { claim: "longitude image is parabolic with g divisible by 2", basis: MachineVerified },
            Provenance { claim: "odd discriminant excludes Q(i) from every factor field", basis: MachineVerified },
            Provenance { claim: "residue degrees above 2 are the mod-2 factor degrees", basis: MachineVerified },
        ]);
    }
    if hyperbolic {
        v.extend([
            Provenance { claim: "hidden symmetries force a rigid cusp with cusp field Q(i) or Q(sqrt-3)", basis: TheoremCited },
            Provenance { claim: "hidden symmetries force mod-2 images D3 or D5, hence factor degree at most 3", basis: TheoremCited },
            Provenance { claim: "orientation-preserving symmetry group is D4 iff q^2 = -1 mod p, else V", basis: LiteratureDerived },
            Provenance { claim: "non-arithmetic hyperbolic 2-bridge knots have no hidden symmetries", basis: TheoremCited },
            Provenance { claim: "hyperbolic 2-bridge knot complements are alone in their commensurability class", basis: TheoremCited },
        ]);
    } else {
        v.push(Provenance { claim: "(2, p) torus knot complements are all commensurable", basis: TheoremCited });
    }
    v
}

/// Full analysis of the knot with normal form `(p, q)` (any integers; they
/// are canonicalized first). Invalid input is an error; a contradiction
/// with a published result becomes the report's status.
pub fn analyze(p: i64, q: i64, cfg: &AnalysisConfig) -> Result<KnotReport> {
    let c = canonicalize(p, q)?;
    let k = c.form;
    let hyperbolic = k.is_hyperbolic();
    let uniqueness = if hyperbolic {
        UniquenessVerdict::UniqueInCommensurabilityClass
    } else {
        UniquenessVerdict::TorusKnotInfiniteClass
    };
    let mut report = KnotReport {
        input: (p, q),
        knot: k,
        mirrored: c.mirrored,
        hyperbolic,
        status: ReportStatus::Ok,
        riley: None,
        mod2: None,
        factors: Vec::new(),
        symmetry_group: hyperbolic.then(|| symmetry_group(&k)),
        obstructions: Vec::new(),
        hidden_symmetries: HiddenSymmetryVerdict::Unavailable,
        uniqueness,
        provenance: Vec::new(),
    };
    match fill(&mut report, cfg) {
        Ok(()) => {}
        Err(Error::Contradiction(c)) => {
            report.status = ReportStatus::Contradiction(c);
            report.hidden_symmetries = HiddenSymmetryVerdict::Unavailable;
        }
        Err(e) => return Err(e),
    }
    report.provenance = provenance(hyperbolic, report.status == ReportStatus::Ok);
    Ok(report)
}

fn fill(report: &mut KnotReport, cfg: &AnalysisConfig) -> Result<()> {
    let k = report.knot;
    let riley = riley_polynomial_with(&k.riley_word(), &cfg.sqrt.factor)?;
    report.mod2 = Some(analyze_mod2(&riley.lambda, k.p())?);
    for f in &riley.factors {
        report.factors.push(analyze_factor(&k, &riley, f, cfg)?);
    }
    report.riley = Some(riley);
    report.hidden_symmetries = if !report.hyperbolic {
        HiddenSymmetryVerdict::NotApplicableTorusKnot
    } else if k.is_figure_eight() {
        HiddenSymmetryVerdict::ExcludedArithmetic
    } else {
        report.obstructions = hidden_symmetry_obstruction(&report.factors);
        verdict_from(&report.factors, &report.obstructions)
    };
    Ok(())
}
