//! Acceptance run: one PASS/FAIL line per criterion. Each check recomputes
//! what it can with code independent of the library path it is checking.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tbk_core::census::{run_census, write_census};
use tbk_core::exact::{factor_z, PolyF2, PolyQ, PolyZ};
use tbk_core::field::{sqrt_in_field, SqrtConfig, SqrtStatus};
use tbk_core::knot::{Generator, Letter};
use tbk_core::verdict::{analyze, AnalysisConfig, KnotReport, ReportStatus, SymmetryGroup};

const MAX_P: u64 = 99;
const TIME_LIMIT: Duration = Duration::from_secs(180);

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

// Independent arithmetic.

type M = [PolyZ; 4];

fn pz(c: &[i64]) -> PolyZ {
    PolyZ::from_i64s(c)
}

fn reduce(a: &PolyZ, m: Option<&PolyZ>) -> PolyZ {
    match m {
        Some(m) => a.rem(m).unwrap(),
        None => a.clone(),
    }
}

fn mat_mul(x: &M, y: &M, m: Option<&PolyZ>) -> M {
    let e = |a: &PolyZ, b: &PolyZ, c: &PolyZ, d: &PolyZ| reduce(&(&(a * b) + &(c * d)), m);
    [
        e(&x[0], &y[0], &x[1], &y[2]),
        e(&x[0], &y[1], &x[1], &y[3]),
        e(&x[2], &y[0], &x[3], &y[2]),
        e(&x[2], &y[1], &x[3], &y[3]),
    ]
}

fn letter(l: &Letter) -> M {
    let s = l.exponent as i64;
    match l.generator {
        Generator::X1 => [pz(&[1]), pz(&[s]), pz(&[]), pz(&[1])],
        Generator::X2 => [pz(&[1]), pz(&[]), pz(&[0, s]), pz(&[1])],
    }
}

fn word<'a>(letters: impl IntoIterator<Item = &'a Letter>, m: Option<&PolyZ>) -> M {
    let mut acc = [pz(&[1]), pz(&[]), pz(&[]), pz(&[1])];
    for l in letters {
        acc = mat_mul(&acc, &letter(l), m);
    }
    acc
}

fn f2_ddf_degrees(f: &PolyF2) -> Vec<usize> {
    let y = PolyF2::var();
    let mut g = f.clone();
    let mut h = y.clone();
    let mut out = Vec::new();
    let mut d = 0;
    while g.degree().unwrap_or(0) > 0 {
        d += 1;
        if 2 * d > g.degree().unwrap() {
            out.push(g.degree().unwrap());
            break;
        }
        h = h.mul(&h).rem(&g);
        let c = g.gcd(&h.add(&y));
        let k = c.degree().unwrap();
        if k > 0 {
            out.extend(std::iter::repeat(d).take(k / d));
            g = g.div_rem(&c).0;
            h = h.rem(&g);
        }
    }
    out.sort();
    out
}

/// Order of `(1+y 1; y 1)` modulo the irreducible `g`, by stepping powers.
fn brute_order(g: &PolyF2) -> u64 {
    let y = PolyF2::var().rem(g);
    let one = PolyF2::one();
    let t = [one.add(&y), one.clone(), y.clone(), one.clone()];
    let mul = |a: &[PolyF2; 4], b: &[PolyF2; 4]| {
        let e = |p: &PolyF2, q: &PolyF2, r: &PolyF2, s: &PolyF2| p.mul(q).add(&r.mul(s)).rem(g);
        [
            e(&a[0], &b[0], &a[1], &b[2]),
            e(&a[0], &b[1], &a[1], &b[3]),
            e(&a[2], &b[0], &a[3], &b[2]),
            e(&a[2], &b[1], &a[3], &b[3]),
        ]
    };
    let mut acc = t.clone();
    let mut n = 1;
    while !(acc[0].is_one() && acc[1].is_zero() && acc[2].is_zero() && acc[3].is_one()) {
        acc = mul(&acc, &t);
        n += 1;
    }
    n
}

/// `∏ (y − 2cos(2πk/p))`, `k = 1..(p−1)/2`, through `P₀ = 1`, `P₁ = y + 1`,
/// `Pₙ₊₁ = y·Pₙ − Pₙ₋₁`.
fn cosine_product(p: u64) -> PolyZ {
    let (mut a, mut b) = (pz(&[1]), pz(&[1, 1]));
    for _ in 1..(p - 1) / 2 {
        let next = &(&pz(&[0, 1]) * &b) - &a;
        a = b;
        b = next;
    }
    b
}

fn totient(m: u64) -> u64 {
    (1..=m).filter(|k| k.gcd(&m) == 1).count() as u64
}

fn square_mod(z: &PolyQ, f: &PolyQ) -> PolyQ {
    (z * z).rem(f).unwrap()
}

// Criteria.

fn c1(reports: &[KnotReport], elapsed: Duration) -> Check {
    let mut violations = Vec::new();
    for r in reports {
        let w = word(r.knot.riley_word().letters(), None);
        let bar = PolyF2::from_poly_z(&w[0]);
        if bar.gcd(&bar.derivative()).degree() != Some(0) {
            violations.push(r.knot.to_string());
        }
        if let ReportStatus::Contradiction(c) = &r.status {
            violations.push(format!("{}: {c}", r.knot));
        }
    }
    ensure(violations.is_empty(), || format!("violations: {violations:?}"))?;
    ensure(elapsed < TIME_LIMIT, || format!("census took {elapsed:.1?}, limit {TIME_LIMIT:?}"))?;
    Ok(format!("{} knots, 0 violations, single-threaded census in {elapsed:.1?}", reports.len()))
}

fn c2(reports: &[KnotReport]) -> Check {
    for r in reports {
        let k = r.knot;
        let w = word(k.riley_word().letters(), None);
        let mut lambda = w[0].clone();
        if lambda.lc().is_negative() {
            lambda = -&lambda;
        }
        let rp = r.riley.as_ref().ok_or_else(|| format!("{k}: no Riley polynomial"))?;
        ensure(rp.lambda == lambda, || format!("{k}: library Λ differs from recomputed W11"))?;
        ensure(lambda.degree() == Some(((k.p() - 1) / 2) as usize), || {
            format!("{k}: degree {:?}", lambda.degree())
        })?;
        let x1: M = [pz(&[1]), pz(&[1]), pz(&[]), pz(&[1])];
        let x2: M = [pz(&[1]), pz(&[]), pz(&[0, 1]), pz(&[1])];
        let lhs = mat_mul(&w, &x1, Some(&lambda));
        let rhs = mat_mul(&x2, &w, Some(&lambda));
        ensure(lhs == rhs, || format!("{k}: relator fails modulo Λ"))?;
    }
    Ok(format!("deg Λ = (p-1)/2 and relator holds for {}/{} knots", reports.len(), reports.len()))
}

fn c3(reports: &[KnotReport]) -> Check {
    let mut n = 0;
    for r in reports {
        for fa in &r.factors {
            n += 1;
            let f = &fa.field;
            let bar = PolyF2::from_poly_z(&f.factor);
            let odd_by_reduction =
                bar.degree() == f.factor.degree() && bar.gcd(&bar.derivative()).degree() == Some(0);
            ensure(f.disc.is_odd() && f.disc_odd && odd_by_reduction, || {
                format!("{}: factor {} has disc {}", r.knot, f.factor, f.disc)
            })?;
            ensure(f.qi_status.is_absent(), || format!("{}: Q(i) status {:?}", r.knot, f.qi_status))?;
        }
    }
    Ok(format!("{n}/{n} factors have odd discriminant and Q(i) certified absent"))
}

fn c4() -> Check {
    let cfg = AnalysisConfig::default();
    let r = analyze(5, 3, &cfg).map_err(|e| e.to_string())?;
    let rp = r.riley.as_ref().ok_or("no Riley polynomial")?;
    ensure(rp.lambda == pz(&[1, -1, 1]), || format!("Λ = {}", rp.lambda))?;
    ensure(r.factors.len() == 1, || format!("{} factors", r.factors.len()))?;
    let fa = &r.factors[0];
    ensure(fa.field.disc == BigInt::from(-3), || format!("disc {}", fa.field.disc))?;
    ensure(fa.field.two_splitting == vec![2], || format!("two_splitting {:?}", fa.field.two_splitting))?;
    let ms: Vec<u64> = fa.dihedral.iter().map(|d| d.m).collect();
    ensure(ms == vec![5], || format!("m = {ms:?}"))?;
    ensure(fa.cusp.g0.rep() == &pz(&[1, -2]), || format!("g0 = {}", fa.cusp.g0.rep()))?;
    let g0 = fa.cusp.g0.rep().to_q();
    let sq = square_mod(&g0, &rp.lambda.to_q());
    ensure(sq == pz(&[-3]).to_q(), || format!("g0^2 = {sq}"))?;
    ensure(fa.cusp_field_degree == 2, || format!("cusp field degree {}", fa.cusp_field_degree))?;
    let s = sqrt_in_field(&rp.lambda, -3, &SqrtConfig::default()).map_err(|e| e.to_string())?;
    let z = s.witness().ok_or_else(|| format!("sqrt(-3): {s:?}"))?;
    ensure(square_mod(z, &rp.lambda.to_q()) == pz(&[-3]).to_q(), || "witness does not square to -3".into())?;
    ensure(r.symmetry_group == Some(SymmetryGroup::D4), || format!("{:?}", r.symmetry_group))?;
    Ok(format!("Λ = y^2 - y + 1, disc -3, split [2], m = 5, g0 = 1 - 2y, g0^2 = -3, sqrt(-3) = {z}, D4"))
}

fn c5(reports: &[KnotReport]) -> Check {
    // The degree-one factor is y + 1: the dihedral table's "x" under x = y + 1.
    let d3 = PolyF2::from_bits([1, 1]);
    let d5 = PolyF2::from_bits([1, 1, 1]);
    let (mut n3, mut n5, mut brute) = (0, 0, 0);
    for r in reports {
        for im in r.mod2.iter().flat_map(|m| &m.images) {
            let deg = im.factor_mod2.degree().unwrap();
            if deg <= 6 {
                let o = brute_order(&im.factor_mod2);
                ensure(o == im.m, || format!("{}: {} has order {o}, reported {}", r.knot, im.factor_mod2, im.m))?;
                brute += 1;
            }
            ensure((deg == 1) == (im.m == 3), || format!("{}: degree {deg} with m = {}", r.knot, im.m))?;
            ensure((im.factor_mod2 == d5) == (im.m == 5), || format!("{}: {} with m = {}", r.knot, im.factor_mod2, im.m))?;
            if im.m == 3 {
                ensure(im.factor_mod2 == d3, || format!("{}: D3 factor {}", r.knot, im.factor_mod2))?;
                n3 += 1;
            }
            n5 += (im.m == 5) as usize;
        }
    }
    ensure(n3 > 0 && n5 > 0, || "census has no D3 or no D5 image".into())?;
    Ok(format!("D3 <-> y + 1 ({n3} images), D5 <-> y^2 + y + 1 ({n5} images), {brute} orders checked by stepping"))
}

fn c6(reports: &[KnotReport]) -> Check {
    for r in reports {
        let p = r.knot.p();
        let m2 = r.mod2.as_ref().ok_or_else(|| format!("{}: no mod-2 data", r.knot))?;
        let oracle = PolyF2::from_poly_z(&cosine_product(p));
        ensure(m2.reduced == oracle && m2.oracle == oracle, || format!("{}: {} vs {oracle}", r.knot, m2.reduced))?;
        let mut got: BTreeMap<u64, usize> = BTreeMap::new();
        for im in &m2.images {
            *got.entry(im.m).or_insert(0) += im.factor_mod2.degree().unwrap();
        }
        let want: BTreeMap<u64, usize> =
            (2..=p).filter(|m| p % m == 0).map(|m| (m, (totient(m) / 2) as usize)).collect();
        ensure(got == want, || format!("{}: spectrum {got:?}, expected {want:?}", r.knot))?;
    }
    Ok(format!("reduction equals the cosine product and spectrum is phi(m)/2 for {} knots", reports.len()))
}

fn c7(reports: &[KnotReport]) -> Check {
    let mut n = 0;
    for r in reports {
        let w = r.knot.riley_word();
        let e = w.exponent_sum();
        for fa in &r.factors {
            n += 1;
            let f = &fa.field.factor;
            let wm = word(w.letters(), Some(f));
            let rev = word(w.reversed().iter(), Some(f));
            let shift: M = [pz(&[1]), pz(&[-2 * e]), pz(&[]), pz(&[1])];
            let l = mat_mul(&mat_mul(&rev, &wm, Some(f)), &shift, Some(f));
            let k = r.knot;
            ensure(l[2].is_zero(), || format!("{k}: lower-left entry nonzero mod {f}"))?;
            let a = l[0].clone();
            ensure(a == l[3] && (a == pz(&[1]) || a == pz(&[-1])), || format!("{k}: diagonal {a}, {}", l[3]))?;
            let x1: M = [pz(&[1]), pz(&[1]), pz(&[]), pz(&[1])];
            ensure(mat_mul(&l, &x1, Some(f)) == mat_mul(&x1, &l, Some(f)), || format!("{k}: no commuting"))?;
            let g = if a == pz(&[1]) { l[1].clone() } else { -&l[1] };
            ensure(g.coeffs().iter().all(|c| c.is_even()), || format!("{k}: g = {g} not divisible by 2"))?;
            ensure(&g == fa.cusp.g.rep(), || format!("{k}: library g differs"))?;
        }
    }
    Ok(format!("{n}/{n} factors: parabolic, commutes with X1, g/2 integral"))
}

fn c8(reports: &[KnotReport]) -> Check {
    let mut n = 0;
    for r in reports {
        for fa in &r.factors {
            n += 1;
            let f = &fa.field;
            let want = f2_ddf_degrees(&PolyF2::from_poly_z(&f.factor));
            let mut got = f.two_splitting.clone();
            got.sort();
            ensure(got == want, || format!("{}: {got:?} vs mod-2 degrees {want:?}", r.knot))?;
            ensure(got.iter().sum::<usize>() == f.degree, || format!("{}: sum != degree", r.knot))?;
        }
    }
    Ok(format!("{n}/{n} factors: residue degrees equal mod-2 factor degrees"))
}

fn c9() -> Check {
    const CASES: usize = 500;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let ns = [-1i64, -2, -3, -5, -7, -11, 2, 3, 5, 6, 7, 10, 13, -15, -19];
    let cfg = SqrtConfig::default();
    let (mut done, mut absent, mut other) = (0, 0, Vec::new());
    let mut by_degree: BTreeMap<usize, usize> = BTreeMap::new();
    while done < CASES {
        let n = ns[rng.gen_range(0..ns.len())];
        let da = rng.gen_range(1..=4);
        let db = rng.gen_range(0..da);
        let mut a: Vec<i64> = (0..=da).map(|_| rng.gen_range(-5..=5)).collect();
        a[da] = 1;
        let b: Vec<i64> = (0..=db).map(|_| rng.gen_range(-5..=5)).collect();
        if b.iter().all(|&x| x == 0) {
            continue;
        }
        // A² − nB² vanishes at A/B = √n, so √n lies in ℚ[y]/(f).
        let (a, b) = (pz(&a), pz(&b));
        let f = &(&a * &a) - &(&(&b * &b) * &pz(&[n]));
        if factor_z(&f).map_or(true, |fs| fs.len() != 1) {
            continue;
        }
        done += 1;
        *by_degree.entry(f.degree().unwrap()).or_insert(0) += 1;
        match sqrt_in_field(&f, n, &cfg).map_err(|e| e.to_string())? {
            SqrtStatus::PresentWitness(z) => {
                let sq = square_mod(&z, &f.to_q());
                if sq != PolyQ::constant(BigRational::from_integer(n.into())) {
                    other.push(format!("{f}, n = {n}: witness squares to {sq}"));
                }
            }
            SqrtStatus::CertifiedAbsent(reason) => {
                absent += 1;
                other.push(format!("{f}, n = {n}: false absence {reason:?}"));
            }
            SqrtStatus::Undetermined(why) => other.push(format!("{f}, n = {n}: undetermined ({why})")),
        }
    }
    ensure(other.is_empty(), || format!("{absent} false absences; {:?}", &other[..other.len().min(5)]))?;
    Ok(format!("{CASES}/{CASES} planted witnesses recovered and verified, degrees {by_degree:?}"))
}

fn tree(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut v: Vec<_> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (e.file_name().into_string().unwrap(), std::fs::read(e.path()).unwrap())
        })
        .collect();
    v.sort();
    v
}

fn c10() -> Check {
    let cfg = AnalysisConfig::default();
    let a = tempfile::tempdir().map_err(|e| e.to_string())?;
    let b = tempfile::tempdir().map_err(|e| e.to_string())?;
    write_census(MAX_P, a.path(), 0, &cfg).map_err(|e| e.to_string())?;
    write_census(MAX_P, b.path(), 2, &cfg).map_err(|e| e.to_string())?;
    let (ta, tb) = (tree(a.path()), tree(b.path()));
    ensure(!ta.is_empty() && ta == tb, || {
        let diff: Vec<_> = ta.iter().zip(&tb).filter(|(x, y)| x != y).map(|(x, _)| x.0.clone()).collect();
        format!("trees differ: {diff:?}")
    })?;
    let bytes: usize = ta.iter().map(|(_, d)| d.len()).sum();
    Ok(format!("two census runs wrote identical trees ({} files, {bytes} bytes)", ta.len()))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let cfg = AnalysisConfig::default();
    let reports = run_census(MAX_P, 1, &cfg);
    let elapsed = start.elapsed();
    let reports = match reports {
        Ok(r) => r,
        Err(e) => {
            println!("census failed: {e}");
            return ExitCode::FAILURE;
        }
    };

    let results: Vec<(&str, Check)> = vec![
        ("squarefree mod 2, p <= 99", c1(&reports, elapsed)),
        ("degree law", c2(&reports)),
        ("odd discriminant and Q(i) absent", c3(&reports)),
        ("figure-eight golden values", c4()),
        ("D3/D5 factor table", c5(&reports)),
        ("mod-2 oracle and dihedral spectrum", c6(&reports)),
        ("longitude contract", c7(&reports)),
        ("residue degrees above 2", c8(&reports)),
        ("planted square roots", c9()),
        ("census determinism", c10()),
    ];
    let mut failed = 0;
    for (i, (name, r)) in results.iter().enumerate() {
        match r {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
