//! The `verify` subcommand: re-derives published artifacts by independent
//! routes and diffs them. Each check reports pass/fail plus a timing; a
//! failing check names the first disagreement it saw.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use vcpath_bijection::{gamma, lambda, phi, psi, Offset};
use vcpath_core::{validate, LatticePath, PathClass, PlainFamily, StepFilter};
use vcpath_dp::{count_table, CountTable};
use vcpath_oeis::{compare, FetchConfig, SequenceRef, Transform};
use vcpath_oracle::{count, enumerate, EnumerationQuery};
use vcpath_series::{
    discriminant_p, expand_named_gf, kernel_for_family, motzkin_q_r,
    residue_extract_constant_term, solve_kernel_roots, verify_kernel_equation, GfExpansion,
    KernelId,
};

use crate::table::TableArtifact;
use crate::CliError;

pub const SUITES: [&str; 6] = ["dp", "bijection", "gf", "kernel", "oeis", "golden"];

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// X-order for series-level checks.
    pub order: i64,
    /// Largest width cross-checked against brute-force enumeration.
    pub oracle_n: i64,
    /// Directory holding the rendered-table snapshots.
    pub golden_dir: Option<PathBuf>,
    pub offline: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            order: 10,
            oracle_n: 6,
            golden_dir: None,
            offline: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

fn check(name: &str, body: impl FnOnce() -> Result<String, String>) -> CheckResult {
    let start = Instant::now();
    let outcome = body();
    let millis = start.elapsed().as_millis();
    match outcome {
        Ok(detail) => CheckResult {
            name: name.to_string(),
            passed: true,
            detail,
            millis,
        },
        Err(detail) => CheckResult {
            name: name.to_string(),
            passed: false,
            detail,
            millis,
        },
    }
}

pub fn run_suite(suite: &str, opts: &VerifyOptions) -> Result<Vec<CheckResult>, CliError> {
    match suite {
        "dp" => Ok(suite_dp(opts)),
        "bijection" => Ok(suite_bijection()),
        "gf" => Ok(suite_gf(opts)),
        "kernel" => Ok(suite_kernel(opts)),
        "oeis" => Ok(suite_oeis(opts)),
        "golden" => Ok(suite_golden(opts)),
        "all" => {
            let mut all = Vec::new();
            for s in SUITES {
                all.extend(run_suite(s, opts)?);
            }
            Ok(all)
        }
        _ => Err(CliError::Usage(format!(
            "unknown suite {suite:?}; expected one of dp bijection gf kernel oeis golden all"
        ))),
    }
}

/// Diffs the recurrence tables against brute-force enumeration, class by
/// class, across every height.
fn suite_dp(opts: &VerifyOptions) -> Vec<CheckResult> {
    PathClass::all()
        .iter()
        .map(|&class| {
            check(&format!("dp-oracle-{}", class.id()), || {
                let table = count_table(class, opts.oracle_n);
                for n in 0..=opts.oracle_n {
                    let query = EnumerationQuery::constrained(class, n).limit(opts.oracle_n.max(12));
                    let counted = count(&query).map_err(|e| e.to_string())?;
                    compare_row(&table, n, &counted)?;
                }
                Ok(format!("widths 0..={} match enumeration", opts.oracle_n))
            })
        })
        .collect()
}

fn compare_row(
    table: &CountTable,
    n: i64,
    counted: &BTreeMap<i64, BigUint>,
) -> Result<(), String> {
    let (lo, hi) = table.row_support(n);
    for (&m, v) in counted {
        if m < lo || m > hi {
            return Err(format!("width {n}: enumeration reaches height {m}, table does not"));
        }
        if table.get(n, m) != v {
            return Err(format!(
                "width {n} height {m}: table {} vs enumeration {v}",
                table.get(n, m)
            ));
        }
    }
    for m in lo..=hi {
        let t = table.get(n, m);
        if !t.is_zero() && !counted.contains_key(&m) {
            return Err(format!("width {n} height {m}: table {t} vs enumeration 0"));
        }
    }
    Ok(())
}

/// One substitution pair: the constrained class, the plain source family,
/// its optional filter, the offset, and the plain width for a given class
/// width.
struct MapCase {
    class: &'static str,
    family: PlainFamily,
    filter: Option<StepFilter>,
    offset: Offset,
    plain_width: fn(i64) -> i64,
    forward: fn(&LatticePath, Offset) -> Result<LatticePath, vcpath_bijection::BijectionError>,
    backward: fn(&LatticePath, Offset) -> Result<LatticePath, vcpath_bijection::BijectionError>,
    /// Largest class width exercised.
    n_max: i64,
}

fn map_cases() -> Vec<MapCase> {
    let smooth1 = StepFilter::from_name("smooth-1").unwrap();
    let smooth2 = StepFilter::from_name("smooth-2").unwrap();
    vec![
        MapCase {
            class: "mw",
            family: PlainFamily::Motzkin,
            filter: None,
            offset: Offset::First,
            plain_width: |n| 2 * n + 1,
            forward: phi,
            backward: psi,
            n_max: 4,
        },
        MapCase {
            class: "gmw",
            family: PlainFamily::GrandMotzkin,
            filter: None,
            offset: Offset::First,
            plain_width: |n| 2 * n + 1,
            forward: phi,
            backward: psi,
            n_max: 4,
        },
        MapCase {
            class: "mwr",
            family: PlainFamily::Motzkin,
            filter: None,
            offset: Offset::Second,
            plain_width: |n| 2 * n,
            forward: phi,
            backward: psi,
            n_max: 4,
        },
        MapCase {
            class: "gmwr",
            family: PlainFamily::GrandMotzkin,
            filter: None,
            offset: Offset::Second,
            plain_width: |n| 2 * n,
            forward: phi,
            backward: psi,
            n_max: 4,
        },
        MapCase {
            class: "cw",
            family: PlainFamily::Schroder,
            filter: Some(smooth1),
            offset: Offset::First,
            plain_width: |n| 3 * n + 2,
            forward: gamma,
            backward: lambda,
            n_max: 2,
        },
        MapCase {
            class: "gcw",
            family: PlainFamily::Delannoy,
            filter: Some(smooth1),
            offset: Offset::First,
            plain_width: |n| 3 * n + 2,
            forward: gamma,
            backward: lambda,
            n_max: 2,
        },
        MapCase {
            class: "cwr",
            family: PlainFamily::Schroder,
            filter: Some(smooth2),
            offset: Offset::Second,
            plain_width: |n| 3 * n,
            forward: gamma,
            backward: lambda,
            n_max: 2,
        },
        MapCase {
            class: "gcwr",
            family: PlainFamily::Delannoy,
            filter: Some(smooth2),
            offset: Offset::Second,
            plain_width: |n| 3 * n,
            forward: gamma,
            backward: lambda,
            n_max: 2,
        },
    ]
}

/// Round-trips both substitution maps over every source path and checks
/// image cardinalities against the recurrence tables, height by height.
fn suite_bijection() -> Vec<CheckResult> {
    map_cases()
        .into_iter()
        .map(|case| {
            let name = format!("roundtrip-{}-{}", case.class, case.offset);
            check(&name, || run_map_case(&case))
        })
        .collect()
}

fn run_map_case(case: &MapCase) -> Result<String, String> {
    let class = PathClass::from_id(case.class).expect("known class id");
    let table = count_table(class, case.n_max);
    let mut total = 0usize;
    for n in 0..=case.n_max {
        let w = (case.plain_width)(n);
        let mut query = EnumerationQuery::plain(case.family, w).limit(w.max(12));
        if let Some(f) = case.filter {
            query = query.filter(f);
        }
        let sources = enumerate(&query).map_err(|e| e.to_string())?;
        let mut histogram: BTreeMap<i64, BigUint> = BTreeMap::new();
        for p in &sources {
            let image = (case.forward)(p, case.offset).map_err(|e| e.to_string())?;
            if !matches!(validate(&image, class), Ok(true)) {
                return Err(format!("image of a width-{w} source leaves class {}", case.class));
            }
            let back = (case.backward)(&image, case.offset).map_err(|e| e.to_string())?;
            if &back != p {
                return Err(format!("round trip alters a width-{w} source"));
            }
            *histogram.entry(image.endpoint().1).or_default() += 1u32;
        }
        compare_row(&table, n, &histogram)
            .map_err(|e| format!("image cardinality: {e}"))?;
        // Reverse direction: every class path returns to a source.
        let images = enumerate(&EnumerationQuery::constrained(class, n).limit(n.max(12)))
            .map_err(|e| e.to_string())?;
        for c in &images {
            let source = (case.backward)(c, case.offset).map_err(|e| e.to_string())?;
            let again = (case.forward)(&source, case.offset).map_err(|e| e.to_string())?;
            if &again != c {
                return Err(format!("reverse round trip alters a width-{n} path"));
            }
        }
        total += sources.len() + images.len();
    }
    Ok(format!("{total} paths round-tripped"))
}

const BIVARIATE_PAIRS: [(&str, &str); 12] = [
    ("aHR", "gmwr"),
    ("aH", "gmw"),
    ("aQR", "mwr"),
    ("aQ", "mw"),
    ("bHR", "gdwr"),
    ("bH", "gdw"),
    ("bQR", "dwr"),
    ("bQ", "dw"),
    ("cHR", "gcwr"),
    ("cH", "gcw"),
    ("cQR", "cwr"),
    ("cQ", "cw"),
];

const UNIVARIATE_PAIRS: [(&str, &str); 12] = [
    ("aHR0", "gmwr"),
    ("aH0", "gmw"),
    ("aQR0", "mwr"),
    ("aQ0", "mw"),
    ("bHR0", "gdwr"),
    ("bH0", "gdw"),
    ("bQR0", "dwr"),
    ("bQ0", "dw"),
    ("cHR0", "gcwr"),
    ("cH0", "gcw"),
    ("cQR0", "cwr"),
    ("cQ0", "cw"),
];

/// Interleaved series alternate between a restricted-class row (even
/// x-powers) and a free-class row (odd x-powers).
const INTERLEAVE_BIVARIATE: [(&str, &str, &str); 2] =
    [("mOH", "gdwr", "gdw"), ("mOQ", "dwr", "dw")];

/// Index mapping from series exponent to table row: the flat-filtered
/// grounds pack a class row into every other exponent, while the smooth
/// one keeps table indices (its parity zeros are real column entries).
#[derive(Clone, Copy)]
enum InterleaveIndexing {
    Halved,
    Direct,
}

const INTERLEAVE_UNIVARIATE: [(&str, &str, &str, InterleaveIndexing); 3] = [
    ("mOH0", "gdwr", "gdw", InterleaveIndexing::Halved),
    ("mOQ0", "dwr", "dw", InterleaveIndexing::Halved),
    ("dOH0", "gcwr", "gcw", InterleaveIndexing::Direct),
];

/// Expands every catalogue form and diffs it against the tables: bivariate
/// names at `--order`, ground series out to x^20.
fn suite_gf(opts: &VerifyOptions) -> Vec<CheckResult> {
    let mut results = Vec::new();
    for (name, class) in BIVARIATE_PAIRS {
        results.push(check(&format!("gf-bivariate-{name}"), || {
            let gf = expand_bivariate(name, opts.order)?;
            let class = PathClass::from_id(class).unwrap();
            let table = count_table(class, opts.order - 1);
            for n in 0..opts.order {
                let (lo, hi) = table.row_support(n);
                for m in lo..=hi {
                    let t = big(table.get(n, m));
                    if gf.xy_coeff(n, m) != t {
                        return Err(format!(
                            "x^{n} y^{m}: series {} vs table {t}",
                            gf.xy_coeff(n, m)
                        ));
                    }
                }
            }
            Ok(format!("matches {} table to x^{}", class.id(), opts.order - 1))
        }));
    }
    for (name, even_class, odd_class) in INTERLEAVE_BIVARIATE {
        results.push(check(&format!("gf-bivariate-{name}"), || {
            let gf = expand_bivariate(name, opts.order)?;
            let even = count_table(PathClass::from_id(even_class).unwrap(), opts.order / 2);
            let odd = count_table(PathClass::from_id(odd_class).unwrap(), (opts.order - 1) / 2);
            for l in 0..opts.order {
                let (table, n) = if l % 2 == 0 {
                    (&even, l / 2)
                } else {
                    (&odd, (l - 1) / 2)
                };
                let (lo, hi) = table.row_support(n);
                for m in lo..=hi {
                    let t = big(table.get(n, m));
                    if gf.xy_coeff(l, m) != t {
                        return Err(format!("x^{l} y^{m}: series {} vs table {t}", gf.xy_coeff(l, m)));
                    }
                }
            }
            Ok(format!("interleaves {even_class}/{odd_class} to x^{}", opts.order - 1))
        }));
    }
    for (name, class) in UNIVARIATE_PAIRS {
        results.push(check(&format!("gf-univariate-{name}"), || {
            let coeffs = expand_univariate(name, GROUND_ORDER)?;
            let class = PathClass::from_id(class).unwrap();
            let table = count_table(class, GROUND_ORDER - 1);
            for (n, c) in coeffs.iter().enumerate() {
                let t = big(table.get(n as i64, 0));
                if c != &t {
                    return Err(format!("x^{n}: series {c} vs ground column {t}"));
                }
            }
            expect_full_order(coeffs.len())?;
            Ok(format!("matches {} ground column to x^{}", class.id(), GROUND_ORDER - 1))
        }));
    }
    for (name, even_class, odd_class, indexing) in INTERLEAVE_UNIVARIATE {
        results.push(check(&format!("gf-univariate-{name}"), || {
            let coeffs = expand_univariate(name, GROUND_ORDER)?;
            let even = count_table(PathClass::from_id(even_class).unwrap(), GROUND_ORDER - 1);
            let odd = count_table(PathClass::from_id(odd_class).unwrap(), GROUND_ORDER - 1);
            for (l, c) in coeffs.iter().enumerate() {
                let l = l as i64;
                let t = match (l % 2 == 0, indexing) {
                    (true, InterleaveIndexing::Halved) => big(even.get(l / 2, 0)),
                    (false, InterleaveIndexing::Halved) => big(odd.get((l - 1) / 2, 0)),
                    (true, InterleaveIndexing::Direct) => big(even.get(l, 0)),
                    (false, InterleaveIndexing::Direct) => big(odd.get(l - 1, 0)),
                };
                if c != &t {
                    return Err(format!("x^{l}: series {c} vs interleaved ground {t}"));
                }
            }
            expect_full_order(coeffs.len())?;
            Ok(format!("interleaves {even_class}/{odd_class} grounds to x^{}", GROUND_ORDER - 1))
        }));
    }
    results.push(check("gf-identity-discriminant", || {
        let p = discriminant_p(GROUND_ORDER).map_err(|e| e.to_string())?;
        let square = p.mul(&p);
        for n in 0..GROUND_ORDER {
            let expected = match n {
                0 => 1,
                1 => -10,
                2 => 9,
                _ => 0,
            };
            if square.x_coeff(n) != BigRational::from_integer(expected.into()) {
                return Err(format!("x^{n} of the squared discriminant is {}", square.x_coeff(n)));
            }
        }
        Ok(format!("squares back to its polynomial to x^{}", GROUND_ORDER - 1))
    }));
    results.push(check("gf-identity-radical-product", || {
        let (q, r) = motzkin_q_r(2 * GROUND_ORDER).map_err(|e| e.to_string())?;
        let p = discriminant_p(GROUND_ORDER).map_err(|e| e.to_string())?;
        let residual = q.mul(&r).sub(&p.stretch_ram(2));
        if residual.is_zero() {
            Ok(format!("ramified factors multiply to the discriminant to x^{}", GROUND_ORDER - 1))
        } else {
            Err(format!(
                "product deviates at t^{}",
                residual.valuation().unwrap()
            ))
        }
    }));
    results
}

/// Ground-series checks always run to this x-order.
const GROUND_ORDER: i64 = 21;

fn expect_full_order(len: usize) -> Result<(), String> {
    if (len as i64) < GROUND_ORDER {
        Err(format!("only {len} coefficients expanded"))
    } else {
        Ok(())
    }
}

fn expand_bivariate(
    name: &str,
    order: i64,
) -> Result<vcpath_series::BivariateSeries, String> {
    match expand_named_gf(name, order).map_err(|e| e.to_string())? {
        GfExpansion::Bivariate(b) => Ok(b),
        GfExpansion::Univariate(_) => Err(format!("{name} expanded univariate")),
    }
}

fn expand_univariate(name: &str, order: i64) -> Result<Vec<BigRational>, String> {
    match expand_named_gf(name, order).map_err(|e| e.to_string())? {
        GfExpansion::Univariate(u) => u.x_coeffs().map_err(|e| e.to_string()),
        GfExpansion::Bivariate(_) => Err(format!("{name} expanded bivariate")),
    }
}

fn big(v: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(v.clone()))
}

/// Numerator of the half-plane counting series over the family kernel;
/// the constant-term residue of `num/K` is the class ground column.
const RESIDUE_GROUNDS: [(&str, &[(i64, i64, i64)]); 6] = [
    ("gmwr", &[(0, 2, 1)]),
    ("gmw", &[(0, 1, 1), (0, 2, 1), (0, 3, 1)]),
    ("gdwr", &[(0, 2, 1)]),
    ("gdw", &[(0, 1, 1), (0, 2, 1), (0, 3, 1)]),
    ("gcwr", &[(0, 3, 1)]),
    ("gcw", &[(0, 1, 1), (0, 3, 1), (0, 5, 1)]),
];

fn suite_kernel(opts: &VerifyOptions) -> Vec<CheckResult> {
    let mut results = Vec::new();
    for id in ["mwr", "mw", "dwr", "dw", "cwr", "cw"] {
        results.push(check(&format!("kernel-equation-{id}"), || {
            let class = PathClass::from_id(id).unwrap();
            let report = verify_kernel_equation(class, opts.order);
            match report.first_failure {
                None => Ok(format!("residual vanishes to x^{}", report.checked_order - 1)),
                Some((n, m)) => Err(format!("residual nonzero at x^{n} y^{m}")),
            }
        }));
    }
    for id in [KernelId::MotzkinW, KernelId::DyckW, KernelId::SchroderW] {
        results.push(check(&format!("kernel-roots-{}", id.name()), || {
            let order_t = opts.order * id.ramification() as i64;
            let roots = solve_kernel_roots(id, order_t);
            for i in 0..roots.small_roots.len() {
                let residual = roots.residual(i);
                if !residual.is_zero() {
                    return Err(format!(
                        "root {i} leaves residual at t^{}",
                        residual.valuation().unwrap()
                    ));
                }
            }
            Ok(format!(
                "{} small roots vanish in the kernel to t^{}",
                roots.small_roots.len(),
                order_t - 1
            ))
        }));
    }
    for (id, num) in RESIDUE_GROUNDS {
        results.push(check(&format!("residue-ground-{id}"), || {
            let class = PathClass::from_id(id).unwrap();
            let kernel = kernel_for_family(class.family);
            let ram = kernel.ramification();
            // Margin above the requested order: dividing by the root costs
            // trusted orders, and only coefficients below the surviving
            // order are checked.
            let order_t = (opts.order + 2) * ram as i64;
            let roots = solve_kernel_roots(kernel, order_t);
            let series =
                residue_extract_constant_term(num, kernel.terms(), &roots.small_roots, ram, order_t)
                    .map_err(|e| e.to_string())?;
            if series.x_order() < opts.order {
                return Err(format!(
                    "extraction only trusted to x^{}, need x^{}",
                    series.x_order() - 1,
                    opts.order - 1
                ));
            }
            let table = count_table(class, opts.order - 1);
            for n in 0..opts.order {
                let c = series.x_coeff(n);
                if !c.denom().is_one() {
                    return Err(format!("x^{n} residue is not integral: {c}"));
                }
                let t = big(table.get(n, 0));
                if c != t {
                    return Err(format!("x^{n}: residue {c} vs ground column {t}"));
                }
            }
            Ok(format!("residue reproduces the ground column to x^{}", opts.order - 1))
        }));
    }
    results
}

/// Class ground sequences against their archive references: for each pair
/// the class column refines a bisection of the archived sequence.
const OEIS_CASES: [(&str, &str, Transform); 11] = [
    ("mwr", "A001006", Transform::BisectEven),
    ("mw", "A001006", Transform::BisectOdd),
    ("gmwr", "A002426", Transform::BisectEven),
    ("gmw", "A002426", Transform::BisectOdd),
    ("dwr", "A214938", Transform::BisectEven),
    ("dw", "A214938", Transform::BisectOdd),
    ("gdwr", "A026520", Transform::BisectEven),
    ("gdw", "A026520", Transform::BisectOdd),
    ("mwr", "A026945", Transform::Identity),
    ("mw", "A099250", Transform::Identity),
    ("gmwr", "A082758", Transform::Identity),
];

const OEIS_MIN_TERMS: usize = 15;

fn suite_oeis(opts: &VerifyOptions) -> Vec<CheckResult> {
    let config = if opts.offline {
        FetchConfig::offline()
    } else {
        FetchConfig::from_env()
    };
    OEIS_CASES
        .iter()
        .map(|(id, a_number, transform)| {
            check(&format!("oeis-{id}-{a_number}"), || {
                let class = PathClass::from_id(id).unwrap();
                let computed: Vec<BigInt> = vcpath_dp::sequence(class, 0, 40)
                    .iter()
                    .map(|v| BigInt::from(v.clone()))
                    .collect();
                let reference = SequenceRef::new(a_number, transform.clone())
                    .map_err(|e| e.to_string())?;
                let report =
                    compare(&computed, &reference, &config).map_err(|e| e.to_string())?;
                if report.is_match(OEIS_MIN_TERMS) {
                    Ok(report.to_string())
                } else {
                    Err(report.to_string())
                }
            })
        })
        .collect()
}

fn suite_golden(opts: &VerifyOptions) -> Vec<CheckResult> {
    let dir = opts
        .golden_dir
        .clone()
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/golden"));
    PathClass::all()
        .iter()
        .map(|&class| {
            check(&format!("golden-{}", class.id()), || {
                let path = dir.join(format!("{}.csv", class.id()));
                let expected = std::fs::read_to_string(&path)
                    .map_err(|e| format!("{}: {e}", path.display()))?;
                let rendered = TableArtifact::appendix(class, 8).to_csv();
                if rendered == expected {
                    Ok("rendered table is byte-identical to the snapshot".to_string())
                } else {
                    let at = first_difference(&rendered, &expected);
                    Err(format!("rendered table deviates from the snapshot at byte {at}"))
                }
            })
        })
        .collect()
}

fn first_difference(a: &str, b: &str) -> usize {
    a.bytes()
        .zip(b.bytes())
        .position(|(x, y)| x != y)
        .unwrap_or_else(|| a.len().min(b.len()))
}
