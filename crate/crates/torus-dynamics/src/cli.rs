//! Command-line surface: `analyze`, `scan`, `classify`, `verify-symbolic`,
//! `product-check`. JSON is the machine-readable output; `--format table`
//! prints human-oriented tables. Exit codes: 0 all-pass, 1 verification
//! failure, 2 invalid input, 3 capability bound exceeded.

use crate::degrees::{check_log_concavity, degree_profile, finite_order_certified, verify_product_formula};
use crate::error::{Error, Result};
use crate::parse::{parse_matrix, parse_polynomial};
use crate::primitivity::{certify, MapKind};
use crate::quotient::checks::{
    bounded_membership_check, corrupted_generators, generators, verify_field_identities,
    verify_generator_invariance,
};
use crate::quotient::ratfun::verify_parametrization;
use crate::report::{
    round_sig10, AnalyzeBundle, CertificateJson, ClassificationJson, OrderJson, ProductCheckJson,
    ProfileJson, Sig10, SymbolicCheckJson, SymbolicReport,
};
use crate::salem::classify;
use crate::scan::scan_family;
use crate::torus::ring::RingTag;
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::cmp::Ordering;

/// Environment variable controlling the scan worker-pool size.
pub const WORKERS_ENV: &str = "TORDYN_WORKERS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_CAPABILITY: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(
    name = "tordyn",
    about = "Exact dynamical degrees, entropy, primitivity and Salem/Pisot \
             classification for torus automorphisms"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full analysis of one automorphism: degree profile, entropy,
    /// primitivity certificate, classification of lambda_1, order check.
    Analyze {
        /// Row-major matrix text, e.g. [[0,1,0],[0,0,1],[-1,3,0]].
        #[arg(long)]
        matrix: String,
        /// Entry ring: z, zi or zw.
        #[arg(long)]
        ring: String,
        /// Enclosure tolerance (rational, decimal or scientific).
        #[arg(long, default_value = "1e-10")]
        tol: String,
        /// Map kind for the certificate.
        #[arg(long, default_value = "automorphism")]
        map_kind: String,
        /// Include minimal polynomials and isolating intervals.
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        emit_exact: bool,
        /// Include the fibration case traces.
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        emit_traces: bool,
        /// Search bound for the finite-order check.
        #[arg(long, default_value_t = 120)]
        order_bound: usize,
    },
    /// Scan the one-parameter entropy family.
    Scan {
        /// Family identifier (only `pa` is defined).
        #[arg(long)]
        family: String,
        /// Inclusive parameter range `A..B`.
        #[arg(long)]
        range: String,
        #[arg(long, default_value = "1e-10")]
        tol: String,
    },
    /// Classify a monic irreducible polynomial as salem / pisot / neither.
    Classify {
        /// Polynomial expression, e.g. "x^3-6*x^2+9*x-1".
        #[arg(long)]
        poly: String,
    },
    /// Run the symbolic quotient-ring verification suite.
    VerifySymbolic {
        /// Membership-check degree (at most 12).
        #[arg(long, default_value_t = 12)]
        degree_bound: u32,
        /// Test hook: corrupt the generator list to exercise the failure
        /// path.
        #[arg(long, hide = true)]
        corrupt_generators: bool,
    },
    /// Check the product formula on a block-diagonal pair.
    ProductCheck {
        /// Left block matrix text.
        #[arg(long)]
        g: String,
        /// Right block matrix text.
        #[arg(long)]
        h: String,
        /// Entry ring for both blocks: z, zi or zw.
        #[arg(long)]
        ring: String,
        #[arg(long, default_value = "1e-9")]
        tol: String,
    },
}

#[derive(Debug)]
pub struct CliOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses arguments and runs; never panics on bad input.
pub fn run<I, T>(args: I) -> CliOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    init_worker_pool();
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/usage text
            let rendered = e.render().to_string();
            let code = if e.use_stderr() { EXIT_INVALID_INPUT } else { EXIT_OK };
            return match code {
                EXIT_OK => CliOutcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => CliOutcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    match execute(&cli) {
        Ok((stdout, all_pass)) => CliOutcome {
            code: if all_pass { EXIT_OK } else { EXIT_VERIFICATION_FAILED },
            stdout,
            stderr: String::new(),
        },
        Err(e) => CliOutcome {
            code: match e {
                Error::Capability(_) => EXIT_CAPABILITY,
                _ => EXIT_INVALID_INPUT,
            },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn init_worker_pool() {
    if let Ok(v) = std::env::var(WORKERS_ENV) {
        if let Ok(n) = v.parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
}

/// Executes a parsed invocation; returns the rendered output and whether
/// every verification in it passed.
pub fn execute(cli: &Cli) -> Result<(String, bool)> {
    match &cli.command {
        Command::Analyze {
            matrix,
            ring,
            tol,
            map_kind,
            emit_exact,
            emit_traces,
            order_bound,
        } => cmd_analyze(
            matrix,
            ring,
            tol,
            map_kind,
            *emit_exact,
            *emit_traces,
            *order_bound,
            cli.format,
        ),
        Command::Scan { family, range, tol } => cmd_scan(family, range, tol, cli.format),
        Command::Classify { poly } => cmd_classify(poly, cli.format),
        Command::VerifySymbolic {
            degree_bound,
            corrupt_generators,
        } => cmd_verify_symbolic(*degree_bound, *corrupt_generators, cli.format),
        Command::ProductCheck { g, h, ring, tol } => {
            cmd_product_check(g, h, ring, tol, cli.format)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_analyze(
    matrix_text: &str,
    ring: &str,
    tol: &str,
    map_kind: &str,
    emit_exact: bool,
    emit_traces: bool,
    order_bound: usize,
    format: Format,
) -> Result<(String, bool)> {
    let tag = RingTag::parse(ring)?;
    let matrix = parse_matrix(matrix_text, tag)?;
    let tol = parse_tolerance(tol)?;
    let kind = MapKind::parse(map_kind)?;
    let profile = degree_profile(&matrix, &tol)?;
    let cert = certify(&profile, kind, profile.n)?;
    let order = finite_order_certified(&matrix, order_bound, &profile)?;
    let concavity = check_log_concavity(&profile);

    let (salem, salem_note) = match (profile.n >= 1).then(|| profile.lambda(1)) {
        Some(l1) => match &l1.exact {
            Some(handle)
                if handle.cmp_rational(&BigRational::one()) == Ordering::Greater =>
            {
                let evidence = classify(handle.minpoly())?;
                (Some(ClassificationJson::from_evidence(&evidence)), None)
            }
            Some(_) => (
                None,
                Some("lambda_1 = 1: classification applies to values > 1 only".to_string()),
            ),
            None => (
                None,
                Some("lambda_1 has no exact handle at this tolerance".to_string()),
            ),
        },
        None => (None, Some("dimension 0 profile".to_string())),
    };

    let bundle = AnalyzeBundle {
        matrix: matrix.to_text(),
        ring: tag.cli_name(),
        profile: ProfileJson::from_profile(&profile, emit_exact),
        entropy: Sig10(profile.entropy),
        primitivity: CertificateJson::from_certificate(&cert, emit_traces),
        salem,
        salem_note,
        finite_order: OrderJson::from_report(&order),
        log_concavity: concavity,
    };
    let out = match format {
        Format::Json => to_json(&bundle)?,
        Format::Table => analyze_table(&bundle),
    };
    Ok((out, true))
}

fn analyze_table(b: &AnalyzeBundle) -> String {
    let mut s = String::new();
    s.push_str(&format!("matrix    {}\n", b.matrix));
    s.push_str(&format!("ring      {}\n", b.ring));
    for (p, l) in b.profile.lambda.iter().enumerate() {
        let exact = match &l.minpoly {
            Some(mp) => format!("  minpoly {mp}"),
            None => String::new(),
        };
        s.push_str(&format!("lambda_{p}  {}{exact}\n", fmt10(l.float.0)));
    }
    s.push_str(&format!("entropy   {}\n", fmt10(b.entropy.0)));
    s.push_str(&format!(
        "primitive {:?} (rule {:?})\n",
        b.primitivity.verdict, b.primitivity.rule
    ));
    match (&b.salem, &b.salem_note) {
        (Some(c), _) => s.push_str(&format!("salem     {:?}\n", c.verdict)),
        (None, Some(note)) => s.push_str(&format!("salem     n/a ({note})\n")),
        _ => {}
    }
    s.push_str(&format!(
        "order     {}\n",
        match b.finite_order.order {
            Some(m) => m.to_string(),
            None if b.finite_order.infinite_certified => "infinite (certified)".to_string(),
            None => format!("none found within bound {}", b.finite_order.bound),
        }
    ));
    s
}

fn cmd_scan(family: &str, range: &str, tol: &str, format: Format) -> Result<(String, bool)> {
    if family != crate::scan::FAMILY_NAME {
        return Err(Error::invalid(format!(
            "unknown family {family:?}; available: {}",
            crate::scan::FAMILY_NAME
        )));
    }
    let (a_min, a_max) = parse_range(range)?;
    let tol = parse_tolerance(tol)?;
    let report = scan_family(a_min, a_max, &tol)?;
    let ok = report.all_ok;
    let out = match format {
        Format::Json => to_json(&report)?,
        Format::Table => {
            let mut s = String::new();
            s.push_str("a     lambda1        lambda2        entropy        primitive  salem    ok\n");
            for r in &report.rows {
                s.push_str(&format!(
                    "{:<5} {:<14} {:<14} {:<14} {:<10} {:<8} {}\n",
                    r.a,
                    fmt10(r.lambda1.float.0),
                    fmt10(r.lambda2.float.0),
                    fmt10(r.entropy.0),
                    format!("{:?}", r.primitive).to_lowercase(),
                    format!("{:?}", r.salem).to_lowercase(),
                    if r.row_ok { "yes" } else { "NO" },
                ));
            }
            s
        }
    };
    Ok((out, ok))
}

fn cmd_classify(poly: &str, format: Format) -> Result<(String, bool)> {
    let p = parse_polynomial(poly)?;
    let evidence = classify(&p)?;
    let json = ClassificationJson::from_evidence(&evidence);
    let out = match format {
        Format::Json => to_json(&json)?,
        Format::Table => format!(
            "polynomial   {}\nverdict      {:?}\nreciprocal   {}\ninside       {}\non circle    {}\nreal outside {}\nlargest root {}\n",
            p.coeff_string(),
            json.verdict,
            json.reciprocal,
            json.roots_inside,
            json.roots_on_circle,
            json.real_roots_outside,
            fmt10(json.largest_root.float.0),
        ),
    };
    Ok((out, true))
}

fn cmd_verify_symbolic(
    degree_bound: u32,
    corrupt: bool,
    format: Format,
) -> Result<(String, bool)> {
    let gens = if corrupt {
        corrupted_generators()
    } else {
        generators()
    };
    let mut checks = Vec::new();
    for row in verify_generator_invariance(&gens) {
        checks.push(SymbolicCheckJson {
            name: format!("invariance: {}", row.generator),
            status: if row.invariant { "zero" } else { "nonzero" }.to_string(),
            residual: None,
        });
    }
    for row in verify_field_identities() {
        checks.push(SymbolicCheckJson {
            name: row.name.clone(),
            status: if row.zero { "zero" } else { "nonzero" }.to_string(),
            residual: if row.zero { None } else { Some(row.residual) },
        });
    }
    let membership = bounded_membership_check(degree_bound, &gens)?;
    checks.push(SymbolicCheckJson {
        name: format!("membership degree <= {degree_bound}"),
        status: if membership.agree {
            "dimensions-agree".to_string()
        } else {
            format!(
                "mismatch: monomials {} vs span {}",
                membership.invariant_monomials, membership.span_dimension
            )
        },
        residual: None,
    });
    let param = verify_parametrization()?;
    checks.push(SymbolicCheckJson {
        name: "parametrization substituted into the quintic".to_string(),
        status: if param.ok() { "zero" } else { "nonzero" }.to_string(),
        residual: if param.ok() {
            None
        } else {
            Some(param.residual.clone())
        },
    });
    let all_passed = checks
        .iter()
        .all(|c| c.status == "zero" || c.status == "dimensions-agree");
    let report = SymbolicReport { checks, all_passed };
    let out = match format {
        Format::Json => to_json(&report)?,
        Format::Table => {
            let mut s = String::new();
            for c in &report.checks {
                s.push_str(&format!("{:<55} {}\n", c.name, c.status));
            }
            s.push_str(&format!(
                "overall: {}\n",
                if report.all_passed { "pass" } else { "FAIL" }
            ));
            s
        }
    };
    Ok((out, all_passed))
}

fn cmd_product_check(
    g: &str,
    h: &str,
    ring: &str,
    tol: &str,
    format: Format,
) -> Result<(String, bool)> {
    let tag = RingTag::parse(ring)?;
    let gm = parse_matrix(g, tag)?;
    let hm = parse_matrix(h, tag)?;
    let tol = parse_tolerance(tol)?;
    let report = verify_product_formula(&gm, &hm, &tol)?;
    let json = ProductCheckJson::from_report(&report);
    let ok = json.all_agree;
    let out = match format {
        Format::Json => to_json(&json)?,
        Format::Table => {
            let mut s = String::from("p   lhs             rhs             agree\n");
            for r in &json.rows {
                s.push_str(&format!(
                    "{:<3} {:<15} {:<15} {}\n",
                    r.p,
                    fmt10(r.lhs.0),
                    fmt10(r.rhs.0),
                    r.agree
                ));
            }
            s
        }
    };
    Ok((out, ok))
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| Error::Internal(format!("serialization failed: {e}")))
}

fn fmt10(x: f64) -> String {
    format!("{}", round_sig10(x))
}

/// Accepts `A..B` (inclusive).
fn parse_range(s: &str) -> Result<(i64, i64)> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| Error::invalid(format!("range must look like A..B, got {s:?}")))?;
    let a_min: i64 = a
        .trim()
        .parse()
        .map_err(|_| Error::invalid(format!("bad range start {a:?}")))?;
    let a_max: i64 = b
        .trim()
        .parse()
        .map_err(|_| Error::invalid(format!("bad range end {b:?}")))?;
    Ok((a_min, a_max))
}

/// Parses a positive tolerance given as `p/q`, a decimal, or scientific
/// notation, into an exact rational.
pub fn parse_tolerance(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let value = if let Some((num, den)) = t.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::invalid(format!("bad tolerance numerator {num:?}")))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::invalid(format!("bad tolerance denominator {den:?}")))?;
        if d.is_zero() {
            return Err(Error::invalid("tolerance denominator is zero"));
        }
        BigRational::new(n, d)
    } else {
        parse_decimal(t)?
    };
    if value <= BigRational::zero() {
        return Err(Error::invalid("tolerance must be positive"));
    }
    Ok(value)
}

fn parse_decimal(s: &str) -> Result<BigRational> {
    let (mantissa, exponent) = match s.split_once(['e', 'E']) {
        Some((m, e)) => {
            let exp: i64 = e
                .parse()
                .map_err(|_| Error::invalid(format!("bad exponent in {s:?}")))?;
            (m, exp)
        }
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    let digits = format!(
        "{}{}",
        if int_part.is_empty() { "0" } else { int_part },
        frac_part
    );
    let n: BigInt = digits
        .parse()
        .map_err(|_| Error::invalid(format!("bad decimal {s:?}")))?;
    let shift = exponent - frac_part.len() as i64;
    let ten = BigInt::from(10);
    Ok(if shift >= 0 {
        BigRational::from_integer(n * ten.pow(shift as u32))
    } else {
        BigRational::new(n, ten.pow((-shift) as u32))
    })
}
