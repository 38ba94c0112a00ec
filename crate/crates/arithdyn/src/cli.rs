//! Command-line front end: analyze, bounds, generate, verify, census.
//! JSON reports carry `"schema": "arithdyn/1"`; exit codes are 0 = all PASS,
//! 1 = any FAIL, 2 = usage/parse error, 3 = budget exceeded.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    b_bound, baron_bound, c_bound, everywhere_good_bound, kappa, lambda, main_theorem_bound,
    ms_period_bound, rat_to_decimal, three_point_bound, BoundFamily, BoundValue,
};
use crate::dynamics::{fp_cycle_census, periodic_points};
use crate::exact::Int;
use crate::parse::parse_map;
use crate::point::{parse_point, PlaceSet, ProjPoint};
use crate::ratmap::RationalMap;
use crate::verify::{
    check_distance_preservation, check_injectivity_mod_p, check_ramified_integrality,
    check_tail_integrality, condition_count, four_point_membership, verify_baron, Status,
    VerificationReport, Witness,
};
use crate::{Error, Result};

pub const SCHEMA: &str = "arithdyn/1";

#[derive(Parser)]
#[command(
    name = "arithdyn",
    about = "Exact arithmetic dynamics of rational self-maps of P^1 over Q",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Evertse,
    BsEss,
}

impl From<FamilyArg> for BoundFamily {
    fn from(f: FamilyArg) -> BoundFamily {
        match f {
            FamilyArg::Evertse => BoundFamily::Evertse,
            FamilyArg::BsEss => BoundFamily::BsEss,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Lemma {
    Distance,
    Ramified,
    Tail,
    ConditionCount,
    FourPoint,
    Baron,
    Injectivity,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum GenFamily {
    Dfixed,
    Period2,
    BaronCycle,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// Full report on one map: reduction, periodic points, bounds, checks
    Analyze {
        /// map expression, e.g. "x^2" or "F=X^2;G=Y^2"
        map: String,
        #[arg(long, default_value_t = 4)]
        period_cap: u32,
        #[arg(long)]
        json: bool,
        #[arg(long, value_enum, default_value = "evertse")]
        family: FamilyArg,
        /// extra finite places, comma-separated primes
        #[arg(long = "S", value_delimiter = ',')]
        s: Vec<u64>,
    },
    /// Tabulate the explicit bounds for a degree and place count
    Bounds {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        s: u32,
        #[arg(long, value_enum, default_value = "evertse")]
        family: FamilyArg,
        #[arg(long)]
        json: bool,
    },
    /// Emit a named example polynomial, expanded and ready for `analyze`
    Generate {
        family: GenFamily,
        /// degree for dfixed
        #[arg(long)]
        d: Option<u32>,
        /// distinct positive integers for period2, comma-separated
        #[arg(long, value_delimiter = ',')]
        ns: Vec<u64>,
    },
    /// Run one named check on a map
    Verify {
        map: String,
        #[arg(long, value_enum)]
        lemma: Lemma,
        #[arg(long = "P")]
        p: Option<String>,
        #[arg(long = "Q")]
        q: Option<String>,
        #[arg(long = "R")]
        r: Option<String>,
        /// point set (condition-count: the set A; four-point: the anchors)
        #[arg(long, value_delimiter = ',')]
        set: Vec<String>,
        /// good prime for injectivity
        #[arg(long)]
        prime: Option<u64>,
        #[arg(long = "S", value_delimiter = ',')]
        s: Vec<u64>,
        #[arg(long, default_value_t = 4)]
        period_cap: u32,
        #[arg(long)]
        json: bool,
    },
    /// Cycle census of the reduced map on P^1(F_p)
    Census {
        map: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        json: bool,
    },
}

/// One bound row, rendered once so reports round-trip as plain strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub name: String,
    /// "EXACT" or "LOG10"
    pub kind: String,
    /// exact decimal value, or the log10 upper bound as a decimal string
    pub value: String,
    pub display: String,
}

fn bound_entry(name: &str, bv: &BoundValue) -> BoundEntry {
    let (kind, value) = match bv {
        BoundValue::Exact(v) => ("EXACT", v.to_string()),
        BoundValue::Log10(l) => ("LOG10", rat_to_decimal(l, 6)),
    };
    BoundEntry {
        name: name.to_string(),
        kind: kind.to_string(),
        value,
        display: bv.to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicEntry {
    pub point: String,
    pub minimal_period: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalEntry {
    pub point: String,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: String,
    pub map: String,
    pub degree: u32,
    pub bad_primes: Vec<String>,
    pub s_value: u32,
    pub critical_points: Vec<CriticalEntry>,
    pub period_cap: u32,
    pub periodic_points: Vec<PeriodicEntry>,
    pub bounds: Vec<BoundEntry>,
    pub verifications: Vec<VerificationReport>,
    pub status: Status,
}

pub fn analyze(
    map_src: &str,
    period_cap: u32,
    family: BoundFamily,
    extra_s: &PlaceSet,
) -> Result<AnalysisReport> {
    let map = parse_map(map_src)?;
    let d = map.degree() as u32;
    let bad = map.bad_primes()?;
    let s_set = bad.union(extra_s);
    let s = s_set.s_value();

    let critical_points = if d >= 2 {
        map.rational_critical_points()?
            .into_iter()
            .map(|(p, m)| CriticalEntry {
                point: p.to_string(),
                multiplicity: m,
            })
            .collect()
    } else {
        Vec::new()
    };

    let pts = periodic_points(&map, period_cap)?;
    let periodic_entries: Vec<PeriodicEntry> = pts
        .iter()
        .map(|p| PeriodicEntry {
            point: p.point.to_string(),
            minimal_period: p.minimal_period,
        })
        .collect();

    let mut bound_rows: Vec<(String, BoundValue)> = Vec::new();
    if d >= 2 {
        if map.is_monic_integer_polynomial() {
            bound_rows.push(("monic-polynomial d+1".into(), baron_bound(d)));
        }
        if bad.is_empty() {
            bound_rows.push(("everywhere-good d+5".into(), everywhere_good_bound(d)));
        }
        bound_rows.push((
            "periodic-point kappa*d+lambda".into(),
            main_theorem_bound(d, s, family),
        ));
        bound_rows.push((
            "period (Morton-Silverman)".into(),
            ms_period_bound(bad.len() as u32, 1),
        ));
    }

    let mut verifications = Vec::new();
    // delta-preservation across every periodic pair
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            verifications.push(check_distance_preservation(
                &map,
                &pts[i].point,
                &pts[j].point,
                &s_set,
            )?);
        }
    }
    if d >= 2 && map.is_monic_integer_polynomial() {
        verifications.push(verify_baron(map.numerator().coeffs(), period_cap)?);
    }
    // the enumerated count must sit inside every applicable bound
    let count = pts.len() as u64;
    for (name, bv) in &bound_rows {
        if name.starts_with("period (") {
            continue; // bounds the period, not the count
        }
        let ok = bv.admits_count(count);
        verifications.push(VerificationReport {
            claim: "count-within-bound".into(),
            subject: format!("{count} periodic points vs {name} = {bv}"),
            status: if ok { Status::Pass } else { Status::Fail },
            witnesses: Vec::new(),
            notes: String::new(),
        });
    }

    let status = if verifications.iter().any(|v| v.status == Status::Fail) {
        Status::Fail
    } else {
        Status::Pass
    };

    Ok(AnalysisReport {
        schema: SCHEMA.into(),
        map: map.to_string(),
        degree: d,
        bad_primes: bad.primes().map(|p| p.to_string()).collect(),
        s_value: s,
        critical_points,
        period_cap,
        periodic_points: periodic_entries,
        bounds: bound_rows
            .iter()
            .map(|(n, bv)| bound_entry(n, bv))
            .collect(),
        verifications,
        status,
    })
}

fn print_analysis(r: &AnalysisReport) {
    println!("map: {}  (degree {})", r.map, r.degree);
    println!(
        "bad primes: {}",
        if r.bad_primes.is_empty() {
            "none".into()
        } else {
            r.bad_primes.join(", ")
        }
    );
    println!("s (finite bad places + S + archimedean): {}", r.s_value);
    let crit: Vec<String> = r
        .critical_points
        .iter()
        .map(|c| format!("{} (mult {})", c.point, c.multiplicity))
        .collect();
    println!(
        "rational critical points: {}",
        if crit.is_empty() { "none".into() } else { crit.join(", ") }
    );
    println!(
        "periodic points (cap {}): {}",
        r.period_cap,
        if r.periodic_points.is_empty() {
            "none".into()
        } else {
            r.periodic_points
                .iter()
                .map(|p| format!("{} (period {})", p.point, p.minimal_period))
                .collect::<Vec<_>>()
                .join(", ")
        }
    );
    println!("bounds:");
    for b in &r.bounds {
        let mark = if b.kind == "LOG10" { " [LOG10]" } else { "" };
        println!("  {}: {}{}", b.name, b.display, mark);
    }
    println!("verifications:");
    for v in &r.verifications {
        println!("  {:?} {} — {}", v.status, v.claim, v.subject);
    }
    println!("status: {:?}", r.status);
}

fn cmd_analyze(
    map: &str,
    period_cap: u32,
    json: bool,
    family: BoundFamily,
    s: &[u64],
) -> Result<u8> {
    let extra = PlaceSet::from_i64(&s.iter().map(|&p| p as i64).collect::<Vec<_>>());
    let report = analyze(map, period_cap, family, &extra)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        print_analysis(&report);
    }
    Ok(if report.status == Status::Fail { 1 } else { 0 })
}

fn cmd_bounds(d: u32, s: u32, family: BoundFamily, json: bool) -> Result<u8> {
    if d < 2 || s < 1 {
        return Err(Error::Precondition("bounds need --d >= 2 and --s >= 1".into()));
    }
    let rows = vec![
        bound_entry("B", &b_bound(s, family)),
        bound_entry("C(3,s)", &c_bound(3, s, family)),
        bound_entry("C(5,s)", &c_bound(5, s, family)),
        bound_entry("kappa", &BoundValue::Exact(kappa(s, family))),
        bound_entry("lambda", &lambda(s, family)),
        bound_entry("kappa*d+lambda", &main_theorem_bound(d, s, family)),
        bound_entry("three-point", &three_point_bound(s)),
        bound_entry("d+5", &everywhere_good_bound(d)),
        bound_entry("d+1", &baron_bound(d)),
        bound_entry("ms-period (t=s+1)", &ms_period_bound(s - 1, 1)),
    ];
    if json {
        let doc = serde_json::json!({ "schema": SCHEMA, "d": d, "s": s, "bounds": rows });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        println!("bounds for d = {d}, s = {s}:");
        for row in &rows {
            let mark = if row.kind == "LOG10" { " [LOG10]" } else { "" };
            println!("  {:<18} {}{}", row.name, row.display, mark);
        }
    }
    Ok(0)
}

/// Ascending integer coefficients rendered as "x^3-6x^2+12x-6".
pub fn format_polynomial(coeffs: &[Int]) -> String {
    let mut out = String::new();
    for i in (0..coeffs.len()).rev() {
        let c = &coeffs[i];
        if c.is_zero() {
            continue;
        }
        let neg = c < &Int::zero();
        let mag = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let mag_one = mag == Int::from(1);
        match i {
            0 => out.push_str(&mag.to_string()),
            _ => {
                if !mag_one {
                    out.push_str(&mag.to_string());
                }
                out.push('x');
                if i > 1 {
                    out.push_str(&format!("^{i}"));
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn poly_mul_int(a: &[Int], b: &[Int]) -> Vec<Int> {
    let mut out = vec![Int::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// (x-1)(x-2)...(x-d) + x, expanded.
pub fn dfixed_polynomial(d: u32) -> Vec<Int> {
    let mut coeffs = vec![Int::from(1)];
    for i in 1..=d {
        coeffs = poly_mul_int(&coeffs, &[Int::from(-(i as i64)), Int::from(1)]);
    }
    coeffs[1] += Int::from(1);
    coeffs
}

/// prod (x^2 - n_i^2) - x, expanded.
pub fn period2_polynomial(ns: &[u64]) -> Result<Vec<Int>> {
    if ns.len() < 2 {
        return Err(Error::Precondition("period2 needs at least two values".into()));
    }
    let mut seen = std::collections::BTreeSet::new();
    for &n in ns {
        if n == 0 || !seen.insert(n) {
            return Err(Error::Precondition(
                "period2 values must be distinct positive integers".into(),
            ));
        }
    }
    let mut coeffs = vec![Int::from(1)];
    for &n in ns {
        let n2 = Int::from(n) * Int::from(n);
        coeffs = poly_mul_int(&coeffs, &[-n2, Int::zero(), Int::from(1)]);
    }
    coeffs[1] -= Int::from(1);
    Ok(coeffs)
}

fn cmd_generate(family: GenFamily, d: Option<u32>, ns: &[u64]) -> Result<u8> {
    let coeffs = match family {
        GenFamily::Dfixed => {
            let d = d.ok_or_else(|| Error::Precondition("dfixed needs --d".into()))?;
            if d < 2 {
                return Err(Error::Precondition("dfixed needs d >= 2".into()));
            }
            dfixed_polynomial(d)
        }
        GenFamily::Period2 => period2_polynomial(ns)?,
        GenFamily::BaronCycle => {
            // x^3 - 3x^2 + x + 2: 2-cycle (0, 2) with fixed point 1
            vec![Int::from(2), Int::from(1), Int::from(-3), Int::from(1)]
        }
    };
    println!("{}", format_polynomial(&coeffs));
    Ok(0)
}

fn need_point(flag: &str, v: &Option<String>) -> Result<ProjPoint> {
    match v {
        Some(s) => parse_point(s),
        None => Err(Error::Precondition(format!("this lemma needs --{flag}"))),
    }
}

fn four_point_report(
    map: &RationalMap,
    anchors: &[ProjPoint; 4],
    s: &PlaceSet,
    cap: u32,
) -> Result<VerificationReport> {
    let mut report = VerificationReport {
        claim: "four-point-membership".into(),
        subject: format!(
            "{map} with anchors ({}, {}, {}, {})",
            anchors[0], anchors[1], anchors[2], anchors[3]
        ),
        status: Status::Pass,
        witnesses: Vec::new(),
        notes: String::new(),
    };
    let pts = periodic_points(map, cap)?;
    let mut audited = 0usize;
    for p in &pts {
        if four_point_membership(map, anchors, &p.point, s)? {
            audited += 1;
        } else {
            report.status = Status::Fail;
            report.witnesses.push(Witness::Point {
                point: p.point.clone(),
            });
        }
    }
    report.notes = format!("{audited} of {} periodic points inside the membership set", pts.len());
    Ok(report)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    map_src: &str,
    lemma: Lemma,
    p: Option<String>,
    q: Option<String>,
    r: Option<String>,
    set: &[String],
    prime: Option<u64>,
    s: &[u64],
    period_cap: u32,
    json: bool,
) -> Result<u8> {
    let map = parse_map(map_src)?;
    let s_set = map
        .bad_primes()?
        .union(&PlaceSet::from_i64(&s.iter().map(|&x| x as i64).collect::<Vec<_>>()));
    let parse_set = || -> Result<Vec<ProjPoint>> { set.iter().map(|t| parse_point(t)).collect() };
    let report = match lemma {
        Lemma::Distance => {
            check_distance_preservation(&map, &need_point("P", &p)?, &need_point("Q", &q)?, &s_set)?
        }
        Lemma::Ramified => check_ramified_integrality(
            &map,
            &need_point("Q", &q)?,
            &need_point("P", &p)?,
            &s_set,
            period_cap,
        )?,
        Lemma::Tail => check_tail_integrality(
            &map,
            &need_point("P", &p)?,
            &need_point("Q", &q)?,
            &need_point("R", &r)?,
            &s_set,
            period_cap,
        )?,
        Lemma::ConditionCount => {
            let a_set = parse_set()?;
            if a_set.is_empty() {
                return Err(Error::Precondition("condition-count needs --set".into()));
            }
            let n = condition_count(&map, &a_set)?;
            VerificationReport {
                claim: "condition-count".into(),
                subject: format!(
                    "{map} with A = {{{}}}",
                    a_set.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
                ),
                status: Status::Pass,
                witnesses: Vec::new(),
                notes: format!("condition count = {n}"),
            }
        }
        Lemma::FourPoint => {
            let pts = parse_set()?;
            let anchors: [ProjPoint; 4] = pts.try_into().map_err(|_| {
                Error::Precondition("four-point needs --set with exactly four points".into())
            })?;
            four_point_report(&map, &anchors, &s_set, period_cap)?
        }
        Lemma::Baron => {
            if !map.is_monic_integer_polynomial() {
                return Err(Error::Precondition(
                    "baron applies to monic integer polynomials".into(),
                ));
            }
            verify_baron(map.numerator().coeffs(), period_cap)?
        }
        Lemma::Injectivity => {
            let prime = prime
                .ok_or_else(|| Error::Precondition("injectivity needs --prime".into()))?;
            check_injectivity_mod_p(&map, &Int::from(prime), period_cap)?
        }
    };
    if json {
        let doc = serde_json::json!({ "schema": SCHEMA, "report": report });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        println!("{:?} {} — {}", report.status, report.claim, report.subject);
        if !report.notes.is_empty() {
            println!("  {}", report.notes);
        }
        for w in &report.witnesses {
            match w {
                Witness::Valuation { prime, lhs, rhs } => {
                    println!("  at {prime}: {lhs} vs {rhs}")
                }
                Witness::Point { point } => println!("  violator: {point}"),
            }
        }
    }
    Ok(if report.status == Status::Fail { 1 } else { 0 })
}

fn cmd_census(map_src: &str, p: u64, json: bool) -> Result<u8> {
    let map = parse_map(map_src)?;
    let census = fp_cycle_census(&map, &Int::from(p))?;
    if json {
        let doc = serde_json::json!({ "schema": SCHEMA, "census": census });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        println!(
            "p = {}: {} periodic residues, cycle lengths [{}]",
            census.p,
            census.periodic_count,
            census
                .cycle_lengths
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        );
    }
    Ok(0)
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::UnfactoredResidue(_) | Error::DegreeCapExceeded(..) => 3,
        _ => 2,
    }
}

/// Parses and runs one invocation; returns the process exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match cli.cmd {
        Cmd::Analyze {
            map,
            period_cap,
            json,
            family,
            s,
        } => cmd_analyze(&map, period_cap, json, family.into(), &s),
        Cmd::Bounds { d, s, family, json } => cmd_bounds(d, s, family.into(), json),
        Cmd::Generate { family, d, ns } => cmd_generate(family, d, &ns),
        Cmd::Verify {
            map,
            lemma,
            p,
            q,
            r,
            set,
            prime,
            s,
            period_cap,
            json,
        } => cmd_verify(&map, lemma, p, q, r, &set, prime, &s, period_cap, json),
        Cmd::Census { map, p, json } => cmd_census(&map, p, json),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}
