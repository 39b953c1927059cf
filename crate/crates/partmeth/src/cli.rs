//! The `partmeth` command line.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_complex::Complex64;
use partmeth_core::algebra::{parse_rational, to_f64, Rational};
use partmeth_core::classes::{enumerate_class, Combinator, ElementFilter, PartitionClass};
use partmeth_core::genfuncs;
use partmeth_core::partitions::Order;
use partmeth_core::sequences::{self, Family};
use partmeth_core::series::expand_power;
use serde::Serialize;
use thiserror::Error;

use crate::bench::{self, BenchSink};
use crate::emit::{self, Layout, What};
use crate::format::{grouped, Listing};
use crate::output::{Sink, TermWrite};
use crate::{cache, parallel};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Compute(String),
    #[error("io error: {0}")]
    Io(#[from] io::Error),
}

impl From<partmeth_core::Error> for CliError {
    fn from(e: partmeth_core::Error) -> Self {
        CliError::Compute(e.to_string())
    }
}

type CliResult<T = ()> = Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

#[derive(Parser, Debug)]
#[command(name = "partmeth", version, about = "Integer partitions and the partition method for power series")]
pub struct Cli {
    /// Worker threads for subtree-parallel reductions.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the partitions of k.
    Partitions(PartitionsArgs),
    /// Count the partitions of k.
    Count(CountArgs),
    /// Coefficient families from the partition method.
    Coeffs(CoeffsArgs),
    /// Generating-function polynomial tables.
    Polys(PolysArgs),
    /// Reciprocal Bessel coefficients and first-zero estimates.
    Bessel(BesselArgs),
    /// Coefficients in symbolic, Mathematica-readable form.
    EmitSymbolic(EmitArgs),
    /// Compare the throughput of the partition generators.
    Bench(BenchArgs),
}

#[derive(Args, Debug, Clone, Default, PartialEq, Eq)]
struct ClassArgs {
    /// Smallest element allowed.
    #[arg(long)]
    min_element: Option<u32>,
    /// Largest element allowed.
    #[arg(long)]
    max_element: Option<u32>,
    /// Largest multiplicity allowed for any element.
    #[arg(long = "max-mult")]
    max_multiplicity: Option<u32>,
    /// Exact number of parts.
    #[arg(long)]
    parts: Option<u32>,
    /// Largest number of parts.
    #[arg(long)]
    max_parts: Option<u32>,
    /// Elements that must occur (comma separated).
    #[arg(long, value_delimiter = ',')]
    require: Vec<u32>,
    /// Require at least one of the --require elements instead of all.
    #[arg(long, requires = "require")]
    any: bool,
    /// Distinct elements only.
    #[arg(long)]
    distinct: bool,
    /// Allowed elements: odd, even, pentagonal, or a comma-separated list.
    #[arg(long)]
    allowed: Option<String>,
}

impl ClassArgs {
    fn is_unconstrained(&self) -> bool {
        *self == ClassArgs::default()
    }

    fn is_distinct_only(&self) -> bool {
        *self == ClassArgs { distinct: true, ..ClassArgs::default() }
    }

    fn build(&self) -> CliResult<PartitionClass> {
        let mut b = PartitionClass::builder();
        if let Some(m) = self.min_element {
            b = b.min_element(m);
        }
        if let Some(m) = self.max_element {
            b = b.max_element(m);
        }
        if let Some(m) = self.max_multiplicity {
            b = b.max_multiplicity(m);
        }
        if let Some(m) = self.parts {
            b = b.exact_parts(m);
        }
        if let Some(m) = self.max_parts {
            b = b.max_parts(m);
        }
        if !self.require.is_empty() {
            b = b.require(&self.require, if self.any { Combinator::Any } else { Combinator::All });
        }
        if let Some(a) = &self.allowed {
            b = b.allowed(parse_filter(a)?);
        }
        b = b.distinct(self.distinct);
        b.build().or_else(|e| usage(e.to_string()))
    }
}

fn parse_filter(text: &str) -> CliResult<ElementFilter> {
    Ok(match text {
        "odd" => ElementFilter::Odd,
        "even" => ElementFilter::Even,
        "pentagonal" => ElementFilter::Pentagonal,
        list => {
            let set: Result<Vec<u32>, _> = list.split(',').map(|s| s.trim().parse::<u32>()).collect();
            match set {
                Ok(v) if !v.is_empty() && !v.contains(&0) => ElementFilter::Set(v),
                _ => {
                    return usage(format!(
                        "--allowed expects odd, even, pentagonal or a list of positive integers, got {text:?}"
                    ))
                }
            }
        }
    })
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum OrderArg {
    Brcp,
    ReverseLex,
    Ascending,
}

impl From<OrderArg> for Order {
    fn from(o: OrderArg) -> Order {
        match o {
            OrderArg::Brcp => Order::Brcp,
            OrderArg::ReverseLex => Order::ReverseLex,
            OrderArg::Ascending => Order::Ascending,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum TextFormat {
    Paper,
    Json,
}

#[derive(Args, Debug)]
struct PartitionsArgs {
    #[arg(long)]
    k: u32,
    #[command(flatten)]
    class: ClassArgs,
    #[arg(long, value_enum, default_value = "brcp")]
    order: OrderArg,
    #[arg(long, value_enum, default_value = "paper")]
    format: TextFormat,
    /// Print each partition with its conjugate.
    #[arg(long, conflicts_with = "format")]
    conjugate: bool,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Roll the output file every N partitions (needs --output).
    #[arg(long, requires = "output")]
    split: Option<u64>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum CountRoute {
    /// Euler pentagonal recurrence (or the discrete-count recurrence with --distinct).
    Recurrence,
    /// Pruned BRCP enumeration.
    Enumerate,
    /// Sum over partitions into pentagonal numbers.
    Pentagonal,
    /// Exponential of the divisor sums.
    Gamma,
}

#[derive(Args, Debug)]
struct CountArgs {
    #[arg(long)]
    k: u32,
    #[command(flatten)]
    class: ClassArgs,
    #[arg(long, value_enum)]
    route: Option<CountRoute>,
    /// Print digits in groups of three.
    #[arg(long)]
    grouped: bool,
    /// CSV of `k,count,total,ratio` for every order from 1 to k.
    #[arg(long, conflicts_with = "grouped")]
    series: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FamilyArg {
    Cosecant,
    Secant,
    ReciprocalLog,
    GenCosecant,
    GenSecant,
    GenReciprocalLog,
}

impl FamilyArg {
    fn base(self) -> Family {
        match self {
            FamilyArg::Cosecant | FamilyArg::GenCosecant => Family::Cosecant,
            FamilyArg::Secant | FamilyArg::GenSecant => Family::Secant,
            FamilyArg::ReciprocalLog | FamilyArg::GenReciprocalLog => Family::ReciprocalLog,
        }
    }

    fn generalized(self) -> bool {
        matches!(self, FamilyArg::GenCosecant | FamilyArg::GenSecant | FamilyArg::GenReciprocalLog)
    }
}

#[derive(Args, Debug)]
struct CoeffsArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Highest order.
    #[arg(long)]
    k: u32,
    /// Exponent for the generalized families; omitted means symbolic in rho.
    #[arg(long)]
    rho: Option<String>,
    #[arg(long, value_enum, default_value = "paper")]
    format: TextFormat,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum TableArg {
    /// q(k, w): discrete partition polynomials.
    Q,
    /// p(k, w): partition function polynomials.
    P,
    /// q(k, w, rho).
    QRho,
    /// QP_k(w, b, a).
    Qp,
    /// HP_k(w, x, y).
    Hp,
    /// C_k with Π(1 + C_i z^i) = e^z.
    Exp,
    /// Numbers of discrete partitions by their recurrences.
    Discrete,
}

#[derive(Args, Debug)]
struct PolysArgs {
    #[arg(long, value_enum)]
    table: TableArg,
    /// Highest order.
    #[arg(long)]
    k: u32,
    /// Fix rho in the q-rho table.
    #[arg(long)]
    rho: Option<String>,
    #[arg(long, value_enum, default_value = "paper")]
    format: TextFormat,
}

#[derive(Args, Debug)]
struct BesselArgs {
    /// Highest order (or the order of the zero estimate).
    #[arg(long)]
    k: u32,
    /// Order nu as a rational; omitted means symbolic in nu.
    #[arg(long, allow_hyphen_values = true)]
    nu: Option<String>,
    /// Imaginary part of nu; evaluates in floating point.
    #[arg(long, requires = "nu", allow_hyphen_values = true)]
    nu_im: Option<f64>,
    /// Print the first-zero estimate ±2 sqrt(h_k / h_(k+1)) instead of the table.
    #[arg(long, requires = "nu")]
    zero: bool,
    /// CSV of h_j/h_(j+1) over nu in FROM:TO:STEPS for the orders in --orders.
    #[arg(long, conflicts_with_all = ["nu", "zero"], allow_hyphen_values = true)]
    sweep: Option<String>,
    /// Orders j for --sweep.
    #[arg(long, value_delimiter = ',', default_value = "1,5,8,12,18", requires = "sweep")]
    orders: Vec<u32>,
    #[arg(long, value_enum, default_value = "paper")]
    format: TextFormat,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum WhatArg {
    Ds,
    Es,
    Pfn,
    Dispfnpoly,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum LayoutArg {
    Paper,
    Mathpm,
    Line,
}

#[derive(Args, Debug)]
struct EmitArgs {
    #[arg(long, value_enum)]
    what: WhatArg,
    #[arg(long)]
    k: u32,
    #[arg(long, value_enum)]
    layout: Option<LayoutArg>,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Roll the output file every N terms (needs --output).
    #[arg(long, requires = "output")]
    split: Option<u64>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SinkArg {
    Null,
    File,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ReportFormat {
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// Orders to enumerate (comma separated).
    #[arg(long, value_delimiter = ',', required = true)]
    k: Vec<u32>,
    /// Generators to compare (comma separated).
    #[arg(long, value_enum, value_delimiter = ',', default_value = "brcp,reverse-lex,ascending")]
    orders: Vec<OrderArg>,
    #[arg(long, value_enum, default_value = "null")]
    sink: SinkArg,
    /// Listing file for --sink file (default: a file in the temporary directory).
    #[arg(long)]
    output: Option<PathBuf>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: ReportFormat,
}

/// Parse `argv` (program name first), run the command, and return the exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(()) => EXIT_OK,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e @ CliError::Usage(_)) => {
            eprintln!("error: {e}\n\nFor more information, try '--help'.");
            EXIT_USAGE
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_FAILURE
        }
    }
}

fn threads_for(cli: &Cli, allowed: bool, what: &str) -> CliResult<usize> {
    match cli.threads {
        None => Ok(1),
        Some(0) => usage("--threads must be at least 1"),
        Some(_) if !allowed => usage(format!("--threads has no effect {what}")),
        Some(t) => Ok(t),
    }
}

fn execute(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Partitions(a) => {
            let threads = threads_for(cli, a.order == OrderArg::Brcp, "outside BRCP order")?;
            partitions(a, threads)
        }
        Command::Count(a) => {
            let route = count_route(a)?;
            let threads = threads_for(cli, route == CountRoute::Enumerate, "unless counting by enumeration")?;
            count(a, route, threads)
        }
        Command::Coeffs(a) => {
            let threads = threads_for(cli, true, "")?;
            coeffs(a, threads)
        }
        Command::Polys(a) => {
            threads_for(cli, false, "for polys")?;
            polys(a)
        }
        Command::Bessel(a) => {
            threads_for(cli, false, "for bessel")?;
            bessel(a)
        }
        Command::EmitSymbolic(a) => {
            threads_for(cli, false, "for emit-symbolic")?;
            emit_symbolic(a)
        }
        Command::Bench(a) => {
            threads_for(cli, false, "for bench")?;
            run_bench(a)
        }
    }
}

fn partitions(a: &PartitionsArgs, threads: usize) -> CliResult {
    let class = a.class.build()?;
    let listing = match (a.conjugate, a.format) {
        (true, _) => Listing::Transpose,
        (false, TextFormat::Paper) => Listing::Partgen,
        (false, TextFormat::Json) => Listing::Json,
    };
    let mut out = Sink::open(a.output.as_deref(), a.split)?;
    let mut index = 0u64;
    let mut err: Option<io::Error> = None;
    let mut emit_line = |out: &mut Sink, body: &str| {
        index += 1;
        if err.is_none() {
            let r = writeln!(out, "{}", listing.line(index, body)).and_then(|_| out.end_term());
            if let Err(e) = r {
                err = Some(e);
            }
        }
    };
    if threads > 1 {
        parallel::render_ordered(a.k, &class, threads, |p| listing.body(p), |body| emit_line(&mut out, &body));
    } else {
        enumerate_class(a.k, &class, a.order.into(), |p| emit_line(&mut out, &listing.body(p)));
    }
    if let Some(e) = err {
        return Err(e.into());
    }
    out.flush()?;
    Ok(())
}

fn count_route(a: &CountArgs) -> CliResult<CountRoute> {
    let unconstrained = a.class.is_unconstrained();
    match a.route {
        None if unconstrained || a.class.is_distinct_only() => Ok(CountRoute::Recurrence),
        None => Ok(CountRoute::Enumerate),
        Some(CountRoute::Recurrence) if !(unconstrained || a.class.is_distinct_only()) => {
            usage("--route recurrence supports all partitions or --distinct alone")
        }
        Some(r @ (CountRoute::Pentagonal | CountRoute::Gamma)) if !unconstrained => {
            usage(format!("--route {} counts all partitions; drop the class flags", route_name(r)))
        }
        Some(r) => Ok(r),
    }
}

fn route_name(r: CountRoute) -> &'static str {
    match r {
        CountRoute::Recurrence => "recurrence",
        CountRoute::Enumerate => "enumerate",
        CountRoute::Pentagonal => "pentagonal",
        CountRoute::Gamma => "gamma",
    }
}

fn count_one(
    k: u32,
    class: &ClassArgs,
    built: &PartitionClass,
    route: CountRoute,
    threads: usize,
) -> CliResult<BigInt> {
    Ok(match route {
        CountRoute::Recurrence if class.distinct => genfuncs::discrete_count_recurrence(k),
        CountRoute::Recurrence => cache::partition_number(k),
        CountRoute::Enumerate => BigInt::from(parallel::count(k, built, threads)),
        CountRoute::Pentagonal => genfuncs::p_from_q(k),
        CountRoute::Gamma => genfuncs::p_from_gamma(k)?,
    })
}

#[derive(Serialize)]
struct SeriesRow {
    k: u32,
    count: String,
    total: String,
    ratio: f64,
}

fn count(a: &CountArgs, route: CountRoute, threads: usize) -> CliResult {
    let class = a.class.build()?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    if a.series {
        let mut w = csv::Writer::from_writer(out);
        for k in 1..=a.k {
            let c = count_one(k, &a.class, &class, route, threads)?;
            let total = cache::partition_number(k);
            let ratio = to_f64(&Rational::new(c.clone(), total.clone()));
            w.serialize(SeriesRow { k, count: c.to_string(), total: total.to_string(), ratio })
                .map_err(io::Error::other)?;
        }
        w.flush()?;
        return Ok(());
    }
    let c = count_one(a.k, &a.class, &class, route, threads)?.to_string();
    writeln!(out, "{}", if a.grouped { grouped(&c) } else { c })?;
    Ok(())
}

fn parse_rational_arg(flag: &str, text: &str) -> CliResult<Rational> {
    parse_rational(text).or_else(|_| usage(format!("{flag} expects a rational such as 3 or -1/3, got {text:?}")))
}

#[derive(Serialize)]
struct ValueRow {
    k: usize,
    value: String,
}

fn write_values<W: Write>(out: &mut W, format: TextFormat, values: impl IntoIterator<Item = String>) -> io::Result<()> {
    for (k, v) in values.into_iter().enumerate() {
        match format {
            TextFormat::Paper => writeln!(out, "{k}: {v}")?,
            TextFormat::Json => {
                let row = serde_json::to_string(&ValueRow { k, value: v }).expect("plain struct serializes");
                writeln!(out, "{row}")?
            }
        }
    }
    Ok(())
}

fn coeffs(a: &CoeffsArgs, threads: usize) -> CliResult {
    if a.rho.is_some() && !a.family.generalized() {
        return usage("--rho applies only to the gen-* families");
    }
    let kmax = a.k as usize;
    let base = parallel::expand(&a.family.base().spec(kmax), threads);
    let values: Vec<String> = if !a.family.generalized() {
        base.iter().map(|x| x.to_string()).collect()
    } else if let Some(r) = &a.rho {
        let rho = parse_rational_arg("--rho", r)?;
        expand_power(&base, &rho)?.iter().map(|x| x.to_string()).collect()
    } else {
        let rho = partmeth_core::algebra::Poly::x(sequences::RHO);
        let lifted: Vec<_> =
            base.iter().map(|x| partmeth_core::algebra::Poly::constant(sequences::RHO, x.clone())).collect();
        expand_power(&lifted, &rho)?.iter().map(|x| x.render()).collect()
    };
    let stdout = io::stdout();
    write_values(&mut stdout.lock(), a.format, values)?;
    Ok(())
}

fn polys(a: &PolysArgs) -> CliResult {
    if a.rho.is_some() && a.table != TableArg::QRho {
        return usage("--rho applies only to --table q-rho");
    }
    let k = a.k;
    let kmax = k as usize;
    let values: Vec<String> = match a.table {
        TableArg::Q => (0..=k).map(|j| genfuncs::q_poly(j).render()).collect(),
        TableArg::P => (0..=k).map(|j| genfuncs::p_poly(j).render()).collect(),
        TableArg::QRho => match &a.rho {
            Some(r) => {
                let rho = parse_rational_arg("--rho", r)?;
                genfuncs::q_rho_at(kmax, &rho).iter().map(|p| p.render()).collect()
            }
            None => genfuncs::q_rho(kmax).iter().map(|p| p.render()).collect(),
        },
        TableArg::Qp => genfuncs::qp_table(kmax).iter().map(|p| p.render()).collect(),
        TableArg::Hp => genfuncs::hp_table(kmax).iter().map(|p| p.render()).collect(),
        TableArg::Exp => {
            // Indexed from 1; slot 0 holds the constant term of the product.
            let mut v = vec!["1".to_string()];
            v.extend(genfuncs::exp_product_c(kmax).iter().map(|c| c.to_string()));
            v
        }
        TableArg::Discrete => genfuncs::discrete_counts(kmax).iter().map(|c| c.to_string()).collect(),
    };
    let stdout = io::stdout();
    write_values(&mut stdout.lock(), a.format, values)?;
    Ok(())
}

#[derive(Serialize)]
struct ZeroRow {
    k: u32,
    re: f64,
    im: f64,
}

#[derive(Serialize)]
struct SweepRow {
    nu: f64,
    k: u32,
    ratio: f64,
}

fn parse_sweep(text: &str) -> CliResult<(f64, f64, u32)> {
    let parts: Vec<&str> = text.split(':').collect();
    let bad = || usage(format!("--sweep expects FROM:TO:STEPS, got {text:?}"));
    if parts.len() != 3 {
        return bad();
    }
    match (parts[0].parse::<f64>(), parts[1].parse::<f64>(), parts[2].parse::<u32>()) {
        (Ok(a), Ok(b), Ok(n)) if n >= 1 && a.is_finite() && b.is_finite() => Ok((a, b, n)),
        _ => bad(),
    }
}

fn bessel(a: &BesselArgs) -> CliResult {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let kmax = a.k as usize;
    if let Some(s) = &a.sweep {
        let (from, to, steps) = parse_sweep(s)?;
        let top = a.orders.iter().copied().max().unwrap_or(0) as usize;
        let mut w = csv::Writer::from_writer(out);
        for i in 0..=steps {
            let nu = from + (to - from) * f64::from(i) / f64::from(steps);
            // Negative integers are poles of every h_j; those points are skipped.
            let Ok(h) = sequences::bessel_h_complex(Complex64::new(nu, 0.0), top + 1) else { continue };
            for &j in &a.orders {
                let ratio = (h[j as usize] / h[j as usize + 1]).re;
                w.serialize(SweepRow { nu, k: j, ratio }).map_err(io::Error::other)?;
            }
        }
        w.flush()?;
        return Ok(());
    }
    let Some(nu_text) = &a.nu else {
        let values = sequences::bessel_h_table(kmax).iter().map(|h| h.render()).collect::<Vec<_>>();
        write_values(&mut out, a.format, values)?;
        return Ok(());
    };
    let nu = parse_rational_arg("--nu", nu_text)?;
    let complex_nu = a.nu_im.map(|im| Complex64::new(to_f64(&nu), im));
    if a.zero {
        let (z, _) = match complex_nu {
            Some(c) => sequences::bessel_zero_estimate(c, kmax)?,
            None => sequences::bessel_zero_estimate_exact(&nu, kmax)?,
        };
        match a.format {
            TextFormat::Paper => writeln!(out, "{} {}", z.re, z.im)?,
            TextFormat::Json => {
                let row = serde_json::to_string(&ZeroRow { k: a.k, re: z.re, im: z.im }).expect("serializes");
                writeln!(out, "{row}")?
            }
        }
        return Ok(());
    }
    let values: Vec<String> = match complex_nu {
        Some(c) => sequences::bessel_h_complex(c, kmax)?.iter().map(|z| z.to_string()).collect(),
        None => sequences::bessel_h_rational(&nu, kmax)?.iter().map(|x| x.to_string()).collect(),
    };
    write_values(&mut out, a.format, values)?;
    Ok(())
}

fn emit_symbolic(a: &EmitArgs) -> CliResult {
    if a.k == 0 {
        return usage("--k must be at least 1");
    }
    let what = match a.what {
        WhatArg::Ds => What::Ds,
        WhatArg::Es => What::Es,
        WhatArg::Pfn => What::Pfn,
        WhatArg::Dispfnpoly => What::Dispfnpoly,
    };
    let layout = match a.layout {
        None => what.default_layout(),
        Some(LayoutArg::Paper) => Layout::Paper,
        Some(LayoutArg::Mathpm) => Layout::Mathpm,
        Some(LayoutArg::Line) => Layout::Line,
    };
    let mut out = Sink::open(a.output.as_deref(), a.split)?;
    emit::emit(what, a.k, layout, &mut out)?;
    out.flush()?;
    Ok(())
}

fn run_bench(a: &BenchArgs) -> CliResult {
    let orders: Vec<Order> = a.orders.iter().map(|&o| o.into()).collect();
    let sink = match a.sink {
        SinkArg::Null => BenchSink::Null,
        SinkArg::File => BenchSink::File,
    };
    if a.output.is_some() && sink == BenchSink::Null {
        return usage("--output applies only to --sink file");
    }
    let scratch;
    let listing: Option<&Path> = match (sink, &a.output) {
        (BenchSink::File, Some(p)) => Some(p),
        (BenchSink::File, None) => {
            scratch = std::env::temp_dir().join(format!("partmeth-bench-{}.txt", std::process::id()));
            Some(&scratch)
        }
        (BenchSink::Null, _) => None,
    };
    let report = bench::run(&a.k, &orders, sink, listing);
    if let (BenchSink::File, None, Some(p)) = (sink, &a.output, listing) {
        let _ = std::fs::remove_file(p);
    }
    let report = report?;
    let mut dest: Box<dyn Write> = match &a.report {
        Some(p) => Box::new(io::BufWriter::new(std::fs::File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    };
    match a.format {
        ReportFormat::Csv => report.write_csv(&mut dest)?,
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut dest, &report).map_err(io::Error::other)?;
            writeln!(dest)?;
        }
    }
    dest.flush()?;
    if !report.consistent() {
        return Err(CliError::Compute(format!("generators disagree on the count at k = {:?}", report.mismatches)));
    }
    Ok(())
}
