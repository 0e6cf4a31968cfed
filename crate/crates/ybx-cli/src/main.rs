//! `ybx` — solutions of the set-theoretic Yang-Baxter equation on the
//! command line.
//!
//! Exit codes: 0 success, 1 falsified mathematical check (a witness is
//! printed), 2 usage or parse error, 3 resource guard tripped.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ybx_core::catalog;
use ybx_core::rewrite;
use ybx_core::solution::{Letter, Solution, ValidationReport};
use ybx_core::veronese::{self, IndexBinomial, VeroneseError};
use ybx_core::word::{self, Limits};
use ybx_core::Word;

/// Environment variable overriding the orbit-size guard.
const GUARD_ENV: &str = "YBX_GUARD_LIMIT";

#[derive(Parser)]
#[command(name = "ybx", version, about = "Set-theoretic Yang-Baxter solutions: validation, normal forms, Groebner bases, Veronese presentations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct InputArgs {
    /// Solution file (JSON), or `-` for stdin.
    #[arg(long, short = 'i', default_value = "-")]
    input: String,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Check the solution axioms and report every flag.
    Validate {
        #[command(flatten)]
        io: InputArgs,
    },
    /// Orbit table of all words of one length, with the normal monomials.
    Orbits {
        #[command(flatten)]
        io: InputArgs,
        /// Word length to enumerate.
        #[arg(long)]
        length: usize,
    },
    /// The defining quadratic relations of the Yang-Baxter algebra.
    Present {
        #[command(flatten)]
        io: InputArgs,
    },
    /// Degree-bounded reduced Groebner basis of the defining ideal.
    Groebner {
        #[command(flatten)]
        io: InputArgs,
        /// Resolve overlap ambiguities through this degree.
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// PBW status of the given enumeration, the skew-polynomial shape
    /// test, and the ordered-monomial gate.
    Pbw {
        #[command(flatten)]
        io: InputArgs,
        /// Also search all relabelings for PBW generators.
        #[arg(long)]
        search: bool,
    },
    /// Full presentation of the d-Veronese subalgebra with index sets and
    /// cardinality checks.
    Veronese {
        #[command(flatten)]
        io: InputArgs,
        /// Veronese degree (at least 2).
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        d: u32,
    },
    /// Generators of the kernel of the Veronese map.
    Kernel {
        #[command(flatten)]
        io: InputArgs,
        /// Veronese degree (at least 2).
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        d: u32,
    },
    /// Run every applicable Veronese-level check; exit 0 iff all pass.
    Check {
        #[command(flatten)]
        io: InputArgs,
        /// Veronese degree (at least 2).
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        d: u32,
    },
    /// Enumerate all solutions of one order.
    Enumerate {
        /// Order of the set (1..=4).
        #[arg(long)]
        n: usize,
        /// Quotient by generator relabeling.
        #[arg(long)]
        up_to_iso: bool,
        /// Output format.
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum Failure {
    /// A mathematical claim did not hold; carries the witness text.
    Falsified(String),
    /// Input could not be read or parsed, or arguments are unusable.
    Usage(String),
    /// An orbit or enumeration guard tripped.
    Guard(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Falsified(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Guard(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Falsified(m) | Failure::Usage(m) | Failure::Guard(m) => m,
        }
    }
}

impl From<VeroneseError> for Failure {
    fn from(err: VeroneseError) -> Self {
        match err {
            VeroneseError::Guard(g) => Failure::Guard(g.to_string()),
            VeroneseError::BadDegree { .. } => Failure::Usage(err.to_string()),
            other => Failure::Falsified(other.to_string()),
        }
    }
}

impl From<word::GuardExceeded> for Failure {
    fn from(err: word::GuardExceeded) -> Self {
        Failure::Guard(err.to_string())
    }
}

fn main() -> ExitCode {
    // die quietly when the reader of a pipe goes away, like other unix tools
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

fn limits() -> Result<Limits, Failure> {
    match std::env::var(GUARD_ENV) {
        Ok(raw) => raw
            .parse::<usize>()
            .map(Limits::new)
            .map_err(|_| Failure::Usage(format!("{GUARD_ENV} must be an integer, got {raw:?}"))),
        Err(_) => Ok(Limits::default()),
    }
}

fn read_solution(io: &InputArgs) -> Result<Solution, Failure> {
    let text = if io.input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(&io.input)
            .map_err(|e| Failure::Usage(format!("reading {}: {e}", io.input)))?
    };
    catalog::from_json(&text).map_err(|e| Failure::Usage(e.to_string()))
}

fn emit_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("reports serialize"));
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Validate { io } => validate_cmd(&io),
        Command::Orbits { io, length } => orbits_cmd(&io, length),
        Command::Present { io } => present_cmd(&io),
        Command::Groebner { io, max_degree } => groebner_cmd(&io, max_degree),
        Command::Pbw { io, search } => pbw_cmd(&io, search),
        Command::Veronese { io, d } => veronese_cmd(&io, d as usize),
        Command::Kernel { io, d } => kernel_cmd(&io, d as usize),
        Command::Check { io, d } => check_cmd(&io, d as usize),
        Command::Enumerate { n, up_to_iso, format } => enumerate_cmd(n, up_to_iso, format),
    }
}

#[derive(Serialize)]
struct ValidateOut<'a> {
    schema: &'static str,
    n: usize,
    #[serde(flatten)]
    report: &'a ValidationReport,
}

fn validate_cmd(io: &InputArgs) -> Result<(), Failure> {
    let s = read_solution(io)?;
    let report = s.validate();
    match io.format {
        Format::Json => emit_json(&ValidateOut {
            schema: "ybx-validate-v1",
            n: s.order(),
            report: &report,
        }),
        Format::Text => {
            println!("n = {}", s.order());
            println!("involutive:    {}", report.involutive);
            println!("nondegenerate: {}", report.nondegenerate);
            println!("braided:       {}", report.braided);
            println!("square-free:   {}", report.square_free);
            println!("condition O:   {}", report.condition_o);
            println!("is solution:   {}", report.is_solution);
            let fixed: Vec<String> = report
                .fixed_points
                .iter()
                .map(|(a, b)| format!("(x{a},x{b})"))
                .collect();
            println!("fixed points:  {}", fixed.join(" "));
            match &report.permutation {
                Some(f) => println!("permutation solution: f = {f:?}"),
                None => println!("permutation solution: no"),
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct OrbitEntry {
    min: Word,
    size: usize,
    members: Vec<Word>,
}

#[derive(Serialize)]
struct OrbitsOut {
    schema: &'static str,
    length: usize,
    orbit_count: usize,
    normal_monomials: Vec<Word>,
    orbits: Vec<OrbitEntry>,
}

fn orbits_cmd(io: &InputArgs, length: usize) -> Result<(), Failure> {
    let s = read_solution(io)?;
    let limits = limits()?;
    let minima = word::normal_monomials(&s, length, limits)?;
    let orbits: Vec<OrbitEntry> = minima
        .iter()
        .map(|min| {
            word::orbit(&s, min, limits).map(|report| OrbitEntry {
                min: report.min_element,
                size: report.members.len(),
                members: report.members,
            })
        })
        .collect::<Result<_, _>>()?;
    match io.format {
        Format::Json => emit_json(&OrbitsOut {
            schema: "ybx-orbits-v1",
            length,
            orbit_count: orbits.len(),
            normal_monomials: minima,
            orbits,
        }),
        Format::Text => {
            println!(
                "{} orbits on words of length {} (dim A_{} = {})",
                orbits.len(),
                length,
                length,
                orbits.len()
            );
            for entry in &orbits {
                println!("{}  [orbit size {}]", entry.min, entry.size);
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct RelationsOut {
    schema: &'static str,
    n: usize,
    count: usize,
    relations: Vec<rewrite::BinomialRelation>,
}

fn present_cmd(io: &InputArgs) -> Result<(), Failure> {
    let s = read_solution(io)?;
    let relations = rewrite::relations_from_solution(&s);
    match io.format {
        Format::Json => emit_json(&RelationsOut {
            schema: "ybx-relations-v1",
            n: s.order(),
            count: relations.len(),
            relations,
        }),
        Format::Text => {
            for rel in &relations {
                println!("{}", rel.render("x"));
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct GroebnerOut {
    schema: &'static str,
    max_degree: usize,
    complete_up_to: usize,
    confluent: bool,
    reduced: bool,
    rules: Vec<rewrite::BinomialRelation>,
}

fn groebner_cmd(io: &InputArgs, max_degree: usize) -> Result<(), Failure> {
    if max_degree < 2 {
        return Err(Failure::Usage(format!(
            "--max-degree must be at least 2, got {max_degree}"
        )));
    }
    let s = read_solution(io)?;
    let system = rewrite::complete(rewrite::relations_from_solution(&s), max_degree);
    match io.format {
        Format::Json => emit_json(&GroebnerOut {
            schema: "ybx-groebner-v1",
            max_degree: system.max_degree,
            complete_up_to: system.complete_up_to,
            confluent: system.confluent,
            reduced: system.reduced,
            rules: system.rules,
        }),
        Format::Text => {
            for rule in &system.rules {
                println!("{rule}");
            }
            if system.confluent {
                println!("confluent: the rules are a full Groebner basis");
            } else {
                println!(
                    "degree bound reached: confluence confirmed only through degree {}",
                    system.complete_up_to
                );
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct SearchOut {
    searched: bool,
    enumeration: Option<Vec<Letter>>,
}

#[derive(Serialize)]
struct PbwOut {
    schema: &'static str,
    is_pbw: bool,
    is_binomial_skew_polynomial: bool,
    gate: rewrite::OrderedBasisGateReport,
    search: SearchOut,
}

fn pbw_cmd(io: &InputArgs, search: bool) -> Result<(), Failure> {
    let s = read_solution(io)?;
    let limits = limits()?;
    let is_pbw = rewrite::is_pbw(&s, 3);
    let skew = rewrite::is_binomial_skew_polynomial(&s);
    let gate = rewrite::ordered_basis_gate(&s, limits)?;
    let enumeration = if search {
        rewrite::pbw_enumeration_search(&s, 8).map_err(|e| Failure::Usage(e.to_string()))?
    } else {
        None
    };
    match io.format {
        Format::Json => emit_json(&PbwOut {
            schema: "ybx-pbw-v1",
            is_pbw,
            is_binomial_skew_polynomial: skew,
            gate,
            search: SearchOut {
                searched: search,
                enumeration,
            },
        }),
        Format::Text => {
            println!("PBW under given enumeration: {is_pbw}");
            println!("binomial skew polynomial ring: {skew}");
            if gate.applicable {
                println!(
                    "ordered-monomial gate: applicable; square-free = {}, consistent = {}",
                    gate.square_free, gate.consistent
                );
            } else {
                println!("ordered-monomial gate: not applicable (normal basis differs from ordered monomials)");
            }
            if search {
                match &enumeration {
                    Some(f) => println!("PBW enumeration found: {f:?}"),
                    None => println!("no relabeling makes the relations a Groebner basis"),
                }
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct GeneratorOut {
    y: usize,
    w: Word,
}

#[derive(Serialize)]
struct VeroneseOut {
    schema: &'static str,
    d: usize,
    n: usize,
    #[serde(rename = "N")]
    big_n: usize,
    generators: Vec<GeneratorOut>,
    #[serde(rename = "R_a")]
    r_a: Vec<IndexBinomial>,
    #[serde(rename = "R_b")]
    r_b: Vec<IndexBinomial>,
    #[serde(rename = "R_1a")]
    r_1a: Vec<IndexBinomial>,
    kernel: Vec<IndexBinomial>,
    #[serde(rename = "H")]
    h: Vec<(usize, usize)>,
    #[serde(rename = "C")]
    c: Vec<(usize, usize)>,
    #[serde(rename = "MV")]
    mv: Vec<(usize, usize)>,
    cardinalities: veronese::CardinalityReport,
}

fn veronese_cmd(io: &InputArgs, d: usize) -> Result<(), Failure> {
    let s = read_solution(io)?;
    let limits = limits()?;
    let data = veronese::build_veronese(&s, d, limits)?;
    let pres = veronese::presentation_from_data(&s, &data, limits)?;
    let cardinalities = data.cardinality_report();
    match io.format {
        Format::Json => emit_json(&VeroneseOut {
            schema: "ybx-veronese-v1",
            d,
            n: s.order(),
            big_n: data.order(),
            generators: pres
                .generators
                .iter()
                .enumerate()
                .map(|(k, w)| GeneratorOut {
                    y: k + 1,
                    w: w.clone(),
                })
                .collect(),
            r_a: pres.r_a.clone(),
            r_b: pres.r_b.clone(),
            r_1a: pres.r_1a.clone(),
            kernel: pres.kernel_gens.clone(),
            h: data.h_set().to_vec(),
            c: data.c_set().to_vec(),
            mv: data.mv_set().to_vec(),
            cardinalities: cardinalities.clone(),
        }),
        Format::Text => {
            println!("d-Veronese presentation at d = {d}: N = {}", data.order());
            println!("generators:");
            for (k, w) in pres.generators.iter().enumerate() {
                println!("  w{} = {}", k + 1, w);
            }
            println!("R_a ({} relations):", pres.r_a.len());
            for rel in &pres.r_a {
                println!("  {}", rel.render("w"));
            }
            println!("R_b ({} relations):", pres.r_b.len());
            for rel in &pres.r_b {
                println!("  {}", rel.render("w"));
            }
            println!("R_1a ({} relations):", pres.r_1a.len());
            for rel in &pres.r_1a {
                println!("  {}", rel.render("w"));
            }
            println!("kernel generators ({}):", pres.kernel_gens.len());
            for rel in &pres.kernel_gens {
                println!("  {}", rel.render("y"));
            }
            println!(
                "cardinalities: |H| = {} (expect {}), |P| = {} (expect {}), |C| = {} (expect {}), |MV| = {} (expect {}) => {}",
                cardinalities.h,
                cardinalities.expected_h,
                cardinalities.p,
                cardinalities.expected_p,
                cardinalities.c,
                cardinalities.expected_c,
                cardinalities.mv,
                cardinalities.expected_mv,
                if cardinalities.pass { "ok" } else { "MISMATCH" }
            );
        }
    }
    if !cardinalities.pass {
        return Err(Failure::Falsified(format!(
            "index-set cardinalities disagree with closed forms: {cardinalities:?}"
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct KernelOut {
    schema: &'static str,
    d: usize,
    count: usize,
    kernel: Vec<IndexBinomial>,
}

fn kernel_cmd(io: &InputArgs, d: usize) -> Result<(), Failure> {
    let s = read_solution(io)?;
    let pres = veronese::presentation(&s, d, limits()?)?;
    match io.format {
        Format::Json => emit_json(&KernelOut {
            schema: "ybx-kernel-v1",
            d,
            count: pres.kernel_gens.len(),
            kernel: pres.kernel_gens,
        }),
        Format::Text => {
            for rel in &pres.kernel_gens {
                println!("{}", rel.render("y"));
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct CheckOut {
    schema: &'static str,
    d: usize,
    veronese_map: veronese::VeroneseMapReport,
    square_free_veronese: veronese::SquareFreeVeroneseCheck,
    permutation_veronese: veronese::PermutationVeroneseCheck,
    hilbert: veronese::HilbertReport,
    pass: bool,
}

fn check_cmd(io: &InputArgs, d: usize) -> Result<(), Failure> {
    let s = read_solution(io)?;
    let limits = limits()?;
    let veronese_map = veronese::verify_veronese_map(&s, d, limits)?;
    let square_free = veronese::dveronese_square_free_check(&s, d, limits)?;
    let permutation = veronese::permutation_veronese_check(&s, d, limits)?;
    let degrees: Vec<usize> = (1..=2 * d).collect();
    let hilbert = veronese::hilbert_check(&s, &degrees, limits)?;
    let pass =
        veronese_map.pass && square_free.pass() && permutation.pass() && hilbert.pass;
    match io.format {
        Format::Json => emit_json(&CheckOut {
            schema: "ybx-check-v1",
            d,
            veronese_map: veronese_map.clone(),
            square_free_veronese: square_free.clone(),
            permutation_veronese: permutation.clone(),
            hilbert: hilbert.clone(),
            pass,
        }),
        Format::Text => {
            println!(
                "veronese map: {} ({} relation images, kernel {} of expected {})",
                if veronese_map.pass { "ok" } else { "FAIL" },
                veronese_map.relation_images_checked,
                veronese_map.kernel_size,
                veronese_map.expected_kernel_size,
            );
            for failure in &veronese_map.failures {
                println!(
                    "  witness: {} has images {} vs {}",
                    failure.relation.render("y"),
                    failure.lhs_normal_form,
                    failure.rhs_normal_form
                );
            }
            match &square_free {
                veronese::SquareFreeVeroneseCheck::NotApplicable => {
                    println!("square-free veronese: not applicable (input not square-free)")
                }
                veronese::SquareFreeVeroneseCheck::Checked {
                    veronese_square_free,
                    input_trivial,
                    consistent_with_theorem,
                } => println!(
                    "square-free veronese: {} (veronese square-free = {veronese_square_free}, input trivial = {input_trivial})",
                    if *consistent_with_theorem { "ok" } else { "FAIL" }
                ),
            }
            match &permutation {
                veronese::PermutationVeroneseCheck::NotApplicable => {
                    println!("permutation veronese: not applicable (not a permutation solution)")
                }
                veronese::PermutationVeroneseCheck::Checked {
                    permutation_order,
                    rho_matches_induced_permutation,
                    order_divides_d,
                    rho_trivial,
                    pass,
                } => println!(
                    "permutation veronese: {} (ord f = {permutation_order}, induced match = {rho_matches_induced_permutation}, ord|d = {order_divides_d}, trivial = {rho_trivial})",
                    if *pass { "ok" } else { "FAIL" }
                ),
            }
            println!(
                "hilbert function: {}",
                if hilbert.pass { "ok" } else { "FAIL" }
            );
            for entry in &hilbert.entries {
                println!(
                    "  dim A_{} = {} (expect {})",
                    entry.degree, entry.count, entry.expected
                );
            }
            println!("overall: {}", if pass { "ok" } else { "FAIL" });
        }
    }
    if pass {
        Ok(())
    } else {
        Err(Failure::Falsified(format!(
            "checks failed at d = {d}; see report above"
        )))
    }
}

#[derive(Serialize)]
struct EnumerateOut {
    schema: &'static str,
    n: usize,
    count: usize,
    up_to_iso: bool,
    solutions: Vec<serde_json::Value>,
}

fn enumerate_cmd(n: usize, up_to_iso: bool, format: Format) -> Result<(), Failure> {
    let mut solutions =
        catalog::enumerate_solutions(n).map_err(|e| Failure::Usage(e.to_string()))?;
    if up_to_iso {
        solutions = catalog::canonical_representatives(&solutions);
    }
    match format {
        Format::Json => emit_json(&EnumerateOut {
            schema: "ybx-catalog-v1",
            n,
            count: solutions.len(),
            up_to_iso,
            solutions: solutions
                .iter()
                .map(|s| {
                    serde_json::from_str(&catalog::to_json(s)).expect("solution files round-trip")
                })
                .collect(),
        }),
        Format::Text => {
            println!(
                "{} solution(s) of order {}{}",
                solutions.len(),
                n,
                if up_to_iso { " up to relabeling" } else { "" }
            );
            for s in &solutions {
                println!("{}", catalog::to_json(s));
            }
        }
    }
    Ok(())
}
