//! Command-line driver: input parsing, the `normalize` command and its
//! output formats.

mod document;
mod parser;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::coeffs::{Field, Fp, PrimeModulus, Rational};
use crate::error::Error;
use crate::groebner::Ideal;
use crate::idealops::{radical, RadicalStrategy};
use crate::normalize::{normalize, verify_result, AffinePresentation, NormalizeOptions};
use crate::polyring::{MonomialOrder, PolyRing};

pub use document::{
    emit_json, AdjoinedEntry, ComponentEntry, FieldSpec, InputDocument, IntPoly, OptionsEcho,
    ResultDocument, SCHEMA,
};
pub use parser::parse_input;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_ALGORITHM: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "closure-kit",
    version,
    about = "Normalization of affine rings over QQ and GF(p)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the normalization of the ring described in FILE.
    Normalize(NormalizeArgs),
}

#[derive(Args, Debug)]
struct NormalizeArgs {
    file: PathBuf,
    #[arg(long, value_enum, default_value_t = OrderArg::Degrevlex)]
    order: OrderArg,
    #[arg(long, value_enum, default_value_t = RadicalArg::Auto)]
    radical: RadicalArg,
    #[arg(long = "max-iter", default_value_t = 32)]
    max_iter: usize,
    /// Print the result as JSON on stdout.
    #[arg(long)]
    json: bool,
    /// Check the result; exit 4 on failure.
    #[arg(long)]
    verify: bool,
    /// Check that the input ideal is radical; exit 4 if not.
    #[arg(long)]
    check: bool,
    /// Include the event trace.
    #[arg(long)]
    trace: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    Lex,
    Degrevlex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RadicalArg {
    Auto,
    Zerodim,
    General,
}

impl OrderArg {
    fn order(self) -> MonomialOrder {
        match self {
            OrderArg::Lex => MonomialOrder::Lex,
            OrderArg::Degrevlex => MonomialOrder::DegRevLex,
        }
    }

    fn name(self) -> &'static str {
        match self {
            OrderArg::Lex => "lex",
            OrderArg::Degrevlex => "degrevlex",
        }
    }
}

impl RadicalArg {
    fn strategy(self) -> RadicalStrategy {
        match self {
            RadicalArg::Auto => RadicalStrategy::Auto,
            RadicalArg::Zerodim => RadicalStrategy::ZeroDim,
            RadicalArg::General => RadicalStrategy::General,
        }
    }
}

/// Failure of a run: exit code and message for stderr.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Syntax { .. } | Error::UndeclaredVariable { .. } | Error::NonPrimeModulus(_) => {
            EXIT_PARSE
        }
        Error::VerificationFailed { .. } => EXIT_VERIFY,
        _ => EXIT_ALGORITHM,
    }
}

fn algorithm_failure(e: Error) -> Failure {
    let mut message = format!("error: {e}");
    if let Error::IterationLimitExceeded { trace, .. } = &e {
        for line in trace {
            message.push_str("\n  ");
            message.push_str(line);
        }
    }
    Failure::new(exit_code(&e), message)
}

/// Runs the tool with `args` (including the program name), writing to the
/// given streams. Returns the exit code.
pub fn run_cli_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let Command::Normalize(args) = cli.command;
    match run_normalize(&args) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(f) => {
            let _ = writeln!(err, "{}", f.message);
            f.code
        }
    }
}

/// Runs the tool on the process streams.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_cli_with(args, &mut stdout.lock(), &mut stderr.lock())
}

fn run_normalize(args: &NormalizeArgs) -> Result<String, Failure> {
    let path = args.file.display().to_string();
    let text = std::fs::read_to_string(&args.file)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("error: cannot read {path}: {e}")))?;
    let doc = parse_input(&text).map_err(|e| {
        let message = match &e {
            Error::Syntax { line, column, .. } | Error::UndeclaredVariable { line, column, .. } => {
                format!("{path}:{line}:{column}: error: {e}")
            }
            _ => format!("{path}: error: {e}"),
        };
        Failure::new(exit_code(&e), message)
    })?;
    match doc.field {
        FieldSpec::Rational => run_field::<Rational>((), &doc, args),
        FieldSpec::Prime(p) => {
            let modulus = PrimeModulus::new(p)
                .map_err(|e| Failure::new(EXIT_PARSE, format!("{path}: error: {e}")))?;
            run_field::<Fp>(modulus, &doc, args)
        }
    }
}

fn run_field<F: Field>(
    ctx: F::Ctx,
    doc: &InputDocument,
    args: &NormalizeArgs,
) -> Result<String, Failure> {
    let ring = PolyRing::<F>::new(ctx, doc.variables.clone(), args.order.order())
        .map_err(algorithm_failure)?;
    let defining = Ideal::new(&ring, doc.polynomials(&ring));
    let r0 = AffinePresentation::new(defining.clone()).map_err(algorithm_failure)?;
    let strategy = args.radical.strategy();

    if args.check {
        let rad = radical(&defining, strategy).map_err(algorithm_failure)?;
        if let Some(g) = rad.basis().iter().find(|g| !defining.contains(g)) {
            return Err(Failure::new(
                EXIT_VERIFY,
                format!("check failed: the input ideal is not radical ({g} is in its radical)"),
            ));
        }
    }

    let opts = NormalizeOptions {
        max_iterations: args.max_iter,
        radical_strategy: strategy,
    };
    let result = normalize(&r0, &opts).map_err(algorithm_failure)?;
    let report = if args.verify {
        Some(verify_result(&r0, &result).map_err(algorithm_failure)?)
    } else {
        None
    };

    let echo = OptionsEcho {
        field: doc.field.to_string(),
        order: args.order.name().into(),
        radical: strategy.name().into(),
        max_iter: args.max_iter,
    };
    let rendered = ResultDocument::new(&result, echo, args.trace);
    if args.json {
        return Ok(format!("{}\n", emit_json(&rendered)));
    }

    let mut s = String::new();
    let total = rendered.components.len();
    for (k, c) in rendered.components.iter().enumerate() {
        s.push_str(&format!(
            "component {} of {total}: {} Hom evaluations\n",
            k + 1,
            c.iterations
        ));
        s.push_str(&format!(
            "  ring {}[{}]\n",
            doc.field,
            c.variables.join(", ")
        ));
        s.push_str("  relations:\n");
        for r in &c.relations {
            s.push_str(&format!("    {r}\n"));
        }
        for a in &c.adjoined {
            s.push_str(&format!(
                "  {} = ({}) / ({})  [level {}]\n",
                a.name, a.numerator, a.denominator, a.level
            ));
        }
    }
    if args.trace {
        s.push_str("trace:\n");
        for line in &rendered.trace {
            s.push_str(&format!("  {line}\n"));
        }
    }
    if let Some(r) = report {
        let checks: Vec<String> = r.checks.iter().map(|c| c.to_string()).collect();
        s.push_str(&format!("verified: checks {} passed\n", checks.join(", ")));
    }
    Ok(s)
}
