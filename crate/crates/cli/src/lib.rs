//! Command-line front end. [`run`] parses an argument vector, dispatches to
//! `octa_core` and returns the exit status with the text for each stream.
//!
//! Exit codes: 0 on success, 1 on a domain error (reported as a JSON object
//! naming the offending field), 2 on a usage error.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use octa_core::bn_irreps::bn_character_table;
use octa_core::classification::classify;
use octa_core::elements::GroupElement;
use octa_core::induced_states::{
    asymptotic_character_estimate, canonical_coset_involution, gram_psd_check, induced_state,
    GramMode, GramVerdict, RepSpec,
};
use octa_core::numeric_lab::{
    example1_series, example3_defect_series, example3_state, BernoulliParam,
};
use octa_core::random::{random_sparse_element, seeded};
use octa_core::rational::{format_rational, parse_rational, Rational};
use octa_core::thoma::{character_value, ThomaSpec};

/// Largest rank whose table verification runs without `OCTA_SLOW_TESTS=1`.
pub const FAST_VERIFY_LIMIT: usize = 4;

#[derive(Debug, Parser)]
#[command(name = "octa", version, about = "Characters and states of the hyperoctahedral groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an indecomposable character at an element.
    CharEval {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// Print the irreducible character table of B_n.
    BnTable {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Check both orthogonality relations before printing.
        #[arg(long)]
        verify: bool,
    },
    /// Canonical involution representing the coset of an element.
    CosetRep {
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        #[arg(long)]
        k: usize,
    },
    /// Evaluate the induced state of a representation spec at an element.
    StateEval {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        /// Evaluate far-shifted copies instead, giving the asymptotic character.
        #[arg(long)]
        asymptotic: bool,
    },
    /// Decide quasi-equivalence of two representation specs.
    Classify {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Test positive semidefiniteness of a Gram matrix.
    ///
    /// A Thoma spec file tests its character; a representation spec file
    /// tests its induced state.
    GramCheck {
        #[arg(long)]
        spec: PathBuf,
        /// Elements to use; mutually exclusive with --random.
        #[arg(long, num_args = 1.., allow_hyphen_values = true, conflicts_with = "random")]
        elements: Vec<String>,
        /// Draw this many random elements instead.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest point moved by random elements.
        #[arg(long, default_value_t = 6)]
        max_point: usize,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
    },
    /// Numerical series from the two truncated example representations.
    Lab {
        #[command(subcommand)]
        experiment: Lab,
    },
}

#[derive(Debug, Subcommand)]
enum Lab {
    /// `(m, <T(1^[1,m]) e_j, e_j>)` for m = 0..=max-m.
    Example1 {
        #[arg(long)]
        f_index: usize,
        #[arg(long, default_value_t = 16)]
        max_m: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// `(n, defect)` of the Bernoulli representation for n = 1..=max-n.
    Example3 {
        #[arg(long)]
        p: String,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// State of the Bernoulli representation at one element.
    Example3State {
        #[arg(long)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        #[arg(long)]
        m: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Approximate,
    Auto,
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A domain error attributed to one input field.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Failure {
    field: String,
    message: String,
}

impl Failure {
    fn new(field: &str, message: impl ToString) -> Self {
        Self {
            field: field.to_string(),
            message: message.to_string(),
        }
    }

    fn to_json(&self) -> Value {
        json!({"error": {"field": self.field, "message": self.message}})
    }
}

fn blame<E: ToString>(field: &'static str) -> impl FnOnce(E) -> Failure {
    move |e| Failure::new(field, e)
}

pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code: 2, stdout: String::new(), stderr: text }
            } else {
                // --help and --version
                Output { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(stdout) => Output { code: 0, stdout, stderr: String::new() },
        Err(f) => Output {
            code: 1,
            stdout: format!("{}\n", f.to_json()),
            stderr: format!("error in {}: {}\n", f.field, f.message),
        },
    }
}

fn line(v: Value) -> String {
    // serde_json's default map is ordered, so keys come out sorted
    format!("{v}\n")
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path, field: &'static str) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(field, format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(blame(field))
}

fn parse_element(text: &str, field: &'static str) -> Result<GroupElement, Failure> {
    text.parse().map_err(blame(field))
}

fn rat(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

fn dispatch(command: Command) -> Result<String, Failure> {
    match command {
        Command::CharEval { spec, element } => {
            let spec: ThomaSpec = read_json(&spec, "spec")?;
            let g = parse_element(&element, "element")?;
            Ok(line(json!({"value": rat(&character_value(&spec, &g))})))
        }
        Command::BnTable { n, format, verify } => bn_table(n, format, verify),
        Command::CosetRep { element, k } => {
            let g = parse_element(&element, "element")?;
            let hat = canonical_coset_involution(&g.perm, k);
            let rep = GroupElement::from_perm(hat.to_permutation());
            Ok(line(json!({
                "k": k,
                "pairs": hat.pairs,
                "representative": rep.to_string(),
            })))
        }
        Command::StateEval { spec, element, asymptotic } => {
            let spec: RepSpec = read_json(&spec, "spec")?;
            let g = parse_element(&element, "element")?;
            let value = if asymptotic {
                asymptotic_character_estimate(&spec, &g)
            } else {
                induced_state(&spec, &g)
            };
            Ok(line(json!({"value": rat(&value)})))
        }
        Command::Classify { a, b } => {
            let a: RepSpec = read_json(&a, "a")?;
            let b: RepSpec = read_json(&b, "b")?;
            Ok(line(serde_json::to_value(classify(&a, &b)).map_err(blame("verdict"))?))
        }
        Command::GramCheck { spec, elements, random, seed, max_point, mode } => {
            let elems = match random {
                Some(count) => {
                    let mut rng = seeded(seed);
                    (0..count).map(|_| random_sparse_element(&mut rng, max_point)).collect()
                }
                None if elements.is_empty() => {
                    return Err(Failure::new("elements", "give --elements or --random"))
                }
                None => elements
                    .iter()
                    .map(|e| parse_element(e, "elements"))
                    .collect::<Result<Vec<_>, _>>()?,
            };
            gram_check(&spec, &elems, mode)
        }
        Command::Lab { experiment } => lab(experiment),
    }
}

fn bn_table(n: usize, format: Format, verify: bool) -> Result<String, Failure> {
    if verify && n > FAST_VERIFY_LIMIT && std::env::var("OCTA_SLOW_TESTS").as_deref() != Ok("1") {
        return Err(Failure::new(
            "n",
            format!("verifying n > {FAST_VERIFY_LIMIT} requires OCTA_SLOW_TESTS=1"),
        ));
    }
    let table = bn_character_table(n).map_err(blame("n"))?;
    if verify && !(table.rows_orthonormal() && table.columns_orthogonal()) {
        return Err(Failure::new("n", "orthogonality check failed"));
    }
    Ok(match format {
        Format::Json => {
            let mut v = table.to_json();
            if verify {
                v["verified"] = Value::Bool(true);
            }
            line(v)
        }
        Format::Csv => table.to_csv(),
    })
}

fn gram_check(path: &Path, elems: &[GroupElement], mode: Mode) -> Result<String, Failure> {
    let raw: Value = read_json(path, "spec")?;
    let mode = match mode {
        Mode::Exact => GramMode::Exact,
        Mode::Approximate => GramMode::Approximate,
        Mode::Auto => GramMode::Auto,
    };
    let verdict = if raw.get("lambda0").is_some() {
        let spec: RepSpec = serde_json::from_value(raw).map_err(blame("spec"))?;
        gram_psd_check(&|g| induced_state(&spec, g), elems, mode)
    } else {
        let spec: ThomaSpec = serde_json::from_value(raw).map_err(blame("spec"))?;
        gram_psd_check(&|g| character_value(&spec, g), elems, mode)
    }
    .map_err(blame("elements"))?;
    let size = elems.len();
    Ok(line(match verdict {
        GramVerdict::Psd { approximate } => json!({
            "psd": true,
            "approximate": approximate,
            "size": size,
        }),
        GramVerdict::NotPsd { approximate, witness, reason } => json!({
            "psd": false,
            "approximate": approximate,
            "size": size,
            "witness": witness,
            "witness_elements": witness.iter().map(|&i| elems[i].to_string()).collect::<Vec<_>>(),
            "reason": reason,
        }),
    }))
}

fn series(header: &str, rows: &[(usize, Rational)], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = format!("{header},value\n");
            for (x, v) in rows {
                out.push_str(&format!("{x},{}\n", format_rational(v)));
            }
            out
        }
        Format::Json => line(Value::Array(
            rows.iter().map(|(x, v)| json!({header: x, "value": rat(v)})).collect(),
        )),
    }
}

fn bernoulli(p: &str) -> Result<BernoulliParam, Failure> {
    let p = parse_rational(p).map_err(blame("p"))?;
    BernoulliParam::new(p).map_err(blame("p"))
}

fn lab(experiment: Lab) -> Result<String, Failure> {
    match experiment {
        Lab::Example1 { f_index, max_m, format } => {
            if f_index == 0 {
                return Err(Failure::new("f-index", "indices start at 1"));
            }
            Ok(series("m", &example1_series(f_index, max_m), format))
        }
        Lab::Example3 { p, max_n, format } => {
            let p = bernoulli(&p)?;
            let rows = example3_defect_series(&p, max_n).map_err(blame("max-n"))?;
            Ok(series("n", &rows, format))
        }
        Lab::Example3State { p, element, m } => {
            let p = bernoulli(&p)?;
            let g = parse_element(&element, "element")?;
            let v = example3_state(&p, &g, m).map_err(blame("m"))?;
            Ok(line(json!({"value": rat(&v)})))
        }
    }
}
