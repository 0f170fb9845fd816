//! Command-line front end: `syllogos check | conclude | compare | enumerate`.
//!
//! Exit codes are a contract: 0 = valid at the bound (or success for
//! conclusion-deriving commands), 1 = countermodel found, 2 = undetermined
//! or error.

use crate::conditional_engine::{heuristic_conclude, prob_interpret, Informativeness};
use crate::model::{
    parse_rat, ImportPolicy, ProbQuantifierConfig, Quantifier, Statement, Term, Verdict,
};
use crate::numeric_engine::{
    exceptive_conclude, fuzzy_conclude_qep, interval_conclude, ExceptiveMode, ExceptiveOutcome,
    FuzzySchema, ProportionConstraint, ProportionGoal, RegionExpr,
};
use crate::parser::{parse_premises_file_with, parse_syllogism_file_with, NamedQuantifiers};
use crate::set_engine::{check_validity_with, enumerate_classical_moods, CheckOptions, EvalConfig};
use crate::transforms::{self, ImportScope};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::collections::BTreeMap;
use std::path::PathBuf;
use thiserror::Error;

pub const EXIT_VALID: i32 = 0;
pub const EXIT_COUNTERMODEL: i32 = 1;
pub const EXIT_UNDETERMINED: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "syllogos",
    about = "Set-based and conditional reasoning over quantified syllogistic statements",
    version
)]
struct CliArgs {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a syllogism file for validity with the set engine.
    Check {
        /// Corpus file: premises, a '---' line, one conclusion.
        file: PathBuf,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Derive a conclusion from a premises-only file.
    Conclude {
        /// Premises-only file (no '---' separator).
        file: PathBuf,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Run the set and conditional engines side by side on one syllogism.
    Compare {
        file: PathBuf,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Classify all 256 classical moods at the bound.
    Enumerate {
        #[command(flatten)]
        opts: CommonOpts,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Set,
    Interval,
    Fuzzy,
    Exceptive,
    Conditional,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ImportArg {
    None,
    Universal,
    Explicit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScopeArg {
    Subjects,
    All,
}

#[derive(Debug, Args)]
struct CommonOpts {
    /// Inference engine.
    #[arg(long, value_enum, default_value_t = EngineArg::Set)]
    engine: EngineArg,
    /// Existential import policy for the set engine.
    #[arg(long = "import", value_enum, default_value_t = ImportArg::None)]
    import: ImportArg,
    /// Which terms get explicit import premises.
    #[arg(long = "import-scope", value_enum, default_value_t = ScopeArg::Subjects)]
    import_scope: ScopeArg,
    /// Universe-size bound for the model search.
    #[arg(long = "max-universe", default_value_t = 6)]
    max_universe: u64,
    /// Total-cardinality bound for the interval engine's search.
    #[arg(long = "max-total", default_value_t = 40)]
    max_total: u64,
    /// Epsilon for the probabilistic quantifier bands (e.g. 1/10 or 0.1).
    #[arg(long)]
    epsilon: Option<String>,
    /// Named-quantifier configuration file (JSON). Falls back to the
    /// SYLLOGOS_QUANTIFIERS environment variable, then to built-in defaults
    /// for the fuzzy engine.
    #[arg(long)]
    quantifiers: Option<PathBuf>,
    /// Assumed cardinality, TERM=N (repeatable).
    #[arg(long = "card", value_name = "TERM=N")]
    card: Vec<String>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

/// Validated run configuration assembled from flags, environment and
/// configuration files.
pub struct RunConfig {
    pub engine_name: String,
    pub import_policy: ImportPolicy,
    pub import_scope: ImportScope,
    pub max_universe: u64,
    pub max_total: u64,
    pub epsilon: ProbQuantifierConfig,
    pub named: NamedQuantifiers,
    pub cards: BTreeMap<Term, u64>,
    pub json: bool,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Message(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

fn message(text: impl Into<String>) -> CliError {
    CliError::Message(text.into())
}

impl CommonOpts {
    fn into_config(self, engine_default_quantifiers: bool) -> Result<RunConfig, CliError> {
        if self.max_universe == 0 || self.max_universe > 1_000 {
            return Err(message("--max-universe must be between 1 and 1000"));
        }
        if self.max_total == 0 || self.max_total > 10_000 {
            return Err(message("--max-total must be between 1 and 10000"));
        }
        let epsilon = match &self.epsilon {
            None => ProbQuantifierConfig::default(),
            Some(raw) => {
                let value = parse_rat(raw)
                    .ok_or_else(|| message(format!("--epsilon {raw:?} is not a rational")))?;
                ProbQuantifierConfig::new(value).map_err(|e| message(e.to_string()))?
            }
        };
        let named = self.load_quantifiers(engine_default_quantifiers)?;
        let mut cards = BTreeMap::new();
        for entry in &self.card {
            let (term, value) = entry
                .split_once('=')
                .ok_or_else(|| message(format!("--card {entry:?} is not TERM=N")))?;
            let term = Term::new(term).map_err(|e| message(e.to_string()))?;
            let value: u64 = value.trim().parse().map_err(|_| {
                message(format!(
                    "--card {entry:?}: N must be a non-negative integer"
                ))
            })?;
            cards.insert(term, value);
        }
        Ok(RunConfig {
            engine_name: format!("{:?}", self.engine).to_lowercase(),
            import_policy: match self.import {
                ImportArg::None => ImportPolicy::NoImport,
                ImportArg::Universal => ImportPolicy::UniversalImport,
                ImportArg::Explicit => ImportPolicy::ExplicitPremise,
            },
            import_scope: match self.import_scope {
                ScopeArg::Subjects => ImportScope::SubjectsOnly,
                ScopeArg::All => ImportScope::AllTerms,
            },
            max_universe: self.max_universe,
            max_total: self.max_total,
            epsilon,
            named,
            cards,
            json: self.json,
        })
    }

    fn load_quantifiers(&self, engine_defaults: bool) -> Result<NamedQuantifiers, CliError> {
        let path = self
            .quantifiers
            .clone()
            .or_else(|| std::env::var_os("SYLLOGOS_QUANTIFIERS").map(PathBuf::from));
        match path {
            Some(path) => {
                let text = std::fs::read_to_string(&path).map_err(|source| CliError::Io {
                    path: path.clone(),
                    source,
                })?;
                NamedQuantifiers::from_json_str(&text).map_err(|e| message(e.to_string()))
            }
            None if engine_defaults => Ok(NamedQuantifiers::builtin_defaults()),
            None => Ok(NamedQuantifiers::empty()),
        }
    }
}

/// Parses `std::env::args` and runs; returns the process exit code.
pub fn run() -> i32 {
    let args = CliArgs::parse();
    match dispatch(args) {
        Ok(code) => code,
        Err(error) => {
            eprintln!("error: {error}");
            EXIT_UNDETERMINED
        }
    }
}

fn dispatch(args: CliArgs) -> Result<i32, CliError> {
    match args.command {
        Command::Check { file, opts } => {
            let config = opts.into_config(false)?;
            if config.engine_name != "set" {
                return Err(message(
                    "check uses the set engine; use 'conclude' for the numeric and conditional engines",
                ));
            }
            cmd_check(&file, &config)
        }
        Command::Conclude { file, opts } => {
            let engine = opts.engine;
            let config = opts.into_config(engine == EngineArg::Fuzzy)?;
            cmd_conclude(&file, engine, &config)
        }
        Command::Compare { file, opts } => {
            let config = opts.into_config(false)?;
            cmd_compare(&file, &config)
        }
        Command::Enumerate { opts } => {
            let config = opts.into_config(false)?;
            cmd_enumerate(&config)
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })
}

fn check_options(config: &RunConfig) -> CheckOptions {
    CheckOptions {
        policy: config.import_policy,
        import_scope: config.import_scope,
        max_universe: config.max_universe,
        eval: EvalConfig::default(),
    }
}

/// The documented verdict schema:
/// `{"verdict": "valid"|"counter"|"undetermined", "bound": k, "counter_model": ...}`.
fn verdict_json(verdict: &Verdict) -> serde_json::Value {
    match verdict {
        Verdict::Valid { bound_checked } => {
            json!({"verdict": "valid", "bound": bound_checked, "counter_model": null})
        }
        Verdict::CounterModel { model } => {
            json!({"verdict": "counter", "bound": model.universe_size(), "counter_model": model})
        }
        Verdict::Undetermined { bound_checked } => {
            json!({"verdict": "undetermined", "bound": bound_checked, "counter_model": null})
        }
    }
}

fn print_verdict_text(verdict: &Verdict) {
    match verdict {
        Verdict::Valid { bound_checked } => println!("valid (bound {bound_checked})"),
        Verdict::CounterModel { model } => {
            println!(
                "countermodel found (universe size {}):",
                model.universe_size()
            );
            print!("{model}");
        }
        Verdict::Undetermined { bound_checked } => {
            println!("undetermined (bound {bound_checked})")
        }
    }
}

fn verdict_exit(verdict: &Verdict) -> i32 {
    match verdict {
        Verdict::Valid { .. } => EXIT_VALID,
        Verdict::CounterModel { .. } => EXIT_COUNTERMODEL,
        Verdict::Undetermined { .. } => EXIT_UNDETERMINED,
    }
}

fn cmd_check(file: &PathBuf, config: &RunConfig) -> Result<i32, CliError> {
    let text = read_file(file)?;
    let syllogism =
        parse_syllogism_file_with(&text, &config.named).map_err(|e| message(e.to_string()))?;
    let verdict = check_validity_with(&syllogism, &check_options(config));
    if config.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&verdict_json(&verdict)).unwrap()
        );
    } else {
        print_verdict_text(&verdict);
    }
    Ok(verdict_exit(&verdict))
}

fn cmd_conclude(file: &PathBuf, engine: EngineArg, config: &RunConfig) -> Result<i32, CliError> {
    let text = read_file(file)?;
    let premises =
        parse_premises_file_with(&text, &config.named).map_err(|e| message(e.to_string()))?;
    match engine {
        EngineArg::Set => Err(message(
            "the set engine checks validity rather than deriving conclusions; use 'check'",
        )),
        EngineArg::Interval => conclude_interval(&premises, config),
        EngineArg::Fuzzy => conclude_fuzzy(&premises, config),
        EngineArg::Exceptive => conclude_exceptive(&premises, config),
        EngineArg::Conditional => conclude_conditional(&premises, config),
    }
}

fn engine_err(engine: &str, error: impl std::fmt::Display) -> CliError {
    message(format!("{engine} engine: {error}"))
}

fn conclude_interval(premises: &[Statement], config: &RunConfig) -> Result<i32, CliError> {
    let err = |text: &str| engine_err("interval", text);
    if premises.len() < 2 {
        return Err(err("needs at least two premises over a shared subject"));
    }
    let subject = premises[0].subject().clone();
    let mut constraints = Vec::new();
    let mut goal_expr: Option<RegionExpr> = None;
    for premise in premises {
        if premise.subject() != &subject {
            return Err(err(&format!(
                "premises must share the subject {subject}; found {}",
                premise.subject()
            )));
        }
        let bounds = match premise.quantifier() {
            Quantifier::Interval(iv) => *iv,
            Quantifier::All => crate::model::Interval::point(crate::model::rat(1, 1)),
            Quantifier::No => crate::model::Interval::point(crate::model::rat(0, 1)),
            other => {
                return Err(err(&format!(
                    "premise quantifier '{other}' is not an interval (or all/no)"
                )))
            }
        };
        let numerator = if premise.predicate_negated() {
            RegionExpr::complement_term(premise.predicate().clone())
        } else {
            RegionExpr::term(premise.predicate().clone())
        };
        constraints.push(ProportionConstraint {
            numerator: numerator.clone(),
            denominator: subject.clone(),
            bounds,
        });
        goal_expr = Some(match goal_expr {
            None => numerator,
            Some(expr) if premise.predicate_negated() => expr.and_not(premise.predicate().clone()),
            Some(expr) => expr.and(premise.predicate().clone()),
        });
    }
    let goal = ProportionGoal {
        numerator: goal_expr.expect("at least two premises"),
        denominator: subject.clone(),
    };
    let conclusion = interval_conclude(&constraints, &goal, config.max_total)
        .map_err(|e| engine_err("interval", e))?;
    if config.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "interval": {
                    "lo": {"num": *conclusion.interval.lo.numer(), "den": *conclusion.interval.lo.denom()},
                    "hi": {"num": *conclusion.interval.hi.numer(), "den": *conclusion.interval.hi.denom()},
                },
                "witness_min": conclusion.witness_min,
                "witness_max": conclusion.witness_max,
                "route": conclusion.route,
            }))
            .unwrap()
        );
    } else {
        println!("{} {} are {}", conclusion.interval, subject, goal.numerator);
    }
    Ok(EXIT_VALID)
}

fn conclude_fuzzy(premises: &[Statement], config: &RunConfig) -> Result<i32, CliError> {
    use crate::model::{rat, Trapezoid};
    let err = |text: String| engine_err("fuzzy", text);
    if premises.len() != 2 {
        return Err(err(
            "the intersection/product schema takes exactly two premises".into(),
        ));
    }
    let trapezoid_of = |s: &Statement| -> Result<Trapezoid, CliError> {
        match s.quantifier() {
            Quantifier::Trapezoid(t) => Ok(*t),
            Quantifier::Interval(iv) => Ok(Trapezoid::from_interval(*iv)),
            other => Err(err(format!(
                "premise quantifier '{other}' is not fuzzy; configure it via --quantifiers"
            ))),
        }
    };
    let t1 = trapezoid_of(&premises[0])?;
    let t2 = trapezoid_of(&premises[1])?;
    // intersection/product schema: Q1 S are A; Q2 (A S) are B
    let expected_chained = format!(
        "{} {}",
        premises[0].predicate().name(),
        premises[0].subject().name()
    );
    if premises[1].subject().name() != expected_chained {
        return Err(err(format!(
            "second premise subject should be '{expected_chained}' (the first premise's predicate restricted to its subject), found '{}'",
            premises[1].subject()
        )));
    }
    let alpha_levels = [rat(1, 4), rat(1, 2), rat(3, 4), rat(1, 1)];
    let family = fuzzy_conclude_qep(&[t1, t2], FuzzySchema::IntersectionProduct, &alpha_levels)
        .map_err(|e| engine_err("fuzzy", e))?;
    let name = |t: &Trapezoid| {
        config
            .named
            .name_of(&Quantifier::Trapezoid(*t))
            .map(str::to_string)
            .unwrap_or_else(|| t.to_string())
    };
    if config.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({"alpha_cuts": family.cuts()})).unwrap()
        );
    } else {
        println!(
            "{} ⊗ {} {} are {} and {}",
            name(&t1),
            name(&t2),
            premises[0].subject(),
            premises[0].predicate(),
            premises[1].predicate()
        );
        for cut in family.cuts() {
            println!(
                "  alpha {}: {}",
                crate::model::format_rat(&cut.alpha),
                cut.cut
            );
        }
    }
    Ok(EXIT_VALID)
}

fn conclude_exceptive(premises: &[Statement], config: &RunConfig) -> Result<i32, CliError> {
    if premises.len() != 2 {
        return Err(engine_err(
            "exceptive",
            "takes exactly two 'all but k' premises",
        ));
    }
    let (p1, p2) = (&premises[0], &premises[1]);
    let literal = exceptive_conclude(p1, p2, &config.cards, ExceptiveMode::Literal)
        .map_err(|e| engine_err("exceptive", e))?;
    let sound = exceptive_conclude(p1, p2, &config.cards, ExceptiveMode::SoundBound)
        .map_err(|e| engine_err("exceptive", e))?;
    let (
        ExceptiveOutcome::Literal { exception },
        ExceptiveOutcome::Sound {
            min_exception,
            max_exception,
        },
    ) = (&literal, &sound)
    else {
        unreachable!("modes return their own outcome shapes");
    };
    let subject = p2.subject().clone();
    let predicate = p1.predicate().clone();
    let literal_statement =
        Statement::new(Quantifier::AllBut(*exception), subject, predicate, false)
            .map_err(|e| engine_err("exceptive", e))?;
    let diverges = exception < min_exception || exception > max_exception;
    if config.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "literal": {"exception": exception, "statement": literal_statement.to_string()},
                "sound_bound": {"min_exception": min_exception, "max_exception": max_exception},
                "diverges": diverges,
            }))
            .unwrap()
        );
    } else {
        println!("literal:     {literal_statement}");
        println!(
            "sound-bound: exception in [{min_exception},{max_exception}] ({} are missed by at most {max_exception})",
            literal_statement.subject()
        );
        if diverges {
            println!(
                "note: the literal arithmetic ({exception}) falls outside the sound range [{min_exception},{max_exception}]"
            );
        }
    }
    Ok(EXIT_VALID)
}

fn conclude_conditional(premises: &[Statement], config: &RunConfig) -> Result<i32, CliError> {
    if premises.len() != 2 {
        return Err(engine_err("conditional", "takes exactly two premises"));
    }
    let result = heuristic_conclude(&premises[0], &premises[1], &Informativeness::default())
        .map_err(|e| engine_err("conditional", e))?;
    if config.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "conclusion": result.conclusion,
                "trace": result.trace,
            }))
            .unwrap()
        );
    } else {
        println!("{}", result.conclusion);
        for line in &result.trace {
            println!("  {line}");
        }
    }
    Ok(EXIT_VALID)
}

fn cmd_compare(file: &PathBuf, config: &RunConfig) -> Result<i32, CliError> {
    let text = read_file(file)?;
    let syllogism =
        parse_syllogism_file_with(&text, &config.named).map_err(|e| message(e.to_string()))?;

    let verdict = check_validity_with(&syllogism, &check_options(config));

    let plain_premises: Vec<&Statement> = syllogism
        .premises()
        .iter()
        .filter(|p| !p.is_existence_import())
        .collect();
    let conditional = if plain_premises.len() == 2 {
        heuristic_conclude(
            plain_premises[0],
            plain_premises[1],
            &Informativeness::default(),
        )
    } else {
        Err(crate::conditional_engine::ConditionalError::Unsupported {
            reason: "the heuristic schema takes exactly two premises".into(),
        })
    };

    let matches_file = conditional
        .as_ref()
        .map(|r| {
            r.conclusion == transforms::desugar_singular(syllogism.conclusion())
                || &r.conclusion == syllogism.conclusion()
        })
        .unwrap_or(false);
    let agree = verdict.is_valid() && matches_file;

    if config.json {
        let conditional_json = match &conditional {
            Ok(r) => json!({"conclusion": r.conclusion, "trace": r.trace}),
            Err(e) => json!({"error": e.to_string()}),
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "set": verdict_json(&verdict),
                "conditional": conditional_json,
                "agreement": if agree { "agree" } else { "diverge" },
            }))
            .unwrap()
        );
    } else {
        print!("set-based:   ");
        print_verdict_text(&verdict);
        match &conditional {
            Ok(r) => {
                println!("conditional: {}", r.conclusion);
                for line in &r.trace {
                    println!("             {line}");
                }
                let epsilon_note: Vec<String> = plain_premises
                    .iter()
                    .filter_map(|p| prob_interpret(p, &config.epsilon).ok())
                    .map(|c| c.describe())
                    .collect();
                if !epsilon_note.is_empty() {
                    println!("             premise readings: {}", epsilon_note.join("; "));
                }
            }
            Err(e) => println!("conditional: rejected ({e})"),
        }
        println!("agreement:   {}", if agree { "agree" } else { "diverge" });
    }
    // divergence is data, not an error: compare exits 0 once both columns ran
    Ok(EXIT_VALID)
}

fn cmd_enumerate(config: &RunConfig) -> Result<i32, CliError> {
    let results = enumerate_classical_moods(&check_options(config));
    let valid: Vec<&crate::set_engine::MoodResult> =
        results.iter().filter(|r| r.verdict.is_valid()).collect();
    if config.json {
        let rows: Vec<serde_json::Value> = results
            .iter()
            .map(|r| {
                json!({
                    "figure": r.figure.to_string(),
                    "mood": r.mood,
                    "verdict": verdict_json(&r.verdict),
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "bound": config.max_universe,
                "valid_count": valid.len(),
                "results": rows,
            }))
            .unwrap()
        );
    } else {
        for figure in [
            crate::model::Figure::I,
            crate::model::Figure::II,
            crate::model::Figure::III,
            crate::model::Figure::IV,
        ] {
            let moods: Vec<&str> = valid
                .iter()
                .filter(|r| r.figure == figure)
                .map(|r| r.mood.as_str())
                .collect();
            println!("figure {figure}: {}", moods.join(" "));
        }
        println!(
            "valid: {} of {} (bound {}, import {:?}, scope {:?})",
            valid.len(),
            results.len(),
            config.max_universe,
            config.import_policy,
            config.import_scope
        );
    }
    Ok(EXIT_VALID)
}
