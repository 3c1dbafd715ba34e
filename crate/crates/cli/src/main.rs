//! `dsc`: validate corpora, dump syntax analyses, build models and query them.
//!
//! Results go to stdout as `{"value": ...}`. Failures go to stdout as
//! `{"error": CODE, "detail": ...}` with a readable line on stderr. Exit codes
//! are 0 on success, 1 on domain errors and 2 on usage errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dsc_core::corpus::{validate, ParseError};
use dsc_core::oracle::{evaluate_sentence_diagram, OracleError};
use dsc_core::semantics::{parse_logic, SemanticsError};
use dsc_core::syntax::{AnalysisError, ObjectAnalysis};
use dsc_core::{
    parse_corpus, Boolean, CategoryConfig, Corpus, Natural, Semiring, SemanticModel,
    SemiringKind, SentenceId, SparseVec, Word,
};
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(name = "dsc", version, about = "Compositional distributional semantics over treebanks")]
struct Cli {
    /// Category configuration (default: ./categories.json if present, else built-in).
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Coefficient semiring. Queries default to the one the model was built with.
    #[arg(long, global = true, value_name = "naturals|boolean")]
    semiring: Option<SemiringKind>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every tree against the structural rules.
    Validate { corpus: PathBuf },
    /// Dump objects, completions, modifiers, interactions and class trees.
    Analyze {
        corpus: PathBuf,
        #[arg(long, value_name = "ID")]
        sentence: Option<String>,
    },
    /// Build a model and write it as JSON.
    Build {
        corpus: PathBuf,
        #[arg(long, value_name = "PATH")]
        out: PathBuf,
    },
    /// Run a semantic query against a stored model.
    Query {
        #[arg(long, value_name = "PATH")]
        model: PathBuf,
        #[command(subcommand)]
        query: Query,
    },
    #[command(hide = true)]
    Oracle {
        #[command(subcommand)]
        query: OracleQuery,
    },
}

#[derive(Subcommand)]
enum Query {
    /// Indicator vector of an object word.
    Vector { word: String },
    /// Number of occurrences of an object word.
    Norm { word: String },
    /// Co-occurrences within windows of 2k+1 object words.
    Cooccur {
        #[arg(short = 'k', value_name = "K")]
        k: usize,
        w1: String,
        w2: String,
    },
    /// Apply a modifier to an object word vector.
    Modify { modifier: String, word: String },
    /// Apply an interaction to two object word vectors.
    Interact {
        interaction: String,
        w1: String,
        w2: String,
    },
    /// Evaluate a modifier expression such as `m(lazy/Adj) OR NOT m(a/Det)`.
    Logic { expr: String },
    /// Semantic vector of a whole sentence.
    SentenceVec { id: String },
}

#[derive(Subcommand)]
enum OracleQuery {
    /// Dense evaluation of a sentence diagram (small corpora only).
    SentenceVec { corpus: PathBuf, id: String },
}

struct Failure {
    code: String,
    detail: Value,
    message: String,
    exit: u8,
}

impl Failure {
    fn domain(code: &str, detail: Value, message: impl Into<String>) -> Self {
        Failure {
            code: code.into(),
            detail,
            message: message.into(),
            exit: 1,
        }
    }

    fn usage(code: &str, message: impl Into<String>) -> Self {
        let message = message.into();
        Failure {
            code: code.into(),
            detail: Value::String(message.clone()),
            message,
            exit: 2,
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::domain(e.code(), Value::String(e.to_string()), e.to_string())
    }
}

impl From<AnalysisError> for Failure {
    fn from(e: AnalysisError) -> Self {
        let detail = match &e {
            AnalysisError::Invalid { violations, .. } => {
                serde_json::to_value(violations).expect("violations serialize")
            }
            other => Value::String(other.to_string()),
        };
        Failure::domain(e.code(), detail, e.to_string())
    }
}

impl From<SemanticsError> for Failure {
    fn from(e: SemanticsError) -> Self {
        let detail = match &e {
            SemanticsError::ValidationFailed(violations) => {
                serde_json::to_value(violations).expect("violations serialize")
            }
            other => Value::String(other.to_string()),
        };
        let mut f = Failure::domain(e.code(), detail, e.to_string());
        if matches!(e, SemanticsError::Logic(_)) {
            f.exit = 2;
        }
        f
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        Failure::domain(e.code(), Value::String(e.to_string()), e.to_string())
    }
}

type Outcome = Result<(Value, u8), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| {
        let message = format!("cannot read {}: {e}", path.display());
        Failure::domain("Io", Value::String(message.clone()), message)
    })
}

fn load_config(path: Option<&Path>) -> Result<CategoryConfig, Failure> {
    let default = Path::new("categories.json");
    let path = match path {
        Some(p) => p,
        None if default.exists() => default,
        None => return Ok(CategoryConfig::default()),
    };
    let config = CategoryConfig::from_json_str(&read(path)?)
        .and_then(|c| c.check().map(|_| c))
        .map_err(|e| Failure::domain("ConfigError", Value::String(e.to_string()), e.to_string()))?;
    Ok(config)
}

fn load_corpus(path: &Path, config: &CategoryConfig) -> Result<Corpus, Failure> {
    Ok(parse_corpus(&read(path)?, config)?)
}

fn parse_word(text: &str) -> Result<Word, Failure> {
    text.parse()
        .map_err(|_| Failure::usage("BadWord", format!("expected WORD/CAT, got `{text}`")))
}

fn vector_json<S: Semiring>(v: &SparseVec<S>) -> Value {
    let mut coeffs = Map::new();
    let mut instances = Map::new();
    for (i, c) in v.coeffs() {
        coeffs.insert(i.to_string(), c.to_json());
        let inst = v.basis().get(*i).expect("index within basis");
        instances.insert(i.to_string(), json!([inst.sentence.as_str(), inst.position]));
    }
    json!({ "coeffs": coeffs, "instances": instances })
}

fn cmd_validate(config: &CategoryConfig, corpus: &Path) -> Outcome {
    let corpus = load_corpus(corpus, config)?;
    let violations = validate(&corpus);
    for v in &violations {
        eprintln!("{v}");
    }
    let exit = if violations.is_empty() { 0 } else { 1 };
    let value = json!({
        "sentences": corpus.sentences.len(),
        "valid": violations.is_empty(),
        "violations": serde_json::to_value(&violations).expect("violations serialize"),
    });
    Ok((value, exit))
}

fn cmd_analyze(config: &CategoryConfig, corpus: &Path, sentence: Option<&str>) -> Outcome {
    let corpus = load_corpus(corpus, config)?;
    let report = |s| -> Result<Value, Failure> {
        let analysis = ObjectAnalysis::new(s, &corpus.config)?;
        Ok(serde_json::to_value(analysis.report()).expect("report serializes"))
    };
    let value = match sentence {
        Some(id) => {
            let id = SentenceId::new(id);
            let s = corpus
                .sentence(&id)
                .ok_or_else(|| Failure::from(SemanticsError::UnknownSentence(id.clone())))?;
            report(s)?
        }
        None => Value::Array(
            corpus
                .sentences
                .iter()
                .map(report)
                .collect::<Result<_, _>>()?,
        ),
    };
    Ok((value, 0))
}

fn cmd_build(config: &CategoryConfig, semiring: SemiringKind, corpus: &Path, out: &Path) -> Outcome {
    let corpus = load_corpus(corpus, config)?;
    let model = SemanticModel::build(&corpus, semiring)?;
    let text = serde_json::to_string_pretty(&model.to_json()).expect("model serializes");
    fs::write(out, text + "\n").map_err(|e| {
        let message = format!("cannot write {}: {e}", out.display());
        Failure::domain("Io", Value::String(message.clone()), message)
    })?;
    let value = json!({
        "instances": model.basis().len(),
        "out": out.display().to_string(),
        "semiring": semiring.name(),
        "sentences": corpus.sentences.len(),
    });
    Ok((value, 0))
}

fn run_query<S: Semiring>(model: &SemanticModel, query: &Query) -> Outcome {
    let value = match query {
        Query::Vector { word } => vector_json(&model.word_vector::<S>(&parse_word(word)?)?),
        Query::Norm { word } => model.squared_norm::<S>(&parse_word(word)?)?.to_json(),
        Query::Cooccur { k, w1, w2 } => model
            .ip_k::<S>(*k, &parse_word(w1)?, &parse_word(w2)?)?
            .to_json(),
        Query::Modify { modifier, word } => {
            let v = model.word_vector::<S>(&parse_word(word)?)?;
            vector_json(&model.modifier_apply(&parse_word(modifier)?, &v)?)
        }
        Query::Interact {
            interaction,
            w1,
            w2,
        } => {
            let a = model.word_vector::<S>(&parse_word(w1)?)?;
            let b = model.word_vector::<S>(&parse_word(w2)?)?;
            vector_json(&model.interaction_apply(&parse_word(interaction)?, &a, &b)?)
        }
        Query::Logic { expr } => {
            let parsed = parse_logic(expr).map_err(SemanticsError::from)?;
            let op = model.modifier_logic::<S>(&parsed)?;
            json!({
                "expression": parsed.to_string(),
                "projector": vector_json(op.coefficients()),
                "support": op.support(),
            })
        }
        Query::SentenceVec { id } => vector_json(&model.sentence_vector::<S>(&SentenceId::new(id))?),
    };
    Ok((value, 0))
}

fn cmd_query(semiring: Option<SemiringKind>, model: &Path, query: &Query) -> Outcome {
    let text = read(model)?;
    let json: Value = serde_json::from_str(&text).map_err(|e| {
        Failure::domain("MalformedModel", Value::String(e.to_string()), e.to_string())
    })?;
    let model = SemanticModel::from_json(&json)?;
    match semiring.unwrap_or(model.semiring()) {
        SemiringKind::Naturals => run_query::<Natural>(&model, query),
        SemiringKind::Boolean => run_query::<Boolean>(&model, query),
    }
}

fn cmd_oracle(config: &CategoryConfig, semiring: SemiringKind, corpus: &Path, id: &str) -> Outcome {
    let corpus = load_corpus(corpus, config)?;
    let id = SentenceId::new(id);
    fn dense_json<S: Semiring>(v: Vec<S>) -> Value {
        let coeffs: Map<String, Value> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i.to_string(), c.to_json()))
            .collect();
        json!({ "coeffs": coeffs })
    }
    let value = match semiring {
        SemiringKind::Naturals => dense_json(evaluate_sentence_diagram::<Natural>(&corpus, &id)?),
        SemiringKind::Boolean => dense_json(evaluate_sentence_diagram::<Boolean>(&corpus, &id)?),
    };
    Ok((value, 0))
}

fn run(cli: &Cli) -> Outcome {
    let config = || load_config(cli.config.as_deref());
    let semiring = cli.semiring.unwrap_or_default();
    match &cli.command {
        Command::Validate { corpus } => cmd_validate(&config()?, corpus),
        Command::Analyze { corpus, sentence } => cmd_analyze(&config()?, corpus, sentence.as_deref()),
        Command::Build { corpus, out } => cmd_build(&config()?, semiring, corpus, out),
        Command::Query { model, query } => cmd_query(cli.semiring, model, query),
        Command::Oracle {
            query: OracleQuery::SentenceVec { corpus, id },
        } => cmd_oracle(&config()?, semiring, corpus, id),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let message = e.render().to_string();
            eprint!("{message}");
            let detail = message.lines().next().unwrap_or("usage error").to_string();
            println!("{}", json!({ "error": "Usage", "detail": detail }));
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok((value, exit)) => {
            println!("{}", json!({ "value": value }));
            ExitCode::from(exit)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            println!("{}", json!({ "error": f.code, "detail": f.detail }));
            ExitCode::from(f.exit)
        }
    }
}
