//! Command-line calculator for plactic monoids.
//!
//! One verb per invocation. Words are written compactly (`34231122`, one
//! digit per letter) or as separated integers (`10 2 10`); an argument of
//! `-` draws words from standard input, one per line, skipping blank lines
//! and `#` comments. Solver verbs print their witness as a JSON object by
//! default and everything else prints plain text; `--output` overrides
//! either. Words inside JSON are always in separated form, text output uses
//! the compact form whenever all letters fit it.
//!
//! Exit status: 0 on success ( for `equal` and `verify`: the affirmative
//! answer), 1 for a negative `equal`/`verify` answer, 2 for any error.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use plactic::{
    involute_word, knuth_class, solve_left, solve_mixed, solve_right, verify_witness, Equation,
    PlacticElement, RankContext, Tableau, WitnessPair, Word, WordStyle, DEFAULT_CLASS_BUDGET,
};
use serde_json::json;

type Error = Box<dyn std::error::Error>;

#[derive(Parser)]
#[command(
    name = "plactic",
    version,
    about = "Plactic monoid calculator: normal forms, tableaux, the involution, and ideal-intersection witnesses"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Ambient rank n for involute and the solvers; defaults to the largest
    /// letter across the input words and must not be smaller than it
    #[arg(long, global = true)]
    rank: Option<u32>,

    /// Output format; solver verbs default to json, all others to text
    #[arg(long, global = true, value_enum)]
    output: Option<OutputMode>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form (tableau row reading) of each word
    Normalize {
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Multiply two elements and print the product's normal form
    Multiply { left: String, right: String },
    /// Compare two elements; exits 0 when equal, 1 when not
    Equal { left: String, right: String },
    /// Print the letter multiplicities of each word
    Content {
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Print each word's tableau, top row first
    Tableau {
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Apply the rank-n Schützenberger involution to each word
    Involute {
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Solve Xu = Yv: witnesses multiply u and v on the left
    SolveLeft { u: String, v: String },
    /// Solve uX = vY: witnesses multiply u and v on the right
    SolveRight { u: String, v: String },
    /// Solve uX = Yv
    SolveMixed { u: String, v: String },
    /// Check a witness against u and v; exits 0 when it verifies, 1 when not
    Verify {
        u: String,
        v: String,
        /// Path to the witness JSON; `-` reads it from standard input
        #[arg(default_value = "-")]
        witness: String,
    },
    /// List the Knuth class of each word (breadth-first closure; the
    /// PLACTIC_CLASS_BUDGET variable caps its size, default 100000)
    Class {
        #[arg(required = true)]
        words: Vec<String>,
    },
}

impl Command {
    fn default_output(&self) -> OutputMode {
        match self {
            Command::SolveLeft { .. } | Command::SolveRight { .. } | Command::SolveMixed { .. } => {
                OutputMode::Json
            }
            _ => OutputMode::Text,
        }
    }
}

/// Lazily loaded standard-input words: one per line, blank lines and
/// '#'-comments dropped. Each `-` argument consumes lines in order.
struct StdinWords {
    lines: Option<Vec<String>>,
    cursor: usize,
}

impl StdinWords {
    fn new() -> StdinWords {
        StdinWords {
            lines: None,
            cursor: 0,
        }
    }

    fn load(&mut self) -> Result<(), Error> {
        if self.lines.is_none() {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text)?;
            self.lines = Some(
                text.lines()
                    .map(str::trim)
                    .filter(|line| !line.is_empty() && !line.starts_with('#'))
                    .map(str::to_string)
                    .collect(),
            );
        }
        Ok(())
    }

    fn next_word(&mut self) -> Result<Word, Error> {
        self.load()?;
        let lines = self.lines.as_deref().unwrap();
        let line = lines
            .get(self.cursor)
            .ok_or("expected another word on standard input")?;
        self.cursor += 1;
        Ok(Word::parse(line)?)
    }

    fn remaining_words(&mut self) -> Result<Vec<Word>, Error> {
        self.load()?;
        let lines = self.lines.as_deref().unwrap();
        let words = lines[self.cursor..]
            .iter()
            .map(|line| Word::parse(line).map_err(Error::from))
            .collect::<Result<Vec<Word>, Error>>()?;
        self.cursor = lines.len();
        Ok(words)
    }
}

fn one_word(arg: &str, stdin: &mut StdinWords) -> Result<Word, Error> {
    if arg == "-" {
        stdin.next_word()
    } else {
        Ok(Word::parse(arg)?)
    }
}

fn word_list(args: &[String], stdin: &mut StdinWords) -> Result<Vec<Word>, Error> {
    let mut words = Vec::new();
    for arg in args {
        if arg == "-" {
            words.extend(stdin.remaining_words()?);
        } else {
            words.push(Word::parse(arg)?);
        }
    }
    Ok(words)
}

/// The rank to work at: the explicit request (checked against the inputs) or
/// the largest letter present.
fn resolve_rank(explicit: Option<u32>, words: &[&Word]) -> Result<u32, Error> {
    let needed = words.iter().map(|w| w.rank()).max().unwrap_or(0);
    match explicit {
        Some(n) if n < needed => {
            Err(format!("--rank {n} is smaller than the largest input letter {needed}").into())
        }
        Some(n) => Ok(n),
        None => Ok(needed),
    }
}

/// Separated form, the one style that can spell every word: used for all
/// words inside JSON.
fn sep(w: &Word) -> String {
    w.format(WordStyle::Separated)
        .expect("separated style is total")
}

fn print_witness(pair: &WitnessPair, n: u32, mode: OutputMode) {
    match mode {
        OutputMode::Json => println!(
            "{}",
            json!({
                "equation": pair.equation.as_str(),
                "left": sep(pair.left.normal_form()),
                "right": sep(pair.right.normal_form()),
                "common": sep(pair.common.normal_form()),
                "rank": n,
            })
        ),
        OutputMode::Text => {
            println!("equation: {}", pair.equation);
            println!("left: {}", pair.left.normal_form().to_text());
            println!("right: {}", pair.right.normal_form().to_text());
            println!("common: {}", pair.common.normal_form().to_text());
            println!("rank: {n}");
        }
    }
}

fn parse_witness(text: &str) -> Result<WitnessPair, Error> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| format!("witness is not valid JSON: {e}"))?;
    let field = |key: &str| -> Result<&str, Error> {
        value
            .get(key)
            .and_then(serde_json::Value::as_str)
            .ok_or_else(|| Error::from(format!("witness JSON needs a string field \"{key}\"")))
    };
    let equation = match field("equation")? {
        "left" => Equation::Left,
        "right" => Equation::Right,
        "mixed" => Equation::Mixed,
        other => return Err(format!("unknown equation \"{other}\"").into()),
    };
    let element = |key: &str| -> Result<PlacticElement, Error> {
        Ok(PlacticElement::from_word(&Word::parse(field(key)?)?))
    };
    Ok(WitnessPair {
        equation,
        left: element("left")?,
        right: element("right")?,
        common: element("common")?,
    })
}

fn class_budget() -> Result<usize, Error> {
    match std::env::var("PLACTIC_CLASS_BUDGET") {
        Ok(text) => text
            .trim()
            .parse::<usize>()
            .map_err(|_| format!("invalid PLACTIC_CLASS_BUDGET value \"{text}\"").into()),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_CLASS_BUDGET),
        Err(e) => Err(e.into()),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let mode = cli.output.unwrap_or_else(|| cli.command.default_output());
    let mut stdin = StdinWords::new();

    match &cli.command {
        Command::Normalize { words } => {
            for word in word_list(words, &mut stdin)? {
                let element = PlacticElement::from_word(&word);
                match mode {
                    OutputMode::Text => println!("{}", element.normal_form().to_text()),
                    OutputMode::Json => println!(
                        "{}",
                        json!({
                            "input": sep(&word),
                            "normal_form": sep(element.normal_form()),
                        })
                    ),
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Multiply { left, right } => {
            let a = PlacticElement::from_word(&one_word(left, &mut stdin)?);
            let b = PlacticElement::from_word(&one_word(right, &mut stdin)?);
            let product = a.multiply(&b);
            match mode {
                OutputMode::Text => println!("{}", product.normal_form().to_text()),
                OutputMode::Json => println!(
                    "{}",
                    json!({
                        "left": sep(a.normal_form()),
                        "right": sep(b.normal_form()),
                        "product": sep(product.normal_form()),
                    })
                ),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Equal { left, right } => {
            let a = PlacticElement::from_word(&one_word(left, &mut stdin)?);
            let b = PlacticElement::from_word(&one_word(right, &mut stdin)?);
            let equal = a == b;
            match mode {
                OutputMode::Text => println!("{}", if equal { "equal" } else { "unequal" }),
                OutputMode::Json => println!(
                    "{}",
                    json!({
                        "left": sep(a.normal_form()),
                        "right": sep(b.normal_form()),
                        "equal": equal,
                    })
                ),
            }
            Ok(if equal {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Content { words } => {
            for word in word_list(words, &mut stdin)? {
                let content = word.content();
                match mode {
                    OutputMode::Text => {
                        if content.is_empty() {
                            println!("(empty)");
                        } else {
                            let pairs: Vec<String> = content
                                .iter()
                                .map(|(letter, count)| format!("{letter}:{count}"))
                                .collect();
                            println!("{}", pairs.join(" "));
                        }
                    }
                    OutputMode::Json => {
                        let mut counts = serde_json::Map::new();
                        for (letter, count) in content.iter() {
                            counts.insert(letter.to_string(), count.into());
                        }
                        println!(
                            "{}",
                            json!({
                                "word": sep(&word),
                                "counts": counts,
                                "rank": content.rank(),
                                "total": content.total(),
                            })
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Tableau { words } => {
            let words = word_list(words, &mut stdin)?;
            for (i, word) in words.iter().enumerate() {
                let t = Tableau::from_word(word);
                match mode {
                    OutputMode::Text => {
                        if i > 0 {
                            println!();
                        }
                        println!("{t}");
                    }
                    OutputMode::Json => {
                        let rows: Vec<Vec<u32>> = t
                            .rows()
                            .iter()
                            .map(|row| row.iter().map(|l| l.value()).collect())
                            .collect();
                        println!(
                            "{}",
                            json!({
                                "word": sep(word),
                                "rows": rows,
                                "row_reading": sep(&t.row_reading()),
                                "column_reading": sep(&t.column_reading()),
                            })
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Involute { words } => {
            let words = word_list(words, &mut stdin)?;
            let refs: Vec<&Word> = words.iter().collect();
            let n = resolve_rank(cli.rank, &refs)?.max(1);
            let ctx = RankContext::new(n).expect("rank at least 1");
            for word in &words {
                let result = involute_word(word, ctx)?;
                match mode {
                    OutputMode::Text => println!("{}", result.to_text()),
                    OutputMode::Json => println!(
                        "{}",
                        json!({
                            "input": sep(word),
                            "rank": n,
                            "result": sep(&result),
                        })
                    ),
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::SolveLeft { u, v } => {
            let wu = one_word(u, &mut stdin)?;
            let wv = one_word(v, &mut stdin)?;
            let n = resolve_rank(cli.rank, &[&wu, &wv])?;
            let pair = solve_left(
                &PlacticElement::from_word(&wu),
                &PlacticElement::from_word(&wv),
                n,
            )?;
            print_witness(&pair, n, mode);
            Ok(ExitCode::SUCCESS)
        }

        Command::SolveRight { u, v } => {
            let wu = one_word(u, &mut stdin)?;
            let wv = one_word(v, &mut stdin)?;
            let n = resolve_rank(cli.rank, &[&wu, &wv])?;
            let pair = solve_right(
                &PlacticElement::from_word(&wu),
                &PlacticElement::from_word(&wv),
                n,
            )?;
            print_witness(&pair, n, mode);
            Ok(ExitCode::SUCCESS)
        }

        Command::SolveMixed { u, v } => {
            let wu = one_word(u, &mut stdin)?;
            let wv = one_word(v, &mut stdin)?;
            let n = resolve_rank(cli.rank, &[&wu, &wv])?;
            let pair = solve_mixed(
                &PlacticElement::from_word(&wu),
                &PlacticElement::from_word(&wv),
            );
            print_witness(&pair, n, mode);
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify { u, v, witness } => {
            if witness == "-" && (u == "-" || v == "-") {
                return Err("the words and the witness cannot both come from standard input".into());
            }
            let eu = PlacticElement::from_word(&one_word(u, &mut stdin)?);
            let ev = PlacticElement::from_word(&one_word(v, &mut stdin)?);
            let text = if witness == "-" {
                let mut text = String::new();
                std::io::stdin().read_to_string(&mut text)?;
                text
            } else {
                std::fs::read_to_string(witness)
                    .map_err(|e| format!("cannot read witness file {witness}: {e}"))?
            };
            let pair = parse_witness(&text)?;
            let verified = verify_witness(&pair, &eu, &ev);
            match mode {
                OutputMode::Text => {
                    println!("{}", if verified { "verified" } else { "not verified" })
                }
                OutputMode::Json => println!(
                    "{}",
                    json!({
                        "equation": pair.equation.as_str(),
                        "verified": verified,
                    })
                ),
            }
            Ok(if verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Class { words } => {
            let budget = class_budget()?;
            let words = word_list(words, &mut stdin)?;
            for (i, word) in words.iter().enumerate() {
                let class = knuth_class(word, budget)
                    .map_err(|e| format!("{e} (set PLACTIC_CLASS_BUDGET to raise the limit)"))?;
                match mode {
                    OutputMode::Text => {
                        if i > 0 {
                            println!();
                        }
                        for member in &class {
                            println!("{}", member.to_text());
                        }
                    }
                    OutputMode::Json => {
                        let members: Vec<String> = class.iter().map(sep).collect();
                        println!(
                            "{}",
                            json!({
                                "word": sep(word),
                                "size": class.len(),
                                "budget": budget,
                                "class": members,
                            })
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("plactic: {err}");
            ExitCode::from(2)
        }
    }
}
