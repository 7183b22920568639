use std::fmt::Write as _;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;
use thompson_core::coloring::{
    chromatic, coefficient, factor_budget, factor_member, membership, normalize_coloring, Subgroup,
};
use thompson_core::grafting::{gx_generator, gx_to_word, phi, search_representative, Pattern};
use thompson_core::oracles::enumerate_elements;
use thompson_core::presentations::FNWord;
use thompson_core::trees::{x_generator, Dyadic, TreePair};

/// Exact arithmetic in Thompson's group F and its Jones and 3-colorable subgroups.
///
/// ELEMENT arguments take either tree-pair text such as `((LL)L)|(L(LL))`
/// or a word in the standard generators such as `x0 x1^-1`. Text starting
/// with `(` or `L` is a tree pair; anything else is read as a word.
#[derive(Parser)]
#[command(name = "thompson", version)]
struct Cli {
    /// Emit JSON records instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SubgroupArg {
    #[arg(long, default_value = "vecf")]
    subgroup: Subgroup,
}

#[derive(Subcommand)]
enum Command {
    /// Product g*h, i.e. apply h first.
    Mul {
        g: String,
        h: String,
    },
    Inv {
        element: String,
    },
    /// Reduced form of a possibly unreduced pair.
    Reduce {
        element: String,
    },
    /// Image of a dyadic point such as `3/2^2`.
    Eval {
        element: String,
        point: String,
    },
    /// Generator x_i of F, or t_i of F_N through a pattern.
    Gen {
        index: usize,
        #[arg(long)]
        pattern: Option<String>,
    },
    /// Region graph of an element.
    Gamma {
        element: String,
        #[command(flatten)]
        subgroup: SubgroupArg,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
    },
    /// Number of proper q-colorings of the region graph.
    Chromatic {
        element: String,
        #[arg(long)]
        q: u32,
        #[command(flatten)]
        subgroup: SubgroupArg,
    },
    Member {
        element: String,
        #[command(flatten)]
        subgroup: SubgroupArg,
    },
    Coefficient {
        element: String,
        #[command(flatten)]
        subgroup: SubgroupArg,
    },
    /// Insert carets until the coloring has the canonical pattern.
    Normalize {
        element: String,
        #[command(flatten)]
        subgroup: SubgroupArg,
    },
    /// Word in F_3 (vecf) or F_4 (3col) generators for a member.
    Factor {
        element: String,
        #[command(flatten)]
        subgroup: SubgroupArg,
    },
    /// Image in F of an F_N word under the pattern `vecf`, `3col` or a tree.
    Phi {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        word: String,
    },
    /// F_N word for an element of the image of the pattern, after caret insertion if needed.
    Toword {
        element: String,
        #[arg(long)]
        pattern: String,
    },
    /// Every reduced pair with at most the given number of leaves.
    Enumerate {
        #[arg(long)]
        max_leaves: usize,
        /// Print member counts per leaf bound instead of the elements.
        #[arg(long)]
        stats: bool,
    },
}

fn parse_element(text: &str) -> Result<TreePair> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('(') || trimmed.starts_with('L') {
        return trimmed
            .parse()
            .with_context(|| format!("bad tree pair {text:?}"));
    }
    let word = FNWord::parse(text, 2).with_context(|| format!("bad word {text:?}"))?;
    Ok(phi(&word, &Pattern::right_comb(2)?)?.f_image())
}

fn parse_pattern(text: &str) -> Result<Pattern> {
    Pattern::from_name(text).with_context(|| format!("bad pattern {text:?}"))
}

struct Output {
    json: bool,
    text: String,
}

impl Output {
    fn pair(&mut self, p: &TreePair) {
        if self.json {
            self.line(serde_json::to_string(&p.to_record()).expect("plain data"));
        } else {
            self.line(p.to_string());
        }
    }

    fn word(&mut self, w: &FNWord) {
        if self.json {
            self.line(serde_json::to_string(w).expect("plain data"));
        } else {
            self.line(w.to_string());
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }
}

fn run(cli: Cli) -> Result<String> {
    let mut out = Output {
        json: cli.json,
        text: String::new(),
    };
    match cli.command {
        Command::Mul { g, h } => {
            let p = parse_element(&g)?.multiply(&parse_element(&h)?);
            out.pair(&p);
        }
        Command::Inv { element } => out.pair(&parse_element(&element)?.inverse()),
        Command::Reduce { element } => out.pair(&parse_element(&element)?.reduce()),
        Command::Eval { element, point } => {
            let p = parse_element(&element)?;
            let x: Dyadic = point
                .parse()
                .with_context(|| format!("bad point {point:?}"))?;
            let y = p.eval(&x)?;
            if out.json {
                out.line(json!({ "x": x.to_string(), "y": y.to_string() }).to_string());
            } else {
                out.line(y.to_string());
            }
        }
        Command::Gen { index, pattern } => match pattern {
            None => out.pair(&x_generator(index)),
            Some(name) => out.pair(&gx_generator(index, &parse_pattern(&name)?).f_image()),
        },
        Command::Gamma {
            element,
            subgroup,
            dot,
        } => {
            let g = subgroup.subgroup.gamma(&parse_element(&element)?);
            if dot {
                out.text.push_str(&g.to_dot());
            } else if out.json {
                out.line(g.to_json());
            } else {
                let edges = g.edges().iter().fold(String::new(), |mut s, (i, j)| {
                    write!(s, " {i}-{j}").unwrap();
                    s
                });
                out.line(format!("vertices {} edges{edges}", g.vertex_count()));
            }
        }
        Command::Chromatic {
            element,
            q,
            subgroup,
        } => {
            let g = subgroup.subgroup.gamma(&parse_element(&element)?);
            let count = chromatic(&g, q)?;
            if out.json {
                out.line(json!({ "q": q, "count": count.to_string() }).to_string());
            } else {
                out.line(count.to_string());
            }
        }
        Command::Member { element, subgroup } => {
            out.line(membership(&parse_element(&element)?, subgroup.subgroup).to_string());
        }
        Command::Coefficient { element, subgroup } => {
            out.line(coefficient(&parse_element(&element)?, subgroup.subgroup).to_string());
        }
        Command::Normalize { element, subgroup } => {
            let n = normalize_coloring(&parse_element(&element)?, subgroup.subgroup)?;
            let colors: String = n
                .coloring
                .colors
                .iter()
                .map(|c| char::from(b'0' + c))
                .collect();
            if out.json {
                let record = n.pair.to_record();
                out.line(
                    json!({
                        "plus": record.plus,
                        "minus": record.minus,
                        "colors": n.coloring.colors,
                        "insertions": n.insertions,
                    })
                    .to_string(),
                );
            } else {
                out.line(n.pair.to_string());
                out.line(format!("colors {colors}"));
                out.line(format!("insertions {}", n.insertions));
            }
        }
        Command::Factor { element, subgroup } => {
            out.word(&factor_member(
                &parse_element(&element)?,
                subgroup.subgroup,
            )?);
        }
        Command::Phi { pattern, word } => {
            let x = parse_pattern(&pattern)?;
            let w =
                FNWord::parse(&word, x.arity()).with_context(|| format!("bad word {word:?}"))?;
            out.pair(&phi(&w, &x)?.f_image());
        }
        Command::Toword { element, pattern } => {
            let x = parse_pattern(&pattern)?;
            let p = parse_element(&element)?;
            let g = search_representative(&p, &x, factor_budget(&p))?;
            out.word(&gx_to_word(&g));
        }
        Command::Enumerate { max_leaves, stats } => {
            let corpus = enumerate_elements(max_leaves)?;
            if stats {
                let mut rows = vec![[0usize; 3]; max_leaves + 1];
                for p in corpus {
                    let row = &mut rows[p.leaf_count()];
                    row[0] += 1;
                    row[1] += usize::from(membership(&p, Subgroup::Vecf));
                    row[2] += usize::from(membership(&p, Subgroup::ThreeCol));
                }
                let mut total = [0usize; 3];
                if !out.json {
                    out.line("leaves\telements\tvecf\t3col");
                }
                for (n, row) in rows.iter().enumerate().skip(1) {
                    for k in 0..3 {
                        total[k] += row[k];
                    }
                    if out.json {
                        out.line(
                            json!({ "max_leaves": n, "elements": total[0], "vecf": total[1], "3col": total[2] })
                                .to_string(),
                        );
                    } else {
                        out.line(format!("{n}\t{}\t{}\t{}", total[0], total[1], total[2]));
                    }
                }
            } else {
                for p in corpus {
                    out.pair(&p);
                }
            }
        }
    }
    Ok(out.text)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            eprintln!("{first}");
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
