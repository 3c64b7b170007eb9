//! The `gis` command line: graph analysis, element arithmetic, path sets,
//! factorizations, structure maps and the verification suite.
//!
//! Exit codes: 0 on success, 1 on domain errors, 2 on usage and parse
//! errors, 3 when `verify` or `iso-check` finds a failing check.

use std::fs;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use gis::element::{green, multiply, parse_element, Relation};
use gis::graph::{BlockId, Graph, VertexId};
use gis::path::{cycle_factorize, enumerate, factor_at_component, factor_at_vertex, parse_path};
use gis::path::{Anchor, SetKind};
use gis::polycyclic::{Alphabet, Polycyclic};
use gis::structure::{
    iso_checks, structural_report, verify_suite_with, ComponentStructure, LocalStructure,
    VerificationReport, DEFAULT_SAMPLES,
};
use gis::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "gis", version, about = "Graph inverse semigroups: structure and arithmetic")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Graph document (JSON); `-` reads standard input.
    pub graph: String,
    /// Emit the JSON document instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct AnchorArgs {
    /// Anchor vertex.
    #[arg(long, conflicts_with = "component")]
    pub vertex: Option<String>,
    /// Anchor component, as a comma-separated vertex list.
    #[arg(long)]
    pub component: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the structure report.
    Analyze {
        #[command(flatten)]
        io: GraphArgs,
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
    /// Multiply two elements.
    Mul {
        #[command(flatten)]
        io: GraphArgs,
        x: String,
        y: String,
    },
    /// Decide a Green's relation between two elements.
    Green {
        #[command(flatten)]
        io: GraphArgs,
        #[arg(long)]
        relation: String,
        x: String,
        y: String,
    },
    /// Enumerate an anchored path set up to the bound.
    Enum {
        #[command(flatten)]
        io: GraphArgs,
        /// One of I_e, Q_e, C_e, C1_e, I_A, Q_A.
        #[arg(long)]
        set: String,
        #[command(flatten)]
        anchor: AnchorArgs,
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
    /// Factor a path at its first visit of a vertex or component, or cut a
    /// cycle into first-return cycles.
    Factor {
        #[command(flatten)]
        io: GraphArgs,
        #[command(flatten)]
        anchor: AnchorArgs,
        /// Cut a cycle at the anchor vertex into first-return cycles.
        #[arg(long)]
        cycles: bool,
        path: String,
    },
    /// Map an element through f, h or the J-class embedding, or run the
    /// isomorphism checks when no element is given.
    IsoCheck {
        #[command(flatten)]
        io: GraphArgs,
        #[command(flatten)]
        anchor: AnchorArgs,
        #[arg(long, default_value_t = 4)]
        bound: usize,
        element: Option<String>,
    },
    /// Polycyclic monoid arithmetic on generator words.
    Poly {
        #[command(subcommand)]
        op: PolyOp,
    },
    /// Run the verification suite.
    Verify {
        #[command(flatten)]
        io: GraphArgs,
        #[arg(long, default_value_t = 4)]
        bound: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random triples drawn by the axiom check.
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum PolyOp {
    /// Reduce a word such as "p q' 1" to normal form.
    Reduce {
        /// Comma-separated generator names.
        #[arg(long)]
        alphabet: String,
        #[arg(long)]
        json: bool,
        word: String,
    },
    /// Multiply two words.
    Mul {
        #[arg(long)]
        alphabet: String,
        #[arg(long)]
        json: bool,
        x: String,
        y: String,
    },
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Syntax { .. } | Error::MalformedGraph(_) | Error::InvalidId(_) => EXIT_USAGE,
            _ => EXIT_DOMAIN,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<i32, Failure>;

/// Terminal styling; disabled by `GIS_COLOR=0` or when not writing to a
/// terminal.
#[derive(Debug, Clone, Copy, Default)]
pub struct Style {
    pub color: bool,
}

impl Style {
    fn paint(self, code: &str, text: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{text}\x1b[0m")
        } else {
            text.to_string()
        }
    }
}

struct Ctx<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    style: Style,
}

impl Ctx<'_> {
    fn load(&mut self, path: &str) -> Result<Graph, Failure> {
        let text = if path == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(|e| Failure {
                code: EXIT_DOMAIN,
                message: format!("cannot read standard input: {e}"),
            })?;
            s
        } else {
            fs::read_to_string(path).map_err(|e| Failure {
                code: EXIT_DOMAIN,
                message: format!("cannot read {path}: {e}"),
            })?
        };
        Ok(Graph::from_json(&text)?)
    }

    fn line(&mut self, text: &str) -> Result<(), Failure> {
        writeln!(self.out, "{text}").map_err(|e| Failure {
            code: EXIT_DOMAIN,
            message: format!("cannot write output: {e}"),
        })
    }

    fn emit(&mut self, json: bool, doc: Value, text: &str) -> Outcome {
        if json {
            let s = serde_json::to_string_pretty(&doc).expect("documents serialize");
            self.line(&s)?;
        } else {
            self.line(text)?;
        }
        Ok(EXIT_OK)
    }
}

fn block_of(g: &Graph, spec: &str) -> Result<BlockId, Failure> {
    let inner = spec.trim().trim_start_matches('{').trim_end_matches('}');
    let vertices = inner
        .split(',')
        .map(|v| g.vertex(v.trim()))
        .collect::<Result<Vec<VertexId>, Error>>()?;
    Ok(g.components().find_block(&vertices)?)
}

enum Anchored {
    Vertex(VertexId),
    Component(BlockId),
}

fn anchor(g: &Graph, a: &AnchorArgs) -> Result<Option<Anchored>, Failure> {
    Ok(match (&a.vertex, &a.component) {
        (Some(v), _) => Some(Anchored::Vertex(g.vertex(v)?)),
        (None, Some(c)) => Some(Anchored::Component(block_of(g, c)?)),
        (None, None) => None,
    })
}

fn usage(message: &str) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn report_outcome(cx: &mut Ctx, json: bool, report: &VerificationReport) -> Outcome {
    if json {
        let s = serde_json::to_string_pretty(report).expect("reports serialize");
        cx.line(&s)?;
    } else {
        let style = cx.style;
        let text = report
            .to_string()
            .lines()
            .map(|l| {
                if let Some(rest) = l.strip_prefix("ok  ") {
                    format!("{}{rest}", style.paint("32", "ok  "))
                } else if let Some(rest) = l.strip_prefix("FAIL") {
                    format!("{}{rest}", style.paint("31;1", "FAIL"))
                } else {
                    l.to_string()
                }
            })
            .collect::<Vec<_>>()
            .join("\n");
        cx.line(&text)?;
    }
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn analyze(cx: &mut Ctx, io: &GraphArgs, bound: usize) -> Outcome {
    let g = cx.load(&io.graph)?;
    let report = structural_report(&g, bound)?;
    if io.json {
        let s = serde_json::to_string_pretty(&report).expect("reports serialize");
        cx.line(&s)?;
    } else {
        let text = report.to_string();
        cx.line(text.trim_end())?;
    }
    Ok(EXIT_OK)
}

fn mul(cx: &mut Ctx, io: &GraphArgs, x: &str, y: &str) -> Outcome {
    let g = cx.load(&io.graph)?;
    let x = parse_element(&g, x)?;
    let y = parse_element(&g, y)?;
    let lit = multiply(&g, &x, &y)?.to_literal(&g);
    cx.emit(io.json, json!({ "product": lit }), &lit)
}

fn green_cmd(cx: &mut Ctx, io: &GraphArgs, relation: &str, x: &str, y: &str) -> Outcome {
    let g = cx.load(&io.graph)?;
    let rel: Relation = relation.parse()?;
    let x = parse_element(&g, x)?;
    let y = parse_element(&g, y)?;
    let related = green(&g, rel, &x, &y)?;
    cx.emit(
        io.json,
        json!({ "relation": rel.to_string(), "related": related }),
        &related.to_string(),
    )
}

fn enum_cmd(cx: &mut Ctx, io: &GraphArgs, set: &str, a: &AnchorArgs, bound: usize) -> Outcome {
    let g = cx.load(&io.graph)?;
    let kind: SetKind = set.parse()?;
    let anchor = match (anchor(&g, a)?, kind.is_component_kind()) {
        (Some(Anchored::Vertex(v)), false) => Anchor::Vertex(v),
        (Some(Anchored::Component(b)), true) => Anchor::Component(b),
        (_, false) => return Err(usage("vertex sets need --vertex")),
        (_, true) => return Err(usage("component sets need --component")),
    };
    let ps = enumerate(&g, kind, anchor, bound)?;
    let members: Vec<String> = ps.members.iter().map(|p| p.to_literal(&g)).collect();
    let mut text = members.join("\n");
    if !text.is_empty() {
        text.push('\n');
    }
    let tail = if ps.complete {
        format!("# {} members, complete", members.len())
    } else {
        format!("# {} members, incomplete at bound {bound}", members.len())
    };
    text.push_str(&tail);
    cx.emit(
        io.json,
        json!({
            "set": kind.name(),
            "bound": bound,
            "complete": ps.complete,
            "members": members,
        }),
        &text,
    )
}

fn factor(cx: &mut Ctx, io: &GraphArgs, a: &AnchorArgs, cycles: bool, path: &str) -> Outcome {
    let g = cx.load(&io.graph)?;
    let u = parse_path(&g, path)?;
    match (anchor(&g, a)?, cycles) {
        (Some(Anchored::Vertex(e)), true) => {
            let parts: Vec<String> = cycle_factorize(&g, &u, e)?
                .iter()
                .map(|c| c.to_literal(&g))
                .collect();
            let text = parts.join(" ");
            cx.emit(io.json, json!({ "factors": parts }), &text)
        }
        (_, true) => Err(usage("--cycles needs --vertex")),
        (Some(anchored), false) => {
            let (u1, u2) = match anchored {
                Anchored::Vertex(e) => factor_at_vertex(&g, &u, e)?,
                Anchored::Component(b) => factor_at_component(&g, &u, b)?,
            };
            let (u1, u2) = (u1.to_literal(&g), u2.to_literal(&g));
            let text = format!("u1={u1} u2={u2}");
            cx.emit(io.json, json!({ "u1": u1, "u2": u2 }), &text)
        }
        (None, false) => Err(usage("factor needs --vertex or --component")),
    }
}

fn iso_check(
    cx: &mut Ctx,
    io: &GraphArgs,
    a: &AnchorArgs,
    bound: usize,
    element: Option<&str>,
) -> Outcome {
    let g = cx.load(&io.graph)?;
    let Some(text) = element else {
        let report = iso_checks(&g, bound)?;
        return report_outcome(cx, io.json, &report);
    };
    let x = parse_element(&g, text)?;
    match anchor(&g, a)? {
        Some(Anchored::Vertex(e)) => {
            let ls = LocalStructure::new(&g, e, bound)?;
            let h = ls.render(&g, &ls.dclass_to_brandt(&g, &x)?);
            let f = match ls.cycles_to_poly(&g, &x) {
                Ok(p) => Some(ls.monoid().to_literal(&p)),
                Err(Error::OutsideDomain { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            let mut lines = vec![format!("h = {h}")];
            if let Some(f) = &f {
                lines.push(format!("f = {f}"));
            }
            cx.emit(io.json, json!({ "h": h, "f": f }), &lines.join("\n"))
        }
        Some(Anchored::Component(b)) => {
            let st = ComponentStructure::new(&g, b, bound)?;
            let y = st.render(&g, &st.embed(&g, &x)?);
            cx.emit(io.json, json!({ "embed": y }), &format!("embed = {y}"))
        }
        None => Err(usage("mapping an element needs --vertex or --component")),
    }
}

fn poly(cx: &mut Ctx, op: &PolyOp) -> Outcome {
    match op {
        PolyOp::Reduce {
            alphabet,
            json,
            word,
        } => {
            let p = Polycyclic::new(Alphabet::parse(alphabet).map_err(alphabet_error)?);
            let x = p.reduce(&p.parse_word(word)?)?;
            let lit = p.to_literal(&x);
            cx.emit(*json, json!({ "normal_form": lit }), &lit)
        }
        PolyOp::Mul {
            alphabet,
            json,
            x,
            y,
        } => {
            let p = Polycyclic::new(Alphabet::parse(alphabet).map_err(alphabet_error)?);
            let x = p.reduce(&p.parse_word(x)?)?;
            let y = p.reduce(&p.parse_word(y)?)?;
            let lit = p.to_literal(&p.multiply(&x, &y)?);
            cx.emit(*json, json!({ "product": lit }), &lit)
        }
    }
}

fn alphabet_error(e: Error) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: format!("bad --alphabet: {e}"),
    }
}

fn verify(cx: &mut Ctx, io: &GraphArgs, bound: usize, seed: u64, samples: usize) -> Outcome {
    let g = cx.load(&io.graph)?;
    let report = verify_suite_with(&g, bound, seed, samples)?;
    report_outcome(cx, io.json, &report)
}

fn dispatch(cx: &mut Ctx, cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Analyze { io, bound } => analyze(cx, io, *bound),
        Command::Mul { io, x, y } => mul(cx, io, x, y),
        Command::Green { io, relation, x, y } => green_cmd(cx, io, relation, x, y),
        Command::Enum {
            io,
            set,
            anchor,
            bound,
        } => enum_cmd(cx, io, set, anchor, *bound),
        Command::Factor {
            io,
            anchor,
            cycles,
            path,
        } => factor(cx, io, anchor, *cycles, path),
        Command::IsoCheck {
            io,
            anchor,
            bound,
            element,
        } => iso_check(cx, io, anchor, *bound, element.as_deref()),
        Command::Poly { op } => poly(cx, op),
        Command::Verify {
            io,
            bound,
            seed,
            samples,
        } => verify(cx, io, *bound, *seed, *samples),
    }
}

/// Runs one invocation and returns its exit code. `args` includes the
/// program name.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
    style: Style,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    let mut cx = Ctx {
        stdin,
        out: stdout,
        style,
    };
    match dispatch(&mut cx, &cli) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "{}: {}", style.paint("31", "error"), f.message);
            f.code
        }
    }
}
