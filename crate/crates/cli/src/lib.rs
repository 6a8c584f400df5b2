//! Command-line front end. [`run`] parses arguments, dispatches one verb and
//! returns the process exit code: 0 for success or a true answer, 1 for a
//! false answer, 2 for bad input.

pub mod dot;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, ValueEnum};
use preproj::admissible::{canonical_complete, check_admissible, psi};
use preproj::io::{self, parse_letters};
use preproj::rep::{self, Preprojectivity, Representation, DEFAULT_MAX_ITER};
use preproj::weyl::{self, WeylWord};
use preproj::{AdmissibleSeq, Error, Graph, Quiver};
use serde_json::{json, Value};

const AFTER_HELP: &str = "\
Sequences and words are comma-separated vertex ids (1-based), e.g. 3,2,3;
\"-\" is the empty list. A word x1,...,xs denotes s_xs ... s_x1: the first
letter acts first. Sequences are printed in the same syntax; canonical forms
separate their segments with \" | \".

Files:
  quiver          {\"n\": 3, \"arrows\": [[1,2],[2,3]]}
                  or {\"cartan\": [[2,-1,0],...], \"arrows\": [...]}
  cartan          {\"cartan\": [[2,-1,0],...]} (any quiver file also works)
  representation  {\"quiver\": {...}, \"dims\": [d1,...],
                   \"maps\": [{\"arrow\": k, \"matrix\": [[1,\"1/2\"],...]}]}
                  k is the 0-based index into \"arrows\"; omitted arrows carry
                  the zero map; a map on s->e is dims(e) x dims(s).

JSON output fields (--format json):
  check-seq        admissible, error, final_quiver
  canon            segments, size, text
  mult             multiplicities
  equiv, preceq    result
  meet, join       sequence
  complement       meet, u, v, base
  principal        r, x, sequence
  decompose        parts [{r, x, sequence}]
  tail             tail, base, r, x
  psi              r, x, image
  word             word, matrix
  reduced          reduced, length
  principal-reduced, finite, sortable   result
  coxeter-check    powers [{m, reduced, length}], all_reduced
  sorting-word     blocks, word, sortable
  module, apply, phi-plus   representation (+ trace for apply)
  preproj          preprojective, steps
  sm, sm-brute     sequence, multiplicities
  component        nodes [{level, vertex, sequence, reduced, dims}],
                   arrows [{from, to}]

Exit codes: 0 success or true, 1 false, 2 input error.";

#[derive(Parser, Debug)]
#[command(name = "preproj", version, about = "Admissible sequences, reflection functors and Weyl group words")]
#[command(after_help = AFTER_HELP)]
pub struct Cli {
    pub verb: Verb,
    /// Quiver file.
    #[arg(short = 'q', long = "quiver")]
    pub quiver: Option<PathBuf>,
    /// Cartan matrix file.
    #[arg(long)]
    pub cartan: Option<PathBuf>,
    /// Sequence literal (for Coxeter verbs: the complete sequence K).
    #[arg(short = 's', allow_hyphen_values = true)]
    pub seq: Option<String>,
    /// Second sequence literal.
    #[arg(short = 't', allow_hyphen_values = true)]
    pub other: Option<String>,
    /// Word literal.
    #[arg(short = 'w', allow_hyphen_values = true)]
    pub word: Option<String>,
    #[arg(short = 'r')]
    pub r: Option<usize>,
    #[arg(short = 'x')]
    pub x: Option<usize>,
    /// Power or iteration count.
    #[arg(short = 'm')]
    pub m: Option<usize>,
    /// Number of levels for `component`.
    #[arg(long)]
    pub levels: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Representation file.
    #[arg(long)]
    pub module: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    /// Is -s admissible on -q?
    CheckSeq,
    /// Canonical form of -s.
    Canon,
    /// Multiplicity vector of -s.
    Mult,
    /// -s ~ -t.
    Equiv,
    /// -s ≼ -t.
    Preceq,
    /// Meet of -s and -t.
    Meet,
    /// Join of -s and -t.
    Join,
    /// Split -s and -t over their meet.
    Complement,
    /// The principal sequence S_{r,x}.
    Principal,
    /// Principal join decomposition of -s.
    Decompose,
    /// Drop the first letter of a principal -s.
    Tail,
    /// Translation-quiver vertex of a principal -s.
    Psi,
    /// Weyl group element of -s.
    Word,
    /// Is -w reduced?
    Reduced,
    /// Reducedness criterion for S_{r,x} (or a principal -s).
    PrincipalReduced,
    /// Reducedness of the powers K^0..K^m of a complete -s.
    CoxeterCheck,
    /// Is the Weyl group finite?
    Finite,
    /// c-sorting word of -w for the Coxeter element of -s.
    SortingWord,
    /// Is -w c-sortable for the Coxeter element of -s?
    Sortable,
    /// The indecomposable M(-s).
    Module,
    /// Apply the reflection functors of -s to --module.
    Apply,
    /// Apply the Coxeter functor -m times (default 1) to --module.
    PhiPlus,
    /// Is --module preprojective (at most -m Coxeter steps, default 64)?
    Preproj,
    /// Shortest annihilating sequence of an indecomposable --module.
    Sm,
    /// Shortest annihilating sequence by exhaustive search below -t.
    SmBrute,
    /// The first --levels levels of the preprojective component.
    Component,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

/// What a verb produced: both renderings plus the exit code.
struct Output {
    text: String,
    json: Value,
    dot: Option<String>,
    code: i32,
}

impl Output {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Output { text: text.into(), json, dot: None, code: 0 }
    }

    fn truth(value: bool, text: impl Into<String>, json: Value) -> Self {
        Output { code: if value { 0 } else { 1 }, ..Output::ok(text, json) }
    }
}

/// An input error; always exit code 2.
#[derive(Debug)]
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

impl From<&str> for Failure {
    fn from(s: &str) -> Self {
        Failure(s.to_string())
    }
}

type Outcome = Result<Output, Failure>;

/// Runs one command; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{rendered}") } else { write!(out, "{rendered}") };
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let body = match cli.format {
                Format::Text => o.text,
                Format::Json => serde_json::to_string_pretty(&o.json).expect("serializable"),
                Format::Dot => match o.dot {
                    Some(d) => d,
                    None => {
                        let _ = writeln!(err, "error: --format dot is only available for component");
                        return 2;
                    }
                },
            };
            let _ = write!(out, "{body}");
            if !body.ends_with('\n') {
                let _ = writeln!(out);
            }
            o.code
        }
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

impl Cli {
    fn quiver(&self) -> Result<Arc<Quiver>, Failure> {
        if let Some(p) = &self.quiver {
            return Ok(Arc::new(io::parse_quiver(&read(p)?)?));
        }
        if let Some(p) = &self.module {
            return Ok(Arc::clone(io::parse_representation(&read(p)?)?.quiver()));
        }
        Err("this verb needs -q/--quiver".into())
    }

    fn graph(&self) -> Result<Graph, Failure> {
        match (&self.cartan, &self.quiver) {
            (Some(p), _) | (None, Some(p)) => Ok(io::parse_graph(&read(p)?)?),
            (None, None) => Err("this verb needs --cartan or -q/--quiver".into()),
        }
    }

    fn module(&self) -> Result<Representation, Failure> {
        let path = self.module.as_ref().ok_or("this verb needs --module")?;
        let text = read(path)?;
        Ok(match &self.quiver {
            Some(q) => io::parse_representation_on(&text, Arc::new(io::parse_quiver(&read(q)?)?))?,
            None => io::parse_representation(&text)?,
        })
    }

    fn seq_on(&self, quiver: &Arc<Quiver>, lit: &Option<String>, flag: &str) -> Result<AdmissibleSeq, Failure> {
        let lit = lit.as_ref().ok_or_else(|| Failure(format!("this verb needs {flag}")))?;
        Ok(AdmissibleSeq::new(Arc::clone(quiver), parse_letters(lit)?)?)
    }

    fn word(&self) -> Result<WeylWord, Failure> {
        let lit = self.word.as_ref().ok_or("this verb needs -w")?;
        Ok(WeylWord::new(parse_letters(lit)?))
    }

    fn r_x(&self) -> Result<(usize, usize), Failure> {
        match (self.r, self.x) {
            (Some(r), Some(x)) => Ok((r, x)),
            _ => Err("this verb needs -r and -x".into()),
        }
    }

    /// A principal sequence from `-r -x` or, failing that, `-s`.
    fn principal(&self, quiver: &Arc<Quiver>) -> Result<AdmissibleSeq, Failure> {
        if self.r.is_some() || self.x.is_some() {
            let (r, x) = self.r_x()?;
            return Ok(AdmissibleSeq::principal(quiver, r, x)?);
        }
        self.seq_on(quiver, &self.seq, "-r and -x, or -s")
    }
}

fn lit(seq: &AdmissibleSeq) -> String {
    if seq.is_empty() {
        "-".to_string()
    } else {
        seq.to_string()
    }
}

fn dims_text(d: &[usize]) -> String {
    let parts: Vec<String> = d.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn module_text(m: &Representation) -> String {
    let mut s = format!("dims {}\n", dims_text(m.dims()));
    for (k, (&(a, b), map)) in m.quiver().arrows().iter().zip(m.maps()).enumerate() {
        if map.rows() == 0 || map.cols() == 0 {
            s.push_str(&format!("arrow {k} {a}->{b}: 0\n"));
        } else {
            s.push_str(&format!("arrow {k} {a}->{b}: {map:?}\n"));
        }
    }
    s
}

fn execute(cli: &Cli) -> Outcome {
    match cli.verb {
        Verb::CheckSeq => {
            let q = cli.quiver()?;
            let letters = parse_letters(cli.seq.as_deref().ok_or("this verb needs -s")?)?;
            match check_admissible(&q, &letters) {
                Ok((_, fin)) => Ok(Output::truth(
                    true,
                    "admissible",
                    json!({ "admissible": true, "error": null, "final_quiver": io::quiver_to_json(&fin) }),
                )),
                Err(e @ Error::NotAdmissible { .. }) => Ok(Output::truth(
                    false,
                    format!("not admissible: {e}"),
                    json!({ "admissible": false, "error": e.to_string(), "final_quiver": null }),
                )),
                Err(e) => Err(e.into()),
            }
        }
        Verb::Canon => {
            let s = cli.seq_on(&cli.quiver()?, &cli.seq, "-s")?;
            let cf = s.canonical_form()?;
            Ok(Output::ok(
                cf.to_string(),
                json!({ "segments": cf.segments(), "size": cf.size(), "text": cf.to_string() }),
            ))
        }
        Verb::Mult => {
            let m = cli.seq_on(&cli.quiver()?, &cli.seq, "-s")?.multiplicities();
            Ok(Output::ok(m.to_string(), json!({ "multiplicities": m.as_slice() })))
        }
        Verb::Equiv | Verb::Preceq => {
            let q = cli.quiver()?;
            let s = cli.seq_on(&q, &cli.seq, "-s")?;
            let t = cli.seq_on(&q, &cli.other, "-t")?;
            let r = if cli.verb == Verb::Equiv { s.equivalent(&t)? } else { s.precedes(&t)? };
            Ok(Output::truth(r, r.to_string(), json!({ "result": r })))
        }
        Verb::Meet | Verb::Join => {
            let q = cli.quiver()?;
            let s = cli.seq_on(&q, &cli.seq, "-s")?;
            let t = cli.seq_on(&q, &cli.other, "-t")?;
            let r = if cli.verb == Verb::Meet { s.meet(&t)? } else { s.join(&t)? };
            Ok(Output::ok(lit(&r), json!({ "sequence": r.letters() })))
        }
        Verb::Complement => {
            let q = cli.quiver()?;
            let s = cli.seq_on(&q, &cli.seq, "-s")?;
            let t = cli.seq_on(&q, &cli.other, "-t")?;
            let p = s.complement_pair(&t)?;
            Ok(Output::ok(
                format!("meet {}\nu {}\nv {}", lit(&p.meet), lit(&p.u), lit(&p.v)),
                json!({
                    "meet": p.meet.letters(),
                    "u": p.u.letters(),
                    "v": p.v.letters(),
                    "base": io::quiver_to_json(p.u.quiver()),
                }),
            ))
        }
        Verb::Principal => {
            let (r, x) = cli.r_x()?;
            let s = AdmissibleSeq::principal(&cli.quiver()?, r, x)?;
            Ok(Output::ok(lit(&s), json!({ "r": r, "x": x, "sequence": s.letters() })))
        }
        Verb::Decompose => {
            let q = cli.quiver()?;
            let s = cli.seq_on(&q, &cli.seq, "-s")?;
            let parts = s
                .principal_decomposition()?
                .into_iter()
                .map(|(h, v)| Ok((h, v, AdmissibleSeq::principal(&q, h, v)?)))
                .collect::<Result<Vec<_>, Failure>>()?;
            let text: Vec<String> = parts.iter().map(|(h, v, p)| format!("S({h},{v}) = {}", lit(p))).collect();
            let json_parts: Vec<Value> = parts
                .iter()
                .map(|(h, v, p)| json!({ "r": h, "x": v, "sequence": p.letters() }))
                .collect();
            Ok(Output::ok(text.join("\n"), json!({ "parts": json_parts })))
        }
        Verb::Tail => {
            let t = cli.seq_on(&cli.quiver()?, &cli.seq, "-s")?.principal_tail()?;
            Ok(Output::ok(
                format!("{} = S({},{}) on {:?}", lit(&t.tail), t.size, t.vertex, t.quiver),
                json!({
                    "tail": t.tail.letters(),
                    "base": io::quiver_to_json(&t.quiver),
                    "r": t.size,
                    "x": t.vertex,
                }),
            ))
        }
        Verb::Psi => {
            let s = cli.seq_on(&cli.quiver()?, &cli.seq, "-s")?;
            let (r, x) = s.is_principal().ok_or(Error::NotPrincipal)?;
            let (level, v) = psi(r, x);
            Ok(Output::ok(format!("({level},{v})"), json!({ "r": r, "x": x, "image": [level, v] })))
        }
        Verb::Word => {
            let q = cli.quiver()?;
            let s = cli.seq_on(&q, &cli.seq, "-s")?;
            let w = WeylWord::of_sequence(&s);
            let e = w.evaluate(q.graph())?;
            let rows: Vec<Vec<String>> =
                e.rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
            let text = if w.is_empty() { "identity".to_string() } else { w.product_notation() };
            let matrix: Vec<String> = rows.iter().map(|r| r.join(" ")).collect();
            Ok(Output::ok(
                format!("{text}\n{}", matrix.join("\n")),
                json!({ "word": w.letters(), "matrix": rows }),
            ))
        }
        Verb::Reduced => {
            let g = cli.graph()?;
            let w = cli.word()?;
            let reduced = w.is_reduced(&g)?;
            let length = w.evaluate(&g)?.length(&g);
            let text = if reduced {
                format!("reduced (length {length})")
            } else {
                format!("not reduced (length {length})")
            };
            Ok(Output::truth(reduced, text, json!({ "reduced": reduced, "length": length })))
        }
        Verb::PrincipalReduced => {
            let s = cli.principal(&cli.quiver()?)?;
            let r = weyl::principal_reduced_criterion(&s)?;
            Ok(Output::truth(r, r.to_string(), json!({ "result": r })))
        }
        Verb::CoxeterCheck => {
            let k = cli.seq_on(&cli.quiver()?, &cli.seq, "-s")?;
            let powers = weyl::coxeter_powers_reduced(&k, cli.m.unwrap_or(10))?;
            let all = powers.iter().all(|p| p.reduced);
            let text: Vec<String> = powers
                .iter()
                .map(|p| {
                    let status = if p.reduced { "reduced" } else { "not reduced" };
                    format!("m={} {status} (length {})", p.m, p.length)
                })
                .collect();
            let rows: Vec<Value> = powers
                .iter()
                .map(|p| json!({ "m": p.m, "reduced": p.reduced, "length": p.length }))
                .collect();
            Ok(Output::truth(all, text.join("\n"), json!({ "powers": rows, "all_reduced": all })))
        }
        Verb::Finite => {
            let f = weyl::weyl_is_finite(&cli.graph()?);
            Ok(Output::truth(f, if f { "finite" } else { "infinite" }, json!({ "result": f })))
        }
        Verb::SortingWord | Verb::Sortable => {
            let g = cli.graph()?;
            let c = WeylWord::new(parse_letters(cli.seq.as_deref().ok_or("this verb needs -s")?)?);
            let target = cli.word()?.evaluate(&g)?;
            let sw = weyl::c_sorting_word(&g, &c, &target)?;
            let sortable = sw.is_sortable();
            if cli.verb == Verb::Sortable {
                return Ok(Output::truth(sortable, sortable.to_string(), json!({ "result": sortable })));
            }
            let text = if sw.blocks().is_empty() { "-".to_string() } else { sw.to_string() };
            Ok(Output::ok(
                text,
                json!({ "blocks": sw.blocks(), "word": sw.to_word().letters(), "sortable": sortable }),
            ))
        }
        Verb::Module => {
            let m = rep::build_m(&cli.seq_on(&cli.quiver()?, &cli.seq, "-s")?)?;
            Ok(Output::ok(module_text(&m), json!({ "representation": io::representation_to_json(&m) })))
        }
        Verb::Apply => {
            let m = cli.module()?;
            let s = cli.seq_on(m.quiver(), &cli.seq, "-s")?;
            let trace = m.trace_sequence(&s)?;
            let last = trace.last().expect("trace starts with the input");
            let dims: Vec<&[usize]> = trace.iter().map(|t| t.dims()).collect();
            let steps: Vec<String> = dims.iter().map(|d| dims_text(d)).collect();
            Ok(Output::ok(
                format!("{}\n{}", steps.join(" -> "), module_text(last)),
                json!({ "trace": dims, "representation": io::representation_to_json(last) }),
            ))
        }
        Verb::PhiPlus => {
            let mut m = cli.module()?;
            for _ in 0..cli.m.unwrap_or(1) {
                m = m.coxeter_plus();
            }
            Ok(Output::ok(module_text(&m), json!({ "representation": io::representation_to_json(&m) })))
        }
        Verb::Preproj => {
            let m = cli.module()?;
            let max_iter = cli.m.unwrap_or(DEFAULT_MAX_ITER);
            Ok(match m.is_preprojective(max_iter) {
                Preprojectivity::Preprojective(k) => Output::truth(
                    true,
                    format!("preprojective ({k} Coxeter steps to zero)"),
                    json!({ "preprojective": true, "steps": k }),
                ),
                Preprojectivity::Undecided => Output::truth(
                    false,
                    format!("undecided after {max_iter} Coxeter steps"),
                    json!({ "preprojective": null, "steps": null }),
                ),
            })
        }
        Verb::Sm | Verb::SmBrute => {
            let m = cli.module()?;
            let max_iter = cli.m.unwrap_or(DEFAULT_MAX_ITER);
            let s = if cli.verb == Verb::Sm {
                rep::shortest_annihilator_indec(&m, max_iter)?
            } else {
                let bound = match &cli.other {
                    Some(_) => cli.seq_on(m.quiver(), &cli.other, "-t")?,
                    None => match m.is_preprojective(max_iter) {
                        Preprojectivity::Preprojective(k) => canonical_complete(m.quiver()).power(k)?,
                        Preprojectivity::Undecided => return Err(Error::Undecided(max_iter).into()),
                    },
                };
                rep::shortest_annihilator_bruteforce(&m, &bound)?
            };
            let mv = s.multiplicities();
            Ok(Output::ok(lit(&s), json!({ "sequence": s.letters(), "multiplicities": mv.as_slice() })))
        }
        Verb::Component => {
            let q = cli.quiver()?;
            let levels = cli.levels.ok_or("this verb needs --levels")?;
            if levels == 0 {
                return Err("--levels must be at least 1".into());
            }
            let c = dot::component(&q, levels)?;
            Ok(Output { dot: Some(dot::to_dot(&c)), ..Output::ok(dot::to_text(&c), dot::to_json(&c)) })
        }
    }
}
