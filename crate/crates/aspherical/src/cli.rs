//! The batch command-line front end.
//!
//! Every subcommand prints either an aligned plain-text report (`--format table`,
//! the default) or a JSON document (`--format json`). Exit codes: 0 on success, 2
//! on usage errors, 3 on domain errors (the error's stable name goes to stderr).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::crystal::{depth_by_descent, e_tilde, f_tilde, reduce_signature, signature, Convention};
use crate::error::{Error, Result};
use crate::ideals::{annihilated_simples, annihilation_threshold, cherednik_chain, grass_chain, k0_kernel, IdealChain};
use crate::multipartition::{MultiPartition, ZClass};
use crate::parameters::{
    c_to_h, c_to_s, enumerate_aspherical_hyperplanes, h_to_c, h_to_s, is_aspherical_c, s_to_c, s_to_h, CParams,
    ExactScalar, HParams, HyperplaneParams, KappaMode, SParams,
};
use crate::quiver::{cherednik_slice, grassmann_slice, SliceQuiver};
use crate::supports::{closed_form_depth, supports_table};

#[derive(Parser, Debug)]
#[command(name = "aspherical", version, about = "Category O combinatorics at aspherical parameters")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parameter systems and the aspherical locus.
    #[command(subcommand)]
    Params(ParamsCommand),
    /// Crystal operators and depth.
    #[command(subcommand)]
    Crystal(CrystalCommand),
    /// Supports of simple modules.
    #[command(subcommand)]
    Supports(SupportsCommand),
    /// Slice quivers.
    #[command(subcommand)]
    Quiver(QuiverCommand),
    /// Chains of two-sided ideals and annihilated simples.
    #[command(subcommand)]
    Ideals(IdealsCommand),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum System {
    C,
    H,
    S,
}

/// A parameter point in any of the three systems; lists are comma separated and
/// entries may involve `κ` (written `k`), e.g. `1/2 + k^-1`.
#[derive(Args, Debug)]
struct PointArgs {
    /// Number of components ℓ (inferred from the list when omitted).
    #[arg(long)]
    ell: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    c0: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    d: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    kappa: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    h: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
}

#[derive(Subcommand, Debug)]
enum ParamsCommand {
    /// Convert a point between the (c0,d), (κ,h) and (κ,s) systems.
    Convert {
        #[arg(long, value_enum)]
        from: System,
        #[arg(long, value_enum)]
        to: System,
        #[command(flatten)]
        point: PointArgs,
    },
    /// Test a point for asphericity at rank n.
    Aspherical {
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        point: PointArgs,
    },
    /// List the aspherical hyperplanes for (ℓ, n) in (i,j,m,t) form.
    Hyperplanes {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        n: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Op {
    E,
    F,
}

#[derive(Subcommand, Debug)]
enum CrystalCommand {
    /// Apply ẽ_z or f̃_z to an ℓ-partition.
    Apply {
        #[arg(long, value_enum)]
        op: Op,
        /// The z-class as `component:content`.
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long)]
        nu: String,
        #[arg(long, allow_hyphen_values = true)]
        hyperplane: String,
        #[arg(long, default_value = "printed")]
        convention: String,
    },
    /// Depth of an ℓ-partition by descent and by the closed form.
    Depth {
        #[arg(long)]
        nu: String,
        #[arg(long, allow_hyphen_values = true)]
        hyperplane: String,
        #[arg(long, default_value = "printed")]
        convention: String,
    },
}

#[derive(Subcommand, Debug)]
enum SupportsCommand {
    /// Depth, support dimension, rectangle index and singularity over P_ℓ(n).
    Table {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        hyperplane: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Preset {
    Cherednik,
    Grassmann,
}

#[derive(Subcommand, Debug)]
enum QuiverCommand {
    /// Slice quivers of a preset family, for one s or for every s.
    Slice {
        #[arg(long, value_enum)]
        preset: Preset,
        #[arg(long)]
        ell: Option<usize>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        hyperplane: Option<String>,
        #[arg(long)]
        v: Option<u64>,
        #[arg(long)]
        w: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<i64>,
        #[arg(long)]
        s: Option<u64>,
    },
}

/// Either a Cherednik hyperplane (`--ell --n --hyperplane`) or a Grassmannian
/// (`--v --w --lambda`).
#[derive(Args, Debug)]
struct ChainArgs {
    #[arg(long)]
    ell: Option<usize>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    hyperplane: Option<String>,
    #[arg(long)]
    v: Option<u64>,
    #[arg(long)]
    w: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<i64>,
}

#[derive(Args, Debug)]
struct HyperplaneArgs {
    #[arg(long)]
    ell: usize,
    #[arg(long)]
    n: u64,
    #[arg(long, allow_hyphen_values = true)]
    hyperplane: String,
}

#[derive(Subcommand, Debug)]
enum IdealsCommand {
    /// The chain of all two-sided ideals.
    Chain(ChainArgs),
    /// The simples killed by the averaging idempotent.
    Annihilated(HyperplaneArgs),
    /// Generators of the kernel of K₀(O) → K₀(O^sph).
    K0(HyperplaneArgs),
}

/// A command failure: bad usage (exit 2) or a domain error (exit 3).
enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = std::result::Result<String, Failure>;

/// Runs the front end on `args` (including the program name), writing the report
/// to `out` and diagnostics to `err`; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match dispatch(&cli) {
        Ok(text) => {
            let _ = write!(out, "{text}");
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "{}: {e}", e.name());
            3
        }
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    let fmt = cli.format;
    match &cli.command {
        Command::Params(cmd) => params(cmd, fmt),
        Command::Crystal(cmd) => crystal(cmd, fmt),
        Command::Supports(SupportsCommand::Table { ell, n, hyperplane }) => {
            let hp = HyperplaneParams::parse(*ell, hyperplane)?;
            let rows = supports_table(&hp, *n)?;
            if fmt == Format::Json {
                return json(&rows);
            }
            let body = rows
                .iter()
                .map(|r| {
                    vec![
                        r.nu.to_string(),
                        r.depth.to_string(),
                        r.support_dim.to_string(),
                        r.rectangle_index.to_string(),
                        yes_no(r.singular).into(),
                    ]
                })
                .collect();
            Ok(table(&["nu", "depth", "support_dim", "rectangle_index", "singular"], body))
        }
        Command::Quiver(QuiverCommand::Slice { preset, ell, n, hyperplane, v, w, lambda, s }) => {
            quiver_slice(*preset, *ell, *n, hyperplane.as_deref(), *v, *w, *lambda, *s, fmt)
        }
        Command::Ideals(cmd) => ideals(cmd, fmt),
    }
}

fn json<T: Serialize + ?Sized>(value: &T) -> Outcome {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in &rows {
        for (k, cell) in row.iter().enumerate() {
            widths[k] = widths[k].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let header: Vec<String> = header.iter().map(|h| h.to_string()).collect();
    for row in std::iter::once(&header).chain(rows.iter()) {
        let cells: Vec<String> =
            row.iter().enumerate().map(|(k, c)| format!("{c}{}", " ".repeat(widths[k] - c.chars().count()))).collect();
        let _ = writeln!(out, "{}", cells.join("  ").trim_end());
    }
    out
}

fn need<T: Copy>(value: Option<T>, flag: &str) -> std::result::Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("--{flag} is required here")))
}

fn scalar(text: &str) -> Result<ExactScalar> {
    ExactScalar::parse(text, &KappaMode::Transcendental)
}

fn scalar_list(text: &str) -> Result<Vec<ExactScalar>> {
    text.split(',').map(|x| scalar(x.trim())).collect()
}

fn check_ell(ell: Option<usize>, list: &[ExactScalar]) -> std::result::Result<(), Failure> {
    match ell {
        Some(e) if e != list.len() => Err(Failure::Domain(Error::LengthMismatch { expected: e, got: list.len() })),
        _ => Ok(()),
    }
}

fn required<'a>(value: &'a Option<String>, flag: &str) -> std::result::Result<&'a str, Failure> {
    value.as_deref().ok_or_else(|| Failure::Usage(format!("--{flag} is required here")))
}

/// The point given on the command line, converted to the (c0, d) system.
fn read_point(system: System, p: &PointArgs) -> std::result::Result<CParams, Failure> {
    match system {
        System::C => {
            let d = scalar_list(required(&p.d, "d")?)?;
            check_ell(p.ell, &d)?;
            Ok(CParams::new(d.len(), scalar(required(&p.c0, "c0")?)?, d)?)
        }
        System::H => {
            let h = scalar_list(required(&p.h, "h")?)?;
            check_ell(p.ell, &h)?;
            Ok(h_to_c(&HParams::new(h.len(), scalar(required(&p.kappa, "kappa")?)?, h)?)?)
        }
        System::S => {
            let s = scalar_list(required(&p.s, "s")?)?;
            check_ell(p.ell, &s)?;
            Ok(s_to_c(&SParams::new(s.len(), scalar(required(&p.kappa, "kappa")?)?, s)?)?)
        }
    }
}

fn input_system(p: &PointArgs) -> System {
    if p.s.is_some() {
        System::S
    } else if p.h.is_some() {
        System::H
    } else {
        System::C
    }
}

fn join(xs: &[ExactScalar]) -> String {
    xs.iter().map(ExactScalar::to_string).collect::<Vec<_>>().join(", ")
}

fn params(cmd: &ParamsCommand, fmt: Format) -> Outcome {
    match cmd {
        ParamsCommand::Convert { from, to, point } => {
            let c = read_point(*from, point)?;
            // Convert from the given system directly when possible, so the output
            // does not depend on a round trip through (c0, d).
            let (label, kappa, values, value): (&str, Option<ExactScalar>, Vec<ExactScalar>, serde_json::Value) =
                match to {
                    System::C => ("d", None, c.d.clone(), to_value(&c)?),
                    System::H => {
                        let h = match from {
                            System::S => s_to_h(&SParams::new(
                                c.ell,
                                scalar(required(&point.kappa, "kappa")?)?,
                                scalar_list(required(&point.s, "s")?)?,
                            )?)?,
                            _ => c_to_h(&c)?,
                        };
                        ("h", Some(h.kappa.clone()), h.h.clone(), to_value(&h)?)
                    }
                    System::S => {
                        let s = match from {
                            System::H => h_to_s(&HParams::new(
                                c.ell,
                                scalar(required(&point.kappa, "kappa")?)?,
                                scalar_list(required(&point.h, "h")?)?,
                            )?)?,
                            _ => c_to_s(&c)?,
                        };
                        ("s", Some(s.kappa.clone()), s.s.clone(), to_value(&s)?)
                    }
                };
            if fmt == Format::Json {
                return json(&value);
            }
            let mut text = String::new();
            match kappa {
                Some(k) => {
                    let _ = writeln!(text, "κ = {k}");
                }
                None => {
                    let _ = writeln!(text, "c0 = {}", c.c0);
                }
            }
            let _ = writeln!(text, "{label} = ({})", join(&values));
            Ok(text)
        }
        ParamsCommand::Aspherical { n, point } => {
            let c = read_point(input_system(point), point)?;
            let witness = is_aspherical_c(&c, *n)?;
            let hyperplane = witness.as_ref().and_then(|w| w.hyperplane(c.ell));
            if fmt == Format::Json {
                #[derive(Serialize)]
                struct Report<'a> {
                    aspherical: bool,
                    witness: Option<&'a crate::parameters::CWitness>,
                    hyperplane: Option<HyperplaneParams>,
                }
                return json(&Report { aspherical: witness.is_some(), witness: witness.as_ref(), hyperplane });
            }
            let mut text = format!("aspherical: {}\n", yes_no(witness.is_some()));
            if let Some(w) = &witness {
                let _ = writeln!(text, "witness: {w:?}");
            }
            if let Some(hp) = hyperplane {
                let _ = writeln!(text, "hyperplane: {hp}");
            }
            Ok(text)
        }
        ParamsCommand::Hyperplanes { ell, n } => {
            let list = enumerate_aspherical_hyperplanes(*ell, *n)?;
            if fmt == Format::Json {
                return json(&list);
            }
            let rows = list
                .iter()
                .map(|hp| {
                    vec![
                        hp.i.to_string(),
                        hp.j.to_string(),
                        hp.m.to_string(),
                        hp.t.to_string(),
                        hp.k().to_string(),
                        hp.q(*n).to_string(),
                    ]
                })
                .collect();
            Ok(table(&["i", "j", "m", "t", "k", "q"], rows))
        }
    }
}

fn to_value<T: Serialize>(value: &T) -> std::result::Result<serde_json::Value, Failure> {
    serde_json::to_value(value).map_err(|e| Failure::Usage(e.to_string()))
}

fn crystal(cmd: &CrystalCommand, fmt: Format) -> Outcome {
    match cmd {
        CrystalCommand::Apply { op, z, nu, hyperplane, convention } => {
            let nu: MultiPartition = nu.parse()?;
            let hp = HyperplaneParams::parse(nu.ell(), hyperplane)?;
            let z: ZClass = z.parse()?;
            let convention: Convention = convention.parse()?;
            let sig = signature(&nu, &z, &hp, convention)?;
            let result = match op {
                Op::E => e_tilde(&nu, &z, &hp, convention)?,
                Op::F => f_tilde(&nu, &z, &hp, convention)?,
            };
            if fmt == Format::Json {
                #[derive(Serialize)]
                struct Report {
                    nu: String,
                    z: String,
                    convention: Convention,
                    signature: String,
                    reduced: String,
                    result: Option<String>,
                }
                return json(&Report {
                    nu: nu.to_string(),
                    z: z.to_string(),
                    convention,
                    signature: sig.to_string(),
                    reduced: reduce_signature(&sig).to_string(),
                    result: result.as_ref().map(|r| r.to_string()),
                });
            }
            let shown = result.map_or_else(|| "0".to_string(), |r| r.to_string());
            Ok(format!("signature: {sig}\nreduced: {}\nresult: {shown}\n", reduce_signature(&sig)))
        }
        CrystalCommand::Depth { nu, hyperplane, convention } => {
            let nu: MultiPartition = nu.parse()?;
            let hp = HyperplaneParams::parse(nu.ell(), hyperplane)?;
            let convention: Convention = convention.parse()?;
            let descent = depth_by_descent(&nu, &hp, convention)?;
            let closed = closed_form_depth(&nu, &hp)?;
            if fmt == Format::Json {
                #[derive(Serialize)]
                struct Report {
                    nu: String,
                    depth_by_descent: u64,
                    closed_form_depth: u64,
                }
                return json(&Report { nu: nu.to_string(), depth_by_descent: descent, closed_form_depth: closed });
            }
            Ok(format!("depth by descent: {descent}\nclosed-form depth: {closed}\n"))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn quiver_slice(
    preset: Preset,
    ell: Option<usize>,
    n: Option<u64>,
    hyperplane: Option<&str>,
    v: Option<u64>,
    w: Option<u64>,
    lambda: Option<i64>,
    s: Option<u64>,
    fmt: Format,
) -> Outcome {
    let slices: Vec<(u64, SliceQuiver)> = match preset {
        Preset::Cherednik => {
            let ell = need(ell, "ell")?;
            let n = need(n, "n")?;
            let hp = HyperplaneParams::parse(
                ell,
                hyperplane.ok_or_else(|| Failure::Usage("--hyperplane is required here".into()))?,
            )?;
            let range: Vec<u64> = match s {
                Some(s) => vec![s],
                None => (0..=hp.q(n)).collect(),
            };
            range.into_iter().map(|s| Ok((s, cherednik_slice(&hp, n, s)?))).collect::<Result<_>>()?
        }
        Preset::Grassmann => {
            let v = need(v, "v")?;
            let w = need(w, "w")?;
            let lambda = lambda.unwrap_or(0);
            if w < 2 * v {
                return Err(Failure::Domain(Error::InvalidGrassmannian { v, w }));
            }
            let range: Vec<u64> = match s {
                Some(s) => vec![s],
                None => (0..=v).collect(),
            };
            range
                .into_iter()
                .map(|s| Ok((s, grassmann_slice(v as i64, w as i64, &crate::rational::int(lambda), s as i64)?)))
                .collect::<Result<_>>()?
        }
    };
    if fmt == Format::Json {
        #[derive(Serialize)]
        struct Entry<'a> {
            s: u64,
            slice: &'a SliceQuiver,
        }
        let entries: Vec<Entry> = slices.iter().map(|(s, slice)| Entry { s: *s, slice }).collect();
        return json(&entries);
    }
    let rows = slices
        .iter()
        .map(|(s, sq)| {
            vec![
                s.to_string(),
                sq.quiver.len().to_string(),
                sq.quiver.loops(0).to_string(),
                sq.vhat.first().map_or("-".into(), |x| x.to_string()),
                sq.what.first().map_or("-".into(), |x| x.to_string()),
                sq.lambda_hat.first().map_or("-".into(), |x| x.to_string()),
            ]
        })
        .collect();
    Ok(table(&["s", "vertices", "loops", "v̂", "ŵ", "λ̂"], rows))
}

fn chain_report(chain: &IdealChain, fmt: Format) -> Outcome {
    if fmt == Format::Json {
        return json(chain);
    }
    let mut text = format!("algebra: {}\np_grass: {}\np_stated: {}\n", chain.algebra, chain.p_grass, chain.p_stated);
    let rows = chain
        .ideals
        .iter()
        .map(|d| {
            let slice = d.slice.map_or("unit ideal".to_string(), |x| format!("D_{}(Gr({},{}))", x.lambda, x.v, x.w));
            vec![d.s.to_string(), slice, yes_no(d.from_slice).into(), d.leaf_dim.map_or("-".into(), |x| x.to_string())]
        })
        .collect();
    text.push_str(&table(&["s", "slice", "from_slice", "leaf_dim"], rows));
    Ok(text)
}

fn simples_report(hp: &HyperplaneParams, n: u64, list: &[MultiPartition], fmt: Format) -> Outcome {
    let threshold = annihilation_threshold(hp, n);
    if fmt == Format::Json {
        #[derive(Serialize)]
        struct Report {
            threshold: i64,
            simples: Vec<String>,
        }
        let simples = list.iter().map(|nu| nu.to_string()).collect();
        return json(&Report { threshold, simples });
    }
    let mut text = format!("threshold: {threshold}\ncount: {}\n", list.len());
    let rows = list
        .iter()
        .map(|nu| Ok(vec![nu.to_string(), closed_form_depth(nu, hp)?.to_string()]))
        .collect::<Result<_>>()?;
    text.push_str(&table(&["nu", "depth"], rows));
    Ok(text)
}

fn ideals(cmd: &IdealsCommand, fmt: Format) -> Outcome {
    match cmd {
        IdealsCommand::Chain(args) => {
            let chain = match &args.hyperplane {
                Some(text) => {
                    let hp = HyperplaneParams::parse(need(args.ell, "ell")?, text)?;
                    cherednik_chain(&hp, need(args.n, "n")?)?
                }
                None => grass_chain(need(args.v, "v")?, need(args.w, "w")?, args.lambda.unwrap_or(0))?,
            };
            chain_report(&chain, fmt)
        }
        IdealsCommand::Annihilated(args) => {
            let hp = HyperplaneParams::parse(args.ell, &args.hyperplane)?;
            simples_report(&hp, args.n, &annihilated_simples(&hp, args.n)?, fmt)
        }
        IdealsCommand::K0(args) => {
            let hp = HyperplaneParams::parse(args.ell, &args.hyperplane)?;
            simples_report(&hp, args.n, &k0_kernel(&hp, args.n)?, fmt)
        }
    }
}
