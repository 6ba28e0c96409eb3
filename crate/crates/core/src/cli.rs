use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::rational::fmt_rational;
use crate::algebra::QMatrix;
use crate::colored_trees::{enumerate_with, ColoredTree, Partition};
use crate::emit::{self, ConstValue};
use crate::error::{Error, Result};
use crate::{excess, invariants, lambda_ring, stargraphs};

#[derive(Parser, Debug)]
#[command(name = "torelli", version, about = "Torelli pullbacks of product loci and related computations")]
pub struct Cli {
    /// worker threads (defaults to available parallelism)
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// colored stable trees
    #[command(subcommand)]
    Trees(TreesCmd),
    /// excess contributions
    #[command(subcommand)]
    Excess(ExcessCmd),
    /// the λ-ring R*(A_g)
    #[command(subcommand)]
    Lambda(LambdaCmd),
    /// Sp-invariants of the s-fold product
    #[command(subcommand)]
    Inv(InvCmd),
    /// star-shaped graphs for wall-crossing
    #[command(subcommand)]
    Stars(StarsCmd),
    /// identity checks
    #[command(subcommand)]
    Check(CheckCmd),
    /// constants and stored tables
    Const(ConstArgs),
    /// script emission
    #[command(subcommand)]
    Emit(EmitCmd),
}

#[derive(Args, Debug)]
pub struct PartitionArg {
    #[arg(long)]
    pub partition: String,
}

#[derive(Subcommand, Debug)]
pub enum TreesCmd {
    Enumerate {
        #[command(flatten)]
        p: PartitionArg,
        #[arg(long)]
        max_edges: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    Count {
        #[command(flatten)]
        p: PartitionArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum ExcessCmd {
    Cont {
        #[command(flatten)]
        p: PartitionArg,
        /// canonical encoding or index in `trees enumerate`
        #[arg(long)]
        tree: String,
        #[arg(long)]
        chern_form: bool,
    },
    Pullback {
        #[command(flatten)]
        p: PartitionArg,
        #[arg(long)]
        emit: Option<String>,
        #[arg(long, default_value = "v1")]
        dialect: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum LambdaCmd {
    Dims {
        #[arg(long)]
        g: u32,
    },
    Pairing {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        k: u32,
    },
    Eval {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        expr: String,
        /// scale by γ_g
        #[arg(long)]
        ab: bool,
    },
}

#[derive(Args, Debug)]
pub struct GS {
    #[arg(long)]
    pub g: u32,
    #[arg(long)]
    pub s: u32,
}

#[derive(Subcommand, Debug)]
pub enum InvCmd {
    Integrate {
        #[command(flatten)]
        gs: GS,
        #[arg(long)]
        monomial: String,
    },
    ProjectPr {
        #[command(flatten)]
        gs: GS,
        /// use the linear-solve oracle instead of the closed form
        #[arg(long)]
        solve: bool,
    },
    Capelli {
        #[command(flatten)]
        gs: GS,
    },
    Pairing {
        #[command(flatten)]
        gs: GS,
        #[arg(long)]
        k: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum StarsCmd {
    Enumerate {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        r: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    Ifun {
        #[arg(long)]
        h: u32,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        r: u32,
    },
    Assemble {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        r: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum CheckCmd {
    Eisenstein {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        dmax: u64,
    },
    Vanishing {
        #[command(flatten)]
        p: PartitionArg,
    },
    Capelli {
        #[command(flatten)]
        gs: GS,
    },
}

#[derive(Args, Debug)]
pub struct ConstArgs {
    /// bernoulli | gamma | jg | taut-product
    pub name: String,
    #[arg(allow_negative_numbers = true)]
    pub params: Vec<i64>,
}

#[derive(Subcommand, Debug)]
pub enum EmitCmd {
    Delta {
        #[arg(long)]
        g: u32,
        #[arg(long, default_value_t = 1)]
        s: u32,
        #[arg(long)]
        out: Option<String>,
    },
}

fn parse_list(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad list entry {x:?}"))))
        .collect()
}

fn matrix_text(m: &QMatrix) -> String {
    let mut out = String::new();
    for row in m.to_rows() {
        let r: Vec<String> = row.iter().map(fmt_rational).collect();
        out.push_str(&r.join(" "));
        out.push('\n');
    }
    let det = m.det().map(|d| fmt_rational(&d)).unwrap_or_else(|_| "n/a".into());
    out.push_str(&format!("det {det}\n"));
    out
}

fn find_tree(mu: &Partition, key: &str) -> Result<ColoredTree> {
    let trees = enumerate_with(mu, None);
    if let Ok(i) = key.parse::<usize>() {
        return trees
            .get(i)
            .cloned()
            .ok_or_else(|| Error::OutOfRange(format!("tree index {i} (have {})", trees.len())));
    }
    trees
        .into_iter()
        .find(|t| t.encoding() == key)
        .ok_or_else(|| Error::Invalid(format!("no tree with encoding {key}")))
}

fn write_file(path: &str, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Invalid(format!("cannot write {path}: {e}")))
}

fn execute(cmd: Cmd) -> Result<(String, bool)> {
    let mut ok = true;
    let out = match cmd {
        Cmd::Trees(TreesCmd::Count { p }) => {
            let mu = Partition::parse(&p.partition)?;
            format!("{}\n", enumerate_with(&mu, None).len())
        }
        Cmd::Trees(TreesCmd::Enumerate { p, max_edges, format }) => {
            let mu = Partition::parse(&p.partition)?;
            let trees = enumerate_with(&mu, max_edges);
            match format {
                Format::Json => {
                    let v: Vec<serde_json::Value> = trees.iter().map(|t| t.to_json()).collect();
                    format!("{}\n", serde_json::Value::Array(v))
                }
                Format::Text => trees
                    .iter()
                    .enumerate()
                    .map(|(i, t)| {
                        format!("{i} {} edges={} aut={}\n", t.encoding(), t.num_edges(), t.automorphism_order())
                    })
                    .collect(),
            }
        }
        Cmd::Excess(ExcessCmd::Cont { p, tree, chern_form }) => {
            let mu = Partition::parse(&p.partition)?;
            let t = find_tree(&mu, &tree)?;
            let c = excess::cont_recursive(&t)?;
            if chern_form {
                format!("{}\n", c.render_chern())
            } else {
                format!("{}\n", c.poly.render())
            }
        }
        Cmd::Excess(ExcessCmd::Pullback { p, emit, dialect }) => {
            let mu = Partition::parse(&p.partition)?;
            let pb = excess::torelli_pullback(&mu)?;
            let script = emit::emit_script(&pb.total, &dialect)?;
            match emit {
                Some(path) => {
                    write_file(&path, &script)?;
                    format!("{} trees, {} terms written to {path}\n", pb.terms.len(), pb.total.len())
                }
                None => script,
            }
        }
        Cmd::Lambda(LambdaCmd::Dims { g }) => {
            let b = lambda_ring::LambdaBasis::build(g)?;
            let d: Vec<String> = b.dims().iter().map(|x| x.to_string()).collect();
            format!("{}\n", d.join(" "))
        }
        Cmd::Lambda(LambdaCmd::Pairing { g, k }) => {
            let b = lambda_ring::LambdaBasis::build(g)?;
            matrix_text(&b.pairing_matrix(k)?)
        }
        Cmd::Lambda(LambdaCmd::Eval { g, expr, ab }) => {
            let b = lambda_ring::LambdaBasis::build(g)?;
            let x = lambda_ring::parse_lambda(g, &expr)?;
            let v = if ab { b.ab_evaluate(&x)? } else { b.socle_eval(&x)? };
            format!("{}\n", fmt_rational(&v))
        }
        Cmd::Inv(InvCmd::Integrate { gs, monomial }) => {
            let x = invariants::parse_inv(gs.s, &monomial)?;
            format!("{}\n", fmt_rational(&invariants::integrate(gs.g, gs.s, &x)?))
        }
        Cmd::Inv(InvCmd::ProjectPr { gs, solve }) => {
            let c = if solve {
                invariants::project_pr_solve(gs.g, gs.s)?
            } else {
                invariants::project_pr_formula(gs.g, gs.s)?
            };
            format!("{c}\n")
        }
        Cmd::Inv(InvCmd::Capelli { gs }) | Cmd::Check(CheckCmd::Capelli { gs }) => {
            ok = invariants::capelli_check(gs.g, gs.s)?;
            let k = fmt_rational(&invariants::kappa(gs.g, gs.s));
            format!("{} \u{3ba}={k}\n", if ok { "ok" } else { "FAILED" })
        }
        Cmd::Inv(InvCmd::Pairing { gs, k }) => matrix_text(&invariants::gram_matrix(gs.g, gs.s, k)?),
        Cmd::Stars(StarsCmd::Enumerate { g, r, format }) => {
            let s = stargraphs::enumerate_stars(g, r)?;
            match format {
                Format::Json => {
                    let v: Vec<serde_json::Value> = s.iter().map(|x| x.to_json()).collect();
                    format!("{}\n", serde_json::Value::Array(v))
                }
                Format::Text => s
                    .iter()
                    .map(|x| format!("{x} aut={}\n", stargraphs::aut_order_star(x)))
                    .collect(),
            }
        }
        Cmd::Stars(StarsCmd::Ifun { h, mu, r }) => {
            let mu = parse_list(&mu)?;
            let f = stargraphs::i_function(h, &mu, r)?;
            let mut out = String::new();
            for (p, c) in f.coefficients.iter().enumerate().rev() {
                out.push_str(&format!("z^{p}: {}\n", c.render()));
            }
            if out.is_empty() {
                out.push_str("0\n");
            }
            out
        }
        Cmd::Stars(StarsCmd::Assemble { g, r }) => {
            let terms = stargraphs::wallcross_assemble(g, r)?;
            let mut out = String::new();
            for t in terms {
                let degs: Vec<String> = t.legs.iter().map(|l| l.z_degree().to_string()).collect();
                out.push_str(&format!(
                    "{} coeff={} space={} z-degrees=[{}] exceptional={}",
                    t.graph,
                    fmt_rational(&t.aut_inv),
                    t.space,
                    degs.join(","),
                    t.exceptional
                ));
                if let Some(c) = t.table {
                    out.push_str(&format!(" table={c:?}"));
                }
                out.push('\n');
            }
            out
        }
        Cmd::Check(CheckCmd::Eisenstein { g, dmax }) => {
            ok = emit::eisenstein_identity_check(g, dmax);
            format!("{}\n", if ok { "ok" } else { "FAILED" })
        }
        Cmd::Check(CheckCmd::Vanishing { p }) => {
            let mu = Partition::parse(&p.partition)?;
            format!("{}\n", excess::vanishing_message(&mu))
        }
        Cmd::Const(ConstArgs { name, params }) => match emit::constants(&name, &params)? {
            ConstValue::Scalar(x) => format!("{}\n", fmt_rational(&x)),
            ConstValue::Class(c, p) => format!("{} * ({})\n", fmt_rational(&c), p.render()),
        },
        Cmd::Emit(EmitCmd::Delta { g, s, out }) => {
            let script = emit::delta_emit(g, s)?;
            match out {
                Some(path) => {
                    write_file(&path, &script)?;
                    format!("written to {path}\n")
                }
                None => script,
            }
        }
    };
    Ok((out, ok))
}

/// Runs the command line, returning the exit code: 0 on success, 1 on a
/// domain error or failed check, 2 on a usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    if let Some(n) = cli.threads {
        // the global pool can only be set once per process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match execute(cli.cmd) {
        Ok((text, ok)) => {
            let _ = out.write_all(text.as_bytes());
            if ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
