//! Command-line front end: every subcommand prints one JSON document.
//!
//! Exit codes: 0 on success (including inconclusive isomorphism searches),
//! 1 on domain errors, 2 on usage or input errors.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::arith::PGroupKind;
use crate::brauer::{
    check_compat, decomposition_class, primes_in_ap, reduce_mod_p, Compat, RepCyclo, RepCycloJson,
};
use crate::error::{Error, Result};
use crate::gf::{build_extension, FieldJson};
use crate::grp::{is_p_group, standard_group, GroupJson, StandardKind};
use crate::hodge::{check_twist_equality, hodge_curve};
use crate::matfq::{lang_solve, omega_count, MatFq, MatrixJson};
use crate::rep::{
    descend, find_isomorphism, frobenius_period, unitriangularize, IsoSearch, Isomorphism, RepFq,
    RepJson,
};

#[derive(Parser, Debug)]
#[command(name = "frobrep", version, about = "Frobenius twists, descent and decomposition of finite-group representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone, Copy)]
struct Search {
    /// Random combinations tried before exhaustive or certificate checks.
    #[arg(long, default_value_t = 64)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl From<Search> for IsoSearch {
    fn from(s: Search) -> Self {
        IsoSearch {
            trials: s.trials,
            seed: s.seed,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GroupKind {
    Cyclic,
    Dihedral,
    ElementaryAbelian,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of solutions of x^(q) = x M over the algebraic closure.
    OmegaCount {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 16)]
        smax: usize,
    },
    /// Invertible N with N^(q) = N M.
    LangSolve {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 16)]
        smax: usize,
    },
    /// Least n with F^n∘ρ ≅ ρ.
    Period {
        #[arg(long)]
        rep: PathBuf,
        #[command(flatten)]
        search: Search,
    },
    /// F^n∘ρ.
    Twist {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long = "n")]
        n: usize,
    },
    /// Conjugate ρ into GL_r(F_{p^n}).
    Descend {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long = "n")]
        n: usize,
        #[arg(long, default_value_t = 16)]
        smax: usize,
        #[command(flatten)]
        search: Search,
    },
    /// Invertible M with ρ(g) M = M ρ'(g).
    Isom {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        rep2: PathBuf,
        #[command(flatten)]
        search: Search,
    },
    /// dim of the fixed space.
    Invariants {
        #[arg(long)]
        rep: PathBuf,
    },
    /// Unit upper triangular form of a p-group representation.
    Unitriangularize {
        #[arg(long)]
        rep: PathBuf,
    },
    /// Whether a group (or the image of a representation) is a p-group.
    Pgroup {
        #[arg(long, conflicts_with = "group", required_unless_present = "group")]
        rep: Option<PathBuf>,
        #[arg(long)]
        group: Option<PathBuf>,
    },
    /// (h0, h1, h2) on a curve of the given genus.
    HodgeCurve {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        genus: usize,
    },
    /// Compare Hodge numbers of every Frobenius twist.
    CheckTwist {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        genus: usize,
    },
    /// Reduce a cyclotomic representation mod p.
    ReduceModP {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        p: u64,
    },
    /// Brauer character of the reduction mod p.
    Decompose {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        p: u64,
    },
    /// Compare d∘σ_a with F∘d.
    CheckCompat {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long)]
        p: u64,
    },
    /// Primes p ≡ a (mod n) up to a bound.
    PrimesAp {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long = "n")]
        n: u64,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        bound: u64,
    },
    /// Group JSON for a standard group.
    MakeGroup {
        #[arg(long, value_enum)]
        kind: GroupKind,
        #[arg(long = "n")]
        n: Option<usize>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Field JSON for F_{p^m}.
    MakeField {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn base_dir(path: &Path) -> &Path {
    path.parent().unwrap_or(Path::new("."))
}

fn load_rep(path: &Path) -> Result<RepFq> {
    read_json::<RepJson>(path)?.to_rep(base_dir(path))
}

fn load_cyclo(path: &Path) -> Result<RepCyclo> {
    read_json::<RepCycloJson>(path)?.to_rep(base_dir(path))
}

fn load_matrix(path: &Path) -> Result<MatFq> {
    read_json::<MatrixJson>(path)?.to_mat()
}

fn rep_json(rep: &RepFq) -> Value {
    serde_json::to_value(RepJson::from_rep(rep)).expect("serializable")
}

fn mat_json(m: &MatFq) -> Value {
    serde_json::to_value(MatrixJson::from_mat(m)).expect("serializable")
}

fn kind_json(kind: PGroupKind, order: usize) -> Value {
    match kind {
        PGroupKind::No => json!({"kind": "No", "order": order}),
        PGroupKind::Yes(p) => json!({"kind": "Yes", "p": p, "order": order}),
        PGroupKind::Trivial => json!({"kind": "Trivial", "order": order}),
    }
}

fn dispatch(cmd: Command) -> Result<Value> {
    Ok(match cmd {
        Command::OmegaCount { matrix, q, smax } => {
            let c = omega_count(&load_matrix(&matrix)?, q, smax)?;
            json!({"count": c.count, "dim": c.dim, "degree": c.degree})
        }
        Command::LangSolve { matrix, q, smax } => {
            let sol = lang_solve(&load_matrix(&matrix)?, q, smax)?;
            json!({"matrix": mat_json(&sol.matrix), "degree": sol.degree})
        }
        Command::Period { rep, search } => {
            json!({"period": frobenius_period(&load_rep(&rep)?, search.into())?})
        }
        Command::Twist { rep, n } => rep_json(&load_rep(&rep)?.twist(n)),
        Command::Descend {
            rep,
            n,
            smax,
            search,
        } => {
            let d = descend(&load_rep(&rep)?, n, smax, search.into())?;
            json!({
                "rep": rep_json(&d.rep),
                "witness": mat_json(&d.witness),
                "intertwiner": mat_json(&d.intertwiner),
            })
        }
        Command::Isom { rep, rep2, search } => {
            match find_isomorphism(&load_rep(&rep)?, &load_rep(&rep2)?, search.into())? {
                Isomorphism::Found(m) => json!({"isomorphic": true, "matrix": mat_json(&m)}),
                Isomorphism::NotIsomorphic => json!({"isomorphic": false}),
            }
        }
        Command::Invariants { rep } => json!({"invariants_dim": load_rep(&rep)?.invariants_dim()}),
        Command::Unitriangularize { rep } => {
            let u = unitriangularize(&load_rep(&rep)?)?;
            json!({"change_of_basis": mat_json(&u.change_of_basis), "rep": rep_json(&u.conjugated)})
        }
        Command::Pgroup { rep, group } => match (rep, group) {
            (Some(rep), _) => {
                let r = load_rep(&rep)?;
                kind_json(r.image_is_p_group(), r.image_order())
            }
            (None, Some(group)) => {
                let g = crate::grp::Group::from_json(&read_json::<GroupJson>(&group)?)?;
                kind_json(is_p_group(&g), g.order())
            }
            (None, None) => unreachable!("clap requires one of --rep, --group"),
        },
        Command::HodgeCurve { rep, genus } => {
            let h = hodge_curve(&load_rep(&rep)?, genus)?;
            json!({"h": h.triple(), "rank": h.rank, "genus": h.genus})
        }
        Command::CheckTwist { rep, genus } => check_twist_equality(&load_rep(&rep)?, genus)?.to_json(),
        Command::ReduceModP { rep, p } => rep_json(&reduce_mod_p(&load_cyclo(&rep)?, p)?),
        Command::Decompose { rep, p } => decomposition_class(&load_cyclo(&rep)?, p)?.to_json(),
        Command::CheckCompat { rep, a, p } => match check_compat(&load_cyclo(&rep)?, a, p)? {
            Compat::Holds => json!({"holds": true}),
            Compat::Fails { left, right } => {
                json!({"holds": false, "left": left.to_json(), "right": right.to_json()})
            }
        },
        Command::PrimesAp { a, n, count, bound } => {
            let primes = primes_in_ap(a, n, count, bound)?;
            json!({"complete": primes.len() == count, "primes": primes})
        }
        Command::MakeGroup { kind, n, p, k } => {
            let need = |v: Option<usize>, name: &str| {
                v.ok_or_else(|| Error::BadParams(format!("--{name} is required for this group kind")))
            };
            let kind = match kind {
                GroupKind::Cyclic => StandardKind::Cyclic(need(n, "n")?),
                GroupKind::Dihedral => StandardKind::Dihedral(need(n, "n")?),
                GroupKind::ElementaryAbelian => StandardKind::ElementaryAbelian(
                    need(p.map(|v| v as usize), "p")? as u64,
                    need(k.map(|v| v as usize), "k")? as u32,
                ),
            };
            serde_json::to_value(standard_group(kind)?.to_json()).expect("serializable")
        }
        Command::MakeField { p, m, seed } => {
            serde_json::to_value(FieldJson::from_field(&build_extension(p, m, seed)?))
                .expect("serializable")
        }
    })
}

fn render(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

/// Parses `args` (including the program name), runs the subcommand and
/// returns the exit code with the JSON document to print.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (0, e.to_string()),
                _ => (
                    2,
                    render(&json!({"error": "Usage", "message": e.to_string()})),
                ),
            };
        }
    };
    match dispatch(cli.command) {
        Ok(v) => (0, render(&v)),
        Err(Error::Inconclusive { hom_dim }) => {
            (0, render(&json!({"inconclusive": true, "hom_dim": hom_dim})))
        }
        Err(e) => {
            let code = if matches!(e, Error::Parse(_)) { 2 } else { 1 };
            (code, render(&json!({"error": e.name(), "message": e.to_string()})))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, Value) {
        let (code, out) = run(std::iter::once("frobrep").chain(args.iter().copied()));
        (code, serde_json::from_str(&out).unwrap_or(Value::Null))
    }

    #[test]
    fn primes_and_usage() {
        let (code, v) = run_args(&["primes-ap", "--a", "2", "--n", "3", "--count", "3", "--bound", "100"]);
        assert_eq!(code, 0);
        assert_eq!(v["primes"], json!([2, 5, 11]));
        let (code, v) = run_args(&["primes-ap", "--a", "2"]);
        assert_eq!((code, v["error"].clone()), (2, json!("Usage")));
        let (code, v) = run_args(&["primes-ap", "--a", "2", "--n", "4", "--count", "1", "--bound", "9"]);
        assert_eq!((code, v["error"].clone()), (1, json!("NotCoprime")));
    }

    #[test]
    fn make_field_and_group() {
        let (code, v) = run_args(&["make-field", "--p", "2", "--m", "2"]);
        assert_eq!(code, 0);
        assert_eq!(v, json!({"p": 2, "m": 2, "modulus": [1, 1, 1]}));
        let (code, v) = run_args(&["make-group", "--kind", "dihedral", "--n", "3"]);
        assert_eq!(code, 0);
        assert_eq!(v["generators"], json!([1, 3]));
        let (code, v) = run_args(&["make-field", "--p", "4", "--m", "1"]);
        assert_eq!((code, v["error"].clone()), (1, json!("NotPrime")));
    }
}
