//! Command-line front end. Data goes to `out`, diagnostics to `err`.
//! Exit codes: 0 success, 1 failed check, 2 usage or configuration error.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Rational64;
use serde_json::{json, Value};

use crate::poly::{Poly, PolyMatrix};
use crate::rootsys::{Family, LieType, RootSystem};
use crate::sweep::{run_sweep, SweepConfig};
use crate::weylorbit::Orbit;
use crate::{minrep, qchev, satake, ttstar};

#[derive(Debug, Parser)]
#[command(name = "minuscule", about = "Quantum Chevalley operators of minuscule flag manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run every check over a sweep of minuscule cases.
    Verify(VerifyArgs),
    /// Emit an orbit, crystal graph, operator, product table or tt* bundle.
    Emit(EmitArgs),
    /// Quantum Satake checks: wedge similarity (type A) or dimension identities (type D).
    Satake(SatakeArgs),
}

#[derive(Debug, clap::Args)]
struct VerifyArgs {
    /// key=value sweep configuration file
    #[arg(long)]
    config: Option<std::path::PathBuf>,
    #[arg(long = "max-rank-A")]
    max_rank_a: Option<usize>,
    #[arg(long = "max-rank-B")]
    max_rank_b: Option<usize>,
    #[arg(long = "max-rank-C")]
    max_rank_c: Option<usize>,
    #[arg(long = "max-rank-D")]
    max_rank_d: Option<usize>,
    /// Leave out E6 and E7.
    #[arg(long)]
    no_exceptional: bool,
    /// Delete one edge of every operator before checking (must fail).
    #[arg(long)]
    corrupt: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    Orbit,
    Crystal,
    Amatrix,
    Qtable,
    Ttstar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Debug, clap::Args)]
struct EmitArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    rank: usize,
    #[arg(long)]
    weight: usize,
    #[arg(long, value_enum)]
    what: What,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Debug, clap::Args)]
struct SatakeArgs {
    #[arg(long, default_value = "A")]
    family: String,
    #[arg(long)]
    n: usize,
    /// Wedge degree (type A only).
    #[arg(long, default_value_t = 1)]
    k: usize,
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Verify(a) => cmd_verify(&a, out, err),
        Command::Emit(a) => cmd_emit(&a, out, err),
        Command::Satake(a) => cmd_satake(&a, out, err),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        1
    })
}

fn sweep_config(args: &VerifyArgs) -> Result<SweepConfig, String> {
    let mut cfg = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            SweepConfig::parse(&text)?
        }
        None => SweepConfig::default(),
    };
    for (family, v) in [
        (Family::A, args.max_rank_a),
        (Family::B, args.max_rank_b),
        (Family::C, args.max_rank_c),
        (Family::D, args.max_rank_d),
    ] {
        if let Some(r) = v {
            cfg.set_max_rank(family, r)?;
        }
    }
    if args.no_exceptional {
        cfg.include_exceptional = false;
    }
    Ok(cfg)
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let cfg = match sweep_config(args) {
        Ok(c) => c,
        Err(e) => {
            writeln!(err, "config error: {e}")?;
            return Ok(2);
        }
    };
    let reports = match run_sweep(&cfg, args.corrupt) {
        Ok(r) => r,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(1);
        }
    };
    let mut failed = 0;
    for r in &reports {
        let mut line = format!(
            "{:<4} lambda_{:<2} dim={:<3} s={:<3}",
            r.lie_type.to_string(),
            r.weight_index,
            r.orbit_size,
            r.coxeter_number
        );
        for c in &r.checks {
            let _ = write!(line, " {}={}", c.name, if c.passed { "ok" } else { "FAIL" });
        }
        let verdict = if r.passed() { "PASS" } else { "FAIL" };
        writeln!(out, "{line}  {verdict}")?;
        if !r.passed() {
            failed += 1;
            for c in r.checks.iter().filter(|c| !c.passed) {
                writeln!(
                    err,
                    "{} lambda_{}: {} failed{}",
                    r.lie_type,
                    r.weight_index,
                    c.name,
                    c.detail.as_deref().map(|d| format!(": {d}")).unwrap_or_default()
                )?;
            }
        }
    }
    writeln!(out, "{} cases, {} failed", reports.len(), failed)?;
    Ok(if failed == 0 { 0 } else { 1 })
}

fn poly_json(p: &Poly) -> Value {
    Value::Array(
        p.terms()
            .map(|(e, c)| json!([e, c.to_string()]))
            .collect(),
    )
}

pub fn matrix_json(m: &PolyMatrix) -> Value {
    Value::Array(
        m.rows()
            .map(|row| Value::Array(row.iter().map(poly_json).collect()))
            .collect(),
    )
}

fn rational_str(r: &Rational64) -> String {
    r.to_string()
}

fn header(orb: &Orbit) -> serde_json::Map<String, Value> {
    let rs = orb.root_system();
    let mut m = serde_json::Map::new();
    m.insert("family".into(), json!(rs.lie_type.family.to_string()));
    m.insert("rank".into(), json!(rs.rank()));
    m.insert("weight_index".into(), json!(orb.weight_index()));
    m.insert("s".into(), json!(rs.coxeter_number));
    m.insert("orbit_size".into(), json!(orb.len()));
    m
}

/// Graphviz rendering: node label is the pairing vector, lowering edges carry
/// the simple-root index, `psi` edges are dashed.
pub fn crystal_dot(orb: &Orbit) -> crate::Result<String> {
    let mut s = String::new();
    let rs = orb.root_system();
    let _ = writeln!(
        s,
        "digraph \"{}_lambda{}\" {{",
        rs.lie_type,
        orb.weight_index()
    );
    for (k, e) in orb.elements().iter().enumerate() {
        let _ = writeln!(s, "  n{k} [label=\"{}\"];", e.weight);
    }
    for edge in orb.crystal_edges() {
        let _ = writeln!(
            s,
            "  n{} -> n{} [label=\"{}\"];",
            orb.position(&edge.source)?,
            orb.position(&edge.target)?,
            edge.label
        );
    }
    let psi = minrep::psi_raising_matrix(orb)?;
    for (r, c, _) in psi.nonzero() {
        let _ = writeln!(s, "  n{c} -> n{r} [label=\"psi\", style=dashed];");
    }
    s.push_str("}\n");
    Ok(s)
}

pub fn emit_document(t: LieType, i: usize, what: &str, format: &str) -> Result<String, (i32, String)> {
    let internal = |e: crate::Error| (1, e.to_string());
    let rs = RootSystem::build(t).map_err(|e| (2, e.to_string()))?;
    let orb = Orbit::new(&rs, i).map_err(|e| (2, e.to_string()))?;
    if format == "dot" {
        if what != "crystal" {
            return Err((2, format!("format dot is only supported for crystal, not {what}")));
        }
        return crystal_dot(&orb).map_err(internal);
    }
    if format != "json" {
        return Err((2, format!("unsupported format {format}")));
    }
    let mut doc = header(&orb);
    match what {
        "orbit" => {
            doc.insert("dim_complex".into(), json!(orb.dim_complex()));
            doc.insert("elements".into(), json!(orb.elements()));
        }
        "crystal" => {
            doc.insert("edges".into(), json!(orb.crystal_edges()));
            let psi = minrep::psi_raising_matrix(&orb).map_err(internal)?;
            let psi_edges: Vec<Value> = psi
                .nonzero()
                .map(|(r, c, _)| {
                    json!({"source": orb.elements()[c].weight, "target": orb.elements()[r].weight})
                })
                .collect();
            doc.insert("psi_edges".into(), Value::Array(psi_edges));
        }
        "amatrix" => {
            let a = minrep::quantum_operator(&orb).map_err(internal)?;
            let basis: Vec<_> = orb.elements().iter().map(|e| e.weight.clone()).collect();
            doc.insert("basis".into(), json!(basis));
            doc.insert("matrix".into(), matrix_json(&a));
        }
        "qtable" => {
            let mut table = serde_json::Map::new();
            for e in orb.elements() {
                let terms = qchev::chevalley_closed(&orb, &e.weight).map_err(internal)?;
                table.insert(e.weight.to_string(), json!(terms));
            }
            doc.insert("table".into(), Value::Object(table));
        }
        "ttstar" => {
            let sol = ttstar::distinguished_solution(&rs, i).map_err(internal)?;
            let form = ttstar::dubrovin_form(&orb).map_err(internal)?;
            let strs = |v: &[Rational64]| v.iter().map(rational_str).collect::<Vec<_>>();
            doc.insert("asymptotic_data".into(), json!(strs(&sol.asymptotic.values)));
            doc.insert("alcove_point".into(), json!(strs(&sol.alcove.coords)));
            doc.insert("dpw_exponents".into(), json!(strs(&sol.dpw.k)));
            doc.insert(
                "sigma_fixed".into(),
                json!(ttstar::sigma_fixed(&rs, &sol.asymptotic.values)),
            );
            doc.insert("connection".into(), json!(form.connection));
            doc.insert("variable_change".into(), json!(form.variable_change));
            doc.insert("matrix".into(), matrix_json(&sol.a_matrix));
        }
        other => return Err((2, format!("unknown artifact {other}"))),
    }
    let mut text = serde_json::to_string_pretty(&Value::Object(doc)).map_err(|e| (1, e.to_string()))?;
    text.push('\n');
    Ok(text)
}

fn cmd_emit(args: &EmitArgs, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let t = match args
        .family
        .parse::<Family>()
        .and_then(|f| LieType::new(f, args.rank))
    {
        Ok(t) => t,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(2);
        }
    };
    let what = match args.what {
        What::Orbit => "orbit",
        What::Crystal => "crystal",
        What::Amatrix => "amatrix",
        What::Qtable => "qtable",
        What::Ttstar => "ttstar",
    };
    let format = match args.format {
        Format::Json => "json",
        Format::Dot => "dot",
    };
    match emit_document(t, args.weight, what, format) {
        Ok(text) => {
            out.write_all(text.as_bytes())?;
            Ok(0)
        }
        Err((code, msg)) => {
            writeln!(err, "error: {msg}")?;
            Ok(code)
        }
    }
}

fn cmd_satake(args: &SatakeArgs, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let family = match args.family.parse::<Family>() {
        Ok(f @ (Family::A | Family::D)) => f,
        Ok(f) => {
            writeln!(err, "error: no Satake check for type {f}")?;
            return Ok(2);
        }
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(2);
        }
    };
    if family == Family::D {
        return match satake::half_wedge_dims(args.n) {
            Ok(r) => {
                writeln!(
                    out,
                    "D{}: half wedge of QH*(Q_{}) = {} = {}, End(QH*(S)) = {}^2 = {}  {}",
                    r.n,
                    2 * r.n - 2,
                    r.terms.join(" + "),
                    r.half_wedge_dim,
                    r.spinor_cohomology_dim,
                    r.endomorphism_dim,
                    if r.passed() { "PASS" } else { "FAIL" }
                )?;
                Ok(if r.passed() { 0 } else { 1 })
            }
            Err(e) => {
                writeln!(err, "error: {e}")?;
                Ok(2)
            }
        };
    }
    let report = match satake::satake_type_a(args.n, args.k) {
        Ok(r) => r,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(2);
        }
    };
    let signs = |d: &satake::SignDiagonal| {
        d.signs
            .iter()
            .map(|s| if *s > 0 { "+" } else { "-" })
            .collect::<Vec<_>>()
            .join(" ")
    };
    writeln!(
        out,
        "wedge^{} QH*(CP^{}) vs QH*(Gr({},{})), dimension {}",
        report.k,
        report.n,
        report.k,
        report.n + 1,
        report.dimension
    )?;
    match &report.similarity {
        Ok(d) => writeln!(out, "sign vector: [{}]  PASS", signs(d))?,
        Err(e) => writeln!(out, "sign similarity failed: {e}  FAIL")?,
    }
    let twist = if report.k % 2 == 1 { "q" } else { "-q" };
    match &report.twisted_similarity {
        Ok(d) => writeln!(out, "with q -> {twist}: sign vector [{}]", signs(d))?,
        Err(e) => writeln!(out, "with q -> {twist}: {e}")?,
    }
    Ok(if report.passed() { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("minuscule").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn emit_a1_amatrix() {
        let (code, out, _) = run_capture(&[
            "emit", "--family", "A", "--rank", "1", "--weight", "1", "--what", "amatrix",
        ]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["matrix"], json!([[[], [[1, "1"]]], [[[0, "1"]], []]]));
        assert_eq!(v["s"], json!(2));
        assert_eq!(v["orbit_size"], json!(2));
    }

    #[test]
    fn emit_errors() {
        let base = ["emit", "--family", "B", "--rank", "3", "--what", "orbit"];
        let (code, _, err) = run_capture(&[&base[..], &["--weight", "1"]].concat());
        assert_eq!(code, 2, "{err}");
        let (code, _, _) = run_capture(&[
            "emit", "--family", "A", "--rank", "2", "--weight", "1", "--what", "orbit", "--format", "dot",
        ]);
        assert_eq!(code, 2);
        let (code, _, _) = run_capture(&[
            "emit", "--family", "Q", "--rank", "2", "--weight", "1", "--what", "orbit",
        ]);
        assert_eq!(code, 2);
    }

    #[test]
    fn verify_small_sweep() {
        let args = [
            "verify",
            "--max-rank-A",
            "2",
            "--max-rank-B",
            "2",
            "--max-rank-C",
            "2",
            "--max-rank-D",
            "3",
            "--no-exceptional",
        ];
        let (code, out, _) = run_capture(&args);
        assert_eq!(code, 0, "{out}");
        let (code, _, err) = run_capture(&[&args[..], &["--corrupt"]].concat());
        assert_eq!(code, 1);
        assert!(err.contains("main_theorem failed"));
        let (code, _, _) = run_capture(&["verify", "--max-rank-D", "2"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn satake_dims() {
        let (code, out, _) = run_capture(&["satake", "--family", "D", "--n", "4"]);
        assert_eq!(code, 0);
        assert!(out.contains("= 64"));
        let (code, _, _) = run_capture(&["satake", "--n", "1", "--k", "1"]);
        assert_eq!(code, 0);
        let (code, _, _) = run_capture(&["satake", "--n", "3", "--k", "4"]);
        assert_eq!(code, 2);
    }
}
