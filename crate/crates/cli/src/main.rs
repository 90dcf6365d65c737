mod input;

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sqpow_core::graph::MAX_CANONICAL_VERTICES;
use sqpow_core::linearity::DEFAULT_LQ_CAP;
use sqpow_core::resolution::linear_resolution_profile;
use sqpow_core::scan::{run_scan, ScanCheck, ScanOptions};
use sqpow_core::theorem::SCHEMA_VERSION;
use sqpow_core::{
    betti_table, construct_gpcq, construct_lemma_graph, edge_ideal, find_lq_order, induced_matching_number,
    is_linearly_related, linearity_index, matching_number, verify_lq_order, verify_theorem, whiskered_complete,
    write_edge_list, BettiOptions, Error, Field, Graph, GraphJson, LabeledFamilyGraph, LinearRelatedness,
    LqSearch, LqVerdict, MatchingInvariants, MonomialIdeal,
};

const BETTI_CAP_OVERRIDE: usize = 30;
const LQ_CAP_OVERRIDE: usize = 64;

/// A usage or resource error; exits with status 2.
pub struct Failure(String);

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure(message.into())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FieldArg {
    #[value(name = "q")]
    Q,
    #[value(name = "2")]
    F2,
    #[value(name = "3")]
    F3,
    #[value(name = "5")]
    F5,
}

impl From<FieldArg> for Field {
    fn from(f: FieldArg) -> Self {
        match f {
            FieldArg::Q => Field::Rationals,
            FieldArg::F2 => Field::Prime(2),
            FieldArg::F3 => Field::Prime(3),
            FieldArg::F5 => Field::Prime(5),
        }
    }
}

/// Experiments on squarefree powers of edge ideals.
#[derive(Parser, Debug)]
#[command(name = "sqpow", version)]
struct Cli {
    /// Coefficient field for Betti numbers.
    #[arg(long, global = true, value_enum, default_value = "q")]
    field: FieldArg,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for sampled scans.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Lift the default resource caps.
    #[arg(long, global = true)]
    cap_override: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Family {
    /// G(p,c,q) for 1 <= p <= c <= q.
    Gpcq { p: usize, c: usize, q: usize },
    /// Whiskered c-clique on x_{d+1..c} with isolated x_1..x_d.
    Lemma { c: usize, d: usize },
    /// K_q with a whisker at every vertex.
    WhiskeredComplete { q: usize },
}

#[derive(Clone, Debug)]
enum OrderArg {
    Revlex,
    Search,
    Explicit(Vec<usize>),
}

fn parse_order(s: &str) -> Result<OrderArg, String> {
    match s {
        "revlex" => Ok(OrderArg::Revlex),
        "search" => Ok(OrderArg::Search),
        _ => s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| format!("expected revlex, search or i,j,..., got `{s}`")))
            .collect::<Result<_, _>>()
            .map(OrderArg::Explicit),
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a family graph and write PREFIX.edges and PREFIX.json.
    Construct {
        #[command(subcommand)]
        family: Family,
        /// Output path prefix (default: family name and parameters).
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// nu, nu1, nu2, reg(S/I(G)), linearity index and cochordality.
    Invariants { graph: PathBuf },
    /// Generators of I(G)^[k] in revlex-descending order.
    Power { graph: PathBuf, k: usize },
    /// Linear quotients of an ideal file or of I(G)^[k].
    CheckLq {
        input: PathBuf,
        k: Option<usize>,
        /// revlex, search, or a comma-separated generator order.
        #[arg(long, default_value = "revlex", value_parser = parse_order)]
        order: OrderArg,
        /// Print the witness for every colon generator.
        #[arg(long)]
        witness: bool,
    },
    /// Whether an ideal file or I(G)^[k] is linearly related.
    CheckLr { input: PathBuf, k: Option<usize> },
    /// Betti table of S/I for an ideal file or I(G)^[k].
    Betti { input: PathBuf, k: Option<usize> },
    /// Smallest k with I(G)^[k] having a linear resolution.
    LinearityIndex {
        graph: PathBuf,
        /// Also report the verdict for every k up to nu.
        #[arg(long)]
        profile: bool,
    },
    /// Check the G(p,c,q) construction end to end.
    VerifyTheorem { p: usize, c: usize, q: usize },
    /// Run checks over all graphs with an edge on at most MAX vertices.
    Scan {
        max_vertices: usize,
        /// froberg, sandwich, top-power-lq, lr-vs-betti, persistence (default: all).
        checks: Vec<String>,
        /// Sample this many random graphs on MAX vertices instead.
        #[arg(long)]
        sample: Option<usize>,
    },
}

struct Ctx {
    field: Field,
    json: bool,
    seed: u64,
    cap_override: bool,
}

impl Ctx {
    fn betti(&self) -> BettiOptions {
        let mut o = BettiOptions::over(self.field);
        if self.cap_override {
            o.support_cap = BETTI_CAP_OVERRIDE;
        }
        o
    }

    fn lq_cap(&self) -> usize {
        if self.cap_override {
            LQ_CAP_OVERRIDE
        } else {
            DEFAULT_LQ_CAP
        }
    }

    /// Prints `value` (with a schema version) or the human text.
    fn emit(&self, mut value: Value, human: impl FnOnce() -> String) {
        if self.json {
            if let Value::Object(map) = &mut value {
                map.insert("schema_version".into(), json!(SCHEMA_VERSION));
            }
            println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
        } else {
            print!("{}", human());
        }
    }
}

type Run = Result<bool, Failure>;

fn edge_labels(g: &Graph) -> Vec<String> {
    g.edges().map(|(u, v)| format!("{}-{}", g.label(u), g.label(v))).collect()
}

fn construct(ctx: &Ctx, family: &Family, out: Option<&Path>) -> Run {
    let (built, name): (LabeledFamilyGraph, String) = match *family {
        Family::Gpcq { p, c, q } => (construct_gpcq(p, c, q)?, format!("gpcq-{p}-{c}-{q}")),
        Family::Lemma { c, d } => (construct_lemma_graph(c, d)?, format!("lemma-{c}-{d}")),
        Family::WhiskeredComplete { q } => (whiskered_complete(q)?, format!("whiskered-complete-{q}")),
    };
    let prefix = out.map(Path::to_path_buf).unwrap_or_else(|| PathBuf::from(&name));
    let edges_path = prefix.with_extension("edges");
    let json_path = prefix.with_extension("json");
    let write = |path: &Path, text: String| {
        fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
    };
    let g = &built.graph;
    write(&edges_path, write_edge_list(g))?;
    let graph_json = GraphJson::from(&built);
    write(&json_path, serde_json::to_string_pretty(&graph_json).expect("serializable") + "\n")?;
    let (nu1, nu) = (induced_matching_number(g), matching_number(g));
    ctx.emit(
        json!({
            "family": built.name,
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "nu1": nu1,
            "nu": nu,
            "files": [edges_path, json_path],
        }),
        || {
            format!(
                "{}: {} vertices, {} edges, nu1 = {nu1}, nu = {nu}\nwrote {} and {}\n",
                built.name,
                g.vertex_count(),
                g.edge_count(),
                edges_path.display(),
                json_path.display()
            )
        },
    );
    Ok(true)
}

fn invariants(ctx: &Ctx, path: &Path) -> Run {
    let g = input::load_graph(path)?;
    let m = MatchingInvariants::of(&g);
    let reg = betti_table(&edge_ideal(&g)?, ctx.betti())?.regularity();
    let c = linearity_index(&g, ctx.betti())?;
    let cochordal = g.is_cochordal();
    ctx.emit(
        json!({
            "field": ctx.field,
            "nu": m.nu,
            "nu1": m.nu1,
            "nu2": m.nu2,
            "reg": reg,
            "linearity_index": c,
            "cochordal": cochordal,
        }),
        || {
            format!(
                "nu              {}\nnu1             {}\nnu2             {}\nreg             {reg}\n\
                 linearity index {c}\ncochordal       {cochordal}\nfield           {}\n",
                m.nu, m.nu1, m.nu2, ctx.field
            )
        },
    );
    Ok(true)
}

fn generators_text(ideal: &MonomialIdeal) -> Vec<String> {
    ideal.generators().iter().map(|&g| ideal.format(g)).collect()
}

fn power(ctx: &Ctx, path: &Path, k: usize) -> Run {
    let g = input::load_graph(path)?;
    let ideal = sqpow_core::squarefree_power(&g, k)?;
    let text = generators_text(&ideal);
    let mut value = serde_json::to_value(ideal.to_json()).expect("serializable");
    value["k"] = json!(k);
    value["text"] = json!(text);
    ctx.emit(value, || {
        let mut s = format!("# I(G)^[{k}]: {} generators of degree {}\n", ideal.len(), ideal.degree());
        for t in &text {
            s.push_str(t);
            s.push('\n');
        }
        s
    });
    Ok(true)
}

fn subject(k: Option<usize>) -> String {
    k.map_or_else(|| "ideal".to_string(), |k| format!("I(G)^[{k}]"))
}

fn check_lq(ctx: &Ctx, path: &Path, k: Option<usize>, order: &OrderArg, witness: bool) -> Run {
    let (ideal, k) = input::load_ideal(path, k)?;
    let text = generators_text(&ideal);
    let chosen = match order {
        OrderArg::Revlex => Some((0..ideal.len()).collect::<Vec<_>>()),
        OrderArg::Explicit(o) => Some(o.clone()),
        OrderArg::Search => match find_lq_order(&ideal, ctx.lq_cap())? {
            LqSearch::Found { order } => Some(order),
            LqSearch::Exhausted { dead_sets } => {
                ctx.emit(
                    json!({ "k": k, "generators": text, "linear_quotients": false, "search": "exhausted", "dead_sets": dead_sets }),
                    || format!("{}: no order has linear quotients ({dead_sets} dead prefix sets)\n", subject(k)),
                );
                return Ok(false);
            }
        },
    };
    let order = chosen.expect("order chosen");
    match verify_lq_order(&ideal, &order)? {
        LqVerdict::Certified(cert) => {
            ctx.emit(
                json!({ "k": k, "generators": text, "linear_quotients": true, "certificate": cert }),
                || {
                    let mut s = format!("{}: linear quotients in order {:?}\n", subject(k), cert.order);
                    if witness {
                        for (j, row) in cert.witnesses.iter().enumerate().skip(1) {
                            let uj = &text[cert.order[j]];
                            s.push_str(&format!(
                                "  {j}: {uj}  colon ({})  witness positions {row:?}\n",
                                colon_vars(&ideal, &cert.order, j, row)
                            ));
                        }
                    }
                    s
                },
            );
            Ok(true)
        }
        LqVerdict::Refuted { i, j } => {
            let (ui, uj) = (&text[order[i]], &text[order[j]]);
            let colon = ideal.format(ideal.generator(order[i]).colon(ideal.generator(order[j])));
            ctx.emit(
                json!({ "k": k, "generators": text, "linear_quotients": false, "order": order, "refuted": { "i": i, "j": j, "u_i": ui, "u_j": uj } }),
                || {
                    format!(
                        "{}: order {:?} fails at position {j}: {ui} : {uj} = {colon} has no variable divisor among earlier colons\n",
                        subject(k),
                        order
                    )
                },
            );
            Ok(false)
        }
    }
}

fn colon_vars(ideal: &MonomialIdeal, order: &[usize], j: usize, row: &[usize]) -> String {
    let uj = ideal.generator(order[j]);
    let vars: BTreeSet<String> = row.iter().map(|&t| ideal.format(ideal.generator(order[t]).colon(uj))).collect();
    vars.into_iter().collect::<Vec<_>>().join(", ")
}

fn check_lr(ctx: &Ctx, path: &Path, k: Option<usize>) -> Run {
    let (ideal, k) = input::load_ideal(path, k)?;
    match is_linearly_related(&ideal) {
        LinearRelatedness::Related => {
            ctx.emit(json!({ "k": k, "linearly_related": true }), || {
                format!("{}: linearly related ({} generators)\n", subject(k), ideal.len())
            });
            Ok(true)
        }
        LinearRelatedness::NotRelated { u, v } => {
            let (u, v) = (ideal.format(ideal.generator(u)), ideal.format(ideal.generator(v)));
            ctx.emit(json!({ "k": k, "linearly_related": false, "pair": [u, v] }), || {
                format!("{}: not linearly related; {u} and {v} are disconnected in their restricted generator graph\n", subject(k))
            });
            Ok(false)
        }
    }
}

fn betti(ctx: &Ctx, path: &Path, k: Option<usize>) -> Run {
    let (ideal, k) = input::load_ideal(path, k)?;
    let table = betti_table(&ideal, ctx.betti())?;
    let linear = table.is_linear(ideal.degree());
    let mut value = serde_json::to_value(table.to_json()).expect("serializable");
    value["k"] = json!(k);
    value["linear_resolution"] = json!(linear);
    ctx.emit(value, || {
        format!(
            "Betti table of S/I for {} over {}\n{table}reg(S/I) = {}, linear resolution: {linear}\n",
            subject(k),
            ctx.field,
            table.regularity()
        )
    });
    Ok(true)
}

fn linearity(ctx: &Ctx, path: &Path, profile: bool) -> Run {
    let g = input::load_graph(path)?;
    if profile {
        let verdicts = linear_resolution_profile(&g, ctx.betti())?;
        let c = verdicts.iter().position(|&b| b).map_or(verdicts.len(), |i| i + 1);
        ctx.emit(json!({ "field": ctx.field, "linearity_index": c, "linear": verdicts }), || {
            let mut s = format!("linearity index {c} over {}\n", ctx.field);
            for (k, b) in verdicts.iter().enumerate() {
                s.push_str(&format!("  k = {}: {}\n", k + 1, if *b { "linear" } else { "not linear" }));
            }
            s
        });
    } else {
        let c = linearity_index(&g, ctx.betti())?;
        ctx.emit(json!({ "field": ctx.field, "linearity_index": c }), || {
            format!("linearity index {c} over {}\n", ctx.field)
        });
    }
    Ok(true)
}

fn theorem(ctx: &Ctx, p: usize, c: usize, q: usize) -> Run {
    let report = verify_theorem(p, c, q, ctx.field)?;
    let passed = report.passed;
    let value = serde_json::to_value(&report).expect("serializable");
    ctx.emit(value, || {
        let ch = report.checks;
        let mark = |b: bool| if b { "ok" } else { "FAILED" };
        let mut s = format!("G({p},{c},{q}) over {}: {} vertices\n", ctx.field, report.graph.vertices.len());
        s.push_str(&format!("  nu1 = {} (expected {p}) {}\n", report.nu1, mark(ch.nu1_is_p)));
        s.push_str(&format!("  nu  = {} (expected {q}) {}\n", report.nu, mark(ch.nu_is_q)));
        for e in &report.linear_quotients {
            let verdict = if e.certificate.is_some() { "revlex linear quotients" } else { "revlex order refuted" };
            s.push_str(&format!("  k = {}: {} generators, {verdict}\n", e.k, e.generators));
        }
        for e in &report.not_linearly_related {
            match &e.pair {
                Some((u, v)) => s.push_str(&format!("  k = {}: not linearly related, witness {u} / {v}\n", e.k)),
                None => s.push_str(&format!("  k = {}: linearly related (unexpected)\n", e.k)),
            }
        }
        s.push_str(&format!(
            "  linearity index {} (expected {c}) {}\n{}\n",
            report.linearity_index,
            mark(ch.linearity_index_is_c),
            if passed { "PASS" } else { "FAIL" }
        ));
        s
    });
    Ok(passed)
}

fn scan(ctx: &Ctx, max_vertices: usize, checks: &[String], sample: Option<usize>) -> Run {
    let selected: Vec<ScanCheck> = if checks.is_empty() {
        ScanCheck::ALL.to_vec()
    } else {
        checks.iter().map(|c| c.parse()).collect::<Result<_, _>>()?
    };
    let mut opts = ScanOptions::new(max_vertices, selected);
    opts.betti = ctx.betti();
    opts.lq_cap = ctx.lq_cap();
    opts.sample = sample;
    opts.seed = ctx.seed;
    if ctx.cap_override {
        opts.vertex_cap = MAX_CANONICAL_VERTICES;
    }
    let report = run_scan(&opts)?;
    let clean = report.counterexample_count() == 0;
    ctx.emit(serde_json::to_value(&report).expect("serializable"), || {
        let mut s = format!("{} graphs with an edge on at most {max_vertices} vertices, over {}\n", report.graphs, report.field);
        for c in &report.checks {
            s.push_str(&format!(
                "  {:<13} examined {:>5}  skipped {:>3}  counterexamples {}\n",
                c.check.to_string(),
                c.examined,
                c.skipped,
                c.counterexamples.len()
            ));
            for x in &c.counterexamples {
                let g = x.graph.to_graph().expect("scanned graph");
                s.push_str(&format!("    {}: {}\n", edge_labels(&g).join(" "), x.detail));
            }
        }
        if !report.persistence.is_empty() {
            s.push_str("  persistence (c, verdicts for k = 1..nu):\n");
            for row in &report.persistence {
                let g = row.graph.to_graph().expect("scanned graph");
                let v: String = row.linear.iter().map(|&b| if b { 'L' } else { '.' }).collect();
                s.push_str(&format!(
                    "    c = {} {v:<4} {}{}\n",
                    row.linearity_index,
                    edge_labels(&g).join(" "),
                    if row.persists { "" } else { "  (not persistent)" }
                ));
            }
        }
        s
    });
    Ok(clean)
}

fn run(cli: Cli) -> Run {
    let ctx = Ctx { field: cli.field.into(), json: cli.json, seed: cli.seed, cap_override: cli.cap_override };
    match &cli.command {
        Command::Construct { family, out } => construct(&ctx, family, out.as_deref()),
        Command::Invariants { graph } => invariants(&ctx, graph),
        Command::Power { graph, k } => power(&ctx, graph, *k),
        Command::CheckLq { input, k, order, witness } => check_lq(&ctx, input, *k, order, *witness),
        Command::CheckLr { input, k } => check_lr(&ctx, input, *k),
        Command::Betti { input, k } => betti(&ctx, input, *k),
        Command::LinearityIndex { graph, profile } => linearity(&ctx, graph, *profile),
        Command::VerifyTheorem { p, c, q } => theorem(&ctx, *p, *c, *q),
        Command::Scan { max_vertices, checks, sample } => scan(&ctx, *max_vertices, checks, *sample),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
