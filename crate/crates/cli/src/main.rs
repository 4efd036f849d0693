use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use minorkit::canon::{canonical_key, isomorphism};
use minorkit::catalog::Catalog;
use minorkit::constructions::{enumerate_all_t_sums, enumerate_edge_additions, enumerate_splits};
use minorkit::format::{parse_any, to_dot, to_edge_list, to_graph6};
use minorkit::generate::{closure_generate, ClosureTask, Rule};
use minorkit::minor::{find_minor_model_escalating, DEFAULT_BUDGET};
use minorkit::{bits, canonical_graph, verify_minor_model, CanonKey, Graph, Pattern, Predicate};
use minorkit_verify::{run_all, suite_ids, Config, Report, Verdict, DEFAULT_DEPTH, SUITES};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "minorkit", version, about = "Minor queries, generation and verification suites for small graphs")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug, Clone)]
struct Opts {
    /// Output format for graphs.
    #[arg(long, global = true, value_enum, default_value_t = Format::Graph6)]
    format: Format,
    /// Worker threads.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,
    /// Search-node budget per minor query.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Members per infinite family for `verify`.
    #[arg(long, global = true, default_value_t = DEFAULT_DEPTH)]
    depth: usize,
    /// Output file, or directory for `verify`, `catalog rederive` and `catalog export`.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Emit exactly one JSON document.
    #[arg(long, global = true)]
    json: bool,
    /// Include the resolved configuration in the output.
    #[arg(long, global = true)]
    manifest: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Graph6,
    EdgeList,
    Dot,
}

/// Graph inputs are file paths (graph6 or edge list), catalog names,
/// `catalog:` names, `family:` URIs, catalog expressions such as
/// `V8+13+24`, or literal graph6 strings.
#[derive(Subcommand, Debug)]
enum Cmd {
    /// Test whether PATTERN is a minor of HOST.
    Minor { host: String, pattern: String },
    /// Test two graphs for isomorphism.
    Iso { first: String, second: String },
    /// Print the canonical form of a graph.
    Canon { graph: String },
    /// Close seed graphs under edge additions and vertex splits.
    Gen(GenArgs),
    /// List single edge additions, vertex splits or T-sums.
    Enum {
        #[command(subcommand)]
        kind: EnumKind,
        /// Keep one graph per isomorphism class.
        #[arg(long, global = true)]
        classes: bool,
    },
    /// Catalog access: `list`, `rederive`, `export`, or an entry name.
    Catalog { target: String },
    /// Run verification suites (all when none are named).
    Verify {
        suites: Vec<String>,
        #[arg(long)]
        skip: Vec<String>,
        /// List the suites and exit.
        #[arg(long)]
        list: bool,
    },
    /// Print a graph in DOT.
    ExportDot { graph: String },
}

#[derive(Args, Debug)]
struct GenArgs {
    /// Seed inputs; `wheels` stands for every wheel that fits the order bound.
    #[arg(long = "seed", required = true)]
    seeds: Vec<String>,
    /// Rules to apply (default: both).
    #[arg(long = "rule", value_parser = parse_rule)]
    rules: Vec<Rule>,
    #[arg(long)]
    max_order: usize,
    #[arg(long)]
    max_edges: usize,
    /// Predicate every generated graph must satisfy; pruning on it is only
    /// complete when it is minor-closed.
    #[arg(long, default_value = "all")]
    keep: String,
    /// Predicate applied to the closure afterwards.
    #[arg(long)]
    filter: Option<String>,
}

#[derive(Subcommand, Debug)]
enum EnumKind {
    Additions { graph: String },
    Splits { graph: String },
    Tsums {
        left: String,
        right: String,
        /// Only T-sums with this many contracted matching edges.
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=3))]
        contracted: Option<u8>,
    },
}

fn parse_rule(s: &str) -> Result<Rule, String> {
    s.parse()
}

/// A failed command: exit status and message.
struct Failure(u8, String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(2, e.to_string())
    }
}

/// What a command produced. `text` and `json` are alternative renderings.
struct Done {
    text: String,
    json: Value,
    code: u8,
    /// The command already used `--out` itself.
    wrote_out: bool,
}

impl Done {
    fn new(text: String, json: Value) -> Self {
        Done { text, json, code: 0, wrote_out: false }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.opts.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.into()).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            if cli.opts.json {
                println!("{}", json!({ "error": msg }));
            } else {
                eprintln!("error: {msg}");
            }
            ExitCode::from(code)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let o = &cli.opts;
    let done = match &cli.cmd {
        Cmd::Minor { host, pattern } => minor(o, host, pattern)?,
        Cmd::Iso { first, second } => iso(first, second)?,
        Cmd::Canon { graph } => canon(o, graph)?,
        Cmd::Gen(args) => gen(o, args)?,
        Cmd::Enum { kind, classes } => enumerate(o, kind, *classes)?,
        Cmd::Catalog { target } => catalog(o, target)?,
        Cmd::Verify { suites, skip, list } => verify(o, suites, skip, *list)?,
        Cmd::ExportDot { graph } => {
            let g = input(graph)?;
            let dot = to_dot(&g, graph);
            Done::new(dot.clone(), json!({ "dot": dot }))
        }
    };
    let config = manifest(cli);
    let body = if o.json {
        let mut doc = done.json;
        if o.manifest {
            doc["invocation"] = config;
        }
        serde_json::to_string_pretty(&doc)? + "\n"
    } else {
        if o.manifest {
            eprintln!("invocation: {config}");
        }
        done.text
    };
    match &o.out {
        Some(path) if !done.wrote_out => std::fs::write(path, body).map_err(|e| Failure(2, format!("{}: {e}", path.display())))?,
        _ => print!("{body}"),
    }
    Ok(done.code)
}

fn manifest(cli: &Cli) -> Value {
    let o = &cli.opts;
    json!({
        "version": env!("CARGO_PKG_VERSION"),
        "command": format!("{:?}", cli.cmd),
        "format": format!("{:?}", o.format).to_lowercase(),
        "jobs": rayon::current_num_threads(),
        "budget": o.budget,
        "depth": o.depth,
        "out": o.out,
    })
}

/// Resolves one graph input.
fn input(spec: &str) -> Result<Graph, Failure> {
    let mut graphs = inputs(spec)?;
    match graphs.len() {
        1 => Ok(graphs.remove(0)),
        n => Err(Failure(2, format!("`{spec}` holds {n} graphs, expected one"))),
    }
}

/// Resolves an input that may hold several graphs (a graph6 file).
fn inputs(spec: &str) -> Result<Vec<Graph>, Failure> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Failure(2, format!("{spec}: {e}")))?;
        let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        let read = |s: &str| parse_any(s).map_err(|e| Failure(2, format!("{spec}: {e}")));
        return if lines.len() > 1 && lines.iter().all(|l| !l.contains(char::is_whitespace)) {
            lines.into_iter().map(read).collect()
        } else {
            Ok(vec![read(&text)?])
        };
    }
    match Catalog::builtin().resolve(spec) {
        Ok(g) => Ok(vec![g]),
        Err(named) => parse_any(spec).map(|g| vec![g]).map_err(|_| {
            Failure(2, format!("`{spec}` is not a file, catalog name, family URI or graph6 string ({named})"))
        }),
    }
}

fn render(g: &Graph, format: Format, name: &str) -> String {
    match format {
        Format::Graph6 => to_graph6(g) + "\n",
        Format::EdgeList => to_edge_list(g),
        Format::Dot => to_dot(g, name),
    }
}

/// Renders a list of labeled graphs. graph6 gives one line per graph with the
/// label after a tab; the other formats put the label in a comment or the
/// graph name.
fn render_all(items: &[(String, Graph)], format: Format) -> String {
    let mut s = String::new();
    for (label, g) in items {
        match format {
            Format::Graph6 if label.is_empty() => s.push_str(&render(g, format, label)),
            Format::Graph6 => s.push_str(&format!("{}\t{label}\n", to_graph6(g))),
            Format::EdgeList => s.push_str(&format!("# {label}\n{}\n", to_edge_list(g))),
            Format::Dot => s.push_str(&to_dot(g, label)),
        }
    }
    s
}

fn minor(o: &Opts, host: &str, pattern: &str) -> Result<Done, Failure> {
    let h = input(host)?;
    let p = input(pattern)?;
    let model = find_minor_model_escalating(&h, &Pattern::new(&p), o.budget)
        .map_err(|e| Failure(2, format!("INCONCLUSIVE: {e}")))?;
    let Some(m) = model else {
        return Ok(Done::new("NO MINOR\n".into(), json!({ "verdict": "no-minor" })));
    };
    if !verify_minor_model(&h, &p, &m) {
        return Err(Failure(2, "internal error: the search returned an invalid model".into()));
    }
    let map = m.to_label_map(&h, &p);
    let mut text = String::from("MINOR FOUND\n");
    for (pv, hs) in &map {
        let hs: Vec<String> = hs.iter().map(u16::to_string).collect();
        text.push_str(&format!("  {pv}: {}\n", hs.join(" ")));
    }
    let cert: serde_json::Map<String, Value> = map.iter().map(|(pv, hs)| (pv.to_string(), json!(hs))).collect();
    Ok(Done::new(text, json!({ "verdict": "minor-found", "certificate": cert })))
}

fn iso(first: &str, second: &str) -> Result<Done, Failure> {
    let (g, h) = (input(first)?, input(second)?);
    Ok(match isomorphism(&g, &h) {
        Some(p) => {
            let pairs: Vec<(u16, u16)> = p.iter().enumerate().map(|(i, &j)| (g.label(i), h.label(j))).collect();
            let shown: Vec<String> = pairs.iter().map(|(a, b)| format!("{a}->{b}")).collect();
            Done::new(
                format!("ISOMORPHIC\n  {}\n", shown.join(" ")),
                json!({ "isomorphic": true, "mapping": pairs }),
            )
        }
        None => Done::new("NOT ISOMORPHIC\n".into(), json!({ "isomorphic": false })),
    })
}

fn canon(o: &Opts, spec: &str) -> Result<Done, Failure> {
    let g = input(spec)?;
    let c = canonical_graph(&g);
    let form = canonical_key(&g).form();
    Ok(Done::new(
        render(&c, o.format, "canonical"),
        json!({ "canonical": form.as_str(), "order": g.order(), "size": g.size() }),
    ))
}

fn predicate(s: &str) -> Result<Predicate, Failure> {
    s.parse::<Predicate>().map_err(|e| Failure(2, format!("predicate `{s}`: {e}")))
}

fn gen(o: &Opts, a: &GenArgs) -> Result<Done, Failure> {
    let mut seeds = Vec::new();
    for s in &a.seeds {
        if s == "wheels" {
            seeds.extend((3..a.max_order).map(minorkit::constructions::wheel));
        } else {
            seeds.extend(inputs(s)?);
        }
    }
    let rules = if a.rules.is_empty() { vec![Rule::AddEdge, Rule::SplitVertex] } else { a.rules.clone() };
    let keep = predicate(&a.keep)?;
    let mut task = ClosureTask::new(seeds.clone(), &rules, a.max_order, a.max_edges, keep.clone());
    task.budget = o.budget;
    let start = Instant::now();
    let mut closure = closure_generate(&task)?;
    let visited = closure.visited;
    let filter = a.filter.as_deref().map(predicate).transpose()?;
    if let Some(f) = &filter {
        closure = closure.filter(f, o.budget)?;
    }
    let profile: Vec<Value> = closure
        .profile()
        .into_iter()
        .map(|((n, m), c)| json!({ "order": n, "edges": m, "count": c }))
        .collect();
    let report = json!({
        "seeds": seeds.len(),
        "rules": rules,
        "max_order": a.max_order,
        "max_edges": a.max_edges,
        "keep": keep.versions(),
        "filter": filter.as_ref().map(Predicate::versions),
        "visited": visited,
        "classes": closure.len(),
        "profile": profile,
        "runtime_ms": start.elapsed().as_millis() as u64,
    });
    let items: Vec<(String, Graph)> = closure.graphs().map(|g| (String::new(), g)).collect();
    if o.json {
        let forms: Vec<String> = closure.keys().iter().map(|k| k.form().as_str().to_string()).collect();
        return Ok(Done::new(String::new(), json!({ "graphs": forms, "manifest": report })));
    }
    match &o.out {
        Some(path) => {
            let side = PathBuf::from(format!("{}.manifest.json", path.display()));
            std::fs::write(&side, serde_json::to_string_pretty(&report)? + "\n")?;
        }
        None => eprintln!("manifest: {report}"),
    }
    Ok(Done::new(render_all(&items, o.format), Value::Null))
}

fn enumerate(o: &Opts, kind: &EnumKind, classes: bool) -> Result<Done, Failure> {
    let items: Vec<(String, Graph)> = match kind {
        EnumKind::Additions { graph } => {
            let g = input(graph)?;
            enumerate_edge_additions(&g)
                .into_iter()
                .map(|((u, v), h)| (format!("+{},{}", g.label(u), g.label(v)), h))
                .collect()
        }
        EnumKind::Splits { graph } => {
            let g = input(graph)?;
            let labels = |s: u32| bits::iter(s).map(|v| g.label(v).to_string()).collect::<Vec<_>>().join(",");
            enumerate_splits(&g)
                .into_iter()
                .map(|(s, h)| (format!("split {}: {}|{}", g.label(s.v), labels(s.x), labels(s.y)), h))
                .collect()
        }
        EnumKind::Tsums { left, right, contracted } => {
            let (g1, g2) = (input(left)?, input(right)?);
            let sums = enumerate_all_t_sums(&g1, &g2)?;
            let mut out = Vec::new();
            for (i, bucket) in sums.by_count.iter().enumerate() {
                if contracted.is_some_and(|c| usize::from(c) != i) {
                    continue;
                }
                for (s, h) in bucket {
                    let m: Vec<String> = s.matching.iter().map(|&v| g2.label(v).to_string()).collect();
                    out.push((
                        format!("T{i} at {}/{} matching {} contracted {:03b}", g1.label(s.x), g2.label(s.y), m.join(","), s.contracted),
                        *h,
                    ));
                }
            }
            out
        }
    };
    let items = if classes { one_per_class(items) } else { items };
    let json: Vec<Value> = items
        .iter()
        .map(|(op, h)| json!({ "op": op, "graph6": to_graph6(h), "canonical": canonical_key(h).form().as_str() }))
        .collect();
    Ok(Done::new(render_all(&items, o.format), json!(json)))
}

fn one_per_class(items: Vec<(String, Graph)>) -> Vec<(String, Graph)> {
    let mut seen: std::collections::HashSet<CanonKey> = std::collections::HashSet::new();
    items.into_iter().filter(|(_, g)| seen.insert(canonical_key(g))).collect()
}

fn catalog(o: &Opts, target: &str) -> Result<Done, Failure> {
    let cat = Catalog::builtin();
    match target {
        "list" => {
            let mut text = String::new();
            let mut rows = Vec::new();
            for e in cat.entries() {
                let g6 = to_graph6(&e.graph);
                let prov = serde_json::to_value(e.spec.provenance)?;
                let prov = prov.as_str().unwrap_or_default().to_string();
                text.push_str(&format!("{:<24} {:>2} {:>3}  {:<21} {g6}\n", e.spec.name, e.graph.order(), e.graph.size(), prov));
                rows.push(json!({ "name": e.spec.name, "order": e.graph.order(), "size": e.graph.size(), "provenance": prov, "graph6": g6 }));
            }
            Ok(Done::new(text, json!(rows)))
        }
        "rederive" => {
            let fresh = Catalog::rederive(Catalog::builtin_specs(), o.budget)?;
            let mut text = String::new();
            let mut rows = Vec::new();
            let mut bad = 0;
            for (old, new) in cat.entries().iter().zip(fresh.entries()) {
                let same = if old.spec.labeled {
                    old.graph == new.graph
                } else {
                    canonical_key(&old.graph) == canonical_key(&new.graph)
                };
                bad += usize::from(!same);
                text.push_str(&format!("{} {}\n", if same { "ok      " } else { "MISMATCH" }, old.spec.name));
                rows.push(json!({ "name": old.spec.name, "ok": same, "graph6": to_graph6(&new.graph) }));
            }
            text.push_str(&format!("{} entries rederived, {bad} mismatched\n", rows.len()));
            let mut done = Done::new(text, json!({ "entries": rows, "mismatched": bad }));
            if let Some(dir) = &o.out {
                fresh.write(dir)?;
                done.wrote_out = true;
            }
            done.code = u8::from(bad > 0);
            Ok(done)
        }
        "export" => {
            let items: Vec<(String, Graph)> = cat.entries().iter().map(|e| (e.spec.name.clone(), e.graph)).collect();
            let Some(dir) = &o.out else {
                let json: Vec<Value> = items.iter().map(|(n, g)| json!({ "name": n, "graph6": to_graph6(g) })).collect();
                return Ok(Done::new(render_all(&items, o.format), json!(json)));
            };
            cat.write(dir)?;
            let ext = match o.format {
                Format::Graph6 => None,
                Format::EdgeList => Some("txt"),
                Format::Dot => Some("dot"),
            };
            let mut files = vec!["index.json".to_string(), "graphs.g6".to_string()];
            if let Some(ext) = ext {
                for (i, (name, g)) in items.iter().enumerate() {
                    let slug: String = name.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
                    let file = format!("{i:02}-{slug}.{ext}");
                    std::fs::write(dir.join(&file), render(g, o.format, name))?;
                    files.push(file);
                }
            }
            let mut done = Done::new(
                format!("exported {} entries to {}\n", items.len(), dir.display()),
                json!({ "dir": dir, "files": files }),
            );
            done.wrote_out = true;
            Ok(done)
        }
        name => {
            let e = cat.get(name.strip_prefix("catalog:").unwrap_or(name)).ok_or_else(|| {
                Failure(2, format!("no catalog entry `{name}`; `catalog list` shows the names"))
            })?;
            let spec = serde_json::to_value(&e.spec)?;
            let text = format!("{}{}", serde_json::to_string_pretty(&spec)? + "\n", render(&e.graph, o.format, &e.spec.name));
            Ok(Done::new(text, json!({ "entry": spec, "graph6": to_graph6(&e.graph) })))
        }
    }
}

fn verify(o: &Opts, suites: &[String], skip: &[String], list: bool) -> Result<Done, Failure> {
    if list {
        let text: String = SUITES.iter().map(|s| format!("{:<4} {}\n", s.id, s.title)).collect();
        return Ok(Done::new(text, json!(suite_ids())));
    }
    let cfg = Config { budget: o.budget, depth: o.depth, suites: suites.to_vec(), skip: skip.to_vec() };
    let report = run_all(&cfg).map_err(|e| Failure(2, format!("{e}; suites are {}", suite_ids().join(", "))))?;
    let mut done = Done::new(summary(&report), serde_json::to_value(&report)?);
    if let Some(dir) = &o.out {
        report.write(dir)?;
        if !o.json {
            done.text.push_str(&format!("report written to {}\n", dir.display()));
        }
        done.wrote_out = true;
    }
    done.code = report.exit_code() as u8;
    Ok(done)
}

fn summary(report: &Report) -> String {
    let mut s = String::new();
    for r in report.suites.iter().filter(|r| r.verdict != Verdict::Skipped) {
        let verdict = serde_json::to_value(r.verdict).expect("enum").as_str().unwrap_or_default().to_uppercase();
        let line = r.headline.as_deref().unwrap_or(&r.title);
        let depth = if r.reduced_depth { " (reduced depth)" } else { "" };
        s.push_str(&format!("{:<4} {line} — {verdict}{depth}\n", r.id));
        for c in r.checks.iter().filter(|c| !c.ok) {
            s.push_str(&format!("       failed: {}\n", c.name));
        }
        if r.verdict == Verdict::Inconclusive {
            for n in &r.notes {
                s.push_str(&format!("       {n}\n"));
            }
        }
    }
    let overall = serde_json::to_value(report.verdict).expect("enum");
    s.push_str(&format!("overall: {}\n", overall.as_str().unwrap_or_default()));
    s
}
