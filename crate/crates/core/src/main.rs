use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use skewbrace::action::validate_brace_action;
use skewbrace::brace::{dedup_up_to_isomorphism, enumerate_skew_braces};
use skewbrace::braiding::{
    braiding_from_brace, check_braid_relation, check_braiding_axioms, BraidingOperator,
};
use skewbrace::group::{orbits, Endomorphism, GroupAction};
use skewbrace::io::{self, SolutionRecord};
use skewbrace::product::iterate_amplification;
use skewbrace::reflection::{
    action_from_k, check_braided_action, check_reflection_equation, k_from_action, k_squared,
    ReflectionMap,
};
use skewbrace::report::{Check, CheckReport};

/// Construct and verify set-theoretic Yang-Baxter and reflection-equation
/// solutions from finite skew braces.
#[derive(Parser)]
#[command(name = "skewbrace", version, about)]
struct Cli {
    /// Emit machine-readable JSON on stdout instead of a text report.
    #[arg(long, global = true)]
    json: bool,
    /// Print counterexample tuples for failed checks.
    #[arg(long, global = true)]
    witness: bool,
    /// Seed for randomized generation. Accepted for reproducibility; every
    /// current command is deterministic, so the value is not consumed.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate a group, brace, braiding, or action file.
    Validate {
        file: PathBuf,
        /// One of: group, brace, braiding, action. Inferred when omitted.
        #[arg(long)]
        kind: Option<String>,
    },
    /// Enumerate all skew braces over a dot group.
    Enumerate {
        /// Enumerate over every catalog group of this order (1..=8).
        #[arg(long, conflicts_with = "dot")]
        order: Option<usize>,
        /// Enumerate over the dot group in this file.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Also report counts up to brace isomorphism.
        #[arg(long)]
        dedup: bool,
        /// Write the enumerated braces as a JSON array to this file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the orbit decomposition of an action file.
    Orbits { file: PathBuf },
    /// Derive the braiding operator of a skew brace.
    #[command(name = "derive-r")]
    DeriveR {
        brace: PathBuf,
        /// Write the braiding tables to this file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check the braid relation (and optionally the Yang-Baxter form) of a
    /// braiding or pair-map file.
    #[command(name = "check-ybe")]
    CheckYbe {
        r: PathBuf,
        /// Also check the Yang-Baxter equation of the flipped map.
        #[arg(long)]
        qybe: bool,
        /// Check the four braiding-operator axioms against this group.
        #[arg(long)]
        group: Option<PathBuf>,
    },
    /// Check the reflection equation of a k-map against a braiding.
    #[command(name = "check-re")]
    CheckRe {
        #[arg(long)]
        r: PathBuf,
        #[arg(long)]
        k: PathBuf,
    },
    /// Build the reflection map of a brace action.
    #[command(name = "k-from-pi")]
    KFromPi {
        action: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Recover the endomorphism family of a braided reflection map.
    #[command(name = "pi-from-k")]
    PiFromK {
        #[arg(long)]
        brace: PathBuf,
        #[arg(long)]
        k: PathBuf,
        /// Action file for the circ-action on X; defaults to left
        /// translation when the k-map is square.
        #[arg(long)]
        act: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The square of the brace's braiding as a reflection map.
    #[command(name = "k-squared")]
    KSquared {
        brace: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Amplify a reflection-equation solution onto A^depth x X.
    Amplify {
        #[arg(long)]
        brace: PathBuf,
        #[arg(long)]
        depth: usize,
        /// Base k-map file; defaults to the standard-action reflection map.
        #[arg(long, requires = "act")]
        k: Option<PathBuf>,
        /// Base action file (act table over the brace).
        #[arg(long)]
        act: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List the diamond-fixed endomorphisms of a brace.
    #[command(name = "fixed-endos")]
    FixedEndos { brace: PathBuf },
    /// Run the brace-action validator on an action file.
    #[command(name = "validate-action")]
    ValidateAction { action: PathBuf },
}

enum CliError {
    Input(String),
}

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Input(e.to_string())
    }
}

type CmdResult = Result<bool, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Output { json: cli.json, witness: cli.witness };
    let _ = cli.seed;
    match run(cli.cmd, &ctx) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

struct Output {
    json: bool,
    witness: bool,
}

impl Output {
    fn report(&self, report: &CheckReport) {
        if self.json {
            return;
        }
        for c in &report.checks {
            self.check(c);
        }
    }

    fn check(&self, c: &Check) {
        if self.json {
            return;
        }
        if c.pass {
            println!("{}: PASS", c.name);
        } else if self.witness {
            match &c.witness {
                Some(w) => println!("{}: FAIL at {w:?}", c.name),
                None => println!("{}: FAIL", c.name),
            }
        } else {
            println!("{}: FAIL", c.name);
        }
    }

    fn line(&self, text: impl AsRef<str>) {
        if !self.json {
            println!("{}", text.as_ref());
        }
    }

    fn record(&self, record: &SolutionRecord) {
        if self.json {
            print!("{}", io::to_canonical_json(record));
        }
    }

    fn value(&self, value: &serde_json::Value) {
        if self.json {
            print!("{}", io::to_canonical_json(value));
        }
    }
}

fn run(cmd: Cmd, out: &Output) -> CmdResult {
    match cmd {
        Cmd::Validate { file, kind } => validate_cmd(&file, kind.as_deref(), out),
        Cmd::Enumerate { order, dot, dedup, output } => {
            enumerate_cmd(order, dot.as_deref(), dedup, output.as_deref(), out)
        }
        Cmd::Orbits { file } => orbits_cmd(&file, out),
        Cmd::DeriveR { brace, output } => derive_r_cmd(&brace, output.as_deref(), out),
        Cmd::CheckYbe { r, qybe, group } => {
            check_ybe_cmd(&r, qybe, group.as_deref(), out)
        }
        Cmd::CheckRe { r, k } => check_re_cmd(&r, &k, out),
        Cmd::KFromPi { action, output } => k_from_pi_cmd(&action, output.as_deref(), out),
        Cmd::PiFromK { brace, k, act, output } => {
            pi_from_k_cmd(&brace, &k, act.as_deref(), output.as_deref(), out)
        }
        Cmd::KSquared { brace, output } => k_squared_cmd(&brace, output.as_deref(), out),
        Cmd::Amplify { brace, depth, k, act, output } => {
            amplify_cmd(&brace, depth, k.as_deref(), act.as_deref(), output.as_deref(), out)
        }
        Cmd::FixedEndos { brace } => fixed_endos_cmd(&brace, out),
        Cmd::ValidateAction { action } => validate_action_cmd(&action, out),
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    if let Some(path) = path {
        std::fs::write(path, text).map_err(|e| CliError::Input(e.to_string()))?;
    }
    Ok(())
}

fn validate_cmd(file: &Path, kind: Option<&str>, out: &Output) -> CmdResult {
    let kinds: Vec<&str> = match kind {
        Some(k) => vec![k],
        None => vec!["group", "brace", "action", "braiding"],
    };
    let mut last_validation: Option<String> = None;
    for k in &kinds {
        let outcome: Result<(), io::IoError> = match *k {
            "group" => io::load_group(file).map(drop),
            "brace" => io::load_brace(file).map(drop),
            "action" => io::load_action(file).map(drop),
            "braiding" => io::load_braiding_tables(file).map(drop),
            other => return Err(CliError::Input(format!("unknown kind `{other}`"))),
        };
        match outcome {
            Ok(()) => {
                out.line(format!("valid {k}"));
                out.value(&json!({"kind": k, "valid": true}));
                return Ok(true);
            }
            Err(io::IoError::Validation { message, .. }) => {
                last_validation = Some(format!("{k}: {message}"));
                if kind.is_some() {
                    break;
                }
            }
            Err(io::IoError::Read { source, .. }) => {
                return Err(CliError::Input(source.to_string()))
            }
            Err(io::IoError::Schema { .. }) => continue,
        }
    }
    match last_validation {
        Some(message) => {
            out.line(format!("invalid: {message}"));
            out.value(&json!({"valid": false, "error": message}));
            Ok(false)
        }
        None => Err(CliError::Input(
            "file does not match any known schema".to_string(),
        )),
    }
}

fn enumerate_cmd(
    order: Option<usize>,
    dot: Option<&Path>,
    dedup: bool,
    output: Option<&Path>,
    out: &Output,
) -> CmdResult {
    let dots: Vec<(String, skewbrace::FiniteGroup)> = match (order, dot) {
        (Some(n), None) => {
            if !(1..=8).contains(&n) {
                return Err(CliError::Input(format!("no catalog for order {n}")));
            }
            skewbrace::catalog::groups_of_order(n)
        }
        (None, Some(path)) => vec![(path.display().to_string(), io::load_group(path)?)],
        _ => return Err(CliError::Input("pass exactly one of --order, --dot".into())),
    };
    let mut all = Vec::new();
    let mut per_dot = Vec::new();
    for (name, g) in &dots {
        let braces = enumerate_skew_braces(g)?;
        let classes = dedup.then(|| dedup_up_to_isomorphism(&braces).len());
        out.line(match classes {
            Some(c) => format!("{name}: {} braces, {c} up to isomorphism", braces.len()),
            None => format!("{name}: {} braces", braces.len()),
        });
        per_dot.push(json!({
            "classes": classes,
            "count": braces.len(),
            "dot": name,
        }));
        all.extend(braces);
    }
    out.line(format!("total: {}", all.len()));
    out.value(&json!({"groups": per_dot, "total": all.len()}));
    let listing: Vec<io::BraceJson> = all.iter().map(io::brace_to_json).collect();
    write_output(output, &io::to_canonical_json(&listing))?;
    Ok(true)
}

fn orbits_cmd(file: &Path, out: &Output) -> CmdResult {
    let (_, act) = io::load_bare_action(file)?;
    let parts = orbits(&act);
    let sizes: Vec<usize> = parts.iter().map(|o| o.len()).collect();
    out.line(format!(
        "orbit sizes: {}",
        sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")
    ));
    for o in &parts {
        out.line(format!("  {o:?}"));
    }
    out.value(&json!({"orbit_sizes": sizes, "orbits": parts}));
    Ok(true)
}

fn derive_r_cmd(brace_path: &Path, output: Option<&Path>, out: &Output) -> CmdResult {
    let brace = io::load_brace(brace_path)?;
    let r = braiding_from_brace(&brace)?;
    let axioms = check_braiding_axioms(&r);
    let braid = check_braid_relation(&r.as_pair_map(), true);
    out.report(&axioms);
    out.report(&braid.to_report());
    let mut record = SolutionRecord::new("YBE");
    record.push_report(&axioms);
    record.push_report(&braid.to_report());
    record
        .provenance
        .insert("construction".into(), json!("braiding-from-brace"));
    record
        .provenance
        .insert("brace".into(), json!(brace_path.display().to_string()));
    record.tables.insert(
        "braiding".into(),
        serde_json::to_value(io::braiding_to_json(&r)).unwrap(),
    );
    out.record(&record);
    write_output(output, &io::to_canonical_json(&io::braiding_to_json(&r)))?;
    Ok(record.all_pass())
}

fn check_ybe_cmd(
    r_path: &Path,
    qybe: bool,
    group: Option<&Path>,
    out: &Output,
) -> CmdResult {
    let map = io::load_square_map(r_path)?;
    if map.left_size() != map.right_size() {
        return Err(CliError::Input("braid relation needs a square pair map".into()));
    }
    let rel = check_braid_relation(&map, qybe);
    let mut record = SolutionRecord::new("YBE");
    out.report(&rel.to_report());
    record.push_report(&rel.to_report());
    if let Some(group_path) = group {
        let g = io::load_group(group_path)?;
        let tables = io::load_braiding_tables(r_path)?;
        if g.order() != tables.size {
            return Err(CliError::Input("group and braiding sizes differ".into()));
        }
        let r = BraidingOperator::from_tables(g, tables.rhd, tables.lhd);
        let axioms = check_braiding_axioms(&r);
        out.report(&axioms);
        record.push_report(&axioms);
    }
    record
        .provenance
        .insert("source".into(), json!(r_path.display().to_string()));
    record.tables.insert(
        "r".into(),
        serde_json::to_value(io::pair_map_to_json(&map)).unwrap(),
    );
    out.record(&record);
    Ok(record.all_pass())
}

fn check_re_cmd(r_path: &Path, k_path: &Path, out: &Output) -> CmdResult {
    let r = io::load_square_map(r_path)?;
    let k = io::load_rectangular_map(k_path)?;
    if r.left_size() != r.right_size() || k.left_size() != r.left_size() {
        return Err(CliError::Input("r must be square and share its size with k".into()));
    }
    let rep = check_reflection_equation(&r, &k);
    out.report(&rep.to_report());
    out.line(format!("k bijective: {}", rep.k_bijective));
    let mut record = SolutionRecord::new("RE");
    record.push_report(&rep.to_report());
    record.provenance.insert("r".into(), json!(r_path.display().to_string()));
    record.provenance.insert("k".into(), json!(k_path.display().to_string()));
    record
        .provenance
        .insert("k-bijective".into(), json!(rep.k_bijective));
    record.tables.insert(
        "k".into(),
        serde_json::to_value(io::pair_map_to_json(&k)).unwrap(),
    );
    out.record(&record);
    Ok(record.all_pass())
}

fn braided_record(
    kind_tag: &str,
    action_path: Option<&Path>,
    verdict: &skewbrace::reflection::BraidedActionReport,
    k: &ReflectionMap,
) -> SolutionRecord {
    let mut record = SolutionRecord::new("RE");
    record.push_report(&verdict.to_report());
    record.provenance.insert("construction".into(), json!(kind_tag));
    if let Some(p) = action_path {
        record.provenance.insert("action".into(), json!(p.display().to_string()));
    }
    record
        .provenance
        .insert("classification".into(), json!(format!("{:?}", verdict.classification)));
    record.tables.insert(
        "k".into(),
        serde_json::to_value(io::reflection_to_json(k)).unwrap(),
    );
    record
}

fn k_from_pi_cmd(action_path: &Path, output: Option<&Path>, out: &Output) -> CmdResult {
    let action = io::load_action(action_path)?;
    let k = k_from_action(&action)?;
    let r = braiding_from_brace(action.brace())?;
    let verdict = check_braided_action(&r, action.action(), &k);
    out.report(&verdict.to_report());
    out.line(format!("classification: {:?}", verdict.classification));
    let record = braided_record("k-from-pi", Some(action_path), &verdict, &k);
    out.record(&record);
    write_output(output, &io::to_canonical_json(&io::reflection_to_json(&k)))?;
    Ok(record.all_pass())
}

fn pi_from_k_cmd(
    brace_path: &Path,
    k_path: &Path,
    act_path: Option<&Path>,
    output: Option<&Path>,
    out: &Output,
) -> CmdResult {
    let brace = io::load_brace(brace_path)?;
    let (n, m, table) = io::load_k_map(k_path)?;
    if n != brace.order() {
        return Err(CliError::Input("k-map group size differs from the brace".into()));
    }
    let k = ReflectionMap::new(brace.circ().clone(), m, table)
        .ok_or_else(|| CliError::Input("malformed k table".into()))?;
    let act = match act_path {
        Some(p) => {
            let (act_brace, act) = io::load_bare_action(p)?;
            if act_brace != brace {
                return Err(CliError::Input("action file uses a different brace".into()));
            }
            if act.set_size() != m {
                return Err(CliError::Input("k-map and action set sizes differ".into()));
            }
            act
        }
        None if m == n => GroupAction::translation(brace.circ()),
        None => {
            return Err(CliError::Input(
                "k-map is not square; pass --act for the circ-action on X".into(),
            ))
        }
    };
    // a k-map that fails the braided axioms is a failed check, not bad input
    let r0 = braiding_from_brace(&brace)?;
    let pre = check_braided_action(&r0, &act, &k);
    if !pre.is_braided() {
        out.report(&pre.to_report());
        let mut record = SolutionRecord::new("RE");
        record.push_report(&pre.to_report());
        out.record(&record);
        return Ok(false);
    }
    let action = action_from_k(&brace, &act, &k)?;
    for x in 0..action.set_size() {
        out.line(format!("pi[{x}] = {:?}", action.pi(x).table()));
    }
    let r = braiding_from_brace(&brace)?;
    let verdict = check_braided_action(&r, action.action(), &k);
    let mut record = braided_record("pi-from-k", None, &verdict, &k);
    record.provenance.insert("brace".into(), json!(brace_path.display().to_string()));
    record.tables.insert(
        "action".into(),
        serde_json::to_value(io::action_to_json(&action)).unwrap(),
    );
    out.record(&record);
    write_output(output, &io::to_canonical_json(&io::action_to_json(&action)))?;
    Ok(record.all_pass())
}

fn k_squared_cmd(brace_path: &Path, output: Option<&Path>, out: &Output) -> CmdResult {
    let brace = io::load_brace(brace_path)?;
    let r = braiding_from_brace(&brace)?;
    let k = k_squared(&r);
    let act = GroupAction::translation(brace.circ());
    let verdict = check_braided_action(&r, &act, &k);
    out.report(&verdict.to_report());
    out.line(format!("classification: {:?}", verdict.classification));
    let mut record = braided_record("k-squared", None, &verdict, &k);
    record.provenance.insert("brace".into(), json!(brace_path.display().to_string()));
    out.record(&record);
    write_output(output, &io::to_canonical_json(&io::reflection_to_json(&k)))?;
    Ok(record.all_pass())
}

fn amplify_cmd(
    brace_path: &Path,
    depth: usize,
    k_path: Option<&Path>,
    act_path: Option<&Path>,
    output: Option<&Path>,
    out: &Output,
) -> CmdResult {
    let brace = io::load_brace(brace_path)?;
    let r = braiding_from_brace(&brace)?;
    let (act, k, base_name) = match (k_path, act_path) {
        (Some(kp), Some(ap)) => {
            let (act_brace, act) = io::load_bare_action(ap)?;
            if act_brace != brace {
                return Err(CliError::Input("action file uses a different brace".into()));
            }
            let (n, m, table) = io::load_k_map(kp)?;
            if n != brace.order() || m != act.set_size() {
                return Err(CliError::Input("k-map sizes do not match the action".into()));
            }
            let k = ReflectionMap::new(brace.circ().clone(), m, table)
                .ok_or_else(|| CliError::Input("malformed k table".into()))?;
            (act, k, kp.display().to_string())
        }
        (None, None) => {
            let act = GroupAction::translation(brace.circ());
            (act, k_squared(&r), "standard-action".to_string())
        }
        _ => return Err(CliError::Input("--k and --act go together".into())),
    };
    let maps = iterate_amplification(&r, &act, &k, depth)?;
    let final_k = maps.last().expect("depth 0 returns the base");
    out.line(format!(
        "amplified to a reflection-equation solution on {} points",
        final_k.set_size()
    ));
    let rep = check_reflection_equation(&r.as_pair_map(), &final_k.as_pair_map());
    out.report(&rep.to_report());
    let mut record = SolutionRecord::new("RE");
    record.push_report(&rep.to_report());
    record.provenance.insert("base".into(), json!(base_name));
    record.provenance.insert("brace".into(), json!(brace_path.display().to_string()));
    record.provenance.insert("construction".into(), json!("amplify"));
    record.provenance.insert("depth".into(), json!(depth));
    record.tables.insert(
        "k".into(),
        serde_json::to_value(io::pair_map_to_json(&final_k.as_pair_map())).unwrap(),
    );
    out.record(&record);
    write_output(
        output,
        &io::to_canonical_json(&io::pair_map_to_json(&final_k.as_pair_map())),
    )?;
    Ok(record.all_pass())
}

fn fixed_endos_cmd(brace_path: &Path, out: &Output) -> CmdResult {
    let brace = io::load_brace(brace_path)?;
    let fixed = skewbrace::action::fixed_endomorphisms(&brace);
    out.line(format!("{} fixed endomorphisms", fixed.len()));
    for e in &fixed {
        out.line(format!("  {:?}", e.table()));
    }
    let tables: Vec<&[usize]> = fixed.iter().map(Endomorphism::table).collect();
    out.value(&json!({"count": fixed.len(), "fixed": tables}));
    Ok(true)
}

fn validate_action_cmd(action_path: &Path, out: &Output) -> CmdResult {
    let (brace, act, pi) = io::load_action_parts(action_path)?;
    let report = validate_brace_action(&brace, &act, &pi);
    out.report(&report);
    let mut record = SolutionRecord::new("RE");
    record.push_report(&report);
    record
        .provenance
        .insert("action".into(), json!(action_path.display().to_string()));
    out.record(&record);
    Ok(report.all_pass())
}
