use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use braces::descriptor::{GroupSpec, LambdaSpec, MatchedSpec, DESCRIPTOR_VERSION};
use braces::families::{
    build_hegedus, build_simple_family, construct_explicit_family, construct_recursive,
    find_hegedus_params,
};
use braces::iso::DEFAULT_ISO_CAP;
use braces::matched::sylow_matched_pair;
use braces::{
    braces_isomorphic, build_extension, build_matched_product, derive_solution, enumerate_ideals,
    is_simple, is_two_sided, set_enumeration_cap, socle, trivial_brace, validate_brace,
    AbelianGroup, Automorphism, BraceDescriptor, BraceError, BraceReport, Element, ExtensionData,
    LeftBrace, MatchedPairData,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

const ENV_CAP: &str = "BRACECTL_ENUM_CAP";
/// Socle members are listed only up to this many.
const SOCLE_LISTING: usize = 4096;

#[derive(Parser)]
#[command(
    name = "bracectl",
    version,
    about = "Construct and analyze finite left braces"
)]
struct Cli {
    /// Largest group order that may be enumerated (overrides BRACECTL_ENUM_CAP).
    #[arg(long, global = true)]
    enum_cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a brace from a named family and write its descriptor.
    Construct(ConstructArgs),
    /// Validate a descriptor and report the requested properties.
    Analyze(AnalyzeArgs),
    /// Combine descriptors into a matched product, extension or direct product.
    Compose(ComposeArgs),
    /// Split a brace of order m1*m2 into a matched pair of its Hall left ideals.
    Decompose(DecomposeArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Trivial,
    /// The explicit simple brace on Z/p1 x F_p2^(n+1).
    #[value(name = "section7", alias = "explicit")]
    Explicit,
    /// k diagonal copies of the explicit (p1, p2) instance.
    Recursive,
    /// The first non-degenerate (Q, F) found by search on F_p^n.
    Hegedus,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Cyclic factor orders, comma separated (trivial family).
    #[arg(long, value_delimiter = ',')]
    moduli: Vec<u32>,
    #[arg(long, default_value_t = 3)]
    p1: u32,
    #[arg(long, default_value_t = 2)]
    p2: u32,
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    n: Option<usize>,
    /// Write the lambda table instead of the structured parameters.
    #[arg(long)]
    materialize: bool,
    /// Output path; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    input: PathBuf,
    #[arg(long)]
    socle: bool,
    #[arg(long)]
    ideals: bool,
    #[arg(long)]
    simple: bool,
    #[arg(long)]
    two_sided: bool,
    #[arg(long)]
    ybe: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Matched,
    Extend,
    Direct,
}

#[derive(Args)]
struct ComposeArgs {
    #[arg(long, value_enum)]
    mode: Mode,
    /// Two descriptors for matched and direct, one base descriptor for extend.
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
    /// JSON action data: {alpha, beta} for matched, {kernel, sigma, nu, tau, beta} for extend.
    #[arg(long)]
    actions: Option<PathBuf>,
    #[arg(long)]
    materialize: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DecomposeArgs {
    input: PathBuf,
    #[arg(long, num_args = 2, value_names = ["M1", "M2"], required = true)]
    coprime: Vec<usize>,
    /// Directory receiving left.json, right.json and actions.json.
    #[arg(long)]
    out_dir: PathBuf,
}

type Rows = Vec<Vec<i64>>;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatchedActions {
    alpha: Vec<Rows>,
    beta: Vec<Rows>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExtensionActions {
    kernel: Vec<u32>,
    sigma: Vec<Rows>,
    nu: Vec<Rows>,
    tau: Vec<Vec<u32>>,
    beta: Vec<Vec<u32>>,
}

#[derive(Serialize)]
struct DecomposeReport {
    left: PathBuf,
    right: PathBuf,
    actions: PathBuf,
    left_order: usize,
    right_order: usize,
    /// `None` when the order is beyond the isomorphism search cap.
    round_trip_isomorphic: Option<bool>,
}

enum Failure {
    /// A requested property or supplied structure failed verification.
    Verification(String),
    /// Malformed input, unusable parameters or I/O trouble.
    Input(String),
}

impl From<BraceError> for Failure {
    fn from(e: BraceError) -> Self {
        match e {
            BraceError::InvalidBrace(_)
            | BraceError::InvalidExtension(_)
            | BraceError::InvalidMatchedPair(_) => Failure::Verification(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Input(format!("json: {e}"))
    }
}

type Outcome = Result<(), Failure>;

fn input_err(msg: impl Into<String>) -> Failure {
    Failure::Input(msg.into())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_err(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<LeftBrace, Failure> {
    let text = read(path)?;
    let d =
        BraceDescriptor::parse(&text).map_err(|e| input_err(format!("{}: {e}", path.display())))?;
    Ok(d.to_brace()?)
}

/// Writes through a sibling temporary file so readers never see a partial file.
fn write_atomic(path: &Path, text: &str) -> Outcome {
    let tmp = path.with_extension("tmp~");
    fs::write(&tmp, text)
        .and_then(|_| fs::rename(&tmp, path))
        .map_err(|e| input_err(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Outcome {
    match out {
        Some(p) => write_atomic(p, text),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn emit_brace(b: &LeftBrace, materialize: bool, out: Option<&Path>) -> Outcome {
    let text = BraceDescriptor::from_brace(b, materialize).to_json()?;
    emit(out, &text)
}

fn construct(a: &ConstructArgs) -> Outcome {
    let b = match a.family {
        Family::Trivial => {
            if a.moduli.is_empty() {
                return Err(input_err("--moduli is required for the trivial family"));
            }
            trivial_brace(&AbelianGroup::new(a.moduli.clone())?)
        }
        Family::Explicit => build_simple_family(&construct_explicit_family(a.p1, a.p2)?.params)?,
        Family::Recursive => {
            let base = construct_explicit_family(a.p1, a.p2)?.params;
            build_simple_family(&construct_recursive(&base, a.k)?)?
        }
        Family::Hegedus => {
            let (p, n) = match (a.p, a.n) {
                (Some(p), Some(n)) => (p, n),
                _ => return Err(input_err("--p and --n are required for the hegedus family")),
            };
            match find_hegedus_params(p, n, true)? {
                Some(h) => build_hegedus(&h)?,
                None => {
                    return Err(Failure::Verification(format!(
                        "no non-degenerate quadratic form on F_{p}^{n} has an isometry of order {p}"
                    )))
                }
            }
        }
    };
    emit_brace(&b, a.materialize, a.out.as_deref())
}

fn analyze(a: &AnalyzeArgs) -> Outcome {
    let mut b = load(&a.input)?;
    let report_v = validate_brace(&mut b)?;
    let mut r = BraceReport {
        order: b.order(),
        moduli: b.group().moduli().to_vec(),
        kind: b.kind().name().to_string(),
        valid: report_v.passed(),
        lambda_classes: b.lambda_classes(),
        ..BraceReport::default()
    };
    let mut failed = Vec::new();
    if !r.valid {
        failed.push("brace axioms");
    }
    if a.socle {
        let s = socle(&b);
        r.socle_size = Some(s.len());
        if s.len() <= SOCLE_LISTING {
            r.socle = Some(s.to_coords());
        }
    }
    if a.ideals {
        let list = enumerate_ideals(&b, braces::ideals::DEFAULT_IDEAL_CAP)?;
        r.ideal_count = Some(list.ideals.len());
        r.ideals_complete = Some(list.complete);
    }
    if a.simple {
        let simple = is_simple(&b)?;
        r.simple = Some(simple);
        if simple && r.ideal_count.is_none() {
            r.ideal_count = Some(2);
            r.ideals_complete = Some(true);
        }
    }
    if a.two_sided {
        let v = is_two_sided(&b)?;
        r.two_sided = Some(v.two_sided);
        r.two_sided_exhaustive = Some(v.exhaustive);
    }
    if a.ybe {
        // derive_solution rejects a table failing any of the three checks
        let ok = match derive_solution(&b) {
            Ok(_) => true,
            Err(BraceError::Precondition(msg)) => {
                eprintln!("bracectl: {msg}");
                false
            }
            Err(e) => return Err(e.into()),
        };
        r.ybe = Some(ok);
        r.involutive = Some(ok);
        r.nondegenerate = Some(ok);
        if !ok {
            failed.push("yang-baxter");
        }
    }
    println!("{}", serde_json::to_string_pretty(&r)?);
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "failed: {}",
            failed.join(", ")
        )))
    }
}

fn compose(a: &ComposeArgs) -> Outcome {
    let wanted = if a.mode == Mode::Extend { 1 } else { 2 };
    if a.inputs.len() != wanted {
        return Err(input_err(format!("expected {wanted} input descriptor(s)")));
    }
    let descs = a
        .inputs
        .iter()
        .map(|p| {
            BraceDescriptor::parse(&read(p)?)
                .map_err(|e| input_err(format!("{}: {e}", p.display())))
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    let actions = || -> Result<String, Failure> {
        match &a.actions {
            Some(p) => read(p),
            None => Err(input_err("--actions is required for this mode")),
        }
    };
    let b = match a.mode {
        Mode::Direct => {
            let left = descs[0].to_brace()?;
            let right = descs[1].to_brace()?;
            build_matched_product(&MatchedPairData::direct(left, right)?)?
        }
        Mode::Matched => {
            let act: MatchedActions = serde_json::from_str(&actions()?)?;
            let left = descs[0].to_brace()?;
            let right = descs[1].to_brace()?;
            let moduli = left.group().direct_sum(right.group())?.moduli().to_vec();
            descriptor_of(
                moduli,
                LambdaSpec::MatchedProduct(Box::new(MatchedSpec {
                    left: descs[0].clone(),
                    right: descs[1].clone(),
                    alpha: act.alpha,
                    beta: act.beta,
                })),
            )?
        }
        Mode::Extend => {
            let act: ExtensionActions = serde_json::from_str(&actions()?)?;
            let kernel = AbelianGroup::new(act.kernel)?;
            let auts = |v: &[Rows]| {
                v.iter()
                    .map(|rows| Automorphism::from_matrix(&kernel, rows))
                    .collect::<braces::Result<Vec<_>>>()
            };
            let elems = |v: Vec<Vec<u32>>| v.into_iter().map(Element::new).collect();
            let d = ExtensionData::new(
                descs[0].to_brace()?,
                kernel.clone(),
                auts(&act.sigma)?,
                auts(&act.nu)?,
                elems(act.tau),
                elems(act.beta),
            )?;
            build_extension(&d)?
        }
    };
    emit_brace(&b, a.materialize, a.out.as_deref())
}

fn descriptor_of(moduli: Vec<u32>, lambda: LambdaSpec) -> Result<LeftBrace, Failure> {
    Ok(BraceDescriptor {
        version: DESCRIPTOR_VERSION,
        group: GroupSpec { moduli },
        lambda,
    }
    .to_brace()?)
}

fn decompose(a: &DecomposeArgs) -> Outcome {
    let b = load(&a.input)?;
    let (m1, m2) = (a.coprime[0], a.coprime[1]);
    if m1.checked_mul(m2) != Some(b.order()) {
        return Err(input_err(format!(
            "{m1} * {m2} is not the order {} of the input",
            b.order()
        )));
    }
    let d = sylow_matched_pair(&b, m1, m2)?;
    fs::create_dir_all(&a.out_dir)
        .map_err(|e| input_err(format!("{}: {e}", a.out_dir.display())))?;
    let left = a.out_dir.join("left.json");
    let right = a.out_dir.join("right.json");
    let actions = a.out_dir.join("actions.json");
    emit_brace(d.left(), false, Some(&left))?;
    emit_brace(d.right(), false, Some(&right))?;
    let act = MatchedActions {
        alpha: d.alpha_table().iter().map(rows_of).collect(),
        beta: d.beta_table().iter().map(rows_of).collect(),
    };
    write_atomic(&actions, &serde_json::to_string_pretty(&act)?)?;
    let round_trip_isomorphic = if b.order() <= DEFAULT_ISO_CAP {
        let rebuilt = build_matched_product(&d)?;
        Some(braces_isomorphic(&rebuilt, &b)?.is_some())
    } else {
        None
    };
    let report = DecomposeReport {
        left,
        right,
        actions,
        left_order: d.left().order(),
        right_order: d.right().order(),
        round_trip_isomorphic,
    };
    println!("{}", serde_json::to_string_pretty(&report)?);
    if round_trip_isomorphic == Some(false) {
        return Err(Failure::Verification(
            "recomposition is not isomorphic".into(),
        ));
    }
    Ok(())
}

fn rows_of(a: &Automorphism) -> Rows {
    a.to_matrix()
        .into_iter()
        .map(|r| r.into_iter().map(i64::from).collect())
        .collect()
}

fn configure_cap(flag: Option<usize>) -> Outcome {
    let cap = match (flag, std::env::var(ENV_CAP)) {
        (Some(c), _) => Some(c),
        (None, Ok(s)) => Some(
            s.trim()
                .parse()
                .map_err(|_| input_err(format!("{ENV_CAP}={s} is not a number")))?,
        ),
        (None, Err(_)) => None,
    };
    if let Some(c) = cap {
        set_enumeration_cap(c);
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_cap(cli.enum_cap).and_then(|_| match &cli.command {
        Command::Construct(a) => construct(a),
        Command::Analyze(a) => analyze(a),
        Command::Compose(a) => compose(a),
        Command::Decompose(a) => decompose(a),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("bracectl: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("bracectl: {msg}");
            ExitCode::from(2)
        }
    }
}
