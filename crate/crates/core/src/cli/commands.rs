//! Command dispatch. Exit codes are the contract: 0 for success, 1 for
//! a mathematical failure (witness lines printed), 2 for usage or parse
//! errors. Reports carry machine-readable `PASS`/`FAIL kind=… witness=…`
//! lines; prose never decides the outcome.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use super::{
    emit_text, parse_workspace, DocFrame, DocMorphism, DocObject, DocSystem,
    Workspace, WorkspaceDoc,
};
use crate::degrees::Degree;
use crate::dialectica::{
    self, coproduct_obj, hom_obj, product_obj, tensor_obj, verify_morphism_named, DialError,
    DialMorphism, DialObject, DEFAULT_SIZE_BOUND,
};
use crate::fixtures;
use crate::frames::{FiniteFrame, FrameError, DEFAULT_TENSOR_BOUND};
use crate::oracle::{
    adjunction_suite, check_category_laws, closure_suite, fullness_search, iso_frames,
    iso_objects, sum_coproduct_suite, universal_suite, InstanceBudget, IsoResult, LawReport,
};
use crate::topsys::{
    demo_bitstream, embed_crisp, extents_form_topology, top_product, top_sum, FuzzySet,
    FuzzyTopSystem, GammaCombine, SystemError, SystemReport,
};

#[derive(Debug, Parser)]
#[command(name = "dialtop", version, about = "Finite checker for degree-valued satisfaction, frames and their product/sum constructions")]
pub struct Cli {
    /// Workspace document (text, or JSON if the path ends in .json)
    #[arg(short = 'w', long, global = true)]
    pub workspace: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct OutArgs {
    /// Write the constructed entity as a workspace document
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Name for the constructed entity
    #[arg(long)]
    pub name: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a named frame, system, object or morphism
    Validate { name: String },
    /// Run the fuzzy topological system axioms on a system, reporting
    /// every violation
    TopsysCheck { name: String },
    /// Compose two named morphisms (diagram order)
    Compose {
        first: String,
        second: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Tensor product of two objects
    Tensor {
        a: String,
        b: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Internal hom of two objects
    Hom {
        a: String,
        b: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Categorical product of two objects
    Product {
        a: String,
        b: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Categorical coproduct of two objects
    Coproduct {
        a: String,
        b: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Extent of one open of a system
    Extent { system: String, open: String },
    /// Check that the extents of a system form a fuzzy topology
    TopologyCheck { system: String },
    /// Topological product of two systems over the tensor frame
    TopProduct {
        a: String,
        b: String,
        /// Enumeration gate for the tensor frame carrier
        #[arg(long, default_value_t = DEFAULT_TENSOR_BOUND)]
        bound_tensor: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Topological sum of two systems over the product frame
    TopSum {
        a: String,
        b: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Embed a crisp system, checking the crisp axioms first
    Embed {
        system: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Run the randomized law suites and the fullness search
    Laws {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_points: usize,
        #[arg(long, default_value_t = 3)]
        max_opens: usize,
        #[arg(long, default_value_t = 6)]
        max_denominator: u64,
        /// Instances for the category-law and closure suites; the
        /// enumeration-heavy suites run one tenth of this
        #[arg(long, default_value_t = 100)]
        instances: usize,
        #[arg(long, default_value_t = DEFAULT_TENSOR_BOUND)]
        bound_tensor: usize,
        /// Also write the full report to a file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare two entities: names, constructor expressions like
    /// coproduct(A,B), or paths to single-entity documents
    Iso { a: String, b: String },
    /// Score degree streams against a 0/1 prefix assertion
    DemoBitstream { file: PathBuf, prefix: String },
}

#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub report: String,
}

fn ok(report: String) -> Outcome {
    Outcome { code: 0, report }
}

fn math(report: String) -> Outcome {
    Outcome { code: 1, report }
}

fn usage(msg: String) -> Outcome {
    Outcome {
        code: 2,
        report: format!("ERROR {msg}\n"),
    }
}

fn fail_line(kind: &str, witness: impl std::fmt::Display) -> String {
    format!("FAIL kind={kind} witness={witness}\n")
}

fn system_error_kind(e: &SystemError) -> &'static str {
    match e {
        SystemError::ConditionI { .. } => "condition_i",
        SystemError::ConditionII { .. } => "condition_ii",
        SystemError::ConditionIII { .. } => "condition_iii",
        SystemError::NotATopologicalSystem { .. } => "not_topological_system",
        SystemError::NotFrameHom(_) => "not_frame_hom",
        SystemError::ConditionViolated { .. } => "condition",
        SystemError::Frame(e) => frame_error_kind(e),
        SystemError::Structure(e) => dial_error_kind(e),
        SystemError::StreamTooShort { .. } => "stream_too_short",
        SystemError::InvalidPrefix(_) => "invalid_prefix",
    }
}

fn frame_error_kind(e: &FrameError) -> &'static str {
    match e {
        FrameError::Empty => "empty_frame",
        FrameError::DuplicateElement(_) => "duplicate_element",
        FrameError::UnknownElement(_) => "unknown_element",
        FrameError::NotAPoset { .. } => "not_a_poset",
        FrameError::NotALattice { .. } => "not_a_lattice",
        FrameError::NotDistributive { .. } => "not_distributive",
        FrameError::TooLargeToEnumerate { .. } => "too_large_to_enumerate",
    }
}

fn dial_error_kind(e: &DialError) -> &'static str {
    match e {
        DialError::ConditionViolated { .. } => "condition",
        DialError::SourceTargetMismatch => "source_target_mismatch",
        DialError::SizeBoundExceeded { .. } => "size_bound_exceeded",
        DialError::ShapeMismatch(_) => "shape_mismatch",
        DialError::NotTotal(_) => "not_total",
        _ => "structure",
    }
}

fn fuzzy_set_str(set: &FuzzySet) -> String {
    set.universe()
        .iter()
        .zip(set.membership())
        .map(|(p, d)| format!("{p}:{d}"))
        .collect::<Vec<_>>()
        .join(";")
}

fn system_report_lines(report: &SystemReport, out: &mut String) {
    for violation in &report.violations {
        out.push_str(&fail_line(system_error_kind(violation), violation));
    }
}

// ---------------------------------------------------------------------
// Output documents
// ---------------------------------------------------------------------

fn object_doc(name: &str, obj: &DialObject) -> WorkspaceDoc {
    WorkspaceDoc {
        objects: vec![DocObject {
            name: name.to_string(),
            points: obj.points().to_vec(),
            opens: obj.opens().to_vec(),
            alpha: table_entries(obj.points(), obj.opens(), |u, x| obj.alpha(u, x)),
        }],
        ..WorkspaceDoc::default()
    }
}

fn system_doc(name: &str, system: &FuzzyTopSystem) -> WorkspaceDoc {
    let frame_name = format!("{name}_frame");
    WorkspaceDoc {
        frames: vec![DocFrame {
            name: frame_name.clone(),
            elements: system.frame().elements().to_vec(),
            leq: system.frame().cover_pairs(),
        }],
        systems: vec![DocSystem {
            name: name.to_string(),
            frame: frame_name,
            points: system.points().to_vec(),
            alpha: table_entries(system.points(), system.frame().elements(), |u, x| {
                system.alpha(u, x)
            }),
        }],
        ..WorkspaceDoc::default()
    }
}

fn morphism_doc(name: &str, m: &DialMorphism) -> WorkspaceDoc {
    let src_name = format!("{name}_source");
    let tgt_name = format!("{name}_target");
    let mut doc = object_doc(&src_name, m.source());
    doc.objects.extend(object_doc(&tgt_name, m.target()).objects);
    doc.morphisms.push(DocMorphism {
        name: name.to_string(),
        source: src_name,
        target: tgt_name,
        f: m.point_map()
            .iter()
            .enumerate()
            .map(|(u, &v)| {
                (
                    m.source().points()[u].clone(),
                    m.target().points()[v].clone(),
                )
            })
            .collect(),
        g: m.open_map()
            .iter()
            .enumerate()
            .map(|(y, &x)| {
                (
                    m.target().opens()[y].clone(),
                    m.source().opens()[x].clone(),
                )
            })
            .collect(),
    });
    doc
}

fn table_entries(
    rows: &[String],
    cols: &[String],
    get: impl Fn(usize, usize) -> Degree,
) -> Vec<(String, String, Degree)> {
    let mut out = Vec::with_capacity(rows.len() * cols.len());
    for (u, row) in rows.iter().enumerate() {
        for (x, col) in cols.iter().enumerate() {
            out.push((row.clone(), col.clone(), get(u, x)));
        }
    }
    out
}

fn write_doc(path: &Path, doc: &WorkspaceDoc) -> Result<(), String> {
    let content = if path.extension().is_some_and(|e| e == "json") {
        serde_json::to_string_pretty(doc).map_err(|e| e.to_string())?
    } else {
        emit_text(doc)
    };
    std::fs::write(path, content).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn maybe_write(out: &OutArgs, default_name: &str, make: impl Fn(&str) -> WorkspaceDoc) -> Result<Option<String>, String> {
    match &out.out {
        None => Ok(None),
        Some(path) => {
            let name = out.name.clone().unwrap_or_else(|| default_name.to_string());
            write_doc(path, &make(&name))?;
            Ok(Some(format!("WROTE path={}\n", path.display())))
        }
    }
}

// ---------------------------------------------------------------------
// Entity expressions (for `iso`)
// ---------------------------------------------------------------------

#[derive(Debug, Clone)]
enum Entity {
    Frame(FiniteFrame),
    Object(DialObject),
    System(FuzzyTopSystem),
}

impl Entity {
    fn as_object(&self) -> Option<DialObject> {
        match self {
            Entity::Frame(_) => None,
            Entity::Object(o) => Some(o.clone()),
            Entity::System(s) => Some(s.underlying_object()),
        }
    }
}

fn resolve_entity(ws: Option<&Workspace>, text: &str) -> Result<Entity, String> {
    let text = text.trim();
    if let Some(open) = text.find('(') {
        if !text.ends_with(')') {
            return Err(format!("malformed expression {text:?}"));
        }
        let ctor = &text[..open];
        let inner = &text[open + 1..text.len() - 1];
        let mut depth = 0usize;
        let mut split = None;
        for (i, c) in inner.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth = depth.saturating_sub(1),
                ',' if depth == 0 => {
                    split = Some(i);
                    break;
                }
                _ => {}
            }
        }
        let split = split.ok_or_else(|| format!("expression {text:?} needs two arguments"))?;
        let lhs = resolve_entity(ws, &inner[..split])?;
        let rhs = resolve_entity(ws, &inner[split + 1..])?;
        return apply_ctor(ctor, lhs, rhs);
    }
    if let Some(ws) = ws {
        if let Some(frame) = ws.frame(text) {
            return Ok(Entity::Frame(frame.clone()));
        }
        if let Some(entry) = ws.system(text) {
            return Ok(Entity::System(entry.system.clone()));
        }
        if let Some(obj) = ws.object(text) {
            return Ok(Entity::Object(obj.clone()));
        }
    }
    let path = Path::new(text);
    if path.is_file() {
        return entity_from_file(path);
    }
    Err(format!("no entity named {text:?} and no such file"))
}

fn entity_from_file(path: &Path) -> Result<Entity, String> {
    let content =
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let json = path.extension().is_some_and(|e| e == "json");
    let ws = parse_workspace(&content, json).map_err(|e| e.to_string())?;
    if ws.systems.len() == 1 {
        return Ok(Entity::System(ws.systems[0].system.clone()));
    }
    if ws.objects.len() == 1 {
        return Ok(Entity::Object(ws.objects[0].1.clone()));
    }
    if ws.frames.len() == 1 {
        return Ok(Entity::Frame(ws.frames[0].1.clone()));
    }
    Err(format!(
        "{} does not contain exactly one entity",
        path.display()
    ))
}

fn apply_ctor(ctor: &str, lhs: Entity, rhs: Entity) -> Result<Entity, String> {
    match ctor {
        "product" | "coproduct" | "tensor" | "hom" => {
            let a = lhs.as_object().ok_or("constructor needs objects or systems")?;
            let b = rhs.as_object().ok_or("constructor needs objects or systems")?;
            let obj = match ctor {
                "product" => product_obj(&a, &b),
                "coproduct" => coproduct_obj(&a, &b),
                "tensor" => tensor_obj(&a, &b, DEFAULT_SIZE_BOUND).map_err(|e| e.to_string())?,
                _ => hom_obj(&a, &b, DEFAULT_SIZE_BOUND).map_err(|e| e.to_string())?,
            };
            Ok(Entity::Object(obj))
        }
        "top-sum" | "top-product" => {
            let (Entity::System(a), Entity::System(b)) = (lhs, rhs) else {
                return Err("top-sum/top-product need systems".to_string());
            };
            match ctor {
                "top-sum" => {
                    let (sum, _) = top_sum(&a, &b).map_err(|e| e.to_string())?;
                    Ok(Entity::System(sum))
                }
                _ => {
                    let (product, _, _) =
                        top_product(&a, &b, DEFAULT_TENSOR_BOUND, GammaCombine::Max)
                            .map_err(|e| e.to_string())?;
                    Ok(Entity::System(product))
                }
            }
        }
        other => Err(format!("unknown constructor {other:?}")),
    }
}

// ---------------------------------------------------------------------
// Command execution
// ---------------------------------------------------------------------

fn need_system<'a>(ws: &'a Workspace, name: &str) -> Result<&'a FuzzyTopSystem, Outcome> {
    ws.system(name)
        .map(|entry| &entry.system)
        .ok_or_else(|| usage(format!("no system named {name:?}")))
}

fn need_endpoint(ws: &Workspace, name: &str) -> Result<DialObject, Outcome> {
    ws.endpoint_object(name)
        .ok_or_else(|| usage(format!("no object or system named {name:?}")))
}

fn resolve_morphism(ws: &Workspace, name: &str) -> Result<DialMorphism, Outcome> {
    let entry = ws
        .morphism(name)
        .ok_or_else(|| usage(format!("no morphism named {name:?}")))?;
    let source = need_endpoint(ws, &entry.source)?;
    let target = need_endpoint(ws, &entry.target)?;
    verify_morphism_named(&source, &target, &entry.f, &entry.g)
        .map_err(|e| math(fail_line(dial_error_kind(&e), &e)))
}

pub fn run_command(cli: &Cli) -> Outcome {
    let needs_workspace = !matches!(cli.command, Command::Laws { .. } | Command::DemoBitstream { .. });
    let ws = if let Some(path) = &cli.workspace {
        let content = match std::fs::read_to_string(path) {
            Ok(c) => c,
            Err(e) => return usage(format!("cannot read {}: {e}", path.display())),
        };
        let json = path.extension().is_some_and(|e| e == "json");
        match parse_workspace(&content, json) {
            Ok(ws) => Some(ws),
            Err(e) if e.is_mathematical() => {
                return math(fail_line("invalid_frame", &e));
            }
            Err(e) => return usage(e.to_string()),
        }
    } else {
        None
    };
    if needs_workspace && ws.is_none() {
        return usage("this command needs --workspace <file>".to_string());
    }

    match &cli.command {
        Command::Validate { name } => validate_cmd(ws.as_ref().expect("checked"), name),
        Command::TopsysCheck { name } => topsys_check_cmd(ws.as_ref().expect("checked"), name),
        Command::Compose { first, second, out } => {
            compose_cmd(ws.as_ref().expect("checked"), first, second, out)
        }
        Command::Tensor { a, b, out } => {
            binary_object_cmd(ws.as_ref().expect("checked"), "tensor", a, b, out)
        }
        Command::Hom { a, b, out } => {
            binary_object_cmd(ws.as_ref().expect("checked"), "hom", a, b, out)
        }
        Command::Product { a, b, out } => {
            binary_object_cmd(ws.as_ref().expect("checked"), "product", a, b, out)
        }
        Command::Coproduct { a, b, out } => {
            binary_object_cmd(ws.as_ref().expect("checked"), "coproduct", a, b, out)
        }
        Command::Extent { system, open } => extent_cmd(ws.as_ref().expect("checked"), system, open),
        Command::TopologyCheck { system } => {
            topology_check_cmd(ws.as_ref().expect("checked"), system)
        }
        Command::TopProduct { a, b, bound_tensor, out } => {
            top_product_cmd(ws.as_ref().expect("checked"), a, b, *bound_tensor, out)
        }
        Command::TopSum { a, b, out } => top_sum_cmd(ws.as_ref().expect("checked"), a, b, out),
        Command::Embed { system, out } => embed_cmd(ws.as_ref().expect("checked"), system, out),
        Command::Laws {
            seed,
            max_points,
            max_opens,
            max_denominator,
            instances,
            bound_tensor,
            out,
        } => laws_cmd(
            InstanceBudget {
                max_points: *max_points,
                max_opens: *max_opens,
                max_denominator: *max_denominator,
                seed: *seed,
            },
            *instances,
            *bound_tensor,
            out.as_deref(),
        ),
        Command::Iso { a, b } => iso_cmd(ws.as_ref(), a, b),
        Command::DemoBitstream { file, prefix } => bitstream_cmd(file, prefix),
    }
}

fn validate_cmd(ws: &Workspace, name: &str) -> Outcome {
    if let Some(frame) = ws.frame(name) {
        return ok(format!(
            "PASS frame name={name} elements={} top={} bottom={}\n",
            frame.len(),
            frame.element_name(frame.top()),
            frame.element_name(frame.bottom()),
        ));
    }
    if let Some(entry) = ws.system(name) {
        return match entry.system.validate() {
            Ok(()) => ok(format!("PASS system name={name}\n")),
            Err(e) => math(fail_line(system_error_kind(&e), &e)),
        };
    }
    if ws.object(name).is_some() {
        return ok(format!("PASS object name={name}\n"));
    }
    if ws.morphism(name).is_some() {
        return match resolve_morphism(ws, name) {
            Ok(_) => ok(format!("PASS morphism name={name}\n")),
            Err(outcome) => outcome,
        };
    }
    usage(format!("nothing named {name:?} in the workspace"))
}

fn topsys_check_cmd(ws: &Workspace, name: &str) -> Outcome {
    let system = match need_system(ws, name) {
        Ok(s) => s,
        Err(outcome) => return outcome,
    };
    let report = system.report();
    if report.passes() {
        ok(format!("PASS system name={name}\n"))
    } else {
        let mut out = String::new();
        system_report_lines(&report, &mut out);
        math(out)
    }
}

fn compose_cmd(ws: &Workspace, first: &str, second: &str, out: &OutArgs) -> Outcome {
    let m1 = match resolve_morphism(ws, first) {
        Ok(m) => m,
        Err(outcome) => return outcome,
    };
    let m2 = match resolve_morphism(ws, second) {
        Ok(m) => m,
        Err(outcome) => return outcome,
    };
    match dialectica::compose(&m1, &m2) {
        Ok(composite) => {
            let mut report = format!(
                "PASS compose first={first} second={second} f={:?} g={:?}\n",
                composite.point_map(),
                composite.open_map()
            );
            match maybe_write(out, "composite", |n| morphism_doc(n, &composite)) {
                Ok(Some(line)) => report.push_str(&line),
                Ok(None) => {}
                Err(e) => return usage(e),
            }
            ok(report)
        }
        Err(e) => math(fail_line(dial_error_kind(&e), &e)),
    }
}

fn binary_object_cmd(ws: &Workspace, op: &str, a: &str, b: &str, out: &OutArgs) -> Outcome {
    let obj_a = match need_endpoint(ws, a) {
        Ok(o) => o,
        Err(outcome) => return outcome,
    };
    let obj_b = match need_endpoint(ws, b) {
        Ok(o) => o,
        Err(outcome) => return outcome,
    };
    let result = match op {
        "tensor" => tensor_obj(&obj_a, &obj_b, DEFAULT_SIZE_BOUND),
        "hom" => hom_obj(&obj_a, &obj_b, DEFAULT_SIZE_BOUND),
        "product" => Ok(product_obj(&obj_a, &obj_b)),
        _ => Ok(coproduct_obj(&obj_a, &obj_b)),
    };
    match result {
        Ok(obj) => {
            let mut report = format!(
                "PASS {op} a={a} b={b} points={} opens={}\n",
                obj.points().len(),
                obj.opens().len()
            );
            match maybe_write(out, op, |n| object_doc(n, &obj)) {
                Ok(Some(line)) => report.push_str(&line),
                Ok(None) => {}
                Err(e) => return usage(e),
            }
            ok(report)
        }
        Err(e) => math(fail_line(dial_error_kind(&e), &e)),
    }
}

fn extent_cmd(ws: &Workspace, system: &str, open: &str) -> Outcome {
    let sys = match need_system(ws, system) {
        Ok(s) => s,
        Err(outcome) => return outcome,
    };
    match crate::topsys::extent_by_name(sys, open) {
        Ok(set) => {
            let mut report = String::new();
            for (p, d) in set.universe().iter().zip(set.membership()) {
                writeln!(report, "RESULT point={p} degree={d}").unwrap();
            }
            ok(report)
        }
        Err(_) => usage(format!("no open named {open:?} in system {system:?}")),
    }
}

fn topology_check_cmd(ws: &Workspace, system: &str) -> Outcome {
    let sys = match need_system(ws, system) {
        Ok(s) => s,
        Err(outcome) => return outcome,
    };
    let report = extents_form_topology(sys);
    let mut out = format!(
        "RESULT extents={} constant_zero={} constant_one={} pairs_checked={}\n",
        report.extent_count, report.has_constant_zero, report.has_constant_one, report.pairs_checked
    );
    if !report.has_constant_zero {
        out.push_str(&fail_line("missing_constant", "the constant-0 fuzzy set is not an extent"));
    }
    if !report.has_constant_one {
        out.push_str(&fail_line("missing_constant", "the constant-1 fuzzy set is not an extent"));
    }
    for f in &report.min_failures {
        out.push_str(&fail_line(
            "min_closure",
            format!("x={} y={} missing={}", f.x, f.y, fuzzy_set_str(&f.missing)),
        ));
    }
    for f in &report.max_failures {
        out.push_str(&fail_line(
            "max_closure",
            format!("x={} y={} missing={}", f.x, f.y, fuzzy_set_str(&f.missing)),
        ));
    }
    if report.passes() {
        out.push_str(&format!("PASS topology system={system}\n"));
        ok(out)
    } else {
        math(out)
    }
}

fn top_product_cmd(
    ws: &Workspace,
    a: &str,
    b: &str,
    bound_tensor: usize,
    out: &OutArgs,
) -> Outcome {
    let (sys_a, sys_b) = match (need_system(ws, a), need_system(ws, b)) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(o), _) | (_, Err(o)) => return o,
    };
    match top_product(sys_a, sys_b, bound_tensor, GammaCombine::Max) {
        Ok((system, report, _tensor)) => {
            let mut text = format!(
                "RESULT top-product a={a} b={b} points={} opens={}\n",
                system.points().len(),
                system.frame().len()
            );
            system_report_lines(&report, &mut text);
            match maybe_write(out, "prod", |n| system_doc(n, &system)) {
                Ok(Some(line)) => text.push_str(&line),
                Ok(None) => {}
                Err(e) => return usage(e),
            }
            if report.passes() {
                text.push_str("PASS validation\n");
                ok(text)
            } else {
                math(text)
            }
        }
        Err(e) => math(fail_line(system_error_kind(&e), &e)),
    }
}

fn top_sum_cmd(ws: &Workspace, a: &str, b: &str, out: &OutArgs) -> Outcome {
    let (sys_a, sys_b) = match (need_system(ws, a), need_system(ws, b)) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(o), _) | (_, Err(o)) => return o,
    };
    match top_sum(sys_a, sys_b) {
        Ok((system, report)) => {
            let mut text = format!(
                "RESULT top-sum a={a} b={b} points={} opens={}\n",
                system.points().len(),
                system.frame().len()
            );
            system_report_lines(&report, &mut text);
            match maybe_write(out, "sum", |n| system_doc(n, &system)) {
                Ok(Some(line)) => text.push_str(&line),
                Ok(None) => {}
                Err(e) => return usage(e),
            }
            if report.passes() {
                text.push_str("PASS validation\n");
                ok(text)
            } else {
                math(text)
            }
        }
        Err(e) => math(fail_line(system_error_kind(&e), &e)),
    }
}

fn embed_cmd(ws: &Workspace, system: &str, out: &OutArgs) -> Outcome {
    let sys = match need_system(ws, system) {
        Ok(s) => s,
        Err(outcome) => return outcome,
    };
    if !sys.is_crisp() {
        return math(fail_line(
            "not_crisp",
            format!("system {system:?} has degrees outside {{0, 1}}"),
        ));
    }
    let mut sat = Vec::new();
    for (u, point) in sys.points().iter().enumerate() {
        for (x, open) in sys.frame().elements().iter().enumerate() {
            if sys.alpha(u, x).is_one() {
                sat.push((point.clone(), open.clone()));
            }
        }
    }
    match embed_crisp(sys.points(), sys.frame(), &sat) {
        Ok(embedded) => {
            let mut text = format!(
                "PASS embed system={system} points={} opens={}\n",
                embedded.points().len(),
                embedded.frame().len()
            );
            match maybe_write(out, "embedded", |n| system_doc(n, &embedded)) {
                Ok(Some(line)) => text.push_str(&line),
                Ok(None) => {}
                Err(e) => return usage(e),
            }
            ok(text)
        }
        Err(e) => math(fail_line(system_error_kind(&e), &e)),
    }
}

fn law_report_lines(report: &LawReport, out: &mut String, max_findings: Option<usize>) {
    if report.passed() {
        writeln!(
            out,
            "PASS law={} instances={} failures=0 elapsed_ms={}",
            report.law,
            report.instances,
            report.elapsed.as_millis()
        )
        .unwrap();
    } else {
        writeln!(
            out,
            "FAIL kind=law witness=law={} failures={}",
            report.law,
            report.failures.len()
        )
        .unwrap();
        for f in &report.failures {
            writeln!(out, "FAIL kind=law_instance witness=law={} instance={} {}", report.law, f.instance, f.witness)
                .unwrap();
        }
    }
    let shown = max_findings.unwrap_or(report.findings.len());
    for finding in report.findings.iter().take(shown) {
        writeln!(out, "FINDING {finding}").unwrap();
    }
    if report.findings.len() > shown {
        writeln!(
            out,
            "FINDING ({} more suppressed; pass --out to keep the full list)",
            report.findings.len() - shown
        )
        .unwrap();
    }
}

fn laws_cmd(budget: InstanceBudget, instances: usize, bound_tensor: usize, out: Option<&Path>) -> Outcome {
    let header = format!(
        "RESULT laws seed={} max_points={} max_opens={} max_denominator={} instances={}\n",
        budget.seed, budget.max_points, budget.max_opens, budget.max_denominator, instances
    );
    let mut text = header.clone();
    let mut full = header;
    let small = instances.div_ceil(10);
    let mut all_passed = true;
    let add = |report: &LawReport, text: &mut String, full: &mut String| {
        law_report_lines(report, text, Some(12));
        law_report_lines(report, full, None);
    };

    let report = check_category_laws(&budget, instances);
    all_passed &= report.passed();
    add(&report, &mut text, &mut full);

    let enumeration_budget = InstanceBudget {
        max_points: budget.max_points.min(2),
        max_opens: budget.max_opens.min(2),
        ..budget
    };
    match adjunction_suite(&enumeration_budget, small, DEFAULT_SIZE_BOUND) {
        Ok(report) => {
            all_passed &= report.passed();
            add(&report, &mut text, &mut full);
        }
        Err(e) => return math(fail_line(dial_error_kind(&e), &e)),
    }
    match universal_suite(&enumeration_budget, small, DEFAULT_SIZE_BOUND) {
        Ok(report) => {
            all_passed &= report.passed();
            add(&report, &mut text, &mut full);
        }
        Err(e) => return math(fail_line(dial_error_kind(&e), &e)),
    }
    let report = closure_suite(&budget, instances, bound_tensor.max(4));
    all_passed &= report.passed();
    add(&report, &mut text, &mut full);

    let report = sum_coproduct_suite(&budget, small);
    all_passed &= report.passed();
    add(&report, &mut text, &mut full);

    let systems: Vec<(String, FuzzyTopSystem)> = fixtures::crisp_fixtures()
        .into_iter()
        .map(|(n, s)| (n.to_string(), s))
        .collect();
    match fullness_search(&systems, DEFAULT_SIZE_BOUND) {
        Ok(report) => {
            all_passed &= report.passed();
            let summary = format!(
                "RESULT fullness morphisms={} non_topological={}\n",
                report.instances,
                report.findings.len()
            );
            text.push_str(&summary);
            full.push_str(&summary);
            add(&report, &mut text, &mut full);
        }
        Err(e) => return math(fail_line(dial_error_kind(&e), &e)),
    }

    if let Some(path) = out {
        if let Err(e) = std::fs::write(path, &full) {
            return usage(format!("cannot write {}: {e}", path.display()));
        }
        writeln!(text, "WROTE path={}", path.display()).unwrap();
    }
    if all_passed {
        ok(text)
    } else {
        math(text)
    }
}

fn iso_cmd(ws: Option<&Workspace>, a: &str, b: &str) -> Outcome {
    let lhs = match resolve_entity(ws, a) {
        Ok(e) => e,
        Err(e) => return usage(e),
    };
    let rhs = match resolve_entity(ws, b) {
        Ok(e) => e,
        Err(e) => return usage(e),
    };
    match (&lhs, &rhs) {
        (Entity::Frame(fa), Entity::Frame(fb)) => match iso_frames(fa, fb) {
            IsoResult::Identical => ok("PASS iso result=identical\n".to_string()),
            IsoResult::Isomorphic { open_map, .. } => ok(format!(
                "PASS iso result=isomorphic witness=element_map={open_map:?}\n"
            )),
            IsoResult::NotIsomorphic { reason } => math(fail_line("not_isomorphic", reason)),
        },
        _ => {
            let (Some(oa), Some(ob)) = (lhs.as_object(), rhs.as_object()) else {
                return usage("cannot compare a frame with an object or system".to_string());
            };
            match iso_objects(&oa, &ob, DEFAULT_SIZE_BOUND) {
                Ok(IsoResult::Identical) => ok("PASS iso result=identical\n".to_string()),
                Ok(IsoResult::Isomorphic { point_map, open_map }) => ok(format!(
                    "PASS iso result=isomorphic witness=points={point_map:?} opens={open_map:?}\n"
                )),
                Ok(IsoResult::NotIsomorphic { reason }) => {
                    math(fail_line("not_isomorphic", reason))
                }
                Err(e) => math(fail_line(dial_error_kind(&e), &e)),
            }
        }
    }
}

fn bitstream_cmd(file: &Path, prefix: &str) -> Outcome {
    let content = match std::fs::read_to_string(file) {
        Ok(c) => c,
        Err(e) => return usage(format!("cannot read {}: {e}", file.display())),
    };
    let mut streams: Vec<Vec<Degree>> = Vec::new();
    for (idx, line) in content.lines().enumerate() {
        let line = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        if line.trim().is_empty() {
            continue;
        }
        let mut stream = Vec::new();
        for token in line.split_whitespace() {
            match token.parse::<Degree>() {
                Ok(d) => stream.push(d),
                Err(_) => {
                    return usage(format!(
                        "invalid degree {token:?} on line {} of {}",
                        idx + 1,
                        file.display()
                    ))
                }
            }
        }
        streams.push(stream);
    }
    match demo_bitstream(&streams, prefix) {
        Ok(degrees) => {
            let mut text = String::new();
            for (i, d) in degrees.iter().enumerate() {
                writeln!(text, "RESULT stream={i} degree={d}").unwrap();
            }
            ok(text)
        }
        Err(e @ SystemError::InvalidPrefix(_)) => usage(e.to_string()),
        Err(e) => math(fail_line(system_error_kind(&e), &e)),
    }
}

/// Entry point shared by the binary and the tests: parses arguments,
/// runs the command, prints the report, returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = run_command(&cli);
    print!("{}", outcome.report);
    outcome.code
}
