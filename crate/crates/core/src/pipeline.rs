//! Declarative multi-step runs.
//!
//! A pipeline file (TOML) lists base families and extension steps in order.
//! Each entry gets an id; steps name their inputs by id. With an output
//! directory every family is written as `<id>.g6` (sorted canonical graph6)
//! with a `.manifest` sidecar, its `(+K_{q-1})` set as `<id>.plus.g6`, and a
//! `<id>.report.toml`. Rerunning over the same directory resumes: entries
//! whose files, digests and inputs still match are loaded instead of
//! recomputed.
//!
//! ```toml
//! workers = 4
//!
//! [[base]]
//! id = "k6"
//! kind = "complete"      # complete | exhaustive | file
//! a = [3]
//! q = 8
//! n = 6
//! t = 3
//!
//! [[step]]
//! id = "h4"
//! algorithm = 1
//! input = "k6"
//! a = [4]
//! q = 8
//! n = 8
//! r = 2
//! t = 3
//! ```

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::arrowing::ArrowVector;
use crate::canon::{manifest_path, GraphSet, SetManifest};
use crate::enumerate::{maximal_family_exhaustive, MAX_EXHAUSTIVE_ORDER};
use crate::error::{Error, Result};
use crate::search::{
    complete_base_family, cone_vertex_count, coned_outputs, extend_hosts, in_maximal_family,
    plus_clique_descent, FamilySpec,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseKind {
    /// `{K_n}`, valid for a single entry `a_1 ≤ n < q`.
    Complete,
    /// Filter all classes on `n ≤ 10` vertices.
    Exhaustive,
    /// Read a graph6 file; every graph is checked for membership.
    File,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseConfig {
    pub id: String,
    pub kind: BaseKind,
    pub a: ArrowVector,
    pub q: usize,
    pub n: usize,
    #[serde(default = "one")]
    pub r: usize,
    pub t: usize,
    #[serde(default)]
    pub path: Option<PathBuf>,
    /// Also count the `(+K_{q-1})` graphs.
    #[serde(default = "yes")]
    pub plus: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepConfig {
    pub id: String,
    pub algorithm: u8,
    pub input: String,
    /// `A_2` for algorithm 2.
    #[serde(default)]
    pub input2: Option<String>,
    pub a: ArrowVector,
    pub q: usize,
    pub n: usize,
    pub r: usize,
    pub t: usize,
    /// File name for the family inside the output directory.
    #[serde(default)]
    pub output: Option<String>,
    #[serde(default = "yes")]
    pub plus: bool,
}

fn one() -> usize {
    1
}

fn yes() -> bool {
    true
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PipelineConfig {
    /// Thread count; 0 or absent means rayon's default.
    #[serde(default)]
    pub workers: Option<usize>,
    #[serde(default)]
    pub output_dir: Option<PathBuf>,
    #[serde(default, rename = "base")]
    pub bases: Vec<BaseConfig>,
    #[serde(default, rename = "step")]
    pub steps: Vec<StepConfig>,
}

#[derive(Clone, Debug)]
enum Source {
    Base(BaseKind, Option<PathBuf>),
    Step { algorithm: u8, input: usize, input2: Option<usize> },
}

#[derive(Clone, Debug)]
struct Node {
    id: String,
    spec: FamilySpec,
    source: Source,
    file: String,
    plus: bool,
}

impl Node {
    /// Whether the node holds all of `H_max^t(a; q; n)` rather than an `α` slice.
    fn complete(&self) -> bool {
        match self.source {
            Source::Base(..) => self.spec.r <= 1,
            Source::Step { .. } => self.spec.r <= 1 || (self.spec.r == 2 && self.spec.n >= self.spec.q),
        }
    }
}

impl PipelineConfig {
    pub fn from_toml_str(text: &str) -> Result<PipelineConfig> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    /// Reads a pipeline file; relative paths inside it are taken relative to
    /// the file's directory.
    pub fn load(path: impl AsRef<Path>) -> Result<PipelineConfig> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut cfg = Self::from_toml_str(&text)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        let dir = path.parent().unwrap_or(Path::new(""));
        if let Some(out) = cfg.output_dir.as_mut() {
            if out.is_relative() {
                *out = dir.join(&*out);
            }
        }
        for b in &mut cfg.bases {
            if let Some(p) = b.path.as_mut() {
                if p.is_relative() {
                    *p = dir.join(&*p);
                }
            }
        }
        Ok(cfg)
    }

    /// Checks ids, references and chain consistency without running anything.
    pub fn validate(&self) -> Result<()> {
        self.nodes().map(|_| ())
    }

    fn nodes(&self) -> Result<Vec<Node>> {
        let mut nodes: Vec<Node> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut files: HashSet<String> = HashSet::new();
        let mut add = |node: Node, nodes: &mut Vec<Node>| -> Result<()> {
            if index.contains_key(&node.id) {
                return Err(Error::Config(format!("duplicate id {:?}", node.id)));
            }
            if !files.insert(node.file.clone()) {
                return Err(Error::Config(format!("output file {:?} used twice", node.file)));
            }
            index.insert(node.id.clone(), nodes.len());
            nodes.push(node);
            Ok(())
        };

        for b in &self.bases {
            let spec = FamilySpec::new(b.a.clone(), b.q, b.n, b.r, b.t)
                .map_err(|e| Error::Config(format!("base {:?}: {e}", b.id)))?;
            match b.kind {
                BaseKind::Complete => {
                    complete_base_family(&spec.a, spec.q, spec.n)?;
                }
                BaseKind::Exhaustive if b.n > MAX_EXHAUSTIVE_ORDER => {
                    return Err(Error::Config(format!(
                        "base {:?}: exhaustive generation is limited to {MAX_EXHAUSTIVE_ORDER} vertices",
                        b.id
                    )));
                }
                BaseKind::File if b.path.is_none() => {
                    return Err(Error::Config(format!("base {:?}: kind = \"file\" needs a path", b.id)));
                }
                _ => {}
            }
            let node = Node {
                id: b.id.clone(),
                spec,
                source: Source::Base(b.kind, b.path.clone()),
                file: format!("{}.g6", b.id),
                plus: b.plus,
            };
            add(node, &mut nodes)?;
        }

        for s in &self.steps {
            let ctx = |msg: String| Error::Config(format!("step {:?}: {msg}", s.id));
            let spec = FamilySpec::new(s.a.clone(), s.q, s.n, s.r, s.t).map_err(|e| ctx(e.to_string()))?;
            let lookup = |name: &str| -> Result<usize> {
                nodes
                    .iter()
                    .position(|n| n.id == name)
                    .ok_or_else(|| ctx(format!("input {name:?} is not defined earlier")))
            };
            let input = lookup(&s.input)?;
            let (a_prime, q, m) = spec.input_family().map_err(|e| ctx(e.to_string()))?;
            let inp = &nodes[input];
            if (inp.spec.a.clone(), inp.spec.q, inp.spec.n, inp.spec.t) != (a_prime.clone(), q, m, spec.t) {
                return Err(ctx(format!(
                    "input {:?} is {}, expected H_max^{}({}; {q}; {m})",
                    s.input, inp.spec, spec.t, a_prime.entries_text()
                )));
            }
            if !inp.complete() {
                return Err(ctx(format!("input {:?} ({}) is only an alpha slice", s.input, inp.spec)));
            }
            let input2 = match (s.algorithm, &s.input2) {
                (1, None) => None,
                (1, Some(_)) => return Err(ctx("algorithm 1 takes a single input".into())),
                (2, None) => return Err(ctx("algorithm 2 needs input2".into())),
                (2, Some(name)) => {
                    let j = lookup(name)?;
                    let i2 = &nodes[j];
                    let want = (a_prime.clone(), q - 1, spec.n - 1, spec.t);
                    if (i2.spec.a.clone(), i2.spec.q, i2.spec.n, i2.spec.t) != want {
                        return Err(ctx(format!(
                            "input2 {name:?} is {}, expected H_max^{}({}; {}; {})",
                            i2.spec,
                            spec.t,
                            a_prime.entries_text(),
                            q - 1,
                            spec.n - 1
                        )));
                    }
                    if !i2.complete() {
                        return Err(ctx(format!("input2 {name:?} is only an alpha slice")));
                    }
                    Some(j)
                }
                (k, _) => return Err(ctx(format!("unknown algorithm {k}"))),
            };
            let node = Node {
                id: s.id.clone(),
                spec,
                source: Source::Step { algorithm: s.algorithm, input, input2 },
                file: s.output.clone().unwrap_or_else(|| format!("{}.g6", s.id)),
                plus: s.plus,
            };
            add(node, &mut nodes)?;
        }
        Ok(nodes)
    }
}

/// Counts for one family, as printed in the result tables.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StepReport {
    pub id: String,
    pub spec: FamilySpec,
    /// "complete", "exhaustive", "file", "algorithm 1" or "algorithm 2".
    pub source: String,
    pub maximal: usize,
    pub maximal_cone_free: usize,
    pub plus: Option<usize>,
    pub plus_cone_free: Option<usize>,
    pub seconds: f64,
    pub digest: String,
    pub input_digests: Vec<String>,
    #[serde(default)]
    pub resumed: bool,
}

impl StepReport {
    /// `key = value` lines.
    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("report serializes")
    }

    pub fn alpha_label(&self) -> String {
        let (r, t) = (self.spec.r, self.spec.t);
        if r <= 1 || (r == 2 && self.spec.n >= self.spec.q) {
            format!("<= {t}")
        } else if r == t {
            format!("= {t}")
        } else {
            format!("{r}..={t}")
        }
    }
}

/// Fixed-width table, one row per report.
pub fn format_table(reports: &[StepReport]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<26} {:>7} {:>10} {:>10} {:>12} {:>10} {:>9}",
        "family", "alpha", "maximal", "cone-free", "(+K_{q-1})", "cone-free", "seconds"
    );
    let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
    for r in reports {
        let _ = writeln!(
            s,
            "{:<26} {:>7} {:>10} {:>10} {:>12} {:>10} {:>9.2}",
            r.spec.family_label(),
            r.alpha_label(),
            r.maximal,
            r.maximal_cone_free,
            opt(r.plus),
            opt(r.plus_cone_free),
            r.seconds
        );
    }
    s
}

/// Run settings that are not part of the pipeline file.
#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Overrides the file's `output_dir`.
    pub output_dir: Option<PathBuf>,
    /// Overrides the file's `workers`.
    pub workers: Option<usize>,
    /// Recompute even when checkpoints match.
    pub fresh: bool,
}

struct Family {
    set: GraphSet,
    plus: Option<GraphSet>,
}

/// Runs every base and step in order. `progress` sees each report as soon
/// as it is final.
pub fn run_pipeline(
    config: &PipelineConfig,
    options: &RunOptions,
    mut progress: impl FnMut(&StepReport),
) -> Result<Vec<StepReport>> {
    let nodes = config.nodes()?;
    let out_dir = options.output_dir.clone().or_else(|| config.output_dir.clone());
    if let Some(dir) = &out_dir {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    let workers = options.workers.or(config.workers).unwrap_or(0);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Config(format!("thread pool: {e}")))?;

    let mut families: Vec<Family> = Vec::with_capacity(nodes.len());
    let mut reports = Vec::with_capacity(nodes.len());
    // plus sets still needed by a later algorithm step
    let consumers: HashSet<usize> = nodes
        .iter()
        .filter_map(|n| match n.source {
            Source::Step { input, .. } => Some(input),
            _ => None,
        })
        .collect();

    for (k, node) in nodes.iter().enumerate() {
        let input_digests: Vec<String> = match node.source {
            Source::Step { input, input2, .. } => std::iter::once(input)
                .chain(input2)
                .map(|j| reports_digest(&reports, j))
                .collect(),
            Source::Base(..) => Vec::new(),
        };
        let want_plus = node.plus || consumers.contains(&k);
        let resumed = match (&out_dir, options.fresh) {
            (Some(dir), false) => try_resume(dir, node, &input_digests, want_plus),
            _ => None,
        };
        let (family, report) = match resumed {
            Some(x) => x,
            None => {
                let start = Instant::now();
                let (set, plus) = pool.install(|| -> Result<_> {
                    let set = build_family(node, &families)?;
                    let plus = want_plus.then(|| {
                        plus_clique_descent(&set, &node.spec.a, node.spec.q, node.spec.t, false)
                    });
                    Ok((set, plus))
                })?;
                let report = make_report(node, &set, plus.as_ref(), start, input_digests);
                if let Some(dir) = &out_dir {
                    persist(dir, node, &set, plus.as_ref(), &report)?;
                }
                (Family { set, plus }, report)
            }
        };
        progress(&report);
        reports.push(report);
        families.push(family);
    }
    Ok(reports)
}

fn reports_digest(reports: &[StepReport], j: usize) -> String {
    reports[j].digest.clone()
}

fn source_label(node: &Node) -> String {
    match &node.source {
        Source::Base(BaseKind::Complete, _) => "complete".into(),
        Source::Base(BaseKind::Exhaustive, _) => "exhaustive".into(),
        Source::Base(BaseKind::File, _) => "file".into(),
        Source::Step { algorithm, .. } => format!("algorithm {algorithm}"),
    }
}

fn build_family(node: &Node, families: &[Family]) -> Result<GraphSet> {
    let spec = &node.spec;
    match &node.source {
        Source::Base(BaseKind::Complete, _) => complete_base_family(&spec.a, spec.q, spec.n),
        Source::Base(BaseKind::Exhaustive, _) => {
            maximal_family_exhaustive(&spec.a, spec.q, spec.n, spec.r, spec.t)
        }
        Source::Base(BaseKind::File, path) => {
            let path = path.as_ref().expect("validated");
            let set = GraphSet::load(path)?;
            let bad: Vec<String> = set
                .forms()
                .collect::<Vec<_>>()
                .into_par_iter()
                .filter(|f| !in_maximal_family(f.graph(), spec))
                .map(|f| f.graph6())
                .collect();
            if let Some(g) = bad.first() {
                return Err(Error::Config(format!(
                    "{}: {g} is not a member of {spec}",
                    path.display()
                )));
            }
            Ok(set)
        }
        Source::Step { algorithm, input, input2 } => {
            let a1 = &families[*input];
            let hosts_all = match &a1.plus {
                Some(p) => p.clone(),
                None => plus_clique_descent(&a1.set, &spec.input_vector()?, spec.q, spec.t, false),
            };
            match (algorithm, input2) {
                (1, _) => extend_hosts(&hosts_all, spec),
                (_, Some(j)) => {
                    let hosts: GraphSet = hosts_all
                        .forms()
                        .filter(|f| cone_vertex_count(f.graph()) == 0)
                        .cloned()
                        .collect();
                    let extended = extend_hosts(&hosts, spec)?;
                    Ok(extended.merge(coned_outputs(spec, &a1.set, &families[*j].set)?))
                }
                _ => unreachable!("validated"),
            }
        }
    }
}

fn cone_free(set: &GraphSet) -> usize {
    set.forms().filter(|f| cone_vertex_count(f.graph()) == 0).count()
}

fn make_report(
    node: &Node,
    set: &GraphSet,
    plus: Option<&GraphSet>,
    start: Instant,
    input_digests: Vec<String>,
) -> StepReport {
    StepReport {
        id: node.id.clone(),
        spec: node.spec.clone(),
        source: source_label(node),
        maximal: set.len(),
        maximal_cone_free: cone_free(set),
        plus: plus.filter(|_| node.plus).map(GraphSet::len),
        plus_cone_free: plus.filter(|_| node.plus).map(cone_free),
        seconds: start.elapsed().as_secs_f64(),
        digest: set.digest(),
        input_digests,
        resumed: false,
    }
}

fn plus_file(node: &Node) -> String {
    format!("{}.plus.g6", node.id)
}

fn report_file(node: &Node) -> String {
    format!("{}.report.toml", node.id)
}

fn persist(dir: &Path, node: &Node, set: &GraphSet, plus: Option<&GraphSet>, report: &StepReport) -> Result<()> {
    let label = node.spec.to_string();
    set.save(dir.join(&node.file), &SetManifest::new(label.clone(), node.id.clone()))?;
    if let Some(p) = plus {
        p.save(dir.join(plus_file(node)), &SetManifest::new(format!("(+K) {label}"), node.id.clone()))?;
    }
    let path = dir.join(report_file(node));
    fs::write(&path, report.to_toml()).map_err(|e| Error::io(&path, e))
}

/// Loads a saved set if its manifest matches the file contents.
fn load_checked(path: &Path) -> Option<GraphSet> {
    let manifest = SetManifest::load(manifest_path(path)).ok()?;
    let text = fs::read(path).ok()?;
    if hex::encode(Sha256::digest(&text)) != manifest.digest {
        return None;
    }
    let set = GraphSet::load_saved(path).ok()?;
    (set.len() == manifest.count).then_some(set)
}

fn try_resume(
    dir: &Path,
    node: &Node,
    input_digests: &[String],
    want_plus: bool,
) -> Option<(Family, StepReport)> {
    let text = fs::read_to_string(dir.join(report_file(node))).ok()?;
    let mut report: StepReport = toml::from_str(&text).ok()?;
    if report.spec != node.spec || report.input_digests != input_digests || report.source != source_label(node) {
        return None;
    }
    let set = load_checked(&dir.join(&node.file))?;
    if set.digest() != report.digest {
        return None;
    }
    let plus = if want_plus {
        Some(load_checked(&dir.join(plus_file(node)))?)
    } else {
        None
    };
    if node.plus && report.plus.is_none() {
        return None;
    }
    report.resumed = true;
    Some((Family { set, plus }, report))
}
