//! Isomorphism rejection: canonical forms and the deduplicated [`GraphSet`].

mod labeling;

use std::collections::HashSet;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::{read_graph6_file, Graph};

/// The canonically relabeled graph. Two graphs have equal forms exactly
/// when they are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Graph);

impl CanonicalForm {
    pub fn graph(&self) -> &Graph {
        &self.0
    }

    pub fn into_graph(self) -> Graph {
        self.0
    }

    pub fn graph6(&self) -> String {
        self.0.to_graph6()
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.graph6())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.graph6())
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(labeling::canonical_labeling(g).1)
}

/// `labeling[v]` is the canonical index of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    labeling::canonical_labeling(g).0
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b)
}

/// A set of graphs up to isomorphism. Members are stored as their canonical
/// representatives, so the contents never depend on insertion order.
#[derive(Clone, Default)]
pub struct GraphSet {
    forms: HashSet<CanonicalForm>,
    inserted: u64,
}

impl GraphSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns `true` if `g` starts a new isomorphism class.
    pub fn insert(&mut self, g: &Graph) -> bool {
        self.insert_form(canonical_form(g))
    }

    pub fn insert_form(&mut self, form: CanonicalForm) -> bool {
        self.inserted += 1;
        self.forms.insert(form)
    }

    pub fn contains(&self, g: &Graph) -> bool {
        self.forms.contains(&canonical_form(g))
    }

    pub fn contains_form(&self, form: &CanonicalForm) -> bool {
        self.forms.contains(form)
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    /// Number of insert calls, duplicates included.
    pub fn insertions(&self) -> u64 {
        self.inserted
    }

    /// Union of isomorphism classes.
    pub fn merge(mut self, other: GraphSet) -> GraphSet {
        self.inserted += other.inserted;
        if self.forms.len() < other.forms.len() {
            let mut big = other.forms;
            big.extend(self.forms);
            self.forms = big;
        } else {
            self.forms.extend(other.forms);
        }
        self
    }

    pub fn forms(&self) -> impl Iterator<Item = &CanonicalForm> {
        self.forms.iter()
    }

    /// Members ordered by their graph6 line.
    pub fn sorted_graphs(&self) -> Vec<Graph> {
        let mut lines: Vec<(String, &CanonicalForm)> =
            self.forms.iter().map(|f| (f.graph6(), f)).collect();
        lines.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        lines.into_iter().map(|(_, f)| f.graph().clone()).collect()
    }

    pub fn sorted_lines(&self) -> Vec<String> {
        let mut lines: Vec<String> = self.forms.iter().map(|f| f.graph6()).collect();
        lines.sort_unstable();
        lines
    }

    /// Sorted graph6 file contents, newline terminated.
    pub fn to_graph6_text(&self) -> String {
        let mut out = String::new();
        for l in self.sorted_lines() {
            out.push_str(&l);
            out.push('\n');
        }
        out
    }

    /// SHA-256 of [`Self::to_graph6_text`], hex encoded.
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.to_graph6_text().as_bytes()))
    }

    /// Writes the sorted canonical lines to `path` and the manifest next to
    /// it (`<path>.manifest`).
    pub fn save(&self, path: impl AsRef<Path>, manifest: &SetManifest) -> Result<()> {
        let path = path.as_ref();
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        }
        let text = self.to_graph6_text();
        fs::write(path, &text).map_err(|e| Error::io(path, e))?;
        let mut m = manifest.clone();
        m.count = self.len();
        m.digest = hex::encode(Sha256::digest(text.as_bytes()));
        m.save(manifest_path(path))
    }

    /// Loads any graph6 file, canonicalizing every line; non-canonical or
    /// duplicated input is accepted.
    pub fn load(path: impl AsRef<Path>) -> Result<GraphSet> {
        Ok(read_graph6_file(path)?.iter().collect())
    }

    /// Loads a file written by [`Self::save`] without recanonicalizing.
    /// Callers check the manifest digest first.
    pub(crate) fn load_saved(path: impl AsRef<Path>) -> Result<GraphSet> {
        Ok(read_graph6_file(path)?.into_iter().map(CanonicalForm).collect())
    }
}

impl<'a> FromIterator<&'a Graph> for GraphSet {
    fn from_iter<I: IntoIterator<Item = &'a Graph>>(iter: I) -> Self {
        let mut s = GraphSet::new();
        for g in iter {
            s.insert(g);
        }
        s
    }
}

impl FromIterator<CanonicalForm> for GraphSet {
    fn from_iter<I: IntoIterator<Item = CanonicalForm>>(iter: I) -> Self {
        let mut s = GraphSet::new();
        for f in iter {
            s.insert_form(f);
        }
        s
    }
}

impl PartialEq for GraphSet {
    fn eq(&self, other: &Self) -> bool {
        self.forms == other.forms
    }
}

impl Eq for GraphSet {}

impl fmt::Debug for GraphSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.sorted_lines()).finish()
    }
}

/// Sidecar for a persisted [`GraphSet`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetManifest {
    pub family: String,
    pub step: String,
    pub count: usize,
    pub digest: String,
}

impl SetManifest {
    pub fn new(family: impl Into<String>, step: impl Into<String>) -> Self {
        SetManifest { family: family.into(), step: step.into(), ..Default::default() }
    }

    pub fn load(path: impl AsRef<Path>) -> Result<SetManifest> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        toml::from_str(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let text = toml::to_string(self).map_err(|e| Error::Config(e.to_string()))?;
        fs::write(path, text).map_err(|e| Error::io(path, e))
    }
}

pub fn manifest_path(set_path: &Path) -> PathBuf {
    let mut s = set_path.as_os_str().to_owned();
    s.push(".manifest");
    PathBuf::from(s)
}
