//! The line-based model file format.
//!
//! ```text
//! group z3
//! elements e a b        # the first element is the identity
//! table                 # row i, column j holds element_i * element_j
//! e a b
//! a b e
//! b e a
//! end
//! set 3                 # optional set {0, .., m-1}
//! action                # optional: images of 0..m-1 under each element
//! e: 0 1 2
//! a: 1 2 0
//! b: 2 0 1
//! end
//! perturb antipode      # optional, repeatable
//! ```

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use ydlab_core::catalog::Model;
use ydlab_core::{FiniteGroup, GroupAction, Report};

/// A deliberate defect injected into the objects built from a model, used to
/// exercise the failure paths of the suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Perturbation {
    /// Doubles the antipode of `K(G)` on its last basis element.
    Antipode,
    /// Doubles the last row of the pairing matrix.
    PairingRow,
    /// Replaces the canonical multiplier `U` by `−U`.
    MultiplierSign,
    /// Grades `δ₀ − δ₁` by an element of order two in the dual coaction.
    DualCoaction,
}

impl Perturbation {
    /// Every perturbation, in the order they are listed in reports.
    pub const ALL: [Perturbation; 4] =
        [Perturbation::Antipode, Perturbation::PairingRow, Perturbation::MultiplierSign, Perturbation::DualCoaction];

    /// The keyword used in model files.
    pub fn keyword(self) -> &'static str {
        match self {
            Perturbation::Antipode => "antipode",
            Perturbation::PairingRow => "pairing-row",
            Perturbation::MultiplierSign => "multiplier-sign",
            Perturbation::DualCoaction => "dual-coaction",
        }
    }
}

impl FromStr for Perturbation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Perturbation::ALL.into_iter().find(|p| p.keyword() == s).ok_or_else(|| {
            let known: Vec<&str> = Perturbation::ALL.iter().map(|p| p.keyword()).collect();
            format!("unknown perturbation '{s}' (expected one of {})", known.join(", "))
        })
    }
}

/// A syntax error at a 1-based line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Line number, starting at 1.
    pub line: usize,
    /// What went wrong.
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

/// A syntactically valid model file, before the group and action laws are checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawModel {
    /// Group name.
    pub name: String,
    /// Element labels, identity first.
    pub labels: Vec<String>,
    /// Row-major table of element indices.
    pub table: Vec<usize>,
    /// Set size and one image list per element, in element order.
    pub action: Option<(usize, Vec<Vec<usize>>)>,
    /// Requested perturbations, sorted and without repeats.
    pub perturbations: Vec<Perturbation>,
}

/// A model file that parsed but whose table or action breaks a law. The
/// reports list the law checks up to the first failure.
#[derive(Clone, Debug)]
pub struct InvalidModel {
    /// Validation reports in evaluation order.
    pub reports: Vec<Report>,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

/// Parses the model format. Law checks are left to [`validate`].
pub fn parse_model(text: &str) -> Result<RawModel, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let last_line = text.lines().count().max(1);

    let (n_line, first) = lines.next().ok_or_else(|| err(last_line, "empty model file, expected 'group <name>'"))?;
    let name = match first.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["group", name] => name.to_string(),
        ["group"] => return Err(err(n_line, "missing group name")),
        _ => return Err(err(n_line, format!("expected 'group <name>', found '{first}'"))),
    };

    let (e_line, elements) = lines.next().ok_or_else(|| err(last_line, "expected 'elements' line"))?;
    let mut words = elements.split_whitespace();
    if words.next() != Some("elements") {
        return Err(err(e_line, format!("expected 'elements ...', found '{elements}'")));
    }
    let labels: Vec<String> = words.map(str::to_string).collect();
    if labels.is_empty() {
        return Err(err(e_line, "no elements listed"));
    }
    let mut seen = BTreeSet::new();
    for l in &labels {
        if l.ends_with(':') {
            return Err(err(e_line, format!("element label '{l}' may not end with ':'")));
        }
        if !seen.insert(l.as_str()) {
            return Err(err(e_line, format!("element '{l}' listed twice")));
        }
    }
    let index = |line: usize, word: &str| -> Result<usize, ParseError> {
        labels.iter().position(|l| l == word).ok_or_else(|| err(line, format!("unknown element '{word}'")))
    };

    let n = labels.len();
    let (t_line, t) = lines.next().ok_or_else(|| err(last_line, "expected 'table'"))?;
    if t != "table" {
        return Err(err(t_line, format!("expected 'table', found '{t}'")));
    }
    let mut table = Vec::with_capacity(n * n);
    for row in 0..n {
        let (line, text) = lines.next().ok_or_else(|| err(last_line, format!("table ends after {row} of {n} rows")))?;
        if text == "end" {
            return Err(err(line, format!("table has {row} rows, expected {n}")));
        }
        let words: Vec<&str> = text.split_whitespace().collect();
        if words.len() != n {
            return Err(err(line, format!("table row has {} entries, expected {n}", words.len())));
        }
        for w in words {
            table.push(index(line, w)?);
        }
    }
    match lines.next() {
        Some((_, "end")) => {}
        Some((line, text)) => return Err(err(line, format!("expected 'end' after {n} table rows, found '{text}'"))),
        None => return Err(err(last_line, "missing 'end' after table")),
    }

    let mut set: Option<(usize, usize)> = None;
    let mut action = None;
    let mut perturbations = BTreeSet::new();
    while let Some((line, text)) = lines.next() {
        let words: Vec<&str> = text.split_whitespace().collect();
        match words.as_slice() {
            ["set", m] => {
                if set.is_some() {
                    return Err(err(line, "set declared twice"));
                }
                let m: usize = m.parse().map_err(|_| err(line, format!("set size '{m}' is not a number")))?;
                if m == 0 {
                    return Err(err(line, "set size must be positive"));
                }
                set = Some((line, m));
            }
            ["action"] => {
                let Some((_, m)) = set else {
                    return Err(err(line, "'action' requires a preceding 'set <m>'"));
                };
                if action.is_some() {
                    return Err(err(line, "action declared twice"));
                }
                let mut perms: Vec<Option<Vec<usize>>> = vec![None; n];
                loop {
                    let (line, text) = lines.next().ok_or_else(|| err(last_line, "missing 'end' after action"))?;
                    if text == "end" {
                        break;
                    }
                    let (head, rest) = text.split_once(':').ok_or_else(|| err(line, format!("expected '<element>: images', found '{text}'")))?;
                    let g = index(line, head.trim())?;
                    if perms[g].is_some() {
                        return Err(err(line, format!("images for '{}' given twice", labels[g])));
                    }
                    let images = rest
                        .split_whitespace()
                        .map(|w| w.parse::<usize>().map_err(|_| err(line, format!("image '{w}' is not a number"))))
                        .collect::<Result<Vec<_>, _>>()?;
                    if images.len() != m {
                        return Err(err(line, format!("{} images given, expected {m}", images.len())));
                    }
                    if let Some(bad) = images.iter().find(|&&x| x >= m) {
                        return Err(err(line, format!("image {bad} is outside 0..{m}")));
                    }
                    perms[g] = Some(images);
                }
                if let Some(g) = perms.iter().position(Option::is_none) {
                    return Err(err(line, format!("action block gives no images for '{}'", labels[g])));
                }
                action = Some((m, perms.into_iter().map(Option::unwrap).collect()));
            }
            ["perturb", kind] => {
                perturbations.insert(kind.parse::<Perturbation>().map_err(|m| err(line, m))?);
            }
            _ => return Err(err(line, format!("unexpected line '{text}'"))),
        }
    }
    if let (Some((line, _)), None) = (set, &action) {
        return Err(err(line, "'set' declared without an 'action' block"));
    }
    Ok(RawModel { name, labels, table, action, perturbations: perturbations.into_iter().collect() })
}

/// Checks the group law and the action law, in that order.
pub fn validate(raw: &RawModel) -> Result<Model, InvalidModel> {
    let mut group_report = FiniteGroup::validate(&raw.name, raw.labels.len(), &raw.table);
    let group = match FiniteGroup::from_table(raw.name.clone(), raw.labels.clone(), raw.table.clone()) {
        Ok(g) => g,
        Err(e) => {
            // name the failing elements by label
            if let Some(c) = group_report.checks.iter_mut().find(|c| !c.passed) {
                c.detail = e.detail;
            }
            return Err(InvalidModel { reports: vec![group_report] });
        }
    };
    let Some((m, perms)) = &raw.action else {
        return Ok(Model { group, action: None });
    };
    let action_report = GroupAction::validate(&group, *m, perms);
    match GroupAction::new(group.clone(), *m, perms.clone()) {
        Ok(action) => Ok(Model { group, action: Some(action) }),
        Err(_) => Err(InvalidModel { reports: vec![group_report, action_report] }),
    }
}
