use std::io::Write;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::psi::PsiValue;

/// One (group, subgroup) measurement against the cyclic-group bound
/// `ψ_{H_m}(C_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PsiRecord {
    pub group_id: String,
    pub group_order: usize,
    pub nilpotent: bool,
    pub subgroup_order: usize,
    pub subgroup_key: String,
    pub normal: bool,
    /// Present iff the subgroup is normal.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient_cyclic: Option<bool>,
    pub psi_h: PsiValue,
    pub bound: PsiValue,
    pub equality: bool,
    pub violated: bool,
}

impl PsiRecord {
    /// Equality with a normal subgroup whose quotient is cyclic is the known
    /// sufficient condition; anything else is reported separately.
    pub fn equality_unexplained(&self) -> bool {
        self.equality && !(self.normal && self.quotient_cyclic == Some(true))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    /// `ψ_H(G) = |H|·ψ(G/H)` for normal `H`.
    NormalIdentity,
    /// `ψ_H(G) ≤ [K:H]·ψ_K(G) − |K| + |H|` for `H ⊴ K`.
    RelativeIndexBound,
    /// `ψ(G) ≤ |K|²·ψ(G/K) − |K| + 1` for normal `K`.
    NormalQuotientBound,
    /// `|K|·ψ_K(G) − |K| + 1 = |K|²·ψ(G/K) − |K| + 1`.
    NormalQuotientForms,
    /// `ψ(G) ≤ |G|² − |G| + 1`, with equality exactly at prime order.
    GlobalBound,
    /// `ψ_{H1×H2}(G1×G2) = ψ_{H1}(G1)·ψ_{H2}(G2)` for coprime orders.
    CoprimeMultiplicativity,
}

impl CheckKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckKind::NormalIdentity => "normal-identity",
            CheckKind::RelativeIndexBound => "relative-index-bound",
            CheckKind::NormalQuotientBound => "normal-quotient-bound",
            CheckKind::NormalQuotientForms => "normal-quotient-forms",
            CheckKind::GlobalBound => "global-bound",
            CheckKind::CoprimeMultiplicativity => "coprime-multiplicativity",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Le,
    Eq,
}

/// One identity or inequality instance outside the main sweep. `lhs` is the
/// quantity being bounded, `rhs` the bound or the other side of the identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub group_id: String,
    pub group_order: usize,
    pub check: CheckKind,
    pub relation: Relation,
    pub h_order: usize,
    pub h_key: String,
    pub k_order: usize,
    pub k_key: String,
    pub lhs: PsiValue,
    pub rhs: PsiValue,
    pub equality: bool,
    pub violated: bool,
}

impl CheckRecord {
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn new(
        group_id: &str,
        group_order: usize,
        check: CheckKind,
        relation: Relation,
        h: (usize, String),
        k: (usize, String),
        lhs: PsiValue,
        rhs: PsiValue,
    ) -> Self {
        let violated = match relation {
            Relation::Le => lhs > rhs,
            Relation::Eq => lhs != rhs,
        };
        Self {
            group_id: group_id.to_string(),
            group_order,
            check,
            relation,
            h_order: h.0,
            h_key: h.1,
            k_order: k.0,
            k_key: k.1,
            lhs,
            rhs,
            equality: lhs == rhs,
            violated,
        }
    }
}

/// Aggregate of a sweep.
///
/// `violations` counts violated entries of both `records` and `checks`;
/// `counterexamples` and `failed_checks` list exactly those entries.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub groups_checked: usize,
    pub pairs_checked: usize,
    pub violations: usize,
    pub equalities: usize,
    pub records: Vec<PsiRecord>,
    pub checks: Vec<CheckRecord>,
    pub counterexamples: Vec<PsiRecord>,
    pub failed_checks: Vec<CheckRecord>,
}

const CONJECTURE_SCOPE: &str =
    "finite evidence only: the sweep covers the listed groups and settles nothing about all finite groups";

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            ..Self::default()
        }
    }

    pub(crate) fn push_record(&mut self, r: PsiRecord) {
        self.pairs_checked += 1;
        if r.equality {
            self.equalities += 1;
        }
        if r.violated {
            self.violations += 1;
            self.counterexamples.push(r.clone());
        }
        self.records.push(r);
    }

    pub(crate) fn push_check(&mut self, c: CheckRecord) {
        self.pairs_checked += 1;
        if c.equality && c.relation == Relation::Le {
            self.equalities += 1;
        }
        if c.violated {
            self.violations += 1;
            self.failed_checks.push(c.clone());
        }
        self.checks.push(c);
    }

    /// Records whose equality is not explained by a normal subgroup with
    /// cyclic quotient.
    pub fn unexplained_equalities(&self) -> impl Iterator<Item = &PsiRecord> {
        self.records.iter().filter(|r| r.equality_unexplained())
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    /// Concatenates per-group reports in `group_id` order (stable for equal
    /// ids), summing the counters.
    pub fn merge(suite: impl Into<String>, mut parts: Vec<(String, VerificationReport)>) -> Self {
        parts.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out = Self::new(suite);
        for (_, p) in parts {
            out.groups_checked += p.groups_checked;
            out.absorb(p);
        }
        out
    }

    /// Appends another report's entries and counters, except `groups_checked`.
    pub(crate) fn absorb(&mut self, other: VerificationReport) {
        self.pairs_checked += other.pairs_checked;
        self.violations += other.violations;
        self.equalities += other.equalities;
        self.records.extend(other.records);
        self.checks.extend(other.checks);
        self.counterexamples.extend(other.counterexamples);
        self.failed_checks.extend(other.failed_checks);
    }

    fn summary(&self) -> Summary<'_> {
        Summary {
            suite: &self.suite,
            groups_checked: self.groups_checked,
            pairs_checked: self.pairs_checked,
            violations: self.violations,
            equalities: self.equalities,
            unexplained_equalities: self.unexplained_equalities().count(),
            scope: self
                .suite
                .contains("conjecture")
                .then_some(CONJECTURE_SCOPE),
        }
    }

    /// JSON lines: a summary object, then one object per record, check,
    /// and unexplained equality, each tagged by `type`.
    pub fn write_jsonl<W: Write>(&self, mut w: W) -> Result<()> {
        let mut line = |l: Line<'_>| -> Result<()> {
            serde_json::to_writer(&mut w, &l).map_err(|e| Error::Inconsistent(e.to_string()))?;
            w.write_all(b"\n").map_err(io_err)
        };
        line(Line::Summary(self.summary()))?;
        for r in &self.records {
            line(Line::Record(r))?;
        }
        for c in &self.checks {
            line(Line::Check(c))?;
        }
        for r in self.unexplained_equalities() {
            line(Line::EqualityUnexplained(r))?;
        }
        Ok(())
    }

    /// CSV with the JSON-lines keys as columns: a `#` summary line, the
    /// record table, then (if any) a blank line and the check table.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        let s = self.summary();
        writeln!(
            w,
            "# suite={} groups_checked={} pairs_checked={} violations={} equalities={} unexplained_equalities={}",
            s.suite, s.groups_checked, s.pairs_checked, s.violations, s.equalities, s.unexplained_equalities
        )
        .map_err(io_err)?;
        if let Some(scope) = s.scope {
            writeln!(w, "# scope={scope}").map_err(io_err)?;
        }
        {
            let mut cw = csv::Writer::from_writer(&mut w);
            cw.write_record(RECORD_COLUMNS).map_err(csv_err)?;
            for r in &self.records {
                cw.write_record(record_row(r)).map_err(csv_err)?;
            }
            cw.flush().map_err(io_err)?;
        }
        if !self.checks.is_empty() {
            writeln!(w).map_err(io_err)?;
            let mut cw = csv::Writer::from_writer(&mut w);
            cw.write_record(CHECK_COLUMNS).map_err(csv_err)?;
            for c in &self.checks {
                cw.write_record(check_row(c)).map_err(csv_err)?;
            }
            cw.flush().map_err(io_err)?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct Summary<'a> {
    suite: &'a str,
    groups_checked: usize,
    pairs_checked: usize,
    violations: usize,
    equalities: usize,
    unexplained_equalities: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    scope: Option<&'static str>,
}

#[derive(Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
enum Line<'a> {
    Summary(Summary<'a>),
    Record(&'a PsiRecord),
    Check(&'a CheckRecord),
    EqualityUnexplained(&'a PsiRecord),
}

const RECORD_COLUMNS: [&str; 11] = [
    "group_id",
    "group_order",
    "nilpotent",
    "subgroup_order",
    "subgroup_key",
    "normal",
    "quotient_cyclic",
    "psi_h",
    "bound",
    "equality",
    "violated",
];

fn record_row(r: &PsiRecord) -> [String; 11] {
    [
        r.group_id.clone(),
        r.group_order.to_string(),
        r.nilpotent.to_string(),
        r.subgroup_order.to_string(),
        r.subgroup_key.clone(),
        r.normal.to_string(),
        r.quotient_cyclic.map(|b| b.to_string()).unwrap_or_default(),
        r.psi_h.to_string(),
        r.bound.to_string(),
        r.equality.to_string(),
        r.violated.to_string(),
    ]
}

const CHECK_COLUMNS: [&str; 12] = [
    "group_id",
    "group_order",
    "check",
    "relation",
    "h_order",
    "h_key",
    "k_order",
    "k_key",
    "lhs",
    "rhs",
    "equality",
    "violated",
];

fn check_row(c: &CheckRecord) -> [String; 12] {
    [
        c.group_id.clone(),
        c.group_order.to_string(),
        c.check.as_str().to_string(),
        match c.relation {
            Relation::Le => "le".into(),
            Relation::Eq => "eq".into(),
        },
        c.h_order.to_string(),
        c.h_key.clone(),
        c.k_order.to_string(),
        c.k_key.clone(),
        c.lhs.to_string(),
        c.rhs.to_string(),
        c.equality.to_string(),
        c.violated.to_string(),
    ]
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io {
        path: "<report>".into(),
        source: e,
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Inconsistent(format!("csv: {e}"))
}
