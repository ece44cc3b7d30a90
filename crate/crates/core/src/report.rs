//! Serialisable run reports and the catalog-wide cross-validation.

use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::audit::{self, AuditConfig, AuditError, AuditReport};
use crate::catalog;
use crate::classify::{self, ConditionReport, Theorem2Verdict};
use crate::group::Group;
use crate::lie::{self, BruteReport, LieError};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub group: String,
    pub order: usize,
    pub exponent: usize,
    pub theorem1: ConditionReport,
    pub theorem2: Theorem2Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brute: Option<BruteReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check_commutative: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub plus_commutative: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub audits: Option<Vec<AuditReport>>,
    /// Structural and brute-force verdicts on `ZG⁺` agree.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
    /// Structural and brute-force verdicts on `Ǧ` agree.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement_theorem2: Option<bool>,
}

impl RunReport {
    /// Structural verdicts only.
    pub fn classify(name: &str, group: &Group) -> RunReport {
        RunReport {
            schema: SCHEMA_VERSION,
            group: name.to_string(),
            order: group.order(),
            exponent: group.exponent(),
            theorem1: classify::theorem1_verdict(group),
            theorem2: classify::theorem2_verdict(group),
            brute: None,
            check_commutative: None,
            plus_commutative: None,
            audits: None,
            agreement: None,
            agreement_theorem2: None,
        }
    }

    /// Adds the brute-force verdicts and the agreement flags.
    pub fn with_brute(mut self, group: &Group, budget: usize) -> Result<RunReport, LieError> {
        let brute = lie::is_plus_lie_metabelian(group, budget)?;
        let check = lie::is_check_commutative(group);
        self.agreement = Some(brute.lie_metabelian == self.theorem1.lie_metabelian);
        self.agreement_theorem2 = Some(check == self.theorem2.holds);
        self.plus_commutative = Some(lie::is_plus_commutative(group));
        self.check_commutative = Some(check);
        self.brute = Some(brute);
        Ok(self)
    }

    pub fn with_audits(
        mut self,
        group: &Group,
        selection: IdentitySelection,
        config: &AuditConfig,
    ) -> Result<RunReport, LieError> {
        self.audits = Some(run_audits(group, &self.group, selection, config)?);
        Ok(self)
    }

    /// Every agreement flag that is present holds.
    pub fn agrees(&self) -> bool {
        self.agreement.unwrap_or(true) && self.agreement_theorem2.unwrap_or(true)
    }

    /// No audit failed.
    pub fn audits_pass(&self) -> bool {
        self.audits
            .as_ref()
            .is_none_or(|a| a.iter().all(|r| r.status != audit::AuditStatus::Failed))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentitySelection {
    Eq1,
    Eq2,
    Eq3,
    Expansions,
    Cond3,
    Lemmas,
    All,
}

impl FromStr for IdentitySelection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "eq1" => Self::Eq1,
            "eq2" => Self::Eq2,
            "eq3" => Self::Eq3,
            "expansions" => Self::Expansions,
            "cond3" => Self::Cond3,
            "lemmas" => Self::Lemmas,
            "all" => Self::All,
            other => return Err(format!("unknown identity `{other}`")),
        })
    }
}

fn gated(
    identity: &str,
    name: &str,
    result: Result<AuditReport, AuditError>,
) -> Result<AuditReport, LieError> {
    match result {
        Ok(r) => Ok(r),
        Err(AuditError::HypothesisViolated(reason)) => {
            Ok(AuditReport::skipped(identity, name, reason))
        }
        Err(AuditError::Budget(e)) => Err(e),
    }
}

/// Runs the selected audits. Unmet hypotheses show up as skipped reports.
pub fn run_audits(
    group: &Group,
    name: &str,
    selection: IdentitySelection,
    config: &AuditConfig,
) -> Result<Vec<AuditReport>, LieError> {
    use IdentitySelection::*;
    let wants = |s: IdentitySelection| selection == All || selection == s;
    let mut out = Vec::new();
    if wants(Eq1) {
        out.push(audit::audit_eq1_report(group, name));
    }
    if wants(Expansions) {
        out.push(audit::audit_bracket_expansions(group, name, config));
        out.push(audit::audit_involutions_expansion(group, name, config));
    }
    if wants(Cond3) {
        out.push(match classify::condition3(group) {
            Some(w) => gated(
                "cond3",
                name,
                audit::audit_condition3_formula(group, name, &w, config),
            )?,
            None => AuditReport::skipped(
                "cond3",
                name,
                "no abelian index-2 subgroup inverted by an element of order 4".into(),
            ),
        });
    }
    if wants(Eq2) {
        out.push(gated("eq2", name, audit::audit_eq2(group, name, config))?);
    }
    if wants(Eq3) {
        out.push(gated("eq3", name, audit::audit_eq3(group, name, config))?);
    }
    if wants(Lemmas) {
        out.push(gated(
            "lemmas",
            name,
            audit::lemma_conformance(group, name, config),
        )?);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub schema: u32,
    pub max_order: usize,
    pub group_count: usize,
    pub all_agree: bool,
    pub audits_pass: bool,
    pub disagreements: Vec<String>,
    pub groups: Vec<RunReport>,
}

/// Structural and brute-force verdicts for every catalog group up to
/// `max_order`, in catalog order.
pub fn validate(
    max_order: usize,
    budget: usize,
    audits: Option<IdentitySelection>,
    config: &AuditConfig,
) -> Result<ValidationReport, LieError> {
    let entries = catalog::catalog(max_order);
    let groups = entries
        .par_iter()
        .map(|e| {
            let report = RunReport::classify(&e.name, &e.group).with_brute(&e.group, budget)?;
            match audits {
                Some(sel) => report.with_audits(&e.group, sel, config),
                None => Ok(report),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let disagreements = groups
        .iter()
        .filter(|r| !r.agrees())
        .map(|r| r.group.clone())
        .collect::<Vec<_>>();
    Ok(ValidationReport {
        schema: SCHEMA_VERSION,
        max_order,
        group_count: groups.len(),
        all_agree: disagreements.is_empty(),
        audits_pass: groups.iter().all(|r| r.audits_pass()),
        disagreements,
        groups,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt(b: Option<bool>) -> &'static str {
    b.map_or("-", yes_no)
}

/// One-line-per-fact human summary of a run.
pub fn render_run(report: &RunReport) -> String {
    let mut s = String::new();
    let t1 = &report.theorem1;
    let _ = writeln!(
        s,
        "group {} (order {}, exponent {})",
        report.group, report.order, report.exponent
    );
    let _ = writeln!(
        s,
        "  conditions: (1) {}  (2) {}  (3) {}  (4) {}  => Lie metabelian: {}",
        yes_no(t1.c1),
        yes_no(t1.c2),
        yes_no(t1.c3),
        yes_no(t1.c4),
        yes_no(t1.lie_metabelian)
    );
    let _ = writeln!(
        s,
        "  check-set commutative (structural): {}   hamiltonian 2-group: {}",
        yes_no(report.theorem2.holds),
        yes_no(t1.hamiltonian_2group)
    );
    if let Some(b) = &report.brute {
        let _ = writeln!(
            s,
            "  brute force: Lie metabelian {}, {} generators, {} brackets, {} distinct",
            yes_no(b.lie_metabelian),
            b.generator_count,
            b.bracket_count,
            b.deduped_bracket_count
        );
        if let Some(w) = &b.witness {
            let _ = writeln!(
                s,
                "  witness: [[{}, {}], [{}, {}]] != 0",
                w.display[0], w.display[1], w.display[2], w.display[3]
            );
        }
        let _ = writeln!(
            s,
            "  check-set commutative: {}   symmetric elements commutative: {}",
            opt(report.check_commutative),
            opt(report.plus_commutative)
        );
        let _ = writeln!(
            s,
            "  agreement: metabelian {}   check-set {}",
            opt(report.agreement),
            opt(report.agreement_theorem2)
        );
    }
    for a in report.audits.iter().flatten() {
        let status = serde_json::to_value(a.status).expect("status serialises");
        let _ = writeln!(
            s,
            "  audit {:<12} {:<8} {} tuples{}",
            a.identity,
            status.as_str().unwrap_or("?"),
            a.tuples_checked,
            a.note
                .as_ref()
                .map(|n| format!(" ({n})"))
                .unwrap_or_default()
        );
        for c in &a.checks {
            let status = serde_json::to_value(c.status).expect("status serialises");
            let _ = writeln!(s, "    {:<30} {}", c.name, status.as_str().unwrap_or("?"));
        }
        if let Some(c) = &a.counterexample {
            let _ = writeln!(s, "    counterexample {:?}: {}", c.labels, c.detail);
        }
    }
    s
}

pub fn render_validation(report: &ValidationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<10} {:>5}  {:<7} {:>4} {:>4} {:>4} {:>4}  {:<6} {:<6}  {:<6} {:<6}  agree",
        "group", "order", "ham2", "c1", "c2", "c3", "c4", "thm1", "brute", "thm2", "check"
    );
    for r in &report.groups {
        let t1 = &r.theorem1;
        let _ = writeln!(
            s,
            "{:<10} {:>5}  {:<7} {:>4} {:>4} {:>4} {:>4}  {:<6} {:<6}  {:<6} {:<6}  {}",
            r.group,
            r.order,
            yes_no(t1.hamiltonian_2group),
            yes_no(t1.c1),
            yes_no(t1.c2),
            yes_no(t1.c3),
            yes_no(t1.c4),
            yes_no(t1.lie_metabelian),
            opt(r.brute.as_ref().map(|b| b.lie_metabelian)),
            yes_no(r.theorem2.holds),
            opt(r.check_commutative),
            yes_no(r.agrees())
        );
    }
    let _ = writeln!(
        s,
        "{} groups, all agree: {}, audits pass: {}",
        report.group_count,
        yes_no(report.all_agree),
        yes_no(report.audits_pass)
    );
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_only_has_no_agreement() {
        let g = catalog::quaternion(8);
        let r = RunReport::classify("Q8", &g);
        assert!(r.theorem1.c3 && r.theorem1.c4 && r.theorem1.lie_metabelian);
        assert_eq!(r.agreement, None);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.starts_with(r#"{"schema":1,"group":"Q8""#));
        assert!(!json.contains("agreement"));
    }

    #[test]
    fn brute_adds_agreement() {
        let g = catalog::semidihedral16();
        let r = RunReport::classify("SD16", &g).with_brute(&g, 300).unwrap();
        assert_eq!(r.agreement, Some(true));
        assert_eq!(r.agreement_theorem2, Some(true));
        assert!(!r.brute.as_ref().unwrap().lie_metabelian);
        assert!(render_run(&r).contains("witness"));
    }

    #[test]
    fn gated_audits_are_skipped() {
        let d8 = catalog::dihedral(8);
        let audits =
            run_audits(&d8, "D8", IdentitySelection::Eq2, &AuditConfig::default()).unwrap();
        assert_eq!(audits.len(), 1);
        assert_eq!(audits[0].status, audit::AuditStatus::Skipped);
        let q8 = catalog::quaternion(8);
        let audits =
            run_audits(&q8, "Q8", IdentitySelection::All, &AuditConfig::default()).unwrap();
        assert!(audits.iter().all(|a| a.passed()), "{audits:#?}");
    }

    #[test]
    fn identity_names_parse() {
        assert_eq!(
            "eq2".parse::<IdentitySelection>(),
            Ok(IdentitySelection::Eq2)
        );
        assert!("eq9".parse::<IdentitySelection>().is_err());
    }

    #[test]
    fn empty_validation() {
        let r = validate(0, 300, None, &AuditConfig::default()).unwrap();
        assert_eq!(r.group_count, 0);
        assert!(r.all_agree);
    }
}
