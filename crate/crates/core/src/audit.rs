//! Replays explicit group-ring identities and structural consequences of
//! Lie metabelian `ZG⁺` on concrete groups.
//!
//! Ring identities compare a left-hand side evaluated by ring arithmetic with
//! a right-hand side assembled term by term from group products; the residual
//! must be zero. Groups up to [`AuditConfig::exhaustive_order`] (or whose tuple
//! space fits in the sample budget) are checked over every qualifying tuple;
//! larger ones over a seeded sample.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::classify::{self, InvertedSubgroup};
use crate::group::{Group, Subgroup};
use crate::lie::{self, LieError};
use crate::ring::RingElement;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuditError {
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error(transparent)]
    Budget(#[from] LieError),
}

#[derive(Clone, Copy, Debug)]
pub struct AuditConfig {
    /// Tuples drawn when a tuple space is not enumerated.
    pub sample_budget: usize,
    pub seed: u64,
    /// Groups up to this order are always enumerated.
    pub exhaustive_order: usize,
    /// Brute-force budget used when an audit needs the Lie verdict.
    pub brute_budget: usize,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            sample_budget: 1000,
            seed: 0,
            exhaustive_order: 24,
            brute_budget: lie::DEFAULT_BUDGET,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AuditStatus {
    Passed,
    Failed,
    /// Hypothesis not met; nothing was checked.
    Skipped,
    /// Hypothesis met but no tuple qualified.
    Vacuous,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidualTerm {
    pub element: String,
    pub index: usize,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// The failing tuple. For audits covering several displays the first
    /// entry selects the display and the rest are element indices.
    pub tuple: Vec<usize>,
    /// Labels of the element entries of `tuple`.
    pub labels: Vec<String>,
    pub detail: String,
    /// `lhs - rhs`; empty for structural checks.
    pub residual: Vec<ResidualTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: AuditStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub identity: String,
    pub group: String,
    pub status: AuditStatus,
    pub tuples_checked: usize,
    pub exhaustive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        matches!(self.status, AuditStatus::Passed | AuditStatus::Vacuous)
    }

    pub fn skipped(identity: &str, group: &str, reason: String) -> AuditReport {
        AuditReport {
            identity: identity.to_string(),
            group: group.to_string(),
            status: AuditStatus::Skipped,
            tuples_checked: 0,
            exhaustive: false,
            counterexample: None,
            checks: Vec::new(),
            note: Some(reason),
        }
    }
}

/// Every qualifying tuple, or a seeded sample of `sample_budget` of them.
/// Returns the tuples and whether they are exhaustive.
fn tuple_space(
    config: &AuditConfig,
    stream: u64,
    order: usize,
    axes: &[&[usize]],
) -> (Vec<Vec<usize>>, bool) {
    let size = axes
        .iter()
        .try_fold(1usize, |acc, a| acc.checked_mul(a.len()))
        .unwrap_or(usize::MAX);
    if size == 0 {
        return (Vec::new(), true);
    }
    if order <= config.exhaustive_order || size <= config.sample_budget {
        let mut out = vec![Vec::new()];
        for axis in axes {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    axis.iter().map(move |&x| {
                        let mut t = prefix.clone();
                        t.push(x);
                        t
                    })
                })
                .collect();
        }
        (out, true)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        rng.set_stream(stream);
        let tuples = (0..config.sample_budget)
            .map(|_| axes.iter().map(|a| a[rng.gen_range(0..a.len())]).collect())
            .collect();
        (tuples, false)
    }
}

fn residual_terms(r: &RingElement<'_>) -> Vec<ResidualTerm> {
    let group = r.group();
    r.terms()
        .iter()
        .map(|(g, c)| ResidualTerm {
            element: group.label(*g).to_string(),
            index: *g,
            coeff: c.to_string(),
        })
        .collect()
}

/// Runs `eval` over `tuples`; `eval` returns the first nonzero residual of
/// the tuple together with a description. The first `selectors` entries of
/// each tuple are display selectors, not group elements.
#[allow(clippy::too_many_arguments)]
fn run_ring_identity<'g, F>(
    identity: &str,
    name: &str,
    group: &'g Group,
    tuples: &[Vec<usize>],
    selectors: usize,
    exhaustive: bool,
    mut eval: F,
) -> AuditReport
where
    F: FnMut(&[usize]) -> Option<(String, RingElement<'g>)>,
{
    let mut checked = 0;
    let mut counterexample = None;
    for t in tuples {
        checked += 1;
        if let Some((detail, residual)) = eval(t) {
            debug_assert!(!residual.is_zero());
            counterexample = Some(Counterexample {
                tuple: t.clone(),
                labels: t[selectors..]
                    .iter()
                    .map(|&g| group.label(g).to_string())
                    .collect(),
                detail,
                residual: residual_terms(&residual),
            });
            break;
        }
    }
    AuditReport {
        identity: identity.to_string(),
        group: name.to_string(),
        status: match (&counterexample, checked) {
            (Some(_), _) => AuditStatus::Failed,
            (None, 0) => AuditStatus::Vacuous,
            (None, _) => AuditStatus::Passed,
        },
        tuples_checked: checked,
        exhaustive,
        counterexample,
        checks: Vec::new(),
        note: None,
    }
}

/// `Some((detail, lhs - rhs))` when the two sides differ.
fn differs<'g>(
    detail: &str,
    lhs: &RingElement<'g>,
    rhs: &RingElement<'g>,
) -> Option<(String, RingElement<'g>)> {
    let r = lhs - rhs;
    (!r.is_zero()).then(|| (detail.to_string(), r))
}

/// Shorthand for building elements of one group ring.
struct Ring<'g>(&'g Group);

impl<'g> Ring<'g> {
    fn e(&self, g: usize) -> RingElement<'g> {
        RingElement::basis(self.0, g)
    }

    /// `g + g⁻¹`.
    fn sym(&self, g: usize) -> RingElement<'g> {
        &self.e(g) + &self.e(self.0.inv(g))
    }

    /// Signed sum of products of group elements.
    fn words(&self, terms: &[(i64, &[usize])]) -> RingElement<'g> {
        let g = self.0;
        RingElement::from_terms(
            g,
            terms
                .iter()
                .map(|(c, word)| (word.iter().fold(g.identity(), |acc, &x| g.mul(acc, x)), *c)),
        )
        .expect("indices come from the group")
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.0.mul(a, b)
    }

    fn inv(&self, a: usize) -> usize {
        self.0.inv(a)
    }
}

/// Bracket expansions of the `X⁺` generators into differences `w - w⁻¹`:
///
/// * `[g + g⁻¹, h + h⁻¹] = gh - (gh)⁻¹ + gh⁻¹ - (gh⁻¹)⁻¹ + g⁻¹h - (g⁻¹h)⁻¹ + (hg)⁻¹ - hg`
/// * `[g + g⁻¹, x] = gx - (gx)⁻¹ + g⁻¹x - (g⁻¹x)⁻¹` for `x² = 1`
/// * `[x, y] = xy - (xy)⁻¹` for `x² = y² = 1`
///
/// These hold in every group. Counterexample tuples are
/// `[display, a, b]` with display 0, 1 or 2 in the order above.
pub fn audit_bracket_expansions(group: &Group, name: &str, config: &AuditConfig) -> AuditReport {
    let ring = Ring(group);
    let all: Vec<usize> = group.elements().collect();
    let inv = group.involution_set();

    let (pairs, ex0) = tuple_space(config, 0, group.order(), &[&all, &all]);
    let (mixed, ex1) = tuple_space(config, 1, group.order(), &[&all, &inv]);
    let (invs, ex2) = tuple_space(config, 2, group.order(), &[&inv, &inv]);
    let tagged: Vec<Vec<usize>> = [(0, &pairs), (1, &mixed), (2, &invs)]
        .into_iter()
        .flat_map(|(tag, ts)| {
            ts.iter().map(move |t| {
                let mut v = vec![tag];
                v.extend_from_slice(t);
                v
            })
        })
        .collect();

    run_ring_identity(
        "expansions",
        name,
        group,
        &tagged,
        1,
        ex0 && ex1 && ex2,
        |t| {
            let (a, b) = (t[1], t[2]);
            let (ai, bi) = (ring.inv(a), ring.inv(b));
            match t[0] {
                0 => {
                    let lhs = ring.sym(a).bracket(&ring.sym(b));
                    let ab = ring.mul(a, b);
                    let abi = ring.mul(a, bi);
                    let aib = ring.mul(ai, b);
                    let ba = ring.mul(b, a);
                    let rhs = ring.words(&[
                        (1, &[ab]),
                        (-1, &[ring.inv(ab)]),
                        (1, &[abi]),
                        (-1, &[ring.inv(abi)]),
                        (1, &[aib]),
                        (-1, &[ring.inv(aib)]),
                        (1, &[ring.inv(ba)]),
                        (-1, &[ba]),
                    ]);
                    differs("[g + g^-1, h + h^-1]", &lhs, &rhs)
                }
                1 => {
                    let lhs = ring.sym(a).bracket(&ring.e(b));
                    let ab = ring.mul(a, b);
                    let aib = ring.mul(ai, b);
                    let rhs = ring.words(&[
                        (1, &[ab]),
                        (-1, &[ring.inv(ab)]),
                        (1, &[aib]),
                        (-1, &[ring.inv(aib)]),
                    ]);
                    differs("[g + g^-1, x]", &lhs, &rhs)
                }
                _ => {
                    let lhs = ring.e(a).bracket(&ring.e(b));
                    let ab = ring.mul(a, b);
                    let rhs = ring.words(&[(1, &[ab]), (-1, &[ring.inv(ab)])]);
                    differs("[x, y]", &lhs, &rhs)
                }
            }
        },
    )
}

/// Double-bracket expansions over involutions.
///
/// Display 0, for `x₁² = x₂² = x₃² = 1`:
/// `[[x₁, x₂], [x₂, x₃]] = x₁x₃ + x₂x₁x₃x₂ + x₂x₃x₂x₁ + x₃x₂x₁x₂
///   - (x₃x₁ + x₁x₂x₃x₂ + x₂x₁x₂x₃ + x₂x₃x₁x₂)`.
///
/// Display 1, for `a² = 1` and any `x`:
/// `[[x + x⁻¹, a], [xa + ax⁻¹, a]] = 2(ax⁻² + x⁻²a + xax + axaxa - x²a - ax² - x⁻¹ax⁻¹ - ax⁻¹ax⁻¹a)`.
///
/// Counterexample tuples are `[display, ...]`.
pub fn audit_involutions_expansion(group: &Group, name: &str, config: &AuditConfig) -> AuditReport {
    let ring = Ring(group);
    let all: Vec<usize> = group.elements().collect();
    let inv = group.involution_set();
    let (triples, ex0) = tuple_space(config, 3, group.order(), &[&inv, &inv, &inv]);
    let (pairs, ex1) = tuple_space(config, 4, group.order(), &[&all, &inv]);
    let tagged: Vec<Vec<usize>> = triples
        .iter()
        .map(|t| [&[0][..], t].concat())
        .chain(pairs.iter().map(|t| [&[1][..], t].concat()))
        .collect();

    run_ring_identity("involutions", name, group, &tagged, 1, ex0 && ex1, |t| {
        if t[0] == 0 {
            let (x1, x2, x3) = (t[1], t[2], t[3]);
            let lhs = ring
                .e(x1)
                .bracket(&ring.e(x2))
                .bracket(&ring.e(x2).bracket(&ring.e(x3)));
            let rhs = ring.words(&[
                (1, &[x1, x3]),
                (1, &[x2, x1, x3, x2]),
                (1, &[x2, x3, x2, x1]),
                (1, &[x3, x2, x1, x2]),
                (-1, &[x3, x1]),
                (-1, &[x1, x2, x3, x2]),
                (-1, &[x2, x1, x2, x3]),
                (-1, &[x2, x3, x1, x2]),
            ]);
            differs("[[x1, x2], [x2, x3]]", &lhs, &rhs)
        } else {
            let (x, a) = (t[1], t[2]);
            let xi = ring.inv(x);
            let xa = ring.mul(x, a);
            let lhs = ring
                .sym(x)
                .bracket(&ring.e(a))
                .bracket(&ring.sym(xa).bracket(&ring.e(a)));
            let rhs = ring
                .words(&[
                    (1, &[a, xi, xi]),
                    (1, &[xi, xi, a]),
                    (1, &[x, a, x]),
                    (1, &[a, x, a, x, a]),
                    (-1, &[x, x, a]),
                    (-1, &[a, x, x]),
                    (-1, &[xi, a, xi]),
                    (-1, &[a, xi, a, xi, a]),
                ])
                .scale(2);
            differs("[[x + x^-1, a], [xa + ax^-1, a]]", &lhs, &rhs)
        }
    })
}

/// For an abelian index-2 subgroup `B` inverted by an element of order 4 and
/// `g, h ∉ B` with `h = bg`:
/// `[g + g⁻¹, h + h⁻¹] = (g + g⁻¹)b(g + g⁻¹) - b(g + g⁻¹)² = 2(b⁻¹ - b)(1 + g²)`.
pub fn audit_condition3_formula(
    group: &Group,
    name: &str,
    witness: &InvertedSubgroup,
    config: &AuditConfig,
) -> Result<AuditReport, AuditError> {
    if !witness.verify(group) {
        return Err(AuditError::HypothesisViolated(
            "supplied (B, x) is not an abelian index-2 subgroup inverted by an element of order 4"
                .into(),
        ));
    }
    let ring = Ring(group);
    let b_set = group
        .subgroup(&witness.subgroup)
        .expect("verified subgroup");
    let outside: Vec<usize> = group.elements().filter(|&g| !b_set.contains(g)).collect();
    let (pairs, exhaustive) = tuple_space(config, 5, group.order(), &[&outside, &outside]);
    let one = RingElement::one(group);

    Ok(run_ring_identity(
        "cond3",
        name,
        group,
        &pairs,
        0,
        exhaustive,
        |t| {
            let (g, h) = (t[0], t[1]);
            let b = ring.mul(h, ring.inv(g));
            let sg = ring.sym(g);
            let eb = ring.e(b);
            let lhs = sg.bracket(&ring.sym(h));
            let middle = &(&(&sg * &eb) * &sg) - &(&eb * &(&sg * &sg));
            let closed =
                (&(&ring.e(ring.inv(b)) - &eb) * &(&one + &ring.e(ring.mul(g, g)))).scale(2);
            differs(
                "bracket vs (g + g^-1)b(g + g^-1) - b(g + g^-1)^2",
                &lhs,
                &middle,
            )
            .or_else(|| differs("bracket vs 2(b^-1 - b)(1 + g^2)", &lhs, &closed))
        },
    ))
}

/// Data shared by the identities of groups whose center is the set of
/// involutions and has index 4.
struct CenterIndexFour {
    center: Subgroup,
    /// The three nontrivial cosets of the center, ordered by least element.
    cosets: [Vec<usize>; 3],
    /// The nontrivial commutator.
    t: usize,
}

fn center_index_four(group: &Group) -> Result<CenterIndexFour, AuditError> {
    let center = classify::condition4(group).ok_or_else(|| {
        AuditError::HypothesisViolated("center is not {g : g^2 = 1} of index 4".into())
    })?;
    let mut seen = vec![false; group.order()];
    let mut cosets = Vec::new();
    for g in group.elements() {
        if seen[g] {
            continue;
        }
        let coset: Vec<usize> = {
            let mut c: Vec<usize> = center.elements().iter().map(|&z| group.mul(g, z)).collect();
            c.sort_unstable();
            c
        };
        for &x in &coset {
            seen[x] = true;
        }
        if g != group.identity() {
            cosets.push(coset);
        }
    }
    let cosets: [Vec<usize>; 3] = cosets
        .try_into()
        .map_err(|_| AuditError::HypothesisViolated("center does not have index 4".into()))?;
    let t = group.comm(cosets[0][0], cosets[1][0]);
    Ok(CenterIndexFour { center, cosets, t })
}

/// For `Z(G) = {g : g² = 1}` of index 4, with `x`, `y` from two distinct
/// nontrivial cosets of the center, `u ∈ Z(G)`, `z = uxy` and `t = (x, y)`:
///
/// * `(x + x⁻¹)(y + y⁻¹)(z + z⁻¹) = (x²y² + t)(1 + x²)(1 + y²)u`
/// * `(1 - t)(x + x⁻¹)(y + y⁻¹)(z + z⁻¹) = 0`
///
/// Also checks that `z` lies in the third coset and that `G' = {1, t}`.
pub fn audit_eq2(
    group: &Group,
    name: &str,
    config: &AuditConfig,
) -> Result<AuditReport, AuditError> {
    let data = center_index_four(group)?;
    let ring = Ring(group);
    let mut commutators: Vec<usize> = group
        .elements()
        .flat_map(|g| group.elements().map(move |h| group.comm(g, h)))
        .collect();
    commutators.sort_unstable();
    commutators.dedup();
    if data.t == group.identity() || commutators != [group.identity(), data.t] {
        return Ok(AuditReport {
            identity: "eq2".into(),
            group: name.into(),
            status: AuditStatus::Failed,
            tuples_checked: 0,
            exhaustive: true,
            counterexample: Some(Counterexample {
                labels: commutators
                    .iter()
                    .map(|&g| group.label(g).to_string())
                    .collect(),
                tuple: commutators,
                detail: "commutator set is not {1, t}".into(),
                residual: Vec::new(),
            }),
            checks: Vec::new(),
            note: None,
        });
    }

    let (tuples, exhaustive) = tuple_space(
        config,
        6,
        group.order(),
        &[&data.cosets[0], &data.cosets[1], data.center.elements()],
    );
    let one = RingElement::one(group);
    let t_elem = ring.e(data.t);
    Ok(run_ring_identity(
        "eq2",
        name,
        group,
        &tuples,
        0,
        exhaustive,
        |tuple| {
            let (x, y, u) = (tuple[0], tuple[1], tuple[2]);
            let z = ring.mul(u, ring.mul(x, y));
            if !data.cosets[2].contains(&z) {
                // Signal the structural failure with a nonzero residual.
                return Some(("z = uxy is not in the third coset".into(), ring.e(z)));
            }
            let (x2, y2) = (ring.mul(x, x), ring.mul(y, y));
            let product = &(&ring.sym(x) * &ring.sym(y)) * &ring.sym(z);
            let factored = &(&(&(&ring.e(ring.mul(x2, y2)) + &t_elem) * &(&one + &ring.e(x2)))
                * &(&one + &ring.e(y2)))
                * &ring.e(u);
            let annihilated = &(&one - &t_elem) * &product;
            differs(
                "(x + x^-1)(y + y^-1)(z + z^-1) factorisation",
                &product,
                &factored,
            )
            .or_else(|| {
                differs(
                    "(1 - t)(x + x^-1)(y + y^-1)(z + z^-1) = 0",
                    &annihilated,
                    &RingElement::zero(group),
                )
            })
        },
    ))
}

/// For `Z(G) = {g : g² = 1}` of index 4 and every noncommuting pair:
/// `(x, y) = t` and `[x + x⁻¹, y + y⁻¹] = (1 - t)(x + x⁻¹)(y + y⁻¹)`.
/// Both sides may vanish (they do in Q8).
pub fn audit_eq3(
    group: &Group,
    name: &str,
    config: &AuditConfig,
) -> Result<AuditReport, AuditError> {
    let data = center_index_four(group)?;
    let ring = Ring(group);
    let non_central: Vec<usize> = group
        .elements()
        .filter(|&g| !data.center.contains(g))
        .collect();
    let (pairs, exhaustive) = tuple_space(config, 7, group.order(), &[&non_central, &non_central]);
    let one = RingElement::one(group);
    let t_elem = ring.e(data.t);
    let qualifying: Vec<Vec<usize>> = pairs
        .into_iter()
        .filter(|p| group.comm(p[0], p[1]) != group.identity())
        .collect();
    Ok(run_ring_identity(
        "eq3",
        name,
        group,
        &qualifying,
        0,
        exhaustive,
        |p| {
            let (x, y) = (p[0], p[1]);
            if group.comm(x, y) != data.t {
                return Some((
                    "(x, y) differs from t".into(),
                    &ring.e(group.comm(x, y)) - &t_elem,
                ));
            }
            let lhs = ring.sym(x).bracket(&ring.sym(y));
            let rhs = &(&(&one - &t_elem) * &ring.sym(x)) * &ring.sym(y);
            differs(
                "[x + x^-1, y + y^-1] = (1 - t)(x + x^-1)(y + y^-1)",
                &lhs,
                &rhs,
            )
        },
    ))
}

/// Both identities for groups with `Z(G) = {g : g² = 1}` of index 4.
pub fn audit_condition4_identities(
    group: &Group,
    name: &str,
    config: &AuditConfig,
) -> Result<Vec<AuditReport>, AuditError> {
    Ok(vec![
        audit_eq2(group, name, config)?,
        audit_eq3(group, name, config)?,
    ])
}

/// Membership of all generator brackets in the span of `Ǧ`.
pub fn audit_eq1_report(group: &Group, name: &str) -> AuditReport {
    let outcome = lie::eq1_outcome(group);
    let gens = lie::x_plus_generators(group);
    let counterexample = outcome.violation.map(|(i, j, b)| {
        let residual = &b + &b.star();
        Counterexample {
            tuple: vec![gens.plus_reps[i], gens.plus_reps[j]],
            labels: vec![gens.plus[i].to_string(), gens.plus[j].to_string()],
            detail: "bracket is not in the span of g - g^-1".into(),
            residual: residual_terms(if residual.is_zero() { &b } else { &residual }),
        }
    });
    AuditReport {
        identity: "eq1".into(),
        group: name.into(),
        status: if counterexample.is_some() {
            AuditStatus::Failed
        } else {
            AuditStatus::Passed
        },
        tuples_checked: outcome.brackets_checked,
        exhaustive: true,
        counterexample,
        checks: Vec::new(),
        note: None,
    }
}

fn check(name: &str, status: AuditStatus, detail: Option<String>) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        status,
        detail,
    }
}

fn pass_or_fail(name: &str, failure: Option<String>) -> CheckResult {
    match failure {
        None => check(name, AuditStatus::Passed, None),
        Some(d) => check(name, AuditStatus::Failed, Some(d)),
    }
}

/// Structural consequences of `ZG⁺` Lie metabelian with `Ǧ` noncommutative.
///
/// With `A = ⟨g : g² = 1⟩`, `B = ⟨g : ∘(g) ≠ 4⟩` and
/// `C = ⟨xy : x² ≠ 1 ≠ y², (x, y) = 1⟩`, checks:
///
/// * every element of `A` is a product of two involutions, `Ǎ` commutes,
///   each `x` centralizes `A` or has `x² ∈ A`, `A` is abelian and central;
/// * for `a ∈ A` and `x, y` not commuting with `a`: `∘(x) = ∘(y) = 4`,
///   `(x², y) = (x, y²) = 1`, `a·a^x·a^y·a^{xy} = 1`, `(x, y) ∈ A`
///   (vacuous when `A` is central);
/// * `B` is abelian; if `Exp(G) ≠ 4`, `[G : B] = 2` and elements outside `B`
///   invert it;
/// * if `Exp(G) = 4`: `Z(G) = A`, `Z(G) ⊆ C`, `C` abelian and inverted by
///   every element outside it, and `[G : C] = 2` or `C = Z(G)` of index 4.
pub fn lemma_conformance(
    group: &Group,
    name: &str,
    config: &AuditConfig,
) -> Result<AuditReport, AuditError> {
    let brute = lie::is_plus_lie_metabelian(group, config.brute_budget)?;
    if !brute.lie_metabelian {
        return Err(AuditError::HypothesisViolated(
            "symmetric elements are not Lie metabelian".into(),
        ));
    }
    if lie::is_check_commutative(group) {
        return Err(AuditError::HypothesisViolated(
            "g - g^-1 elements commute".into(),
        ));
    }

    let n = group.order();
    let label = |g: usize| group.label(g).to_string();
    let involutions = group.involution_set();
    let a = group.generated_subgroup(&involutions);
    let center = group.center();
    let mut checks = Vec::new();
    let mut tuples = 0usize;

    let not_product = a.elements().iter().copied().find(|&g| {
        !involutions
            .iter()
            .any(|&x| involutions.contains(&group.mul(group.inv(x), g)))
    });
    tuples += a.len();
    checks.push(pass_or_fail(
        "a_products_of_two_involutions",
        not_product.map(|g| format!("{} is not a product of two involutions", label(g))),
    ));

    let a_checks: Vec<RingElement<'_>> = a
        .elements()
        .iter()
        .map(|&g| &RingElement::basis(group, g) - &RingElement::basis(group, group.inv(g)))
        .collect();
    tuples += a_checks.len() * a_checks.len();
    let noncommuting = (0..a_checks.len()).find_map(|i| {
        (i + 1..a_checks.len())
            .find(|&j| !a_checks[i].commutes_with(&a_checks[j]))
            .map(|j| (a.elements()[i], a.elements()[j]))
    });
    checks.push(pass_or_fail(
        "a_check_commutative",
        noncommuting.map(|(g, h)| {
            format!(
                "{} - {}^-1 and {} - {}^-1 do not commute",
                label(g),
                label(g),
                label(h),
                label(h)
            )
        }),
    ));

    tuples += n;
    let bad_x = group.elements().find(|&x| {
        let centralizes = a.elements().iter().all(|&e| group.comm(x, e) == 0);
        !centralizes && !a.contains(group.square(x))
    });
    checks.push(pass_or_fail(
        "a_centralized_or_square_in_a",
        bad_x.map(|x| format!("{} neither centralizes A nor squares into A", label(x))),
    ));

    checks.push(pass_or_fail(
        "a_abelian",
        (!a.is_abelian(group)).then(|| "A is not abelian".to_string()),
    ));

    let mut qualifying = 0usize;
    let mut failure = None;
    'outer: for &e in a.elements() {
        let movers: Vec<usize> = group
            .elements()
            .filter(|&x| group.comm(e, x) != 0)
            .collect();
        for &x in &movers {
            for &y in &movers {
                qualifying += 1;
                let xy = group.mul(x, y);
                let product = [e, group.conj(e, x), group.conj(e, y), group.conj(e, xy)]
                    .into_iter()
                    .fold(0, |acc, g| group.mul(acc, g));
                let problem = if group.element_order(x) != 4 || group.element_order(y) != 4 {
                    Some("x or y does not have order 4")
                } else if group.comm(group.square(x), y) != 0 || group.comm(x, group.square(y)) != 0
                {
                    Some("(x^2, y) or (x, y^2) is nontrivial")
                } else if product != 0 {
                    Some("a a^x a^y a^xy != 1")
                } else if !a.contains(group.comm(x, y)) {
                    Some("(x, y) is not in A")
                } else {
                    None
                };
                if let Some(p) = problem {
                    failure = Some(format!(
                        "{p} for a = {}, x = {}, y = {}",
                        label(e),
                        label(x),
                        label(y)
                    ));
                    break 'outer;
                }
            }
        }
    }
    tuples += qualifying;
    checks.push(if qualifying == 0 {
        check(
            "a_noncentralizing_pairs",
            AuditStatus::Vacuous,
            Some("no a in A and x, y with (a, x) != 1 != (a, y)".into()),
        )
    } else {
        pass_or_fail("a_noncentralizing_pairs", failure)
    });

    let outside_center = a.elements().iter().copied().find(|&g| !center.contains(g));
    checks.push(pass_or_fail(
        "a_central",
        outside_center.map(|g| format!("{} in A is not central", label(g))),
    ));

    let b_gens: Vec<usize> = group
        .elements()
        .filter(|&g| group.element_order(g) != 4)
        .collect();
    let b = group.generated_subgroup(&b_gens);
    checks.push(pass_or_fail(
        "b_abelian",
        (!b.is_abelian(group)).then(|| "B is not abelian".to_string()),
    ));

    let exponent = group.exponent();
    if exponent != 4 {
        let bad = if b.index_in(group) != 2 {
            Some(format!("[G : B] = {}", b.index_in(group)))
        } else {
            group.elements().filter(|&x| !b.contains(x)).find_map(|x| {
                b.elements()
                    .iter()
                    .find(|&&e| group.conj(e, x) != group.inv(e))
                    .map(|&e| format!("{} does not invert {}", label(x), label(e)))
            })
        };
        tuples += n * b.len();
        checks.push(pass_or_fail("b_index_two_inverted", bad));
        for skipped in [
            "center_equals_a",
            "c_contains_center",
            "c_abelian",
            "c_inverted",
            "c_index",
        ] {
            checks.push(check(
                skipped,
                AuditStatus::Skipped,
                Some("exponent is not 4".into()),
            ));
        }
    } else {
        checks.push(check(
            "b_index_two_inverted",
            AuditStatus::Skipped,
            Some("exponent is 4".into()),
        ));
        checks.push(pass_or_fail(
            "center_equals_a",
            (center != a).then(|| format!("|Z(G)| = {}, |A| = {}", center.len(), a.len())),
        ));

        let mut c_gens = Vec::new();
        for x in group.elements().filter(|&x| group.square(x) != 0) {
            for y in group.elements().filter(|&y| group.square(y) != 0) {
                if group.comm(x, y) == 0 {
                    c_gens.push(group.mul(x, y));
                }
            }
        }
        c_gens.sort_unstable();
        c_gens.dedup();
        let c = group.generated_subgroup(&c_gens);
        tuples += n * n;

        checks.push(pass_or_fail(
            "c_contains_center",
            center
                .elements()
                .iter()
                .find(|&&z| !c.contains(z))
                .map(|&z| format!("{} is central but not in C", label(z))),
        ));
        checks.push(pass_or_fail(
            "c_abelian",
            (!c.is_abelian(group)).then(|| "C is not abelian".to_string()),
        ));
        let bad_inversion = group.elements().filter(|&t| !c.contains(t)).find_map(|t| {
            c.elements()
                .iter()
                .find(|&&e| group.conj(e, t) != group.inv(e))
                .map(|&e| format!("{} does not invert {}", label(t), label(e)))
        });
        checks.push(pass_or_fail("c_inverted", bad_inversion));
        let index = c.index_in(group);
        let alternatives = index == 2 || (c == center && index == 4);
        checks.push(pass_or_fail(
            "c_index",
            (!alternatives).then(|| format!("[G : C] = {index}, C = Z(G): {}", c == center)),
        ));
    }

    let failed = checks.iter().any(|c| c.status == AuditStatus::Failed);
    Ok(AuditReport {
        identity: "lemmas".into(),
        group: name.into(),
        status: if failed {
            AuditStatus::Failed
        } else {
            AuditStatus::Passed
        },
        tuples_checked: tuples,
        exhaustive: true,
        counterexample: None,
        checks,
        note: Some(format!("exponent {exponent}")),
    })
}
