//! Brute-force Lie checks on the symmetric elements of `ZG`.
//!
//! The symmetric elements are spanned by
//! `X⁺ = {g + g⁻¹ : g² ≠ 1} ∪ {g : g² = 1}`, and the bracket is bilinear, so
//! every question about them reduces to finitely many computations on `X⁺`.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::group::Group;
use crate::ring::RingElement;

/// Largest group order the pairwise phase accepts by default.
pub const DEFAULT_BUDGET: usize = 300;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("group of order {order} exceeds the brute-force budget of {budget}")]
    BudgetExceeded { order: usize, budget: usize },
}

/// `X⁺` and the sign-deduplicated nonzero elements of `Ǧ = {g - g⁻¹}`.
#[derive(Clone, Debug)]
pub struct GeneratorSet<'g> {
    /// One generator per involution (identity included) and one per
    /// inverse pair `{g, g⁻¹}` with `g² ≠ 1`, ascending by least element.
    pub plus: Vec<RingElement<'g>>,
    /// The least group element appearing in each `plus` generator.
    pub plus_reps: Vec<usize>,
    /// `g - g⁻¹` for each `g < g⁻¹`.
    pub check: Vec<RingElement<'g>>,
}

pub fn x_plus_generators(group: &Group) -> GeneratorSet<'_> {
    let mut plus = Vec::new();
    let mut plus_reps = Vec::new();
    let mut check = Vec::new();
    for g in group.elements() {
        let g_inv = group.inv(g);
        if g == g_inv {
            plus.push(RingElement::basis(group, g));
            plus_reps.push(g);
        } else if g < g_inv {
            let a = RingElement::basis(group, g);
            let b = RingElement::basis(group, g_inv);
            plus.push(&a + &b);
            plus_reps.push(g);
            check.push(&a - &b);
        }
    }
    GeneratorSet {
        plus,
        plus_reps,
        check,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Positions in `X⁺` of `a, b, c, d` with `[[a, b], [c, d]] ≠ 0`.
    pub generators: [usize; 4],
    /// The same generators written out, e.g. `r + r^3`.
    pub display: [String; 4],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BruteReport {
    pub lie_metabelian: bool,
    pub witness: Option<Witness>,
    pub generator_count: usize,
    /// Brackets `[x_i, x_j]` evaluated, `i < j`.
    pub bracket_count: usize,
    /// Distinct nonzero brackets up to sign.
    pub deduped_bracket_count: usize,
}

/// Nonzero brackets of `X⁺`, one per class up to sign, in first-seen order
/// over `(i, j)` with `i < j`.
pub fn distinct_brackets<'g>(gens: &[RingElement<'g>]) -> Vec<(usize, usize, RingElement<'g>)> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let b = gens[i].bracket(&gens[j]);
            if b.is_zero() {
                continue;
            }
            let key = b.sign_normalized();
            if seen.insert(key.clone()) {
                out.push((i, j, key));
            }
        }
    }
    out
}

/// Decides whether `[[a, b], [c, d]] = 0` for all `a, b, c, d ∈ X⁺`.
///
/// On failure the witness is the least failing pair of distinct brackets in
/// `(i, j)` order, independent of thread scheduling.
pub fn is_plus_lie_metabelian(group: &Group, budget: usize) -> Result<BruteReport, LieError> {
    if group.order() > budget {
        return Err(LieError::BudgetExceeded {
            order: group.order(),
            budget,
        });
    }
    let gens = x_plus_generators(group).plus;
    let n = gens.len();
    let brackets = distinct_brackets(&gens);

    let failure = (0..brackets.len()).into_par_iter().find_map_first(|p| {
        (p + 1..brackets.len())
            .find(|&q| !brackets[p].2.commutes_with(&brackets[q].2))
            .map(|q| (p, q))
    });

    let witness = failure.map(|(p, q)| {
        let generators = [brackets[p].0, brackets[p].1, brackets[q].0, brackets[q].1];
        Witness {
            generators,
            display: generators.map(|k| gens[k].to_string()),
        }
    });
    Ok(BruteReport {
        lie_metabelian: witness.is_none(),
        witness,
        generator_count: n,
        bracket_count: n * n.saturating_sub(1) / 2,
        deduped_bracket_count: brackets.len(),
    })
}

/// `[[a, b], [c, d]]` for the given positions in `X⁺`.
pub fn evaluate_witness(group: &Group, generators: [usize; 4]) -> RingElement<'_> {
    let gens = x_plus_generators(group).plus;
    let [a, b, c, d] = generators.map(|k| &gens[k]);
    a.bracket(b).bracket(&c.bracket(d))
}

/// First pair `i < j` of `X⁺` positions with `[x_i, x_j] ≠ 0`.
pub fn plus_noncommuting_pair(group: &Group) -> Option<(usize, usize)> {
    let gens = x_plus_generators(group).plus;
    (0..gens.len()).find_map(|i| {
        (i + 1..gens.len())
            .find(|&j| !gens[i].commutes_with(&gens[j]))
            .map(|j| (i, j))
    })
}

/// Whether the symmetric elements commute.
pub fn is_plus_commutative(group: &Group) -> bool {
    plus_noncommuting_pair(group).is_none()
}

/// Whether `Ǧ` is commutative.
pub fn is_check_commutative(group: &Group) -> bool {
    let check = x_plus_generators(group).check;
    (0..check.len()).all(|i| (i + 1..check.len()).all(|j| check[i].commutes_with(&check[j])))
}

#[derive(Clone, Debug)]
pub struct Eq1Outcome<'g> {
    pub brackets_checked: usize,
    /// `(i, j, [x_i, x_j])` for the first bracket outside the span of `Ǧ`.
    pub violation: Option<(usize, usize, RingElement<'g>)>,
}

/// A bracket lies in the integral span of `Ǧ` exactly when it is
/// antisymmetric and vanishes on every `g` with `g² = 1`.
pub fn in_check_span(b: &RingElement<'_>) -> bool {
    let group = b.group();
    b.is_antisymmetric() && b.support().all(|g| group.square(g) != 0)
}

/// Checks every ordered bracket of `X⁺` generators for membership in the
/// span of `Ǧ`.
pub fn eq1_outcome(group: &Group) -> Eq1Outcome<'_> {
    let gens = x_plus_generators(group).plus;
    let mut checked = 0;
    for i in 0..gens.len() {
        for j in 0..gens.len() {
            checked += 1;
            let b = gens[i].bracket(&gens[j]);
            if !in_check_span(&b) {
                return Eq1Outcome {
                    brackets_checked: checked,
                    violation: Some((i, j, b)),
                };
            }
        }
    }
    Eq1Outcome {
        brackets_checked: checked,
        violation: None,
    }
}

pub fn audit_eq1(group: &Group) -> bool {
    eq1_outcome(group).violation.is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn rendered(group: &Group) -> Vec<String> {
        x_plus_generators(group)
            .plus
            .iter()
            .map(|x| x.to_string())
            .collect()
    }

    #[test]
    fn generator_counts() {
        assert_eq!(rendered(&catalog::cyclic(4)), vec!["1", "c + c^3", "c^2"]);
        assert_eq!(
            rendered(&catalog::quaternion(8)),
            vec!["1", "i + -i", "-1", "j + -j", "k + -k"]
        );
        let s4 = catalog::s4();
        let gens = x_plus_generators(&s4);
        assert_eq!(gens.plus.len(), 17);
        assert_eq!(gens.check.len(), 7);
        assert!(gens.plus.iter().all(|x| x.is_symmetric()));
        assert!(gens
            .check
            .iter()
            .all(|x| x.is_antisymmetric() && !x.is_zero()));
    }

    #[test]
    fn commutativity() {
        assert!(is_plus_commutative(&catalog::cyclic(6)));
        assert!(is_plus_commutative(&catalog::quaternion(8)));
        let d8 = catalog::dihedral(8);
        assert!(!is_plus_commutative(&d8));
        let (i, j) = plus_noncommuting_pair(&d8).unwrap();
        let gens = x_plus_generators(&d8).plus;
        assert!(!gens[i].bracket(&gens[j]).is_zero());

        assert!(is_check_commutative(&catalog::cyclic(7)));
        assert!(is_check_commutative(&d8));
        assert!(!is_check_commutative(
            &catalog::by_name("Q8xC2").unwrap().group
        ));
    }

    #[test]
    fn metabelian_verdicts() {
        let c6 = is_plus_lie_metabelian(&catalog::cyclic(6), DEFAULT_BUDGET).unwrap();
        assert!(c6.lie_metabelian);
        assert_eq!(c6.deduped_bracket_count, 0);

        let q16 = is_plus_lie_metabelian(&catalog::quaternion(16), DEFAULT_BUDGET).unwrap();
        assert!(q16.lie_metabelian);

        let s4 = catalog::s4();
        let report = is_plus_lie_metabelian(&s4, DEFAULT_BUDGET).unwrap();
        assert!(!report.lie_metabelian);
        let w = report.witness.unwrap();
        assert!(!evaluate_witness(&s4, w.generators).is_zero());
    }

    #[test]
    fn budget_is_enforced() {
        assert_eq!(
            is_plus_lie_metabelian(&catalog::cyclic(12), 10),
            Err(LieError::BudgetExceeded {
                order: 12,
                budget: 10
            })
        );
    }

    #[test]
    fn eq1_membership() {
        assert!(audit_eq1(&catalog::cyclic(5)));
        let d8 = catalog::dihedral(8);
        assert!(audit_eq1(&d8));
        let s4 = catalog::s4();
        let outcome = eq1_outcome(&s4);
        assert!(outcome.violation.is_none());
        assert_eq!(outcome.brackets_checked, 289);

        // A symmetric element is not in the span.
        let g = RingElement::basis(&d8, 1);
        let sym = &g + &RingElement::basis(&d8, d8.inv(1));
        assert!(!in_check_span(&sym));
        assert!(in_check_span(&RingElement::zero(&d8)));
    }
}
