//! Structural criteria for Lie metabelian symmetric elements.
//!
//! `ZG⁺` is Lie metabelian exactly when one of four conditions holds:
//!
//! 1. `⟨g : g² ≠ 1⟩` is abelian;
//! 2. `G` has an elementary abelian subgroup of index 2;
//! 3. `G` has an abelian subgroup `B` of index 2 and an element `x` of order 4
//!    with `b^x = b⁻¹` for every `b ∈ B`;
//! 4. `Z(G) = {g : g² = 1}` and it has index 4.
//!
//! `Ǧ` is commutative exactly when (1) or (2) holds. Every check iterates in
//! ascending element order and returns the first witness found.

use serde::Serialize;

use crate::group::{Group, Subgroup};

/// `⟨g² , (g, h)⟩`: the smallest normal subgroup with elementary abelian
/// 2-group quotient. Every index-2 subgroup contains it.
pub fn squares_and_commutators(group: &Group) -> Subgroup {
    let mut gens: Vec<usize> = group.elements().map(|g| group.square(g)).collect();
    for g in group.elements() {
        for h in group.elements() {
            gens.push(group.comm(g, h));
        }
    }
    gens.sort_unstable();
    gens.dedup();
    group.generated_subgroup(&gens)
}

/// All subgroups of index 2, sorted by their element lists.
///
/// They are the kernels of the nonzero linear functionals on
/// `G/⟨squares, commutators⟩`, viewed as a vector space over `F2`.
pub fn index_two_subgroups(group: &Group) -> Vec<Subgroup> {
    let n = group.order();
    let frattini = squares_and_commutators(group);

    // Greedy basis of the quotient.
    let mut basis: Vec<usize> = Vec::new();
    let mut span = frattini.clone();
    while let Some(g) = group.elements().find(|&g| !span.contains(g)) {
        basis.push(g);
        let mut gens = frattini.elements().to_vec();
        gens.extend_from_slice(&basis);
        span = group.generated_subgroup(&gens);
    }

    // coords[g] = bitmask of g's coset in terms of the basis.
    let mut coords = vec![0usize; n];
    for mask in 0usize..1 << basis.len() {
        let rep = basis
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask >> bit & 1 == 1)
            .fold(group.identity(), |acc, (_, &b)| group.mul(acc, b));
        for &k in frattini.elements() {
            coords[group.mul(rep, k)] = mask;
        }
    }

    let mut subgroups: Vec<Subgroup> = (1usize..1 << basis.len())
        .map(|functional| {
            let members: Vec<usize> = group
                .elements()
                .filter(|&g| (coords[g] & functional).count_ones().is_multiple_of(2))
                .collect();
            group
                .subgroup(&members)
                .expect("kernel of a functional is a subgroup")
        })
        .collect();
    subgroups.sort();
    subgroups
}

/// `K = ⟨g : g² ≠ 1⟩`.
pub fn non_involution_subgroup(group: &Group) -> Subgroup {
    let gens: Vec<usize> = group.elements().filter(|&g| group.square(g) != 0).collect();
    group.generated_subgroup(&gens)
}

/// Returns `K` when it is abelian.
pub fn condition1(group: &Group) -> Option<Subgroup> {
    let k = non_involution_subgroup(group);
    k.is_abelian(group).then_some(k)
}

/// First elementary abelian 2-subgroup of index 2.
pub fn condition2(group: &Group) -> Option<Subgroup> {
    index_two_subgroups(group)
        .into_iter()
        .find(|h| h.is_elementary_abelian_2(group))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvertedSubgroup {
    /// Abelian subgroup of index 2.
    pub subgroup: Vec<usize>,
    /// Element of order 4 inverting every element of `subgroup`.
    pub x: usize,
}

impl InvertedSubgroup {
    /// Re-checks every defining property against `group`.
    pub fn verify(&self, group: &Group) -> bool {
        let Some(b) = group.subgroup(&self.subgroup) else {
            return false;
        };
        self.x < group.order()
            && b.is_abelian(group)
            && b.index_in(group) == 2
            && group.order() == 2 * b.len()
            && group.element_order(self.x) == 4
            && b.elements()
                .iter()
                .all(|&e| group.conj(e, self.x) == group.inv(e))
    }
}

/// First abelian index-2 subgroup `B` and element `x` of order 4 inverting it.
/// `x` may lie inside `B`.
pub fn condition3(group: &Group) -> Option<InvertedSubgroup> {
    index_two_subgroups(group)
        .into_iter()
        .filter(|b| b.is_abelian(group))
        .find_map(|b| {
            group
                .elements()
                .filter(|&x| group.element_order(x) == 4)
                .find(|&x| {
                    b.elements()
                        .iter()
                        .all(|&e| group.conj(e, x) == group.inv(e))
                })
                .map(|x| InvertedSubgroup {
                    subgroup: b.elements().to_vec(),
                    x,
                })
        })
}

/// `Z(G) = {g : g² = 1}` with `[G : Z(G)] = 4`; returns the center.
pub fn condition4(group: &Group) -> Option<Subgroup> {
    let center = group.center();
    (center.elements() == group.involution_set().as_slice() && group.order() == 4 * center.len())
        .then_some(center)
}

/// Nonabelian 2-group all of whose cyclic subgroups are normal.
pub fn is_hamiltonian_2group(group: &Group) -> bool {
    if group.is_abelian() || !group.is_two_group() {
        return false;
    }
    group.elements().all(|g| {
        let cyclic = group.generated_subgroup(&[g]);
        group.elements().all(|h| cyclic.contains(group.conj(g, h)))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem2Verdict {
    pub holds: bool,
    pub k_abelian: bool,
    pub elementary_abelian_index2: bool,
}

/// Structural prediction of whether `Ǧ` is commutative.
pub fn theorem2_verdict(group: &Group) -> Theorem2Verdict {
    let k_abelian = condition1(group).is_some();
    let elementary_abelian_index2 = condition2(group).is_some();
    Theorem2Verdict {
        holds: k_abelian || elementary_abelian_index2,
        k_abelian,
        elementary_abelian_index2,
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConditionWitnesses {
    /// `⟨g : g² ≠ 1⟩`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c1: Option<Vec<usize>>,
    /// Elementary abelian subgroup of index 2.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c2: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c3: Option<InvertedSubgroup>,
    /// The center.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c4: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub c1: bool,
    pub c2: bool,
    pub c3: bool,
    pub c4: bool,
    /// Disjunction of the four conditions.
    pub lie_metabelian: bool,
    pub t2_1: bool,
    pub t2_2: bool,
    pub hamiltonian_2group: bool,
    pub witnesses: ConditionWitnesses,
}

impl ConditionReport {
    /// Re-checks every stored witness against its defining predicate.
    pub fn verify_witnesses(&self, group: &Group) -> bool {
        let w = &self.witnesses;
        let c1_ok = w.c1.as_ref().map_or(!self.c1, |k| {
            *k == non_involution_subgroup(group).elements() && {
                group.subgroup(k).is_some_and(|s| s.is_abelian(group))
            }
        });
        let c2_ok = w.c2.as_ref().map_or(!self.c2, |h| {
            group
                .subgroup(h)
                .is_some_and(|s| s.is_elementary_abelian_2(group) && 2 * s.len() == group.order())
        });
        let c3_ok = w.c3.as_ref().map_or(!self.c3, |c| c.verify(group));
        let c4_ok = w.c4.as_ref().map_or(!self.c4, |z| {
            *z == group.center().elements()
                && *z == group.involution_set()
                && 4 * z.len() == group.order()
        });
        c1_ok && c2_ok && c3_ok && c4_ok
    }
}

/// Evaluates all four conditions (they may overlap; all true ones are
/// reported).
pub fn theorem1_verdict(group: &Group) -> ConditionReport {
    let c1 = condition1(group);
    let c2 = condition2(group);
    let c3 = condition3(group);
    let c4 = condition4(group);
    let flags = [c1.is_some(), c2.is_some(), c3.is_some(), c4.is_some()];
    ConditionReport {
        c1: flags[0],
        c2: flags[1],
        c3: flags[2],
        c4: flags[3],
        lie_metabelian: flags.iter().any(|&f| f),
        t2_1: flags[0],
        t2_2: flags[1],
        hamiltonian_2group: is_hamiltonian_2group(group),
        witnesses: ConditionWitnesses {
            c1: c1.map(|s| s.elements().to_vec()),
            c2: c2.map(|s| s.elements().to_vec()),
            c3,
            c4: c4.map(|s| s.elements().to_vec()),
        },
    }
}
