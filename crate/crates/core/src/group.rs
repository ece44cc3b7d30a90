//! Finite groups stored as full Cayley tables.
//!
//! Every constructor funnels through [`Group::from_table`], which checks the
//! group axioms before anything downstream gets to see the table. After
//! construction element `0` is always the identity.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

/// Default cap on the order of a group produced by permutation closure.
pub const DEFAULT_ORDER_LIMIT: usize = 4096;

/// Tables up to this order are checked for associativity over all triples.
/// Larger tables use Light's test over a generating set, which is complete
/// but only quadratic in the order.
const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Row,
    Column,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Row => f.write_str("row"),
            Axis::Column => f.write_str("column"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("a group must have at least one element")]
    Empty,
    #[error("table row {row} has length {len}, expected {order}")]
    BadShape {
        row: usize,
        len: usize,
        order: usize,
    },
    #[error("table entry ({row}, {col}) = {value} is outside [0, {order})")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("not a Latin square: {axis} {line} repeats element {value}")]
    NotLatinSquare {
        axis: Axis,
        line: usize,
        value: usize,
    },
    #[error("table has no two-sided identity element")]
    NoIdentity,
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("generator {index} is not a permutation of [0, {degree})")]
    NotAPermutation { index: usize, degree: usize },
    #[error("generated group exceeds the order limit of {limit}")]
    OrderLimitExceeded { limit: usize },
    #[error("{got} labels supplied for a group of order {order}")]
    LabelCount { got: usize, order: usize },
    #[error("element {index} is out of range for a group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("subgroup is not normal: {0}")]
    NotNormal(String),
}

/// A finite group given by its multiplication table.
///
/// Equality compares the tables only; labels are for display.
#[derive(Clone, Debug)]
pub struct Group {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    element_orders: Vec<u32>,
    labels: Vec<String>,
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for Group {}

impl Group {
    /// Validates a Cayley table and builds the group.
    ///
    /// If the identity is not element `0`, elements `0` and the identity are
    /// swapped (labels follow their elements).
    pub fn from_table(
        table: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<Group, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != n {
                return Err(GroupError::BadShape {
                    row,
                    len: entries.len(),
                    order: n,
                });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(GroupError::EntryOutOfRange {
                        row,
                        col,
                        value,
                        order: n,
                    });
                }
            }
        }
        if let Some(labels) = &labels {
            if labels.len() != n {
                return Err(GroupError::LabelCount {
                    got: labels.len(),
                    order: n,
                });
            }
        }

        check_latin(&table)?;
        let identity = find_identity(&table).ok_or(GroupError::NoIdentity)?;
        check_associativity(&table, identity)?;

        let mut labels = labels.unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
        let table = if identity == 0 {
            table
        } else {
            let swap = |x: usize| {
                if x == 0 {
                    identity
                } else if x == identity {
                    0
                } else {
                    x
                }
            };
            labels.swap(0, identity);
            let mut relabeled = vec![vec![0; n]; n];
            for a in 0..n {
                for b in 0..n {
                    relabeled[swap(a)][swap(b)] = swap(table[a][b]);
                }
            }
            relabeled
        };

        Ok(Self::assemble(table, labels))
    }

    /// Builds the table without validation. Callers must have established
    /// the group axioms and that element 0 is the identity.
    fn assemble(table: Vec<Vec<usize>>, labels: Vec<String>) -> Group {
        let n = table.len();
        let flat: Vec<u32> = table.iter().flatten().map(|&x| x as u32).collect();
        let mut inverse = vec![0u32; n];
        for (g, row) in table.iter().enumerate() {
            let h = row
                .iter()
                .position(|&x| x == 0)
                .expect("latin row contains identity");
            inverse[g] = h as u32;
        }
        let mut group = Group {
            order: n,
            table: flat,
            inverse,
            element_orders: Vec::new(),
            labels,
        };
        group.element_orders = (0..n)
            .map(|g| {
                let mut k = 1u32;
                let mut x = g;
                while x != 0 {
                    x = group.mul(x, g);
                    k += 1;
                }
                k
            })
            .collect();
        group
    }

    /// The abstract group of the permutation group generated by `generators`.
    ///
    /// Permutations are image arrays and compose left to right:
    /// `(p * q)[i] = q[p[i]]`. Elements are numbered in breadth-first order of
    /// discovery, starting from the identity.
    pub fn from_permutations(
        degree: usize,
        generators: &[Vec<usize>],
        limit: usize,
    ) -> Result<Group, GroupError> {
        for (index, p) in generators.iter().enumerate() {
            let mut seen = vec![false; degree];
            let ok = p.len() == degree
                && p.iter()
                    .all(|&x| x < degree && !std::mem::replace(&mut seen[x], true));
            if !ok {
                return Err(GroupError::NotAPermutation { index, degree });
            }
        }

        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(e) = queue.pop_front() {
            for g in generators {
                let p = compose(&elements[e], g);
                if !index.contains_key(&p) {
                    if elements.len() == limit {
                        return Err(GroupError::OrderLimitExceeded { limit });
                    }
                    index.insert(p.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(p);
                }
            }
        }

        let table = elements
            .iter()
            .map(|p| elements.iter().map(|q| index[&compose(p, q)]).collect())
            .collect();
        let labels = elements.iter().map(|p| cycle_notation(p)).collect();
        Group::from_table(table, Some(labels))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g * self.order + h] as usize
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g] as usize
    }

    /// `h⁻¹ g h`.
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(self.inv(h), g), h)
    }

    /// `g⁻¹ h⁻¹ g h`.
    pub fn comm(&self, g: usize, h: usize) -> usize {
        let gh = self.mul(g, h);
        let hg = self.mul(h, g);
        self.mul(self.inv(hg), gh)
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        let k = k % self.element_order(g);
        (0..k).fold(0, |acc, _| self.mul(acc, g))
    }

    pub fn element_order(&self, g: usize) -> usize {
        self.element_orders[g] as usize
    }

    pub fn square(&self, g: usize) -> usize {
        self.mul(g, g)
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Replaces the display labels.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Group, GroupError> {
        if labels.len() != self.order {
            return Err(GroupError::LabelCount {
                got: labels.len(),
                order: self.order,
            });
        }
        self.labels = labels;
        Ok(self)
    }

    /// Looks up an element by its label.
    pub fn find(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn check_index(&self, index: usize) -> Result<usize, GroupError> {
        if index < self.order {
            Ok(index)
        } else {
            Err(GroupError::IndexOutOfRange {
                index,
                order: self.order,
            })
        }
    }

    /// The Cayley table as nested rows.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|row| row.iter().map(|&x| x as usize).collect())
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|g| (g + 1..self.order).all(|h| self.mul(g, h) == self.mul(h, g)))
    }

    pub fn is_two_group(&self) -> bool {
        self.order.is_power_of_two()
    }

    /// `{g : g² = 1}`, identity included, ascending.
    pub fn involution_set(&self) -> Vec<usize> {
        self.elements().filter(|&g| self.square(g) == 0).collect()
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.element_orders
            .iter()
            .fold(1, |acc, &k| lcm(acc, k as usize))
    }

    pub fn center(&self) -> Subgroup {
        let elements = self
            .elements()
            .filter(|&g| self.elements().all(|h| self.mul(g, h) == self.mul(h, g)))
            .collect();
        Subgroup { elements }
    }

    /// The smallest subgroup containing `generators`.
    pub fn generated_subgroup(&self, generators: &[usize]) -> Subgroup {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut found = vec![0usize];
        let mut queue = VecDeque::from([0usize]);
        let gens: Vec<usize> = generators.iter().copied().filter(|&g| g != 0).collect();
        while let Some(e) = queue.pop_front() {
            for &g in &gens {
                let p = self.mul(e, g);
                if !member[p] {
                    member[p] = true;
                    found.push(p);
                    queue.push_back(p);
                }
            }
        }
        found.sort_unstable();
        Subgroup { elements: found }
    }

    /// Wraps `elements` as a subgroup if it is one.
    pub fn subgroup(&self, elements: &[usize]) -> Option<Subgroup> {
        let mut elements = elements.to_vec();
        elements.sort_unstable();
        elements.dedup();
        if elements.first() != Some(&0) || elements.iter().any(|&g| g >= self.order) {
            return None;
        }
        let mut member = vec![false; self.order];
        for &g in &elements {
            member[g] = true;
        }
        // In a finite group, closure under products suffices.
        let closed = elements
            .iter()
            .all(|&g| elements.iter().all(|&h| member[self.mul(g, h)]));
        closed.then_some(Subgroup { elements })
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            elements: self.elements().collect(),
        }
    }

    /// Componentwise product; element `(a, b)` gets index `a * |other| + b`.
    pub fn direct_product(&self, other: &Group) -> Group {
        let (n, m) = (self.order, other.order);
        let mut table = vec![vec![0; n * m]; n * m];
        for a in 0..n {
            for b in 0..m {
                for c in 0..n {
                    for d in 0..m {
                        table[a * m + b][c * m + d] = self.mul(a, c) * m + other.mul(b, d);
                    }
                }
            }
        }
        let labels = (0..n)
            .flat_map(|a| (0..m).map(move |b| (a, b)))
            .map(|(a, b)| format!("({},{})", self.label(a), other.label(b)))
            .collect();
        Group::assemble(table, labels)
    }

    /// `G/N` with cosets numbered by their least element; each coset is
    /// labelled by its least representative.
    pub fn quotient(&self, normal: &Subgroup) -> Result<Group, GroupError> {
        if !normal.is_normal(self) {
            return Err(GroupError::NotNormal(format!("{:?}", normal.elements())));
        }
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in self.elements() {
            if coset_of[g] == usize::MAX {
                for &k in normal.elements() {
                    coset_of[self.mul(g, k)] = reps.len();
                }
                reps.push(g);
            }
        }
        let table = reps
            .iter()
            .map(|&a| reps.iter().map(|&b| coset_of[self.mul(a, b)]).collect())
            .collect();
        let labels = reps.iter().map(|&g| self.label(g).to_string()).collect();
        Ok(Group::assemble(table, labels))
    }

    /// The same group with element `g` renamed to `perm[g]`. `perm` must be a
    /// permutation fixing `0`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Group, GroupError> {
        let n = self.order;
        let mut table = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a]][perm[b]] = perm[self.mul(a, b)];
            }
        }
        let mut labels = vec![String::new(); n];
        for g in 0..n {
            labels[perm[g]] = self.labels[g].clone();
        }
        Group::from_table(table, Some(labels))
    }
}

/// A subgroup, stored as its sorted element indices. Methods that need the
/// multiplication take the parent group explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn is_abelian(&self, group: &Group) -> bool {
        self.elements.iter().enumerate().all(|(i, &g)| {
            self.elements[i + 1..]
                .iter()
                .all(|&h| group.mul(g, h) == group.mul(h, g))
        })
    }

    /// Abelian with every non-identity element of order 2.
    pub fn is_elementary_abelian_2(&self, group: &Group) -> bool {
        self.elements.iter().all(|&g| group.square(g) == 0)
    }

    pub fn index_in(&self, group: &Group) -> usize {
        group.order() / self.len()
    }

    pub fn is_normal(&self, group: &Group) -> bool {
        group.elements().all(|h| {
            self.elements
                .iter()
                .all(|&g| self.contains(group.conj(g, h)))
        })
    }
}

/// `{g : g h = h g for all h in G}`.
pub fn center(group: &Group) -> Subgroup {
    group.center()
}

/// `(p * q)[i] = q[p[i]]`: apply `p` first.
fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    p.iter().map(|&i| q[i]).collect()
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i.to_string());
            i = p[i];
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn check_latin(table: &[Vec<usize>]) -> Result<(), GroupError> {
    let n = table.len();
    for (row, entries) in table.iter().enumerate() {
        let mut seen = vec![false; n];
        for &value in entries {
            if std::mem::replace(&mut seen[value], true) {
                return Err(GroupError::NotLatinSquare {
                    axis: Axis::Row,
                    line: row,
                    value,
                });
            }
        }
    }
    for col in 0..n {
        let mut seen = vec![false; n];
        for row in table {
            let value = row[col];
            if std::mem::replace(&mut seen[value], true) {
                return Err(GroupError::NotLatinSquare {
                    axis: Axis::Column,
                    line: col,
                    value,
                });
            }
        }
    }
    Ok(())
}

fn find_identity(table: &[Vec<usize>]) -> Option<usize> {
    let n = table.len();
    (0..n).find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
}

fn check_associativity(table: &[Vec<usize>], identity: usize) -> Result<(), GroupError> {
    let n = table.len();
    let middles: Vec<usize> = if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
        (0..n).collect()
    } else {
        magma_generators(table, identity)
    };
    for a in 0..n {
        for &b in &middles {
            let ab = table[a][b];
            for c in 0..n {
                if table[ab][c] != table[a][table[b][c]] {
                    return Err(GroupError::NotAssociative { a, b, c });
                }
            }
        }
    }
    Ok(())
}

/// Greedy generating set: every element is a left-normed product of these.
fn magma_generators(table: &[Vec<usize>], identity: usize) -> Vec<usize> {
    let n = table.len();
    let mut reached = vec![false; n];
    reached[identity] = true;
    let mut gens: Vec<usize> = Vec::new();
    while let Some(g) = (0..n).find(|&g| !reached[g]) {
        gens.push(g);
        let mut frontier: Vec<usize> = (0..n).filter(|&x| reached[x]).collect();
        while let Some(x) = frontier.pop() {
            for &s in &gens {
                let y = table[x][s];
                if !reached[y] {
                    reached[y] = true;
                    frontier.push(y);
                }
            }
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> Group {
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Group::from_table(table, None).unwrap()
    }

    fn s3() -> Group {
        Group::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]], DEFAULT_ORDER_LIMIT).unwrap()
    }

    fn d8_perm() -> Group {
        Group::from_permutations(
            4,
            &[vec![1, 2, 3, 0], vec![2, 1, 0, 3]],
            DEFAULT_ORDER_LIMIT,
        )
        .unwrap()
    }

    #[test]
    fn trivial_and_c2() {
        let g = Group::from_table(vec![vec![0]], None).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.is_abelian());
        let c2 = Group::from_table(vec![vec![0, 1], vec![1, 0]], None).unwrap();
        assert_eq!(c2.mul(1, 1), 0);
        assert_eq!(c2.element_order(1), 2);
    }

    #[test]
    fn s3_table_passes_axioms() {
        let g = s3();
        assert_eq!(g.order(), 6);
        let again = Group::from_table(g.table_rows(), None).unwrap();
        assert_eq!(again, g);
        assert_eq!(g.center().len(), 1);
        let t01 = g.find("(0 1)").unwrap();
        let t12 = g.find("(1 2)").unwrap();
        assert_eq!(g.element_order(g.comm(t01, t12)), 3);
    }

    #[test]
    fn identity_is_moved_to_zero() {
        // C2 with the identity stored at index 1.
        let g = Group::from_table(
            vec![vec![1, 0], vec![0, 1]],
            Some(vec!["a".into(), "e".into()]),
        )
        .unwrap();
        assert_eq!(g.label(0), "e");
        assert_eq!(g.mul(1, 1), 0);
    }

    #[test]
    fn rejects_malformed_tables() {
        assert_eq!(Group::from_table(vec![], None), Err(GroupError::Empty));
        assert!(matches!(
            Group::from_table(vec![vec![0, 1], vec![1]], None),
            Err(GroupError::BadShape { row: 1, .. })
        ));
        assert!(matches!(
            Group::from_table(vec![vec![0, 2], vec![1, 0]], None),
            Err(GroupError::EntryOutOfRange { row: 0, col: 1, .. })
        ));
        assert_eq!(
            Group::from_table(vec![vec![0, 1], vec![0, 1]], None),
            Err(GroupError::NotLatinSquare {
                axis: Axis::Column,
                line: 0,
                value: 0
            })
        );
        assert_eq!(
            Group::from_table(vec![vec![1, 0], vec![1, 0]], None),
            Err(GroupError::NotLatinSquare {
                axis: Axis::Column,
                line: 0,
                value: 1
            })
        );
        assert_eq!(
            Group::from_table(vec![vec![0, 0], vec![1, 0]], None),
            Err(GroupError::NotLatinSquare {
                axis: Axis::Row,
                line: 0,
                value: 0
            })
        );
    }

    #[test]
    fn latin_square_without_identity() {
        // x*y = -x-y mod 3 is a Latin square with no identity.
        let table = (0..3)
            .map(|a| (0..3).map(|b| (6 - a - b) % 3).collect())
            .collect();
        assert_eq!(Group::from_table(table, None), Err(GroupError::NoIdentity));
    }

    #[test]
    fn non_associative_loop_is_rejected() {
        // The smallest non-associative loop has order 5.
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            Group::from_table(table, None),
            Err(GroupError::NotAssociative { .. })
        ));
    }

    #[test]
    fn light_test_catches_large_non_associative_loop() {
        // Order-5 loop times C60: order 300, beyond the exhaustive limit.
        let loop5 = [vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0]];
        let m = 60;
        let n = 5 * m;
        let table: Vec<Vec<usize>> = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| loop5[x / m][y / m] * m + (x % m + y % m) % m)
                    .collect()
            })
            .collect();
        assert!(matches!(
            Group::from_table(table, None),
            Err(GroupError::NotAssociative { .. })
        ));
        let big = cyclic(300);
        assert_eq!(big.exponent(), 300);
    }

    #[test]
    fn permutation_closure() {
        let c2 = Group::from_permutations(2, &[vec![1, 0]], DEFAULT_ORDER_LIMIT).unwrap();
        assert_eq!(c2.order(), 2);
        let d8 = d8_perm();
        assert_eq!(d8.order(), 8);
        let r = d8.find("(0 1 2 3)").unwrap();
        let s = d8.find("(0 2)").unwrap();
        assert_eq!(d8.element_order(r), 4);
        assert_eq!(d8.element_order(s), 2);
        assert_eq!(d8.mul(d8.mul(s, r), s), d8.inv(r));
        assert_eq!(d8.conj(r, s), d8.pow(r, 3));
    }

    #[test]
    fn permutation_errors() {
        assert_eq!(
            Group::from_permutations(3, &[vec![0, 0, 1]], 10),
            Err(GroupError::NotAPermutation {
                index: 0,
                degree: 3
            })
        );
        assert_eq!(
            Group::from_permutations(3, &[vec![0, 1]], 10),
            Err(GroupError::NotAPermutation {
                index: 0,
                degree: 3
            })
        );
        // S5 has order 120.
        assert_eq!(
            Group::from_permutations(5, &[vec![1, 0, 2, 3, 4], vec![1, 2, 3, 4, 0]], 100),
            Err(GroupError::OrderLimitExceeded { limit: 100 })
        );
    }

    #[test]
    fn orders_exponent_center() {
        let c6 = cyclic(6);
        assert_eq!(c6.element_order(1), 6);
        assert_eq!(c6.element_order(0), 1);
        let c2 = cyclic(2);
        let v4 = c2.direct_product(&c2);
        assert_eq!(v4.exponent(), 2);
        assert!(v4.whole().is_elementary_abelian_2(&v4));
        let d8 = d8_perm();
        assert_eq!(d8.center().len(), 2);
        assert_eq!(s3().center().len(), 1);
        let s4 = Group::from_permutations(4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]], 100).unwrap();
        assert_eq!(s4.exponent(), 12);
    }

    #[test]
    fn generated_subgroups() {
        let d8 = d8_perm();
        assert_eq!(d8.generated_subgroup(&[]).elements(), &[0]);
        let involutions: Vec<usize> = d8.involution_set();
        assert_eq!(involutions.len(), 6);
        assert_eq!(d8.generated_subgroup(&involutions).len(), 8);
        let r = d8.find("(0 1 2 3)").unwrap();
        let rot = d8.generated_subgroup(&[r]);
        assert_eq!(rot.index_in(&d8), 2);
        assert!(rot.is_normal(&d8));
        assert!(rot.is_abelian(&d8));
        assert!(!rot.is_elementary_abelian_2(&d8));
    }

    #[test]
    fn subgroup_recognition() {
        let d8 = d8_perm();
        assert!(d8.subgroup(&[0]).is_some());
        assert!(d8.subgroup(&[1, 2]).is_none());
        let r = d8.find("(0 1 2 3)").unwrap();
        let r2 = d8.square(r);
        assert!(d8.subgroup(&[r2, 0]).is_some());
        assert!(d8.subgroup(&[0, r]).is_none());
    }

    #[test]
    fn products_and_quotients() {
        let c4 = cyclic(4);
        let c2 = cyclic(2);
        let trivial = cyclic(1);
        assert_eq!(trivial.direct_product(&c4), c4);
        let p = c4.direct_product(&c2);
        assert_eq!(p.order(), 8);
        assert_eq!(p.exponent(), 4);
        // (c^2, 1) sits at index 2 * |C2| + 0
        let q = p.quotient(&p.generated_subgroup(&[4])).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.exponent(), 2);
        let d8 = d8_perm();
        let s = d8.find("(0 2)").unwrap();
        assert!(matches!(
            d8.quotient(&d8.generated_subgroup(&[s])),
            Err(GroupError::NotNormal(_))
        ));
    }
}
