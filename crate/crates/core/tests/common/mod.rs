//! Independent oracles. Nothing here calls the library's ring, bracket or
//! enumeration code; only `Group::mul`, `Group::inv` and the table itself.

#![allow(dead_code)]

use lie_metabelian::{Group, RingElement};
use num_traits::ToPrimitive;

pub type Dense = Vec<i64>;

pub fn basis(n: usize, g: usize) -> Dense {
    let mut v = vec![0; n];
    v[g] = 1;
    v
}

pub fn dense(a: &RingElement<'_>) -> Dense {
    let mut v = vec![0; a.group().order()];
    for (g, c) in a.terms() {
        v[*g] = c.to_i64().expect("small coefficient");
    }
    v
}

pub fn add(a: &[i64], b: &[i64]) -> Dense {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[i64], b: &[i64]) -> Dense {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(k: i64, a: &[i64]) -> Dense {
    a.iter().map(|x| k * x).collect()
}

/// Plain double loop over the Cayley table.
pub fn mul(group: &Group, a: &[i64], b: &[i64]) -> Dense {
    let n = group.order();
    let mut out = vec![0; n];
    for g in 0..n {
        if a[g] == 0 {
            continue;
        }
        for h in 0..n {
            out[group.mul(g, h)] += a[g] * b[h];
        }
    }
    out
}

pub fn bracket(group: &Group, a: &[i64], b: &[i64]) -> Dense {
    sub(&mul(group, a, b), &mul(group, b, a))
}

pub fn star(group: &Group, a: &[i64]) -> Dense {
    let mut out = vec![0; a.len()];
    for (g, &c) in a.iter().enumerate() {
        out[group.inv(g)] += c;
    }
    out
}

pub fn is_zero(a: &[i64]) -> bool {
    a.iter().all(|&c| c == 0)
}

/// `g` for `g² = 1`, else `g + g⁻¹` once per inverse pair.
pub fn plus_generators(group: &Group) -> Vec<Dense> {
    let n = group.order();
    (0..n)
        .filter_map(|g| {
            let gi = group.inv(g);
            if gi == g {
                Some(basis(n, g))
            } else if g < gi {
                Some(add(&basis(n, g), &basis(n, gi)))
            } else {
                None
            }
        })
        .collect()
}

pub fn check_generators(group: &Group) -> Vec<Dense> {
    let n = group.order();
    (0..n)
        .filter(|&g| g < group.inv(g))
        .map(|g| sub(&basis(n, g), &basis(n, group.inv(g))))
        .collect()
}

pub fn all_commute(group: &Group, xs: &[Dense]) -> bool {
    xs.iter()
        .all(|a| xs.iter().all(|b| is_zero(&bracket(group, a, b))))
}

/// Every bracket of every ordered pair, no deduplication, then every pair
/// of those.
pub fn naive_lie_metabelian(group: &Group) -> bool {
    let gens = plus_generators(group);
    let brackets: Vec<Dense> = gens
        .iter()
        .flat_map(|a| gens.iter().map(move |b| (a, b)))
        .map(|(a, b)| bracket(group, a, b))
        .collect();
    all_commute(group, &brackets)
}

/// All index-2 subgroups by scanning every half-size subset containing the
/// identity. Exponential; only for small groups.
pub fn subset_scan_index_two(group: &Group) -> Vec<Vec<usize>> {
    let n = group.order();
    if !n.is_multiple_of(2) || n < 2 {
        return Vec::new();
    }
    let others = n - 1;
    let mut found = Vec::new();
    for mask in 0u64..(1u64 << others) {
        if mask.count_ones() as usize != n / 2 - 1 {
            continue;
        }
        let mut set = vec![false; n];
        set[0] = true;
        for i in 0..others {
            if mask >> i & 1 == 1 {
                set[i + 1] = true;
            }
        }
        let closed = (0..n).all(|a| !set[a] || (0..n).all(|b| !set[b] || set[group.mul(a, b)]));
        if closed {
            found.push((0..n).filter(|&g| set[g]).collect());
        }
    }
    found.sort();
    found
}

pub fn naive_center(group: &Group) -> Vec<usize> {
    let n = group.order();
    (0..n)
        .filter(|&g| (0..n).all(|h| group.mul(g, h) == group.mul(h, g)))
        .collect()
}
