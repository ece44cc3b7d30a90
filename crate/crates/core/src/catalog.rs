//! Named groups built from explicit recipes.
//!
//! Nothing is looked up in an external database: every entry is a metacyclic
//! table, a permutation closure, a direct product, or a central quotient, and
//! each table passes the same validation as an input file.

use crate::group::{Group, DEFAULT_ORDER_LIMIT};

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub group: Group,
    pub construction: String,
}

struct Recipe {
    name: &'static str,
    order: usize,
    construction: &'static str,
    build: fn() -> Group,
}

macro_rules! recipe {
    ($name:expr, $order:expr, $construction:expr, $build:expr) => {
        Recipe {
            name: $name,
            order: $order,
            construction: $construction,
            build: $build,
        }
    };
}

fn recipes() -> Vec<Recipe> {
    let mut list = vec![
        recipe!("C1", 1, "trivial group", || cyclic(1)),
        recipe!("C2", 2, "cyclic <c | c^2>", || cyclic(2)),
        recipe!("C3", 3, "cyclic <c | c^3>", || cyclic(3)),
        recipe!("C4", 4, "cyclic <c | c^4>", || cyclic(4)),
        recipe!("C2^2", 4, "elementary abelian, rank 2", || {
            elementary_abelian(2)
        }),
        recipe!("C5", 5, "cyclic <c | c^5>", || cyclic(5)),
        recipe!("C6", 6, "cyclic <c | c^6>", || cyclic(6)),
        recipe!("S3", 6, "permutation closure of (0 1), (0 1 2)", s3),
        recipe!("C7", 7, "cyclic <c | c^7>", || cyclic(7)),
        recipe!("C8", 8, "cyclic <c | c^8>", || cyclic(8)),
        recipe!("C2^3", 8, "elementary abelian, rank 3", || {
            elementary_abelian(3)
        }),
        recipe!("C4xC2", 8, "direct product C4 x C2", || {
            product(&[&cyclic(4), &cyclic(2)])
        }),
        recipe!("D8", 8, "<r, s | r^4, s^2, r^s = r^-1>", || dihedral(8)),
        recipe!(
            "Q8",
            8,
            "<r, s | r^4, s^2 = r^2, r^s = r^-1>, r = i, s = j",
            || { quaternion(8) }
        ),
        recipe!("C9", 9, "cyclic <c | c^9>", || cyclic(9)),
        recipe!("C10", 10, "cyclic <c | c^10>", || cyclic(10)),
        recipe!("D10", 10, "<r, s | r^5, s^2, r^s = r^-1>", || dihedral(10)),
        recipe!("C11", 11, "cyclic <c | c^11>", || cyclic(11)),
        recipe!("C12", 12, "cyclic <c | c^12>", || cyclic(12)),
        recipe!("A4", 12, "permutation closure of (0 1 2), (0 1)(2 3)", a4),
        recipe!("D12", 12, "<r, s | r^6, s^2, r^s = r^-1>", || dihedral(12)),
        recipe!("Q12", 12, "<r, s | r^6, s^2 = r^3, r^s = r^-1>", || {
            quaternion(12)
        }),
        recipe!("C13", 13, "cyclic <c | c^13>", || cyclic(13)),
        recipe!("C14", 14, "cyclic <c | c^14>", || cyclic(14)),
        recipe!("C15", 15, "cyclic <c | c^15>", || cyclic(15)),
        recipe!("C16", 16, "cyclic <c | c^16>", || cyclic(16)),
        recipe!("C2^4", 16, "elementary abelian, rank 4", || {
            elementary_abelian(4)
        }),
        recipe!("C4xC4", 16, "<a, b | a^4, b^4, a^b = a>", || {
            metacyclic(4, 4, 0, 1, ("a", "b"))
        }),
        recipe!("D16", 16, "<r, s | r^8, s^2, r^s = r^-1>", || dihedral(16)),
        recipe!("Q16", 16, "<r, s | r^8, s^2 = r^4, r^s = r^-1>", || {
            quaternion(16)
        }),
        recipe!("SD16", 16, "<r, s | r^8, s^2, r^s = r^3>", semidihedral16),
        recipe!("M16", 16, "<r, s | r^8, s^2, r^s = r^5>", modular16),
        recipe!("C4:C4", 16, "<a, b | a^4, b^4, a^b = a^-1>", c4_semi_c4),
        recipe!("D8xC2", 16, "direct product D8 x C2", || {
            product(&[&dihedral(8), &cyclic(2)])
        }),
        recipe!("Q8xC2", 16, "direct product Q8 x C2", || {
            product(&[&quaternion(8), &cyclic(2)])
        }),
        recipe!(
            "D8oC4",
            16,
            "central product: D8 x C4 modulo <(r^2, c^2)>",
            central_product_d8_c4
        ),
        recipe!("D24", 24, "<r, s | r^12, s^2, r^s = r^-1>", || dihedral(24)),
        recipe!("Q24", 24, "<r, s | r^12, s^2 = r^6, r^s = r^-1>", || {
            quaternion(24)
        }),
        recipe!("S4", 24, "permutation closure of (0 1), (0 1 2 3)", s4),
        recipe!("A4xC2", 24, "direct product A4 x C2", || product(&[
            &a4(),
            &cyclic(2)
        ])),
        recipe!("Q8xC3", 24, "direct product Q8 x C3", || {
            product(&[&quaternion(8), &cyclic(3)])
        }),
        recipe!("C2^5", 32, "elementary abelian, rank 5", || {
            elementary_abelian(5)
        }),
        recipe!("D8xC2xC2", 32, "direct product D8 x C2 x C2", || {
            product(&[&dihedral(8), &cyclic(2), &cyclic(2)])
        }),
        recipe!("D8xC4", 32, "direct product D8 x C4", || {
            product(&[&dihedral(8), &cyclic(4)])
        }),
        recipe!("D16xC2", 32, "direct product D16 x C2", || {
            product(&[&dihedral(16), &cyclic(2)])
        }),
        recipe!("Q8xC2xC2", 32, "direct product Q8 x C2 x C2", || {
            product(&[&quaternion(8), &cyclic(2), &cyclic(2)])
        }),
        recipe!("Q8xC4", 32, "direct product Q8 x C4", || {
            product(&[&quaternion(8), &cyclic(4)])
        }),
        recipe!("Q16xC2", 32, "direct product Q16 x C2", || {
            product(&[&quaternion(16), &cyclic(2)])
        }),
        recipe!("SD16xC2", 32, "direct product SD16 x C2", || {
            product(&[&semidihedral16(), &cyclic(2)])
        }),
    ];
    list.sort_by_key(|r| r.order);
    list
}

/// All catalog groups of order at most `max_order`, ascending by order.
pub fn catalog(max_order: usize) -> Vec<CatalogEntry> {
    recipes()
        .into_iter()
        .filter(|r| r.order <= max_order)
        .map(|r| CatalogEntry {
            name: r.name.to_string(),
            group: (r.build)(),
            construction: r.construction.to_string(),
        })
        .collect()
}

/// Names of every catalog entry, in catalog order.
pub fn names() -> Vec<&'static str> {
    recipes().iter().map(|r| r.name).collect()
}

pub fn by_name(name: &str) -> Option<CatalogEntry> {
    recipes()
        .into_iter()
        .find(|r| r.name.eq_ignore_ascii_case(name))
        .map(|r| CatalogEntry {
            name: r.name.to_string(),
            group: (r.build)(),
            construction: r.construction.to_string(),
        })
}

fn power_label(base: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

/// `C_n` with generator `c`.
pub fn cyclic(n: usize) -> Group {
    let table = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    let labels = (0..n)
        .map(|k| {
            if k == 0 {
                "1".to_string()
            } else {
                power_label("c", k)
            }
        })
        .collect();
    Group::from_table(table, Some(labels)).expect("cyclic table is a group")
}

/// `(C2)^k` on bitmasks; generators are labelled `a`, `b`, `c`, ...
pub fn elementary_abelian(k: usize) -> Group {
    let n = 1usize << k;
    let table = (0..n).map(|a| (0..n).map(|b| a ^ b).collect()).collect();
    let labels = (0..n)
        .map(|mask| {
            if mask == 0 {
                "1".to_string()
            } else {
                (0..k)
                    .filter(|bit| mask >> bit & 1 == 1)
                    .map(|bit| char::from(b'a' + bit as u8))
                    .collect()
            }
        })
        .collect();
    Group::from_table(table, Some(labels)).expect("elementary abelian table is a group")
}

/// `⟨r, s | r^n = 1, s^m = r^t, s⁻¹ r s = r^a⟩`, elements `r^i s^j` stored
/// at index `j·n + i`.
///
/// Requires `gcd(a, n) = 1`, `a^m ≡ 1` and `t·a ≡ t (mod n)`; the resulting
/// table is validated like any other input.
pub fn metacyclic(n: usize, m: usize, t: usize, a: usize, names: (&str, &str)) -> Group {
    // s r^k = r^{k b} s with b = a⁻¹ mod n.
    let b = (1..=n.max(1))
        .find(|&b| (a * b) % n == 1 % n)
        .expect("a is a unit mod n");
    let b_pow: Vec<usize> = (0..m)
        .scan(1 % n.max(1), |acc, _| {
            let cur = *acc;
            *acc = (*acc * b) % n;
            Some(cur)
        })
        .collect();
    let order = n * m;
    let table = (0..order)
        .map(|x| {
            let (i, j) = (x % n, x / n);
            (0..order)
                .map(|y| {
                    let (k, l) = (y % n, y / n);
                    let mut r = i + k * b_pow[j];
                    let mut s = j + l;
                    if s >= m {
                        s -= m;
                        r += t;
                    }
                    s * n + r % n
                })
                .collect()
        })
        .collect();
    let labels = (0..order)
        .map(|x| {
            let label = power_label(names.0, x % n) + &power_label(names.1, x / n);
            if label.is_empty() {
                "1".to_string()
            } else {
                label
            }
        })
        .collect();
    Group::from_table(table, Some(labels)).expect("metacyclic recipe is consistent")
}

/// Dihedral group of the given order (`order = 2n`).
pub fn dihedral(order: usize) -> Group {
    let n = order / 2;
    metacyclic(n, 2, 0, n - 1, ("r", "s"))
}

/// Generalised quaternion (dicyclic) group of the given order, `order = 4k`.
/// Order 8 gets the familiar labels `1, i, -1, -i, j, k, -j, -k`.
pub fn quaternion(order: usize) -> Group {
    let n = order / 2;
    let group = metacyclic(n, 2, n / 2, n - 1, ("r", "s"));
    if order == 8 {
        let labels = ["1", "i", "-1", "-i", "j", "k", "-j", "-k"];
        group
            .with_labels(labels.iter().map(|s| s.to_string()).collect())
            .expect("eight labels")
    } else {
        group
    }
}

pub fn semidihedral16() -> Group {
    metacyclic(8, 2, 0, 3, ("r", "s"))
}

pub fn modular16() -> Group {
    metacyclic(8, 2, 0, 5, ("r", "s"))
}

pub fn c4_semi_c4() -> Group {
    metacyclic(4, 4, 0, 3, ("a", "b"))
}

pub fn s3() -> Group {
    Group::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]], DEFAULT_ORDER_LIMIT)
        .expect("S3 closure")
}

pub fn s4() -> Group {
    Group::from_permutations(
        4,
        &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]],
        DEFAULT_ORDER_LIMIT,
    )
    .expect("S4 closure")
}

pub fn a4() -> Group {
    Group::from_permutations(
        4,
        &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]],
        DEFAULT_ORDER_LIMIT,
    )
    .expect("A4 closure")
}

/// Iterated direct product with flat tuple labels `(x,y,z)`.
pub fn product(parts: &[&Group]) -> Group {
    let (first, rest) = parts.split_first().expect("at least one factor");
    let mut group = (*first).clone();
    let mut labels: Vec<Vec<String>> = first.labels().iter().map(|l| vec![l.clone()]).collect();
    for part in rest {
        group = group.direct_product(part);
        labels = labels
            .iter()
            .flat_map(|prefix| {
                part.labels().iter().map(move |l| {
                    let mut v = prefix.clone();
                    v.push(l.clone());
                    v
                })
            })
            .collect();
    }
    if parts.len() == 1 {
        return group;
    }
    let labels = labels
        .into_iter()
        .map(|parts| format!("({})", parts.join(",")))
        .collect();
    group.with_labels(labels).expect("one label per element")
}

/// `D8 ∘ C4`: the direct product with `r²` and `c²` identified.
pub fn central_product_d8_c4() -> Group {
    let d8 = dihedral(8);
    let c4 = cyclic(4);
    let p = product(&[&d8, &c4]);
    let r2 = d8.find("r^2").expect("r^2");
    let c2 = c4.find("c^2").expect("c^2");
    let z = p.generated_subgroup(&[r2 * c4.order() + c2]);
    p.quotient(&z).expect("central subgroup is normal")
}
