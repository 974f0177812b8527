//! Named group constructors and the desk-scale test corpus.
//!
//! Element orderings are documented and deterministic:
//! - cyclic n: residues 0..n, addition mod n
//! - dihedral n (order 2n): rotations `r^i` first, then reflections `s r^i`
//! - quaternion 8: `1, i, j, k, -1, -i, -j, -k`
//! - symmetric n: permutations of 0..n in lexicographic order
//! - elementary abelian p^k: base-p digit vectors, digitwise addition
//! - products: row-major over the component indexings

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// A named group recipe. The inline CLI syntax is `name:p1:p2`, with product
/// components separated by `*`, e.g. `product:cyclic:2*symmetric:3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedGroupSpec {
    Trivial,
    Cyclic(usize),
    Dihedral(usize),
    Quaternion(usize),
    Symmetric(usize),
    ElementaryAbelian(usize, usize),
    DirectProduct(Vec<NamedGroupSpec>),
}

impl NamedGroupSpec {
    /// Parses the inline `name:p1:p2` syntax. Product components are split on
    /// `*` and may not themselves be products.
    pub fn parse(s: &str) -> Result<Self> {
        let (name, rest) = match s.split_once(':') {
            Some((n, r)) => (n, Some(r)),
            None => (s, None),
        };
        let int_params = |rest: Option<&str>| -> Result<Vec<usize>> {
            match rest {
                None => Ok(vec![]),
                Some(r) => r
                    .split(':')
                    .map(|p| {
                        p.parse::<usize>()
                            .map_err(|_| Error::BadParams(format!("not an integer: {p}")))
                    })
                    .collect(),
            }
        };
        let one = |ps: Vec<usize>| -> Result<usize> {
            if ps.len() == 1 {
                Ok(ps[0])
            } else {
                Err(Error::BadParams(format!("expected one parameter in {s}")))
            }
        };
        match name {
            "trivial" => Ok(NamedGroupSpec::Trivial),
            "cyclic" => Ok(NamedGroupSpec::Cyclic(one(int_params(rest)?)?)),
            "dihedral" => Ok(NamedGroupSpec::Dihedral(one(int_params(rest)?)?)),
            "quaternion" => Ok(NamedGroupSpec::Quaternion(one(int_params(rest)?)?)),
            "symmetric" => Ok(NamedGroupSpec::Symmetric(one(int_params(rest)?)?)),
            "elementary_abelian" => {
                let ps = int_params(rest)?;
                if ps.len() != 2 {
                    return Err(Error::BadParams(format!(
                        "elementary_abelian takes p:k, got {s}"
                    )));
                }
                Ok(NamedGroupSpec::ElementaryAbelian(ps[0], ps[1]))
            }
            "product" => {
                let body = rest.ok_or_else(|| {
                    Error::BadParams("product needs components, e.g. product:cyclic:2*cyclic:3".into())
                })?;
                let comps: Result<Vec<NamedGroupSpec>> =
                    body.split('*').map(NamedGroupSpec::parse).collect();
                Ok(NamedGroupSpec::DirectProduct(comps?))
            }
            other => Err(Error::UnknownName(other.to_string())),
        }
    }

    pub fn display_name(&self) -> String {
        match self {
            NamedGroupSpec::Trivial => "1".into(),
            NamedGroupSpec::Cyclic(n) => format!("C{n}"),
            NamedGroupSpec::Dihedral(n) => format!("D{n}"),
            NamedGroupSpec::Quaternion(n) => format!("Q{n}"),
            NamedGroupSpec::Symmetric(n) => format!("S{n}"),
            NamedGroupSpec::ElementaryAbelian(p, k) => format!("E{p}^{k}"),
            NamedGroupSpec::DirectProduct(cs) => cs
                .iter()
                .map(|c| c.display_name())
                .collect::<Vec<_>>()
                .join(" x "),
        }
    }
}

/// Builds the group a spec names.
pub fn named_group(spec: &NamedGroupSpec) -> Result<FiniteGroup> {
    let g = match spec {
        NamedGroupSpec::Trivial => FiniteGroup::from_table_unchecked(1, vec![vec![0]], None),
        NamedGroupSpec::Cyclic(n) => {
            if *n == 0 {
                return Err(Error::BadParams("cyclic needs n >= 1".into()));
            }
            let table = (0..*n)
                .map(|a| (0..*n).map(|b| (a + b) % n).collect())
                .collect();
            FiniteGroup::from_table_unchecked(*n, table, None)
        }
        NamedGroupSpec::Dihedral(n) => {
            if *n == 0 {
                return Err(Error::BadParams("dihedral needs n >= 1".into()));
            }
            let n = *n;
            // index k*n + i encodes s^k r^i
            let idx = |k: usize, i: usize| k * n + i;
            let mut table = vec![vec![0usize; 2 * n]; 2 * n];
            for k1 in 0..2 {
                for i1 in 0..n {
                    for k2 in 0..2 {
                        for i2 in 0..n {
                            let i = if k2 == 0 {
                                (i1 + i2) % n
                            } else {
                                (n + i2 - i1) % n
                            };
                            table[idx(k1, i1)][idx(k2, i2)] = idx(k1 ^ k2, i);
                        }
                    }
                }
            }
            FiniteGroup::from_table_unchecked(2 * n, table, None)
        }
        NamedGroupSpec::Quaternion(n) => {
            if *n != 8 {
                return Err(Error::BadParams("only quaternion:8 is supported".into()));
            }
            // 0..4 = 1,i,j,k ; 4..8 = -1,-i,-j,-k
            // basis table: (value index, sign flip)
            let basis = |a: usize, b: usize| -> (usize, bool) {
                match (a, b) {
                    (0, x) => (x, false),
                    (x, 0) => (x, false),
                    (1, 1) | (2, 2) | (3, 3) => (0, true),
                    (1, 2) => (3, false),
                    (2, 1) => (3, true),
                    (2, 3) => (1, false),
                    (3, 2) => (1, true),
                    (3, 1) => (2, false),
                    (1, 3) => (2, true),
                    _ => unreachable!(),
                }
            };
            let mut table = vec![vec![0usize; 8]; 8];
            for a in 0..8 {
                for b in 0..8 {
                    let (v, flip) = basis(a % 4, b % 4);
                    let neg = (a >= 4) ^ (b >= 4) ^ flip;
                    table[a][b] = if neg { v + 4 } else { v };
                }
            }
            FiniteGroup::from_table_unchecked(8, table, None)
        }
        NamedGroupSpec::Symmetric(n) => {
            if *n == 0 || *n > 8 {
                return Err(Error::BadParams("symmetric needs 1 <= n <= 8".into()));
            }
            let perms = lex_permutations(*n);
            let index: std::collections::HashMap<Vec<usize>, usize> = perms
                .iter()
                .enumerate()
                .map(|(i, p)| (p.clone(), i))
                .collect();
            let order = perms.len();
            if order > crate::group::DEFAULT_ORDER_BUDGET {
                return Err(Error::OrderBudgetExceeded {
                    got: order,
                    budget: crate::group::DEFAULT_ORDER_BUDGET,
                });
            }
            let mut table = vec![vec![0usize; order]; order];
            for a in 0..order {
                for b in 0..order {
                    let prod: Vec<usize> = (0..*n).map(|x| perms[a][perms[b][x]]).collect();
                    table[a][b] = index[&prod];
                }
            }
            FiniteGroup::from_table_unchecked(order, table, None)
        }
        NamedGroupSpec::ElementaryAbelian(p, k) => {
            if *p < 2 || !is_prime(*p) {
                return Err(Error::BadParams(format!("{p} is not prime")));
            }
            let order = p.checked_pow(*k as u32).ok_or_else(|| {
                Error::BadParams("elementary abelian order overflow".into())
            })?;
            if order > crate::group::DEFAULT_ORDER_BUDGET {
                return Err(Error::OrderBudgetExceeded {
                    got: order,
                    budget: crate::group::DEFAULT_ORDER_BUDGET,
                });
            }
            let add = |a: usize, b: usize| -> usize {
                let (mut a, mut b, mut out, mut mult) = (a, b, 0usize, 1usize);
                for _ in 0..*k {
                    out += ((a + b) % p) * mult;
                    a /= p;
                    b /= p;
                    mult *= p;
                }
                out
            };
            let table = (0..order)
                .map(|a| (0..order).map(|b| add(a, b)).collect())
                .collect();
            FiniteGroup::from_table_unchecked(order, table, None)
        }
        NamedGroupSpec::DirectProduct(comps) => {
            if comps.is_empty() {
                return Err(Error::BadParams("product needs at least one component".into()));
            }
            let mut acc = named_group(&comps[0])?;
            for c in &comps[1..] {
                acc = acc.direct_product(&named_group(c)?)?.group;
            }
            acc
        }
    };
    Ok(g.with_label(spec.display_name()))
}

fn lex_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1])
        else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    out
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// The base named corpus up to `max_order`: cyclic, elementary abelian
/// (2-rank capped at `ea2_rank_cap`), dihedral, quaternion 8 and small
/// symmetric groups.
pub fn base_corpus_specs(max_order: usize, ea2_rank_cap: usize) -> Vec<NamedGroupSpec> {
    let mut specs = vec![NamedGroupSpec::Trivial];
    for n in 2..=max_order {
        specs.push(NamedGroupSpec::Cyclic(n));
    }
    for p in [2usize, 3, 5] {
        let mut k = 2;
        while p.pow(k as u32) <= max_order {
            if p != 2 || k <= ea2_rank_cap {
                specs.push(NamedGroupSpec::ElementaryAbelian(p, k));
            }
            k += 1;
        }
    }
    let mut n = 3;
    while 2 * n <= max_order {
        specs.push(NamedGroupSpec::Dihedral(n));
        n += 1;
    }
    if max_order >= 8 {
        specs.push(NamedGroupSpec::Quaternion(8));
    }
    if max_order >= 6 {
        specs.push(NamedGroupSpec::Symmetric(3));
    }
    if max_order >= 24 {
        specs.push(NamedGroupSpec::Symmetric(4));
    }
    specs
}

/// Base corpus plus all pairwise direct products whose order stays within
/// `max_order`. Elementary abelian 2-groups are kept below the combined rank
/// cap so exhaustive decomposition sweeps stay tractable.
pub fn corpus_with_products(max_order: usize, ea2_rank_cap: usize) -> Vec<FiniteGroup> {
    let specs = base_corpus_specs(max_order, ea2_rank_cap);
    let mut groups: Vec<FiniteGroup> = specs
        .iter()
        .map(|s| named_group(s).expect("corpus specs are valid"))
        .collect();
    let base_len = specs.len();
    for i in 0..base_len {
        for j in i..base_len {
            let (a, b) = (&specs[i], &specs[j]);
            if matches!(a, NamedGroupSpec::Trivial) || matches!(b, NamedGroupSpec::Trivial) {
                continue;
            }
            if ea2_rank(a) + ea2_rank(b) > ea2_rank_cap {
                continue;
            }
            let (ga, gb) = (&groups[i].clone(), &groups[j].clone());
            if ga.order() * gb.order() <= max_order {
                let spec = NamedGroupSpec::DirectProduct(vec![a.clone(), b.clone()]);
                let p = ga
                    .direct_product(gb)
                    .expect("within budget")
                    .group
                    .with_label(spec.display_name());
                groups.push(p);
            }
        }
    }
    groups
}

/// 2-rank contributed to an elementary abelian 2-part, used to cap exhaustive
/// decomposition sweeps (C2^k has combinatorially many decompositions).
fn ea2_rank(spec: &NamedGroupSpec) -> usize {
    match spec {
        NamedGroupSpec::Cyclic(2) => 1,
        NamedGroupSpec::ElementaryAbelian(2, k) => *k,
        _ => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_6_is_abelian_of_order_6() {
        let g = named_group(&NamedGroupSpec::Cyclic(6)).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_abelian());
    }

    #[test]
    fn dihedral_4_has_five_involutions() {
        let g = named_group(&NamedGroupSpec::Dihedral(4)).unwrap();
        assert_eq!(g.order(), 8);
        let invol = g.elements().filter(|&e| g.element_order(e) == 2).count();
        assert_eq!(invol, 5);
    }

    #[test]
    fn product_c2_s3_has_order_12() {
        let spec = NamedGroupSpec::parse("product:cyclic:2*symmetric:3").unwrap();
        let g = named_group(&spec).unwrap();
        assert_eq!(g.order(), 12);
    }

    #[test]
    fn quaternion_table_is_a_group() {
        let g = named_group(&NamedGroupSpec::Quaternion(8)).unwrap();
        // Re-validate through the checked constructor.
        FiniteGroup::from_table(8, g.table_rows()).unwrap();
        assert_eq!(g.element_order(1), 4);
        assert_eq!(g.element_order(4), 2);
    }

    #[test]
    fn symmetric_groups_have_factorial_order() {
        for n in 1..=5 {
            let g = named_group(&NamedGroupSpec::Symmetric(n)).unwrap();
            assert_eq!(g.order(), (1..=n).product::<usize>());
        }
    }

    #[test]
    fn symmetric_identity_is_index_zero() {
        let g = named_group(&NamedGroupSpec::Symmetric(4)).unwrap();
        assert_eq!(g.element_order(0), 1);
    }

    #[test]
    fn elementary_abelian_27() {
        let g = named_group(&NamedGroupSpec::ElementaryAbelian(3, 3)).unwrap();
        assert_eq!(g.order(), 27);
        assert!(g.elements().skip(1).all(|e| g.element_order(e) == 3));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            NamedGroupSpec::parse("frobnicate:3"),
            Err(Error::UnknownName(_))
        ));
        assert!(matches!(
            NamedGroupSpec::parse("cyclic:x"),
            Err(Error::BadParams(_))
        ));
        assert!(matches!(
            named_group(&NamedGroupSpec::Quaternion(16)),
            Err(Error::BadParams(_))
        ));
        assert!(matches!(
            named_group(&NamedGroupSpec::ElementaryAbelian(4, 2)),
            Err(Error::BadParams(_))
        ));
    }

    #[test]
    fn corpus_orders_within_bound() {
        for g in corpus_with_products(16, 4) {
            assert!(g.order() <= 16, "{g:?}");
        }
    }
}
