//! Independent brute-force oracles used to cross-check the main algorithms.
//!
//! Nothing here shares search machinery with the production code paths: the
//! subgroup oracle enumerates raw subsets, and the isomorphism oracle
//! backtracks over element-by-element bijections with no generating sets,
//! fingerprints, or closure tricks. Deliberately slow, only sane for orders
//! up to about 12.

use crate::group::{Elem, FiniteGroup};

/// Upper bound beyond which subset enumeration stops being a good idea.
pub const ORACLE_ORDER_LIMIT: usize = 16;

/// Every subgroup of `g`, found by testing all `2^(n-1)` subsets containing
/// the identity for closure and inverses. Sorted member lists in sorted
/// order.
pub fn subgroups_by_subset_enumeration(g: &FiniteGroup) -> Vec<Vec<Elem>> {
    let n = g.order();
    assert!(n <= ORACLE_ORDER_LIMIT, "oracle restricted to tiny groups");
    let mut out = Vec::new();
    // Bit i+1 of the mask decides membership of element i+1; the identity is
    // always in.
    for mask in 0..(1u32 << (n - 1)) {
        let members: Vec<Elem> = std::iter::once(0)
            .chain((1..n).filter(|&e| mask & (1 << (e - 1)) != 0))
            .collect();
        let is_sub = members.iter().all(|&a| {
            members.contains(&g.inverse(a))
                && members.iter().all(|&b| members.contains(&g.mul(a, b)))
        });
        if is_sub {
            out.push(members);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Every normal subgroup of `g`, by filtering the subset-enumeration
/// subgroups through the raw conjugation test.
pub fn normal_subgroups_by_subset_enumeration(g: &FiniteGroup) -> Vec<Vec<Elem>> {
    subgroups_by_subset_enumeration(g)
        .into_iter()
        .filter(|members| {
            members.iter().all(|&m| {
                g.elements()
                    .all(|a| members.contains(&g.conjugate(a, m)))
            })
        })
        .collect()
}

/// Whether `g` and `h` are isomorphic, decided by backtracking over
/// identity-fixing bijections one element at a time, checking the
/// multiplication law incrementally on every fully-assigned pair.
pub fn isomorphic_by_bijection_search(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    let n = g.order();
    if n != h.order() {
        return false;
    }
    assert!(n <= ORACLE_ORDER_LIMIT, "oracle restricted to tiny groups");
    let mut map: Vec<Option<Elem>> = vec![None; n];
    let mut used = vec![false; n];
    map[0] = Some(0);
    used[0] = true;
    assign(g, h, 1, &mut map, &mut used)
}

fn assign(
    g: &FiniteGroup,
    h: &FiniteGroup,
    k: usize,
    map: &mut Vec<Option<Elem>>,
    used: &mut Vec<bool>,
) -> bool {
    let n = g.order();
    if k == n {
        return true;
    }
    'candidates: for cand in 0..n {
        if used[cand] {
            continue;
        }
        map[k] = Some(cand);
        used[cand] = true;
        // Check every product involving only assigned elements.
        for a in 0..=k {
            for b in 0..=k {
                let (Some(fa), Some(fb)) = (map[a], map[b]) else {
                    continue;
                };
                if let Some(fab) = map[g.mul(a, b)] {
                    if fab != h.mul(fa, fb) {
                        used[cand] = false;
                        map[k] = None;
                        continue 'candidates;
                    }
                }
            }
        }
        if assign(g, h, k + 1, map, used) {
            return true;
        }
        used[cand] = false;
        map[k] = None;
    }
    false
}

/// Indecomposability by exhaustive subset enumeration: `g` is decomposable
/// exactly when two nontrivial normal subgroups intersect trivially and have
/// complementary orders. The trivial group counts as not decomposable.
pub fn indecomposable_by_subset_enumeration(g: &FiniteGroup) -> bool {
    if g.order() == 1 {
        return true;
    }
    let normals = normal_subgroups_by_subset_enumeration(g);
    for (i, n) in normals.iter().enumerate() {
        if n.len() == 1 || n.len() == g.order() {
            continue;
        }
        for k in normals.iter().skip(i) {
            if k.len() == 1 || k.len() == g.order() {
                continue;
            }
            if n.len() * k.len() == g.order()
                && n.iter().filter(|e| k.contains(e)).count() == 1
            {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{named_group, NamedGroupSpec};

    #[test]
    fn c6_subgroup_orders() {
        let g = named_group(&NamedGroupSpec::Cyclic(6)).unwrap();
        let orders: Vec<usize> = subgroups_by_subset_enumeration(&g)
            .iter()
            .map(|s| s.len())
            .collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
    }

    #[test]
    fn s3_has_one_proper_normal_subgroup() {
        let g = named_group(&NamedGroupSpec::Symmetric(3)).unwrap();
        let subs = subgroups_by_subset_enumeration(&g);
        assert_eq!(subs.len(), 6); // 1, three C2s, A3, S3
        let normals = normal_subgroups_by_subset_enumeration(&g);
        assert_eq!(normals.len(), 3); // 1, A3, S3
    }

    #[test]
    fn bijection_oracle_agrees_on_classics() {
        let c4 = named_group(&NamedGroupSpec::Cyclic(4)).unwrap();
        let v4 = named_group(&NamedGroupSpec::ElementaryAbelian(2, 2)).unwrap();
        let c6 = named_group(&NamedGroupSpec::Cyclic(6)).unwrap();
        let p = named_group(&NamedGroupSpec::Cyclic(2))
            .unwrap()
            .direct_product(&named_group(&NamedGroupSpec::Cyclic(3)).unwrap())
            .unwrap()
            .group;
        assert!(!isomorphic_by_bijection_search(&c4, &v4));
        assert!(isomorphic_by_bijection_search(&c6, &p));
    }

    #[test]
    fn indecomposability_oracle_basics() {
        let q8 = named_group(&NamedGroupSpec::Quaternion(8)).unwrap();
        let c6 = named_group(&NamedGroupSpec::Cyclic(6)).unwrap();
        assert!(indecomposable_by_subset_enumeration(&q8));
        assert!(!indecomposable_by_subset_enumeration(&c6));
    }
}
