//! Isomorphism testing and canonical fingerprints.
//!
//! Fingerprints are sound: isomorphic groups always fingerprint equally, but
//! equal fingerprints never claim isomorphism on their own — only the
//! backtracking search in [`find_isomorphism`] does.
//!
//! ```
//! use grouplab::corpus::{named_group, NamedGroupSpec};
//! use grouplab::iso::{find_isomorphism, fingerprint, DEFAULT_SEARCH_BUDGET};
//!
//! let d3 = named_group(&NamedGroupSpec::Dihedral(3)).unwrap();
//! let s3 = named_group(&NamedGroupSpec::Symmetric(3)).unwrap();
//! let c6 = named_group(&NamedGroupSpec::Cyclic(6)).unwrap();
//!
//! // D3 and S3 are the same group in two presentations.
//! assert_eq!(fingerprint(&d3), fingerprint(&s3));
//! assert!(find_isomorphism(&d3, &s3, DEFAULT_SEARCH_BUDGET).unwrap().is_some());
//!
//! // C6 has the same order but a different element-order histogram.
//! assert_ne!(fingerprint(&c6), fingerprint(&s3));
//! ```

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup};
use crate::hom::{self, GroupHom};

/// Default node cap for the backtracking searches.
pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

/// Canonical invariant vector used to bucket isomorphism classes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IsoFingerprint {
    pub order: usize,
    /// element order -> number of elements of that order
    pub element_order_histogram: BTreeMap<usize, usize>,
    pub abelian: bool,
    pub center_order: usize,
    /// orders of G, [G,G], [[G,G],[G,G]], ... until the series stabilizes
    pub derived_series_orders: Vec<usize>,
    pub conjugacy_class_sizes: Vec<usize>,
}

/// Computes the invariant fingerprint of a group. Deterministic, and equal for
/// isomorphic inputs.
pub fn fingerprint(g: &FiniteGroup) -> IsoFingerprint {
    let mut hist = BTreeMap::new();
    for e in g.elements() {
        *hist.entry(g.element_order(e)).or_insert(0) += 1;
    }
    let mut derived_series_orders = vec![g.order()];
    let mut current = g.clone();
    loop {
        let derived = current.derived_subgroup_members();
        if derived.len() == *derived_series_orders.last().unwrap() {
            break;
        }
        derived_series_orders.push(derived.len());
        if derived.len() == 1 {
            break;
        }
        let sub = current
            .subgroup(derived)
            .expect("derived subgroup is a subgroup");
        current = sub.as_group().0;
    }
    let mut class_sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.len()).collect();
    class_sizes.sort_unstable();
    IsoFingerprint {
        order: g.order(),
        element_order_histogram: hist,
        abelian: g.is_abelian(),
        center_order: g.center_members().len(),
        derived_series_orders,
        conjugacy_class_sizes: class_sizes,
    }
}

/// Searches for an isomorphism `G -> H` by backtracking over images of a
/// minimal generating set of `G`, pruned by fingerprints and element orders.
/// Deterministic: returns the first witness in canonical order, or `None` when
/// the groups are not isomorphic. Exceeding `budget` search nodes is an error,
/// distinct from a negative answer.
pub fn find_isomorphism(
    g: &FiniteGroup,
    h: &FiniteGroup,
    budget: u64,
) -> Result<Option<GroupHom>> {
    if g.order() != h.order() || fingerprint(g) != fingerprint(h) {
        return Ok(None);
    }
    if g.order() == 1 {
        return Ok(Some(GroupHom::trivial(g, h)));
    }
    let gens = g.minimal_generating_set();
    let gen_orders: Vec<usize> = gens.iter().map(|&e| g.element_order(e)).collect();
    let candidates: Vec<Vec<Elem>> = gen_orders
        .iter()
        .map(|&o| h.elements().filter(|&e| h.element_order(e) == o).collect())
        .collect();
    let mut nodes = 0u64;
    let mut imgs: Vec<Elem> = Vec::with_capacity(gens.len());
    let found = backtrack_iso(g, h, &gens, &candidates, &mut imgs, &mut nodes, budget)?;
    Ok(found.map(|map| GroupHom::new_unchecked(g.clone(), h.clone(), map)))
}

fn backtrack_iso(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[Elem],
    candidates: &[Vec<Elem>],
    imgs: &mut Vec<Elem>,
    nodes: &mut u64,
    budget: u64,
) -> Result<Option<Vec<Elem>>> {
    let depth = imgs.len();
    if depth == gens.len() {
        let map = match hom::extend_generator_images(g, h, gens, imgs) {
            Some(m) => m,
            None => return Ok(None),
        };
        let mut seen = vec![false; h.order()];
        for &v in &map {
            if seen[v] {
                return Ok(None);
            }
            seen[v] = true;
        }
        if hom::is_homomorphism_map(g, h, &map) {
            return Ok(Some(map));
        }
        return Ok(None);
    }
    for &cand in &candidates[depth] {
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::SearchBudgetExceeded(*nodes));
        }
        imgs.push(cand);
        // Prune: the partial assignment must extend consistently and
        // injectively over the subgroup generated so far.
        let consistent = match hom::extend_partial_images(g, h, &imgs_gens(gens, imgs), imgs) {
            Some(partial) => {
                let mut seen = vec![false; h.order()];
                let mut inj = true;
                for v in partial.into_iter().flatten() {
                    if seen[v] {
                        inj = false;
                        break;
                    }
                    seen[v] = true;
                }
                inj
            }
            None => false,
        };
        if consistent {
            if let Some(found) = backtrack_iso(g, h, gens, candidates, imgs, nodes, budget)? {
                return Ok(Some(found));
            }
        }
        imgs.pop();
    }
    Ok(None)
}

fn imgs_gens(gens: &[Elem], imgs: &[Elem]) -> Vec<Elem> {
    gens[..imgs.len()].to_vec()
}

/// Searches for a surjective homomorphism `G -> H` by backtracking over
/// generator images, pruned by element-order divisibility. Returns the first
/// witness in canonical order.
pub fn find_surjection(
    g: &FiniteGroup,
    h: &FiniteGroup,
    budget: u64,
) -> Result<Option<GroupHom>> {
    if h.order() == 1 {
        return Ok(Some(GroupHom::trivial(g, h)));
    }
    if g.order() % h.order() != 0 {
        return Ok(None);
    }
    let gens = g.minimal_generating_set();
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&e| {
            let o = g.element_order(e);
            h.elements().filter(|&x| o % h.element_order(x) == 0).collect()
        })
        .collect();
    let mut nodes = 0u64;
    let mut imgs: Vec<Elem> = Vec::with_capacity(gens.len());
    let found = backtrack_surjection(g, h, &gens, &candidates, &mut imgs, &mut nodes, budget)?;
    Ok(found.map(|map| GroupHom::new_unchecked(g.clone(), h.clone(), map)))
}

fn backtrack_surjection(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[Elem],
    candidates: &[Vec<Elem>],
    imgs: &mut Vec<Elem>,
    nodes: &mut u64,
    budget: u64,
) -> Result<Option<Vec<Elem>>> {
    let depth = imgs.len();
    if depth == gens.len() {
        let map = match hom::extend_generator_images(g, h, gens, imgs) {
            Some(m) => m,
            None => return Ok(None),
        };
        // Surjectivity: generator images must generate H.
        if h.generated_members(imgs).len() != h.order() {
            return Ok(None);
        }
        if hom::is_homomorphism_map(g, h, &map) {
            return Ok(Some(map));
        }
        return Ok(None);
    }
    for &cand in &candidates[depth] {
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::SearchBudgetExceeded(*nodes));
        }
        imgs.push(cand);
        let consistent =
            hom::extend_partial_images(g, h, &gens[..imgs.len()], imgs).is_some();
        if consistent {
            if let Some(found) =
                backtrack_surjection(g, h, gens, candidates, imgs, nodes, budget)?
            {
                return Ok(Some(found));
            }
        }
        imgs.pop();
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{named_group, NamedGroupSpec};

    fn c(n: usize) -> FiniteGroup {
        named_group(&NamedGroupSpec::Cyclic(n)).unwrap()
    }

    fn v4() -> FiniteGroup {
        named_group(&NamedGroupSpec::ElementaryAbelian(2, 2)).unwrap()
    }

    #[test]
    fn c4_and_v4_fingerprints_differ() {
        assert_ne!(
            fingerprint(&c(4)).element_order_histogram,
            fingerprint(&v4()).element_order_histogram
        );
    }

    #[test]
    fn relabeled_copy_has_equal_fingerprint() {
        let g = named_group(&NamedGroupSpec::Symmetric(3)).unwrap();
        // Relabel by conjugating the table with a permutation fixing 0.
        let perm = vec![0usize, 3, 4, 1, 2, 5];
        let mut inv = vec![0usize; 6];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let table: Vec<Vec<usize>> = (0..6)
            .map(|a| (0..6).map(|b| perm[g.mul(inv[a], inv[b])]).collect())
            .collect();
        let relabeled = FiniteGroup::from_table(6, table).unwrap();
        assert_eq!(fingerprint(&g), fingerprint(&relabeled));
    }

    #[test]
    fn d4_vs_q8_involution_counts() {
        let d4 = named_group(&NamedGroupSpec::Dihedral(4)).unwrap();
        let q8 = named_group(&NamedGroupSpec::Quaternion(8)).unwrap();
        let fd = fingerprint(&d4);
        let fq = fingerprint(&q8);
        assert_eq!(fd.element_order_histogram[&2], 5);
        assert_eq!(fq.element_order_histogram[&2], 1);
        assert_eq!(fd.conjugacy_class_sizes, fq.conjugacy_class_sizes);
    }

    #[test]
    fn c6_isomorphic_to_c2_x_c3() {
        let p = c(2).direct_product(&c(3)).unwrap().group;
        let iso = find_isomorphism(&c(6), &p, DEFAULT_SEARCH_BUDGET)
            .unwrap()
            .expect("Chinese remainder isomorphism");
        assert!(iso.is_bijective());
    }

    #[test]
    fn c4_not_isomorphic_to_v4() {
        assert!(find_isomorphism(&c(4), &v4(), DEFAULT_SEARCH_BUDGET)
            .unwrap()
            .is_none());
    }

    #[test]
    fn s3_not_isomorphic_to_c6() {
        let s3 = named_group(&NamedGroupSpec::Symmetric(3)).unwrap();
        assert!(find_isomorphism(&s3, &c(6), DEFAULT_SEARCH_BUDGET)
            .unwrap()
            .is_none());
    }

    #[test]
    fn self_isomorphism_always_found() {
        for g in [c(1), c(8), v4(), named_group(&NamedGroupSpec::Symmetric(4)).unwrap()] {
            let iso = find_isomorphism(&g, &g, DEFAULT_SEARCH_BUDGET).unwrap();
            assert!(iso.unwrap().is_bijective());
        }
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let g = named_group(&NamedGroupSpec::ElementaryAbelian(2, 3)).unwrap();
        let err = find_isomorphism(&g, &g, 1).unwrap_err();
        assert!(matches!(err, Error::SearchBudgetExceeded(_)));
    }

    #[test]
    fn surjection_c4_onto_c2() {
        let s = find_surjection(&c(4), &c(2), DEFAULT_SEARCH_BUDGET)
            .unwrap()
            .expect("reduction mod 2");
        assert!(s.is_surjective());
    }

    #[test]
    fn no_surjection_c4_onto_v4() {
        assert!(find_surjection(&c(4), &v4(), DEFAULT_SEARCH_BUDGET)
            .unwrap()
            .is_none());
    }
}
