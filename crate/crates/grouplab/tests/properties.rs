//! Randomized structural invariants, plus the deterministic existence sweep
//! for decompositions across the wider corpus.

use proptest::prelude::*;

use grouplab::corpus::{corpus_with_products, named_group, NamedGroupSpec};
use grouplab::decomp::{decompose, is_indecomposable};
use grouplab::group::FiniteGroup;
use grouplab::iso::{find_isomorphism, fingerprint, DEFAULT_SEARCH_BUDGET};

fn cyclic(n: usize) -> FiniteGroup {
    named_group(&NamedGroupSpec::Cyclic(n)).unwrap()
}

/// A small pool of structurally varied groups for randomized pairings.
fn pool() -> Vec<FiniteGroup> {
    [
        NamedGroupSpec::Cyclic(4),
        NamedGroupSpec::Cyclic(6),
        NamedGroupSpec::Cyclic(8),
        NamedGroupSpec::ElementaryAbelian(2, 2),
        NamedGroupSpec::ElementaryAbelian(2, 3),
        NamedGroupSpec::ElementaryAbelian(3, 2),
        NamedGroupSpec::Dihedral(3),
        NamedGroupSpec::Dihedral(4),
        NamedGroupSpec::Quaternion(8),
        NamedGroupSpec::Symmetric(3),
    ]
    .iter()
    .map(|s| named_group(s).unwrap())
    .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Verbal subgroups commute with direct products on cyclic pairs.
    #[test]
    fn verbal_of_product_is_product_of_verbals(a in 1usize..=12, b in 1usize..=12, m in 1usize..=12) {
        let ga = cyclic(a);
        let gb = cyclic(b);
        let p = ga.direct_product(&gb).unwrap().group;
        let va = ga.verbal_power_subgroup(m);
        let vb = gb.verbal_power_subgroup(m);
        let vp = p.verbal_power_subgroup(m);
        let mut expected: Vec<usize> = va
            .members()
            .iter()
            .flat_map(|&x| vb.members().iter().map(move |&y| x * b + y))
            .collect();
        expected.sort_unstable();
        prop_assert_eq!(vp.members(), expected.as_slice());
    }

    /// Multiplication by a unit is an automorphism of a cyclic group and
    /// fixes every verbal subgroup setwise.
    #[test]
    fn cyclic_automorphisms_fix_verbal_subgroups(n in 2usize..=16, k in 1usize..=15, m in 1usize..=12) {
        prop_assume!(gcd(k, n) == 1);
        let g = cyclic(n);
        let v = g.verbal_power_subgroup(m);
        let mut mapped: Vec<usize> = v.members().iter().map(|&e| g.pow(e, k)).collect();
        mapped.sort_unstable();
        prop_assert_eq!(mapped.as_slice(), v.members());
    }

    /// Quotient projections have exactly the chosen normal subgroup as
    /// kernel, and the first isomorphism theorem's order arithmetic holds.
    #[test]
    fn quotient_kernel_is_the_subgroup(idx in 0usize..10, pick in 0usize..64) {
        let g = pool()[idx].clone();
        let normals = g.normal_subgroups();
        let n = normals[pick % normals.len()].clone();
        let (q, proj) = g.quotient(&n).unwrap();
        prop_assert_eq!(q.order() * n.order(), g.order());
        let kernel = proj.kernel();
        prop_assert_eq!(kernel.members(), n.members());
        prop_assert!(proj.is_surjective());
    }

    /// Isomorphism search is symmetric in its arguments.
    #[test]
    fn isomorphism_is_symmetric(i in 0usize..10, j in 0usize..10) {
        let groups = pool();
        let forward = find_isomorphism(&groups[i], &groups[j], DEFAULT_SEARCH_BUDGET)
            .unwrap()
            .is_some();
        let backward = find_isomorphism(&groups[j], &groups[i], DEFAULT_SEARCH_BUDGET)
            .unwrap()
            .is_some();
        prop_assert_eq!(forward, backward);
    }

    /// Fingerprints are invariant under relabeling by any identity-fixing
    /// permutation of the element indices.
    #[test]
    fn fingerprint_is_relabeling_invariant(idx in 0usize..10, seed in 0u64..1_000_000) {
        let g = pool()[idx].clone();
        let n = g.order();
        // Deterministic Fisher-Yates over indices 1..n from the seed.
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed.wrapping_add(0x9e3779b97f4a7c15);
        for i in (2..n).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let j = 1 + (state as usize) % i;
            perm.swap(i, j);
        }
        let mut inv = vec![0usize; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let table: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| perm[g.mul(inv[a], inv[b])]).collect())
            .collect();
        let relabeled = FiniteGroup::from_table(n, table).unwrap();
        prop_assert_eq!(fingerprint(&g), fingerprint(&relabeled));
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Deterministic sweep: every corpus group up to order 64 decomposes into
/// validated indecomposable factors whose orders multiply up to the group
/// order.
#[test]
fn decomposition_existence_sweep() {
    for g in corpus_with_products(64, 4) {
        let d = decompose(&g);
        let mut product = 1usize;
        for f in d.factors() {
            let (fg, _) = f.as_group();
            assert!(
                is_indecomposable(&fg) && fg.order() > 1,
                "factor of {:?} not indecomposable",
                g
            );
            product *= f.order();
        }
        assert_eq!(product, g.order(), "order arithmetic broken for {:?}", g);
    }
}
