//! Truncated inverse systems of finite groups ("towers"), verbal quotient
//! towers, coherent levelwise decomposition, finite-image sets, and the
//! fiber-power construction.
//!
//! A tower is a finite stand-in for a profinite group: levels from coarse to
//! fine with surjective connecting maps between adjacent levels. Everything
//! proved about inverse limits is exercised here through such truncations,
//! and the reports say so.
//!
//! ```
//! use grouplab::corpus::{named_group, NamedGroupSpec};
//! use grouplab::tower::{fin_images, tower_decompose, verbal_quotient_tower};
//!
//! // The tower G/G^2 <- G/G^4 <- G/G^8 for G = C8: levels C2, C4, C8.
//! let c8 = named_group(&NamedGroupSpec::Cyclic(8)).unwrap();
//! let t = verbal_quotient_tower(&c8, &[2, 4, 8]).unwrap();
//! let orders: Vec<usize> = t.levels().iter().map(|g| g.order()).collect();
//! assert_eq!(orders, vec![2, 4, 8]);
//! assert!(t.validate().valid);
//! // Quotient types up to order 8: 1, C2, C4, C8.
//! assert_eq!(fin_images(&t, 8, 1_000_000).unwrap().len(), 4);
//!
//! // C36 with levels C6 <- C36: the CRT factors line up across levels.
//! let c36 = named_group(&NamedGroupSpec::Cyclic(36)).unwrap();
//! let t = verbal_quotient_tower(&c36, &[6, 36]).unwrap();
//! let cd = tower_decompose(&t).unwrap();
//! assert_eq!(cd.per_level[0].factors().len(), 2);
//! assert_eq!(cd.correspondence, vec![vec![0, 1]]);
//! ```

use std::collections::HashMap;

use serde::Serialize;

use crate::decomp::{all_maximal_decompositions, InternalDecomposition};
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, NormalSubgroup, DEFAULT_ORDER_BUDGET};
use crate::hom::GroupHom;
use crate::iso::{find_isomorphism, find_surjection, fingerprint, IsoFingerprint};

/// A finite truncation of an inverse system: `levels[0]` is the coarsest
/// group and `connecting[k]` maps `levels[k+1]` onto `levels[k]`. Only
/// adjacent maps are stored; longer spans are composed on demand.
#[derive(Clone, Debug)]
pub struct ProfiniteTower {
    levels: Vec<FiniteGroup>,
    connecting: Vec<GroupHom>,
}

/// Outcome of [`ProfiniteTower::validate`]; report-style, never an error.
#[derive(Clone, Debug, Serialize)]
pub struct TowerValidation {
    pub valid: bool,
    pub violations: Vec<String>,
}

impl ProfiniteTower {
    /// Wires levels and adjacent connecting maps together. Only the shape is
    /// checked here (map endpoints match the levels); use [`validate`] for
    /// the surjectivity report.
    ///
    /// [`validate`]: ProfiniteTower::validate
    pub fn new(levels: Vec<FiniteGroup>, connecting: Vec<GroupHom>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::BadParams("a tower needs at least one level".into()));
        }
        if connecting.len() + 1 != levels.len() {
            return Err(Error::BadParams(format!(
                "{} levels need {} connecting maps, got {}",
                levels.len(),
                levels.len() - 1,
                connecting.len()
            )));
        }
        for (k, map) in connecting.iter().enumerate() {
            if map.source() != &levels[k + 1] || map.target() != &levels[k] {
                return Err(Error::SourceTargetMismatch);
            }
        }
        Ok(ProfiniteTower { levels, connecting })
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn levels(&self) -> &[FiniteGroup] {
        &self.levels
    }

    pub fn level(&self, k: usize) -> &FiniteGroup {
        &self.levels[k]
    }

    /// The stored map `levels[k+1] -> levels[k]`.
    pub fn connecting(&self, k: usize) -> &GroupHom {
        &self.connecting[k]
    }

    /// The composed map `levels[upper] -> levels[lower]`, `lower <= upper`.
    pub fn span_map(&self, lower: usize, upper: usize) -> Result<GroupHom> {
        if lower > upper || upper >= self.levels.len() {
            return Err(Error::BadParams("bad span indices".into()));
        }
        let mut acc = GroupHom::identity(&self.levels[upper]);
        for k in (lower..upper).rev() {
            acc = self.connecting[k].compose(&acc)?;
        }
        Ok(acc)
    }

    /// Re-checks every connecting map: the homomorphism law on all pairs and
    /// surjectivity. Violations are listed by level; nothing is thrown.
    pub fn validate(&self) -> TowerValidation {
        let mut violations = Vec::new();
        for (k, map) in self.connecting.iter().enumerate() {
            let ok = crate::hom::is_homomorphism_map(map.source(), map.target(), map.image_vector());
            if !ok {
                violations.push(format!(
                    "connecting map {} -> {} violates the homomorphism law",
                    k + 1,
                    k
                ));
            }
            if !map.is_surjective() {
                violations.push(format!(
                    "connecting map {} -> {} is not surjective",
                    k + 1,
                    k
                ));
            }
        }
        TowerValidation {
            valid: violations.is_empty(),
            violations,
        }
    }
}

/// Builds the tower of verbal quotients `G/G^{m_1} <- G/G^{m_2} <- ...` for
/// an exponent chain with `m_i | m_{i+1}`. Divisibility makes the verbal
/// subgroups nested, so the natural projections are well defined and
/// surjective by construction.
pub fn verbal_quotient_tower(g: &FiniteGroup, exponents: &[usize]) -> Result<ProfiniteTower> {
    if exponents.is_empty() {
        return Err(Error::BadParams("empty exponent sequence".into()));
    }
    for w in exponents.windows(2) {
        if w[0] == 0 || w[1] % w[0] != 0 {
            return Err(Error::DivisibilityViolated(w[0], w[1]));
        }
    }
    if exponents[0] == 0 {
        return Err(Error::BadParams("verbal exponent must be positive".into()));
    }
    let mut levels: Vec<FiniteGroup> = Vec::with_capacity(exponents.len());
    let mut projections: Vec<GroupHom> = Vec::with_capacity(exponents.len());
    for &m in exponents {
        let verbal = g.verbal_power_subgroup(m);
        let (q, proj) = g.quotient(&verbal)?;
        levels.push(q);
        projections.push(proj);
    }
    let mut connecting = Vec::with_capacity(exponents.len().saturating_sub(1));
    for k in 0..exponents.len().saturating_sub(1) {
        // The finer quotient determines the coarser: pick any preimage in G
        // of each fine coset and push it through the coarse projection.
        let fine = &projections[k + 1];
        let coarse = &projections[k];
        let mut image_of = vec![0usize; levels[k + 1].order()];
        for e in g.elements() {
            image_of[fine.apply(e)] = coarse.apply(e);
        }
        let map = GroupHom::new(levels[k + 1].clone(), levels[k].clone(), image_of)
            .expect("nested verbal subgroups induce quotient maps");
        connecting.push(map);
    }
    ProfiniteTower::new(levels, connecting)
}

/// Elementary abelian tower `(Cp)^1 <- (Cp)^2 <- ... <- (Cp)^max_rank` with
/// the drop-highest-coordinate projections.
pub fn elementary_abelian_tower(p: usize, max_rank: usize) -> Result<ProfiniteTower> {
    if max_rank == 0 {
        return Err(Error::BadParams("rank must be positive".into()));
    }
    let levels: Vec<FiniteGroup> = (1..=max_rank)
        .map(|r| {
            crate::corpus::named_group(&crate::corpus::NamedGroupSpec::ElementaryAbelian(p, r))
        })
        .collect::<Result<_>>()?;
    let mut connecting = Vec::new();
    for k in 0..(max_rank - 1) {
        let modulus = levels[k].order();
        let image_of: Vec<Elem> = levels[k + 1].elements().map(|e| e % modulus).collect();
        let map = GroupHom::new(levels[k + 1].clone(), levels[k].clone(), image_of)
            .expect("digit truncation is a surjective homomorphism");
        connecting.push(map);
    }
    ProfiniteTower::new(levels, connecting)
}

/// One indecomposable decomposition per level plus, for each adjacent pair,
/// the index map sending each fine factor to the coarse factor containing its
/// image under the connecting map.
#[derive(Clone, Debug)]
pub struct CoherentDecomposition {
    pub per_level: Vec<InternalDecomposition>,
    /// `correspondence[k][j]` is the factor index at level `k` receiving the
    /// image of factor `j` at level `k+1`. Length `depth - 1`.
    pub correspondence: Vec<Vec<usize>>,
}

/// Searches for a coherent chain of indecomposable decompositions, one per
/// level: each fine factor must map under the connecting map into a single
/// coarse factor (trivial images go to the first factor, canonically). The
/// search is exhaustive over complement-split refinements, deepest level
/// first, and returns the first chain in canonical order.
///
/// `NoCoherentChain` is a legitimate outcome, not a bug: existence is a
/// theorem about the full inverse limit, and an arbitrary truncation need not
/// admit compatible choices.
pub fn tower_decompose(t: &ProfiniteTower) -> Result<CoherentDecomposition> {
    let depth = t.depth();
    let options: Vec<Vec<InternalDecomposition>> = t
        .levels()
        .iter()
        .map(all_maximal_decompositions)
        .collect();
    // chosen[i] indexes options[depth - 1 - i]: deepest level first.
    let mut chosen: Vec<usize> = Vec::with_capacity(depth);
    if !pick_level(t, &options, depth, &mut chosen) {
        return Err(Error::NoCoherentChain);
    }
    let per_level: Vec<InternalDecomposition> = (0..depth)
        .map(|k| options[k][chosen[depth - 1 - k]].clone())
        .collect();
    let correspondence: Vec<Vec<usize>> = (0..depth - 1)
        .map(|k| {
            factor_correspondence(t.connecting(k), &per_level[k + 1], &per_level[k])
                .expect("chain was checked coherent")
        })
        .collect();
    Ok(CoherentDecomposition {
        per_level,
        correspondence,
    })
}

fn pick_level(
    t: &ProfiniteTower,
    options: &[Vec<InternalDecomposition>],
    depth: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == depth {
        return true;
    }
    let level = depth - 1 - chosen.len();
    for (idx, cand) in options[level].iter().enumerate() {
        let coherent = if chosen.is_empty() {
            true
        } else {
            let above = &options[level + 1][*chosen.last().unwrap()];
            factor_correspondence(t.connecting(level), above, cand).is_some()
        };
        if coherent {
            chosen.push(idx);
            if pick_level(t, options, depth, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// For each factor of `fine`, the index of the factor of `coarse` containing
/// its image under `map`, or `None` when some nontrivial image is not
/// contained in any single factor (or the coarse level has no factor to
/// receive a trivial image).
fn factor_correspondence(
    map: &GroupHom,
    fine: &InternalDecomposition,
    coarse: &InternalDecomposition,
) -> Option<Vec<usize>> {
    let mut out = Vec::with_capacity(fine.len());
    for bj in fine.factors() {
        let mut image: Vec<Elem> = bj.members().iter().map(|&e| map.apply(e)).collect();
        image.sort_unstable();
        image.dedup();
        let host = coarse.factors().iter().position(|ai| {
            image.iter().all(|e| ai.members().binary_search(e).is_ok())
        })?;
        out.push(host);
    }
    // Joint generation of each coarse factor by its assigned images follows
    // from surjectivity, but it is cheap to confirm.
    for (i, ai) in coarse.factors().iter().enumerate() {
        let seed: Vec<Elem> = fine
            .factors()
            .iter()
            .zip(&out)
            .filter(|&(_, &h)| h == i)
            .flat_map(|(bj, _)| bj.members().iter().map(|&e| map.apply(e)))
            .collect();
        let generated = coarse.parent().generated_members(&seed);
        if generated.len() != ai.order() {
            return None;
        }
    }
    Some(out)
}

/// A set of isomorphism classes of finite groups, each held as a
/// representative plus its fingerprint, with no two representatives
/// isomorphic.
#[derive(Clone, Debug)]
pub struct FinSet {
    pub max_order: usize,
    pub classes: Vec<(IsoFingerprint, FiniteGroup)>,
}

impl FinSet {
    /// Whether `g` is isomorphic to one of the stored representatives.
    pub fn contains(&self, g: &FiniteGroup, budget: u64) -> Result<bool> {
        let fp = fingerprint(g);
        for (cfp, rep) in &self.classes {
            if *cfp == fp && find_isomorphism(g, rep, budget)?.is_some() {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// The set of isomorphism classes of quotients of the tower's levels with
/// order at most `max_order`: the finite images of the (truncated) limit that
/// are visible at this depth. Deduplicated by isomorphism search and sorted
/// by fingerprint for determinism.
pub fn fin_images(t: &ProfiniteTower, max_order: usize, budget: u64) -> Result<FinSet> {
    let mut classes: Vec<(IsoFingerprint, FiniteGroup)> = Vec::new();
    for level in t.levels() {
        for n in level.normal_subgroups() {
            if level.order() / n.order() > max_order {
                continue;
            }
            let (q, _) = level.quotient(&n)?;
            let fp = fingerprint(&q);
            let mut known = false;
            for (cfp, rep) in &classes {
                if *cfp == fp && find_isomorphism(&q, rep, budget)?.is_some() {
                    known = true;
                    break;
                }
            }
            if !known {
                classes.push((fp, q));
            }
        }
    }
    classes.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(FinSet { max_order, classes })
}

/// Outcome of [`same_fin`]: set equality of the two image sets up to
/// isomorphism, with the symmetric difference reported by fingerprint.
#[derive(Clone, Debug, Serialize)]
pub struct FinComparison {
    pub equal: bool,
    pub only_in_first: Vec<IsoFingerprint>,
    pub only_in_second: Vec<IsoFingerprint>,
}

/// Compares the bounded finite-image sets of two towers up to isomorphism.
pub fn same_fin(
    t1: &ProfiniteTower,
    t2: &ProfiniteTower,
    max_order: usize,
    budget: u64,
) -> Result<FinComparison> {
    let f1 = fin_images(t1, max_order, budget)?;
    let f2 = fin_images(t2, max_order, budget)?;
    let mut only_in_first = Vec::new();
    for (fp, rep) in &f1.classes {
        if !f2.contains(rep, budget)? {
            only_in_first.push(fp.clone());
        }
    }
    let mut only_in_second = Vec::new();
    for (fp, rep) in &f2.classes {
        if !f1.contains(rep, budget)? {
            only_in_second.push(fp.clone());
        }
    }
    Ok(FinComparison {
        equal: only_in_first.is_empty() && only_in_second.is_empty(),
        only_in_first,
        only_in_second,
    })
}

/// Parameters of the fiber-power construction: tuples
/// `(gN, (g_1, ..., g_n)) in G/N x (G/M0)^n` whose coordinates are all
/// congruent to `g` modulo `G0`.
#[derive(Clone, Debug)]
pub struct FiberPowerSpec {
    pub g: FiniteGroup,
    pub g0: NormalSubgroup,
    pub m0: NormalSubgroup,
    pub n: usize,
    pub modulus: NormalSubgroup,
}

impl FiberPowerSpec {
    /// Validates the containments `M0 <= G0` and `N <= G0` (the modulus).
    pub fn new(
        g: FiniteGroup,
        g0: NormalSubgroup,
        m0: NormalSubgroup,
        n: usize,
        modulus: NormalSubgroup,
    ) -> Result<Self> {
        for (name, sub) in [("G0", &g0), ("M0", &m0), ("N", &modulus)] {
            if sub.parent() != &g {
                return Err(Error::ContainmentViolated(format!(
                    "{name} is not a subgroup of G"
                )));
            }
        }
        let inside_g0 = |s: &NormalSubgroup| {
            s.members()
                .iter()
                .all(|e| g0.members().binary_search(e).is_ok())
        };
        if !inside_g0(&m0) {
            return Err(Error::ContainmentViolated("M0 is not contained in G0".into()));
        }
        if !inside_g0(&modulus) {
            return Err(Error::ContainmentViolated("N is not contained in G0".into()));
        }
        Ok(FiberPowerSpec {
            g,
            g0,
            m0,
            n,
            modulus,
        })
    }
}

/// Sizes reported alongside a fiber power; the order law
/// `order = quotient_order * fiber_class_order^n` is checked at construction.
#[derive(Clone, Debug, Serialize)]
pub struct FiberPowerDescription {
    pub order: usize,
    pub quotient_order: usize,
    pub fiber_class_order: usize,
    pub n: usize,
}

/// Enumerates the fiber power as a concrete group: the subgroup of
/// `G/N x (G/M0)^n` of tuples congruent modulo `G0`, with componentwise
/// multiplication. `n = 0` degenerates to `G/N`.
///
/// ```
/// use grouplab::corpus::{named_group, NamedGroupSpec};
/// use grouplab::group::NormalSubgroup;
/// use grouplab::tower::{fiber_power, FiberPowerSpec};
///
/// let c4 = named_group(&NamedGroupSpec::Cyclic(4)).unwrap();
/// let g0 = NormalSubgroup::from_members(c4.clone(), vec![0, 2]).unwrap();
/// let m0 = NormalSubgroup::from_members(c4.clone(), vec![0]).unwrap();
/// let n_mod = NormalSubgroup::from_members(c4.clone(), vec![0, 2]).unwrap();
/// let spec = FiberPowerSpec::new(c4, g0, m0, 2, n_mod).unwrap();
/// let (fp, desc) = fiber_power(&spec).unwrap();
/// // |G/N| * |G0/M0|^n = 2 * 2^2 = 8, and the law is checked internally.
/// assert_eq!(desc.order, 8);
/// assert_eq!(fp.order(), 8);
/// ```
pub fn fiber_power(spec: &FiberPowerSpec) -> Result<(FiniteGroup, FiberPowerDescription)> {
    let g = &spec.g;
    let (q, proj_q) = g.quotient(&spec.modulus)?;
    let (r, proj_r) = g.quotient(&spec.m0)?;
    let (g0q, proj_g0) = g.quotient(&spec.g0)?;
    let fiber_class_order = spec.g0.order() / spec.m0.order();
    let expected = q
        .order()
        .checked_mul(fiber_class_order.checked_pow(spec.n as u32).ok_or(
            Error::OrderBudgetExceeded {
                got: usize::MAX,
                budget: DEFAULT_ORDER_BUDGET,
            },
        )?)
        .ok_or(Error::OrderBudgetExceeded {
            got: usize::MAX,
            budget: DEFAULT_ORDER_BUDGET,
        })?;
    if expected > DEFAULT_ORDER_BUDGET {
        return Err(Error::OrderBudgetExceeded {
            got: expected,
            budget: DEFAULT_ORDER_BUDGET,
        });
    }
    // The G0-coset of a Q-element or R-element is well defined because both
    // N and M0 sit inside G0; compute it through any preimage.
    let mut q_class = vec![0usize; q.order()];
    let mut r_class = vec![0usize; r.order()];
    for e in g.elements() {
        q_class[proj_q.apply(e)] = proj_g0.apply(e);
        r_class[proj_r.apply(e)] = proj_g0.apply(e);
    }
    // Enumerate tuples in lexicographic order, q outermost, so the identity
    // tuple lands at index 0.
    let mut tuples: Vec<Vec<Elem>> = Vec::with_capacity(expected);
    let mut index: HashMap<Vec<Elem>, usize> = HashMap::with_capacity(expected);
    let r_members: Vec<Vec<Elem>> = {
        // Per G0-class, the R-elements in that class, in ascending order.
        let mut by_class = vec![Vec::new(); g0q.order()];
        for e in r.elements() {
            by_class[r_class[e]].push(e);
        }
        by_class
    };
    for qe in q.elements() {
        let pool = &r_members[q_class[qe]];
        let mut counter = vec![0usize; spec.n];
        loop {
            let mut tuple = Vec::with_capacity(1 + spec.n);
            tuple.push(qe);
            for &c in &counter {
                tuple.push(pool[c]);
            }
            index.insert(tuple.clone(), tuples.len());
            tuples.push(tuple);
            let mut i = 0;
            loop {
                if i == counter.len() {
                    break;
                }
                counter[i] += 1;
                if counter[i] < pool.len() {
                    break;
                }
                counter[i] = 0;
                i += 1;
            }
            if counter.iter().all(|&c| c == 0) {
                break;
            }
        }
    }
    if tuples.len() != expected {
        return Err(Error::InternalContradiction(format!(
            "fiber power order {} differs from the order law value {}",
            tuples.len(),
            expected
        )));
    }
    let order = tuples.len();
    let mut table = vec![vec![0usize; order]; order];
    for (a, ta) in tuples.iter().enumerate() {
        for (b, tb) in tuples.iter().enumerate() {
            let mut prod = Vec::with_capacity(1 + spec.n);
            prod.push(q.mul(ta[0], tb[0]));
            for j in 0..spec.n {
                prod.push(r.mul(ta[1 + j], tb[1 + j]));
            }
            table[a][b] = *index.get(&prod).ok_or_else(|| {
                Error::InternalContradiction("fiber power is not closed under product".into())
            })?;
        }
    }
    let group = FiniteGroup::from_table(order, table)?;
    let description = FiberPowerDescription {
        order,
        quotient_order: q.order(),
        fiber_class_order,
        n: spec.n,
    };
    Ok((group, description))
}

/// Searches the tower's levels in increasing order for a surjection onto `h`
/// and returns the first hit as `(level index, witness)`. Absence within the
/// truncation is `None`; a blown search budget is an error, never a silent
/// negative.
pub fn verify_image(
    t: &ProfiniteTower,
    h: &FiniteGroup,
    budget: u64,
) -> Result<Option<(usize, GroupHom)>> {
    for (k, level) in t.levels().iter().enumerate() {
        if let Some(s) = find_surjection(level, h, budget)? {
            return Ok(Some((k, s)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{named_group, NamedGroupSpec};
    use crate::iso::DEFAULT_SEARCH_BUDGET;

    fn c(n: usize) -> FiniteGroup {
        named_group(&NamedGroupSpec::Cyclic(n)).unwrap()
    }

    fn cyclic_tower(orders: &[usize]) -> ProfiniteTower {
        let levels: Vec<FiniteGroup> = orders.iter().map(|&n| c(n)).collect();
        let connecting: Vec<GroupHom> = orders
            .windows(2)
            .map(|w| {
                let image_of: Vec<Elem> = (0..w[1]).map(|e| e % w[0]).collect();
                GroupHom::new(c(w[1]), c(w[0]), image_of).unwrap()
            })
            .collect();
        ProfiniteTower::new(levels, connecting).unwrap()
    }

    #[test]
    fn cyclic_reduction_tower_is_valid() {
        let t = cyclic_tower(&[2, 4, 8]);
        let report = t.validate();
        assert!(report.valid, "{:?}", report.violations);
    }

    #[test]
    fn non_surjective_map_is_reported_with_level() {
        let t = ProfiniteTower::new(
            vec![c(2), c(2)],
            vec![GroupHom::trivial(&c(2), &c(2))],
        )
        .unwrap();
        let report = t.validate();
        assert!(!report.valid);
        assert!(report.violations[0].contains("1 -> 0"));
    }

    #[test]
    fn c36_over_c6_is_valid() {
        let t = cyclic_tower(&[6, 36]);
        assert!(t.validate().valid);
    }

    #[test]
    fn verbal_tower_of_c8() {
        let t = verbal_quotient_tower(&c(8), &[2, 4, 8]).unwrap();
        let orders: Vec<usize> = t.levels().iter().map(|g| g.order()).collect();
        assert_eq!(orders, vec![2, 4, 8]);
        assert!(t.validate().valid);
    }

    #[test]
    fn verbal_tower_of_c6() {
        let t = verbal_quotient_tower(&c(6), &[2, 6]).unwrap();
        let orders: Vec<usize> = t.levels().iter().map(|g| g.order()).collect();
        assert_eq!(orders, vec![2, 6]);
    }

    #[test]
    fn verbal_tower_identity_exponent() {
        let s3 = named_group(&NamedGroupSpec::Symmetric(3)).unwrap();
        let t = verbal_quotient_tower(&s3, &[1]).unwrap();
        assert_eq!(t.depth(), 1);
        assert_eq!(t.level(0).order(), 1);
    }

    #[test]
    fn verbal_tower_rejects_non_divisible_chain() {
        assert!(matches!(
            verbal_quotient_tower(&c(8), &[2, 3]),
            Err(Error::DivisibilityViolated(2, 3))
        ));
    }

    #[test]
    fn tower_decompose_crt_levels() {
        let t = cyclic_tower(&[6, 36]);
        let d = tower_decompose(&t).unwrap();
        let orders = |k: usize| -> Vec<usize> {
            d.per_level[k].factors().iter().map(|f| f.order()).collect()
        };
        assert_eq!(orders(0), vec![2, 3]);
        assert_eq!(orders(1), vec![4, 9]);
        // C4's image must land in C2 and C9's in C3.
        assert_eq!(d.correspondence[0], vec![0, 1]);
    }

    #[test]
    fn tower_decompose_identity_tower() {
        let t = ProfiniteTower::new(vec![c(2), c(2)], vec![GroupHom::identity(&c(2))]).unwrap();
        let d = tower_decompose(&t).unwrap();
        assert_eq!(d.per_level[0].len(), 1);
        assert_eq!(d.per_level[1].len(), 1);
        assert_eq!(d.correspondence[0], vec![0]);
    }

    #[test]
    fn tower_decompose_collapsing_coordinate() {
        let t = elementary_abelian_tower(2, 2).unwrap();
        let d = tower_decompose(&t).unwrap();
        assert_eq!(d.per_level[1].len(), 2);
        // Both level-2 factors point at the unique level-1 factor.
        assert_eq!(d.correspondence[0], vec![0, 0]);
    }

    #[test]
    fn fin_images_of_cyclic_2_tower() {
        let t = cyclic_tower(&[2, 4, 8]);
        let f = fin_images(&t, 8, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(f.len(), 4); // 1, C2, C4, C8
        assert!(f.contains(&c(4), DEFAULT_SEARCH_BUDGET).unwrap());
    }

    #[test]
    fn fin_images_of_elementary_abelian_tower() {
        let t = elementary_abelian_tower(2, 3).unwrap();
        let f = fin_images(&t, 4, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(f.len(), 3); // 1, C2, C2xC2
    }

    #[test]
    fn fin_images_with_unit_bound() {
        let t = cyclic_tower(&[2, 4]);
        let f = fin_images(&t, 1, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(f.len(), 1);
    }

    #[test]
    fn same_fin_reflexive() {
        let t = cyclic_tower(&[2, 4, 8]);
        assert!(same_fin(&t, &t, 8, DEFAULT_SEARCH_BUDGET).unwrap().equal);
    }

    #[test]
    fn same_fin_separates_cyclic_from_elementary_abelian() {
        let t1 = cyclic_tower(&[2, 4, 8]);
        let t2 = elementary_abelian_tower(2, 3).unwrap();
        let cmp = same_fin(&t1, &t2, 4, DEFAULT_SEARCH_BUDGET).unwrap();
        assert!(!cmp.equal);
        // C4 is visible only on the cyclic side.
        assert!(cmp
            .only_in_first
            .iter()
            .any(|fp| fp.order == 4 && fp.element_order_histogram.get(&4) == Some(&2)));
    }

    #[test]
    fn same_fin_shifted_elementary_abelian() {
        let t1 = elementary_abelian_tower(2, 3).unwrap();
        let t2 = elementary_abelian_tower(2, 4).unwrap();
        assert!(same_fin(&t1, &t2, 8, DEFAULT_SEARCH_BUDGET).unwrap().equal);
    }

    #[test]
    fn fiber_power_n0_is_the_quotient() {
        let g = c(4);
        let spec = FiberPowerSpec::new(
            g.clone(),
            g.full_subgroup(),
            g.trivial_subgroup(),
            0,
            g.trivial_subgroup(),
        )
        .unwrap();
        let (fp, desc) = fiber_power(&spec).unwrap();
        assert_eq!(fp.order(), 4);
        assert_eq!(desc.order, 4);
    }

    #[test]
    fn fiber_power_of_c4_congruence() {
        let g = c(4);
        let g0 = NormalSubgroup::from_members(g.clone(), vec![0, 2]).unwrap();
        let spec = FiberPowerSpec::new(
            g.clone(),
            g0,
            g.trivial_subgroup(),
            1,
            g.trivial_subgroup(),
        )
        .unwrap();
        let (fp, desc) = fiber_power(&spec).unwrap();
        assert_eq!(fp.order(), 8);
        assert_eq!(desc.quotient_order, 4);
        assert_eq!(desc.fiber_class_order, 2);
    }

    #[test]
    fn fiber_power_vacuous_congruence_is_full_product() {
        let g = named_group(&NamedGroupSpec::ElementaryAbelian(2, 2)).unwrap();
        let spec = FiberPowerSpec::new(
            g.clone(),
            g.full_subgroup(),
            g.trivial_subgroup(),
            2,
            g.trivial_subgroup(),
        )
        .unwrap();
        let (fp, _) = fiber_power(&spec).unwrap();
        assert_eq!(fp.order(), 64);
    }

    #[test]
    fn fiber_power_rejects_bad_containment() {
        let g = c(4);
        let g0 = g.trivial_subgroup();
        let m0 = NormalSubgroup::from_members(g.clone(), vec![0, 2]).unwrap();
        assert!(matches!(
            FiberPowerSpec::new(g.clone(), g0, m0, 1, g.trivial_subgroup()),
            Err(Error::ContainmentViolated(_))
        ));
    }

    #[test]
    fn verify_image_trivial_target() {
        let t = cyclic_tower(&[2, 4]);
        let (k, s) = verify_image(&t, &c(1), DEFAULT_SEARCH_BUDGET)
            .unwrap()
            .unwrap();
        assert_eq!(k, 0);
        assert!(s.is_surjective());
    }

    #[test]
    fn verify_image_finds_fiber_power_in_elementary_abelian_tower() {
        let g = named_group(&NamedGroupSpec::ElementaryAbelian(2, 2)).unwrap();
        let g0 = NormalSubgroup::from_members(g.clone(), vec![0, 1]).unwrap();
        let spec = FiberPowerSpec::new(
            g.clone(),
            g0,
            g.trivial_subgroup(),
            1,
            g.trivial_subgroup(),
        )
        .unwrap();
        let (h, desc) = fiber_power(&spec).unwrap();
        assert_eq!(desc.order, 8);
        let t = elementary_abelian_tower(2, 4).unwrap();
        let (k, s) = verify_image(&t, &h, DEFAULT_SEARCH_BUDGET)
            .unwrap()
            .unwrap();
        // The fiber power is elementary abelian of rank 3; the first level
        // that can cover it is rank 3, index 2.
        assert_eq!(k, 2);
        assert!(s.is_surjective());
    }

    #[test]
    fn verify_image_absent_for_v4_in_cyclic_tower() {
        let t = cyclic_tower(&[2, 4]);
        let v4 = named_group(&NamedGroupSpec::ElementaryAbelian(2, 2)).unwrap();
        assert!(verify_image(&t, &v4, DEFAULT_SEARCH_BUDGET)
            .unwrap()
            .is_none());
    }
}
