//! The invariant suite: nine desk-scale sweeps, each pinning one theorem-level
//! property of the library against exhaustive or oracle computation. Shared
//! between `selftest` on the CLI and the acceptance integration test.
//!
//! Elementary abelian 2-groups are rank-capped per sweep: `C2^k` has
//! combinatorially many maximal decompositions (840 at rank 4, 83k+ at rank
//! 5), so the exhaustive pair sweeps cap the rank where they would otherwise
//! dominate the runtime without adding coverage.
//!
//! ```
//! use grouplab::suite::{run_all, all_passed, SuiteConfig};
//!
//! // A scaled-down run: cap every sweep at order 8 for a fast smoke test.
//! let results = run_all(&SuiteConfig::default().capped(8));
//! assert!(all_passed(&results));
//! assert_eq!(results.len(), 9);
//! ```

use serde::Serialize;

use crate::corpus::{base_corpus_specs, corpus_with_products, named_group, NamedGroupSpec};
use crate::decomp::{
    all_maximal_decompositions, cancel_factor, is_indecomposable, match_decompositions,
    property_p_match, InternalDecomposition,
};
use crate::endo::{
    classify_normal_endo, endo_sum, endo_sum_all, enumerate_endomorphisms,
    fitting_decomposition, is_normal_endomorphism, EndoKind,
};
use crate::error::Result;
use crate::group::{Elem, FiniteGroup, NormalSubgroup};
use crate::hom::GroupHom;
use crate::iso::{find_isomorphism, fingerprint};
use crate::oracle;
use crate::tower::{
    elementary_abelian_tower, fiber_power, tower_decompose, verbal_quotient_tower,
    verify_image, FiberPowerSpec, ProfiniteTower,
};

/// Size knobs for the suite. Defaults match the documented sweep bounds.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Order cap for the endomorphism sweeps (Fitting, dichotomy).
    pub endo_max_order: usize,
    /// Order cap for the pointwise-sum closure sweep.
    pub sum_max_order: usize,
    /// Order cap for the decomposition-uniqueness pair sweep.
    pub uniqueness_max_order: usize,
    /// Cap on |G x A| for the cancellation sweep.
    pub cancel_max_product: usize,
    /// Cap on |A x B| for the verbal/product compatibility sweep.
    pub verbal_max_product: usize,
    /// Largest verbal exponent in the compatibility sweep.
    pub verbal_max_exponent: usize,
    /// Order cap for the oracle agreement sweep.
    pub oracle_max_order: usize,
    /// Node budget for isomorphism/surjection searches.
    pub budget: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            endo_max_order: 16,
            sum_max_order: 12,
            uniqueness_max_order: 32,
            cancel_max_product: 48,
            verbal_max_product: 48,
            verbal_max_exponent: 12,
            oracle_max_order: 12,
            budget: crate::iso::DEFAULT_SEARCH_BUDGET,
        }
    }
}

impl SuiteConfig {
    /// Caps every order-bound knob at `n`; used by `selftest --max-order`.
    pub fn capped(mut self, n: usize) -> Self {
        self.endo_max_order = self.endo_max_order.min(n);
        self.sum_max_order = self.sum_max_order.min(n);
        self.uniqueness_max_order = self.uniqueness_max_order.min(n);
        self.cancel_max_product = self.cancel_max_product.min(n);
        self.verbal_max_product = self.verbal_max_product.min(n);
        self.oracle_max_order = self.oracle_max_order.min(n);
        self
    }
}

/// Outcome of one criterion: pass/fail, the number of individual checks run,
/// and a human-readable detail line (first failures, or a summary).
#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub name: &'static str,
    pub passed: bool,
    pub checks: u64,
    pub detail: String,
}

struct Tally {
    checks: u64,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, context: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failures.len() < 8 {
            self.failures.push(context());
        } else if !ok {
            // keep counting silently past the report cap
            self.failures.push(String::new());
        }
    }

    fn finish(self, name: &'static str) -> CriterionResult {
        let failed = self.failures.len();
        CriterionResult {
            name,
            passed: self.failures.is_empty(),
            checks: self.checks,
            detail: if self.failures.is_empty() {
                format!("{} checks", self.checks)
            } else {
                format!(
                    "{failed} of {} checks failed; first: {}",
                    self.checks,
                    self.failures
                        .iter()
                        .find(|f| !f.is_empty())
                        .cloned()
                        .unwrap_or_default()
                )
            },
        }
    }
}

fn run_criterion(
    name: &'static str,
    body: impl FnOnce(&mut Tally) -> Result<()>,
) -> CriterionResult {
    let mut tally = Tally::new();
    match body(&mut tally) {
        Ok(()) => tally.finish(name),
        Err(e) => CriterionResult {
            name,
            passed: false,
            checks: tally.checks,
            detail: format!("aborted after {} checks: {e}", tally.checks),
        },
    }
}

fn group_name(g: &FiniteGroup) -> String {
    g.label()
        .map(str::to_owned)
        .unwrap_or_else(|| format!("order-{}", g.order()))
}

/// Whether the member sets split the group as an internal direct product.
fn split_holds(g: &FiniteGroup, a: &[Elem], b: &[Elem]) -> bool {
    let (Ok(na), Ok(nb)) = (
        NormalSubgroup::from_members(g.clone(), a.to_vec()),
        NormalSubgroup::from_members(g.clone(), b.to_vec()),
    ) else {
        return false;
    };
    crate::endo::verify_internal_split(g, &na, &nb).is_ok()
}

/// Fitting equivalence: for every normal endomorphism `f` and every exponent
/// `n >= 1`, the split `G = ker f^n + Im f^n` holds exactly when both chains
/// have stabilized at `n`. Both directions are checked through the first
/// exponent past stabilization.
pub fn criterion_fitting(cfg: &SuiteConfig) -> CriterionResult {
    run_criterion("fitting-equivalence", |t| {
        for g in corpus_with_products(cfg.endo_max_order, 4) {
            for f in enumerate_endomorphisms(&g, true, cfg.endo_max_order)? {
                let split = fitting_decomposition(&f)?;
                t.check(
                    split.kernel_part.order() * split.image_part.order() == g.order(),
                    || format!("{}: split orders off", group_name(&g)),
                );
                for n in 1..=split.exponent + 1 {
                    let fa = f.power(n)?;
                    let fb = f.power(n + 1)?;
                    let stable = fa.kernel().members() == fb.kernel().members()
                        && fa.image_members() == fb.image_members();
                    let splits =
                        split_holds(&g, fa.kernel().members(), &fa.image_members());
                    t.check(stable == splits, || {
                        format!(
                            "{}: at n={n} stable={stable} but split={splits} for {:?}",
                            group_name(&g),
                            f
                        )
                    });
                }
            }
        }
        Ok(())
    })
}

/// Dichotomy: on indecomposable groups every normal endomorphism is an
/// automorphism or nilpotent, never `Neither`.
pub fn criterion_dichotomy(cfg: &SuiteConfig) -> CriterionResult {
    run_criterion("dichotomy", |t| {
        for g in corpus_with_products(cfg.endo_max_order, 4) {
            if !is_indecomposable(&g) || g.order() == 1 {
                continue;
            }
            for f in enumerate_endomorphisms(&g, true, cfg.endo_max_order)? {
                let cls = classify_normal_endo(&f)?;
                t.check(cls.kind != EndoKind::Neither, || {
                    format!("{}: Neither for {:?}", group_name(&g), f)
                });
            }
        }
        Ok(())
    })
}

fn product_with_injections(
    specs: &[&NamedGroupSpec],
) -> Result<(FiniteGroup, Vec<GroupHom>)> {
    // Builds H1 x ... x Hm left-associatively and returns the composite
    // endomorphisms e_j = incl_j . proj_j on the product.
    let groups: Vec<FiniteGroup> = specs
        .iter()
        .map(|s| named_group(s))
        .collect::<Result<_>>()?;
    let mut acc = groups[0].clone();
    // projections/inclusions from the full product to each component
    let mut projs: Vec<GroupHom> = vec![GroupHom::identity(&acc)];
    let mut incls: Vec<GroupHom> = vec![GroupHom::identity(&acc)];
    for h in &groups[1..] {
        let d = acc.direct_product(h)?;
        projs = projs
            .iter()
            .map(|p| p.compose(&d.projections[0]))
            .collect::<Result<_>>()?;
        incls = incls
            .iter()
            .map(|i| d.inclusions[0].compose(i))
            .collect::<Result<_>>()?;
        projs.push(d.projections[1].clone());
        incls.push(d.inclusions[1].clone());
        acc = d.group;
    }
    let endos = incls
        .iter()
        .zip(&projs)
        .map(|(i, p)| i.compose(p))
        .collect::<Result<_>>()?;
    Ok((acc, endos))
}

/// Pointwise-sum calculus closure: present sums of normal endomorphisms are
/// normal, compositions are normal, inverses of normal automorphisms are
/// normal; on products of up to three factors every partial sum of distinct
/// `incl_j . proj_j` is a normal endomorphism and the full sum is the
/// identity. Also checks the bijective-sum dichotomy on indecomposables.
pub fn criterion_sum_closure(cfg: &SuiteConfig) -> CriterionResult {
    run_criterion("sum-closure", |t| {
        for g in corpus_with_products(cfg.sum_max_order, 4) {
            let endos = enumerate_endomorphisms(&g, true, cfg.sum_max_order.max(16))?;
            let indecomposable = is_indecomposable(&g) && g.order() > 1;
            for phi in &endos {
                if phi.is_bijective() {
                    t.check(
                        is_normal_endomorphism(&phi.inverse()?)?,
                        || format!("{}: inverse of {:?} not normal", group_name(&g), phi),
                    );
                }
                for psi in &endos {
                    if let Some(sum) = endo_sum(phi, psi)? {
                        t.check(is_normal_endomorphism(&sum)?, || {
                            format!("{}: sum not normal", group_name(&g))
                        });
                        if indecomposable && sum.is_bijective() {
                            t.check(phi.is_bijective() || psi.is_bijective(), || {
                                format!(
                                    "{}: bijective sum of two non-bijective normals",
                                    group_name(&g)
                                )
                            });
                        }
                    }
                    t.check(
                        is_normal_endomorphism(&phi.compose(psi)?)?,
                        || format!("{}: composition not normal", group_name(&g)),
                    );
                }
            }
        }
        // Partial sums of the canonical projection endomorphisms on small
        // products.
        let specs = base_corpus_specs(cfg.sum_max_order, 4);
        let nontrivial: Vec<&NamedGroupSpec> = specs
            .iter()
            .filter(|s| !matches!(s, NamedGroupSpec::Trivial))
            .collect();
        let order_of = |s: &NamedGroupSpec| named_group(s).map(|g| g.order());
        let mut tuples: Vec<Vec<&NamedGroupSpec>> = Vec::new();
        for i in 0..nontrivial.len() {
            for j in i..nontrivial.len() {
                let ij = order_of(nontrivial[i])? * order_of(nontrivial[j])?;
                if ij <= cfg.sum_max_order {
                    tuples.push(vec![nontrivial[i], nontrivial[j]]);
                    for k in j..nontrivial.len() {
                        if ij * order_of(nontrivial[k])? <= cfg.sum_max_order {
                            tuples.push(vec![nontrivial[i], nontrivial[j], nontrivial[k]]);
                        }
                    }
                }
            }
        }
        for tuple in tuples {
            let (g, endos) = product_with_injections(&tuple)?;
            for mask in 1u32..(1 << endos.len()) {
                let subset: Vec<GroupHom> = endos
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| mask & (1 << j) != 0)
                    .map(|(_, e)| e.clone())
                    .collect();
                let sum = endo_sum_all(&subset)?;
                t.check(sum.is_some(), || {
                    format!("{}: partial sum undefined for mask {mask}", group_name(&g))
                });
                if let Some(sum) = sum {
                    t.check(is_normal_endomorphism(&sum)?, || {
                        format!("{}: partial sum not normal", group_name(&g))
                    });
                    if mask == (1 << endos.len()) - 1 {
                        t.check(sum.is_identity(), || {
                            format!("{}: full projection sum is not the identity", group_name(&g))
                        });
                    }
                }
            }
        }
        Ok(())
    })
}

/// Decomposition uniqueness: every pair of maximal decompositions of every
/// corpus group matches with equal fingerprint multisets and bijective
/// witnesses, and the projection-sum route agrees on the image iso-class for
/// every factor.
pub fn criterion_uniqueness(cfg: &SuiteConfig) -> CriterionResult {
    run_criterion("uniqueness", |t| {
        for g in corpus_with_products(cfg.uniqueness_max_order, 3) {
            let all = all_maximal_decompositions(&g);
            for d1 in &all {
                for d2 in &all {
                    let m = match_decompositions(&g, d1, d2, cfg.budget)?;
                    t.check(
                        m.bijection.len() == d1.len()
                            && m.witnesses.iter().all(|w| w.is_bijective()),
                        || format!("{}: bad match", group_name(&g)),
                    );
                    for i in 0..d1.len() {
                        let (j, w) = property_p_match(&g, d1, d2, i, cfg.budget)?;
                        let fp_p = fingerprint(&d2.factor_group(j).0);
                        let fp_m = fingerprint(&d2.factor_group(m.bijection[i]).0);
                        t.check(w.is_bijective() && fp_p == fp_m, || {
                            format!(
                                "{}: projection-sum match disagrees at factor {i}",
                                group_name(&g)
                            )
                        });
                    }
                }
            }
        }
        Ok(())
    })
}

fn product_decomposition(
    a: &FiniteGroup,
    b: &FiniteGroup,
) -> Result<(FiniteGroup, InternalDecomposition)> {
    let d = a.direct_product(b)?;
    let g = d.group.clone();
    let factors = vec![
        NormalSubgroup::from_members(g.clone(), d.inclusions[0].image_members())?,
        NormalSubgroup::from_members(g.clone(), d.inclusions[1].image_members())?,
    ];
    Ok((g.clone(), InternalDecomposition::new(g, factors)?))
}

/// Cancellation: whenever `G x A` and `G x B` are isomorphic, cancelling the
/// `G`-part produces a valid isomorphism between the complements, which are
/// copies of `A` and `B`.
pub fn criterion_cancellation(cfg: &SuiteConfig) -> CriterionResult {
    run_criterion("cancellation", |t| {
        let specs = base_corpus_specs(cfg.cancel_max_product / 2, 4);
        let groups: Vec<FiniteGroup> = specs
            .iter()
            .map(named_group)
            .collect::<Result<_>>()?;
        for g in &groups {
            if g.order() == 1 {
                continue;
            }
            for a in &groups {
                if g.order() * a.order() > cfg.cancel_max_product {
                    continue;
                }
                for b in &groups {
                    if b.order() != a.order() {
                        continue;
                    }
                    let (x, dx) = product_decomposition(g, a)?;
                    let (y, dy) = product_decomposition(g, b)?;
                    if find_isomorphism(&x, &y, cfg.budget)?.is_none() {
                        continue;
                    }
                    let w = cancel_factor(&x, &dx, 0, &y, &dy, 0, cfg.budget)?;
                    let src_ok = find_isomorphism(w.source(), a, cfg.budget)?.is_some();
                    let tgt_ok = find_isomorphism(w.target(), b, cfg.budget)?.is_some();
                    t.check(w.is_bijective() && src_ok && tgt_ok, || {
                        format!(
                            "cancel {} from {} x {} vs {} x {}",
                            group_name(g),
                            group_name(g),
                            group_name(a),
                            group_name(g),
                            group_name(b)
                        )
                    });
                }
            }
        }
        Ok(())
    })
}

/// Verbal/product compatibility: `(A x B)^m` equals `A^m x B^m` as member
/// sets under the row-major product indexing.
pub fn criterion_verbal_product(cfg: &SuiteConfig) -> CriterionResult {
    run_criterion("verbal-product", |t| {
        let specs = base_corpus_specs(cfg.verbal_max_product / 2, 4);
        let groups: Vec<FiniteGroup> = specs
            .iter()
            .map(named_group)
            .collect::<Result<_>>()?;
        for a in &groups {
            for b in &groups {
                if a.order() * b.order() > cfg.verbal_max_product {
                    continue;
                }
                let p = a.direct_product(b)?;
                for m in 1..=cfg.verbal_max_exponent {
                    let va = a.verbal_power_subgroup(m);
                    let vb = b.verbal_power_subgroup(m);
                    let vp = p.group.verbal_power_subgroup(m);
                    let mut expected: Vec<Elem> = va
                        .members()
                        .iter()
                        .flat_map(|&x| {
                            vb.members().iter().map(move |&y| x * b.order() + y)
                        })
                        .collect();
                    expected.sort_unstable();
                    t.check(vp.members() == expected.as_slice(), || {
                        format!(
                            "({} x {})^{m} != {}^{m} x {}^{m}",
                            group_name(a),
                            group_name(b),
                            group_name(a),
                            group_name(b)
                        )
                    });
                }
            }
        }
        Ok(())
    })
}

/// The tower suite used by the W-bound criterion.
pub fn wbound_towers() -> Result<Vec<ProfiniteTower>> {
    let c8 = named_group(&NamedGroupSpec::Cyclic(8))?;
    let c27 = named_group(&NamedGroupSpec::Cyclic(27))?;
    let c216 = c8.direct_product(&c27)?.group;
    Ok(vec![
        verbal_quotient_tower(&c216, &[6, 36, 216])?,
        verbal_quotient_tower(&c8, &[2, 4, 8])?,
        elementary_abelian_tower(2, 4)?,
        elementary_abelian_tower(3, 4)?,
    ])
}

/// W-bound: in every coherent tower decomposition, the number of level-k
/// factors not contained in the verbal subgroup `G^m` is at most
/// `log2 |G / G^m|`, because the verbal quotient is the product of the factor
/// images and every escaping factor contributes a nontrivial one.
pub fn criterion_wbound(cfg: &SuiteConfig) -> CriterionResult {
    let _ = cfg;
    run_criterion("w-bound", |t| {
        for tower in wbound_towers()? {
            let cd = tower_decompose(&tower)?;
            for (k, d) in cd.per_level.iter().enumerate() {
                let level = tower.level(k);
                for m in 2..=12 {
                    let verbal = level.verbal_power_subgroup(m);
                    let escaping = d
                        .factors()
                        .iter()
                        .filter(|f| {
                            !f.members()
                                .iter()
                                .all(|e| verbal.members().binary_search(e).is_ok())
                        })
                        .count();
                    let quotient_order = level.order() / verbal.order();
                    t.check(1usize << escaping <= quotient_order, || {
                        format!(
                            "level {k} (order {}), m={m}: {escaping} escaping factors vs quotient {quotient_order}",
                            level.order()
                        )
                    });
                }
            }
        }
        Ok(())
    })
}

/// Fiber-power shadow: a batch of fiber powers over elementary abelian data
/// obeys the order law exactly, and each one is located as an image of the
/// elementary abelian tower by surjection search.
pub fn criterion_fiber_shadow(cfg: &SuiteConfig) -> CriterionResult {
    run_criterion("fiber-shadow", |t| {
        let e1 = named_group(&NamedGroupSpec::ElementaryAbelian(2, 1))?;
        let e2 = named_group(&NamedGroupSpec::ElementaryAbelian(2, 2))?;
        let line = |g: &FiniteGroup, m: Elem| {
            NormalSubgroup::from_members(g.clone(), vec![0, m])
        };
        let specs: Vec<FiberPowerSpec> = vec![
            FiberPowerSpec::new(
                e2.clone(),
                line(&e2, 1)?,
                e2.trivial_subgroup(),
                1,
                e2.trivial_subgroup(),
            )?,
            FiberPowerSpec::new(
                e2.clone(),
                line(&e2, 1)?,
                e2.trivial_subgroup(),
                2,
                e2.trivial_subgroup(),
            )?,
            FiberPowerSpec::new(
                e2.clone(),
                e2.full_subgroup(),
                e2.trivial_subgroup(),
                1,
                e2.trivial_subgroup(),
            )?,
            FiberPowerSpec::new(
                e1.clone(),
                e1.full_subgroup(),
                e1.trivial_subgroup(),
                2,
                e1.trivial_subgroup(),
            )?,
            FiberPowerSpec::new(
                e2.clone(),
                line(&e2, 1)?,
                e2.trivial_subgroup(),
                1,
                line(&e2, 1)?,
            )?,
            FiberPowerSpec::new(e2.clone(), line(&e2, 2)?, line(&e2, 2)?, 2, line(&e2, 2)?)?,
        ];
        let tower = elementary_abelian_tower(2, 4)?;
        let deepest = tower.level(tower.depth() - 1).order();
        for spec in &specs {
            let (h, desc) = fiber_power(spec)?;
            let law = desc.quotient_order
                * desc.fiber_class_order.pow(spec.n as u32);
            t.check(h.order() == law && desc.order == law, || {
                format!("order law broken: got {} expected {law}", h.order())
            });
            t.check(h.order() <= deepest, || {
                "spec exceeds the tower depth".to_string()
            });
            let hit = verify_image(&tower, &h, cfg.budget)?;
            t.check(hit.is_some(), || {
                format!("no tower level surjects onto the order-{} fiber power", h.order())
            });
            if let Some((_, s)) = hit {
                t.check(s.is_surjective(), || "witness not surjective".into());
            }
        }
        t.check(specs.len() >= 5, || "fewer than five specs".into());
        Ok(())
    })
}

/// Oracle agreement: indecomposability, normal-subgroup enumeration, and
/// isomorphism testing each agree with the independent brute-force oracles on
/// every corpus group within the oracle bound.
pub fn criterion_oracles(cfg: &SuiteConfig) -> CriterionResult {
    run_criterion("oracle-equivalence", |t| {
        let groups = corpus_with_products(cfg.oracle_max_order, 4);
        for g in &groups {
            let fast: Vec<Vec<Elem>> = g
                .normal_subgroups()
                .iter()
                .map(|n| n.members().to_vec())
                .collect();
            let slow = oracle::normal_subgroups_by_subset_enumeration(g);
            t.check(fast == slow, || {
                format!("{}: normal subgroup lists differ", group_name(g))
            });
            t.check(
                is_indecomposable(g) == oracle::indecomposable_by_subset_enumeration(g),
                || format!("{}: indecomposability disagreement", group_name(g)),
            );
        }
        for a in &groups {
            for b in &groups {
                let fast = find_isomorphism(a, b, cfg.budget)?.is_some();
                let slow = oracle::isomorphic_by_bijection_search(a, b);
                t.check(fast == slow, || {
                    format!(
                        "iso({}, {}): search says {fast}, oracle says {slow}",
                        group_name(a),
                        group_name(b)
                    )
                });
            }
        }
        Ok(())
    })
}

/// Runs all nine criteria in their documented order.
pub fn run_all(cfg: &SuiteConfig) -> Vec<CriterionResult> {
    vec![
        criterion_fitting(cfg),
        criterion_dichotomy(cfg),
        criterion_sum_closure(cfg),
        criterion_uniqueness(cfg),
        criterion_cancellation(cfg),
        criterion_verbal_product(cfg),
        criterion_wbound(cfg),
        criterion_fiber_shadow(cfg),
        criterion_oracles(cfg),
    ]
}

pub fn all_passed(results: &[CriterionResult]) -> bool {
    results.iter().all(|r| r.passed)
}
