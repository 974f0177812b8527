//! Normal endomorphisms, the pointwise sum, Fitting decompositions and the
//! automorphism-or-nilpotent dichotomy.
//!
//! An endomorphism `f` is *normal* when `a f(b) a^-1 = f(a b a^-1)` for all
//! `a, b`. The pointwise sum of two endomorphisms is a partial operation: it
//! is only an endomorphism when the pointwise product map happens to respect
//! multiplication, so [`endo_sum`] returns an `Option`.
//!
//! ```
//! use grouplab::corpus::{named_group, NamedGroupSpec};
//! use grouplab::endo::{endo_sum, is_normal_endomorphism};
//! use grouplab::hom::GroupHom;
//!
//! let c5 = named_group(&NamedGroupSpec::Cyclic(5)).unwrap();
//! let id = GroupHom::identity(&c5);
//! // On an abelian group, doubling (id + id) is again an endomorphism.
//! let doubled = endo_sum(&id, &id).unwrap().expect("abelian doubling");
//! assert!(doubled.is_bijective());
//! assert!(is_normal_endomorphism(&doubled).unwrap());
//! ```

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, NormalSubgroup};
use crate::hom::{self, GroupHom};

/// Default cap on group order for exhaustive endomorphism enumeration.
pub const DEFAULT_ENDO_ORDER_BUDGET: usize = 16;

/// Checks the defining identity `a f(b) a^-1 = f(a b a^-1)` on all pairs.
pub fn is_normal_endomorphism(f: &GroupHom) -> Result<bool> {
    if !f.is_endomorphism() {
        return Err(Error::SourceTargetMismatch);
    }
    let g = f.source();
    for a in g.elements() {
        for b in g.elements() {
            if g.conjugate(a, f.apply(b)) != f.apply(g.conjugate(a, b)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The pointwise sum `a -> phi(a) psi(a)`. Returns `None` when the pointwise
/// map is not a homomorphism; the sum is a partial operation by design.
pub fn endo_sum(phi: &GroupHom, psi: &GroupHom) -> Result<Option<GroupHom>> {
    if !phi.is_endomorphism() || !psi.is_endomorphism() || phi.source() != psi.source() {
        return Err(Error::SourceTargetMismatch);
    }
    let g = phi.source();
    let map: Vec<Elem> = g
        .elements()
        .map(|a| g.mul(phi.apply(a), psi.apply(a)))
        .collect();
    if hom::is_homomorphism_map(g, g, &map) {
        Ok(Some(GroupHom::new_unchecked(g.clone(), g.clone(), map)))
    } else {
        Ok(None)
    }
}

/// Pointwise sum of a nonempty sequence, folded left to right. `None` as soon
/// as any partial sum fails to be an endomorphism.
pub fn endo_sum_all(fs: &[GroupHom]) -> Result<Option<GroupHom>> {
    let mut iter = fs.iter();
    let first = iter.next().ok_or(Error::PreconditionViolated(
        "empty endomorphism sequence".into(),
    ))?;
    let mut acc = first.clone();
    for f in iter {
        match endo_sum(&acc, f)? {
            Some(s) => acc = s,
            None => return Ok(None),
        }
    }
    Ok(Some(acc))
}

/// All endomorphisms of `g`, found by backtracking over generator images and
/// returned in lexicographic image-tuple order. With `normal_only`, filtered
/// by [`is_normal_endomorphism`].
pub fn enumerate_endomorphisms(
    g: &FiniteGroup,
    normal_only: bool,
    max_order: usize,
) -> Result<Vec<GroupHom>> {
    if g.order() > max_order {
        return Err(Error::OrderBudgetExceeded {
            got: g.order(),
            budget: max_order,
        });
    }
    if g.order() == 1 {
        return Ok(vec![GroupHom::identity(g)]);
    }
    let gens = g.minimal_generating_set();
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&e| {
            let o = g.element_order(e);
            g.elements().filter(|&x| o % g.element_order(x) == 0).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut imgs: Vec<Elem> = Vec::with_capacity(gens.len());
    collect_endos(g, &gens, &candidates, &mut imgs, normal_only, &mut out)?;
    Ok(out)
}

fn collect_endos(
    g: &FiniteGroup,
    gens: &[Elem],
    candidates: &[Vec<Elem>],
    imgs: &mut Vec<Elem>,
    normal_only: bool,
    out: &mut Vec<GroupHom>,
) -> Result<()> {
    if imgs.len() == gens.len() {
        if let Some(map) = hom::extend_generator_images(g, g, gens, imgs) {
            if hom::is_homomorphism_map(g, g, &map) {
                let f = GroupHom::new_unchecked(g.clone(), g.clone(), map);
                if !normal_only || is_normal_endomorphism(&f)? {
                    out.push(f);
                }
            }
        }
        return Ok(());
    }
    for &cand in &candidates[imgs.len()] {
        imgs.push(cand);
        if hom::extend_partial_images(g, g, &gens[..imgs.len()], imgs).is_some() {
            collect_endos(g, gens, candidates, imgs, normal_only, out)?;
        }
        imgs.pop();
    }
    Ok(())
}

/// The kernel/image split of a group along a normal endomorphism at the
/// stabilization exponent.
#[derive(Clone, Debug)]
pub struct FittingSplit {
    pub kernel_part: NormalSubgroup,
    pub image_part: NormalSubgroup,
    pub exponent: usize,
}

/// Kernel and image member sets of `f^k` for `k = 1, 2, ...` until both
/// stabilize. Returns `(kernels, images)` with index 0 holding `f^1`.
pub(crate) fn power_chains(f: &GroupHom) -> (Vec<Vec<Elem>>, Vec<Vec<Elem>>) {
    let mut kernels = Vec::new();
    let mut images = Vec::new();
    let mut current = f.clone();
    loop {
        let ker: Vec<Elem> = current
            .source()
            .elements()
            .filter(|&e| current.apply(e) == 0)
            .collect();
        let im = current.image_members();
        let stable = kernels.last() == Some(&ker) && images.last() == Some(&im);
        kernels.push(ker);
        images.push(im);
        if stable {
            break;
        }
        current = f.compose(&current).expect("endomorphism composition");
    }
    (kernels, images)
}

/// Computes iterates of a normal endomorphism until kernel and image both
/// stabilize, then returns the split `G = ker f^n + Im f^n` at the minimal
/// exponent. The direct-sum property is re-verified and an
/// `InternalContradiction` is raised if it fails, since finiteness guarantees
/// it must hold.
///
/// ```
/// use grouplab::corpus::{named_group, NamedGroupSpec};
/// use grouplab::endo::fitting_decomposition;
/// use grouplab::hom::GroupHom;
///
/// let c12 = named_group(&NamedGroupSpec::Cyclic(12)).unwrap();
/// // Multiplication by 4. Its square is multiplication by 16 = 4, so the
/// // chains stabilize immediately: kernel of order 4, image C3.
/// let f = GroupHom::new(
///     c12.clone(), c12.clone(),
///     (0..12).map(|e| (4 * e) % 12).collect(),
/// ).unwrap();
/// let split = fitting_decomposition(&f).unwrap();
/// assert_eq!(split.exponent, 1);
/// assert_eq!(split.kernel_part.order(), 4);
/// assert_eq!(split.image_part.order(), 3);
/// ```
pub fn fitting_decomposition(f: &GroupHom) -> Result<FittingSplit> {
    if !is_normal_endomorphism(f)? {
        return Err(Error::NotNormal);
    }
    let g = f.source();
    let (kernels, images) = power_chains(f);
    // The chains end with one repeated entry; the stabilization exponent is
    // the first index whose successor is identical.
    let exponent = (0..kernels.len() - 1)
        .find(|&i| kernels[i] == kernels[i + 1] && images[i] == images[i + 1])
        .expect("chains stabilize in a finite group")
        + 1;
    let kernel_part = NormalSubgroup::from_members(g.clone(), kernels[exponent - 1].clone())
        .map_err(|_| Error::InternalContradiction("kernel part is not normal".into()))?;
    let image_part = NormalSubgroup::from_members(g.clone(), images[exponent - 1].clone())
        .map_err(|_| Error::InternalContradiction("image part is not normal".into()))?;
    verify_internal_split(g, &kernel_part, &image_part)?;
    Ok(FittingSplit {
        kernel_part,
        image_part,
        exponent,
    })
}

/// Checks that two normal subgroups form an internal direct product of `g`:
/// trivial intersection, elementwise commuting, orders multiplying up to |G|.
pub(crate) fn verify_internal_split(
    g: &FiniteGroup,
    a: &NormalSubgroup,
    b: &NormalSubgroup,
) -> Result<()> {
    if !a.intersects_trivially(b) {
        return Err(Error::InternalContradiction(
            "split parts intersect nontrivially".into(),
        ));
    }
    if a.order() * b.order() != g.order() {
        return Err(Error::InternalContradiction(format!(
            "split orders {} * {} != {}",
            a.order(),
            b.order(),
            g.order()
        )));
    }
    for &x in a.members() {
        for &y in b.members() {
            if g.mul(x, y) != g.mul(y, x) {
                return Err(Error::InternalContradiction(
                    "split parts do not commute elementwise".into(),
                ));
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EndoKind {
    Automorphism,
    Nilpotent,
    Neither,
}

/// Classification of a normal endomorphism. `Neither` forces the ambient
/// group to be decomposable.
#[derive(Clone, Debug, Serialize)]
pub struct EndoClassification {
    pub kind: EndoKind,
    /// Least n with `f^n(G) = {e}`; present iff nilpotent.
    pub nilpotency_index: Option<usize>,
    /// Least n with stable kernel and image chains.
    pub fitting_exponent: usize,
}

/// Classifies a normal endomorphism as automorphism, nilpotent, or neither.
/// The dichotomy is derived from the Fitting split rather than assumed: for an
/// indecomposable group the `Neither` case cannot occur.
///
/// ```
/// use grouplab::corpus::{named_group, NamedGroupSpec};
/// use grouplab::endo::{classify_normal_endo, EndoKind};
/// use grouplab::hom::GroupHom;
///
/// let c8 = named_group(&NamedGroupSpec::Cyclic(8)).unwrap();
/// // Multiplication by 2 on C8 is nilpotent with index 3: 2, 4, 8 = 0.
/// let f = GroupHom::new(c8.clone(), c8.clone(), (0..8).map(|e| (2 * e) % 8).collect()).unwrap();
/// let c = classify_normal_endo(&f).unwrap();
/// assert_eq!(c.kind, EndoKind::Nilpotent);
/// assert_eq!(c.nilpotency_index, Some(3));
///
/// // Multiplication by 3 is a unit mod 8, hence an automorphism.
/// let g = GroupHom::new(c8.clone(), c8.clone(), (0..8).map(|e| (3 * e) % 8).collect()).unwrap();
/// assert_eq!(classify_normal_endo(&g).unwrap().kind, EndoKind::Automorphism);
/// ```
pub fn classify_normal_endo(f: &GroupHom) -> Result<EndoClassification> {
    if !is_normal_endomorphism(f)? {
        return Err(Error::NotNormal);
    }
    let (kernels, images) = power_chains(f);
    let fitting_exponent = (0..kernels.len() - 1)
        .find(|&i| kernels[i] == kernels[i + 1] && images[i] == images[i + 1])
        .expect("chains stabilize")
        + 1;
    if f.is_bijective() {
        return Ok(EndoClassification {
            kind: EndoKind::Automorphism,
            nilpotency_index: None,
            fitting_exponent,
        });
    }
    if let Some(idx) = images.iter().position(|im| im == &[0]) {
        return Ok(EndoClassification {
            kind: EndoKind::Nilpotent,
            nilpotency_index: Some(idx + 1),
            fitting_exponent,
        });
    }
    Ok(EndoClassification {
        kind: EndoKind::Neither,
        nilpotency_index: None,
        fitting_exponent,
    })
}

/// Given normal endomorphisms of an indecomposable group whose prefix sums
/// are all endomorphisms and whose total sum is an automorphism, returns the
/// least index of an automorphic summand.
///
/// `NoAutomorphicSummand` can only surface if the preconditions were violated
/// or the implementation is buggy; it is kept as a deliberate trap.
pub fn automorphic_summand(fs: &[GroupHom]) -> Result<usize> {
    if fs.is_empty() {
        return Err(Error::PreconditionViolated("empty summand sequence".into()));
    }
    let g = fs[0].source().clone();
    for (k, f) in fs.iter().enumerate() {
        if !f.is_endomorphism() || f.source() != &g {
            return Err(Error::SourceTargetMismatch);
        }
        if !is_normal_endomorphism(f)? {
            return Err(Error::PreconditionViolated(format!(
                "summand {k} is not a normal endomorphism"
            )));
        }
    }
    if !crate::decomp::is_indecomposable(&g) {
        return Err(Error::PreconditionViolated(
            "ambient group is decomposable".into(),
        ));
    }
    let mut acc = fs[0].clone();
    for (k, f) in fs.iter().enumerate().skip(1) {
        acc = endo_sum(&acc, f)?.ok_or_else(|| {
            Error::PreconditionViolated(format!("partial sum through index {k} is not an endomorphism"))
        })?;
    }
    if !acc.is_bijective() {
        return Err(Error::PreconditionViolated(
            "total sum is not an automorphism".into(),
        ));
    }
    fs.iter()
        .position(|f| f.is_bijective())
        .ok_or(Error::NoAutomorphicSummand)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{named_group, NamedGroupSpec};

    fn c(n: usize) -> FiniteGroup {
        named_group(&NamedGroupSpec::Cyclic(n)).unwrap()
    }

    fn mult_endo(g: &FiniteGroup, k: usize) -> GroupHom {
        // x -> kx on a cyclic group given additively
        let map: Vec<Elem> = g.elements().map(|x| g.pow(x, k)).collect();
        GroupHom::new(g.clone(), g.clone(), map).unwrap()
    }

    #[test]
    fn identity_is_normal() {
        let s3 = named_group(&NamedGroupSpec::Symmetric(3)).unwrap();
        assert!(is_normal_endomorphism(&GroupHom::identity(&s3)).unwrap());
    }

    #[test]
    fn abelian_endos_all_normal() {
        let g = c(6);
        for f in enumerate_endomorphisms(&g, false, 16).unwrap() {
            assert!(is_normal_endomorphism(&f).unwrap());
        }
    }

    #[test]
    fn s3_has_a_non_normal_endomorphism() {
        let s3 = named_group(&NamedGroupSpec::Symmetric(3)).unwrap();
        let endos = enumerate_endomorphisms(&s3, false, 16).unwrap();
        // A retraction onto an order-2 subgroup is not normal.
        let non_normal = endos
            .iter()
            .find(|f| !is_normal_endomorphism(f).unwrap())
            .expect("S3 admits a non-normal endomorphism");
        assert_eq!(non_normal.image_members().len(), 2);
    }

    #[test]
    fn doubling_on_c5_is_an_automorphism() {
        let g = c(5);
        let id = GroupHom::identity(&g);
        let sum = endo_sum(&id, &id).unwrap().unwrap();
        assert!(sum.is_bijective());
        assert_eq!(sum.apply(1), 2);
    }

    #[test]
    fn squaring_on_s3_is_not_an_endomorphism() {
        let s3 = named_group(&NamedGroupSpec::Symmetric(3)).unwrap();
        let id = GroupHom::identity(&s3);
        assert!(endo_sum(&id, &id).unwrap().is_none());
    }

    #[test]
    fn projection_sum_is_identity_on_c2_x_c3() {
        let p = c(2).direct_product(&c(3)).unwrap();
        let e1 = p.inclusions[0].compose(&p.projections[0]).unwrap();
        let e2 = p.inclusions[1].compose(&p.projections[1]).unwrap();
        let sum = endo_sum(&e1, &e2).unwrap().unwrap();
        assert!(sum.is_identity());
    }

    #[test]
    fn endo_counts() {
        assert_eq!(enumerate_endomorphisms(&c(2), false, 16).unwrap().len(), 2);
        assert_eq!(enumerate_endomorphisms(&c(4), false, 16).unwrap().len(), 4);
        let s3 = named_group(&NamedGroupSpec::Symmetric(3)).unwrap();
        assert_eq!(enumerate_endomorphisms(&s3, false, 16).unwrap().len(), 10);
    }

    #[test]
    fn endo_budget_enforced() {
        let g = c(17);
        assert!(matches!(
            enumerate_endomorphisms(&g, false, 16),
            Err(Error::OrderBudgetExceeded { .. })
        ));
    }

    #[test]
    fn fitting_split_c6_times_four() {
        let g = c(6);
        let f = mult_endo(&g, 4);
        let split = fitting_decomposition(&f).unwrap();
        assert_eq!(split.exponent, 1);
        assert_eq!(split.kernel_part.members(), &[0, 3]);
        assert_eq!(split.image_part.members(), &[0, 2, 4]);
    }

    #[test]
    fn fitting_split_identity() {
        let g = c(6);
        let split = fitting_decomposition(&GroupHom::identity(&g)).unwrap();
        assert_eq!(split.exponent, 1);
        assert!(split.kernel_part.is_trivial());
        assert!(split.image_part.is_full());
    }

    #[test]
    fn fitting_split_c4_doubling() {
        let g = c(4);
        let f = mult_endo(&g, 2);
        let split = fitting_decomposition(&f).unwrap();
        assert_eq!(split.exponent, 2);
        assert!(split.kernel_part.is_full());
        assert!(split.image_part.is_trivial());
    }

    #[test]
    fn classification_on_c4() {
        let g = c(4);
        let aut = classify_normal_endo(&mult_endo(&g, 3)).unwrap();
        assert_eq!(aut.kind, EndoKind::Automorphism);
        let nil = classify_normal_endo(&mult_endo(&g, 2)).unwrap();
        assert_eq!(nil.kind, EndoKind::Nilpotent);
        assert_eq!(nil.nilpotency_index, Some(2));
    }

    #[test]
    fn idempotent_projection_is_neither() {
        let p = c(2).direct_product(&c(3)).unwrap();
        let f = p.inclusions[0].compose(&p.projections[0]).unwrap();
        let cls = classify_normal_endo(&f).unwrap();
        assert_eq!(cls.kind, EndoKind::Neither);
    }

    #[test]
    fn automorphic_summand_identity() {
        let g = c(4);
        assert_eq!(automorphic_summand(&[GroupHom::identity(&g)]).unwrap(), 0);
    }

    #[test]
    fn automorphic_summand_two_and_three() {
        let g = c(4);
        let fs = [mult_endo(&g, 2), mult_endo(&g, 3)];
        assert_eq!(automorphic_summand(&fs).unwrap(), 1);
    }

    #[test]
    fn automorphic_summand_rejects_decomposable_group() {
        let g = c(6);
        let fs = [mult_endo(&g, 4), mult_endo(&g, 3)];
        assert!(matches!(
            automorphic_summand(&fs),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
