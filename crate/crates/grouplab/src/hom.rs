//! Total element-wise homomorphisms between finite groups.
//!
//! ```
//! use grouplab::corpus::{named_group, NamedGroupSpec};
//! use grouplab::hom::GroupHom;
//!
//! let c6 = named_group(&NamedGroupSpec::Cyclic(6)).unwrap();
//! let c3 = named_group(&NamedGroupSpec::Cyclic(3)).unwrap();
//! // Reduction mod 3 on element indices.
//! let f = GroupHom::new(c6.clone(), c3, vec![0, 1, 2, 0, 1, 2]).unwrap();
//! assert!(f.is_surjective());
//! assert_eq!(f.kernel().members(), &[0, 3]);
//! ```

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, NormalSubgroup, Subgroup};

/// A group homomorphism stored as the full image vector.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: FiniteGroup,
    target: FiniteGroup,
    image_of: Vec<Elem>,
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GroupHom({} -> {}, {:?})",
            self.source.order(),
            self.target.order(),
            self.image_of
        )
    }
}

impl GroupHom {
    /// Validates the multiplicative law on all pairs. The error carries the
    /// first witness pair `(a, b)` with `f(ab) != f(a)f(b)`.
    pub fn new(source: FiniteGroup, target: FiniteGroup, image_of: Vec<Elem>) -> Result<Self> {
        if image_of.len() != source.order() {
            return Err(Error::SourceTargetMismatch);
        }
        if let Some(&v) = image_of.iter().find(|&&v| v >= target.order()) {
            return Err(Error::NotAGroup(format!("image {v} out of target range")));
        }
        if image_of[0] != 0 {
            return Err(Error::NotAHomomorphism { a: 0, b: 0 });
        }
        for a in source.elements() {
            for b in source.elements() {
                if image_of[source.mul(a, b)] != target.mul(image_of[a], image_of[b]) {
                    return Err(Error::NotAHomomorphism { a, b });
                }
            }
        }
        Ok(GroupHom {
            source,
            target,
            image_of,
        })
    }

    pub(crate) fn new_unchecked(
        source: FiniteGroup,
        target: FiniteGroup,
        image_of: Vec<Elem>,
    ) -> Self {
        debug_assert_eq!(image_of.len(), source.order());
        GroupHom {
            source,
            target,
            image_of,
        }
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        GroupHom {
            source: g.clone(),
            target: g.clone(),
            image_of: g.elements().collect(),
        }
    }

    pub fn trivial(source: &FiniteGroup, target: &FiniteGroup) -> Self {
        GroupHom {
            source: source.clone(),
            target: target.clone(),
            image_of: vec![0; source.order()],
        }
    }

    /// Extends a partial map on a generating set to a total homomorphism.
    /// Fails with `PreconditionViolated` if the mapped elements do not
    /// generate the source, and with `NotAHomomorphism` if the extension does
    /// not respect some relation.
    pub fn from_generator_images(
        source: &FiniteGroup,
        target: &FiniteGroup,
        images: &[(Elem, Elem)],
    ) -> Result<Self> {
        let gens: Vec<Elem> = images.iter().map(|&(g, _)| g).collect();
        if source.generated_members(&gens).len() != source.order() {
            return Err(Error::PreconditionViolated(
                "the mapped elements do not generate the source group".into(),
            ));
        }
        let imgs: Vec<Elem> = images.iter().map(|&(_, h)| h).collect();
        let map = extend_generator_images(source, target, &gens, &imgs)
            .ok_or(Error::NotAHomomorphism { a: 0, b: 0 })?;
        GroupHom::new(source.clone(), target.clone(), map)
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn image_vector(&self) -> &[Elem] {
        &self.image_of
    }

    #[inline]
    pub fn apply(&self, e: Elem) -> Elem {
        self.image_of[e]
    }

    /// `self` after `other`: first apply `other`, then `self`.
    pub fn compose(&self, other: &GroupHom) -> Result<GroupHom> {
        if other.target != self.source {
            return Err(Error::SourceTargetMismatch);
        }
        Ok(GroupHom {
            source: other.source.clone(),
            target: self.target.clone(),
            image_of: other.image_of.iter().map(|&e| self.image_of[e]).collect(),
        })
    }

    pub fn kernel(&self) -> NormalSubgroup {
        let members: Vec<Elem> = self
            .source
            .elements()
            .filter(|&e| self.image_of[e] == 0)
            .collect();
        NormalSubgroup::new_unchecked(
            Subgroup::new(self.source.clone(), members).expect("kernel is a subgroup"),
        )
    }

    pub fn image_members(&self) -> Vec<Elem> {
        let mut v: Vec<Elem> = self.image_of.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn image_subgroup(&self) -> Subgroup {
        Subgroup::new(self.target.clone(), self.image_members()).expect("image is a subgroup")
    }

    pub fn is_surjective(&self) -> bool {
        self.image_members().len() == self.target.order()
    }

    pub fn is_injective(&self) -> bool {
        self.image_members().len() == self.source.order()
    }

    pub fn is_bijective(&self) -> bool {
        self.source.order() == self.target.order() && self.is_surjective()
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source == self.target
    }

    pub fn is_identity(&self) -> bool {
        self.is_endomorphism() && self.image_of.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_trivial(&self) -> bool {
        self.image_of.iter().all(|&v| v == 0)
    }

    pub fn inverse(&self) -> Result<GroupHom> {
        if !self.is_bijective() {
            return Err(Error::PreconditionViolated(
                "inverse of a non-bijective homomorphism".into(),
            ));
        }
        let mut inv = vec![0; self.target.order()];
        for e in self.source.elements() {
            inv[self.image_of[e]] = e;
        }
        Ok(GroupHom {
            source: self.target.clone(),
            target: self.source.clone(),
            image_of: inv,
        })
    }

    /// k-fold self-composition of an endomorphism. `power(0)` is the identity.
    pub fn power(&self, k: usize) -> Result<GroupHom> {
        if !self.is_endomorphism() {
            return Err(Error::SourceTargetMismatch);
        }
        let mut acc = GroupHom::identity(&self.source);
        for _ in 0..k {
            acc = self.compose(&acc).expect("endomorphism composition");
        }
        Ok(acc)
    }

    /// Preimage of a subgroup of the target.
    pub fn preimage_members(&self, target_members: &[Elem]) -> Vec<Elem> {
        self.source
            .elements()
            .filter(|&e| target_members.binary_search(&self.image_of[e]).is_ok())
            .collect()
    }
}

/// Extends generator images multiplicatively over the subgroup generated by
/// `gens`, breadth-first. Elements outside that subgroup stay `None`. Returns
/// `None` on a conflicting assignment (which also rules out any extension of
/// the partial image tuple).
pub(crate) fn extend_partial_images(
    source: &FiniteGroup,
    target: &FiniteGroup,
    gens: &[Elem],
    imgs: &[Elem],
) -> Option<Vec<Option<Elem>>> {
    debug_assert_eq!(gens.len(), imgs.len());
    let n = source.order();
    let mut map: Vec<Option<Elem>> = vec![None; n];
    map[0] = Some(0);
    let mut frontier: Vec<Elem> = vec![0];
    while let Some(e) = frontier.pop() {
        let y = map[e].unwrap();
        for (i, &g) in gens.iter().enumerate() {
            let eg = source.mul(e, g);
            let yi = target.mul(y, imgs[i]);
            match map[eg] {
                Some(existing) if existing != yi => return None,
                Some(_) => {}
                None => {
                    map[eg] = Some(yi);
                    frontier.push(eg);
                }
            }
        }
    }
    Some(map)
}

/// Extends generator images multiplicatively over the subgroup they generate.
/// Returns the full image vector if the source is generated and the breadth-
/// first assignment is conflict-free; the caller still has to verify the
/// homomorphism law when needed. Returns `None` on conflict or when the
/// generators do not generate the source.
pub(crate) fn extend_generator_images(
    source: &FiniteGroup,
    target: &FiniteGroup,
    gens: &[Elem],
    imgs: &[Elem],
) -> Option<Vec<Elem>> {
    extend_partial_images(source, target, gens, imgs)?
        .into_iter()
        .collect()
}

/// Verifies the homomorphism law on every pair; cheaper entry point for the
/// search loops that construct many candidate image vectors.
pub(crate) fn is_homomorphism_map(
    source: &FiniteGroup,
    target: &FiniteGroup,
    map: &[Elem],
) -> bool {
    for a in source.elements() {
        for b in source.elements() {
            if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
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

    fn c(n: usize) -> FiniteGroup {
        named_group(&NamedGroupSpec::Cyclic(n)).unwrap()
    }

    #[test]
    fn identity_hom_from_generator_images() {
        let g = c(2);
        let h = GroupHom::from_generator_images(&g, &g, &[(1, 1)]).unwrap();
        assert!(h.is_identity());
    }

    #[test]
    fn c4_onto_c2() {
        let h = GroupHom::from_generator_images(&c(4), &c(2), &[(1, 1)]).unwrap();
        assert!(h.is_surjective());
        assert_eq!(h.kernel().order(), 2);
    }

    #[test]
    fn c2_to_c3_order_obstruction() {
        let err = GroupHom::from_generator_images(&c(2), &c(3), &[(1, 1)]).unwrap_err();
        assert!(matches!(err, Error::NotAHomomorphism { .. }));
    }

    #[test]
    fn non_generating_images_rejected() {
        let err = GroupHom::from_generator_images(&c(4), &c(4), &[(2, 2)]).unwrap_err();
        assert!(matches!(err, Error::PreconditionViolated(_)));
    }

    #[test]
    fn compose_and_power() {
        let g = c(5);
        let dbl = GroupHom::new(g.clone(), g.clone(), vec![0, 2, 4, 1, 3]).unwrap();
        let quad = dbl.compose(&dbl).unwrap();
        assert_eq!(quad.apply(1), 4);
        assert_eq!(dbl.power(0).unwrap(), GroupHom::identity(&g));
        assert_eq!(dbl.power(2).unwrap(), quad);
    }

    #[test]
    fn inverse_of_bijection() {
        let g = c(5);
        let dbl = GroupHom::new(g.clone(), g.clone(), vec![0, 2, 4, 1, 3]).unwrap();
        let inv = dbl.inverse().unwrap();
        assert!(inv.compose(&dbl).unwrap().is_identity());
    }
}
