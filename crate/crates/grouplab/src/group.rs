//! Finite groups as fully enumerated multiplication tables.
//!
//! Every group in this crate is a [`FiniteGroup`]: a Cayley table over element
//! indices `0..order`, with element `0` always the identity. Construction
//! validates all group axioms exhaustively, so downstream code never has to
//! re-check them.
//!
//! ```
//! use grouplab::group::FiniteGroup;
//!
//! // The cyclic group of order 3.
//! let c3 = FiniteGroup::from_table(3, vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap();
//! assert_eq!(c3.mul(1, 2), 0);
//! assert_eq!(c3.inverse(1), 2);
//! ```

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Element index inside a [`FiniteGroup`]. Index 0 is always the identity.
pub type Elem = usize;

/// Default hard cap on the order of any constructed group.
pub const DEFAULT_ORDER_BUDGET: usize = 20_000;

#[derive(Debug)]
struct GroupData {
    order: usize,
    /// Flat row-major Cayley table: `table[a * order + b] = a * b`.
    table: Vec<u32>,
    inverse: Vec<Elem>,
    label: Option<String>,
}

/// A fully enumerated finite group. Cheap to clone (shared table).
#[derive(Clone)]
pub struct FiniteGroup(Arc<GroupData>);

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order={}", self.order())?;
        if let Some(l) = &self.0.label {
            write!(f, ", label={l}")?;
        }
        write!(f, ")")
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.order == other.0.order && self.0.table == other.0.table)
    }
}
impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Builds a group from an `order x order` multiplication table, validating
    /// every group axiom. The error names the first violated axiom together
    /// with a witness.
    pub fn from_table(order: usize, table: Vec<Vec<Elem>>) -> Result<Self> {
        Self::from_table_labeled(order, table, None)
    }

    pub fn from_table_labeled(
        order: usize,
        table: Vec<Vec<Elem>>,
        label: Option<String>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::NotAGroup("order must be positive".into()));
        }
        if order > DEFAULT_ORDER_BUDGET {
            return Err(Error::OrderBudgetExceeded {
                got: order,
                budget: DEFAULT_ORDER_BUDGET,
            });
        }
        if table.len() != order || table.iter().any(|row| row.len() != order) {
            return Err(Error::NotAGroup(format!(
                "table is not {order}x{order}"
            )));
        }
        for (a, row) in table.iter().enumerate() {
            for (b, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(Error::NotAGroup(format!(
                        "closure: table[{a}][{b}] = {v} is out of range"
                    )));
                }
            }
        }
        // Identity law for element 0.
        for a in 0..order {
            if table[0][a] != a {
                return Err(Error::NotAGroup(format!(
                    "identity: table[0][{a}] = {} != {a}",
                    table[0][a]
                )));
            }
            if table[a][0] != a {
                return Err(Error::NotAGroup(format!(
                    "identity: table[{a}][0] = {} != {a}",
                    table[a][0]
                )));
            }
        }
        // Each row and column must be a permutation (Latin square).
        for a in 0..order {
            let mut seen_row = vec![false; order];
            let mut seen_col = vec![false; order];
            for b in 0..order {
                if seen_row[table[a][b]] {
                    return Err(Error::NotAGroup(format!(
                        "invertibility: row {a} repeats value {}",
                        table[a][b]
                    )));
                }
                seen_row[table[a][b]] = true;
                if seen_col[table[b][a]] {
                    return Err(Error::NotAGroup(format!(
                        "invertibility: column {a} repeats value {}",
                        table[b][a]
                    )));
                }
                seen_col[table[b][a]] = true;
            }
        }
        // Associativity, exhaustively.
        for a in 0..order {
            for b in 0..order {
                let ab = table[a][b];
                for c in 0..order {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at witness triple ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(Self::from_table_unchecked(order, table, label))
    }

    /// Constructs without axiom checks. Only for tables that are groups by
    /// construction (products, quotients, extracted subgroups).
    pub(crate) fn from_table_unchecked(
        order: usize,
        table: Vec<Vec<Elem>>,
        label: Option<String>,
    ) -> Self {
        let mut flat = vec![0u32; order * order];
        for a in 0..order {
            for b in 0..order {
                flat[a * order + b] = table[a][b] as u32;
            }
        }
        let mut inverse = vec![0; order];
        for a in 0..order {
            inverse[a] = (0..order)
                .find(|&b| table[a][b] == 0)
                .expect("every element has an inverse");
        }
        FiniteGroup(Arc::new(GroupData {
            order,
            table: flat,
            inverse,
            label,
        }))
    }

    /// Closes a generating set of permutations of `0..degree` under
    /// composition (breadth-first, identity first) and returns the resulting
    /// Cayley table. Elements are indexed in discovery order.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<Self> {
        Self::from_permutations_budgeted(degree, generators, DEFAULT_ORDER_BUDGET)
    }

    pub fn from_permutations_budgeted(
        degree: usize,
        generators: &[Vec<usize>],
        budget: usize,
    ) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if g.len() != degree {
                return Err(Error::NotAPermutation(format!(
                    "generator {i} has length {} but degree is {degree}",
                    g.len()
                )));
            }
            let mut seen = vec![false; degree];
            for &v in g {
                if v >= degree || seen[v] {
                    return Err(Error::NotAPermutation(format!(
                        "generator {i} is not a bijection of 0..{degree}"
                    )));
                }
                seen[v] = true;
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut elems: Vec<Vec<usize>> = vec![identity.clone()];
        index.insert(identity, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                // compose: first apply elems[i], then g
                let composed: Vec<usize> = elems[i].iter().map(|&x| g[x]).collect();
                if !index.contains_key(&composed) {
                    if elems.len() >= budget {
                        return Err(Error::OrderBudgetExceeded {
                            got: elems.len() + 1,
                            budget,
                        });
                    }
                    index.insert(composed.clone(), elems.len());
                    elems.push(composed);
                    queue.push_back(elems.len() - 1);
                }
            }
        }
        let order = elems.len();
        let mut table = vec![vec![0usize; order]; order];
        for a in 0..order {
            for b in 0..order {
                // (a*b)(x) = a(b(x))
                let prod: Vec<usize> = (0..degree).map(|x| elems[a][elems[b][x]]).collect();
                table[a][b] = index[&prod];
            }
        }
        Ok(Self::from_table_unchecked(order, table, None))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.0.order
    }

    #[inline]
    pub fn identity(&self) -> Elem {
        0
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.0.table[a * self.0.order + b] as Elem
    }

    #[inline]
    pub fn inverse(&self, a: Elem) -> Elem {
        self.0.inverse[a]
    }

    pub fn label(&self) -> Option<&str> {
        self.0.label.as_deref()
    }

    pub fn with_label(&self, label: impl Into<String>) -> Self {
        let table = self.table_rows();
        Self::from_table_unchecked(self.order(), table, Some(label.into()))
    }

    pub fn table_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.order())
            .map(|a| (0..self.order()).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order()
    }

    /// `g * x * g^-1`
    #[inline]
    pub fn conjugate(&self, g: Elem, x: Elem) -> Elem {
        self.mul(self.mul(g, x), self.inverse(g))
    }

    pub fn pow(&self, a: Elem, mut k: usize) -> Elem {
        let mut acc = 0;
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center_members(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&z| self.elements().all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// Orbits of the conjugation action; the identity class comes first and
    /// classes are ordered by their smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<Elem>> {
        let n = self.order();
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if assigned[x] {
                continue;
            }
            let mut class: BTreeSet<Elem> = BTreeSet::new();
            for g in 0..n {
                class.insert(self.conjugate(g, x));
            }
            for &y in &class {
                assigned[y] = true;
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }

    /// Closure of `seed` (plus the identity) under multiplication, as a sorted
    /// member list.
    pub fn generated_members(&self, seed: &[Elem]) -> Vec<Elem> {
        let n = self.order();
        let mut in_set = vec![false; n];
        in_set[0] = true;
        let mut members = vec![0];
        let mut queue: VecDeque<Elem> = VecDeque::from([0]);
        let push = |e: Elem,
                        in_set: &mut Vec<bool>,
                        members: &mut Vec<Elem>,
                        queue: &mut VecDeque<Elem>| {
            if !in_set[e] {
                in_set[e] = true;
                members.push(e);
                queue.push_back(e);
            }
        };
        for &s in seed {
            push(s, &mut in_set, &mut members, &mut queue);
        }
        while let Some(a) = queue.pop_front() {
            for i in 0..members.len() {
                let b = members[i];
                let ab = self.mul(a, b);
                let ba = self.mul(b, a);
                push(ab, &mut in_set, &mut members, &mut queue);
                push(ba, &mut in_set, &mut members, &mut queue);
            }
        }
        members.sort_unstable();
        members
    }

    pub fn subgroup(&self, members: Vec<Elem>) -> Result<Subgroup> {
        Subgroup::new(self.clone(), members)
    }

    pub fn trivial_subgroup(&self) -> NormalSubgroup {
        NormalSubgroup(Subgroup {
            parent: self.clone(),
            members: vec![0],
        })
    }

    pub fn full_subgroup(&self) -> NormalSubgroup {
        NormalSubgroup(Subgroup {
            parent: self.clone(),
            members: self.elements().collect(),
        })
    }

    /// All normal subgroups, computed by closing unions of conjugacy classes,
    /// sorted by (order, lexicographic member set). Includes the trivial and
    /// the full subgroup.
    pub fn normal_subgroups(&self) -> Vec<NormalSubgroup> {
        let classes = self.conjugacy_classes();
        let mut found: BTreeSet<Vec<Elem>> = BTreeSet::new();
        let trivial = vec![0];
        found.insert(trivial.clone());
        let mut queue = VecDeque::from([trivial]);
        while let Some(members) = queue.pop_front() {
            for class in &classes {
                if class.iter().all(|e| members.binary_search(e).is_ok()) {
                    continue;
                }
                let mut seed = members.clone();
                seed.extend_from_slice(class);
                let closed = self.generated_members(&seed);
                if found.insert(closed.clone()) {
                    queue.push_back(closed);
                }
            }
        }
        let mut subs: Vec<NormalSubgroup> = found
            .into_iter()
            .map(|members| {
                NormalSubgroup(Subgroup {
                    parent: self.clone(),
                    members,
                })
            })
            .collect();
        subs.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.members().cmp(b.members()))
        });
        subs
    }

    /// The subgroup generated by all m-th powers. Always normal.
    ///
    /// ```
    /// use grouplab::corpus::{named_group, NamedGroupSpec};
    ///
    /// let s3 = named_group(&NamedGroupSpec::Symmetric(3)).unwrap();
    /// // Cubes of transpositions are transpositions, and those generate S3.
    /// assert!(s3.verbal_power_subgroup(3).is_full());
    /// // Squares generate A3.
    /// assert_eq!(s3.verbal_power_subgroup(2).order(), 3);
    /// ```
    pub fn verbal_power_subgroup(&self, m: usize) -> NormalSubgroup {
        assert!(m >= 1, "verbal exponent must be positive");
        let seeds: Vec<Elem> = self.elements().map(|g| self.pow(g, m)).collect();
        let members = self.generated_members(&seeds);
        let sub = Subgroup {
            parent: self.clone(),
            members,
        };
        debug_assert!(sub.is_normal());
        NormalSubgroup(sub)
    }

    /// Commutator subgroup [G, G].
    pub fn derived_subgroup_members(&self) -> Vec<Elem> {
        let n = self.order();
        let mut comms = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let c = self.mul(
                    self.mul(self.mul(a, b), self.inverse(a)),
                    self.inverse(b),
                );
                comms.push(c);
            }
        }
        self.generated_members(&comms)
    }

    /// Greedy minimal generating set: repeatedly add the lowest-index element
    /// outside the subgroup generated so far. Empty for the trivial group.
    pub fn minimal_generating_set(&self) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut current = vec![0];
        while current.len() < self.order() {
            let next = self
                .elements()
                .find(|e| current.binary_search(e).is_err())
                .expect("closure is proper, so some element is missing");
            gens.push(next);
            current = self.generated_members(&gens);
        }
        gens
    }

    /// Direct product with row-major indexing: `(g, h) -> g * |H| + h`.
    pub fn direct_product(&self, other: &FiniteGroup) -> Result<DirectProduct> {
        let (n, m) = (self.order(), other.order());
        let order = n
            .checked_mul(m)
            .filter(|&o| o <= DEFAULT_ORDER_BUDGET)
            .ok_or(Error::OrderBudgetExceeded {
                got: n.saturating_mul(m),
                budget: DEFAULT_ORDER_BUDGET,
            })?;
        let mut table = vec![vec![0usize; order]; order];
        for g1 in 0..n {
            for h1 in 0..m {
                for g2 in 0..n {
                    for h2 in 0..m {
                        table[g1 * m + h1][g2 * m + h2] =
                            self.mul(g1, g2) * m + other.mul(h1, h2);
                    }
                }
            }
        }
        let label = match (self.label(), other.label()) {
            (Some(a), Some(b)) => Some(format!("{a} x {b}")),
            _ => None,
        };
        let product = FiniteGroup::from_table_unchecked(order, table, label);
        let incl_left = crate::hom::GroupHom::new_unchecked(
            self.clone(),
            product.clone(),
            (0..n).map(|g| g * m).collect(),
        );
        let incl_right = crate::hom::GroupHom::new_unchecked(
            other.clone(),
            product.clone(),
            (0..m).collect(),
        );
        let proj_left = crate::hom::GroupHom::new_unchecked(
            product.clone(),
            self.clone(),
            (0..order).map(|e| e / m).collect(),
        );
        let proj_right = crate::hom::GroupHom::new_unchecked(
            product.clone(),
            other.clone(),
            (0..order).map(|e| e % m).collect(),
        );
        Ok(DirectProduct {
            group: product,
            inclusions: [incl_left, incl_right],
            projections: [proj_left, proj_right],
        })
    }

    /// Quotient by a normal subgroup. Cosets are indexed in order of first
    /// appearance while scanning elements ascending, so the coset N itself is
    /// the identity.
    pub fn quotient(&self, n: &NormalSubgroup) -> Result<(FiniteGroup, crate::hom::GroupHom)> {
        if n.parent() != self {
            return Err(Error::SourceTargetMismatch);
        }
        let order = self.order();
        let mut coset_of = vec![usize::MAX; order];
        let mut reps: Vec<Elem> = Vec::new();
        for g in 0..order {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(g);
            for &m in n.members() {
                coset_of[self.mul(g, m)] = idx;
            }
        }
        let q = reps.len();
        let mut table = vec![vec![0usize; q]; q];
        for a in 0..q {
            for b in 0..q {
                table[a][b] = coset_of[self.mul(reps[a], reps[b])];
            }
        }
        let label = self.label().map(|l| format!("{l} / N{}", n.order()));
        let quot = FiniteGroup::from_table_unchecked(q, table, label);
        let proj = crate::hom::GroupHom::new_unchecked(self.clone(), quot.clone(), coset_of);
        Ok((quot, proj))
    }
}

/// A direct product together with its canonical inclusions and projections.
pub struct DirectProduct {
    pub group: FiniteGroup,
    pub inclusions: [crate::hom::GroupHom; 2],
    pub projections: [crate::hom::GroupHom; 2],
}

/// A subgroup, stored as a sorted member list inside its parent.
#[derive(Clone, PartialEq, Eq)]
pub struct Subgroup {
    parent: FiniteGroup,
    members: Vec<Elem>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order={}, members={:?})", self.order(), self.members)
    }
}

impl Subgroup {
    pub fn new(parent: FiniteGroup, mut members: Vec<Elem>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.binary_search(&0).is_err() {
            return Err(Error::NotAGroup("subgroup must contain the identity".into()));
        }
        if let Some(&m) = members.iter().find(|&&m| m >= parent.order()) {
            return Err(Error::NotAGroup(format!("member {m} out of range")));
        }
        for &a in &members {
            if members.binary_search(&parent.inverse(a)).is_err() {
                return Err(Error::NotAGroup(format!(
                    "subgroup not closed under inverse at {a}"
                )));
            }
            for &b in &members {
                if members.binary_search(&parent.mul(a, b)).is_err() {
                    return Err(Error::NotAGroup(format!(
                        "subgroup not closed under multiplication at ({a},{b})"
                    )));
                }
            }
        }
        Ok(Subgroup { parent, members })
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.members.binary_search(&e).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.parent.order()
    }

    pub fn is_normal(&self) -> bool {
        self.parent.elements().all(|g| {
            self.members
                .iter()
                .all(|&m| self.contains(self.parent.conjugate(g, m)))
        })
    }

    /// Extracts the subgroup as a standalone group. Returns the group and the
    /// member list mapping its element indices back to parent indices (the
    /// members are sorted, so index 0 is the identity).
    pub fn as_group(&self) -> (FiniteGroup, Vec<Elem>) {
        let k = self.members.len();
        let pos: HashMap<Elem, usize> = self
            .members
            .iter()
            .enumerate()
            .map(|(i, &m)| (m, i))
            .collect();
        let mut table = vec![vec![0usize; k]; k];
        for i in 0..k {
            for j in 0..k {
                table[i][j] = pos[&self.parent.mul(self.members[i], self.members[j])];
            }
        }
        (
            FiniteGroup::from_table_unchecked(k, table, None),
            self.members.clone(),
        )
    }

    pub fn intersects_trivially(&self, other: &Subgroup) -> bool {
        let small = if self.order() <= other.order() { self } else { other };
        let big = if self.order() <= other.order() { other } else { self };
        small.members.iter().all(|&m| m == 0 || !big.contains(m))
    }
}

/// A subgroup verified to be normal in its parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalSubgroup(Subgroup);

impl NormalSubgroup {
    pub fn new(sub: Subgroup) -> Result<Self> {
        if !sub.is_normal() {
            return Err(Error::NotNormal);
        }
        Ok(NormalSubgroup(sub))
    }

    pub fn from_members(parent: FiniteGroup, members: Vec<Elem>) -> Result<Self> {
        Self::new(Subgroup::new(parent, members)?)
    }

    pub(crate) fn new_unchecked(sub: Subgroup) -> Self {
        debug_assert!(sub.is_normal());
        NormalSubgroup(sub)
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.0
    }

    pub fn into_subgroup(self) -> Subgroup {
        self.0
    }
}

impl Deref for NormalSubgroup {
    type Target = Subgroup;
    fn deref(&self) -> &Subgroup {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{named_group, NamedGroupSpec};

    fn c(n: usize) -> FiniteGroup {
        named_group(&NamedGroupSpec::Cyclic(n)).unwrap()
    }

    fn s3() -> FiniteGroup {
        named_group(&NamedGroupSpec::Symmetric(3)).unwrap()
    }

    #[test]
    fn trivial_group_from_table() {
        let g = FiniteGroup::from_table(1, vec![vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn c2_from_table() {
        let g = FiniteGroup::from_table(2, vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.element_order(1), 2);
    }

    #[test]
    fn c3_from_table_is_validated() {
        let g =
            FiniteGroup::from_table(3, vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.inverse(1), 2);
    }

    #[test]
    fn broken_identity_rejected() {
        let err = FiniteGroup::from_table(2, vec![vec![1, 0], vec![0, 1]]).unwrap_err();
        assert!(err.to_string().contains("identity"));
    }

    #[test]
    fn non_associative_latin_square_rejected() {
        // Order-5 Latin square with identity row/column that is not a group.
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table(5, table).unwrap_err();
        assert!(err.to_string().contains("associativity"), "{err}");
    }

    #[test]
    fn permutation_closure_three_cycle() {
        let g = FiniteGroup::from_permutations(3, &[vec![1, 2, 0]]).unwrap();
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn permutation_closure_symmetric_3() {
        let g = FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![0, 2, 1]]).unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn permutation_closure_four_cycle() {
        let g = FiniteGroup::from_permutations(4, &[vec![1, 2, 3, 0]]).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.element_order(1), 4);
    }

    #[test]
    fn permutation_rejects_non_bijection() {
        let err = FiniteGroup::from_permutations(3, &[vec![1, 1, 0]]).unwrap_err();
        assert!(matches!(err, Error::NotAPermutation(_)));
    }

    #[test]
    fn permutation_budget_exceeded() {
        let err =
            FiniteGroup::from_permutations_budgeted(3, &[vec![1, 0, 2], vec![0, 2, 1]], 4)
                .unwrap_err();
        assert!(matches!(err, Error::OrderBudgetExceeded { .. }));
    }

    #[test]
    fn product_c2_c3_element_orders() {
        let p = c(2).direct_product(&c(3)).unwrap();
        assert_eq!(p.group.order(), 6);
        let mut hist = std::collections::BTreeMap::new();
        for e in p.group.elements() {
            *hist.entry(p.group.element_order(e)).or_insert(0usize) += 1;
        }
        assert_eq!(hist, [(1, 1), (2, 1), (3, 2), (6, 2)].into_iter().collect());
        // pi_i o psi_i = identity
        for i in 0..2 {
            let comp = p.projections[i].compose(&p.inclusions[i]).unwrap();
            assert!(comp.is_identity());
        }
    }

    #[test]
    fn product_with_trivial_is_same_order() {
        let t = named_group(&NamedGroupSpec::Trivial).unwrap();
        let p = t.direct_product(&s3()).unwrap();
        assert_eq!(p.group.order(), 6);
        assert!(crate::iso::find_isomorphism(&p.group, &s3(), 1 << 20)
            .unwrap()
            .is_some());
    }

    #[test]
    fn product_c2_c2_all_involutions() {
        let p = c(2).direct_product(&c(2)).unwrap();
        assert!(p
            .group
            .elements()
            .skip(1)
            .all(|e| p.group.element_order(e) == 2));
    }

    #[test]
    fn conjugacy_classes_abelian_singletons() {
        assert!(c(6).conjugacy_classes().iter().all(|c| c.len() == 1));
    }

    #[test]
    fn conjugacy_classes_s3() {
        let mut sizes: Vec<usize> = s3().conjugacy_classes().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn conjugacy_classes_q8() {
        let q8 = named_group(&NamedGroupSpec::Quaternion(8)).unwrap();
        let mut sizes: Vec<usize> = q8.conjugacy_classes().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn normal_subgroups_c2() {
        assert_eq!(c(2).normal_subgroups().len(), 2);
    }

    #[test]
    fn normal_subgroups_s3() {
        let subs = s3().normal_subgroups();
        let orders: Vec<usize> = subs.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 3, 6]);
    }

    #[test]
    fn normal_subgroups_c2xc2() {
        let v4 = c(2).direct_product(&c(2)).unwrap().group;
        assert_eq!(v4.normal_subgroups().len(), 5);
    }

    #[test]
    fn quotient_by_full_is_trivial() {
        let g = s3();
        let (q, _) = g.quotient(&g.full_subgroup()).unwrap();
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn quotient_c6_by_c3_is_c2() {
        let g = c(6);
        let n = NormalSubgroup::from_members(g.clone(), vec![0, 2, 4]).unwrap();
        let (q, proj) = g.quotient(&n).unwrap();
        assert_eq!(q.order(), 2);
        assert!(proj.is_surjective());
        // preimage of the trivial subgroup is exactly N
        let ker = proj.kernel();
        assert_eq!(ker.members(), n.members());
    }

    #[test]
    fn quotient_q8_by_center_is_klein() {
        let q8 = named_group(&NamedGroupSpec::Quaternion(8)).unwrap();
        let center = NormalSubgroup::from_members(q8.clone(), q8.center_members()).unwrap();
        assert_eq!(center.order(), 2);
        let (q, _) = q8.quotient(&center).unwrap();
        let v4 = c(2).direct_product(&c(2)).unwrap().group;
        assert_eq!(crate::iso::fingerprint(&q), crate::iso::fingerprint(&v4));
    }

    #[test]
    fn verbal_squares_of_c6() {
        let v = c(6).verbal_power_subgroup(2);
        assert_eq!(v.order(), 3);
    }

    #[test]
    fn verbal_exponent_one_is_whole_group() {
        let g = s3();
        assert_eq!(g.verbal_power_subgroup(1).order(), 6);
    }

    #[test]
    fn verbal_cubes_of_s3_generate_s3() {
        // Cubes of transpositions are the transpositions themselves, which
        // generate all of S3.
        let v = s3().verbal_power_subgroup(3);
        assert_eq!(v.order(), 6);
    }

    #[test]
    fn minimal_generating_set_generates() {
        for g in [c(12), s3(), named_group(&NamedGroupSpec::Dihedral(4)).unwrap()] {
            let gens = g.minimal_generating_set();
            assert_eq!(g.generated_members(&gens).len(), g.order());
        }
    }
}
