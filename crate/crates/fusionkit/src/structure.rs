//! Structural invariants of a fusion ring: the subring lattice (pointed
//! part, adjoint, commutators), gradings and the universal grading,
//! invertible-action orbits, the nilpotency series, Deligne products and
//! their factorizations.

use crate::exact::AlgebraicReal;
use crate::group::FiniteGroup;
use crate::ring::{CoeffMap, FusionRing};
use crate::{Error, Result};
use std::collections::BTreeSet;

/// A dual-closed, fusion-closed subset of basis indices containing the unit.
/// Subrings are index sets over a fixed parent ring; [`Subring::as_ring`]
/// re-indexes into a standalone ring.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Subring {
    indices: Vec<usize>, // sorted, starts with 0
}

impl Subring {
    pub fn new(ring: &FusionRing, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = indices.into_iter().collect();
        if !set.contains(&0) {
            return Err(Error::InvalidArgument("subring must contain the unit".into()));
        }
        if set.iter().any(|&i| i >= ring.rank()) {
            return Err(Error::IndexOutOfRange {
                index: *set.iter().max().unwrap(),
                rank: ring.rank(),
            });
        }
        for &i in &set {
            if !set.contains(&ring.dual(i)) {
                return Err(Error::InvalidArgument(format!(
                    "subring not closed under duality at {i}"
                )));
            }
            for &j in &set {
                for k in ring.support(i, j) {
                    if !set.contains(&k) {
                        return Err(Error::InvalidArgument(format!(
                            "subring not closed under fusion at ({i}, {j}) -> {k}"
                        )));
                    }
                }
            }
        }
        Ok(Subring {
            indices: set.into_iter().collect(),
        })
    }

    pub(crate) fn from_sorted_unchecked(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(indices.first(), Some(&0));
        Subring { indices }
    }

    pub fn trivial() -> Self {
        Subring { indices: vec![0] }
    }

    pub fn whole(ring: &FusionRing) -> Self {
        Subring {
            indices: (0..ring.rank()).collect(),
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        false // always contains the unit
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.indices.len() == 1
    }

    pub fn is_whole(&self, ring: &FusionRing) -> bool {
        self.indices.len() == ring.rank()
    }

    pub fn is_pointed(&self, ring: &FusionRing) -> bool {
        self.indices.iter().all(|&i| ring.is_invertible(i))
    }

    /// Exact sum of squared dimensions over the members.
    pub fn fpdim(&self, ring: &FusionRing) -> Result<AlgebraicReal> {
        let mut acc = AlgebraicReal::zero();
        for &i in &self.indices {
            acc = acc.add(&ring.fpdim_object(i)?.square());
        }
        Ok(acc)
    }

    /// Export as a standalone ring; returns the ring and the index map
    /// (new index -> parent index).
    pub fn as_ring(&self, ring: &FusionRing) -> Result<(FusionRing, Vec<usize>)> {
        let map = self.indices.clone();
        let pos = |parent: usize| map.binary_search(&parent).unwrap();
        let labels = map.iter().map(|&i| ring.label(i).to_string()).collect();
        let dual = map.iter().map(|&i| pos(ring.dual(i))).collect();
        let mut coeffs = CoeffMap::new();
        for (a, &i) in map.iter().enumerate() {
            for (b, &j) in map.iter().enumerate() {
                for k in ring.support(i, j) {
                    coeffs.insert((a, b, pos(k)), ring.n(i, j, k));
                }
            }
        }
        Ok((FusionRing::new(labels, dual, coeffs)?, map))
    }

    pub fn intersect(&self, other: &Subring) -> Subring {
        Subring {
            indices: self
                .indices
                .iter()
                .copied()
                .filter(|i| other.contains(*i))
                .collect(),
        }
    }
}

impl FusionRing {
    /// Smallest subring containing the seed: closure under duality and
    /// fusion support.
    pub fn subring_generated(&self, seed: &[usize]) -> Subring {
        let mut set: BTreeSet<usize> = [0].into_iter().collect();
        set.extend(seed.iter().copied());
        loop {
            let mut added = Vec::new();
            for &i in &set {
                if !set.contains(&self.dual(i)) {
                    added.push(self.dual(i));
                }
                for &j in &set {
                    for k in self.support(i, j) {
                        if !set.contains(&k) {
                            added.push(k);
                        }
                    }
                }
            }
            if added.is_empty() {
                break;
            }
            set.extend(added);
        }
        Subring {
            indices: set.into_iter().collect(),
        }
    }

    /// The largest pointed subring: all invertible indices.
    pub fn pointed_part(&self) -> Subring {
        Subring {
            indices: self.invertibles(),
        }
    }

    /// Subring generated by the supports of i (x) i* over all basis elements.
    pub fn adjoint_subring(&self) -> Subring {
        let mut seed = Vec::new();
        for i in 0..self.rank() {
            seed.extend(self.support(i, self.dual(i)));
        }
        self.subring_generated(&seed)
    }

    /// Subring generated by all i whose full support of i (x) i* lies in `d`.
    pub fn commutator_subring(&self, d: &Subring) -> Subring {
        let seed: Vec<usize> = (0..self.rank())
            .filter(|&i| self.support(i, self.dual(i)).iter().all(|&k| d.contains(k)))
            .collect();
        self.subring_generated(&seed)
    }

    /// Orbit and stabilizer of a basis element under left tensoring by
    /// invertibles.
    pub fn orbit_stabilizer(&self, x: usize) -> Result<OrbitData> {
        if x >= self.rank() {
            return Err(Error::IndexOutOfRange {
                index: x,
                rank: self.rank(),
            });
        }
        let mut orbit = BTreeSet::new();
        let mut stabilizer = Vec::new();
        for g in self.invertibles() {
            let support = self.support(g, x);
            debug_assert_eq!(support.len(), 1);
            let image = support[0];
            orbit.insert(image);
            if image == x {
                stabilizer.push(g);
            }
        }
        Ok(OrbitData {
            target: x,
            orbit: orbit.into_iter().collect(),
            stabilizer,
        })
    }
}

/// Orbit of a basis element under the invertibles, with its stabilizer.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitData {
    pub target: usize,
    pub orbit: Vec<usize>,
    pub stabilizer: Vec<usize>,
}

/// A grading: a finite group together with an assignment of basis indices
/// to group elements, compatible with fusion.
#[derive(Clone, Debug)]
pub struct Grading {
    pub group: FiniteGroup,
    pub assignment: Vec<usize>,
}

impl Grading {
    pub fn is_faithful(&self) -> bool {
        let mut seen = vec![false; self.group.order()];
        for &g in &self.assignment {
            seen[g] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn component(&self, g: usize) -> Vec<usize> {
        self.assignment
            .iter()
            .enumerate()
            .filter(|(_, &a)| a == g)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn identity_component(&self) -> Subring {
        Subring::from_sorted_unchecked(self.component(0))
    }

    /// Check the grading axioms against a ring; empty report means valid.
    pub fn check(&self, ring: &FusionRing) -> Vec<String> {
        let mut out = Vec::new();
        if self.assignment.len() != ring.rank() {
            out.push("assignment length differs from rank".into());
            return out;
        }
        if self.assignment[0] != 0 {
            out.push("unit must sit in the identity component".into());
        }
        for i in 0..ring.rank() {
            let expected = self.group.inverse(self.assignment[i]);
            if self.assignment[ring.dual(i)] != expected {
                out.push(format!("dual of {i} leaves its inverse component"));
            }
        }
        for i in 0..ring.rank() {
            for j in 0..ring.rank() {
                let target = self.group.mul(self.assignment[i], self.assignment[j]);
                for k in ring.support(i, j) {
                    if self.assignment[k] != target {
                        out.push(format!("product ({i}, {j}) -> {k} leaves its component"));
                    }
                }
            }
        }
        out
    }

    /// Exact dimension of one component: sum of squared dimensions there.
    pub fn component_fpdim(&self, ring: &FusionRing, g: usize) -> Result<AlgebraicReal> {
        let mut acc = AlgebraicReal::zero();
        for i in self.component(g) {
            acc = acc.add(&ring.fpdim_object(i)?.square());
        }
        Ok(acc)
    }
}

impl FusionRing {
    /// The universal grading: components are the orbits of right tensoring
    /// by the adjoint subring, the group law is induced by fusion, and the
    /// identity component is the adjoint subring itself.
    pub fn universal_grading(&self) -> Result<Grading> {
        let adjoint = self.adjoint_subring();
        let r = self.rank();
        // class of i: everything reachable in i (x) A, A in the adjoint.
        let mut class_sets: Vec<BTreeSet<usize>> = Vec::new();
        let mut class_of = vec![usize::MAX; r];
        for i in 0..r {
            if class_of[i] != usize::MAX {
                continue;
            }
            let mut set = BTreeSet::new();
            for &a in adjoint.indices() {
                set.extend(self.support(i, a));
            }
            if !set.contains(&i) {
                return Err(Error::InconsistentGrading(format!(
                    "element {i} is not in its own adjoint orbit"
                )));
            }
            for &m in &set {
                if class_of[m] != usize::MAX {
                    return Err(Error::InconsistentGrading(format!(
                        "adjoint orbits of {i} and {m} overlap without matching"
                    )));
                }
            }
            let id = class_sets.len();
            for &m in &set {
                class_of[m] = id;
            }
            class_sets.push(set);
        }
        // identity class (containing 0) goes first; others keep min-index order
        let id_class = class_of[0];
        let mut order: Vec<usize> = (0..class_sets.len()).collect();
        order.sort_by_key(|&c| (c != id_class, *class_sets[c].iter().next().unwrap()));
        let mut renumber = vec![0usize; class_sets.len()];
        for (new, &old) in order.iter().enumerate() {
            renumber[old] = new;
        }
        let class_of: Vec<usize> = class_of.into_iter().map(|c| renumber[c]).collect();
        let classes: Vec<Vec<usize>> = order
            .iter()
            .map(|&old| class_sets[old].iter().copied().collect())
            .collect();
        let n = classes.len();
        // induced law: class(i) * class(j) = class of anything in supp(i, j),
        // checked for well-definedness over every representative pair.
        let mut table = vec![vec![usize::MAX; n]; n];
        for (c1, members1) in classes.iter().enumerate() {
            for (c2, members2) in classes.iter().enumerate() {
                let mut target = usize::MAX;
                for &i in members1 {
                    for &j in members2 {
                        for k in self.support(i, j) {
                            let c = class_of[k];
                            if target == usize::MAX {
                                target = c;
                            } else if target != c {
                                return Err(Error::InconsistentGrading(format!(
                                    "product of components {c1} and {c2} is not a single component"
                                )));
                            }
                        }
                    }
                }
                if target == usize::MAX {
                    return Err(Error::InconsistentGrading(format!(
                        "empty product of components {c1} and {c2}"
                    )));
                }
                table[c1][c2] = target;
            }
        }
        let labels = (0..n).map(|i| format!("u{i}")).collect();
        let group = FiniteGroup::new("U", labels, table)
            .map_err(|e| Error::InconsistentGrading(format!("induced law is not a group: {e}")))?;
        let grading = Grading {
            group,
            assignment: class_of,
        };
        debug_assert!(grading.check(self).is_empty());
        debug_assert_eq!(grading.identity_component(), adjoint);
        Ok(grading)
    }

    /// All faithful gradings by the given group: surjective homomorphisms
    /// from the universal grading group, composed with the universal
    /// assignment. Sorted by assignment for deterministic output.
    pub fn gradings_by_group(&self, h: &FiniteGroup) -> Result<Vec<Grading>> {
        let universal = self.universal_grading()?;
        let mut out: Vec<Grading> = universal
            .group
            .surjections(h)
            .into_iter()
            .map(|phi| Grading {
                group: h.clone(),
                assignment: universal.assignment.iter().map(|&u| phi[u]).collect(),
            })
            .collect();
        out.sort_by(|a, b| a.assignment.cmp(&b.assignment));
        Ok(out)
    }
}

/// The descending adjoint series with nilpotency flags.
#[derive(Clone, Debug)]
pub struct NilpotencySeries {
    /// whole ring, adjoint, adjoint-of-adjoint, ... until stable.
    pub members: Vec<Subring>,
    pub nilpotent: bool,
    /// Series length when nilpotent (0 for the trivial ring).
    pub class: Option<usize>,
    /// Nilpotent with every grading group along the series solvable, so the
    /// extension tower refines into cyclic steps of prime order.
    pub cyclically_nilpotent: bool,
}

impl FusionRing {
    pub fn nilpotency_series(&self) -> Result<NilpotencySeries> {
        let mut members = vec![Subring::whole(self)];
        let nilpotent = loop {
            let last = members.last().unwrap();
            if last.is_trivial() {
                break true;
            }
            let (sub, map) = last.as_ring(self)?;
            let adj = sub.adjoint_subring();
            let mapped: Vec<usize> = adj.indices().iter().map(|&i| map[i]).collect();
            let next = Subring::from_sorted_unchecked(mapped);
            let stalled = &next == last;
            members.push(next);
            if stalled {
                break false;
            }
        };
        let class = nilpotent.then(|| members.len() - 1);
        let mut cyclically = nilpotent;
        if nilpotent {
            for member in &members {
                if member.is_trivial() {
                    break;
                }
                let (sub, _) = member.as_ring(self)?;
                if !sub.universal_grading()?.group.is_solvable() {
                    cyclically = false;
                    break;
                }
            }
        }
        Ok(NilpotencySeries {
            members,
            nilpotent,
            class,
            cyclically_nilpotent: cyclically,
        })
    }
}

/// Ring-level Deligne tensor product: pair basis, componentwise duals,
/// product coefficients.
pub fn deligne_product(a: &FusionRing, b: &FusionRing) -> FusionRing {
    let (ra, rb) = (a.rank(), b.rank());
    let idx = |i: usize, j: usize| i * rb + j;
    let labels = (0..ra * rb)
        .map(|e| format!("{}*{}", a.label(e / rb), b.label(e % rb)))
        .collect();
    let dual = (0..ra * rb)
        .map(|e| idx(a.dual(e / rb), b.dual(e % rb)))
        .collect();
    let mut coeffs = CoeffMap::new();
    for (&(i1, j1, k1), &n1) in a.coeffs() {
        for (&(i2, j2, k2), &n2) in b.coeffs() {
            coeffs.insert((idx(i1, i2), idx(j1, j2), idx(k1, k2)), n1 * n2);
        }
    }
    FusionRing::new(labels, dual, coeffs).expect("product of well-formed rings is well-formed")
}

/// Every subring of the ring (exhaustive over closed subsets; desk scale).
pub fn all_subrings(ring: &FusionRing) -> Vec<Subring> {
    let r = ring.rank();
    assert!(r <= 20, "subring enumeration is desk-scale only");
    let others: Vec<usize> = (1..r).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << others.len()) {
        let mut indices = vec![0usize];
        for (bit, &i) in others.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                indices.push(i);
            }
        }
        if is_closed(ring, &indices) {
            out.push(Subring {
                indices,
            });
        }
    }
    out
}

fn is_closed(ring: &FusionRing, indices: &[usize]) -> bool {
    let set: BTreeSet<usize> = indices.iter().copied().collect();
    for &i in indices {
        if !set.contains(&ring.dual(i)) {
            return false;
        }
        for &j in indices {
            if ring.support(i, j).iter().any(|k| !set.contains(k)) {
                return false;
            }
        }
    }
    true
}

/// All unordered pairs (A, B) of proper nontrivial subrings certifying a
/// Deligne factorization: trivial intersection, multiplicative dimensions,
/// the pairing (a, b) -> the unique simple in supp(a (x) b) a bijection onto
/// the basis, and product coefficients matching componentwise.
pub fn factorizations(ring: &FusionRing) -> Result<Vec<(Subring, Subring)>> {
    let total = ring.fpdim_ring()?;
    let subrings = all_subrings(ring);
    let mut out = Vec::new();
    for (ai, a) in subrings.iter().enumerate() {
        if a.is_trivial() || a.is_whole(ring) {
            continue;
        }
        for b in subrings.iter().skip(ai + 1) {
            if b.is_trivial() || b.is_whole(ring) {
                continue;
            }
            if !a.intersect(b).is_trivial() {
                continue;
            }
            if a.len() * b.len() != ring.rank() {
                continue;
            }
            if a.fpdim(ring)?.mul(&b.fpdim(ring)?) != total {
                continue;
            }
            if certifies_factorization(ring, a, b) {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out.sort();
    Ok(out)
}

fn certifies_factorization(ring: &FusionRing, a: &Subring, b: &Subring) -> bool {
    let mut pair_of = vec![None; ring.rank()];
    for &x in a.indices() {
        for &y in b.indices() {
            // x (x) y must be a single simple with coefficient 1
            let support = ring.support(x, y);
            if support.len() != 1 {
                return false;
            }
            let k = support[0];
            if ring.n(x, y, k) != 1 {
                return false;
            }
            if pair_of[k].is_some() {
                return false;
            }
            pair_of[k] = Some((x, y));
        }
    }
    if pair_of.iter().any(Option::is_none) {
        return false;
    }
    // coefficients must multiply componentwise under the pairing
    let pair_of: Vec<(usize, usize)> = pair_of.into_iter().map(Option::unwrap).collect();
    for (k1, &(x1, y1)) in pair_of.iter().enumerate() {
        for (k2, &(x2, y2)) in pair_of.iter().enumerate() {
            for (k3, &(x3, y3)) in pair_of.iter().enumerate() {
                let expect = ring.n(x1, x2, x3) * ring.n(y1, y2, y3);
                if ring.n(k1, k2, k3) != expect {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{fibonacci_ring, group_ring, ising_ring, tambara_yamagami_ring};

    #[test]
    fn subring_generation_in_ising() {
        let ising = ising_ring();
        // X pulls in everything
        assert_eq!(ising.subring_generated(&[2]).indices(), &[0, 1, 2]);
        // the invertible g closes on {1, g}
        assert_eq!(ising.subring_generated(&[1]).indices(), &[0, 1]);
        // empty seed gives the trivial subring
        assert_eq!(ising.subring_generated(&[]).indices(), &[0]);
    }

    #[test]
    fn pointed_and_adjoint_parts() {
        let ty3 = tambara_yamagami_ring(&FiniteGroup::cyclic(3)).unwrap();
        assert_eq!(ty3.pointed_part().indices(), &[0, 1, 2]);
        assert_eq!(
            ty3.pointed_part().fpdim(&ty3).unwrap(),
            AlgebraicReal::from_integer(3)
        );
        let ising = ising_ring();
        assert_eq!(ising.adjoint_subring().indices(), &[0, 1]);
        let z4 = group_ring(&FiniteGroup::cyclic(4));
        assert_eq!(z4.adjoint_subring().indices(), &[0]);
        let fib = fibonacci_ring();
        assert_eq!(fib.adjoint_subring().indices(), &[0, 1]);
        assert_eq!(fib.pointed_part().indices(), &[0]);
    }

    #[test]
    fn commutator_examples() {
        let ising = ising_ring();
        let d = Subring::new(&ising, [0, 1]).unwrap();
        assert!(ising.commutator_subring(&d).is_whole(&ising));
        assert!(ising
            .commutator_subring(&Subring::whole(&ising))
            .is_whole(&ising));
        let ty4 = tambara_yamagami_ring(&FiniteGroup::cyclic(4)).unwrap();
        let com = ty4.commutator_subring(&Subring::trivial());
        assert_eq!(com.indices(), &[0, 1, 2, 3]);
    }

    #[test]
    fn universal_gradings() {
        let ising = ising_ring();
        let u = ising.universal_grading().unwrap();
        assert_eq!(u.group.order(), 2);
        assert!(u.is_faithful());
        assert_eq!(u.identity_component().indices(), &[0, 1]);
        assert_eq!(u.component(1), vec![2]);

        // group ring: universal grading group is the group itself
        let s3 = group_ring(&FiniteGroup::symmetric_3());
        let u = s3.universal_grading().unwrap();
        assert_eq!(u.group.order(), 6);
        assert!(!u.group.is_abelian());

        let ty4 = tambara_yamagami_ring(&FiniteGroup::cyclic(4)).unwrap();
        let u = ty4.universal_grading().unwrap();
        assert_eq!(u.group.order(), 2);
        assert_eq!(u.identity_component().indices(), &[0, 1, 2, 3]);
    }

    #[test]
    fn gradings_by_small_groups() {
        let ising = ising_ring();
        let z2 = FiniteGroup::cyclic(2);
        let z3 = FiniteGroup::cyclic(3);
        assert_eq!(ising.gradings_by_group(&z2).unwrap().len(), 1);
        assert_eq!(ising.gradings_by_group(&z3).unwrap().len(), 0);
        let v4 = group_ring(&FiniteGroup::direct_product(&z2, &z2));
        assert_eq!(v4.gradings_by_group(&z2).unwrap().len(), 3);
    }

    #[test]
    fn orbit_stabilizer_examples() {
        let ty4 = tambara_yamagami_ring(&FiniteGroup::cyclic(4)).unwrap();
        let od = ty4.orbit_stabilizer(4).unwrap();
        assert_eq!(od.stabilizer, vec![0, 1, 2, 3]);
        assert_eq!(od.orbit, vec![4]);
        let ising = ising_ring();
        let od = ising.orbit_stabilizer(2).unwrap();
        assert_eq!(od.stabilizer.len(), 2);
        // free transitive action on invertibles
        let od = ising.orbit_stabilizer(1).unwrap();
        assert_eq!(od.stabilizer, vec![0]);
        assert_eq!(od.orbit, vec![0, 1]);
        assert_eq!(od.orbit.len() * od.stabilizer.len(), 2);
    }

    #[test]
    fn nilpotency_series_examples() {
        let ising = ising_ring();
        let ns = ising.nilpotency_series().unwrap();
        assert!(ns.nilpotent);
        assert_eq!(ns.class, Some(2));
        assert_eq!(ns.members.len(), 3);
        assert!(ns.cyclically_nilpotent);

        let fib = fibonacci_ring();
        let ns = fib.nilpotency_series().unwrap();
        assert!(!ns.nilpotent);
        assert_eq!(ns.members.len(), 2);
        assert!(ns.members[1].is_whole(&fib));

        let z6 = group_ring(&FiniteGroup::cyclic(6));
        let ns = z6.nilpotency_series().unwrap();
        assert!(ns.nilpotent);
        assert_eq!(ns.class, Some(1));
    }

    #[test]
    fn deligne_product_types() {
        let z2 = group_ring(&FiniteGroup::cyclic(2));
        let ising = ising_ring();
        let prod = deligne_product(&z2, &ising);
        assert!(prod.is_valid());
        assert_eq!(prod.rank(), 6);
        assert_eq!(prod.fpdim_ring().unwrap(), AlgebraicReal::from_integer(8));
        let sig = prod.type_signature().unwrap();
        assert_eq!(sig.entries()[0], (AlgebraicReal::one(), 4));
        assert_eq!(
            sig.entries()[1],
            (AlgebraicReal::sqrt_integer(2).unwrap(), 2)
        );

        // trivial (x) R is R up to relabeling
        let trivial = group_ring(&FiniteGroup::trivial());
        let same = deligne_product(&trivial, &ising);
        assert_eq!(same.rank(), 3);
        assert_eq!(same.coeffs(), ising.coeffs());

        // Z2 (x) Z2 is the Klein four-group ring
        let v4 = deligne_product(&z2, &z2);
        assert!(v4.is_pointed());
        assert_eq!(v4.rank(), 4);
    }

    #[test]
    fn factorization_search() {
        let z2 = group_ring(&FiniteGroup::cyclic(2));
        let ising = ising_ring();
        let prod = deligne_product(&z2, &ising);
        let facts = factorizations(&prod).unwrap();
        // Besides the defining pair, the diagonal Z2 and the twisted Ising
        // copy also certify splittings: four pairs in total.
        assert_eq!(facts.len(), 4);
        for (a, b) in &facts {
            assert_eq!(a.len() * b.len(), 6);
            assert!(a.is_pointed(&prod) ^ b.is_pointed(&prod));
        }
        // the original factors are recovered
        let z2_factor = Subring::new(&prod, [0, 3]).unwrap();
        let ising_factor = Subring::new(&prod, [0, 1, 2]).unwrap();
        assert!(facts
            .iter()
            .any(|(a, b)| (a, b) == (&z2_factor, &ising_factor)
                || (b, a) == (&z2_factor, &ising_factor)));

        // Ising itself has no factorization
        assert!(factorizations(&ising).unwrap().is_empty());

        // Klein four-group ring splits in three ways
        let v4 = deligne_product(&z2, &z2);
        assert_eq!(factorizations(&v4).unwrap().len(), 3);
    }

    #[test]
    fn subring_closure_validation() {
        let ising = ising_ring();
        assert!(Subring::new(&ising, [0, 1]).is_ok());
        // {1, X} is not closed: X (x) X contains g
        assert!(Subring::new(&ising, [0, 2]).is_err());
        assert!(Subring::new(&ising, [1]).is_err());
    }
}
