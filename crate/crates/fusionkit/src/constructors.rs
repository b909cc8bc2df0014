//! Canonical ring families: group rings, Tambara-Yamagami rings, the Ising
//! ring, the Fibonacci ring, and recognizers for generalized
//! Tambara-Yamagami rings and prime-cyclic extensions of pointed rings.

use crate::group::FiniteGroup;
use crate::ring::{CoeffMap, FusionRing};
use crate::structure::{Grading, Subring};
use crate::{Error, Result};

/// The group ring of a finite group: basis G, products from the
/// multiplication table, duals from inversion.
pub fn group_ring(group: &FiniteGroup) -> FusionRing {
    let n = group.order();
    let labels = group.labels().to_vec();
    let dual = (0..n).map(|g| group.inverse(g)).collect();
    let mut coeffs = CoeffMap::new();
    for a in 0..n {
        for b in 0..n {
            coeffs.insert((a, b, group.mul(a, b)), 1);
        }
    }
    FusionRing::new(labels, dual, coeffs).expect("group rings are well-formed")
}

/// The Tambara-Yamagami ring of a finite abelian group A: basis A plus one
/// self-dual element X with a (x) X = X (x) a = X and X (x) X the sum of all
/// of A. Rejects non-abelian input.
pub fn tambara_yamagami_ring(group: &FiniteGroup) -> Result<FusionRing> {
    if !group.is_abelian() {
        return Err(Error::NonAbelianGroup);
    }
    let n = group.order();
    let x = n; // index of the non-invertible element
    let mut labels = group.labels().to_vec();
    labels.push("X".to_string());
    let mut dual: Vec<usize> = (0..n).map(|g| group.inverse(g)).collect();
    dual.push(x);
    let mut coeffs = CoeffMap::new();
    for a in 0..n {
        for b in 0..n {
            coeffs.insert((a, b, group.mul(a, b)), 1);
        }
        coeffs.insert((a, x, x), 1);
        coeffs.insert((x, a, x), 1);
        coeffs.insert((x, x, a), 1);
    }
    FusionRing::new(labels, dual, coeffs)
}

/// The Ising ring: the Tambara-Yamagami ring of Z2, with labels 1, g, X.
pub fn ising_ring() -> FusionRing {
    tambara_yamagami_ring(&FiniteGroup::cyclic(2)).expect("Z2 is abelian")
}

/// The Fibonacci ring: rank 2 with X (x) X = 1 + X.
pub fn fibonacci_ring() -> FusionRing {
    let mut coeffs = CoeffMap::new();
    coeffs.insert((0, 0, 0), 1);
    coeffs.insert((0, 1, 1), 1);
    coeffs.insert((1, 0, 1), 1);
    coeffs.insert((1, 1, 0), 1);
    coeffs.insert((1, 1, 1), 1);
    FusionRing::new(vec!["1".into(), "X".into()], vec![0, 1], coeffs)
        .expect("Fibonacci ring is well-formed")
}

/// Witness that a ring is a generalized Tambara-Yamagami ring: not pointed,
/// every product of two non-invertible basis elements supported entirely on
/// invertibles, all non-invertible stabilizers equal to a common subgroup N,
/// with the rank and dimension bookkeeping that family satisfies.
#[derive(Clone, Debug)]
pub struct GtyWitness {
    /// The common stabilizer N, as invertible indices.
    pub stabilizer: Vec<usize>,
    /// Invertible indices (the group of invertibles).
    pub invertibles: Vec<usize>,
    /// Number of non-invertible basis elements.
    pub noninvertible_count: usize,
}

/// Recognize a generalized Tambara-Yamagami ring. Returns the witness, or
/// `None` when the defining support condition fails or the structural
/// consistency checks (common stabilizer, rank and dimension counts) do not
/// hold.
pub fn is_generalized_ty(ring: &FusionRing) -> Option<GtyWitness> {
    let invertibles = ring.invertibles();
    let noninvertibles: Vec<usize> = (0..ring.rank())
        .filter(|&i| !ring.is_invertible(i))
        .collect();
    if noninvertibles.is_empty() {
        return None; // pointed rings are excluded by definition
    }
    // products of non-invertibles land in the invertibles
    for &x in &noninvertibles {
        for &y in &noninvertibles {
            if ring
                .support(x, y)
                .iter()
                .any(|&k| !ring.is_invertible(k))
            {
                return None;
            }
        }
    }
    // common stabilizer
    let mut stabilizer: Option<Vec<usize>> = None;
    for &x in &noninvertibles {
        let od = ring.orbit_stabilizer(x).ok()?;
        match &stabilizer {
            None => stabilizer = Some(od.stabilizer),
            Some(prev) if *prev == od.stabilizer => {}
            _ => return None,
        }
    }
    let stabilizer = stabilizer.unwrap();
    // rank = [G : N] (1 + |N|) and total dimension 2|G|
    let g = invertibles.len();
    let n = stabilizer.len();
    if n == 0 || g % n != 0 {
        return None;
    }
    if ring.rank() != (g / n) * (1 + n) {
        return None;
    }
    let total = ring.fpdim_ring().ok()?;
    if total.to_integer() != Some(num_bigint::BigInt::from(2 * g as u64)) {
        return None;
    }
    Some(GtyWitness {
        stabilizer,
        invertibles,
        noninvertible_count: noninvertibles.len(),
    })
}

/// A faithful grading by the cyclic group of prime order q whose identity
/// component is pointed, when one exists. Returns the grading and its
/// identity component.
pub fn zq_extension_witness(ring: &FusionRing, q: usize) -> Result<Option<(Grading, Subring)>> {
    if !is_prime(q) {
        return Err(Error::InvalidArgument(format!("{q} is not prime")));
    }
    let target = FiniteGroup::cyclic(q);
    for grading in ring.gradings_by_group(&target)? {
        let identity = grading.identity_component();
        if identity.is_pointed(ring) {
            return Ok(Some((grading, identity)));
        }
    }
    Ok(None)
}

pub(crate) fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::AlgebraicReal;
    use crate::group::abelian_groups_of_order;

    #[test]
    fn group_rings_are_pointed_with_group_dimension() {
        for g in [
            FiniteGroup::cyclic(2),
            FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)),
            FiniteGroup::symmetric_3(),
            FiniteGroup::dihedral_4(),
            FiniteGroup::quaternion_8(),
            FiniteGroup::cyclic(12),
        ] {
            let ring = group_ring(&g);
            assert!(ring.is_valid(), "{}", g.name());
            assert!(ring.is_pointed());
            assert_eq!(
                ring.fpdim_ring().unwrap(),
                AlgebraicReal::from_integer(g.order() as i64)
            );
        }
        assert!(!group_ring(&FiniteGroup::symmetric_3()).is_commutative());
    }

    #[test]
    fn ty_rings_up_to_order_8() {
        for order in 2..=8usize {
            for g in abelian_groups_of_order(order) {
                let ring = tambara_yamagami_ring(&g).unwrap();
                assert!(ring.is_valid(), "TY({})", g.name());
                let sig = ring.type_signature().unwrap();
                assert_eq!(sig.entries()[0], (AlgebraicReal::one(), order));
                assert_eq!(
                    sig.entries()[1],
                    (AlgebraicReal::sqrt_integer(order as u64).unwrap(), 1)
                );
                // the non-invertible is stabilized by everything
                let od = ring.orbit_stabilizer(order).unwrap();
                assert_eq!(od.stabilizer.len(), order);
            }
        }
        assert!(tambara_yamagami_ring(&FiniteGroup::symmetric_3()).is_err());
    }

    #[test]
    fn ising_is_ty_z2() {
        let ising = ising_ring();
        assert_eq!(ising.rank(), 3);
        assert_eq!(ising.labels(), &["1", "g", "X"]);
        assert_eq!(ising.n(2, 2, 0), 1);
        assert_eq!(ising.n(2, 2, 1), 1);
        assert_eq!(ising.fpdim_ring().unwrap(), AlgebraicReal::from_integer(4));
        let u = ising.universal_grading().unwrap();
        assert_eq!(u.group.order(), 2);
    }

    #[test]
    fn gty_recognizer() {
        for order in 2..=8usize {
            for g in abelian_groups_of_order(order) {
                let ring = tambara_yamagami_ring(&g).unwrap();
                let witness = is_generalized_ty(&ring).expect("TY rings are generalized TY");
                assert_eq!(witness.stabilizer.len(), order);
                assert_eq!(witness.noninvertible_count, 1);
                // generalized TY rings have universal grading group Z2
                let u = ring.universal_grading().unwrap();
                assert_eq!(u.group.order(), 2);
            }
        }
        assert!(is_generalized_ty(&fibonacci_ring()).is_none());
        assert!(is_generalized_ty(&group_ring(&FiniteGroup::cyclic(4))).is_none());
    }

    #[test]
    fn zq_witness_examples() {
        let ising = ising_ring();
        let w = zq_extension_witness(&ising, 2).unwrap().unwrap();
        assert_eq!(w.1.indices(), &[0, 1]);
        assert!(zq_extension_witness(&ising, 3).unwrap().is_none());
        assert!(zq_extension_witness(&ising, 4).is_err());

        let z4 = group_ring(&FiniteGroup::cyclic(4));
        let w = zq_extension_witness(&z4, 2).unwrap().unwrap();
        assert_eq!(w.1.indices(), &[0, 2]);
    }
}
