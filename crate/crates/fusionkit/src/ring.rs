//! The fusion-ring data model: sparse nonnegative integer structure
//! constants over a labeled basis with a duality involution, the axiom
//! validator, and exact Frobenius-Perron dimension arithmetic.

use crate::exact::{distinct_factors, AlgebraicReal, Matrix, Polynomial};
use crate::{Error, Result};
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;

/// Fusion coefficients are sparse: absent keys mean zero.
pub type CoeffMap = BTreeMap<(usize, usize, usize), u64>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FusionRing {
    labels: Vec<String>,
    dual: Vec<usize>,
    coeffs: CoeffMap,
    commutative: bool,
}

/// A violated fusion-ring axiom with a concrete witness.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AxiomViolation {
    /// N_{0j}^k or N_{j0}^k differs from delta_{jk}.
    Unit { i: usize, j: usize, k: usize },
    /// dual(0) != 0, dual not an involution, or N_{ij}^0 != delta_{j, i*}.
    Duality { i: usize, j: usize },
    /// N_{ij}^k != N_{i* k}^j or N_{ij}^k != N_{k j*}^i.
    FrobeniusReciprocity { i: usize, j: usize, k: usize },
    /// sum_m N_{ij}^m N_{mk}^l != sum_m N_{jk}^m N_{im}^l.
    Associativity { i: usize, j: usize, k: usize, l: usize },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::Unit { i, j, k } => {
                write!(f, "unit axiom fails at ({i}, {j}, {k})")
            }
            AxiomViolation::Duality { i, j } => {
                write!(f, "duality axiom fails at ({i}, {j}, 0)")
            }
            AxiomViolation::FrobeniusReciprocity { i, j, k } => {
                write!(f, "Frobenius reciprocity fails at ({i}, {j}, {k})")
            }
            AxiomViolation::Associativity { i, j, k, l } => {
                write!(f, "associativity fails at ({i}, {j}, {k}, {l})")
            }
        }
    }
}

impl FusionRing {
    /// Structural construction. Axioms are checked separately by
    /// [`FusionRing::validate`]; only malformed shapes are rejected here.
    pub fn new(labels: Vec<String>, dual: Vec<usize>, coeffs: CoeffMap) -> Result<Self> {
        let rank = labels.len();
        if rank == 0 {
            return Err(Error::InvalidArgument("rank must be at least 1".into()));
        }
        if dual.len() != rank {
            return Err(Error::InvalidArgument(
                "dual involution length does not match rank".into(),
            ));
        }
        if dual.iter().any(|&d| d >= rank) {
            return Err(Error::IndexOutOfRange {
                index: *dual.iter().find(|&&d| d >= rank).unwrap(),
                rank,
            });
        }
        {
            let mut sorted = labels.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != rank {
                return Err(Error::InvalidArgument("labels must be distinct".into()));
            }
        }
        for &(i, j, k) in coeffs.keys() {
            if i >= rank || j >= rank || k >= rank {
                return Err(Error::IndexOutOfRange {
                    index: i.max(j).max(k),
                    rank,
                });
            }
        }
        let coeffs: CoeffMap = coeffs.into_iter().filter(|&(_, n)| n != 0).collect();
        let commutative = {
            let mut ok = true;
            'outer: for (&(i, j, k), &n) in &coeffs {
                if coeffs.get(&(j, i, k)).copied().unwrap_or(0) != n {
                    ok = false;
                    break 'outer;
                }
            }
            ok
        };
        Ok(FusionRing {
            labels,
            dual,
            coeffs,
            commutative,
        })
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    /// The structure constant N_{ij}^k.
    pub fn n(&self, i: usize, j: usize, k: usize) -> u64 {
        self.coeffs.get(&(i, j, k)).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &CoeffMap {
        &self.coeffs
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    /// Basis indices in the support of the product i (x) j.
    pub fn support(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.rank()).filter(|&k| self.n(i, j, k) > 0).collect()
    }

    // -- axiom validation ---------------------------------------------------

    /// Check every fusion-ring axiom; an empty report means the ring is
    /// valid. Violations are data, not errors.
    pub fn validate(&self) -> Vec<AxiomViolation> {
        let r = self.rank();
        let mut out = Vec::new();
        // unit
        for j in 0..r {
            for k in 0..r {
                let delta = u64::from(j == k);
                if self.n(0, j, k) != delta {
                    out.push(AxiomViolation::Unit { i: 0, j, k });
                }
                if self.n(j, 0, k) != delta {
                    out.push(AxiomViolation::Unit { i: j, j: 0, k });
                }
            }
        }
        // duality
        if self.dual[0] != 0 {
            out.push(AxiomViolation::Duality { i: 0, j: 0 });
        }
        for i in 0..r {
            if self.dual[self.dual[i]] != i {
                out.push(AxiomViolation::Duality { i, j: self.dual[i] });
            }
        }
        for i in 0..r {
            for j in 0..r {
                let delta = u64::from(j == self.dual[i]);
                if self.n(i, j, 0) != delta {
                    out.push(AxiomViolation::Duality { i, j });
                }
            }
        }
        // Frobenius reciprocity
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    let n = self.n(i, j, k);
                    if n != self.n(self.dual[i], k, j) || n != self.n(k, self.dual[j], i) {
                        out.push(AxiomViolation::FrobeniusReciprocity { i, j, k });
                    }
                }
            }
        }
        // associativity
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    for l in 0..r {
                        let lhs: u64 = (0..r).map(|m| self.n(i, j, m) * self.n(m, k, l)).sum();
                        let rhs: u64 = (0..r).map(|m| self.n(j, k, m) * self.n(i, m, l)).sum();
                        if lhs != rhs {
                            out.push(AxiomViolation::Associativity { i, j, k, l });
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    // -- dimensions -----------------------------------------------------------

    /// The matrix of left multiplication by basis element i:
    /// entry (k, j) is N_{ij}^k.
    pub fn fusion_matrix(&self, i: usize) -> Result<Matrix<BigInt>> {
        let r = self.rank();
        if i >= r {
            return Err(Error::IndexOutOfRange { index: i, rank: r });
        }
        Ok(Matrix::from_fn(r, r, |k, j| BigInt::from(self.n(i, j, k))))
    }

    /// The Frobenius-Perron dimension of basis element i: the largest real
    /// root of the characteristic polynomial of its fusion matrix, certified
    /// by exact comparison of isolating intervals across all irreducible
    /// factors.
    pub fn fpdim_object(&self, i: usize) -> Result<AlgebraicReal> {
        let cp = self.fusion_matrix(i)?.char_poly();
        Ok(largest_real_root(&cp))
    }

    /// All object dimensions at once.
    pub fn fpdims(&self) -> Result<Vec<AlgebraicReal>> {
        (0..self.rank()).map(|i| self.fpdim_object(i)).collect()
    }

    /// The global dimension: the exact sum of squared object dimensions.
    pub fn fpdim_ring(&self) -> Result<AlgebraicReal> {
        let mut acc = AlgebraicReal::zero();
        for i in 0..self.rank() {
            let d = self.fpdim_object(i)?;
            acc = acc.add(&d.square());
        }
        Ok(acc)
    }

    /// Basis element i is invertible exactly when i (x) i* is the unit alone.
    pub fn is_invertible(&self, i: usize) -> bool {
        let total: u64 = (0..self.rank()).map(|k| self.n(i, self.dual[i], k)).sum();
        total == 1 && self.n(i, self.dual[i], 0) == 1
    }

    pub fn invertibles(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.is_invertible(i)).collect()
    }

    pub fn is_pointed(&self) -> bool {
        self.invertibles().len() == self.rank()
    }

    /// Dimensions grouped and sorted ascending, with multiplicities.
    pub fn type_signature(&self) -> Result<TypeSignature> {
        let mut dims = self.fpdims()?;
        dims.sort();
        let mut entries: Vec<(AlgebraicReal, usize)> = Vec::new();
        for d in dims {
            match entries.last_mut() {
                Some((prev, n)) if *prev == d => *n += 1,
                _ => entries.push((d, 1)),
            }
        }
        TypeSignature::new(entries)
    }

    pub fn integrality(&self) -> Result<Integrality> {
        let mut all_integers = true;
        for i in 0..self.rank() {
            if self.fpdim_object(i)?.to_integer().is_none() {
                all_integers = false;
                break;
            }
        }
        if all_integers {
            return Ok(Integrality::Integral);
        }
        if self.fpdim_ring()?.to_integer().is_some() {
            Ok(Integrality::WeaklyIntegralNotIntegral)
        } else {
            Ok(Integrality::NonWeaklyIntegral)
        }
    }

    /// Relabel the basis by a permutation: new index a plays the role of
    /// old index perm[a].
    pub fn relabeled(&self, perm: &[usize]) -> Result<FusionRing> {
        let r = self.rank();
        if perm.len() != r {
            return Err(Error::InvalidArgument("permutation length mismatch".into()));
        }
        let mut inverse = vec![usize::MAX; r];
        for (new, &old) in perm.iter().enumerate() {
            if old >= r || inverse[old] != usize::MAX {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
            inverse[old] = new;
        }
        let labels = perm.iter().map(|&old| self.labels[old].clone()).collect();
        let dual = perm.iter().map(|&old| inverse[self.dual[old]]).collect();
        let mut coeffs = CoeffMap::new();
        for (&(i, j, k), &n) in &self.coeffs {
            coeffs.insert((inverse[i], inverse[j], inverse[k]), n);
        }
        FusionRing::new(labels, dual, coeffs)
    }
}

/// The largest real root of an integer polynomial, as a certified
/// algebraic real (the relevant irreducible factor plus isolating interval).
pub(crate) fn largest_real_root(poly: &Polynomial<BigInt>) -> AlgebraicReal {
    let mut best: Option<AlgebraicReal> = None;
    for factor in distinct_factors(poly) {
        for root in AlgebraicReal::roots_of_irreducible(&factor) {
            best = match best {
                None => Some(root),
                Some(cur) => {
                    if root.compare(&cur) == std::cmp::Ordering::Greater {
                        Some(root)
                    } else {
                        Some(cur)
                    }
                }
            };
        }
    }
    best.expect("a nonnegative integer matrix has a real eigenvalue")
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Integrality {
    Integral,
    WeaklyIntegralNotIntegral,
    NonWeaklyIntegral,
}

impl fmt::Display for Integrality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Integrality::Integral => write!(f, "integral"),
            Integrality::WeaklyIntegralNotIntegral => write!(f, "weakly integral, not integral"),
            Integrality::NonWeaklyIntegral => write!(f, "not weakly integral"),
        }
    }
}

/// Dimensions with multiplicities, ascending, starting at 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TypeSignature {
    entries: Vec<(AlgebraicReal, usize)>,
}

impl TypeSignature {
    pub fn new(entries: Vec<(AlgebraicReal, usize)>) -> Result<Self> {
        let Some(first) = entries.first() else {
            return Err(Error::InvalidArgument("empty type signature".into()));
        };
        if first.0 != AlgebraicReal::one() {
            return Err(Error::InvalidArgument(
                "type signature must start at dimension 1".into(),
            ));
        }
        for pair in entries.windows(2) {
            if pair[0].0.compare(&pair[1].0) != std::cmp::Ordering::Less {
                return Err(Error::InvalidArgument(
                    "type signature dimensions must be strictly increasing".into(),
                ));
            }
        }
        if entries.iter().any(|(_, n)| *n == 0) {
            return Err(Error::InvalidArgument(
                "type signature multiplicities must be positive".into(),
            ));
        }
        Ok(TypeSignature { entries })
    }

    pub fn entries(&self) -> &[(AlgebraicReal, usize)] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        self.entries.iter().map(|(_, n)| n).sum()
    }

    /// sum n_i d_i^2, exactly.
    pub fn global_dimension(&self) -> AlgebraicReal {
        let mut acc = AlgebraicReal::zero();
        for (d, n) in &self.entries {
            let sq = d.square();
            for _ in 0..*n {
                acc = acc.add(&sq);
            }
        }
        acc
    }

    /// The flat list of dimensions in basis order (ascending blocks).
    pub fn dims(&self) -> Vec<AlgebraicReal> {
        let mut out = Vec::with_capacity(self.rank());
        for (d, n) in &self.entries {
            for _ in 0..*n {
                out.push(d.clone());
            }
        }
        out
    }
}

impl fmt::Display for TypeSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, (d, n)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{d}, {n}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{fibonacci_ring, ising_ring, tambara_yamagami_ring};
    use crate::group::FiniteGroup;

    #[test]
    fn ising_fusion_matrix_and_dims() {
        let ising = ising_ring();
        assert!(ising.is_valid());
        let mx = ising.fusion_matrix(2).unwrap();
        let expect = Matrix::from_rows(
            [[0, 0, 1], [0, 0, 1], [1, 1, 0]]
                .iter()
                .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        );
        assert_eq!(mx, expect);
        // unit multiplies as the identity matrix
        assert_eq!(
            ising.fusion_matrix(0).unwrap(),
            Matrix::identity(3)
        );
        assert_eq!(
            ising.fpdim_object(2).unwrap(),
            AlgebraicReal::sqrt_integer(2).unwrap()
        );
        assert_eq!(ising.fpdim_ring().unwrap(), AlgebraicReal::from_integer(4));
        assert_eq!(
            ising.integrality().unwrap(),
            Integrality::WeaklyIntegralNotIntegral
        );
        assert!(ising.is_commutative());
    }

    #[test]
    fn group_ring_of_z2_is_valid_and_pointed() {
        let z2 = crate::constructors::group_ring(&FiniteGroup::cyclic(2));
        assert!(z2.validate().is_empty());
        assert!(z2.is_pointed());
        // the generator's fusion matrix is the swap permutation
        let mx = z2.fusion_matrix(1).unwrap();
        assert_eq!(*mx.at(0, 1), BigInt::from(1));
        assert_eq!(*mx.at(1, 0), BigInt::from(1));
        assert_eq!(z2.fpdim_object(1).unwrap(), AlgebraicReal::one());
        let sig = z2.type_signature().unwrap();
        assert_eq!(format!("{sig}"), "(1, 2)");
    }

    #[test]
    fn fibonacci_dimensions() {
        let fib = fibonacci_ring();
        assert!(fib.is_valid());
        let d = fib.fpdim_object(1).unwrap();
        assert_eq!(d.minpoly(), &Polynomial::from_i64(&[-1, -1, 1]));
        // global dimension (5 + sqrt(5))/2 is irrational
        assert_eq!(fib.integrality().unwrap(), Integrality::NonWeaklyIntegral);
        let total = fib.fpdim_ring().unwrap();
        assert_eq!(total.minpoly(), &Polynomial::from_i64(&[5, -5, 1]));
    }

    #[test]
    fn broken_ising_reports_duality_violation() {
        // X (x) X changed to 2*1: breaks duality at (X, X, 0).
        let ising = ising_ring();
        let mut coeffs = ising.coeffs().clone();
        coeffs.remove(&(2, 2, 1));
        coeffs.insert((2, 2, 0), 2);
        let broken = FusionRing::new(
            ising.labels().to_vec(),
            ising.duals().to_vec(),
            coeffs,
        )
        .unwrap();
        let report = broken.validate();
        assert!(report
            .iter()
            .any(|v| matches!(v, AxiomViolation::Duality { i: 2, j: 2 })));
    }

    #[test]
    fn ty_z3_type_signature() {
        let ty3 = tambara_yamagami_ring(&FiniteGroup::cyclic(3)).unwrap();
        assert!(ty3.is_valid());
        assert_eq!(ty3.fpdim_ring().unwrap(), AlgebraicReal::from_integer(6));
        let sig = ty3.type_signature().unwrap();
        assert_eq!(sig.entries().len(), 2);
        assert_eq!(sig.entries()[0], (AlgebraicReal::one(), 3));
        assert_eq!(
            sig.entries()[1],
            (AlgebraicReal::sqrt_integer(3).unwrap(), 1)
        );
        // global dimension via the signature matches the direct sum
        assert_eq!(sig.global_dimension(), ty3.fpdim_ring().unwrap());
    }

    #[test]
    fn s3_group_ring_not_commutative() {
        let s3 = crate::constructors::group_ring(&FiniteGroup::symmetric_3());
        assert!(s3.is_valid());
        assert!(!s3.is_commutative());
    }

    #[test]
    fn dual_matrix_is_transpose() {
        let ty4 = tambara_yamagami_ring(&FiniteGroup::cyclic(4)).unwrap();
        for i in 0..ty4.rank() {
            let m = ty4.fusion_matrix(i).unwrap();
            let md = ty4.fusion_matrix(ty4.dual(i)).unwrap();
            assert_eq!(md, m.transpose());
        }
    }

    #[test]
    fn dimension_homomorphism() {
        for ring in [
            ising_ring(),
            fibonacci_ring(),
            tambara_yamagami_ring(&FiniteGroup::cyclic(3)).unwrap(),
        ] {
            let dims = ring.fpdims().unwrap();
            for i in 0..ring.rank() {
                for j in 0..ring.rank() {
                    let mut rhs = AlgebraicReal::zero();
                    for k in 0..ring.rank() {
                        let n = ring.n(i, j, k);
                        for _ in 0..n {
                            rhs = rhs.add(&dims[k]);
                        }
                    }
                    assert_eq!(dims[i].mul(&dims[j]), rhs, "at ({i}, {j})");
                }
            }
        }
    }
}
