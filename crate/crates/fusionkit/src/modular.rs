//! Modular data over cyclotomic numbers: the unnormalized S-matrix and the
//! diagonal T, their validation against a fusion ring (Verlinde
//! consistency), Mueger centralizers, and the constructions the
//! classification needs: pointed data from metric groups, the eight Ising
//! data, and Deligne products.

use crate::constructors::group_ring;
use crate::exact::{rank_field, Cyclotomic, Matrix};
use crate::group::FiniteGroup;
use crate::ring::{CoeffMap, FusionRing};
use crate::structure::{deligne_product, Subring};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt;

/// A commutative fusion ring with an unnormalized S-matrix (first row the
/// dimensions) and diagonal T of roots of unity.
#[derive(Clone, Debug)]
pub struct ModularData {
    ring: FusionRing,
    smat: Vec<Vec<Cyclotomic>>,
    tmat: Vec<Cyclotomic>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ModularViolation {
    RingInvalid { violations: usize },
    NotCommutative,
    NotSymmetric { i: usize, j: usize },
    FirstRowDimension { i: usize },
    UnsupportedDimension { i: usize },
    TwistUnitNotOne,
    TwistNotRootOfUnity { i: usize },
    SMatrixSquare { i: usize, j: usize },
    VerlindeNonInteger { i: usize, j: usize, k: usize },
    VerlindeMismatch { i: usize, j: usize, k: usize },
    Degenerate,
}

impl fmt::Display for ModularViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ModularViolation::*;
        match self {
            RingInvalid { violations } => write!(f, "underlying ring invalid ({violations} axiom violations)"),
            NotCommutative => write!(f, "underlying ring is not commutative"),
            NotSymmetric { i, j } => write!(f, "S-matrix not symmetric at ({i}, {j})"),
            FirstRowDimension { i } => write!(f, "S[0][{i}] differs from the dimension of {i}"),
            UnsupportedDimension { i } => write!(f, "dimension of {i} has no supported cyclotomic embedding"),
            TwistUnitNotOne => write!(f, "T[0] must be 1"),
            TwistNotRootOfUnity { i } => write!(f, "T[{i}] is not a root of unity within the order bound"),
            SMatrixSquare { i, j } => write!(f, "S^2 differs from D^2 * duality at ({i}, {j})"),
            VerlindeNonInteger { i, j, k } => write!(f, "Verlinde coefficient at ({i}, {j}, {k}) is not a nonnegative integer"),
            VerlindeMismatch { i, j, k } => write!(f, "Verlinde coefficient at ({i}, {j}, {k}) differs from the ring"),
            Degenerate => write!(f, "S-matrix is singular"),
        }
    }
}

/// Validation knobs; the order bound caps the conductor search for twists.
#[derive(Clone, Copy, Debug)]
pub struct ValidationConfig {
    pub t_order_bound: u32,
}

impl Default for ValidationConfig {
    fn default() -> Self {
        ValidationConfig { t_order_bound: 64 }
    }
}

impl ModularData {
    pub fn new(
        ring: FusionRing,
        smat: Vec<Vec<Cyclotomic>>,
        tmat: Vec<Cyclotomic>,
    ) -> Result<Self> {
        let r = ring.rank();
        if smat.len() != r || smat.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidArgument(format!(
                "S-matrix must be {r} x {r}"
            )));
        }
        if tmat.len() != r {
            return Err(Error::InvalidArgument(format!("T must have {r} entries")));
        }
        Ok(ModularData { ring, smat, tmat })
    }

    pub fn ring(&self) -> &FusionRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.ring.rank()
    }

    pub fn smat(&self) -> &Vec<Vec<Cyclotomic>> {
        &self.smat
    }

    pub fn tmat(&self) -> &[Cyclotomic] {
        &self.tmat
    }

    pub fn s(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.smat[i][j]
    }

    /// The dimension of object i as stored in the first S-row.
    pub fn dim(&self, i: usize) -> &Cyclotomic {
        &self.smat[0][i]
    }

    /// Global dimension D^2 read off the ring, embedded.
    fn global_dimension(&self) -> Result<Cyclotomic> {
        Cyclotomic::embed_algebraic(&self.ring.fpdim_ring()?)
    }

    pub fn validate(&self) -> Vec<ModularViolation> {
        self.validate_with(ValidationConfig::default())
    }

    pub fn validate_with(&self, config: ValidationConfig) -> Vec<ModularViolation> {
        let mut out = Vec::new();
        let r = self.rank();
        let ring_report = self.ring.validate();
        if !ring_report.is_empty() {
            out.push(ModularViolation::RingInvalid {
                violations: ring_report.len(),
            });
            return out;
        }
        if !self.ring.is_commutative() {
            out.push(ModularViolation::NotCommutative);
            return out;
        }
        // symmetry
        for i in 0..r {
            for j in i + 1..r {
                if self.smat[i][j] != self.smat[j][i] {
                    out.push(ModularViolation::NotSymmetric { i, j });
                }
            }
        }
        // first row carries the dimensions
        for i in 0..r {
            match self
                .ring
                .fpdim_object(i)
                .map_err(|_| ())
                .and_then(|d| Cyclotomic::embed_algebraic(&d).map_err(|_| ()))
            {
                Ok(expected) => {
                    if self.smat[0][i] != expected {
                        out.push(ModularViolation::FirstRowDimension { i });
                    }
                }
                Err(()) => out.push(ModularViolation::UnsupportedDimension { i }),
            }
        }
        // twists
        if !self.tmat[0].is_one() {
            out.push(ModularViolation::TwistUnitNotOne);
        }
        for (i, t) in self.tmat.iter().enumerate() {
            if t.root_of_unity_order(config.t_order_bound).is_none() {
                out.push(ModularViolation::TwistNotRootOfUnity { i });
            }
        }
        // S^2 = D^2 C, on raw coefficient vectors at a common conductor
        let mut square_ok = true;
        match self.global_dimension() {
            Ok(d2) => {
                let (n, lifted) = self.lifted_smat();
                let phi = crate::exact::euler_phi(n) as usize;
                let zero_vec = vec![BigRational::zero(); phi];
                let d2_vec = d2.lift_coeffs(n);
                for i in 0..r {
                    for j in 0..r {
                        let mut acc = zero_vec.clone();
                        for k in 0..r {
                            let prod = crate::exact::raw_cyclotomic::mul(
                                &lifted[i][k],
                                &lifted[k][j],
                                n,
                            );
                            crate::exact::raw_cyclotomic::add_assign(&mut acc, &prod);
                        }
                        let expected = if self.ring.dual(i) == j {
                            &d2_vec
                        } else {
                            &zero_vec
                        };
                        if &acc != expected {
                            out.push(ModularViolation::SMatrixSquare { i, j });
                            square_ok = false;
                        }
                    }
                }
                // nondegeneracy: S^2 = D^2 C with D^2 != 0 already exhibits an
                // inverse; otherwise fall back to elimination.
                if d2.is_zero() {
                    out.push(ModularViolation::Degenerate);
                } else if !square_ok {
                    let s = Matrix::from_fn(r, r, |i, j| self.smat[i][j].clone());
                    if rank_field(&s) < r {
                        out.push(ModularViolation::Degenerate);
                    }
                }
            }
            Err(_) => {
                out.push(ModularViolation::UnsupportedDimension { i: 0 });
            }
        }
        // Verlinde reconstruction
        if let Err(issues) = self.verlinde_coefficients() {
            out.extend(issues);
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Common conductor and every S entry lifted to its power basis.
    fn lifted_smat(&self) -> (u32, Vec<Vec<Vec<BigRational>>>) {
        let mut n = 1u64;
        for row in &self.smat {
            for entry in row {
                n = num_integer::lcm(n, entry.conductor() as u64);
            }
        }
        let n = n as u32;
        let lifted = self
            .smat
            .iter()
            .map(|row| row.iter().map(|e| e.lift_coeffs(n)).collect())
            .collect();
        (n, lifted)
    }

    /// Reconstruct the fusion coefficients from the S-matrix:
    /// N_{ij}^k = (1/D^2) sum_a S_ia S_ja conj(S_ka) / S_0a,
    /// exactly. Ok(tensor) when every entry is a nonnegative integer equal to
    /// the ring's coefficient; otherwise the full list of offending triples.
    pub fn verlinde_coefficients(
        &self,
    ) -> std::result::Result<CoeffMap, Vec<ModularViolation>> {
        use crate::exact::raw_cyclotomic as raw;
        let r = self.rank();
        let d2 = self
            .global_dimension()
            .map_err(|_| vec![ModularViolation::UnsupportedDimension { i: 0 }])?;
        let mut issues = Vec::new();
        let mut tensor = CoeffMap::new();
        let (n, lifted) = self.lifted_smat();
        let phi = crate::exact::euler_phi(n) as usize;
        // inverses of the first row (dimensions are nonzero)
        let mut inv_dim = Vec::with_capacity(r);
        for a in 0..r {
            match self.smat[0][a].inv() {
                Ok(v) => inv_dim.push(v.lift_coeffs(n)),
                Err(_) => return Err(vec![ModularViolation::FirstRowDimension { i: a }]),
            }
        }
        let conj: Vec<Vec<Vec<BigRational>>> = lifted
            .iter()
            .map(|row| row.iter().map(|a| raw::conj(a, n)).collect())
            .collect();
        // expected right-hand sides: n * D^2 for small n
        let d2_vec = d2.lift_coeffs(n);
        let max_n = self.ring.coeffs().values().copied().max().unwrap_or(1);
        let mut expected = vec![vec![BigRational::zero(); phi]];
        for _ in 0..max_n {
            let mut next = expected.last().unwrap().clone();
            raw::add_assign(&mut next, &d2_vec);
            expected.push(next);
        }
        for i in 0..r {
            for j in i..r {
                // v_a = S_ia S_ja / S_0a
                let v: Vec<Vec<BigRational>> = (0..r)
                    .map(|a| raw::mul(&raw::mul(&lifted[i][a], &lifted[j][a], n), &inv_dim[a], n))
                    .collect();
                for k in 0..r {
                    let mut sum = vec![BigRational::zero(); phi];
                    for a in 0..r {
                        raw::add_assign(&mut sum, &raw::mul(&v[a], &conj[k][a], n));
                    }
                    let coeff = self.ring.n(i, j, k);
                    if sum != expected[coeff as usize] {
                        let value = Cyclotomic::from_reduced_vec(n, sum);
                        match as_nonneg_integer(&value, &d2) {
                            Some(_) => issues.push(ModularViolation::VerlindeMismatch { i, j, k }),
                            None => issues.push(ModularViolation::VerlindeNonInteger { i, j, k }),
                        }
                    } else if coeff > 0 {
                        tensor.insert((i, j, k), coeff);
                        tensor.insert((j, i, k), coeff);
                    }
                }
            }
        }
        if issues.is_empty() {
            Ok(tensor)
        } else {
            Err(issues)
        }
    }

    /// The Mueger centralizer of a subring: all X with
    /// S_{XY} = d_X d_Y for every Y in the subring.
    pub fn muger_centralizer(&self, d: &Subring) -> Subring {
        let members: Vec<usize> = (0..self.rank())
            .filter(|&x| {
                d.indices().iter().all(|&y| {
                    self.smat[x][y] == &self.smat[0][x].clone() * &self.smat[0][y].clone()
                })
            })
            .collect();
        debug_assert!(members.contains(&0));
        Subring::from_sorted_unchecked(members)
    }

    /// The Mueger center: the centralizer of the whole ring. Trivial exactly
    /// when the data is nondegenerate.
    pub fn muger_center(&self) -> Subring {
        self.muger_centralizer(&Subring::whole(&self.ring))
    }
}

/// Interpret `sum` as n * d2 for a nonnegative integer n.
fn as_nonneg_integer(sum: &Cyclotomic, d2: &Cyclotomic) -> Option<u64> {
    let ratio = sum.clone() / d2.clone();
    let q: BigRational = ratio.is_rational()?;
    if q.is_integer() && !q.is_negative() {
        use num_traits::ToPrimitive;
        q.numer().to_u64()
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// Metric groups and pointed modular data.
// ---------------------------------------------------------------------------

/// A finite abelian group with a quadratic form into the roots of unity;
/// the associated bicharacter is b(g, h) = q(gh) / (q(g) q(h)).
#[derive(Clone, Debug)]
pub struct MetricGroup {
    group: FiniteGroup,
    values: Vec<Cyclotomic>,
    bichar: Vec<Vec<Cyclotomic>>,
}

impl MetricGroup {
    /// Checks all the quadratic-form axioms: q(0) = 1, q(g) = q(-g), values
    /// roots of unity, and the associated b bimultiplicative.
    pub fn new(group: FiniteGroup, values: Vec<Cyclotomic>) -> Result<Self> {
        if !group.is_abelian() {
            return Err(Error::NonAbelianGroup);
        }
        let n = group.order();
        if values.len() != n {
            return Err(Error::InvalidArgument(
                "one quadratic form value per group element".into(),
            ));
        }
        if !values[0].is_one() {
            return Err(Error::InvalidArgument("q(identity) must be 1".into()));
        }
        let order_bound = 2 * n as u32;
        for (g, v) in values.iter().enumerate() {
            if v.root_of_unity_order(order_bound).is_none() {
                return Err(Error::InvalidArgument(format!(
                    "q({g}) is not a root of unity of order dividing 2|G|"
                )));
            }
        }
        for g in 0..n {
            if values[g] != values[group.inverse(g)] {
                return Err(Error::InvalidArgument(format!(
                    "q({g}) differs from q(-{g})"
                )));
            }
        }
        // b(g, h) = q(gh) conj(q(g)) conj(q(h)): inverses of roots of unity
        // are conjugates.
        let bichar: Vec<Vec<Cyclotomic>> = (0..n)
            .map(|g| {
                (0..n)
                    .map(|h| {
                        &(&values[group.mul(g, h)] * &values[g].conj()) * &values[h].conj()
                    })
                    .collect()
            })
            .collect();
        for g in 0..n {
            for h1 in 0..n {
                for h2 in 0..n {
                    let lhs = &bichar[g][group.mul(h1, h2)];
                    let rhs = &bichar[g][h1] * &bichar[g][h2];
                    if *lhs != rhs {
                        return Err(Error::InvalidArgument(format!(
                            "bicharacter fails multiplicativity at ({g}, {h1}, {h2})"
                        )));
                    }
                }
            }
        }
        Ok(MetricGroup {
            group,
            values,
            bichar,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn qform(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn bicharacter(&self, g: usize, h: usize) -> &Cyclotomic {
        &self.bichar[g][h]
    }

    /// Nondegenerate when g -> b(g, .) separates points.
    pub fn is_nondegenerate(&self) -> bool {
        let n = self.group.order();
        (1..n).all(|g| (0..n).any(|h| !self.bichar[g][h].is_one()))
    }
}

/// Pointed modular data from a nondegenerate metric group:
/// the group ring with S = bicharacter table and T = the form itself.
pub fn pointed_modular_from_metric_group(mg: &MetricGroup) -> Result<ModularData> {
    if !mg.is_nondegenerate() {
        return Err(Error::DegenerateMetricGroup);
    }
    let ring = group_ring(mg.group());
    let n = mg.group().order();
    let smat = (0..n)
        .map(|g| (0..n).map(|h| mg.bicharacter(g, h).clone()).collect())
        .collect();
    let tmat = mg.qform().to_vec();
    ModularData::new(ring, smat, tmat)
}

/// The semion metric group on Z2 with q(g) = +i or -i.
pub fn semion_metric_group(positive: bool) -> MetricGroup {
    let q = Cyclotomic::root_of_unity(4, if positive { 1 } else { 3 }).unwrap();
    MetricGroup::new(FiniteGroup::cyclic(2), vec![Cyclotomic::one(), q])
        .expect("semion form is a quadratic form")
}

/// Pointed modular data of the semion variant.
pub fn semion_modular_data(positive: bool) -> ModularData {
    pointed_modular_from_metric_group(&semion_metric_group(positive))
        .expect("semion forms are nondegenerate")
}

// ---------------------------------------------------------------------------
// Ising data and products.
// ---------------------------------------------------------------------------

/// One of the eight Ising modular data: the Ising ring with the standard
/// S-matrix (sqrt(2) realized as zeta_8 + zeta_8^-1) and
/// T = (1, -1, zeta_16^e) for an odd exponent e.
pub fn ising_modular_data(zeta_exponent: i64) -> Result<ModularData> {
    if zeta_exponent.rem_euclid(2) == 0 {
        return Err(Error::InvalidArgument(
            "Ising twist exponent must be odd".into(),
        ));
    }
    let ring = crate::constructors::ising_ring();
    let one = Cyclotomic::one();
    let sqrt2 = Cyclotomic::sqrt_integer(2);
    let neg_sqrt2 = -&sqrt2;
    let smat = vec![
        vec![one.clone(), one.clone(), sqrt2.clone()],
        vec![one.clone(), one.clone(), neg_sqrt2.clone()],
        vec![sqrt2.clone(), neg_sqrt2.clone(), Cyclotomic::zero()],
    ];
    let tmat = vec![
        Cyclotomic::one(),
        Cyclotomic::from_integer(-1),
        Cyclotomic::root_of_unity(16, zeta_exponent)?,
    ];
    ModularData::new(ring, smat, tmat)
}

/// Deligne product of modular data: product ring, entrywise products of
/// S entries and of twists over pair indices.
pub fn modular_product(a: &ModularData, b: &ModularData) -> ModularData {
    let ring = deligne_product(a.ring(), b.ring());
    let (ra, rb) = (a.rank(), b.rank());
    let smat = (0..ra * rb)
        .map(|e1| {
            (0..ra * rb)
                .map(|e2| a.s(e1 / rb, e2 / rb) * b.s(e1 % rb, e2 % rb))
                .collect()
        })
        .collect();
    let tmat = (0..ra * rb)
        .map(|e| &a.tmat()[e / rb] * &b.tmat()[e % rb])
        .collect();
    ModularData::new(ring, smat, tmat).expect("shapes agree by construction")
}

/// Rank-1 modular data (the trivial theory).
pub fn trivial_modular_data() -> ModularData {
    let ring = group_ring(&FiniteGroup::trivial());
    ModularData::new(ring, vec![vec![Cyclotomic::one()]], vec![Cyclotomic::one()])
        .expect("trivial data is well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ising_data_validates_and_reconstructs() {
        let md = ising_modular_data(1).unwrap();
        assert!(md.validate().is_empty(), "{:?}", md.validate());
        let tensor = md.verlinde_coefficients().unwrap();
        assert_eq!(tensor, md.ring().coeffs().clone());
        assert!(ising_modular_data(2).is_err());
    }

    #[test]
    fn eight_ising_variants_distinct() {
        let all: Vec<ModularData> = (0..8)
            .map(|k| ising_modular_data(2 * k + 1).unwrap())
            .collect();
        for md in &all {
            assert!(md.is_valid());
        }
        for (i, a) in all.iter().enumerate() {
            for b in all.iter().skip(i + 1) {
                assert_eq!(a.smat(), b.smat());
                assert_ne!(a.tmat()[2], b.tmat()[2]);
            }
        }
    }

    #[test]
    fn semion_data() {
        let md = semion_modular_data(true);
        assert!(md.is_valid());
        assert_eq!(md.tmat()[1], Cyclotomic::root_of_unity(4, 1).unwrap());
        assert_eq!(*md.s(1, 1), Cyclotomic::from_integer(-1));
        let tensor = md.verlinde_coefficients().unwrap();
        assert_eq!(tensor, md.ring().coeffs().clone());
        // conjugate variant differs in T only
        let md2 = semion_modular_data(false);
        assert_eq!(md.smat(), md2.smat());
        assert_ne!(md.tmat()[1], md2.tmat()[1]);
    }

    #[test]
    fn degenerate_form_rejected() {
        // q(g) = -1 on Z2 gives b identically 1
        let q = Cyclotomic::from_integer(-1);
        let mg = MetricGroup::new(FiniteGroup::cyclic(2), vec![Cyclotomic::one(), q]).unwrap();
        assert!(!mg.is_nondegenerate());
        assert!(matches!(
            pointed_modular_from_metric_group(&mg),
            Err(Error::DegenerateMetricGroup)
        ));
    }

    #[test]
    fn muger_centers() {
        let ising = ising_modular_data(3).unwrap();
        assert!(ising.muger_center().is_trivial());
        let semion = semion_modular_data(false);
        assert!(semion.muger_center().is_trivial());
        // everything centralizes the trivial subring
        assert!(ising
            .muger_centralizer(&Subring::trivial())
            .is_whole(ising.ring()));
    }

    #[test]
    fn degenerate_toy_detected() {
        // duplicate-row S on the Z2 ring: symmetric, dims fine, but singular
        let ring = group_ring(&FiniteGroup::cyclic(2));
        let one = Cyclotomic::one();
        let smat = vec![vec![one.clone(), one.clone()], vec![one.clone(), one.clone()]];
        let tmat = vec![one.clone(), one.clone()];
        let md = ModularData::new(ring, smat, tmat).unwrap();
        let report = md.validate();
        assert!(report.contains(&ModularViolation::Degenerate));
        // its center is everything
        assert!(md.muger_center().is_whole(md.ring()));
    }

    #[test]
    fn product_data() {
        let semion = semion_modular_data(true);
        let ising = ising_modular_data(1).unwrap();
        let prod = modular_product(&semion, &ising);
        assert_eq!(prod.rank(), 6);
        assert!(prod.is_valid(), "{:?}", prod.validate());
        assert!(prod.muger_center().is_trivial());
        let tensor = prod.verlinde_coefficients().unwrap();
        assert_eq!(tensor, prod.ring().coeffs().clone());

        // trivial (x) md = md up to the pairing relabeling
        let trivial = trivial_modular_data();
        let same = modular_product(&trivial, &ising);
        assert_eq!(same.smat(), ising.smat());

        // centralizer of one factor is the complementary factor
        let semion_factor = Subring::new(prod.ring(), [0, 3]).unwrap();
        let centralizer = prod.muger_centralizer(&semion_factor);
        assert_eq!(centralizer.indices(), &[0, 1, 2]);

        let double_ising = modular_product(&ising, &ising);
        assert_eq!(double_ising.rank(), 9);
        assert!(double_ising.is_valid());
        assert_eq!(
            double_ising.ring().fpdim_ring().unwrap(),
            crate::exact::AlgebraicReal::from_integer(16)
        );
        assert!(double_ising.muger_center().is_trivial());
    }

    #[test]
    fn centralizer_duality_on_ising() {
        let md = ising_modular_data(1).unwrap();
        let total = md.ring().fpdim_ring().unwrap();
        for d in crate::structure::all_subrings(md.ring()) {
            let c = md.muger_centralizer(&d);
            let product = d.fpdim(md.ring()).unwrap().mul(&c.fpdim(md.ring()).unwrap());
            assert_eq!(product, total);
            assert_eq!(md.muger_centralizer(&c), d);
        }
    }
}
