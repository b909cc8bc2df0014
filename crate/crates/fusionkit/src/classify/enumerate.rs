//! Backtracking enumeration of all fusion rings with a given type
//! signature, up to basis permutations fixing the unit and the dimension
//! classes.
//!
//! The search assigns structure constants row by row. Unit and duality
//! cells are fixed up front, every assignment is propagated through the
//! Frobenius-reciprocity orbit (and transposition, in the commutative
//! case), and the exact dimension homomorphism
//! d_i d_j = sum_k N_{ij}^k d_k prunes by component of the square-free
//! radicand. Complete tensors are filtered through the full axiom
//! validator and deduplicated by the lexicographically minimal relabeling.

use crate::ring::{CoeffMap, FusionRing, TypeSignature};
use crate::{Error, Result};
use num_bigint::BigInt;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// A dimension c * sqrt(m) with m squarefree; every dimension with integer
/// square has this shape.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Radical {
    c: u64,
    m: u64,
}

impl Radical {
    fn from_square(square: u64) -> Radical {
        // square = c^2 * m with m squarefree
        let mut c = 1u64;
        let mut m = 1u64;
        let mut rest = square;
        let mut p = 2u64;
        while p * p <= rest {
            if rest % p == 0 {
                let mut e = 0u32;
                while rest % p == 0 {
                    rest /= p;
                    e += 1;
                }
                c *= p.pow(e / 2);
                if e % 2 == 1 {
                    m *= p;
                }
            }
            p += 1;
        }
        if rest > 1 {
            m *= rest;
        }
        Radical { c, m }
    }

    fn mul(self, other: Radical) -> Radical {
        let combined = Radical::from_square(self.m * other.m);
        debug_assert_eq!(combined.m, squarefree_part(self.m * other.m));
        Radical {
            c: self.c * other.c * combined.c,
            m: combined.m,
        }
    }
}

fn squarefree_part(n: u64) -> u64 {
    Radical::from_square(n).m
}

/// Budget over radicands: how much of each sqrt(m)-component remains.
type Budget = BTreeMap<u64, i64>;

fn budget_of(r: Radical) -> Budget {
    let mut b = Budget::new();
    b.insert(r.m, r.c as i64);
    b
}

struct SearchSpace {
    rank: usize,
    dims: Vec<Radical>,
    dual: Vec<usize>,
    commutative: bool,
    /// row targets: budget for (i, j)
    targets: Vec<Vec<Budget>>,
}

struct SearchState {
    tensor: Vec<Option<u64>>,
    trail: Vec<usize>,
}

impl SearchSpace {
    fn flat(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.rank + j) * self.rank + k
    }

    /// Set a cell and close over the Frobenius orbit (plus transposition in
    /// the commutative case). Returns false on conflict.
    fn set(&self, state: &mut SearchState, i: usize, j: usize, k: usize, v: u64) -> bool {
        let mut queue = vec![(i, j, k)];
        while let Some((i, j, k)) = queue.pop() {
            let idx = self.flat(i, j, k);
            match state.tensor[idx] {
                Some(old) => {
                    if old != v {
                        return false;
                    }
                }
                None => {
                    state.tensor[idx] = Some(v);
                    state.trail.push(idx);
                    queue.push((self.dual[i], k, j));
                    queue.push((k, self.dual[j], i));
                    if self.commutative {
                        queue.push((j, i, k));
                    }
                }
            }
        }
        true
    }

    fn rollback(&self, state: &mut SearchState, mark: usize) {
        while state.trail.len() > mark {
            let idx = state.trail.pop().unwrap();
            state.tensor[idx] = None;
        }
    }

    /// Rows to fill, in search order.
    fn rows(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..self.rank {
            let j_start = if self.commutative { i } else { 1 };
            for j in j_start..self.rank {
                out.push((i, j));
            }
        }
        out
    }

    fn search(
        &self,
        state: &mut SearchState,
        rows: &[(usize, usize)],
        row_idx: usize,
        results: &mut Vec<Vec<u64>>,
    ) {
        if row_idx == rows.len() {
            self.finalize(state, results);
            return;
        }
        let (i, j) = rows[row_idx];
        let budget = self.targets[i][j].clone();
        self.fill_row(state, rows, row_idx, i, j, 0, budget, results);
    }

    #[allow(clippy::too_many_arguments)]
    fn fill_row(
        &self,
        state: &mut SearchState,
        rows: &[(usize, usize)],
        row_idx: usize,
        i: usize,
        j: usize,
        k: usize,
        budget: Budget,
        results: &mut Vec<Vec<u64>>,
    ) {
        if k == self.rank {
            if budget.values().all(|&v| v == 0) {
                self.search(state, rows, row_idx + 1, results);
            }
            return;
        }
        let dim_k = self.dims[k];
        if let Some(v) = state.tensor[self.flat(i, j, k)] {
            // already forced; account for it
            match spend(&budget, dim_k, v) {
                Some(next) => self.fill_row(state, rows, row_idx, i, j, k + 1, next, results),
                None => {}
            }
            return;
        }
        let available = budget.get(&dim_k.m).copied().unwrap_or(0);
        let vmax = if available > 0 {
            (available as u64) / dim_k.c
        } else {
            0
        };
        for v in 0..=vmax {
            let mark = state.trail.len();
            if self.set(state, i, j, k, v) {
                if let Some(next) = spend(&budget, dim_k, v) {
                    self.fill_row(state, rows, row_idx, i, j, k + 1, next, results);
                }
            }
            self.rollback(state, mark);
        }
    }

    fn finalize(&self, state: &SearchState, results: &mut Vec<Vec<u64>>) {
        let r = self.rank;
        let mut coeffs = CoeffMap::new();
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    let v = state.tensor[self.flat(i, j, k)].expect("tensor complete");
                    if v > 0 {
                        coeffs.insert((i, j, k), v);
                    }
                }
            }
        }
        let labels = (0..r)
            .map(|i| if i == 0 { "1".to_string() } else { format!("x{i}") })
            .collect();
        let Ok(ring) = FusionRing::new(labels, self.dual.clone(), coeffs) else {
            return;
        };
        if !ring.validate().is_empty() {
            return;
        }
        if self.commutative && !ring.is_commutative() {
            return;
        }
        results.push(canonical_tensor_with_dims(&ring, &self.dims));
    }
}

fn spend(budget: &Budget, dim: Radical, v: u64) -> Option<Budget> {
    if v == 0 {
        return Some(budget.clone());
    }
    let mut next = budget.clone();
    let slot = next.entry(dim.m).or_insert(0);
    *slot -= (dim.c * v) as i64;
    if *slot < 0 {
        return None;
    }
    Some(next)
}

/// All fusion rings with the given type signature, up to basis permutations
/// fixing the unit and dimension classes. Deterministic under any
/// parallelism: the per-involution searches merge by canonical sort.
pub fn enumerate_rings(sig: &TypeSignature, commutative: bool) -> Result<Vec<FusionRing>> {
    let rank = sig.rank();
    if rank > 7 {
        return Err(Error::Unsupported(format!(
            "ring enumeration is desk-scale (rank <= 7), got rank {rank}"
        )));
    }
    let mut dims = Vec::with_capacity(rank);
    for d in sig.dims() {
        let square = d
            .square()
            .to_integer()
            .ok_or_else(|| Error::Unsupported("all squared dimensions must be integers".into()))?;
        use num_traits::ToPrimitive;
        let square = square
            .to_u64()
            .ok_or_else(|| Error::Unsupported("dimension out of range".into()))?;
        dims.push(Radical::from_square(square));
    }
    // dimension classes as index blocks
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, d) in dims.iter().enumerate() {
        match classes.last_mut() {
            Some(block) if dims[block[0]] == *d => block.push(i),
            _ => classes.push(vec![i]),
        }
    }
    let duals = class_preserving_involutions(&classes);
    let results: Vec<Vec<Vec<u64>>> = duals
        .par_iter()
        .map(|dual| {
            let mut targets = vec![vec![Budget::new(); rank]; rank];
            for i in 0..rank {
                for j in 0..rank {
                    targets[i][j] = budget_of(dims[i].mul(dims[j]));
                }
            }
            let space = SearchSpace {
                rank,
                dims: dims.clone(),
                dual: dual.clone(),
                commutative,
                targets,
            };
            let mut state = SearchState {
                tensor: vec![None; rank * rank * rank],
                trail: Vec::new(),
            };
            // unit rows and duality column
            let mut ok = true;
            for j in 0..rank {
                for k in 0..rank {
                    let delta = u64::from(j == k);
                    ok &= space.set(&mut state, 0, j, k, delta);
                    ok &= space.set(&mut state, j, 0, k, delta);
                }
            }
            for i in 0..rank {
                for j in 0..rank {
                    let delta = u64::from(dual[i] == j);
                    ok &= space.set(&mut state, i, j, 0, delta);
                }
            }
            let mut results = Vec::new();
            if ok {
                let rows = space.rows();
                space.search(&mut state, &rows, 0, &mut results);
            }
            results
        })
        .collect();
    let mut canon: Vec<Vec<u64>> = results.into_iter().flatten().collect();
    canon.sort();
    canon.dedup();
    canon
        .into_iter()
        .map(|tensor| ring_from_tensor(rank, &tensor))
        .collect()
}

/// All involutions fixing index 0 and preserving each class block.
fn class_preserving_involutions(classes: &[Vec<usize>]) -> Vec<Vec<usize>> {
    // involutions of one block
    fn block_involutions(block: &[usize]) -> Vec<Vec<(usize, usize)>> {
        if block.is_empty() {
            return vec![vec![]];
        }
        let first = block[0];
        let mut out = Vec::new();
        // first is fixed
        for mut rest in block_involutions(&block[1..]) {
            rest.push((first, first));
            out.push(rest);
        }
        // first pairs with a later element
        for (idx, &other) in block.iter().enumerate().skip(1) {
            let mut remaining = block[1..].to_vec();
            remaining.remove(idx - 1);
            for mut rest in block_involutions(&remaining) {
                rest.push((first, other));
                out.push(rest);
            }
        }
        out
    }

    let rank: usize = classes.iter().map(Vec::len).sum();
    let mut options_per_class: Vec<Vec<Vec<(usize, usize)>>> = Vec::new();
    for (ci, class) in classes.iter().enumerate() {
        let block: Vec<usize> = if ci == 0 {
            // the unit is fixed; pair only the other invertibles
            class.iter().copied().filter(|&i| i != 0).collect()
        } else {
            class.clone()
        };
        options_per_class.push(block_involutions(&block));
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; options_per_class.len()];
    loop {
        let mut dual: Vec<usize> = (0..rank).collect();
        for (ci, opts) in options_per_class.iter().enumerate() {
            for &(a, b) in &opts[choice[ci]] {
                dual[a] = b;
                dual[b] = a;
            }
        }
        out.push(dual);
        let mut advanced = false;
        for (ci, opts) in options_per_class.iter().enumerate() {
            choice[ci] += 1;
            if choice[ci] < opts.len() {
                advanced = true;
                break;
            }
            choice[ci] = 0;
        }
        if !advanced {
            out.sort();
            out.dedup();
            return out;
        }
    }
}

fn ring_from_tensor(rank: usize, tensor: &[u64]) -> Result<FusionRing> {
    let at = |i: usize, j: usize, k: usize| tensor[(i * rank + j) * rank + k];
    let mut dual = vec![0usize; rank];
    for i in 0..rank {
        dual[i] = (0..rank)
            .find(|&j| at(i, j, 0) == 1)
            .ok_or_else(|| Error::InvalidArgument("tensor lacks a dual".into()))?;
    }
    let labels = (0..rank)
        .map(|i| if i == 0 { "1".to_string() } else { format!("x{i}") })
        .collect();
    let mut coeffs = CoeffMap::new();
    for i in 0..rank {
        for j in 0..rank {
            for k in 0..rank {
                if at(i, j, k) > 0 {
                    coeffs.insert((i, j, k), at(i, j, k));
                }
            }
        }
    }
    FusionRing::new(labels, dual, coeffs)
}

/// The canonical coefficient tensor of a ring: basis sorted by dimension
/// ascending, then the lexicographically minimal flat tensor over all
/// permutations preserving the unit and the dimension classes. Applying the
/// map twice is the identity.
pub fn canonical_tensor(ring: &FusionRing) -> Result<Vec<u64>> {
    let dims = ring.fpdims()?;
    let mut order: Vec<usize> = (0..ring.rank()).collect();
    order.sort_by(|&a, &b| dims[a].compare(&dims[b]).then(a.cmp(&b)));
    let radicals: Vec<Radical> = order
        .iter()
        .map(|&i| {
            let sq = dims[i]
                .square()
                .to_integer()
                .unwrap_or_else(|| BigInt::from(0));
            use num_traits::ToPrimitive;
            Radical::from_square(sq.to_u64().unwrap_or(0))
        })
        .collect();
    let reordered = ring.relabeled(&order)?;
    Ok(canonical_tensor_with_dims(&reordered, &radicals))
}

/// Minimal flat tensor over class-preserving permutations, for a ring whose
/// basis is already sorted by dimension.
fn canonical_tensor_with_dims(ring: &FusionRing, dims: &[Radical]) -> Vec<u64> {
    let rank = ring.rank();
    // class blocks of equal dimension
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..rank {
        match classes.last_mut() {
            Some(block) if dims[block[0]] == dims[i] => block.push(i),
            _ => classes.push(vec![i]),
        }
    }
    let mut best: Option<Vec<u64>> = None;
    for perm in class_preserving_permutations(&classes) {
        let mut flat = Vec::with_capacity(rank * rank * rank);
        for i in 0..rank {
            for j in 0..rank {
                for k in 0..rank {
                    flat.push(ring.n(perm[i], perm[j], perm[k]));
                }
            }
        }
        best = match best {
            None => Some(flat),
            Some(cur) => Some(cur.min(flat)),
        };
    }
    best.expect("at least the identity permutation")
}

/// All permutations fixing 0 and preserving each class block
/// (perm[new] = old).
fn class_preserving_permutations(classes: &[Vec<usize>]) -> Vec<Vec<usize>> {
    fn perms(mut items: Vec<usize>) -> Vec<Vec<usize>> {
        if items.len() <= 1 {
            return vec![items];
        }
        let mut out = Vec::new();
        for idx in 0..items.len() {
            let first = items.remove(idx);
            for mut rest in perms(items.clone()) {
                rest.insert(0, first);
                out.push(rest);
            }
            items.insert(idx, first);
        }
        out
    }
    let rank: usize = classes.iter().map(Vec::len).sum();
    let mut block_perms: Vec<Vec<Vec<usize>>> = Vec::new();
    for (ci, class) in classes.iter().enumerate() {
        if ci == 0 {
            let rest: Vec<usize> = class.iter().copied().filter(|&i| i != 0).collect();
            let with_unit: Vec<Vec<usize>> = perms(rest)
                .into_iter()
                .map(|mut p| {
                    p.insert(0, 0);
                    p
                })
                .collect();
            block_perms.push(with_unit);
        } else {
            block_perms.push(perms(class.clone()));
        }
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; block_perms.len()];
    loop {
        let mut perm = vec![0usize; rank];
        let mut offset = 0;
        for (ci, class) in classes.iter().enumerate() {
            let p = &block_perms[ci][choice[ci]];
            for (slot, &old) in p.iter().enumerate() {
                perm[offset + slot] = old;
            }
            offset += class.len();
        }
        out.push(perm);
        let mut advanced = false;
        for (ci, opts) in block_perms.iter().enumerate() {
            choice[ci] += 1;
            if choice[ci] < opts.len() {
                advanced = true;
                break;
            }
            choice[ci] = 0;
        }
        if !advanced {
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{group_ring, ising_ring};
    use crate::exact::AlgebraicReal;
    use crate::group::FiniteGroup;

    fn sig(entries: Vec<(AlgebraicReal, usize)>) -> TypeSignature {
        TypeSignature::new(entries).unwrap()
    }

    #[test]
    fn ising_type_is_unique() {
        let s = sig(vec![
            (AlgebraicReal::one(), 2),
            (AlgebraicReal::sqrt_integer(2).unwrap(), 1),
        ]);
        let rings = enumerate_rings(&s, true).unwrap();
        assert_eq!(rings.len(), 1);
        assert_eq!(
            canonical_tensor(&rings[0]).unwrap(),
            canonical_tensor(&ising_ring()).unwrap()
        );
    }

    #[test]
    fn pointed_rank_two_is_unique() {
        let s = sig(vec![(AlgebraicReal::one(), 2)]);
        let rings = enumerate_rings(&s, true).unwrap();
        assert_eq!(rings.len(), 1);
        assert_eq!(
            canonical_tensor(&rings[0]).unwrap(),
            canonical_tensor(&group_ring(&FiniteGroup::cyclic(2))).unwrap()
        );
    }

    #[test]
    fn fibonacci_type_enumeration() {
        // type (1, 1; phi, 1): the golden ratio dimension is not an integer
        // square, so the enumerator rejects it.
        let phi_poly = crate::exact::Polynomial::from_i64(&[-1, -1, 1]);
        let phi = AlgebraicReal::roots_of_irreducible(&phi_poly)[1].clone();
        let s = sig(vec![(AlgebraicReal::one(), 1), (phi, 1)]);
        assert!(enumerate_rings(&s, true).is_err());
    }

    #[test]
    fn rank_four_pointed_enumeration() {
        // type (1, 4): the two groups of order 4
        let s = sig(vec![(AlgebraicReal::one(), 4)]);
        let rings = enumerate_rings(&s, true).unwrap();
        assert_eq!(rings.len(), 2);
        for ring in &rings {
            assert!(ring.is_pointed());
            assert!(ring.is_valid());
        }
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let z2 = group_ring(&FiniteGroup::cyclic(2));
        let ising = ising_ring();
        let prod = crate::structure::deligne_product(&z2, &ising);
        let t1 = canonical_tensor(&prod).unwrap();
        let ring1 = ring_from_tensor(prod.rank(), &t1).unwrap();
        let t2 = canonical_tensor(&ring1).unwrap();
        assert_eq!(t1, t2);
    }

    #[test]
    fn deterministic_across_thread_counts() {
        let s = sig(vec![
            (AlgebraicReal::one(), 2),
            (AlgebraicReal::sqrt_integer(2).unwrap(), 1),
        ]);
        let pool1 = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let pool4 = rayon::ThreadPoolBuilder::new()
            .num_threads(4)
            .build()
            .unwrap();
        let r1 = pool1.install(|| enumerate_rings(&s, true)).unwrap();
        let r4 = pool4.install(|| enumerate_rings(&s, true)).unwrap();
        let t1: Vec<_> = r1.iter().map(|r| canonical_tensor(r).unwrap()).collect();
        let t4: Vec<_> = r4.iter().map(|r| canonical_tensor(r).unwrap()).collect();
        assert_eq!(t1, t4);
    }
}
