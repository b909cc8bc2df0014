//! Admissible type profiles for modular data of global dimension q^3:
//! enumerate every signature with squared dimensions powers of q summing to
//! q^3, then keep the ones consistent with the structural constraints for
//! modular data (grading components of dimension q, pointed part of order
//! q^2, and an Ising tensor factor in the non-pointed case).

use crate::constructors::is_prime;
use crate::{Error, Result};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct CandidateProfile {
    pub q: usize,
    pub global_dimension: u64,
    /// (d^2, multiplicity) pairs, d ascending.
    pub entries: Vec<(u64, usize)>,
    pub rank: usize,
    pub pointed_size: u64,
    pub grading_group_order: u64,
    pub component_dimension: u64,
    pub pointed: bool,
    pub signature: String,
}

impl CandidateProfile {
    /// Internal arithmetic consistency: the squared dimensions sum to the
    /// global dimension, and the grading bookkeeping multiplies out.
    pub fn is_consistent(&self) -> bool {
        let total: u64 = self
            .entries
            .iter()
            .map(|(dsq, n)| dsq * (*n as u64))
            .sum();
        total == self.global_dimension
            && self.grading_group_order * self.component_dimension == self.global_dimension
            && self.rank == self.entries.iter().map(|(_, n)| n).sum::<usize>()
    }
}

fn signature_string(q: usize, entries: &[(u64, usize)]) -> String {
    let body: Vec<String> = entries
        .iter()
        .map(|(dsq, n)| {
            let isq = (*dsq as f64).sqrt() as u64;
            if isq * isq == *dsq {
                format!("{isq}, {n}")
            } else if *dsq == q as u64 {
                format!("sqrt({q}), {n}")
            } else {
                format!("sqrt({dsq}), {n}")
            }
        })
        .collect();
    format!("({})", body.join("; "))
}

/// All surviving type profiles for modular data of dimension q^3 with every
/// squared dimension a power of q. Desk-scale gate: q prime, q <= 7.
pub fn enumerate_type_profiles_q_cubed(q: usize) -> Result<Vec<CandidateProfile>> {
    if !is_prime(q) || q > 7 {
        return Err(Error::Unsupported(format!(
            "type profiles are computed for primes q <= 7, got {q}"
        )));
    }
    let q64 = q as u64;
    let cube = q64.pow(3);
    // squared dimensions can be 1, q, q^2, q^3
    let dsq_options = [1u64, q64, q64.pow(2), cube];
    let mut survivors = Vec::new();
    // multiplicities (n0, n1, n2, n3) with n0 >= 1 and sum n_i d_i^2 = q^3
    let mut counts = [0usize; 4];
    enumerate_counts(&dsq_options, cube, 0, &mut counts, &mut |counts| {
        let entries: Vec<(u64, usize)> = dsq_options
            .iter()
            .zip(counts.iter())
            .filter(|(_, &n)| n > 0)
            .map(|(&dsq, &n)| (dsq, n))
            .collect();
        if entries.first().map(|(dsq, _)| *dsq) != Some(1) {
            return; // no invertibles at all cannot host the unit
        }
        let rank: usize = entries.iter().map(|(_, n)| n).sum();
        let pointed = entries.len() == 1;
        if pointed {
            survivors.push(CandidateProfile {
                q,
                global_dimension: cube,
                signature: signature_string(q, &entries),
                rank,
                pointed_size: cube,
                grading_group_order: cube,
                component_dimension: 1,
                pointed: true,
                entries,
            });
            return;
        }
        // Non-pointed modular case. The grading components all have
        // dimension q and the grading group matches the invertibles, so the
        // pointed part has order q^2 and the q^2 - q remaining elements all
        // have dimension sqrt(q).
        let m = entries[0].1 as u64;
        if m != q64 * q64 {
            return;
        }
        if entries.len() != 2 || entries[1].0 != q64 {
            return;
        }
        if entries[1].1 as u64 != q64 * q64 - q64 {
            return;
        }
        // An Ising tensor factor forces 4 | q^3 (the pointed complement has
        // dimension q^3 / 4), which among primes happens only at q = 2.
        if cube % 4 != 0 {
            return;
        }
        survivors.push(CandidateProfile {
            q,
            global_dimension: cube,
            signature: signature_string(q, &entries),
            rank,
            pointed_size: q64 * q64,
            grading_group_order: q64 * q64,
            component_dimension: q64,
            pointed: false,
            entries,
        });
    });
    debug_assert!(survivors.iter().all(|p| p.is_consistent()));
    Ok(survivors)
}

fn enumerate_counts(
    dsq: &[u64; 4],
    remaining: u64,
    level: usize,
    counts: &mut [usize; 4],
    emit: &mut impl FnMut(&[usize; 4]),
) {
    if level == 4 {
        if remaining == 0 {
            emit(counts);
        }
        return;
    }
    let step = dsq[level];
    let max = remaining / step;
    for n in 0..=max {
        counts[level] = n as usize;
        enumerate_counts(dsq, remaining - n * step, level + 1, counts, emit);
    }
    counts[level] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q2_has_two_profiles() {
        let profiles = enumerate_type_profiles_q_cubed(2).unwrap();
        assert_eq!(profiles.len(), 2);
        let pointed = profiles.iter().find(|p| p.pointed).unwrap();
        assert_eq!(pointed.rank, 8);
        assert_eq!(pointed.signature, "(1, 8)");
        let nonpointed = profiles.iter().find(|p| !p.pointed).unwrap();
        assert_eq!(nonpointed.rank, 6);
        assert_eq!(nonpointed.signature, "(1, 4; sqrt(2), 2)");
        assert_eq!(nonpointed.pointed_size, 4);
        assert_eq!(nonpointed.grading_group_order, 4);
        assert_eq!(nonpointed.component_dimension, 2);
    }

    #[test]
    fn odd_primes_are_pointed_only() {
        for q in [3usize, 5, 7] {
            let profiles = enumerate_type_profiles_q_cubed(q).unwrap();
            assert_eq!(profiles.len(), 1, "q = {q}");
            assert!(profiles[0].pointed);
            assert_eq!(profiles[0].rank as u64, (q as u64).pow(3));
        }
    }

    #[test]
    fn all_profiles_internally_consistent() {
        for q in [2usize, 3, 5, 7] {
            for p in enumerate_type_profiles_q_cubed(q).unwrap() {
                assert!(p.is_consistent());
            }
        }
    }

    #[test]
    fn gate_rejects_bad_input() {
        assert!(enumerate_type_profiles_q_cubed(4).is_err());
        assert!(enumerate_type_profiles_q_cubed(11).is_err());
    }
}
