//! The built-in desk-scale corpus: group rings of all groups of order at
//! most 8, Tambara-Yamagami rings of all abelian groups of order at most 8,
//! the Fibonacci ring, and all pairwise Deligne products up to rank 12.

use crate::constructors::{fibonacci_ring, group_ring, ising_ring, tambara_yamagami_ring};
use crate::group::{abelian_groups_of_order, FiniteGroup};
use crate::modular::{
    ising_modular_data, modular_product, semion_modular_data, trivial_modular_data, ModularData,
};
use crate::ring::FusionRing;
use crate::structure::deligne_product;

#[derive(Clone, Debug)]
pub struct NamedRing {
    pub name: String,
    pub ring: FusionRing,
}

#[derive(Clone, Debug)]
pub struct NamedModular {
    pub name: String,
    pub data: ModularData,
}

/// All groups of order at most 8.
pub fn small_groups() -> Vec<FiniteGroup> {
    let mut out = Vec::new();
    for order in 1..=8usize {
        out.extend(abelian_groups_of_order(order));
        match order {
            6 => out.push(FiniteGroup::symmetric_3()),
            8 => {
                out.push(FiniteGroup::dihedral_4());
                out.push(FiniteGroup::quaternion_8());
            }
            _ => {}
        }
    }
    out
}

/// Base rings: group rings, TY rings, Fibonacci.
pub fn base_corpus() -> Vec<NamedRing> {
    let mut out = Vec::new();
    for g in small_groups() {
        out.push(NamedRing {
            name: format!("ring({})", g.name()),
            ring: group_ring(&g),
        });
    }
    for order in 2..=8usize {
        for g in abelian_groups_of_order(order) {
            out.push(NamedRing {
                name: format!("TY({})", g.name()),
                ring: tambara_yamagami_ring(&g).expect("abelian"),
            });
        }
    }
    out.push(NamedRing {
        name: "Fibonacci".into(),
        ring: fibonacci_ring(),
    });
    out
}

/// The full corpus: base rings plus all unordered pairwise Deligne products
/// of nontrivial base rings with product rank at most 12.
pub fn builtin_corpus() -> Vec<NamedRing> {
    let base = base_corpus();
    let mut out = base.clone();
    for (i, a) in base.iter().enumerate() {
        if a.ring.rank() < 2 {
            continue;
        }
        for b in base.iter().skip(i) {
            if b.ring.rank() < 2 {
                continue;
            }
            if a.ring.rank() * b.ring.rank() > 12 {
                continue;
            }
            out.push(NamedRing {
                name: format!("{} (x) {}", a.name, b.name),
                ring: deligne_product(&a.ring, &b.ring),
            });
        }
    }
    out
}

/// The modular corpus: the trivial theory, both semions, the eight Ising
/// data, and all sixteen semion (x) Ising products.
pub fn modular_corpus() -> Vec<NamedModular> {
    let mut out = vec![NamedModular {
        name: "trivial".into(),
        data: trivial_modular_data(),
    }];
    for positive in [true, false] {
        out.push(NamedModular {
            name: format!("semion({})", if positive { "+" } else { "-" }),
            data: semion_modular_data(positive),
        });
    }
    for k in 0..8i64 {
        let e = 2 * k + 1;
        out.push(NamedModular {
            name: format!("ising({e})"),
            data: ising_modular_data(e).expect("odd exponent"),
        });
    }
    for positive in [true, false] {
        let s = semion_modular_data(positive);
        for k in 0..8i64 {
            let e = 2 * k + 1;
            let i = ising_modular_data(e).expect("odd exponent");
            out.push(NamedModular {
                name: format!("semion({}) (x) ising({e})", if positive { "+" } else { "-" }),
                data: modular_product(&s, &i),
            });
        }
    }
    out
}

/// The Ising ring under its conventional name, for tests and docs.
pub fn ising() -> FusionRing {
    ising_ring()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_composition() {
        assert_eq!(small_groups().len(), 14);
        let base = base_corpus();
        // 14 group rings + 10 TY rings + Fibonacci
        assert_eq!(base.len(), 25);
        let full = builtin_corpus();
        assert!(full.len() > base.len());
        // names are unique
        let mut names: Vec<&str> = full.iter().map(|r| r.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), full.len());
        // every product respects the rank cutoff
        assert!(full.iter().all(|r| r.ring.rank() <= 12));
    }

    #[test]
    fn modular_corpus_composition() {
        let mc = modular_corpus();
        assert_eq!(mc.len(), 1 + 2 + 8 + 16);
    }
}
