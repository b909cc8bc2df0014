//! Finite groups as explicit multiplication tables, with the presets and
//! homomorphism enumeration the rest of the crate needs. The identity is
//! always element 0.

use crate::{Error, Result};
use std::collections::BTreeSet;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteGroup {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// Build from a multiplication table; checks the group axioms with
    /// identity at index 0.
    pub fn new(name: impl Into<String>, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty multiplication table".into()));
        }
        if labels.len() != n {
            return Err(Error::InvalidGroup("label count does not match order".into()));
        }
        for row in &table {
            if row.len() != n || row.iter().any(|&v| v >= n) {
                return Err(Error::InvalidGroup("malformed multiplication table".into()));
            }
        }
        for g in 0..n {
            if table[0][g] != g || table[g][0] != g {
                return Err(Error::InvalidGroup("element 0 is not an identity".into()));
            }
        }
        for g in 0..n {
            if !table[g].iter().any(|&v| v == 0) {
                return Err(Error::InvalidGroup(format!("element {g} has no inverse")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            name: name.into(),
            labels,
            table,
        })
    }

    pub fn trivial() -> Self {
        FiniteGroup {
            name: "Z1".into(),
            labels: vec!["1".into()],
            table: vec![vec![0]],
        }
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        FiniteGroup {
            name: format!("Z{n}"),
            labels,
            table,
        }
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let (na, nb) = (a.order(), b.order());
        let idx = |x: usize, y: usize| x * nb + y;
        let labels = (0..na * nb)
            .map(|i| {
                let (x, y) = (i / nb, i % nb);
                format!("({},{})", a.labels[x], b.labels[y])
            })
            .collect();
        let table = (0..na * nb)
            .map(|i| {
                let (x1, y1) = (i / nb, i % nb);
                (0..na * nb)
                    .map(|j| {
                        let (x2, y2) = (j / nb, j % nb);
                        idx(a.table[x1][x2], b.table[y1][y2])
                    })
                    .collect()
            })
            .collect();
        FiniteGroup {
            name: format!("{}x{}", a.name, b.name),
            labels,
            table,
        }
    }

    /// The symmetric group on three letters.
    pub fn symmetric_3() -> Self {
        Self::dihedral_like("S3", 3)
    }

    /// The dihedral group of order 8 (symmetries of the square).
    pub fn dihedral_4() -> Self {
        Self::dihedral_like("D4", 4)
    }

    fn dihedral_like(name: &str, n: usize) -> Self {
        let order = 2 * n;
        // 0..n are rotations r^i, n..2n are reflections r^i s.
        let encode = |i: usize, j: usize| i + n * j;
        let mut table = vec![vec![0; order]; order];
        for i1 in 0..n {
            for j1 in 0..2 {
                for i2 in 0..n {
                    for j2 in 0..2 {
                        // (r^i1 s^j1)(r^i2 s^j2); s r^k = r^(-k) s
                        let (i, j) = if j1 == 0 {
                            ((i1 + i2) % n, j2)
                        } else {
                            ((i1 + n - i2) % n, 1 - j2)
                        };
                        table[encode(i1, j1)][encode(i2, j2)] = encode(i, j);
                    }
                }
            }
        }
        let labels = (0..order)
            .map(|e| {
                let (i, j) = (e % n, e / n);
                match (i, j) {
                    (0, 0) => "1".to_string(),
                    (1, 0) => "r".to_string(),
                    (i, 0) => format!("r^{i}"),
                    (0, 1) => "s".to_string(),
                    (1, 1) => "rs".to_string(),
                    (i, _) => format!("r^{i}s"),
                }
            })
            .collect();
        FiniteGroup {
            name: name.to_string(),
            labels,
            table,
        }
    }

    /// The quaternion group of order 8.
    pub fn quaternion_8() -> Self {
        let labels: Vec<String> = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        // Element u*2 + s encodes (+/-) basis unit, s = 1 for the minus sign.
        let unit = |e: usize| e / 2;
        let sign = |e: usize| e % 2;
        let encode = |u: usize, s: usize| u * 2 + s;
        let unit_mul = |a: usize, b: usize| -> (usize, usize) {
            match (a, b) {
                (0, x) => (x, 0),
                (x, 0) => (x, 0),
                (x, y) if x == y => (0, 1), // i*i = -1
                (1, 2) => (3, 0),           // i*j = k
                (2, 1) => (3, 1),           // j*i = -k
                (2, 3) => (1, 0),           // j*k = i
                (3, 2) => (1, 1),           // k*j = -i
                (3, 1) => (2, 0),           // k*i = j
                (1, 3) => (2, 1),           // i*k = -j
                _ => unreachable!(),
            }
        };
        let mut table = vec![vec![0; 8]; 8];
        for a in 0..8 {
            for b in 0..8 {
                let (u, s) = unit_mul(unit(a), unit(b));
                table[a][b] = encode(u, (s + sign(a) + sign(b)) % 2);
            }
        }
        FiniteGroup {
            name: "Q8".into(),
            labels,
            table,
        }
    }

    // -- basic queries ------------------------------------------------------

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn table(&self) -> &Vec<Vec<usize>> {
        &self.table
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.table[a].iter().position(|&v| v == 0).unwrap()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order();
        (0..n).any(|a| self.element_order(a) == n)
    }

    /// Closure of a generating set (always contains the identity).
    pub fn subgroup_closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut set: BTreeSet<usize> = [0].into_iter().collect();
        for &g in gens {
            set.insert(g);
        }
        loop {
            let mut added = Vec::new();
            for &a in &set {
                for &b in &set {
                    let c = self.mul(a, b);
                    if !set.contains(&c) {
                        added.push(c);
                    }
                }
                let inv = self.inverse(a);
                if !set.contains(&inv) {
                    added.push(inv);
                }
            }
            if added.is_empty() {
                break;
            }
            set.extend(added);
        }
        set.into_iter().collect()
    }

    /// Derived series reaches the trivial subgroup.
    pub fn is_solvable(&self) -> bool {
        let mut current: Vec<usize> = (0..self.order()).collect();
        loop {
            let mut commutators = Vec::new();
            for &a in &current {
                for &b in &current {
                    let c = self.mul(
                        self.mul(a, b),
                        self.mul(self.inverse(a), self.inverse(b)),
                    );
                    if c != 0 {
                        commutators.push(c);
                    }
                }
            }
            let derived = self.subgroup_closure(&commutators);
            if derived.len() == 1 {
                return true;
            }
            if derived.len() == current.len() {
                return false;
            }
            current = derived;
        }
    }

    /// A generating sequence plus, for every element, a derivation as the
    /// identity, a generator, or a product of two earlier elements.
    fn generator_plan(&self) -> (Vec<usize>, Vec<Derivation>) {
        let n = self.order();
        let mut deriv: Vec<Option<Derivation>> = vec![None; n];
        deriv[0] = Some(Derivation::Identity);
        let mut gens = Vec::new();
        while deriv.iter().any(Option::is_none) {
            let g = (0..n).find(|&g| deriv[g].is_none()).unwrap();
            gens.push(g);
            deriv[g] = Some(Derivation::Generator(gens.len() - 1));
            let mut changed = true;
            while changed {
                changed = false;
                for a in 0..n {
                    if deriv[a].is_none() {
                        continue;
                    }
                    for b in 0..n {
                        if deriv[b].is_none() {
                            continue;
                        }
                        let c = self.mul(a, b);
                        if deriv[c].is_none() {
                            deriv[c] = Some(Derivation::Product(a, b));
                            changed = true;
                        }
                    }
                }
            }
        }
        (gens, deriv.into_iter().map(Option::unwrap).collect())
    }

    /// All homomorphisms from `self` to `dst`, as image tables, sorted.
    pub fn homomorphisms(&self, dst: &FiniteGroup) -> Vec<Vec<usize>> {
        let (gens, deriv) = self.generator_plan();
        let n = self.order();
        let m = dst.order();
        let mut out = Vec::new();
        let mut choice = vec![0usize; gens.len()];
        loop {
            let mut img = vec![0usize; n];
            // Derivations only reference earlier-derived elements, but the
            // element order is arbitrary, so resolve by fixpoint.
            for _ in 0..n {
                for e in 0..n {
                    img[e] = match deriv[e] {
                        Derivation::Identity => 0,
                        Derivation::Generator(k) => choice[k],
                        Derivation::Product(a, b) => dst.mul(img[a], img[b]),
                    };
                }
            }
            let ok = (0..n)
                .all(|a| (0..n).all(|b| img[self.mul(a, b)] == dst.mul(img[a], img[b])));
            if ok {
                out.push(img);
            }
            let mut k = 0;
            loop {
                if k == choice.len() {
                    out.sort();
                    out.dedup();
                    return out;
                }
                choice[k] += 1;
                if choice[k] < m {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
        }
    }

    /// A human-readable isomorphism-type name: abelian groups are matched
    /// against the cyclic-product catalog by element-order multiset (which
    /// determines an abelian group), others fall back to the stored name.
    pub fn describe(&self) -> String {
        if !self.is_abelian() {
            return self.name.clone();
        }
        let orders = |g: &FiniteGroup| {
            let mut v: Vec<usize> = (0..g.order()).map(|e| g.element_order(e)).collect();
            v.sort_unstable();
            v
        };
        let mine = orders(self);
        for candidate in abelian_groups_of_order(self.order()) {
            if orders(&candidate) == mine {
                return candidate.name.clone();
            }
        }
        self.name.clone()
    }

    /// Surjective homomorphisms onto `dst`.
    pub fn surjections(&self, dst: &FiniteGroup) -> Vec<Vec<usize>> {
        self.homomorphisms(dst)
            .into_iter()
            .filter(|img| {
                let mut seen = vec![false; dst.order()];
                for &v in img {
                    seen[v] = true;
                }
                seen.into_iter().all(|b| b)
            })
            .collect()
    }
}

#[derive(Clone, Copy)]
enum Derivation {
    Identity,
    Generator(usize),
    Product(usize, usize),
}

/// Parse a group specification: named presets `Zn`, `S3`, `D4`, `Q8`,
/// joined with `x` for direct products, e.g. `Z2xZ4`.
pub fn parse_group_spec(spec: &str) -> Result<FiniteGroup> {
    let parts: Vec<&str> = spec.split(['x', 'X']).map(str::trim).collect();
    let mut groups = Vec::new();
    for part in &parts {
        let g = match part.to_uppercase().as_str() {
            "S3" => FiniteGroup::symmetric_3(),
            "D4" => FiniteGroup::dihedral_4(),
            "Q8" => FiniteGroup::quaternion_8(),
            p if p.starts_with('Z') => {
                let n: usize = p[1..]
                    .parse()
                    .map_err(|_| Error::InvalidGroup(format!("bad group spec: {part}")))?;
                if n == 0 {
                    return Err(Error::InvalidGroup("Z0 is not a group".into()));
                }
                FiniteGroup::cyclic(n)
            }
            _ => return Err(Error::InvalidGroup(format!("unknown group: {part}"))),
        };
        groups.push(g);
    }
    let mut iter = groups.into_iter();
    let first = iter
        .next()
        .ok_or_else(|| Error::InvalidGroup("empty group spec".into()))?;
    Ok(iter.fold(first, |acc, g| FiniteGroup::direct_product(&acc, &g)))
}

/// All abelian groups of a given order, as products of cyclic factors.
pub fn abelian_groups_of_order(n: usize) -> Vec<FiniteGroup> {
    fn partitions(e: u32, max: u32) -> Vec<Vec<u32>> {
        if e == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=max.min(e)).rev() {
            for rest in partitions(e - first, first) {
                let mut v = vec![first];
                v.extend(rest);
                out.push(v);
            }
        }
        out
    }

    let mut m = n;
    let mut primes: Vec<(usize, u32)> = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            primes.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        primes.push((m, 1));
    }
    let mut combos: Vec<Vec<usize>> = vec![vec![]];
    for (p, e) in primes {
        let options: Vec<Vec<usize>> = partitions(e, e)
            .into_iter()
            .map(|parts| parts.into_iter().map(|k| p.pow(k)).collect())
            .collect();
        let mut next = Vec::new();
        for combo in &combos {
            for option in &options {
                let mut v = combo.clone();
                v.extend(option.iter().copied());
                next.push(v);
            }
        }
        combos = next;
    }
    combos
        .into_iter()
        .map(|factors| {
            let mut sorted = factors;
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            if sorted.is_empty() {
                return FiniteGroup::trivial();
            }
            let mut iter = sorted.into_iter();
            let first = FiniteGroup::cyclic(iter.next().unwrap());
            iter.fold(first, |acc, k| {
                FiniteGroup::direct_product(&acc, &FiniteGroup::cyclic(k))
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_are_groups() {
        for g in [
            FiniteGroup::trivial(),
            FiniteGroup::cyclic(6),
            FiniteGroup::symmetric_3(),
            FiniteGroup::dihedral_4(),
            FiniteGroup::quaternion_8(),
            FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(4)),
        ] {
            let rebuilt =
                FiniteGroup::new(g.name().to_string(), g.labels().to_vec(), g.table().clone());
            assert!(rebuilt.is_ok(), "{} is not a valid group", g.name());
        }
    }

    #[test]
    fn abelian_and_solvable_flags() {
        assert!(FiniteGroup::cyclic(5).is_abelian());
        assert!(!FiniteGroup::symmetric_3().is_abelian());
        assert!(FiniteGroup::symmetric_3().is_solvable());
        assert!(FiniteGroup::dihedral_4().is_solvable());
        assert!(!FiniteGroup::quaternion_8().is_abelian());
        assert!(FiniteGroup::quaternion_8().is_solvable());
    }

    #[test]
    fn element_orders_in_q8() {
        let q8 = FiniteGroup::quaternion_8();
        let mut orders: Vec<usize> = (0..8).map(|e| q8.element_order(e)).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 2, 4, 4, 4, 4, 4, 4]);
    }

    #[test]
    fn homomorphism_counts() {
        let z2 = FiniteGroup::cyclic(2);
        let z4 = FiniteGroup::cyclic(4);
        let v4 = FiniteGroup::direct_product(&z2, &z2);
        assert_eq!(z4.homomorphisms(&z2).len(), 2);
        assert_eq!(z4.surjections(&z2).len(), 1);
        assert_eq!(v4.homomorphisms(&z2).len(), 4);
        assert_eq!(v4.surjections(&z2).len(), 3);
        assert!(FiniteGroup::cyclic(2)
            .surjections(&FiniteGroup::cyclic(3))
            .is_empty());
        // sign map and the trivial map
        assert_eq!(FiniteGroup::symmetric_3().homomorphisms(&z2).len(), 2);
    }

    #[test]
    fn parse_specs() {
        assert_eq!(parse_group_spec("Z6").unwrap().order(), 6);
        assert_eq!(parse_group_spec("Z2xZ2").unwrap().order(), 4);
        assert_eq!(parse_group_spec("q8").unwrap().order(), 8);
        assert!(parse_group_spec("F17").is_err());
    }

    #[test]
    fn abelian_enumeration() {
        assert_eq!(abelian_groups_of_order(8).len(), 3);
        assert_eq!(abelian_groups_of_order(27).len(), 3);
        assert_eq!(abelian_groups_of_order(6).len(), 1);
        assert_eq!(abelian_groups_of_order(4).len(), 2);
    }
}
