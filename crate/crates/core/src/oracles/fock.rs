//! The free-field module `F` of level -1 over affine `gl_n`, generated from
//! the vacuum by modes `phi^{(i)}_{-k}` (charge +1, weight `eps_i`) and
//! `phi^{(i)*}_{-k}` (charge -1, weight `-eps_i`), `k` in `1/2 + Z_{>=0}`.
//!
//! The defining relations are commutators, so modes may repeat: states are
//! pairs of multisets. Energies are kept doubled to stay integral.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Default cap on enumerated states.
pub const FOCK_STATE_BUDGET: u64 = 10_000_000;

/// One mode: color `1..=n` and doubled mode `2k` (odd, positive).
pub type Mode = (usize, u32);

/// Key of a Fock character term: charge, doubled energy, `gl_n` weight in
/// epsilon coordinates.
pub type FockKey = (i64, u32, Vec<i64>);

/// A truncated `gl_n` Fock character: multiplicities keyed by charge,
/// doubled energy and weight, for doubled energy up to `max_energy2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockCharacter {
    pub n: usize,
    pub max_energy2: u32,
    pub terms: BTreeMap<FockKey, BigInt>,
}

impl FockCharacter {
    fn new(n: usize, max_energy2: u32) -> Self {
        FockCharacter {
            n,
            max_energy2,
            terms: BTreeMap::new(),
        }
    }

    fn add(&mut self, key: FockKey, c: BigInt) {
        if key.1 > self.max_energy2 || c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_default();
        *slot += c;
    }

    /// Terms of the given charge.
    pub fn charge_slice(&self, s: i64) -> FockCharacter {
        FockCharacter {
            n: self.n,
            max_energy2: self.max_energy2,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.0 == s)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Applies the exchange `eps_j -> -eps_{n+1-j}` and negates the charge.
    pub fn charge_conjugate(&self) -> FockCharacter {
        let mut out = FockCharacter::new(self.n, self.max_energy2);
        for ((s, e, w), c) in &self.terms {
            let w2: Vec<i64> = (0..self.n).map(|j| -w[self.n - 1 - j]).collect();
            out.add((-s, *e, w2), c.clone());
        }
        out
    }
}

/// Expansion of `e^{-Lambda_0} prod_{j,k} (1 - x e^{eps_j} q^{k-1/2})^{-1}
/// (1 - x^{-1} e^{-eps_j} q^{k-1/2})^{-1}` to doubled energy `max_energy2`.
pub fn fock_char_product(n: usize, max_energy2: u32) -> FockCharacter {
    // Bucket by doubled energy so each geometric factor is a forward recursion.
    let mut buckets: Vec<BTreeMap<(i64, Vec<i64>), BigInt>> =
        vec![BTreeMap::new(); max_energy2 as usize + 1];
    buckets[0].insert((0, vec![0; n]), BigInt::from(1));
    let mut m = 1;
    while m <= max_energy2 {
        for j in 0..n {
            for sign in [1i64, -1] {
                for e in 0..=(max_energy2 - m) as usize {
                    let items: Vec<((i64, Vec<i64>), BigInt)> = buckets[e]
                        .iter()
                        .map(|(k, c)| (k.clone(), c.clone()))
                        .collect();
                    let target = &mut buckets[e + m as usize];
                    for ((s, w), c) in items {
                        let mut w2 = w;
                        w2[j] += sign;
                        *target.entry((s + sign, w2)).or_default() += c;
                    }
                }
            }
        }
        m += 2;
    }
    let mut out = FockCharacter::new(n, max_energy2);
    for (e, b) in buckets.into_iter().enumerate() {
        for ((s, w), c) in b {
            out.add((s, e as u32, w), c);
        }
    }
    out
}

/// All multisets of modes with total doubled energy at most `max_energy2`,
/// each as a nondecreasing list.
pub fn mode_multisets(n: usize, max_energy2: u32) -> Vec<Vec<Mode>> {
    let modes: Vec<Mode> = (1..=max_energy2)
        .step_by(2)
        .flat_map(|m| (1..=n).map(move |c| (c, m)))
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        modes: &[Mode],
        start: usize,
        budget: u32,
        cur: &mut Vec<Mode>,
        out: &mut Vec<Vec<Mode>>,
    ) {
        out.push(cur.clone());
        for i in start..modes.len() {
            if modes[i].1 <= budget {
                cur.push(modes[i]);
                rec(modes, i, budget - modes[i].1, cur, out);
                cur.pop();
            }
        }
    }
    rec(&modes, 0, max_energy2, &mut cur, &mut out);
    out
}

fn energy(ms: &[Mode]) -> u32 {
    ms.iter().map(|m| m.1).sum()
}

/// Visits every monomial state of charge `s` with doubled energy at most
/// `max_energy2`, as (creators, stars). Fails once more than `budget` states
/// have been produced.
pub fn for_each_state<F>(n: usize, s: i64, max_energy2: u32, budget: u64, mut f: F) -> Result<u64>
where
    F: FnMut(&[Mode], &[Mode]),
{
    let sets = mode_multisets(n, max_energy2);
    let mut by_len: BTreeMap<usize, Vec<&Vec<Mode>>> = BTreeMap::new();
    for m in &sets {
        by_len.entry(m.len()).or_default().push(m);
    }
    let mut count = 0u64;
    for cre in &sets {
        let want = cre.len() as i64 - s;
        if want < 0 {
            continue;
        }
        let e1 = energy(cre);
        if let Some(stars) = by_len.get(&(want as usize)) {
            for st in stars {
                if e1 + energy(st) <= max_energy2 {
                    count += 1;
                    if count > budget {
                        return Err(Error::BudgetExceeded(budget));
                    }
                    f(cre, st);
                }
            }
        }
    }
    Ok(count)
}

/// The charge-`s` part of the Fock character, by enumerating monomials.
pub fn fock_brute_force(n: usize, s: i64, max_energy2: u32) -> Result<FockCharacter> {
    let mut out = FockCharacter::new(n, max_energy2);
    for_each_state(n, s, max_energy2, FOCK_STATE_BUDGET, |cre, st| {
        let mut w = vec![0i64; n];
        for (c, _) in cre {
            w[c - 1] += 1;
        }
        for (c, _) in st {
            w[c - 1] -= 1;
        }
        out.add((s, energy(cre) + energy(st), w), BigInt::from(1));
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vacuum_and_single_creators() {
        let f = fock_char_product(3, 4);
        assert_eq!(f.terms[&(0, 0, vec![0, 0, 0])], BigInt::from(1));
        for j in 0..3 {
            let mut w = vec![0; 3];
            w[j] = 1;
            assert_eq!(f.terms[&(1, 1, w)], BigInt::from(1));
        }
        // Lowest energy of charge s is s/2.
        let lowest = f.charge_slice(3).terms.keys().map(|k| k.1).min();
        assert_eq!(lowest, Some(3));
    }

    #[test]
    fn brute_force_matches_product_slices() {
        for n in 1..=3 {
            let prod = fock_char_product(n, 6);
            for s in -3..=3 {
                assert_eq!(
                    fock_brute_force(n, s, 6).unwrap(),
                    prod.charge_slice(s),
                    "n={n} s={s}"
                );
            }
        }
    }

    #[test]
    fn nine_pairs_at_energy_one() {
        let f = fock_brute_force(3, 0, 2).unwrap();
        let total: BigInt = f
            .terms
            .iter()
            .filter(|(k, _)| k.1 == 2)
            .map(|(_, c)| c)
            .sum();
        assert_eq!(total, BigInt::from(9));
    }

    #[test]
    fn charge_conjugation_symmetry() {
        let prod = fock_char_product(3, 6);
        for s in 1..=3 {
            assert_eq!(
                prod.charge_slice(-s).charge_conjugate(),
                prod.charge_slice(s)
            );
        }
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            for_each_state(3, 0, 8, 10, |_, _| {}),
            Err(Error::BudgetExceeded(10))
        ));
    }
}
