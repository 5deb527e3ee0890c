//! Zero-sum partitions of `{1, …, n}`.
//!
//! Given sizes `r_1 + … + r_t = n` with every `r_i ≥ 2`, the set `{1, …, n}`
//! splits into parts of exactly those sizes whose sums all vanish modulo
//! `n + 1` (n even) or `n` (n odd).
//!
//! Working modulo `M`, every value `j` has a complement `M − j`, and the
//! complement pairs `{j, M − j}` are the building blocks: each even part is a
//! union of pairs. When `n` is odd, `n ≡ 0` is a zero-sum singleton that seeds
//! the first odd part. The remaining odd parts come in pairs, each pair built
//! from three complement pairs with classes `x + y = z`, resplit into the
//! zero-sum triples `{x, y, M − z}` and `{z, M − x, M − y}`. Disjoint
//! additive triples `(i, a_i + W, b_i + W)` come from a (hooked) Skolem
//! sequence `(a_i, b_i)` of order `W`.

use crate::error::{Error, Result};
use crate::skolem::skolem_pairs;

/// Largest `n` for which the exhaustive fallback is attempted.
const FALLBACK_LIMIT: u64 = 14;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResiduePartition {
    pub n: u64,
    pub modulus: u64,
    /// Parts in the order of the requested sizes, each sorted ascending.
    pub parts: Vec<Vec<u64>>,
}

/// `n + 1` for even `n`, `n` for odd `n`.
pub fn modulus_for(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        n + 1
    } else {
        n
    }
}

fn check_input(n: u64, sizes: &[usize]) -> Result<()> {
    if n < 2 {
        return Err(Error::Precondition(format!("n = {n} must be at least 2")));
    }
    if let Some(i) = sizes.iter().position(|&r| r < 2) {
        return Err(Error::Precondition(format!("part {i} has size {} < 2", sizes[i])));
    }
    let total: u64 = sizes.iter().map(|&r| r as u64).sum();
    if total != n {
        return Err(Error::Precondition(format!("sizes sum to {total}, expected {n}")));
    }
    let odd = sizes.iter().filter(|&&r| r % 2 == 1).count() as u64;
    assert_eq!(odd % 2, n % 2, "odd part count parity must match n");
    Ok(())
}

/// Partitions `{1, …, n}` into parts of the given sizes with zero sums
/// modulo [`modulus_for`]`(n)`. Deterministic.
pub fn residue_partition(n: u64, sizes: &[usize]) -> Result<ResiduePartition> {
    check_input(n, sizes)?;
    let partition = construct(n, sizes);
    match verify_residue_partition(&partition, n, sizes) {
        Ok(()) => Ok(partition),
        Err(reason) if n <= FALLBACK_LIMIT => {
            log::warn!("residue construction failed for n={n}, sizes={sizes:?}: {reason}; searching");
            exhaustive_residue_partition(n, sizes)
                .ok_or_else(|| Error::Internal(format!("no zero-sum partition of 1..={n} into {sizes:?}")))
        }
        Err(reason) => Err(Error::Internal(format!(
            "residue construction for n={n}, sizes={sizes:?}: {reason}"
        ))),
    }
}

fn construct(n: u64, sizes: &[usize]) -> ResiduePartition {
    let modulus = modulus_for(n);
    let half = (modulus - 1) / 2;
    let odd_parts: Vec<usize> = (0..sizes.len()).filter(|&i| sizes[i] % 2 == 1).collect();
    let singleton_part = (n % 2 == 1).then(|| odd_parts[0]);
    let triple_count = odd_parts.len() - usize::from(singleton_part.is_some());
    let order = triple_count / 2;

    let mut class_used = vec![false; half as usize + 1];
    let class = |v: u64| v.min(modulus - v) as usize;
    let mut triples = Vec::with_capacity(triple_count);
    for (i, &(a, b)) in skolem_pairs(order).iter().enumerate() {
        let x = (i + 1) as u64;
        let y = (a + order) as u64;
        let z = (b + order) as u64;
        for v in [x, y, z] {
            class_used[class(v)] = true;
        }
        let mut t1 = vec![x, y, modulus - z];
        let mut t2 = vec![z, modulus - x, modulus - y];
        t1.sort_unstable();
        t2.sort_unstable();
        triples.push(t1);
        triples.push(t2);
    }
    triples.sort();
    let pairs: Vec<[u64; 2]> = (1..=half)
        .filter(|&j| !class_used[j as usize])
        .map(|j| [j, modulus - j])
        .collect();

    let mut triples = triples.into_iter();
    let mut pairs = pairs.into_iter();
    let parts = sizes
        .iter()
        .enumerate()
        .map(|(i, &r)| {
            let mut part = Vec::with_capacity(r);
            if r % 2 == 1 {
                if Some(i) == singleton_part {
                    part.push(n);
                } else if let Some(t) = triples.next() {
                    part.extend(t);
                }
            }
            while part.len() + 1 < r {
                match pairs.next() {
                    Some(p) => part.extend(p),
                    None => break,
                }
            }
            part.sort_unstable();
            part
        })
        .collect();
    ResiduePartition { n, modulus, parts }
}

/// Checks disjointness, coverage of `1..=n`, part sizes and zero part sums.
pub fn verify_residue_partition(
    p: &ResiduePartition,
    n: u64,
    sizes: &[usize],
) -> std::result::Result<(), String> {
    let modulus = modulus_for(n);
    if p.n != n || p.modulus != modulus {
        return Err(format!(
            "partition declares n={}, modulus={}; expected n={n}, modulus={modulus}",
            p.n, p.modulus
        ));
    }
    if p.parts.len() != sizes.len() {
        return Err(format!("{} parts, expected {}", p.parts.len(), sizes.len()));
    }
    let mut seen = vec![false; n as usize + 1];
    for (i, part) in p.parts.iter().enumerate() {
        if part.len() != sizes[i] {
            return Err(format!("part {i} has size {}, expected {}", part.len(), sizes[i]));
        }
        for &v in part {
            if v == 0 || v > n {
                return Err(format!("part {i} contains {v}, outside 1..={n}"));
            }
            if std::mem::replace(&mut seen[v as usize], true) {
                return Err(format!("{v} appears twice"));
            }
        }
        let sum: u64 = part.iter().sum();
        if !sum.is_multiple_of(modulus) {
            return Err(format!("part {i} sums to {sum}, not 0 mod {modulus}"));
        }
    }
    if let Some(v) = (1..=n).find(|&v| !seen[v as usize]) {
        return Err(format!("{v} is not covered"));
    }
    Ok(())
}

/// Backtracking search, for small `n` only.
pub fn exhaustive_residue_partition(n: u64, sizes: &[usize]) -> Option<ResiduePartition> {
    let modulus = modulus_for(n);
    let mut used = vec![false; n as usize + 1];
    let mut parts: Vec<Vec<u64>> = sizes.iter().map(|&r| Vec::with_capacity(r)).collect();
    fn fill(
        part: usize,
        from: u64,
        sizes: &[usize],
        n: u64,
        modulus: u64,
        used: &mut [bool],
        parts: &mut Vec<Vec<u64>>,
    ) -> bool {
        if part == sizes.len() {
            return true;
        }
        if parts[part].len() == sizes[part] {
            let sum: u64 = parts[part].iter().sum();
            return sum.is_multiple_of(modulus) && fill(part + 1, 1, sizes, n, modulus, used, parts);
        }
        for v in from..=n {
            if used[v as usize] {
                continue;
            }
            used[v as usize] = true;
            parts[part].push(v);
            if fill(part, v + 1, sizes, n, modulus, used, parts) {
                return true;
            }
            parts[part].pop();
            used[v as usize] = false;
        }
        false
    }
    fill(0, 1, sizes, n, modulus, &mut used, &mut parts).then_some(ResiduePartition { n, modulus, parts })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_pairs_for_even_n() {
        let p = residue_partition(6, &[2, 2, 2]).unwrap();
        assert_eq!(p.modulus, 7);
        assert_eq!(p.parts, vec![vec![1, 6], vec![2, 5], vec![3, 4]]);
    }

    #[test]
    fn three_triples_for_nine() {
        let p = residue_partition(9, &[3, 3, 3]).unwrap();
        assert_eq!(p.parts, vec![vec![4, 5, 9], vec![1, 2, 6], vec![3, 7, 8]]);
        let sums: Vec<u64> = p.parts.iter().map(|q| q.iter().sum()).collect();
        assert_eq!(sums, vec![18, 9, 18]);
    }

    #[test]
    fn singleton_absorbed_for_odd_n() {
        let p = residue_partition(5, &[2, 3]).unwrap();
        assert_eq!(p.parts, vec![vec![1, 4], vec![2, 3, 5]]);
    }

    #[test]
    fn triple_shapes_match_small_rewrites() {
        // n even: {1,2,n-2} and {3,n-1,n}
        let p = residue_partition(10, &[3, 3, 4]).unwrap();
        assert_eq!(p.parts[0], vec![1, 2, 8]);
        assert_eq!(p.parts[1], vec![3, 9, 10]);
        // n odd: {1,2,n-3} and {3,n-2,n-1}
        let p = residue_partition(11, &[3, 3, 3, 2]).unwrap();
        assert_eq!(p.parts[1], vec![1, 2, 8]);
        assert_eq!(p.parts[2], vec![3, 9, 10]);
    }

    #[test]
    fn verifier_rejects_bad_partitions() {
        let bad_sum = ResiduePartition {
            n: 6,
            modulus: 7,
            parts: vec![vec![1, 2], vec![3, 4, 5, 6]],
        };
        assert!(verify_residue_partition(&bad_sum, 6, &[2, 4]).is_err());
        let good = residue_partition(6, &[2, 2, 2]).unwrap();
        assert!(verify_residue_partition(&good, 6, &[2, 2, 2]).is_ok());
        assert!(verify_residue_partition(&good, 6, &[3, 3]).is_err());
    }

    #[test]
    fn input_checks() {
        assert!(matches!(residue_partition(1, &[1]), Err(Error::Precondition(_))));
        assert!(matches!(
            residue_partition(5, &[1, 4]),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            residue_partition(6, &[2, 2]),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn all_threes_tight_cases() {
        // every part a triple: no complement pair is left over
        for q in 1..=60usize {
            let n = 3 * q as u64;
            let sizes = vec![3; q];
            let p = residue_partition(n, &sizes).unwrap();
            verify_residue_partition(&p, n, &sizes).unwrap();
        }
    }

    #[test]
    fn exhaustive_agrees_on_small_inputs() {
        for (n, sizes) in [(6u64, vec![3usize, 3]), (7, vec![3, 4]), (8, vec![2, 3, 3])] {
            let p = exhaustive_residue_partition(n, &sizes).unwrap();
            verify_residue_partition(&p, n, &sizes).unwrap();
        }
    }
}
