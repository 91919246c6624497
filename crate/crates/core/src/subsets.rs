//! Lexicographic (dictionary) indexing of the size-`ell` subsets of
//! `{1, ..., n}`, represented as bitmasks with bit `i-1` standing for the
//! element `i`. For n = 4, ell = 2 the ranks 0..5 correspond to
//! 12, 13, 14, 23, 24, 34.

use crate::comb::binom_usize;
use crate::error::{Error, Result};

pub const MAX_GROUND_SET: usize = 64;

/// A ranked ell-subset of \[n\].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubsetIndex {
    pub n: usize,
    pub ell: usize,
    pub rank: usize,
}

impl SubsetIndex {
    pub fn new(n: usize, ell: usize, rank: usize) -> Result<Self> {
        let count = binom_usize(n, ell);
        if rank >= count {
            return Err(Error::RankOutOfRange { rank, count });
        }
        Ok(Self { n, ell, rank })
    }

    pub fn mask(&self) -> u64 {
        unrank_subset(self.n, self.ell, self.rank).expect("rank validated at construction")
    }

    /// Elements 1-based in increasing order.
    pub fn elements(&self) -> Vec<usize> {
        mask_elements(self.mask())
    }
}

/// 1-based elements of a bitmask, ascending.
pub fn mask_elements(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

/// Bitmask from 1-based elements.
pub fn elements_mask(elements: &[usize]) -> u64 {
    elements.iter().fold(0u64, |m, &e| m | 1 << (e - 1))
}

fn check_ground_set(n: usize) -> Result<()> {
    if n > MAX_GROUND_SET {
        return Err(Error::OutOfRange {
            name: "n",
            value: n as i64,
        });
    }
    Ok(())
}

/// Lexicographic rank of an ell-subset given as a bitmask.
pub fn rank_subset(n: usize, ell: usize, mask: u64) -> Result<usize> {
    check_ground_set(n)?;
    if n < 64 && mask >> n != 0 {
        return Err(Error::NotASubset { n });
    }
    let got = mask.count_ones() as usize;
    if got != ell {
        return Err(Error::WrongCardinality { got, want: ell });
    }
    let mut rank = 0usize;
    let mut prev = 0usize; // first candidate position, 0-based
    let mut taken = 0usize;
    for pos in 0..n {
        if mask >> pos & 1 == 1 {
            for skipped in prev..pos {
                rank += binom_usize(n - skipped - 1, ell - taken - 1);
            }
            prev = pos + 1;
            taken += 1;
        }
    }
    Ok(rank)
}

/// Bitmask of the ell-subset with the given lexicographic rank.
pub fn unrank_subset(n: usize, ell: usize, rank: usize) -> Result<u64> {
    check_ground_set(n)?;
    let count = binom_usize(n, ell);
    if rank >= count {
        return Err(Error::RankOutOfRange { rank, count });
    }
    let mut rank = rank;
    let mut mask = 0u64;
    let mut pos = 0usize;
    for i in 0..ell {
        loop {
            let with_here = binom_usize(n - pos - 1, ell - i - 1);
            if with_here <= rank {
                rank -= with_here;
                pos += 1;
            } else {
                mask |= 1 << pos;
                pos += 1;
                break;
            }
        }
    }
    Ok(mask)
}

/// All ell-subsets of \[n\] as bitmasks in lexicographic rank order.
pub fn subset_masks(n: usize, ell: usize) -> Vec<u64> {
    let count = binom_usize(n, ell);
    (0..count)
        .map(|r| unrank_subset(n, ell, r).expect("rank in range"))
        .collect()
}

/// Johnson distance |I \ J| between two equal-size subsets.
pub fn johnson_distance(a: u64, b: u64) -> Result<usize> {
    let ca = a.count_ones() as usize;
    let cb = b.count_ones() as usize;
    if ca != cb {
        return Err(Error::UnequalCardinalities { a: ca, b: cb });
    }
    Ok((a & !b).count_ones() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_for_n4_l2() {
        let expected: Vec<Vec<usize>> = vec![
            vec![1, 2],
            vec![1, 3],
            vec![1, 4],
            vec![2, 3],
            vec![2, 4],
            vec![3, 4],
        ];
        let masks = subset_masks(4, 2);
        let got: Vec<Vec<usize>> = masks.iter().map(|&m| mask_elements(m)).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn empty_subset() {
        assert_eq!(unrank_subset(5, 0, 0).unwrap(), 0);
        assert_eq!(rank_subset(5, 0, 0).unwrap(), 0);
    }

    #[test]
    fn round_trip_all_ranks() {
        // exhaustive oracle: enumerate increasing tuples in dictionary order
        fn tuples(n: usize, ell: usize) -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            fn rec(n: usize, ell: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
                if cur.len() == ell {
                    out.push(cur.clone());
                    return;
                }
                for v in start..=n {
                    cur.push(v);
                    rec(n, ell, v + 1, cur, out);
                    cur.pop();
                }
            }
            rec(n, ell, 1, &mut Vec::new(), &mut out);
            out
        }
        for (n, ell) in [(6, 3), (5, 2), (7, 4)] {
            let reference = tuples(n, ell);
            for (r, tuple) in reference.iter().enumerate() {
                let mask = unrank_subset(n, ell, r).unwrap();
                assert_eq!(&mask_elements(mask), tuple);
                assert_eq!(rank_subset(n, ell, mask).unwrap(), r);
            }
        }
    }

    #[test]
    fn rank_rejects_bad_input() {
        assert!(rank_subset(4, 2, 0b111).is_err());
        assert!(rank_subset(4, 2, 0b10001).is_err());
        assert!(unrank_subset(4, 2, 6).is_err());
    }

    #[test]
    fn johnson_distance_examples() {
        let a = elements_mask(&[1, 2]);
        let b = elements_mask(&[3, 4]);
        assert_eq!(johnson_distance(a, a).unwrap(), 0);
        assert_eq!(johnson_distance(a, b).unwrap(), 2);
        assert!(johnson_distance(a, elements_mask(&[1, 2, 3])).is_err());
    }

    #[test]
    fn johnson_distance_is_half_symmetric_difference() {
        let mut rng = crate::rng::SplitMix64::new(99);
        for _ in 0..200 {
            let n = 8;
            let ra = (rng.next_u64() % 70) as usize;
            let rb = (rng.next_u64() % 70) as usize;
            let a = unrank_subset(n, 4, ra).unwrap();
            let b = unrank_subset(n, 4, rb).unwrap();
            let d = johnson_distance(a, b).unwrap();
            assert_eq!(2 * d, (a ^ b).count_ones() as usize);
            assert_eq!(d, johnson_distance(b, a).unwrap());
            assert_eq!(d == 0, a == b);
        }
    }
}
