//! Crisp (ordinary) set families and an independent topology checker.
//!
//! Every soft set over a context has a graph: the set of cells `(e, x)` with
//! `x ∈ F(e)`, a plain subset of the finite product `parameters × universe`.
//! A family of soft sets is a soft topology exactly when its family of
//! graphs is an ordinary topology on that product, which makes the crisp
//! side a genuinely independent referee for the soft axiom checker: same
//! question, different implementation.
//!
//! This module is written against its own little mask arithmetic rather
//! than the crate's soft machinery, on purpose — the two sides share
//! nothing but the raw cell data, so a bug in one cannot hide in the other.
//! It also provides [`count_topologies`], a dense census of all topologies
//! on a tiny universe, used to cross-check family enumeration counts.

use crate::error::Error;
use crate::softset::SoftSet;
use std::cmp::Ordering;

/// A family of subsets of a finite universe `{0, .., size-1}`, deduplicated
/// and kept in canonical order (lexicographic by membership string).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrispFamily {
    size: usize,
    masks: Vec<Vec<u64>>,
}

fn empty_mask(size: usize) -> Vec<u64> {
    vec![0; size.div_ceil(64)]
}

fn full_mask(size: usize) -> Vec<u64> {
    let mut m = vec![!0u64; size.div_ceil(64)];
    let tail = size % 64;
    if tail != 0 {
        if let Some(last) = m.last_mut() {
            *last &= (1u64 << tail) - 1;
        }
    }
    m
}

fn mask_or(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x | y).collect()
}

fn mask_and(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

/// Lexicographic comparison by membership string (element 0 first, absent
/// before present) — the same canonical order used for soft listings.
fn mask_cmp(a: &[u64], b: &[u64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            let bit = (x ^ y).trailing_zeros();
            return if x >> bit & 1 == 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            };
        }
    }
    Ordering::Equal
}

impl CrispFamily {
    /// Builds a family from element-index lists.
    pub fn new(size: usize, sets: &[Vec<usize>]) -> Result<CrispFamily, Error> {
        let mut masks: Vec<Vec<u64>> = Vec::with_capacity(sets.len());
        for set in sets {
            let mut mask = empty_mask(size);
            for &x in set {
                if x >= size {
                    return Err(Error::InvalidPoint(x));
                }
                mask[x / 64] |= 1 << (x % 64);
            }
            masks.push(mask);
        }
        Ok(CrispFamily::from_masks(size, masks))
    }

    fn from_masks(size: usize, mut masks: Vec<Vec<u64>>) -> CrispFamily {
        masks.sort_by(|a, b| mask_cmp(a, b));
        masks.dedup();
        CrispFamily { size, masks }
    }

    /// The family of graphs of a soft family over a context with `size`
    /// table cells: each soft set contributes the subset of flat cell
    /// indices at which it is set. This is the product-space reading of a
    /// soft family, defined for arbitrary families, valid or not.
    pub fn from_soft_family(size: usize, family: &[SoftSet]) -> CrispFamily {
        let masks = family
            .iter()
            .map(|set| {
                let mut mask = empty_mask(size);
                for cell in set.bits().iter_ones() {
                    mask[cell / 64] |= 1 << (cell % 64);
                }
                mask
            })
            .collect();
        CrispFamily::from_masks(size, masks)
    }

    pub fn universe_size(&self) -> usize {
        self.size
    }

    /// Number of distinct member sets.
    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    /// Member sets as ascending element-index lists, in canonical order.
    pub fn member_sets(&self) -> Vec<Vec<usize>> {
        self.masks
            .iter()
            .map(|mask| {
                (0..self.size)
                    .filter(|&x| mask[x / 64] >> (x % 64) & 1 == 1)
                    .collect()
            })
            .collect()
    }

    fn contains(&self, mask: &[u64]) -> bool {
        self.masks
            .binary_search_by(|m| mask_cmp(m, mask))
            .is_ok()
    }

    /// Is this family a topology on its universe? Checks the classical
    /// axioms directly: empty set, whole universe, and closure of every
    /// pair under union and intersection.
    pub fn is_topology(&self) -> bool {
        if !self.contains(&empty_mask(self.size)) || !self.contains(&full_mask(self.size)) {
            return false;
        }
        for i in 0..self.masks.len() {
            for j in i + 1..self.masks.len() {
                if !self.contains(&mask_or(&self.masks[i], &self.masks[j]))
                    || !self.contains(&mask_and(&self.masks[i], &self.masks[j]))
                {
                    return false;
                }
            }
        }
        true
    }
}

/// Counts all topologies on a universe of `points` elements by dense
/// enumeration of families of subsets.
///
/// Families are bitmasks over subset ids (a subset's id is its membership
/// bitmask), so union and intersection are id-level `|` and `&`; nothing
/// here touches the rest of the crate. Practical only for tiny universes:
/// the loop is over `2^(2^points)` candidates, hence the limit of 4 points.
pub fn count_topologies(points: usize) -> Result<u64, Error> {
    if points == 0 {
        return Err(Error::EmptyUniverse);
    }
    if points > 4 {
        return Err(Error::TooLarge {
            what: "the dense crisp topology census",
            cells: points,
            limit: 4,
        });
    }
    let subsets = 1usize << points; // subset ids 0..subsets
    let full = subsets - 1; // id of the whole universe
    let forced: u64 = 1 | (1u64 << full); // ∅ and the universe
    let free = subsets - 2; // every other subset may be in or out
    let mut count = 0u64;
    let mut members: Vec<usize> = Vec::with_capacity(subsets);
    'candidates: for v in 0..1u64 << free {
        // Spread the free bits over ids 1..full, then force ∅ and the universe.
        let mut family = forced;
        for k in 0..free {
            if v >> k & 1 == 1 {
                family |= 1 << (k + 1);
            }
        }
        members.clear();
        members.extend((0..subsets).filter(|&id| family >> id & 1 == 1));
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if family >> (a | b) & 1 == 0 || family >> (a & b) & 1 == 0 {
                    continue 'candidates;
                }
            }
        }
        count += 1;
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_topology_counts() {
        assert_eq!(count_topologies(1).unwrap(), 1);
        assert_eq!(count_topologies(2).unwrap(), 4);
        assert_eq!(count_topologies(3).unwrap(), 29);
        assert_eq!(count_topologies(4).unwrap(), 355);
        assert!(count_topologies(5).is_err());
    }

    #[test]
    fn axiom_checks_on_small_families() {
        let sierpinski = CrispFamily::new(2, &[vec![], vec![0], vec![0, 1]]).unwrap();
        assert!(sierpinski.is_topology());
        // {∅, {0}, {1}, X} is not closed under nothing — union {0,1} is X,
        // intersection is ∅; it *is* a topology. Drop X to break it.
        let broken = CrispFamily::new(2, &[vec![], vec![0], vec![1]]).unwrap();
        assert!(!broken.is_topology());
        let no_empty = CrispFamily::new(2, &[vec![0], vec![0, 1]]).unwrap();
        assert!(!no_empty.is_topology());
    }

    #[test]
    fn members_list_in_canonical_order() {
        let fam = CrispFamily::new(3, &[vec![2], vec![0], vec![], vec![0], vec![1, 2]]).unwrap();
        assert_eq!(fam.len(), 4); // duplicate {0} collapsed
        assert_eq!(
            fam.member_sets(),
            vec![vec![], vec![2], vec![1, 2], vec![0]]
        );
    }
}
