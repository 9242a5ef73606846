//! Enumeration of elementary abelian 2-subgroups of maximal order inside an
//! explicitly listed finite group.
//!
//! Works over element indices `0..size` with a caller-supplied multiplication,
//! so the same search serves presented 2-groups and permutation 2-groups. A
//! set of pairwise commuting involutions generates an elementary abelian
//! subgroup, and adjoining one further commuting involution exactly doubles
//! the element set, so the search grows subgroups one involution at a time in
//! increasing element order. Every elementary abelian subgroup is reached by
//! adding its missing elements least-first, which keeps the growth rule
//! complete. Two prunes keep the search small: a state whose subgroup plus
//! remaining candidates cannot beat the best order so far is cut, and a state
//! whose candidates all commute pairwise is closed in one step (its unique
//! maximal extension).

use std::collections::HashSet;

pub type Mul<'a> = dyn Fn(usize, usize) -> usize + 'a;

struct Search<'a> {
    mul: &'a Mul<'a>,
    involutions: Vec<usize>,
    best_order: usize,
    best: Vec<Vec<usize>>,
    seen_best: HashSet<Vec<usize>>,
}

/// All elementary abelian subgroups of maximal order, as sorted element-index
/// sets, returned in lexicographic order. The trivial group yields `[[id]]`.
pub fn maximal_order_elementary_abelians(size: usize, id: usize, mul: &Mul<'_>) -> Vec<Vec<usize>> {
    let involutions: Vec<usize> = (0..size).filter(|&e| e != id && mul(e, e) == id).collect();
    let mut search = Search {
        mul,
        involutions,
        best_order: 1,
        best: vec![vec![id]],
        seen_best: HashSet::new(),
    };
    search.seen_best.insert(vec![id]);
    search.grow(&[id], None);
    search.best.sort();
    search.best
}

/// The 2-rank: log2 of the maximal order of an elementary abelian subgroup.
pub fn two_rank(size: usize, id: usize, mul: &Mul<'_>) -> u32 {
    let best = maximal_order_elementary_abelians(size, id, mul);
    best[0].len().trailing_zeros()
}

impl Search<'_> {
    fn record(&mut self, subgroup: Vec<usize>) {
        use std::cmp::Ordering;
        match subgroup.len().cmp(&self.best_order) {
            Ordering::Greater => {
                self.best_order = subgroup.len();
                self.best.clear();
                self.seen_best.clear();
                self.seen_best.insert(subgroup.clone());
                self.best.push(subgroup);
            }
            Ordering::Equal => {
                if self.seen_best.insert(subgroup.clone()) {
                    self.best.push(subgroup);
                }
            }
            Ordering::Less => {}
        }
    }

    fn grow(&mut self, current: &[usize], last: Option<usize>) {
        let commutes_with_all = |cand: usize, members: &[usize], mul: &Mul<'_>| -> bool {
            members.iter().all(|&m| mul(cand, m) == mul(m, cand))
        };
        let cands: Vec<usize> = self
            .involutions
            .iter()
            .copied()
            .filter(|&c| {
                current.binary_search(&c).is_err() && commutes_with_all(c, current, self.mul)
            })
            .collect();

        if current.len() + cands.len() < self.best_order {
            return;
        }
        self.record(current.to_vec());
        if cands.is_empty() {
            return;
        }

        let pairwise = cands.iter().enumerate().all(|(i, &a)| {
            cands[i + 1..]
                .iter()
                .all(|&b| (self.mul)(a, b) == (self.mul)(b, a))
        });
        if pairwise {
            // unique maximal extension: close over all candidates at once
            let mut sub = current.to_vec();
            for &c in &cands {
                if sub.binary_search(&c).is_err() {
                    sub = self.double(&sub, c);
                }
            }
            self.record(sub);
            return;
        }

        for &c in &cands {
            if let Some(last) = last {
                if c <= last {
                    continue;
                }
            }
            let next = self.double(current, c);
            self.grow(&next, Some(c));
        }
    }

    /// `<current, c>` for a commuting involution `c` outside: the union of
    /// `current` and `current * c`, kept sorted.
    fn double(&self, current: &[usize], c: usize) -> Vec<usize> {
        let mut next: Vec<usize> = current
            .iter()
            .map(|&u| (self.mul)(u, c))
            .chain(current.iter().copied())
            .collect();
        next.sort_unstable();
        next.dedup();
        debug_assert_eq!(next.len(), 2 * current.len());
        next
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Z/2^k as indices 0..2^k with addition mod 2^k is cyclic; its unique
    // involution is 2^{k-1}.
    #[test]
    fn cyclic_group_has_rank_one() {
        let mul = |a: usize, b: usize| (a + b) % 8;
        let best = maximal_order_elementary_abelians(8, 0, &mul);
        assert_eq!(best, vec![vec![0, 4]]);
        assert_eq!(two_rank(8, 0, &mul), 1);
    }

    // (Z/2)^3 via xor: whole group is the unique maximum.
    #[test]
    fn elementary_abelian_group_is_its_own_maximum() {
        let mul = |a: usize, b: usize| a ^ b;
        let best = maximal_order_elementary_abelians(8, 0, &mul);
        assert_eq!(best, vec![(0..8).collect::<Vec<_>>()]);
        assert_eq!(two_rank(8, 0, &mul), 3);
    }

    #[test]
    fn trivial_group() {
        let mul = |_: usize, _: usize| 0usize;
        assert_eq!(maximal_order_elementary_abelians(1, 0, &mul), vec![vec![0]]);
        assert_eq!(two_rank(1, 0, &mul), 0);
    }

    // D8 as the 8 symmetries of a square, elements encoded 0..8 = r^i s^e.
    #[test]
    fn dihedral_eight_has_two_four_groups() {
        let mul = |a: usize, b: usize| {
            let (ra, sa) = (a / 2, a % 2);
            let (rb, sb) = (b / 2, b % 2);
            // (r^ra s^sa)(r^rb s^sb): s r = r^{-1} s
            let r = if sa == 1 {
                (ra + 4 - rb) % 4
            } else {
                (ra + rb) % 4
            };
            r * 2 + (sa ^ sb)
        };
        let best = maximal_order_elementary_abelians(8, 0, &mul);
        assert_eq!(best.len(), 2);
        assert!(best.iter().all(|s| s.len() == 4));
        // both contain the central rotation r^2 (encoded 4)
        assert!(best.iter().all(|s| s.contains(&4)));
    }
}
