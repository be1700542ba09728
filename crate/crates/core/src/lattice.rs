//! Finite bounded lattices given by their order relation.
//!
//! This is the shared order-theoretic layer under both
//! [`ResiduatedLattice`](crate::ResiduatedLattice) and
//! [`BDLattice`](crate::dlattice::BDLattice).

use alloc::string::String;
use alloc::vec::Vec;

use crate::elemset::{ElemSet, MAX_ELEMS};
use crate::error::{Axiom, Error};

/// Element id. Ids are `0..size`; labels are cosmetic.
pub type Elem = usize;

/// A validated finite bounded lattice.
///
/// `up[a]` is the principal up-set `{b | a <= b}`; `down[a]` the principal
/// down-set. Join and meet are stored as dense `size x size` tables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    labels: Vec<String>,
    up: Vec<ElemSet>,
    down: Vec<ElemSet>,
    join: Vec<u8>,
    meet: Vec<u8>,
    bot: Elem,
    top: Elem,
}

/// Reflexive-transitive closure of a covering relation, as up-sets.
///
/// `pairs` are `(lo, hi)` meaning `lo < hi`.
pub fn up_sets_from_pairs(n: usize, pairs: &[(Elem, Elem)]) -> Vec<ElemSet> {
    let mut up: Vec<ElemSet> = (0..n).map(ElemSet::singleton).collect();
    for &(lo, hi) in pairs {
        up[lo].insert(hi);
    }
    // Warshall on bit rows.
    for k in 0..n {
        for i in 0..n {
            if up[i].contains(k) {
                up[i] = up[i].union(up[k]);
            }
        }
    }
    up
}

/// Covering pairs `(lo, hi)` of a partial order given by up-sets, in id order.
pub fn covering_pairs(up: &[ElemSet]) -> Vec<(Elem, Elem)> {
    let n = up.len();
    let mut out = Vec::new();
    for a in 0..n {
        let strict = up[a].difference(ElemSet::singleton(a));
        for b in strict.iter() {
            // b covers a iff no c strictly between.
            let between = strict
                .iter()
                .any(|c| c != b && up[c].contains(b) && c != a);
            if !between {
                out.push((a, b));
            }
        }
    }
    out
}

impl Lattice {
    /// Validates a partial order (as up-sets) and derives join/meet.
    pub fn from_up_sets(labels: Vec<String>, up: Vec<ElemSet>) -> Result<Self, Error> {
        let n = up.len();
        if n == 0 {
            return Err(Error::InvalidArgument("empty carrier".into()));
        }
        if n > MAX_ELEMS {
            return Err(Error::TooLarge { size: n, max: MAX_ELEMS });
        }
        if labels.len() != n {
            return Err(Error::Dimension {
                what: "labels",
                expected: n,
                found: labels.len(),
            });
        }
        let full = ElemSet::full(n);
        for a in 0..n {
            if !up[a].is_subset(full) {
                return Err(Error::Dimension {
                    what: "order row",
                    expected: n,
                    found: 64 - up[a].0.leading_zeros() as usize,
                });
            }
            if !up[a].contains(a) {
                return Err(Error::AxiomViolation { axiom: Axiom::Reflexivity, witness: [a, a, a] });
            }
        }
        for a in 0..n {
            for b in up[a].iter() {
                if b != a && up[b].contains(a) {
                    return Err(Error::AxiomViolation { axiom: Axiom::Antisymmetry, witness: [a, b, a] });
                }
                for c in up[b].iter() {
                    if !up[a].contains(c) {
                        return Err(Error::AxiomViolation { axiom: Axiom::Transitivity, witness: [a, b, c] });
                    }
                }
            }
        }
        let mut down = alloc::vec![ElemSet::EMPTY; n];
        for a in 0..n {
            for b in up[a].iter() {
                down[b].insert(a);
            }
        }
        let bot = (0..n).find(|&a| up[a] == full);
        let top = (0..n).find(|&a| down[a] == full);
        let bot = bot.ok_or(Error::AxiomViolation { axiom: Axiom::Bottom, witness: [0, 0, 0] })?;
        let top = top.ok_or(Error::AxiomViolation { axiom: Axiom::Top, witness: [0, 0, 0] })?;

        let mut join = alloc::vec![0u8; n * n];
        let mut meet = alloc::vec![0u8; n * n];
        for a in 0..n {
            for b in 0..n {
                let ub = up[a].intersection(up[b]);
                let lub = ub.iter().find(|&u| ub.is_subset(up[u]));
                let lb = down[a].intersection(down[b]);
                let glb = lb.iter().find(|&l| lb.is_subset(down[l]));
                join[a * n + b] = lub
                    .ok_or(Error::AxiomViolation { axiom: Axiom::JoinExists, witness: [a, b, a] })?
                    as u8;
                meet[a * n + b] = glb
                    .ok_or(Error::AxiomViolation { axiom: Axiom::MeetExists, witness: [a, b, a] })?
                    as u8;
            }
        }
        Ok(Lattice { labels, up, down, join, meet, bot, top })
    }

    pub fn from_pairs(labels: Vec<String>, pairs: &[(Elem, Elem)]) -> Result<Self, Error> {
        let n = labels.len();
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::InvalidArgument(alloc::format!("order pair ({a},{b}) out of range")));
            }
        }
        Self::from_up_sets(labels, up_sets_from_pairs(n, pairs))
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.up.len()
    }

    #[inline]
    pub fn elements(&self) -> core::ops::Range<Elem> {
        0..self.size()
    }

    #[inline]
    pub fn carrier(&self) -> ElemSet {
        ElemSet::full(self.size())
    }

    #[inline]
    pub fn bot(&self) -> Elem {
        self.bot
    }

    #[inline]
    pub fn top(&self) -> Elem {
        self.top
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.up[a].contains(b)
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a * self.size() + b] as Elem
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a * self.size() + b] as Elem
    }

    /// `{b | a <= b}`.
    #[inline]
    pub fn up_set(&self, a: Elem) -> ElemSet {
        self.up[a]
    }

    /// `{b | b <= a}`.
    #[inline]
    pub fn down_set(&self, a: Elem) -> ElemSet {
        self.down[a]
    }

    pub fn up_sets(&self) -> &[ElemSet] {
        &self.up
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.size());
        self.labels = labels;
        self
    }

    /// Join of a set; the empty join is `bot`.
    pub fn join_all(&self, s: ElemSet) -> Elem {
        s.iter().fold(self.bot, |acc, x| self.join(acc, x))
    }

    /// Meet of a set; the empty meet is `top`.
    pub fn meet_all(&self, s: ElemSet) -> Elem {
        s.iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Upward closure of a set.
    pub fn up_closure(&self, s: ElemSet) -> ElemSet {
        s.iter().fold(ElemSet::EMPTY, |acc, x| acc.union(self.up[x]))
    }

    pub fn is_up_set(&self, s: ElemSet) -> bool {
        self.up_closure(s) == s
    }

    pub fn is_chain(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.leq(a, b) || self.leq(b, a)))
    }

    /// First `(a, b, c)` with `a & (b | c) != (a & b) | (a & c)`.
    pub fn distributivity_witness(&self) -> Option<[Elem; 3]> {
        for a in self.elements() {
            for b in self.elements() {
                for c in self.elements() {
                    let l = self.meet(a, self.join(b, c));
                    let r = self.join(self.meet(a, b), self.meet(a, c));
                    if l != r {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    /// Elements having a lattice complement.
    pub fn complemented(&self) -> ElemSet {
        self.elements()
            .filter(|&a| {
                self.elements()
                    .any(|b| self.join(a, b) == self.top && self.meet(a, b) == self.bot)
            })
            .collect()
    }

    pub fn covering_pairs(&self) -> Vec<(Elem, Elem)> {
        covering_pairs(&self.up)
    }

    /// Applies a relabelling `perm` (old id -> new id).
    pub fn permuted(&self, perm: &[Elem]) -> Lattice {
        let n = self.size();
        let mut up = alloc::vec![ElemSet::EMPTY; n];
        let mut labels = alloc::vec![String::new(); n];
        for a in 0..n {
            up[perm[a]] = self.up[a].iter().map(|b| perm[b]).collect();
            labels[perm[a]] = self.labels[a].clone();
        }
        Lattice::from_up_sets(labels, up).expect("relabelling preserves lattice axioms")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn lozenge_join_meet() {
        let l = Lattice::from_pairs(labels(4), &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(l.join(1, 2), 3);
        assert_eq!(l.meet(1, 2), 0);
        assert!(l.is_distributive());
        assert_eq!(l.complemented(), ElemSet::full(4));
        assert_eq!(l.covering_pairs(), alloc::vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn diamond_is_not_distributive() {
        let l = Lattice::from_pairs(labels(5), &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert!(!l.is_distributive());
    }

    #[test]
    fn missing_join_rejected() {
        // 0 < a,b < c,d < 1 with both c and d above a and b.
        let pairs = [(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 5), (4, 5)];
        let err = Lattice::from_pairs(labels(6), &pairs).unwrap_err();
        assert!(matches!(err, Error::AxiomViolation { axiom: Axiom::JoinExists, .. }));
    }

    #[test]
    fn cycle_rejected() {
        let err = Lattice::from_pairs(labels(3), &[(0, 1), (1, 2), (2, 1)]).unwrap_err();
        assert!(matches!(err, Error::AxiomViolation { axiom: Axiom::Antisymmetry, .. }));
    }
}
