//! Finite residuated lattices: validation, residuum derivation and the basic
//! derived operations.

use alloc::string::String;
use alloc::vec::Vec;

use crate::elemset::ElemSet;
use crate::error::{Axiom, Error};
use crate::lattice::{Elem, Lattice};

/// Unvalidated description of an algebra, as it comes from a file or a
/// constructor. `order` holds pairs `(lo, hi)` with `lo < hi`; the partial
/// order is their reflexive-transitive closure. `imp = None` means "derive".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawAlgebra {
    pub labels: Vec<String>,
    pub order: Vec<(Elem, Elem)>,
    pub odot: Vec<Vec<Elem>>,
    pub imp: Option<Vec<Vec<Elem>>>,
}

/// A validated finite commutative integral bounded residuated lattice.
///
/// Immutable once built; every table is total and every axiom has been
/// checked exhaustively.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResiduatedLattice {
    lattice: Lattice,
    odot: Vec<u8>,
    imp: Vec<u8>,
}

fn check_table(what: &'static str, t: &[Vec<Elem>], n: usize) -> Result<Vec<u8>, Error> {
    if t.len() != n {
        return Err(Error::Dimension { what, expected: n, found: t.len() });
    }
    let mut flat = Vec::with_capacity(n * n);
    for row in t {
        if row.len() != n {
            return Err(Error::Dimension { what, expected: n, found: row.len() });
        }
        for &v in row {
            if v >= n {
                return Err(Error::InvalidArgument(alloc::format!("{what} entry {v} out of range")));
            }
            flat.push(v as u8);
        }
    }
    Ok(flat)
}

/// Computes `b -> c = max {a | a * b <= c}` for every pair.
///
/// Fails with [`Error::NotResiduated`] at the first pair (in id order) whose
/// candidate set has no maximum.
pub fn derive_implication(lattice: &Lattice, odot: &[Vec<Elem>]) -> Result<Vec<Vec<Elem>>, Error> {
    let n = lattice.size();
    let flat = check_table("odot", odot, n)?;
    let imp = derive_flat(lattice, &flat)?;
    Ok(imp.chunks(n).map(|r| r.iter().map(|&v| v as Elem).collect()).collect())
}

fn derive_flat(lattice: &Lattice, odot: &[u8]) -> Result<Vec<u8>, Error> {
    let n = lattice.size();
    let mut imp = alloc::vec![0u8; n * n];
    for b in 0..n {
        for c in 0..n {
            let cands: ElemSet = (0..n)
                .filter(|&a| lattice.leq(odot[a * n + b] as Elem, c))
                .collect();
            let max = cands.iter().find(|&m| cands.is_subset(lattice.down_set(m)));
            imp[b * n + c] = max.ok_or(Error::NotResiduated { b, c })? as u8;
        }
    }
    Ok(imp)
}

impl ResiduatedLattice {
    /// Validates a raw description; see [`ResiduatedLattice::from_lattice`].
    pub fn validate(raw: &RawAlgebra) -> Result<Self, Error> {
        let lattice = Lattice::from_pairs(raw.labels.clone(), &raw.order)?;
        Self::from_lattice(lattice, &raw.odot, raw.imp.as_deref())
    }

    /// Checks the monoid axioms, then residuation against the given `imp`
    /// (or derives it), then the derived laws. Failures report the first
    /// witness in lexicographic id order.
    pub fn from_lattice(lattice: Lattice, odot: &[Vec<Elem>], imp: Option<&[Vec<Elem>]>) -> Result<Self, Error> {
        let n = lattice.size();
        let odot = check_table("odot", odot, n)?;
        let top = lattice.top();
        let o = |a: Elem, b: Elem| odot[a * n + b] as Elem;
        for a in 0..n {
            if o(a, top) != a || o(top, a) != a {
                return Err(Error::AxiomViolation { axiom: Axiom::OdotIdentity, witness: [a, top, a] });
            }
            for b in 0..n {
                if o(a, b) != o(b, a) {
                    return Err(Error::AxiomViolation { axiom: Axiom::OdotCommutative, witness: [a, b, a] });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if o(o(a, b), c) != o(a, o(b, c)) {
                        return Err(Error::AxiomViolation { axiom: Axiom::OdotAssociative, witness: [a, b, c] });
                    }
                }
            }
        }
        let imp = match imp {
            Some(t) => check_table("imp", t, n)?,
            None => derive_flat(&lattice, &odot)?,
        };
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = lattice.leq(o(a, b), c);
                    let rhs = lattice.leq(a, imp[b * n + c] as Elem);
                    if lhs != rhs {
                        return Err(Error::AxiomViolation { axiom: Axiom::Residuation, witness: [a, b, c] });
                    }
                }
            }
        }
        let alg = ResiduatedLattice { lattice, odot, imp };
        alg.check_derived_laws()?;
        Ok(alg)
    }

    /// Re-checks consequences of the axioms that the rest of the crate relies
    /// on: distributivity of `*` over joins, `a * b <= a & b`, `a * !a = 0`.
    pub fn check_derived_laws(&self) -> Result<(), Error> {
        for a in self.elements() {
            if self.odot(a, self.neg(a)) != self.bot() {
                return Err(Error::AxiomViolation { axiom: Axiom::OdotWithNegation, witness: [a, a, a] });
            }
            for x in self.elements() {
                if !self.leq(self.odot(a, x), self.meet(a, x)) {
                    return Err(Error::AxiomViolation { axiom: Axiom::OdotBelowMeet, witness: [a, x, x] });
                }
                for y in self.elements() {
                    let l = self.odot(a, self.join(x, y));
                    let r = self.join(self.odot(a, x), self.odot(a, y));
                    if l != r {
                        return Err(Error::AxiomViolation {
                            axiom: Axiom::OdotDistributesOverJoin,
                            witness: [a, x, y],
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.lattice.size()
    }

    #[inline]
    pub fn elements(&self) -> core::ops::Range<Elem> {
        self.lattice.elements()
    }

    #[inline]
    pub fn carrier(&self) -> ElemSet {
        self.lattice.carrier()
    }

    #[inline]
    pub fn bot(&self) -> Elem {
        self.lattice.bot()
    }

    #[inline]
    pub fn top(&self) -> Elem {
        self.lattice.top()
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.lattice.leq(a, b)
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.lattice.join(a, b)
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.lattice.meet(a, b)
    }

    #[inline]
    pub fn odot(&self, a: Elem, b: Elem) -> Elem {
        self.odot[a * self.size() + b] as Elem
    }

    #[inline]
    pub fn imp(&self, a: Elem, b: Elem) -> Elem {
        self.imp[a * self.size() + b] as Elem
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.imp(a, self.bot())
    }

    /// `a <-> b = (a -> b) & (b -> a)`.
    #[inline]
    pub fn biresiduum(&self, a: Elem, b: Elem) -> Elem {
        self.meet(self.imp(a, b), self.imp(b, a))
    }

    /// `a^k`, with `a^0 = 1`.
    pub fn pow(&self, a: Elem, k: u32) -> Elem {
        (0..k).fold(self.top(), |acc, _| self.odot(acc, a))
    }

    /// The stationary value of `a, a^2, a^3, ...`; reached within `size` steps.
    pub fn stable_power(&self, a: Elem) -> Elem {
        let mut p = a;
        loop {
            let q = self.odot(p, a);
            if q == p {
                return p;
            }
            p = q;
        }
    }

    /// `a^1, ..., a^size`.
    pub fn powers(&self, a: Elem) -> Vec<Elem> {
        let mut out = Vec::with_capacity(self.size());
        let mut p = a;
        for _ in 0..self.size() {
            out.push(p);
            p = self.odot(p, a);
        }
        out
    }

    pub fn odot_all(&self, s: ElemSet) -> Elem {
        s.iter().fold(self.top(), |acc, x| self.odot(acc, x))
    }

    pub fn label(&self, a: Elem) -> &str {
        self.lattice.label(a)
    }

    pub fn labels(&self) -> &[String] {
        self.lattice.labels()
    }

    pub fn index_of(&self, label: &str) -> Option<Elem> {
        self.lattice.index_of(label)
    }

    pub fn odot_table(&self) -> Vec<Vec<Elem>> {
        let n = self.size();
        self.odot.chunks(n).map(|r| r.iter().map(|&v| v as Elem).collect()).collect()
    }

    pub fn imp_table(&self) -> Vec<Vec<Elem>> {
        let n = self.size();
        self.imp.chunks(n).map(|r| r.iter().map(|&v| v as Elem).collect()).collect()
    }

    /// Description that validates back to `self`, with covering pairs as order
    /// and an explicit implication table.
    pub fn to_raw(&self) -> RawAlgebra {
        RawAlgebra {
            labels: self.labels().to_vec(),
            order: self.lattice.covering_pairs(),
            odot: self.odot_table(),
            imp: Some(self.imp_table()),
        }
    }

    pub fn with_labels(self, labels: Vec<String>) -> Self {
        ResiduatedLattice { lattice: self.lattice.with_labels(labels), ..self }
    }

    /// The same algebra with every id `a` renamed to `perm[a]`.
    pub fn permuted(&self, perm: &[Elem]) -> ResiduatedLattice {
        let n = self.size();
        let lattice = self.lattice.permuted(perm);
        let mut odot = alloc::vec![0u8; n * n];
        let mut imp = alloc::vec![0u8; n * n];
        for a in 0..n {
            for b in 0..n {
                odot[perm[a] * n + perm[b]] = perm[self.odot(a, b)] as u8;
                imp[perm[a] * n + perm[b]] = perm[self.imp(a, b)] as u8;
            }
        }
        ResiduatedLattice { lattice, odot, imp }
    }

    /// Whether `odot` coincides with `meet`.
    pub fn odot_is_meet(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.odot(a, b) == self.meet(a, b)))
    }

    pub fn is_chain(&self) -> bool {
        self.lattice.is_chain()
    }

    pub fn is_distributive(&self) -> bool {
        self.lattice.is_distributive()
    }

    pub fn is_trivial(&self) -> bool {
        self.size() == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn b2_implication_is_boolean() {
        let b2 = fixtures::b2();
        // 0 -> x = 1, 1 -> x = x
        assert_eq!(b2.imp_table(), alloc::vec![alloc::vec![1, 1], alloc::vec![0, 1]]);
    }

    #[test]
    fn exlpdif_validates_with_given_imp() {
        let e1 = fixtures::exlpdif();
        assert_eq!(e1.size(), 5);
        assert!(e1.odot_is_meet());
    }

    #[test]
    fn exlpdif_tampered_imp_is_rejected() {
        let mut raw = fixtures::exlpdif_raw();
        let (a, zero, b) = (1, 0, 2);
        let imp = raw.imp.as_mut().unwrap();
        assert_eq!(imp[a][zero], b);
        imp[a][zero] = a;
        let err = ResiduatedLattice::validate(&raw).unwrap_err();
        // Oracle: exhaustive triple scan in id order.
        let lattice = Lattice::from_pairs(raw.labels.clone(), &raw.order).unwrap();
        let imp = raw.imp.as_ref().unwrap();
        let mut first = None;
        'scan: for x in 0..5 {
            for y in 0..5 {
                for z in 0..5 {
                    if lattice.leq(raw.odot[x][y], z) != lattice.leq(x, imp[y][z]) {
                        first = Some([x, y, z]);
                        break 'scan;
                    }
                }
            }
        }
        assert_eq!(first, Some([1, 1, 0]));
        assert_eq!(err, Error::AxiomViolation { axiom: Axiom::Residuation, witness: [1, 1, 0] });
    }

    #[test]
    fn nice_implication_is_derived_exactly() {
        let raw = fixtures::nice_raw();
        let lattice = Lattice::from_pairs(raw.labels.clone(), &raw.order).unwrap();
        let derived = derive_implication(&lattice, &raw.odot).unwrap();
        assert_eq!(Some(derived), raw.imp);
    }

    #[test]
    fn lozenge_meet_derives_heyting_implication() {
        let lattice = Lattice::from_pairs(
            ["0", "x", "y", "1"].iter().map(|s| String::from(*s)).collect(),
            &[(0, 1), (0, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        let odot: Vec<Vec<Elem>> = (0..4).map(|a| (0..4).map(|b| lattice.meet(a, b)).collect()).collect();
        let imp = derive_implication(&lattice, &odot).unwrap();
        // Brute-force max over {a | a & b <= c}, by listing.
        for b in 0..4 {
            for c in 0..4 {
                let cands: Vec<Elem> = (0..4).filter(|&a| lattice.leq(lattice.meet(a, b), c)).collect();
                let m = *cands.iter().find(|&&m| cands.iter().all(|&a| lattice.leq(a, m))).unwrap();
                assert_eq!(imp[b][c], m);
            }
        }
        assert_eq!(imp[1][0], 2);
        assert_eq!(imp[1][2], 2);
    }

    #[test]
    fn non_residuated_odot_is_reported() {
        // Diamond M3 with odot = meet: x -> 0 has candidates {0, y, z}, no max.
        let lattice = Lattice::from_pairs(
            ["0", "x", "y", "z", "1"].iter().map(|s| String::from(*s)).collect(),
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        )
        .unwrap();
        let odot: Vec<Vec<Elem>> = (0..5).map(|a| (0..5).map(|b| lattice.meet(a, b)).collect()).collect();
        assert_eq!(derive_implication(&lattice, &odot).unwrap_err(), Error::NotResiduated { b: 1, c: 0 });
    }

    #[test]
    fn non_commutative_rejected() {
        let mut raw = fixtures::exlpdif_raw();
        raw.odot[1][2] = 1;
        let err = ResiduatedLattice::validate(&raw).unwrap_err();
        assert!(matches!(err, Error::AxiomViolation { axiom: Axiom::OdotCommutative, .. }));
    }
}
