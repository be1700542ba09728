//! Lifting properties: a filter `F` has the phi-LP when every class of `A/F`
//! satisfying phi contains an element of `A` satisfying phi.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::ResiduatedLattice;
use crate::construct::{direct_product, product_projections};
use crate::elemset::ElemSet;
use crate::error::Error;
use crate::filters::Filter;
use crate::formula::Formula;
use crate::lattice::Elem;

/// Outcome for one filter. On failure `counterexample` is the least `a`
/// whose class satisfies phi in `A/F` without a lift, and `witness` is that
/// class id in `A/F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FilterLp {
    pub holds: bool,
    pub counterexample: Option<Elem>,
    pub witness: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpReport {
    pub formula: Formula,
    pub per_filter: Vec<(Filter, FilterLp)>,
    pub global: bool,
}

impl LpReport {
    pub fn failing(&self) -> impl Iterator<Item = &(Filter, FilterLp)> {
        self.per_filter.iter().filter(|(_, r)| !r.holds)
    }
}

/// Default bound on `n` in the n-ary form of [`blp_conditions`].
pub const BLP_ARITY: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlpConditions {
    pub blp: bool,
    /// `forall x exists e in B(A): e in [x) and !e in [!x)`; first failing `x`.
    pub principal: (bool, Option<Elem>),
    /// `x * y = 0` form; first failing pair.
    pub binary: (bool, Option<(Elem, Elem)>),
    /// n-ary form for `2 <= n <= arity`; first failing tuple.
    pub nary: (bool, Option<Vec<Elem>>),
    pub arity: usize,
}

impl BlpConditions {
    pub fn agree(&self) -> bool {
        self.blp == self.principal.0 && self.blp == self.binary.0 && self.blp == self.nary.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductLp {
    pub product: bool,
    pub left: bool,
    pub right: bool,
    /// `(A x B)(phi) = A(phi) x B(phi)`.
    pub definable_set_splits: bool,
}

impl ResiduatedLattice {
    pub fn definable_set(&self, phi: &Formula) -> ElemSet {
        phi.definable_set(self)
    }

    /// Decides `(A/F)(phi) ⊆ A(phi)/F`.
    pub fn has_phi_lp(&self, phi: &Formula, f: Filter) -> Result<FilterLp, Error> {
        let q = self.quotient(f)?;
        let up = phi.definable_set(self);
        let lifted = q.project_set(up);
        let down = phi.definable_set(&q.quotient);
        for a in self.elements() {
            let c = q.class_of[a];
            if down.contains(c) && !lifted.contains(c) {
                return Ok(FilterLp { holds: false, counterexample: Some(a), witness: Some(c) });
            }
        }
        Ok(FilterLp { holds: true, counterexample: None, witness: None })
    }

    pub fn lp_report(&self, phi: &Formula) -> LpReport {
        let per_filter: Vec<(Filter, FilterLp)> = self
            .all_filters()
            .into_iter()
            .map(|f| (f, self.has_phi_lp(phi, f).expect("enumerated filters are filters")))
            .collect();
        let global = per_filter.iter().all(|(_, r)| r.holds);
        LpReport { formula: phi.clone(), per_filter, global }
    }

    pub fn has_blp(&self) -> bool {
        self.lp_report(&Formula::blp()).global
    }

    pub fn has_ilp(&self) -> bool {
        self.lp_report(&Formula::ilp()).global
    }

    /// Always true: `!!a` is regular and `a/F` regular forces `!!a/F = a/F`.
    /// The direct check is run and compared with that argument.
    pub fn has_rlp(&self) -> bool {
        let direct = self.lp_report(&Formula::rlp()).global;
        let traced = self.all_filters().into_iter().all(|f| {
            let q = self.quotient(f).expect("enumerated filters are filters");
            self.elements().filter(|&a| q.quotient.is_regular(q.class_of[a])).all(|a| {
                let e = self.neg(self.neg(a));
                self.is_regular(e) && f.contains(self.biresiduum(a, e))
            })
        });
        assert!(traced, "double negation lifts regular classes");
        assert_eq!(direct, traced, "direct RLP check contradicts the double-negation lift");
        direct
    }

    /// `forall a exists e in A(phi): d(a, e) in [d(t1(a), t2(a)))`, for an
    /// atomic `phi`. Returns the first `a` without such `e` on failure.
    pub fn atomic_lp_characterization(&self, phi: &Formula) -> Result<(bool, Option<Elem>), Error> {
        let (t1, t2) = phi.atomic().ok_or(Error::NotAtomic)?;
        let good = phi.definable_set(self);
        for a in self.elements() {
            let f = self.principal(self.biresiduum(t1.eval(self, a, &[]), t2.eval(self, a, &[])));
            if !good.iter().any(|e| f.contains(self.biresiduum(a, e))) {
                return Ok((false, Some(a)));
            }
        }
        Ok((true, None))
    }

    /// The four equivalent forms of BLP, the n-ary one for `2..=arity`.
    pub fn blp_conditions(&self, arity: usize) -> BlpConditions {
        let b = self.boolean_center();
        let principal = self
            .elements()
            .find(|&x| {
                let (fx, fnx) = (self.principal(x), self.principal(self.neg(x)));
                !b.iter().any(|e| fx.contains(e) && fnx.contains(self.neg(e)))
            })
            .map_or((true, None), |x| (false, Some(x)));
        let mut binary = (true, None);
        'outer: for x in self.elements() {
            for y in self.elements() {
                if self.odot(x, y) != self.bot() {
                    continue;
                }
                let (fx, fy) = (self.principal(x), self.principal(y));
                if !b.iter().any(|e| fx.contains(e) && fy.contains(self.neg(e))) {
                    binary = (false, Some((x, y)));
                    break 'outer;
                }
            }
        }
        let mut nary = (true, None);
        for n in 2..=arity {
            if let Some(t) = self.nary_blp_failure(n, b) {
                nary = (false, Some(t));
                break;
            }
        }
        BlpConditions { blp: self.has_blp(), principal, binary, nary, arity }
    }

    fn nary_blp_failure(&self, n: usize, b: ElemSet) -> Option<Vec<Elem>> {
        let size = self.size();
        let mut xs = vec![0; n];
        loop {
            let prod = xs.iter().fold(self.top(), |acc, &x| self.odot(acc, x));
            if prod == self.bot() {
                let cands: Vec<ElemSet> = xs.iter().map(|&x| b.intersection(self.principal(x).0)).collect();
                let mut es = Vec::with_capacity(n);
                if !self.boolean_tuple(&cands, &mut es) {
                    return Some(xs);
                }
            }
            let mut i = n;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                xs[i] += 1;
                if xs[i] < size {
                    break;
                }
                xs[i] = 0;
            }
        }
    }

    /// Backtracking for `e_i in cands[i]`, pairwise joins 1, total meet 0.
    fn boolean_tuple(&self, cands: &[ElemSet], es: &mut Vec<Elem>) -> bool {
        if es.len() == cands.len() {
            return es.iter().fold(self.top(), |acc, &e| self.meet(acc, e)) == self.bot();
        }
        for e in cands[es.len()] {
            if es.iter().all(|&f| self.join(e, f) == self.top()) {
                es.push(e);
                if self.boolean_tuple(cands, es) {
                    return true;
                }
                es.pop();
            }
        }
        false
    }
}

/// `(lp(A x B), lp(A), lp(B))` together with the splitting of definable sets.
pub fn product_lp_check(a: &ResiduatedLattice, b: &ResiduatedLattice, phi: &Formula) -> ProductLp {
    let p = direct_product(a, b);
    let (pa, pb) = product_projections(a, b);
    let (da, db, dp) = (phi.definable_set(a), phi.definable_set(b), phi.definable_set(&p));
    let splits = p.elements().all(|x| dp.contains(x) == (da.contains(pa[x]) && db.contains(pb[x])));
    ProductLp {
        product: p.lp_report(phi).global,
        left: a.lp_report(phi).global,
        right: b.lp_report(phi).global,
        definable_set_splits: splits,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{boolean_algebra, godel_chain, lukasiewicz_chain};
    use crate::fixtures;
    use crate::formula::parse_formula;

    #[test]
    fn exlpdif_lifting() {
        let a = fixtures::exlpdif();
        let r = a.lp_report(&Formula::blp());
        assert!(!r.global);
        let rad = a.radical();
        let at_rad = r.per_filter.iter().find(|(f, _)| *f == rad).unwrap().1;
        assert_eq!(at_rad.counterexample, Some(1));
        assert!(a.has_ilp());
        assert!(a.has_rlp());
    }

    #[test]
    fn nice_lifting() {
        let a = fixtures::nice();
        assert!(a.has_ilp());
        // B(A)/[a) has two classes while A/[a) is Boolean with four.
        let fa = a.principal(1);
        let r = a.has_phi_lp(&Formula::blp(), fa).unwrap();
        assert!(!r.holds);
        assert_eq!(r.counterexample, Some(2));
        assert!(!a.has_blp());
    }

    #[test]
    fn b2_has_everything() {
        let a = fixtures::b2();
        assert!(a.has_blp() && a.has_ilp() && a.has_rlp());
        assert!(fixtures::trivial().has_blp());
    }

    #[test]
    fn atomic_characterization_matches() {
        for a in [fixtures::exlpdif(), fixtures::nice(), lukasiewicz_chain(4).unwrap(), boolean_algebra(2)] {
            for phi in [Formula::blp(), Formula::ilp(), Formula::rlp()] {
                assert_eq!(a.atomic_lp_characterization(&phi).unwrap().0, a.lp_report(&phi).global);
            }
        }
        let e1 = fixtures::exlpdif();
        assert!(e1.atomic_lp_characterization(&Formula::ilp()).unwrap().0);
        assert!(!e1.atomic_lp_characterization(&Formula::blp()).unwrap().0);
        let lat = parse_formula("exists w . v | w = 1 && v & w = 0").unwrap();
        assert_eq!(e1.atomic_lp_characterization(&lat), Err(Error::NotAtomic));
    }

    #[test]
    fn blp_conditions_on_fixtures() {
        let e1 = fixtures::exlpdif().blp_conditions(BLP_ARITY);
        assert!(e1.agree() && !e1.blp);
        assert_eq!(e1.principal, (false, Some(1)));
        let b2 = fixtures::b2().blp_conditions(BLP_ARITY);
        assert!(b2.agree() && b2.blp);
        let e2 = fixtures::nice().blp_conditions(BLP_ARITY);
        assert!(e2.agree());
    }

    #[test]
    fn products() {
        let b2 = fixtures::b2();
        let r = product_lp_check(&b2, &b2, &Formula::blp());
        assert_eq!((r.product, r.left, r.right, r.definable_set_splits), (true, true, true, true));
        let r = product_lp_check(&fixtures::exlpdif(), &b2, &Formula::blp());
        assert_eq!((r.product, r.left, r.right), (false, false, true));
        let r = product_lp_check(&fixtures::nice(), &godel_chain(3), &Formula::ilp());
        assert_eq!((r.product, r.left, r.right, r.definable_set_splits), (true, true, true, true));
    }
}
