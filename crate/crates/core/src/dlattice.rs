//! Bounded distributive lattices: filters, filter quotients, lattice BLP,
//! normality, the radical.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Deref;

use crate::algebra::ResiduatedLattice;
use crate::elemset::ElemSet;
use crate::error::Error;
use crate::filters::Filter;
use crate::lattice::{Elem, Lattice};
use crate::topology::{spectral_gelfand, SpectralGelfand, SpectrumSpace};

/// A lattice known to be distributive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BDLattice(Lattice);

impl Deref for BDLattice {
    type Target = Lattice;
    fn deref(&self) -> &Lattice {
        &self.0
    }
}

pub fn validate_bdl(labels: Vec<String>, order: &[(Elem, Elem)]) -> Result<BDLattice, Error> {
    BDLattice::new(Lattice::from_pairs(labels, order)?)
}

/// The lattice reduct of `a`, if distributive.
pub fn underlying_lattice(a: &ResiduatedLattice) -> Result<BDLattice, Error> {
    BDLattice::new(a.lattice().clone())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeQuotient {
    pub filter: Filter,
    /// Class id per element; classes are numbered by least member.
    pub class_of: Vec<usize>,
    pub section: Vec<Elem>,
    pub quotient: BDLattice,
}

impl LatticeQuotient {
    pub fn project_set(&self, s: ElemSet) -> ElemSet {
        s.iter().map(|a| self.class_of[a]).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeFilterLp {
    pub holds: bool,
    pub counterexample: Option<Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBlpReport {
    pub per_filter: Vec<(Filter, LatticeFilterLp)>,
    pub global: bool,
}

impl BDLattice {
    pub fn new(l: Lattice) -> Result<Self, Error> {
        match l.distributivity_witness() {
            Some(witness) => Err(Error::NotDistributive { witness }),
            None => Ok(BDLattice(l)),
        }
    }

    pub fn lattice(&self) -> &Lattice {
        &self.0
    }

    pub fn into_lattice(self) -> Lattice {
        self.0
    }

    pub fn is_filter(&self, s: ElemSet) -> bool {
        !s.is_empty()
            && self.is_up_set(s)
            && s.iter().all(|a| s.iter().all(|b| s.contains(self.meet(a, b))))
    }

    pub fn principal(&self, a: Elem) -> Filter {
        Filter(self.up_set(a))
    }

    /// Finite, so every filter is principal; sorted in filter order.
    pub fn all_filters(&self) -> Vec<Filter> {
        let mut v: Vec<Filter> = self.elements().map(|a| self.principal(a)).collect();
        v.sort();
        v.dedup();
        v
    }

    fn generator(&self, f: Filter) -> Elem {
        self.meet_all(f.members())
    }

    pub fn filter_join(&self, f: Filter, g: Filter) -> Filter {
        self.principal(self.meet(self.generator(f), self.generator(g)))
    }

    pub fn filter_meet(&self, f: Filter, g: Filter) -> Filter {
        Filter(f.0.intersection(g.0))
    }

    pub fn is_proper(&self, f: Filter) -> bool {
        !f.contains(self.bot())
    }

    pub fn is_prime(&self, f: Filter) -> bool {
        self.is_proper(f)
            && self.elements().all(|a| {
                self.elements().all(|b| !f.contains(self.join(a, b)) || f.contains(a) || f.contains(b))
            })
    }

    pub fn spec(&self) -> Vec<Filter> {
        self.all_filters().into_iter().filter(|&f| self.is_prime(f)).collect()
    }

    pub fn is_maximal(&self, f: Filter) -> bool {
        self.is_proper(f)
            && self.all_filters().iter().all(|&g| !f.is_subset(g) || g == f || !self.is_proper(g))
    }

    pub fn max_spec(&self) -> Vec<Filter> {
        self.all_filters().into_iter().filter(|&f| self.is_maximal(f)).collect()
    }

    /// `{a | a & x = 0 implies x = 0}`, checked against the meet of the
    /// maximal filters.
    pub fn lattice_radical(&self) -> Filter {
        let dense: ElemSet = self
            .elements()
            .filter(|&a| self.elements().all(|x| self.meet(a, x) != self.bot() || x == self.bot()))
            .collect();
        assert_eq!(dense, self.radical_by_maximals().0, "dense elements form the radical");
        Filter(dense)
    }

    pub fn radical_by_maximals(&self) -> Filter {
        Filter(self.max_spec().iter().fold(self.carrier(), |acc, m| acc.intersection(m.0)))
    }

    /// `x ~ y` iff `x & a = y & a` for some `a` in `f`.
    pub fn lattice_quotient(&self, f: Filter) -> Result<LatticeQuotient, Error> {
        if !self.is_filter(f.0) {
            return Err(Error::InvalidArgument("not a lattice filter".into()));
        }
        let n = self.size();
        let related =
            |x: Elem, y: Elem| f.members().iter().any(|a| self.meet(x, a) == self.meet(y, a));
        let mut class_of = vec![usize::MAX; n];
        let mut section = Vec::new();
        for x in self.elements() {
            if class_of[x] == usize::MAX {
                let c = section.len();
                section.push(x);
                for y in self.elements() {
                    if related(x, y) {
                        class_of[y] = c;
                    }
                }
            }
        }
        for x in self.elements() {
            for y in self.elements() {
                let (cx, cy) = (section[class_of[x]], section[class_of[y]]);
                assert_eq!(class_of[self.join(x, y)], class_of[self.join(cx, cy)], "join respects classes");
                assert_eq!(class_of[self.meet(x, y)], class_of[self.meet(cx, cy)], "meet respects classes");
            }
        }
        let k = section.len();
        let up: Vec<ElemSet> = (0..k)
            .map(|c| (0..k).filter(|&d| class_of[self.join(section[c], section[d])] == d).collect())
            .collect();
        let labels = section.iter().map(|&r| String::from(self.label(r))).collect();
        let quotient = BDLattice::new(Lattice::from_up_sets(labels, up)?)?;
        Ok(LatticeQuotient { filter: f, class_of, section, quotient })
    }

    pub fn boolean_center(&self) -> ElemSet {
        self.complemented()
    }

    /// `B(L/F) ⊆ B(L)/F`; the least `a` in an unlifted class on failure.
    pub fn lattice_blp_at(&self, f: Filter) -> Result<LatticeFilterLp, Error> {
        let q = self.lattice_quotient(f)?;
        let lifted = q.project_set(self.boolean_center());
        let down = q.quotient.boolean_center();
        let bad = self.elements().find(|&a| down.contains(q.class_of[a]) && !lifted.contains(q.class_of[a]));
        Ok(LatticeFilterLp { holds: bad.is_none(), counterexample: bad })
    }

    pub fn lattice_blp(&self) -> LatticeBlpReport {
        let per_filter: Vec<(Filter, LatticeFilterLp)> = self
            .all_filters()
            .into_iter()
            .map(|f| (f, self.lattice_blp_at(f).expect("enumerated filters are filters")))
            .collect();
        let global = per_filter.iter().all(|(_, r)| r.holds);
        LatticeBlpReport { per_filter, global }
    }

    /// `x | y = 1` gives `u & v = 0` with `u | x = v | y = 1`.
    pub fn is_normal_lattice(&self) -> bool {
        let (o, l) = (self.bot(), self.top());
        self.elements().all(|x| {
            self.elements().all(|y| {
                self.join(x, y) != l
                    || self.elements().any(|u| {
                        self.join(u, x) == l
                            && self.elements().any(|v| self.meet(u, v) == o && self.join(v, y) == l)
                    })
            })
        })
    }

    /// `x & y = 0` gives `u | v = 1` with `u & x = v & y = 0`.
    pub fn is_conormal_lattice(&self) -> bool {
        let (o, l) = (self.bot(), self.top());
        self.elements().all(|x| {
            self.elements().all(|y| {
                self.meet(x, y) != o
                    || self.elements().any(|u| {
                        self.meet(u, x) == o
                            && self.elements().any(|v| self.join(u, v) == l && self.meet(v, y) == o)
                    })
            })
        })
    }

    /// The radical of a conormal lattice has BLP.
    pub fn conormal_radical_blp(&self) -> Result<bool, Error> {
        if !self.is_conormal_lattice() {
            return Err(Error::NotConormal);
        }
        Ok(self.lattice_blp_at(self.lattice_radical())?.holds)
    }

    fn principal_filters(&self) -> Vec<Filter> {
        self.elements().map(|a| self.principal(a)).collect()
    }

    pub fn stone_spec(&self) -> SpectrumSpace {
        SpectrumSpace::from_filters(self.spec(), &self.all_filters(), &self.principal_filters())
    }

    pub fn stone_max(&self) -> SpectrumSpace {
        SpectrumSpace::from_filters(self.max_spec(), &self.all_filters(), &self.principal_filters())
    }

    pub fn max_indices(&self) -> Vec<usize> {
        let spec = self.spec();
        self.max_spec()
            .into_iter()
            .map(|m| spec.iter().position(|&p| p == m).expect("maximal filters are prime"))
            .collect()
    }

    /// Spectral Gelfand-type conditions on `Spec(L)`.
    pub fn spectral_gelfand(&self) -> SpectralGelfand {
        spectral_gelfand(&self.stone_spec(), &self.max_indices(), self.carrier())
    }
}
