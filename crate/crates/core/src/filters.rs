//! Filters, prime and maximal spectra, the radical and quotient algebras.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::algebra::ResiduatedLattice;
use crate::construct::from_fns;
use crate::elemset::ElemSet;
use crate::error::Error;
use crate::lattice::Elem;

/// A filter, stored as its member set. Operations take the algebra
/// explicitly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Filter(pub ElemSet);

impl Filter {
    pub fn members(self) -> ElemSet {
        self.0
    }

    pub fn contains(self, a: Elem) -> bool {
        self.0.contains(a)
    }

    pub fn is_subset(self, g: Filter) -> bool {
        self.0.is_subset(g.0)
    }

    pub fn len(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }
}

/// Deterministic filter order: by size, then by member bitmask.
fn filter_key(f: &Filter) -> (usize, u64) {
    (f.len(), f.0 .0)
}

impl ResiduatedLattice {
    /// Non-empty, up-closed and closed under `odot`.
    pub fn is_filter(&self, s: ElemSet) -> bool {
        s.contains(self.top())
            && self.lattice().is_up_set(s)
            && s.iter().all(|a| s.iter().all(|b| s.contains(self.odot(a, b))))
    }

    pub fn is_proper(&self, f: Filter) -> bool {
        !f.contains(self.bot())
    }

    /// Least filter containing `x`: everything above a finite product of
    /// members of `x`.
    pub fn generated_filter(&self, x: ElemSet) -> Filter {
        let mut products = ElemSet::singleton(self.top());
        loop {
            let mut next = products;
            for p in products {
                for a in x {
                    next.insert(self.odot(p, a));
                }
            }
            if next == products {
                break;
            }
            products = next;
        }
        Filter(self.lattice().up_closure(products))
    }

    /// `[a)`: the powers of `a` descend, so this is the up-set of the least one.
    pub fn principal(&self, a: Elem) -> Filter {
        Filter(self.lattice().up_set(self.stable_power(a)))
    }

    pub fn trivial_filter(&self) -> Filter {
        Filter(ElemSet::singleton(self.top()))
    }

    pub fn whole(&self) -> Filter {
        Filter(self.carrier())
    }

    /// Every filter, each exactly once, ordered by size then member mask.
    /// Finite algebras have only principal filters.
    pub fn all_filters(&self) -> Vec<Filter> {
        let mut out: Vec<Filter> = self.elements().map(|a| self.principal(a)).collect();
        out.sort_by_key(filter_key);
        out.dedup();
        out
    }

    pub fn filter_join(&self, f: Filter, g: Filter) -> Filter {
        self.generated_filter(f.0.union(g.0))
    }

    pub fn filter_meet(&self, f: Filter, g: Filter) -> Filter {
        Filter(f.0.intersection(g.0))
    }

    /// Proper, and `a | b in F` forces `a in F` or `b in F`.
    pub fn is_prime(&self, f: Filter) -> bool {
        self.is_proper(f)
            && self.elements().all(|a| {
                self.elements()
                    .all(|b| !f.contains(self.join(a, b)) || f.contains(a) || f.contains(b))
            })
    }

    pub fn spec(&self) -> Vec<Filter> {
        self.all_filters().into_iter().filter(|&f| self.is_prime(f)).collect()
    }

    pub fn is_maximal(&self, f: Filter) -> bool {
        self.is_proper(f)
            && self
                .all_filters()
                .into_iter()
                .all(|g| !self.is_proper(g) || !f.0.is_subset(g.0) || g == f)
    }

    pub fn max_spec(&self) -> Vec<Filter> {
        let filters = self.all_filters();
        let proper: Vec<Filter> = filters.iter().copied().filter(|&f| self.is_proper(f)).collect();
        proper
            .iter()
            .copied()
            .filter(|&f| proper.iter().all(|&g| g == f || !f.is_subset(g)))
            .collect()
    }

    /// Intersection of the maximal filters (the whole carrier when there
    /// are none, i.e. on the trivial algebra).
    pub fn radical(&self) -> Filter {
        Filter(
            self.max_spec()
                .into_iter()
                .fold(self.carrier(), |acc, m| acc.intersection(m.0)),
        )
    }

    pub fn is_local(&self) -> bool {
        self.max_spec().len() == 1
    }

    /// Always true on a finite algebra; returns the number of maximal filters.
    pub fn is_semilocal(&self) -> (bool, usize) {
        (true, self.max_spec().len())
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical() == self.trivial_filter()
    }

    /// `min F`, when `F` has a least element.
    pub fn min_generator(&self, f: Filter) -> Result<Elem, Error> {
        let m = self.lattice().meet_all(f.0);
        if f.contains(m) {
            Ok(m)
        } else {
            Err(Error::NoMinimum)
        }
    }

    /// `A/F`.
    pub fn quotient(&self, f: Filter) -> Result<QuotientAlgebra, Error> {
        if !self.is_filter(f.0) {
            return Err(Error::InvalidArgument("not a filter".to_string()));
        }
        let n = self.size();
        let mut class_of = alloc::vec![usize::MAX; n];
        let mut section = Vec::new();
        for x in self.elements() {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = section.len();
            section.push(x);
            for y in x..n {
                if f.contains(self.biresiduum(x, y)) {
                    class_of[y] = id;
                }
            }
        }
        // Well-definedness of every operation on classes.
        for x in self.elements() {
            for y in self.elements() {
                let (cx, cy) = (class_of[x], class_of[y]);
                let (rx, ry) = (section[cx], section[cy]);
                for (p, q) in [
                    (self.join(x, y), self.join(rx, ry)),
                    (self.meet(x, y), self.meet(rx, ry)),
                    (self.odot(x, y), self.odot(rx, ry)),
                    (self.imp(x, y), self.imp(rx, ry)),
                ] {
                    if class_of[p] != class_of[q] {
                        return Err(Error::InvalidArgument("congruence classes not respected".to_string()));
                    }
                }
            }
        }
        let labels = section.iter().map(|&r| self.label(r).to_string()).collect();
        let quotient = from_fns(
            labels,
            |a, b| f.contains(self.imp(section[a], section[b])),
            |a, b| class_of[self.odot(section[a], section[b])],
            Some(&|a, b| class_of[self.imp(section[a], section[b])]),
        )?;
        Ok(QuotientAlgebra {
            parent: self.clone(),
            filter: f,
            class_of,
            section,
            quotient,
        })
    }
}

/// `A/F` together with the canonical projection and the section choosing
/// the least id in each class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientAlgebra {
    pub parent: ResiduatedLattice,
    pub filter: Filter,
    pub class_of: Vec<usize>,
    pub section: Vec<Elem>,
    pub quotient: ResiduatedLattice,
}

impl QuotientAlgebra {
    pub fn class(&self, c: usize) -> ElemSet {
        self.parent.elements().filter(|&x| self.class_of[x] == c).collect()
    }

    pub fn project_set(&self, s: ElemSet) -> ElemSet {
        s.iter().map(|x| self.class_of[x]).collect()
    }

    /// Preimage of a set of classes.
    pub fn preimage(&self, s: ElemSet) -> ElemSet {
        self.parent.elements().filter(|&x| s.contains(self.class_of[x])).collect()
    }

    /// `G/F` for a filter `G` of the parent.
    pub fn project_filter(&self, g: Filter) -> Filter {
        Filter(self.project_set(g.0))
    }
}
