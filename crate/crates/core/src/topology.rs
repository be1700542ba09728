//! Finite spectral spaces with the Stone topology, separation predicates,
//! the Gelfand property and the (⋆)/(⋆⋆) properties.
//!
//! Point sets are [`ElemSet`]s over point indices.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::ResiduatedLattice;
use crate::elemset::ElemSet;
use crate::error::Error;
use crate::filters::Filter;
use crate::lattice::Elem;

/// A finite space of filters. `opens = {D(F)}` for every filter `F`;
/// `basis[a] = (a, D([a)))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumSpace {
    pub points: Vec<Filter>,
    pub opens: Vec<ElemSet>,
    pub basis: Vec<(Elem, ElemSet)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct TopologyPredicates {
    pub t0: bool,
    pub t1: bool,
    pub hausdorff: bool,
    pub compact: bool,
    pub zero_dim: bool,
    pub strongly_zero_dim: bool,
    pub normal: bool,
    pub boolean_space: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Spec,
    Max,
}

fn set_key(s: &ElemSet) -> (usize, u64) {
    (s.len(), s.0)
}

impl SpectrumSpace {
    /// `principal[a]` is the principal filter of element `a`.
    pub fn from_filters(points: Vec<Filter>, filters: &[Filter], principal: &[Filter]) -> Self {
        let d = |f: Filter| -> ElemSet {
            points.iter().enumerate().filter(|(_, p)| !f.is_subset(**p)).map(|(i, _)| i).collect()
        };
        let mut opens: Vec<ElemSet> = filters.iter().map(|&f| d(f)).collect();
        opens.push(ElemSet::EMPTY);
        opens.push(ElemSet::full(points.len()));
        opens.sort_by_key(set_key);
        opens.dedup();
        let basis = principal.iter().enumerate().map(|(a, &f)| (a, d(f))).collect();
        SpectrumSpace { points, opens, basis }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn full(&self) -> ElemSet {
        ElemSet::full(self.points.len())
    }

    /// Points not containing `f`.
    pub fn d_filter(&self, f: Filter) -> ElemSet {
        self.points.iter().enumerate().filter(|(_, p)| !f.is_subset(**p)).map(|(i, _)| i).collect()
    }

    /// Points containing `f`.
    pub fn v_filter(&self, f: Filter) -> ElemSet {
        self.d_filter(f).complement(self.len())
    }

    /// Points not containing `a`.
    pub fn d_elem(&self, a: Elem) -> ElemSet {
        self.points.iter().enumerate().filter(|(_, p)| !p.contains(a)).map(|(i, _)| i).collect()
    }

    pub fn v_elem(&self, a: Elem) -> ElemSet {
        self.d_elem(a).complement(self.len())
    }

    pub fn is_open(&self, s: ElemSet) -> bool {
        self.opens.binary_search_by_key(&set_key(&s), set_key).is_ok()
    }

    pub fn is_closed(&self, s: ElemSet) -> bool {
        self.is_open(s.complement(self.len()))
    }

    pub fn closed_sets(&self) -> Vec<ElemSet> {
        let mut out: Vec<ElemSet> = self.opens.iter().map(|o| o.complement(self.len())).collect();
        out.sort_by_key(set_key);
        out
    }

    pub fn closure(&self, s: ElemSet) -> ElemSet {
        self.closed_sets().into_iter().filter(|c| s.is_subset(*c)).fold(self.full(), |acc, c| acc.intersection(c))
    }

    pub fn clopen_sets(&self) -> Vec<ElemSet> {
        self.opens.iter().copied().filter(|&o| self.is_closed(o)).collect()
    }

    /// The subspace topology on `sub` (indices into `self.points`), with
    /// points renumbered in order.
    pub fn subspace(&self, sub: &[usize]) -> SpectrumSpace {
        let restrict = |s: ElemSet| -> ElemSet { sub.iter().enumerate().filter(|(_, &p)| s.contains(p)).map(|(i, _)| i).collect() };
        let mut opens: Vec<ElemSet> = self.opens.iter().map(|&o| restrict(o)).collect();
        opens.sort_by_key(set_key);
        opens.dedup();
        SpectrumSpace {
            points: sub.iter().map(|&i| self.points[i]).collect(),
            opens,
            basis: self.basis.iter().map(|&(a, s)| (a, restrict(s))).collect(),
        }
    }

    fn separated(&self, x: usize, y: usize) -> bool {
        self.opens.iter().any(|u| u.contains(x) && !u.contains(y))
    }

    /// Disjoint opens around two disjoint sets.
    pub fn separable(&self, c: ElemSet, d: ElemSet) -> bool {
        self.opens.iter().any(|&u| {
            c.is_subset(u) && self.opens.iter().any(|&v| d.is_subset(v) && u.is_disjoint(v))
        })
    }

    pub fn predicates(&self) -> TopologyPredicates {
        let n = self.len();
        let pts = || 0..n;
        let t0 = pts().all(|x| pts().all(|y| x == y || self.separated(x, y) || self.separated(y, x)));
        let t1 = pts().all(|x| self.is_closed(ElemSet::singleton(x)));
        let hausdorff = pts().all(|x| {
            pts().all(|y| x == y || self.separable(ElemSet::singleton(x), ElemSet::singleton(y)))
        });
        let clopens = self.clopen_sets();
        let zero_dim = self
            .opens
            .iter()
            .all(|&u| u.iter().all(|x| clopens.iter().any(|&c| c.contains(x) && c.is_subset(u))));
        // Every cover by two opens is refined by a clopen partition.
        let strongly_zero_dim = self.opens.iter().all(|&u| {
            self.opens.iter().all(|&v| {
                u.union(v) != self.full()
                    || clopens.iter().any(|&c| c.is_subset(u) && c.complement(n).is_subset(v))
            })
        });
        let closed = self.closed_sets();
        let normal = closed
            .iter()
            .all(|&c| closed.iter().all(|&d| !c.is_disjoint(d) || self.separable(c, d)));
        TopologyPredicates {
            t0,
            t1,
            hausdorff,
            compact: true,
            zero_dim,
            strongly_zero_dim,
            normal,
            boolean_space: hausdorff && zero_dim,
        }
    }

    /// Definition form: every closed set inside an open set fits a clopen
    /// between them.
    pub fn strongly_zero_dim_by_definition(&self) -> bool {
        let clopens = self.clopen_sets();
        self.closed_sets().into_iter().all(|t| {
            self.opens
                .iter()
                .all(|&v| !t.is_subset(v) || clopens.iter().any(|&c| t.is_subset(c) && c.is_subset(v)))
        })
    }

    /// `f` maps points of `self` to points of `target`.
    pub fn is_continuous(&self, target: &SpectrumSpace, f: &[usize]) -> bool {
        target.opens.iter().all(|&o| {
            let pre: ElemSet = (0..self.len()).filter(|&p| o.contains(f[p])).collect();
            self.is_open(pre)
        })
    }
}

/// The spectral forms of the Gelfand property, computed from the prime
/// spectrum and the positions of the maximal points in it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpectralGelfand {
    /// Every prime lies under exactly one maximal point.
    pub unique_maximal: bool,
    /// Some continuous map `Spec -> Max` fixes `Max` pointwise.
    pub continuous_retract: bool,
    pub spec_normal: bool,
    /// `{P | P ⊆ M}` is closed for every maximal `M`.
    pub down_sets_closed: bool,
    /// `M` is the only maximal point above `∩{P | P ⊆ M}`.
    pub unique_maximal_over_meet: bool,
    /// Distinct maximal points have disjoint open neighbourhoods.
    pub maximals_separated: bool,
}

impl SpectralGelfand {
    pub fn all_equal(&self) -> bool {
        let v = self.unique_maximal;
        [
            self.continuous_retract,
            self.spec_normal,
            self.down_sets_closed,
            self.unique_maximal_over_meet,
            self.maximals_separated,
        ]
        .iter()
        .all(|&x| x == v)
    }
}

/// Maximal points above each point.
pub fn maximals_above(spec: &SpectrumSpace, max_idx: &[usize]) -> Vec<ElemSet> {
    spec.points
        .iter()
        .map(|&p| {
            max_idx
                .iter()
                .enumerate()
                .filter(|(_, &m)| p.is_subset(spec.points[m]))
                .map(|(k, _)| k)
                .collect()
        })
        .collect()
}

pub fn spectral_gelfand(spec: &SpectrumSpace, max_idx: &[usize], carrier: ElemSet) -> SpectralGelfand {
    let above = maximals_above(spec, max_idx);
    let unique_maximal = above.iter().all(|s| s.len() == 1);
    let max_space = spec.subspace(max_idx);
    // Retract search: maximal points are fixed, others range over the
    // maximals above them (any continuous retract sends P to a maximal
    // point in its closure, which lies above P).
    let continuous_retract = {
        let free: Vec<usize> = (0..spec.len()).filter(|p| !max_idx.contains(p)).collect();
        let mut f = vec![0usize; spec.len()];
        for (k, &m) in max_idx.iter().enumerate() {
            f[m] = k;
        }
        fn go(i: usize, free: &[usize], above: &[ElemSet], f: &mut Vec<usize>, spec: &SpectrumSpace, max_space: &SpectrumSpace) -> bool {
            if i == free.len() {
                return spec.is_continuous(max_space, f);
            }
            for k in above[free[i]] {
                f[free[i]] = k;
                if go(i + 1, free, above, f, spec, max_space) {
                    return true;
                }
            }
            false
        }
        go(0, &free, &above, &mut f, spec, &max_space)
    };
    let spec_normal = spec.predicates().normal;
    let down_sets_closed = max_idx.iter().all(|&m| {
        let down: ElemSet = (0..spec.len()).filter(|&p| spec.points[p].is_subset(spec.points[m])).collect();
        spec.is_closed(down)
    });
    let unique_maximal_over_meet = max_idx.iter().all(|&m| {
        let meet = spec
            .points
            .iter()
            .filter(|p| p.is_subset(spec.points[m]))
            .fold(carrier, |acc, p| acc.intersection(p.0));
        max_idx.iter().all(|&n| n == m || !meet.is_subset(spec.points[n].0))
    });
    let maximals_separated = max_idx.iter().all(|&m| {
        max_idx
            .iter()
            .all(|&n| m == n || spec.separable(ElemSet::singleton(m), ElemSet::singleton(n)))
    });
    SpectralGelfand {
        unique_maximal,
        continuous_retract,
        spec_normal,
        down_sets_closed,
        unique_maximal_over_meet,
        maximals_separated,
    }
}

/// Algebra-side Gelfand conditions (filter-lattice normality) plus the
/// spectral ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GelfandConditions {
    pub filt_normal: bool,
    pub pfilt_normal: bool,
    pub spectral: SpectralGelfand,
}

impl GelfandConditions {
    pub fn primary(&self) -> bool {
        self.spectral.unique_maximal
    }

    pub fn all_equal(&self) -> bool {
        let v = self.primary();
        self.spectral.all_equal() && self.filt_normal == v && self.pfilt_normal == v
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StarReport {
    /// `[x) = [u) ∨ [e)` with `u` in the radical and `e` Boolean.
    pub direct: (bool, Option<Elem>),
    /// `a * e` nilpotent and `a | e` in the radical.
    pub nilpotent_form: bool,
    /// `v(a) ⊆ d(e)` and `d(a) ⊆ v(e)`.
    pub topological_form: bool,
    /// `v(a) ⊆ d(e)` and `v(!a^n) ⊆ v(e)` for `1 <= n <= size`.
    pub power_form: bool,
}

impl StarReport {
    pub fn holds(&self) -> bool {
        self.direct.0
    }

    pub fn all_equal(&self) -> bool {
        let v = self.direct.0;
        self.nilpotent_form == v && self.topological_form == v && self.power_form == v
    }
}

impl ResiduatedLattice {
    fn principal_filters(&self) -> Vec<Filter> {
        self.elements().map(|a| self.principal(a)).collect()
    }

    pub fn stone_spec(&self) -> SpectrumSpace {
        let s = SpectrumSpace::from_filters(self.spec(), &self.all_filters(), &self.principal_filters());
        debug_assert!(self.spectral_identities(&s).is_ok());
        s
    }

    pub fn stone_max(&self) -> SpectrumSpace {
        let s = SpectrumSpace::from_filters(self.max_spec(), &self.all_filters(), &self.principal_filters());
        debug_assert!(self.spectral_identities(&s).is_ok());
        s
    }

    /// Positions of the maximal filters within `spec()`.
    pub fn max_indices(&self) -> Vec<usize> {
        let spec = self.spec();
        self.max_spec()
            .into_iter()
            .map(|m| spec.iter().position(|&p| p == m).expect("maximal filters are prime"))
            .collect()
    }

    /// The identities relating `V`, `D` to filter and element operations.
    /// Returns a description of the first failure.
    pub fn spectral_identities(&self, s: &SpectrumSpace) -> Result<(), &'static str> {
        let filters = self.all_filters();
        for &f in &filters {
            for &g in &filters {
                let (fg_meet, fg_join) = (self.filter_meet(f, g), self.filter_join(f, g));
                if s.v_filter(fg_meet) != s.v_filter(f).union(s.v_filter(g)) {
                    return Err("V(F ∩ G) = V(F) ∪ V(G)");
                }
                if s.d_filter(fg_meet) != s.d_filter(f).intersection(s.d_filter(g)) {
                    return Err("D(F ∩ G) = D(F) ∩ D(G)");
                }
                if s.v_filter(fg_join) != s.v_filter(f).intersection(s.v_filter(g)) {
                    return Err("V(F ∨ G) = V(F) ∩ V(G)");
                }
                if s.d_filter(fg_join) != s.d_filter(f).union(s.d_filter(g)) {
                    return Err("D(F ∨ G) = D(F) ∪ D(G)");
                }
            }
            let by_elems = f.members().iter().fold(ElemSet::EMPTY, |acc, a| acc.union(s.d_elem(a)));
            if s.d_filter(f) != by_elems {
                return Err("D(F) = ∪ D(a)");
            }
        }
        for a in self.elements() {
            for b in self.elements() {
                if s.d_elem(self.join(a, b)) != s.d_elem(a).intersection(s.d_elem(b)) {
                    return Err("D(a ∨ b) = D(a) ∩ D(b)");
                }
                let u = s.d_elem(a).union(s.d_elem(b));
                if s.d_elem(self.odot(a, b)) != u || s.d_elem(self.meet(a, b)) != u {
                    return Err("D(a ⊙ b) = D(a ∧ b) = D(a) ∪ D(b)");
                }
            }
        }
        Ok(())
    }

    /// `{D(e) | e ∈ B(A)}` (or `{d(e)}` on `Max`), sorted.
    pub fn clopen_via_boolean(&self, which: Which) -> Vec<ElemSet> {
        let space = match which {
            Which::Spec => self.stone_spec(),
            Which::Max => self.stone_max(),
        };
        let mut out: Vec<ElemSet> = self.boolean_center().iter().map(|e| space.d_elem(e)).collect();
        out.sort_by_key(set_key);
        out.dedup();
        out
    }

    /// Every prime filter lies under exactly one maximal filter.
    pub fn is_gelfand(&self) -> bool {
        let max = self.max_spec();
        self.spec().into_iter().all(|p| max.iter().filter(|m| p.is_subset(**m)).count() == 1)
    }

    /// Normality of the lattice of filters: `F ∨ G = A` gives `U ∩ V = {1}`
    /// with `U ∨ F = V ∨ G = A`.
    fn filter_lattice_normal(&self, candidates: &[Filter]) -> bool {
        let whole = self.whole();
        let triv = self.trivial_filter();
        candidates.iter().all(|&f| {
            candidates.iter().all(|&g| {
                self.filter_join(f, g) != whole
                    || candidates.iter().any(|&u| {
                        self.filter_join(u, f) == whole
                            && candidates
                                .iter()
                                .any(|&v| self.filter_meet(u, v) == triv && self.filter_join(v, g) == whole)
                    })
            })
        })
    }

    pub fn gelfand_conditions(&self) -> GelfandConditions {
        let spec = self.stone_spec();
        let max_idx = self.max_indices();
        GelfandConditions {
            filt_normal: self.filter_lattice_normal(&self.all_filters()),
            pfilt_normal: self.filter_lattice_normal(&self.principal_filters()),
            spectral: spectral_gelfand(&spec, &max_idx, self.carrier()),
        }
    }

    /// `P ↦` the unique maximal filter above `P`, as indices into
    /// `spec()` and `max_spec()`.
    pub fn gelfand_retract(&self) -> Result<Vec<usize>, Error> {
        let spec = self.stone_spec();
        let max_idx = self.max_indices();
        let above = maximals_above(&spec, &max_idx);
        let mut rho = Vec::with_capacity(spec.len());
        for (p, s) in above.iter().enumerate() {
            if s.len() != 1 {
                return Err(Error::NotGelfand { prime: p });
            }
            rho.push(s.first().expect("one element"));
        }
        let max_space = spec.subspace(&max_idx);
        assert!(spec.is_continuous(&max_space, &rho), "retraction is continuous");
        assert!(max_idx.iter().enumerate().all(|(k, &m)| rho[m] == k), "retraction fixes Max");
        Ok(rho)
    }

    pub fn star_property(&self) -> StarReport {
        let rad = self.radical();
        let b = self.boolean_center();
        let max = self.stone_max();
        let direct = self
            .elements()
            .find(|&x| {
                let px = self.principal(x);
                !rad.members().iter().any(|u| {
                    b.iter().any(|e| self.filter_join(self.principal(u), self.principal(e)) == px)
                })
            })
            .map_or((true, None), |x| (false, Some(x)));
        let nilpotent_form = self.elements().all(|a| {
            b.iter().any(|e| self.is_nilpotent(self.odot(a, e)) && rad.contains(self.join(a, e)))
        });
        let topological_form = self.elements().all(|a| {
            b.iter().any(|e| {
                max.v_elem(a).is_subset(max.d_elem(e)) && max.d_elem(a).is_subset(max.v_elem(e))
            })
        });
        let power_form = self.elements().all(|a| {
            b.iter().any(|e| {
                max.v_elem(a).is_subset(max.d_elem(e))
                    && (1..=self.size() as u32).all(|k| max.v_elem(self.neg(self.pow(a, k))).is_subset(max.v_elem(e)))
            })
        });
        StarReport { direct, nilpotent_form, topological_form, power_form }
    }

    /// `[x) = [u) ∨ [e)` with `!u` nilpotent and `e` Boolean; first failing `x`.
    pub fn star_star_property(&self) -> (bool, Option<Elem>) {
        let b = self.boolean_center();
        self.elements()
            .find(|&x| {
                let px = self.principal(x);
                !self.elements().any(|u| {
                    self.is_nilpotent(self.neg(u))
                        && b.iter().any(|e| self.filter_join(self.principal(u), self.principal(e)) == px)
                })
            })
            .map_or((true, None), |x| (false, Some(x)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{direct_product, godel_chain, lukasiewicz_chain, ordinal_sum};
    use crate::fixtures;

    #[test]
    fn b2_spaces() {
        let a = fixtures::b2();
        let s = a.stone_spec();
        assert_eq!(s.len(), 1);
        assert_eq!(s.opens.len(), 2);
        let p = s.predicates();
        assert!(p.t0 && p.t1 && p.hausdorff && p.zero_dim && p.strongly_zero_dim && p.normal && p.boolean_space);
        assert_eq!(s.clopen_sets().len(), 2);
        assert!(a.star_property().holds());
        assert!(a.star_star_property().0);
    }

    #[test]
    fn exlpdif_spaces() {
        let a = fixtures::exlpdif();
        let s = a.stone_spec();
        // Points in filter order: {1}, [a), [b).
        assert_eq!(s.points, [a.trivial_filter(), a.principal(1), a.principal(2)]);
        // The minimal prime {1} lies in every nonempty open.
        let expect: Vec<ElemSet> = [&[][..], &[0], &[0, 1], &[0, 2], &[0, 1, 2]]
            .iter()
            .map(|xs| xs.iter().copied().collect())
            .collect();
        assert_eq!(s.opens, expect);
        let p = s.predicates();
        assert!(p.t0 && !p.strongly_zero_dim);
        assert_eq!(p.strongly_zero_dim, s.strongly_zero_dim_by_definition());
        assert_eq!(s.clopen_sets(), [ElemSet::EMPTY, ElemSet::full(3)]);
        assert_eq!(s.clopen_sets(), a.clopen_via_boolean(Which::Spec));
        let m = a.stone_max().predicates();
        assert!(m.t1 && m.boolean_space);
        assert!(!a.is_gelfand());
        assert!(a.gelfand_conditions().all_equal());
        assert_eq!(a.gelfand_retract(), Err(Error::NotGelfand { prime: 0 }));
        assert!(!a.star_property().holds());
    }

    #[test]
    fn chains_are_gelfand() {
        for a in [godel_chain(4), lukasiewicz_chain(4).unwrap()] {
            assert!(a.is_gelfand());
            let g = a.gelfand_conditions();
            assert!(g.primary() && g.all_equal());
            let rho = a.gelfand_retract().unwrap();
            assert!(rho.iter().all(|&k| k == 0));
        }
    }

    #[test]
    fn product_of_chains_retract() {
        let a = direct_product(&godel_chain(3), &godel_chain(3));
        let rho = a.gelfand_retract().unwrap();
        let spec = a.spec();
        let max = a.max_spec();
        for (p, &k) in rho.iter().enumerate() {
            assert!(spec[p].is_subset(max[k]));
        }
        assert_eq!(max.len(), 2);
    }

    #[test]
    fn ordinal_sum_is_not_gelfand() {
        let b4 = direct_product(&fixtures::b2(), &fixtures::b2());
        let a = ordinal_sum(&b4, &godel_chain(2)).unwrap();
        assert!(a.spec().contains(&a.trivial_filter()));
        assert_eq!(a.max_spec().len(), 2);
        assert!(!a.is_gelfand());
    }

    #[test]
    fn star_forms_agree_on_fixtures() {
        for a in [fixtures::exlpdif(), fixtures::nice(), direct_product(&godel_chain(3), &lukasiewicz_chain(3).unwrap())] {
            let s = a.star_property();
            assert!(s.all_equal());
            if s.holds() {
                assert!(a.has_blp());
            }
            if a.has_blp() {
                assert!(a.star_star_property().0);
            }
        }
    }
}
