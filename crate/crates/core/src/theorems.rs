//! Brute-force evaluation of the characterization theorems on one algebra.
//! Each side of each statement is computed on its own; nothing short-circuits.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::ResiduatedLattice;
use crate::construct::upset_algebra;
use crate::elemset::ElemSet;
use crate::filters::Filter;
use crate::formula::Formula;
use crate::lattice::Elem;
use crate::lifting::BLP_ARITY;
use crate::reticulation::build_reticulation;
use crate::topology::Which;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    /// `lhs <-> rhs`
    Equivalence,
    /// `lhs -> rhs`
    Implication,
    /// A statement checked directly: `lhs` is its truth, `rhs` is fixed true.
    Identity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub theorem_id: &'static str,
    pub kind: Kind,
    /// False when a hypothesis of the statement fails; `agree` is then true.
    pub applicable: bool,
    pub lhs: bool,
    pub rhs: bool,
    pub agree: bool,
    pub witness: Option<String>,
}

struct Collector<'a> {
    a: &'a ResiduatedLattice,
    out: Vec<TheoremVerdict>,
}

impl Collector<'_> {
    fn push(&mut self, theorem_id: &'static str, kind: Kind, applicable: bool, lhs: bool, rhs: bool, witness: Option<String>) {
        let holds = match kind {
            Kind::Equivalence => lhs == rhs,
            Kind::Implication => !lhs || rhs,
            Kind::Identity => lhs,
        };
        self.out.push(TheoremVerdict { theorem_id, kind, applicable, lhs, rhs, agree: !applicable || holds, witness });
    }

    fn iff(&mut self, id: &'static str, lhs: bool, rhs: bool) {
        self.push(id, Kind::Equivalence, true, lhs, rhs, None);
    }

    fn iff_given(&mut self, id: &'static str, hyp: bool, lhs: bool, rhs: bool) {
        self.push(id, Kind::Equivalence, hyp, lhs, rhs, None);
    }

    fn implies(&mut self, id: &'static str, lhs: bool, rhs: bool) {
        self.push(id, Kind::Implication, true, lhs, rhs, None);
    }

    fn identity(&mut self, id: &'static str, first_failure: Option<String>) {
        self.push(id, Kind::Identity, true, first_failure.is_none(), true, first_failure);
    }

    fn label(&self, x: Elem) -> String {
        String::from(self.a.label(x))
    }

    fn filter_label(&self, f: Filter) -> String {
        let names: Vec<&str> = f.members().iter().map(|x| self.a.label(x)).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// Splitting of `A` along the atoms of `B(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalDecomposition {
    /// Atoms `e` of `B(A)`; factor `i` is the algebra `[!e_i)`.
    pub atoms: Vec<Elem>,
    pub factors: Vec<ResiduatedLattice>,
    /// `x ↦ (x | !e_i)_i` is an isomorphism onto the product.
    pub isomorphic: bool,
    pub all_local: bool,
}

pub fn local_decomposition(a: &ResiduatedLattice) -> LocalDecomposition {
    let b = a.boolean_center();
    let atoms: Vec<Elem> = b
        .iter()
        .filter(|&e| e != a.bot() && b.iter().all(|f| f == a.bot() || f == e || !a.leq(f, e)))
        .collect();
    let factors: Vec<ResiduatedLattice> = atoms
        .iter()
        .map(|&e| upset_algebra(a, a.neg(e)).expect("complements of Boolean atoms are Boolean"))
        .collect();
    let comps: Vec<Elem> = atoms.iter().map(|&e| a.neg(e)).collect();
    // Factor ids follow the id order of A on each up-set.
    let ids: Vec<Vec<Elem>> = comps.iter().map(|&c| a.lattice().up_set(c).iter().collect()).collect();
    let proj = |i: usize, x: Elem| -> Elem {
        let y = a.join(x, comps[i]);
        ids[i].iter().position(|&z| z == y).expect("x | !e lies in [!e)")
    };
    let tuple = |x: Elem| -> Vec<Elem> { (0..atoms.len()).map(|i| proj(i, x)).collect() };
    let product_size: usize = factors.iter().map(|f| f.size()).product();
    let mut images: Vec<Vec<Elem>> = a.elements().map(tuple).collect();
    let preserves = a.elements().all(|x| {
        a.elements().all(|y| {
            factors.iter().enumerate().all(|(i, f)| {
                let (px, py) = (proj(i, x), proj(i, y));
                proj(i, a.join(x, y)) == f.join(px, py)
                    && proj(i, a.meet(x, y)) == f.meet(px, py)
                    && proj(i, a.odot(x, y)) == f.odot(px, py)
                    && proj(i, a.imp(x, y)) == f.imp(px, py)
            })
        })
    });
    images.sort();
    images.dedup();
    let isomorphic = preserves && images.len() == a.size() && product_size == a.size();
    let all_local = factors.iter().all(|f| f.is_local());
    LocalDecomposition { atoms, factors, isomorphic, all_local }
}

impl LocalDecomposition {
    pub fn product_of_locals(&self) -> bool {
        self.isomorphic && self.all_local
    }
}

pub fn theorem_checks(a: &ResiduatedLattice) -> Vec<TheoremVerdict> {
    let mut c = Collector { a, out: Vec::new() };
    let blp_f = Formula::blp();
    let ilp_f = Formula::ilp();
    let blp = a.has_blp();
    let ilp = a.has_ilp();
    let filters = a.all_filters();
    let rad = a.radical();
    let bc = a.boolean_center();
    let semisimple = a.is_semisimple();
    let (semilocal, _) = a.is_semilocal();
    let spec = a.stone_spec();
    let max = a.stone_max();
    let spec_p = spec.predicates();
    let max_p = max.predicates();
    let gelfand = a.is_gelfand();
    let ret = build_reticulation(a);

    // Lifting: equivalent forms of BLP.
    let pb = a.blp_conditions(BLP_ARITY);
    c.iff("blp-principal-form", pb.blp, pb.principal.0);
    if let Some(x) = pb.principal.1 {
        c.out.last_mut().expect("pushed").witness = Some(c.label(x));
    }
    c.iff("blp-pairwise-form", pb.blp, pb.binary.0);
    if let Some((x, y)) = pb.binary.1 {
        c.out.last_mut().expect("pushed").witness = Some(format!("({}, {})", c.label(x), c.label(y)));
    }
    c.iff("blp-nary-form", pb.blp, pb.nary.0);
    for (id, phi, global) in [("lp-atomic-characterization-blp", &blp_f, blp), ("lp-atomic-characterization-ilp", &ilp_f, ilp)] {
        let (holds, wit) = a.atomic_lp_characterization(phi).expect("atomic formula");
        c.iff(id, global, holds);
        c.out.last_mut().expect("pushed").witness = wit.map(|x| c.label(x));
    }
    for (id, phi, global) in [("lp-passes-to-quotients-blp", &blp_f, blp), ("lp-passes-to-quotients-ilp", &ilp_f, ilp)] {
        let all_quotients = filters.iter().all(|&f| a.quotient(f).expect("filter").quotient.lp_report(phi).global);
        c.iff(id, global, all_quotients);
    }
    // Complementary filter pairs are exactly the pairs [e), [!e) with e Boolean.
    let complementary: Vec<(Filter, Filter)> = filters
        .iter()
        .flat_map(|&f| filters.iter().map(move |&g| (f, g)))
        .filter(|&(f, g)| a.filter_meet(f, g) == a.trivial_filter() && a.filter_join(f, g) == a.whole())
        .collect();
    {
        let mut by_boolean: Vec<(Filter, Filter)> = bc.iter().map(|e| (a.principal(e), a.principal(a.neg(e)))).collect();
        by_boolean.sort();
        by_boolean.dedup();
        let mut comp = complementary.clone();
        comp.sort();
        let wit = comp
            .iter()
            .chain(by_boolean.iter())
            .find(|p| !(comp.contains(p) && by_boolean.contains(p)))
            .map(|&(f, g)| format!("({}, {})", c.filter_label(f), c.filter_label(g)));
        c.identity("complementary-filters-are-boolean-generated", wit);
    }
    for (id, phi, global) in [("lp-factor-pairs-blp", &blp_f, blp), ("lp-factor-pairs-ilp", &ilp_f, ilp)] {
        let factors = complementary.iter().all(|&(f, g)| {
            a.quotient(f).expect("filter").quotient.lp_report(phi).global
                && a.quotient(g).expect("filter").quotient.lp_report(phi).global
        });
        c.iff(id, global, factors);
    }

    // Spectral lemmas.
    c.identity("spectral-identities-spec", a.spectral_identities(&spec).err().map(String::from));
    c.identity("spectral-identities-max", a.spectral_identities(&max).err().map(String::from));
    {
        let mut wit = None;
        'f: for &f in &filters {
            for &g in &filters {
                let eq = (spec.d_filter(f) == spec.d_filter(g)) == (f == g);
                let sub = spec.d_filter(f).is_subset(spec.d_filter(g)) == f.is_subset(g);
                if !eq || !sub {
                    wit = Some(format!("({}, {})", c.filter_label(f), c.filter_label(g)));
                    break 'f;
                }
            }
        }
        c.identity("open-sets-determine-filters", wit);
    }
    {
        let wit = bc
            .iter()
            .find(|&e| spec.d_elem(e) != spec.v_elem(a.neg(e)) || max.d_elem(e) != max.v_elem(a.neg(e)))
            .map(|e| c.label(e));
        c.identity("boolean-open-is-closed-complement", wit);
    }
    {
        // Closure of a set of primes is V of its intersection.
        let n = spec.len();
        let wit = (0u64..1 << n).map(ElemSet).find(|&s| {
            let meet = s.iter().fold(a.carrier(), |acc, i| acc.intersection(spec.points[i].0));
            spec.closure(s) != spec.v_filter(Filter(meet))
        });
        c.identity("closure-is-v-of-intersection", wit.map(|s| format!("{s:?}")));
        let max_in_spec: ElemSet = a.max_indices().into_iter().collect();
        let ok = spec.closure(max_in_spec) == spec.v_filter(rad);
        c.identity("closure-of-max-is-v-of-radical", (!ok).then(|| String::from("closure differs")));
        c.implies("semisimple-max-dense", semisimple, spec.closure(max_in_spec) == spec.full());
    }
    {
        // Max(A) and Max(A/Rad) via M ↦ M/Rad.
        let q = a.quotient(rad).expect("radical is a filter");
        let qmax = q.quotient.stone_max();
        let map: Option<Vec<usize>> = max
            .points
            .iter()
            .map(|&m| qmax.points.iter().position(|&p| p == q.project_filter(m)))
            .collect();
        let homeo = map.is_some_and(|m| {
            let mut inv = alloc::vec![usize::MAX; m.len()];
            for (i, &j) in m.iter().enumerate() {
                inv[j] = i;
            }
            m.len() == qmax.len()
                && inv.iter().all(|&i| i != usize::MAX)
                && max.is_continuous(&qmax, &m)
                && qmax.is_continuous(&max, &inv)
        });
        c.identity("max-homeomorphic-to-max-of-radical-quotient", (!homeo).then(|| String::from("no homeomorphism")));
    }
    {
        let mut wit = None;
        for x in a.elements() {
            for e in bc {
                let (vx, dx, ve, de) = (max.v_elem(x), max.d_elem(x), max.v_elem(e), max.d_elem(e));
                let ok1 = vx.is_subset(ve) == a.is_nilpotent(a.odot(x, a.neg(e)));
                let ok2 = vx.is_subset(de) == a.is_nilpotent(a.odot(x, e));
                let ok3 = dx.is_subset(ve) == rad.contains(a.join(x, e));
                if wit.is_none() && !(ok1 && ok2 && ok3) {
                    wit = Some(format!("({}, {})", c.label(x), c.label(e)));
                }
            }
        }
        c.identity("max-inclusions-by-nilpotency", wit);
        let wit = a
            .elements()
            .find(|&x| {
                let u = (1..=a.size() as u32).fold(ElemSet::EMPTY, |acc, k| acc.union(max.v_elem(a.neg(a.pow(x, k)))));
                u != max.d_elem(x)
            })
            .map(|x| c.label(x));
        c.identity("max-d-is-union-of-v-negated-powers", wit);
    }
    {
        let clp = spec.clopen_sets() == a.clopen_via_boolean(Which::Spec);
        c.identity("spec-clopens-are-boolean", (!clp).then(|| String::from("clopen sets differ")));
        let clm = max.clopen_sets() == a.clopen_via_boolean(Which::Max);
        c.push("max-clopens-are-boolean", Kind::Identity, gelfand || semisimple, clm, true, None);
    }

    // Spectral characterizations of BLP.
    c.iff("blp-iff-spec-strongly-zero-dim", blp, spec_p.strongly_zero_dim);
    c.iff("strongly-zero-dim-cover-form-vs-definition", spec_p.strongly_zero_dim, spec.strongly_zero_dim_by_definition());
    c.iff("max-zero-dim-iff-strongly-zero-dim", max_p.zero_dim, max_p.strongly_zero_dim);
    let maxs = a.max_spec();
    let split = maxs.iter().all(|&m| {
        maxs.iter().all(|&n| m == n || bc.iter().any(|e| m.contains(e) && n.contains(a.neg(e))))
    });
    c.iff("blp-iff-maximals-split-by-boolean", blp, split);
    let boolean_basis = max.opens.iter().all(|&u| {
        u.iter().all(|x| bc.iter().any(|e| {
            let d = max.d_elem(e);
            d.contains(x) && d.is_subset(u)
        }))
    });
    c.iff("blp-iff-boolean-basis-of-max", blp, boolean_basis);
    let v_form = a.elements().all(|x| {
        bc.iter().any(|e| max.v_elem(x).is_subset(max.d_elem(e)) && max.v_elem(a.neg(x)).is_subset(max.v_elem(e)))
    });
    c.iff("blp-iff-boolean-separates-v-and-v-neg", blp, v_form);
    c.iff("blp-iff-gelfand-and-max-zero-dim", blp, gelfand && max_p.zero_dim);
    c.iff("blp-iff-gelfand-and-max-strongly-zero-dim", blp, gelfand && max_p.strongly_zero_dim);
    c.iff("blp-iff-gelfand-and-max-normal", blp, gelfand && max_p.normal);
    c.iff("blp-iff-gelfand-and-max-boolean", blp, gelfand && max_p.boolean_space);

    // (⋆) and (⋆⋆).
    let star = a.star_property();
    let star_star = a.star_star_property();
    c.iff("star-nilpotent-form", star.holds(), star.nilpotent_form);
    c.out.last_mut().expect("pushed").witness = star.direct.1.map(|x| c.label(x));
    c.iff("star-topological-form", star.holds(), star.topological_form);
    c.iff("star-power-form", star.holds(), star.power_form);
    c.implies("star-implies-blp", star.holds(), blp);
    c.implies("blp-implies-star-star", blp, star_star.0);
    c.out.last_mut().expect("pushed").witness = star_star.1.map(|x| c.label(x));

    // Gelfand.
    let g = a.gelfand_conditions();
    let (conormal, lattice_side) = ret.gelfand_lattice_side();
    c.iff("gelfand-filters-normal", gelfand, g.filt_normal);
    c.iff("gelfand-principal-filters-normal", gelfand, g.pfilt_normal);
    c.iff("gelfand-reticulation-conormal", gelfand, conormal);
    c.iff("gelfand-reticulation-unique-maximal", gelfand, lattice_side.unique_maximal);
    c.iff("gelfand-continuous-retract", gelfand, g.spectral.continuous_retract);
    c.iff("gelfand-reticulation-continuous-retract", gelfand, lattice_side.continuous_retract);
    c.iff("gelfand-spec-normal", gelfand, g.spectral.spec_normal);
    c.iff("gelfand-reticulation-spec-normal", gelfand, lattice_side.spec_normal);
    c.iff("gelfand-maximal-down-sets-closed", gelfand, g.spectral.down_sets_closed);
    c.iff("gelfand-reticulation-maximal-down-sets-closed", gelfand, lattice_side.down_sets_closed);
    c.iff("gelfand-unique-maximal-over-meet", gelfand, g.spectral.unique_maximal_over_meet);
    c.iff("gelfand-reticulation-unique-maximal-over-meet", gelfand, lattice_side.unique_maximal_over_meet);
    c.iff("gelfand-maximals-separated", gelfand, g.spectral.maximals_separated);
    c.iff("gelfand-reticulation-maximals-separated", gelfand, lattice_side.maximals_separated);
    if !gelfand {
        let p = crate::topology::maximals_above(&spec, &a.max_indices()).iter().position(|s| s.len() != 1);
        if let Some(p) = p {
            let w = c.filter_label(spec.points[p]);
            for v in c.out.iter_mut().filter(|v| v.theorem_id.starts_with("gelfand-")) {
                v.witness = Some(w.clone());
            }
        }
    }

    // Semisimple and semilocal corollaries.
    let rad_blp = a.has_phi_lp(&blp_f, rad).expect("radical is a filter").holds;
    let quotient_blp = a.quotient(rad).expect("radical is a filter").quotient.has_blp();
    c.implies("semisimple-boolean-max-implies-blp", semisimple && max_p.boolean_space, blp);
    c.iff("max-boolean-iff-radical-quotient-blp", max_p.boolean_space, quotient_blp);
    c.iff_given("semisimple-blp-iff-max-zero-dim", semisimple, blp, max_p.zero_dim);
    c.iff_given("semisimple-blp-iff-max-strongly-zero-dim", semisimple, blp, max_p.strongly_zero_dim);
    c.iff_given("semisimple-blp-iff-max-normal", semisimple, blp, max_p.normal);
    c.iff_given("semisimple-blp-iff-max-boolean", semisimple, blp, max_p.boolean_space);
    c.iff_given("semisimple-semilocal-blp-iff-star", semisimple && semilocal, blp, star.holds());
    c.iff_given("semisimple-semilocal-blp-iff-gelfand", semisimple && semilocal, blp, gelfand);
    c.implies("semisimple-hausdorff-max-implies-gelfand", semisimple && max_p.hausdorff, gelfand);

    // Semilocal decomposition.
    let dec = local_decomposition(a);
    c.iff("semilocal-radical-blp-iff-blp", semilocal && rad_blp, blp);
    c.iff("blp-iff-star", blp, star.holds());
    c.iff("blp-iff-product-of-locals", blp, dec.product_of_locals());
    c.identity("boolean-atoms-decompose", (!dec.isomorphic).then(|| String::from("decomposition map is not an isomorphism")));
    c.implies("gelfand-implies-blp-star-and-locals", gelfand, blp && star.holds() && dec.product_of_locals());
    c.implies("gelfand-implies-radical-blp", gelfand, rad_blp);
    c.implies("local-implies-blp", a.is_local(), blp);
    c.implies("hyperarchimedean-implies-blp", a.is_hyperarchimedean(), blp);

    // Reticulation.
    let bridge = ret.archimedean_bridge();
    c.identity("archimedean-iff-lambda-boolean", (!bridge.per_element).then(|| String::from("per-element mismatch")));
    c.iff("hyperarchimedean-iff-reticulation-boolean", bridge.hyperarchimedean, bridge.lattice_boolean);
    c.identity("lambda-maps-radical-to-radical", (!bridge.radical).then(|| String::from("radicals differ")));
    c.iff("blp-iff-reticulation-blp", blp, ret.lattice.lattice_blp().global);
    let per_filter = filters.iter().find(|&&f| {
        let (x, y) = crate::reticulation::blp_transfer(&ret, f).expect("filter");
        x != y
    });
    c.identity("filter-blp-iff-lambda-filter-blp", per_filter.map(|&f| c.filter_label(f)));

    c.out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{direct_product, godel_chain, lukasiewicz_chain};
    use crate::fixtures;

    fn disagreements(a: &ResiduatedLattice) -> Vec<TheoremVerdict> {
        theorem_checks(a).into_iter().filter(|v| !v.agree).collect()
    }

    #[test]
    fn fixtures_agree() {
        for a in [fixtures::exlpdif(), fixtures::nice(), fixtures::b2(), fixtures::trivial(), godel_chain(4), lukasiewicz_chain(4).unwrap()] {
            assert_eq!(disagreements(&a), []);
        }
    }

    #[test]
    fn exlpdif_sides() {
        let v = theorem_checks(&fixtures::exlpdif());
        let p = v.iter().find(|v| v.theorem_id == "blp-iff-spec-strongly-zero-dim").unwrap();
        assert_eq!((p.lhs, p.rhs), (false, false));
    }

    #[test]
    fn decomposition() {
        let a = direct_product(&godel_chain(3), &lukasiewicz_chain(3).unwrap());
        let d = local_decomposition(&a);
        assert_eq!(d.atoms.len(), 2);
        assert!(d.isomorphic && d.all_local);
        let mut sizes: Vec<usize> = d.factors.iter().map(|f| f.size()).collect();
        sizes.sort();
        assert_eq!(sizes, [3, 3]);
        let d = local_decomposition(&fixtures::exlpdif());
        assert!(d.isomorphic && !d.all_local);
        assert!(local_decomposition(&fixtures::trivial()).product_of_locals());
    }
}
