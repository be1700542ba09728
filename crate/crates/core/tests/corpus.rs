//! Exhaustive checks over every algebra of small size.

use std::sync::OnceLock;

use rlat_core::construct::{direct_product, lukasiewicz_chain};
use rlat_core::dlattice::BDLattice;
use rlat_core::enumerate::{corpus_up_to, enumerate_distributive_lattices};
use rlat_core::fixtures;
use rlat_core::lifting::{product_lp_check, BLP_ARITY};
use rlat_core::reticulation::{blp_transfer, build_reticulation, build_reticulation_by_kernel, uniqueness_check};
use rlat_core::topology::Which;
use rlat_core::{theorem_checks, Formula, ResiduatedLattice};

fn corpus6() -> &'static [ResiduatedLattice] {
    static C: OnceLock<Vec<ResiduatedLattice>> = OnceLock::new();
    C.get_or_init(|| corpus_up_to(6).unwrap())
}

fn corpus(max: usize) -> impl Iterator<Item = &'static ResiduatedLattice> {
    corpus6().iter().filter(move |a| a.size() <= max)
}

#[test]
fn corpus_sizes() {
    let mut counts = [0usize; 7];
    for a in corpus6() {
        counts[a.size()] += 1;
    }
    assert_eq!(counts[1..], [1, 1, 2, 7, 26, 129]);
}

#[test]
fn theorem_suite_has_no_disagreements() {
    for a in corpus(6) {
        for v in theorem_checks(a) {
            assert!(v.agree, "{} on {:?}: {v:?}", v.theorem_id, a.to_raw());
        }
    }
}

#[test]
fn theorem_ids_are_stable_and_unique() {
    let ids: Vec<&str> = theorem_checks(&fixtures::b2()).iter().map(|v| v.theorem_id).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), ids.len());
    for a in corpus(4) {
        let other: Vec<&str> = theorem_checks(a).iter().map(|v| v.theorem_id).collect();
        assert_eq!(other, ids);
    }
}

#[test]
fn products_lift_componentwise() {
    let small: Vec<&ResiduatedLattice> = corpus(4).collect();
    for a in &small {
        for b in &small {
            for phi in [Formula::blp(), Formula::ilp()] {
                let r = product_lp_check(a, b, &phi);
                assert!(r.definable_set_splits);
                assert_eq!(r.product, r.left && r.right, "{phi} on {:?} x {:?}", a.to_raw(), b.to_raw());
            }
        }
    }
}

#[test]
fn rlp_is_universal() {
    for a in corpus(6) {
        assert!(a.has_rlp());
    }
    assert!(fixtures::exlpdif().has_rlp() && fixtures::nice().has_rlp());
}

#[test]
fn blp_forms_agree() {
    for a in corpus(6) {
        assert!(a.blp_conditions(BLP_ARITY).agree());
        assert!(a.star_property().all_equal());
        assert!(a.gelfand_conditions().all_equal());
    }
}

#[test]
fn spectral_structure() {
    for a in corpus(6) {
        let spec = a.stone_spec();
        assert!(a.spectral_identities(&spec).is_ok());
        assert!(a.spectral_identities(&a.stone_max()).is_ok());
        // Opens are closed under unions and intersections; D(a) is a basis.
        for &u in &spec.opens {
            for &v in &spec.opens {
                assert!(spec.is_open(u.union(v)) && spec.is_open(u.intersection(v)));
            }
            let covered = spec.basis.iter().filter(|(_, b)| b.is_subset(u)).fold(rlat_core::ElemSet::EMPTY, |acc, (_, b)| acc.union(*b));
            assert_eq!(covered, u);
        }
        assert_eq!(spec.clopen_sets(), a.clopen_via_boolean(Which::Spec));
        let p = spec.predicates();
        assert!(p.t0 && p.compact);
        let m = a.stone_max().predicates();
        assert!(m.t1 && m.hausdorff && m.boolean_space);
        if a.is_gelfand() {
            let rho = a.gelfand_retract().unwrap();
            assert_eq!(rho.len(), spec.len());
        }
    }
}

#[test]
fn reticulation_suite() {
    for a in corpus(5) {
        let r = build_reticulation(a);
        assert!(r.check_axioms().is_ok());
        let v = r.verify_retic_properties();
        assert!(v.all(), "{v:?} on {:?}", a.to_raw());
        assert!(r.archimedean_bridge().agree());
        assert!(r.lambda_star_preserves_intersections());
        uniqueness_check(&r, &build_reticulation_by_kernel(a)).unwrap();
        for f in a.all_filters() {
            let (x, y) = blp_transfer(&r, f).unwrap();
            assert_eq!(x, y);
        }
        assert_eq!(a.is_hyperarchimedean(), r.lattice.boolean_center() == r.lattice.carrier());
        assert_eq!(r.lattice.is_conormal_lattice(), a.is_gelfand());
    }
}

#[test]
fn class_facts() {
    let mut separated = false;
    for a in corpus(6) {
        let blp = a.has_blp();
        if a.is_chain() {
            assert!(blp && a.has_ilp());
        }
        if a.is_local() || a.is_hyperarchimedean() {
            assert!(blp);
        }
        if a.star_property().holds() {
            assert!(blp);
        }
        if blp {
            assert!(a.star_star_property().0);
        } else {
            separated = true;
        }
    }
    assert!(separated);
    for n in 2..=7 {
        let l = lukasiewicz_chain(n).unwrap();
        assert_eq!(l.boolean_center(), l.idempotents());
        for f in l.all_filters() {
            assert_eq!(l.has_phi_lp(&Formula::blp(), f).unwrap().holds, l.has_phi_lp(&Formula::ilp(), f).unwrap().holds);
        }
    }
}

#[test]
fn products_of_locals_have_blp() {
    let locals: Vec<&ResiduatedLattice> = corpus(4).filter(|a| a.is_local()).collect();
    for a in &locals {
        for b in &locals {
            let p = direct_product(a, b);
            assert!(p.has_blp());
            assert!(rlat_core::theorems::local_decomposition(&p).product_of_locals());
        }
    }
}

#[test]
fn distributive_lattice_suite() {
    for n in 1..=6 {
        for l in enumerate_distributive_lattices(n).unwrap() {
            let l = BDLattice::new(l).unwrap();
            assert_eq!(l.lattice_radical(), l.radical_by_maximals());
            if l.is_conormal_lattice() {
                assert_eq!(l.conormal_radical_blp(), Ok(true));
            }
            // Conormal lattices are exactly the ones whose primes sit under
            // one maximal filter.
            assert_eq!(l.is_conormal_lattice(), l.spectral_gelfand().unique_maximal);
        }
    }
}
