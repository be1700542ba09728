//! Small named algebras used throughout the test suites and bundled with the
//! command-line tool.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{RawAlgebra, ResiduatedLattice};

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Five-element Gödel algebra `0 < a, b < c < 1` (`a`, `b` incomparable)
/// with `odot = meet`. Has ILP but not BLP.
pub fn exlpdif_raw() -> RawAlgebra {
    RawAlgebra {
        labels: labels(&["0", "a", "b", "c", "1"]),
        order: vec![(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)],
        odot: vec![
            vec![0, 0, 0, 0, 0],
            vec![0, 1, 0, 1, 1],
            vec![0, 0, 2, 2, 2],
            vec![0, 1, 2, 3, 3],
            vec![0, 1, 2, 3, 4],
        ],
        imp: Some(vec![
            vec![4, 4, 4, 4, 4],
            vec![2, 4, 2, 4, 4],
            vec![1, 1, 4, 4, 4],
            vec![0, 1, 2, 4, 4],
            vec![0, 1, 2, 3, 4],
        ]),
    }
}

pub fn exlpdif() -> ResiduatedLattice {
    ResiduatedLattice::validate(&exlpdif_raw()).expect("fixture is a residuated lattice")
}

/// Six-element algebra on `0 < d < c < a < 1`, `0 < b < a`, neither Gödel
/// nor involutive, with a non-distributive lattice reduct.
pub fn nice_raw() -> RawAlgebra {
    RawAlgebra {
        labels: labels(&["0", "a", "b", "c", "d", "1"]),
        order: vec![(0, 4), (4, 3), (3, 1), (0, 2), (2, 1), (1, 5)],
        odot: vec![
            vec![0, 0, 0, 0, 0, 0],
            vec![0, 1, 2, 4, 4, 1],
            vec![0, 2, 2, 0, 0, 2],
            vec![0, 4, 0, 4, 4, 3],
            vec![0, 4, 0, 4, 4, 4],
            vec![0, 1, 2, 3, 4, 5],
        ],
        imp: Some(vec![
            vec![5, 5, 5, 5, 5, 5],
            vec![0, 5, 2, 3, 3, 5],
            vec![3, 5, 5, 3, 3, 5],
            vec![2, 5, 2, 5, 1, 5],
            vec![2, 5, 2, 5, 5, 5],
            vec![0, 1, 2, 3, 4, 5],
        ]),
    }
}

pub fn nice() -> ResiduatedLattice {
    ResiduatedLattice::validate(&nice_raw()).expect("fixture is a residuated lattice")
}

pub fn b2() -> ResiduatedLattice {
    crate::construct::boolean_algebra(1)
}

pub fn trivial() -> ResiduatedLattice {
    ResiduatedLattice::validate(&RawAlgebra {
        labels: labels(&["0"]),
        order: vec![],
        odot: vec![vec![0]],
        imp: None,
    })
    .expect("one-element algebra")
}
