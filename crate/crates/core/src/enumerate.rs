//! Canonical forms, isomorphism and exhaustive enumeration of small lattices
//! and residuated lattices up to isomorphism.
//!
//! Canonical form: relabel so that `bot = 0` and `top = n - 1`, then take the
//! lexicographically least encoding of `(leq, odot)` over all permutations of
//! the remaining ids.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::ResiduatedLattice;
use crate::elemset::ElemSet;
use crate::error::Error;
use crate::lattice::{Elem, Lattice};

/// Largest carrier [`enumerate_algebras`] accepts.
pub const ENUMERATION_CAP: usize = 7;

/// Largest carrier for which [`canonical_form`] is computed by permutation
/// scan (`(n-2)!` candidates).
pub const CANONICAL_CAP: usize = 10;

/// Canonical labels: `0`, `a`, `b`, ..., `1`.
/// Per-element isomorphism invariant used for pruning.
type Invariant = dyn Fn(&ResiduatedLattice, Elem) -> (usize, usize, bool, bool);

pub fn canonical_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i == 0 {
                "0".to_string()
            } else if i == n - 1 {
                "1".to_string()
            } else {
                ((b'a' + (i - 1) as u8) as char).to_string()
            }
        })
        .collect()
}

/// Calls `f` with every permutation `perm` (old id -> new id) sending `bot`
/// to `0`, `top` to `n - 1`, and the other ids onto `1..n-1`.
fn for_each_bounded_perm(n: usize, bot: Elem, top: Elem, mut f: impl FnMut(&[Elem])) {
    if n == 1 {
        f(&[0]);
        return;
    }
    let interior: Vec<Elem> = (0..n).filter(|&x| x != bot && x != top).collect();
    let m = interior.len();
    let mut targets: Vec<Elem> = (1..=m).collect();
    let mut perm = vec![0; n];
    perm[bot] = 0;
    perm[top] = n - 1;
    // Heap's algorithm over `targets`.
    let mut c = vec![0usize; m];
    let mut apply = |targets: &[Elem], perm: &mut Vec<Elem>| {
        for (k, &x) in interior.iter().enumerate() {
            perm[x] = targets[k];
        }
        f(perm);
    };
    apply(&targets, &mut perm);
    let mut i = 0;
    while i < m {
        if c[i] < i {
            if i % 2 == 0 {
                targets.swap(0, i);
            } else {
                targets.swap(c[i], i);
            }
            apply(&targets, &mut perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn lattice_code(l: &Lattice, perm: &[Elem]) -> Vec<u8> {
    let n = l.size();
    let mut rows = vec![0u64; n];
    for a in 0..n {
        rows[perm[a]] = l.up_set(a).iter().map(|b| perm[b]).collect::<ElemSet>().0;
    }
    let mut out = Vec::with_capacity(n * 8);
    for r in rows {
        out.extend_from_slice(&r.to_be_bytes());
    }
    out
}

fn algebra_code(a: &ResiduatedLattice, perm: &[Elem]) -> Vec<u8> {
    let n = a.size();
    let mut out = lattice_code(a.lattice(), perm);
    let base = out.len();
    out.resize(base + n * n, 0);
    for x in 0..n {
        for y in 0..n {
            out[base + perm[x] * n + perm[y]] = perm[a.odot(x, y)] as u8;
        }
    }
    out
}

/// Canonical encoding and the permutation achieving it.
pub fn canonical_code(a: &ResiduatedLattice) -> (Vec<u8>, Vec<Elem>) {
    assert!(a.size() <= CANONICAL_CAP, "canonical form capped at {CANONICAL_CAP} elements");
    let mut best: Option<(Vec<u8>, Vec<Elem>)> = None;
    for_each_bounded_perm(a.size(), a.bot(), a.top(), |perm| {
        let code = algebra_code(a, perm);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            best = Some((code, perm.to_vec()));
        }
    });
    best.expect("at least one permutation")
}

/// The canonically relabelled copy of `a`, with canonical labels.
pub fn canonical_form(a: &ResiduatedLattice) -> ResiduatedLattice {
    let (_, perm) = canonical_code(a);
    a.permuted(&perm).with_labels(canonical_labels(a.size()))
}

pub fn lattice_canonical_code(l: &Lattice) -> (Vec<u8>, Vec<Elem>) {
    assert!(l.size() <= CANONICAL_CAP, "canonical form capped at {CANONICAL_CAP} elements");
    let mut best: Option<(Vec<u8>, Vec<Elem>)> = None;
    for_each_bounded_perm(l.size(), l.bot(), l.top(), |perm| {
        let code = lattice_code(l, perm);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            best = Some((code, perm.to_vec()));
        }
    });
    best.expect("at least one permutation")
}

/// Backtracking search for an isomorphism `a -> b` preserving order and `odot`.
pub fn find_isomorphism(a: &ResiduatedLattice, b: &ResiduatedLattice) -> Option<Vec<Elem>> {
    if a.size() != b.size() {
        return None;
    }
    let n = a.size();
    // Invariant used for pruning: (|up|, |down|, idempotent, Boolean).
    let inv = |x: &ResiduatedLattice, e: Elem| {
        (
            x.lattice().up_set(e).len(),
            x.lattice().down_set(e).len(),
            x.is_idempotent(e),
            x.is_boolean(e),
        )
    };
    let mut map = vec![usize::MAX; n];
    let mut used = ElemSet::EMPTY;
    fn go(
        i: usize,
        a: &ResiduatedLattice,
        b: &ResiduatedLattice,
        map: &mut Vec<Elem>,
        used: &mut ElemSet,
        inv: &Invariant,
    ) -> bool {
        let n = a.size();
        if i == n {
            return true;
        }
        for t in 0..n {
            if used.contains(t) || inv(a, i) != inv(b, t) {
                continue;
            }
            map[i] = t;
            let ok = (0..=i).all(|j| {
                a.leq(i, j) == b.leq(t, map[j])
                    && a.leq(j, i) == b.leq(map[j], t)
                    && {
                        let (p, q) = (a.odot(i, j), a.odot(j, i));
                        (p > i || map[p] == b.odot(t, map[j])) && (q > i || map[q] == b.odot(map[j], t))
                    }
            });
            if ok {
                used.insert(t);
                if go(i + 1, a, b, map, used, inv) {
                    return true;
                }
                used.remove(t);
            }
            map[i] = usize::MAX;
        }
        false
    }
    if !go(0, a, b, &mut map, &mut used, &inv) {
        return None;
    }
    // Products landing on later ids were skipped above; check the whole table.
    let full = (0..n).all(|x| (0..n).all(|y| map[a.odot(x, y)] == b.odot(map[x], map[y])));
    if full {
        Some(map)
    } else {
        exhaustive_isomorphism(a, b)
    }
}

fn exhaustive_isomorphism(a: &ResiduatedLattice, b: &ResiduatedLattice) -> Option<Vec<Elem>> {
    let n = a.size();
    let mut found = None;
    let mut map = vec![usize::MAX; n];
    let mut used = ElemSet::EMPTY;
    fn go(i: usize, a: &ResiduatedLattice, b: &ResiduatedLattice, map: &mut Vec<Elem>, used: &mut ElemSet, found: &mut Option<Vec<Elem>>) {
        let n = a.size();
        if found.is_some() {
            return;
        }
        if i == n {
            let ok = (0..n).all(|x| (0..n).all(|y| map[a.odot(x, y)] == b.odot(map[x], map[y])));
            if ok {
                *found = Some(map.clone());
            }
            return;
        }
        for t in 0..n {
            if used.contains(t) {
                continue;
            }
            map[i] = t;
            if (0..=i).all(|j| a.leq(i, j) == b.leq(t, map[j]) && a.leq(j, i) == b.leq(map[j], t)) {
                used.insert(t);
                go(i + 1, a, b, map, used, found);
                used.remove(t);
            }
        }
        map[i] = usize::MAX;
    }
    go(0, a, b, &mut map, &mut used, &mut found);
    found
}

pub fn is_isomorphic(a: &ResiduatedLattice, b: &ResiduatedLattice) -> bool {
    find_isomorphism(a, b).is_some()
}

/// All bounded lattices with `n` elements up to isomorphism, canonically
/// labelled, in canonical-code order.
pub fn enumerate_lattices(n: usize) -> Result<Vec<Lattice>, Error> {
    if n == 0 || n > CANONICAL_CAP {
        return Err(Error::SizeCapExceeded { n, cap: CANONICAL_CAP });
    }
    if n == 1 {
        return Ok(vec![Lattice::from_pairs(canonical_labels(1), &[])?]);
    }
    // Every finite poset has a linear extension, so it suffices to consider
    // strict orders contained in the natural order on ids, with 0 least and
    // n-1 greatest.
    let interior: Vec<(Elem, Elem)> = (1..n - 1)
        .flat_map(|i| (i + 1..n - 1).map(move |j| (i, j)))
        .collect();
    let mut seen: BTreeMap<Vec<u8>, Lattice> = BTreeMap::new();
    for mask in 0u64..(1u64 << interior.len()) {
        let mut up: Vec<ElemSet> = (0..n).map(|a| ElemSet::singleton(a).with(n - 1)).collect();
        up[0] = ElemSet::full(n);
        for (k, &(i, j)) in interior.iter().enumerate() {
            if mask >> k & 1 == 1 {
                up[i].insert(j);
            }
        }
        let transitive = (0..n).all(|a| up[a].iter().all(|b| up[b].is_subset(up[a])));
        if !transitive {
            continue;
        }
        let Ok(l) = Lattice::from_up_sets(canonical_labels(n), up) else {
            continue;
        };
        let (code, perm) = lattice_canonical_code(&l);
        seen.entry(code).or_insert_with(|| l.permuted(&perm).with_labels(canonical_labels(n)));
    }
    Ok(seen.into_values().collect())
}

/// All distributive bounded lattices with `n` elements up to isomorphism.
pub fn enumerate_distributive_lattices(n: usize) -> Result<Vec<Lattice>, Error> {
    Ok(enumerate_lattices(n)?.into_iter().filter(Lattice::is_distributive).collect())
}

/// All commutative residuated structures on a canonically labelled lattice
/// (`bot = 0`, `top = n - 1`), before isomorphism reduction.
fn residuated_structures(l: &Lattice, mut emit: impl FnMut(ResiduatedLattice)) {
    let n = l.size();
    let (bot, top) = (l.bot(), l.top());
    let mut table = vec![vec![0usize; n]; n];
    for x in 0..n {
        table[x][top] = x;
        table[top][x] = x;
        table[x][bot] = bot;
        table[bot][x] = bot;
    }
    let free: Vec<(Elem, Elem)> = (0..n)
        .filter(|&i| i != bot && i != top)
        .flat_map(|i| (i..n).filter(move |&j| j != top).map(move |j| (i, j)))
        .collect();
    fn go(
        k: usize,
        free: &[(Elem, Elem)],
        l: &Lattice,
        table: &mut Vec<Vec<Elem>>,
        emit: &mut dyn FnMut(ResiduatedLattice),
    ) {
        if k == free.len() {
            if let Ok(a) = ResiduatedLattice::from_lattice(l.clone(), table, None) {
                emit(a);
            }
            return;
        }
        let (i, j) = free[k];
        for v in l.down_set(l.meet(i, j)).iter() {
            // Monotonicity against assigned entries (earlier in `free`).
            let ok = free[..k].iter().all(|&(p, q)| {
                let w = table[p][q];
                let below = (l.leq(p, i) && l.leq(q, j)) || (l.leq(q, i) && l.leq(p, j));
                let above = (l.leq(i, p) && l.leq(j, q)) || (l.leq(i, q) && l.leq(j, p));
                (!below || l.leq(w, v)) && (!above || l.leq(v, w))
            });
            if !ok {
                continue;
            }
            table[i][j] = v;
            table[j][i] = v;
            go(k + 1, free, l, table, emit);
        }
    }
    go(0, &free, l, &mut table, &mut emit);
}

/// Emits every residuated lattice with `n` elements exactly once up to
/// isomorphism, in canonical form, in ascending canonical-code order.
/// Returns the number emitted.
pub fn enumerate_algebras(n: usize, mut emit: impl FnMut(&ResiduatedLattice)) -> Result<usize, Error> {
    if n == 0 || n > ENUMERATION_CAP {
        return Err(Error::SizeCapExceeded { n, cap: ENUMERATION_CAP });
    }
    let mut seen: BTreeMap<Vec<u8>, ResiduatedLattice> = BTreeMap::new();
    for l in enumerate_lattices(n)? {
        residuated_structures(&l, |a| {
            let (code, perm) = canonical_code(&a);
            seen.entry(code).or_insert_with(|| a.permuted(&perm).with_labels(canonical_labels(n)));
        });
    }
    for a in seen.values() {
        emit(a);
    }
    Ok(seen.len())
}

/// Collects [`enumerate_algebras`] into a vector.
pub fn algebras_of_size(n: usize) -> Result<Vec<ResiduatedLattice>, Error> {
    let mut out = Vec::new();
    enumerate_algebras(n, |a| out.push(a.clone()))?;
    Ok(out)
}

/// All algebras with `1..=max_n` elements.
pub fn corpus_up_to(max_n: usize) -> Result<Vec<ResiduatedLattice>, Error> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(algebras_of_size(n)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{direct_product, godel_chain, lukasiewicz_chain};
    use crate::fixtures;

    #[test]
    fn lattice_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| enumerate_lattices(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 5, 15, 53]);
    }

    #[test]
    fn distributive_lattice_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_distributive_lattices(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 3, 5]);
    }

    #[test]
    fn small_algebra_counts() {
        assert_eq!(enumerate_algebras(1, |_| ()).unwrap(), 1);
        assert_eq!(enumerate_algebras(2, |_| ()).unwrap(), 1);
        assert_eq!(enumerate_algebras(3, |_| ()).unwrap(), 2);
    }

    #[test]
    fn cap_enforced() {
        assert_eq!(enumerate_algebras(8, |_| ()), Err(Error::SizeCapExceeded { n: 8, cap: ENUMERATION_CAP }));
        assert!(enumerate_algebras(0, |_| ()).is_err());
    }

    #[test]
    fn canonical_form_is_idempotent() {
        for a in [fixtures::exlpdif(), fixtures::nice(), lukasiewicz_chain(4).unwrap()] {
            let c = canonical_form(&a);
            assert_eq!(canonical_form(&c), c);
            assert!(is_isomorphic(&a, &c));
        }
    }

    #[test]
    fn isomorphism_detects_difference() {
        assert!(!is_isomorphic(&godel_chain(3), &lukasiewicz_chain(3).unwrap()));
        let p = direct_product(&godel_chain(3), &godel_chain(2));
        let q = direct_product(&godel_chain(2), &godel_chain(3));
        assert!(is_isomorphic(&p, &q));
    }
}
