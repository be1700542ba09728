//! Standard constructions. Every constructor validates its result.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::algebra::ResiduatedLattice;
use crate::elemset::{ElemSet, MAX_ELEMS};
use crate::error::Error;
use crate::lattice::{Elem, Lattice};

/// Builds and validates an algebra from an order predicate and operation
/// closures. `imp = None` derives the residuum.
pub fn from_fns(
    labels: Vec<String>,
    leq: impl Fn(Elem, Elem) -> bool,
    odot: impl Fn(Elem, Elem) -> Elem,
    imp: Option<&dyn Fn(Elem, Elem) -> Elem>,
) -> Result<ResiduatedLattice, Error> {
    let n = labels.len();
    if n > MAX_ELEMS {
        return Err(Error::TooLarge { size: n, max: MAX_ELEMS });
    }
    let up: Vec<ElemSet> = (0..n).map(|a| (0..n).filter(|&b| leq(a, b)).collect()).collect();
    let lattice = Lattice::from_up_sets(labels, up)?;
    let table = |f: &dyn Fn(Elem, Elem) -> Elem| -> Vec<Vec<Elem>> {
        (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect()
    };
    let odot_t = table(&odot);
    let imp_t = imp.map(table);
    ResiduatedLattice::from_lattice(lattice, &odot_t, imp_t.as_deref())
}

fn chain_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            _ if i == n - 1 => "1".to_string(),
            _ => format!("{}/{}", i, n - 1),
        })
        .collect()
}

/// Boolean algebra with `n_atoms` atoms (`2^n_atoms` elements). Element ids
/// are the subset bitmasks.
pub fn boolean_algebra(n_atoms: usize) -> ResiduatedLattice {
    assert!(n_atoms <= 6, "at most 64 elements");
    let n = 1usize << n_atoms;
    let labels = (0..n)
        .map(|m| {
            if m == 0 {
                "0".to_string()
            } else if m == n - 1 {
                "1".to_string()
            } else {
                (0..n_atoms)
                    .filter(|i| m >> i & 1 == 1)
                    .map(|i| (b'p' + i as u8) as char)
                    .collect()
            }
        })
        .collect();
    from_fns(labels, |a, b| a & !b == 0, |a, b| a & b, None).expect("Boolean algebras are residuated")
}

/// `n`-element chain with `x * y = min(x, y)`.
pub fn godel_chain(n: usize) -> ResiduatedLattice {
    assert!((1..=MAX_ELEMS).contains(&n));
    from_fns(chain_labels(n), |a, b| a <= b, |a, b| a.min(b), None).expect("Gödel chains are residuated")
}

/// `n`-element MV-chain: `x * y = max(0, x + y - (n - 1))`.
pub fn lukasiewicz_chain(n: usize) -> Result<ResiduatedLattice, Error> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("Łukasiewicz chain needs n >= 2, got {n}")));
    }
    if n > MAX_ELEMS {
        return Err(Error::TooLarge { size: n, max: MAX_ELEMS });
    }
    let m = n - 1;
    from_fns(
        chain_labels(n),
        |a, b| a <= b,
        |a, b| (a + b).saturating_sub(m),
        Some(&|a, b| (m - a + b).min(m)),
    )
}

/// Componentwise product. The pair `(a, b)` gets id `a * |B| + b`.
pub fn direct_product(a: &ResiduatedLattice, b: &ResiduatedLattice) -> ResiduatedLattice {
    let nb = b.size();
    let n = a.size() * nb;
    assert!(n <= MAX_ELEMS, "product too large");
    let split = |x: Elem| (x / nb, x % nb);
    let pair = |x: Elem, y: Elem| x * nb + y;
    let labels = (0..n)
        .map(|x| {
            let (p, q) = split(x);
            format!("({};{})", a.label(p), b.label(q))
        })
        .collect();
    from_fns(
        labels,
        |x, y| {
            let ((p, q), (r, s)) = (split(x), split(y));
            a.leq(p, r) && b.leq(q, s)
        },
        |x, y| {
            let ((p, q), (r, s)) = (split(x), split(y));
            pair(a.odot(p, r), b.odot(q, s))
        },
        Some(&|x, y| {
            let ((p, q), (r, s)) = (split(x), split(y));
            pair(a.imp(p, r), b.imp(q, s))
        }),
    )
    .expect("products of residuated lattices are residuated")
}

/// Projection maps of [`direct_product`].
pub fn product_projections(a: &ResiduatedLattice, b: &ResiduatedLattice) -> (Vec<Elem>, Vec<Elem>) {
    let nb = b.size();
    let n = a.size() * nb;
    ((0..n).map(|x| x / nb).collect(), (0..n).map(|x| x % nb).collect())
}

/// Ordinal sum: `lower` below `upper`, gluing the top of `lower` with the
/// bottom of `upper`.
///
/// Ids: `lower` minus its top (in id order), then all of `upper`. For `x` in
/// the lower part and `y` in `upper`, `x * y = x`; `x -> y = 1` when `x <= y`,
/// otherwise the operation of the component holding both, or `y` when `x`
/// lies in `upper` and `y` strictly below the glue point.
pub fn ordinal_sum(lower: &ResiduatedLattice, upper: &ResiduatedLattice) -> Result<ResiduatedLattice, Error> {
    if upper.is_trivial() {
        return Err(Error::InvalidArgument("upper summand must be non-trivial".into()));
    }
    let lower_ids: Vec<Elem> = lower.elements().filter(|&x| x != lower.top()).collect();
    let k = lower_ids.len();
    let n = k + upper.size();
    if n > MAX_ELEMS {
        return Err(Error::TooLarge { size: n, max: MAX_ELEMS });
    }
    // Position in the sum -> (in lower?, id in that component).
    #[derive(Clone, Copy)]
    enum Part {
        Lo(Elem),
        Hi(Elem),
    }
    let part = |x: Elem| if x < k { Part::Lo(lower_ids[x]) } else { Part::Hi(x - k) };
    let glue = k + upper.bot();
    let from_lo = |y: Elem| {
        if y == lower.top() {
            glue
        } else {
            lower_ids.iter().position(|&z| z == y).expect("non-top lower element")
        }
    };
    let from_hi = |y: Elem| k + y;
    let leq = |x: Elem, y: Elem| match (part(x), part(y)) {
        (Part::Lo(p), Part::Lo(q)) => lower.leq(p, q),
        (Part::Lo(_), Part::Hi(_)) => true,
        (Part::Hi(_), Part::Lo(_)) => false,
        (Part::Hi(p), Part::Hi(q)) => upper.leq(p, q),
    };
    let odot = |x: Elem, y: Elem| match (part(x), part(y)) {
        (Part::Lo(p), Part::Lo(q)) => from_lo(lower.odot(p, q)),
        (Part::Lo(_), Part::Hi(_)) => x,
        (Part::Hi(_), Part::Lo(_)) => y,
        (Part::Hi(p), Part::Hi(q)) => from_hi(upper.odot(p, q)),
    };
    let imp = |x: Elem, y: Elem| {
        if leq(x, y) {
            return from_hi(upper.top());
        }
        match (part(x), part(y)) {
            (Part::Lo(p), Part::Lo(q)) => from_lo(lower.imp(p, q)),
            (Part::Hi(_), Part::Lo(_)) => y,
            (Part::Hi(p), Part::Hi(q)) => from_hi(upper.imp(p, q)),
            (Part::Lo(_), Part::Hi(_)) => unreachable!("lower part lies below upper part"),
        }
    };
    let mut labels: Vec<String> = lower_ids.iter().map(|&x| lower.label(x).to_string()).collect();
    labels.extend(upper.elements().map(|y| format!("{}'", upper.label(y))));
    from_fns(labels, leq, odot, Some(&imp))
}

/// The residuated lattice `[e)` for a Boolean `e`, with `a ->_e b = e | (a -> b)`.
/// Element ids follow the id order of `A` restricted to `[e)`.
pub fn upset_algebra(a: &ResiduatedLattice, e: Elem) -> Result<ResiduatedLattice, Error> {
    if e >= a.size() || !a.is_boolean(e) {
        return Err(Error::InvalidArgument(format!("element {e} is not in the Boolean center")));
    }
    let ids: Vec<Elem> = a.lattice().up_set(e).iter().collect();
    let back = |x: Elem| ids.iter().position(|&y| y == x).expect("closed under the operations");
    let labels = ids.iter().map(|&x| a.label(x).to_string()).collect();
    from_fns(
        labels,
        |x, y| a.leq(ids[x], ids[y]),
        |x, y| back(a.odot(ids[x], ids[y])),
        Some(&|x, y| back(a.join(e, a.imp(ids[x], ids[y])))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn lukasiewicz_two_is_b2() {
        let l2 = lukasiewicz_chain(2).unwrap();
        assert_eq!(l2, fixtures::b2());
        assert!(lukasiewicz_chain(1).is_err());
    }

    #[test]
    fn lukasiewicz_three_squares_half_to_zero() {
        let l3 = lukasiewicz_chain(3).unwrap();
        assert_eq!(l3.odot(1, 1), 0);
        assert_eq!(l3.neg(1), 1);
        assert_eq!(l3.regulars(), l3.carrier());
    }

    #[test]
    fn boolean_algebra_has_right_size() {
        for k in 0..4 {
            let b = boolean_algebra(k);
            assert_eq!(b.size(), 1 << k);
            assert_eq!(b.boolean_center(), b.carrier());
        }
    }

    #[test]
    fn ordinal_sum_of_lozenge_and_two_chain_is_exlpdif_shaped() {
        let b4 = direct_product(&fixtures::b2(), &fixtures::b2());
        let s = ordinal_sum(&b4, &godel_chain(2)).unwrap();
        assert_eq!(s.size(), 5);
        // Same shape as the five-element fixture: Gödel, Boolean center {0, 1}.
        assert!(s.odot_is_meet());
        assert_eq!(s.boolean_center().len(), 2);
        assert!(crate::enumerate::is_isomorphic(&s, &fixtures::exlpdif()));
    }

    #[test]
    fn ordinal_sum_with_mv_chain_validates() {
        let s = ordinal_sum(&lukasiewicz_chain(3).unwrap(), &lukasiewicz_chain(3).unwrap()).unwrap();
        assert_eq!(s.size(), 5);
        assert!(s.is_chain());
    }

    #[test]
    fn upset_algebra_requires_boolean() {
        let e2 = fixtures::nice();
        assert!(upset_algebra(&e2, 1).is_err());
        let p = direct_product(&fixtures::nice(), &fixtures::b2());
        for e in p.boolean_center() {
            let u = upset_algebra(&p, e).unwrap();
            assert_eq!(u.size(), p.lattice().up_set(e).len());
        }
    }
}
