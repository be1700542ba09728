//! The reticulation `(L(A), λ)`: the dual of the principal-filter lattice,
//! with `λ(a) = [a)`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::ResiduatedLattice;
use crate::dlattice::BDLattice;
use crate::elemset::ElemSet;
use crate::error::Error;
use crate::filters::Filter;
use crate::formula::Formula;
use crate::lattice::{Elem, Lattice};
use crate::topology::{SpectralGelfand, SpectrumSpace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reticulation {
    pub source: ResiduatedLattice,
    pub lattice: BDLattice,
    pub lambda: Vec<Elem>,
    /// The principal filter each lattice element stands for.
    pub filter_of: Vec<Filter>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct ReticVerdict {
    /// `λ` preserves `&`, `|`, 0, 1.
    pub lattice_morphism: bool,
    /// `λ(a) = λ(b)` iff `[a) = [b)`.
    pub kernel: bool,
    /// `λ(a^n) = λ(a)`.
    pub powers: bool,
    /// `λ*` is an isomorphism `Filt(L(A)) -> Filt(A)` with inverse `F ↦ λ(F)`.
    pub filters: bool,
    pub spec_homeomorphism: bool,
    pub max_homeomorphism: bool,
    /// `λ` restricts to a Boolean isomorphism `B(A) -> B(L(A))`.
    pub boolean_center: bool,
    /// `L(A/F) ≅ L(A)/λ(F)` for every filter `F`.
    pub quotients: bool,
}

impl ReticVerdict {
    pub fn all(&self) -> bool {
        self.lattice_morphism
            && self.kernel
            && self.powers
            && self.filters
            && self.spec_homeomorphism
            && self.max_homeomorphism
            && self.boolean_center
            && self.quotients
    }

    pub fn as_array(&self) -> [bool; 8] {
        [
            self.lattice_morphism,
            self.kernel,
            self.powers,
            self.filters,
            self.spec_homeomorphism,
            self.max_homeomorphism,
            self.boolean_center,
            self.quotients,
        ]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArchimedeanBridge {
    /// `a` archimedean iff `λ(a)` complemented, for every `a`.
    pub per_element: bool,
    pub hyperarchimedean: bool,
    pub lattice_boolean: bool,
    /// `λ(Rad(A)) = Rad(L(A))`.
    pub radical: bool,
    /// Locality and the number of maximal filters transfer.
    pub local: bool,
    pub semilocal: bool,
}

impl ArchimedeanBridge {
    pub fn agree(&self) -> bool {
        self.per_element && self.hyperarchimedean == self.lattice_boolean && self.radical && self.local && self.semilocal
    }
}

/// `x^n <= y` for some `1 <= n <= size`.
fn power_below(a: &ResiduatedLattice, x: Elem, y: Elem) -> bool {
    (1..=a.size() as u32).any(|k| a.leq(a.pow(x, k), y))
}

pub fn build_reticulation(a: &ResiduatedLattice) -> Reticulation {
    let mut filters: Vec<Filter> = a.elements().map(|x| a.principal(x)).collect();
    // Larger filters are lower in L(A).
    filters.sort_by(|f, g| g.len().cmp(&f.len()).then(f.0 .0.cmp(&g.0 .0)));
    filters.dedup();
    let lambda: Vec<Elem> = a
        .elements()
        .map(|x| filters.iter().position(|&f| f == a.principal(x)).expect("listed"))
        .collect();
    let k = filters.len();
    let up: Vec<ElemSet> = (0..k).map(|i| (0..k).filter(|&j| filters[j].is_subset(filters[i])).collect()).collect();
    let labels = (0..k)
        .map(|i| String::from(a.label(lambda.iter().position(|&l| l == i).expect("λ is onto"))))
        .collect();
    let lattice = Lattice::from_up_sets(labels, up).expect("principal filters under reverse inclusion form a lattice");
    let lattice = BDLattice::new(lattice).expect("reticulations are distributive");
    let r = Reticulation { source: a.clone(), lattice, lambda, filter_of: filters };
    if let Err(m) = r.check_axioms() {
        panic!("reticulation axiom fails: {m}");
    }
    r
}

/// Second construction: classes of `a ~ b` iff `a^n <= b` and `b^m <= a`,
/// ordered by `a^n <= b`, numbered by least member.
pub fn build_reticulation_by_kernel(a: &ResiduatedLattice) -> Reticulation {
    let n = a.size();
    let mut lambda = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in a.elements() {
        if lambda[x] == usize::MAX {
            let c = reps.len();
            reps.push(x);
            for y in a.elements() {
                if power_below(a, x, y) && power_below(a, y, x) {
                    lambda[y] = c;
                }
            }
        }
    }
    let k = reps.len();
    let up: Vec<ElemSet> = (0..k).map(|i| (0..k).filter(|&j| power_below(a, reps[i], reps[j])).collect()).collect();
    let labels = reps.iter().map(|&r| String::from(a.label(r))).collect();
    let lattice = Lattice::from_up_sets(labels, up).expect("the power preorder quotient is a lattice");
    let lattice = BDLattice::new(lattice).expect("reticulations are distributive");
    let filter_of = reps.iter().map(|&r| a.principal(r)).collect();
    Reticulation { source: a.clone(), lattice, lambda, filter_of }
}

impl Reticulation {
    pub fn size(&self) -> usize {
        self.lattice.size()
    }

    /// The five defining conditions of a reticulation.
    pub fn check_axioms(&self) -> Result<(), &'static str> {
        let (a, l, lam) = (&self.source, &self.lattice, &self.lambda);
        for x in a.elements() {
            for y in a.elements() {
                if lam[a.odot(x, y)] != l.meet(lam[x], lam[y]) {
                    return Err("λ(a * b) = λ(a) & λ(b)");
                }
                if lam[a.join(x, y)] != l.join(lam[x], lam[y]) {
                    return Err("λ(a | b) = λ(a) | λ(b)");
                }
                if l.leq(lam[x], lam[y]) != power_below(a, x, y) {
                    return Err("λ(a) <= λ(b) iff a^n <= b");
                }
            }
        }
        if lam[a.bot()] != l.bot() || lam[a.top()] != l.top() {
            return Err("λ(0) = 0, λ(1) = 1");
        }
        let image: ElemSet = lam.iter().copied().collect();
        if image != l.carrier() {
            return Err("λ is onto");
        }
        Ok(())
    }

    /// `λ(F)` as a set of lattice elements.
    pub fn image(&self, s: ElemSet) -> ElemSet {
        s.iter().map(|x| self.lambda[x]).collect()
    }

    /// `λ*(G) = λ⁻¹(G)`.
    pub fn preimage(&self, g: ElemSet) -> ElemSet {
        self.source.elements().filter(|&x| g.contains(self.lambda[x])).collect()
    }

    pub fn lambda_filter(&self, f: Filter) -> Filter {
        Filter(self.image(f.0))
    }

    pub fn lambda_star(&self, g: Filter) -> Filter {
        Filter(self.preimage(g.0))
    }

    /// `λ*` as a map between spaces of filters of `L(A)` and of `A`;
    /// `Some(map)` when it is a homeomorphism.
    fn homeomorphism(&self, from: &SpectrumSpace, to: &SpectrumSpace) -> Option<Vec<usize>> {
        if from.len() != to.len() {
            return None;
        }
        let map: Vec<usize> = from
            .points
            .iter()
            .map(|&g| to.points.iter().position(|&p| p == self.lambda_star(g)))
            .collect::<Option<Vec<_>>>()?;
        let mut inv = vec![usize::MAX; map.len()];
        for (i, &j) in map.iter().enumerate() {
            if inv[j] != usize::MAX {
                return None;
            }
            inv[j] = i;
        }
        (from.is_continuous(to, &map) && to.is_continuous(from, &inv)).then_some(map)
    }

    pub fn verify_retic_properties(&self) -> ReticVerdict {
        let (a, l, lam) = (&self.source, &self.lattice, &self.lambda);
        let lattice_morphism = lam[a.bot()] == l.bot()
            && lam[a.top()] == l.top()
            && a.elements().all(|x| {
                a.elements().all(|y| {
                    lam[a.meet(x, y)] == l.meet(lam[x], lam[y]) && lam[a.join(x, y)] == l.join(lam[x], lam[y])
                })
            });
        let kernel = a
            .elements()
            .all(|x| a.elements().all(|y| (lam[x] == lam[y]) == (a.principal(x) == a.principal(y))));
        let powers = a.elements().all(|x| (1..=a.size() as u32).all(|k| lam[a.pow(x, k)] == lam[x]));
        let filters = {
            let fa = a.all_filters();
            let fl = l.all_filters();
            let mut back: Vec<Filter> = fl.iter().map(|&g| self.lambda_star(g)).collect();
            back.sort();
            fa.len() == fl.len()
                && back == fa
                && fa.iter().all(|&f| l.is_filter(self.image(f.0)) && self.lambda_star(self.lambda_filter(f)) == f)
                && fl.iter().all(|&g| self.lambda_filter(self.lambda_star(g)) == g)
                && fl.iter().all(|&g| fl.iter().all(|&h| g.is_subset(h) == self.lambda_star(g).is_subset(self.lambda_star(h))))
        };
        let spec_homeomorphism = self.homeomorphism(&l.stone_spec(), &a.stone_spec()).is_some();
        let max_homeomorphism = self.homeomorphism(&l.stone_max(), &a.stone_max()).is_some();
        let boolean_center = {
            let ba = a.boolean_center();
            let bl = l.boolean_center();
            let img = self.image(ba);
            img == bl
                && img.len() == ba.len()
                && ba.iter().all(|e| {
                    let ne = lam[a.neg(e)];
                    l.meet(lam[e], ne) == l.bot() && l.join(lam[e], ne) == l.top()
                })
        };
        let quotients = a.all_filters().into_iter().all(|f| self.quotient_matches(f));
        ReticVerdict {
            lattice_morphism,
            kernel,
            powers,
            filters,
            spec_homeomorphism,
            max_homeomorphism,
            boolean_center,
            quotients,
        }
    }

    /// `λ_{A/F}(a/F) ↦ λ(a)/λ(F)` is a well-defined lattice isomorphism.
    fn quotient_matches(&self, f: Filter) -> bool {
        let q = self.source.quotient(f).expect("enumerated filters are filters");
        let rq = build_reticulation(&q.quotient);
        let lq = self.lattice.lattice_quotient(self.lambda_filter(f)).expect("λ(F) is a filter");
        let mut map = vec![usize::MAX; rq.size()];
        for x in self.source.elements() {
            let from = rq.lambda[q.class_of[x]];
            let to = lq.class_of[self.lambda[x]];
            if map[from] != usize::MAX && map[from] != to {
                return false;
            }
            map[from] = to;
        }
        is_lattice_isomorphism(&rq.lattice, &lq.quotient, &map)
    }

    /// The lattice-side Gelfand conditions: conormality and the spectral forms.
    pub fn gelfand_lattice_side(&self) -> (bool, SpectralGelfand) {
        (self.lattice.is_conormal_lattice(), self.lattice.spectral_gelfand())
    }

    pub fn archimedean_bridge(&self) -> ArchimedeanBridge {
        let (a, l) = (&self.source, &self.lattice);
        let bl = l.boolean_center();
        let per_element = a.elements().all(|x| a.is_archimedean(x) == bl.contains(self.lambda[x]));
        let radical = self.lambda_filter(a.radical()) == l.lattice_radical();
        let local = a.is_local() == (l.max_spec().len() == 1);
        let semilocal = a.max_spec().len() == l.max_spec().len();
        ArchimedeanBridge {
            per_element,
            hyperarchimedean: a.is_hyperarchimedean(),
            lattice_boolean: bl == l.carrier(),
            radical,
            local,
            semilocal,
        }
    }

    /// `λ*` preserves intersections of every family of filters of `L(A)`.
    pub fn lambda_star_preserves_intersections(&self) -> bool {
        let fl = self.lattice.all_filters();
        if fl.len() > 16 {
            return true;
        }
        (0u32..1 << fl.len()).all(|mask| {
            let fam: Vec<Filter> = (0..fl.len()).filter(|i| mask >> i & 1 == 1).map(|i| fl[i]).collect();
            let meet = fam.iter().fold(self.lattice.carrier(), |acc, g| acc.intersection(g.0));
            let pulled = fam.iter().fold(self.source.carrier(), |acc, &g| acc.intersection(self.lambda_star(g).0));
            self.preimage(meet) == pulled
        })
    }
}

pub fn is_lattice_isomorphism(l1: &Lattice, l2: &Lattice, f: &[Elem]) -> bool {
    if l1.size() != l2.size() || f.len() != l1.size() || f.iter().any(|&x| x >= l2.size()) {
        return false;
    }
    let image: ElemSet = f.iter().copied().collect();
    image.len() == l2.size() && l1.elements().all(|x| l1.elements().all(|y| l1.leq(x, y) == l2.leq(f[x], f[y])))
}

/// The map `f: L1 -> L2` with `f ∘ λ1 = λ2`, checked to be an isomorphism.
pub fn uniqueness_check(r1: &Reticulation, r2: &Reticulation) -> Result<Vec<Elem>, Error> {
    let mut f = vec![usize::MAX; r1.size()];
    for x in r1.source.elements() {
        let (i, j) = (r1.lambda[x], r2.lambda[x]);
        if f[i] != usize::MAX && f[i] != j {
            return Err(Error::NoIsomorphism);
        }
        f[i] = j;
    }
    if is_lattice_isomorphism(&r1.lattice, &r2.lattice, &f) {
        Ok(f)
    } else {
        Err(Error::NoIsomorphism)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RLMorphism {
    pub source: ResiduatedLattice,
    pub target: ResiduatedLattice,
    pub map: Vec<Elem>,
}

impl RLMorphism {
    pub fn new(source: ResiduatedLattice, target: ResiduatedLattice, map: Vec<Elem>) -> Result<Self, Error> {
        if map.len() != source.size() || map.iter().any(|&y| y >= target.size()) {
            return Err(Error::NotAMorphism("map does not fit the carriers".into()));
        }
        if map[source.bot()] != target.bot() || map[source.top()] != target.top() {
            return Err(Error::NotAMorphism("constants".into()));
        }
        for x in source.elements() {
            for y in source.elements() {
                let checks: [(&str, Elem, Elem); 4] = [
                    ("join", map[source.join(x, y)], target.join(map[x], map[y])),
                    ("meet", map[source.meet(x, y)], target.meet(map[x], map[y])),
                    ("odot", map[source.odot(x, y)], target.odot(map[x], map[y])),
                    ("imp", map[source.imp(x, y)], target.imp(map[x], map[y])),
                ];
                if let Some((op, _, _)) = checks.iter().find(|(_, l, r)| l != r) {
                    return Err(Error::NotAMorphism(alloc::format!("{op} at ({x}, {y})")));
                }
            }
        }
        Ok(RLMorphism { source, target, map })
    }

    pub fn identity(a: &ResiduatedLattice) -> Self {
        RLMorphism { source: a.clone(), target: a.clone(), map: a.elements().collect() }
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &RLMorphism) -> Result<RLMorphism, Error> {
        if self.target != g.source {
            return Err(Error::NotAMorphism("codomain and domain differ".into()));
        }
        Ok(RLMorphism {
            source: self.source.clone(),
            target: g.target.clone(),
            map: self.map.iter().map(|&y| g.map[y]).collect(),
        })
    }
}

/// Every morphism `a -> b`, by backtracking with a partial-operation check.
pub fn enumerate_morphisms(a: &ResiduatedLattice, b: &ResiduatedLattice) -> Vec<RLMorphism> {
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; a.size()];
    fn consistent(a: &ResiduatedLattice, b: &ResiduatedLattice, map: &[usize], upto: usize) -> bool {
        for x in 0..=upto {
            for y in 0..=upto {
                for (l, r) in [
                    (a.join(x, y), b.join(map[x], map[y])),
                    (a.meet(x, y), b.meet(map[x], map[y])),
                    (a.odot(x, y), b.odot(map[x], map[y])),
                    (a.imp(x, y), b.imp(map[x], map[y])),
                ] {
                    if map[l] != usize::MAX && map[l] != r {
                        return false;
                    }
                }
            }
        }
        true
    }
    fn go(i: usize, a: &ResiduatedLattice, b: &ResiduatedLattice, map: &mut Vec<usize>, out: &mut Vec<RLMorphism>) {
        if i == a.size() {
            if let Ok(m) = RLMorphism::new(a.clone(), b.clone(), map.clone()) {
                out.push(m);
            }
            return;
        }
        let choices: Vec<Elem> = if i == a.bot() {
            vec![b.bot()]
        } else if i == a.top() {
            vec![b.top()]
        } else {
            b.elements().collect()
        };
        for y in choices {
            map[i] = y;
            if consistent(a, b, map, i) {
                go(i + 1, a, b, map, out);
            }
            map[i] = usize::MAX;
        }
    }
    go(0, a, b, &mut map, &mut out);
    out
}

/// `L(f)` with `L(f)(λ_B(x)) = λ_C(f(x))`, checked well defined and a
/// bounded lattice morphism.
pub fn reticulate_morphism(f: &RLMorphism, rb: &Reticulation, rc: &Reticulation) -> Result<Vec<Elem>, Error> {
    let mut lf = vec![usize::MAX; rb.size()];
    for x in f.source.elements() {
        let (i, j) = (rb.lambda[x], rc.lambda[f.map[x]]);
        if lf[i] != usize::MAX && lf[i] != j {
            return Err(Error::NotAMorphism("L(f) is not well defined".into()));
        }
        lf[i] = j;
    }
    let (lb, lc) = (&rb.lattice, &rc.lattice);
    let ok = lf[lb.bot()] == lc.bot()
        && lf[lb.top()] == lc.top()
        && lb.elements().all(|x| {
            lb.elements()
                .all(|y| lf[lb.join(x, y)] == lc.join(lf[x], lf[y]) && lf[lb.meet(x, y)] == lc.meet(lf[x], lf[y]))
        });
    if ok {
        Ok(lf)
    } else {
        Err(Error::NotAMorphism("L(f) is not a lattice morphism".into()))
    }
}

/// `(F has BLP in A, λ(F) has BLP in L(A))`, computed separately.
pub fn blp_transfer(r: &Reticulation, f: Filter) -> Result<(bool, bool), Error> {
    let in_a = r.source.has_phi_lp(&Formula::blp(), f)?.holds;
    let in_l = r.lattice.lattice_blp_at(r.lambda_filter(f))?.holds;
    Ok((in_a, in_l))
}
