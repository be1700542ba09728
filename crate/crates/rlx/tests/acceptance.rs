//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Expected values for the two golden algebras are written
//! out by hand; everything else is cross-checked against the brute-force
//! oracle below, which only uses the basic operations of an algebra.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rlat_core::construct::lukasiewicz_chain;
use rlat_core::dlattice::BDLattice;
use rlat_core::enumerate::{corpus_up_to, enumerate_distributive_lattices, is_isomorphic};
use rlat_core::lifting::product_lp_check;
use rlat_core::reticulation::{blp_transfer, build_reticulation, build_reticulation_by_kernel, uniqueness_check};
use rlat_core::{construct, fixtures, theorem_checks, ElemSet, Formula, ResiduatedLattice};

const GOLDEN_LIMIT: Duration = Duration::from_secs(1);
const SUITE_LIMIT: Duration = Duration::from_secs(600);
const FIXTURES: [&str; 6] = ["exlpdif", "nice", "b2", "godel3", "luk4", "trivial"];

/// Brute force over subsets of the carrier, as bit masks.
mod oracle {
    use rlat_core::ResiduatedLattice;

    pub type Mask = u64;

    pub fn has(m: Mask, x: usize) -> bool {
        m >> x & 1 == 1
    }

    pub fn mask(xs: impl IntoIterator<Item = usize>) -> Mask {
        xs.into_iter().fold(0, |m, x| m | 1 << x)
    }

    pub fn filters(a: &ResiduatedLattice) -> Vec<Mask> {
        let n = a.size();
        (1..1u64 << n)
            .filter(|&m| {
                (0..n).all(|x| {
                    !has(m, x) || (0..n).all(|y| (!a.leq(x, y) || has(m, y)) && (!has(m, y) || has(m, a.odot(x, y))))
                })
            })
            .collect()
    }

    pub fn proper(a: &ResiduatedLattice, f: Mask) -> bool {
        !has(f, a.bot())
    }

    pub fn maximal(a: &ResiduatedLattice) -> Vec<Mask> {
        let fs = filters(a);
        let proper: Vec<Mask> = fs.iter().copied().filter(|&f| proper(a, f)).collect();
        proper.iter().copied().filter(|&f| !proper.iter().any(|&g| g != f && g & f == f)).collect()
    }

    pub fn prime(a: &ResiduatedLattice) -> Vec<Mask> {
        let n = a.size();
        filters(a)
            .into_iter()
            .filter(|&p| proper(a, p) && (0..n).all(|x| (0..n).all(|y| !has(p, a.join(x, y)) || has(p, x) || has(p, y))))
            .collect()
    }

    pub fn radical(a: &ResiduatedLattice) -> Mask {
        maximal(a).into_iter().fold((1u64 << a.size()) - 1, |acc, m| acc & m)
    }

    pub fn neg(a: &ResiduatedLattice, x: usize) -> usize {
        a.imp(x, a.bot())
    }

    pub fn boolean(a: &ResiduatedLattice, x: usize) -> bool {
        a.join(x, neg(a, x)) == a.top()
    }

    pub fn set(a: &ResiduatedLattice, p: impl Fn(usize) -> bool) -> Mask {
        mask((0..a.size()).filter(|&x| p(x)))
    }

    /// `x/F = y/F`.
    pub fn congruent(a: &ResiduatedLattice, f: Mask, x: usize, y: usize) -> bool {
        has(f, a.imp(x, y)) && has(f, a.imp(y, x))
    }

    #[derive(Clone, Copy)]
    pub enum Prop {
        Boolean,
        Idempotent,
        Regular,
    }

    /// Whether the class of `x` in A/F has the property, read through F.
    fn in_quotient(a: &ResiduatedLattice, f: Mask, p: Prop, x: usize) -> bool {
        match p {
            Prop::Boolean => has(f, a.join(x, neg(a, x))),
            Prop::Idempotent => congruent(a, f, a.odot(x, x), x),
            Prop::Regular => congruent(a, f, neg(a, neg(a, x)), x),
        }
    }

    fn in_algebra(a: &ResiduatedLattice, p: Prop, x: usize) -> bool {
        match p {
            Prop::Boolean => boolean(a, x),
            Prop::Idempotent => a.odot(x, x) == x,
            Prop::Regular => neg(a, neg(a, x)) == x,
        }
    }

    pub fn lifts_at(a: &ResiduatedLattice, p: Prop, f: Mask) -> bool {
        let n = a.size();
        (0..n).filter(|&x| in_quotient(a, f, p, x)).all(|x| (0..n).any(|e| in_algebra(a, p, e) && congruent(a, f, x, e)))
    }

    pub fn lifts(a: &ResiduatedLattice, p: Prop) -> bool {
        filters(a).into_iter().all(|f| lifts_at(a, p, f))
    }

    pub fn gelfand(a: &ResiduatedLattice) -> bool {
        let m = maximal(a);
        prime(a).into_iter().all(|p| m.iter().filter(|&&q| q & p == p).count() == 1)
    }

    pub fn local(a: &ResiduatedLattice) -> bool {
        maximal(a).len() == 1
    }

    pub fn chain(a: &ResiduatedLattice) -> bool {
        let n = a.size();
        (0..n).all(|x| (0..n).all(|y| a.leq(x, y) || a.leq(y, x)))
    }

    fn powers(a: &ResiduatedLattice, x: usize) -> Vec<usize> {
        let mut out = vec![x];
        loop {
            let next = a.odot(*out.last().unwrap(), x);
            if out.contains(&next) {
                return out;
            }
            out.push(next);
        }
    }

    pub fn hyperarchimedean(a: &ResiduatedLattice) -> bool {
        (0..a.size()).all(|x| powers(a, x).into_iter().any(|p| boolean(a, p)))
    }

    /// `[x) = {z : x^n <= z for some n}`.
    pub fn principal(a: &ResiduatedLattice, x: usize) -> Mask {
        let ps = powers(a, x);
        set(a, |z| ps.iter().any(|&p| a.leq(p, z)))
    }

    /// Principal filters under reverse inclusion form L(A). It is Boolean
    /// when each `[x)` has a `[y)` meeting it in `{1}` with `[x & y) = A`.
    pub fn reticulation_boolean(a: &ResiduatedLattice) -> bool {
        let n = a.size();
        let one = 1u64 << a.top();
        let all = (1u64 << n) - 1;
        (0..n).all(|x| (0..n).any(|y| principal(a, x) & principal(a, y) == one && principal(a, a.meet(x, y)) == all))
    }
}

use oracle::{has, mask, Mask, Prop};

struct Outcome {
    pass: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { pass: true, notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.pass = false;
            self.notes.push(what.into());
        }
    }

    fn info(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }
}

fn labels(a: &ResiduatedLattice, m: Mask) -> String {
    let xs: Vec<&str> = (0..a.size()).filter(|&x| has(m, x)).map(|x| a.label(x)).collect();
    format!("{{{}}}", xs.join(","))
}

fn by_labels(a: &ResiduatedLattice, xs: &[&str]) -> Mask {
    mask(xs.iter().map(|l| a.index_of(l).unwrap()))
}

fn lib_mask(s: ElemSet) -> Mask {
    mask(s.iter())
}

/// Compares a computed set against the expected one and the oracle.
fn set_clause(o: &mut Outcome, a: &ResiduatedLattice, name: &str, lib: Mask, oracle: Mask, expected: Mask) {
    o.check(lib == oracle, format!("{name}: library {} vs oracle {}", labels(a, lib), labels(a, oracle)));
    o.check(lib == expected, format!("{name}: computed {}, expected {}", labels(a, lib), labels(a, expected)));
}

fn max_clause(o: &mut Outcome, a: &ResiduatedLattice, gens: &[&str]) {
    let mut lib: Vec<Mask> = a.max_spec().iter().map(|f| lib_mask(f.members())).collect();
    let mut orc = oracle::maximal(a);
    let mut exp: Vec<Mask> = gens.iter().map(|g| oracle::principal(a, a.index_of(g).unwrap())).collect();
    lib.sort();
    orc.sort();
    exp.sort();
    o.check(lib == orc, "Max: library and oracle differ");
    o.check(lib == exp, format!("Max: computed {:?}, expected generators {gens:?}", lib.iter().map(|&m| labels(a, m)).collect::<Vec<_>>()));
}

fn criterion_1() -> Outcome {
    let mut o = Outcome::new();
    let a = match rlat_core::ResiduatedLattice::validate(&fixtures::exlpdif_raw()) {
        Ok(a) => a,
        Err(e) => {
            o.check(false, format!("validate: {e}"));
            return o;
        }
    };
    let all = mask(0..a.size());
    set_clause(&mut o, &a, "I(A)", lib_mask(a.idempotents()), oracle::set(&a, |x| a.odot(x, x) == x), all);
    let rad = by_labels(&a, &["c", "1"]);
    set_clause(&mut o, &a, "Rad(A)", lib_mask(a.radical().members()), oracle::radical(&a), rad);
    let r = a.radical();
    let at_rad = a.has_phi_lp(&Formula::blp(), r).unwrap().holds;
    o.check(!at_rad, "BLP holds at the radical");
    o.check(oracle::lifts_at(&a, Prop::Boolean, rad) == at_rad, "BLP at radical: oracle differs");
    let failing: Vec<Mask> = a.lp_report(&Formula::blp()).failing().map(|(f, _)| lib_mask(f.members())).collect();
    o.check(failing.contains(&rad), "radical not among failing filters");
    o.check(!a.has_blp() && !oracle::lifts(&a, Prop::Boolean), "BLP holds globally");
    o.check(a.has_ilp(), "ILP fails");
    o.check(oracle::lifts(&a, Prop::Idempotent), "ILP fails (oracle)");
    max_clause(&mut o, &a, &["a", "b"]);
    o.check(!a.is_gelfand(), "is_gelfand true");
    o.check(!oracle::gelfand(&a), "oracle says Gelfand");
    o
}

fn criterion_2() -> Outcome {
    let mut o = Outcome::new();
    let a = match rlat_core::ResiduatedLattice::validate(&fixtures::nice_raw()) {
        Ok(a) => a,
        Err(e) => {
            o.check(false, format!("validate: {e}"));
            return o;
        }
    };
    let all = mask(0..a.size());
    set_clause(&mut o, &a, "B(A)", lib_mask(a.boolean_center()), oracle::set(&a, |x| oracle::boolean(&a, x)), by_labels(&a, &["0", "1"]));
    set_clause(&mut o, &a, "I(A)", lib_mask(a.idempotents()), oracle::set(&a, |x| a.odot(x, x) == x), all & !by_labels(&a, &["c"]));
    let reg_oracle = oracle::set(&a, |x| oracle::neg(&a, oracle::neg(&a, x)) == x);
    set_clause(&mut o, &a, "Reg(A)", lib_mask(a.regulars()), reg_oracle, all & !by_labels(&a, &["a"]));
    max_clause(&mut o, &a, &["b", "d"]);
    let fa = a.generated_filter(ElemSet::from_iter([a.index_of("a").unwrap()]));
    let q = a.quotient(fa).unwrap().quotient;
    o.check(is_isomorphic(&q, &construct::boolean_algebra(2)), "A/[a) is not the four-element Boolean algebra");
    let blp = a.has_blp();
    o.check(blp == oracle::lifts(&a, Prop::Boolean), "BLP: oracle differs");
    o.check(blp, "BLP fails globally");
    if !blp {
        for (f, r) in a.lp_report(&Formula::blp()).failing() {
            let m = lib_mask(f.members());
            o.info(format!("BLP fails at {}: class of {} is Boolean in A/F with no Boolean member", labels(&a, m), r.counterexample.map_or("?", |x| a.label(x))));
        }
    }
    o.check(a.has_ilp() && oracle::lifts(&a, Prop::Idempotent), "ILP fails globally");
    o
}

fn criterion_3(corpus: &[ResiduatedLattice]) -> Outcome {
    let mut o = Outcome::new();
    let mut count = 0;
    for a in corpus.iter().filter(|a| a.size() <= 5).chain([&fixtures::exlpdif(), &fixtures::nice()]) {
        count += 1;
        o.check(a.has_rlp(), format!("RLP fails on {:?}", a.to_raw()));
        o.check(oracle::lifts(a, Prop::Regular), format!("oracle RLP fails on {:?}", a.to_raw()));
    }
    o.info(format!("{count} algebras"));
    o
}

fn criterion_4(corpus: &[ResiduatedLattice]) -> Outcome {
    let mut o = Outcome::new();
    let (mut checks, mut algebras) = (0usize, 0usize);
    for a in corpus {
        algebras += 1;
        for v in theorem_checks(a) {
            checks += 1;
            o.check(v.agree, format!("{} disagrees on {:?} (lhs {}, rhs {})", v.theorem_id, a.to_raw(), v.lhs, v.rhs));
        }
        if a.size() <= 5 {
            o.check(a.has_blp() == oracle::lifts(a, Prop::Boolean), format!("BLP vs oracle on {:?}", a.to_raw()));
            o.check(a.has_ilp() == oracle::lifts(a, Prop::Idempotent), format!("ILP vs oracle on {:?}", a.to_raw()));
        }
    }
    let small: Vec<&ResiduatedLattice> = corpus.iter().filter(|a| a.size() <= 4).collect();
    let mut pairs = 0;
    for a in &small {
        for b in &small {
            for (phi, p) in [(Formula::blp(), Prop::Boolean), (Formula::ilp(), Prop::Idempotent)] {
                pairs += 1;
                let r = product_lp_check(a, b, &phi);
                let orc = oracle::lifts(&construct::direct_product(a, b), p);
                o.check(r.definable_set_splits && r.product == (r.left && r.right) && r.product == orc, format!("product {phi} on {:?} x {:?}", a.to_raw(), b.to_raw()));
            }
        }
    }
    o.info(format!("{algebras} algebras (sizes 1-6, exhaustive), {checks} theorem checks, {pairs} product checks"));
    o
}

fn criterion_5(corpus: &[ResiduatedLattice]) -> Outcome {
    let mut o = Outcome::new();
    for a in corpus.iter().filter(|a| a.size() <= 5) {
        let r = build_reticulation(a);
        o.check(r.check_axioms().is_ok(), format!("axioms on {:?}", a.to_raw()));
        let v = r.verify_retic_properties();
        o.check(v.all(), format!("{v:?} on {:?}", a.to_raw()));
        o.check(uniqueness_check(&r, &build_reticulation_by_kernel(a)).is_ok(), "two constructions differ");
        for f in a.all_filters() {
            let (x, y) = blp_transfer(&r, f).unwrap();
            o.check(x == y, format!("BLP transfer at {} on {:?}", labels(a, lib_mask(f.members())), a.to_raw()));
        }
        let lb = r.lattice.boolean_center() == r.lattice.carrier();
        o.check(lb == oracle::reticulation_boolean(a), "L(A) Boolean: oracle differs");
        o.check(oracle::hyperarchimedean(a) == lb && a.is_hyperarchimedean() == lb, format!("hyperarchimedean vs L(A) Boolean on {:?}", a.to_raw()));
    }
    o
}

fn criterion_6(corpus: &[ResiduatedLattice]) -> Outcome {
    let mut o = Outcome::new();
    let mut separated = 0;
    for a in corpus.iter().filter(|a| a.size() <= 5) {
        let blp = oracle::lifts(a, Prop::Boolean);
        o.check(blp == a.has_blp(), "BLP vs oracle");
        if oracle::chain(a) {
            o.check(blp && oracle::lifts(a, Prop::Idempotent), format!("chain without BLP/ILP: {:?}", a.to_raw()));
        }
        if oracle::local(a) {
            o.check(blp, format!("local without BLP: {:?}", a.to_raw()));
        }
        if oracle::hyperarchimedean(a) {
            o.check(blp, format!("hyperarchimedean without BLP: {:?}", a.to_raw()));
        }
        if a.star_property().holds() {
            o.check(blp, format!("(*) without BLP: {:?}", a.to_raw()));
        }
        if blp {
            o.check(a.star_star_property().0, format!("BLP without (**): {:?}", a.to_raw()));
        } else {
            separated += 1;
        }
    }
    o.check(separated > 0, "no corpus algebra lacks BLP");
    o.check(!oracle::lifts(&fixtures::exlpdif(), Prop::Boolean), "E1 has BLP");
    for n in 2..=7 {
        let l = lukasiewicz_chain(n).unwrap();
        let b = oracle::set(&l, |x| oracle::boolean(&l, x));
        let i = oracle::set(&l, |x| l.odot(x, x) == x);
        o.check(b == i && lib_mask(l.boolean_center()) == b, format!("B != I on the {n}-element Lukasiewicz chain"));
        for f in oracle::filters(&l) {
            o.check(oracle::lifts_at(&l, Prop::Boolean, f) == oracle::lifts_at(&l, Prop::Idempotent, f), format!("BLP/ILP differ at a filter of the {n}-element Lukasiewicz chain"));
        }
    }
    o.info(format!("{separated} algebras of size <= 5 lack BLP"));
    o
}

fn lattice_filters(l: &BDLattice) -> Vec<Mask> {
    let n = l.size();
    (1..1u64 << n)
        .filter(|&m| (0..n).all(|x| !has(m, x) || (0..n).all(|y| (!l.leq(x, y) || has(m, y)) && (!has(m, y) || has(m, l.meet(x, y))))))
        .collect()
}

fn criterion_7(corpus: &[ResiduatedLattice]) -> Outcome {
    let mut o = Outcome::new();
    let mut total = 0;
    for n in 1..=6 {
        for l in enumerate_distributive_lattices(n).unwrap() {
            total += 1;
            let l = BDLattice::new(l).unwrap();
            let fs = lattice_filters(&l);
            let proper: Vec<Mask> = fs.iter().copied().filter(|&f| !has(f, l.bot())).collect();
            let maximal: Vec<Mask> = proper.iter().copied().filter(|&f| !proper.iter().any(|&g| g != f && g & f == f)).collect();
            let rad = maximal.iter().fold((1u64 << n) - 1, |acc, &m| acc & m);
            // Dense elements: x with x & y = 0 only for y = 0.
            let dense = mask((0..n).filter(|&x| (0..n).all(|y| l.meet(x, y) != l.bot() || y == l.bot())));
            let lib = lib_mask(l.lattice_radical().members());
            o.check(lib == rad && rad == dense, format!("radical vs dense set on {:?}", l.labels()));
            o.check(l.conormal_radical_blp() != Ok(false), format!("conormal radical lacks BLP on {:?}", l.labels()));
        }
    }
    for a in corpus.iter().filter(|a| a.size() <= 5) {
        let r = build_reticulation(a);
        o.check(r.lattice.is_conormal_lattice() == oracle::gelfand(a), format!("conormal L(A) vs Gelfand on {:?}", a.to_raw()));
        o.check(a.is_gelfand() == oracle::gelfand(a), "is_gelfand vs oracle");
    }
    o.info(format!("{total} distributive lattices"));
    o
}

fn criterion_8() -> Outcome {
    let mut o = Outcome::new();
    for name in FIXTURES {
        let path = format!("{}/examples/{name}.rlat", env!("CARGO_MANIFEST_DIR"));
        let run = || Command::new(env!("CARGO_BIN_EXE_rlx")).args(["check-theorems", &path]).output().unwrap();
        let (x, y) = (run(), run());
        o.check(x.status.code() == Some(0), format!("{name}: exit {:?}", x.status.code()));
        o.check(!x.stdout.is_empty() && x.stdout == y.stdout && x.stderr == y.stderr, format!("{name}: outputs differ"));
    }
    o
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpus = corpus_up_to(6).expect("enumeration");
    println!("corpus: {} algebras of size <= 6 ({} ms)", corpus.len(), start.elapsed().as_millis());

    type Run<'a> = Box<dyn Fn() -> Outcome + 'a>;
    let criteria: Vec<(&str, Option<Duration>, Run)> = vec![
        ("golden E1", Some(GOLDEN_LIMIT), Box::new(criterion_1)),
        ("golden E2", Some(GOLDEN_LIMIT), Box::new(criterion_2)),
        ("RLP universality", None, Box::new(|| criterion_3(&corpus))),
        ("theorem suite", Some(SUITE_LIMIT), Box::new(|| criterion_4(&corpus))),
        ("reticulation", None, Box::new(|| criterion_5(&corpus))),
        ("class facts", None, Box::new(|| criterion_6(&corpus))),
        ("distributive lattices", None, Box::new(|| criterion_7(&corpus))),
        ("determinism", None, Box::new(criterion_8)),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let mut o = run();
        let took = t.elapsed();
        if let Some(limit) = limit {
            o.check(took < *limit, format!("took {took:?}, limit {limit:?}"));
        }
        println!("criterion {} ({name}): {} [{} ms]", i + 1, if o.pass { "PASS" } else { "FAIL" }, took.as_millis());
        for n in o.notes.iter().take(20) {
            println!("    {n}");
        }
        failed += usize::from(!o.pass);
    }
    println!("{}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
