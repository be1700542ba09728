//! Analysis reports. The human form is rendered from the same struct that
//! is serialized to JSON, so both carry the same verdicts.

use std::fmt::Write as _;

use rlat_core::enumerate::{canonical_form, CANONICAL_CAP};
use rlat_core::filters::Filter;
use rlat_core::lifting::FilterLp;
use rlat_core::reticulation::build_reticulation;
use rlat_core::theorems::Kind;
use rlat_core::{theorem_checks, ElemSet, Formula, ResiduatedLattice, TopologyPredicates};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::format::print_rlat;

pub fn labels_of(a: &ResiduatedLattice, s: ElemSet) -> Vec<String> {
    s.iter().map(|x| a.label(x).to_string()).collect()
}

/// `{c,1}`
pub fn set_text(items: &[String]) -> String {
    format!("{{{}}}", items.join(","))
}

/// SHA-256 of the printed canonical form; of the printed input when the
/// carrier is too large to canonicalize.
pub fn algebra_hash(a: &ResiduatedLattice) -> (String, &'static str) {
    let (text, basis) = if a.size() <= CANONICAL_CAP {
        (print_rlat(&canonical_form(a).to_raw()), "canonical")
    } else {
        (print_rlat(&a.to_raw()), "as-given")
    };
    (hex::encode(Sha256::digest(text.as_bytes())), basis)
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct AlgebraInfo {
    pub size: usize,
    pub elements: Vec<String>,
    pub hash: String,
    pub hash_basis: &'static str,
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct Classes {
    pub boolean: Vec<String>,
    pub idempotent: Vec<String>,
    pub regular: Vec<String>,
    pub nilpotent: Vec<String>,
    pub archimedean: Vec<String>,
    pub godel: bool,
    pub involutive: bool,
    pub chain: bool,
    pub distributive: bool,
    pub hyperarchimedean: bool,
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct LpVerdict {
    pub holds: bool,
    pub counterexample: Option<String>,
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct FilterEntry {
    pub members: Vec<String>,
    pub generator: String,
    pub proper: bool,
    pub prime: bool,
    pub maximal: bool,
    pub blp: LpVerdict,
    pub ilp: LpVerdict,
    pub rlp: LpVerdict,
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct Predicates {
    pub t0: bool,
    pub t1: bool,
    pub hausdorff: bool,
    pub compact: bool,
    pub zero_dim: bool,
    pub strongly_zero_dim: bool,
    pub normal: bool,
    pub boolean_space: bool,
}

impl From<TopologyPredicates> for Predicates {
    fn from(p: TopologyPredicates) -> Self {
        Predicates {
            t0: p.t0,
            t1: p.t1,
            hausdorff: p.hausdorff,
            compact: p.compact,
            zero_dim: p.zero_dim,
            strongly_zero_dim: p.strongly_zero_dim,
            normal: p.normal,
            boolean_space: p.boolean_space,
        }
    }
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct Space {
    /// Generators `[x)` of the points.
    pub points: Vec<String>,
    pub opens: Option<Vec<Vec<String>>>,
    pub clopens: Option<Vec<Vec<String>>>,
    pub predicates: Option<Predicates>,
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct Gelfand {
    pub holds: bool,
    /// A prime filter below two maximal filters.
    pub witness: Option<String>,
    pub filters_normal: bool,
    pub principal_filters_normal: bool,
    pub continuous_retract: bool,
    pub spec_normal: bool,
    pub maximal_down_sets_closed: bool,
    pub unique_maximal_over_meet: bool,
    pub maximals_separated: bool,
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct Star {
    pub star: LpVerdict,
    pub star_star: LpVerdict,
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct ReticulationSummary {
    pub size: usize,
    pub elements: Vec<String>,
    /// `λ(x)` per element of the algebra, by label.
    pub lambda: Vec<String>,
    pub boolean: bool,
    pub conormal: bool,
    pub blp: bool,
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct TheoremRow {
    pub theorem_id: &'static str,
    pub kind: &'static str,
    pub applicable: bool,
    pub lhs: bool,
    pub rhs: bool,
    pub agree: bool,
    pub witness: Option<String>,
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct TheoremSummary {
    pub total: usize,
    pub agree: usize,
    pub disagreements: Vec<&'static str>,
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct AnalysisReport {
    pub algebra: AlgebraInfo,
    pub classes: Classes,
    pub blp: LpVerdict,
    pub ilp: LpVerdict,
    pub rlp: LpVerdict,
    pub filters: Vec<FilterEntry>,
    pub radical: Vec<String>,
    pub local: bool,
    pub semilocal: bool,
    pub semisimple: bool,
    pub spec: Space,
    pub max: Space,
    pub gelfand: Gelfand,
    pub star: Star,
    pub reticulation: ReticulationSummary,
    pub theorems: TheoremSummary,
}

pub fn filter_generator(a: &ResiduatedLattice, f: Filter) -> String {
    let g = a.min_generator(f).expect("finite filters are principal");
    format!("[{})", a.label(g))
}

fn lp(a: &ResiduatedLattice, r: FilterLp) -> LpVerdict {
    LpVerdict { holds: r.holds, counterexample: r.counterexample.map(|x| a.label(x).to_string()) }
}

fn global(a: &ResiduatedLattice, phi: &Formula) -> LpVerdict {
    let rep = a.lp_report(phi);
    let first = rep
        .failing()
        .next()
        .map(|(f, _)| format!("{} = {}", filter_generator(a, *f), set_text(&labels_of(a, f.members()))));
    LpVerdict { holds: rep.global, counterexample: first }
}

fn space(a: &ResiduatedLattice, s: &rlat_core::SpectrumSpace, topology: bool) -> Space {
    let name = |set: ElemSet| -> Vec<String> { set.iter().map(|i| filter_generator(a, s.points[i])).collect() };
    Space {
        points: s.points.iter().map(|&p| filter_generator(a, p)).collect(),
        opens: topology.then(|| s.opens.iter().map(|&o| name(o)).collect()),
        clopens: topology.then(|| s.clopen_sets().into_iter().map(name).collect()),
        predicates: topology.then(|| s.predicates().into()),
    }
}

pub fn theorem_rows(a: &ResiduatedLattice) -> Vec<TheoremRow> {
    theorem_checks(a)
        .into_iter()
        .map(|v| TheoremRow {
            theorem_id: v.theorem_id,
            kind: match v.kind {
                Kind::Equivalence => "iff",
                Kind::Implication => "implies",
                Kind::Identity => "identity",
            },
            applicable: v.applicable,
            lhs: v.lhs,
            rhs: v.rhs,
            agree: v.agree,
            witness: v.witness,
        })
        .collect()
}

pub fn analyze(a: &ResiduatedLattice, topology: bool) -> AnalysisReport {
    let (hash, hash_basis) = algebra_hash(a);
    let c = a.classify();
    let (blp_f, ilp_f, rlp_f) = (Formula::blp(), Formula::ilp(), Formula::rlp());
    let filters = a
        .all_filters()
        .into_iter()
        .map(|f| FilterEntry {
            members: labels_of(a, f.members()),
            generator: filter_generator(a, f),
            proper: a.is_proper(f),
            prime: a.is_prime(f),
            maximal: a.is_maximal(f),
            blp: lp(a, a.has_phi_lp(&blp_f, f).expect("filter")),
            ilp: lp(a, a.has_phi_lp(&ilp_f, f).expect("filter")),
            rlp: lp(a, a.has_phi_lp(&rlp_f, f).expect("filter")),
        })
        .collect();
    let g = a.gelfand_conditions();
    let spec = a.stone_spec();
    let gelfand_witness = a.gelfand_retract().err().map(|e| match e {
        rlat_core::Error::NotGelfand { prime } => filter_generator(a, spec.points[prime]),
        other => other.to_string(),
    });
    let s = a.star_property();
    let ss = a.star_star_property();
    let r = build_reticulation(a);
    let rows = theorem_rows(a);
    let rl = r.lattice.lattice();
    AnalysisReport {
        algebra: AlgebraInfo { size: a.size(), elements: a.labels().to_vec(), hash, hash_basis },
        classes: Classes {
            boolean: labels_of(a, c.boolean_center),
            idempotent: labels_of(a, c.idempotents),
            regular: labels_of(a, c.regulars),
            nilpotent: labels_of(a, c.nilpotents),
            archimedean: labels_of(a, c.archimedeans),
            godel: c.is_godel,
            involutive: c.is_involutive,
            chain: c.is_chain,
            distributive: c.is_distributive,
            hyperarchimedean: c.is_hyperarchimedean,
        },
        blp: global(a, &blp_f),
        ilp: global(a, &ilp_f),
        rlp: global(a, &rlp_f),
        filters,
        radical: labels_of(a, a.radical().members()),
        local: a.is_local(),
        semilocal: a.is_semilocal().0,
        semisimple: a.is_semisimple(),
        spec: space(a, &spec, topology),
        max: space(a, &a.stone_max(), topology),
        gelfand: Gelfand {
            holds: g.primary(),
            witness: gelfand_witness,
            filters_normal: g.filt_normal,
            principal_filters_normal: g.pfilt_normal,
            continuous_retract: g.spectral.continuous_retract,
            spec_normal: g.spectral.spec_normal,
            maximal_down_sets_closed: g.spectral.down_sets_closed,
            unique_maximal_over_meet: g.spectral.unique_maximal_over_meet,
            maximals_separated: g.spectral.maximals_separated,
        },
        star: Star {
            star: LpVerdict { holds: s.holds(), counterexample: s.direct.1.map(|x| a.label(x).to_string()) },
            star_star: LpVerdict { holds: ss.0, counterexample: ss.1.map(|x| a.label(x).to_string()) },
        },
        reticulation: ReticulationSummary {
            size: r.size(),
            elements: rl.labels().to_vec(),
            lambda: r.lambda.iter().map(|&l| rl.label(l).to_string()).collect(),
            boolean: r.lattice.boolean_center() == rl.carrier(),
            conormal: r.lattice.is_conormal_lattice(),
            blp: r.lattice.lattice_blp().global,
        },
        theorems: TheoremSummary {
            total: rows.len(),
            agree: rows.iter().filter(|t| t.agree).count(),
            disagreements: rows.iter().filter(|t| !t.agree).map(|t| t.theorem_id).collect(),
        },
    }
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn verdict(v: &LpVerdict) -> String {
    match &v.counterexample {
        None => yn(v.holds).to_string(),
        Some(c) => format!("{} (at {c})", yn(v.holds)),
    }
}

fn predicates_text(out: &mut String, p: &Predicates) {
    let _ = writeln!(
        out,
        "    T0 {}  T1 {}  Hausdorff {}  compact {}  zero-dim {}  strongly zero-dim {}  normal {}  Boolean {}",
        yn(p.t0),
        yn(p.t1),
        yn(p.hausdorff),
        yn(p.compact),
        yn(p.zero_dim),
        yn(p.strongly_zero_dim),
        yn(p.normal),
        yn(p.boolean_space)
    );
}

fn space_text(out: &mut String, name: &str, s: &Space) {
    let _ = writeln!(out, "{name}: {}", set_text(&s.points));
    if let Some(opens) = &s.opens {
        let o: Vec<String> = opens.iter().map(|x| set_text(x)).collect();
        let _ = writeln!(out, "  opens: {}", o.join(" "));
    }
    if let Some(cl) = &s.clopens {
        let o: Vec<String> = cl.iter().map(|x| set_text(x)).collect();
        let _ = writeln!(out, "  clopens: {}", o.join(" "));
    }
    if let Some(p) = &s.predicates {
        predicates_text(out, p);
    }
}

pub fn render_human(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let a = &r.algebra;
    let _ = writeln!(out, "algebra: {} elements {}", a.size, set_text(&a.elements));
    let _ = writeln!(out, "hash ({}): {}", a.hash_basis, a.hash);
    let c = &r.classes;
    let _ = writeln!(out, "Boolean center: {}", set_text(&c.boolean));
    let _ = writeln!(out, "idempotents: {}", set_text(&c.idempotent));
    let _ = writeln!(out, "regular: {}", set_text(&c.regular));
    let _ = writeln!(out, "nilpotent: {}", set_text(&c.nilpotent));
    let _ = writeln!(out, "archimedean: {}", set_text(&c.archimedean));
    let _ = writeln!(
        out,
        "Godel {}  involutive {}  chain {}  distributive {}  hyperarchimedean {}",
        yn(c.godel),
        yn(c.involutive),
        yn(c.chain),
        yn(c.distributive),
        yn(c.hyperarchimedean)
    );
    let _ = writeln!(out, "BLP: {}", verdict(&r.blp));
    let _ = writeln!(out, "ILP: {}", verdict(&r.ilp));
    let _ = writeln!(out, "RLP: {}", verdict(&r.rlp));
    let _ = writeln!(out, "filters:");
    for f in &r.filters {
        let mut tags = Vec::new();
        if !f.proper {
            tags.push("improper");
        }
        if f.prime {
            tags.push("prime");
        }
        if f.maximal {
            tags.push("maximal");
        }
        let _ = writeln!(
            out,
            "  {} = {}{}  BLP {}  ILP {}  RLP {}",
            f.generator,
            set_text(&f.members),
            if tags.is_empty() { String::new() } else { format!(" ({})", tags.join(", ")) },
            verdict(&f.blp),
            verdict(&f.ilp),
            verdict(&f.rlp)
        );
    }
    let _ = writeln!(out, "radical: {}", set_text(&r.radical));
    let _ = writeln!(out, "local {}  semilocal {}  semisimple {}", yn(r.local), yn(r.semilocal), yn(r.semisimple));
    space_text(&mut out, "Spec", &r.spec);
    space_text(&mut out, "Max", &r.max);
    let g = &r.gelfand;
    let _ = writeln!(
        out,
        "Gelfand: {}{}",
        yn(g.holds),
        g.witness.as_ref().map(|w| format!(" ({w} lies below two maximal filters)")).unwrap_or_default()
    );
    let _ = writeln!(
        out,
        "  Filt normal {}  PFilt normal {}  retract {}  Spec normal {}  down-sets closed {}  unique max over meet {}  maximals separated {}",
        yn(g.filters_normal),
        yn(g.principal_filters_normal),
        yn(g.continuous_retract),
        yn(g.spec_normal),
        yn(g.maximal_down_sets_closed),
        yn(g.unique_maximal_over_meet),
        yn(g.maximals_separated)
    );
    let _ = writeln!(out, "(*): {}  (**): {}", verdict(&r.star.star), verdict(&r.star.star_star));
    let t = &r.reticulation;
    let _ = writeln!(
        out,
        "reticulation: {} elements {}  lambda = [{}]  Boolean {}  conormal {}  BLP {}",
        t.size,
        set_text(&t.elements),
        t.lambda.join(" "),
        yn(t.boolean),
        yn(t.conormal),
        yn(t.blp)
    );
    let th = &r.theorems;
    let _ = writeln!(out, "theorems: {}/{} agree", th.agree, th.total);
    for d in &th.disagreements {
        let _ = writeln!(out, "  DISAGREE {d}");
    }
    out
}

pub fn render_theorems_human(rows: &[TheoremRow]) -> String {
    let mut out = String::new();
    let width = rows.iter().map(|r| r.theorem_id.len()).max().unwrap_or(0);
    for r in rows {
        let status = if !r.applicable {
            "n/a"
        } else if r.agree {
            "ok"
        } else {
            "DISAGREE"
        };
        let _ = write!(out, "{:<width$}  {:<8} lhs={:<5} rhs={:<5} {status}", r.theorem_id, r.kind, r.lhs, r.rhs);
        if let Some(w) = &r.witness {
            let _ = write!(out, "  witness {w}");
        }
        out.push('\n');
    }
    let agree = rows.iter().filter(|r| r.agree).count();
    let _ = writeln!(out, "{agree}/{} agree", rows.len());
    out
}
