//! Existential-conjunctive formulas in one free variable:
//!
//! ```text
//! formula := [ "exists" name+ "." ] eq ( "&&" eq )*
//! eq      := term "=" term
//! term    := imp ( "<->" imp )*
//! imp     := join [ "->" imp ]
//! join    := meet ( "|" meet )*
//! meet    := odot ( "&" odot )*
//! odot    := unary ( "*" unary )*
//! unary   := "!" unary | postfix
//! postfix := atom ( "^" k )*
//! atom    := name | "0" | "1" | "(" term ")"
//! ```
//!
//! Undeclared names are free; names starting with `w` are reserved for
//! witnesses and must be declared.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::ResiduatedLattice;
use crate::elemset::ElemSet;
use crate::error::Error;
use crate::lattice::Elem;

pub const MAX_EXPONENT: u32 = 31;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Free,
    Bound(usize),
    Const(bool),
    Join(Box<Term>, Box<Term>),
    Meet(Box<Term>, Box<Term>),
    Odot(Box<Term>, Box<Term>),
    Imp(Box<Term>, Box<Term>),
    Neg(Box<Term>),
    Biresiduum(Box<Term>, Box<Term>),
    Pow(Box<Term>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Formula {
    pub free_var: String,
    pub bound_vars: Vec<String>,
    pub equations: Vec<(Term, Term)>,
}

impl Term {
    pub fn eval(&self, a: &ResiduatedLattice, v: Elem, w: &[Elem]) -> Elem {
        match self {
            Term::Free => v,
            Term::Bound(i) => w[*i],
            Term::Const(false) => a.bot(),
            Term::Const(true) => a.top(),
            Term::Join(x, y) => a.join(x.eval(a, v, w), y.eval(a, v, w)),
            Term::Meet(x, y) => a.meet(x.eval(a, v, w), y.eval(a, v, w)),
            Term::Odot(x, y) => a.odot(x.eval(a, v, w), y.eval(a, v, w)),
            Term::Imp(x, y) => a.imp(x.eval(a, v, w), y.eval(a, v, w)),
            Term::Neg(x) => a.neg(x.eval(a, v, w)),
            Term::Biresiduum(x, y) => a.biresiduum(x.eval(a, v, w), y.eval(a, v, w)),
            Term::Pow(x, k) => a.pow(x.eval(a, v, w), *k),
        }
    }

    fn prec(&self) -> u8 {
        match self {
            Term::Biresiduum(..) => 1,
            Term::Imp(..) => 2,
            Term::Join(..) => 3,
            Term::Meet(..) => 4,
            Term::Odot(..) => 5,
            Term::Neg(_) => 6,
            Term::Pow(..) => 7,
            _ => 8,
        }
    }

    fn uses_bound(&self) -> bool {
        match self {
            Term::Bound(_) => true,
            Term::Free | Term::Const(_) => false,
            Term::Neg(x) | Term::Pow(x, _) => x.uses_bound(),
            Term::Join(x, y) | Term::Meet(x, y) | Term::Odot(x, y) | Term::Imp(x, y) | Term::Biresiduum(x, y) => {
                x.uses_bound() || y.uses_bound()
            }
        }
    }
}

impl Formula {
    /// Truth of the formula at `v`; bound variables range over the carrier.
    pub fn holds(&self, a: &ResiduatedLattice, v: Elem) -> bool {
        self.witness(a, v).is_some()
    }

    /// Least witness tuple (lexicographic in id order) for `v`.
    pub fn witness(&self, a: &ResiduatedLattice, v: Elem) -> Option<Vec<Elem>> {
        let k = self.bound_vars.len();
        let n = a.size();
        let mut w = alloc::vec![0; k];
        loop {
            if self.equations.iter().all(|(l, r)| l.eval(a, v, &w) == r.eval(a, v, &w)) {
                return Some(w);
            }
            // Odometer increment.
            let mut i = k;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                w[i] += 1;
                if w[i] < n {
                    break;
                }
                w[i] = 0;
            }
        }
    }

    /// `A(phi)`.
    pub fn definable_set(&self, a: &ResiduatedLattice) -> ElemSet {
        a.elements().filter(|&x| self.holds(a, x)).collect()
    }

    /// A single equation with no bound variables.
    pub fn atomic(&self) -> Option<(&Term, &Term)> {
        match self.equations.as_slice() {
            [(l, r)] if !l.uses_bound() && !r.uses_bound() => Some((l, r)),
            _ => None,
        }
    }

    pub fn blp() -> Formula {
        parse_formula("v | !v = 1").expect("static formula")
    }

    pub fn ilp() -> Formula {
        parse_formula("v^2 = v").expect("static formula")
    }

    pub fn rlp() -> Formula {
        parse_formula("v = !!v").expect("static formula")
    }
}

struct Printer<'a> {
    f: &'a Formula,
    t: &'a Term,
}

impl Printer<'_> {
    fn child<'b>(&'b self, t: &'b Term) -> Printer<'b> {
        Printer { f: self.f, t }
    }
}

impl fmt::Display for Printer<'_> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.t.prec();
        let wrap = |out: &mut fmt::Formatter<'_>, t: &Term, parens: bool| {
            if parens {
                write!(out, "({})", self.child(t))
            } else {
                write!(out, "{}", self.child(t))
            }
        };
        let binary = |out: &mut fmt::Formatter<'_>, x: &Term, op: &str, y: &Term, right_assoc: bool| {
            wrap(out, x, x.prec() < p || (x.prec() == p && right_assoc))?;
            write!(out, " {op} ")?;
            wrap(out, y, y.prec() < p || (y.prec() == p && !right_assoc))
        };
        match self.t {
            Term::Free => out.write_str(&self.f.free_var),
            Term::Bound(i) => out.write_str(&self.f.bound_vars[*i]),
            Term::Const(false) => out.write_str("0"),
            Term::Const(true) => out.write_str("1"),
            Term::Join(x, y) => binary(out, x, "|", y, false),
            Term::Meet(x, y) => binary(out, x, "&", y, false),
            Term::Odot(x, y) => binary(out, x, "*", y, false),
            Term::Imp(x, y) => binary(out, x, "->", y, true),
            Term::Biresiduum(x, y) => binary(out, x, "<->", y, false),
            Term::Neg(x) => {
                out.write_str("!")?;
                wrap(out, x, x.prec() < p)
            }
            Term::Pow(x, k) => {
                wrap(out, x, x.prec() < p)?;
                write!(out, "^{k}")
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.bound_vars.is_empty() {
            write!(out, "exists {} . ", self.bound_vars.join(" "))?;
        }
        for (i, (l, r)) in self.equations.iter().enumerate() {
            if i > 0 {
                out.write_str(" && ")?;
            }
            write!(out, "{} = {}", Printer { f: self, t: l }, Printer { f: self, t: r })?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Name(String),
    Num(u64),
    Sym(&'static str),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, Error> {
    const SYMS: [&str; 13] = ["<->", "->", "&&", "|", "&", "*", "!", "^", "=", "(", ")", ".", ","];
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    'outer: while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let num = text[start..i].parse().map_err(|_| Error::SyntaxError {
                position: start,
                message: "number too large".to_string(),
            })?;
            out.push((start, Tok::Num(num)));
            continue;
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Name(text[start..i].to_string())));
            continue;
        }
        for s in SYMS {
            if text[i..].starts_with(s) {
                out.push((i, Tok::Sym(s)));
                i += s.len();
                continue 'outer;
            }
        }
        return Err(Error::SyntaxError {
            position: i,
            message: format!("unexpected character {:?}", text[i..].chars().next().unwrap_or('?')),
        });
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    bound: Vec<String>,
    free: Option<String>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err(&self, message: &str) -> Error {
        Error::SyntaxError { position: self.offset(), message: message.to_string() }
    }

    fn eat(&mut self, s: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Sym(t)) if *t == s) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<(), Error> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.err(&format!("expected `{s}`")))
        }
    }

    fn term(&mut self) -> Result<Term, Error> {
        let mut t = self.imp()?;
        while self.eat("<->") {
            t = Term::Biresiduum(Box::new(t), Box::new(self.imp()?));
        }
        Ok(t)
    }

    fn imp(&mut self) -> Result<Term, Error> {
        let t = self.join()?;
        if self.eat("->") {
            Ok(Term::Imp(Box::new(t), Box::new(self.imp()?)))
        } else {
            Ok(t)
        }
    }

    fn join(&mut self) -> Result<Term, Error> {
        let mut t = self.meet()?;
        while self.eat("|") {
            t = Term::Join(Box::new(t), Box::new(self.meet()?));
        }
        Ok(t)
    }

    fn meet(&mut self) -> Result<Term, Error> {
        let mut t = self.odot()?;
        while self.eat("&") {
            t = Term::Meet(Box::new(t), Box::new(self.odot()?));
        }
        Ok(t)
    }

    fn odot(&mut self) -> Result<Term, Error> {
        let mut t = self.unary()?;
        while self.eat("*") {
            t = Term::Odot(Box::new(t), Box::new(self.unary()?));
        }
        Ok(t)
    }

    fn unary(&mut self) -> Result<Term, Error> {
        if self.eat("!") {
            return Ok(Term::Neg(Box::new(self.unary()?)));
        }
        let mut t = self.atom()?;
        while self.eat("^") {
            match self.peek() {
                Some(Tok::Num(k)) if *k <= MAX_EXPONENT as u64 => {
                    let k = *k as u32;
                    self.pos += 1;
                    t = Term::Pow(Box::new(t), k);
                }
                Some(Tok::Num(_)) => return Err(self.err("exponent exceeds 31")),
                _ => return Err(self.err("expected exponent")),
            }
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term, Error> {
        match self.peek().cloned() {
            Some(Tok::Num(0)) => {
                self.pos += 1;
                Ok(Term::Const(false))
            }
            Some(Tok::Num(1)) => {
                self.pos += 1;
                Ok(Term::Const(true))
            }
            Some(Tok::Name(name)) => {
                self.pos += 1;
                if let Some(i) = self.bound.iter().position(|b| *b == name) {
                    return Ok(Term::Bound(i));
                }
                if name.starts_with('w') {
                    return Err(Error::UnboundVariable(name));
                }
                match &self.free {
                    None => self.free = Some(name),
                    Some(f) if *f == name => {}
                    Some(f) => return Err(Error::MultipleFreeVariables(f.clone(), name)),
                }
                Ok(Term::Free)
            }
            _ if self.eat("(") => {
                let t = self.term()?;
                self.expect(")")?;
                Ok(t)
            }
            _ => Err(self.err("expected a term")),
        }
    }
}

pub fn parse_formula(text: &str) -> Result<Formula, Error> {
    let mut p = Parser { toks: lex(text)?, pos: 0, end: text.len(), bound: Vec::new(), free: None };
    if matches!(p.peek(), Some(Tok::Name(n)) if n == "exists") {
        p.pos += 1;
        while let Some(Tok::Name(n)) = p.peek().cloned() {
            if p.bound.contains(&n) {
                return Err(p.err("variable bound twice"));
            }
            p.bound.push(n);
            p.pos += 1;
            p.eat(",");
        }
        if p.bound.is_empty() {
            return Err(p.err("expected a variable after `exists`"));
        }
        p.expect(".")?;
    }
    let mut equations = Vec::new();
    loop {
        let l = p.term()?;
        p.expect("=")?;
        let r = p.term()?;
        equations.push((l, r));
        if !p.eat("&&") {
            break;
        }
    }
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(Formula { free_var: p.free.unwrap_or_else(|| "v".to_string()), bound_vars: p.bound, equations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn named_formulas_parse() {
        let f = Formula::blp();
        assert_eq!(
            f.equations,
            [(Term::Join(Box::new(Term::Free), Box::new(Term::Neg(Box::new(Term::Free)))), Term::Const(true))]
        );
        let g = parse_formula("exists w . v | w = 1 && v & w = 0").unwrap();
        assert_eq!(g.bound_vars, ["w"]);
        assert_eq!(g.equations.len(), 2);
        assert!(Formula::ilp().atomic().is_some());
        assert!(g.atomic().is_none());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_formula("v | = 1"), Err(Error::SyntaxError { position: 4, .. })));
        assert_eq!(parse_formula("v | w1 = 1"), Err(Error::UnboundVariable("w1".into())));
        assert_eq!(parse_formula("v | x = 1"), Err(Error::MultipleFreeVariables("v".into(), "x".into())));
        assert!(parse_formula("v^32 = v").is_err());
        assert!(parse_formula("v = v )").is_err());
    }

    #[test]
    fn precedence() {
        let f = parse_formula("!v^2 * v -> v | v & v <-> 1 = 0").unwrap();
        assert_eq!(f.to_string(), "!v^2 * v -> v | v & v <-> 1 = 0");
        let (l, _) = &f.equations[0];
        assert!(matches!(l, Term::Biresiduum(..)));
        let g = parse_formula("(v -> v) -> v = v -> v -> v").unwrap();
        assert_eq!(g.to_string(), "(v -> v) -> v = v -> v -> v");
        let h = parse_formula("(!v)^2 = !(v^2)").unwrap();
        assert_eq!(h.to_string(), "(!v)^2 = !v^2");
    }

    #[test]
    fn definable_sets_match_classes() {
        for a in [fixtures::exlpdif(), fixtures::nice(), fixtures::b2()] {
            assert_eq!(Formula::blp().definable_set(&a), a.boolean_center());
            assert_eq!(Formula::ilp().definable_set(&a), a.idempotents());
            assert_eq!(Formula::rlp().definable_set(&a), a.regulars());
            let lat = parse_formula("exists w . v | w = 1 && v & w = 0").unwrap();
            assert_eq!(lat.definable_set(&a), a.lattice().complemented());
            assert_eq!(parse_formula("v = v").unwrap().definable_set(&a), a.carrier());
        }
    }

    #[test]
    fn pow_zero_is_one() {
        let a = fixtures::nice();
        let f = parse_formula("v^0 = 1").unwrap();
        assert_eq!(f.definable_set(&a), a.carrier());
    }
}
