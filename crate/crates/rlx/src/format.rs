//! `.rlat` (algebras) and `.blat` (bounded lattices) text formats.
//!
//! ```text
//! # comment
//! elements: 0 a b 1
//! order: 0<a 0<b a<1 b<1
//! odot:
//! 0 0 0 0
//! ...
//! imp: derive
//! ```
//!
//! `imp:` is followed by `derive` or by one row per element. Rows may also
//! start on the keyword line.

use rlat_core::{Lattice, RawAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

/// Labels and covering pairs.
pub type OrderSpec = (Vec<String>, Vec<(usize, usize)>);

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError { line, message: message.into() }
}

/// Significant lines with 1-based numbers, comments stripped.
fn lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

struct Sections<'a> {
    items: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Sections<'a> {
    /// The remainder of the line starting with `key:`.
    fn keyword(&mut self, key: &str) -> Result<(usize, &'a str), FormatError> {
        let Some(&(line, text)) = self.items.get(self.pos) else {
            let last = self.items.last().map_or(0, |l| l.0);
            return Err(err(last, format!("missing `{key}:` section")));
        };
        let rest = text
            .strip_prefix(key)
            .and_then(|r| r.trim_start().strip_prefix(':'))
            .ok_or_else(|| err(line, format!("expected `{key}:`")))?;
        self.pos += 1;
        Ok((line, rest.trim()))
    }

    /// `n` rows of labels; the first may sit on the keyword line.
    fn table(&mut self, first: (usize, &'a str), n: usize, index: &dyn Fn(usize, &str) -> Result<usize, FormatError>) -> Result<Vec<Vec<usize>>, FormatError> {
        let mut raw: Vec<(usize, &str)> = Vec::with_capacity(n);
        if !first.1.is_empty() {
            raw.push(first);
        }
        while raw.len() < n {
            let Some(&row) = self.items.get(self.pos) else {
                return Err(err(first.0, format!("table needs {n} rows, found {}", raw.len())));
            };
            raw.push(row);
            self.pos += 1;
        }
        raw.into_iter()
            .map(|(line, text)| {
                let row: Vec<usize> = text.split_whitespace().map(|t| index(line, t)).collect::<Result<_, _>>()?;
                if row.len() != n {
                    return Err(err(line, format!("row has {} entries, expected {n}", row.len())));
                }
                Ok(row)
            })
            .collect()
    }
}

fn elements_and_order<'a>(s: &mut Sections<'a>) -> Result<OrderSpec, FormatError> {
    let (eline, elems) = s.keyword("elements")?;
    let labels: Vec<String> = elems.split_whitespace().map(String::from).collect();
    if labels.is_empty() {
        return Err(err(eline, "no elements"));
    }
    for (i, l) in labels.iter().enumerate() {
        if l.contains('<') || l == "derive" {
            return Err(err(eline, format!("label `{l}` is reserved")));
        }
        if labels[..i].contains(l) {
            return Err(err(eline, format!("duplicate label `{l}`")));
        }
    }
    let (oline, order) = s.keyword("order")?;
    let index = |t: &str| labels.iter().position(|l| l == t).ok_or_else(|| err(oline, format!("unknown element `{t}`")));
    let mut pairs = Vec::new();
    for tok in order.split_whitespace() {
        let (lo, hi) = tok.split_once('<').ok_or_else(|| err(oline, format!("expected `x<y`, found `{tok}`")))?;
        pairs.push((index(lo)?, index(hi)?));
    }
    Ok((labels, pairs))
}

fn finish(s: &Sections<'_>) -> Result<(), FormatError> {
    match s.items.get(s.pos) {
        Some(&(line, text)) => Err(err(line, format!("unexpected `{text}`"))),
        None => Ok(()),
    }
}

pub fn parse_rlat(text: &str) -> Result<RawAlgebra, FormatError> {
    let mut s = Sections { items: lines(text), pos: 0 };
    let (labels, order) = elements_and_order(&mut s)?;
    let n = labels.len();
    let index = |line: usize, t: &str| labels.iter().position(|l| l == t).ok_or_else(|| err(line, format!("unknown element `{t}`")));
    let first = s.keyword("odot")?;
    let odot = s.table(first, n, &index)?;
    let (iline, rest) = s.keyword("imp")?;
    let imp = if rest == "derive" { None } else { Some(s.table((iline, rest), n, &index)?) };
    finish(&s)?;
    Ok(RawAlgebra { labels, order, odot, imp })
}

fn row(labels: &[String], r: &[usize]) -> String {
    r.iter().map(|&x| labels[x].as_str()).collect::<Vec<_>>().join(" ")
}

fn order_line(labels: &[String], order: &[(usize, usize)]) -> String {
    let pairs: Vec<String> = order.iter().map(|&(a, b)| format!("{}<{}", labels[a], labels[b])).collect();
    if pairs.is_empty() {
        "order:".into()
    } else {
        format!("order: {}", pairs.join(" "))
    }
}

pub fn print_rlat(raw: &RawAlgebra) -> String {
    let l = &raw.labels;
    let mut out = format!("elements: {}\n{}\nodot:\n", l.join(" "), order_line(l, &raw.order));
    for r in &raw.odot {
        out.push_str(&row(l, r));
        out.push('\n');
    }
    match &raw.imp {
        None => out.push_str("imp: derive\n"),
        Some(t) => {
            out.push_str("imp:\n");
            for r in t {
                out.push_str(&row(l, r));
                out.push('\n');
            }
        }
    }
    out
}

/// Labels and covering pairs of a `.blat` file.
pub fn parse_blat(text: &str) -> Result<OrderSpec, FormatError> {
    let mut s = Sections { items: lines(text), pos: 0 };
    let r = elements_and_order(&mut s)?;
    finish(&s)?;
    Ok(r)
}

pub fn print_blat(l: &Lattice) -> String {
    let labels = l.labels();
    format!("elements: {}\n{}\n", labels.join(" "), order_line(labels, &l.covering_pairs()))
}
