//! Symbolic emission of coefficients in a Mathematica-readable form.
//!
//! One term is produced per partition, in BRCP order, and written as soon as
//! it is formed. Only the previous term is held back, so that line breaks and
//! signs can be placed between it and the next one.

use std::fmt::Write as _;
use std::io;

use partmeth_core::classes::{enumerate_class, pentagonal_index, ElementFilter, PartitionClass};
use partmeth_core::partitions::{enumerate, Order, Partition};

use crate::output::TermWrite;

/// What to emit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum What {
    /// `D_k` in terms of the inner coefficients `p[i,n]`, outer `q[N]` and `a`.
    Ds,
    /// `E_k` (coefficients of the reciprocal) in terms of the `DS[i,n]`.
    Es,
    /// `p(k)` as a sum over partitions into pentagonal numbers.
    Pfn,
    /// `q(k,-w)` and `p(k,w)` in terms of divisor polynomials `DP[i,w]`.
    Dispfnpoly,
}

/// How terms are laid out on lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Layout {
    /// One term per line, each continuation line opening with its sign.
    Paper,
    /// Three terms per line, every line but the last ending in a sign.
    Mathpm,
    /// Everything on one line.
    Line,
}

impl What {
    /// Layout used when none is requested.
    pub fn default_layout(self) -> Layout {
        match self {
            What::Ds | What::Es => Layout::Paper,
            What::Pfn | What::Dispfnpoly => Layout::Line,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Term {
    negative: bool,
    body: String,
}

fn power(base: &str, f: u32) -> String {
    if f > 1 {
        format!("{base}^({f})")
    } else {
        base.to_string()
    }
}

/// `N!`, `N!/m!` or `N!/(m! n!)`; `None` when the multinomial is 1.
fn multinomial_text(p: &Partition) -> Option<String> {
    if p.num_parts() < 2 || p.distinct_count() < 2 {
        return None;
    }
    let mut s = format!("{}!", p.num_parts());
    if let Some(d) = factorial_denominator(p) {
        s.push('/');
        s.push_str(&d);
    }
    Some(s)
}

/// `m!` or `(m! n!)` over the repeated elements; `None` if none repeats.
fn factorial_denominator(p: &Partition) -> Option<String> {
    let reps: Vec<String> = p.iter().filter(|&(_, f)| f > 1).map(|(_, f)| format!("{f}!")).collect();
    match reps.len() {
        0 => None,
        1 => Some(reps[0].clone()),
        _ => Some(format!("({})", reps.join(" "))),
    }
}

fn factors(p: &Partition, name: impl Fn(u32) -> String) -> String {
    p.iter().map(|(e, f)| power(&name(e), f)).collect::<Vec<_>>().join(" ")
}

fn ds_term(p: &Partition) -> Term {
    let n = p.num_parts();
    let mut body = factors(p, |e| format!("p[{e},n]"));
    let _ = write!(body, " q[{n}] {}", power("a", n));
    if let Some(m) = multinomial_text(p) {
        body.push(' ');
        body.push_str(&m);
    }
    Term { negative: false, body }
}

fn es_term(p: &Partition) -> Term {
    let n = p.num_parts();
    let mut body = format!("DS[0,0]^(-{}) ", n + 1);
    body.push_str(&factors(p, |e| format!("DS[{e},n]")));
    if let Some(m) = multinomial_text(p) {
        body.push(' ');
        body.push_str(&m);
    }
    Term { negative: n % 2 == 1, body }
}

fn pfn_term(p: &Partition) -> Term {
    let n = p.num_parts();
    let mut body = factors(p, |e| {
        let j = pentagonal_index(e).expect("only pentagonal elements are visited");
        format!("((-1)^({j}))")
    });
    let _ = write!(body, " (-1)^({n})");
    if let Some(m) = multinomial_text(p) {
        body.push(' ');
        body.push_str(&m);
    }
    Term { negative: false, body }
}

fn dispfn_term(p: &Partition, phase: bool) -> Term {
    let n = p.num_parts();
    let mut body = factors(p, |e| format!("DP[{e},w]"));
    body.push(' ');
    if phase {
        body.push_str(&power("(-1)", n));
    }
    if let Some(d) = factorial_denominator(p) {
        body.push('/');
        body.push_str(&d);
    }
    Term { negative: false, body: body.trim_end().to_string() }
}

/// Streams one `header term term ...` block with the chosen layout.
struct Block<'a, W: TermWrite> {
    out: &'a mut W,
    layout: Layout,
    header: String,
    index: u64,
    pending: Option<Term>,
}

impl<'a, W: TermWrite> Block<'a, W> {
    fn new(out: &'a mut W, layout: Layout, header: String) -> Self {
        Block { out, layout, header, index: 0, pending: None }
    }

    fn opening(&self, t: &Term) -> String {
        let sign = if t.negative { "-" } else { "" };
        format!("{}{sign}{}", self.header, t.body)
    }

    fn push(&mut self, t: Term) -> io::Result<()> {
        if self.layout == Layout::Paper {
            let text = if self.index == 0 {
                self.opening(&t)
            } else {
                format!("{} {}", if t.negative { "-" } else { "+" }, t.body)
            };
            writeln!(self.out, "{text}")?;
            self.out.end_term()?;
            self.index += 1;
            return Ok(());
        }
        if let Some(prev) = self.pending.take() {
            self.write_pending(&prev, Some(&t))?;
        }
        self.pending = Some(t);
        Ok(())
    }

    fn write_pending(&mut self, t: &Term, next: Option<&Term>) -> io::Result<()> {
        let mut text = if self.index == 0 { self.opening(t) } else { t.body.clone() };
        match next {
            None => text.push('\n'),
            Some(n) => {
                let sign = if n.negative { '-' } else { '+' };
                let wrap = self.layout == Layout::Mathpm && (self.index + 1) % 3 == 0;
                text.push(' ');
                text.push(sign);
                text.push(if wrap { '\n' } else { ' ' });
            }
        }
        self.out.write_all(text.as_bytes())?;
        self.out.end_term()?;
        self.index += 1;
        Ok(())
    }

    fn finish(mut self) -> io::Result<u64> {
        if let Some(prev) = self.pending.take() {
            self.write_pending(&prev, None)?;
        }
        if self.index == 0 {
            writeln!(self.out, "{}0", self.header)?;
        }
        Ok(self.index)
    }
}

fn stream_block<W, G>(
    out: &mut W,
    layout: Layout,
    header: String,
    k: u32,
    class: Option<&PartitionClass>,
    term: G,
) -> io::Result<u64>
where
    W: TermWrite,
    G: Fn(&Partition) -> Term,
{
    let mut block = Block::new(out, layout, header);
    let mut err = None;
    let mut visit = |p: &Partition| {
        if err.is_none() {
            if let Err(e) = block.push(term(p)) {
                err = Some(e);
            }
        }
    };
    match class {
        None => {
            enumerate(k, Order::Brcp, &mut visit);
        }
        Some(c) => {
            enumerate_class(k, c, Order::Brcp, &mut visit);
        }
    }
    if let Some(e) = err {
        return Err(e);
    }
    block.finish()
}

/// Write the symbolic form of `what` at order `k`. Returns the number of terms.
pub fn emit<W: TermWrite>(what: What, k: u32, layout: Layout, out: &mut W) -> io::Result<u64> {
    match what {
        What::Ds => stream_block(out, layout, format!("DS[{k},n_]:= "), k, None, ds_term),
        What::Es => stream_block(out, layout, format!("ES[{k},n_]:= "), k, None, es_term),
        What::Pfn => {
            let penta = PartitionClass::only(ElementFilter::Pentagonal);
            stream_block(out, layout, format!("p[{k}]:= "), k, Some(&penta), pfn_term)
        }
        What::Dispfnpoly => {
            let q = stream_block(out, layout, format!("Q[{k},-w_]:= "), k, None, |p| dispfn_term(p, true))?;
            writeln!(out)?;
            let p = stream_block(out, layout, format!("P[{k},w_]:= "), k, None, |p| dispfn_term(p, false))?;
            Ok(q + p)
        }
    }
}

/// [`emit`] into a string.
pub fn emit_string(what: What, k: u32, layout: Layout) -> String {
    let mut buf = Vec::new();
    emit(what, k, layout, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("emitted text is ASCII")
}

/// Remove all whitespace; golden comparisons are made on this form.
pub fn normalize_whitespace(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u32]) -> Partition {
        Partition::from_parts(parts).unwrap()
    }

    #[test]
    fn terms() {
        assert_eq!(ds_term(&part(&[4])).body, "p[4,n] q[1] a");
        assert_eq!(ds_term(&part(&[1, 1, 2])).body, "p[1,n]^(2) p[2,n] q[3] a^(3) 3!/2!");
        assert_eq!(es_term(&part(&[1, 1, 2, 2])).body, "DS[0,0]^(-5) DS[1,n]^(2) DS[2,n]^(2) 4!/(2! 2!)");
        assert!(es_term(&part(&[1, 3, 5])).negative);
        assert_eq!(pfn_term(&part(&[1, 5])).body, "((-1)^(1)) ((-1)^(2)) (-1)^(2) 2!");
        assert_eq!(dispfn_term(&part(&[6]), true).body, "DP[6,w] (-1)");
        assert_eq!(dispfn_term(&part(&[3, 3]), false).body, "DP[3,w]^(2) /2!");
    }

    #[test]
    fn layouts() {
        let line = emit_string(What::Es, 2, Layout::Line);
        assert_eq!(line, "ES[2,n_]:= -DS[0,0]^(-2) DS[2,n] + DS[0,0]^(-3) DS[1,n]^(2)\n");
        let paper = emit_string(What::Es, 2, Layout::Paper);
        assert_eq!(paper, "ES[2,n_]:= -DS[0,0]^(-2) DS[2,n]\n+ DS[0,0]^(-3) DS[1,n]^(2)\n");
        let m = emit_string(What::Ds, 4, Layout::Mathpm);
        let lines: Vec<&str> = m.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].ends_with('+'));
        assert!(!lines[1].ends_with('+'));
        assert_eq!(normalize_whitespace(&m), normalize_whitespace(&emit_string(What::Ds, 4, Layout::Paper)));
    }
}
