//! Line formats for partition listings.

use std::fmt::Write as _;
use std::io::{self, Write};

use partmeth_core::classes::transpose;
use partmeth_core::partitions::Partition;
use serde::Serialize;

/// `f(e) f(e) ...` with elements ascending, frequency first.
pub fn multiplicity_text(p: &Partition) -> String {
    let mut s = String::new();
    for (e, f) in p.iter() {
        if !s.is_empty() {
            s.push(' ');
        }
        let _ = write!(s, "{f}({e})");
    }
    s
}

/// Like [`multiplicity_text`] but with elements descending, which is how
/// conjugates come out of a Ferrers-diagram column count.
pub fn multiplicity_text_desc(p: &Partition) -> String {
    let pairs: Vec<(u32, u32)> = p.iter().collect();
    pairs.iter().rev().map(|(e, f)| format!("{f}({e})")).collect::<Vec<_>>().join(" ")
}

/// `T: f(e) f(e)` for the `index`-th partition (1-based).
pub fn partgen_line(index: u64, p: &Partition) -> String {
    Listing::Partgen.line(index, &multiplicity_text(p))
}

pub fn transp_line(index: u64, p: &Partition) -> String {
    Listing::Transpose.line(index, &Listing::Transpose.body(p))
}

#[derive(Serialize)]
struct JsonPartition<'a> {
    total: u32,
    parts: &'a [u32],
    num_parts: u32,
}

pub fn json_line(p: &Partition) -> String {
    let rec = JsonPartition { total: p.total(), parts: p.parts(), num_parts: p.num_parts() };
    serde_json::to_string(&rec).expect("plain struct serializes")
}

/// Digits in groups of three separated by spaces: `190 569 292`.
pub fn grouped(digits: &str) -> String {
    let (sign, body) = match digits.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", digits),
    };
    let mut out = String::with_capacity(body.len() + body.len() / 3);
    for (i, c) in body.chars().enumerate() {
        if i > 0 && (body.len() - i) % 3 == 0 {
            out.push(' ');
        }
        out.push(c);
    }
    format!("{sign}{out}")
}

/// Which listing format `partitions` writes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Listing {
    Partgen,
    Transpose,
    Json,
}

impl Listing {
    /// The part of a line that depends only on the partition.
    pub fn body(self, p: &Partition) -> String {
        match self {
            Listing::Partgen => multiplicity_text(p),
            Listing::Transpose => {
                format!("{} and its conjugate is: {}", multiplicity_text(p), multiplicity_text_desc(&transpose(p)))
            }
            Listing::Json => json_line(p),
        }
    }

    /// A full line from its 1-based index and [`Listing::body`].
    pub fn line(self, index: u64, body: &str) -> String {
        match self {
            Listing::Partgen => format!("{index}: {body}"),
            Listing::Transpose => format!("Partition {index} is: {body}"),
            Listing::Json => body.to_string(),
        }
    }

    pub fn write<W: Write>(self, out: &mut W, index: u64, p: &Partition) -> io::Result<()> {
        writeln!(out, "{}", self.line(index, &self.body(p)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lines() {
        let p = Partition::from_parts(&[1, 1, 2]).unwrap();
        assert_eq!(partgen_line(4, &p), "4: 2(1) 1(2)");
        assert_eq!(transp_line(3, &p), "Partition 3 is: 2(1) 1(2) and its conjugate is: 1(3) 1(1)");
        assert_eq!(json_line(&p), r#"{"total":4,"parts":[1,1,2],"num_parts":3}"#);
    }

    #[test]
    fn grouping() {
        assert_eq!(grouped("190569292"), "190 569 292");
        assert_eq!(grouped("42205"), "42 205");
        assert_eq!(grouped("-1000"), "-1 000");
        assert_eq!(grouped("7"), "7");
    }
}
