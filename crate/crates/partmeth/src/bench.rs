//! Throughput comparison of the three partition generators.

use std::fs::File;
use std::hint::black_box;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::time::Instant;

use partmeth_core::partitions::{enumerate, Order};
use serde::Serialize;

use crate::format::partgen_line;

/// Where generated partitions go while being timed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BenchSink {
    /// Discarded after a trivial read.
    Null,
    /// Written to a file in the `partitions` listing format.
    File,
}

pub fn order_name(o: Order) -> &'static str {
    match o {
        Order::Brcp => "brcp",
        Order::ReverseLex => "reverse-lex",
        Order::Ascending => "ascending",
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub generator: &'static str,
    pub k: u32,
    pub count: u64,
    pub seconds: f64,
    pub per_second: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    /// `k` values at which the generators disagreed on the count.
    pub mismatches: Vec<u32>,
}

impl BenchReport {
    pub fn consistent(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn write_csv<W: Write>(&self, out: W) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for row in &self.rows {
            w.serialize(row).map_err(io::Error::other)?;
        }
        w.flush()
    }
}

/// Time every generator in `orders` at every `k`. With [`BenchSink::File`]
/// the listing goes to `file` (truncated before each run).
pub fn run(ks: &[u32], orders: &[Order], sink: BenchSink, file: Option<&Path>) -> io::Result<BenchReport> {
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    for &k in ks {
        let mut counts = Vec::new();
        for &o in orders {
            let start = Instant::now();
            let count = match sink {
                BenchSink::Null => {
                    let mut acc = 0u64;
                    let n = enumerate(k, o, |p| acc = acc.wrapping_add(u64::from(p.num_parts())));
                    black_box(acc);
                    n
                }
                BenchSink::File => {
                    let path = file.ok_or_else(|| io::Error::other("file sink needs a path"))?;
                    let mut out = BufWriter::new(File::create(path)?);
                    let mut err = None;
                    let mut index = 0u64;
                    let n = enumerate(k, o, |p| {
                        index += 1;
                        if err.is_none() {
                            if let Err(e) = writeln!(out, "{}", partgen_line(index, p)) {
                                err = Some(e);
                            }
                        }
                    });
                    if let Some(e) = err {
                        return Err(e);
                    }
                    out.flush()?;
                    n
                }
            };
            let seconds = start.elapsed().as_secs_f64();
            let per_second = if seconds > 0.0 { count as f64 / seconds } else { f64::INFINITY };
            rows.push(BenchRow { generator: order_name(o), k, count, seconds, per_second });
            counts.push(count);
        }
        if counts.windows(2).any(|w| w[0] != w[1]) {
            mismatches.push(k);
        }
    }
    Ok(BenchReport { rows, mismatches })
}
