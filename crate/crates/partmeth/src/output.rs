//! Output targets: standard output, a single file, or files rolled every N
//! terms.

use std::fs::File;
use std::io::{self, BufWriter, Stdout, Write};
use std::path::{Path, PathBuf};

/// Where a command writes.
pub enum Sink {
    Stdout(BufWriter<Stdout>),
    File(BufWriter<File>),
    Split(SplitWriter),
}

impl Sink {
    pub fn open(path: Option<&Path>, split: Option<u64>) -> io::Result<Sink> {
        Ok(match (path, split) {
            (None, _) => Sink::Stdout(BufWriter::new(io::stdout())),
            (Some(p), None) => Sink::File(BufWriter::new(File::create(p)?)),
            (Some(p), Some(n)) => Sink::Split(SplitWriter::new(p.to_path_buf(), n)?),
        })
    }
}

/// A writer told where term boundaries fall.
pub trait TermWrite: Write {
    /// Called after each complete term; a split sink may roll to the next file.
    fn end_term(&mut self) -> io::Result<()> {
        Ok(())
    }
}

impl TermWrite for Vec<u8> {}

impl TermWrite for io::Sink {}

impl TermWrite for Sink {
    fn end_term(&mut self) -> io::Result<()> {
        if let Sink::Split(s) = self {
            s.end_term()?;
        }
        Ok(())
    }
}

impl Write for Sink {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        match self {
            Sink::Stdout(w) => w.write(buf),
            Sink::File(w) => w.write(buf),
            Sink::Split(w) => w.write(buf),
        }
    }

    fn flush(&mut self) -> io::Result<()> {
        match self {
            Sink::Stdout(w) => w.flush(),
            Sink::File(w) => w.flush(),
            Sink::Split(w) => w.flush(),
        }
    }
}

/// Writes `base.0`, `base.1`, ... with at most `per_file` terms in each.
pub struct SplitWriter {
    base: PathBuf,
    per_file: u64,
    index: u64,
    terms: u64,
    roll: bool,
    current: BufWriter<File>,
}

impl SplitWriter {
    pub fn new(base: PathBuf, per_file: u64) -> io::Result<Self> {
        let current = BufWriter::new(File::create(Self::part_path(&base, 0))?);
        Ok(SplitWriter { base, per_file: per_file.max(1), index: 0, terms: 0, roll: false, current })
    }

    pub fn part_path(base: &Path, index: u64) -> PathBuf {
        let mut name = base.as_os_str().to_owned();
        name.push(format!(".{index}"));
        PathBuf::from(name)
    }

    pub fn end_term(&mut self) -> io::Result<()> {
        self.terms += 1;
        if self.terms == self.per_file {
            self.terms = 0;
            self.roll = true;
        }
        Ok(())
    }

    // Rolling waits for the next write so no trailing empty file appears.
    fn roll_if_due(&mut self) -> io::Result<()> {
        if self.roll {
            self.roll = false;
            self.current.flush()?;
            self.index += 1;
            self.current = BufWriter::new(File::create(Self::part_path(&self.base, self.index))?);
        }
        Ok(())
    }

    /// Number of files opened so far.
    pub fn files(&self) -> u64 {
        self.index + 1
    }
}

impl Write for SplitWriter {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        if !buf.is_empty() {
            self.roll_if_due()?;
        }
        self.current.write(buf)
    }

    fn flush(&mut self) -> io::Result<()> {
        self.current.flush()
    }
}
