//! Partitions in multiplicity form, the BRCP tree walk, two reference
//! generators, and exact partition counts.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// One partition of `total`, kept both as a nondecreasing part list and as a
/// multiplicity table indexed by element.
#[derive(Clone, Debug, Default)]
pub struct Partition {
    total: u32,
    parts: Vec<u32>,
    mult: Vec<u32>,
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.parts == other.parts
    }
}

impl Eq for Partition {}

impl Hash for Partition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.parts.hash(state);
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total.cmp(&other.total).then_with(|| self.parts.cmp(&other.parts))
    }
}

impl Partition {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition::default()
    }

    /// Build from parts in any order. Zero parts are rejected.
    pub fn from_parts(parts: &[u32]) -> Option<Self> {
        if parts.contains(&0) {
            return None;
        }
        let mut sorted = parts.to_vec();
        sorted.sort_unstable();
        let mut p = Partition::with_capacity(sorted.iter().sum());
        for e in sorted {
            p.push(e);
        }
        Some(p)
    }

    /// Build from `(element, frequency)` pairs; zero frequencies are skipped.
    pub fn from_multiplicities(pairs: &[(u32, u32)]) -> Option<Self> {
        let mut parts = Vec::new();
        for &(e, f) in pairs {
            for _ in 0..f {
                parts.push(e);
            }
        }
        Partition::from_parts(&parts)
    }

    pub(crate) fn with_capacity(k: u32) -> Self {
        Partition { total: 0, parts: Vec::with_capacity(k as usize), mult: vec![0; k as usize + 1] }
    }

    /// Append a part that is no smaller than the current largest part.
    pub(crate) fn push(&mut self, e: u32) {
        debug_assert!(self.parts.last().is_none_or(|&l| l <= e));
        let i = e as usize;
        if self.mult.len() <= i {
            self.mult.resize(i + 1, 0);
        }
        self.mult[i] += 1;
        self.parts.push(e);
        self.total += e;
    }

    pub(crate) fn pop(&mut self) {
        let e = self.parts.pop().expect("pop from empty partition");
        self.mult[e as usize] -= 1;
        self.total -= e;
    }

    /// Replace the contents with the given nondecreasing parts.
    pub(crate) fn assign_ascending(&mut self, parts: &[u32]) {
        while !self.parts.is_empty() {
            self.pop();
        }
        for &e in parts {
            self.push(e);
        }
    }

    pub fn total(&self) -> u32 {
        self.total
    }

    /// Number of parts `N`.
    pub fn num_parts(&self) -> u32 {
        self.parts.len() as u32
    }

    /// Parts in nondecreasing order (the standard representation).
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Frequency `n_i` of element `i`.
    pub fn multiplicity(&self, i: u32) -> u32 {
        self.mult.get(i as usize).copied().unwrap_or(0)
    }

    /// `(element, frequency)` pairs with ascending elements.
    pub fn iter(&self) -> Multiplicities<'_> {
        Multiplicities { parts: &self.parts, pos: 0 }
    }

    /// Number of distinct elements.
    pub fn distinct_count(&self) -> usize {
        self.iter().count()
    }

    pub fn largest(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    pub fn smallest(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    pub fn contains(&self, e: u32) -> bool {
        self.multiplicity(e) > 0
    }
}

/// Iterator over `(element, frequency)` pairs of a [`Partition`].
pub struct Multiplicities<'a> {
    parts: &'a [u32],
    pos: usize,
}

impl Iterator for Multiplicities<'_> {
    type Item = (u32, u32);

    fn next(&mut self) -> Option<(u32, u32)> {
        let e = *self.parts.get(self.pos)?;
        let start = self.pos;
        while self.pos < self.parts.len() && self.parts[self.pos] == e {
            self.pos += 1;
        }
        Some((e, (self.pos - start) as u32))
    }
}

/// Order in which partitions are produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    /// The BRCP tree walk: `{k}` first, the central partition last.
    Brcp,
    /// Reverse lexicographic order of the nonincreasing part lists.
    ReverseLex,
    /// Lexicographic order of the nondecreasing part lists.
    Ascending,
}

impl Order {
    pub const ALL: [Order; 3] = [Order::Brcp, Order::ReverseLex, Order::Ascending];
}

/// Visit every partition of `k` in the given order. Returns the number visited.
///
/// The visitor sees a reused buffer; clone the partition to keep it.
pub fn enumerate<F: FnMut(&Partition)>(k: u32, order: Order, mut visitor: F) -> u64 {
    match order {
        Order::Brcp => brcp(k, &mut visitor),
        Order::ReverseLex => reverse_lex(k, &mut visitor),
        Order::Ascending => ascending(k, &mut visitor),
    }
}

fn brcp<F: FnMut(&Partition)>(k: u32, visitor: &mut F) -> u64 {
    let mut buf = Partition::with_capacity(k);
    if k == 0 {
        visitor(&buf);
        return 1;
    }
    let mut count = 0;
    brcp_node(&mut buf, k, 1, visitor, &mut count);
    count
}

fn brcp_node<F: FnMut(&Partition)>(buf: &mut Partition, rem: u32, minq: u32, visitor: &mut F, count: &mut u64) {
    buf.push(rem);
    visitor(buf);
    *count += 1;
    buf.pop();
    for q in minq..=rem / 2 {
        buf.push(q);
        brcp_node(buf, rem - q, q, visitor, count);
        buf.pop();
    }
}

/// Subtree `q` of the BRCP root: `0` is the leaf `{k}`, `q >= 1` is every
/// partition whose smallest part is `q` and that has at least two parts.
pub fn brcp_subtree<F: FnMut(&Partition)>(k: u32, q: u32, mut visitor: F) -> u64 {
    let mut buf = Partition::with_capacity(k);
    if q == 0 {
        if k > 0 {
            buf.push(k);
        }
        visitor(&buf);
        return 1;
    }
    if q > k / 2 {
        return 0;
    }
    let mut count = 0;
    buf.push(q);
    brcp_node(&mut buf, k - q, q, &mut visitor, &mut count);
    count
}

/// Number of first-level BRCP subtrees, `[k/2] + 1`.
pub fn brcp_subtree_count(k: u32) -> u32 {
    k / 2 + 1
}

fn reverse_lex<F: FnMut(&Partition)>(k: u32, visitor: &mut F) -> u64 {
    let mut buf = Partition::with_capacity(k);
    if k == 0 {
        visitor(&buf);
        return 1;
    }
    // Nonincreasing part list; `asc` is scratch space for the reversed copy.
    let mut a: Vec<u32> = vec![k];
    let mut asc: Vec<u32> = Vec::with_capacity(k as usize);
    let mut count = 0;
    loop {
        asc.clear();
        asc.extend(a.iter().rev());
        buf.assign_ascending(&asc);
        visitor(&buf);
        count += 1;
        let mut rem = 0;
        while a.last() == Some(&1) {
            a.pop();
            rem += 1;
        }
        let Some(last) = a.last_mut() else { break };
        *last -= 1;
        let x = *last;
        rem += 1;
        while rem > x {
            a.push(x);
            rem -= x;
        }
        if rem > 0 {
            a.push(rem);
        }
    }
    count
}

fn ascending<F: FnMut(&Partition)>(k: u32, visitor: &mut F) -> u64 {
    let mut buf = Partition::with_capacity(k);
    if k == 0 {
        visitor(&buf);
        return 1;
    }
    let n = k as usize;
    let mut a = vec![0u32; n + 1];
    let mut m = 1usize;
    a[1] = k;
    let mut count = 0;
    while m != 0 {
        let mut x = a[m - 1] + 1;
        let mut y = a[m] - 1;
        m -= 1;
        while x <= y {
            a[m] = x;
            y -= x;
            m += 1;
        }
        x += y;
        a[m] = x;
        buf.assign_ascending(&a[..=m]);
        visitor(&buf);
        count += 1;
    }
    count
}

/// `p(0), ..., p(n)` by Euler's pentagonal recurrence.
pub fn partition_numbers(n: usize) -> Vec<BigInt> {
    let mut p: Vec<BigInt> = Vec::with_capacity(n + 1);
    p.push(BigInt::one());
    for k in 1..=n {
        let mut acc = BigInt::zero();
        let mut j = 1usize;
        loop {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > k {
                break;
            }
            let sign_plus = j % 2 == 1;
            let mut term = p[k - g1].clone();
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= k {
                term += &p[k - g2];
            }
            if sign_plus {
                acc += term;
            } else {
                acc -= term;
            }
            j += 1;
        }
        p.push(acc);
    }
    p
}

/// `p(k)`, the number of partitions of `k`.
pub fn count_partitions(k: u32) -> BigInt {
    partition_numbers(k as usize).pop().expect("nonempty table")
}

/// `|k; m|`, the number of partitions of `k` with exactly `m` parts.
pub fn count_with_parts(k: u32, m: u32) -> BigInt {
    if m > k {
        return BigInt::zero();
    }
    if m == 0 {
        return if k == 0 { BigInt::one() } else { BigInt::zero() };
    }
    // t[j][i] = |j; i| for j <= k, i <= m.
    let (k, m) = (k as usize, m as usize);
    let mut t = vec![vec![BigInt::zero(); m + 1]; k + 1];
    t[0][0] = BigInt::one();
    for j in 1..=k {
        for i in 1..=m.min(j) {
            let v = &t[j - 1][i - 1] + &t[j - i][i];
            t[j][i] = v;
        }
    }
    t[k][m].clone()
}

/// `P(k, m)`, the number of partitions of `k` with at most `m` parts.
pub fn count_at_most_parts(k: u32, m: u32) -> BigInt {
    let (k, m) = (k as usize, m as usize);
    if m == 0 {
        return if k == 0 { BigInt::one() } else { BigInt::zero() };
    }
    // Column i holds P(j, i) for j = 0..=k.
    let mut prev = vec![BigInt::one(); k + 1];
    for i in 2..=m {
        let mut cur = prev.clone();
        for j in i..=k {
            let v = &prev[j] + &cur[j - i];
            cur[j] = v;
        }
        prev = cur;
    }
    prev[k].clone()
}
