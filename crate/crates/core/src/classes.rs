//! Restricted partition classes, enumerated by pruning the BRCP tree, and
//! Ferrers-diagram conjugation.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::partitions::{enumerate, Order, Partition};

/// Which elements a class may use.
#[derive(Clone, Debug)]
pub enum ElementFilter {
    Odd,
    Even,
    /// Generalized pentagonal numbers `(3j^2 ± j)/2`, `j >= 1`.
    Pentagonal,
    /// An explicit element list.
    Set(Vec<u32>),
    Custom(fn(u32) -> bool),
}

impl PartialEq for ElementFilter {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (ElementFilter::Odd, ElementFilter::Odd)
            | (ElementFilter::Even, ElementFilter::Even)
            | (ElementFilter::Pentagonal, ElementFilter::Pentagonal) => true,
            (ElementFilter::Set(a), ElementFilter::Set(b)) => a == b,
            // Identity of the function, not of its behaviour.
            (ElementFilter::Custom(a), ElementFilter::Custom(b)) => *a as usize == *b as usize,
            _ => false,
        }
    }
}

impl Eq for ElementFilter {}

impl ElementFilter {
    pub fn allows(&self, e: u32) -> bool {
        match self {
            ElementFilter::Odd => e % 2 == 1,
            ElementFilter::Even => e % 2 == 0,
            ElementFilter::Pentagonal => pentagonal_index(e).is_some(),
            ElementFilter::Set(s) => s.contains(&e),
            ElementFilter::Custom(f) => f(e),
        }
    }
}

/// How `required_elements` combines its members.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Combinator {
    /// Every listed element occurs.
    All,
    /// At least one listed element occurs.
    Any,
}

/// Index `j >= 1` with `k = (3j^2 ± j)/2`, if `k` is a generalized pentagonal number.
///
/// Solved exactly in integers: `24k + 1` must be a square `s^2` with `s ≡ ±1 (mod 6)`.
pub fn pentagonal_index(k: u32) -> Option<u32> {
    if k == 0 {
        return None;
    }
    let d = 24 * u64::from(k) + 1;
    let s = d.isqrt();
    if s * s != d {
        return None;
    }
    // s = 6j - 1 for the minus branch, 6j + 1 for the plus branch.
    if (s + 1) % 6 == 0 {
        Some(((s + 1) / 6) as u32)
    } else if (s - 1) % 6 == 0 {
        Some(((s - 1) / 6) as u32)
    } else {
        None
    }
}

/// A declarative description of a set of partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionClass {
    min_element: u32,
    max_element: Option<u32>,
    max_multiplicity: Option<u32>,
    exact_parts: Option<u32>,
    max_parts: Option<u32>,
    required: Vec<u32>,
    combinator: Combinator,
    allowed: Option<ElementFilter>,
    distinct: bool,
}

impl Default for PartitionClass {
    fn default() -> Self {
        PartitionClass::all()
    }
}

impl PartitionClass {
    /// Every partition.
    pub fn all() -> Self {
        PartitionClass {
            min_element: 1,
            max_element: None,
            max_multiplicity: None,
            exact_parts: None,
            max_parts: None,
            required: Vec::new(),
            combinator: Combinator::All,
            allowed: None,
            distinct: false,
        }
    }

    pub fn builder() -> ClassBuilder {
        ClassBuilder { class: PartitionClass::all() }
    }

    /// Partitions with distinct elements.
    pub fn distinct() -> Self {
        PartitionClass { distinct: true, ..PartitionClass::all() }
    }

    pub fn exact_parts(m: u32) -> Self {
        PartitionClass { exact_parts: Some(m), ..PartitionClass::all() }
    }

    pub fn only(filter: ElementFilter) -> Self {
        PartitionClass { allowed: Some(filter), ..PartitionClass::all() }
    }

    pub fn is_all(&self) -> bool {
        *self == PartitionClass::all()
    }

    fn mult_cap(&self) -> Option<u32> {
        if self.distinct {
            Some(1)
        } else {
            self.max_multiplicity
        }
    }

    fn element_ok(&self, e: u32) -> bool {
        e >= self.min_element
            && self.max_element.is_none_or(|m| e <= m)
            && self.allowed.as_ref().is_none_or(|f| f.allows(e))
    }

    fn required_ok(&self, p: &Partition) -> bool {
        if self.required.is_empty() {
            return true;
        }
        match self.combinator {
            Combinator::All => self.required.iter().all(|&e| p.contains(e)),
            Combinator::Any => self.required.iter().any(|&e| p.contains(e)),
        }
    }

    /// Whether a partition belongs to the class (used to filter non-BRCP orders).
    pub fn admits(&self, p: &Partition) -> bool {
        let cap = self.mult_cap();
        p.iter().all(|(e, f)| self.element_ok(e) && cap.is_none_or(|c| f <= c))
            && self.exact_parts.is_none_or(|m| p.num_parts() == m)
            && self.max_parts.is_none_or(|m| p.num_parts() <= m)
            && self.required_ok(p)
    }
}

/// Builder for [`PartitionClass`]; [`ClassBuilder::build`] validates the combination.
#[derive(Clone, Debug)]
pub struct ClassBuilder {
    class: PartitionClass,
}

impl ClassBuilder {
    pub fn min_element(mut self, m: u32) -> Self {
        self.class.min_element = m;
        self
    }
    pub fn max_element(mut self, m: u32) -> Self {
        self.class.max_element = Some(m);
        self
    }
    pub fn max_multiplicity(mut self, m: u32) -> Self {
        self.class.max_multiplicity = Some(m);
        self
    }
    pub fn exact_parts(mut self, m: u32) -> Self {
        self.class.exact_parts = Some(m);
        self
    }
    pub fn max_parts(mut self, m: u32) -> Self {
        self.class.max_parts = Some(m);
        self
    }
    pub fn require(mut self, elements: &[u32], combinator: Combinator) -> Self {
        self.class.required = elements.to_vec();
        self.class.combinator = combinator;
        self
    }
    pub fn allowed(mut self, filter: ElementFilter) -> Self {
        self.class.allowed = Some(filter);
        self
    }
    pub fn distinct(mut self, yes: bool) -> Self {
        self.class.distinct = yes;
        self
    }

    pub fn build(self) -> Result<PartitionClass> {
        let c = self.class;
        if c.min_element == 0 {
            return Err(Error::InvalidArgument("min_element must be at least 1".into()));
        }
        if let Some(m) = c.max_element {
            if m < c.min_element {
                return Err(Error::InvalidArgument("min_element exceeds max_element".into()));
            }
        }
        if c.max_multiplicity == Some(0) {
            return Err(Error::InvalidArgument("max_multiplicity must be at least 1".into()));
        }
        if c.distinct && c.max_multiplicity.is_some_and(|m| m > 1) {
            return Err(Error::InvalidArgument("distinct class with max_multiplicity > 1".into()));
        }
        Ok(c)
    }
}

struct Walker<'a, F> {
    class: &'a PartitionClass,
    cap: Option<u32>,
    visitor: F,
    count: u64,
}

impl<F: FnMut(&Partition)> Walker<'_, F> {
    /// Upper bound on the parts still allowed after the current `d`.
    fn parts_left(&self, d: u32) -> Option<u32> {
        match (self.class.exact_parts, self.class.max_parts) {
            (Some(e), Some(m)) => Some(e.min(m).saturating_sub(d)),
            (Some(e), None) => Some(e.saturating_sub(d)),
            (None, Some(m)) => Some(m.saturating_sub(d)),
            (None, None) => None,
        }
    }

    /// Whether `rem` can still be split into parts `>= minq` within the part budget.
    fn feasible(&self, buf: &Partition, rem: u32, minq: u32) -> bool {
        let d = buf.num_parts();
        if let Some(left) = self.parts_left(d) {
            if left == 0 {
                return false;
            }
            if let Some(maxe) = self.class.max_element {
                if u64::from(rem) > u64::from(left) * u64::from(maxe) {
                    return false;
                }
            }
        }
        if let Some(e) = self.class.exact_parts {
            // The remaining e - d parts are all at least minq.
            if u64::from(rem) < u64::from(e - d) * u64::from(minq) {
                return false;
            }
        }
        true
    }

    fn node(&mut self, buf: &mut Partition, rem: u32, minq: u32) {
        if !self.feasible(buf, rem, minq) {
            return;
        }
        let d = buf.num_parts();
        let class = self.class;
        let leaf_ok = self.class.element_ok(rem)
            && self.cap.is_none_or(|c| buf.multiplicity(rem) < c)
            && class.exact_parts.is_none_or(|e| d + 1 == e)
            && class.max_parts.is_none_or(|m| d < m);
        if leaf_ok {
            buf.push(rem);
            if class.required_ok(buf) {
                (self.visitor)(buf);
                self.count += 1;
            }
            buf.pop();
        }
        let distinct_step = u32::from(self.cap == Some(1));
        let mut q = minq;
        loop {
            let child_min = q + distinct_step;
            if rem < q + child_min {
                break;
            }
            if class.max_element.is_some_and(|m| q > m) {
                break;
            }
            if self.class.element_ok(q) && self.cap.is_none_or(|c| buf.multiplicity(q) < c) {
                buf.push(q);
                self.node(buf, rem - q, child_min);
                buf.pop();
            }
            q += 1;
        }
    }
}

/// Visit the partitions of `k` in `class`, in the requested order.
///
/// In BRCP order, element bounds, multiplicity caps, part counts and the
/// allowed-element filter prune the tree; required elements are checked at
/// the leaves. The reference orders filter a full enumeration.
pub fn enumerate_class<F: FnMut(&Partition)>(k: u32, class: &PartitionClass, order: Order, mut visitor: F) -> u64 {
    match order {
        Order::Brcp => {
            let mut count = 0;
            for q in 0..crate::partitions::brcp_subtree_count(k) {
                count += enumerate_class_subtree(k, class, q, &mut visitor);
            }
            count
        }
        _ => {
            let mut count = 0;
            enumerate(k, order, |p| {
                if class.admits(p) {
                    visitor(p);
                    count += 1;
                }
            });
            count
        }
    }
}

/// The part of [`enumerate_class`] lying in first-level BRCP subtree `q`
/// (`0` is the single-part leaf; `q >= 1` have smallest part `q`).
pub fn enumerate_class_subtree<F: FnMut(&Partition)>(k: u32, class: &PartitionClass, q: u32, visitor: F) -> u64 {
    let mut buf = Partition::with_capacity(k);
    let mut w = Walker { class, cap: class.mult_cap(), visitor, count: 0 };
    if k == 0 {
        if q == 0 && class.admits(&buf) {
            (w.visitor)(&buf);
            return 1;
        }
        return 0;
    }
    if q == 0 {
        if class.admits(&Partition::from_parts(&[k]).expect("positive part")) {
            buf.push(k);
            (w.visitor)(&buf);
            return 1;
        }
        return 0;
    }
    let step = u32::from(w.cap == Some(1));
    if k < 2 * q + step || !class.element_ok(q) {
        return 0;
    }
    buf.push(q);
    w.node(&mut buf, k - q, q + step);
    w.count
}

/// Number of partitions of `k` in `class` (counted by pruned enumeration).
pub fn count_class(k: u32, class: &PartitionClass) -> u64 {
    enumerate_class(k, class, Order::Brcp, |_| {})
}

/// Largest number of parts a distinct partition of `k` can have: `[(sqrt(8k+1) - 1)/2]`.
pub fn max_distinct_parts(k: u32) -> u32 {
    let s = (8 * u64::from(k) + 1).isqrt();
    ((s - 1) / 2) as u32
}

/// Conjugate partition (transpose of the Ferrers diagram).
pub fn transpose(p: &Partition) -> Partition {
    let parts = p.parts();
    let largest = p.largest().unwrap_or(0);
    let mut conj = Vec::with_capacity(largest as usize);
    // Column j has as many dots as there are parts >= j; parts are ascending.
    let mut idx = 0usize;
    for j in 1..=largest {
        while idx < parts.len() && parts[idx] < j {
            idx += 1;
        }
        conj.push((parts.len() - idx) as u32);
    }
    conj.reverse();
    Partition::from_parts(&conj).expect("positive parts")
}

pub fn is_self_conjugate(p: &Partition) -> bool {
    transpose(p) == *p
}
