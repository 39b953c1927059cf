//! Reductions split over the first-level BRCP subtrees.
//!
//! Subtree `q` holds the partitions whose smallest part is `q` (subtree 0 is
//! the single-part leaf). Workers take subtrees from a shared counter; the
//! partial results are then combined in subtree order. The sequential path
//! (`threads <= 1`) uses the same grouping, so results agree bit for bit
//! whatever the thread count, floating-point rings included.

use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::mpsc;

use partmeth_core::algebra::Ring;
use partmeth_core::classes::{enumerate_class_subtree, PartitionClass};
use partmeth_core::operator::apply_subtree;
use partmeth_core::partitions::{brcp_subtree_count, Partition};
use partmeth_core::series::SeriesSpec;

/// Compute `f(q)` for every subtree index, returned in index order.
pub fn map_subtrees<T, F>(k: u32, threads: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u32) -> T + Sync,
{
    let n = brcp_subtree_count(k);
    if threads <= 1 || n <= 1 {
        return (0..n).map(&f).collect();
    }
    let next = AtomicU32::new(0);
    let mut slots: Vec<Option<T>> = (0..n).map(|_| None).collect();
    std::thread::scope(|s| {
        let (tx, rx) = mpsc::channel();
        for _ in 0..threads.min(n as usize) {
            let tx = tx.clone();
            let (next, f) = (&next, &f);
            s.spawn(move || loop {
                // Subtree 1 is by far the largest; handing out indices in
                // ascending order starts it first.
                let q = next.fetch_add(1, Ordering::Relaxed);
                if q >= n {
                    break;
                }
                if tx.send((q, f(q))).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        for (q, v) in rx {
            slots[q as usize] = Some(v);
        }
    });
    slots.into_iter().map(|v| v.expect("every subtree is computed")).collect()
}

/// `Σ weight(p)` over the partitions of `k` in `class`, by subtree reduction.
pub fn apply<R, F>(k: u32, class: &PartitionClass, zero: &R, weight: F, threads: usize) -> R
where
    R: Ring + Send + Sync,
    F: Fn(&Partition) -> R + Sync,
{
    let parts = map_subtrees(k, threads, |q| apply_subtree(k, class, q, zero, &weight));
    parts.iter().fold(zero.clone(), |acc, x| acc.add_ref(x))
}

/// Number of partitions of `k` in `class`, by subtree reduction.
pub fn count(k: u32, class: &PartitionClass, threads: usize) -> u64 {
    map_subtrees(k, threads, |q| enumerate_class_subtree(k, class, q, |_| {})).into_iter().sum()
}

/// `D_0, ..., D_kmax` of a series specification, each `D_k` by subtree reduction.
pub fn expand<R>(spec: &SeriesSpec<R>, threads: usize) -> Vec<R>
where
    R: Ring + Send + Sync,
{
    let d0 = spec.constant_term();
    let zero = d0.zero_like();
    let w = spec.weigher();
    let all = PartitionClass::all();
    let mut out = vec![d0];
    for k in 1..=spec.kmax() as u32 {
        out.push(apply(k, &all, &zero, |p| w.weigh(p), threads));
    }
    out
}

/// Visit every partition of `k` in `class` in BRCP order, with the per-subtree
/// work done on `threads` workers.
///
/// Each worker renders its subtree with `render`; the chunks are handed to
/// `sink` in subtree order, so the output matches a sequential walk. Unlike
/// the sequential walk, a whole subtree's rendering is held in memory until
/// its turn comes.
pub fn render_ordered<T, R, S>(k: u32, class: &PartitionClass, threads: usize, render: R, mut sink: S) -> u64
where
    T: Send,
    R: Fn(&Partition) -> T + Sync,
    S: FnMut(T),
{
    let n = brcp_subtree_count(k);
    let next = AtomicU32::new(0);
    let mut total = 0u64;
    std::thread::scope(|s| {
        let (tx, rx) = mpsc::channel::<(u32, Vec<T>)>();
        for _ in 0..threads.max(1).min(n as usize) {
            let tx = tx.clone();
            let (next, render) = (&next, &render);
            s.spawn(move || loop {
                let q = next.fetch_add(1, Ordering::Relaxed);
                if q >= n {
                    break;
                }
                let mut chunk = Vec::new();
                enumerate_class_subtree(k, class, q, |p| chunk.push(render(p)));
                if tx.send((q, chunk)).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        let mut pending: std::collections::BTreeMap<u32, Vec<T>> = Default::default();
        let mut want = 0u32;
        for (q, chunk) in rx {
            pending.insert(q, chunk);
            while let Some(chunk) = pending.remove(&want) {
                total += chunk.len() as u64;
                chunk.into_iter().for_each(&mut sink);
                want += 1;
            }
        }
    });
    total
}
