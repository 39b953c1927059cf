//! Process-wide memo tables, safe to fill from several threads at once.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use partmeth_core::algebra::factorial;
use partmeth_core::partitions::partition_numbers;

/// A mutex-guarded map from keys to computed values.
///
/// The value is computed outside the lock; when two threads race on the same
/// key the first insertion wins and both return it.
pub struct Memo<K, V> {
    map: Mutex<HashMap<K, V>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub fn new() -> Self {
        Memo { map: Mutex::new(HashMap::new()) }
    }

    pub fn get_or_compute(&self, key: K, f: impl FnOnce(&K) -> V) -> V {
        if let Some(v) = self.lock().get(&key) {
            return v.clone();
        }
        let v = f(&key);
        self.lock().entry(key).or_insert(v).clone()
    }

    pub fn len(&self) -> usize {
        self.lock().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn lock(&self) -> std::sync::MutexGuard<'_, HashMap<K, V>> {
        // A panic elsewhere cannot leave a half-written entry, so poisoning is ignored.
        self.map.lock().unwrap_or_else(|e| e.into_inner())
    }
}

impl<K: Eq + Hash + Clone, V: Clone> Default for Memo<K, V> {
    fn default() -> Self {
        Memo::new()
    }
}

/// A growable prefix table `t[0..=n]`, extended in one step when a longer
/// prefix is requested.
struct Prefix {
    table: Mutex<Vec<BigInt>>,
    build: fn(usize) -> Vec<BigInt>,
}

impl Prefix {
    fn get(&self, n: usize) -> BigInt {
        let mut t = self.table.lock().unwrap_or_else(|e| e.into_inner());
        if t.len() <= n {
            *t = (self.build)((2 * n).max(64));
        }
        t[n].clone()
    }
}

fn prefix(cell: &'static OnceLock<Prefix>, build: fn(usize) -> Vec<BigInt>) -> &'static Prefix {
    cell.get_or_init(|| Prefix { table: Mutex::new(Vec::new()), build })
}

/// `p(k)` by the Euler recurrence, memoized.
pub fn partition_number(k: u32) -> BigInt {
    static CELL: OnceLock<Prefix> = OnceLock::new();
    prefix(&CELL, partition_numbers).get(k as usize)
}

/// `n!`, memoized.
pub fn factorial_cached(n: u64) -> BigInt {
    static CELL: OnceLock<Prefix> = OnceLock::new();
    prefix(&CELL, |m| (0..=m as u64).map(factorial).collect()).get(n as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn memo_concurrent() {
        let memo: Memo<u32, u64> = Memo::new();
        std::thread::scope(|s| {
            for _ in 0..4 {
                s.spawn(|| {
                    for k in 0..50u32 {
                        assert_eq!(memo.get_or_compute(k, |&k| u64::from(k) * 3), u64::from(k) * 3);
                    }
                });
            }
        });
        assert_eq!(memo.len(), 50);
    }

    #[test]
    fn tables() {
        assert_eq!(partition_number(100), BigInt::from(190_569_292u64));
        assert_eq!(partition_number(6), BigInt::from(11));
        assert_eq!(factorial_cached(10), BigInt::from(3_628_800));
        assert_eq!(factorial_cached(0), BigInt::from(1));
    }
}
