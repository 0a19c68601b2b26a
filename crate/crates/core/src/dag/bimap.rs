// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::hash::Hash;

use rustc_hash::FxHashMap;

/// A bijection between values and the dense keys `0, 1, 2, ...`.
///
/// Keys are handed out in insertion order, so the key side is a plain
/// vector and the value side a hash index.
#[derive(Clone)]
pub struct BiMap<T> {
    values: Vec<T>,
    keys: FxHashMap<T, usize>,
}

impl<T> Default for BiMap<T> {
    fn default() -> Self {
        BiMap {
            values: Vec::new(),
            keys: FxHashMap::default(),
        }
    }
}

impl<T: Eq + Hash + Clone> BiMap<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn lookup_key(&self, value: &T) -> Option<usize> {
        self.keys.get(value).copied()
    }

    /// Adds `value` under the next key and returns that key.
    ///
    /// The value must not already be present; callers check with
    /// [`lookup_key`](Self::lookup_key) first.
    pub fn insert(&mut self, value: T) -> usize {
        let key = self.values.len();
        let previous = self.keys.insert(value.clone(), key);
        debug_assert!(
            previous.is_none(),
            "BiMap::insert of a value already present"
        );
        self.values.push(value);
        key
    }
}

impl<T> BiMap<T> {
    /// # Panics
    ///
    /// Panics if `key` was never issued by this map.
    pub fn lookup_val(&self, key: usize) -> &T {
        match self.values.get(key) {
            Some(v) => v,
            None => panic!(
                "BiMap key {key} out of range ({} entries)",
                self.values.len()
            ),
        }
    }

    pub fn get(&self, key: usize) -> Option<&T> {
        self.values.get(key)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Associations in key order.
    pub fn iter(&self) -> impl ExactSizeIterator<Item = (usize, &T)> {
        self.values.iter().enumerate()
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }
}

impl<T: PartialEq> PartialEq for BiMap<T> {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values
    }
}

impl<T: Eq> Eq for BiMap<T> {}

/// `BiMap[(0,a),(1,b)]`
impl<T: fmt::Display> fmt::Display for BiMap<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("BiMap[")?;
        for (k, v) in self.iter() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "({k},{v})")?;
        }
        f.write_str("]")
    }
}

impl<T: fmt::Debug> fmt::Debug for BiMap<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.values.iter().enumerate())
            .finish()
    }
}
