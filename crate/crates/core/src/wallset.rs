// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Sorted sparse sets of hyperplane indices.
//!
//! A vertex is stored as the set of walls separating it from the chart's
//! reference vertex, so coordinates stay sparse on balls around that vertex.

use std::cmp::Ordering;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WallSet(Vec<u32>);

impl WallSet {
    pub fn new() -> Self {
        WallSet(Vec::new())
    }

    /// Builds a set from arbitrary indices; sorts and dedups.
    pub fn from_unsorted(mut v: Vec<u32>) -> Self {
        v.sort_unstable();
        v.dedup();
        WallSet(v)
    }

    /// Caller guarantees strictly increasing input.
    pub fn from_sorted(v: Vec<u32>) -> Self {
        debug_assert!(v.windows(2).all(|p| p[0] < p[1]));
        WallSet(v)
    }

    pub fn singleton(w: u32) -> Self {
        WallSet(vec![w])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&w| w as usize)
    }

    pub fn contains(&self, w: usize) -> bool {
        self.0.binary_search(&(w as u32)).is_ok()
    }

    pub fn insert(&mut self, w: usize) {
        if let Err(pos) = self.0.binary_search(&(w as u32)) {
            self.0.insert(pos, w as u32);
        }
    }

    pub fn remove(&mut self, w: usize) {
        if let Ok(pos) = self.0.binary_search(&(w as u32)) {
            self.0.remove(pos);
        }
    }

    /// `self ⊕ {w}`
    pub fn toggled(&self, w: usize) -> WallSet {
        let mut out = self.clone();
        match out.0.binary_search(&(w as u32)) {
            Ok(pos) => {
                out.0.remove(pos);
            }
            Err(pos) => out.0.insert(pos, w as u32),
        }
        out
    }

    pub fn sym_diff(&self, other: &WallSet) -> WallSet {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        WallSet(out)
    }

    pub fn sym_diff_len(&self, other: &WallSet) -> usize {
        self.len() + other.len() - 2 * self.intersection_len(other)
    }

    pub fn intersection(&self, other: &WallSet) -> WallSet {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        WallSet(out)
    }

    pub fn intersection_len(&self, other: &WallSet) -> usize {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }

    pub fn union(&self, other: &WallSet) -> WallSet {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        WallSet(out)
    }

    pub fn difference(&self, other: &WallSet) -> WallSet {
        WallSet(self.0.iter().copied().filter(|w| other.0.binary_search(w).is_err()).collect())
    }

    pub fn is_subset(&self, other: &WallSet) -> bool {
        self.intersection_len(other) == self.len()
    }

    pub fn is_disjoint(&self, other: &WallSet) -> bool {
        self.intersection_len(other) == 0
    }

    /// Elements lying in at least two of the three sets.
    pub fn majority(a: &WallSet, b: &WallSet, c: &WallSet) -> WallSet {
        let ab = a.intersection(b);
        let bc = b.intersection(c);
        let ca = c.intersection(a);
        ab.union(&bc).union(&ca)
    }
}

impl FromIterator<usize> for WallSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        WallSet::from_unsorted(iter.into_iter().map(|w| w as u32).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(v: &[u32]) -> WallSet {
        WallSet::from_unsorted(v.to_vec())
    }

    #[test]
    fn majority_of_three() {
        let m = WallSet::majority(&set(&[1, 2]), &set(&[2, 3]), &set(&[3, 4]));
        assert_eq!(m, set(&[2, 3]));
    }

    proptest! {
        #[test]
        fn sym_diff_matches_naive(a in proptest::collection::vec(0u32..40, 0..20),
                                  b in proptest::collection::vec(0u32..40, 0..20)) {
            let (x, y) = (set(&a), set(&b));
            let naive: WallSet = (0..40usize).filter(|&w| x.contains(w) != y.contains(w)).collect();
            prop_assert_eq!(x.sym_diff(&y), naive.clone());
            prop_assert_eq!(x.sym_diff_len(&y), naive.len());
            prop_assert_eq!(x.union(&y).len() + x.intersection(&y).len(), x.len() + y.len());
            prop_assert_eq!(x.difference(&y).union(&x.intersection(&y)), x);
        }
    }
}
