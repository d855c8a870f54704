use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest label a [`LabelSet`] can hold.
pub const MAX_LABEL: u32 = 63;

/// A subset of `{1, …, 63}` stored as a bitmask (bit `k - 1` for label `k`).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelSet(u64);

impl LabelSet {
    pub const EMPTY: LabelSet = LabelSet(0);

    /// Panics on labels outside `1..=63`; use [`LabelSet::try_from_labels`] for input data.
    pub fn new(labels: &[u32]) -> Self {
        Self::try_from_labels(labels.iter().copied()).expect("label out of range")
    }

    pub fn try_from_labels(labels: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut bits = 0u64;
        for k in labels {
            if k == 0 || k > MAX_LABEL {
                return Err(Error::LabelOutOfRange { set: String::new(), label: k, n: MAX_LABEL });
            }
            bits |= 1 << (k - 1);
        }
        Ok(LabelSet(bits))
    }

    pub const fn from_bits(bits: u64) -> Self {
        LabelSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{1, …, n}`.
    pub fn full(n: u32) -> Self {
        assert!(n <= MAX_LABEL);
        if n == 0 {
            LabelSet(0)
        } else {
            LabelSet(u64::MAX >> (64 - n))
        }
    }

    pub fn contains(self, k: u32) -> bool {
        (1..=MAX_LABEL).contains(&k) && self.0 & (1 << (k - 1)) != 0
    }

    pub fn insert(&mut self, k: u32) {
        assert!((1..=MAX_LABEL).contains(&k));
        self.0 |= 1 << (k - 1);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn max(self) -> Option<u32> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros())
    }

    pub fn union(self, o: LabelSet) -> LabelSet {
        LabelSet(self.0 | o.0)
    }

    pub fn intersection(self, o: LabelSet) -> LabelSet {
        LabelSet(self.0 & o.0)
    }

    pub fn difference(self, o: LabelSet) -> LabelSet {
        LabelSet(self.0 & !o.0)
    }

    /// `[n] ∖ self`.
    pub fn complement(self, n: u32) -> LabelSet {
        LabelSet::full(n).difference(self)
    }

    pub fn is_disjoint(self, o: LabelSet) -> bool {
        self.0 & o.0 == 0
    }

    pub fn is_subset(self, o: LabelSet) -> bool {
        self.0 & !o.0 == 0
    }

    /// Labels in increasing order.
    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let k = bits.trailing_zeros();
                bits &= bits - 1;
                Some(k + 1)
            }
        })
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// Every subset of `self`, in increasing order of bitmask.
    pub fn subsets(self) -> impl Iterator<Item = LabelSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(LabelSet(cur))
        })
    }

    /// The `k`-element subsets of `self` in lexicographic order of their
    /// sorted label lists.
    pub fn subsets_of_size(self, k: usize) -> Vec<LabelSet> {
        fn rec(items: &[u32], k: usize, start: usize, cur: &mut Vec<u32>, out: &mut Vec<LabelSet>) {
            if cur.len() == k {
                out.push(LabelSet::new(cur));
                return;
            }
            for idx in start..items.len() {
                if items.len() - idx < k - cur.len() {
                    break;
                }
                cur.push(items[idx]);
                rec(items, k, idx + 1, cur, out);
                cur.pop();
            }
        }
        let items = self.to_vec();
        let mut out = Vec::new();
        if k <= items.len() {
            rec(&items, k, 0, &mut Vec::new(), &mut out);
        }
        out
    }

    /// Every label moved up by `by`; used by the shifted-placement negative control.
    pub fn shifted(self, by: u32) -> LabelSet {
        LabelSet(self.0 << by)
    }
}

impl fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, k) in self.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<u32> for LabelSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut s = LabelSet::EMPTY;
        for k in iter {
            s.insert(k);
        }
        s
    }
}

impl Serialize for LabelSet {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for LabelSet {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let labels = Vec::<u32>::deserialize(de)?;
        LabelSet::try_from_labels(labels).map_err(serde::de::Error::custom)
    }
}
