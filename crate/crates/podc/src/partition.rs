//! Canonical integer partitions, restricted-family membership, and exhaustive
//! enumeration.
//!
//! A [`Partition`] is stored as its non-increasing part sequence; every
//! constructor canonicalizes, so equality and the family predicates stay
//! trivial. Six restricted families are built in, selected by [`FamilyTag`]:
//!
//! - `pod`    — odd parts are pairwise distinct;
//! - `podgt2` — odd parts distinct and every part exceeds 2;
//! - `o1`     — odd parts distinct and the largest part is even;
//! - `o2`     — `o1` members whose largest part appears at least twice;
//! - `o3`     — `o1` members whose largest part appears exactly once;
//! - `c`      — no part is congruent to 2 mod 4.
//!
//! The empty partition of 0 belongs to every family except `o2`. The
//! convention is forced by the generating functions: every family series has
//! constant term 1 except the `o2` series, whose constant term is 0. In
//! particular "the largest part is even" is read as vacuously true for the
//! empty partition.
//!
//! Enumeration is lexicographically decreasing on the part sequence, so
//! outputs are reproducible byte for byte. Enumerators refuse `n` above a
//! bound ([`DEFAULT_ENUM_BOUND`] unless overridden) instead of silently
//! truncating.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::de::{Deserializer, Error as DeError};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Enumerators refuse any `n` above this unless an explicit bound is given.
pub const DEFAULT_ENUM_BOUND: u64 = 60;

/// Parse guard: exponent notation could otherwise request absurd part counts.
const MAX_PARSED_PARTS: u64 = 1 << 20;

/// A partition of a nonnegative integer: a non-increasing sequence of
/// positive parts. The empty sequence is the unique partition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Canonicalizes `values` into a partition: sorts non-increasing and
    /// rejects any part that is zero. Idempotent on already-canonical input.
    pub fn new(values: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = values.into();
        if let Some(&zero) = parts.iter().find(|&&v| v == 0) {
            return Err(Error::NonPositivePart(i64::from(zero)));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Internal constructor for parts already known positive.
    pub(crate) fn from_positive_parts(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&v| v > 0));
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Internal constructor for parts already sorted non-increasing.
    pub(crate) fn from_sorted_parts(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&v| v > 0));
        Partition { parts }
    }

    /// The parts in non-increasing order.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The number being partitioned (sum of the parts).
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&v| u64::from(v)).sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The largest part, if any.
    pub fn largest(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    /// m(part): how many times `part` occurs; 0 when absent.
    pub fn multiplicity(&self, part: u32) -> usize {
        self.parts.iter().filter(|&&v| v == part).count()
    }

    /// The multiplicity map part -> count. Agrees with the sequence view.
    pub fn multiplicities(&self) -> BTreeMap<u32, usize> {
        let mut map = BTreeMap::new();
        for &v in &self.parts {
            *map.entry(v).or_insert(0) += 1;
        }
        map
    }

    /// True if no odd part occurs more than once.
    pub fn has_distinct_odd_parts(&self) -> bool {
        self.parts
            .windows(2)
            .all(|w| !(w[0] == w[1] && w[0] % 2 == 1))
    }

    /// Membership test for `tag`, see [`is_in_family`].
    pub fn in_family(&self, tag: FamilyTag) -> bool {
        is_in_family(self, tag)
    }
}

impl fmt::Display for Partition {
    /// Comma-separated decreasing parts; the empty partition prints as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        for (i, v) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts comma-separated parts (`11,8,5,5,5,4,3`) and exponent
    /// notation (`12^2,11^3,8,3`), which is normalized on parse. The empty
    /// string and `-` denote the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "-" {
            return Ok(Partition::empty());
        }
        let err = |reason: &str| Error::PartitionParse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut parts: Vec<u32> = Vec::new();
        for item in trimmed.split(',') {
            let item = item.trim();
            if item.is_empty() {
                return Err(err("empty item between commas"));
            }
            let (base, count) = match item.split_once('^') {
                Some((b, e)) => {
                    let count: u64 = e
                        .trim()
                        .parse()
                        .map_err(|_| err(&format!("bad exponent in {item:?}")))?;
                    if count == 0 {
                        return Err(err(&format!("exponent must be >= 1 in {item:?}")));
                    }
                    (b.trim(), count)
                }
                None => (item, 1),
            };
            let value: u32 = base
                .parse()
                .map_err(|_| err(&format!("bad part {base:?}")))?;
            if value == 0 {
                return Err(err("parts must be positive"));
            }
            if parts.len() as u64 + count > MAX_PARSED_PARTS {
                return Err(err("too many parts"));
            }
            parts.extend(std::iter::repeat_n(value, count as usize));
        }
        Ok(Partition::from_positive_parts(parts))
    }
}

impl Serialize for Partition {
    /// JSON form: array of parts, e.g. `[11,8,5,5,5,4,3]`.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.parts.len()))?;
        for v in &self.parts {
            seq.serialize_element(v)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}

/// Selector for the six restricted families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyTag {
    Pod,
    #[serde(rename = "podgt2")]
    PodGt2,
    O1,
    O2,
    O3,
    C,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 6] = [
        FamilyTag::Pod,
        FamilyTag::PodGt2,
        FamilyTag::O1,
        FamilyTag::O2,
        FamilyTag::O3,
        FamilyTag::C,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::Pod => "pod",
            FamilyTag::PodGt2 => "podgt2",
            FamilyTag::O1 => "o1",
            FamilyTag::O2 => "o2",
            FamilyTag::O3 => "o3",
            FamilyTag::C => "c",
        }
    }

    /// Uppercase set name, as in `O1(40)`.
    pub fn set_name(self) -> &'static str {
        match self {
            FamilyTag::Pod => "Pod",
            FamilyTag::PodGt2 => "Pod>2",
            FamilyTag::O1 => "O1",
            FamilyTag::O2 => "O2",
            FamilyTag::O3 => "O3",
            FamilyTag::C => "C",
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pod" => Ok(FamilyTag::Pod),
            "podgt2" | "pod>2" | "pod_gt2" => Ok(FamilyTag::PodGt2),
            "o1" => Ok(FamilyTag::O1),
            "o2" => Ok(FamilyTag::O2),
            "o3" => Ok(FamilyTag::O3),
            "c" => Ok(FamilyTag::C),
            other => Err(Error::PartitionParse {
                input: other.to_string(),
                reason: "unknown family; expected pod, podgt2, o1, o2, o3 or c".to_string(),
            }),
        }
    }
}

/// Exact membership predicate for `tag`.
pub fn is_in_family(p: &Partition, tag: FamilyTag) -> bool {
    match tag {
        FamilyTag::Pod => p.has_distinct_odd_parts(),
        FamilyTag::PodGt2 => p.has_distinct_odd_parts() && p.parts().iter().all(|&v| v > 2),
        FamilyTag::O1 => {
            p.has_distinct_odd_parts() && p.largest().is_none_or(|top| top % 2 == 0)
        }
        FamilyTag::O2 => {
            is_in_family(p, FamilyTag::O1)
                && p.largest().is_some_and(|top| p.multiplicity(top) >= 2)
        }
        FamilyTag::O3 => {
            is_in_family(p, FamilyTag::O1)
                && p.largest().is_none_or(|top| p.multiplicity(top) == 1)
        }
        FamilyTag::C => p.parts().iter().all(|&v| v % 4 != 2),
    }
}

/// Human-readable explanation of why `p` fails the `tag` predicate, if it does.
pub fn family_violation(p: &Partition, tag: FamilyTag) -> Option<String> {
    if is_in_family(p, tag) {
        return None;
    }
    let repeated_odd = p
        .parts()
        .windows(2)
        .find(|w| w[0] == w[1] && w[0] % 2 == 1)
        .map(|w| w[0]);
    let reason = match tag {
        FamilyTag::Pod => format!("odd part {} is repeated", repeated_odd.unwrap_or(0)),
        FamilyTag::PodGt2 => match p.parts().iter().find(|&&v| v <= 2) {
            Some(&v) => format!("part {v} is not greater than 2"),
            None => format!("odd part {} is repeated", repeated_odd.unwrap_or(0)),
        },
        FamilyTag::O1 | FamilyTag::O2 | FamilyTag::O3 => {
            let top = p.largest().unwrap_or(0);
            if p.largest().is_some_and(|t| t % 2 == 1) {
                format!("largest part {top} is odd")
            } else if let Some(v) = repeated_odd {
                format!("odd part {v} is repeated")
            } else if tag == FamilyTag::O2 {
                format!("largest part {top} appears only {} time(s)", p.multiplicity(top))
            } else {
                format!("largest part {top} appears {} times", p.multiplicity(top))
            }
        }
        FamilyTag::C => {
            let bad = p.parts().iter().find(|&&v| v % 4 == 2).copied().unwrap_or(0);
            format!("part {bad} \u{2261} 2 (mod 4)")
        }
    };
    Some(reason)
}

fn check_bound(n: u64, bound: u64) -> Result<()> {
    if n > bound {
        Err(Error::EnumerationBound { n, bound })
    } else {
        Ok(())
    }
}

/// Iterator over all partitions of `n` in lexicographically decreasing order.
#[derive(Debug)]
pub struct Partitions {
    current: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.take()?;
        let result = Partition::from_sorted_parts(parts.clone());
        // Successor: decrement the rightmost part exceeding 1, then refill the
        // tail greedily with chunks no larger than the decremented value.
        if let Some(i) = parts.iter().rposition(|&v| v > 1) {
            let mut next = parts;
            let freed = (next.len() - i - 1) as u64 + 1;
            let cap = next[i] - 1;
            next.truncate(i);
            next.push(cap);
            let mut rest = freed;
            while rest > 0 {
                let take = rest.min(u64::from(cap)) as u32;
                next.push(take);
                rest -= u64::from(take);
            }
            self.current = Some(next);
        }
        Some(result)
    }
}

/// All partitions of `n`, under the default enumeration bound.
pub fn partitions_of(n: u64) -> Result<Partitions> {
    partitions_of_bounded(n, DEFAULT_ENUM_BOUND)
}

/// All partitions of `n`; refuses `n > bound`.
pub fn partitions_of_bounded(n: u64, bound: u64) -> Result<Partitions> {
    check_bound(n, bound)?;
    let first = if n == 0 { Vec::new() } else { vec![n as u32] };
    Ok(Partitions {
        current: Some(first),
    })
}

/// Iterator over the members of one family at level `n`, in the same
/// lexicographically decreasing order as [`Partitions`]. Generated directly
/// by a pruned search rather than by filtering the full stream; the two
/// routes are compared in tests.
pub struct FamilyPartitions {
    tag: FamilyTag,
    prefix: Vec<u32>,
    rem: u64,
    cursor: u32,
    started: bool,
    done: bool,
}

impl FamilyPartitions {
    /// May the next chosen part be `v`, given the current prefix?
    fn allowed(&self, v: u32) -> bool {
        let odd = v % 2 == 1;
        let dup_odd = odd && self.prefix.last() == Some(&v);
        match self.tag {
            FamilyTag::Pod => !dup_odd,
            FamilyTag::PodGt2 => v > 2 && !dup_odd,
            FamilyTag::C => v % 4 != 2,
            FamilyTag::O1 => {
                if self.prefix.is_empty() {
                    !odd
                } else {
                    !dup_odd
                }
            }
            FamilyTag::O2 => match self.prefix.len() {
                0 => !odd,
                // The largest part must repeat, so the second copy is forced.
                1 => v == self.prefix[0],
                _ => !dup_odd,
            },
            FamilyTag::O3 => match self.prefix.len() {
                0 => !odd,
                // The largest part must stay unique.
                1 => v < self.prefix[0],
                _ => !dup_odd,
            },
        }
    }

    fn emit_ok(&self) -> bool {
        match self.tag {
            FamilyTag::O2 => self.prefix.len() >= 2,
            _ => true,
        }
    }
}

impl Iterator for FamilyPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.rem == 0 {
                self.done = true;
                return if self.emit_ok() {
                    Some(Partition::empty())
                } else {
                    None
                };
            }
        }
        loop {
            let mut v = self.cursor.min(self.rem.min(u64::from(u32::MAX)) as u32);
            while v >= 1 && !self.allowed(v) {
                v -= 1;
            }
            if v >= 1 {
                self.prefix.push(v);
                self.rem -= u64::from(v);
                if self.rem == 0 {
                    let emit = self.emit_ok();
                    let snapshot = self.prefix.clone();
                    let popped = self.prefix.pop().expect("just pushed");
                    self.rem += u64::from(popped);
                    self.cursor = popped - 1;
                    if emit {
                        return Some(Partition::from_sorted_parts(snapshot));
                    }
                } else {
                    self.cursor = v;
                }
            } else {
                match self.prefix.pop() {
                    None => {
                        self.done = true;
                        return None;
                    }
                    Some(u) => {
                        self.rem += u64::from(u);
                        self.cursor = u - 1;
                    }
                }
            }
        }
    }
}

/// The members of `tag` at level `n`, under the default bound.
pub fn family_partitions(n: u64, tag: FamilyTag) -> Result<FamilyPartitions> {
    family_partitions_bounded(n, tag, DEFAULT_ENUM_BOUND)
}

/// The members of `tag` at level `n`; refuses `n > bound`.
pub fn family_partitions_bounded(n: u64, tag: FamilyTag, bound: u64) -> Result<FamilyPartitions> {
    check_bound(n, bound)?;
    Ok(FamilyPartitions {
        tag,
        prefix: Vec::new(),
        rem: n,
        cursor: n.min(u64::from(u32::MAX)) as u32,
        started: false,
        done: false,
    })
}

/// |family(n)| by exhaustive enumeration, under the default bound.
pub fn count_family(n: u64, tag: FamilyTag) -> Result<BigUint> {
    count_family_bounded(n, tag, DEFAULT_ENUM_BOUND)
}

/// |family(n)| by exhaustive enumeration; refuses `n > bound`.
pub fn count_family_bounded(n: u64, tag: FamilyTag, bound: u64) -> Result<BigUint> {
    let count = family_partitions_bounded(n, tag, bound)?.count() as u64;
    Ok(BigUint::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn canonicalize_sorts_and_is_idempotent() {
        let a = Partition::new(vec![2, 5, 5, 3]).unwrap();
        assert_eq!(a.parts(), &[5, 5, 3, 2]);
        let again = Partition::new(a.parts().to_vec()).unwrap();
        assert_eq!(again, a);
        let b = Partition::new(vec![4, 4, 3, 3, 2]).unwrap();
        assert_eq!(b.parts(), &[4, 4, 3, 3, 2]);
    }

    #[test]
    fn empty_partition_is_the_partition_of_zero() {
        let e = Partition::new(Vec::new()).unwrap();
        assert!(e.is_empty());
        assert_eq!(e.size(), 0);
        assert_eq!(e, Partition::empty());
    }

    #[test]
    fn rejects_zero_parts() {
        assert!(matches!(
            Partition::new(vec![3, 0, 1]),
            Err(Error::NonPositivePart(0))
        ));
    }

    #[test]
    fn multiplicity_counts_occurrences() {
        let q = p("5,5,2");
        assert_eq!(q.multiplicity(5), 2);
        assert_eq!(q.multiplicity(7), 0);
        let t = p("12,12,11,11,11,8,3");
        assert_eq!(t.multiplicity(11), 3);
        assert_eq!(t.multiplicities().get(&12), Some(&2));
    }

    #[test]
    fn parse_exponent_notation() {
        assert_eq!(p("5^3").parts(), &[5, 5, 5]);
        assert_eq!(p("12^2,11^3,8,3").parts(), &[12, 12, 11, 11, 11, 8, 3]);
        assert_eq!(p(" 5 , 4 ").parts(), &[5, 4]);
        assert_eq!(p(""), Partition::empty());
        assert_eq!(p("-"), Partition::empty());
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!("abc".parse::<Partition>().is_err());
        assert!("0".parse::<Partition>().is_err());
        assert!("-3".parse::<Partition>().is_err());
        assert!("5^0".parse::<Partition>().is_err());
        assert!("5,,3".parse::<Partition>().is_err());
    }

    #[test]
    fn display_roundtrip() {
        for s in ["11,8,5,5,5,4,3", "4", "-"] {
            let q = p(s);
            assert_eq!(q.to_string(), s);
            assert_eq!(q.to_string().parse::<Partition>().unwrap(), q);
        }
    }

    #[test]
    fn serde_json_is_an_integer_array() {
        let q = p("5,5,2");
        assert_eq!(serde_json::to_string(&q).unwrap(), "[5,5,2]");
        let back: Partition = serde_json::from_str("[2,5,5]").unwrap();
        assert_eq!(back, q);
        assert!(serde_json::from_str::<Partition>("[0]").is_err());
    }

    #[test]
    fn family_membership_examples() {
        // (4,3,1): distinct odd parts and an even largest part.
        let q = p("4,3,1");
        assert!(q.in_family(FamilyTag::Pod));
        assert!(q.in_family(FamilyTag::O1));
        assert!(!q.in_family(FamilyTag::O2));
        assert!(q.in_family(FamilyTag::O3));

        assert!(p("11,8,5,5,5,4,3").in_family(FamilyTag::C));
        assert!(p("10,10,8,5,4,3").in_family(FamilyTag::O1));
        assert!(!p("5,3,1").in_family(FamilyTag::O1)); // largest part odd
        assert!(!p("4,1,1").in_family(FamilyTag::O1)); // repeated odd part
        assert!(!p("2,2").in_family(FamilyTag::C));
    }

    #[test]
    fn empty_partition_conventions() {
        let e = Partition::empty();
        for tag in [
            FamilyTag::Pod,
            FamilyTag::PodGt2,
            FamilyTag::O1,
            FamilyTag::O3,
            FamilyTag::C,
        ] {
            assert!(e.in_family(tag), "empty should be in {tag}");
        }
        assert!(!e.in_family(FamilyTag::O2));
    }

    #[test]
    fn family_violation_messages() {
        assert_eq!(
            family_violation(&p("2,2"), FamilyTag::C).unwrap(),
            "part 2 \u{2261} 2 (mod 4)"
        );
        assert_eq!(
            family_violation(&p("5,3,1"), FamilyTag::O1).unwrap(),
            "largest part 5 is odd"
        );
        assert!(family_violation(&p("4,3,1"), FamilyTag::O1).is_none());
    }

    #[test]
    fn enumerate_zero_and_four() {
        let all: Vec<Partition> = partitions_of(0).unwrap().collect();
        assert_eq!(all, vec![Partition::empty()]);

        let four: Vec<String> = partitions_of(4).unwrap().map(|q| q.to_string()).collect();
        assert_eq!(four, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
    }

    #[test]
    fn enumerate_counts_match_partition_numbers() {
        // p(0..10) = 1,1,2,3,5,7,11,15,22,30,42
        let expected = [1usize, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(partitions_of(n as u64).unwrap().count(), want, "p({n})");
        }
    }

    #[test]
    fn enumeration_is_lex_decreasing_without_duplicates() {
        for n in 0..=12u64 {
            let all: Vec<Partition> = partitions_of(n).unwrap().collect();
            for w in all.windows(2) {
                assert!(w[0] > w[1], "order violated at n={n}");
            }
            for q in &all {
                assert_eq!(q.size(), n);
            }
        }
    }

    #[test]
    fn enumeration_bound_is_refused_not_truncated() {
        let err = partitions_of(DEFAULT_ENUM_BOUND + 1).unwrap_err();
        assert!(matches!(err, Error::EnumerationBound { n: 61, bound: 60 }));
        assert!(partitions_of_bounded(61, 61).is_ok());
    }

    #[test]
    fn family_enumeration_small_cases() {
        let pods: Vec<String> = family_partitions(4, FamilyTag::Pod)
            .unwrap()
            .map(|q| q.to_string())
            .collect();
        assert_eq!(pods, ["4", "3,1", "2,2"]);

        let cs: Vec<String> = family_partitions(4, FamilyTag::C)
            .unwrap()
            .map(|q| q.to_string())
            .collect();
        assert_eq!(cs, ["4", "3,1", "1,1,1,1"]);

        let gt2: Vec<String> = family_partitions(5, FamilyTag::PodGt2)
            .unwrap()
            .map(|q| q.to_string())
            .collect();
        assert_eq!(gt2, ["5"]);
    }

    #[test]
    fn family_enumeration_equals_filtering() {
        for n in 0..=16u64 {
            let full: Vec<Partition> = partitions_of(n).unwrap().collect();
            for tag in FamilyTag::ALL {
                let direct: Vec<Partition> = family_partitions(n, tag).unwrap().collect();
                let filtered: Vec<Partition> = full
                    .iter()
                    .filter(|q| q.in_family(tag))
                    .cloned()
                    .collect();
                assert_eq!(direct, filtered, "family {tag} at n={n}");
            }
        }
    }

    #[test]
    fn counts_match_hand_enumeration() {
        let count = |n: u64, tag| count_family(n, tag).unwrap();
        // pod(0..5) = 1,1,1,2,3,4
        for (n, want) in [1u32, 1, 1, 2, 3, 4].into_iter().enumerate() {
            assert_eq!(count(n as u64, FamilyTag::Pod), BigUint::from(want));
        }
        // o1(0..5) = 1,0,1,1,2,2
        for (n, want) in [1u32, 0, 1, 1, 2, 2].into_iter().enumerate() {
            assert_eq!(count(n as u64, FamilyTag::O1), BigUint::from(want));
        }
        // o2(0..6) = 0,0,0,0,1,1,1
        for (n, want) in [0u32, 0, 0, 0, 1, 1, 1].into_iter().enumerate() {
            assert_eq!(count(n as u64, FamilyTag::O2), BigUint::from(want));
        }
        // o3(0..6) = 1,0,1,1,1,1,2
        for (n, want) in [1u32, 0, 1, 1, 1, 1, 2].into_iter().enumerate() {
            assert_eq!(count(n as u64, FamilyTag::O3), BigUint::from(want));
        }
        assert_eq!(count(4, FamilyTag::C), BigUint::from(3u32));
        assert_eq!(count(5, FamilyTag::C), BigUint::from(4u32));
        assert_eq!(count(5, FamilyTag::Pod), BigUint::from(4u32));
    }

    #[test]
    fn o1_splits_into_o2_and_o3() {
        for n in 0..=20u64 {
            let o1: Vec<Partition> = family_partitions(n, FamilyTag::O1).unwrap().collect();
            let o2: Vec<Partition> = family_partitions(n, FamilyTag::O2).unwrap().collect();
            let o3: Vec<Partition> = family_partitions(n, FamilyTag::O3).unwrap().collect();
            assert_eq!(o1.len(), o2.len() + o3.len(), "n={n}");
            for q in &o2 {
                assert!(o1.contains(q));
                assert!(!o3.contains(q));
            }
            for q in &o3 {
                assert!(o1.contains(q));
            }
            // Subset relations of the remaining families.
            let pods: Vec<Partition> = family_partitions(n, FamilyTag::Pod).unwrap().collect();
            for q in family_partitions(n, FamilyTag::PodGt2).unwrap() {
                assert!(pods.contains(&q));
            }
        }
    }
}
