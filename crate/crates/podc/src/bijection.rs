//! Executable combinatorial maps between the `c` family and the `o1`/`o3`
//! families, with full audit records.
//!
//! Building blocks:
//!
//! - [`multiset_union`]: the partition whose multiplicities are the sums of
//!   the operands'.
//! - [`phi`]: merges equal odd parts pairwise into even parts (each pair
//!   `a, a` becomes `2a`), defined on partitions whose odd parts all have
//!   even multiplicity. [`phi_inverse`] splits every part congruent to
//!   2 mod 4 back into two equal odd halves.
//! - [`split_alpha_beta`]: writes a partition as `alpha ∪ beta` where `alpha`
//!   has distinct odd parts and `beta` collects the leftover even-multiplicity
//!   odd runs. For an odd part of multiplicity m, `m mod 2` copies go to
//!   `alpha` and the rest to `beta`; even parts all go to `alpha`. Routing the
//!   even parts to `alpha` makes `phi_inverse(phi(beta)) = beta` exact.
//!
//! On top of these sit two case-analysis maps. The first sends members of
//! `c(n)` to `o1(n) ∪ o1(n-1)` through seven cases keyed on the parity and
//! multiplicity of the largest part and the size of the largest repeated odd
//! part; the second sends `c(n)` to `o3(n+2) ∪ o3(n-1)` through eleven cases.
//! Each case performs a small surgery on the largest parts, splits, merges
//! the paired odd parts, and reunites — the audit trail of every step is
//! returned as a [`MappingRecord`]. The backward maps undo the surgeries and
//! split the 2-mod-4 parts.
//!
//! The forward cases are implemented as independent predicates
//! ([`case_predicate`]) so that totality and pairwise exclusivity of the
//! dispatch can be audited directly, not just assumed from an if-else chain.
//!
//! Note: the backward direction uses different largest-part arithmetic than
//! the forward direction (`+1` where the forward subtracts 1, `-2` where the
//! forward adds 2); the four surgeries are distinct named steps here, not one
//! parameterized map.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{family_violation, FamilyTag, Partition};

/// The two case-analysis theorems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    T31,
    T32,
}

impl Theorem {
    pub fn name(self) -> &'static str {
        match self {
            Theorem::T31 => "3.1",
            Theorem::T32 => "3.2",
        }
    }

    /// Number of forward cases.
    pub fn case_count(self) -> u8 {
        match self {
            Theorem::T31 => 7,
            Theorem::T32 => 11,
        }
    }

    /// The map is defined for n strictly above this.
    pub fn min_exclusive(self) -> u64 {
        match self {
            Theorem::T31 => 1,
            Theorem::T32 => 2,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

/// Which case of which theorem produced a mapping. Forward cases are numbered
/// 1..=7 (first theorem) and 1..=11 (second); the converse directions carry
/// labels B1 and B2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CaseLabel {
    pub theorem: Theorem,
    pub case: Case,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Case {
    Forward(u8),
    Converse(u8),
}

impl CaseLabel {
    pub fn forward(theorem: Theorem, number: u8) -> Self {
        CaseLabel {
            theorem,
            case: Case::Forward(number),
        }
    }

    pub fn converse(theorem: Theorem, number: u8) -> Self {
        CaseLabel {
            theorem,
            case: Case::Converse(number),
        }
    }

    /// Forward case number, if forward.
    pub fn forward_number(&self) -> Option<u8> {
        match self.case {
            Case::Forward(k) => Some(k),
            Case::Converse(_) => None,
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.case {
            Case::Forward(k) => write!(f, "{} CASE {k}", self.theorem),
            Case::Converse(k) => write!(f, "{} CONVERSE CASE {k}", self.theorem),
        }
    }
}

impl Serialize for CaseLabel {
    /// JSON form: `{"theorem":"3.1","number":"7"}` (converse cases: `"B1"`).
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CaseLabel", 2)?;
        s.serialize_field("theorem", self.theorem.name())?;
        let number = match self.case {
            Case::Forward(k) => k.to_string(),
            Case::Converse(k) => format!("B{k}"),
        };
        s.serialize_field("number", &number)?;
        s.end()
    }
}

/// A target level set, e.g. `O1(40)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Target {
    pub family: FamilyTag,
    pub size: u64,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family.set_name(), self.size)
    }
}

impl Serialize for Target {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Full audit of one forward mapping: the input, the case taken, the
/// intermediate partition when the case performs a surgery, the distinct-odd
/// component (alpha in the first theorem, gamma in the second), the paired
/// odd component beta with its merge, and the verified output with its
/// target level set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MappingRecord {
    pub input: Partition,
    pub case: CaseLabel,
    pub mu: Option<Partition>,
    pub alpha: Partition,
    pub beta: Partition,
    pub phi_beta: Partition,
    pub output: Partition,
    pub target: Target,
}

impl fmt::Display for MappingRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "input ({}) via {} -> output ({}) in {}",
            self.input, self.case, self.output, self.target
        )
    }
}

/// Multiset union: multiplicities add.
pub fn multiset_union(a: &Partition, b: &Partition) -> Partition {
    let mut parts = Vec::with_capacity(a.len() + b.len());
    parts.extend_from_slice(a.parts());
    parts.extend_from_slice(b.parts());
    Partition::from_positive_parts(parts)
}

/// Merges equal odd parts two by two: each pair `a, a` with `a` odd becomes a
/// single `2a`; even parts pass through. Errors (naming the part) if any odd
/// part has odd multiplicity. The output has no odd parts and the same size.
pub fn phi(p: &Partition) -> Result<Partition> {
    let mut out = Vec::with_capacity(p.len());
    for (&part, &mult) in &p.multiplicities() {
        if part % 2 == 1 {
            if mult % 2 != 0 {
                return Err(Error::OddMultiplicity {
                    part,
                    multiplicity: mult,
                });
            }
            out.extend(std::iter::repeat_n(2 * part, mult / 2));
        } else {
            out.extend(std::iter::repeat_n(part, mult));
        }
    }
    Ok(Partition::from_positive_parts(out))
}

/// Splits every part congruent to 2 mod 4 into two equal odd halves; other
/// parts pass through. Total on all partitions; preserves size; the output
/// has no part congruent to 2 mod 4.
pub fn phi_inverse(p: &Partition) -> Partition {
    let mut out = Vec::with_capacity(p.len());
    for &part in p.parts() {
        if part % 4 == 2 {
            out.push(part / 2);
            out.push(part / 2);
        } else {
            out.push(part);
        }
    }
    Partition::from_positive_parts(out)
}

/// Decomposes `p = alpha ∪ beta`: for each odd part of multiplicity m,
/// `m mod 2` copies go to alpha and the even remainder to beta; even parts go
/// to alpha. So alpha has distinct odd parts and beta has only odd parts,
/// each with even multiplicity.
pub fn split_alpha_beta(p: &Partition) -> (Partition, Partition) {
    let mut alpha = Vec::new();
    let mut beta = Vec::new();
    for (&part, &mult) in &p.multiplicities() {
        if part % 2 == 1 {
            alpha.extend(std::iter::repeat_n(part, mult % 2));
            beta.extend(std::iter::repeat_n(part, mult - mult % 2));
        } else {
            alpha.extend(std::iter::repeat_n(part, mult));
        }
    }
    (
        Partition::from_positive_parts(alpha),
        Partition::from_positive_parts(beta),
    )
}

/// Largest odd part with multiplicity at least 2, if any.
fn largest_repeated_odd(p: &Partition) -> Option<u32> {
    p.parts()
        .windows(2)
        .find(|w| w[0] == w[1] && w[0] % 2 == 1)
        .map(|w| w[0])
}

/// The second part, taking 0 for a single-part partition.
fn second_part_or_zero(p: &Partition) -> u32 {
    p.parts().get(1).copied().unwrap_or(0)
}

/// Independent predicate for one forward case of one theorem. Exactly one
/// case applies to every nonempty member of `c`; the audits check totality
/// and pairwise exclusivity of these predicates directly.
// The half-of-top thresholds are written exactly as the case conditions
// state them: (top+1)/2, (top-1)/2, (top+2)/2.
#[allow(clippy::manual_div_ceil)]
pub fn case_predicate(theorem: Theorem, case: u8, p: &Partition) -> bool {
    let Some(top) = p.largest() else {
        return false;
    };
    let top_even = top % 2 == 0;
    let distinct_odds = p.has_distinct_odd_parts();
    let top_mult = p.multiplicity(top);
    let rep = largest_repeated_odd(p);
    // For an odd largest part of multiplicity one, the dispatch compares the
    // largest repeated odd part against a half-of-top threshold.
    let rep_vs = |threshold: u32| rep.map(|r| (r, threshold));
    match theorem {
        Theorem::T31 => match case {
            1 => top_even,
            2 => !top_even && distinct_odds,
            3 => !top_even && top_mult > 1,
            4 => {
                top % 4 == 1
                    && top_mult == 1
                    && matches!(rep_vs((top + 1) / 2), Some((r, t)) if r < t)
            }
            5 => {
                top % 4 == 1
                    && top_mult == 1
                    && matches!(rep_vs((top + 1) / 2), Some((r, t)) if r >= t)
            }
            6 => {
                top % 4 == 3
                    && top_mult == 1
                    && matches!(rep_vs((top - 1) / 2), Some((r, t)) if r > t)
            }
            7 => {
                top % 4 == 3
                    && top_mult == 1
                    && matches!(rep_vs((top - 1) / 2), Some((r, t)) if r <= t)
            }
            _ => false,
        },
        Theorem::T32 => match case {
            1 => top_even && distinct_odds,
            2 => top_even && matches!(rep_vs((top + 2) / 2), Some((r, t)) if r >= t),
            3 => top_even && matches!(rep_vs((top + 2) / 2), Some((r, t)) if r < t),
            4 => !top_even && distinct_odds && second_part_or_zero(p) < top - 1,
            5 => !top_even && distinct_odds && second_part_or_zero(p) == top - 1,
            6 => !top_even && top_mult >= 2,
            7 => {
                top % 4 == 1
                    && top_mult == 1
                    && matches!(rep_vs((top + 1) / 2), Some((r, t)) if r >= t)
            }
            8 => {
                top % 4 == 1
                    && top_mult == 1
                    && matches!(rep_vs((top + 1) / 2), Some((r, t)) if r < t)
                    && p.multiplicity(top - 1) == 0
            }
            9 => {
                top % 4 == 1
                    && top_mult == 1
                    && matches!(rep_vs((top + 1) / 2), Some((r, t)) if r < t)
                    && p.multiplicity(top - 1) >= 1
            }
            10 => {
                top % 4 == 3
                    && top_mult == 1
                    && matches!(rep_vs((top - 1) / 2), Some((r, t)) if r >= t)
            }
            11 => {
                top % 4 == 3
                    && top_mult == 1
                    && matches!(rep_vs((top - 1) / 2), Some((r, t)) if r < t)
            }
            _ => false,
        },
    }
}

/// Finds the unique applicable forward case for a nonempty member of `c`.
/// Errors if `p` is not in `c`, if no case applies, or if several do (the
/// latter two should be impossible and are audited exhaustively).
pub fn classify_case(p: &Partition, theorem: Theorem) -> Result<CaseLabel> {
    if let Some(reason) = family_violation(p, FamilyTag::C) {
        return Err(Error::NotInFamily {
            partition: p.to_string(),
            family: FamilyTag::C,
            reason,
        });
    }
    let matching: Vec<u8> =
        (1..=theorem.case_count()).filter(|&k| case_predicate(theorem, k, p)).collect();
    match matching.as_slice() {
        [unique] => Ok(CaseLabel::forward(theorem, *unique)),
        [] => Err(Error::NoApplicableCase {
            partition: p.to_string(),
        }),
        several => Err(Error::DispatchConflict {
            partition: p.to_string(),
            cases: several.to_vec(),
        }),
    }
}

/// Removes one copy of the largest part and reinserts it decremented,
/// dropping a resulting zero.
fn decrement_largest(p: &Partition) -> Partition {
    let mut parts = p.parts().to_vec();
    let top = parts.remove(0);
    if top > 1 {
        parts.push(top - 1);
    }
    Partition::from_positive_parts(parts)
}

/// Adds 1 to the largest part; on the empty partition this creates the part 1.
fn increment_largest(p: &Partition) -> Partition {
    let mut parts = p.parts().to_vec();
    match parts.first_mut() {
        Some(top) => *top += 1,
        None => parts.push(1),
    }
    Partition::from_sorted_parts(parts)
}

/// Adds 2 to one copy of the largest part.
fn add_two_to_largest(p: &Partition) -> Partition {
    let mut parts = p.parts().to_vec();
    let top = parts.remove(0);
    parts.push(top + 2);
    Partition::from_positive_parts(parts)
}

/// Subtracts 2 from one copy of the largest part, dropping a resulting zero.
fn subtract_two_from_largest(p: &Partition) -> Partition {
    let mut parts = p.parts().to_vec();
    let top = parts.remove(0);
    if top > 2 {
        parts.push(top - 2);
    }
    Partition::from_positive_parts(parts)
}

/// Replaces two copies of `a` by the single part `2a + bonus`.
fn merge_pair(p: &Partition, a: u32, bonus: u32) -> Partition {
    debug_assert!(p.multiplicity(a) >= 2);
    let mut parts = p.parts().to_vec();
    for _ in 0..2 {
        let pos = parts.iter().position(|&v| v == a).expect("two copies");
        parts.remove(pos);
    }
    parts.push(2 * a + bonus);
    Partition::from_positive_parts(parts)
}

/// Adds 1 to each of the two largest parts (used when the second part is
/// exactly one below the first).
fn increment_two_largest(p: &Partition) -> Partition {
    let mut parts = p.parts().to_vec();
    debug_assert!(parts.len() >= 2);
    parts[0] += 1;
    parts[1] += 1;
    Partition::from_positive_parts(parts)
}

/// Adds 1 to the largest part and to one copy of what was largest-minus-one.
fn promote_largest_and_runner_up(p: &Partition) -> Partition {
    let top = p.largest().expect("nonempty");
    let mut parts = p.parts().to_vec();
    parts[0] = top + 1;
    let pos = parts
        .iter()
        .position(|&v| v == top - 1)
        .expect("a copy of largest-minus-one");
    parts[pos] = top;
    Partition::from_positive_parts(parts)
}

fn ensure_in_c(p: &Partition, theorem: Theorem) -> Result<u64> {
    if let Some(reason) = family_violation(p, FamilyTag::C) {
        return Err(Error::NotInFamily {
            partition: p.to_string(),
            family: FamilyTag::C,
            reason,
        });
    }
    let n = p.size();
    if n <= theorem.min_exclusive() {
        return Err(Error::OutOfTheoremRange {
            theorem: theorem.name().to_string(),
            min: theorem.min_exclusive(),
            n,
        });
    }
    Ok(n)
}

/// Runs the shared tail of every forward case: split the working partition,
/// merge the paired odds, reunite, and verify the output lands in the target.
fn finish_forward(
    input: &Partition,
    case: CaseLabel,
    mu: Option<Partition>,
    target: Target,
) -> Result<MappingRecord> {
    let work = mu.as_ref().unwrap_or(input);
    let (alpha, beta) = split_alpha_beta(work);
    let phi_beta = phi(&beta).expect("beta has even odd multiplicities by construction");
    let output = multiset_union(&alpha, &phi_beta);
    let record = MappingRecord {
        input: input.clone(),
        case,
        mu,
        alpha,
        beta,
        phi_beta,
        output,
        target,
    };
    if record.output.size() != target.size {
        return Err(Error::ForwardContract {
            reason: format!(
                "output has size {}, target is {target}",
                record.output.size()
            ),
            record: Box::new(record),
        });
    }
    if let Some(reason) = family_violation(&record.output, target.family) {
        return Err(Error::ForwardContract {
            reason: format!("output not in {target}: {reason}"),
            record: Box::new(record),
        });
    }
    Ok(record)
}

/// Forward map of the seven-case theorem: sends a member of `c(n)` (n > 1)
/// into `o1(n)` or `o1(n-1)`, returning the full audit record.
pub fn thm31_forward(p: &Partition) -> Result<MappingRecord> {
    let n = ensure_in_c(p, Theorem::T31)?;
    let case = classify_case(p, Theorem::T31)?;
    let number = case.forward_number().expect("classify returns forward");
    let (mu, target_size) = match number {
        // Even largest part: split and merge in place.
        1 => (None, n),
        // Odd largest part, all odds distinct: decrement the largest.
        2 => (Some(decrement_largest(p)), n - 1),
        // Odd largest part repeated: merge two copies into one even part.
        3 => (
            Some(merge_pair(p, p.largest().expect("nonempty"), 0)),
            n,
        ),
        // 1 mod 4, small repeated odds: decrement the largest.
        4 => (Some(decrement_largest(p)), n - 1),
        // 1 mod 4, large repeated odds: split and merge in place.
        5 => (None, n),
        // 3 mod 4, large repeated odds: split and merge in place.
        6 => (None, n),
        // 3 mod 4, small repeated odds: decrement the largest.
        7 => (Some(decrement_largest(p)), n - 1),
        _ => unreachable!("seven cases"),
    };
    let target = Target {
        family: FamilyTag::O1,
        size: target_size,
    };
    finish_forward(p, case, mu, target)
}

/// Source level set for the backward direction of the seven-case theorem.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum T31Source {
    /// The input lives in `o1(n)`; the preimage is in `c(n)`.
    O1AtN,
    /// The input lives in `o1(n-1)`; the preimage is in `c(n)`.
    O1AtNMinus1,
}

impl T31Source {
    pub fn converse_case(self) -> u8 {
        match self {
            T31Source::O1AtN => 1,
            T31Source::O1AtNMinus1 => 2,
        }
    }
}

/// Backward map of the seven-case theorem. From `o1(n)`: split the 2-mod-4
/// parts. From `o1(n-1)`: add 1 to the largest part first. The output is
/// verified to be in `c` at the right level.
pub fn thm31_backward(p: &Partition, source: T31Source) -> Result<Partition> {
    if let Some(reason) = family_violation(p, FamilyTag::O1) {
        return Err(Error::NotInFamily {
            partition: p.to_string(),
            family: FamilyTag::O1,
            reason,
        });
    }
    let (pre, n) = match source {
        T31Source::O1AtN => (p.clone(), p.size()),
        T31Source::O1AtNMinus1 => (increment_largest(p), p.size() + 1),
    };
    let out = phi_inverse(&pre);
    check_backward(p, out, n)
}

/// Forward map of the eleven-case theorem: sends a member of `c(n)` (n > 2)
/// into `o3(n+2)` or `o3(n-1)`, returning the full audit record.
pub fn thm32_forward(p: &Partition) -> Result<MappingRecord> {
    let n = ensure_in_c(p, Theorem::T32)?;
    let case = classify_case(p, Theorem::T32)?;
    let number = case.forward_number().expect("classify returns forward");
    let top = p.largest().expect("nonempty");
    let rep = largest_repeated_odd(p);
    let (mu, target_size) = match number {
        // Even largest part, odds distinct: add 2 to the largest.
        1 => (add_two_to_largest(p), n + 2),
        // Even largest part, large repeated odd a: merge a,a into 2a+2.
        2 => (merge_pair(p, rep.expect("case 2 has a repeat"), 2), n + 2),
        // Even largest part, small repeated odds: add 2 to the largest.
        3 => (add_two_to_largest(p), n + 2),
        // Odd largest, odds distinct, gap below the top: decrement.
        4 => (decrement_largest(p), n - 1),
        // Odd largest, odds distinct, second part exactly top-1: raise both.
        5 => (increment_two_largest(p), n + 2),
        // Odd largest repeated: merge top,top into 2·top+2.
        6 => (merge_pair(p, top, 2), n + 2),
        // 1 mod 4, large repeated odd a: merge a,a into 2a+2.
        7 => (merge_pair(p, rep.expect("case 7 has a repeat"), 2), n + 2),
        // 1 mod 4, small repeated odds, top-1 absent: decrement.
        8 => (decrement_largest(p), n - 1),
        // 1 mod 4, small repeated odds, top-1 present: promote top and one
        // copy of top-1.
        9 => (promote_largest_and_runner_up(p), n + 2),
        // 3 mod 4, large repeated odd a: merge a,a into 2a+2.
        10 => (merge_pair(p, rep.expect("case 10 has a repeat"), 2), n + 2),
        // 3 mod 4, small repeated odds: decrement.
        11 => (decrement_largest(p), n - 1),
        _ => unreachable!("eleven cases"),
    };
    let target = Target {
        family: FamilyTag::O3,
        size: target_size,
    };
    finish_forward(p, case, Some(mu), target)
}

/// Source level set for the backward direction of the eleven-case theorem.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum T32Source {
    /// The input lives in `o3(n+2)`; the preimage is in `c(n)`.
    O3AtNPlus2,
    /// The input lives in `o3(n-1)`; the preimage is in `c(n)`.
    O3AtNMinus1,
}

impl T32Source {
    pub fn converse_case(self) -> u8 {
        match self {
            T32Source::O3AtNMinus1 => 1,
            T32Source::O3AtNPlus2 => 2,
        }
    }
}

/// Backward map of the eleven-case theorem. From `o3(n-1)`: add 1 to the
/// largest part, then split the 2-mod-4 parts. From `o3(n+2)`: subtract 2
/// from the largest part first.
pub fn thm32_backward(p: &Partition, source: T32Source) -> Result<Partition> {
    if let Some(reason) = family_violation(p, FamilyTag::O3) {
        return Err(Error::NotInFamily {
            partition: p.to_string(),
            family: FamilyTag::O3,
            reason,
        });
    }
    let (pre, n) = match source {
        T32Source::O3AtNMinus1 => (increment_largest(p), p.size() + 1),
        T32Source::O3AtNPlus2 => {
            if p.is_empty() {
                return Err(Error::BackwardContract {
                    reason: "cannot subtract from the empty partition".to_string(),
                    input: p.to_string(),
                    output: p.to_string(),
                });
            }
            (subtract_two_from_largest(p), p.size() - 2)
        }
    };
    let out = phi_inverse(&pre);
    check_backward(p, out, n)
}

fn check_backward(input: &Partition, out: Partition, n: u64) -> Result<Partition> {
    if out.size() != n {
        return Err(Error::BackwardContract {
            reason: format!("output has size {}, expected {n}", out.size()),
            input: input.to_string(),
            output: out.to_string(),
        });
    }
    if let Some(reason) = family_violation(&out, FamilyTag::C) {
        return Err(Error::BackwardContract {
            reason: format!("output not in C({n}): {reason}"),
            input: input.to_string(),
            output: out.to_string(),
        });
    }
    Ok(out)
}
