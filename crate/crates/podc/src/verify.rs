//! Verification orchestration: the identity catalog checked over n-ranges by
//! exhaustive enumeration and/or series coefficients, exhaustive bijection
//! audits, the chain of series identities behind the `o3` closed form, and
//! cross-checks against locally supplied b-files.
//!
//! Every check produces a [`VerificationReport`]: what was checked, over what
//! range, with which methods, which sub-checks ran, and — capped at a
//! configurable count — concrete witnesses for any failures. Reports are
//! deterministic given their inputs (witnesses appear in enumeration order);
//! wall time is recorded but carries no semantic weight.
//!
//! The identity catalog, with declared validity ranges:
//!
//! | tag | statement                        | declared range |
//! |-----|----------------------------------|----------------|
//! | 1.1 | o1(n) + o1(n-1) = pod(n)         | n > 1          |
//! | 1.2 | o2(n) + o2(n-3) = podgt2(n)      | n > 4          |
//! | 1.3 | o3(n+2) + o3(n-1) = pod(n)       | n > 2          |
//! | 1.4 | pod(n) = c(n)                    | all n >= 0     |
//! | 1.6 | o1(n) + o1(n-1) = c(n)           | n > 1          |
//! | 1.7 | o3(n+2) + o3(n-1) = c(n)         | n > 2          |
//!
//! The verifier also probes each identity below its declared range and
//! records (without failing) where it happens to hold, since the declared
//! thresholds are not always tight.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;

use crate::bijection::{
    thm31_backward, thm31_forward, thm32_backward, thm32_forward, MappingRecord, T31Source,
    T32Source, Theorem,
};
use crate::error::{Error, Result};
use crate::oeis::BFileEntry;
use crate::partition::{
    count_family_bounded, family_partitions_bounded, FamilyTag, Partition, DEFAULT_ENUM_BOUND,
};
use crate::qseries::{family_series_name, named_gf, o1_sum_spec, o2_sum_spec, sum_ratio_terms, SeriesName};
use crate::series::TruncatedSeries;

/// Shared knobs for the verification entry points.
#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    /// Hard ceiling for exhaustive enumeration.
    pub enum_bound: u64,
    /// Maximum number of failure witnesses stored per report; failures are
    /// still counted past the cap.
    pub witness_cap: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            enum_bound: DEFAULT_ENUM_BOUND,
            witness_cap: 10,
        }
    }
}

/// How to evaluate family counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Enumeration,
    Series,
    Both,
}

impl Method {
    fn wants_enumeration(self) -> bool {
        matches!(self, Method::Enumeration | Method::Both)
    }

    fn wants_series(self) -> bool {
        matches!(self, Method::Series | Method::Both)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Enumeration => "enumeration",
            Method::Series => "series",
            Method::Both => "both",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "enum" | "enumeration" => Ok(Method::Enumeration),
            "series" => Ok(Method::Series),
            "both" => Ok(Method::Both),
            other => Err(Error::PartitionParse {
                input: other.to_string(),
                reason: "expected enum, series or both".to_string(),
            }),
        }
    }
}

/// The six catalogued identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum IdentityTag {
    I11,
    I12,
    I13,
    I14,
    I16,
    I17,
}

impl IdentityTag {
    pub const ALL: [IdentityTag; 6] = [
        IdentityTag::I11,
        IdentityTag::I12,
        IdentityTag::I13,
        IdentityTag::I14,
        IdentityTag::I16,
        IdentityTag::I17,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityTag::I11 => "1.1",
            IdentityTag::I12 => "1.2",
            IdentityTag::I13 => "1.3",
            IdentityTag::I14 => "1.4",
            IdentityTag::I16 => "1.6",
            IdentityTag::I17 => "1.7",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            IdentityTag::I11 => "o1(n) + o1(n-1) = pod(n)",
            IdentityTag::I12 => "o2(n) + o2(n-3) = podgt2(n)",
            IdentityTag::I13 => "o3(n+2) + o3(n-1) = pod(n)",
            IdentityTag::I14 => "pod(n) = c(n)",
            IdentityTag::I16 => "o1(n) + o1(n-1) = c(n)",
            IdentityTag::I17 => "o3(n+2) + o3(n-1) = c(n)",
        }
    }

    /// First n of the declared validity range.
    pub fn valid_from(self) -> u64 {
        match self {
            IdentityTag::I11 | IdentityTag::I16 => 2,
            IdentityTag::I12 => 5,
            IdentityTag::I13 | IdentityTag::I17 => 3,
            IdentityTag::I14 => 0,
        }
    }

    /// Count terms on the left side, as (family, offset from n).
    pub fn lhs(self) -> &'static [(FamilyTag, i64)] {
        match self {
            IdentityTag::I11 | IdentityTag::I16 => &[(FamilyTag::O1, 0), (FamilyTag::O1, -1)],
            IdentityTag::I12 => &[(FamilyTag::O2, 0), (FamilyTag::O2, -3)],
            IdentityTag::I13 | IdentityTag::I17 => &[(FamilyTag::O3, 2), (FamilyTag::O3, -1)],
            IdentityTag::I14 => &[(FamilyTag::Pod, 0)],
        }
    }

    /// Count terms on the right side.
    pub fn rhs(self) -> &'static [(FamilyTag, i64)] {
        match self {
            IdentityTag::I11 | IdentityTag::I13 => &[(FamilyTag::Pod, 0)],
            IdentityTag::I12 => &[(FamilyTag::PodGt2, 0)],
            IdentityTag::I14 | IdentityTag::I16 | IdentityTag::I17 => &[(FamilyTag::C, 0)],
        }
    }

    /// Largest positive offset appearing in the terms; evaluating up to
    /// `n_max` needs counts (or coefficients) up to `n_max + this`.
    pub fn max_offset(self) -> u64 {
        self.lhs()
            .iter()
            .chain(self.rhs())
            .map(|&(_, off)| off.max(0) as u64)
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for IdentityTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for IdentityTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::PartitionParse {
                input: s.to_string(),
                reason: "expected one of 1.1, 1.2, 1.3, 1.4, 1.6, 1.7".to_string(),
            })
    }
}

/// A concrete failure: where, which check, and the two disagreeing values.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    pub check: String,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub record: Option<MappingRecord>,
}

/// Tally for one named sub-check.
#[derive(Clone, Debug, Serialize)]
pub struct SubCheck {
    pub name: String,
    pub checked: u64,
    pub failures: u64,
}

/// Outcome of probing one n below the declared validity range.
#[derive(Clone, Debug, Serialize)]
pub struct BelowRange {
    pub n: i64,
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one verification run.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub subject: String,
    pub methods: Vec<String>,
    /// Inclusive range of n (or coefficient indices) covered.
    pub range: (i64, i64),
    /// Units checked: n values, coefficients, or mapped partitions.
    pub checked: u64,
    pub failure_count: u64,
    /// Stored witnesses, capped at the configured count.
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sub_checks: Vec<SubCheck>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub below_range: Vec<BelowRange>,
    /// Informational lines, e.g. the cardinalities an audit compared.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub wall_ms: u64,
    pub passed: bool,
}

impl VerificationReport {
    fn new(subject: String, methods: Vec<String>, range: (i64, i64)) -> Self {
        VerificationReport {
            subject,
            methods,
            range,
            checked: 0,
            failure_count: 0,
            witnesses: Vec::new(),
            sub_checks: Vec::new(),
            below_range: Vec::new(),
            notes: Vec::new(),
            wall_ms: 0,
            passed: true,
        }
    }

    fn fail(&mut self, cap: usize, witness: Witness) {
        self.failure_count += 1;
        self.passed = false;
        if self.witnesses.len() < cap {
            self.witnesses.push(witness);
        }
    }

    fn finish(mut self, start: Instant) -> Self {
        self.wall_ms = start.elapsed().as_millis() as u64;
        self.passed = self.failure_count == 0;
        self
    }

    /// Human-readable rendering.
    pub fn render_plain(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "subject:  {}", self.subject);
        if !self.methods.is_empty() {
            let _ = writeln!(out, "methods:  {}", self.methods.join(", "));
        }
        let _ = writeln!(out, "range:    {}..={}", self.range.0, self.range.1);
        let _ = writeln!(out, "checked:  {}", self.checked);
        let _ = writeln!(out, "failures: {}", self.failure_count);
        if !self.below_range.is_empty() {
            let probes: Vec<String> = self
                .below_range
                .iter()
                .map(|b| {
                    format!(
                        "n={} {} ({} vs {})",
                        b.n,
                        if b.holds { "holds" } else { "fails" },
                        b.lhs,
                        b.rhs
                    )
                })
                .collect();
            let _ = writeln!(out, "below range: {}", probes.join(", "));
        }
        if !self.notes.is_empty() {
            for note in &self.notes {
                let _ = writeln!(out, "note:     {note}");
            }
        }
        if !self.sub_checks.is_empty() {
            let _ = writeln!(out, "sub-checks:");
            for sc in &self.sub_checks {
                let status = if sc.failures == 0 { "ok  " } else { "FAIL" };
                let _ = writeln!(
                    out,
                    "  {status}  {} ({} checked, {} failed)",
                    sc.name, sc.checked, sc.failures
                );
            }
        }
        if !self.witnesses.is_empty() {
            let _ = writeln!(out, "witnesses:");
            for w in &self.witnesses {
                let loc = w.n.map(|n| format!(" at n={n}")).unwrap_or_default();
                let _ = writeln!(out, "  {}{loc}: {} vs {}", w.check, w.lhs, w.rhs);
                if let Some(rec) = &w.record {
                    let _ = writeln!(out, "    record: {rec}");
                }
            }
        }
        let _ = writeln!(
            out,
            "result:   {} in {} ms",
            if self.passed { "PASS" } else { "FAIL" },
            self.wall_ms
        );
        out
    }
}

/// Enumeration-backed family counts with a small memo.
struct EnumCounts {
    bound: u64,
    memo: BTreeMap<(FamilyTag, u64), BigInt>,
}

impl EnumCounts {
    fn new(bound: u64) -> Self {
        EnumCounts {
            bound,
            memo: BTreeMap::new(),
        }
    }

    fn get(&mut self, tag: FamilyTag, n: u64) -> Result<BigInt> {
        if let Some(v) = self.memo.get(&(tag, n)) {
            return Ok(v.clone());
        }
        let count = BigInt::from(count_family_bounded(n, tag, self.bound)?);
        self.memo.insert((tag, n), count.clone());
        Ok(count)
    }
}

/// Series-coefficient-backed family counts; one series per family, built on
/// first use at a fixed order.
struct SeriesCounts {
    order: usize,
    memo: BTreeMap<FamilyTag, TruncatedSeries>,
}

impl SeriesCounts {
    fn new(order: usize) -> Self {
        SeriesCounts {
            order,
            memo: BTreeMap::new(),
        }
    }

    fn get(&mut self, tag: FamilyTag, n: u64) -> Result<BigInt> {
        let series = self
            .memo
            .entry(tag)
            .or_insert_with(|| named_gf(family_series_name(tag), self.order));
        Ok(series.coefficient(n as usize)?.clone())
    }
}

/// Sums `counts(family, n + offset)` over the given terms, taking counts at
/// negative levels as zero.
fn eval_terms(
    terms: &[(FamilyTag, i64)],
    n: i64,
    get: &mut dyn FnMut(FamilyTag, u64) -> Result<BigInt>,
) -> Result<BigInt> {
    let mut acc = BigInt::from(0);
    for &(tag, off) in terms {
        let m = n + off;
        if m >= 0 {
            acc += get(tag, m as u64)?;
        }
    }
    Ok(acc)
}

/// Checks one identity for every n in its declared range up to `n_max`,
/// by exhaustive enumeration, series coefficients, or both (in which case
/// the two methods are also required to agree). The n below the declared
/// range are probed and recorded without failing the report.
pub fn verify_identity(
    tag: IdentityTag,
    n_max: u64,
    method: Method,
    cfg: &VerifyConfig,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let from = tag.valid_from();
    let needed_max = n_max + tag.max_offset();

    let mut enum_counts = if method.wants_enumeration() {
        if needed_max > cfg.enum_bound {
            return Err(Error::EnumerationBound {
                n: needed_max,
                bound: cfg.enum_bound,
            });
        }
        Some(EnumCounts::new(cfg.enum_bound))
    } else {
        None
    };
    let mut series_counts = if method.wants_series() {
        Some(SeriesCounts::new(needed_max as usize))
    } else {
        None
    };

    let mut report = VerificationReport::new(
        format!("identity {} [{}]", tag.name(), tag.statement()),
        vec![method.to_string()],
        (from as i64, n_max as i64),
    );

    let mut sides = |n: i64| -> Result<Vec<(&'static str, BigInt, BigInt)>> {
        let mut out = Vec::new();
        if let Some(src) = enum_counts.as_mut() {
            let mut get = |t: FamilyTag, m: u64| src.get(t, m);
            out.push((
                "enumeration",
                eval_terms(tag.lhs(), n, &mut get)?,
                eval_terms(tag.rhs(), n, &mut get)?,
            ));
        }
        if let Some(src) = series_counts.as_mut() {
            let mut get = |t: FamilyTag, m: u64| src.get(t, m);
            out.push((
                "series",
                eval_terms(tag.lhs(), n, &mut get)?,
                eval_terms(tag.rhs(), n, &mut get)?,
            ));
        }
        Ok(out)
    };

    for n in from..=n_max {
        let evaluated = sides(n as i64)?;
        report.checked += 1;
        for (route, lhs, rhs) in &evaluated {
            if lhs != rhs {
                report.fail(
                    cfg.witness_cap,
                    Witness {
                        n: Some(n as i64),
                        check: route.to_string(),
                        lhs: lhs.to_string(),
                        rhs: rhs.to_string(),
                        record: None,
                    },
                );
            }
        }
        if evaluated.len() == 2 {
            let (_, le, re) = &evaluated[0];
            let (_, ls, rs) = &evaluated[1];
            if le != ls || re != rs {
                report.fail(
                    cfg.witness_cap,
                    Witness {
                        n: Some(n as i64),
                        check: "method-agreement".to_string(),
                        lhs: format!("enumeration {le} = {re}"),
                        rhs: format!("series {ls} = {rs}"),
                        record: None,
                    },
                );
            }
        }
    }

    // Probe below the declared range; recorded, never failed.
    for n in 0..from {
        let evaluated = sides(n as i64)?;
        if let Some((_, lhs, rhs)) = evaluated.first() {
            report.below_range.push(BelowRange {
                n: n as i64,
                holds: lhs == rhs,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    Ok(report.finish(start))
}

/// The two target level sets of a theorem at level n: the larger one first.
fn targets(theorem: Theorem, n: u64) -> [(FamilyTag, u64); 2] {
    match theorem {
        Theorem::T31 => [(FamilyTag::O1, n), (FamilyTag::O1, n - 1)],
        Theorem::T32 => [(FamilyTag::O3, n + 2), (FamilyTag::O3, n - 1)],
    }
}

fn forward(theorem: Theorem, p: &Partition) -> Result<MappingRecord> {
    match theorem {
        Theorem::T31 => thm31_forward(p),
        Theorem::T32 => thm32_forward(p),
    }
}

fn backward(theorem: Theorem, p: &Partition, upper: bool) -> Result<Partition> {
    match (theorem, upper) {
        (Theorem::T31, true) => thm31_backward(p, T31Source::O1AtN),
        (Theorem::T31, false) => thm31_backward(p, T31Source::O1AtNMinus1),
        (Theorem::T32, true) => thm32_backward(p, T32Source::O3AtNPlus2),
        (Theorem::T32, false) => thm32_backward(p, T32Source::O3AtNMinus1),
    }
}

/// Exhaustively audits one theorem at one level: the forward map must be
/// total on `c(n)`, land in its target family at the right size, be
/// injective, match the target cardinalities exactly, and round-trip with
/// the backward map in both directions.
pub fn verify_bijection(theorem: Theorem, n: u64, cfg: &VerifyConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    if n <= theorem.min_exclusive() {
        return Err(Error::OutOfTheoremRange {
            theorem: theorem.name().to_string(),
            min: theorem.min_exclusive(),
            n,
        });
    }
    let [upper, lower] = targets(theorem, n);
    let deepest = upper.1.max(lower.1).max(n);
    if deepest > cfg.enum_bound {
        return Err(Error::EnumerationBound {
            n: deepest,
            bound: cfg.enum_bound,
        });
    }

    let mut report = VerificationReport::new(
        format!("bijection audit, theorem {} at n = {n}", theorem.name()),
        vec!["enumeration".to_string()],
        (n as i64, n as i64),
    );

    let members: Vec<Partition> =
        family_partitions_bounded(n, FamilyTag::C, cfg.enum_bound)?.collect();
    let mut totality = SubCheck {
        name: "totality".to_string(),
        checked: members.len() as u64,
        failures: 0,
    };
    let mut membership = SubCheck {
        name: "target-membership".to_string(),
        checked: members.len() as u64,
        failures: 0,
    };
    let mut injectivity = SubCheck {
        name: "injectivity".to_string(),
        checked: members.len() as u64,
        failures: 0,
    };
    let mut roundtrip_fb = SubCheck {
        name: "round-trip-forward-backward".to_string(),
        checked: 0,
        failures: 0,
    };

    let mut seen_outputs: BTreeSet<Partition> = BTreeSet::new();
    for p in &members {
        match forward(theorem, p) {
            Ok(record) => {
                if !seen_outputs.insert(record.output.clone()) {
                    injectivity.failures += 1;
                    report.fail(
                        cfg.witness_cap,
                        Witness {
                            n: Some(n as i64),
                            check: "injectivity".to_string(),
                            lhs: p.to_string(),
                            rhs: format!("duplicate output {}", record.output),
                            record: Some(record.clone()),
                        },
                    );
                }
                roundtrip_fb.checked += 1;
                let is_upper = record.target.size == upper.1;
                match backward(theorem, &record.output, is_upper) {
                    Ok(back) if back == *p => {}
                    Ok(back) => {
                        roundtrip_fb.failures += 1;
                        report.fail(
                            cfg.witness_cap,
                            Witness {
                                n: Some(n as i64),
                                check: "round-trip-forward-backward".to_string(),
                                lhs: p.to_string(),
                                rhs: format!("came back as {back}"),
                                record: Some(record.clone()),
                            },
                        );
                    }
                    Err(err) => {
                        roundtrip_fb.failures += 1;
                        report.fail(
                            cfg.witness_cap,
                            Witness {
                                n: Some(n as i64),
                                check: "round-trip-forward-backward".to_string(),
                                lhs: p.to_string(),
                                rhs: err.to_string(),
                                record: Some(record.clone()),
                            },
                        );
                    }
                }
            }
            Err(Error::ForwardContract { reason, record }) => {
                membership.failures += 1;
                report.fail(
                    cfg.witness_cap,
                    Witness {
                        n: Some(n as i64),
                        check: "target-membership".to_string(),
                        lhs: p.to_string(),
                        rhs: reason,
                        record: Some(*record),
                    },
                );
            }
            Err(err) => {
                totality.failures += 1;
                report.fail(
                    cfg.witness_cap,
                    Witness {
                        n: Some(n as i64),
                        check: "totality".to_string(),
                        lhs: p.to_string(),
                        rhs: err.to_string(),
                        record: None,
                    },
                );
            }
        }
    }

    // Cardinality: |c(n)| must equal the sum of the two target counts.
    let mut cardinality = SubCheck {
        name: "cardinality".to_string(),
        checked: 1,
        failures: 0,
    };
    let upper_count = count_family_bounded(upper.1, upper.0, cfg.enum_bound)?;
    let lower_count = count_family_bounded(lower.1, lower.0, cfg.enum_bound)?;
    let target_total = upper_count.clone() + lower_count.clone();
    report.notes.push(format!(
        "|C({n})| = {}; {}({}) = {upper_count}, {}({}) = {lower_count}",
        members.len(),
        upper.0.set_name(),
        upper.1,
        lower.0.set_name(),
        lower.1
    ));
    if BigInt::from(members.len()) != BigInt::from(target_total.clone()) {
        cardinality.failures += 1;
        report.fail(
            cfg.witness_cap,
            Witness {
                n: Some(n as i64),
                check: "cardinality".to_string(),
                lhs: format!("|C({n})| = {}", members.len()),
                rhs: format!(
                    "{}({}) + {}({}) = {target_total}",
                    upper.0.set_name(),
                    upper.1,
                    lower.0.set_name(),
                    lower.1
                ),
                record: None,
            },
        );
    }

    // Backward then forward must return to the same target member.
    let mut roundtrip_bf = SubCheck {
        name: "round-trip-backward-forward".to_string(),
        checked: 0,
        failures: 0,
    };
    for (idx, &(family, level)) in [upper, lower].iter().enumerate() {
        let is_upper = idx == 0;
        for q in family_partitions_bounded(level, family, cfg.enum_bound)? {
            roundtrip_bf.checked += 1;
            let outcome = backward(theorem, &q, is_upper)
                .and_then(|pre| forward(theorem, &pre).map(|rec| (pre, rec)));
            match outcome {
                Ok((_, rec)) if rec.output == q && rec.target.size == level => {}
                Ok((pre, rec)) => {
                    roundtrip_bf.failures += 1;
                    report.fail(
                        cfg.witness_cap,
                        Witness {
                            n: Some(n as i64),
                            check: "round-trip-backward-forward".to_string(),
                            lhs: format!("{q} via {pre}"),
                            rhs: format!("came back as {} in {}", rec.output, rec.target),
                            record: Some(rec),
                        },
                    );
                }
                Err(err) => {
                    roundtrip_bf.failures += 1;
                    report.fail(
                        cfg.witness_cap,
                        Witness {
                            n: Some(n as i64),
                            check: "round-trip-backward-forward".to_string(),
                            lhs: q.to_string(),
                            rhs: err.to_string(),
                            record: None,
                        },
                    );
                }
            }
        }
    }

    report.checked = members.len() as u64;
    report.sub_checks = vec![
        totality,
        membership,
        injectivity,
        cardinality,
        roundtrip_fb,
        roundtrip_bf,
    ];
    Ok(report.finish(start))
}

/// Runs [`verify_bijection`] for every n in `from..=to` and merges the
/// reports (sub-check tallies add up; witnesses stay capped).
pub fn verify_bijection_sweep(
    theorem: Theorem,
    from: u64,
    to: u64,
    cfg: &VerifyConfig,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut merged = VerificationReport::new(
        format!(
            "bijection audit, theorem {} for n = {from}..={to}",
            theorem.name()
        ),
        vec!["enumeration".to_string()],
        (from as i64, to as i64),
    );
    for n in from..=to {
        let one = verify_bijection(theorem, n, cfg)?;
        merged.checked += one.checked;
        merged.failure_count += one.failure_count;
        for w in one.witnesses {
            if merged.witnesses.len() < cfg.witness_cap {
                merged.witnesses.push(w);
            }
        }
        if merged.sub_checks.is_empty() {
            merged.sub_checks = one.sub_checks;
        } else {
            for (acc, new) in merged.sub_checks.iter_mut().zip(one.sub_checks) {
                debug_assert_eq!(acc.name, new.name);
                acc.checked += new.checked;
                acc.failures += new.failures;
            }
        }
    }
    Ok(merged.finish(start))
}

/// Compares two series coefficientwise into a sub-check tally.
fn compare_series(
    name: &str,
    lhs: &TruncatedSeries,
    rhs: &TruncatedSeries,
    report: &mut VerificationReport,
    cap: usize,
) -> SubCheck {
    let order = lhs.order().min(rhs.order());
    let mut sc = SubCheck {
        name: name.to_string(),
        checked: (order + 1) as u64,
        failures: 0,
    };
    for k in 0..=order {
        let l = &lhs.coeffs()[k];
        let r = &rhs.coeffs()[k];
        if l != r {
            sc.failures += 1;
            report.fail(
                cap,
                Witness {
                    n: Some(k as i64),
                    check: name.to_string(),
                    lhs: l.to_string(),
                    rhs: r.to_string(),
                    record: None,
                },
            );
        }
    }
    sc
}

/// Verifies, coefficientwise to the given order, the chain of series
/// identities behind the closed forms: the two quoted product/sum identities,
/// the Lambda evaluation, both `o3` forms, the `o1` and `o2` partial sums
/// against their closed forms, the two product forms of the pod/c series,
/// and the three multiplied-through displays. Eight sub-checks in total.
pub fn verify_proof_chain(order: usize, cfg: &VerifyConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    if order < 10 {
        return Err(Error::OrderTooSmall {
            min: 10,
            got: order,
        });
    }
    let mut report = VerificationReport::new(
        format!("proof chain at order {order}"),
        vec!["series".to_string()],
        (0, order as i64),
    );

    let one = TruncatedSeries::one(order);
    let q3 = TruncatedSeries::monomial(1, 3, order);
    let pod = named_gf(SeriesName::Pod, order);
    let c = named_gf(SeriesName::C, order);
    let o1 = named_gf(SeriesName::O1, order);
    let o2 = named_gf(SeriesName::O2, order);
    let podgt2 = named_gf(SeriesName::PodGt2, order);
    let o3_closed = named_gf(SeriesName::O3Closed, order);

    let mut subs = Vec::with_capacity(8);
    subs.push(compare_series(
        "andrews-bachraoui-1",
        &named_gf(SeriesName::Ab1Lhs, order),
        &named_gf(SeriesName::Ab1Rhs, order),
        &mut report,
        cfg.witness_cap,
    ));
    subs.push(compare_series(
        "andrews-bachraoui-2",
        &named_gf(SeriesName::Ab2Lhs, order),
        &named_gf(SeriesName::Ab2Rhs, order),
        &mut report,
        cfg.witness_cap,
    ));
    subs.push(compare_series(
        "lambda-sum-vs-closed",
        &named_gf(SeriesName::LambdaSum, order),
        &named_gf(SeriesName::LambdaClosed, order),
        &mut report,
        cfg.witness_cap,
    ));
    subs.push(compare_series(
        "o3-sum-vs-closed",
        &named_gf(SeriesName::O3Sum, order),
        &o3_closed,
        &mut report,
        cfg.witness_cap,
    ));
    subs.push(compare_series(
        "o1-sum-vs-closed",
        &sum_ratio_terms(&o1_sum_spec(), order)?,
        &o1,
        &mut report,
        cfg.witness_cap,
    ));
    subs.push(compare_series(
        "o2-sum-vs-closed",
        &sum_ratio_terms(&o2_sum_spec(), order)?,
        &o2,
        &mut report,
        cfg.witness_cap,
    ));
    subs.push(compare_series(
        "pod-vs-c",
        &pod,
        &c,
        &mut report,
        cfg.witness_cap,
    ));

    // The three multiplied-through displays, tallied as one sub-check:
    //   (1+q)·o1 = pod,   (1+q^3)·o2 = podgt2 - 1 - q^3,
    //   (1+q^3)·o3 = q^2·c + 1 + q^3.
    let d1 = compare_series(
        "theorem-displays",
        &o1.mul_binomial(1, 1),
        &pod,
        &mut report,
        cfg.witness_cap,
    );
    let d2 = compare_series(
        "theorem-displays",
        &o2.mul_binomial(1, 3),
        &podgt2.sub(&one).sub(&q3),
        &mut report,
        cfg.witness_cap,
    );
    let d3 = compare_series(
        "theorem-displays",
        &o3_closed.mul_binomial(1, 3),
        &c.shift_up(2).add(&one).add(&q3),
        &mut report,
        cfg.witness_cap,
    );
    subs.push(SubCheck {
        name: "theorem-displays".to_string(),
        checked: d1.checked + d2.checked + d3.checked,
        failures: d1.failures + d2.failures + d3.failures,
    });

    report.checked = subs.iter().map(|s| s.checked).sum();
    report.sub_checks = subs;
    Ok(report.finish(start))
}

/// Checks that enumeration counts equal series coefficients for one family,
/// for every n up to `n_max`.
pub fn cross_check_counts(
    tag: FamilyTag,
    n_max: u64,
    cfg: &VerifyConfig,
) -> Result<VerificationReport> {
    let start = Instant::now();
    if n_max > cfg.enum_bound {
        return Err(Error::EnumerationBound {
            n: n_max,
            bound: cfg.enum_bound,
        });
    }
    let series_name = family_series_name(tag);
    let mut report = VerificationReport::new(
        format!("cross-check {tag}: enumeration vs coefficients of {series_name}"),
        vec!["both".to_string()],
        (0, n_max as i64),
    );
    let series = named_gf(series_name, n_max as usize);
    for n in 0..=n_max {
        report.checked += 1;
        let by_enum = BigInt::from(count_family_bounded(n, tag, cfg.enum_bound)?);
        let by_series = series.coefficient(n as usize)?.clone();
        if by_enum != by_series {
            report.fail(
                cfg.witness_cap,
                Witness {
                    n: Some(n as i64),
                    check: "count-vs-coefficient".to_string(),
                    lhs: by_enum.to_string(),
                    rhs: by_series.to_string(),
                    record: None,
                },
            );
        }
    }
    Ok(report.finish(start))
}

/// Compares the family's series coefficients against an ingested b-file.
/// Entry `index value` is matched against the coefficient at
/// `n = index + offset`; entries mapping outside `0..=max_order` are
/// ignored. Errors if nothing overlaps.
pub fn oeis_cross_check(
    tag: FamilyTag,
    entries: &[BFileEntry],
    offset: i64,
    max_order: usize,
    cfg: &VerifyConfig,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let mapped: Vec<(i64, u64, &BigInt)> = entries
        .iter()
        .filter_map(|e| {
            let n = e.index + offset;
            (n >= 0 && n <= max_order as i64).then_some((e.index, n as u64, &e.value))
        })
        .collect();
    if mapped.is_empty() {
        return Err(Error::EmptyOverlap);
    }
    let order = mapped.iter().map(|&(_, n, _)| n).max().expect("non-empty") as usize;
    let series_name = family_series_name(tag);
    let series = named_gf(series_name, order);

    let lo = mapped.iter().map(|&(_, n, _)| n).min().expect("non-empty");
    let mut report = VerificationReport::new(
        format!("b-file cross-check for {tag} against {series_name} (offset {offset})"),
        vec!["series".to_string()],
        (lo as i64, order as i64),
    );
    for (index, n, value) in mapped {
        report.checked += 1;
        let coeff = series.coefficient(n as usize)?;
        if coeff != value {
            report.fail(
                cfg.witness_cap,
                Witness {
                    n: Some(n as i64),
                    check: format!("b-file index {index}"),
                    lhs: value.to_string(),
                    rhs: coeff.to_string(),
                    record: None,
                },
            );
        }
    }
    Ok(report.finish(start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oeis::parse_bfile;

    fn cfg() -> VerifyConfig {
        VerifyConfig::default()
    }

    #[test]
    fn identity_11_passes_both_routes() {
        let report = verify_identity(IdentityTag::I11, 5, Method::Both, &cfg()).unwrap();
        assert!(report.passed, "{}", report.render_plain());
        assert_eq!(report.checked, 4); // n = 2..=5
        assert_eq!(report.range, (2, 5));
        // Holds at both probed below-range levels.
        assert_eq!(report.below_range.len(), 2);
        assert!(report.below_range.iter().all(|b| b.holds));
    }

    #[test]
    fn identity_12_below_range_probes() {
        let report = verify_identity(IdentityTag::I12, 5, Method::Enumeration, &cfg()).unwrap();
        assert!(report.passed);
        let holds: Vec<(i64, bool)> = report
            .below_range
            .iter()
            .map(|b| (b.n, b.holds))
            .collect();
        assert_eq!(
            holds,
            vec![(0, false), (1, true), (2, true), (3, false), (4, true)]
        );
    }

    #[test]
    fn identity_13_below_range_pinpoints_the_threshold() {
        let report = verify_identity(IdentityTag::I13, 4, Method::Both, &cfg()).unwrap();
        assert!(report.passed, "{}", report.render_plain());
        let holds: Vec<(i64, bool)> = report
            .below_range
            .iter()
            .map(|b| (b.n, b.holds))
            .collect();
        // The declared range starts at 3, but only n = 1 actually fails.
        assert_eq!(holds, vec![(0, true), (1, false), (2, true)]);
    }

    #[test]
    fn identity_respects_the_enumeration_bound() {
        let err = verify_identity(IdentityTag::I11, 100, Method::Enumeration, &cfg());
        assert!(matches!(err, Err(Error::EnumerationBound { .. })));
        // Series route has no such bound.
        let ok = verify_identity(IdentityTag::I11, 100, Method::Series, &cfg()).unwrap();
        assert!(ok.passed);
    }

    #[test]
    fn bijection_audit_t31_small_level() {
        let report = verify_bijection(Theorem::T31, 10, &cfg()).unwrap();
        assert!(report.passed, "{}", report.render_plain());
        assert_eq!(report.sub_checks.len(), 6);
        // |C(10)| members all mapped.
        let totality = &report.sub_checks[0];
        assert_eq!(totality.name, "totality");
        assert!(totality.checked > 0);
    }

    #[test]
    fn bijection_audit_rejects_out_of_range_levels() {
        assert!(matches!(
            verify_bijection(Theorem::T32, 2, &cfg()),
            Err(Error::OutOfTheoremRange { .. })
        ));
        assert!(matches!(
            verify_bijection(Theorem::T31, 1, &cfg()),
            Err(Error::OutOfTheoremRange { .. })
        ));
    }

    #[test]
    fn bijection_sweep_merges_reports() {
        let report = verify_bijection_sweep(Theorem::T31, 2, 8, &cfg()).unwrap();
        assert!(report.passed, "{}", report.render_plain());
        assert_eq!(report.sub_checks.len(), 6);
        assert_eq!(report.range, (2, 8));
    }

    #[test]
    fn proof_chain_at_a_modest_order() {
        let report = verify_proof_chain(60, &cfg()).unwrap();
        assert!(report.passed, "{}", report.render_plain());
        assert_eq!(report.sub_checks.len(), 8);
        assert!(report.sub_checks.iter().all(|s| s.failures == 0));
    }

    #[test]
    fn proof_chain_rejects_tiny_orders() {
        assert!(matches!(
            verify_proof_chain(5, &cfg()),
            Err(Error::OrderTooSmall { min: 10, got: 5 })
        ));
    }

    #[test]
    fn cross_check_families_match_their_series() {
        for tag in [FamilyTag::O1, FamilyTag::C, FamilyTag::O2] {
            let report = cross_check_counts(tag, 20, &cfg()).unwrap();
            assert!(report.passed, "{tag}: {}", report.render_plain());
            assert_eq!(report.checked, 21);
        }
    }

    #[test]
    fn oeis_cross_check_accepts_a_matching_file() {
        let text = "# pod counts\n0 1\n1 1\n2 1\n3 2\n4 3\n5 4\n";
        let entries = parse_bfile(text).unwrap();
        let report =
            oeis_cross_check(FamilyTag::Pod, &entries, 0, 1000, &cfg()).unwrap();
        assert!(report.passed, "{}", report.render_plain());
        assert_eq!(report.checked, 6);
    }

    #[test]
    fn oeis_cross_check_honors_the_offset() {
        // 1-indexed file listing pod(0..3).
        let entries = parse_bfile("1 1\n2 1\n3 1\n4 2\n").unwrap();
        let report =
            oeis_cross_check(FamilyTag::Pod, &entries, -1, 1000, &cfg()).unwrap();
        assert!(report.passed, "{}", report.render_plain());
        // Without the offset the values land on the wrong indices.
        let report = oeis_cross_check(FamilyTag::Pod, &entries, 0, 1000, &cfg()).unwrap();
        assert!(!report.passed);
    }

    #[test]
    fn oeis_cross_check_needs_overlap() {
        let entries = parse_bfile("50 1\n").unwrap();
        assert!(matches!(
            oeis_cross_check(FamilyTag::Pod, &entries, -100, 1000, &cfg()),
            Err(Error::EmptyOverlap)
        ));
    }

    #[test]
    fn report_json_uses_decimal_strings() {
        let report = verify_identity(IdentityTag::I14, 4, Method::Both, &cfg()).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["subject"], "identity 1.4 [pod(n) = c(n)]");
        assert_eq!(json["passed"], true);
        assert!(json["checked"].is_number());
    }
}
