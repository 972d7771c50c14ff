//! The q-series layer: q-shifted factorials (Pochhammer symbols), partial
//! sums of Pochhammer ratios, the named generating functions that the
//! identity catalog compares, and an exact q-binomial-theorem instance check.
//!
//! The q-shifted factorial follows the usual convention
//!
//! ```text
//! (a;q)_0 = 1,   (a;q)_n = prod_{j=0}^{n-1} (1 - a q^j),
//! (a;q)_inf = prod_{j>=0} (1 - a q^j),
//! ```
//!
//! here always with a monomial `a = ±q^k` and with the infinite product
//! truncated formally: factor `j` enters exactly when its exponent fits under
//! the truncation order, every later factor being 1 modulo the truncation.
//!
//! Named series (all with exact integer coefficients):
//!
//! | name            | series                                                  |
//! |-----------------|---------------------------------------------------------|
//! | `pod`           | `(-q;q^2)_inf / (q^2;q^2)_inf`                          |
//! | `c`             | `(q^2;q^4)_inf / (q;q)_inf`                             |
//! | `o1`            | `(-q^3;q^2)_inf / (q^2;q^2)_inf`                        |
//! | `o2`            | `(-q^5;q^2)_inf / (q^4;q^2)_inf - 1`                    |
//! | `podgt2`        | `(-q^3;q^2)_inf / (q^4;q^2)_inf`                        |
//! | `o3_sum`        | `sum_{n>=1} (-q;q^2)_n q^{2n} / (q^2;q^2)_{n-1} + 1`    |
//! | `o3_closed`     | `q^2 (q^2;q^4)_inf / ((1+q^3)(q;q)_inf) + 1`            |
//! | `lambda_sum`    | `sum_{m>=0} (-q;q^2)_{m+1} q^{2m} / (q^2;q^2)_m`        |
//! | `lambda_closed` | `(q^2;q^4)_inf / ((1+q^3)(q;q)_inf)`                    |
//! | `ab1_lhs`       | `sum_{m>=0} (-q^2;q^2)_m q^{2m} / (q;q^2)_m`            |
//! | `ab1_rhs`       | `q (q^4;q^4)_inf / ((1+q^3)(q;q)_inf) + (1-q)/(1+q^3)`  |
//! | `ab2_lhs`       | `(q^4;q^4)_inf/(q;q)_inf · sum_{n>=0} (q;q)_{2n} q^{4n} / (q^4;q^4)_n` |
//! | `ab2_rhs`       | `2q (q^4;q^4)_inf / ((1+q^3)(q;q)_inf) + (1-q)/(1+q^3)` |

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::FamilyTag;
use crate::series::TruncatedSeries;

/// Sign of the monomial `a` in `(a;q)_n`, i.e. `a = sign · q^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Length of a Pochhammer symbol: a fixed count, the infinite product, or a
/// length `scale·i + offset` affine in a summation index `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PochLength {
    Finite(u64),
    Infinite,
    Affine { scale: u64, offset: i64 },
}

/// Symbolic `(sign · q^a_exp ; q^step)_length`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PochhammerSpec {
    pub sign: Sign,
    pub a_exp: u64,
    pub step: u64,
    pub length: PochLength,
}

impl PochhammerSpec {
    pub fn new(sign: Sign, a_exp: u64, step: u64, length: PochLength) -> Result<Self> {
        if step == 0 {
            return Err(Error::ZeroStep);
        }
        Ok(PochhammerSpec {
            sign,
            a_exp,
            step,
            length,
        })
    }

    pub fn finite(sign: Sign, a_exp: u64, step: u64, n: u64) -> Self {
        Self::new(sign, a_exp, step, PochLength::Finite(n)).expect("step >= 1")
    }

    pub fn infinite(sign: Sign, a_exp: u64, step: u64) -> Self {
        Self::new(sign, a_exp, step, PochLength::Infinite).expect("step >= 1")
    }

    pub fn affine(sign: Sign, a_exp: u64, step: u64, scale: u64, offset: i64) -> Self {
        Self::new(sign, a_exp, step, PochLength::Affine { scale, offset }).expect("step >= 1")
    }

    /// Number of factors at summation index `index`; `None` means all factors
    /// under the truncation order (the infinite product).
    fn factor_count(&self, index: Option<u64>) -> Result<Option<u64>> {
        match self.length {
            PochLength::Finite(n) => Ok(Some(n)),
            PochLength::Infinite => Ok(None),
            PochLength::Affine { scale, offset } => {
                let i = index.ok_or(Error::MissingPochhammerIndex)?;
                let value = (scale * i) as i64 + offset;
                if value < 0 {
                    return Err(Error::NegativePochhammerLength { value, index: i });
                }
                Ok(Some(value as u64))
            }
        }
    }

    /// Exact truncated expansion. `index` is required when the length is
    /// affine; infinite products multiply factor `j` only while
    /// `a_exp + step·j` stays within the order.
    pub fn expand(&self, index: Option<u64>, order: usize) -> Result<TruncatedSeries> {
        let mut out = TruncatedSeries::one(order);
        let count = self.factor_count(index)?;
        let mut j = 0u64;
        loop {
            if let Some(n) = count {
                if j >= n {
                    break;
                }
            }
            let exp = self.a_exp + self.step * j;
            if exp > order as u64 {
                break;
            }
            // Factor (1 - sign·q^exp).
            out = out.mul_binomial(-self.sign.as_i64(), exp as usize);
            j += 1;
        }
        Ok(out)
    }
}

impl fmt::Display for PochhammerSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.sign {
            Sign::Plus => "",
            Sign::Minus => "-",
        };
        write!(f, "({sign}q^{};q^{})", self.a_exp, self.step)?;
        match self.length {
            PochLength::Finite(n) => write!(f, "_{n}"),
            PochLength::Infinite => write!(f, "_inf"),
            PochLength::Affine { scale, offset } => write!(f, "_({scale}i{offset:+})"),
        }
    }
}

/// One family of summands `prod(numerator) / prod(denominator) · q^{c·i+d}`,
/// summed over `i >= 0` while `c·i + d` stays within the truncation order,
/// plus a constant added after summation.
#[derive(Clone, Debug)]
pub struct TermSpec {
    pub numerator: Vec<PochhammerSpec>,
    pub denominator: Vec<PochhammerSpec>,
    /// Monomial step `c >= 1`; makes the i-th term have q-order at least
    /// `c·i`, so the partial sum converges formally.
    pub monomial_step: u64,
    pub monomial_offset: u64,
    pub constant_shift: i64,
}

impl TermSpec {
    fn validate(&self) -> Result<()> {
        if self.monomial_step == 0 {
            return Err(Error::InvalidTermSpec(
                "monomial step must be >= 1".to_string(),
            ));
        }
        for p in &self.denominator {
            if p.a_exp == 0 {
                return Err(Error::InvalidTermSpec(format!(
                    "denominator factor {p} has constant term != ±1"
                )));
            }
        }
        Ok(())
    }
}

/// Applies one Pochhammer factor set to `acc`, multiplying (numerator) or
/// dividing (denominator) by the factors with indices `from..to`.
fn apply_factors(
    acc: TruncatedSeries,
    spec: &PochhammerSpec,
    from: u64,
    to: u64,
    divide: bool,
    order: usize,
) -> Result<TruncatedSeries> {
    let mut out = acc;
    for j in from..to {
        let exp = spec.a_exp + spec.step * j;
        if exp > order as u64 {
            break;
        }
        let c = -spec.sign.as_i64();
        out = if divide {
            out.div_binomial(c, exp as usize)?
        } else {
            out.mul_binomial(c, exp as usize)
        };
    }
    Ok(out)
}

/// Evaluates `sum_i term(i)` for a [`TermSpec`], exactly, at the given order.
///
/// Consecutive terms differ by finitely many binomial factors (the affine
/// lengths grow, the monomial shifts by `q^c`), so the running term is
/// updated by O(order) binomial multiplications and divisions per step
/// instead of being rebuilt from scratch. A from-scratch evaluation is kept
/// in the tests as an oracle.
pub fn sum_ratio_terms(spec: &TermSpec, order: usize) -> Result<TruncatedSeries> {
    spec.validate()?;
    let shift = TruncatedSeries::constant(spec.constant_shift, order);
    if spec.monomial_offset > order as u64 {
        return Ok(shift);
    }

    // Term at i = 0.
    let mut term = TruncatedSeries::one(order);
    for p in &spec.numerator {
        let count = p.factor_count(Some(0))?;
        let to = count.unwrap_or(u64::MAX);
        term = apply_factors(term, p, 0, to, false, order)?;
    }
    for p in &spec.denominator {
        let count = p.factor_count(Some(0))?;
        let to = count.unwrap_or(u64::MAX);
        term = apply_factors(term, p, 0, to, true, order)?;
    }
    term = term.shift_up(spec.monomial_offset as usize);

    let mut acc = term.clone();
    let mut i = 1u64;
    while spec.monomial_step * i + spec.monomial_offset <= order as u64 {
        for p in &spec.numerator {
            if let PochLength::Affine { .. } = p.length {
                let from = p.factor_count(Some(i - 1))?.expect("affine is finite");
                let to = p.factor_count(Some(i))?.expect("affine is finite");
                term = apply_factors(term, p, from, to, false, order)?;
            }
        }
        for p in &spec.denominator {
            if let PochLength::Affine { .. } = p.length {
                let from = p.factor_count(Some(i - 1))?.expect("affine is finite");
                let to = p.factor_count(Some(i))?.expect("affine is finite");
                term = apply_factors(term, p, from, to, true, order)?;
            }
        }
        term = term.shift_up(spec.monomial_step as usize);
        acc = acc.add(&term);
        i += 1;
    }
    Ok(acc.add(&shift))
}

/// `sum_{n>=0} (-q;q^2)_n q^{2n} / (q^2;q^2)_n`, the partial-sum form of the
/// `o1` generating function.
pub fn o1_sum_spec() -> TermSpec {
    TermSpec {
        numerator: vec![PochhammerSpec::affine(Sign::Minus, 1, 2, 1, 0)],
        denominator: vec![PochhammerSpec::affine(Sign::Plus, 2, 2, 1, 0)],
        monomial_step: 2,
        monomial_offset: 0,
        constant_shift: 0,
    }
}

/// `sum_{n>=0} (-q;q^2)_n q^{4n} / (q^2;q^2)_n - 1`, the partial-sum form of
/// the `o2` generating function.
pub fn o2_sum_spec() -> TermSpec {
    TermSpec {
        numerator: vec![PochhammerSpec::affine(Sign::Minus, 1, 2, 1, 0)],
        denominator: vec![PochhammerSpec::affine(Sign::Plus, 2, 2, 1, 0)],
        monomial_step: 4,
        monomial_offset: 0,
        constant_shift: -1,
    }
}

/// `sum_{m>=0} (-q;q^2)_{m+1} q^{2m} / (q^2;q^2)_m`, the Lambda partial sum.
pub fn lambda_sum_spec() -> TermSpec {
    TermSpec {
        numerator: vec![PochhammerSpec::affine(Sign::Minus, 1, 2, 1, 1)],
        denominator: vec![PochhammerSpec::affine(Sign::Plus, 2, 2, 1, 0)],
        monomial_step: 2,
        monomial_offset: 0,
        constant_shift: 0,
    }
}

/// `sum_{n>=1} (-q;q^2)_n q^{2n} / (q^2;q^2)_{n-1} + 1`, the partial-sum form
/// of the `o3` generating function (index shifted to start at 0, which turns
/// it into `q^2 · Lambda + 1` termwise).
pub fn o3_sum_spec() -> TermSpec {
    TermSpec {
        monomial_offset: 2,
        constant_shift: 1,
        ..lambda_sum_spec()
    }
}

/// `sum_{n>=0} (q;q)_{2n} q^{4n} / (q^4;q^4)_n`, the sum both quoted closed
/// forms evaluate.
pub fn theorem_sum_spec() -> TermSpec {
    TermSpec {
        numerator: vec![PochhammerSpec::affine(Sign::Plus, 1, 1, 2, 0)],
        denominator: vec![PochhammerSpec::affine(Sign::Plus, 4, 4, 1, 0)],
        monomial_step: 4,
        monomial_offset: 0,
        constant_shift: 0,
    }
}

/// `sum_{m>=0} (-q^2;q^2)_m q^{2m} / (q;q^2)_m`.
pub fn ab1_sum_spec() -> TermSpec {
    TermSpec {
        numerator: vec![PochhammerSpec::affine(Sign::Minus, 2, 2, 1, 0)],
        denominator: vec![PochhammerSpec::affine(Sign::Plus, 1, 2, 1, 0)],
        monomial_step: 2,
        monomial_offset: 0,
        constant_shift: 0,
    }
}

/// Infinite Pochhammer product, which can always be expanded.
fn inf(sign: Sign, a_exp: u64, step: u64, order: usize) -> TruncatedSeries {
    PochhammerSpec::infinite(sign, a_exp, step)
        .expand(None, order)
        .expect("infinite products need no index")
}

/// `1 / ((1 + q^3)(q;q)_inf)`, shared by several closed forms.
fn inv_one_plus_q3_qq(order: usize) -> TruncatedSeries {
    inf(Sign::Plus, 1, 1, order)
        .mul_binomial(1, 3)
        .invert()
        .expect("constant term 1")
}

/// `(1 - q) / (1 + q^3)`.
fn rational_tail(order: usize) -> TruncatedSeries {
    TruncatedSeries::one(order)
        .mul_binomial(-1, 1)
        .div_binomial(1, 3)
        .expect("unit constant")
}

/// The named series of the catalog; see the module table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesName {
    Pod,
    C,
    PodGt2,
    O1,
    O2,
    O3Sum,
    O3Closed,
    LambdaSum,
    LambdaClosed,
    Ab1Lhs,
    Ab1Rhs,
    Ab2Lhs,
    Ab2Rhs,
}

pub const SERIES_NAMES: &str = "pod, c, podgt2, o1, o2, o3_sum, o3_closed, lambda_sum, lambda_closed, ab1_lhs, ab1_rhs, ab2_lhs, ab2_rhs";

impl SeriesName {
    pub const ALL: [SeriesName; 13] = [
        SeriesName::Pod,
        SeriesName::C,
        SeriesName::PodGt2,
        SeriesName::O1,
        SeriesName::O2,
        SeriesName::O3Sum,
        SeriesName::O3Closed,
        SeriesName::LambdaSum,
        SeriesName::LambdaClosed,
        SeriesName::Ab1Lhs,
        SeriesName::Ab1Rhs,
        SeriesName::Ab2Lhs,
        SeriesName::Ab2Rhs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeriesName::Pod => "pod",
            SeriesName::C => "c",
            SeriesName::PodGt2 => "podgt2",
            SeriesName::O1 => "o1",
            SeriesName::O2 => "o2",
            SeriesName::O3Sum => "o3_sum",
            SeriesName::O3Closed => "o3_closed",
            SeriesName::LambdaSum => "lambda_sum",
            SeriesName::LambdaClosed => "lambda_closed",
            SeriesName::Ab1Lhs => "ab1_lhs",
            SeriesName::Ab1Rhs => "ab1_rhs",
            SeriesName::Ab2Lhs => "ab2_lhs",
            SeriesName::Ab2Rhs => "ab2_rhs",
        }
    }
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for SeriesName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|name| name.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::UnknownSeriesName {
                name: s.to_string(),
                valid: SERIES_NAMES,
            })
    }
}

/// The generating-function series a family's counts are read from.
pub fn family_series_name(tag: FamilyTag) -> SeriesName {
    match tag {
        FamilyTag::Pod => SeriesName::Pod,
        FamilyTag::C => SeriesName::C,
        FamilyTag::PodGt2 => SeriesName::PodGt2,
        FamilyTag::O1 => SeriesName::O1,
        FamilyTag::O2 => SeriesName::O2,
        FamilyTag::O3 => SeriesName::O3Closed,
    }
}

/// Builds a named series at the given truncation order.
pub fn named_gf(name: SeriesName, order: usize) -> TruncatedSeries {
    let div = |a: TruncatedSeries, b: TruncatedSeries| -> TruncatedSeries {
        a.mul(&b.invert().expect("catalog denominators have constant term 1"))
    };
    match name {
        SeriesName::Pod => div(inf(Sign::Minus, 1, 2, order), inf(Sign::Plus, 2, 2, order)),
        SeriesName::C => div(inf(Sign::Plus, 2, 4, order), inf(Sign::Plus, 1, 1, order)),
        SeriesName::PodGt2 => div(inf(Sign::Minus, 3, 2, order), inf(Sign::Plus, 4, 2, order)),
        SeriesName::O1 => div(inf(Sign::Minus, 3, 2, order), inf(Sign::Plus, 2, 2, order)),
        SeriesName::O2 => div(inf(Sign::Minus, 5, 2, order), inf(Sign::Plus, 4, 2, order))
            .sub(&TruncatedSeries::one(order)),
        SeriesName::O3Sum => {
            sum_ratio_terms(&o3_sum_spec(), order).expect("catalog spec is well formed")
        }
        SeriesName::O3Closed => named_gf(SeriesName::LambdaClosed, order)
            .shift_up(2)
            .add(&TruncatedSeries::one(order)),
        SeriesName::LambdaSum => {
            sum_ratio_terms(&lambda_sum_spec(), order).expect("catalog spec is well formed")
        }
        SeriesName::LambdaClosed => {
            inf(Sign::Plus, 2, 4, order).mul(&inv_one_plus_q3_qq(order))
        }
        SeriesName::Ab1Lhs => {
            sum_ratio_terms(&ab1_sum_spec(), order).expect("catalog spec is well formed")
        }
        SeriesName::Ab1Rhs => inf(Sign::Plus, 4, 4, order)
            .mul(&inv_one_plus_q3_qq(order))
            .shift_up(1)
            .add(&rational_tail(order)),
        SeriesName::Ab2Lhs => {
            let prefactor = div(inf(Sign::Plus, 4, 4, order), inf(Sign::Plus, 1, 1, order));
            let sum = sum_ratio_terms(&theorem_sum_spec(), order)
                .expect("catalog spec is well formed");
            prefactor.mul(&sum)
        }
        SeriesName::Ab2Rhs => inf(Sign::Plus, 4, 4, order)
            .mul(&inv_one_plus_q3_qq(order))
            .shift_up(1)
            .scale(2)
            .add(&rational_tail(order)),
    }
}

/// A monomial `coeff · q^exp` with `coeff` in {-1, 0, +1}; the arguments the
/// q-binomial check accepts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SignedMonomial {
    coeff: i64,
    exp: u64,
}

impl SignedMonomial {
    pub fn new(coeff: i64, exp: u64) -> Result<Self> {
        if !(-1..=1).contains(&coeff) {
            return Err(Error::InvalidMonomialCoeff(coeff));
        }
        Ok(SignedMonomial { coeff, exp })
    }

    pub fn zero() -> Self {
        SignedMonomial { coeff: 0, exp: 0 }
    }

    pub fn coeff(&self) -> i64 {
        self.coeff
    }

    pub fn exp(&self) -> u64 {
        self.exp
    }
}

impl fmt::Display for SignedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.coeff, self.exp) {
            (0, _) => write!(f, "0"),
            (c, 0) => write!(f, "{c}"),
            (1, 1) => write!(f, "q"),
            (-1, 1) => write!(f, "-q"),
            (1, e) => write!(f, "q^{e}"),
            (-1, e) => write!(f, "-q^{e}"),
            _ => unreachable!("coeff is validated to -1, 0, +1"),
        }
    }
}

/// First coefficient at which two series differ.
#[derive(Clone, Debug, Serialize)]
pub struct CoefficientMismatch {
    pub n: usize,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one q-binomial-theorem instance check.
#[derive(Clone, Debug, Serialize)]
pub struct QBinomialReport {
    pub a: String,
    pub z: String,
    pub order: usize,
    pub equal: bool,
    pub first_mismatch: Option<CoefficientMismatch>,
}

/// Compares `sum_n (a;q)_n / (q;q)_n · z^n` against `(az;q)_inf / (z;q)_inf`
/// coefficientwise, for monomial `a` and `z`. Needs `z` with exponent >= 1 so
/// the partial sum truncates.
pub fn qbinomial_check(
    a: SignedMonomial,
    z: SignedMonomial,
    order: usize,
) -> Result<QBinomialReport> {
    if z.coeff != 0 && z.exp == 0 {
        return Err(Error::QBinomialConstantZ);
    }

    // Left side: running term (a;q)_n / (q;q)_n · z^n.
    let mut lhs = TruncatedSeries::one(order);
    if z.coeff != 0 {
        let mut term = TruncatedSeries::one(order);
        let mut n = 1u64;
        while n * z.exp <= order as u64 {
            if a.coeff != 0 {
                // (a;q)_n picks up the factor (1 - a·q^{n-1}).
                term = term.mul_binomial(-a.coeff, (a.exp + n - 1) as usize);
            }
            term = term.div_binomial(-1, n as usize)?; // /(1 - q^n)
            term = term.shift_up(z.exp as usize);
            if z.coeff == -1 {
                term = term.neg();
            }
            lhs = lhs.add(&term);
            n += 1;
        }
    }

    // Right side: (az;q)_inf / (z;q)_inf.
    let mut rhs = TruncatedSeries::one(order);
    let az = a.coeff * z.coeff;
    if az != 0 {
        let mut j = a.exp + z.exp;
        while j <= order as u64 {
            rhs = rhs.mul_binomial(-az, j as usize);
            j += 1;
        }
    }
    if z.coeff != 0 {
        let mut j = z.exp;
        while j <= order as u64 {
            rhs = rhs.div_binomial(-z.coeff, j as usize)?;
            j += 1;
        }
    }

    let first_mismatch = lhs
        .coeffs()
        .iter()
        .zip(rhs.coeffs())
        .enumerate()
        .find(|(_, (l, r))| l != r)
        .map(|(n, (l, r))| CoefficientMismatch {
            n,
            lhs: l.to_string(),
            rhs: r.to_string(),
        });
    Ok(QBinomialReport {
        a: a.to_string(),
        z: z.to_string(),
        order,
        equal: first_mismatch.is_none(),
        first_mismatch,
    })
}

/// Convenience: the coefficient of `q^n` in a named series.
pub fn named_coefficient(name: SeriesName, n: usize, order: usize) -> Result<BigInt> {
    Ok(named_gf(name, order).coefficient(n)?.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn coeffs(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c).expect("small coefficient"))
            .collect()
    }

    /// From-scratch term evaluation: each term via expand + invert + mul.
    fn sum_ratio_terms_naive(spec: &TermSpec, order: usize) -> TruncatedSeries {
        let mut acc = TruncatedSeries::constant(spec.constant_shift, order);
        let mut i = 0u64;
        while spec.monomial_step * i + spec.monomial_offset <= order as u64 {
            let mut term = TruncatedSeries::one(order);
            for p in &spec.numerator {
                term = term.mul(&p.expand(Some(i), order).unwrap());
            }
            for p in &spec.denominator {
                term = term.mul(&p.expand(Some(i), order).unwrap().invert().unwrap());
            }
            term = term.shift_up((spec.monomial_step * i + spec.monomial_offset) as usize);
            acc = acc.add(&term);
            i += 1;
        }
        acc
    }

    #[test]
    fn pochhammer_empty_product_is_one() {
        let s = PochhammerSpec::finite(Sign::Plus, 1, 1, 0)
            .expand(None, 10)
            .unwrap();
        assert_eq!(s, TruncatedSeries::one(10));
    }

    #[test]
    fn pochhammer_two_explicit_factors() {
        // (-q;q^2)_2 = (1+q)(1+q^3) = 1 + q + q^3 + q^4
        let s = PochhammerSpec::finite(Sign::Minus, 1, 2, 2)
            .expand(None, 6)
            .unwrap();
        assert_eq!(coeffs(&s), [1, 1, 0, 1, 1, 0, 0]);
    }

    #[test]
    fn pochhammer_infinite_truncation() {
        // (q^2;q^2)_inf at order 6 only sees (1-q^2)(1-q^4)(1-q^6),
        // whose expansion 1 - q^2 - q^4 + q^8 + q^10 - q^12 truncates to
        // 1 - q^2 - q^4; the q^6 coefficient cancels exactly.
        let s = inf(Sign::Plus, 2, 2, 6);
        assert_eq!(coeffs(&s), [1, 0, -1, 0, -1, 0, 0]);
        // Pentagonal-number expansion of (q;q)_inf.
        let euler = inf(Sign::Plus, 1, 1, 12);
        assert_eq!(coeffs(&euler), [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]);
        // And of (q^2;q^2)_inf at a higher order: exponents are doubled.
        let doubled = inf(Sign::Plus, 2, 2, 14);
        assert_eq!(
            coeffs(&doubled),
            [1, 0, -1, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1]
        );
    }

    #[test]
    fn pochhammer_affine_length_matches_finite() {
        let affine = PochhammerSpec::affine(Sign::Minus, 1, 2, 1, 1);
        assert_eq!(
            affine.expand(Some(1), 8).unwrap(),
            PochhammerSpec::finite(Sign::Minus, 1, 2, 2)
                .expand(None, 8)
                .unwrap()
        );
        assert!(matches!(
            affine.expand(None, 8),
            Err(Error::MissingPochhammerIndex)
        ));
        let negative = PochhammerSpec::affine(Sign::Plus, 1, 1, 1, -2);
        assert!(matches!(
            negative.expand(Some(0), 8),
            Err(Error::NegativePochhammerLength { value: -2, index: 0 })
        ));
    }

    #[test]
    fn pochhammer_rejects_zero_step() {
        assert!(matches!(
            PochhammerSpec::new(Sign::Plus, 1, 0, PochLength::Infinite),
            Err(Error::ZeroStep)
        ));
    }

    #[test]
    fn sum_matches_naive_evaluation() {
        for spec in [
            o1_sum_spec(),
            o2_sum_spec(),
            lambda_sum_spec(),
            o3_sum_spec(),
            theorem_sum_spec(),
            ab1_sum_spec(),
        ] {
            let fast = sum_ratio_terms(&spec, 48).unwrap();
            let slow = sum_ratio_terms_naive(&spec, 48);
            assert_eq!(fast, slow, "spec {spec:?}");
        }
    }

    #[test]
    fn sum_rejects_non_unit_denominator() {
        let bad = TermSpec {
            numerator: vec![],
            denominator: vec![PochhammerSpec::affine(Sign::Plus, 0, 1, 1, 1)],
            monomial_step: 1,
            monomial_offset: 0,
            constant_shift: 0,
        };
        assert!(sum_ratio_terms(&bad, 10).is_err());
    }

    #[test]
    fn lambda_sum_low_coefficients() {
        let s = sum_ratio_terms(&lambda_sum_spec(), 5).unwrap();
        assert_eq!(coeffs(&s), [1, 1, 1, 1, 2, 3]);
    }

    #[test]
    fn o2_sum_constant_term_cancels() {
        let s = sum_ratio_terms(&o2_sum_spec(), 10).unwrap();
        assert_eq!(*s.coefficient(0).unwrap(), BigInt::from(0));
    }

    #[test]
    fn o1_sum_equals_closed_form() {
        let sum = sum_ratio_terms(&o1_sum_spec(), 60).unwrap();
        assert_eq!(sum, named_gf(SeriesName::O1, 60));
    }

    #[test]
    fn theorem_sum_matches_assembled_closed_form() {
        // q/(1+q^3) + (q;q)inf/(q^4;q^4)inf · (1-q)/(1+q^3)
        //           + q (q;q)inf/(q^2;q^4)inf · Lambda
        let order = 60;
        let qq = inf(Sign::Plus, 1, 1, order);
        let t1 = TruncatedSeries::one(order)
            .shift_up(1)
            .div_binomial(1, 3)
            .unwrap();
        let t2 = qq
            .mul(&inf(Sign::Plus, 4, 4, order).invert().unwrap())
            .mul(&rational_tail(order));
        let t3 = qq
            .mul(&inf(Sign::Plus, 2, 4, order).invert().unwrap())
            .shift_up(1)
            .mul(&named_gf(SeriesName::LambdaClosed, order));
        let closed = t1.add(&t2).add(&t3);
        let sum = sum_ratio_terms(&theorem_sum_spec(), order).unwrap();
        assert_eq!(sum, closed);
    }

    #[test]
    fn named_constant_terms() {
        for name in SeriesName::ALL {
            let want = if name == SeriesName::O2 { 0 } else { 1 };
            let s = named_gf(name, 8);
            assert_eq!(
                *s.coefficient(0).unwrap(),
                BigInt::from(want),
                "constant term of {name}"
            );
        }
    }

    #[test]
    fn named_low_coefficients_match_enumeration() {
        assert_eq!(coeffs(&named_gf(SeriesName::Pod, 5)), [1, 1, 1, 2, 3, 4]);
        assert_eq!(coeffs(&named_gf(SeriesName::O1, 5)), [1, 0, 1, 1, 2, 2]);
        assert_eq!(coeffs(&named_gf(SeriesName::O2, 6)), [0, 0, 0, 0, 1, 1, 1]);
        assert_eq!(
            coeffs(&named_gf(SeriesName::O3Closed, 6)),
            [1, 0, 1, 1, 1, 1, 2]
        );
        assert_eq!(
            coeffs(&named_gf(SeriesName::PodGt2, 8)),
            [1, 0, 0, 1, 1, 1, 1, 2, 3]
        );
        assert_eq!(
            *named_gf(SeriesName::C, 10).coefficient(4).unwrap(),
            BigInt::from(3)
        );
    }

    #[test]
    fn o3_sum_and_closed_form_agree_deeply() {
        assert_eq!(
            named_gf(SeriesName::O3Sum, 200),
            named_gf(SeriesName::O3Closed, 200)
        );
    }

    #[test]
    fn series_names_parse() {
        for name in SeriesName::ALL {
            assert_eq!(name.name().parse::<SeriesName>().unwrap(), name);
        }
        assert!(matches!(
            "nope".parse::<SeriesName>(),
            Err(Error::UnknownSeriesName { .. })
        ));
    }

    #[test]
    fn qbinomial_instances_hold() {
        let m = |c, e| SignedMonomial::new(c, e).unwrap();
        for (a, z) in [
            (m(-1, 1), m(1, 2)),
            (m(-1, 1), m(1, 4)),
            (m(-1, 1), m(1, 1)),
            (m(1, 1), m(1, 2)),
            (m(-1, 2), m(-1, 3)),
        ] {
            let report = qbinomial_check(a, z, 60).unwrap();
            assert!(report.equal, "a={a:?} z={z:?}: {:?}", report.first_mismatch);
        }
    }

    #[test]
    fn qbinomial_zero_a_degenerates() {
        let z = SignedMonomial::new(1, 1).unwrap();
        let report = qbinomial_check(SignedMonomial::zero(), z, 40).unwrap();
        assert!(report.equal);
        assert!(matches!(
            qbinomial_check(SignedMonomial::new(1, 0).unwrap(), SignedMonomial::new(1, 0).unwrap(), 10),
            Err(Error::QBinomialConstantZ)
        ));
    }

    #[test]
    fn multiplying_o1_by_one_plus_q_gives_pod() {
        let order = 40;
        let lhs = named_gf(SeriesName::O1, order).mul_binomial(1, 1);
        assert_eq!(lhs, named_gf(SeriesName::Pod, order));
        // Coefficient of q^5 on the left is o1(5) + o1(4) = 4.
        assert_eq!(*lhs.coefficient(5).unwrap(), BigInt::from(4));
    }
}
