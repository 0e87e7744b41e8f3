//! Upper bounds on the size of Sidon sets in `F_2^t`, in exact arithmetic.
//!
//! * trivial bound: the largest `B` with `C(B, 2) ≤ 2^t - 1`, which is
//!   `2^{(t+1)/2}` for odd `t` and the integer nearest `√(2^{t+1})` for even `t`;
//! * Brouwer–Tolhuizen: `2^{(t+1)/2} - 2` for odd `t ≥ 7`;
//! * the sharper even-dimension bound `F - λ`, where `F = ⌊√(2^{t+1}) + ½⌋`
//!   and `λ ∈ {0, 1, 2}` depends on `F - 4 = 3a + b` and on the fractional
//!   offset `ε = √(2^{t+1}) + ½ - F`.
//!
//! `ε` is irrational, and `λ` jumps at thresholds that may involve `√2`.
//! Every comparison is therefore written as the sign of `α√2 + β` with
//! rational `α`, `β` and decided with big integers. No floating point is
//! used for decisions.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("t = {t} is outside the domain of this bound ({expected})")]
    OutOfDomain { t: u32, expected: &'static str },
    #[error("the case chain for t = {t} does not close at n = {n}")]
    ProofChainBroken { t: u32, n: BigUint },
}

fn pow2(e: u32) -> BigUint {
    BigUint::one() << e as usize
}

fn require_even_from_6(t: u32) -> Result<(), BoundsError> {
    if t < 6 || t % 2 == 1 {
        return Err(BoundsError::OutOfDomain {
            t,
            expected: "even t >= 6",
        });
    }
    Ok(())
}

/// `⌊√(2^{t+1}) + ½⌋`, the integer nearest to `√(2^{t+1})`.
pub fn nearest_sqrt_2pow(t: u32) -> BigUint {
    let n = pow2(t + 1);
    let m = n.sqrt();
    let twice = &m * 2u32 + 1u32;
    if n * 4u32 >= &twice * &twice {
        m + 1u32
    } else {
        m
    }
}

/// The counting bound: the largest `B` with `C(B, 2) ≤ 2^t - 1`.
pub fn trivial_bound(t: u32) -> BigUint {
    if t % 2 == 1 {
        pow2(t.div_ceil(2))
    } else {
        nearest_sqrt_2pow(t)
    }
}

/// Do `⌊(1 + √(2^{t+3} - 7)) / 2⌋` and `⌊√(2^{t+1}) + ½⌋` agree?
pub fn floor_equality_check(t: u32) -> Result<bool, BoundsError> {
    if t < 2 || t % 2 == 1 {
        return Err(BoundsError::OutOfDomain {
            t,
            expected: "even t >= 2",
        });
    }
    // ⌊(1 + x)/2⌋ = ⌊(1 + ⌊x⌋)/2⌋ for real x
    let root = (pow2(t + 3) - 7u32).sqrt();
    Ok((root + 1u32) / 2u32 == nearest_sqrt_2pow(t))
}

/// There is no `[n, n - t, 5]` code for `n = 2^{(t+1)/2} - 2`, odd `t ≥ 7`.
pub fn bt93_bound(t: u32) -> Result<BigUint, BoundsError> {
    if t < 7 || t.is_multiple_of(2) {
        return Err(BoundsError::OutOfDomain {
            t,
            expected: "odd t >= 7",
        });
    }
    Ok(pow2(t.div_ceil(2)) - 2u32)
}

/// Sign of `α√2 + β`.
fn sign_sqrt2(alpha: &BigRational, beta: &BigRational) -> Ordering {
    let sa = alpha.cmp(&BigRational::zero());
    let sb = beta.cmp(&BigRational::zero());
    if sa == Ordering::Equal {
        return sb;
    }
    if sb == Ordering::Equal || sa == sb {
        return sa;
    }
    // opposite signs: the larger magnitude wins; 2α² = β² is impossible
    let two_a2 = alpha * alpha * BigRational::from_integer(2.into());
    if two_a2 > beta * beta {
        sa
    } else {
        sb
    }
}

/// A value `c√2 + d`, used for `ε` and its thresholds.
#[derive(Debug, Clone)]
struct QSqrt2 {
    c: BigRational,
    d: BigRational,
}

impl QSqrt2 {
    fn rational(d: BigRational) -> Self {
        QSqrt2 {
            c: BigRational::zero(),
            d,
        }
    }

    fn le(&self, other: &QSqrt2) -> bool {
        sign_sqrt2(&(&self.c - &other.c), &(&self.d - &other.d)) != Ordering::Greater
    }
}

fn ratio(num: BigInt, den_pow2: u32) -> BigRational {
    BigRational::new(num, BigInt::from(pow2(den_pow2)))
}

/// `ε = √(2^{t+1}) + ½ - F = 2^{t/2}·√2 + ½ - F` for even `t`.
fn epsilon(t: u32, f: &BigUint) -> QSqrt2 {
    QSqrt2 {
        c: BigRational::from_integer(BigInt::from(pow2(t / 2))),
        d: ratio(1.into(), 1) - BigRational::from_integer(BigInt::from(f.clone())),
    }
}

/// A case threshold that `ε` is compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EpsThreshold {
    /// `1 - 2^{-(t-4)/2}`
    OddB1,
    /// `1/2`
    Half,
    /// `1 - 2^{-(t-5)/2}`
    EvenB1Low,
    /// `1 - 2^{-(t+7)/2}`
    EvenB1High,
}

impl EpsThreshold {
    /// The threshold as `c√2 + d` for even `t ≥ 6`.
    fn value(self, t: u32) -> QSqrt2 {
        let one = BigRational::one();
        match self {
            EpsThreshold::OddB1 => QSqrt2::rational(one - ratio(1.into(), (t - 4) / 2)),
            EpsThreshold::Half => QSqrt2::rational(ratio(1.into(), 1)),
            // 2^{-(t-5)/2} = 2^{-(t-4)/2}·√2
            EpsThreshold::EvenB1Low => QSqrt2 {
                c: -ratio(1.into(), (t - 4) / 2),
                d: one,
            },
            // 2^{-(t+7)/2} = 2^{-(t+8)/2}·√2
            EpsThreshold::EvenB1High => QSqrt2 {
                c: -ratio(1.into(), (t + 8) / 2),
                d: one,
            },
        }
    }
}

impl fmt::Display for EpsThreshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EpsThreshold::OddB1 => "1 - 2^(-(t-4)/2)",
            EpsThreshold::Half => "1/2",
            EpsThreshold::EvenB1Low => "1 - 2^(-(t-5)/2)",
            EpsThreshold::EvenB1High => "1 - 2^(-(t+7)/2)",
        })
    }
}

/// One exact comparison `ε ≤ threshold`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EpsCheck {
    pub threshold: EpsThreshold,
    pub eps_at_most: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaBreakdown {
    pub t: u32,
    /// `⌊√(2^{t+1}) + ½⌋`
    pub f: BigUint,
    pub a: BigUint,
    pub b: u8,
    /// The threshold comparisons that decided `λ`, in the order made.
    pub eps_class: Vec<EpsCheck>,
    pub lambda: u8,
    pub n_t: BigUint,
}

impl LambdaBreakdown {
    pub fn a_is_odd(&self) -> bool {
        self.a.bit(0)
    }

    /// `ε` truncated to three decimals, for display only.
    pub fn eps_decimal_approx(&self) -> f64 {
        eps_thousandths(self.t, &self.f) as f64 / 1000.0
    }
}

/// `⌊1000·ε⌋`.
fn eps_thousandths(t: u32, f: &BigUint) -> u64 {
    let scale = BigUint::from(1000u32);
    let root = (pow2(t + 1) * &scale * &scale).sqrt();
    let eps = BigInt::from(root) + BigInt::from(500u32) - BigInt::from(f * &scale);
    eps.to_u64().expect("0 <= ε < 1")
}

/// `(a, b)` with `x = 3a + b`, `b ∈ {0, 1, 2}`.
fn split3(x: &BigUint) -> (BigUint, u8) {
    let b = (x % 3u32).to_u8().expect("remainder < 3");
    (x / 3u32, b)
}

pub fn lambda_breakdown(t: u32) -> Result<LambdaBreakdown, BoundsError> {
    require_even_from_6(t)?;
    let f = nearest_sqrt_2pow(t);
    let (a, b) = split3(&(&f - 4u32));
    let eps = epsilon(t, &f);
    let mut eps_class = Vec::new();
    let mut at_most = |threshold: EpsThreshold| {
        let eps_at_most = eps.le(&threshold.value(t));
        eps_class.push(EpsCheck {
            threshold,
            eps_at_most,
        });
        eps_at_most
    };
    let lambda = match (a.bit(0), b) {
        (true, 0) => 1,
        (true, 1) => {
            if at_most(EpsThreshold::OddB1) {
                2
            } else {
                1
            }
        }
        (true, _) => 2,
        (false, 0) => {
            if at_most(EpsThreshold::Half) {
                2
            } else {
                1
            }
        }
        (false, 1) => {
            if at_most(EpsThreshold::EvenB1Low) {
                2
            } else if at_most(EpsThreshold::EvenB1High) {
                1
            } else {
                0
            }
        }
        (false, _) => 0,
    };
    let n_t = &f - lambda as u32;
    Ok(LambdaBreakdown {
        t,
        f,
        a,
        b,
        eps_class,
        lambda,
        n_t,
    })
}

/// Upper bound on `smax(t)` for `t ≥ 6`: no `[n, n - t, 5]` code exists for
/// `n` equal to this value.
pub fn new_bound(t: u32) -> Result<BigUint, BoundsError> {
    if t < 6 {
        return Err(BoundsError::OutOfDomain {
            t,
            expected: "t >= 6",
        });
    }
    if t % 2 == 1 {
        Ok(pow2(t.div_ceil(2)) - 2u32)
    } else {
        Ok(lambda_breakdown(t)?.n_t)
    }
}

/// Is there provably no binary linear `[n, n - t, 5]` code? True for every
/// `n ≥ new_bound(t)` (shortening carries nonexistence upwards).
pub fn nonexistent_d5(t: u32, n: &BigUint) -> Result<bool, BoundsError> {
    Ok(*n >= new_bound(t)?)
}

/// Which lower bound on `2s` applies to a `[n, n - t, 5]` code; keyed by the
/// parity of `a` and the value of `b` in `n - 2 = 3a + b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[allow(non_camel_case_types)]
pub enum ProofCase {
    ODD_B0,
    ODD_B1,
    ODD_B2,
    EVEN_B0,
    EVEN_B1,
    EVEN_B2,
}

impl ProofCase {
    pub fn of_length(n: &BigUint) -> ProofCase {
        let (a, b) = split3(&(n - 2u32));
        match (a.bit(0), b) {
            (true, 0) => ProofCase::ODD_B0,
            (true, 1) => ProofCase::ODD_B1,
            (true, _) => ProofCase::ODD_B2,
            (false, 0) => ProofCase::EVEN_B0,
            (false, 1) => ProofCase::EVEN_B1,
            (false, _) => ProofCase::EVEN_B2,
        }
    }

    /// The case's lower bound on `2s` at length `n`, exactly.
    pub fn two_s_lower_bound(self, n: &BigUint) -> BigRational {
        let n = BigInt::from(n.clone());
        let sq = |x: BigInt| &x * &x;
        // 4 · (lower bound on 2s)
        let four_times: BigInt = match self {
            ProofCase::ODD_B2 => sq(&n + 3) * 4 - 28,
            ProofCase::ODD_B1 => sq(&n * 2 + 5) - 33,
            ProofCase::ODD_B0 => sq(&n * 2 + 1) + 7,
            ProofCase::EVEN_B2 => sq(&n * 2 + 3) - 1,
            ProofCase::EVEN_B1 => sq(&n * 2 + 5) - 57,
            ProofCase::EVEN_B0 => sq(&n + 2) * 4 + 4,
        };
        BigRational::new(four_times, BigInt::from(4))
    }
}

impl fmt::Display for ProofCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One length visited by the case chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofHop {
    pub n: BigUint,
    pub case_id: ProofCase,
    pub two_s_bound: BigRational,
    /// `2s > 2^{t+1}` at this length.
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofCheckReport {
    pub t: u32,
    pub case_id: ProofCase,
    pub n_used: BigUint,
    /// Lower bound on `2s` at `n_used`.
    pub two_s_bound: BigRational,
    pub inequality_holds: bool,
    /// Every length from `F - 2` up to `n_used`.
    pub hops: Vec<ProofHop>,
}

/// Replays the nonexistence argument: the chain starts at `n = F - 2` and
/// moves up one length at a time, as the `λ` table dictates, until it
/// reaches `n_t`. There `2s > 2^{t+1}` must hold, contradicting
/// `s ≤ 2^t` for an `[n, n - t, 5]` code.
pub fn proof_case_check(t: u32) -> Result<ProofCheckReport, BoundsError> {
    let lb = lambda_breakdown(t)?;
    let target = BigRational::from_integer(BigInt::from(pow2(t + 1)));
    let mut hops = Vec::new();
    let mut n = &lb.f - 2u32;
    loop {
        let case_id = ProofCase::of_length(&n);
        let two_s_bound = case_id.two_s_lower_bound(&n);
        let holds = two_s_bound > target;
        hops.push(ProofHop {
            n: n.clone(),
            case_id,
            two_s_bound,
            holds,
        });
        if n == lb.n_t {
            break;
        }
        n += 1u32;
    }
    let last = hops.last().expect("at least one hop").clone();
    if !last.holds {
        return Err(BoundsError::ProofChainBroken { t, n: last.n });
    }
    Ok(ProofCheckReport {
        t,
        case_id: last.case_id,
        n_used: last.n,
        two_s_bound: last.two_s_bound,
        inequality_holds: last.holds,
        hops,
    })
}

/// One line of the bounds table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundRow {
    pub t: u32,
    pub trivial: BigUint,
    pub new_bound: Option<BigUint>,
    pub bt93: Option<BigUint>,
    pub lambda: Option<LambdaBreakdown>,
}

pub const CSV_HEADER: &str = "t,trivial,new_bound,bt93,F,a,b,lambda";

impl BoundRow {
    pub fn new(t: u32) -> BoundRow {
        BoundRow {
            t,
            trivial: trivial_bound(t),
            new_bound: new_bound(t).ok(),
            bt93: bt93_bound(t).ok(),
            lambda: lambda_breakdown(t).ok(),
        }
    }

    pub fn to_csv(&self) -> String {
        fn opt<T: ToString>(v: Option<T>) -> String {
            v.map(|v| v.to_string()).unwrap_or_default()
        }
        let lb = self.lambda.as_ref();
        format!(
            "{},{},{},{},{},{},{},{}",
            self.t,
            self.trivial,
            opt(self.new_bound.as_ref()),
            opt(self.bt93.as_ref()),
            opt(lb.map(|l| &l.f)),
            opt(lb.map(|l| &l.a)),
            opt(lb.map(|l| l.b)),
            opt(lb.map(|l| l.lambda)),
        )
    }
}

pub fn bound_rows(t_min: u32, t_max: u32) -> Vec<BoundRow> {
    (t_min..=t_max).map(BoundRow::new).collect()
}

/// A line of the distance-4 table: no `[n, k, 5]` code with `k = n - t`.
#[derive(Debug, Clone, PartialEq)]
pub struct Cor19Row {
    pub t: u32,
    pub f: BigUint,
    pub a: BigUint,
    pub b: u8,
    pub eps_decimal_approx: f64,
    pub lambda: u8,
    pub n: BigUint,
    pub k: BigUint,
}

pub const COR19_DIMS: [u32; 6] = [16, 18, 20, 22, 24, 26];

pub fn cor19_table() -> Vec<Cor19Row> {
    COR19_DIMS
        .iter()
        .map(|&t| {
            let lb = lambda_breakdown(t).expect("dimensions are even and >= 6");
            Cor19Row {
                t,
                eps_decimal_approx: lb.eps_decimal_approx(),
                k: &lb.n_t - t,
                f: lb.f,
                a: lb.a,
                b: lb.b,
                lambda: lb.lambda,
                n: lb.n_t,
            }
        })
        .collect()
}
