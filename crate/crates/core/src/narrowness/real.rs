//! Sums of rational powers: exact where possible, 192-bit floats otherwise.

use std::cmp::Ordering;
use std::fmt;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub const PRECISION_BITS: usize = 192;
/// Width of the band around a threshold inside which an approximate value
/// decides nothing.
pub const TOLERANCE: f64 = 1e-9;
const RM: RoundingMode = RoundingMode::ToEven;

fn consts() -> Consts {
    Consts::new().expect("astro-float constants cache")
}

fn big_float_of_int(x: &BigInt, cc: &mut Consts) -> BigFloat {
    BigFloat::parse(&x.to_string(), Radix::Dec, PRECISION_BITS, RM, cc)
}

pub fn to_big_float(x: &BigRational) -> BigFloat {
    let mut cc = consts();
    let n = big_float_of_int(x.numer(), &mut cc);
    let d = big_float_of_int(x.denom(), &mut cc);
    n.div(&d, PRECISION_BITS, RM)
}

/// A nonnegative real that is either known exactly or to 192 bits.
#[derive(Clone, Debug)]
pub enum Value {
    Exact(BigRational),
    Approx(BigFloat),
}

impl Value {
    pub fn zero() -> Self {
        Value::Exact(BigRational::zero())
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Value::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            Value::Exact(r) => Some(r),
            Value::Approx(_) => None,
        }
    }

    pub fn to_big_float(&self) -> BigFloat {
        match self {
            Value::Exact(r) => to_big_float(r),
            Value::Approx(f) => f.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Value::Approx(f) => f.to_string().parse().unwrap_or(f64::NAN),
        }
    }

    pub fn add(&self, other: &Value) -> Value {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => Value::Exact(a + b),
            _ => Value::Approx(self.to_big_float().add(&other.to_big_float(), PRECISION_BITS, RM)),
        }
    }

    pub fn mul(&self, other: &Value) -> Value {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => Value::Exact(a * b),
            _ => Value::Approx(self.to_big_float().mul(&other.to_big_float(), PRECISION_BITS, RM)),
        }
    }

    /// Exact comparison when both sides are exact; otherwise `None` when
    /// the two are within [`TOLERANCE`] of each other.
    pub fn compare(&self, other: &Value) -> Option<Ordering> {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => Some(a.cmp(b)),
            _ => {
                let a = self.to_big_float();
                let b = other.to_big_float();
                let diff = a.sub(&b, PRECISION_BITS, RM);
                let tol = BigFloat::from_f64(TOLERANCE, PRECISION_BITS);
                let mag = if diff.is_negative() { diff.neg() } else { diff.clone() };
                if mag.cmp(&tol).is_some_and(|c| c <= 0) {
                    None
                } else if diff.is_negative() {
                    Some(Ordering::Less)
                } else {
                    Some(Ordering::Greater)
                }
            }
        }
    }

    /// Definitely greater than `other`.
    pub fn exceeds(&self, other: &Value) -> bool {
        self.compare(other) == Some(Ordering::Greater)
    }
}

impl From<BigRational> for Value {
    fn from(r: BigRational) -> Self {
        Value::Exact(r)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(r) => write!(f, "{r}"),
            Value::Approx(_) => write!(f, "{:.12}", self.to_f64()),
        }
    }
}

/// Exact `k`-th root of a nonnegative integer, if there is one.
fn exact_root(x: &BigInt, k: u32) -> Option<BigInt> {
    let r = x.nth_root(k);
    (num_traits::pow(r.clone(), k as usize) == *x).then_some(r)
}

/// `x^alpha` for `x >= 0` and rational `alpha > 0`; exact whenever the
/// result is rational.
pub fn pow_rational(x: &BigRational, alpha: &BigRational) -> Result<Value> {
    if x.is_negative() || !alpha.is_positive() {
        return Err(Error::precondition("power needs x >= 0 and alpha > 0"));
    }
    if x.is_zero() || x.is_one() {
        return Ok(Value::Exact(x.clone()));
    }
    let p = alpha.numer().to_u32();
    let q = alpha.denom().to_u32();
    if let (Some(p), Some(q)) = (p, q) {
        if p <= 4096 {
            let xp = num_traits::pow(x.clone(), p as usize);
            if q == 1 {
                return Ok(Value::Exact(xp));
            }
            if let (Some(n), Some(d)) = (exact_root(xp.numer(), q), exact_root(xp.denom(), q)) {
                return Ok(Value::Exact(BigRational::new(n, d)));
            }
        }
    }
    let mut cc = consts();
    let base = to_big_float(x);
    let e = to_big_float(alpha);
    Ok(Value::Approx(base.pow(&e, PRECISION_BITS, RM, &mut cc)))
}

/// `Σ f(v)^alpha`.
pub fn power_sum<'a>(f: impl IntoIterator<Item = &'a BigRational>, alpha: &BigRational) -> Result<Value> {
    let mut acc = Value::zero();
    for x in f {
        acc = acc.add(&pow_rational(x, alpha)?);
    }
    Ok(acc)
}

/// Parses a decimal or `p/q` string into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::precondition(format!("`{s}` is not a rational number"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(p, q));
    }
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if frac.chars().any(|c| !c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int}{frac}");
    let n: BigInt = digits.parse().map_err(|_| bad())?;
    let d = num_traits::pow(BigInt::from(10), frac.len());
    Ok(BigRational::new(n, d))
}

/// Rational approximation of a float, for reporting only.
pub fn approx_rational(x: f64) -> BigRational {
    BigRational::from_float(x).unwrap_or_else(BigRational::one)
}
