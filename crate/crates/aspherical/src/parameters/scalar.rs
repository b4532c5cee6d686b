//! The scalar model `ℚ + ℚκ + ℚκ⁻¹`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{int, is_integer, parse_rational, to_pq, to_short, Rational};

/// How the symbol κ is interpreted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum KappaMode {
    /// κ is a fixed nonzero rational; every scalar collapses to one rational.
    Rational(Rational),
    /// κ is transcendental; `1, κ, κ⁻¹` are linearly independent over ℚ.
    Transcendental,
}

/// An element `a + bκ + cκ⁻¹` with rational coefficients.
///
/// In [`KappaMode::Rational`] mode the value is stored collapsed (`b = c = 0`).
/// Equality and hashing are coefficient-wise, so a collapsed rational compares
/// equal to the transcendental-mode constant with the same value.
///
/// Addition and subtraction panic when the two operands carry different values
/// of κ and both actually depend on it; use [`ExactScalar::try_add`] when the
/// operands come from untrusted input.
#[derive(Clone, Debug)]
pub struct ExactScalar {
    a: Rational,
    b: Rational,
    c: Rational,
    mode: KappaMode,
}

impl ExactScalar {
    /// `a + bκ + cκ⁻¹` in the given mode (collapsed immediately for rational κ).
    pub fn new(a: Rational, b: Rational, c: Rational, mode: KappaMode) -> Result<Self> {
        match &mode {
            KappaMode::Rational(r) => {
                if r.is_zero() {
                    return Err(Error::ZeroKappa);
                }
                let value = a + b * r + c / r;
                Ok(Self { a: value, b: Rational::zero(), c: Rational::zero(), mode })
            }
            KappaMode::Transcendental => Ok(Self { a, b, c, mode }),
        }
    }

    /// A rational constant. It carries no κ-dependence and combines with any mode.
    pub fn constant(q: Rational) -> Self {
        Self { a: q, b: Rational::zero(), c: Rational::zero(), mode: KappaMode::Transcendental }
    }

    /// The integer `k` as a constant.
    pub fn from_int(k: i64) -> Self {
        Self::constant(int(k))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    /// The symbol κ itself in the given mode.
    pub fn kappa(mode: &KappaMode) -> Self {
        match mode {
            KappaMode::Rational(r) => {
                Self { a: r.clone(), b: Rational::zero(), c: Rational::zero(), mode: mode.clone() }
            }
            KappaMode::Transcendental => {
                Self { a: Rational::zero(), b: Rational::one(), c: Rational::zero(), mode: KappaMode::Transcendental }
            }
        }
    }

    /// `κ⁻¹` in the given mode.
    pub fn kappa_inv(mode: &KappaMode) -> Self {
        match mode {
            KappaMode::Rational(r) => {
                Self { a: r.recip(), b: Rational::zero(), c: Rational::zero(), mode: mode.clone() }
            }
            KappaMode::Transcendental => {
                Self { a: Rational::zero(), b: Rational::zero(), c: Rational::one(), mode: KappaMode::Transcendental }
            }
        }
    }

    /// Constant coefficient.
    pub fn a(&self) -> &Rational {
        &self.a
    }

    /// Coefficient of κ.
    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// Coefficient of κ⁻¹.
    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn mode(&self) -> &KappaMode {
        &self.mode
    }

    /// True when the value does not depend on κ.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero()
    }

    /// The value as a rational, when it does not depend on κ.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    /// True when the value is an integer (`b = c = 0` and `a ∈ ℤ`).
    pub fn is_integer(&self) -> bool {
        self.is_rational() && is_integer(&self.a)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.is_rational()
    }

    /// Multiplication by a rational.
    pub fn scale(&self, q: &Rational) -> Self {
        Self { a: &self.a * q, b: &self.b * q, c: &self.c * q, mode: self.mode.clone() }
    }

    fn join_mode(&self, other: &Self) -> Result<KappaMode> {
        match (&self.mode, &other.mode) {
            (x, y) if x == y => Ok(x.clone()),
            (KappaMode::Transcendental, r @ KappaMode::Rational(_)) if self.is_rational() => Ok(r.clone()),
            (r @ KappaMode::Rational(_), KappaMode::Transcendental) if other.is_rational() => Ok(r.clone()),
            _ => Err(Error::MixedKappa),
        }
    }

    /// Checked addition.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let mode = self.join_mode(other)?;
        Ok(Self { a: &self.a + &other.a, b: &self.b + &other.b, c: &self.c + &other.c, mode })
    }

    /// Checked subtraction.
    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// Product, provided it stays in the span `{1, κ, κ⁻¹}`.
    ///
    /// The κ² and κ⁻² coefficients of the formal product are `b·b'` and `c·c'`;
    /// the product is rejected when either is nonzero.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let mode = self.join_mode(other)?;
        let k2 = &self.b * &other.b;
        let km2 = &self.c * &other.c;
        if !k2.is_zero() || !km2.is_zero() {
            return Err(Error::OutOfSpan(format!("({self})·({other})")));
        }
        let a = &self.a * &other.a + &self.b * &other.c + &self.c * &other.b;
        let b = &self.a * &other.b + &self.b * &other.a;
        let c = &self.a * &other.c + &self.c * &other.a;
        Ok(Self { a, b, c, mode })
    }

    /// Quotient by a rational, a pure multiple of κ, or a pure multiple of κ⁻¹.
    pub fn try_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::ZeroKappa);
        }
        let mode = self.join_mode(other)?;
        let inverse = if other.is_rational() {
            Self::constant(other.a.recip())
        } else if other.a.is_zero() && other.c.is_zero() {
            Self::kappa_inv(&KappaMode::Transcendental).scale(&other.b.recip())
        } else if other.a.is_zero() && other.b.is_zero() {
            Self::kappa(&KappaMode::Transcendental).scale(&other.c.recip())
        } else {
            return Err(Error::OutOfSpan(format!("1/({other})")));
        };
        let mut q = self.try_mul(&inverse)?;
        q.mode = mode;
        Ok(q)
    }

    /// True when `self · x` is an integer (false when the product leaves the span,
    /// since a nonzero κ² or κ⁻² term can never cancel).
    pub fn times_is_integer(&self, x: &Self) -> bool {
        self.try_mul(x).map(|p| p.is_integer()).unwrap_or(false)
    }

    /// Parses a sum of terms such as `-1/2`, `3κ`, `1/2k^-1`, `2 - κ + κ⁻¹`.
    ///
    /// `k`, `kappa` and `κ` denote the symbol, with `^-1` or `⁻¹` for the inverse.
    /// The result lives in `mode` (symbolic terms are evaluated when κ is rational).
    pub fn parse(text: &str, mode: &KappaMode) -> Result<Self> {
        let normalized =
            text.replace("kappa", "κ").replace('k', "κ").replace("⁻¹", "^-1").replace('−', "-").replace(' ', "");
        if normalized.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        // Split into signed terms, keeping the exponent's minus sign attached.
        let mut terms: Vec<String> = Vec::new();
        let mut current = String::new();
        for ch in normalized.chars() {
            if (ch == '+' || ch == '-') && !current.is_empty() && !current.ends_with('^') {
                terms.push(std::mem::take(&mut current));
            }
            current.push(ch);
        }
        terms.push(current);
        let (mut a, mut b, mut c) = (Rational::zero(), Rational::zero(), Rational::zero());
        for term in terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(rest) => (-Rational::one(), rest.to_string()),
                None => (Rational::one(), term.trim_start_matches('+').to_string()),
            };
            if let Some(pos) = body.find('κ') {
                let coeff_text = body[..pos].trim_end_matches('*');
                let coeff = if coeff_text.is_empty() { Rational::one() } else { parse_rational(coeff_text)? };
                match &body[pos + 'κ'.len_utf8()..] {
                    "" => b += sign * coeff,
                    "^-1" => c += sign * coeff,
                    rest => return Err(Error::Parse(format!("unexpected {rest:?} in {text:?}"))),
                }
            } else {
                a += sign * parse_rational(&body)?;
            }
        }
        Self::new(a, b, c, mode.clone())
    }
}

impl PartialEq for ExactScalar {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && self.c == other.c
    }
}

impl Eq for ExactScalar {}

impl Hash for ExactScalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
        self.c.hash(state);
    }
}

impl From<Rational> for ExactScalar {
    fn from(q: Rational) -> Self {
        Self::constant(q)
    }
}

impl From<i64> for ExactScalar {
    fn from(k: i64) -> Self {
        Self::from_int(k)
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar { a: -&self.a, b: -&self.b, c: -&self.c, mode: self.mode.clone() }
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

impl Add<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        self.try_add(rhs).expect("adding scalars with different values of κ")
    }
}

impl Sub<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        self.try_sub(rhs).expect("subtracting scalars with different values of κ")
    }
}

impl Add for ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: ExactScalar) -> ExactScalar {
        &self + &rhs
    }
}

impl Sub for ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: ExactScalar) -> ExactScalar {
        &self - &rhs
    }
}

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&ExactScalar> for ExactScalar {
    fn sub_assign(&mut self, rhs: &ExactScalar) {
        *self = &*self - rhs;
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(bool, String)> = Vec::new();
        let mut push = |q: &Rational, suffix: &str| {
            if q.is_zero() {
                return;
            }
            let magnitude = if q < &Rational::zero() { -q.clone() } else { q.clone() };
            let body = if suffix.is_empty() {
                to_short(&magnitude)
            } else if magnitude.is_one() {
                suffix.to_string()
            } else {
                format!("{}{}", to_short(&magnitude), suffix)
            };
            parts.push((q < &Rational::zero(), body));
        };
        push(&self.a, "");
        push(&self.b, "κ");
        push(&self.c, "κ⁻¹");
        if parts.is_empty() {
            return write!(f, "0");
        }
        for (idx, (negative, body)) in parts.iter().enumerate() {
            match (idx, negative) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarJson {
    a: String,
    b: String,
    c: String,
    kappa: String,
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let kappa = match &self.mode {
            KappaMode::Rational(r) => to_pq(r),
            KappaMode::Transcendental => "transcendental".to_string(),
        };
        ScalarJson { a: to_pq(&self.a), b: to_pq(&self.b), c: to_pq(&self.c), kappa }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = ScalarJson::deserialize(d)?;
        let mode = match raw.kappa.as_str() {
            "transcendental" => KappaMode::Transcendental,
            other => KappaMode::Rational(parse_rational(other).map_err(D::Error::custom)?),
        };
        let parse = |t: &str| parse_rational(t).map_err(D::Error::custom);
        ExactScalar::new(parse(&raw.a)?, parse(&raw.b)?, parse(&raw.c)?, mode).map_err(D::Error::custom)
    }
}
