//! Exact arithmetic substrate: polynomials in the intensity λ over
//! arbitrary-precision integers, plus the combinatorial numbers used
//! throughout (binomials, Catalan numbers, odd double factorials,
//! arcsine moments).
//!
//! Moment coefficients grow super-exponentially, so coefficients are
//! `BigInt` rather than machine integers; a separate floating-point
//! evaluation path exists for large-scale numeric work.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Sub};

/// Polynomial in the intensity λ with `BigInt` coefficients, stored in
/// ascending degree order. Canonical form: no trailing zero coefficient,
/// so the zero polynomial is the empty list and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LambdaPoly {
    coeffs: Vec<BigInt>,
}

impl LambdaPoly {
    pub fn zero() -> Self {
        LambdaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        LambdaPoly::constant(1)
    }

    /// The monomial λ.
    pub fn lambda() -> Self {
        LambdaPoly {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    /// The monomial λ^j.
    pub fn lambda_pow(j: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); j + 1];
        coeffs[j] = BigInt::one();
        LambdaPoly { coeffs }
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        LambdaPoly::from_coeffs(vec![c.into()])
    }

    /// Builds a polynomial from ascending coefficients, trimming to
    /// canonical form.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        LambdaPoly { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        LambdaPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of λ^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return LambdaPoly::zero();
        }
        LambdaPoly {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Multiplies by λ^j (degree shift).
    pub fn shift(&self, j: usize) -> Self {
        if self.is_zero() {
            return LambdaPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); j];
        coeffs.extend_from_slice(&self.coeffs);
        LambdaPoly { coeffs }
    }

    /// Exact Horner evaluation at an integer point.
    pub fn eval_bigint(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// Floating-point Horner evaluation. Exact whenever coefficients and
    /// partial results stay below 2^53.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::INFINITY);
        }
        acc
    }

    /// Sum of coefficients, i.e. the value at λ = 1.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

impl Add<&LambdaPoly> for &LambdaPoly {
    type Output = LambdaPoly;

    fn add(self, rhs: &LambdaPoly) -> LambdaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let mut c = self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero);
            if let Some(d) = rhs.coeffs.get(k) {
                c += d;
            }
            coeffs.push(c);
        }
        LambdaPoly::from_coeffs(coeffs)
    }
}

impl Sub<&LambdaPoly> for &LambdaPoly {
    type Output = LambdaPoly;

    fn sub(self, rhs: &LambdaPoly) -> LambdaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let mut c = self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero);
            if let Some(d) = rhs.coeffs.get(k) {
                c -= d;
            }
            coeffs.push(c);
        }
        LambdaPoly::from_coeffs(coeffs)
    }
}

impl Mul<&LambdaPoly> for &LambdaPoly {
    type Output = LambdaPoly;

    fn mul(self, rhs: &LambdaPoly) -> LambdaPoly {
        if self.is_zero() || rhs.is_zero() {
            return LambdaPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LambdaPoly::from_coeffs(coeffs)
    }
}

impl AddAssign<&LambdaPoly> for LambdaPoly {
    fn add_assign(&mut self, rhs: &LambdaPoly) {
        *self = &*self + rhs;
    }
}

impl fmt::Display for LambdaPoly {
    /// Renders as e.g. `l^3+5*l`, highest degree first; zero renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "l")?;
                    } else {
                        write!(f, "l^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LambdaPoly({self})")
    }
}

// JSON form is the ascending coefficient array, e.g. λ³+5λ ↔ [0,5,0,1].
// Coefficients beyond i64 range are written as decimal strings.
impl Serialize for LambdaPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LambdaPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coeff {
            Int(i64),
            Big(String),
        }
        let raw = Vec::<Coeff>::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(raw.len());
        for c in raw {
            coeffs.push(match c {
                Coeff::Int(v) => BigInt::from(v),
                Coeff::Big(s) => s
                    .parse::<BigInt>()
                    .map_err(|e| D::Error::custom(format!("bad coefficient: {e}")))?,
            });
        }
        Ok(LambdaPoly::from_coeffs(coeffs))
    }
}

/// Binomial coefficient C(n, k), exact.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Catalan number C_k.
pub fn catalan(k: u64) -> BigInt {
    binomial(2 * k, k) / BigInt::from(k + 1)
}

/// Odd double factorial (2k-1)!! with the empty-product convention
/// (2·0-1)!! = 1.
pub fn double_factorial_odd(k: u64) -> BigInt {
    let mut acc = BigInt::one();
    let mut f = BigInt::one();
    for _ in 1..=k {
        acc *= &f;
        f += 2;
    }
    acc
}

/// 2k-th moment A_k = (2k-1)!!/k! of the standard arcsine law, as an
/// exact rational. Satisfies A_k/(k+1) = C_k/2^k.
pub fn arcsine_moment(k: u64) -> BigRational {
    let mut fact = BigInt::one();
    for i in 2..=k {
        fact *= BigInt::from(i);
    }
    BigRational::new(double_factorial_odd(k), fact)
}
