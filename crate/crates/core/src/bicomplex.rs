//! Commutative bicomplex ring over a scalar ring S: basis {1, i, j, ij}
//! with i^2 = -1, j^2 = -1, ij = ji, hence (ij)^2 = +1.
//!
//! The ring has zero divisors, for example (1 + ij)(1 - ij) = 0, so
//! inversion is partial. It is routed through the idempotent decomposition
//! at e1 = (1 + ij)/2 and e2 = (1 - ij)/2: splitting is a componentwise
//! ring isomorphism onto pairs of complex numbers over S, and a value is
//! invertible exactly when both components are nonzero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalars::{Rational, Scalar};
use crate::BcjError;

/// Bicomplex number w0 + w1*i + w2*j + w3*ij over the scalar ring S.
///
/// Equivalently w = z1 + j*z2 with z1 = w0 + i*w1 and z2 = w2 + i*w3.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bicomplex<S> {
    pub w0: S,
    pub w1: S,
    pub w2: S,
    pub w3: S,
}

/// The three conjugation kinds: negate the i-part, the j-part, or both.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConjKind {
    I,
    J,
    IJ,
}

impl ConjKind {
    pub const ALL: [ConjKind; 3] = [ConjKind::I, ConjKind::J, ConjKind::IJ];
}

impl fmt::Display for ConjKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConjKind::I => "i",
            ConjKind::J => "j",
            ConjKind::IJ => "ij",
        })
    }
}

impl FromStr for ConjKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "i" => Ok(ConjKind::I),
            "j" => Ok(ConjKind::J),
            "ij" => Ok(ConjKind::IJ),
            other => Err(format!("unknown conjugation kind: {other}")),
        }
    }
}

impl<S: Scalar> Bicomplex<S> {
    pub fn new(w0: S, w1: S, w2: S, w3: S) -> Self {
        Bicomplex { w0, w1, w2, w3 }
    }

    pub fn from_scalar(s: S) -> Self {
        Bicomplex::new(s, S::zero(), S::zero(), S::zero())
    }

    pub fn from_ints(w0: i64, w1: i64, w2: i64, w3: i64) -> Self {
        Bicomplex::new(
            S::from_i64(w0),
            S::from_i64(w1),
            S::from_i64(w2),
            S::from_i64(w3),
        )
    }

    pub fn unit_i() -> Self {
        Bicomplex::from_ints(0, 1, 0, 0)
    }

    pub fn unit_j() -> Self {
        Bicomplex::from_ints(0, 0, 1, 0)
    }

    pub fn unit_ij() -> Self {
        Bicomplex::from_ints(0, 0, 0, 1)
    }

    /// Multiply every component by the scalar lambda.
    pub fn scale(&self, lambda: &S) -> Self {
        Bicomplex::new(
            self.w0.clone() * lambda.clone(),
            self.w1.clone() * lambda.clone(),
            self.w2.clone() * lambda.clone(),
            self.w3.clone() * lambda.clone(),
        )
    }

    /// Conjugation: kind i negates w1 and w3, kind j negates w2 and w3,
    /// kind ij negates w1 and w2. Each is an involutive ring automorphism.
    pub fn conj(&self, kind: ConjKind) -> Self {
        match kind {
            ConjKind::I => Bicomplex::new(
                self.w0.clone(),
                -self.w1.clone(),
                self.w2.clone(),
                -self.w3.clone(),
            ),
            ConjKind::J => Bicomplex::new(
                self.w0.clone(),
                self.w1.clone(),
                -self.w2.clone(),
                -self.w3.clone(),
            ),
            ConjKind::IJ => Bicomplex::new(
                self.w0.clone(),
                -self.w1.clone(),
                -self.w2.clone(),
                self.w3.clone(),
            ),
        }
    }

    /// Squared norm for the kind: the exact bicomplex product w * conj(w).
    ///
    /// The result spans two axes only: kind i lands in span{1, j}, kind j in
    /// span{1, i}, kind ij in span{1, ij}.
    pub fn norm_sq(&self, kind: ConjKind) -> Self {
        self.clone() * self.conj(kind)
    }

    /// Split at the idempotents: c1 = z1 - i*z2 (value at e1) and
    /// c2 = z1 + i*z2 (value at e2).
    pub fn split(&self) -> IdempotentPair<S> {
        IdempotentPair {
            c1: Complex::new(
                self.w0.clone() + self.w3.clone(),
                self.w1.clone() - self.w2.clone(),
            ),
            c2: Complex::new(
                self.w0.clone() - self.w3.clone(),
                self.w1.clone() + self.w2.clone(),
            ),
        }
    }

    /// Inverse of the split: z1 = (c1 + c2)/2, z2 = i*(c1 - c2)/2.
    pub fn recompose(pair: &IdempotentPair<S>) -> Self {
        let half = S::from_i64(2).try_inv().expect("2 is invertible in S");
        let p = &pair.c1;
        let q = &pair.c2;
        Bicomplex::new(
            (p.re.clone() + q.re.clone()) * half.clone(),
            (p.im.clone() + q.im.clone()) * half.clone(),
            (q.im.clone() - p.im.clone()) * half.clone(),
            (p.re.clone() - q.re.clone()) * half,
        )
    }

    /// Multiplicative inverse; fails on zero divisors, naming the vanishing
    /// idempotent component.
    pub fn inv(&self) -> Result<Self, BcjError> {
        let pair = self.split();
        let c1 = pair
            .c1
            .try_inv()
            .ok_or(BcjError::NotInvertible("e1 = (1+ij)/2"))?;
        let c2 = pair
            .c2
            .try_inv()
            .ok_or(BcjError::NotInvertible("e2 = (1-ij)/2"))?;
        Ok(Bicomplex::recompose(&IdempotentPair { c1, c2 }))
    }
}

impl Bicomplex<Rational> {
    /// Euclidean length of the coefficient 4-tuple, for display only.
    /// Every result path in the crate stays exact; this helper never feeds
    /// back into arithmetic.
    pub fn real_magnitude(&self) -> f64 {
        use num_traits::ToPrimitive;
        let sq = |x: &Rational| {
            let f = x.to_f64().unwrap_or(f64::NAN);
            f * f
        };
        (sq(&self.w0) + sq(&self.w1) + sq(&self.w2) + sq(&self.w3)).sqrt()
    }
}

impl<S: Scalar> Add for Bicomplex<S> {
    type Output = Bicomplex<S>;
    fn add(self, rhs: Self) -> Self {
        Bicomplex::new(
            self.w0 + rhs.w0,
            self.w1 + rhs.w1,
            self.w2 + rhs.w2,
            self.w3 + rhs.w3,
        )
    }
}

impl<S: Scalar> Sub for Bicomplex<S> {
    type Output = Bicomplex<S>;
    fn sub(self, rhs: Self) -> Self {
        Bicomplex::new(
            self.w0 - rhs.w0,
            self.w1 - rhs.w1,
            self.w2 - rhs.w2,
            self.w3 - rhs.w3,
        )
    }
}

impl<S: Scalar> Neg for Bicomplex<S> {
    type Output = Bicomplex<S>;
    fn neg(self) -> Self {
        Bicomplex::new(-self.w0, -self.w1, -self.w2, -self.w3)
    }
}

impl<S: Scalar> Mul for Bicomplex<S> {
    type Output = Bicomplex<S>;
    /// Four-component product under i^2 = j^2 = -1, ij = ji, (ij)^2 = +1.
    fn mul(self, rhs: Self) -> Self {
        let (a0, a1, a2, a3) = (self.w0, self.w1, self.w2, self.w3);
        let (b0, b1, b2, b3) = (rhs.w0, rhs.w1, rhs.w2, rhs.w3);
        let p0 = a0.clone() * b0.clone() - a1.clone() * b1.clone() - a2.clone() * b2.clone()
            + a3.clone() * b3.clone();
        let p1 = a0.clone() * b1.clone() + a1.clone() * b0.clone()
            - a2.clone() * b3.clone()
            - a3.clone() * b2.clone();
        let p2 = a0.clone() * b2.clone() - a1.clone() * b3.clone()
            + a2.clone() * b0.clone()
            - a3.clone() * b1.clone();
        let p3 = a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0;
        Bicomplex::new(p0, p1, p2, p3)
    }
}

impl<S: Scalar> Zero for Bicomplex<S> {
    fn zero() -> Self {
        Bicomplex::from_scalar(S::zero())
    }
    fn is_zero(&self) -> bool {
        self.w0.is_zero() && self.w1.is_zero() && self.w2.is_zero() && self.w3.is_zero()
    }
}

impl<S: Scalar> One for Bicomplex<S> {
    fn one() -> Self {
        Bicomplex::from_scalar(S::one())
    }
}

impl<S: Scalar> Scalar for Bicomplex<S> {
    fn from_i64(v: i64) -> Self {
        Bicomplex::from_scalar(S::from_i64(v))
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
}

/// Complex pair re + i*im over the scalar ring S; the codomain of the
/// idempotent split. Over a field S in which -1 is not a square this is
/// again a field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Complex<S> {
    pub re: S,
    pub im: S,
}

impl<S: Scalar> Complex<S> {
    pub fn new(re: S, im: S) -> Self {
        Complex { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Complex::new(S::from_i64(re), S::from_i64(im))
    }
}

impl<S: Scalar> Add for Complex<S> {
    type Output = Complex<S>;
    fn add(self, rhs: Self) -> Self {
        Complex::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<S: Scalar> Sub for Complex<S> {
    type Output = Complex<S>;
    fn sub(self, rhs: Self) -> Self {
        Complex::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl<S: Scalar> Neg for Complex<S> {
    type Output = Complex<S>;
    fn neg(self) -> Self {
        Complex::new(-self.re, -self.im)
    }
}

impl<S: Scalar> Mul for Complex<S> {
    type Output = Complex<S>;
    fn mul(self, rhs: Self) -> Self {
        let re = self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone();
        let im = self.re * rhs.im + self.im * rhs.re;
        Complex::new(re, im)
    }
}

impl<S: Scalar> Zero for Complex<S> {
    fn zero() -> Self {
        Complex::new(S::zero(), S::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl<S: Scalar> One for Complex<S> {
    fn one() -> Self {
        Complex::new(S::one(), S::zero())
    }
}

impl<S: Scalar> Scalar for Complex<S> {
    fn from_i64(v: i64) -> Self {
        Complex::new(S::from_i64(v), S::zero())
    }
    /// Inverse via conjugate over re^2 + im^2; `None` when the norm is not
    /// invertible, which for the rational and cyclotomic instances happens
    /// only at zero.
    fn try_inv(&self) -> Option<Self> {
        let norm = self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone();
        let inv_norm = norm.try_inv()?;
        Some(Complex::new(
            self.re.clone() * inv_norm.clone(),
            -self.im.clone() * inv_norm,
        ))
    }
}

impl<S: Scalar> fmt::Display for Complex<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", paren_if_composite(&self.re.to_string()))?;
        let im = self.im.to_string();
        if let Some(body) = bare_negative(&im) {
            write!(f, " - {body}*i")
        } else {
            write!(f, " + {}*i", paren_if_composite(&im))
        }
    }
}

/// Values of a bicomplex number at the two idempotents e1 and e2.
///
/// `split` then `recompose` is the identity, and `split` carries products
/// to componentwise products.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdempotentPair<S> {
    pub c1: Complex<S>,
    pub c2: Complex<S>,
}

fn is_composite(s: &str) -> bool {
    let body = s.strip_prefix('-').unwrap_or(s);
    body.contains(['+', '-', '*', ' '])
}

fn paren_if_composite(s: &str) -> String {
    if is_composite(s) {
        format!("({s})")
    } else {
        s.to_string()
    }
}

/// The coefficient body when it renders as a simple negated atom.
fn bare_negative(s: &str) -> Option<&str> {
    let body = s.strip_prefix('-')?;
    if is_composite(s) {
        None
    } else {
        Some(body)
    }
}

impl<S: Scalar> fmt::Display for Bicomplex<S> {
    /// Canonical rendering "w0 + w1*i + w2*j + w3*ij". Negative plain
    /// coefficients fold into the separating sign; composite coefficients
    /// (anything with an inner sign or product) are parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", paren_if_composite(&self.w0.to_string()))?;
        for (coeff, unit) in [(&self.w1, "i"), (&self.w2, "j"), (&self.w3, "ij")] {
            let s = coeff.to_string();
            if let Some(body) = bare_negative(&s) {
                write!(f, " - {body}*{unit}")?;
            } else {
                write!(f, " + {}*{unit}", paren_if_composite(&s))?;
            }
        }
        Ok(())
    }
}

/// Failure to parse a bicomplex literal.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseBicomplexError {
    #[error("empty bicomplex literal")]
    Empty,
    #[error("bad term in bicomplex literal: {0:?}")]
    BadTerm(String),
    #[error("bad coefficient in bicomplex literal: {0:?}")]
    BadCoefficient(String),
}

impl FromStr for Bicomplex<Rational> {
    type Err = ParseBicomplexError;

    /// Parses the grammar produced by `Display`: signed terms of the form
    /// `rational`, `rational*unit`, or bare `unit`, with unit one of
    /// i, j, ij. Whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ParseBicomplexError::Empty);
        }
        let mut out = Bicomplex::<Rational>::zero();
        let mut term = String::new();
        let mut terms: Vec<String> = Vec::new();
        for (idx, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && idx != 0 {
                terms.push(std::mem::take(&mut term));
                if ch == '-' {
                    term.push(ch);
                }
            } else {
                term.push(ch);
            }
        }
        terms.push(term);
        for raw in terms {
            if raw.is_empty() || raw == "-" {
                return Err(ParseBicomplexError::BadTerm(raw));
            }
            let negative = raw.starts_with('-');
            let body = raw.strip_prefix('-').unwrap_or(&raw);
            let (coeff_text, slot) = if let Some(rest) = body.strip_suffix("ij") {
                (rest.strip_suffix('*').unwrap_or(rest), 3usize)
            } else if let Some(rest) = body.strip_suffix('i') {
                (rest.strip_suffix('*').unwrap_or(rest), 1usize)
            } else if let Some(rest) = body.strip_suffix('j') {
                (rest.strip_suffix('*').unwrap_or(rest), 2usize)
            } else {
                (body, 0usize)
            };
            let coeff = if slot != 0 && coeff_text.is_empty() {
                Rational::one()
            } else {
                Rational::from_str(coeff_text)
                    .map_err(|_| ParseBicomplexError::BadCoefficient(coeff_text.to_string()))?
            };
            let signed = if negative { -coeff } else { coeff };
            match slot {
                0 => out.w0 += signed,
                1 => out.w1 += signed,
                2 => out.w2 += signed,
                _ => out.w3 += signed,
            }
        }
        Ok(out)
    }
}
