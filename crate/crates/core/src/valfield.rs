//! Exact non-Archimedean scalars.
//!
//! The catalogue: finite fields and Q, Q(i) with the trivial absolute value,
//! and Q with the p-adic absolute value. Every function on a finite space
//! takes finitely many values, so Q with |·|_p stands in for Q_p without
//! ever needing a completion.
//!
//! Magnitudes ([`AbsValue`]) are symbolic powers of the prime, so every norm
//! identity reduces to an exact comparison.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// |x| for a scalar: zero, one, or `base^exp` with `exp ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AbsValue {
    Zero,
    One,
    Pow { base: u64, exp: i64 },
}

impl AbsValue {
    pub fn pow(base: u64, exp: i64) -> Self {
        if exp == 0 || base == 1 {
            AbsValue::One
        } else {
            AbsValue::Pow { base, exp }
        }
    }

    pub fn is_zero(self) -> bool {
        self == AbsValue::Zero
    }

    /// Exponent with respect to the field prime; `None` for zero.
    pub fn exponent(self) -> Option<i64> {
        match self {
            AbsValue::Zero => None,
            AbsValue::One => Some(0),
            AbsValue::Pow { exp, .. } => Some(exp),
        }
    }

    /// The exact rational value.
    pub fn to_rational(self) -> BigRational {
        match self {
            AbsValue::Zero => BigRational::zero(),
            AbsValue::One => BigRational::one(),
            AbsValue::Pow { base, exp } => {
                let b = BigInt::from(base).pow(exp.unsigned_abs() as u32);
                if exp > 0 {
                    BigRational::from_integer(b)
                } else {
                    BigRational::new(BigInt::one(), b)
                }
            }
        }
    }

    pub fn checked_mul(self, other: Self) -> Option<Self> {
        use AbsValue::*;
        match (self, other) {
            (Zero, _) | (_, Zero) => Some(Zero),
            (One, x) | (x, One) => Some(x),
            (Pow { base: a, exp: e }, Pow { base: b, exp: f }) => {
                (a == b).then(|| AbsValue::pow(a, e + f))
            }
        }
    }
}

impl std::ops::Mul for AbsValue {
    type Output = AbsValue;

    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs)
            .expect("magnitudes over different primes cannot be multiplied")
    }
}

impl Ord for AbsValue {
    fn cmp(&self, other: &Self) -> Ordering {
        use AbsValue::*;
        match (*self, *other) {
            (Zero, Zero) => Ordering::Equal,
            (Zero, _) => Ordering::Less,
            (_, Zero) => Ordering::Greater,
            (Pow { base: a, exp: e }, Pow { base: b, exp: f }) if a == b => e.cmp(&f),
            (x, y) => x.to_rational().cmp(&y.to_rational()),
        }
    }
}

impl PartialOrd for AbsValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AbsValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbsValue::Zero => write!(f, "0"),
            AbsValue::One => write!(f, "1"),
            AbsValue::Pow { base, exp } => write!(f, "{base}^{exp}"),
        }
    }
}

impl FromStr for AbsValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "0" => return Ok(AbsValue::Zero),
            "1" => return Ok(AbsValue::One),
            _ => {}
        }
        let bad = || Error::ParseAbsValue(s.to_string());
        let (base, exp) = s.split_once('^').ok_or_else(bad)?;
        let base: u64 = base.trim().parse().map_err(|_| bad())?;
        let exp: i64 = exp.trim().parse().map_err(|_| bad())?;
        if base < 2 {
            return Err(bad());
        }
        Ok(AbsValue::pow(base, exp))
    }
}

impl Serialize for AbsValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// GF(p^n), elements as coefficient vectors (lowest degree first) modulo a
/// fixed monic irreducible polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteField {
    p: u64,
    degree: usize,
    // monic, length degree + 1, lowest coefficient first
    modulus: Vec<u64>,
}

const MAX_FIELD_ORDER: u64 = 1 << 16;

impl FiniteField {
    pub fn new(q: u64) -> Result<Self> {
        if !(2..=MAX_FIELD_ORDER).contains(&q) {
            return Err(Error::InvalidField(format!(
                "field order {q} outside 2..={MAX_FIELD_ORDER}"
            )));
        }
        let p = smallest_factor(q);
        let mut degree = 0;
        let mut rest = q;
        while rest.is_multiple_of(p) {
            rest /= p;
            degree += 1;
        }
        if rest != 1 {
            return Err(Error::InvalidField(format!("{q} is not a prime power")));
        }
        let modulus = smallest_irreducible(p, degree);
        Ok(Self { p, degree, modulus })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.degree as u32)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Element whose coefficients are the base-p digits of `index`.
    pub fn element(&self, mut index: u64) -> Vec<u64> {
        (0..self.degree)
            .map(|_| {
                let d = index % self.p;
                index /= self.p;
                d
            })
            .collect()
    }

    /// The class of the variable `x`; only meaningful for degree > 1.
    pub fn generator(&self) -> Vec<u64> {
        let mut v = vec![0; self.degree];
        if self.degree > 1 {
            v[1] = 1;
        } else {
            v[0] = 1;
        }
        v
    }

    fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    fn neg(&self, a: &[u64]) -> Vec<u64> {
        a.iter().map(|x| (self.p - x) % self.p).collect()
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = self.degree;
        let mut prod = vec![0u64; 2 * n];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        for top in (n..2 * n).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            for (k, m) in self.modulus.iter().enumerate() {
                let idx = top - n + k;
                prod[idx] = (prod[idx] + self.p * self.p - c * m % self.p) % self.p;
            }
        }
        prod.truncate(n);
        prod
    }

    fn pow(&self, a: &[u64], mut e: u64) -> Vec<u64> {
        let mut result = self.element(1);
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        result
    }

    fn render_poly(&self, coeffs: &[u64]) -> String {
        let terms: Vec<String> = coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let coef = if c == 1 && i > 0 {
                    String::new()
                } else {
                    c.to_string()
                };
                match i {
                    0 => coef,
                    1 => format!("{coef}x"),
                    _ => format!("{coef}x^{i}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    fn parse_poly(&self, text: &str) -> std::result::Result<Vec<u64>, String> {
        let mut coeffs = vec![0u64; self.degree.max(1) + 1];
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err("empty polynomial".into());
        }
        for term in text.split('+') {
            let (coef, power) = match term.find('x') {
                None => (term, 0usize),
                Some(pos) => {
                    let coef = term[..pos].trim_end_matches('*');
                    let rest = &term[pos + 1..];
                    let power = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|e| e.parse().ok())
                            .ok_or_else(|| format!("bad exponent in `{term}`"))?
                    };
                    (if coef.is_empty() { "1" } else { coef }, power)
                }
            };
            let c: u64 = coef
                .parse()
                .map_err(|_| format!("bad coefficient `{coef}`"))?;
            if power >= coeffs.len() {
                coeffs.resize(power + 1, 0);
            }
            coeffs[power] = (coeffs[power] + c) % self.p;
        }
        Ok(coeffs)
    }

    /// Reduces an arbitrary polynomial modulo the field modulus.
    fn reduce(&self, mut poly: Vec<u64>) -> Vec<u64> {
        let n = self.degree;
        while poly.len() > n {
            let top = poly.len() - 1;
            let c = poly.pop().unwrap() % self.p;
            if c != 0 {
                for (k, m) in self.modulus.iter().enumerate().take(n) {
                    let idx = top - n + k;
                    poly[idx] = (poly[idx] + self.p - c * m % self.p) % self.p;
                }
            }
        }
        poly.resize(n, 0);
        poly
    }
}

fn smallest_factor(n: u64) -> u64 {
    (2..)
        .take_while(|d| d * d <= n)
        .find(|&d| n.is_multiple_of(d))
        .unwrap_or(n)
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && smallest_factor(n) == n
}

/// Lowest monic irreducible of the given degree, ordering candidates by
/// their lower coefficients read as base-p digits.
fn smallest_irreducible(p: u64, degree: usize) -> Vec<u64> {
    if degree == 1 {
        return vec![0, 1];
    }
    let count = p.pow(degree as u32);
    (0..count)
        .map(|i| {
            let mut poly: Vec<u64> = (0..degree)
                .scan(i, |r, _| {
                    let d = *r % p;
                    *r /= p;
                    Some(d)
                })
                .collect();
            poly.push(1);
            poly
        })
        .find(|poly| is_irreducible(p, poly))
        .expect("irreducible polynomials exist in every degree")
}

fn is_irreducible(p: u64, poly: &[u64]) -> bool {
    let degree = poly.len() - 1;
    for d in 1..=degree / 2 {
        for i in 0..p.pow(d as u32) {
            let mut divisor: Vec<u64> = (0..d)
                .scan(i, |r, _| {
                    let c = *r % p;
                    *r /= p;
                    Some(c)
                })
                .collect();
            divisor.push(1);
            if poly_rem(p, poly, &divisor).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn poly_rem(p: u64, a: &[u64], monic: &[u64]) -> Vec<u64> {
    let mut r = a.to_vec();
    let d = monic.len() - 1;
    while r.len() > d {
        let c = r.pop().unwrap() % p;
        let top = r.len();
        if c != 0 {
            for (k, m) in monic[..d].iter().enumerate() {
                let idx = top - d + k;
                r[idx] = (r[idx] + p - c * m % p) % p;
            }
        }
    }
    r
}

/// An element of some catalogue field. Arithmetic goes through the owning
/// [`ValuedField`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Finite(Vec<u64>),
    Rational(BigRational),
    Gaussian(BigRational, BigRational),
}

impl Scalar {
    pub fn rational(num: i64, den: i64) -> Self {
        Scalar::Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn integer(n: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(n.into()))
    }

    pub fn gaussian(re: BigRational, im: BigRational) -> Self {
        Scalar::Gaussian(re, im)
    }
}

/// Which prime subfield a field contains, with its induced valuation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PrimeSubfield {
    FiniteField(u64),
    TrivialRational,
    PAdicRational(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ValuedField {
    TrivialFinite(FiniteField),
    TrivialRational,
    TrivialGaussian,
    PAdic { p: u64 },
}

impl ValuedField {
    pub fn finite(q: u64) -> Result<Self> {
        Ok(ValuedField::TrivialFinite(FiniteField::new(q)?))
    }

    pub fn p_adic(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(ValuedField::PAdic { p })
    }

    pub fn prime_subfield(&self) -> PrimeSubfield {
        match self {
            ValuedField::TrivialFinite(f) => PrimeSubfield::FiniteField(f.characteristic()),
            ValuedField::TrivialRational | ValuedField::TrivialGaussian => {
                PrimeSubfield::TrivialRational
            }
            ValuedField::PAdic { p } => PrimeSubfield::PAdicRational(*p),
        }
    }

    pub fn is_trivially_valued(&self) -> bool {
        !matches!(self, ValuedField::PAdic { .. })
    }

    pub fn zero(&self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        match self {
            ValuedField::TrivialFinite(f) => {
                let mut v = vec![0; f.degree];
                v[0] = n.rem_euclid(f.p as i64) as u64;
                Scalar::Finite(v)
            }
            ValuedField::TrivialRational | ValuedField::PAdic { .. } => Scalar::integer(n),
            ValuedField::TrivialGaussian => {
                Scalar::Gaussian(BigRational::from_integer(n.into()), BigRational::zero())
            }
        }
    }

    /// Whether `x` is a well-formed element of this field.
    pub fn contains(&self, x: &Scalar) -> bool {
        match (self, x) {
            (ValuedField::TrivialFinite(f), Scalar::Finite(v)) => {
                v.len() == f.degree && v.iter().all(|&c| c < f.p)
            }
            (ValuedField::TrivialRational | ValuedField::PAdic { .. }, Scalar::Rational(_)) => true,
            (ValuedField::TrivialGaussian, Scalar::Gaussian(..)) => true,
            _ => false,
        }
    }

    pub fn check(&self, x: &Scalar) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::Mismatch("scalar field"))
        }
    }

    pub fn is_zero(&self, x: &Scalar) -> bool {
        match x {
            Scalar::Finite(v) => v.iter().all(|&c| c == 0),
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Gaussian(a, b) => a.is_zero() && b.is_zero(),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (ValuedField::TrivialFinite(f), Scalar::Finite(x), Scalar::Finite(y)) => {
                Scalar::Finite(f.add(x, y))
            }
            (_, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (_, Scalar::Gaussian(a, b), Scalar::Gaussian(c, d)) => Scalar::Gaussian(a + c, b + d),
            _ => panic!("scalars from different fields"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (ValuedField::TrivialFinite(f), Scalar::Finite(x)) => Scalar::Finite(f.neg(x)),
            (_, Scalar::Rational(x)) => Scalar::Rational(-x),
            (_, Scalar::Gaussian(a, b)) => Scalar::Gaussian(-a, -b),
            _ => panic!("scalar from a different field"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (ValuedField::TrivialFinite(f), Scalar::Finite(x), Scalar::Finite(y)) => {
                Scalar::Finite(f.mul(x, y))
            }
            (_, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (_, Scalar::Gaussian(a, b), Scalar::Gaussian(c, d)) => {
                Scalar::Gaussian(a * c - b * d, a * d + b * c)
            }
            _ => panic!("scalars from different fields"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(match (self, a) {
            (ValuedField::TrivialFinite(f), Scalar::Finite(x)) => {
                Scalar::Finite(f.pow(x, f.order() - 2))
            }
            (_, Scalar::Rational(x)) => Scalar::Rational(x.recip()),
            (_, Scalar::Gaussian(a, b)) => {
                let norm = a * a + b * b;
                Scalar::Gaussian(a / &norm, -b / &norm)
            }
            _ => panic!("scalar from a different field"),
        })
    }

    /// The absolute value: trivial kinds give Zero/One, the p-adic kind gives
    /// `p^(-v_p(x))`.
    pub fn abs(&self, x: &Scalar) -> AbsValue {
        if self.is_zero(x) {
            return AbsValue::Zero;
        }
        match (self, x) {
            (ValuedField::PAdic { p }, Scalar::Rational(r)) => {
                let v = valuation(r.numer(), *p) - valuation(r.denom(), *p);
                AbsValue::pow(*p, -v)
            }
            _ => AbsValue::One,
        }
    }

    pub fn is_integral(&self, x: &Scalar) -> bool {
        self.abs(x) <= AbsValue::One
    }

    /// A nonzero `a` with `|a| = m`, when one exists.
    pub fn element_of_magnitude(&self, m: AbsValue) -> Option<Scalar> {
        match (self, m) {
            (_, AbsValue::Zero) => Some(self.zero()),
            (_, AbsValue::One) => Some(self.one()),
            (ValuedField::PAdic { p }, AbsValue::Pow { base, exp }) if base == *p => {
                let pp = BigInt::from(*p).pow(exp.unsigned_abs() as u32);
                Some(Scalar::Rational(if exp > 0 {
                    BigRational::new(BigInt::one(), pp)
                } else {
                    BigRational::from_integer(pp)
                }))
            }
            _ => None,
        }
    }

    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let err = |why: &str| Error::ParseScalar(text.to_string(), why.to_string());
        let t = text.trim();
        match self {
            ValuedField::TrivialFinite(f) => {
                let (poly, modulus) = match t.split_once("mod") {
                    Some((a, b)) => (a, Some(b)),
                    None => (t, None),
                };
                if let Some(m) = modulus {
                    let m = f.parse_poly(m).map_err(|e| err(&e))?;
                    let mut expected = f.modulus.clone();
                    if f.degree == 1 {
                        expected = vec![0, 1];
                    }
                    if trim_zeros(m) != expected {
                        return Err(err(&format!(
                            "modulus differs from the field modulus {}",
                            f.render_poly(&f.modulus)
                        )));
                    }
                }
                let coeffs = f.parse_poly(poly).map_err(|e| err(&e))?;
                Ok(Scalar::Finite(f.reduce(coeffs)))
            }
            ValuedField::TrivialRational | ValuedField::PAdic { .. } => {
                parse_rational(t).map(Scalar::Rational).map_err(|e| err(&e))
            }
            ValuedField::TrivialGaussian => parse_gaussian(t)
                .map(|(a, b)| Scalar::Gaussian(a, b))
                .map_err(|e| err(&e)),
        }
    }

    pub fn format_scalar(&self, x: &Scalar) -> String {
        match (self, x) {
            (ValuedField::TrivialFinite(f), Scalar::Finite(v)) => {
                if f.degree == 1 {
                    f.render_poly(v)
                } else {
                    format!("{} mod {}", f.render_poly(v), f.render_poly(&f.modulus))
                }
            }
            (_, Scalar::Rational(r)) => r.to_string(),
            (_, Scalar::Gaussian(a, b)) => format_gaussian(a, b),
            _ => "<foreign scalar>".into(),
        }
    }

    /// Every element, for finite fields.
    pub fn finite_elements(&self) -> Option<Vec<Scalar>> {
        match self {
            ValuedField::TrivialFinite(f) => Some(
                (0..f.order())
                    .map(|i| Scalar::Finite(f.element(i)))
                    .collect(),
            ),
            _ => None,
        }
    }
}

impl fmt::Display for ValuedField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValuedField::TrivialFinite(ff) => write!(f, "F{} (trivial)", ff.order()),
            ValuedField::TrivialRational => write!(f, "Q (trivial)"),
            ValuedField::TrivialGaussian => write!(f, "Q(i) (trivial)"),
            ValuedField::PAdic { p } => write!(f, "Q ({p}-adic)"),
        }
    }
}

/// JSON form: `{"kind":"p-adic","p":2}`, `{"kind":"trivial-finite","q":4}`,
/// `{"kind":"trivial-rational"}`, `{"kind":"trivial-gaussian"}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FieldSpec {
    TrivialFinite { q: u64 },
    TrivialRational,
    TrivialGaussian,
    PAdic { p: u64 },
}

impl FieldSpec {
    pub fn build(&self) -> Result<ValuedField> {
        match *self {
            FieldSpec::TrivialFinite { q } => ValuedField::finite(q),
            FieldSpec::TrivialRational => Ok(ValuedField::TrivialRational),
            FieldSpec::TrivialGaussian => Ok(ValuedField::TrivialGaussian),
            FieldSpec::PAdic { p } => ValuedField::p_adic(p),
        }
    }
}

impl From<&ValuedField> for FieldSpec {
    fn from(k: &ValuedField) -> Self {
        match k {
            ValuedField::TrivialFinite(f) => FieldSpec::TrivialFinite { q: f.order() },
            ValuedField::TrivialRational => FieldSpec::TrivialRational,
            ValuedField::TrivialGaussian => FieldSpec::TrivialGaussian,
            ValuedField::PAdic { p } => FieldSpec::PAdic { p: *p },
        }
    }
}

impl<'de> Deserialize<'de> for ValuedField {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        FieldSpec::deserialize(d)?
            .build()
            .map_err(serde::de::Error::custom)
    }
}

impl Serialize for ValuedField {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FieldSpec::from(self).serialize(s)
    }
}

/// Short forms: `F4`, `Q`, `Q(i)`, `p-adic:3`, or the JSON form.
impl FromStr for ValuedField {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            return Ok(serde_json::from_str(s)?);
        }
        if let Some(p) = s.strip_prefix("p-adic:").or_else(|| s.strip_prefix("Qp:")) {
            let p = p
                .parse()
                .map_err(|_| Error::InvalidField(format!("bad prime in `{s}`")))?;
            return ValuedField::p_adic(p);
        }
        if let Some(q) = s.strip_prefix('F') {
            let q = q
                .parse()
                .map_err(|_| Error::InvalidField(format!("bad order in `{s}`")))?;
            return ValuedField::finite(q);
        }
        match s {
            "Q" | "trivial-rational" => Ok(ValuedField::TrivialRational),
            "Q(i)" | "trivial-gaussian" => Ok(ValuedField::TrivialGaussian),
            _ => Err(Error::InvalidField(format!("unknown field `{s}`"))),
        }
    }
}

fn trim_zeros(mut v: Vec<u64>) -> Vec<u64> {
    while v.len() > 1 && v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Exponent of `p` in a nonzero integer.
pub fn valuation(n: &BigInt, p: u64) -> i64 {
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() || n.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

fn parse_rational(t: &str) -> std::result::Result<BigRational, String> {
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| format!("bad numerator `{num}`"))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| format!("bad denominator `{den}`"))?;
    if den.is_zero() {
        return Err("zero denominator".into());
    }
    Ok(BigRational::new(num, den))
}

fn parse_gaussian(t: &str) -> std::result::Result<(BigRational, BigRational), String> {
    let t: String = t.chars().filter(|c| !c.is_whitespace()).collect();
    let split = t
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(i, _)| i)
        .last();
    let imag = |s: &str| -> std::result::Result<BigRational, String> {
        let body = s
            .strip_suffix('i')
            .ok_or("imaginary part must end in `i`")?;
        match body {
            "" | "+" => Ok(BigRational::one()),
            "-" => Ok(-BigRational::one()),
            _ => parse_rational(body.strip_prefix('+').unwrap_or(body)),
        }
    };
    match split {
        Some(i) if t.ends_with('i') => Ok((parse_rational(&t[..i])?, imag(&t[i..])?)),
        _ if t.ends_with('i') => Ok((BigRational::zero(), imag(&t)?)),
        _ => Ok((parse_rational(&t)?, BigRational::zero())),
    }
}

fn format_gaussian(a: &BigRational, b: &BigRational) -> String {
    if b.is_zero() {
        return a.to_string();
    }
    let im = if b.is_one() {
        "i".to_string()
    } else if *b == -BigRational::one() {
        "-i".to_string()
    } else {
        format!("{b}i")
    };
    if a.is_zero() {
        im
    } else if im.starts_with('-') {
        format!("{a}{im}")
    } else {
        format!("{a}+{im}")
    }
}

/// `p^e` as a rational, for oracle comparisons.
pub fn prime_power(p: u64, e: i64) -> BigRational {
    AbsValue::pow(p, e).to_rational()
}
