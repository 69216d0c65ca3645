//! Exact arithmetic in `Q` and in real quadratic fields `Q(sqrt d)`.
//!
//! A [`Scalar`] is `a + b*sqrt(d)` with `a, b` arbitrary-precision rationals.
//! Every polytope carries one [`FieldSpec`]; scalars from different fields
//! never mix.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("mixed fields: {0} and {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("radicand {0} must be a squarefree integer >= 2")]
    InvalidRadicand(u64),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("sqrt term at position {pos} used in the rational field")]
    SqrtInRationalField { pos: usize },
}

/// The coordinate field: either `Q` or `Q(sqrt d)` for a squarefree `d >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldSpec(Option<u64>);

impl FieldSpec {
    pub const RATIONAL: FieldSpec = FieldSpec(None);

    pub fn sqrt(d: u64) -> Result<Self, NumError> {
        if d < 2 || !is_squarefree(d) {
            return Err(NumError::InvalidRadicand(d));
        }
        Ok(FieldSpec(Some(d)))
    }

    pub fn radicand(self) -> Option<u64> {
        self.0
    }

    pub fn is_rational(self) -> bool {
        self.0.is_none()
    }

    /// Dimension of the field as a vector space over `Q`.
    pub fn degree(self) -> usize {
        if self.0.is_some() {
            2
        } else {
            1
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            None => write!(f, "Q"),
            Some(d) => write!(f, "Q(sqrt {d})"),
        }
    }
}

fn is_squarefree(d: u64) -> bool {
    let mut p = 2u64;
    while p * p <= d {
        if d.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

/// An exact element `a + b*sqrt(d)` of the field named by `field`.
///
/// Rationals are kept reduced with positive denominators (guaranteed by
/// `BigRational`), and `b` is zero whenever the field is `Q`, so derived
/// equality is value equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    a: BigRational,
    b: BigRational,
    field: FieldSpec,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Scalar {
    pub fn new(a: BigRational, b: BigRational, field: FieldSpec) -> Result<Self, NumError> {
        if field.is_rational() && !b.is_zero() {
            return Err(NumError::SqrtInRationalField { pos: 0 });
        }
        Ok(Scalar { a, b, field })
    }

    pub fn rational(a: BigRational, field: FieldSpec) -> Self {
        Scalar {
            a,
            b: BigRational::zero(),
            field,
        }
    }

    pub fn from_int(v: i64, field: FieldSpec) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(v)), field)
    }

    pub fn from_ratio(num: i64, den: i64, field: FieldSpec) -> Self {
        Self::rational(BigRational::new(num.into(), den.into()), field)
    }

    pub fn zero(field: FieldSpec) -> Self {
        Self::rational(BigRational::zero(), field)
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::rational(BigRational::one(), field)
    }

    /// `sqrt(d)` itself; `None` in the rational field.
    pub fn sqrt_unit(field: FieldSpec) -> Option<Self> {
        field.radicand().map(|_| Scalar {
            a: BigRational::zero(),
            b: BigRational::one(),
            field,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn sqrt_part(&self) -> &BigRational {
        &self.b
    }

    /// Coordinates in the `Q`-basis `{1, sqrt d}`.
    pub fn rational_embedding(&self) -> (BigRational, BigRational) {
        (self.a.clone(), self.b.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Exact sign, -1, 0 or +1.
    pub fn sign(&self) -> i32 {
        let sa = rat_sign(&self.a);
        let sb = rat_sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // Opposite signs: the larger of a^2 and b^2*d wins. Equality would
        // make sqrt(d) rational.
        let d = BigRational::from_integer(BigInt::from(self.field.radicand().unwrap_or(0)));
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * d;
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => unreachable!("sqrt of a squarefree radicand is irrational"),
        }
    }

    /// Exact comparison of values. Panics on mixed fields.
    pub fn cmp_value(&self, other: &Scalar) -> Ordering {
        match (self - other).sign() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }

    pub fn checked_op(&self, other: &Scalar, op: ArithOp) -> Result<Scalar, NumError> {
        if self.field != other.field {
            return Err(NumError::FieldMismatch(self.field, other.field));
        }
        let field = self.field;
        let (a, b) = match op {
            ArithOp::Add => (&self.a + &other.a, &self.b + &other.b),
            ArithOp::Sub => (&self.a - &other.a, &self.b - &other.b),
            ArithOp::Mul => self.mul_parts(&other.a, &other.b),
            ArithOp::Div => {
                let inv = other.checked_recip()?;
                self.mul_parts(&inv.a, &inv.b)
            }
        };
        Ok(Scalar { a, b, field })
    }

    fn mul_parts(&self, a2: &BigRational, b2: &BigRational) -> (BigRational, BigRational) {
        let d = self.radicand_rat();
        (&self.a * a2 + &self.b * b2 * d, &self.a * b2 + &self.b * a2)
    }

    fn radicand_rat(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.field.radicand().unwrap_or(0)))
    }

    /// `1/(a + b sqrt d) = (a - b sqrt d)/(a^2 - b^2 d)`.
    pub fn checked_recip(&self) -> Result<Scalar, NumError> {
        if self.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        let norm = &self.a * &self.a - &self.b * &self.b * self.radicand_rat();
        Ok(Scalar {
            a: &self.a / &norm,
            b: -&self.b / &norm,
            field: self.field,
        })
    }

    pub fn recip(&self) -> Scalar {
        self.checked_recip().expect("reciprocal of zero")
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        if self.b.is_zero() {
            return self.a.floor().to_integer();
        }
        let guess = self.to_f64().floor();
        let mut m = BigInt::from_f64(guess).unwrap_or_else(|| self.a.floor().to_integer());
        let at =
            |m: &BigInt| self - &Scalar::rational(BigRational::from_integer(m.clone()), self.field);
        while at(&m).sign() < 0 {
            m -= 1;
        }
        while at(&(&m + 1)).sign() >= 0 {
            m += 1;
        }
        m
    }

    /// Representative of the value modulo 1 in `[0, 1)`.
    pub fn fract(&self) -> Scalar {
        let m = self.floor();
        self - &Scalar::rational(BigRational::from_integer(m), self.field)
    }

    /// Decimal approximation for display only.
    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        match self.field.radicand() {
            None => a,
            Some(d) => a + self.b.to_f64().unwrap_or(f64::NAN) * (d as f64).sqrt(),
        }
    }

    pub fn abs(&self) -> Scalar {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Parses the scalar grammar: `term` or `term sign term "s"`.
    pub fn parse(text: &str, field: FieldSpec) -> Result<Scalar, NumError> {
        let mut p = Cursor {
            s: text.as_bytes(),
            pos: 0,
        };
        let a = p.term()?;
        if p.at_end() {
            return Ok(Scalar::rational(a, field));
        }
        let sign_pos = p.pos;
        let negate = match p.peek() {
            Some(b'+') => false,
            Some(b'-') => true,
            _ => return Err(p.err("expected '+' or '-' or end of scalar")),
        };
        p.pos += 1;
        let mut b = p.term()?;
        if p.peek() != Some(b's') {
            return Err(p.err("expected 's' after sqrt coefficient"));
        }
        p.pos += 1;
        if !p.at_end() {
            return Err(p.err("trailing characters"));
        }
        if field.is_rational() {
            return Err(NumError::SqrtInRationalField { pos: sign_pos });
        }
        if negate {
            b = -b;
        }
        Ok(Scalar { a, b, field })
    }
}

fn rat_sign(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.s.len()
    }

    fn err(&self, msg: &str) -> NumError {
        NumError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn digits(&mut self) -> Result<BigInt, NumError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        Ok(BigInt::from_str(text).expect("digit string"))
    }

    fn term(&mut self) -> Result<BigRational, NumError> {
        let negative = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let num = self.digits()?;
        let den = if self.peek() == Some(b'/') {
            self.pos += 1;
            let den_pos = self.pos;
            let den = self.digits()?;
            if den.is_zero() {
                return Err(NumError::Syntax {
                    pos: den_pos,
                    msg: "zero denominator".into(),
                });
            }
            den
        } else {
            BigInt::one()
        };
        let r = BigRational::new(num, den);
        Ok(if negative { -r } else { r })
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Formats in the same grammar [`Scalar::parse`] accepts, e.g. `-1+1/2s`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(f, &self.a)?;
        if !self.b.is_zero() {
            f.write_str(if self.b.is_negative() { "-" } else { "+" })?;
            write_term(f, &self.b.abs())?;
            f.write_str("s")?;
        }
        Ok(())
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        (self.field == other.field).then(|| self.cmp_value(other))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $op:expr) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match self.checked_op(rhs, $op) {
                    Ok(v) => v,
                    Err(e) => panic!("scalar arithmetic: {e}"),
                }
            }
        }

        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, ArithOp::Add);
forward_binop!(Sub, sub, ArithOp::Sub);
forward_binop!(Mul, mul, ArithOp::Mul);
forward_binop!(Div, div, ArithOp::Div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            a: -&self.a,
            b: -&self.b,
            field: self.field,
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Exact dot product of equal-length vectors.
pub fn dot(x: &[Scalar], y: &[Scalar]) -> Scalar {
    assert_eq!(x.len(), y.len(), "dot product of unequal lengths");
    let field = x
        .first()
        .or(y.first())
        .map(Scalar::field)
        .unwrap_or_default();
    x.iter()
        .zip(y)
        .fold(Scalar::zero(field), |acc, (a, b)| acc + a * b)
}

/// Least common multiple of the denominators of `a` and `b` parts.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Scalar>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, s| {
        acc.lcm(s.a.denom()).lcm(s.b.denom())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q5() -> FieldSpec {
        FieldSpec::sqrt(5).unwrap()
    }

    fn q2() -> FieldSpec {
        FieldSpec::sqrt(2).unwrap()
    }

    fn s(text: &str, field: FieldSpec) -> Scalar {
        Scalar::parse(text, field).unwrap()
    }

    #[test]
    fn rational_addition() {
        let half = s("1/2", q5());
        assert_eq!(&half + &half, Scalar::one(q5()));
    }

    #[test]
    fn sqrt_squared_is_radicand() {
        let r = Scalar::sqrt_unit(q5()).unwrap();
        assert_eq!(&r * &r, Scalar::from_int(5, q5()));
    }

    #[test]
    fn golden_ratio_reciprocal() {
        let phi = s("1/2+1/2s", q5());
        let inv = Scalar::one(q5()) / &phi;
        assert_eq!(inv, s("-1/2+1/2s", q5()));
        // Multiply back.
        assert_eq!(&inv * &phi, Scalar::one(q5()));
        assert_eq!(inv, &phi - &Scalar::one(q5()));
    }

    #[test]
    fn division_by_zero_and_mixed_fields() {
        let one = Scalar::one(q5());
        assert_eq!(
            one.checked_op(&Scalar::zero(q5()), ArithOp::Div),
            Err(NumError::DivisionByZero)
        );
        assert!(matches!(
            one.checked_op(&Scalar::one(q2()), ArithOp::Add),
            Err(NumError::FieldMismatch(..))
        ));
    }

    #[test]
    fn signs() {
        assert_eq!(Scalar::zero(q2()).sign(), 0);
        // 2 > 1: the sqrt term dominates.
        assert_eq!(s("-1+1s", q2()).sign(), 1);
        // 9 > 8: the rational term dominates.
        assert_eq!(s("3-2s", q2()).sign(), 1);
        assert_eq!(s("-3+2s", q2()).sign(), -1);
        assert_eq!(s("1-1s", q2()).sign(), -1);
        assert_eq!(s("0-1/7s", q2()).sign(), -1);
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            s("3/2", FieldSpec::RATIONAL),
            Scalar::from_ratio(3, 2, FieldSpec::RATIONAL)
        );
        let x = s("-1+1/2s", q5());
        assert_eq!(
            x.rational_embedding(),
            (
                BigRational::from_integer((-1).into()),
                BigRational::new(1.into(), 2.into())
            )
        );
        assert_eq!(s("2/4", FieldSpec::RATIONAL).to_string(), "1/2");
        assert_eq!(s("1+-2s", q5()).to_string(), "1-2s");
    }

    #[test]
    fn parse_errors_report_position() {
        let err = |t: &str| Scalar::parse(t, q5()).unwrap_err();
        assert_eq!(
            err("").to_string(),
            "syntax error at position 0: expected digits"
        );
        assert!(matches!(err("1/0"), NumError::Syntax { pos: 2, .. }));
        assert!(matches!(err("1/2s"), NumError::Syntax { pos: 3, .. }));
        assert!(matches!(err("1+2"), NumError::Syntax { pos: 3, .. }));
        assert!(matches!(err("1+2sx"), NumError::Syntax { pos: 4, .. }));
        assert!(matches!(err(" 1"), NumError::Syntax { pos: 0, .. }));
        assert_eq!(
            Scalar::parse("1+2s", FieldSpec::RATIONAL),
            Err(NumError::SqrtInRationalField { pos: 1 })
        );
    }

    #[test]
    fn embedding_of_zero_and_rationals() {
        let z = Scalar::zero(q5());
        assert_eq!(
            z.rational_embedding(),
            (BigRational::zero(), BigRational::zero())
        );
        assert_eq!(
            s("1/2", q5()).rational_embedding(),
            (BigRational::new(1.into(), 2.into()), BigRational::zero())
        );
    }

    #[test]
    fn radicand_validation() {
        assert!(FieldSpec::sqrt(4).is_err());
        assert!(FieldSpec::sqrt(1).is_err());
        assert!(FieldSpec::sqrt(12).is_err());
        assert!(FieldSpec::sqrt(30).is_ok());
    }

    #[test]
    fn floor_and_fract() {
        let phi = s("1/2+1/2s", q5());
        assert_eq!(phi.floor(), BigInt::from(1));
        assert_eq!(phi.fract(), s("-1/2+1/2s", q5()));
        assert_eq!((-&phi).floor(), BigInt::from(-2));
        assert_eq!(s("-1/2", q5()).fract(), s("1/2", q5()));
        assert_eq!(s("3", q5()).fract(), Scalar::zero(q5()));
        let big = s("1000000000000000000000/7-123456789/1000s", q5());
        let m = big.floor();
        let lo = Scalar::rational(BigRational::from_integer(m.clone()), q5());
        assert!(lo.cmp_value(&big).is_le());
        assert!((&lo + &Scalar::one(q5())).cmp_value(&big).is_gt());
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20).prop_map(|(an, ad, bn, bd)| {
            Scalar::new(
                BigRational::new(an.into(), ad.into()),
                BigRational::new(bn.into(), bd.into()),
                FieldSpec::sqrt(7).unwrap(),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb_scalar(), y in arb_scalar(), z in arb_scalar()) {
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            if !x.is_zero() {
                prop_assert_eq!(&x * &x.recip(), Scalar::one(x.field()));
            }
        }

        #[test]
        fn sign_is_multiplicative(x in arb_scalar(), y in arb_scalar()) {
            prop_assert_eq!((&x * &y).sign(), x.sign() * y.sign());
            let approx = x.to_f64();
            if approx.abs() > 1e-9 {
                prop_assert_eq!(x.sign(), if approx > 0.0 { 1 } else { -1 });
            }
        }

        #[test]
        fn format_parse_roundtrip(x in arb_scalar()) {
            prop_assert_eq!(Scalar::parse(&x.to_string(), x.field()).unwrap(), x);
        }

        #[test]
        fn embedding_is_linear(x in arb_scalar(), y in arb_scalar(), c in -9i64..9) {
            let (xa, xb) = x.rational_embedding();
            let (ya, yb) = y.rational_embedding();
            let cq = BigRational::from_integer(c.into());
            let sum = &(&x * &Scalar::from_int(c, x.field())) + &y;
            prop_assert_eq!(sum.rational_embedding(), (&xa * &cq + ya, &xb * &cq + yb));
        }
    }
}
