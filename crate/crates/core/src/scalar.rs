//! Exact scalar arithmetic over the three supported fields: the rationals,
//! prime fields GF(p), and the Gaussian rationals Q(i).
//!
//! Everything is exact — there is no floating point anywhere in this crate.
//! Q(i) is the field with a nontrivial conjugation, so star-algebra
//! constructions can be exercised with a genuinely conjugate-linear
//! involution; prime fields exist mainly for the brute-force oracles.
//!
//! A [`Scalar`] knows which field it belongs to (a GF(p) value carries its
//! modulus), so arithmetic needs no external context. Mixing scalars from
//! different fields in arithmetic is a programming error and panics;
//! boundary code (parsers, constructors) validates fields and returns
//! [`Error`](crate::error::Error) instead.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};

/// One of the three supported exact fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    /// The rational numbers.
    Q,
    /// The prime field of order `p`.
    Fp(u64),
    /// The Gaussian rationals Q(i), with complex conjugation.
    Qi,
}

impl Field {
    /// Parses a field tag: `"Q"`, `"GF:p"`, or `"Qi"`.
    pub fn parse(tag: &str) -> Result<Field> {
        match tag {
            "Q" => Ok(Field::Q),
            "Qi" => Ok(Field::Qi),
            _ => {
                let p = tag
                    .strip_prefix("GF:")
                    .ok_or_else(|| Error::Parse(format!("unknown field tag {tag:?}")))?;
                let p: u64 = p
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad prime in field tag {tag:?}")))?;
                if !is_prime(p) {
                    return Err(Error::Parse(format!("{p} is not prime")));
                }
                Ok(Field::Fp(p))
            }
        }
    }

    /// The canonical tag, inverse to [`Field::parse`].
    pub fn tag(&self) -> String {
        match self {
            Field::Q => "Q".to_string(),
            Field::Fp(p) => format!("GF:{p}"),
            Field::Qi => "Qi".to_string(),
        }
    }

    /// The additive identity.
    pub fn zero(&self) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::zero()),
            Field::Fp(p) => Scalar::Fp { val: 0, p: *p },
            Field::Qi => Scalar::Qi {
                re: BigRational::zero(),
                im: BigRational::zero(),
            },
        }
    }

    /// The multiplicative identity.
    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    /// Embeds a machine integer.
    pub fn from_int(&self, n: i64) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::from(BigInt::from(n))),
            Field::Fp(p) => Scalar::Fp {
                val: n.rem_euclid(*p as i64) as u64,
                p: *p,
            },
            Field::Qi => Scalar::Qi {
                re: BigRational::from(BigInt::from(n)),
                im: BigRational::zero(),
            },
        }
    }

    /// Parses a scalar string in this field.
    ///
    /// Rationals accept `"3"`, `"-2/7"`; GF(p) accepts integers and
    /// fractions (resolved by modular inverse); Q(i) accepts forms like
    /// `"2+5i"`, `"3/2-1/2i"`, `"i"`, `"-i"`, `"7"`.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar string".into()));
        }
        match self {
            Field::Q => Ok(Scalar::Q(parse_rational(s)?)),
            Field::Fp(p) => {
                // Accept "a" or "a/b" with b invertible mod p.
                let (num, den) = match s.split_once('/') {
                    Some((a, b)) => (a, b),
                    None => (s, "1"),
                };
                let num: i128 = num
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad integer {num:?} for GF:{p}")))?;
                let den: i128 = den
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad integer {den:?} for GF:{p}")))?;
                let num = num.rem_euclid(*p as i128) as u64;
                let den = den.rem_euclid(*p as i128) as u64;
                let den_inv = mod_inverse(den, *p).ok_or_else(|| {
                    Error::Parse(format!("{den} is not invertible mod {p}"))
                })?;
                Ok(Scalar::Fp {
                    val: mod_mul(num, den_inv, *p),
                    p: *p,
                })
            }
            Field::Qi => {
                let (re, im) = parse_gaussian(s)?;
                Ok(Scalar::Qi { re, im })
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

/// An exact field element; see the module docs for the design.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    /// A rational number.
    Q(BigRational),
    /// An element of GF(p), kept reduced to `0..p`.
    Fp { val: u64, p: u64 },
    /// A Gaussian rational `re + im·i`.
    Qi { re: BigRational, im: BigRational },
}

impl Scalar {
    /// The field this scalar belongs to.
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Q,
            Scalar::Fp { p, .. } => Field::Fp(*p),
            Scalar::Qi { .. } => Field::Qi,
        }
    }

    /// Is this the additive identity?
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
            Scalar::Qi { re, im } => re.is_zero() && im.is_zero(),
        }
    }

    /// Is this the multiplicative identity?
    pub fn is_one(&self) -> bool {
        *self == self.field().one()
    }

    /// Sum. Panics on mixed fields.
    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, p: q }) if p == q => Scalar::Fp {
                val: (a + b) % p,
                p: *p,
            },
            (Scalar::Qi { re: a, im: b }, Scalar::Qi { re: c, im: d }) => Scalar::Qi {
                re: a + c,
                im: b + d,
            },
            _ => panic!("scalar field mismatch: {} vs {}", self.field(), other.field()),
        }
    }

    /// Difference. Panics on mixed fields.
    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    /// Additive inverse.
    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { val, p } => Scalar::Fp {
                val: if *val == 0 { 0 } else { p - val },
                p: *p,
            },
            Scalar::Qi { re, im } => Scalar::Qi {
                re: -re,
                im: -im,
            },
        }
    }

    /// Product. Panics on mixed fields.
    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, p: q }) if p == q => Scalar::Fp {
                val: mod_mul(*a, *b, *p),
                p: *p,
            },
            (Scalar::Qi { re: a, im: b }, Scalar::Qi { re: c, im: d }) => Scalar::Qi {
                re: a * c - b * d,
                im: a * d + b * c,
            },
            _ => panic!("scalar field mismatch: {} vs {}", self.field(), other.field()),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Q(a) => Scalar::Q(a.recip()),
            Scalar::Fp { val, p } => Scalar::Fp {
                val: mod_inverse(*val, *p).expect("nonzero element of a prime field"),
                p: *p,
            },
            Scalar::Qi { re, im } => {
                // 1/(a+bi) = (a-bi)/(a²+b²)
                let norm = re * re + im * im;
                Scalar::Qi {
                    re: re / &norm,
                    im: -im / &norm,
                }
            }
        })
    }

    /// Quotient. Panics on division by zero or mixed fields.
    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv().expect("division by zero"))
    }

    /// Field conjugation: identity on Q and GF(p), complex conjugation on Q(i).
    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Qi { re, im } => Scalar::Qi {
                re: re.clone(),
                im: -im,
            },
            other => other.clone(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(a) => write!(f, "{a}"),
            Scalar::Fp { val, .. } => write!(f, "{val}"),
            Scalar::Qi { re, im } => {
                if im.is_zero() {
                    return write!(f, "{re}");
                }
                let imag = |f: &mut fmt::Formatter<'_>, im: &BigRational| -> fmt::Result {
                    if im.abs().is_one() {
                        write!(f, "i")
                    } else {
                        write!(f, "{}i", im.abs())
                    }
                };
                if re.is_zero() {
                    if im.is_negative() {
                        write!(f, "-")?;
                    }
                    return imag(f, im);
                }
                write!(f, "{re}{}", if im.is_negative() { "-" } else { "+" })?;
                imag(f, im)
            }
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse()
            .map_err(|_| Error::Parse(format!("bad integer {t:?}")))
    };
    match s.split_once('/') {
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(parse_int(num)?, den))
        }
        None => Ok(BigRational::from(parse_int(s)?)),
    }
}

/// Splits `"a+bi"` / `"a-bi"` / `"bi"` / `"a"` into real and imaginary parts.
fn parse_gaussian(s: &str) -> Result<(BigRational, BigRational)> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if !s.ends_with('i') {
        return Ok((parse_rational(&s)?, BigRational::zero()));
    }
    // Last '+'/'-' not in leading position separates the parts.
    let split = s
        .char_indices()
        .rev()
        .filter(|&(idx, c)| idx > 0 && (c == '+' || c == '-'))
        .map(|(idx, _)| idx)
        .next();
    let (re_str, im_str) = match split {
        Some(idx) => (&s[..idx], &s[idx..]),
        None => ("0", s.as_str()),
    };
    let im_str = im_str.strip_suffix('i').expect("checked above");
    let im = match im_str {
        "" | "+" => BigRational::one(),
        "-" => -BigRational::one(),
        t => parse_rational(t.strip_prefix('+').unwrap_or(t))?,
    };
    Ok((parse_rational(re_str)?, im))
}

fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Inverse of `a` mod prime `p` by the extended Euclidean algorithm.
fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        return None;
    }
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "modulus must be prime");
    Some(t0.rem_euclid(p as i128) as u64)
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_tags_round_trip() {
        for tag in ["Q", "GF:2", "GF:97", "Qi"] {
            assert_eq!(Field::parse(tag).unwrap().tag(), tag);
        }
        assert!(Field::parse("GF:4").is_err());
        assert!(Field::parse("R").is_err());
    }

    #[test]
    fn rational_arithmetic() {
        let f = Field::Q;
        let a = f.parse_scalar("3/4").unwrap();
        let b = f.parse_scalar("-1/2").unwrap();
        assert_eq!(a.add(&b), f.parse_scalar("1/4").unwrap());
        assert_eq!(a.mul(&b), f.parse_scalar("-3/8").unwrap());
        assert_eq!(a.div(&b), f.parse_scalar("-3/2").unwrap());
        assert_eq!(a.inv().unwrap(), f.parse_scalar("4/3").unwrap());
        assert_eq!(a.conj(), a);
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::Fp(7);
        let a = f.from_int(3);
        let b = f.from_int(5);
        assert_eq!(a.add(&b), f.from_int(1));
        assert_eq!(a.mul(&b), f.from_int(1));
        assert_eq!(a.inv().unwrap(), b);
        assert_eq!(f.parse_scalar("3/5").unwrap(), a.mul(&b.inv().unwrap()));
        assert_eq!(f.from_int(-1), f.from_int(6));
    }

    #[test]
    fn gaussian_arithmetic() {
        let f = Field::Qi;
        let a = f.parse_scalar("2+5i").unwrap();
        let b = f.parse_scalar("1-i").unwrap();
        // (2+5i)(1-i) = 2 - 2i + 5i + 5 = 7+3i
        assert_eq!(a.mul(&b), f.parse_scalar("7+3i").unwrap());
        assert_eq!(a.conj(), f.parse_scalar("2-5i").unwrap());
        let i = f.parse_scalar("i").unwrap();
        assert_eq!(i.mul(&i), f.from_int(-1));
        assert_eq!(i.inv().unwrap(), f.parse_scalar("-i").unwrap());
        // conjugation is an automorphism: conj(ab) = conj(a)conj(b)
        assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
    }

    #[test]
    fn gaussian_parse_and_display_round_trip() {
        let f = Field::Qi;
        for s in ["0", "1", "-1", "i", "-i", "2+5i", "2-5i", "3/2-1/2i", "5i", "-7/3i", "1+i"] {
            let v = f.parse_scalar(s).unwrap();
            assert_eq!(f.parse_scalar(&v.to_string()).unwrap(), v, "round trip {s}");
        }
        assert_eq!(f.parse_scalar("3/2 - 1/2i").unwrap().to_string(), "3/2-1/2i");
        assert_eq!(f.parse_scalar("0i").unwrap().to_string(), "0");
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixed_field_arithmetic_panics() {
        let _ = Field::Q.one().add(&Field::Fp(5).one());
    }
}
