//! Coefficient rings for convolution algebra elements.
//!
//! Exact arithmetic is carried out over the integers, the rationals,
//! and the Gaussian rationals; the latter stands in for the complex
//! field, since every linear question over a finite semigroup has
//! rational data. A complex `f64` ring is kept for the floating-point
//! refinement routines.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Ring tag carried by every algebra element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Ring {
    Int,
    Rat,
    GaussRat,
    Float64Complex,
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Ring::Int => "Int",
            Ring::Rat => "Rat",
            Ring::GaussRat => "GaussRat",
            Ring::Float64Complex => "Float64Complex",
        };
        f.write_str(name)
    }
}

/// A coefficient in one of the supported rings.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
    /// Real and imaginary rational parts.
    Gauss(BigRational, BigRational),
    Cplx(Complex64),
}

impl Scalar {
    pub fn ring(&self) -> Ring {
        match self {
            Scalar::Int(_) => Ring::Int,
            Scalar::Rat(_) => Ring::Rat,
            Scalar::Gauss(..) => Ring::GaussRat,
            Scalar::Cplx(_) => Ring::Float64Complex,
        }
    }

    pub fn zero(ring: Ring) -> Scalar {
        match ring {
            Ring::Int => Scalar::Int(BigInt::zero()),
            Ring::Rat => Scalar::Rat(BigRational::zero()),
            Ring::GaussRat => Scalar::Gauss(BigRational::zero(), BigRational::zero()),
            Ring::Float64Complex => Scalar::Cplx(Complex64::new(0.0, 0.0)),
        }
    }

    pub fn one(ring: Ring) -> Scalar {
        match ring {
            Ring::Int => Scalar::Int(BigInt::one()),
            Ring::Rat => Scalar::Rat(BigRational::one()),
            Ring::GaussRat => Scalar::Gauss(BigRational::one(), BigRational::zero()),
            Ring::Float64Complex => Scalar::Cplx(Complex64::new(1.0, 0.0)),
        }
    }

    pub fn from_int(ring: Ring, v: i64) -> Scalar {
        Scalar::promote(&Scalar::Int(BigInt::from(v)), ring).expect("integers embed everywhere")
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_zero(),
            Scalar::Rat(v) => v.is_zero(),
            Scalar::Gauss(re, im) => re.is_zero() && im.is_zero(),
            Scalar::Cplx(v) => v.re == 0.0 && v.im == 0.0,
        }
    }

    /// Lossless embedding into a larger ring; `None` when the target
    /// cannot hold the value exactly (only Float64Complex narrows).
    pub fn promote(&self, target: Ring) -> Option<Scalar> {
        if self.ring() == target {
            return Some(self.clone());
        }
        match (self, target) {
            (Scalar::Int(v), Ring::Rat) => Some(Scalar::Rat(BigRational::from(v.clone()))),
            (Scalar::Int(v), Ring::GaussRat) => {
                Some(Scalar::Gauss(BigRational::from(v.clone()), BigRational::zero()))
            }
            (Scalar::Rat(v), Ring::GaussRat) => Some(Scalar::Gauss(v.clone(), BigRational::zero())),
            (Scalar::Int(v), Ring::Float64Complex) => {
                Some(Scalar::Cplx(Complex64::new(v.to_f64()?, 0.0)))
            }
            (Scalar::Rat(v), Ring::Float64Complex) => {
                Some(Scalar::Cplx(Complex64::new(v.to_f64()?, 0.0)))
            }
            (Scalar::Gauss(re, im), Ring::Float64Complex) => {
                Some(Scalar::Cplx(Complex64::new(re.to_f64()?, im.to_f64()?)))
            }
            _ => None,
        }
    }

    /// Exact absolute value for `Int`/`Rat`; for `GaussRat` the upper
    /// bound `|re| + |im|`; `None` for floats.
    pub fn abs_exact_upper(&self) -> Option<BigRational> {
        match self {
            Scalar::Int(v) => Some(BigRational::from(v.abs())),
            Scalar::Rat(v) => Some(v.abs()),
            Scalar::Gauss(re, im) => Some(re.abs() + im.abs()),
            Scalar::Cplx(_) => None,
        }
    }

    /// Complex modulus in floating point.
    pub fn abs_f64(&self) -> f64 {
        match self {
            Scalar::Int(v) => v.to_f64().unwrap_or(f64::INFINITY).abs(),
            Scalar::Rat(v) => v.to_f64().unwrap_or(f64::INFINITY).abs(),
            Scalar::Gauss(re, im) => {
                let re = re.to_f64().unwrap_or(f64::INFINITY);
                let im = im.to_f64().unwrap_or(f64::INFINITY);
                re.hypot(im)
            }
            Scalar::Cplx(v) => v.norm(),
        }
    }

    /// Exact squared modulus, available for the exact rings.
    pub fn modulus_squared_exact(&self) -> Option<BigRational> {
        match self {
            Scalar::Int(v) => Some(BigRational::from(v * v)),
            Scalar::Rat(v) => Some(v * v),
            Scalar::Gauss(re, im) => Some(re * re + im * im),
            Scalar::Cplx(_) => None,
        }
    }

    /// Real part, in the same ring.
    pub fn real_part(&self) -> Scalar {
        match self {
            Scalar::Int(_) | Scalar::Rat(_) => self.clone(),
            Scalar::Gauss(re, _) => Scalar::Gauss(re.clone(), BigRational::zero()),
            Scalar::Cplx(v) => Scalar::Cplx(Complex64::new(v.re, 0.0)),
        }
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Int(v) => Some(BigRational::from(v.clone())),
            Scalar::Rat(v) => Some(v.clone()),
            Scalar::Gauss(re, im) if im.is_zero() => Some(re.clone()),
            _ => None,
        }
    }
}

macro_rules! same_ring_binop {
    ($lhs:expr, $rhs:expr, $op:tt) => {
        match ($lhs, $rhs) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a $op b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a $op b),
            (Scalar::Cplx(a), Scalar::Cplx(b)) => Scalar::Cplx(a $op b),
            (a, b) => panic!("ring mismatch in scalar arithmetic: {} vs {}", a.ring(), b.ring()),
        }
    };
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if let (Scalar::Gauss(ar, ai), Scalar::Gauss(br, bi)) = (self, rhs) {
            return Scalar::Gauss(ar + br, ai + bi);
        }
        same_ring_binop!(self, rhs, +)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        if let (Scalar::Gauss(ar, ai), Scalar::Gauss(br, bi)) = (self, rhs) {
            return Scalar::Gauss(ar - br, ai - bi);
        }
        same_ring_binop!(self, rhs, -)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if let (Scalar::Gauss(ar, ai), Scalar::Gauss(br, bi)) = (self, rhs) {
            return Scalar::Gauss(ar * br - ai * bi, ar * bi + ai * br);
        }
        same_ring_binop!(self, rhs, *)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Int(v) => Scalar::Int(-v),
            Scalar::Rat(v) => Scalar::Rat(-v),
            Scalar::Gauss(re, im) => Scalar::Gauss(-re, -im),
            Scalar::Cplx(v) => Scalar::Cplx(-v),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(v) => write!(f, "{v}"),
            Scalar::Rat(v) => write!(f, "{v}"),
            Scalar::Gauss(re, im) => write!(f, "{re}+{im}i"),
            Scalar::Cplx(v) => write!(f, "{v}"),
        }
    }
}
