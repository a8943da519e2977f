// zxopt - quantum circuit optimisation by search over ZX-calculus
//         congruences
// Copyright (C) 2026 - The zxopt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Exact phases, stored as rational multiples of pi reduced into [0, 2).

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

/// A phase `num/den * pi`, always kept in lowest terms with `0 <= num/den < 2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Phase(Rational64);

#[derive(Serialize, Deserialize)]
struct PhaseRepr {
    num: i64,
    den: i64,
}

impl Phase {
    pub fn new(num: i64, den: i64) -> Phase {
        assert!(den != 0, "phase denominator must be non-zero");
        Phase::from_rational(Rational64::new(num, den))
    }

    pub fn from_rational(r: Rational64) -> Phase {
        let two = Rational64::from_integer(2);
        let mut r = r % two;
        if r < Rational64::zero() {
            r += two;
        }
        Phase(r)
    }

    pub fn zero() -> Phase {
        Phase(Rational64::zero())
    }

    /// pi
    pub fn pi() -> Phase {
        Phase(Rational64::one())
    }

    pub fn to_rational(self) -> Rational64 {
        self.0
    }

    pub fn numer(self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(self) -> i64 {
        *self.0.denom()
    }

    /// The phase in radians, in [0, 2pi).
    pub fn to_f64(self) -> f64 {
        std::f64::consts::PI * (self.numer() as f64) / (self.denom() as f64)
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }

    /// 0 or pi
    pub fn is_pauli(self) -> bool {
        self.denom() == 1
    }

    /// pi/2 or 3pi/2
    pub fn is_proper_clifford(self) -> bool {
        self.denom() == 2
    }

    /// Any multiple of pi/2.
    pub fn is_clifford(self) -> bool {
        self.denom() <= 2
    }

    /// An odd multiple of pi/4.
    pub fn is_t_like(self) -> bool {
        self.denom() == 4
    }
}

impl fmt::Debug for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.numer(), self.denom()) {
            (0, _) => write!(f, "0"),
            (1, 1) => write!(f, "pi"),
            (n, 1) => write!(f, "{}*pi", n),
            (n, d) => write!(f, "{}*pi/{}", n, d),
        }
    }
}

impl From<i64> for Phase {
    /// Integer multiples of pi.
    fn from(n: i64) -> Phase {
        Phase::from_rational(Rational64::from_integer(n))
    }
}

impl Add for Phase {
    type Output = Phase;
    fn add(self, rhs: Phase) -> Phase {
        Phase::from_rational(self.0 + rhs.0)
    }
}

impl AddAssign for Phase {
    fn add_assign(&mut self, rhs: Phase) {
        *self = *self + rhs;
    }
}

impl Sub for Phase {
    type Output = Phase;
    fn sub(self, rhs: Phase) -> Phase {
        Phase::from_rational(self.0 - rhs.0)
    }
}

impl SubAssign for Phase {
    fn sub_assign(&mut self, rhs: Phase) {
        *self = *self - rhs;
    }
}

impl Neg for Phase {
    type Output = Phase;
    fn neg(self) -> Phase {
        Phase::from_rational(-self.0)
    }
}

impl Serialize for Phase {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PhaseRepr {
            num: self.numer(),
            den: self.denom(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Phase {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Phase, D::Error> {
        let r = PhaseRepr::deserialize(d)?;
        if r.den == 0 {
            return Err(serde::de::Error::custom("phase denominator is zero"));
        }
        Ok(Phase::new(r.num, r.den))
    }
}
