//! Reduced fractions in `[0, 1]` and the action of 2x2 unimodular matrices on
//! their vector presentation `[h, k]`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Floor of `num / den` for `den > 0`.
pub(crate) fn floor_div(num: i64, den: i64) -> i64 {
    debug_assert!(den > 0);
    num.div_euclid(den)
}

/// `floor(min(ratios))` where each ratio is `(num, den)` with `den > 0`.
///
/// The minimum is taken over the exact rationals and floored once. Ratios
/// with `den == 0` stand for `+inf` and are skipped; `None` if all are.
pub(crate) fn floor_of_min(ratios: &[(i64, i64)]) -> Option<i64> {
    let mut best: Option<(i64, i64)> = None;
    for &(num, den) in ratios {
        if den == 0 {
            continue;
        }
        debug_assert!(den > 0);
        best = match best {
            None => Some((num, den)),
            Some((bn, bd)) => {
                if (num as i128) * (bd as i128) < (bn as i128) * (den as i128) {
                    Some((num, den))
                } else {
                    Some((bn, bd))
                }
            }
        };
    }
    best.map(|(num, den)| floor_div(num, den))
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`.
pub(crate) fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    (old_r, old_s, old_t)
}

/// Inverse of `a` modulo `modulus`, in `[0, modulus)`. Requires `gcd(a, modulus) = 1`.
pub(crate) fn mod_inverse(a: i64, modulus: i64) -> Option<i64> {
    if modulus == 1 {
        return Some(0);
    }
    let (g, x, _) = ext_gcd(a.rem_euclid(modulus), modulus);
    (g == 1).then(|| x.rem_euclid(modulus))
}

/// An irreducible fraction `h/k` with `0 <= h <= k`, `k >= 1`.
///
/// `0/1` and `1/1` are the only representations of the endpoints.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: i64,
    den: i64,
}

impl Fraction {
    pub const ZERO: Fraction = Fraction { num: 0, den: 1 };
    pub const ONE: Fraction = Fraction { num: 1, den: 1 };
    pub const HALF: Fraction = Fraction { num: 1, den: 2 };

    /// Builds the reduced fraction equal to `h/k`.
    ///
    /// ```
    /// use farey_subseq::Fraction;
    /// assert_eq!(Fraction::new(2, 4).unwrap().to_string(), "1/2");
    /// assert_eq!(Fraction::new(0, 7).unwrap(), Fraction::ZERO);
    /// assert!(Fraction::new(3, 2).is_err());
    /// ```
    pub fn new(h: i64, k: i64) -> Result<Fraction> {
        if k <= 0 {
            return Err(Error::NonPositiveDenominator(k));
        }
        if h < 0 || h > k {
            return Err(Error::OutsideUnitInterval { num: h, den: k });
        }
        let g = gcd(h, k);
        Ok(Fraction {
            num: h / g,
            den: k / g,
        })
    }

    /// Caller guarantees the invariants.
    pub(crate) const fn new_unchecked(num: i64, den: i64) -> Fraction {
        Fraction { num, den }
    }

    pub fn num(self) -> i64 {
        self.num
    }

    pub fn den(self) -> i64 {
        self.den
    }

    /// `(h + h') / (k + k')`, reduced.
    pub fn mediant(self, other: Fraction) -> Result<Fraction> {
        Fraction::new(add(self.num, other.num)?, add(self.den, other.den)?)
    }

    /// `(k - h) / k`, the reflection through `1/2`.
    pub fn mirror(self) -> Fraction {
        if self.num == 0 {
            Fraction::ONE
        } else {
            Fraction::new_unchecked(self.den - self.num, self.den)
        }
    }

    pub fn is_endpoint(self) -> bool {
        self == Fraction::ZERO || self == Fraction::ONE
    }

    /// `floor(j * h / k)`.
    pub(crate) fn floor_times(self, j: i64) -> Result<i64> {
        Ok(floor_div(mul(j, self.num)?, self.den))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Accepts exactly `h/k` with decimal digits, no sign and no whitespace, and
/// only in lowest terms.
impl FromStr for Fraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Fraction> {
        let parse_err = || Error::Parse(s.to_string());
        let (h, k) = s.split_once('/').ok_or_else(parse_err)?;
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        if !digits(h) || !digits(k) {
            return Err(parse_err());
        }
        let h: i64 = h.parse().map_err(|_| parse_err())?;
        let k: i64 = k.parse().map_err(|_| parse_err())?;
        let reduced = Fraction::new(h, k)?;
        if reduced.num != h || reduced.den != k {
            return Err(Error::NotReduced {
                text: s.to_string(),
                reduced,
            });
        }
        Ok(reduced)
    }
}

/// `k * h' - h * k'` for `x = h/k`, `y = h'/k'`. Equals 1 for consecutive
/// terms of every sequence in this crate.
pub fn adjacency_determinant(x: Fraction, y: Fraction) -> i128 {
    x.den as i128 * y.num as i128 - x.num as i128 * y.den as i128
}

/// The integer matrix `[a b; c d]` with determinant `+1` or `-1`, acting on
/// column vectors `[h, k]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct UnimodularMap {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl UnimodularMap {
    pub const IDENTITY: UnimodularMap = UnimodularMap::from_rows([1, 0], [0, 1]);

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<UnimodularMap> {
        let det = a
            .checked_mul(d)
            .and_then(|ad| b.checked_mul(c).and_then(|bc| ad.checked_sub(bc)))
            .ok_or(Error::Overflow)?;
        if det != 1 && det != -1 {
            return Err(Error::NotUnimodular(det));
        }
        Ok(UnimodularMap { a, b, c, d })
    }

    /// For literal matrices in this crate; the determinant is checked in tests.
    pub(crate) const fn from_rows(top: [i64; 2], bottom: [i64; 2]) -> UnimodularMap {
        UnimodularMap {
            a: top[0],
            b: top[1],
            c: bottom[0],
            d: bottom[1],
        }
    }

    pub fn rows(&self) -> [[i64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    pub fn determinant(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn inverse(&self) -> UnimodularMap {
        let det = self.determinant();
        UnimodularMap {
            a: self.d * det,
            b: -self.b * det,
            c: -self.c * det,
            d: self.a * det,
        }
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &UnimodularMap) -> UnimodularMap {
        UnimodularMap {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
    }

    /// Maps `h/k` to `(a h + b k) / (c h + d k)`.
    ///
    /// The image of a reduced pair under a unimodular matrix is reduced, so the
    /// only normalization needed is of the sign and of the zero numerator. An
    /// image outside `[0, 1]` means `x` was not in the map's domain.
    pub fn apply(&self, x: Fraction) -> Result<Fraction> {
        let num = add(mul(self.a, x.num)?, mul(self.b, x.den)?)?;
        let den = add(mul(self.c, x.num)?, mul(self.d, x.den)?)?;
        if den <= 0 || num < 0 || num > den {
            return Err(Error::DomainViolation {
                source_fraction: x,
                num,
                den,
            });
        }
        debug_assert_eq!(gcd(num, den), 1);
        if num == 0 {
            return Ok(Fraction::ZERO);
        }
        Ok(Fraction::new_unchecked(num, den))
    }
}

impl fmt::Display for UnimodularMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} {}; {} {}]", self.a, self.b, self.c, self.d)
    }
}
