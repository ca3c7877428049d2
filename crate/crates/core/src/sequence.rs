//! The six sequence families, their membership predicates, the brute-force
//! enumeration used as the reference everywhere else, and the fast
//! generators built on the three-term recurrence and the halfsequence
//! bijections.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fraction::{floor_of_min, gcd, mul, sub, Fraction};
use crate::maps::{F_TO_LEFT, F_TO_RIGHT};

/// Default largest order accepted by [`enumerate`].
pub const DEFAULT_ENUMERATION_BOUND: i64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    /// `F_n`
    Full,
    /// `F_n^m`: numerator at most `m`
    FNum,
    /// `G_n^m`: `k - h` at most `n - m`
    GDiff,
    /// `F(B(n),m)`
    Boolean,
    /// left halfsequence of `F(B(n),m)`, values `<= 1/2`
    BooleanLeft,
    /// right halfsequence of `F(B(n),m)`, values `>= 1/2`
    BooleanRight,
}

impl Kind {
    pub const ALL: [Kind; 6] = [
        Kind::Full,
        Kind::FNum,
        Kind::GDiff,
        Kind::Boolean,
        Kind::BooleanLeft,
        Kind::BooleanRight,
    ];

    /// Name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Kind::Full => "full",
            Kind::FNum => "fnum",
            Kind::GDiff => "gdiff",
            Kind::Boolean => "bool",
            Kind::BooleanLeft => "bool-left",
            Kind::BooleanRight => "bool-right",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Kind> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(s.to_string()))
    }
}

/// A validated description of one sequence.
///
/// For [`Kind::Full`] the parameter `m` is ignored and stored as 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SequenceSpec {
    kind: Kind,
    n: i64,
    m: i64,
}

impl SequenceSpec {
    pub fn new(kind: Kind, n: i64, m: i64) -> Result<SequenceSpec> {
        let invalid = |reason| Err(Error::InvalidParameters { n, m, reason });
        if n < 1 {
            return invalid("the order n must be at least 1");
        }
        match kind {
            Kind::Full => {
                return Ok(SequenceSpec { kind, n, m: 0 });
            }
            Kind::FNum if m < 1 => return invalid("F_n^m needs m >= 1"),
            Kind::GDiff if m > n - 1 => return invalid("G_n^m needs m <= n - 1"),
            Kind::Boolean | Kind::BooleanLeft | Kind::BooleanRight if !(0 < m && m < n) => {
                return invalid("F(B(n),m) needs 0 < m < n")
            }
            _ => {}
        }
        Ok(SequenceSpec { kind, n, m })
    }

    pub fn full(n: i64) -> Result<SequenceSpec> {
        SequenceSpec::new(Kind::Full, n, 0)
    }

    pub fn fnum(n: i64, m: i64) -> Result<SequenceSpec> {
        SequenceSpec::new(Kind::FNum, n, m)
    }

    pub fn gdiff(n: i64, m: i64) -> Result<SequenceSpec> {
        SequenceSpec::new(Kind::GDiff, n, m)
    }

    pub fn boolean(n: i64, m: i64) -> Result<SequenceSpec> {
        SequenceSpec::new(Kind::Boolean, n, m)
    }

    pub fn boolean_left(n: i64, m: i64) -> Result<SequenceSpec> {
        SequenceSpec::new(Kind::BooleanLeft, n, m)
    }

    pub fn boolean_right(n: i64, m: i64) -> Result<SequenceSpec> {
        SequenceSpec::new(Kind::BooleanRight, n, m)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    /// Membership straight from the defining predicates.
    pub fn contains(&self, x: Fraction) -> bool {
        let (h, k) = (x.num(), x.den());
        let (n, m) = (self.n, self.m);
        if k > n {
            return false;
        }
        match self.kind {
            Kind::Full => true,
            Kind::FNum => h <= m,
            Kind::GDiff => k - h <= n - m,
            Kind::Boolean => h <= m && k - h <= n - m,
            Kind::BooleanLeft => h <= m && k - h <= n - m && x <= Fraction::HALF,
            Kind::BooleanRight => h <= m && k - h <= n - m && x >= Fraction::HALF,
        }
    }

    /// The whole sequence, produced by the fast generators rather than by
    /// filtering `F_n`.
    pub fn generate(&self) -> Result<Vec<Fraction>> {
        let (n, m) = (self.n, self.m);
        match self.kind {
            Kind::Full => Ok(iterate_g(n, 0)?.collect()),
            Kind::FNum => Ok(iterate_f(n, m)?.collect()),
            Kind::GDiff => Ok(iterate_g(n, m)?.collect()),
            Kind::Boolean => generate_boolean(n, m),
            Kind::BooleanLeft => Ok(halfsequences(n, m)?.0),
            Kind::BooleanRight => Ok(halfsequences(n, m)?.1),
        }
    }

    fn first(&self) -> Fraction {
        match self.kind {
            Kind::BooleanRight => Fraction::HALF,
            _ => Fraction::ZERO,
        }
    }

    fn last(&self) -> Fraction {
        match self.kind {
            Kind::BooleanLeft => Fraction::HALF,
            _ => Fraction::ONE,
        }
    }

    /// True for the first and last element.
    pub fn is_endpoint(&self, x: Fraction) -> bool {
        x == self.first() || x == self.last()
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, m) = (self.n, self.m);
        match self.kind {
            Kind::Full => write!(f, "F_{n}"),
            Kind::FNum => write!(f, "F_{n}^{m}"),
            Kind::GDiff => write!(f, "G_{n}^{m}"),
            Kind::Boolean => write!(f, "F(B({n}),{m})"),
            Kind::BooleanLeft => write!(f, "F<=1/2(B({n}),{m})"),
            Kind::BooleanRight => write!(f, "F>=1/2(B({n}),{m})"),
        }
    }
}

pub fn member(spec: &SequenceSpec, x: Fraction) -> bool {
    spec.contains(x)
}

/// Brute-force listing: every reduced `h/k` with `k <= n` that passes the
/// predicate, sorted. This is the reference the rest of the crate is checked
/// against.
pub fn enumerate(spec: &SequenceSpec) -> Result<Vec<Fraction>> {
    enumerate_bounded(spec, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_bounded(spec: &SequenceSpec, bound: i64) -> Result<Vec<Fraction>> {
    if spec.n > bound {
        return Err(Error::SizeBound { n: spec.n, bound });
    }
    let mut out = Vec::new();
    for k in 1..=spec.n {
        for h in 0..=k {
            if gcd(h, k) != 1 {
                continue;
            }
            let x = Fraction::new_unchecked(h, k);
            if spec.contains(x) {
                out.push(x);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Space-separated `h/k` tokens.
pub fn format_plain(seq: &[Fraction]) -> String {
    let mut s = String::new();
    for (i, x) in seq.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        s.push_str(&x.to_string());
    }
    s
}

/// Given two consecutive terms `outer, middle` of `G_n^m`, the term on the
/// other side of `middle`. The relation is symmetric, so the same formula
/// walks forwards and backwards:
///
/// `t = floor(min{(k_o + n) / k_c, (k_o - h_o + n - m) / (k_c - h_c)})`,
/// `h = t h_c - h_o`, `k = t k_c - k_o`.
///
/// A zero `k_c - h_c` drops the second ratio.
pub(crate) fn g_third_term(n: i64, m: i64, outer: Fraction, middle: Fraction) -> Result<Fraction> {
    let (ho, ko) = (outer.num(), outer.den());
    let (hc, kc) = (middle.num(), middle.den());
    let t = floor_of_min(&[
        (ko.checked_add(n).ok_or(Error::Overflow)?, kc),
        (sub(ko - ho, sub(m, n)?)?, kc - hc),
    ])
    .ok_or(Error::Endpoint(middle))?;
    let h = sub(mul(t, hc)?, ho)?;
    let k = sub(mul(t, kc)?, ko)?;
    Fraction::new(h, k)
}

/// Stream of `G_n^m` driven by the three-term recurrence, seeded from the
/// known endpoints `0/1, 1/min{n-m+1, n}` (ascending) or `1/1, (n-1)/n`
/// (descending).
#[derive(Clone, Debug)]
pub struct GWalk {
    n: i64,
    m: i64,
    ascending: bool,
    prev: Option<Fraction>,
    cur: Option<Fraction>,
    done: bool,
}

impl GWalk {
    fn new(n: i64, m: i64, ascending: bool) -> Result<GWalk> {
        if n < 1 || m >= n {
            return Err(Error::InvalidParameters {
                n,
                m,
                reason: "G_n^m needs n >= 1 and m < n",
            });
        }
        Ok(GWalk {
            n,
            m,
            ascending,
            prev: None,
            cur: None,
            done: false,
        })
    }

    fn terminal(&self) -> Fraction {
        if self.ascending {
            Fraction::ONE
        } else {
            Fraction::ZERO
        }
    }
}

impl Iterator for GWalk {
    type Item = Fraction;

    fn next(&mut self) -> Option<Fraction> {
        if self.done {
            return None;
        }
        let (n, m) = (self.n, self.m);
        let item = match (self.prev, self.cur) {
            (_, None) => {
                if self.ascending {
                    Fraction::ZERO
                } else {
                    Fraction::ONE
                }
            }
            (None, Some(_)) => {
                if self.ascending {
                    Fraction::new_unchecked(1, (n - m + 1).min(n))
                } else if n == 1 {
                    Fraction::ZERO
                } else {
                    Fraction::new_unchecked(n - 1, n)
                }
            }
            (Some(p), Some(c)) => match g_third_term(n, m, p, c) {
                Ok(x) => x,
                Err(e) => panic!("recurrence left [0,1] after {p}, {c} in G_{n}^{m}: {e}"),
            },
        };
        self.prev = self.cur;
        self.cur = Some(item);
        if item == self.terminal() {
            self.done = true;
        }
        Some(item)
    }
}

impl std::iter::FusedIterator for GWalk {}

/// `G_n^m` in ascending order. Any `m < n` is accepted; for `m <= 0` the
/// sequence is all of `F_n`.
///
/// ```
/// use farey_subseq::{iterate_g, format_plain};
/// let g: Vec<_> = iterate_g(6, 4).unwrap().collect();
/// assert_eq!(format_plain(&g), "0/1 1/3 1/2 3/5 2/3 3/4 4/5 5/6 1/1");
/// ```
pub fn iterate_g(n: i64, m: i64) -> Result<GWalk> {
    GWalk::new(n, m, true)
}

/// `G_n^m` in descending order, from `1/1` down to `0/1`.
pub fn iterate_g_descending(n: i64, m: i64) -> Result<GWalk> {
    GWalk::new(n, m, false)
}

/// Stream of `F_n^m`, the mirror image of `G_n^{n-m}` walked in the opposite
/// direction.
#[derive(Clone, Debug)]
pub struct FWalk(GWalk);

impl Iterator for FWalk {
    type Item = Fraction;

    fn next(&mut self) -> Option<Fraction> {
        self.0.next().map(Fraction::mirror)
    }
}

impl std::iter::FusedIterator for FWalk {}

fn f_params(n: i64, m: i64) -> Result<(i64, i64)> {
    if n < 1 || m < 1 {
        return Err(Error::InvalidParameters {
            n,
            m,
            reason: "F_n^m needs n >= 1 and m >= 1",
        });
    }
    Ok((n, sub(n, m)?))
}

/// `F_n^m` in ascending order, for any `m >= 1`.
pub fn iterate_f(n: i64, m: i64) -> Result<FWalk> {
    let (n, dual) = f_params(n, m)?;
    Ok(FWalk(iterate_g_descending(n, dual)?))
}

/// `F_n^m` in descending order.
pub fn iterate_f_descending(n: i64, m: i64) -> Result<FWalk> {
    let (n, dual) = f_params(n, m)?;
    Ok(FWalk(iterate_g(n, dual)?))
}

fn check_boolean(n: i64, m: i64) -> Result<()> {
    if !(0 < m && m < n) {
        return Err(Error::InvalidParameters {
            n,
            m,
            reason: "F(B(n),m) needs 0 < m < n",
        });
    }
    Ok(())
}

/// `F(B(n),m)` assembled from its two halves: the left half is the image of
/// `F_{n-m}^m` under `h/k -> h/(k+h)`, the right half the image of
/// `F_m^{n-m}` under `h/k -> k/(k+h)` read backwards. The halves share `1/2`.
pub fn generate_boolean(n: i64, m: i64) -> Result<Vec<Fraction>> {
    let (mut left, right) = halfsequences(n, m)?;
    left.extend_from_slice(&right[1..]);
    Ok(left)
}

/// The left (`<= 1/2`) and right (`>= 1/2`) halfsequences of `F(B(n),m)`;
/// both contain `1/2`.
pub fn halfsequences(n: i64, m: i64) -> Result<(Vec<Fraction>, Vec<Fraction>)> {
    check_boolean(n, m)?;
    let left = iterate_f(n - m, m)?
        .map(|x| F_TO_LEFT.apply(x))
        .collect::<Result<Vec<_>>>()?;
    let right = iterate_f_descending(m, n - m)?
        .map(|x| F_TO_RIGHT.apply(x))
        .collect::<Result<Vec<_>>>()?;
    debug_assert_eq!(left.last(), Some(&Fraction::HALF));
    debug_assert_eq!(right.first(), Some(&Fraction::HALF));
    Ok((left, right))
}
