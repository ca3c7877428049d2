//! Moebius function, coprime counting on intervals, and the cardinality and
//! rank formulas.
//!
//! Several quantities come with more than one closed form. Where the forms
//! are proven equal the functions here compute all of them and return
//! [`Error::FormulaMismatch`] if they ever disagree. Sums with half-integer
//! terms are accumulated doubled and halved at the end.

use crate::error::{Error, Result};
use crate::fraction::{add, mul, sub, Fraction};
use crate::sequence::SequenceSpec;

/// Trial-division Moebius function.
///
/// ```
/// use farey_subseq::moebius;
/// assert_eq!(moebius(1).unwrap(), 1);
/// assert_eq!(moebius(6).unwrap(), 1);
/// assert_eq!(moebius(12).unwrap(), 0);
/// ```
pub fn moebius(d: i64) -> Result<i8> {
    if d < 1 {
        return Err(Error::InvalidParameters {
            n: d,
            m: 0,
            reason: "the Moebius function is defined for d >= 1",
        });
    }
    let primes = distinct_primes(d);
    let mut rest = d;
    for &p in &primes {
        rest /= p;
        if rest % p == 0 {
            return Ok(0);
        }
    }
    Ok(if primes.len().is_multiple_of(2) {
        1
    } else {
        -1
    })
}

fn distinct_primes(mut d: i64) -> Vec<i64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= d {
        if d % p == 0 {
            out.push(p);
            while d % p == 0 {
                d /= p;
            }
        }
        p += 1;
    }
    if d > 1 {
        out.push(d);
    }
    out
}

/// `mu(d)` for `1 <= d <= limit`, from a linear sieve.
#[derive(Clone, Debug)]
pub struct MoebiusTable {
    values: Vec<i8>,
}

impl MoebiusTable {
    pub fn new(limit: usize) -> MoebiusTable {
        let mut values = vec![0i8; limit + 1];
        let mut composite = vec![false; limit + 1];
        let mut primes = Vec::new();
        if limit >= 1 {
            values[1] = 1;
        }
        for i in 2..=limit {
            if !composite[i] {
                primes.push(i);
                values[i] = -1;
            }
            for &p in &primes {
                let ip = i * p;
                if ip > limit {
                    break;
                }
                composite[ip] = true;
                if i % p == 0 {
                    values[ip] = 0;
                    break;
                }
                values[ip] = -values[i];
            }
        }
        MoebiusTable { values }
    }

    pub fn limit(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    /// Panics if `d` is 0 or beyond the limit.
    pub fn get(&self, d: usize) -> i64 {
        assert!(d >= 1, "mu(0) is undefined");
        self.values[d] as i64
    }

    /// `sum_{d=1}^{limit} mu(d) * term(d)`.
    fn sum(&self, mut term: impl FnMut(i64) -> Result<i64>) -> Result<i64> {
        let mut acc = 0i64;
        for d in 1..=self.limit() {
            let mu = self.values[d] as i64;
            if mu != 0 {
                acc = add(acc, mul(mu, term(d as i64)?)?)?;
            }
        }
        Ok(acc)
    }
}

fn table(limit: i64) -> MoebiusTable {
    MoebiusTable::new(limit.max(1) as usize)
}

fn halve(what: &'static str, doubled: i64) -> Result<i64> {
    if doubled % 2 != 0 {
        return Err(Error::FormulaMismatch {
            what,
            values: vec![doubled],
        });
    }
    Ok(doubled / 2)
}

fn agree(what: &'static str, values: &[i64]) -> Result<i64> {
    if values.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::FormulaMismatch {
            what,
            values: values.to_vec(),
        });
    }
    Ok(values[0])
}

/// `phi(h; [i, l])`: how many `j` in `[i, l]`, `j >= 1`, are coprime to `h`.
///
/// Inclusion-exclusion over the squarefree divisors of `h`.
pub fn phi_interval(h: i64, i: i64, l: i64) -> i64 {
    assert!(h >= 1, "phi_interval needs h >= 1");
    let lo = i.max(1);
    if lo > l {
        return 0;
    }
    let primes = distinct_primes(h);
    let mut total = 0i64;
    for mask in 0u32..(1 << primes.len()) {
        let mut d = 1i64;
        for (bit, &p) in primes.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                d *= p;
            }
        }
        let count = l.div_euclid(d) - (lo - 1).div_euclid(d);
        if mask.count_ones() % 2 == 0 {
            total += count;
        } else {
            total -= count;
        }
    }
    total
}

fn check_g(n: i64, m: i64) -> Result<()> {
    if !(0 <= m && m < n) {
        return Err(Error::InvalidParameters {
            n,
            m,
            reason: "G_n^m counting needs 0 <= m < n",
        });
    }
    Ok(())
}

/// The three expressions for `|G_n^m|`, in order: the phi-sum over
/// denominators, the same sum split at `n - m + 1`, and the Moebius sum
/// `1 + sum_d mu(d) (floor(n/d) - floor((n-m)/d)/2) (floor((n-m)/d) + 1)`.
pub fn g_cardinality_forms(n: i64, m: i64) -> Result<[i64; 3]> {
    check_g(n, m)?;
    let mut phi_sum = 1i64;
    for j in 1..=n {
        phi_sum = add(phi_sum, phi_interval(j, (j + m - n).max(1), j))?;
    }

    // The first block stops at n even when n - m + 1 = n + 1 (m = 0).
    let split = (n - m + 1).min(n);
    let mut split_sum = 1i64;
    for j in 1..=split {
        split_sum = add(split_sum, phi_interval(j, 1, j))?;
    }
    for j in split + 1..=n {
        split_sum = add(split_sum, phi_interval(j, j + m - n, j))?;
    }

    let mu = table(n);
    let dual = n - m;
    let doubled = mu.sum(|d| {
        let b = dual / d;
        mul(sub(2 * (n / d), b)?, b + 1)
    })?;
    let moebius_sum = add(1, halve("|G_n^m|", doubled)?)?;
    Ok([phi_sum, split_sum, moebius_sum])
}

/// `|G_n^m|` for `0 <= m < n`.
pub fn g_cardinality(n: i64, m: i64) -> Result<i64> {
    agree("|G_n^m|", &g_cardinality_forms(n, m)?)
}

fn check_g_member(n: i64, m: i64, x: Fraction) -> Result<()> {
    check_g(n, m)?;
    let spec = SequenceSpec::gdiff(n, m)?;
    if !spec.contains(x) || x == Fraction::ZERO {
        return Err(Error::NotMember {
            fraction: x,
            sequence: format!("{spec} without 0/1"),
        });
    }
    Ok(())
}

/// Zero-based index of `x != 0/1` in `G_n^m`:
/// `t = sum_{j=1}^{n} phi(j; [max{1, j+m-n}, floor(j x)])`.
///
/// ```
/// use farey_subseq::{g_rank, Fraction};
/// assert_eq!(g_rank(6, 4, Fraction::HALF).unwrap(), 2);
/// assert_eq!(g_rank(6, 4, Fraction::ONE).unwrap(), 8);
/// ```
pub fn g_rank(n: i64, m: i64, x: Fraction) -> Result<i64> {
    check_g_member(n, m, x)?;
    let mut t = 0i64;
    for j in 1..=n {
        t = add(t, phi_interval(j, (j + m - n).max(1), x.floor_times(j)?))?;
    }
    Ok(t)
}

/// All three rank expressions side by side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankDiagnostics {
    /// The authoritative phi-sum, as returned by [`g_rank`].
    pub phi_sum: i64,
    /// The phi-sum split at `j = n - m + 1`.
    pub split_phi_sum: i64,
    /// `1 + sum_d mu(d) (b (a - (b+1)/2) - sum_{j<=a} min{b, floor(j(1-x))})`
    /// with `a = floor(n/d)`, `b = floor((n-m)/d)`.
    pub moebius_sum: i64,
}

impl RankDiagnostics {
    pub fn consistent(&self) -> bool {
        self.phi_sum == self.split_phi_sum && self.phi_sum == self.moebius_sum
    }
}

/// Evaluates every rank expression without asserting that they agree.
pub fn g_rank_diagnostics(n: i64, m: i64, x: Fraction) -> Result<RankDiagnostics> {
    let phi_sum = g_rank(n, m, x)?;

    let split = (n - m + 1).min(n);
    let mut split_phi_sum = 0i64;
    for j in 1..=split {
        split_phi_sum = add(split_phi_sum, phi_interval(j, 1, x.floor_times(j)?))?;
    }
    for j in split + 1..=n {
        split_phi_sum = add(split_phi_sum, phi_interval(j, j + m - n, x.floor_times(j)?))?;
    }

    let complement = x.mirror();
    let mu = table(n);
    let doubled = mu.sum(|d| {
        let (a, b) = (n / d, (n - m) / d);
        let mut inner = 0i64;
        for j in 1..=a {
            inner = add(inner, b.min(complement.floor_times(j)?))?;
        }
        sub(mul(b, sub(2 * a, b + 1)?)?, mul(2, inner)?)
    })?;
    let moebius_sum = add(1, halve("rank in G_n^m", doubled)?)?;
    Ok(RankDiagnostics {
        phi_sum,
        split_phi_sum,
        moebius_sum,
    })
}

fn check_f(q: i64, p: i64) -> Result<()> {
    if !(0 < p && p <= q) {
        return Err(Error::InvalidParameters {
            n: q,
            m: p,
            reason: "F_q^p counting needs 0 < p <= q",
        });
    }
    Ok(())
}

/// The two Moebius forms of `|F_q^p|`:
/// `1 + sum_d mu(d) (floor(q/d) - floor(p/d)/2) (floor(p/d) + 1)` and
/// `3/2 + sum_d mu(d) floor(p/d) (floor(q/d) - floor(p/d)/2)`.
pub fn f_cardinality_forms(q: i64, p: i64) -> Result<[i64; 2]> {
    check_f(q, p)?;
    let mu = table(q);
    let first = mu.sum(|d| {
        let (a, b) = (q / d, p / d);
        mul(sub(2 * a, b)?, b + 1)
    })?;
    let second = mu.sum(|d| {
        let (a, b) = (q / d, p / d);
        mul(b, sub(2 * a, b)?)
    })?;
    Ok([
        add(1, halve("|F_q^p|", first)?)?,
        halve("|F_q^p|", add(3, second)?)?,
    ])
}

/// `|F_q^p|` for `0 < p <= q`.
///
/// ```
/// use farey_subseq::f_cardinality;
/// assert_eq!(f_cardinality(6, 4).unwrap(), 12);
/// ```
pub fn f_cardinality(q: i64, p: i64) -> Result<i64> {
    agree("|F_q^p|", &f_cardinality_forms(q, p)?)
}

/// `|F(B(n),m)|` twice: as `|F_{n-m}^{c}| + |F_m^{c}| - 1` with
/// `c = min{m, n-m}`, and as `2 + sum_d mu(d) floor(m/d) floor((n-m)/d)`.
pub fn boolean_cardinality_forms(n: i64, m: i64) -> Result<[i64; 2]> {
    if !(0 < m && m < n) {
        return Err(Error::InvalidParameters {
            n,
            m,
            reason: "F(B(n),m) needs 0 < m < n",
        });
    }
    let c = m.min(n - m);
    let halves = f_cardinality(n - m, c)? + f_cardinality(m, c)? - 1;
    let mu = table(c);
    let product = add(2, mu.sum(|d| mul(m / d, (n - m) / d))?)?;
    Ok([halves, product])
}

/// `|F(B(n),m)|` for `0 < m < n`.
pub fn boolean_cardinality(n: i64, m: i64) -> Result<i64> {
    agree("|F(B(n),m)|", &boolean_cardinality_forms(n, m)?)
}

/// Length of any sequence by closed form. Parameters outside a formula's
/// stated range are clamped to the range where the sequence is the same
/// (`F_n^m = F_n` for `m >= n`, `G_n^m = F_n` for `m <= 0`).
pub fn cardinality(spec: &SequenceSpec) -> Result<i64> {
    use crate::sequence::Kind;
    let (n, m) = (spec.n(), spec.m());
    match spec.kind() {
        Kind::Full => f_cardinality(n, n),
        Kind::FNum => f_cardinality(n, m.min(n)),
        Kind::GDiff => g_cardinality(n, m.max(0)),
        Kind::Boolean => boolean_cardinality(n, m),
        Kind::BooleanLeft => f_cardinality(n - m, m.min(n - m)),
        Kind::BooleanRight => f_cardinality(m, m.min(n - m)),
    }
}

/// The three quantities tied together by
/// `sum_d mu(d) floor(t/d)^2 = |F(B(2t),t)| - 2 = 2|F_t| - 3`, plus the
/// companion sum `sum_d mu(d) floor(t/d)`, which is always 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub t: i64,
    pub linear_sum: i64,
    pub square_sum: i64,
    pub boolean_card: i64,
    pub farey_card: i64,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.linear_sum == 1
            && self.square_sum == self.boolean_card - 2
            && self.square_sum == 2 * self.farey_card - 3
    }
}

pub fn identity_values(t: i64) -> Result<IdentityCheck> {
    if t < 1 {
        return Err(Error::InvalidParameters {
            n: t,
            m: 0,
            reason: "identity check needs t >= 1",
        });
    }
    let mu = table(t);
    let linear_sum = mu.sum(|d| Ok(t / d))?;
    let square_sum = mu.sum(|d| mul(t / d, t / d))?;
    Ok(IdentityCheck {
        t,
        linear_sum,
        square_sum,
        boolean_card: boolean_cardinality(2 * t, t)?,
        farey_card: f_cardinality(t, t)?,
    })
}

/// True when both identities hold at `t`.
pub fn central_identity_check(t: i64) -> bool {
    identity_values(t).is_ok_and(|c| c.holds())
}
