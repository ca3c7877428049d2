//! Closed-form predecessor and successor queries.
//!
//! In `G_n^m` the neighbors of an interior `h/k` come from one modular
//! inverse: the neighbors of `h/k` are the pairs `p/q` with `|kp - hq| = 1`,
//! a one-parameter family `(x0 + t h) / (y0 + t k)`, and the neighbor is
//! the member of that family with the largest admissible `t`. Neighbors in
//! `F_n^m` are obtained by reflecting through `h/k -> (k-h)/k`, and neighbors
//! in `F(B(n),m)` either from explicit formulas around `1/2, 1/3, 2/3` or by
//! carrying the question through the halfsequence bijections.

use crate::error::{Error, Result};
use crate::fraction::{add, adjacency_determinant, floor_of_min, mod_inverse, mul, sub, Fraction};
use crate::maps::{F_TO_LEFT, G_TO_RIGHT, LEFT_TO_F, RIGHT_TO_G};
use crate::sequence::{g_third_term, Kind, SequenceSpec};

/// How a [`NeighborResult`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// modular inverse in `G_n^m`
    ModularInverse,
    /// modular inverse in `G_n^{n-m}`, reflected into `F_n^m`
    ReflectedModularInverse,
    /// explicit formula for the anchors `1/2, 1/3, 2/3` of `F(B(n),m)`
    AnchorFormula,
    /// neighbors of the image under a halfsequence bijection, mapped back
    HalfsequenceBijection,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ModularInverse => "modular-inverse",
            Method::ReflectedModularInverse => "reflected-modular-inverse",
            Method::AnchorFormula => "anchor-formula",
            Method::HalfsequenceBijection => "halfsequence-bijection",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NeighborResult {
    pub target: Fraction,
    /// `None` only at the first element.
    pub predecessor: Option<Fraction>,
    /// `None` only at the last element.
    pub successor: Option<Fraction>,
    pub method: Method,
}

fn g_spec(n: i64, m: i64) -> Result<SequenceSpec> {
    SequenceSpec::gdiff(n, m)
}

fn require_interior(spec: &SequenceSpec, x: Fraction) -> Result<()> {
    if !spec.contains(x) {
        return Err(Error::NotMember {
            fraction: x,
            sequence: spec.to_string(),
        });
    }
    if spec.is_endpoint(x) {
        return Err(Error::Endpoint(x));
    }
    Ok(())
}

/// `[g_0, g_1, g_{N-2}, g_{N-1}]` of `G_n^m`, i.e.
/// `0/1, 1/min{n-m+1, n}, (n-1)/n, 1/1`.
pub fn g_endpoints(n: i64, m: i64) -> Result<[Fraction; 4]> {
    g_spec(n, m)?;
    let second = Fraction::new(1, (n - m + 1).min(n))?;
    let penultimate = Fraction::new(n - 1, n)?;
    Ok([Fraction::ZERO, second, penultimate, Fraction::ONE])
}

/// `side = -1` for the predecessor, `+1` for the successor.
fn g_neighbor(n: i64, m: i64, x: Fraction, side: i64) -> Result<Fraction> {
    require_interior(&g_spec(n, m)?, x)?;
    let (h, k) = (x.num(), x.den());
    // x0 = side * k^{-1} (mod h), shifted into the window [m - h + 1, m].
    let inv = mod_inverse(k, h).expect("h/k is reduced");
    let residue = (side * inv).rem_euclid(h);
    let x0 = sub(m, sub(m, residue)?.rem_euclid(h))?;
    let y0 = sub(mul(k, x0)?, side)? / h;
    debug_assert_eq!(k * x0 - h * y0, side);
    let t = floor_of_min(&[(add(sub(n, m)?, x0 - y0)?, k - h), (sub(n, y0)?, k)])
        .expect("k - h > 0 for interior fractions");
    Fraction::new(add(x0, mul(t, h)?)?, add(y0, mul(t, k)?)?)
}

/// The fraction immediately before `x` in `G_n^m`.
///
/// ```
/// use farey_subseq::{g_predecessor, Fraction};
/// let half: Fraction = "1/2".parse().unwrap();
/// assert_eq!(g_predecessor(6, 4, half).unwrap().to_string(), "1/3");
/// ```
pub fn g_predecessor(n: i64, m: i64, x: Fraction) -> Result<Fraction> {
    g_neighbor(n, m, x, -1)
}

/// The fraction immediately after `x` in `G_n^m`.
pub fn g_successor(n: i64, m: i64, x: Fraction) -> Result<Fraction> {
    g_neighbor(n, m, x, 1)
}

/// Neighbors of `1/k` in `G_n^m`: `q/(kq+1)` and `r/(kr-1)` with
/// `q = floor(min{(n-m-1)/(k-1), (n-1)/k})` and
/// `r = floor(min{(n-m+1)/(k-1), (n+1)/k})`.
pub fn g_unit_fraction_neighbors(n: i64, m: i64, k: i64) -> Result<(Fraction, Fraction)> {
    if n <= 1 || k <= 1 {
        return Err(Error::InvalidParameters {
            n,
            m,
            reason: "unit-fraction neighbors need n > 1 and k > 1",
        });
    }
    let spec = g_spec(n, m)?;
    let unit = Fraction::new(1, k)?;
    require_interior(&spec, unit)?;
    let q = floor_of_min(&[(sub(n - m, 1)?, k - 1), (n - 1, k)]).expect("k > 1");
    let r = floor_of_min(&[(add(n - m, 1)?, k - 1), (n + 1, k)]).expect("k > 1");
    Ok((
        Fraction::new(q, add(mul(k, q)?, 1)?)?,
        Fraction::new(r, sub(mul(k, r)?, 1)?)?,
    ))
}

fn check_consecutive(spec: &SequenceSpec, a: Fraction, b: Fraction) -> Result<()> {
    let not_consecutive = |x| Error::NotMember {
        fraction: x,
        sequence: format!("consecutive pairs ({a}, {b}) of {spec}"),
    };
    for x in [a, b] {
        if !spec.contains(x) {
            return Err(Error::NotMember {
                fraction: x,
                sequence: spec.to_string(),
            });
        }
    }
    // Between two unimodular neighbours, the mediant is the element with the
    // smallest denominator and the smallest k - h, so it decides.
    if adjacency_determinant(a, b) != 1 || spec.contains(a.mediant(b)?) {
        return Err(not_consecutive(b));
    }
    Ok(())
}

/// The term after `cur`, given that `prev, cur` are consecutive in `G_n^m`.
pub fn g_next_from_pair(n: i64, m: i64, prev: Fraction, cur: Fraction) -> Result<Fraction> {
    check_consecutive(&g_spec(n, m)?, prev, cur)?;
    if cur == Fraction::ONE {
        return Err(Error::Endpoint(cur));
    }
    g_third_term(n, m, prev, cur)
}

/// The term before `cur`, given that `cur, next` are consecutive in `G_n^m`.
pub fn g_prev_from_pair(n: i64, m: i64, cur: Fraction, next: Fraction) -> Result<Fraction> {
    check_consecutive(&g_spec(n, m)?, cur, next)?;
    if cur == Fraction::ZERO {
        return Err(Error::Endpoint(cur));
    }
    g_third_term(n, m, next, cur)
}

fn f_dual(n: i64, m: i64, x: Fraction) -> Result<i64> {
    require_interior(&SequenceSpec::fnum(n, m)?, x)?;
    sub(n, m)
}

/// The fraction immediately before `x` in `F_n^m`.
pub fn f_predecessor(n: i64, m: i64, x: Fraction) -> Result<Fraction> {
    let dual = f_dual(n, m, x)?;
    Ok(g_successor(n, dual, x.mirror())?.mirror())
}

/// The fraction immediately after `x` in `F_n^m`.
pub fn f_successor(n: i64, m: i64, x: Fraction) -> Result<Fraction> {
    let dual = f_dual(n, m, x)?;
    Ok(g_predecessor(n, dual, x.mirror())?.mirror())
}

fn branch(n: i64, m: i64, reason: &'static str) -> Error {
    Error::InvalidParameters { n, m, reason }
}

/// Predecessor and successor of `1/2`, `1/3` or `2/3` in `F(B(n),m)` for
/// `n != 2m`, from explicit formulas in `n - m` (when `m > n/2`) or in `m`
/// (when `m < n/2`).
///
/// ```
/// use farey_subseq::{boolean_special_neighbors, Fraction};
/// let (p, s) = boolean_special_neighbors(6, 4, Fraction::HALF).unwrap();
/// assert_eq!((p.to_string(), s.to_string()), ("1/3".into(), "3/5".into()));
/// ```
pub fn boolean_special_neighbors(n: i64, m: i64, anchor: Fraction) -> Result<(Fraction, Fraction)> {
    let spec = SequenceSpec::boolean(n, m)?;
    if 2 * m == n {
        return Err(branch(n, m, "anchor formulas do not cover n = 2m"));
    }
    let third = Fraction::new(1, 3)?;
    let two_thirds = Fraction::new(2, 3)?;
    if anchor != Fraction::HALF && anchor != third && anchor != two_thirds {
        return Err(Error::Unsupported("anchor must be one of 1/2, 1/3, 2/3"));
    }
    let f = Fraction::new;
    require_interior(&spec, anchor)?;
    let pair = if 2 * m > n {
        let d = n - m;
        if anchor == Fraction::HALF {
            (f(d - 1, 2 * d - 1)?, f(d + 1, 2 * d + 1)?)
        } else if anchor == two_thirds {
            let a = d.min((m + 1) / 2);
            let b = d.min((m - 1) / 2);
            (f(2 * a - 1, 3 * a - 1)?, f(2 * b + 1, 3 * b + 1)?)
        } else {
            if d <= 1 {
                return Err(branch(n, m, "neighbors of 1/3 for m > n/2 need n - m > 1"));
            }
            if d % 2 == 0 {
                (f((d - 2) / 2, (3 * d - 4) / 2)?, f(d / 2, (3 * d - 2) / 2)?)
            } else {
                (
                    f((d - 1) / 2, (3 * d - 1) / 2)?,
                    f((d + 1) / 2, (3 * d + 1) / 2)?,
                )
            }
        }
    } else if anchor == Fraction::HALF {
        (f(m, 2 * m + 1)?, f(m, 2 * m - 1)?)
    } else if anchor == third {
        // mirror image of the 2/3 case above; the caps are m + 1 and m - 1,
        // not m (with cap m the formula fails already at n = 4, m = 1)
        let a = (m + 1).min((n - m + 1) / 2);
        let b = (m - 1).min((n - m - 1) / 2);
        (f(a - 1, 3 * a - 2)?, f(b + 1, 3 * b + 2)?)
    } else {
        if m <= 1 {
            return Err(branch(n, m, "neighbors of 2/3 for m < n/2 need m > 1"));
        }
        if m % 2 == 0 {
            (f(m - 1, (3 * m - 2) / 2)?, f(m - 1, (3 * m - 4) / 2)?)
        } else {
            (f(m, (3 * m + 1) / 2)?, f(m, (3 * m - 1) / 2)?)
        }
    };
    Ok(pair)
}

/// Neighbors of any interior `x` of `F(B(n),m)`, found by sending `x` into
/// `F_{n-m}^m` (left half) or `G_m^{2m-n}` (right half), taking neighbors
/// there and mapping them back.
pub fn boolean_neighbors(n: i64, m: i64, x: Fraction) -> Result<(Fraction, Fraction)> {
    require_interior(&SequenceSpec::boolean(n, m)?, x)?;
    if x < Fraction::HALF {
        let y = LEFT_TO_F.apply(x)?;
        Ok((
            F_TO_LEFT.apply(f_predecessor(n - m, m, y)?)?,
            F_TO_LEFT.apply(f_successor(n - m, m, y)?)?,
        ))
    } else if x > Fraction::HALF {
        let y = RIGHT_TO_G.apply(x)?;
        Ok((
            G_TO_RIGHT.apply(g_predecessor(m, 2 * m - n, y)?)?,
            G_TO_RIGHT.apply(g_successor(m, 2 * m - n, y)?)?,
        ))
    } else {
        // 1/2 is the image of the last term of F_{n-m}^m and of the first
        // term of G_m^{2m-n}.
        let (_, before_last) = f_second_and_penultimate(n - m, m)?;
        let [_, second, ..] = g_endpoints(m, 2 * m - n)?;
        Ok((F_TO_LEFT.apply(before_last)?, G_TO_RIGHT.apply(second)?))
    }
}

/// Second and penultimate terms of `F_n^m`, reflected from `G_n^{n-m}`.
fn f_second_and_penultimate(n: i64, m: i64) -> Result<(Fraction, Fraction)> {
    let [_, second, penultimate, _] = g_endpoints(n, sub(n, m)?)?;
    Ok((penultimate.mirror(), second.mirror()))
}

/// Second and penultimate terms of the family `spec` belongs to; for the
/// halfsequences this is `F(B(n),m)` itself.
fn second_and_penultimate(spec: &SequenceSpec) -> Result<(Fraction, Fraction)> {
    let (n, m) = (spec.n(), spec.m());
    match spec.kind() {
        Kind::Full | Kind::GDiff => {
            let [_, second, penultimate, _] = g_endpoints(n, m)?;
            Ok((second, penultimate))
        }
        Kind::FNum => f_second_and_penultimate(n, m),
        Kind::Boolean | Kind::BooleanLeft | Kind::BooleanRight => {
            let (second, _) = f_second_and_penultimate(n - m, m)?;
            let [_, _, penultimate, _] = g_endpoints(m, 2 * m - n)?;
            Ok((F_TO_LEFT.apply(second)?, G_TO_RIGHT.apply(penultimate)?))
        }
    }
}

/// Neighbors of `x` in any sequence, by the closed forms above.
///
/// Endpoints yield `None` on the open side; `x` must belong to the sequence.
pub fn neighbors(spec: &SequenceSpec, x: Fraction) -> Result<NeighborResult> {
    if !spec.contains(x) {
        return Err(Error::NotMember {
            fraction: x,
            sequence: spec.to_string(),
        });
    }
    let (n, m) = (spec.n(), spec.m());
    let method = match spec.kind() {
        Kind::Full | Kind::GDiff => Method::ModularInverse,
        Kind::FNum => Method::ReflectedModularInverse,
        _ if boolean_special_neighbors(n, m, x).is_ok() => Method::AnchorFormula,
        _ => Method::HalfsequenceBijection,
    };
    let (mut pred, mut succ) = if x == Fraction::ZERO {
        (None, Some(second_and_penultimate(spec)?.0))
    } else if x == Fraction::ONE {
        (Some(second_and_penultimate(spec)?.1), None)
    } else {
        let (p, s) = match method {
            Method::ModularInverse => (g_predecessor(n, m, x)?, g_successor(n, m, x)?),
            Method::ReflectedModularInverse => (f_predecessor(n, m, x)?, f_successor(n, m, x)?),
            Method::AnchorFormula => boolean_special_neighbors(n, m, x)?,
            Method::HalfsequenceBijection => boolean_neighbors(n, m, x)?,
        };
        (Some(p), Some(s))
    };
    match spec.kind() {
        Kind::BooleanLeft if x == Fraction::HALF => succ = None,
        Kind::BooleanRight if x == Fraction::HALF => pred = None,
        _ => {}
    }
    Ok(NeighborResult {
        target: x,
        predecessor: pred,
        successor: succ,
        method,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::enumerate;

    fn fr(h: i64, k: i64) -> Fraction {
        Fraction::new(h, k).unwrap()
    }

    #[test]
    fn g_predecessor_examples() {
        assert_eq!(g_predecessor(6, 4, fr(1, 2)).unwrap(), fr(1, 3));
        assert_eq!(g_predecessor(6, 4, fr(3, 5)).unwrap(), fr(1, 2));
        assert_eq!(g_predecessor(6, 0, fr(1, 6)).unwrap(), Fraction::ZERO);
    }

    #[test]
    fn g_successor_examples() {
        assert_eq!(g_successor(6, 4, fr(1, 2)).unwrap(), fr(3, 5));
        assert_eq!(g_successor(6, 4, fr(4, 5)).unwrap(), fr(5, 6));
        assert_eq!(g_successor(6, 0, fr(5, 6)).unwrap(), Fraction::ONE);
    }

    #[test]
    fn g_neighbor_errors() {
        assert!(matches!(
            g_predecessor(6, 4, fr(1, 4)),
            Err(Error::NotMember { .. })
        ));
        assert_eq!(
            g_successor(6, 4, Fraction::ONE),
            Err(Error::Endpoint(Fraction::ONE))
        );
        assert_eq!(
            g_predecessor(6, 4, Fraction::ZERO),
            Err(Error::Endpoint(Fraction::ZERO))
        );
        assert!(g_successor(6, 6, fr(1, 2)).is_err());
    }

    #[test]
    fn unit_fraction_examples() {
        assert_eq!(
            g_unit_fraction_neighbors(6, 4, 3).unwrap(),
            (Fraction::ZERO, fr(1, 2))
        );
        assert_eq!(
            g_unit_fraction_neighbors(6, 0, 6).unwrap(),
            (Fraction::ZERO, fr(1, 5))
        );
        assert_eq!(
            g_unit_fraction_neighbors(6, 4, 2).unwrap(),
            (fr(1, 3), fr(3, 5))
        );
        assert!(g_unit_fraction_neighbors(6, 4, 4).is_err());
        assert!(g_unit_fraction_neighbors(6, 4, 1).is_err());
    }

    #[test]
    fn pair_recurrence_examples() {
        assert_eq!(
            g_next_from_pair(6, 4, fr(1, 3), fr(1, 2)).unwrap(),
            fr(3, 5)
        );
        assert_eq!(
            g_prev_from_pair(6, 4, fr(1, 2), fr(3, 5)).unwrap(),
            fr(1, 3)
        );
        assert_eq!(
            g_next_from_pair(6, 4, fr(4, 5), fr(5, 6)).unwrap(),
            Fraction::ONE
        );
        // not consecutive: 2/3 sits between
        assert!(g_next_from_pair(6, 4, fr(1, 2), fr(3, 4)).is_err());
        // 1/2 lies between 0/1 and 1/1
        assert!(g_next_from_pair(6, 4, Fraction::ZERO, Fraction::ONE).is_err());
        assert_eq!(
            g_next_from_pair(6, 4, fr(5, 6), Fraction::ONE),
            Err(Error::Endpoint(Fraction::ONE))
        );
        assert_eq!(
            g_prev_from_pair(6, 4, Fraction::ZERO, fr(1, 3)),
            Err(Error::Endpoint(Fraction::ZERO))
        );
    }

    #[test]
    fn f_neighbor_examples() {
        assert_eq!(f_successor(6, 4, fr(4, 5)).unwrap(), Fraction::ONE);
        assert_eq!(f_predecessor(6, 4, fr(1, 6)).unwrap(), Fraction::ZERO);
        assert_eq!(f_predecessor(4, 2, fr(1, 2)).unwrap(), fr(1, 3));
        assert!(f_successor(6, 4, fr(5, 6)).is_err());
    }

    #[test]
    fn special_anchor_examples() {
        assert_eq!(
            boolean_special_neighbors(6, 4, fr(1, 2)).unwrap(),
            (fr(1, 3), fr(3, 5))
        );
        assert_eq!(
            boolean_special_neighbors(6, 4, fr(2, 3)).unwrap(),
            (fr(3, 5), fr(3, 4))
        );
        assert_eq!(
            boolean_special_neighbors(6, 2, fr(1, 3)).unwrap(),
            (fr(1, 4), fr(2, 5))
        );
    }

    #[test]
    fn third_anchor_below_half() {
        // F(B(4),1) = 0/1 1/4 1/3 1/2 1/1
        assert_eq!(
            boolean_special_neighbors(4, 1, fr(1, 3)).unwrap(),
            (fr(1, 4), fr(1, 2))
        );
        // F(B(7),2) has 2/7 < 1/3 < 2/5
        assert_eq!(
            boolean_special_neighbors(7, 2, fr(1, 3)).unwrap(),
            (fr(2, 7), fr(2, 5))
        );
    }

    #[test]
    fn anchors_match_oracle() {
        for n in 2..=30 {
            for m in 1..n {
                if 2 * m == n {
                    continue;
                }
                let spec = SequenceSpec::boolean(n, m).unwrap();
                let seq = enumerate(&spec).unwrap();
                for i in 1..seq.len() - 1 {
                    if let Ok(pair) = boolean_special_neighbors(n, m, seq[i]) {
                        assert_eq!(pair, (seq[i - 1], seq[i + 1]), "{spec} at {}", seq[i]);
                    }
                }
            }
        }
    }

    #[test]
    fn special_anchor_errors() {
        assert!(boolean_special_neighbors(6, 3, fr(1, 2)).is_err());
        assert!(boolean_special_neighbors(6, 5, fr(1, 3)).is_err());
        assert!(boolean_special_neighbors(6, 1, fr(2, 3)).is_err());
        assert!(boolean_special_neighbors(6, 4, fr(3, 4)).is_err());
        assert!(boolean_special_neighbors(6, 6, fr(1, 2)).is_err());
    }

    #[test]
    fn boolean_neighbors_examples() {
        assert_eq!(
            boolean_neighbors(6, 4, fr(1, 2)).unwrap(),
            (fr(1, 3), fr(3, 5))
        );
        assert_eq!(
            boolean_neighbors(6, 4, fr(1, 3)).unwrap(),
            (Fraction::ZERO, fr(1, 2))
        );
        assert_eq!(
            boolean_neighbors(6, 4, fr(4, 5)).unwrap(),
            (fr(3, 4), Fraction::ONE)
        );
    }

    #[test]
    fn dispatcher_endpoints() {
        let spec = SequenceSpec::gdiff(6, 4).unwrap();
        let r = neighbors(&spec, Fraction::ZERO).unwrap();
        assert_eq!((r.predecessor, r.successor), (None, Some(fr(1, 3))));
        let r = neighbors(&spec, Fraction::ONE).unwrap();
        assert_eq!((r.predecessor, r.successor), (Some(fr(5, 6)), None));
        let left = SequenceSpec::boolean_left(6, 4).unwrap();
        let r = neighbors(&left, Fraction::HALF).unwrap();
        assert_eq!((r.predecessor, r.successor), (Some(fr(1, 3)), None));
        assert_eq!(r.method, Method::AnchorFormula);
        assert!(neighbors(&spec, fr(5, 7)).is_err());
    }

    fn oracle_neighbors(seq: &[Fraction], i: usize) -> (Fraction, Fraction) {
        (seq[i - 1], seq[i + 1])
    }

    #[test]
    fn g_and_f_match_oracle() {
        for n in 2..=25 {
            for m in 0..n {
                let seq = enumerate(&SequenceSpec::gdiff(n, m).unwrap()).unwrap();
                for i in 1..seq.len() - 1 {
                    let x = seq[i];
                    let expect = oracle_neighbors(&seq, i);
                    assert_eq!(
                        (
                            g_predecessor(n, m, x).unwrap(),
                            g_successor(n, m, x).unwrap()
                        ),
                        expect,
                        "G_{n}^{m} at {x}"
                    );
                }
            }
            for m in 1..=n {
                let seq = enumerate(&SequenceSpec::fnum(n, m).unwrap()).unwrap();
                for i in 1..seq.len() - 1 {
                    let x = seq[i];
                    assert_eq!(
                        (
                            f_predecessor(n, m, x).unwrap(),
                            f_successor(n, m, x).unwrap()
                        ),
                        oracle_neighbors(&seq, i),
                        "F_{n}^{m} at {x}"
                    );
                }
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn predecessor_and_successor_are_inverse(
                (n, m, idx) in (3i64..80).prop_flat_map(|n| (Just(n), 0..n, any::<prop::sample::Index>()))
            ) {
                let seq: Vec<_> = crate::sequence::iterate_g(n, m).unwrap().collect();
                prop_assume!(seq.len() > 3);
                // interior element whose predecessor is interior too
                let i = 2 + idx.index(seq.len() - 3);
                let x = seq[i];
                let p = g_predecessor(n, m, x).unwrap();
                prop_assert_eq!(g_successor(n, m, p).unwrap(), x);
                prop_assert_eq!(adjacency_determinant(p, x), 1);
                let s = g_successor(n, m, x).unwrap();
                prop_assert_eq!(adjacency_determinant(x, s), 1);
            }
        }
    }
}
