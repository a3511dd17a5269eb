//! Type-A orbit counts.
//!
//! `d_n` is the number of essential pairs of the rank-`n` diagram `A_n`,
//! i.e. the number of `G x G`-orbits of the enveloping monoid of `SL(n+1)`.
//! `e_n = d_n - 2^n` for `n >= 1`.
//!
//! Three independent routes are provided: a recurrence for `e_n`, the linear
//! recurrence coming from the rational generating function
//! `(1 - 2x + 2x^2) / (1 - 5x + 6x^2 - 4x^3)`, and counting pairs directly.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::dynkin::{DiagramKind, DynkinDiagram};
use crate::envlattice::count_essential_pairs;
use crate::error::Result;

fn pow2(k: usize) -> BigInt {
    BigInt::one() << k
}

/// `e_0..=e_n` from the reorganized recurrence
/// `e_n = 2 e_{n-1} + sum_{s=1}^{n-1} (2^{s+1} - 2) e_{n-s-1} + (n-1) 2^n + 1`.
pub fn e_values(n: usize) -> Vec<BigInt> {
    let mut e: Vec<BigInt> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let v = match m {
            0 => BigInt::zero(),
            1 => BigInt::one(),
            _ => {
                let mut acc = BigInt::from(2) * &e[m - 1];
                for s in 1..m {
                    acc += (pow2(s + 1) - 2) * &e[m - s - 1];
                }
                acc + BigInt::from(m - 1) * pow2(m) + 1
            }
        };
        e.push(v);
    }
    e
}

/// `e_0..=e_n` from the unreorganized recurrence
/// `e_n = 2 e_{n-1} + 2^n - 1 + sum_{s=1}^{n-1} 2 (2^s - 1) (e_{n-s-1} + 2^{n-s-1})`.
pub fn e_values_unreduced(n: usize) -> Vec<BigInt> {
    let mut e: Vec<BigInt> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let v = match m {
            0 => BigInt::zero(),
            1 => BigInt::one(),
            _ => {
                let mut acc = BigInt::from(2) * &e[m - 1] + pow2(m) - 1;
                for s in 1..m {
                    acc += BigInt::from(2) * (pow2(s) - 1) * (&e[m - s - 1] + pow2(m - s - 1));
                }
                acc
            }
        };
        e.push(v);
    }
    e
}

pub fn e_seq(n: usize) -> BigInt {
    e_values(n).pop().expect("non-empty")
}

/// `d_0..=d_n` with `d_0 = 1` and `d_n = 2^n + e_n`.
pub fn d_values(n: usize) -> Vec<BigInt> {
    e_values(n)
        .into_iter()
        .enumerate()
        .map(|(m, e)| if m == 0 { BigInt::one() } else { pow2(m) + e })
        .collect()
}

pub fn d_seq(n: usize) -> BigInt {
    d_values(n).pop().expect("non-empty")
}

/// `d_0..=d_n` from `d_n = 5 d_{n-1} - 6 d_{n-2} + 4 d_{n-3}` with seeds 1, 3, 11.
pub fn d_values_gf(n: usize) -> Vec<BigInt> {
    let mut d: Vec<BigInt> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let v = match m {
            0 => BigInt::from(1),
            1 => BigInt::from(3),
            2 => BigInt::from(11),
            _ => {
                BigInt::from(5) * &d[m - 1] - BigInt::from(6) * &d[m - 2]
                    + BigInt::from(4) * &d[m - 3]
            }
        };
        d.push(v);
    }
    d
}

pub fn d_via_gf(n: usize) -> BigInt {
    d_values_gf(n).pop().expect("non-empty")
}

/// Counts essential pairs of `A_n`; `A_0` has only the empty pair.
pub fn d_via_enumeration(n: usize, rank_cap: usize) -> Result<BigInt> {
    if n == 0 {
        return Ok(BigInt::one());
    }
    let diagram = DynkinDiagram::build(DiagramKind::A, n)?;
    count_essential_pairs(&diagram, rank_cap).map(BigInt::from)
}

/// Product of two power series truncated after degree `n`.
fn mul_truncated(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n + 1];
    for (p, x) in a.iter().enumerate().take(n + 1) {
        if x.is_zero() {
            continue;
        }
        for (q, y) in b.iter().enumerate().take(n + 1 - p) {
            out[p + q] += x * y;
        }
    }
    out
}

fn poly(coeffs: &[i64], n: usize) -> Vec<BigInt> {
    (0..=n)
        .map(|k| BigInt::from(coeffs.get(k).copied().unwrap_or(0)))
        .collect()
}

/// Checks, to order `N`, that `E(x) (1-2x)(1-5x+6x^2-4x^3) = x` and
/// `D(x) (1-5x+6x^2-4x^3) = 1-2x+2x^2`, with `E` and `D` taken from the
/// recurrence for `e_n`.
pub fn gf_identity_check(n: usize) -> bool {
    let denom = poly(&[1, -5, 6, -4], n);
    let e_side = mul_truncated(
        &mul_truncated(&e_values(n), &poly(&[1, -2], n), n),
        &denom,
        n,
    );
    let d_side = mul_truncated(&d_values(n), &denom, n);
    e_side == poly(&[0, 1], n) && d_side == poly(&[1, -2, 2], n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Recurrence,
    GeneratingFunction,
    Enumeration,
}

/// One row of the `count` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub n: usize,
    #[serde(serialize_with = "big_as_number")]
    pub d: BigInt,
    #[serde(serialize_with = "big_as_number")]
    pub e: BigInt,
}

/// Exact JSON integer, however large.
fn big_as_number<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    let n: serde_json::Number = v.to_string().parse().map_err(serde::ser::Error::custom)?;
    n.serialize(s)
}

/// Rows `0..=max_n` computed by one method. `e` is `d - 2^n` (and `0` at `n = 0`).
pub fn series(max_n: usize, method: Method, rank_cap: usize) -> Result<Vec<CountRow>> {
    let d = match method {
        Method::Recurrence => d_values(max_n),
        Method::GeneratingFunction => d_values_gf(max_n),
        Method::Enumeration => (0..=max_n)
            .map(|n| d_via_enumeration(n, rank_cap))
            .collect::<Result<Vec<_>>>()?,
    };
    Ok(d.into_iter()
        .enumerate()
        .map(|(n, d)| {
            let e = if n == 0 { BigInt::zero() } else { &d - pow2(n) };
            CountRow { n, d, e }
        })
        .collect())
}

/// A disagreement found by [`agreement_report`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub n: usize,
    pub check: String,
    pub detail: String,
}

/// Compares recurrence with generating function up to `max_n`, with direct
/// enumeration up to `min(max_n, enum_max)`, the two `e` recurrences, and
/// the series identities. Returns every failure.
pub fn agreement_report(max_n: usize, enum_max: usize, rank_cap: usize) -> Result<Vec<Mismatch>> {
    let mut out = Vec::new();
    let rec = d_values(max_n);
    let gf = d_values_gf(max_n);
    for n in 0..=max_n {
        if rec[n] != gf[n] {
            out.push(Mismatch {
                n,
                check: "recurrence_vs_gf".into(),
                detail: format!("{} != {}", rec[n], gf[n]),
            });
        }
        if n <= enum_max {
            let en = d_via_enumeration(n, rank_cap)?;
            if rec[n] != en {
                out.push(Mismatch {
                    n,
                    check: "recurrence_vs_enumeration".into(),
                    detail: format!("{} != {}", rec[n], en),
                });
            }
        }
    }
    let a = e_values(max_n);
    let b = e_values_unreduced(max_n);
    for n in 0..=max_n {
        if a[n] != b[n] {
            out.push(Mismatch {
                n,
                check: "e_recurrence_forms".into(),
                detail: format!("{} != {}", a[n], b[n]),
            });
        }
    }
    if !gf_identity_check(max_n) {
        out.push(Mismatch {
            n: max_n,
            check: "gf_identity".into(),
            detail: "truncated series identity fails".into(),
        });
    }
    Ok(out)
}
