//! Binomial coefficients under the two conventions used in this crate.
//!
//! The closed forms use subset counting: `C(a, b)` is the number of
//! `b`-subsets of an `a`-set, so it vanishes unless `0 <= b <= a`. This holds
//! even for `b = 0` when `a < 0`.
//!
//! The identity checks use the generalized (upper-index polynomial) binomial,
//! `C(a, b) = a (a - 1) ... (a - b + 1) / b!` for `b >= 0`, which agrees with
//! subset counting whenever `a >= 0`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Subset-counting binomial as an arbitrary precision integer.
pub fn binom(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for t in 0..b {
        acc *= a - t;
        acc /= t + 1;
    }
    acc
}

/// Subset-counting binomial in machine integers, `None` on overflow.
pub fn binom_u128(a: i64, b: i64) -> Option<u128> {
    if b < 0 || a < 0 || b > a {
        return Some(0);
    }
    let b = b.min(a - b) as u128;
    let a = a as u128;
    let mut acc: u128 = 1;
    for t in 0..b {
        // acc * (a - t) is divisible by (t + 1)
        let g = num_integer::gcd(acc, t + 1);
        let num = (a - t) / ((t + 1) / g);
        acc = (acc / g).checked_mul(num)?;
    }
    Some(acc)
}

/// Generalized binomial with an arbitrary integer upper index.
pub fn binom_general(a: i64, b: i64) -> Option<i128> {
    if b < 0 {
        return Some(0);
    }
    if a >= 0 {
        return binom_u128(a, b).and_then(|v| i128::try_from(v).ok());
    }
    // upper negation: C(a, b) = (-1)^b C(b - a - 1, b)
    let v = i128::try_from(binom_u128(b - a - 1, b)?).ok()?;
    Some(if b % 2 == 0 { v } else { -v })
}
