//! Exact scalar arithmetic: arbitrary-precision rationals and small rational
//! exponents.
//!
//! Every coefficient in the kernel is a [`Q`] (a `BigRational`), so equality
//! of operator images is decidable and exact. Exponents that appear in
//! deformed numbers and diagonal weights stay small; they are carried as
//! [`Exp`] (a `Ratio<i64>`) so fractional powers like `k/2 + Δ` can be
//! represented without loss.

use num::bigint::BigInt;
use num::rational::Ratio;
use num::traits::{One, Signed, Zero};
use num::BigRational;

/// Exact rational scalar.
pub type Q = BigRational;

/// Exact rational exponent (small, machine-word backed).
pub type Exp = Ratio<i64>;

/// Integer as a scalar.
pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Ratio of integers as a scalar. Panics on zero denominator.
pub fn q_ratio(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Integer exponent.
pub fn e_int(n: i64) -> Exp {
    Exp::from_integer(n)
}

/// Ratio of integers as an exponent.
pub fn e_ratio(num: i64, den: i64) -> Exp {
    Exp::new(num, den)
}

/// `base^k` for integer `k`; negative `k` requires a nonzero base.
pub fn pow_i(base: &Q, k: i64) -> Q {
    if k == 0 {
        return Q::one();
    }
    if base.is_zero() {
        assert!(k > 0, "zero base with negative exponent");
        return Q::zero();
    }
    let mut acc = Q::one();
    let mut b = if k > 0 { base.clone() } else { base.recip() };
    let mut e = k.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

/// Absolute value as `f64`, for norm probes and float reports.
pub fn to_f64(x: &Q) -> f64 {
    let n = x.numer();
    let d = x.denom();
    // Scale down huge integers pairwise to stay in f64 range.
    let bits = n.bits().max(d.bits());
    if bits <= 900 {
        bigint_f64(n) / bigint_f64(d)
    } else {
        let shift = (bits - 900) as u64;
        let sn = n >> shift;
        let sd = d >> shift;
        bigint_f64(&sn) / bigint_f64(&sd)
    }
}

fn bigint_f64(n: &BigInt) -> f64 {
    let mut out = 0.0f64;
    let (sign, digits) = n.to_u32_digits();
    for d in digits.iter().rev() {
        out = out * 4294967296.0 + *d as f64;
    }
    if sign == num::bigint::Sign::Minus {
        out = -out;
    }
    out
}

/// Small nonnegative factorial as a scalar.
pub fn q_factorial(n: u32) -> Q {
    let mut acc = Q::one();
    for i in 2..=n as i64 {
        acc *= q_int(i);
    }
    acc
}

/// Binomial coefficient C(n, k) as a scalar; zero outside `0 ≤ k ≤ n`.
pub fn q_binomial(n: i64, k: i64) -> Q {
    if k < 0 || k > n {
        return Q::zero();
    }
    let mut acc = Q::one();
    for i in 0..k {
        acc *= q_ratio(n - i, i + 1);
    }
    acc
}

/// Sign of a permutation given as a slice of distinct indices.
pub fn perm_sign(perm: &[usize]) -> i64 {
    let mut s = 1i64;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                s = -s;
            }
        }
    }
    s
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let mut i = n.wrapping_sub(2);
        while i != usize::MAX && cur[i] >= cur[i + 1] {
            i = i.wrapping_sub(1);
        }
        if i == usize::MAX {
            break;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i] {
            j -= 1;
        }
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// Checks that a rational is strictly between 0 and 1.
pub fn in_unit_interval(x: &Q) -> bool {
    x.is_positive() && x < &Q::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_i_handles_negative_exponents() {
        let b = q_ratio(2, 3);
        assert_eq!(pow_i(&b, 3), q_ratio(8, 27));
        assert_eq!(pow_i(&b, -2), q_ratio(9, 4));
        assert_eq!(pow_i(&b, 0), q_int(1));
    }

    #[test]
    fn permutations_count_and_signs() {
        let ps = permutations(3);
        assert_eq!(ps.len(), 6);
        let total: i64 = ps.iter().map(|p| perm_sign(p)).sum();
        assert_eq!(total, 0);
        assert_eq!(perm_sign(&[0, 1, 2]), 1);
        assert_eq!(perm_sign(&[1, 0, 2]), -1);
    }

    #[test]
    fn binomials_match_pascal() {
        for n in 0..8i64 {
            for k in 0..=n {
                let lhs = q_binomial(n + 1, k);
                let rhs = q_binomial(n, k) + q_binomial(n, k - 1);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn f64_conversion_is_close() {
        let x = q_ratio(355, 113);
        assert!((to_f64(&x) - 3.14159292).abs() < 1e-6);
    }
}
