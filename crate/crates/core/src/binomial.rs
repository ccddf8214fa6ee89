//! Exact binomial coefficients and binomial ratios.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Pascal's triangle rows `0..=64` as `u64`; `C(64, 32)` is below `2^63`.
pub struct PascalTable {
    rows: Vec<Vec<u64>>,
}

impl PascalTable {
    pub fn new(max_n: usize) -> Self {
        assert!(max_n <= 64, "u64 Pascal rows only hold n <= 64");
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![1]);
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let row = (0..=n)
                .map(|k| {
                    let left = if k > 0 { prev[k - 1] } else { 0 };
                    let right = prev.get(k).copied().unwrap_or(0);
                    left + right
                })
                .collect();
            rows.push(row);
        }
        PascalTable { rows }
    }

    pub fn row(&self, n: usize) -> &[u64] {
        &self.rows[n]
    }

    pub fn get(&self, n: usize, k: usize) -> u64 {
        self.rows[n].get(k).copied().unwrap_or(0)
    }
}

/// `C(n, k)` as an arbitrary-precision integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(a, k) / C(n, k)` for `a <= n`, as the product of the `n - a` factors
/// `(n - k - i) / (n - i)`, `i = 0..n-a`. Zero when `a < k` or `a < 0`.
///
/// This avoids expanding either binomial, so the cost is linear in `n - a`.
pub fn binomial_ratio(a: i128, n: u64, k: u64) -> BigRational {
    assert!(k <= n, "k = {k} exceeds n = {n}");
    assert!(a <= n as i128, "a = {a} exceeds n = {n}");
    if a < k as i128 {
        return BigRational::zero();
    }
    let drop = n - a as u64;
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..drop {
        num *= n - k - i;
        den *= n - i;
    }
    BigRational::new(num.into(), den.into())
}

/// `floor(log2(x))` for `x >= 1`.
pub fn floor_log2(x: &BigUint) -> u64 {
    assert!(!x.is_zero());
    x.bits() - 1
}

/// `ceil(log2(x))` for `x >= 1`.
pub fn ceil_log2(x: &BigUint) -> u64 {
    assert!(!x.is_zero());
    if x.count_ones() == 1 {
        x.bits() - 1
    } else {
        x.bits()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pascal_matches_bigint() {
        let t = PascalTable::new(64);
        for n in [0u64, 1, 7, 33, 64] {
            for k in 0..=n {
                assert_eq!(BigUint::from(t.get(n as usize, k as usize)), binomial(n, k));
            }
        }
        assert_eq!(t.get(64, 32), 1_832_624_140_942_590_534);
        assert_eq!(t.get(5, 6), 0);
    }

    #[test]
    fn ratio_matches_direct_quotient() {
        for n in 0u64..14 {
            for k in 0..=n {
                for a in -2i128..=n as i128 {
                    let direct = if a < 0 {
                        BigRational::zero()
                    } else {
                        BigRational::new(binomial(a as u64, k).into(), binomial(n, k).into())
                    };
                    assert_eq!(binomial_ratio(a, n, k), direct, "a={a} n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn logs() {
        assert_eq!(floor_log2(&BigUint::from(1u32)), 0);
        assert_eq!(ceil_log2(&BigUint::from(1u32)), 0);
        assert_eq!(floor_log2(&BigUint::from(8192u32)), 13);
        assert_eq!(ceil_log2(&BigUint::from(8192u32)), 13);
        assert_eq!(floor_log2(&BigUint::from(8193u32)), 13);
        assert_eq!(ceil_log2(&BigUint::from(8193u32)), 14);
    }
}
