//! Big-integer factorials and binomial coefficients.

use num::bigint::BigInt;
use num::One;

pub fn factorial(n: u64) -> BigInt {
    (2..=n).map(BigInt::from).product()
}

/// `n` choose `k`, with the usual convention that it vanishes for `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut out = BigInt::one();
    for i in 1..=k {
        out = out * BigInt::from(n - k + i) / BigInt::from(i);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_factorials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(1), BigInt::from(1));
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(factorial(20), BigInt::from(2432902008176640000u64));
    }

    #[test]
    fn binomial_values_and_conventions() {
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(6, 0), BigInt::from(1));
        assert_eq!(binomial(6, 6), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
    }

    #[test]
    fn pascal_recurrence() {
        for n in 1..30u64 {
            for k in 1..=n {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k - 1) + binomial(n - 1, k)
                );
            }
        }
    }
}
