//! Small combinatorial helpers shared across modules.

use num_bigint::BigUint;
use num_traits::One;
use sha2::{Digest, Sha256};

use crate::hypergraph::Mask;

/// All `r`-subsets of `{0..n}` as masks in increasing numeric order.
pub fn k_subsets(n: usize, r: usize) -> Vec<Mask> {
    if r > n {
        return Vec::new();
    }
    if r == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let limit: u64 = 1 << n;
    let mut x: u64 = (1 << r) - 1;
    while x < limit {
        out.push(x);
        x = next_same_popcount(x);
    }
    out
}

/// Gosper's hack: next larger integer with the same number of set bits.
#[inline]
pub fn next_same_popcount(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x.wrapping_add(c);
    if r == 0 {
        return u64::MAX;
    }
    (((r ^ x) >> 2) / c) | r
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial coefficient in `u64`, `None` on overflow.
pub fn binomial_u64(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// First eight bytes (little-endian) of the SHA-256 of `bytes`.
pub fn digest64(bytes: &[u8]) -> u64 {
    let h = Sha256::digest(bytes);
    u64::from_le_bytes(h[..8].try_into().expect("sha256 is 32 bytes"))
}

/// `log2` of a big integer to double precision.
pub fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    if bits <= 64 {
        let v: u64 = x.iter_u64_digits().next().unwrap_or(0);
        return (v as f64).log2();
    }
    let shift = bits - 64;
    let top: BigUint = x >> shift;
    let v: u64 = top.iter_u64_digits().next().unwrap_or(0);
    (v as f64).log2() + shift as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_count_and_order() {
        let s = k_subsets(5, 2);
        assert_eq!(s.len(), 10);
        assert!(s.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(k_subsets(3, 0), vec![0]);
        assert!(k_subsets(2, 3).is_empty());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(35, 3), BigUint::from(6545u32));
        assert_eq!(binomial_u64(20, 10), Some(184_756));
        assert_eq!(binomial_u64(3, 5), Some(0));
        assert_eq!(binomial_u64(200, 100), None);
    }

    #[test]
    fn log2_of_big() {
        let x = BigUint::one() << 300u32;
        assert!((log2_big(&x) - 300.0).abs() < 1e-12);
        assert!((log2_big(&BigUint::from(1000u32)) - 1000f64.log2()).abs() < 1e-12);
    }

    #[test]
    fn digest_is_stable() {
        // SHA-256("abc") starts ba 78 16 bf 8f 01 cf ea.
        assert_eq!(digest64(b"abc"), u64::from_le_bytes([0xba, 0x78, 0x16, 0xbf, 0x8f, 0x01, 0xcf, 0xea]));
    }
}
