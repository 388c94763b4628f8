use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Highest index stored. Covers `B_2 .. B_60` for the correction sum plus
/// `B_62` for the first omitted term at the largest allowed `K`.
pub const MAX_INDEX: usize = 64;

static TABLE: OnceLock<Vec<BigRational>> = OnceLock::new();

/// `B_0 ..= B_MAX_INDEX` as exact rationals, with `B_1 = -1/2`.
pub fn table() -> &'static [BigRational] {
    TABLE.get_or_init(|| {
        // B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k
        let mut b: Vec<BigRational> = Vec::with_capacity(MAX_INDEX + 1);
        b.push(BigRational::one());
        for m in 1..=MAX_INDEX {
            let mut binom = BigInt::one(); // C(m+1, 0)
            let mut acc = BigRational::zero();
            for (k, bk) in b.iter().enumerate() {
                acc += bk * BigRational::from_integer(binom.clone());
                binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
            }
            b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
        }
        b
    })
}

/// `B_n`, or `None` beyond the stored range.
pub fn bernoulli(n: usize) -> Option<&'static BigRational> {
    table().get(n)
}
