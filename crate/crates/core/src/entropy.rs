//! Shannon-type entropy terms in bits with the `0·log 0 = 0` convention.

/// `−p log₂ p`, zero for `p ≤ 0`.
pub fn plog2(p: f64) -> f64 {
    if p > 0.0 {
        -p * p.log2()
    } else {
        0.0
    }
}

/// Entropy of a probability vector (or clamped spectrum) in bits.
pub fn entropy_bits(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().map(plog2).sum()
}

/// Binary entropy `H₂(x)` in bits.
pub fn binary_entropy(x: f64) -> f64 {
    plog2(x) + plog2(1.0 - x)
}
