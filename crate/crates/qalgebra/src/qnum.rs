use num_bigint::BigInt;
use num_traits::Zero;

use crate::LaurentPoly;

/// Balanced quantum integer `[n] = q^{n-1} + q^{n-3} + ... + q^{1-n}`.
pub fn qint(n: i64) -> LaurentPoly {
    let sign = if n < 0 { -1 } else { 1 };
    let m = n.abs();
    LaurentPoly::from_terms((0..m).map(|i| (m - 1 - 2 * i, sign)))
}

/// Balanced Gaussian binomial, hard zero outside `0 <= k <= m`.
pub fn qbinom(m: i64, k: i64) -> LaurentPoly {
    if m < 0 || k < 0 || k > m {
        return LaurentPoly::zero();
    }
    let k = k.min(m - k) as usize;
    let m = m as usize;
    // Unbalanced coefficients in t = q^2: row[j] holds G(i, j) as a coefficient vector.
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1)]];
    for i in 1..=m {
        let width = k.min(i);
        let mut next: Vec<Vec<BigInt>> = Vec::with_capacity(width + 1);
        for j in 0..=width {
            // G(i, j) = G(i-1, j-1) + t^j G(i-1, j)
            let deg = j * (i - j);
            let mut c = vec![BigInt::zero(); deg + 1];
            if j >= 1 {
                for (d, x) in row[j - 1].iter().enumerate() {
                    c[d] += x;
                }
            }
            if j < i && j < row.len() {
                for (d, x) in row[j].iter().enumerate() {
                    c[d + j] += x;
                }
            }
            next.push(c);
        }
        row = next;
    }
    let shift = -((k * (m - k)) as i64);
    LaurentPoly::from_terms(
        row[k]
            .iter()
            .enumerate()
            .map(|(d, c)| (shift + 2 * d as i64, c.clone())),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(qint(3).to_string(), "q^-2 + 1 + q^2");
        assert!(qint(0).is_zero());
        assert_eq!(qint(-2), -qint(2));
        assert_eq!(qbinom(4, 2).to_string(), "q^-4 + q^-2 + 2 + q^2 + q^4");
        assert!(qbinom(-1, 0).is_zero());
        assert_eq!(qbinom(5, 0), LaurentPoly::one());
        assert_eq!(qbinom(5, 1), qint(5));
    }
}
