//! Cyclotomic polynomials by recursive exact division, memoized.

use super::IntPoly;
use crate::arith::divisors;
use crate::{Error, Result};
use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

fn table() -> &'static RwLock<HashMap<u64, IntPoly>> {
    static TABLE: OnceLock<RwLock<HashMap<u64, IntPoly>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The `d`-th cyclotomic polynomial, degree `phi(d)`.
///
/// Computed as `(x^d - 1) / prod_{e | d, e < d} Phi_e(x)` and cached. The
/// cache is safe for concurrent readers; concurrent inserts of the same `d`
/// are idempotent (both compute the same canonical value).
pub fn cyclotomic(d: u64) -> Result<IntPoly> {
    if d == 0 {
        return Err(Error::InvalidArgument("cyclotomic index must be >= 1".into()));
    }
    if let Some(p) = table().read().unwrap().get(&d) {
        return Ok(p.clone());
    }
    let mut num = IntPoly::x_pow_minus_one(d as usize);
    for e in divisors(d) {
        if e == d {
            continue;
        }
        let phi_e = cyclotomic(e)?;
        let (q, r) = num.div_rem_monic(&phi_e);
        debug_assert!(r.is_zero());
        num = q;
    }
    table().write().unwrap().insert(d, num.clone());
    Ok(num)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::euler_phi;
    use num_bigint::BigInt;

    #[test]
    fn first_values() {
        assert_eq!(cyclotomic(1).unwrap(), IntPoly::from_i64s(&[-1, 1]));
        assert_eq!(cyclotomic(2).unwrap(), IntPoly::from_i64s(&[1, 1]));
        assert_eq!(cyclotomic(3).unwrap(), IntPoly::from_i64s(&[1, 1, 1]));
        assert_eq!(cyclotomic(4).unwrap(), IntPoly::from_i64s(&[1, 0, 1]));
        assert_eq!(cyclotomic(6).unwrap(), IntPoly::from_i64s(&[1, -1, 1]));
        // prime-power identity: Phi_9 = Phi_3(x^3)
        assert_eq!(cyclotomic(9).unwrap(), IntPoly::from_i64s(&[1, 0, 0, 1, 0, 0, 1]));
    }

    #[test]
    fn zero_index_rejected() {
        assert!(cyclotomic(0).is_err());
    }

    #[test]
    fn degree_is_phi_and_product_recovers() {
        for d in 1..=60u64 {
            let p = cyclotomic(d).unwrap();
            assert_eq!(p.degree().unwrap() as u64, euler_phi(d));
        }
        // prod_{d | 12} Phi_d = x^12 - 1
        let mut prod = IntPoly::one();
        for d in [1u64, 2, 3, 4, 6, 12] {
            prod = &prod * &cyclotomic(d).unwrap();
        }
        assert_eq!(prod, IntPoly::x_pow_minus_one(12));
    }

    #[test]
    fn concurrent_access() {
        let handles: Vec<_> = (0..8)
            .map(|k| {
                std::thread::spawn(move || {
                    for d in 1..=40u64 {
                        let p = cyclotomic(d).unwrap();
                        assert_eq!(p.eval(&BigInt::from(1)), cyclotomic(d).unwrap().eval(&BigInt::from(1)));
                    }
                    k
                })
            })
            .collect();
        for h in handles {
            h.join().unwrap();
        }
    }
}
