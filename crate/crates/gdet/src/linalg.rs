//! Exact integer matrix determinants: fraction-free Bareiss elimination as
//! the reference route, and a CRT-modular route over a fixed prime list with
//! a deterministic bound on the result magnitude.

use crate::arith::{invmod_prime, mulmod};
use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

/// Fixed 62-bit primes for CRT determinants and resultants, in descending
/// order below `2^62`. Runs are reproducible because this list never changes;
/// callers take a prefix long enough to exceed the deterministic bound.
pub const PRIMES_62: [u64; 16] = [
    4611686018427387847, // 2^62 - 57
    4611686018427387817, // 2^62 - 87
    4611686018427387787, // 2^62 - 117
    4611686018427387761, // 2^62 - 143
    4611686018427387751, // 2^62 - 153
    4611686018427387737, // 2^62 - 167
    4611686018427387733, // 2^62 - 171
    4611686018427387709, // 2^62 - 195
    4611686018427387701, // 2^62 - 203
    4611686018427387631, // 2^62 - 273
    4611686018427387617, // 2^62 - 287
    4611686018427387587, // 2^62 - 317
    4611686018427387461, // 2^62 - 443
    4611686018427387421, // 2^62 - 483
    4611686018427387409, // 2^62 - 495
    4611686018427387329, // 2^62 - 575
];

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut sign = 1i64;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = &t / &prev; // exact by Bareiss
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    if sign < 0 {
        -m[n - 1][n - 1].clone()
    } else {
        m[n - 1][n - 1].clone()
    }
}

/// Deterministic magnitude bound: the product of row L1 norms dominates the
/// product of row L2 norms, hence `|det|` by Hadamard's inequality.
pub fn det_l1_bound(m: &[Vec<BigInt>]) -> BigUint {
    let mut bound = BigUint::from(1u32);
    for row in m {
        let s: BigUint = row.iter().map(|c| c.magnitude().clone()).sum();
        if s.is_zero() {
            return BigUint::zero();
        }
        bound *= s;
    }
    bound
}

pub fn bigint_mod_u64(x: &BigInt, p: u64) -> u64 {
    let r = (x % BigInt::from(p)).to_i64().unwrap();
    r.rem_euclid(p as i64) as u64
}

/// Determinant of a matrix over `F_p` by Gaussian elimination.
pub fn det_mod_prime(mut m: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = m.len();
    let mut det = 1u64 % p;
    for k in 0..n {
        match (k..n).find(|&r| m[r][k] % p != 0) {
            Some(r) => {
                if r != k {
                    m.swap(k, r);
                    det = p - det;
                }
            }
            None => return 0,
        }
        let pivot = m[k][k] % p;
        det = mulmod(det, pivot, p);
        let inv = invmod_prime(pivot, p);
        for i in k + 1..n {
            if m[i][k] % p == 0 {
                continue;
            }
            let factor = mulmod(m[i][k], inv, p);
            for j in k..n {
                let sub = mulmod(factor, m[k][j], p);
                m[i][j] = (m[i][j] + p - sub) % p;
            }
        }
    }
    det % p
}

/// Reconstructs the integer in `(-M/2, M/2]` from residues, `M = prod moduli`.
pub fn crt_reconstruct(residues: &[u64], moduli: &[u64]) -> BigInt {
    let mut x = BigInt::zero();
    let mut m = BigInt::from(1u32);
    for (&r, &q) in residues.iter().zip(moduli) {
        // x' = x + m * t, t = (r - x) / m mod q
        let xq = bigint_mod_u64(&x, q);
        let mq = bigint_mod_u64(&m, q);
        let diff = (r + q - xq) % q;
        let t = mulmod(diff, invmod_prime(mq, q), q);
        x += &m * BigInt::from(t);
        m *= BigInt::from(q);
    }
    // symmetric lift
    let half = &m >> 1;
    if x > half {
        x -= &m;
    }
    x
}

/// Exact determinant by CRT over [`PRIMES_62`] with the L1 Hadamard-style
/// bound; agrees with [`bareiss_det`] (the reference) by construction.
pub fn crt_det(m: &[Vec<BigInt>]) -> BigInt {
    let bound = det_l1_bound(m);
    if bound.is_zero() {
        return BigInt::zero();
    }
    let need_bits = bound.bits() + 2; // covers sign and slack
    let mut moduli = Vec::new();
    let mut have = 0u64;
    for &p in PRIMES_62.iter() {
        moduli.push(p);
        have += 61;
        if have >= need_bits {
            break;
        }
    }
    assert!(
        have >= need_bits,
        "fixed prime list too short for matrices of this magnitude"
    );
    let residues: Vec<u64> = moduli
        .iter()
        .map(|&p| {
            let reduced: Vec<Vec<u64>> = m
                .iter()
                .map(|row| row.iter().map(|c| bigint_mod_u64(c, p)).collect())
                .collect();
            det_mod_prime(reduced, p)
        })
        .collect();
    crt_reconstruct(&residues, &moduli)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
            .collect()
    }

    #[test]
    fn bareiss_known() {
        assert_eq!(bareiss_det(m(&[&[1, 2], &[3, 4]])), BigInt::from(-2));
        assert_eq!(bareiss_det(m(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(bareiss_det(m(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]])), BigInt::from(30));
        assert_eq!(bareiss_det(m(&[&[1, 1], &[1, 1]])), BigInt::from(0));
    }

    #[test]
    fn crt_agrees_with_bareiss() {
        let mut rng = 1u64;
        let mut next = || {
            rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((rng >> 33) % 19) as i64 - 9
        };
        for n in 1..=8 {
            for _ in 0..20 {
                let mat: Vec<Vec<BigInt>> =
                    (0..n).map(|_| (0..n).map(|_| BigInt::from(next())).collect()).collect();
                assert_eq!(crt_det(&mat), bareiss_det(mat.clone()));
            }
        }
    }

    #[test]
    fn l1_bound_dominates() {
        let mat = m(&[&[3, -4], &[5, 6]]);
        let b = det_l1_bound(&mat);
        let d = bareiss_det(mat);
        assert!(d.magnitude() <= &b);
    }

    #[test]
    fn primes_are_62_bit() {
        for &p in &PRIMES_62 {
            assert!(p < (1 << 62) && p > (1 << 61));
            assert!(crate::arith::is_prime_u64(p));
        }
    }
}
