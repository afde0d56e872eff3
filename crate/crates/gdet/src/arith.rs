//! Small exact-integer utilities: modular arithmetic on machine words,
//! deterministic primality testing, factorization, valuations, and the
//! divisor/totient plumbing the resultant and law modules share.

use crate::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

// ---- machine-word modular arithmetic ----

/// `(a * b) mod m` without overflow; `m < 2^63`.
pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `a^e mod m` by square-and-multiply.
pub fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    r
}

/// Inverse of `a` modulo prime `p`.
pub fn invmod_prime(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

/// Extended gcd: returns `(g, s, t)` with `s*a + t*b = g = gcd(a, b)`.
pub fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a.abs(), a.signum(), 0)
    } else {
        let (g, s, t) = egcd(b, a % b);
        (g, t, s - (a / b) * t)
    }
}

/// Least non-negative inverse of `a` modulo `n` (`n >= 1`); errors if not coprime.
pub fn invmod(a: u64, n: u64) -> Result<u64> {
    if n == 1 {
        return Ok(0);
    }
    let (g, s, _) = egcd(a as i128, n as i128);
    if g != 1 {
        return Err(Error::InvalidArgument(format!("{a} not invertible mod {n}")));
    }
    Ok(s.rem_euclid(n as i128) as u64)
}

// ---- primality and factorization ----

/// Deterministic Miller-Rabin for `u64` (the standard 12-witness base set).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    // n must be odd, composite, and not a prime power of interest below trial range.
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mulmod(x, x, n) + c) % n;
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd_u64(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Prime factorization of `n > 0` as sorted `(prime, exponent)` pairs.
pub fn factor_u64(n: u64) -> Vec<(u64, u32)> {
    let mut n = n;
    let mut out: Vec<(u64, u32)> = Vec::new();
    let push = |p: u64, out: &mut Vec<(u64, u32)>| {
        if let Some(last) = out.iter_mut().find(|(q, _)| *q == p) {
            last.1 += 1;
        } else {
            out.push((p, 1));
        }
    };
    for p in [2u64, 3, 5] {
        while n % p == 0 {
            push(p, &mut out);
            n /= p;
        }
    }
    let mut d = 7u64;
    let inc = [4u64, 2, 4, 2, 4, 6, 2, 6];
    let mut i = 0;
    while d <= 100_000 && d * d <= n {
        while n % d == 0 {
            push(d, &mut out);
            n /= d;
        }
        d += inc[i];
        i = (i + 1) % 8;
    }
    // remaining cofactor: split with rho until prime
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime_u64(m) {
            push(m, &mut out);
            continue;
        }
        let d = pollard_rho(m);
        stack.push(d);
        stack.push(m / d);
    }
    out.sort_unstable();
    out
}

/// Factor `|v|` where `v` fits in `u64`; errors on larger inputs.
pub fn factor_bigint(v: &BigInt) -> Result<Vec<(u64, u32)>> {
    let a = v.magnitude();
    match a.to_u64() {
        Some(n) if n > 0 => Ok(factor_u64(n)),
        Some(_) => Ok(Vec::new()),
        None => Err(Error::ValueTooLarge(format!(
            "factorization supported up to 64 bits, got {} bits",
            a.bits()
        ))),
    }
}

// ---- valuations and divisors ----

/// Exact `p`-adic valuation of `v != 0`.
pub fn valuation(v: &BigInt, p: u64) -> u64 {
    assert!(!v.is_zero(), "valuation of zero");
    let p = BigInt::from(p);
    let mut m = v.abs();
    let mut k = 0u64;
    while (&m % &p).is_zero() {
        m /= &p;
        k += 1;
    }
    k
}

pub fn valuation_u64(mut v: u64, p: u64) -> u64 {
    assert!(v != 0);
    let mut k = 0;
    while v % p == 0 {
        v /= p;
        k += 1;
    }
    k
}

/// Sorted divisors of `n >= 1`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Euler totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut phi = n;
    for (p, _) in factor_u64(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

/// True iff `v` is a perfect square (of an integer).
pub fn is_perfect_square(v: &BigInt) -> bool {
    if v.is_negative() {
        return false;
    }
    let m: &BigUint = v.magnitude();
    let r = m.sqrt();
    &r * &r == *m
}
