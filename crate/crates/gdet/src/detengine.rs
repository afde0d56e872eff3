//! The integer group determinant, two independent ways.
//!
//! The formula route reduces a dihedral or dicyclic element `f + y g` to its
//! measure polynomial
//!
//! * dicyclic: `B(x) = f(x) f(x^{-1}) - x^n g(x) g(x^{-1})  mod x^{2n} - 1`
//! * dihedral: `B(x) = f(x) f(x^{-1}) - g(x) g(x^{-1})      mod x^n - 1`
//!
//! (for cyclic elements `B` is `f` itself) and evaluates
//! `det = Res(x^N - 1, B)`, the product of `B` over all `N`-th roots of unity.
//! Splitting `x^N - 1` into cyclotomic factors gives the per-divisor integer
//! components `M_d = Res(Phi_d, B)` whose product is the determinant; for
//! dihedral and dicyclic elements every `M_d` with `d >= 3` is a perfect
//! square.
//!
//! The matrix route ([`det_matrix_oracle`]) takes the determinant of the full
//! `|G| x |G|` matrix by fraction-free elimination and is the ground truth the
//! formula route is checked against.
//!
//! Roots of unity are never materialized numerically: every root product is a
//! resultant. Large moduli are handled by a CRT scheme over primes `q = 1 mod d`
//! (deterministically the largest such primes below `2^62`), evaluating `M_d`
//! at order-`d` elements of `F_q` against the L1 bound `||B||_1^{phi(d)}`.

use crate::arith::{self, divisors, euler_phi, is_prime_u64, mulmod, powmod};
use crate::groupring::{GroupFamily, RingElement};
use crate::intpoly::{cyclotomic, resultant, CyclicPoly, IntPoly};
use crate::linalg::{bareiss_det, bigint_mod_u64, crt_det, crt_reconstruct};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Degree threshold below which the plain-BigInt subresultant route is used.
const BIGINT_ROUTE_MAX_MODULUS: usize = 64;

/// A determinant together with its per-cyclotomic-divisor components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredDeterminant {
    pub total: BigInt,
    /// `M_d` for every divisor `d` of the relevant modulus.
    pub parts: BTreeMap<u64, BigInt>,
}

/// The measure polynomial `B` of a dihedral or dicyclic element.
///
/// Errors on cyclic input: there the measure polynomial is the `f` part itself.
pub fn measure_poly(a: &RingElement) -> Result<CyclicPoly> {
    let group = a.group();
    match group.family() {
        GroupFamily::Cyclic => Err(Error::CyclicHasNoMeasurePoly),
        GroupFamily::Dihedral | GroupFamily::Dicyclic => {
            let f = a.f_part();
            let g = a.g_part().unwrap();
            let ff = f.cyclic_mul(&f.reciprocal())?;
            let mut gg = g.cyclic_mul(&g.reciprocal())?;
            if group.family() == GroupFamily::Dicyclic {
                gg = gg.mul_x_pow(group.n());
            }
            ff.sub(&gg)
        }
    }
}

fn measure_or_f(a: &RingElement) -> Result<CyclicPoly> {
    match a.group().family() {
        GroupFamily::Cyclic => Ok(a.f_part().clone()),
        _ => measure_poly(a),
    }
}

/// `M_d = Res(Phi_d, B)` over the integers, for moderate `d`.
fn part_bigint(d: u64, b: &CyclicPoly) -> BigInt {
    let folded = CyclicPoly::from_int_poly(d as usize, &b.to_int_poly());
    if folded.is_zero() {
        return BigInt::zero();
    }
    let phi = cyclotomic(d).expect("d >= 1");
    // Phi_d is monic, so reducing B modulo Phi_d first is resultant-neutral.
    let reduced = folded.to_int_poly().rem_monic(&phi);
    resultant(&phi, &reduced)
}

/// Largest primes `q < 2^62` with `q = 1 mod d`, newest first. Deterministic,
/// so CRT runs are reproducible.
fn primes_one_mod(d: u64, count: usize) -> Vec<u64> {
    let top: u64 = (1 << 62) - 1;
    let mut q = top - ((top - 1) % d); // largest value = 1 mod d below 2^62
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        if is_prime_u64(q) {
            out.push(q);
        }
        q -= d;
    }
    out
}

/// Finds an element of exact multiplicative order `d` in `F_q` (`q = 1 mod d`).
fn root_of_order(d: u64, q: u64) -> u64 {
    let cof = (q - 1) / d;
    let prime_divs: Vec<u64> = arith::factor_u64(d).into_iter().map(|(p, _)| p).collect();
    for base in 2u64.. {
        let w = powmod(base, cof, q);
        if w == 1 {
            continue;
        }
        if prime_divs.iter().all(|&p| powmod(w, d / p, q) != 1) {
            return w;
        }
    }
    unreachable!()
}

/// `M_d` by CRT: evaluates `B` at the primitive `d`-th roots of unity in `F_q`
/// for enough primes `q = 1 mod d` to exceed the bound `||B||_1^{phi(d)}`.
fn part_crt(d: u64, b: &CyclicPoly) -> BigInt {
    let folded = CyclicPoly::from_int_poly(d as usize, &b.to_int_poly());
    if folded.is_zero() {
        return BigInt::zero();
    }
    let terms: Vec<(usize, &BigInt)> = folded
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let l1: BigInt = terms.iter().map(|(_, c)| c.abs()).sum();
    let phi = euler_phi(d);
    let need_bits = l1.magnitude().bits() * phi + 2;
    let count = (need_bits / 61 + 1) as usize;
    let moduli = primes_one_mod(d, count);
    let residues: Vec<u64> = moduli
        .par_iter()
        .map(|&q| {
            let w = root_of_order(d, q);
            // power table for w^0 .. w^{d-1}
            let mut pow = Vec::with_capacity(d as usize);
            let mut acc = 1u64;
            for _ in 0..d {
                pow.push(acc);
                acc = mulmod(acc, w, q);
            }
            let coeffs: Vec<(usize, u64)> = terms
                .iter()
                .map(|(e, c)| (*e, bigint_mod_u64(c, q)))
                .collect();
            let mut prod = 1u64;
            for j in 1..d {
                if arith::gcd_u64(j, d) != 1 {
                    continue;
                }
                let mut val = 0u64;
                for &(e, c) in &coeffs {
                    let idx = (e as u64 * j) % d;
                    val = (val + mulmod(c, pow[idx as usize], q)) % q;
                }
                prod = mulmod(prod, val, q);
            }
            if d == 1 {
                // sole "primitive first root": evaluate at 1
                let mut val = 0u64;
                for &(_, c) in &coeffs {
                    val = (val + c) % q;
                }
                prod = val;
            }
            prod
        })
        .collect();
    crt_reconstruct(&residues, &moduli)
}

fn part(d: u64, b: &CyclicPoly) -> BigInt {
    if d as usize <= BIGINT_ROUTE_MAX_MODULUS {
        part_bigint(d, b)
    } else {
        part_crt(d, b)
    }
}

/// The exact integer group determinant of `a`.
///
/// Defined as `Res(x^N - 1, B)`; zero measure polynomial short-circuits to 0.
pub fn det_exact(a: &RingElement) -> BigInt {
    let b = measure_or_f(a).expect("measure_or_f is total");
    if b.is_zero() {
        return BigInt::zero();
    }
    let n = b.modulus();
    if n <= BIGINT_ROUTE_MAX_MODULUS {
        resultant(&IntPoly::x_pow_minus_one(n), &b.to_int_poly())
    } else {
        det_factored(a).total
    }
}

/// The determinant and all per-divisor components `M_d`.
///
/// Components are computed independently (in parallel for large moduli) and
/// multiplied; the combination is schedule-independent.
pub fn det_factored(a: &RingElement) -> FactoredDeterminant {
    let b = measure_or_f(a).expect("measure_or_f is total");
    let n = b.modulus() as u64;
    let divs = divisors(n);
    let parts_vec: Vec<(u64, BigInt)> = if n as usize > BIGINT_ROUTE_MAX_MODULUS {
        divs.par_iter().map(|&d| (d, part(d, &b))).collect()
    } else {
        divs.iter().map(|&d| (d, part(d, &b))).collect()
    };
    let mut parts = BTreeMap::new();
    let mut total = BigInt::one();
    let mut zero = false;
    for (d, v) in parts_vec {
        zero |= v.is_zero();
        total *= &v;
        parts.insert(d, v);
    }
    if zero {
        total = BigInt::zero();
    }
    FactoredDeterminant { total, parts }
}

/// Ground-truth determinant of the full `|G| x |G|` matrix by fraction-free
/// elimination.
pub fn det_matrix_oracle(a: &RingElement) -> BigInt {
    bareiss_det(a.to_matrix())
}

/// The matrix determinant via the CRT-modular route over the fixed 62-bit
/// prime list; agrees with [`det_matrix_oracle`].
pub fn det_matrix_crt(a: &RingElement) -> BigInt {
    crt_det(&a.to_matrix())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupring::{random_element, GroupSpec};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(n: usize) -> GroupSpec {
        GroupSpec::dicyclic(n).unwrap()
    }

    fn el(g: GroupSpec, f: &[i64], gp: &[i64]) -> RingElement {
        RingElement::from_i64s(g, f, Some(gp)).unwrap()
    }

    #[test]
    fn measure_poly_examples() {
        // Q_12, f = x^2 + 1, g = 0: B = x^4 + x^2 + 2 mod x^6 - 1
        let a = el(q(3), &[1, 0, 1], &[]);
        let b = measure_poly(&a).unwrap();
        assert_eq!(b, CyclicPoly::from_i64s(6, &[2, 0, 1, 0, 1, 0]));
        // f = 1, g = 0: B = 1
        let a = el(q(3), &[1], &[]);
        assert_eq!(measure_poly(&a).unwrap(), CyclicPoly::one(6));
        // f = 0: B = -x^n g g~
        let g3 = q(3);
        let a = el(g3, &[], &[1, 2, 0, 0, 1]);
        let gp = a.g_part().unwrap().clone();
        let expect = gp
            .cyclic_mul(&gp.reciprocal())
            .unwrap()
            .mul_x_pow(3)
            .neg();
        assert_eq!(measure_poly(&a).unwrap(), expect);
        // cyclic input is an error
        let c = RingElement::from_i64s(GroupSpec::cyclic(4).unwrap(), &[1, 2], None).unwrap();
        assert!(matches!(measure_poly(&c), Err(Error::CyclicHasNoMeasurePoly)));
    }

    #[test]
    fn det_exact_paper_values() {
        // M(x^2 + 1) = 16 on Q_12
        assert_eq!(det_exact(&el(q(3), &[1, 0, 1], &[])), BigInt::from(16));
        // identity has determinant 1
        assert_eq!(det_exact(&RingElement::identity(q(3))), BigInt::from(1));
        // f = 0, g = 1 on Q_12: swap of the identity, n odd -> -1
        assert_eq!(det_exact(&el(q(3), &[], &[1])), BigInt::from(-1));
        // trivial element of Q_20: 0 at identity, 1 elsewhere -> -19
        let f = vec![0, 1, 1, 1, 1, 1, 1, 1, 1, 1];
        let g = vec![1; 10];
        assert_eq!(det_exact(&el(q(5), &f, &g)), BigInt::from(-19));
        // zero element short-circuits to 0
        assert_eq!(det_exact(&RingElement::zero(q(3))), BigInt::from(0));
    }

    #[test]
    fn det_factored_parts() {
        // Q_12, f = x^2 + 1: parts {1:4, 2:4, 3:1, 6:1}, total 16
        let fd = det_factored(&el(q(3), &[1, 0, 1], &[]));
        assert_eq!(fd.total, BigInt::from(16));
        let expect: Vec<(u64, i64)> = vec![(1, 4), (2, 4), (3, 1), (6, 1)];
        assert_eq!(
            fd.parts.iter().map(|(d, v)| (*d, v.clone())).collect::<Vec<_>>(),
            expect
                .into_iter()
                .map(|(d, v)| (d, BigInt::from(v)))
                .collect::<Vec<_>>()
        );
        // identity: all parts 1
        let fd = det_factored(&RingElement::identity(q(3)));
        assert!(fd.parts.values().all(|v| v.is_one()));
    }

    #[test]
    fn parts_are_squares_for_d_ge_3() {
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        for g in [q(2), q(3), q(5), GroupSpec::dihedral(6).unwrap()] {
            for _ in 0..40 {
                let a = random_element(g, 3, &mut rng);
                let fd = det_factored(&a);
                assert_eq!(fd.parts.values().product::<BigInt>(), fd.total);
                for (&d, v) in &fd.parts {
                    if d >= 3 {
                        assert!(arith::is_perfect_square(v), "M_{d} = {v} not a square");
                    }
                }
            }
        }
    }

    #[test]
    fn matrix_oracle_values() {
        // Q_8 trivial element -> -7
        let f = vec![0, 1, 1, 1];
        let g = vec![1; 4];
        let a = el(q(2), &f, &g);
        assert_eq!(det_matrix_oracle(&a), BigInt::from(-7));
        assert_eq!(det_exact(&a), BigInt::from(-7));
        assert_eq!(det_matrix_crt(&a), BigInt::from(-7));
        // identity -> identity matrix -> 1
        assert_eq!(det_matrix_oracle(&RingElement::identity(q(2))), BigInt::from(1));
    }

    #[test]
    fn engines_agree_on_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for g in [
            q(2),
            q(3),
            GroupSpec::dihedral(4).unwrap(),
            GroupSpec::cyclic(9).unwrap(),
        ] {
            for _ in 0..60 {
                let a = random_element(g, 5, &mut rng);
                let d1 = det_exact(&a);
                let d2 = det_matrix_oracle(&a);
                assert_eq!(d1, d2, "element {a} of {g}");
                assert_eq!(det_factored(&a).total, d1);
            }
        }
    }

    #[test]
    fn determinant_is_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for g in [q(2), q(3), GroupSpec::dihedral(3).unwrap(), GroupSpec::cyclic(6).unwrap()] {
            for _ in 0..40 {
                let a = random_element(g, 3, &mut rng);
                let b = random_element(g, 3, &mut rng);
                let ab = a.ring_mul(&b).unwrap();
                assert_eq!(det_exact(&ab), det_exact(&a) * det_exact(&b));
            }
        }
    }

    #[test]
    fn swap_sign_law_dicyclic() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in [2usize, 3, 4, 5] {
            let g = q(n);
            let sign = if n % 2 == 0 { 1 } else { -1 };
            for _ in 0..30 {
                let a = random_element(g, 4, &mut rng);
                let s = a.swap_parts().unwrap();
                assert_eq!(det_exact(&s), det_exact(&a) * BigInt::from(sign));
            }
        }
    }

    #[test]
    fn g_zero_gives_cyclic_square() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for n in [2usize, 3, 5] {
            let g = q(n);
            let z = GroupSpec::cyclic(2 * n).unwrap();
            for _ in 0..30 {
                let f: Vec<i64> = (0..2 * n).map(|_| rand::Rng::gen_range(&mut rng, -4..=4)).collect();
                let a = RingElement::from_i64s(g, &f, Some(&[])).unwrap();
                let c = RingElement::from_i64s(z, &f, None).unwrap();
                let dc = det_exact(&c);
                assert_eq!(det_exact(&a), &dc * &dc);
            }
        }
    }

    #[test]
    fn crt_route_matches_bigint_route() {
        // force the CRT per-divisor path on a modulus above the threshold and
        // compare against the plain route on the same folded polynomial
        let g = q(3);
        let a = el(g, &[1, 0, 1], &[0, 2, -1]);
        let b = measure_poly(&a).unwrap();
        for d in [1u64, 2, 3, 6] {
            assert_eq!(part_bigint(d, &b), part_crt(d, &b), "divisor {d}");
        }
        // large-modulus smoke: Q_{4*33}, sparse element, both routes via divisors of 66
        let g = q(33);
        let mut f = vec![0i64; 66];
        f[0] = 1;
        f[2] = 1;
        let a = el(g, &f, &[]);
        let b = measure_poly(&a).unwrap();
        for d in divisors(66) {
            assert_eq!(part_bigint(d, &b), part_crt(d, &b), "divisor {d}");
        }
    }

    #[test]
    fn parallel_and_serial_factored_agree() {
        let g = q(6);
        let a = el(g, &[1, -2, 0, 3, 1, 0, 0, 1, 0, 0, 2, -1], &[2, 1, 1]);
        let serial = det_factored(&a);
        let parallel: Vec<(u64, BigInt)> = divisors(12)
            .par_iter()
            .map(|&d| (d, part(d, &measure_poly(&a).unwrap())))
            .collect();
        for (d, v) in parallel {
            assert_eq!(serial.parts[&d], v);
        }
    }
}
