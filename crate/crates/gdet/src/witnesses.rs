//! Constructors for explicit group-ring elements with known determinant
//! values: the trivial element, the small dicyclic bounds, coprime-value
//! realizations, the `Q_{4p}` two-power / p-power / frontier families, the
//! sharp divisibility examples, and a `Q_8` realizer for the characterized
//! value set.
//!
//! Every constructor returns a [`Witness`] carrying the element, the claimed
//! determinant, a stable construction identifier (`anchor`), and the named
//! integer parameters that went into the construction. Checked construction
//! (the default) recomputes the determinant — and, for the sharpness
//! witnesses, the exact prime-power valuation — and fails loudly on mismatch.

use crate::arith::{self, invmod, is_prime_u64, valuation};
use crate::detengine::det_exact;
use crate::groupring::{GroupFamily, GroupSpec, RingElement};
use crate::intpoly::{all_ones, cyclotomic, IntPoly};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// An explicit element with its claimed determinant value.
#[derive(Clone, Debug)]
pub struct Witness {
    pub element: RingElement,
    pub claimed: BigInt,
    /// Stable identifier of the construction family.
    pub anchor: &'static str,
    /// Named integer parameters of the construction (p, m, t, mu, delta, ...).
    pub params: BTreeMap<&'static str, BigInt>,
}

impl Witness {
    /// Checked build: recomputes the determinant and compares to the claim.
    fn checked(
        element: RingElement,
        claimed: BigInt,
        anchor: &'static str,
        params: BTreeMap<&'static str, BigInt>,
    ) -> Result<Witness> {
        let computed = det_exact(&element);
        if computed != claimed {
            return Err(Error::WitnessMismatch { claimed, computed });
        }
        Ok(Witness { element, claimed, anchor, params })
    }

    /// Unchecked build for bulk generation; the caller owns verification.
    pub fn unchecked(
        element: RingElement,
        claimed: BigInt,
        anchor: &'static str,
        params: BTreeMap<&'static str, BigInt>,
    ) -> Witness {
        Witness { element, claimed, anchor, params }
    }

    /// Recomputes the determinant and checks it against the claim.
    pub fn verify(&self) -> Result<()> {
        let computed = det_exact(&self.element);
        if computed != self.claimed {
            return Err(Error::WitnessMismatch { claimed: self.claimed.clone(), computed });
        }
        Ok(())
    }
}

fn params<const N: usize>(kv: [(&'static str, i64); N]) -> BTreeMap<&'static str, BigInt> {
    kv.into_iter().map(|(k, v)| (k, BigInt::from(v))).collect()
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(msg.to_string()))
    }
}

fn dicyclic_element(n: usize, f: &IntPoly, g: &IntPoly) -> Result<RingElement> {
    let group = GroupSpec::dicyclic(n)?;
    RingElement::from_polys(group, f, Some(g))
}

/// `delta = +1` if `p = 1 mod 4`, else `-1`.
fn delta_of(p: u64) -> i64 {
    if p % 4 == 1 {
        1
    } else {
        -1
    }
}

// ---- basic bounds ----

/// The four basic named elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasicKind {
    /// 0 at the identity, 1 everywhere else: determinant `(-1)^{N-1} (N-1)`.
    Trivial,
    /// `f = x^2 + 1`, `g = 0` on dicyclic with `n` odd: determinant 16.
    Sixteen,
    /// The `2n - 1` element on dicyclic with `n` odd.
    TwoNMinusOne,
    /// `f = x^{2^{t+1}} + 1` with `2^t || n`: determinant `2^{2^{t+2}}`.
    Crude2,
}

pub fn witness_basic(group: GroupSpec, kind: BasicKind) -> Result<Witness> {
    match kind {
        BasicKind::Trivial => {
            let order = group.order();
            require(order >= 3, "trivial element needs |G| >= 3")?;
            let m = group.x_modulus();
            let mut f = vec![1i64; m];
            f[0] = 0;
            let g = vec![1i64; m];
            let element = RingElement::from_i64s(group, &f, group.has_y().then_some(g.as_slice()))?;
            let claimed = if order % 2 == 1 {
                BigInt::from(order as i64 - 1)
            } else {
                BigInt::from(-(order as i64 - 1))
            };
            Witness::checked(element, claimed, "trivial-bound", params([("order", order as i64)]))
        }
        BasicKind::Sixteen => {
            require(group.family() == GroupFamily::Dicyclic, "sixteen is a dicyclic element")?;
            require(group.n() % 2 == 1, "sixteen needs n odd")?;
            let f = IntPoly::from_i64s(&[1, 0, 1]);
            let element = dicyclic_element(group.n(), &f, &IntPoly::zero())?;
            Witness::checked(element, BigInt::from(16), "sixteen", params([("n", group.n() as i64)]))
        }
        BasicKind::TwoNMinusOne => {
            require(group.family() == GroupFamily::Dicyclic, "two-n-minus-one is a dicyclic element")?;
            let n = group.n();
            require(n % 2 == 1, "two-n-minus-one needs n odd")?;
            // H = (x^n + 1)(x + ... + x^{(n-1)/2}); element = 1 + H + y H
            let mut ramp = IntPoly::zero();
            for k in 1..=(n - 1) / 2 {
                ramp = &ramp + &IntPoly::monomial(k, BigInt::one());
            }
            let xn1 = &IntPoly::monomial(n, BigInt::one()) + &IntPoly::one();
            let h = &xn1 * &ramp;
            let f = &IntPoly::one() + &h;
            let element = dicyclic_element(n, &f, &h)?;
            Witness::checked(
                element,
                BigInt::from(2 * n as i64 - 1),
                "two-n-minus-one",
                params([("n", n as i64)]),
            )
        }
        BasicKind::Crude2 => {
            require(group.family() == GroupFamily::Dicyclic, "crude2 is a dicyclic element")?;
            let n = group.n();
            let t = arith::valuation_u64(n as u64, 2);
            let f = &IntPoly::monomial(1 << (t + 1), BigInt::one()) + &IntPoly::one();
            let element = dicyclic_element(n, &f, &IntPoly::zero())?;
            let claimed = BigInt::from(2u32).pow(1u32 << (t + 2));
            Witness::checked(element, claimed, "two-power-crude", params([("n", n as i64), ("t", t as i64)]))
        }
    }
}

// ---- coprime values for odd n ----

/// The prime element of value `delta * p` on `Q_{4n}`: `f = delta + (x^n+1) H`,
/// `g = (x^n+1) H` with `H = ((x^m + 1)/(x + 1)) (x^{a_1} + ... + x^{a_t})`,
/// `m` the odd inverse of `p` mod `n` and the exponents `a_i` solving
/// `p a_i = r_i mod n` over the residue list for `delta`.
pub fn witness_achieve_prime(n: u64, p: u64) -> Result<Witness> {
    require(n % 2 == 1 && n >= 3, "achieve needs odd n >= 3")?;
    require(is_prime_u64(p) && p % 2 == 1, "achieve needs an odd prime")?;
    require(n % p != 0, "achieve needs p not dividing n")?;
    let delta = delta_of(p);
    let t = (p as i64 - delta) / 4;
    // odd m with p m = 1 mod n: least positive inverse, plus n if even
    let inv = invmod(p % n, n)?;
    let m = if inv % 2 == 1 { inv } else { inv + n };
    // residue list: 1, 3, ..., (p-3)/2 for delta = 1; 0, 2, ..., (p-3)/2 for delta = -1
    let start = if delta == 1 { 1u64 } else { 0u64 };
    let residues: Vec<u64> = (0..t as u64).map(|i| start + 2 * i).collect();
    debug_assert!(residues.last().map_or(true, |&r| r <= (p - 3) / 2));
    let exps: Vec<u64> = residues.iter().map(|&r| (r % n) * inv % n).collect();
    let element = achieve_element(n, delta, m, &exps)?;
    let claimed = BigInt::from(delta * p as i64);
    let mut pm = params([("p", p as i64), ("delta", delta), ("t", t), ("m", m as i64)]);
    pm.insert("n", BigInt::from(n));
    Witness::checked(element, claimed, "coprime-prime", pm)
}

fn achieve_element(n: u64, delta: i64, m: u64, exps: &[u64]) -> Result<RingElement> {
    // (x^m + 1)/(x + 1) = 1 - x + x^2 - ... + x^{m-1} for odd m
    let alt = IntPoly::from_coeffs(
        (0..m as usize)
            .map(|i| if i % 2 == 0 { BigInt::one() } else { -BigInt::one() })
            .collect(),
    );
    let mut spread = IntPoly::zero();
    for &a in exps {
        spread = &spread + &IntPoly::monomial(a as usize, BigInt::one());
    }
    let h = &alt * &spread;
    let xn1 = &IntPoly::monomial(n as usize, BigInt::one()) + &IntPoly::one();
    let g = &xn1 * &h;
    let f = &g + &IntPoly::constant(BigInt::from(delta));
    dicyclic_element(n as usize, &f, &g)
}

/// An element of `Q_{4n}` (`n` odd) with determinant exactly `m`, for any
/// `m` with `gcd(m, 2n) = 1`: prime witnesses composed by ring
/// multiplication, sign fixed by the `f`/`g` swap.
pub fn witness_coprime(n: u64, m: &BigInt) -> Result<Witness> {
    require(n % 2 == 1 && n >= 3, "coprime witness needs odd n >= 3")?;
    require(!m.is_zero(), "m must be non-zero")?;
    let factors = arith::factor_bigint(m)?;
    for (p, _) in &factors {
        if 2 * n % p == 0 {
            return Err(Error::Precondition(format!("gcd(m, 2n) != 1: prime {p} divides 2n")));
        }
    }
    let group = GroupSpec::dicyclic(n as usize)?;
    let mut acc = RingElement::identity(group);
    let mut value = BigInt::one();
    for (p, e) in factors {
        let w = witness_achieve_prime(n, p)?;
        for _ in 0..e {
            acc = acc.ring_mul(&w.element)?;
            value *= &w.claimed;
        }
    }
    if value.sign() != m.sign() {
        // n odd: swapping f and g negates the determinant
        acc = acc.swap_parts()?;
        value = -value;
    }
    debug_assert_eq!(&value, m);
    let mut pm = params([("n", n as i64)]);
    pm.insert("m", m.clone());
    Witness::checked(acc, m.clone(), "coprime-composite", pm)
}

// ---- Q_{4p} two-power and p-power families ----

/// Base elements for `2^k` on `Q_{4p}` with `k` in {4, 6, 7, 9}.
fn two_power_base(p: u64, k: u32) -> Result<RingElement> {
    let xp1 = &IntPoly::monomial(p as usize, BigInt::one()) + &IntPoly::one();
    let (f, g) = match k {
        4 => (IntPoly::from_i64s(&[1, 0, 1]), IntPoly::zero()),
        6 => (
            &IntPoly::from_i64s(&[1, 0, 1]) + &(&xp1 * &IntPoly::monomial(1, BigInt::one())),
            IntPoly::zero(),
        ),
        7 => (
            &IntPoly::from_i64s(&[1, 0, 0, 0, 1]) + &(&xp1 * &IntPoly::from_i64s(&[0, 1, 1])),
            xp1,
        ),
        9 => (
            &(&IntPoly::from_i64s(&[1, 0, 0, 0, 1]) * &IntPoly::from_i64s(&[1, 0, 1]))
                + &(&xp1 * &IntPoly::monomial(2, BigInt::one())),
            xp1,
        ),
        _ => unreachable!(),
    };
    dicyclic_element(p as usize, &f, &g)
}

/// Determinant `2^k` on `Q_{4p}` for `k = 4` or `k >= 6`, built from the four
/// base constructions (k = 4, 6, 7, 9) and their ring products.
pub fn witness_q4p_two_powers(p: u64, k: u32) -> Result<Witness> {
    require(is_prime_u64(p) && p % 2 == 1, "q4p witnesses need an odd prime")?;
    require(k == 4 || k >= 6, "exponent k must be 4 or >= 6")?;
    // decompose k into parts from {4, 6, 7, 9}
    let mut parts: Vec<u32> = Vec::new();
    let mut rest = k;
    if rest % 2 == 1 {
        if rest % 4 == 3 {
            parts.push(7);
            rest -= 7;
        } else {
            parts.push(9);
            rest -= 9;
        }
    }
    while rest % 4 != 0 {
        parts.push(6);
        rest -= 6;
    }
    while rest > 0 {
        parts.push(4);
        rest -= 4;
    }
    debug_assert_eq!(parts.iter().sum::<u32>(), k);
    let group = GroupSpec::dicyclic(p as usize)?;
    let mut acc = RingElement::identity(group);
    for kk in parts {
        acc = acc.ring_mul(&two_power_base(p, kk)?)?;
    }
    let claimed = BigInt::from(2u32).pow(k);
    Witness::checked(acc, claimed, "two-power", params([("p", p as i64), ("k", k as i64)]))
}

/// The raw `delta p^3 (1 + 4m)` construction: `f = (x^a - 1)/(x - 1) + m h`,
/// `g = (x^p + 1)(x^b - 1)/(x - 1) + m h`, `h = (x^{2p} - 1)/(x - 1)`,
/// `p = 4b + delta`, `a = 2b + delta`.
pub fn witness_q4p_p_cubed(p: u64, m: i64) -> Result<Witness> {
    require(is_prime_u64(p) && p % 2 == 1, "q4p witnesses need an odd prime")?;
    let delta = delta_of(p);
    let b = ((p as i64 - delta) / 4) as usize;
    let a = (2 * b as i64 + delta) as usize;
    let h = all_ones(2 * p as usize);
    let mh = &h * &BigInt::from(m);
    let f = &all_ones(a) + &mh;
    let xp1 = &IntPoly::monomial(p as usize, BigInt::one()) + &IntPoly::one();
    let gb = if b == 0 { IntPoly::zero() } else { all_ones(b) };
    let g = &(&xp1 * &gb) + &mh;
    let element = dicyclic_element(p as usize, &f, &g)?;
    let claimed = BigInt::from(delta) * BigInt::from(p).pow(3) * BigInt::from(1 + 4 * m);
    Witness::checked(
        element,
        claimed,
        "p-cubed-times-one-plus-4m",
        params([("p", p as i64), ("m", m), ("delta", delta), ("a", a as i64), ("b", b as i64)]),
    )
}

/// Determinant `sign * p^ell` on `Q_{4p}` for `ell >= 3`, choosing `m` with
/// `1 + 4m = ±p^{ell-3}` and flipping the overall sign by the swap if needed.
pub fn witness_q4p_p_powers(p: u64, ell: u32, sign: i64) -> Result<Witness> {
    require(sign == 1 || sign == -1, "sign must be +1 or -1")?;
    require(ell >= 3, "exponent ell must be >= 3")?;
    require(is_prime_u64(p) && p % 2 == 1, "q4p witnesses need an odd prime")?;
    let delta = delta_of(p);
    let pw = BigInt::from(p).pow(ell - 3);
    // exactly one of ±p^{ell-3} is 1 mod 4
    let eps: i64 = if (&pw % 4u32) == BigInt::one() { 1 } else { -1 };
    let m_big = (BigInt::from(eps) * &pw - 1) / 4;
    let m = i64::try_from(&m_big).map_err(|_| {
        Error::ValueTooLarge(format!("p^(ell-3) = {pw} exceeds the supported parameter range"))
    })?;
    let base = witness_q4p_p_cubed(p, m)?;
    let built_sign = delta * eps;
    let claimed = BigInt::from(sign) * BigInt::from(p).pow(ell);
    let (element, anchor) = if built_sign == sign {
        (base.element, "p-power")
    } else {
        (base.element.swap_parts()?, "p-power-swapped")
    };
    Witness::checked(
        element,
        claimed,
        anchor,
        params([("p", p as i64), ("ell", ell as i64), ("sign", sign), ("m", m)]),
    )
}

// ---- Q_{4p} frontier constructions (2^5 p^ell values) ----

/// The five explicit constructions pinning down the `2^5`-boundary values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrontierKind {
    /// `f = 1 + x^2`, `g = (x - 1) Phi_p(x^2)`: value `(p^2+1)/2 * 2^5`.
    HalfP2Plus1Times32,
    /// `f = 1 - x^2 + 2 Phi_p(x^2)^{t+1} - p^t h`, `g = (x^p + 1) + 2 Phi_p(x^2)^{t+1} - p^t h`:
    /// value `-2^5 p^{2t+4}`.
    Neg32PPow2tPlus4 { t: u32 },
    /// `f = -1 + mu h`, `g = Phi_p(-x) + mu h`: value `-(p^2+1)/2 * 2^4 p^3 mu`.
    NegHalf16PCubedMu { mu: u32 },
    /// `p = 1 mod 4`, `2p = A^2 + B^2`: value `2^5 p^5`.
    SumOfSquares32P5,
    /// `p = 5` only: value `-2^5 * 5^3 = -4000`.
    P5Special,
}

pub fn witness_q4p_frontier(p: u64, kind: FrontierKind) -> Result<Witness> {
    require(is_prime_u64(p) && p % 2 == 1, "q4p witnesses need an odd prime")?;
    let np = p as usize;
    let phi_p = cyclotomic(p)?;
    let phi_p_x2 = stretch_by_two(&phi_p);
    match kind {
        FrontierKind::HalfP2Plus1Times32 => {
            let f = IntPoly::from_i64s(&[1, 0, 1]);
            let g = &IntPoly::from_i64s(&[-1, 1]) * &phi_p_x2;
            let element = dicyclic_element(np, &f, &g)?;
            let claimed = BigInt::from((p * p + 1) / 2) * 32;
            Witness::checked(element, claimed, "half-p2plus1-times-32", params([("p", p as i64)]))
        }
        FrontierKind::Neg32PPow2tPlus4 { t } => {
            let h = all_ones(2 * np);
            let pt = BigInt::from(p).pow(t);
            let common = &(&phi_p_x2.pow(t + 1) * &BigInt::from(2)) - &(&h * &pt);
            let f = &IntPoly::from_i64s(&[1, 0, -1]) + &common;
            let g = &(&IntPoly::monomial(np, BigInt::one()) + &IntPoly::one()) + &common;
            let element = dicyclic_element(np, &f, &g)?;
            let claimed = BigInt::from(-32) * BigInt::from(p).pow(2 * t + 4);
            Witness::checked(
                element,
                claimed,
                "neg-32-p-pow-2t-plus-4",
                params([("p", p as i64), ("t", t as i64)]),
            )
        }
        FrontierKind::NegHalf16PCubedMu { mu } => {
            require(mu >= 1, "mu must be >= 1")?;
            let h = all_ones(2 * np);
            let muh = &h * &BigInt::from(mu);
            let f = &muh - &IntPoly::one();
            let g = &eval_at_minus_x(&phi_p) + &muh;
            let element = dicyclic_element(np, &f, &g)?;
            let claimed =
                BigInt::from(-16) * BigInt::from((p * p + 1) / 2) * BigInt::from(p).pow(3) * BigInt::from(mu);
            Witness::checked(
                element,
                claimed,
                "neg-half-p2plus1-16-p-cubed-mu",
                params([("p", p as i64), ("mu", mu as i64)]),
            )
        }
        FrontierKind::SumOfSquares32P5 => {
            require(p % 4 == 1, "sum-of-squares form needs p = 1 mod 4")?;
            let (a, b) = two_p_as_sum_of_squares(p)?;
            let xpm1 = &IntPoly::monomial(np, BigInt::one()) - &IntPoly::one();
            let base = &xpm1 * &phi_p_x2;
            let f = &IntPoly::from_i64s(&[1, 1]) + &(&base * &BigInt::from(a));
            let g = &base * &BigInt::from(b);
            let element = dicyclic_element(np, &f, &g)?;
            let claimed = BigInt::from(32) * BigInt::from(p).pow(5);
            Witness::checked(
                element,
                claimed,
                "sum-of-squares-32-p5",
                params([("p", p as i64), ("A", a), ("B", b)]),
            )
        }
        FrontierKind::P5Special => {
            require(p == 5, "the special -2^5 p^3 element exists for p = 5 only")?;
            let xp1 = &IntPoly::monomial(5, BigInt::one()) + &IntPoly::one();
            let f = &IntPoly::from_i64s(&[1, -1, 1]) + &(&xp1 * &IntPoly::monomial(1, BigInt::one()));
            let g = &IntPoly::one() + &(&xp1 * &IntPoly::from_i64s(&[0, 1, 1]));
            let element = dicyclic_element(5, &f, &g)?;
            Witness::checked(element, BigInt::from(-4000), "p5-special", params([("p", 5)]))
        }
    }
}

/// `P(x) -> P(x^2)`.
fn stretch_by_two(p: &IntPoly) -> IntPoly {
    if p.is_zero() {
        return IntPoly::zero();
    }
    let mut coeffs = vec![BigInt::zero(); 2 * p.coeffs().len()];
    for (i, c) in p.coeffs().iter().enumerate() {
        coeffs[2 * i] = c.clone();
    }
    IntPoly::from_coeffs(coeffs)
}

/// `P(x) -> P(-x)`.
fn eval_at_minus_x(p: &IntPoly) -> IntPoly {
    IntPoly::from_coeffs(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
            .collect(),
    )
}

/// `2p = A^2 + B^2` by direct search over `A = 1 .. sqrt(2p)`.
fn two_p_as_sum_of_squares(p: u64) -> Result<(i64, i64)> {
    let target = 2 * p;
    for a in 1..=target {
        if a * a > target {
            break;
        }
        let rest = target - a * a;
        let b = (rest as f64).sqrt() as u64;
        for bb in b.saturating_sub(1)..=b + 1 {
            if bb * bb == rest {
                return Ok((a as i64, bb as i64));
            }
        }
    }
    Err(Error::Precondition(format!("2*{p} is not a sum of two squares")))
}

// ---- sharp divisibility examples ----

/// The constructions certifying that the divisibility exponents are exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SharpnessCase {
    /// Dicyclic, odd `p` with `p^alpha || n`: `p^{2 alpha + 1}` exactly divides the value.
    OddPDicyclic { p: u64 },
    /// Dicyclic, `2^alpha || n`: value `2^{2^{alpha+2}} (1 + 2 m n)` exactly.
    TwoPowerDicyclic { m: i64 },
    /// Dicyclic `4 + (x - 1)`: `2^{2 alpha + 6}` exactly divides the value.
    FourXMinusOne,
    /// Cyclic `x - 1 + (x^n - 1)/(x - 1)`: value `n^2` for odd `n`, `-n^2` for even.
    CyclicNSq,
    /// Cyclic `p + (x - 1)`, odd `p` with `p^alpha || n`: `p^{alpha+1}` exact.
    CyclicPShift { p: u64 },
    /// Cyclic `4 + (x - 1)` with `2^alpha || n`, `alpha >= 1`: `2^{alpha+2}` exact.
    Cyclic4Shift,
}

/// Builds the sharp example and verifies both the full determinant and the
/// exact valuation claim (`params["valuation"]`, at `params["p"]`).
pub fn witness_divisibility_sharpness(group: GroupSpec, case: SharpnessCase) -> Result<Witness> {
    match case {
        SharpnessCase::OddPDicyclic { p } => {
            require(group.family() == GroupFamily::Dicyclic, "case needs a dicyclic group")?;
            require(is_prime_u64(p) && p % 2 == 1, "p must be an odd prime")?;
            let n = group.n() as u64;
            let alpha = if n % p == 0 { arith::valuation_u64(n, p) } else { 0 };
            require(alpha >= 1, "p must divide n")?;
            // f = 1 - (1 + x^n)(1 - x), g = ((p-1)/2)(1 + x^n)
            let xn1 = &IntPoly::monomial(n as usize, BigInt::one()) + &IntPoly::one();
            let f = &IntPoly::one() - &(&xn1 * &IntPoly::from_i64s(&[1, -1]));
            let g = &xn1 * &BigInt::from((p - 1) / 2);
            let element = dicyclic_element(n as usize, &f, &g)?;
            let claimed = det_exact(&element);
            let val = 2 * alpha + 1;
            let mut pm = params([("p", p as i64), ("alpha", alpha as i64), ("valuation", val as i64)]);
            pm.insert("n", BigInt::from(n));
            check_valuation(element, claimed, "sharp-odd-p-dicyclic", pm, p, val)
        }
        SharpnessCase::TwoPowerDicyclic { m } => {
            require(group.family() == GroupFamily::Dicyclic, "case needs a dicyclic group")?;
            let n = group.n() as u64;
            let alpha = arith::valuation_u64(n, 2);
            // f = x^{2^{alpha+1}} + 1 + m h, g = m h, h = (x^{2n} - 1)/(x - 1)
            let h = all_ones(2 * n as usize);
            let mh = &h * &BigInt::from(m);
            let f = &(&IntPoly::monomial(1 << (alpha + 1), BigInt::one()) + &IntPoly::one()) + &mh;
            let element = dicyclic_element(n as usize, &f, &mh)?;
            let claimed =
                BigInt::from(2u32).pow(1u32 << (alpha + 2)) * BigInt::from(1 + 2 * m * n as i64);
            let mut pm = params([("alpha", alpha as i64), ("m", m)]);
            pm.insert("n", BigInt::from(n));
            Witness::checked(element, claimed, "sharp-two-power-dicyclic", pm)
        }
        SharpnessCase::FourXMinusOne => {
            require(group.family() == GroupFamily::Dicyclic, "case needs a dicyclic group")?;
            let n = group.n() as u64;
            let alpha = arith::valuation_u64(n, 2);
            let f = IntPoly::from_i64s(&[3, 1]);
            let element = dicyclic_element(n as usize, &f, &IntPoly::zero())?;
            let claimed = det_exact(&element);
            let val = 2 * alpha + 6;
            let mut pm = params([("alpha", alpha as i64), ("valuation", val as i64)]);
            pm.insert("n", BigInt::from(n));
            check_valuation(element, claimed, "sharp-4-plus-x-minus-1", pm, 2, val)
        }
        SharpnessCase::CyclicNSq => {
            require(group.family() == GroupFamily::Cyclic, "case needs a cyclic group")?;
            let n = group.n();
            require(n >= 2, "needs n >= 2")?;
            let f = &IntPoly::from_i64s(&[-1, 1]) + &all_ones(n);
            let element = RingElement::from_polys(group, &f, None)?;
            // n^2 for odd n; the determinant carries a minus sign for even n
            let sq = BigInt::from(n as i64) * BigInt::from(n as i64);
            let claimed = if n % 2 == 0 { -sq } else { sq };
            Witness::checked(element, claimed, "sharp-cyclic-n-squared", params([("n", n as i64)]))
        }
        SharpnessCase::CyclicPShift { p } => {
            require(group.family() == GroupFamily::Cyclic, "case needs a cyclic group")?;
            require(is_prime_u64(p) && p % 2 == 1, "p must be an odd prime")?;
            let n = group.n() as u64;
            let alpha = if n % p == 0 { arith::valuation_u64(n, p) } else { 0 };
            require(alpha >= 1, "p must divide n")?;
            let f = IntPoly::from_i64s(&[p as i64 - 1, 1]); // p + (x - 1)
            let element = RingElement::from_polys(group, &f, None)?;
            let claimed = det_exact(&element);
            let val = alpha + 1;
            let mut pm = params([("p", p as i64), ("alpha", alpha as i64), ("valuation", val as i64)]);
            pm.insert("n", BigInt::from(n));
            check_valuation(element, claimed, "sharp-cyclic-p-shift", pm, p, val)
        }
        SharpnessCase::Cyclic4Shift => {
            require(group.family() == GroupFamily::Cyclic, "case needs a cyclic group")?;
            let n = group.n() as u64;
            let alpha = arith::valuation_u64(n, 2);
            require(alpha >= 1, "n must be even")?;
            let f = IntPoly::from_i64s(&[3, 1]); // 4 + (x - 1)
            let element = RingElement::from_polys(group, &f, None)?;
            let claimed = det_exact(&element);
            let val = alpha + 2;
            let mut pm = params([("alpha", alpha as i64), ("valuation", val as i64)]);
            pm.insert("n", BigInt::from(n));
            check_valuation(element, claimed, "sharp-cyclic-4-shift", pm, 2, val)
        }
    }
}

fn check_valuation(
    element: RingElement,
    claimed: BigInt,
    anchor: &'static str,
    pm: BTreeMap<&'static str, BigInt>,
    p: u64,
    expected_val: u64,
) -> Result<Witness> {
    let w = Witness::checked(element, claimed, anchor, pm)?;
    if w.claimed.is_zero() {
        return Err(Error::Precondition("sharpness value is zero".into()));
    }
    let got = valuation(&w.claimed, p);
    if got != expected_val {
        return Err(Error::Precondition(format!(
            "valuation check failed: v_{p} = {got}, expected exactly {expected_val}"
        )));
    }
    Ok(w)
}

// ---- Q_8 realization ----

/// An element of `Q_8` with determinant exactly `target`, for any member of
/// the characterized `Q_8` value set.
///
/// Works through the four evaluation coordinates: with `f` encoded as
/// `(s, t, d, e) = (a0+a2, a1+a3, a0-a2, a1-a3)` the determinant is
/// `(f1^2 - g1^2)(f2^2 - g2^2) K^2` with `f1 = s+t`, `f2 = s-t`,
/// `K = d^2 + e^2 + D^2 + E^2`, so realization is a small search over
/// divisor splits and four-square decompositions, verified by `det_exact`.
pub fn realize_q8(target: &BigInt) -> Result<Witness> {
    require(!target.is_zero(), "target must be non-zero")?;
    let t128 = i128::try_from(target)
        .map_err(|_| Error::ValueTooLarge("q8 realization supports 127-bit targets".into()))?;
    let mut k = 1i128;
    while k * k <= t128.abs() {
        if t128 % (k * k) == 0 {
            if let Some(w) = realize_q8_with_square(t128, k)? {
                return Ok(w);
            }
        }
        k += 1;
    }
    Err(Error::Precondition(format!("{target} is not realized as a Q_8 determinant")))
}

fn realize_q8_with_square(target: i128, k: i128) -> Result<Option<Witness>> {
    let r = target / (k * k);
    for d1 in divisor_pairs(r) {
        let d2 = r / d1;
        for (x1, y1) in diff_of_squares(d1) {
            for (x2, y2) in diff_of_squares(d2) {
                if (x1 - x2) % 2 != 0 || (y1 - y2) % 2 != 0 {
                    continue;
                }
                let (s, t) = ((x1 + x2) / 2, (x1 - x2) / 2);
                let (bs, bt) = ((y1 + y2) / 2, (y1 - y2) / 2);
                if let Some((d, e, bd, be)) = four_squares_with_parity(k, s, t, bs, bt) {
                    let f = [(s + d) / 2, (t + e) / 2, (s - d) / 2, (t - e) / 2];
                    let g = [(bs + bd) / 2, (bt + be) / 2, (bs - bd) / 2, (bt - be) / 2];
                    let to64 = |v: [i128; 4]| -> Option<Vec<i64>> {
                        v.iter().map(|&c| i64::try_from(c).ok()).collect()
                    };
                    if let (Some(fv), Some(gv)) = (to64(f), to64(g)) {
                        let element =
                            RingElement::from_i64s(GroupSpec::dicyclic(2)?, &fv, Some(&gv))?;
                        let claimed = BigInt::from(target);
                        if det_exact(&element) == claimed {
                            let mut pm = BTreeMap::new();
                            pm.insert("target", claimed.clone());
                            return Ok(Some(Witness::unchecked(element, claimed, "q8-realizer", pm)));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// All divisors of `r` including negatives (and both orders).
fn divisor_pairs(r: i128) -> Vec<i128> {
    let a = r.unsigned_abs();
    let mut out = Vec::new();
    let mut d = 1u128;
    while d * d <= a {
        if a % d == 0 {
            for v in [d as i128, -(d as i128), (a / d) as i128, -((a / d) as i128)] {
                out.push(v);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Representations `D = x^2 - y^2` from factorizations `D = u v`, `u = v mod 2`.
fn diff_of_squares(dv: i128) -> Vec<(i128, i128)> {
    let mut out = Vec::new();
    if dv == 0 {
        for y in 0..6 {
            out.push((y, y));
        }
        return out;
    }
    for u in divisor_pairs(dv) {
        let v = dv / u;
        if (u + v) % 2 == 0 {
            out.push(((u + v) / 2, (v - u) / 2));
        }
    }
    out
}

/// A decomposition `k = d^2 + e^2 + D^2 + E^2` with prescribed parities.
fn four_squares_with_parity(
    k: i128,
    ps: i128,
    pt: i128,
    pbs: i128,
    pbt: i128,
) -> Option<(i128, i128, i128, i128)> {
    let lim = (k as f64).sqrt() as i128 + 1;
    let parity = |v: i128| v.rem_euclid(2);
    for d in 0..=lim {
        if parity(d) != parity(ps) {
            continue;
        }
        for e in 0..=lim {
            if parity(e) != parity(pt) || d * d + e * e > k {
                continue;
            }
            for bd in 0..=lim {
                if parity(bd) != parity(pbs) {
                    continue;
                }
                let rest = k - d * d - e * e - bd * bd;
                if rest < 0 {
                    continue;
                }
                let be = (rest as f64).sqrt() as i128;
                for cand in be.saturating_sub(1)..=be + 1 {
                    if cand >= 0 && cand * cand == rest && parity(cand) == parity(pbt) {
                        return Some((d, e, bd, cand));
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detengine::det_matrix_oracle;

    fn q(n: usize) -> GroupSpec {
        GroupSpec::dicyclic(n).unwrap()
    }

    #[test]
    fn basic_witnesses() {
        // (Q_12, sixteen): f = x^2 + 1, g = 0, value 16
        let w = witness_basic(q(3), BasicKind::Sixteen).unwrap();
        assert_eq!(w.claimed, BigInt::from(16));
        assert_eq!(w.element.f_part().coeffs()[2], BigInt::one());
        // (Q_12, two_n_minus_one): value 5, element 1 + (x^3+1)x + y (x^3+1)x
        let w = witness_basic(q(3), BasicKind::TwoNMinusOne).unwrap();
        assert_eq!(w.claimed, BigInt::from(5));
        let expect = RingElement::from_i64s(q(3), &[1, 1, 0, 0, 1], Some(&[0, 1, 0, 0, 1])).unwrap();
        assert_eq!(w.element, expect);
        // (Q_8, trivial): value -7
        let w = witness_basic(q(2), BasicKind::Trivial).unwrap();
        assert_eq!(w.claimed, BigInt::from(-7));
        assert_eq!(det_matrix_oracle(&w.element), BigInt::from(-7));
        // crude2 at n = 2: 2^{2^3} = 256
        let w = witness_basic(q(2), BasicKind::Crude2).unwrap();
        assert_eq!(w.claimed, BigInt::from(256));
        // parity violations
        assert!(witness_basic(q(2), BasicKind::Sixteen).is_err());
        assert!(witness_basic(q(4), BasicKind::TwoNMinusOne).is_err());
    }

    #[test]
    fn achieve_prime_examples() {
        let w = witness_achieve_prime(3, 5).unwrap();
        assert_eq!(w.claimed, BigInt::from(5));
        let w = witness_achieve_prime(3, 7).unwrap();
        assert_eq!(w.claimed, BigInt::from(-7));
        // degenerate (x^m + 1)/(x + 1) = 1 when the inverse is 1 (p = 1 mod n)
        assert_eq!(w.params["m"], BigInt::from(1));
        // delta = -1 single-residue case p = 3
        let w = witness_achieve_prime(5, 3).unwrap();
        assert_eq!(w.claimed, BigInt::from(-3));
        assert_eq!(w.params["t"], BigInt::from(1));
    }

    #[test]
    fn achieve_shifted_representative_also_works() {
        // any exponent representative mod n works: shift a_i by n and compare
        let n = 5u64;
        let p = 3u64;
        let inv = invmod(p % n, n).unwrap();
        let m = if inv % 2 == 1 { inv } else { inv + n };
        let exps: Vec<u64> = vec![0]; // delta = -1, residue {0}
        let shifted: Vec<u64> = exps.iter().map(|&a| a + n).collect();
        let e1 = achieve_element(n, -1, m, &exps).unwrap();
        let e2 = achieve_element(n, -1, m, &shifted).unwrap();
        assert_eq!(det_exact(&e1), BigInt::from(-3));
        assert_eq!(det_exact(&e2), BigInt::from(-3));
    }

    #[test]
    fn coprime_composites() {
        let w = witness_coprime(3, &BigInt::from(5)).unwrap();
        assert_eq!(w.claimed, BigInt::from(5));
        let w = witness_coprime(3, &BigInt::from(1)).unwrap();
        assert_eq!(w.claimed, BigInt::from(1));
        let w = witness_coprime(5, &BigInt::from(-21)).unwrap();
        assert_eq!(w.claimed, BigInt::from(-21));
        let w = witness_coprime(3, &BigInt::from(-35)).unwrap();
        assert_eq!(w.claimed, BigInt::from(-35));
        // gcd violations
        assert!(witness_coprime(3, &BigInt::from(6)).is_err());
        assert!(witness_coprime(3, &BigInt::from(9)).is_err());
        assert!(witness_coprime(4, &BigInt::from(5)).is_err());
    }

    #[test]
    fn two_power_values() {
        for p in [3u64, 5] {
            for k in [4u32, 6, 7, 9, 8, 10, 11, 13] {
                let w = witness_q4p_two_powers(p, k).unwrap();
                assert_eq!(w.claimed, BigInt::from(2u32).pow(k), "p={p} k={k}");
            }
        }
        assert!(witness_q4p_two_powers(3, 5).is_err());
        assert!(witness_q4p_two_powers(3, 3).is_err());
    }

    #[test]
    fn p_power_values() {
        // -27 with m = 0
        let w = witness_q4p_p_powers(3, 3, -1).unwrap();
        assert_eq!(w.claimed, BigInt::from(-27));
        assert_eq!(w.params["m"], BigInt::from(0));
        // 81 with m = -1
        let w = witness_q4p_p_powers(3, 4, 1).unwrap();
        assert_eq!(w.claimed, BigInt::from(81));
        assert_eq!(w.params["m"], BigInt::from(-1));
        // 625 with m = 1
        let w = witness_q4p_p_powers(5, 4, 1).unwrap();
        assert_eq!(w.claimed, BigInt::from(625));
        assert_eq!(w.params["m"], BigInt::from(1));
        // both signs everywhere
        for sign in [1i64, -1] {
            for ell in [3u32, 4, 5] {
                let w = witness_q4p_p_powers(3, ell, sign).unwrap();
                assert_eq!(w.claimed, BigInt::from(sign) * BigInt::from(3u32).pow(ell));
            }
        }
        assert!(witness_q4p_p_powers(3, 2, 1).is_err());
    }

    #[test]
    fn frontier_values() {
        let w = witness_q4p_frontier(3, FrontierKind::HalfP2Plus1Times32).unwrap();
        assert_eq!(w.claimed, BigInt::from(160));
        let w = witness_q4p_frontier(3, FrontierKind::Neg32PPow2tPlus4 { t: 0 }).unwrap();
        assert_eq!(w.claimed, BigInt::from(-2592));
        let w = witness_q4p_frontier(5, FrontierKind::SumOfSquares32P5).unwrap();
        assert_eq!(w.claimed, BigInt::from(100000));
        assert_eq!((w.params["A"].clone(), w.params["B"].clone()), (BigInt::from(1), BigInt::from(3)));
        let w = witness_q4p_frontier(5, FrontierKind::P5Special).unwrap();
        assert_eq!(w.claimed, BigInt::from(-4000));
        let w = witness_q4p_frontier(3, FrontierKind::NegHalf16PCubedMu { mu: 1 }).unwrap();
        assert_eq!(w.claimed, BigInt::from(-2160));
        // preconditions
        assert!(witness_q4p_frontier(3, FrontierKind::SumOfSquares32P5).is_err());
        assert!(witness_q4p_frontier(3, FrontierKind::P5Special).is_err());
    }

    #[test]
    fn sharpness_examples() {
        // n = 9, p = 3, alpha = 2: 3^5 exactly
        let w = witness_divisibility_sharpness(q(9), SharpnessCase::OddPDicyclic { p: 3 }).unwrap();
        assert_eq!(w.params["valuation"], BigInt::from(5));
        assert_eq!(valuation(&w.claimed, 3), 5);
        // Q_12, m = 1: 2^4 (1 + 2*3) = 112
        let w = witness_divisibility_sharpness(q(3), SharpnessCase::TwoPowerDicyclic { m: 1 }).unwrap();
        assert_eq!(w.claimed, BigInt::from(112));
        // Z_6 n-squared carries the even-n sign
        let z6 = GroupSpec::cyclic(6).unwrap();
        let w = witness_divisibility_sharpness(z6, SharpnessCase::CyclicNSq).unwrap();
        assert_eq!(w.claimed, BigInt::from(-36));
        let z9 = GroupSpec::cyclic(9).unwrap();
        let w = witness_divisibility_sharpness(z9, SharpnessCase::CyclicNSq).unwrap();
        assert_eq!(w.claimed, BigInt::from(81));
        // cyclic shifts
        let w = witness_divisibility_sharpness(z9, SharpnessCase::CyclicPShift { p: 3 }).unwrap();
        assert_eq!(valuation(&w.claimed, 3), 3);
        let z12 = GroupSpec::cyclic(12).unwrap();
        let w = witness_divisibility_sharpness(z12, SharpnessCase::Cyclic4Shift).unwrap();
        assert_eq!(valuation(&w.claimed, 2), 4);
        // dicyclic 4 + (x-1)
        let w = witness_divisibility_sharpness(q(6), SharpnessCase::FourXMinusOne).unwrap();
        assert_eq!(valuation(&w.claimed, 2), 8);
    }

    #[test]
    fn checked_mode_catches_mismatch() {
        let e = RingElement::identity(q(3));
        let err = Witness::checked(e, BigInt::from(2), "bogus", BTreeMap::new());
        assert!(matches!(err, Err(Error::WitnessMismatch { .. })));
    }

    #[test]
    fn q8_realizer_spot_values() {
        for v in [-7i64, 9, 17, 41, 45, 256, -256, 261, -295, 2304] {
            let w = realize_q8(&BigInt::from(v)).unwrap();
            assert_eq!(det_exact(&w.element), BigInt::from(v), "target {v}");
        }
    }
}
