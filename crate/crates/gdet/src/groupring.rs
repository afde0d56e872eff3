//! Group structure and group-ring algebra for `Z_n`, `D_{2n}` and `Q_{4n}`.
//!
//! Elements of the dihedral and dicyclic groups are words `y^e x^i` in
//! canonical form; group-ring elements are pairs `f(x) + y g(x)` of cyclic
//! polynomials. The element enumeration is fixed and documented:
//! `x^0, ..., x^{m-1}` followed by `y x^0, ..., y x^{m-1}` where `m` is the
//! rotation modulus (`2n` for dicyclic, `n` otherwise), so determinant
//! matrices are reproducible byte for byte.

use crate::intpoly::{CyclicPoly, IntPoly};
use crate::{Error, Result};
use num_bigint::BigInt;
use std::fmt;

/// The three supported group families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupFamily {
    Cyclic,
    Dihedral,
    Dicyclic,
}

/// A group family with its parameter `n`; orders are `n`, `2n`, `4n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    family: GroupFamily,
    n: usize,
}

impl GroupSpec {
    pub fn new(family: GroupFamily, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("group parameter n must be >= 1".into()));
        }
        Ok(GroupSpec { family, n })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        GroupSpec::new(GroupFamily::Cyclic, n)
    }

    pub fn dihedral(n: usize) -> Result<Self> {
        GroupSpec::new(GroupFamily::Dihedral, n)
    }

    pub fn dicyclic(n: usize) -> Result<Self> {
        GroupSpec::new(GroupFamily::Dicyclic, n)
    }

    pub fn family(&self) -> GroupFamily {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        match self.family {
            GroupFamily::Cyclic => self.n,
            GroupFamily::Dihedral => 2 * self.n,
            GroupFamily::Dicyclic => 4 * self.n,
        }
    }

    /// Modulus of the rotation part: `n` for cyclic and dihedral, `2n` for dicyclic.
    pub fn x_modulus(&self) -> usize {
        match self.family {
            GroupFamily::Cyclic | GroupFamily::Dihedral => self.n,
            GroupFamily::Dicyclic => 2 * self.n,
        }
    }

    pub fn has_y(&self) -> bool {
        self.family != GroupFamily::Cyclic
    }

    /// The fixed element enumeration.
    pub fn elements(&self) -> Vec<GroupWord> {
        let m = self.x_modulus();
        let mut out: Vec<GroupWord> = (0..m).map(|x| GroupWord { y: false, x }).collect();
        if self.has_y() {
            out.extend((0..m).map(|x| GroupWord { y: true, x }));
        }
        out
    }

    /// Index of a word in the fixed enumeration.
    pub fn word_index(&self, w: GroupWord) -> usize {
        w.x + if w.y { self.x_modulus() } else { 0 }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            GroupFamily::Cyclic => write!(f, "Z_{}", self.n),
            GroupFamily::Dihedral => write!(f, "D_{}", 2 * self.n),
            GroupFamily::Dicyclic => write!(f, "Q_{}", 4 * self.n),
        }
    }
}

/// A group element in canonical form `y^e x^i`, `i` reduced into the rotation modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupWord {
    pub y: bool,
    pub x: usize,
}

/// Product of two canonical words under the group relations.
///
/// Moving `x^i` past `y` negates the exponent; in the dicyclic case `y * y`
/// contributes an extra `x^n`.
pub fn word_mul(g: &GroupSpec, a: GroupWord, b: GroupWord) -> GroupWord {
    let m = g.x_modulus();
    let (mut y, mut x) = if b.y {
        (!a.y, (b.x + m - a.x) % m)
    } else {
        (a.y, (a.x + b.x) % m)
    };
    if a.y && b.y {
        // y^2 folded: identity for dihedral, x^n for dicyclic
        y = false;
        if g.family() == GroupFamily::Dicyclic {
            x = (x + g.n()) % m;
        }
    }
    debug_assert!(!(y && !g.has_y()));
    GroupWord { y, x }
}

/// Inverse of a canonical word.
pub fn word_inv(g: &GroupSpec, a: GroupWord) -> GroupWord {
    let m = g.x_modulus();
    if !a.y {
        GroupWord { y: false, x: (m - a.x) % m }
    } else {
        match g.family() {
            GroupFamily::Dihedral => a, // reflections are involutions
            GroupFamily::Dicyclic => GroupWord { y: true, x: (a.x + g.n()) % m },
            GroupFamily::Cyclic => unreachable!("cyclic words have no y part"),
        }
    }
}

/// A group-ring element `f(x) + y g(x)` with integer coefficients.
///
/// The `g` part is absent for the cyclic family and always present otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElement {
    group: GroupSpec,
    f: CyclicPoly,
    g: Option<CyclicPoly>,
}

impl RingElement {
    pub fn new(group: GroupSpec, f: CyclicPoly, g: Option<CyclicPoly>) -> Result<Self> {
        let m = group.x_modulus();
        if f.modulus() != m {
            return Err(Error::ModulusMismatch { left: f.modulus(), right: m });
        }
        match (&g, group.has_y()) {
            (Some(gp), true) => {
                if gp.modulus() != m {
                    return Err(Error::ModulusMismatch { left: gp.modulus(), right: m });
                }
            }
            (None, true) => {
                return Ok(RingElement { group, f, g: Some(CyclicPoly::zero(m)) });
            }
            (Some(_), false) => {
                return Err(Error::InvalidArgument(
                    "cyclic elements have no y part".into(),
                ));
            }
            (None, false) => {}
        }
        Ok(RingElement { group, f, g })
    }

    /// Builds from plain polynomials, reducing each modulo `x^m - 1`.
    pub fn from_polys(group: GroupSpec, f: &IntPoly, g: Option<&IntPoly>) -> Result<Self> {
        let m = group.x_modulus();
        let fc = CyclicPoly::from_int_poly(m, f);
        let gc = g.map(|p| CyclicPoly::from_int_poly(m, p));
        RingElement::new(group, fc, gc)
    }

    pub fn from_i64s(group: GroupSpec, f: &[i64], g: Option<&[i64]>) -> Result<Self> {
        let m = group.x_modulus();
        let fc = CyclicPoly::from_i64s(m, f);
        let gc = g.map(|v| CyclicPoly::from_i64s(m, v));
        RingElement::new(group, fc, gc)
    }

    /// The multiplicative identity `1 + y*0`.
    pub fn identity(group: GroupSpec) -> Self {
        let m = group.x_modulus();
        RingElement {
            group,
            f: CyclicPoly::one(m),
            g: group.has_y().then(|| CyclicPoly::zero(m)),
        }
    }

    pub fn zero(group: GroupSpec) -> Self {
        let m = group.x_modulus();
        RingElement {
            group,
            f: CyclicPoly::zero(m),
            g: group.has_y().then(|| CyclicPoly::zero(m)),
        }
    }

    pub fn group(&self) -> GroupSpec {
        self.group
    }

    pub fn f_part(&self) -> &CyclicPoly {
        &self.f
    }

    pub fn g_part(&self) -> Option<&CyclicPoly> {
        self.g.as_ref()
    }

    /// Coefficient at a canonical group word.
    pub fn coeff(&self, w: GroupWord) -> BigInt {
        if w.y {
            self.g.as_ref().expect("y word in cyclic element").coeffs()[w.x].clone()
        } else {
            self.f.coeffs()[w.x].clone()
        }
    }

    /// The coefficient vector over the fixed element enumeration (f part then g part).
    pub fn coefficient_vector(&self) -> Vec<BigInt> {
        let mut out = self.f.coeffs().to_vec();
        if let Some(g) = &self.g {
            out.extend_from_slice(g.coeffs());
        }
        out
    }

    /// Ring product under the group relations.
    ///
    /// Closed forms (with `~` the reciprocal `x -> x^{-1}` and all products
    /// cyclic mod `x^m - 1`):
    ///
    /// * cyclic: `f = f1 f2`
    /// * dihedral: `f = f1 f2 + g1~ g2`, `g = f1~ g2 + g1 f2`
    /// * dicyclic: `f = f1 f2 + x^n g1~ g2`, `g = f1~ g2 + g1 f2`
    ///
    /// The forms are locked by an exhaustive convolution cross-check over
    /// explicit group words in the test suite.
    pub fn ring_mul(&self, other: &RingElement) -> Result<RingElement> {
        if self.group != other.group {
            return Err(Error::GroupMismatch {
                left: self.group.to_string(),
                right: other.group.to_string(),
            });
        }
        let group = self.group;
        match group.family() {
            GroupFamily::Cyclic => {
                let f = self.f.cyclic_mul(&other.f)?;
                RingElement::new(group, f, None)
            }
            GroupFamily::Dihedral | GroupFamily::Dicyclic => {
                let g1 = self.g.as_ref().unwrap();
                let g2 = other.g.as_ref().unwrap();
                let mut cross = g1.reciprocal().cyclic_mul(g2)?;
                if group.family() == GroupFamily::Dicyclic {
                    cross = cross.mul_x_pow(group.n());
                }
                let f = self.f.cyclic_mul(&other.f)?.add(&cross)?;
                let g = self
                    .f
                    .reciprocal()
                    .cyclic_mul(g2)?
                    .add(&g1.cyclic_mul(&other.f)?)?;
                RingElement::new(group, f, Some(g))
            }
        }
    }

    /// The swap `f + y g -> g + y f`; errors for cyclic elements.
    pub fn swap_parts(&self) -> Result<RingElement> {
        match &self.g {
            Some(g) => RingElement::new(self.group, g.clone(), Some(self.f.clone())),
            None => Err(Error::InvalidArgument("cyclic elements have no y part to swap".into())),
        }
    }

    /// The `|G| x |G|` determinant matrix: entry `(i, j)` is the coefficient
    /// at `g_i * g_j^{-1}` over the fixed enumeration.
    pub fn to_matrix(&self) -> Vec<Vec<BigInt>> {
        let els = self.group.elements();
        let inv: Vec<GroupWord> = els.iter().map(|&w| word_inv(&self.group, w)).collect();
        els.iter()
            .map(|&gi| {
                inv.iter()
                    .map(|&gj_inv| self.coeff(word_mul(&self.group, gi, gj_inv)))
                    .collect()
            })
            .collect()
    }

    /// Canonical text form: full-length comma-separated coefficient lists,
    /// `f ; g` when a y part exists.
    pub fn canonical_text(&self) -> String {
        let join = |p: &CyclicPoly| {
            p.coeffs()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match &self.g {
            Some(g) => format!("{} ; {}", join(&self.f), join(g)),
            None => join(&self.f),
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.g {
            Some(g) if !g.is_zero() => write!(
                f,
                "({}) + y*({})",
                self.f.to_int_poly(),
                g.to_int_poly()
            ),
            _ => write!(f, "{}", self.f.to_int_poly()),
        }
    }
}

/// Convolution-definition product: `c_w = sum_{u v = w} a_u b_v` over
/// explicit group words. Quadratic in the group order; used to validate the
/// closed-form `ring_mul`.
pub fn ring_mul_convolution(a: &RingElement, b: &RingElement) -> Result<RingElement> {
    if a.group() != b.group() {
        return Err(Error::GroupMismatch {
            left: a.group().to_string(),
            right: b.group().to_string(),
        });
    }
    let group = a.group();
    let els = group.elements();
    let m = group.x_modulus();
    let mut f = vec![BigInt::from(0); m];
    let mut g = vec![BigInt::from(0); m];
    for &u in &els {
        let au = a.coeff(u);
        if au == BigInt::from(0) {
            continue;
        }
        for &v in &els {
            let w = word_mul(&group, u, v);
            let t = &au * b.coeff(v);
            if w.y {
                g[w.x] += t;
            } else {
                f[w.x] += t;
            }
        }
    }
    let fc = CyclicPoly::from_coeffs(m, f);
    let gc = group.has_y().then(|| CyclicPoly::from_coeffs(m, g));
    RingElement::new(group, fc, gc)
}

/// Uniform random element with coefficients in `[-bound, bound]`.
pub fn random_element<R: rand::Rng>(group: GroupSpec, bound: i64, rng: &mut R) -> RingElement {
    let m = group.x_modulus();
    let mut draw = |len: usize| -> Vec<i64> { (0..len).map(|_| rng.gen_range(-bound..=bound)).collect() };
    let f = draw(m);
    let g = group.has_y().then(|| draw(m));
    RingElement::from_i64s(group, &f, g.as_deref()).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(n: usize) -> GroupSpec {
        GroupSpec::dicyclic(n).unwrap()
    }

    #[test]
    fn word_relations() {
        // y * y = x^n
        let g = q(4);
        let y = GroupWord { y: true, x: 0 };
        assert_eq!(word_mul(&g, y, y), GroupWord { y: false, x: 4 });
        // x * y = y * x^{2n-1}
        let x = GroupWord { y: false, x: 1 };
        assert_eq!(word_mul(&g, x, y), GroupWord { y: true, x: 7 });
        // dihedral reflections square to the identity
        let d = GroupSpec::dihedral(5).unwrap();
        let yx2 = GroupWord { y: true, x: 2 };
        assert_eq!(word_mul(&d, yx2, yx2), GroupWord { y: false, x: 0 });
    }

    #[test]
    fn inverse_matches_brute_force() {
        for g in [q(2), q(3), GroupSpec::dihedral(4).unwrap(), GroupSpec::cyclic(6).unwrap()] {
            let e = GroupWord { y: false, x: 0 };
            for &w in &g.elements() {
                let inv = word_inv(&g, w);
                assert_eq!(word_mul(&g, w, inv), e);
                assert_eq!(word_mul(&g, inv, w), e);
                // brute force agreement
                let brute = g
                    .elements()
                    .into_iter()
                    .find(|&v| word_mul(&g, w, v) == e)
                    .unwrap();
                assert_eq!(inv, brute);
            }
        }
        // inverse of y x^i is y x^{i+n} in Q_{4n}
        let g = q(3);
        for i in 0..6 {
            let w = GroupWord { y: true, x: i };
            assert_eq!(word_inv(&g, w), GroupWord { y: true, x: (i + 3) % 6 });
        }
    }

    #[test]
    fn word_mul_associative_exhaustive() {
        for g in [q(6), GroupSpec::dihedral(12).unwrap(), GroupSpec::cyclic(24).unwrap()] {
            assert!(g.order() <= 24);
            let els = g.elements();
            for &a in &els {
                for &b in &els {
                    let ab = word_mul(&g, a, b);
                    for &c in &els {
                        assert_eq!(
                            word_mul(&g, ab, c),
                            word_mul(&g, a, word_mul(&g, b, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn ring_mul_matches_convolution() {
        // exhaustive for tiny groups with coefficients in {-1, 0, 1}
        let g = q(1); // order 4, vectors of length 4 over 3 symbols
        let vals: Vec<i64> = vec![-1, 0, 1];
        let mut vectors = Vec::new();
        for a in &vals {
            for b in &vals {
                for c in &vals {
                    for d in &vals {
                        vectors.push(vec![*a, *b, *c, *d]);
                    }
                }
            }
        }
        for va in &vectors {
            let ea = RingElement::from_i64s(g, &va[0..2], Some(&va[2..4])).unwrap();
            for vb in vectors.iter().step_by(7) {
                let eb = RingElement::from_i64s(g, &vb[0..2], Some(&vb[2..4])).unwrap();
                assert_eq!(
                    ea.ring_mul(&eb).unwrap(),
                    ring_mul_convolution(&ea, &eb).unwrap()
                );
            }
        }
        // random sampling for |G| <= 24, all families
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for g in [q(2), q(3), q(6), GroupSpec::dihedral(5).unwrap(), GroupSpec::cyclic(9).unwrap()] {
            for _ in 0..60 {
                let a = random_element(g, 3, &mut rng);
                let b = random_element(g, 3, &mut rng);
                assert_eq!(a.ring_mul(&b).unwrap(), ring_mul_convolution(&a, &b).unwrap());
            }
        }
    }

    #[test]
    fn yy_equals_x_to_n() {
        // (0 + y*1)^2 = x^n + y*0 in Q_{4n}
        for n in [1usize, 2, 3, 5] {
            let g = q(n);
            let y = RingElement::from_i64s(g, &[], Some(&[1])).unwrap();
            let sq = y.ring_mul(&y).unwrap();
            let mut expect_f = vec![0i64; 2 * n];
            expect_f[n] = 1;
            let expect = RingElement::from_i64s(g, &expect_f, Some(&[])).unwrap();
            assert_eq!(sq, expect);
        }
    }

    #[test]
    fn identity_is_neutral() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for g in [q(3), GroupSpec::dihedral(4).unwrap(), GroupSpec::cyclic(5).unwrap()] {
            let e = RingElement::identity(g);
            for _ in 0..20 {
                let a = random_element(g, 4, &mut rng);
                assert_eq!(a.ring_mul(&e).unwrap(), a);
                assert_eq!(e.ring_mul(&a).unwrap(), a);
            }
        }
    }

    #[test]
    fn group_mismatch_rejected() {
        let a = RingElement::identity(q(2));
        let b = RingElement::identity(q(3));
        assert!(matches!(a.ring_mul(&b), Err(Error::GroupMismatch { .. })));
    }

    #[test]
    fn matrix_rows_and_columns_permute_coefficients() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for g in [q(2), q(3), GroupSpec::dihedral(3).unwrap(), GroupSpec::cyclic(7).unwrap()] {
            let a = random_element(g, 5, &mut rng);
            let m = a.to_matrix();
            let mut base: Vec<BigInt> = a.coefficient_vector();
            base.sort();
            let row_sum: BigInt = base.iter().sum();
            for i in 0..m.len() {
                let mut row = m[i].clone();
                assert_eq!(row.iter().sum::<BigInt>(), row_sum);
                row.sort();
                assert_eq!(row, base);
                let mut col: Vec<BigInt> = (0..m.len()).map(|r| m[r][i].clone()).collect();
                col.sort();
                assert_eq!(col, base);
            }
        }
    }

    #[test]
    fn identity_matrix_for_identity_element() {
        let g = q(2);
        let m = RingElement::identity(g).to_matrix();
        for (i, row) in m.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(*v, BigInt::from((i == j) as i64));
            }
        }
    }

    #[test]
    fn canonical_text_shape() {
        let g = q(3);
        let e = RingElement::from_i64s(g, &[1, 0, 1], Some(&[0, -2])).unwrap();
        assert_eq!(e.canonical_text(), "1,0,1,0,0,0 ; 0,-2,0,0,0,0");
        let z = GroupSpec::cyclic(3).unwrap();
        let c = RingElement::from_i64s(z, &[4, 5], None).unwrap();
        assert_eq!(c.canonical_text(), "4,5,0");
    }
}
