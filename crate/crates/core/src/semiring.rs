//! The superboolean semiring `{0, 1, 1^ν}`, bipotent semirings, and the
//! supertropicalization `T(R)` of a bipotent semiring.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Mul};

use num_rational::Rational64;

use crate::error::{Error, Result};

/// A superboolean scalar. The derived order is `Zero < One < Ghost`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SBElem {
    Zero,
    One,
    /// The ghost `1^ν`.
    Ghost,
}

impl SBElem {
    pub const ALL: [SBElem; 3] = [SBElem::Zero, SBElem::One, SBElem::Ghost];

    /// Projection onto the ghost ideal `{0, 1^ν}`.
    pub fn nu(self) -> SBElem {
        match self {
            SBElem::Zero => SBElem::Zero,
            SBElem::One | SBElem::Ghost => SBElem::Ghost,
        }
    }

    pub fn nu_equiv(self, other: SBElem) -> bool {
        self.nu() == other.nu()
    }

    /// Member of the ghost ideal `{0, 1^ν}`.
    pub fn is_ghost_or_zero(self) -> bool {
        self != SBElem::One
    }

    pub fn is_boolean(self) -> bool {
        self != SBElem::Ghost
    }

    /// Text token used by every file format: `0`, `1` or `v`.
    pub fn token(self) -> &'static str {
        match self {
            SBElem::Zero => "0",
            SBElem::One => "1",
            SBElem::Ghost => "v",
        }
    }

    pub fn from_token(token: &str) -> Option<SBElem> {
        match token {
            "0" => Some(SBElem::Zero),
            "1" => Some(SBElem::One),
            "v" => Some(SBElem::Ghost),
            _ => None,
        }
    }

    pub fn from_bool(b: bool) -> SBElem {
        if b {
            SBElem::One
        } else {
            SBElem::Zero
        }
    }
}

impl fmt::Display for SBElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

pub fn sb_add(a: SBElem, b: SBElem) -> SBElem {
    use SBElem::*;
    match (a, b) {
        (Zero, x) | (x, Zero) => x,
        _ => Ghost,
    }
}

pub fn sb_mul(a: SBElem, b: SBElem) -> SBElem {
    use SBElem::*;
    match (a, b) {
        (Zero, _) | (_, Zero) => Zero,
        (One, x) | (x, One) => x,
        (Ghost, Ghost) => Ghost,
    }
}

impl Add for SBElem {
    type Output = SBElem;
    fn add(self, rhs: SBElem) -> SBElem {
        sb_add(self, rhs)
    }
}

impl Mul for SBElem {
    type Output = SBElem;
    fn mul(self, rhs: SBElem) -> SBElem {
        sb_mul(self, rhs)
    }
}

impl Sum for SBElem {
    fn sum<I: Iterator<Item = SBElem>>(iter: I) -> SBElem {
        iter.fold(SBElem::Zero, sb_add)
    }
}

impl Product for SBElem {
    fn product<I: Iterator<Item = SBElem>>(iter: I) -> SBElem {
        iter.fold(SBElem::One, sb_mul)
    }
}

/// A semiring with `a + b ∈ {a, b}`; it is totally ordered by
/// `a > b ⇔ a + b = a` (for `a ≠ b`).
pub trait BipotentSemiring {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Every element, when the semiring is finite.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    fn greater(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a != b && self.add(a, b) == *a
    }
}

/// The boolean semiring `({0,1}, or, and)`. Note that `1 + 1 = 1` here,
/// unlike in the superboolean semiring.
#[derive(Clone, Copy, Debug, Default)]
pub struct Boolean;

impl BipotentSemiring for Boolean {
    type Elem = bool;

    fn zero(&self) -> bool {
        false
    }
    fn one(&self) -> bool {
        true
    }
    fn add(&self, a: &bool, b: &bool) -> bool {
        *a || *b
    }
    fn mul(&self, a: &bool, b: &bool) -> bool {
        *a && *b
    }
    fn elements(&self) -> Option<Vec<bool>> {
        Some(vec![false, true])
    }
}

/// Max-plus over the rationals; `None` is `-∞`, the additive zero, and the
/// rational `0` is the multiplicative unit.
#[derive(Clone, Copy, Debug, Default)]
pub struct MaxPlus;

impl BipotentSemiring for MaxPlus {
    type Elem = Option<Rational64>;

    fn zero(&self) -> Self::Elem {
        None
    }
    fn one(&self) -> Self::Elem {
        Some(Rational64::from_integer(0))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        // Option orders None below every Some
        std::cmp::max(*a, *b)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        match (a, b) {
            (Some(x), Some(y)) => Some(x + y),
            _ => None,
        }
    }
}

/// Sort of an element of a supertropicalized semiring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sort {
    Tangible,
    Ghost,
    Zero,
}

/// Element of `T(R)`. Equality is structural; use
/// [`SupertropicalSemiring::nu_equiv`] for ν-equivalence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SupertropicalElem<E> {
    Zero,
    Tangible(E),
    Ghost(E),
}

impl<E> SupertropicalElem<E> {
    pub fn sort(&self) -> Sort {
        match self {
            SupertropicalElem::Zero => Sort::Zero,
            SupertropicalElem::Tangible(_) => Sort::Tangible,
            SupertropicalElem::Ghost(_) => Sort::Ghost,
        }
    }
}

/// A semiring with a ghost ideal and a projection `ν` onto it, satisfying
/// supertropicality (`a + b = a^ν` when `a^ν = b^ν`) and bipotence
/// (`a + b ∈ {a, b}` otherwise).
pub trait SupertropicalSemiring {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn nu(&self, a: &Self::Elem) -> Self::Elem;

    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    fn nu_equiv(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.nu(a) == self.nu(b)
    }

    fn is_ghost_or_zero(&self, a: &Self::Elem) -> bool {
        self.nu(a) == *a
    }
}

/// The superboolean semiring as a [`SupertropicalSemiring`].
#[derive(Clone, Copy, Debug, Default)]
pub struct SuperBoolean;

impl SupertropicalSemiring for SuperBoolean {
    type Elem = SBElem;

    fn zero(&self) -> SBElem {
        SBElem::Zero
    }
    fn one(&self) -> SBElem {
        SBElem::One
    }
    fn add(&self, a: &SBElem, b: &SBElem) -> SBElem {
        sb_add(*a, *b)
    }
    fn mul(&self, a: &SBElem, b: &SBElem) -> SBElem {
        sb_mul(*a, *b)
    }
    fn nu(&self, a: &SBElem) -> SBElem {
        a.nu()
    }
    fn elements(&self) -> Option<Vec<SBElem>> {
        Some(SBElem::ALL.to_vec())
    }
}

/// `T(R) = 𝒯 ∪ {0} ∪ 𝒢` with `𝒯 = 𝒢 = R ∖ {0}`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Supertropical<R> {
    base: R,
}

pub fn supertropicalize<R: BipotentSemiring>(base: R) -> Supertropical<R> {
    Supertropical { base }
}

impl<R: BipotentSemiring> Supertropical<R> {
    pub fn base(&self) -> &R {
        &self.base
    }

    fn wrap(&self, value: R::Elem, sort: Sort) -> SupertropicalElem<R::Elem> {
        if value == self.base.zero() {
            return SupertropicalElem::Zero;
        }
        match sort {
            Sort::Tangible => SupertropicalElem::Tangible(value),
            Sort::Ghost => SupertropicalElem::Ghost(value),
            Sort::Zero => SupertropicalElem::Zero,
        }
    }

    /// Underlying value of `ν(x)` in `R`, with `0 ↦ 0`.
    fn ghost_value(&self, x: &SupertropicalElem<R::Elem>) -> R::Elem {
        match x {
            SupertropicalElem::Zero => self.base.zero(),
            SupertropicalElem::Tangible(a) | SupertropicalElem::Ghost(a) => a.clone(),
        }
    }

    pub fn tangible(&self, a: R::Elem) -> SupertropicalElem<R::Elem> {
        self.wrap(a, Sort::Tangible)
    }

    pub fn ghost(&self, a: R::Elem) -> SupertropicalElem<R::Elem> {
        self.wrap(a, Sort::Ghost)
    }
}

impl<R: BipotentSemiring> SupertropicalSemiring for Supertropical<R> {
    type Elem = SupertropicalElem<R::Elem>;

    fn zero(&self) -> Self::Elem {
        SupertropicalElem::Zero
    }

    fn one(&self) -> Self::Elem {
        self.tangible(self.base.one())
    }

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let (vx, vy) = (self.ghost_value(x), self.ghost_value(y));
        if self.base.greater(&vx, &vy) {
            x.clone()
        } else if self.base.greater(&vy, &vx) {
            y.clone()
        } else {
            self.nu(x)
        }
    }

    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        use SupertropicalElem::*;
        match (x, y) {
            (Zero, _) | (_, Zero) => Zero,
            (Tangible(a), Tangible(b)) => self.tangible(self.base.mul(a, b)),
            (Tangible(a), Ghost(b)) | (Ghost(a), Tangible(b)) | (Ghost(a), Ghost(b)) => {
                self.ghost(self.base.mul(a, b))
            }
        }
    }

    fn nu(&self, x: &Self::Elem) -> Self::Elem {
        match x {
            SupertropicalElem::Tangible(a) => SupertropicalElem::Ghost(a.clone()),
            other => other.clone(),
        }
    }

    fn elements(&self) -> Option<Vec<Self::Elem>> {
        let base = self.base.elements()?;
        let zero = self.base.zero();
        let mut out = vec![SupertropicalElem::Zero];
        for a in base.iter().filter(|a| **a != zero) {
            out.push(SupertropicalElem::Tangible(a.clone()));
        }
        for a in base.iter().filter(|a| **a != zero) {
            out.push(SupertropicalElem::Ghost(a.clone()));
        }
        Some(out)
    }
}

/// The embedding `φ: 𝕊𝔹 → F` with `1 ↦ 𝟙`, `1^ν ↦ 𝟙^ν`, `0 ↦ 𝟘`.
pub fn embed_sb<F: SupertropicalSemiring>(target: &F, a: SBElem) -> F::Elem {
    match a {
        SBElem::Zero => target.zero(),
        SBElem::One => target.one(),
        SBElem::Ghost => target.nu(&target.one()),
    }
}

/// Searches for a bijection `SBElem::ALL[i] ↦ image[i]` onto the elements of
/// a finite supertropical semiring that commutes with both operations.
pub fn sb_isomorphism<F: SupertropicalSemiring>(target: &F) -> Result<Option<Vec<F::Elem>>> {
    let elems = target
        .elements()
        .ok_or_else(|| Error::LimitExceeded("target semiring is not finite".into()))?;
    if elems.len() != SBElem::ALL.len() {
        return Ok(None);
    }
    use itertools::Itertools;
    for perm in (0..elems.len()).permutations(elems.len()) {
        let image: Vec<F::Elem> = perm.iter().map(|&i| elems[i].clone()).collect();
        let phi = |a: SBElem| image[a as usize].clone();
        let commutes = SBElem::ALL.iter().all(|&a| {
            SBElem::ALL.iter().all(|&b| {
                phi(a + b) == target.add(&phi(a), &phi(b))
                    && phi(a * b) == target.mul(&phi(a), &phi(b))
            })
        });
        if commutes {
            return Ok(Some(image));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use SBElem::*;

    const TABLE_ADD: [[SBElem; 3]; 3] = [
        [Zero, One, Ghost],
        [One, Ghost, Ghost],
        [Ghost, Ghost, Ghost],
    ];
    const TABLE_MUL: [[SBElem; 3]; 3] = [
        [Zero, Zero, Zero],
        [Zero, One, Ghost],
        [Zero, Ghost, Ghost],
    ];

    #[test]
    fn tables() {
        for (i, &a) in SBElem::ALL.iter().enumerate() {
            for (j, &b) in SBElem::ALL.iter().enumerate() {
                assert_eq!(a + b, TABLE_ADD[i][j], "{a} + {b}");
                assert_eq!(a * b, TABLE_MUL[i][j], "{a} * {b}");
            }
        }
        assert_eq!(One + One, Ghost);
        assert_eq!(One + Ghost, Ghost);
        assert_eq!(Ghost * Ghost, Ghost);
        assert_eq!(Zero * Ghost, Zero);
    }

    #[test]
    fn order_and_identities() {
        assert!(Ghost > One && One > Zero);
        for x in SBElem::ALL {
            assert_eq!(Zero + x, x);
            assert_eq!(One * x, x);
        }
    }

    #[test]
    fn nu_projection() {
        assert_eq!(One.nu(), Ghost);
        assert_eq!(Zero.nu(), Zero);
        assert_eq!(One.nu().nu(), Ghost);
        assert!(One.nu_equiv(Ghost));
        assert!(!Zero.nu_equiv(One));
        for a in SBElem::ALL {
            assert!(a.nu_equiv(a));
        }
    }

    #[test]
    fn semiring_laws_exhaustive() {
        for a in SBElem::ALL {
            for b in SBElem::ALL {
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
                for c in SBElem::ALL {
                    assert_eq!((a + b) + c, a + (b + c));
                    assert_eq!((a * b) * c, a * (b * c));
                    assert_eq!(a * (b + c), a * b + a * c);
                }
            }
        }
    }

    #[test]
    fn ghost_idempotence() {
        for a in SBElem::ALL {
            assert_eq!(a + a, a.nu());
            assert_eq!(a + a + a, a.nu());
        }
        assert!(SBElem::ALL.iter().any(|&a| a + a != a));
    }

    #[test]
    fn tokens_round_trip() {
        for a in SBElem::ALL {
            assert_eq!(SBElem::from_token(a.token()), Some(a));
        }
        assert_eq!(SBElem::from_token("V"), None);
        assert_eq!(SBElem::from_token("2"), None);
    }

    #[test]
    fn boolean_differs_from_superboolean() {
        assert!(Boolean.add(&true, &true));
        assert_eq!(One + One, Ghost);
    }

    #[test]
    fn supertropicalized_boolean_is_superboolean() {
        let t = supertropicalize(Boolean);
        let image = sb_isomorphism(&t).unwrap().expect("isomorphism");
        assert_eq!(image[Zero as usize], SupertropicalElem::Zero);
        assert_eq!(image[One as usize], SupertropicalElem::Tangible(true));
        assert_eq!(image[Ghost as usize], SupertropicalElem::Ghost(true));
    }

    #[test]
    fn supertropical_tables_on_max_plus() {
        let t = supertropicalize(MaxPlus);
        let r = |n: i64| Some(Rational64::from_integer(n));
        let (a, b) = (t.tangible(r(2)), t.tangible(r(3)));
        assert_eq!(t.mul(&a, &b), t.tangible(r(5)));
        assert_eq!(t.add(&a, &t.ghost(r(2))), t.ghost(r(2)));
        assert_eq!(t.add(&a, &a), t.ghost(r(2)));
        assert_eq!(t.add(&a, &b), b);
        assert_eq!(t.mul(&a, &t.ghost(r(1))), t.ghost(r(3)));
        assert_eq!(t.mul(&a, &t.zero()), t.zero());
    }

    #[test]
    fn embedding_into_super_max_plus() {
        let t = supertropicalize(MaxPlus);
        let zero = Some(Rational64::from_integer(0));
        assert_eq!(embed_sb(&t, One), SupertropicalElem::Tangible(zero));
        assert_eq!(embed_sb(&t, Ghost), SupertropicalElem::Ghost(zero));
        assert_eq!(embed_sb(&t, Zero), SupertropicalElem::Zero);
        let images: Vec<_> = SBElem::ALL.iter().map(|&a| embed_sb(&t, a)).collect();
        for (i, x) in images.iter().enumerate() {
            for y in &images[i + 1..] {
                assert_ne!(x, y);
            }
        }
        for a in SBElem::ALL {
            for b in SBElem::ALL {
                let (pa, pb) = (embed_sb(&t, a), embed_sb(&t, b));
                assert_eq!(embed_sb(&t, a + b), t.add(&pa, &pb));
                assert_eq!(embed_sb(&t, a * b), t.mul(&pa, &pb));
            }
            assert_eq!(embed_sb(&t, a.nu()), t.nu(&embed_sb(&t, a)));
        }
        assert_eq!(embed_sb(&t, One + One), t.ghost(zero));
    }

    fn max_plus_elem() -> impl Strategy<Value = SupertropicalElem<Option<Rational64>>> {
        let t = supertropicalize(MaxPlus);
        (0u8..3, -4i64..5, 1i64..4).prop_map(move |(sort, num, den)| {
            let v = Some(Rational64::new(num, den));
            match sort {
                0 => t.zero(),
                1 => t.tangible(v),
                _ => t.ghost(v),
            }
        })
    }

    proptest! {
        #[test]
        fn super_max_plus_axioms(a in max_plus_elem(), b in max_plus_elem(), c in max_plus_elem()) {
            let t = supertropicalize(MaxPlus);
            let sum = t.add(&a, &b);
            if t.nu(&a) == t.nu(&b) {
                prop_assert_eq!(&sum, &t.nu(&a));
            } else {
                prop_assert!(sum == a || sum == b);
            }
            prop_assert_eq!(t.add(&a, &b), t.add(&b, &a));
            prop_assert_eq!(t.add(&t.add(&a, &b), &c), t.add(&a, &t.add(&b, &c)));
            prop_assert_eq!(t.mul(&t.mul(&a, &b), &c), t.mul(&a, &t.mul(&b, &c)));
            prop_assert_eq!(t.mul(&a, &t.add(&b, &c)), t.add(&t.mul(&a, &b), &t.mul(&a, &c)));
            prop_assert_eq!(t.nu(&t.nu(&a)), t.nu(&a));
        }
    }
}
