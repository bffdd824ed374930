//! Exact exterior algebra over ℝ³.
//!
//! Multivectors carry all four grades at once. Grade-2 coordinates are
//! always ordered (e₁₂, e₁₃, e₂₃) and the reference volume form is
//! ν = e₁∧e₂∧e₃.

use crate::rat::Rational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type OneForm = [Rational; 3];
pub type TwoForm = [Rational; 3];

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MultiVec {
    pub g0: Rational,
    /// Grade 1 in the basis (e₁, e₂, e₃).
    pub g1: [Rational; 3],
    /// Grade 2 in the basis (e₁₂, e₁₃, e₂₃).
    pub g2: [Rational; 3],
    /// Coefficient of ν = e₁∧e₂∧e₃.
    pub g3: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultiVecError {
    #[error("multivector has nonzero components below grade 3")]
    NotGrade3,
}

pub fn zero3() -> [Rational; 3] {
    [Rational::zero(), Rational::zero(), Rational::zero()]
}

/// Standard basis 1-form e₁, e₂ or e₃ (`i` is 0-based).
pub fn basis1(i: usize) -> OneForm {
    let mut v = zero3();
    v[i] = Rational::one();
    v
}

pub fn add3(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [&a[0] + &b[0], &a[1] + &b[1], &a[2] + &b[2]]
}

pub fn sub3(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

pub fn neg3(a: &[Rational; 3]) -> [Rational; 3] {
    [-&a[0], -&a[1], -&a[2]]
}

pub fn scale3(s: &Rational, a: &[Rational; 3]) -> [Rational; 3] {
    [s * &a[0], s * &a[1], s * &a[2]]
}

pub fn is_zero3(a: &[Rational; 3]) -> bool {
    a.iter().all(Rational::is_zero)
}

/// Wedge of two 1-forms, in the (e₁₂, e₁₃, e₂₃) ordering.
pub fn wedge11(a: &OneForm, b: &OneForm) -> TwoForm {
    [
        &a[0] * &b[1] - &a[1] * &b[0],
        &a[0] * &b[2] - &a[2] * &b[0],
        &a[1] * &b[2] - &a[2] * &b[1],
    ]
}

/// ν-coefficient of (1-form a) ∧ (2-form b); 1- and 2-forms commute, so the
/// same formula serves b ∧ a.
pub fn nu12(a: &OneForm, b: &TwoForm) -> Rational {
    &a[0] * &b[2] - &a[1] * &b[1] + &a[2] * &b[0]
}

impl MultiVec {
    pub fn zero() -> Self {
        MultiVec {
            g0: Rational::zero(),
            g1: zero3(),
            g2: zero3(),
            g3: Rational::zero(),
        }
    }

    pub fn scalar(s: Rational) -> Self {
        MultiVec {
            g0: s,
            ..MultiVec::zero()
        }
    }

    pub fn one_form(v: OneForm) -> Self {
        MultiVec {
            g1: v,
            ..MultiVec::zero()
        }
    }

    pub fn two_form(v: TwoForm) -> Self {
        MultiVec {
            g2: v,
            ..MultiVec::zero()
        }
    }

    pub fn volume(s: Rational) -> Self {
        MultiVec {
            g3: s,
            ..MultiVec::zero()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.g0.is_zero() && is_zero3(&self.g1) && is_zero3(&self.g2) && self.g3.is_zero()
    }

    pub fn is_one_form(&self) -> bool {
        self.g0.is_zero() && is_zero3(&self.g2) && self.g3.is_zero()
    }

    pub fn is_two_form(&self) -> bool {
        self.g0.is_zero() && is_zero3(&self.g1) && self.g3.is_zero()
    }
}

/// Wedge product of arbitrary multivectors. Grades beyond 3 vanish.
pub fn wedge(a: &MultiVec, b: &MultiVec) -> MultiVec {
    let g0 = &a.g0 * &b.g0;
    let g1 = add3(&scale3(&a.g0, &b.g1), &scale3(&b.g0, &a.g1));
    let g2 = add3(
        &add3(&scale3(&a.g0, &b.g2), &scale3(&b.g0, &a.g2)),
        &wedge11(&a.g1, &b.g1),
    );
    let g3 = &a.g0 * &b.g3 + &b.g0 * &a.g3 + nu12(&a.g1, &b.g2) + nu12(&b.g1, &a.g2);
    MultiVec { g0, g1, g2, g3 }
}

/// The ν-coefficient of a pure grade-3 multivector.
pub fn nu_coefficient(t: &MultiVec) -> Result<Rational, MultiVecError> {
    if !t.g0.is_zero() || !is_zero3(&t.g1) || !is_zero3(&t.g2) {
        return Err(MultiVecError::NotGrade3);
    }
    Ok(t.g3.clone())
}
