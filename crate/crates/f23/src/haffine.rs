//! Functions affine along every horizontal line. The family is
//! parametrized by (η₀, η₁, η₂, η₃) relative to the fixed volume form
//! ν = e₁∧e₂∧e₃:
//!
//!   φ(θ, ω)·ν = η₃·ν + η₂∧θ + η₁∧ω + η₀·θ∧ω
//!
//! Level sets are always taken at 0; a level constant is folded into η₃.

use crate::carnot::{
    hor_space, AffineSubspace, CarnotError, HLine, Point, Quotient,
};
use crate::linalg;
use crate::multivec::{
    add3, is_zero3, nu12, scale3, wedge11, zero3, OneForm, TwoForm,
};
use crate::rat::Rational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HAffine {
    pub eta0: Rational,
    /// 1-form coordinates (b₁, b₂, b₃).
    pub eta1: [Rational; 3],
    /// 2-form coordinates (a₁₂, a₁₃, a₂₃) in the (e₁₂, e₁₃, e₂₃) ordering.
    pub eta2: [Rational; 3],
    pub eta3: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HAffineError {
    #[error("point does not lie on the zero level set")]
    NotOnLevelSet,
    #[error("constant functions are excluded here")]
    ConstantInput,
    #[error("normalization needs η₀ ≠ 0")]
    Eta0Zero,
    #[error("kernel 2-forms are linearly dependent")]
    DependentKernel,
    #[error("kernel must be nonempty")]
    EmptyKernel,
}

/// The differential at a point, acting on tangent vectors (θ′, ω′) by
/// (η₂ + η₀ω)∧θ′ + (η₁ + η₀θ)∧ω′, read off via the ν-coefficient.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HorizontalDifferential {
    pub dtheta: TwoForm,
    pub domega: OneForm,
}

impl HorizontalDifferential {
    pub fn apply(&self, theta_p: &OneForm, omega_p: &TwoForm) -> Rational {
        nu12(theta_p, &self.dtheta) + nu12(&self.domega, omega_p)
    }
}

impl HAffine {
    pub fn zero() -> Self {
        HAffine {
            eta0: Rational::zero(),
            eta1: zero3(),
            eta2: zero3(),
            eta3: Rational::zero(),
        }
    }

    /// φ(θ,ω) = ν-coefficient of θ∧ω: the quadratic model function.
    pub fn theta_wedge_omega() -> Self {
        HAffine {
            eta0: Rational::one(),
            ..HAffine::zero()
        }
    }

    pub fn is_constant(&self) -> bool {
        self.eta0.is_zero() && is_zero3(&self.eta1) && is_zero3(&self.eta2)
    }

    pub fn is_affine(&self) -> bool {
        self.eta0.is_zero()
    }
}

/// φ(x) as an exact rational.
pub fn eval(phi: &HAffine, x: &Point) -> Rational {
    &phi.eta3
        + nu12(&x.theta, &phi.eta2)
        + nu12(&phi.eta1, &x.omega)
        + &phi.eta0 * nu12(&x.theta, &x.omega)
}

/// The 2-form η₂ + η₁∧θ + η₀ω whose pairing with a direction gives the
/// slope of φ along horizontal lines through (θ, ω).
pub fn slope_form(phi: &HAffine, x: &Point) -> TwoForm {
    add3(
        &add3(&phi.eta2, &wedge11(&phi.eta1, &x.theta)),
        &scale3(&phi.eta0, &x.omega),
    )
}

/// Exact coefficients (a, b) with φ(x·yᵗ) = a + b·t along the line.
pub fn restrict_to_line(phi: &HAffine, l: &HLine) -> (Rational, Rational) {
    let a = eval(phi, &l.base);
    let b = nu12(&l.dir, &slope_form(phi, &l.base));
    (a, b)
}

pub fn differential(phi: &HAffine, x: &Point) -> HorizontalDifferential {
    HorizontalDifferential {
        dtheta: add3(&phi.eta2, &scale3(&phi.eta0, &x.omega)),
        domega: add3(&phi.eta1, &scale3(&phi.eta0, &x.theta)),
    }
}

/// Is x a characteristic point of S = {φ = 0}, i.e. Hor_x ⊂ S?
pub fn is_characteristic(phi: &HAffine, x: &Point) -> Result<bool, HAffineError> {
    if !eval(phi, x).is_zero() {
        return Err(HAffineError::NotOnLevelSet);
    }
    Ok(is_zero3(&slope_form(phi, x)))
}

/// S ∩ Hor_x as an affine subspace: directions (τ, θx∧τ) with
/// (η₂+η₁∧θ+η₀ω)∧τ = 0. Dimension 2 at noncharacteristic points of S,
/// 3 at characteristic ones.
pub fn hor_levelset_subspace(phi: &HAffine, x: &Point) -> Result<AffineSubspace, HAffineError> {
    if !eval(phi, x).is_zero() {
        return Err(HAffineError::NotOnLevelSet);
    }
    let b = slope_form(phi, x);
    if is_zero3(&b) {
        return Ok(hor_space(x));
    }
    let basis = one_form_kernel(&b)
        .into_iter()
        .map(|tau| {
            let w = wedge11(&x.theta, &tau);
            Point::new(tau, w).to_vec6()
        })
        .collect();
    Ok(AffineSubspace::new(x.clone(), basis))
}

/// Kernel of the linear functional τ ↦ ν-coeff(b∧τ) for a 2-form b,
/// with a deterministic basis (pivot on the first usable coordinate).
pub fn one_form_kernel(b: &TwoForm) -> Vec<OneForm> {
    // ν-coeff(b∧τ) = b₂₃τ₁ − b₁₃τ₂ + b₁₂τ₃, so the functional's
    // coefficients on (τ₁,τ₂,τ₃) are:
    let coeffs = [b[2].clone(), -&b[1], b[0].clone()];
    let Some(pivot) = coeffs.iter().position(|c| !c.is_zero()) else {
        return (0..3).map(crate::multivec::basis1).collect();
    };
    let mut out = Vec::new();
    for j in 0..3 {
        if j == pivot {
            continue;
        }
        let mut v = crate::multivec::basis1(j);
        v[pivot] = -&(&coeffs[j] / &coeffs[pivot]);
        out.push(v);
    }
    out
}

/// If ψ = λφ componentwise, return λ. φ must be nonconstant.
pub fn proportional(phi: &HAffine, psi: &HAffine) -> Result<Option<Rational>, HAffineError> {
    if phi.is_constant() {
        return Err(HAffineError::ConstantInput);
    }
    let pc = [
        phi.eta0.clone(),
        phi.eta1[0].clone(),
        phi.eta1[1].clone(),
        phi.eta1[2].clone(),
        phi.eta2[0].clone(),
        phi.eta2[1].clone(),
        phi.eta2[2].clone(),
        phi.eta3.clone(),
    ];
    let qc = [
        psi.eta0.clone(),
        psi.eta1[0].clone(),
        psi.eta1[1].clone(),
        psi.eta1[2].clone(),
        psi.eta2[0].clone(),
        psi.eta2[1].clone(),
        psi.eta2[2].clone(),
        psi.eta3.clone(),
    ];
    let i = pc.iter().position(|c| !c.is_zero()).expect("nonconstant");
    let lambda = &qc[i] / &pc[i];
    for (p, q) in pc.iter().zip(qc.iter()) {
        if &(&lambda * p) != q {
            return Ok(None);
        }
    }
    Ok(Some(lambda))
}

/// The affine change of variables that turns φ into the model quadratic:
/// with T(θ,ω) = (η₀θ+η₁, ω+η₀⁻¹η₂) and q(θ,ω) = ν-coeff(θ∧ω),
/// φ(x) = q(T(x)) + κ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Normalization {
    pub scale: Rational,
    pub shift_theta: OneForm,
    pub shift_omega: TwoForm,
    pub kappa: Rational,
}

impl Normalization {
    pub fn apply(&self, x: &Point) -> Point {
        Point {
            theta: add3(&scale3(&self.scale, &x.theta), &self.shift_theta),
            omega: add3(&x.omega, &self.shift_omega),
        }
    }

    pub fn invert(&self, y: &Point) -> Point {
        let inv = self.scale.recip();
        Point {
            theta: scale3(&inv, &crate::multivec::sub3(&y.theta, &self.shift_theta)),
            omega: crate::multivec::sub3(&y.omega, &self.shift_omega),
        }
    }
}

pub fn normalize(phi: &HAffine) -> Result<Normalization, HAffineError> {
    if phi.eta0.is_zero() {
        return Err(HAffineError::Eta0Zero);
    }
    let inv = phi.eta0.recip();
    let shift_omega = scale3(&inv, &phi.eta2);
    let kappa = &phi.eta3 - &(&inv * nu12(&phi.eta1, &phi.eta2));
    Ok(Normalization {
        scale: phi.eta0.clone(),
        shift_theta: phi.eta1.clone(),
        shift_omega,
        kappa,
    })
}

/// The affine function induced on a quotient by a factoring φ:
/// ψ(θ, ω̄) = offset + Σ theta[i]·θᵢ + Σ omega[j]·ω̄ⱼ.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct QuotientFunction {
    pub theta: [Rational; 3],
    pub omega: Vec<Rational>,
    pub kept: Vec<usize>,
    pub offset: Rational,
}

impl QuotientFunction {
    pub fn eval(&self, p: &crate::carnot::QuotientPoint) -> Rational {
        assert_eq!(p.kept, self.kept, "point from a different quotient");
        let mut v = self.offset.clone();
        for (c, t) in self.theta.iter().zip(p.theta.iter()) {
            v += &(c * t);
        }
        for (c, w) in self.omega.iter().zip(p.omega.iter()) {
            v += &(c * w);
        }
        v
    }

    pub fn is_constant(&self) -> bool {
        is_zero3(&self.theta) && self.omega.iter().all(Rational::is_zero)
    }
}

/// Does φ descend to the quotient by the given kernel of 2-forms? It does
/// exactly when η₀ = 0 and ν-coeff(η₁∧ζ) = 0 for every kernel element ζ;
/// the induced function is then affine in the quotient coordinates.
pub fn factor_through(
    phi: &HAffine,
    kernel: &[TwoForm],
) -> Result<Option<QuotientFunction>, HAffineError> {
    if kernel.is_empty() {
        return Err(HAffineError::EmptyKernel);
    }
    let rows: Vec<Vec<Rational>> = kernel.iter().map(|k| k.to_vec()).collect();
    if linalg::rank(&rows) != kernel.len() {
        return Err(HAffineError::DependentKernel);
    }
    for zeta in kernel {
        if !nu12(&phi.eta1, zeta).is_zero() {
            return Ok(None);
        }
        if !is_zero3(&scale3(&phi.eta0, zeta)) {
            return Ok(None);
        }
    }
    let quotient = Quotient::new(kernel).map_err(|e| match e {
        CarnotError::DependentKernel => HAffineError::DependentKernel,
        _ => unreachable!(),
    })?;
    // ν-coeff(η₂∧θ) = a₂₃θ₁ − a₁₃θ₂ + a₁₂θ₃
    let theta = [phi.eta2[2].clone(), -&phi.eta2[1], phi.eta2[0].clone()];
    // ν-coeff(η₁∧ω) = b₃ω₁₂ − b₂ω₁₃ + b₁ω₂₃; restrict to kept coordinates.
    // This is well defined because the functional vanishes on the kernel
    // and the kept coordinates span a complement.
    let full = [phi.eta1[2].clone(), -&phi.eta1[1], phi.eta1[0].clone()];
    let omega = quotient.kept.iter().map(|&i| full[i].clone()).collect();
    Ok(Some(QuotientFunction {
        theta,
        omega,
        kept: quotient.kept.clone(),
        offset: phi.eta3.clone(),
    }))
}
