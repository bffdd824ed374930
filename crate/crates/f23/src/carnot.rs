//! The free step-2 rank-3 Carnot algebra as a group: points (θ, ω) with
//! the product x·y = x + y + [x, y], where the bracket of horizontal
//! vectors is the wedge θ∧τ. Horizontal lines, horizontal spaces,
//! Heisenberg subalgebras, and quotients by ideals of 2-forms.

use crate::linalg;
use crate::multivec::{
    add3, basis1, is_zero3, neg3, scale3, sub3, wedge11, OneForm, TwoForm,
};
use crate::rat::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Point {
    pub theta: [Rational; 3],
    /// 2-form coordinates in the (e₁₂, e₁₃, e₂₃) ordering.
    pub omega: [Rational; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CarnotError {
    #[error("the two points coincide; no unique line")]
    SamePoint,
    #[error("ξ∧τ = 0: the two 1-forms do not span a Heisenberg subalgebra")]
    Degenerate,
    #[error("kernel 2-forms are linearly dependent")]
    DependentKernel,
    #[error("a horizontal line needs a nonzero direction")]
    ZeroDirection,
}

impl Point {
    pub fn new(theta: [Rational; 3], omega: [Rational; 3]) -> Self {
        Point { theta, omega }
    }

    pub fn zero() -> Self {
        Point {
            theta: [Rational::zero(), Rational::zero(), Rational::zero()],
            omega: [Rational::zero(), Rational::zero(), Rational::zero()],
        }
    }

    pub fn is_zero(&self) -> bool {
        is_zero3(&self.theta) && is_zero3(&self.omega)
    }

    /// Vector-space addition (not the group law).
    pub fn add(&self, other: &Point) -> Point {
        Point {
            theta: add3(&self.theta, &other.theta),
            omega: add3(&self.omega, &other.omega),
        }
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point {
            theta: sub3(&self.theta, &other.theta),
            omega: sub3(&self.omega, &other.omega),
        }
    }

    pub fn scale(&self, s: &Rational) -> Point {
        Point {
            theta: scale3(s, &self.theta),
            omega: scale3(s, &self.omega),
        }
    }

    /// Group inverse; in step 2 this is plain negation.
    pub fn inverse(&self) -> Point {
        Point {
            theta: neg3(&self.theta),
            omega: neg3(&self.omega),
        }
    }

    pub fn to_vec6(&self) -> Vec<Rational> {
        let mut v = Vec::with_capacity(6);
        v.extend(self.theta.iter().cloned());
        v.extend(self.omega.iter().cloned());
        v
    }

    pub fn from_vec6(v: &[Rational]) -> Point {
        assert_eq!(v.len(), 6);
        Point {
            theta: [v[0].clone(), v[1].clone(), v[2].clone()],
            omega: [v[3].clone(), v[4].clone(), v[5].clone()],
        }
    }

    /// Largest absolute coordinate value.
    pub fn max_abs_coord(&self) -> Rational {
        self.theta
            .iter()
            .chain(self.omega.iter())
            .map(Rational::abs)
            .fold(Rational::zero(), Rational::max)
    }
}

/// The group law x·y = (θx+θy, ωx+ωy+θx∧θy).
pub fn mul(x: &Point, y: &Point) -> Point {
    Point {
        theta: add3(&x.theta, &y.theta),
        omega: add3(&add3(&x.omega, &y.omega), &wedge11(&x.theta, &y.theta)),
    }
}

/// Bring a nonzero rational vector to primitive integer form: clear
/// denominators, divide by the gcd, make the first nonzero entry positive.
pub fn primitive(dir: &[Rational; 3]) -> Option<[Rational; 3]> {
    if is_zero3(dir) {
        return None;
    }
    let lcm = dir
        .iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = dir
        .iter()
        .map(|r| r.numer() * (&lcm / r.denom()))
        .collect();
    let gcd = ints
        .iter()
        .fold(BigInt::zero(), |acc, n| acc.gcd(n));
    let mut out: Vec<BigInt> = ints.iter().map(|n| n / &gcd).collect();
    if out.iter().find(|n| !n.is_zero()).is_some_and(|n| n.is_negative()) {
        for n in &mut out {
            *n = -&*n;
        }
    }
    Some([
        Rational::from(out[0].clone()),
        Rational::from(out[1].clone()),
        Rational::from(out[2].clone()),
    ])
}

/// A horizontal line {x·yᵗ : t ∈ ℝ}. The direction is stored primitive
/// (integer coordinates, gcd 1, first nonzero coordinate positive), so the
/// parametrization is canonical up to the base point.
#[derive(Clone, Eq, Debug, Serialize, Deserialize)]
pub struct HLine {
    pub base: Point,
    pub dir: OneForm,
}

impl HLine {
    pub fn new(base: Point, dir: OneForm) -> Result<HLine, CarnotError> {
        let dir = primitive(&dir).ok_or(CarnotError::ZeroDirection)?;
        Ok(HLine { base, dir })
    }

    /// Does the point lie on this line?
    pub fn contains(&self, p: &Point) -> bool {
        let dth = sub3(&p.theta, &self.base.theta);
        let Some(i) = self.dir.iter().position(|d| !d.is_zero()) else {
            return false;
        };
        let t = &dth[i] / &self.dir[i];
        line_point(self, &t) == *p
    }

    /// A base-independent key: the primitive direction together with the
    /// unique point of the line whose θ-part is orthogonal to it.
    pub fn canonical_key(&self) -> (OneForm, Point) {
        let d = &self.dir;
        let dd: Rational = d.iter().map(|x| x * x).sum();
        let td: Rational = self
            .base
            .theta
            .iter()
            .zip(d.iter())
            .map(|(a, b)| a * b)
            .sum();
        let t = -&(&td / &dd);
        (d.clone(), line_point(self, &t))
    }
}

/// Two lines are equal iff they have the same point set.
impl PartialEq for HLine {
    fn eq(&self, other: &HLine) -> bool {
        self.dir == other.dir && self.contains(&other.base)
    }
}

/// The point x·yᵗ = x + t(y + [x, y]) on the line.
pub fn line_point(l: &HLine, t: &Rational) -> Point {
    Point {
        theta: add3(&l.base.theta, &scale3(t, &l.dir)),
        omega: add3(
            &l.base.omega,
            &scale3(t, &wedge11(&l.base.theta, &l.dir)),
        ),
    }
}

/// The unique horizontal line through two distinct points, if they are
/// horizontally aligned: ω_z − ω_x = θ_x ∧ (θ_z − θ_x) with θ_z ≠ θ_x.
pub fn line_through(x: &Point, z: &Point) -> Result<Option<HLine>, CarnotError> {
    if x == z {
        return Err(CarnotError::SamePoint);
    }
    let dth = sub3(&z.theta, &x.theta);
    if is_zero3(&dth) {
        return Ok(None);
    }
    if sub3(&z.omega, &x.omega) != wedge11(&x.theta, &dth) {
        return Ok(None);
    }
    Ok(Some(HLine::new(x.clone(), dth).expect("dth nonzero")))
}

/// An affine subspace of ℝ⁶ = Λ¹ ⊕ Λ², given by a base point and an
/// independent set of direction vectors.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AffineSubspace {
    pub base: Point,
    pub basis: Vec<Vec<Rational>>,
}

impl AffineSubspace {
    /// Panics if the directions are dependent; all in-crate constructions
    /// guarantee independence.
    pub fn new(base: Point, basis: Vec<Vec<Rational>>) -> Self {
        assert_eq!(linalg::rank(&basis), basis.len(), "dependent basis");
        AffineSubspace { base, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, p: &Point) -> bool {
        let diff = p.sub(&self.base).to_vec6();
        linalg::in_span(&self.basis, &diff)
    }
}

/// Hor_x = x·𝔤₁: base x, directions (eᵢ, θx∧eᵢ).
pub fn hor_space(x: &Point) -> AffineSubspace {
    let basis = (0..3)
        .map(|i| {
            let e = basis1(i);
            let w = wedge11(&x.theta, &e);
            Point::new(e, w).to_vec6()
        })
        .collect();
    AffineSubspace::new(x.clone(), basis)
}

/// The Heisenberg subalgebra Lie(ξ,τ) = span{ξ,τ} ⊕ span{ξ∧τ}.
pub fn lie_subalgebra(xi: &OneForm, tau: &OneForm) -> Result<AffineSubspace, CarnotError> {
    let w = wedge11(xi, tau);
    if is_zero3(&w) {
        return Err(CarnotError::Degenerate);
    }
    let basis = vec![
        Point::new(xi.clone(), crate::multivec::zero3()).to_vec6(),
        Point::new(tau.clone(), crate::multivec::zero3()).to_vec6(),
        Point::new(crate::multivec::zero3(), w).to_vec6(),
    ];
    Ok(AffineSubspace::new(Point::zero(), basis))
}

/// A quotient of the algebra by an ideal of 2-forms, with concrete
/// coordinates on a complement of the kernel: the 2-form coordinates whose
/// indices are not pivot columns of the kernel's row echelon form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quotient {
    kernel_rref: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
    /// Indices (into the (e₁₂,e₁₃,e₂₃) ordering) kept as quotient coordinates.
    pub kept: Vec<usize>,
}

/// A point of a quotient algebra: full θ, and the surviving ω coordinates.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct QuotientPoint {
    pub theta: [Rational; 3],
    pub omega: Vec<Rational>,
    pub kept: Vec<usize>,
}

impl Quotient {
    pub fn new(kernel: &[TwoForm]) -> Result<Quotient, CarnotError> {
        let rows: Vec<Vec<Rational>> = kernel.iter().map(|k| k.to_vec()).collect();
        let (kernel_rref, pivots) = linalg::rref(&rows);
        if kernel_rref.len() != kernel.len() {
            return Err(CarnotError::DependentKernel);
        }
        let kept = (0..3).filter(|i| !pivots.contains(i)).collect();
        Ok(Quotient {
            kernel_rref,
            pivots,
            kept,
        })
    }

    pub fn dim_omega(&self) -> usize {
        self.kept.len()
    }

    /// Reduce a 2-form modulo the kernel span; the result is supported on
    /// the kept coordinates and is returned in their order.
    pub fn reduce(&self, omega: &TwoForm) -> Vec<Rational> {
        let mut v: Vec<Rational> = omega.to_vec();
        for (row, &p) in self.kernel_rref.iter().zip(self.pivots.iter()) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for c in 0..3 {
                    let nv = &v[c] - &(&f * &row[c]);
                    v[c] = nv;
                }
            }
        }
        self.kept.iter().map(|&i| v[i].clone()).collect()
    }

    /// Lift quotient ω coordinates back to the complement in Λ²ℝ³.
    pub fn lift(&self, omega: &[Rational]) -> TwoForm {
        let mut full = crate::multivec::zero3();
        for (&i, w) in self.kept.iter().zip(omega.iter()) {
            full[i] = w.clone();
        }
        full
    }

    pub fn project(&self, x: &Point) -> QuotientPoint {
        QuotientPoint {
            theta: x.theta.clone(),
            omega: self.reduce(&x.omega),
            kept: self.kept.clone(),
        }
    }

    /// Group law in the quotient.
    pub fn mul(&self, a: &QuotientPoint, b: &QuotientPoint) -> QuotientPoint {
        let wa = self.lift(&a.omega);
        let wb = self.lift(&b.omega);
        let w = add3(&add3(&wa, &wb), &wedge11(&a.theta, &b.theta));
        QuotientPoint {
            theta: add3(&a.theta, &b.theta),
            omega: self.reduce(&w),
            kept: self.kept.clone(),
        }
    }
}

/// One-shot projection of a point modulo a kernel of 2-forms.
pub fn quotient_project(x: &Point, kernel: &[TwoForm]) -> Result<QuotientPoint, CarnotError> {
    Ok(Quotient::new(kernel)?.project(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multivec::zero3;

    fn r(n: i64) -> Rational {
        Rational::int(n)
    }

    fn pt(th: [i64; 3], om: [i64; 3]) -> Point {
        Point::new(th.map(Rational::int), om.map(Rational::int))
    }

    #[test]
    fn group_law() {
        // (e₁,0)·(e₂,0) = (e₁+e₂, e₁₂)
        let x = pt([1, 0, 0], [0, 0, 0]);
        let y = pt([0, 1, 0], [0, 0, 0]);
        assert_eq!(mul(&x, &y), pt([1, 1, 0], [1, 0, 0]));
        // identity and inverse
        let z = pt([3, -2, 5], [1, 4, -7]);
        assert_eq!(mul(&z, &Point::zero()), z);
        assert!(mul(&z, &z.inverse()).is_zero());
    }

    #[test]
    fn line_points() {
        let l = HLine::new(pt([1, 0, 0], [0, 0, 0]), basis1(1)).unwrap();
        assert_eq!(line_point(&l, &r(0)), l.base);
        assert_eq!(line_point(&l, &r(1)), pt([1, 1, 0], [1, 0, 0]));
        assert_eq!(line_point(&l, &r(2)), pt([1, 2, 0], [2, 0, 0]));
    }

    #[test]
    fn line_through_cases() {
        let x = pt([1, 0, 0], [0, 0, 0]);
        let z = pt([1, 1, 0], [1, 0, 0]);
        let l = line_through(&x, &z).unwrap().unwrap();
        assert_eq!(l.base, x);
        assert_eq!(l.dir, basis1(1));
        // vertical displacement
        assert_eq!(
            line_through(&Point::zero(), &pt([0, 0, 0], [1, 0, 0])).unwrap(),
            None
        );
        // misaligned 2-form part
        assert_eq!(
            line_through(&Point::zero(), &pt([1, 0, 0], [0, 0, 1])).unwrap(),
            None
        );
        assert_eq!(line_through(&x, &x), Err(CarnotError::SamePoint));
    }

    #[test]
    fn line_equality_is_point_set_equality() {
        let l1 = HLine::new(pt([1, 0, 0], [0, 0, 0]), basis1(1)).unwrap();
        // same line, different base and antipodal direction
        let base2 = line_point(&l1, &r(5));
        let l2 = HLine::new(base2, [r(0), r(-3), r(0)]).unwrap();
        assert_eq!(l1, l2);
        let l3 = HLine::new(pt([0, 0, 0], [0, 0, 0]), basis1(1)).unwrap();
        assert_ne!(l1, l3);
        assert_eq!(l1.canonical_key(), l2.canonical_key());
    }

    #[test]
    fn primitive_normalization() {
        let d = [Rational::ratio(-2, 3), Rational::ratio(4, 3), r(0)];
        assert_eq!(primitive(&d).unwrap(), [r(1), r(-2), r(0)]);
        assert_eq!(primitive(&zero3()), None);
        // idempotent
        let p = primitive(&d).unwrap();
        assert_eq!(primitive(&p).unwrap(), p);
    }

    #[test]
    fn hor_space_basis() {
        let h = hor_space(&pt([1, 0, 0], [0, 0, 0]));
        assert_eq!(h.dim(), 3);
        // contains x·(e₂,0) = (e₁+e₂, e₁₂)
        assert!(h.contains(&pt([1, 1, 0], [1, 0, 0])));
        assert!(!h.contains(&pt([1, 0, 0], [0, 0, 1])));
        let h0 = hor_space(&Point::zero());
        assert!(h0.contains(&pt([2, 3, -1], [0, 0, 0])));
    }

    #[test]
    fn heisenberg_subalgebra() {
        let s = lie_subalgebra(&basis1(0), &basis1(1)).unwrap();
        assert_eq!(s.dim(), 3);
        assert!(s.contains(&pt([1, 1, 0], [5, 0, 0])));
        assert!(!s.contains(&pt([0, 0, 1], [0, 0, 0])));
        assert_eq!(
            lie_subalgebra(&basis1(0), &basis1(0)),
            Err(CarnotError::Degenerate)
        );
        // (e₁+e₂) ∧ e₃ = e₁₃ + e₂₃
        let s = lie_subalgebra(&[r(1), r(1), r(0)], &basis1(2)).unwrap();
        assert!(s.contains(&pt([0, 0, 0], [0, 1, 1])));
    }

    #[test]
    fn quotient_projection() {
        let e12 = [r(1), r(0), r(0)];
        let q = Quotient::new(std::slice::from_ref(&e12)).unwrap();
        let x = pt([1, 0, 0], [1, 0, 1]);
        let p = q.project(&x);
        assert_eq!(p.theta, [r(1), r(0), r(0)]);
        assert_eq!(p.omega, vec![r(0), r(1)]);
        assert_eq!(p.kept, vec![1, 2]);
        // empty kernel: identity
        let q0 = Quotient::new(&[]).unwrap();
        assert_eq!(q0.project(&x).omega, x.omega.to_vec());
        // full kernel: abelian quotient
        let qa = Quotient::new(&[
            [r(1), r(0), r(0)],
            [r(0), r(1), r(0)],
            [r(0), r(0), r(1)],
        ])
        .unwrap();
        assert!(qa.project(&x).omega.is_empty());
        // dependent kernel
        assert_eq!(
            Quotient::new(&[e12.clone(), [r(2), r(0), r(0)]]),
            Err(CarnotError::DependentKernel)
        );
    }

    #[test]
    fn quotient_is_homomorphism() {
        let q = Quotient::new(&[[r(1), r(2), r(0)]]).unwrap();
        let x = pt([1, 2, 3], [0, 1, 0]);
        let y = pt([-2, 0, 5], [4, 0, 1]);
        assert_eq!(
            q.project(&mul(&x, &y)),
            q.mul(&q.project(&x), &q.project(&y))
        );
    }
}
