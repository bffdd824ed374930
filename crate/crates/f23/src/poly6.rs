//! Polynomials in the six coordinates (τ₁, τ₂, τ₃, ζ₁₂, ζ₁₃, ζ₂₃) of the
//! algebra, with exact rational coefficients. Used as sublevel-set
//! payloads; the key operation is exact symbolic restriction along an
//! affine curve (in particular a horizontal line).

use crate::carnot::{HLine, Point};
use crate::haffine::HAffine;
use crate::multivec::wedge11;
use crate::poly::Poly;
use crate::rat::Rational;
use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Term {
    /// Exponents of (τ₁, τ₂, τ₃, ζ₁₂, ζ₁₃, ζ₂₃).
    pub exps: [u8; 6],
    pub coeff: Rational,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Poly6 {
    terms: Vec<Term>,
}

impl Poly6 {
    /// Build from raw terms, merging duplicates and dropping zeros.
    pub fn new(terms: Vec<Term>) -> Poly6 {
        let mut terms = terms;
        terms.sort_by_key(|t| t.exps);
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.last_mut() {
                Some(last) if last.exps == t.exps => last.coeff += t.coeff,
                _ => merged.push(t),
            }
        }
        merged.retain(|t| !t.coeff.is_zero());
        Poly6 { terms: merged }
    }

    pub fn constant(c: Rational) -> Poly6 {
        Poly6::new(vec![Term {
            exps: [0; 6],
            coeff: c,
        }])
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn degree(&self) -> usize {
        self.terms
            .iter()
            .map(|t| t.exps.iter().map(|&e| e as usize).sum())
            .max()
            .unwrap_or(0)
    }

    /// |θ|² + |ω|² − r²: the Euclidean ball payload used in tests.
    pub fn ball(radius: &Rational) -> Poly6 {
        let mut terms = vec![Term {
            exps: [0; 6],
            coeff: -&(radius * radius),
        }];
        for i in 0..6 {
            let mut exps = [0u8; 6];
            exps[i] = 2;
            terms.push(Term {
                exps,
                coeff: Rational::one(),
            });
        }
        Poly6::new(terms)
    }

    /// The h-affine family embeds as degree-≤2 polynomials.
    pub fn from_haffine(phi: &HAffine) -> Poly6 {
        let mut terms = vec![Term {
            exps: [0; 6],
            coeff: phi.eta3.clone(),
        }];
        // ν-coeff(η₂∧θ) = a₂₃τ₁ − a₁₃τ₂ + a₁₂τ₃
        let theta_coeffs = [phi.eta2[2].clone(), -&phi.eta2[1], phi.eta2[0].clone()];
        for (i, c) in theta_coeffs.into_iter().enumerate() {
            let mut exps = [0u8; 6];
            exps[i] = 1;
            terms.push(Term { exps, coeff: c });
        }
        // ν-coeff(η₁∧ω) = b₃ζ₁₂ − b₂ζ₁₃ + b₁ζ₂₃
        let omega_coeffs = [phi.eta1[2].clone(), -&phi.eta1[1], phi.eta1[0].clone()];
        for (i, c) in omega_coeffs.into_iter().enumerate() {
            let mut exps = [0u8; 6];
            exps[3 + i] = 1;
            terms.push(Term { exps, coeff: c });
        }
        // η₀·ν-coeff(θ∧ω) = η₀(τ₁ζ₂₃ − τ₂ζ₁₃ + τ₃ζ₁₂)
        for (ti, zi, sign) in [(0, 5, 1), (1, 4, -1), (2, 3, 1)] {
            let mut exps = [0u8; 6];
            exps[ti] = 1;
            exps[zi] = 1;
            terms.push(Term {
                exps,
                coeff: &phi.eta0 * &Rational::int(sign),
            });
        }
        Poly6::new(terms)
    }

    pub fn eval(&self, x: &Point) -> Rational {
        let coords = x.to_vec6();
        let mut acc = Rational::zero();
        for t in &self.terms {
            let mut v = t.coeff.clone();
            for (c, &e) in coords.iter().zip(t.exps.iter()) {
                for _ in 0..e {
                    v *= c;
                }
            }
            acc += v;
        }
        acc
    }

    /// Substitute coordinateᵢ := baseᵢ + t·dirᵢ and expand to a univariate
    /// polynomial in t, exactly.
    pub fn compose_affine(&self, base: &[Rational], dir: &[Rational]) -> Poly {
        assert_eq!(base.len(), 6);
        assert_eq!(dir.len(), 6);
        let mut acc = Poly::zero();
        for t in &self.terms {
            let mut term = Poly::constant(t.coeff.clone());
            for i in 0..6 {
                let lin = Poly::new(vec![base[i].clone(), dir[i].clone()]);
                for _ in 0..t.exps[i] {
                    term = term.mul(&lin);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Restriction along a horizontal line: the line's coordinates are
    /// affine in t with constant part the base and linear part
    /// (dir, θ_base∧dir).
    pub fn restrict_to_hline(&self, l: &HLine) -> Poly {
        let base = l.base.to_vec6();
        let lin = Point::new(l.dir.clone(), wedge11(&l.base.theta, &l.dir)).to_vec6();
        self.compose_affine(&base, &lin)
    }

    /// Restriction along the straight segment (1−s)x + s·y, s ∈ [0,1].
    pub fn restrict_to_segment(&self, x: &Point, y: &Point) -> Poly {
        let base = x.to_vec6();
        let lin = y.sub(x).to_vec6();
        self.compose_affine(&base, &lin)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carnot::line_point;
    use crate::haffine::eval as heval;
    use crate::multivec::basis1;

    fn r(n: i64) -> Rational {
        Rational::int(n)
    }

    #[test]
    fn haffine_embedding_agrees() {
        let phi = HAffine {
            eta0: r(2),
            eta1: [r(1), r(-3), r(0)],
            eta2: [r(4), r(0), r(-1)],
            eta3: r(7),
        };
        let p = Poly6::from_haffine(&phi);
        assert_eq!(p.degree(), 2);
        for x in [
            Point::zero(),
            Point::new([r(1), r(2), r(3)], [r(4), r(5), r(6)]),
            Point::new([r(-2), r(0), r(1)], [r(0), r(3), r(-5)]),
        ] {
            assert_eq!(p.eval(&x), heval(&phi, &x));
        }
    }

    #[test]
    fn ball_restriction_along_axis() {
        let ball = Poly6::ball(&r(1));
        let l = HLine::new(Point::zero(), basis1(0)).unwrap();
        let p = ball.restrict_to_hline(&l);
        assert_eq!(p, Poly::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn restriction_matches_pointwise_eval() {
        let phi = HAffine {
            eta0: r(1),
            eta1: [r(0), r(1), r(0)],
            eta2: [r(2), r(0), r(0)],
            eta3: r(-1),
        };
        let payload = Poly6::from_haffine(&phi);
        let l = HLine::new(
            Point::new([r(1), r(0), r(2)], [r(0), r(1), r(1)]),
            [r(1), r(1), r(0)],
        )
        .unwrap();
        let p = payload.restrict_to_hline(&l);
        for t in [r(-2), r(0), r(1), r(5)] {
            assert_eq!(p.eval(&t), payload.eval(&line_point(&l, &t)));
        }
        // h-affine restrictions along horizontal lines are degree ≤ 1
        assert!(p.degree().unwrap_or(0) <= 1);
    }

    #[test]
    fn segment_restriction() {
        let q = Poly6::from_haffine(&HAffine::theta_wedge_omega());
        let x = Point::new([r(1), r(0), r(0)], [r(1), r(0), r(0)]);
        let y = Point::new([r(0), r(1), r(0)], [r(0), r(0), r(1)]);
        let p = q.restrict_to_segment(&x, &y);
        assert_eq!(p.eval(&Rational::zero()), q.eval(&x));
        assert_eq!(p.eval(&Rational::one()), q.eval(&y));
        assert_eq!(p.eval(&Rational::ratio(1, 2)), Rational::ratio(1, 4));
    }
}
