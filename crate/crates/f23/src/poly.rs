//! Univariate polynomials over the rationals: arithmetic, Sturm chains,
//! and exact real root isolation. Rational roots are reported exactly;
//! irrational roots as open isolating intervals with rational endpoints,
//! certified by a Sturm count of 1.

use crate::rat::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Poly {
    /// coeffs[i] is the coefficient of tⁱ; no trailing zeros.
    coeffs: Vec<Rational>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "-")]
    Neg,
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "+")]
    Pos,
}

impl Sign {
    pub fn of(r: &Rational) -> Sign {
        match r.signum() {
            -1 => Sign::Neg,
            0 => Sign::Zero,
            _ => Sign::Pos,
        }
    }
}

/// A real root of a polynomial: either an exact rational, or an open
/// interval (lo, hi) containing exactly one (irrational) root, with
/// nonroot endpoints.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum RootLoc {
    Exact(Rational),
    Isolated { lo: Rational, hi: Rational },
}

impl RootLoc {
    pub fn lo(&self) -> &Rational {
        match self {
            RootLoc::Exact(r) => r,
            RootLoc::Isolated { lo, .. } => lo,
        }
    }

    pub fn hi(&self) -> &Rational {
        match self {
            RootLoc::Exact(r) => r,
            RootLoc::Isolated { hi, .. } => hi,
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            RootLoc::Exact(r) => Some(r),
            RootLoc::Isolated { .. } => None,
        }
    }
}

/// Roots and signs of a polynomial over the whole line. `signs` has
/// length 2·|roots|+1 and alternates open-interval signs with the zero at
/// each root; `samples` holds one rational point inside each open
/// interval (|roots|+1 entries).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyAnalysis {
    pub roots: Vec<RootLoc>,
    pub signs: Vec<Sign>,
    pub samples: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Poly {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: Rational) -> Poly {
        Poly::new(vec![c])
    }

    pub fn from_ints(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| Rational::int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Poly::new(out)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| Rational::int(i as i64 + 1) * c)
                .collect(),
        )
    }

    /// Euclidean division: self = q·d + r with deg r < deg d.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let lead = d.leading().unwrap();
        let mut rem = self.clone();
        let mut q = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let f = rem.leading().unwrap() / lead;
            let shift = rd - dd;
            q[shift] = f.clone();
            let mut sub = vec![Rational::zero(); shift];
            sub.extend(d.coeffs.iter().map(|c| c * &f));
            rem = rem.sub(&Poly::new(sub));
        }
        (Poly::new(q), rem)
    }

    fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// The squarefree part self / gcd(self, self′), monic.
    pub fn squarefree(&self) -> Poly {
        if self.degree().unwrap_or(0) <= 1 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.monic();
        }
        let (q, r) = self.divrem(&g);
        debug_assert!(r.is_zero());
        q.monic()
    }

    /// A bound M with all real roots in (−M, M).
    pub fn root_bound(&self) -> Rational {
        let lead = self.leading().expect("nonzero polynomial").abs();
        let m = self
            .coeffs
            .iter()
            .map(|c| c.abs() / lead.clone())
            .fold(Rational::zero(), Rational::max);
        Rational::one() + m
    }
}

/// Sturm chain of a polynomial.
pub fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), p.derivative()];
    while !chain.last().unwrap().is_zero() {
        let n = chain.len();
        let (_, r) = chain[n - 2].divrem(&chain[n - 1]);
        chain.push(r.neg());
    }
    chain.pop();
    chain
}

fn sign_variations(chain: &[Poly], t: &Rational) -> usize {
    let mut count = 0;
    let mut last: Option<bool> = None; // sign as is_negative
    for p in chain {
        let v = p.eval(t);
        if v.is_zero() {
            continue;
        }
        let neg = v.is_negative();
        if let Some(l) = last {
            if l != neg {
                count += 1;
            }
        }
        last = Some(neg);
    }
    count
}

/// Number of distinct real roots in the open interval (a, b). Requires
/// nonroot endpoints (checked).
pub fn count_roots_open(chain: &[Poly], p: &Poly, a: &Rational, b: &Rational) -> usize {
    assert!(a < b, "empty interval");
    assert!(
        !p.eval(a).is_zero() && !p.eval(b).is_zero(),
        "endpoints must not be roots"
    );
    sign_variations(chain, a) - sign_variations(chain, b)
}

/// Divisors of |n| (positive), or None when |n| is too large to factor
/// cheaply. Used only to find rational roots exactly.
fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    if n.is_zero() {
        return None;
    }
    if n > BigInt::from(1_000_000_000_000i64) {
        return None;
    }
    let mut divs = vec![];
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            divs.push(d.clone());
            divs.push(&n / &d);
        }
        d += 1;
    }
    Some(divs)
}

/// Exact rational roots of a squarefree polynomial with the zero root and
/// degree ≤ 2 solved directly, the rest via the rational root theorem.
/// Returns (rational roots, deflated polynomial with those roots removed).
/// The deflated polynomial may still have rational roots only if the
/// divisor search was abandoned for size reasons.
fn rational_roots(sf: &Poly) -> (Vec<Rational>, Poly) {
    let mut roots = Vec::new();
    let mut g = sf.clone();
    // root at 0
    if !g.is_zero() && g.coeffs[0].is_zero() {
        roots.push(Rational::zero());
        g = Poly::new(g.coeffs[1..].to_vec());
    }
    match g.degree() {
        None | Some(0) => return (roots, Poly::constant(Rational::one())),
        Some(1) => {
            roots.push(-&(&g.coeffs[0] / &g.coeffs[1]));
            return (roots, Poly::constant(Rational::one()));
        }
        Some(2) => {
            let (c, b, a) = (&g.coeffs[0], &g.coeffs[1], &g.coeffs[2]);
            let disc = b * b - Rational::int(4) * &(a * c);
            if disc.is_negative() {
                return (roots, Poly::constant(Rational::one()));
            }
            if let Some(s) = rational_sqrt(&disc) {
                let two_a = Rational::int(2) * a;
                roots.push(&(-b + &s) / &two_a);
                roots.push(&(-b - &s) / &two_a);
                roots.sort();
                return (roots, Poly::constant(Rational::one()));
            }
            return (roots, g);
        }
        _ => {}
    }
    // Rational root theorem on the primitive integer form of g.
    let lcm = g
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = g
        .coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let (Some(ps), Some(qs)) = (
        small_divisors(&ints[0]),
        small_divisors(ints.last().unwrap()),
    ) else {
        return (roots, g);
    };
    let mut candidates: Vec<Rational> = Vec::new();
    for p in &ps {
        for q in &qs {
            let c = Rational::new(p.clone(), q.clone());
            candidates.push(c.clone());
            candidates.push(-c);
        }
    }
    candidates.sort();
    candidates.dedup();
    for c in candidates {
        if g.degree().unwrap_or(0) < 1 {
            break;
        }
        if g.eval(&c).is_zero() {
            roots.push(c.clone());
            let lin = Poly::new(vec![-&c, Rational::one()]);
            let (q, r) = g.divrem(&lin);
            debug_assert!(r.is_zero());
            g = q;
        }
    }
    roots.sort();
    (roots, g)
}

/// Is r the square of a rational? (numerator and denominator both perfect
/// squares)
fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let sn = r.numer().sqrt();
    let sd = r.denom().sqrt();
    if &(&sn * &sn) == r.numer() && &(&sd * &sd) == r.denom() {
        Some(Rational::new(sn, sd))
    } else {
        None
    }
}

/// Isolate all real roots of `p` and compute its sign over every maximal
/// interval between them.
pub fn analyze(p: &Poly) -> PolyAnalysis {
    if p.is_zero() {
        return PolyAnalysis {
            roots: vec![],
            signs: vec![Sign::Zero],
            samples: vec![Rational::zero()],
        };
    }
    if p.degree() == Some(0) {
        return PolyAnalysis {
            roots: vec![],
            signs: vec![Sign::of(&p.coeffs[0])],
            samples: vec![Rational::zero()],
        };
    }
    let sf = p.squarefree();
    let (mut exact, mut g) = rational_roots(&sf);
    let mut intervals: Vec<(Rational, Rational)> = Vec::new();
    // Isolate roots of the deflated factor g by Sturm bisection. If a
    // bisection midpoint turns out to be a rational root the divisor
    // search missed, deflate it out and start over.
    'isolate: while g.degree().unwrap_or(0) >= 1 {
        intervals.clear();
        let chain = sturm_chain(&g);
        let m = g.root_bound();
        let mut stack = vec![(-&m, m)];
        while let Some((lo, hi)) = stack.pop() {
            let n = count_roots_open(&chain, &g, &lo, &hi);
            if n == 0 {
                continue;
            }
            if n == 1 {
                intervals.push((lo, hi));
                continue;
            }
            let mid = (&lo + &hi) * Rational::ratio(1, 2);
            if g.eval(&mid).is_zero() {
                exact.push(mid.clone());
                let lin = Poly::new(vec![-&mid, Rational::one()]);
                g = g.divrem(&lin).0;
                continue 'isolate;
            }
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
        // Shrink each interval until it excludes every exact rational root.
        // (The roots inside the intervals are roots of g; the exact ones
        // were deflated out, so shrinking terminates.)
        for iv in &mut intervals {
            while exact.iter().any(|r| &iv.0 <= r && r <= &iv.1) {
                bisect_keep_root(&chain, &g, iv);
            }
        }
        intervals.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
        break;
    }
    exact.sort();
    exact.dedup();
    let mut roots: Vec<RootLoc> = exact.into_iter().map(RootLoc::Exact).collect();
    roots.extend(
        intervals
            .into_iter()
            .map(|(lo, hi)| RootLoc::Isolated { lo, hi }),
    );
    roots.sort_by(|a, b| a.lo().cmp(b.lo()).then(a.hi().cmp(b.hi())));

    // Sample one point in each maximal open interval between roots.
    let mut samples = Vec::with_capacity(roots.len() + 1);
    if roots.is_empty() {
        samples.push(Rational::zero());
    } else {
        samples.push(roots[0].lo() - &Rational::one());
        for w in roots.windows(2) {
            let (a, b) = (w[0].hi(), w[1].lo());
            debug_assert!(a <= b);
            if a == b {
                samples.push(a.clone());
            } else {
                samples.push((a + b) * Rational::ratio(1, 2));
            }
        }
        samples.push(roots.last().unwrap().hi() + &Rational::one());
    }
    let mut signs = Vec::with_capacity(2 * roots.len() + 1);
    for (i, s) in samples.iter().enumerate() {
        let v = p.eval(s);
        debug_assert!(!v.is_zero(), "sample point landed on a root");
        signs.push(Sign::of(&v));
        if i < roots.len() {
            signs.push(Sign::Zero);
        }
    }
    PolyAnalysis {
        roots,
        signs,
        samples,
    }
}

/// Replace (lo, hi), known to contain exactly one root of g, by its half
/// that still contains the root. If the midpoint happens to be the root,
/// nudge around it (cannot happen for the irrational roots this is used
/// on, but stay defensive).
fn bisect_keep_root(chain: &[Poly], g: &Poly, iv: &mut (Rational, Rational)) {
    let mid = (&iv.0 + &iv.1) * Rational::ratio(1, 2);
    assert!(
        !g.eval(&mid).is_zero(),
        "isolating interval midpoint is a rational root"
    );
    if count_roots_open(chain, g, &iv.0, &mid) == 1 {
        iv.1 = mid;
    } else {
        iv.0 = mid;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::int(n)
    }

    #[test]
    fn arithmetic_and_division() {
        let p = Poly::from_ints(&[-1, 0, 1]); // t² − 1
        let d = Poly::from_ints(&[-1, 1]); // t − 1
        let (q, rem) = p.divrem(&d);
        assert_eq!(q, Poly::from_ints(&[1, 1]));
        assert!(rem.is_zero());
        assert_eq!(p.eval(&r(3)), r(8));
        assert_eq!(p.derivative(), Poly::from_ints(&[0, 2]));
    }

    #[test]
    fn gcd_and_squarefree() {
        // (t−1)²(t+2)
        let p = Poly::from_ints(&[-1, 1])
            .mul(&Poly::from_ints(&[-1, 1]))
            .mul(&Poly::from_ints(&[2, 1]));
        let sf = p.squarefree();
        assert_eq!(sf.degree(), Some(2));
        assert!(sf.eval(&r(1)).is_zero());
        assert!(sf.eval(&r(-2)).is_zero());
    }

    #[test]
    fn sturm_count() {
        let p = Poly::from_ints(&[-2, 0, 1]); // t² − 2
        let chain = sturm_chain(&p);
        assert_eq!(count_roots_open(&chain, &p, &r(-3), &r(3)), 2);
        assert_eq!(count_roots_open(&chain, &p, &r(0), &r(3)), 1);
        assert_eq!(count_roots_open(&chain, &p, &r(2), &r(3)), 0);
    }

    #[test]
    fn analyze_linear() {
        let a = analyze(&Poly::from_ints(&[0, 1])); // t
        assert_eq!(a.roots, vec![RootLoc::Exact(r(0))]);
        assert_eq!(a.signs, vec![Sign::Neg, Sign::Zero, Sign::Pos]);
    }

    #[test]
    fn analyze_quadratic_rational_roots() {
        let a = analyze(&Poly::from_ints(&[-1, 0, 1])); // t² − 1
        assert_eq!(
            a.roots,
            vec![RootLoc::Exact(r(-1)), RootLoc::Exact(r(1))]
        );
        assert_eq!(
            a.signs,
            vec![Sign::Pos, Sign::Zero, Sign::Neg, Sign::Zero, Sign::Pos]
        );
    }

    #[test]
    fn analyze_irrational_roots() {
        let a = analyze(&Poly::from_ints(&[-2, 0, 1])); // t² − 2
        assert_eq!(a.roots.len(), 2);
        for root in &a.roots {
            let RootLoc::Isolated { lo, hi } = root else {
                panic!("√2 is not rational");
            };
            assert!(lo < hi);
        }
        assert_eq!(
            a.signs,
            vec![Sign::Pos, Sign::Zero, Sign::Neg, Sign::Zero, Sign::Pos]
        );
    }

    #[test]
    fn analyze_mixed_roots_quartic() {
        // (t−1)(t+3)(t²−3): rational ±, irrational ±√3
        let p = Poly::from_ints(&[-1, 1])
            .mul(&Poly::from_ints(&[3, 1]))
            .mul(&Poly::from_ints(&[-3, 0, 1]));
        let a = analyze(&p);
        assert_eq!(a.roots.len(), 4);
        let exact: Vec<_> = a.roots.iter().filter_map(RootLoc::exact).collect();
        assert_eq!(exact, vec![&r(-3), &r(1)]);
        // order: −3 < −√3 < 1 < √3
        assert!(a.roots[0].exact().is_some());
        assert!(a.roots[1].exact().is_none());
        assert!(a.roots[2].exact().is_some());
        assert!(a.roots[3].exact().is_none());
        // signs at the samples must match direct evaluation
        for (i, s) in a.samples.iter().enumerate() {
            assert_eq!(Sign::of(&p.eval(s)), a.signs[2 * i]);
        }
    }

    #[test]
    fn analyze_double_root_keeps_original_signs() {
        // (t−1)²: root at 1, no sign change
        let p = Poly::from_ints(&[-1, 1]).mul(&Poly::from_ints(&[-1, 1]));
        let a = analyze(&p);
        assert_eq!(a.roots, vec![RootLoc::Exact(r(1))]);
        assert_eq!(a.signs, vec![Sign::Pos, Sign::Zero, Sign::Pos]);
    }

    #[test]
    fn analyze_zero_and_constant() {
        let a = analyze(&Poly::zero());
        assert!(a.roots.is_empty());
        assert_eq!(a.signs, vec![Sign::Zero]);
        let a = analyze(&Poly::constant(r(-4)));
        assert_eq!(a.signs, vec![Sign::Neg]);
    }

    #[test]
    fn analyze_rational_root_with_denominator() {
        // (2t−1)(3t+5)
        let p = Poly::from_ints(&[-1, 2]).mul(&Poly::from_ints(&[5, 3]));
        let a = analyze(&p);
        assert_eq!(
            a.roots,
            vec![
                RootLoc::Exact(Rational::ratio(-5, 3)),
                RootLoc::Exact(Rational::ratio(1, 2))
            ]
        );
    }
}
