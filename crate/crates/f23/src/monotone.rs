//! Precise-monotonicity verification. A set is precisely monotone when
//! every horizontal line meets it and its complement in connected sets;
//! this module traces exact sign patterns of payload restrictions along
//! lines and turns connectivity verdicts into certificates.

use crate::carnot::{line_point, line_through, mul, HLine, Point};
use crate::haffine::HAffine;
use crate::multivec::{is_zero3, zero3, OneForm};
use crate::poly::{analyze, RootLoc, Sign};
use crate::poly6::Poly6;
use crate::rat::Rational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

pub type MemberFn = Arc<dyn Fn(&Point) -> bool + Send + Sync>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonotoneError {
    #[error("custom oracles cannot be traced exactly; use sampled_check_line")]
    CustomOracle,
    #[error("precondition failed: {0}")]
    PreconditionFailed(&'static str),
    #[error("boundary callback cannot decide membership at an irrational boundary point")]
    CallbackUndecidable,
}

/// Whether the zero level of the payload belongs to the set.
#[derive(Clone)]
pub enum BoundaryRule {
    Open,
    Closed,
    /// Arbitrary boundary subset, decided pointwise.
    Callback(MemberFn),
}

impl fmt::Debug for BoundaryRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryRule::Open => write!(f, "Open"),
            BoundaryRule::Closed => write!(f, "Closed"),
            BoundaryRule::Callback(_) => write!(f, "Callback(..)"),
        }
    }
}

/// An affine functional c + Σ theta[i]·θᵢ + Σ omega[j]·ωⱼ on ℝ⁶; its
/// strict sublevel set is an open half-space.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AffineFunctional {
    pub theta: [Rational; 3],
    pub omega: [Rational; 3],
    pub offset: Rational,
}

impl AffineFunctional {
    pub fn value(&self, x: &Point) -> Rational {
        let mut v = self.offset.clone();
        for (c, t) in self.theta.iter().zip(x.theta.iter()) {
            v += &(c * t);
        }
        for (c, w) in self.omega.iter().zip(x.omega.iter()) {
            v += &(c * w);
        }
        v
    }

    pub fn to_poly6(&self) -> Poly6 {
        let mut terms = vec![crate::poly6::Term {
            exps: [0; 6],
            coeff: self.offset.clone(),
        }];
        for (i, c) in self.theta.iter().chain(self.omega.iter()).enumerate() {
            let mut exps = [0u8; 6];
            exps[i] = 1;
            terms.push(crate::poly6::Term {
                exps,
                coeff: c.clone(),
            });
        }
        Poly6::new(terms)
    }
}

/// A membership predicate for a candidate monotone set, with its
/// algebraic class declared so verdicts can be certified.
#[derive(Clone)]
pub enum SetOracle {
    HAffineSublevel { phi: HAffine, boundary: BoundaryRule },
    PolySublevel { poly: Poly6, boundary: BoundaryRule },
    HalfSpace { functional: AffineFunctional, boundary: BoundaryRule },
    Custom { member: MemberFn },
}

impl fmt::Debug for SetOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetOracle::HAffineSublevel { phi, boundary } => f
                .debug_struct("HAffineSublevel")
                .field("phi", phi)
                .field("boundary", boundary)
                .finish(),
            SetOracle::PolySublevel { poly, boundary } => f
                .debug_struct("PolySublevel")
                .field("poly", poly)
                .field("boundary", boundary)
                .finish(),
            SetOracle::HalfSpace { functional, boundary } => f
                .debug_struct("HalfSpace")
                .field("functional", functional)
                .field("boundary", boundary)
                .finish(),
            SetOracle::Custom { .. } => f.write_str("Custom(..)"),
        }
    }
}

impl SetOracle {
    pub fn open_haffine(phi: HAffine) -> SetOracle {
        SetOracle::HAffineSublevel {
            phi,
            boundary: BoundaryRule::Open,
        }
    }

    fn boundary(&self) -> Result<&BoundaryRule, MonotoneError> {
        match self {
            SetOracle::HAffineSublevel { boundary, .. }
            | SetOracle::PolySublevel { boundary, .. }
            | SetOracle::HalfSpace { boundary, .. } => Ok(boundary),
            SetOracle::Custom { .. } => Err(MonotoneError::CustomOracle),
        }
    }

    /// Exact payload value; errors for CUSTOM oracles.
    pub fn payload_at(&self, x: &Point) -> Result<Rational, MonotoneError> {
        match self {
            SetOracle::HAffineSublevel { phi, .. } => Ok(crate::haffine::eval(phi, x)),
            SetOracle::PolySublevel { poly, .. } => Ok(poly.eval(x)),
            SetOracle::HalfSpace { functional, .. } => Ok(functional.value(x)),
            SetOracle::Custom { .. } => Err(MonotoneError::CustomOracle),
        }
    }

    /// Membership, honoring the boundary rule. Works for all kinds.
    pub fn member(&self, x: &Point) -> bool {
        match self {
            SetOracle::Custom { member } => member(x),
            _ => {
                let v = self.payload_at(x).expect("algebraic oracle");
                match v.signum() {
                    -1 => true,
                    1 => false,
                    _ => match self.boundary().expect("algebraic oracle") {
                        BoundaryRule::Open => false,
                        BoundaryRule::Closed => true,
                        BoundaryRule::Callback(f) => f(x),
                    },
                }
            }
        }
    }

    /// The restriction polynomial along a horizontal line, composed
    /// symbolically in t.
    pub fn restriction(&self, l: &HLine) -> Result<crate::poly::Poly, MonotoneError> {
        match self {
            SetOracle::HAffineSublevel { phi, .. } => {
                let (a, b) = crate::haffine::restrict_to_line(phi, l);
                Ok(crate::poly::Poly::new(vec![a, b]))
            }
            SetOracle::PolySublevel { poly, .. } => Ok(poly.restrict_to_hline(l)),
            SetOracle::HalfSpace { functional, .. } => {
                Ok(functional.to_poly6().restrict_to_hline(l))
            }
            SetOracle::Custom { .. } => Err(MonotoneError::CustomOracle),
        }
    }
}

/// Roots of the restriction polynomial and its sign on each maximal
/// interval: 2·|roots|+1 signs, alternating interval/root/interval/…
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SignPattern {
    pub roots: Vec<RootLoc>,
    pub signs: Vec<Sign>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Violation,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MonotoneReport {
    pub verdict: Verdict,
    /// Three parameters t₁<t₂<t₃ on the witness line exhibiting the
    /// disconnection (in, out, in — of the set or of its complement).
    /// Absent when the only disconnection points are irrational boundary
    /// points.
    pub witnesses: Option<[Rational; 3]>,
    pub witness_line: Option<HLine>,
    pub lines_checked: u64,
}

impl MonotoneReport {
    fn pass(lines_checked: u64) -> MonotoneReport {
        MonotoneReport {
            verdict: Verdict::Pass,
            witnesses: None,
            witness_line: None,
            lines_checked,
        }
    }
}

/// Exact sign pattern of the payload restriction along a line.
pub fn line_trace(oracle: &SetOracle, l: &HLine) -> Result<SignPattern, MonotoneError> {
    let p = oracle.restriction(l)?;
    let a = analyze(&p);
    Ok(SignPattern {
        roots: a.roots,
        signs: a.signs,
    })
}

/// One membership cell of a line: an open interval between roots, or a
/// root point.
struct Cell {
    member: bool,
    sample: Option<Rational>,
}

fn cells(oracle: &SetOracle, l: &HLine) -> Result<Vec<Cell>, MonotoneError> {
    let p = oracle.restriction(l)?;
    let a = analyze(&p);
    let boundary = oracle.boundary()?;
    if a.roots.is_empty() {
        let member = match a.signs[0] {
            Sign::Neg => true,
            Sign::Pos => false,
            // identically-zero payload: the whole line is boundary
            Sign::Zero => match boundary {
                BoundaryRule::Open => false,
                BoundaryRule::Closed => true,
                BoundaryRule::Callback(_) => return Err(MonotoneError::CallbackUndecidable),
            },
        };
        return Ok(vec![Cell {
            member,
            sample: Some(a.samples[0].clone()),
        }]);
    }
    let mut out = Vec::with_capacity(2 * a.roots.len() + 1);
    for (i, sample) in a.samples.iter().enumerate() {
        out.push(Cell {
            member: a.signs[2 * i] == Sign::Neg,
            sample: Some(sample.clone()),
        });
        if i < a.roots.len() {
            let (member, sample) = match (&a.roots[i], boundary) {
                (_, BoundaryRule::Open) => (false, a.roots[i].exact().cloned()),
                (_, BoundaryRule::Closed) => (true, a.roots[i].exact().cloned()),
                (RootLoc::Exact(r), BoundaryRule::Callback(f)) => {
                    (f(&line_point(l, r)), Some(r.clone()))
                }
                (RootLoc::Isolated { .. }, BoundaryRule::Callback(_)) => {
                    return Err(MonotoneError::CallbackUndecidable)
                }
            };
            out.push(Cell { member, sample });
        }
    }
    Ok(out)
}

fn contiguous(cells: &[Cell], value: bool) -> bool {
    let first = cells.iter().position(|c| c.member == value);
    let last = cells.iter().rposition(|c| c.member == value);
    match (first, last) {
        (Some(f), Some(l)) => cells[f..=l].iter().all(|c| c.member == value),
        _ => true,
    }
}

/// First witness triple (by cell index) exhibiting value/!value/value,
/// using only cells with rational representatives.
fn witness_triple(cells: &[Cell], value: bool) -> Option<[Rational; 3]> {
    let n = cells.len();
    for i in 0..n {
        if cells[i].member != value || cells[i].sample.is_none() {
            continue;
        }
        for j in i + 1..n {
            if cells[j].member != !value || cells[j].sample.is_none() {
                continue;
            }
            for k in j + 1..n {
                if cells[k].member != value || cells[k].sample.is_none() {
                    continue;
                }
                return Some([
                    cells[i].sample.clone().unwrap(),
                    cells[j].sample.clone().unwrap(),
                    cells[k].sample.clone().unwrap(),
                ]);
            }
        }
    }
    None
}

/// Is the oracle's set monotone along this single line? PASS iff both the
/// set and its complement meet the line in connected sets.
pub fn check_line_monotone(
    oracle: &SetOracle,
    l: &HLine,
) -> Result<MonotoneReport, MonotoneError> {
    let cells = cells(oracle, l)?;
    let set_ok = contiguous(&cells, true);
    let complement_ok = contiguous(&cells, false);
    if set_ok && complement_ok {
        return Ok(MonotoneReport::pass(1));
    }
    let witnesses = if !set_ok {
        witness_triple(&cells, true)
    } else {
        witness_triple(&cells, false)
    };
    Ok(MonotoneReport {
        verdict: Verdict::Violation,
        witnesses,
        witness_line: Some(l.clone()),
        lines_checked: 1,
    })
}

/// Line enumeration strategies for batch checking.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum LineSampler {
    /// All horizontal lines through pairs of horizontally aligned points
    /// of the integer grid [−w, w]⁶, deduplicated.
    Grid { half_width: u32 },
    /// Random lines with rational data of bounded height, reproducible
    /// from the seed.
    Random { count: u32, seed: u64, height: u32 },
}

/// Check every sampled line; the first violation in enumeration order is
/// reported.
pub fn check_monotone_batch(
    oracle: &SetOracle,
    sampler: &LineSampler,
) -> Result<MonotoneReport, MonotoneError> {
    match sampler {
        LineSampler::Grid { half_width } => batch_grid(oracle, *half_width as i64),
        LineSampler::Random { count, seed, height } => {
            batch_random(oracle, *count, *seed, *height)
        }
    }
}

fn batch_grid(oracle: &SetOracle, w: i64) -> Result<MonotoneReport, MonotoneError> {
    let range = || -w..=w;
    let mut seen: HashSet<String> = HashSet::new();
    let mut checked: u64 = 0;
    // Enumerate base points x = (tx, wx) and partner θ-parts in lex order;
    // the aligned partner's ω-part is forced, which keeps the scan linear
    // in the grid size times the θ-grid size. Coordinates stay small, so
    // the alignment arithmetic runs in machine integers.
    for tx1 in range() {
        for tx2 in range() {
            for tx3 in range() {
                for wx1 in range() {
                    for wx2 in range() {
                        for wx3 in range() {
                            for tz1 in range() {
                                for tz2 in range() {
                                    for tz3 in range() {
                                        let (d1, d2, d3) = (tz1 - tx1, tz2 - tx2, tz3 - tx3);
                                        if (d1, d2, d3) == (0, 0, 0) {
                                            continue;
                                        }
                                        // ω_z = ω_x + θ_x ∧ d
                                        let wz1 = wx1 + tx1 * d2 - tx2 * d1;
                                        let wz2 = wx2 + tx1 * d3 - tx3 * d1;
                                        let wz3 = wx3 + tx2 * d3 - tx3 * d2;
                                        if wz1.abs() > w || wz2.abs() > w || wz3.abs() > w {
                                            continue;
                                        }
                                        // count each unordered pair once
                                        if (tz1, tz2, tz3, wz1, wz2, wz3)
                                            < (tx1, tx2, tx3, wx1, wx2, wx3)
                                        {
                                            continue;
                                        }
                                        let x = int_point([tx1, tx2, tx3], [wx1, wx2, wx3]);
                                        let z = int_point([tz1, tz2, tz3], [wz1, wz2, wz3]);
                                        let line = line_through(&x, &z)
                                            .expect("distinct by construction")
                                            .expect("aligned by construction");
                                        let (dir, base) = line.canonical_key();
                                        let key = format!("{:?}|{:?}", dir, base);
                                        if !seen.insert(key) {
                                            continue;
                                        }
                                        checked += 1;
                                        let mut report = check_line_monotone(oracle, &line)?;
                                        if report.verdict == Verdict::Violation {
                                            report.lines_checked = checked;
                                            return Ok(report);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(MonotoneReport::pass(checked))
}

fn rand_rational(rng: &mut ChaCha8Rng, height: i64) -> Rational {
    let n = rng.gen_range(-height..=height);
    let d = rng.gen_range(1..=height.max(1));
    Rational::ratio(n, d)
}

fn batch_random(
    oracle: &SetOracle,
    count: u32,
    seed: u64,
    height: u32,
) -> Result<MonotoneReport, MonotoneError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = height.max(1) as i64;
    let mut checked: u64 = 0;
    for _ in 0..count {
        let base = Point::new(
            [
                rand_rational(&mut rng, h),
                rand_rational(&mut rng, h),
                rand_rational(&mut rng, h),
            ],
            [
                rand_rational(&mut rng, h),
                rand_rational(&mut rng, h),
                rand_rational(&mut rng, h),
            ],
        );
        let dir: OneForm = loop {
            let d = [
                Rational::int(rng.gen_range(-h..=h)),
                Rational::int(rng.gen_range(-h..=h)),
                Rational::int(rng.gen_range(-h..=h)),
            ];
            if !is_zero3(&d) {
                break d;
            }
        };
        let line = HLine::new(base, dir).expect("nonzero direction");
        checked += 1;
        let mut report = check_line_monotone(oracle, &line)?;
        if report.verdict == Verdict::Violation {
            report.lines_checked = checked;
            return Ok(report);
        }
    }
    Ok(MonotoneReport::pass(checked))
}

fn int_point(theta: [i64; 3], omega: [i64; 3]) -> Point {
    Point::new(theta.map(Rational::int), omega.map(Rational::int))
}

/// If a horizontal line meets the boundary in two points, it lies inside
/// it: verify the payload also vanishes at every probe parameter.
pub fn verify_linee(
    oracle: &SetOracle,
    l: &HLine,
    t1: &Rational,
    t2: &Rational,
    probes: &[Rational],
) -> Result<bool, MonotoneError> {
    if t1 == t2 {
        return Err(MonotoneError::PreconditionFailed("t1 = t2"));
    }
    for t in [t1, t2] {
        if !oracle.payload_at(&line_point(l, t))?.is_zero() {
            return Err(MonotoneError::PreconditionFailed(
                "parameter not on the boundary",
            ));
        }
    }
    for t in probes {
        if !oracle.payload_at(&line_point(l, t))?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// From a boundary point x with x·y strictly inside E, the forward ray
/// must stay strictly inside and the backward ray strictly outside.
pub fn verify_tretre(
    oracle: &SetOracle,
    x: &Point,
    y: &OneForm,
    probes: &[Rational],
) -> Result<bool, MonotoneError> {
    if !oracle.payload_at(x)?.is_zero() {
        return Err(MonotoneError::PreconditionFailed("x not on the boundary"));
    }
    let step = |t: &Rational| mul(x, &Point::new(crate::multivec::scale3(t, y), zero3()));
    if !oracle.payload_at(&step(&Rational::one()))?.is_negative() {
        return Err(MonotoneError::PreconditionFailed(
            "x·y is not strictly inside the set",
        ));
    }
    if probes.iter().any(|t| !t.is_positive()) {
        return Err(MonotoneError::PreconditionFailed("probes must be positive"));
    }
    for t in probes {
        if !oracle.payload_at(&step(t))?.is_negative() {
            return Ok(false);
        }
        if !oracle.payload_at(&step(&-t))?.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Non-certifying connectivity probe for arbitrary (including CUSTOM)
/// oracles: sample membership on the ladder t = k/density over
/// [−range, range] and test contiguity of the observed pattern.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SampledReport {
    /// Always false: a sampled verdict is evidence, not a certificate.
    pub certifying: bool,
    pub verdict: Verdict,
    pub witnesses: Option<[Rational; 3]>,
}

pub fn sampled_check_line(
    oracle: &SetOracle,
    l: &HLine,
    density: u32,
    range: u32,
) -> SampledReport {
    let density = density.max(1) as i64;
    let n = range as i64 * density;
    let probes: Vec<(Rational, bool)> = (-n..=n)
        .map(|k| {
            let t = Rational::ratio(k, density);
            let m = oracle.member(&line_point(l, &t));
            (t, m)
        })
        .collect();
    let cells: Vec<Cell> = probes
        .iter()
        .map(|(t, m)| Cell {
            member: *m,
            sample: Some(t.clone()),
        })
        .collect();
    if contiguous(&cells, true) && contiguous(&cells, false) {
        return SampledReport {
            certifying: false,
            verdict: Verdict::Pass,
            witnesses: None,
        };
    }
    let witnesses = witness_triple(&cells, true).or_else(|| witness_triple(&cells, false));
    SampledReport {
        certifying: false,
        verdict: Verdict::Violation,
        witnesses,
    }
}
