//! Scene files: the JSON unit consumed by the command-line front end.
//! A scene bundles an h-affine function with an optional set oracle,
//! quotient kernel, line sampler, and output path. Parsing is strict:
//! unknown fields are rejected so certificates round-trip losslessly.

use crate::carnot::Point;
use crate::classify::{verify_witness, PiecewisePath, WitnessCertificate};
use crate::haffine::HAffine;
use crate::monotone::{AffineFunctional, BoundaryRule, LineSampler, SetOracle};
use crate::multivec::TwoForm;
use crate::poly6::Poly6;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SceneError {
    #[error("custom oracles have no algebraic payload; use the sampled checker")]
    CustomOracle,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundarySpec {
    #[default]
    Open,
    Closed,
}

impl From<BoundarySpec> for BoundaryRule {
    fn from(b: BoundarySpec) -> BoundaryRule {
        match b {
            BoundarySpec::Open => BoundaryRule::Open,
            BoundarySpec::Closed => BoundaryRule::Closed,
        }
    }
}

/// Declarative oracle description. `custom` is accepted by the parser
/// (so scene files can label externally-checked sets) but cannot be
/// turned into an exact oracle.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum OracleSpec {
    HaffineSublevel {
        /// Defaults to the scene's φ when omitted.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        phi: Option<HAffine>,
        #[serde(default)]
        boundary: BoundarySpec,
    },
    PolySublevel {
        poly: Poly6,
        #[serde(default)]
        boundary: BoundarySpec,
    },
    HalfSpace {
        functional: AffineFunctional,
        #[serde(default)]
        boundary: BoundarySpec,
    },
    Custom {},
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scene {
    pub phi: HAffine,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernel: Option<Vec<TwoForm>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sampler: Option<LineSampler>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<String>,
}

impl Scene {
    /// Resolve the oracle, defaulting to the open sublevel set of the
    /// scene's φ when none is declared.
    pub fn oracle(&self) -> Result<SetOracle, SceneError> {
        let Some(spec) = &self.oracle else {
            return Ok(SetOracle::open_haffine(self.phi.clone()));
        };
        Ok(match spec {
            OracleSpec::HaffineSublevel { phi, boundary } => SetOracle::HAffineSublevel {
                phi: phi.clone().unwrap_or_else(|| self.phi.clone()),
                boundary: (*boundary).into(),
            },
            OracleSpec::PolySublevel { poly, boundary } => SetOracle::PolySublevel {
                poly: poly.clone(),
                boundary: (*boundary).into(),
            },
            OracleSpec::HalfSpace {
                functional,
                boundary,
            } => SetOracle::HalfSpace {
                functional: functional.clone(),
                boundary: (*boundary).into(),
            },
            OracleSpec::Custom {} => return Err(SceneError::CustomOracle),
        })
    }

    /// The declared sampler, or a default small grid.
    pub fn sampler(&self) -> LineSampler {
        self.sampler
            .clone()
            .unwrap_or(LineSampler::Grid { half_width: 1 })
    }
}

/// A self-contained certificate file: everything needed to re-verify
/// without recomputation.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
#[allow(clippy::large_enum_variant)] // parsed once per file, never stored in bulk
pub enum CertificateFile {
    /// A witness line forcing x into the boundary of any monotone set
    /// pinched between the open and closed sublevel sets of φ.
    Witness {
        phi: HAffine,
        x: Point,
        certificate: WitnessCertificate,
    },
    /// A piecewise path staying in one open component of {φ ≠ 0}.
    Path { phi: HAffine, path: PiecewisePath },
}

impl CertificateFile {
    pub fn verify(&self) -> bool {
        match self {
            CertificateFile::Witness {
                phi,
                x,
                certificate,
            } => verify_witness(phi, x, certificate),
            CertificateFile::Path { phi, path } => path.verify(phi),
        }
    }
}
