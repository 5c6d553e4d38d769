// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use thiserror::Error;

/// Every structured failure the library reports.
///
/// Validation failures carry witnesses (vertex and wall ids) so that callers
/// can show the offending configuration.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("hyperplane {wall} has non-positive weight")]
    NonPositiveWeight { wall: String },
    #[error("no weight given for hyperplane {wall}")]
    MissingWeight { wall: String },
    #[error("hyperplane {wall} does not separate any two vertices")]
    NonSeparatingHyperplane { wall: String },
    #[error("hyperplanes {first} and {second} induce the same vertex bipartition")]
    DuplicateWallPartition { first: String, second: String },
    #[error("majority of ({x}, {y}, {z}) is not a vertex (signs {majority})")]
    NotMedianClosed { x: String, y: String, z: String, majority: String },
    #[error("chart is disconnected: {reached} of {total} vertices reachable from {start}")]
    DisconnectedChart { start: String, reached: usize, total: usize },
    #[error("graph distance {graph} between {x} and {y} differs from wall distance {walls}")]
    DistanceMismatch { x: String, y: String, graph: usize, walls: usize },
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("unknown hyperplane {0}")]
    UnknownWall(String),
    #[error("halfspaces share the hyperplane {wall}")]
    SameHyperplane { wall: String },
    #[error("restriction quotient over an empty hyperplane set")]
    EmptyQuotient,
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex set is not convex ({missing} hull vertices missing)")]
    NotConvex { missing: usize },
    #[error("halfspaces are not disjoint")]
    NotDisjoint,
    #[error("map does not preserve the edge {from} -- {to}")]
    NotAdjacencyPreserving { from: String, to: String },
    #[error("hyperplane {wall} is mapped to {image} of a different weight")]
    WeightMismatch { wall: String, image: String },
    #[error("edges dual to {wall} are sent to different hyperplanes")]
    InconsistentWallMap { wall: String },
    #[error("map is not injective: {0}")]
    NotInjective(String),
    #[error("domain too small to form power {power}")]
    InsufficientDomain { power: usize },
    #[error("audited region too small: {0}")]
    InsufficientRadius(String),
    #[error("inversions persist after subdivision")]
    InversionUnresolved,
    #[error("action has a global fixed point (tau = 0)")]
    FixedPointAction,
    #[error("no neatly contracting witness inside the audited ball")]
    NotNeatlyContracting,
    #[error("sequence did not stabilize: {0}")]
    NoStabilization(String),
    #[error("correspondence is not distance-preserving at ({x}, {y})")]
    NotDistancePreserving { x: String, y: String },
    #[error("no hyperplane at the image of {vertex} matches {wall}: {reason}")]
    NoMatch { vertex: String, wall: String, reason: String },
    #[error("hyperplane {wall} at {vertex} matches several candidates: {candidates:?}")]
    AmbiguousMatch { vertex: String, wall: String, candidates: Vec<String> },
    #[error("defining edges disagree on the image of {vertex}: {images:?}")]
    InconsistentExtension { vertex: String, images: Vec<String> },
    #[error("extension breaks distances at ({x}, {y})")]
    DistanceViolation { x: String, y: String },
    #[error("extension stalled with frontier {frontier:?}: {reasons:?}")]
    Stalled { frontier: Vec<String>, reasons: Vec<String> },
    #[error("result is not a cubical isomorphism: {0}")]
    NotIsomorphism(String),
    #[error("chart has {size} vertices, above the bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error("halfspace dichotomy violated: {0}")]
    DichotomyViolation(String),
    #[error("random sample collapsed to a single vertex")]
    DegenerateSample,
    #[error("unknown acceptance suite {name}; available: {available:?}")]
    UnknownSuite { name: String, available: Vec<String> },
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Stable numeric code, shared with the C interface.
    pub fn code(&self) -> i32 {
        match self {
            Error::Schema { .. } => 10,
            Error::NonPositiveWeight { .. } => 11,
            Error::MissingWeight { .. } => 12,
            Error::NonSeparatingHyperplane { .. } => 13,
            Error::DuplicateWallPartition { .. } => 14,
            Error::NotMedianClosed { .. } => 15,
            Error::DisconnectedChart { .. } => 16,
            Error::DistanceMismatch { .. } => 17,
            Error::UnknownVertex(_) => 18,
            Error::UnknownWall(_) => 19,
            Error::SameHyperplane { .. } => 20,
            Error::EmptyQuotient => 21,
            Error::EmptySet => 22,
            Error::NotConvex { .. } => 23,
            Error::NotDisjoint => 24,
            Error::NotAdjacencyPreserving { .. } => 30,
            Error::WeightMismatch { .. } => 31,
            Error::InconsistentWallMap { .. } => 32,
            Error::NotInjective(_) => 33,
            Error::InsufficientDomain { .. } => 34,
            Error::InsufficientRadius(_) => 35,
            Error::InversionUnresolved => 36,
            Error::FixedPointAction => 37,
            Error::NotNeatlyContracting => 38,
            Error::NoStabilization(_) => 39,
            Error::NotDistancePreserving { .. } => 40,
            Error::NoMatch { .. } => 41,
            Error::AmbiguousMatch { .. } => 42,
            Error::InconsistentExtension { .. } => 43,
            Error::DistanceViolation { .. } => 44,
            Error::Stalled { .. } => 45,
            Error::NotIsomorphism(_) => 46,
            Error::BoundExceeded { .. } => 47,
            Error::DichotomyViolation(_) => 48,
            Error::DegenerateSample => 50,
            Error::UnknownSuite { .. } => 60,
            Error::Internal(_) => 98,
            Error::Io(_) => 99,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
