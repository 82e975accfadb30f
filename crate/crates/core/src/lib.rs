//! Exact computation of the inertial cohomology ring of a linear torus
//! action on complex affine space and the Chen-Ruan cohomology of its
//! symplectic quotient, together with the finite-stabilizer classification
//! for flag manifolds.
//!
//! Everything is computed over arbitrary-precision integers and rationals.

pub mod arith;
pub mod check;
pub mod delzant;
pub mod error;
pub mod flag;
pub mod graded;
pub mod inertial;
pub mod input;
pub mod kirwan;
pub mod matrix;
pub mod monomial;
pub mod poly;
pub mod polytope;
pub mod sectors;

pub use arith::{Int, Rat};
pub use delzant::{CircleAction, DelzantData, Mode};
pub use error::{Error, Result};
pub use graded::{GradedAbelianGroup, GroupSlice};
pub use inertial::{RingPresentation, StructureConstants};
pub use input::{parse_input, Instance};
pub use kirwan::{KernelIdeal, StanleyReisnerPresentation};
pub use matrix::{IntMat, SmithDecomposition};
pub use monomial::WeightMonomial;
pub use polytope::{Face, LabeledPolytope};
pub use sectors::{GammaTable, Logweights, SectorData, SectorFace};
