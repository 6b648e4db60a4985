//! Monte-Carlo evaluation of Wilson-loop observables in gauged Gaussian PEPS
//! for Z_N pure lattice gauge theories on a periodic two-dimensional torus.
//!
//! The state is a network of fermionic Gaussian tensors: one pairing tensor
//! per vertex (eight virtual Dirac modes, two couplings `y` and `z`) and one
//! maximally entangling bond state per link. A gauge-field configuration `G`
//! assigns a Z_N element to every directed link and enters as phase rotations
//! on the virtual modes at each link's beginning. The squared norm of the
//! resulting fermionic state,
//!
//! ```text
//! w(G) = sqrt(det((1 - Gamma_in(G) * M_D) / 2))
//! ```
//!
//! is a nonnegative weight, so expectation values of configuration-diagonal
//! observables (Wilson loops, winding lines) reduce to averages under the
//! probability p(G) ∝ w(G), sampled here by single-link Metropolis updates
//! with incremental determinant-ratio evaluation.
//!
//! Module map:
//!
//! - [`gaussian`]: Majorana covariance matrices, pairing states, phase
//!   rotations, state overlaps, and the Gaussian projection map.
//! - [`fock`]: a dense Fock-space oracle (≤ 14 modes) used to validate every
//!   covariance-level operation exactly.
//! - [`lattice`]: torus geometry, Z_N elements, link configurations, loop
//!   paths, and the per-vertex virtual-mode layout.
//! - [`assembly`]: the vertex/bond tensors and their assembly into the global
//!   covariance blocks, plus the configuration-dependent gauging phases.
//! - [`weight`]: full and incremental (rank-8 update) weight evaluation.
//! - [`mc`]: Metropolis chains, binned estimators, exact enumeration on small
//!   tori, and chain checkpoints.
//! - [`observables`]: Wilson loop and winding line evaluation.
//! - [`sweep`]: deterministic parameter-grid sweeps over a worker pool.
//! - [`analysis`]: scan post-processing (abrupt-change detection).
//! - [`selftest`]: the runtime invariant suite behind `ggpeps selftest`.
//!
//! With the default `parallel` feature, sweeps and enumeration fan out over a
//! rayon pool; disabling it leaves a purely sequential build with identical
//! results.

pub mod analysis;
pub mod assembly;
pub mod fock;
pub mod gaussian;
pub mod lattice;
mod linalg;
pub mod mc;
pub mod observables;
pub mod selftest;
pub mod sweep;
pub mod weight;

pub use assembly::{StateAssembly, VertexParams};
pub use gaussian::{GaussianError, MajoranaCovariance, PairingMatrix};
pub use lattice::{Axis, GaugeConfig, LoopPath, TorusLattice, ZnGroup};
pub use mc::{Estimate, McConfig};
pub use observables::ObservableSpec;
