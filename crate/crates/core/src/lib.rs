//! Volume-bound machinery for hyperbolic 3-orbifolds whose singular locus is
//! a link: census triangulations, a Newton continuation solver for gluing and
//! orbifold Dehn-filling equations, maximal-cusp geometry and slope
//! enumeration, closed-form drilling/filling/collar inequalities, Smith
//! normal form homology with the cyclic branched-cover criterion, and the
//! report pipeline that replays the resulting volume bounds end to end.
//!
//! Floating-point kernels are generic over the scalar type via [`scalar::Scalar`]
//! (`f32` or `f64`); the concrete aliases below fix `f64` as the working
//! precision for the pipeline. Homology is exact (`num-bigint`), never float.

pub mod bounds;
pub mod constants;
pub mod cusp;
pub mod dilog;
pub mod homology;
pub mod linalg;
pub mod pipeline;
pub mod report;
pub mod scalar;
pub mod solve;
pub mod triangulation;

/// Working scalar for the pipeline and all fixtures.
pub type Real = f64;
/// Complex numbers over [`Real`].
pub type Cplx = num_complex::Complex<Real>;

pub use bounds::{
    collar_high_order, collar_order4, cusped_floor, drill_factor, fill_factor, max_slope_length,
    seven_torsion_chain, turnover_floor, turnover_triples, BoundChain, TurnoverTriple,
};
pub use cusp::{cusp_shape, maximal_cusp, slope_length, CuspShape, MaximalCusp};
pub use dilog::{bloch_wigner, dilog};
pub use homology::{
    branched_cover_exists, null_homologous_unit_coeffs, quotient_invariants, smith_normal_form,
    AbelianGroupInvariants, AbelianGroupPresentation, IntegerMatrix,
};
pub use solve::{build_system, fill_and_measure, solve, volume, ShapeAssignment, SolveOutcome};
pub use triangulation::{
    census, census_names, parse_triangulation, validate, FillingSpec, GluingEquation,
    IdealTriangulation, Slope,
};
