//! Exact-arithmetic verification of 3-Lie algebras, their representations
//! and cohomology, non-abelian extensions, the Maurer-Cartan description of
//! extensions, and the induced Leibniz algebras of fundamental objects.

pub mod algebra;
pub mod cochain;
pub mod corpus;
pub mod dgla;
pub mod error;
pub mod expr;
pub mod extension;
pub mod leibniz_ext;
pub mod linalg;
pub mod problem;
pub mod random;
pub mod representation;
pub mod run;
pub mod scalar;
pub mod wedge;

pub use algebra::{is_morphism3, LeibnizAlgebra, ThreeLieAlgebra, Verdict, Witness};
pub use dgla::{
    cochain_to_datum, datum_to_cochain, dgla_differential, gauge_transform, mc_defect, nr_bracket, nr_compose, Ambient,
    GradedCochain, Unshuffle,
};
pub use error::{Error, Result};
pub use extension::{
    is_extension_isomorphism, theta_morphism_check, ExtensionDatum, ExtensionVerdict, IsoVerdict,
};
pub use linalg::{LinearMap, SpaceId, Vector};
pub use representation::{Cochain, RepVerdict, Representation};
pub use scalar::Scalar;
pub use leibniz_ext::{
    assemble_leibniz_extension, build_l_r_varpi, fundamental_oracle_check, leibniz_extension_defects, w_bracket,
    LeibnizExtVerdict, LeibnizExtensionDatum, WSpace, LEIBNIZ_CONDITIONS,
};
pub use expr::{parse_expr, Assignment, ParamExpr};
pub use problem::{parse_assignment, Instance, ProblemFile};
pub use run::{run, Report, ReportFormat, RunConfig, Status, Task};
