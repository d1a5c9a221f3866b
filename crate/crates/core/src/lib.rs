//! Exact zonotope computations driven by a single linear feasibility oracle.
//!
//! * [`zonotope::enumerate_vertices`] lists the vertices of a zonotope from
//!   its generators. Since the regions of a central hyperplane arrangement
//!   correspond to the vertices of the dual zonotope, this also counts
//!   arrangement regions.
//! * [`summand::decide_zonotope`] recognizes a zonotope from its vertices
//!   and recovers its generators.
//! * [`summand::greatest_zonotopal_summand`] splits an arbitrary polytope
//!   into its largest zonotope summand plus a residual polytope.
//!
//! All arithmetic is exact over the rationals; every geometric predicate in
//! [`oracle`] reduces to one feasibility problem solved by [`exactlp`].

pub mod error;
pub mod exactlp;
pub mod oracle;
pub mod point;
pub mod polygraph;
pub mod subset;
pub mod summand;
pub mod zonotope;

pub use error::{Error, Result};
pub use exactlp::{solve_feasibility, Feasibility, FeasibilitySystem, Rational};
pub use oracle::{FaceCandidate, PointSet};
pub use point::RationalPoint;
pub use polygraph::PolytopeGraph;
pub use subset::Subset;
pub use summand::{EdgeClass, NotZonotopeReason, SummandDecomposition, ZonotopeDecision};
pub use zonotope::{GeneratorSet, VertexRecord};
