//! Symmetric special multiserial algebras from defining pairs of cycles.
//!
//! Starting from a special multiserial presentation `KQ/I`, [`symmetrize`]
//! builds a defining pair `(S, μ)` on an enlarged quiver `Q*`. The algebra it
//! defines is symmetric ([`cycle_algebra`]) and maps onto the presentation
//! ([`symmetrize::verify_quotient`]). An independent brute-force dimension
//! count lives in [`oracle`].

pub mod cycle_algebra;
pub mod defining_pair;
pub mod error;
pub mod field;
pub mod linalg;
pub mod oracle;
pub mod presentation;
pub mod quiver;
pub mod report;
pub mod symmetrize;

pub use cycle_algebra::{BasisElement, CycleAlgebra, GramMatrix, LinearCombination};
pub use defining_pair::{generate_relations, nilpotency_bound, validate, DefiningPair, PairReport, RelationSet};
pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use oracle::{oracle_dimension, Generators, OracleOptions, OracleResult};
pub use presentation::{
    check_condition_m, check_lemma_properties, derive_successors, maximal_paths, orbit_data, simple_cycles,
    OrbitData, Presentation, SuccessorTables,
};
pub use quiver::{compose, is_simple, lies_in, ArrowId, Path, Quiver, SimpleCycle, VertexId};
pub use report::Check;
pub use symmetrize::{build_qstar, symmetrize, verify_quotient, QuiverStar, QuotientCertificate};
