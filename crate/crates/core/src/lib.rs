//! Homological invariants of connected Nakayama algebras, computed from
//! their Kupisch series.
//!
//! Every indecomposable module over a Nakayama algebra is uniserial and is
//! determined by its top and its length, so all computations here are
//! integer arithmetic on sequences. The crate covers:
//!
//! - [`kupisch`]: admissibility, normalization, the map `theta`, Cartan matrix
//! - [`zmatrix`]: exact determinant, rank and Smith normal form over `Z`
//! - [`modarith`]: syzygies, cosyzygies, projective and injective dimensions
//! - [`gorenstein`]: Gorenstein test, Gorenstein projective modules,
//!   the trichotomy classification
//! - [`retraction`]: left retractions and the singularity descriptor
//! - [`oracle`]: slow brute-force recomputations used for cross-checking
//! - [`report`]: aggregated, serializable reports and surveys
//!
//! ```
//! use nakayama::{classify, KupischSeries, TrichotomyClass};
//!
//! let a: KupischSeries = "2,4,3".parse().unwrap();
//! assert_eq!(classify(&a), TrichotomyClass::Gorenstein { v_dim: 2 });
//! ```

pub mod error;
pub mod gorenstein;
pub mod kupisch;
pub mod modarith;
pub mod oracle;
pub mod report;
pub mod retraction;
pub mod zmatrix;

pub use error::{Error, Result};
pub use gorenstein::{
    classify, fin_dim, global_dim, gp_modules, gp_test, is_cm_free, is_gorenstein,
    GorensteinVerdict, GpCertificate, GpVerdict, NotGpReason, TrichotomyClass,
};
pub use kupisch::{parse_sequence, phi, Kind, KupischSeries};
pub use modarith::{cosyzygy, inj_dim, proj_dim, syzygy, DimValue, Indec};
pub use retraction::{
    retract_step, retraction_sequence, singularity_descriptor, RetractionSequence, RetractionStep,
    SingularityDescriptor,
};
pub use zmatrix::{determinant, rank, smith_normal_form, IntMatrix, SmithForm};
