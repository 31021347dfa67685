//! Corpus construction, group ingestion, cached verification runs and
//! report emission for the `hallcheck` command.

pub mod affine;
pub mod big;
pub mod cache;
pub mod corpus;
pub mod error;
pub mod ingest;
pub mod record;
pub mod report;
pub mod spec;

pub use error::{Result, VerifierError};
pub use spec::{Construction, GroupSpec};
