//! Exhaustive desk-scale verification of spectral characterization claims:
//! cospectral-mate search, a lemma catalog, theorem instances, closed-form
//! spectra and the computer-search claims behind them.

pub mod claims;
pub mod closed_forms;
pub mod error;
pub mod lemmas;
pub mod registry;
pub mod report;
pub mod search;
pub mod theorems;

pub use closed_forms::{ClosedFormId, PredictedSpectrum};
pub use error::{Result, VerifyError};
pub use lemmas::{verify_lemma, Lemma, LemmaCatalog};
pub use registry::{Suite, SuiteOptions, Verifier};
pub use report::{ReportBuilder, Verdict, VerificationReport, Witness};
pub use search::{cospectral_mates, is_dls_desk, is_dqs_desk, MateSearchResult, SearchSpace};
