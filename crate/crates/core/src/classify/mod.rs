//! Reconstruction of manifold data from parabolas, equivalence
//! certificates and invariants.

mod certificate;
mod equivalence;
mod invariants;
mod realize;

pub use certificate::{
    apply_certificate, search_certificate, verify_equivalence, EquivalenceCertificate, MAX_ENTRY_BOUND,
};
pub use equivalence::{almost_equivalent, Verdict, INVARIANT_TOL};
pub use invariants::{affine_spectrum, simple_spectrum_form, AffineSpectrum, SimpleSpectrumForm};
pub use realize::realize;
