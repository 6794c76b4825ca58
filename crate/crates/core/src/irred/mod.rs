//! Irreducibility certificates: finite-field tests, specialization ideals,
//! Newton polygons and the stretch sweep.

mod cert;
mod ffield;
mod newton;
mod search;
mod sweep;

pub use cert::{
    poly_digest, IrreducibilityCertificate, Method, SpecializationIdeal, Verdict, Witness,
};
pub use ffield::{fp_irreducible, is_irreducible};
pub use newton::{absolute_irreducibility, newton_polygon, NewtonPolygon};
pub use search::{
    certify_root_of_unity_specialization, certify_root_of_unity_with, check_content,
    find_certificate, find_certificate_in, specialize_irreducible_q, DEFAULT_MAX_ATTEMPTS,
    DEFAULT_PRIME_BUDGET,
};
pub use sweep::{
    dzannier_driver, IrreducibilityTable, SweepReport, SweepRow, SWEEP_POINTS, SWEEP_PRIME_LIMIT,
};
