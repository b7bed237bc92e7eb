//! Codimensions, cocharacters, the exponent `d`, vanishing checks and
//! growth tables.

mod codim;
mod exponent;
mod growth;
mod image;
mod vanishing;
mod witness;

pub use codim::{
    cocharacter_multiplicities, cocharacter_with, codimension_cocharacter, codimension_rank, codimension_with,
    evaluation_matrix, identity_basis, CocharacterResult, CodimOptions, CodimensionResult, Method,
};
pub use exponent::{h_components, pi_exponent, pi_exponent_with, ExponentOptions, ExponentResult};
pub use growth::{
    growth_report, growth_report_with, in_sandwich, root_nondecreasing, GrowthOptions, GrowthReport, GrowthRow,
    SandwichFlag,
};
pub use image::Limits;
pub use vanishing::{vanishing_report, verify_cocharacter_vanishing, VanishingReport};
pub use witness::verify_witness;
