//! Determinants, definiteness, cone membership, embedding, simplex volume and
//! the quadratic, biquadratic and quartic forms.

mod definiteness;
mod determinant;
mod embedding;
mod forms;
mod volume;

pub use definiteness::{Definiteness, DefinitenessReport, Verdict, DEFAULT_TOL};
pub use determinant::{determinant, Determinant};
pub use embedding::{cone_membership, embed, ConeClass, EmbeddingResult, MembershipReport};
pub use forms::{
    biquadratic_qw, configuration_form, mass_form, pair_products, quadratic_form_q,
    quadratic_form_qk, quartic_qb, reduced_form_split,
};
pub use volume::{gram_volume_sq, menger_volume_sq, simplex_volume_factor};
