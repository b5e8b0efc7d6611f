//! Exact computations with conormal classes of Schubert varieties in
//! `T*Gr(k, n)`, the Yangian weight functions that represent them, and the
//! R-matrix relating them.
//!
//! The crate works over the ring `Q[t_1..t_k, z_1..z_n, h]` with exact
//! coefficients ([`Scalar`]). Polynomial-level objects (`W_I`, `W̌_I`, `Y_I`,
//! `N_I`, `Δ_I`) live in [`weights`]; the `(C^2)^{⊗n}` side (`Σ_I`, the
//! coefficients `c_J`, the R-matrix) in [`tensor`]; fixed-point localization
//! and the classes `κ_I`, `κ'_I`, `[S_I]` in [`cohomology`]; and the suites
//! that check the identities between them in [`verify`].

pub mod cohomology;
pub mod combinatorics;
pub mod error;
pub mod poly;
pub mod scalar;
pub mod symmetrize;
pub mod tensor;
pub mod verify;
pub mod weights;

pub use combinatorics::SubsetIndex;
pub use error::{AlgebraError, Result};
pub use scalar::{Rational, Scalar};

/// Polynomials with exact rational coefficients.
pub type Poly = poly::Polynomial<Rational>;
/// Rational functions with exact rational coefficients.
pub type RatFun = poly::RationalFunction<Rational>;
/// Localized classes with exact rational coefficients.
pub type Class = cohomology::LocalizedClass<Rational>;
/// Vectors of `(C^2)^{⊗n}` with exact rational-function coefficients.
pub type Tensor = tensor::TensorVector<Rational>;
/// The verification engine over exact rationals.
pub type Verifier = verify::Engine<Rational>;
