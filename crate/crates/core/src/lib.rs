//! Exact polar multiplicities of symmetric determinantal singularities.
//!
//! A germ `F: (C^q, 0) -> (Sym_n, 0)` is given by a symmetric matrix of
//! polynomials over `Q`. Polar degrees are computed from local colengths
//! `dim O_q / I` of determinantal ideals, using Mora standard bases under a
//! local degree order.
//!
//! ```
//! use symdet_core::{hankel_example, mixed_polar_degree, GenericityOptions};
//!
//! let opts = GenericityOptions { trials: 1, ..Default::default() };
//! let r = mixed_polar_degree(&hankel_example(), 3, 1, &opts).unwrap();
//! assert_eq!(r.degree, 3);
//! ```

pub mod basis;
pub mod io;
pub mod linalg;
pub mod matrix;
pub mod polar;
pub mod poly;

pub use basis::{
    buchberger, colength_local, colength_truncated_oracle, mora_normal_form, standard_basis_local, BasisError, Colength,
    ColengthMethod, ColengthResult, Limits, StandardBasis,
};
pub use linalg::RatMatrix;
pub use matrix::{a_l_ideal, expected_codim, hankel_example, kernel_locus_ideal, minors, IdealSpec, MatrixError, PolyMatrix, SymPolyMatrix};
pub use polar::{
    genericity_stabilize, mixed_polar_degree, polar_degree_hypersurface, polar_is_empty, sample_codim,
    total_polar_degree_corank2, GenericityOptions, MixedCase, MixedPolarReport, PolarDegreeReport, PolarError,
};
pub use poly::{parse_polynomial, Coefficient, FieldTag, Fp, Monomial, MonomialOrder, PolyError, Polynomial, Rational};
