//! Exact scalar and polynomial arithmetic.

pub mod binary;
pub mod cyclotomic;
pub mod field;
pub mod gcd;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod order;
pub mod parse;
pub mod poly;
pub mod resultant;
pub mod univariate;

mod trager;
mod zassenhaus;

pub use binary::{factor_binary_form, BinaryFactorization};
pub use cyclotomic::Cyclotomic;
pub use field::{Field, FieldId, Rational};
pub use gcd::{poly_gcd, poly_gcd_many};
pub use groebner::{groebner, GroebnerBasis, Ideal};
pub use hilbert::{hilbert_series, HilbertSeries};
pub use order::{Monomial, TermOrder};
pub use parse::{parse_equation, parse_poly, parse_with_vars};
pub use poly::{MultiPoly, VarSet, Vars};
pub use resultant::resultant;
pub use univariate::UniPoly;
