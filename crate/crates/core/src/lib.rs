pub mod algebra;
pub mod cremona;
pub mod error;
pub mod lattice;
pub mod suite;
pub mod surfaces;
pub mod weighted;

pub use algebra::{Cyclotomic, Field, FieldId, Rational, UniPoly};
pub use error::{Error, Result};

pub type Q = Rational;
pub type QZeta3 = Cyclotomic<3>;
pub type QZeta5 = Cyclotomic<5>;
pub type QZeta7 = Cyclotomic<7>;
