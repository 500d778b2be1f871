//! Exact linear-algebraic construction and verification of algebras,
//! coalgebras, corings, entwining structures and their comodules, including
//! Galois and principal comodules, strong connections, induction along
//! coring morphisms and split extensions.

pub mod algebra;
pub mod coalgebra;
pub mod comodule;
pub mod coring;
pub mod descent;
pub mod entwining;
pub mod error;
pub mod fixtures;
pub mod galois;
pub mod linalg;
pub mod matrix;
pub mod rational;
pub mod scalar;
pub mod simple;
pub mod tensor;
pub mod verdict;

pub use error::{ForgeError, Result};
pub use matrix::Matrix;
pub use scalar::{Field, Fp, Scalar, Q};
pub use verdict::Verdict;

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;
