//! Exact polynomial arithmetic over the rationals.

pub mod bipoly;
pub mod dense;
pub mod ext;
pub mod factor;
pub mod multipoly;
pub mod resultant;
pub mod ring;
pub mod upoly;

pub use bipoly::BiPoly;
pub use dense::Poly;
pub use ext::{ext_gcd_t, ExtElem, ExtField, ExtPoly};
pub use factor::{factor_rationals, is_irreducible, Factorization, DEFAULT_DEGREE_CAP};
pub use multipoly::MultiPoly;
pub use resultant::{resultant_t, subresultant, sylvester_resultant};
pub use ring::{rat, ratio, Rational, Ring};
pub use upoly::UniPoly;
