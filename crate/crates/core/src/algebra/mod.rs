//! Exact coefficient rings: rationals, polynomials, multivariate polynomials and
//! rational functions, plus a tagged value type for runtime ring selection.

pub mod multipoly;
pub mod parse;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod ring;

pub use multipoly::MultiPoly;
pub use parse::{parse_multipoly, parse_poly, parse_rational};
pub use poly::{Poly, Symbol};
pub use ratfunc::RatFunc;
pub use rational::{binomial, factorial, int, rat, sign_pow, to_f64, Rational};
pub use ring::{pochhammer, poly_eval, Ring, RingTag, RingValue};
