//! Truncated power series ring `F_p[[x_1..x_v]] / n^cap`, the expression
//! parser, and coordinate changes for passing to `Q / (linear form)`.

mod monomial;
mod parse;
mod poly;
mod subst;

pub use monomial::{monomials_of_degree, Monomial};
pub use parse::parse_poly;
pub use poly::{RingSpec, TruncPoly};
pub use subst::{embed_by_names, eliminate_linear_form, Substitution};
pub(crate) use monomial::binomial;
