//! Finitely generated modules over a hypersurface, given by a square
//! presentation, and their truncated linear-algebra models.

mod presentation;
mod trunc;

pub use presentation::{PresInvariants, Presentation};
pub use trunc::{Submodule, TruncModule};
