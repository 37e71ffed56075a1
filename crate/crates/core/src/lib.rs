//! Linear complementary dual (LCD) codes over GF(2), GF(3) and GF(4).
//!
//! The crate covers the whole pipeline from field arithmetic to exhaustive
//! verification:
//!
//! * [`algebra`]: exact arithmetic in the three small fields and dense
//!   matrices over them (RREF, determinant, Gram matrices).
//! * [`code`]: linear codes, Euclidean/Hermitian duals, hulls, the LCD
//!   predicate, minimum distance and the generator-matrix text format.
//! * [`profile`]: the column-profile calculus for two-dimensional codes.
//! * [`equiv`]: monomial maps and canonical forms of `k = 2` codes.
//! * [`bounds`]: closed-form values and bounds for `LD(n, k)`.
//! * [`construct`]: explicit optimal `[n, 2]` LCD constructions and the
//!   dimension-extension step.
//! * [`oracle`]: exhaustive search for ground truth.
//! * [`cli`]: the `lcd` command-line tool.

pub mod algebra;
pub mod bounds;
pub mod cli;
pub mod code;
pub mod construct;
pub mod equiv;
mod error;
pub mod oracle;
pub mod profile;

pub use algebra::{Fe, Field, Form, Matrix};
pub use code::{LinearCode, WeightDistribution};
pub use error::{Error, Result};
pub use profile::ColumnProfile;
