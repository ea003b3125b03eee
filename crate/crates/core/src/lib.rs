//! Left-to-right maxima in Dyck paths.
//!
//! * [`series`] and [`jet`]: exact truncated power series, generic over the
//!   coefficient type.
//! * [`paths`]: brute-force enumeration, the ground truth.
//! * [`genfun`]: generating functions by height and their totals.
//! * [`exact`]: divisor-function closed forms with big integers.
//! * [`asympt`]: asymptotic means and numeric checks.

pub mod asympt;
pub mod error;
pub mod exact;
pub mod genfun;
pub mod jet;
pub mod paths;
pub mod scalar;
pub mod series;

pub use error::{Error, Result};
pub use exact::{BigCount, ClosedForm, DivisorTable};
pub use jet::Jet;
pub use paths::{DyckPath, PathStats, Step, Totals};
pub use scalar::{Rational, Scalar};
pub use series::{Series, Var};

/// Exact series, the default everywhere counts are extracted.
pub type RationalSeries = Series<Rational>;
pub type RationalJet = Jet<Rational>;
pub type RationalUForm = genfun::UForm<Rational>;

/// Floating-point series for quick numeric work.
pub type F64Series = Series<f64>;
pub type F32Series = Series<f32>;
pub type F64Jet = Jet<f64>;
