//! Seeded sampling of Wigner matrices and Monte Carlo estimates of the
//! normalized joint cumulants of their traces.

mod estimate;
mod law;
mod sample;

pub use estimate::{empirical_fluctuation, joint_cumulant, Fluctuation};
pub use law::EntryLaw;
pub use sample::{sample, trace_powers, WignerSample};
