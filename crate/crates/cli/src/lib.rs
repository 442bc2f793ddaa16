//! Verification suites, enumeration, parametrization and export behind the
//! `foulkes` binary.

pub mod output;
pub mod report;
pub mod suites;

pub use output::{CommandError, Format, Table};
pub use report::{CheckOutcome, Status, VerificationReport};
pub use suites::{cmd_verify, Caps, Suite};
