//! Input files, JSON reports, family constructors, the planar enumeration
//! and batch runs.

pub mod batch;
pub mod enumerate;
pub mod family;
pub mod format;
pub mod report;

pub use batch::{batch, directory_files, BatchOutcome, ExitStatus};
pub use enumerate::enumerate_2d;
pub use family::{construct, standard_corpus};
pub use format::{parse, parse_file, to_text};
pub use report::{report_json, to_pretty, write_report};
