//! File formats, reports and the verification sweep behind the `idealis`
//! command-line tool.

pub mod format;
pub mod report;
pub mod verify;
