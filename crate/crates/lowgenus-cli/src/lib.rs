//! Output records and formatting for the lowgenus command-line tool.

pub mod output;
