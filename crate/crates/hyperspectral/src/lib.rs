//! File formats, claim checks and table output on top of `hyperspectral-core`.

pub mod claims;
pub mod format;
pub mod table;
