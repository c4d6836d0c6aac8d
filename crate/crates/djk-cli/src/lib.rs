//! Library surface of the `djk` binary: the algebra file format, shared by
//! the CLI and its integration tests.

pub mod format;
