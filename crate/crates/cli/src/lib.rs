//! Command-line front end for `weylroots-core`: output formats, named
//! verification suites and the `weylroots` binary's dispatcher.

pub mod app;
pub mod format;
pub mod suites;

pub use app::run;
