//! Holds the workspace acceptance suite in `tests/acceptance.rs`; the package sorts after the
//! library crates so their suites run first.
