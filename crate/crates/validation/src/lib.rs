//! Acceptance checks for `wigner-moments`, run with `cargo test -p wigner-validation`.
//!
//! The checks live in `tests/acceptance.rs` and print one PASS/FAIL line per criterion.
