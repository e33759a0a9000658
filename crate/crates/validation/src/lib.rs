//! Acceptance harness for `catwva`; the checks live in `tests/acceptance.rs`
//! and print one PASS/FAIL line per criterion.
