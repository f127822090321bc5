//! Holds only the `acceptance` test; see `tests/acceptance.rs`.
