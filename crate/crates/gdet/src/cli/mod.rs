//! Command-line front end.

/// Entry point for the `gdet` binary; returns the process exit code.
pub fn main() -> i32 {
    0
}
