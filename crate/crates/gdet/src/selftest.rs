//! The packaged acceptance suite.
