//! Shared data and checks for the integration tests.
#![allow(dead_code)]

pub mod checks;
pub mod envelopes;
pub mod golden;
