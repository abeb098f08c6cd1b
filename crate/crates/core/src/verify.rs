//! Verification suites (stub).
