//! CLI library (stub).
