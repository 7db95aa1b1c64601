//! Decay-rate and Lamb-shift coefficients (stub).
