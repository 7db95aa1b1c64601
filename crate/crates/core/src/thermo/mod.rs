//! Heat currents and state metrics (stub).
