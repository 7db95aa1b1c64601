//! Master-equation generators and propagation (stub).
