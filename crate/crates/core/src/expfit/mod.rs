//! Exponential decompositions of bath correlation functions (stub).
