//! Rank-one perturbation laws (stub).
