//! Exact integer combinatorics (stub).
pub struct DecompositionTable;
pub struct SemiclassicalSchedule;
