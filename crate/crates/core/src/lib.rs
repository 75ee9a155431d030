pub mod discrete;
pub mod fgab;
pub mod invariants;
pub mod moncat;
