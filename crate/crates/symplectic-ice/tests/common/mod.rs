#![allow(dead_code)]
//! Independent brute-force oracle for lattice states and partition
//! functions. Deliberately shares no code with the engine beyond the ring.

pub mod oracle;
