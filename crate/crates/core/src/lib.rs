//! Coset codes over matrix rings and cyclic division algebras: finite ring
//! arithmetic, cyclic-algebra isomorphisms onto matrix rings, the Golden
//! code, outer codes with Hamming/Bachoc/Lee weights, coding bounds and
//! brute-force oracles.

pub mod bounds;
pub mod cyclic;
pub mod exec;
pub mod golden;
pub mod matrices;
pub mod outer_codes;
pub mod parse;
pub mod rings;
pub mod surd;
pub mod verify;

pub use exec::Exec;
