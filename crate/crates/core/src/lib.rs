//! Matching extendability of (4,5,6)-fullerenes.
//!
//! A (4,5,6)-fullerene is a cubic plane graph whose faces are quadrilaterals,
//! pentagons and hexagons. This crate decides 1-, 2- and 3-extendability,
//! computes anti-Kekulé numbers, builds and recognizes the tube family, and
//! generates every such graph up to a vertex bound so that the structural
//! theory can be checked exhaustively.

pub mod antikekule;
pub mod enumerator;
pub mod extendability;
pub mod families;
pub mod graph;
pub mod harness;
pub mod matching;
pub mod planar_code;
