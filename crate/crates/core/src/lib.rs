//! Exact Reidemeister torsion (twisted Alexander polynomials) of knot groups
//! and the monic-polynomial obstruction to fiberedness.
//!
//! The pipeline: parse a deficiency-one [`group::Presentation`], pick a
//! unimodular [`rep::Representation`], assemble the Alexander matrix with
//! Fox calculus ([`fox`]), and take the quotient of determinants
//! ([`torsion::reidemeister_torsion`]). A non-monic torsion for an
//! even-dimensional representation certifies that the knot is not fibered.

pub mod algebra;
pub mod catalog;
pub mod fox;
pub mod group;
pub mod par;
pub mod rep;
pub mod torsion;
