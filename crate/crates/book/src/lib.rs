//! The guide in `book/`, compiled as doc modules so that every listing in it
//! runs as a doctest.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/hyperbolic.md")]
pub mod hyperbolic {}

#[doc = include_str!("../../../book/src/hilbert.md")]
pub mod hilbert {}

#[doc = include_str!("../../../book/src/visual-angle.md")]
pub mod visual_angle {}

#[doc = include_str!("../../../book/src/distortion.md")]
pub mod distortion {}

#[doc = include_str!("../../../book/src/circles.md")]
pub mod circles {}

#[doc = include_str!("../../../book/src/midpoints.md")]
pub mod midpoints {}

#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
pub struct Readme;
