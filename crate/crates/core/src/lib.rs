//! Exact verification kit for the twisted N=2 superconformal algebra and its
//! intermediate-series modules.
//!
//! Layers, bottom up: [`exact`] arithmetic, the [`algebra`] itself, weight
//! [`module`]s, the [`constraints`] regenerated from operator identities on
//! generic candidates, and the [`deform`]ations of reducible modules.

pub mod algebra;
pub mod constraints;
pub mod deform;
pub mod exact;
pub mod index;
pub mod module;
pub mod report;
pub mod workers;
