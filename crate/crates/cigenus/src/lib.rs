//! Exact genus bounds for curves lying on complete intersection surfaces.
//!
//! A curve `C ⊂ P^n` of degree `d` lying on a surface cut out by hypersurfaces
//! of degrees `k_1 ≤ ... ≤ k_{n-2}` has its genus controlled by the Hilbert
//! function of a general hyperplane section. This crate computes that bound
//! three ways, all in exact arithmetic:
//!
//! * [`bounds::closed_form_bound`], the explicit polynomial in `d`, `k_i`, `ε`;
//! * the relaxed optimizer in [`optimize`], which rebuilds the same value from
//!   an extremal profile;
//! * the tight optimizer, which keeps the Hilbert-function envelope and is
//!   never weaker.
//!
//! [`hilbert`] supplies the Koszul alternating sums with two independent
//! oracles, and [`verify`] bundles the cross-checks that the `cigenus` binary
//! exposes as `cigenus verify`.
//!
//! ```
//! use cigenus::bounds::{bound_report, ModeSet};
//! use cigenus::gamma::{CurveInstance, SurfaceSpec};
//!
//! let surface = SurfaceSpec::new(4, vec![2, 2])?;
//! let report = bound_report(&CurveInstance::new(surface, 20)?, ModeSet::ALL);
//! assert_eq!(report.closed_form.as_ref().unwrap().to_string(), "42");
//! assert_eq!(report.tight_bound().unwrap().to_string(), "41");
//! # Ok::<(), cigenus::Error>(())
//! ```

pub mod bounds;
pub mod check;
pub mod error;
pub mod exactnum;
pub mod gamma;
pub mod hilbert;
pub mod optimize;
pub mod report;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};

// The guide's Rust snippets run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    mod exact_arithmetic {}
    #[doc = include_str!("../../../book/src/hilbert-functions.md")]
    mod hilbert_functions {}
    #[doc = include_str!("../../../book/src/profiles.md")]
    mod profiles {}
    #[doc = include_str!("../../../book/src/optimization.md")]
    mod optimization {}
    #[doc = include_str!("../../../book/src/closed-form.md")]
    mod closed_form {}
    #[doc = include_str!("../../../book/src/audits.md")]
    mod audits {}
    #[doc = include_str!("../../../book/src/threefolds.md")]
    mod threefolds {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
