//! Lie metabelian symmetric elements in integral group rings of finite groups.
//!
//! Two independent routes decide whether the symmetric elements `ZG⁺` of the
//! group ring under `g ↦ g⁻¹` satisfy `[[a, b], [c, d]] = 0`:
//!
//! * [`lie`] evaluates brackets of the module generators `X⁺` exactly;
//! * [`classify`] checks the structural conditions on `G` alone.
//!
//! [`audit`] replays the explicit ring identities behind those conditions on
//! concrete groups, and [`report`] ties everything into the serialisable
//! documents the `liemeta` binary prints.

pub mod audit;
pub mod catalog;
pub mod classify;
pub mod group;
pub mod groupfile;
pub mod lie;
pub mod report;
pub mod ring;

pub use group::{Group, GroupError, Subgroup};
pub use ring::{RingElement, RingError};
