//! Exact enumeration of occurrences of the vincular pattern 13-2 in
//! flattened permutations.
//!
//! Three independent routes produce the same numbers:
//!
//! - [`permcore`]: brute-force enumeration of the symmetric group, flattening
//!   every permutation and scanning it for occurrences;
//! - [`recurrence`]: the q-polynomial recurrences for `g_n` and `g_n(1k)`;
//! - [`genfun`]: the kernel-method pipeline producing the bivariate series
//!   `G_r(x, v)`, the integer polynomials `P_r(x, v)` and their `c_{r,l}(x)`
//!   decomposition.
//!
//! [`exactalg`] supplies the arbitrary-precision algebra all three share and
//! [`verify`] bundles the identity checks into itemised reports.

pub mod error;
pub mod exactalg;
pub mod genfun;
pub mod permcore;
pub mod recurrence;
pub mod verify;

pub use error::{Error, Result};
