//! Exact arithmetic on three families of Farey subsequences.
//!
//! For an order `n` and a parameter `m` this crate works with
//!
//! * `F_n^m`: fractions of the Farey sequence `F_n` whose numerator is at most `m`,
//! * `G_n^m`: fractions of `F_n` with `k - h <= n - m`,
//! * `F(B(n),m)`: the intersection of the two, i.e. the fractions `rho(b & a) / rho(b)`
//!   attached to an element `a` of rank `m` in the Boolean lattice of rank `n`,
//!
//! together with the left and right halves of `F(B(n),m)` split at `1/2`.
//!
//! Everything is integer arithmetic on reduced pairs `h/k`; no floating point
//! is used anywhere. The main entry points are:
//!
//! * [`Fraction`] and [`UnimodularMap`] in [`fraction`],
//! * [`SequenceSpec`], [`enumerate`] (the brute-force reference) and the fast
//!   generators [`iterate_g`], [`iterate_f`], [`generate_boolean`] in [`sequence`],
//! * closed-form neighbor queries in [`neighbors`],
//! * Moebius-sum cardinality and rank formulas in [`counting`],
//! * the catalog of monotone bijections and injections in [`maps`].
//!
//! ```
//! use farey_subseq::{generate_boolean, format_plain};
//!
//! let seq = generate_boolean(6, 4).unwrap();
//! assert_eq!(format_plain(&seq), "0/1 1/3 1/2 3/5 2/3 3/4 4/5 1/1");
//! ```

pub mod counting;
mod error;
pub mod fraction;
pub mod maps;
pub mod neighbors;
pub mod sequence;

pub use counting::{
    boolean_cardinality, central_identity_check, f_cardinality, g_cardinality, g_rank, moebius,
    phi_interval, MoebiusTable,
};
pub use error::{Error, Result};
pub use fraction::{adjacency_determinant, Fraction, UnimodularMap};
pub use maps::{apply_named, catalog, verify_map, MapId, NamedMap, VerificationReport};
pub use neighbors::{
    boolean_special_neighbors, f_predecessor, f_successor, g_predecessor, g_successor,
    NeighborResult,
};
pub use sequence::{
    enumerate, format_plain, generate_boolean, halfsequences, iterate_f, iterate_g, member, Kind,
    SequenceSpec,
};
