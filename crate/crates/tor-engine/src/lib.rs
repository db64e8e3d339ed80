//! Tor of the trivial module over finite-dimensional augmented algebras.
//!
//! Every structure-constant algebra in this workspace carries an augmentation
//! onto its one-dimensional trivial module 𝕥 (full-through diagrams act by 1,
//! everything else by 0). This crate computes `dim Tor_q(𝕥, 𝕥)` for such an
//! algebra over its coefficient field by building a free left resolution with
//! exact kernel stages:
//!
//! * **Stage loop** ([`free_resolution`], [`tor_dims`]): `F_0 = A` augments
//!   onto 𝕥; at each stage the kernel of the current differential is computed
//!   as an exact null space, a spanning set of kernel vectors becomes the next
//!   free module's generators, and the process repeats. Applying the
//!   augmentation entrywise to the differentials collapses each `F_k` to
//!   `field^{g_k}`; Tor is the homology of that small complex. Homology does
//!   not depend on which spanning set is chosen, and [`GeneratorChoice`]
//!   makes that testable: the full kernel basis, the reversed basis, and a
//!   greedily pruned generating set must all report the same dimensions.
//!
//! * **Resource ceilings** ([`ResourceCaps`]): three deterministic guards —
//!   on the coordinate size of a stage, on the working cells of one
//!   elimination, and on the estimated cost of one greedy prune — degrade a
//!   too-large run into an honest partial report flagged with the reason,
//!   never into an out-of-memory or an open-ended stall.
//!
//! * **Cyclic-group oracle** ([`cyclic_group_oracle`]): the group algebra of
//!   a cyclic group has an explicit two-periodic free resolution alternating
//!   multiplication by `g − 1` and by the norm element. The oracle builds
//!   those two matrices directly, proves the complex exact by rank counting,
//!   and reads the dimensions off the augmented differentials — an
//!   implementation completely independent of the stage loop, used to
//!   cross-check it.
//!
//! Reports ([`TorReport`]) render as stable structured text and compare
//! degree-by-degree with [`compare_reports`].

pub mod engine;
pub mod oracle;
pub mod report;

pub use engine::{
    free_resolution, tor_dims, tor_dims_with, FreeResolutionStage, Resolution, ResourceCaps,
    TorOptions,
};
pub use oracle::cyclic_group_oracle;
pub use report::{compare_reports, GeneratorChoice, TorReport};
