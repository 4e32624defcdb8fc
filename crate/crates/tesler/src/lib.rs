//! Exact-arithmetic toolkit for Tesler polytopes and flow polytopes of
//! complete graphs.
//!
//! The lattice points of the Tesler polytope with hook sums
//! `a = (a_1,…,a_n)` are the Tesler matrices: upper-triangular nonnegative
//! integer matrices whose k-th row sum minus k-th column sum (diagonal
//! excluded) equals `a_k`. Everything here is exact — big integers and big
//! rationals throughout, no floating point.
//!
//! * [`core`] — the domain types and the coordinate bijections between
//!   Tesler matrices, integer flows on `k_{n+1}`, and transportation points.
//! * [`kostant`] — Kostant partition functions, counting and enumeration of
//!   Tesler matrices, the diagonal-projection recursion, permutation Tesler
//!   matrices.
//! * [`faces`] — Tesler tableaux, the face poset, f-vectors, vertices,
//!   simplicity, h-vectors.
//! * [`volume`] — Lidskii volume and count expansions, closed-form products,
//!   the constant-term recursion `C_n(ℓ,a,c)` and `L_n(a,c)`, the Morris
//!   product, Pitman-Stanley counts.
//! * [`harmonics`] — Haglund and Gorsky-Negut q,t-weights, Hilbert series of
//!   diagonal harmonics and its alternant, parking functions and Dyck paths.
//! * [`verify`] — named cross-check suites runnable up to a size bound.
//!
//! Every operation is a pure function over immutable values and safe to call
//! from multiple threads.

pub mod core;
pub mod error;
pub mod faces;
pub mod gamma;
pub mod harmonics;
pub mod kostant;
pub mod qt;
mod util;
pub mod verify;
pub mod volume;

pub use crate::core::{
    flow_to_tesler, hook_sum, signature, tesler_to_flow, tesler_to_transportation,
    transportation_to_tesler, Flow, HookSums, Sign, Signature, TeslerMatrix, TeslerTableau,
    TransportationPoint,
};
pub use error::{Error, Result};
pub use faces::{
    build_face_poset, check_tableau, f_vector, h_vector, is_simple, outdegree_gf, reduce_hooks,
    tableau_dim, tableau_max, vertex_degrees, vertices, FacePoset,
};
pub use gamma::GammaHalf;
pub use harmonics::{
    gorsky_negut_weight, haglund_weight, hilbert_alternant, hilbert_dh, parking_gf,
    perm_tesler_sum, qt_catalan, DyckPath, ParkingFunction,
};
pub use kostant::{
    count_tesler, count_via_projection, enumerate_tesler, for_each_tesler,
    for_each_tesler_while, kostant,
    kostant_reversed_equal, permutation_teslers, KostantSolver, NetflowVector,
};
pub use qt::{qt_bracket, QTPoly};
pub use volume::{
    c_constant, catalan, cry_volume, l_value, lidskii_count, lidskii_volume, morris_m,
    pitman_stanley_count, syt_staircase, vol_ones_closed,
};
