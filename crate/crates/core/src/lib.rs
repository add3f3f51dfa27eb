//! Uniform clutters, their simplicial orders, and the algebraic invariants of chordal clutters.
//!
//! A d-uniform clutter on `[n]` is chordal when its submaximal circuits can be deleted one by one
//! through simplicial elements until nothing is left. The sizes of the neighborhoods met along the
//! way do not depend on the order chosen, and they determine the f-vector and h-vector of the clique
//! complex and the Betti numbers of the circuit ideal. The [`macaulay`] module describes which
//! neighborhood counts occur at all.
//!
//! ```
//! use clutterlab::{Clutter, find_simplicial_order, betti_from_multiset};
//!
//! let c = Clutter::new(5, 3, &[vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4], vec![1, 4, 5]]).unwrap();
//! let order = find_simplicial_order(&c).order().cloned().unwrap();
//! let betti = betti_from_multiset(5, 3, &order.multiset()).unwrap();
//! assert_eq!(betti.to_string(), "(5,6,2)");
//! ```

pub mod binomial;
pub mod chordality;
pub mod clutter;
pub mod error;
#[cfg(feature = "random")]
pub mod generate;
pub mod homology;
pub mod ideal;
pub mod invariants;
pub mod io;
pub mod macaulay;
pub mod poly;
pub mod serde_int;
pub mod vertex_set;

pub use chordality::{
    co_chordal_with, enumerate_simplicial_orders, find_simplicial_order, find_simplicial_order_with,
    greedy_simplicial_order, is_co_chordal, lambda_sequence, simplicial_elements, simplicial_multiset,
    CoChordality, LambdaSequence, Multiset, SearchConfig, SearchOutcome, SimplicialOrder, Step,
};
pub use clutter::Clutter;
pub use error::{Error, Result};
pub use homology::{has_linear_resolution, hochster_betti, GradedBettiTable, OracleLimits};
pub use ideal::SquarefreeIdeal;
pub use invariants::{
    betti_from_h, betti_from_multiset, f_from_h, f_polynomial_from_multiset, f_vector_direct,
    f_vector_from_multiset, h_from_f, h_vector_explicit, h_vector_from_multiset, multiplicity,
    BettiSequence, FVector, HVector,
};
pub use io::{parse_clutter, to_json, to_text};
pub use poly::IntPolynomial;
pub use vertex_set::{VertexSet, MAX_VERTICES};
