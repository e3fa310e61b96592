//! Finite, checkable constructions from the theory of better-quasi-orders.
//!
//! - [`seqcore`]: increasing sequences, domination `⪻` and the shift `◁`.
//! - [`families`]: window blocks, smoothness and the smoothing `C ↦ C*`.
//! - [`pouzet`]: the partial order carved out of an arbitrary relation.
//! - [`arrays`]: arrays on window blocks, good pairs and perfection.
//! - [`reduction`]: the map from a code and a point to `(Q_x, R_x)`.
//!
//! Everything works inside a finite [`Window`](families::Window); verdicts
//! that truncation cannot settle are reported as such.

pub mod arrays;
pub mod corpus;
pub mod error;
pub mod families;
pub mod pouzet;
pub mod reduction;
pub mod seqcore;

pub use error::{Error, Result};
pub use arrays::BlockArray;
pub use families::{SeqFamily, Window};
pub use pouzet::{OrderMatrix, RelationMatrix};
pub use reduction::{QxPoint, SigmaCode, Triple};
pub use seqcore::{FinSeq, FreeSeq};
