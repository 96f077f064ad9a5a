//! Coset enumeration, Nielsen moves and generating transversals for finite
//! index subgroups of finitely presented groups.
//!
//! ```
//! use transversals::{parse_presentation, todd_coxeter, EnumLimits};
//!
//! let (p, h) = parse_presentation("generators: a b\nrelators: aa bb ababab\nsubgroup: a\n").unwrap();
//! let t = todd_coxeter(&p, &h, EnumLimits::default()).unwrap();
//! assert_eq!(t.index(), 3);
//! ```

pub mod chessboard;
pub mod coset_enum;
pub mod error;
pub mod nielsen;
pub mod oracle;
pub mod presentation;
pub mod primitives;
pub mod shifting_boxes;
pub mod words;

pub use chessboard::{decompose, diagonal_transversal, Block, ChessboardDecomposition};
pub use coset_enum::{todd_coxeter, CosetId, CosetTable, EnumLimits};
pub use error::{Error, Result};
pub use nielsen::{replay, GeneratingTuple, MoveLog, NielsenMove, Sign};
pub use presentation::{parse_presentation, Presentation, SubgroupSpec};
pub use shifting_boxes::{Transversal, TransversalKind};
pub use words::{Alphabet, Letter, Word};
