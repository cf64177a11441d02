//! Two models for tensor products of single-column Kirillov–Reshetikhin
//! crystals in types `A`, `B`, `C`, `D`, and the bijection between them.
//!
//! The quantum alcove model indexes elements by admissible subsets of a
//! `λ`-chain of roots ([`chains`], [`alcove`]); the tableau model by tuples
//! of Kashiwara–Nakashima columns ([`tableaux`]). [`alcove::sfill`] maps the
//! first to the second and [`inverse::invert`] goes back.
//!
//! ```
//! use qalcove::{alcove, chains, roots::{LieType, Weight}};
//!
//! let lie = LieType::a(3).unwrap();
//! let lambda = Weight::from_partition(&lie, &[3, 2]).unwrap();
//! let chain = chains::lambda_chain(&lie, &lambda).unwrap();
//! let j = alcove::admissible(&chain, vec![1, 2, 3, 5]).unwrap();
//! assert_eq!(alcove::sfill(&chain, &j).unwrap().to_string(), "[2,3][1,2][1]");
//! ```

pub mod alcove;
pub mod alphabet;
pub mod chains;
pub mod error;
pub mod inverse;
pub mod oracle;
pub mod qbg;
pub mod roots;
pub mod tableaux;
pub mod weyl;

pub use alcove::{AdmissibleSubset, Filling};
pub use alphabet::{Circle, Letter};
pub use chains::{LambdaChain, Segment, Side};
pub use error::{Error, Result};
pub use inverse::{BlockFlavor, FoldingSequence, Inversion, TraceStep};
pub use qbg::{EdgeKind, Qbg};
pub use roots::{Family, LieType, Root, Weight};
pub use tableaux::{SplitColumn, TableauElement};
pub use weyl::WeylElement;
