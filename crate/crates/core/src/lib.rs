//! Exact character tables, Brauer p-blocks and defect-group exponent checks
//! for finite groups small enough to enumerate.
//!
//! The crate is organised bottom-up:
//!
//! * [`group`]: permutation and matrix groups, conjugacy classes, centers,
//!   derived subgroups and coset orders.
//! * [`chartab`]: exact cyclotomic numbers and character tables computed by
//!   the Dixon–Schneider method.
//! * [`blocks`]: p-blocks, defects and defect-group exponents read off the
//!   table.
//! * [`checks`]: the per-character checks and their reports.
//! * [`sym`]: partition combinatorics for symmetric groups and their double
//!   covers, independent of any group computation.
//! * [`io`] and [`survey`]: file formats and the corpus survey.
//!
//! ```
//! use blockcheck::{chartab, group::families};
//!
//! let s4 = families::symmetric(4);
//! let table = chartab::character_table(&s4).unwrap();
//! assert_eq!(table.degrees(), vec![1, 1, 2, 3, 3]);
//! ```

pub mod arith;
pub mod blocks;
pub mod chartab;
pub mod checks;
pub mod error;
pub mod group;
pub mod io;
pub mod poly;
pub mod survey;
pub mod sym;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/tables.md")]
    mod tables {}
    #[doc = include_str!("../../../book/src/blocks.md")]
    mod blocks {}
    #[doc = include_str!("../../../book/src/checks.md")]
    mod checks {}
    #[doc = include_str!("../../../book/src/symmetric.md")]
    mod symmetric {}
    #[doc = include_str!("../../../book/src/formats.md")]
    mod formats {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
