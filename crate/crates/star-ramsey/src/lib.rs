//! Star Ramsey numbers, end to end: closed-form thresholds, explicit
//! extremal colorings that certify the lower bounds, and an exact search
//! that independently re-derives every number at small scale.
//!
//! A graph `G` *arrows* `(K_{1,m_1}, ..., K_{1,m_t})` if every `t`-coloring
//! of its edges contains a monochromatic star `K_{1,m_i}` in some color `i`;
//! equivalently, some color class has a vertex of degree `m_i`. This crate
//! computes the thresholds at which arrowing becomes unavoidable:
//!
//! * [`formulas::ramsey_stars`]: the least complete-graph order,
//! * [`formulas::star_critical_stars`]: how much of the last vertex's star
//!   `K_{r-1}` really needs,
//! * [`formulas::regular_ramsey_stars`] and [`formulas::regular_threshold_g`]:
//!   the degree at which regularity forces arrowing,
//! * [`formulas::min_degree_threshold_f`]: the minimum-degree version.
//!
//! [`construct`] builds the extremal colorings behind each formula and
//! [`arrow`] decides arrowing by exhaustive backtracking, so the two sides
//! check each other; [`selftest`] packages that agreement into one runnable
//! suite.
//!
//! ```
//! use star_ramsey::{formulas, params::StarParams};
//!
//! let p = StarParams::new(vec![2, 2]).unwrap();
//! assert_eq!(formulas::ramsey_stars(&p), 3);
//! let (r_star, rr, r) = formulas::threshold_chain(&p).unwrap();
//! assert!((1..=rr).contains(&r_star) && rr < r);
//! ```

pub mod arrow;
pub mod cli;
pub mod coloring;
pub mod construct;
pub mod error;
pub mod factorize;
pub mod formulas;
pub mod graph;
pub mod json;
pub mod params;
pub mod selftest;

pub use coloring::{Decomposition, EdgeColoring};
pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder, MAX_VERTICES};
pub use params::StarParams;
