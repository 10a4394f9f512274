//! Kernelization and compression for parameterized counting problems on graphs.
//!
//! The crate is organised around a handful of layers:
//!
//! * [`graph`]: simple undirected graphs, the file format, the structural
//!   transformations shared by the constructions, and tree decompositions.
//! * [`oracles`]: exponential-time exact counters used as ground truth.
//! * [`framework`]: counting compressions and parameter transformations as
//!   `reduce`/`lift` pairs with a serialisable lift context, plus composition.
//! * [`vc_kernel`]: the polynomial kernel for counting vertex covers and the
//!   quadratic kernel for counting minimal vertex covers.
//! * [`compositions`]: the SUM and EXACT cross-compositions for counting
//!   minimum `(s,t)`-cuts and the transformations min-cut → OCT → vertex cover.
//! * [`suites`]: oracle-backed property sweeps used by the CLI `verify`
//!   command and the acceptance tests.

pub mod compositions;
pub mod count;
pub mod error;
pub mod exec;
pub mod framework;
pub mod graph;
pub mod oracles;
pub mod suites;
pub mod vc_kernel;

pub use count::BigCount;
pub use error::{Error, Result};
pub use exec::Execution;
pub use graph::{Graph, GraphFile, TerminalPair, TreeDecomposition};
