//! Orbit decomposition, exhaustive verification suites, diagram rendering
//! and report export for `vpro-core`.

pub mod error;
pub mod oracles;
pub mod orbit;
pub mod render;
pub mod report;
pub mod suites;

pub use error::{Error, Result};
pub use orbit::{orbit_decomposition, OrbitReport, Params};
pub use render::{parse_input, render_diagram, Diagrammable, RenderFormat};
pub use report::{export_report, Claim, Format, VerificationReport};
pub use suites::{orbit_report, run_suite, SuiteConfig, ACTIONS, SUITES};
