//! Exact classification of convex presentations of genus-two translation
//! surfaces.
//!
//! The crate enumerates splitting prototypes in the strata `H(2)` and
//! `H(1,1)`, follows vertical separatrices down to the simple cylinder, and
//! decides convexity of the resulting canonical octagons and decagons with
//! exact arithmetic in `Q(√D)`. Lattice-polygon searches back the
//! square-tiled cases.

pub mod bigdisc;
pub mod error;
pub mod exactnum;
pub mod geometry;
pub mod h11;
pub mod h2;
pub mod lattice;
pub mod report;

pub use error::{Error, Result};
pub use exactnum::{format_rat, lambda_of, parse_rat, rat, rat_int, QuadVal, Rat};
pub use geometry::{convexity_of_vertices, shoelace_area, Convexity, Point};
pub use h11::{CanonicalDecagon, FlowdownH11, PrototypeH11};
pub use h2::{CanonicalOctagon, FlowdownH2, PrototypeH2, ScanRecordH2};
pub use lattice::LatticePolygon;
