//! Geometry of the limit set: exit points, arcs, dimension ratios and
//! connectivity probes.

mod arc;
mod coords;
mod dimension;
mod probe;

pub use arc::{arc_approximation, ArcApproximation, HalfPoint};
pub use coords::{
    cell_is_white, exit_coordinates, exit_membership_counts, exit_point, ExitCoordinates,
    ExitPoints, Point,
};
pub use dimension::{dimension_estimate, ln_big, DimensionEstimate, DimensionLevel};
pub use probe::{
    connectivity_probe, disconnectedness_probe, ConnectLevel, DisconnectLevel,
};
