use core::fmt;

/// Errors raised by the geometric kernels and the query structures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Error {
    /// Three points passed to a circumcircle routine are collinear.
    DegenerateTriangle,
    /// Two points that must be distinct coincide.
    CoincidentPoints,
    /// The cleaned vertex cycle of a polygon is not convex.
    NotConvex,
    /// A point expected strictly outside a polygon is inside or on it.
    PointNotOutside,
    /// Two polygons whose interiors must be disjoint overlap.
    PolygonsIntersect,
    /// A point expected on a polygon boundary is not.
    PointNotOnBoundary,
    /// An input point set is empty.
    EmptyInput,
    /// Fewer than two distinct input points.
    TooFewPoints,
    /// A non-finite coordinate was supplied.
    NonFinite,
    /// A ray misses the region it was aimed at.
    NoIntersection,
    /// The second node is not a strict ancestor of the first.
    NotAncestor,
    /// The two nodes are already adjacent on the root path.
    AlreadyAdjacent,
    /// The seed location is not a separating point.
    SeedFailure,
    /// A search invariant was violated.
    InvariantBroken,
    /// The final tangency solve found no root in the search interval.
    NoRoot,
    /// Input is degenerate for the requested operation (e.g. collinear).
    Degenerate,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            Error::DegenerateTriangle => "points are collinear",
            Error::CoincidentPoints => "points coincide",
            Error::NotConvex => "polygon is not convex",
            Error::PointNotOutside => "point is not strictly outside the polygon",
            Error::PolygonsIntersect => "polygon interiors intersect",
            Error::PointNotOnBoundary => "point is not on the polygon boundary",
            Error::EmptyInput => "empty input",
            Error::TooFewPoints => "fewer than two distinct points",
            Error::NonFinite => "non-finite coordinate",
            Error::NoIntersection => "ray does not reach the region",
            Error::NotAncestor => "node is not a strict ancestor",
            Error::AlreadyAdjacent => "nodes are already adjacent",
            Error::SeedFailure => "seed location is not separating",
            Error::InvariantBroken => "search invariant violated",
            Error::NoRoot => "no tangency root in interval",
            Error::Degenerate => "degenerate input",
        };
        f.write_str(msg)
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
