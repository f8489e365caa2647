use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),
    #[error("zero vector has no direction")]
    ZeroVector,

    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("polygon is not strictly convex counter-clockwise at vertex {0}")]
    NotStrictlyConvex(usize),
    #[error("polygon repeats a vertex at index {0}")]
    RepeatedVertex(usize),
    #[error("point is not on the polygon boundary")]
    NotOnBoundary,
    #[error("index {0} is not a polygon vertex")]
    NoSuchVertex(usize),

    #[error("grid is empty")]
    EmptyGrid,
    #[error("grid bounding box is not tight: {0}")]
    NotTight(&'static str),
    #[error("malformed grid row {row}: {reason}")]
    MalformedRow { row: usize, reason: String },
    #[error("cell ({col}, {row}) is not in the grid")]
    CellNotInGrid { col: i64, row: i64 },
    #[error("grid is not orthogonally connected")]
    GridDisconnected,
    #[error("rasterization produced no cells")]
    EmptyRaster,
    #[error("cell size must be positive")]
    NonPositiveCellSize,
    #[error("invalid generator parameters: {0}")]
    GeneratorParams(&'static str),
    #[error("generator gave up after {0} attempts")]
    GeneratorExhausted(usize),

    #[error("rectangle {0} has min above max")]
    InvalidRect(usize),
    #[error("rectangle complex has no rectangles")]
    EmptyComplex,
    #[error("point is not in the rectangle complex")]
    PointNotInComplex,
    #[error("rectangle complex is not connected")]
    ComplexDisconnected,

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("point lies in the interior of an obstacle")]
    InsideObstacle,
    #[error("obstacles {0} and {1} intersect")]
    ObstaclesIntersect(usize, usize),
    #[error("window does not leave the required margin around obstacle {0}")]
    WindowTooSmall(usize),
    #[error("point lies outside the routing window")]
    OutsideWindow,
    #[error("endpoints coincide")]
    CoincidentEndpoints,
    #[error("no route found after {refinements} refinements (finest cell size {finest})")]
    ResolutionExhausted { refinements: usize, finest: String },
    #[error("no candidate route verified: {0}")]
    RouteUnverified(String),
}
