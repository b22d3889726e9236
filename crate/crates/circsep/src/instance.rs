//! Instance files: a point set and a batch of queries, as JSON.
//!
//! ```json
//! {
//!   "points": [[0, 0], [2, 0]],
//!   "queries": [
//!     {"type": "point", "at": [1, 0.5]},
//!     {"type": "circle", "center": [1, 3], "radius": 0.5},
//!     {"type": "polygon", "vertices": [[0, 1], [2, 1], [2, 2], [0, 2]]}
//!   ]
//! }
//! ```

use circsep_core::convex::make_polygon;
use circsep_core::engine::QueryShape;
use circsep_core::{Circle, Point};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Largest accepted coordinate magnitude.
pub const MAX_COORD: f64 = 1e12;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(default)]
    pub points: Vec<[f64; 2]>,
    #[serde(default)]
    pub queries: Vec<QuerySpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum QuerySpec {
    Point { at: [f64; 2] },
    Circle { center: [f64; 2], radius: f64 },
    Polygon { vertices: Vec<[f64; 2]> },
}

fn check_coord(v: f64, what: &str) -> Result<(), CliError> {
    if !v.is_finite() || v.abs() > MAX_COORD {
        return Err(CliError::parse(what, format!("coordinate {v} outside [-{MAX_COORD:e}, {MAX_COORD:e}]")));
    }
    Ok(())
}

fn point(p: [f64; 2], what: &str) -> Result<Point, CliError> {
    check_coord(p[0], what)?;
    check_coord(p[1], what)?;
    Ok(Point::new(p[0], p[1]))
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let inst: InstanceFile = serde_json::from_str(text).map_err(|e| CliError::parse("instance", e))?;
        for (i, p) in inst.points.iter().enumerate() {
            point(*p, &format!("points[{i}]"))?;
        }
        Ok(inst)
    }

    pub fn points(&self) -> Vec<Point> {
        self.points.iter().map(|p| Point::new(p[0], p[1])).collect()
    }

    /// Query shapes in file order.
    pub fn shapes(&self) -> Result<Vec<QueryShape>, CliError> {
        self.queries
            .iter()
            .enumerate()
            .map(|(i, q)| q.to_shape().map_err(|e| match e {
                CliError::Parse { message, .. } => CliError::parse(format!("queries[{i}]"), message),
                other => other,
            }))
            .collect()
    }
}

impl QuerySpec {
    pub fn to_shape(&self) -> Result<QueryShape, CliError> {
        match self {
            QuerySpec::Point { at } => Ok(QueryShape::Point(point(*at, "query")?)),
            QuerySpec::Circle { center, radius } => {
                check_coord(*radius, "query")?;
                if *radius < 0.0 {
                    return Err(CliError::parse("query", "negative radius"));
                }
                Ok(QueryShape::Circle(Circle {
                    center: point(*center, "query")?,
                    radius: *radius,
                }))
            }
            QuerySpec::Polygon { vertices } => {
                let pts = vertices
                    .iter()
                    .map(|v| point(*v, "query"))
                    .collect::<Result<Vec<_>, _>>()?;
                let poly = make_polygon(&pts).map_err(|e| CliError::parse("query", e))?;
                Ok(QueryShape::Polygon(poly))
            }
        }
    }

    pub fn from_shape(shape: &QueryShape) -> Self {
        let xy = |p: Point| [p.x, p.y];
        match shape {
            QueryShape::Point(p) => QuerySpec::Point { at: xy(*p) },
            QueryShape::Circle(c) => QuerySpec::Circle {
                center: xy(c.center),
                radius: c.radius,
            },
            QueryShape::Polygon(poly) => QuerySpec::Polygon {
                vertices: poly.vertices().iter().map(|&v| xy(v)).collect(),
            },
        }
    }
}
