use thiserror::Error;

use crate::diamond::RuleViolation;
use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EdgeOutOfRange { u: Vertex, v: Vertex, n: usize },

    #[error("vertex {v} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: Vertex, n: usize },

    #[error("edge ({0}, {1}) is not present")]
    MissingEdge(Vertex, Vertex),

    #[error("{}", match .line { Some(l) => format!("line {l}: {msg}"), None => msg.clone() })]
    Format { line: Option<usize>, msg: String },

    #[error("graph is not regular")]
    NotRegular,

    #[error("no {regularity}-regular graph on {vertex_count} vertices: {reason}")]
    BadParameters {
        regularity: usize,
        vertex_count: usize,
        reason: &'static str,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("adding triangle {0:?} creates triangles other than itself")]
    ExtraTriangle([Vertex; 3]),

    #[error("triangle {0:?} shares a vertex with an earlier triple")]
    OverlappingTriples([Vertex; 3]),

    #[error("triangle {triple:?}: edge ({u}, {v}) is already present")]
    EdgeAlreadyPresent { triple: [Vertex; 3], u: Vertex, v: Vertex },

    #[error("not a perfect matching: {0}")]
    NotPerfectMatching(String),

    #[error("graph does not have the triangle property")]
    LacksTriangleProperty,

    #[error("even cycle decomposition rejected: {0:?}")]
    EcdRejected(Vec<RuleViolation>),

    #[error("consistency check failed: {0}")]
    Consistency(String),

    #[error("{n} vertices with degree {r} is outside the internal generator's envelope; use external graph6 ingestion")]
    Envelope { n: usize, r: usize },

    #[error("time budget of {0:?} exhausted")]
    TimeBudget(std::time::Duration),

    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn format(msg: impl Into<String>) -> Self {
        Error::Format {
            line: None,
            msg: msg.into(),
        }
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
