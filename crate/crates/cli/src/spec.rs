use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use lexpack_core::graph::{Family, Graph, GraphError};
use lexpack_core::io::parse_edge_list;

/// A graph named on the command line: a family descriptor such as `path:8`
/// or `petersen`, otherwise a path to an edge-list file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Family(Family),
    File(PathBuf),
}

impl FromStr for GraphSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.parse::<Family>() {
            Ok(f) => Ok(GraphSpec::Family(f)),
            Err(GraphError::UnknownFamily(_)) => {
                let path = PathBuf::from(s);
                if path.is_file() {
                    Ok(GraphSpec::File(path))
                } else {
                    Err(format!(
                        "`{s}` is neither a family (path:n, cycle:n, complete:n, empty:n, \
                         petersen) nor an existing edge-list file"
                    ))
                }
            }
            Err(e) => Err(e.to_string()),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Family(fam) => write!(f, "{fam}"),
            GraphSpec::File(p) => write!(f, "{}", p.display()),
        }
    }
}

impl GraphSpec {
    pub fn load(&self) -> Result<Graph, String> {
        match self {
            GraphSpec::Family(f) => Graph::generate(f).map_err(|e| e.to_string()),
            GraphSpec::File(p) => {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| format!("cannot read {}: {e}", p.display()))?;
                parse_edge_list(&text).map_err(|e| format!("{}: {e}", p.display()))
            }
        }
    }
}
