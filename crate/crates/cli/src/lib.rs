//! Edge-list ingestion, algorithm dispatch, and JSON reporting for the
//! `qclust` binary.
//!
//! Graphs arrive as text edge lists ("u v" per line, `#` starts a
//! comment, vertex ids are arbitrary tokens); weights are degree, unit, or
//! a "vertex weight" file. Results are emitted as a JSON report with the
//! clusters (as token lists), the full metric set, and optionally the
//! spanning-forest bound certificate.

use std::collections::HashMap;
use std::fmt;
use std::time::Instant;

use clap::ValueEnum;
use serde::Serialize;

use qclust::bounds::{mst_bound, mst_greedy_clustering};
use qclust::objective::{density_sum, modularity, nassoc, ncut, normalized_modularity, objective};
use qclust::oracle::exact_opt;
use qclust::pipeline::{greedy_agglomerative, solve_best_of};
use qclust::{Clustering, Error as CoreError, Graph, WeightAssignment, WeightMode};

/// Input and internal failures, each with a stable machine-readable code.
#[derive(Debug)]
pub enum CliError {
    Parse { line: usize, message: String },
    SelfLoop { line: usize },
    DuplicateEdge { line: usize },
    UnknownVertex { line: usize, token: String },
    MissingVertexWeight { token: String },
    NonPositiveWeight { line: usize },
    Flag { message: String },
    InputFile { path: String, message: String },
    Core(CoreError),
    Io(std::io::Error),
    Internal(String),
}

impl CliError {
    /// Exit status: 1 for input errors, 2 for internal ones.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) | CliError::Internal(_) => 2,
            _ => 1,
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "parse_error",
            CliError::SelfLoop { .. } => "self_loop",
            CliError::DuplicateEdge { .. } => "duplicate_edge",
            CliError::UnknownVertex { .. } => "unknown_vertex",
            CliError::MissingVertexWeight { .. } => "missing_vertex_weight",
            CliError::NonPositiveWeight { .. } => "non_positive_weight",
            CliError::Flag { .. } => "invalid_flag",
            CliError::InputFile { .. } => "input_file",
            CliError::Internal(_) => "internal_error",
            CliError::Core(e) => match e {
                CoreError::SelfLoop(_) => "self_loop",
                CoreError::DuplicateEdge(_, _) => "duplicate_edge",
                CoreError::VertexOutOfRange { .. } => "vertex_out_of_range",
                CoreError::EmptyCluster => "empty_cluster",
                CoreError::IsolatedVertex(_) => "isolated_vertex",
                CoreError::EmptyGraph => "empty_graph",
                CoreError::NonPositiveWeight { .. } => "non_positive_weight",
                CoreError::NonIntegralWeights => "non_integral_weights",
                CoreError::InvalidClustering(_) => "invalid_clustering",
                CoreError::InvalidInstance(_) => "invalid_instance",
                CoreError::InstanceTooLarge { .. } => "instance_too_large",
                CoreError::TooLarge { .. } => "too_large",
                CoreError::LambdaOutOfRange(_) => "lambda_out_of_range",
                CoreError::InvalidTrials => "invalid_trials",
            },
            CliError::Io(_) => "io_error",
        }
    }

    /// The offending line number, when the failure is tied to one.
    pub fn line(&self) -> Option<usize> {
        match self {
            CliError::Parse { line, .. }
            | CliError::SelfLoop { line }
            | CliError::DuplicateEdge { line }
            | CliError::UnknownVertex { line, .. }
            | CliError::NonPositiveWeight { line } => Some(*line),
            _ => None,
        }
    }

    /// The failure as machine-readable JSON.
    pub fn to_json(&self) -> serde_json::Value {
        let mut error = serde_json::json!({
            "code": self.code(),
            "message": self.to_string(),
        });
        if let Some(line) = self.line() {
            error["line"] = serde_json::json!(line);
        }
        serde_json::json!({ "error": error })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse { line, message } => write!(f, "line {line}: {message}"),
            CliError::SelfLoop { line } => write!(f, "line {line}: self-loop"),
            CliError::DuplicateEdge { line } => write!(f, "line {line}: duplicate edge"),
            CliError::UnknownVertex { line, token } => {
                write!(f, "line {line}: unknown vertex '{token}'")
            }
            CliError::MissingVertexWeight { token } => {
                write!(f, "no weight given for vertex '{token}'")
            }
            CliError::NonPositiveWeight { line } => {
                write!(f, "line {line}: weight must be strictly positive")
            }
            CliError::Flag { message } => write!(f, "{message}"),
            CliError::InputFile { path, message } => write!(f, "cannot read '{path}': {message}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Internal(message) => write!(f, "{message}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

/// Bidirectional map between external vertex tokens and dense ids, in
/// first-appearance order.
#[derive(Debug, Clone, Default)]
pub struct IdMap {
    tokens: Vec<String>,
    index: HashMap<String, usize>,
}

impl IdMap {
    fn intern(&mut self, token: &str) -> usize {
        if let Some(&id) = self.index.get(token) {
            return id;
        }
        let id = self.tokens.len();
        self.tokens.push(token.to_string());
        self.index.insert(token.to_string(), id);
        id
    }

    pub fn id_of(&self, token: &str) -> Option<usize> {
        self.index.get(token).copied()
    }

    pub fn token(&self, id: usize) -> &str {
        &self.tokens[id]
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }
}

/// Strips a `#` comment and splits the remainder into tokens.
fn tokens_of(line: &str) -> Vec<&str> {
    let body = line.split('#').next().unwrap_or("");
    body.split_whitespace().collect()
}

/// Parses an edge list into a dense-id graph plus the token map.
pub fn parse_edge_list(text: &str) -> Result<(Graph, IdMap), CliError> {
    let mut ids = IdMap::default();
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (lineno, line) in text.lines().enumerate() {
        let line_number = lineno + 1;
        let tokens = tokens_of(line);
        match tokens.as_slice() {
            [] => continue,
            [a, b] => {
                if a == b {
                    return Err(CliError::SelfLoop { line: line_number });
                }
                let u = ids.intern(a);
                let v = ids.intern(b);
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(CliError::DuplicateEdge { line: line_number });
                }
                edges.push((u, v));
            }
            _ => {
                return Err(CliError::Parse {
                    line: line_number,
                    message: format!("expected 'u v', got {} tokens", tokens.len()),
                })
            }
        }
    }
    let graph = Graph::build(ids.len(), &edges)?;
    Ok((graph, ids))
}

/// Canonical edge-list writer: one "u v" line per edge in input order.
pub fn write_edge_list(graph: &Graph, ids: &IdMap) -> String {
    let mut out = String::new();
    for &(u, v) in graph.edges() {
        out.push_str(ids.token(u));
        out.push(' ');
        out.push_str(ids.token(v));
        out.push('\n');
    }
    out
}

/// Parses a "vertex weight" file; every vertex of the graph must be
/// covered exactly once by a strictly positive weight.
pub fn parse_weights(text: &str, graph: &Graph, ids: &IdMap) -> Result<WeightAssignment, CliError> {
    let mut values: Vec<Option<f64>> = vec![None; graph.n()];
    for (lineno, line) in text.lines().enumerate() {
        let line_number = lineno + 1;
        let tokens = tokens_of(line);
        match tokens.as_slice() {
            [] => continue,
            [token, weight] => {
                let id = ids.id_of(token).ok_or_else(|| CliError::UnknownVertex {
                    line: line_number,
                    token: token.to_string(),
                })?;
                let w: f64 = weight.parse().map_err(|_| CliError::Parse {
                    line: line_number,
                    message: format!("'{weight}' is not a number"),
                })?;
                if !(w.is_finite() && w > 0.0) {
                    return Err(CliError::NonPositiveWeight { line: line_number });
                }
                if values[id].is_some() {
                    return Err(CliError::Parse {
                        line: line_number,
                        message: format!("duplicate weight for vertex '{token}'"),
                    });
                }
                values[id] = Some(w);
            }
            _ => {
                return Err(CliError::Parse {
                    line: line_number,
                    message: format!("expected 'vertex weight', got {} tokens", tokens.len()),
                })
            }
        }
    }
    let mut resolved = Vec::with_capacity(graph.n());
    for (id, value) in values.into_iter().enumerate() {
        match value {
            Some(w) => resolved.push(w),
            None => {
                return Err(CliError::MissingVertexWeight {
                    token: ids.token(id).to_string(),
                })
            }
        }
    }
    Ok(WeightAssignment::explicit(resolved)?)
}

/// Where vertex weights come from.
#[derive(Debug, Clone)]
pub enum WeightsSource {
    Degree,
    Unit,
    /// Contents of a weight file.
    File(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Pipeline,
    Agglomerative,
    MstGreedy,
    Oracle,
}

impl Algo {
    pub fn name(&self) -> &'static str {
        match self {
            Algo::Pipeline => "pipeline",
            Algo::Agglomerative => "agglomerative",
            Algo::MstGreedy => "mst-greedy",
            Algo::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Metrics {
    pub q_lambda: f64,
    pub q0: f64,
    pub nassoc: Option<f64>,
    pub ncut: Option<f64>,
    pub modularity: Option<f64>,
    pub normalized_modularity: Option<f64>,
    pub density_sum: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    #[serde(rename = "M")]
    pub m: f64,
    pub lower: f64,
    pub upper: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub clusters: Vec<Vec<String>>,
    pub k: usize,
    pub metrics: Metrics,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundsReport>,
    pub seed: u64,
    pub algo: String,
    pub runtime_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub weights: WeightsSource,
    pub lambda: f64,
    pub algo: Algo,
    pub seed: u64,
    pub trials: usize,
    pub bounds: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            weights: WeightsSource::Degree,
            lambda: 0.0,
            algo: Algo::Pipeline,
            seed: 0,
            trials: 1,
            bounds: false,
        }
    }
}

/// Parses, solves, and reports. The `runtime_ms` field covers the solve
/// step only.
pub fn run(graph_text: &str, config: &RunConfig) -> Result<Report, CliError> {
    if !config.lambda.is_finite() {
        return Err(CliError::Flag {
            message: "lambda must be a finite number".to_string(),
        });
    }
    if config.trials == 0 {
        return Err(CliError::Core(CoreError::InvalidTrials));
    }
    let (graph, ids) = parse_edge_list(graph_text)?;
    let weights = match &config.weights {
        WeightsSource::Degree => WeightAssignment::degree(&graph)?,
        WeightsSource::Unit => WeightAssignment::unit(&graph),
        WeightsSource::File(text) => parse_weights(text, &graph, &ids)?,
    };

    let start = Instant::now();
    let clustering = match config.algo {
        Algo::Pipeline => {
            solve_best_of(&graph, &weights, config.lambda, config.trials, config.seed)?
        }
        Algo::Agglomerative => greedy_agglomerative(&graph, &weights, config.lambda),
        Algo::MstGreedy => mst_greedy_clustering(&graph)?,
        Algo::Oracle => exact_opt(&graph, &weights, config.lambda)?.0,
    };
    let runtime_ms = start.elapsed().as_millis() as u64;

    let degree_metrics = weights.mode() == WeightMode::Degree && graph.edge_count() > 0;
    let warning = if degree_metrics {
        None
    } else if weights.mode() != WeightMode::Degree {
        Some(
            "nassoc, ncut, modularity and normalized_modularity are only reported under \
             degree weights"
                .to_string(),
        )
    } else {
        Some(
            "nassoc, ncut, modularity and normalized_modularity need at least one edge".to_string(),
        )
    };
    let metrics = Metrics {
        q_lambda: objective(&graph, &weights, &clustering, config.lambda),
        q0: objective(&graph, &weights, &clustering, 0.0),
        nassoc: degree_metrics
            .then(|| nassoc(&graph, &clustering))
            .transpose()?,
        ncut: degree_metrics
            .then(|| ncut(&graph, &clustering))
            .transpose()?,
        modularity: degree_metrics
            .then(|| modularity(&graph, &clustering))
            .transpose()?,
        normalized_modularity: degree_metrics
            .then(|| normalized_modularity(&graph, &clustering))
            .transpose()?,
        density_sum: density_sum(&graph, &clustering),
    };
    let bounds = if config.bounds {
        let cert = mst_bound(&graph)?;
        Some(BoundsReport {
            m: cert.forest_weight,
            lower: cert.lower,
            upper: cert.upper,
        })
    } else {
        None
    };

    Ok(Report {
        clusters: cluster_tokens(&clustering, &ids),
        k: clustering.k(),
        metrics,
        bounds,
        seed: config.seed,
        algo: config.algo.name().to_string(),
        runtime_ms,
        warning,
    })
}

/// Clusters as token lists, ordered by smallest member id, members
/// ascending.
fn cluster_tokens(clustering: &Clustering, ids: &IdMap) -> Vec<Vec<String>> {
    let mut clusters = clustering.clusters();
    clusters.sort_by_key(|members| members[0]);
    clusters
        .into_iter()
        .map(|members| {
            members
                .into_iter()
                .map(|v| ids.token(v).to_string())
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIANGLE: &str = "a b\nb c\na c\n";

    #[test]
    fn parses_path_graph() {
        let (g, ids) = parse_edge_list("a b\nb c").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(ids.token(0), "a");
        assert_eq!(ids.id_of("c"), Some(2));
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let (g, _) = parse_edge_list("# header\n\na b # trailing\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn rejects_self_loop_with_line() {
        match parse_edge_list("a a").unwrap_err() {
            CliError::SelfLoop { line } => assert_eq!(line, 1),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_duplicate_edge_with_line() {
        match parse_edge_list("a b\nb a").unwrap_err() {
            CliError::DuplicateEdge { line } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_malformed_line() {
        match parse_edge_list("a b c").unwrap_err() {
            CliError::Parse { line, .. } => assert_eq!(line, 1),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn edge_list_round_trip() {
        let (g, ids) = parse_edge_list(TRIANGLE).unwrap();
        let emitted = write_edge_list(&g, &ids);
        let (g2, ids2) = parse_edge_list(&emitted).unwrap();
        assert_eq!(g, g2);
        assert_eq!(ids.len(), ids2.len());
        for id in 0..ids.len() {
            assert_eq!(ids.token(id), ids2.token(id));
        }
    }

    #[test]
    fn degree_weights_on_path() {
        let (g, _) = parse_edge_list("a b\nb c").unwrap();
        let w = WeightAssignment::degree(&g).unwrap();
        assert_eq!(w.values(), &[1.0, 2.0, 1.0]);
    }

    #[test]
    fn weight_file_happy_path() {
        let (g, ids) = parse_edge_list("a b\nb c").unwrap();
        let w = parse_weights("a 1.5\nb 2\nc 3\n", &g, &ids).unwrap();
        assert_eq!(w.values(), &[1.5, 2.0, 3.0]);
    }

    #[test]
    fn weight_file_missing_vertex() {
        let (g, ids) = parse_edge_list("a b\nb c").unwrap();
        match parse_weights("a 1\nb 2\n", &g, &ids).unwrap_err() {
            CliError::MissingVertexWeight { token } => assert_eq!(token, "c"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn weight_file_rejects_nonpositive() {
        let (g, ids) = parse_edge_list("a b").unwrap();
        assert!(matches!(
            parse_weights("a 0\nb 1", &g, &ids).unwrap_err(),
            CliError::NonPositiveWeight { line: 1 }
        ));
        assert!(matches!(
            parse_weights("a -2\nb 1", &g, &ids).unwrap_err(),
            CliError::NonPositiveWeight { line: 1 }
        ));
    }

    #[test]
    fn weight_file_rejects_unknown_vertex() {
        let (g, ids) = parse_edge_list("a b").unwrap();
        assert!(matches!(
            parse_weights("z 1", &g, &ids).unwrap_err(),
            CliError::UnknownVertex { line: 1, .. }
        ));
    }

    #[test]
    fn oracle_on_triangle_reports_single_cluster() {
        let config = RunConfig {
            algo: Algo::Oracle,
            ..RunConfig::default()
        };
        let report = run(TRIANGLE, &config).unwrap();
        assert_eq!(report.k, 1);
        assert!((report.metrics.q0 - 1.0).abs() < 1e-12);
        assert_eq!(report.clusters, vec![vec!["a", "b", "c"]]);
        assert!(report.warning.is_none());
        assert!(report.bounds.is_none());
    }

    #[test]
    fn pipeline_at_lambda_one_has_singleton_floor() {
        let config = RunConfig {
            lambda: 1.0,
            ..RunConfig::default()
        };
        let report = run(TRIANGLE, &config).unwrap();
        assert!(report.metrics.q_lambda >= 3.0);
    }

    #[test]
    fn lambda_out_of_range_maps_to_input_error() {
        let config = RunConfig {
            lambda: 2.0,
            ..RunConfig::default()
        };
        let err = run(TRIANGLE, &config).unwrap_err();
        assert_eq!(err.code(), "lambda_out_of_range");
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn unit_weights_suppress_degree_metrics() {
        let config = RunConfig {
            weights: WeightsSource::Unit,
            ..RunConfig::default()
        };
        let report = run(TRIANGLE, &config).unwrap();
        assert!(report.metrics.ncut.is_none());
        assert!(report.metrics.nassoc.is_none());
        assert!(report.metrics.modularity.is_none());
        assert!(report.metrics.normalized_modularity.is_none());
        assert!(report.warning.is_some());
    }

    #[test]
    fn bounds_flag_emits_certificate() {
        let config = RunConfig {
            bounds: true,
            algo: Algo::MstGreedy,
            ..RunConfig::default()
        };
        let report = run(TRIANGLE, &config).unwrap();
        let bounds = report.bounds.unwrap();
        assert!((bounds.m - 1.0).abs() < 1e-12);
        assert!((bounds.upper - 2.0).abs() < 1e-12);
        assert!(bounds.lower <= bounds.upper);
    }

    #[test]
    fn error_json_shape() {
        let err = run("a a", &RunConfig::default()).unwrap_err();
        let json = err.to_json();
        assert_eq!(json["error"]["code"], "self_loop");
        assert_eq!(json["error"]["line"], 1);
        assert!(json["error"]["message"].is_string());
    }
}
