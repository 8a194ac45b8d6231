//! Command line front end: `embed`, `verify`, `ramsey` and `bound`.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::euclid::{edge_bound, embed_edge_bounded, embed_max_degree, Mode};
use crate::geom::SPHERE_RADIUS;
use crate::graph::{degeneracy, find_forbidden, Graph};
use crate::io::{parse_coloring, parse_coords, parse_graph, write_coords};
use crate::ramsey::{ramsey_euclidean, ramsey_exhaustive, ramsey_spherical, WitnessMode};
use crate::sphere::{embed_degenerate_sphere, embed_max_degree_sphere};
use crate::verify::{verify_edges, verify_gp, verify_sphere, Tolerances, VerifyReport};

pub const DEFAULT_SEED: u64 = 0x5EED_0001;

#[derive(Debug, Parser)]
#[command(name = "unitdist", version, about = "Unit distance embeddings of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Embed a graph with every edge of length 1.
    Embed {
        /// Graph file: `n m` then one `u v` line per edge.
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Strategy::Auto)]
        strategy: Strategy,
        #[command(flatten)]
        config: RunConfig,
    },
    /// Check a coordinate file against a graph.
    Verify {
        input: PathBuf,
        /// Coordinates as written by `embed`.
        coords: PathBuf,
        #[command(flatten)]
        config: RunConfig,
    },
    /// Embed one colour class of a red/blue colouring of K_s.
    Ramsey {
        /// Colouring file: `s` then one `u v r|b` line per pair.
        input: Option<PathBuf>,
        /// Run every colouring of K_s instead of reading a file.
        #[arg(long, value_name = "S")]
        exhaustive: Option<usize>,
        #[command(flatten)]
        config: RunConfig,
    },
    /// Report the dimension bounds that apply to a graph.
    Bound { input: PathBuf },
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    #[arg(long)]
    pub dim: Option<usize>,
    #[arg(long, value_enum, default_value_t = Target::Euclid)]
    pub mode: Target,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-9)]
    pub eps_edge: f64,
    #[arg(long, default_value_t = 1e-6)]
    pub eps_gp: f64,
    /// Reruns of a construction that ran out of resampling attempts.
    #[arg(long, default_value_t = 3)]
    pub max_retries: usize,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

impl RunConfig {
    fn tolerances(&self) -> Tolerances {
        Tolerances {
            eps_gp: self.eps_gp,
            ..Tolerances::default().with_edge(self.eps_edge)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Euclid,
    Sphere,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Strategy {
    Auto,
    MaxDegree,
    SphereMaxDegree,
    Degenerate,
    EdgeBounded,
}

impl Strategy {
    const ORDER: [Strategy; 4] = [
        Strategy::MaxDegree,
        Strategy::SphereMaxDegree,
        Strategy::Degenerate,
        Strategy::EdgeBounded,
    ];

    fn name(self) -> &'static str {
        match self {
            Strategy::Auto => "auto",
            Strategy::MaxDegree => "max-degree",
            Strategy::SphereMaxDegree => "sphere-max-degree",
            Strategy::Degenerate => "degenerate",
            Strategy::EdgeBounded => "edge-bounded",
        }
    }

    fn run(self, g: &Graph, d: usize, target: Target, rng: &mut ChaCha8Rng) -> Result<Embedding> {
        match (self, target) {
            (Strategy::MaxDegree, Target::Euclid) => embed_max_degree(g, d, rng),
            (Strategy::MaxDegree, Target::Sphere) => Err(Error::PreconditionViolated(
                "max-degree places points in R^d, not on the sphere".into(),
            )),
            (Strategy::SphereMaxDegree, _) => embed_max_degree_sphere(g, d, rng),
            (Strategy::Degenerate, _) => embed_degenerate_sphere(g, d, rng),
            (Strategy::EdgeBounded, Target::Euclid) => embed_edge_bounded(g, d, Mode::Euclid, rng),
            (Strategy::EdgeBounded, Target::Sphere) => embed_edge_bounded(g, d, Mode::Sphere, rng),
            (Strategy::Auto, _) => unreachable!("auto is resolved by the caller"),
        }
    }
}

/// True for errors saying the input lies outside a construction's hypothesis.
fn out_of_scope(e: &Error) -> bool {
    matches!(
        e,
        Error::PreconditionViolated(_)
            | Error::K33Excluded
            | Error::NotDegenerate(_)
            | Error::TooManyEdges { .. }
            | Error::ForbiddenSubgraphForSphere(_)
            | Error::NoApplicableTheorem(_)
    )
}

/// Exit status for an error: 2 when no construction covers the input.
pub fn exit_code(e: &Error) -> i32 {
    if out_of_scope(e) {
        2
    } else {
        1
    }
}

fn read(path: &Path) -> Result<String> {
    Ok(fs::read_to_string(path)?)
}

fn emit(config: &RunConfig, text: &str) -> Result<()> {
    match &config.output {
        Some(p) => fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn with_retries(
    strategy: Strategy,
    g: &Graph,
    d: usize,
    config: &RunConfig,
    rng: &mut ChaCha8Rng,
) -> Result<Embedding> {
    let mut attempt = 0;
    loop {
        match strategy.run(g, d, config.mode, rng) {
            Err(Error::ResampleExceeded { .. }) if attempt < config.max_retries => attempt += 1,
            Ok(mut e) => {
                e.meta.retries += attempt;
                return Ok(e);
            }
            other => return other,
        }
    }
}

/// Runs the requested strategy, or the first one whose hypothesis holds.
pub fn embed_graph(g: &Graph, strategy: Strategy, config: &RunConfig) -> Result<(Strategy, Embedding)> {
    let d = config
        .dim
        .ok_or_else(|| Error::PreconditionViolated("--dim is required".into()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    if strategy != Strategy::Auto {
        return with_retries(strategy, g, d, config, &mut rng).map(|e| (strategy, e));
    }
    let mut reasons = Vec::new();
    for s in Strategy::ORDER {
        if s == Strategy::MaxDegree && config.mode == Target::Sphere {
            continue;
        }
        match with_retries(s, g, d, config, &mut rng) {
            Ok(e) => return Ok((s, e)),
            Err(err) if out_of_scope(&err) => reasons.push(format!("{}: {err}", s.name())),
            Err(err) => return Err(err),
        }
    }
    Err(Error::NoApplicableTheorem(reasons.join("; ")))
}

fn report(g: &Graph, e: &Embedding, config: &RunConfig) -> Result<VerifyReport> {
    let tol = config.tolerances();
    let mut rep = verify_edges(g, e, &tol)?;
    if config.mode == Target::Sphere {
        let s = verify_sphere(e, SPHERE_RADIUS, &tol);
        rep.sphere_deviation = s.sphere_deviation;
        rep.pass &= s.pass;
    }
    Ok(rep)
}

fn embed_document(g: &Graph, strategy: Strategy, config: &RunConfig) -> Result<(String, bool)> {
    let (used, e) = embed_graph(g, strategy, config)?;
    let rep = report(g, &e, config)?;
    let mut out = format!(
        "seed {:#x}\nstrategy {}\nmode {}\nretries {}\n",
        config.seed,
        used.name(),
        target_name(config.mode),
        e.meta.retries
    );
    out.push_str(&write_coords(&e));
    out.push_str("report\n");
    let _ = write!(out, "{rep}");
    Ok((out, rep.pass))
}

fn target_name(t: Target) -> &'static str {
    match t {
        Target::Euclid => "euclid",
        Target::Sphere => "sphere",
    }
}

fn verify_document(g: &Graph, e: &Embedding, config: &RunConfig) -> Result<(String, bool)> {
    if e.len() != g.n() {
        return Err(Error::PreconditionViolated(format!(
            "graph has {} vertices, coordinates {}",
            g.n(),
            e.len()
        )));
    }
    let mut rep = report(g, e, config)?;
    if config.mode == Target::Sphere && e.dim() == 3 {
        let gp = verify_gp(e, &[], &config.tolerances());
        rep.gp_findings = gp.gp_findings;
        rep.unit_margin = gp.unit_margin;
        rep.min_volume = gp.min_volume;
    }
    Ok((format!("report\n{rep}"), rep.pass))
}

fn ramsey_document(input: Option<&Path>, exhaustive: Option<usize>, config: &RunConfig) -> Result<(String, bool)> {
    let mode = match config.mode {
        Target::Euclid => WitnessMode::Euclidean,
        Target::Sphere => WitnessMode::Spherical,
    };
    if let Some(s) = exhaustive {
        let sum = ramsey_exhaustive(s, mode, config.seed)?;
        let mut out = format!(
            "s {}\nmode {}\nseed {:#x}\ntotal {}\npassed {}\nfailures",
            s,
            target_name(config.mode),
            config.seed,
            sum.total,
            sum.passed
        );
        for i in &sum.failures {
            let _ = write!(out, " {i}");
        }
        out.push('\n');
        return Ok((out, sum.failures.is_empty()));
    }
    let path = input.ok_or_else(|| Error::PreconditionViolated("give a colouring file or --exhaustive".into()))?;
    let col = parse_coloring(&read(path)?)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let (color, e) = match mode {
        WitnessMode::Spherical => ramsey_spherical(&col, &mut rng)?,
        WitnessMode::Euclidean => ramsey_euclidean(&col, &mut rng)?,
    };
    let rep = report(&col.graph(color), &e, config)?;
    let mut out = format!(
        "seed {:#x}\nmode {}\ncolor {color}\n",
        config.seed,
        target_name(config.mode)
    );
    out.push_str(&write_coords(&e));
    out.push_str("report\n");
    let _ = write!(out, "{rep}");
    Ok((out, rep.pass))
}

fn smallest_edge_dim(m: usize) -> usize {
    (2..).find(|&d| edge_bound(d).is_some_and(|b| m <= b)).unwrap_or(2)
}

/// Dimension bounds that each construction certifies for `g`.
pub fn bound_document(g: &Graph) -> Result<String> {
    let (n, m) = (g.n(), g.edge_count());
    let delta = g.max_degree();
    let k = degeneracy(g);
    let mut out = format!("vertices {n}\nedges {m}\nmax_degree {delta}\ndegeneracy {k}\n");

    let k33 = delta == 3 && find_forbidden(g, 3)?.k33.is_some();
    let md = if k33 { 4 } else { delta.max(1) };
    if k33 {
        let _ = writeln!(
            out,
            "max-degree: Δ = 3 with a K_{{3,3}} component, excluded from 3-space ⇒ dim ≤ 4"
        );
    } else {
        let _ = writeln!(out, "max-degree: Δ = {delta} ⇒ dim ≤ {md}");
    }
    let smd = (delta + 1).max(2);
    let _ = writeln!(out, "sphere-max-degree: Δ = {delta} ⇒ dim_S ≤ {smd}");
    let deg = k + 2;
    let _ = writeln!(out, "degenerate: {k}-degenerate ⇒ dim_S ≤ {deg}");
    let ed = smallest_edge_dim(m);
    let _ = writeln!(
        out,
        "edge-bounded: |E| = {m} ≤ g({ed}) = {} ⇒ dim ≤ {ed}",
        edge_bound(ed).unwrap_or(0)
    );

    let mut spherical = smd.min(deg);
    for d in ed..spherical {
        if !find_forbidden(g, d)?.any_sphere_obstruction() {
            let _ = writeln!(
                out,
                "edge-bounded: no K_{{{}}} or K_{{{}}} - K_3 ⇒ dim_S ≤ {d}",
                d + 1,
                d + 2
            );
            spherical = d;
            break;
        }
    }
    let euclidean = md.min(ed).min(spherical);
    let _ = writeln!(out, "euclidean_bound {euclidean}\nspherical_bound {spherical}");
    Ok(out)
}

fn dispatch(command: &Command) -> Result<bool> {
    let (text, pass, config) = match command {
        Command::Embed {
            input,
            strategy,
            config,
        } => {
            let g = parse_graph(&read(input)?)?;
            let (t, p) = embed_document(&g, *strategy, config)?;
            (t, p, Some(config))
        }
        Command::Verify { input, coords, config } => {
            let g = parse_graph(&read(input)?)?;
            let e = parse_coords(&read(coords)?)?;
            let (t, p) = verify_document(&g, &e, config)?;
            (t, p, Some(config))
        }
        Command::Ramsey {
            input,
            exhaustive,
            config,
        } => {
            let (t, p) = ramsey_document(input.as_deref(), *exhaustive, config)?;
            (t, p, Some(config))
        }
        Command::Bound { input } => (bound_document(&parse_graph(&read(input)?)?)?, true, None),
    };
    match config {
        Some(c) => emit(c, &text)?,
        None => print!("{text}"),
    }
    Ok(pass)
}

/// Runs a parsed command line and returns the process exit status.
pub fn run(cli: &Cli) -> i32 {
    match dispatch(&cli.command) {
        Ok(true) => 0,
        Ok(false) => {
            eprintln!("error: verification failed");
            1
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(dim: usize) -> RunConfig {
        RunConfig {
            dim: Some(dim),
            mode: Target::Euclid,
            seed: DEFAULT_SEED,
            eps_edge: 1e-9,
            eps_gp: 1e-6,
            max_retries: 3,
            output: None,
        }
    }

    #[test]
    fn auto_picks_first_applicable() {
        let (s, _) = embed_graph(&Graph::cube(), Strategy::Auto, &config(3)).unwrap();
        assert_eq!(s, Strategy::MaxDegree);
        let mut c = config(4);
        c.mode = Target::Sphere;
        let (s, _) = embed_graph(&Graph::cube(), Strategy::Auto, &c).unwrap();
        assert_eq!(s, Strategy::SphereMaxDegree);
    }

    #[test]
    fn out_of_scope_inputs_exit_2() {
        let err = embed_graph(&Graph::complete(5), Strategy::Auto, &config(2)).unwrap_err();
        assert_eq!(exit_code(&err), 2);
        let err = embed_graph(&Graph::complete_bipartite(3, 3), Strategy::Auto, &config(3)).unwrap_err();
        assert_eq!(exit_code(&err), 2);
        assert!(err.to_string().contains("K_{3,3}"), "{err}");
    }

    #[test]
    fn documents_are_deterministic() {
        let g = Graph::petersen();
        let a = embed_document(&g, Strategy::Auto, &config(3)).unwrap();
        let b = embed_document(&g, Strategy::Auto, &config(3)).unwrap();
        assert_eq!(a, b);
        assert!(a.1);
    }

    #[test]
    fn bounds_for_small_graphs() {
        let cube = bound_document(&Graph::cube()).unwrap();
        assert!(cube.contains("euclidean_bound 3"), "{cube}");
        assert!(cube.contains("spherical_bound 4"), "{cube}");
        let k7 = bound_document(&Graph::complete(7)).unwrap();
        assert!(k7.contains("euclidean_bound 6"), "{k7}");
        assert!(k7.contains("spherical_bound 7"), "{k7}");
        let empty = bound_document(&Graph::new(4)).unwrap();
        assert!(empty.contains("euclidean_bound 1"), "{empty}");
        let k33 = bound_document(&Graph::complete_bipartite(3, 3)).unwrap();
        assert!(k33.contains("dim ≤ 4"), "{k33}");
    }
}
