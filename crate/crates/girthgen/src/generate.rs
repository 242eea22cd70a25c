//! Generation tasks: base levels (optionally cached on disk), splitting,
//! worker threads and output formatting.

use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::mpsc;

use girthgen_core::base::GraphStore;
use girthgen_core::canon::canonical_form;
use girthgen_core::colour::is_snark;
use girthgen_core::metrics::has_girth_at_least;
use girthgen_core::pipeline::{self, Algorithm, Class, Plan, Stats, Task};
use girthgen_core::CubicGraph;

use crate::error::{Error, Result};
use crate::{appendix, graph6};

/// Environment variable naming a directory of cached base levels.
pub const BASE_CACHE_ENV: &str = "GIRTHGEN_BASE_CACHE";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    Adjacency,
}

#[derive(Clone, Debug)]
pub struct GenerationTask {
    pub order: usize,
    pub girth: usize,
    pub class: Class,
    pub algorithm: Algorithm,
    /// `None` only counts.
    pub format: Option<Format>,
    /// Relabel each graph canonically before writing it.
    pub canonical: bool,
    pub res: usize,
    pub modulus: usize,
    pub jobs: usize,
    /// Disables the colouring look-ahead in snark mode.
    pub no_lookahead: bool,
    /// Re-checks every emitted graph (cubic, connected, girth, snark).
    pub validate: bool,
}

impl GenerationTask {
    pub fn new(order: usize, girth: usize) -> Self {
        GenerationTask {
            order,
            girth,
            class: Class::All,
            algorithm: Algorithm::Auto,
            format: None,
            canonical: false,
            res: 0,
            modulus: 1,
            jobs: 1,
            no_lookahead: false,
            validate: false,
        }
    }

    pub fn plan(&self) -> Result<Plan> {
        if self.modulus == 0 || self.res >= self.modulus {
            return Err(Error::Usage(format!(
                "split {}/{} needs 0 <= res < mod",
                self.res, self.modulus
            )));
        }
        if self.jobs == 0 {
            return Err(Error::Usage("--jobs must be at least 1".into()));
        }
        let plan = Plan::new(self.order, self.girth, self.algorithm)?;
        // reject snark tasks with girth below 5 up front
        Task::new(plan.clone(), self.class)?;
        Ok(plan)
    }
}

/// Result of [`run`].
#[derive(Clone, Debug, Default)]
pub struct Summary {
    pub count: u64,
    pub stats: Vec<Stats>,
}

/// Base graphs for `plan`, read from or written to the cache directory in
/// `GIRTHGEN_BASE_CACHE` when it is set.
pub fn base_level(plan: &Plan) -> Result<Vec<CubicGraph>> {
    let dir = std::env::var_os(BASE_CACHE_ENV).map(PathBuf::from);
    base_level_with_cache(plan, dir.as_deref())
}

pub fn cache_file(dir: &Path, order: usize, girth: usize) -> PathBuf {
    dir.join(format!("base_n{order}_g{girth}.g6"))
}

pub fn base_level_with_cache(plan: &Plan, cache: Option<&Path>) -> Result<Vec<CubicGraph>> {
    let (n, k) = (plan.base_order, plan.base_girth);
    if plan.is_empty() {
        return Ok(Vec::new());
    }
    if let Some(dir) = cache {
        let path = cache_file(dir, n, k);
        if path.exists() {
            log::info!("reading base level from {}", path.display());
            return read_graph6_file(&path);
        }
    }
    log::info!("generating base level: order {n}, girth at least {k}");
    let graphs = GraphStore::new(n.max(4)).generate(n, k)?;
    if let Some(dir) = cache {
        fs::create_dir_all(dir)?;
        let path = cache_file(dir, n, k);
        let tmp = path.with_extension("tmp");
        let mut f = std::io::BufWriter::new(fs::File::create(&tmp)?);
        for g in &graphs {
            writeln!(f, "{}", graph6::encode(g))?;
        }
        f.flush()?;
        drop(f);
        fs::rename(&tmp, &path)?;
        log::info!("cached {} base graphs in {}", graphs.len(), path.display());
    }
    Ok(graphs)
}

pub fn read_graph6_file(path: &Path) -> Result<Vec<CubicGraph>> {
    let f = BufReader::new(fs::File::open(path)?);
    let mut out = Vec::new();
    for line in f.lines() {
        let line = line?;
        if !line.is_empty() {
            out.push(graph6::decode(&line)?);
        }
    }
    Ok(out)
}

fn render(task: &GenerationTask, g: &CubicGraph) -> Option<String> {
    let fmt = task.format?;
    let relabelled;
    let g = if task.canonical {
        relabelled = canonical_form(g, None).canonical_graph(g);
        &relabelled
    } else {
        g
    };
    Some(match fmt {
        Format::Graph6 => graph6::encode(g),
        Format::Adjacency => appendix::emit(g),
    })
}

fn check(task: &GenerationTask, g: &CubicGraph) {
    assert!(g.order() == task.order && g.is_connected());
    assert!(
        has_girth_at_least(g, task.girth),
        "emitted graph below the girth bound"
    );
    if task.class == Class::Snarks {
        assert!(is_snark(g), "emitted graph is not a snark");
    }
}

/// Runs `task` on `base`, writing one line per graph to `out` unless the
/// task only counts. With several jobs the base graphs of the split are
/// dealt round-robin to worker threads and the line order is not fixed.
pub fn run(task: &GenerationTask, base: &[CubicGraph], out: &mut dyn Write) -> Result<Summary> {
    let plan = task.plan()?;
    let mut core_task = Task::new(plan, task.class)?;
    if task.no_lookahead {
        core_task.lookahead = None;
    }
    let mine: Vec<CubicGraph> = base
        .iter()
        .enumerate()
        .filter(|(i, _)| i % task.modulus == task.res)
        .map(|(_, g)| g.clone())
        .collect();
    let mut summary = Summary::default();
    if task.jobs == 1 {
        let mut failed = None;
        let stats = pipeline::run(&core_task, &mine, &mut |g| {
            if task.validate {
                check(task, g);
            }
            if let Some(line) = render(task, g) {
                if failed.is_none() {
                    if let Err(e) = writeln!(out, "{line}") {
                        failed = Some(e);
                    }
                }
            }
        });
        if let Some(e) = failed {
            return Err(e.into());
        }
        summary.count = stats.emitted;
        summary.stats.push(stats);
        return Ok(summary);
    }
    let (tx, rx) = mpsc::channel::<String>();
    let stats = std::thread::scope(|s| {
        let handles: Vec<_> = (0..task.jobs)
            .map(|w| {
                let tx = tx.clone();
                let core_task = &core_task;
                let share: Vec<CubicGraph> =
                    mine.iter().skip(w).step_by(task.jobs).cloned().collect();
                s.spawn(move || {
                    pipeline::run(core_task, &share, &mut |g| {
                        if task.validate {
                            check(task, g);
                        }
                        if let Some(line) = render(task, g) {
                            // the receiver only goes away on a write error
                            let _ = tx.send(line);
                        }
                    })
                })
            })
            .collect();
        drop(tx);
        let mut result = Ok(());
        for line in rx {
            if result.is_ok() {
                result = writeln!(out, "{line}");
            }
        }
        let stats: Vec<Stats> = handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect();
        result.map(|_| stats)
    })?;
    summary.count = stats.iter().map(|s| s.emitted).sum();
    summary.stats = stats;
    Ok(summary)
}

/// Base level plus [`run`].
pub fn generate(task: &GenerationTask, out: &mut dyn Write) -> Result<Summary> {
    let plan = task.plan()?;
    let base = base_level(&plan)?;
    run(task, &base, out)
}
