//! The backtracking engine behind every fixed-k search.
//!
//! Vertices are colored in a fixed order (descending degree, ties by index),
//! colors ascending. On each assignment only the neighbors and the paths on
//! four vertices through the newly colored vertex are rechecked, which keeps
//! the per-node cost constant-ish on the graphs this crate targets.
//!
//! Node accounting: every attempted (vertex, color) pair counts as one node,
//! whether or not it survives the checks. Parallel runs split the tree into
//! subtrees at a fixed depth, record how many shallow attempts precede each
//! subtree, and replay the sequential accounting during the merge, so the
//! reported outcome, witness, and node count are identical for every worker
//! count. Only wall-clock aborts escape this guarantee; they surface as
//! budget errors, never as results.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{paths_through, Graph};
use crate::search::{PartialAssignment, SearchOutcome, SolveOptions};
use crate::verify::at_most_two_distinct;

/// Immutable per-search state shared by all workers.
struct Ctx<'g> {
    g: &'g Graph,
    k: u32,
    /// Unpinned vertices in search order.
    order: Vec<usize>,
    /// Pins applied; 0 means uncolored.
    base: Vec<u32>,
    through: Vec<Vec<[usize; 4]>>,
    /// Color classes may only be introduced in ascending order. Disabled
    /// when pins are present, since pins fix colors out of order.
    symmetry: bool,
    node_budget: u64,
    deadline: Instant,
}

impl Ctx<'_> {
    fn feasible(&self, colors: &[u32], v: usize, c: u32) -> bool {
        for &u in self.g.neighbors(v) {
            if colors[u] == c {
                return false;
            }
        }
        for p in &self.through[v] {
            let cs = p.map(|x| if x == v { c } else { colors[x] });
            if cs.iter().all(|&x| x != 0) && at_most_two_distinct(cs) {
                return false;
            }
        }
        true
    }

    fn color_limit(&self, max_used: u32) -> u32 {
        if self.symmetry {
            self.k.min(max_used + 1)
        } else {
            self.k
        }
    }
}

enum Halt {
    NodeBudget,
    TimedOut,
    Aborted,
}

enum Step {
    Found,
    Exhausted,
    Halted(Halt),
}

/// One depth-first run, either the whole tree or a single subtree.
struct Dfs<'c, 'g> {
    ctx: &'c Ctx<'g>,
    colors: Vec<u32>,
    nodes: u64,
    cap: u64,
    /// (first index that found a solution, this job's index); jobs past a
    /// found solution abandon their subtree.
    abort: Option<(&'c AtomicUsize, usize)>,
}

impl<'c, 'g> Dfs<'c, 'g> {
    fn new(ctx: &'c Ctx<'g>, colors: Vec<u32>, abort: Option<(&'c AtomicUsize, usize)>) -> Self {
        Self {
            ctx,
            colors,
            nodes: 0,
            cap: ctx.node_budget,
            abort,
        }
    }

    fn run(&mut self, pos: usize, max_used: u32) -> Step {
        if pos == self.ctx.order.len() {
            return Step::Found;
        }
        let v = self.ctx.order[pos];
        for c in 1..=self.ctx.color_limit(max_used) {
            if self.nodes >= self.cap {
                return Step::Halted(Halt::NodeBudget);
            }
            self.nodes += 1;
            if self.nodes & 0x1fff == 0 {
                if Instant::now() >= self.ctx.deadline {
                    return Step::Halted(Halt::TimedOut);
                }
                if let Some((best, idx)) = self.abort {
                    if idx > best.load(Ordering::Relaxed) {
                        return Step::Halted(Halt::Aborted);
                    }
                }
            }
            if self.ctx.feasible(&self.colors, v, c) {
                self.colors[v] = c;
                match self.run(pos + 1, max_used.max(c)) {
                    Step::Exhausted => self.colors[v] = 0,
                    found_or_halted => return found_or_halted,
                }
            }
        }
        Step::Exhausted
    }
}

/// A complete depth-d prefix of the search tree, plus the number of shallow
/// attempts made since the previous prefix was emitted. The gap counts are
/// what lets the merge replay sequential node accounting exactly.
struct Prefix {
    assignment: Vec<(usize, u32)>,
    gap_before: u64,
    max_used: u32,
}

fn enumerate_prefixes(ctx: &Ctx, depth: usize) -> (Vec<Prefix>, u64) {
    fn rec(
        ctx: &Ctx,
        depth: usize,
        pos: usize,
        max_used: u32,
        colors: &mut Vec<u32>,
        gap: &mut u64,
        out: &mut Vec<Prefix>,
    ) {
        if pos == depth {
            out.push(Prefix {
                assignment: ctx.order[..depth]
                    .iter()
                    .map(|&v| (v, colors[v]))
                    .collect(),
                gap_before: std::mem::take(gap),
                max_used,
            });
            return;
        }
        let v = ctx.order[pos];
        for c in 1..=ctx.color_limit(max_used) {
            *gap += 1;
            if ctx.feasible(colors, v, c) {
                colors[v] = c;
                rec(ctx, depth, pos + 1, max_used.max(c), colors, gap, out);
                colors[v] = 0;
            }
        }
    }

    let mut colors = ctx.base.clone();
    let mut gap = 0;
    let mut out = Vec::new();
    rec(ctx, depth, 0, 0, &mut colors, &mut gap, &mut out);
    (out, gap)
}

struct JobResult {
    found: Option<Vec<u32>>,
    nodes: u64,
    halt: Option<Halt>,
}

pub(super) fn run_search(
    g: &Graph,
    k: u32,
    pins: &PartialAssignment,
    opts: &SolveOptions,
) -> Result<SearchOutcome> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let n = g.n();
    for (v, c) in pins.iter() {
        if v >= n {
            return Err(Error::InvalidParameter(format!(
                "pinned vertex {v} out of range for n = {n}"
            )));
        }
        if c > k {
            return Err(Error::InvalidParameter(format!(
                "pin {c} on vertex {v} exceeds the palette 1..={k}"
            )));
        }
    }
    let mut base = vec![0u32; n];
    for (v, c) in pins.iter() {
        base[v] = c;
    }
    for &(u, v) in g.edges() {
        if base[u] != 0 && base[u] == base[v] {
            return Err(Error::InvalidParameter(format!(
                "pins conflict on edge ({u}, {v})"
            )));
        }
    }

    let through = paths_through(g);
    // A violation entirely inside the pins is unfixable: infeasible, not an
    // error (only edge conflicts among pins are rejected as parameters).
    for paths in &through {
        for p in paths {
            let cs = p.map(|x| base[x]);
            if cs.iter().all(|&x| x != 0) && at_most_two_distinct(cs) {
                return Ok(SearchOutcome {
                    found: None,
                    nodes: 0,
                });
            }
        }
    }

    let mut order: Vec<usize> = (0..n).filter(|&v| base[v] == 0).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let ctx = Ctx {
        g,
        k,
        order,
        base,
        through,
        symmetry: pins.is_empty(),
        node_budget: opts.node_budget,
        deadline: Instant::now() + opts.time_budget,
    };

    if opts.workers <= 1 || ctx.order.len() <= 2 {
        return run_sequential(&ctx);
    }
    run_parallel(&ctx, opts.workers)
}

fn run_sequential(ctx: &Ctx) -> Result<SearchOutcome> {
    let mut dfs = Dfs::new(ctx, ctx.base.clone(), None);
    match dfs.run(0, 0) {
        Step::Found => Ok(SearchOutcome {
            found: Some(Coloring::new(dfs.colors).expect("search colors are positive")),
            nodes: dfs.nodes,
        }),
        Step::Exhausted => Ok(SearchOutcome {
            found: None,
            nodes: dfs.nodes,
        }),
        Step::Halted(_) => Err(Error::BudgetExhausted {
            nodes: dfs.nodes,
            infeasible: Vec::new(),
        }),
    }
}

fn run_parallel(ctx: &Ctx, workers: usize) -> Result<SearchOutcome> {
    // Grow the split depth until there are enough subtrees to feed the
    // workers. Each probe re-enumerates the shallow tree, which is tiny.
    let target = workers.saturating_mul(4);
    let max_depth = ctx.order.len().saturating_sub(1).min(10);
    let mut depth = 1;
    let (mut prefixes, mut tail_gap) = enumerate_prefixes(ctx, depth);
    while prefixes.len() < target && depth < max_depth && !prefixes.is_empty() {
        depth += 1;
        (prefixes, tail_gap) = enumerate_prefixes(ctx, depth);
    }

    let best_found = AtomicUsize::new(usize::MAX);
    let next_job = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<JobResult>>> = Mutex::new((0..prefixes.len()).map(|_| None).collect());

    std::thread::scope(|scope| {
        for _ in 0..workers.min(prefixes.len()) {
            scope.spawn(|| loop {
                let idx = next_job.fetch_add(1, Ordering::SeqCst);
                if idx >= prefixes.len() {
                    break;
                }
                let result = if idx > best_found.load(Ordering::SeqCst) {
                    JobResult {
                        found: None,
                        nodes: 0,
                        halt: Some(Halt::Aborted),
                    }
                } else {
                    let prefix = &prefixes[idx];
                    let mut colors = ctx.base.clone();
                    for &(v, c) in &prefix.assignment {
                        colors[v] = c;
                    }
                    let mut dfs = Dfs::new(ctx, colors, Some((&best_found, idx)));
                    match dfs.run(depth, prefix.max_used) {
                        Step::Found => {
                            best_found.fetch_min(idx, Ordering::SeqCst);
                            JobResult {
                                found: Some(dfs.colors),
                                nodes: dfs.nodes,
                                halt: None,
                            }
                        }
                        Step::Exhausted => JobResult {
                            found: None,
                            nodes: dfs.nodes,
                            halt: None,
                        },
                        Step::Halted(h) => JobResult {
                            found: None,
                            nodes: dfs.nodes,
                            halt: Some(h),
                        },
                    }
                };
                results.lock().unwrap()[idx] = Some(result);
            });
        }
    });

    // Replay the sequential accounting over the buffered results, in subtree
    // order, so the merge is independent of completion order.
    let results = results.into_inner().unwrap();
    let budget = ctx.node_budget;
    let mut cum: u64 = 0;
    for (prefix, result) in prefixes.iter().zip(&results) {
        cum = cum.saturating_add(prefix.gap_before);
        if cum > budget {
            return Err(Error::BudgetExhausted {
                nodes: budget,
                infeasible: Vec::new(),
            });
        }
        let result = result.as_ref().expect("job before first solution must have run");
        match (&result.found, &result.halt) {
            (Some(colors), _) => {
                let nodes = cum.saturating_add(result.nodes);
                if nodes > budget {
                    return Err(Error::BudgetExhausted {
                        nodes: budget,
                        infeasible: Vec::new(),
                    });
                }
                return Ok(SearchOutcome {
                    found: Some(Coloring::new(colors.clone()).expect("search colors are positive")),
                    nodes,
                });
            }
            (None, Some(Halt::NodeBudget)) => {
                return Err(Error::BudgetExhausted {
                    nodes: budget,
                    infeasible: Vec::new(),
                });
            }
            (None, Some(Halt::TimedOut)) => {
                return Err(Error::BudgetExhausted {
                    nodes: cum.saturating_add(result.nodes),
                    infeasible: Vec::new(),
                });
            }
            (None, Some(Halt::Aborted)) => {
                unreachable!("aborted subtrees always follow a found solution")
            }
            (None, None) => {
                cum = cum.saturating_add(result.nodes);
                if cum > budget {
                    return Err(Error::BudgetExhausted {
                        nodes: budget,
                        infeasible: Vec::new(),
                    });
                }
            }
        }
    }
    cum = cum.saturating_add(tail_gap);
    if cum > budget {
        return Err(Error::BudgetExhausted {
            nodes: budget,
            infeasible: Vec::new(),
        });
    }
    Ok(SearchOutcome {
        found: None,
        nodes: cum,
    })
}
