//! Brute-force ground truth: enumerate every legal work-stealing execution of
//! a small configuration and report the longest one.
//!
//! A steal has two steps. The thief first abandons whatever it holds (its
//! tree, if any, is destroyed). It then picks a victim owning more than one
//! node: if the victim's root has more than two children the thief takes the
//! subtree rooted at the rightmost child and the root stays behind with the
//! rest; if the root has exactly two children the thief takes the right
//! subtree, the victim keeps the left one, and the root vanishes.
//!
//! The search is an exact maximization over all interleavings, memoized on a
//! canonical state. It is exponential in nature and meant for validating the
//! fast paths on small inputs, not for production-size trees.

use std::collections::HashMap;

use thiserror::Error;

use crate::multi::Configuration;
use crate::potential::StealCount;
use crate::tree::Tree;

/// Default cap on distinct memoized states before the search gives up.
pub const DEFAULT_STATE_BUDGET: usize = 1_000_000;

/// Environment variable that overrides the state budget in the CLI.
pub const STATE_BUDGET_ENV: &str = "STEALBOUND_STATE_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum StealError {
    #[error("cannot steal from a holder of fewer than two nodes")]
    VictimTooSmall,
}

/// One steal against `victim`, returning `(remaining, stolen)`: the tree the
/// victim keeps and the tree the thief walks away with.
pub fn apply_steal(victim: &Tree) -> Result<(Tree, Tree), StealError> {
    match victim {
        Tree::Empty | Tree::Leaf => Err(StealError::VictimTooSmall),
        Tree::Internal(children) => {
            if children.len() == 2 {
                // The root disappears together with its last claimable child.
                Ok((children[0].clone(), children[1].clone()))
            } else {
                let mut rest = children.clone();
                let stolen = rest.pop().expect("internal node has children");
                Ok((Tree::Internal(rest), stolen))
            }
        }
    }
}

/// Knobs for [`max_steals_with`]. `allow_thief_abandon` controls whether a
/// processor still holding a stealable tree may throw it away to become a
/// thief; the exact semantics permit that, so verification keeps it on, but
/// it can be switched off to probe the (unproven) intuition that doing so
/// never helps. `memoize = false` degrades to plain exhaustive recursion for
/// cross-checking the canonicalization on tiny inputs.
#[derive(Debug, Clone, Copy)]
pub struct OracleOptions {
    pub state_budget: usize,
    pub allow_thief_abandon: bool,
    pub memoize: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            state_budget: DEFAULT_STATE_BUDGET,
            allow_thief_abandon: true,
            memoize: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("state budget of {budget} exceeded after exploring {explored} states")]
    BudgetExceeded { budget: usize, explored: usize },
}

/// Maximum number of steals over all legal executions of `cfg`, found by
/// exhaustive search with at most `state_budget` memoized states.
pub fn max_steals_exhaustive(
    cfg: &Configuration,
    state_budget: usize,
) -> Result<StealCount, OracleError> {
    max_steals_with(cfg, &OracleOptions { state_budget, ..OracleOptions::default() })
}

/// [`max_steals_exhaustive`] with every knob exposed.
pub fn max_steals_with(
    cfg: &Configuration,
    options: &OracleOptions,
) -> Result<StealCount, OracleError> {
    // Processor identity is irrelevant: a state is the multiset of trees that
    // can still be stolen from plus the number of processors holding at most
    // one node. Sorting canonicalizes the multiset.
    let mut live: Vec<Tree> = cfg.trees.iter().filter(|t| t.size() >= 2).cloned().collect();
    live.sort_unstable();
    let free = cfg.trees.len() - live.len();
    let mut search = Search { memo: HashMap::new(), options: *options };
    search.best_from(State { live, free })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct State {
    live: Vec<Tree>, // sorted; every entry has >= 2 nodes
    free: usize,
}

struct Search {
    memo: HashMap<State, u64>,
    options: OracleOptions,
}

impl Search {
    fn best_from(&mut self, state: State) -> Result<u64, OracleError> {
        if self.options.memoize {
            if let Some(&known) = self.memo.get(&state) {
                return Ok(known);
            }
        }
        let mut best = 0u64;
        for victim in 0..state.live.len() {
            // Equal victims lead to equal successor states.
            if victim > 0 && state.live[victim] == state.live[victim - 1] {
                continue;
            }
            let (remaining, stolen) =
                apply_steal(&state.live[victim]).expect("live trees have >= 2 nodes");
            if state.free > 0 {
                let next = state.successor(victim, None, &remaining, &stolen);
                best = best.max(1 + self.best_from(next)?);
            }
            if self.options.allow_thief_abandon {
                for thief in 0..state.live.len() {
                    if thief == victim {
                        continue;
                    }
                    // Equal abandoned trees lead to equal successor states
                    // (unless the skipped twin was the victim itself).
                    if thief > 0 && state.live[thief] == state.live[thief - 1] && thief - 1 != victim
                    {
                        continue;
                    }
                    let next = state.successor(victim, Some(thief), &remaining, &stolen);
                    best = best.max(1 + self.best_from(next)?);
                }
            }
        }
        if self.options.memoize {
            if self.memo.len() >= self.options.state_budget {
                return Err(OracleError::BudgetExceeded {
                    budget: self.options.state_budget,
                    explored: self.memo.len(),
                });
            }
            self.memo.insert(state, best);
        }
        Ok(best)
    }
}

impl State {
    /// State after one steal: `victim` is split into `remaining` (kept by the
    /// victim's holder) and `stolen` (now held by the thief); the thief is a
    /// free processor, or abandons `live[abandoned]` first.
    fn successor(
        &self,
        victim: usize,
        abandoned: Option<usize>,
        remaining: &Tree,
        stolen: &Tree,
    ) -> State {
        let mut live = Vec::with_capacity(self.live.len() + 1);
        for (i, tree) in self.live.iter().enumerate() {
            if i != victim && Some(i) != abandoned {
                live.push(tree.clone());
            }
        }
        let mut free = match abandoned {
            Some(_) => self.free,
            None => self.free - 1,
        };
        for part in [remaining, stolen] {
            if part.size() >= 2 {
                live.push(part.clone());
            } else {
                free += 1;
            }
        }
        live.sort_unstable();
        State { live, free }
    }
}

/// One scripted steal: processor `thief` abandons its own work (trivially, if
/// it holds at most one node) and steals from processor `victim`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StealMove {
    pub thief: usize,
    pub victim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("illegal move {index}: {reason}")]
    IllegalMove { index: usize, reason: String },
}

/// Final processor states after a scripted execution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplayResult {
    pub steals: StealCount,
    pub trees: Vec<Tree>,
}

/// Replays an explicit steal sequence against a configuration, validating
/// every move, and returns the steal count with the final per-processor
/// trees.
pub fn replay_sequence(cfg: &Configuration, moves: &[StealMove]) -> Result<ReplayResult, ReplayError> {
    let illegal = |index: usize, reason: String| ReplayError::IllegalMove { index, reason };
    let mut trees = cfg.trees.clone();
    for (index, mv) in moves.iter().enumerate() {
        for (name, processor) in [("thief", mv.thief), ("victim", mv.victim)] {
            if processor >= trees.len() {
                return Err(illegal(
                    index,
                    format!("{name} {processor} out of range for {} processors", trees.len()),
                ));
            }
        }
        if mv.thief == mv.victim {
            return Err(illegal(index, format!("processor {} cannot steal from itself", mv.thief)));
        }
        let (remaining, stolen) = apply_steal(&trees[mv.victim]).map_err(|e| {
            illegal(index, format!("victim {} holds {}: {e}", mv.victim, &trees[mv.victim]))
        })?;
        trees[mv.victim] = remaining;
        trees[mv.thief] = stolen;
    }
    Ok(ReplayResult { steals: moves.len() as u64, trees })
}
