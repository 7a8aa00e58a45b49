//! Multi-processor start configurations: every processor begins with its own
//! tree (possibly empty), and the worst-case total steal count is the best
//! assignment of trees to "ranks".
//!
//! Rank `r` means a tree is attacked while `r` other processors are already
//! out of work, so a configuration of `P` trees is worth
//! `max over permutations of sum_r potential(tree_at_rank_r, r)`. That is a
//! maximum-weight perfect assignment on a `P x P` profit matrix whose rows
//! are per-tree potential vectors; it is solved exactly in O(P^3).

use serde_json::Value;
use thiserror::Error;

use crate::potential::{act_potential_closed, potential_vector, Overflow, StealCount};
use crate::tree::{ActSpec, ParseError, Tree};

/// One start tree per processor. Order is irrelevant to the optimal total
/// (it only relabels the assignment).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    pub trees: Vec<Tree>,
}

impl Configuration {
    pub fn new(trees: Vec<Tree>) -> Configuration {
        Configuration { trees }
    }

    /// Convenience: one tree plus `idle` processors with no work.
    pub fn with_idle(tree: Tree, idle: usize) -> Configuration {
        let mut trees = vec![tree];
        trees.extend(std::iter::repeat(Tree::Empty).take(idle));
        Configuration { trees }
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    /// JSON encoding `{ "trees": [tree, ...] }` with the per-tree encoding of
    /// [`Tree::to_json`].
    pub fn to_json(&self) -> Value {
        serde_json::json!({ "trees": self.trees.iter().map(Tree::to_json).collect::<Vec<_>>() })
    }

    /// Parses `{ "trees": [tree, ...] }`.
    pub fn from_json(value: &Value) -> Result<Configuration, ParseError> {
        let Some(trees) = value.get("trees") else {
            return Err(ParseError::Json("expected an object with a \"trees\" array".into()));
        };
        let Some(items) = trees.as_array() else {
            return Err(ParseError::Json("\"trees\" must be an array".into()));
        };
        let trees = items.iter().map(Tree::from_json).collect::<Result<Vec<_>, _>>()?;
        Ok(Configuration { trees })
    }

    pub fn from_json_str(text: &str) -> Result<Configuration, ParseError> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
        Configuration::from_json(&value)
    }
}

/// Optimal total and the rank order that achieves it: `order[r]` is the index
/// into the configuration of the tree assigned rank `r`, and
/// `total == sum_r potential(trees[order[r]], r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssignmentResult {
    pub total: StealCount,
    pub order: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultiError {
    #[error("configuration has no processors")]
    EmptyConfiguration,
    #[error("brute force handles at most {max} trees, got {got}")]
    BruteForceTooLarge { max: usize, got: usize },
    #[error("all specs must share one branching factor k, found {0} and {1}")]
    MixedArity(u32, u32),
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

/// Worst-case total steal count of a configuration together with an optimal
/// rank order. O(P^3 + P * total tree size). Deterministic: equal inputs give
/// equal orders.
pub fn configuration_potential(cfg: &Configuration) -> Result<AssignmentResult, MultiError> {
    let p = cfg.trees.len();
    if p == 0 {
        return Err(MultiError::EmptyConfiguration);
    }
    let profits: Vec<Vec<u64>> =
        cfg.trees.iter().map(|t| potential_vector(t, p - 1).into_vec()).collect();
    let order = assign_max(&profits);
    let total = order.iter().enumerate().map(|(rank, &tree)| profits[tree][rank]).sum();
    Ok(AssignmentResult { total, order })
}

/// Maximum-weight perfect assignment: returns `order` with `order[col]` the
/// row assigned to column `col`. Classic Hungarian algorithm with dual
/// potentials on the costs `row_max - profit` (subtracting a per-row constant
/// flips maximization into minimization without moving the optimum).
fn assign_max(profits: &[Vec<u64>]) -> Vec<usize> {
    let n = profits.len();
    let cost: Vec<Vec<i64>> = profits
        .iter()
        .map(|row| {
            let top = *row.iter().max().expect("square matrix") as i64;
            row.iter().map(|&p| top - p as i64).collect()
        })
        .collect();

    const FREE: usize = usize::MAX;
    let inf = i64::MAX / 2;
    // 1-based columns; column 0 is the staging slot for the row being added.
    let mut u = vec![0i64; n + 1]; // row potentials (index 1..=n = row+1)
    let mut v = vec![0i64; n + 1]; // column potentials
    let mut matched = vec![FREE; n + 1]; // matched[j] = row on column j
    let mut way = vec![0usize; n + 1];

    for row in 0..n {
        matched[0] = row;
        let mut j0 = 0usize;
        let mut minv = vec![inf; n + 1];
        let mut used = vec![false; n + 1];
        // Grow an alternating tree of tight edges until a free column is hit.
        loop {
            used[j0] = true;
            let i0 = matched[j0];
            let mut delta = inf;
            let mut j1 = 0usize;
            for j in 1..=n {
                if !used[j] {
                    let reduced = cost[i0][j - 1] - u[i0 + 1] - v[j];
                    if reduced < minv[j] {
                        minv[j] = reduced;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[matched[j] + 1] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if matched[j0] == FREE {
                break;
            }
        }
        // Flip the augmenting path back to the staging slot.
        while j0 != 0 {
            let j1 = way[j0];
            matched[j0] = matched[j1];
            j0 = j1;
        }
    }
    (1..=n).map(|j| matched[j]).collect()
}

/// Reference implementation of [`configuration_potential`]: tries all `P!`
/// rank orders. Only the total is returned; limited to small `P`.
pub fn configuration_potential_bruteforce(cfg: &Configuration) -> Result<StealCount, MultiError> {
    use itertools::Itertools;

    const MAX_TREES: usize = 8;
    let p = cfg.trees.len();
    if p == 0 {
        return Err(MultiError::EmptyConfiguration);
    }
    if p > MAX_TREES {
        return Err(MultiError::BruteForceTooLarge { max: MAX_TREES, got: p });
    }
    let profits: Vec<Vec<u64>> =
        cfg.trees.iter().map(|t| potential_vector(t, p - 1).into_vec()).collect();
    Ok((0..p)
        .permutations(p)
        .map(|perm| perm.iter().enumerate().map(|(rank, &tree)| profits[tree][rank]).sum())
        .max()
        .expect("at least one permutation"))
}

/// Fast path for same-k almost-complete k-ary trees: the optimal order
/// processes them by ascending leaf count `b * k^h`, so the total is a direct
/// sum of closed forms. Errors on mixed `k`.
pub fn sorted_act_potential(specs: &[ActSpec]) -> Result<StealCount, MultiError> {
    let Some(first) = specs.first() else {
        return Err(MultiError::EmptyConfiguration);
    };
    if let Some(other) = specs.iter().find(|s| s.k() != first.k()) {
        return Err(MultiError::MixedArity(first.k(), other.k()));
    }
    let mut sized: Vec<(u64, &ActSpec)> = specs
        .iter()
        .map(|s| s.leaf_count().ok_or(Overflow).map(|c| (c, s)))
        .collect::<Result<_, _>>()?;
    sized.sort_by_key(|&(leaves, _)| leaves);
    let mut total: u64 = 0;
    for (rank, (_, spec)) in sized.into_iter().enumerate() {
        total = total
            .checked_add(act_potential_closed(*spec, rank)?)
            .ok_or(MultiError::Overflow(Overflow))?;
    }
    Ok(total)
}
