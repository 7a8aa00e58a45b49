//! Rooted ordered computation trees: parsing, printing, generation and the
//! left-child right-sibling binarization.
//!
//! Text grammar: `tree := "." | "(" tree tree tree* ")"`, whitespace between
//! tokens is ignored, and the whole input `"()"` denotes the empty tree.
//! Internal nodes always have at least two children; a node with exactly one
//! child is rejected at parse time.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use thiserror::Error;

/// A rooted ordered tree. `Empty` is the no-work marker: it may describe a
/// whole processor's (absent) work but never appears as a child of an
/// internal node. Construct internal nodes through [`Tree::internal`] to keep
/// that invariant and the two-children minimum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree {
    Empty,
    Leaf,
    Internal(Vec<Tree>),
}

/// Size, height and node counts of a tree, all in nodes/edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TreeStats {
    pub size: u64,
    pub height: u64,
    pub leaves: u64,
    pub internal: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("internal node requires at least two children, got {0}")]
    TooFewChildren(usize),
    #[error("the empty tree cannot be a child of an internal node")]
    EmptyChild,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("the empty tree has no left-child right-sibling form")]
    EmptyTree,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("node opened at byte {pos} has exactly one child; a node has none or at least two")]
    SingletonNode { pos: usize },
    #[error("invalid JSON tree: {0}")]
    Json(String),
}

fn syntax(pos: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { pos, message: message.into() }
}

impl Tree {
    /// Checked constructor for internal nodes: at least two children, none of
    /// them `Empty`.
    pub fn internal(children: Vec<Tree>) -> Result<Tree, TreeError> {
        if children.len() < 2 {
            return Err(TreeError::TooFewChildren(children.len()));
        }
        if children.iter().any(|c| matches!(c, Tree::Empty)) {
            return Err(TreeError::EmptyChild);
        }
        Ok(Tree::Internal(children))
    }

    /// Parses the text grammar. `"()"` (whole input only) is the empty tree.
    pub fn parse(text: &str) -> Result<Tree, ParseError> {
        // Explicit stack of open nodes: (byte offset of '(', children so far).
        let mut open: Vec<(usize, Vec<Tree>)> = Vec::new();
        let mut result: Option<Tree> = None;
        let mut attach = |tree: Tree, pos: usize, open: &mut Vec<(usize, Vec<Tree>)>| {
            if let Some((_, children)) = open.last_mut() {
                children.push(tree);
                Ok(())
            } else if result.is_none() {
                result = Some(tree);
                Ok(())
            } else {
                Err(syntax(pos, "unexpected input after a complete tree"))
            }
        };
        for (pos, ch) in text.char_indices() {
            match ch {
                c if c.is_whitespace() => {}
                '.' => attach(Tree::Leaf, pos, &mut open)?,
                '(' => open.push((pos, Vec::new())),
                ')' => {
                    let Some((start, children)) = open.pop() else {
                        return Err(syntax(pos, "unmatched ')'"));
                    };
                    match children.len() {
                        0 if open.is_empty() => attach(Tree::Empty, pos, &mut open)?,
                        0 => return Err(syntax(pos, "expected a subtree, found ')'")),
                        1 => return Err(ParseError::SingletonNode { pos: start }),
                        _ => attach(Tree::Internal(children), pos, &mut open)?,
                    }
                }
                other => {
                    return Err(syntax(pos, format!("expected '.', '(' or ')', found {other:?}")))
                }
            }
        }
        if let Some((start, _)) = open.last() {
            return Err(syntax(*start, "unclosed '('"));
        }
        result.ok_or_else(|| syntax(text.len(), "expected a tree, found end of input"))
    }

    /// Complete binary tree of the given height: 2^(h+1) - 1 nodes, 2^h
    /// leaves. Height 0 is a single leaf.
    pub fn cbt(h: u32) -> Tree {
        if h == 0 {
            Tree::Leaf
        } else {
            let child = Tree::cbt(h - 1);
            Tree::Internal(vec![child.clone(), child])
        }
    }

    /// Almost-complete `k`-ary tree: `b * k^h` leaves arranged as `b` complete
    /// `k`-ary subtrees of height `h` under one root when `b > 1`, and as the
    /// complete `k`-ary tree of height `h` when `b == 1`.
    pub fn act(spec: ActSpec) -> Tree {
        fn complete(k: u32, h: u32) -> Tree {
            if h == 0 {
                Tree::Leaf
            } else {
                let child = complete(k, h - 1);
                Tree::Internal(vec![child; k as usize])
            }
        }
        if spec.b == 1 {
            complete(spec.k, spec.h)
        } else {
            let child = complete(spec.k, spec.h);
            Tree::Internal(vec![child; spec.b as usize])
        }
    }

    /// Deterministic pseudo-random tree with exactly `leaf_count` leaves and
    /// node arity between 2 and `max_arity`. The leaf budget is repeatedly
    /// partitioned: arity drawn uniformly, then a uniform composition of the
    /// budget among the children. Identical arguments yield identical trees.
    pub fn random(leaf_count: u64, max_arity: usize, seed: u64) -> Result<Tree, TreeError> {
        if leaf_count == 0 {
            return Err(TreeError::InvalidParameter("leaf count must be at least 1".into()));
        }
        if max_arity < 2 {
            return Err(TreeError::InvalidParameter("maximum arity must be at least 2".into()));
        }
        let leaves: usize = leaf_count
            .try_into()
            .map_err(|_| TreeError::InvalidParameter("leaf count too large".into()))?;
        fn build(leaves: usize, max_arity: usize, rng: &mut ChaCha8Rng) -> Tree {
            if leaves == 1 {
                return Tree::Leaf;
            }
            let arity = rng.gen_range(2..=max_arity.min(leaves));
            // A uniform composition of `leaves` into `arity` positive parts:
            // arity-1 distinct cut points inside 1..leaves.
            let mut cuts = rand::seq::index::sample(rng, leaves - 1, arity - 1).into_vec();
            cuts.sort_unstable();
            let mut children = Vec::with_capacity(arity);
            let mut prev = 0usize;
            for cut in cuts.into_iter().map(|c| c + 1).chain(std::iter::once(leaves)) {
                children.push(build(cut - prev, max_arity, rng));
                prev = cut;
            }
            Tree::Internal(children)
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Ok(build(leaves, max_arity, &mut rng))
    }

    /// All node counts in one post-order pass. The empty tree measures zero
    /// everywhere; a leaf has size 1 and height 0.
    pub fn stats(&self) -> TreeStats {
        match self {
            Tree::Empty => TreeStats::default(),
            Tree::Leaf => TreeStats { size: 1, height: 0, leaves: 1, internal: 0 },
            Tree::Internal(children) => {
                let mut acc = TreeStats { size: 1, height: 0, leaves: 0, internal: 1 };
                for child in children {
                    let s = child.stats();
                    acc.size += s.size;
                    acc.height = acc.height.max(s.height + 1);
                    acc.leaves += s.leaves;
                    acc.internal += s.internal;
                }
                acc
            }
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> u64 {
        match self {
            Tree::Empty => 0,
            Tree::Leaf => 1,
            Tree::Internal(children) => 1 + children.iter().map(Tree::size).sum::<u64>(),
        }
    }

    /// Child slice; empty for leaves and the empty tree.
    pub fn children(&self) -> &[Tree] {
        match self {
            Tree::Internal(children) => children,
            _ => &[],
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Tree::Empty)
    }

    /// True when every internal node has exactly two children.
    pub fn is_binary(&self) -> bool {
        match self {
            Tree::Empty | Tree::Leaf => true,
            Tree::Internal(children) => children.len() == 2 && children.iter().all(Tree::is_binary),
        }
    }

    /// Left-child right-sibling binarization. A node with children
    /// `c1 .. cm`, `m > 2`, becomes a two-child node whose right child is the
    /// converted `cm` and whose left child is the same construction over
    /// `c1 .. c(m-1)`, bottoming out in a node over `c1 c2`. Nodes with two
    /// children are kept. The result is binary, has the same leaves in the
    /// same order, and gains exactly `m - 2` nodes per wide node.
    pub fn to_lcrs_binary(&self) -> Result<Tree, TreeError> {
        fn convert(tree: &Tree) -> Tree {
            match tree {
                Tree::Empty => unreachable!("empty tree is rejected before conversion"),
                Tree::Leaf => Tree::Leaf,
                Tree::Internal(children) => {
                    let mut acc =
                        Tree::Internal(vec![convert(&children[0]), convert(&children[1])]);
                    for child in &children[2..] {
                        acc = Tree::Internal(vec![acc, convert(child)]);
                    }
                    acc
                }
            }
        }
        match self {
            Tree::Empty => Err(TreeError::EmptyTree),
            tree => Ok(convert(tree)),
        }
    }

    /// JSON encoding: leaf is `0`, an internal node is the array of its
    /// children, the empty tree is `null`.
    pub fn to_json(&self) -> Value {
        match self {
            Tree::Empty => Value::Null,
            Tree::Leaf => Value::from(0u32),
            Tree::Internal(children) => Value::Array(children.iter().map(Tree::to_json).collect()),
        }
    }

    /// Decodes the JSON encoding produced by [`Tree::to_json`]. `null` is
    /// accepted only as the whole value, mirroring the text grammar.
    pub fn from_json(value: &Value) -> Result<Tree, ParseError> {
        fn node(value: &Value) -> Result<Tree, ParseError> {
            match value {
                Value::Number(n) if n.as_u64() == Some(0) => Ok(Tree::Leaf),
                Value::Array(items) if items.len() >= 2 => {
                    let children = items.iter().map(node).collect::<Result<Vec<_>, _>>()?;
                    Ok(Tree::Internal(children))
                }
                Value::Array(items) => Err(ParseError::Json(format!(
                    "internal node requires at least two children, got {}",
                    items.len()
                ))),
                Value::Null => {
                    Err(ParseError::Json("null (empty tree) cannot be a child".into()))
                }
                other => Err(ParseError::Json(format!("expected 0 or an array, found {other}"))),
            }
        }
        match value {
            Value::Null => Ok(Tree::Empty),
            other => node(other),
        }
    }
}

impl fmt::Display for Tree {
    /// Canonical text: `"()"`, `"."`, or `"(child child ...)"` with single
    /// spaces. `parse` of the output returns the identical tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Empty => f.write_str("()"),
            Tree::Leaf => f.write_str("."),
            Tree::Internal(children) => {
                f.write_str("(")?;
                for (i, child) in children.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{child}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl FromStr for Tree {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Tree::parse(s)
    }
}

/// Parameters `(b, k, h)` of an almost-complete `k`-ary tree: `k >= 2`,
/// `1 <= b <= k`. `b = k` is an accepted alias of `(1, k, h + 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ActSpec {
    b: u32,
    k: u32,
    h: u32,
}

impl ActSpec {
    pub fn new(b: u32, k: u32, h: u32) -> Result<ActSpec, TreeError> {
        if k < 2 {
            return Err(TreeError::InvalidParameter(format!("branching factor k={k} must be >= 2")));
        }
        if b < 1 || b > k {
            return Err(TreeError::InvalidParameter(format!("b={b} must satisfy 1 <= b <= k={k}")));
        }
        Ok(ActSpec { b, k, h })
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn h(&self) -> u32 {
        self.h
    }

    /// Rewrites the `b = k` alias to the canonical `(1, k, h + 1)` form.
    pub fn canonical(&self) -> ActSpec {
        if self.b == self.k {
            ActSpec { b: 1, k: self.k, h: self.h + 1 }
        } else {
            *self
        }
    }

    /// `b * k^h`, or `None` if it does not fit in 64 bits.
    pub fn leaf_count(&self) -> Option<u64> {
        (self.k as u64).checked_pow(self.h).and_then(|p| p.checked_mul(self.b as u64))
    }
}

impl fmt::Display for ActSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ACT({},{},{})", self.b, self.k, self.h)
    }
}

impl FromStr for ActSpec {
    type Err = TreeError;

    /// Parses the `"b,k,h"` form used on the command line.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [b, k, h] = parts.as_slice() else {
            return Err(TreeError::InvalidParameter(format!(
                "expected three comma-separated integers b,k,h, got {s:?}"
            )));
        };
        let parse = |name: &str, text: &str| {
            text.parse::<u32>().map_err(|_| {
                TreeError::InvalidParameter(format!("{name} must be a non-negative integer, got {text:?}"))
            })
        };
        ActSpec::new(parse("b", b)?, parse("k", k)?, parse("h", h)?)
    }
}

/// Every ordered rooted tree with at most `max_nodes` nodes whose internal
/// nodes have between 2 and `max_arity` children, smallest sizes first.
pub fn enumerate_trees(max_nodes: usize, max_arity: usize) -> Vec<Tree> {
    use itertools::Itertools;

    fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
        if parts == 1 {
            return if total >= 1 { vec![vec![total]] } else { Vec::new() };
        }
        let mut out = Vec::new();
        for first in 1..=total.saturating_sub(parts - 1) {
            for mut rest in compositions(total - first, parts - 1) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    let mut by_size: Vec<Vec<Tree>> = vec![Vec::new(); max_nodes + 1];
    if max_nodes >= 1 {
        by_size[1] = vec![Tree::Leaf];
    }
    for size in 2..=max_nodes {
        let mut trees = Vec::new();
        for arity in 2..=max_arity.min(size - 1) {
            for parts in compositions(size - 1, arity) {
                for children in parts
                    .iter()
                    .map(|&p| by_size[p].iter().cloned())
                    .multi_cartesian_product()
                {
                    trees.push(Tree::Internal(children));
                }
            }
        }
        by_size[size] = trees;
    }
    by_size.into_iter().flatten().collect()
}
