//! Worst-case steal counts ("potential") of a single tree, plus closed forms
//! for complete binary and almost-complete k-ary trees.
//!
//! `potential(t, n)` is the largest number of steals any execution can
//! perform when one processor owns `t` and `n` processors start idle. For a
//! binary tree with at least two nodes and `n >= 1` it satisfies
//!
//! ```text
//! potential(T, n) = 1 + max( potential(L, n-1) + potential(R, n),
//!                            potential(R, n-1) + potential(L, n) )
//! ```
//!
//! with value 0 for leaves, the empty tree, or `n = 0`. Non-binary trees are
//! first rewritten by the left-child right-sibling binarization, which
//! preserves the value for every `n`.

use thiserror::Error;

use crate::tree::{ActSpec, Tree};

/// Exact number of steals. All public arithmetic on these values is checked;
/// quantities that can exceed 64 bits surface [`Overflow`] instead of
/// wrapping.
pub type StealCount = u64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("value exceeds the 64-bit steal-count range")]
pub struct Overflow;

/// Binomial coefficient extended with zero: `C(a, b) = 0` whenever `b > a`.
/// Exact for every result that fits in 64 bits.
pub fn binomial(a: u64, b: u64) -> Result<u64, Overflow> {
    if b > a {
        return Ok(0);
    }
    let k = b.min(a - b);
    // res after step i equals C(a - k + i, i), so the division is exact.
    // 128-bit intermediates keep the final 64-bit range fully usable.
    let mut res: u128 = 1;
    for i in 1..=k {
        res = res
            .checked_mul((a - k + i) as u128)
            .ok_or(Overflow)?
            / i as u128;
    }
    res.try_into().map_err(|_| Overflow)
}

/// The potentials of one tree for every idle-processor count `0..=n`;
/// `at(i)` is `potential(tree, i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PotentialVector {
    values: Vec<StealCount>,
}

impl PotentialVector {
    /// Largest idle-processor count covered.
    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }

    /// `potential(tree, n)`. Panics if `n` exceeds [`Self::max_n`].
    pub fn at(&self, n: usize) -> StealCount {
        self.values[n]
    }

    pub fn as_slice(&self) -> &[StealCount] {
        &self.values
    }

    pub fn into_vec(self) -> Vec<StealCount> {
        self.values
    }
}

/// Parent vector from its two child vectors: entry `i` applies the recurrence
/// at idle count `i`. The steal counts are bounded by the node count of the
/// tree, so plain additions cannot wrap.
fn merge(left: &[u64], right: &[u64]) -> Vec<u64> {
    let mut out = vec![0; left.len()];
    for i in 1..left.len() {
        out[i] = 1 + (left[i - 1] + right[i]).max(right[i - 1] + left[i]);
    }
    out
}

/// Post-order evaluation that keeps one child vector per ancestor: O(h * n)
/// entries live at any time for a tree of height h.
fn binary_vector(tree: &Tree, n: usize) -> Vec<u64> {
    match tree {
        Tree::Empty | Tree::Leaf => vec![0; n + 1],
        Tree::Internal(children) => {
            let [left, right] = children.as_slice() else {
                panic!("potential requires binary trees after binarization; found arity {}", children.len());
            };
            merge(&binary_vector(left, n), &binary_vector(right, n))
        }
    }
}

fn with_binary<R>(tree: &Tree, f: impl FnOnce(&Tree) -> R) -> R {
    if tree.is_binary() {
        f(tree)
    } else {
        let binary = tree.to_lcrs_binary().expect("non-empty trees always binarize");
        f(&binary)
    }
}

/// Worst-case number of steals with one owner of `tree` and `n` idle
/// processors. Accepts any tree; non-binary input is binarized first.
pub fn potential(tree: &Tree, n: usize) -> StealCount {
    potential_vector(tree, n).at(n)
}

/// [`potential`] for every idle count `0..=n` in a single pass.
pub fn potential_vector(tree: &Tree, n: usize) -> PotentialVector {
    PotentialVector { values: with_binary(tree, |t| binary_vector(t, n)) }
}

/// Same values as [`potential_vector`], computed by the plainest possible
/// dynamic program: one vector per subtree, all of them retained until the
/// root is reached. This is the reference the space-lean path is checked
/// against.
pub fn potential_vector_reference(tree: &Tree, n: usize) -> PotentialVector {
    fn fill(tree: &Tree, n: usize, table: &mut Vec<Vec<u64>>) -> usize {
        let vector = match tree {
            Tree::Empty | Tree::Leaf => vec![0; n + 1],
            Tree::Internal(children) => {
                let [left, right] = children.as_slice() else {
                    panic!(
                        "potential requires binary trees after binarization; found arity {}",
                        children.len()
                    );
                };
                let l = fill(left, n, table);
                let r = fill(right, n, table);
                merge(&table[l], &table[r])
            }
        };
        table.push(vector);
        table.len() - 1
    }
    let values = with_binary(tree, |t| {
        let mut table = Vec::new();
        let root = fill(t, n, &mut table);
        table.swap_remove(root)
    });
    PotentialVector { values }
}

/// Closed form for the complete binary tree of height `h`:
/// `sum_{i=1..n} C(h, i)`, which saturates at `2^h - 1` once `n >= h`.
pub fn cbt_potential_closed(h: u32, n: usize) -> Result<StealCount, Overflow> {
    let mut total: u64 = 0;
    for i in 1..=(n as u64).min(h as u64) {
        total = total.checked_add(binomial(h as u64, i)?).ok_or(Overflow)?;
    }
    Ok(total)
}

/// Closed form for the almost-complete k-ary tree `(b, k, h)`:
///
/// ```text
/// sum_{i=1..n} (k-1)^i C(h, i)  +  (b-1) * sum_{i=0..n-1} (k-1)^i C(h, i)
/// ```
///
/// The `b = k` alias is evaluated at face value and agrees with the
/// canonical `(1, k, h+1)` parameters.
pub fn act_potential_closed(spec: ActSpec, n: usize) -> Result<StealCount, Overflow> {
    let k1 = (spec.k() - 1) as u64;
    let h = spec.h() as u64;
    // Terms with i > h vanish with the binomial; capping i avoids spurious
    // overflow in the power for large n.
    let mut total: u64 = 0;
    let mut power: u64 = 1;
    for i in 1..=(n as u64).min(h) {
        power = power.checked_mul(k1).ok_or(Overflow)?;
        let term = power.checked_mul(binomial(h, i)?).ok_or(Overflow)?;
        total = total.checked_add(term).ok_or(Overflow)?;
    }
    let b1 = (spec.b() - 1) as u64;
    if b1 > 0 && n > 0 {
        let mut power: u64 = 1;
        for i in 0..=(n as u64 - 1).min(h) {
            if i > 0 {
                power = power.checked_mul(k1).ok_or(Overflow)?;
            }
            let term = power.checked_mul(binomial(h, i)?).ok_or(Overflow)?;
            total = total.checked_add(b1.checked_mul(term).ok_or(Overflow)?).ok_or(Overflow)?;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(4, 2), Ok(6));
        assert_eq!(binomial(4, 0), Ok(1));
        assert_eq!(binomial(4, 4), Ok(1));
        assert_eq!(binomial(3, 5), Ok(0));
        assert_eq!(binomial(0, 0), Ok(1));
        assert_eq!(binomial(0, 1), Ok(0));
        assert_eq!(binomial(10, 3), Ok(120));
    }

    #[test]
    fn binomial_pascal_identity() {
        for a in 1..=34u64 {
            for b in 1..=a {
                assert_eq!(
                    binomial(a, b).unwrap(),
                    binomial(a - 1, b - 1).unwrap() + binomial(a - 1, b).unwrap()
                );
            }
        }
    }

    #[test]
    fn binomial_large_and_overflow() {
        assert_eq!(binomial(60, 30), Ok(118_264_581_564_861_424));
        // Largest central coefficient below 2^64, and the first one above it.
        assert_eq!(binomial(67, 33), Ok(14_226_520_737_620_288_370));
        assert_eq!(binomial(68, 34), Err(Overflow));
        assert_eq!(binomial(200, 100), Err(Overflow));
        // Far-off-center coefficients still work near the top.
        assert_eq!(binomial(200, 2), Ok(19_900));
    }

    #[test]
    fn potential_of_trivial_trees() {
        assert_eq!(potential(&Tree::Empty, 7), 0);
        assert_eq!(potential(&Tree::Leaf, 7), 0);
        assert_eq!(potential(&Tree::cbt(3), 0), 0);
    }

    #[test]
    fn potential_known_values() {
        assert_eq!(potential(&Tree::cbt(4), 1), 4);
        assert_eq!(potential(&Tree::cbt(2), 2), 3);
        // Nine-node two-processor workload used across the test suite.
        let t = Tree::parse("(((. .) .) (. .))").unwrap();
        assert_eq!(potential(&t, 1), 3);
        assert_eq!(potential(&t, 2), 4);
    }

    #[test]
    fn potential_vector_known_values() {
        assert_eq!(potential_vector(&Tree::Leaf, 3).as_slice(), &[0, 0, 0, 0]);
        assert_eq!(potential_vector(&Tree::cbt(2), 3).as_slice(), &[0, 2, 3, 3]);
        assert_eq!(potential_vector(&Tree::cbt(4), 4).as_slice(), &[0, 4, 10, 14, 15]);
        let v = potential_vector(&Tree::cbt(4), 4);
        assert_eq!(v.max_n(), 4);
        assert_eq!(v.at(2), 10);
    }

    #[test]
    fn reference_path_agrees() {
        for (tree, n) in [
            (Tree::Leaf, 3),
            (Tree::cbt(4), 6),
            (Tree::parse("(. (. . .) ((. .) . . .))").unwrap(), 5),
            (Tree::act(ActSpec::new(2, 3, 2).unwrap()), 4),
        ] {
            assert_eq!(
                potential_vector(&tree, n),
                potential_vector_reference(&tree, n),
                "tree {tree}"
            );
        }
    }

    #[test]
    fn cbt_closed_form_known_values() {
        assert_eq!(cbt_potential_closed(4, 2), Ok(10));
        assert_eq!(cbt_potential_closed(5, 10), Ok(31));
        assert_eq!(cbt_potential_closed(0, 9), Ok(0));
        assert_eq!(cbt_potential_closed(7, 0), Ok(0));
        // Saturation: with n >= h every internal node is eventually split.
        for h in 0..=12u32 {
            assert_eq!(cbt_potential_closed(h, h as usize), Ok((1u64 << h) - 1));
            assert_eq!(cbt_potential_closed(h, h as usize + 5), Ok((1u64 << h) - 1));
        }
    }

    #[test]
    fn cbt_closed_form_overflow() {
        assert!(cbt_potential_closed(100, 50).is_err());
        // Large height is fine while n keeps the partial sum small.
        assert_eq!(cbt_potential_closed(100, 1), Ok(100));
    }

    #[test]
    fn act_closed_form_known_values() {
        let spec = ActSpec::new(2, 3, 2).unwrap();
        assert_eq!(act_potential_closed(spec, 1), Ok(5));
        assert_eq!(act_potential_closed(spec, 0), Ok(0));
        // k = 2, b = 1 degenerates to the complete binary tree formula.
        for h in 0..=10u32 {
            for n in 0..=10usize {
                assert_eq!(
                    act_potential_closed(ActSpec::new(1, 2, h).unwrap(), n),
                    cbt_potential_closed(h, n)
                );
            }
        }
    }

    #[test]
    fn act_alias_consistency() {
        for k in 2..=5u32 {
            for h in 0..=3u32 {
                for n in 0..=8usize {
                    assert_eq!(
                        act_potential_closed(ActSpec::new(k, k, h).unwrap(), n),
                        act_potential_closed(ActSpec::new(1, k, h + 1).unwrap(), n),
                        "k={k} h={h} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn act_closed_form_overflow() {
        let spec = ActSpec::new(1, 200, 40).unwrap();
        assert_eq!(act_potential_closed(spec, 39), Err(Overflow));
    }
}
