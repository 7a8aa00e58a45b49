//! The left-child right-sibling binarization: rewriting wide nodes into
//! binary combs without changing any worst-case steal count.
//!
//! ```text
//! cargo run --example lcrs_transform
//! ```

use stealbound::{potential_vector, Tree};

fn main() {
    // A node with m > 2 children becomes a comb: the first two children pair
    // up at the bottom and each remaining child attaches one level higher,
    // so stealing the comb's right arm takes exactly the subtree a steal of
    // the original wide node would have taken (the rightmost child).
    let wide: Tree = "(. . . .)".parse().unwrap();
    println!("{wide}  ->  {}", wide.to_lcrs_binary().unwrap());

    let nested: Tree = "(. (. . .) (. .))".parse().unwrap();
    println!("{nested}  ->  {}", nested.to_lcrs_binary().unwrap());

    // Node accounting: each internal node of arity m contributes m - 2 extra
    // nodes, which keeps the output below twice the input size.
    let tree: Tree = "((. . .) (. . . .) (. .))".parse().unwrap();
    let binary = tree.to_lcrs_binary().unwrap();
    let (before, after) = (tree.stats(), binary.stats());
    println!("\ninput : {tree}");
    println!("output: {binary}");
    println!("size {} -> {} (bound: {}), leaves {} -> {}",
        before.size, after.size, 2 * before.size, before.leaves, after.leaves);
    assert!(after.size <= 2 * before.size);
    assert_eq!(after.leaves, before.leaves);
    assert!(binary.is_binary());

    // Already-binary trees pass through unchanged, so the transform is
    // idempotent.
    assert_eq!(binary.to_lcrs_binary().unwrap(), binary);

    // The whole point: worst-case steal counts are preserved for every
    // idle-processor count.
    let direct = potential_vector(&tree, 6);
    let transformed = potential_vector(&binary, 6);
    assert_eq!(direct.as_slice(), transformed.as_slice());
    println!("steal counts unchanged for n in 0..=6: {:?}", direct.as_slice());
}
