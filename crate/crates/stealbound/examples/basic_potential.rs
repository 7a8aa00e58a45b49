//! Compute worst-case steal counts for a single tree.
//!
//! ```text
//! cargo run --example basic_potential
//! ```

use stealbound::{potential, potential_vector, Tree};

fn main() {
    // The text grammar: "." is a leaf, "(a b ...)" is a node with >= 2
    // children. This is the nine-node tree from the two-processor worked
    // example: a root whose left subtree is ((. .) .) and whose right
    // subtree is (. .).
    let tree: Tree = "(((. .) .) (. .))".parse().expect("valid tree text");
    let stats = tree.stats();
    println!("tree   : {tree}");
    println!("size   : {} nodes, {} leaves, height {}", stats.size, stats.leaves, stats.height);

    // potential(tree, n) is the largest number of steals any work-stealing
    // execution can perform when one processor owns `tree` and n more start
    // idle. One extra thief lets the execution cut the tree three times.
    println!("\nworst-case steals by idle-processor count:");
    for n in 0..=5 {
        println!("  n = {n}: {}", potential(&tree, n));
    }

    // potential_vector computes all values 0..=n in one pass over the tree.
    let table = potential_vector(&tree, 5);
    println!("\nsame values in one pass: {:?}", table.as_slice());

    // The value saturates once every internal node of the binarized tree can
    // be dissolved by a distinct steal.
    let ceiling = tree.to_lcrs_binary().expect("non-empty").stats().internal;
    println!("saturation ceiling (internal nodes after binarization): {ceiling}");
    assert_eq!(table.at(5), ceiling);
}
