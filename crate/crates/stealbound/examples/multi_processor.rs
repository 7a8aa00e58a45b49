//! Optimal worst-case totals when several processors start with their own
//! trees: an assignment problem between trees and "rank" positions.
//!
//! ```text
//! cargo run --example multi_processor
//! ```

use stealbound::{
    configuration_potential, configuration_potential_bruteforce, potential_vector,
    sorted_act_potential, ActSpec, Configuration, Tree,
};

fn main() {
    // The worked two-processor instance: one processor holds a nine-node
    // tree, the other a complete binary tree of height 2.
    let cfg = Configuration::new(vec![
        "(((. .) .) (. .))".parse().unwrap(),
        Tree::cbt(2),
    ]);

    // With P processors, the processor whose tree is consumed last sees the
    // most thieves. Rank r means "r processors may attack this tree", so the
    // optimum assigns trees to ranks 0..P to maximize the summed values.
    for (index, tree) in cfg.trees.iter().enumerate() {
        let table = potential_vector(tree, cfg.len() - 1);
        println!("tree {index}: {tree}");
        println!("  value by rank: {:?}", table.as_slice());
    }

    let result = configuration_potential(&cfg).expect("no overflow");
    println!("\noptimal total: {}", result.total);
    println!("tree index per rank: {:?}", result.order);

    // The O(P^3) assignment solver matches the P! brute force.
    let brute = configuration_potential_bruteforce(&cfg).expect("small enough");
    assert_eq!(result.total, brute);
    println!("brute force over every rank order agrees: {brute}");

    // The total is a property of the multiset of trees, not their order.
    let reversed = Configuration::new(cfg.trees.iter().rev().cloned().collect());
    assert_eq!(configuration_potential(&reversed).unwrap().total, result.total);

    // For same-k almost-complete trees there is a shortcut: sort ascending
    // by size and sum the closed forms rank by rank.
    let specs = vec![
        ActSpec::new(2, 3, 1).unwrap(),
        ActSpec::new(1, 3, 2).unwrap(),
        ActSpec::new(1, 3, 0).unwrap(),
    ];
    let fast = sorted_act_potential(&specs).expect("no overflow");
    let general = configuration_potential(&Configuration::new(
        specs.iter().map(|s| Tree::act(*s)).collect(),
    ))
    .expect("no overflow")
    .total;
    assert_eq!(fast, general);
    println!("\nsorted shortcut for {specs:?}: {fast} (general solver: {general})");
}
