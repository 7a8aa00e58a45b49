//! A miniature randomized audit: generate trees, binarize them, and confirm
//! the computed worst case against the exhaustive search wherever the search
//! is feasible.
//!
//! ```text
//! cargo run --example random_corpus
//! ```

use stealbound::{
    max_steals_exhaustive, potential, potential_vector, Configuration, Tree,
    DEFAULT_STATE_BUDGET,
};

fn main() {
    let mut audited = 0u32;
    let mut largest = 0u64;

    for seed in 0..60u64 {
        // Deterministic generation: same (leaves, arity, seed) in, same tree
        // out, so every run of this example prints the same report.
        let leaves = 1 + seed % 12;
        let arity = 2 + (seed % 4) as usize;
        let tree = Tree::random(leaves, arity, seed).expect("valid parameters");
        let stats = tree.stats();
        largest = largest.max(stats.size);

        // Cheap invariants on every tree.
        let binary = tree.to_lcrs_binary().expect("non-empty");
        assert!(binary.is_binary());
        assert_eq!(binary.stats().leaves, stats.leaves);
        let table = potential_vector(&tree, 4);
        for n in 1..=4 {
            assert!(table.at(n) >= table.at(n - 1), "steal counts are monotone");
        }

        // Exhaustive confirmation on the small ones.
        if stats.size <= 9 {
            audited += 1;
            for n in 0..=3usize {
                let cfg = Configuration::with_idle(tree.clone(), n);
                let searched =
                    max_steals_exhaustive(&cfg, DEFAULT_STATE_BUDGET).expect("small state space");
                assert_eq!(searched, potential(&tree, n), "tree {tree}, n = {n}");
            }
        }

        if seed < 6 {
            println!("seed {seed:>2}: {tree}");
            println!("        worst case for n in 0..=4: {:?}", table.as_slice());
        }
    }

    println!("...");
    println!("60 trees checked (largest {largest} nodes);");
    println!("{audited} small ones confirmed against the exhaustive search.");
}
