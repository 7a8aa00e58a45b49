//! The exhaustive game search: every interleaving of steals, memoized over
//! canonical states. Slow but assumption-free — it is the ground truth the
//! fast computations are tested against.
//!
//! ```text
//! cargo run --example exhaustive_oracle
//! ```

use stealbound::{
    apply_steal, configuration_potential, max_steals_exhaustive, max_steals_with, replay_sequence,
    Configuration, OracleError, OracleOptions, StealMove, Tree,
};

fn main() {
    // One steal in isolation: the victim loses its rightmost subtree; a
    // two-child root dissolves, a wider root just loses one child.
    let victim: Tree = "(. (. .) (. . .))".parse().unwrap();
    let (remaining, stolen) = apply_steal(&victim).expect("victim has >= 2 nodes");
    println!("steal from {victim}: victim keeps {remaining}, thief gets {stolen}");

    // The worked two-processor instance.
    let cfg = Configuration::new(vec![
        "(((. .) .) (. .))".parse().unwrap(),
        Tree::cbt(2),
    ]);
    let best = max_steals_exhaustive(&cfg, 1_000_000).expect("fits the state budget");
    let holdings: Vec<String> = cfg.trees.iter().map(Tree::to_string).collect();
    println!("\nstarting holdings: {}", holdings.join("  |  "));
    println!("max steals over every execution: {best}");
    assert_eq!(best, configuration_potential(&cfg).unwrap().total);

    // One execution achieving it: the second processor abandons its own
    // tree and robs the first processor three times.
    let script = [StealMove { thief: 1, victim: 0 }; 3];
    for end in 1..=script.len() {
        let state = replay_sequence(&cfg, &script[..end]).expect("legal script");
        let holdings: Vec<String> = state.trees.iter().map(Tree::to_string).collect();
        println!("after steal {end}: {}", holdings.join("  |  "));
    }

    // The search is budgeted: a tiny budget fails loudly instead of hanging.
    let options = OracleOptions { state_budget: 10, ..OracleOptions::default() };
    let big = Configuration::with_idle(Tree::cbt(4), 3);
    match max_steals_with(&big, &options) {
        Err(OracleError::BudgetExceeded { budget, explored }) => {
            println!("\nbudget {budget} exceeded after {explored} states, as requested");
        }
        other => panic!("expected a budget failure, got {other:?}"),
    }

    // With a real budget the same search finishes and matches the formula.
    let full = max_steals_exhaustive(&big, 1_000_000).expect("fits the state budget");
    println!("with the default budget: {full} steals (height-4 tree, 3 idle thieves)");
}
