//! Closed-form steal counts for the two structured families — complete
//! binary trees and almost-complete k-ary trees — checked against the
//! general dynamic program.
//!
//! ```text
//! cargo run --example closed_forms
//! ```

use stealbound::{
    act_potential_closed, cbt_potential_closed, potential_vector, ActSpec, Tree,
};

fn main() {
    // Complete binary tree of height h: the worst case is the sum of the
    // first n binomial coefficients of row h, so it saturates at 2^h - 1.
    println!("complete binary trees (rows: height, columns: idle count):");
    print!("{:>4}", "h\\n");
    for n in 0..=6 {
        print!("{n:>8}");
    }
    println!();
    for h in 0..=6u32 {
        print!("{h:>4}");
        for n in 0..=6usize {
            print!("{:>8}", cbt_potential_closed(h, n).expect("small values"));
        }
        println!();
    }

    // The same numbers from the general dynamic program on the built tree.
    let h = 6u32;
    let table = potential_vector(&Tree::cbt(h), 6);
    for n in 0..=6usize {
        assert_eq!(table.at(n), cbt_potential_closed(h, n).unwrap());
    }
    println!("dynamic program agrees for h = {h}: {:?}", table.as_slice());
    println!("saturation: 2^{h} - 1 = {}", (1u64 << h) - 1);

    // Almost-complete k-ary trees ACT(b, k, h): the root has b complete
    // k-ary height-h subtrees (for b = 1 the root of that single subtree is
    // the root itself). Closed form and dynamic program match exactly.
    let spec = ActSpec::new(2, 3, 2).expect("valid parameters");
    let tree = Tree::act(spec);
    println!("\n{spec}: {} nodes, {} leaves", tree.size(), tree.stats().leaves);
    let table = potential_vector(&tree, 6);
    for n in 0..=6usize {
        let closed = act_potential_closed(spec, n).expect("small values");
        assert_eq!(closed, table.at(n));
        println!("  n = {n}: {closed}");
    }

    // Parameters (k, k, h) and (1, k, h+1) name the same tree, and the
    // closed form gives identical numbers either way.
    let full = ActSpec::new(3, 3, 1).unwrap();
    let alias = ActSpec::new(1, 3, 2).unwrap();
    assert_eq!(Tree::act(full), Tree::act(alias));
    for n in 0..=6usize {
        assert_eq!(
            act_potential_closed(full, n).unwrap(),
            act_potential_closed(alias, n).unwrap(),
        );
    }
    println!("\n{full} and {alias} are the same tree with the same values");
}
