//! Self-check suites: cross-validate the fast paths against the exhaustive
//! oracle, the closed forms against the dynamic program, and the assignment
//! solver against brute force. Exposed to the command line as `verify`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::multi::{
    configuration_potential, configuration_potential_bruteforce, sorted_act_potential,
    Configuration,
};
use crate::oracle::max_steals_exhaustive;
use crate::potential::{
    act_potential_closed, binomial, cbt_potential_closed, potential, potential_vector,
    potential_vector_reference,
};
use crate::tree::{enumerate_trees, ActSpec, Tree};

/// Bounds for the suites; the defaults match the sizes the project is
/// validated with.
#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    /// Largest tree size fed to the exhaustive oracle.
    pub max_nodes: usize,
    /// Largest idle-processor count fed to the exhaustive oracle.
    pub max_n: usize,
    /// Largest processor count in random configurations.
    pub max_p: usize,
    /// Number of random configurations in the assignment suite.
    pub cases: usize,
    /// Memoized-state cap for the exhaustive oracle.
    pub state_budget: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_nodes: 9,
            max_n: 4,
            max_p: 6,
            cases: 200,
            state_budget: crate::oracle::DEFAULT_STATE_BUDGET,
        }
    }
}

/// Result of one named property: how many individual checks ran and the
/// first failure, if any.
#[derive(Debug, Clone)]
pub struct PropertyOutcome {
    pub name: String,
    pub checks: u64,
    pub failure: Option<String>,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

struct Checker {
    checks: u64,
    failure: Option<String>,
}

impl Checker {
    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, got: T, want: T, context: impl Fn() -> String) {
        self.checks += 1;
        if self.failure.is_none() && got != want {
            self.failure = Some(format!("{}: got {got:?}, want {want:?}", context()));
        }
    }

    fn ok(&mut self, condition: bool, context: impl Fn() -> String) {
        self.checks += 1;
        if self.failure.is_none() && !condition {
            self.failure = Some(context());
        }
    }
}

fn property(name: &str, run: impl FnOnce(&mut Checker)) -> PropertyOutcome {
    let mut checker = Checker { checks: 0, failure: None };
    run(&mut checker);
    PropertyOutcome { name: name.into(), checks: checker.checks, failure: checker.failure }
}

/// Exhaustive oracle versus the dynamic program on every tree up to
/// `max_nodes` nodes (arity up to 4) and every idle count up to `max_n`.
pub fn small_oracle_suite(options: &SuiteOptions) -> Vec<PropertyOutcome> {
    vec![property("oracle-vs-potential", |c| {
        for tree in enumerate_trees(options.max_nodes, 4) {
            let vector = potential_vector(&tree, options.max_n);
            for n in 0..=options.max_n {
                let cfg = Configuration::with_idle(tree.clone(), n);
                match max_steals_exhaustive(&cfg, options.state_budget) {
                    Ok(steals) => {
                        c.eq(steals, vector.at(n), || format!("tree {tree}, {n} idle"))
                    }
                    Err(err) => c.ok(false, || format!("tree {tree}, {n} idle: {err}")),
                }
            }
        }
    })]
}

/// Closed forms versus the dynamic program on materialized trees, the alias
/// identity, the two dynamic-program code paths, and Pascal's rule.
pub fn closed_forms_suite() -> Vec<PropertyOutcome> {
    let cbt = property("cbt-closed-vs-potential", |c| {
        for h in 0..=10u32 {
            let tree = Tree::cbt(h);
            let vector = potential_vector(&tree, 10);
            for n in 0..=10usize {
                let closed = cbt_potential_closed(h, n).expect("small grid");
                c.eq(closed, vector.at(n), || format!("cbt h={h} n={n}"));
                if n >= h as usize {
                    c.eq(closed, (1u64 << h) - 1, || format!("cbt saturation h={h} n={n}"));
                }
            }
        }
    });
    let act = property("act-closed-vs-potential", |c| {
        for k in 2..=4u32 {
            for b in 1..k {
                for h in 0..=3u32 {
                    let spec = ActSpec::new(b, k, h).expect("valid grid");
                    let vector = potential_vector(&Tree::act(spec), 6);
                    for n in 0..=6usize {
                        let closed = act_potential_closed(spec, n).expect("small grid");
                        c.eq(closed, vector.at(n), || format!("{spec} n={n}"));
                    }
                }
            }
        }
    });
    let alias = property("act-alias-consistency", |c| {
        for k in 2..=4u32 {
            for h in 0..=3u32 {
                for n in 0..=6usize {
                    c.eq(
                        act_potential_closed(ActSpec::new(k, k, h).expect("alias"), n)
                            .expect("small grid"),
                        act_potential_closed(ActSpec::new(1, k, h + 1).expect("canonical"), n)
                            .expect("small grid"),
                        || format!("alias k={k} h={h} n={n}"),
                    );
                }
            }
        }
    });
    let reference = property("potential-paths-agree", |c| {
        let mut trees = vec![Tree::cbt(5), Tree::act(ActSpec::new(2, 3, 2).expect("valid"))];
        trees.extend((0..20).map(|s| Tree::random(1 + s as u64 % 12, 5, s).expect("valid")));
        for tree in trees {
            c.eq(
                potential_vector(&tree, 6),
                potential_vector_reference(&tree, 6),
                || format!("tree {tree}"),
            );
        }
    });
    let pascal = property("pascal-identity", |c| {
        for a in 1..=34u64 {
            for b in 1..=a {
                c.eq(
                    binomial(a, b).expect("small grid"),
                    binomial(a - 1, b - 1).expect("small grid")
                        + binomial(a - 1, b).expect("small grid"),
                    || format!("C({a},{b})"),
                );
            }
        }
    });
    vec![cbt, act, alias, reference, pascal]
}

/// Deterministic pseudo-random configuration: between 1 and `max_p` trees,
/// each empty with probability 1/5, otherwise up to 4 levels of branching
/// with at most 7 nodes.
fn random_configuration(rng: &mut ChaCha8Rng, max_p: usize) -> Configuration {
    let p = rng.gen_range(1..=max_p);
    let trees = (0..p)
        .map(|_| {
            if rng.gen_range(0..5) == 0 {
                Tree::Empty
            } else {
                let leaves = rng.gen_range(1..=4u64);
                Tree::random(leaves, 4, rng.gen()).expect("valid parameters")
            }
        })
        .collect();
    Configuration::new(trees)
}

/// Assignment solver versus brute force on random configurations, order
/// invariance, the single-tree reduction, and the sorted fast path for
/// same-k families.
pub fn multi_suite(options: &SuiteOptions) -> Vec<PropertyOutcome> {
    let max_p = options.max_p.min(8); // brute force bound
    let assignment = property("assignment-vs-bruteforce", |c| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EA1);
        for case in 0..options.cases {
            let cfg = random_configuration(&mut rng, max_p);
            let fast = configuration_potential(&cfg).expect("non-empty");
            let slow = configuration_potential_bruteforce(&cfg).expect("non-empty, small");
            c.eq(fast.total, slow, || format!("case {case}: {:?}", cfg.trees.iter().map(Tree::to_string).collect::<Vec<_>>()));
            let recomputed: u64 = fast
                .order
                .iter()
                .enumerate()
                .map(|(rank, &tree)| potential(&cfg.trees[tree], rank))
                .sum();
            c.eq(recomputed, fast.total, || format!("case {case}: order inconsistent"));
        }
    });
    let reorder = property("reorder-invariance", |c| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x0D0E);
        for case in 0..options.cases {
            let cfg = random_configuration(&mut rng, options.max_p);
            let total = configuration_potential(&cfg).expect("non-empty").total;
            let mut reversed = cfg.clone();
            reversed.trees.reverse();
            c.eq(
                configuration_potential(&reversed).expect("non-empty").total,
                total,
                || format!("case {case} reversed"),
            );
            let mut rotated = cfg.clone();
            let by = rng.gen_range(0..rotated.trees.len());
            rotated.trees.rotate_left(by);
            c.eq(
                configuration_potential(&rotated).expect("non-empty").total,
                total,
                || format!("case {case} rotated by {by}"),
            );
        }
    });
    let idle = property("idle-reduction", |c| {
        let mut trees = vec![
            Tree::cbt(3),
            Tree::parse("(((. .) .) (. .))").expect("valid"),
            Tree::parse("(. . . .)").expect("valid"),
        ];
        trees.extend((0..10).map(|s| Tree::random(1 + s as u64 % 6, 4, 1000 + s).expect("valid")));
        for tree in trees {
            for n in 0..=4usize {
                c.eq(
                    configuration_potential(&Configuration::with_idle(tree.clone(), n))
                        .expect("non-empty")
                        .total,
                    potential(&tree, n),
                    || format!("tree {tree}, {n} idle"),
                );
            }
        }
    });
    let sorted_act = property("sorted-act-fast-path", |c| {
        use itertools::Itertools;
        for k in 2..=3u32 {
            let specs: Vec<ActSpec> = (1..k)
                .flat_map(|b| (0..=2).map(move |h| ActSpec::new(b, k, h).expect("valid grid")))
                .collect();
            for len in 1..=3usize {
                for seq in specs.iter().copied().combinations_with_replacement(len) {
                    let cfg = Configuration::new(seq.iter().map(|&s| Tree::act(s)).collect());
                    c.eq(
                        sorted_act_potential(&seq).expect("same k"),
                        configuration_potential(&cfg).expect("non-empty").total,
                        || format!("k={k} seq {seq:?}"),
                    );
                }
            }
        }
    });
    vec![assignment, reorder, idle, sorted_act]
}
