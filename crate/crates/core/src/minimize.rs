//! Accessibility, distinguishability and minimization.
//!
//! [`refine_partition`] is the Moore-style fixed-point refinement. The
//! Hopcroft worklist variant in [`refine_partition_hopcroft`] must produce the
//! identical (canonically numbered) partition.

use std::collections::{HashMap, VecDeque};

use crate::automaton::{Fsa, FsaParts, Word};

/// Block assignment for every state. Blocks are numbered in order of their
/// smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    block_of: Vec<usize>,
    num_blocks: usize,
}

impl Partition {
    /// Renumbers arbitrary block labels canonically.
    pub fn from_labels<T: std::hash::Hash + Eq>(labels: &[T]) -> Self {
        let mut ids: HashMap<&T, usize> = HashMap::new();
        let block_of = labels
            .iter()
            .map(|l| {
                let next = ids.len();
                *ids.entry(l).or_insert(next)
            })
            .collect();
        Partition {
            block_of,
            num_blocks: ids.len(),
        }
    }

    pub fn block_of(&self, q: usize) -> usize {
        self.block_of[q]
    }

    pub fn blocks(&self) -> &[usize] {
        &self.block_of
    }

    pub fn num_blocks(&self) -> usize {
        self.num_blocks
    }

    pub fn same_block(&self, q: usize, q2: usize) -> bool {
        self.block_of[q] == self.block_of[q2]
    }

    /// Members of each block, ascending.
    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks];
        for (q, &b) in self.block_of.iter().enumerate() {
            out[b].push(q);
        }
        out
    }
}

/// Shortest access words from the initial state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AccessMap {
    words: Vec<Option<Word>>,
    /// States in the order the breadth-first search discovered them.
    order: Vec<usize>,
}

impl AccessMap {
    pub fn is_accessible(&self, q: usize) -> bool {
        self.words[q].is_some()
    }

    pub fn word(&self, q: usize) -> Option<&Word> {
        self.words[q].as_ref()
    }

    pub fn discovery_order(&self) -> &[usize] {
        &self.order
    }

    pub fn all_accessible(&self) -> bool {
        self.words.iter().all(Option::is_some)
    }

    pub fn inaccessible(&self) -> impl Iterator<Item = usize> + '_ {
        self.words
            .iter()
            .enumerate()
            .filter(|(_, w)| w.is_none())
            .map(|(q, _)| q)
    }
}

/// Breadth-first search from the initial state, symbols in index order. The
/// first word to reach a state is shortest and lexicographically least among
/// the shortest.
pub fn accessible_states(fsa: &Fsa) -> AccessMap {
    let n = fsa.num_states();
    let mut words: Vec<Option<Word>> = vec![None; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::new();
    words[fsa.initial()] = Some(Word::empty());
    order.push(fsa.initial());
    queue.push_back(fsa.initial());
    while let Some(q) = queue.pop_front() {
        for sigma in 0..fsa.num_symbols() {
            let t = fsa.transition(sigma).apply(q);
            if words[t].is_none() {
                let mut w = words[q].clone().expect("queued states have words");
                w.push(sigma);
                words[t] = Some(w);
                order.push(t);
                queue.push_back(t);
            }
        }
    }
    AccessMap { words, order }
}

/// Coarsest output-respecting congruence: two states share a block iff no
/// word separates their outputs. Runs over all states, reachable or not.
pub fn refine_partition(fsa: &Fsa) -> Partition {
    let mut partition = Partition::from_labels(fsa.output_map());
    loop {
        let signatures: Vec<Vec<usize>> = (0..fsa.num_states())
            .map(|q| {
                let mut sig = Vec::with_capacity(fsa.num_symbols() + 1);
                sig.push(partition.block_of(q));
                sig.extend(
                    fsa.transitions()
                        .iter()
                        .map(|f| partition.block_of(f.apply(q))),
                );
                sig
            })
            .collect();
        let next = Partition::from_labels(&signatures);
        if next.num_blocks == partition.num_blocks {
            return next;
        }
        partition = next;
    }
}

/// Hopcroft's worklist refinement ("process the smaller half"). Produces the
/// same partition as [`refine_partition`].
pub fn refine_partition_hopcroft(fsa: &Fsa) -> Partition {
    let n = fsa.num_states();
    let k = fsa.num_symbols();

    // inverse[sigma][t] = states q with f_sigma(q) = t
    let mut inverse = vec![vec![Vec::new(); n]; k];
    for (sigma, f) in fsa.transitions().iter().enumerate() {
        for q in 0..n {
            inverse[sigma][f.apply(q)].push(q);
        }
    }

    let initial = Partition::from_labels(fsa.output_map());
    let mut blocks: Vec<Vec<usize>> = initial.members();
    let mut block_of = initial.block_of.clone();

    let mut worklist: VecDeque<(usize, usize)> = (0..blocks.len())
        .flat_map(|b| (0..k).map(move |sigma| (b, sigma)))
        .collect();
    let mut in_worklist = vec![vec![true; k]; blocks.len()];

    let mut marked = vec![false; n];
    while let Some((splitter, sigma)) = worklist.pop_front() {
        in_worklist[splitter][sigma] = false;
        let mut preimage = Vec::new();
        for &t in &blocks[splitter] {
            preimage.extend_from_slice(&inverse[sigma][t]);
        }
        let mut touched: Vec<usize> = Vec::new();
        for &q in &preimage {
            if !marked[q] {
                marked[q] = true;
                let b = block_of[q];
                if !touched.contains(&b) {
                    touched.push(b);
                }
            }
        }
        touched.sort_unstable();
        for b in touched {
            let (inside, outside): (Vec<usize>, Vec<usize>) =
                blocks[b].iter().partition(|&&q| marked[q]);
            if outside.is_empty() {
                continue;
            }
            let new_id = blocks.len();
            let (keep, split) = if inside.len() <= outside.len() {
                (outside, inside)
            } else {
                (inside, outside)
            };
            for &q in &split {
                block_of[q] = new_id;
            }
            blocks[b] = keep;
            blocks.push(split);
            in_worklist.push(vec![false; k]);
            let queued = in_worklist[b].clone();
            for (s, was_queued) in queued.into_iter().enumerate() {
                if was_queued {
                    in_worklist[new_id][s] = true;
                    worklist.push_back((new_id, s));
                } else {
                    let smaller = if blocks[b].len() <= blocks[new_id].len() {
                        b
                    } else {
                        new_id
                    };
                    in_worklist[smaller][s] = true;
                    worklist.push_back((smaller, s));
                }
            }
        }
        for q in preimage {
            marked[q] = false;
        }
    }
    Partition::from_labels(&block_of)
}

/// Shortest word `w` (lexicographically least among the shortest) with
/// `β(f_w(q)) ≠ β(f_w(q2))`, or `None` if the states are indistinguishable.
pub fn distinguishing_word(fsa: &Fsa, q: usize, q2: usize) -> Option<Word> {
    let n = fsa.num_states();
    let idx = |a: usize, b: usize| a * n + b;
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n * n];
    let mut seen = vec![false; n * n];
    let mut queue = VecDeque::new();
    seen[idx(q, q2)] = true;
    queue.push_back((q, q2));
    while let Some((a, b)) = queue.pop_front() {
        if fsa.output_of(a) != fsa.output_of(b) {
            let mut word = Vec::new();
            let mut cur = idx(a, b);
            while let Some((prev, sigma)) = parent[cur] {
                word.push(sigma);
                cur = prev;
            }
            word.reverse();
            return Some(Word::from(word));
        }
        for sigma in 0..fsa.num_symbols() {
            let f = fsa.transition(sigma);
            let next = (f.apply(a), f.apply(b));
            let j = idx(next.0, next.1);
            if !seen[j] {
                seen[j] = true;
                parent[j] = Some((idx(a, b), sigma));
                queue.push_back(next);
            }
        }
    }
    None
}

#[derive(Clone, Debug)]
pub struct MinimizationResult {
    pub minimized: Fsa,
    /// Original state → minimized state, `None` for removed (inaccessible)
    /// states.
    pub state_map: Vec<Option<usize>>,
    pub access: AccessMap,
}

/// Removes inaccessible states, merges indistinguishable ones and numbers the
/// result in breadth-first order from the initial state.
pub fn minimize(fsa: &Fsa) -> MinimizationResult {
    let access = accessible_states(fsa);
    let partition = refine_partition(fsa);

    // Each block is represented by its first accessible member in BFS order.
    let mut rep_of_block: Vec<Option<usize>> = vec![None; partition.num_blocks()];
    for &q in access.discovery_order() {
        rep_of_block[partition.block_of(q)].get_or_insert(q);
    }

    // Breadth-first numbering over the quotient machine.
    let mut new_of_block: Vec<Option<usize>> = vec![None; partition.num_blocks()];
    let start = partition.block_of(fsa.initial());
    new_of_block[start] = Some(0);
    let mut order = vec![start];
    let mut head = 0;
    while head < order.len() {
        let q = rep_of_block[order[head]].expect("reached blocks hold accessible states");
        head += 1;
        for f in fsa.transitions() {
            let b = partition.block_of(f.apply(q));
            if new_of_block[b].is_none() {
                new_of_block[b] = Some(order.len());
                order.push(b);
            }
        }
    }
    let reps: Vec<usize> = order
        .iter()
        .map(|&b| rep_of_block[b].expect("reached blocks hold accessible states"))
        .collect();
    let new_of = |q: usize| new_of_block[partition.block_of(q)].expect("accessible block");

    let transitions = fsa
        .transitions()
        .iter()
        .map(|f| reps.iter().map(|&q| new_of(f.apply(q))).collect())
        .collect();
    let minimized = Fsa::new(FsaParts {
        alphabet: fsa.alphabet().clone(),
        num_states: reps.len(),
        initial: 0,
        transitions,
        outputs: fsa.outputs().to_vec(),
        output_map: reps.iter().map(|&q| fsa.output_of(q)).collect(),
        state_names: Some(
            reps.iter()
                .map(|&q| fsa.state_name(q).to_string())
                .collect(),
        ),
    })
    .expect("quotient of a valid machine is valid");

    let state_map = (0..fsa.num_states())
        .map(|q| access.is_accessible(q).then(|| new_of(q)))
        .collect();
    let access = accessible_states(&minimized);
    MinimizationResult {
        minimized,
        state_map,
        access,
    }
}

/// Accessible and pairwise distinguishable.
pub fn is_minimal(fsa: &Fsa) -> bool {
    accessible_states(fsa).all_accessible()
        && refine_partition(fsa).num_blocks() == fsa.num_states()
}
