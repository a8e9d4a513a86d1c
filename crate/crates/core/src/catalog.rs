//! Small named machines used throughout the tests, the acceptance suite and
//! the command-line fixtures.

use crate::automaton::{Alphabet, Fsa, FsaParts};

fn build(
    symbols: &[&str],
    transitions: Vec<Vec<usize>>,
    initial: usize,
    outputs: &[&str],
    output_map: Vec<usize>,
    state_names: Option<&[&str]>,
) -> Fsa {
    Fsa::new(FsaParts {
        alphabet: Alphabet::new(symbols.iter().copied()).expect("catalog alphabet"),
        num_states: output_map.len(),
        initial,
        transitions,
        outputs: outputs.iter().map(|s| s.to_string()).collect(),
        output_map,
        state_names: state_names.map(|n| n.iter().map(|s| s.to_string()).collect()),
    })
    .expect("catalog machine is well formed")
}

/// Counts `a` modulo 3; `b` is the identity. Outputs the count.
pub fn mod3_counter() -> Fsa {
    build(
        &["a", "b"],
        vec![vec![1, 2, 0], vec![0, 1, 2]],
        0,
        &["0", "1", "2"],
        vec![0, 1, 2],
        None,
    )
}

/// The mod-3 counter with outputs `low` for counts 0 and 1, `high` for 2.
pub fn mod3_low_high() -> Fsa {
    build(
        &["a", "b"],
        vec![vec![1, 2, 0], vec![0, 1, 2]],
        0,
        &["low", "high"],
        vec![0, 0, 1],
        None,
    )
}

/// Counts `a` modulo 5; `b` is the identity.
pub fn mod5_counter() -> Fsa {
    build(
        &["a", "b"],
        vec![vec![1, 2, 3, 4, 0], vec![0, 1, 2, 3, 4]],
        0,
        &["0", "1", "2", "3", "4"],
        vec![0, 1, 2, 3, 4],
        None,
    )
}

/// Counts `a` up to 2 and stays there; `b` is the identity.
pub fn saturating_adder() -> Fsa {
    build(
        &["a", "b"],
        vec![vec![1, 2, 2], vec![0, 1, 2]],
        0,
        &["0", "1", "2+"],
        vec![0, 1, 2],
        None,
    )
}

/// Accepts once at least three `a` have been read, over `{a, b, c}`.
pub fn threshold_a3() -> Fsa {
    build(
        &["a", "b", "c"],
        vec![vec![1, 2, 3, 3], vec![0, 1, 2, 3], vec![0, 1, 2, 3]],
        0,
        &["no", "yes"],
        vec![0, 0, 0, 1],
        None,
    )
}

/// Tracks the parity of `a` and whether any `b` occurred; `c` is ignored.
/// State `2p + s` holds parity `p` and seen-flag `s`.
pub fn parity_and_seen_b() -> Fsa {
    build(
        &["a", "b", "c"],
        vec![vec![2, 3, 0, 1], vec![1, 1, 3, 3], vec![0, 1, 2, 3]],
        0,
        &["even", "even+b", "odd", "odd+b"],
        vec![0, 1, 2, 3],
        Some(&["e", "eb", "o", "ob"]),
    )
}

/// Accepts multisets with at least two `a` and at least one `b`.
/// State `2i + j` holds `min(#a, 2) = i` and `min(#b, 1) = j`.
pub fn two_a_one_b() -> Fsa {
    let idx = |a: usize, b: usize| 2 * a + b;
    let mut fa = vec![0; 6];
    let mut fb = vec![0; 6];
    let mut out = vec![0; 6];
    for a in 0..3 {
        for b in 0..2 {
            fa[idx(a, b)] = idx((a + 1).min(2), b);
            fb[idx(a, b)] = idx(a, 1);
            out[idx(a, b)] = usize::from(a == 2 && b == 1);
        }
    }
    let fc = (0..6).collect();
    build(
        &["a", "b", "c"],
        vec![fa, fb, fc],
        0,
        &["no", "yes"],
        out,
        Some(&["a0b0", "a0b1", "a1b0", "a1b1", "a2b0", "a2b1"]),
    )
}

/// One-symbol machine: length modulo 4, reporting whether it is zero.
pub fn unary_mod4_zero() -> Fsa {
    build(
        &["a"],
        vec![vec![1, 2, 3, 0]],
        0,
        &["zero", "nonzero"],
        vec![0, 1, 1, 1],
        None,
    )
}

/// One-symbol machine with a tail of two states feeding a 3-cycle.
pub fn unary_lasso() -> Fsa {
    build(
        &["a"],
        vec![vec![1, 2, 3, 4, 2]],
        0,
        &["even", "odd"],
        vec![0, 1, 0, 1, 0],
        None,
    )
}

/// The mod-3 counter with state 2 split into two indistinguishable copies.
/// Reading `ab` from state 1 lands in `2'` while `ba` lands in `2`, so the
/// transitions do not commute although the machine is symmetric.
pub fn split_mod3() -> Fsa {
    build(
        &["a", "b"],
        vec![vec![1, 2, 0, 0], vec![0, 1, 3, 2]],
        0,
        &["0", "1", "2"],
        vec![0, 1, 2, 2],
        Some(&["0", "1", "2", "2'"]),
    )
}

/// The mod-3 counter plus an unreachable copy of state 0.
pub fn mod3_with_unreachable_clone() -> Fsa {
    build(
        &["a", "b"],
        vec![vec![1, 2, 0, 1], vec![0, 1, 2, 3]],
        0,
        &["0", "1", "2"],
        vec![0, 1, 2, 0],
        Some(&["0", "1", "2", "0'"]),
    )
}

/// Four states where `s2` and `s3` share their output and transition rows.
pub fn duplicate_rows() -> Fsa {
    build(
        &["a", "b"],
        vec![vec![1, 2, 0, 0], vec![0, 3, 2, 2]],
        0,
        &["x", "y"],
        vec![0, 1, 0, 0],
        Some(&["s0", "s1", "s2", "s3"]),
    )
}

/// Accepts words containing the substring `ab`.
pub fn ab_detector() -> Fsa {
    build(
        &["a", "b"],
        vec![vec![1, 1, 2], vec![0, 2, 2]],
        0,
        &["reject", "accept"],
        vec![0, 0, 1],
        Some(&["s0", "s1", "acc"]),
    )
}

/// Outputs the most recently read symbol.
pub fn last_symbol() -> Fsa {
    build(
        &["a", "b"],
        vec![vec![1, 1, 1], vec![2, 2, 2]],
        0,
        &["none", "a", "b"],
        vec![0, 1, 2],
        Some(&["start", "A", "B"]),
    )
}

/// Machines whose output is invariant under permuting the input.
pub fn symmetric_fixtures() -> Vec<(&'static str, Fsa)> {
    vec![
        ("mod3_counter", mod3_counter()),
        ("mod3_low_high", mod3_low_high()),
        ("mod5_counter", mod5_counter()),
        ("saturating_adder", saturating_adder()),
        ("threshold_a3", threshold_a3()),
        ("parity_and_seen_b", parity_and_seen_b()),
        ("two_a_one_b", two_a_one_b()),
        ("unary_mod4_zero", unary_mod4_zero()),
        ("unary_lasso", unary_lasso()),
        ("split_mod3", split_mod3()),
        ("mod3_with_unreachable_clone", mod3_with_unreachable_clone()),
    ]
}

/// Order-sensitive machines, including the hard machines for `n = 2, 3`.
pub fn asymmetric_fixtures() -> Vec<(&'static str, Fsa)> {
    vec![
        ("ab_detector", ab_detector()),
        ("last_symbol", last_symbol()),
        ("duplicate_rows", duplicate_rows()),
        (
            "hard_fsa_2",
            crate::lower_bound::build_hard_fsa(2).expect("n >= 1"),
        ),
        (
            "hard_fsa_3",
            crate::lower_bound::build_hard_fsa(3).expect("n >= 1"),
        ),
    ]
}

pub fn all_fixtures() -> Vec<(&'static str, Fsa)> {
    let mut all = symmetric_fixtures();
    all.extend(asymmetric_fixtures());
    all
}

/// The synthesized mod-3 DCA with `combine(0, 1)` changed from 1 to 2, which
/// makes some outputs depend on the bracketing.
pub fn perturbed_mod3_dca() -> crate::dca::Dca {
    crate::synthesis::synthesize_symmetric_dca(&mod3_counter())
        .expect("mod-3 counter is symmetric")
        .dca
        .with_combine_entry(0, 1, 2)
        .expect("entry in range")
}
