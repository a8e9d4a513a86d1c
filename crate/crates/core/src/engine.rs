//! Evaluation of divide-and-conquer automata.
//!
//! A word is reduced by mapping every symbol through the input map and
//! merging adjacent states until one remains. The [`SplitStrategy`] picks the
//! bracketing; a well-defined DCA gives the same output under all of them.
//! [`chi_enumerate`] computes the set of final states over *all* bracketings.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automaton::{Alphabet, Fsa, Word};
use crate::dca::DivideAndConquer;
use crate::error::{Error, Result};
use crate::symmetry::next_word;

/// Default word-length bound for [`check_well_defined`].
pub const DEFAULT_WELL_DEFINED_LEN: usize = 6;
/// Default number of combine evaluations allowed for χ computations.
pub const DEFAULT_CHI_BUDGET: usize = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitStrategy {
    /// `((((x1 x2) x3) x4) …)`
    LeftFold,
    /// Split at the midpoint recursively.
    Balanced,
    /// Split at a uniformly random point, recursively, from the given seed.
    Random(u64),
}

impl fmt::Display for SplitStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplitStrategy::LeftFold => f.write_str("fold"),
            SplitStrategy::Balanced => f.write_str("tree"),
            SplitStrategy::Random(seed) => write!(f, "random({seed})"),
        }
    }
}

/// Footprint counters for one evaluation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EvalStats {
    pub combines: usize,
    /// Most intermediate values alive at once.
    pub peak_values_held: usize,
    /// Largest single held value, in cells.
    pub max_cells_per_value: usize,
    /// Most cells alive at once.
    pub peak_cells: usize,
}

#[derive(Default)]
struct Tracker {
    stats: EvalStats,
    live_values: usize,
    live_cells: usize,
}

impl Tracker {
    fn acquire(&mut self, cells: usize) {
        self.live_values += 1;
        self.live_cells += cells;
        let s = &mut self.stats;
        s.peak_values_held = s.peak_values_held.max(self.live_values);
        s.peak_cells = s.peak_cells.max(self.live_cells);
        s.max_cells_per_value = s.max_cells_per_value.max(cells);
    }

    fn release(&mut self, cells: usize) {
        self.live_values -= 1;
        self.live_cells -= cells;
    }
}

struct Evaluator<'a, D: DivideAndConquer> {
    dca: &'a D,
    word: &'a [usize],
    tracker: Tracker,
}

impl<D: DivideAndConquer> Evaluator<'_, D> {
    fn leaf(&mut self, i: usize) -> D::State {
        let s = self.dca.input(self.word[i]);
        self.tracker.acquire(self.dca.cells(&s));
        s
    }

    fn join(&mut self, left: D::State, right: D::State) -> D::State {
        let out = self.dca.combine(&left, &right);
        self.tracker.stats.combines += 1;
        self.tracker.release(self.dca.cells(&left));
        self.tracker.release(self.dca.cells(&right));
        self.tracker.acquire(self.dca.cells(&out));
        out
    }

    fn fold(&mut self) -> D::State {
        let mut acc = self.leaf(0);
        for i in 1..self.word.len() {
            let next = self.leaf(i);
            acc = self.join(acc, next);
        }
        acc
    }

    fn balanced(&mut self, lo: usize, hi: usize) -> D::State {
        if hi - lo == 1 {
            return self.leaf(lo);
        }
        let mid = lo + (hi - lo) / 2;
        let l = self.balanced(lo, mid);
        let r = self.balanced(mid, hi);
        self.join(l, r)
    }

    fn random(&mut self, lo: usize, hi: usize, rng: &mut ChaCha8Rng) -> D::State {
        if hi - lo == 1 {
            return self.leaf(lo);
        }
        let mid = rng.gen_range(lo + 1..hi);
        let l = self.random(lo, mid, rng);
        let r = self.random(mid, hi, rng);
        self.join(l, r)
    }
}

/// Final state and footprint counters of one evaluation.
pub fn eval_state<D: DivideAndConquer>(
    dca: &D,
    word: &[usize],
    strategy: SplitStrategy,
) -> Result<(D::State, EvalStats)> {
    if word.is_empty() {
        return Err(Error::EmptyInput);
    }
    dca.alphabet().check_word(word)?;
    let mut ev = Evaluator {
        dca,
        word,
        tracker: Tracker::default(),
    };
    let state = match strategy {
        SplitStrategy::LeftFold => ev.fold(),
        SplitStrategy::Balanced => ev.balanced(0, word.len()),
        SplitStrategy::Random(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            ev.random(0, word.len(), &mut rng)
        }
    };
    Ok((state, ev.tracker.stats))
}

/// Output of the DCA on `word` under the given bracketing. On a DCA that is
/// not well defined the result may depend on the strategy.
pub fn eval_dca<D: DivideAndConquer>(
    dca: &D,
    word: &[usize],
    strategy: SplitStrategy,
) -> Result<usize> {
    let (state, _) = eval_state(dca, word, strategy)?;
    Ok(dca.output(&state))
}

/// Reduces contiguous chunks on separate threads, then joins the chunk
/// results left to right. The final state equals the sequential fold for any
/// worker count when the combiner is associative.
pub fn reduce_parallel<D>(dca: &D, word: &[usize], workers: usize) -> Result<D::State>
where
    D: DivideAndConquer + Sync,
    D::State: Send,
{
    if word.is_empty() {
        return Err(Error::EmptyInput);
    }
    dca.alphabet().check_word(word)?;
    let workers = workers.clamp(1, word.len());
    let chunk = word.len().div_ceil(workers);
    let partials: Vec<D::State> = std::thread::scope(|scope| {
        let handles: Vec<_> = word
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    let mut acc = dca.input(part[0]);
                    for &s in &part[1..] {
                        acc = dca.combine(&acc, &dca.input(s));
                    }
                    acc
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("reduction worker panicked"))
            .collect()
    });
    let mut iter = partials.into_iter();
    let first = iter.next().expect("at least one chunk");
    Ok(iter.fold(first, |acc, s| dca.combine(&acc, &s)))
}

/// A bracketing of a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitTree {
    Leaf(usize),
    Node(Box<SplitTree>, Box<SplitTree>),
}

impl SplitTree {
    pub fn eval<D: DivideAndConquer>(&self, dca: &D) -> D::State {
        match self {
            SplitTree::Leaf(s) => dca.input(*s),
            SplitTree::Node(l, r) => dca.combine(&l.eval(dca), &r.eval(dca)),
        }
    }

    pub fn word(&self) -> Word {
        let mut out = Vec::new();
        self.collect(&mut out);
        Word::from(out)
    }

    fn collect(&self, out: &mut Vec<usize>) {
        match self {
            SplitTree::Leaf(s) => out.push(*s),
            SplitTree::Node(l, r) => {
                l.collect(out);
                r.collect(out);
            }
        }
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        match self {
            SplitTree::Leaf(s) => alphabet.name(*s).to_string(),
            SplitTree::Node(l, r) => format!("({} {})", l.render(alphabet), r.render(alphabet)),
        }
    }
}

/// How a state entered a χ set: a leaf, or a split after `left_len` symbols
/// combining the given left and right states.
#[derive(Clone, Debug)]
enum Provenance<S> {
    Leaf,
    Split { left_len: usize, left: S, right: S },
}

type ChiEntry<S> = BTreeMap<S, Provenance<S>>;

struct Budget {
    used: usize,
    limit: usize,
}

impl Budget {
    fn spend(&mut self, n: usize) -> Result<()> {
        self.used += n;
        if self.used > self.limit {
            return Err(Error::ResourceLimit {
                what: "chi combine evaluations",
                count: self.used,
                limit: self.limit,
            });
        }
        Ok(())
    }
}

/// Every state reachable over every contiguous bracketing of `word`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiSet<S: Ord> {
    pub word: Word,
    pub states: BTreeSet<S>,
}

fn merge_split<D: DivideAndConquer>(
    dca: &D,
    into: &mut ChiEntry<D::State>,
    left_len: usize,
    left: &ChiEntry<D::State>,
    right: &ChiEntry<D::State>,
    budget: &mut Budget,
) -> Result<()> {
    budget.spend(left.len() * right.len())?;
    for l in left.keys() {
        for r in right.keys() {
            let s = dca.combine(l, r);
            into.entry(s).or_insert_with(|| Provenance::Split {
                left_len,
                left: l.clone(),
                right: r.clone(),
            });
        }
    }
    Ok(())
}

/// Substring-memoized χ: `table[i][len - 1]` holds χ of `word[i..i + len]`.
fn chi_substrings<D: DivideAndConquer>(
    dca: &D,
    word: &[usize],
    budget: &mut Budget,
) -> Result<Vec<Vec<ChiEntry<D::State>>>> {
    let n = word.len();
    let mut table: Vec<Vec<ChiEntry<D::State>>> = (0..n)
        .map(|i| {
            let mut leaf = BTreeMap::new();
            leaf.insert(dca.input(word[i]), Provenance::Leaf);
            vec![leaf]
        })
        .collect();
    for len in 2..=n {
        for i in 0..=n - len {
            let mut entry = BTreeMap::new();
            for left_len in 1..len {
                let (head, tail) = table.split_at(i + left_len);
                merge_split(
                    dca,
                    &mut entry,
                    left_len,
                    &head[i][left_len - 1],
                    &tail[0][len - left_len - 1],
                    budget,
                )?;
            }
            table[i].push(entry);
        }
    }
    Ok(table)
}

/// χ of a nonempty word, computed over `O(|w|²)` memoized substrings.
/// `node_budget` bounds the total number of combine evaluations.
pub fn chi_enumerate<D: DivideAndConquer>(
    dca: &D,
    word: &[usize],
    node_budget: usize,
) -> Result<ChiSet<D::State>> {
    if word.is_empty() {
        return Err(Error::EmptyInput);
    }
    dca.alphabet().check_word(word)?;
    let mut budget = Budget {
        used: 0,
        limit: node_budget,
    };
    let table = chi_substrings(dca, word, &mut budget)?;
    let states = table[0][word.len() - 1].keys().cloned().collect();
    Ok(ChiSet {
        word: Word::from(word),
        states,
    })
}

fn tree_from<'a, S: Ord + Clone + 'a>(
    lookup: &dyn Fn(usize, usize) -> ChiEntryRef<'a, S>,
    start: usize,
    len: usize,
    state: &S,
    word: &[usize],
) -> SplitTree {
    match lookup(start, len)
        .get(state)
        .expect("state recorded in chi")
    {
        Provenance::Leaf => SplitTree::Leaf(word[start]),
        Provenance::Split {
            left_len,
            left,
            right,
        } => SplitTree::Node(
            Box::new(tree_from(lookup, start, *left_len, left, word)),
            Box::new(tree_from(
                lookup,
                start + left_len,
                len - left_len,
                right,
                word,
            )),
        ),
    }
}

type ChiEntryRef<'a, S> = &'a BTreeMap<S, Provenance<S>>;

/// Two bracketings of one word whose outputs differ.
#[derive(Clone, Debug)]
pub struct WellDefinednessWitness<S> {
    pub word: Word,
    pub trees: (SplitTree, SplitTree),
    pub states: (S, S),
    pub outputs: (usize, usize),
}

impl<S: Clone + Ord + std::hash::Hash + fmt::Debug> WellDefinednessWitness<S> {
    /// Re-evaluates both trees.
    pub fn verify<D: DivideAndConquer<State = S>>(&self, dca: &D) -> bool {
        let a = self.trees.0.eval(dca);
        let b = self.trees.1.eval(dca);
        self.trees.0.word() == self.word
            && self.trees.1.word() == self.word
            && a == self.states.0
            && b == self.states.1
            && dca.output(&a) == self.outputs.0
            && dca.output(&b) == self.outputs.1
            && self.outputs.0 != self.outputs.1
    }
}

#[derive(Clone, Debug)]
pub enum WellDefinedness<S> {
    Pass {
        max_len: usize,
        words_checked: usize,
    },
    Fail(Box<WellDefinednessWitness<S>>),
}

impl<S> WellDefinedness<S> {
    pub fn passed(&self) -> bool {
        matches!(self, WellDefinedness::Pass { .. })
    }
}

/// Checks that every word of length `1..=max_len` has a single output over
/// all bracketings. Words are visited by length, then lexicographically; the
/// first violation is reported with two bracketings that disagree.
pub fn check_well_defined<D: DivideAndConquer>(
    dca: &D,
    max_len: usize,
    node_budget: usize,
) -> Result<WellDefinedness<D::State>> {
    let k = dca.alphabet().len();
    let mut budget = Budget {
        used: 0,
        limit: node_budget,
    };
    // χ of every word up to max_len, keyed by the word itself.
    let mut chi: HashMap<Vec<usize>, ChiEntry<D::State>> = HashMap::new();
    let mut words_checked = 0;
    for len in 1..=max_len {
        let mut word = vec![0usize; len];
        loop {
            let mut entry: ChiEntry<D::State> = BTreeMap::new();
            if len == 1 {
                entry.insert(dca.input(word[0]), Provenance::Leaf);
            } else {
                for left_len in 1..len {
                    let left = &chi[&word[..left_len]];
                    let right = &chi[&word[left_len..]];
                    merge_split(dca, &mut entry, left_len, left, right, &mut budget)?;
                }
            }
            words_checked += 1;
            let mut by_output: BTreeMap<usize, D::State> = BTreeMap::new();
            for s in entry.keys() {
                by_output.entry(dca.output(s)).or_insert_with(|| s.clone());
            }
            if by_output.len() > 1 {
                let mut it = by_output.into_iter();
                let (o1, s1) = it.next().expect("two outputs");
                let (o2, s2) = it.next().expect("two outputs");
                chi.insert(word.clone(), entry);
                let lookup = |start: usize, l: usize| -> ChiEntryRef<'_, D::State> {
                    &chi[&word[start..start + l]]
                };
                let t1 = tree_from(&lookup, 0, len, &s1, &word);
                let t2 = tree_from(&lookup, 0, len, &s2, &word);
                return Ok(WellDefinedness::Fail(Box::new(WellDefinednessWitness {
                    word: Word::from(word.clone()),
                    trees: (t1, t2),
                    states: (s1, s2),
                    outputs: (o1, o2),
                })));
            }
            chi.insert(word.clone(), entry);
            if !next_word(&mut word, k) {
                break;
            }
        }
    }
    Ok(WellDefinedness::Pass {
        max_len,
        words_checked,
    })
}

/// Order-free aggregation of a neighborhood: symbols are sorted by index and
/// reduced with the balanced bracketing.
pub fn aggregate_neighborhood<D: DivideAndConquer>(dca: &D, symbols: &[usize]) -> Result<usize> {
    if symbols.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut sorted = symbols.to_vec();
    sorted.sort_unstable();
    eval_dca(dca, &sorted, SplitStrategy::Balanced)
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub exhaustive_max_len: usize,
    /// Largest number of words the exhaustive phase may enumerate; the
    /// length bound shrinks until the word count fits.
    pub word_budget: usize,
    pub num_random_trials: usize,
    pub random_max_len: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            exhaustive_max_len: 8,
            word_budget: 200_000,
            num_random_trials: 10_000,
            random_max_len: 64,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub word: Word,
    pub strategy: SplitStrategy,
    pub fsa_output: usize,
    pub dca_output: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub exhaustive_max_len: usize,
    pub exhaustive_words: usize,
    pub num_random_trials: usize,
    pub random_max_len: usize,
    pub seed: u64,
    pub first_failure: Option<Mismatch>,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

fn feasible_len(k: usize, wanted: usize, budget: usize) -> usize {
    let mut total = 0usize;
    let mut layer = 1usize;
    for len in 1..=wanted {
        layer = layer.saturating_mul(k);
        total = total.saturating_add(layer);
        if total > budget {
            return len - 1;
        }
    }
    wanted
}

/// Strategies exercised on every exhaustive word: fold, balanced and three
/// seeded random bracketings.
pub fn standard_strategies(seed: u64) -> [SplitStrategy; 5] {
    [
        SplitStrategy::LeftFold,
        SplitStrategy::Balanced,
        SplitStrategy::Random(seed),
        SplitStrategy::Random(seed.wrapping_add(1)),
        SplitStrategy::Random(seed.wrapping_add(2)),
    ]
}

/// Compares the FSA and DCA outputs exhaustively on short words and on
/// seeded random words, stopping at the first mismatch.
pub fn verify_equivalence<D: DivideAndConquer>(
    fsa: &Fsa,
    dca: &D,
    config: &VerifyConfig,
) -> Result<EquivalenceReport> {
    if fsa.alphabet() != dca.alphabet() {
        return Err(Error::invalid("FSA and DCA alphabets differ"));
    }
    if fsa.outputs() != dca.outputs() {
        return Err(Error::invalid("FSA and DCA output sets differ"));
    }
    let k = fsa.num_symbols();
    let max_len = feasible_len(k, config.exhaustive_max_len, config.word_budget);
    let mut report = EquivalenceReport {
        exhaustive_max_len: max_len,
        exhaustive_words: 0,
        num_random_trials: config.num_random_trials,
        random_max_len: config.random_max_len,
        seed: config.seed,
        first_failure: None,
    };
    let strategies = standard_strategies(config.seed);
    let check = |word: &[usize], strategy: SplitStrategy| -> Result<Option<Mismatch>> {
        let expected = fsa.eval(word)?;
        let got = eval_dca(dca, word, strategy)?;
        Ok((expected != got).then(|| Mismatch {
            word: Word::from(word),
            strategy,
            fsa_output: expected,
            dca_output: got,
        }))
    };

    for len in 1..=max_len {
        let mut word = vec![0usize; len];
        loop {
            report.exhaustive_words += 1;
            for &strategy in &strategies {
                if let Some(m) = check(&word, strategy)? {
                    report.first_failure = Some(m);
                    return Ok(report);
                }
            }
            if !next_word(&mut word, k) {
                break;
            }
        }
    }

    if config.random_max_len == 0 {
        return Ok(report);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for trial in 0..config.num_random_trials {
        let len = rng.gen_range(1..=config.random_max_len);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..k)).collect();
        let split_seed = config.seed.wrapping_add(3).wrapping_add(trial as u64);
        for strategy in [SplitStrategy::Balanced, SplitStrategy::Random(split_seed)] {
            if let Some(m) = check(&word, strategy)? {
                report.first_failure = Some(m);
                return Ok(report);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::synthesis::{synthesize_composition_dca, synthesize_symmetric_dca};

    #[test]
    fn single_symbol_needs_no_combine() {
        let dca = synthesize_symmetric_dca(&catalog::mod3_counter())
            .unwrap()
            .dca;
        let (state, stats) = eval_state(&dca, &[0], SplitStrategy::Balanced).unwrap();
        assert_eq!(state, dca.alpha()[0]);
        assert_eq!(stats.combines, 0);
    }

    #[test]
    fn empty_words_are_rejected() {
        let dca = synthesize_symmetric_dca(&catalog::mod3_counter())
            .unwrap()
            .dca;
        assert!(matches!(
            eval_dca(&dca, &[], SplitStrategy::LeftFold),
            Err(Error::EmptyInput)
        ));
        assert!(matches!(
            chi_enumerate(&dca, &[], 10),
            Err(Error::EmptyInput)
        ));
        assert!(matches!(
            aggregate_neighborhood(&dca, &[]),
            Err(Error::EmptyInput)
        ));
    }

    #[test]
    fn mod3_aab_under_all_strategies() {
        let dca = synthesize_symmetric_dca(&catalog::mod3_counter())
            .unwrap()
            .dca;
        for s in standard_strategies(7) {
            let o = eval_dca(&dca, &[0, 0, 1], s).unwrap();
            assert_eq!(dca.outputs()[o], "2", "{s}");
        }
    }

    #[test]
    fn composition_detector_ab_vs_ba() {
        let dca = synthesize_composition_dca(&catalog::ab_detector());
        for s in standard_strategies(0) {
            assert_eq!(dca.outputs()[eval_dca(&dca, &[0, 1], s).unwrap()], "accept");
            assert_eq!(dca.outputs()[eval_dca(&dca, &[1, 0], s).unwrap()], "reject");
        }
    }

    #[test]
    fn chi_of_single_symbol_is_input() {
        let dca = synthesize_symmetric_dca(&catalog::saturating_adder())
            .unwrap()
            .dca;
        let chi = chi_enumerate(&dca, &[0], 100).unwrap();
        assert_eq!(
            chi.states.into_iter().collect::<Vec<_>>(),
            vec![dca.alpha()[0]]
        );
    }

    #[test]
    fn chi_budget_is_enforced() {
        let dca = synthesize_symmetric_dca(&catalog::mod3_counter())
            .unwrap()
            .dca;
        let err = chi_enumerate(&dca, &[0; 10], 5).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit { .. }));
    }

    #[test]
    fn random_strategy_is_reproducible() {
        let dca = synthesize_composition_dca(&catalog::ab_detector());
        let word = [0, 1, 1, 0, 1, 0, 0, 1];
        let a = eval_state(&dca, &word, SplitStrategy::Random(42)).unwrap();
        let b = eval_state(&dca, &word, SplitStrategy::Random(42)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn footprint_counts_cells() {
        let fsa = catalog::mod3_counter();
        let sym = synthesize_symmetric_dca(&fsa).unwrap().dca;
        let comp = synthesize_composition_dca(&fsa);
        let word = vec![0; 64];
        let (_, s) = eval_state(&sym, &word, SplitStrategy::Balanced).unwrap();
        let (_, c) = eval_state(&comp, &word, SplitStrategy::Balanced).unwrap();
        assert_eq!(s.max_cells_per_value, 1);
        assert_eq!(c.max_cells_per_value, 3);
        assert_eq!(s.peak_values_held, c.peak_values_held);
        assert_eq!(c.peak_cells, 3 * s.peak_cells);
        assert_eq!(s.combines, 63);
    }

    #[test]
    fn parallel_reduce_matches_fold() {
        let dca = synthesize_composition_dca(&catalog::ab_detector());
        let word: Vec<usize> = (0..37).map(|i| (i * 7 % 5 == 0) as usize).collect();
        let (expected, _) = eval_state(&dca, &word, SplitStrategy::LeftFold).unwrap();
        for workers in [1, 2, 3, 8, 64] {
            assert_eq!(reduce_parallel(&dca, &word, workers).unwrap(), expected);
        }
    }

    #[test]
    fn feasible_len_shrinks_to_budget() {
        assert_eq!(feasible_len(3, 8, 200_000), 8);
        assert_eq!(feasible_len(2, 8, 10), 2);
        assert_eq!(feasible_len(1, 8, 100), 8);
    }

    #[test]
    fn mismatched_alphabets_are_rejected() {
        let dca = synthesize_symmetric_dca(&catalog::threshold_a3())
            .unwrap()
            .dca;
        let err = verify_equivalence(&catalog::mod3_counter(), &dca, &VerifyConfig::default());
        assert!(matches!(err, Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn split_tree_render() {
        let a = Alphabet::letters(2).unwrap();
        let t = SplitTree::Node(
            Box::new(SplitTree::Leaf(0)),
            Box::new(SplitTree::Node(
                Box::new(SplitTree::Leaf(1)),
                Box::new(SplitTree::Leaf(0)),
            )),
        );
        assert_eq!(t.render(&a), "(a (b a))");
        assert_eq!(&*t.word(), &[0, 1, 0]);
    }
}
