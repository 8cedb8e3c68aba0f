//! Positive equality in the monoid: relation matching, rewriting, prefix
//! cancellation and a bounded bidirectional breadth-first prover.
//!
//! Search states are keyed by exact letter sequence. After a relation
//! application or a cancellation the word is freely reduced, and each
//! cancellation is recorded as its own [`RewriteStep::FreeCancel`] so that a
//! [`ProofTrace`] replays letter for letter with [`RewriteSystem::apply`].
//!
//! Besides single moves the search takes composite ones: a relation side
//! `p·m·q` whose prefix `p` and suffix `q` are τ-free gives the move
//! `m -> p^-1·t·q^-1` (`t` the other side). In the trace it expands to the
//! pair insertions completing `p·m·q`, the relation application and the
//! ensuing cancellations.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::invariants::{distinguish, ProfileComponent};
use crate::presentation::{all_relations, Presentation, Relation};
use crate::word::{Letter, SurfaceParams, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Replace an occurrence of the left side by the right side.
    Forward,
    Backward,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RewriteStep {
    /// `relation` indexes the relation list of the owning [`RewriteSystem`].
    RelationApply {
        position: usize,
        relation: usize,
        direction: Direction,
    },
    FreeCancel {
        position: usize,
    },
    /// Inserts `letter letter^-1` before `position`.
    PairInsert {
        position: usize,
        letter: Letter,
    },
}

impl RewriteStep {
    pub fn position(&self) -> usize {
        match *self {
            RewriteStep::RelationApply { position, .. }
            | RewriteStep::FreeCancel { position }
            | RewriteStep::PairInsert { position, .. } => position,
        }
    }

    /// The step undoing `self`, given the word `self` was applied to.
    fn inverse(&self, before: &Word) -> RewriteStep {
        match *self {
            RewriteStep::RelationApply {
                position,
                relation,
                direction,
            } => RewriteStep::RelationApply {
                position,
                relation,
                direction: direction.flip(),
            },
            RewriteStep::FreeCancel { position } => RewriteStep::PairInsert {
                position,
                letter: before[position],
            },
            RewriteStep::PairInsert { position, .. } => RewriteStep::FreeCancel { position },
        }
    }
}

/// A replayable derivation from `start` to `end`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofTrace {
    pub start: Word,
    pub steps: Vec<RewriteStep>,
    pub end: Word,
}

impl ProofTrace {
    /// Applies every step from `start`; fails if any step does not apply or
    /// the final word differs from `end`.
    pub fn replay(&self, system: &RewriteSystem) -> Result<Vec<Word>> {
        let mut words = Vec::with_capacity(self.steps.len() + 1);
        let mut current = self.start.clone();
        words.push(current.clone());
        for step in &self.steps {
            current = system.apply(&current, step)?;
            words.push(current.clone());
        }
        if current != self.end {
            return Err(Error::NotApplicable(format!(
                "trace ends at {current}, expected {}",
                self.end
            )));
        }
        Ok(words)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_word_length: usize,
    pub max_nodes: usize,
}

impl SearchBudget {
    pub const DEFAULT_MAX_NODES: usize = 100_000;
    pub const DEFAULT_LENGTH_SLACK: usize = 8;

    pub fn new(max_word_length: usize, max_nodes: usize) -> Result<Self> {
        if max_word_length == 0 {
            return Err(Error::ArgumentOutOfRange {
                name: "max_word_length",
                value: 0,
                min: 1,
                max: usize::MAX,
            });
        }
        if max_nodes == 0 {
            return Err(Error::ArgumentOutOfRange {
                name: "max_nodes",
                value: 0,
                min: 1,
                max: usize::MAX,
            });
        }
        Ok(Self {
            max_word_length,
            max_nodes,
        })
    }

    /// `|u| + |v| + 8` letters and 10^5 words per side.
    pub fn default_for(u: &Word, v: &Word) -> Self {
        Self {
            max_word_length: u.len() + v.len() + Self::DEFAULT_LENGTH_SLACK,
            max_nodes: Self::DEFAULT_MAX_NODES,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Equivalent(ProofTrace),
    DistinctByInvariant(ProfileComponent),
    Unknown,
}

/// Strips the longest common letter prefix. Sound because the monoid is
/// left-cancellative.
pub fn cancel_common_prefix(u: &Word, v: &Word) -> (Word, Word) {
    let common = u.iter().zip(v.iter()).take_while(|(a, b)| a == b).count();
    (Word::from(&u[common..]), Word::from(&v[common..]))
}

/// Freely reduces `word`, returning the reduced word and the cancellations
/// performed, each at its position in the word current at that moment.
pub fn reduce_with_steps(word: &Word) -> (Word, Vec<RewriteStep>) {
    let mut letters = word.to_vec();
    let mut steps = Vec::new();
    let mut k = 0;
    while k + 1 < letters.len() {
        if letters[k].cancels(&letters[k + 1]) {
            steps.push(RewriteStep::FreeCancel { position: k });
            letters.drain(k..k + 2);
            k = k.saturating_sub(1);
        } else {
            k += 1;
        }
    }
    (Word::from(letters), steps)
}

/// Applies `steps` from `start` and returns the steps that lead back.
fn invert_chain(system: &RewriteSystem, start: &Word, steps: &[RewriteStep]) -> Vec<RewriteStep> {
    let mut current = start.clone();
    let mut inverse = Vec::with_capacity(steps.len());
    for step in steps {
        inverse.push(step.inverse(&current));
        current = system
            .apply(&current, step)
            .expect("recorded search steps always apply");
    }
    inverse.reverse();
    inverse
}

struct Node {
    word: Word,
    parent: Option<usize>,
    steps: Vec<RewriteStep>,
}

struct Side {
    nodes: Vec<Node>,
    index: HashMap<Word, usize>,
    layer: Vec<usize>,
}

impl Side {
    fn new(root: Word) -> Self {
        let mut index = HashMap::new();
        index.insert(root.clone(), 0);
        Self {
            nodes: vec![Node {
                word: root,
                parent: None,
                steps: Vec::new(),
            }],
            index,
            layer: vec![0],
        }
    }

    /// Steps from the root to node `id`.
    fn path(&self, mut id: usize) -> Vec<RewriteStep> {
        let mut chunks = Vec::new();
        while let Some(parent) = self.nodes[id].parent {
            chunks.push(&self.nodes[id].steps);
            id = parent;
        }
        chunks.into_iter().rev().flatten().copied().collect()
    }
}

/// A relation side `prefix · middle · suffix` with invertible prefix and
/// suffix, used as `middle -> prefix^-1 · target · suffix^-1`.
#[derive(Debug, Clone)]
struct ContextRule {
    relation: usize,
    direction: Direction,
    prefix: Vec<Letter>,
    middle: Vec<Letter>,
    suffix: Vec<Letter>,
}

impl ContextRule {
    /// Pair insertions building `prefix^-1 prefix` before and
    /// `suffix suffix^-1` after the middle occurrence at `position`, then
    /// the relation application on the completed source side.
    fn steps(&self, position: usize) -> Vec<RewriteStep> {
        let a = self.prefix.len();
        let mut steps = Vec::with_capacity(a + self.suffix.len() + 1);
        for t in 0..a {
            steps.push(RewriteStep::PairInsert {
                position: position + t,
                letter: self.prefix[a - 1 - t].inverse(),
            });
        }
        let after = position + 2 * a + self.middle.len();
        for (t, letter) in self.suffix.iter().enumerate() {
            steps.push(RewriteStep::PairInsert {
                position: after + t,
                letter: *letter,
            });
        }
        steps.push(RewriteStep::RelationApply {
            position: position + a,
            relation: self.relation,
            direction: self.direction,
        });
        steps
    }
}

fn context_rules(relations: &[Relation]) -> Vec<ContextRule> {
    let mut rules = Vec::new();
    for (relation, rel) in relations.iter().enumerate() {
        for (direction, source) in [(Direction::Forward, &rel.lhs), (Direction::Backward, &rel.rhs)] {
            let len = source.len();
            for a in 0..len {
                if source[..a].iter().any(Letter::is_tau) {
                    break;
                }
                for b in 0..len - a {
                    if source[len - b..].iter().any(Letter::is_tau) {
                        break;
                    }
                    if a + b == 0 {
                        continue;
                    }
                    rules.push(ContextRule {
                        relation,
                        direction,
                        prefix: source[..a].to_vec(),
                        middle: source[a..len - b].to_vec(),
                        suffix: source[len - b..].to_vec(),
                    });
                }
            }
        }
    }
    rules
}

/// A relation list over fixed surface parameters, with matching and search.
#[derive(Debug, Clone)]
pub struct RewriteSystem {
    params: SurfaceParams,
    relations: Vec<Relation>,
    context: Vec<ContextRule>,
    /// Context rules keyed by the first letter of their middle part.
    context_index: HashMap<Letter, Vec<usize>>,
}

impl RewriteSystem {
    pub fn new(params: SurfaceParams, relations: Vec<Relation>) -> Self {
        let context = context_rules(&relations);
        let mut context_index: HashMap<Letter, Vec<usize>> = HashMap::new();
        for (k, rule) in context.iter().enumerate() {
            context_index.entry(rule.middle[0]).or_default().push(k);
        }
        Self {
            params,
            relations,
            context,
            context_index,
        }
    }

    /// All relations R1–R12 for `params`.
    pub fn standard(params: SurfaceParams) -> Self {
        Self::new(params, all_relations(&params))
    }

    pub fn from_presentation(pres: &Presentation) -> Self {
        Self::new(pres.params, pres.relations.clone())
    }

    pub fn params(&self) -> &SurfaceParams {
        &self.params
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Human-readable description of a step.
    pub fn describe(&self, step: &RewriteStep) -> String {
        match *step {
            RewriteStep::RelationApply {
                position,
                relation,
                direction,
            } => {
                let label = self
                    .relations
                    .get(relation)
                    .map_or_else(|| format!("#{relation}"), Relation::label);
                format!("apply {label} {direction} at {position}")
            }
            RewriteStep::FreeCancel { position } => format!("cancel at {position}"),
            RewriteStep::PairInsert { position, letter } => {
                format!("insert {} {} at {position}", letter, letter.inverse())
            }
        }
    }

    fn sides(&self, relation: usize, direction: Direction) -> Option<(&Word, &Word)> {
        let rel = self.relations.get(relation)?;
        Some(match direction {
            Direction::Forward => (&rel.lhs, &rel.rhs),
            Direction::Backward => (&rel.rhs, &rel.lhs),
        })
    }

    /// Every relation occurrence (either direction) and every cancellable
    /// pair in `word`, ordered by position, then relation, then direction,
    /// with cancellations last at each position.
    pub fn find_applications(&self, word: &Word) -> Vec<RewriteStep> {
        let mut out = Vec::new();
        for position in 0..=word.len() {
            for (relation, rel) in self.relations.iter().enumerate() {
                for (direction, source) in [(Direction::Forward, &rel.lhs), (Direction::Backward, &rel.rhs)] {
                    if word.matches_at(position, source) {
                        out.push(RewriteStep::RelationApply {
                            position,
                            relation,
                            direction,
                        });
                    }
                }
            }
            if position + 1 < word.len() && word[position].cancels(&word[position + 1]) {
                out.push(RewriteStep::FreeCancel { position });
            }
        }
        out
    }

    pub fn apply(&self, word: &Word, step: &RewriteStep) -> Result<Word> {
        match *step {
            RewriteStep::RelationApply {
                position,
                relation,
                direction,
            } => {
                let (source, target) = self
                    .sides(relation, direction)
                    .ok_or_else(|| Error::NotApplicable(format!("no relation #{relation}")))?;
                if !word.matches_at(position, source) {
                    return Err(Error::NotApplicable(format!(
                        "{source} does not occur at {position} in {word}"
                    )));
                }
                Ok(word.splice(position, source.len(), target))
            }
            RewriteStep::FreeCancel { position } => {
                if position + 1 >= word.len() || !word[position].cancels(&word[position + 1]) {
                    return Err(Error::NotApplicable(format!(
                        "no cancellable pair at {position} in {word}"
                    )));
                }
                Ok(word.splice(position, 2, &[]))
            }
            RewriteStep::PairInsert { position, letter } => {
                if position > word.len() {
                    return Err(Error::NotApplicable(format!(
                        "insert position {position} past end of {word}"
                    )));
                }
                if !letter.generator.is_invertible() || !self.params.contains(letter.generator) {
                    return Err(Error::NotApplicable(format!("cannot insert {letter}")));
                }
                Ok(word.splice(position, 0, &[letter, letter.inverse()]))
            }
        }
    }

    /// Neighbours of `word` within `max_len`, each with the steps producing
    /// it: single relation moves and cancellations, then composite context
    /// moves, then pair insertions. All but pair insertions are followed by
    /// free reduction.
    fn successors(&self, word: &Word, max_len: usize, inserts: &[Letter]) -> Vec<(Word, Vec<RewriteStep>)> {
        let mut out = Vec::new();
        for step in self.find_applications(word) {
            let moved = self.apply(word, &step).expect("found steps apply");
            let (reduced, cancels) = reduce_with_steps(&moved);
            if reduced.len() > max_len {
                continue;
            }
            let mut steps = Vec::with_capacity(1 + cancels.len());
            steps.push(step);
            steps.extend(cancels);
            out.push((reduced, steps));
        }
        for (position, letter) in word.iter().enumerate() {
            let Some(rules) = self.context_index.get(letter) else {
                continue;
            };
            for &k in rules {
                let rule = &self.context[k];
                if !word.matches_at(position, &rule.middle) {
                    continue;
                }
                let (_, target) = self.sides(rule.relation, rule.direction).expect("rule relations exist");
                let mut replacement: Vec<Letter> = rule.prefix.iter().rev().map(Letter::inverse).collect();
                replacement.extend_from_slice(target);
                replacement.extend(rule.suffix.iter().rev().map(Letter::inverse));
                let moved = word.splice(position, rule.middle.len(), &replacement);
                let (reduced, cancels) = reduce_with_steps(&moved);
                if reduced.len() > max_len {
                    continue;
                }
                let mut steps = rule.steps(position);
                steps.extend(cancels);
                out.push((reduced, steps));
            }
        }
        if word.len() + 2 <= max_len {
            for position in 0..=word.len() {
                for &letter in inserts {
                    let step = RewriteStep::PairInsert { position, letter };
                    out.push((word.splice(position, 0, &[letter, letter.inverse()]), vec![step]));
                }
            }
        }
        out
    }

    /// Bounded search for a derivation `u -> v`.
    ///
    /// Returns `DistinctByInvariant` as soon as the invariant profiles
    /// differ. Otherwise both sides grow breadth-first from the freely
    /// reduced inputs, one full layer at a time, always expanding the side
    /// with the smaller pending layer (forward on ties). A successor already
    /// known to the opposite side closes the proof. The outcome depends
    /// only on the inputs and the budget.
    pub fn equiv_search(&self, u: &Word, v: &Word, budget: &SearchBudget) -> Result<Verdict> {
        if let Some(component) = distinguish(u, v, &self.params)? {
            return Ok(Verdict::DistinctByInvariant(component));
        }
        if u == v {
            return Ok(Verdict::Equivalent(ProofTrace {
                start: u.clone(),
                steps: Vec::new(),
                end: v.clone(),
            }));
        }

        let (u_root, u_reduce) = reduce_with_steps(u);
        let (v_root, v_reduce) = reduce_with_steps(v);
        let inserts = self.params.invertible_letters();
        let max_len = budget.max_word_length;

        let mut sides = [Side::new(u_root), Side::new(v_root)];
        let meeting = if sides[0].nodes[0].word == sides[1].nodes[0].word {
            Some((Vec::new(), Vec::new()))
        } else {
            self.grow(&mut sides, budget, max_len, &inserts)
        };
        let Some((forward, backward)) = meeting else {
            return Ok(Verdict::Unknown);
        };

        let mut steps = u_reduce;
        steps.extend(forward);
        steps.extend(invert_chain(self, &sides[1].nodes[0].word, &backward));
        steps.extend(invert_chain(self, v, &v_reduce));
        Ok(Verdict::Equivalent(ProofTrace {
            start: u.clone(),
            steps,
            end: v.clone(),
        }))
    }

    /// Runs the layered search; on success returns the step chains from each
    /// root to the common word.
    fn grow(
        &self,
        sides: &mut [Side; 2],
        budget: &SearchBudget,
        max_len: usize,
        inserts: &[Letter],
    ) -> Option<(Vec<RewriteStep>, Vec<RewriteStep>)> {
        loop {
            let pending = |s: &Side| (!s.layer.is_empty()).then_some(s.layer.len());
            let current = match (pending(&sides[0]), pending(&sides[1])) {
                (None, None) => return None,
                (Some(_), None) => 0,
                (None, Some(_)) => 1,
                (Some(f), Some(b)) => usize::from(b < f),
            };
            let (left, right) = sides.split_at_mut(1);
            let (this, other) = if current == 0 {
                (&mut left[0], &mut right[0])
            } else {
                (&mut right[0], &mut left[0])
            };

            let layer = std::mem::take(&mut this.layer);
            let mut next = Vec::new();
            for id in layer {
                let word = this.nodes[id].word.clone();
                for (succ, steps) in self.successors(&word, max_len, inserts) {
                    if this.index.contains_key(&succ) {
                        continue;
                    }
                    if let Some(&hit) = other.index.get(&succ) {
                        let mut this_chain = this.path(id);
                        this_chain.extend(steps);
                        let other_chain = other.path(hit);
                        return Some(if current == 0 {
                            (this_chain, other_chain)
                        } else {
                            (other_chain, this_chain)
                        });
                    }
                    if this.nodes.len() >= budget.max_nodes {
                        return None;
                    }
                    let new_id = this.nodes.len();
                    this.index.insert(succ.clone(), new_id);
                    this.nodes.push(Node {
                        word: succ,
                        parent: Some(id),
                        steps,
                    });
                    next.push(new_id);
                }
            }
            this.layer = next;
        }
    }
}
