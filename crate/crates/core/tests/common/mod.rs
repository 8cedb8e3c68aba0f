#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use singular_braid::{Generator, Letter, RewriteStep, RewriteSystem, Sign, SurfaceParams, Word};

pub fn params(n: usize, g: usize) -> SurfaceParams {
    SurfaceParams::new(n, g).unwrap()
}

pub fn random_letter<R: Rng>(rng: &mut R, p: &SurfaceParams) -> Letter {
    let gens = p.generators();
    let g = *gens.choose(rng).expect("alphabet is non-empty");
    let sign = if matches!(g, Generator::Tau(_)) || rng.gen_bool(0.5) {
        Sign::Pos
    } else {
        Sign::Neg
    };
    Letter::new(g, sign)
}

pub fn random_word<R: Rng>(rng: &mut R, p: &SurfaceParams, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| random_letter(rng, p)).collect()
}

/// Word with a bias towards cancellable pairs.
pub fn random_cancelling_word<R: Rng>(rng: &mut R, p: &SurfaceParams, max_len: usize) -> Word {
    let mut w = Word::empty();
    let len = rng.gen_range(0..=max_len);
    while w.len() < len {
        let l = random_letter(rng, p);
        w.push(l);
        if !l.is_tau() && rng.gen_bool(0.4) {
            w.push(l.inverse());
        }
    }
    w
}

/// Reduces by deleting a uniformly random cancellable pair until none remain.
pub fn reduce_in_random_order<R: Rng>(rng: &mut R, w: &Word) -> Word {
    let mut letters = w.to_vec();
    loop {
        let spots: Vec<usize> = (0..letters.len().saturating_sub(1))
            .filter(|&k| letters[k].cancels(&letters[k + 1]))
            .collect();
        let Some(&k) = spots.choose(rng) else {
            return Word::from(letters);
        };
        letters.drain(k..k + 2);
    }
}

/// One random applicable step: a relation move, a cancellation or a pair
/// insertion.
pub fn random_step<R: Rng>(rng: &mut R, sys: &RewriteSystem, w: &Word) -> Option<RewriteStep> {
    let found = sys.find_applications(w);
    let invertible = sys.params().invertible_letters();
    if !found.is_empty() && (invertible.is_empty() || rng.gen_bool(0.6)) {
        return found.choose(rng).copied();
    }
    let letter = *invertible.choose(rng)?;
    Some(RewriteStep::PairInsert {
        position: rng.gen_range(0..=w.len()),
        letter,
    })
}

/// Applies up to `steps` random steps to `w`.
pub fn random_walk<R: Rng>(rng: &mut R, sys: &RewriteSystem, w: &Word, steps: usize) -> Word {
    let mut current = w.clone();
    for _ in 0..steps {
        let Some(step) = random_step(rng, sys, &current) else {
            break;
        };
        current = sys.apply(&current, &step).expect("random steps are applicable");
    }
    current
}

/// Independent count of relation instances per family from the index ranges.
pub fn expected_family_counts(n: usize, g: usize) -> Vec<(&'static str, usize)> {
    let m = n - 1;
    let walls = 2 * g;
    let far_pairs = if m >= 2 { (m - 1) * (m - 2) } else { 0 };
    let has_sigma1 = n >= 2;
    vec![
        ("R1", far_pairs),
        ("R2", n.saturating_sub(2)),
        ("R3", 1),
        ("R4", if has_sigma1 { walls * walls.saturating_sub(1) } else { 0 }),
        ("R5", if has_sigma1 { walls } else { 0 }),
        ("R6", walls * n.saturating_sub(2)),
        ("R7", far_pairs),
        ("R8", far_pairs),
        ("R9", m),
        ("R10", 2 * m.saturating_sub(1)),
        ("R11", m * walls),
        ("R12", m * n.saturating_sub(2) * walls),
    ]
}
