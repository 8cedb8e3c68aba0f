mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use singular_braid::syntax::{format, parse};
use singular_braid::*;

use common::*;

fn small_params() -> impl Strategy<Value = SurfaceParams> {
    (1usize..=5, 0usize..=3).prop_map(|(n, g)| params(n, g))
}

/// A surface together with a seed for drawing words on it.
fn surface_and_seed() -> impl Strategy<Value = (SurfaceParams, u64)> {
    (small_params(), any::<u64>())
}

fn with_rng<T>(seed: u64, f: impl FnOnce(&mut ChaCha8Rng) -> T) -> T {
    f(&mut ChaCha8Rng::seed_from_u64(seed))
}

proptest! {
    #[test]
    fn free_reduce_idempotent_and_confluent((p, seed) in surface_and_seed()) {
        if p.generators().is_empty() {
            return Ok(());
        }
        with_rng(seed, |rng| {
            let w = random_cancelling_word(rng, &p, 50);
            let r = w.free_reduce();
            assert!(r.is_freely_reduced());
            assert_eq!(r.free_reduce(), r);
            assert_eq!(reduce_in_random_order(rng, &w), r);
            assert_eq!(r.tau_count(), w.tau_count());
        });
    }

    #[test]
    fn invert_is_an_involution((p, seed) in surface_and_seed()) {
        if p.generators().is_empty() {
            return Ok(());
        }
        with_rng(seed, |rng| {
            let w = random_word(rng, &p, 30);
            match w.invert() {
                Ok(inv) => {
                    assert_eq!(w.tau_count(), 0);
                    assert_eq!(inv.invert().unwrap(), w);
                    assert!(w.concat(&inv).free_reduce().is_empty());
                    let prof = evaluate(&w.concat(&inv), &p).unwrap();
                    assert_eq!(prof, InvariantProfile::trivial(p));
                }
                Err(Error::NotInvertible { .. }) => assert!(w.tau_count() > 0),
                Err(e) => panic!("unexpected {e}"),
            }
        });
    }

    #[test]
    fn concat_is_associative_with_identity((p, seed) in surface_and_seed()) {
        if p.generators().is_empty() {
            return Ok(());
        }
        with_rng(seed, |rng| {
            let (a, b, c) = (random_word(rng, &p, 10), random_word(rng, &p, 10), random_word(rng, &p, 10));
            assert_eq!(a.concat(&b).concat(&c), a.concat(&b.concat(&c)));
            assert_eq!(Word::empty().concat(&a), a);
            assert_eq!(a.concat(&Word::empty()), a);
        });
    }

    #[test]
    fn evaluation_composes((p, seed) in surface_and_seed()) {
        if p.generators().is_empty() {
            return Ok(());
        }
        with_rng(seed, |rng| {
            let u = random_word(rng, &p, 20);
            let v = random_word(rng, &p, 20);
            let mut state = TraceState::new(p);
            state.run(&u).unwrap();
            state.run(&v).unwrap();
            assert_eq!(state.profile(), evaluate(&u.concat(&v), &p).unwrap());
        });
    }

    #[test]
    fn profile_is_internally_consistent((p, seed) in surface_and_seed()) {
        if p.generators().is_empty() {
            return Ok(());
        }
        with_rng(seed, |rng| {
            let w = random_cancelling_word(rng, &p, 40);
            let prof = evaluate(&w, &p).unwrap();
            assert_eq!(evaluate(&w.free_reduce(), &p).unwrap(), prof);
            let mut sum = vec![0i64; p.walls()];
            for strand in &prof.strand_homology {
                for (acc, x) in sum.iter_mut().zip(strand) {
                    *acc += x;
                }
            }
            assert_eq!(sum, prof.a_exponent);
            assert_eq!(prof.permutation_parity(), ((prof.sigma_parity as usize + prof.tau_count) % 2) as u8);
            let mut sorted = prof.permutation.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, (1..=p.n()).collect::<Vec<_>>());
        });
    }

    #[test]
    fn text_round_trips((p, seed) in surface_and_seed()) {
        if p.generators().is_empty() {
            return Ok(());
        }
        with_rng(seed, |rng| {
            let w = random_word(rng, &p, 30);
            let text = format(&w);
            assert_eq!(parse(&text, &p).unwrap(), w);
            assert_eq!(format(&parse(&text, &p).unwrap()), text);
        });
    }

    #[test]
    fn rewrite_steps_preserve_profiles((n, g, seed) in (2usize..=4, 0usize..=2, any::<u64>())) {
        let p = params(n, g);
        let sys = RewriteSystem::standard(p);
        with_rng(seed, |rng| {
            let mut w = random_word(rng, &p, 12);
            let start = evaluate(&w, &p).unwrap();
            for _ in 0..20 {
                let step = random_step(rng, &sys, &w).unwrap();
                w = sys.apply(&w, &step).unwrap();
                assert_eq!(evaluate(&w, &p).unwrap(), start);
            }
        });
    }
}

#[test]
fn non_canonical_text_normalizes() {
    let p = params(3, 1);
    let w = parse("  s1^3   a2^-2 t2 ", &p).unwrap();
    assert_eq!(format(&w), "s1 s1 s1 a2^-1 a2^-1 t2");
}

/// Pairs that are equal by construction: a relation side in a random context.
fn provable_pairs(count: usize) -> Vec<(SurfaceParams, Word, Word)> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut out = Vec::new();
    for (n, g) in [(2, 0), (2, 1), (3, 0), (3, 1), (4, 0)] {
        let p = params(n, g);
        let rels = all_relations(&p);
        for rel in rels.iter().take(count) {
            let ctx_l = random_word(&mut rng, &p, 2);
            let ctx_r = random_word(&mut rng, &p, 2);
            let u = Word::product([&ctx_l, &rel.lhs, &ctx_r]);
            let v = Word::product([&ctx_l, &rel.rhs, &ctx_r]);
            out.push((p, u, v));
        }
    }
    out
}

#[test]
fn traces_replay_with_invariant_profiles() {
    for (p, u, v) in provable_pairs(6) {
        let sys = RewriteSystem::standard(p);
        let verdict = sys.equiv_search(&u, &v, &SearchBudget::default_for(&u, &v)).unwrap();
        let Verdict::Equivalent(trace) = verdict else {
            panic!("{u} vs {v}: {verdict:?}");
        };
        assert_eq!((&trace.start, &trace.end), (&u, &v));
        let words = trace.replay(&sys).unwrap();
        let profile = evaluate(&u, &p).unwrap();
        for w in words {
            assert_eq!(evaluate(&w, &p).unwrap(), profile);
        }
    }
}

#[test]
fn larger_budgets_keep_proofs() {
    for (p, u, v) in provable_pairs(4) {
        let sys = RewriteSystem::standard(p);
        let base = SearchBudget::default_for(&u, &v);
        let small = SearchBudget::new(base.max_word_length, 200).unwrap();
        if !matches!(sys.equiv_search(&u, &v, &small).unwrap(), Verdict::Equivalent(_)) {
            continue;
        }
        for budget in [
            SearchBudget::new(base.max_word_length, 2_000).unwrap(),
            SearchBudget::new(base.max_word_length + 4, 20_000).unwrap(),
            base,
        ] {
            assert!(matches!(sys.equiv_search(&u, &v, &budget).unwrap(), Verdict::Equivalent(_)));
        }
    }
}

#[test]
fn search_is_deterministic() {
    let p = params(4, 0);
    let sys = RewriteSystem::standard(p);
    let u = tau_conjugate(1, 3, &p).unwrap();
    let v = Word::from(vec![Letter::tau(3)]);
    let budget = SearchBudget::default_for(&u, &v);
    let first = sys.equiv_search(&u, &v, &budget).unwrap();
    for _ in 0..3 {
        assert_eq!(sys.equiv_search(&u, &v, &budget).unwrap(), first);
    }
}

#[test]
fn prefix_cancellation_keeps_verdicts() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (p, u, v) in provable_pairs(4) {
        let sys = RewriteSystem::standard(p);
        let prefix = random_word(&mut rng, &p, 3);
        let (pu, pv) = (prefix.concat(&u), prefix.concat(&v));
        let (cu, cv) = cancel_common_prefix(&pu, &pv);
        let full = sys.equiv_search(&pu, &pv, &SearchBudget::default_for(&pu, &pv)).unwrap();
        let stripped = sys.equiv_search(&cu, &cv, &SearchBudget::default_for(&cu, &cv)).unwrap();
        assert!(matches!(full, Verdict::Equivalent(_)));
        assert!(matches!(stripped, Verdict::Equivalent(_)));
    }
    // Known-distinct pair: both forms are refuted on the same component.
    let p = params(2, 1);
    let sys = RewriteSystem::standard(p);
    let u = parse("t1 a1 t1", &p).unwrap();
    let v = parse("t1 t1 a1", &p).unwrap();
    let (cu, cv) = cancel_common_prefix(&u, &v);
    let full = sys.equiv_search(&u, &v, &SearchBudget::default_for(&u, &v)).unwrap();
    let stripped = sys.equiv_search(&cu, &cv, &SearchBudget::default_for(&cu, &cv)).unwrap();
    assert_eq!(full, Verdict::DistinctByInvariant(ProfileComponent::StrandHomology));
    assert_eq!(full, stripped);
}

#[test]
fn tietze_output_relations_hold() {
    for n in 2..=6 {
        for g in 0..=2 {
            let p = params(n, g);
            let simplified = tietze_simplify(&Presentation::standard(p));
            assert!(simplified.is_closed());
            for rel in &simplified.relations {
                assert_eq!(distinguish(&rel.lhs, &rel.rhs, &p).unwrap(), None, "{}", rel.label());
            }
        }
    }
}
