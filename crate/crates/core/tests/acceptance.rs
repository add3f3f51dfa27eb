//! Acceptance runner: one PASS/FAIL line per criterion, non-zero exit if any criterion fails.
//!
//! Run with `cargo test -p clutterlab --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use clutterlab::chordality::lambda_sequence;
use clutterlab::generate::{random_chordal, random_graph, random_strongly_stable, random_tree};
use clutterlab::macaulay::{
    alpha_sequence, complete_lambda, extremal_clutter, is_squarefree_strongly_stable, is_valid_lambda,
    lambda_from_lsequence, lambda_max, lsequence_from_lambda, mu_direct, mu_via_lemma, p_polynomial,
    strongly_stable_witness,
};
use clutterlab::{
    betti_from_multiset, enumerate_simplicial_orders, f_polynomial_from_multiset, f_vector_direct, find_simplicial_order,
    h_from_f, h_vector_explicit, h_vector_from_multiset, hochster_betti, Clutter, Error, LambdaSequence, Multiset,
    OracleLimits,
};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{all_graphs, binom_u, graph_is_chordal, m_sequences, to_u64s};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn multiset_of(c: &Clutter) -> Result<Multiset, String> {
    find_simplicial_order(c)
        .order()
        .map(|o| o.multiset())
        .ok_or_else(|| format!("no simplicial order for {c:?}"))
}

fn lambda_of(c: &Clutter) -> Result<LambdaSequence, String> {
    Ok(lambda_sequence(&multiset_of(c)?, c.n(), c.d()))
}

fn worked_example() -> Outcome {
    let c = Clutter::new(5, 3, &[vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4], vec![1, 4, 5]])
        .map_err(|e| e.to_string())?;
    let orders = enumerate_simplicial_orders(&c, usize::MAX).map_err(|e| e.to_string())?;
    ensure(!orders.is_empty(), || "no simplicial order found".into())?;
    let expected = Multiset::from_sizes([1, 1, 1, 2]);
    for o in &orders {
        ensure(o.len() == 4 && o.multiset() == expected, || format!("order {o} has multiset {}", o.multiset()))?;
    }
    Ok(format!("{} orders, all with multiset {expected}", orders.len()))
}

fn complete_lambdas() -> Outcome {
    let mut cases = 0;
    for d in 2..=4 {
        for n in d..=8 {
            let c = Clutter::complete(n, d).map_err(|e| e.to_string())?;
            let found = lambda_of(&c)?;
            let formula = complete_lambda(n, d).map_err(|e| e.to_string())?;
            ensure(found == formula, || format!("(n,d)=({n},{d}): search {found}, formula {formula}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} complete clutters"))
}

fn forests() -> Outcome {
    // the closed formula counts spanning trees, so the random forests drawn here are trees
    let mut rng = StdRng::seed_from_u64(0xF0);
    let limits = OracleLimits::default();
    for _ in 0..20 {
        let n = rng.gen_range(4..=9);
        let t = random_tree(n, &mut rng).map_err(|e| e.to_string())?;
        let beta = betti_from_multiset(n, 2, &multiset_of(&t)?).map_err(|e| e.to_string())?;
        let formula: Vec<u64> = (0..n as u64 - 2).map(|i| (i + 1) * binom_u(n as u64 - 1, i + 2)).collect();
        let oracle = hochster_betti(&t, &limits).map_err(|e| e.to_string())?.totals();
        let beta = to_u64s(beta.entries());
        ensure(beta == formula && beta == oracle, || format!("{t:?}: {beta:?} vs {formula:?} vs {oracle:?}"))?;
    }
    Ok("20 random trees".into())
}

fn formulas_vs_oracle() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0xC4);
    let limits = OracleLimits::default();
    let mut linear = 0;
    for _ in 0..50 {
        let n = rng.gen_range(4..=9);
        let steps = rng.gen_range(1..=14);
        let (c, order) = random_chordal(n, 3, steps, 0.75, &mut rng).map_err(|e| e.to_string())?;
        let ms = order.multiset();
        let f = f_vector_direct(&c, &limits).map_err(|e| e.to_string())?;
        ensure(f.polynomial() == f_polynomial_from_multiset(n, 3, &ms), || format!("f mismatch on {c:?}"))?;
        let h = h_vector_from_multiset(n, 3, &ms);
        ensure(h == h_from_f(&f) && h == h_vector_explicit(n, 3, &ms), || format!("h mismatch on {c:?}"))?;
        let table = hochster_betti(&c, &limits).map_err(|e| e.to_string())?;
        let beta = match betti_from_multiset(n, 3, &ms) {
            Ok(beta) => to_u64s(beta.entries()),
            // complete clutter: zero ideal, empty sequence
            Err(Error::ZeroIdeal) if c.is_complete() => Vec::new(),
            Err(e) => return Err(format!("{c:?}: {e}")),
        };
        ensure(beta == table.totals(), || format!("Betti mismatch on {c:?}"))?;
        ensure(table.is_linear(3), || format!("non-linear table for {c:?}"))?;
        linear += 1;
    }
    Ok(format!("{linear} random chordal 3-clutters, all linear"))
}

fn sweep() -> Vec<(usize, usize, Vec<BigInt>)> {
    let mut out = Vec::new();
    for (n, d) in [(6, 3), (7, 3), (6, 4)] {
        let cap = binom_u(n as u64 - 1, d as u64 - 1);
        out.extend(m_sequences(n - d + 1, d as u64, cap).into_iter().map(|l| (n, d, l)));
    }
    out
}

fn lambda_round_trip() -> Outcome {
    let all = sweep();
    for (n, d, l) in &all {
        let lambda = lambda_from_lsequence(*n, *d, l).map_err(|e| format!("({n},{d}) {l:?}: {e}"))?;
        let back = lsequence_from_lambda(*n, *d, &lambda).map_err(|e| e.to_string())?;
        ensure(&back == l, || format!("({n},{d}): {l:?} came back as {back:?}"))?;
        let diag = is_valid_lambda(*n, *d, &lambda);
        ensure(diag.valid, || format!("({n},{d}) {lambda} rejected: {:?}", diag.problem))?;
    }
    Ok(format!("{} M-sequences", all.len()))
}

fn alpha_identities() -> Outcome {
    for n in 2..=20 {
        for d in 1..n {
            let alpha = alpha_sequence(n, d).map_err(|e| e.to_string())?;
            ensure(alpha.check_partial_sums(), || format!("partial sums fail at ({n},{d})"))?;
        }
    }
    for n in 1..20 {
        for d in 1..=n {
            let lhs = p_polynomial(n + 1, d).map_err(|e| e.to_string())?;
            let rhs = p_polynomial(n, d).map_err(|e| e.to_string())? + p_polynomial(n, d - 1).map_err(|e| e.to_string())?;
            ensure(lhs == rhs, || format!("Pascal recursion fails at ({n},{d})"))?;
        }
    }
    Ok("1 <= d < n <= 20".into())
}

fn bound_attainment() -> Outcome {
    for n in 5..=7 {
        for i in 1..=n - 3 {
            let c = extremal_clutter(n, 3, i).map_err(|e| e.to_string())?;
            let stable = is_squarefree_strongly_stable(&c.circuit_ideal().map_err(|e| e.to_string())?);
            ensure(stable, || format!("({n},3,{i}) circuit ideal not strongly stable"))?;
            let got = lambda_of(&c)?.get(i);
            let bound = lambda_max(n, 3, i).map_err(|e| e.to_string())?;
            ensure(got == bound, || format!("({n},3,{i}): λ_i = {got}, bound {bound}"))?;
        }
    }
    let small = Clutter::new(4, 3, &[vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4]]).map_err(|e| e.to_string())?;
    let a = lambda_of(&small)?.get(1);
    let b = lambda_of(&Clutter::complete(4, 3).map_err(|e| e.to_string())?)?.get(1);
    ensure(a == BigInt::from(3) && b == BigInt::from(2), || format!("λ_1 = {a} and {b}"))?;
    Ok("d = 3, n = 5..7; subclutter beats C_{4,3} at λ_1".into())
}

fn mu_from_m_vector() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x8);
    for _ in 0..30 {
        let d = rng.gen_range(2..=3);
        let n = rng.gen_range(d + 1..=7);
        let ideal = random_strongly_stable(n, d, rng.gen_range(1..=4), &mut rng).map_err(|e| e.to_string())?;
        for j in 0..=n - d {
            let a = mu_via_lemma(&ideal, j).map_err(|e| e.to_string())?;
            let b = mu_direct(&ideal, j).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("{ideal:?} j={j}: {a} vs {b}"))?;
        }
    }
    Ok("30 random strongly stable ideals".into())
}

fn dirac() -> Outcome {
    let mut exhaustive = 0;
    for n in 2..=6 {
        for g in all_graphs(n) {
            ensure(find_simplicial_order(&g).is_chordal() == graph_is_chordal(&g), || format!("{g:?}"))?;
            exhaustive += 1;
        }
    }
    let mut rng = StdRng::seed_from_u64(0xD1);
    for _ in 0..200 {
        let n = rng.gen_range(2..=10);
        let g = random_graph(n, rng.gen_range(0.2..0.9), &mut rng).map_err(|e| e.to_string())?;
        ensure(find_simplicial_order(&g).is_chordal() == graph_is_chordal(&g), || format!("{g:?}"))?;
    }
    Ok(format!("{exhaustive} exhaustive + 200 random graphs"))
}

fn witness_betti() -> Outcome {
    let limits = OracleLimits::default();
    let all = sweep();
    for (n, d, l) in &all {
        let (n, d) = (*n, *d);
        let w = strongly_stable_witness(n, d, l).map_err(|e| e.to_string())?;
        let c = Clutter::from_sets(n, d, w.generators().iter().copied())
            .and_then(|k| k.complement())
            .map_err(|e| e.to_string())?;
        let ms = multiset_of(&c)?;
        let beta = betti_from_multiset(n, d, &ms).map_err(|e| e.to_string())?;
        let oracle = hochster_betti(&c, &limits).map_err(|e| e.to_string())?.totals();
        ensure(to_u64s(beta.entries()) == oracle, || format!("({n},{d}) {l:?}: {beta} vs {oracle:?}"))?;
        let lambda = lambda_sequence(&ms, n, d);
        let expected = lambda_from_lsequence(n, d, l).map_err(|e| e.to_string())?;
        ensure(lambda == expected, || format!("({n},{d}) {l:?}: λ {lambda} vs {expected}"))?;
    }
    Ok(format!("{} witnesses", all.len()))
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("worked example: every order has multiset {1,1,1,2}", Duration::from_secs(1), worked_example),
        ("complete clutter lambda, d in 2..=4, n <= 8", Duration::from_secs(120), complete_lambdas),
        ("forest Betti numbers vs formula and Hochster", Duration::from_secs(120), forests),
        ("f, h, Betti formulas vs oracles, linear resolution", Duration::from_secs(600), formulas_vs_oracle),
        ("lambda <-> M-sequence round trip", Duration::from_secs(300), lambda_round_trip),
        ("alpha, sigma and p identities", Duration::from_secs(5), alpha_identities),
        ("extremal clutters attain lambda_max", Duration::from_secs(120), bound_attainment),
        ("mu via m-vector equals direct count", Duration::from_secs(60), mu_from_m_vector),
        ("graph chordality vs perfect elimination", Duration::from_secs(300), dirac),
        ("witness Betti sequences from chordal clutters", Duration::from_secs(300), witness_betti),
    ];
    let mut failures = 0;
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > *limit => Err(format!("{detail}; over the {limit:?} limit")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS  {:>2}  {name}  ({detail}; {elapsed:.2?})", k + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL  {:>2}  {name}  ({why}; {elapsed:.2?})", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
