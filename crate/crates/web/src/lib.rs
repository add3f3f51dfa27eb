//! Browser bindings. Every export takes plain strings or numbers and returns a JSON string,
//! with an `error` field when the input is rejected.

use clutterlab::macaulay::{
    alpha_sequence, complete_lambda, extremal_lambda_profile, is_valid_lambda, lambda_max, LambdaDiagnosis,
};
use clutterlab::{
    betti_from_multiset, f_vector_from_multiset, find_simplicial_order_with, h_vector_from_multiset,
    lambda_sequence, parse_clutter, Error, LambdaSequence, SearchConfig, SearchOutcome,
};
use num_bigint::BigInt;
use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

/// Keeps the page responsive on large non-chordal inputs.
const MAX_STATES: usize = 200_000;

#[derive(Serialize)]
struct Failure {
    error: String,
}

fn to_json<T: Serialize>(value: &Result<T, String>) -> String {
    let out = match value {
        Ok(v) => serde_json::to_string(v),
        Err(e) => serde_json::to_string(&Failure { error: e.clone() }),
    };
    out.expect("plain data serializes")
}

#[derive(Serialize)]
struct Analysis {
    n: usize,
    d: usize,
    circuits: usize,
    chordal: &'static str,
    order: Option<String>,
    multiset: Option<Vec<usize>>,
    lambda: Option<String>,
    f_vector: Option<String>,
    h_vector: Option<String>,
    betti: Option<String>,
    lambda_check: Option<LambdaDiagnosis>,
}

fn tuple(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn analysis(text: &str) -> Result<Analysis, String> {
    let c = parse_clutter(text).map_err(|e| e.to_string())?;
    let (n, d) = (c.n(), c.d());
    let outcome = find_simplicial_order_with(&c, &SearchConfig { max_states: Some(MAX_STATES) });
    let chordal = match outcome {
        SearchOutcome::Chordal(_) => "yes",
        SearchOutcome::NotChordal => "no",
        SearchOutcome::Inconclusive { .. } => "inconclusive",
    };
    let mut a = Analysis {
        n,
        d,
        circuits: c.len(),
        chordal,
        order: None,
        multiset: None,
        lambda: None,
        f_vector: None,
        h_vector: None,
        betti: None,
        lambda_check: None,
    };
    if let Some(order) = outcome.order() {
        let ms = order.multiset();
        let lambda = lambda_sequence(&ms, n, d);
        a.order = Some(order.to_string());
        a.multiset = Some(ms.sizes().collect());
        a.f_vector = Some(f_vector_from_multiset(n, d, &ms).to_string());
        a.h_vector = Some(h_vector_from_multiset(n, d, &ms).to_string());
        a.betti = Some(match betti_from_multiset(n, d, &ms) {
            Ok(b) => b.to_string(),
            Err(Error::ZeroIdeal) => "() zero ideal".into(),
            Err(e) => return Err(e.to_string()),
        });
        if n > d && !c.is_complete() {
            a.lambda_check = Some(is_valid_lambda(n, d, &lambda));
        }
        a.lambda = Some(lambda.to_string());
    }
    Ok(a)
}

/// Chordality, simplicial order, λ and the f-, h- and Betti vectors of a clutter in text or JSON form.
#[wasm_bindgen]
pub fn analyze(text: &str) -> String {
    to_json(&analysis(text))
}

#[derive(Serialize)]
struct Exploration {
    n: usize,
    d: usize,
    alpha: String,
    sigma: String,
    complete_lambda: Option<String>,
    bounds: Vec<Bound>,
}

#[derive(Serialize)]
struct Bound {
    i: usize,
    lambda_max: String,
    profile: String,
}

fn exploration(n: usize, d: usize) -> Result<Exploration, String> {
    if n > 40 {
        return Err("n is limited to 40 in the demo".into());
    }
    let alpha = alpha_sequence(n, d).map_err(|e| e.to_string())?;
    let mut bounds = Vec::new();
    for i in 1..=n - d {
        bounds.push(Bound {
            i,
            lambda_max: lambda_max(n, d, i).map_err(|e| e.to_string())?.to_string(),
            profile: extremal_lambda_profile(n, d, i).map_err(|e| e.to_string())?.to_string(),
        });
    }
    Ok(Exploration {
        n,
        d,
        alpha: tuple(alpha.entries()),
        sigma: tuple(&alpha.partial_sums()),
        complete_lambda: complete_lambda(n, d).ok().map(|l| l.to_string()),
        bounds,
    })
}

/// α and σ for `(n, d)`, λ of the complete clutter, and the bound and extremal profile for each i.
#[wasm_bindgen]
pub fn explore(n: usize, d: usize) -> String {
    to_json(&exploration(n, d))
}

fn validation(n: usize, d: usize, lambda: &str) -> Result<LambdaDiagnosis, String> {
    let body = lambda.trim().trim_start_matches('(').trim_end_matches(')');
    let entries = body
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<BigInt>().map_err(|_| format!("not an integer: {s:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(is_valid_lambda(n, d, &LambdaSequence::new(n, d, entries)))
}

/// Whether the comma-separated λ_1,λ_2,... belongs to a chordal d-clutter on [n], with its l-sequence.
#[wasm_bindgen]
pub fn validate_lambda(n: usize, d: usize, lambda: &str) -> String {
    to_json(&validation(n, d, lambda))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn analyzes_the_worked_example() {
        let v = parse(&analyze("5 3\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n1 4 5\n"));
        assert_eq!(v["chordal"], "yes");
        assert_eq!(v["lambda"], "(3,1)");
        assert_eq!(v["betti"], "(5,6,2)");
        assert_eq!(v["h_vector"], "(1,1,1,-4,2)");
        assert_eq!(v["lambda_check"]["valid"], true);
    }

    #[test]
    fn reports_errors_and_non_chordal() {
        assert!(parse(&analyze("4 2\n1 9\n"))["error"].as_str().unwrap().contains("line 2"));
        let v = parse(&analyze("4 2\n1 2\n2 3\n3 4\n1 4\n"));
        assert_eq!(v["chordal"], "no");
        assert!(v["lambda"].is_null());
    }

    #[test]
    fn explores_parameters() {
        let v = parse(&explore(5, 3));
        assert_eq!(v["alpha"], "(-6,3,2,1)");
        assert_eq!(v["sigma"], "(6,3,1,0)");
        assert_eq!(v["complete_lambda"], "(3,2,1)");
        assert_eq!(v["bounds"][0]["lambda_max"], "6");
        assert!(parse(&explore(3, 3))["error"].is_string());
    }

    #[test]
    fn validates() {
        let v = parse(&validate_lambda(5, 3, "4,2"));
        assert_eq!(v["valid"], true);
        assert_eq!(v["lsequence"], serde_json::json!([1, 1, 0]));
        assert_eq!(parse(&validate_lambda(5, 3, "7,2"))["valid"], false);
        assert!(parse(&validate_lambda(5, 3, "a"))["error"].is_string());
    }
}
