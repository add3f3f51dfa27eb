use std::fmt::Write as _;

use clutterlab::homology::GradedBettiTable;
use clutterlab::macaulay::{is_valid_lambda, lambda_max};
use clutterlab::{
    betti_from_multiset, f_vector_direct, f_vector_from_multiset, h_from_f, h_vector_from_multiset,
    hochster_betti, lambda_sequence, multiplicity, BettiSequence, Clutter, Error, FVector, HVector,
    LambdaSequence, Multiset, OracleLimits, SearchOutcome, SimplicialOrder,
};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputSummary {
    pub n: usize,
    pub d: usize,
    pub circuits: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Chordality {
    Chordal,
    NotChordal,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub checks: Vec<Check>,
    pub all_passed: bool,
    pub betti_table: GradedBettiTable,
}

/// l-sequence of the clutter and the λ bounds, present for chordal clutters other than `C_{n,d}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MacaulayBlock {
    #[serde(with = "clutterlab::serde_int::option_vec")]
    pub lsequence: Option<Vec<BigInt>>,
    pub valid: bool,
    pub problem: Option<String>,
    /// `lambda_max(n, d, i)` for `i = 1..=n-d`.
    #[serde(with = "clutterlab::serde_int::vec")]
    pub bounds: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub input: InputSummary,
    pub chordal: Chordality,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub states_explored: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<SimplicialOrder>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiset: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<LambdaSequence>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_vector: Option<FVector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_vector: Option<HVector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<BettiSequence>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub projective_dimension: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verification>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub macaulay: Option<MacaulayBlock>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Sections {
    pub f: bool,
    pub h: bool,
    pub betti: bool,
}

impl Report {
    /// Chordality, witness, multiset and λ.
    pub fn check(c: &Clutter, outcome: &SearchOutcome) -> Report {
        let (chordal, states_explored) = match outcome {
            SearchOutcome::Chordal(_) => (Chordality::Chordal, None),
            SearchOutcome::NotChordal => (Chordality::NotChordal, None),
            SearchOutcome::Inconclusive { states_explored } => (Chordality::Inconclusive, Some(*states_explored)),
        };
        let order = outcome.order().cloned();
        let ms = order.as_ref().map(SimplicialOrder::multiset);
        let lambda = ms.as_ref().map(|ms| lambda_sequence(ms, c.n(), c.d()));
        let macaulay = lambda.as_ref().and_then(|l| macaulay_block(c, l));
        Report {
            schema_version: SCHEMA_VERSION,
            input: InputSummary {
                n: c.n(),
                d: c.d(),
                circuits: c.len(),
            },
            chordal,
            states_explored,
            order,
            multiset: ms.map(|m| m.sizes().collect()),
            lambda,
            f_vector: None,
            h_vector: None,
            betti: None,
            multiplicity: None,
            projective_dimension: None,
            verification: None,
            macaulay,
        }
    }

    /// Adds the requested invariant blocks; the caller has checked chordality.
    pub fn add_invariants(&mut self, c: &Clutter, sections: Sections) -> Result<(), Error> {
        let ms = Multiset::from_sizes(self.multiset.clone().unwrap_or_default());
        let (n, d) = (c.n(), c.d());
        if sections.f {
            self.f_vector = Some(f_vector_from_multiset(n, d, &ms));
        }
        if sections.h {
            self.h_vector = Some(h_vector_from_multiset(n, d, &ms));
        }
        if sections.betti {
            let betti = match betti_from_multiset(n, d, &ms) {
                Ok(b) => b,
                Err(Error::ZeroIdeal) => BettiSequence::new(Vec::new()),
                Err(e) => return Err(e),
            };
            self.projective_dimension = betti.projective_dimension();
            self.betti = Some(betti);
        }
        self.multiplicity = Some(multiplicity(c));
        Ok(())
    }

    /// Compares the formula values with face counting and Hochster's formula.
    pub fn add_verification(&mut self, c: &Clutter, limits: &OracleLimits) -> Result<(), Error> {
        let ms = Multiset::from_sizes(self.multiset.clone().unwrap_or_default());
        let (n, d) = (c.n(), c.d());
        let mut checks = Vec::new();
        let direct_f = f_vector_direct(c, limits)?;
        let formula_f = f_vector_from_multiset(n, d, &ms);
        checks.push(compare("f-vector", &formula_f, &direct_f));
        let formula_h = h_vector_from_multiset(n, d, &ms);
        checks.push(compare("h-vector", &formula_h, &h_from_f(&direct_f)));
        let table = hochster_betti(c, limits)?;
        let formula_b = match betti_from_multiset(n, d, &ms) {
            Ok(b) => b,
            Err(Error::ZeroIdeal) => BettiSequence::new(Vec::new()),
            Err(e) => return Err(e),
        };
        let oracle_b = BettiSequence::from_u64(&table.totals());
        checks.push(compare("Betti numbers", &formula_b, &oracle_b));
        checks.push(Check {
            name: "linear resolution".into(),
            passed: table.is_linear(d),
            detail: if table.is_linear(d) {
                format!("every nonzero entry has j = i + {d}")
            } else {
                "nonzero entries off the linear strand".into()
            },
        });
        let all_passed = checks.iter().all(|c| c.passed);
        self.verification = Some(Verification {
            checks,
            all_passed,
            betti_table: table,
        });
        Ok(())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let mut row = |k: &str, v: String| {
            let _ = writeln!(out, "{k:<25}{v}");
        };
        row("clutter", format!("n = {}, d = {}, {} circuits", self.input.n, self.input.d, self.input.circuits));
        row(
            "chordal",
            match self.chordal {
                Chordality::Chordal => "yes".into(),
                Chordality::NotChordal => "no".into(),
                Chordality::Inconclusive => format!(
                    "inconclusive (search stopped after {} states)",
                    self.states_explored.unwrap_or(0)
                ),
            },
        );
        if let Some(o) = &self.order {
            row("simplicial order", if o.is_empty() { "(empty)".into() } else { o.to_string() });
        }
        if let Some(m) = &self.multiset {
            let parts: Vec<String> = m.iter().map(|x| x.to_string()).collect();
            row("multiset", format!("{{{}}}", parts.join(",")));
        }
        if let Some(l) = &self.lambda {
            row("lambda", l.to_string());
        }
        if let Some(f) = &self.f_vector {
            row("f-vector", f.to_string());
        }
        if let Some(h) = &self.h_vector {
            row("h-vector", h.to_string());
        }
        if let Some(b) = &self.betti {
            row("Betti numbers", b.to_string());
        }
        if let Some(m) = self.multiplicity {
            row("multiplicity", m.to_string());
        }
        if self.betti.is_some() {
            row(
                "projective dimension",
                self.projective_dimension.map_or("- (zero ideal)".into(), |p| p.to_string()),
            );
        }
        if let Some(m) = &self.macaulay {
            if let Some(l) = &m.lsequence {
                row("l-sequence", tuple(l));
            }
            row(
                "lambda realizable",
                match &m.problem {
                    None => "yes".into(),
                    Some(p) => format!("no ({p})"),
                },
            );
            row("lambda_max", tuple(&m.bounds));
        }
        if let Some(v) = &self.verification {
            for c in &v.checks {
                let status = if c.passed { "ok" } else { "MISMATCH" };
                row(&format!("check {}", c.name), format!("{status}: {}", c.detail));
            }
            row(
                "verification",
                if v.all_passed { "all checks passed".into() } else { "some checks FAILED".into() },
            );
        }
        out
    }
}

fn compare<T: PartialEq + std::fmt::Display>(name: &str, formula: &T, oracle: &T) -> Check {
    let passed = formula == oracle;
    let detail = if passed {
        format!("{formula}")
    } else {
        format!("formula {formula}, oracle {oracle}")
    };
    Check {
        name: name.into(),
        passed,
        detail,
    }
}

pub fn tuple(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn macaulay_block(c: &Clutter, lambda: &LambdaSequence) -> Option<MacaulayBlock> {
    let (n, d) = (c.n(), c.d());
    if n <= d || c.is_complete() {
        return None;
    }
    let diag = is_valid_lambda(n, d, lambda);
    let bounds = (1..=n - d).map(|i| lambda_max(n, d, i).expect("index in range")).collect();
    Some(MacaulayBlock {
        lsequence: diag.lsequence,
        valid: diag.valid,
        problem: diag.problem,
        bounds,
    })
}
