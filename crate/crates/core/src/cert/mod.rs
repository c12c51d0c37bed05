//! Bound computation and certification.
//!
//! A lower-bound certificate is a triple `(G, H, r)` with the pattern
//! induced in `G`, absent from `H`, and a Duplicator win in the `r`-round
//! game — which forces every sentence of depth `r` to agree on `G` and `H`,
//! so no depth-`r` sentence expresses the property and `D[F] >= r + 1`.
//!
//! An upper-bound certificate records that a sentence agrees with the
//! brute-force induced-subgraph check on every isomorphism representative up
//! to `n_max` vertices. That is instance verification at desk scale, not a
//! proof over all graphs.

mod search;
mod suite;

pub use search::{search_pair, SearchOutcome};
pub use suite::{
    row_battery, row_c5_four_rounds, row_enumeration, row_eq1, row_instance_lower, row_mutation,
    row_thm2_five_rounds, row_upper_thm11, run_suite, suite_rows, SuiteLevel, SuiteOptions,
    SuiteReport, SuiteRow,
};

use crate::game::{solve_with_budget, GameError, Winner, DEFAULT_NODE_BUDGET};
use crate::graph::{
    chromatic_number, contains_induced, encode, enumerate_all_up_to, Graph, GraphError,
    GraphFormat,
};
use crate::logic::{evaluate, print, Assignment, Formula, LogicError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertError {
    #[error("pattern must have at least one vertex")]
    EmptyPattern,
    #[error("rejected: pattern is induced in the negative host")]
    PatternInNegative,
    #[error("rejected: pattern is not induced in the positive host")]
    PatternMissingFromPositive,
    #[error("rejected: the Spoiler wins the {rounds}-round game")]
    SpoilerWins { rounds: usize },
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Logic(#[from] LogicError),
}

/// Machine-checkable evidence record; the JSON form (absent fields omitted)
/// is the unit of exchange between CLI runs.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct BoundCertificate {
    pub kind: String,
    pub pattern: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub left: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub right: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rounds: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub claimed_bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub formula: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub depth: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n_max: Option<usize>,
    pub verified: bool,
    pub tool_version: String,
}

impl BoundCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

fn graph6_string(g: &Graph) -> Result<String, GraphError> {
    Ok(String::from_utf8(encode(g, GraphFormat::Graph6)?).expect("graph6 is ASCII"))
}

/// The general arithmetic lower bound on `D[F]`: the maximum of
/// `floor(l/2 - 2*log2(l) + 3)`, the chromatic number, and `e/v + 2`
/// (`l = v(F)`). Returns the real maximum and its ceiling (`D[F]` is an
/// integer). With `use_complement` the maximum is additionally taken over
/// the edge complement, sound since `D[F] = D[complement F]`.
pub fn general_lower_bound(
    pattern: &Graph,
    use_complement: bool,
) -> Result<(f64, usize), CertError> {
    if pattern.n() == 0 {
        return Err(CertError::EmptyPattern);
    }
    let mut real = eq1_terms(pattern)?;
    if use_complement {
        real = real.max(eq1_terms(&pattern.complement())?);
    }
    Ok((real, real.ceil() as usize))
}

fn eq1_terms(f: &Graph) -> Result<f64, CertError> {
    let l = f.n() as f64;
    let sqrt_term = (0.5 * l - 2.0 * l.log2() + 3.0).floor();
    let chromatic = chromatic_number(f)? as f64;
    let density = f.edge_count() as f64 / l + 2.0;
    Ok(sqrt_term.max(chromatic).max(density))
}

pub fn certify_lower(
    pattern: &Graph,
    positive: &Graph,
    negative: &Graph,
    rounds: usize,
) -> Result<BoundCertificate, CertError> {
    certify_lower_with_budget(pattern, positive, negative, rounds, DEFAULT_NODE_BUDGET)
}

/// Runs the three checks backing a lower certificate and issues it only if
/// all pass. Rejections are explicit: pattern-in-negative,
/// pattern-not-in-positive, Spoiler-wins, or solver budget exceeded.
pub fn certify_lower_with_budget(
    pattern: &Graph,
    positive: &Graph,
    negative: &Graph,
    rounds: usize,
    budget: u64,
) -> Result<BoundCertificate, CertError> {
    if contains_induced(positive, pattern).is_none() {
        return Err(CertError::PatternMissingFromPositive);
    }
    if contains_induced(negative, pattern).is_some() {
        return Err(CertError::PatternInNegative);
    }
    let outcome = solve_with_budget(positive, negative, rounds, budget)?;
    if outcome.winner == Winner::Spoiler {
        return Err(CertError::SpoilerWins { rounds });
    }
    Ok(BoundCertificate {
        kind: "lower".into(),
        pattern: graph6_string(pattern)?,
        left: Some(graph6_string(positive)?),
        right: Some(graph6_string(negative)?),
        rounds: Some(rounds),
        claimed_bound: Some(rounds + 1),
        formula: None,
        depth: None,
        n_max: None,
        verified: true,
        tool_version: TOOL_VERSION.into(),
    })
}

/// Checks that `formula` agrees with the brute-force induced-subgraph test
/// for `pattern` on every isomorphism representative with at most `n_max`
/// vertices. The first disagreeing graph comes back as a counterexample and
/// leaves the certificate unverified.
pub fn certify_upper(
    pattern: &Graph,
    formula: &Formula,
    n_max: usize,
) -> Result<(BoundCertificate, Option<Graph>), CertError> {
    formula.check_sentence()?;
    let mut counterexample = None;
    for rep in enumerate_all_up_to(n_max)? {
        let claimed = evaluate(formula, &rep, &Assignment::new())?;
        let actual = contains_induced(&rep, pattern).is_some();
        if claimed != actual {
            counterexample = Some(rep);
            break;
        }
    }
    let cert = BoundCertificate {
        kind: "upper".into(),
        pattern: graph6_string(pattern)?,
        left: None,
        right: None,
        rounds: None,
        claimed_bound: None,
        formula: Some(print(formula)),
        depth: Some(formula.quantifier_depth()),
        n_max: Some(n_max),
        verified: counterexample.is_none(),
        tool_version: TOOL_VERSION.into(),
    };
    Ok((cert, counterexample))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_instance, generate, FamilySpec, NamedInstance};
    use crate::logic::{synth_thm11, synth_trivial};

    #[test]
    fn eq1_on_complete_graphs() {
        let k5 = generate(&FamilySpec::Complete(5)).unwrap();
        let (real, bound) = general_lower_bound(&k5, false).unwrap();
        assert_eq!(bound, 5);
        assert_eq!(real, 5.0);
    }

    #[test]
    fn eq1_on_c5_is_exactly_three() {
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        let (real, bound) = general_lower_bound(&c5, false).unwrap();
        assert_eq!(real, 3.0);
        assert_eq!(bound, 3);
    }

    #[test]
    fn eq1_on_the_paw() {
        // triangle with one pendant: terms are 1, 3, and 4/4 + 2 = 3
        let paw = Graph::build(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        let (real, bound) = general_lower_bound(&paw, false).unwrap();
        assert_eq!(real, 3.0);
        assert_eq!(bound, 3);
    }

    #[test]
    fn eq1_complement_strengthening_on_c4_plus_k1() {
        let c4k1 = generate(&FamilySpec::Cycle(4))
            .unwrap()
            .union(&Graph::empty(1).unwrap())
            .unwrap();
        let (_, plain) = general_lower_bound(&c4k1, false).unwrap();
        let (real, bound) = general_lower_bound(&c4k1, true).unwrap();
        assert!(plain < 4);
        assert!((real - 3.2).abs() < 1e-9);
        assert_eq!(bound, 4);
    }

    #[test]
    fn eq1_is_complement_symmetric_when_enabled() {
        for g in crate::graph::enumerate_up_to_iso(4).unwrap() {
            let a = general_lower_bound(&g, true).unwrap();
            let b = general_lower_bound(&g.complement(), true).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn certify_lower_on_the_thm2_instance() {
        let b = gen_instance(&NamedInstance::Thm2 {
            m: 1,
            parts: vec![2, 2],
        })
        .unwrap();
        let cert = certify_lower(&b.pattern, &b.positive, &b.negative, b.rounds).unwrap();
        assert!(cert.verified);
        assert_eq!(cert.claimed_bound, Some(4));
        assert_eq!(cert.kind, "lower");
        // round-trips through JSON
        let back = BoundCertificate::from_json(&cert.to_json()).unwrap();
        assert_eq!(back, cert);
    }

    #[test]
    fn certify_lower_rejections() {
        let k2 = generate(&FamilySpec::Complete(2)).unwrap();
        assert_eq!(
            certify_lower(&k2, &k2, &k2, 1),
            Err(CertError::PatternInNegative)
        );
        let e2 = Graph::empty(2).unwrap();
        assert_eq!(
            certify_lower(&k2, &e2, &e2, 1),
            Err(CertError::PatternMissingFromPositive)
        );
        // Spoiler wins 2 rounds on (K2, 2K1)
        assert_eq!(
            certify_lower(&k2, &k2, &e2, 2),
            Err(CertError::SpoilerWins { rounds: 2 })
        );
        // budget propagates
        assert!(matches!(
            certify_lower_with_budget(&k2, &k2, &e2, 2, 1),
            Err(CertError::Game(GameError::BudgetExceeded { .. }))
        ));
    }

    #[test]
    fn certify_upper_p3_at_depth_3() {
        let p3 = generate(&FamilySpec::Path(3)).unwrap();
        let (cert, cex) = certify_upper(&p3, &synth_trivial(&p3), 5).unwrap();
        assert!(cert.verified, "counterexample: {cex:?}");
        assert_eq!(cert.depth, Some(3));
    }

    #[test]
    fn certify_upper_catches_a_wrong_formula() {
        // an edge sentence does not express "contains a triangle"
        let k3 = generate(&FamilySpec::Complete(3)).unwrap();
        let k2 = generate(&FamilySpec::Complete(2)).unwrap();
        let (cert, cex) = certify_upper(&k3, &synth_trivial(&k2), 6).unwrap();
        assert!(!cert.verified);
        let g = cex.unwrap();
        assert!(g.edge_count() >= 1);
        assert!(contains_induced(&g, &k3).is_none());
    }

    #[test]
    fn certify_upper_thm11_empty_extension() {
        let p3k1 = generate(&FamilySpec::Path(3))
            .unwrap()
            .union(&Graph::empty(1).unwrap())
            .unwrap();
        let f = synth_thm11(&Graph::empty(0).unwrap());
        let (cert, cex) = certify_upper(&p3k1, &f, 6).unwrap();
        assert!(cert.verified, "counterexample: {cex:?}");
        assert_eq!(cert.depth, Some(3));
    }
}
