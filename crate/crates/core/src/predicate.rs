//! Named, versioned graph predicates used as keep-filters by the generator
//! and as asserted properties by the catalog.
//!
//! A predicate is a conjunction of literals written `a & b & !c`, e.g.
//! `3-connected & w6-free & !planar`.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::constructions;
use crate::error::{MinorError, PredicateError};
use crate::graph::Graph;
use crate::minor::{find_minor_model_escalating, is_planar, MinorModel, Pattern, DEFAULT_BUDGET};

/// Prepared `W6` pattern, built once.
pub fn w6() -> &'static Pattern {
    static P: OnceLock<Pattern> = OnceLock::new();
    P.get_or_init(|| Pattern::new(&constructions::wheel(6)))
}

/// Prepared `V8` pattern, built once.
pub fn v8() -> &'static Pattern {
    static P: OnceLock<Pattern> = OnceLock::new();
    P.get_or_init(|| Pattern::new(&constructions::v8()))
}

/// A `W6` model with budget escalation.
pub fn w6_model(g: &Graph, budget: u64) -> Result<Option<MinorModel>, MinorError> {
    find_minor_model_escalating(g, w6(), budget)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Term {
    All,
    Connected,
    ThreeConnected,
    InternallyFourConnected,
    Planar,
    W6Free,
    V8Free,
    /// Two cubic vertices share a neighborhood.
    CubicTwins,
    /// Some vertex has degree 3.
    HasCubic,
}

impl Term {
    const ALL: [Term; 9] = [
        Term::All,
        Term::Connected,
        Term::ThreeConnected,
        Term::InternallyFourConnected,
        Term::Planar,
        Term::W6Free,
        Term::V8Free,
        Term::CubicTwins,
        Term::HasCubic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Term::All => "all",
            Term::Connected => "connected",
            Term::ThreeConnected => "3-connected",
            Term::InternallyFourConnected => "i4c",
            Term::Planar => "planar",
            Term::W6Free => "w6-free",
            Term::V8Free => "v8-free",
            Term::CubicTwins => "cubic-twins",
            Term::HasCubic => "has-cubic",
        }
    }

    /// Bumped whenever the meaning or implementation of a term changes, so
    /// that stored reports stay comparable.
    pub fn version(self) -> u32 {
        match self {
            Term::InternallyFourConnected => 2,
            _ => 1,
        }
    }

    pub fn eval(self, g: &Graph, budget: u64) -> Result<bool, MinorError> {
        Ok(match self {
            Term::All => true,
            Term::Connected => g.is_connected(),
            Term::ThreeConnected => g.is_three_connected(),
            Term::InternallyFourConnected => g.is_internally_four_connected(),
            Term::Planar => is_planar(g),
            Term::W6Free => find_minor_model_escalating(g, w6(), budget)?.is_none(),
            Term::V8Free => find_minor_model_escalating(g, v8(), budget)?.is_none(),
            Term::CubicTwins => g.has_cubic_twins(),
            Term::HasCubic => (0..g.order()).any(|v| g.degree(v) == 3),
        })
    }

    /// Cheap terms first so that conjunctions short-circuit before minor
    /// searches.
    fn cost(self) -> u8 {
        match self {
            Term::W6Free | Term::V8Free => 3,
            Term::Planar => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Literal {
    pub term: Term,
    pub negated: bool,
}

impl Literal {
    pub fn eval(&self, g: &Graph, budget: u64) -> Result<bool, MinorError> {
        Ok(self.term.eval(g, budget)? != self.negated)
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "!")?;
        }
        write!(f, "{}", self.term.name())
    }
}

impl FromStr for Literal {
    type Err = PredicateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (negated, body) = match s.strip_prefix('!') {
            Some(rest) => (true, rest.trim()),
            None => (false, s),
        };
        let alias = match body {
            "nonplanar" => Some((Term::Planar, true)),
            "has-w6" => Some((Term::W6Free, true)),
            "has-v8" => Some((Term::V8Free, true)),
            _ => None,
        };
        if let Some((term, neg)) = alias {
            return Ok(Literal { term, negated: neg != negated });
        }
        Term::ALL
            .iter()
            .find(|t| t.name() == body)
            .map(|&term| Literal { term, negated })
            .ok_or_else(|| PredicateError::Unknown(body.to_string()))
    }
}

/// A conjunction of literals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Predicate {
    literals: Vec<Literal>,
}

impl Predicate {
    pub fn all() -> Self {
        Predicate { literals: Vec::new() }
    }

    pub fn of(literals: &[Literal]) -> Self {
        let mut literals = literals.to_vec();
        literals.sort_by_key(|l| l.term.cost());
        Predicate { literals }
    }

    /// Parses, panicking on unknown names. For predicates fixed in code.
    ///
    /// # Panics
    /// If `s` does not parse.
    pub fn fixed(s: &str) -> Self {
        s.parse().unwrap_or_else(|e| panic!("predicate `{s}`: {e}"))
    }

    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    pub fn eval(&self, g: &Graph, budget: u64) -> Result<bool, MinorError> {
        for l in &self.literals {
            if !l.eval(g, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn holds(&self, g: &Graph) -> Result<bool, MinorError> {
        self.eval(g, DEFAULT_BUDGET)
    }

    /// `name@version` for each literal, for reports.
    pub fn versions(&self) -> Vec<String> {
        self.literals.iter().map(|l| format!("{l}@{}", l.term.version())).collect()
    }

    /// True iff every literal is preserved under taking minors that stay
    /// 3-connected, which is what closure generation needs from a filter.
    pub fn is_minor_closed(&self) -> bool {
        self.literals.iter().all(|l| {
            matches!(
                (l.term, l.negated),
                (Term::All, false)
                    | (Term::Planar, false)
                    | (Term::W6Free, false)
                    | (Term::V8Free, false)
                    | (Term::Connected, false)
                    | (Term::ThreeConnected, false)
            )
        })
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.literals.is_empty() {
            return write!(f, "all");
        }
        let parts: Vec<String> = self.literals.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" & "))
    }
}

impl FromStr for Predicate {
    type Err = PredicateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lits: Vec<Literal> = s
            .split(['&', '∧'])
            .filter(|p| !p.trim().is_empty())
            .map(str::parse)
            .collect::<Result<_, _>>()?;
        Ok(Predicate::of(&lits))
    }
}
