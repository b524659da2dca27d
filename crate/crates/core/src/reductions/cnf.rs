//! CNF formulas, DIMACS parsing and a truth-table satisfiability check.

use crate::error::{Error, Result};

/// Largest variable count [`sat_brute_force`] accepts.
pub const SAT_BRUTE_FORCE_CAP: usize = 24;

/// A CNF formula over variables `1..=num_vars`; literals are signed,
/// DIMACS style.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    /// Literals inside a clause are sorted and deduplicated. Empty clauses,
    /// out-of-range literals and clauses holding both `x` and `-x` are
    /// rejected.
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        let mut normalized = Vec::with_capacity(clauses.len());
        for (i, mut clause) in clauses.into_iter().enumerate() {
            if clause.is_empty() {
                return Err(Error::InvalidArgument(format!("clause {} is empty", i + 1)));
            }
            for &lit in &clause {
                if lit == 0 || lit.unsigned_abs() as usize > num_vars {
                    return Err(Error::InvalidArgument(format!(
                        "literal {lit} out of range for {num_vars} variables"
                    )));
                }
            }
            clause.sort_unstable_by_key(|l| (l.abs(), *l));
            clause.dedup();
            if clause.windows(2).any(|w| w[0] == -w[1]) {
                return Err(Error::InvalidArgument(format!(
                    "clause {} contains a variable and its negation",
                    i + 1
                )));
            }
            normalized.push(clause);
        }
        Ok(CnfFormula {
            num_vars,
            clauses: normalized,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// `assignment[v - 1]` is the value of variable `v`.
    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|clause| {
            clause
                .iter()
                .any(|&lit| assignment[lit.unsigned_abs() as usize - 1] == (lit > 0))
        })
    }
}

/// Parses DIMACS CNF: `c` comment lines, one `p cnf <vars> <clauses>`
/// header, then 0-terminated clauses that may span lines. A `%` line ends
/// the input.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<i32> = Vec::new();

    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(Error::Parse(format!("line {}: second header", lineno + 1)));
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parsed = match fields.as_slice() {
                ["p", "cnf", vars, count] => vars.parse().ok().zip(count.parse().ok()),
                _ => None,
            };
            header = Some(parsed.ok_or_else(|| {
                Error::Parse(format!("line {}: malformed header {line:?}", lineno + 1))
            })?);
            continue;
        }
        let Some((num_vars, _)) = header else {
            return Err(Error::Parse(format!(
                "line {}: clause before the p cnf header",
                lineno + 1
            )));
        };
        for token in line.split_whitespace() {
            let lit: i32 = token
                .parse()
                .map_err(|_| Error::Parse(format!("line {}: bad literal {token:?}", lineno + 1)))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else if lit.unsigned_abs() as usize > num_vars {
                return Err(Error::Parse(format!(
                    "line {}: literal {lit} out of range for {num_vars} variables",
                    lineno + 1
                )));
            } else {
                current.push(lit);
            }
        }
    }

    let Some((num_vars, declared)) = header else {
        return Err(Error::Parse("missing p cnf header".into()));
    };
    if !current.is_empty() {
        return Err(Error::Parse(
            "last clause is missing its 0 terminator".into(),
        ));
    }
    if clauses.len() != declared {
        return Err(Error::Parse(format!(
            "header declares {declared} clauses, found {}",
            clauses.len()
        )));
    }
    CnfFormula::new(num_vars, clauses).map_err(|e| Error::Parse(e.to_string()))
}

/// Writes `f` in DIMACS CNF.
pub fn to_dimacs(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars, f.clauses.len());
    for clause in &f.clauses {
        for lit in clause {
            out.push_str(&lit.to_string());
            out.push(' ');
        }
        out.push_str("0\n");
    }
    out
}

/// First satisfying assignment in counting order (variable 1 is the lowest
/// bit), or `None`.
pub fn sat_brute_force(f: &CnfFormula) -> Result<Option<Vec<bool>>> {
    let n = f.num_vars;
    if n > SAT_BRUTE_FORCE_CAP {
        return Err(Error::CapExceeded {
            what: "truth-table SAT",
            size: n,
            cap: SAT_BRUTE_FORCE_CAP,
        });
    }
    let mut assignment = vec![false; n];
    for bits in 0u64..1 << n {
        for (v, value) in assignment.iter_mut().enumerate() {
            *value = bits >> v & 1 == 1;
        }
        if f.satisfied_by(&assignment) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}
