//! Exact rational linear constraint systems with Fourier–Motzkin
//! variable elimination.
//!
//! Constraints are normalized to `expr = 0`, `expr ≥ 0` or `expr > 0`.
//! Elimination first substitutes out the variable using an equality when
//! one is available, otherwise combines every (positive, negative)
//! coefficient pair; a combination is strict exactly when either parent
//! is strict. Feasibility over ℚ is preserved in both directions at
//! every step, so a system is feasible iff the fully eliminated ground
//! system contains no false relation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::rat::{self, Rat};

#[derive(Debug, Error, PartialEq)]
pub enum FeasibilityError {
    #[error("forces_zero requires a homogeneous system (constraint `{0}` has a constant term)")]
    NonHomogeneous(String),
    #[error("forces_zero requires the sign constraint `{0} >= 0` in the system")]
    MissingSignConstraint(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A rational linear expression: coefficient map plus constant term.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct LinExpr {
    terms: BTreeMap<String, Rat>,
    constant: Rat,
}

impl LinExpr {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn constant(value: Rat) -> Self {
        LinExpr {
            terms: BTreeMap::new(),
            constant: value,
        }
    }

    pub fn var(name: impl Into<String>) -> Self {
        Self::term(rat::int(1), name)
    }

    pub fn term(coeff: Rat, name: impl Into<String>) -> Self {
        let mut e = LinExpr::new();
        e.add_term(coeff, name);
        e
    }

    pub fn add_term(&mut self, coeff: Rat, name: impl Into<String>) {
        if coeff.is_zero() {
            return;
        }
        let name = name.into();
        let entry = self.terms.entry(name.clone()).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&name);
        }
    }

    pub fn add_constant(&mut self, value: Rat) {
        self.constant += value;
    }

    pub fn coeff(&self, name: &str) -> Rat {
        self.terms.get(name).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> &Rat {
        &self.constant
    }

    pub fn vars(&self) -> impl Iterator<Item = &str> {
        self.terms.keys().map(String::as_str)
    }

    pub fn is_ground(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &LinExpr) -> LinExpr {
        let mut out = self.clone();
        for (name, coeff) in &other.terms {
            out.add_term(coeff.clone(), name.clone());
        }
        out.constant += &other.constant;
        out
    }

    pub fn scale(&self, s: &Rat) -> LinExpr {
        if s.is_zero() {
            return LinExpr::new();
        }
        LinExpr {
            terms: self.terms.iter().map(|(n, c)| (n.clone(), c * s)).collect(),
            constant: &self.constant * s,
        }
    }

    /// Substitutes `name := replacement` into this expression.
    fn substitute(&self, name: &str, replacement: &LinExpr) -> LinExpr {
        let coeff = self.coeff(name);
        if coeff.is_zero() {
            return self.clone();
        }
        let mut out = self.clone();
        out.terms.remove(name);
        out.add(&replacement.scale(&coeff))
    }

    pub fn eval(&self, assignment: &BTreeMap<String, Rat>) -> Option<Rat> {
        let mut total = self.constant.clone();
        for (name, coeff) in &self.terms {
            total += coeff * assignment.get(name)?;
        }
        Some(total)
    }
}

impl fmt::Display for LinExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (name, coeff) in &self.terms {
            let mag = coeff.abs();
            let term = if mag == rat::int(1) {
                name.clone()
            } else {
                format!("{mag}*{name}")
            };
            if !wrote {
                if coeff.is_negative() {
                    write!(f, "-{term}")?;
                } else {
                    write!(f, "{term}")?;
                }
                wrote = true;
            } else if coeff.is_negative() {
                write!(f, " - {term}")?;
            } else {
                write!(f, " + {term}")?;
            }
        }
        if !self.constant.is_zero() || !wrote {
            let mag = self.constant.abs();
            if !wrote {
                write!(f, "{}", self.constant)?;
            } else if self.constant.is_negative() {
                write!(f, " - {mag}")?;
            } else {
                write!(f, " + {mag}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// expr = 0
    Eq,
    /// expr ≥ 0
    Ge,
    /// expr > 0
    Gt,
}

impl Relation {
    fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Ge => ">=",
            Relation::Gt => ">",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Constraint {
    pub expr: LinExpr,
    pub rel: Relation,
}

impl Constraint {
    pub fn new(expr: LinExpr, rel: Relation) -> Self {
        Constraint { expr, rel }
    }

    fn ground_holds(&self) -> Option<bool> {
        if !self.expr.is_ground() {
            return None;
        }
        let c = self.expr.constant_term();
        Some(match self.rel {
            Relation::Eq => c.is_zero(),
            Relation::Ge => !c.is_negative(),
            Relation::Gt => c.is_positive(),
        })
    }

    pub fn holds(&self, assignment: &BTreeMap<String, Rat>) -> Option<bool> {
        let v = self.expr.eval(assignment)?;
        Some(match self.rel {
            Relation::Eq => v.is_zero(),
            Relation::Ge => !v.is_negative(),
            Relation::Gt => v.is_positive(),
        })
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} 0", self.expr, self.rel.symbol())
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ConstraintSystem {
    constraints: Vec<Constraint>,
}

impl ConstraintSystem {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, constraint: Constraint) {
        self.constraints.push(constraint);
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn vars(&self) -> BTreeSet<String> {
        self.constraints
            .iter()
            .flat_map(|c| c.expr.vars().map(str::to_string))
            .collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.constraints
            .iter()
            .all(|c| c.expr.constant_term().is_zero())
    }

    /// Eliminates one variable; the result is feasible over ℚ iff the
    /// input is. A variable absent from the system is a no-op.
    pub fn eliminate_variable(&self, var: &str) -> ConstraintSystem {
        // Equality substitution first, when some equality carries var.
        if let Some(pos) = self
            .constraints
            .iter()
            .position(|c| c.rel == Relation::Eq && !c.expr.coeff(var).is_zero())
        {
            let eq = &self.constraints[pos];
            let coeff = eq.expr.coeff(var);
            // var = -(expr - coeff*var)/coeff
            let mut rest = eq.expr.clone();
            rest.add_term(-coeff.clone(), var);
            let replacement = rest.scale(&(-rat::int(1) / coeff));
            let mut out = ConstraintSystem::new();
            for (i, c) in self.constraints.iter().enumerate() {
                if i == pos {
                    continue;
                }
                out.push(Constraint::new(c.expr.substitute(var, &replacement), c.rel));
            }
            return out;
        }

        let mut out = ConstraintSystem::new();
        let mut pos: Vec<&Constraint> = Vec::new();
        let mut neg: Vec<&Constraint> = Vec::new();
        for c in &self.constraints {
            let coeff = c.expr.coeff(var);
            if coeff.is_zero() {
                out.push(c.clone());
            } else if coeff.is_positive() {
                pos.push(c);
            } else {
                neg.push(c);
            }
        }
        for p in &pos {
            let a = p.expr.coeff(var);
            for n in &neg {
                let b = -n.expr.coeff(var);
                // b·p + a·n cancels var; strict if either parent is strict.
                let expr = p.expr.scale(&b).add(&n.expr.scale(&a));
                debug_assert!(expr.coeff(var).is_zero());
                let rel = if p.rel == Relation::Gt || n.rel == Relation::Gt {
                    Relation::Gt
                } else {
                    Relation::Ge
                };
                out.push(Constraint::new(expr, rel));
            }
        }
        out
    }

    /// Decides rational feasibility by eliminating every variable and
    /// inspecting the ground relations. Strict inequalities are honored
    /// exactly.
    pub fn is_feasible(&self) -> bool {
        let mut system = self.clone();
        loop {
            // Early exit on an already-false ground constraint.
            if system
                .constraints
                .iter()
                .any(|c| c.ground_holds() == Some(false))
            {
                return false;
            }
            let vars = system.vars();
            let Some(var) = choose_variable(&system, &vars) else {
                return true; // all ground and none false
            };
            system = system.eliminate_variable(&var);
        }
    }

    /// For a homogeneous system containing `var ≥ 0`: true iff every
    /// rational solution has `var = 0`, decided by testing `var = 1`
    /// for infeasibility (solutions scale within the cone).
    pub fn forces_zero(&self, var: &str) -> Result<bool, FeasibilityError> {
        if let Some(bad) = self
            .constraints
            .iter()
            .find(|c| !c.expr.constant_term().is_zero())
        {
            return Err(FeasibilityError::NonHomogeneous(bad.to_string()));
        }
        let has_sign = self.constraints.iter().any(|c| {
            c.rel == Relation::Ge
                && c.expr.constant_term().is_zero()
                && c.expr.terms.len() == 1
                && c.expr.coeff(var).is_positive()
        });
        if !has_sign {
            return Err(FeasibilityError::MissingSignConstraint(var.to_string()));
        }
        let mut pinned = self.clone();
        let mut expr = LinExpr::var(var);
        expr.add_constant(rat::int(-1));
        pinned.push(Constraint::new(expr, Relation::Eq));
        Ok(!pinned.is_feasible())
    }

    /// Parses the one-constraint-per-line text form, e.g.
    /// `3/2*d - b1 - b2 >= 0`. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<ConstraintSystem, FeasibilityError> {
        let mut out = ConstraintSystem::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let stripped = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            };
            let stripped = stripped.trim();
            if stripped.is_empty() {
                continue;
            }
            out.push(parse_constraint(stripped, line)?);
        }
        Ok(out)
    }
}

impl fmt::Display for ConstraintSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.constraints {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

fn choose_variable(system: &ConstraintSystem, vars: &BTreeSet<String>) -> Option<String> {
    // Prefer a variable sitting in an equality (substitution is cheap);
    // otherwise the one minimizing the pos*neg pairing count.
    for c in system.constraints() {
        if c.rel == Relation::Eq {
            if let Some(v) = c.expr.vars().next() {
                return Some(v.to_string());
            }
        }
    }
    let mut best: Option<(usize, &str)> = None;
    for v in vars {
        let mut p = 0usize;
        let mut n = 0usize;
        for c in system.constraints() {
            let coeff = c.expr.coeff(v);
            if coeff.is_positive() {
                p += 1;
            } else if coeff.is_negative() {
                n += 1;
            }
        }
        let cost = p * n;
        if best.is_none_or(|(c, _)| cost < c) {
            best = Some((cost, v));
        }
    }
    best.map(|(_, v)| v.to_string())
}

fn parse_constraint(s: &str, line: usize) -> Result<Constraint, FeasibilityError> {
    let err = |message: String| FeasibilityError::Parse { line, message };
    let (lhs, rel, rhs) = if let Some((l, r)) = s.split_once(">=") {
        (l, Relation::Ge, r)
    } else if let Some((l, r)) = s.split_once('>') {
        (l, Relation::Gt, r)
    } else if let Some((l, r)) = s.split_once('=') {
        (l, Relation::Eq, r)
    } else {
        return Err(err(format!("no relation in `{s}`")));
    };
    let left = parse_expr(lhs, line)?;
    let right = parse_expr(rhs, line)?;
    Ok(Constraint::new(left.add(&right.scale(&rat::int(-1))), rel))
}

fn parse_expr(s: &str, line: usize) -> Result<LinExpr, FeasibilityError> {
    let err = |message: String| FeasibilityError::Parse { line, message };
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err("empty expression".to_string()));
    }
    let mut expr = LinExpr::new();
    let mut chunk = String::new();
    let mut chunks: Vec<String> = Vec::new();
    for (i, ch) in compact.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 {
            chunks.push(std::mem::take(&mut chunk));
            chunk.push(ch);
        } else {
            chunk.push(ch);
        }
    }
    chunks.push(chunk);
    for piece in chunks {
        if piece.is_empty() || piece == "+" || piece == "-" {
            return Err(err(format!("dangling sign in `{s}`")));
        }
        let (sign, body) = match piece.strip_prefix('-') {
            Some(rest) => (rat::int(-1), rest),
            None => (rat::int(1), piece.strip_prefix('+').unwrap_or(&piece)),
        };
        match body.split_once('*') {
            Some((coeff, name)) => {
                let c = rat::parse(coeff).map_err(err)?;
                check_var_name(name).map_err(err)?;
                expr.add_term(sign * c, name);
            }
            None => {
                if body
                    .chars()
                    .next()
                    .map(|c| c.is_ascii_digit())
                    .unwrap_or(false)
                {
                    let c = rat::parse(body).map_err(err)?;
                    expr.add_constant(sign * c);
                } else {
                    check_var_name(body).map_err(err)?;
                    expr.add_term(sign, body);
                }
            }
        }
    }
    Ok(expr)
}

fn check_var_name(name: &str) -> Result<(), String> {
    let mut chars = name.chars();
    let ok = chars
        .next()
        .map(|c| c.is_ascii_alphabetic() || c == '_')
        .unwrap_or(false)
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
    if ok {
        Ok(())
    } else {
        Err(format!("bad variable name `{name}`"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};

    fn ge(expr: LinExpr) -> Constraint {
        Constraint::new(expr, Relation::Ge)
    }

    #[test]
    fn eliminate_interval() {
        // {x ≥ 1, −x ≥ −3} → feasible tautologies.
        let sys = ConstraintSystem::parse("x - 1 >= 0\n-x + 3 >= 0").unwrap();
        let gone = sys.eliminate_variable("x");
        assert!(gone.vars().is_empty());
        assert!(gone.is_feasible());
        assert!(sys.is_feasible());
    }

    #[test]
    fn eliminate_empty_interval() {
        // {x ≥ 1, −x ≥ 0} → {−1 ≥ 0}: infeasible.
        let sys = ConstraintSystem::parse("x - 1 >= 0\n-x >= 0").unwrap();
        let gone = sys.eliminate_variable("x");
        assert!(!gone.is_feasible());
        assert!(!sys.is_feasible());
    }

    #[test]
    fn theorem3_flavor_restriction() {
        // {Σβ = (17/3)d, (11/2)d ≥ Σβ, d = 1, β ≥ 0} is infeasible
        // because 17/3 > 11/2.
        let text = "\
b1 + b2 - 17/3*d = 0
11/2*d - b1 - b2 >= 0
d - 1 = 0
b1 >= 0
b2 >= 0";
        let sys = ConstraintSystem::parse(text).unwrap();
        assert!(!sys.is_feasible());
    }

    #[test]
    fn empty_and_contradictory_systems() {
        assert!(ConstraintSystem::new().is_feasible());
        let sys = ConstraintSystem::parse("x > 0\nx = 0").unwrap();
        assert!(!sys.is_feasible());
    }

    #[test]
    fn strictness_is_preserved() {
        // x > 0 and x ≤ 0 infeasible, while x ≥ 0, x ≤ 0 is feasible.
        let strict = ConstraintSystem::parse("x > 0\n-x >= 0").unwrap();
        assert!(!strict.is_feasible());
        let weak = ConstraintSystem::parse("x >= 0\n-x >= 0").unwrap();
        assert!(weak.is_feasible());
    }

    #[test]
    fn forces_zero_basics() {
        let sys = ConstraintSystem::parse("x >= 0\n-x >= 0").unwrap();
        assert_eq!(sys.forces_zero("x"), Ok(true));

        let sys = ConstraintSystem::parse("x >= 0\ny >= 0\ny - 2*x = 0").unwrap();
        assert_eq!(sys.forces_zero("x"), Ok(false));

        let inhom = ConstraintSystem::parse("x - 1 >= 0\nx >= 0").unwrap();
        assert!(matches!(
            inhom.forces_zero("x"),
            Err(FeasibilityError::NonHomogeneous(_))
        ));

        let unsigned = ConstraintSystem::parse("y - 2*x = 0\ny >= 0").unwrap();
        assert!(matches!(
            unsigned.forces_zero("x"),
            Err(FeasibilityError::MissingSignConstraint(_))
        ));
    }

    #[test]
    fn display_and_reparse_roundtrip() {
        let mut expr = LinExpr::term(frac(3, 2), "d");
        expr.add_term(int(-1), "b1");
        expr.add_term(int(-1), "b2");
        let c = ge(expr);
        assert_eq!(c.to_string(), "-b1 - b2 + 3/2*d >= 0");
        let mut sys = ConstraintSystem::new();
        sys.push(c);
        let reparsed = ConstraintSystem::parse(&sys.to_string()).unwrap();
        assert_eq!(reparsed, sys);
    }

    #[test]
    fn zero_coefficients_are_never_stored() {
        let mut e = LinExpr::term(int(2), "x");
        e.add_term(int(-2), "x");
        assert!(e.is_ground());
        assert_eq!(e.coeff("x"), int(0));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = ConstraintSystem::parse("x >= 0\n??").unwrap_err();
        assert!(matches!(err, FeasibilityError::Parse { line: 2, .. }));
        let err = ConstraintSystem::parse("3/0*x >= 0").unwrap_err();
        assert!(matches!(err, FeasibilityError::Parse { line: 1, .. }));
    }
}
