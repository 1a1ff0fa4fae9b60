//! Line-oriented scenario files: a base declaration, blowup directives,
//! named class definitions and queries, executed in order against the
//! growing model chain.
//!
//! ```text
//! # build P³ blown up along a line, then certify the zero-section value
//! base p3
//! blowup curve class=L genus=0 decomposable tau=-2
//! class z = 4*H - E1
//! query intersect z z z expect=54
//! query subcase22 xi=2*H alpha=2 tau=-2 expect=-2
//! ```
//!
//! Expressions are rational linear combinations of basis names
//! (`4*H - 2*E1`, `L - 2*l1`); rationals are written `p/q` or as plain
//! integers. Comments start with `#`. Queries accept previously defined
//! names; `xi=` also accepts an inline expression (no spaces). Defined
//! names are implicitly pulled back to the model current at query time.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::chow::{CurveCenterSpec, CurveClass, DivisorClass, Factor, ThreefoldModel};
use crate::property_a::{self, Center, Theorem2Curve, Theorem2Part};
use crate::rat::{self, Rat};
use crate::report::{Record, Report, Value};

#[derive(Debug, Error, PartialEq)]
#[error("line {line}: {message}")]
pub struct ScenarioError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ScenarioError {
    ScenarioError {
        line,
        message: message.into(),
    }
}

/// A linear combination of basis names, kept in source order (terms are
/// not merged, so serialization round-trips to an identical structure).
#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    pub terms: Vec<(Rat, String)>,
}

impl Expr {
    /// Compact rendering without spaces, valid in `key=value` position.
    pub fn compact(&self) -> String {
        self.render(false)
    }

    /// Spaced rendering for definition lines.
    pub fn spaced(&self) -> String {
        self.render(true)
    }

    fn render(&self, spaced: bool) -> String {
        use num_traits::Signed;
        let mut out = String::new();
        for (coeff, name) in &self.terms {
            let mag = coeff.abs();
            let term = if mag == rat::int(1) {
                name.clone()
            } else {
                format!("{mag}*{name}")
            };
            if out.is_empty() {
                if coeff.is_negative() {
                    out.push('-');
                }
            } else if coeff.is_negative() {
                out.push_str(if spaced { " - " } else { "-" });
            } else {
                out.push_str(if spaced { " + " } else { "+" });
            }
            out.push_str(&term);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum CenterRef {
    Point,
    Curve {
        class: Expr,
        genus: u32,
        decomposable: bool,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub enum Query {
    Intersect {
        args: Vec<String>,
        expect: Option<Rat>,
    },
    Chern {
        which: u8,
    },
    PropertyA {
        name: String,
        expect: Option<bool>,
    },
    Theorem1 {
        center: CenterRef,
        expect: Option<bool>,
    },
    Subcase22 {
        xi: String,
        alpha: Rat,
        tau: i64,
        expect: Option<Rat>,
    },
    Theorem2 {
        part: u8,
        xi: String,
        alphas: Vec<Rat>,
        c2_positive: Option<bool>,
    },
    Strict {
        curve: String,
        m: u32,
    },
    Model,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Directive {
    Base,
    BlowupPoint,
    BlowupCurve {
        class: Expr,
        genus: u32,
        decomposable: bool,
        tau: Option<i64>,
        /// Intersection multiplicities with earlier centers; recorded
        /// for strict-transform bookkeeping, never validated.
        mult_with_prior: Vec<u32>,
    },
    DefDivisor {
        name: String,
        expr: Expr,
    },
    DefCurve {
        name: String,
        expr: Expr,
    },
    Query(Query),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Item {
    pub line: usize,
    pub directive: Directive,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct Scenario {
    pub items: Vec<Item>,
}

pub fn parse_scenario(text: &str) -> Result<Scenario, ScenarioError> {
    let mut items = Vec::new();
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
        let directive = parse_directive(stripped, line)?;
        if items.is_empty() {
            if directive != Directive::Base {
                return Err(err(line, "scenario must start with `base p3`"));
            }
        } else if directive == Directive::Base {
            return Err(err(line, "duplicate `base` declaration"));
        }
        items.push(Item { line, directive });
    }
    Ok(Scenario { items })
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            writeln!(f, "{}", render_directive(&item.directive))?;
        }
        Ok(())
    }
}

fn render_directive(directive: &Directive) -> String {
    match directive {
        Directive::Base => "base p3".to_string(),
        Directive::BlowupPoint => "blowup point".to_string(),
        Directive::BlowupCurve {
            class,
            genus,
            decomposable,
            tau,
            mult_with_prior,
        } => {
            let mut out = format!("blowup curve class={} genus={}", class.compact(), genus);
            if *decomposable {
                out.push_str(" decomposable");
            }
            if let Some(t) = tau {
                out.push_str(&format!(" tau={t}"));
            }
            for m in mult_with_prior {
                out.push_str(&format!(" mult-with-prior={m}"));
            }
            out
        }
        Directive::DefDivisor { name, expr } => format!("class {name} = {}", expr.spaced()),
        Directive::DefCurve { name, expr } => format!("curve {name} = {}", expr.spaced()),
        Directive::Query(query) => render_query(query),
    }
}

fn render_query(query: &Query) -> String {
    match query {
        Query::Intersect { args, expect } => {
            let mut out = format!("query intersect {}", args.join(" "));
            if let Some(e) = expect {
                out.push_str(&format!(" expect={e}"));
            }
            out
        }
        Query::Chern { which } => format!("query chern {which}"),
        Query::PropertyA { name, expect } => {
            let mut out = format!("query property_a {name}");
            if let Some(e) = expect {
                out.push_str(&format!(" expect={e}"));
            }
            out
        }
        Query::Theorem1 { center, expect } => {
            let mut out = "query theorem1 ".to_string();
            match center {
                CenterRef::Point => out.push_str("point"),
                CenterRef::Curve {
                    class,
                    genus,
                    decomposable,
                } => {
                    out.push_str(&format!("class={} genus={}", class.compact(), genus));
                    if *decomposable {
                        out.push_str(" decomposable");
                    }
                }
            }
            if let Some(e) = expect {
                out.push_str(&format!(" expect={e}"));
            }
            out
        }
        Query::Subcase22 {
            xi,
            alpha,
            tau,
            expect,
        } => {
            let mut out = format!("query subcase22 xi={xi} alpha={alpha} tau={tau}");
            if let Some(e) = expect {
                out.push_str(&format!(" expect={e}"));
            }
            out
        }
        Query::Theorem2 {
            part,
            xi,
            alphas,
            c2_positive,
        } => {
            let alphas: Vec<String> = alphas.iter().map(|a| a.to_string()).collect();
            let mut out = format!(
                "query theorem2 part={part} xi={xi} alphas={}",
                alphas.join(",")
            );
            if let Some(flag) = c2_positive {
                out.push_str(&format!(" c2-positive={flag}"));
            }
            out
        }
        Query::Strict { curve, m } => format!("query strict {curve} m={m}"),
        Query::Model => "query model".to_string(),
    }
}

fn parse_directive(s: &str, line: usize) -> Result<Directive, ScenarioError> {
    let tokens: Vec<&str> = s.split_whitespace().collect();
    match tokens[0] {
        "base" => {
            if tokens.len() != 2 || tokens[1] != "p3" {
                return Err(err(line, format!("expected `base p3`, got `{s}`")));
            }
            Ok(Directive::Base)
        }
        "blowup" => match tokens.get(1) {
            Some(&"point") => {
                if tokens.len() != 2 {
                    return Err(err(line, "unexpected tokens after `blowup point`"));
                }
                Ok(Directive::BlowupPoint)
            }
            Some(&"curve") => parse_blowup_curve(&tokens[2..], line),
            other => Err(err(
                line,
                format!(
                    "blowup kind must be `point` or `curve`, got `{}`",
                    other.copied().unwrap_or("<nothing>")
                ),
            )),
        },
        "class" | "curve" => {
            let kind = tokens[0];
            let rest = s[kind.len()..].trim_start();
            let (name, after) = rest
                .split_once('=')
                .ok_or_else(|| err(line, format!("missing `=` in `{s}`")))?;
            let name = name.trim();
            check_name(name, line)?;
            let expr = parse_expr(after.trim(), line)?;
            if kind == "class" {
                Ok(Directive::DefDivisor {
                    name: name.to_string(),
                    expr,
                })
            } else {
                Ok(Directive::DefCurve {
                    name: name.to_string(),
                    expr,
                })
            }
        }
        "query" => parse_query(&tokens[1..], line).map(Directive::Query),
        other => Err(err(line, format!("unknown directive `{other}`"))),
    }
}

fn parse_blowup_curve(args: &[&str], line: usize) -> Result<Directive, ScenarioError> {
    let mut class = None;
    let mut genus = None;
    let mut decomposable = false;
    let mut tau = None;
    let mut mult_with_prior = Vec::new();
    for token in args {
        if *token == "decomposable" {
            decomposable = true;
            continue;
        }
        let (key, value) = token
            .split_once('=')
            .ok_or_else(|| err(line, format!("expected key=value, got `{token}`")))?;
        match key {
            "class" => class = Some(parse_expr(value, line)?),
            "genus" => {
                genus = Some(value.parse::<u32>().map_err(|_| {
                    err(
                        line,
                        format!("genus must be a non-negative integer, got `{value}`"),
                    )
                })?)
            }
            "tau" => {
                tau = Some(
                    value
                        .parse::<i64>()
                        .map_err(|_| err(line, format!("tau must be an integer, got `{value}`")))?,
                )
            }
            "mult-with-prior" => mult_with_prior.push(value.parse::<u32>().map_err(|_| {
                err(
                    line,
                    format!("mult-with-prior must be a non-negative integer, got `{value}`"),
                )
            })?),
            other => return Err(err(line, format!("unknown key `{other}`"))),
        }
    }
    Ok(Directive::BlowupCurve {
        class: class.ok_or_else(|| err(line, "blowup curve needs class=<curve-expr>"))?,
        genus: genus.ok_or_else(|| err(line, "blowup curve needs genus=<g>"))?,
        decomposable,
        tau,
        mult_with_prior,
    })
}

fn parse_query(tokens: &[&str], line: usize) -> Result<Query, ScenarioError> {
    let kind = tokens.first().ok_or_else(|| err(line, "empty query"))?;
    match *kind {
        "intersect" => {
            let mut args = Vec::new();
            let mut expect = None;
            for token in &tokens[1..] {
                if let Some(value) = token.strip_prefix("expect=") {
                    expect = Some(parse_rat(value, line)?);
                } else {
                    check_name(token, line)?;
                    args.push(token.to_string());
                }
            }
            if args.len() != 2 && args.len() != 3 {
                return Err(err(
                    line,
                    format!("intersect takes 2 or 3 class names, got {}", args.len()),
                ));
            }
            Ok(Query::Intersect { args, expect })
        }
        "chern" => {
            let which = tokens
                .get(1)
                .and_then(|t| t.parse::<u8>().ok())
                .filter(|w| *w == 1 || *w == 2)
                .ok_or_else(|| err(line, "chern takes 1 or 2"))?;
            Ok(Query::Chern { which })
        }
        "property_a" => {
            let name = tokens
                .get(1)
                .ok_or_else(|| err(line, "property_a takes a class name"))?;
            check_name(name, line)?;
            let expect = match tokens.get(2) {
                None => None,
                Some(t) => Some(parse_expect_bool(t, line)?),
            };
            Ok(Query::PropertyA {
                name: name.to_string(),
                expect,
            })
        }
        "theorem1" => {
            let mut expect = None;
            let mut center = None;
            let mut class = None;
            let mut genus = None;
            let mut decomposable = false;
            for token in &tokens[1..] {
                if *token == "point" {
                    center = Some(CenterRef::Point);
                } else if *token == "decomposable" {
                    decomposable = true;
                } else if let Some(value) = token.strip_prefix("expect=") {
                    expect = Some(parse_bool(value, line)?);
                } else if let Some(value) = token.strip_prefix("class=") {
                    class = Some(parse_expr(value, line)?);
                } else if let Some(value) = token.strip_prefix("genus=") {
                    genus = Some(value.parse::<u32>().map_err(|_| {
                        err(
                            line,
                            format!("genus must be a non-negative integer, got `{value}`"),
                        )
                    })?);
                } else {
                    return Err(err(line, format!("unexpected token `{token}`")));
                }
            }
            let center = match center {
                Some(c) => c,
                None => CenterRef::Curve {
                    class: class
                        .ok_or_else(|| err(line, "theorem1 needs `point` or class=<expr>"))?,
                    genus: genus.ok_or_else(|| err(line, "theorem1 curve needs genus=<g>"))?,
                    decomposable,
                },
            };
            Ok(Query::Theorem1 { center, expect })
        }
        "subcase22" => {
            let mut xi = None;
            let mut alpha = None;
            let mut tau = None;
            let mut expect = None;
            for token in &tokens[1..] {
                let (key, value) = token
                    .split_once('=')
                    .ok_or_else(|| err(line, format!("expected key=value, got `{token}`")))?;
                match key {
                    "xi" => xi = Some(value.to_string()),
                    "alpha" => alpha = Some(parse_rat(value, line)?),
                    "tau" => {
                        tau = Some(value.parse::<i64>().map_err(|_| {
                            err(line, format!("tau must be an integer, got `{value}`"))
                        })?)
                    }
                    "expect" => expect = Some(parse_rat(value, line)?),
                    other => return Err(err(line, format!("unknown key `{other}`"))),
                }
            }
            Ok(Query::Subcase22 {
                xi: xi.ok_or_else(|| err(line, "subcase22 needs xi=<class>"))?,
                alpha: alpha.ok_or_else(|| err(line, "subcase22 needs alpha=<q>"))?,
                tau: tau.ok_or_else(|| err(line, "subcase22 needs tau=<int>"))?,
                expect,
            })
        }
        "theorem2" => {
            let mut part = None;
            let mut xi = None;
            let mut alphas = None;
            let mut c2_positive = None;
            for token in &tokens[1..] {
                let (key, value) = token
                    .split_once('=')
                    .ok_or_else(|| err(line, format!("expected key=value, got `{token}`")))?;
                match key {
                    "part" => {
                        part = Some(
                            value
                                .parse::<u8>()
                                .ok()
                                .filter(|p| *p == 1 || *p == 2)
                                .ok_or_else(|| err(line, "part must be 1 or 2"))?,
                        )
                    }
                    "xi" => xi = Some(value.to_string()),
                    "alphas" => {
                        let mut list = Vec::new();
                        if !value.is_empty() {
                            for piece in value.split(',') {
                                list.push(parse_rat(piece, line)?);
                            }
                        }
                        alphas = Some(list);
                    }
                    "c2-positive" => c2_positive = Some(parse_bool(value, line)?),
                    other => return Err(err(line, format!("unknown key `{other}`"))),
                }
            }
            Ok(Query::Theorem2 {
                part: part.ok_or_else(|| err(line, "theorem2 needs part=<1|2>"))?,
                xi: xi.ok_or_else(|| err(line, "theorem2 needs xi=<class>"))?,
                alphas: alphas.ok_or_else(|| err(line, "theorem2 needs alphas=<q,...>"))?,
                c2_positive,
            })
        }
        "strict" => {
            let curve = tokens
                .get(1)
                .ok_or_else(|| err(line, "strict takes a curve name"))?;
            check_name(curve, line)?;
            let m = tokens
                .get(2)
                .and_then(|t| t.strip_prefix("m="))
                .ok_or_else(|| err(line, "strict needs m=<int>"))?;
            let m = m
                .parse::<u32>()
                .map_err(|_| err(line, format!("m must be a non-negative integer, got `{m}`")))?;
            Ok(Query::Strict {
                curve: curve.to_string(),
                m,
            })
        }
        "model" => Ok(Query::Model),
        other => Err(err(line, format!("unknown query `{other}`"))),
    }
}

fn parse_expect_bool(token: &str, line: usize) -> Result<bool, ScenarioError> {
    token
        .strip_prefix("expect=")
        .ok_or_else(|| err(line, format!("unexpected token `{token}`")))
        .and_then(|v| parse_bool(v, line))
}

fn parse_bool(value: &str, line: usize) -> Result<bool, ScenarioError> {
    match value {
        "true" => Ok(true),
        "false" => Ok(false),
        other => Err(err(line, format!("expected true or false, got `{other}`"))),
    }
}

fn parse_rat(value: &str, line: usize) -> Result<Rat, ScenarioError> {
    rat::parse(value).map_err(|message| err(line, message))
}

fn check_name(name: &str, line: usize) -> Result<(), ScenarioError> {
    let mut chars = name.chars();
    let ok = chars
        .next()
        .map(|c| c.is_ascii_alphabetic() || c == '_')
        .unwrap_or(false)
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
    if ok {
        Ok(())
    } else {
        Err(err(line, format!("bad name `{name}`")))
    }
}

/// Parses a linear combination like `4*H - 2*E1` or the compact
/// `L-2*l1`.
fn parse_expr(s: &str, line: usize) -> Result<Expr, ScenarioError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err(line, "empty class expression"));
    }
    let mut chunks: Vec<String> = Vec::new();
    let mut chunk = String::new();
    for (i, ch) in compact.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 {
            chunks.push(std::mem::take(&mut chunk));
        }
        chunk.push(ch);
    }
    chunks.push(chunk);
    let mut terms = Vec::new();
    for piece in chunks {
        let (sign, body) = match piece.strip_prefix('-') {
            Some(rest) => (rat::int(-1), rest.to_string()),
            None => (
                rat::int(1),
                piece.strip_prefix('+').unwrap_or(&piece).to_string(),
            ),
        };
        if body.is_empty() {
            return Err(err(line, format!("dangling sign in `{s}`")));
        }
        match body.split_once('*') {
            Some((coeff, name)) => {
                let c = parse_rat(coeff, line)?;
                check_name(name, line)?;
                terms.push((sign * c, name.to_string()));
            }
            None => {
                check_name(&body, line)?;
                terms.push((sign, body));
            }
        }
    }
    Ok(Expr { terms })
}

// ---------------------------------------------------------------------------
// Runner
// ---------------------------------------------------------------------------

struct RunState {
    chain: Vec<ThreefoldModel>,
    divisors: BTreeMap<String, (usize, DivisorClass)>,
    curves: BTreeMap<String, (usize, CurveClass)>,
}

impl RunState {
    fn current(&self) -> &ThreefoldModel {
        self.chain.last().expect("chain starts with the base model")
    }

    fn current_index(&self) -> usize {
        self.chain.len() - 1
    }

    fn model(&self, index: usize) -> &ThreefoldModel {
        &self.chain[index]
    }

    /// Pulls a class defined at `from` up to model `to` by appending
    /// zeros, one per intervening blowup.
    fn lift_divisor(&self, class: &DivisorClass, from: usize, to: usize) -> DivisorClass {
        let mut coeffs = class.coeffs().to_vec();
        coeffs.resize(coeffs.len() + (to - from), rat::int(0));
        DivisorClass::new(coeffs)
    }

    fn lift_curve(&self, class: &CurveClass, from: usize, to: usize) -> CurveClass {
        let mut coeffs = class.coeffs().to_vec();
        coeffs.resize(coeffs.len() + (to - from), rat::int(0));
        CurveClass::new(coeffs)
    }

    /// Resolves a name to a divisor class on model `at`: user-defined
    /// classes (defined no later than `at`) first, then basis names.
    fn divisor_at(&self, name: &str, at: usize) -> Option<DivisorClass> {
        if let Some((def_at, class)) = self.divisors.get(name) {
            if *def_at <= at {
                return Some(self.lift_divisor(class, *def_at, at));
            }
            return None;
        }
        self.model(at).divisor_by_name(name)
    }

    fn curve_at(&self, name: &str, at: usize) -> Option<CurveClass> {
        if let Some((def_at, class)) = self.curves.get(name) {
            if *def_at <= at {
                return Some(self.lift_curve(class, *def_at, at));
            }
            return None;
        }
        self.model(at).curve_by_name(name)
    }

    fn eval_divisor_expr(
        &self,
        expr: &Expr,
        at: usize,
        line: usize,
    ) -> Result<DivisorClass, ScenarioError> {
        let model = self.model(at);
        let mut out = DivisorClass::zero(model.divisor_rank());
        for (coeff, name) in &expr.terms {
            let index = model
                .divisor_index(name)
                .ok_or_else(|| err(line, format!("`{name}` is not a divisor basis name here")))?;
            out = out.add(&model.basis_divisor(index).scale(coeff));
        }
        Ok(out)
    }

    fn eval_curve_expr(
        &self,
        expr: &Expr,
        at: usize,
        line: usize,
    ) -> Result<CurveClass, ScenarioError> {
        let model = self.model(at);
        let mut out = CurveClass::zero(model.curve_rank());
        for (coeff, name) in &expr.terms {
            let index = model
                .curve_index(name)
                .ok_or_else(|| err(line, format!("`{name}` is not a curve basis name here")))?;
            out = out.add(&model.basis_curve(index).scale(coeff));
        }
        Ok(out)
    }

    /// Resolves `xi=` values: a defined divisor name, or an inline
    /// expression over the divisor basis of model `at`.
    fn xi_at(&self, raw: &str, at: usize, line: usize) -> Result<DivisorClass, ScenarioError> {
        if let Some(class) = self.divisor_at(raw, at) {
            return Ok(class);
        }
        if self.divisors.contains_key(raw) {
            return Err(err(
                line,
                format!("`{raw}` is defined on a later model than required here"),
            ));
        }
        let expr = parse_expr(raw, line)?;
        self.eval_divisor_expr(&expr, at, line)
    }
}

pub fn run_scenario(scenario: &Scenario) -> Result<Report, ScenarioError> {
    match scenario.items.first() {
        Some(item) if item.directive == Directive::Base => {}
        Some(item) => return Err(err(item.line, "scenario must start with `base p3`")),
        None => return Ok(Report::default()),
    }
    let mut state = RunState {
        chain: Vec::new(),
        divisors: BTreeMap::new(),
        curves: BTreeMap::new(),
    };
    let mut report = Report::default();

    for item in &scenario.items {
        let line = item.line;
        match &item.directive {
            Directive::Base => {
                state.chain.push(ThreefoldModel::p3());
            }
            Directive::BlowupPoint => {
                let next = state.current().blow_up_point();
                state.chain.push(next);
            }
            Directive::BlowupCurve {
                class,
                genus,
                decomposable,
                tau,
                ..
            } => {
                let at = state.current_index();
                let center_class = state.eval_curve_expr(class, at, line)?;
                let spec = CurveCenterSpec::new(center_class, *genus, *decomposable, *tau);
                let next = state
                    .current()
                    .blow_up_curve(spec)
                    .map_err(|e| err(line, e.to_string()))?;
                state.chain.push(next);
            }
            Directive::DefDivisor { name, expr } => {
                define_name(&mut state, name, line)?;
                let at = state.current_index();
                let class = state.eval_divisor_expr(expr, at, line)?;
                state.divisors.insert(name.clone(), (at, class));
            }
            Directive::DefCurve { name, expr } => {
                define_name(&mut state, name, line)?;
                let at = state.current_index();
                let class = state.eval_curve_expr(expr, at, line)?;
                state.curves.insert(name.clone(), (at, class));
            }
            Directive::Query(query) => {
                let record = run_query(&state, query, line)?;
                report.records.push(record);
            }
        }
    }
    Ok(report)
}

fn define_name(state: &mut RunState, name: &str, line: usize) -> Result<(), ScenarioError> {
    if state.divisors.contains_key(name) || state.curves.contains_key(name) {
        return Err(err(line, format!("`{name}` is already defined")));
    }
    let reserved = matches!(name, "H" | "L")
        || (name.len() > 1
            && matches!(name.chars().next(), Some('E') | Some('l') | Some('f'))
            && name[1..].chars().all(|c| c.is_ascii_digit()));
    if reserved {
        return Err(err(
            line,
            format!("`{name}` is reserved for basis generators"),
        ));
    }
    Ok(())
}

fn run_query(state: &RunState, query: &Query, line: usize) -> Result<Record, ScenarioError> {
    let mut record = Record::new(
        line,
        render_query(query).trim_start_matches("query ").to_string(),
    );
    let cur = state.current_index();
    let model = state.current();
    match query {
        Query::Intersect { args, expect } => {
            enum Resolved {
                Div(DivisorClass),
                Curve(CurveClass),
            }
            let mut resolved = Vec::new();
            for name in args {
                if let Some(d) = state.divisor_at(name, cur) {
                    resolved.push(Resolved::Div(d));
                } else if let Some(c) = state.curve_at(name, cur) {
                    resolved.push(Resolved::Curve(c));
                } else {
                    return Err(err(line, format!("unknown class `{name}`")));
                }
            }
            let factors: Vec<Factor> = resolved
                .iter()
                .map(|r| match r {
                    Resolved::Div(d) => Factor::Div(d),
                    Resolved::Curve(c) => Factor::Curve(c),
                })
                .collect();
            let value = model
                .intersect(&factors)
                .map_err(|e| err(line, e.to_string()))?;
            if let Some(want) = expect {
                record.pass = Some(&value == want);
                record.field("expect", Value::Rat(want.clone()));
            }
            record.field("value", Value::Rat(value));
        }
        Query::Chern { which } => {
            if *which == 1 {
                record.field("c1", Value::Text(model.render_divisor(model.c1())));
            } else {
                record.field("c2", Value::Text(model.render_curve(model.c2())));
            }
        }
        Query::PropertyA { name, expect } => {
            let zeta = state
                .divisor_at(name, cur)
                .ok_or_else(|| err(line, format!("unknown divisor class `{name}`")))?;
            let out = property_a::property_a_report(model, &zeta)
                .map_err(|e| err(line, e.to_string()))?;
            record.field("zeta^2", Value::Text(model.render_curve(&out.zeta_sq)));
            record.field("zeta·c1^2", Value::Rat(out.zeta_c1_sq.clone()));
            record.field("zeta·c2", Value::Rat(out.zeta_c2.clone()));
            record.field("hypotheses_met", Value::Bool(out.hypotheses_met));
            if let Some(want) = expect {
                record.pass = Some(out.hypotheses_met == *want);
                record.field("expect", Value::Bool(*want));
            }
        }
        Query::Theorem1 { center, expect } => {
            let center = match center {
                CenterRef::Point => Center::Point,
                CenterRef::Curve {
                    class,
                    genus,
                    decomposable,
                } => {
                    let class = state.eval_curve_expr(class, cur, line)?;
                    Center::Curve(CurveCenterSpec::new(class, *genus, *decomposable, None))
                }
            };
            let verdict =
                property_a::theorem1_check(model, &center).map_err(|e| err(line, e.to_string()))?;
            record.field("applicable", Value::Bool(verdict.applicable));
            record.field("reason", Value::Text(verdict.reason.as_str().to_string()));
            if let Some(want) = expect {
                record.pass = Some(verdict.applicable == *want);
                record.field("expect", Value::Bool(*want));
            }
        }
        Query::Subcase22 {
            xi,
            alpha,
            tau,
            expect,
        } => {
            if cur == 0 {
                return Err(err(line, "subcase22 needs a curve blowup first"));
            }
            let xi_class = state.xi_at(xi, cur - 1, line)?;
            let out = property_a::subcase22_certificate(model, &xi_class, alpha, *tau)
                .map_err(|e| err(line, e.to_string()))?;
            record.field("gamma", Value::Int(out.gamma));
            record.field("zeta·C0", Value::Rat(out.value.clone()));
            record.field("contradiction", Value::Bool(out.contradiction));
            record.trace = Some(out.trace.clone());
            if let Some(want) = expect {
                record.pass = Some(&out.value == want);
                record.field("expect", Value::Rat(want.clone()));
            }
        }
        Query::Theorem2 {
            part,
            xi,
            alphas,
            c2_positive,
        } => {
            // The chain must be points first, then curves; X₁ sits at
            // the boundary.
            let records = model.provenance();
            let point_count = records
                .iter()
                .take_while(|r| r.kind() == crate::chow::BlowupKind::Point)
                .count();
            if records[point_count..]
                .iter()
                .any(|r| r.kind() == crate::chow::BlowupKind::Point)
            {
                return Err(err(
                    line,
                    "theorem2 needs point blowups first, then curve blowups",
                ));
            }
            let x1 = state.model(point_count);
            let mut curves = Vec::new();
            for (j, record) in records[point_count..].iter().enumerate() {
                let center = record.center().expect("curve records carry their center");
                // The center lives on the model just before its blowup;
                // its coordinates past X₁'s rank must vanish.
                let class = &center.class;
                if class.coeffs()[x1.curve_rank()..]
                    .iter()
                    .any(|c| !num_traits::Zero::is_zero(c))
                {
                    return Err(err(
                        line,
                        format!(
                            "curve center {} is not a pullback from the point-blowup model",
                            j + 1
                        ),
                    ));
                }
                let truncated = CurveClass::new(class.coeffs()[..x1.curve_rank()].to_vec());
                curves.push(Theorem2Curve {
                    class: truncated,
                    genus: center.genus,
                });
            }
            let xi_class = state.xi_at(xi, point_count, line)?;
            let part = if *part == 1 {
                Theorem2Part::One
            } else {
                Theorem2Part::Two
            };
            let out =
                property_a::theorem2_chain(x1, &curves, &xi_class, alphas, part, *c2_positive)
                    .map_err(|e| err(line, e.to_string()))?;
            let status = match &out.status {
                property_a::Theorem2Status::Ok => "ok".to_string(),
                property_a::Theorem2Status::Inapplicable(reason) => {
                    format!("inapplicable: {reason}")
                }
                property_a::Theorem2Status::Inconsistent(reason) => {
                    format!("inconsistent: {reason}")
                }
            };
            record.field("status", Value::Text(status));
            record.field("xi·c2(X1)", Value::Rat(out.xi_c2_x1.clone()));
            record.field("zeta·c2(X2)", Value::Rat(out.zeta_c2_x2.clone()));
            record.field("forced_vanishing", Value::Bool(out.forced_vanishing));
            record.trace = Some(out.trace.clone());
        }
        Query::Strict { curve, m } => {
            if cur == 0 {
                return Err(err(line, "strict needs a blowup first"));
            }
            let parent = cur - 1;
            let class = state.curve_at(curve, parent).ok_or_else(|| {
                err(
                    line,
                    format!("`{curve}` is not a curve class on the parent model"),
                )
            })?;
            let transformed = model
                .strict_transform(&class, *m)
                .map_err(|e| err(line, e.to_string()))?;
            let degree = model
                .pair(model.c1(), &transformed)
                .map_err(|e| err(line, e.to_string()))?;
            record.field("class", Value::Text(model.render_curve(&transformed)));
            record.field("c1·class", Value::Rat(degree));
        }
        Query::Model => {
            record.field("model", Value::Text(model.describe()));
        }
    }
    Ok(record)
}
