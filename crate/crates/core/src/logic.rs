//! A small first-order language over the graph vocabulary, with the
//! builtin predicates the transferred theorems need (degree parity,
//! connectivity, the Dirac criterion — none of them first-order, but all of
//! them part of the sentences being transferred).
//!
//! Truth of a sentence on a whole family is decided by computing the exact
//! set `{n : G_n satisfies it}` when the family is constant or explicitly
//! periodic; parametric families are only sampled along the anchor
//! progression, and a sampled verdict never claims exactness.
//!
//! Grammar (`not` binds tightest, then `and`, `or`, `->`; quantifiers
//! extend maximally right; `->` associates to the right):
//!
//! ```text
//! sentence := quant | expr
//! quant    := ("forall" | "exists") ident ":" ("V" | "E") sentence
//! expr     := expr ("and" | "or" | "->") expr | "not" expr | "(" sentence ")" | atom
//! atom     := ident "in" ident | ident "=" ident | "adj(" ident "," ident ")"
//!           | "connected()" | "eulerian()" | "deg_even(" ident ")"
//!           | "deg_ge(" ident "," nat ")" | "hamiltonian_dirac()"
//! ```

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::family::{FamilyError, GraphFamily};
use crate::graph::FiniteGraph;
use crate::upalg::{AnchoredUltrafilter, UpSet};

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum LogicError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("sort error at byte {pos}: {msg}")]
    Sort { pos: usize, msg: String },
    #[error("unbound variable '{name}' at byte {pos}")]
    UnboundVariable { name: String, pos: usize },
    #[error(transparent)]
    Family(#[from] FamilyError),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VarSort {
    Vertex,
    Edge,
}

impl fmt::Display for VarSort {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarSort::Vertex => write!(out, "V"),
            VarSort::Edge => write!(out, "E"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Atom {
    /// Vertex incidence `x in b`.
    In(String, String),
    /// Same-sort equality.
    Eq(String, String),
    /// Vertex adjacency through some edge.
    Adj(String, String),
    Connected,
    Eulerian,
    HamiltonianDirac,
    DegEven(String),
    DegGe(String, u64),
}

/// Closed, well-sorted first-order sentence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Sentence {
    Forall(String, VarSort, Box<Sentence>),
    Exists(String, VarSort, Box<Sentence>),
    Not(Box<Sentence>),
    And(Box<Sentence>, Box<Sentence>),
    Or(Box<Sentence>, Box<Sentence>),
    Implies(Box<Sentence>, Box<Sentence>),
    Atom(Atom),
}

impl Sentence {
    pub fn parse(text: &str) -> Result<Sentence, LogicError> {
        let tokens = tokenize(text)?;
        let mut parser = Parser {
            tokens: &tokens,
            pos: 0,
            scope: Vec::new(),
        };
        let sentence = parser.sentence()?;
        if parser.pos != parser.tokens.len() {
            return Err(LogicError::Syntax {
                pos: parser.here(),
                msg: "trailing input after sentence".to_string(),
            });
        }
        Ok(sentence)
    }

    /// Standard first-order satisfaction on one finite graph, quantifiers
    /// ranging over its vertices and edges.
    pub fn eval_on_graph(&self, graph: &FiniteGraph) -> bool {
        let mut env = Env::default();
        eval(self, graph, &mut env)
    }

    /// Decides `{n : G_n satisfies the sentence}` against the ultrafilter.
    /// Constant and explicitly periodic families get the exact truth set;
    /// parametric families are sampled (`sample_count` indices along the
    /// anchor progression past the family threshold) and decided only on
    /// unanimity.
    pub fn decide_ae(
        &self,
        family: &GraphFamily,
        filter: &AnchoredUltrafilter,
        sample_count: usize,
    ) -> Result<Verdict, LogicError> {
        if !family.is_hyperfinite() {
            return Err(LogicError::Family(FamilyError::InfiniteGraph));
        }
        let (threshold, period) = family.structure();
        match family {
            GraphFamily::Constant(_) | GraphFamily::ExplicitPeriodic { .. } => {
                let mut pattern = BTreeSet::new();
                for j in 0..period {
                    let n = threshold + j;
                    if self.eval_on_graph(&family.graph_at(n)?) {
                        pattern.insert(n % period);
                    }
                }
                let prefix = (0..threshold)
                    .map(|n| Ok(self.eval_on_graph(&family.graph_at(n)?)))
                    .collect::<Result<Vec<_>, LogicError>>()?;
                let truth_set = UpSet::new(threshold, period, pattern, prefix)
                    .expect("assembled truth sets are well formed");
                let holds = filter.decide(&truth_set);
                Ok(Verdict {
                    mode: VerdictMode::Decided(truth_set),
                    decision: Some(holds),
                })
            }
            _ => {
                let indices = filter.progression(period, threshold, sample_count.max(1));
                let mut results = Vec::with_capacity(indices.len());
                for &n in &indices {
                    results.push(self.eval_on_graph(&family.graph_at(n)?));
                }
                let decision = if results.iter().all(|&b| b) {
                    Some(true)
                } else if results.iter().all(|&b| !b) {
                    Some(false)
                } else {
                    None
                };
                Ok(Verdict {
                    mode: VerdictMode::Sampled { indices, results },
                    decision,
                })
            }
        }
    }
}

/// Truth verdict for a sentence over a family.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Verdict {
    pub mode: VerdictMode,
    /// `None` means inconclusive (mixed samples).
    pub decision: Option<bool>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum VerdictMode {
    /// Exact truth set; the decision is an ultrafilter membership fact.
    Decided(UpSet),
    /// Heuristic per-index sampling; never claims exactness.
    Sampled { indices: Vec<u64>, results: Vec<bool> },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Value {
    Vertex(usize),
    Edge(usize, usize),
}

#[derive(Default)]
struct Env {
    bindings: Vec<(String, Value)>,
}

impl Env {
    fn lookup(&self, name: &str) -> Value {
        self.bindings
            .iter()
            .rev()
            .find(|(n, _)| n == name)
            .map(|(_, v)| *v)
            .expect("parser guarantees closed sentences")
    }
}

fn eval(sentence: &Sentence, graph: &FiniteGraph, env: &mut Env) -> bool {
    match sentence {
        Sentence::Forall(name, sort, body) => domain(graph, *sort).all(|value| {
            env.bindings.push((name.clone(), value));
            let result = eval(body, graph, env);
            env.bindings.pop();
            result
        }),
        Sentence::Exists(name, sort, body) => domain(graph, *sort).any(|value| {
            env.bindings.push((name.clone(), value));
            let result = eval(body, graph, env);
            env.bindings.pop();
            result
        }),
        Sentence::Not(a) => !eval(a, graph, env),
        Sentence::And(a, b) => eval(a, graph, env) && eval(b, graph, env),
        Sentence::Or(a, b) => eval(a, graph, env) || eval(b, graph, env),
        Sentence::Implies(a, b) => !eval(a, graph, env) || eval(b, graph, env),
        Sentence::Atom(atom) => eval_atom(atom, graph, env),
    }
}

fn domain(graph: &FiniteGraph, sort: VarSort) -> Box<dyn Iterator<Item = Value> + '_> {
    match sort {
        VarSort::Vertex => Box::new((0..graph.vertex_count()).map(Value::Vertex)),
        VarSort::Edge => Box::new(graph.edges().map(|(u, v)| Value::Edge(u, v))),
    }
}

fn eval_atom(atom: &Atom, graph: &FiniteGraph, env: &Env) -> bool {
    match atom {
        Atom::In(x, b) => match (env.lookup(x), env.lookup(b)) {
            (Value::Vertex(v), Value::Edge(a, b)) => v == a || v == b,
            _ => unreachable!("sort checking"),
        },
        Atom::Eq(x, y) => env.lookup(x) == env.lookup(y),
        Atom::Adj(x, y) => match (env.lookup(x), env.lookup(y)) {
            (Value::Vertex(u), Value::Vertex(v)) => graph.has_edge(u, v),
            _ => unreachable!("sort checking"),
        },
        Atom::Connected => graph.is_connected(),
        Atom::Eulerian => graph.is_eulerian(),
        Atom::HamiltonianDirac => {
            graph.vertex_count() >= 3
                && graph
                    .hamiltonian_criteria()
                    .map(|c| c.dirac)
                    .unwrap_or(false)
        }
        Atom::DegEven(x) => match env.lookup(x) {
            Value::Vertex(v) => graph.degree(v).is_multiple_of(2),
            _ => unreachable!("sort checking"),
        },
        Atom::DegGe(x, t) => match env.lookup(x) {
            Value::Vertex(v) => graph.degree(v) as u64 >= *t,
            _ => unreachable!("sort checking"),
        },
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Token {
    Ident(String),
    Nat(u64),
    LParen,
    RParen,
    Comma,
    Colon,
    Equal,
    Arrow,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, LogicError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let b = bytes[pos];
        match b {
            _ if b.is_ascii_whitespace() => pos += 1,
            b'(' => {
                tokens.push((pos, Token::LParen));
                pos += 1;
            }
            b')' => {
                tokens.push((pos, Token::RParen));
                pos += 1;
            }
            b',' => {
                tokens.push((pos, Token::Comma));
                pos += 1;
            }
            b':' => {
                tokens.push((pos, Token::Colon));
                pos += 1;
            }
            b'=' => {
                tokens.push((pos, Token::Equal));
                pos += 1;
            }
            b'-' if bytes.get(pos + 1) == Some(&b'>') => {
                tokens.push((pos, Token::Arrow));
                pos += 2;
            }
            _ if b.is_ascii_digit() => {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let value = text[start..pos].parse().map_err(|_| LogicError::Syntax {
                    pos: start,
                    msg: "number out of range".to_string(),
                })?;
                tokens.push((start, Token::Nat(value)));
            }
            _ if b.is_ascii_alphabetic() || b == b'_' => {
                let start = pos;
                while pos < bytes.len()
                    && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_')
                {
                    pos += 1;
                }
                tokens.push((start, Token::Ident(text[start..pos].to_string())));
            }
            _ => {
                return Err(LogicError::Syntax {
                    pos,
                    msg: format!("unexpected character '{}'", char::from(b)),
                })
            }
        }
    }
    Ok(tokens)
}

const BUILTINS: &[&str] = &[
    "connected",
    "eulerian",
    "deg_even",
    "deg_ge",
    "hamiltonian_dirac",
    "adj",
];

struct Parser<'a> {
    tokens: &'a [(usize, Token)],
    pos: usize,
    scope: Vec<(String, VarSort)>,
}

impl<'a> Parser<'a> {
    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .or_else(|| self.tokens.last())
            .map(|(p, _)| *p)
            .unwrap_or(0)
    }

    fn syntax(&self, msg: impl Into<String>) -> LogicError {
        LogicError::Syntax {
            pos: self.here(),
            msg: msg.into(),
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn peek_ident(&self) -> Option<&str> {
        match self.peek() {
            Some(Token::Ident(s)) => Some(s),
            _ => None,
        }
    }

    fn bump(&mut self) -> Option<&'a Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t);
        self.pos += 1;
        t
    }

    fn expect(&mut self, token: Token, what: &str) -> Result<(), LogicError> {
        if self.peek() == Some(&token) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(format!("expected {what}")))
        }
    }

    fn ident(&mut self, what: &str) -> Result<(usize, String), LogicError> {
        match self.tokens.get(self.pos) {
            Some((p, Token::Ident(s))) => {
                self.pos += 1;
                Ok((*p, s.clone()))
            }
            _ => Err(self.syntax(format!("expected {what}"))),
        }
    }

    fn sentence(&mut self) -> Result<Sentence, LogicError> {
        match self.peek_ident() {
            Some("forall") | Some("exists") => self.quantifier(),
            _ => self.implies_expr(),
        }
    }

    fn quantifier(&mut self) -> Result<Sentence, LogicError> {
        let (_, word) = self.ident("quantifier")?;
        let (var_pos, name) = self.ident("a variable name")?;
        if matches!(name.as_str(), "forall" | "exists" | "and" | "or" | "not" | "in") {
            return Err(LogicError::Syntax {
                pos: var_pos,
                msg: format!("'{name}' is a keyword, not a variable"),
            });
        }
        self.expect(Token::Colon, "':' after the variable")?;
        let (sort_pos, sort_name) = self.ident("a sort (V or E)")?;
        let sort = match sort_name.as_str() {
            "V" => VarSort::Vertex,
            "E" => VarSort::Edge,
            _ => {
                return Err(LogicError::Syntax {
                    pos: sort_pos,
                    msg: format!("unknown sort '{sort_name}', expected V or E"),
                })
            }
        };
        self.scope.push((name.clone(), sort));
        let body = self.sentence()?;
        self.scope.pop();
        Ok(if word == "forall" {
            Sentence::Forall(name, sort, Box::new(body))
        } else {
            Sentence::Exists(name, sort, Box::new(body))
        })
    }

    fn implies_expr(&mut self) -> Result<Sentence, LogicError> {
        let lhs = self.or_expr()?;
        if self.peek() == Some(&Token::Arrow) {
            self.pos += 1;
            let rhs = self.implies_expr()?;
            Ok(Sentence::Implies(Box::new(lhs), Box::new(rhs)))
        } else {
            Ok(lhs)
        }
    }

    fn or_expr(&mut self) -> Result<Sentence, LogicError> {
        let mut acc = self.and_expr()?;
        while self.peek_ident() == Some("or") {
            self.pos += 1;
            let rhs = self.and_expr()?;
            acc = Sentence::Or(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn and_expr(&mut self) -> Result<Sentence, LogicError> {
        let mut acc = self.unary_expr()?;
        while self.peek_ident() == Some("and") {
            self.pos += 1;
            let rhs = self.unary_expr()?;
            acc = Sentence::And(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn unary_expr(&mut self) -> Result<Sentence, LogicError> {
        if self.peek_ident() == Some("not") {
            self.pos += 1;
            let inner = self.unary_expr()?;
            return Ok(Sentence::Not(Box::new(inner)));
        }
        if self.peek() == Some(&Token::LParen) {
            self.pos += 1;
            let inner = self.sentence()?;
            self.expect(Token::RParen, "')'")?;
            return Ok(inner);
        }
        self.atom()
    }

    fn var_sort(&self, name: &str, pos: usize) -> Result<VarSort, LogicError> {
        self.scope
            .iter()
            .rev()
            .find(|(n, _)| n == name)
            .map(|(_, s)| *s)
            .ok_or(LogicError::UnboundVariable {
                name: name.to_string(),
                pos,
            })
    }

    fn sorted_var(&mut self, expect: VarSort, what: &str) -> Result<String, LogicError> {
        let (pos, name) = self.ident(what)?;
        let sort = self.var_sort(&name, pos)?;
        if sort != expect {
            return Err(LogicError::Sort {
                pos,
                msg: format!("'{name}' has sort {sort}, expected {expect}"),
            });
        }
        Ok(name)
    }

    fn atom(&mut self) -> Result<Sentence, LogicError> {
        let (pos, name) = self.ident("an atom")?;
        if BUILTINS.contains(&name.as_str()) && self.peek() == Some(&Token::LParen) {
            self.pos += 1;
            let atom = match name.as_str() {
                "connected" => Atom::Connected,
                "eulerian" => Atom::Eulerian,
                "hamiltonian_dirac" => Atom::HamiltonianDirac,
                "deg_even" => Atom::DegEven(self.sorted_var(VarSort::Vertex, "a vertex variable")?),
                "deg_ge" => {
                    let x = self.sorted_var(VarSort::Vertex, "a vertex variable")?;
                    self.expect(Token::Comma, "','")?;
                    let t = match self.bump() {
                        Some(Token::Nat(t)) => *t,
                        _ => return Err(self.syntax("expected a natural-number threshold")),
                    };
                    Atom::DegGe(x, t)
                }
                "adj" => {
                    let x = self.sorted_var(VarSort::Vertex, "a vertex variable")?;
                    self.expect(Token::Comma, "','")?;
                    let y = self.sorted_var(VarSort::Vertex, "a vertex variable")?;
                    Atom::Adj(x, y)
                }
                _ => unreachable!("covered by BUILTINS"),
            };
            self.expect(Token::RParen, "')'")?;
            return Ok(Sentence::Atom(atom));
        }
        // variable-led atom: `x in b` or `x = y`
        let lhs_sort = self.var_sort(&name, pos)?;
        match self.bump() {
            Some(Token::Ident(word)) if word == "in" => {
                if lhs_sort != VarSort::Vertex {
                    return Err(LogicError::Sort {
                        pos,
                        msg: format!("'{name}' has sort {lhs_sort}, but 'in' needs a vertex on the left"),
                    });
                }
                let b = self.sorted_var(VarSort::Edge, "an edge variable")?;
                Ok(Sentence::Atom(Atom::In(name, b)))
            }
            Some(Token::Equal) => {
                let (rhs_pos, rhs) = self.ident("a variable")?;
                let rhs_sort = self.var_sort(&rhs, rhs_pos)?;
                if rhs_sort != lhs_sort {
                    return Err(LogicError::Sort {
                        pos: rhs_pos,
                        msg: format!(
                            "cannot equate '{name}' of sort {lhs_sort} with '{rhs}' of sort {rhs_sort}"
                        ),
                    });
                }
                Ok(Sentence::Atom(Atom::Eq(name, rhs)))
            }
            _ => Err(self.syntax("expected 'in' or '=' after a variable")),
        }
    }
}

impl fmt::Display for Sentence {
    /// Canonical printing: quantifier chains bare, every other compound
    /// subterm parenthesized. Parsing the output reproduces the tree.
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn wrapped(s: &Sentence, out: &mut fmt::Formatter<'_>) -> fmt::Result {
            match s {
                Sentence::Atom(_) => plain(s, out),
                _ => {
                    write!(out, "(")?;
                    plain(s, out)?;
                    write!(out, ")")
                }
            }
        }
        fn plain(s: &Sentence, out: &mut fmt::Formatter<'_>) -> fmt::Result {
            match s {
                Sentence::Forall(v, sort, body) | Sentence::Exists(v, sort, body) => {
                    let word = if matches!(s, Sentence::Forall(..)) {
                        "forall"
                    } else {
                        "exists"
                    };
                    write!(out, "{word} {v}:{sort} ")?;
                    match body.as_ref() {
                        Sentence::Forall(..) | Sentence::Exists(..) => plain(body, out),
                        _ => wrapped_or_atom_parens(body, out),
                    }
                }
                Sentence::Not(a) => {
                    write!(out, "not ")?;
                    wrapped(a, out)
                }
                Sentence::And(a, b) => {
                    wrapped(a, out)?;
                    write!(out, " and ")?;
                    wrapped(b, out)
                }
                Sentence::Or(a, b) => {
                    wrapped(a, out)?;
                    write!(out, " or ")?;
                    wrapped(b, out)
                }
                Sentence::Implies(a, b) => {
                    wrapped(a, out)?;
                    write!(out, " -> ")?;
                    wrapped(b, out)
                }
                Sentence::Atom(atom) => match atom {
                    Atom::In(x, b) => write!(out, "{x} in {b}"),
                    Atom::Eq(x, y) => write!(out, "{x} = {y}"),
                    Atom::Adj(x, y) => write!(out, "adj({x}, {y})"),
                    Atom::Connected => write!(out, "connected()"),
                    Atom::Eulerian => write!(out, "eulerian()"),
                    Atom::HamiltonianDirac => write!(out, "hamiltonian_dirac()"),
                    Atom::DegEven(x) => write!(out, "deg_even({x})"),
                    Atom::DegGe(x, t) => write!(out, "deg_ge({x}, {t})"),
                },
            }
        }
        // quantifier bodies always print inside parentheses
        fn wrapped_or_atom_parens(s: &Sentence, out: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(out, "(")?;
            plain(s, out)?;
            write!(out, ")")
        }
        plain(self, out)
    }
}

impl FromStr for Sentence {
    type Err = LogicError;

    fn from_str(text: &str) -> Result<Self, LogicError> {
        Sentence::parse(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::upalg::UppSeq;
    use alloc::vec;

    fn parse(text: &str) -> Sentence {
        Sentence::parse(text).unwrap()
    }

    #[test]
    fn parses_and_prints_canonical_forms() {
        let covered = parse("forall x:V exists b:E (x in b)");
        assert_eq!(covered.to_string(), "forall x:V exists b:E (x in b)");
        assert_eq!(parse(&covered.to_string()), covered);
        let euler_shape = parse("forall x:V (deg_even(x))");
        assert_eq!(euler_shape.to_string(), "forall x:V (deg_even(x))");
        // precedence: not > and > or > ->
        let prec = parse("not connected() and eulerian() or connected() -> eulerian()");
        assert_eq!(
            prec.to_string(),
            "(((not connected()) and eulerian()) or connected()) -> eulerian()"
        );
        assert_eq!(parse(&prec.to_string()), prec);
        // -> associates right
        let chain = parse("connected() -> eulerian() -> connected()");
        assert_eq!(
            chain.to_string(),
            "connected() -> (eulerian() -> connected())"
        );
    }

    #[test]
    fn binding_errors() {
        assert!(matches!(
            Sentence::parse("exists x:V (x in y)"),
            Err(LogicError::UnboundVariable { name, .. }) if name == "y"
        ));
        assert!(matches!(
            Sentence::parse("forall x:V forall b:E (x = b)"),
            Err(LogicError::Sort { .. })
        ));
        assert!(matches!(
            Sentence::parse("forall b:E (deg_even(b))"),
            Err(LogicError::Sort { .. })
        ));
        assert!(matches!(
            Sentence::parse("forall x:V (x in x)"),
            Err(LogicError::Sort { .. })
        ));
        assert!(matches!(
            Sentence::parse("forall x:Q (deg_even(x))"),
            Err(LogicError::Syntax { .. })
        ));
        assert!(matches!(
            Sentence::parse("forall x:V (deg_even(x)) junk"),
            Err(LogicError::Syntax { .. })
        ));
        // shadowing rebinds the inner variable
        let shadow = parse("forall x:V exists x:E exists y:V (y in x)");
        assert!(shadow.eval_on_graph(&FiniteGraph::cycle(3).unwrap()));
    }

    #[test]
    fn evaluation_on_fixed_graphs() {
        let covered = parse("forall x:V exists b:E (x in b)");
        assert!(covered.eval_on_graph(&FiniteGraph::cycle(5).unwrap()));
        // a single vertex has no edges at all
        assert!(!covered.eval_on_graph(&FiniteGraph::path(1).unwrap()));
        let all_even = parse("forall x:V (deg_even(x))");
        assert!(all_even.eval_on_graph(&FiniteGraph::complete(5).unwrap()));
        assert!(!all_even.eval_on_graph(&FiniteGraph::complete(4).unwrap()));
        // adjacency and equality atoms
        let some_edge = parse("exists x:V exists y:V (adj(x, y) and not x = y)");
        assert!(some_edge.eval_on_graph(&FiniteGraph::path(2).unwrap()));
        assert!(!some_edge.eval_on_graph(&FiniteGraph::edgeless(3).unwrap()));
        let dirac = parse("hamiltonian_dirac()");
        assert!(dirac.eval_on_graph(&FiniteGraph::complete(5).unwrap()));
        assert!(!dirac.eval_on_graph(&FiniteGraph::path(5).unwrap()));
        let deg3 = parse("forall x:V (deg_ge(x, 3))");
        assert!(deg3.eval_on_graph(&FiniteGraph::complete(4).unwrap()));
        assert!(!deg3.eval_on_graph(&FiniteGraph::cycle(4).unwrap()));
    }

    #[test]
    fn decisions_on_explicit_families() {
        let k5 = FiniteGraph::complete(5).unwrap();
        let k4 = FiniteGraph::complete(4).unwrap();
        let family = GraphFamily::explicit_periodic(vec![], vec![k5.clone(), k4]).unwrap();
        let all_even = parse("forall x:V (deg_even(x))");
        let v0 = all_even
            .decide_ae(&family, &AnchoredUltrafilter::new(0), 12)
            .unwrap();
        let v1 = all_even
            .decide_ae(&family, &AnchoredUltrafilter::new(1), 12)
            .unwrap();
        assert_eq!(v0.decision, Some(true));
        assert_eq!(v1.decision, Some(false));
        assert!(matches!(v0.mode, VerdictMode::Decided(_)));
        let eulerian = parse("eulerian()");
        let constant = GraphFamily::Constant(k5);
        let verdict = eulerian
            .decide_ae(&constant, &AnchoredUltrafilter::new(0), 12)
            .unwrap();
        assert_eq!(verdict.decision, Some(true));
    }

    #[test]
    fn sampling_on_parametric_families() {
        let family =
            GraphFamily::cycle_family(UppSeq::parse_poly_text("2*n+5").unwrap()).unwrap();
        let covered = parse("forall x:V exists b:E (x in b)");
        let verdict = covered
            .decide_ae(&family, &AnchoredUltrafilter::new(0), 12)
            .unwrap();
        match &verdict.mode {
            VerdictMode::Sampled { indices, results } => {
                assert_eq!(indices.len(), 12);
                assert!(results.iter().all(|&b| b));
            }
            VerdictMode::Decided(_) => panic!("parametric families are sampled"),
        }
        assert_eq!(verdict.decision, Some(true));
        assert!(matches!(
            covered.decide_ae(&GraphFamily::InfinitePath, &AnchoredUltrafilter::new(0), 4),
            Err(LogicError::Family(FamilyError::InfiniteGraph))
        ));
    }
}
