//! Rational, extended rational and star-free expressions: AST, parsing,
//! printing, algebraic simplification, compilation to automata and the
//! state-elimination extraction of an expression from an automaton.

mod compile;
mod extract;
mod parse;
mod print;
mod simplify;

pub use compile::compile;
pub use extract::{extract, ExtractReport};
pub use parse::parse;
pub use simplify::simplify;

use crate::error::{Error, Result};

/// Expression dialect. `Rational` is the classical union/concatenation/star
/// fragment; `Extended` adds intersection, complement and morphic images;
/// `StarFree` is the extended fragment without star and morphic images.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dialect {
    Rational,
    Extended,
    StarFree,
}

impl Dialect {
    pub fn name(self) -> &'static str {
        match self {
            Dialect::Rational => "rational",
            Dialect::Extended => "extended",
            Dialect::StarFree => "star-free",
        }
    }
}

impl std::str::FromStr for Dialect {
    type Err = Error;
    fn from_str(s: &str) -> Result<Dialect> {
        match s {
            "rational" => Ok(Dialect::Rational),
            "extended" => Ok(Dialect::Extended),
            "star-free" | "starfree" => Ok(Dialect::StarFree),
            other => Err(Error::input(format!("unknown dialect {other:?}"))),
        }
    }
}

/// One node of an expression tree. Letters are symbol names, resolved
/// against an alphabet at compile time. `Morph` carries the letter images of
/// a morphism (an empty image list is ε).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum RegexNode {
    Empty,
    Epsilon,
    Letter(String),
    Union(Box<RegexNode>, Box<RegexNode>),
    Concat(Box<RegexNode>, Box<RegexNode>),
    Star(Box<RegexNode>),
    Intersect(Box<RegexNode>, Box<RegexNode>),
    Complement(Box<RegexNode>),
    Morph(Vec<(String, Vec<String>)>, Box<RegexNode>),
}

impl RegexNode {
    pub fn node_count(&self) -> usize {
        match self {
            RegexNode::Empty | RegexNode::Epsilon | RegexNode::Letter(_) => 1,
            RegexNode::Union(l, r) | RegexNode::Concat(l, r) | RegexNode::Intersect(l, r) => {
                1 + l.node_count() + r.node_count()
            }
            RegexNode::Star(e) | RegexNode::Complement(e) | RegexNode::Morph(_, e) => {
                1 + e.node_count()
            }
        }
    }

    /// First operator forbidden by `dialect`, if any.
    fn dialect_violation(&self, dialect: Dialect) -> Option<&'static str> {
        let forbidden = match (self, dialect) {
            (RegexNode::Intersect(..), Dialect::Rational) => Some("intersection (&)"),
            (RegexNode::Complement(..), Dialect::Rational) => Some("complement (~)"),
            (RegexNode::Morph(..), Dialect::Rational) => Some("morphic image (map)"),
            (RegexNode::Star(..), Dialect::StarFree) => Some("star (*)"),
            (RegexNode::Morph(..), Dialect::StarFree) => Some("morphic image (map)"),
            _ => None,
        };
        if forbidden.is_some() {
            return forbidden;
        }
        match self {
            RegexNode::Union(l, r) | RegexNode::Concat(l, r) | RegexNode::Intersect(l, r) => l
                .dialect_violation(dialect)
                .or_else(|| r.dialect_violation(dialect)),
            RegexNode::Star(e) | RegexNode::Complement(e) | RegexNode::Morph(_, e) => {
                e.dialect_violation(dialect)
            }
            _ => None,
        }
    }

    /// Structural ε-membership. `None` when the tree contains a morphic
    /// image, whose ε-membership is not structural.
    pub fn nullable(&self) -> Option<bool> {
        Some(match self {
            RegexNode::Empty | RegexNode::Letter(_) => false,
            RegexNode::Epsilon | RegexNode::Star(_) => true,
            RegexNode::Union(l, r) => l.nullable()? || r.nullable()?,
            RegexNode::Concat(l, r) | RegexNode::Intersect(l, r) => {
                l.nullable()? && r.nullable()?
            }
            RegexNode::Complement(e) => !e.nullable()?,
            RegexNode::Morph(..) => return None,
        })
    }
}

/// An expression tree together with its dialect tag. Construction validates
/// that the tree stays inside the dialect.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Regex {
    node: RegexNode,
    dialect: Dialect,
}

impl Regex {
    pub fn new(node: RegexNode, dialect: Dialect) -> Result<Regex> {
        if let Some(op) = node.dialect_violation(dialect) {
            return Err(Error::input(format!(
                "dialect `{}` forbids {op}",
                dialect.name()
            )));
        }
        Ok(Regex { node, dialect })
    }

    pub fn rational(node: RegexNode) -> Result<Regex> {
        Regex::new(node, Dialect::Rational)
    }

    pub fn extended(node: RegexNode) -> Regex {
        Regex {
            node,
            dialect: Dialect::Extended,
        }
    }

    pub fn star_free(node: RegexNode) -> Result<Regex> {
        Regex::new(node, Dialect::StarFree)
    }

    pub fn node(&self) -> &RegexNode {
        &self.node
    }

    pub fn into_node(self) -> RegexNode {
        self.node
    }

    pub fn dialect(&self) -> Dialect {
        self.dialect
    }

    pub fn node_count(&self) -> usize {
        self.node.node_count()
    }

    pub fn print(&self) -> String {
        print::print(&self.node)
    }
}

impl std::fmt::Display for Regex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.print())
    }
}
