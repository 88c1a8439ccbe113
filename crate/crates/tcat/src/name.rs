//! Structured cell identifiers.
//!
//! Derived constructions (slices, products, integrations, nerves) name their
//! cells by tagged tuples of the constituent names. Two constructions that the
//! literature identifies "canonically" then agree cell-for-cell, and equality
//! of the results is plain equality of tables. The derived `Ord` gives every
//! name a stable total order, which fixes iteration and print order everywhere.

use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Name {
    /// A user-written identifier, `[A-Za-z0-9_]+`.
    Atom(String),
    /// A small integer component (simplex levels, vertex indices, ...).
    Num(i64),
    /// A tagged tuple, e.g. `ob(a, p)` for a slice object.
    Node(&'static str, Vec<Name>),
}

impl Name {
    pub fn atom(s: impl Into<String>) -> Name {
        Name::Atom(s.into())
    }

    pub fn node(tag: &'static str, parts: Vec<Name>) -> Name {
        Name::Node(tag, parts)
    }

    pub fn pair(tag: &'static str, a: Name, b: Name) -> Name {
        Name::Node(tag, vec![a, b])
    }

    pub fn num(n: i64) -> Name {
        Name::Num(n)
    }

    pub fn as_atom(&self) -> Option<&str> {
        match self {
            Name::Atom(s) => Some(s),
            _ => None,
        }
    }
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Name::Atom(s) => write!(f, "{s}"),
            Name::Num(n) => write!(f, "{n}"),
            Name::Node(tag, parts) => {
                write!(f, "{tag}(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl fmt::Debug for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<&str> for Name {
    fn from(s: &str) -> Name {
        Name::atom(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_total_and_stable() {
        let mut v = vec![
            Name::pair("ob", "b".into(), "p".into()),
            Name::atom("a"),
            Name::num(3),
            Name::atom("a"),
        ];
        v.sort();
        let w = v.clone();
        v.sort();
        assert_eq!(v, w);
    }

    #[test]
    fn display_round_shape() {
        let n = Name::node("tr", vec!["f".into(), Name::num(2)]);
        assert_eq!(n.to_string(), "tr(f,2)");
    }
}
