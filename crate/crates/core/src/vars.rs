use std::fmt;

use serde::{Deserialize, Serialize};

/// Role of a symbol in a construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VarKind {
    /// Form variable `x_i`.
    Form,
    /// Pencil variable `t`.
    Pencil,
    /// Coordinate parameter of the first primitive point (`a`, `b`, or `a_i`).
    Point,
    /// Unknown of the second primitive point (`c`, `d`, or `c_i`).
    Unknown,
    /// Shift parameter `c_j` of a quadruple step.
    ShiftC,
    /// Shift parameter `d_j` of a quadruple step.
    ShiftD,
}

/// A named variable. `(kind, index)` pairs are unique within an ambient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VarTag {
    pub kind: VarKind,
    pub index: usize,
}

impl VarTag {
    pub const fn new(kind: VarKind, index: usize) -> Self {
        VarTag { kind, index }
    }

    pub const fn form(i: usize) -> Self {
        Self::new(VarKind::Form, i)
    }
}

impl fmt::Display for VarTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use VarKind::*;
        match (self.kind, self.index) {
            (Form, i) => write!(f, "x{}", i + 1),
            (Pencil, _) => write!(f, "t"),
            (Point, 0) => write!(f, "a"),
            (Point, 1) => write!(f, "b"),
            (Point, i) => write!(f, "a{}", i + 1),
            (Unknown, 0) => write!(f, "c"),
            (Unknown, 1) => write!(f, "d"),
            (Unknown, i) => write!(f, "u{}", i + 1),
            (ShiftC, j) => write!(f, "c{}", j + 1),
            (ShiftD, j) => write!(f, "d{}", j + 1),
        }
    }
}

/// Ordered list of distinct variable tags naming a polynomial's ambient.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Ambient(Vec<VarTag>);

impl Ambient {
    pub fn new(tags: Vec<VarTag>) -> Self {
        for (i, t) in tags.iter().enumerate() {
            assert!(!tags[..i].contains(t), "duplicate variable {t}");
        }
        Ambient(tags)
    }

    pub fn forms(n: usize) -> Self {
        Ambient((0..n).map(VarTag::form).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn tags(&self) -> &[VarTag] {
        &self.0
    }

    pub fn index_of(&self, tag: VarTag) -> Option<usize> {
        self.0.iter().position(|t| *t == tag)
    }

    pub fn names(&self) -> Vec<String> {
        self.0.iter().map(|t| t.to_string()).collect()
    }

    pub fn index_of_name(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|t| t.to_string() == name)
    }
}
