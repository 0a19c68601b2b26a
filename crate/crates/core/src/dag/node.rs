// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use crate::expr::Name;

/// A dense index into a [`Dag`](super::Dag).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub(crate) u32);

impl NodeId {
    pub const fn new(index: u32) -> Self {
        NodeId(index)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(index: usize) -> Self {
        NodeId(u32::try_from(index).expect("DAG exceeds u32::MAX nodes"))
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One operation of the DAG. Children are referenced by id, so comparing or
/// hashing a node never recurses.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Node {
    Const(i64),
    Var(Name),
    Add(NodeId, NodeId),
    Neg(NodeId),
    Sub(NodeId, NodeId),
}

impl Node {
    pub fn children(&self) -> impl Iterator<Item = NodeId> {
        let (a, b) = match *self {
            Node::Const(_) | Node::Var(_) => (None, None),
            Node::Neg(x) => (Some(x), None),
            Node::Add(l, r) | Node::Sub(l, r) => (Some(l), Some(r)),
        };
        a.into_iter().chain(b)
    }
}

/// Constructor-style rendering: `NConst 5`, `NVar "i1"`, `NAdd 0 1`.
impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Const(c) if *c < 0 => write!(f, "NConst ({c})"),
            Node::Const(c) => write!(f, "NConst {c}"),
            Node::Var(name) => write!(f, "NVar {name:?}"),
            Node::Add(l, r) => write!(f, "NAdd {l} {r}"),
            Node::Neg(x) => write!(f, "NNeg {x}"),
            Node::Sub(l, r) => write!(f, "NSub {l} {r}"),
        }
    }
}
