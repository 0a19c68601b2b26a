// SPDX-License-Identifier: Apache-2.0

//! Hash-consed DAGs.
//!
//! A [`Dag`] stores each distinct [`Node`] exactly once. Ids are allocated in
//! increasing order as nodes are first built, and a node can only be built
//! after its children, so every child id is smaller than its parent's: the
//! node list is already a topologically sorted netlist.

mod bimap;
mod build;
mod node;

use std::fmt;

pub use bimap::BiMap;
pub use build::{build_dag, build_forest, Build, BuildSession, DagBuilder};
pub use node::{Node, NodeId};

/// A frozen, maximally shared DAG.
///
/// Two DAGs are equal when their id-to-node associations are equal.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Dag {
    nodes: BiMap<Node>,
}

impl Dag {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn get(&self, id: NodeId) -> Option<&Node> {
        self.nodes.get(id.index())
    }

    /// # Panics
    ///
    /// Panics if `id` does not belong to this DAG.
    pub fn node(&self, id: NodeId) -> &Node {
        self.nodes.lookup_val(id.index())
    }

    pub fn lookup(&self, node: &Node) -> Option<NodeId> {
        self.nodes.lookup_key(node).map(NodeId::from_index)
    }

    pub fn contains(&self, id: NodeId) -> bool {
        id.index() < self.len()
    }

    /// Nodes in id order, which is also a topological order.
    pub fn iter(&self) -> impl ExactSizeIterator<Item = (NodeId, &Node)> {
        self.nodes.iter().map(|(k, n)| (NodeId::from_index(k), n))
    }

    pub fn bimap(&self) -> &BiMap<Node> {
        &self.nodes
    }

    /// `(root,DAG BiMap[...])`, the layout used for single-rooted programs.
    pub fn display_rooted(&self, root: NodeId) -> String {
        format!("({root},{self})")
    }

    /// `([r0,r1,...],DAG BiMap[...])`, the layout used for forests.
    pub fn display_forest(&self, roots: &[NodeId]) -> String {
        let roots: Vec<String> = roots.iter().map(NodeId::to_string).collect();
        format!("([{}],{self})", roots.join(","))
    }
}

impl fmt::Display for Dag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DAG {}", self.nodes)
    }
}

impl fmt::Debug for Dag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
