// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::sync::Arc;

use rustc_hash::FxHashMap;

use super::{Dag, Node, NodeId};
use crate::expr::{Exp, ExpArith, ExpLet, Name};

/// The mutable state of one DAG construction.
#[derive(Debug, Default)]
pub struct BuildSession {
    dag: Dag,
    // Side index for variables, looked up by borrowed name.
    vars: FxHashMap<Name, NodeId>,
}

impl BuildSession {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the id of `node`, adding it first if no equal node exists.
    pub fn hashcons(&mut self, node: Node) -> NodeId {
        debug_assert!(
            node.children().all(|c| self.dag.contains(c)),
            "hashcons of {node} before its children"
        );
        match self.dag.nodes.lookup_key(&node) {
            Some(k) => NodeId::from_index(k),
            None => NodeId::from_index(self.dag.nodes.insert(node)),
        }
    }

    /// Same as `hashcons(Node::Var(name.clone()))` without cloning the name
    /// when the variable is already present.
    pub fn hashcons_var(&mut self, name: &Name) -> NodeId {
        if let Some(&id) = self.vars.get(name.as_str()) {
            return id;
        }
        let id = self.hashcons(Node::Var(name.clone()));
        self.vars.insert(name.clone(), id);
        id
    }

    pub fn dag(&self) -> &Dag {
        &self.dag
    }

    pub fn finish(self) -> Dag {
        self.dag
    }
}

/// A program under [`DagBuilder`]: a deferred computation that, run against
/// a session, yields the program's root id.
///
/// Cloning a `Build` copies the computation, not its result. Each copy that
/// is run traverses its subterm again; hash-consing then finds the nodes
/// already present. Only [`ExpLet::let_`] runs a computation once and reuses
/// the resulting id.
#[derive(Clone)]
pub struct Build(Arc<dyn Fn(&mut BuildSession) -> NodeId + Send + Sync>);

impl Build {
    fn new(f: impl Fn(&mut BuildSession) -> NodeId + Send + Sync + 'static) -> Self {
        Build(Arc::new(f))
    }

    pub fn run(&self, session: &mut BuildSession) -> NodeId {
        (self.0)(session)
    }
}

impl fmt::Debug for Build {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Build(..)")
    }
}

/// Interprets a program as a hash-consed DAG.
#[derive(Debug, Clone, Copy)]
pub struct DagBuilder;

pub fn build_dag(program: &Build) -> (NodeId, Dag) {
    let mut session = BuildSession::new();
    let root = program.run(&mut session);
    (root, session.finish())
}

/// Builds several programs into one DAG, in order, sharing nodes across them.
pub fn build_forest(programs: &[Build]) -> (Vec<NodeId>, Dag) {
    let mut session = BuildSession::new();
    let roots = programs.iter().map(|p| p.run(&mut session)).collect();
    (roots, session.finish())
}

impl Exp for DagBuilder {
    type Repr = Build;

    fn constant(value: i64) -> Build {
        Build::new(move |s| s.hashcons(Node::Const(value)))
    }

    fn variable(name: Name) -> Build {
        Build::new(move |s| s.hashcons_var(&name))
    }

    fn add(left: Build, right: Build) -> Build {
        Build::new(move |s| {
            let l = left.run(s);
            let r = right.run(s);
            s.hashcons(Node::Add(l, r))
        })
    }
}

impl ExpArith for DagBuilder {
    fn neg(operand: Build) -> Build {
        Build::new(move |s| {
            let x = operand.run(s);
            s.hashcons(Node::Neg(x))
        })
    }

    fn sub(left: Build, right: Build) -> Build {
        Build::new(move |s| {
            let l = left.run(s);
            let r = right.run(s);
            s.hashcons(Node::Sub(l, r))
        })
    }
}

impl ExpLet for DagBuilder {
    fn let_<F>(bound: Build, body: F) -> Build
    where
        F: Fn(Build) -> Build + Send + Sync + 'static,
    {
        Build::new(move |s| {
            let id = bound.run(s);
            body(Build::new(move |_| id)).run(s)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::var;

    fn nvar(n: &str) -> Node {
        Node::Var(Name::new(n).unwrap())
    }

    #[test]
    fn hashcons_is_idempotent() {
        let mut s = BuildSession::new();
        assert_eq!(s.hashcons(nvar("i1")), NodeId(0));
        assert_eq!(s.hashcons(nvar("i1")), NodeId(0));
        assert_eq!(s.dag().len(), 1);
        assert_eq!(s.hashcons(Node::Add(NodeId(0), NodeId(0))), NodeId(1));
        assert_eq!(s.dag().len(), 2);
        let dag = s.finish();
        assert_eq!(dag.node(NodeId(0)), &nvar("i1"));
        assert_eq!(
            dag.lookup(&Node::Add(NodeId(0), NodeId(0))),
            Some(NodeId(1))
        );
    }

    #[test]
    fn constants_are_shared() {
        let p = DagBuilder::add(DagBuilder::constant(5), DagBuilder::constant(5));
        let (root, dag) = build_dag(&p);
        assert_eq!(
            dag.display_rooted(root),
            "(1,DAG BiMap[(0,NConst 5),(1,NAdd 0 0)])"
        );
    }

    #[test]
    fn let_runs_bound_once() {
        let x = var::<DagBuilder>("i1");
        let p = DagBuilder::let_(DagBuilder::add(x.clone(), x), |y| {
            DagBuilder::add(y.clone(), y)
        });
        let (root, dag) = build_dag(&p);
        assert_eq!(
            dag.display_rooted(root),
            "(2,DAG BiMap[(0,NVar \"i1\"),(1,NAdd 0 0),(2,NAdd 1 1)])"
        );
    }

    #[test]
    fn forest_shares_across_roots() {
        let x = var::<DagBuilder>("x");
        let p = DagBuilder::sub(DagBuilder::neg(x.clone()), x);
        let (one_root, one) = build_dag(&p);
        let (roots, two) = build_forest(&[p.clone(), p]);
        assert_eq!(roots, [one_root, one_root]);
        assert_eq!(one, two);
        assert_eq!(
            two.display_forest(&roots),
            "([2,2],DAG BiMap[(0,NVar \"x\"),(1,NNeg 0),(2,NSub 1 0)])"
        );
        let (roots, empty) = build_forest(&[]);
        assert!(roots.is_empty());
        assert!(empty.is_empty());
        assert_eq!(empty.display_forest(&roots), "([],DAG BiMap[])");
    }
}
