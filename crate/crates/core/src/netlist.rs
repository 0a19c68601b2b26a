// SPDX-License-Identifier: Apache-2.0

//! Backends over a frozen [`Dag`].
//!
//! Both text formats list one line per node in id order; since ids are
//! topologically sorted, every operand is defined on an earlier line.
//!
//! Netlist:
//!
//! ```text
//! n0 = input i1
//! n1 = add n0 n0
//! n2 = add n1 n1
//! out n2
//! ```
//!
//! Three-address code, one virtual register per node:
//!
//! ```text
//! LOADV r0, i1
//! ADD r1, r0, r0
//! ADD r2, r1, r1
//! RET r2
//! ```

use crate::dag::{Dag, Node, NodeId};
use crate::interp::{Env, EvalError};

/// Evaluates the DAG at `root`, computing each reachable node once.
///
/// Nodes not reachable from `root` are skipped, so variables used only by
/// other roots of a forest need not be bound.
pub fn eval_dag(dag: &Dag, root: NodeId, env: &Env) -> Result<i64, EvalError> {
    let out_of_range = |id: NodeId| EvalError::NodeOutOfRange {
        id: id.index(),
        len: dag.len(),
    };
    if !dag.contains(root) {
        return Err(out_of_range(root));
    }
    let upto = root.index() + 1;
    let mut live = vec![false; upto];
    live[root.index()] = true;
    for k in (0..upto).rev() {
        if !live[k] {
            continue;
        }
        for child in dag.node(NodeId::from_index(k)).children() {
            // Children precede parents in a well-formed DAG.
            if child.index() >= k {
                return Err(out_of_range(child));
            }
            live[child.index()] = true;
        }
    }

    let mut values = vec![0i64; upto];
    for (k, node) in dag.iter().take(upto) {
        if !live[k.index()] {
            continue;
        }
        let v = |id: NodeId| values[id.index()];
        values[k.index()] = match node {
            Node::Const(c) => *c,
            Node::Var(name) => env
                .lookup(name)
                .ok_or_else(|| EvalError::UnboundVariable(name.clone()))?,
            Node::Add(l, r) => v(*l).wrapping_add(v(*r)),
            Node::Neg(x) => v(*x).wrapping_neg(),
            Node::Sub(l, r) => v(*l).wrapping_sub(v(*r)),
        };
    }
    Ok(values[root.index()])
}

/// Emits the netlist: every node, then one `out` line per root.
pub fn emit_netlist(dag: &Dag, roots: &[NodeId]) -> String {
    let nodes = dag.iter().map(|(k, node)| match node {
        Node::Const(c) => format!("n{k} = const {c}"),
        Node::Var(name) => format!("n{k} = input {name}"),
        Node::Add(l, r) => format!("n{k} = add n{l} n{r}"),
        Node::Neg(x) => format!("n{k} = neg n{x}"),
        Node::Sub(l, r) => format!("n{k} = sub n{l} n{r}"),
    });
    let outs = roots.iter().map(|r| format!("out n{r}"));
    nodes.chain(outs).collect::<Vec<_>>().join("\n")
}

/// Emits naive three-address code returning `root`.
pub fn emit_threeaddr(dag: &Dag, root: NodeId) -> String {
    let body = dag.iter().map(|(k, node)| match node {
        Node::Const(c) => format!("LOADI r{k}, {c}"),
        Node::Var(name) => format!("LOADV r{k}, {name}"),
        Node::Add(l, r) => format!("ADD r{k}, r{l}, r{r}"),
        Node::Neg(x) => format!("NEG r{k}, r{x}"),
        Node::Sub(l, r) => format!("SUB r{k}, r{l}, r{r}"),
    });
    body.chain(std::iter::once(format!("RET r{root}")))
        .collect::<Vec<_>>()
        .join("\n")
}
