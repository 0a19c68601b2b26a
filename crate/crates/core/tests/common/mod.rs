// SPDX-License-Identifier: Apache-2.0

//! Test-side program generator and oracles.
//!
//! Nothing here goes through the crate's interpreters except `interpret`,
//! which replays a generated program into one.

#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::Arc;

use expdag::{Dag, Dsl, Env, ExprTree, Name};
use proptest::prelude::*;

pub const NAMES: [&str; 6] = ["a", "b", "c", "i1", "v0", "v1"];

/// A generated program. `Bound(level)` refers to the `level`-th enclosing
/// `Let`, counting from the outermost.
#[derive(Clone, Debug)]
pub enum Prog {
    Const(i64),
    Var(usize),
    Bound(usize),
    Add(Arc<Prog>, Arc<Prog>),
    Sub(Arc<Prog>, Arc<Prog>),
    Neg(Arc<Prog>),
    Let(Arc<Prog>, Arc<Prog>),
}

use Prog::*;

fn arc(p: Prog) -> Arc<Prog> {
    Arc::new(p)
}

/// Depth-limited random programs, with bound-variable references made valid.
pub fn prog_strategy(depth: u32) -> impl Strategy<Value = Prog> {
    let leaf = prop_oneof![
        3 => any::<i64>().prop_map(Const),
        2 => (-20i64..20).prop_map(Const),
        5 => (0..NAMES.len()).prop_map(Var),
        5 => (0usize..8).prop_map(Bound),
    ];
    leaf.prop_recursive(depth, 256, 2, |inner| {
        prop_oneof![
            3 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Add(arc(a), arc(b))),
            2 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Sub(arc(a), arc(b))),
            1 => inner.clone().prop_map(|a| Neg(arc(a))),
            3 => (inner.clone(), inner).prop_map(|(a, b)| Let(arc(a), arc(b))),
        ]
    })
    .prop_map(|p| normalize(&p, 0))
}

/// Programs without `Let`.
pub fn let_free_strategy(depth: u32) -> impl Strategy<Value = Prog> {
    let leaf = prop_oneof![
        1 => any::<i64>().prop_map(Const),
        1 => (-20i64..20).prop_map(Const),
        3 => (0..NAMES.len()).prop_map(Var),
    ];
    leaf.prop_recursive(depth, 256, 2, |inner| {
        prop_oneof![
            3 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Add(arc(a), arc(b))),
            2 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Sub(arc(a), arc(b))),
            1 => inner.prop_map(|a| Neg(arc(a))),
        ]
    })
}

pub fn env_strategy() -> impl Strategy<Value = Env> {
    proptest::collection::vec(any::<i64>(), NAMES.len())
        .prop_map(|vals| Env::from_pairs(NAMES.iter().copied().zip(vals)))
}

/// Rewrites out-of-scope `Bound` references: modulo the scope depth, or to a
/// constant at top level.
pub fn normalize(p: &Prog, depth: usize) -> Prog {
    match p {
        Const(c) => Const(*c),
        Var(v) => Var(*v),
        Bound(k) if depth == 0 => Const(*k as i64),
        Bound(k) => Bound(k % depth),
        Add(a, b) => Add(arc(normalize(a, depth)), arc(normalize(b, depth))),
        Sub(a, b) => Sub(arc(normalize(a, depth)), arc(normalize(b, depth))),
        Neg(a) => Neg(arc(normalize(a, depth))),
        Let(e, b) => Let(arc(normalize(e, depth)), arc(normalize(b, depth + 1))),
    }
}

pub fn is_let_free(p: &Prog) -> bool {
    match p {
        Const(_) | Var(_) => true,
        Bound(_) | Let(..) => false,
        Add(a, b) | Sub(a, b) => is_let_free(a) && is_let_free(b),
        Neg(a) => is_let_free(a),
    }
}

/// Binds every subexpression with `Let` before it is used. Operands stay in
/// left-to-right order, so DAG construction visits nodes in the same order.
pub fn annotate(p: &Prog) -> Prog {
    annotate_in(p, &[], 0)
}

// `levels[k]` is the new level of original binder `k`; `depth` is the number
// of binders in scope in the annotated program.
fn annotate_in(p: &Prog, levels: &[usize], depth: usize) -> Prog {
    let here = || arc(Bound(depth));
    match p {
        Const(_) | Var(_) => Let(arc(p.clone()), here()),
        Bound(k) => Let(arc(Bound(levels[*k])), here()),
        Add(a, b) | Sub(a, b) => {
            let (l, r) = (arc(Bound(depth)), arc(Bound(depth + 1)));
            let op = if matches!(p, Add(..)) {
                Add(l, r)
            } else {
                Sub(l, r)
            };
            Let(
                arc(annotate_in(a, levels, depth)),
                arc(Let(arc(annotate_in(b, levels, depth + 1)), arc(op))),
            )
        }
        Neg(a) => Let(arc(annotate_in(a, levels, depth)), arc(Neg(here()))),
        Let(e, b) => {
            let mut inner = levels.to_vec();
            inner.push(depth);
            Let(
                arc(annotate_in(e, levels, depth)),
                arc(annotate_in(b, &inner, depth + 1)),
            )
        }
    }
}

/// Replays a generated program into interpreter `I`.
pub fn interpret<I: Dsl>(p: &Arc<Prog>) -> I::Repr {
    interpret_in::<I>(p, &Vec::new())
}

fn interpret_in<I: Dsl>(p: &Arc<Prog>, scope: &Vec<I::Repr>) -> I::Repr {
    match &**p {
        Const(c) => I::constant(*c),
        Var(v) => I::variable(Name::new(NAMES[*v]).unwrap()),
        Bound(k) => scope[*k].clone(),
        Add(a, b) => I::add(interpret_in::<I>(a, scope), interpret_in::<I>(b, scope)),
        Sub(a, b) => I::sub(interpret_in::<I>(a, scope), interpret_in::<I>(b, scope)),
        Neg(a) => I::neg(interpret_in::<I>(a, scope)),
        Let(e, b) => {
            let body = Arc::clone(b);
            let scope = scope.clone();
            I::let_(interpret_in::<I>(e, &scope), move |x| {
                let mut inner = scope.clone();
                inner.push(x);
                interpret_in::<I>(&body, &inner)
            })
        }
    }
}

/// Direct evaluation of a generated program.
pub fn oracle_eval(p: &Prog, env: &Env) -> i64 {
    fn go(p: &Prog, env: &Env, scope: &mut Vec<i64>) -> i64 {
        match p {
            Const(c) => *c,
            Var(v) => env
                .lookup(NAMES[*v])
                .expect("generated envs bind every name"),
            Bound(k) => scope[*k],
            Add(a, b) => go(a, env, scope).wrapping_add(go(b, env, scope)),
            Sub(a, b) => go(a, env, scope).wrapping_sub(go(b, env, scope)),
            Neg(a) => go(a, env, scope).wrapping_neg(),
            Let(e, b) => {
                let v = go(e, env, scope);
                scope.push(v);
                let r = go(b, env, scope);
                scope.pop();
                r
            }
        }
    }
    go(p, env, &mut Vec::new())
}

/// Direct recursive evaluation of an expression tree.
pub fn tree_eval(t: &ExprTree, env: &Env) -> Option<i64> {
    Some(match t {
        ExprTree::Constant(c) => *c,
        ExprTree::Variable(v) => env.lookup(v)?,
        ExprTree::Add(a, b) => tree_eval(a, env)?.wrapping_add(tree_eval(b, env)?),
        ExprTree::Sub(a, b) => tree_eval(a, env)?.wrapping_sub(tree_eval(b, env)?),
        ExprTree::Neg(a) => tree_eval(a, env)?.wrapping_neg(),
    })
}

/// Every child id is smaller than its parent's.
pub fn is_topological(dag: &Dag) -> bool {
    dag.iter().all(|(id, node)| node.children().all(|c| c < id))
}

pub fn has_duplicate_nodes(dag: &Dag) -> bool {
    let mut seen = HashSet::new();
    !dag.iter().all(|(_, node)| seen.insert(node.clone()))
}

/// Number of distinct subtrees: the size of a maximally shared DAG, computed
/// without hash-consing ids.
pub fn distinct_subtrees(t: &ExprTree) -> usize {
    fn go<'a>(t: &'a ExprTree, seen: &mut HashSet<&'a ExprTree>) {
        if !seen.insert(t) {
            return;
        }
        match t {
            ExprTree::Constant(_) | ExprTree::Variable(_) => {}
            ExprTree::Neg(a) => go(a, seen),
            ExprTree::Add(a, b) | ExprTree::Sub(a, b) => {
                go(a, seen);
                go(b, seen);
            }
        }
    }
    let mut seen = HashSet::new();
    go(t, &mut seen);
    seen.len()
}

/// Every operand in netlist text names a node defined on an earlier line.
pub fn netlist_is_self_sorted(text: &str) -> bool {
    let mut defined = HashSet::new();
    for line in text.lines() {
        let (target, operands): (Option<&str>, Vec<&str>) = match line.split_once(" = ") {
            Some((lhs, rhs)) => {
                let mut words = rhs.split(' ');
                let op = words.next().unwrap_or("");
                let refs = match op {
                    "add" | "sub" | "neg" => words.collect(),
                    _ => Vec::new(),
                };
                (Some(lhs), refs)
            }
            None => (None, line.strip_prefix("out ").into_iter().collect()),
        };
        if !operands.iter().all(|o| defined.contains(*o)) {
            return false;
        }
        if let Some(t) = target {
            defined.insert(t.to_owned());
        }
    }
    true
}
