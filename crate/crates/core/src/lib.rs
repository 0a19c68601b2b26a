// SPDX-License-Identifier: Apache-2.0

//! A small arithmetic expression language with implicit and explicit sharing.
//!
//! Programs are written once, generically, against the builder traits in
//! [`expr`] and then run under any interpreter: as a value ([`Eval`]), a
//! constructor count ([`Size`]), text ([`Print`], [`LetPrint`]), a plain tree
//! ([`Tree`]) or a hash-consed DAG ([`DagBuilder`]). The DAG builder finds
//! every common subexpression; the `let_` form lets the program say which
//! ones are shared, which can make DAG construction exponentially faster.
//!
//! ```
//! use expdag::*;
//!
//! let (root, dag) = build_dag(&mul_shared::<DagBuilder>(15, var::<DagBuilder>("i")));
//! assert_eq!(dag.len(), 7);
//! assert_eq!(eval_dag(&dag, root, &Env::from_pairs([("i", 2)])), Ok(30));
//! ```

pub mod dag;
pub mod expr;
pub mod generators;
pub mod interp;
pub mod netlist;
pub mod syntax;

pub use dag::{build_dag, build_forest, BiMap, Build, BuildSession, Dag, DagBuilder, Node, NodeId};
pub use expr::{var, Dsl, EmptyName, Exp, ExpArith, ExpLet, ExprTree, Name, Tree};
pub use generators::{mul, mul_shared, sklansky, sklansky_shared};
pub use interp::{
    eval, print_flat, print_let, size, Env, Eval, EvalError, LetDoc, LetPrint, Parens, Print,
    Reader, Rendered, Size,
};
pub use netlist::{emit_netlist, emit_threeaddr, eval_dag};
pub use syntax::{elaborate, parse, ParseError, ParseErrorKind, SurfaceAst};

// The guide's code blocks run as doctests, one module per chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/interpreters.md")]
    mod interpreters {}
    #[doc = include_str!("../../../book/src/dag.md")]
    mod dag {}
    #[doc = include_str!("../../../book/src/sharing.md")]
    mod sharing {}
    #[doc = include_str!("../../../book/src/syntax.md")]
    mod syntax {}
    #[doc = include_str!("../../../book/src/backends.md")]
    mod backends {}
}
