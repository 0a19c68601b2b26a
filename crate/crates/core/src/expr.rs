// SPDX-License-Identifier: Apache-2.0

//! The builder interface of the expression language.
//!
//! Programs are written against the [`Exp`] family of traits rather than a
//! concrete syntax tree. Each interpreter is a marker type implementing the
//! traits with its own carrier, [`Exp::Repr`]. A program is therefore any
//! function generic over the interpreter:
//!
//! ```
//! use expdag::{var, Exp, Eval, Env, Tree, ExprTree};
//!
//! fn exp_a<I: Exp>() -> I::Repr {
//!     I::add(I::constant(10), var::<I>("i1"))
//! }
//!
//! assert_eq!(exp_a::<Tree>(), ExprTree::add(ExprTree::Constant(10), ExprTree::var("i1")));
//! assert_eq!(Eval::run(&exp_a::<Eval>(), &Env::from_pairs([("i1", 2)])), Ok(12));
//! ```
//!
//! The traits are split the same way the language grows: [`Exp`] is the
//! original core, [`ExpArith`] adds negation and subtraction, and [`ExpLet`]
//! adds the explicit sharing form. Code written against [`Exp`] alone keeps
//! compiling as extensions are added.

use std::borrow::Borrow;
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use thiserror::Error;

/// A non-empty variable name.
///
/// Cloning is a reference count bump, so names can be captured freely by
/// interpreter closures and stored in DAG nodes.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Name(Arc<str>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("variable name must not be empty")]
pub struct EmptyName;

impl Name {
    pub fn new(name: &str) -> Result<Self, EmptyName> {
        if name.is_empty() {
            Err(EmptyName)
        } else {
            Ok(Name(name.into()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<&str> for Name {
    type Error = EmptyName;

    fn try_from(name: &str) -> Result<Self, EmptyName> {
        Name::new(name)
    }
}

impl TryFrom<String> for Name {
    type Error = EmptyName;

    fn try_from(name: String) -> Result<Self, EmptyName> {
        Name::new(&name)
    }
}

impl Deref for Name {
    type Target = str;

    fn deref(&self) -> &str {
        &self.0
    }
}

impl Borrow<str> for Name {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for Name {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&*self.0, f)
    }
}

/// The core constructors: integer literals, free variables and addition.
///
/// Integers are 64-bit and wrap on overflow in every interpreter that
/// computes with them.
pub trait Exp: Sized + 'static {
    /// What a program means under this interpreter.
    type Repr: Clone + Send + Sync + 'static;

    fn constant(value: i64) -> Self::Repr;
    fn variable(name: Name) -> Self::Repr;
    /// Stateful interpreters run `left` before `right`.
    fn add(left: Self::Repr, right: Self::Repr) -> Self::Repr;
}

/// Negation and subtraction.
pub trait ExpArith: Exp {
    fn neg(operand: Self::Repr) -> Self::Repr;
    fn sub(left: Self::Repr, right: Self::Repr) -> Self::Repr;
}

/// Explicit sharing.
///
/// `let_(bound, body)` declares that every use of the argument passed to
/// `body` refers to one shared `bound` expression. The binder is a host
/// closure, so the bound variable cannot escape its scope by construction.
///
/// Host-level reuse of a `Repr` value (cloning it, or naming it with a Rust
/// `let`) carries no such guarantee: depending on the interpreter it may
/// duplicate work. Only `let_` promises sharing.
pub trait ExpLet: Exp {
    fn let_<F>(bound: Self::Repr, body: F) -> Self::Repr
    where
        F: Fn(Self::Repr) -> Self::Repr + Send + Sync + 'static;
}

/// Every interpreter in this crate implements the full language.
pub trait Dsl: ExpArith + ExpLet {}

impl<I: ExpArith + ExpLet> Dsl for I {}

/// Builds a variable from a string literal.
///
/// # Panics
///
/// Panics if `name` is empty. Use [`Name::new`] for names that are not known
/// to be valid.
pub fn var<I: Exp>(name: &str) -> I::Repr {
    match Name::new(name) {
        Ok(name) => I::variable(name),
        Err(e) => panic!("{e}"),
    }
}

/// The initial representation: a plain expression tree with no sharing.
///
/// Lowering a program to a tree substitutes every `let_` away, so shared
/// subexpressions appear once per use.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExprTree {
    Constant(i64),
    Variable(Name),
    Add(Box<ExprTree>, Box<ExprTree>),
    Neg(Box<ExprTree>),
    Sub(Box<ExprTree>, Box<ExprTree>),
}

impl ExprTree {
    /// # Panics
    ///
    /// Panics if `name` is empty.
    pub fn var(name: &str) -> Self {
        ExprTree::Variable(Name::new(name).expect("variable name must not be empty"))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(left: ExprTree, right: ExprTree) -> Self {
        ExprTree::Add(Box::new(left), Box::new(right))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(operand: ExprTree) -> Self {
        ExprTree::Neg(Box::new(operand))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(left: ExprTree, right: ExprTree) -> Self {
        ExprTree::Sub(Box::new(left), Box::new(right))
    }

    /// Number of constructors in the tree.
    pub fn node_count(&self) -> usize {
        match self {
            ExprTree::Constant(_) | ExprTree::Variable(_) => 1,
            ExprTree::Neg(e) => 1 + e.node_count(),
            ExprTree::Add(l, r) | ExprTree::Sub(l, r) => 1 + l.node_count() + r.node_count(),
        }
    }

    /// Replays the tree through any interpreter.
    pub fn interpret<I: ExpArith>(&self) -> I::Repr {
        match self {
            ExprTree::Constant(c) => I::constant(*c),
            ExprTree::Variable(v) => I::variable(v.clone()),
            ExprTree::Add(l, r) => I::add(l.interpret::<I>(), r.interpret::<I>()),
            ExprTree::Neg(e) => I::neg(e.interpret::<I>()),
            ExprTree::Sub(l, r) => I::sub(l.interpret::<I>(), r.interpret::<I>()),
        }
    }
}

/// Interprets a program as an [`ExprTree`].
#[derive(Debug, Clone, Copy)]
pub struct Tree;

impl Exp for Tree {
    type Repr = ExprTree;

    fn constant(value: i64) -> ExprTree {
        ExprTree::Constant(value)
    }

    fn variable(name: Name) -> ExprTree {
        ExprTree::Variable(name)
    }

    fn add(left: ExprTree, right: ExprTree) -> ExprTree {
        ExprTree::add(left, right)
    }
}

impl ExpArith for Tree {
    fn neg(operand: ExprTree) -> ExprTree {
        ExprTree::neg(operand)
    }

    fn sub(left: ExprTree, right: ExprTree) -> ExprTree {
        ExprTree::sub(left, right)
    }
}

impl ExpLet for Tree {
    fn let_<F>(bound: ExprTree, body: F) -> ExprTree
    where
        F: Fn(ExprTree) -> ExprTree + Send + Sync + 'static,
    {
        body(bound)
    }
}
