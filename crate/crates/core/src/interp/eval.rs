// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use super::Env;
use crate::expr::{Exp, ExpArith, ExpLet, Name};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("no var: {0}")]
    UnboundVariable(Name),
    #[error("node id {id} out of range for a DAG of {len} nodes")]
    NodeOutOfRange { id: usize, len: usize },
}

type EvalFn = dyn Fn(&Env) -> Result<i64, EvalError> + Send + Sync;

/// A program under the evaluator: a function of the environment.
#[derive(Clone)]
pub struct Reader(Arc<EvalFn>);

impl Reader {
    fn new(f: impl Fn(&Env) -> Result<i64, EvalError> + Send + Sync + 'static) -> Self {
        Reader(Arc::new(f))
    }

    pub fn run(&self, env: &Env) -> Result<i64, EvalError> {
        (self.0)(env)
    }
}

impl fmt::Debug for Reader {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Reader(..)")
    }
}

/// The evaluator. Arithmetic wraps on overflow.
#[derive(Debug, Clone, Copy)]
pub struct Eval;

impl Eval {
    pub fn run(program: &Reader, env: &Env) -> Result<i64, EvalError> {
        program.run(env)
    }
}

pub fn eval(program: &Reader, env: &Env) -> Result<i64, EvalError> {
    program.run(env)
}

impl Exp for Eval {
    type Repr = Reader;

    fn constant(value: i64) -> Reader {
        Reader::new(move |_| Ok(value))
    }

    fn variable(name: Name) -> Reader {
        Reader::new(move |env| {
            env.lookup(&name)
                .ok_or_else(|| EvalError::UnboundVariable(name.clone()))
        })
    }

    fn add(left: Reader, right: Reader) -> Reader {
        Reader::new(move |env| Ok(left.run(env)?.wrapping_add(right.run(env)?)))
    }
}

impl ExpArith for Eval {
    fn neg(operand: Reader) -> Reader {
        Reader::new(move |env| Ok(operand.run(env)?.wrapping_neg()))
    }

    fn sub(left: Reader, right: Reader) -> Reader {
        Reader::new(move |env| Ok(left.run(env)?.wrapping_sub(right.run(env)?)))
    }
}

impl ExpLet for Eval {
    // Flipped application.
    fn let_<F>(bound: Reader, body: F) -> Reader
    where
        F: Fn(Reader) -> Reader + Send + Sync + 'static,
    {
        body(bound)
    }
}
