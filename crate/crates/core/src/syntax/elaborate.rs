// SPDX-License-Identifier: Apache-2.0

use std::sync::Arc;

use super::SurfaceAst;
use crate::expr::{Dsl, Name};

/// Translates parsed syntax into a program for any interpreter.
///
/// `Let` becomes [`let_`](crate::ExpLet::let_), with the bound name in scope
/// in the body; inner bindings shadow outer ones. Unbound identifiers become
/// free variables. The negation of an integer literal is folded into a
/// negative constant.
pub fn elaborate<I: Dsl>(ast: &SurfaceAst) -> I::Repr {
    elab::<I>(ast, &None)
}

type Scope<R> = Option<Arc<Frame<R>>>;

struct Frame<R> {
    name: Name,
    value: R,
    parent: Scope<R>,
}

fn resolve<'a, R>(mut scope: &'a Scope<R>, name: &Name) -> Option<&'a R> {
    while let Some(frame) = scope {
        if frame.name == *name {
            return Some(&frame.value);
        }
        scope = &frame.parent;
    }
    None
}

fn elab<I: Dsl>(ast: &SurfaceAst, scope: &Scope<I::Repr>) -> I::Repr {
    match ast {
        SurfaceAst::Constant(c) => I::constant(*c),
        SurfaceAst::VarRef(name) => match resolve(scope, name) {
            Some(bound) => bound.clone(),
            None => I::variable(name.clone()),
        },
        SurfaceAst::Add(l, r) => I::add(elab::<I>(l, scope), elab::<I>(r, scope)),
        SurfaceAst::Sub(l, r) => I::sub(elab::<I>(l, scope), elab::<I>(r, scope)),
        SurfaceAst::Neg(e) => match **e {
            SurfaceAst::Constant(c) => I::constant(c.wrapping_neg()),
            _ => I::neg(elab::<I>(e, scope)),
        },
        SurfaceAst::Let { name, bound, body } => {
            let bound = elab::<I>(bound, scope);
            let name = name.clone();
            let body = Arc::clone(body);
            let scope = scope.clone();
            I::let_(bound, move |value| {
                let frame = Frame {
                    name: name.clone(),
                    value,
                    parent: scope.clone(),
                };
                elab::<I>(&body, &Some(Arc::new(frame)))
            })
        }
    }
}
