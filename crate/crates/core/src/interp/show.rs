// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeSet;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use super::Rendered;
use crate::expr::{Exp, ExpArith, ExpLet, Name};

/// Printer that shows explicit sharing as `let vN = ... in ...`.
///
/// Let-variables are numbered from a single counter threaded left to right
/// through the program text, so every `let` gets a distinct name in the order
/// it appears. A candidate name that collides with a free variable of the
/// program is skipped.
#[derive(Debug, Clone, Copy)]
pub struct LetPrint;

/// A program under [`LetPrint`].
#[derive(Clone)]
pub struct LetDoc {
    free: Arc<BTreeSet<Name>>,
    render: Arc<dyn Fn(&mut Supply) -> Rendered + Send + Sync>,
}

impl fmt::Debug for LetDoc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LetDoc")
            .field("free", &self.free)
            .finish_non_exhaustive()
    }
}

impl LetDoc {
    fn new(
        free: Arc<BTreeSet<Name>>,
        render: impl Fn(&mut Supply) -> Rendered + Send + Sync + 'static,
    ) -> Self {
        LetDoc {
            free,
            render: Arc::new(render),
        }
    }

    /// Free variables of the program.
    pub fn free_variables(&self) -> impl Iterator<Item = &Name> {
        self.free.iter()
    }
}

// Identifies a `let_` binder across renders; names are assigned per render.
static NEXT_BINDER: AtomicU64 = AtomicU64::new(0);

struct Supply {
    next: u64,
    avoid: Arc<BTreeSet<Name>>,
    scope: Vec<(u64, Name)>,
}

impl Supply {
    fn fresh(&mut self) -> Name {
        loop {
            let candidate = format!("v{}", self.next);
            self.next += 1;
            if !self.avoid.contains(candidate.as_str()) {
                return Name::new(&candidate).expect("non-empty");
            }
        }
    }

    fn lookup(&self, binder: u64) -> &Name {
        self.scope
            .iter()
            .rev()
            .find(|(b, _)| *b == binder)
            .map(|(_, n)| n)
            .expect("let-bound variable used outside its body")
    }
}

fn union(a: &Arc<BTreeSet<Name>>, b: &Arc<BTreeSet<Name>>) -> Arc<BTreeSet<Name>> {
    if b.is_subset(a) {
        a.clone()
    } else if a.is_subset(b) {
        b.clone()
    } else {
        Arc::new(a.union(b).cloned().collect())
    }
}

pub fn print_let(program: &LetDoc) -> String {
    let mut supply = Supply {
        next: 0,
        avoid: program.free.clone(),
        scope: Vec::new(),
    };
    (program.render)(&mut supply).into_string()
}

impl Exp for LetPrint {
    type Repr = LetDoc;

    fn constant(value: i64) -> LetDoc {
        LetDoc::new(Arc::default(), move |_| Rendered::atom(value.to_string()))
    }

    fn variable(name: Name) -> LetDoc {
        let free = Arc::new(BTreeSet::from([name.clone()]));
        LetDoc::new(free, move |_| Rendered::atom(name.to_string()))
    }

    fn add(left: LetDoc, right: LetDoc) -> LetDoc {
        let free = union(&left.free, &right.free);
        LetDoc::new(free, move |s| {
            let l = (left.render)(s);
            let r = (right.render)(s);
            Rendered::add(l, r)
        })
    }
}

impl ExpArith for LetPrint {
    fn neg(operand: LetDoc) -> LetDoc {
        LetDoc::new(operand.free.clone(), move |s| {
            Rendered::neg((operand.render)(s))
        })
    }

    fn sub(left: LetDoc, right: LetDoc) -> LetDoc {
        let free = union(&left.free, &right.free);
        LetDoc::new(free, move |s| {
            let l = (left.render)(s);
            let r = (right.render)(s);
            Rendered::sub(l, r)
        })
    }
}

impl ExpLet for LetPrint {
    fn let_<F>(bound: LetDoc, body: F) -> LetDoc
    where
        F: Fn(LetDoc) -> LetDoc + Send + Sync + 'static,
    {
        let binder = NEXT_BINDER.fetch_add(1, Ordering::Relaxed);
        let bound_var = LetDoc::new(Arc::default(), move |s| {
            Rendered::atom(s.lookup(binder).to_string())
        });
        let body = body(bound_var);
        let free = union(&bound.free, &body.free);
        LetDoc::new(free, move |s| {
            let name = s.fresh();
            let b = (bound.render)(s);
            s.scope.push((binder, name.clone()));
            let e = (body.render)(s);
            s.scope.pop();
            Rendered::let_in(&name, b, e)
        })
    }
}
