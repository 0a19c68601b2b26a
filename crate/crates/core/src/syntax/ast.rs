// SPDX-License-Identifier: Apache-2.0

use std::sync::Arc;

use crate::expr::Name;

/// Parsed program text.
///
/// Identifiers are not resolved yet: a `VarRef` names either an enclosing
/// `Let` or, failing that, a free variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurfaceAst {
    Constant(i64),
    VarRef(Name),
    Add(Arc<SurfaceAst>, Arc<SurfaceAst>),
    Sub(Arc<SurfaceAst>, Arc<SurfaceAst>),
    Neg(Arc<SurfaceAst>),
    Let {
        name: Name,
        bound: Arc<SurfaceAst>,
        body: Arc<SurfaceAst>,
    },
}

impl SurfaceAst {
    /// # Panics
    ///
    /// Panics if `name` is empty.
    pub fn var(name: &str) -> Self {
        SurfaceAst::VarRef(Name::new(name).expect("identifier must not be empty"))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(left: SurfaceAst, right: SurfaceAst) -> Self {
        SurfaceAst::Add(Arc::new(left), Arc::new(right))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(left: SurfaceAst, right: SurfaceAst) -> Self {
        SurfaceAst::Sub(Arc::new(left), Arc::new(right))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(operand: SurfaceAst) -> Self {
        SurfaceAst::Neg(Arc::new(operand))
    }

    /// # Panics
    ///
    /// Panics if `name` is empty.
    pub fn let_in(name: &str, bound: SurfaceAst, body: SurfaceAst) -> Self {
        SurfaceAst::Let {
            name: Name::new(name).expect("identifier must not be empty"),
            bound: Arc::new(bound),
            body: Arc::new(body),
        }
    }
}
