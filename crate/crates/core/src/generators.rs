// SPDX-License-Identifier: Apache-2.0

//! Workload generators: multiplication by a constant through repeated
//! doubling, and the Sklansky parallel prefix sum.

use crate::expr::{Exp, ExpArith, ExpLet};

/// `n * x` by recursive halving, without explicit sharing.
///
/// Both summands of every doubling are the same host value, but nothing
/// tells an interpreter so: the unshared tree has `2n - 1` constructors for
/// `n` a power of two. Negative `n` yields `neg(mul(-n, x))`.
pub fn mul<I: ExpArith>(n: i64, x: I::Repr) -> I::Repr {
    if n < 0 {
        I::neg(mul_unsigned::<I>(n.unsigned_abs(), x))
    } else {
        mul_unsigned::<I>(n.unsigned_abs(), x)
    }
}

fn mul_unsigned<I: Exp>(n: u64, x: I::Repr) -> I::Repr {
    match n {
        0 => I::constant(0),
        1 => x,
        n if n % 2 == 0 => mul_unsigned::<I>(n / 2, I::add(x.clone(), x)),
        n => I::add(x.clone(), mul_unsigned::<I>(n - 1, x)),
    }
}

/// Like [`mul`], but each doubling binds its operand with `let_`.
///
/// The addend of odd steps is left unshared; the DAG builder still finds
/// that sharing by hash-consing.
pub fn mul_shared<I: ExpArith + ExpLet>(n: i64, x: I::Repr) -> I::Repr {
    if n < 0 {
        I::neg(mul_shared_unsigned::<I>(n.unsigned_abs(), x))
    } else {
        mul_shared_unsigned::<I>(n.unsigned_abs(), x)
    }
}

fn mul_shared_unsigned<I: ExpLet>(n: u64, x: I::Repr) -> I::Repr {
    match n {
        0 => I::constant(0),
        1 => x,
        n if n % 2 == 0 => I::let_(x, move |x| {
            mul_shared_unsigned::<I>(n / 2, I::add(x.clone(), x))
        }),
        n => I::add(x.clone(), mul_shared_unsigned::<I>(n - 1, x)),
    }
}

/// Running "sums" of `xs` under `combine`, by recursive subdivision.
///
/// Element `i` of the result combines `xs[0..=i]`. The last prefix of the
/// left half is reused for every element of the right half.
///
/// ```
/// use expdag::{sklansky, var, Exp, Parens};
///
/// let xs: Vec<String> = (1..=4).map(|i| var::<Parens>(&format!("v{i}"))).collect();
/// let sums = sklansky(Parens::add, xs);
/// assert_eq!(sums, ["v1", "(v1+v2)", "((v1+v2)+v3)", "((v1+v2)+(v3+v4))"]);
/// ```
pub fn sklansky<T, F>(combine: F, xs: Vec<T>) -> Vec<T>
where
    T: Clone,
    F: Fn(T, T) -> T,
{
    sklansky_with(&combine, xs)
}

fn sklansky_with<T: Clone, F: Fn(T, T) -> T>(combine: &F, mut xs: Vec<T>) -> Vec<T> {
    if xs.len() <= 1 {
        return xs;
    }
    let right = xs.split_off(xs.len() / 2);
    let mut left = sklansky_with(combine, xs);
    let right = sklansky_with(combine, right);
    let last = left.last().expect("left half is non-empty").clone();
    left.extend(right.into_iter().map(|r| combine(last.clone(), r)));
    left
}

/// [`sklansky`] with addition, binding the last prefix of each left half
/// with `let_` where it is combined.
pub fn sklansky_shared<I: ExpLet>(xs: Vec<I::Repr>) -> Vec<I::Repr> {
    sklansky(|last, r| I::let_(last, move |l| I::add(l, r.clone())), xs)
}
