// SPDX-License-Identifier: Apache-2.0

use crate::expr::Name;

/// Values for the free variables of a program.
///
/// An ordered association list: when a name is bound more than once, the
/// first binding wins.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Env {
    bindings: Vec<(Name, i64)>,
}

impl Env {
    pub fn new() -> Self {
        Self::default()
    }

    /// Convenience constructor for literal environments.
    ///
    /// # Panics
    ///
    /// Panics if any name is empty.
    pub fn from_pairs<S: AsRef<str>>(pairs: impl IntoIterator<Item = (S, i64)>) -> Self {
        pairs
            .into_iter()
            .map(|(name, value)| {
                let name = Name::new(name.as_ref()).expect("variable name must not be empty");
                (name, value)
            })
            .collect()
    }

    /// Appends a binding. Earlier bindings of the same name shadow it.
    pub fn bind(&mut self, name: Name, value: i64) {
        self.bindings.push((name, value));
    }

    pub fn lookup(&self, name: &str) -> Option<i64> {
        self.bindings
            .iter()
            .find(|(n, _)| n.as_str() == name)
            .map(|&(_, v)| v)
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Name, i64)> {
        self.bindings.iter().map(|(n, v)| (n, *v))
    }
}

impl FromIterator<(Name, i64)> for Env {
    fn from_iter<T: IntoIterator<Item = (Name, i64)>>(iter: T) -> Self {
        Env {
            bindings: iter.into_iter().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_binding_wins() {
        let env = Env::from_pairs([("x", 1), ("y", 2), ("x", 3)]);
        assert_eq!(env.lookup("x"), Some(1));
        assert_eq!(env.lookup("y"), Some(2));
        assert_eq!(env.lookup("z"), None);
        assert_eq!(env.len(), 3);
    }

    #[test]
    fn bind_appends() {
        let mut env = Env::new();
        assert!(env.is_empty());
        env.bind(Name::new("a").unwrap(), 4);
        env.bind(Name::new("a").unwrap(), 5);
        assert_eq!(env.lookup("a"), Some(4));
    }
}
