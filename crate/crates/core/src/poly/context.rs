//! Variable contexts: ordered, immutable lists of variable names.

use crate::error::Error;
use crate::Result;
use std::sync::Arc;

/// An ordered list of distinct variable identifiers. The order is fixed for
/// the lifetime of the context; every polynomial refers to exactly one
/// context.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableContext {
    names: Vec<String>,
}

impl VariableContext {
    pub fn new(names: &[&str]) -> Result<Arc<Self>> {
        Self::from_names(names.iter().map(|s| s.to_string()).collect())
    }

    pub fn from_names(names: Vec<String>) -> Result<Arc<Self>> {
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(Error::input("empty variable name"));
            }
            if names[..i].contains(n) {
                return Err(Error::input(format!("duplicate variable name `{n}`")));
            }
        }
        Ok(Arc::new(VariableContext { names }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Contexts are interchangeable iff they list the same names in the
    /// same order.
    pub fn same_as(&self, other: &VariableContext) -> bool {
        std::ptr::eq(self, other) || self.names == other.names
    }

    /// A new context with `extra` names appended. Returns the context and
    /// the index of the first appended variable.
    pub fn extended(&self, extra: &[String]) -> Result<(Arc<Self>, usize)> {
        let mut names = self.names.clone();
        let base = names.len();
        names.extend(extra.iter().cloned());
        Ok((Self::from_names(names)?, base))
    }

    /// Deterministically generates `count` names starting from `base`
    /// (`base1`, `base2`, ...) that do not collide with existing names;
    /// underscores are prepended until the whole family is fresh.
    pub fn fresh_names(&self, base: &str, count: usize) -> Vec<String> {
        let mut prefix = base.to_string();
        loop {
            let candidate: Vec<String> =
                (1..=count).map(|i| format!("{prefix}{i}")).collect();
            if candidate.iter().all(|c| self.index_of(c).is_none()) {
                return candidate;
            }
            prefix.insert(0, '_');
        }
    }

    /// Single fresh name (`base`, `_base`, `__base`, ...).
    pub fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        while self.index_of(&name).is_some() {
            name.insert(0, '_');
        }
        name
    }
}
