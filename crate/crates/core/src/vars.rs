//! Variable tables.
//!
//! Every polynomial carries a reference to a [`VarTable`] fixing the ambient
//! variable set and its storage order. Tables are immutable; extending a
//! table produces a new one, and polynomials are mapped between tables by
//! variable name.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// Role of a variable in the pipeline. Purely informational except for
/// pretty-printing and sanity checks; the algebra never branches on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VarClass {
    /// Trace variables `h1, h2` (generic point coordinates).
    Trace,
    /// Geometric parameters `t1, t2, t3`.
    Geometric,
    /// Undetermined coefficients `l<i>_<j>` of generic forms.
    Parameter,
    /// Saturation variable `w`.
    Saturation,
    /// Implicit-space variables `x, y, z` (and auxiliary mixers).
    Implicit,
}

/// Ordered set of named variables. The ordering is total and doubles as the
/// ambient lexicographic priority (index 0 strongest) used for canonical
/// printing and normalization.
#[derive(Debug)]
pub struct VarTable {
    names: Vec<String>,
    classes: Vec<VarClass>,
    index: HashMap<String, usize>,
}

impl VarTable {
    pub fn new(vars: &[(&str, VarClass)]) -> Arc<Self> {
        let mut names = Vec::with_capacity(vars.len());
        let mut classes = Vec::with_capacity(vars.len());
        let mut index = HashMap::new();
        for (i, (name, class)) in vars.iter().enumerate() {
            assert!(
                index.insert(name.to_string(), i).is_none(),
                "duplicate variable name {name}"
            );
            names.push(name.to_string());
            classes.push(*class);
        }
        Arc::new(VarTable { names, classes, index })
    }

    /// The standard table used by the whole pipeline:
    /// `t1, t2, t3, h1, h2, w, x, y, z, zmix`.
    ///
    /// `zmix` is the auxiliary mixing variable used when two generators are
    /// combined linearly before a resultant.
    pub fn standard() -> Arc<Self> {
        Self::new(&[
            ("t1", VarClass::Geometric),
            ("t2", VarClass::Geometric),
            ("t3", VarClass::Geometric),
            ("h1", VarClass::Trace),
            ("h2", VarClass::Trace),
            ("w", VarClass::Saturation),
            ("x", VarClass::Implicit),
            ("y", VarClass::Implicit),
            ("z", VarClass::Implicit),
            ("zmix", VarClass::Implicit),
        ])
    }

    /// New table with `extra` parameter variables appended.
    pub fn extend(self: &Arc<Self>, extra: &[String]) -> Arc<Self> {
        let mut vars: Vec<(String, VarClass)> = self
            .names
            .iter()
            .cloned()
            .zip(self.classes.iter().copied())
            .collect();
        for name in extra {
            vars.push((name.clone(), VarClass::Parameter));
        }
        let borrowed: Vec<(&str, VarClass)> =
            vars.iter().map(|(n, c)| (n.as_str(), *c)).collect();
        Self::new(&borrowed)
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn class(&self, i: usize) -> VarClass {
        self.classes[i]
    }

    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Index of `name`, panicking when absent. Internal call sites only use
    /// it for variables the table is known to contain.
    pub fn var(&self, name: &str) -> usize {
        self.lookup(name)
            .unwrap_or_else(|| panic!("variable {name} not in table"))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Tables are interchangeable when they list the same names in the same
    /// order. Arc identity is the fast path.
    pub fn same(a: &Arc<Self>, b: &Arc<Self>) -> bool {
        Arc::ptr_eq(a, b) || a.names == b.names
    }
}

impl fmt::Display for VarTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.names.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_table_layout() {
        let t = VarTable::standard();
        assert_eq!(t.var("t1"), 0);
        assert_eq!(t.var("w"), 5);
        assert_eq!(t.class(3), VarClass::Trace);
        assert!(t.lookup("nope").is_none());
    }

    #[test]
    fn extend_appends_parameters() {
        let t = VarTable::standard();
        let t2 = t.extend(&["l1_1".into(), "l1_2".into()]);
        assert_eq!(t2.arity(), t.arity() + 2);
        assert_eq!(t2.class(t2.var("l1_1")), VarClass::Parameter);
        assert!(!VarTable::same(&t, &t2));
    }
}
