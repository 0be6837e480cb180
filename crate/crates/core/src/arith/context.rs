use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

/// An ordered, named list of polynomial variables.
///
/// Every [`MPoly`](super::MPoly) carries a shared handle to its context and
/// arithmetic between different contexts is refused.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct VarContext {
    name: String,
    vars: Vec<String>,
}

pub type Ctx = Arc<VarContext>;

impl VarContext {
    pub fn new<S: Into<String>>(name: &str, vars: impl IntoIterator<Item = S>) -> Result<Ctx> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        Ok(Arc::new(VarContext {
            name: name.to_string(),
            vars,
        }))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn index_of(&self, var: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))
    }

    /// Two handles denote the same context if they are the same allocation
    /// or structurally equal.
    pub fn same(a: &Ctx, b: &Ctx) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }

    pub(crate) fn check(a: &Ctx, b: &Ctx) -> Result<()> {
        if Self::same(a, b) {
            Ok(())
        } else {
            Err(Error::ContextMismatch(a.name.clone(), b.name.clone()))
        }
    }
}

impl fmt::Display for VarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.name, self.vars.join(","))
    }
}

macro_rules! shared_context {
    ($(#[$doc:meta])* $fn_name:ident, $name:literal, $vars:expr) => {
        $(#[$doc])*
        pub fn $fn_name() -> Ctx {
            static CELL: OnceLock<Ctx> = OnceLock::new();
            CELL.get_or_init(|| VarContext::new($name, $vars).expect("static context"))
                .clone()
        }
    };
}

shared_context!(
    /// Local coordinates `x1..x4` on the moduli space.
    x_context,
    "x",
    ["x1", "x2", "x3", "x4"]
);
shared_context!(
    /// Coordinates `z1..z3` on the conic locus.
    z_context,
    "z",
    ["z1", "z2", "z3"]
);
shared_context!(
    /// The forty projective coordinates `y1..y40`.
    y_context,
    "y",
    (1..=40).map(|i| format!("y{i}"))
);
shared_context!(
    /// The ten pivot coordinates, ordered `g1..g9, g0` so that variable index
    /// `k` is the `k`-th pivot.
    g_context,
    "g",
    ["g1", "g2", "g3", "g4", "g5", "g6", "g7", "g8", "g9", "g0"]
);
shared_context!(
    /// The base coordinates `g1..g5` together with `s = g7` and `t = g0`.
    k_context,
    "k",
    ["g1", "g2", "g3", "g4", "g5", "s", "t"]
);
shared_context!(
    /// The two fiber unknowns `s = g7` and `t = g0` over a numeric base.
    st_context,
    "st",
    ["s", "t"]
);
shared_context!(
    /// A single curve parameter `t`.
    t_context,
    "t",
    ["t"]
);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_names_rejected() {
        assert_eq!(
            VarContext::new("bad", ["a", "b", "a"]),
            Err(Error::DuplicateVariable("a".into()))
        );
    }

    #[test]
    fn shared_contexts_are_reused() {
        assert!(Arc::ptr_eq(&x_context(), &x_context()));
        assert_eq!(y_context().arity(), 40);
        assert_eq!(g_context().index_of("g0").unwrap(), 9);
        assert!(!VarContext::same(&x_context(), &z_context()));
    }
}
