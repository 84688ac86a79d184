use std::fmt;
use std::sync::Arc;

/// Names with a fixed rank. Everything else sorts after these, by name.
const FIXED: &[&str] = &[
    "a", "b", "b'", "alpha", "alpha'", "m", "n", "k", "p", "q", "r", "s", "alpha1", "alpha2",
    "alpha3", "alpha4", "beta1", "beta2", "beta3", "beta4", "mu1", "mu2", "mu3", "mu4", "e1", "e2",
];

/// A polynomial indeterminate.
///
/// Parameters and index symbols have a fixed rank; generated unknowns such as
/// `f[r,k+m]` are carried by name and ordered lexicographically after them.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Fixed(u8),
    Named(Arc<str>),
}

impl Var {
    pub fn new(name: &str) -> Var {
        match FIXED.iter().position(|f| *f == name) {
            Some(i) => Var::Fixed(i as u8),
            None => Var::Named(Arc::from(name)),
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Var::Fixed(i) => FIXED[*i as usize],
            Var::Named(s) => s,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl From<&str> for Var {
    fn from(s: &str) -> Var {
        Var::new(s)
    }
}
