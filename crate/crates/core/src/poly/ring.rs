use std::fmt;

use super::FieldKind;
use crate::{Error, Result};

/// Polynomial ring `k[x_1..x_d]`, read as the local ring at the origin.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingSpec {
    vars: Vec<String>,
    field: FieldKind,
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingSpec {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = S>, field: FieldKind) -> Result<Self> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(Error::InvalidRing("at least one variable is required".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::InvalidRing(format!("`{v}` is not a valid variable name")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        Ok(RingSpec { vars, field })
    }

    /// Krull dimension of the localized ring.
    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn with_field(&self, field: FieldKind) -> RingSpec {
        RingSpec { vars: self.vars.clone(), field }
    }

    /// Same ring with extra leading variables (used for elimination).
    pub(crate) fn with_leading_vars(&self, names: &[&str]) -> RingSpec {
        let mut vars: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        vars.extend(self.vars.iter().cloned());
        RingSpec { vars, field: self.field }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.vars.join(", "), self.field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_names() {
        assert!(RingSpec::new(["X", "Y_2"], FieldKind::Rationals).is_ok());
        assert!(RingSpec::new(["X", "X"], FieldKind::Rationals).is_err());
        assert!(RingSpec::new(["2X"], FieldKind::Rationals).is_err());
        assert!(RingSpec::new(Vec::<String>::new(), FieldKind::Rationals).is_err());
    }
}
