//! Multivariate polynomials over the supported fields.

mod monomial;
mod ordering;
mod parse;
mod polynomial;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

pub use monomial::PowerProduct;
pub use ordering::TermOrdering;
pub use parse::parse_polynomial_at;
pub use polynomial::Polynomial;

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingData {
    field: Field,
    vars: Vec<String>,
    ordering: TermOrdering,
}

/// Handle to a polynomial ring `K[x₁,…,x_n]` with a fixed term ordering.
/// Cloning is cheap.
#[derive(Clone, Debug)]
pub struct Ring(Arc<RingData>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: Into<String>>(
        field: Field,
        vars: impl IntoIterator<Item = S>,
        ordering: TermOrdering,
    ) -> Result<Ring> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(Error::RingMismatch);
        }
        let params = field.param_names();
        for (i, v) in vars.iter().enumerate() {
            if !valid_identifier(v) {
                return Err(Error::Parse { line: 0, col: 0, msg: format!("invalid variable name `{v}`") });
            }
            if vars[..i].contains(v) || params.contains(v) {
                return Err(Error::Parse { line: 0, col: 0, msg: format!("duplicate name `{v}`") });
            }
        }
        if let TermOrdering::Elimination { block, .. } = &ordering {
            if *block > vars.len() {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Ring(Arc::new(RingData { field, vars, ordering })))
    }

    pub fn field(&self) -> &Field {
        &self.0.field
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn ordering(&self) -> &TermOrdering {
        &self.0.ordering
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    /// Same variables and field under another term ordering.
    pub fn with_ordering(&self, ordering: TermOrdering) -> Ring {
        if *self.ordering() == ordering {
            return self.clone();
        }
        Ring(Arc::new(RingData { field: self.0.field.clone(), vars: self.0.vars.clone(), ordering }))
    }

    /// Same variables and ordering over another field.
    pub fn with_field(&self, field: Field) -> Ring {
        Ring(Arc::new(RingData { field, vars: self.0.vars.clone(), ordering: self.0.ordering.clone() }))
    }

    /// Ring with one extra variable appended after the existing ones.
    pub fn append_var(&self, name: &str) -> Result<Ring> {
        let mut vars = self.0.vars.clone();
        vars.push(name.to_string());
        Ring::new(self.0.field.clone(), vars, self.0.ordering.clone())
    }

    /// Ring with the variable at `index` removed.
    pub fn remove_var(&self, index: usize) -> Result<Ring> {
        let mut vars = self.0.vars.clone();
        vars.remove(index);
        let ordering = match self.ordering() {
            TermOrdering::Elimination { .. } => TermOrdering::DegRevLex,
            o => o.clone(),
        };
        Ring::new(self.0.field.clone(), vars, ordering)
    }

    pub fn cmp(&self, a: &PowerProduct, b: &PowerProduct) -> Ordering {
        self.0.ordering.compare(a, b)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self)
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::constant(self, self.field().one())
    }

    pub fn constant(&self, c: FieldElement) -> Polynomial {
        Polynomial::constant(self, c)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::monomial(self, PowerProduct::var(self.nvars(), i), self.field().one())
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        parse_polynomial_at(text, self, 1, 1)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}] {}", self.field(), self.vars().join(","), self.ordering())
    }
}
