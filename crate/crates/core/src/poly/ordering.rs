use std::cmp::Ordering;
use std::fmt;

use super::PowerProduct;

/// Term ordering with variable precedence `x₁ > x₂ > … > x_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TermOrdering {
    Lex,
    DegLex,
    DegRevLex,
    /// Lex on the first `block` variables, then `rest` on the remaining ones.
    /// Used to eliminate auxiliary variables.
    Elimination { block: usize, rest: Box<TermOrdering> },
}

fn lex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn revlex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

fn degree(a: &[u16]) -> u32 {
    a.iter().map(|&e| e as u32).sum()
}

impl TermOrdering {
    pub fn compare(&self, a: &PowerProduct, b: &PowerProduct) -> Ordering {
        self.compare_exps(a.exps(), b.exps())
    }

    fn compare_exps(&self, a: &[u16], b: &[u16]) -> Ordering {
        match self {
            TermOrdering::Lex => lex(a, b),
            TermOrdering::DegLex => degree(a).cmp(&degree(b)).then_with(|| lex(a, b)),
            TermOrdering::DegRevLex => degree(a).cmp(&degree(b)).then_with(|| revlex(a, b)),
            TermOrdering::Elimination { block, rest } => lex(&a[..*block], &b[..*block])
                .then_with(|| rest.compare_exps(&a[*block..], &b[*block..])),
        }
    }

    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, TermOrdering::DegLex | TermOrdering::DegRevLex)
    }

    pub fn from_name(name: &str) -> Option<TermOrdering> {
        match name {
            "lex" => Some(TermOrdering::Lex),
            "deglex" => Some(TermOrdering::DegLex),
            "degrevlex" => Some(TermOrdering::DegRevLex),
            _ => None,
        }
    }
}

impl fmt::Display for TermOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrdering::Lex => f.write_str("lex"),
            TermOrdering::DegLex => f.write_str("deglex"),
            TermOrdering::DegRevLex => f.write_str("degrevlex"),
            TermOrdering::Elimination { block, rest } => write!(f, "elim({block},{rest})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(e: &[u16]) -> PowerProduct {
        PowerProduct::from_exps(e)
    }

    #[test]
    fn degrevlex_prefers_fewer_trailing_variables() {
        let o = TermOrdering::DegRevLex;
        // x*z < y^2 in degrevlex, but x*z > y^2 in deglex
        assert_eq!(o.compare(&pp(&[1, 0, 1]), &pp(&[0, 2, 0])), Ordering::Less);
        assert_eq!(TermOrdering::DegLex.compare(&pp(&[1, 0, 1]), &pp(&[0, 2, 0])), Ordering::Greater);
        assert_eq!(TermOrdering::Lex.compare(&pp(&[1, 0, 0]), &pp(&[0, 5, 5])), Ordering::Greater);
    }

    #[test]
    fn elimination_block_dominates() {
        let o = TermOrdering::Elimination { block: 1, rest: Box::new(TermOrdering::DegRevLex) };
        assert_eq!(o.compare(&pp(&[1, 0, 0]), &pp(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(o.compare(&pp(&[1, 2, 0]), &pp(&[1, 0, 1])), Ordering::Greater);
    }
}
