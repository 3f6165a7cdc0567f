use crate::field::FieldElement;
use crate::poly::{Polynomial, PowerProduct};

/// Full reduction of `f` by `divisors`. Each step cancels the current
/// leading term with the first divisor whose leading term divides it;
/// `step(k, c, t)` is told that `c·t·divisors[k]` was subtracted.
pub(crate) fn reduce_by<F>(f: &Polynomial, divisors: &[&Polynomial], mut step: F) -> Polynomial
where
    F: FnMut(usize, &FieldElement, &PowerProduct),
{
    let ring = f.ring().clone();
    let lts: Vec<Option<(&PowerProduct, FieldElement)>> = divisors
        .iter()
        .map(|d| d.leading_term().map(|t| (t, d.leading_coeff().unwrap().inv().unwrap())))
        .collect();
    let mut p = f.clone();
    let mut rem = Vec::new();
    while let Some((t, c)) = p.terms().first().cloned() {
        let hit = lts.iter().enumerate().find_map(|(k, lt)| {
            let (lt, inv) = lt.as_ref()?;
            lt.quotient_of(&t).map(|s| (k, s, inv))
        });
        match hit {
            Some((k, s, inv)) => {
                let q = &c * inv;
                step(k, &q, &s);
                p = p.sub_mul_term(&q, &s, divisors[k]);
            }
            None => {
                rem.push((t, c));
                let mut terms = p.into_terms();
                terms.remove(0);
                p = Polynomial::from_sorted(&ring, terms);
            }
        }
    }
    Polynomial::from_sorted(&ring, rem)
}

/// Remainder of `f` under full reduction by `divisors`.
pub fn normal_form_by(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let refs: Vec<&Polynomial> = divisors.iter().collect();
    reduce_by(f, &refs, |_, _, _| {})
}

/// Multivariate division: `f = Σ qᵢ·dᵢ + r` where no term of `r` is
/// divisible by a leading term of the divisors. The reducer is always the
/// first divisor whose leading term divides the current leading term.
pub fn divide_with_quotients(f: &Polynomial, divisors: &[Polynomial]) -> (Vec<Polynomial>, Polynomial) {
    let ring = f.ring();
    let mut quotients: Vec<Vec<(PowerProduct, FieldElement)>> = vec![Vec::new(); divisors.len()];
    let refs: Vec<&Polynomial> = divisors.iter().collect();
    let r = reduce_by(f, &refs, |k, c, t| quotients[k].push((t.clone(), c.clone())));
    let q = quotients.into_iter().map(|q| Polynomial::from_terms(ring, q)).collect();
    (q, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::poly::{Ring, TermOrdering};

    #[test]
    fn division_reconstructs() {
        let r = Ring::new(Field::Rational, ["x", "y", "z"], TermOrdering::Lex).unwrap();
        let g: Vec<Polynomial> =
            ["x - z", "y - z^2", "z^3 - z - 1"].iter().map(|s| r.parse(s).unwrap()).collect();
        let (q, rem) = divide_with_quotients(&r.parse("y*z - z - 1").unwrap(), &g);
        assert!(rem.is_zero());
        assert_eq!(q, vec![r.zero(), r.parse("z").unwrap(), r.one()]);
        let (q, rem) = divide_with_quotients(&r.parse("z^2 - y").unwrap(), &g);
        assert!(rem.is_zero());
        assert_eq!(q, vec![r.zero(), r.parse("-1").unwrap(), r.zero()]);
    }
}
