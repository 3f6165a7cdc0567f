//! Dense exact linear algebra over a [`Field`].

use crate::field::{Field, FieldElement};

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn from_columns(field: &Field, rows: usize, columns: &[Vec<FieldElement>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &Matrix, field: &Field) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[FieldElement], field: &Field) -> Vec<FieldElement> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = field.zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElement::is_zero)
    }
}

/// Incrementally maintained echelon form that records, for each stored
/// row, its expression in terms of the vectors inserted so far.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    rows: Vec<(usize, Vec<FieldElement>, Vec<FieldElement>)>,
    inserted: usize,
}

/// Outcome of [`Echelon::insert`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insert {
    /// The vector was independent and is now stored.
    Independent,
    /// `v = Σ coeffs[k]·v_k` over the previously inserted independent vectors.
    Dependent(Vec<FieldElement>),
}

impl Echelon {
    pub fn new(field: &Field) -> Self {
        Echelon { field: field.clone(), rows: Vec::new(), inserted: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Inserts `v`; dependent vectors are not stored and do not count as
    /// inserted.
    pub fn insert(&mut self, v: &[FieldElement]) -> Insert {
        let mut w = v.to_vec();
        let mut combo = vec![self.field.zero(); self.inserted + 1];
        combo[self.inserted] = self.field.one();
        for (p, row, rc) in &self.rows {
            let lambda = w[*p].clone();
            if lambda.is_zero() {
                continue;
            }
            for (a, b) in w.iter_mut().zip(row) {
                if !b.is_zero() {
                    *a -= &(&lambda * b);
                }
            }
            for (a, b) in combo.iter_mut().zip(rc) {
                if !b.is_zero() {
                    *a -= &(&lambda * b);
                }
            }
        }
        match w.iter().position(|x| !x.is_zero()) {
            None => {
                // 0 = v - Σ λ r  ⇒  v = -(combo without its last entry)
                combo.pop();
                Insert::Dependent(combo.into_iter().map(|c| -c).collect())
            }
            Some(p) => {
                let inv = w[p].inv().unwrap();
                let w: Vec<FieldElement> = w.iter().map(|x| x * &inv).collect();
                let combo: Vec<FieldElement> = combo.iter().map(|x| x * &inv).collect();
                self.rows.push((p, w, combo));
                self.inserted += 1;
                for (_, _, rc) in self.rows.iter_mut() {
                    rc.resize(self.inserted, self.field.zero());
                }
                Insert::Independent
            }
        }
    }
}

/// Rank of a list of vectors.
pub fn rank(field: &Field, vectors: &[Vec<FieldElement>]) -> usize {
    let mut e = Echelon::new(field);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Solves `Σ x_k·columns[k] = target`, if possible.
pub fn solve(field: &Field, columns: &[Vec<FieldElement>], target: &[FieldElement]) -> Option<Vec<FieldElement>> {
    let mut e = Echelon::new(field);
    let mut independent = Vec::new();
    for (k, c) in columns.iter().enumerate() {
        if e.insert(c) == Insert::Independent {
            independent.push(k);
        }
    }
    match e.insert(target) {
        Insert::Independent => None,
        Insert::Dependent(coeffs) => {
            let mut x = vec![field.zero(); columns.len()];
            for (k, c) in independent.into_iter().zip(coeffs) {
                x[k] = c;
            }
            Some(x)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dependence_coefficients() {
        let f = Field::Rational;
        let v = |a: &[i64]| a.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>();
        let mut e = Echelon::new(&f);
        assert_eq!(e.insert(&v(&[1, 1, 0])), Insert::Independent);
        assert_eq!(e.insert(&v(&[0, 1, 1])), Insert::Independent);
        assert_eq!(e.insert(&v(&[2, 5, 3])), Insert::Dependent(v(&[2, 3])));
        assert_eq!(e.rank(), 2);
        let x = solve(&f, &[v(&[1, 0]), v(&[1, 0]), v(&[0, 2])], &v(&[3, 4])).unwrap();
        assert_eq!(x, v(&[3, 0, 2]));
        assert!(solve(&f, &[v(&[1, 0])], &v(&[0, 1])).is_none());
    }
}
