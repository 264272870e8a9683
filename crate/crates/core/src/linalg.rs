//! Exact Gaussian elimination.

use std::collections::{BTreeMap, HashMap};

use crate::field::Field;

pub type SparseVec<E> = BTreeMap<usize, E>;

/// Incrementally maintained row-echelon basis of a subspace of `F^n`.
///
/// Rows are stored normalized (pivot coefficient one) and keyed by pivot
/// column, where the pivot is the smallest column with a nonzero entry.
#[derive(Debug, Clone)]
pub struct EchelonBasis<F: Field> {
    field: F,
    rows: HashMap<usize, SparseVec<F::Elem>>,
}

impl<F: Field> EchelonBasis<F> {
    pub fn new(field: F) -> Self {
        EchelonBasis { field, rows: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current rows. The result has no entry in a pivot column.
    pub fn reduce(&self, mut v: SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        v.retain(|_, c| !self.field.is_zero(c));
        let mut cursor = 0usize;
        loop {
            let next = v
                .range(cursor..)
                .map(|(&i, _)| i)
                .find(|i| self.rows.contains_key(i));
            let Some(col) = next else { break };
            let coeff = v.remove(&col).expect("present");
            let row = &self.rows[&col];
            for (&j, rc) in row.range(col + 1..) {
                let delta = self.field.mul(&coeff, rc);
                let entry = v.entry(j).or_insert_with(|| self.field.zero());
                *entry = self.field.sub(entry, &delta);
                if self.field.is_zero(entry) {
                    v.remove(&j);
                }
            }
            cursor = col + 1;
        }
        v
    }

    /// Adds `v` to the spanning set; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec<F::Elem>) -> bool {
        let mut r = self.reduce(v);
        let Some((&pivot, lead)) = r.iter().next() else {
            return false;
        };
        let inv = self.field.inv(lead);
        for c in r.values_mut() {
            *c = self.field.mul(c, &inv);
        }
        r.insert(pivot, self.field.one());
        self.rows.insert(pivot, r);
        true
    }

    pub fn contains(&self, v: SparseVec<F::Elem>) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Rank of a dense matrix.
pub fn rank<F: Field>(field: &F, matrix: &[Vec<F::Elem>]) -> usize {
    let mut m: Vec<Vec<F::Elem>> = matrix.to_vec();
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !field.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, p);
        let inv = field.inv(&m[r][c]);
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[c]) {
                continue;
            }
            let factor = field.mul(&row[c], &inv);
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x = field.sub(x, &field.mul(&factor, y));
            }
        }
        r += 1;
    }
    r
}
