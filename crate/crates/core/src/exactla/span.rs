use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::field::Field;
use super::matrix::SparseVec;
use crate::{Error, Result};

const NO_PIVOT: u32 = u32::MAX;

/// Incrementally built row echelon form.
///
/// Each stored row has leading coefficient one at its pivot column, and the
/// pivot is the smallest column of the row. New rows are fully reduced against
/// the rows present when they arrive, so insertion order fixes the result.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    dim: usize,
    rows: Vec<SparseVec<F::Elem>>,
    pivot_of: Vec<u32>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F, dim: usize) -> Self {
        Echelon {
            field,
            dim,
            rows: Vec::new(),
            pivot_of: vec![NO_PIVOT; dim],
        }
    }

    pub fn field(&self) -> F {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
    pub fn rows(&self) -> &[SparseVec<F::Elem>] {
        &self.rows
    }

    fn pivot_row(&self, c: usize) -> Option<usize> {
        match self.pivot_of[c] {
            NO_PIVOT => None,
            r => Some(r as usize),
        }
    }

    /// Remainder of `v` modulo the current row space.
    pub fn reduce(&self, v: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        let f = self.field;
        if v.iter().all(|(c, _)| self.pivot_of[*c] == NO_PIVOT) {
            return v.to_vec();
        }
        let mut work: BTreeMap<usize, F::Elem> = v.iter().cloned().collect();
        let mut out = Vec::new();
        while let Some((c, a)) = work.pop_first() {
            match self.pivot_row(c) {
                None => out.push((c, a)),
                Some(p) => {
                    for (c2, b) in &self.rows[p][1..] {
                        let slot = work.entry(*c2).or_insert_with(|| f.zero());
                        f.mul_sub_assign(slot, &a, b);
                        if f.is_zero(slot) {
                            work.remove(c2);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[(usize, F::Elem)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, v: &[(usize, F::Elem)]) -> bool {
        let r = self.reduce(v);
        self.push_reduced(r)
    }

    fn push_reduced(&mut self, mut r: SparseVec<F::Elem>) -> bool {
        let f = self.field;
        let Some((lead, a)) = r.first().cloned() else {
            return false;
        };
        if !f.is_one(&a) {
            let inv = f.inv(&a).expect("leading entry is nonzero");
            for e in r.iter_mut() {
                e.1 = f.mul(&e.1, &inv);
            }
        }
        self.pivot_of[lead] = self.rows.len() as u32;
        self.rows.push(r);
        true
    }

    /// Back-substitutes so every pivot column is zero in all other rows.
    /// Rows end up sorted by pivot.
    pub fn make_reduced(&mut self) {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| std::cmp::Reverse(self.rows[r][0].0));
        for r in order {
            let row = std::mem::take(&mut self.rows[r]);
            let tail = self.reduce(&row[1..]);
            let mut new = Vec::with_capacity(tail.len() + 1);
            new.push(row[0].clone());
            new.extend(tail);
            self.rows[r] = new;
        }
        self.rows.sort_by_key(|r| r[0].0);
        for (i, row) in self.rows.iter().enumerate() {
            self.pivot_of[row[0].0] = i as u32;
        }
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.iter().map(|r| r[0].0).collect();
        p.sort_unstable();
        p
    }

    /// Basis of the vectors orthogonal to every row (the solution space of
    /// the homogeneous system whose equations are the rows).
    pub fn solutions(&self) -> SpanBasis<F> {
        let mut red = self.clone();
        red.make_reduced();
        let f = self.field;
        let free: Vec<usize> = (0..self.dim).filter(|&c| red.pivot_of[c] == NO_PIVOT).collect();
        let mut slot_of = vec![usize::MAX; self.dim];
        for (k, &c) in free.iter().enumerate() {
            slot_of[c] = k;
        }
        let mut vecs: Vec<SparseVec<F::Elem>> = free.iter().map(|&c| vec![(c, f.one())]).collect();
        for row in &red.rows {
            let p = row[0].0;
            for (c, v) in &row[1..] {
                vecs[slot_of[*c]].push((p, f.neg(v)));
            }
        }
        for v in vecs.iter_mut() {
            v.sort_by_key(|e| e.0);
        }
        SpanBasis {
            field: f,
            dim: self.dim,
            vectors: vecs,
        }
    }

    pub fn into_span(self) -> SpanBasis<F> {
        SpanBasis {
            field: self.field,
            dim: self.dim,
            vectors: self.rows,
        }
    }
}

/// Linearly independent vectors in a fixed ambient dimension.
#[derive(Clone, Debug)]
pub struct SpanBasis<F: Field> {
    field: F,
    dim: usize,
    vectors: Vec<SparseVec<F::Elem>>,
}

impl<F: Field> SpanBasis<F> {
    /// Keeps an independent subset of `vectors` (first occurrence wins).
    pub fn from_vectors(field: F, dim: usize, vectors: Vec<SparseVec<F::Elem>>) -> Result<Self> {
        let mut ech = Echelon::new(field, dim);
        let mut kept = Vec::new();
        for v in vectors {
            check_dim(dim, &v)?;
            if ech.insert(&v) {
                kept.push(v);
            }
        }
        Ok(SpanBasis {
            field,
            dim,
            vectors: kept,
        })
    }

    pub fn field(&self) -> F {
        self.field
    }
    /// Ambient dimension.
    pub fn ambient(&self) -> usize {
        self.dim
    }
    /// Dimension of the span.
    pub fn len(&self) -> usize {
        self.vectors.len()
    }
    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
    pub fn vectors(&self) -> &[SparseVec<F::Elem>] {
        &self.vectors
    }

    pub fn echelon(&self) -> Echelon<F> {
        let mut e = Echelon::new(self.field, self.dim);
        for v in &self.vectors {
            e.insert(v);
        }
        e
    }

    /// Whether every vector of `other` lies in this span.
    pub fn contains_span(&self, other: &SpanBasis<F>) -> Result<bool> {
        if other.dim != self.dim {
            return Err(Error::Dimension(format!("ambient {} vs {}", other.dim, self.dim)));
        }
        let e = self.echelon();
        Ok(other.vectors.iter().all(|v| e.contains(v)))
    }

    pub fn to_json(&self) -> Value {
        let f = self.field;
        let vs: Vec<Value> = self
            .vectors
            .iter()
            .map(|v| {
                Value::Array(
                    v.iter()
                        .map(|(c, x)| json!([c, f.render(x)]))
                        .collect(),
                )
            })
            .collect();
        json!({ "ambient": self.dim, "vectors": vs })
    }
}

pub(crate) fn check_dim<E>(dim: usize, v: &[(usize, E)]) -> Result<()> {
    match v.last() {
        Some((c, _)) if *c >= dim => Err(Error::Dimension(format!(
            "index {c} outside ambient dimension {dim}"
        ))),
        _ => Ok(()),
    }
}
