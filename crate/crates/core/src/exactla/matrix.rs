use serde_json::{json, Value};

use super::field::Field;
use crate::{Error, Result};

/// Sparse vector: strictly increasing indices, nonzero values.
pub type SparseVec<E> = Vec<(usize, E)>;

#[derive(Clone, Debug)]
enum Storage<E> {
    Dense(Vec<E>),
    Sparse(Vec<SparseVec<E>>),
}

/// Matrix over an exact field.
///
/// Stored densely when at least a tenth of the entries are nonzero and as
/// sparse rows otherwise. Equality compares values, not storage.
#[derive(Clone, Debug)]
pub struct ExactMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    storage: Storage<F::Elem>,
}

const DENSE_THRESHOLD: f64 = 0.10;

impl<F: Field> ExactMatrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            field,
            rows,
            cols,
            storage: Storage::Sparse(vec![Vec::new(); rows]),
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let rows = (0..n).map(|i| vec![(i, field.one())]).collect();
        Self::from_sparse_rows(field, n, rows)
    }

    /// Builds from sparse rows that are already sorted and free of zeros.
    pub fn from_sparse_rows(field: F, cols: usize, rows: Vec<SparseVec<F::Elem>>) -> Self {
        debug_assert!(rows
            .iter()
            .all(|r| r.windows(2).all(|w| w[0].0 < w[1].0) && r.iter().all(|(c, _)| *c < cols)));
        let mut m = ExactMatrix {
            field,
            rows: rows.len(),
            cols,
            storage: Storage::Sparse(rows),
        };
        m.settle();
        m
    }

    /// Sums duplicate positions and drops zeros.
    pub fn from_triplets(
        field: F,
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, F::Elem)>,
    ) -> Result<Self> {
        let mut acc: Vec<Vec<(usize, F::Elem)>> = vec![Vec::new(); rows];
        for (r, c, v) in entries {
            if r >= rows || c >= cols {
                return Err(Error::OutOfRange(format!(
                    "entry ({r},{c}) outside {rows}x{cols}"
                )));
            }
            acc[r].push((c, v));
        }
        let rows_v = acc.into_iter().map(|r| normalize(field, r)).collect();
        Ok(Self::from_sparse_rows(field, cols, rows_v))
    }

    pub fn from_dense(field: F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} values for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        let mut m = ExactMatrix {
            field,
            rows,
            cols,
            storage: Storage::Dense(data),
        };
        m.settle();
        Ok(m)
    }

    /// Reshapes a flattened `rows*cols` vector (row-major) into a matrix.
    pub fn from_flat(field: F, rows: usize, cols: usize, v: &SparseVec<F::Elem>) -> Self {
        let mut out: Vec<SparseVec<F::Elem>> = vec![Vec::new(); rows];
        for (k, e) in v {
            out[k / cols].push((k % cols, e.clone()));
        }
        Self::from_sparse_rows(field, cols, out)
    }

    fn settle(&mut self) {
        let total = self.rows * self.cols;
        let nnz = self.nnz();
        let want_dense = total > 0 && (nnz as f64) >= DENSE_THRESHOLD * total as f64;
        match (&self.storage, want_dense) {
            (Storage::Sparse(rows), true) => {
                let mut data = vec![self.field.zero(); total];
                for (r, row) in rows.iter().enumerate() {
                    for (c, v) in row {
                        data[r * self.cols + c] = v.clone();
                    }
                }
                self.storage = Storage::Dense(data);
            }
            (Storage::Dense(_), false) => {
                let rows = (0..self.rows).map(|r| self.row(r)).collect();
                self.storage = Storage::Sparse(rows);
            }
            _ => {}
        }
    }

    pub fn field(&self) -> F {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    pub fn is_dense(&self) -> bool {
        matches!(self.storage, Storage::Dense(_))
    }

    pub fn nnz(&self) -> usize {
        match &self.storage {
            Storage::Dense(d) => d.iter().filter(|v| !self.field.is_zero(v)).count(),
            Storage::Sparse(rows) => rows.iter().map(Vec::len).sum(),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> F::Elem {
        assert!(r < self.rows && c < self.cols, "index out of range");
        match &self.storage {
            Storage::Dense(d) => d[r * self.cols + c].clone(),
            Storage::Sparse(rows) => match rows[r].binary_search_by_key(&c, |e| e.0) {
                Ok(k) => rows[r][k].1.clone(),
                Err(_) => self.field.zero(),
            },
        }
    }

    /// Nonzero entries of row `r` in column order.
    pub fn row(&self, r: usize) -> SparseVec<F::Elem> {
        match &self.storage {
            Storage::Dense(d) => d[r * self.cols..(r + 1) * self.cols]
                .iter()
                .enumerate()
                .filter(|(_, v)| !self.field.is_zero(v))
                .map(|(c, v)| (c, v.clone()))
                .collect(),
            Storage::Sparse(rows) => rows[r].clone(),
        }
    }

    pub fn sparse_rows(&self) -> Vec<SparseVec<F::Elem>> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    /// Nonzero entries in row-major order.
    pub fn triplets(&self) -> Vec<(usize, usize, F::Elem)> {
        (0..self.rows)
            .flat_map(|r| self.row(r).into_iter().map(move |(c, v)| (r, c, v)))
            .collect()
    }

    /// Row-major flattening into a vector of length `rows*cols`.
    pub fn flatten(&self) -> SparseVec<F::Elem> {
        self.triplets()
            .into_iter()
            .map(|(r, c, v)| (r * self.cols + c, v))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.nnz() == 0
    }

    pub fn transpose(&self) -> Self {
        let mut out: Vec<SparseVec<F::Elem>> = vec![Vec::new(); self.cols];
        for (r, c, v) in self.triplets() {
            out[c].push((r, v));
        }
        Self::from_sparse_rows(self.field, self.rows, out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let orows = other.sparse_rows();
        let mut acc = vec![f.zero(); other.cols];
        let mut touched = vec![false; other.cols];
        let mut out = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut idx = Vec::new();
            for (k, a) in self.row(r) {
                for (c, b) in &orows[k] {
                    if !touched[*c] {
                        touched[*c] = true;
                        idx.push(*c);
                    }
                    acc[*c] = f.add(&acc[*c], &f.mul(&a, b));
                }
            }
            idx.sort_unstable();
            let mut row = Vec::new();
            for c in idx {
                touched[c] = false;
                let v = std::mem::replace(&mut acc[c], f.zero());
                if !f.is_zero(&v) {
                    row.push((c, v));
                }
            }
            out.push(row);
        }
        Ok(Self::from_sparse_rows(f, other.cols, out))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let f = self.field;
        let rows = (0..self.rows)
            .map(|r| add_sparse(f, &self.row(r), &other.row(r), &f.one()))
            .collect();
        Ok(Self::from_sparse_rows(f, self.cols, rows))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let f = self.field;
        let rows = (0..self.rows)
            .map(|r| add_sparse(f, &self.row(r), &other.row(r), &f.neg(&f.one())))
            .collect();
        Ok(Self::from_sparse_rows(f, self.cols, rows))
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let f = self.field;
        if f.is_zero(s) {
            return Self::zeros(f, self.rows, self.cols);
        }
        let rows = (0..self.rows)
            .map(|r| self.row(r).into_iter().map(|(c, v)| (c, f.mul(&v, s))).collect())
            .collect();
        Self::from_sparse_rows(f, self.cols, rows)
    }

    /// `self·other − other·self`
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// `{rows, cols, entries: [[r, c, value], ...]}` with values rendered by the field.
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .triplets()
            .into_iter()
            .map(|(r, c, v)| json!([r, c, self.field.render(&v)]))
            .collect();
        json!({ "rows": self.rows, "cols": self.cols, "entries": entries })
    }

    pub fn from_json(field: F, v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("matrix json: {what}"));
        let rows = v["rows"].as_u64().ok_or_else(|| bad("rows"))? as usize;
        let cols = v["cols"].as_u64().ok_or_else(|| bad("cols"))? as usize;
        let list = v["entries"].as_array().ok_or_else(|| bad("entries"))?;
        let mut trips = Vec::with_capacity(list.len());
        for e in list {
            let e = e.as_array().filter(|e| e.len() == 3).ok_or_else(|| bad("entry"))?;
            let r = e[0].as_u64().ok_or_else(|| bad("row index"))? as usize;
            let c = e[1].as_u64().ok_or_else(|| bad("col index"))? as usize;
            let val = match &e[2] {
                Value::String(s) => field.parse(s)?,
                Value::Number(n) => field.parse(&n.to_string())?,
                _ => return Err(bad("value")),
            };
            trips.push((r, c, val));
        }
        Self::from_triplets(field, rows, cols, trips)
    }
}

impl<F: Field> PartialEq for ExactMatrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && (0..self.rows).all(|r| self.row(r) == other.row(r))
    }
}

impl<F: Field> Eq for ExactMatrix<F> {}

/// Sorts by index, merges duplicates and drops zeros.
pub fn normalize<F: Field>(f: F, mut v: Vec<(usize, F::Elem)>) -> SparseVec<F::Elem> {
    v.sort_by_key(|e| e.0);
    let mut out: SparseVec<F::Elem> = Vec::with_capacity(v.len());
    for (c, x) in v {
        match out.last_mut() {
            Some(last) if last.0 == c => last.1 = f.add(&last.1, &x),
            _ => out.push((c, x)),
        }
    }
    out.retain(|(_, x)| !f.is_zero(x));
    out
}

/// `a + s·b`
pub fn add_sparse<F: Field>(
    f: F,
    a: &SparseVec<F::Elem>,
    b: &SparseVec<F::Elem>,
    s: &F::Elem,
) -> SparseVec<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, f.mul(s, &b[j].1)));
            j += 1;
        } else {
            let v = f.add(&a[i].1, &f.mul(s, &b[j].1));
            if !f.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{PrimeField, Rational, Rationals};

    #[test]
    fn storage_follows_density() {
        let q = Rationals;
        let id = ExactMatrix::identity(q, 20);
        assert!(!id.is_dense());
        let id3 = ExactMatrix::identity(q, 3);
        assert!(id3.is_dense());
        assert_eq!(id3.get(1, 1), Rational::one());
        assert_eq!(id3.transpose(), id3);
    }

    #[test]
    fn multiplication_and_commutator() {
        let f = PrimeField::new(7).unwrap();
        let a = ExactMatrix::from_triplets(f, 2, 2, [(0, 1, 1)]).unwrap();
        let b = ExactMatrix::from_triplets(f, 2, 2, [(1, 0, 1)]).unwrap();
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab, ExactMatrix::from_triplets(f, 2, 2, [(0, 0, 1)]).unwrap());
        let c = a.commutator(&b).unwrap();
        assert_eq!(c.get(0, 0), 1);
        assert_eq!(c.get(1, 1), 6);
        assert!(a.mul(&a).unwrap().is_zero());
    }

    #[test]
    fn json_roundtrip() {
        let q = Rationals;
        let m = ExactMatrix::from_triplets(
            q,
            2,
            3,
            [(0, 2, Rational::new(-3, 4)), (1, 0, Rational::from_integer(5))],
        )
        .unwrap();
        let v = m.to_json();
        assert_eq!(v["entries"][0], json!([0, 2, "-3/4"]));
        assert_eq!(ExactMatrix::from_json(q, &v).unwrap(), m);
        assert!(ExactMatrix::from_triplets(q, 1, 1, [(1, 0, Rational::one())]).is_err());
    }

    #[test]
    fn flatten_roundtrip() {
        let f = PrimeField::new(3).unwrap();
        let m = ExactMatrix::from_triplets(f, 3, 4, [(2, 3, 2), (0, 1, 1)]).unwrap();
        let flat = m.flatten();
        assert_eq!(flat, vec![(1, 1), (11, 2)]);
        assert_eq!(ExactMatrix::from_flat(f, 3, 4, &flat), m);
    }
}
