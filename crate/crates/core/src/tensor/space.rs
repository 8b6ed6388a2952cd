use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::exactla::Field;
use crate::{Error, Result};

/// `i' = 2m + 1 - i`
pub fn prime(i: usize, m: usize) -> usize {
    2 * m + 1 - i
}

/// The two-index sign: `1` if `j = i'` and `i < j`, `-1` if `j = i'` and `i > j`, else `0`.
pub fn epsilon(i: usize, j: usize, m: usize) -> Result<i64> {
    if i == 0 || j == 0 || i > 2 * m || j > 2 * m {
        return Err(Error::OutOfRange(format!("epsilon({i}, {j}) with m = {m}")));
    }
    Ok(eps(i, j, m))
}

pub(crate) fn eps(i: usize, j: usize, m: usize) -> i64 {
    if j != prime(i, m) {
        0
    } else if i < j {
        1
    } else {
        -1
    }
}

/// V^{⊗n} with dim V = 2m. Basis tensors are numbered lexicographically,
/// first tensor factor most significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TensorSpace {
    pub m: usize,
    pub n: usize,
}

impl TensorSpace {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::OutOfRange("rank m must be positive".into()));
        }
        (2 * m)
            .checked_pow(n as u32)
            .filter(|&d| d <= u32::MAX as usize)
            .ok_or_else(|| Error::Guard(format!("(2m)^n overflows for m = {m}, n = {n}")))?;
        Ok(TensorSpace { m, n })
    }

    pub fn dim(&self) -> usize {
        (2 * self.m).pow(self.n as u32)
    }

    /// One-based letters of basis tensor `idx`.
    pub fn decode(&self, mut idx: usize) -> Vec<usize> {
        let q = 2 * self.m;
        let mut out = vec![0; self.n];
        for slot in out.iter_mut().rev() {
            *slot = idx % q + 1;
            idx /= q;
        }
        out
    }

    pub fn encode(&self, letters: &[usize]) -> usize {
        let q = 2 * self.m;
        letters.iter().fold(0, |acc, &l| acc * q + (l - 1))
    }

    fn place(&self, j: usize) -> usize {
        (2 * self.m).pow((self.n - j) as u32)
    }

    /// Letter at one-based position `j` of basis tensor `idx`.
    pub fn letter(&self, idx: usize, j: usize) -> usize {
        idx / self.place(j) % (2 * self.m) + 1
    }

    fn with_letters(&self, idx: usize, j: usize, a: usize, b: usize) -> usize {
        let (pj, pk) = (self.place(j), self.place(j + 1));
        let old = self.letter(idx, j) - 1;
        let old2 = self.letter(idx, j + 1) - 1;
        idx - old * pj - old2 * pk + (a - 1) * pj + (b - 1) * pk
    }

    pub(crate) fn check_position(&self, j: usize) -> Result<()> {
        if j == 0 || j >= self.n {
            return Err(Error::OutOfRange(format!("position {j} for n = {}", self.n)));
        }
        Ok(())
    }

    /// `v_idx · s_j` as (index, coefficient).
    pub fn s_image(&self, idx: usize, j: usize) -> (usize, i64) {
        let (a, b) = (self.letter(idx, j), self.letter(idx, j + 1));
        (self.with_letters(idx, j, b, a), -1)
    }

    /// `v_idx · e_j`: `ε_{i_j i_{j+1}}` times ω at positions `j, j+1`, where
    /// `ω = Σ_{k ≤ m} (v_{k'} ⊗ v_k − v_k ⊗ v_{k'})`.
    pub fn e_image(&self, idx: usize, j: usize) -> Vec<(usize, i64)> {
        let m = self.m;
        let e = eps(self.letter(idx, j), self.letter(idx, j + 1), m);
        if e == 0 {
            return Vec::new();
        }
        let mut out = Vec::with_capacity(2 * m);
        for k in 1..=m {
            out.push((self.with_letters(idx, j, prime(k, m), k), e));
            out.push((self.with_letters(idx, j, k, prime(k, m)), -e));
        }
        out.sort_unstable();
        out
    }
}

/// Finite combination of basis tensors of V^{⊗n}.
#[derive(Clone, Debug)]
pub struct TensorVec<F: Field> {
    field: F,
    space: TensorSpace,
    coeffs: BTreeMap<usize, F::Elem>,
}

impl<F: Field> PartialEq for TensorVec<F> {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.coeffs == other.coeffs
    }
}

impl<F: Field> Eq for TensorVec<F> {}

impl<F: Field> TensorVec<F> {
    pub fn zero(field: F, space: TensorSpace) -> Self {
        TensorVec {
            field,
            space,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis tensor `v_{i_1} ⊗ ⋯ ⊗ v_{i_n}` (one-based letters).
    pub fn basis(field: F, m: usize, letters: &[usize]) -> Result<Self> {
        let space = TensorSpace::new(m, letters.len())?;
        if letters.iter().any(|&l| l == 0 || l > 2 * m) {
            return Err(Error::OutOfRange(format!("letters {letters:?} with m = {m}")));
        }
        let mut v = Self::zero(field, space);
        v.coeffs.insert(space.encode(letters), field.one());
        Ok(v)
    }

    pub fn from_index(field: F, space: TensorSpace, idx: usize) -> Self {
        let mut v = Self::zero(field, space);
        v.coeffs.insert(idx, field.one());
        v
    }

    pub fn field(&self) -> F {
        self.field
    }
    pub fn space(&self) -> TensorSpace {
        self.space
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    pub fn coeffs(&self) -> &BTreeMap<usize, F::Elem> {
        &self.coeffs
    }

    pub fn coeff(&self, letters: &[usize]) -> F::Elem {
        self.coeffs
            .get(&self.space.encode(letters))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// Terms as (letters, coefficient), in basis order.
    pub fn terms(&self) -> Vec<(Vec<usize>, F::Elem)> {
        self.coeffs
            .iter()
            .map(|(&i, c)| (self.space.decode(i), c.clone()))
            .collect()
    }

    pub fn add_term(&mut self, idx: usize, c: &F::Elem) {
        let f = self.field;
        let slot = self.coeffs.entry(idx).or_insert_with(|| f.zero());
        *slot = f.add(slot, c);
        if f.is_zero(slot) {
            self.coeffs.remove(&idx);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.space != other.space {
            return Err(Error::Dimension("tensor spaces differ".into()));
        }
        let mut out = self.clone();
        for (&i, c) in &other.coeffs {
            out.add_term(i, c);
        }
        Ok(out)
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let mut out = Self::zero(self.field, self.space);
        for (&i, c) in &self.coeffs {
            out.add_term(i, &self.field.mul(c, s));
        }
        out
    }

    fn map_terms(&self, image: impl Fn(usize) -> Vec<(usize, i64)>) -> Self {
        let f = self.field;
        let mut out = Self::zero(f, self.space);
        for (&i, c) in &self.coeffs {
            for (k, e) in image(i) {
                out.add_term(k, &f.mul(c, &f.from_i64(e)));
            }
        }
        out
    }

    /// Right action of `s_j`: swap factors `j, j+1` and negate.
    pub fn act_s(&self, j: usize) -> Result<Self> {
        self.space.check_position(j)?;
        Ok(self.map_terms(|i| vec![self.space.s_image(i, j)]))
    }

    /// Right action of `e_j`: contract factors `j, j+1` and insert ω.
    pub fn act_e(&self, j: usize) -> Result<Self> {
        self.space.check_position(j)?;
        Ok(self.map_terms(|i| self.space.e_image(i, j)))
    }

    /// Keeps only basis tensors accepted by `keep`.
    pub fn filter(&self, keep: impl Fn(&[usize]) -> bool) -> Self {
        let mut out = self.clone();
        out.coeffs.retain(|&i, _| keep(&self.space.decode(i)));
        out
    }

    /// `[[letters, coefficient], ...]`
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .into_iter()
                .map(|(l, c)| json!([l, self.field.render(&c)]))
                .collect(),
        )
    }
}

/// Number of disjoint position pairs `(s, t)` with `i_s = i_t'`, maximized.
///
/// Positions holding `k` can only pair with positions holding `k'`, so the
/// maximum matching is `Σ_{k ≤ m} min(#k, #k')`.
pub fn symplectic_length(letters: &[usize], m: usize) -> usize {
    let w = weight(letters, m);
    (1..=m).map(|k| w[k - 1].min(w[prime(k, m) - 1])).sum()
}

/// Occurrence counts `(λ_1, .., λ_{2m})`.
pub fn weight(letters: &[usize], m: usize) -> Vec<usize> {
    let mut w = vec![0; 2 * m];
    for &l in letters {
        w[l - 1] += 1;
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Rationals;

    #[test]
    fn epsilon_table() {
        assert_eq!(epsilon(1, 4, 2).unwrap(), 1);
        assert_eq!(epsilon(4, 1, 2).unwrap(), -1);
        assert_eq!(epsilon(1, 1, 2).unwrap(), 0);
        assert_eq!(epsilon(1, 2, 1).unwrap(), 1);
        assert!(epsilon(0, 1, 2).is_err());
        assert!(epsilon(1, 5, 2).is_err());
    }

    #[test]
    fn encoding() {
        let s = TensorSpace::new(2, 3).unwrap();
        for idx in 0..s.dim() {
            assert_eq!(s.encode(&s.decode(idx)), idx);
        }
        assert_eq!(s.decode(1), vec![1, 1, 2]);
        assert_eq!(s.letter(s.encode(&[3, 1, 4]), 1), 3);
    }

    #[test]
    fn generator_actions() {
        let q = Rationals;
        let v = TensorVec::basis(q, 2, &[1, 2]).unwrap();
        let sv = v.act_s(1).unwrap();
        assert_eq!(sv.terms(), vec![(vec![2, 1], q.from_i64(-1))]);
        assert_eq!(sv.act_s(1).unwrap(), v);
        let w = TensorVec::basis(q, 2, &[1, 1]).unwrap();
        assert_eq!(w.act_s(1).unwrap(), w.scale(&q.from_i64(-1)));
        assert!(v.act_e(1).unwrap().is_zero());
        assert!(v.act_s(2).is_err());

        let u = TensorVec::basis(q, 2, &[1, 4]).unwrap();
        let ue = u.act_e(1).unwrap();
        let mut omega = TensorVec::zero(q, TensorSpace::new(2, 2).unwrap());
        for k in 1..=2 {
            let s = omega.space();
            omega.add_term(s.encode(&[prime(k, 2), k]), &q.one());
            omega.add_term(s.encode(&[k, prime(k, 2)]), &q.from_i64(-1));
        }
        assert_eq!(ue, omega);
        assert_eq!(ue.act_e(1).unwrap(), ue.scale(&q.from_i64(-4)));
    }

    fn brute_length(letters: &[usize], m: usize) -> usize {
        fn go(free: &mut Vec<bool>, letters: &[usize], m: usize) -> usize {
            let Some(s) = free.iter().position(|&b| b) else { return 0 };
            free[s] = false;
            let mut best = go(free, letters, m);
            for t in s + 1..letters.len() {
                if free[t] && letters[s] == prime(letters[t], m) {
                    free[t] = false;
                    best = best.max(1 + go(free, letters, m));
                    free[t] = true;
                }
            }
            free[s] = true;
            best
        }
        go(&mut vec![true; letters.len()], letters, m)
    }

    #[test]
    fn symplectic_length_matches_matching() {
        assert_eq!(symplectic_length(&[1, 2], 1), 1);
        assert_eq!(symplectic_length(&[1, 2], 2), 0);
        assert_eq!(symplectic_length(&[1, 2, 1], 1), 1);
        for m in 1..=2 {
            let s = TensorSpace::new(m, 4).unwrap();
            for idx in 0..s.dim() {
                let l = s.decode(idx);
                assert_eq!(symplectic_length(&l, m), brute_length(&l, m));
            }
        }
    }

    #[test]
    fn weights() {
        assert_eq!(weight(&[1, 1, 2], 1), vec![2, 1]);
        let c_hat = [2, 3];
        assert_eq!(weight(&c_hat, 2), vec![0, 1, 1, 0]);
    }
}
