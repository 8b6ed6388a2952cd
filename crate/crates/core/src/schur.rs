//! The Schur algebra S(2m, n) on its orbit basis ξ and the linear conditions
//! cutting out the symplectic Schur algebra S^s(m, n).
//!
//! Coefficients `a_{i,j}` are indexed by S_n-orbits of pairs of words. An
//! orbit is the multiset of its column pairs `(i_t, j_t)`, so sorting the
//! columns gives the lexicographically least representative.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;
use serde_json::{json, Value};

use crate::exactla::{normalize, ExactMatrix, Field, SpanBasis, SparseVec};
use crate::hyperalgebra::brauer_commutant;
use crate::tensor::{prime, TensorSpace};
use crate::{Error, Result};

/// Largest number of orbits [`orbits`] will list.
pub const MAX_ORBITS: u128 = 1 << 20;

/// Canonical representative of an orbit in I²(2m, n); letters are one-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitIndex {
    i: Vec<usize>,
    j: Vec<usize>,
}

impl OrbitIndex {
    pub fn canonical(i: &[usize], j: &[usize]) -> Result<Self> {
        if i.len() != j.len() {
            return Err(Error::Dimension(format!("words of lengths {} and {}", i.len(), j.len())));
        }
        let mut cols: Vec<(usize, usize)> = i.iter().copied().zip(j.iter().copied()).collect();
        cols.sort_unstable();
        Ok(Self::from_sorted(&cols))
    }

    fn from_sorted(cols: &[(usize, usize)]) -> Self {
        OrbitIndex {
            i: cols.iter().map(|c| c.0).collect(),
            j: cols.iter().map(|c| c.1).collect(),
        }
    }

    pub fn i(&self) -> &[usize] {
        &self.i
    }
    pub fn j(&self) -> &[usize] {
        &self.j
    }
    pub fn n(&self) -> usize {
        self.i.len()
    }

    fn columns(&self) -> BTreeMap<(usize, usize), usize> {
        let mut c = BTreeMap::new();
        for p in self.i.iter().copied().zip(self.j.iter().copied()) {
            *c.entry(p).or_insert(0) += 1;
        }
        c
    }

    pub fn to_json(&self) -> Value {
        json!([self.i, self.j])
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, t| acc * (n - t) / (t + 1))
}

/// Number of orbits, `C((2m)² + n − 1, n)`.
pub fn orbit_count(m: usize, n: usize) -> u128 {
    let q = (2 * m as u128).pow(2);
    binomial(q + n as u128 - 1, n as u128)
}

/// All orbits in increasing order of their representatives.
pub fn orbits(m: usize, n: usize) -> Result<Vec<OrbitIndex>> {
    let count = orbit_count(m, n);
    if count > MAX_ORBITS {
        return Err(Error::Guard(format!("{count} orbits for (m, n) = ({m}, {n}) exceeds {MAX_ORBITS}")));
    }
    let pairs: Vec<(usize, usize)> = (1..=2 * m)
        .flat_map(|a| (1..=2 * m).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::with_capacity(count as usize);
    let mut cur = Vec::with_capacity(n);
    multisets(&pairs, 0, n, &mut cur, &mut out);
    out.sort_unstable();
    Ok(out)
}

fn multisets(pairs: &[(usize, usize)], from: usize, left: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<OrbitIndex>) {
    if left == 0 {
        out.push(OrbitIndex::from_sorted(cur));
        return;
    }
    for k in from..pairs.len() {
        cur.push(pairs[k]);
        multisets(pairs, k, left - 1, cur, out);
        cur.pop();
    }
}

/// Evaluation of `ξ_{i,j}` on V^{⊗n} as a 0/1 matrix in the row convention:
/// row `a` has a 1 in column `b` exactly when `(a, b) ∼ (i, j)`.
pub fn xi_matrix<F: Field>(field: F, o: &OrbitIndex, m: usize) -> Result<ExactMatrix<F>> {
    let n = o.n();
    let space = TensorSpace::new(m, n)?;
    if o.i.iter().chain(&o.j).any(|&l| l == 0 || l > 2 * m) {
        return Err(Error::OutOfRange(format!("orbit {o:?} has letters outside 1..{}", 2 * m)));
    }
    let mut sorted_i = o.i.clone();
    sorted_i.sort_unstable();
    let mut trips = Vec::new();
    for a in 0..space.dim() {
        let letters = space.decode(a);
        let mut s = letters.clone();
        s.sort_unstable();
        if s != sorted_i {
            continue;
        }
        let mut avail = o.columns();
        let mut b = vec![0; n];
        completions(&letters, 0, &mut avail, &mut b, &mut |b| {
            trips.push((a, space.encode(b), field.one()));
        });
    }
    ExactMatrix::from_triplets(field, space.dim(), space.dim(), trips)
}

fn completions(
    a: &[usize],
    pos: usize,
    avail: &mut BTreeMap<(usize, usize), usize>,
    b: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if pos == a.len() {
        emit(b);
        return;
    }
    let choices: Vec<(usize, usize)> = avail
        .range((a[pos], 0)..=(a[pos], usize::MAX))
        .filter(|(_, &c)| c > 0)
        .map(|(&k, _)| k)
        .collect();
    for key in choices {
        *avail.get_mut(&key).unwrap() -= 1;
        b[pos] = key.1;
        completions(a, pos + 1, avail, b, emit);
        *avail.get_mut(&key).unwrap() += 1;
    }
}

/// `ε_k = ε_{k,k'}`: `+1` for `k ≤ m`, `−1` otherwise.
///
/// Negating every `ε_k` negates each condition, so the other sign choice
/// cuts out the same subspace.
fn eps_k(k: usize, m: usize) -> i64 {
    if k <= m {
        1
    } else {
        -1
    }
}

/// Row counts contributed by one family of conditions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyCount {
    pub family: usize,
    /// instances enumerated
    pub instances: usize,
    /// nonzero rows not already produced earlier
    pub distinct: usize,
}

/// The conditions as integer rows over the orbit list.
#[derive(Debug, Clone)]
pub struct SchurConditions {
    pub m: usize,
    pub n: usize,
    pub orbits: Vec<OrbitIndex>,
    pub rows: Vec<SparseVec<i64>>,
    pub families: Vec<FamilyCount>,
}

impl SchurConditions {
    pub fn matrix<F: Field>(&self, field: F) -> ExactMatrix<F> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|(c, v)| (*c, field.from_i64(*v))).collect())
            .collect();
        ExactMatrix::from_sparse_rows(field, self.orbits.len(), rows)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "m": self.m,
            "n": self.n,
            "orbits": self.orbits.iter().map(OrbitIndex::to_json).collect::<Vec<_>>(),
            "families": self.families,
            "matrix": self.matrix(crate::exactla::Rationals).to_json(),
        })
    }
}

fn words(m: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=2 * m).map(move |l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
    }
    out
}

fn cat(head: &[usize], tail: &[usize]) -> Vec<usize> {
    let mut v = head.to_vec();
    v.extend_from_slice(tail);
    v
}

/// The three families of linear conditions on the coefficients `a_{i,j}`.
/// Empty for `n < 2`.
pub fn symplectic_conditions(m: usize, n: usize) -> Result<SchurConditions> {
    let orbits = orbits(m, n)?;
    let index: HashMap<OrbitIndex, usize> = orbits.iter().cloned().enumerate().map(|(k, o)| (o, k)).collect();
    let mut families = Vec::new();
    let mut seen = BTreeSet::new();
    let mut rows = Vec::new();
    if n >= 2 {
        let col = |i: &[usize], j: &[usize]| index[&OrbitIndex::canonical(i, j).expect("equal lengths")];
        let tails = words(m, n - 2);
        let full = words(m, n);
        let ks: Vec<usize> = (1..=2 * m).collect();
        let mut push_family = |family: usize, raw: Vec<Vec<(usize, i64)>>| {
            let mut count = FamilyCount { family, instances: raw.len(), distinct: 0 };
            for r in raw {
                let mut r = r;
                r.sort_unstable();
                let mut merged: Vec<(usize, i64)> = Vec::new();
                for (c, v) in r {
                    match merged.last_mut() {
                        Some(last) if last.0 == c => last.1 += v,
                        _ => merged.push((c, v)),
                    }
                }
                merged.retain(|t| t.1 != 0);
                if !merged.is_empty() && seen.insert(merged.clone()) {
                    count.distinct += 1;
                    rows.push(merged);
                }
            }
            families.push(count);
        };
        let admissible = |w: &[usize]| w[0] != prime(w[1], m);

        let mut raw = Vec::new();
        for i in full.iter().filter(|w| admissible(w)) {
            for t in &tails {
                raw.push(ks.iter().map(|&k| (col(i, &cat(&[k, prime(k, m)], t)), eps_k(k, m))).collect());
            }
        }
        push_family(1, raw);

        let mut raw = Vec::new();
        for j in full.iter().filter(|w| admissible(w)) {
            for t in &tails {
                raw.push(ks.iter().map(|&k| (col(&cat(&[k, prime(k, m)], t), j), eps_k(k, m))).collect());
            }
        }
        push_family(2, raw);

        let mut raw = Vec::new();
        for i in 1..=m {
            for j in 1..=m {
                for ti in &tails {
                    for tj in &tails {
                        let mut r = Vec::new();
                        for &k in &ks {
                            let kk = [k, prime(k, m)];
                            r.push((col(&cat(&[i, prime(i, m)], ti), &cat(&kk, tj)), eps_k(k, m)));
                            r.push((col(&cat(&kk, ti), &cat(&[j, prime(j, m)], tj)), -eps_k(k, m)));
                        }
                        raw.push(r);
                    }
                }
            }
        }
        push_family(3, raw);
    }
    Ok(SchurConditions { m, n, orbits, rows, families })
}

/// Flattened evaluation `Σ a_o ξ_o` of an orbit-coefficient vector.
///
/// Each matrix position `(a, b)` lies in exactly one orbit, so the entry is
/// the coefficient of that orbit.
pub fn evaluate<F: Field>(field: F, m: usize, n: usize, coeffs: &[(usize, F::Elem)], orbits: &[OrbitIndex]) -> Result<SparseVec<F::Elem>> {
    let space = TensorSpace::new(m, n)?;
    let d = space.dim();
    let by_orbit: HashMap<&OrbitIndex, &F::Elem> = coeffs.iter().map(|(k, c)| (&orbits[*k], c)).collect();
    let mut out = Vec::new();
    for a in 0..d {
        let la = space.decode(a);
        for b in 0..d {
            let o = OrbitIndex::canonical(&la, &space.decode(b))?;
            if let Some(c) = by_orbit.get(&o) {
                out.push((a * d + b, (*c).clone()));
            }
        }
    }
    Ok(normalize(field, out))
}

/// Coefficient basis of S^s(m, n) and its evaluation on tensor space.
#[derive(Debug, Clone)]
pub struct SchurBasis<F: Field> {
    pub conditions: SchurConditions,
    pub coefficients: SpanBasis<F>,
    /// flattened evaluations, one per coefficient vector, same order
    pub images: Vec<SparseVec<F::Elem>>,
}

impl<F: Field> SchurBasis<F> {
    pub fn image_span(&self) -> Result<SpanBasis<F>> {
        let d = self.coefficients.field();
        let dim = TensorSpace::new(self.conditions.m, self.conditions.n)?.dim();
        SpanBasis::from_vectors(d, dim * dim, self.images.clone())
    }

    pub fn image_matrix(&self, k: usize) -> Result<ExactMatrix<F>> {
        let dim = TensorSpace::new(self.conditions.m, self.conditions.n)?.dim();
        Ok(ExactMatrix::from_flat(self.coefficients.field(), dim, dim, &self.images[k]))
    }
}

fn guard(m: usize, n: usize, max_dim: usize) -> Result<()> {
    let d = TensorSpace::new(m, n)?.dim();
    match d.checked_mul(d) {
        Some(u) if u <= max_dim => Ok(()),
        _ => Err(Error::Guard(format!(
            "(2m)^(2n) = {} for (m, n) = ({m}, {n}) exceeds the limit {max_dim}",
            d.saturating_mul(d)
        ))),
    }
}

pub fn symplectic_schur_basis<F: Field>(field: F, m: usize, n: usize, max_dim: usize) -> Result<SchurBasis<F>> {
    guard(m, n, max_dim)?;
    let conditions = symplectic_conditions(m, n)?;
    let coefficients = crate::exactla::nullspace(&conditions.matrix(field));
    let images = coefficients
        .vectors()
        .iter()
        .map(|v| evaluate(field, m, n, v, &conditions.orbits))
        .collect::<Result<_>>()?;
    Ok(SchurBasis { conditions, coefficients, images })
}

/// Comparison of the evaluated S^s(m, n) with the Brauer commutant.
#[derive(Debug, Clone, Serialize)]
pub struct SchurReport {
    pub m: usize,
    pub n: usize,
    pub field: String,
    pub orbits: usize,
    pub families: Vec<FamilyCount>,
    pub condition_rows: usize,
    pub dim_schur: usize,
    pub rank_evaluation: usize,
    pub dim_brauer_commutant: usize,
    pub image_in_commutant: bool,
    pub commutant_in_image: bool,
}

impl SchurReport {
    pub fn pass(&self) -> bool {
        self.dim_schur == self.dim_brauer_commutant
            && self.rank_evaluation == self.dim_schur
            && self.image_in_commutant
            && self.commutant_in_image
    }
}

pub fn schur_report<F: Field>(field: F, m: usize, n: usize, max_dim: usize) -> Result<SchurReport> {
    let basis = symplectic_schur_basis(field, m, n, max_dim)?;
    let image = basis.image_span()?;
    let comm = brauer_commutant(field, m, n, max_dim)?;
    Ok(SchurReport {
        m,
        n,
        field: field.spec().to_string(),
        orbits: basis.conditions.orbits.len(),
        families: basis.conditions.families.clone(),
        condition_rows: basis.conditions.rows.len(),
        dim_schur: basis.coefficients.len(),
        rank_evaluation: image.len(),
        dim_brauer_commutant: comm.len(),
        image_in_commutant: comm.contains_span(&image)?,
        commutant_in_image: image.contains_span(&comm)?,
    })
}
