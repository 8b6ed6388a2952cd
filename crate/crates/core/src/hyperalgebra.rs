//! Chevalley generators of sp_{2m} for the form J, their divided powers on
//! V^{⊗n}, and the comparisons with the Brauer action.
//!
//! Generators are written in the basis `v_1..v_{2m}` that carries the Brauer
//! action, so commutators can be compared entry by entry.

use serde::Serialize;
use serde_json::Value;

use crate::brauer::{enumerate, BrauerElement, Gen};
use crate::exactla::{
    algebra_closure, commutant, nullspace, ExactMatrix, Field, SpanBasis, SparseVec,
};
use crate::tensor::{phi_diagram, phi_generators, prime, TensorSpace};
use crate::{Error, Result};

/// Default cap on `(2m)^{2n}`, the number of unknowns in a commutant solve.
pub const DEFAULT_MAX_DIM: usize = 5000;

/// Gram matrix of the skew form: `(v_i, v_{i'}) = 1 = −(v_{i'}, v_i)` for `i ≤ m`.
pub fn gram_j<F: Field>(field: F, m: usize) -> ExactMatrix<F> {
    let trips = (1..=2 * m).map(|i| {
        let v = if i <= m { 1 } else { -1 };
        (i - 1, prime(i, m) - 1, field.from_i64(v))
    });
    ExactMatrix::from_triplets(field, 2 * m, 2 * m, trips).expect("indices in range")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ChevKind {
    E,
    F,
}

/// A Chevalley generator acting on V; `matrix` uses the column convention
/// (`g v_j = Σ_i matrix[i][j] v_i`).
#[derive(Debug, Clone)]
pub struct ChevGen<F: Field> {
    pub kind: ChevKind,
    pub i: usize,
    pub matrix: ExactMatrix<F>,
}

impl<F: Field> ChevGen<F> {
    pub fn label(&self) -> String {
        let k = match self.kind {
            ChevKind::E => 'e',
            ChevKind::F => 'f',
        };
        format!("{k}{}", self.i)
    }
}

/// For `i < m`: `e_i` sends `v_{i+1} ↦ v_i`, `v_{i'} ↦ −v_{(i+1)'}` and `f_i`
/// sends `v_i ↦ v_{i+1}`, `v_{(i+1)'} ↦ −v_{i'}`. `e_m: v_{m'} ↦ v_m` and
/// `f_m: v_m ↦ v_{m'}`. Every other basis vector goes to zero.
pub fn chevalley_gen<F: Field>(field: F, kind: ChevKind, i: usize, m: usize) -> Result<ChevGen<F>> {
    if i == 0 || i > m {
        return Err(Error::OutOfRange(format!("simple root {i} for m = {m}")));
    }
    let p = |k: usize| prime(k, m);
    // (source, target, coefficient), one-based
    let maps: Vec<(usize, usize, i64)> = match (kind, i < m) {
        (ChevKind::E, true) => vec![(i + 1, i, 1), (p(i), p(i + 1), -1)],
        (ChevKind::F, true) => vec![(i, i + 1, 1), (p(i + 1), p(i), -1)],
        (ChevKind::E, false) => vec![(p(m), m, 1)],
        (ChevKind::F, false) => vec![(m, p(m), 1)],
    };
    let trips = maps.into_iter().map(|(s, t, c)| (t - 1, s - 1, field.from_i64(c)));
    Ok(ChevGen {
        kind,
        i,
        matrix: ExactMatrix::from_triplets(field, 2 * m, 2 * m, trips)?,
    })
}

pub fn chevalley_gens<F: Field>(field: F, m: usize) -> Vec<ChevGen<F>> {
    [ChevKind::E, ChevKind::F]
        .into_iter()
        .flat_map(|k| (1..=m).map(move |i| chevalley_gen(field, k, i, m).expect("index in range")))
        .collect()
}

/// Which membership identities a 2m×2m matrix satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpMembership {
    /// `gᵀ J g = J`
    pub group: bool,
    /// `gᵀ J + J g = 0`
    pub algebra: bool,
}

pub fn sp_check<F: Field>(g: &ExactMatrix<F>, j: &ExactMatrix<F>) -> Result<SpMembership> {
    if !g.is_square() || g.rows() != j.rows() || !j.is_square() {
        return Err(Error::Dimension(format!(
            "{}x{} against a {}x{} form",
            g.rows(),
            g.cols(),
            j.rows(),
            j.cols()
        )));
    }
    let gt = g.transpose();
    Ok(SpMembership {
        group: gt.mul(j)?.mul(g)? == *j,
        algebra: gt.mul(j)?.add(&j.mul(g)?)?.is_zero(),
    })
}

/// `g^{(k)}` on V^{⊗n} in the row convention used for the Brauer action.
///
/// Since `g² = 0` on V, this is the sum over k-subsets of positions of `g`
/// applied at each chosen position. `k = 0` gives the identity and `k > n` zero.
pub fn divided_power_tensor<F: Field>(g: &ChevGen<F>, k: usize, n: usize) -> Result<ExactMatrix<F>> {
    let field = g.matrix.field();
    let m = g.matrix.rows() / 2;
    let space = TensorSpace::new(m, n)?;
    // row image of each letter under g: at most one basis vector since g is a signed partial map
    let gt = g.matrix.transpose();
    let image: Vec<Option<(usize, F::Elem)>> = (0..2 * m)
        .map(|a| {
            let r = gt.row(a);
            debug_assert!(r.len() <= 1);
            r.into_iter().next()
        })
        .collect();
    let rows: Vec<SparseVec<F::Elem>> = (0..space.dim())
        .map(|idx| {
            let letters = space.decode(idx);
            let mut out: Vec<(usize, F::Elem)> = Vec::new();
            for subset in k_subsets(n, k) {
                let mut new = letters.clone();
                let mut coeff = field.one();
                let mut alive = true;
                for &pos in &subset {
                    match &image[letters[pos] - 1] {
                        Some((b, c)) => {
                            new[pos] = b + 1;
                            coeff = field.mul(&coeff, c);
                        }
                        None => {
                            alive = false;
                            break;
                        }
                    }
                }
                if alive {
                    out.push((space.encode(&new), coeff));
                }
            }
            crate::exactla::normalize(field, out)
        })
        .collect();
    Ok(ExactMatrix::from_sparse_rows(field, space.dim(), rows))
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for t in i + 1..k {
            cur[t] = cur[t - 1] + 1;
        }
    }
}

/// `(label, g^{(k)})` for every Chevalley generator and `1 ≤ k ≤ n`.
pub fn divided_power_generators<F: Field>(field: F, m: usize, n: usize) -> Result<Vec<(String, ExactMatrix<F>)>> {
    let mut out = Vec::new();
    for g in chevalley_gens(field, m) {
        for k in 1..=n {
            out.push((format!("{}^({k})", g.label()), divided_power_tensor(&g, k, n)?));
        }
    }
    Ok(out)
}

fn guard(m: usize, n: usize, max_dim: usize) -> Result<usize> {
    let d = TensorSpace::new(m, n)?.dim();
    match d.checked_mul(d) {
        Some(u) if u <= max_dim => Ok(d),
        _ => Err(Error::Guard(format!(
            "(2m)^(2n) = {} for (m, n) = ({m}, {n}) exceeds the limit {max_dim}",
            d.saturating_mul(d)
        ))),
    }
}

/// Endomorphisms of V^{⊗n} commuting with every divided power.
pub fn sp_commutant<F: Field>(field: F, m: usize, n: usize, max_dim: usize) -> Result<SpanBasis<F>> {
    let d = guard(m, n, max_dim)?;
    let gens: Vec<_> = divided_power_generators(field, m, n)?.into_iter().map(|g| g.1).collect();
    commutant(field, d, &gens)
}

/// Endomorphisms of V^{⊗n} commuting with the Brauer generators.
pub fn brauer_commutant<F: Field>(field: F, m: usize, n: usize, max_dim: usize) -> Result<SpanBasis<F>> {
    let d = guard(m, n, max_dim)?;
    let gens: Vec<_> = phi_generators(field, m, n)?.into_iter().map(|g| g.1).collect();
    commutant(field, d, &gens)
}

/// Unital algebra generated by the divided powers.
pub fn hyperalgebra_image<F: Field>(field: F, m: usize, n: usize, max_dim: usize) -> Result<SpanBasis<F>> {
    let d = guard(m, n, max_dim)?;
    let gens: Vec<_> = divided_power_generators(field, m, n)?.into_iter().map(|g| g.1).collect();
    algebra_closure(field, d, &gens, true)
}

/// Span of `φ(d)` over all n-diagrams, as flattened matrices.
pub fn phi_span<F: Field>(field: F, m: usize, n: usize) -> Result<SpanBasis<F>> {
    let dim = TensorSpace::new(m, n)?.dim();
    let flat: Vec<_> = enumerate(n)?
        .iter()
        .map(|d| phi_diagram(field, m, d).map(|x| x.flatten()))
        .collect::<Result<_>>()?;
    SpanBasis::from_vectors(field, dim * dim, flat)
}

/// Counts of exact commutator checks between the two actions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BimoduleCheck {
    pub pairs: usize,
    pub nonzero: usize,
}

/// Every `φ(s_j)`, `φ(e_j)` against every divided power.
pub fn bimodule_check<F: Field>(field: F, m: usize, n: usize) -> Result<BimoduleCheck> {
    let brauer = phi_generators(field, m, n)?;
    let hyper = divided_power_generators(field, m, n)?;
    let mut out = BimoduleCheck { pairs: 0, nonzero: 0 };
    for (_, b) in &brauer {
        for (_, h) in &hyper {
            out.pairs += 1;
            if !b.commutator(h)?.is_zero() {
                out.nonzero += 1;
            }
        }
    }
    Ok(out)
}

/// The element `(1+s_1)(1+s_2+s_2s_1) + (1+s_2+s_1s_2) e_1 (1+s_2+s_2s_1)` of B_3(x).
pub fn alpha<F: Field>(field: F, x: F::Elem) -> Result<BrauerElement<F>> {
    let el = |w: &[Gen]| BrauerElement::word(field, 3, x.clone(), w);
    let sum = |ws: &[&[Gen]]| -> Result<BrauerElement<F>> {
        let mut acc = BrauerElement::zero(field, 3, x.clone());
        for w in ws {
            acc = acc.add(&el(w)?)?;
        }
        Ok(acc)
    };
    let (s1, s2, e1) = (Gen::s(1), Gen::s(2), Gen::e(1));
    let a = sum(&[&[], &[s1]])?;
    let b = sum(&[&[], &[s2], &[s2, s1]])?;
    let c = sum(&[&[], &[s2], &[s1, s2]])?;
    let first = a.multiply(&b)?;
    let second = c.multiply(&el(&[e1])?)?.multiply(&b)?;
    first.add(&second)
}

/// Results of comparing the Brauer image with the commutant of the divided powers.
#[derive(Debug, Clone, Serialize)]
pub struct DualityReport {
    pub m: usize,
    pub n: usize,
    pub field: String,
    #[serde(rename = "dim_B")]
    pub dim_b: usize,
    pub rank_phi: usize,
    pub dim_commutant: usize,
    pub kernel_dim: usize,
    pub kernel_basis: Vec<Value>,
    pub containments: Containments,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Containments {
    pub phi_in_comm: bool,
    pub comm_in_phi: bool,
}

impl DualityReport {
    pub fn equal(&self) -> bool {
        self.rank_phi == self.dim_commutant && self.containments.phi_in_comm && self.containments.comm_in_phi
    }
}

/// Kernel of `φ` on B_n(−2m) as coefficient vectors over [`enumerate`]`(n)`.
pub fn phi_kernel<F: Field>(field: F, m: usize, n: usize) -> Result<Vec<BrauerElement<F>>> {
    let ds = enumerate(n)?;
    let dim = TensorSpace::new(m, n)?.dim();
    // columns indexed by diagrams, rows by matrix entries
    let mut trips = Vec::new();
    for (k, d) in ds.iter().enumerate() {
        for (c, v) in phi_diagram(field, m, d)?.flatten() {
            trips.push((c, k, v));
        }
    }
    let mt = ExactMatrix::from_triplets(field, dim * dim, ds.len(), trips)?;
    let x = field.from_i64(-2 * m as i64);
    nullspace(&mt)
        .vectors()
        .iter()
        .map(|v| {
            let mut el = BrauerElement::zero(field, n, x.clone());
            for (k, c) in v {
                el = el.add(&BrauerElement::from_diagram(field, x.clone(), ds[*k].clone()).scale(c))?;
            }
            Ok(el)
        })
        .collect()
}

pub fn duality_report<F: Field>(field: F, m: usize, n: usize, max_dim: usize) -> Result<DualityReport> {
    let comm = sp_commutant(field, m, n, max_dim)?;
    let phis = phi_span(field, m, n)?;
    let kernel = phi_kernel(field, m, n)?;
    Ok(DualityReport {
        m,
        n,
        field: field.spec().to_string(),
        dim_b: enumerate(n)?.len(),
        rank_phi: phis.len(),
        dim_commutant: comm.len(),
        kernel_dim: kernel.len(),
        kernel_basis: kernel.iter().map(BrauerElement::to_json).collect(),
        containments: Containments {
            phi_in_comm: comm.contains_span(&phis)?,
            comm_in_phi: phis.contains_span(&comm)?,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rank, PrimeField, Rationals};
    use crate::tensor::phi;

    #[test]
    fn generators_lie_in_sp() {
        let q = Rationals;
        for m in 1..=4 {
            let j = gram_j(q, m);
            assert!(j.mul(&j).unwrap() == ExactMatrix::identity(q, 2 * m).scale(&q.from_i64(-1)));
            assert_eq!(j.transpose(), j.scale(&q.from_i64(-1)));
            for g in chevalley_gens(q, m) {
                assert!(g.matrix.mul(&g.matrix).unwrap().is_zero());
                assert!(sp_check(&g.matrix, &j).unwrap().algebra, "{}", g.label());
            }
        }
        let e = chevalley_gen(q, ChevKind::E, 1, 1).unwrap();
        assert_eq!(e.matrix.triplets(), vec![(0, 1, q.one())]);
        assert!(chevalley_gen(q, ChevKind::F, 3, 2).is_err());
    }

    #[test]
    fn exponentials_lie_in_group() {
        let q = Rationals;
        let j = gram_j(q, 2);
        assert!(sp_check(&ExactMatrix::identity(q, 4), &j).unwrap().group);
        let e1 = chevalley_gen(q, ChevKind::E, 1, 2).unwrap().matrix;
        assert!(sp_check(&e1, &j).unwrap().algebra);
        for t in 1..=3 {
            let g = ExactMatrix::identity(q, 4).add(&e1.scale(&q.from_i64(t))).unwrap();
            assert!(sp_check(&g, &j).unwrap().group);
        }
    }

    #[test]
    fn divided_powers_match_powers() {
        let q = Rationals;
        for (m, n) in [(1, 3), (2, 2), (2, 3)] {
            for g in chevalley_gens(q, m) {
                assert_eq!(divided_power_tensor(&g, 0, n).unwrap(), ExactMatrix::identity(q, (2 * m).pow(n as u32)));
                let d1 = divided_power_tensor(&g, 1, n).unwrap();
                let mut power = d1.clone();
                for k in 2..=n + 1 {
                    power = power.mul(&d1).unwrap();
                    let fact: i64 = (1..=k as i64).product();
                    let dk = divided_power_tensor(&g, k, n).unwrap();
                    assert_eq!(dk.scale(&q.from_i64(fact)), power);
                }
            }
        }
        let q = Rationals;
        let g = chevalley_gen(q, ChevKind::F, 1, 1).unwrap();
        let gt = g.matrix.transpose();
        let mut kron = Vec::new();
        for (a, b, x) in gt.triplets() {
            for (c, d, y) in gt.triplets() {
                kron.push((a * 2 + c, b * 2 + d, q.mul(&x, &y)));
            }
        }
        let kron = ExactMatrix::from_triplets(q, 4, 4, kron).unwrap();
        assert_eq!(divided_power_tensor(&g, 2, 2).unwrap(), kron);
    }

    #[test]
    fn actions_commute() {
        let f3 = PrimeField::new(3).unwrap();
        for (m, n) in [(1, 2), (2, 2), (1, 3)] {
            let r = bimodule_check(Rationals, m, n).unwrap();
            assert_eq!(r.nonzero, 0);
            assert_eq!(bimodule_check(f3, m, n).unwrap().nonzero, 0);
        }
    }

    #[test]
    fn small_commutants() {
        let q = Rationals;
        assert_eq!(sp_commutant(q, 1, 1, DEFAULT_MAX_DIM).unwrap().len(), 1);
        assert_eq!(sp_commutant(q, 2, 2, DEFAULT_MAX_DIM).unwrap().len(), 3);
        assert_eq!(hyperalgebra_image(q, 1, 1, DEFAULT_MAX_DIM).unwrap().len(), 4);
        assert!(matches!(sp_commutant(q, 3, 3, DEFAULT_MAX_DIM), Err(Error::Guard(_))));
    }

    #[test]
    fn alpha_is_killed() {
        let q = Rationals;
        let a = alpha(q, q.from_i64(-4)).unwrap();
        assert!(!a.is_zero());
        assert!(phi(&a, 2).unwrap().is_zero());
        let ker = phi_kernel(q, 2, 3).unwrap();
        assert_eq!(ker.len(), 1);
        // the kernel vector is a multiple of α
        let (d0, c0) = a.terms().iter().next().unwrap();
        let k = &ker[0];
        let s = q.mul(c0, &q.inv(&k.coeff(d0)).unwrap());
        assert_eq!(k.scale(&s), a);
        let flat: Vec<_> = enumerate(3).unwrap().iter().map(|d| phi_diagram(q, 2, d).unwrap().flatten()).collect();
        let mat = ExactMatrix::from_sparse_rows(q, 64 * 64, flat);
        assert_eq!(rank(&mat), 14);
    }
}
