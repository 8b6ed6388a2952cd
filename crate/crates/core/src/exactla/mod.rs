//! Exact linear algebra over ℚ and prime fields.

mod field;
mod matrix;
mod rational;
mod span;

pub use field::{is_prime, Field, FieldSpec, PrimeField, Rationals, MAX_PRIME};
pub use matrix::{add_sparse, normalize, ExactMatrix, SparseVec};
pub use rational::{ParseRationalError, Rational};
pub use span::{Echelon, SpanBasis};

use crate::{Error, Result};

pub fn rank<F: Field>(m: &ExactMatrix<F>) -> usize {
    let mut e = Echelon::new(m.field(), m.cols());
    for r in 0..m.rows() {
        e.insert(&m.row(r));
    }
    e.rank()
}

/// Basis of `{v : M v = 0}`, one vector per free column.
pub fn nullspace<F: Field>(m: &ExactMatrix<F>) -> SpanBasis<F> {
    let mut e = Echelon::new(m.field(), m.cols());
    for r in 0..m.rows() {
        e.insert(&m.row(r));
    }
    e.solutions()
}

fn check_square<F: Field>(d: usize, gens: &[ExactMatrix<F>]) -> Result<()> {
    for g in gens {
        if g.rows() != d || g.cols() != d {
            return Err(Error::Dimension(format!(
                "generator is {}x{}, expected {d}x{d}",
                g.rows(),
                g.cols()
            )));
        }
    }
    Ok(())
}

/// Matrices `X` (flattened row-major, index `r*d + c`) with `XA = AX` for
/// every `A` in `gens`.
pub fn commutant<F: Field>(field: F, d: usize, gens: &[ExactMatrix<F>]) -> Result<SpanBasis<F>> {
    check_square(d, gens)?;
    let mut eqs: Vec<SparseVec<F::Elem>> = Vec::new();
    for a in gens {
        let rows = a.sparse_rows();
        let cols = a.transpose().sparse_rows();
        for i in 0..d {
            for j in 0..d {
                // (XA)_{ij} = Σ_k X_{ik} A_{kj},  (AX)_{ij} = Σ_k A_{ik} X_{kj}
                let mut eq: Vec<(usize, F::Elem)> = Vec::new();
                for (k, v) in &cols[j] {
                    eq.push((i * d + k, v.clone()));
                }
                for (k, v) in &rows[i] {
                    eq.push((k * d + j, field.neg(v)));
                }
                let eq = normalize(field, eq);
                if !eq.is_empty() {
                    eqs.push(eq);
                }
            }
        }
    }
    // Short equations first: signed-permutation generators give two-term
    // rows that collapse the unknowns onto orbits before the longer rows.
    eqs.sort_by_key(|e| e.len());
    eqs.dedup();
    let mut ech = Echelon::new(field, d * d);
    for e in &eqs {
        ech.insert(e);
    }
    Ok(ech.solutions())
}

/// Smallest subalgebra containing `gens` (and the identity when asked).
///
/// Each round multiplies the elements found in the previous round on the
/// right by every generator and keeps the products that enlarge the span.
pub fn algebra_closure<F: Field>(
    field: F,
    d: usize,
    gens: &[ExactMatrix<F>],
    with_identity: bool,
) -> Result<SpanBasis<F>> {
    check_square(d, gens)?;
    let mut ech = Echelon::new(field, d * d);
    let mut basis: Vec<SparseVec<F::Elem>> = Vec::new();
    let mut frontier: Vec<ExactMatrix<F>> = Vec::new();
    let seeds = with_identity
        .then(|| ExactMatrix::identity(field, d))
        .into_iter()
        .chain(gens.iter().cloned());
    for s in seeds {
        let v = s.flatten();
        if ech.insert(&v) {
            basis.push(v);
            frontier.push(s);
        }
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                let p = x.mul(g)?;
                let v = p.flatten();
                if ech.insert(&v) {
                    basis.push(v);
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    SpanBasis::from_vectors(field, d * d, basis)
}

pub fn in_span<F: Field>(v: &[(usize, F::Elem)], basis: &SpanBasis<F>) -> Result<bool> {
    span::check_dim(basis.ambient(), v)?;
    Ok(basis.echelon().contains(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_mat(rows: usize, cols: usize, data: &[i64]) -> ExactMatrix<Rationals> {
        let f = Rationals;
        ExactMatrix::from_dense(f, rows, cols, data.iter().map(|&v| f.from_i64(v)).collect())
            .unwrap()
    }

    #[test]
    fn rank_and_nullspace_small() {
        let f = Rationals;
        assert_eq!(rank(&ExactMatrix::identity(f, 5)), 5);
        assert_eq!(rank(&ExactMatrix::zeros(f, 3, 4)), 0);
        assert!(nullspace(&ExactMatrix::identity(f, 4)).is_empty());
        assert_eq!(nullspace(&ExactMatrix::zeros(f, 2, 3)).len(), 3);
        let m = q_mat(2, 3, &[1, 2, 3, 2, 4, 6]);
        assert_eq!(rank(&m), 1);
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 2);
        for v in ns.vectors() {
            let col = ExactMatrix::from_flat(f, 3, 1, v);
            assert!(m.mul(&col).unwrap().is_zero());
        }
    }

    #[test]
    fn rank_depends_on_characteristic() {
        let m = [2, 1, 1, 2];
        assert_eq!(rank(&q_mat(2, 2, &m)), 2);
        let f3 = PrimeField::new(3).unwrap();
        let m3 = ExactMatrix::from_dense(f3, 2, 2, m.iter().map(|&v| f3.from_i64(v)).collect())
            .unwrap();
        assert_eq!(rank(&m3), 1);
    }

    #[test]
    fn commutant_trivial_cases() {
        let f = Rationals;
        assert_eq!(commutant(f, 3, &[]).unwrap().len(), 9);
        assert_eq!(commutant(f, 4, &[ExactMatrix::identity(f, 4)]).unwrap().len(), 16);
        let jordan = q_mat(2, 2, &[0, 1, 0, 0]);
        let c = commutant(f, 2, std::slice::from_ref(&jordan)).unwrap();
        assert_eq!(c.len(), 2);
        for v in c.vectors() {
            let x = ExactMatrix::from_flat(f, 2, 2, v);
            assert!(x.commutator(&jordan).unwrap().is_zero());
        }
        assert!(commutant(f, 3, &[jordan]).is_err());
    }

    #[test]
    fn closure_trivial_cases() {
        let f = Rationals;
        let jordan = q_mat(2, 2, &[0, 1, 0, 0]);
        assert_eq!(algebra_closure(f, 2, std::slice::from_ref(&jordan), true).unwrap().len(), 2);
        assert_eq!(algebra_closure(f, 2, &[jordan], false).unwrap().len(), 1);
        assert_eq!(algebra_closure(f, 3, &[], true).unwrap().len(), 1);
        let e = q_mat(2, 2, &[0, 1, 0, 0]);
        let t = q_mat(2, 2, &[0, 0, 1, 0]);
        assert_eq!(algebra_closure(f, 2, &[e, t], true).unwrap().len(), 4);
    }

    #[test]
    fn span_membership() {
        let f = Rationals;
        let b = SpanBasis::from_vectors(f, 3, vec![vec![(1, f.one())]]).unwrap();
        assert!(in_span(&[], &b).unwrap());
        assert!(!in_span(&[(0, f.one())], &b).unwrap());
        assert!(in_span(&[(1, f.from_i64(5))], &b).unwrap());
        assert!(in_span(&[(3, f.one())], &b).is_err());
    }
}
