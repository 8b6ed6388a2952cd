use std::fmt;

use serde_json::Value;

use crate::perm::Perm;
use crate::{Error, Result};

/// Largest strand count a diagram can hold (vertex labels are `u8`).
pub const MAX_STRANDS: usize = 127;

/// Brauer n-diagram: a fixed-point-free involution on `2n` vertices.
///
/// Vertices `0..n` are the top row left to right and `n..2n` the bottom row.
/// Ordering is lexicographic on the involution array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    partner: Box<[u8]>,
}

/// Generator kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    S,
    E,
}

impl Diagram {
    pub fn new(partner: Vec<usize>) -> Result<Self> {
        let len = partner.len();
        if len % 2 != 0 || len / 2 > MAX_STRANDS {
            return Err(Error::Parse(format!("{len} vertices do not form a diagram")));
        }
        for (v, &w) in partner.iter().enumerate() {
            if w >= len || w == v || partner[w] != v {
                return Err(Error::Parse(format!("{partner:?} is not a perfect matching")));
            }
        }
        Ok(Diagram {
            partner: partner.into_iter().map(|w| w as u8).collect(),
        })
    }

    /// From the one-based serialized form.
    pub fn from_one_based(partner: &[usize]) -> Result<Self> {
        if partner.contains(&0) {
            return Err(Error::Parse("vertex label 0 in one-based diagram".into()));
        }
        Self::new(partner.iter().map(|w| w - 1).collect())
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.partner.iter().map(|&w| w as usize + 1).collect()
    }

    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|v| ((v + n) % (2 * n)) as u8).collect();
        Diagram { partner }
    }

    /// Top vertex `p` joined to bottom vertex `(p)π`.
    pub fn from_perm(p: &Perm) -> Self {
        let n = p.n();
        let mut partner = vec![0u8; 2 * n];
        for a in 0..n {
            let b = p.apply(a);
            partner[a] = (n + b) as u8;
            partner[n + b] = a as u8;
        }
        Diagram {
            partner: partner.into(),
        }
    }

    /// `s_i` or `e_i` on `n` strands, `1 ≤ i ≤ n-1`.
    pub fn generator(kind: GenKind, i: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::OutOfRange(format!("generator index {i} for n = {n}")));
        }
        let mut partner: Vec<usize> = (0..2 * n).map(|v| (v + n) % (2 * n)).collect();
        let (a, b) = (i - 1, i);
        match kind {
            GenKind::S => {
                partner[a] = n + b;
                partner[n + b] = a;
                partner[b] = n + a;
                partner[n + a] = b;
            }
            GenKind::E => {
                partner[a] = b;
                partner[b] = a;
                partner[n + a] = n + b;
                partner[n + b] = n + a;
            }
        }
        Self::new(partner)
    }

    pub fn n(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self, v: usize) -> usize {
        self.partner[v] as usize
    }

    /// Horizontal edges within the top row, as `(a, b)` with `a < b`, sorted.
    pub fn top_arcs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n)
            .filter_map(|a| {
                let b = self.partner(a);
                (b < n && a < b).then_some((a, b))
            })
            .collect()
    }

    /// Horizontal edges within the bottom row, as bottom positions `(a, b)`, `a < b`.
    pub fn bottom_arcs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n)
            .filter_map(|a| {
                let b = self.partner(n + a);
                (b >= n && a < b - n).then(|| (a, b - n))
            })
            .collect()
    }

    pub fn num_top_arcs(&self) -> usize {
        self.top_arcs().len()
    }

    /// Through strands as `(top, bottom position)`, sorted by top vertex.
    pub fn through_strands(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n)
            .filter_map(|a| {
                let b = self.partner(a);
                (b >= n).then(|| (a, b - n))
            })
            .collect()
    }

    pub fn to_perm(&self) -> Option<Perm> {
        let n = self.n();
        let images: Vec<usize> = (0..n)
            .map(|a| self.partner(a).checked_sub(n))
            .collect::<Option<_>>()?;
        Perm::from_images(images).ok()
    }

    /// Stacks `self` on top of `other`; returns the product diagram and the
    /// number of closed loops removed.
    pub fn compose(&self, other: &Diagram) -> Result<(Diagram, usize)> {
        let n = self.n();
        if other.n() != n {
            return Err(Error::Parameter(format!(
                "composing {n}-diagram with {}-diagram",
                other.n()
            )));
        }
        let mut res = vec![usize::MAX; 2 * n];
        let mut seen_mid = vec![false; n];
        for start in 0..2 * n {
            if res[start] != usize::MAX {
                continue;
            }
            // (in_top_diagram, vertex of that diagram)
            let (mut upper, mut v) = (start < n, start);
            let end = loop {
                if upper {
                    let w = self.partner(v);
                    if w < n {
                        break w;
                    }
                    seen_mid[w - n] = true;
                    upper = false;
                    v = w - n;
                } else {
                    let w = other.partner(v);
                    if w >= n {
                        break w;
                    }
                    seen_mid[w] = true;
                    upper = true;
                    v = n + w;
                }
            };
            res[start] = end;
            res[end] = start;
        }
        let mut loops = 0;
        for j in 0..n {
            if seen_mid[j] {
                continue;
            }
            loops += 1;
            let mut k = j;
            loop {
                seen_mid[k] = true;
                let below = self.partner(n + k) - n;
                seen_mid[below] = true;
                k = other.partner(below);
                if k == j {
                    break;
                }
            }
        }
        Ok((Diagram::new(res)?, loops))
    }

    pub fn to_json(&self) -> Value {
        Value::from(self.to_one_based())
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("diagram json must be an array".into()))?;
        let idx: Vec<usize> = arr
            .iter()
            .map(|x| x.as_u64().map(|x| x as usize))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Parse("diagram entries must be integers".into()))?;
        Self::from_one_based(&idx)
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram{:?}", self.to_one_based())
    }
}

/// Number of Brauer n-diagrams, `(2n-1)!!`.
pub fn double_factorial_odd(n: usize) -> u128 {
    (1..=n as u128).map(|k| 2 * k - 1).product()
}

/// Largest `n` that [`enumerate`] accepts.
pub const ENUMERATE_MAX: usize = 8;

/// All n-diagrams in lexicographic order of the involution array.
pub fn enumerate(n: usize) -> Result<Vec<Diagram>> {
    if n > ENUMERATE_MAX {
        return Err(Error::Guard(format!(
            "enumerating {n}-diagrams exceeds the limit n <= {ENUMERATE_MAX}"
        )));
    }
    let mut out = Vec::with_capacity(double_factorial_odd(n) as usize);
    let mut partner = vec![usize::MAX; 2 * n];
    matchings(&mut partner, &mut out);
    out.sort();
    Ok(out)
}

fn matchings(partner: &mut Vec<usize>, out: &mut Vec<Diagram>) {
    let Some(v) = partner.iter().position(|&w| w == usize::MAX) else {
        out.push(Diagram {
            partner: partner.iter().map(|&w| w as u8).collect(),
        });
        return;
    };
    for w in v + 1..partner.len() {
        if partner[w] == usize::MAX {
            partner[v] = w;
            partner[w] = v;
            matchings(partner, out);
            partner[v] = usize::MAX;
            partner[w] = usize::MAX;
        }
    }
}

/// Diagrams with at least `f` top arcs: a basis of the ideal B^(f).
pub fn ideal_basis(n: usize, f: usize) -> Result<Vec<Diagram>> {
    if f > n / 2 + 1 {
        return Err(Error::Precondition(format!("f = {f} exceeds n/2 + 1 for n = {n}")));
    }
    Ok(enumerate(n)?
        .into_iter()
        .filter(|d| d.num_top_arcs() >= f)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(i: usize, n: usize) -> Diagram {
        Diagram::generator(GenKind::S, i, n).unwrap()
    }
    fn e(i: usize, n: usize) -> Diagram {
        Diagram::generator(GenKind::E, i, n).unwrap()
    }

    #[test]
    fn generators() {
        assert_eq!(s(1, 2).to_one_based(), vec![4, 3, 2, 1]);
        assert_eq!(e(1, 2).to_one_based(), vec![2, 1, 4, 3]);
        assert!(Diagram::generator(GenKind::S, 3, 3).is_err());
        assert!(Diagram::generator(GenKind::E, 0, 3).is_err());
    }

    #[test]
    fn composition_examples() {
        assert_eq!(e(1, 2).compose(&e(1, 2)).unwrap(), (e(1, 2), 1));
        assert_eq!(s(1, 2).compose(&s(1, 2)).unwrap(), (Diagram::identity(2), 0));
        let (d, l) = e(1, 3).compose(&e(2, 3)).unwrap();
        assert_eq!(l, 0);
        assert_eq!(d.compose(&e(1, 3)).unwrap(), (e(1, 3), 0));
        assert!(e(1, 2).compose(&e(1, 3)).is_err());
    }

    #[test]
    fn permutation_diagrams_follow_perm_product() {
        let perms = Perm::all(3);
        for a in &perms {
            for b in &perms {
                let (d, l) = Diagram::from_perm(a).compose(&Diagram::from_perm(b)).unwrap();
                assert_eq!(l, 0);
                assert_eq!(d.to_perm().unwrap(), a.then(b));
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        for n in 0..=5 {
            let all = enumerate(n).unwrap();
            assert_eq!(all.len() as u128, double_factorial_odd(n));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
        let two = enumerate(2).unwrap();
        assert!(two.contains(&Diagram::identity(2)) && two.contains(&s(1, 2)) && two.contains(&e(1, 2)));
        assert!(enumerate(9).is_err());
    }

    #[test]
    fn ideals() {
        assert_eq!(ideal_basis(2, 1).unwrap(), vec![e(1, 2)]);
        assert!(ideal_basis(3, 2).unwrap().is_empty());
        assert_eq!(ideal_basis(4, 1).unwrap().len(), 81);
        assert_eq!(ideal_basis(4, 0).unwrap().len(), 105);
        assert!(ideal_basis(4, 4).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let d = e(2, 4);
        assert_eq!(Diagram::from_json(&d.to_json()).unwrap(), d);
        assert!(Diagram::from_one_based(&[1, 2]).is_err());
    }
}
