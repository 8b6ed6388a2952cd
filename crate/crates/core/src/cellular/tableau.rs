use std::fmt;

use serde_json::Value;

use crate::perm::Perm;
use crate::{Error, Result};

/// Partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{parts:?} is not a partition")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// All partitions of `k`, largest first part first.
    pub fn all(k: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(k, k, &mut Vec::new(), &mut out);
        out
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (0..w).map(|c| self.parts.iter().filter(|&&p| p > c).count()).collect(),
        }
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn num_standard(&self) -> u128 {
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len {
                hooks *= ((len - c - 1) + (conj.parts[c] - r - 1) + 1) as u128;
            }
        }
        (1..=self.size() as u128).product::<u128>() / hooks
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

/// Filling of a Young diagram by distinct positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape: Vec<usize> = rows.iter().map(Vec::len).collect();
        Partition::new(shape.clone())?;
        if shape.contains(&0) {
            return Err(Error::Parse("empty tableau row".into()));
        }
        let mut all: Vec<usize> = rows.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) || all.first() == Some(&0) {
            return Err(Error::Parse("tableau entries must be distinct and positive".into()));
        }
        Ok(Tableau { rows })
    }

    /// Entries filled in increasing order along successive rows.
    pub fn initial(shape: &Partition, entries: &[usize]) -> Result<Self> {
        if shape.size() != entries.len() {
            return Err(Error::Dimension(format!(
                "{} entries for a shape of size {}",
                entries.len(),
                shape.size()
            )));
        }
        let mut sorted = entries.to_vec();
        sorted.sort_unstable();
        let mut it = sorted.into_iter();
        let rows = shape.parts().iter().map(|&p| it.by_ref().take(p).collect()).collect();
        Self::new(rows)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition {
            parts: self.rows.iter().map(Vec::len).collect(),
        }
    }

    pub fn entries(&self) -> Vec<usize> {
        let mut e: Vec<usize> = self.rows.iter().flatten().copied().collect();
        e.sort_unstable();
        e
    }

    pub fn is_row_standard(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn is_column_standard(&self) -> bool {
        self.rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above < below))
    }

    pub fn is_standard(&self) -> bool {
        self.is_row_standard() && self.is_column_standard()
    }

    /// Replaces every entry `a` by `(a)π` (π acts on one-based points).
    pub fn act(&self, p: &Perm) -> Tableau {
        Tableau {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&a| p.apply(a - 1) + 1).collect())
                .collect(),
        }
    }

    /// The permutation `d` of `{1..n}` fixing points outside the entries with
    /// `initial · d = self`.
    pub fn perm_from_initial(&self, n: usize) -> Result<Perm> {
        let init = Self::initial(&self.shape(), &self.entries())?;
        let mut images: Vec<usize> = (0..n).collect();
        for (ri, row) in init.rows.iter().enumerate() {
            for (ci, &a) in row.iter().enumerate() {
                let b = self.rows[ri][ci];
                if a > n || b > n {
                    return Err(Error::OutOfRange(format!("entry beyond {n}")));
                }
                images[a - 1] = b - 1;
            }
        }
        Perm::from_images(images)
    }

    pub fn to_json(&self) -> Value {
        Value::from(self.rows.clone())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// Standard tableaux of shape `shape` filled with `entries`, sorted.
pub fn std_tableaux(shape: &Partition, entries: &[usize]) -> Result<Vec<Tableau>> {
    if shape.size() != entries.len() {
        return Err(Error::Dimension(format!(
            "{} entries for a shape of size {}",
            entries.len(),
            shape.size()
        )));
    }
    let mut sorted = entries.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.parts().len()];
    place(shape.parts(), &sorted, 0, &mut rows, &mut out);
    out.sort();
    Ok(out)
}

// Entries go in increasing order, each into a row whose end is an addable cell.
fn place(shape: &[usize], entries: &[usize], k: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
    if k == entries.len() {
        out.push(Tableau { rows: rows.clone() });
        return;
    }
    for r in 0..shape.len() {
        let len = rows[r].len();
        if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
            rows[r].push(entries[k]);
            place(shape, entries, k + 1, rows, out);
            rows[r].pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force(shape: &Partition, entries: &[usize]) -> Vec<Tableau> {
        let k = entries.len();
        let mut out: Vec<Tableau> = Perm::all(k)
            .into_iter()
            .filter_map(|p| {
                let mut it = p.images().iter().map(|&i| entries[i]);
                let rows = shape.parts().iter().map(|&l| it.by_ref().take(l).collect()).collect();
                let t = Tableau { rows };
                t.is_standard().then_some(t)
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn standard_tableaux_match_brute_force() {
        for k in 0..=6 {
            for shape in Partition::all(k) {
                let entries: Vec<usize> = (3..3 + k).collect();
                let fast = std_tableaux(&shape, &entries).unwrap();
                assert_eq!(fast, brute_force(&shape, &entries));
                assert_eq!(fast.len() as u128, shape.num_standard());
            }
        }
        let l32 = Partition::new(vec![3, 2]).unwrap();
        assert_eq!(std_tableaux(&l32, &[1, 2, 3, 4, 5]).unwrap().len(), 5);
        assert!(std_tableaux(&l32, &[1, 2]).is_err());
    }

    #[test]
    fn partitions() {
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!(Partition::all(0), vec![Partition::empty()]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![3, 1]).unwrap().conjugate().parts(), &[2, 1, 1]);
    }

    #[test]
    fn tableau_permutation() {
        let shape = Partition::new(vec![2, 1]).unwrap();
        for t in std_tableaux(&shape, &[2, 3, 4]).unwrap() {
            let d = t.perm_from_initial(4).unwrap();
            assert_eq!(Tableau::initial(&shape, &[2, 3, 4]).unwrap().act(&d), t);
            assert_eq!(d.apply(0), 0);
        }
    }
}
