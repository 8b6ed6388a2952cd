use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use super::diagram::{Diagram, GenKind};
use crate::exactla::Field;
use crate::perm::Perm;
use crate::{Error, Result};

/// A generator letter `s_i` or `e_i` (one-based index).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen {
    pub kind: GenKind,
    pub i: usize,
}

impl Gen {
    pub fn s(i: usize) -> Self {
        Gen { kind: GenKind::S, i }
    }
    pub fn e(i: usize) -> Self {
        Gen { kind: GenKind::E, i }
    }

    pub fn diagram(&self, n: usize) -> Result<Diagram> {
        Diagram::generator(self.kind, self.i, n)
    }

    /// Letters of a reduced word for `p`.
    pub fn word_of_perm(p: &Perm) -> Vec<Gen> {
        p.reduced_word().into_iter().map(Gen::s).collect()
    }

    /// `E_f = e_1 e_3 ⋯ e_{2f-1}`
    pub fn e_f(f: usize) -> Vec<Gen> {
        (0..f).map(|k| Gen::e(2 * k + 1)).collect()
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            GenKind::S => 's',
            GenKind::E => 'e',
        };
        write!(f, "{c}{}", self.i)
    }
}

impl FromStr for Gen {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let kind = match s.chars().next() {
            Some('s') => GenKind::S,
            Some('e') => GenKind::E,
            _ => return Err(Error::Parse(format!("generator {s:?}"))),
        };
        let i = s[1..]
            .parse()
            .map_err(|_| Error::Parse(format!("generator {s:?}")))?;
        Ok(Gen { kind, i })
    }
}

/// Element of B_n(x): a finite combination of n-diagrams.
///
/// The loop parameter travels with the element, so algebras with different
/// parameters can be used side by side.
#[derive(Clone, Debug)]
pub struct BrauerElement<F: Field> {
    field: F,
    n: usize,
    x: F::Elem,
    terms: BTreeMap<Diagram, F::Elem>,
}

impl<F: Field> PartialEq for BrauerElement<F> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.x == other.x && self.terms == other.terms
    }
}

impl<F: Field> Eq for BrauerElement<F> {}

impl<F: Field> BrauerElement<F> {
    pub fn zero(field: F, n: usize, x: F::Elem) -> Self {
        BrauerElement {
            field,
            n,
            x,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_diagram(field: F, x: F::Elem, d: Diagram) -> Self {
        let mut e = Self::zero(field, d.n(), x);
        e.terms.insert(d, field.one());
        e
    }

    pub fn identity(field: F, n: usize, x: F::Elem) -> Self {
        Self::from_diagram(field, x, Diagram::identity(n))
    }

    /// Left-to-right product of the given generator letters.
    pub fn word(field: F, n: usize, x: F::Elem, letters: &[Gen]) -> Result<Self> {
        let mut d = Diagram::identity(n);
        let mut loops = 0;
        for g in letters {
            let (p, l) = d.compose(&g.diagram(n)?)?;
            d = p;
            loops += l;
        }
        let mut e = Self::zero(field, n, x.clone());
        e.terms.insert(d, field.pow(&x, loops as u64));
        e.prune();
        Ok(e)
    }

    /// `Σ c_k · word_k`
    pub fn from_words(field: F, n: usize, x: F::Elem, words: &[(i64, Vec<Gen>)]) -> Result<Self> {
        let mut acc = Self::zero(field, n, x.clone());
        for (c, w) in words {
            let t = Self::word(field, n, x.clone(), w)?.scale(&field.from_i64(*c));
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }

    fn prune(&mut self) {
        let f = self.field;
        self.terms.retain(|_, c| !f.is_zero(c));
    }

    pub fn field(&self) -> F {
        self.field
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn x(&self) -> &F::Elem {
        &self.x
    }
    pub fn terms(&self) -> &BTreeMap<Diagram, F::Elem> {
        &self.terms
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &Diagram) -> F::Elem {
        self.terms.get(d).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Same coefficients with a different loop parameter.
    pub fn with_parameter(&self, x: F::Elem) -> Self {
        BrauerElement {
            x,
            ..self.clone()
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.x != other.x {
            return Err(Error::Parameter(format!(
                "B_{}({}) vs B_{}({})",
                self.n,
                self.field.render(&self.x),
                other.n,
                self.field.render(&other.x)
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let f = self.field;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            let slot = out.terms.entry(d.clone()).or_insert_with(|| f.zero());
            *slot = f.add(slot, c);
        }
        out.prune();
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&self.field.neg(&self.field.one())))
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let f = self.field;
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = f.mul(c, s);
        }
        out.prune();
        out
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let f = self.field;
        let mut out = Self::zero(f, self.n, self.x.clone());
        for (d1, a) in &self.terms {
            for (d2, b) in &other.terms {
                let (d, loops) = d1.compose(d2)?;
                let c = f.mul(&f.mul(a, b), &f.pow(&self.x, loops as u64));
                let slot = out.terms.entry(d).or_insert_with(|| f.zero());
                *slot = f.add(slot, &c);
            }
        }
        out.prune();
        Ok(out)
    }

    /// `[[diagram, coefficient], ...]` in diagram order.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(d, c)| json!([d.to_json(), self.field.render(c)]))
            .collect();
        Value::Array(terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{PrimeField, Rationals};

    #[test]
    fn small_products() {
        let q = Rationals;
        let x = q.from_i64(-4);
        let e1 = BrauerElement::word(q, 2, x.clone(), &[Gen::e(1)]).unwrap();
        let s1 = BrauerElement::word(q, 2, x.clone(), &[Gen::s(1)]).unwrap();
        assert_eq!(e1.multiply(&e1).unwrap(), e1.scale(&q.from_i64(-4)));
        assert_eq!(s1.multiply(&e1).unwrap(), e1);
        let id = BrauerElement::identity(q, 2, x);
        let a = e1.add(&s1.scale(&q.from_i64(3))).unwrap();
        assert_eq!(id.multiply(&a).unwrap(), a);
        assert!(a.multiply(&a.with_parameter(q.from_i64(3))).is_err());
    }

    #[test]
    fn loops_vanish_at_zero_parameter() {
        let f = PrimeField::new(2).unwrap();
        let e1 = BrauerElement::word(f, 2, f.from_i64(-2), &[Gen::e(1), Gen::e(1)]).unwrap();
        assert!(e1.is_zero());
    }

    #[test]
    fn generator_parsing() {
        assert_eq!("e3".parse::<Gen>().unwrap(), Gen::e(3));
        assert_eq!(Gen::s(2).to_string(), "s2");
        assert!("t1".parse::<Gen>().is_err());
    }
}
