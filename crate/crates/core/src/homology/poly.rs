//! Truncated polynomials in `t` with exact coefficients: the entries of maps
//! between projective modules. Stored sparsely, sorted by ascending degree;
//! in a local setting the leading term is the lowest-degree one.

use crate::valueset::ValueSet;

use super::field::Scalar;

#[derive(Clone, PartialEq, Debug)]
pub struct Poly<K> {
    /// `(degree, coefficient)` pairs, ascending by degree, no zeros.
    pub terms: Vec<(u32, K)>,
}

impl<K: Scalar> Poly<K> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn monomial(deg: u32, coef: K) -> Self {
        if coef.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(deg, coef)] }
        }
    }

    pub fn from_terms(mut terms: Vec<(u32, K)>) -> Self {
        terms.retain(|(_, c)| !c.is_zero());
        terms.sort_by_key(|&(d, _)| d);
        let mut out: Vec<(u32, K)> = Vec::with_capacity(terms.len());
        for (d, c) in terms {
            match out.last_mut() {
                Some((ld, lc)) if *ld == d => {
                    *lc = lc.add(&c);
                    if lc.is_zero() {
                        out.pop();
                    }
                }
                _ => out.push((d, c)),
            }
        }
        Poly { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest degree present.
    pub fn lead_degree(&self) -> Option<u32> {
        self.terms.first().map(|&(d, _)| d)
    }

    pub fn lead_coef(&self) -> Option<&K> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.last().map(|&(d, _)| d)
    }

    pub fn scale(&self, k: &K) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Poly { terms: self.terms.iter().map(|(d, c)| (*d, c.mul(k))).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self::from_terms(terms)
    }

    /// Product truncated below `bound`.
    pub fn mul_trunc(&self, other: &Self, bound: u32) -> Self {
        let mut terms = Vec::new();
        for (d1, c1) in &self.terms {
            for (d2, c2) in &other.terms {
                let d = d1 + d2;
                if d < bound {
                    terms.push((d, c1.mul(c2)));
                }
            }
        }
        Self::from_terms(terms)
    }

    /// Every degree of the support lies in the value set.
    pub fn supported_on(&self, values: &ValueSet) -> bool {
        self.terms.iter().all(|&(d, _)| values.contains(d as i64))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::field::Rat;

    #[test]
    fn arithmetic_and_truncation() {
        let a = Poly::from_terms(vec![(3, Rat::from(1)), (0, Rat::from(2))]);
        assert_eq!(a.lead_degree(), Some(0));
        let b = Poly::monomial(2, Rat::from(1));
        let p = a.mul_trunc(&b, 5);
        assert_eq!(p.terms.len(), 1); // t^5 term truncated away
        assert_eq!(p.terms[0].0, 2);
        let s = a.add(&a.scale(&Rat::from(-1)));
        assert!(s.is_zero());
        let collapsed = Poly::from_terms(vec![(1, Rat::from(1)), (1, Rat::from(-1))]);
        assert!(collapsed.is_zero());
    }
}
