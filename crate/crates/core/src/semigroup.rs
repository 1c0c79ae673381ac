//! Finitely generated subsemigroups of M and bounded membership search.

use std::collections::HashMap;

use crate::geom::{dot, V3};
use crate::lattice::Monomial;

/// Step budget for one membership query.
pub const MEMBERSHIP_STEP_LIMIT: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Yes,
    No,
    Inconclusive,
}

/// Generators of a subsemigroup of M: nonidentity and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupPresentation {
    generators: Vec<Monomial>,
}

impl SemigroupPresentation {
    pub fn new(mut generators: Vec<Monomial>) -> Self {
        generators.retain(|m| !m.is_one());
        generators.sort();
        generators.dedup();
        SemigroupPresentation { generators }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    /// Decides whether `target` is a product of generators.
    ///
    /// `height` must pair positively with every generator; the search descends it.
    pub fn contains(&self, target: &Monomial, height: &V3) -> Membership {
        self.contains_with(target, height, &mut HashMap::new())
    }

    /// As `contains`, sharing a memo table across queries with the same height.
    pub fn contains_with(&self, target: &Monomial, height: &V3, memo: &mut HashMap<Monomial, bool>) -> Membership {
        if self.generators.iter().any(|g| dot(height, &g.0) <= 0) {
            return Membership::Inconclusive;
        }
        let mut steps = 0usize;
        match self.search(*target, height, memo, &mut steps) {
            Some(true) => Membership::Yes,
            Some(false) => Membership::No,
            None => Membership::Inconclusive,
        }
    }

    fn search(&self, t: Monomial, height: &V3, memo: &mut HashMap<Monomial, bool>, steps: &mut usize) -> Option<bool> {
        if t.is_one() {
            return Some(true);
        }
        if let Some(&b) = memo.get(&t) {
            return Some(b);
        }
        let h = dot(height, &t.0);
        if h <= 0 {
            return Some(false);
        }
        *steps += 1;
        if *steps > MEMBERSHIP_STEP_LIMIT {
            return None;
        }
        let mut found = false;
        for g in &self.generators {
            if dot(height, &g.0) <= h && self.search(t / *g, height, memo, steps)? {
                found = true;
                break;
            }
        }
        memo.insert(t, found);
        Some(found)
    }

    /// Mutual containment of generators.
    pub fn same_semigroup(&self, other: &SemigroupPresentation, height: &V3) -> bool {
        let a = self.generators.iter().all(|g| other.contains(g, height) == Membership::Yes);
        let b = other.generators.iter().all(|g| self.contains(g, height) == Membership::Yes);
        a && b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership() {
        let s = SemigroupPresentation::new(vec![Monomial::new(20, 0, 0), Monomial::new(-3, 1, 0), Monomial::one()]);
        assert_eq!(s.generators().len(), 2);
        let h = [1, 4, 5];
        assert_eq!(s.contains(&Monomial::new(14, 2, 0), &h), Membership::Yes);
        assert_eq!(s.contains(&Monomial::new(-6, 1, 0), &h), Membership::No);
        assert_eq!(s.contains(&Monomial::one(), &h), Membership::Yes);
        assert_eq!(s.contains(&Monomial::new(1, 0, 0), &[-1, 0, 0]), Membership::Inconclusive);
    }
}
