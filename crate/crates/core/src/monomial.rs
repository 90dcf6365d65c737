//! Squarefree monomials and single-degree squarefree monomial ideals.
//!
//! A monomial is its support, stored as a `u64` bitmask over the positions of
//! a [`VariableUniverse`]. Position 0 is the largest variable.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::bits;

/// Variables in decreasing order: `names[0] > names[1] > ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableUniverse {
    names: Vec<String>,
    rank: HashMap<String, usize>,
}

impl VariableUniverse {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > 64 {
            return Err(Error::CapExceeded { what: "universe size", got: names.len(), cap: 64 });
        }
        let mut rank = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n.contains('*') {
                return Err(Error::InvalidParameters(format!("bad variable name `{n}`")));
            }
            if rank.insert(n.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(n.clone()));
            }
        }
        Ok(VariableUniverse { names, rank })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.rank.get(name).copied()
    }

    pub fn mask(&self) -> u64 {
        crate::graph::mask_of_len(self.len())
    }

    /// Monomial from its text form, e.g. `a1*b1`; `1` is the unit monomial.
    pub fn parse_monomial(&self, text: &str) -> Result<SquarefreeMonomial> {
        let text = text.trim();
        if text == "1" {
            return Ok(SquarefreeMonomial::ONE);
        }
        let mut m = SquarefreeMonomial::ONE;
        for name in text.split('*') {
            let name = name.trim();
            let i = self
                .position(name)
                .ok_or_else(|| Error::UnknownVertex(name.to_string()))?;
            m = m.lcm(SquarefreeMonomial::variable(i));
        }
        Ok(m)
    }

    pub fn format(&self, m: SquarefreeMonomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        m.support().map(|i| self.names[i].as_str()).collect::<Vec<_>>().join("*")
    }

    pub fn check(&self, m: SquarefreeMonomial) -> Result<()> {
        match bits(m.0 & !self.mask()).next() {
            Some(index) => Err(Error::UniverseMismatch { index, size: self.len() }),
            None => Ok(()),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SquarefreeMonomial(u64);

impl SquarefreeMonomial {
    pub const ONE: SquarefreeMonomial = SquarefreeMonomial(0);

    pub fn from_mask(mask: u64) -> Self {
        SquarefreeMonomial(mask)
    }

    pub fn variable(i: usize) -> Self {
        SquarefreeMonomial(1 << i)
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        SquarefreeMonomial(indices.into_iter().fold(0, |m, i| m | 1 << i))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn support(self) -> impl Iterator<Item = usize> {
        bits(self.0)
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    pub fn is_variable(self) -> bool {
        self.degree() == 1
    }

    pub fn lcm(self, other: Self) -> Self {
        SquarefreeMonomial(self.0 | other.0)
    }

    pub fn gcd(self, other: Self) -> Self {
        SquarefreeMonomial(self.0 & other.0)
    }

    /// `u : v = u / gcd(u, v)`.
    pub fn colon(self, other: Self) -> Self {
        SquarefreeMonomial(self.0 & !other.0)
    }

    /// Whether `self` divides `other`.
    pub fn divides(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Quotient `other / self`; caller guarantees divisibility.
    pub fn quotient_of(self, other: Self) -> Self {
        debug_assert!(self.divides(other));
        SquarefreeMonomial(other.0 & !self.0)
    }

    /// Reverse lexicographic comparison: `self > other` iff the smallest
    /// variable on which the two differ divides `other`.
    pub fn revlex_cmp(self, other: Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let smallest = 63 - diff.leading_zeros();
        if other.0 >> smallest & 1 == 1 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    pub fn revlex_greater(self, other: Self) -> bool {
        self.revlex_cmp(other) == Ordering::Greater
    }
}

impl fmt::Debug for SquarefreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let names: Vec<String> = self.support().map(|i| format!("x{i}")).collect();
        write!(f, "{}", names.join("*"))
    }
}

/// Generators sorted in descending revlex order.
pub fn sort_revlex_descending(gens: &mut [SquarefreeMonomial]) {
    gens.sort_unstable_by(|a, b| b.revlex_cmp(*a));
}

/// A nonzero squarefree monomial ideal generated in a single degree.
///
/// Generators are distinct, hence minimal, and kept in descending revlex
/// order; generator indices refer to that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    universe: Arc<VariableUniverse>,
    degree: usize,
    generators: Vec<SquarefreeMonomial>,
}

impl MonomialIdeal {
    pub fn new(
        universe: Arc<VariableUniverse>,
        generators: impl IntoIterator<Item = SquarefreeMonomial>,
    ) -> Result<Self> {
        let set: BTreeSet<u64> = generators.into_iter().map(|m| m.0).collect();
        let mut gens: Vec<SquarefreeMonomial> = set.into_iter().map(SquarefreeMonomial).collect();
        let Some(first) = gens.first() else {
            return Err(Error::ZeroIdeal);
        };
        let degree = first.degree();
        for &g in &gens {
            universe.check(g)?;
            if g.degree() != degree {
                return Err(Error::MixedDegrees { expected: degree, found: g.degree() });
            }
        }
        sort_revlex_descending(&mut gens);
        Ok(MonomialIdeal { universe, degree, generators: gens })
    }

    pub fn universe(&self) -> &Arc<VariableUniverse> {
        &self.universe
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[SquarefreeMonomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generator(&self, i: usize) -> SquarefreeMonomial {
        self.generators[i]
    }

    /// Index of `m` among the generators.
    pub fn position(&self, m: SquarefreeMonomial) -> Option<usize> {
        self.generators.binary_search_by(|g| m.revlex_cmp(*g)).ok()
    }

    /// Union of the generator supports.
    pub fn support_mask(&self) -> u64 {
        self.generators.iter().fold(0, |m, g| m | g.0)
    }

    /// Whether some generator divides `m`.
    pub fn contains(&self, m: SquarefreeMonomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    pub fn format(&self, m: SquarefreeMonomial) -> String {
        self.universe.format(m)
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            universe: self.universe.names.clone(),
            degree: self.degree,
            generators: self.generators.iter().map(|g| g.support().collect()).collect(),
        }
    }

    pub fn from_json(json: &IdealJson) -> Result<Self> {
        let universe = Arc::new(VariableUniverse::new(json.universe.iter().cloned())?);
        let mut gens = Vec::with_capacity(json.generators.len());
        for g in &json.generators {
            if let Some(&index) = g.iter().find(|&&i| i >= universe.len()) {
                return Err(Error::UniverseMismatch { index, size: universe.len() });
            }
            gens.push(SquarefreeMonomial::from_indices(g.iter().copied()));
        }
        let ideal = MonomialIdeal::new(universe, gens)?;
        if ideal.degree != json.degree {
            return Err(Error::MixedDegrees { expected: json.degree, found: ideal.degree });
        }
        Ok(ideal)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub universe: Vec<String>,
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn xyz() -> Arc<VariableUniverse> {
        Arc::new(VariableUniverse::new(["x", "y", "z"]).unwrap())
    }

    fn m(u: &VariableUniverse, s: &str) -> SquarefreeMonomial {
        u.parse_monomial(s).unwrap()
    }

    #[test]
    fn lcm_colon_divides() {
        let u = VariableUniverse::new(["a", "b", "c"]).unwrap();
        assert_eq!(m(&u, "a*b").lcm(m(&u, "b*c")), m(&u, "a*b*c"));
        assert_eq!(m(&u, "a*b").lcm(m(&u, "a*b")), m(&u, "a*b"));
        assert_eq!(m(&u, "a*b").colon(m(&u, "b*c")), m(&u, "a"));
        assert!(m(&u, "a*b").colon(m(&u, "a*b")).is_one());
        assert!(SquarefreeMonomial::ONE.divides(m(&u, "a*c")));
        assert!(m(&u, "a*c").divides(m(&u, "a*c")));
        assert!(!m(&u, "a*b").divides(m(&u, "a*c")));
        assert_eq!(u.format(m(&u, "c*a")), "a*c");
        assert_eq!(u.format(SquarefreeMonomial::ONE), "1");
        assert!(u.parse_monomial("a*q").is_err());
    }

    #[test]
    fn revlex_examples() {
        let u = xyz();
        assert!(m(&u, "x*y").revlex_greater(m(&u, "x*z")));
        assert!(m(&u, "x*z").revlex_greater(m(&u, "y*z")));
        assert!(!m(&u, "x*y").revlex_greater(m(&u, "x*y")));
    }

    #[test]
    fn ideal_sorted_revlex_descending() {
        let u = xyz();
        let ideal =
            MonomialIdeal::new(u.clone(), [m(&u, "y*z"), m(&u, "x*y"), m(&u, "x*z"), m(&u, "x*y")]).unwrap();
        let shown: Vec<String> = ideal.generators().iter().map(|&g| ideal.format(g)).collect();
        assert_eq!(shown, ["x*y", "x*z", "y*z"]);
        assert_eq!(ideal.position(m(&u, "x*z")), Some(1));
        assert_eq!(ideal.position(m(&u, "x")), None);

        let single = MonomialIdeal::new(u.clone(), [m(&u, "x*z")]).unwrap();
        assert_eq!(single.generators(), [m(&u, "x*z")]);
    }

    #[test]
    fn ideal_rejects_bad_input() {
        let u = xyz();
        assert!(matches!(MonomialIdeal::new(u.clone(), []), Err(Error::ZeroIdeal)));
        assert!(matches!(
            MonomialIdeal::new(u.clone(), [m(&u, "x"), m(&u, "y*z")]),
            Err(Error::MixedDegrees { .. })
        ));
        assert!(matches!(
            MonomialIdeal::new(u, [SquarefreeMonomial::variable(5)]),
            Err(Error::UniverseMismatch { index: 5, size: 3 })
        ));
    }

    #[test]
    fn json_round_trip() {
        let u = xyz();
        let ideal = MonomialIdeal::new(u.clone(), [m(&u, "x*y"), m(&u, "y*z")]).unwrap();
        let text = serde_json::to_string(&ideal.to_json()).unwrap();
        assert_eq!(text, r#"{"universe":["x","y","z"],"degree":2,"generators":[[0,1],[1,2]]}"#);
        let back: IdealJson = serde_json::from_str(&text).unwrap();
        assert_eq!(MonomialIdeal::from_json(&back).unwrap(), ideal);
    }

    fn degree_d_pair(n: usize) -> impl Strategy<Value = (u64, u64, u64)> {
        let mono = proptest::collection::btree_set(0..n, 1..=n)
            .prop_map(|s| s.into_iter().fold(0u64, |m, i| m | 1 << i));
        (mono.clone(), mono.clone(), mono)
    }

    proptest! {
        #[test]
        fn colon_splits_support((a, b, _) in degree_d_pair(12)) {
            let (u, v) = (SquarefreeMonomial(a), SquarefreeMonomial(b));
            let colon = u.colon(v);
            let common = u.gcd(v);
            prop_assert_eq!(colon.mask() & common.mask(), 0);
            prop_assert_eq!(colon.lcm(common), u);
            prop_assert_eq!(u.lcm(v).degree(), u.degree() + v.degree() - common.degree());
        }

        #[test]
        fn revlex_is_a_strict_total_order((a, b, c) in degree_d_pair(10)) {
            let (u, v, w) = (SquarefreeMonomial(a), SquarefreeMonomial(b), SquarefreeMonomial(c));
            prop_assert!(!u.revlex_greater(u));
            if u != v {
                prop_assert!(u.revlex_greater(v) ^ v.revlex_greater(u));
            }
            if u.revlex_greater(v) && v.revlex_greater(w) {
                prop_assert!(u.revlex_greater(w));
            }
        }

        #[test]
        fn revlex_matches_exponent_rule((a, b, _) in degree_d_pair(10)) {
            // Rightmost nonzero entry of (beta - alpha) positive.
            let (u, v) = (SquarefreeMonomial(a), SquarefreeMonomial(b));
            let diff: Vec<i32> = (0..10).map(|i| (b >> i & 1) as i32 - (a >> i & 1) as i32).collect();
            let expected = diff.iter().rev().find(|&&x| x != 0).is_some_and(|&x| x > 0);
            prop_assert_eq!(u.revlex_greater(v), expected);
        }

        #[test]
        fn lcm_degree_plus_one_iff_overlap((a, b, _) in degree_d_pair(10)) {
            let (u, v) = (SquarefreeMonomial(a), SquarefreeMonomial(b));
            if u.degree() == v.degree() {
                let d = u.degree();
                prop_assert_eq!(u.lcm(v).degree() == d + 1, u.gcd(v).degree() + 1 == d);
            }
        }
    }
}
