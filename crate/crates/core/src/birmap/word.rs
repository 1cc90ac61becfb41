//! Words in bound generators and their evaluation.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::Scalar;

use super::{BirMap, MapError};

/// A product `s₁^e₁ s₂^e₂ …` read left to right as composition:
/// `f g` denotes `f ∘ g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MapWord {
    letters: Vec<(String, i64)>,
}

impl MapWord {
    /// Zero exponents are dropped; adjacent equal symbols are kept apart.
    pub fn new<S: Into<String>, I: IntoIterator<Item = (S, i64)>>(letters: I) -> Self {
        MapWord {
            letters: letters
                .into_iter()
                .filter(|(_, e)| *e != 0)
                .map(|(s, e)| (s.into(), e))
                .collect(),
        }
    }

    pub fn letters(&self) -> &[(String, i64)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `f g f⁻¹ g⁻¹`.
    pub fn commutator(f: &str, g: &str) -> Self {
        Self::new([(f, 1), (g, 1), (f, -1), (g, -1)])
    }

    /// `fᵏ gᵏ f⁻ᵏ g⁻ᵏ`.
    pub fn power_commutator(f: &str, g: &str, k: i64) -> Self {
        Self::new([(f, k), (g, k), (f, -k), (g, -k)])
    }

    /// Parse whitespace- or `*`-separated letters such as `f g^-1 h^2`.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut letters = Vec::new();
        for token in text.split(|c: char| c.is_whitespace() || c == '*').filter(|t| !t.is_empty()) {
            let (sym, exp) = match token.split_once('^') {
                Some((s, e)) => {
                    let e = e.trim_start_matches('(').trim_end_matches(')');
                    let exp: i64 = e
                        .parse()
                        .map_err(|_| format!("bad exponent `{e}` in `{token}`"))?;
                    (s, exp)
                }
                None => (token, 1),
            };
            let valid = sym.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && sym.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(format!("bad symbol `{sym}`"));
            }
            letters.push((sym.to_string(), exp));
        }
        Ok(Self::new(letters))
    }
}

impl fmt::Display for MapWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, (s, e)) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A generator and, when available, its inverse.
#[derive(Clone, Debug)]
pub struct Binding<F> {
    pub map: BirMap<F>,
    pub inverse: Option<BirMap<F>>,
}

/// Symbol table for word evaluation.
#[derive(Clone, Debug, Default)]
pub struct Bindings<F> {
    table: BTreeMap<String, Binding<F>>,
}

impl<F: Scalar> Bindings<F> {
    pub fn new() -> Self {
        Bindings {
            table: BTreeMap::new(),
        }
    }

    /// Bind a map, computing its inverse when the representation allows.
    pub fn insert(&mut self, name: impl Into<String>, map: BirMap<F>) {
        let inverse = map.inverse().ok();
        self.table.insert(name.into(), Binding { map, inverse });
    }

    /// Bind a map together with an explicitly supplied inverse.
    pub fn insert_with_inverse(&mut self, name: impl Into<String>, map: BirMap<F>, inverse: BirMap<F>) {
        self.table.insert(
            name.into(),
            Binding {
                map,
                inverse: Some(inverse),
            },
        );
    }

    pub fn get(&self, name: &str) -> Option<&Binding<F>> {
        self.table.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.table.keys().map(String::as_str)
    }
}

/// Compose the bound maps of `word` left to right.  The empty word is the
/// identity in the representation of the first binding.
pub fn word_eval<F: Scalar>(word: &MapWord, bindings: &Bindings<F>) -> Result<BirMap<F>, MapError> {
    let mut steps: Vec<&BirMap<F>> = Vec::new();
    for (sym, exp) in word.letters() {
        let b = bindings
            .get(sym)
            .ok_or_else(|| MapError::UnboundSymbol(sym.clone()))?;
        let m = if *exp > 0 {
            &b.map
        } else {
            b.inverse
                .as_ref()
                .ok_or_else(|| MapError::MissingInverse(sym.clone()))?
        };
        for _ in 0..exp.unsigned_abs() {
            steps.push(m);
        }
    }
    let Some((last, rest)) = steps.split_last() else {
        return Ok(match bindings.table.values().next() {
            Some(b) => b.map.identity_like(),
            None => BirMap::Proj(super::ProjMap::identity()),
        });
    };
    // Fold from the right so each step composes a small map on the outside.
    let mut acc = (*last).clone();
    for m in rest.iter().rev() {
        acc = m.compose(&acc)?;
    }
    Ok(acc)
}

/// `[f, g] = f ∘ g ∘ f⁻¹ ∘ g⁻¹`.
pub fn commutator<F: Scalar>(f: &BirMap<F>, g: &BirMap<F>) -> Result<BirMap<F>, MapError> {
    let fi = f.inverse()?;
    let gi = g.inverse()?;
    f.compose(&g.compose(&fi.compose(&gi)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{GaussRational, Mobius, RatFunc, UniPoly};
    use crate::birmap::JonqMap;

    type J = JonqMap<GaussRational>;

    fn g(n: i64) -> GaussRational {
        GaussRational::from(n)
    }

    fn torus(alpha: i64, a: RatFunc<GaussRational>) -> BirMap<GaussRational> {
        BirMap::Jonq(J::twisted_scaling(Mobius::scaling(g(alpha)).unwrap(), &a).unwrap())
    }

    #[test]
    fn commutator_of_twists() {
        let f = torus(1, RatFunc::x());
        let h = torus(2, RatFunc::x());
        let c = commutator(&f, &h).unwrap();
        assert!(c.same_map(&BirMap::Jonq(J::diagonal(g(1), g(2)).unwrap())));
    }

    #[test]
    fn commutator_of_elementary_maps() {
        let f = BirMap::Jonq(J::elementary(g(1), UniPoly::monomial(g(1), 2), g(1), g(1)).unwrap());
        let h = BirMap::Jonq(J::elementary(g(1), UniPoly::x(), g(1), g(0)).unwrap());
        let c = commutator(&f, &h).unwrap();
        let expected = J::elementary(g(1), UniPoly::constant(g(-1)), g(1), g(0)).unwrap();
        assert!(c.same_map(&BirMap::Jonq(expected)));
    }

    #[test]
    fn words_evaluate_left_to_right() {
        let mut b = Bindings::new();
        b.insert("f", torus(1, RatFunc::x()));
        b.insert("g", torus(2, RatFunc::x()));
        let w = MapWord::parse("f g f^-1 g^-1").unwrap();
        assert_eq!(w, MapWord::commutator("f", "g"));
        let h = word_eval(&w, &b).unwrap();
        assert!(h.same_map(&BirMap::Jonq(J::diagonal(g(1), g(2)).unwrap())));
        assert!(word_eval(&MapWord::parse("f^0").unwrap(), &b).unwrap().is_identity());
        assert!(word_eval(&MapWord::parse("f^2 f^-2").unwrap(), &b).unwrap().is_identity());
        assert!(matches!(
            word_eval(&MapWord::parse("q").unwrap(), &b),
            Err(MapError::UnboundSymbol(s)) if s == "q"
        ));
    }

    #[test]
    fn raw_projective_bindings_need_inverses() {
        use crate::algebra::TriHomPoly;
        use crate::birmap::ProjMap;
        let t = |k: usize| TriHomPoly::<GaussRational>::var(k);
        let s = ProjMap::new([&t(1) * &t(2), &t(0) * &t(2), &t(0) * &t(1)]).unwrap();
        let mut b = Bindings::new();
        b.insert("s", BirMap::Proj(s.clone()));
        assert!(matches!(
            word_eval(&MapWord::parse("s^-1").unwrap(), &b),
            Err(MapError::MissingInverse(_))
        ));
        b.insert_with_inverse("s", BirMap::Proj(s.clone()), BirMap::Proj(s));
        assert!(word_eval(&MapWord::parse("s s^-1").unwrap(), &b).unwrap().is_identity());
    }
}
