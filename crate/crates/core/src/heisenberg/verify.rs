//! Deciding whether a pair of maps generates a faithful Heisenberg image.
//!
//! A homomorphism from the Heisenberg group is injective exactly when the
//! image of the center is infinite, since every nontrivial normal subgroup
//! meets the center.  So a pair is reported faithful when `h = [f, g]`
//! commutes with `f` and `g` and has infinite order.

use serde::{Deserialize, Serialize};

use crate::algebra::Scalar;
use crate::birmap::{commutator, word_eval, BirMap, Bindings, Caps, MapError, MapWord};
use crate::dynamics::{growth_report, DynamicsError, GrowthClass, GrowthReport, Thresholds, DEFAULT_N_MAX, DEFAULT_N_MAX_JONQ};

use super::family::{build_family, check_family_constraints, Constraint, FamilySpec};
use super::HeisenbergError;

/// Default bound for relation and power searches.
pub const DEFAULT_RELATION_BOUND: u32 = 24;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyOptions {
    /// Iteration depth for growth; `None` picks a default per representation.
    pub n_max: Option<usize>,
    pub caps: Caps,
    pub thresholds: Thresholds,
    pub relation_bound: u32,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n_max: None,
            caps: Caps::default(),
            thresholds: Thresholds::default(),
            relation_bound: DEFAULT_RELATION_BOUND,
        }
    }
}

/// How the order of `h` was decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderMethod {
    /// `h` is the identity.
    Identity,
    /// `h = (x + τ₁, y + τ₂)` with `τ ≠ 0`.
    Translation,
    /// `h` fixes the base and shifts the fiber by a nonzero `a`.
    Additive,
    /// `h = (αx, βy)`, decided by the roots of unity of the field.
    Diagonal,
    /// `h` fixes the base and scales the fiber by a nonconstant `a`.
    FiberScaling,
    /// The action on the base already has infinite order.
    BaseAction,
    /// Powers of `h` searched up to a bound; not a proof of infinite order.
    PowerSearch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderDecision {
    /// Whether `h` has infinite order.
    pub value: bool,
    pub method: OrderMethod,
    /// Search bound, for the methods that search.
    pub bound: Option<u32>,
    /// The order, when finite and known.
    pub order: Option<u32>,
    /// Relations `αⁱβʲ = 1` found for diagonal `h` within the bound.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<(i64, i64)>,
}

impl OrderDecision {
    fn exact(value: bool, method: OrderMethod, order: Option<u32>) -> Self {
        OrderDecision {
            value,
            method,
            bound: None,
            order,
            relations: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddingReport<F> {
    pub h: BirMap<F>,
    pub fh_commutes: bool,
    pub gh_commutes: bool,
    pub h_is_identity: bool,
    pub h_infinite_order: OrderDecision,
    pub faithful: bool,
    pub growth_f: GrowthReport,
    pub growth_g: GrowthReport,
    pub growth_h: GrowthReport,
    pub constraints: Vec<Constraint<F>>,
    /// Human-readable reasons the pair is not a faithful embedding.
    pub failures: Vec<String>,
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Decide whether `h` has infinite order, exactly where the shape allows.
pub fn decide_infinite_order<F: Scalar>(h: &BirMap<F>, bound: u32, caps: &Caps) -> OrderDecision {
    if h.is_identity() {
        return OrderDecision::exact(false, OrderMethod::Identity, Some(1));
    }
    if let BirMap::Jonq(j) = h {
        if j.as_translation().is_some() {
            return OrderDecision::exact(true, OrderMethod::Translation, None);
        }
        if let Some((alpha, beta)) = j.as_diagonal() {
            let order = match (alpha.root_of_unity_order(), beta.root_of_unity_order()) {
                (Some(p), Some(q)) => Some(p / gcd(p, q) * q),
                _ => None,
            };
            return OrderDecision {
                value: order.is_none(),
                method: OrderMethod::Diagonal,
                bound: Some(bound),
                order,
                relations: crate::algebra::multiplicative_relations(&alpha, &beta, bound),
            };
        }
        if j.eta().is_identity() {
            if let Some(a) = j.y_shift() {
                return OrderDecision::exact(!a.is_zero(), OrderMethod::Additive, None);
            }
            if let Some(a) = j.y_multiplier() {
                if a.as_constant().is_none() {
                    return OrderDecision::exact(true, OrderMethod::FiberScaling, None);
                }
            }
        }
        if let Some((s, t)) = j.eta().as_affine() {
            let infinite = if s.is_one() { !t.is_zero() } else { s.root_of_unity_order().is_none() };
            if infinite {
                return OrderDecision::exact(true, OrderMethod::BaseAction, None);
            }
        }
    }
    power_search(h, bound, caps)
}

fn power_search<F: Scalar>(h: &BirMap<F>, bound: u32, caps: &Caps) -> OrderDecision {
    let mut current = h.clone();
    let mut found = None;
    for k in 2..=bound {
        let next = match (h, &current) {
            (BirMap::Jonq(_), BirMap::Jonq(_)) => h.compose(&current),
            _ => h.to_proj().compose_capped(&current.to_proj(), caps).map(BirMap::Proj),
        };
        match next {
            Ok(n) if n.is_identity() => {
                found = Some(k);
                break;
            }
            Ok(n) => current = n,
            Err(_) => break,
        }
    }
    OrderDecision {
        value: found.is_none(),
        method: OrderMethod::PowerSearch,
        bound: Some(bound),
        order: found,
        relations: Vec::new(),
    }
}

fn growth_of<F: Scalar>(m: &BirMap<F>, opts: &VerifyOptions) -> Result<GrowthReport, HeisenbergError> {
    let n_max = opts.n_max.unwrap_or(match m {
        BirMap::Jonq(_) => DEFAULT_N_MAX_JONQ,
        BirMap::Proj(_) => DEFAULT_N_MAX,
    });
    match growth_report(m, n_max, &opts.caps, &opts.thresholds) {
        Ok(r) => Ok(r),
        Err(DynamicsError::CapAtFirstStep(_)) => Ok(GrowthReport {
            degrees: Vec::new(),
            class: GrowthClass::Indeterminate,
            dyn_degree_estimate: None,
            growth_constant_estimate: None,
            n_used: 0,
            truncated: true,
        }),
        Err(e) => Err(e.into()),
    }
}

fn commutes<F: Scalar>(a: &BirMap<F>, b: &BirMap<F>) -> Result<bool, MapError> {
    Ok(a.compose(b)?.same_map(&b.compose(a)?))
}

/// Compute `h = [f, g]`, check the relations, decide the order of `h` and
/// classify the growth of all three maps.
pub fn verify_embedding<F: Scalar>(
    f: &BirMap<F>,
    g: &BirMap<F>,
    opts: &VerifyOptions,
) -> Result<EmbeddingReport<F>, HeisenbergError> {
    let h = commutator(f, g)?;
    let fh_commutes = commutes(f, &h)?;
    let gh_commutes = commutes(g, &h)?;
    let h_is_identity = h.is_identity();
    let order = decide_infinite_order(&h, opts.relation_bound, &opts.caps);
    let (growth_f, (growth_g, growth_h)) = rayon::join(
        || growth_of(f, opts),
        || rayon::join(|| growth_of(g, opts), || growth_of(&h, opts)),
    );
    let mut failures = Vec::new();
    if !fh_commutes {
        failures.push("[f,h] != id".to_string());
    }
    if !gh_commutes {
        failures.push("[g,h] != id".to_string());
    }
    if h_is_identity {
        failures.push("h = id".to_string());
    } else if !order.value {
        failures.push(match order.order {
            Some(k) => format!("h has finite order {k}"),
            None => "h has finite order".to_string(),
        });
    }
    Ok(EmbeddingReport {
        faithful: fh_commutes && gh_commutes && order.value,
        h,
        fh_commutes,
        gh_commutes,
        h_is_identity,
        h_infinite_order: order,
        growth_f: growth_f?,
        growth_g: growth_g?,
        growth_h: growth_h?,
        constraints: Vec::new(),
        failures,
    })
}

/// Build a family instance and verify it, attaching its constraints.
/// Violated constraints are listed as failures but do not by themselves
/// change the verdict, which rests on the relations alone.
pub fn verify_family<F: Scalar>(
    spec: &FamilySpec<F>,
    opts: &VerifyOptions,
) -> Result<EmbeddingReport<F>, HeisenbergError> {
    let (f, g) = build_family(spec)?;
    let mut report = verify_embedding(&f, &g, opts)?;
    report.constraints = check_family_constraints(spec);
    for c in report.constraints.iter().filter(|c| !c.satisfied) {
        report.failures.push(format!("constraint violated: {}", c.name));
    }
    Ok(report)
}

/// Check `[fᵏ, gᵏ] = h^{k²}` by evaluating the word `fᵏ gᵏ f⁻ᵏ g⁻ᵏ`.
pub fn distortion_identity<F: Scalar>(
    f: &BirMap<F>,
    g: &BirMap<F>,
    h: &BirMap<F>,
    k: i64,
) -> Result<bool, HeisenbergError> {
    let mut bindings = Bindings::new();
    bindings.insert("f", f.clone());
    bindings.insert("g", g.clone());
    bindings.insert("h", h.clone());
    let lhs = word_eval(&MapWord::power_commutator("f", "g", k), &bindings)?;
    let rhs = word_eval(&MapWord::new([("h", k * k)]), &bindings)?;
    Ok(lhs.same_map(&rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{GaussRational, Mobius, RatFunc, UniPoly};
    use crate::birmap::JonqMap;

    type G = GaussRational;

    fn g(n: i64) -> G {
        G::from(n)
    }

    fn torus(alpha: i64, a: RatFunc<G>) -> BirMap<G> {
        BirMap::Jonq(JonqMap::twisted_scaling(Mobius::scaling(g(alpha)).unwrap(), &a).unwrap())
    }

    fn elementary(q: UniPoly<G>, c: i64) -> BirMap<G> {
        BirMap::Jonq(JonqMap::elementary(g(1), q, g(1), g(c)).unwrap())
    }

    #[test]
    fn twist_pair_is_faithful() {
        let r = verify_embedding(&torus(1, RatFunc::x()), &torus(2, RatFunc::x()), &VerifyOptions::default()).unwrap();
        assert!(r.h.same_map(&BirMap::Jonq(JonqMap::diagonal(g(1), g(2)).unwrap())));
        assert!(r.fh_commutes && r.gh_commutes && r.faithful);
        assert_eq!(r.h_infinite_order.method, OrderMethod::Diagonal);
        assert_eq!(r.growth_f.class, GrowthClass::Linear);
        assert!(r.failures.is_empty());
    }

    #[test]
    fn elementary_pair_is_faithful() {
        let f = elementary(UniPoly::monomial(g(1), 2), 1);
        let h = elementary(UniPoly::x(), 0);
        let r = verify_embedding(&f, &h, &VerifyOptions::default()).unwrap();
        let expected = JonqMap::elementary(g(1), UniPoly::constant(g(-1)), g(1), g(0)).unwrap();
        assert!(r.h.same_map(&BirMap::Jonq(expected)));
        assert!(r.faithful);
        assert_eq!(r.h_infinite_order.method, OrderMethod::Translation);
        for growth in [&r.growth_f, &r.growth_g, &r.growth_h] {
            assert_eq!(growth.class, GrowthClass::Bounded);
        }
    }

    #[test]
    fn negative_control() {
        let f = elementary(UniPoly::monomial(g(1), 2), 0);
        let h = elementary(UniPoly::zero(), 1);
        let r = verify_embedding(&f, &h, &VerifyOptions::default()).unwrap();
        // x + 2y - 1
        let expected = JonqMap::elementary(g(1), UniPoly::linear(g(2), g(-1)), g(1), g(0)).unwrap();
        assert!(r.h.same_map(&BirMap::Jonq(expected)));
        assert!(!r.gh_commutes);
        assert!(!r.faithful);
        assert!(r.failures.iter().any(|s| s == "[g,h] != id"));
    }

    #[test]
    fn identity_pair() {
        let id = BirMap::Jonq(JonqMap::<G>::identity(crate::birmap::Axis::X));
        let r = verify_embedding(&id, &id, &VerifyOptions::default()).unwrap();
        assert!(r.h_is_identity);
        assert!(!r.faithful);
        assert_eq!(r.h_infinite_order.method, OrderMethod::Identity);
    }

    #[test]
    fn finite_diagonal_orders() {
        let h = BirMap::Jonq(JonqMap::diagonal(G::i(), g(-1)).unwrap());
        let d = decide_infinite_order(&h, 24, &Caps::default());
        assert!(!d.value);
        assert_eq!(d.order, Some(4));
        assert!(d.relations.contains(&(2, -1)));
    }

    #[test]
    fn power_search_finds_involution() {
        // (1/x, y) is not diagonal, translation or fiber-only
        let inv = Mobius::new(g(0), g(1), g(1), g(0)).unwrap();
        let h = BirMap::Jonq(JonqMap::twisted_scaling(inv, &RatFunc::one()).unwrap());
        let d = decide_infinite_order(&h, 24, &Caps::default());
        assert_eq!(d.method, OrderMethod::PowerSearch);
        assert_eq!(d.order, Some(2));
    }

    #[test]
    fn distortion() {
        let f = torus(1, RatFunc::x());
        let gg = torus(2, RatFunc::x());
        let h = commutator(&f, &gg).unwrap();
        for k in 1..=5 {
            assert!(distortion_identity(&f, &gg, &h, k).unwrap(), "k = {k}");
        }
    }
}
