//! De Jonquières maps `(η(x), (m₁₁ y + m₁₂)/(m₂₁ y + m₂₂))`.

use serde::{Deserialize, Serialize};

use crate::algebra::modp::{PrimeField, CERTIFICATE_PRIMES};
use crate::algebra::{Mobius, RatFunc, Scalar, TriHomPoly, UniPoly};

use super::affine::{embed, BiRatFunc};
use super::proj::ProjMap;
use super::MapError;

/// Which coordinate is the base of the preserved rational fibration.
///
/// With base `X` the map reads `(η(x), m(x)·y)`; with base `Y` it reads
/// `(m(y)·x, η(y))`, which is how elementary maps `(ax + Q(y), by + c)` are
/// written.  Both share one internal representation, conjugated by the
/// swap `(x, y) ↦ (y, x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Axis {
    X,
    Y,
}

/// A de Jonquières map in normal form.
///
/// The matrix `m` acts on the fiber coordinate by a Möbius transformation
/// with coefficients in `F(base)`.  It is stored with polynomial entries
/// without common factor, scaled so its first nonzero entry is monic; this
/// makes equality structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JonqMap<F> {
    base: Axis,
    eta: Mobius<F>,
    m: [UniPoly<F>; 4],
}

/// A nonzero value of the determinant at a point modulo a prime proves it
/// nonzero without forming the product polynomials.
fn det_certainly_nonzero<F: Scalar>(m: &[UniPoly<F>; 4]) -> bool {
    let field = PrimeField::new(CERTIFICATE_PRIMES[0]);
    let point = 0x1234_5678 % field.modulus();
    let value = |p: &UniPoly<F>| -> Option<u64> {
        p.coeffs()
            .iter()
            .rev()
            .try_fold(0u64, |acc, c| Some(field.add(field.mul(acc, point), c.to_residue(&field)?)))
    };
    let mut v = [0u64; 4];
    for (k, e) in m.iter().enumerate() {
        match value(e) {
            Some(r) => v[k] = r,
            None => return false,
        }
    }
    field.sub(field.mul(v[0], v[3]), field.mul(v[1], v[2])) != 0
}

fn canonical_matrix<F: Scalar>(m: [UniPoly<F>; 4]) -> Result<[UniPoly<F>; 4], MapError> {
    if !det_certainly_nonzero(&m) && (&(&m[0] * &m[3]) - &(&m[1] * &m[2])).is_zero() {
        return Err(MapError::NonInvertible);
    }
    // lowest degree first, so a constant entry settles the gcd at once
    let mut entries: Vec<&UniPoly<F>> = m.iter().filter(|e| !e.is_zero()).collect();
    entries.sort_by_key(|e| e.degree());
    let mut g = entries[0].monic();
    for e in &entries[1..] {
        if g.is_one() {
            break;
        }
        g = g.gcd(e)?;
    }
    // g is monic, so dividing by it keeps leading coefficients
    let scale = m
        .iter()
        .find(|e| !e.is_zero())
        .and_then(|e| e.lc())
        .and_then(|c| c.inv())
        .expect("det != 0");
    let m = m.map(|e| {
        let q = if g.is_one() { e } else { e.exact_div(&g).expect("gcd divides") };
        q.scale(&scale)
    });
    Ok(m)
}

impl<F: Scalar> JonqMap<F> {
    /// Build from a Möbius base action and a matrix of rational functions.
    pub fn new(base: Axis, eta: Mobius<F>, m: [RatFunc<F>; 4]) -> Result<Self, MapError> {
        let mut common = UniPoly::one();
        for e in &m {
            let g = common.gcd(e.den())?;
            common = &common * &e.den().exact_div(&g)?;
        }
        let polys = m.map(|e| {
            let factor = common.exact_div(e.den()).expect("lcm is a multiple");
            e.num() * &factor
        });
        Self::from_polys(base, eta, polys)
    }

    pub fn from_polys(base: Axis, eta: Mobius<F>, m: [UniPoly<F>; 4]) -> Result<Self, MapError> {
        Ok(JonqMap {
            base,
            eta,
            m: canonical_matrix(m)?,
        })
    }

    pub fn identity(base: Axis) -> Self {
        JonqMap {
            base,
            eta: Mobius::identity(),
            m: [UniPoly::one(), UniPoly::zero(), UniPoly::zero(), UniPoly::one()],
        }
    }

    /// `(η(x), y·a(x))`.
    pub fn twisted_scaling(eta: Mobius<F>, a: &RatFunc<F>) -> Result<Self, MapError> {
        Self::new(
            Axis::X,
            eta,
            [a.clone(), RatFunc::zero(), RatFunc::zero(), RatFunc::one()],
        )
    }

    /// `(η(x), y + a(x))`.
    pub fn twisted_shift(eta: Mobius<F>, a: &RatFunc<F>) -> Result<Self, MapError> {
        Self::new(
            Axis::X,
            eta,
            [RatFunc::one(), a.clone(), RatFunc::zero(), RatFunc::one()],
        )
    }

    /// `(αx, βy)`.
    pub fn diagonal(alpha: F, beta: F) -> Result<Self, MapError> {
        Self::twisted_scaling(Mobius::scaling(alpha)?, &RatFunc::constant(beta))
    }

    /// The elementary map `(a x + Q(y), b y + c)`.
    pub fn elementary(a: F, q: UniPoly<F>, b: F, c: F) -> Result<Self, MapError> {
        Self::from_polys(
            Axis::Y,
            Mobius::affine(b, c)?,
            [UniPoly::constant(a), q, UniPoly::zero(), UniPoly::one()],
        )
    }

    pub fn base(&self) -> Axis {
        self.base
    }

    pub fn eta(&self) -> &Mobius<F> {
        &self.eta
    }

    /// Matrix entries `[m₁₁, m₁₂, m₂₁, m₂₂]`.
    pub fn matrix(&self) -> &[UniPoly<F>; 4] {
        &self.m
    }

    pub fn is_identity(&self) -> bool {
        self.eta.is_identity() && self.m_is_identity()
    }

    fn m_is_identity(&self) -> bool {
        self.m[1].is_zero() && self.m[2].is_zero() && self.m[0] == self.m[3]
    }

    fn m_is_constant(&self) -> bool {
        self.m.iter().all(UniPoly::is_constant)
    }

    /// The same map with base `to`, possible when `m` does not depend on
    /// the base coordinate.
    pub fn reorient(&self, to: Axis) -> Option<Self> {
        if to == self.base {
            return Some(self.clone());
        }
        if !self.m_is_constant() {
            return None;
        }
        let [a, b, c, d] = self.m.clone().map(|e| e.coeff(0));
        let fiber = Mobius::new(a, b, c, d).ok()?;
        let [p, q, r, s] = self.eta.entries().clone();
        let m = [p, q, r, s].map(UniPoly::constant);
        Some(JonqMap {
            base: to,
            eta: fiber,
            m: canonical_matrix(m).ok()?,
        })
    }

    /// `m(η(x))`, entries scaled by the common denominator.
    fn matrix_after(&self, eta: &Mobius<F>) -> [UniPoly<F>; 4] {
        let n = self.m.iter().filter_map(UniPoly::degree).max().unwrap_or(0);
        if n == 0 || eta.is_identity() {
            return self.m.clone();
        }
        let [a, b, c, d] = eta.entries().clone();
        let u = UniPoly::linear(a, b);
        let v = UniPoly::linear(c, d);
        self.m.clone().map(|e| e.homogeneous_substitute(&u, &v, n))
    }

    fn same_base_compose(&self, inner: &Self) -> Self {
        let outer = self.matrix_after(&inner.eta);
        let g = &inner.m;
        let prod = [
            &(&outer[0] * &g[0]) + &(&outer[1] * &g[2]),
            &(&outer[0] * &g[1]) + &(&outer[1] * &g[3]),
            &(&outer[2] * &g[0]) + &(&outer[3] * &g[2]),
            &(&outer[2] * &g[1]) + &(&outer[3] * &g[3]),
        ];
        JonqMap {
            base: self.base,
            eta: self.eta.compose(&inner.eta),
            m: canonical_matrix(prod).expect("product of invertible matrices"),
        }
    }

    /// `self ∘ inner`.  Maps fibred over different axes compose only when
    /// one of them can be reoriented.
    pub fn compose(&self, inner: &Self) -> Result<Self, MapError> {
        if self.base == inner.base {
            return Ok(self.same_base_compose(inner));
        }
        if let Some(r) = inner.reorient(self.base) {
            return Ok(self.same_base_compose(&r));
        }
        if let Some(l) = self.reorient(inner.base) {
            return Ok(l.same_base_compose(inner));
        }
        Err(MapError::BaseMismatch)
    }

    /// Two-sided inverse `(η⁻¹, adj(m)∘η⁻¹)`.
    pub fn inverse(&self) -> Self {
        let [a, b, c, d] = self.m.clone();
        let adj = JonqMap {
            base: self.base,
            eta: Mobius::identity(),
            m: [d, -b, -c, a],
        };
        let eta_inv = self.eta.invert();
        JonqMap {
            base: self.base,
            eta: eta_inv.clone(),
            m: canonical_matrix(adj.matrix_after(&eta_inv)).expect("invertible"),
        }
    }

    /// Integer power.
    pub fn pow(&self, n: i64) -> Self {
        let step = if n < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity(self.base);
        for _ in 0..n.unsigned_abs() {
            acc = step.same_base_compose(&acc);
        }
        acc
    }

    /// The affine pair `(X, Y)` in the stored orientation.
    fn oriented_affine(&self) -> (BiRatFunc<F>, BiRatFunc<F>) {
        let [a, b, c, d] = self.eta.entries().clone();
        let fx = BiRatFunc::new(
            embed(&UniPoly::linear(a, b), 0),
            embed(&UniPoly::linear(c, d), 0),
        )
        .expect("Möbius denominator");
        let y = crate::algebra::BiPoly::var(1);
        let num = &(&embed(&self.m[0], 0) * &y) + &embed(&self.m[1], 0);
        let den = &(&embed(&self.m[2], 0) * &y) + &embed(&self.m[3], 0);
        let fy = BiRatFunc::new(num, den).expect("det != 0");
        (fx, fy)
    }

    /// The map on the affine chart as a pair of rational functions.
    pub fn to_affine(&self) -> (BiRatFunc<F>, BiRatFunc<F>) {
        let (fx, fy) = self.oriented_affine();
        match self.base {
            Axis::X => (fx, fy),
            Axis::Y => (fy.swap_vars(), fx.swap_vars()),
        }
    }

    /// Recognize an affine pair as a de Jonquières map, preferring base `X`.
    pub fn from_affine(fx: &BiRatFunc<F>, fy: &BiRatFunc<F>) -> Option<Self> {
        Self::recognize(fx, fy, Axis::X).or_else(|| Self::recognize(&fy.swap_vars(), &fx.swap_vars(), Axis::Y))
    }

    fn recognize(fx: &BiRatFunc<F>, fy: &BiRatFunc<F>, base: Axis) -> Option<Self> {
        let eta_r = fx.as_univariate(0)?;
        let eta = Mobius::from_ratfunc(&eta_r)?;
        let (a, b) = BiRatFunc::linear_in(fy.num(), 1)?;
        let (c, d) = BiRatFunc::linear_in(fy.den(), 1)?;
        Self::from_polys(base, eta, [a, b, c, d]).ok()
    }

    /// Coprime affine triple in the stored orientation and its total degree.
    ///
    /// With `X = ηₙ/η_d` and `Y = N/D`, the affine triple `(ηₙ·D, N·η_d,
    /// η_d·D)` has common factor exactly `gcd(η_d, m₂₁, m₂₂)`, so no
    /// multivariate gcd is needed.
    fn affine_triple(&self) -> ([crate::algebra::BiPoly<F>; 3], u32) {
        let [ea, eb, ec, ed] = self.eta.entries().clone();
        let eta_n = UniPoly::linear(ea, eb);
        let eta_d = UniPoly::linear(ec, ed);
        let g = eta_d
            .gcd(&self.m[2])
            .and_then(|g| g.gcd(&self.m[3]))
            .expect("eta_d is nonzero");
        let (eta_d_red, m21, m22) = if g.is_one() {
            (eta_d.clone(), self.m[2].clone(), self.m[3].clone())
        } else {
            (
                eta_d.exact_div(&g).expect("gcd"),
                self.m[2].exact_div(&g).expect("gcd"),
                self.m[3].exact_div(&g).expect("gcd"),
            )
        };
        let y = crate::algebra::BiPoly::var(1);
        let big_n = &(&embed(&self.m[0], 0) * &y) + &embed(&self.m[1], 0);
        let big_d = &(&embed(&self.m[2], 0) * &y) + &embed(&self.m[3], 0);
        let big_d_red = &(&embed(&m21, 0) * &y) + &embed(&m22, 0);
        let affine = [
            &embed(&eta_n, 0) * &big_d_red,
            &big_n * &embed(&eta_d_red, 0),
            &embed(&eta_d_red, 0) * &big_d,
        ];
        let degree = affine.iter().filter_map(|p| p.total_degree()).max().unwrap_or(0);
        (affine, degree)
    }

    /// Degree and term count of [`to_proj`](Self::to_proj) without the
    /// canonical scaling; homogenizing keeps the number of terms.
    pub fn degree_and_terms(&self) -> (u32, usize) {
        let (affine, degree) = self.affine_triple();
        (degree, affine.iter().map(|p| p.terms().len()).sum())
    }

    /// Reduced homogeneous triple agreeing with the map on `z ≠ 0`.
    pub fn to_proj(&self) -> ProjMap<F> {
        let (affine, degree) = self.affine_triple();
        let comps = [0, 1, 2].map(|k| TriHomPoly::homogenize(&affine[k], degree).expect("degree bound"));
        let comps = match self.base {
            Axis::X => comps,
            Axis::Y => {
                let [a, b, c] = comps;
                [b.swap_xy(), a.swap_xy(), c.swap_xy()]
            }
        };
        ProjMap::from_coprime(comps).expect("birational maps have nonconstant reduced triples")
    }

    /// Degree of the map, read off the reduced projective triple.
    pub fn degree(&self) -> u32 {
        self.degree_and_terms().0
    }

    /// `Some((α, β))` when the map is `(αx, βy)`.
    pub fn as_diagonal(&self) -> Option<(F, F)> {
        let (alpha, beta) = match self.base {
            Axis::X => (self.eta.as_scaling()?, self.fiber_scaling()?),
            Axis::Y => (self.fiber_scaling()?, self.eta.as_scaling()?),
        };
        Some((alpha, beta))
    }

    fn fiber_scaling(&self) -> Option<F> {
        let a = self.y_multiplier()?;
        a.as_constant()
    }

    /// `Some(a)` when the fiber action is `y ↦ a(x)·y`.
    pub fn y_multiplier(&self) -> Option<RatFunc<F>> {
        if !self.m[1].is_zero() || !self.m[2].is_zero() {
            return None;
        }
        RatFunc::new(self.m[0].clone(), self.m[3].clone()).ok()
    }

    /// `Some(a)` when the fiber action is `y ↦ y + a(x)`.
    pub fn y_shift(&self) -> Option<RatFunc<F>> {
        if !self.m[2].is_zero() || self.m[0] != self.m[3] {
            return None;
        }
        RatFunc::new(self.m[1].clone(), self.m[3].clone()).ok()
    }

    /// `Some((τx, τy))` when the map is the translation `(x + τx, y + τy)`.
    pub fn as_translation(&self) -> Option<(F, F)> {
        let (s, t) = self.eta.as_affine()?;
        if !s.is_one() {
            return None;
        }
        let shift = self.y_shift()?.as_constant()?;
        Some(match self.base {
            Axis::X => (t, shift),
            Axis::Y => (shift, t),
        })
    }
}
