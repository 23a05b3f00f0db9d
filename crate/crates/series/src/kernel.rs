//! Kernel polynomials of the three step sets, their small Puiseux roots,
//! and symmetric functions of those roots.
//!
//! Each kernel `K(x, y)` is a polynomial whose small roots (branches
//! `y(x) → 0` as `x → 0`) drive the closed forms for quarter-plane
//! counting series. The roots are computed as exact truncated series by
//! fixed-point iteration on a contracting rearrangement of `K = 0`; no
//! closed-form radicals are consumed here, so comparisons against printed
//! radical expressions are genuine cross-checks.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_rational::BigRational;

use crate::coeff::{Coeff, CycRational};
use crate::series::{SeriesError, TruncatedSeries};

/// `(x power, y power, integer coefficient)` triples.
pub type KernelTerms = &'static [(i64, i64, i64)];

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum KernelId {
    /// `y² − x(1 + y + y²)²`
    MotzkinW,
    /// `y² − x(1 + y²)(1 + y + y²)`
    DyckW,
    /// `y³ − x(1 + xy + y²)(1 + y² + y⁴)`
    SchroderW,
    /// The DyckW kernel with `x` replaced by `x²`; its small roots are the
    /// DyckW roots reparametrised, and they are ordinary series in `x`.
    DyckWXSquared,
}

impl KernelId {
    pub fn name(self) -> &'static str {
        match self {
            KernelId::MotzkinW => "motzkinw",
            KernelId::DyckW => "dyckw",
            KernelId::SchroderW => "schroderw",
            KernelId::DyckWXSquared => "dyckw-x-squared",
        }
    }

    pub fn terms(self) -> KernelTerms {
        match self {
            KernelId::MotzkinW => &[
                (0, 2, 1),
                (1, 0, -1),
                (1, 1, -2),
                (1, 2, -3),
                (1, 3, -2),
                (1, 4, -1),
            ],
            KernelId::DyckW => &[
                (0, 2, 1),
                (1, 0, -1),
                (1, 1, -1),
                (1, 2, -2),
                (1, 3, -1),
                (1, 4, -1),
            ],
            KernelId::SchroderW => &[
                (0, 3, 1),
                (1, 0, -1),
                (1, 2, -2),
                (1, 4, -2),
                (1, 6, -1),
                (2, 1, -1),
                (2, 3, -1),
                (2, 5, -1),
            ],
            KernelId::DyckWXSquared => &[
                (0, 2, 1),
                (2, 0, -1),
                (2, 1, -1),
                (2, 2, -2),
                (2, 3, -1),
                (2, 4, -1),
            ],
        }
    }

    /// Ramification of the small roots: the branches are series in
    /// `t = x^(1/ram)`.
    pub fn ramification(self) -> u32 {
        match self {
            KernelId::MotzkinW | KernelId::DyckW => 2,
            KernelId::SchroderW => 3,
            KernelId::DyckWXSquared => 1,
        }
    }

    /// Number of small roots (the y-multiplicity of the kernel at x = 0).
    pub fn small_root_count(self) -> usize {
        match self {
            KernelId::SchroderW => 3,
            _ => 2,
        }
    }

    /// Total y-degree of the kernel polynomial.
    fn y_degree(self) -> i64 {
        self.terms().iter().map(|&(_, b, _)| b).max().unwrap()
    }
}

/// Evaluates a kernel at a series `y`, where the series' own `ram` defines
/// `x = t^ram`.
pub fn evaluate_kernel<C: Coeff>(
    terms: &[(i64, i64, i64)],
    y: &TruncatedSeries<C>,
) -> TruncatedSeries<C> {
    let ram = y.ram() as i64;
    let max_pow = terms.iter().map(|&(_, b, _)| b).max().unwrap_or(0) as usize;
    let mut powers = Vec::with_capacity(max_pow + 1);
    powers.push(TruncatedSeries::one(y.ram(), y.order() * 2));
    for k in 1..=max_pow {
        powers.push(powers[k - 1].mul(y));
    }
    let mut acc = TruncatedSeries::zero(y.ram(), i64::MAX);
    for &(a, b, c) in terms {
        let term = powers[b as usize].shift(a * ram, &C::from_i64(c));
        acc = acc.add(&term);
    }
    acc
}

/// The formal y-derivative of a kernel, as term triples.
pub fn kernel_dy(terms: &[(i64, i64, i64)]) -> Vec<(i64, i64, i64)> {
    terms
        .iter()
        .filter(|&&(_, b, _)| b >= 1)
        .map(|&(a, b, c)| (a, b - 1, c * b))
        .collect()
}

/// The small roots of a kernel, with residual guarantees.
#[derive(Clone, Debug)]
pub struct KernelRoots {
    pub kernel: KernelId,
    pub ramification: u32,
    pub small_roots: Vec<TruncatedSeries<CycRational>>,
}

impl KernelRoots {
    /// Substitutes root `i` back into the kernel; a correct root gives the
    /// zero series at the tracked truncation order.
    pub fn residual(&self, i: usize) -> TruncatedSeries<CycRational> {
        evaluate_kernel(self.kernel.terms(), &self.small_roots[i])
    }

    /// Elementary symmetric functions `e₁, …, e_d` of the small roots.
    /// These are Galois-invariant, so they must be honest series in `x`
    /// with rational coefficients; anything else is an error.
    pub fn elementary_symmetric(
        &self,
    ) -> Result<Vec<TruncatedSeries<BigRational>>, SeriesError> {
        let d = self.small_roots.len();
        let ram = self.ramification;
        let order = self
            .small_roots
            .iter()
            .map(|s| s.order())
            .min()
            .unwrap_or(0);
        // Build prod (1 + s_i·z) incrementally, tracking z-coefficients.
        let mut es: Vec<TruncatedSeries<CycRational>> = vec![TruncatedSeries::zero(ram, order); d];
        for root in &self.small_roots {
            let prev = es.clone();
            for k in (0..d).rev() {
                let lower = if k == 0 {
                    TruncatedSeries::one(ram, order)
                } else {
                    prev[k - 1].clone()
                };
                es[k] = prev[k].add(&lower.mul(root).truncate(order));
            }
        }
        es.iter().map(|e| rationalize(e)).collect()
    }
}

/// Converts a series with cyclotomic coefficients and x-integral support
/// into a plain rational series in `x` (ram 1).
pub fn rationalize(
    s: &TruncatedSeries<CycRational>,
) -> Result<TruncatedSeries<BigRational>, SeriesError> {
    let mut out = TruncatedSeries::zero(s.ram(), s.order());
    for (e, c) in s.terms() {
        if !c.is_rational() {
            return Err(SeriesError::NonRationalCoefficient { exponent: e });
        }
        out.set_coeff(e, c.re.clone());
    }
    out.compress_ram(s.ram())
}

fn to_cyc(s: &TruncatedSeries<BigRational>) -> TruncatedSeries<CycRational> {
    s.map(|c| CycRational::from_rational(c.clone()))
}

/// Multiplies the coefficient of `t^k` by `ω^(j·k)`: the substitution
/// `t → ω^j t`, which permutes the branches of a cube-root singularity.
fn omega_twist(
    s: &TruncatedSeries<BigRational>,
    j: u32,
) -> TruncatedSeries<CycRational> {
    let omega = CycRational::omega();
    let omega2 = omega.mul(&omega);
    let mut out = TruncatedSeries::zero(s.ram(), s.order());
    for (e, c) in s.terms() {
        let c = CycRational::from_rational(c.clone());
        let v = match (e * j as i64).rem_euclid(3) {
            0 => c,
            1 => c.mul(&omega),
            _ => c.mul(&omega2),
        };
        out.set_coeff(e, v);
    }
    out
}

/// Copies a series into a wider truncation window (added coefficients
/// are zero and get corrected by subsequent Newton passes).
fn extend_order(s: &TruncatedSeries<BigRational>, order: i64) -> TruncatedSeries<BigRational> {
    let mut out = TruncatedSeries::zero(s.ram(), order.max(s.order()));
    for (e, c) in s.terms() {
        out.set_coeff(e, c.clone());
    }
    out
}

/// The principal small root as a rational series in `t = x^(1/ram)`,
/// computed by Newton iteration on the branch equation. The count of
/// correct coefficients doubles per pass, and each pass works just past
/// its doubling front, so the total cost is a small multiple of the final
/// pass. Every kernel's principal branch is `y = t + O(t²)`, which is far
/// enough from the conjugate branches (distance `t`) for Newton to stay
/// on it. Correctness of the result is asserted by the residual check in
/// `solve_kernel_roots`.
fn principal_root(id: KernelId, order_t: i64) -> TruncatedSeries<BigRational> {
    type S = TruncatedSeries<BigRational>;
    let ram = match id {
        KernelId::DyckWXSquared => KernelId::DyckW.ramification(),
        other => other.ramification(),
    };
    let two = <BigRational as Coeff>::from_i64(2);
    let mut s = S::monomial(ram, 2, 1, Coeff::one());
    let mut correct: i64 = 1;
    while correct < order_t {
        let target = (2 * correct).min(order_t);
        // Dividing by the branch derivative (valuation up to 2) costs
        // trusted orders, so work at a margin above the target.
        let w = target + 4;
        let s_w = extend_order(&s, w);
        let one = S::one(ram, w);
        let t = S::monomial(ram, w, 1, Coeff::one());
        let (phi, dphi) = match id {
            KernelId::MotzkinW => {
                // Branch y = t(1 + y + y²); the derivative is a unit.
                let g = one.add(&s_w).add(&s_w.mul(&s_w).truncate(w));
                let dg = one.add(&s_w).add(&s_w);
                (s_w.sub(&t.mul(&g).truncate(w)), one.sub(&t.mul(&dg).truncate(w)))
            }
            KernelId::DyckW | KernelId::DyckWXSquared => {
                // y² = t²(1 + y²)(1 + y + y²)
                let t2 = S::monomial(ram, w, 2, Coeff::one());
                let s2 = s_w.mul(&s_w).truncate(w);
                let a = one.add(&s2);
                let b = one.add(&s_w).add(&s2);
                let phi = s2.sub(&t2.mul(&a.mul(&b).truncate(w)).truncate(w));
                let da = s_w.scale(&two);
                let db = one.add(&s_w.scale(&two));
                let dprod = da.mul(&b).add(&a.mul(&db)).truncate(w);
                (phi, s_w.scale(&two).sub(&t2.mul(&dprod).truncate(w)))
            }
            KernelId::SchroderW => {
                // y³ = t³(1 + t³y + y²)(1 + y² + y⁴)
                let t3 = S::monomial(ram, w, 3, Coeff::one());
                let s2 = s_w.mul(&s_w).truncate(w);
                let s3 = s2.mul(&s_w).truncate(w);
                let s4 = s2.mul(&s2).truncate(w);
                let a = one.add(&t3.mul(&s_w).truncate(w)).add(&s2);
                let b = one.add(&s2).add(&s4);
                let phi = s3.sub(&t3.mul(&a.mul(&b).truncate(w)).truncate(w));
                let da = t3.add(&s_w.scale(&two));
                let db = s_w.scale(&two).add(&s3.scale(&<BigRational as Coeff>::from_i64(4)));
                let dprod = da.mul(&b).add(&a.mul(&db)).truncate(w);
                let dphi = s2.scale(&<BigRational as Coeff>::from_i64(3)).sub(&t3.mul(&dprod).truncate(w));
                (phi, dphi)
            }
        };
        let delta = phi
            .div(&dphi)
            .expect("branch derivative has an invertible leading coefficient");
        s = s_w.sub(&delta).truncate(target);
        correct = target;
    }
    s.truncate(order_t)
}

fn root_cache() -> &'static Mutex<HashMap<KernelId, KernelRoots>> {
    static CACHE: OnceLock<Mutex<HashMap<KernelId, KernelRoots>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Computes all small roots of a kernel to the given order in `t`.
/// Residuals are checked before a solve is accepted. Solves are cached
/// per kernel, so repeated requests (from different catalogue names, or
/// from parallel callers) cost one computation at the widest order seen.
pub fn solve_kernel_roots(id: KernelId, order_t: i64) -> KernelRoots {
    let cached = {
        let cache = root_cache().lock().expect("root cache poisoned");
        cache.get(&id).cloned()
    };
    if let Some(roots) = cached {
        if roots.small_roots.iter().all(|r| r.order() >= order_t) {
            return KernelRoots {
                kernel: roots.kernel,
                ramification: roots.ramification,
                small_roots: roots
                    .small_roots
                    .into_iter()
                    .map(|r| r.truncate(order_t))
                    .collect(),
            };
        }
    }
    let roots = compute_kernel_roots(id, order_t);
    let mut cache = root_cache().lock().expect("root cache poisoned");
    let entry = cache.entry(id).or_insert_with(|| roots.clone());
    if entry.small_roots.iter().any(|r| r.order() < order_t) {
        *entry = roots.clone();
    }
    roots
}

fn compute_kernel_roots(id: KernelId, order_t: i64) -> KernelRoots {
    let principal = principal_root(id, order_t);
    let small_roots: Vec<TruncatedSeries<CycRational>> = match id {
        KernelId::MotzkinW | KernelId::DyckW => {
            vec![to_cyc(&principal), to_cyc(&principal.subst_neg())]
        }
        KernelId::DyckWXSquared => {
            // Reparametrise the DyckW branches: a series in t with x = t²
            // becomes, coefficientwise, the series in x for the root of
            // the x → x² kernel.
            vec![
                to_cyc(&reinterpret_as_x(&principal)),
                to_cyc(&reinterpret_as_x(&principal.subst_neg())),
            ]
        }
        KernelId::SchroderW => {
            vec![
                to_cyc(&principal),
                omega_twist(&principal, 1),
                omega_twist(&principal, 2),
            ]
        }
    };
    let roots = KernelRoots {
        kernel: id,
        ramification: id.ramification(),
        small_roots,
    };
    for i in 0..roots.small_roots.len() {
        let residual = roots.residual(i);
        assert!(
            residual.is_zero(),
            "kernel {} root {i} residual nonzero at t^{:?}",
            id.name(),
            residual.valuation()
        );
    }
    roots
}

fn reinterpret_as_x(s: &TruncatedSeries<BigRational>) -> TruncatedSeries<BigRational> {
    let mut out = TruncatedSeries::zero(1, s.order());
    for (e, c) in s.terms() {
        out.set_coeff(e, c.clone());
    }
    out
}

/// Elementary symmetric functions of the small roots, as plain rational
/// series in `x` to (at least) the requested x-order.
pub fn symmetric_functions_small_roots(
    id: KernelId,
    order_x: i64,
) -> Vec<TruncatedSeries<BigRational>> {
    let order_t = order_x * id.ramification() as i64 + id.ramification() as i64;
    let roots = solve_kernel_roots(id, order_t);
    roots
        .elementary_symmetric()
        .expect("symmetric functions of a full branch orbit are rational in x")
}

/// Independent route to the same symmetric functions: lift the monic
/// factor of the kernel that carries the small roots, coefficient by
/// coefficient, over the power-series ring in `x`. Returns `e₁, …, e_d`
/// read off the lifted factor. Converges one x-order per iteration
/// because the complementary factor is a unit.
pub fn hensel_symmetric_functions(
    id: KernelId,
    order_x: i64,
) -> Vec<TruncatedSeries<BigRational>> {
    let d = id.small_root_count() as i64;
    let deg = id.y_degree();
    let order = order_x + 1;
    let terms = id.terms();
    // factor[k] is the y^k coefficient of C(y) = y^d + Σ factor[k]·y^k.
    let mut factor: Vec<TruncatedSeries<BigRational>> =
        vec![TruncatedSeries::zero(1, order); d as usize];
    for _ in 0..=order {
        // remainder = K mod C, by long division in y over Q[[x]].
        let mut work: Vec<TruncatedSeries<BigRational>> =
            vec![TruncatedSeries::zero(1, order); (deg + 1) as usize];
        for &(a, b, c) in terms {
            let t = TruncatedSeries::monomial(1, order, a, Coeff::from_i64(c));
            work[b as usize] = work[b as usize].add(&t);
        }
        for k in (d..=deg).rev() {
            let q = work[k as usize].clone();
            if q.is_zero() {
                continue;
            }
            work[k as usize] = TruncatedSeries::zero(1, order);
            for (j, f) in factor.iter().enumerate() {
                let idx = (k - d) as usize + j;
                work[idx] = work[idx].sub(&q.mul(f).truncate(order));
            }
        }
        let mut changed = false;
        for (k, f) in factor.iter_mut().enumerate() {
            let next = f.add(&work[k]);
            if next != *f {
                changed = true;
            }
            *f = next;
        }
        if !changed {
            break;
        }
    }
    // C(y) = Π (y − s_i) = y^d − e₁y^(d−1) + e₂y^(d−2) − …
    (1..=d)
        .map(|k| {
            let c = factor[(d - k) as usize].clone();
            if k % 2 == 1 {
                c.neg()
            } else {
                c
            }
        })
        .collect()
}
