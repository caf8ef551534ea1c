//! Gauss-Legendre panel quadrature with an adaptive bisection wrapper.
//!
//! Used for the transverse-momentum integrals of the mode sums and for the
//! double time integrals of the noise kernel. Integrands may be real or
//! complex; panels can be seeded with known awkward points (kernel spikes,
//! lightcone times) before any adaptive refinement happens.

use crate::error::{Error, Result};
use crate::real::Real;
use num_complex::Complex;
use num_traits::Zero;

/// 12-point Gauss-Legendre abscissas on [0, 1) folded to the positive half.
const GL12_X: [f64; 6] = [
    0.125233408511468915472441369464,
    0.367831498998180193752691536644,
    0.587317954286617447296702418941,
    0.769902674194304687036893833213,
    0.904117256370474856678465866119,
    0.981560634246719250690549090149,
];
const GL12_W: [f64; 6] = [
    0.249147045813402785000562436043,
    0.233492536538354808760849898925,
    0.203167426723065921749064455810,
    0.160078328543346226334652529543,
    0.106939325995318430960254718194,
    0.047175336386511827194615961485,
];

/// Values a quadrature routine can accumulate: the scalar itself or a
/// complex number over it.
pub trait QuadValue<S: Real>:
    Copy
    + Zero
    + core::ops::Add<Output = Self>
    + core::ops::Sub<Output = Self>
    + core::ops::Mul<S, Output = Self>
{
    fn magnitude(&self) -> S;
}

impl<S: Real> QuadValue<S> for S {
    #[inline]
    fn magnitude(&self) -> S {
        self.abs()
    }
}

impl<S: Real> QuadValue<S> for Complex<S> {
    #[inline]
    fn magnitude(&self) -> S {
        self.norm()
    }
}

/// Single 12-point Gauss-Legendre panel over `[a, b]`.
pub fn gauss12<S: Real, V: QuadValue<S>, F: Fn(S) -> V>(f: &F, a: S, b: S) -> V {
    let half = (b - a) * S::lit(0.5);
    let mid = (a + b) * S::lit(0.5);
    let mut acc = V::zero();
    for i in 0..6 {
        let dx = half * S::lit(GL12_X[i]);
        let w = S::lit(GL12_W[i]);
        acc = acc + (f(mid + dx) + f(mid - dx)) * w;
    }
    acc * half
}

/// Composite Gauss-Legendre rule with `n_panels` equal panels.
pub fn composite<S: Real, V: QuadValue<S>, F: Fn(S) -> V>(
    f: &F,
    a: S,
    b: S,
    n_panels: usize,
) -> V {
    let n = n_panels.max(1);
    let width = (b - a) / S::from_index(n);
    let mut acc = V::zero();
    for i in 0..n {
        let lo = a + width * S::from_index(i);
        let hi = if i + 1 == n { b } else { lo + width };
        acc = acc + gauss12(f, lo, hi);
    }
    acc
}

/// Adaptive bisection quadrature over `[a, b]`.
///
/// `seeds` lists interior points where the integrand is known to be sharp;
/// the interval is pre-split there. Refinement stops when the two-half
/// estimate of a segment agrees with the one-panel estimate to the requested
/// tolerance; exceeding `max_depth` is a numerical error carrying the
/// offending segment for diagnostics.
pub fn adaptive<S: Real, V: QuadValue<S>, F: Fn(S) -> V>(
    f: &F,
    a: S,
    b: S,
    rel_tol: S,
    abs_tol: S,
    max_depth: u32,
    seeds: &[S],
) -> Result<V> {
    if !(b > a) {
        return Ok(V::zero());
    }
    let span = b - a;
    let mut edges: Vec<S> = Vec::with_capacity(seeds.len() + 2);
    edges.push(a);
    for &s in seeds {
        if s > a && s < b {
            edges.push(s);
        }
    }
    edges.push(b);
    edges.sort_by(|p, q| p.partial_cmp(q).unwrap());

    let mut total = V::zero();
    let mut stack: Vec<(S, S, u32)> = edges
        .windows(2)
        .rev()
        .map(|w| (w[0], w[1], 0u32))
        .collect();

    while let Some((lo, hi, depth)) = stack.pop() {
        let coarse = gauss12(f, lo, hi);
        let mid = (lo + hi) * S::lit(0.5);
        let fine = gauss12(f, lo, mid) + gauss12(f, mid, hi);
        let err = (coarse - fine).magnitude();
        let local_abs = abs_tol * ((hi - lo) / span);
        if err <= local_abs || err <= rel_tol * fine.magnitude() {
            total = total + fine;
        } else if depth >= max_depth {
            return Err(Error::Numerical(format!(
                "adaptive quadrature failed to converge on [{lo}, {hi}] (depth {depth}, err {err})"
            )));
        } else {
            stack.push((mid, hi, depth + 1));
            stack.push((lo, mid, depth + 1));
        }
    }
    Ok(total)
}
