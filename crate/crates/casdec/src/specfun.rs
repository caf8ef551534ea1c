//! Real-argument harmonic number, digamma, polygamma and integer zeta.
//!
//! Strategy: recurrence into the asymptotic regime, then the Bernoulli
//! asymptotic expansion. The image-potential closed forms only need these
//! functions pointwise, so the accuracy target is 1e-10 relative, far beyond
//! any physics tolerance in this crate. Poles raise structured errors rather
//! than returning infinities, because the image potential legitimately probes
//! near-pole arguments as `x -> +-L/2`.

use crate::error::{Error, Result};
use crate::real::Real;

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_86;

/// `B_{2k}/(2k)` for the digamma asymptotic series, k = 1..=7.
const DIGAMMA_ASYM: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
];

/// `B_{2k}/(2k)!` for the Hurwitz-zeta asymptotic series, k = 1..=6.
const HURWITZ_ASYM: [f64; 6] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
];

/// Derivative order for [`polygamma`]; supported range is 0..=12.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolygammaOrder(u32);

impl PolygammaOrder {
    pub const MAX: u32 = 12;

    pub fn new(n: u32) -> Result<Self> {
        if n > Self::MAX {
            return Err(Error::Config(format!(
                "polygamma order {n} unsupported (max {})",
                Self::MAX
            )));
        }
        Ok(Self(n))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }
}

fn is_nonpositive_integer<S: Real>(x: S) -> bool {
    x <= S::zero() && x.floor() == x
}

/// Digamma function `psi(x)` for real `x`.
///
/// Poles at the non-positive integers are reported as [`Error::Pole`].
pub fn digamma<S: Real>(x: S) -> Result<S> {
    if x.is_nan() {
        return Err(Error::Domain("digamma of NaN".into()));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole {
            location: x.to_f64().unwrap_or(f64::NAN),
            context: "digamma pole at non-positive integer".into(),
        });
    }
    if x < S::lit(0.5) {
        // Reflection: psi(x) = psi(1-x) - pi / tan(pi x).
        let reflected = digamma(S::one() - x)?;
        return Ok(reflected - S::PI() / (S::PI() * x).tan());
    }

    let threshold = S::lit(12.0);
    let mut acc = S::zero();
    let mut z = x;
    while z < threshold {
        acc -= z.recip();
        z += S::one();
    }

    let inv2 = (z * z).recip();
    let mut series = S::zero();
    let mut power = inv2;
    for &c in &DIGAMMA_ASYM {
        series += S::lit(c) * power;
        power *= inv2;
    }
    Ok(acc + z.ln() - (S::lit(2.0) * z).recip() - series)
}

/// Hurwitz zeta `zeta(s, x) = sum_{k>=0} (x+k)^{-s}` for integer `s >= 2`,
/// `x > 0`, via recurrence into the asymptotic regime.
fn hurwitz_zeta_int<S: Real>(s: u32, x: S) -> S {
    debug_assert!(s >= 2);
    debug_assert!(x > S::zero());
    let sf = S::from_index(s as usize);
    let threshold = S::lit(16.0 + s as f64);

    let mut head = S::zero();
    let mut z = x;
    while z < threshold {
        head += z.powi(-(s as i32));
        z += S::one();
    }

    // zeta(s, z) ~ z^{1-s}/(s-1) + z^{-s}/2 + sum_k B_{2k}/(2k)! (s)_{2k-1} z^{-s-2k+1}
    let mut tail = z.powi(1 - s as i32) / (sf - S::one()) + z.powi(-(s as i32)) / S::lit(2.0);
    let mut poch = sf; // (s)_{2k-1} accumulates below
    let mut power = z.powi(-(s as i32 + 1));
    let inv2 = (z * z).recip();
    let mut rising = s as usize;
    for (k, &c) in HURWITZ_ASYM.iter().enumerate() {
        if k > 0 {
            // extend the Pochhammer product by two factors
            poch = poch * S::from_index(rising + 1) * S::from_index(rising + 2);
            rising += 2;
            power *= inv2;
        }
        tail += S::lit(c) * poch * power;
    }
    head + tail
}

/// n-th derivative of digamma, `psi(n, x)`, for `1 <= n <= 12` and `x > 0`.
///
/// Satisfies `psi(n, x+1) = psi(n, x) + (-1)^n n!/x^(n+1)`.
pub fn polygamma<S: Real>(order: PolygammaOrder, x: S) -> Result<S> {
    let n = order.get();
    if n == 0 {
        return digamma(x);
    }
    if x.is_nan() {
        return Err(Error::Domain("polygamma of NaN".into()));
    }
    if !(x > S::zero()) {
        return Err(Error::Domain(format!(
            "polygamma({n}, x) requires x > 0, got {x}"
        )));
    }
    let mut factorial = S::one();
    for k in 1..=n as usize {
        factorial *= S::from_index(k);
    }
    let sign = if n % 2 == 0 { -S::one() } else { S::one() };
    Ok(sign * factorial * hurwitz_zeta_int(n + 1, x))
}

/// Riemann zeta at integer argument `s >= 2`, direct summation with an
/// Euler-Maclaurin tail; relative error below 1e-12.
pub fn zeta_int<S: Real>(s: u32) -> Result<S> {
    if s < 2 {
        return Err(Error::Domain(format!("zeta_int requires s >= 2, got {s}")));
    }
    Ok(hurwitz_zeta_int(s, S::one()))
}

/// Harmonic number generalized to real arguments: `H(x) = psi(x+1) + gamma`.
///
/// For positive integers `n` this equals `sum_{k=1}^n 1/k`; poles sit at the
/// negative integers.
pub fn harmonic_real<S: Real>(x: S) -> Result<S> {
    match digamma(x + S::one()) {
        Ok(psi) => Ok(psi + S::lit(EULER_GAMMA)),
        Err(Error::Pole { location, .. }) => Err(Error::Pole {
            location: location - 1.0,
            context: "harmonic number pole at negative integer".into(),
        }),
        Err(e) => Err(e),
    }
}
