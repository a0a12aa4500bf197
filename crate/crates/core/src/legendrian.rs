//! Legendrian unknots in the standard tight 3-sphere.
//!
//! A Legendrian unknot is determined up to Legendrian isotopy by its
//! Thurston–Bennequin number and rotation number, so the pair `(tb, rot)` is
//! the whole model. Framings on the boundary torus of a standard
//! neighbourhood are written in the (Seifert longitude, meridian) basis; the
//! contact longitude is `λ + tb·μ`.

use std::fmt;

use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::ExactInt;

/// Orientation of a stabilization, or the sign of a ±1 coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            _ => None,
        }
    }

    /// Parses a string over `{+,-}`; whitespace and commas are ignored.
    pub fn parse_seq(s: &str) -> Result<Vec<Sign>> {
        s.chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| {
                Sign::from_char(c)
                    .ok_or_else(|| Error::InvalidInput(format!("bad sign character `{c}`")))
            })
            .collect()
    }

    pub fn format_seq(signs: &[Sign]) -> String {
        signs.iter().map(|s| s.as_char()).collect()
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A Legendrian unknot, identified by its classical invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LegendrianUnknot {
    tb: i64,
    rot: i64,
}

impl LegendrianUnknot {
    /// The unknot with `tb = -1, rot = 0`.
    pub const STANDARD: LegendrianUnknot = LegendrianUnknot { tb: -1, rot: 0 };

    pub fn new(tb: i64, rot: i64) -> Result<Self> {
        validate_unknot(tb, rot)
    }

    pub fn tb(&self) -> i64 {
        self.tb
    }

    pub fn rot(&self) -> i64 {
        self.rot
    }

    /// Reverses the rotation number (the mirror `rot → -rot`).
    pub fn mirror(&self) -> Self {
        LegendrianUnknot {
            tb: self.tb,
            rot: -self.rot,
        }
    }
}

impl fmt::Display for LegendrianUnknot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(tb {}, rot {})", self.tb, self.rot)
    }
}

/// Checks the realizability conditions for a Legendrian unknot.
pub fn validate_unknot(tb: i64, rot: i64) -> Result<LegendrianUnknot> {
    let fail = |condition| Err(Error::InvalidLegendrian { tb, rot, condition });
    if tb > -1 {
        return fail("tb <= -1");
    }
    match tb.checked_add(rot.checked_abs().unwrap_or(i64::MAX)) {
        Some(s) if s <= -1 => {}
        _ => return fail("tb + |rot| <= -1"),
    }
    if (i128::from(rot) - i128::from(tb) - 1).rem_euclid(2) != 0 {
        return fail("rot = tb + 1 (mod 2)");
    }
    Ok(LegendrianUnknot { tb, rot })
}

/// Adds one zigzag: `tb` drops by one, `rot` moves by the sign.
pub fn stabilize(k: LegendrianUnknot, sign: Sign) -> LegendrianUnknot {
    LegendrianUnknot {
        tb: k.tb - 1,
        rot: k.rot + sign.value(),
    }
}

/// A simple closed curve `a·λ + b·μ` on the boundary torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FramingCurve {
    pub lambda_coeff: i64,
    pub mu_coeff: i64,
}

impl FramingCurve {
    /// Contact longitude `λ + tb·μ` of `k`.
    pub fn contact_longitude(k: LegendrianUnknot) -> Self {
        FramingCurve {
            lambda_coeff: 1,
            mu_coeff: k.tb,
        }
    }
}

/// The curve `λ_c + n·μ = λ + (n + tb)·μ` for an integral contact framing `n`.
pub fn contact_framing_curve<I: ExactInt>(
    k: LegendrianUnknot,
    n: &Ratio<I>,
) -> Result<FramingCurve> {
    if !n.is_integer() {
        return Err(Error::UnsupportedFraming(crate::exact::format_ratio(n)));
    }
    let n = n
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::InvalidInput(format!("framing {n} out of range")))?;
    let mu_coeff = n
        .checked_add(k.tb)
        .ok_or_else(|| Error::InvalidInput("framing out of range".into()))?;
    Ok(FramingCurve {
        lambda_coeff: 1,
        mu_coeff,
    })
}

/// Converts a contact surgery coefficient into the topological one (`r + tb`).
pub fn topological_coefficient<I: ExactInt>(k: LegendrianUnknot, r: &Ratio<I>) -> Ratio<I> {
    r.clone() + Ratio::from_integer(I::from_i64_exact(k.tb))
}

/// Which sign of topological ±1-surgery the contact `n`-framing on an unknot
/// with `tb = -m` realizes, if any.
pub fn kirby_topological_condition(m: i64, n: i64) -> Option<Sign> {
    match n.checked_sub(m)? {
        1 => Some(Sign::Plus),
        -1 => Some(Sign::Minus),
        _ => None,
    }
}

/// An unknot outside the surgery link, with its linking number against the
/// surgered knot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExternalKnot {
    pub knot: LegendrianUnknot,
    pub lk_with_original: i64,
}

impl ExternalKnot {
    pub fn new(knot: LegendrianUnknot, lk_with_original: i64) -> Self {
        ExternalKnot {
            knot,
            lk_with_original,
        }
    }

    /// The topological framing unknot of a ±1 surgery: `(tb -1, rot 0)`
    /// linking once with the given sign.
    pub fn framing_unknot(sign: Sign) -> Self {
        ExternalKnot::new(LegendrianUnknot::STANDARD, sign.value())
    }

    pub fn mirror(&self) -> Self {
        ExternalKnot::new(self.knot.mirror(), self.lk_with_original)
    }

    pub fn is_unlinked(&self) -> bool {
        self.lk_with_original.is_zero()
    }
}
