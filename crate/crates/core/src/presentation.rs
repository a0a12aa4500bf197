//! Contact (±1)-surgery presentations of a rational contact surgery on a
//! Legendrian unknot, and the linking data they determine.
//!
//! A contact `r`-surgery with `r > 0` first peels off contact (+1)-surgeries
//! (`1/r' = 1/r - 1`) until the residual coefficient is `+1` or negative. A
//! negative residual `r'` is expanded as `r' = [a₁+1, a₂, …, aₙ]` with every
//! `aᵢ ≤ -2`; it becomes a chain of contact (−1)-surgeries where the `i`-th
//! knot is a push-off of its predecessor carrying `|aᵢ + 2|` stabilizations.

use std::fmt;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{format_ratio, ExactInt, Matrix};
use crate::legendrian::{stabilize, ExternalKnot, LegendrianUnknot, Sign};

/// Enumeration refuses to expand more sign vectors than `2^MAX_ENUMERATED_STABILIZATIONS`.
pub const MAX_ENUMERATED_STABILIZATIONS: usize = 20;

/// Negative continued fraction coefficients, all `≤ -2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CfExpansion<I: ExactInt = BigInt> {
    coeffs: Vec<I>,
}

impl<I: ExactInt> CfExpansion<I> {
    pub fn new(coeffs: Vec<I>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidExpansion("empty expansion".into()));
        }
        let bound = I::from_i64_exact(-2);
        if let Some(bad) = coeffs.iter().find(|c| **c > bound) {
            return Err(Error::InvalidExpansion(format!(
                "coefficient {bad} exceeds -2"
            )));
        }
        Ok(CfExpansion { coeffs })
    }

    pub fn coeffs(&self) -> &[I] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Zigzags carried by each chain member: `|aᵢ + 2|`.
    pub fn stabilizations(&self) -> Vec<I> {
        let two = I::from_i64_exact(2);
        self.coeffs
            .iter()
            .map(|a| (a.clone() + two.clone()).abs())
            .collect()
    }

    pub fn total_stabilizations(&self) -> I {
        self.stabilizations()
            .into_iter()
            .fold(I::zero(), |acc, s| acc + s)
    }

    /// The value `[a₁+1, a₂, …, aₙ]` this expansion encodes.
    pub fn value(&self) -> Result<Ratio<I>> {
        let mut shifted = self.coeffs.clone();
        shifted[0] = shifted[0].clone() + I::one();
        evaluate_cf(&shifted)
    }
}

impl<I: ExactInt> fmt::Display for CfExpansion<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl<I: ExactInt> fmt::Debug for CfExpansion<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Evaluates `c₁ - 1/(c₂ - 1/(⋯ - 1/cₙ))`.
pub fn evaluate_cf<I: ExactInt>(coeffs: &[I]) -> Result<Ratio<I>> {
    let (last, rest) = coeffs
        .split_last()
        .ok_or_else(|| Error::InvalidExpansion("empty expansion".into()))?;
    let mut x = Ratio::from_integer(last.clone());
    for c in rest.iter().rev() {
        if x.is_zero() {
            return Err(Error::InvalidExpansion(format!(
                "zero denominator while evaluating {coeffs:?}"
            )));
        }
        x = Ratio::from_integer(c.clone()) - x.recip();
    }
    Ok(x)
}

/// Expansion of a negative rational with the first coefficient shifted down
/// by one, so that `evaluate_cf([a₁+1, a₂, …]) = r` and every `aᵢ ≤ -2`.
pub fn expand_negative<I: ExactInt>(r: &Ratio<I>) -> Result<CfExpansion<I>> {
    if !r.is_negative() {
        return Err(Error::InvalidInput(format!(
            "expansion needs a negative coefficient, got {}",
            format_ratio(r)
        )));
    }
    let mut coeffs = Vec::new();
    let mut x = r.clone();
    loop {
        let c = x.floor();
        let gap = c.clone() - x;
        coeffs.push(c.to_integer());
        if gap.is_zero() {
            break;
        }
        // gap lies in (-1, 0), so the next x is below -1 and its floor is <= -2
        x = gap.recip();
    }
    coeffs[0] = coeffs[0].clone() - I::one();
    CfExpansion::new(coeffs)
}

/// One knot of a (±1)-surgery presentation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Component {
    pub index: usize,
    pub knot: LegendrianUnknot,
    pub contact_sign: Sign,
    /// Component this one was pushed off from.
    pub parent: Option<usize>,
    pub stabs_pos: usize,
    pub stabs_neg: usize,
}

impl Component {
    pub fn stabilizations(&self) -> usize {
        self.stabs_pos + self.stabs_neg
    }

    /// Surgery coefficient against the Seifert longitude: `tb ± 1`.
    pub fn topological_coefficient(&self) -> i64 {
        self.knot.tb() + self.contact_sign.value()
    }
}

/// Shape of the conversion before any stabilization signs are chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConversionPlan<I: ExactInt = BigInt> {
    /// Contact (+1)-surgeries: on the knot itself, then on unstabilized push-offs.
    pub plus_count: usize,
    /// Chain of contact (−1)-surgeries, if the residual coefficient is negative.
    pub chain: Option<CfExpansion<I>>,
}

impl<I: ExactInt> ConversionPlan<I> {
    pub fn for_coefficient(r: &Ratio<I>) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::ZeroSurgery);
        }
        let mut plus_count = 0;
        let mut r = r.clone();
        loop {
            if r.is_negative() {
                return Ok(ConversionPlan {
                    plus_count,
                    chain: Some(expand_negative(&r)?),
                });
            }
            plus_count += 1;
            if r.is_one() {
                return Ok(ConversionPlan {
                    plus_count,
                    chain: None,
                });
            }
            // 1/r' = 1/r - 1
            r = r.clone() / (Ratio::one() - r);
        }
    }

    /// Total number of stabilization signs a presentation must choose.
    pub fn stabilizations(&self) -> Result<usize> {
        match &self.chain {
            None => Ok(0),
            Some(cf) => cf.total_stabilizations().to_usize().ok_or_else(|| {
                Error::InvalidInput("stabilization count exceeds addressable range".into())
            }),
        }
    }
}

/// A sequence of contact (±1)-surgeries equivalent to one rational contact
/// surgery on a Legendrian unknot.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Presentation<I: ExactInt = BigInt> {
    pub source: LegendrianUnknot,
    pub source_coefficient: Ratio<I>,
    pub components: Vec<Component>,
    pub sign_choice: Vec<Sign>,
}

impl<I: ExactInt> Presentation<I> {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn total_stabilizations(&self) -> usize {
        self.components.iter().map(Component::stabilizations).sum()
    }

    /// The sign vector as a `{+,-}` string.
    pub fn label(&self) -> String {
        Sign::format_seq(&self.sign_choice)
    }

    fn is_ancestor(&self, older: usize, younger: usize) -> bool {
        let mut cur = self.components[younger].parent;
        while let Some(p) = cur {
            if p == older {
                return true;
            }
            cur = self.components[p].parent;
        }
        false
    }

    /// Negates every rotation number and flips every stabilization sign.
    pub fn mirror(&self) -> Self {
        Presentation {
            source: self.source.mirror(),
            source_coefficient: self.source_coefficient.clone(),
            components: self
                .components
                .iter()
                .map(|c| Component {
                    knot: c.knot.mirror(),
                    stabs_pos: c.stabs_neg,
                    stabs_neg: c.stabs_pos,
                    ..c.clone()
                })
                .collect(),
            sign_choice: self.sign_choice.iter().map(|s| s.flip()).collect(),
        }
    }
}

/// Converts contact `r`-surgery on `k` into contact (±1)-surgeries, using
/// `signs` for the stabilizations in chain order.
pub fn convert<I: ExactInt>(
    k: LegendrianUnknot,
    r: &Ratio<I>,
    signs: &[Sign],
) -> Result<Presentation<I>> {
    let plan = ConversionPlan::for_coefficient(r)?;
    build(k, r, &plan, signs)
}

fn build<I: ExactInt>(
    k: LegendrianUnknot,
    r: &Ratio<I>,
    plan: &ConversionPlan<I>,
    signs: &[Sign],
) -> Result<Presentation<I>> {
    let needed = plan.stabilizations()?;
    if signs.len() != needed {
        return Err(Error::InvalidInput(format!(
            "expected {needed} stabilization sign(s), got {}",
            signs.len()
        )));
    }

    let mut components: Vec<Component> = Vec::new();
    for index in 0..plan.plus_count {
        components.push(Component {
            index,
            knot: k,
            contact_sign: Sign::Plus,
            parent: index.checked_sub(1),
            stabs_pos: 0,
            stabs_neg: 0,
        });
    }

    if let Some(chain) = &plan.chain {
        let mut remaining = signs.iter().copied();
        let mut knot = k;
        for zigzags in chain.stabilizations() {
            let zigzags = zigzags.to_usize().expect("bounded by the total");
            let (mut stabs_pos, mut stabs_neg) = (0, 0);
            for _ in 0..zigzags {
                let sign = remaining.next().expect("length checked above");
                match sign {
                    Sign::Plus => stabs_pos += 1,
                    Sign::Minus => stabs_neg += 1,
                }
                knot = stabilize(knot, sign);
            }
            let index = components.len();
            components.push(Component {
                index,
                knot,
                contact_sign: Sign::Minus,
                parent: index.checked_sub(1),
                stabs_pos,
                stabs_neg,
            });
        }
    }

    Ok(Presentation {
        source: k,
        source_coefficient: r.clone(),
        components,
        sign_choice: signs.to_vec(),
    })
}

/// Every presentation of contact `r`-surgery on `k`, one per stabilization
/// sign vector, in lexicographic order with `+` before `-`.
pub fn enumerate_presentations<I: ExactInt>(
    k: LegendrianUnknot,
    r: &Ratio<I>,
) -> Result<Vec<Presentation<I>>> {
    let plan = ConversionPlan::for_coefficient(r)?;
    let s = plan.stabilizations()?;
    if s > MAX_ENUMERATED_STABILIZATIONS {
        return Err(Error::InvalidInput(format!(
            "{s} stabilizations would give 2^{s} presentations"
        )));
    }
    (0..1usize << s)
        .map(|bits| {
            let signs: Vec<Sign> = (0..s)
                .map(|i| {
                    if bits >> (s - 1 - i) & 1 == 0 {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    }
                })
                .collect();
            build(k, r, &plan, &signs)
        })
        .collect()
}

/// Linking matrix: topological coefficients on the diagonal, and for a
/// component pushed off (possibly through several generations) from an older
/// one, the older component's `tb` off the diagonal.
pub fn linking_matrix<I: ExactInt>(p: &Presentation<I>) -> Matrix<I> {
    Matrix::from_fn(p.len(), |i, j| {
        let value = if i == j {
            p.components[i].topological_coefficient()
        } else {
            let (older, younger) = if i < j { (i, j) } else { (j, i) };
            if p.is_ancestor(older, younger) {
                p.components[older].knot.tb()
            } else {
                0
            }
        };
        I::from_i64_exact(value)
    })
}

/// Linking numbers of `ext` with every component; push-offs are parallel
/// copies of the surgered knot, so all entries agree.
pub fn linking_vector<I: ExactInt>(p: &Presentation<I>, ext: &ExternalKnot) -> Vec<I> {
    vec![I::from_i64_exact(ext.lk_with_original); p.len()]
}

/// Rotation numbers of the components, in order.
pub fn rot_vector<I: ExactInt>(p: &Presentation<I>) -> Vec<I> {
    p.components
        .iter()
        .map(|c| I::from_i64_exact(c.knot.rot()))
        .collect()
}
