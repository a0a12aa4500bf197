//! Classical invariants of a Legendrian knot in the complement of a
//! (±1)-surgery link, read off after the surgery.
//!
//! With `M` the linking matrix, `L` the linking numbers of the external knot
//! with the link components and `C` the rotation numbers of the components:
//!
//! ```text
//! rot_new = rot - ⟨C, M⁻¹ L⟩
//! tb_new  = tb  - ⟨L, M⁻¹ L⟩
//! ```

use num_rational::Ratio;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{apply, format_ratio, inner, invert, ExactInt};
use crate::legendrian::{ExternalKnot, Sign};
use crate::presentation::{linking_matrix, linking_vector, rot_vector, Presentation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PostSurgeryInvariants {
    pub tb_new: i64,
    pub rot_new: i64,
    pub integral: bool,
}

/// Outcome of checking `tb + |rot| ≤ -1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BennequinVerdict {
    pub satisfied: bool,
    /// `-1 - tb - |rot|`; negative exactly when the inequality fails.
    pub slack: i64,
}

/// Exact rational values of `(tb_new, rot_new)`, before any integrality check.
pub fn raw_invariants<I: ExactInt>(
    p: &Presentation<I>,
    ext: &ExternalKnot,
) -> Result<(Ratio<I>, Ratio<I>)> {
    let inv = invert(&linking_matrix(p))?;
    let l = linking_vector(p, ext);
    let m_inv_l = apply(&inv, &l)?;
    let tb = Ratio::from_integer(I::from_i64_exact(ext.knot.tb())) - inner(&l, &m_inv_l)?;
    let rot =
        Ratio::from_integer(I::from_i64_exact(ext.knot.rot())) - inner(&rot_vector(p), &m_inv_l)?;
    Ok((tb, rot))
}

fn integral(name: &'static str, value: &Ratio<impl ExactInt>) -> Result<i64> {
    let non_integral = || Error::NonIntegralInvariant {
        name,
        value: format_ratio(value),
    };
    if !value.is_integer() {
        return Err(non_integral());
    }
    value.to_integer().to_i64().ok_or_else(non_integral)
}

/// `rot(K₀) - ⟨C, M⁻¹ L⟩`, when integral.
pub fn rot_after_surgery<I: ExactInt>(p: &Presentation<I>, ext: &ExternalKnot) -> Result<i64> {
    let (_, rot) = raw_invariants(p, ext)?;
    integral("rot_new", &rot)
}

/// `tb(K₀) - ⟨L, M⁻¹ L⟩`, when integral.
pub fn tb_after_surgery<I: ExactInt>(p: &Presentation<I>, ext: &ExternalKnot) -> Result<i64> {
    let (tb, _) = raw_invariants(p, ext)?;
    integral("tb_new", &tb)
}

/// Both invariants from a single inversion.
pub fn post_surgery_invariants<I: ExactInt>(
    p: &Presentation<I>,
    ext: &ExternalKnot,
) -> Result<PostSurgeryInvariants> {
    let (tb, rot) = raw_invariants(p, ext)?;
    Ok(PostSurgeryInvariants {
        tb_new: integral("tb_new", &tb)?,
        rot_new: integral("rot_new", &rot)?,
        integral: true,
    })
}

/// Thurston–Bennequin number of a topological framing unknot after a
/// topological ±1 surgery on the knot it frames: down by one for `+1`, up by
/// one for `-1`.
pub fn lemma_tb_shift(topological_sign: Sign, tb0: i64) -> i64 {
    tb0 - topological_sign.value()
}

pub fn bennequin(tb: i64, rot: i64) -> BennequinVerdict {
    let slack = i128::from(-1) - i128::from(tb) - i128::from(rot).abs();
    let slack = slack.clamp(i128::from(i64::MIN), i128::from(i64::MAX)) as i64;
    BennequinVerdict {
        satisfied: slack >= 0,
        slack,
    }
}
