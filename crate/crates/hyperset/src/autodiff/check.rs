//! Central finite-difference gradient verification.

use super::{backward, Tape, Tensor};
use crate::error::{Error, Result};

/// Denominator floor. Central differences carry ~|f|·1e-16/h of rounding
/// noise, so entries whose true gradient is near zero would otherwise report
/// a large relative error from pure roundoff. With the floor, the check
/// enforces an absolute tolerance of `tol * REL_FLOOR` on such entries.
const REL_FLOOR: f64 = 1e-3;

/// Compare the analytic gradient of a scalar-valued `f` at `x` against
/// central finite differences with step `h`.
///
/// Returns the max over entries of
/// `|analytic - numeric| / (|analytic| + |numeric| + REL_FLOOR)`.
pub fn finite_difference_check<F>(f: F, x: &Tensor, h: f64) -> Result<f64>
where
    F: Fn(&Tensor) -> Result<Tensor>,
{
    if h <= 0.0 {
        return Err(Error::Usage("finite_difference_check: h must be positive".into()));
    }
    let (rows, cols) = x.shape();
    let n = rows * cols;

    let tape = Tape::new();
    let leaf = tape.leaf(&x.detach());
    let loss = f(&leaf)?;
    if loss.shape() != (1, 1) {
        return Err(Error::Usage(format!(
            "finite_difference_check: f must be scalar-valued, got {}x{}",
            loss.rows(),
            loss.cols()
        )));
    }
    let analytic: Vec<f64> = if loss.is_tracked() {
        let grads = backward(&loss)?;
        match grads.get(&leaf) {
            Some(g) => g.data().to_vec(),
            None => vec![0.0; n],
        }
    } else {
        // f never looked at x: constant function, zero gradient
        vec![0.0; n]
    };

    let mut max_rel: f64 = 0.0;
    for idx in 0..n {
        let mut plus = x.data().to_vec();
        plus[idx] += h;
        let mut minus = x.data().to_vec();
        minus[idx] -= h;
        let fp = f(&Tensor::new(rows, cols, plus)?)?.scalar()?;
        let fm = f(&Tensor::new(rows, cols, minus)?)?.scalar()?;
        let numeric = (fp - fm) / (2.0 * h);
        let a = analytic[idx];
        let rel = (a - numeric).abs() / (a.abs() + numeric.abs() + REL_FLOOR);
        max_rel = max_rel.max(rel);
    }
    Ok(max_rel)
}
