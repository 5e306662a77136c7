//! Forward ops on [`Tensor`] plus their backward accumulation rules.

use std::sync::Arc;

use super::{Op, Saved, Tape, Tensor};
use crate::error::{Error, Result};

fn shape_err(op: &'static str, a: &Tensor, b: &Tensor) -> Error {
    Error::ShapeMismatch {
        op,
        lhs_rows: a.rows,
        lhs_cols: a.cols,
        rhs_rows: b.rows,
        rhs_cols: b.cols,
    }
}

fn unary_shape_err(op: &'static str, a: &Tensor, want_rows: usize, want_cols: usize) -> Error {
    Error::ShapeMismatch {
        op,
        lhs_rows: a.rows,
        lhs_cols: a.cols,
        rhs_rows: want_rows,
        rhs_cols: want_cols,
    }
}

/// Record `value` on the inputs' tape (if any input is tracked).
fn record(inputs: &[&Tensor], value: Tensor, op: impl FnOnce() -> Op) -> Result<Tensor> {
    match Tape::recording_for(inputs)? {
        None => Ok(value),
        Some(tape) => {
            let (id, serial) = tape.push(op());
            Ok(value.with_node(&tape, id, serial))
        }
    }
}

/// Row-major GEMM: C(m x n) = alpha * A(m x k) * B(k x n) + beta * C.
pub(crate) fn dgemm_rm(
    m: usize,
    k: usize,
    n: usize,
    alpha: f64,
    a: &[f64],
    rsa: isize,
    csa: isize,
    b: &[f64],
    rsb: isize,
    csb: isize,
    beta: f64,
    c: &mut [f64],
) {
    if m == 0 || n == 0 {
        return;
    }
    debug_assert!(c.len() >= m * n);
    unsafe {
        matrixmultiply::dgemm(
            m,
            k,
            n,
            alpha,
            a.as_ptr(),
            rsa,
            csa,
            b.as_ptr(),
            rsb,
            csb,
            beta,
            c.as_mut_ptr(),
            n as isize,
            1,
        );
    }
}

impl Tensor {
    pub fn matmul(&self, rhs: &Tensor) -> Result<Tensor> {
        if self.cols != rhs.rows {
            return Err(shape_err("matmul", self, rhs));
        }
        let (m, k, n) = (self.rows, self.cols, rhs.cols);
        let mut out = vec![0.0; m * n];
        dgemm_rm(
            m, k, n, 1.0, &self.data, k as isize, 1, &rhs.data, n as isize, 1, 0.0, &mut out,
        );
        let value = Tensor {
            rows: m,
            cols: n,
            data: Arc::new(out),
            node: None,
        };
        record(&[self, rhs], value, || Op::Matmul {
            a: self.saved(),
            b: rhs.saved(),
        })
    }

    pub fn add(&self, rhs: &Tensor) -> Result<Tensor> {
        if self.shape() != rhs.shape() {
            return Err(shape_err("add", self, rhs));
        }
        let data = self
            .data
            .iter()
            .zip(rhs.data.iter())
            .map(|(a, b)| a + b)
            .collect();
        let value = Tensor {
            rows: self.rows,
            cols: self.cols,
            data: Arc::new(data),
            node: None,
        };
        record(&[self, rhs], value, || Op::Add {
            a: self.saved(),
            b: rhs.saved(),
        })
    }

    pub fn sub(&self, rhs: &Tensor) -> Result<Tensor> {
        if self.shape() != rhs.shape() {
            return Err(shape_err("sub", self, rhs));
        }
        let data = self
            .data
            .iter()
            .zip(rhs.data.iter())
            .map(|(a, b)| a - b)
            .collect();
        let value = Tensor {
            rows: self.rows,
            cols: self.cols,
            data: Arc::new(data),
            node: None,
        };
        record(&[self, rhs], value, || Op::Sub {
            a: self.saved(),
            b: rhs.saved(),
        })
    }

    /// Elementwise product.
    pub fn hadamard(&self, rhs: &Tensor) -> Result<Tensor> {
        if self.shape() != rhs.shape() {
            return Err(shape_err("hadamard", self, rhs));
        }
        let data = self
            .data
            .iter()
            .zip(rhs.data.iter())
            .map(|(a, b)| a * b)
            .collect();
        let value = Tensor {
            rows: self.rows,
            cols: self.cols,
            data: Arc::new(data),
            node: None,
        };
        record(&[self, rhs], value, || Op::Hadamard {
            a: self.saved(),
            b: rhs.saved(),
        })
    }

    pub fn scale(&self, c: f64) -> Result<Tensor> {
        let data = self.data.iter().map(|a| a * c).collect();
        let value = Tensor {
            rows: self.rows,
            cols: self.cols,
            data: Arc::new(data),
            node: None,
        };
        record(&[self], value, || Op::Scale { x: self.saved(), c })
    }

    pub fn relu(&self) -> Result<Tensor> {
        let data = self.data.iter().map(|a| a.max(0.0)).collect();
        let value = Tensor {
            rows: self.rows,
            cols: self.cols,
            data: Arc::new(data),
            node: None,
        };
        record(&[self], value, || Op::Relu { x: self.saved() })
    }

    pub fn sigmoid(&self) -> Result<Tensor> {
        let data: Vec<f64> = self.data.iter().map(|a| 1.0 / (1.0 + (-a).exp())).collect();
        let value = Tensor {
            rows: self.rows,
            cols: self.cols,
            data: Arc::new(data),
            node: None,
        };
        let y = Arc::clone(&value.data);
        record(&[self], value, || Op::Sigmoid {
            x: self.saved(),
            y,
        })
    }

    /// Row-wise layer norm with learned 1xC gain and bias.
    pub fn layer_norm(&self, gain: &Tensor, bias: &Tensor, eps: f64) -> Result<Tensor> {
        if gain.rows != 1 || gain.cols != self.cols {
            return Err(shape_err("layer_norm", self, gain));
        }
        if bias.rows != 1 || bias.cols != self.cols {
            return Err(shape_err("layer_norm", self, bias));
        }
        let (m, d) = (self.rows, self.cols);
        let mut xhat = vec![0.0; m * d];
        let mut inv_std = vec![0.0; m];
        let mut out = vec![0.0; m * d];
        for i in 0..m {
            let row = &self.data[i * d..(i + 1) * d];
            let mu = row.iter().sum::<f64>() / d as f64;
            let var = row.iter().map(|x| (x - mu) * (x - mu)).sum::<f64>() / d as f64;
            let is = 1.0 / (var + eps).sqrt();
            inv_std[i] = is;
            for j in 0..d {
                let xh = (row[j] - mu) * is;
                xhat[i * d + j] = xh;
                out[i * d + j] = xh * gain.data[j] + bias.data[j];
            }
        }
        let value = Tensor {
            rows: m,
            cols: d,
            data: Arc::new(out),
            node: None,
        };
        let xhat = Arc::new(xhat);
        record(&[self, gain, bias], value, || Op::LayerNorm {
            x: self.saved(),
            gain: gain.saved(),
            bias: bias.saved(),
            xhat,
            inv_std,
        })
    }

    /// 1xC row of per-column means.
    pub fn mean_rows(&self) -> Result<Tensor> {
        let (m, c) = (self.rows, self.cols);
        if m == 0 {
            return Err(Error::Usage("mean_rows on an empty tensor".into()));
        }
        let mut out = vec![0.0; c];
        for i in 0..m {
            for j in 0..c {
                out[j] += self.data[i * c + j];
            }
        }
        for v in &mut out {
            *v /= m as f64;
        }
        let value = Tensor {
            rows: 1,
            cols: c,
            data: Arc::new(out),
            node: None,
        };
        record(&[self], value, || Op::MeanRows { x: self.saved() })
    }

    /// Broadcast a 1xC row to `rows` x C.
    pub fn broadcast_row(&self, rows: usize) -> Result<Tensor> {
        if self.rows != 1 {
            return Err(unary_shape_err("broadcast_row", self, 1, self.cols));
        }
        let mut out = Vec::with_capacity(rows * self.cols);
        for _ in 0..rows {
            out.extend_from_slice(&self.data);
        }
        let value = Tensor {
            rows,
            cols: self.cols,
            data: Arc::new(out),
            node: None,
        };
        record(&[self], value, || Op::BroadcastRow { x: self.saved() })
    }

    pub fn concat_cols(&self, rhs: &Tensor) -> Result<Tensor> {
        if self.rows != rhs.rows {
            return Err(shape_err("concat_cols", self, rhs));
        }
        let (m, c1, c2) = (self.rows, self.cols, rhs.cols);
        let mut out = Vec::with_capacity(m * (c1 + c2));
        for i in 0..m {
            out.extend_from_slice(&self.data[i * c1..(i + 1) * c1]);
            out.extend_from_slice(&rhs.data[i * c2..(i + 1) * c2]);
        }
        let value = Tensor {
            rows: m,
            cols: c1 + c2,
            data: Arc::new(out),
            node: None,
        };
        record(&[self, rhs], value, || Op::ConcatCols {
            a: self.saved(),
            b: rhs.saved(),
        })
    }

    pub fn sum_all(&self) -> Result<Tensor> {
        let s: f64 = self.data.iter().sum();
        let value = Tensor {
            rows: 1,
            cols: 1,
            data: Arc::new(vec![s]),
            node: None,
        };
        record(&[self], value, || Op::SumAll { x: self.saved() })
    }

    /// Elementwise binary cross-entropy `-y ln p - (1-y) ln(1-p)` with `p`
    /// clamped to `[BCE_CLAMP, 1-BCE_CLAMP]`.
    pub fn bce(&self, target: &Tensor) -> Result<Tensor> {
        if self.shape() != target.shape() {
            return Err(shape_err("bce", self, target));
        }
        let data = self
            .data
            .iter()
            .zip(target.data.iter())
            .map(|(&p, &y)| {
                let pc = p.clamp(super::BCE_CLAMP, 1.0 - super::BCE_CLAMP);
                -y * pc.ln() - (1.0 - y) * (1.0 - pc).ln()
            })
            .collect();
        let value = Tensor {
            rows: self.rows,
            cols: self.cols,
            data: Arc::new(data),
            node: None,
        };
        record(&[self, target], value, || Op::Bce {
            p: self.saved(),
            y: target.saved(),
        })
    }

    pub fn transpose(&self) -> Result<Tensor> {
        let (m, c) = (self.rows, self.cols);
        let mut out = vec![0.0; m * c];
        for i in 0..m {
            for j in 0..c {
                out[j * m + i] = self.data[i * c + j];
            }
        }
        let value = Tensor {
            rows: c,
            cols: m,
            data: Arc::new(out),
            node: None,
        };
        record(&[self], value, || Op::Transpose { x: self.saved() })
    }

    /// Elementwise `1 / (x + c)`.
    pub fn recip_shift(&self, c: f64) -> Result<Tensor> {
        let data: Vec<f64> = self.data.iter().map(|a| 1.0 / (a + c)).collect();
        let value = Tensor {
            rows: self.rows,
            cols: self.cols,
            data: Arc::new(data),
            node: None,
        };
        let y = Arc::clone(&value.data);
        record(&[self], value, || Op::RecipShift {
            x: self.saved(),
            y,
        })
    }

    /// Reinterpret the row-major data as `rows` x `cols`; no copy.
    pub fn reshape(&self, rows: usize, cols: usize) -> Result<Tensor> {
        if rows * cols != self.rows * self.cols {
            return Err(unary_shape_err("reshape", self, rows, cols));
        }
        let value = Tensor {
            rows,
            cols,
            data: Arc::clone(&self.data),
            node: None,
        };
        record(&[self], value, || Op::Reshape { x: self.saved() })
    }

    /// Each row repeated `times` consecutively: MxC → (M*times)xC.
    pub fn repeat_rows(&self, times: usize) -> Result<Tensor> {
        let (m, c) = (self.rows, self.cols);
        let mut out = Vec::with_capacity(m * times * c);
        for i in 0..m {
            for _ in 0..times {
                out.extend_from_slice(&self.data[i * c..(i + 1) * c]);
            }
        }
        let value = Tensor {
            rows: m * times,
            cols: c,
            data: Arc::new(out),
            node: None,
        };
        record(&[self], value, || Op::RepeatRows {
            x: self.saved(),
            times,
        })
    }

    /// Whole block repeated `times`: MxC → (times*M)xC.
    pub fn tile_rows(&self, times: usize) -> Result<Tensor> {
        let (m, c) = (self.rows, self.cols);
        let mut out = Vec::with_capacity(m * times * c);
        for _ in 0..times {
            out.extend_from_slice(&self.data);
        }
        let value = Tensor {
            rows: m * times,
            cols: c,
            data: Arc::new(out),
            node: None,
        };
        record(&[self], value, || Op::TileRows {
            x: self.saved(),
            times,
        })
    }
}

// ─── Backward rules ──────────────────────────────────────────────────────

fn acc_into(grads: &mut [Option<Vec<f64>>], saved: &Saved, f: impl FnOnce(&mut [f64])) {
    if let Some(id) = saved.id {
        let buf = grads[id].get_or_insert_with(|| vec![0.0; saved.rows * saved.cols]);
        f(buf);
    }
}

pub(crate) fn accumulate_backward(op: &Op, dy: &[f64], grads: &mut [Option<Vec<f64>>]) {
    match op {
        Op::Leaf => {}
        Op::Matmul { a, b } => {
            let (m, k, n) = (a.rows, a.cols, b.cols);
            acc_into(grads, a, |da| {
                // dA += dY * B^T
                dgemm_rm(
                    m, n, k, 1.0, dy, n as isize, 1, &b.data, 1, n as isize, 1.0, da,
                );
            });
            acc_into(grads, b, |db| {
                // dB += A^T * dY
                dgemm_rm(
                    k, m, n, 1.0, &a.data, 1, k as isize, dy, n as isize, 1, 1.0, db,
                );
            });
        }
        Op::Add { a, b } => {
            acc_into(grads, a, |da| {
                for (g, &d) in da.iter_mut().zip(dy) {
                    *g += d;
                }
            });
            acc_into(grads, b, |db| {
                for (g, &d) in db.iter_mut().zip(dy) {
                    *g += d;
                }
            });
        }
        Op::Sub { a, b } => {
            acc_into(grads, a, |da| {
                for (g, &d) in da.iter_mut().zip(dy) {
                    *g += d;
                }
            });
            acc_into(grads, b, |db| {
                for (g, &d) in db.iter_mut().zip(dy) {
                    *g -= d;
                }
            });
        }
        Op::Hadamard { a, b } => {
            acc_into(grads, a, |da| {
                for ((g, &d), &bv) in da.iter_mut().zip(dy).zip(b.data.iter()) {
                    *g += d * bv;
                }
            });
            acc_into(grads, b, |db| {
                for ((g, &d), &av) in db.iter_mut().zip(dy).zip(a.data.iter()) {
                    *g += d * av;
                }
            });
        }
        Op::Scale { x, c } => {
            acc_into(grads, x, |dx| {
                for (g, &d) in dx.iter_mut().zip(dy) {
                    *g += c * d;
                }
            });
        }
        Op::Relu { x } => {
            acc_into(grads, x, |dx| {
                for ((g, &d), &xv) in dx.iter_mut().zip(dy).zip(x.data.iter()) {
                    if xv > 0.0 {
                        *g += d;
                    }
                }
            });
        }
        Op::Sigmoid { x, y } => {
            acc_into(grads, x, |dx| {
                for ((g, &d), &yv) in dx.iter_mut().zip(dy).zip(y.iter()) {
                    *g += d * yv * (1.0 - yv);
                }
            });
        }
        Op::LayerNorm {
            x,
            gain,
            bias,
            xhat,
            inv_std,
        } => {
            let (m, d) = (x.rows, x.cols);
            acc_into(grads, gain, |dg| {
                for i in 0..m {
                    for j in 0..d {
                        dg[j] += dy[i * d + j] * xhat[i * d + j];
                    }
                }
            });
            acc_into(grads, bias, |db| {
                for i in 0..m {
                    for j in 0..d {
                        db[j] += dy[i * d + j];
                    }
                }
            });
            acc_into(grads, x, |dx| {
                let inv_d = 1.0 / d as f64;
                for i in 0..m {
                    let mut m1 = 0.0;
                    let mut m2 = 0.0;
                    for j in 0..d {
                        let dxh = dy[i * d + j] * gain.data[j];
                        m1 += dxh;
                        m2 += dxh * xhat[i * d + j];
                    }
                    m1 *= inv_d;
                    m2 *= inv_d;
                    for j in 0..d {
                        let dxh = dy[i * d + j] * gain.data[j];
                        dx[i * d + j] += (dxh - m1 - xhat[i * d + j] * m2) * inv_std[i];
                    }
                }
            });
        }
        Op::MeanRows { x } => {
            let (m, c) = (x.rows, x.cols);
            acc_into(grads, x, |dx| {
                let inv_m = 1.0 / m as f64;
                for i in 0..m {
                    for j in 0..c {
                        dx[i * c + j] += dy[j] * inv_m;
                    }
                }
            });
        }
        Op::BroadcastRow { x } => {
            let c = x.cols;
            let m = dy.len() / c;
            acc_into(grads, x, |dx| {
                for i in 0..m {
                    for j in 0..c {
                        dx[j] += dy[i * c + j];
                    }
                }
            });
        }
        Op::ConcatCols { a, b } => {
            let (m, c1, c2) = (a.rows, a.cols, b.cols);
            let c = c1 + c2;
            acc_into(grads, a, |da| {
                for i in 0..m {
                    for j in 0..c1 {
                        da[i * c1 + j] += dy[i * c + j];
                    }
                }
            });
            acc_into(grads, b, |db| {
                for i in 0..m {
                    for j in 0..c2 {
                        db[i * c2 + j] += dy[i * c + c1 + j];
                    }
                }
            });
        }
        Op::SumAll { x } => {
            acc_into(grads, x, |dx| {
                for g in dx.iter_mut() {
                    *g += dy[0];
                }
            });
        }
        Op::Bce { p, y } => {
            let lo = super::BCE_CLAMP;
            let hi = 1.0 - super::BCE_CLAMP;
            acc_into(grads, p, |dp| {
                for i in 0..dp.len() {
                    let pv = p.data[i];
                    if pv > lo && pv < hi {
                        let yv = y.data[i];
                        dp[i] += dy[i] * (-yv / pv + (1.0 - yv) / (1.0 - pv));
                    }
                    // clamped entries sit on a flat region: zero gradient
                }
            });
            acc_into(grads, y, |dyv| {
                for i in 0..dyv.len() {
                    let pc = p.data[i].clamp(lo, hi);
                    dyv[i] += dy[i] * ((1.0 - pc).ln() - pc.ln());
                }
            });
        }
        Op::Transpose { x } => {
            let (m, c) = (x.rows, x.cols);
            acc_into(grads, x, |dx| {
                for i in 0..m {
                    for j in 0..c {
                        dx[i * c + j] += dy[j * m + i];
                    }
                }
            });
        }
        Op::RecipShift { x, y } => {
            acc_into(grads, x, |dx| {
                for ((g, &d), &yv) in dx.iter_mut().zip(dy).zip(y.iter()) {
                    *g -= d * yv * yv;
                }
            });
        }
        Op::Reshape { x } => {
            acc_into(grads, x, |dx| {
                for (g, &d) in dx.iter_mut().zip(dy) {
                    *g += d;
                }
            });
        }
        Op::RepeatRows { x, times } => {
            let (m, c) = (x.rows, x.cols);
            acc_into(grads, x, |dx| {
                for i in 0..m {
                    for r in 0..*times {
                        let src = (i * times + r) * c;
                        for j in 0..c {
                            dx[i * c + j] += dy[src + j];
                        }
                    }
                }
            });
        }
        Op::TileRows { x, times } => {
            let (m, c) = (x.rows, x.cols);
            acc_into(grads, x, |dx| {
                for r in 0..*times {
                    for i in 0..m {
                        let src = (r * m + i) * c;
                        for j in 0..c {
                            dx[i * c + j] += dy[src + j];
                        }
                    }
                }
            });
        }
    }
}

// ─── Dynamic dispatch entry ──────────────────────────────────────────────

/// Op selector for [`primitive_forward`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpKind {
    Matmul,
    Add,
    Sub,
    Hadamard,
    Scale,
    Relu,
    Sigmoid,
    LayerNorm,
    MeanRows,
    BroadcastRow,
    ConcatCols,
    SumAll,
    Bce,
    Transpose,
    RecipShift,
    Reshape,
    RepeatRows,
    TileRows,
}

impl OpKind {
    pub const ALL: [OpKind; 18] = [
        OpKind::Matmul,
        OpKind::Add,
        OpKind::Sub,
        OpKind::Hadamard,
        OpKind::Scale,
        OpKind::Relu,
        OpKind::Sigmoid,
        OpKind::LayerNorm,
        OpKind::MeanRows,
        OpKind::BroadcastRow,
        OpKind::ConcatCols,
        OpKind::SumAll,
        OpKind::Bce,
        OpKind::Transpose,
        OpKind::RecipShift,
        OpKind::Reshape,
        OpKind::RepeatRows,
        OpKind::TileRows,
    ];
}

/// Attributes for ops that need them.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum OpAttrs {
    None,
    /// `scale` factor or `recip_shift` shift.
    Factor(f64),
    /// `layer_norm` epsilon.
    Eps(f64),
    /// `broadcast_row` target row count, `repeat_rows`/`tile_rows` count.
    Count(usize),
    /// `reshape` target shape.
    Shape(usize, usize),
}

fn want(n: usize, inputs: &[&Tensor], kind: OpKind) -> Result<()> {
    if inputs.len() != n {
        return Err(Error::Usage(format!(
            "{kind:?} takes {n} input(s), got {}",
            inputs.len()
        )));
    }
    Ok(())
}

/// Uniform entry over the operator set; used by generic gradient checks.
pub fn primitive_forward(kind: OpKind, inputs: &[&Tensor], attrs: &OpAttrs) -> Result<Tensor> {
    let bad_attr = || Error::Usage(format!("{kind:?}: unsupported attrs {attrs:?}"));
    match kind {
        OpKind::Matmul => {
            want(2, inputs, kind)?;
            inputs[0].matmul(inputs[1])
        }
        OpKind::Add => {
            want(2, inputs, kind)?;
            inputs[0].add(inputs[1])
        }
        OpKind::Sub => {
            want(2, inputs, kind)?;
            inputs[0].sub(inputs[1])
        }
        OpKind::Hadamard => {
            want(2, inputs, kind)?;
            inputs[0].hadamard(inputs[1])
        }
        OpKind::Scale => {
            want(1, inputs, kind)?;
            match attrs {
                OpAttrs::Factor(c) => inputs[0].scale(*c),
                _ => Err(bad_attr()),
            }
        }
        OpKind::Relu => {
            want(1, inputs, kind)?;
            inputs[0].relu()
        }
        OpKind::Sigmoid => {
            want(1, inputs, kind)?;
            inputs[0].sigmoid()
        }
        OpKind::LayerNorm => {
            want(3, inputs, kind)?;
            match attrs {
                OpAttrs::Eps(e) => inputs[0].layer_norm(inputs[1], inputs[2], *e),
                _ => Err(bad_attr()),
            }
        }
        OpKind::MeanRows => {
            want(1, inputs, kind)?;
            inputs[0].mean_rows()
        }
        OpKind::BroadcastRow => {
            want(1, inputs, kind)?;
            match attrs {
                OpAttrs::Count(m) => inputs[0].broadcast_row(*m),
                _ => Err(bad_attr()),
            }
        }
        OpKind::ConcatCols => {
            want(2, inputs, kind)?;
            inputs[0].concat_cols(inputs[1])
        }
        OpKind::SumAll => {
            want(1, inputs, kind)?;
            inputs[0].sum_all()
        }
        OpKind::Bce => {
            want(2, inputs, kind)?;
            inputs[0].bce(inputs[1])
        }
        OpKind::Transpose => {
            want(1, inputs, kind)?;
            inputs[0].transpose()
        }
        OpKind::RecipShift => {
            want(1, inputs, kind)?;
            match attrs {
                OpAttrs::Factor(c) => inputs[0].recip_shift(*c),
                _ => Err(bad_attr()),
            }
        }
        OpKind::Reshape => {
            want(1, inputs, kind)?;
            match attrs {
                OpAttrs::Shape(r, c) => inputs[0].reshape(*r, *c),
                _ => Err(bad_attr()),
            }
        }
        OpKind::RepeatRows => {
            want(1, inputs, kind)?;
            match attrs {
                OpAttrs::Count(t) => inputs[0].repeat_rows(*t),
                _ => Err(bad_attr()),
            }
        }
        OpKind::TileRows => {
            want(1, inputs, kind)?;
            match attrs {
                OpAttrs::Count(t) => inputs[0].tile_rows(*t),
                _ => Err(bad_attr()),
            }
        }
    }
}
