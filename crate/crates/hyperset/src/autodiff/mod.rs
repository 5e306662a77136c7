//! Reverse-mode automatic differentiation over dense 2-D `f64` tensors.
//!
//! A [`Tensor`] is an immutable row-major matrix that optionally references a
//! node on a [`Tape`]. Ops record a node iff any input is tracked; constants
//! and [`Tensor::detach`]ed values flow through untouched and receive no
//! gradient. The tape is append-only with checkpoint marks so a training loop
//! can truncate everything recorded after a mark and keep memory bounded.

use std::cell::RefCell;
use std::rc::Rc;
use std::sync::Arc;

use crate::error::{Error, Result};

mod check;
mod ops;

pub use check::finite_difference_check;
pub use ops::{primitive_forward, OpAttrs, OpKind};

/// Probabilities are clamped to `[BCE_CLAMP, 1 - BCE_CLAMP]` inside `bce`.
pub const BCE_CLAMP: f64 = 1e-7;
/// Row-wise layer norm stabilizer.
pub const LAYER_NORM_EPS: f64 = 1e-5;

// ─── Tensor ──────────────────────────────────────────────────────────────

/// Dense 2-D matrix of 64-bit reals, row-major, optionally on a tape.
#[derive(Clone)]
pub struct Tensor {
    rows: usize,
    cols: usize,
    data: Arc<Vec<f64>>,
    node: Option<NodeRef>,
}

#[derive(Clone)]
struct NodeRef {
    tape: Tape,
    id: usize,
    serial: u64,
}

impl Tensor {
    /// Untracked tensor from row-major data.
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Tensor> {
        if data.len() != rows * cols {
            return Err(Error::Usage(format!(
                "tensor data length {} does not match {}x{}",
                data.len(),
                rows,
                cols
            )));
        }
        Ok(Tensor {
            rows,
            cols,
            data: Arc::new(data),
            node: None,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Tensor {
        Tensor::full(rows, cols, 0.0)
    }

    pub fn full(rows: usize, cols: usize, value: f64) -> Tensor {
        Tensor {
            rows,
            cols,
            data: Arc::new(vec![value; rows * cols]),
            node: None,
        }
    }

    pub fn eye(n: usize) -> Tensor {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + i] = 1.0;
        }
        Tensor {
            rows: n,
            cols: n,
            data: Arc::new(data),
            node: None,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Tensor {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Tensor {
            rows,
            cols,
            data: Arc::new(data),
            node: None,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    /// Value of a 1x1 tensor.
    pub fn scalar(&self) -> Result<f64> {
        if self.rows * self.cols != 1 {
            return Err(Error::Usage(format!(
                "scalar() on a {}x{} tensor",
                self.rows, self.cols
            )));
        }
        Ok(self.data[0])
    }

    /// True iff this tensor participates in the differentiation graph.
    pub fn is_tracked(&self) -> bool {
        self.node.is_some()
    }

    /// Value-identical tensor with no tape node; gradients never flow through.
    pub fn detach(&self) -> Tensor {
        Tensor {
            rows: self.rows,
            cols: self.cols,
            data: Arc::clone(&self.data),
            node: None,
        }
    }

    fn with_node(&self, tape: &Tape, id: usize, serial: u64) -> Tensor {
        Tensor {
            rows: self.rows,
            cols: self.cols,
            data: Arc::clone(&self.data),
            node: Some(NodeRef {
                tape: tape.clone(),
                id,
                serial,
            }),
        }
    }

    fn saved(&self) -> Saved {
        Saved {
            rows: self.rows,
            cols: self.cols,
            data: Arc::clone(&self.data),
            id: self.node.as_ref().map(|n| n.id),
        }
    }
}

impl std::fmt::Debug for Tensor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Tensor")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("tracked", &self.node.is_some())
            .finish()
    }
}

// ─── Tape ────────────────────────────────────────────────────────────────

/// Input snapshot a node keeps for its backward rule.
#[derive(Clone)]
pub(crate) struct Saved {
    rows: usize,
    cols: usize,
    data: Arc<Vec<f64>>,
    id: Option<usize>,
}

pub(crate) enum Op {
    Leaf,
    Matmul { a: Saved, b: Saved },
    Add { a: Saved, b: Saved },
    Sub { a: Saved, b: Saved },
    Hadamard { a: Saved, b: Saved },
    Scale { x: Saved, c: f64 },
    Relu { x: Saved },
    Sigmoid { x: Saved, y: Arc<Vec<f64>> },
    LayerNorm { x: Saved, gain: Saved, bias: Saved, xhat: Arc<Vec<f64>>, inv_std: Vec<f64> },
    MeanRows { x: Saved },
    BroadcastRow { x: Saved },
    ConcatCols { a: Saved, b: Saved },
    SumAll { x: Saved },
    Bce { p: Saved, y: Saved },
    Transpose { x: Saved },
    RecipShift { x: Saved, y: Arc<Vec<f64>> },
    Reshape { x: Saved },
    RepeatRows { x: Saved, times: usize },
    TileRows { x: Saved, times: usize },
}

pub(crate) struct Node {
    serial: u64,
    op: Op,
}

struct TapeInner {
    nodes: Vec<Node>,
    next_serial: u64,
}

/// Append-only record of tracked ops. Cloning is cheap (shared handle);
/// a tape and its tensors stay on one thread.
#[derive(Clone)]
pub struct Tape {
    inner: Rc<RefCell<TapeInner>>,
}

/// Position on the tape that [`Tape::reset_to`] can truncate back to.
#[derive(Clone, Copy, Debug)]
pub struct TapeMark(usize);

impl Default for Tape {
    fn default() -> Self {
        Self::new()
    }
}

impl Tape {
    pub fn new() -> Tape {
        Tape {
            inner: Rc::new(RefCell::new(TapeInner {
                nodes: Vec::new(),
                next_serial: 0,
            })),
        }
    }

    /// Register a value as a gradient-receiving leaf.
    pub fn leaf(&self, value: &Tensor) -> Tensor {
        let (id, serial) = self.push(Op::Leaf);
        value.with_node(self, id, serial)
    }

    /// Number of live nodes.
    pub fn node_count(&self) -> usize {
        self.inner.borrow().nodes.len()
    }

    /// Mark the current position for later truncation.
    pub fn checkpoint(&self) -> TapeMark {
        TapeMark(self.inner.borrow().nodes.len())
    }

    /// Discard every node created after the mark, releasing saved values.
    pub fn reset_to(&self, mark: TapeMark) {
        let mut inner = self.inner.borrow_mut();
        inner.nodes.truncate(mark.0);
    }

    fn push(&self, op: Op) -> (usize, u64) {
        let mut inner = self.inner.borrow_mut();
        let id = inner.nodes.len();
        let serial = inner.next_serial;
        inner.next_serial += 1;
        inner.nodes.push(Node { serial, op });
        (id, serial)
    }

    fn same_tape(&self, other: &Tape) -> bool {
        Rc::ptr_eq(&self.inner, &other.inner)
    }

    /// The recording tape for an op, if any input is tracked. Inputs on
    /// distinct tapes or referencing truncated nodes are contract violations.
    fn recording_for(inputs: &[&Tensor]) -> Result<Option<Tape>> {
        let mut tape: Option<Tape> = None;
        for t in inputs {
            if let Some(node) = &t.node {
                match &tape {
                    None => tape = Some(node.tape.clone()),
                    Some(existing) => {
                        if !existing.same_tape(&node.tape) {
                            return Err(Error::Contract(
                                "op inputs recorded on different tapes".into(),
                            ));
                        }
                    }
                }
                let inner = node.tape.inner.borrow();
                let live = inner
                    .nodes
                    .get(node.id)
                    .map(|n| n.serial == node.serial)
                    .unwrap_or(false);
                if !live {
                    return Err(Error::Contract(
                        "tensor references a node discarded by tape truncation".into(),
                    ));
                }
            }
        }
        Ok(tape)
    }
}

// ─── Backward ────────────────────────────────────────────────────────────

/// Gradient map produced by [`backward`]: node id → gradient, absent for
/// nodes the loss does not reach.
pub struct Gradients {
    tape: Tape,
    grads: Vec<Option<Vec<f64>>>,
    serials: Vec<u64>,
}

impl Gradients {
    /// Gradient of the loss w.r.t. `t`, or `None` if `t` is untracked,
    /// on another tape, or unreachable from the loss.
    pub fn get(&self, t: &Tensor) -> Option<Tensor> {
        let node = t.node.as_ref()?;
        if !self.tape.same_tape(&node.tape) {
            return None;
        }
        if self.serials.get(node.id) != Some(&node.serial) {
            return None;
        }
        self.grads[node.id].as_ref().map(|g| Tensor {
            rows: t.rows,
            cols: t.cols,
            data: Arc::new(g.clone()),
            node: None,
        })
    }
}

/// Reverse sweep from a scalar loss; gradients of fan-out nodes are summed.
pub fn backward(loss: &Tensor) -> Result<Gradients> {
    let node = loss
        .node
        .as_ref()
        .ok_or_else(|| Error::Usage("backward: loss is not on a tape".into()))?;
    if loss.rows * loss.cols != 1 {
        return Err(Error::Usage(format!(
            "backward: loss must be 1x1, got {}x{}",
            loss.rows, loss.cols
        )));
    }
    let tape = node.tape.clone();
    let inner = tape.inner.borrow();
    let n = inner.nodes.len();
    if node.id >= n || inner.nodes[node.id].serial != node.serial {
        return Err(Error::Contract(
            "backward: loss references a truncated node".into(),
        ));
    }

    let mut grads: Vec<Option<Vec<f64>>> = vec![None; n];
    grads[node.id] = Some(vec![1.0]);

    for id in (0..=node.id).rev() {
        let Some(dy) = grads[id].take() else { continue };
        ops::accumulate_backward(&inner.nodes[id].op, &dy, &mut grads);
        grads[id] = Some(dy);
    }

    let serials = inner.nodes.iter().map(|n| n.serial).collect();
    drop(inner);
    Ok(Gradients {
        tape,
        grads,
        serials,
    })
}

#[cfg(test)]
mod tests;
