use super::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn t(rows: usize, cols: usize, data: &[f64]) -> Tensor {
    Tensor::new(rows, cols, data.to_vec()).unwrap()
}

#[test]
fn relu_definition() {
    let x = t(1, 2, &[-1.0, 2.0]);
    assert_eq!(x.relu().unwrap().data(), &[0.0, 2.0]);
}

#[test]
fn layer_norm_constant_row_is_zero() {
    let x = t(1, 4, &[3.5, 3.5, 3.5, 3.5]);
    let gain = Tensor::full(1, 4, 1.0);
    let bias = Tensor::zeros(1, 4);
    let y = x.layer_norm(&gain, &bias, LAYER_NORM_EPS).unwrap();
    for &v in y.data() {
        assert_eq!(v, 0.0);
    }
}

#[test]
fn matmul_identity() {
    let x = t(2, 2, &[1.0, 2.0, 3.0, 4.0]);
    let y = x.matmul(&Tensor::eye(2)).unwrap();
    assert_eq!(y.data(), x.data());
}

#[test]
fn detach_is_value_identical_and_idempotent() {
    let tape = Tape::new();
    let x = tape.leaf(&t(2, 3, &[1.0, -2.0, 3.0, 0.5, 0.0, -0.25]));
    let d = x.detach();
    assert_eq!(d.data(), x.data());
    assert!(!d.is_tracked());
    let dd = d.detach();
    assert_eq!(dd.data(), d.data());
}

#[test]
fn backward_sum_all_is_ones() {
    let tape = Tape::new();
    let x = tape.leaf(&t(2, 2, &[1.0, 2.0, 3.0, 4.0]));
    let loss = x.sum_all().unwrap();
    let grads = backward(&loss).unwrap();
    assert_eq!(grads.get(&x).unwrap().data(), &[1.0; 4]);
}

#[test]
fn backward_sigmoid_at_zero_is_quarter() {
    let tape = Tape::new();
    let x = tape.leaf(&Tensor::zeros(1, 3));
    let loss = x.sigmoid().unwrap().sum_all().unwrap();
    let grads = backward(&loss).unwrap();
    for &g in grads.get(&x).unwrap().data() {
        assert!((g - 0.25).abs() < 1e-15);
    }
}

#[test]
fn backward_fan_out_sums() {
    // loss = sum(x + x) → gradient 2 everywhere
    let tape = Tape::new();
    let x = tape.leaf(&t(1, 2, &[0.3, -0.7]));
    let loss = x.add(&x).unwrap().sum_all().unwrap();
    let grads = backward(&loss).unwrap();
    assert_eq!(grads.get(&x).unwrap().data(), &[2.0, 2.0]);
}

#[test]
fn backward_requires_loss_on_tape() {
    let x = t(1, 1, &[3.0]);
    assert!(matches!(backward(&x), Err(Error::Usage(_))));
}

#[test]
fn detached_copy_is_treated_as_constant() {
    // f = sum(detach(x) ⊙ x): d/dx = detach(x) values
    let tape = Tape::new();
    let x = tape.leaf(&t(1, 3, &[2.0, -1.0, 0.5]));
    let loss = x.detach().hadamard(&x).unwrap().sum_all().unwrap();
    let grads = backward(&loss).unwrap();
    assert_eq!(grads.get(&x).unwrap().data(), &[2.0, -1.0, 0.5]);
}

#[test]
fn detach_between_steps_matches_fresh_forward() {
    // two-step recurrence with a detach boundary vs. a one-step recurrence
    // restarted from the stored value: identical gradients, bitwise
    let w_values = t(3, 3, &[0.2, -0.1, 0.4, 0.3, 0.1, -0.2, 0.0, 0.5, -0.3]);
    let s0 = t(1, 3, &[1.0, -0.5, 0.25]);

    let tape = Tape::new();
    let w = tape.leaf(&w_values);
    let s1 = s0.matmul(&w).unwrap().sigmoid().unwrap();
    let s1_detached = s1.detach();
    let s2 = s1_detached.matmul(&w).unwrap().sigmoid().unwrap();
    let loss = s2.sum_all().unwrap();
    let g_two_step = backward(&loss).unwrap().get(&w).unwrap();

    let tape2 = Tape::new();
    let w2 = tape2.leaf(&w_values);
    let s2b = s1_detached.matmul(&w2).unwrap().sigmoid().unwrap();
    let loss2 = s2b.sum_all().unwrap();
    let g_one_step = backward(&loss2).unwrap().get(&w2).unwrap();

    assert_eq!(g_two_step.data(), g_one_step.data());
}

#[test]
fn gradient_absent_for_detached_only_path() {
    let tape = Tape::new();
    let x = tape.leaf(&t(1, 2, &[1.0, 2.0]));
    let y = tape.leaf(&t(1, 2, &[3.0, 4.0]));
    // y enters the loss only through a detached copy
    let loss = x.add(&y.detach()).unwrap().sum_all().unwrap();
    let grads = backward(&loss).unwrap();
    assert!(grads.get(&x).is_some());
    assert!(grads.get(&y).is_none());
}

#[test]
fn replay_determinism_is_bitwise() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let x_vals = Tensor::from_fn(4, 3, |_, _| rng.gen_range(-2.0..2.0));
    let w_vals = Tensor::from_fn(3, 3, |_, _| rng.gen_range(-1.0..1.0));
    let run = || {
        let tape = Tape::new();
        let x = tape.leaf(&x_vals);
        let w = tape.leaf(&w_vals);
        let h = x.matmul(&w).unwrap().relu().unwrap();
        let loss = h.sigmoid().unwrap().sum_all().unwrap();
        let grads = backward(&loss).unwrap();
        (
            loss.scalar().unwrap(),
            grads.get(&x).unwrap().data().to_vec(),
            grads.get(&w).unwrap().data().to_vec(),
        )
    };
    let a = run();
    let b = run();
    assert_eq!(a.0.to_bits(), b.0.to_bits());
    assert_eq!(a.1, b.1);
    assert_eq!(a.2, b.2);
}

#[test]
fn reset_to_checkpoint_releases_nodes() {
    let tape = Tape::new();
    let x = tape.leaf(&t(1, 2, &[1.0, 2.0]));
    let mark = tape.checkpoint();
    let count_at_mark = tape.node_count();
    let y = x.relu().unwrap().sigmoid().unwrap();
    assert!(tape.node_count() > count_at_mark);
    drop(y);
    tape.reset_to(mark);
    assert_eq!(tape.node_count(), count_at_mark);
    // the surviving leaf is still usable
    let loss = x.sum_all().unwrap();
    assert!(backward(&loss).unwrap().get(&x).is_some());
}

#[test]
fn stale_tensor_after_truncation_is_rejected() {
    let tape = Tape::new();
    let x = tape.leaf(&t(1, 2, &[1.0, 2.0]));
    let mark = tape.checkpoint();
    let y = x.relu().unwrap();
    tape.reset_to(mark);
    // y references a discarded node: consuming it is a contract violation
    assert!(matches!(y.sum_all(), Err(Error::Contract(_))));
}

#[test]
fn shape_mismatch_names_the_op() {
    let a = Tensor::zeros(2, 3);
    let b = Tensor::zeros(2, 3);
    let err = a.matmul(&b).unwrap_err();
    assert!(err.to_string().contains("matmul"));
}

#[test]
fn fd_check_sum_of_squares() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let x = Tensor::from_fn(3, 3, |_, _| rng.gen_range(-2.0..2.0));
    let err = finite_difference_check(|x| x.hadamard(x)?.sum_all(), &x, 1e-5).unwrap();
    assert!(err < 1e-8, "rel err {err}");
}

#[test]
fn fd_check_relu_away_from_kinks() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let x = Tensor::from_fn(3, 3, |_, _| {
        let v: f64 = rng.gen_range(-2.0..2.0);
        if v.abs() < 0.01 {
            0.5
        } else {
            v
        }
    });
    let err = finite_difference_check(|x| x.relu()?.sum_all(), &x, 1e-5).unwrap();
    assert!(err < 1e-6, "rel err {err}");
}

#[test]
fn fd_check_constant_function_is_zero() {
    let x = Tensor::zeros(2, 2);
    let c = Tensor::full(1, 1, 4.0);
    let err = finite_difference_check(|_| Ok(c.clone()), &x, 1e-5).unwrap();
    assert_eq!(err, 0.0);
}

// ── per-op finite-difference sweep ───────────────────────────────────────

fn random_tensor(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Tensor {
    Tensor::from_fn(rows, cols, |_, _| rng.gen_range(-2.0..2.0))
}

/// Entries kept away from relu's kink at 0.
fn random_tensor_off_kink(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Tensor {
    Tensor::from_fn(rows, cols, |_, _| {
        let v: f64 = rng.gen_range(-2.0..2.0);
        if v.abs() < 1e-3 {
            v.signum() * 0.5 + 0.5
        } else {
            v
        }
    })
}

fn random_probs(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Tensor {
    Tensor::from_fn(rows, cols, |_, _| rng.gen_range(0.05..0.95))
}

/// Random-weighted sum so structural mistakes (transposes, permutations)
/// cannot cancel out.
fn weighted_sum(y: &Tensor, w: &Tensor) -> crate::error::Result<Tensor> {
    y.hadamard(w)?.sum_all()
}

#[test]
fn every_op_passes_finite_difference_check() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let reps = 200;
    let h = 1e-5;
    let tol = 1e-5;

    for kind in OpKind::ALL {
        for rep in 0..reps {
            let m = rng.gen_range(1..5usize);
            let c = rng.gen_range(1..5usize);
            // which input slot receives the perturbation, for binary ops
            let slot = rep % 2;
            let (x, f): (Tensor, Box<dyn Fn(&Tensor) -> crate::error::Result<Tensor>>) = match kind
            {
                OpKind::Matmul => {
                    let k = rng.gen_range(1..5usize);
                    let a = random_tensor(&mut rng, m, k);
                    let b = random_tensor(&mut rng, k, c);
                    let w = random_tensor(&mut rng, m, c);
                    if slot == 0 {
                        (a, Box::new(move |x| weighted_sum(&x.matmul(&b)?, &w)))
                    } else {
                        (b, Box::new(move |x| weighted_sum(&a.matmul(x)?, &w)))
                    }
                }
                OpKind::Add | OpKind::Sub | OpKind::Hadamard => {
                    let a = random_tensor(&mut rng, m, c);
                    let b = random_tensor(&mut rng, m, c);
                    let w = random_tensor(&mut rng, m, c);
                    let apply = move |x: &Tensor, other: &Tensor, first: bool| {
                        let (lhs, rhs) = if first { (x, other) } else { (other, x) };
                        match kind {
                            OpKind::Add => lhs.add(rhs),
                            OpKind::Sub => lhs.sub(rhs),
                            _ => lhs.hadamard(rhs),
                        }
                    };
                    if slot == 0 {
                        (a, Box::new(move |x| weighted_sum(&apply(x, &b, true)?, &w)))
                    } else {
                        (b, Box::new(move |x| weighted_sum(&apply(x, &a, false)?, &w)))
                    }
                }
                OpKind::Scale => {
                    let x = random_tensor(&mut rng, m, c);
                    let factor = rng.gen_range(-2.0..2.0);
                    let w = random_tensor(&mut rng, m, c);
                    (x, Box::new(move |x| weighted_sum(&x.scale(factor)?, &w)))
                }
                OpKind::Relu => {
                    let x = random_tensor_off_kink(&mut rng, m, c);
                    let w = random_tensor(&mut rng, m, c);
                    (x, Box::new(move |x| weighted_sum(&x.relu()?, &w)))
                }
                OpKind::Sigmoid => {
                    let x = random_tensor(&mut rng, m, c);
                    let w = random_tensor(&mut rng, m, c);
                    (x, Box::new(move |x| weighted_sum(&x.sigmoid()?, &w)))
                }
                OpKind::LayerNorm => {
                    // keep row variance bounded away from eps: finite
                    // differences are ill-conditioned near zero variance
                    let c = c.max(2);
                    let mut row = |rng: &mut ChaCha8Rng| loop {
                        let cand: Vec<f64> = (0..c).map(|_| rng.gen_range(-2.0..2.0)).collect();
                        let mu = cand.iter().sum::<f64>() / c as f64;
                        let var = cand.iter().map(|v| (v - mu) * (v - mu)).sum::<f64>() / c as f64;
                        if var > 0.25 {
                            return cand;
                        }
                    };
                    let mut data = Vec::with_capacity(m * c);
                    for _ in 0..m {
                        data.extend(row(&mut rng));
                    }
                    let x = Tensor::new(m, c, data).unwrap();
                    let gain = random_tensor(&mut rng, 1, c);
                    let bias = random_tensor(&mut rng, 1, c);
                    let w = random_tensor(&mut rng, m, c);
                    match rep % 3 {
                        0 => (
                            x,
                            Box::new(move |x| {
                                weighted_sum(&x.layer_norm(&gain, &bias, LAYER_NORM_EPS)?, &w)
                            }),
                        ),
                        1 => (
                            gain,
                            Box::new(move |g| {
                                weighted_sum(&x.layer_norm(g, &bias, LAYER_NORM_EPS)?, &w)
                            }),
                        ),
                        _ => (
                            bias,
                            Box::new(move |b| {
                                weighted_sum(&x.layer_norm(&gain, b, LAYER_NORM_EPS)?, &w)
                            }),
                        ),
                    }
                }
                OpKind::MeanRows => {
                    let x = random_tensor(&mut rng, m, c);
                    let w = random_tensor(&mut rng, 1, c);
                    (x, Box::new(move |x| weighted_sum(&x.mean_rows()?, &w)))
                }
                OpKind::BroadcastRow => {
                    let x = random_tensor(&mut rng, 1, c);
                    let w = random_tensor(&mut rng, m, c);
                    (x, Box::new(move |x| weighted_sum(&x.broadcast_row(m)?, &w)))
                }
                OpKind::ConcatCols => {
                    let c2 = rng.gen_range(1..5usize);
                    let a = random_tensor(&mut rng, m, c);
                    let b = random_tensor(&mut rng, m, c2);
                    let w = random_tensor(&mut rng, m, c + c2);
                    if slot == 0 {
                        (a, Box::new(move |x| weighted_sum(&x.concat_cols(&b)?, &w)))
                    } else {
                        (b, Box::new(move |x| weighted_sum(&a.concat_cols(x)?, &w)))
                    }
                }
                OpKind::SumAll => {
                    let x = random_tensor(&mut rng, m, c);
                    (x, Box::new(move |x| x.sum_all()))
                }
                OpKind::Bce => {
                    let p = random_probs(&mut rng, m, c);
                    let y = random_probs(&mut rng, m, c);
                    let w = random_tensor(&mut rng, m, c);
                    if slot == 0 {
                        (p, Box::new(move |x| weighted_sum(&x.bce(&y)?, &w)))
                    } else {
                        (y, Box::new(move |x| weighted_sum(&p.bce(x)?, &w)))
                    }
                }
                OpKind::Transpose => {
                    let x = random_tensor(&mut rng, m, c);
                    let w = random_tensor(&mut rng, c, m);
                    (x, Box::new(move |x| weighted_sum(&x.transpose()?, &w)))
                }
                OpKind::RecipShift => {
                    // keep x + shift bounded away from 0
                    let x = Tensor::from_fn(m, c, |_, _| rng.gen_range(0.2..2.0));
                    let shift = rng.gen_range(0.1..1.0);
                    let w = random_tensor(&mut rng, m, c);
                    (
                        x,
                        Box::new(move |x| weighted_sum(&x.recip_shift(shift)?, &w)),
                    )
                }
                OpKind::Reshape => {
                    let x = random_tensor(&mut rng, m, c);
                    let w = random_tensor(&mut rng, 1, m * c);
                    (x, Box::new(move |x| weighted_sum(&x.reshape(1, m * c)?, &w)))
                }
                OpKind::RepeatRows => {
                    let times = rng.gen_range(1..4usize);
                    let x = random_tensor(&mut rng, m, c);
                    let w = random_tensor(&mut rng, m * times, c);
                    (x, Box::new(move |x| weighted_sum(&x.repeat_rows(times)?, &w)))
                }
                OpKind::TileRows => {
                    let times = rng.gen_range(1..4usize);
                    let x = random_tensor(&mut rng, m, c);
                    let w = random_tensor(&mut rng, m * times, c);
                    (x, Box::new(move |x| weighted_sum(&x.tile_rows(times)?, &w)))
                }
            };
            let err = finite_difference_check(&f, &x, h).unwrap();
            assert!(err < tol, "{kind:?} rep {rep}: rel err {err}");
        }
    }
}

#[test]
fn primitive_forward_dispatch_matches_methods() {
    let a = t(2, 2, &[1.0, 2.0, 3.0, 4.0]);
    let b = t(2, 2, &[0.5, -1.0, 2.0, 0.0]);
    let via_dispatch = primitive_forward(OpKind::Matmul, &[&a, &b], &OpAttrs::None).unwrap();
    let via_method = a.matmul(&b).unwrap();
    assert_eq!(via_dispatch.data(), via_method.data());
    let scaled = primitive_forward(OpKind::Scale, &[&a], &OpAttrs::Factor(2.0)).unwrap();
    assert_eq!(scaled.data(), &[2.0, 4.0, 6.0, 8.0]);
}
