mod common;

use std::f64::consts::PI;

use asymgon::dp::{
    solve_dp_with, Backpointer, DpLayer, DpOptions, DpTables, StepMethod, SweepCell,
};
use asymgon::{solve_dp, DiameterSet};

fn layers(ds: &DiameterSet, k: usize, method: StepMethod) -> Vec<DpLayer> {
    let tables = DpTables::new(ds, k);
    let opts = DpOptions { method, threads: 1 };
    let mut out = vec![tables.base_layer(ds)];
    while out.last().unwrap().s() < k {
        let next = tables.next_layer(ds, out.last().unwrap(), &opts);
        out.push(next);
    }
    out
}

#[test]
fn monotone_layers_equal_naive_layers() {
    for seed in 0..200u64 {
        let n = 4 + (seed as usize % 5);
        let ds = common::instance(n, 20_000 + seed);
        let naive = layers(&ds, n - 1, StepMethod::Naive);
        let mono = layers(&ds, n - 1, StepMethod::Monotone);
        for (a, b) in naive.iter().zip(&mono) {
            assert_eq!(a.live_states(), b.live_states(), "seed {seed} s {}", a.s());
            for ((ka, va, _), (kb, vb, _)) in a.entries().zip(b.entries()) {
                assert_eq!(ka, kb);
                assert!((va - vb).abs() <= 1e-12, "seed {seed} {ka:?}: {va} vs {vb}");
            }
        }
    }
}

#[test]
fn naive_step_reproduces_layer_entries() {
    let ds = common::instance(7, 99);
    let tables = DpTables::new(&ds, 6);
    let ls = layers(&ds, 6, StepMethod::Monotone);
    for w in ls.windows(2) {
        for (key, v, _) in w[1].entries() {
            let step = tables.step_naive(&ds, &w[0], &key);
            assert!((step.value - v).abs() <= 1e-12, "{key:?}");
        }
    }
}

fn offset(ds: &DiameterSet, i: usize, x: usize) -> usize {
    let m = ds.endpoints();
    (x + m - i) % m
}

fn assert_non_decreasing(ds: &DiameterSet, i: usize, row: &[SweepCell], what: &str) {
    let offs: Vec<usize> = row
        .iter()
        .filter_map(|c| match c.back {
            Backpointer::Vertex(x) => Some(offset(ds, i, x)),
            _ => None,
        })
        .collect();
    assert!(
        offs.windows(2).all(|w| w[0] <= w[1]),
        "{what} sweep from {i}: {offs:?}"
    );
}

#[test]
fn monotone_backpointers_never_move_backward() {
    for seed in 0..200u64 {
        let n = 4 + (seed as usize % 5);
        let ds = common::instance(n, 30_000 + seed);
        let m = ds.endpoints();
        let tables = DpTables::new(&ds, n - 1);
        let opts = DpOptions::default();
        let mut layer = tables.base_layer(&ds);
        while layer.s() < n - 1 {
            for i in 0..m {
                for a in 0..m {
                    for b in 0..m {
                        let row = tables.sweep_j(&ds, &layer, i, a, b, StepMethod::Monotone);
                        assert_non_decreasing(&ds, i, &row, "j");
                        let naive = tables.sweep_j(&ds, &layer, i, a, b, StepMethod::Naive);
                        for (x, y) in row.iter().zip(&naive) {
                            assert!((x.value - y.value).abs() <= 1e-12 || x.value == y.value);
                        }
                        let row = tables.sweep_t(&ds, &layer, i, a, b, StepMethod::Monotone);
                        assert_non_decreasing(&ds, i, &row, "t");
                        let naive = tables.sweep_t(&ds, &layer, i, a, b, StepMethod::Naive);
                        for (x, y) in row.iter().zip(&naive) {
                            assert!((x.value - y.value).abs() <= 1e-12 || x.value == y.value);
                        }
                    }
                }
            }
            layer = tables.next_layer(&ds, &layer, &opts);
        }
    }
}

#[test]
fn mirrored_instance_has_the_same_optimum() {
    for seed in 0..40u64 {
        let n = 4 + (seed as usize % 5);
        let ds = common::instance(n, 40_000 + seed);
        let mirrored = ds.mirrored();
        for k in 3..n {
            let a = solve_dp(&ds, k).unwrap().area;
            let b = solve_dp(&mirrored, k).unwrap().area;
            assert!((a - b).abs() < 1e-9, "seed {seed} k {k}: {a} vs {b}");
        }
    }
}

#[test]
fn closing_triangles_span_less_than_half_circle() {
    for seed in 0..60u64 {
        let n = 4 + (seed as usize % 6);
        let ds = common::instance(n, 50_000 + seed);
        for k in 3..n {
            let out = solve_dp_with(&ds, k, &DpOptions::default()).unwrap();
            let (a, b) = out.closing_arcs;
            assert!(
                a > 0.0 && a < PI && b > 0.0 && b < PI,
                "seed {seed} k {k}: {a} {b}"
            );
        }
    }
}

#[test]
fn optimum_is_reached_by_a_valid_anchor_key() {
    for seed in 0..60u64 {
        let n = 4 + (seed as usize % 6);
        let ds = common::instance(n, 60_000 + seed);
        for k in 3..n {
            let out = solve_dp_with(&ds, k, &DpOptions::default()).unwrap();
            assert!(
                (out.best_valid_anchor_area - out.solution.area).abs() < 1e-9,
                "seed {seed} k {k}: {} vs {}",
                out.best_valid_anchor_area,
                out.solution.area
            );
        }
    }
}

#[test]
fn parallel_layers_are_bit_identical() {
    let ds = common::instance(10, 7);
    for k in [5, 7, 9] {
        let a = solve_dp_with(
            &ds,
            k,
            &DpOptions {
                threads: 1,
                ..Default::default()
            },
        )
        .unwrap();
        let b = solve_dp_with(
            &ds,
            k,
            &DpOptions {
                threads: 3,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(a.solution.area.to_bits(), b.solution.area.to_bits());
        assert_eq!(a.solution.selection, b.solution.selection);
    }
}

#[test]
fn naive_argmax_is_ordered_along_sweeps() {
    let mut violations = 0;
    for seed in 0..100u64 {
        let n = 4 + (seed as usize % 5);
        let ds = common::instance(n, 70_000 + seed);
        let m = ds.endpoints();
        let tables = DpTables::new(&ds, n - 1);
        let mut layer = tables.base_layer(&ds);
        while layer.s() < n - 1 {
            for i in 0..m {
                for a in 0..m {
                    for b in 0..m {
                        for row in [
                            tables.sweep_j(&ds, &layer, i, a, b, StepMethod::Naive),
                            tables.sweep_t(&ds, &layer, i, a, b, StepMethod::Naive),
                        ] {
                            let offs: Vec<usize> = row
                                .iter()
                                .filter_map(|c| match c.back {
                                    Backpointer::Vertex(x) => Some(offset(&ds, i, x)),
                                    _ => None,
                                })
                                .collect();
                            if !offs.windows(2).all(|w| w[0] <= w[1]) {
                                violations += 1;
                            }
                        }
                    }
                }
            }
            layer = tables.next_layer(&ds, &layer, &DpOptions::default());
        }
    }
    assert_eq!(violations, 0);
}
