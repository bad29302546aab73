//! Double-wedge dynamic program for arbitrary diameter sets.
//!
//! Fix a vertex `p_i` of the polygon. Every other diameter has one endpoint
//! on the open half circle `(p_i, p_i')` and one on `(p_i', p_i)`. The
//! polygon's vertices on the first half, together with `p_i`, form the wedge
//! `(i, j)`; those on the second half form the wedge `(l, t)`. The polygon is
//! the union of the two wedges and the closing triangles `O p_j p_l` and
//! `O p_t p_i`, and it is asymmetric exactly when no diameter contributes an
//! endpoint to both wedges.
//!
//! Diameters are ranked by their angular distance from `p_i`'s diameter
//! (`1..n`), so a wedge-`(i, j)` vertex at offset `u` from `p_i` and a
//! wedge-`(l, t)` vertex at offset `n + ρ` are antipodal exactly when
//! `u == ρ`. A state `(i, j, l, t, s)` stores the largest area of such a
//! pair of wedges using `s` points. It is extended by appending a vertex to
//! whichever wedge currently ends on the higher-ranked diameter, so every
//! asymmetric polygon is reachable from the `s = 3` base states.
//!
//! For a fixed `(i, l, t)` the best predecessor of `j` never moves backward
//! as `j` advances (and likewise for `t` with `(i, j, l)` fixed), which the
//! monotone sweep uses to skip candidates left of the previous argmax.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{signed_center_triangle, DiameterSet, Solution, SolverKind, VertexSelection};

const NO_BACK: u16 = u16::MAX;
const CHAIN_BACK: u16 = u16::MAX - 1;

/// Anchors of a double-wedge, as endpoint indices, with its point count `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DoubleWedgeKey {
    pub i: usize,
    pub j: usize,
    pub l: usize,
    pub t: usize,
    pub s: usize,
}

/// Where a table entry came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backpointer {
    /// Base state or no admissible predecessor.
    None,
    /// Previous last vertex of the wedge that grew.
    Vertex(usize),
    /// The `(l, t)` wedge is the single point `p_l` appended after a pure
    /// `(i, j)` chain.
    Chain,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepResult {
    pub value: f64,
    pub back: Backpointer,
}

/// One cell of a monotone sweep: the swept anchor and its result.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepCell {
    pub anchor: usize,
    pub value: f64,
    pub back: Backpointer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StepMethod {
    /// Scan every admissible predecessor.
    Naive,
    /// Restart each scan at the previous argmax.
    #[default]
    Monotone,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DpOptions {
    pub method: StepMethod,
    /// Worker threads; `0` or `1` runs sequentially.
    pub threads: usize,
}

impl Default for DpOptions {
    fn default() -> Self {
        Self {
            method: StepMethod::Monotone,
            threads: 1,
        }
    }
}

/// Anchor validity for a double-wedge `(i, j, l, t)`.
///
/// The wedges `(i, j)` and `(l, t)` are the counterclockwise arcs from `i` to
/// `j` and from `l` to `t`. They must be disjoint and each shorter than a
/// half circle, no two anchors may be antipodal, and either `p_t'` lies
/// strictly inside arc `(i, j)` or `p_j'` lies strictly inside arc `(l, t)`.
pub fn is_valid_anchor(ds: &DiameterSet, i: usize, j: usize, l: usize, t: usize) -> bool {
    let m = ds.endpoints();
    let n = ds.n();
    if [i, j, l, t].iter().any(|&x| x >= m) {
        return false;
    }
    let off = |from: usize, x: usize| (x + m - from) % m;
    let span1 = off(i, j);
    let span2 = off(l, t);
    if span1 >= n || span2 >= n {
        return false;
    }
    // (l, t) must start after j and end before i, going around from i.
    let (ol, ot) = (off(i, l), off(i, t));
    if ol <= span1 || ot <= span1 || ot < ol {
        return false;
    }
    let anchors = [i, j, l, t];
    for a in 0..4 {
        for b in a + 1..4 {
            if anchors[a] != anchors[b] && (anchors[a] + n) % m == anchors[b] {
                return false;
            }
        }
    }
    let t_anti = (t + n) % m;
    let j_anti = (j + n) % m;
    let strictly_inside = |from: usize, span: usize, x: usize| {
        let o = off(from, x);
        o > 0 && o < span
    };
    strictly_inside(i, span1, t_anti) || strictly_inside(l, span2, j_anti)
}

/// Rank coordinates of a key relative to its anchor `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Ranked {
    i: usize,
    u: usize,
    l: usize,
    t: usize,
}

/// Index geometry shared by every table of one instance.
#[derive(Debug, Clone)]
struct Frame {
    n: usize,
    m: usize,
}

impl Frame {
    fn new(ds: &DiameterSet) -> Self {
        Self {
            n: ds.n(),
            m: ds.endpoints(),
        }
    }

    /// Endpoint at offset `u` on the `(i, j)` side.
    fn front(&self, i: usize, u: usize) -> usize {
        (i + u) % self.m
    }

    /// Endpoint of rank `rho` on the `(l, t)` side.
    fn back(&self, i: usize, rho: usize) -> usize {
        (i + self.n + rho) % self.m
    }

    fn block(&self) -> usize {
        self.n * self.n * self.n
    }

    fn idx(&self, r: Ranked) -> usize {
        ((r.i * self.n + r.u) * self.n + r.l) * self.n + r.t
    }

    fn rank(&self, key: &DoubleWedgeKey) -> Option<Ranked> {
        let (n, m) = (self.n, self.m);
        if [key.i, key.j, key.l, key.t].iter().any(|&x| x >= m) {
            return None;
        }
        let u = (key.j + m - key.i) % m;
        let l = (key.l + m - key.i) % m;
        let t = (key.t + m - key.i) % m;
        if u >= n || l <= n || t <= n {
            return None;
        }
        let (l, t) = (l - n, t - n);
        if l > t || u == l || u == t {
            return None;
        }
        Some(Ranked { i: key.i, u, l, t })
    }
}

fn decode_back(frame: &Frame, r: Ranked, b: u16) -> Backpointer {
    match b {
        NO_BACK => Backpointer::None,
        CHAIN_BACK => Backpointer::Chain,
        w if r.u > r.t => Backpointer::Vertex(frame.front(r.i, w as usize)),
        w => Backpointer::Vertex(frame.back(r.i, w as usize)),
    }
}

fn tri(ds: &DiameterSet, a: usize, b: usize) -> f64 {
    signed_center_triangle(ds, a, b)
}

/// Best pure `(i, j)` chains: `value[s][i][u]` is the largest area of
/// `s` points running from `p_i` to the endpoint at offset `u`.
#[derive(Debug, Clone)]
struct ChainTable {
    values: Vec<Vec<f64>>,
    backs: Vec<Vec<u16>>,
}

impl ChainTable {
    fn build(ds: &DiameterSet, frame: &Frame, max_s: usize) -> Self {
        let (n, m) = (frame.n, frame.m);
        let mut values = vec![vec![f64::NEG_INFINITY; m * n]; max_s + 1];
        let mut backs = vec![vec![NO_BACK; m * n]; max_s + 1];
        if max_s >= 1 {
            for i in 0..m {
                values[1][i * n] = 0.0;
            }
        }
        for s in 2..=max_s {
            for i in 0..m {
                for u in 1..n {
                    let mut best = f64::NEG_INFINITY;
                    let mut arg = NO_BACK;
                    for w in 0..u {
                        let prev = values[s - 1][i * n + w];
                        if prev == f64::NEG_INFINITY {
                            continue;
                        }
                        let v = prev + tri(ds, frame.front(i, w), frame.front(i, u));
                        if v > best {
                            best = v;
                            arg = w as u16;
                        }
                    }
                    values[s][i * n + u] = best;
                    backs[s][i * n + u] = arg;
                }
            }
        }
        Self { values, backs }
    }

    fn value(&self, s: usize, n: usize, i: usize, u: usize) -> f64 {
        self.values
            .get(s)
            .map_or(f64::NEG_INFINITY, |v| v[i * n + u])
    }
}

/// Values and backpointers of every `s`-double-wedge for one `s`.
///
/// Entries are `-∞` for anchor combinations that are not states.
#[derive(Debug, Clone)]
pub struct DpLayer {
    s: usize,
    frame: Frame,
    values: Vec<f64>,
    backs: Vec<u16>,
}

impl DpLayer {
    pub fn s(&self) -> usize {
        self.s
    }

    /// Value of a key, `-∞` when the key is not a state of this layer.
    pub fn value(&self, key: &DoubleWedgeKey) -> f64 {
        match self.frame.rank(key) {
            Some(r) if key.s == self.s => self.values[self.frame.idx(r)],
            _ => f64::NEG_INFINITY,
        }
    }

    pub fn backpointer(&self, key: &DoubleWedgeKey) -> Backpointer {
        match self.frame.rank(key) {
            Some(r) if key.s == self.s => {
                decode_back(&self.frame, r, self.backs[self.frame.idx(r)])
            }
            _ => Backpointer::None,
        }
    }

    /// Number of finite entries.
    pub fn live_states(&self) -> usize {
        self.values.iter().filter(|v| v.is_finite()).count()
    }

    /// Every key with a finite value, in storage order.
    pub fn entries(&self) -> impl Iterator<Item = (DoubleWedgeKey, f64, Backpointer)> + '_ {
        let f = &self.frame;
        let n = f.n;
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_finite())
            .map(move |(idx, &v)| {
                let r = Ranked {
                    i: idx / (n * n * n),
                    u: idx / (n * n) % n,
                    l: idx / n % n,
                    t: idx % n,
                };
                let key = DoubleWedgeKey {
                    i: r.i,
                    j: f.front(r.i, r.u),
                    l: f.back(r.i, r.l),
                    t: f.back(r.i, r.t),
                    s: self.s,
                };
                (key, v, decode_back(f, r, self.backs[idx]))
            })
    }
}

/// The `s = 3` value of a key: `A(O p_l p_t)` when `i = j`,
/// `A(O p_i p_j)` when `l = t`, `-∞` otherwise.
pub fn dp_base(ds: &DiameterSet, key: &DoubleWedgeKey) -> f64 {
    let frame = Frame::new(ds);
    match frame.rank(key) {
        Some(r) => base_value(ds, &frame, r),
        None => f64::NEG_INFINITY,
    }
}

fn base_value(ds: &DiameterSet, frame: &Frame, r: Ranked) -> f64 {
    if r.u == 0 && r.l < r.t {
        tri(ds, frame.back(r.i, r.l), frame.back(r.i, r.t))
    } else if r.u > 0 && r.l == r.t {
        tri(ds, r.i, frame.front(r.i, r.u))
    } else {
        f64::NEG_INFINITY
    }
}

/// Tables for one instance: the pure-chain table and the current layer.
#[derive(Debug, Clone)]
pub struct DpTables {
    frame: Frame,
    chain: ChainTable,
}

impl DpTables {
    /// Prepares tables for layers up to `max_s`.
    pub fn new(ds: &DiameterSet, max_s: usize) -> Self {
        let frame = Frame::new(ds);
        let chain = ChainTable::build(ds, &frame, max_s);
        Self { frame, chain }
    }

    pub fn base_layer(&self, ds: &DiameterSet) -> DpLayer {
        let frame = self.frame.clone();
        let (n, m) = (frame.n, frame.m);
        let mut values = vec![f64::NEG_INFINITY; m * frame.block()];
        for i in 0..m {
            for u in 0..n {
                for l in 1..n {
                    for t in l..n {
                        if u == l || u == t {
                            continue;
                        }
                        let r = Ranked { i, u, l, t };
                        values[frame.idx(r)] = base_value(ds, &frame, r);
                    }
                }
            }
        }
        let backs = vec![NO_BACK; values.len()];
        DpLayer {
            s: 3,
            frame,
            values,
            backs,
        }
    }

    /// Builds layer `prev.s + 1` from `prev`.
    pub fn next_layer(&self, ds: &DiameterSet, prev: &DpLayer, opts: &DpOptions) -> DpLayer {
        let frame = self.frame.clone();
        let s = prev.s + 1;
        let block = frame.block();
        let mut values = vec![f64::NEG_INFINITY; frame.m * block];
        let mut backs = vec![NO_BACK; frame.m * block];
        let fill = |(i, (vals, bks)): (usize, (&mut [f64], &mut [u16]))| {
            self.fill_block(ds, prev, s, i, opts.method, vals, bks);
        };
        if opts.threads > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(opts.threads)
                .build()
                .expect("thread pool");
            pool.install(|| {
                values
                    .par_chunks_mut(block)
                    .zip(backs.par_chunks_mut(block))
                    .enumerate()
                    .for_each(fill);
            });
        } else {
            values
                .chunks_mut(block)
                .zip(backs.chunks_mut(block))
                .enumerate()
                .for_each(fill);
        }
        DpLayer {
            s,
            frame,
            values,
            backs,
        }
    }

    /// Fills every state of layer `s` anchored at `i`.
    #[allow(clippy::too_many_arguments)]
    fn fill_block(
        &self,
        ds: &DiameterSet,
        prev: &DpLayer,
        s: usize,
        i: usize,
        method: StepMethod,
        vals: &mut [f64],
        bks: &mut [u16],
    ) {
        let n = self.frame.n;
        let local = |u: usize, l: usize, t: usize| (u * n + l) * n + t;
        for l in 1..n {
            for t in l..n {
                let row = self.sweep_front(ds, prev, i, l, t, method);
                for (u, v, b) in row {
                    vals[local(u, l, t)] = v;
                    bks[local(u, l, t)] = b;
                }
            }
        }
        for u in 0..n {
            for l in 1..n {
                if l == u {
                    continue;
                }
                let row = self.sweep_back(ds, prev, s, i, u, l, method);
                for (t, v, b) in row {
                    vals[local(u, l, t)] = v;
                    bks[local(u, l, t)] = b;
                }
            }
        }
    }

    /// Grows the `(i, j)` wedge for fixed `(i, l, t)`: all `j` at offsets
    /// `u > t`. Returns `(u, value, raw backpointer)`.
    fn sweep_front(
        &self,
        ds: &DiameterSet,
        prev: &DpLayer,
        i: usize,
        l: usize,
        t: usize,
        method: StepMethod,
    ) -> Vec<(usize, f64, u16)> {
        let f = &self.frame;
        let mut out = Vec::with_capacity(f.n.saturating_sub(t + 1));
        let mut start = 0;
        for u in t + 1..f.n {
            let lo = if method == StepMethod::Monotone {
                start
            } else {
                0
            };
            let target = f.front(i, u);
            let mut best = f64::NEG_INFINITY;
            let mut arg = NO_BACK;
            for w in lo..u {
                if w == l || w == t {
                    continue;
                }
                let p = prev.values[f.idx(Ranked { i, u: w, l, t })];
                if p == f64::NEG_INFINITY {
                    continue;
                }
                let v = p + tri(ds, f.front(i, w), target);
                if v > best {
                    best = v;
                    arg = w as u16;
                }
            }
            if arg != NO_BACK {
                start = arg as usize;
            }
            out.push((u, best, arg));
        }
        out
    }

    /// Grows the `(l, t)` wedge for fixed `(i, j, l)`: all `t` of rank
    /// `>= l` above `j`'s offset. A single-point `(l, t)` wedge after a pure
    /// chain is taken from the chain table.
    #[allow(clippy::too_many_arguments)]
    fn sweep_back(
        &self,
        ds: &DiameterSet,
        prev: &DpLayer,
        s: usize,
        i: usize,
        u: usize,
        l: usize,
        method: StepMethod,
    ) -> Vec<(usize, f64, u16)> {
        let f = &self.frame;
        let mut out = Vec::new();
        if l > u {
            let v = self.chain.value(s - 1, f.n, i, u);
            let b = if v == f64::NEG_INFINITY {
                NO_BACK
            } else {
                CHAIN_BACK
            };
            out.push((l, v, b));
        }
        let mut start = l;
        for t in (l + 1).max(u + 1)..f.n {
            let lo = if method == StepMethod::Monotone {
                start
            } else {
                l
            };
            let target = f.back(i, t);
            let mut best = f64::NEG_INFINITY;
            let mut arg = NO_BACK;
            for w in lo..t {
                if w == u {
                    continue;
                }
                let p = prev.values[f.idx(Ranked { i, u, l, t: w })];
                if p == f64::NEG_INFINITY {
                    continue;
                }
                let v = p + tri(ds, f.back(i, w), target);
                if v > best {
                    best = v;
                    arg = w as u16;
                }
            }
            if arg != NO_BACK {
                start = arg as usize;
            }
            out.push((t, best, arg));
        }
        out
    }

    /// Computes one entry of layer `prev.s + 1` by scanning every
    /// admissible predecessor.
    pub fn step_naive(&self, ds: &DiameterSet, prev: &DpLayer, key: &DoubleWedgeKey) -> StepResult {
        let none = StepResult {
            value: f64::NEG_INFINITY,
            back: Backpointer::None,
        };
        let Some(r) = self.frame.rank(key) else {
            return none;
        };
        if key.s != prev.s + 1 || key.s < 4 {
            return none;
        }
        let (u, l, t) = (r.u, r.l, r.t);
        let cell = if u > t {
            self.sweep_front(ds, prev, r.i, l, t, StepMethod::Naive)
                .into_iter()
                .find(|c| c.0 == u)
        } else {
            self.sweep_back(ds, prev, key.s, r.i, u, l, StepMethod::Naive)
                .into_iter()
                .find(|c| c.0 == t)
        };
        match cell {
            Some((_, value, b)) => StepResult {
                value,
                back: self.decode(r.i, u, t, b),
            },
            None => none,
        }
    }

    /// Monotone sweep over `j` for fixed anchors `(i, l, t)`: every `j` on
    /// the `(i, j)` side whose diameter ranks above `t`'s.
    pub fn sweep_j(
        &self,
        ds: &DiameterSet,
        prev: &DpLayer,
        i: usize,
        l: usize,
        t: usize,
        method: StepMethod,
    ) -> Vec<SweepCell> {
        let f = &self.frame;
        let probe = DoubleWedgeKey {
            i,
            j: i,
            l,
            t,
            s: prev.s + 1,
        };
        let Some(r) = f.rank(&probe) else {
            return Vec::new();
        };
        self.sweep_front(ds, prev, i, r.l, r.t, method)
            .into_iter()
            .map(|(u, value, b)| SweepCell {
                anchor: f.front(i, u),
                value,
                back: self.decode(r.i, u, r.t, b),
            })
            .collect()
    }

    /// Monotone sweep over `t` for fixed anchors `(i, j, l)`.
    pub fn sweep_t(
        &self,
        ds: &DiameterSet,
        prev: &DpLayer,
        i: usize,
        j: usize,
        l: usize,
        method: StepMethod,
    ) -> Vec<SweepCell> {
        let f = &self.frame;
        let probe = DoubleWedgeKey {
            i,
            j,
            l,
            t: l,
            s: prev.s + 1,
        };
        let Some(r) = f.rank(&probe) else {
            return Vec::new();
        };
        self.sweep_back(ds, prev, prev.s + 1, i, r.u, r.l, method)
            .into_iter()
            .filter(|c| c.0 > r.l)
            .map(|(t, value, b)| SweepCell {
                anchor: f.back(i, t),
                value,
                back: self.decode(r.i, r.u, t, b),
            })
            .collect()
    }

    fn decode(&self, i: usize, u: usize, t: usize, b: u16) -> Backpointer {
        decode_back(&self.frame, Ranked { i, u, l: 0, t }, b)
    }
}

/// Result of a full DP run.
#[derive(Debug, Clone)]
pub struct DpOutcome {
    pub solution: Solution,
    /// Anchors of the reported optimum.
    pub key: DoubleWedgeKey,
    /// Arcs of the closing triangles `O p_j p_l` and `O p_t p_i`.
    pub closing_arcs: (f64, f64),
    /// Best total over keys that also pass [`is_valid_anchor`].
    pub best_valid_anchor_area: f64,
}

fn check_k(ds: &DiameterSet, k: usize) -> Result<()> {
    let n = ds.n();
    if n < 3 || k < 3 || k >= n {
        return Err(Error::KOutOfRange { k, n, lo: 3 });
    }
    Ok(())
}

/// Maximum-area asymmetric `k`-gon, `3 <= k < n`.
pub fn solve_dp(ds: &DiameterSet, k: usize) -> Result<Solution> {
    Ok(solve_dp_with(ds, k, &DpOptions::default())?.solution)
}

pub fn solve_dp_with(ds: &DiameterSet, k: usize, opts: &DpOptions) -> Result<DpOutcome> {
    check_k(ds, k)?;
    let tables = DpTables::new(ds, k);
    let frame = &tables.frame;
    let mut layer = tables.base_layer(ds);
    let mut backs: Vec<Vec<u16>> = Vec::with_capacity(k.saturating_sub(3));
    while layer.s < k {
        let next = tables.next_layer(ds, &layer, opts);
        backs.push(next.backs.clone());
        layer = next;
    }

    let (n, m) = (frame.n, frame.m);
    let mut best: Option<(f64, Ranked)> = None;
    let mut best_valid = f64::NEG_INFINITY;
    for i in 0..m {
        for u in 0..n {
            for l in 1..n {
                for t in l..n {
                    let r = Ranked { i, u, l, t };
                    let v = layer.values[frame.idx(r)];
                    if v == f64::NEG_INFINITY {
                        continue;
                    }
                    let (j, pl, pt) = (frame.front(i, u), frame.back(i, l), frame.back(i, t));
                    let total = v + tri(ds, j, pl) + tri(ds, pt, i);
                    if best.is_none_or(|(b, _)| total > b) {
                        best = Some((total, r));
                    }
                    if total > best_valid && is_valid_anchor(ds, i, j, pl, pt) {
                        best_valid = total;
                    }
                }
            }
        }
    }
    let (_, r) = best.ok_or(Error::Infeasible(k))?;
    let indices = reconstruct(frame, &tables.chain, &backs, k, r);
    let selection = VertexSelection::new(indices)?;
    let solution = Solution::new(ds, selection, SolverKind::Dp);
    let key = DoubleWedgeKey {
        i: r.i,
        j: frame.front(r.i, r.u),
        l: frame.back(r.i, r.l),
        t: frame.back(r.i, r.t),
        s: k,
    };
    let closing_arcs = (ds.ccw_arc(key.j, key.l), ds.ccw_arc(key.t, key.i));
    debug_assert!(closing_arcs.0 > 0.0 && closing_arcs.1 > 0.0 && closing_arcs.0 < 2.0 * PI);
    Ok(DpOutcome {
        solution,
        key,
        closing_arcs,
        best_valid_anchor_area: best_valid,
    })
}

/// Walks backpointers from the optimal key down to its base state.
fn reconstruct(
    frame: &Frame,
    chain: &ChainTable,
    backs: &[Vec<u16>],
    k: usize,
    mut r: Ranked,
) -> Vec<usize> {
    let n = frame.n;
    let i = r.i;
    let mut out = Vec::with_capacity(k);
    let mut s = k;
    while s > 3 {
        let b = backs[s - 4][frame.idx(r)];
        if r.u > r.t {
            out.push(frame.front(i, r.u));
            r.u = b as usize;
        } else if b == CHAIN_BACK {
            out.push(frame.back(i, r.l));
            let (mut u, mut cs) = (r.u, s - 1);
            while cs > 1 {
                out.push(frame.front(i, u));
                u = chain.backs[cs][i * n + u] as usize;
                cs -= 1;
            }
            out.push(i);
            return out;
        } else {
            out.push(frame.back(i, r.t));
            r.t = b as usize;
        }
        s -= 1;
    }
    if r.u == 0 {
        out.extend([frame.back(i, r.l), frame.back(i, r.t), i]);
    } else {
        out.extend([frame.front(i, r.u), frame.back(i, r.l), i]);
    }
    out
}
