//! Strict symplectic Gelfand–Tsetlin patterns, the bijection with lattice
//! states, the statistics `v`, `w`, `u`, and the prime-power coefficients of
//! the associated Dirichlet series.
//!
//! Number-theoretic quantities live in the formal ring: `q^{-1}` is `v`, the
//! normalized Gauss sum `q^{-1} g_t(1, p)` is the symbol `g(t)`.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::model::{is_admissible, IceState, LatticeSpec, Spin};
use crate::{Error, Ring, RingElem};

/// `a[i]` holds `a_{i,i+1..=r}` (`a[0]` holds the full top row `a_{0,1..=r}`);
/// `b[i-1]` holds `b_{i,i..=r}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GTPattern {
    pub r: usize,
    pub a: Vec<Vec<i64>>,
    pub b: Vec<Vec<i64>>,
}

impl GTPattern {
    /// `a_{i,j}`, `None` when the entry is not part of the pattern.
    pub fn a_opt(&self, i: usize, j: usize) -> Option<i64> {
        let first = if i == 0 { 1 } else { i + 1 };
        if i >= self.r || j < first || j > self.r {
            return None;
        }
        Some(self.a[i][j - first])
    }

    pub fn b_opt(&self, i: usize, j: usize) -> Option<i64> {
        if i == 0 || i > self.r || j < i || j > self.r {
            return None;
        }
        Some(self.b[i - 1][j - i])
    }

    /// Entries read as 0 when absent.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.a_opt(i, j).unwrap_or(0)
    }

    pub fn b(&self, i: usize, j: usize) -> i64 {
        self.b_opt(i, j).unwrap_or(0)
    }

    /// Interleaving, strictness and `a_{i,r} != 0`.
    pub fn is_valid(&self) -> bool {
        let r = self.r;
        if self.a.len() != r || self.b.len() != r {
            return false;
        }
        let rows: Vec<&Vec<i64>> = self.a.iter().chain(self.b.iter()).collect();
        if rows.iter().any(|row| row.windows(2).any(|w| w[0] <= w[1]) || row.iter().any(|&x| x < 0)) {
            return false;
        }
        if (0..r).any(|i| self.a_opt(i, r) == Some(0)) {
            return false;
        }
        let min2 = |x: Option<i64>, y: Option<i64>| match (x, y) {
            (Some(p), Some(q)) => Some(p.min(q)),
            (p, q) => p.or(q),
        };
        let max2 = |x: Option<i64>, y: Option<i64>| x.unwrap_or(0).max(y.unwrap_or(0));
        for i in 1..=r {
            for j in i..=r {
                let b = self.b(i, j);
                if let Some(m) = min2(self.a_opt(i - 1, j), self.a_opt(i, j)) {
                    if b > m {
                        return false;
                    }
                }
                if b < max2(self.a_opt(i - 1, j + 1), self.a_opt(i, j + 1)) {
                    return false;
                }
            }
        }
        for i in 1..r {
            for j in i + 1..=r {
                let a = self.a(i, j);
                if let Some(m) = min2(self.b_opt(i + 1, j - 1), self.b_opt(i, j - 1)) {
                    if a > m {
                        return false;
                    }
                }
                if a < max2(self.b_opt(i + 1, j), self.b_opt(i, j)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_json(&self) -> Value {
        json!({ "a": self.a, "b": self.b })
    }
}

impl fmt::Display for GTPattern {
    /// Rows top to bottom, separated by ` / `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &Vec<i64>| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        let mut rows = Vec::new();
        for i in 0..self.r {
            rows.push(join(&self.a[i]));
            rows.push(join(&self.b[i]));
        }
        write!(f, "{}", rows.join(" / "))
    }
}

/// Strictly decreasing sequences `x_1 > … > x_m` with `lo[k] <= x_k <= hi[k]`.
fn strict_rows(lo: &[i64], hi: &[i64]) -> Vec<Vec<i64>> {
    let m = lo.len();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(k: usize, lo: &[i64], hi: &[i64], cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if k == lo.len() {
            out.push(cur.clone());
            return;
        }
        let top = if k == 0 { hi[0] } else { hi[k].min(cur[k - 1] - 1) };
        let mut x = top;
        while x >= lo[k] {
            cur.push(x);
            rec(k + 1, lo, hi, cur, out);
            cur.pop();
            x -= 1;
        }
    }
    rec(0, lo, hi, &mut cur, &mut out);
    out
}

/// All strict patterns with the given top row, in decreasing lexicographic
/// order of their rows.
pub fn enumerate_patterns(top: &[i64]) -> Result<Vec<GTPattern>, Error> {
    let r = top.len();
    if r == 0 || top.windows(2).any(|w| w[0] <= w[1]) || top[r - 1] <= 0 {
        return Err(Error::Config("top row must be strictly decreasing and positive".into()));
    }
    let mut out = Vec::new();
    let mut p = GTPattern { r, a: vec![top.to_vec()], b: Vec::new() };
    fn rec(p: &mut GTPattern, i: usize, out: &mut Vec<GTPattern>) {
        let r = p.r;
        if i > r {
            if p.is_valid() {
                out.push(p.clone());
            }
            return;
        }
        // b_i interleaves a_{i-1}: a_{i-1,j} >= b_{i,j} >= a_{i-1,j+1}.
        let lo: Vec<i64> = (i..=r).map(|j| p.a(i - 1, j + 1)).collect();
        let hi: Vec<i64> = (i..=r).map(|j| p.a(i - 1, j)).collect();
        for brow in strict_rows(&lo, &hi) {
            p.b.push(brow);
            if i == r {
                rec(p, i + 1, out);
            } else {
                // a_i interleaves b_i: b_{i,j-1} >= a_{i,j} >= b_{i,j}, a_{i,r} >= 1.
                let lo: Vec<i64> = (i + 1..=r).map(|j| if j == r { p.b(i, j).max(1) } else { p.b(i, j) }).collect();
                let hi: Vec<i64> = (i + 1..=r).map(|j| p.b(i, j - 1)).collect();
                for arow in strict_rows(&lo, &hi) {
                    p.a.push(arow);
                    rec(p, i + 1, out);
                    p.a.pop();
                }
            }
            p.b.pop();
        }
    }
    rec(&mut p, 1, &mut out);
    Ok(out)
}

/// Column numbers (right to left) of `-` vertical spins on level `k` of a state.
fn minus_columns(state: &IceState, cols: usize, level: usize) -> Vec<i64> {
    (0..cols).filter(|&x| state.vert[level][x] == Spin::Minus).map(|x| (cols - x) as i64).collect()
}

/// Read off the pattern: row `i` gives `a_{i-1,*}` from the spins above it,
/// row `ī` gives `b_{i,*}` from the spins above it, with a `0` when the bend
/// carries the `-` spin down.
pub fn state_to_pattern(spec: &LatticeSpec, state: &IceState) -> Result<GTPattern, Error> {
    if !is_admissible(spec, state) {
        return Err(Error::Invalid("state is not admissible".into()));
    }
    let r = spec.r;
    let cols = spec.cols;
    let mut a = Vec::new();
    let mut b = Vec::new();
    for i in 1..=r {
        a.push(minus_columns(state, cols, 2 * (i - 1)));
        let mut brow = minus_columns(state, cols, 2 * i - 1);
        if state.h[2 * (i - 1)][cols] == Spin::Minus {
            brow.push(0);
        }
        b.push(brow);
    }
    let p = GTPattern { r, a, b };
    if !p.is_valid() {
        return Err(Error::Invalid(format!("state maps to an invalid pattern {p}")));
    }
    Ok(p)
}

pub fn pattern_to_state(spec: &LatticeSpec, p: &GTPattern) -> Result<IceState, Error> {
    let r = spec.r;
    let cols = spec.cols;
    if p.r != r {
        return Err(Error::Invalid("pattern and lattice have different rank".into()));
    }
    let rows = 2 * r;
    let mut st = IceState { h: vec![vec![Spin::Plus; cols + 1]; rows], vert: vec![vec![Spin::Plus; cols]; rows + 1] };
    let mut set = |level: usize, entries: &[i64]| -> Result<(), Error> {
        for &c in entries {
            if c > cols as i64 || c < 0 {
                return Err(Error::Invalid(format!("entry {c} outside the lattice")));
            }
            if c > 0 {
                st.vert[level][cols - c as usize] = Spin::Minus;
            }
        }
        Ok(())
    };
    for i in 1..=r {
        set(2 * (i - 1), &p.a[i - 1])?;
        set(2 * i - 1, &p.b[i - 1])?;
    }
    for k in 0..rows {
        for x in 0..cols {
            let plus = |s: Spin| (s == Spin::Plus) as i32;
            st.h[k][x + 1] = match plus(st.vert[k][x]) + plus(st.h[k][x]) - plus(st.vert[k + 1][x]) {
                1 => Spin::Plus,
                0 => Spin::Minus,
                _ => return Err(Error::Invalid("pattern does not give an admissible state".into())),
            };
        }
    }
    if !is_admissible(spec, &st) {
        return Err(Error::Invalid("pattern does not give an admissible state".into()));
    }
    for i in 1..=r {
        let bend_minus = p.b[i - 1].last() == Some(&0);
        if (st.h[2 * (i - 1)][cols] == Spin::Minus) != bend_minus {
            return Err(Error::Invalid("bend entry inconsistent with the state".into()));
        }
    }
    Ok(st)
}

/// Statistics of a pattern. Maps are keyed by `(i, j)`, `1 <= i <= j <= r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stats {
    pub v: BTreeMap<(usize, usize), i64>,
    pub w: BTreeMap<(usize, usize), i64>,
    pub u: BTreeMap<(usize, usize), i64>,
    /// `s_a(i)` for `i` in `0..=r`.
    pub s_a: Vec<i64>,
    /// `s_b(i)` for `i` in `1..=r` (index 0 unused).
    pub s_b: Vec<i64>,
    pub wt: Vec<i64>,
    pub k: Vec<i64>,
}

pub fn stats(p: &GTPattern) -> Stats {
    let r = p.r;
    let mut v = BTreeMap::new();
    let mut w = BTreeMap::new();
    let mut u = BTreeMap::new();
    for i in 1..=r {
        for j in i..=r {
            v.insert((i, j), (i..=j).map(|k| p.a(i - 1, k) - p.b(i, k)).sum());
            w.insert((i, j), (j..=r).map(|k| p.a(i, k) - p.b(i, k)).sum());
        }
    }
    for i in 1..=r {
        for j in i..=r {
            u.insert((i, j), v[&(i, r)] + w[&(i, j)]);
        }
    }
    let s_a: Vec<i64> = (0..=r).map(|i| (i + 1..=r).map(|k| p.a(i, k)).sum()).collect();
    let s_b: Vec<i64> = (0..=r).map(|i| if i == 0 { 0 } else { (i..=r).map(|k| p.b(i, k)).sum() }).collect();
    let wt: Vec<i64> = (1..=r).map(|i| s_a[r - i] - 2 * s_b[r - i + 1] + s_a[r - i + 1]).collect();
    // λ + ρ = (L_r, …, L_1)
    let big_l = |j: usize| p.a[0][r - j];
    let tail = |i: usize| -> i64 { (i..=r).map(|j| wt[j - 1] + big_l(j)).sum() };
    let k = (1..=r)
        .map(|i| {
            if i == 1 {
                let t = tail(1);
                debug_assert!(t % 2 == 0, "k_1 is not an integer");
                t / 2
            } else {
                tail(i)
            }
        })
        .collect();
    Stats { v, w, u, s_a, s_b, wt, k }
}

/// An entry of a pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Entry {
    A(usize, usize),
    B(usize, usize),
}

/// Normalized factor `γ̃` of one entry; `γ̃(a_{i,i}) = 1`.
pub fn gamma_tilde(ring: &Ring, p: &GTPattern, st: &Stats, e: Entry) -> RingElem {
    let r = p.r;
    let n = ring.n as i64;
    let one_minus_v = ring.one() - ring.v();
    match e {
        Entry::B(i, j) => {
            let b = p.b(i, j);
            let vij = st.v[&(i, j)];
            let t = if j == r { 2 * vij } else { vij };
            if b == p.a(i - 1, j) {
                ring.one()
            } else if b == p.a(i - 1, j + 1) {
                ring.g(t)
            } else if t % n == 0 {
                one_minus_v
            } else {
                ring.zero()
            }
        }
        Entry::A(i, j) => {
            if j == i {
                return ring.one();
            }
            let a = p.a(i, j);
            let uij = st.u[&(i, j)];
            if a == p.b(i, j - 1) {
                ring.g(uij)
            } else if a == p.b(i, j) {
                ring.one()
            } else if uij % n == 0 {
                one_minus_v
            } else {
                ring.zero()
            }
        }
    }
}

/// Unnormalized factor `γ`, with `q = v^{-1}`.
pub fn gamma(ring: &Ring, p: &GTPattern, st: &Stats, e: Entry) -> RingElem {
    let shift = match e {
        Entry::A(i, j) if j > i => st.u[&(i, j)],
        Entry::A(..) => 0,
        Entry::B(i, j) => st.v[&(i, j)],
    };
    gamma_tilde(ring, p, st, e) * ring.v().pow(-shift)
}

fn entries(r: usize) -> Vec<Entry> {
    let mut out = Vec::new();
    for i in 1..=r {
        for j in i..=r {
            out.push(Entry::A(i, j));
            out.push(Entry::B(i, j));
        }
    }
    out
}

pub fn g_tilde(ring: &Ring, p: &GTPattern) -> RingElem {
    let st = stats(p);
    entries(p.r).into_iter().fold(ring.one(), |acc, e| acc * gamma_tilde(ring, p, &st, e))
}

pub fn g_full(ring: &Ring, p: &GTPattern) -> RingElem {
    let st = stats(p);
    entries(p.r).into_iter().fold(ring.one(), |acc, e| acc * gamma(ring, p, &st, e))
}

/// `H̃(p^k; p^ℓ)` for every `k` that occurs, keyed by `k`. The full
/// coefficient is `H̃ · q^{k_1 + … + k_r}`.
pub fn h_tilde(ring: &Ring, top: &[i64]) -> Result<BTreeMap<Vec<i64>, RingElem>, Error> {
    let mut out: BTreeMap<Vec<i64>, RingElem> = BTreeMap::new();
    for p in enumerate_patterns(top)? {
        let k = stats(&p).k;
        let g = g_tilde(ring, &p);
        let slot = out.entry(k).or_insert_with(|| ring.zero());
        *slot = &*slot + &g;
    }
    Ok(out)
}

/// `λ + ρ` as a strictly decreasing top row.
pub fn top_row(spec: &LatticeSpec) -> Vec<i64> {
    spec.top_columns().into_iter().map(|c| c as i64).collect()
}
