//! Lattice geometry: rows `1, 1̄, …, r, r̄`, columns numbered right to left,
//! boundary spins from `λ + ρ`, charges and decorations.
//!
//! Internally columns are stored left to right (`x = 0` is the leftmost);
//! column number `cols - x`. Horizontal edge `x` of a row lies to the left of
//! vertex `x`, so edge `cols` is the one attached to the bend.

use std::fmt;

use serde_json::{json, Value};

use crate::weights::BendKind;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Spin {
    Plus,
    Minus,
}

impl Spin {
    pub fn is_minus(self) -> bool {
        self == Spin::Minus
    }

    pub fn flip(self) -> Spin {
        match self {
            Spin::Plus => Spin::Minus,
            Spin::Minus => Spin::Plus,
        }
    }

    pub fn from_char(c: char) -> Option<Spin> {
        match c {
            '+' => Some(Spin::Plus),
            '-' => Some(Spin::Minus),
            _ => None,
        }
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if *self == Spin::Plus { "+" } else { "-" })
    }
}

/// A spin with a residue modulo `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DecoratedSpin {
    pub spin: Spin,
    pub dec: u32,
}

impl DecoratedSpin {
    pub fn new(spin: Spin, dec: u32) -> DecoratedSpin {
        DecoratedSpin { spin, dec }
    }
    pub fn plus(dec: u32) -> DecoratedSpin {
        DecoratedSpin::new(Spin::Plus, dec)
    }
    pub fn minus(dec: u32) -> DecoratedSpin {
        DecoratedSpin::new(Spin::Minus, dec)
    }
}

impl fmt::Display for DecoratedSpin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.spin, self.dec)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ice {
    Delta,
    Gamma,
}

/// One row of the lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RowSpec {
    /// Pair index `i`, 1-based.
    pub pair: usize,
    /// Row `ī` rather than row `i`.
    pub barred: bool,
    pub ice: Ice,
    /// Spectral parameter `z_i^{-1}` instead of `z_i`.
    pub inv: bool,
}

impl RowSpec {
    pub fn label(&self) -> String {
        if self.barred {
            format!("{}bar", self.pair)
        } else {
            self.pair.to_string()
        }
    }
}

/// The two rows joined by a bend, listed top to bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PairSpec {
    pub upper: RowSpec,
    pub lower: RowSpec,
    pub bend: BendKind,
    /// Use the `g(a) -> g(2a)` weights on this pair's grid vertices.
    pub doubled: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeSpec {
    pub r: usize,
    pub n: u32,
    /// Padded to length `r`.
    pub lambda: Vec<u32>,
    pub cols: usize,
    /// Top boundary, left to right; `true` for `-`.
    pub top: Vec<bool>,
    pub pairs: Vec<PairSpec>,
}

pub fn build_lattice(r: usize, n: u32, lambda: &[u32]) -> Result<LatticeSpec, Error> {
    if n % 2 == 0 {
        return Err(Error::Config("n must be odd".into()));
    }
    if r == 0 {
        return Err(Error::Config("r must be positive".into()));
    }
    if lambda.len() > r {
        return Err(Error::Config(format!("lambda has more than r = {r} parts")));
    }
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Config("lambda must be weakly decreasing".into()));
    }
    let mut lam = lambda.to_vec();
    lam.resize(r, 0);
    let cols = lam[0] as usize + r;
    let mut top = vec![false; cols];
    for (k, &l) in lam.iter().enumerate() {
        let col = l as usize + r - k;
        top[cols - col] = true;
    }
    let pairs = (1..=r)
        .map(|i| PairSpec {
            upper: RowSpec { pair: i, barred: false, ice: Ice::Delta, inv: false },
            lower: RowSpec { pair: i, barred: true, ice: Ice::Gamma, inv: true },
            bend: BendKind::DeltaGamma,
            doubled: false,
        })
        .collect();
    Ok(LatticeSpec { r, n, lambda: lam, cols, top, pairs })
}

impl LatticeSpec {
    /// `N = λ_1 + r + 1`.
    pub fn big_n(&self) -> i64 {
        self.cols as i64 + 1
    }

    pub fn rows(&self) -> usize {
        2 * self.r
    }

    pub fn row(&self, k: usize) -> RowSpec {
        let p = &self.pairs[k / 2];
        if k % 2 == 0 {
            p.upper
        } else {
            p.lower
        }
    }

    /// Column numbers (right to left) carrying `-` on the top boundary, decreasing.
    pub fn top_columns(&self) -> Vec<usize> {
        (0..self.cols).filter(|&x| self.top[x]).map(|x| self.cols - x).collect()
    }

    /// Interchange rows `i` and `ī`: both rows switch to the inverse spectral
    /// parameter and the bend is replaced by its flipped kind.
    pub fn swap_pair(&self, i: usize) -> LatticeSpec {
        let mut out = self.clone();
        let p = &mut out.pairs[i - 1];
        p.upper.inv = !p.upper.inv;
        p.lower.inv = !p.lower.inv;
        p.bend = p.bend.flipped();
        out
    }

    /// Bottom pair with row `r̄` (Γ, `z_r^{-1}`) on top of row `r` and the
    /// matching bend: the configuration reached after the R-vertex has been
    /// pushed through the lattice. `bottom` picks the ice of row `r`.
    pub fn with_bottom_pair_reversed(&self, bottom: Ice) -> LatticeSpec {
        let mut out = self.clone();
        let r = self.r;
        let p = &mut out.pairs[r - 1];
        p.upper = RowSpec { pair: r, barred: true, ice: Ice::Gamma, inv: true };
        p.lower = RowSpec { pair: r, barred: false, ice: bottom, inv: false };
        match bottom {
            Ice::Delta => {
                p.bend = BendKind::GammaDeltaFlipped;
                p.doubled = false;
            }
            Ice::Gamma => {
                p.bend = BendKind::GammaGammaFlipped;
                p.doubled = true;
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "r": self.r,
            "n": self.n,
            "lambda": self.lambda,
            "cols": self.cols,
            "top_minus_columns": self.top_columns(),
        })
    }
}

/// A full spin assignment to a lattice.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IceState {
    /// `h[k][x]`, rows `k < 2r`, edges `x <= cols`.
    pub h: Vec<Vec<Spin>>,
    /// `vert[k][x]`, levels `k <= 2r` (0 is the top boundary), columns `x < cols`.
    pub vert: Vec<Vec<Spin>>,
}

/// Integer charges of horizontal edges and bends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Charges {
    pub h: Vec<Vec<i64>>,
    /// One per pair.
    pub bend: Vec<i64>,
}

/// Four spins around a grid vertex, in the order (top, right, bottom, left).
pub fn vertex_spins(state: &IceState, k: usize, x: usize) -> [Spin; 4] {
    [state.vert[k][x], state.h[k][x + 1], state.vert[k + 1][x], state.h[k][x]]
}

/// Spin conservation is exactly the admissibility of the six configurations.
pub fn conserves(s: [Spin; 4]) -> bool {
    let plus = |a: Spin| (a == Spin::Plus) as u8;
    plus(s[0]) + plus(s[3]) == plus(s[1]) + plus(s[2])
}

pub fn compute_charges(spec: &LatticeSpec, state: &IceState) -> Charges {
    let cols = spec.cols;
    let mut h = vec![vec![0i64; cols + 1]; spec.rows()];
    let mut bend = vec![0i64; spec.r];
    for (p, pair) in spec.pairs.iter().enumerate() {
        let rows = [2 * p, 2 * p + 1];
        let specs = [pair.upper, pair.lower];
        for j in 0..2 {
            if specs[j].ice == Ice::Delta {
                let k = rows[j];
                let mut c = 0;
                for x in 0..=cols {
                    c += state.h[k][x].is_minus() as i64;
                    h[k][x] = c;
                }
                bend[p] = h[k][cols];
            }
        }
        for j in 0..2 {
            if specs[j].ice == Ice::Gamma {
                let k = rows[j];
                let mut c = bend[p];
                for x in (0..=cols).rev() {
                    c += (!state.h[k][x].is_minus()) as i64;
                    h[k][x] = c;
                }
            }
        }
    }
    Charges { h, bend }
}

/// Charges reduced modulo `n`, attached to the horizontal spins.
pub fn decorations(spec: &LatticeSpec, state: &IceState) -> Vec<Vec<DecoratedSpin>> {
    let ch = compute_charges(spec, state);
    state
        .h
        .iter()
        .zip(&ch.h)
        .map(|(row, c)| row.iter().zip(c).map(|(&s, &c)| DecoratedSpin::new(s, c.rem_euclid(spec.n as i64) as u32)).collect())
        .collect()
}

/// Boundary conditions, six-vertex admissibility and the bend rule.
pub fn is_admissible(spec: &LatticeSpec, state: &IceState) -> bool {
    let rows = spec.rows();
    let cols = spec.cols;
    if state.h.len() != rows || state.vert.len() != rows + 1 {
        return false;
    }
    if state.h.iter().any(|r| r.len() != cols + 1) || state.vert.iter().any(|r| r.len() != cols) {
        return false;
    }
    for x in 0..cols {
        let want = if spec.top[x] { Spin::Minus } else { Spin::Plus };
        if state.vert[0][x] != want || state.vert[rows][x] != Spin::Plus {
            return false;
        }
    }
    for k in 0..rows {
        if state.h[k][0] != Spin::Plus {
            return false;
        }
        for x in 0..cols {
            if !conserves(vertex_spins(state, k, x)) {
                return false;
            }
        }
    }
    (0..spec.r).all(|p| state.h[2 * p][cols] != state.h[2 * p + 1][cols])
}

/// Leftmost charges of the rows `1̄, …, r̄`, modulo `n`.
pub fn left_residues(spec: &LatticeSpec, state: &IceState) -> Vec<u32> {
    let ch = compute_charges(spec, state);
    (0..spec.r)
        .map(|p| {
            let k = if spec.pairs[p].upper.barred { 2 * p } else { 2 * p + 1 };
            ch.h[k][0].rem_euclid(spec.n as i64) as u32
        })
        .collect()
}

pub fn state_to_json(spec: &LatticeSpec, state: &IceState) -> Value {
    let sp = |v: &Vec<Spin>| v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("");
    let ch = compute_charges(spec, state);
    json!({
        "rows": spec.rows(),
        "cols": spec.cols,
        "h_spins": state.h.iter().map(sp).collect::<Vec<_>>(),
        "v_spins": state.vert.iter().map(sp).collect::<Vec<_>>(),
        "bend_spins": (0..spec.r).map(|p| format!("{}{}", state.h[2 * p][spec.cols], state.h[2 * p + 1][spec.cols])).collect::<Vec<_>>(),
        "charges": { "h": ch.h, "bend": ch.bend },
    })
}

/// Text picture of a state: spins on every edge, rows labelled.
pub fn render(spec: &LatticeSpec, state: &IceState) -> String {
    let mut out = String::new();
    let cols = spec.cols;
    let vline = |out: &mut String, k: usize| {
        out.push_str("      ");
        for x in 0..cols {
            out.push_str(&format!("  {} ", state.vert[k][x]));
        }
        out.push('\n');
    };
    vline(&mut out, 0);
    for k in 0..spec.rows() {
        out.push_str(&format!("{:>5} ", spec.row(k).label()));
        for x in 0..cols {
            out.push_str(&format!("{}-X-", state.h[k][x]));
        }
        out.push_str(&format!("{}{}\n", state.h[k][cols], if k % 2 == 0 { ")" } else { "" }));
        vline(&mut out, k + 1);
    }
    out
}
