use symplectic_ice::{Ring, RingElem};

/// A raw state: bits for every interior edge, decoded into spins.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RawState {
    /// `true` for `-`; rows `0..2r`, edges `0..=cols`.
    pub h: Vec<Vec<bool>>,
    /// Levels `0..=2r`, columns `0..cols`.
    pub v: Vec<Vec<bool>>,
}

pub struct Lattice {
    pub r: usize,
    pub n: u32,
    pub cols: usize,
    pub top: Vec<bool>,
}

pub fn lattice(r: usize, n: u32, lambda: &[u32]) -> Lattice {
    let mut lam = lambda.to_vec();
    lam.resize(r, 0);
    let cols = lam[0] as usize + r;
    let mut top = vec![false; cols];
    for k in 0..r {
        // column number lam[k] + r - k counted from the right
        top[cols - (lam[k] as usize + r - k)] = true;
    }
    Lattice { r, n, cols, top }
}

pub fn interior_edges(l: &Lattice) -> usize {
    let rows = 2 * l.r;
    rows * l.cols + (rows - 1) * l.cols
}

/// Every assignment of the interior edges that satisfies the vertex and
/// bend rules.
pub fn all_states(l: &Lattice) -> Vec<RawState> {
    let rows = 2 * l.r;
    let cols = l.cols;
    let m = interior_edges(l);
    assert!(m <= 22, "too many edges for brute force");
    let mut out = Vec::new();
    for bits in 0u64..(1u64 << m) {
        let mut it = (0..m).map(|k| bits >> k & 1 == 1);
        let mut h = vec![vec![false; cols + 1]; rows];
        let mut v = vec![vec![false; cols]; rows + 1];
        v[0] = l.top.clone();
        for row in h.iter_mut() {
            for x in 1..=cols {
                row[x] = it.next().unwrap();
            }
        }
        for level in v.iter_mut().take(rows).skip(1) {
            for x in 0..cols {
                level[x] = it.next().unwrap();
            }
        }
        let ok_vertices = (0..rows).all(|k| {
            (0..cols).all(|x| {
                let plus = |b: bool| (!b) as u8;
                plus(v[k][x]) + plus(h[k][x]) == plus(h[k][x + 1]) + plus(v[k + 1][x])
            })
        });
        let ok_bends = (0..l.r).all(|p| h[2 * p][cols] != h[2 * p + 1][cols]);
        if ok_vertices && ok_bends {
            out.push(RawState { h, v });
        }
    }
    out.sort();
    out
}

/// Charges: Δ rows count `-` from the left; Γ rows count `+` from the right
/// plus the charge at the Δ end of the bend.
pub fn charges(l: &Lattice, s: &RawState) -> Vec<Vec<i64>> {
    let cols = l.cols;
    let mut c = vec![vec![0i64; cols + 1]; 2 * l.r];
    for p in 0..l.r {
        let mut acc = 0;
        for x in 0..=cols {
            acc += s.h[2 * p][x] as i64;
            c[2 * p][x] = acc;
        }
        let mut acc = c[2 * p][cols];
        for x in (0..=cols).rev() {
            acc += (!s.h[2 * p + 1][x]) as i64;
            c[2 * p + 1][x] = acc;
        }
    }
    c
}

/// Product of the table weights, written out directly.
pub fn weight(l: &Lattice, s: &RawState) -> RingElem {
    let ring = Ring::new(l.n, l.r).unwrap();
    let n = l.n as i64;
    let c = charges(l, s);
    let one = ring.one();
    let v = ring.v();
    let mut w = ring.one();
    for k in 0..2 * l.r {
        let i = k / 2 + 1;
        let gamma = k % 2 == 1;
        let z = if gamma { ring.z_pow(i, -1) } else { ring.z(i) };
        for x in 0..l.cols {
            let (t, r, b, lft) = (s.v[k][x], s.h[k][x + 1], s.v[k + 1][x], s.h[k][x]);
            let a = if gamma { c[k][x + 1] } else { c[k][x] };
            let div = a.rem_euclid(n) == 0;
            let f = match (t, r, b, lft, gamma) {
                (false, false, false, false, _) => one.clone(),
                (true, true, true, true, false) => ring.g(a) * &z,
                (true, true, true, true, true) => z.clone(),
                (true, false, true, false, false) => one.clone(),
                (true, false, true, false, true) => ring.g(a),
                (false, true, false, true, _) => z.clone(),
                (false, false, true, true, _) => {
                    if div {
                        (&one - &v) * &z
                    } else {
                        ring.zero()
                    }
                }
                (true, true, false, false, _) => {
                    if div {
                        one.clone()
                    } else {
                        ring.zero()
                    }
                }
                _ => unreachable!("inadmissible vertex"),
            };
            w = w * f;
        }
        if !gamma {
            let bc = c[k][l.cols];
            w = if s.h[k][l.cols] { w * ring.g(2 * bc) * ring.z(i) } else { w * ring.z_pow(i, -1) };
        }
    }
    w
}

pub fn partition(l: &Lattice) -> RingElem {
    let ring = Ring::new(l.n, l.r).unwrap();
    all_states(l).iter().fold(ring.zero(), |acc, s| acc + weight(l, s))
}
