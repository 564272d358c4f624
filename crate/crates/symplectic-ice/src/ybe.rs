//! The Yang–Baxter equation for the four R-vertex types: both sides as
//! diagrams, exhaustive verification over every boundary, and the case
//! tables used as fixtures.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::enumerate::{
    generic_walk, partition_function, partition_function_modified, Diagram, NodeKind, Spectral,
};
use crate::expr::{self, Env, Expr};
use crate::model::{DecoratedSpin, Spin};
use crate::weights::{RIce, Variant, VertexKind};
use crate::{Error, Rational, Ring, RingElem, RingFrac, Specialization};

/// Exterior of one YBE instance. `decs` holds the decorations of
/// `ε1, ε2, ε4, ε5`; `ε3` and `ε6` are vertical and undecorated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YbeCase {
    pub ice: RIce,
    pub eps: [Spin; 6],
    pub decs: [u32; 4],
}

impl YbeCase {
    pub fn boundary(&self) -> [DecoratedSpin; 6] {
        let [c1, c2, c4, c5] = self.decs;
        let e = self.eps;
        [
            DecoratedSpin::new(e[0], c1),
            DecoratedSpin::new(e[1], c2),
            DecoratedSpin::new(e[2], 0),
            DecoratedSpin::new(e[3], c4),
            DecoratedSpin::new(e[4], c5),
            DecoratedSpin::new(e[5], 0),
        ]
    }

    /// `ε1 … ε6` as text, e.g. `+0 -1 + -2 +0 -`.
    pub fn label(&self) -> String {
        let b = self.boundary();
        b.iter()
            .enumerate()
            .map(|(k, d)| if k == 2 || k == 5 { d.spin.to_string() } else { d.to_string() })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn plus_count(&self) -> usize {
        self.eps.iter().filter(|s| **s == Spin::Plus).count()
    }
}

/// The two sides. Left: the R-vertex meets the lines first, then the `z1`
/// vertex (top) and the `z2` vertex (bottom). Right: the two grid vertices
/// first (`z2` on top), then the R-vertex.
pub fn ybe_diagrams(ring: Ring, case: &YbeCase) -> (Diagram, Diagram) {
    let ice = case.ice;
    let x = NodeKind::Grid(VertexKind::new(ice.x(), 1, false));
    let y = NodeKind::Grid(VertexKind::new(ice.y(), 2, false));
    let rv = NodeKind::R(ice, Spectral::z(1), Spectral::z(2));
    let b = case.boundary();

    let mut lhs = Diagram::new(ring);
    let e: Vec<usize> = (0..6).map(|k| lhs.boundary(format!("e{}", k + 1), b[k])).collect();
    let a1 = lhs.edge("a1");
    let a2 = lhs.edge("a2");
    let a3 = lhs.edge("a3");
    lhs.node(rv, &[e[1], a1, a2, e[0]]);
    lhs.node(x, &[e[2], e[3], a3, a1]);
    lhs.node(y, &[a3, e[4], e[5], a2]);

    let mut rhs = Diagram::new(ring);
    let e: Vec<usize> = (0..6).map(|k| rhs.boundary(format!("e{}", k + 1), b[k])).collect();
    let w1 = rhs.edge("w1");
    let w2 = rhs.edge("w2");
    let w3 = rhs.edge("w3");
    rhs.node(y, &[e[2], w2, w3, e[1]]);
    rhs.node(x, &[w3, w1, e[5], e[0]]);
    rhs.node(rv, &[w2, e[3], e[4], w1]);
    (lhs, rhs)
}

/// Both partition functions, standard or g-doubled weights.
pub fn ybe_sides(ring: Ring, case: &YbeCase, variant: Variant) -> Result<(RingElem, RingElem), Error> {
    let (l, r) = ybe_diagrams(ring, case);
    Ok((partition_function(&l, variant)?.total, partition_function(&r, variant)?.total))
}

pub fn ybe_sides_modified(ring: Ring, case: &YbeCase) -> Result<(RingFrac, RingFrac), Error> {
    let (l, r) = ybe_diagrams(ring, case);
    Ok((partition_function_modified(&l)?.0, partition_function_modified(&r)?.0))
}

/// Interior states of one side with their weights; the interior values are
/// listed in the order `α1 α2 α3` (left) or `ω1 ω2 ω3` (right).
pub fn side_states(d: &Diagram, variant: Variant) -> Vec<([DecoratedSpin; 3], RingElem)> {
    let ids: Vec<usize> = ["1", "2", "3"]
        .iter()
        .map(|k| d.edges.iter().position(|e| e.label.ends_with(k) && e.fixed.is_none()).expect("interior edge"))
        .collect();
    let mut out = Vec::new();
    generic_walk(d, &|nd, vals| d.node_weight(nd, vals, variant), &mut |vals, w: &RingElem| {
        out.push(([vals[ids[0]], vals[ids[1]], vals[ids[2]]], w.clone()));
    });
    out
}

/// All `2^6 · n^4` exteriors.
pub fn all_cases(ice: RIce, n: u32) -> Vec<YbeCase> {
    let mut out = Vec::new();
    for bits in 0u32..64 {
        let eps: [Spin; 6] = std::array::from_fn(|k| if bits >> (5 - k) & 1 == 1 { Spin::Minus } else { Spin::Plus });
        for d in 0..n.pow(4) {
            let decs = [d / n.pow(3), d / n.pow(2) % n, d / n % n, d % n];
            out.push(YbeCase { ice, eps, decs });
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct YbeFailure {
    pub case: YbeCase,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct YbeReport {
    pub ice: RIce,
    pub n: u32,
    pub variant: Variant,
    pub cases: usize,
    /// Cases with a nonzero side.
    pub nonzero: usize,
    pub failures: Vec<YbeFailure>,
    /// Cases where some random specialization disagreed with the exact verdict.
    pub random_disagreements: usize,
}

impl YbeReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.random_disagreements == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ice": self.ice.name(),
            "n": self.n,
            "variant": format!("{:?}", self.variant).to_lowercase(),
            "cases": self.cases,
            "nonzero": self.nonzero,
            "failures": self.failures.iter().map(|f| json!({
                "boundary": f.case.label(),
                "lhs": f.lhs,
                "rhs": f.rhs,
            })).collect::<Vec<_>>(),
            "random_disagreements": self.random_disagreements,
        })
    }
}

fn frac_value(f: &RingFrac, s: &Specialization) -> Option<Rational> {
    let d = f.den.specialize(s);
    if num_traits::Zero::is_zero(&d) {
        None
    } else {
        Some(f.num.specialize(s) / d)
    }
}

/// Check one exterior: exact verdict, and `checks` random specializations
/// (seeded by `seed`) that must agree with it.
fn check_case(ring: Ring, case: &YbeCase, variant: Variant, seed: u64, checks: usize) -> (bool, bool, bool, String, String) {
    let specs: Vec<Specialization> =
        (0..checks as u64).map(|k| Specialization::random(seed.wrapping_mul(1_000_003).wrapping_add(k), ring.n, 2)).collect();
    if variant == Variant::Modified {
        let (l, r) = ybe_sides_modified(ring, case).expect("no bends in YBE diagrams");
        let ok = l == r;
        let agree = specs.iter().all(|s| match (frac_value(&l, s), frac_value(&r, s)) {
            (Some(a), Some(b)) => (a == b) == ok,
            _ => true,
        });
        (ok, !(l.is_zero() && r.is_zero()), agree, l.to_string(), r.to_string())
    } else {
        let (l, r) = ybe_sides(ring, case, variant).expect("standard weights");
        let ok = l == r;
        let agree = specs.iter().all(|s| {
            let (a, b): (Rational, Rational) = (l.specialize(s), r.specialize(s));
            (a == b) == ok
        });
        (ok, !(l.is_zero() && r.is_zero()), agree, l.to_string(), r.to_string())
    }
}

/// Verify the YBE on every exterior. `random_checks` specializations per
/// case (0 to skip), derived deterministically from `seed`.
pub fn verify_all_with(ice: RIce, n: u32, variant: Variant, seed: u64, random_checks: usize) -> Result<YbeReport, Error> {
    let ring = Ring::new(n, 2)?;
    let cases = all_cases(ice, n);
    let results: Vec<_> = cases
        .par_iter()
        .enumerate()
        .map(|(k, c)| (c, check_case(ring, c, variant, seed.wrapping_add(k as u64), random_checks)))
        .collect();
    let mut failures = Vec::new();
    let mut nonzero = 0;
    let mut random_disagreements = 0;
    for (c, (ok, nz, agree, l, r)) in results {
        nonzero += nz as usize;
        random_disagreements += (!agree) as usize;
        if !ok {
            failures.push(YbeFailure { case: *c, lhs: l, rhs: r });
        }
    }
    Ok(YbeReport { ice, n, variant, cases: cases.len(), nonzero, failures, random_disagreements })
}

pub fn verify_all(ice: RIce, n: u32, variant: Variant) -> Result<YbeReport, Error> {
    verify_all_with(ice, n, variant, 0, 0)
}

// ---------------------------------------------------------------------------
// Case tables

/// One decorated spin in a fixture: a sign and an integer expression for
/// the decoration (`None` on the undecorated vertical edges).
#[derive(Clone, Debug, PartialEq)]
pub struct FixtureSpin {
    pub spin: Spin,
    pub dec: Option<Expr>,
}

/// One listed interior state: the two horizontal interior spins and the weight.
#[derive(Clone, Debug, PartialEq)]
pub struct FixtureRow {
    pub spins: [FixtureSpin; 2],
    pub weight: Expr,
}

/// A tabulated YBE case. Parameters (`a`, `b`, ...) range over `1..n-1`
/// with `a != b` and `c != d`; `also` lifts those restrictions (`a=0`,
/// `a=b`), `where` adds conditions and `let` defines derived quantities.
#[derive(Clone, Debug, PartialEq)]
pub struct Fixture {
    pub ice: RIce,
    pub name: String,
    pub boundary: Vec<FixtureSpin>,
    /// No admissible state on either side, for any decorations.
    pub empty: bool,
    pub conditions: Vec<Expr>,
    pub also: Vec<String>,
    pub lhs: Vec<FixtureRow>,
    pub rhs: Vec<FixtureRow>,
    /// Corrections to the printed table, one line each.
    pub errata: Vec<String>,
}

fn parse_spin(tok: &str) -> Result<FixtureSpin, Error> {
    let mut ch = tok.chars();
    let spin = ch.next().and_then(Spin::from_char).ok_or_else(|| Error::Parse(format!("bad spin {tok:?}")))?;
    let rest = ch.as_str();
    Ok(FixtureSpin { spin, dec: if rest.is_empty() { None } else { Some(expr::parse(rest)?) } })
}

/// Parse the case-table format (see `fixtures/appendix.txt`).
pub fn parse_fixtures(text: &str) -> Result<Vec<Fixture>, Error> {
    let mut out = Vec::new();
    for block in text.split("\n\n").map(str::trim).filter(|b| !b.is_empty()) {
        let mut lets: Vec<(String, Expr)> = Vec::new();
        let mut fx: Option<Fixture> = None;
        for line in block.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let (key, rest) = line.split_once(' ').unwrap_or((line, ""));
            let rest = rest.trim();
            if key == "case" {
                let (ice, name) = rest.split_once(' ').ok_or_else(|| Error::Parse(format!("bad case line {line:?}")))?;
                fx = Some(Fixture {
                    ice: ice.parse().map_err(Error::Parse)?,
                    name: name.to_string(),
                    boundary: Vec::new(),
                    empty: false,
                    conditions: Vec::new(),
                    also: Vec::new(),
                    lhs: Vec::new(),
                    rhs: Vec::new(),
                    errata: Vec::new(),
                });
                continue;
            }
            let f = fx.as_mut().ok_or_else(|| Error::Parse(format!("{line:?} before any case")))?;
            match key {
                "boundary" | "spins" => {
                    f.boundary = rest.split_whitespace().map(parse_spin).collect::<Result<_, _>>()?;
                    if f.boundary.len() != 6 {
                        return Err(Error::Parse(format!("{}: six boundary spins expected", f.name)));
                    }
                }
                "empty" => f.empty = true,
                "erratum" => f.errata.push(rest.to_string()),
                "where" => f.conditions.push(expr::parse(rest)?),
                "also" => f.also.extend(rest.split_whitespace().map(str::to_string)),
                "let" => {
                    let (k, e) = rest.split_once('=').ok_or_else(|| Error::Parse(format!("bad let {line:?}")))?;
                    let e = expr::parse(e)?;
                    lets.push((k.trim().to_string(), e));
                }
                "lhs" | "rhs" => {
                    let (sp, w) = rest.split_once(':').ok_or_else(|| Error::Parse(format!("bad row {line:?}")))?;
                    let sp: Vec<FixtureSpin> = sp.split_whitespace().map(parse_spin).collect::<Result<_, _>>()?;
                    let [s1, s2]: [FixtureSpin; 2] =
                        sp.try_into().map_err(|_| Error::Parse(format!("two interior spins expected: {line:?}")))?;
                    let row = FixtureRow { spins: [s1, s2], weight: expr::parse(w)? };
                    if key == "lhs" {
                        f.lhs.push(row);
                    } else {
                        f.rhs.push(row);
                    }
                }
                _ => return Err(Error::Parse(format!("unknown line {line:?}"))),
            }
        }
        // `let` lines may follow the rows that use them.
        let Some(mut f) = fx else { continue };
        let bind = |e: &Expr| lets.iter().rev().fold(e.clone(), |e, (k, by)| e.substitute(k, by));
        for row in f.lhs.iter_mut().chain(f.rhs.iter_mut()) {
            row.weight = bind(&row.weight);
            for s in row.spins.iter_mut() {
                s.dec = s.dec.as_ref().map(bind);
            }
        }
        for c in f.conditions.iter_mut() {
            *c = bind(c);
        }
        out.push(f);
    }
    Ok(out)
}

/// The case tables for the ΔΔ, ΔΓ and ΓΔ R-vertices.
pub fn appendix_fixtures() -> Vec<Fixture> {
    parse_fixtures(include_str!("../fixtures/appendix.txt")).expect("bundled fixtures parse")
}

impl Fixture {
    pub fn parameters(&self) -> Vec<String> {
        let mut vars = Vec::new();
        for s in &self.boundary {
            if let Some(d) = &s.dec {
                d.variables(&mut vars);
            }
        }
        for row in self.lhs.iter().chain(&self.rhs) {
            row.weight.variables(&mut vars);
            for s in &row.spins {
                if let Some(d) = &s.dec {
                    d.variables(&mut vars);
                }
            }
        }
        for c in &self.conditions {
            c.variables(&mut vars);
        }
        vars.retain(|v| v != "n");
        vars.sort();
        vars
    }

    /// Parameter assignments in the case's domain.
    pub fn instances(&self, ring: Ring) -> Result<Vec<Env>, Error> {
        let params = self.parameters();
        let n = ring.n as i64;
        let mut out = Vec::new();
        let total = (n as usize).pow(params.len() as u32);
        'next: for k in 0..total {
            let mut env = Env::new(ring);
            let mut rest = k;
            for p in &params {
                env.set(p, (rest % n as usize) as i64);
                rest /= n as usize;
            }
            for p in &params {
                if env.vars[p] == 0 && !self.also.contains(&format!("{p}=0")) {
                    continue 'next;
                }
            }
            for (x, y) in [("a", "b"), ("c", "d")] {
                if let (Some(u), Some(w)) = (env.vars.get(x), env.vars.get(y)) {
                    if u == w && !self.also.contains(&format!("{x}={y}")) {
                        continue 'next;
                    }
                }
            }
            for c in &self.conditions {
                if !env.truth(c)? {
                    continue 'next;
                }
            }
            out.push(env);
        }
        Ok(out)
    }
}

type SideMap = BTreeMap<(DecoratedSpin, DecoratedSpin), RingElem>;

fn spin_value(env: &Env, s: &FixtureSpin) -> Result<DecoratedSpin, Error> {
    let dec = match &s.dec {
        Some(d) => env.ring.residue(env.int(d)?),
        None => 0,
    };
    Ok(DecoratedSpin::new(s.spin, dec))
}

fn expected_side(env: &Env, rows: &[FixtureRow]) -> Result<SideMap, Error> {
    let mut m = SideMap::new();
    for row in rows {
        let key = (spin_value(env, &row.spins[0])?, spin_value(env, &row.spins[1])?);
        let w: RingElem = env.ring_value(&row.weight)?;
        let e = m.entry(key).or_insert_with(|| env.ring.zero());
        *e = &*e + &w;
    }
    m.retain(|_, w| !w.is_zero());
    Ok(m)
}

/// Interior states of one side grouped by the two horizontal interior edges
/// the tables list: on the left the upper and lower edges leaving the
/// R-vertex, on the right the lower and upper edges entering it.
fn actual_side(d: &Diagram) -> SideMap {
    let mut m = SideMap::new();
    for ([p, q, _], w) in side_states(d, Variant::Standard) {
        let key = (p, q);
        let e = m.entry(key).or_insert_with(|| d.ring.zero());
        *e = &*e + &w;
    }
    m.retain(|_, w| !w.is_zero());
    m
}

fn describe(m: &SideMap) -> String {
    let parts: Vec<String> = m.iter().map(|((a, b), w)| format!("{a} {b} : {w}")).collect();
    format!("[{}]", parts.join("; "))
}

/// Check a fixture at one `n`; returns one message per disagreement and the
/// number of instances checked.
pub fn check_fixture(f: &Fixture, n: u32) -> Result<(usize, Vec<String>), Error> {
    let ring = Ring::new(n, 2)?;
    let mut problems = Vec::new();
    if f.empty {
        let eps: [Spin; 6] = std::array::from_fn(|k| f.boundary[k].spin);
        let mut count = 0;
        for d in 0..n.pow(4) {
            let case = YbeCase { ice: f.ice, eps, decs: [d / n.pow(3), d / n.pow(2) % n, d / n % n, d % n] };
            let (l, r) = ybe_diagrams(ring, &case);
            if !actual_side(&l).is_empty() || !actual_side(&r).is_empty() {
                problems.push(format!("{} {}: states at {}", f.ice.name(), f.name, case.label()));
            }
            count += 1;
        }
        return Ok((count, problems));
    }
    let envs = f.instances(ring)?;
    for env in &envs {
        let b: Vec<DecoratedSpin> = f.boundary.iter().map(|s| spin_value(env, s)).collect::<Result<_, _>>()?;
        let case = YbeCase {
            ice: f.ice,
            eps: std::array::from_fn(|k| b[k].spin),
            decs: [b[0].dec, b[1].dec, b[3].dec, b[4].dec],
        };
        let (l, r) = ybe_diagrams(ring, &case);
        for (side, d, rows) in [("lhs", &l, &f.lhs), ("rhs", &r, &f.rhs)] {
            let want = expected_side(env, rows)?;
            let got = actual_side(d);
            if want != got {
                let params: Vec<String> =
                    env.vars.iter().filter(|(k, _)| *k != "n").map(|(k, v)| format!("{k}={v}")).collect();
                problems.push(format!(
                    "{} {} n={n} {} [{}] {side}: expected {} got {}",
                    f.ice.name(),
                    f.name,
                    case.label(),
                    params.join(" "),
                    describe(&want),
                    describe(&got)
                ));
            }
        }
    }
    Ok((envs.len(), problems))
}
