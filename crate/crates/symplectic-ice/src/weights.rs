//! Boltzmann weights: grid vertices (Δ and Γ ice), bends, R-vertices, the
//! g-doubled variant and the gauge-modified weights.

use std::fmt;

use crate::exactring::Fraction;
use crate::model::{DecoratedSpin, Ice, Spin};
use crate::{Error, Ring, RingElem, RingFrac};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Standard,
    /// `g(a) -> g(2a)`.
    GDoubled,
    /// Gauge-modified weights (see [`modified_grid_weight`], [`modified_r_weight`]).
    Modified,
}

impl std::str::FromStr for Variant {
    type Err = String;
    fn from_str(s: &str) -> Result<Variant, String> {
        match s {
            "standard" => Ok(Variant::Standard),
            "gdoubled" => Ok(Variant::GDoubled),
            "modified" => Ok(Variant::Modified),
            _ => Err(format!("unknown variant '{s}' (standard|gdoubled|modified)")),
        }
    }
}

/// Grid vertex in a row with spectral parameter `z_i` or `z_i^{-1}` (`Inv`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexKind {
    Delta(usize),
    Gamma(usize),
    DeltaInv(usize),
    GammaInv(usize),
}

impl VertexKind {
    pub fn new(ice: Ice, i: usize, inv: bool) -> VertexKind {
        match (ice, inv) {
            (Ice::Delta, false) => VertexKind::Delta(i),
            (Ice::Gamma, false) => VertexKind::Gamma(i),
            (Ice::Delta, true) => VertexKind::DeltaInv(i),
            (Ice::Gamma, true) => VertexKind::GammaInv(i),
        }
    }

    pub fn ice(self) -> Ice {
        match self {
            VertexKind::Delta(_) | VertexKind::DeltaInv(_) => Ice::Delta,
            _ => Ice::Gamma,
        }
    }

    pub fn index(self) -> usize {
        match self {
            VertexKind::Delta(i) | VertexKind::Gamma(i) | VertexKind::DeltaInv(i) | VertexKind::GammaInv(i) => i,
        }
    }

    pub fn inv(self) -> bool {
        matches!(self, VertexKind::DeltaInv(_) | VertexKind::GammaInv(_))
    }

    pub fn spectral(self, ring: &Ring) -> RingElem {
        ring.z_pow(self.index(), if self.inv() { -1 } else { 1 })
    }
}

/// The six admissible configurations, named as in the usual six-vertex tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Config {
    A1,
    A2,
    B1,
    B2,
    C1,
    C2,
}

impl Config {
    pub const ALL: [Config; 6] = [Config::A1, Config::A2, Config::B1, Config::B2, Config::C1, Config::C2];

    /// From (top, right, bottom, left).
    pub fn of(s: [Spin; 4]) -> Option<Config> {
        use Spin::{Minus as M, Plus as P};
        match s {
            [P, P, P, P] => Some(Config::A1),
            [M, M, M, M] => Some(Config::A2),
            [M, P, M, P] => Some(Config::B1),
            [P, M, P, M] => Some(Config::B2),
            [P, P, M, M] => Some(Config::C1),
            [M, M, P, P] => Some(Config::C2),
            _ => None,
        }
    }

    pub fn spins(self) -> [Spin; 4] {
        use Spin::{Minus as M, Plus as P};
        match self {
            Config::A1 => [P, P, P, P],
            Config::A2 => [M, M, M, M],
            Config::B1 => [M, P, M, P],
            Config::B2 => [P, M, P, M],
            Config::C1 => [P, P, M, M],
            Config::C2 => [M, M, P, P],
        }
    }

    pub fn name(self) -> &'static str {
        ["a1", "a2", "b1", "b2", "c1", "c2"][self as usize]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BendKind {
    /// Δ row above Γ row.
    DeltaGamma,
    DeltaGammaFlipped,
    /// Γ row above Δ row, after the R-vertex has passed through.
    GammaDeltaFlipped,
    /// Γ row above Δ row, as it appears in the third fish relation.
    GammaDelta,
    /// Two Γ rows, bend charge 0.
    GammaGammaFlipped,
    GammaGamma,
}

impl BendKind {
    pub const ALL: [BendKind; 6] = [
        BendKind::DeltaGamma,
        BendKind::DeltaGammaFlipped,
        BendKind::GammaDeltaFlipped,
        BendKind::GammaDelta,
        BendKind::GammaGammaFlipped,
        BendKind::GammaGamma,
    ];

    pub fn flipped(self) -> BendKind {
        match self {
            BendKind::DeltaGamma => BendKind::DeltaGammaFlipped,
            BendKind::DeltaGammaFlipped => BendKind::DeltaGamma,
            BendKind::GammaDeltaFlipped => BendKind::GammaDelta,
            BendKind::GammaDelta => BendKind::GammaDeltaFlipped,
            BendKind::GammaGammaFlipped => BendKind::GammaGamma,
            BendKind::GammaGamma => BendKind::GammaGammaFlipped,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BendKind::DeltaGamma => "DG",
            BendKind::DeltaGammaFlipped => "DG-flipped",
            BendKind::GammaDeltaFlipped => "GD-flipped",
            BendKind::GammaDelta => "GD",
            BendKind::GammaGammaFlipped => "GG-flipped",
            BendKind::GammaGamma => "GG",
        }
    }
}

/// R-vertex types; the first letter is the ice of the line carrying `z1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RIce {
    GD,
    DD,
    DG,
    GG,
}

impl RIce {
    pub const ALL: [RIce; 4] = [RIce::GD, RIce::DD, RIce::DG, RIce::GG];

    pub fn x(self) -> Ice {
        match self {
            RIce::GD | RIce::GG => Ice::Gamma,
            RIce::DD | RIce::DG => Ice::Delta,
        }
    }

    pub fn y(self) -> Ice {
        match self {
            RIce::DD | RIce::GD => Ice::Delta,
            RIce::DG | RIce::GG => Ice::Gamma,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RIce::GD => "gd",
            RIce::DD => "dd",
            RIce::DG => "dg",
            RIce::GG => "gg",
        }
    }
}

impl fmt::Display for RIce {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for RIce {
    type Err = String;
    fn from_str(s: &str) -> Result<RIce, String> {
        match s.to_ascii_lowercase().as_str() {
            "gd" => Ok(RIce::GD),
            "dd" => Ok(RIce::DD),
            "dg" => Ok(RIce::DG),
            "gg" => Ok(RIce::GG),
            _ => Err(format!("unknown ice type '{s}' (gd|dd|dg|gg)")),
        }
    }
}

fn delta(ring: &Ring, a: i64) -> bool {
    ring.residue(a) == 0
}

/// Table weight of a grid vertex. `charge` is the charge of the left edge for
/// Δ ice and of the right edge for Γ ice; only its residue matters.
pub fn grid_weight(ring: &Ring, kind: VertexKind, spins: [Spin; 4], charge: i64, variant: Variant) -> RingElem {
    let Some(cfg) = Config::of(spins) else {
        return ring.zero();
    };
    let z = kind.spectral(ring);
    let d = delta(ring, charge);
    let ind = |b: bool| if b { ring.one() } else { ring.zero() };
    let h = (ring.one() - ring.v()) * ind(d);
    let w = match (kind.ice(), cfg) {
        (_, Config::A1) => ring.one(),
        (Ice::Delta, Config::A2) => ring.g(charge) * &z,
        (Ice::Gamma, Config::A2) => z.clone(),
        (Ice::Delta, Config::B1) => ring.one(),
        (Ice::Gamma, Config::B1) => ring.g(charge),
        (_, Config::B2) => z.clone(),
        (_, Config::C1) => h * &z,
        (_, Config::C2) => ind(d),
    };
    match variant {
        Variant::GDoubled => w.double_g(),
        _ => w,
    }
}

/// Grid weight from decorated spins, checking that the decorations are
/// consistent with the charge rule (`0` otherwise).
pub fn grid_weight_decorated(
    ring: &Ring,
    kind: VertexKind,
    top: Spin,
    right: DecoratedSpin,
    bottom: Spin,
    left: DecoratedSpin,
    variant: Variant,
) -> RingElem {
    match grid_charge(ring, kind.ice(), right, left) {
        Some(a) => {
            let spins = [top, right.spin, bottom, left.spin];
            if variant == Variant::Modified {
                modified_grid_weight(ring, kind, spins, a as i64)
            } else {
                grid_weight(ring, kind, spins, a as i64, variant)
            }
        }
        None => ring.zero(),
    }
}

/// The charge a grid vertex reads, if its horizontal decorations are compatible.
pub fn grid_charge(ring: &Ring, ice: Ice, right: DecoratedSpin, left: DecoratedSpin) -> Option<u32> {
    match ice {
        Ice::Delta => (ring.residue(left.dec as i64 + right.spin.is_minus() as i64) == right.dec).then_some(left.dec),
        Ice::Gamma => {
            (ring.residue(right.dec as i64 + (left.spin == Spin::Plus) as i64) == left.dec).then_some(right.dec)
        }
    }
}

/// Bend weight. `z` is the pair's spectral parameter `z_i`. The Gauss-sum
/// factor carried by the standard bend is not affected by `variant`.
pub fn bend_weight(ring: &Ring, kind: BendKind, upper: DecoratedSpin, lower: DecoratedSpin, z: &RingElem) -> RingElem {
    let zi = z.inverse_monomial().expect("spectral parameter");
    let (u, l) = (upper, lower);
    let res = |a: i64| ring.residue(a);
    let dec_eq = |a: u32, b: u32, shift: i64| res(a as i64 + shift) == b;
    use Spin::{Minus as M, Plus as P};
    match kind {
        BendKind::DeltaGamma | BendKind::DeltaGammaFlipped => {
            let (zp, zm) = if kind == BendKind::DeltaGamma { (z, &zi) } else { (&zi, z) };
            match (u.spin, l.spin) {
                (M, P) if dec_eq(u.dec, l.dec, 1) => ring.g(2 * u.dec as i64) * zp,
                (P, M) if u.dec == l.dec => zm.clone(),
                _ => ring.zero(),
            }
        }
        BendKind::GammaDeltaFlipped | BendKind::GammaDelta => {
            let (zmp, zpm) = if kind == BendKind::GammaDeltaFlipped { (&zi, z) } else { (z, &zi) };
            match (u.spin, l.spin) {
                (M, P) if u.dec == l.dec => zmp.clone(),
                (P, M) if dec_eq(l.dec, u.dec, 1) => zpm.clone(),
                _ => ring.zero(),
            }
        }
        BendKind::GammaGammaFlipped | BendKind::GammaGamma => {
            let (zmp, zpm) = if kind == BendKind::GammaGammaFlipped { (&zi, z) } else { (z, &zi) };
            let one = res(1);
            match (u.spin, l.spin) {
                (M, P) if u.dec == 0 && l.dec == one => zmp.clone(),
                (P, M) if u.dec == one && l.dec == 0 => zpm.clone(),
                _ => ring.zero(),
            }
        }
    }
}

/// Representative of a residue in `[1, n]`.
fn up(x: u32, n: u32) -> i64 {
    if x == 0 {
        n as i64
    } else {
        x as i64
    }
}

/// R-vertex weight. `quad` holds the decorated spins at (NW, NE, SE, SW); the
/// line with spectral parameter `z1` runs SW→NE, the one with `z2` NW→SE.
pub fn r_weight(ring: &Ring, ice: RIce, quad: [DecoratedSpin; 4], z1: &RingElem, z2: &RingElem, variant: Variant) -> RingElem {
    let w = r_weight_table(ring, ice, quad, z1, z2);
    match variant {
        Variant::GDoubled => w.double_g(),
        _ => w,
    }
}

fn r_weight_table(ring: &Ring, ice: RIce, quad: [DecoratedSpin; 4], z1: &RingElem, z2: &RingElem) -> RingElem {
    let n = ring.n;
    let ni = n as i64;
    let m = |a: i64| ring.residue(a) as i64;
    let v = ring.v();
    let vp = |e: i64| v.pow(e);
    let z1p = |e: i64| z1.pow(e);
    let z2p = |e: i64| z2.pow(e);
    let zn1 = z1p(ni);
    let zn2 = z2p(ni);
    let one = ring.one();
    let zero = ring.zero();
    let g = |a: i64| ring.g(a);
    let s: String = quad.iter().map(|d| d.spin.to_string()).collect();
    let [nw, ne, se, sw] = quad.map(|d| d.dec);
    let (nn, e, ss, w) = (nw as i64, ne as i64, se as i64, sw as i64);
    let all0 = nw == 0 && ne == 0 && se == 0 && sw == 0;
    match ice {
        RIce::GD => match s.as_str() {
            "++++" if nw == 0 && se == 0 && ne == sw => &zn1 - &(&v * &zn2),
            "----" if ne == 0 && sw == 0 && nw == se => &zn1 - &(&v * &zn2),
            "-+-+" => {
                let (b, c, d, a) = (nn, e, ss, w);
                if b == d && a == c {
                    let k = a + b - 1;
                    if m(k) == 0 {
                        &(&vp(2) * &zn2) - &zn1
                    } else {
                        g(k) * (&zn1 - &(&v * &zn2))
                    }
                } else if m(a + b - 1) == 0 && m(c + d - 1) == 0 && m(a - c) != 0 {
                    let ee = m(a - c);
                    let base = (&v - &one) * z1p(ni - ee) * z2p(ee);
                    if a * d == 0 || (a * b * c * d != 0 && a > c) {
                        base
                    } else {
                        &v * &base
                    }
                } else {
                    zero
                }
            }
            "+-+-" if all0 => &zn1 - &zn2,
            "++--" if nw == 0 && sw == 0 => {
                let (a, b) = (up(ne, n), up(se, n));
                if m(a + b - 1) == 0 {
                    (&one - &v) * z1p(a) * z2p(b - 1)
                } else {
                    zero
                }
            }
            "--++" if ne == 0 && se == 0 => {
                let (a, b) = (up(nw, n), up(sw, n));
                if m(a + b - 1) == 0 {
                    (&one - &v) * z1p(a - 1) * z2p(b)
                } else {
                    zero
                }
            }
            _ => zero,
        },
        RIce::DD => match s.as_str() {
            "++++" if all0 => &zn1 - &(&v * &zn2),
            "----" => {
                if nw == ne && ne == se && se == sw {
                    &zn2 - &(&v * &zn1)
                } else if nw == ne && se == sw {
                    let c = m(w - nn);
                    (&one - &v) * z1p(ni - c) * z2p(c)
                } else if nw == se && ne == sw {
                    g(w - nn) * (&zn1 - &zn2)
                } else {
                    zero
                }
            }
            "-+-+" if ne == 0 && sw == 0 && nw == se => &v * &(&zn1 - &zn2),
            "++--" if nw == 0 && ne == 0 && se == sw => {
                let a = up(sw, n);
                (&one - &v) * z1p(ni - a + 1) * z2p(a - 1)
            }
            "+-+-" if nw == 0 && se == 0 && ne == sw => &zn1 - &zn2,
            "--++" if se == 0 && sw == 0 && nw == ne => {
                let a = up(nw, n);
                (&one - &v) * z1p(a - 1) * z2p(ni - a + 1)
            }
            _ => zero,
        },
        RIce::DG => match s.as_str() {
            "++++" if ne == 0 && sw == 0 && nw == se => &zn2 - &(&vp(ni) * &zn1),
            "----" if nw == 0 && se == 0 && ne == sw => &zn2 - &(&vp(ni) * &zn1),
            "-+-+" if all0 => &zn2 - &(&vp(ni + 1) * &zn1),
            "+-+-" => {
                let (b, c, d, a) = (nn, e, ss, w);
                if b == d && a == c {
                    let k = a + b - 1;
                    if m(k) == 0 {
                        &(&vp(ni - 1) * &zn1) - &zn2
                    } else {
                        // (z2^n - v^n z1^n) / g(k) = g(-k) v^{-1} (z2^n - v^n z1^n)
                        g(-k) * vp(-1) * (&zn2 - &(&vp(ni) * &zn1))
                    }
                } else if m(a + b - 1) == 0 && m(c + d - 1) == 0 && m(a - c) != 0 {
                    let ee = m(c - a);
                    (&one - &v) * vp(ee - 1) * z1p(ee) * z2p(ni - ee)
                } else {
                    zero
                }
            }
            "++--" if ne == 0 && se == 0 => {
                let (a, b) = (up(nw, n), up(sw, n));
                if m(a + b - 1) == 0 {
                    (&one - &v) * vp(a - 1) * z1p(a) * z2p(b - 1)
                } else {
                    zero
                }
            }
            "--++" if nw == 0 && sw == 0 => {
                let (a, b) = (up(ne, n), up(se, n));
                if m(a + b - 1) == 0 {
                    (&one - &v) * vp(a - 1) * z1p(a - 1) * z2p(b)
                } else {
                    zero
                }
            }
            _ => zero,
        },
        RIce::GG => match s.as_str() {
            "++++" => {
                if nw == ne && ne == se && se == sw {
                    &zn2 - &(&v * &zn1)
                } else if nw == se && ne == sw {
                    g(nn - e) * (&zn1 - &zn2)
                } else if nw == ne && se == sw {
                    let c = m(nn - ss);
                    (&one - &v) * z1p(c) * z2p(ni - c)
                } else {
                    zero
                }
            }
            "----" if all0 => &zn1 - &(&v * &zn2),
            "-+-+" if nw == 0 && se == 0 && ne == sw => &v * &(&zn1 - &zn2),
            "+-+-" if ne == 0 && sw == 0 && nw == se => &zn1 - &zn2,
            "++--" if se == 0 && sw == 0 && nw == ne => {
                let a = up(nw, n);
                (&one - &v) * z1p(a) * z2p(ni - a)
            }
            "--++" if nw == 0 && ne == 0 && se == sw => {
                let a = up(sw, n);
                (&one - &v) * z1p(ni - a) * z2p(a)
            }
            _ => zero,
        },
    }
}

/// Gauge factor of a horizontal edge: `z^{dec}` on `-` edges of Δ lines and
/// on `+` edges of Γ lines, `1` otherwise.
pub fn f_factor(ring: &Ring, ice: Ice, s: DecoratedSpin, z: &RingElem) -> RingElem {
    let hit = match ice {
        Ice::Delta => s.spin == Spin::Minus,
        Ice::Gamma => s.spin == Spin::Plus,
    };
    if hit {
        z.pow(s.dec as i64)
    } else {
        ring.one()
    }
}

/// Modified grid weight: `wt · f(left) / f(right)`, further divided by the
/// spectral parameter for Γ ice. Always a Laurent polynomial.
pub fn modified_grid_weight(ring: &Ring, kind: VertexKind, spins: [Spin; 4], charge: i64) -> RingElem {
    let z = kind.spectral(ring);
    let w = grid_weight(ring, kind, spins, charge, Variant::Standard);
    if w.is_zero() {
        return w;
    }
    let a = ring.residue(charge);
    let ice = kind.ice();
    let (left, right) = match ice {
        Ice::Delta => (DecoratedSpin::new(spins[3], a), DecoratedSpin::new(spins[1], ring.residue(a as i64 + spins[1].is_minus() as i64))),
        Ice::Gamma => (DecoratedSpin::new(spins[3], ring.residue(a as i64 + (spins[3] == Spin::Plus) as i64)), DecoratedSpin::new(spins[1], a)),
    };
    let mut out = w * f_factor(ring, ice, left, &z);
    out = out.div_monomial(&f_factor(ring, ice, right, &z)).unwrap();
    if ice == Ice::Gamma {
        out = out.div_monomial(&z).unwrap();
    }
    out
}

/// The scalar each R-vertex type is divided by in the modified weights.
pub fn modified_r_divisor(ring: &Ring, ice: RIce, z1: &RingElem, z2: &RingElem) -> RingElem {
    let n = ring.n as i64;
    match ice {
        RIce::DG => z2.pow(n) - ring.v().pow(n) * z1.pow(n),
        _ => z1.pow(n) - ring.v() * z2.pow(n),
    }
}

/// Modified R-vertex weight, as an exact quotient with the type's fixed divisor.
pub fn modified_r_weight(ring: &Ring, ice: RIce, quad: [DecoratedSpin; 4], z1: &RingElem, z2: &RingElem) -> RingFrac {
    let w = r_weight(ring, ice, quad, z1, z2, Variant::Standard);
    let [nw, ne, se, sw] = quad;
    let gauge_num = f_factor(ring, ice.x(), sw, z1) * f_factor(ring, ice.y(), nw, z2);
    let gauge_den = f_factor(ring, ice.x(), ne, z1) * f_factor(ring, ice.y(), se, z2);
    let num = (w * gauge_num).div_monomial(&gauge_den).unwrap();
    Fraction::new(num, modified_r_divisor(ring, ice, z1, z2))
}

/// Printed entries of the modified Δ/Γ table, keyed by configuration and
/// charge `a`. `c1`/`c2` are only listed for `a ≡ 0`.
pub fn printed_grid_entry(ring: &Ring, ice: Ice, cfg: Config, a: i64, z: &RingElem) -> RingElem {
    let n = ring.n as i64;
    let d = |k: i64| delta(ring, k) as i64;
    let v = ring.v();
    let one = ring.one();
    match (ice, cfg) {
        (Ice::Delta, Config::A1) => one,
        (Ice::Delta, Config::A2) => ring.g(a) * z.pow(n * d(a + 1)),
        (Ice::Delta, Config::B1) => one,
        (Ice::Delta, Config::B2) => z.pow(n * d(a + 1)),
        (Ice::Delta, Config::C1) => (one - v) * z,
        (Ice::Delta, Config::C2) => z.pow(n * d(1) - 1),
        (Ice::Gamma, Config::A1) => z.pow(-n * d(a + 1)),
        (Ice::Gamma, Config::A2) => one,
        (Ice::Gamma, Config::B1) => ring.g(a) * z.pow(-n * d(a + 1)),
        (Ice::Gamma, Config::B2) => one,
        (Ice::Gamma, Config::C1) => one - v,
        (Ice::Gamma, Config::C2) => z.pow(-n * d(1)),
    }
}

/// Printed entries of the modified ΓΓ table, with `x = z2^n / z1^n`.
/// Returns `None` for quads the table does not list.
pub fn printed_gg_entry(ring: &Ring, quad: [DecoratedSpin; 4], z1: &RingElem, z2: &RingElem) -> Option<RingFrac> {
    let n = ring.n as i64;
    let x = Fraction::new(z2.pow(n), z1.pow(n));
    let one = Fraction::from_poly(ring.one());
    let v = Fraction::from_poly(ring.v());
    let neg = |f: &RingFrac| Fraction::new(-&f.num, f.den.clone());
    let sub = |a: &RingFrac, b: &RingFrac| a.add(&neg(b));
    let one_minus_vx = sub(&one, &v.mul(&x));
    let over = |num: RingFrac| num.mul(&one_minus_vx.inv());
    let one_minus_x = sub(&one, &x);
    let one_minus_v = sub(&one, &v);
    let s: String = quad.iter().map(|d| d.spin.to_string()).collect();
    let [nw, ne, se, sw] = quad.map(|d| d.dec);
    let all0 = nw == 0 && ne == 0 && se == 0 && sw == 0;
    let e = match s.as_str() {
        "++++" if nw == ne && ne == se && se == sw => over(sub(&x, &v)),
        "++++" if nw == se && ne == sw => over(Fraction::from_poly(ring.g(nw as i64 - ne as i64)).mul(&one_minus_x)),
        "++++" if nw == ne && se == sw => over(if nw > se { one_minus_v.mul(&x) } else { one_minus_v }),
        "----" if all0 => one,
        "-+-+" if nw == 0 && se == 0 && ne == sw => over(v.mul(&one_minus_x)),
        "+-+-" if ne == 0 && sw == 0 && nw == se => over(one_minus_x),
        "++--" if se == 0 && sw == 0 && nw == ne => over(one_minus_v.mul(&x)),
        "--++" if nw == 0 && ne == 0 && se == sw => over(one_minus_v),
        _ => return None,
    };
    Some(e)
}

pub const TABLE_NAMES: [&str; 5] = ["grid", "bend", "r", "modified-grid", "modified-r"];

fn decorated_spins(ring: &Ring) -> Vec<DecoratedSpin> {
    [Spin::Plus, Spin::Minus].into_iter().flat_map(|s| (0..ring.n).map(move |d| DecoratedSpin::new(s, d))).collect()
}

/// Nonzero entries of a weight table as `(configuration, weight)` text, in
/// a fixed order. Grid and bend tables use `z1`; R-vertex tables `(z1, z2)`.
/// `variant` applies to `grid` and `r` (`gdoubled` or `standard`).
pub fn weight_table(ring: &Ring, name: &str, variant: Variant) -> Result<Vec<(String, String)>, Error> {
    let z1 = ring.z(1);
    let z2 = ring.z(2);
    let variant = if variant == Variant::Modified { Variant::Standard } else { variant };
    let mut out = Vec::new();
    match name {
        "grid" | "modified-grid" => {
            for ice in [Ice::Delta, Ice::Gamma] {
                for cfg in Config::ALL {
                    for a in 0..ring.n as i64 {
                        let kind = VertexKind::new(ice, 1, false);
                        let w = if name == "grid" {
                            grid_weight(ring, kind, cfg.spins(), a, variant)
                        } else {
                            modified_grid_weight(ring, kind, cfg.spins(), a)
                        };
                        if !w.is_zero() {
                            let ice_name = if ice == Ice::Delta { "delta" } else { "gamma" };
                            out.push((format!("{ice_name} {} a={a}", cfg.name()), w.to_string()));
                        }
                    }
                }
            }
        }
        "bend" => {
            let ds = decorated_spins(ring);
            for kind in BendKind::ALL {
                for u in &ds {
                    for l in &ds {
                        let w = bend_weight(ring, kind, *u, *l, &z1);
                        if !w.is_zero() {
                            out.push((format!("{} upper={u} lower={l}", kind.name()), w.to_string()));
                        }
                    }
                }
            }
        }
        "r" | "modified-r" => {
            let ds = decorated_spins(ring);
            for ice in RIce::ALL {
                for nw in &ds {
                    for ne in &ds {
                        for se in &ds {
                            for sw in &ds {
                                let quad = [*nw, *ne, *se, *sw];
                                let label = format!("{} {nw} {ne} {se} {sw}", ice.name());
                                if name == "r" {
                                    let w = r_weight(ring, ice, quad, &z1, &z2, variant);
                                    if !w.is_zero() {
                                        out.push((label, w.to_string()));
                                    }
                                } else {
                                    let w = modified_r_weight(ring, ice, quad, &z1, &z2);
                                    if !w.is_zero() {
                                        out.push((label, w.to_string()));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        _ => return Err(Error::Config(format!("unknown table '{name}' ({})", TABLE_NAMES.join("|")))),
    }
    Ok(out)
}
