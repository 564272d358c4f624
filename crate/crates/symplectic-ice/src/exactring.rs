//! Exact Laurent polynomials in `v`, `z_1..z_r` and the Gauss-sum symbols
//! `g_1..g_{n-1}`, subject to `g_0 = -v` and `g_a g_{n-a} = v`.
//!
//! Everything here is generic over the coefficient type (any signed
//! `num_traits::Num`) and over the field used for specializations. The crate
//! root exports the arbitrary-precision instances.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use crate::Error;

/// Coefficient type of a ring element.
pub trait Coeff:
    Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display + Num + Signed + FromPrimitive + ToPrimitive + Send + Sync
{
}

impl<T> Coeff for T where
    T: Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display + Num + Signed + FromPrimitive + ToPrimitive + Send + Sync
{
}

/// Field used as the target of a specialization.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Num + Signed + Send + Sync {}

impl<T> Field for T where T: Clone + PartialEq + fmt::Debug + fmt::Display + Num + Signed + Send + Sync {}

/// Ring parameters: the (odd) modulus `n` and the number `r` of spectral variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    pub n: u32,
    pub r: usize,
}

impl Ring {
    pub fn new(n: u32, r: usize) -> Result<Ring, Error> {
        if n == 0 || n % 2 == 0 {
            return Err(Error::Config("n must be odd".into()));
        }
        Ok(Ring { n, r })
    }

    /// Residue of `a` in `[0, n)`.
    pub fn residue(&self, a: i64) -> u32 {
        a.rem_euclid(self.n as i64) as u32
    }

    pub fn zero<C: Coeff>(&self) -> Poly<C> {
        Poly { ring: *self, terms: BTreeMap::new() }
    }

    pub fn one<C: Coeff>(&self) -> Poly<C> {
        self.int(1)
    }

    pub fn int<C: Coeff>(&self, k: i64) -> Poly<C> {
        self.term(C::from_i64(k).expect("coefficient"), self.unit_monomial())
    }

    pub fn v<C: Coeff>(&self) -> Poly<C> {
        self.monomial(1, &[], &[])
    }

    /// `z_i`, 1-based.
    pub fn z<C: Coeff>(&self, i: usize) -> Poly<C> {
        self.z_pow(i, 1)
    }

    pub fn z_pow<C: Coeff>(&self, i: usize, e: i32) -> Poly<C> {
        assert!(i >= 1 && i <= self.r, "z index {i} out of range for r={}", self.r);
        let mut z = vec![0; self.r];
        z[i - 1] = e;
        self.term(C::one(), Monomial { v: 0, z, g: vec![0; self.g_len()] })
    }

    /// The Gauss-sum symbol `g(a)`, periodic modulo `n`.
    pub fn g<C: Coeff>(&self, a: i64) -> Poly<C> {
        RawMonomial::new(*self).g(a, 1).normalize()
    }

    /// `v^e · g(a_1)^{k_1} ⋯`, with `z` exponents given by `z` (padded with zeros).
    pub fn monomial<C: Coeff>(&self, v: i32, z: &[i32], g: &[(i64, i32)]) -> Poly<C> {
        let mut raw = RawMonomial::new(*self);
        raw.v = v;
        for (k, &e) in z.iter().enumerate() {
            raw.z[k] = e;
        }
        for &(a, e) in g {
            raw = raw.g(a, e);
        }
        raw.normalize()
    }

    fn g_len(&self) -> usize {
        self.n as usize - 1
    }

    fn unit_monomial(&self) -> Monomial {
        Monomial { v: 0, z: vec![0; self.r], g: vec![0; self.g_len()] }
    }

    fn term<C: Coeff>(&self, c: C, m: Monomial) -> Poly<C> {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { ring: *self, terms }
    }
}

/// A normal-form monomial `v^v z^z g^g`. `g[a-1]` is the exponent of `g_a`;
/// never both `g_a` and `g_{n-a}` are present.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub v: i32,
    pub z: Vec<i32>,
    pub g: Vec<u32>,
}

impl Monomial {
    fn mul(&self, other: &Monomial, n: u32) -> Monomial {
        let mut m = Monomial {
            v: self.v + other.v,
            z: self.z.iter().zip(&other.z).map(|(a, b)| a + b).collect(),
            g: self.g.iter().zip(&other.g).map(|(a, b)| a + b).collect(),
        };
        m.cancel_pairs(n);
        m
    }

    fn cancel_pairs(&mut self, n: u32) {
        let n = n as usize;
        for a in 1..=(n - 1) / 2 {
            let k = self.g[a - 1].min(self.g[n - a - 1]);
            if k > 0 {
                self.g[a - 1] -= k;
                self.g[n - a - 1] -= k;
                self.v += k as i32;
            }
        }
    }
}

/// A monomial before normalization: `g` factors may include `g_0`, both
/// members of a pair, or negative exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawMonomial {
    pub ring: Ring,
    pub sign: bool,
    pub v: i32,
    pub z: Vec<i32>,
    /// Exponent of `g_a` for `a` in `[0, n)`.
    pub g: Vec<i32>,
}

/// One application of a defining relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rewrite {
    /// `g_0 -> -v` (or its inverse for a negative exponent).
    GZero,
    /// `g_a g_{n-a} -> v` for the given `a < n/2`.
    Pair(usize),
    /// `g_a^{-1} -> g_{n-a} v^{-1}`.
    Invert(usize),
}

impl RawMonomial {
    pub fn new(ring: Ring) -> RawMonomial {
        RawMonomial { ring, sign: false, v: 0, z: vec![0; ring.r], g: vec![0; ring.n as usize] }
    }

    pub fn g(mut self, a: i64, e: i32) -> RawMonomial {
        let k = self.ring.residue(a) as usize;
        self.g[k] += e;
        self
    }

    /// Rewrites that currently apply.
    pub fn applicable(&self) -> Vec<Rewrite> {
        let n = self.ring.n as usize;
        let mut out = Vec::new();
        if self.g[0] != 0 {
            out.push(Rewrite::GZero);
        }
        for a in 1..n {
            if self.g[a] < 0 {
                out.push(Rewrite::Invert(a));
            }
        }
        for a in 1..=(n - 1) / 2 {
            if self.g[a] > 0 && self.g[n - a] > 0 {
                out.push(Rewrite::Pair(a));
            }
        }
        out
    }

    pub fn apply(&mut self, rw: Rewrite) {
        let n = self.ring.n as usize;
        match rw {
            Rewrite::GZero => {
                let e = self.g[0].signum();
                self.g[0] -= e;
                self.v += e;
                self.sign ^= true;
            }
            Rewrite::Invert(a) => {
                self.g[a] += 1;
                self.g[n - a] += 1;
                self.v -= 1;
            }
            Rewrite::Pair(a) => {
                self.g[a] -= 1;
                self.g[n - a] -= 1;
                self.v += 1;
            }
        }
    }

    /// Rewrite to exhaustion and return the normal form.
    pub fn normalize<C: Coeff>(mut self) -> Poly<C> {
        let n = self.ring.n as usize;
        let e0 = self.g[0];
        self.g[0] = 0;
        self.v += e0;
        if e0 % 2 != 0 {
            self.sign ^= true;
        }
        for a in 1..n {
            if self.g[a] < 0 {
                let k = -self.g[a];
                self.g[a] = 0;
                self.g[n - a] += k;
                self.v -= k;
            }
        }
        let mut m = Monomial { v: self.v, z: self.z, g: self.g[1..].iter().map(|&e| e as u32).collect() };
        m.cancel_pairs(self.ring.n);
        let c = if self.sign { -C::one() } else { C::one() };
        self.ring.term(c, m)
    }
}

/// An element of the ring: a finite map from normal-form monomials to
/// nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C: Coeff> {
    ring: Ring,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> Poly<C> {
    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, other: &Poly<C>) {
        assert_eq!(self.ring, other.ring, "ring mismatch");
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, k: &C) -> Poly<C> {
        if k.is_zero() {
            return self.ring.zero();
        }
        Poly { ring: self.ring, terms: self.terms.iter().map(|(m, c)| (m.clone(), c.clone() * k.clone())).collect() }
    }

    /// Integer power; negative exponents are allowed for single terms only.
    pub fn pow(&self, e: i64) -> Poly<C> {
        if e < 0 {
            return self.inverse_monomial().expect("only monomials are invertible").pow(-e);
        }
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Inverse of `±monomial`; `None` for anything else.
    pub fn inverse_monomial(&self) -> Option<Poly<C>> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        if !c.is_one() && !(-c.clone()).is_one() {
            return None;
        }
        let mut raw = RawMonomial::new(self.ring);
        raw.sign = c.is_negative();
        raw.v = -m.v;
        raw.z = m.z.iter().map(|e| -e).collect();
        for (k, &e) in m.g.iter().enumerate() {
            raw.g[k + 1] = -(e as i32);
        }
        Some(raw.normalize())
    }

    /// Exact division by a `±monomial`.
    pub fn div_monomial(&self, d: &Poly<C>) -> Option<Poly<C>> {
        Some(self * &d.inverse_monomial()?)
    }

    /// Apply a map on monomials that is a ring endomorphism (returns a raw monomial).
    fn map_monomials(&self, f: impl Fn(&Monomial) -> RawMonomial) -> Poly<C> {
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            let p: Poly<C> = f(m).normalize();
            for (m2, c2) in p.terms {
                out.add_term(m2, c2 * c.clone());
            }
        }
        out
    }

    fn raw_of(&self, m: &Monomial) -> RawMonomial {
        let mut raw = RawMonomial::new(self.ring);
        raw.v = m.v;
        raw.z = m.z.clone();
        for (k, &e) in m.g.iter().enumerate() {
            raw.g[k + 1] = e as i32;
        }
        raw
    }

    /// The endomorphism `g_a -> g_{2a}` (it respects both defining relations).
    pub fn double_g(&self) -> Poly<C> {
        let n = self.ring.n as i64;
        self.map_monomials(|m| {
            let mut raw = RawMonomial::new(self.ring);
            raw.v = m.v;
            raw.z = m.z.clone();
            for (k, &e) in m.g.iter().enumerate() {
                let a = (2 * (k as i64 + 1)).rem_euclid(n) as usize;
                raw.g[a] += e as i32;
            }
            raw
        })
    }

    /// Substitute `z_i -> z_i^{-1}`.
    pub fn invert_z(&self, i: usize) -> Poly<C> {
        self.map_monomials(|m| {
            let mut raw = self.raw_of(m);
            raw.z[i - 1] = -raw.z[i - 1];
            raw
        })
    }

    /// Substitute `z_i <-> z_j`.
    pub fn swap_z(&self, i: usize, j: usize) -> Poly<C> {
        self.map_monomials(|m| {
            let mut raw = self.raw_of(m);
            raw.z.swap(i - 1, j - 1);
            raw
        })
    }

    /// Move into a ring with the same `n` and `r` spectral variables, sending
    /// `z_k` to `z_{map[k-1]}`.
    pub fn embed(&self, target: Ring, map: &[usize]) -> Poly<C> {
        assert_eq!(target.n, self.ring.n);
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let mut z = vec![0; target.r];
            for (k, &e) in m.z.iter().enumerate() {
                z[map[k] - 1] += e;
            }
            out.add_term(Monomial { v: m.v, z, g: m.g.clone() }, c.clone());
        }
        out
    }

    /// Total exponent of `z_i` if every term has the same one.
    pub fn z_degree(&self, i: usize) -> Option<i32> {
        let mut it = self.terms.keys().map(|m| m.z[i - 1]);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn specialize<Q>(&self, s: &Specialization<Q>) -> Q
    where
        Q: Field + From<C>,
    {
        assert_eq!(s.n, self.ring.n, "specialization has a different n");
        assert!(s.z.len() >= self.ring.r, "specialization has too few z values");
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut t = Q::from(c.clone()) * ipow(&s.v, m.v);
            for (k, &e) in m.z.iter().enumerate() {
                t = t * ipow(&s.z[k], e);
            }
            for (k, &e) in m.g.iter().enumerate() {
                t = t * ipow(&s.g[k + 1], e as i32);
            }
            acc = acc + t;
        }
        acc
    }

    /// JSON array-of-monomials form.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    let c = match c.to_i64() {
                        Some(k) => Value::from(k),
                        None => Value::from(c.to_string()),
                    };
                    serde_json::json!({ "c": c, "v": m.v, "z": m.z, "g": m.g })
                })
                .collect(),
        )
    }

    pub fn from_json(ring: Ring, value: &Value) -> Result<Poly<C>, Error> {
        let bad = |what: &str| Error::Parse(format!("bad polynomial JSON: {what}"));
        let arr = value.as_array().ok_or_else(|| bad("expected an array"))?;
        let mut out = ring.zero();
        for t in arr {
            let c = match &t["c"] {
                Value::Number(k) => C::from_str_radix(&k.to_string(), 10).map_err(|_| bad("coefficient"))?,
                Value::String(s) => C::from_str_radix(s, 10).map_err(|_| bad("coefficient"))?,
                _ => return Err(bad("coefficient")),
            };
            let v = t["v"].as_i64().ok_or_else(|| bad("v"))? as i32;
            let ints = |key: &str| -> Result<Vec<i64>, Error> {
                t[key].as_array().ok_or_else(|| bad(key))?.iter().map(|x| x.as_i64().ok_or_else(|| bad(key))).collect()
            };
            let z = ints("z")?;
            let g = ints("g")?;
            if z.len() != ring.r || g.len() != ring.g_len() || g.iter().any(|&e| e < 0) {
                return Err(bad("exponent vector length"));
            }
            let mut raw = RawMonomial::new(ring);
            raw.v = v;
            raw.z = z.iter().map(|&e| e as i32).collect();
            for (k, &e) in g.iter().enumerate() {
                raw.g[k + 1] = e as i32;
            }
            let p: Poly<C> = raw.normalize();
            out = out + p.scale(&c);
        }
        Ok(out)
    }

    /// Parse the canonical text form, e.g. `z1^-1 + g2*z1` or `-1*v^2*z1^-3*g2`.
    pub fn parse(ring: Ring, s: &str) -> Result<Poly<C>, Error> {
        let bad = |what: &str| Error::Parse(format!("bad polynomial '{s}': {what}"));
        let s = s.trim();
        if s == "0" {
            return Ok(ring.zero());
        }
        let mut out = ring.zero();
        for term in s.split(" + ") {
            let mut coeff = C::one();
            let mut raw = RawMonomial::new(ring);
            for (k, f) in term.trim().split('*').enumerate() {
                let (base, exp) = match f.split_once('^') {
                    Some((b, e)) => (b, e.parse::<i32>().map_err(|_| bad("exponent"))?),
                    None => (f, 1),
                };
                if k == 0 && base.starts_with(|ch: char| ch == '-' || ch.is_ascii_digit()) {
                    coeff = C::from_str_radix(base, 10).map_err(|_| bad("coefficient"))?;
                    continue;
                }
                if base == "v" {
                    raw.v += exp;
                } else if let Some(i) = base.strip_prefix('z') {
                    let i: usize = i.parse().map_err(|_| bad("z index"))?;
                    if i == 0 || i > ring.r {
                        return Err(bad("z index"));
                    }
                    raw.z[i - 1] += exp;
                } else if let Some(a) = base.strip_prefix('g') {
                    let a: i64 = a.parse().map_err(|_| bad("g index"))?;
                    raw = raw.g(a, exp);
                } else {
                    return Err(bad("unknown factor"));
                }
            }
            let p: Poly<C> = raw.normalize();
            out = out + p.scale(&coeff);
        }
        Ok(out)
    }
}

fn ipow<Q: Field>(x: &Q, e: i32) -> Q {
    let p = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        Q::one() / p
    } else {
        p
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    /// Terms in ascending monomial order joined by ` + `; factors printed as
    /// coefficient, `v`, `g`, then `z`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut parts: Vec<String> = Vec::new();
            if !c.is_one() {
                parts.push(c.to_string());
            }
            let pw = |name: String, e: i64| if e == 1 { name } else { format!("{name}^{e}") };
            if m.v != 0 {
                parts.push(pw("v".into(), m.v as i64));
            }
            for (k, &e) in m.g.iter().enumerate() {
                if e != 0 {
                    parts.push(pw(format!("g{}", k + 1), e as i64));
                }
            }
            for (k, &e) in m.z.iter().enumerate() {
                if e != 0 {
                    parts.push(pw(format!("z{}", k + 1), e as i64));
                }
            }
            if parts.is_empty() {
                parts.push("1".into());
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a, C: Coeff> Add<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        self.check(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a, C: Coeff> Sub<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        self.check(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a, C: Coeff> Mul<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        self.check(rhs);
        let mut out = self.ring.zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2, self.ring.n), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly { ring: self.ring, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl<C: Coeff> $tr<Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $f(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$f(&rhs)
            }
        }
        impl<'a, C: Coeff> $tr<&'a Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $f(self, rhs: &Poly<C>) -> Poly<C> {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}

/// A quotient `num / den` of ring elements, compared by cross-multiplication.
#[derive(Clone, Debug)]
pub struct Fraction<C: Coeff> {
    pub num: Poly<C>,
    pub den: Poly<C>,
}

impl<C: Coeff> Fraction<C> {
    pub fn new(num: Poly<C>, den: Poly<C>) -> Fraction<C> {
        assert!(!den.is_zero(), "zero denominator");
        Fraction { num, den }
    }

    pub fn from_poly(p: Poly<C>) -> Fraction<C> {
        let den = p.ring().one();
        Fraction { num: p, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Sum; keeps the denominator when both sides share it.
    pub fn add(&self, o: &Fraction<C>) -> Fraction<C> {
        if self.den == o.den {
            return Fraction { num: &self.num + &o.num, den: self.den.clone() };
        }
        Fraction { num: &(&self.num * &o.den) + &(&o.num * &self.den), den: &self.den * &o.den }
    }

    pub fn mul(&self, o: &Fraction<C>) -> Fraction<C> {
        Fraction { num: &self.num * &o.num, den: &self.den * &o.den }
    }

    pub fn mul_poly(&self, p: &Poly<C>) -> Fraction<C> {
        Fraction { num: &self.num * p, den: self.den.clone() }
    }

    pub fn div_poly(&self, p: &Poly<C>) -> Fraction<C> {
        Fraction::new(self.num.clone(), &self.den * p)
    }

    pub fn inv(&self) -> Fraction<C> {
        Fraction::new(self.den.clone(), self.num.clone())
    }

    /// Exact polynomial value, when the denominator is a `±monomial`.
    pub fn as_poly(&self) -> Option<Poly<C>> {
        self.num.div_monomial(&self.den)
    }
}

impl<C: Coeff> PartialEq for Fraction<C> {
    fn eq(&self, o: &Fraction<C>) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }
}

impl<C: Coeff> fmt::Display for Fraction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == self.den.ring().one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// A point at which ring elements can be evaluated.
#[derive(Clone, Debug, PartialEq)]
pub struct Specialization<Q: Field> {
    pub n: u32,
    pub v: Q,
    pub z: Vec<Q>,
    /// `g[a]` for `a` in `[0, n)`; `g[0] = -v`.
    pub g: Vec<Q>,
}

impl<Q: Field> Specialization<Q> {
    /// `g_free[k]` is the value of `g_{k+1}` for `k+1 < n/2`; the rest follow
    /// from `g_a g_{n-a} = v`.
    pub fn new(n: u32, v: Q, z: Vec<Q>, g_free: Vec<Q>) -> Result<Specialization<Q>, Error> {
        if n % 2 == 0 {
            return Err(Error::Config("n must be odd".into()));
        }
        if v.is_zero() || z.iter().any(|x| x.is_zero()) || g_free.iter().any(|x| x.is_zero()) {
            return Err(Error::Config("specialized values must be nonzero".into()));
        }
        let n_us = n as usize;
        if g_free.len() != (n_us - 1) / 2 {
            return Err(Error::Config("wrong number of free Gauss values".into()));
        }
        let mut g = vec![-v.clone(); n_us];
        for (k, x) in g_free.into_iter().enumerate() {
            let a = k + 1;
            g[n_us - a] = v.clone() / x.clone();
            g[a] = x;
        }
        Ok(Specialization { n, v, z, g })
    }

    pub fn check(&self) -> bool {
        let n = self.n as usize;
        self.g[0] == -self.v.clone()
            && (1..n).all(|a| self.g[a].clone() * self.g[n - a].clone() == self.v)
            && self.z.iter().all(|x| !x.is_zero())
    }
}

impl<Q: Field + FromPrimitive> Specialization<Q> {
    /// Deterministic pseudo-random specialization with small rational values.
    pub fn random(seed: u64, n: u32, r: usize) -> Specialization<Q> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rat = |rng: &mut ChaCha8Rng| loop {
            let p: i64 = rng.gen_range(-40..=40);
            let q: i64 = rng.gen_range(1..=40);
            if p != 0 && p.abs() != q {
                return Q::from_i64(p).unwrap() / Q::from_i64(q).unwrap();
            }
        };
        let v = rat(&mut rng);
        let z = (0..r).map(|_| rat(&mut rng)).collect();
        let g = (0..(n as usize - 1) / 2).map(|_| rat(&mut rng)).collect();
        Specialization::new(n, v, z, g).expect("valid by construction")
    }
}
