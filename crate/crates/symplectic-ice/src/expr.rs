//! A small expression language for fixture files: integer arithmetic on
//! decoration parameters, conditions, and ring-valued weights.
//!
//! ```text
//! (1-v) g(a) z1^(n-a+1) z2^a        juxtaposition multiplies
//! if(a > c, v^n z1^n, z2^n)
//! (a+b-1)%n == 0 && a != c
//! ```
//!
//! `v`, `z1`, `z2`, ... are ring generators; `g(k)` is the Gauss-sum symbol,
//! `up(k)` the representative of `k` in `[1, n]`. Any other identifier is
//! an integer looked up in the environment.

use std::collections::BTreeMap;

use crate::exactring::{Coeff, Poly};
use crate::{Error, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
    Rem,
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
    And,
    Or,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(i64),
    Var(String),
    Neg(Box<Expr>),
    Not(Box<Expr>),
    Bin(Op, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Call(String, Vec<Expr>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Sym(&'static str),
}

fn tokenize(s: &str) -> Result<Vec<Tok>, Error> {
    const SYMS: [&str; 18] = ["&&", "||", "==", "!=", "<=", ">=", "<", ">", "!", "+", "-", "*", "/", "%", "^", "(", ")", ","];
    let mut out = Vec::new();
    let b = s.as_bytes();
    let mut i = 0;
    'outer: while i < b.len() {
        let c = b[i] as char;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Tok::Num(s[st..i].parse().map_err(|_| Error::Parse(format!("bad number in {s:?}")))?));
        } else if c.is_ascii_alphabetic() {
            let st = i;
            while i < b.len() && b[i].is_ascii_alphabetic() {
                i += 1;
            }
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Tok::Ident(s[st..i].to_string()));
        } else {
            for sym in SYMS {
                if s[i..].starts_with(sym) {
                    out.push(Tok::Sym(sym));
                    i += sym.len();
                    continue 'outer;
                }
            }
            return Err(Error::Parse(format!("unexpected {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, sym: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Sym(s)) if *s == sym) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, sym: &str) -> Result<(), Error> {
        if self.eat(sym) {
            Ok(())
        } else {
            Err(Error::Parse(format!("expected {sym:?} at token {}", self.pos)))
        }
    }

    fn binary(&mut self, ops: &[(&str, Op)], next: fn(&mut Parser) -> Result<Expr, Error>) -> Result<Expr, Error> {
        let mut lhs = next(self)?;
        'scan: loop {
            for (sym, op) in ops {
                if self.eat(sym) {
                    let rhs = next(self)?;
                    lhs = Expr::Bin(*op, Box::new(lhs), Box::new(rhs));
                    continue 'scan;
                }
            }
            return Ok(lhs);
        }
    }

    fn or(&mut self) -> Result<Expr, Error> {
        self.binary(&[("||", Op::Or)], Parser::and)
    }

    fn and(&mut self) -> Result<Expr, Error> {
        self.binary(&[("&&", Op::And)], Parser::not)
    }

    fn not(&mut self) -> Result<Expr, Error> {
        if self.eat("!") {
            return Ok(Expr::Not(Box::new(self.not()?)));
        }
        self.cmp()
    }

    fn cmp(&mut self) -> Result<Expr, Error> {
        let ops = [("==", Op::Eq), ("!=", Op::Ne), ("<=", Op::Le), (">=", Op::Ge), ("<", Op::Lt), (">", Op::Gt)];
        let lhs = self.sum()?;
        for (sym, op) in ops {
            if self.eat(sym) {
                let rhs = self.sum()?;
                return Ok(Expr::Bin(op, Box::new(lhs), Box::new(rhs)));
            }
        }
        Ok(lhs)
    }

    fn sum(&mut self) -> Result<Expr, Error> {
        self.binary(&[("+", Op::Add), ("-", Op::Sub)], Parser::product)
    }

    fn starts_primary(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Sym("(")))
    }

    fn product(&mut self) -> Result<Expr, Error> {
        let mut lhs = self.unary()?;
        loop {
            let op = if self.eat("*") {
                Op::Mul
            } else if self.eat("/") {
                Op::Div
            } else if self.eat("%") {
                Op::Rem
            } else if self.starts_primary() {
                Op::Mul
            } else {
                return Ok(lhs);
            };
            let rhs = self.unary()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Expr, Error> {
        if self.eat("-") {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, Error> {
        let base = self.primary()?;
        if self.eat("^") {
            let exp = if self.eat("-") { Expr::Neg(Box::new(self.primary()?)) } else { self.primary()? };
            return Ok(Expr::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr, Error> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(k)) => {
                self.pos += 1;
                Ok(Expr::Int(k))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if matches!(name.as_str(), "g" | "up" | "if") {
                    self.expect("(")?;
                    let mut args = vec![self.or()?];
                    while self.eat(",") {
                        args.push(self.or()?);
                    }
                    self.expect(")")?;
                    Ok(Expr::Call(name, args))
                } else {
                    Ok(Expr::Var(name))
                }
            }
            Some(Tok::Sym("(")) => {
                self.pos += 1;
                let e = self.or()?;
                self.expect(")")?;
                Ok(e)
            }
            t => Err(Error::Parse(format!("unexpected {t:?} at token {}", self.pos))),
        }
    }
}

pub fn parse(s: &str) -> Result<Expr, Error> {
    let mut p = Parser { toks: tokenize(s)?, pos: 0 };
    let e = p.or()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(e)
}

impl Expr {
    /// Replace every occurrence of the variable `name` by `by`.
    pub fn substitute(&self, name: &str, by: &Expr) -> Expr {
        let sub = |e: &Expr| Box::new(e.substitute(name, by));
        match self {
            Expr::Var(s) if s == name => by.clone(),
            Expr::Int(_) | Expr::Var(_) => self.clone(),
            Expr::Neg(e) => Expr::Neg(sub(e)),
            Expr::Not(e) => Expr::Not(sub(e)),
            Expr::Bin(op, a, b) => Expr::Bin(*op, sub(a), sub(b)),
            Expr::Pow(a, b) => Expr::Pow(sub(a), sub(b)),
            Expr::Call(f, args) => Expr::Call(f.clone(), args.iter().map(|a| a.substitute(name, by)).collect()),
        }
    }

    /// Integer variables the expression mentions (ring generators excluded).
    pub fn variables(&self, out: &mut Vec<String>) {
        match self {
            Expr::Int(_) => {}
            Expr::Var(s) => {
                if !is_generator(s) && !out.contains(s) {
                    out.push(s.clone());
                }
            }
            Expr::Neg(e) | Expr::Not(e) => e.variables(out),
            Expr::Bin(_, a, b) | Expr::Pow(a, b) => {
                a.variables(out);
                b.variables(out);
            }
            Expr::Call(_, args) => args.iter().for_each(|a| a.variables(out)),
        }
    }
}

fn is_generator(s: &str) -> bool {
    s == "v" || (s.len() > 1 && s.starts_with('z') && s[1..].chars().all(|c| c.is_ascii_digit()))
}

/// Integer bindings plus the ring; `n` is always bound to the ring's `n`.
#[derive(Clone, Debug)]
pub struct Env {
    pub ring: Ring,
    pub vars: BTreeMap<String, i64>,
}

impl Env {
    pub fn new(ring: Ring) -> Env {
        let mut vars = BTreeMap::new();
        vars.insert("n".to_string(), ring.n as i64);
        Env { ring, vars }
    }

    pub fn set(&mut self, name: &str, value: i64) {
        self.vars.insert(name.to_string(), value);
    }

    pub fn int(&self, e: &Expr) -> Result<i64, Error> {
        match self.eval::<num_bigint::BigInt>(e)? {
            Value::Int(k) => Ok(k),
            _ => Err(Error::Parse(format!("expected an integer: {e:?}"))),
        }
    }

    pub fn truth(&self, e: &Expr) -> Result<bool, Error> {
        match self.eval::<num_bigint::BigInt>(e)? {
            Value::Bool(b) => Ok(b),
            _ => Err(Error::Parse(format!("expected a condition: {e:?}"))),
        }
    }

    pub fn ring_value<C: Coeff>(&self, e: &Expr) -> Result<Poly<C>, Error> {
        match self.eval(e)? {
            Value::Int(k) => Ok(self.ring.int(k)),
            Value::Ring(p) => Ok(p),
            Value::Bool(_) => Err(Error::Parse("expected a ring element, got a condition".into())),
        }
    }

    fn eval<C: Coeff>(&self, e: &Expr) -> Result<Value<C>, Error> {
        let ring = self.ring;
        Ok(match e {
            Expr::Int(k) => Value::Int(*k),
            Expr::Var(s) if s == "v" => Value::Ring(ring.v()),
            Expr::Var(s) if is_generator(s) => {
                let i: usize = s[1..].parse().unwrap();
                if i == 0 || i > ring.r {
                    return Err(Error::Parse(format!("{s} is not a generator of this ring")));
                }
                Value::Ring(ring.z(i))
            }
            Expr::Var(s) => Value::Int(*self.vars.get(s).ok_or_else(|| Error::Parse(format!("unbound variable {s}")))?),
            Expr::Neg(a) => match self.eval::<C>(a)? {
                Value::Int(k) => Value::Int(-k),
                Value::Ring(p) => Value::Ring(-p),
                Value::Bool(_) => return Err(Error::Parse("negated condition".into())),
            },
            Expr::Not(a) => Value::Bool(!self.truth(a)?),
            Expr::Pow(a, b) => {
                let k = self.int(b)?;
                match self.eval::<C>(a)? {
                    Value::Int(x) if k >= 0 => Value::Int(x.pow(k as u32)),
                    Value::Ring(p) if k < 0 && p.inverse_monomial().is_none() => {
                        return Err(Error::Parse(format!("cannot invert {p}")));
                    }
                    Value::Ring(p) => Value::Ring(p.pow(k)),
                    v => Value::Ring(self.promote(v)?.pow(k)),
                }
            }
            Expr::Call(f, args) => match (f.as_str(), args.as_slice()) {
                ("g", [a]) => Value::Ring(ring.g(self.int(a)?)),
                ("up", [a]) => {
                    let r = ring.residue(self.int(a)?) as i64;
                    Value::Int(if r == 0 { ring.n as i64 } else { r })
                }
                ("if", [c, a, b]) => {
                    if self.truth(c)? {
                        self.eval(a)?
                    } else {
                        self.eval(b)?
                    }
                }
                _ => return Err(Error::Parse(format!("bad call {f} with {} arguments", args.len()))),
            },
            Expr::Bin(op, a, b) => {
                if matches!(op, Op::And | Op::Or) {
                    let x = self.truth(a)?;
                    return Ok(Value::Bool(if *op == Op::And { x && self.truth(b)? } else { x || self.truth(b)? }));
                }
                let (x, y) = (self.eval::<C>(a)?, self.eval::<C>(b)?);
                match (x, y) {
                    (Value::Int(x), Value::Int(y)) => match op {
                        Op::Add => Value::Int(x + y),
                        Op::Sub => Value::Int(x - y),
                        Op::Mul => Value::Int(x * y),
                        Op::Div if y != 0 && x % y == 0 => Value::Int(x / y),
                        Op::Rem if y > 0 => Value::Int(x.rem_euclid(y)),
                        Op::Eq => Value::Bool(x == y),
                        Op::Ne => Value::Bool(x != y),
                        Op::Lt => Value::Bool(x < y),
                        Op::Le => Value::Bool(x <= y),
                        Op::Gt => Value::Bool(x > y),
                        Op::Ge => Value::Bool(x >= y),
                        _ => return Err(Error::Parse(format!("bad integer operation {op:?} on {x}, {y}"))),
                    },
                    (x, y) => {
                        let (p, q) = (self.promote(x)?, self.promote(y)?);
                        match op {
                            Op::Add => Value::Ring(&p + &q),
                            Op::Sub => Value::Ring(&p - &q),
                            Op::Mul => Value::Ring(&p * &q),
                            Op::Div => Value::Ring(
                                p.div_monomial(&q).ok_or_else(|| Error::Parse(format!("cannot divide by {q}")))?,
                            ),
                            Op::Eq => Value::Bool(p == q),
                            Op::Ne => Value::Bool(p != q),
                            _ => return Err(Error::Parse(format!("bad ring operation {op:?}"))),
                        }
                    }
                }
            }
        })
    }

    fn promote<C: Coeff>(&self, v: Value<C>) -> Result<Poly<C>, Error> {
        match v {
            Value::Int(k) => Ok(self.ring.int(k)),
            Value::Ring(p) => Ok(p),
            Value::Bool(_) => Err(Error::Parse("condition used as a value".into())),
        }
    }
}

enum Value<C: Coeff> {
    Int(i64),
    Ring(Poly<C>),
    Bool(bool),
}
