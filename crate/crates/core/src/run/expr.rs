//! Complex-valued expressions of `z` used for initial data.
//!
//! ```text
//! expr    = term { ("+" | "-") term }
//! term    = unary { ("*" | "/" | <juxtaposition>) unary }
//! unary   = ("-" | "+") unary | power
//! power   = primary [ "^" unary ]
//! primary = number | name | name "(" expr ")" | "(" expr ")"
//! ```
//!
//! Names: `z`, `zbar`, `x`, `y`, `i`, `pi`, `e`. Functions: `exp`, `log`,
//! `sqrt`, `sin`, `cos`, `tan`, `sinh`, `cosh`, `tanh`, `conj`, `re`, `im`, `abs`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq)]
pub enum ExprError {
    #[error("unexpected character {0:?} at offset {1}")]
    BadChar(char, usize),
    #[error("unexpected end of expression")]
    Eof,
    #[error("unexpected token {0} at offset {1}")]
    Unexpected(String, usize),
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("unknown function {0:?}")]
    UnknownFunction(String),
    #[error("bad number {0:?}")]
    BadNumber(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Func {
    Exp,
    Log,
    Sqrt,
    Sin,
    Cos,
    Tan,
    Sinh,
    Cosh,
    Tanh,
    Conj,
    Re,
    Im,
    Abs,
}

impl Func {
    fn lookup(name: &str) -> Option<Self> {
        Some(match name {
            "exp" => Self::Exp,
            "log" | "ln" => Self::Log,
            "sqrt" => Self::Sqrt,
            "sin" => Self::Sin,
            "cos" => Self::Cos,
            "tan" => Self::Tan,
            "sinh" => Self::Sinh,
            "cosh" => Self::Cosh,
            "tanh" => Self::Tanh,
            "conj" => Self::Conj,
            "re" => Self::Re,
            "im" => Self::Im,
            "abs" => Self::Abs,
            _ => return None,
        })
    }

    fn apply(self, v: Complex64) -> Complex64 {
        match self {
            Self::Exp => v.exp(),
            Self::Log => v.ln(),
            Self::Sqrt => v.sqrt(),
            Self::Sin => v.sin(),
            Self::Cos => v.cos(),
            Self::Tan => v.tan(),
            Self::Sinh => v.sinh(),
            Self::Cosh => v.cosh(),
            Self::Tanh => v.tanh(),
            Self::Conj => v.conj(),
            Self::Re => Complex64::new(v.re, 0.0),
            Self::Im => Complex64::new(v.im, 0.0),
            Self::Abs => Complex64::new(v.norm(), 0.0),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Var {
    Z,
    Zbar,
    X,
    Y,
}

#[derive(Clone, Debug, PartialEq)]
enum Node {
    Const(Complex64),
    Var(Var),
    Neg(Box<Node>),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Div(Box<Node>, Box<Node>),
    Pow(Box<Node>, Box<Node>),
    Call(Func, Box<Node>),
}

impl Node {
    fn eval(&self, z: Complex64) -> Complex64 {
        match self {
            Node::Const(c) => *c,
            Node::Var(Var::Z) => z,
            Node::Var(Var::Zbar) => z.conj(),
            Node::Var(Var::X) => Complex64::new(z.re, 0.0),
            Node::Var(Var::Y) => Complex64::new(z.im, 0.0),
            Node::Neg(a) => -a.eval(z),
            Node::Add(a, b) => a.eval(z) + b.eval(z),
            Node::Sub(a, b) => a.eval(z) - b.eval(z),
            Node::Mul(a, b) => a.eval(z) * b.eval(z),
            Node::Div(a, b) => a.eval(z) / b.eval(z),
            Node::Pow(a, b) => {
                let (base, ex) = (a.eval(z), b.eval(z));
                if ex.im == 0.0 && ex.re.fract() == 0.0 && ex.re.abs() <= i32::MAX as f64 {
                    base.powi(ex.re as i32)
                } else {
                    base.powc(ex)
                }
            }
            Node::Call(f, a) => f.apply(a.eval(z)),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(f64),
    Name(String),
    Op(char),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(v) => write!(f, "{v}"),
            Tok::Name(n) => write!(f, "{n:?}"),
            Tok::Op(c) => write!(f, "{c:?}"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let bytes: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < bytes.len() {
        let ch = bytes[k];
        if ch.is_whitespace() {
            k += 1;
        } else if ch.is_ascii_digit() || ch == '.' {
            let start = k;
            while k < bytes.len() && (bytes[k].is_ascii_digit() || bytes[k] == '.') {
                k += 1;
            }
            // exponent, only when followed by a digit or sign+digit
            if k < bytes.len() && (bytes[k] == 'e' || bytes[k] == 'E') {
                let mut j = k + 1;
                if j < bytes.len() && (bytes[j] == '+' || bytes[j] == '-') {
                    j += 1;
                }
                if j < bytes.len() && bytes[j].is_ascii_digit() {
                    k = j;
                    while k < bytes.len() && bytes[k].is_ascii_digit() {
                        k += 1;
                    }
                }
            }
            let text: String = bytes[start..k].iter().collect();
            let v = text.parse::<f64>().map_err(|_| ExprError::BadNumber(text.clone()))?;
            out.push((Tok::Num(v), start));
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let start = k;
            while k < bytes.len() && (bytes[k].is_ascii_alphanumeric() || bytes[k] == '_') {
                k += 1;
            }
            out.push((Tok::Name(bytes[start..k].iter().collect()), start));
        } else if "+-*/^()".contains(ch) {
            out.push((Tok::Op(ch), k));
            k += 1;
        } else {
            return Err(ExprError::BadChar(ch, k));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn next(&mut self) -> Result<(Tok, usize), ExprError> {
        let t = self.toks.get(self.pos).cloned().ok_or(ExprError::Eof)?;
        self.pos += 1;
        Ok(t)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, op: char) -> Result<(), ExprError> {
        let (t, at) = self.next()?;
        if t == Tok::Op(op) {
            Ok(())
        } else {
            Err(ExprError::Unexpected(t.to_string(), at))
        }
    }

    fn expr(&mut self) -> Result<Node, ExprError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Node::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Node::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Node, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Node::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Node::Div(Box::new(lhs), Box::new(self.unary()?));
            } else if matches!(self.peek(), Some(Tok::Num(_) | Tok::Name(_) | Tok::Op('('))) {
                lhs = Node::Mul(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Node, ExprError> {
        if self.eat('-') {
            Ok(Node::Neg(Box::new(self.unary()?)))
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Node, ExprError> {
        let base = self.primary()?;
        if self.eat('^') {
            Ok(Node::Pow(Box::new(base), Box::new(self.unary()?)))
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<Node, ExprError> {
        let (t, at) = self.next()?;
        match t {
            Tok::Num(v) => Ok(Node::Const(Complex64::new(v, 0.0))),
            Tok::Op('(') => {
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Tok::Name(name) => {
                if self.eat('(') {
                    let f = Func::lookup(&name).ok_or_else(|| ExprError::UnknownFunction(name.clone()))?;
                    let arg = self.expr()?;
                    self.expect(')')?;
                    return Ok(Node::Call(f, Box::new(arg)));
                }
                Ok(match name.as_str() {
                    "z" => Node::Var(Var::Z),
                    "zbar" => Node::Var(Var::Zbar),
                    "x" => Node::Var(Var::X),
                    "y" => Node::Var(Var::Y),
                    "i" => Node::Const(Complex64::i()),
                    "pi" => Node::Const(Complex64::new(std::f64::consts::PI, 0.0)),
                    "e" => Node::Const(Complex64::new(std::f64::consts::E, 0.0)),
                    _ => return Err(ExprError::UnknownName(name)),
                })
            }
            Tok::Op(_) => Err(ExprError::Unexpected(t.to_string(), at)),
        }
    }
}

/// A parsed expression, evaluated pointwise in `z = x + i y`.
#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    source: String,
    root: Node,
}

impl Expr {
    pub fn parse(src: &str) -> Result<Self, ExprError> {
        let mut p = Parser { toks: lex(src)?, pos: 0 };
        let root = p.expr()?;
        if let Some((t, at)) = p.toks.get(p.pos) {
            return Err(ExprError::Unexpected(t.to_string(), *at));
        }
        Ok(Self { source: src.to_string(), root })
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.root.eval(z)
    }

    pub fn source(&self) -> &str {
        &self.source
    }
}

impl FromStr for Expr {
    type Err = ExprError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}
