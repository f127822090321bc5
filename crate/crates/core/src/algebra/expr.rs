//! Parser for polynomial and rational expressions such as `2*(1+q2)/(1-q2)`.
//!
//! Denominators must be products of powers of polynomials that do not vanish at the origin.
//! A `/` binds the whole `*`-chain after it, so `a / (1-q2)^1*(1-q3)^1` has two denominator factors.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::monomial::MultiIndex;
use super::poly::Poly;
use super::ratfunc::RationalFunction;
use super::scalar::Scalar;
use crate::error::ParseError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>, ParseError> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < cs.len() {
        let c = cs[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < cs.len() && cs[k].is_ascii_digit() {
                k += 1;
            }
            let text: String = cs[start..k].iter().collect();
            out.push(Tok::Num(text.parse().unwrap()));
        } else if c.is_alphabetic() {
            let start = k;
            while k < cs.len() && (cs[k].is_alphanumeric() || cs[k] == '_') {
                k += 1;
            }
            out.push(Tok::Ident(cs[start..k].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            k += 1;
        } else {
            return Err(ParseError::new(format!("unexpected character `{c}` in `{s}`")));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
enum Ast {
    Const(Scalar),
    Var(usize),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Div(Box<Ast>, Box<Ast>),
    Neg(Box<Ast>),
    Pow(Box<Ast>, u32),
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Ast::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                // `a / b*c` divides by the whole product, as in the serialized form
                let mut den = self.unary()?;
                while self.eat('*') {
                    den = Ast::Mul(Box::new(den), Box::new(self.unary()?));
                }
                lhs = Ast::Div(Box::new(lhs), Box::new(den));
            } else if matches!(self.peek(), Some(Tok::Op('(')) | Some(Tok::Ident(_)) | Some(Tok::Num(_))) {
                lhs = Ast::Mul(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Ast, ParseError> {
        if self.eat('-') {
            return Ok(Ast::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Ast, ParseError> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| ParseError::new("exponent too large"))?;
                    Ok(Ast::Pow(Box::new(base), e))
                }
                other => Err(ParseError::new(format!("expected exponent, found {other:?}"))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Ast, ParseError> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Ast::Const(Scalar::real(BigRational::from_integer(n))))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(k) = self.names.iter().position(|v| *v == name) {
                    Ok(Ast::Var(k))
                } else if name == "i" {
                    Ok(Ast::Const(Scalar::i()))
                } else {
                    Err(ParseError::new(format!("unknown variable `{name}`")))
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(ParseError::new("missing `)`"));
                }
                Ok(e)
            }
            other => Err(ParseError::new(format!("unexpected token {other:?}"))),
        }
    }
}

fn eval(ast: &Ast, n: usize) -> Result<RationalFunction, ParseError> {
    Ok(match ast {
        Ast::Const(c) => RationalFunction::constant(n, c.clone()),
        Ast::Var(k) => RationalFunction::from_poly(Poly::var(n, *k)),
        Ast::Add(a, b) => &eval(a, n)? + &eval(b, n)?,
        Ast::Sub(a, b) => &eval(a, n)? - &eval(b, n)?,
        Ast::Mul(a, b) => &eval(a, n)? * &eval(b, n)?,
        Ast::Neg(a) => -&eval(a, n)?,
        Ast::Pow(a, e) => {
            let base = eval(a, n)?;
            (0..*e).fold(RationalFunction::one(n), |acc, _| &acc * &base)
        }
        Ast::Div(a, b) => {
            let mut factors = Vec::new();
            let mut scalar = Scalar::one();
            denominator_factors(b, n, 1, &mut factors, &mut scalar)?;
            let inv = RationalFunction::new(Poly::constant(n, scalar.inv()), factors)
                .map_err(|e| ParseError::new(e.to_string()))?;
            &eval(a, n)? * &inv
        }
    })
}

/// Collect the polynomial factors of a denominator, keeping its multiplicative structure.
fn denominator_factors(
    ast: &Ast,
    n: usize,
    mult: u32,
    out: &mut Vec<(Poly, u32)>,
    scalar: &mut Scalar,
) -> Result<(), ParseError> {
    match ast {
        Ast::Mul(a, b) => {
            denominator_factors(a, n, mult, out, scalar)?;
            denominator_factors(b, n, mult, out, scalar)
        }
        Ast::Pow(a, e) => denominator_factors(a, n, mult * e, out, scalar),
        Ast::Neg(a) => {
            if mult % 2 == 1 {
                *scalar = -&*scalar;
            }
            denominator_factors(a, n, mult, out, scalar)
        }
        other => {
            let v = eval(other, n)?;
            let p = v.as_poly().ok_or_else(|| ParseError::new("nested division in denominator"))?.clone();
            if p.is_empty() {
                return Err(ParseError::new("division by zero"));
            }
            if p.is_constant() {
                *scalar = &*scalar * &p.constant_term().pow(mult);
            } else if p.constant_term().is_zero() {
                return Err(ParseError::new(format!("denominator factor {p} vanishes at the origin")));
            } else {
                out.push((p, mult));
            }
            Ok(())
        }
    }
}

/// Parse an expression over the given variable names.
pub fn parse_rational(s: &str, names: &[String]) -> Result<RationalFunction, ParseError> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(ParseError::new("empty expression"));
    }
    let mut p = Parser { toks, pos: 0, names };
    let ast = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(ParseError::new(format!("trailing input in `{s}`")));
    }
    eval(&ast, names.len())
}

/// Parse an expression that must be a polynomial.
pub fn parse_poly(s: &str, names: &[String]) -> Result<Poly, ParseError> {
    let r = parse_rational(s, names)?;
    r.as_poly().cloned().ok_or_else(|| ParseError::new(format!("`{s}` is not a polynomial")))
}

/// Split a rational function over `classes ++ novikov` variables into
/// (class monomial, coefficient in the Novikov variables) pairs.
pub fn split_by_class(f: &RationalFunction, nclasses: usize) -> Vec<(MultiIndex, RationalFunction)> {
    let nq = f.nvars() - nclasses;
    let mut groups: std::collections::BTreeMap<MultiIndex, Poly> = Default::default();
    for (m, c) in f.numerator().terms() {
        let cls = MultiIndex(m.0[..nclasses].to_vec());
        let qm = MultiIndex(m.0[nclasses..].to_vec());
        groups.entry(cls).or_insert_with(|| Poly::zero(nq)).add_term(qm, c.clone());
    }
    let den: Vec<(Poly, u32)> = f
        .denominator()
        .iter()
        .map(|(p, k)| {
            let restricted =
                Poly::from_terms(nq, p.terms().iter().map(|(m, c)| (MultiIndex(m.0[nclasses..].to_vec()), c.clone())));
            (restricted, *k)
        })
        .collect();
    groups
        .into_iter()
        .filter(|(_, p)| !p.is_empty())
        .map(|(cls, p)| (cls, RationalFunction::new(p, den.clone()).expect("factors stay admissible")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::monomial::default_names;

    #[test]
    fn parses_rational_entries() {
        let names = default_names("q", 3);
        let f = parse_rational("2*(1+q2)/(1-q2)", &names).unwrap();
        assert_eq!(f.denominator().len(), 1);
        let g = parse_rational("q2*q3/((1-q2)*(1-q2-q3))", &names).unwrap();
        assert_eq!(g.denominator().len(), 2);
        let h = parse_rational("q2 q3 / (1 - q2)^1*(1 - q2 - q3)^1", &names).unwrap();
        assert_eq!(g, h);
        // round trip through display
        assert_eq!(parse_rational(&g.to_string(), &names).unwrap(), g);
    }

    #[test]
    fn constants_and_units() {
        let names = default_names("q", 1);
        assert_eq!(parse_rational("1/2", &names).unwrap().as_scalar(), Some(Scalar::from_frac(1, 2)));
        assert_eq!(parse_rational("i*i", &names).unwrap().as_scalar(), Some(Scalar::from_int(-1)));
        assert_eq!(parse_rational("-3/(-6)", &names).unwrap().as_scalar(), Some(Scalar::from_frac(1, 2)));
        assert!(parse_rational("1/q1", &names).is_err());
        assert!(parse_rational("x", &names).is_err());
    }

    #[test]
    fn split_mixed_expression() {
        let names: Vec<String> = ["m1", "m2", "q1", "q2"].iter().map(|s| s.to_string()).collect();
        let f = parse_rational("(m1-m2)*q2/(1-q2) + 5*m2*q1", &names).unwrap();
        let parts = split_by_class(&f, 2);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].0, MultiIndex(vec![0, 1]));
        assert_eq!(parts[0].1.numerator().nvars(), 2);
    }
}
