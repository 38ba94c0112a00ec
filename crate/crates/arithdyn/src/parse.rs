//! Map-expression parser: univariate expressions in x with + - * / ^,
//! parentheses and implicit multiplication ("6x^2"), or a homogeneous pair
//! "F=...;G=..." in X and Y. Errors carry the byte position.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::exact::{Int, Rat};
use crate::homog::HomogForm;
use crate::ratmap::RationalMap;
use crate::{Error, Result};

const MAX_EXPONENT: u32 = 4096;

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

/// Entry point: dispatches on the presence of "F=".
pub fn parse_map(input: &str) -> Result<RationalMap> {
    if input.contains('=') {
        parse_homogeneous_pair(input)
    } else {
        parse_univariate(input)
    }
}

/// Bivariate polynomial over Q, keyed by (x-exponent, y-exponent).
type Poly = BTreeMap<(u32, u32), Rat>;

fn poly_const(c: Rat) -> Poly {
    let mut p = Poly::new();
    if !c.is_zero() {
        p.insert((0, 0), c);
    }
    p
}

fn poly_var(y: bool) -> Poly {
    let mut p = Poly::new();
    p.insert(if y { (0, 1) } else { (1, 0) }, Rat::one());
    p
}

fn poly_add(a: &Poly, b: &Poly) -> Poly {
    let mut out = a.clone();
    for (k, v) in b {
        let entry = out.entry(*k).or_insert_with(Rat::zero);
        *entry += v;
        if entry.is_zero() {
            out.remove(k);
        }
    }
    out
}

fn poly_neg(a: &Poly) -> Poly {
    a.iter().map(|(k, v)| (*k, -v)).collect()
}

fn poly_mul(a: &Poly, b: &Poly, pos: usize) -> Result<Poly> {
    let mut out = Poly::new();
    for ((i1, j1), v1) in a {
        for ((i2, j2), v2) in b {
            let key = (i1 + i2, j1 + j2);
            if key.0 > MAX_EXPONENT || key.1 > MAX_EXPONENT {
                return Err(err(pos, format!("degree exceeds the cap {MAX_EXPONENT}")));
            }
            let entry = out.entry(key).or_insert_with(Rat::zero);
            *entry += v1 * v2;
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

fn poly_pow(a: &Poly, e: u32, pos: usize) -> Result<Poly> {
    let mut out = poly_const(Rat::one());
    for _ in 0..e {
        out = poly_mul(&out, a, pos)?;
    }
    Ok(out)
}

/// A quotient of bivariate polynomials; the parser's value type.
#[derive(Clone)]
struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: poly_const(Rat::one()),
        }
    }

    fn add(&self, o: &RatFunc, pos: usize) -> Result<RatFunc> {
        Ok(RatFunc {
            num: poly_add(
                &poly_mul(&self.num, &o.den, pos)?,
                &poly_mul(&o.num, &self.den, pos)?,
            ),
            den: poly_mul(&self.den, &o.den, pos)?,
        })
    }

    fn neg(&self) -> RatFunc {
        RatFunc {
            num: poly_neg(&self.num),
            den: self.den.clone(),
        }
    }

    fn mul(&self, o: &RatFunc, pos: usize) -> Result<RatFunc> {
        Ok(RatFunc {
            num: poly_mul(&self.num, &o.num, pos)?,
            den: poly_mul(&self.den, &o.den, pos)?,
        })
    }

    fn div(&self, o: &RatFunc, pos: usize) -> Result<RatFunc> {
        if o.num.is_empty() {
            return Err(err(pos, "division by zero"));
        }
        Ok(RatFunc {
            num: poly_mul(&self.num, &o.den, pos)?,
            den: poly_mul(&self.den, &o.num, pos)?,
        })
    }

    fn pow(&self, e: u32, pos: usize) -> Result<RatFunc> {
        Ok(RatFunc {
            num: poly_pow(&self.num, e, pos)?,
            den: poly_pow(&self.den, e, pos)?,
        })
    }

    /// The exponent value, when this is a constant non-negative integer.
    fn as_exponent(&self, pos: usize) -> Result<u32> {
        let num_c = match (self.num.len(), self.num.get(&(0, 0))) {
            (0, _) => Rat::zero(),
            (1, Some(c)) => c.clone(),
            _ => return Err(err(pos, "exponent must be a constant integer")),
        };
        let den_c = match (self.den.len(), self.den.get(&(0, 0))) {
            (1, Some(c)) => c.clone(),
            _ => return Err(err(pos, "exponent must be a constant integer")),
        };
        let q = num_c / den_c;
        if !q.is_integer() || q.is_negative() {
            return Err(err(pos, "exponent must be a non-negative integer"));
        }
        u32::try_from(q.to_integer())
            .ok()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or_else(|| err(pos, format!("exponent exceeds the cap {MAX_EXPONENT}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(Int),
    X,
    Y,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str, allow_y: bool) -> Result<Vec<(usize, Tok)>> {
    let mut toks = Vec::new();
    let chars: Vec<(usize, char)> = input.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '0'..='9' => {
                let mut j = i;
                while j < chars.len() && chars[j].1.is_ascii_digit() {
                    j += 1;
                }
                let digits: String = chars[i..j].iter().map(|&(_, c)| c).collect();
                toks.push((pos, Tok::Num(digits.parse().unwrap())));
                i = j;
            }
            'x' | 'X' => {
                toks.push((pos, Tok::X));
                i += 1;
            }
            'y' | 'Y' if allow_y => {
                toks.push((pos, Tok::Y));
                i += 1;
            }
            '+' => {
                toks.push((pos, Tok::Plus));
                i += 1;
            }
            '-' | '−' | '–' => {
                toks.push((pos, Tok::Minus));
                i += 1;
            }
            '*' | '⋅' | '·' => {
                toks.push((pos, Tok::Star));
                i += 1;
            }
            '/' => {
                toks.push((pos, Tok::Slash));
                i += 1;
            }
            '^' => {
                toks.push((pos, Tok::Caret));
                i += 1;
            }
            '(' => {
                toks.push((pos, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((pos, Tok::RParen));
                i += 1;
            }
            other => return Err(err(pos, format!("unexpected character '{other}'"))),
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    i: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.i].1.clone();
        self.i += 1;
        t
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut lhs = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                self.term()?.neg()
            }
            Some(Tok::Plus) => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    let p = self.pos();
                    self.bump();
                    lhs = lhs.add(&self.term()?, p)?;
                }
                Some(Tok::Minus) => {
                    let p = self.pos();
                    self.bump();
                    lhs = lhs.add(&self.term()?.neg(), p)?;
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    let p = self.pos();
                    self.bump();
                    lhs = lhs.mul(&self.factor()?, p)?;
                }
                Some(Tok::Slash) => {
                    let p = self.pos();
                    self.bump();
                    lhs = lhs.div(&self.factor()?, p)?;
                }
                // implicit multiplication: 6x^2, 2XY^2, (x-1)(x-2)
                Some(Tok::Num(_)) | Some(Tok::X) | Some(Tok::Y) | Some(Tok::LParen) => {
                    let p = self.pos();
                    lhs = lhs.mul(&self.factor()?, p)?;
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<RatFunc> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            return Ok(self.factor()?.neg());
        }
        let base = self.primary()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            let p = self.pos();
            self.bump();
            let exp_pos = self.pos();
            let exp = self.factor()?.as_exponent(exp_pos)?;
            return base.pow(exp, p);
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<RatFunc> {
        let p = self.pos();
        match self.peek() {
            Some(Tok::Num(_)) => {
                let Tok::Num(n) = self.bump() else { unreachable!() };
                Ok(RatFunc::from_poly(poly_const(Rat::from_integer(n))))
            }
            Some(Tok::X) => {
                self.bump();
                Ok(RatFunc::from_poly(poly_var(false)))
            }
            Some(Tok::Y) => {
                self.bump();
                Ok(RatFunc::from_poly(poly_var(true)))
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.expr()?;
                if !matches!(self.peek(), Some(Tok::RParen)) {
                    return Err(err(self.pos(), "expected ')'"));
                }
                self.bump();
                Ok(inner)
            }
            Some(t) => Err(err(p, format!("unexpected token {t:?}"))),
            None => Err(err(p, "unexpected end of input")),
        }
    }
}

fn parse_ratfunc(input: &str, allow_y: bool) -> Result<RatFunc> {
    let toks = tokenize(input, allow_y)?;
    if toks.is_empty() {
        return Err(err(0, "empty expression"));
    }
    let mut parser = Parser {
        toks,
        i: 0,
        end: input.len(),
    };
    let value = parser.expr()?;
    if parser.i != parser.toks.len() {
        return Err(err(parser.pos(), "trailing input"));
    }
    Ok(value)
}

/// Dense ascending coefficient vector of a univariate polynomial in x.
fn univariate_coeffs(p: &Poly) -> Vec<Rat> {
    let deg = p.keys().map(|&(i, _)| i).max().unwrap_or(0) as usize;
    let mut coeffs = vec![Rat::zero(); deg + 1];
    for (&(i, _), v) in p {
        coeffs[i as usize] = v.clone();
    }
    coeffs
}

/// Parses a univariate expression in x into a self-map of P^1.
pub fn parse_univariate(input: &str) -> Result<RationalMap> {
    let rf = parse_ratfunc(input, false)?;
    if rf.num.is_empty() {
        return Err(err(0, "the zero expression does not define a map"));
    }
    RationalMap::from_rational_function(&univariate_coeffs(&rf.num), &univariate_coeffs(&rf.den))
}

fn homog_form_of(input: &str, offset: usize) -> Result<HomogForm> {
    let rf = parse_ratfunc(input, true).map_err(|e| shift(e, offset))?;
    // only constant denominators make sense for a form; clear them
    if rf.den.len() != 1 || !rf.den.contains_key(&(0, 0)) {
        return Err(err(offset, "forms must be polynomial (no division by X or Y)"));
    }
    let den = rf.den[&(0, 0)].clone();
    if rf.num.is_empty() {
        return Err(err(offset, "the zero form is not allowed"));
    }
    let degree = {
        let mut degs = rf.num.keys().map(|&(i, j)| i + j);
        let d = degs.next().unwrap();
        if degs.any(|e| e != d) {
            return Err(err(offset, "form is not homogeneous"));
        }
        d as usize
    };
    // scale away the rational content: forms are projective
    let mut denom_lcm = Int::one();
    for v in rf.num.values() {
        let c = v / &den;
        denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
    }
    let mut coeffs = vec![Int::zero(); degree + 1];
    for (&(i, _), v) in &rf.num {
        let c = v / &den * Rat::from_integer(denom_lcm.clone());
        coeffs[i as usize] = c.to_integer();
    }
    Ok(HomogForm::new(coeffs))
}

fn shift(e: Error, offset: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse {
            pos: pos + offset,
            msg,
        },
        other => other,
    }
}

/// Parses "F=...;G=..." with homogeneous polynomials in X and Y.
pub fn parse_homogeneous_pair(input: &str) -> Result<RationalMap> {
    let semi = input
        .find(';')
        .ok_or_else(|| err(input.len(), "expected ';' between F and G"))?;
    let (f_part, g_part) = (&input[..semi], &input[semi + 1..]);
    let f_src = strip_label(f_part, 'F', 0)?;
    let g_src = strip_label(g_part, 'G', semi + 1)?;
    let f = homog_form_of(f_src.0, f_src.1)?;
    let g = homog_form_of(g_src.0, g_src.1)?;
    if f.degree() != g.degree() {
        return Err(err(
            g_src.1,
            format!("F has degree {} but G has degree {}", f.degree(), g.degree()),
        ));
    }
    RationalMap::from_pair(f, g)
}

fn strip_label<'a>(part: &'a str, label: char, offset: usize) -> Result<(&'a str, usize)> {
    let trimmed = part.trim_start();
    let lead = part.len() - trimmed.len();
    let mut it = trimmed.chars();
    if it.next() != Some(label) {
        return Err(err(offset + lead, format!("expected '{label}='")));
    }
    let rest = it.as_str().trim_start();
    let eq_at = trimmed.len() - rest.len();
    if !rest.starts_with('=') {
        return Err(err(offset + lead + eq_at, format!("expected '=' after {label}")));
    }
    Ok((&rest[1..], offset + lead + eq_at + 1))
}
