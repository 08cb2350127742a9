//! Text contexts (`Uq(+,-)`, `A(1,0;2)`, `B(..)`, `D(..)`, `Pol(0)`) and the
//! element grammar: generators by name, `*`, `/` by scalars, `+`, `-`,
//! integer powers `^`, parentheses and scalar literals in `q` and `s`.

use crate::casimir::{make_quotient, CasimirParams};
use crate::error::{QgalError, Result};
use crate::freealg::{NcPoly, Presentation};
use crate::homspace::{make_b, make_d};
use crate::pol::{make_pol, PolVariant};
use crate::scalar::{Rational, Scalar};
use crate::uq::{make_uq, param_text};
use std::fmt;
use std::sync::Arc;

/// An algebra named in text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Context {
    Uq(Rational, Rational),
    A(CasimirParams),
    B(CasimirParams),
    D(CasimirParams),
    Pol(PolVariant),
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Context::Uq(m, n) => write!(f, "Uq({},{})", param_text(m), param_text(n)),
            Context::A(p) => write!(f, "A({})", p.tag()),
            Context::B(p) => write!(f, "B({})", p.tag()),
            Context::D(p) => write!(f, "D({})", p.tag()),
            Context::Pol(v) => f.write_str(&v.id()),
        }
    }
}

fn bad(msg: impl Into<String>) -> QgalError {
    QgalError::InvalidParams(msg.into())
}

/// A parameter: `+`, `-`, or a rational such as `-2` or `1/2`.
pub fn parse_param(s: &str) -> Result<Rational> {
    let s = s.trim();
    match s {
        "+" => return Ok(Rational::from_integer(1.into())),
        "-" => return Ok(Rational::from_integer((-1).into())),
        _ => {}
    }
    s.parse::<Rational>().map_err(|_| bad(format!("not a parameter: '{s}'")))
}

/// `mu,nu` restricted to `{-1, 0, 1}`.
pub fn parse_label(s: &str) -> Result<(Rational, Rational)> {
    let parts: Vec<&str> = s.split(',').collect();
    let [m, n] = parts.as_slice() else { return Err(bad(format!("expected mu,nu, got '{s}'"))) };
    let (m, n) = (parse_param(m)?, parse_param(n)?);
    for r in [&m, &n] {
        if PolVariant::from_mu(r).is_none() {
            return Err(bad(format!("label {} not in {{-1, 0, 1}}", param_text(r))));
        }
    }
    Ok((m, n))
}

/// `mu,nu;tau` or `mu,nu,tau`.
pub fn parse_params(s: &str) -> Result<CasimirParams> {
    let (head, tau) = s
        .rsplit_once(';')
        .or_else(|| s.rsplit_once(','))
        .ok_or_else(|| bad(format!("expected mu,nu;tau, got '{s}'")))?;
    let (mu, nu) = parse_label(head)?;
    Ok(CasimirParams::new(mu, nu, parse_param(tau)?))
}

impl Context {
    pub fn parse(s: &str) -> Result<Context> {
        let s = s.trim();
        let (name, rest) = s.split_once('(').ok_or_else(|| bad(format!("unknown context '{s}'")))?;
        let inner = rest.strip_suffix(')').ok_or_else(|| bad(format!("unclosed context '{s}'")))?;
        match name.trim() {
            "Uq" | "U" => {
                let (m, n) = parse_label(inner)?;
                Ok(Context::Uq(m, n))
            }
            "A" => Ok(Context::A(parse_params(inner)?)),
            "B" => Ok(Context::B(parse_params(inner)?)),
            "D" => Ok(Context::D(parse_params(inner)?)),
            "Pol" => PolVariant::parse(inner).map(Context::Pol).ok_or_else(|| bad(format!("unknown Pol variant '{inner}'"))),
            other => Err(bad(format!("unknown algebra family '{other}'"))),
        }
    }

    pub fn presentation(&self) -> Arc<Presentation> {
        match self {
            Context::Uq(m, n) => make_uq(m, n),
            Context::A(p) => make_quotient(p),
            Context::B(p) => make_b(p),
            Context::D(p) => make_d(p),
            Context::Pol(v) => make_pol(*v),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(u64),
    Ident(String),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let mut j = i;
            while j < chars.len() && chars[j].1.is_ascii_digit() {
                j += 1;
            }
            let end = chars.get(j).map_or(text.len(), |x| x.0);
            let n = text[pos..end]
                .parse()
                .map_err(|_| QgalError::Parse { pos, message: "integer literal too large".into() })?;
            out.push((pos, Tok::Num(n)));
            i = j;
        } else if c.is_alphabetic() || c == '_' {
            let mut j = i;
            while j < chars.len() && (chars[j].1.is_alphanumeric() || chars[j].1 == '_') {
                j += 1;
            }
            let end = chars.get(j).map_or(text.len(), |x| x.0);
            out.push((pos, Tok::Ident(text[pos..end].to_string())));
            i = j;
        } else if "+-*/^()".contains(c) {
            out.push((pos, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(QgalError::Parse { pos, message: format!("unexpected character '{c}'") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    pres: &'a Arc<Presentation>,
    toks: Vec<(usize, Tok)>,
    at: usize,
    len: usize,
}

impl Parser<'_> {
    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.len, |t| t.0)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(QgalError::Parse { pos: self.pos(), message: message.into() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<NcPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<NcPoly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.try_mul(&self.unary()?)?;
            } else if self.eat('/') {
                let pos = self.pos();
                let d = self.unary()?;
                let Some(c) = d.as_constant() else {
                    return Err(QgalError::Parse { pos, message: "division by a non-scalar".into() });
                };
                let inv = c.inv().map_err(|_| QgalError::Parse { pos, message: "division by zero".into() })?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<NcPoly> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<NcPoly> {
        let start = self.pos();
        let (base, gen) = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let Some(Tok::Num(n)) = self.peek().cloned() else { return self.err("expected an integer exponent") };
        self.at += 1;
        let n = u32::try_from(n).or_else(|_| self.err("exponent too large"))?;
        if !neg {
            return Ok(base.pow(n)?);
        }
        if let Some(c) = base.as_constant() {
            let inv = c.inv().map_err(|_| QgalError::Parse { pos: start, message: "zero to a negative power".into() })?;
            return Ok(NcPoly::constant(self.pres, inv.pow(n as i32)?));
        }
        match gen.and_then(|g| self.pres.generators()[g as usize].inverse) {
            Some(inv) => Ok(NcPoly::word(self.pres, vec![inv])?.pow(n)?),
            None => Err(QgalError::Parse { pos: start, message: "negative power of a non-invertible element".into() }),
        }
    }

    /// An atom, plus the generator index when it is a bare generator.
    fn atom(&mut self) -> Result<(NcPoly, Option<u8>)> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                let n = i64::try_from(n).or_else(|_| self.err("integer literal too large"))?;
                Ok((NcPoly::constant(self.pres, Scalar::from_int(n)), None))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                if let Some(i) = self.pres.gen_index(&name) {
                    return Ok((NcPoly::word(self.pres, vec![i])?, Some(i)));
                }
                let c = match name.as_str() {
                    "q" => Scalar::q(),
                    "s" => Scalar::s(),
                    "lambda" => Scalar::lambda(),
                    _ => {
                        return Err(QgalError::Parse {
                            pos,
                            message: format!("unknown generator '{name}' for {}", self.pres.id()),
                        })
                    }
                };
                Ok((NcPoly::constant(self.pres, c), None))
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok((e, None))
            }
            Some(Tok::Sym(c)) => self.err(format!("unexpected '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parse `text` as an element of `pres`, in normal form.
pub fn parse_expression(pres: &Arc<Presentation>, text: &str) -> Result<NcPoly> {
    let toks = tokenize(text)?;
    let mut p = Parser { pres, toks, at: 0, len: text.len() };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

/// Parse a scalar literal such as `q^2/(q^2-1)`.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let pres = make_pol(PolVariant::Plus);
    let e = parse_expression(&pres, text)?;
    e.as_constant().ok_or_else(|| QgalError::Parse { pos: 0, message: "expected a scalar".into() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{random_element, seeded_rng};

    fn ctx(s: &str) -> Arc<Presentation> {
        Context::parse(s).unwrap().presentation()
    }

    #[test]
    fn commutator_in_uq() {
        let p = ctx("Uq(+,-)");
        let lhs = parse_expression(&p, "E*F - F*E").unwrap();
        let rhs = parse_expression(&p, "lambda*(K^2 + K^-2)").unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn b_relation() {
        let p = ctx("B(+,+;1)");
        assert_eq!(parse_expression(&p, "xs*x").unwrap(), parse_expression(&p, "-q^2 + z - z^2").unwrap());
    }

    #[test]
    fn unit_everywhere() {
        for c in ["Uq(0,1)", "A(1,-1;2)", "B(0,0;0)", "D(1,0;-1)", "Pol(0)", "Pol(sl2c)"] {
            let p = ctx(c);
            assert_eq!(parse_expression(&p, "1").unwrap(), NcPoly::one(&p));
        }
    }

    #[test]
    fn errors_carry_positions() {
        let p = ctx("B(1,1;1)");
        match parse_expression(&p, "x + E") {
            Err(QgalError::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_expression(&p, "x^-1"), Err(QgalError::Parse { pos: 0, .. })));
        assert!(matches!(parse_expression(&p, "(x"), Err(QgalError::Parse { pos: 2, .. })));
        assert!(matches!(parse_expression(&p, "x $"), Err(QgalError::Parse { pos: 2, .. })));
        assert!(parse_expression(&p, "x/xs").is_err());
    }

    #[test]
    fn contexts() {
        assert!(Context::parse("Uq(2,0)").is_err());
        assert!(Context::parse("Q(1,1)").is_err());
        assert_eq!(Context::parse("B(+,-;1/2)").unwrap().to_string(), "B(1,-1;1/2)");
        assert_eq!(parse_params("1,0,-2").unwrap(), CasimirParams::ints(1, 0, -2));
    }

    #[test]
    fn scalar_literals() {
        let l = parse_scalar("q^2/(q^2-1)").unwrap();
        assert_eq!(l.render(), "q^2/(q^2-1)");
        assert_eq!(parse_scalar("s^2").unwrap(), Scalar::q());
        assert_eq!(parse_scalar("q^-1").unwrap(), Scalar::q_pow(-1));
    }

    #[test]
    fn round_trip_random() {
        for c in ["Uq(1,-1)", "A(0,1;2)", "B(-1,0;1)", "Pol(+)", "Pol(0)"] {
            let p = ctx(c);
            let mut rng = seeded_rng(5, c);
            for _ in 0..50 {
                let e = random_element(&p, 4, 3, &mut rng).unwrap().scale(&Scalar::lambda());
                assert_eq!(parse_expression(&p, &e.render()).unwrap(), e, "{}", e.render());
            }
        }
    }
}
