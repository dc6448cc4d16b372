//! The array-spec grammar.
//!
//! ```text
//! spec  := "inv" "(" spec ")"
//!        | "mul" "(" spec "," spec ")"
//!        | base [ "[" param "]" ]
//! base  := "catalan" | "shapiro" | "pascal"
//! param := "r" | integer | integer "/" integer
//! ```
//!
//! A parameter selects the one-parameter relative of the base array
//! (`catalan[2]`, `pascal[-1/3]`); the literal symbol `r` keeps the
//! parameter symbolic, producing polynomial entries. Whitespace is
//! insignificant.

use std::str::FromStr;

use crate::catalog::{catalan, pascal, r_catalan, shapiro, with_parameter};
use crate::exact::{BigInt, IntPoly, Ratio, Ring};
use crate::riordan::RiordanArray;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Param {
    Int(BigInt),
    Rat(Ratio),
    Sym,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Base {
    Pascal,
    Catalan,
    Shapiro,
}

#[derive(Clone, PartialEq, Debug)]
pub enum Spec {
    Base(Base, Option<Param>),
    Inv(Box<Spec>),
    Mul(Box<Spec>, Box<Spec>),
}

impl Spec {
    pub fn uses_symbol(&self) -> bool {
        match self {
            Spec::Base(_, p) => matches!(p, Some(Param::Sym)),
            Spec::Inv(a) => a.uses_symbol(),
            Spec::Mul(a, b) => a.uses_symbol() || b.uses_symbol(),
        }
    }

    pub fn uses_rational(&self) -> bool {
        match self {
            Spec::Base(_, p) => matches!(p, Some(Param::Rat(_))),
            Spec::Inv(a) => a.uses_rational(),
            Spec::Mul(a, b) => a.uses_rational() || b.uses_rational(),
        }
    }
}

pub fn parse_spec(input: &str) -> Result<Spec, String> {
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
    };
    let spec = p.spec()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(format!(
            "unexpected trailing input at byte {}: '{}'",
            p.pos,
            &input[p.pos..]
        ));
    }
    Ok(spec)
}

/// Parses an integer or a fraction `p/q` into an exact rational.
pub fn parse_ratio(s: &str) -> Result<Ratio, String> {
    let s = s.trim();
    let (numer, denom) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), Some(q.trim())),
        None => (s, None),
    };
    let n = BigInt::from_str(numer).map_err(|_| format!("'{numer}' is not an integer"))?;
    match denom {
        None => Ok(Ratio::from_integer(n)),
        Some(q) => {
            let d = BigInt::from_str(q).map_err(|_| format!("'{q}' is not an integer"))?;
            if Ring::is_zero(&d) {
                return Err(format!("zero denominator in '{s}'"));
            }
            Ok(Ratio::new(n, d))
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), String> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(format!(
                "expected '{}' at byte {} of the array spec",
                c as char, self.pos
            ))
        }
    }

    fn word(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_alphabetic) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn integer(&mut self) -> Result<BigInt, String> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii slice");
        BigInt::from_str(text).map_err(|_| format!("expected an integer at byte {start}"))
    }

    fn spec(&mut self) -> Result<Spec, String> {
        let name = self.word();
        match name.as_str() {
            "inv" => {
                self.expect(b'(')?;
                let inner = self.spec()?;
                self.expect(b')')?;
                Ok(Spec::Inv(Box::new(inner)))
            }
            "mul" => {
                self.expect(b'(')?;
                let lhs = self.spec()?;
                self.expect(b',')?;
                let rhs = self.spec()?;
                self.expect(b')')?;
                Ok(Spec::Mul(Box::new(lhs), Box::new(rhs)))
            }
            "pascal" => Ok(Spec::Base(Base::Pascal, self.opt_param()?)),
            "catalan" => Ok(Spec::Base(Base::Catalan, self.opt_param()?)),
            "shapiro" => Ok(Spec::Base(Base::Shapiro, self.opt_param()?)),
            "" => Err(format!("expected an array name at byte {}", self.pos)),
            other => Err(format!(
                "unknown array '{other}'; expected catalan, shapiro, pascal, inv(...), or mul(...)"
            )),
        }
    }

    fn opt_param(&mut self) -> Result<Option<Param>, String> {
        if self.peek() != Some(b'[') {
            return Ok(None);
        }
        self.pos += 1;
        let param = self.param()?;
        self.expect(b']')?;
        Ok(Some(param))
    }

    fn param(&mut self) -> Result<Param, String> {
        if self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            let w = self.word();
            return if w == "r" {
                Ok(Param::Sym)
            } else {
                Err(format!("unknown parameter '{w}'; expected an integer, a fraction p/q, or the symbol r"))
            };
        }
        let numer = self.integer()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let denom = self.integer()?;
            if Ring::is_zero(&denom) {
                return Err("zero denominator in parameter".into());
            }
            Ok(Param::Rat(Ratio::new(numer, denom)))
        } else {
            Ok(Param::Int(numer))
        }
    }
}

/// A built array in one of the three coefficient domains. Integer entries
/// are the default; a fractional parameter moves to rationals, the symbol
/// `r` to polynomials.
#[derive(Debug)]
pub enum ArrayValue {
    Int(RiordanArray<BigInt>),
    Rat(RiordanArray<Ratio>),
    Poly(RiordanArray<IntPoly>),
}

pub fn build_array(spec: &Spec, order: usize) -> Result<ArrayValue, String> {
    let symbolic = spec.uses_symbol();
    if symbolic && spec.uses_rational() {
        return Err(
            "cannot mix the symbol r with a fractional parameter in one spec; \
             use one or the other"
                .into(),
        );
    }
    let built = if symbolic {
        eval_spec(spec, order, &|p| match p {
            Param::Int(v) => IntPoly::constant(v.clone()),
            Param::Sym => IntPoly::var(),
            Param::Rat(_) => unreachable!("rejected above"),
        })
        .map(ArrayValue::Poly)
    } else if spec.uses_rational() {
        eval_spec(spec, order, &|p| match p {
            Param::Int(v) => Ratio::from_integer(v.clone()),
            Param::Rat(q) => q.clone(),
            Param::Sym => unreachable!("symbolic branch taken"),
        })
        .map(ArrayValue::Rat)
    } else {
        eval_spec(spec, order, &|p| match p {
            Param::Int(v) => v.clone(),
            _ => unreachable!("integer branch requires integer params"),
        })
        .map(ArrayValue::Int)
    };
    built.map_err(|e| e.to_string())
}

fn eval_spec<R: Ring>(
    spec: &Spec,
    order: usize,
    lift: &impl Fn(&Param) -> R,
) -> crate::Result<RiordanArray<R>> {
    match spec {
        Spec::Base(base, param) => {
            let p = param.as_ref().map(lift);
            Ok(match (base, p) {
                (Base::Pascal, Some(r)) => pascal(&r, order),
                (Base::Pascal, None) => pascal(&R::one(), order),
                (Base::Catalan, Some(r)) => r_catalan(&r, order),
                (Base::Catalan, None) => catalan(order),
                (Base::Shapiro, Some(r)) => with_parameter(&shapiro(order), &r),
                (Base::Shapiro, None) => shapiro(order),
            })
        }
        Spec::Inv(a) => eval_spec(a, order, lift)?.inv(),
        Spec::Mul(a, b) => Ok(eval_spec(a, order, lift)?.mul(&eval_spec(b, order, lift)?)),
    }
}
