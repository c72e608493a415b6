//! Rational parameter expressions.
//!
//! ```text
//! expr     := term (('+'|'-') term)*
//! term     := factor (('*'|'/') factor)*
//! factor   := '-' factor | '(' expr ')' | rational | ident
//! rational := int ('/' posint)?
//! ```
//! A literal `a/b` is read as one rational when both sides are digit runs;
//! since `/` is left-associative this coincides with the division reading.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Parameter assignment used for evaluation.
pub type Assignment = BTreeMap<String, Scalar>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamExpr {
    Rational(Scalar),
    Param(String),
    Neg(Box<ParamExpr>),
    Add(Box<ParamExpr>, Box<ParamExpr>),
    Sub(Box<ParamExpr>, Box<ParamExpr>),
    Mul(Box<ParamExpr>, Box<ParamExpr>),
    Div(Box<ParamExpr>, Box<ParamExpr>),
}

impl ParamExpr {
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser { src: text.as_bytes(), pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(e)
    }

    pub fn constant(value: Scalar) -> Self {
        ParamExpr::Rational(value)
    }

    /// Exact evaluation; every parameter must be bound.
    pub fn eval(&self, env: &Assignment) -> Result<Scalar> {
        Ok(match self {
            ParamExpr::Rational(r) => r.clone(),
            ParamExpr::Param(name) => env.get(name).cloned().ok_or_else(|| Error::UnboundParameter(name.clone()))?,
            ParamExpr::Neg(a) => -a.eval(env)?,
            ParamExpr::Add(a, b) => a.eval(env)? + b.eval(env)?,
            ParamExpr::Sub(a, b) => a.eval(env)? - b.eval(env)?,
            ParamExpr::Mul(a, b) => a.eval(env)? * b.eval(env)?,
            ParamExpr::Div(a, b) => a.eval(env)?.checked_div(&b.eval(env)?)?,
        })
    }

    /// Names of all parameters occurring in the expression.
    pub fn params(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_params(&mut out);
        out
    }

    fn collect_params(&self, out: &mut BTreeSet<String>) {
        match self {
            ParamExpr::Rational(_) => {}
            ParamExpr::Param(n) => {
                out.insert(n.clone());
            }
            ParamExpr::Neg(a) => a.collect_params(out),
            ParamExpr::Add(a, b) | ParamExpr::Sub(a, b) | ParamExpr::Mul(a, b) | ParamExpr::Div(a, b) => {
                a.collect_params(out);
                b.collect_params(out);
            }
        }
    }
}

/// Parses `text` as a [`ParamExpr`].
pub fn parse_expr(text: &str) -> Result<ParamExpr> {
    ParamExpr::parse(text)
}

impl fmt::Display for ParamExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamExpr::Rational(r) => write!(f, "{r}"),
            ParamExpr::Param(n) => f.write_str(n),
            ParamExpr::Neg(a) => write!(f, "-({a})"),
            ParamExpr::Add(a, b) => write!(f, "({a} + {b})"),
            ParamExpr::Sub(a, b) => write!(f, "({a} - {b})"),
            ParamExpr::Mul(a, b) => write!(f, "({a} * {b})"),
            ParamExpr::Div(a, b) => write!(f, "({a} / {b})"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<ParamExpr> {
        let mut lhs = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = if c == b'+' {
                ParamExpr::Add(Box::new(lhs), Box::new(rhs))
            } else {
                ParamExpr::Sub(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<ParamExpr> {
        let mut lhs = self.factor()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.factor()?;
            lhs = if c == b'*' {
                ParamExpr::Mul(Box::new(lhs), Box::new(rhs))
            } else {
                ParamExpr::Div(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<ParamExpr> {
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some(b'-') => {
                self.pos += 1;
                Ok(ParamExpr::Neg(Box::new(self.factor()?)))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => self.rational(),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                Ok(ParamExpr::Param(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()))
            }
            Some(_) => Err(self.error("unexpected character")),
        }
    }

    fn digits(&mut self) -> BigInt {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii").parse().expect("digit run")
    }

    fn rational(&mut self) -> Result<ParamExpr> {
        let num = self.digits();
        // `a/b` with a digit run on the right is a single literal.
        let save = self.pos;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                let den_pos = self.pos;
                let den = self.digits();
                if den == BigInt::from(0) {
                    self.pos = den_pos;
                    return Err(Error::DivisionByZero);
                }
                return Ok(ParamExpr::Rational(Scalar::from_bigints(num, den)?));
            }
        }
        self.pos = save;
        Ok(ParamExpr::Rational(Scalar::from_bigints(num, BigInt::from(1))?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn env(pairs: &[(&str, i64)]) -> Assignment {
        pairs.iter().map(|(n, v)| (n.to_string(), Scalar::from_int(*v))).collect()
    }

    #[test]
    fn literal_half() {
        assert_eq!(parse_expr("1/2").unwrap(), ParamExpr::Rational(Scalar::ratio(1, 2).unwrap()));
    }

    #[test]
    fn product_quotient_of_parameters() {
        let e = parse_expr("r1*r4/r2").unwrap();
        assert_eq!(e.eval(&env(&[("r1", 1), ("r4", 2), ("r2", 3)])).unwrap(), Scalar::ratio(2, 3).unwrap());
        assert_eq!(e.params().into_iter().collect::<Vec<_>>(), ["r1", "r2", "r4"]);
    }

    #[test]
    fn division_by_zero_at_evaluation() {
        let e = parse_expr("r1/(r2-r2)").unwrap();
        for v in [-3, 0, 7] {
            assert_eq!(e.eval(&env(&[("r1", v), ("r2", v)])), Err(Error::DivisionByZero));
        }
    }

    #[test]
    fn precedence_and_unary_minus() {
        let e = parse_expr(" - 2 * r + 3 / 4 - -(r - 1) ").unwrap();
        // −2r + 3/4 + r − 1 at r = 5 → −10 + 3/4 + 4 = −21/4
        assert_eq!(e.eval(&env(&[("r", 5)])).unwrap(), Scalar::ratio(-21, 4).unwrap());
        assert_eq!(parse_expr("1/2/4").unwrap().eval(&Assignment::new()).unwrap(), Scalar::ratio(1, 8).unwrap());
        assert_eq!(parse_expr("r10").unwrap(), ParamExpr::Param("r10".into()));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        for (text, pos) in [("1 +", 3), ("(1", 2), ("2 $ 3", 2), ("", 0), ("1 2", 2)] {
            match parse_expr(text) {
                Err(Error::Parse { pos: p, .. }) => assert_eq!(p, pos, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
        assert_eq!(parse_expr("3/0"), Err(Error::DivisionByZero));
    }

    #[test]
    fn unbound_parameter() {
        assert_eq!(parse_expr("r1 + r2").unwrap().eval(&env(&[("r1", 1)])), Err(Error::UnboundParameter("r2".into())));
    }

    fn arb_expr() -> impl Strategy<Value = (String, i64)> {
        let leaf = (-9i64..=9).prop_map(|v| if v < 0 { (format!("({v})"), v) } else { (v.to_string(), v) });
        leaf.prop_recursive(4, 32, 2, |inner| {
            (inner.clone(), inner, 0..3u8).prop_map(|((a, x), (b, y), op)| match op {
                0 => (format!("({a} + {b})"), x + y),
                1 => (format!("({a} - {b})"), x - y),
                _ => (format!("{a} * {b}"), x * y),
            })
        })
    }

    proptest! {
        #[test]
        fn integer_arithmetic_matches_machine((text, value) in arb_expr()) {
            prop_assert_eq!(parse_expr(&text).unwrap().eval(&Assignment::new()).unwrap(), Scalar::from_int(value));
        }

        #[test]
        fn display_reparses_to_same_value((text, _) in arb_expr()) {
            let e = parse_expr(&text).unwrap();
            let again = parse_expr(&e.to_string()).unwrap();
            prop_assert_eq!(again.eval(&Assignment::new()).unwrap(), e.eval(&Assignment::new()).unwrap());
        }
    }
}
