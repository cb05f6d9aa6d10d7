//! Recursive-descent parser for tangle expressions.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor ('*' factor)*
//! factor := '1/' factor | base ('#' knotid)*
//! base   := '[' nat ']' | '[inf]' | '[0]' | '(' expr ')' | 'rep(' expr ',' nat ')'
//! knotid := 'K1' .. 'K6'
//! ```
//!
//! Whitespace is insignificant. `+` and `*` associate to the left.

use thiserror::Error;

use super::{KnotClass, TangleExpr};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid value at {pos}: {msg}")]
    Value { pos: usize, msg: String },
}

pub fn parse(text: &str) -> Result<TangleExpr, ParseError> {
    let mut p = Parser {
        src: text,
        pos: 0,
        last_base_was_parenthesized: false,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.syntax("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    // `1/([n])` stays a plain inverse; only `1/[n]` becomes InvTwist.
    last_base_was_parenthesized: bool,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn syntax(&self, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    /// Consumes `tok` (after whitespace) if present.
    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<(), ParseError> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.syntax(format!("expected '{tok}'")))
        }
    }

    /// A possibly signed integer literal; the sign is rejected by callers
    /// with a value error rather than a syntax error.
    fn integer(&mut self) -> Result<(usize, i128), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let negative = self.rest().starts_with('-');
        if negative {
            self.pos += 1;
            self.skip_ws();
        }
        let digits: String = self.rest().chars().take_while(char::is_ascii_digit).collect();
        if digits.is_empty() {
            self.pos = start;
            return Err(self.syntax("expected a number"));
        }
        self.pos += digits.len();
        let value: i128 = digits.parse().map_err(|_| ParseError::Value {
            pos: start,
            msg: format!("number {digits} is too large"),
        })?;
        Ok((start, if negative { -value } else { value }))
    }

    fn nat(&mut self) -> Result<(usize, u32), ParseError> {
        let (start, v) = self.integer()?;
        if v < 0 {
            return Err(ParseError::Value {
                pos: start,
                msg: format!("{v} is negative"),
            });
        }
        let v = u32::try_from(v).map_err(|_| ParseError::Value {
            pos: start,
            msg: format!("{v} is too large"),
        })?;
        Ok((start, v))
    }

    fn expr(&mut self) -> Result<TangleExpr, ParseError> {
        let mut lhs = self.term()?;
        while self.eat("+") {
            lhs = TangleExpr::hsum(lhs, self.term()?);
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<TangleExpr, ParseError> {
        let mut lhs = self.factor()?;
        while self.eat("*") {
            lhs = TangleExpr::vsum(lhs, self.factor()?);
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<TangleExpr, ParseError> {
        if self.eat("1/") {
            let inner = self.factor()?;
            return Ok(match inner {
                TangleExpr::Twist(n) if !self.last_base_was_parenthesized => TangleExpr::InvTwist(n),
                other => TangleExpr::inverse(other),
            });
        }
        let mut e = self.base()?;
        while self.eat("#") {
            self.skip_ws();
            let id: String = self.rest().chars().take(2).collect();
            let k: KnotClass = id.parse().map_err(|msg: String| self.syntax(msg))?;
            self.pos += id.len();
            e = TangleExpr::connect(e, k);
        }
        Ok(e)
    }

    fn base(&mut self) -> Result<TangleExpr, ParseError> {
        self.last_base_was_parenthesized = false;
        if self.eat("(") {
            let e = self.expr()?;
            self.expect(")")?;
            self.last_base_was_parenthesized = true;
            return Ok(e);
        }
        if self.eat("rep") {
            self.expect("(")?;
            let e = self.expr()?;
            self.expect(",")?;
            let (_, n) = self.nat()?;
            self.expect(")")?;
            return Ok(TangleExpr::rep(e, n));
        }
        if self.eat("[") {
            let e = if self.eat("inf") || self.eat("∞") {
                TangleExpr::Infinity
            } else {
                match self.nat()? {
                    (_, 0) => TangleExpr::Zero,
                    (_, n) => TangleExpr::Twist(n),
                }
            };
            self.expect("]")?;
            return Ok(e);
        }
        Err(self.syntax("expected '[', '(', '1/' or 'rep('"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use TangleExpr::*;

    fn b(e: TangleExpr) -> Box<TangleExpr> {
        Box::new(e)
    }

    #[test]
    fn grammar_examples() {
        assert_eq!(parse("[1]*[2]").unwrap(), VSum(b(Twist(1)), b(Twist(2))));
        assert_eq!(
            parse("[1]+1/[2]+[1]").unwrap(),
            HSum(b(HSum(b(Twist(1)), b(InvTwist(2)))), b(Twist(1)))
        );
        assert_eq!(
            parse("rep([1]#K1, 3)").unwrap(),
            Rep(b(ConnectKnot(b(Twist(1)), KnotClass::K1)), 3)
        );
    }

    #[test]
    fn precedence() {
        // 1/ binds tighter than #, which binds tighter than *, then +
        assert_eq!(
            parse("[1]+[2]*[3]").unwrap(),
            HSum(b(Twist(1)), b(VSum(b(Twist(2)), b(Twist(3)))))
        );
        assert_eq!(
            parse("1/[2]#K1").unwrap(),
            Inverse(b(ConnectKnot(b(Twist(2)), KnotClass::K1)))
        );
        assert_eq!(
            parse("[1]*[2]#K3*[1]").unwrap(),
            VSum(b(VSum(b(Twist(1)), b(ConnectKnot(b(Twist(2)), KnotClass::K3)))), b(Twist(1)))
        );
        assert_eq!(parse("1/([2])").unwrap(), Inverse(b(Twist(2))));
        assert_eq!(parse("1/1/[2]").unwrap(), Inverse(b(InvTwist(2))));
    }

    #[test]
    fn atoms_and_whitespace() {
        assert_eq!(parse(" [ 0 ] ").unwrap(), Zero);
        assert_eq!(parse("[inf]").unwrap(), Infinity);
        assert_eq!(parse("[∞]").unwrap(), Infinity);
        assert_eq!(parse("rep ( [2] , 0 )").unwrap(), Rep(b(Twist(2)), 0));
        assert_eq!(parse("[1]#K2#K1").unwrap(), ConnectKnot(b(ConnectKnot(b(Twist(1)), KnotClass::K2)), KnotClass::K1));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse("[-1]"), Err(ParseError::Value { pos: 1, .. })));
        assert!(matches!(parse("rep([1], -2)"), Err(ParseError::Value { .. })));
        assert!(matches!(parse("[99999999999]"), Err(ParseError::Value { .. })));
        assert!(matches!(parse("[1]+"), Err(ParseError::Syntax { pos: 4, .. })));
        assert!(matches!(parse("[1] [2]"), Err(ParseError::Syntax { pos: 4, .. })));
        assert!(matches!(parse("[1]#K7"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse("([1]"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse(""), Err(ParseError::Syntax { pos: 0, .. })));
        assert!(matches!(parse("[x]"), Err(ParseError::Syntax { .. })));
    }
}
