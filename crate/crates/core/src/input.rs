//! Parametrization files. Each component is a polynomial in `t` with integer
//! or rational (`a/b`) coefficients, using `+ - * ^` and parentheses.
//! Components are separated by `;` or newlines and `#` starts a comment.

use crate::error::{ParseError, Result};
use crate::param::{make_param, ProjParam};
use crate::poly::{Rational, Ring, UniPoly};

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub text: String,
    pub line: usize,
    pub column: usize,
    pub poly: UniPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputDoc {
    pub components: Vec<Component>,
}

impl InputDoc {
    pub fn polys(&self) -> Vec<UniPoly> {
        self.components.iter().map(|c| c.poly.clone()).collect()
    }

    pub fn sources(&self) -> Vec<String> {
        self.components.iter().map(|c| c.text.clone()).collect()
    }

    /// The parametrization, with common factors removed.
    pub fn param(&self) -> Result<ProjParam> {
        make_param(self.polys())
    }
}

pub fn parse_input(text: &str) -> Result<InputDoc, ParseError> {
    let mut components = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let chars: Vec<char> = raw.chars().take_while(|&c| c != '#').collect();
        if chars.iter().all(|c| c.is_whitespace()) {
            continue;
        }
        let mut segments = Vec::new();
        let mut start = 0;
        for (i, &c) in chars.iter().enumerate() {
            if c == ';' {
                segments.push((start, i));
                start = i + 1;
            }
        }
        segments.push((start, chars.len()));
        let last = segments.len() - 1;
        for (k, &(a, b)) in segments.iter().enumerate() {
            let seg = &chars[a..b];
            if seg.iter().all(|c| c.is_whitespace()) {
                // a single `;` may end a line
                if k == last && k > 0 {
                    continue;
                }
                return Err(ParseError::EmptyComponent { line, column: a + 1 });
            }
            let poly = Parser::new(seg, line, a + 1).parse()?;
            components.push(Component {
                text: seg.iter().collect::<String>().trim().to_string(),
                line,
                column: a + 1,
                poly,
            });
        }
    }
    Ok(InputDoc { components })
}

/// Parses a single polynomial in `t`.
pub fn parse_poly(text: &str) -> Result<UniPoly, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    Parser::new(&chars, 1, 1).parse()
}

struct Parser<'a> {
    chars: &'a [char],
    pos: usize,
    line: usize,
    column: usize,
}

impl<'a> Parser<'a> {
    fn new(chars: &'a [char], line: usize, column: usize) -> Self {
        Self {
            chars,
            pos: 0,
            line,
            column,
        }
    }

    fn parse(mut self) -> Result<UniPoly, ParseError> {
        let p = self.expr()?;
        self.ws();
        match self.peek() {
            None => Ok(p),
            Some(c) if c.is_alphanumeric() || c == '(' => Err(self.syntax(format!("expected `*` before `{c}`"))),
            Some(c) => Err(self.syntax(format!("unexpected `{c}`"))),
        }
    }

    fn syntax(&self, message: String) -> ParseError {
        ParseError::Syntax {
            line: self.line,
            column: self.column + self.pos,
            message,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<UniPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            self.ws();
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<UniPoly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            self.ws();
            if self.peek() != Some('*') {
                return Ok(acc);
            }
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
    }

    fn unary(&mut self) -> Result<UniPoly, ParseError> {
        self.ws();
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<UniPoly, ParseError> {
        let base = self.atom()?;
        self.ws();
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        self.ws();
        let at = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.syntax("expected a nonnegative integer exponent".into()));
        }
        match digits.parse::<usize>() {
            Ok(n) if n <= MAX_EXPONENT => Ok(base.pow(n)),
            _ => {
                self.pos = at;
                Err(self.syntax(format!("exponent exceeds {MAX_EXPONENT}")))
            }
        }
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn atom(&mut self) -> Result<UniPoly, ParseError> {
        self.ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num: Rational = Rational::from_integer(self.digits().parse().unwrap());
                self.ws();
                if self.peek() != Some('/') {
                    return Ok(UniPoly::constant(num));
                }
                self.pos += 1;
                self.ws();
                let at = self.pos;
                let den = self.digits();
                if den.is_empty() {
                    return Err(self.syntax("expected an integer denominator".into()));
                }
                let den: Rational = Rational::from_integer(den.parse().unwrap());
                if den.is_zero() {
                    self.pos = at;
                    return Err(self.syntax("zero denominator".into()));
                }
                Ok(UniPoly::constant(num / den))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                if name == "t" {
                    Ok(UniPoly::x())
                } else {
                    Err(ParseError::WrongVariable {
                        line: self.line,
                        column: self.column + start,
                        found: name,
                    })
                }
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.ws();
                if self.peek() != Some(')') {
                    return Err(self.syntax("expected `)`".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) => Err(self.syntax(format!("unexpected `{c}`"))),
            None => Err(self.syntax("unexpected end of component".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ring::ratio;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn ellipse_line() {
        let doc = parse_input("t^2-1; t^2-t; t^2+1").unwrap();
        assert_eq!(doc.polys(), vec![p(&[-1, 0, 1]), p(&[0, -1, 1]), p(&[1, 0, 1])]);
        assert_eq!(doc.param().unwrap().degree(), 2);
        assert_eq!(doc.sources(), vec!["t^2-1", "t^2-t", "t^2+1"]);
    }

    #[test]
    fn newlines_comments_and_trailing_separator() {
        let doc = parse_input("# nodal cubic\nt^2 - 1;\n\nt^3 - t   # y\n1\n").unwrap();
        assert_eq!(doc.polys(), vec![p(&[-1, 0, 1]), p(&[0, -1, 0, 1]), p(&[1])]);
        assert_eq!((doc.components[1].line, doc.components[1].column), (4, 1));
    }

    #[test]
    fn arithmetic() {
        assert_eq!(parse_poly("-(t+1)^2 * 3/2").unwrap(), p(&[-1, -2, -1]).scale(&ratio(3, 2)));
        assert_eq!(parse_poly("t - -t").unwrap(), p(&[0, 2]));
        assert_eq!(parse_poly("2^3*t^0").unwrap(), p(&[8]));
        assert_eq!(parse_poly("1/3 t").unwrap_err().to_string(), "1:5: expected `*` before `t`");
    }

    #[test]
    fn empty_component() {
        assert_eq!(
            parse_input("t^2 - 1;;"),
            Err(ParseError::EmptyComponent { line: 1, column: 9 })
        );
        assert!(matches!(parse_input(";t"), Err(ParseError::EmptyComponent { column: 1, .. })));
    }

    #[test]
    fn wrong_variable() {
        assert_eq!(
            parse_input("x^2-1; t; 1"),
            Err(ParseError::WrongVariable {
                line: 1,
                column: 1,
                found: "x".into()
            })
        );
        assert!(matches!(parse_input("t\n2*tt"), Err(ParseError::WrongVariable { line: 2, column: 3, .. })));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = |s: &str| parse_poly(s).unwrap_err().to_string();
        assert_eq!(err("2t"), "1:2: expected `*` before `t`");
        assert_eq!(err("t +"), "1:4: unexpected end of component");
        assert_eq!(err("(t"), "1:3: expected `)`");
        assert_eq!(err("1/0"), "1:3: zero denominator");
        assert_eq!(err("t^x"), "1:3: expected a nonnegative integer exponent");
        assert_eq!(err("t^99999"), "1:3: exponent exceeds 4096");
        assert_eq!(err("1.5"), "1:2: unexpected `.`");
    }
}
