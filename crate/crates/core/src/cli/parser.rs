//! Recursive-descent parser for input documents.
//!
//! ```text
//! document  := ring_decl ideal_decl
//! ring_decl := "ring" field "[" ident ("," ident)* "]" ";"
//! field     := "QQ" | "GF" "(" integer ")"
//! ideal_decl:= "ideal" "(" poly ("," poly)* ")" ";"
//! poly      := ["+"|"-"] term (("+"|"-") term)*
//! term      := integer | [integer "*"?] factor ("*" factor)*
//! factor    := ident ["^" integer]
//! ```
//!
//! Whitespace and `//` comments are skipped.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::coeffs::PrimeModulus;
use crate::error::{Error, Result};

use super::document::{FieldSpec, InputDocument, IntPoly};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '/' && chars.get(i + 1) == Some(&'/') {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let (start_line, start_col) = (line, col);
        let tok = if c.is_ascii_alphabetic() || c == '_' {
            let s: String = chars[i..]
                .iter()
                .take_while(|c| c.is_ascii_alphanumeric() || **c == '_')
                .collect();
            i += s.len();
            col += s.len();
            Tok::Ident(s)
        } else if c.is_ascii_digit() {
            let s: String = chars[i..]
                .iter()
                .take_while(|c| c.is_ascii_digit())
                .collect();
            i += s.len();
            col += s.len();
            Tok::Int(s.parse().expect("digits"))
        } else if "[](),;+-*^".contains(c) {
            i += 1;
            col += 1;
            Tok::Sym(c)
        } else {
            return Err(Error::Syntax {
                line,
                column: col,
                expected: format!("a token, found `{c}`"),
            });
        };
        out.push(Token {
            tok,
            line: start_line,
            column: start_col,
        });
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column: col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    vars: Vec<String>,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> Error {
        let t = self.peek();
        Error::Syntax {
            line: t.line,
            column: t.column,
            expected: expected.to_string(),
        }
    }

    fn is_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.is_sym(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&format!("`{c}`")))
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<()> {
        match &self.peek().tok {
            Tok::Ident(s) if s == kw => {
                self.bump();
                Ok(())
            }
            _ => Err(self.error(&format!("`{kw}`"))),
        }
    }

    fn ident(&mut self) -> Result<(String, usize, usize)> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Ident(s) => {
                self.bump();
                Ok((s, t.line, t.column))
            }
            _ => Err(self.error("an identifier")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        match &self.peek().tok {
            Tok::Int(n) => {
                let n = n.clone();
                self.bump();
                Ok(n)
            }
            _ => Err(self.error("an integer")),
        }
    }

    fn small_integer(&mut self, what: &str) -> Result<u64> {
        let t = self.peek().clone();
        let n = self.integer()?;
        n.to_u64().ok_or(Error::Syntax {
            line: t.line,
            column: t.column,
            expected: what.to_string(),
        })
    }

    fn field(&mut self) -> Result<FieldSpec> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Ident(s) if s == "QQ" => {
                self.bump();
                Ok(FieldSpec::Rational)
            }
            Tok::Ident(s) if s == "GF" => {
                self.bump();
                self.expect_sym('(')?;
                let p = self.small_integer("a prime modulus")?;
                PrimeModulus::new(p)?;
                self.expect_sym(')')?;
                Ok(FieldSpec::Prime(p))
            }
            _ => Err(self.error("`QQ` or `GF`")),
        }
    }

    fn ring_decl(&mut self) -> Result<FieldSpec> {
        self.expect_keyword("ring")?;
        let field = self.field()?;
        self.expect_sym('[')?;
        loop {
            let before = self.peek().clone();
            let (name, _, _) = self.ident()?;
            if self.vars.contains(&name) {
                return Err(Error::Syntax {
                    line: before.line,
                    column: before.column,
                    expected: format!("a new variable name, `{name}` is already declared"),
                });
            }
            self.vars.push(name);
            if self.is_sym(',') {
                self.bump();
                continue;
            }
            break;
        }
        self.expect_sym(']')?;
        self.expect_sym(';')?;
        Ok(field)
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<()> {
        let (name, line, column) = self.ident()?;
        let idx = self
            .vars
            .iter()
            .position(|v| *v == name)
            .ok_or(Error::UndeclaredVariable { name, line, column })?;
        let mut e = 1u32;
        if self.is_sym('^') {
            self.bump();
            let n = self.small_integer("an exponent below 2^32")?;
            e = u32::try_from(n).map_err(|_| self.error("an exponent below 2^32"))?;
        }
        exps[idx] = exps[idx]
            .checked_add(e)
            .ok_or_else(|| self.error("an exponent below 2^32"))?;
        Ok(())
    }

    fn term(&mut self) -> Result<(Vec<u32>, BigInt)> {
        let mut exps = vec![0u32; self.vars.len()];
        let mut coeff = BigInt::one();
        let mut need_factor = true;
        if let Tok::Int(_) = self.peek().tok {
            coeff = self.integer()?;
            need_factor = false;
            if self.is_sym('*') {
                self.bump();
                need_factor = true;
            }
        }
        if need_factor || matches!(self.peek().tok, Tok::Ident(_)) {
            self.factor(&mut exps)?;
            while self.is_sym('*') {
                self.bump();
                self.factor(&mut exps)?;
            }
        }
        Ok((exps, coeff))
    }

    fn poly(&mut self) -> Result<IntPoly> {
        let mut terms = Vec::new();
        let mut sign = BigInt::one();
        if self.is_sym('-') {
            self.bump();
            sign = -sign;
        } else if self.is_sym('+') {
            self.bump();
        }
        loop {
            let (e, c) = self.term()?;
            terms.push((e, sign * c));
            if self.is_sym('+') {
                self.bump();
                sign = BigInt::one();
            } else if self.is_sym('-') {
                self.bump();
                sign = -BigInt::one();
            } else {
                break;
            }
        }
        Ok(IntPoly::new(terms))
    }

    fn ideal_decl(&mut self) -> Result<Vec<IntPoly>> {
        self.expect_keyword("ideal")?;
        self.expect_sym('(')?;
        let mut gens = vec![self.poly()?];
        while self.is_sym(',') {
            self.bump();
            gens.push(self.poly()?);
        }
        if !self.is_sym(')') {
            return Err(self.error("`,` or `)`"));
        }
        self.bump();
        self.expect_sym(';')?;
        Ok(gens)
    }
}

/// Parses a document; errors carry 1-based line and column.
pub fn parse_input(text: &str) -> Result<InputDocument> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
        vars: Vec::new(),
    };
    let field = p.ring_decl()?;
    let generators = p.ideal_decl()?;
    if p.peek().tok != Tok::End {
        return Err(p.error("end of input"));
    }
    Ok(InputDocument {
        field,
        variables: p.vars,
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_cusp() {
        let doc = parse_input("ring QQ[x,y]; ideal (y^2 - x^3);").unwrap();
        assert_eq!(doc.field, FieldSpec::Rational);
        assert_eq!(doc.variables, vec!["x", "y"]);
        assert_eq!(doc.generators.len(), 1);
        assert_eq!(doc.to_string(), "ring QQ[x, y];\nideal (-x^3 + y^2);\n");
    }

    #[test]
    fn one_variable_and_constants() {
        let doc = parse_input("ring QQ[x]; ideal (x);").unwrap();
        assert_eq!(doc.variables, vec!["x"]);
        let zero = parse_input("ring QQ[x]; ideal (0);").unwrap();
        assert!(zero.generators[0].is_zero());
        let c =
            parse_input("ring GF(7)[a, b]; // comment\nideal (2a*b - 3, -a^2 + 10*b^3);").unwrap();
        assert_eq!(c.field, FieldSpec::Prime(7));
        assert_eq!(
            c.to_string(),
            "ring GF(7)[a, b];\nideal (2*a*b - 3, 10*b^3 - a^2);\n"
        );
    }

    #[test]
    fn errors_have_positions() {
        match parse_input("ring QQ[x,y]; ideal (y^2 - z);").unwrap_err() {
            Error::UndeclaredVariable { name, line, column } => {
                assert_eq!((name.as_str(), line, column), ("z", 1, 28));
            }
            other => panic!("unexpected {other:?}"),
        }
        match parse_input("ring QQ[x];\nideal (x + );").unwrap_err() {
            Error::Syntax { line, column, .. } => assert_eq!((line, column), (2, 12)),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            parse_input("ring GF(6)[x]; ideal (x);").unwrap_err(),
            Error::NonPrimeModulus(6)
        );
        assert!(matches!(
            parse_input("ring QQ[x,x]; ideal (x);"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_input("ring QQ[x]; ideal (x); extra"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_input("ring QQ[x]; ideal (x$);"),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn like_terms_merge() {
        let doc = parse_input("ring QQ[x, y]; ideal (x*y + y*x - 2*x*y + x);").unwrap();
        assert_eq!(doc.to_string(), "ring QQ[x, y];\nideal (x);\n");
    }
}
