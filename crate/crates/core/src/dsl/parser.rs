use super::{BinOp, DslError, Expr, UnaryOp};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Bin(BinOp),
    Tilde,
    Bang,
    Hash,
    LParen,
    RParen,
    LAngle,
    RAngle,
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> DslError {
    DslError::Syntax { line, column, message: message.into() }
}

fn lex(src: &str) -> Result<Vec<Token>, DslError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_digit() || (c == '.' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) {
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            if i < chars.len() && matches!(chars[i], 'e' | 'E') {
                let mut j = i + 1;
                if j < chars.len() && matches!(chars[j], '+' | '-') {
                    j += 1;
                }
                if j < chars.len() && chars[j].is_ascii_digit() {
                    i = j;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
            }
            let text: String = chars[start..i].iter().collect();
            let v: f64 = text.parse().map_err(|_| syntax(tl, tc, format!("bad number '{text}'")))?;
            Tok::Num(v)
        } else if c.is_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else {
            i += 1;
            match c {
                '+' => Tok::Bin(BinOp::Add),
                '-' => Tok::Bin(BinOp::Sub),
                '&' => Tok::Bin(BinOp::Join),
                '^' => Tok::Bin(BinOp::Wedge),
                '|' => Tok::Bin(BinOp::Contract),
                '*' => Tok::Bin(BinOp::Product),
                '~' => Tok::Tilde,
                '!' => Tok::Bang,
                '#' => Tok::Hash,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '<' => Tok::LAngle,
                '>' => Tok::RAngle,
                other => return Err(syntax(tl, tc, format!("unexpected character '{other}'"))),
            }
        };
        col += i - start;
        out.push(Token { tok, line: tl, column: tc });
    }
    out.push(Token { tok: Tok::End, line, column: col });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, message: impl Into<String>) -> DslError {
        let t = self.peek();
        syntax(t.line, t.column, message)
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<Token, DslError> {
        if self.peek().tok == tok {
            Ok(self.next())
        } else {
            Err(self.error_here(format!("expected {what}")))
        }
    }

    // precedence climbing over left-associative binary operators
    fn binary(&mut self, min_prec: u8) -> Result<Expr, DslError> {
        let mut lhs = self.unary()?;
        while let Tok::Bin(op) = self.peek().tok {
            let p = op.precedence();
            if p < min_prec {
                break;
            }
            self.next();
            let rhs = self.binary(p + 1)?;
            lhs = Expr::binary(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, DslError> {
        let op = match self.peek().tok {
            Tok::Tilde => Some(UnaryOp::Reverse),
            Tok::Bang => Some(UnaryOp::Dual),
            Tok::Hash => Some(UnaryOp::Polarity),
            Tok::Bin(BinOp::Sub) => Some(UnaryOp::Neg),
            _ => None,
        };
        if let Some(op) = op {
            self.next();
            return Ok(Expr::unary(op, self.unary()?));
        }
        let mut e = self.primary()?;
        loop {
            let op = match self.peek().tok {
                Tok::Tilde => UnaryOp::Reverse,
                Tok::Bang => UnaryOp::Dual,
                Tok::Hash => UnaryOp::Polarity,
                _ => break,
            };
            self.next();
            e = Expr::unary(op, e);
        }
        Ok(e)
    }

    fn primary(&mut self) -> Result<Expr, DslError> {
        let t = self.next();
        match t.tok {
            Tok::Num(v) => Ok(Expr::Num(v)),
            Tok::Ident(s) => Ok(Expr::Ident(s)),
            Tok::LParen => {
                let e = self.binary(0)?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Tok::LAngle => {
                let e = self.binary(0)?;
                self.expect(Tok::RAngle, "'>' closing a grade selection")?;
                let k = self.next();
                match k.tok {
                    Tok::Num(v) if v.fract() == 0.0 && (0.0..=64.0).contains(&v) => {
                        Ok(Expr::Grade(Box::new(e), v as usize))
                    }
                    _ => Err(syntax(k.line, k.column, "expected a grade number after '>'")),
                }
            }
            Tok::End => Err(syntax(t.line, t.column, "unexpected end of input")),
            other => Err(syntax(t.line, t.column, format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses an expression.
pub fn parse(src: &str) -> Result<Expr, DslError> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let e = p.binary(0)?;
    if p.peek().tok != Tok::End {
        return Err(p.error_here("unexpected trailing input"));
    }
    Ok(e)
}
