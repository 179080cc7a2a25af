//! Term parser for the ASCII surface syntax.
//!
//! Connectives: `(+)` for truncated addition, `(.)` for the dual product,
//! `(-)` for truncated difference, `/\` and `\/` for meet and join,
//! `neg(t)` for negation, constants `0` and `1`, and variables as
//! identifiers. Binary connectives share one precedence level and
//! associate to the left; parentheses group.
//!
//! The grammar is LL(1) over the token stream; parse errors carry the
//! line/column of the offending token and the set of expected tokens.

use std::fmt;

use mvstates::MvTerm;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Token {
    Zero,
    One,
    Ident(String),
    Neg,
    LParen,
    RParen,
    OpPlus,
    OpDot,
    OpMinus,
    Meet,
    Join,
    Eof,
}

impl Token {
    fn name(&self) -> String {
        match self {
            Token::Zero => "`0`".into(),
            Token::One => "`1`".into(),
            Token::Ident(v) => format!("identifier `{v}`"),
            Token::Neg => "`neg`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::OpPlus => "`(+)`".into(),
            Token::OpDot => "`(.)`".into(),
            Token::OpMinus => "`(-)`".into(),
            Token::Meet => "`/\\`".into(),
            Token::Join => "`\\/`".into(),
            Token::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub found: String,
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}: found {}, expected {}",
            self.line,
            self.column,
            self.found,
            self.expected.join(" or ")
        )
    }
}

impl std::error::Error for ParseError {}

struct Spanned {
    token: Token,
    line: usize,
    column: usize,
}

fn lex(input: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    let mut line = 1;
    let mut column = 1;
    let bump = |c: char, line: &mut usize, column: &mut usize| {
        if c == '\n' {
            *line += 1;
            *column = 1;
        } else {
            *column += 1;
        }
    };
    while i < chars.len() {
        let c = chars[i];
        let (tline, tcolumn) = (line, column);
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                bump(c, &mut line, &mut column);
                i += 1;
            }
            '(' => {
                // Operator tokens (+) (.) (-) need two characters of
                // lookahead; everything else is a grouping paren.
                if i + 2 < chars.len() && chars[i + 2] == ')' {
                    let op = match chars[i + 1] {
                        '+' => Some(Token::OpPlus),
                        '.' => Some(Token::OpDot),
                        '-' => Some(Token::OpMinus),
                        _ => None,
                    };
                    if let Some(op) = op {
                        out.push(Spanned { token: op, line: tline, column: tcolumn });
                        for _ in 0..3 {
                            bump(chars[i], &mut line, &mut column);
                            i += 1;
                        }
                        continue;
                    }
                }
                out.push(Spanned { token: Token::LParen, line: tline, column: tcolumn });
                bump(c, &mut line, &mut column);
                i += 1;
            }
            ')' => {
                out.push(Spanned { token: Token::RParen, line: tline, column: tcolumn });
                bump(c, &mut line, &mut column);
                i += 1;
            }
            '/' | '\\' => {
                let pair: String = chars[i..(i + 2).min(chars.len())].iter().collect();
                let token = match pair.as_str() {
                    "/\\" => Token::Meet,
                    "\\/" => Token::Join,
                    _ => {
                        return Err(ParseError {
                            line: tline,
                            column: tcolumn,
                            found: format!("`{c}`"),
                            expected: vec!["`/\\`".into(), "`\\/`".into()],
                        })
                    }
                };
                out.push(Spanned { token, line: tline, column: tcolumn });
                for _ in 0..2 {
                    bump(chars[i], &mut line, &mut column);
                    i += 1;
                }
            }
            '0' => {
                out.push(Spanned { token: Token::Zero, line: tline, column: tcolumn });
                bump(c, &mut line, &mut column);
                i += 1;
            }
            '1' => {
                out.push(Spanned { token: Token::One, line: tline, column: tcolumn });
                bump(c, &mut line, &mut column);
                i += 1;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    bump(chars[i], &mut line, &mut column);
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                let token = if word == "neg" { Token::Neg } else { Token::Ident(word) };
                out.push(Spanned { token, line: tline, column: tcolumn });
            }
            other => {
                return Err(ParseError {
                    line: tline,
                    column: tcolumn,
                    found: format!("`{other}`"),
                    expected: vec!["a term".into()],
                });
            }
        }
    }
    out.push(Spanned { token: Token::Eof, line, column });
    Ok(out)
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.tokens[self.pos]
    }

    fn advance(&mut self) -> &Spanned {
        let t = &self.tokens[self.pos];
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: Vec<String>) -> ParseError {
        let t = self.peek();
        ParseError { line: t.line, column: t.column, found: t.token.name(), expected }
    }

    fn expect(&mut self, token: Token) -> Result<(), ParseError> {
        if self.peek().token == token {
            self.advance();
            Ok(())
        } else {
            Err(self.error(vec![token.name()]))
        }
    }

    /// expr := atom (binop atom)*
    fn expr(&mut self) -> Result<MvTerm, ParseError> {
        let mut acc = self.atom()?;
        loop {
            let op = match self.peek().token {
                Token::OpPlus => MvTerm::Oplus as fn(Box<MvTerm>, Box<MvTerm>) -> MvTerm,
                Token::OpDot => MvTerm::Odot,
                Token::OpMinus => MvTerm::Ominus,
                Token::Meet => MvTerm::Meet,
                Token::Join => MvTerm::Join,
                _ => break,
            };
            self.advance();
            let rhs = self.atom()?;
            acc = op(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    /// atom := `0` | `1` | ident | `neg` `(` expr `)` | `(` expr `)`
    fn atom(&mut self) -> Result<MvTerm, ParseError> {
        match self.peek().token.clone() {
            Token::Zero => {
                self.advance();
                Ok(MvTerm::Zero)
            }
            Token::One => {
                self.advance();
                Ok(MvTerm::One)
            }
            Token::Ident(name) => {
                self.advance();
                Ok(MvTerm::Var(name))
            }
            Token::Neg => {
                self.advance();
                self.expect(Token::LParen)?;
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(MvTerm::Neg(Box::new(inner)))
            }
            Token::LParen => {
                self.advance();
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            _ => Err(self.error(vec![
                "`0`".into(),
                "`1`".into(),
                "an identifier".into(),
                "`neg`".into(),
                "`(`".into(),
            ])),
        }
    }
}

pub fn parse_term(input: &str) -> Result<MvTerm, ParseError> {
    let tokens = lex(input)?;
    let mut parser = Parser { tokens, pos: 0 };
    let term = parser.expr()?;
    parser.expect(Token::Eof)?;
    Ok(term)
}
