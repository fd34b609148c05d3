//! Line-oriented tokenizer with position tracking. `#` starts a comment
//! that runs to the end of the line.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(i64),
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Colon,
    /// `->`
    Arrow,
    /// `=>`
    FatArrow,
    /// `=`
    Equals,
    /// `==`
    EqEq,
    Plus,
    Dot,
    Newline,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "{s}"),
            Tok::Int(n) => write!(f, "{n}"),
            Tok::LBracket => write!(f, "["),
            Tok::RBracket => write!(f, "]"),
            Tok::LParen => write!(f, "("),
            Tok::RParen => write!(f, ")"),
            Tok::Comma => write!(f, ","),
            Tok::Colon => write!(f, ":"),
            Tok::Arrow => write!(f, "->"),
            Tok::FatArrow => write!(f, "=>"),
            Tok::Equals => write!(f, "="),
            Tok::EqEq => write!(f, "=="),
            Tok::Plus => write!(f, "+"),
            Tok::Dot => write!(f, "."),
            Tok::Newline => write!(f, "\\n"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LexError {
    pub pos: Pos,
    pub message: String,
}

impl fmt::Display for LexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.pos.line, self.pos.col, self.message)
    }
}

pub fn lex(text: &str) -> Result<Vec<Token>, LexError> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        let start_len = out.len();
        while i < chars.len() {
            let c = chars[i];
            let pos = Pos {
                line: line_no,
                col: i + 1,
            };
            match c {
                '#' => break,
                ' ' | '\t' | '\r' => {
                    i += 1;
                }
                '[' => {
                    out.push(Token { tok: Tok::LBracket, pos });
                    i += 1;
                }
                ']' => {
                    out.push(Token { tok: Tok::RBracket, pos });
                    i += 1;
                }
                '(' => {
                    out.push(Token { tok: Tok::LParen, pos });
                    i += 1;
                }
                ')' => {
                    out.push(Token { tok: Tok::RParen, pos });
                    i += 1;
                }
                ',' => {
                    out.push(Token { tok: Tok::Comma, pos });
                    i += 1;
                }
                ':' => {
                    out.push(Token { tok: Tok::Colon, pos });
                    i += 1;
                }
                '+' => {
                    out.push(Token { tok: Tok::Plus, pos });
                    i += 1;
                }
                '.' => {
                    out.push(Token { tok: Tok::Dot, pos });
                    i += 1;
                }
                '=' => {
                    if chars.get(i + 1) == Some(&'=') {
                        out.push(Token { tok: Tok::EqEq, pos });
                        i += 2;
                    } else if chars.get(i + 1) == Some(&'>') {
                        out.push(Token { tok: Tok::FatArrow, pos });
                        i += 2;
                    } else {
                        out.push(Token { tok: Tok::Equals, pos });
                        i += 1;
                    }
                }
                '-' => {
                    if chars.get(i + 1) == Some(&'>') {
                        out.push(Token { tok: Tok::Arrow, pos });
                        i += 2;
                    } else if chars.get(i + 1).is_some_and(|d| d.is_ascii_digit()) {
                        let mut j = i + 1;
                        while j < chars.len() && chars[j].is_ascii_digit() {
                            j += 1;
                        }
                        let s: String = chars[i..j].iter().collect();
                        let n = s.parse::<i64>().map_err(|_| LexError {
                            pos,
                            message: format!("integer literal `{s}` out of range"),
                        })?;
                        out.push(Token { tok: Tok::Int(n), pos });
                        i = j;
                    } else {
                        return Err(LexError {
                            pos,
                            message: "stray `-` (expected `->` or a negative integer)".into(),
                        });
                    }
                }
                d if d.is_ascii_digit() => {
                    let mut j = i;
                    while j < chars.len() && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                    let s: String = chars[i..j].iter().collect();
                    let n = s.parse::<i64>().map_err(|_| LexError {
                        pos,
                        message: format!("integer literal `{s}` out of range"),
                    })?;
                    out.push(Token { tok: Tok::Int(n), pos });
                    i = j;
                }
                a if a.is_ascii_alphabetic() || a == '_' => {
                    let mut j = i;
                    while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                        j += 1;
                    }
                    out.push(Token {
                        tok: Tok::Ident(chars[i..j].iter().collect()),
                        pos,
                    });
                    i = j;
                }
                other => {
                    return Err(LexError {
                        pos,
                        message: format!("unexpected character `{other}`"),
                    })
                }
            }
        }
        if out.len() > start_len {
            out.push(Token {
                tok: Tok::Newline,
                pos: Pos {
                    line: line_no,
                    col: chars.len() + 1,
                },
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexes_declaration_line() {
        let toks = lex("category C3 = poset chain 3 # comment").unwrap();
        let kinds: Vec<&Tok> = toks.iter().map(|t| &t.tok).collect();
        assert_eq!(
            kinds,
            vec![
                &Tok::Ident("category".into()),
                &Tok::Ident("C3".into()),
                &Tok::Equals,
                &Tok::Ident("poset".into()),
                &Tok::Ident("chain".into()),
                &Tok::Int(3),
                &Tok::Newline,
            ]
        );
    }

    #[test]
    fn distinguishes_arrows_and_negatives() {
        let toks = lex("a -> b => c == -1 = 2").unwrap();
        let kinds: Vec<&Tok> = toks.iter().map(|t| &t.tok).collect();
        assert_eq!(
            kinds,
            vec![
                &Tok::Ident("a".into()),
                &Tok::Arrow,
                &Tok::Ident("b".into()),
                &Tok::FatArrow,
                &Tok::Ident("c".into()),
                &Tok::EqEq,
                &Tok::Int(-1),
                &Tok::Equals,
                &Tok::Int(2),
                &Tok::Newline,
            ]
        );
    }

    #[test]
    fn reports_position_of_bad_character() {
        let err = lex("category C = ?").unwrap_err();
        assert_eq!(err.pos.line, 1);
        assert_eq!(err.pos.col, 14);
    }
}
