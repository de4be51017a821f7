use crate::ast::Span;
use crate::error::{DslError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    /// Decimal digits, kept as text so literals of any size survive.
    Int(String),
    /// Punctuation. Unicode connectives are folded into their ASCII forms,
    /// except the postfix `⊥` and the shifts `↓`, `↑`.
    Sym(char),
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(s) => format!("`{s}`"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub span: Span,
}

const PUNCT: &str = ";=:,()[]{}*|&+!?~/-";

pub fn lex(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut col) = (1usize, 1usize);
    while let Some(&c) = chars.peek() {
        let span = Span { line, col };
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars<'_>>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
        } else if c == '#' || (c == '/' && src_peek2(&chars) == Some('/')) {
            while chars.peek().is_some_and(|&c| c != '\n') {
                bump(&mut chars);
            }
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                bump(&mut chars);
            }
            out.push(Token { tok: Tok::Int(s), span });
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_' || **d == '\'') {
                s.push(d);
                bump(&mut chars);
            }
            out.push(Token { tok: Tok::Ident(s), span });
        } else {
            let sym = match c {
                '⊗' => '*',
                '⅋' => '|',
                '⊕' => '+',
                '⊥' | '↓' | '↑' => c,
                c if PUNCT.contains(c) => c,
                other => {
                    return Err(DslError::Syntax { span, message: format!("unexpected character `{other}`") });
                }
            };
            bump(&mut chars);
            out.push(Token { tok: Tok::Sym(sym), span });
        }
    }
    out.push(Token { tok: Tok::Eof, span: Span { line, col } });
    Ok(out)
}

fn src_peek2(chars: &std::iter::Peekable<std::str::Chars<'_>>) -> Option<char> {
    let mut it = chars.clone();
    it.next();
    it.next()
}
