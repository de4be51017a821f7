//! Recursive-descent parser. The grammar is documented in `GRAMMAR.md`.

use weakll_core::{Scalar, SeqVariant};

use crate::ast::*;
use crate::error::{DslError, Result};
use crate::lexer::{lex, Tok, Token};

pub fn parse(src: &str) -> Result<Program> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let mut items = Vec::new();
    while p.peek() != &Tok::Eof {
        items.push(p.item()?);
    }
    Ok(Program { items })
}

/// Parses a single space expression, e.g. `bang(base 2, 3)`.
pub fn parse_space(src: &str) -> Result<SpaceAst> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let s = p.space()?;
    p.expect_eof()?;
    Ok(s)
}

pub fn parse_formula(src: &str) -> Result<FormulaAst> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let f = p.formula()?;
    p.expect_eof()?;
    Ok(f)
}

pub fn parse_morph(src: &str) -> Result<MorphAst> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let m = p.morph()?;
    p.expect_eof()?;
    Ok(m)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

const SPACE_BINARY: &[&str] = &["tensor", "par", "prod", "coprod", "hom"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn span(&self) -> Span {
        self.toks[self.pos].span
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, expected: &str) -> Result<T> {
        Err(DslError::Syntax {
            span: self.span(),
            message: format!("expected {expected}, found {}", self.peek().describe()),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == &Tok::Sym(c) {
            self.next();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(&format!("`{c}`"))
        }
    }

    fn expect_eof(&self) -> Result<()> {
        if self.peek() == &Tok::Eof {
            Ok(())
        } else {
            self.error("end of input")
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.next();
                Ok(s)
            }
            _ => self.error("an identifier"),
        }
    }


    fn int(&mut self) -> Result<usize> {
        match self.peek().clone() {
            Tok::Int(s) => {
                let span = self.span();
                self.next();
                s.parse().map_err(|_| DslError::Syntax { span, message: format!("integer `{s}` is too large") })
            }
            _ => self.error("an integer"),
        }
    }

    fn item(&mut self) -> Result<Item> {
        let span = self.span();
        let kw = match self.peek() {
            Tok::Ident(s) if ["space", "let", "formula", "input"].contains(&s.as_str()) => s.clone(),
            _ => return self.error("`space`, `let`, `formula` or `input`"),
        };
        self.next();
        let name = self.ident()?;
        let item = match kw.as_str() {
            "space" => {
                self.expect('=')?;
                Item::Space { name, space: self.space()?, span }
            }
            "let" => {
                self.expect('=')?;
                Item::Let { name, expr: self.morph()?, span }
            }
            "formula" => {
                self.expect('=')?;
                Item::Formula { name, formula: self.formula()?, span }
            }
            _ => {
                self.expect(':')?;
                Item::Input { name, ty: self.type_ast()?, span }
            }
        };
        self.expect(';')?;
        Ok(item)
    }

    // ------------------------------------------------------------ spaces

    fn space(&mut self) -> Result<SpaceAst> {
        let span = self.span();
        let name = self.ident()?;
        let kind = match name.as_str() {
            "base" => SpaceKind::Base(self.int()?),
            "dual" => {
                self.expect('(')?;
                let a = self.space()?;
                self.expect(')')?;
                SpaceKind::Dual(Box::new(a))
            }
            n if SPACE_BINARY.contains(&n) => {
                self.expect('(')?;
                let a = Box::new(self.space()?);
                self.expect(',')?;
                let b = Box::new(self.space()?);
                self.expect(')')?;
                match n {
                    "tensor" => SpaceKind::Tensor(a, b),
                    "par" => SpaceKind::Par(a, b),
                    "prod" => SpaceKind::Prod(a, b),
                    "coprod" => SpaceKind::Coprod(a, b),
                    _ => SpaceKind::Hom(a, b),
                }
            }
            "sympow" | "bang" | "bang1" => {
                self.expect('(')?;
                let a = Box::new(self.space()?);
                self.expect(',')?;
                let n = self.int()?;
                self.expect(')')?;
                match name.as_str() {
                    "sympow" => SpaceKind::SymPow(a, n),
                    "bang" => SpaceKind::Bang(a, n),
                    _ => SpaceKind::BangNonUnit(a, n),
                }
            }
            _ => SpaceKind::Named(name),
        };
        Ok(SpaceAst { kind, span })
    }

    fn type_ast(&mut self) -> Result<TypeAst> {
        let kw = self.ident()?;
        self.expect('(')?;
        let dom = self.space()?;
        self.expect(',')?;
        let cod = self.space()?;
        let ty = match kw.as_str() {
            "map" => TypeAst::Map(dom, cod),
            "seq" | "seq1" => {
                self.expect(',')?;
                let d = self.int()?;
                let v = if kw == "seq" { SeqVariant::Unit } else { SeqVariant::NonUnit };
                TypeAst::Seq(v, dom, cod, d)
            }
            _ => {
                self.pos -= 1;
                return self.error("`map`, `seq` or `seq1`");
            }
        };
        self.expect(')')?;
        Ok(ty)
    }

    // ------------------------------------------------------------ morphisms

    fn morph(&mut self) -> Result<MorphAst> {
        let span = self.span();
        let name = self.ident()?;
        let kind = match name.as_str() {
            "matrix" => {
                self.expect('[')?;
                let dom = self.space()?;
                self.expect(',')?;
                let cod = self.space()?;
                self.expect(']')?;
                MorphKind::Matrix { dom, cod, rows: self.rows()? }
            }
            "seq" | "seq1" if self.peek() == &Tok::Sym('[') => {
                self.expect('[')?;
                let dom = self.space()?;
                self.expect(',')?;
                let cod = self.space()?;
                self.expect(',')?;
                let degree = self.int()?;
                self.expect(']')?;
                self.expect('{')?;
                let mut blocks = vec![self.rows()?];
                while self.eat(',') {
                    blocks.push(self.rows()?);
                }
                self.expect('}')?;
                let variant = if name == "seq" { SeqVariant::Unit } else { SeqVariant::NonUnit };
                MorphKind::Seq { variant, dom, cod, degree, blocks }
            }
            _ if matches!(self.peek(), Tok::Sym('[') | Tok::Sym('(')) => {
                let mut params = Vec::new();
                if self.eat('[') {
                    params.push(self.param()?);
                    while self.eat(',') {
                        params.push(self.param()?);
                    }
                    self.expect(']')?;
                }
                let mut args = Vec::new();
                if self.eat('(') {
                    args.push(self.morph()?);
                    while self.eat(',') {
                        args.push(self.morph()?);
                    }
                    self.expect(')')?;
                }
                MorphKind::Apply { name, params, args }
            }
            _ => MorphKind::Var(name),
        };
        Ok(MorphAst { kind, span })
    }

    fn param(&mut self) -> Result<Param> {
        if matches!(self.peek(), Tok::Int(_)) {
            Ok(Param::Int(self.int()?))
        } else {
            Ok(Param::Space(self.space()?))
        }
    }

    /// `{ a, b; c, d }`
    fn rows(&mut self) -> Result<Vec<Vec<Scalar>>> {
        self.expect('{')?;
        let mut rows = vec![self.row()?];
        while self.eat(';') {
            rows.push(self.row()?);
        }
        self.expect('}')?;
        Ok(rows)
    }

    fn row(&mut self) -> Result<Vec<Scalar>> {
        let mut r = vec![self.scalar()?];
        while self.eat(',') {
            r.push(self.scalar()?);
        }
        Ok(r)
    }

    fn scalar(&mut self) -> Result<Scalar> {
        let span = self.span();
        let neg = self.eat('-');
        let num = match self.peek().clone() {
            Tok::Int(s) => {
                self.next();
                s
            }
            _ => return self.error("a number"),
        };
        let mut text = if neg { format!("-{num}") } else { num };
        if self.eat('/') {
            match self.peek().clone() {
                Tok::Int(s) => {
                    self.next();
                    text = format!("{text}/{s}");
                }
                _ => return self.error("a denominator"),
            }
        }
        text.parse().map_err(|e: weakll_core::Error| DslError::Syntax { span, message: e.to_string() })
    }

    // ------------------------------------------------------------ formulas
    //
    // additive level:       A + B, A & B        (left associative)
    // multiplicative level: A * B, A | B        (left associative)
    // prefix:               ~A, !A, ![D] A, ?A, dn A, up A, ↓A, ↑A
    // postfix:              A⊥

    fn formula(&mut self) -> Result<FormulaAst> {
        let mut left = self.multiplicative()?;
        loop {
            let span = self.span();
            let kind = if self.eat('+') {
                FormulaKind::Plus
            } else if self.eat('&') {
                FormulaKind::With
            } else {
                return Ok(left);
            };
            let right = self.multiplicative()?;
            left = FormulaAst { kind: kind(Box::new(left), Box::new(right)), span };
        }
    }

    fn multiplicative(&mut self) -> Result<FormulaAst> {
        let mut left = self.unary()?;
        loop {
            let span = self.span();
            let kind = if self.eat('*') {
                FormulaKind::Tensor
            } else if self.eat('|') {
                FormulaKind::Par
            } else {
                return Ok(left);
            };
            let right = self.unary()?;
            left = FormulaAst { kind: kind(Box::new(left), Box::new(right)), span };
        }
    }

    fn unary(&mut self) -> Result<FormulaAst> {
        let span = self.span();
        let kind = match self.peek().clone() {
            Tok::Sym('~') => {
                self.next();
                FormulaKind::Neg(Box::new(self.unary()?))
            }
            Tok::Sym(c @ ('!' | '?')) => {
                self.next();
                let d = if self.eat('[') {
                    let d = self.int()?;
                    self.expect(']')?;
                    Some(d)
                } else {
                    None
                };
                let a = Box::new(self.unary()?);
                if c == '!' {
                    FormulaKind::Bang(d, a)
                } else {
                    FormulaKind::WhyNot(d, a)
                }
            }
            Tok::Sym('↓') => {
                self.next();
                FormulaKind::ShiftDown(Box::new(self.unary()?))
            }
            Tok::Sym('↑') => {
                self.next();
                FormulaKind::ShiftUp(Box::new(self.unary()?))
            }
            Tok::Ident(s) if (s == "dn" || s == "up") && self.starts_formula(1) => {
                self.next();
                let a = Box::new(self.unary()?);
                if s == "dn" {
                    FormulaKind::ShiftDown(a)
                } else {
                    FormulaKind::ShiftUp(a)
                }
            }
            _ => return self.postfix(),
        };
        Ok(FormulaAst { kind, span })
    }

    fn starts_formula(&self, k: usize) -> bool {
        matches!(self.peek_at(k), Tok::Ident(_) | Tok::Sym('(' | '~' | '!' | '?' | '↓' | '↑'))
    }

    fn postfix(&mut self) -> Result<FormulaAst> {
        let mut a = self.primary()?;
        while self.peek() == &Tok::Sym('⊥') {
            let span = self.span();
            self.next();
            a = FormulaAst { kind: FormulaKind::Neg(Box::new(a)), span };
        }
        Ok(a)
    }

    fn primary(&mut self) -> Result<FormulaAst> {
        let span = self.span();
        if self.eat('(') {
            let f = self.formula()?;
            self.expect(')')?;
            return Ok(f);
        }
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.next();
                Ok(FormulaAst { kind: FormulaKind::Atom(s), span })
            }
            _ => self.error("a formula"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pos(e: DslError) -> (usize, usize) {
        let s = e.span().unwrap();
        (s.line, s.col)
    }

    #[test]
    fn space_declaration() {
        let p = parse("space E = base 2;").unwrap();
        assert_eq!(p.items.len(), 1);
        match &p.items[0] {
            Item::Space { name, space, .. } => {
                assert_eq!(name, "E");
                assert_eq!(space.kind, SpaceKind::Base(2));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn coder_application() {
        let p = parse("let d = coder[E,3];").unwrap();
        let Item::Let { expr, .. } = &p.items[0] else { panic!() };
        let MorphKind::Apply { name, params, args } = &expr.kind else { panic!() };
        assert_eq!(name, "coder");
        assert_eq!(params.len(), 2);
        assert_eq!(params[1], Param::Int(3));
        assert!(matches!(&params[0], Param::Space(SpaceAst { kind: SpaceKind::Named(n), .. }) if n == "E"));
        assert!(args.is_empty());
    }

    #[test]
    fn malformed_let_points_at_equals() {
        let e = parse("let = ;").unwrap_err();
        assert!(matches!(e, DslError::Syntax { .. }));
        assert_eq!(pos(e), (1, 5));
    }

    #[test]
    fn error_positions_across_lines() {
        let e = parse("space E = base 2;\nlet f = compose(a b);").unwrap_err();
        assert_eq!(pos(e), (2, 19));
    }

    #[test]
    fn literals() {
        let m = parse_morph("matrix[base 2, base 2]{1, -1/2; 0, 3}").unwrap();
        let MorphKind::Matrix { rows, .. } = &m.kind else { panic!() };
        assert_eq!(rows[0][1], Scalar::ratio(-1, 2).unwrap());
        let s = parse_morph("seq[base 1, base 1, 1]{{1}, {2}}").unwrap();
        assert!(matches!(s.kind, MorphKind::Seq { degree: 1, ref blocks, .. } if blocks.len() == 2));
    }

    #[test]
    fn formula_precedence_and_unicode() {
        let a = parse_formula("X ⊗ Y ⊕ Z⊥ ⅋ W").unwrap();
        let b = parse_formula("((X * Y) + (~Z | W))").unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_formula("↓(X ⊗ Y)").unwrap(), parse_formula("dn (X * Y)").unwrap());
        assert_eq!(parse_formula("![3] X").unwrap().kind, FormulaKind::Bang(Some(3), Box::new(FormulaAst::new(FormulaKind::Atom("X".into())))));
    }

    #[test]
    fn shift_keywords_are_atoms_when_alone() {
        assert_eq!(parse_formula("dn").unwrap().kind, FormulaKind::Atom("dn".into()));
    }
}
