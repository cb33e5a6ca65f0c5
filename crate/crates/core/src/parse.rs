//! Form input and output: the expression grammar, builtin names, the
//! round-tripping printer and the LaTeX emitter.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | integer '/' integer | 'x' index | '(' expr ')'
//! ```
//!
//! Juxtaposition (`2x1`, `x1 x2`, `(x1)(x2)`) is rejected rather than read
//! as a product.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{self, Rational};
use crate::solution::ParametricSolution;
use crate::symfunc::{power_sum, SymmetricForm};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, column, message: message.into() }
}

fn lex(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let digits_from = |start: usize| {
        let mut j = start;
        while j < chars.len() && chars[j].is_ascii_digit() {
            j += 1;
        }
        (j, chars[start..j].iter().collect::<String>())
    };
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        let (tok, len) = match c {
            c if c.is_whitespace() => (None, 1),
            '0'..='9' => {
                let (j, digits) = digits_from(i);
                (Some(Tok::Num(digits.parse().expect("digits"))), j - i)
            }
            'x' => {
                let (j, digits) = digits_from(i + 1);
                if digits.is_empty() {
                    return Err(syntax(l0, c0, "expected a variable index after 'x'"));
                }
                let index: usize = digits.parse().map_err(|_| syntax(l0, c0, "variable index too large"))?;
                if index == 0 {
                    return Err(syntax(l0, c0, "variables are numbered from x1"));
                }
                (Some(Tok::Var(index - 1)), j - i)
            }
            '+' => (Some(Tok::Plus), 1),
            '-' | '−' => (Some(Tok::Minus), 1),
            '*' | '·' => (Some(Tok::Star), 1),
            '/' => (Some(Tok::Slash), 1),
            '^' => (Some(Tok::Caret), 1),
            '(' => (Some(Tok::LParen), 1),
            ')' => (Some(Tok::RParen), 1),
            other => return Err(syntax(l0, c0, format!("unexpected character {other:?}"))),
        };
        i += len;
        col += len;
        if let Some(tok) = tok {
            out.push(Token { tok, line: l0, column: c0 });
        }
    }
    out.push(Token { tok: Tok::End, line, column: col });
    Ok(out)
}

#[derive(Debug, Clone)]
enum Ast {
    Const(Rational),
    Var(usize),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Neg(Box<Ast>),
    Pow(Box<Ast>, u32),
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
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err_here(&self, message: impl Into<String>) -> Error {
        let t = self.peek();
        syntax(t.line, t.column, message)
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.next();
                    lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut lhs = self.unary()?;
        while self.peek().tok == Tok::Star {
            self.next();
            lhs = Ast::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Ast> {
        if self.peek().tok == Tok::Minus {
            self.next();
            return Ok(Ast::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Ast> {
        let base = self.atom()?;
        let out = if self.peek().tok == Tok::Caret {
            self.next();
            let t = self.next();
            match t.tok {
                Tok::Num(n) => {
                    let e: u32 = n
                        .try_into()
                        .ok()
                        .filter(|&e: &u32| e <= u16::MAX as u32)
                        .ok_or_else(|| syntax(t.line, t.column, "exponent out of range"))?;
                    Ast::Pow(Box::new(base), e)
                }
                _ => return Err(syntax(t.line, t.column, "expected a non-negative integer exponent")),
            }
        } else {
            base
        };
        if matches!(self.peek().tok, Tok::Num(_) | Tok::Var(_) | Tok::LParen) {
            return Err(self.err_here("implicit multiplication is not allowed; write '*'"));
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<Ast> {
        let t = self.next();
        match t.tok {
            Tok::Num(n) => {
                if self.peek().tok == Tok::Slash {
                    self.next();
                    let d = self.next();
                    match d.tok {
                        Tok::Num(den) if !den.is_zero() => Ok(Ast::Const(Rational::new(n, den))),
                        Tok::Num(_) => Err(syntax(d.line, d.column, "zero denominator")),
                        _ => Err(syntax(d.line, d.column, "expected an integer denominator")),
                    }
                } else {
                    Ok(Ast::Const(Rational::from_integer(n)))
                }
            }
            Tok::Var(i) => Ok(Ast::Var(i)),
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.next();
                if close.tok != Tok::RParen {
                    return Err(syntax(close.line, close.column, "expected ')'"));
                }
                Ok(inner)
            }
            Tok::End => Err(syntax(t.line, t.column, "unexpected end of input")),
            Tok::Slash => Err(syntax(t.line, t.column, "'/' is only allowed inside a rational literal")),
            other => Err(syntax(t.line, t.column, format!("unexpected {}", describe(&other)))),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Plus => "'+'",
        Tok::Minus => "'-'",
        Tok::Star => "'*'",
        Tok::Slash => "'/'",
        Tok::Caret => "'^'",
        Tok::LParen => "'('",
        Tok::RParen => "')'",
        Tok::Num(_) => "number",
        Tok::Var(_) => "variable",
        Tok::End => "end of input",
    }
}

fn max_var(a: &Ast) -> Option<usize> {
    match a {
        Ast::Const(_) => None,
        Ast::Var(i) => Some(*i),
        Ast::Add(x, y) | Ast::Sub(x, y) | Ast::Mul(x, y) => max_var(x).max(max_var(y)),
        Ast::Neg(x) | Ast::Pow(x, _) => max_var(x),
    }
}

fn build(a: &Ast, n: usize) -> Poly {
    match a {
        Ast::Const(c) => Poly::constant(n, c.clone()),
        Ast::Var(i) => Poly::var(n, *i),
        Ast::Add(x, y) => &build(x, n) + &build(y, n),
        Ast::Sub(x, y) => &build(x, n) - &build(y, n),
        Ast::Mul(x, y) => &build(x, n) * &build(y, n),
        Ast::Neg(x) => -&build(x, n),
        Ast::Pow(x, e) => build(x, n).pow(*e),
    }
}

/// Parses an expression over `x1..xN`. With `nvars = None` the ambient is
/// the largest index used.
pub fn parse_poly(src: &str, nvars: Option<usize>) -> Result<Poly> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let ast = p.expr()?;
    if p.peek().tok != Tok::End {
        return Err(p.err_here(format!("unexpected {}", describe(&p.peek().tok))));
    }
    let used = max_var(&ast).map_or(0, |i| i + 1);
    let n = match nvars {
        Some(n) if used > n => return Err(Error::VariableOutOfRange { index: used - 1, nvars: n }),
        Some(n) => n,
        None => used,
    };
    Ok(build(&ast, n))
}

/// Parses a symmetric form: homogeneity is checked first, then symmetry.
pub fn parse_form(src: &str, nvars: Option<usize>) -> Result<SymmetricForm> {
    SymmetricForm::new(parse_poly(src, nvars)?)
}

/// `diagonal:n:N` is `p_n` in `N` variables; `powersum-product:N:k1,k2,…`
/// is `p_k1 · p_k2 ⋯` in `N` variables. `None` if `name` is not a builtin.
pub fn builtin(name: &str) -> Option<Result<Poly>> {
    let bad = |msg: &str| Error::Malformed(format!("{name}: {msg}"));
    let count = |s: &str| s.trim().parse::<usize>().ok().filter(|&n| n > 0);
    if let Some(rest) = name.strip_prefix("diagonal:") {
        let parts: Vec<&str> = rest.split(':').collect();
        return Some(match parts.as_slice() {
            [n, nv] => match (count(n), count(nv)) {
                (Some(n), Some(nv)) => Ok(power_sum(n as u32, nv)),
                _ => Err(bad("expected diagonal:<degree>:<variables>")),
            },
            _ => Err(bad("expected diagonal:<degree>:<variables>")),
        });
    }
    if let Some(rest) = name.strip_prefix("powersum-product:") {
        let Some((nv, ks)) = rest.split_once(':') else {
            return Some(Err(bad("expected powersum-product:<variables>:<k1,k2,…>")));
        };
        let Some(nv) = count(nv) else { return Some(Err(bad("bad variable count"))) };
        let ks: Option<Vec<usize>> = ks.split(',').map(count).collect();
        return Some(match ks {
            Some(ks) if !ks.is_empty() => {
                Ok(ks.iter().fold(Poly::one(nv), |acc, &k| &acc * &power_sum(k as u32, nv)))
            }
            _ => Err(bad("bad exponent list")),
        });
    }
    None
}

fn var_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// Prints in the input grammar; `parse_poly(&to_expr(p), Some(p.nvars()))`
/// returns `p`.
pub fn to_expr(p: &Poly) -> String {
    p.display(&var_names(p.nvars())).to_string()
}

/// LaTeX rendering of a variable name: `c1` becomes `c_{1}`.
fn latex_name(name: &str) -> String {
    let split = name.find(|c: char| c.is_ascii_digit()).unwrap_or(name.len());
    let (stem, idx) = name.split_at(split);
    if idx.is_empty() {
        stem.to_string()
    } else {
        format!("{stem}_{{{idx}}}")
    }
}

fn latex_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

/// LaTeX for a polynomial with the given variable names.
pub fn latex_poly(p: &Poly, names: &[String]) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = c.abs();
        let mut factors = Vec::new();
        if !abs.is_one() || m.is_one() {
            factors.push(latex_rational(&abs));
        }
        for (v, e) in m.exponents().enumerate() {
            match e {
                0 => {}
                1 => factors.push(latex_name(&names[v])),
                _ => factors.push(format!("{}^{{{e}}}", latex_name(&names[v]))),
            }
        }
        out.push_str(&factors.join(" "));
    }
    out
}

/// Aligned display equations `x_i = f_i(params)`.
pub fn latex_solution(sol: &ParametricSolution) -> String {
    let mut out = String::from("\\begin{aligned}\n");
    let den = sol.denominator.as_ref().map(|d| latex_poly(d, &sol.params));
    for (i, p) in sol.solutions.iter().enumerate() {
        let body = latex_poly(p, &sol.params);
        let rhs = match &den {
            Some(d) if !p.is_zero() => format!("\\frac{{{body}}}{{{d}}}"),
            _ => body,
        };
        let sep = if i + 1 < sol.solutions.len() { " \\\\" } else { "" };
        out.push_str(&format!("  x_{{{}}} &= {rhs}{sep}\n", i + 1));
    }
    out.push_str("\\end{aligned}\n");
    out
}

/// Plain-text rendering of a solution, one coordinate per line.
pub fn text_solution(sol: &ParametricSolution) -> String {
    let mut out = String::new();
    let den = sol.denominator.as_ref().map(|d| d.display(&sol.params).to_string());
    for (i, p) in sol.solutions.iter().enumerate() {
        let body = p.display(&sol.params).to_string();
        match &den {
            Some(d) if !p.is_zero() => out.push_str(&format!("x{} = ({body}) / ({d})\n", i + 1)),
            _ => out.push_str(&format!("x{} = {body}\n", i + 1)),
        }
    }
    out
}

/// `q` as typed on the command line (`p/q` or an integer).
pub fn parse_rational(s: &str) -> Result<Rational> {
    rational::parse(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn diagonal_quintic() {
        let f = parse_form("x1^5+x2^5+x3^5+x4^5+x5^5+x6^5", None).unwrap();
        assert_eq!(f.nvars(), 6);
        assert_eq!(f.degree(), 5);
        assert!(f.symmetry_checked());
        assert_eq!(f.poly(), &power_sum(5, 6));
    }

    #[test]
    fn inhomogeneous_rejected() {
        assert_eq!(parse_form("x1^5 + x2^4", None).unwrap_err(), Error::NotHomogeneous);
    }

    #[test]
    fn product_of_power_sums() {
        let f = parse_form("(x1^3+x2^3+x3^3+x4^3+x5^3+x6^3)*(x1^2+x2^2+x3^2+x4^2+x5^2+x6^2)", None).unwrap();
        assert_eq!(f.degree(), 5);
        assert_eq!(Some(Ok(f.into_poly())), builtin("powersum-product:6:3,2"));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_poly("x1 +\n  2 x2", None).unwrap_err() {
            Error::Syntax { line, column, message } => {
                assert_eq!((line, column), (2, 5));
                assert!(message.contains("implicit"));
            }
            e => panic!("{e:?}"),
        }
        assert!(matches!(parse_poly("x1 + (x2", None), Err(Error::Syntax { line: 1, column: 9, .. })));
        assert!(matches!(parse_poly("x0", None), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("1/0*x1", None), Err(Error::Syntax { .. })));
        assert_eq!(parse_poly("x7", Some(6)).unwrap_err(), Error::VariableOutOfRange { index: 6, nvars: 6 });
    }

    #[test]
    fn rationals_and_unary_minus() {
        let p = parse_poly("-3/4*x1^2 - -x2*x1 + 2/6", Some(2)).unwrap();
        let (x1, x2) = (Poly::var(2, 0), Poly::var(2, 1));
        let want = &(&(&x1 * &x1).scale(&frac(-3, 4)) + &(&x2 * &x1)) + &Poly::constant(2, frac(1, 3));
        assert_eq!(p, want);
        assert_eq!(parse_poly(&to_expr(&p), Some(2)).unwrap(), p);
    }

    #[test]
    fn builtins() {
        assert_eq!(builtin("diagonal:7:24"), Some(Ok(power_sum(7, 24))));
        assert!(matches!(builtin("diagonal:7"), Some(Err(_))));
        assert!(builtin("x1^2").is_none());
    }

    #[test]
    fn latex_shape() {
        let p = parse_poly("x1^2*x3 - 1/2*x2", Some(3)).unwrap();
        let names = vec!["a".to_string(), "b".to_string(), "c1".to_string()];
        assert_eq!(latex_poly(&p, &names), "a^{2} c_{1} - \\frac{1}{2} b");
    }
}
