//! Parameter grids such as `k=2;t=0,1;n=2k+t..2k+t+2`.
//!
//! Clauses are separated by `;` and bind one variable each. A clause lists
//! comma-separated items, each an integer expression or an inclusive range
//! `a..b`. Expressions use `+`, `-`, `*`, parentheses and juxtaposition
//! (`2k` is `2*k`), and may mention variables bound by earlier clauses.
//! Rows are the nested product of the clauses, first clause outermost.

use thiserror::Error;

/// Rows beyond this count are refused.
pub const MAX_ROWS: usize = 100_000;
/// Longer grid specs are refused.
pub const MAX_LEN: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("grid syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("variable `{0}` is used before it is bound")]
    Unbound(String),
    #[error("variable `{0}` is bound twice")]
    Duplicate(String),
    #[error("integer overflow while evaluating the grid")]
    Overflow,
    #[error("grid expands to more than {MAX_ROWS} rows")]
    TooLarge,
}

/// One grid point: variables in clause order.
pub type Row = Vec<(String, i64)>;

pub fn row_get(row: &Row, name: &str) -> Option<i64> {
    row.iter().find(|(n, _)| n == name).map(|&(_, v)| v)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Expr {
    Num(i64),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone)]
enum Item {
    One(Expr),
    Range(Expr, Expr),
}

struct Clause {
    name: String,
    items: Vec<Item>,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, GridError> {
        Err(GridError::Syntax { pos: self.pos, msg: msg.into() })
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn at_range(&mut self) -> bool {
        self.peek() == Some(b'.') && self.src.get(self.pos + 1) == Some(&b'.')
    }

    fn ident(&mut self) -> Result<String, GridError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            if self.pos == start && self.src[self.pos].is_ascii_digit() {
                break;
            }
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a variable name");
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn grid(&mut self) -> Result<Vec<Clause>, GridError> {
        let mut clauses = Vec::new();
        loop {
            if self.peek().is_none() {
                break;
            }
            let name = self.ident()?;
            if !self.eat(b'=') {
                return self.err("expected `=`");
            }
            let mut items = vec![self.item()?];
            while self.eat(b',') {
                items.push(self.item()?);
            }
            clauses.push(Clause { name, items });
            match self.peek() {
                None => break,
                Some(b';') => self.pos += 1,
                Some(c) => return self.err(format!("unexpected `{}`", c as char)),
            }
        }
        if clauses.is_empty() {
            return self.err("empty grid");
        }
        Ok(clauses)
    }

    fn item(&mut self) -> Result<Item, GridError> {
        let lo = self.expr(0)?;
        if self.at_range() {
            self.pos += 2;
            let hi = self.expr(0)?;
            return Ok(Item::Range(lo, hi));
        }
        Ok(Item::One(lo))
    }

    fn expr(&mut self, depth: usize) -> Result<Expr, GridError> {
        let mut lhs = self.term(depth)?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term(depth)?));
            } else if self.peek() == Some(b'-') {
                self.pos += 1;
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term(depth)?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self, depth: usize) -> Result<Expr, GridError> {
        let mut lhs = self.factor(depth)?;
        loop {
            let explicit = self.eat(b'*');
            let starts_factor = matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_' || c == b'(');
            if explicit || starts_factor {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor(depth)?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self, depth: usize) -> Result<Expr, GridError> {
        if depth > 64 {
            return self.err("expression nested too deeply");
        }
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.factor(depth + 1)?)))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr(depth + 1)?;
                if !self.eat(b')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
                text.parse().map(Expr::Num).or_else(|_| self.err(format!("number `{text}` is too large")))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => Ok(Expr::Var(self.ident()?)),
            Some(c) => self.err(format!("unexpected `{}`", c as char)),
            None => self.err("unexpected end of grid"),
        }
    }
}

fn eval(e: &Expr, env: &Row) -> Result<i64, GridError> {
    Ok(match e {
        Expr::Num(v) => *v,
        Expr::Var(name) => row_get(env, name).ok_or_else(|| GridError::Unbound(name.clone()))?,
        Expr::Neg(a) => eval(a, env)?.checked_neg().ok_or(GridError::Overflow)?,
        Expr::Add(a, b) => eval(a, env)?.checked_add(eval(b, env)?).ok_or(GridError::Overflow)?,
        Expr::Sub(a, b) => eval(a, env)?.checked_sub(eval(b, env)?).ok_or(GridError::Overflow)?,
        Expr::Mul(a, b) => eval(a, env)?.checked_mul(eval(b, env)?).ok_or(GridError::Overflow)?,
    })
}

fn expand(clauses: &[Clause], env: &mut Row, out: &mut Vec<Row>, work: &mut usize) -> Result<(), GridError> {
    // empty inner ranges yield no rows, so count bindings as well
    *work += 1;
    if *work > 16 * MAX_ROWS {
        return Err(GridError::TooLarge);
    }
    let Some((clause, rest)) = clauses.split_first() else {
        if out.len() >= MAX_ROWS {
            return Err(GridError::TooLarge);
        }
        out.push(env.clone());
        return Ok(());
    };
    for item in &clause.items {
        let (lo, hi) = match item {
            Item::One(e) => {
                let v = eval(e, env)?;
                (v, v)
            }
            Item::Range(a, b) => (eval(a, env)?, eval(b, env)?),
        };
        if hi as i128 - lo as i128 >= MAX_ROWS as i128 {
            return Err(GridError::TooLarge);
        }
        for v in lo..=hi {
            env.push((clause.name.clone(), v));
            let res = expand(rest, env, out, work);
            env.pop();
            res?;
        }
    }
    Ok(())
}

/// All rows of the grid, in nested clause order.
pub fn parse_grid(spec: &str) -> Result<Vec<Row>, GridError> {
    if spec.len() > MAX_LEN {
        return Err(GridError::Syntax { pos: MAX_LEN, msg: format!("grid longer than {MAX_LEN} bytes") });
    }
    let clauses = Parser { src: spec.as_bytes(), pos: 0 }.grid()?;
    for (i, c) in clauses.iter().enumerate() {
        if clauses[..i].iter().any(|d| d.name == c.name) {
            return Err(GridError::Duplicate(c.name.clone()));
        }
    }
    let mut out = Vec::new();
    expand(&clauses, &mut Vec::new(), &mut out, &mut 0)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(rows: &[Row], name: &str) -> Vec<i64> {
        rows.iter().map(|r| row_get(r, name).unwrap()).collect()
    }

    #[test]
    fn affine_ranges() {
        let rows = parse_grid("k=2;t=0,1;n=2k+t..2k+t+2").unwrap();
        assert_eq!(rows.len(), 6);
        assert_eq!(values(&rows, "n"), vec![4, 5, 6, 5, 6, 7]);
        assert_eq!(values(&rows, "t"), vec![0, 0, 0, 1, 1, 1]);
    }

    #[test]
    fn arithmetic() {
        let rows = parse_grid(" a = 3 ; b = 2(a-1)*a - -1 , a a ").unwrap();
        assert_eq!(values(&rows, "b"), vec![13, 9]);
    }

    #[test]
    fn empty_range_gives_no_rows() {
        assert!(parse_grid("n=5..4").unwrap().is_empty());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_grid("n=k"), Err(GridError::Unbound(_))));
        assert!(matches!(parse_grid("n=1;n=2"), Err(GridError::Duplicate(_))));
        assert!(matches!(parse_grid("n=1..1000000"), Err(GridError::TooLarge)));
        assert!(matches!(parse_grid("a=0..99998;b=0..99998;c=1..0"), Err(GridError::TooLarge)));
        assert!(matches!(parse_grid("n=9223372036854775807+1"), Err(GridError::Overflow)));
        assert!(matches!(parse_grid("n=(1"), Err(GridError::Syntax { .. })));
        assert!(matches!(parse_grid(""), Err(GridError::Syntax { .. })));
        assert!(parse_grid("n=1;").is_ok());
        assert!(matches!(parse_grid("=1"), Err(GridError::Syntax { .. })));
    }
}
