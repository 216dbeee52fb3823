use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::poly::Polynomial;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    field: PrimeField,
    nvars: usize,
}

pub(super) fn parse(field: PrimeField, nvars: usize, text: &str) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        field,
        nvars,
    };
    p.skip_ws();
    if p.at_end() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let out = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {}", self.pos))
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn skip_ws(&mut self) {
        while self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_whitespace())
        {
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

    fn expr(&mut self) -> Result<Polynomial> {
        let negate_first = self.eat(b'-');
        let mut acc = self.term()?;
        if negate_first {
            acc = acc.neg();
        }
        loop {
            if self.eat(b'+') {
                let t = self.term()?;
                acc = acc.add(&t)?;
            } else if self.eat(b'-') {
                let t = self.term()?;
                acc = acc.sub(&t)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = acc.mul(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.integer()?;
            let e = u32::try_from(e).map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(b'x') => {
                self.pos += 1;
                let idx = self.integer()?;
                if idx == 0 || idx as usize > self.nvars {
                    return Err(
                        self.error(&format!("variable x{idx} out of range 1..={}", self.nvars))
                    );
                }
                Ok(Polynomial::var(self.field, self.nvars, idx as usize - 1))
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                Ok(Polynomial::constant(
                    self.field,
                    self.nvars,
                    v % self.field.modulus(),
                ))
            }
            _ => Err(self.error("expected a number, variable or '('")),
        }
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.error("integer out of range"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z43() -> PrimeField {
        PrimeField::new(43).unwrap()
    }

    #[test]
    fn parses_factored_forms() {
        let a = parse(z43(), 1, "11*(x1-1)^3*x1^2").unwrap();
        let b = parse(z43(), 1, "11*x1^5 + 10*x1^4 + 33*x1^3 + 32*x1^2").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn parses_zero_and_negatives() {
        assert!(parse(z43(), 2, "0").unwrap().is_zero());
        assert_eq!(parse(z43(), 2, "-x1").unwrap().to_string(), "42*x1");
        assert_eq!(parse(z43(), 2, "x2 - x2").unwrap().to_string(), "0");
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "x", "x3", "x0", "1 +", "(x1", "x1 x2", "y1"] {
            assert!(parse(z43(), 2, bad).is_err(), "{bad:?}");
        }
    }
}
