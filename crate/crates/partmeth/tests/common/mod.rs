//! Shared pieces of the partmeth integration tests: an evaluator for the
//! emitted symbolic text and the printed tables.

#![allow(dead_code)]

use std::path::PathBuf;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use partmeth_core::algebra::{factorial, Rational};

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

pub fn golden(name: &str) -> String {
    std::fs::read_to_string(golden_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Comparison form of emitted text: all whitespace removed.
pub fn squash(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

/// Evaluates the Mathematica subset used by the emitters: juxtaposition is
/// multiplication, `^` takes an integer exponent, `!` is factorial, and
/// `name[args]` / bare names are looked up through `lookup`.
pub struct Eval<'a> {
    s: &'a [u8],
    pos: usize,
    lookup: &'a dyn Fn(&str, &[String]) -> Rational,
}

impl<'a> Eval<'a> {
    pub fn run(text: &'a str, lookup: &'a dyn Fn(&str, &[String]) -> Rational) -> Rational {
        let mut e = Eval { s: text.as_bytes(), pos: 0, lookup };
        let v = e.expr();
        e.skip_ws();
        assert_eq!(e.pos, e.s.len(), "trailing input at {} in {text:?}", e.pos);
        v
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) {
        assert_eq!(self.peek(), Some(c), "expected {:?} at {}", c as char, self.pos);
        self.pos += 1;
    }

    fn expr(&mut self) -> Rational {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()
            }
            _ => self.term(),
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc += self.term();
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc -= self.term();
                }
                _ => return acc,
            }
        }
    }

    fn term(&mut self) -> Rational {
        let mut acc = self.factor();
        loop {
            match self.peek() {
                Some(b'/') => {
                    self.pos += 1;
                    acc /= self.factor();
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => acc *= self.factor(),
                _ => return acc,
            }
        }
    }

    fn factor(&mut self) -> Rational {
        let base = self.postfix();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.factor();
            assert!(e.denom().is_one(), "non-integer exponent");
            let n = e.numer().to_i64().unwrap();
            let mut r = Rational::one();
            for _ in 0..n.unsigned_abs() {
                r *= &base;
            }
            return if n < 0 { r.recip() } else { r };
        }
        base
    }

    fn postfix(&mut self) -> Rational {
        let mut v = self.primary();
        while self.peek() == Some(b'!') {
            self.pos += 1;
            assert!(v.denom().is_one() && !v.numer().is_negative(), "factorial of {v}");
            v = Rational::from_integer(factorial(v.numer().to_u64().unwrap()));
        }
        v
    }

    fn primary(&mut self) -> Rational {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr();
                self.expect(b')');
                v
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                Rational::from_integer(text.parse::<BigInt>().unwrap())
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric()) {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap().to_string();
                let mut args = Vec::new();
                if self.pos < self.s.len() && self.s[self.pos] == b'[' {
                    self.pos += 1;
                    let close = self.s[self.pos..].iter().position(|&c| c == b']').unwrap() + self.pos;
                    let inner = std::str::from_utf8(&self.s[self.pos..close]).unwrap();
                    args = inner.split(',').map(|a| a.trim().to_string()).collect();
                    self.pos = close + 1;
                }
                (self.lookup)(&name, &args)
            }
            other => panic!("unexpected {:?} at {}", other.map(|c| c as char), self.pos),
        }
    }
}

/// Evaluate the right-hand side of a `NAME[...]:= rhs` definition.
pub fn eval_definition(text: &str, lookup: &dyn Fn(&str, &[String]) -> Rational) -> Rational {
    let rhs = text.split_once(":=").expect("a definition").1;
    Eval::run(rhs, lookup)
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub const Q_OMEGA_ROWS: [&str; 11] = [
    "1",
    "w",
    "w",
    "w^2+w",
    "w^2+w",
    "2w^2+w",
    "w^3+2w^2+w",
    "w^3+3w^2+w",
    "2w^3+3w^2+w",
    "3w^3+4w^2+w",
    "w^4+4w^3+4w^2+w",
];

pub const P_OMEGA_ROWS: [&str; 11] = [
    "1",
    "w",
    "w^2+w",
    "w^3+w^2+w",
    "w^4+w^3+2w^2+w",
    "w^5+w^4+2w^3+2w^2+w",
    "w^6+w^5+2w^4+3w^3+3w^2+w",
    "w^7+w^6+2w^5+3w^4+4w^3+3w^2+w",
    "w^8+w^7+2w^6+3w^5+5w^4+5w^3+4w^2+w",
    "w^9+w^8+2w^7+3w^6+5w^5+6w^4+7w^3+4w^2+w",
    "w^10+w^9+2w^8+3w^7+5w^6+7w^5+9w^4+8w^3+5w^2+w",
];

pub const Q_RHO2_ROWS: [&str; 10] = [
    "2w",
    "2w+w^2",
    "2w+4w^2",
    "2w+5w^2+2w^3",
    "2w+8w^2+4w^3",
    "2w+9w^2+10w^3+w^4",
    "2w+12w^2+14w^3+4w^4",
    "2w+13w^2+22w^3+9w^4",
    "2w+16w^2+30w^3+16w^4+2w^5",
    "2w+17w^2+40w^3+30w^4+4w^5",
];

pub const Q_RHO3_ROWS: [&str; 10] = [
    "3w",
    "3w+3w^2",
    "3w+9w^2+w^3",
    "3w+12w^2+9w^3",
    "3w+18w^2+18w^3+3w^4",
    "3w+21w^2+37w^3+12w^4",
    "3w+27w^2+54w^3+33w^4+3w^5",
    "-3w+30w^2+81w^3+66w^4+12w^5",
    "3w+36w^2+109w^3+114w^4+39w^5+w^6",
    "3w+39w^2+144w^3+189w^4+81w^5+9w^6",
];

/// Rows of the QP table, each to be multiplied by `(a-b)`.
pub const QP_ROWS: [&str; 8] = [
    "w",
    "w+a w^2",
    "w+(a-b)w^2+a^2 w^3",
    "w+(2a-b)w^2+a(a-1)w^3+a^3 w^4",
    "w+2(a-b)w^2+2a(a-b)w^3+a^2(a-b)w^4+a^4 w^5",
    "w+(3a-2b)w^2+(3a^2-3a b+b^2)w^3+2a^2(a-b)w^4+a^3(a-b)w^5+a^5 w^6",
    "w+3(a-b)w^2+(4a-b)(a-b)w^3+(3a-b)(a-b)a w^4+2a^3(a-b)w^5+a^4(a-b)w^6+a^6 w^7",
    "w+(4a-3b)w^2+(5a-2b)(a-b)w^3+(5a^2-6a b+2b^2)a w^4+a^2(3a-b)(a-b)w^5+2a^4(a-b)w^6+a^5(a-b)w^7+a^7 w^8",
];

/// Rows of the HP table, each to be multiplied by `(x-1)(y-1)w`.
pub const HP_ROWS: [&str; 6] = [
    "1",
    "1+(1+x y)w",
    "1+(x-1)(y-1)w+(1+x y+x^2 y^2)w^2",
    "1+(2-x-y+2x y)w+(x-1)(y-1)(1+x y)w^2+(1+x y+x^2 y^2+x^3 y^3)w^3",
    "1+2(x-1)(y-1)w+2(x-1)(y-1)(1+x y)w^2+(x-1)(y-1)(1+x y+x^2 y^2+x^3 y^3)w^3+(1+x y+x^2 y^2+x^3 y^3+x^4 y^4)w^4",
    "1+(3-2x-2y+3x y)w+(3-3x-3y+x^2+y^2+21x y-3x y^2-3x^2 y+3x^2 y^2)w^2+(x-1)(y-1)(2+3x y+2x^2 y^2)w^3+(x-1)(y-1)(1+x y+x^2 y^2+x^3 y^3)w^4+(1+x y+x^2 y^2+x^3 y^3+x^4 y^4+x^5 y^5)w^5",
];

/// Reference values: ascending numerator coefficients of `h_k(ν)` and the
/// exponents of `(ν+1), (ν+2), ...` in `k!` times the denominator.
pub fn h_reference() -> Vec<(Vec<i64>, Vec<u32>)> {
    vec![
        (vec![1], vec![]),
        (vec![1], vec![1]),
        (vec![3, 1], vec![2, 1]),
        (vec![19, 8, 1], vec![3, 1, 1]),
        (vec![422, 379, 117, 17, 1], vec![4, 2, 1, 1]),
        (vec![7302, 5969, 1816, 294, 26, 1], vec![5, 2, 1, 1, 1]),
        (vec![1091052, 1674616, 1043637, 349786, 71155, 9412, 811, 42, 1], vec![6, 3, 2, 1, 1, 1]),
        (vec![36978156, 51572980, 29539597, 9292435, 1827401, 243311, 22535, 1417, 55, 1], vec![7, 3, 2, 1, 1, 1, 1]),
    ]
}
