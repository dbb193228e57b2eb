//! PD text format.
//!
//! ```text
//! # trefoil
//! X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]
//! loops=0
//! ```
//!
//! Tokens are separated by whitespace. `#` starts a comment running to the end
//! of the line. A `PD[ ... ]` wrapper and commas between crossings, as found in
//! knot-table exports, are accepted too.

use super::{ArcLabel, Crossing, Diagram};
use crate::error::{Error, Result};

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    /// Skip whitespace, separating commas and comments.
    fn skip_blank(&mut self, allow_commas: bool) {
        while let Some(b) = self.peek() {
            match b {
                b'#' => {
                    while let Some(b) = self.peek() {
                        if b == b'\n' {
                            break;
                        }
                        self.pos += 1;
                    }
                }
                b',' if allow_commas => self.pos += 1,
                b if b.is_ascii_whitespace() => self.pos += 1,
                _ => break,
            }
        }
    }

    fn eat(&mut self, lit: &str) -> bool {
        if self.src[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        self.skip_blank(false);
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", b as char))
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_blank(false);
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a decimal integer");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        match digits.parse::<u64>() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.err("integer out of range")
            }
        }
    }

    fn label(&mut self) -> Result<ArcLabel> {
        let start = self.pos;
        let v = self.number()?;
        match ArcLabel::try_from(v) {
            Ok(l) if l > 0 => Ok(l),
            _ => {
                self.pos = start;
                self.err("arc labels must be positive 32-bit integers")
            }
        }
    }

    fn crossing(&mut self) -> Result<Crossing> {
        self.expect(b'[')?;
        let mut ends = [0; 4];
        for (i, slot) in ends.iter_mut().enumerate() {
            if i > 0 {
                self.expect(b',')?;
            }
            *slot = self.label()?;
        }
        self.expect(b']')?;
        Ok(Crossing::new(ends))
    }
}

/// Parse PD text into a validated [`Diagram`].
pub fn parse_pd(text: &str) -> Result<Diagram> {
    let mut s = Scanner {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut crossings = Vec::new();
    let mut loops: Option<usize> = None;
    let mut wrapped = false;

    s.skip_blank(false);
    if s.eat("PD[") {
        wrapped = true;
    }
    loop {
        s.skip_blank(true);
        match s.peek() {
            None => break,
            Some(b']') if wrapped => {
                s.pos += 1;
                wrapped = false;
                s.skip_blank(false);
                if s.peek().is_some() {
                    return s.err("unexpected input after closing ']'");
                }
                break;
            }
            Some(b'X') => {
                s.pos += 1;
                crossings.push(s.crossing()?);
            }
            Some(b'l') if s.eat("loops") => {
                s.expect(b'=')?;
                if loops.is_some() {
                    return s.err("duplicate loops= token");
                }
                let v = s.number()?;
                loops = Some(usize::try_from(v).or_else(|_| s.err("loop count out of range"))?);
            }
            Some(_) => return s.err("unrecognized token"),
        }
    }
    if wrapped {
        return s.err("unterminated PD[");
    }
    Diagram::new(crossings, loops.unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil() {
        let d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.free_loops(), 0);
        assert_eq!(d.crossings()[1].ends, [3, 6, 4, 1]);
    }

    #[test]
    fn loops_only() {
        let d = parse_pd("loops=1").unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.free_loops(), 1);
    }

    #[test]
    fn curl() {
        let d = parse_pd("X[1,1,2,2]").unwrap();
        assert_eq!(d.crossing_count(), 1);
    }

    #[test]
    fn comments_and_wrapper() {
        let text = "# hopf link\nPD[X[4,1,3,2], X[2,3,1,4]] # trailing\n";
        let d = parse_pd(text).unwrap();
        assert_eq!(d.crossing_count(), 2);
        let spaced = parse_pd("X[ 4, 1, 3, 2 ]\nX[2,3,1,4]").unwrap();
        assert_eq!(spaced, d);
    }

    #[test]
    fn syntax_errors() {
        for bad in [
            "X[1,2,3]",
            "X[1,2,3,4",
            "Y[1,2,3,4]",
            "X[0,1,1,0]",
            "X[a,1,1,2]",
            "loops=1 loops=2",
            "loops=",
            "PD[X[1,1,2,2]",
            "",
            "# nothing",
        ] {
            assert!(
                matches!(parse_pd(bad), Err(Error::Syntax { .. })),
                "{bad:?} should be a syntax error"
            );
        }
    }

    #[test]
    fn label_errors() {
        assert_eq!(
            parse_pd("X[1,2,3,4]").unwrap_err(),
            Error::Label { label: 1, count: 1 }
        );
        assert!(matches!(
            parse_pd("X[1,1,2,2] X[2,3,3,4]"),
            Err(Error::Label { label: 2, count: 3 })
        ));
    }
}
