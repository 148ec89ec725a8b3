//! Minimal scanner shared by the `SET{..}` and `HN{..}` textual forms.

use alloc::string::ToString;

use num_bigint::BigInt;

use super::UpAlgError;

pub(crate) struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    pub fn new(text: &'a str) -> Self {
        Scanner {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    pub fn pos(&self) -> usize {
        self.pos
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    pub fn try_tag(&mut self, tag: &str) -> bool {
        self.skip_ws();
        if self.bytes[self.pos..].starts_with(tag.as_bytes()) {
            self.pos += tag.len();
            true
        } else {
            false
        }
    }

    pub fn expect_tag(&mut self, tag: &str) -> Result<(), UpAlgError> {
        if self.try_tag(tag) {
            Ok(())
        } else {
            Err(UpAlgError::Parse {
                pos: self.pos,
                msg: alloc::format!("expected '{tag}'"),
            })
        }
    }

    pub fn nat(&mut self) -> Result<u64, UpAlgError> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(UpAlgError::Parse {
                pos: self.pos,
                msg: "expected a number".to_string(),
            });
        }
        core::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or(UpAlgError::Parse {
                pos: start,
                msg: "number out of range".to_string(),
            })
    }

    pub fn int(&mut self) -> Result<BigInt, UpAlgError> {
        self.skip_ws();
        let start = self.pos;
        if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        core::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or(UpAlgError::Parse {
                pos: start,
                msg: "expected an integer".to_string(),
            })
    }

    /// Slice up to the next top-level occurrence of one of `stops`
    /// (parentheses nest); the stop byte is not consumed.
    pub fn until_any(&mut self, stops: &[u8]) -> Result<&'a str, UpAlgError> {
        let start = self.pos;
        let mut depth = 0usize;
        while let Some(&b) = self.bytes.get(self.pos) {
            match b {
                b'(' => depth += 1,
                b')' if depth > 0 => depth -= 1,
                _ if depth == 0 && stops.contains(&b) => break,
                _ => {}
            }
            self.pos += 1;
        }
        core::str::from_utf8(&self.bytes[start..self.pos]).map_err(|_| UpAlgError::Parse {
            pos: start,
            msg: "invalid utf-8".to_string(),
        })
    }

    pub fn expect_end(&mut self) -> Result<(), UpAlgError> {
        self.skip_ws();
        if self.pos == self.bytes.len() {
            Ok(())
        } else {
            Err(UpAlgError::Parse {
                pos: self.pos,
                msg: "trailing input".to_string(),
            })
        }
    }
}
