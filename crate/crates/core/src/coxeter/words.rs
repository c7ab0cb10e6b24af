//! Text form of elements and tuples: `"s1 s3 s2"` (1-based generator
//! indices, the `s` prefix optional), `"e"` or an empty string for the
//! identity, commas between tuple entries.

use thiserror::Error;

use super::{CoxeterSystem, GroupElement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("invalid generator token `{token}`")]
    BadToken { token: String },
    #[error("generator `{token}` out of range (rank {rank})")]
    OutOfRange { token: String, rank: usize },
}

impl CoxeterSystem {
    /// Parses a single word into the element it represents.
    pub fn parse_word(&self, text: &str) -> Result<GroupElement, ParseError> {
        let mut word = Vec::new();
        for token in text.split_whitespace() {
            if token == "e" {
                continue;
            }
            let digits = token.strip_prefix(['s', 'S']).unwrap_or(token);
            let idx: usize = digits
                .parse()
                .map_err(|_| ParseError::BadToken { token: token.to_string() })?;
            if idx == 0 || idx > self.rank() {
                return Err(ParseError::OutOfRange { token: token.to_string(), rank: self.rank() });
            }
            word.push(idx - 1);
        }
        Ok(self.element_of(&word).expect("indices validated"))
    }

    pub fn parse_tuple(&self, text: &str) -> Result<Vec<GroupElement>, ParseError> {
        text.split(',').map(|w| self.parse_word(w)).collect()
    }

    /// Reduced word of `w` in the `"s1 s2"` syntax; `"e"` for the identity.
    pub fn format_element(&self, w: &GroupElement) -> String {
        let word = self.reduced_word(w);
        if word.is_empty() {
            return "e".to_string();
        }
        word.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join(" ")
    }

    pub fn format_tuple(&self, t: &[GroupElement]) -> String {
        t.iter().map(|w| self.format_element(w)).collect::<Vec<_>>().join(", ")
    }
}
