//! Complexified frame indices {1,2,3,1b,2b,3b}.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseError;

/// Slots 0,1,2 are φ₁,φ₂,φ₃; slots 3,4,5 their conjugates.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FrameIndex(u8);

pub const DIM: usize = 6;

impl FrameIndex {
    pub const ALL: [FrameIndex; DIM] =
        [FrameIndex(0), FrameIndex(1), FrameIndex(2), FrameIndex(3), FrameIndex(4), FrameIndex(5)];
    pub const HOLOMORPHIC: [FrameIndex; 3] = [FrameIndex(0), FrameIndex(1), FrameIndex(2)];

    pub fn new(slot: usize) -> Option<Self> {
        (slot < DIM).then_some(FrameIndex(slot as u8))
    }

    /// Holomorphic index `k` in 1..=3.
    pub fn hol(k: usize) -> Self {
        assert!((1..=3).contains(&k));
        FrameIndex((k - 1) as u8)
    }

    /// Conjugate index `k̄` for `k` in 1..=3.
    pub fn antihol(k: usize) -> Self {
        Self::hol(k).bar()
    }

    pub fn slot(self) -> usize {
        self.0 as usize
    }

    pub fn bar(self) -> Self {
        FrameIndex((self.0 + 3) % 6)
    }

    pub fn is_holomorphic(self) -> bool {
        self.0 < 3
    }

    pub fn label(self) -> &'static str {
        ["1", "2", "3", "1b", "2b", "3b"][self.slot()]
    }
}

#[inline]
pub fn bar(a: usize) -> usize {
    (a + 3) % 6
}

#[inline]
pub fn is_hol(a: usize) -> bool {
    a < 3
}

impl fmt::Display for FrameIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for FrameIndex {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let (digit, barred) = match t.strip_suffix('b') {
            Some(d) => (d, true),
            None => match t.strip_suffix('\u{0304}') {
                Some(d) => (d, true),
                None => (t, false),
            },
        };
        let k: usize = match digit {
            "1" => 1,
            "2" => 2,
            "3" => 3,
            _ => return Err(ParseError::FrameIndex(s.to_string())),
        };
        Ok(if barred { Self::antihol(k) } else { Self::hol(k) })
    }
}

impl Serialize for FrameIndex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

impl<'de> Deserialize<'de> for FrameIndex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `[1,1b,3,3b]`-style label for an index tuple.
pub fn tuple_label(idx: &[FrameIndex]) -> String {
    let parts: Vec<&str> = idx.iter().map(|i| i.label()).collect();
    format!("[{}]", parts.join(","))
}

/// Parses `1,1b,3,3b` (brackets optional).
pub fn parse_tuple(s: &str) -> Result<Vec<FrameIndex>, ParseError> {
    s.trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bar_is_involution() {
        for i in FrameIndex::ALL {
            assert_eq!(i.bar().bar(), i);
            assert_ne!(i.is_holomorphic(), i.bar().is_holomorphic());
        }
    }

    #[test]
    fn labels_round_trip() {
        for i in FrameIndex::ALL {
            assert_eq!(i.label().parse::<FrameIndex>().unwrap(), i);
        }
        assert!("4".parse::<FrameIndex>().is_err());
        assert_eq!(parse_tuple("[1,1b,3,3b]").unwrap().len(), 4);
        assert_eq!(tuple_label(&parse_tuple("1,2b").unwrap()), "[1,2b]");
    }
}
