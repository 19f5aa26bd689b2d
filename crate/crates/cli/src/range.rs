use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Inclusive parameter range written `a..b` (or a single value `a`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamRange {
    pub start: usize,
    pub end: usize,
}

impl ParamRange {
    pub fn new(start: usize, end: usize) -> Self {
        ParamRange { start, end }
    }

    pub fn single(value: usize) -> Self {
        ParamRange::new(value, value)
    }

    pub fn iter(&self) -> RangeInclusive<usize> {
        self.start..=self.end
    }

    /// Clamps the lower end to `min`; `None` if nothing is left.
    pub fn at_least(&self, min: usize) -> Option<ParamRange> {
        (self.end >= min).then(|| ParamRange::new(self.start.max(min), self.end))
    }
}

impl fmt::Display for ParamRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.start == self.end {
            write!(f, "{}", self.start)
        } else {
            write!(f, "{}..{}", self.start, self.end)
        }
    }
}

impl FromStr for ParamRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |part: &str| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{s}` is not a range of the form a..b"))
        };
        let range = match s.split_once("..") {
            Some((a, b)) => ParamRange::new(parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => ParamRange::single(parse(s)?),
        };
        if range.start > range.end {
            return Err(format!("range `{s}` is empty"));
        }
        Ok(range)
    }
}
