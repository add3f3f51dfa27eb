//! Clutter file formats.
//!
//! Text form: a header line `n d`, then one circuit per line as `d`
//! space-separated 1-based vertices. `#` starts a comment line, blank lines
//! are ignored and duplicate circuits collapse.
//!
//! JSON form: `{"n": 5, "d": 3, "circuits": [[1,2,3], ...]}`.

use serde::{Deserialize, Serialize};

use crate::clutter::Clutter;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClutterJson {
    pub n: usize,
    pub d: usize,
    pub circuits: Vec<Vec<usize>>,
}

impl From<&Clutter> for ClutterJson {
    fn from(c: &Clutter) -> Self {
        ClutterJson {
            n: c.n(),
            d: c.d(),
            circuits: c.circuits().iter().map(|f| f.to_vec()).collect(),
        }
    }
}

impl TryFrom<ClutterJson> for Clutter {
    type Error = Error;

    fn try_from(j: ClutterJson) -> Result<Self> {
        Clutter::new(j.n, j.d, &j.circuits)
    }
}

impl Serialize for Clutter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ClutterJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Clutter {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = ClutterJson::deserialize(d)?;
        Clutter::try_from(j).map_err(serde::de::Error::custom)
    }
}

/// Parses either format; input whose first non-blank character is `{` is read as JSON.
pub fn parse_clutter(input: &str) -> Result<Clutter> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

pub fn parse_json(input: &str) -> Result<Clutter> {
    let j: ClutterJson = serde_json::from_str(input).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    Clutter::try_from(j)
}

pub fn parse_text(input: &str) -> Result<Clutter> {
    let mut header: Option<(usize, usize)> = None;
    let mut circuits = Vec::new();
    for (i, raw) in input.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let nums = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("expected a non-negative integer, found `{tok}`"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let at_line = |e: Error| Error::Parse {
            line: line_no,
            message: e.to_string(),
        };
        match header {
            None => {
                if nums.len() != 2 {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "header must be `n d`".into(),
                    });
                }
                // validate n and d up front so the error points at the header
                Clutter::empty(nums[0], nums[1]).map_err(at_line)?;
                header = Some((nums[0], nums[1]));
            }
            Some((n, d)) => {
                Clutter::new(n, d, std::slice::from_ref(&nums)).map_err(at_line)?;
                circuits.push(nums);
            }
        }
    }
    let (n, d) = header.ok_or(Error::Parse {
        line: 0,
        message: "missing `n d` header".into(),
    })?;
    Clutter::new(n, d, &circuits)
}

pub fn to_text(c: &Clutter) -> String {
    let mut out = format!("{} {}\n", c.n(), c.d());
    for f in c.circuits() {
        let vs: Vec<String> = f.iter().map(|v| v.to_string()).collect();
        out.push_str(&vs.join(" "));
        out.push('\n');
    }
    out
}

pub fn to_json(c: &Clutter) -> String {
    serde_json::to_string(&ClutterJson::from(c)).expect("clutter serializes")
}
