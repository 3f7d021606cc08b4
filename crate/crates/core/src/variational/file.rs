//! Text format for variational data.
//!
//! ```toml
//! n = 2
//! d = 2
//! complete_symmetries = true   # fill symmetric partners of listed entries
//! c  = [[0, 0, 0, 0, 3.0], [0, 0, 1, 1, 1.0]]        # a, j, b, l, value
//! e  = [[0, 0, 0, 1, 1, 0.5]]                        # a, b, j, g, l, value
//! d3 = [[0, 0, 0, 0, 0, 0, 2.0]]                     # a, j, b, l, g, m, value
//! ```
//!
//! Indices are zero-based. Without `complete_symmetries` every nonzero entry
//! must be listed and the tensors must already carry their symmetries.

use std::path::Path;

use serde::Deserialize;

use super::VariationalData;
use crate::error::{Error, Result};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawData {
    n: usize,
    d: usize,
    #[serde(default)]
    complete_symmetries: bool,
    #[serde(default)]
    c: Vec<Vec<f64>>,
    #[serde(default)]
    e: Vec<Vec<f64>>,
    #[serde(default)]
    d3: Vec<Vec<f64>>,
}

fn indices(entry: &[f64], bounds: &[usize], tensor: &str) -> Result<Vec<usize>> {
    if entry.len() != bounds.len() + 1 {
        return Err(Error::VariationalData(format!(
            "{tensor} entry {entry:?} needs {} indices and a value",
            bounds.len()
        )));
    }
    entry[..bounds.len()]
        .iter()
        .zip(bounds)
        .map(|(&x, &b)| {
            if x >= 0.0 && x.fract() == 0.0 && (x as usize) < b {
                Ok(x as usize)
            } else {
                Err(Error::VariationalData(format!("{tensor} entry {entry:?}: index {x} out of range 0..{b}")))
            }
        })
        .collect()
}

/// Assigns `value` at `slot`; with `fill`, also at its symmetric partners. Conflicting
/// assignments are rejected.
fn assign(store: &mut [Option<f64>], slots: &[usize], value: f64, tensor: &str) -> Result<()> {
    for &s in slots {
        match store[s] {
            Some(old) if old != value => {
                return Err(Error::VariationalData(format!("{tensor}: conflicting values {old} and {value}")))
            }
            _ => store[s] = Some(value),
        }
    }
    Ok(())
}

pub fn parse_variational_data(text: &str) -> Result<VariationalData> {
    let raw: RawData = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
    let (n, d) = (raw.n, raw.d);
    if n == 0 || d == 0 {
        return Err(Error::VariationalData("n and d must be positive".into()));
    }
    let w = n * d;
    let fill = raw.complete_symmetries;
    let mut c = vec![None; w * w];
    for entry in &raw.c {
        let ix = indices(entry, &[n, d, n, d], "c")?;
        let (p, q) = (ix[0] * d + ix[1], ix[2] * d + ix[3]);
        let slots = if fill { vec![p * w + q, q * w + p] } else { vec![p * w + q] };
        assign(&mut c, &slots, entry[4], "c")?;
    }
    let mut e = vec![None; n * w * w];
    for entry in &raw.e {
        let ix = indices(entry, &[n, n, d, n, d], "e")?;
        let (a, q, r) = (ix[0], ix[1] * d + ix[2], ix[3] * d + ix[4]);
        let slots = if fill { vec![(a * w + q) * w + r, (a * w + r) * w + q] } else { vec![(a * w + q) * w + r] };
        assign(&mut e, &slots, entry[5], "e")?;
    }
    let mut d3 = vec![None; w * w * w];
    for entry in &raw.d3 {
        let ix = indices(entry, &[n, d, n, d, n, d], "d3")?;
        let (p, q, r) = (ix[0] * d + ix[1], ix[2] * d + ix[3], ix[4] * d + ix[5]);
        let at = |x: usize, y: usize, z: usize| (x * w + y) * w + z;
        let slots = if fill {
            vec![at(p, q, r), at(p, r, q), at(q, p, r), at(q, r, p), at(r, p, q), at(r, q, p)]
        } else {
            vec![at(p, q, r)]
        };
        assign(&mut d3, &slots, entry[6], "d3")?;
    }
    let mut data = VariationalData::zeros(n, d);
    for a in 0..n {
        for j in 0..d {
            for b in 0..n {
                for l in 0..d {
                    if let Some(v) = c[(a * d + j) * w + b * d + l] {
                        data.set_c(a, j, b, l, v);
                    }
                }
            }
        }
    }
    for (i, v) in e.iter().enumerate() {
        if let Some(v) = v {
            let (a, rest) = (i / (w * w), i % (w * w));
            let (q, r) = (rest / w, rest % w);
            data.set_e(a, q / d, q % d, r / d, r % d, *v);
        }
    }
    for (i, v) in d3.iter().enumerate() {
        if let Some(v) = v {
            let (p, q, r) = (i / (w * w), (i / w) % w, i % w);
            data.set_d3(p / d, p % d, q / d, q % d, r / d, r % d, *v);
        }
    }
    data.validate()?;
    Ok(data)
}

/// Reads and validates a variational data file.
pub fn load_variational_data(path: impl AsRef<Path>) -> Result<VariationalData> {
    parse_variational_data(&std::fs::read_to_string(path)?)
}
