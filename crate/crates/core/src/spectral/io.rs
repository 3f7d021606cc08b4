use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{ConservationLog, SpectralState};
use crate::error::{Error, Result};

#[derive(Serialize)]
struct LogRow {
    s: f64,
    #[serde(rename = "M")]
    m: f64,
    #[serde(rename = "T")]
    t: f64,
    #[serde(rename = "L2")]
    l2: f64,
    #[serde(rename = "Hsigma")]
    hsigma: f64,
}

#[derive(Serialize, Deserialize)]
struct SpectrumRow {
    k: usize,
    re: f64,
    im: f64,
}

/// Columns `s,M,T,L2,Hsigma`.
pub fn write_log_csv(log: &ConservationLog, path: impl AsRef<Path>) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    for i in 0..log.len() {
        w.serialize(LogRow {
            s: log.times[i],
            m: log.m_values[i],
            t: log.t_values[i],
            l2: log.l2_values[i],
            hsigma: log.hsigma_values[i],
        })?;
    }
    w.flush()?;
    Ok(())
}

/// Columns `k,re,im` for `k = 1..=K`.
pub fn write_spectrum_csv(state: &SpectralState, path: impl AsRef<Path>) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    for (i, c) in state.coeffs().iter().enumerate() {
        w.serialize(SpectrumRow { k: i + 1, re: c.re, im: c.im })?;
    }
    w.flush()?;
    Ok(())
}

/// Reads a spectrum written by [`write_spectrum_csv`] into a state with `n_modes` modes.
pub fn read_spectrum_csv(path: impl AsRef<Path>, n_modes: usize) -> Result<SpectralState> {
    let mut state = SpectralState::zeros(n_modes);
    for row in csv::Reader::from_path(path)?.deserialize() {
        let row: SpectrumRow = row?;
        if row.k == 0 || row.k > n_modes {
            return Err(Error::Spectral(format!("spectrum row k = {} outside 1..={n_modes}", row.k)));
        }
        state.coeffs_mut()[row.k - 1] = Complex64::new(row.re, row.im);
    }
    Ok(state)
}
