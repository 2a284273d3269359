//! Cumulative-sum normalization, periodograms, and log-log slope fits — the
//! pipeline that turns an arithmetic sequence into a spectral exponent.
//!
//! The transform is computed directly (radix-2 when the length is a power
//! of two, otherwise a table-driven O(N^2) sum); lengths at desk scale make
//! dedicated FFT machinery unnecessary.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A finite real sequence whose first sample sits at integer index
/// `origin` (>= 1). Samples are validated finite and non-empty.
#[derive(Debug, Clone, PartialEq)]
pub struct RealSeries {
    origin: u64,
    samples: Vec<f64>,
}

impl RealSeries {
    pub fn new(origin: u64, samples: Vec<f64>) -> Result<Self> {
        if origin == 0 {
            return Err(Error::ZeroArgument);
        }
        if samples.is_empty() || samples.iter().any(|x| !x.is_finite()) {
            return Err(Error::BadSeries);
        }
        Ok(RealSeries { origin, samples })
    }

    pub fn origin(&self) -> u64 {
        self.origin
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        false // constructor rejects empty sample lists
    }

    /// Integer index of sample `i` (0-based storage offset).
    pub fn index(&self, i: usize) -> u64 {
        self.origin + i as u64
    }

    pub fn mean(&self) -> f64 {
        self.samples.iter().sum::<f64>() / self.samples.len() as f64
    }
}

/// One-sided power spectrum on frequencies `k/N`, `k = 1..floor(N/2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Periodogram {
    frequencies: Vec<f64>,
    powers: Vec<f64>,
}

impl Periodogram {
    pub fn frequencies(&self) -> &[f64] {
        &self.frequencies
    }

    pub fn powers(&self) -> &[f64] {
        &self.powers
    }

    pub fn len(&self) -> usize {
        self.frequencies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frequencies.is_empty()
    }
}

/// Result of an ordinary least-squares fit of `log10 power` against
/// `log10 frequency` over a band.
#[derive(Debug, Clone, PartialEq)]
pub struct SlopeFit {
    /// Fitted slope; a `1/f^gamma` spectrum reports `-gamma` here.
    pub exponent: f64,
    pub intercept: f64,
    /// Frequency band `(f_lo, f_hi)` the fit was restricted to.
    pub band: (f64, f64),
    pub residual_rms: f64,
    /// Bins actually used by the fit.
    pub n_points: usize,
    /// In-band bins dropped for having zero power.
    pub n_dropped: usize,
}

/// Series of normalized cumulative sums `(sum_{n=1..t} f(n)) / t^sigma`
/// for `t = 1..t_max`.
pub fn normalized_cumsum(
    mut f: impl FnMut(u64) -> f64,
    t_max: u64,
    sigma: f64,
) -> Result<RealSeries> {
    if t_max < 2 {
        return Err(Error::TooFewTerms { got: t_max, min: 2 });
    }
    if !sigma.is_finite() {
        return Err(Error::BadParameter {
            name: "sigma",
            value: sigma,
        });
    }
    let mut running = 0.0f64;
    let mut samples = Vec::with_capacity(t_max as usize);
    for t in 1..=t_max {
        running += f(t);
        samples.push(running / (t as f64).powf(sigma));
    }
    RealSeries::new(1, samples)
}

/// Least-squares slope of `ln S(t)` against `ln t` over the upper half of
/// the index range; estimates the power-law growth of a cumulative sum.
///
/// Fails if any value in the fit range is nonpositive (its log is not
/// defined).
pub fn growth_exponent(series: &RealSeries) -> Result<f64> {
    let n = series.len();
    let start = n / 2;
    let mut xs = Vec::with_capacity(n - start);
    let mut ys = Vec::with_capacity(n - start);
    for i in start..n {
        let t = series.index(i);
        let value = series.samples()[i];
        if value <= 0.0 {
            return Err(Error::NonPositiveFit { t, value });
        }
        xs.push((t as f64).ln());
        ys.push(value.ln());
    }
    Ok(ols(&xs, &ys).0)
}

/// Mean-removed one-sided periodogram. Powers are `|X_k|^2 / N` with the
/// DC bin excluded, so the two-sided sum satisfies Parseval against the
/// series variance.
pub fn periodogram(series: &RealSeries) -> Result<Periodogram> {
    let n = series.len();
    if n < 16 {
        return Err(Error::SeriesTooShort { len: n, min: 16 });
    }
    let mean = series.mean();
    let data: Vec<Complex64> = series
        .samples()
        .iter()
        .map(|&x| Complex64::new(x - mean, 0.0))
        .collect();
    let spectrum = fft::dft(&data);
    let half = n / 2;
    let scale = 1.0 / n as f64;
    let mut frequencies = Vec::with_capacity(half);
    let mut powers = Vec::with_capacity(half);
    for (k, value) in spectrum.iter().enumerate().take(half + 1).skip(1) {
        frequencies.push(k as f64 * scale);
        powers.push(value.norm_sqr() * scale);
    }
    Ok(Periodogram {
        frequencies,
        powers,
    })
}

/// OLS fit of `log10 power` on `log10 frequency` over `band = (f_lo, f_hi)`
/// inclusive. Zero-power bins inside the band are dropped and counted; at
/// least 8 usable bins are required.
pub fn loglog_slope(p: &Periodogram, band: (f64, f64)) -> Result<SlopeFit> {
    let (f_lo, f_hi) = band;
    if !(f_lo.is_finite() && f_hi.is_finite()) || f_lo >= f_hi || f_lo < 0.0 {
        return Err(Error::BadParameter {
            name: "band",
            value: f_lo,
        });
    }
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    let mut dropped = 0usize;
    for (f, pw) in p.frequencies().iter().zip(p.powers()) {
        if *f < f_lo || *f > f_hi {
            continue;
        }
        if *pw > 0.0 {
            xs.push(f.log10());
            ys.push(pw.log10());
        } else {
            dropped += 1;
        }
    }
    const MIN_BINS: usize = 8;
    if xs.len() < MIN_BINS {
        return Err(Error::TooFewBins {
            usable: xs.len(),
            min: MIN_BINS,
        });
    }
    let (slope, intercept) = ols(&xs, &ys);
    let mut ss = 0.0;
    for (x, y) in xs.iter().zip(&ys) {
        let r = y - (slope * x + intercept);
        ss += r * r;
    }
    Ok(SlopeFit {
        exponent: slope,
        intercept,
        band,
        residual_rms: (ss / xs.len() as f64).sqrt(),
        n_points: xs.len(),
        n_dropped: dropped,
    })
}

/// Ordinary least squares for `y = slope * x + intercept`.
fn ols(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    let slope = sxy / sxx;
    (slope, my - slope * mx)
}

mod fft {
    use super::Complex64;
    use std::f64::consts::TAU;

    /// Forward DFT `X_k = sum_n x_n e^{-2 pi i k n / N}`.
    pub fn dft(x: &[Complex64]) -> Vec<Complex64> {
        let n = x.len();
        if n.is_power_of_two() {
            radix2(x)
        } else {
            naive(x)
        }
    }

    fn radix2(x: &[Complex64]) -> Vec<Complex64> {
        let n = x.len();
        let mut data = x.to_vec();
        // Bit-reversal permutation.
        let bits = n.trailing_zeros();
        for i in 0..n {
            let j = i.reverse_bits() >> (usize::BITS - bits);
            if j > i {
                data.swap(i, j);
            }
        }
        let mut len = 2;
        while len <= n {
            let step = -TAU / len as f64;
            let w_len = Complex64::from_polar(1.0, step);
            for chunk in data.chunks_mut(len) {
                let mut w = Complex64::new(1.0, 0.0);
                for k in 0..len / 2 {
                    let a = chunk[k];
                    let b = chunk[k + len / 2] * w;
                    chunk[k] = a + b;
                    chunk[k + len / 2] = a - b;
                    w *= w_len;
                }
            }
            len <<= 1;
        }
        data
    }

    fn naive(x: &[Complex64]) -> Vec<Complex64> {
        let n = x.len();
        // Twiddle table indexed by (j k) mod N keeps the O(N^2) sum exact
        // in angle reduction.
        let table: Vec<Complex64> = (0..n)
            .map(|r| Complex64::from_polar(1.0, -TAU * r as f64 / n as f64))
            .collect();
        (0..n)
            .map(|k| {
                let mut acc = Complex64::new(0.0, 0.0);
                for (j, value) in x.iter().enumerate() {
                    acc += value * table[j * k % n];
                }
                acc
            })
            .collect()
    }

}
