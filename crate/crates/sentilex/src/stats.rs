//! Correlation machinery: Pearson, midranks with tie averaging, Spearman.
//!
//! Spearman is computed as Pearson over midranks rather than via the
//! 6*sum(d^2) shortcut, which is wrong under ties — and lexicon scores tie
//! constantly. A constant series yields an explicit error instead of a
//! silent 0, so harnesses can report the gap honestly.

use crate::error::{Error, Result};

/// Two aligned series of equal length (at least 2).
#[derive(Debug, Clone, PartialEq)]
pub struct PairedSeries {
    x: Vec<f64>,
    y: Vec<f64>,
}

impl PairedSeries {
    pub fn new(x: Vec<f64>, y: Vec<f64>) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::LengthMismatch {
                left: x.len(),
                right: y.len(),
            });
        }
        if x.len() < 2 {
            return Err(Error::SeriesTooShort { len: x.len() });
        }
        Ok(PairedSeries { x, y })
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length >= 2 by construction
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn y(&self) -> &[f64] {
        &self.y
    }

    /// Product-moment correlation, clamped into [-1, 1].
    pub fn pearson(&self) -> Result<f64> {
        let n = self.x.len() as f64;
        let mean_x = self.x.iter().sum::<f64>() / n;
        let mean_y = self.y.iter().sum::<f64>() / n;
        let mut sxy = 0.0;
        let mut sxx = 0.0;
        let mut syy = 0.0;
        for (xv, yv) in self.x.iter().zip(&self.y) {
            let dx = xv - mean_x;
            let dy = yv - mean_y;
            sxy += dx * dy;
            sxx += dx * dx;
            syy += dy * dy;
        }
        if sxx == 0.0 {
            return Err(Error::DegenerateSeries { side: "x" });
        }
        if syy == 0.0 {
            return Err(Error::DegenerateSeries { side: "y" });
        }
        Ok((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
    }

    /// Pearson over midranks of both series.
    pub fn spearman(&self) -> Result<f64> {
        PairedSeries::new(midranks(&self.x), midranks(&self.y))?.pearson()
    }
}

/// Pearson correlation of two aligned slices.
pub fn pearson(x: &[f64], y: &[f64]) -> Result<f64> {
    PairedSeries::new(x.to_vec(), y.to_vec())?.pearson()
}

/// Spearman rank correlation of two aligned slices.
pub fn spearman(x: &[f64], y: &[f64]) -> Result<f64> {
    PairedSeries::new(x.to_vec(), y.to_vec())?.spearman()
}

/// 1-based ranks; tied values receive the average of the rank positions
/// they occupy. Ranks always sum to n(n+1)/2.
pub fn midranks(values: &[f64]) -> Vec<f64> {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        // positions i..=j hold ranks i+1..=j+1
        let avg = (i + j + 2) as f64 / 2.0;
        for k in i..=j {
            ranks[order[k]] = avg;
        }
        i = j + 1;
    }
    ranks
}
