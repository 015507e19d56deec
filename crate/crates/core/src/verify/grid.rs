use crate::error::{Error, Result};

/// Evaluation grid. Argument-ratio bounds take y = x·f for each factor f
/// with y ≤ `y_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub nu_values: Vec<f64>,
    pub x_values: Vec<f64>,
    pub y_factors: Vec<f64>,
    pub y_max: f64,
}

pub const DEFAULT_NU: [f64; 16] = [-1.4, -1.25, -1.0, -0.75, -0.5, -0.25, 0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.5, 5.0, 7.5, 10.0];

/// `n` points from `a` to `b` evenly spaced in log scale, endpoints exact.
pub fn log_space(a: f64, b: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![a];
    }
    let (la, lb) = (a.ln(), b.ln());
    (0..n)
        .map(|i| match i {
            0 => a,
            i if i == n - 1 => b,
            i => (la + (lb - la) * i as f64 / (n - 1) as f64).exp(),
        })
        .collect()
}

fn strictly_increasing(v: &[f64]) -> bool {
    v.windows(2).all(|w| w[0] < w[1]) && v.iter().all(|t| t.is_finite())
}

impl Grid {
    pub fn new(nu_values: Vec<f64>, x_values: Vec<f64>, y_factors: Vec<f64>, y_max: f64) -> Result<Self> {
        if !strictly_increasing(&nu_values) || !strictly_increasing(&x_values) {
            return Err(Error::domain("grid values must be finite and strictly increasing"));
        }
        if x_values.first().is_some_and(|&x| x <= 0.0) {
            return Err(Error::domain("grid x values must be positive"));
        }
        if y_factors.iter().any(|&f| !(f > 1.0)) {
            return Err(Error::domain("y factors must exceed 1"));
        }
        Ok(Self { nu_values, x_values, y_factors, y_max })
    }

    /// The standard certification grid: 14 orders covering every range
    /// endpoint, 60 log-spaced x in [1e−3, 50], y = x·{1.5, 3, 10} ≤ 60.
    pub fn default_grid() -> Self {
        Self {
            nu_values: DEFAULT_NU.to_vec(),
            x_values: log_space(1e-3, 50.0, 60),
            y_factors: vec![1.5, 3.0, 10.0],
            y_max: 60.0,
        }
    }

    pub fn ys(&self, x: f64) -> impl Iterator<Item = f64> + '_ {
        self.y_factors.iter().map(move |f| x * f).filter(|&y| y <= self.y_max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_shape() {
        let g = Grid::default_grid();
        assert_eq!(g.x_values.len(), 60);
        assert_eq!(g.x_values[0], 1e-3);
        assert_eq!(g.x_values[59], 50.0);
        assert_eq!(g.ys(30.0).collect::<Vec<_>>(), vec![45.0]);
        assert!(Grid::new(vec![1.0, 0.0], vec![1.0], vec![], 1.0).is_err());
    }
}
