//! Small numerical helpers shared across modules.

/// Finite-difference velocities on a (possibly nonuniform) strictly increasing
/// grid: three-point central formula in the interior, one-sided second-order
/// formulas at the ends. `values[i]` is the sample at `grid[i]`.
pub fn grid_velocities(grid: &[f64], values: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let m = grid.len();
    assert!(m >= 2 && values.len() == m);
    let dim = values[0].len();
    let mut out = vec![vec![0.0; dim]; m];
    if m == 2 {
        let h = grid[1] - grid[0];
        for d in 0..dim {
            let v = (values[1][d] - values[0][d]) / h;
            out[0][d] = v;
            out[1][d] = v;
        }
        return out;
    }
    for i in 1..m - 1 {
        let h0 = grid[i] - grid[i - 1];
        let h1 = grid[i + 1] - grid[i];
        let w0 = -h1 / (h0 * (h0 + h1));
        let w1 = (h1 - h0) / (h0 * h1);
        let w2 = h0 / (h1 * (h0 + h1));
        for d in 0..dim {
            out[i][d] = w0 * values[i - 1][d] + w1 * values[i][d] + w2 * values[i + 1][d];
        }
    }
    // one-sided ends
    {
        let h0 = grid[1] - grid[0];
        let h1 = grid[2] - grid[1];
        let w0 = -(2.0 * h0 + h1) / (h0 * (h0 + h1));
        let w1 = (h0 + h1) / (h0 * h1);
        let w2 = -h0 / (h1 * (h0 + h1));
        for d in 0..dim {
            out[0][d] = w0 * values[0][d] + w1 * values[1][d] + w2 * values[2][d];
        }
    }
    {
        let hm = grid[m - 1] - grid[m - 2];
        let hm1 = grid[m - 2] - grid[m - 3];
        let w2 = (2.0 * hm + hm1) / (hm * (hm + hm1));
        let w1 = -(hm + hm1) / (hm1 * hm);
        let w0 = hm / (hm1 * (hm + hm1));
        for d in 0..dim {
            out[m - 1][d] =
                w0 * values[m - 3][d] + w1 * values[m - 2][d] + w2 * values[m - 1][d];
        }
    }
    out
}

/// Cumulative trapezoid of sampled integrand `f` over `grid`, starting at 0.
pub fn cumulative_trapezoid(grid: &[f64], f: &[f64]) -> Vec<f64> {
    let mut acc = vec![0.0; grid.len()];
    for i in 1..grid.len() {
        acc[i] = acc[i - 1] + 0.5 * (f[i] + f[i - 1]) * (grid[i] - grid[i - 1]);
    }
    acc
}

/// Golden-section maximization of `f` on `[lo, hi]`. Assumes `f` is unimodal
/// on the bracket; returns (argmax, max).
pub fn golden_max(mut lo: f64, mut hi: f64, f: impl Fn(f64) -> f64, iters: usize) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..iters {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        }
    }
    let xm = 0.5 * (lo + hi);
    (xm, f(xm))
}

/// Bisection root of a continuous, monotone `f` on `[lo, hi]` with a sign
/// change. Returns the midpoint after `iters` halvings.
pub fn bisect_root(mut lo: f64, mut hi: f64, f: impl Fn(f64) -> f64, iters: usize) -> f64 {
    let flo = f(lo);
    for _ in 0..iters {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if (fm >= 0.0) == (flo >= 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Catmull-Rom interpolation of a vector-valued series over a nonuniform grid.
/// Evaluates at `x`, clamped to the grid range. Second-order accurate with a
/// continuous derivative, which keeps finite-difference speeds of resampled
/// curves clean.
pub fn catmull_rom_eval(grid: &[f64], values: &[Vec<f64>], x: f64) -> Vec<f64> {
    let m = grid.len();
    let dim = values[0].len();
    let x = x.clamp(grid[0], grid[m - 1]);
    // locate interval
    let mut i = match grid.binary_search_by(|g| g.partial_cmp(&x).unwrap()) {
        Ok(j) => j.min(m - 2),
        Err(j) => j.saturating_sub(1).min(m - 2),
    };
    if i >= m - 1 {
        i = m - 2;
    }
    let x0 = grid[i];
    let x1 = grid[i + 1];
    let h = x1 - x0;
    let u = (x - x0) / h;
    // endpoint tangents from neighbouring samples (nonuniform-aware)
    let tangent = |j: usize| -> Vec<f64> {
        if j == 0 {
            let h0 = grid[1] - grid[0];
            (0..dim).map(|d| (values[1][d] - values[0][d]) / h0).collect()
        } else if j == m - 1 {
            let h0 = grid[m - 1] - grid[m - 2];
            (0..dim)
                .map(|d| (values[m - 1][d] - values[m - 2][d]) / h0)
                .collect()
        } else {
            let ha = grid[j] - grid[j - 1];
            let hb = grid[j + 1] - grid[j];
            (0..dim)
                .map(|d| {
                    let da = (values[j][d] - values[j - 1][d]) / ha;
                    let db = (values[j + 1][d] - values[j][d]) / hb;
                    (ha * db + hb * da) / (ha + hb)
                })
                .collect()
        }
    };
    let t0 = tangent(i);
    let t1 = tangent(i + 1);
    let (u2, u3) = (u * u, u * u * u);
    let h00 = 2.0 * u3 - 3.0 * u2 + 1.0;
    let h10 = u3 - 2.0 * u2 + u;
    let h01 = -2.0 * u3 + 3.0 * u2;
    let h11 = u3 - u2;
    (0..dim)
        .map(|d| {
            h00 * values[i][d] + h10 * h * t0[d] + h01 * values[i + 1][d] + h11 * h * t1[d]
        })
        .collect()
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add_scaled(a: &[f64], c: f64, b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + c * y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn velocities_quadratic_exact() {
        let grid: Vec<f64> = (0..9).map(|i| i as f64 * 0.13).collect();
        let vals: Vec<Vec<f64>> = grid.iter().map(|&s| vec![3.0 * s * s - s]).collect();
        let v = grid_velocities(&grid, &vals);
        for (i, &s) in grid.iter().enumerate() {
            assert!((v[i][0] - (6.0 * s - 1.0)).abs() < 1e-10, "i={i}");
        }
    }

    #[test]
    fn golden_finds_parabola_peak() {
        let (x, fx) = golden_max(-1.0, 3.0, |x| -(x - 1.3) * (x - 1.3), 80);
        assert!((x - 1.3).abs() < 1e-9);
        assert!(fx.abs() < 1e-15);
    }

    #[test]
    fn catmull_rom_reproduces_linear() {
        let grid = vec![0.0, 0.4, 1.0, 1.7];
        let vals: Vec<Vec<f64>> = grid.iter().map(|&s| vec![2.0 * s + 1.0, -s]).collect();
        let p = catmull_rom_eval(&grid, &vals, 0.77);
        assert!((p[0] - (2.0 * 0.77 + 1.0)).abs() < 1e-12);
        assert!((p[1] + 0.77).abs() < 1e-12);
    }
}
