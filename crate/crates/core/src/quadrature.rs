//! Globally adaptive Gauss-Kronrod (7/15) quadrature over a partition.
//!
//! Intervals are seeded from caller-supplied breakpoints so that kinks of a
//! piecewise-smooth integrand never fall inside a panel.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];

// Gauss weights for the odd Kronrod nodes 1, 3, 5 and the centre.
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Limits for [`integrate`].
#[derive(Debug, Clone, Copy)]
pub struct QuadratureOptions {
    pub abs_tolerance: f64,
    pub max_panels: usize,
}

impl QuadratureOptions {
    pub fn with_tolerance(abs_tolerance: f64) -> Self {
        Self {
            abs_tolerance,
            max_panels: 4096,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel<T> {
    a: T,
    b: T,
    value: T,
    error: T,
}

fn gauss_kronrod<T: Scalar, F: Fn(T) -> T>(f: &F, a: T, b: T) -> Panel<T> {
    let half = (b - a) / T::lit(2.0);
    let centre = (a + b) / T::lit(2.0);
    let fc = f(centre);
    let mut kronrod = fc * T::lit(WGK[7]);
    let mut gauss = fc * T::lit(WG[3]);
    for (j, (&x, &wk)) in XGK.iter().zip(WGK.iter()).take(7).enumerate() {
        let dx = half * T::lit(x);
        let sum = f(centre - dx) + f(centre + dx);
        kronrod = kronrod + T::lit(wk) * sum;
        if j % 2 == 1 {
            gauss = gauss + T::lit(WG[j / 2]) * sum;
        }
    }
    let value = kronrod * half;
    let error = ((kronrod - gauss) * half).abs();
    Panel { a, b, value, error }
}

/// Integrates `f` over `[points[0], points[last]]`, with each consecutive
/// pair of `points` forming an initial panel. `points` must be sorted;
/// zero-width panels are skipped.
pub fn integrate<T, F>(f: F, points: &[T], options: QuadratureOptions) -> Result<T>
where
    T: Scalar,
    F: Fn(T) -> T,
{
    if !(options.abs_tolerance > 0.0) {
        return Err(Error::InvalidTolerance(options.abs_tolerance));
    }
    let tolerance = T::lit(options.abs_tolerance);
    let mut panels: Vec<Panel<T>> = points
        .windows(2)
        .filter(|w| w[1] > w[0])
        .map(|w| gauss_kronrod(&f, w[0], w[1]))
        .collect();

    loop {
        let total_error: T = panels.iter().map(|p| p.error).sum();
        if total_error <= tolerance {
            return Ok(panels.iter().map(|p| p.value).sum());
        }
        if panels.len() >= options.max_panels {
            return Err(Error::QuadratureFailure {
                tolerance: options.abs_tolerance,
                estimate: total_error.as_f64(),
            });
        }
        let (worst, _) = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.partial_cmp(&y.1.error).unwrap())
            .expect("non-empty when error exceeds tolerance");
        let p = panels.swap_remove(worst);
        let mid = (p.a + p.b) / T::lit(2.0);
        if !(mid > p.a && mid < p.b) {
            // Panel can no longer be split in this precision.
            return Err(Error::QuadratureFailure {
                tolerance: options.abs_tolerance,
                estimate: total_error.as_f64(),
            });
        }
        panels.push(gauss_kronrod(&f, p.a, mid));
        panels.push(gauss_kronrod(&f, mid, p.b));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomials_are_exact() {
        let opts = QuadratureOptions::with_tolerance(1e-12);
        let v = integrate(|x: f64| 3.0 * x * x + 1.0, &[0.0, 2.0], opts).unwrap();
        assert!((v - 10.0).abs() < 1e-12);
    }

    #[test]
    fn kinked_integrand_with_breakpoint() {
        let opts = QuadratureOptions::with_tolerance(1e-12);
        let v = integrate(|x: f64| (x - 0.3).abs(), &[0.0, 0.3, 1.0], opts).unwrap();
        assert!((v - (0.045 + 0.245)).abs() < 1e-12);
    }

    #[test]
    fn sqrt_endpoint_singularity_converges() {
        let opts = QuadratureOptions::with_tolerance(1e-10);
        let v = integrate(|x: f64| x.sqrt(), &[0.0, 1.0], opts).unwrap();
        assert!((v - 2.0 / 3.0).abs() < 1e-10);
    }

    #[test]
    fn failure_when_budget_exhausted() {
        let opts = QuadratureOptions {
            abs_tolerance: 1e-14,
            max_panels: 3,
        };
        let err = integrate(|x: f64| (50.0 * x).sin(), &[0.0, 10.0], opts).unwrap_err();
        assert!(matches!(err, Error::QuadratureFailure { .. }));
    }

    #[test]
    fn rejects_non_positive_tolerance() {
        let opts = QuadratureOptions::with_tolerance(0.0);
        assert!(matches!(
            integrate(|x: f64| x, &[0.0, 1.0], opts),
            Err(Error::InvalidTolerance(_))
        ));
    }

    #[test]
    fn empty_or_degenerate_range_is_zero() {
        let opts = QuadratureOptions::with_tolerance(1e-9);
        assert_eq!(integrate(|x: f64| x, &[1.0, 1.0], opts).unwrap(), 0.0);
    }
}
