//! Credibility measure of triangular fuzzy variables and the credibilistic
//! mean, variance and standard deviation, each with a closed form and a
//! quadrature counterpart that integrates the credibility measure directly.

use crate::error::Result;
use crate::fuzzy::TriangularFuzzyNumber;
use crate::quadrature::{integrate, QuadratureOptions};
use crate::scalar::Scalar;

fn half<T: Scalar>() -> T {
    T::lit(0.5)
}

/// `Cr{ξ >= r}`.
pub fn cr_geq<T: Scalar>(x: &TriangularFuzzyNumber<T>, r: T) -> T {
    let (a, b, c) = (x.l(), x.m(), x.u());
    if r <= a {
        T::one()
    } else if r <= b {
        T::one() - (r - a) / (T::lit(2.0) * (b - a))
    } else if r <= c {
        (c - r) / (T::lit(2.0) * (c - b))
    } else {
        T::zero()
    }
}

/// `Cr{ξ <= r}`.
pub fn cr_leq<T: Scalar>(x: &TriangularFuzzyNumber<T>, r: T) -> T {
    let (a, b, c) = (x.l(), x.m(), x.u());
    if r < a {
        T::zero()
    } else if r < b {
        (r - a) / (T::lit(2.0) * (b - a))
    } else if r < c {
        T::one() - (c - r) / (T::lit(2.0) * (c - b))
    } else {
        T::one()
    }
}

/// Credibilistic expected value `(l + 2m + u) / 4`.
pub fn expected_value<T: Scalar>(x: &TriangularFuzzyNumber<T>) -> T {
    (x.l() + T::lit(2.0) * x.m() + x.u()) / T::lit(4.0)
}

/// Expected value by integrating `Cr{ξ >= r}` over `r > 0` minus
/// `Cr{ξ <= r}` over `r < 0`.
pub fn expected_value_numeric<T: Scalar>(x: &TriangularFuzzyNumber<T>, quad_tolerance: f64) -> Result<T> {
    let zero = T::zero();
    let opts = QuadratureOptions::with_tolerance(quad_tolerance / 2.0);

    let upper = x.u().max(zero);
    let mut positive = vec![zero];
    positive.extend(x.to_array().into_iter().filter(|&p| p > zero));
    positive.push(upper);
    let positive_part = integrate(|r| cr_geq(x, r), &positive, opts)?;

    let lower = x.l().min(zero);
    let mut negative = vec![lower];
    negative.extend(x.to_array().into_iter().filter(|&p| p < zero));
    negative.push(zero);
    let negative_part = integrate(|r| cr_leq(x, r), &negative, opts)?;

    Ok(positive_part - negative_part)
}

/// Credibilistic variance in closed form.
///
/// With `α = m - l` and `β = u - m`: `α²/6` when the spreads are equal,
/// `(33β³ + 11α²β + 21αβ² - α³) / (384β)` when `α < β`, and the mirror
/// image (α and β exchanged) when `α > β`.
pub fn variance<T: Scalar>(x: &TriangularFuzzyNumber<T>) -> T {
    let alpha = x.left_spread();
    let beta = x.right_spread();
    if alpha == beta {
        alpha * alpha / T::lit(6.0)
    } else {
        let (short, long) = if alpha < beta { (alpha, beta) } else { (beta, alpha) };
        let numerator =
            T::lit(33.0) * long.powi(3) + T::lit(11.0) * short * short * long + T::lit(21.0) * short * long * long
                - short.powi(3);
        numerator / (T::lit(384.0) * long)
    }
}

/// Credibilistic standard deviation, `sqrt(variance)`.
pub fn std_dev<T: Scalar>(x: &TriangularFuzzyNumber<T>) -> T {
    variance(x).sqrt()
}

/// `Pos{ξ <= t}`.
fn pos_at_most<T: Scalar>(x: &TriangularFuzzyNumber<T>, t: T) -> T {
    if t >= x.m() {
        T::one()
    } else if t < x.l() {
        T::zero()
    } else {
        (t - x.l()) / (x.m() - x.l())
    }
}

/// `Pos{ξ >= t}`.
fn pos_at_least<T: Scalar>(x: &TriangularFuzzyNumber<T>, t: T) -> T {
    if t <= x.m() {
        T::one()
    } else if t > x.u() {
        T::zero()
    } else {
        (x.u() - t) / (x.u() - x.m())
    }
}

/// `Pos{lo < ξ < hi}` for `lo < hi`.
fn pos_open_interval<T: Scalar>(x: &TriangularFuzzyNumber<T>, lo: T, hi: T) -> T {
    let (a, b, c) = (x.l(), x.m(), x.u());
    if lo < b && b < hi {
        T::one()
    } else if hi <= b {
        if hi <= a {
            T::zero()
        } else {
            (hi - a) / (b - a)
        }
    } else if lo >= c {
        T::zero()
    } else {
        (c - lo) / (c - b)
    }
}

/// `Cr{(ξ - e)² >= r}`.
fn cr_squared_deviation_at_least<T: Scalar>(x: &TriangularFuzzyNumber<T>, e: T, r: T) -> T {
    if r <= T::zero() {
        return T::one();
    }
    let s = r.sqrt();
    let outside = pos_at_most(x, e - s).max(pos_at_least(x, e + s));
    half::<T>() * (outside + T::one() - pos_open_interval(x, e - s, e + s))
}

/// Variance `E[(ξ - e)²]` by integrating the credibility of the squared
/// deviation. The integrand is smooth between the squared distances from `e`
/// to `l`, `m`, `u` and to the point where the two outer legs cross, which
/// become the panel boundaries.
pub fn variance_numeric<T: Scalar>(x: &TriangularFuzzyNumber<T>, quad_tolerance: f64) -> Result<T> {
    let e = expected_value(x);
    let (a, b, c) = (x.l(), x.m(), x.u());
    let reach = (e - a).max(c - e);
    if !(reach > T::zero()) {
        // Still validate the tolerance for a crisp variable.
        return integrate(
            |_| T::zero(),
            &[T::zero(), T::one()],
            QuadratureOptions::with_tolerance(quad_tolerance),
        );
    }

    let (alpha, beta) = (b - a, c - b);
    let mut radii = vec![T::zero(), (e - a).abs(), (b - e).abs(), (c - e).abs(), reach];
    if alpha != beta {
        let crossing = ((c - e) * alpha - (e - a) * beta) / (alpha - beta);
        if crossing > T::zero() && crossing < reach {
            radii.push(crossing);
        }
    }
    let mut points: Vec<T> = radii.into_iter().map(|s| s * s).collect();
    points.sort_by(|p, q| p.partial_cmp(q).unwrap());
    points.dedup();

    integrate(
        |r| cr_squared_deviation_at_least(x, e, r),
        &points,
        QuadratureOptions::with_tolerance(quad_tolerance),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use proptest::prelude::*;

    type Tfn = TriangularFuzzyNumber<f64>;

    fn t(l: f64, m: f64, u: f64) -> Tfn {
        Tfn::new(l, m, u).unwrap()
    }

    // Cr{ξ >= r} = ½(sup_{z >= r} μ(z) + 1 - sup_{z < r} μ(z)), sups taken on a grid.
    fn grid_cr_geq(x: &Tfn, r: f64) -> f64 {
        let n = 200_000;
        let (lo, hi) = (x.l() - 1.0, x.u() + 1.0);
        let step = (hi - lo) / n as f64;
        let mut sup_ge: f64 = 0.0;
        let mut sup_lt: f64 = 0.0;
        for k in 0..=n {
            let z = lo + step * k as f64;
            let mu = x.membership(z);
            if z >= r {
                sup_ge = sup_ge.max(mu);
            } else {
                sup_lt = sup_lt.max(mu);
            }
        }
        // the mode may fall between grid nodes
        if x.m() >= r {
            sup_ge = 1.0;
        } else {
            sup_lt = 1.0;
        }
        0.5 * (sup_ge + 1.0 - sup_lt)
    }

    #[test]
    fn cr_geq_examples() {
        let x = t(1.0, 3.0, 5.0);
        assert!((cr_geq(&x, 3.0) - 0.5).abs() < 1e-12);
        assert!((grid_cr_geq(&x, 3.0) - 0.5).abs() < 1e-4);
        assert_eq!(cr_geq(&x, 1.0), 1.0);
        assert!((cr_geq(&x, 4.0) - 0.25).abs() < 1e-12);
        assert!((grid_cr_geq(&x, 4.0) - 0.25).abs() < 1e-4);
        assert_eq!(cr_geq(&x, 6.0), 0.0);
    }

    #[test]
    fn cr_geq_matches_grid_oracle() {
        for x in [t(1.0, 3.0, 5.0), t(0.0, 1.0, 7.0), t(2.0, 2.0, 4.0), t(2.0, 4.0, 4.0)] {
            for k in 0..40 {
                let r = x.l() - 0.5 + k as f64 * (x.u() - x.l() + 1.0) / 40.0;
                if r == x.m() {
                    continue;
                }
                assert!((cr_geq(&x, r) - grid_cr_geq(&x, r)).abs() < 1e-4, "{x} r={r}");
            }
        }
    }

    #[test]
    fn cr_leq_examples() {
        let x = t(1.0, 3.0, 5.0);
        assert!((cr_leq(&x, 3.0) - 0.5).abs() < 1e-12);
        assert_eq!(cr_leq(&x, 5.0), 1.0);
        assert!((cr_leq(&x, 2.0) - 0.25).abs() < 1e-12);
        assert_eq!(cr_leq(&x, 0.0), 0.0);
    }

    #[test]
    fn expected_value_examples() {
        assert!((expected_value(&t(0.100, 0.208, 0.500)) - 0.254).abs() < 5e-4);
        assert_eq!(expected_value(&Tfn::crisp(3.5)), 3.5);
        // 3-decimal inputs give 0.3905; the printed 0.391 comes from full precision.
        assert!((expected_value(&t(0.100, 0.231, 1.000)) - 0.391).abs() < 1e-3);
    }

    #[test]
    fn expected_value_numeric_examples() {
        let tol = 1e-9;
        assert!((expected_value_numeric(&t(0.0, 1.0, 2.0), tol).unwrap() - 1.0).abs() < tol);
        assert!((expected_value_numeric(&t(1.0, 2.0, 5.0), tol).unwrap() - 2.5).abs() < tol);
        assert!((expected_value_numeric(&t(0.1, 0.208, 0.5), tol).unwrap() - 0.254).abs() < tol);
        assert!((expected_value_numeric(&t(-3.0, -2.0, 4.0), tol).unwrap() + 0.75).abs() < tol);
        assert!((expected_value_numeric(&t(-9.0, -5.0, -4.0), tol).unwrap() + 5.75).abs() < tol);
        assert!(matches!(
            expected_value_numeric(&t(0.0, 1.0, 2.0), -1.0),
            Err(Error::InvalidTolerance(_))
        ));
    }

    #[test]
    fn variance_examples() {
        assert_eq!(variance(&Tfn::crisp(4.0)), 0.0);
        assert!((variance(&t(0.0, 1.0, 2.0)) - 1.0 / 6.0).abs() < 1e-15);
        let v = variance(&t(0.100, 0.208, 0.500));
        assert!((v - 0.0094).abs() < 5e-5);
        assert!((v.sqrt() - 0.097).abs() < 5e-4);
    }

    #[test]
    fn variance_numeric_examples() {
        let tol = 1e-9;
        assert!(variance_numeric(&Tfn::crisp(2.0), tol).unwrap().abs() < tol);
        assert!((variance_numeric(&t(0.0, 1.0, 2.0), tol).unwrap() - 1.0 / 6.0).abs() < tol);
        let x = t(0.100, 0.208, 0.500);
        assert!((variance_numeric(&x, tol).unwrap() - variance(&x)).abs() < tol);
    }

    #[test]
    fn asymmetric_branches_match_oracle() {
        // Left-heavy spreads exercise the mirrored branch, including β = 0.
        for x in [
            t(0.0, 4.0, 5.0),
            t(0.5, 0.828, 1.0),
            t(0.7, 0.9, 1.0),
            t(1.0, 3.0, 3.0),
            t(0.0, 0.0, 1.0),
        ] {
            let exact = variance(&x);
            let numeric = variance_numeric(&x, 1e-10).unwrap();
            assert!((exact - numeric).abs() < 1e-9, "{x}: {exact} vs {numeric}");
        }
    }

    #[test]
    fn std_dev_examples() {
        assert!((std_dev(&t(0.100, 0.208, 0.500)) - 0.097).abs() < 5e-4);
        assert!((std_dev(&t(0.100, 0.231, 1.000)) - 0.238).abs() < 5e-4);
        assert_eq!(std_dev(&Tfn::crisp(1.0)), 0.0);
    }

    fn arb_tfn() -> impl Strategy<Value = Tfn> {
        prop::array::uniform3(0.0f64..10.0).prop_map(|mut v| {
            v.sort_by(f64::total_cmp);
            t(v[0], v[1], v[2])
        })
    }

    proptest! {
        #[test]
        fn self_duality(x in arb_tfn(), w in 0.0f64..1.0) {
            let r = x.l() + w * (x.u() - x.l());
            if r > x.l() && r < x.u() {
                prop_assert!((cr_geq(&x, r) + cr_leq(&x, r) - 1.0).abs() <= 1e-12);
            }
        }

        #[test]
        fn cr_monotone(x in arb_tfn(), r1 in -1.0f64..11.0, r2 in -1.0f64..11.0) {
            let (lo, hi) = if r1 <= r2 { (r1, r2) } else { (r2, r1) };
            prop_assert!(cr_geq(&x, lo) >= cr_geq(&x, hi));
            prop_assert!(cr_leq(&x, lo) <= cr_leq(&x, hi));
        }

        #[test]
        fn reflection(x in arb_tfn()) {
            let r = x.reflect();
            prop_assert!((variance(&r) - variance(&x)).abs() <= 1e-12);
            prop_assert!((expected_value(&r) + expected_value(&x)).abs() <= 1e-12);
        }

        #[test]
        fn scaling(x in arb_tfn(), k in 0.01f64..20.0) {
            let y = x.scale(k).unwrap();
            prop_assert!((expected_value(&y) - k * expected_value(&x)).abs() <= 1e-10);
            prop_assert!((std_dev(&y) - k * std_dev(&x)).abs() <= 1e-10);
        }

        #[test]
        fn symmetric_reduction(b in -5.0f64..5.0, alpha in 0.0f64..5.0) {
            let x = t(b - alpha, b, b + alpha);
            // b ± α may not round symmetrically; compare against the spreads actually stored.
            if x.left_spread() == x.right_spread() {
                prop_assert!((variance(&x) - alpha * alpha / 6.0).abs() <= 1e-12);
            }
        }
    }
}
