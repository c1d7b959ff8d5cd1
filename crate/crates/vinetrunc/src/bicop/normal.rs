//! Standard normal distribution function, density, and quantile.
//!
//! The distribution function goes through a rational Chebyshev
//! approximation of erfc (Cody's SPECFUN scheme, three regimes), good to
//! roughly machine precision in relative terms. The quantile uses
//! Wichura's PPND16 rational approximations followed by a single Newton
//! step against our own cdf, so the pair is self-consistent to ~1e-15.

use crate::error::{Error, Result};

const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;
const SQRT_2PI: f64 = 2.506_628_274_631_000_5;

/// Density of the standard normal distribution.
pub fn std_normal_pdf(x: f64) -> f64 {
    (-0.5 * x * x).exp() / SQRT_2PI
}

/// Distribution function of the standard normal, saturating to 0/1 in the
/// extreme tails.
pub fn std_normal_cdf(x: f64) -> f64 {
    0.5 * erfc(-x * FRAC_1_SQRT_2)
}

/// Quantile of the standard normal.
pub fn std_normal_quantile(p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::DomainError(format!(
            "normal quantile needs p in (0,1), got {p}"
        )));
    }
    let mut x = ppnd16(p);
    // one Newton step against our cdf; skipped where the density underflows
    let pdf = std_normal_pdf(x);
    if pdf > 1e-280 {
        let step = (std_normal_cdf(x) - p) / pdf;
        if step.is_finite() {
            x -= step;
        }
    }
    Ok(x)
}

/// Complementary error function, Cody's rational approximations.
pub fn erfc(x: f64) -> f64 {
    let ax = x.abs();
    if ax <= 0.46875 {
        return 1.0 - erf_small(x);
    }
    let val = if ax <= 4.0 {
        erfc_mid(ax)
    } else {
        erfc_large(ax)
    };
    if x < 0.0 {
        2.0 - val
    } else {
        val
    }
}

// |x| <= 0.46875
fn erf_small(x: f64) -> f64 {
    const A: [f64; 5] = [
        3.161_123_743_870_565_6e0,
        1.138_641_541_510_501_6e2,
        3.774_852_376_853_020_1e2,
        3.209_377_589_138_469_4e3,
        1.857_777_061_846_031_5e-1,
    ];
    const B: [f64; 4] = [
        2.360_129_095_234_412_1e1,
        2.440_246_379_344_441_7e2,
        1.282_616_526_077_372_3e3,
        2.844_236_833_439_170_6e3,
    ];
    let z = x * x;
    let mut num = A[4] * z;
    let mut den = z;
    for i in 0..3 {
        num = (num + A[i]) * z;
        den = (den + B[i]) * z;
    }
    x * (num + A[3]) / (den + B[3])
}

// 0.46875 < x <= 4
fn erfc_mid(x: f64) -> f64 {
    const C: [f64; 9] = [
        5.641_884_969_886_700_9e-1,
        8.883_149_794_388_375_9e0,
        6.611_919_063_714_163_0e1,
        2.986_351_381_974_001_3e2,
        8.819_522_212_417_690_9e2,
        1.712_047_612_634_070_6e3,
        2.051_078_377_826_071_5e3,
        1.230_339_354_797_997_2e3,
        2.153_115_354_744_038_5e-8,
    ];
    const D: [f64; 8] = [
        1.574_492_611_070_983_5e1,
        1.176_939_508_913_125_0e2,
        5.371_811_018_620_098_6e2,
        1.621_389_574_566_690_2e3,
        3.290_799_235_733_459_6e3,
        4.362_619_090_143_247_2e3,
        3.439_367_674_143_721_6e3,
        1.230_339_354_803_749_4e3,
    ];
    let mut num = C[8] * x;
    let mut den = x;
    for i in 0..7 {
        num = (num + C[i]) * x;
        den = (den + D[i]) * x;
    }
    let r = (num + C[7]) / (den + D[7]);
    scaled_exp(x) * r
}

// x > 4
fn erfc_large(x: f64) -> f64 {
    const P: [f64; 6] = [
        3.053_266_349_612_323_4e-1,
        3.603_448_999_498_044_4e-1,
        1.257_817_261_112_292_5e-1,
        1.608_378_514_874_227_7e-2,
        6.587_491_615_298_378_0e-4,
        1.631_538_713_730_209_8e-2,
    ];
    const Q: [f64; 5] = [
        2.568_520_192_289_822_4e0,
        1.872_952_849_923_460_4e0,
        5.279_051_029_514_284_1e-1,
        6.051_834_131_244_131_9e-2,
        2.335_204_976_268_691_8e-3,
    ];
    if x > 26.6 {
        return 0.0; // below the smallest positive normal
    }
    let z = 1.0 / (x * x);
    let mut num = P[5] * z;
    let mut den = z;
    for i in 0..4 {
        num = (num + P[i]) * z;
        den = (den + Q[i]) * z;
    }
    let r = z * (num + P[4]) / (den + Q[4]);
    scaled_exp(x) * (std::f64::consts::FRAC_1_SQRT_PI_APPROX() - r) / x
}

// exp(-x^2) split to limit rounding in the argument, as in SPECFUN
fn scaled_exp(x: f64) -> f64 {
    let y = (x * 16.0).trunc() / 16.0;
    let del = (x - y) * (x + y);
    (-y * y).exp() * (-del).exp()
}

#[allow(non_snake_case)]
trait FracSqrtPi {
    fn FRAC_1_SQRT_PI_APPROX() -> f64;
}
impl FracSqrtPi for f64 {
    #[inline]
    fn FRAC_1_SQRT_PI_APPROX() -> f64 {
        5.641_895_835_477_562_9e-1
    }
}

// Wichura's PPND16 (AS 241)
fn ppnd16(p: f64) -> f64 {
    let q = p - 0.5;
    if q.abs() <= 0.425 {
        let r = 0.180625 - q * q;
        return q * poly_a(r) / poly_b(r);
    }
    let r = if q < 0.0 { p } else { 1.0 - p };
    let mut r = (-r.ln()).sqrt();
    let x = if r <= 5.0 {
        r -= 1.6;
        poly_c(r) / poly_d(r)
    } else {
        r -= 5.0;
        poly_e(r) / poly_f(r)
    };
    if q < 0.0 {
        -x
    } else {
        x
    }
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

fn poly_a(r: f64) -> f64 {
    horner(
        &[
            3.387_132_872_796_366_608e0,
            1.331_416_678_917_843_774_5e2,
            1.971_590_950_306_551_442_7e3,
            1.373_169_376_550_946_112_5e4,
            4.592_195_393_154_987_145_7e4,
            6.726_577_092_700_870_085_3e4,
            3.343_057_558_358_812_810_5e4,
            2.509_080_928_730_122_672_7e3,
        ],
        r,
    )
}

fn poly_b(r: f64) -> f64 {
    horner(
        &[
            1.0,
            4.231_333_070_160_091_125_2e1,
            6.871_870_074_920_579_083e2,
            5.394_196_021_424_751_107_7e3,
            2.121_379_430_158_659_586_7e4,
            3.930_789_580_009_271_061e4,
            2.872_908_573_572_194_267_4e4,
            5.226_495_278_852_854_561e3,
        ],
        r,
    )
}

fn poly_c(r: f64) -> f64 {
    horner(
        &[
            1.423_437_110_749_683_577_34e0,
            4.630_337_846_156_545_295_9e0,
            5.769_497_221_460_691_405_5e0,
            3.647_848_324_763_204_605_04e0,
            1.270_458_252_452_368_382_58e0,
            2.417_807_251_774_506_117_7e-1,
            2.272_384_498_926_918_458_33e-2,
            7.745_450_142_783_414_076_4e-4,
        ],
        r,
    )
}

fn poly_d(r: f64) -> f64 {
    horner(
        &[
            1.0,
            2.053_191_626_637_758_821_87e0,
            1.676_384_830_183_803_849_4e0,
            6.897_673_349_851_000_045_5e-1,
            1.481_039_764_274_800_745_9e-1,
            1.519_866_656_361_645_719_66e-2,
            5.475_938_084_995_344_946e-4,
            1.050_750_071_644_416_843_24e-9,
        ],
        r,
    )
}

fn poly_e(r: f64) -> f64 {
    horner(
        &[
            6.657_904_643_501_103_777_2e0,
            5.463_784_911_164_114_369_9e0,
            1.784_826_539_917_291_335_8e0,
            2.965_605_718_285_048_912_3e-1,
            2.653_218_952_657_612_309_3e-2,
            1.242_660_947_388_078_438_6e-3,
            2.711_555_568_743_487_578_15e-5,
            2.010_334_399_292_288_132_65e-7,
        ],
        r,
    )
}

fn poly_f(r: f64) -> f64 {
    horner(
        &[
            1.0,
            5.998_322_065_558_879_376_9e-1,
            1.369_298_809_227_358_053_1e-1,
            1.487_536_129_085_061_485_25e-2,
            7.868_691_311_456_132_591e-4,
            1.846_318_317_510_054_681_8e-5,
            1.421_511_758_316_445_888_7e-7,
            2.044_263_103_389_939_785_64e-15,
        ],
        r,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    // Maclaurin series for erf, used as an independent oracle for |z| <= 3.
    fn erf_series(z: f64) -> f64 {
        let mut term = z;
        let mut sum = z;
        for n in 1..200 {
            let nf = n as f64;
            term *= -z * z / nf;
            let add = term / (2.0 * nf + 1.0);
            sum += add;
            if add.abs() < 1e-18 * sum.abs() {
                break;
            }
        }
        sum * 2.0 / std::f64::consts::PI.sqrt()
    }

    fn cdf_oracle(x: f64) -> f64 {
        0.5 + 0.5 * erf_series(x * FRAC_1_SQRT_2)
    }

    #[test]
    fn cdf_at_zero_is_half() {
        assert_eq!(std_normal_cdf(0.0), 0.5);
    }

    #[test]
    fn cdf_matches_series_oracle() {
        // covers all three erfc regimes reachable by the series oracle
        for i in 0..=80 {
            let x = -4.0 + 0.1 * i as f64;
            assert_abs_diff_eq!(std_normal_cdf(x), cdf_oracle(x), epsilon = 1e-14);
        }
        assert_abs_diff_eq!(std_normal_cdf(1.959963985), 0.975, epsilon = 1e-9);
    }

    #[test]
    fn cdf_reflection() {
        for &x in &[0.3, 1.2, 2.7, 3.9, 5.5] {
            assert_abs_diff_eq!(
                std_normal_cdf(-x),
                1.0 - std_normal_cdf(x),
                epsilon = 1e-15
            );
        }
    }

    #[test]
    fn cdf_saturates_in_tails() {
        assert_eq!(std_normal_cdf(-40.0), 0.0);
        assert_eq!(std_normal_cdf(40.0), 1.0);
    }

    #[test]
    fn quantile_at_half_is_zero() {
        assert_eq!(std_normal_quantile(0.5).unwrap(), 0.0);
    }

    #[test]
    fn quantile_bisection_oracle() {
        // bisect our cdf to 1e-12 and compare
        let bisect = |p: f64| {
            let (mut lo, mut hi) = (-10.0f64, 10.0f64);
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                if std_normal_cdf(mid) < p {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            0.5 * (lo + hi)
        };
        for &p in &[0.001, 0.025, 0.2, 0.5, 0.7, 0.975, 0.999] {
            assert_abs_diff_eq!(std_normal_quantile(p).unwrap(), bisect(p), epsilon = 1e-9);
        }
        assert_abs_diff_eq!(
            std_normal_quantile(0.975).unwrap(),
            1.959964,
            epsilon = 1e-6
        );
    }

    #[test]
    fn quantile_cdf_roundtrip() {
        for i in 1..200 {
            let p = i as f64 / 200.0;
            let x = std_normal_quantile(p).unwrap();
            assert_abs_diff_eq!(std_normal_cdf(x), p, epsilon = 1e-10);
        }
        // x-space roundtrip on [-6, 6]
        for i in 0..=120 {
            let x = -6.0 + 0.1 * i as f64;
            let back = std_normal_quantile(std_normal_cdf(x)).unwrap();
            assert_abs_diff_eq!(back, x, epsilon = 1e-8);
        }
    }

    #[test]
    fn quantile_rejects_boundary() {
        assert!(std_normal_quantile(0.0).is_err());
        assert!(std_normal_quantile(1.0).is_err());
        assert!(std_normal_quantile(-0.1).is_err());
        assert!(std_normal_quantile(f64::NAN).is_err());
    }
}
