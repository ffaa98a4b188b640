//! 7-point Gauss / 15-point Kronrod rule pair with QUADPACK error scaling.

use super::Scalar;

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Gauss weights for the odd-indexed Kronrod nodes and the centre.
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Result of one rule application on [a, b].
#[derive(Clone, Copy, Debug)]
pub(crate) struct Panel<T> {
    pub a: f64,
    pub b: f64,
    pub value: T,
    pub error: f64,
}

pub(crate) fn qk15<T: Scalar, F: Fn(f64) -> T>(f: &F, a: f64, b: f64) -> Panel<T> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let f_center = f(center);
    let mut kronrod = f_center * WGK[7];
    let mut gauss = f_center * WG[3];
    let mut res_abs = f_center.modulus() * WGK[7];

    let mut f1 = [T::zero(); 7];
    let mut f2 = [T::zero(); 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let lo = f(center - dx);
        let hi = f(center + dx);
        f1[j] = lo;
        f2[j] = hi;
        kronrod += (lo + hi) * WGK[j];
        res_abs += (lo.modulus() + hi.modulus()) * WGK[j];
        if j % 2 == 1 {
            gauss += (lo + hi) * WG[j / 2];
        }
    }

    let mean = kronrod * 0.5;
    let mut res_asc = (f_center - mean).modulus() * WGK[7];
    for j in 0..7 {
        res_asc += ((f1[j] - mean).modulus() + (f2[j] - mean).modulus()) * WGK[j];
    }

    let width = half.abs();
    let raw = (kronrod - gauss).modulus() * width;
    let res_abs = res_abs * width;
    let res_asc = res_asc * width;

    Panel {
        a,
        b,
        value: kronrod * half,
        error: rescale_error(raw, res_abs, res_asc),
    }
}

fn rescale_error(raw: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut err = raw;
    if res_asc != 0.0 && err != 0.0 {
        let scale = (200.0 * err / res_asc).powf(1.5);
        err = if scale < 1.0 {
            res_asc * scale
        } else {
            res_asc
        };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    err
}
