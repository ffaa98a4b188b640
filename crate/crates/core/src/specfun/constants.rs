//! Embedded high-precision constants.
//!
//! Values were generated with mpmath at 40 significant digits and rounded
//! to the digits shown; every literal carries at least 20 correct digits.

/// Euler's constant γ.
#[allow(clippy::excessive_precision)]
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082_402_431;

/// e^{-γ}, the value of the `h` density at the origin.
#[allow(clippy::excessive_precision)]
pub const EXP_NEG_EULER_GAMMA: f64 = 0.561_459_483_566_885_169_824_143_214_790_880_787;

/// ln(2π) / 2.
#[allow(clippy::excessive_precision)]
pub const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_741_780_329_736_405_617_640;

/// ln π.
#[allow(clippy::excessive_precision)]
pub const LN_PI: f64 = 1.144_729_885_849_400_174_143_427_351_353_058_712;

/// ζ(3), Apéry's constant.
#[allow(clippy::excessive_precision)]
pub const ZETA_3: f64 = 1.202_056_903_159_594_285_399_738_161_511_449_991;

/// ζ(k) − 1 for k = 2, 3, …, 40 (index 0 holds k = 2).
///
/// Used by the Taylor series of ln Γ(2 + δ); the terms decay like
/// (δ/2)^k so forty entries cover |δ| ≤ 1/2 far below f64 resolution.
#[allow(clippy::excessive_precision)]
pub(crate) const ZETA_MINUS_ONE: [f64; 39] = [
    0.644_934_066_848_226_436_472_415_2,
    0.202_056_903_159_594_285_399_738_2,
    0.082_323_233_711_138_191_516_003_7,
    0.036_927_755_143_369_926_331_365_49,
    0.017_343_061_984_449_139_714_517_93,
    0.008_349_277_381_922_826_839_797_55,
    0.004_077_356_197_944_339_378_685_239,
    0.002_008_392_826_082_214_417_852_769,
    0.000_994_575_127_818_085_337_145_958_9,
    0.000_494_188_604_119_464_558_702_282_5,
    0.000_246_086_553_308_048_298_637_998,
    0.000_122_713_347_578_489_146_751_836_5,
    6.124_813_505_870_482_925_854_511e-5,
    3.058_823_630_702_049_355_172_851e-5,
    1.528_225_940_865_187_173_257_149e-5,
    7.637_197_637_899_762_273_600_294e-6,
    3.817_293_264_999_839_856_461_645e-6,
    1.908_212_716_553_938_925_656_958e-6,
    9.539_620_338_727_961_131_520_387e-7,
    4.769_329_867_878_064_631_167_196e-7,
    2.384_505_027_277_329_900_036_482e-7,
    1.192_199_259_653_110_730_677_887e-7,
    5.960_818_905_125_947_961_244_021e-8,
    2.980_350_351_465_228_018_606_371e-8,
    1.490_155_482_836_504_123_465_851e-8,
    7.450_711_789_835_429_491_981_004e-9,
    3.725_334_024_788_457_054_819_204e-9,
    1.862_659_723_513_049_006_403_91e-9,
    9.313_274_324_196_681_828_717_647e-10,
    4.656_629_065_033_784_072_989_233e-10,
    2.328_311_833_676_505_492_001_456e-10,
    1.164_155_017_270_051_977_592_974e-10,
    5.820_772_087_902_700_889_243_686e-11,
    2.910_385_044_497_099_686_929_425e-11,
    1.455_192_189_104_198_423_592_963e-11,
    7.275_959_835_057_481_014_520_869e-12,
    3.637_979_547_378_651_190_237_236e-12,
    1.818_989_650_307_065_947_584_832e-12,
    9.094_947_840_263_889_282_533_118e-13,
];

/// B_{2j} / (2j (2j − 1)) for j = 1..=10: coefficients of the Stirling
/// series ln Γ(w) ≈ (w − ½) ln w − w + ½ ln 2π + Σ c_j / w^{2j−1}.
pub(crate) const STIRLING_COEFFS: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
    43867.0 / 244_188.0,
    -174_611.0 / 125_400.0,
];
