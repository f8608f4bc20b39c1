//! Bernoulli numbers as compile-time tables.

/// B_2, B_4, ..., B_64.
pub(crate) const BERNOULLI_EVEN: [f64; 32] = [
    1.6666666666666667e-1,
    -3.3333333333333333e-2,
    2.380952380952381e-2,
    -3.3333333333333333e-2,
    7.5757575757575758e-2,
    -2.5311355311355311e-1,
    1.1666666666666667,
    -7.092156862745098,
    5.4971177944862155e+1,
    -5.2912424242424242e+2,
    6.1921231884057971e+3,
    -8.6580253113553114e+4,
    1.4255171666666667e+6,
    -2.7298231067816092e+7,
    6.0158087390064237e+8,
    -1.5116315767092157e+10,
    4.2961464306116667e+11,
    -1.3711655205088333e+13,
    4.8833231897359317e+14,
    -1.9296579341940068e+16,
    8.4169304757368262e+17,
    -4.0338071854059455e+19,
    2.1150748638081992e+21,
    -1.2086626522296526e+23,
    7.5008667460769644e+24,
    -5.0387781014810689e+26,
    3.6528776484818123e+28,
    -2.8498769302450882e+30,
    2.3865427499683628e+32,
    -2.1399949257225334e+34,
    2.0500975723478098e+36,
    -2.0938005911346378e+38,
];

/// B_{2k} / (2k)! for k = 1..=15, the Euler–Maclaurin corrections used by ζ.
pub(crate) const BERNOULLI_OVER_FACTORIAL: [f64; 15] = [
    8.3333333333333333e-2,
    -1.3888888888888889e-3,
    3.3068783068783069e-5,
    -8.2671957671957672e-7,
    2.0876756987868099e-8,
    -5.2841901386874932e-10,
    1.3382536530684679e-11,
    -3.3896802963225829e-13,
    8.5860620562778446e-15,
    -2.1748686985580619e-16,
    5.5090028283602295e-18,
    -1.3954464685812523e-19,
    3.5347070396294675e-21,
    -8.9535174270375469e-23,
    2.2679524523376831e-24,
];

/// B_n for even n in 2..=64; zero for odd n ≥ 3.
pub(crate) fn bernoulli(n: usize) -> Option<f64> {
    match n {
        0 => Some(1.0),
        1 => Some(-0.5),
        n if n % 2 == 1 => Some(0.0),
        n => BERNOULLI_EVEN.get(n / 2 - 1).copied(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_agree() {
        let mut factorial = 1.0_f64;
        for k in 1..=15 {
            factorial *= ((2 * k - 1) * (2 * k)) as f64;
            let ratio = BERNOULLI_EVEN[k - 1] / factorial;
            let rel = (ratio - BERNOULLI_OVER_FACTORIAL[k - 1]).abs() / ratio.abs();
            assert!(rel < 1e-14, "k = {k}: {rel}");
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(bernoulli(1), Some(-0.5));
        assert_eq!(bernoulli(7), Some(0.0));
        assert!((bernoulli(12).unwrap() + 691.0 / 2730.0).abs() < 1e-16);
        assert_eq!(bernoulli(66), None);
    }
}
