//! Exact fractions used by every inequality check.

use num_rational::Ratio;

/// Exact rational with 128-bit parts. Values met in practice have
/// denominators dividing `12 · 2^n · m²` with `n, log2 m <= 24`.
pub type Frac = Ratio<i128>;

/// Reduced `"p/q"` rendering; integers render as `"p/1"`.
pub fn frac_string(x: &Frac) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn int(x: impl Into<i128>) -> Frac {
    Frac::from_integer(x.into())
}

pub fn frac(num: impl Into<i128>, den: impl Into<i128>) -> Frac {
    Frac::new(num.into(), den.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_reduced() {
        assert_eq!(frac_string(&frac(6, 4)), "3/2");
        assert_eq!(frac_string(&int(7)), "7/1");
        assert_eq!(frac_string(&frac(-2, 4)), "-1/2");
    }
}
