//! Number formatting shared by the command-line output.

/// `x` with 12 significant digits; plain notation for moderate magnitudes.
pub fn sig12(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let exponent = x.abs().log10().floor() as i32;
    if (-5..12).contains(&exponent) {
        let decimals = (11 - exponent).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.11e}")
    }
}

#[cfg(test)]
mod tests {
    use super::sig12;

    #[test]
    fn twelve_digits() {
        assert_eq!(sig12(1.6543961542965), "1.65439615430");
        assert_eq!(sig12(0.355806432481), "0.355806432481");
        assert_eq!(sig12(0.0), "0");
        assert_eq!(sig12(-2.5), "-2.50000000000");
        assert_eq!(sig12(1234.5), "1234.50000000");
        assert_eq!(sig12(1e-9), "1.00000000000e-9");
        assert_eq!(sig12(f64::NAN), "NaN");
    }
}
