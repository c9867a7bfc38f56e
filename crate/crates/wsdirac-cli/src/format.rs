//! Deterministic number and CSV formatting.
//!
//! Every renderer here is a pure function of its inputs, so identical
//! configurations produce byte-identical artifacts.

/// 9-significant-digit rendering: fixed point for magnitudes in
/// [1e-4, 1e9), scientific otherwise.
pub fn sig9(x: f64) -> String {
    if x == 0.0 {
        // Covers -0.0 as well; the sign bit is not physical here.
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if (-4..9).contains(&exp) {
        let decimals = (8 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.8e}")
    }
}

/// Fixed 6-decimal rendering, matching the historical table presentation.
pub fn fixed6(x: f64) -> String {
    format!("{x:.6}")
}

/// `sig9` for optional values; absent values render as the empty cell.
pub fn opt_sig9(x: Option<f64>) -> String {
    x.map(sig9).unwrap_or_default()
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Joins fields into one CSV record (no trailing newline), quoting any
/// field that contains a separator, quote, or newline.
pub fn csv_line(fields: &[String]) -> String {
    fields.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig9_fixed_point_window() {
        assert_eq!(sig9(-10.19760222), "-10.1976022");
        assert_eq!(sig9(0.985744951), "0.985744951");
        assert_eq!(sig9(14.25), "14.2500000");
        assert_eq!(sig9(1e-4), "0.000100000000");
        assert_eq!(sig9(123456789.0), "123456789");
    }

    #[test]
    fn sig9_scientific_window() {
        assert_eq!(sig9(1234567890.0), "1.23456789e9");
        assert_eq!(sig9(1.23456789012e-7), "1.23456789e-7");
        assert_eq!(sig9(-3.5e-120), "-3.50000000e-120");
    }

    #[test]
    fn sig9_specials() {
        assert_eq!(sig9(0.0), "0");
        assert_eq!(sig9(-0.0), "0");
        assert_eq!(sig9(f64::NAN), "NaN");
    }

    #[test]
    fn fixed6_rounds_to_table_presentation() {
        assert_eq!(fixed6(-10.197602224), "-10.197602");
        assert_eq!(fixed6(14.82846953), "14.828470");
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(
            csv_line(&["a".to_string(), "b,c".to_string(), "d\"e".to_string()]),
            "a,\"b,c\",\"d\"\"e\""
        );
    }
}
