//! Locale-independent number formatting for CSV and JSON output.

/// Shortest round-trip representation of `x` after rounding to 12 significant digits.
pub fn fmt12(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let v = round12(x);
    if v == 0.0 {
        return "0".to_string();
    }
    let mag = v.abs();
    if (1e-5..1e15).contains(&mag) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

/// `x` rounded to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}
