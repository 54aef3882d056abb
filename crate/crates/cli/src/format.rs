//! Locale-independent number formatting for tables and reports.

/// `x` with 15 significant digits in positional notation.
pub fn sig15(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return format!("{:.14}", 0.0);
    }
    // The exponent is taken after rounding to 15 digits, so 0.99999999999999999
    // becomes 1.00000000000000 rather than 1.000000000000000.
    let sci = format!("{:.14e}", x);
    let exp: i32 = sci.rsplit('e').next().and_then(|e| e.parse().ok()).unwrap_or(0);
    let decimals = (14 - exp).max(0) as usize;
    format!("{:.*}", decimals, x)
}
