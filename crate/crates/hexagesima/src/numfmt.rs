//! Numeric text formatting shared by reports and figures.
//!
//! Reports print nine significant digits; SVG coordinates use six fixed
//! decimals so identical inputs always serialize to identical bytes.

/// Rounds `x` to `sig` significant decimal digits.
pub fn round_sig(x: f64, sig: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    // Round through the decimal representation so the result reparses to
    // exactly the printed value.
    format!("{:.*e}", sig.saturating_sub(1), x)
        .parse()
        .expect("exponential form always reparses")
}

/// Formats `x` with up to `sig` significant digits, trailing zeros trimmed.
pub fn format_sig(x: f64, sig: usize) -> String {
    let r = round_sig(x, sig);
    if r == 0.0 {
        return "0".to_string();
    }
    let exponent = r.abs().log10().floor() as i32;
    let decimals = (sig as i32 - 1 - exponent).max(0) as usize;
    let mut s = format!("{:.*}", decimals, r);
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}
