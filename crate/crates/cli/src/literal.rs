//! Flag-value grammar: complex literals (`1+2i`, `-i`, `2.5`), inclusive
//! ranges (`lo..hi`) and comma lists.

use antitrid_core::ComplexScalar;

fn parse_real(text: &str, whole: &str) -> Result<f64, String> {
    let lowered = text.to_ascii_lowercase();
    // f64::from_str accepts "inf"/"nan"; the literal grammar does not.
    if lowered.contains("inf") || lowered.contains("nan") {
        return Err(format!("non-finite component in complex literal {whole:?}"));
    }
    text.parse::<f64>()
        .map_err(|_| format!("invalid complex literal {whole:?}"))
}

/// Parses `[±DEC][±DEC i]`: a real part, an imaginary part with `i` suffix, or both.
/// A bare `i` coefficient means 1. No whitespace is allowed.
pub fn parse_complex(text: &str) -> Result<ComplexScalar, String> {
    if text.is_empty() || text.chars().any(char::is_whitespace) {
        return Err(format!("invalid complex literal {text:?}"));
    }
    let Some(body) = text.strip_suffix('i') else {
        return Ok(ComplexScalar::new(parse_real(text, text)?, 0.0));
    };

    // The imaginary part starts at the last sign that is not the leading
    // character and not an exponent sign.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (real_text, imag_text) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("", body),
    };

    let re = if real_text.is_empty() {
        0.0
    } else {
        parse_real(real_text, text)?
    };
    let im = match imag_text {
        "" | "+" => 1.0,
        "-" => -1.0,
        t => parse_real(t, text)?,
    };
    Ok(ComplexScalar::new(re, im))
}

/// `lo..hi` inclusive, or a single value.
pub fn parse_range(text: &str) -> Result<(usize, usize), String> {
    let parse = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| format!("invalid range bound {s:?} in {text:?}"))
    };
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (parse(lo)?, parse(hi.strip_prefix('=').unwrap_or(hi))?),
        None => {
            let v = parse(text)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {text:?}"));
    }
    Ok((lo, hi))
}

pub fn parse_list<T>(text: &str, item: impl Fn(&str) -> Result<T, String>) -> Result<Vec<T>, String> {
    let items: Vec<T> = text
        .split(',')
        .filter(|s| !s.is_empty())
        .map(item)
        .collect::<Result<_, _>>()?;
    if items.is_empty() {
        return Err(format!("empty list {text:?}"));
    }
    Ok(items)
}

pub fn parse_complex_list(text: &str) -> Result<Vec<ComplexScalar>, String> {
    parse_list(text, parse_complex)
}

pub fn parse_usize_list(text: &str) -> Result<Vec<usize>, String> {
    parse_list(text, |s| s.parse::<usize>().map_err(|_| format!("invalid integer {s:?}")))
}

pub fn parse_u64_list(text: &str) -> Result<Vec<u64>, String> {
    parse_list(text, |s| s.parse::<u64>().map_err(|_| format!("invalid integer {s:?}")))
}

/// Shortest round-trip text for `x`, switching to exponent form outside
/// `1e-5 <= |x| < 1e16`. A leading `+` is added when `signed` is set.
fn format_real(x: f64, signed: bool) -> String {
    let magnitude = x.abs();
    let exponent = magnitude != 0.0 && !(1e-5..1e16).contains(&magnitude);
    match (exponent, signed) {
        (true, true) => format!("{x:+e}"),
        (true, false) => format!("{x:e}"),
        (false, true) => format!("{x:+}"),
        (false, false) => format!("{x}"),
    }
}

/// Canonical literal for a complex value, parseable by [`parse_complex`].
/// Uses shortest round-trip formatting for each component.
pub fn format_complex(z: ComplexScalar) -> String {
    format!("{}{}i", format_real(z.re, false), format_real(z.im, true))
}
