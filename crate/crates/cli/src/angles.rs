//! Angle expressions such as `0.25`, `pi/100`, `-3pi/4` or `2*pi`.

use std::f64::consts::PI;

fn parse_number(s: &str) -> Result<f64, String> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n = parse_number(num)?;
        let d = parse_number(den)?;
        if d == 0.0 {
            return Err(format!("division by zero in `{s}`"));
        }
        return Ok(n / d);
    }
    s.parse::<f64>().map_err(|_| format!("`{s}` is not a number"))
}

/// Parse an angle expression in radians before any unit conversion.
pub fn parse_angle(raw: &str) -> Result<f64, String> {
    let s = raw.trim().to_ascii_lowercase().replace('π', "pi").replace(' ', "");
    if s.is_empty() {
        return Err("empty angle".into());
    }
    let value = match s.find("pi") {
        None => parse_number(&s)?,
        Some(at) => {
            let coef = s[..at].trim_end_matches('*');
            let coef = match coef {
                "" | "+" => 1.0,
                "-" => -1.0,
                c => parse_number(c)?,
            };
            let rest = &s[at + 2..];
            let den = match rest.strip_prefix('/') {
                Some(d) => parse_number(d)?,
                None if rest.is_empty() => 1.0,
                None => return Err(format!("cannot parse angle `{raw}`")),
            };
            if den == 0.0 {
                return Err(format!("division by zero in `{raw}`"));
            }
            coef * PI / den
        }
    };
    if !value.is_finite() {
        return Err(format!("angle `{raw}` is not finite"));
    }
    Ok(value)
}

/// Comma-separated list of angle expressions.
pub fn parse_angle_list(raw: &str) -> Result<Vec<f64>, String> {
    raw.split(',').map(parse_angle).collect()
}

pub fn to_radians(value: f64, degrees: bool) -> f64 {
    if degrees {
        value.to_radians()
    } else {
        value
    }
}
