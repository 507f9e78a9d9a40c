//! Grid and angle syntax: `a:b:step` ranges (inclusive of `b`) or a single
//! value. Each number may be written in radians or with a `pi` token:
//! `pi`, `pi/4`, `3pi/16`, `3*pi/16`, `0.5pi`, `-pi/8`.

use std::f64::consts::PI;

use crate::error::{CliError, CliResult};

fn bad(token: &str, why: &str) -> CliError {
    CliError::Usage(format!("cannot parse '{token}': {why}"))
}

pub fn parse_value(token: &str) -> CliResult<f64> {
    let t = token.trim().replace('π', "pi");
    if t.is_empty() {
        return Err(bad(token, "empty value"));
    }
    let Some(at) = t.find("pi") else {
        return t.parse::<f64>().map_err(|_| bad(token, "not a number"));
    };
    let head = t[..at].trim_end_matches('*').trim();
    let coef = match head {
        "" | "+" => 1.0,
        "-" => -1.0,
        h => h
            .parse::<f64>()
            .map_err(|_| bad(token, "bad coefficient before pi"))?,
    };
    let tail = t[at + 2..].trim();
    let den = match tail {
        "" => 1.0,
        _ => tail
            .strip_prefix('/')
            .ok_or_else(|| bad(token, "expected '/' after pi"))?
            .trim()
            .parse::<f64>()
            .map_err(|_| bad(token, "bad denominator"))?,
    };
    if den == 0.0 {
        return Err(bad(token, "zero denominator"));
    }
    Ok(coef * PI / den)
}

pub fn parse_grid(text: &str) -> CliResult<Vec<f64>> {
    let parts: Vec<&str> = text.split(':').collect();
    match parts.as_slice() {
        [single] => Ok(vec![parse_value(single)?]),
        [a, b, step] => {
            let (a, b, step) = (parse_value(a)?, parse_value(b)?, parse_value(step)?);
            if !(step > 0.0) || !step.is_finite() {
                return Err(bad(text, "step must be positive"));
            }
            if !(b >= a) {
                return Err(bad(text, "end lies before start"));
            }
            let n = ((b - a) / step + 1e-9).floor() as usize;
            let mut values: Vec<f64> = (0..=n).map(|k| a + k as f64 * step).collect();
            if let Some(last) = values.last_mut() {
                if (*last - b).abs() <= 1e-9 * step {
                    *last = b;
                }
            }
            Ok(values)
        }
        _ => Err(bad(text, "expected 'value' or 'start:end:step'")),
    }
}
