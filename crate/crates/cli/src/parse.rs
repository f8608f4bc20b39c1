use std::str::FromStr;

use thetaxi_core::Complex64;

use crate::error::CliError;

/// Parses `a+bi`, `bi`, `a` and the same with `j`.
pub fn complex(text: &str) -> Result<Complex64, CliError> {
    let cleaned: String = text
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == 'j' { 'i' } else { c })
        .collect();
    Complex64::from_str(&cleaned)
        .map_err(|_| CliError::Usage(format!("cannot parse complex number '{text}'")))
}

pub fn float_list(text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Usage(format!("cannot parse number '{p}'")))
        })
        .collect()
}

/// A closed range `lo:hi:n` sampled at n equally spaced points.
pub fn range(text: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = text.split(':').collect();
    let bad = || CliError::Usage(format!("expected lo:hi:n, got '{text}'"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let lo: f64 = parts[0].trim().parse().map_err(|_| bad())?;
    let hi: f64 = parts[1].trim().parse().map_err(|_| bad())?;
    let n: usize = parts[2].trim().parse().map_err(|_| bad())?;
    if n == 0 || (n > 1 && !(hi > lo)) {
        return Err(bad());
    }
    if n == 1 {
        return Ok(vec![lo]);
    }
    Ok((0..n)
        .map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64)
        .collect())
}

/// `sigma_lo:sigma_hi:n,im_lo:im_hi:m` as a row-major list of s values.
pub fn grid(text: &str) -> Result<Vec<Complex64>, CliError> {
    let (re, im) = text.split_once(',').ok_or_else(|| {
        CliError::Usage(format!(
            "expected two ranges separated by ',', got '{text}'"
        ))
    })?;
    let re = range(re)?;
    let im = range(im)?;
    Ok(re
        .iter()
        .flat_map(|&a| im.iter().map(move |&b| Complex64::new(a, b)))
        .collect())
}
