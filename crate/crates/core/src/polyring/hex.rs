use super::gf2::Gf2Poly;
use crate::error::{invalid, Result};

/// Lowercase hex, lowest coefficients first: nibble `k` holds `t^(4k)..t^(4k+3)`
/// with `t^(4k)` as its least significant bit. Zero is `"0"`.
pub fn to_hex(p: &Gf2Poly) -> String {
    let Some(deg) = p.degree() else {
        return "0".to_string();
    };
    (0..=deg / 4)
        .map(|k| {
            let nibble = (0..4).filter(|&b| p.coeff(4 * k + b)).fold(0u32, |n, b| n | 1 << b);
            char::from_digit(nibble, 16).expect("nibble < 16")
        })
        .collect()
}

pub fn from_hex(s: &str) -> Result<Gf2Poly> {
    if s.is_empty() {
        return Err(invalid("empty polynomial string"));
    }
    let mut exps = Vec::new();
    for (k, ch) in s.chars().enumerate() {
        let nibble = ch.to_digit(16).ok_or_else(|| invalid(format!("`{ch}` is not a hex digit")))?;
        exps.extend((0..4).filter(|b| nibble >> b & 1 == 1).map(|b| 4 * k + b));
    }
    Ok(Gf2Poly::from_exponents(exps))
}

/// A modulus given as hex or as `t^q-1` (also `t-1`). Degree must be at least 1.
pub fn parse_modulus(s: &str) -> Result<Gf2Poly> {
    let s = s.trim();
    let g = if let Some(rest) = s.strip_prefix('t') {
        let q = match rest.strip_suffix("-1") {
            Some("") => 1,
            Some(exp) => exp
                .strip_prefix('^')
                .and_then(|e| e.parse::<u64>().ok())
                .ok_or_else(|| invalid(format!("malformed modulus `{s}`")))?,
            None => return Err(invalid(format!("malformed modulus `{s}`"))),
        };
        if q == 0 || q > 1 << 24 {
            return Err(invalid(format!("cyclic modulus degree {q} out of range")));
        }
        Gf2Poly::from_exponents([0, q as usize])
    } else {
        from_hex(s)?
    };
    if g.degree().unwrap_or(0) < 1 {
        return Err(invalid(format!("modulus `{s}` must have degree at least 1")));
    }
    Ok(g)
}
