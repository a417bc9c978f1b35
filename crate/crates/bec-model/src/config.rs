//! Plain key-value config loader for trap/species presets.
//!
//! Format: one `key = value` pair per line, `#` starts a comment. Keys:
//! `d`, `q`, `R0_m`, `s_m`, `a11_m`, `a22_m`, `a12_m`, `mass_kg`, and the
//! optional `loss_ratio` (Γ/2γ₁, default 0).

use std::collections::HashMap;
use std::path::Path;

use crate::{couplings, BecError, Result, Species, TrapGeometry};

pub fn load_config(path: &Path) -> Result<(TrapGeometry, Species)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| BecError::Config(format!("{}: {e}", path.display())))?;
    parse_config(&text)
}

fn parse_config(text: &str) -> Result<(TrapGeometry, Species)> {
    let mut kv = HashMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| BecError::Config(format!("line {}: expected key = value", lineno + 1)))?;
        kv.insert(key.trim().to_string(), value.trim().to_string());
    }
    let get = |key: &str| -> Result<f64> {
        kv.get(key)
            .ok_or_else(|| BecError::Config(format!("missing key {key}")))?
            .parse::<f64>()
            .map_err(|e| BecError::Config(format!("key {key}: {e}")))
    };
    let d = get("d")?;
    if d.fract() != 0.0 || !(1.0..=3.0).contains(&d) {
        return Err(BecError::Config(format!("d must be 1, 2 or 3, got {d}")));
    }
    let q = match kv.get("q").map(String::as_str) {
        Some("inf") | Some("infinity") => f64::INFINITY,
        _ => get("q")?,
    };
    let tg = TrapGeometry::new(d as u8, q, get("R0_m")?, get("s_m")?)?;
    let mut sp = Species::new(get("a11_m")?, get("a22_m")?, get("a12_m")?, get("mass_kg")?, 0.0)?;
    if kv.contains_key("loss_ratio") {
        let ratio = get("loss_ratio")?;
        if ratio < 0.0 {
            return Err(BecError::Config("loss_ratio must be nonnegative".into()));
        }
        sp.gamma_loss = 2.0 * couplings(&sp).gamma1.abs() * ratio;
    }
    for key in kv.keys() {
        if ![
            "d", "q", "R0_m", "s_m", "a11_m", "a22_m", "a12_m", "mass_kg", "loss_ratio",
        ]
        .contains(&key.as_str())
        {
            return Err(BecError::Config(format!("unknown key {key}")));
        }
    }
    Ok((tg, sp))
}
