use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::boundary::BoundaryFunction;
use crate::disk::DiskFunction;
use crate::error::{Error, Result};

/// Formats a float with 17 significant digits, the form used in every
/// artifact; it round-trips exactly through parsing.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

fn depth(v: &Value) -> usize {
    match v {
        Value::Array(items) => 1 + items.iter().map(depth).max().unwrap_or(0),
        Value::Object(_) => usize::MAX / 2,
        _ => 0,
    }
}

fn write_scalar(out: &mut String, v: &Value) {
    match v {
        Value::Number(n) => match (n.as_i64(), n.as_u64(), n.as_f64()) {
            (Some(i), _, _) if !n.is_f64() => out.push_str(&i.to_string()),
            (_, Some(u), _) if !n.is_f64() => out.push_str(&u.to_string()),
            (_, _, Some(f)) => out.push_str(&fmt_f64(f)),
            _ => out.push_str(&n.to_string()),
        },
        other => out.push_str(&other.to_string()),
    }
}

fn write_inline(out: &mut String, v: &Value) {
    match v {
        Value::Array(items) => {
            out.push('[');
            for (k, item) in items.iter().enumerate() {
                if k > 0 {
                    out.push_str(", ");
                }
                write_inline(out, item);
            }
            out.push(']');
        }
        other => write_scalar(out, other),
    }
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = |out: &mut String, level: usize| out.push_str(&"  ".repeat(level));
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (k, (key, item)) in map.iter().enumerate() {
                pad(out, indent + 1);
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_value(out, item, indent + 1);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            pad(out, indent);
            out.push('}');
        }
        Value::Array(items) if depth(v) > 2 => {
            out.push_str("[\n");
            for (k, item) in items.iter().enumerate() {
                pad(out, indent + 1);
                write_value(out, item, indent + 1);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(out, indent);
            out.push(']');
        }
        Value::Object(_) => out.push_str("{}"),
        other => write_inline(out, other),
    }
}

/// Indented JSON with floats written by [`fmt_f64`]; arrays nested at most
/// two deep stay on one line.
pub fn to_json_string<T: Serialize + ?Sized>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("artifact types serialize to JSON");
    let mut out = String::new();
    write_value(&mut out, &v, 0);
    out.push('\n');
    out
}

pub fn complex_pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

/// Nonzero modes as `[n, re, im]`, ascending in `n`.
pub fn boundary_triples(f: &BoundaryFunction) -> Vec<(i64, f64, f64)> {
    f.modes()
        .filter(|(_, c)| c.re != 0.0 || c.im != 0.0)
        .map(|(n, c)| (n, c.re, c.im))
        .collect()
}

/// Inverse of [`boundary_triples`]; omitted modes are zero and repeated
/// modes are rejected.
pub fn boundary_from_triples(
    order: usize,
    triples: &[(i64, f64, f64)],
) -> Result<BoundaryFunction> {
    let mut f = BoundaryFunction::zeros(order);
    let mut seen = std::collections::BTreeSet::new();
    for &(n, re, im) in triples {
        if !seen.insert(n) {
            return Err(Error::InvalidArgument(format!("mode {n} listed twice")));
        }
        if !(re.is_finite() && im.is_finite()) {
            return Err(Error::InvalidArgument(format!("mode {n} is not finite")));
        }
        *f.coeff_mut(n)? = Complex64::new(re, im);
    }
    Ok(f)
}

/// Serialized disk function: Chebyshev coefficients per nonzero mode.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiskFunctionJson {
    #[serde(rename = "N")]
    pub order: usize,
    #[serde(rename = "M_r")]
    pub radial_degree: usize,
    pub modes: Vec<(i64, Vec<[f64; 2]>)>,
}

impl DiskFunctionJson {
    pub fn from_disk_function(u: &DiskFunction) -> Self {
        let order = u.order() as i64;
        let modes = (-order..=order)
            .filter(|&n| !u.mode_is_zero(n))
            .map(|n| {
                (
                    n,
                    u.mode_coeffs(n).iter().map(|&c| complex_pair(c)).collect(),
                )
            })
            .collect();
        Self {
            order: u.order(),
            radial_degree: u.radial_degree(),
            modes,
        }
    }

    pub fn to_disk_function(&self) -> Result<DiskFunction> {
        let order = self.order;
        let zero = Complex64::new(0.0, 0.0);
        let mut coeffs = vec![vec![zero; self.radial_degree + 1]; 2 * order + 1];
        let mut seen = std::collections::BTreeSet::new();
        for (n, cs) in &self.modes {
            if n.unsigned_abs() as usize > order {
                return Err(Error::ModeOutOfRange { mode: *n, order });
            }
            if !seen.insert(*n) {
                return Err(Error::InvalidArgument(format!("mode {n} listed twice")));
            }
            if cs.len() != self.radial_degree + 1 {
                return Err(Error::InvalidGrid {
                    expected: self.radial_degree + 1,
                    got: cs.len(),
                });
            }
            coeffs[(*n + order as i64) as usize] =
                cs.iter().map(|p| Complex64::new(p[0], p[1])).collect();
        }
        DiskFunction::from_coeffs(order, self.radial_degree, coeffs)
    }
}

/// CSV text with a header line; cells are written as given.
pub fn csv_rows(header: &str, rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = String::from(header);
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
