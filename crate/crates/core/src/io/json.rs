//! JSON polyarc documents.
//!
//! A document is either a bare array of `{x, y, theta}` points (open curve,
//! radian angles) or an object:
//!
//! ```json
//! {"closed": true, "angle_unit": "degrees", "units": "mm",
//!  "points": [{"x": 0, "y": 0, "theta": 90}, {"x": 10, "y": 0, "theta": 90}]}
//! ```
//!
//! `theta` belongs to the segment leaving its point and defaults to zero.
//! On an open curve the last point has no outgoing segment, so its `theta`
//! is ignored.

use std::f64::consts::TAU;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::polycurve::Polyarc;
use crate::vec2::Vec2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AngleUnit {
    #[default]
    Radians,
    Degrees,
}

impl AngleUnit {
    pub fn as_str(self) -> &'static str {
        match self {
            AngleUnit::Radians => "radians",
            AngleUnit::Degrees => "degrees",
        }
    }

    pub fn to_radians(self, a: f64) -> f64 {
        match self {
            AngleUnit::Radians => a,
            AngleUnit::Degrees => a.to_radians(),
        }
    }

    pub fn from_radians(self, a: f64) -> f64 {
        match self {
            AngleUnit::Radians => a,
            AngleUnit::Degrees => a.to_degrees(),
        }
    }
}

impl fmt::Display for AngleUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AngleUnit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "radians" | "rad" => Ok(AngleUnit::Radians),
            "degrees" | "deg" => Ok(AngleUnit::Degrees),
            other => Err(Error::Schema(format!(
                "angle_unit must be \"radians\" or \"degrees\", got \"{other}\""
            ))),
        }
    }
}

/// Overrides applied on top of what a document declares.
#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    pub angle_unit: Option<AngleUnit>,
    pub closed: Option<bool>,
}

/// A parsed and validated document.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyarcDocument {
    pub polyarc: Polyarc,
    pub angle_unit: AngleUnit,
    pub units: Option<String>,
    pub warnings: Vec<String>,
}

pub fn parse_polyarc(text: &str) -> Result<Polyarc> {
    parse_document(text, &ParseOptions::default()).map(|d| d.polyarc)
}

pub fn parse_document(text: &str, opts: &ParseOptions) -> Result<PolyarcDocument> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;

    let (points, mut closed, mut angle_unit, units) = match &value {
        Value::Array(points) => (points.as_slice(), false, AngleUnit::Radians, None),
        Value::Object(obj) => {
            let points = match obj.get("points") {
                Some(Value::Array(p)) => p.as_slice(),
                Some(_) => return Err(Error::Schema("\"points\" must be an array".into())),
                None => return Err(Error::Schema("missing \"points\" array".into())),
            };
            let closed = match obj.get("closed") {
                None | Some(Value::Null) => false,
                Some(Value::Bool(b)) => *b,
                Some(_) => return Err(Error::Schema("\"closed\" must be a boolean".into())),
            };
            let unit = match obj.get("angle_unit") {
                None | Some(Value::Null) => AngleUnit::Radians,
                Some(Value::String(s)) => s.parse()?,
                Some(_) => return Err(Error::Schema("\"angle_unit\" must be a string".into())),
            };
            let units = match obj.get("units") {
                None | Some(Value::Null) => None,
                Some(Value::String(s)) => Some(s.clone()),
                Some(_) => return Err(Error::Schema("\"units\" must be a string".into())),
            };
            (points, closed, unit, units)
        }
        _ => {
            return Err(Error::Schema(
                "top level must be an array of points or an object with \"points\"".into(),
            ))
        }
    };
    if let Some(c) = opts.closed {
        closed = c;
    }
    if let Some(u) = opts.angle_unit {
        angle_unit = u;
    }
    if points.is_empty() {
        return Err(Error::Schema("no points".into()));
    }

    let mut vertices = Vec::with_capacity(points.len());
    let mut thetas = Vec::with_capacity(points.len());
    for (index, p) in points.iter().enumerate() {
        let Value::Object(obj) = p else {
            return Err(invalid(index, "point must be an object with x, y and optional theta"));
        };
        let x = number(obj, "x", index)?.ok_or_else(|| invalid(index, "missing x"))?;
        let y = number(obj, "y", index)?.ok_or_else(|| invalid(index, "missing y"))?;
        let theta = angle_unit.to_radians(number(obj, "theta", index)?.unwrap_or(0.0));
        vertices.push(Vec2::new(x, y));
        thetas.push(theta);
    }

    let mut warnings = Vec::new();
    if !closed {
        let last = thetas.pop().unwrap_or(0.0);
        if last != 0.0 {
            warnings.push(format!(
                "point {}: theta = {} on the last point of an open curve is ignored",
                vertices.len() - 1,
                angle_unit.from_radians(last)
            ));
        }
    }

    let n = vertices.len();
    for (index, &theta) in thetas.iter().enumerate() {
        if !(theta.abs() < TAU) {
            let bound = angle_unit.from_radians(TAU);
            return Err(invalid(
                index,
                &format!(
                    "theta = {} is outside the open interval (-{bound}, {bound}) {angle_unit}",
                    angle_unit.from_radians(theta)
                ),
            ));
        }
        if theta != 0.0 && vertices[index] == vertices[(index + 1) % n] {
            return Err(invalid(index, "coincides with the next point, so its theta must be 0"));
        }
    }

    let polyarc = Polyarc::new(vertices, thetas, closed)?;
    Ok(PolyarcDocument {
        polyarc,
        angle_unit,
        units,
        warnings,
    })
}

fn invalid(index: usize, rule: &str) -> Error {
    Error::Validation {
        index,
        rule: rule.to_string(),
    }
}

fn number(obj: &Map<String, Value>, key: &str, index: usize) -> Result<Option<f64>> {
    match obj.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(Value::Number(n)) => match n.as_f64() {
            Some(v) if v.is_finite() => Ok(Some(v)),
            _ => Err(invalid(index, &format!("{key} is not a finite number"))),
        },
        Some(_) => Err(invalid(index, &format!("{key} must be a number"))),
    }
}

/// Writes `pa` as a document with angles in `unit`.
pub fn emit_polyarc(pa: &Polyarc, unit: AngleUnit) -> String {
    emit_document(pa, unit, None)
}

pub fn emit_document(pa: &Polyarc, unit: AngleUnit, units: Option<&str>) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"closed\": {},", pa.is_closed());
    let _ = writeln!(out, "  \"angle_unit\": \"{}\",", unit.as_str());
    if let Some(u) = units {
        let _ = writeln!(out, "  \"units\": {},", Value::String(u.to_string()));
    }
    out.push_str("  \"points\": [");
    let thetas = pa.thetas();
    for (i, v) in pa.vertices().iter().enumerate() {
        let theta = thetas.get(i).copied().unwrap_or(0.0);
        out.push_str(if i == 0 { "\n" } else { ",\n" });
        let _ = write!(
            out,
            "    {{\"x\": {}, \"y\": {}, \"theta\": {}}}",
            format_number(v.x),
            format_number(v.y),
            format_number(unit.from_radians(theta))
        );
    }
    out.push_str("\n  ]\n}\n");
    out
}

/// Decimal rendering with 17 significant digits, trailing zeros removed.
pub fn format_number(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let sci = format!("{v:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..17).contains(&exp) {
        let decimals = (16 - exp).max(0) as usize;
        trim_zeros(format!("{v:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    let t = s.trim_end_matches('0');
    t.strip_suffix('.').unwrap_or(t).to_string()
}
