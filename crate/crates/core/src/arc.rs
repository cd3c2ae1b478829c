//! Single circular arcs in endpoint parameterization.
//!
//! An arc is described by its start point `A`, its end point `B` and the
//! signed angular range `θ ∈ (-2π, 2π)`. Positive angles run
//! counterclockwise. Radius and center are derived quantities: the signed
//! radius always carries the sign of `θ` and satisfies `R sin(θ/2) = c/2`
//! for the chord length `c = |B - A|`.
//!
//! Most formulas here only need the chord vector `c = B - A` and `θ`, so
//! they are provided as free functions; [`ArcSeg`] wraps them for arcs with
//! an absolute position.
//!
//! All formulas with a removable singularity at `θ = 0` switch to their
//! limit form below [`SMALL_ANGLE`].

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::vec2::Vec2;

/// Below this `|θ|` the line-limit forms are used.
pub const SMALL_ANGLE: f64 = 1e-7;

/// Bending rigidity `EI` used when none is given.
pub const DEFAULT_EI: f64 = 1.0;

pub(crate) fn check_theta(theta: f64) -> Result<()> {
    if theta.is_finite() && theta.abs() < TAU {
        Ok(())
    } else {
        Err(Error::AngleOutOfRange(theta))
    }
}

fn check_u(u: f64) -> Result<()> {
    if (0.0..=1.0).contains(&u) {
        Ok(())
    } else {
        Err(Error::ParameterOutOfRange(u))
    }
}

fn check_chord(c_len: f64) -> Result<()> {
    if c_len > 0.0 && c_len.is_finite() {
        Ok(())
    } else {
        Err(Error::DegenerateChord(c_len))
    }
}

/// Signed radius `R = c / (2 sin(θ/2))` of the arc spanning a chord of
/// length `c_len` with angular range `theta`.
pub fn radius(c_len: f64, theta: f64) -> Result<f64> {
    check_chord(c_len)?;
    check_theta(theta)?;
    if theta == 0.0 {
        return Err(Error::ZeroAngle);
    }
    Ok(c_len / (2.0 * (0.5 * theta).sin()))
}

/// Inverts [`radius`].
///
/// A chord and a radius admit two arcs on the same side of the center. The
/// minor one has `|θ| ≤ π`; `major` selects its complement
/// `sign(r) (2π - |θ_minor|)`. The sign of the result follows `r`.
pub fn theta_from_radius(c_len: f64, r: f64, major: bool) -> Result<f64> {
    check_chord(c_len)?;
    let ratio = c_len / (2.0 * r);
    if !r.is_finite() || r == 0.0 || ratio.abs() > 1.0 + 4.0 * f64::EPSILON {
        return Err(Error::NoCircle {
            chord: c_len,
            radius: r,
        });
    }
    let minor = 2.0 * ratio.clamp(-1.0, 1.0).asin();
    if major {
        Ok(r.signum() * (TAU - minor.abs()))
    } else {
        Ok(minor)
    }
}

/// Radius vector `r₀` from the arc's center to its start point:
///
/// `r₀ = -(sin(θ/2) c + cos(θ/2) c̃) / (2 sin(θ/2))`
///
/// The center itself is `A - r₀`.
pub fn center_offset(c: Vec2, theta: f64) -> Result<Vec2> {
    check_chord(c.norm())?;
    check_theta(theta)?;
    if theta == 0.0 {
        return Err(Error::ZeroAngle);
    }
    let (s, co) = (0.5 * theta).sin_cos();
    Ok(-(c * s + c.tilde() * co) / (2.0 * s))
}

/// Point at normalized parameter `u ∈ [0, 1]`, relative to the start point.
///
/// `u` is proportional to arc length, so evenly spaced `u` give evenly
/// spaced points along the arc.
pub fn point_at(c: Vec2, theta: f64, u: f64) -> Result<Vec2> {
    check_theta(theta)?;
    check_u(u)?;
    if theta.abs() < SMALL_ANGLE {
        Ok(branches::point_at_small(c, theta, u))
    } else {
        Ok(branches::point_at_general(c, theta, u))
    }
}

/// Arc length `s(u) = u c θ / (2 sin(θ/2))` from the start to parameter `u`.
pub fn arc_length(c_len: f64, theta: f64, u: f64) -> Result<f64> {
    check_theta(theta)?;
    check_u(u)?;
    if !(c_len >= 0.0) {
        return Err(Error::DegenerateChord(c_len));
    }
    if theta.abs() < SMALL_ANGLE {
        Ok(branches::arc_length_small(c_len, u))
    } else {
        Ok(branches::arc_length_general(c_len, theta, u))
    }
}

/// Signed area between the arc and its chord,
/// `A = (c²/4) (θ - sin θ) / (1 - cos θ)`.
///
/// Positive for counterclockwise arcs, zero for straight segments.
pub fn segment_area(c_len: f64, theta: f64) -> Result<f64> {
    check_theta(theta)?;
    if !(c_len >= 0.0) {
        return Err(Error::DegenerateChord(c_len));
    }
    if theta.abs() < SMALL_ANGLE {
        Ok(branches::segment_area_small(c_len, theta))
    } else {
        Ok(branches::segment_area_general(c_len, theta))
    }
}

/// Elastic strain energy `U = EI θ sin(θ/2) / c` of the arc seen as an
/// initially straight beam bent by a pure moment. Never negative.
pub fn bending_energy(c_len: f64, theta: f64, ei: f64) -> Result<f64> {
    check_chord(c_len)?;
    check_theta(theta)?;
    if !(ei > 0.0) {
        return Err(Error::NonPositiveRigidity(ei));
    }
    Ok(ei * theta * (0.5 * theta).sin() / c_len)
}

/// Unit tangent at the start point: the unit chord rotated by `-θ/2`,
/// `t = (cos(θ/2) c - sin(θ/2) c̃) / c`.
pub fn start_tangent(c: Vec2, theta: f64) -> Result<Vec2> {
    check_theta(theta)?;
    let unit = c.normalized().ok_or(Error::DegenerateChord(0.0))?;
    Ok(unit.rotate(-0.5 * theta))
}

/// Unit tangent at the end point: the unit chord rotated by `+θ/2`.
pub fn end_tangent(c: Vec2, theta: f64) -> Result<Vec2> {
    check_theta(theta)?;
    let unit = c.normalized().ok_or(Error::DegenerateChord(0.0))?;
    Ok(unit.rotate(0.5 * theta))
}

/// Arc angle of the arc over chord `c` that leaves its start point in
/// direction `t`: `tan(θ/2) = (t̃·c) / (t·c)`.
///
/// `t` need not be normalized.
pub fn theta_from_tangent(t: Vec2, c: Vec2) -> Result<f64> {
    if t.norm() == 0.0 {
        return Err(Error::ZeroVector);
    }
    check_chord(c.norm())?;
    Ok(2.0 * t.skew(c).atan2(t.dot(c)))
}

/// Center-based description of an arc.
///
/// `theta0` is the direction of the start point seen from the center,
/// measured counterclockwise from the positive x-axis. The arc sweeps
/// from `theta0` to `theta0 + theta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CenterParams {
    pub center: Vec2,
    pub radius: f64,
    pub theta0: f64,
    pub theta: f64,
}

impl CenterParams {
    /// Point at fraction `v` of the sweep.
    pub fn point(&self, v: f64) -> Vec2 {
        let phi = self.theta0 + v * self.theta;
        self.center + Vec2::new(phi.cos(), phi.sin()) * self.radius
    }

    pub fn start_point(&self) -> Vec2 {
        self.point(0.0)
    }

    pub fn end_point(&self) -> Vec2 {
        self.point(1.0)
    }
}

/// A circular arc from `a` to `b` with signed angular range `theta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArcSeg {
    pub a: Vec2,
    pub b: Vec2,
    pub theta: f64,
}

impl ArcSeg {
    /// Validated constructor.
    ///
    /// Coincident endpoints are only accepted for a straight (`θ = 0`)
    /// segment.
    pub fn new(a: Vec2, b: Vec2, theta: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::InvalidPolyarc("non-finite endpoint".into()));
        }
        check_theta(theta)?;
        if a == b && theta != 0.0 {
            return Err(Error::DegenerateChord(0.0));
        }
        Ok(ArcSeg { a, b, theta })
    }

    pub fn line(a: Vec2, b: Vec2) -> Self {
        ArcSeg { a, b, theta: 0.0 }
    }

    #[inline]
    pub fn chord(&self) -> Vec2 {
        self.b - self.a
    }

    #[inline]
    pub fn chord_len(&self) -> f64 {
        self.chord().norm()
    }

    pub fn is_line(&self) -> bool {
        self.theta == 0.0
    }

    pub fn radius(&self) -> Result<f64> {
        radius(self.chord_len(), self.theta)
    }

    pub fn center(&self) -> Result<Vec2> {
        Ok(self.a - center_offset(self.chord(), self.theta)?)
    }

    /// Absolute point at parameter `u`.
    pub fn point_at(&self, u: f64) -> Result<Vec2> {
        Ok(self.a + point_at(self.chord(), self.theta, u)?)
    }

    pub fn length(&self) -> Result<f64> {
        arc_length(self.chord_len(), self.theta, 1.0)
    }

    pub fn segment_area(&self) -> Result<f64> {
        segment_area(self.chord_len(), self.theta)
    }

    /// Bending energy; a straight segment stores none, even a zero-length one.
    pub fn bending_energy(&self, ei: f64) -> Result<f64> {
        if self.theta == 0.0 {
            if !(ei > 0.0) {
                return Err(Error::NonPositiveRigidity(ei));
            }
            return Ok(0.0);
        }
        bending_energy(self.chord_len(), self.theta, ei)
    }

    pub fn start_tangent(&self) -> Result<Vec2> {
        start_tangent(self.chord(), self.theta)
    }

    pub fn end_tangent(&self) -> Result<Vec2> {
        end_tangent(self.chord(), self.theta)
    }

    /// The same arc traversed from `b` to `a`.
    pub fn reversed(&self) -> ArcSeg {
        ArcSeg {
            a: self.b,
            b: self.a,
            theta: -self.theta,
        }
    }

    pub fn to_center_params(&self) -> Result<CenterParams> {
        to_center_params(self)
    }
}

pub fn to_center_params(arc: &ArcSeg) -> Result<CenterParams> {
    let r0 = center_offset(arc.chord(), arc.theta)?;
    Ok(CenterParams {
        center: arc.a - r0,
        radius: radius(arc.chord_len(), arc.theta)?.abs(),
        theta0: r0.y.atan2(r0.x),
        theta: arc.theta,
    })
}

/// `θ - sin θ` without the cancellation of the direct difference near zero.
fn theta_minus_sin(theta: f64) -> f64 {
    if theta.abs() >= 1.0 {
        return theta - theta.sin();
    }
    let t2 = theta * theta;
    let mut term = theta * t2 / 6.0;
    let mut sum = term;
    let mut k = 2.0;
    while term.abs() > 1e-18 * sum.abs() {
        term *= -t2 / ((2.0 * k) * (2.0 * k + 1.0));
        sum += term;
        k += 1.0;
    }
    sum
}

/// The two evaluation branches of the formulas that are singular at
/// `θ = 0`, without range checks.
///
/// The checked functions in the parent module pick one of these based on
/// [`SMALL_ANGLE`]; both are exposed so their agreement near the switch can
/// be tested.
pub mod branches {
    use super::theta_minus_sin;
    use crate::vec2::Vec2;

    pub fn point_at_general(c: Vec2, theta: f64, u: f64) -> Vec2 {
        let half = 0.5 * theta;
        let rest = (1.0 - u) * half;
        let scale = (u * half).sin() / half.sin();
        (c * rest.cos() - c.tilde() * rest.sin()) * scale
    }

    /// `u (c - (1-u) θ/2 c̃)`; exact for `θ = 0`.
    pub fn point_at_small(c: Vec2, theta: f64, u: f64) -> Vec2 {
        (c - c.tilde() * ((1.0 - u) * 0.5 * theta)) * u
    }

    pub fn arc_length_general(c_len: f64, theta: f64, u: f64) -> f64 {
        let half = 0.5 * theta;
        u * c_len * half / half.sin()
    }

    pub fn arc_length_small(c_len: f64, u: f64) -> f64 {
        u * c_len
    }

    pub fn segment_area_general(c_len: f64, theta: f64) -> f64 {
        let s = (0.5 * theta).sin();
        0.25 * c_len * c_len * theta_minus_sin(theta) / (2.0 * s * s)
    }

    /// Leading series term `c² θ / 12`.
    pub fn segment_area_small(c_len: f64, theta: f64) -> f64 {
        c_len * c_len * theta / 12.0
    }
}
