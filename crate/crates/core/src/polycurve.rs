//! Polyarcs and arc splines.
//!
//! A [`Polyarc`] is a sequence of vertices with one arc angle per segment.
//! Adjacent arcs only share their join point. An arc spline is a polyarc
//! whose adjacent arcs also share the tangent at every join; over a fixed
//! polygon such splines form a one-parameter family, indexed by the angle of
//! the first arc ([`SplineFamily`]).

use std::f64::consts::{PI, TAU};

use crate::arc::{self, ArcSeg};
use crate::error::{Error, Result};
use crate::vec2::Vec2;

/// Piecewise circular curve.
///
/// An open curve with `n` vertices has `n - 1` segments; a closed one has
/// `n`, the last running from the final vertex back to the first.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyarc {
    vertices: Vec<Vec2>,
    thetas: Vec<f64>,
    closed: bool,
}

/// Length, absolute areal deviation and bending energy of a curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Metrics {
    pub length: f64,
    /// `Σ |A_i|`, the summed absolute arc segment areas.
    pub area: f64,
    pub energy: f64,
}

impl Polyarc {
    pub fn new(vertices: Vec<Vec2>, thetas: Vec<f64>, closed: bool) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidPolyarc("no vertices".into()));
        }
        let expected = segment_count(vertices.len(), closed);
        if thetas.len() != expected {
            return Err(Error::InvalidPolyarc(format!(
                "{} curve with {} vertices needs {} arc angles, got {}",
                if closed { "closed" } else { "open" },
                vertices.len(),
                expected,
                thetas.len()
            )));
        }
        if let Some(i) = vertices.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidPolyarc(format!("vertex {i} is not finite")));
        }
        let pa = Polyarc {
            vertices,
            thetas,
            closed,
        };
        for i in 0..pa.segment_count() {
            let s = pa.segment(i);
            ArcSeg::new(s.a, s.b, s.theta).map_err(|e| e.at_segment(i))?;
        }
        Ok(pa)
    }

    /// The polygon itself, i.e. a polyarc with every angle zero.
    pub fn polygon(vertices: Vec<Vec2>, closed: bool) -> Result<Self> {
        let n = segment_count(vertices.len(), closed);
        Polyarc::new(vertices, vec![0.0; n], closed)
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn thetas(&self) -> &[f64] {
        &self.thetas
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn segment_count(&self) -> usize {
        self.thetas.len()
    }

    /// Segment `i`; panics if out of range.
    pub fn segment(&self, i: usize) -> ArcSeg {
        let n = self.vertices.len();
        ArcSeg {
            a: self.vertices[i],
            b: self.vertices[(i + 1) % n],
            theta: self.thetas[i],
        }
    }

    pub fn segments(&self) -> impl ExactSizeIterator<Item = ArcSeg> + '_ {
        (0..self.segment_count()).map(move |i| self.segment(i))
    }

    /// Same curve, traversed backwards.
    pub fn reversed(&self) -> Polyarc {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        let m = self.thetas.len();
        let thetas = if self.closed {
            // the closing segment stays last
            let mut t: Vec<f64> = self.thetas[..m - 1].iter().rev().map(|t| -t).collect();
            t.push(-self.thetas[m - 1]);
            t
        } else {
            self.thetas.iter().rev().map(|t| -t).collect()
        };
        Polyarc {
            vertices,
            thetas,
            closed: self.closed,
        }
    }

    pub fn total_length(&self) -> Result<f64> {
        self.segments()
            .enumerate()
            .try_fold(0.0, |acc, (i, s)| Ok(acc + s.length().map_err(|e| e.at_segment(i))?))
    }

    /// Signed enclosed area: the shoelace area of the vertex polygon plus
    /// every signed arc segment area.
    ///
    /// Open curves are closed by the chord from the last to the first
    /// vertex. Orientation and self-intersections are not interpreted;
    /// counterclockwise loops count positive.
    pub fn total_area(&self) -> Result<f64> {
        Ok(shoelace(&self.vertices) + self.segment_areas()?.iter().sum::<f64>())
    }

    /// `Σ |A_i|` over all arc segment areas.
    pub fn abs_segment_area(&self) -> Result<f64> {
        Ok(self.segment_areas()?.iter().map(|a| a.abs()).sum())
    }

    pub fn segment_areas(&self) -> Result<Vec<f64>> {
        self.segments()
            .enumerate()
            .map(|(i, s)| s.segment_area().map_err(|e| e.at_segment(i)))
            .collect()
    }

    pub fn total_energy(&self, ei: f64) -> Result<f64> {
        self.segments().enumerate().try_fold(0.0, |acc, (i, s)| {
            Ok(acc + s.bending_energy(ei).map_err(|e| e.at_segment(i))?)
        })
    }

    pub fn metrics(&self, ei: f64) -> Result<Metrics> {
        Ok(Metrics {
            length: self.total_length()?,
            area: self.abs_segment_area()?,
            energy: self.total_energy(ei)?,
        })
    }

    /// Largest tangent mismatch `|t_end(i-1) - t_start(i)|` over the joins
    /// between consecutive segments. The join closing a closed curve is not
    /// included; see [`Polyarc::closing_g1_defect`].
    pub fn g1_defect(&self) -> Result<f64> {
        (1..self.segment_count()).try_fold(0.0f64, |acc, i| Ok(acc.max(self.join_defect(i - 1, i)?)))
    }

    /// Tangent mismatch where the last segment of a closed curve meets the
    /// first one. `None` for open curves and single-segment loops.
    pub fn closing_g1_defect(&self) -> Result<Option<f64>> {
        let m = self.segment_count();
        if !self.closed || m < 2 {
            return Ok(None);
        }
        self.join_defect(m - 1, 0).map(Some)
    }

    fn join_defect(&self, prev: usize, next: usize) -> Result<f64> {
        let t_end = self.segment(prev).end_tangent().map_err(|e| e.at_segment(prev))?;
        let t_start = self.segment(next).start_tangent().map_err(|e| e.at_segment(next))?;
        Ok((t_end - t_start).norm())
    }

    /// Points along the curve, `points_per_segment` per segment counting both
    /// ends, with shared join points emitted once. Spacing is uniform in arc
    /// length within each segment.
    pub fn sample(&self, points_per_segment: usize) -> Result<Vec<Vec2>> {
        if points_per_segment < 2 {
            return Err(Error::InvalidArgument(format!(
                "need at least 2 points per segment, got {points_per_segment}"
            )));
        }
        let mut out = Vec::with_capacity(self.segment_count() * (points_per_segment - 1) + 1);
        out.push(self.vertices[0]);
        let last = (points_per_segment - 1) as f64;
        for (i, s) in self.segments().enumerate() {
            for k in 1..points_per_segment - 1 {
                out.push(s.point_at(k as f64 / last).map_err(|e| e.at_segment(i))?);
            }
            out.push(s.b);
        }
        Ok(out)
    }
}

fn segment_count(vertices: usize, closed: bool) -> usize {
    if closed {
        vertices
    } else {
        vertices.saturating_sub(1)
    }
}

/// `½ Σ p̃_i · p_{i+1}` over the closed vertex loop.
pub fn shoelace(vertices: &[Vec2]) -> f64 {
    let n = vertices.len();
    0.5 * (0..n).map(|i| vertices[i].skew(vertices[(i + 1) % n])).sum::<f64>()
}

/// Turning angle `γ` from edge direction `c_prev` to `c_next`,
/// `tan γ = (c̃_prev · c_next) / (c_prev · c_next)`, in `(-π, π]`.
///
/// An exact reversal maps to `+π`.
pub fn exterior_angle(c_prev: Vec2, c_next: Vec2) -> Result<f64> {
    if c_prev.norm() == 0.0 || c_next.norm() == 0.0 {
        return Err(Error::ZeroVector);
    }
    let g = c_prev.skew(c_next).atan2(c_prev.dot(c_next));
    Ok(if g <= -PI { PI } else { g })
}

/// Maps an arc angle outside `(-2π, 2π)` to its complement `θ ∓ 4π`,
/// which describes the arc completing a full circle on the other side of
/// the same chord. Repeated as often as needed.
pub fn complement(theta: f64) -> f64 {
    let mut t = theta;
    if t >= TAU {
        while t >= TAU {
            t -= 2.0 * TAU;
        }
    } else {
        while t <= -TAU {
            t += 2.0 * TAU;
        }
    }
    t
}

/// All G¹ arc splines over one polygon.
///
/// Adjacent arc angles satisfy `θ_i/2 + θ_{i-1}/2 = γ_i`, so the first
/// angle `θ₀` determines the whole spline.
#[derive(Debug, Clone, PartialEq)]
pub struct SplineFamily {
    vertices: Vec<Vec2>,
    closed: bool,
    gammas: Vec<f64>,
}

impl SplineFamily {
    /// Needs at least two vertices and no zero-length edge, including the
    /// closing edge of a closed polygon.
    pub fn new(vertices: Vec<Vec2>, closed: bool) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::InvalidPolyarc(format!(
                "a spline needs at least 2 vertices, got {}",
                vertices.len()
            )));
        }
        if let Some(i) = vertices.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidPolyarc(format!("vertex {i} is not finite")));
        }
        let n = vertices.len();
        let m = segment_count(n, closed);
        let edges: Vec<Vec2> = (0..m).map(|i| vertices[(i + 1) % n] - vertices[i]).collect();
        if let Some(i) = edges.iter().position(|e| e.norm() == 0.0) {
            return Err(Error::InvalidPolyarc(format!(
                "vertices {i} and {} coincide",
                (i + 1) % n
            )));
        }
        let gammas = edges
            .windows(2)
            .map(|w| exterior_angle(w[0], w[1]))
            .collect::<Result<Vec<_>>>()?;
        Ok(SplineFamily {
            vertices,
            closed,
            gammas,
        })
    }

    /// Family over the vertices of an existing polyarc; its angles are ignored.
    pub fn from_polyarc(pa: &Polyarc) -> Result<Self> {
        SplineFamily::new(pa.vertices().to_vec(), pa.is_closed())
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// Exterior angles at the joins `1..segment_count()`.
    pub fn gammas(&self) -> &[f64] {
        &self.gammas
    }

    pub fn segment_count(&self) -> usize {
        segment_count(self.vertices.len(), self.closed)
    }

    /// Arc angles of the member with first angle `theta0`.
    ///
    /// Each angle follows from its predecessor as `θ_i = 2γ_i - θ_{i-1}`,
    /// which unrolls to `θ_i = (-1)^i [θ₀ + 2 Σ_{j≤i} (-1)^j γ_j]`.
    /// Results outside `(-2π, 2π)` are replaced by their complement.
    pub fn thetas(&self, theta0: f64) -> Result<Vec<f64>> {
        arc::check_theta(theta0).map_err(|e| e.at_segment(0))?;
        let mut thetas = Vec::with_capacity(self.segment_count());
        thetas.push(theta0);
        let mut prev = theta0;
        for (k, &gamma) in self.gammas.iter().enumerate() {
            let t = complement(2.0 * gamma - prev);
            if t.abs() >= TAU {
                return Err(Error::FullCircle(k + 1));
            }
            thetas.push(t);
            prev = t;
        }
        Ok(thetas)
    }

    /// The arc spline with first angle `theta0`.
    ///
    /// For closed polygons the closing segment takes its angle from the same
    /// recurrence; it is tangent-continuous with the first segment only in
    /// special (e.g. symmetric) cases.
    pub fn propagate(&self, theta0: f64) -> Result<Polyarc> {
        let thetas = self.thetas(theta0)?;
        Polyarc::new(self.vertices.clone(), thetas, self.closed)
    }
}
