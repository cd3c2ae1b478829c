//! SVG rendering of polyarcs.
//!
//! Curves are drawn in mathematical orientation: path coordinates are the
//! curve's own coordinates and the whole drawing sits in a `scale(1,-1)`
//! group, so `y` points up on screen. Every arc becomes one circular SVG arc
//! command (two for nearly full circles); straight pieces become lines.

use std::f64::consts::{PI, TAU};
use std::fmt::Write as _;

use crate::arc::ArcSeg;
use crate::error::{Error, Result};
use crate::polycurve::Polyarc;
use crate::vec2::Vec2;

/// Arcs flatter than this are drawn as straight lines.
pub const LINE_THRESHOLD: f64 = 1e-6;

/// Arcs closer than this to a full turn are split in two halves.
pub const SPLIT_THRESHOLD: f64 = TAU - 0.01;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderOptions {
    /// Stroke width in screen pixels.
    pub stroke_width: f64,
    /// Margin around the drawing, as a fraction of its larger extent.
    pub padding: f64,
    /// Points per arc used to measure the drawing's bounding box.
    pub samples_per_arc: usize,
    /// Size of the larger canvas side in pixels.
    pub canvas_size: f64,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            stroke_width: 1.5,
            padding: 0.05,
            samples_per_arc: 64,
            canvas_size: 800.0,
        }
    }
}

impl RenderOptions {
    pub fn validate(&self) -> Result<()> {
        if !(self.stroke_width > 0.0) || !(self.padding > 0.0) || !(self.canvas_size > 0.0) {
            return Err(Error::InvalidArgument(
                "stroke width, padding and canvas size must be positive".into(),
            ));
        }
        if self.samples_per_arc < 2 {
            return Err(Error::InvalidArgument("need at least 2 samples per arc".into()));
        }
        Ok(())
    }
}

/// One drawing command of a path, already resolved to SVG flags.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PathCommand {
    Line {
        to: Vec2,
    },
    Arc {
        radius: f64,
        large_arc: bool,
        sweep: bool,
        to: Vec2,
    },
}

/// Circle and angular span that an SVG renderer derives from an arc
/// command with `rx = ry = radius` and no rotation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SvgArcGeometry {
    pub center: Vec2,
    /// Radius after the renderer's out-of-range correction.
    pub radius: f64,
    pub start_angle: f64,
    /// Signed sweep; positive runs from +x towards +y.
    pub sweep_angle: f64,
}

impl SvgArcGeometry {
    pub fn point(&self, v: f64) -> Vec2 {
        let phi = self.start_angle + v * self.sweep_angle;
        self.center + Vec2::new(phi.cos(), phi.sin()) * self.radius
    }

    /// Distance from `p` to the drawn arc.
    pub fn distance_to(&self, p: Vec2) -> f64 {
        let d = p - self.center;
        let phi = d.y.atan2(d.x);
        let along = if self.sweep_angle >= 0.0 {
            (phi - self.start_angle).rem_euclid(TAU)
        } else {
            (self.start_angle - phi).rem_euclid(TAU)
        };
        if along <= self.sweep_angle.abs() {
            (d.norm() - self.radius).abs()
        } else {
            p.distance(self.point(0.0)).min(p.distance(self.point(1.0)))
        }
    }
}

/// Endpoint-to-center conversion for circular SVG arcs, following the
/// algorithm in the SVG implementation notes. `None` for coincident
/// endpoints or a zero radius, which renderers skip or draw as lines.
pub fn svg_arc_geometry(from: Vec2, to: Vec2, radius: f64, large_arc: bool, sweep: bool) -> Option<SvgArcGeometry> {
    if from == to || radius == 0.0 {
        return None;
    }
    let mut r = radius.abs();
    let half = (from - to) * 0.5;
    let d2 = half.norm_squared();
    let lambda = d2 / (r * r);
    if lambda > 1.0 {
        r *= lambda.sqrt();
    }
    let mut coef = ((r * r - d2) / d2).max(0.0).sqrt();
    if large_arc == sweep {
        coef = -coef;
    }
    let offset = Vec2::new(coef * half.y, -coef * half.x);
    let center = offset + (from + to) * 0.5;
    let u = (half - offset) / r;
    let v = (-half - offset) / r;
    let start_angle = u.y.atan2(u.x);
    let mut sweep_angle = u.skew(v).atan2(u.dot(v));
    if !sweep && sweep_angle > 0.0 {
        sweep_angle -= TAU;
    } else if sweep && sweep_angle < 0.0 {
        sweep_angle += TAU;
    }
    Some(SvgArcGeometry {
        center,
        radius: r,
        start_angle,
        sweep_angle,
    })
}

/// Path commands continuing from `seg.a` to `seg.b`.
pub fn segment_commands(seg: &ArcSeg) -> Result<Vec<PathCommand>> {
    if seg.theta.abs() < LINE_THRESHOLD || seg.a == seg.b {
        return Ok(vec![PathCommand::Line { to: seg.b }]);
    }
    if seg.theta.abs() > SPLIT_THRESHOLD {
        let mid = seg.point_at(0.5)?;
        let first = ArcSeg::new(seg.a, mid, 0.5 * seg.theta)?;
        let second = ArcSeg::new(mid, seg.b, 0.5 * seg.theta)?;
        return Ok(vec![arc_command(&first)?, arc_command(&second)?]);
    }
    Ok(vec![arc_command(seg)?])
}

fn arc_command(seg: &ArcSeg) -> Result<PathCommand> {
    let radius = seg.radius()?.abs();
    let large_arc = seg.theta.abs() > PI;
    let mid = seg.point_at(0.5)?;
    // pick the sweep whose arc actually passes through the midpoint
    let miss = |sweep| {
        svg_arc_geometry(seg.a, seg.b, radius, large_arc, sweep).map_or(f64::INFINITY, |g| g.point(0.5).distance(mid))
    };
    let sweep = miss(true) < miss(false);
    Ok(PathCommand::Arc {
        radius,
        large_arc,
        sweep,
        to: seg.b,
    })
}

/// SVG path data for the whole curve.
pub fn path_data(pa: &Polyarc) -> Result<String> {
    let mut d = String::new();
    let start = pa.vertices()[0];
    let _ = write!(d, "M {} {}", start.x, start.y);
    for (i, seg) in pa.segments().enumerate() {
        for cmd in segment_commands(&seg).map_err(|e| e.at_segment(i))? {
            match cmd {
                PathCommand::Line { to } => {
                    let _ = write!(d, " L {} {}", to.x, to.y);
                }
                PathCommand::Arc {
                    radius,
                    large_arc,
                    sweep,
                    to,
                } => {
                    let _ = write!(
                        d,
                        " A {radius} {radius} 0 {} {} {} {}",
                        u8::from(large_arc),
                        u8::from(sweep),
                        to.x,
                        to.y
                    );
                }
            }
        }
    }
    if pa.is_closed() && pa.segment_count() > 0 {
        d.push_str(" Z");
    }
    Ok(d)
}

pub fn render_svg(pa: &Polyarc, opts: &RenderOptions) -> Result<String> {
    render_svg_many(std::slice::from_ref(pa), opts)
}

/// One `path` element per curve, colored along a hue ramp when there is
/// more than one.
pub fn render_svg_many(curves: &[Polyarc], opts: &RenderOptions) -> Result<String> {
    opts.validate()?;
    let (mut min, mut max) = (
        Vec2::new(f64::INFINITY, f64::INFINITY),
        Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
    );
    for pa in curves {
        for p in pa.sample(opts.samples_per_arc)? {
            min = Vec2::new(min.x.min(p.x), min.y.min(p.y));
            max = Vec2::new(max.x.max(p.x), max.y.max(p.y));
        }
    }
    if curves.is_empty() {
        min = Vec2::ZERO;
        max = Vec2::ZERO;
    }
    let extent = (max.x - min.x).max(max.y - min.y);
    let pad = if extent > 0.0 { opts.padding * extent } else { 1.0 };
    let (vx, vy) = (min.x - pad, -(max.y + pad));
    let (vw, vh) = (max.x - min.x + 2.0 * pad, max.y - min.y + 2.0 * pad);
    let px = opts.canvas_size / vw.max(vh);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{:.0}\" height=\"{:.0}\" viewBox=\"{vx} {vy} {vw} {vh}\">",
        vw * px,
        vh * px
    );
    out.push_str("  <g transform=\"scale(1,-1)\" fill=\"none\" stroke-linecap=\"round\" stroke-linejoin=\"round\">\n");
    for (i, pa) in curves.iter().enumerate() {
        let color = if curves.len() == 1 {
            "#000000".to_string()
        } else {
            hue_color(i as f64 / curves.len() as f64)
        };
        let _ = writeln!(
            out,
            "    <path id=\"curve-{i}\" d=\"{}\" stroke=\"{color}\" stroke-width=\"{}\" vector-effect=\"non-scaling-stroke\"/>",
            path_data(pa)?,
            opts.stroke_width
        );
    }
    out.push_str("  </g>\n</svg>\n");
    Ok(out)
}

/// Fully saturated color at `h ∈ [0, 1)` around the hue circle, darkened
/// for contrast on white.
fn hue_color(h: f64) -> String {
    let sector = h * 6.0;
    let x = 1.0 - (sector % 2.0 - 1.0).abs();
    let (r, g, b) = match sector as u32 {
        0 => (1.0, x, 0.0),
        1 => (x, 1.0, 0.0),
        2 => (0.0, 1.0, x),
        3 => (0.0, x, 1.0),
        4 => (x, 0.0, 1.0),
        _ => (1.0, 0.0, x),
    };
    let byte = |c: f64| (c * 200.0).round() as u8;
    format!("#{:02x}{:02x}{:02x}", byte(r), byte(g), byte(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(x: f64, y: f64) -> Vec2 {
        Vec2::new(x, y)
    }

    #[test]
    fn semicircle_command() {
        let seg = ArcSeg::new(v(-1.0, 0.0), v(1.0, 0.0), -PI).unwrap();
        let cmds = segment_commands(&seg).unwrap();
        let [PathCommand::Arc {
            radius,
            large_arc,
            sweep,
            to,
        }] = cmds[..]
        else {
            panic!("{cmds:?}")
        };
        assert!((radius - 1.0).abs() < 1e-15);
        assert!(!large_arc);
        assert_eq!(to, v(1.0, 0.0));
        let g = svg_arc_geometry(seg.a, seg.b, radius, large_arc, sweep).unwrap();
        assert!(g.distance_to(v(0.0, 1.0)) < 1e-12);
        assert!(g.distance_to(v(0.0, -1.0)) > 1.0);
        // clockwise in y-up coordinates is the negative SVG sweep
        assert!(!sweep);
        let ccw = segment_commands(&seg.reversed()).unwrap();
        assert!(matches!(ccw[0], PathCommand::Arc { sweep: true, .. }));
    }

    #[test]
    fn polygon_is_all_lines() {
        let sq = Polyarc::polygon(vec![v(0.0, 0.0), v(1.0, 0.0), v(1.0, 1.0), v(0.0, 1.0)], true).unwrap();
        let d = path_data(&sq).unwrap();
        assert_eq!(d.matches(" L ").count(), 4);
        assert!(!d.contains(" A "));
        assert!(d.ends_with(" Z"));
    }

    #[test]
    fn large_arc_flag() {
        let seg = ArcSeg::new(v(0.0, 0.0), v(1.0, 0.0), 1.5 * PI).unwrap();
        assert!(matches!(
            segment_commands(&seg).unwrap()[0],
            PathCommand::Arc { large_arc: true, .. }
        ));
        let seg = ArcSeg::new(v(0.0, 0.0), v(1.0, 0.0), 0.5 * PI).unwrap();
        assert!(matches!(
            segment_commands(&seg).unwrap()[0],
            PathCommand::Arc { large_arc: false, .. }
        ));
    }

    #[test]
    fn near_full_circle_is_split() {
        let seg = ArcSeg::new(v(0.0, 0.0), v(0.01, 0.0), TAU - 0.001).unwrap();
        let cmds = segment_commands(&seg).unwrap();
        assert_eq!(cmds.len(), 2);
        let mut from = seg.a;
        for cmd in cmds {
            let PathCommand::Arc {
                radius,
                large_arc,
                sweep,
                to,
            } = cmd
            else {
                panic!()
            };
            let g = svg_arc_geometry(from, to, radius, large_arc, sweep).unwrap();
            let half = ArcSeg::new(from, to, 0.5 * seg.theta).unwrap();
            for u in [0.25, 0.5, 0.75] {
                assert!(g.distance_to(half.point_at(u).unwrap()) < 1e-9 * radius);
            }
            from = to;
        }
    }

    #[test]
    fn document_shape() {
        let pa = Polyarc::new(vec![v(-1.0, 0.0), v(1.0, 0.0)], vec![PI, PI], true).unwrap();
        let svg = render_svg(&pa, &RenderOptions::default()).unwrap();
        assert!(svg.contains("scale(1,-1)"));
        assert_eq!(svg.matches("<path").count(), 1);
        assert!(svg.contains("viewBox=\"-1.1 "), "{svg}");
        let bad = RenderOptions {
            padding: 0.0,
            ..RenderOptions::default()
        };
        assert!(render_svg(&pa, &bad).is_err());
    }

    #[test]
    fn hue_ramp() {
        assert_eq!(hue_color(0.0), "#c80000");
        assert_ne!(hue_color(0.5), hue_color(0.0));
    }

    proptest! {
        #[test]
        fn emitted_flags_select_the_right_arc(
            ax in -50.0f64..50.0, ay in -50.0f64..50.0,
            len_exp in -1.0f64..2.0, phi in 0.0..TAU,
            theta in (-TAU + 0.01..TAU - 0.01).prop_filter("arc", |t: &f64| t.abs() >= LINE_THRESHOLD),
        ) {
            let a = v(ax, ay);
            let c = v(phi.cos(), phi.sin()) * 10f64.powf(len_exp);
            let seg = ArcSeg::new(a, a + c, theta).unwrap();
            let r = seg.radius().unwrap().abs();
            let mut from = seg.a;
            let cmds = segment_commands(&seg).unwrap();
            let pieces = cmds.len() as f64;
            for (k, cmd) in cmds.into_iter().enumerate() {
                let PathCommand::Arc { radius, large_arc, sweep, to } = cmd else { panic!() };
                prop_assert!((radius - r).abs() <= 1e-12 * r);
                let g = svg_arc_geometry(from, to, radius, large_arc, sweep).unwrap();
                for u in [0.25, 0.5, 0.75] {
                    let p = seg.point_at((k as f64 + u) / pieces).unwrap();
                    prop_assert!(g.distance_to(p) <= 1e-6 * r, "u={} miss={}", u, g.distance_to(p));
                }
                from = to;
            }
        }
    }
}
