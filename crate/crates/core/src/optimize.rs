//! Fairing of arc splines.
//!
//! Every member of a [`SplineFamily`] is fixed by its first arc angle, so
//! picking the "best" spline is a scalar minimization over `θ₀`. The
//! objective is one of total length, summed absolute segment area (the
//! areal deviation from the polygon) or bending energy; the minimizer is a
//! golden-section search.
//!
//! The objectives are not unimodal in `θ₀`: they kink wherever one of the
//! propagated angles wraps through `±2π`, and a single search over the whole
//! bracket can settle in a side basin. [`smooth`] therefore also scans the
//! bracket on a grid and refines the best grid cell with a second search.

use std::fmt;
use std::str::FromStr;

use crate::arc;
use crate::error::{Error, Result};
use crate::polycurve::{complement, Metrics, Polyarc, SplineFamily};

/// `(√5 - 1) / 2`, the bracket contraction factor per reduction.
pub fn inv_golden_ratio() -> f64 {
    (5f64.sqrt() - 1.0) / 2.0
}

/// Golden-section search settings. Angles in radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GssConfig {
    pub lo: f64,
    pub up: f64,
    pub tol: f64,
    pub max_iter: usize,
    /// Grid spacing of the scan in [`smooth`]; `0` runs the single search
    /// only. Ignored by [`gss`].
    pub scan_step: f64,
    /// Tolerance of the refining search after the scan; `0` reuses `tol`.
    pub refine_tol: f64,
}

/// Upper bound on scan grid points accepted by [`GssConfig::validate`].
pub const MAX_SCAN_POINTS: f64 = 1e7;

impl Default for GssConfig {
    /// `[-344°, 344°]` with a 0.6° tolerance, scanned at the same spacing.
    fn default() -> Self {
        GssConfig {
            lo: (-344f64).to_radians(),
            up: 344f64.to_radians(),
            tol: 0.6f64.to_radians(),
            max_iter: 200,
            scan_step: 0.6f64.to_radians(),
            refine_tol: 1e-6,
        }
    }
}

impl GssConfig {
    /// Bracket and tolerance, no scan.
    pub fn new(lo: f64, up: f64, tol: f64) -> Self {
        GssConfig {
            lo,
            up,
            tol,
            max_iter: 200,
            scan_step: 0.0,
            refine_tol: 0.0,
        }
    }

    pub fn with_scan(self, scan_step: f64) -> Self {
        GssConfig { scan_step, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.lo.is_finite() && self.up.is_finite()) {
            return Err(Error::InvalidConfig("bounds must be finite".into()));
        }
        if self.lo >= self.up {
            return Err(Error::InvalidConfig(format!(
                "lower bound {} is not below upper bound {}",
                self.lo, self.up
            )));
        }
        if !(self.tol > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "tolerance must be positive, got {}",
                self.tol
            )));
        }
        if self.max_iter == 0 {
            return Err(Error::InvalidConfig("max_iter must be positive".into()));
        }
        Ok(())
    }

    fn validate_scan(&self) -> Result<()> {
        self.validate()?;
        if !(self.refine_tol >= 0.0 && self.refine_tol.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "refine tolerance must be finite and >= 0, got {}",
                self.refine_tol
            )));
        }
        if !(self.scan_step >= 0.0 && self.scan_step.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "scan step must be finite and >= 0, got {}",
                self.scan_step
            )));
        }
        if self.scan_step > 0.0 && (self.up - self.lo) / self.scan_step > MAX_SCAN_POINTS {
            return Err(Error::InvalidConfig(format!(
                "scan step {} is too fine for the bracket",
                self.scan_step
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GssOutcome {
    /// Midpoint of the final bracket.
    pub x: f64,
    /// Number of bracket reductions.
    pub reductions: usize,
    /// Number of objective evaluations (two per reduction).
    pub evaluations: usize,
}

/// Golden-section search for a minimum of `f` on `[cfg.lo, cfg.up]`.
///
/// Each step probes `up - Δ·r` and `lo + Δ·r` (`r` the inverse golden
/// ratio) and keeps `[lo, probe_up]` if the lower probe is strictly
/// smaller, `[probe_lo, up]` otherwise. Stops once the bracket is no wider
/// than `cfg.tol` and returns its midpoint.
pub fn gss<F>(f: F, cfg: &GssConfig) -> Result<GssOutcome>
where
    F: FnMut(f64) -> f64,
{
    gss_observed(f, cfg, |_, _| {})
}

/// [`gss`], reporting every bracket (the initial one included) to
/// `observer`.
pub fn gss_observed<F, O>(mut f: F, cfg: &GssConfig, mut observer: O) -> Result<GssOutcome>
where
    F: FnMut(f64) -> f64,
    O: FnMut(f64, f64),
{
    cfg.validate()?;
    let r = inv_golden_ratio();
    let (mut lo, mut up) = (cfg.lo, cfg.up);
    let mut reductions = 0;
    observer(lo, up);
    loop {
        let delta = up - lo;
        if !(delta > cfg.tol) {
            break;
        }
        if reductions == cfg.max_iter {
            return Err(Error::IterationLimit(cfg.max_iter));
        }
        let probe_lo = up - delta * r;
        let probe_up = lo + delta * r;
        if f(probe_lo) < f(probe_up) {
            up = probe_up;
        } else {
            lo = probe_lo;
        }
        reductions += 1;
        observer(lo, up);
    }
    Ok(GssOutcome {
        x: (up + lo) / 2.0,
        reductions,
        evaluations: 2 * reductions,
    })
}

/// Fairing criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Objective {
    /// Total arc length `Σ L_i`.
    Length,
    /// Summed absolute segment areas `Σ |A_i|`.
    Area,
    /// Total bending energy `Σ U_i`.
    Energy,
}

impl Objective {
    pub const ALL: [Objective; 3] = [Objective::Length, Objective::Area, Objective::Energy];

    pub fn as_str(self) -> &'static str {
        match self {
            Objective::Length => "length",
            Objective::Area => "area",
            Objective::Energy => "energy",
        }
    }

    /// Picks this criterion's value out of a metrics record.
    pub fn of(self, m: &Metrics) -> f64 {
        match self {
            Objective::Length => m.length,
            Objective::Area => m.area,
            Objective::Energy => m.energy,
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "length" => Ok(Objective::Length),
            "area" => Ok(Objective::Area),
            "energy" => Ok(Objective::Energy),
            other => Err(Error::InvalidArgument(format!(
                "unknown objective '{other}' (expected length, area or energy)"
            ))),
        }
    }
}

/// Value of `obj` for the family member with first angle `theta0`.
///
/// `theta0` outside `(-2π, 2π)` is complement-normalized first. Members
/// that would need a full-circle arc evaluate to `+∞`, as does a
/// non-positive `ei`.
pub fn objective_value(family: &SplineFamily, theta0: f64, obj: Objective, ei: f64) -> f64 {
    let Ok(thetas) = family.thetas(complement(theta0)) else {
        return f64::INFINITY;
    };
    let verts = family.vertices();
    let n = verts.len();
    let mut total = 0.0;
    for (i, &theta) in thetas.iter().enumerate() {
        let c_len = verts[i].distance(verts[(i + 1) % n]);
        let term = match obj {
            Objective::Length => arc::arc_length(c_len, theta, 1.0),
            Objective::Area => arc::segment_area(c_len, theta).map(f64::abs),
            Objective::Energy => arc::bending_energy(c_len, theta, ei),
        };
        match term {
            Ok(t) => total += t,
            Err(_) => return f64::INFINITY,
        }
    }
    total
}

/// Result of [`smooth`].
#[derive(Debug, Clone, PartialEq)]
pub struct Smoothed {
    pub objective: Objective,
    /// Optimal first arc angle, normalized into `(-2π, 2π)`.
    pub theta0: f64,
    pub spline: Polyarc,
    pub metrics: Metrics,
    /// Bracket reductions of the search over the whole bracket.
    pub reductions: usize,
    /// Objective evaluations, scan and refinement included.
    pub evaluations: usize,
}

/// [`gss`] over the whole bracket, safeguarded by a grid scan.
///
/// With a positive `cfg.scan_step` the bracket is also sampled on that grid
/// and [`gss`] is rerun on the two cells around the best sample; the better
/// of the two results wins, the whole-bracket one on ties. The rerun stops
/// at `cfg.refine_tol` when that is positive. `reductions`
/// reports the whole-bracket search, `evaluations` counts everything.
pub fn scanned_gss<F>(f: F, cfg: &GssConfig) -> Result<GssOutcome>
where
    F: Fn(f64) -> f64,
{
    cfg.validate_scan()?;
    let whole = gss(&f, cfg)?;
    if cfg.scan_step == 0.0 {
        return Ok(whole);
    }
    let cells = ((cfg.up - cfg.lo) / cfg.scan_step).ceil() as usize;
    let grid = |k: usize| {
        if k == cells {
            cfg.up
        } else {
            cfg.lo + k as f64 * cfg.scan_step
        }
    };
    let (mut k_best, mut f_best) = (0, f64::INFINITY);
    for k in 0..=cells {
        let v = f(grid(k));
        if v < f_best {
            (k_best, f_best) = (k, v);
        }
    }
    let local = GssConfig {
        lo: grid(k_best.saturating_sub(1)),
        up: grid((k_best + 1).min(cells)),
        tol: if cfg.refine_tol > 0.0 { cfg.refine_tol } else { cfg.tol },
        ..*cfg
    };
    let refined = gss(&f, &local)?;
    let x = if f(refined.x) < f(whole.x) { refined.x } else { whole.x };
    Ok(GssOutcome {
        x,
        reductions: whole.reductions,
        evaluations: whole.evaluations + cells + 1 + refined.evaluations + 2,
    })
}

/// Minimizes `obj` over the family with [`scanned_gss`] and returns the
/// winning spline with all three metrics.
pub fn smooth(family: &SplineFamily, obj: Objective, cfg: &GssConfig, ei: f64) -> Result<Smoothed> {
    if !(ei > 0.0) {
        return Err(Error::NonPositiveRigidity(ei));
    }
    let outcome = scanned_gss(|t| objective_value(family, t, obj, ei), cfg)?;
    let theta0 = complement(outcome.x);
    let spline = family.propagate(theta0)?;
    let metrics = spline.metrics(ei)?;
    Ok(Smoothed {
        objective: obj,
        theta0,
        spline,
        metrics,
        reductions: outcome.reductions,
        evaluations: outcome.evaluations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vec2::Vec2;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    fn recursive_gss<F: Fn(f64) -> f64>(f: &F, lo: f64, up: f64, tol: f64) -> f64 {
        let ratio = inv_golden_ratio();
        let delta = up - lo;
        if delta > tol {
            let lo_ = up - delta * ratio;
            let up_ = lo + delta * ratio;
            if f(lo_) < f(up_) {
                recursive_gss(f, lo, up_, tol)
            } else {
                recursive_gss(f, lo_, up, tol)
            }
        } else {
            (up + lo) / 2.0
        }
    }

    #[test]
    fn contraction_factor() {
        assert!((inv_golden_ratio() - 0.618_033_988_749_894_8).abs() < 2e-16);
        let r = inv_golden_ratio();
        assert!((r * r + r - 1.0).abs() < 1e-15);
    }

    #[test]
    fn quadratic_minimum() {
        let out = gss(|x| (x - 2.0).powi(2), &GssConfig::new(-10.0, 10.0, 1e-6)).unwrap();
        assert!((out.x - 2.0).abs() <= 1e-6);
        assert_eq!(out.evaluations, 2 * out.reductions);
    }

    #[test]
    fn monotone_boundary_minimum() {
        let out = gss(|x| x, &GssConfig::new(0.0, 1.0, 1e-3)).unwrap();
        assert!(out.x > 0.0 && out.x <= 1e-3);
    }

    #[test]
    fn default_range_takes_fifteen_reductions() {
        let out = gss(|x| x * x, &GssConfig::default()).unwrap();
        assert_eq!(out.reductions, 15);
        assert_eq!(out.evaluations, 30);
    }

    #[test]
    fn brackets_contract_geometrically() {
        let cfg = GssConfig::new(-3.0, 5.0, 1e-9);
        let width0 = cfg.up - cfg.lo;
        let r = inv_golden_ratio();
        let mut k = 0;
        gss_observed(
            |x| (x - 0.7).abs(),
            &cfg,
            |lo, up| {
                let expected = width0 * r.powi(k);
                assert!(((up - lo) - expected).abs() <= 1e-12 * expected.max(1e-300) + 1e-14 * width0);
                k += 1;
            },
        )
        .unwrap();
        assert!(k > 30);
    }

    #[test]
    fn iterative_matches_recursive_form() {
        let fns: [fn(f64) -> f64; 3] = [|x| (x - 0.3).powi(2), |x| x.cos(), |x| (x * 3.0).sin() + 0.1 * x];
        for f in fns {
            for &(lo, up, tol) in &[(-6.0, 6.0, 0.01), (-1.0, 2.0, 1e-8), (0.0, 0.5, 0.6)] {
                let a = gss(f, &GssConfig::new(lo, up, tol)).unwrap().x;
                let b = recursive_gss(&f, lo, up, tol);
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn ties_keep_the_upper_part() {
        let out = gss(|_| 1.0, &GssConfig::new(0.0, 1.0, 0.1)).unwrap();
        assert!(out.x > 0.5);
    }

    #[test]
    fn invalid_configs() {
        assert!(gss(|x| x, &GssConfig::new(1.0, 0.0, 0.1)).is_err());
        assert!(gss(|x| x, &GssConfig::new(0.0, 1.0, 0.0)).is_err());
        assert!(gss(|x| x, &GssConfig::new(f64::NAN, 1.0, 0.1)).is_err());
        let cfg = GssConfig {
            max_iter: 5,
            ..GssConfig::new(0.0, 1.0, 1e-9)
        };
        assert_eq!(gss(|x| x, &cfg), Err(Error::IterationLimit(5)));
    }

    #[test]
    fn non_finite_objective_still_terminates() {
        let out = gss(|_| f64::NAN, &GssConfig::default()).unwrap();
        assert_eq!(out.reductions, 15);
    }

    fn fam(pts: &[(f64, f64)]) -> SplineFamily {
        SplineFamily::new(pts.iter().copied().map(Vec2::from).collect(), false).unwrap()
    }

    #[test]
    fn objective_values_on_a_line() {
        let line = fam(&[(0.0, 0.0), (1.0, 0.0), (3.0, 0.0), (3.5, 0.0)]);
        assert_eq!(objective_value(&line, 0.0, Objective::Length, 1.0), 3.5);
        assert_eq!(objective_value(&line, 0.0, Objective::Area, 1.0), 0.0);
        assert_eq!(objective_value(&line, 0.0, Objective::Energy, 1.0), 0.0);
        assert_eq!(objective_value(&line, 0.1, Objective::Energy, 0.0), f64::INFINITY);
    }

    #[test]
    fn objective_value_at_a_corner() {
        let corner = fam(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0)]);
        let theta1 = -FRAC_PI_4 + 2.0 * FRAC_PI_2;
        assert!((theta1 - 0.75 * PI).abs() < 1e-15);
        // hand evaluation of u c θ / (2 sin(θ/2)) for both arcs
        let by_hand = (FRAC_PI_4 / 2.0) / (FRAC_PI_4 / 2.0).sin() + (theta1 / 2.0) / (theta1 / 2.0).sin();
        let got = objective_value(&corner, FRAC_PI_4, Objective::Length, 1.0);
        assert!((got - by_hand).abs() < 1e-14);
    }

    #[test]
    fn out_of_range_theta0_is_normalized() {
        let corner = fam(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0)]);
        let a = objective_value(&corner, 0.3, Objective::Energy, 1.0);
        let b = objective_value(&corner, 0.3 + 4.0 * PI, Objective::Energy, 1.0);
        assert!((a - b).abs() < 1e-12);
        assert_eq!(
            objective_value(&corner, 2.0 * PI, Objective::Length, 1.0),
            f64::INFINITY
        );
    }

    #[test]
    fn smoothing_a_line_keeps_it_straight() {
        let line = fam(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (4.0, 0.0)]);
        let cfg = GssConfig::default();
        for obj in Objective::ALL {
            let s = smooth(&line, obj, &cfg, 1.0).unwrap();
            assert!(s.theta0.abs() <= cfg.tol, "{obj}: {}", s.theta0);
            assert_eq!(s.spline, line.propagate(s.theta0).unwrap());
            assert!((s.metrics.length - 4.0) < 1e-3);
        }
    }

    #[test]
    fn scan_off_is_the_plain_search() {
        let corner = fam(&[(0.0, 0.0), (2.0, 1.0), (3.0, -1.0), (5.0, 0.5)]);
        let cfg = GssConfig {
            scan_step: 0.0,
            ..GssConfig::default()
        };
        for obj in Objective::ALL {
            let s = smooth(&corner, obj, &cfg, 1.0).unwrap();
            let plain = gss(|t| objective_value(&corner, t, obj, 1.0), &cfg).unwrap();
            assert_eq!(s.theta0, complement(plain.x));
            assert_eq!(s.evaluations, plain.evaluations);
        }
    }

    #[test]
    fn scan_never_does_worse() {
        let zig = fam(&[(0.0, 0.0), (1.0, 0.3), (1.2, 1.5), (2.5, 1.0), (2.0, -0.5)]);
        for obj in Objective::ALL {
            let f = |t| objective_value(&zig, t, obj, 1.0);
            let with = smooth(&zig, obj, &GssConfig::default(), 1.0).unwrap();
            let plain = gss(f, &GssConfig::default()).unwrap();
            assert!(f(with.theta0) <= f(plain.x), "{obj}");
            assert_eq!(with.reductions, 15);
        }
    }

    #[test]
    fn scan_escapes_a_side_basin() {
        // the search over the whole bracket settles in the shallow right basin
        let f = |x: f64| {
            if x < -2.0 {
                (x + 3.0).powi(2) - 1.0
            } else {
                (x - 1.0).powi(2) * 0.01
            }
        };
        let cfg = GssConfig::new(-4.0, 4.0, 0.01).with_scan(0.01);
        assert!((gss(f, &cfg).unwrap().x - 1.0).abs() < 0.01);
        let picked = scanned_gss(f, &cfg).unwrap();
        assert!((picked.x + 3.0).abs() < 0.01);
        assert_eq!(picked.reductions, gss(f, &cfg).unwrap().reductions);
    }

    #[test]
    fn tent_energy_matches_a_fine_scan() {
        let tent = fam(&[(0.0, 0.0), (1.0, 1.0), (2.0, 0.0)]);
        let cfg = GssConfig::default();
        let best = smooth(&tent, Objective::Energy, &cfg, 1.0).unwrap();
        let f = |t| objective_value(&tent, t, Objective::Energy, 1.0);
        let (mut arg, mut min) = (0.0, f64::INFINITY);
        for k in -35_999..36_000 {
            let t = (k as f64 * 0.01).to_radians();
            if f(t) < min {
                (arg, min) = (t, f(t));
            }
        }
        assert!((best.theta0 - arg).abs() <= cfg.tol, "{} vs {}", best.theta0, arg);
        assert!(f(best.theta0) <= min + 1e-9);
        // mirror symmetry: both arcs bend equally
        let th = best.spline.thetas();
        assert!((th[0] - th[1]).abs() < 1e-5, "{th:?}");
    }

    #[test]
    fn objective_names() {
        for obj in Objective::ALL {
            assert_eq!(obj.as_str().parse::<Objective>().unwrap(), obj);
        }
        assert_eq!("ENERGY".parse::<Objective>().unwrap(), Objective::Energy);
        assert!("curvature".parse::<Objective>().is_err());
    }
}
