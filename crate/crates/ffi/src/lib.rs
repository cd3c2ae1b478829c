//! C ABI for `arcspline`.
//!
//! Curves and spline families are opaque handles created by `*_new` style
//! functions and released with the matching `*_free`. Every fallible call
//! returns an [`ArcsplineStatus`]; on failure a description is available from
//! [`arcspline_last_error_message`] on the same thread. Strings returned by
//! the library are owned by the caller and must be released with
//! [`arcspline_string_free`]. Angles are in radians throughout.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{self, AssertUnwindSafe};
use std::ptr;

use arcspline::io::{emit_polyarc, parse_polyarc, render_svg, AngleUnit, RenderOptions};
use arcspline::{arc, smooth, Error, GssConfig, Objective, Polyarc, SplineFamily, Vec2};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcsplineStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Malformed argument: bad counts, non-finite values, invalid UTF-8,
    /// an inconsistent curve or search configuration.
    InvalidArgument = 2,
    /// A geometric precondition failed (angle range, zero chord, ...).
    Domain = 3,
    /// The JSON text could not be parsed or does not describe a polyarc.
    Parse = 4,
    /// Angle propagation produced a full-circle arc.
    FullCircle = 5,
    /// The golden-section search hit its iteration limit.
    IterationLimit = 6,
    /// Internal error; the library caught a panic.
    Internal = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArcsplineVec2 {
    pub x: f64,
    pub y: f64,
}

impl From<ArcsplineVec2> for Vec2 {
    fn from(v: ArcsplineVec2) -> Vec2 {
        Vec2::new(v.x, v.y)
    }
}

impl From<Vec2> for ArcsplineVec2 {
    fn from(v: Vec2) -> ArcsplineVec2 {
        ArcsplineVec2 { x: v.x, y: v.y }
    }
}

/// Length, summed absolute segment area and bending energy of a curve.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ArcsplineMetrics {
    pub length: f64,
    pub area: f64,
    pub energy: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcsplineObjective {
    Length = 0,
    Area = 1,
    Energy = 2,
}

/// Fairing search settings; see [`arcspline_search_default`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArcsplineSearch {
    pub lo: f64,
    pub up: f64,
    pub tol: f64,
    pub max_iter: usize,
    /// Grid spacing of the global scan, 0 for the plain search.
    pub scan_step: f64,
    /// Tolerance of the refinement after the scan, 0 to reuse `tol`.
    pub refine_tol: f64,
}

/// Opaque polyarc handle.
pub struct ArcsplinePolyarc(Polyarc);

/// Opaque spline family handle.
pub struct ArcsplineFamily(SplineFamily);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(ArcsplineStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure(status_of(&e), e.to_string())
    }
}

fn status_of(e: &Error) -> ArcsplineStatus {
    match e {
        Error::AngleOutOfRange(_)
        | Error::ZeroAngle
        | Error::DegenerateChord(_)
        | Error::NoCircle { .. }
        | Error::ParameterOutOfRange(_)
        | Error::ZeroVector
        | Error::NonPositiveRigidity(_) => ArcsplineStatus::Domain,
        Error::Segment { source, .. } => status_of(source),
        Error::FullCircle(_) => ArcsplineStatus::FullCircle,
        Error::IterationLimit(_) => ArcsplineStatus::IterationLimit,
        Error::Parse { .. } | Error::Schema(_) | Error::Validation { .. } => ArcsplineStatus::Parse,
        Error::InvalidPolyarc(_) | Error::InvalidArgument(_) | Error::InvalidConfig(_) => {
            ArcsplineStatus::InvalidArgument
        }
    }
}

fn null(name: &str) -> Failure {
    Failure(ArcsplineStatus::NullPointer, format!("{name} is null"))
}

/// Runs `body`, converting errors and panics into a status code.
fn guard<F: FnOnce() -> Result<(), Failure>>(body: F) -> ArcsplineStatus {
    match panic::catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => ArcsplineStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal error".to_owned());
            ArcsplineStatus::Internal
        }
    }
}

unsafe fn out_ref<'a, T>(p: *mut T, name: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null(name))
}

unsafe fn handle<'a, T>(p: *const T, name: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(name))
}

unsafe fn slice<'a, T>(p: *const T, len: usize, name: &str) -> Result<&'a [T], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(name));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

fn to_c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure(ArcsplineStatus::Internal, "string contains a NUL byte".into()))
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn arcspline_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn arcspline_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn arcspline_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Signed radius of the arc with chord length `c_len` and angle `theta`.
#[no_mangle]
pub unsafe extern "C" fn arcspline_arc_radius(c_len: f64, theta: f64, out: *mut f64) -> ArcsplineStatus {
    guard(|| {
        *out_ref(out, "out")? = arc::radius(c_len, theta)?;
        Ok(())
    })
}

/// Length of the arc from its start to parameter `u` in `[0, 1]`.
#[no_mangle]
pub unsafe extern "C" fn arcspline_arc_length(c_len: f64, theta: f64, u: f64, out: *mut f64) -> ArcsplineStatus {
    guard(|| {
        *out_ref(out, "out")? = arc::arc_length(c_len, theta, u)?;
        Ok(())
    })
}

/// Signed area between arc and chord, positive for `theta > 0`.
#[no_mangle]
pub unsafe extern "C" fn arcspline_arc_segment_area(c_len: f64, theta: f64, out: *mut f64) -> ArcsplineStatus {
    guard(|| {
        *out_ref(out, "out")? = arc::segment_area(c_len, theta)?;
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn arcspline_arc_bending_energy(
    c_len: f64,
    theta: f64,
    ei: f64,
    out: *mut f64,
) -> ArcsplineStatus {
    guard(|| {
        *out_ref(out, "out")? = arc::bending_energy(c_len, theta, ei)?;
        Ok(())
    })
}

/// Point at parameter `u`, relative to the arc's start point.
#[no_mangle]
pub unsafe extern "C" fn arcspline_arc_point_at(
    chord: ArcsplineVec2,
    theta: f64,
    u: f64,
    out: *mut ArcsplineVec2,
) -> ArcsplineStatus {
    guard(|| {
        *out_ref(out, "out")? = arc::point_at(chord.into(), theta, u)?.into();
        Ok(())
    })
}

/// Vector from the arc's center to its start point.
#[no_mangle]
pub unsafe extern "C" fn arcspline_arc_center_offset(
    chord: ArcsplineVec2,
    theta: f64,
    out: *mut ArcsplineVec2,
) -> ArcsplineStatus {
    guard(|| {
        *out_ref(out, "out")? = arc::center_offset(chord.into(), theta)?.into();
        Ok(())
    })
}

/// Builds a polyarc from `vertex_count` vertices and one angle per segment
/// (`vertex_count - 1` for open curves, `vertex_count` for closed ones).
#[no_mangle]
pub unsafe extern "C" fn arcspline_polyarc_new(
    vertices: *const ArcsplineVec2,
    vertex_count: usize,
    thetas: *const f64,
    theta_count: usize,
    closed: bool,
    out: *mut *mut ArcsplinePolyarc,
) -> ArcsplineStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let verts = slice(vertices, vertex_count, "vertices")?
            .iter()
            .map(|&v| v.into())
            .collect();
        let thetas = slice(thetas, theta_count, "thetas")?.to_vec();
        let pa = Polyarc::new(verts, thetas, closed)?;
        *out = Box::into_raw(Box::new(ArcsplinePolyarc(pa)));
        Ok(())
    })
}

/// Parses a polyarc JSON document (angles in the document's own unit).
#[no_mangle]
pub unsafe extern "C" fn arcspline_polyarc_from_json(
    json: *const c_char,
    out: *mut *mut ArcsplinePolyarc,
) -> ArcsplineStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        if json.is_null() {
            return Err(null("json"));
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|e| Failure(ArcsplineStatus::InvalidArgument, format!("json is not UTF-8: {e}")))?;
        *out = Box::into_raw(Box::new(ArcsplinePolyarc(parse_polyarc(text)?)));
        Ok(())
    })
}

/// Serializes to JSON; `degrees` selects the angle unit of the document.
#[no_mangle]
pub unsafe extern "C" fn arcspline_polyarc_to_json(
    pa: *const ArcsplinePolyarc,
    degrees: bool,
    out: *mut *mut c_char,
) -> ArcsplineStatus {
    guard(|| {
        let pa = handle(pa, "pa")?;
        let out = out_ref(out, "out")?;
        let unit = if degrees {
            AngleUnit::Degrees
        } else {
            AngleUnit::Radians
        };
        *out = to_c_string(emit_polyarc(&pa.0, unit))?;
        Ok(())
    })
}

/// Renders an SVG document with default styling.
#[no_mangle]
pub unsafe extern "C" fn arcspline_polyarc_to_svg(
    pa: *const ArcsplinePolyarc,
    out: *mut *mut c_char,
) -> ArcsplineStatus {
    guard(|| {
        let pa = handle(pa, "pa")?;
        let out = out_ref(out, "out")?;
        *out = to_c_string(render_svg(&pa.0, &RenderOptions::default())?)?;
        Ok(())
    })
}

/// Releases a polyarc. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn arcspline_polyarc_free(pa: *mut ArcsplinePolyarc) {
    if !pa.is_null() {
        drop(Box::from_raw(pa));
    }
}

#[no_mangle]
pub unsafe extern "C" fn arcspline_polyarc_segment_count(
    pa: *const ArcsplinePolyarc,
    out: *mut usize,
) -> ArcsplineStatus {
    guard(|| {
        *out_ref(out, "out")? = handle(pa, "pa")?.0.segment_count();
        Ok(())
    })
}

/// Copies up to `capacity` segment angles into `buffer` and stores the
/// total number of segments in `count`. `buffer` may be null when
/// `capacity` is 0.
#[no_mangle]
pub unsafe extern "C" fn arcspline_polyarc_thetas(
    pa: *const ArcsplinePolyarc,
    buffer: *mut f64,
    capacity: usize,
    count: *mut usize,
) -> ArcsplineStatus {
    guard(|| {
        let thetas = handle(pa, "pa")?.0.thetas();
        let count = out_ref(count, "count")?;
        if capacity > 0 {
            if buffer.is_null() {
                return Err(null("buffer"));
            }
            let n = capacity.min(thetas.len());
            ptr::copy_nonoverlapping(thetas.as_ptr(), buffer, n);
        }
        *count = thetas.len();
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn arcspline_polyarc_metrics(
    pa: *const ArcsplinePolyarc,
    ei: f64,
    out: *mut ArcsplineMetrics,
) -> ArcsplineStatus {
    guard(|| {
        let m = handle(pa, "pa")?.0.metrics(ei)?;
        *out_ref(out, "out")? = ArcsplineMetrics {
            length: m.length,
            area: m.area,
            energy: m.energy,
        };
        Ok(())
    })
}

/// Signed enclosed area: chord polygon plus signed segment areas.
#[no_mangle]
pub unsafe extern "C" fn arcspline_polyarc_total_area(pa: *const ArcsplinePolyarc, out: *mut f64) -> ArcsplineStatus {
    guard(|| {
        *out_ref(out, "out")? = handle(pa, "pa")?.0.total_area()?;
        Ok(())
    })
}

/// Largest tangent mismatch over interior joins.
#[no_mangle]
pub unsafe extern "C" fn arcspline_polyarc_g1_defect(pa: *const ArcsplinePolyarc, out: *mut f64) -> ArcsplineStatus {
    guard(|| {
        *out_ref(out, "out")? = handle(pa, "pa")?.0.g1_defect()?;
        Ok(())
    })
}

/// Spline family over a polyline.
#[no_mangle]
pub unsafe extern "C" fn arcspline_family_new(
    vertices: *const ArcsplineVec2,
    vertex_count: usize,
    closed: bool,
    out: *mut *mut ArcsplineFamily,
) -> ArcsplineStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let verts = slice(vertices, vertex_count, "vertices")?
            .iter()
            .map(|&v| v.into())
            .collect();
        *out = Box::into_raw(Box::new(ArcsplineFamily(SplineFamily::new(verts, closed)?)));
        Ok(())
    })
}

/// Releases a family. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn arcspline_family_free(family: *mut ArcsplineFamily) {
    if !family.is_null() {
        drop(Box::from_raw(family));
    }
}

/// The family member whose first arc angle is `theta0`.
#[no_mangle]
pub unsafe extern "C" fn arcspline_family_propagate(
    family: *const ArcsplineFamily,
    theta0: f64,
    out: *mut *mut ArcsplinePolyarc,
) -> ArcsplineStatus {
    guard(|| {
        let family = handle(family, "family")?;
        let out = out_ref(out, "out")?;
        *out = Box::into_raw(Box::new(ArcsplinePolyarc(family.0.propagate(theta0)?)));
        Ok(())
    })
}

/// Default search: `[-344°, 344°]`, 0.6° tolerance and scan spacing.
#[no_mangle]
pub extern "C" fn arcspline_search_default() -> ArcsplineSearch {
    let c = GssConfig::default();
    ArcsplineSearch {
        lo: c.lo,
        up: c.up,
        tol: c.tol,
        max_iter: c.max_iter,
        scan_step: c.scan_step,
        refine_tol: c.refine_tol,
    }
}

/// Minimizes `objective`, one of the [`ArcsplineObjective`] values, over
/// the family. Stores the optimal first angle in `theta0` and the spline in
/// `out`; `metrics` may be null.
#[no_mangle]
pub unsafe extern "C" fn arcspline_family_smooth(
    family: *const ArcsplineFamily,
    objective: u32,
    search: *const ArcsplineSearch,
    ei: f64,
    theta0: *mut f64,
    metrics: *mut ArcsplineMetrics,
    out: *mut *mut ArcsplinePolyarc,
) -> ArcsplineStatus {
    guard(|| {
        let family = handle(family, "family")?;
        let s = *handle(search, "search")?;
        let theta0 = out_ref(theta0, "theta0")?;
        let out = out_ref(out, "out")?;
        let obj = match objective {
            o if o == ArcsplineObjective::Length as u32 => Objective::Length,
            o if o == ArcsplineObjective::Area as u32 => Objective::Area,
            o if o == ArcsplineObjective::Energy as u32 => Objective::Energy,
            other => {
                return Err(Failure(
                    ArcsplineStatus::InvalidArgument,
                    format!("unknown objective {other}"),
                ));
            }
        };
        let cfg = GssConfig {
            lo: s.lo,
            up: s.up,
            tol: s.tol,
            max_iter: s.max_iter,
            scan_step: s.scan_step,
            refine_tol: s.refine_tol,
        };
        let best = smooth(&family.0, obj, &cfg, ei)?;
        if let Some(m) = metrics.as_mut() {
            *m = ArcsplineMetrics {
                length: best.metrics.length,
                area: best.metrics.area,
                energy: best.metrics.energy,
            };
        }
        *theta0 = best.theta0;
        *out = Box::into_raw(Box::new(ArcsplinePolyarc(best.spline)));
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_segment_errors_keep_their_status() {
        let e = Error::Segment {
            index: 3,
            source: Box::new(Error::FullCircle(3)),
        };
        assert_eq!(status_of(&e), ArcsplineStatus::FullCircle);
        assert_eq!(status_of(&Error::ZeroAngle), ArcsplineStatus::Domain);
        assert_eq!(status_of(&Error::Schema("x".into())), ArcsplineStatus::Parse);
    }

    #[test]
    fn panics_become_internal_errors() {
        let prev = panic::take_hook();
        panic::set_hook(Box::new(|_| {}));
        let st = guard(|| panic!("boom"));
        panic::set_hook(prev);
        assert_eq!(st, ArcsplineStatus::Internal);
        let msg = unsafe { CStr::from_ptr(arcspline_last_error_message()) };
        assert_eq!(msg.to_str().unwrap(), "internal error");
    }
}
