//! File formats: JSON polyarc documents and SVG drawings.

pub mod json;
pub mod svg;

pub use json::{
    emit_document, emit_polyarc, format_number, parse_document, parse_polyarc, AngleUnit, ParseOptions, PolyarcDocument,
};
pub use svg::{render_svg, render_svg_many, RenderOptions};
