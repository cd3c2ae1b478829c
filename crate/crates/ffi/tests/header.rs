use std::path::Path;
use std::process::Command;

fn compile(compiler: &str, extra: &[&str]) -> Option<std::process::Output> {
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let source = root.join("tests/c/uses_header.c");
    Command::new(compiler)
        .args(extra)
        .args(["-fsyntax-only", "-Wall", "-Wextra", "-Werror", "-I"])
        .arg(root.join("include"))
        .arg(&source)
        .output()
        .ok()
}

#[test]
fn header_is_generated() {
    let header = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/arcspline.h")).unwrap();
    for name in [
        "typedef struct ArcsplinePolyarc ArcsplinePolyarc;",
        "typedef struct ArcsplineFamily ArcsplineFamily;",
        "ARCSPLINE_STATUS_FULL_CIRCLE = 5",
        "arcspline_family_smooth(",
        "arcspline_last_error_message(void)",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}

#[test]
fn header_compiles_as_c_and_cpp() {
    for (compiler, extra) in [("cc", &["-std=c99"][..]), ("c++", &["-x", "c++", "-std=c++11"][..])] {
        let Some(out) = compile(compiler, extra) else {
            eprintln!("{compiler} not available, skipping");
            continue;
        };
        assert!(
            out.status.success(),
            "{compiler}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}
