//! Compiles the shipped C demo against the built shared library and runs
//! it, proving the ABI works from real C rather than only from Rust.

use std::path::PathBuf;
use std::process::Command;

fn lib_dir() -> PathBuf {
    // test executables live in target/<profile>/deps
    let exe = std::env::current_exe().expect("test exe path");
    exe.parent()
        .and_then(|deps| deps.parent())
        .expect("target profile dir")
        .to_path_buf()
}

#[test]
fn c_demo_compiles_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let include = manifest.join("include");
    let demo = manifest.join("examples").join("demo.c");
    let libs = lib_dir();
    assert!(
        libs.join("libholorect_ffi.so").exists() || libs.join("libholorect_ffi.a").exists(),
        "library artifacts missing in {}",
        libs.display()
    );

    let work = std::env::temp_dir().join("holorect_c_demo");
    std::fs::create_dir_all(&work).unwrap();
    let binary = work.join("demo");

    let compile = Command::new("cc")
        .arg(&demo)
        .arg(format!("-I{}", include.display()))
        .arg(format!("-L{}", libs.display()))
        .args(["-lholorect_ffi", "-lm", "-std=c99", "-Wall", "-Werror", "-o"])
        .arg(&binary)
        .output()
        .expect("cc runs");
    assert!(
        compile.status.success(),
        "compilation failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&binary)
        .env("LD_LIBRARY_PATH", &libs)
        .output()
        .expect("demo runs");
    let stdout = String::from_utf8_lossy(&run.stdout);
    assert_eq!(
        run.status.code(),
        Some(0),
        "demo exited nonzero; stdout:\n{stdout}\nstderr:\n{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert!(stdout.contains("preimages of 0 under z^2-1 = 2"), "{stdout}");
    std::fs::remove_dir_all(&work).ok();
}
