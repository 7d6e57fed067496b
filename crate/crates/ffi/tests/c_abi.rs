//! Compiles and runs the C smoke test against the generated header and the
//! cdylib, proving the ABI works for an actual C consumer. Skips (with a
//! note) when no C compiler or shared library is available.

use std::path::{Path, PathBuf};
use std::process::Command;

fn find_cc() -> Option<String> {
    for cc in ["cc", "gcc", "clang"] {
        if Command::new(cc)
            .arg("--version")
            .output()
            .is_ok_and(|o| o.status.success())
        {
            return Some(cc.to_string());
        }
    }
    None
}

fn target_dir() -> PathBuf {
    // target/debug/deps/<test-bin> -> target/debug
    let exe = std::env::current_exe().expect("test binary path");
    exe.parent()
        .and_then(Path::parent)
        .expect("target profile dir")
        .to_path_buf()
}

#[test]
fn c_program_links_and_runs() {
    let Some(cc) = find_cc() else {
        eprintln!("skipping: no C compiler found");
        return;
    };
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let target = target_dir();
    let dylib = target.join("libmckay_ffi.so");
    if !dylib.exists() {
        eprintln!("skipping: {} not built", dylib.display());
        return;
    }

    let out_dir = std::env::temp_dir().join(format!("mckay-cabi-{}", std::process::id()));
    std::fs::create_dir_all(&out_dir).unwrap();
    let exe = out_dir.join("smoke");

    let compile = Command::new(&cc)
        .arg(manifest.join("ctest/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg("-L")
        .arg(&target)
        .arg("-lmckay_ffi")
        .arg(format!("-Wl,-rpath,{}", target.display()))
        .arg("-o")
        .arg(&exe)
        .output()
        .expect("compiler runs");
    assert!(
        compile.status.success(),
        "compile failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&exe).output().expect("smoke test runs");
    assert!(
        run.status.success(),
        "smoke test failed:\nstdout: {}\nstderr: {}",
        String::from_utf8_lossy(&run.stdout),
        String::from_utf8_lossy(&run.stderr)
    );
    assert!(String::from_utf8_lossy(&run.stdout).contains("passed"));
    std::fs::remove_dir_all(&out_dir).ok();
}
