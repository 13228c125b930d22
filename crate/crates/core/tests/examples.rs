use std::path::PathBuf;
use std::process::Command;

fn example(name: &str) -> PathBuf {
    let deps = std::env::current_exe().unwrap();
    let dir = deps.parent().unwrap().parent().unwrap().join("examples");
    dir.join(format!("{name}{}", std::env::consts::EXE_SUFFIX))
}

fn run(name: &str, args: &[&str]) -> String {
    let path = example(name);
    if !path.exists() {
        let cargo = std::env::var("CARGO").unwrap_or_else(|_| "cargo".into());
        let status = Command::new(cargo)
            .args(["build", "--examples", "-p", "a6-hurwitz"])
            .status()
            .unwrap();
        assert!(status.success(), "building examples failed");
    }
    let out = Command::new(&path)
        .args(args)
        .output()
        .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn examples_run() {
    assert_eq!(run("class_list", &[]).lines().count(), 46);
    assert!(run("lifting", &[]).contains("k = 6: exponents {0, 1, 2}"));
    assert!(run("braid_orbit", &["abs"]).contains("orbit of 432 states"));
    assert!(run("classify", &["6", "abs"]).contains("orbits=2"));
    assert!(run("five_points", &[]).contains("[1] order  60"));
    assert!(run("reductions", &[]).contains("lifted moves"));
    assert!(!run("parity_bridges", &[]).contains("FAIL"));
    assert!(run("subgroup_lattice", &[]).contains("max chain length 5"));
    assert!(run("nielsen_counts", &[]).contains("311040"));
    assert!(!run("reproduce", &["b5", "b9"]).contains("FAIL"));
}
