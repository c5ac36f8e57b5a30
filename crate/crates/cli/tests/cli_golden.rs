//! Byte-exact golden tests for the CLI: identical flags must produce
//! identical output, and the frozen outputs carry the published table
//! prefixes.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

fn assert_golden(golden_name: &str, args: &[&str]) {
    let exe = env!("CARGO_BIN_EXE_hypercat");
    let golden_path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(golden_name);
    let output = Command::new(exe)
        .args(args)
        .output()
        .expect("failed to spawn binary");
    assert!(
        output.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&output.stderr)
    );
    let expected = fs::read(&golden_path)
        .unwrap_or_else(|_| panic!("missing golden file {}", golden_path.display()));
    assert_eq!(
        output.stdout, expected,
        "stdout for {:?} does not match {}",
        args, golden_name
    );
}

#[test]
fn seq_slices_match_goldens() {
    assert_golden("seq_slice_n_1.txt", &["seq", "n,1", "--count", "10"]);
    assert_golden("seq_slice_1_n.txt", &["seq", "1,n", "--count", "9"]);
    assert_golden("seq_slice_n_2.txt", &["seq", "n,2", "--count", "9"]);
    assert_golden("seq_slice_1_0_n.txt", &["seq", "1,0,n", "--count", "8"]);
    assert_golden("seq_slice_0_1_n.txt", &["seq", "0,1,n", "--count", "8"]);
    assert_golden("seq_slice_n_0_1.txt", &["seq", "n,0,1", "--count", "10"]);
    assert_golden("seq_slice_0_0_1_n.txt", &["seq", "0,0,1,n", "--count", "8"]);
}

#[test]
fn seq_projections_match_goldens() {
    assert_golden(
        "seq_little_schroeder_g.txt",
        &["seq", "little-schroeder", "--count", "8"],
    );
    assert_golden("seq_riordan_g.txt", &["seq", "riordan", "--count", "10"]);
    assert_golden("seq_cayley_g.txt", &["seq", "cayley", "--count", "8"]);
    assert_golden(
        "seq_little_schroeder_s.txt",
        &[
            "seq",
            "little-schroeder",
            "--count",
            "8",
            "--target",
            "s",
            "--format",
            "json",
        ],
    );
}

#[test]
fn series_builds_match_goldens() {
    assert_golden(
        "series_g_f3_k4.txt",
        &[
            "series", "build", "--faces", "3", "--gons", "4", "--which", "g",
        ],
    );
    assert_golden(
        "series_s_face_layers.txt",
        &[
            "series", "build", "--faces", "2", "--gons", "4", "--which", "s", "--layer", "face",
        ],
    );
    assert_golden(
        "series_h_vertex_layers.txt",
        &[
            "series", "build", "--faces", "4", "--gons", "5", "--which", "h", "--layer", "vertex",
        ],
    );
}

#[test]
fn expansion_and_values_match_goldens() {
    assert_golden(
        "geode_expand_111_x2.txt",
        &["geode", "expand", "1,1,1", "--x", "2"],
    );
    assert_golden(
        "geode_expand_111_x2_json.txt",
        &["geode", "expand", "1,1,1", "--x", "2", "--format", "json"],
    );
    assert_golden("hc_11_json.txt", &["hc", "1,1", "--format", "json"]);
}

#[test]
fn solve_output_matches_golden() {
    assert_golden(
        "solve_c2_02_l8.txt",
        &["solve", "--coeffs", "0.2", "--levels", "8"],
    );
}

#[test]
fn cross_route_flags_agree() {
    let exe = env!("CARGO_BIN_EXE_hypercat");
    for via in ["closed", "recurrence", "enumeration"] {
        let output = Command::new(exe)
            .args(["hc", "2,1", "--via", via])
            .output()
            .expect("binary runs");
        assert_eq!(String::from_utf8_lossy(&output.stdout), "21\n", "via {via}");
    }
    for via in ["recurrence", "division", "closed"] {
        let output = Command::new(exe)
            .args(["geode", "value", "1,0,1", "--via", via])
            .output()
            .expect("binary runs");
        assert_eq!(String::from_utf8_lossy(&output.stdout), "23\n", "via {via}");
    }
}

#[test]
fn exit_codes_follow_the_contract() {
    let exe = env!("CARGO_BIN_EXE_hypercat");
    // success
    let ok = Command::new(exe).args(["hc", "1,1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    // verification pass
    let verify = Command::new(exe)
        .args(["verify", "convolution", "--max-m", "5"])
        .output()
        .unwrap();
    assert_eq!(verify.status.code(), Some(0));
    // usage errors
    let bad_type = Command::new(exe).args(["hc", "oops"]).output().unwrap();
    assert_eq!(bad_type.status.code(), Some(2));
    let bad_flag = Command::new(exe)
        .args(["hc", "1,1", "--via", "psychic"])
        .output()
        .unwrap();
    assert_eq!(bad_flag.status.code(), Some(2));
    let no_args = Command::new(exe).output().unwrap();
    assert_eq!(no_args.status.code(), Some(2));
}
