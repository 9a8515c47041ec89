//! Invocations shared by the golden-file suite and the acceptance suite.

use std::path::PathBuf;
use std::process::Command;

/// `(golden file, arguments, expected exit code)`, run from the fixtures directory.
pub const CASES: &[(&str, &[&str], i32)] = &[
    ("check_m3", &["check", "m3.poset"], 1),
    ("check_b2", &["check", "b2.poset"], 0),
    ("check_p6", &["check", "p6.poset"], 1),
    ("check_cycle", &["check", "cycle.poset"], 2),
    ("idl_b2_2", &["idl", "b2.poset", "--arity", "2"], 0),
    ("idl_p6_3", &["idl", "p6.poset", "--arity", "3"], 1),
    ("points_b2", &["points", "b2.poset"], 0),
    ("points_m3", &["points", "m3.poset"], 2),
    ("space_c3", &["space", "c3.poset"], 0),
    ("dual_b2", &["dual", "b2.poset"], 0),
    ("dim_c3", &["dim", "c3.poset"], 0),
    ("refine_chain", &["refine", "c3_c3.frmmap", "c3_b2.frmmap"], 0),
    ("ttg_rad", &["ttg", "subs2.ttg", "rad"], 0),
    ("ttg_rad_2", &["ttg", "subs2.ttg", "rad", "--arity", "2"], 0),
    ("ttg_frame", &["ttg", "subs2.ttg", "frame"], 0),
    ("ttg_spc", &["ttg", "subs2.ttg", "spc"], 0),
    ("ttg_support", &["ttg", "subs2.ttg", "support", "subs2_b2.support"], 0),
    ("ttg_support_top", &["ttg", "subs2.ttg", "support", "subs2_top.support"], 1),
    ("ttg_quotient", &["ttg", "subs2.ttg", "quotient", "1"], 0),
    ("ttg_extres", &["ttg", "subs2.ttg", "extres", "--sub", "0,1,12", "--arity", "3", "--to", "omega"], 0),
    ("render_c3", &["render", "c3.poset", "--dot"], 0),
    ("render_c3_spectrum", &["render", "c3.poset", "--dot", "--spectrum"], 0),
    ("render_sierpinski", &["render", "sierpinski.space", "--dot"], 0),
    ("render_subs2", &["render", "subs2.ttg", "--dot"], 0),
    ("search_bijpoints", &["search", "bijpoints", "--count", "25"], 0),
    ("search_tensor", &["search", "tensor", "--count", "10", "--seed", "7"], 0),
];

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn run(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_framekit"))
        .args(args)
        .current_dir(crate_dir().join("tests/fixtures"))
        .output()
        .expect("binary runs");
    (String::from_utf8(out.stdout).expect("utf-8 output"), out.status.code().expect("exit code"))
}

