#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

use gacode_core::algorithms::{bell, ghz, hadamard_state, Bell};
use gacode_core::{render, Algebra, Comb, Multivector};

pub fn gacode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gacode")).args(args).output().expect("binary runs")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

/// `5 + 1.5 b1 - b2 + b1 b4 + 3 b5 b6 + 2 b1 b4 b5`
pub fn mixed_grades() -> Multivector {
    let a = Algebra::real(6).unwrap();
    Multivector::from_terms(
        a,
        [
            (Comb::UNIT, 5.0),
            (Comb::from_positions(&[1]), 1.5),
            (Comb::from_positions(&[2]), -1.0),
            (Comb::from_positions(&[1, 4]), 1.0),
            (Comb::from_positions(&[5, 6]), 3.0),
            (Comb::from_positions(&[1, 4, 5]), 2.0),
        ],
    )
    .unwrap()
}

/// Named scenes with frozen SVG goldens.
pub fn scenes() -> Vec<(&'static str, Multivector)> {
    let names = ["bell_psi_plus", "bell_psi_minus", "bell_phi_plus", "bell_phi_minus"];
    let mut out: Vec<(&'static str, Multivector)> = names.into_iter().zip(Bell::ALL.map(bell)).collect();
    out.push(("ghz", ghz()));
    out.push(("mixed_grades", mixed_grades()));
    out.push(("hadamard_3", hadamard_state(3).unwrap()));
    out
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.svg"))
}

pub fn svg(m: &Multivector) -> String {
    render::emit_svg(&render::layout(m).unwrap())
}

/// Compares against the golden file, rewriting it when `GACODE_BLESS` is set.
pub fn matches_golden(name: &str, actual: &str) -> bool {
    let path = golden_path(name);
    if std::env::var_os("GACODE_BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    std::fs::read_to_string(&path).map(|g| g == actual).unwrap_or(false)
}
