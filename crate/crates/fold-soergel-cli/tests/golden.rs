//! Golden JSON files for generator images under the evaluation functor.
//!
//! Regenerate with `UPDATE_GOLDEN=1 cargo test -p fold-soergel-cli --test golden`.

use std::path::PathBuf;

use fold_soergel::foldcat::{parse_expr, Evaluator};
use fold_soergel_cli::morphism_json::SumMorJson;

const CASES: &[(&str, &str)] = &[
    ("dotu_o", "dot_orange"),
    ("dotu_g", "dot_green"),
    ("dotu_b", "dot_brown"),
    ("merge_ggg", "merge_green"),
    ("merge_bbb", "merge_brown"),
    ("cap_b", "cap_brown"),
];

fn path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{}.json", name))
}

#[test]
fn generator_images_match_golden_files() {
    let ev = Evaluator::new();
    for (expr, name) in CASES {
        let m = ev.eval(&parse_expr(expr).unwrap()).unwrap();
        let j = SumMorJson::from_sum(&m.map);
        let text = serde_json::to_string_pretty(&j).unwrap() + "\n";
        if std::env::var_os("UPDATE_GOLDEN").is_some() {
            std::fs::write(path(name), &text).unwrap();
            continue;
        }
        let golden = std::fs::read_to_string(path(name)).unwrap();
        assert_eq!(text, golden, "{}", name);
        let back: SumMorJson = serde_json::from_str(&golden).unwrap();
        assert_eq!(back.to_sum().unwrap(), m.map, "{}", name);
    }
}
