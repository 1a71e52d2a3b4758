mod support;

use support::golden;

#[test]
fn corpus_matches_golden_files() {
    let failed: Vec<String> =
        golden::check_all().into_iter().filter_map(|(n, r)| r.err().map(|e| format!("{n}: {e}"))).collect();
    assert!(failed.is_empty(), "{}", failed.join("\n"));
}

#[test]
fn exit_codes_follow_the_contract() {
    for case in golden::cases() {
        let code = golden::exit_code(&golden::run(&case)).expect("exit line");
        let want = match case.name.as_str() {
            "jet-not-invertible" | "dominance-zero-constant" => 1,
            "double-root.dominance" | "irrational-tie.dominance" | "bivariate-witness.spectrum" => 2,
            _ => 0,
        };
        assert_eq!(code, want, "{}", case.name);
    }
}
