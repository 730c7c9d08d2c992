//! Every case is run with one and with four worker threads; both must match
//! the stored file byte for byte. `UPDATE_GOLDEN=1` rewrites the files.

mod common;

use common::{check_golden, render, CASES};

#[test]
fn outputs_match_golden_files_for_any_thread_count() {
    let failures = check_golden(std::env::var_os("UPDATE_GOLDEN").is_some());
    assert!(failures.is_empty(), "{}", failures.join("\n\n"));
}

#[test]
fn repeated_runs_are_identical() {
    for (_, args) in CASES.iter().take(6) {
        assert_eq!(render(args, 2), render(args, 2));
    }
}
