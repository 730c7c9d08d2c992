//! Golden-file cases shared by the determinism test and the acceptance suite.

use std::path::PathBuf;

use starconf_cli::run;

pub const CASES: &[(&str, &str)] = &[
    ("skeleton_7_3.json", "skeleton --s 7 --c 3 --format json"),
    ("skeleton_4_2.txt", "skeleton --s 4 --c 2 --n 2"),
    ("symbolic_4_2_3.txt", "symbolic --s 4 --c 2 --l 3"),
    (
        "symbolic_5_3_2.json",
        "symbolic --s 5 --c 3 --l 2 --format json",
    ),
    ("hvector_7_3_2.txt", "hvector --s 7 --c 3 --l 2"),
    ("betti_7_3.txt", "betti --s 7 --c 3"),
    ("betti_5_2.json", "betti --s 5 --c 2 --format json"),
    ("hb_4_2.txt", "hb --s 4 --m 2"),
    ("hb_4_3.json", "hb --s 4 --m 3 --format json"),
    ("decomp_4_2_2.txt", "decomp --s 4 --c 2 --l 2"),
    (
        "decomp_5_3_2.json",
        "decomp --s 5 --c 3 --l 2 --format json",
    ),
    (
        "containment_4_2_3_2.txt",
        "containment --s 4 --c 2 --m 3 --r 2",
    ),
    (
        "containment_4_2_4_3.json",
        "containment --s 4 --c 2 --m 4 --r 3 --format json",
    ),
    ("scan_4_2.txt", "scan --s 4 --c 2 --mmax 20 --rmax 8"),
    (
        "scan_4_2.csv",
        "scan --s 4 --c 2 --mmax 20 --rmax 8 --format csv",
    ),
    (
        "scan_4_3.json",
        "scan --s 4 --c 3 --mmax 8 --rmax 4 --format json",
    ),
    ("matroid_6_3.txt", "matroid --s 6 --c 3"),
    ("wk_4_2.txt", "wk --s 4 --l 2"),
    ("wk_5_1.json", "wk --s 5 --l 1 --format json"),
    ("export_m2_4_2_2.m2", "export --s 4 --c 2 --l 2 --target m2"),
    (
        "export_singular_4_2_2.sing",
        "export --s 4 --c 2 --l 2 --target singular --forms 1,0,0;0,1,0;0,0,1;1,2/3,-5",
    ),
    ("export_m2_2_1_1.m2", "export --s 2 --c 1 --l 1 --target m2"),
    (
        "error_usage.json",
        "symbolic --s 4 --c 4 --l 1 --format json",
    ),
    (
        "error_resource.json",
        "containment --s 4 --c 2 --m 12 --r 10 --format json",
    ),
    ("error_csv.txt", "skeleton --s 4 --c 2 --format csv"),
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
}

pub fn render(args: &str, threads: usize) -> String {
    let mut argv = vec!["starconf".to_string()];
    argv.extend(args.split(' ').map(String::from));
    argv.push("--threads".into());
    argv.push(threads.to_string());
    let out = run(argv);
    format!(
        "exit: {}\n--- stdout\n{}--- stderr\n{}",
        out.code, out.stdout, out.stderr
    )
}

/// Compare every case, at one and at four threads, against its stored file.
/// With `update` set the files are rewritten instead.
pub fn check_golden(update: bool) -> Vec<String> {
    let mut failures = Vec::new();
    for (file, args) in CASES {
        let one = render(args, 1);
        let four = render(args, 4);
        if one != four {
            failures.push(format!("{args}: output depends on the thread count"));
            continue;
        }
        let path = golden_dir().join(file);
        if update {
            std::fs::write(&path, &one).unwrap();
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(want) if want == one => {}
            Ok(want) => failures.push(format!("{args}\n--- want\n{want}\n--- got\n{one}")),
            Err(e) => failures.push(format!(
                "{}: {e} (run with UPDATE_GOLDEN=1)",
                path.display()
            )),
        }
    }
    failures
}
