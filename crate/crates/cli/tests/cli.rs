use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_abtqft")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn first_line(args: &[&str]) -> String {
    stdout(args).lines().next().unwrap_or_default().to_string()
}

fn temp_file(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("abtqft-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.display().to_string()
}

#[test]
fn smith_form_of_small_matrix() {
    assert_eq!(first_line(&["group", "smith", &data("smith.json")]), "D = diag(2,4)");
}

#[test]
fn pullback_of_two_and_three() {
    let out = first_line(&["group", "pullback", &data("times2.json"), &data("times3.json")]);
    assert_eq!(out, "P ≅ Z, gen (3,2)");
}

#[test]
fn identity_is_iso() {
    assert_eq!(first_line(&["group", "iso", &data("id.json")]), "true");
    assert_eq!(first_line(&["group", "iso", &data("times2.json")]), "false");
}

#[test]
fn kernel_from_named_registry() {
    assert_eq!(first_line(&["group", "kernel", &data("klein.json")]), "ker ≅ Z/2, gen 2");
}

#[test]
fn hom_set_can_be_empty() {
    assert_eq!(first_line(&["cat", "hom", &data("times2.json"), "0", "3"]), "empty");
}

#[test]
fn hom_oracle_agrees_on_finite_groups() {
    let out = stdout(&["cat", "hom", &data("klein.json"), "0,0", "1,0", "--oracle"]);
    assert!(out.contains("oracle: agrees (2 elements"), "{out}");
}

#[test]
fn xi_on_the_mod_24_square() {
    let out = first_line(&["cat", "xi", &data("mod24_square.json"), &data("mod24_fill.json")]);
    assert_eq!(out, "equivalence: true; target: ker ≅ Z (gen 24)");
    let own_lambda = first_line(&["cat", "xi", &data("mod24_square.json")]);
    assert_eq!(own_lambda, out);
}

#[test]
fn hofiber_presentation() {
    let out = stdout(&["cat", "hofiber", &data("mod24_square.json")]);
    assert!(out.starts_with("objects ≅ Z^2\n"), "{out}");
    assert!(out.contains("aut(unit) ≅ 0"), "{out}");
}

#[test]
fn finite_square_oracles_agree() {
    let xi = stdout(&["cat", "xi", &data("finite_square.json"), "--oracle"]);
    assert!(xi.contains("oracle: agrees"), "{xi}");
    let h = stdout(&["cat", "hofiber", &data("finite_square.json"), "--oracle"]);
    assert!(h.contains("oracle: agrees (8 objects"), "{h}");
}

#[test]
fn stokes_and_holonomy_on_a_triangle() {
    let s = first_line(&["geo", "stokes", &data("triangle.json"), &data("triangle_form.json")]);
    assert_eq!(s, "boundary=1.83333333333e-1 interior=1.83333333333e-1 gap=0.00000000000e0");
    let h = first_line(&["geo", "holonomy", &data("triangle.json"), &data("triangle_connection.json")]);
    assert!(h.ends_with("defect=0.00000000000e0"), "{h}");
}

#[test]
fn chern_numbers_of_tangent_connections() {
    assert_eq!(first_line(&["geo", "chern", "builtin:icosahedron", "tangent"]), "2");
    assert_eq!(first_line(&["geo", "chern", "builtin:flat-torus:4", "tangent"]), "0");
    assert_eq!(first_line(&["geo", "chern", "builtin:genus-two", "tangent"]), "-2");
}

#[test]
fn chern_simons_near_one() {
    let out = stdout(&["--format", "json", "bnr", "cs", "--refine", "4"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let cs = v["outputs"]["cs"].as_f64().unwrap();
    assert!((cs.abs() - 1.0).abs() < 1e-3, "{cs}");
}

#[test]
fn psi_of_the_generator() {
    let out = first_line(&["bnr", "psi", &data("generator.json")]);
    assert!(out.starts_with("raw=1.0000000"), "{out}");
    assert!(out.contains(" int=1 mod24=1 convention="), "{out}");
}

#[test]
fn certified_psi_after_gluing_k3() {
    let out = stdout(&["bnr", "psi", &data("generator_k3.json"), "--certify"]);
    assert!(out.starts_with("raw=-2.30000000000e1 int=-23 mod24=1 "), "{out}");
    assert!(out.contains("alt component=0 w4=D4#K3#K3 int=-47 diff=-24"), "{out}");
    assert!(out.contains("certified pairs="), "{out}");
}

#[test]
fn su_certificate_has_even_differences() {
    let out = stdout(&["bnr", "su", &data("su_disk.json"), "--certify"]);
    assert!(out.contains(" int=0 mod2=0 convention=tangent-geodesic-boundary"), "{out}");
    assert!(out.contains("alt filling=1 tangent=true int=-2 diff=-2"), "{out}");
}

#[test]
fn shipped_table_validates() {
    assert_eq!(first_line(&["bnr", "table", "validate"]), "checked=8 issues=0");
}

#[test]
fn corrupted_table_fails_with_status_one() {
    let t = temp_file(
        "table.json",
        r#"[{"name":"fake","spin":true,"integral_p1":-24,"signature":-8,"a_hat":"1"}]"#,
    );
    let out = run(&["bnr", "table", "validate", &t]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("not divisible by 48"));
}

#[test]
fn input_errors_name_file_and_path() {
    let bad = temp_file("bad_morphism.json", r#"{"source":"Z/4","target":"Z/6","matrix":[[1]]}"#);
    let out = run(&["group", "iso", &bad]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bad_morphism.json: $.matrix:"), "{err}");

    let dangling = temp_file("dangling.json", r#"{"source":"Z","target":"W","matrix":[[1]]}"#);
    let err = String::from_utf8_lossy(&run(&["group", "iso", &dangling]).stderr).to_string();
    assert!(err.contains("$.target: unknown group \"W\""), "{err}");

    let scene = temp_file(
        "scene.json",
        r#"{"components":[{"m3":{"provider":"table","key":"empty"},"eta":{"provider":"table","key":"none"},
            "w4":{"provider":"table","key":"CP2"},"nabla":{"provider":"table","key":"chern-weil"}}]}"#,
    );
    let out = run(&["bnr", "psi", &scene]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("scene.json: $.components[0].w4: CP2 is not spin"), "{err}");

    let typo = temp_file(
        "typo.json",
        r#"{"m3":{"provider":"tabel","key":"S3"},"eta":{"provider":"table","key":"lie-framing"},
            "w4":{"provider":"table","key":"D4"},"nabla":{"provider":"table","key":"flat-extension"}}"#,
    );
    let err = String::from_utf8_lossy(&run(&["bnr", "psi", &typo]).stderr).to_string();
    assert!(err.contains("$.m3.provider: unknown variant"), "{err}");
}

#[test]
fn non_integral_psi_is_a_computation_error() {
    let table = temp_file(
        "small_table.json",
        r#"[{"name":"X","spin":true,"integral_p1":-48,"signature":-16,"a_hat":"2"}]"#,
    );
    // A coarse quadrature leaves the S³ integral visibly off an integer.
    let out = run(&["bnr", "psi", &data("generator.json"), "--refine", "1", "--table", &table]);
    assert_eq!(out.status.code(), Some(1), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not an integer"));
}

#[test]
fn json_records_are_byte_stable() {
    let args = ["--format", "json", "bnr", "psi", &data("generator.json"), "--certify"];
    let a = stdout(&args);
    let b = stdout(&args);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["outputs"]["int"], 1);
    assert_eq!(v["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    assert!(v["conventions"][0].as_str().unwrap().starts_with("s3-right-handed"));
}

#[test]
fn quadrature_output_does_not_depend_on_thread_count() {
    let run_with = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_abtqft"))
            .args(["bnr", "cs", "--refine", "3"])
            .env("RAYON_NUM_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run_with("1"), run_with("4"));
}

#[test]
fn acceptance_suite_passes() {
    let out = stdout(&["suite", "acceptance"]);
    assert_eq!(out.lines().count(), 11, "{out}");
    assert!(out.lines().all(|l| l.starts_with("PASS")), "{out}");
}
