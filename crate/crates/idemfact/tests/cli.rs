use std::process::Command;

use idemfact::cli::run;

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn idemfact(args: &[&str], stdin: &str) -> Out {
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("idemfact").chain(args.iter().copied());
    let code = run(argv, &mut input, &mut out, &mut err);
    Out {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

const REGRESSION: &str = "{\"cols\":2,\"entries\":[[\"5\",\"3\"],[\"0\",\"0\"]],\"ring\":{\"kind\":\"integer\"},\"rows\":2}";

#[test]
fn factor_then_verify_regression() {
    let f = idemfact(&["factor"], REGRESSION);
    assert_eq!(f.code, 0, "{}", f.stderr);
    assert!(f.stdout.contains("[[\"1\",\"1\"],[\"0\",\"0\"]]"));
    assert!(f.stdout.contains("[[\"-5\",\"-3\"],[\"10\",\"6\"]]"));
    assert!(f.stdout.contains("\"count\":2"));
    let v = idemfact(&["verify"], &f.stdout);
    assert_eq!((v.code, v.stdout.as_str()), (0, "valid\n"));
}

#[test]
fn tampered_certificate_is_invalid() {
    let f = idemfact(&["factor"], REGRESSION);
    let tampered = f.stdout.replacen("\"6\"", "\"7\"", 1);
    assert_ne!(tampered, f.stdout);
    let v = idemfact(&["verify"], &tampered);
    assert_eq!(v.code, 1);
    assert!(v.stdout.starts_with("invalid"), "{}", v.stdout);

    let miscounted = f.stdout.replace("\"count\":2", "\"count\":3");
    assert_eq!(idemfact(&["verify"], &miscounted).code, 1);
}

#[test]
fn generated_matrices_factor_and_verify() {
    for ring in ["integer", "rational", "gauss", "polymod:3"] {
        for size in ["1", "2", "3", "4"] {
            let g = idemfact(
                &[
                    "gen", "--ring", ring, "--size", size, "--seed", "11", "--bound", "4",
                ],
                "",
            );
            assert_eq!(g.code, 0, "{}", g.stderr);
            let f = idemfact(&["factor"], &g.stdout);
            assert_eq!(f.code, 0, "{ring} {size}: {}", f.stderr);
            assert_eq!(idemfact(&["verify"], &f.stdout).stdout, "valid\n");
        }
    }
}

#[test]
fn gen_is_deterministic() {
    let args = ["gen", "--ring", "gauss", "--size", "3", "--seed", "42"];
    let a = idemfact(&args, "");
    let b = idemfact(&args, "");
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let c = idemfact(
        &["gen", "--ring", "gauss", "--size", "3", "--seed", "43"],
        "",
    );
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn files_are_read_and_written() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("m.json");
    let c = dir.path().join("c.json");
    let (m, c) = (m.to_str().unwrap(), c.to_str().unwrap());
    assert_eq!(
        idemfact(&["gen", "--ring", "integer", "--size", "3", "--out", m], "").code,
        0
    );
    assert_eq!(idemfact(&["factor", "--in", m, "--out", c], "").code, 0);
    assert_eq!(idemfact(&["verify", "--in", c], "").stdout, "valid\n");
    let missing = dir.path().join("absent.json");
    assert_eq!(
        idemfact(&["factor", "--in", missing.to_str().unwrap()], "").code,
        74
    );
}

#[test]
fn exit_codes() {
    let nonsingular = "{\"cols\":2,\"entries\":[[\"2\",\"1\"],[\"1\",\"1\"]],\"ring\":{\"kind\":\"integer\"},\"rows\":2}";
    let e = idemfact(&["factor"], nonsingular);
    assert_eq!(e.code, 2);
    assert!(e.stderr.contains("NotSingular"), "{}", e.stderr);

    assert_eq!(idemfact(&["frobnicate"], "").code, 64);
    assert_eq!(
        idemfact(&["gen", "--ring", "octonion", "--size", "2"], "").code,
        64
    );
    assert_eq!(idemfact(&["factor"], "{\"rows\": 2,").code, 65);
    assert_eq!(idemfact(&["verify"], "[1,2]").code, 65);
    assert_eq!(idemfact(&["--help"], "").code, 0);
}

#[test]
fn ge2_output_multiplies_back() {
    let a = "{\"cols\":2,\"entries\":[[\"7\",\"3\"],[\"2\",\"1\"]],\"ring\":{\"kind\":\"integer\"},\"rows\":2}";
    for strategy in ["euclid", "unit-shift:-2"] {
        let g = idemfact(&["ge2", "--strategy", strategy], a);
        assert_eq!(g.code, 0, "{strategy}: {}", g.stderr);
        let v = idemfact::codec::parse_json(&g.stdout).unwrap();
        let fs = idemfact::codec::decode_ge_list(&idemfact_core::rings::Integers, &v).unwrap();
        let m = idemfact_core::ge::realize(&idemfact_core::rings::Integers, &fs, 2).unwrap();
        assert_eq!(
            m,
            idemfact_core::Matrix::from_i64(idemfact_core::rings::Integers, &[[7, 3], [2, 1]])
                .unwrap()
        );
    }
    assert_eq!(idemfact(&["ge2", "--strategy", "unit-shift:0"], a).code, 2);
}

#[test]
fn bench_prints_a_row_per_size() {
    let b = idemfact(
        &[
            "bench", "--ring", "integer", "--size", "2", "--size", "3", "--count", "3",
        ],
        "",
    );
    assert_eq!(b.code, 0, "{}", b.stderr);
    assert_eq!(b.stdout.lines().count(), 3, "{}", b.stdout);
}

#[test]
fn size_cap_from_environment() {
    let bin = env!("CARGO_BIN_EXE_idemfact");
    let gen = Command::new(bin)
        .args(["gen", "--ring", "integer", "--size", "4"])
        .output()
        .unwrap();
    assert!(gen.status.success());

    let mut child = Command::new(bin)
        .arg("factor")
        .env("IDEMFACT_MAX_SIZE", "3")
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write;
    child.stdin.take().unwrap().write_all(&gen.stdout).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let over = Command::new(bin)
        .args(["gen", "--ring", "integer", "--size", "4"])
        .env("IDEMFACT_MAX_SIZE", "3")
        .output()
        .unwrap();
    assert_eq!(over.status.code(), Some(64));
}
