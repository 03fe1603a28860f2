use latder::cli::run;
use latder::generators::*;
use latder::io::*;
use latder::{Error, FiniteLattice};

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cli(args: &[&str], stdin: &str) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("latder").chain(args.iter().copied());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn generated(args: &[&str]) -> String {
    let mut argv = vec!["gen"];
    argv.extend_from_slice(args);
    let o = cli(&argv, "");
    assert_eq!(o.code, 0, "{}", o.stderr);
    o.stdout
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn save_and_load_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b2.json");
    let b2 = boolean(2).unwrap();
    save(&b2, &path).unwrap();
    let first = std::fs::read(&path).unwrap();
    let back = load(&path).unwrap();
    assert_eq!(back, b2);
    save(&back, &path).unwrap();
    assert_eq!(std::fs::read(&path).unwrap(), first);
    assert!(matches!(load(dir.path().join("missing.json")), Err(Error::Io(_))));
}

#[test]
fn every_generator_round_trips() {
    let lattices: Vec<FiniteLattice> = vec![
        permutohedron(4).unwrap(),
        tamari(4).unwrap(),
        multinomial(&[2, 2, 1]).unwrap(),
        pentagon(),
        diamond(),
        dedekind_macneille(&random_poset(9, 0.3, 5).unwrap()).unwrap(),
    ];
    for l in lattices {
        let text = lattice_to_string(&l, None);
        let (back, prov) = parse_lattice(&text).unwrap();
        assert_eq!(back, l);
        assert_eq!(prov, None);
        assert_eq!(lattice_to_string(&back, None), text);
    }
}

#[test]
fn golden_outputs() {
    assert_eq!(pentagon().to_dot(), golden("pentagon.dot"));
    assert_eq!(
        generated(&["random-dm", "--elements", "6", "--density", "0.3", "--seed", "4"]),
        golden("random-dm-6-0.3-4.json")
    );
    let b2 = generated(&["boolean", "2"]);
    assert_eq!(cli(&["covers"], &b2).stdout, golden("boolean2-covers.json"));
}

#[test]
fn dot_files_are_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("n5.dot");
    export_dot(&pentagon(), &path).unwrap();
    assert_eq!(std::fs::read_to_string(&path).unwrap(), golden("pentagon.dot"));
    let n5 = generated(&["pentagon"]);
    let o = cli(&["dot", "--covers"], &n5);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout.matches(" -> ").count(), 2);
}

#[test]
fn permutohedron_is_join_semidistributive() {
    let s3 = generated(&["permutohedron", "3"]);
    let o = cli(&["check", "--assert", "sd-join"], &s3);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("sd-join: true\n"));
    assert!(o.stdout.contains("bounded: true\n"));
    let o = cli(&["check", "--assert", "distributive", "--assert", "sd-meet"], &s3);
    assert_eq!(o.code, 1);
    assert_eq!(o.stderr, "assertion failed: distributive\n");
}

#[test]
fn multinomial_is_not_regular() {
    let l = generated(&["multinomial", "2,2,1"]);
    let o = cli(&["regular"], &l);
    assert_eq!(o.code, 1);
    assert!(o.stdout.starts_with("not regular\n"));
    let o = cli(&["--json", "regular"], &generated(&["boolean", "3"]));
    assert_eq!(o.code, 0);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["regular"], true);
}

#[test]
fn derivative_of_s4_is_s3() {
    let dir = tempfile::tempdir().unwrap();
    let (s4, d, s3) = (dir.path().join("s4"), dir.path().join("d"), dir.path().join("s3"));
    let p = |x: &std::path::Path| x.to_str().unwrap().to_string();
    assert_eq!(cli(&["gen", "permutohedron", "4", "-o", &p(&s4)], "").code, 0);
    assert_eq!(cli(&["derive", &p(&s4), "--cover", "0,1", "-o", &p(&d)], "").code, 0);
    assert_eq!(cli(&["gen", "permutohedron", "3", "-o", &p(&s3)], "").code, 0);
    let o = cli(&["iso", &p(&d), &p(&s3)], "");
    assert_eq!(o.code, 0);
    assert!(o.stdout.starts_with("isomorphic\n"));
    let o = cli(&["iso", &p(&d), &p(&s4)], "");
    assert_eq!((o.code, o.stdout.as_str()), (1, "not isomorphic\n"));

    let text = std::fs::read_to_string(&d).unwrap();
    let (_, prov) = parse_lattice(&text).unwrap();
    let prov = prov.unwrap();
    assert_eq!(prov.family, "derived");
    assert_eq!(prov.params["base_sha256"], lattice_hash(&permutohedron(4).unwrap()));
}

#[test]
fn labels_quotients_and_facets() {
    let n5 = generated(&["pentagon"]);
    let o = cli(&["label"], &n5);
    assert_eq!(o.code, 0);
    let f = parse_labels(&o.stdout).unwrap();
    assert_eq!(f.get(latder::Cover::new(2, 3)), Some(1));
    assert_eq!(cli(&["label"], &generated(&["diamond"])).code, 2);

    let o = cli(&["facets"], &n5);
    assert_eq!(
        o.stdout,
        "delta (1,4) delta' (3,4) gamma (0,2) gamma' (0,1) interiors [(2,3)]\nfacets: 1\n"
    );

    let o = cli(&["quotient", "--pair", "2,3"], &n5);
    assert_eq!(o.code, 0);
    let (q, _) = parse_lattice(&o.stdout).unwrap();
    assert_eq!(q.size(), 4);
}

#[test]
fn errors_exit_with_two() {
    let cycle = "{\"format\":\"latder-lattice-v1\",\"size\":2,\"covers\":[[0,1],[1,0]]}";
    let o = cli(&["check"], cycle);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("cycle"));
    assert_eq!(cli(&["check"], "{").code, 2);
    assert_eq!(cli(&["gen", "permutohedron", "7"], "").code, 2);
    assert_eq!(cli(&["derive", "--cover", "0,3"], &generated(&["pentagon"])).code, 2);
    assert_eq!(cli(&["derive", "--cover", "0,1"], &generated(&["diamond"])).code, 2);
    assert_eq!(cli(&["derive", "--cover", "zero"], "").code, 2);
    assert_eq!(cli(&["frobnicate"], "").code, 2);
    assert_eq!(cli(&["--help"], "").code, 0);
}

#[test]
fn outputs_are_deterministic() {
    let a = generated(&["tamari", "4"]);
    assert_eq!(a, generated(&["tamari", "4"]));
    assert_eq!(
        cli(&["--json", "check"], &a).stdout,
        cli(&["--json", "check"], &a).stdout
    );
}
