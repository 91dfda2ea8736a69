use std::process::{Command, Output};

use origami_census::{parallel_census, render_svg, render_text, to_jsonl};
use origami_census_core::{Origami, Perm, SymmetryGroup};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_origami-census"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn worker_count_does_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let one = dir.path().join("one.jsonl");
    let many = dir.path().join("many.jsonl");
    for (w, path) in [("1", &one), ("3", &many)] {
        let out = bin(&[
            "enumerate",
            "--genus",
            "5",
            "--workers",
            w,
            "--output",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let a = std::fs::read(&one).unwrap();
    assert_eq!(a, std::fs::read(&many).unwrap());
    assert_eq!(a.iter().filter(|&&b| b == b'\n').count(), 436);
    let lib1 = to_jsonl(
        &parallel_census(6, SymmetryGroup::Mirror, 1, false)
            .unwrap()
            .result,
    );
    let lib4 = to_jsonl(
        &parallel_census(6, SymmetryGroup::Mirror, 4, false)
            .unwrap()
            .result,
    );
    assert_eq!(lib1, lib4);
}

#[test]
fn jsonl_schema() {
    let r = parallel_census(3, SymmetryGroup::Mirror, 1, false)
        .unwrap()
        .result;
    assert_eq!(
        to_jsonl(&r),
        "{\"genus\":3,\"n\":5,\"canonical_diffs\":[1,2,1,3,3],\"orbit_size\":10,\"stratum\":[4]}\n"
    );
}

#[test]
fn documented_examples() {
    let out = bin(&["count", "--genus", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\n");
    assert!(String::from_utf8_lossy(&out.stderr).contains("1 classes"));

    let out = bin(&["count", "--genus", "2"]);
    assert_eq!(stdout(&out), "1\n");

    let out = bin(&["verify", "--n", "5", "--perm", "(1 2 5 3 4)"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("genus: 3") && text.contains("verdict: valid"));
    assert!(text.contains("orbit size: 10") && text.contains("stratum: [4]"));

    let out = bin(&["verify", "--perm", "(1 2 4 5 8 6 3 7 9)"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("verdict: invalid"));

    let out = bin(&["count", "--genus", "4", "--cross-check", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "genus,squares,count,asymptotic_bound\n4,7,8,292\n"
    );

    let out = bin(&["count", "--genus", "4", "--method", "construct"]);
    assert_eq!(stdout(&out), "8\n");
}

#[test]
fn exit_codes() {
    assert_eq!(bin(&["count", "--genus", "7"]).status.code(), Some(2));
    assert_eq!(bin(&["count", "--genus", "1"]).status.code(), Some(2));
    assert_eq!(bin(&["count"]).status.code(), Some(2));
    assert_eq!(
        bin(&["count", "--genus", "3", "--workers", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(bin(&["verify", "--perm", "(1 2 x)"]).status.code(), Some(2));
    assert_eq!(
        bin(&["polygon", "--perm", "(1 2 3 4 5)"]).status.code(),
        Some(1)
    );
}

#[test]
fn polygon_dump_lines() {
    let out = bin(&["polygon", "--perm", "(1 2 5 3 4)"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 20);
    for (k, line) in lines.iter().enumerate() {
        let f: Vec<&str> = line.split(' ').collect();
        assert_eq!(f[0], (k + 1).to_string());
        assert_eq!(f[1], if k % 2 == 0 { "a" } else { "b" });
        let label: usize = f[2].parse().unwrap();
        assert!((1..=5).contains(&label));
        assert!(f[3] == "+" || f[3] == "-");
    }
    // every label twice per curve, with opposite directions
    for curve in ["a", "b"] {
        for label in 1..=5 {
            let dirs: Vec<&str> = lines
                .iter()
                .map(|l| l.split(' ').collect::<Vec<_>>())
                .filter(|f| f[1] == curve && f[2] == label.to_string())
                .map(|f| f[3])
                .collect();
            assert_eq!(dirs.len(), 2);
            assert_ne!(dirs[0], dirs[1]);
        }
    }
}

#[test]
fn menage_and_bounds() {
    assert_eq!(stdout(&bin(&["menage", "--n", "5"])), "13\n");
    assert_eq!(
        stdout(&bin(&["menage", "--n", "5", "--exclude-opposite"])),
        "12\n"
    );
    let classes = stdout(&bin(&[
        "menage",
        "--n",
        "5",
        "--classes",
        "--exclude-opposite",
    ]));
    assert_eq!(classes.lines().count(), 4);
    let out = bin(&["bound", "--table", "--max", "5"]);
    assert_eq!(
        stdout(&out),
        "genus,squares,count,asymptotic_bound,exact_bound,exact_bound_excl_opposite\n\
         3,5,1,6,10,8\n4,7,8,292,261,258\n5,9,436,21826,19372,19368\n"
    );
    let out = bin(&["bound", "--genus", "7"]);
    assert_eq!(
        stdout(&out).lines().nth(1),
        Some("7,13,,388954903,357967590,357967584")
    );
}

#[test]
fn render_formats() {
    let h = Origami::new(Perm::rotation(3, 1)).unwrap();
    let text = render_text(&h);
    assert_eq!(text.lines().next().unwrap(), "p(i)  2   3   1");
    let o = Origami::from_cycle_notation("(1 2 5 3 4)").unwrap();
    assert!(render_text(&o).starts_with("p(i)  2   5   4   1   3\n"));
    let svg = render_svg(&o);
    let doc = roxmltree::Document::parse(&svg).unwrap();
    assert_eq!(doc.root_element().tag_name().name(), "svg");
    let rects = doc.descendants().filter(|n| n.has_tag_name("rect")).count();
    assert_eq!(rects, 5);
    let out = bin(&["render", "--perm", "(1 2 5 3 4)", "--format", "svg"]);
    assert_eq!(stdout(&out), svg);
}
