//! Replays the checked-in fuzz seeds through the same round-trip checks the
//! fuzz targets make, so the corpus stays meaningful on stable toolchains.

use std::fs;
use std::path::{Path, PathBuf};

use approval_bribery::bench::Suite;
use approval_bribery::io::{
    parse_election, parse_graph, parse_rx3c, parse_script, write_election, write_graph, write_rx3c, write_script,
    InstanceParams,
};

fn seeds(target: &str) -> Vec<(PathBuf, String)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fuzz/corpus").join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| {
            let path = entry.unwrap().path();
            let text = fs::read_to_string(&path).unwrap();
            (path, text)
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

/// Runs `check` on every seed and returns how many were accepted.
fn replay(target: &str, check: impl Fn(&str) -> bool) -> usize {
    seeds(target).iter().filter(|(_, text)| check(text)).count()
}

#[test]
fn election_seeds() {
    let ok = replay("parse_election", |t| match parse_election(t) {
        Ok(e) => {
            assert_eq!(parse_election(&write_election(&e)).unwrap(), e);
            true
        }
        Err(_) => false,
    });
    assert_eq!(ok, 3);
}

#[test]
fn graph_seeds() {
    let ok = replay("parse_graph", |t| match parse_graph(t) {
        Ok(g) => {
            assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
            true
        }
        Err(_) => false,
    });
    assert_eq!(ok, 3);
}

#[test]
fn rx3c_seeds() {
    let ok = replay("parse_rx3c", |t| match parse_rx3c(t) {
        Ok(x) => {
            assert_eq!(parse_rx3c(&write_rx3c(&x)).unwrap(), x);
            true
        }
        Err(_) => false,
    });
    assert_eq!(ok, 2);
}

#[test]
fn script_seeds() {
    let ok = replay("parse_script", |t| match parse_script(t) {
        Ok((op, s)) => {
            assert_eq!(parse_script(&write_script(op, &s)).unwrap(), (op, s));
            true
        }
        Err(_) => false,
    });
    assert_eq!(ok, 2);
}

#[test]
fn params_seeds() {
    let ok = replay("instance_params", |t| match InstanceParams::from_json(t) {
        Ok(p) => {
            assert_eq!(InstanceParams::from_json(&p.to_json()).unwrap(), p);
            true
        }
        Err(_) => false,
    });
    assert_eq!(ok, 2);
}

#[test]
fn suite_seeds() {
    let ok = replay("bench_suite", |t| match Suite::from_json(t) {
        Ok(s) => {
            let expected = s.random.as_ref().map_or(0, |r| r.count);
            assert_eq!(s.instances(Path::new(".")).unwrap().len(), expected);
            true
        }
        Err(_) => false,
    });
    assert_eq!(ok, 2);
}
