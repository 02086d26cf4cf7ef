#![allow(dead_code)]

pub mod oracle;

use std::path::PathBuf;

use hyperres::matroid::arrangement::Arrangement;
use hyperres::matroid::generators::{self, generic_fixture_shapes, GENERIC_FIXTURE_SEED, NAMED_FIXTURES};

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn generic_name(d: usize, n: usize) -> String {
    format!("generic-d{d}-n{n}")
}

/// Every fixture name, named ones first.
pub fn corpus_names() -> Vec<String> {
    NAMED_FIXTURES
        .iter()
        .map(|s| s.to_string())
        .chain(generic_fixture_shapes().into_iter().map(|(d, n)| generic_name(d, n)))
        .collect()
}

/// The arrangement a fixture name stands for, built from the generators.
pub fn generate(name: &str) -> Arrangement {
    if let Some(a) = generators::named(name) {
        return a;
    }
    let (d, n) = generic_fixture_shapes()
        .into_iter()
        .find(|&(d, n)| generic_name(d, n) == name)
        .expect("known fixture");
    generators::generic(d, n, GENERIC_FIXTURE_SEED).unwrap()
}

/// The committed fixture file.
pub fn load(name: &str) -> Arrangement {
    let path = fixture_dir().join(format!("{name}.json"));
    Arrangement::load(&path)
        .unwrap_or_else(|e| panic!("{}: {e}", path.display()))
        .0
}

/// All committed fixtures, essentialized where needed.
pub fn corpus() -> Vec<(String, Arrangement)> {
    corpus_names()
        .into_iter()
        .map(|name| {
            let a = load(&name).essentialize();
            (name, a)
        })
        .collect()
}

/// Essential, indecomposable fixtures.
pub fn indecomposable_corpus() -> Vec<(String, Arrangement)> {
    corpus()
        .into_iter()
        .filter(|(name, _)| name != "decomposable")
        .collect()
}
