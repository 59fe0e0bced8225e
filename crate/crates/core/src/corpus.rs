//! Bundled instances and the values `verify` expects for them.

use crate::error::{Error, Result};
use crate::instance::InstanceFile;
use crate::module::Presentation;

/// Expected invariants; `None` fields are not checked.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Expectation {
    pub depth: Option<u32>,
    pub h: Option<&'static [i64]>,
    pub e: Option<&'static [i64]>,
    pub case_id: Option<&'static str>,
    pub a_tuple: Option<&'static [u32]>,
    pub free_rank: Option<usize>,
}

#[derive(Debug, Clone, Copy)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub json: &'static str,
    pub expect: Expectation,
}

impl CorpusEntry {
    pub fn instance(&self) -> InstanceFile {
        InstanceFile::from_json(self.json).expect("bundled instance parses")
    }

    pub fn presentation(&self) -> Presentation {
        self.instance().to_presentation(None).expect("bundled instance is valid")
    }
}

macro_rules! bundled {
    ($name:literal) => {
        include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/instances/", $name, ".json"))
    };
}

const E7_A: &[u32] = &[1, 2, 2, 2];

/// Every bundled instance, in `verify` order.
pub fn corpus() -> Vec<CorpusEntry> {
    let none = Expectation::default();
    vec![
        CorpusEntry {
            name: "ex1",
            json: bundled!("ex1"),
            expect: Expectation {
                depth: Some(0),
                h: Some(&[4, 0, 6, -4, 1]),
                case_id: Some("4d"),
                a_tuple: Some(E7_A),
                free_rank: Some(0),
                ..none
            },
        },
        CorpusEntry {
            name: "ex2",
            json: bundled!("ex2"),
            expect: Expectation {
                depth: Some(1),
                h: Some(&[4, 1, 3, -1]),
                case_id: Some("4c"),
                a_tuple: Some(E7_A),
                ..none
            },
        },
        CorpusEntry {
            name: "ex3",
            json: bundled!("ex3"),
            expect: Expectation {
                depth: Some(2),
                h: Some(&[4, 2, 1]),
                case_id: Some("4b"),
                a_tuple: Some(E7_A),
                ..none
            },
        },
        CorpusEntry {
            name: "ex4",
            json: bundled!("ex4"),
            expect: Expectation {
                depth: Some(3),
                h: Some(&[4, 3]),
                case_id: Some("4a"),
                a_tuple: Some(E7_A),
                ..none
            },
        },
        CorpusEntry {
            name: "ringA",
            json: bundled!("ringA"),
            expect: Expectation {
                depth: Some(3),
                h: Some(&[1, 1, 1]),
                e: Some(&[3, 3, 1, 0]),
                ..none
            },
        },
        CorpusEntry {
            name: "ulrich",
            json: bundled!("ulrich"),
            expect: Expectation {
                depth: Some(3),
                h: Some(&[4]),
                e: Some(&[4, 0, 0, 0]),
                case_id: Some("1"),
                a_tuple: Some(&[1, 1, 1, 1]),
                ..none
            },
        },
        CorpusEntry {
            name: "diag_x_x_x_x2",
            json: bundled!("diag_x_x_x_x2"),
            expect: Expectation {
                depth: Some(3),
                h: Some(&[4, 1]),
                case_id: Some("2a"),
                a_tuple: Some(&[1, 1, 1, 2]),
                ..none
            },
        },
        CorpusEntry {
            name: "diag_x_x_x2_x2",
            json: bundled!("diag_x_x_x2_x2"),
            expect: Expectation {
                depth: Some(3),
                h: Some(&[4, 2]),
                case_id: Some("3a"),
                a_tuple: Some(&[1, 1, 2, 2]),
                ..none
            },
        },
        CorpusEntry {
            name: "diag_x_x2_x2_x2",
            json: bundled!("diag_x_x2_x2_x2"),
            expect: Expectation {
                depth: Some(3),
                h: Some(&[4, 3]),
                case_id: Some("4a"),
                a_tuple: Some(E7_A),
                ..none
            },
        },
        CorpusEntry {
            name: "diag_x2_x2_x2_x2",
            json: bundled!("diag_x2_x2_x2_x2"),
            expect: Expectation {
                depth: Some(3),
                h: Some(&[4, 4]),
                case_id: Some("5"),
                a_tuple: Some(&[2, 2, 2, 2]),
                ..none
            },
        },
        CorpusEntry {
            name: "free",
            json: bundled!("free"),
            expect: Expectation {
                depth: Some(3),
                h: Some(&[4, 4, 4]),
                free_rank: Some(4),
                ..none
            },
        },
        CorpusEntry {
            name: "split",
            json: bundled!("split"),
            expect: Expectation {
                free_rank: Some(1),
                ..none
            },
        },
    ]
}

pub fn entry(name: &str) -> Result<CorpusEntry> {
    corpus()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::validation(format!("no bundled instance named `{name}`")))
}

/// Presentation of a bundled instance by name.
pub fn presentation(name: &str) -> Result<Presentation> {
    Ok(entry(name)?.presentation())
}
