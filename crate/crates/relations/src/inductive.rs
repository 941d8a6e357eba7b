use branching::dgt;
use polygons::{FlowPair, WebSum};
use serde::Serialize;

use crate::linear::express;
use crate::spaces::{known_relations, RelationSpace};

/// A dGT matrix entry certified as a combination of lower-level relations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub element: usize,
    pub key: String,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    /// Coefficients against [`known_relations`] at the target flows.
    pub coefficients: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub element: usize,
    pub key: String,
    pub entry: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InductiveReport {
    pub label: String,
    pub n: u32,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub elements: usize,
    pub entries_checked: usize,
    pub witnesses: Vec<Witness>,
    pub failures: Vec<Failure>,
}

impl InductiveReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that every dGT matrix entry of every spanning element of `space`
/// lies in the span of the relations known one level down.
///
/// At level 0 there is nothing to branch to, so elements must vanish outright.
pub fn verify_kernel_inductive(space: &RelationSpace) -> InductiveReport {
    let flows: &FlowPair = space.flows();
    let mut report = InductiveReport {
        label: space.label().to_string(),
        n: space.n(),
        a: flows.a().to_vec(),
        b: flows.b().to_vec(),
        elements: space.len(),
        entries_checked: 0,
        witnesses: Vec::new(),
        failures: Vec::new(),
    };
    for (i, x) in space.elements().iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        if space.n() == 0 {
            report.failures.push(Failure {
                element: i,
                key: String::new(),
                entry: x.to_string(),
                reason: "nonzero at level 0".into(),
            });
            continue;
        }
        let img = match dgt(x) {
            Ok(img) => img,
            Err(e) => {
                report.failures.push(Failure {
                    element: i,
                    key: String::new(),
                    entry: x.to_string(),
                    reason: e.to_string(),
                });
                continue;
            }
        };
        for (key, y) in img.entries() {
            report.entries_checked += 1;
            check_entry(&mut report, i, &key.to_string(), y);
        }
    }
    report
}

fn check_entry(report: &mut InductiveReport, element: usize, key: &str, y: &WebSum) {
    let target = y.flows().expect("nonzero entries have terms").clone();
    let basis = known_relations(y.n(), &target);
    match express(y, &basis) {
        Ok(c) => report.witnesses.push(Witness {
            element,
            key: key.to_owned(),
            a: target.a().to_vec(),
            b: target.b().to_vec(),
            coefficients: c.iter().map(ToString::to_string).collect(),
        }),
        Err(e) => report.failures.push(Failure {
            element,
            key: key.to_owned(),
            entry: y.to_string(),
            reason: e.to_string(),
        }),
    }
}
