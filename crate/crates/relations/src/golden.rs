//! Explicit relation tables for n = 4 and n = 5, as published.
//!
//! Each case lists the printed spanning elements. For SS only the elements
//! that survive identification are printed, so those are compared against the
//! nonzero generated elements.

use polygons::{Family, FlowPair, WebSum};
use qalgebra::qint;
use serde::Serialize;

use crate::combination::Combination;
use crate::spaces::{span, RelationLabel};
use crate::RelationError;

#[derive(Clone, Debug)]
pub struct GoldenCase {
    pub name: String,
    pub label: RelationLabel,
    pub n: u32,
    pub flows: FlowPair,
    pub elements: Vec<Combination>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GoldenResult {
    pub name: String,
    pub passed: bool,
    pub expected: Vec<String>,
    pub generated: Vec<String>,
}

type Term = (Family, i64, i64, i64);

use Family::{P, Q};

fn case(name: &str, label: RelationLabel, n: u32, a: &[i64], b: &[i64], els: &[&[Term]]) -> GoldenCase {
    let flows = FlowPair::new(a.to_vec(), b.to_vec()).expect("equal lengths");
    let elements = els
        .iter()
        .map(|terms| {
            let mut c = Combination::new(n, flows.clone());
            for &(fam, l, sign, qi) in terms.iter() {
                // coefficient sign·[qi]
                let x = if sign < 0 { -qint(qi) } else { qint(qi) };
                c.add(fam, l, &x);
            }
            c
        })
        .collect();
    GoldenCase {
        name: name.to_owned(),
        label,
        n,
        flows,
        elements,
    }
}

/// The printed tables. A term `(F, l, s, m)` stands for `s·[m]·F{l}`.
pub fn tables() -> Vec<GoldenCase> {
    use RelationLabel::{APR, SS};
    vec![
        case(
            "APR4 loops",
            APR,
            4,
            &[],
            &[],
            &[
                &[(P, 0, 1, 4), (P, 1, -1, 1)],
                &[(P, 1, -1, 3), (P, 2, 1, 2)],
                &[(P, 2, 1, 2), (P, 3, -1, 3)],
                // printed with a stray level 3 on the first web
                &[(P, 3, -1, 1), (P, 4, 1, 4)],
            ],
        ),
        case(
            "APR4 bigon (0),(1)",
            APR,
            4,
            &[0],
            &[1],
            &[
                &[(P, 1, -1, 3), (P, 2, 1, 1)],
                &[(P, 2, 1, 2), (P, 3, -1, 2)],
                &[(P, 3, -1, 1), (P, 4, 1, 3)],
            ],
        ),
        case(
            "APR4 bigon (0),(2)",
            APR,
            4,
            &[0],
            &[2],
            &[&[(P, 2, 1, 2), (P, 3, -1, 1)], &[(P, 3, -1, 1), (P, 4, 1, 2)]],
        ),
        case("APR4 bigon (0),(3)", APR, 4, &[0], &[3], &[&[(P, 3, -1, 1), (P, 4, 1, 1)]]),
        case(
            "APR4 square (0,0),(1,1)",
            APR,
            4,
            &[0, 0],
            &[1, 1],
            &[
                &[(P, 1, -1, 3), (P, 2, 1, 2), (P, 3, -1, 1)],
                &[(P, 2, 1, 1), (P, 3, -1, 2), (P, 4, 1, 3)],
            ],
        ),
        case(
            "APR4 square (0,0),(1,2)",
            APR,
            4,
            &[0, 0],
            &[1, 2],
            &[&[(P, 2, 1, 1), (P, 3, -1, 1), (P, 4, 1, 1)]],
        ),
        case(
            "APR4 square (0,1),(2,2)",
            APR,
            4,
            &[0, 1],
            &[2, 2],
            &[&[(P, 2, 1, 1), (P, 3, -1, 1), (P, 4, 1, 1)]],
        ),
        case(
            "APR4 hexagon",
            APR,
            4,
            &[0, 0, 0],
            &[1, 1, 1],
            &[&[(P, 1, -1, 1), (P, 2, 1, 1), (P, 3, -1, 1), (P, 4, 1, 1)]],
        ),
        case(
            "SS4 (0,0),(1,1)",
            SS,
            4,
            &[0, 0],
            &[1, 1],
            &[
                &[(P, 2, 1, 1), (Q, 0, -1, 1), (Q, 1, -1, 2)],
                &[(P, 3, 1, 1), (Q, 0, -1, 2), (Q, 1, -1, 1)],
            ],
        ),
        case(
            "SS4 (0,0),(1,2)",
            SS,
            4,
            &[0, 0],
            &[1, 2],
            &[&[(P, 3, 1, 1), (Q, 0, -1, 1), (Q, 1, -1, 1)]],
        ),
        case("SS4 (0,0),(2,2)", SS, 4, &[0, 0], &[2, 2], &[&[(P, 3, 1, 1), (Q, 1, -1, 1)]]),
        case(
            "SS4 (0,1),(2,2)",
            SS,
            4,
            &[0, 1],
            &[2, 2],
            &[&[(P, 3, 1, 1), (Q, 1, -1, 1), (Q, 2, -1, 1)]],
        ),
        case(
            "APR5 hexagon (0,0,0),(1,1,1)",
            APR,
            5,
            &[0, 0, 0],
            &[1, 1, 1],
            &[
                &[(P, 1, -1, 4), (P, 2, 1, 3), (P, 3, -1, 2), (P, 4, 1, 1)],
                &[(P, 2, 1, 1), (P, 3, -1, 2), (P, 4, 1, 3), (P, 5, -1, 4)],
            ],
        ),
        case(
            "APR5 hexagon (0,0,0),(1,1,2)",
            APR,
            5,
            &[0, 0, 0],
            &[1, 1, 2],
            &[&[(P, 2, 1, 1), (P, 3, -1, 1), (P, 4, 1, 1), (P, 5, -1, 1)]],
        ),
        case(
            "APR5 hexagon (0,0,1),(1,2,2)",
            APR,
            5,
            &[0, 0, 1],
            &[1, 2, 2],
            &[&[(P, 2, 1, 1), (P, 3, -1, 1), (P, 4, 1, 1), (P, 5, -1, 1)]],
        ),
        case(
            "APR5 hexagon (0,1,1),(2,2,2)",
            APR,
            5,
            &[0, 1, 1],
            &[2, 2, 2],
            &[&[(P, 2, 1, 1), (P, 3, -1, 1), (P, 4, 1, 1), (P, 5, -1, 1)]],
        ),
        case(
            "APR5 octagon",
            APR,
            5,
            &[0, 0, 0, 0],
            &[1, 1, 1, 1],
            &[&[(P, 1, -1, 1), (P, 2, 1, 1), (P, 3, -1, 1), (P, 4, 1, 1), (P, 5, -1, 1)]],
        ),
        case(
            "SS5 (0,0),(1,1)",
            SS,
            5,
            &[0, 0],
            &[1, 1],
            &[
                &[(P, 2, 1, 1), (Q, 0, -1, 1), (Q, 1, -1, 3)],
                &[(P, 3, 1, 1), (Q, 0, -1, 3), (Q, 1, -1, 3)],
                &[(P, 4, 1, 1), (Q, 0, -1, 3), (Q, 1, -1, 1)],
            ],
        ),
        case(
            "SS5 (0,0),(1,2)",
            SS,
            5,
            &[0, 0],
            &[1, 2],
            &[
                &[(P, 3, 1, 1), (Q, 0, -1, 1), (Q, 1, -1, 2)],
                &[(P, 4, 1, 1), (Q, 0, -1, 2), (Q, 1, -1, 1)],
            ],
        ),
        case(
            "SS5 (0,0),(1,3)",
            SS,
            5,
            &[0, 0],
            &[1, 3],
            &[&[(P, 4, 1, 1), (Q, 0, -1, 1), (Q, 1, -1, 1)]],
        ),
        case(
            "SS5 (0,0),(2,2)",
            SS,
            5,
            &[0, 0],
            &[2, 2],
            &[
                &[(P, 3, 1, 1), (Q, 1, -1, 1), (Q, 2, -1, 1)],
                &[(P, 4, 1, 1), (Q, 0, -1, 1), (Q, 1, -1, 1)],
            ],
        ),
        case(
            "SS5 (0,1),(2,2)",
            SS,
            5,
            &[0, 1],
            &[2, 2],
            &[
                &[(P, 3, 1, 1), (Q, 1, -1, 1), (Q, 2, -1, 2)],
                &[(P, 4, 1, 1), (Q, 1, -1, 2), (Q, 2, -1, 1)],
            ],
        ),
        case(
            "SS5 (0,1),(2,3)",
            SS,
            5,
            &[0, 1],
            &[2, 3],
            &[&[(P, 4, 1, 1), (Q, 1, -1, 1), (Q, 2, -1, 1)]],
        ),
        case(
            "SS5 (0,1),(3,2)",
            SS,
            5,
            &[0, 1],
            &[3, 2],
            &[&[(P, 4, 1, 1), (Q, 1, -1, 1), (Q, 2, -1, 1)]],
        ),
        case(
            "SS5 (0,2),(3,3)",
            SS,
            5,
            &[0, 2],
            &[3, 3],
            &[&[(P, 4, 1, 1), (Q, 2, -1, 1), (Q, 3, -1, 1)]],
        ),
    ]
}

/// Compares the generated spanning set with the printed one, as web sums.
pub fn check(case: &GoldenCase) -> Result<GoldenResult, RelationError> {
    let space = span(case.label, case.n, &case.flows)?;
    let generated: Vec<WebSum> = match case.label {
        RelationLabel::SS | RelationLabel::SSPrime => space.nonzero_elements().cloned().collect(),
        _ => space.elements().to_vec(),
    };
    let expected: Vec<WebSum> = case.elements.iter().map(Combination::to_websum).collect();
    Ok(GoldenResult {
        name: case.name.clone(),
        passed: generated == expected,
        expected: expected.iter().map(WebSum::to_string).collect(),
        generated: generated.iter().map(WebSum::to_string).collect(),
    })
}
