use identities::{
    verify_ed_zero, verify_recurrence, verify_ssprime_ss, verify_vandermonde, EdZeroGrid, IdentityName, IdentityReport,
    RecurrenceGrid, SsGrid, VandermondeGrid,
};
use polygons::make_web;
use rayon::prelude::*;
use relations::{apr_span, span, ss_span, verify_kernel_inductive, InductiveReport, RelationLabel};
use reporacle::{bigon, circle, EquivariantTensor, Factor, RepObject, TagConvention};
use serde_json::json;

use crate::config::{Command, Evaluation, RunConfig, Suite};
use crate::suites::{self, Case};
use crate::sweep::canonical_flows;
use crate::{Body, CliError};

pub(crate) fn execute(config: &RunConfig) -> Result<Body, CliError> {
    match &config.command {
        Command::Dgt { family, l } => dgt(config, *family, *l),
        Command::Relations { space } => relations(config, (*space).into()),
        Command::Verify { space, .. } => verify(config, space.map(Into::into)),
        Command::RepCheck { suite } => rep_check(config, *suite),
        Command::Identities { name } => identities(config, *name),
        Command::Evaluate { what } => evaluate(config, *what),
    }
}

fn explicit(config: &RunConfig) -> Result<polygons::FlowPair, CliError> {
    config
        .flows
        .explicit()?
        .ok_or_else(|| CliError::Usage("--a and --b are required".into()))
}

fn dgt(config: &RunConfig, family: polygons::Family, l: i64) -> Result<Body, CliError> {
    let n = config.n.min;
    let flows = explicit(config)?;
    let w = make_web(family, n, &flows, l);
    let Some(w) = w.polygon() else {
        return Err(CliError::Usage(format!("{family}^{n}_{flows}{{{l}}} is not admissible")));
    };
    let img = branching::dgt_web(w)?;
    let text = img
        .entries()
        .map(|(k, x)| format!("{:?}: {x}", k.s()))
        .collect();
    Ok(Body {
        cases: img.len(),
        failures: 0,
        results: json!({ "web": w.to_string(), "image": img }),
        text,
    })
}

fn relations(config: &RunConfig, label: RelationLabel) -> Result<Body, CliError> {
    let n = config.n.min;
    let flows = explicit(config)?;
    if !flows.is_admissible(n) {
        return Err(CliError::Usage(format!("flows {flows} are not admissible at n = {n}")));
    }
    let s = span(label, n, &flows)?;
    let text = s.nonzero_elements().map(ToString::to_string).collect();
    Ok(Body {
        cases: s.len(),
        failures: 0,
        results: serde_json::to_value(&s).expect("relation space serializes"),
        text,
    })
}

fn verify(config: &RunConfig, label: Option<RelationLabel>) -> Result<Body, CliError> {
    let mut spaces = Vec::new();
    match config.flows.explicit()? {
        Some(flows) => {
            for n in config.n.iter().filter(|&n| flows.is_admissible(n)) {
                let labels = match label {
                    Some(l) => vec![l],
                    None if flows.k() == 2 => vec![RelationLabel::SS, RelationLabel::APR],
                    None => vec![RelationLabel::APR],
                };
                for l in labels {
                    spaces.push(span(l, n, &flows)?);
                }
            }
        }
        None => {
            for n in config.n.iter() {
                for k in 0..=config.flows.max_k {
                    for f in canonical_flows(n, k, config.flows.max_entry) {
                        if k == 2 {
                            spaces.push(ss_span(n, &f)?);
                        }
                        spaces.push(apr_span(n, &f));
                    }
                }
            }
        }
    }
    let reports: Vec<InductiveReport> = spaces.par_iter().map(verify_kernel_inductive).collect();
    let failures = reports.iter().filter(|r| !r.passed()).count();
    let mut text: Vec<String> = reports
        .iter()
        .map(|r| {
            format!(
                "{} {} n={} a={:?} b={:?}: {} elements, {} entries, {} witnesses",
                if r.passed() { "PASS" } else { "FAIL" },
                r.label,
                r.n,
                r.a,
                r.b,
                r.elements,
                r.entries_checked,
                r.witnesses.len()
            )
        })
        .collect();
    text.push(format!("{} spaces, {failures} failed", reports.len()));
    Ok(Body {
        cases: reports.len(),
        failures,
        results: serde_json::to_value(&reports).expect("reports serialize"),
        text,
    })
}

fn case_body(cases: Vec<Case>, title: &str) -> Body {
    let failures = cases.iter().filter(|c| !c.passed).count();
    let mut text: Vec<String> = cases
        .iter()
        .map(|c| format!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.key, c.detail))
        .collect();
    text.push(format!("{title}: {} cases, {failures} failed", cases.len()));
    Body {
        cases: cases.len(),
        failures,
        results: serde_json::to_value(&cases).expect("cases serialize"),
        text,
    }
}

fn rep_check(config: &RunConfig, suite: Suite) -> Result<Body, CliError> {
    let ns = config.n.iter();
    let explicit = config.flows.explicit()?;
    let (k, e, b) = (config.flows.max_k, config.flows.max_entry, config.budget);
    let cases = match suite {
        Suite::Kernel => suites::kernel(ns, explicit.as_ref(), k, e, b)?,
        Suite::Ih => suites::ih(ns)?,
        Suite::Loops => suites::loops(ns)?,
        Suite::Braid => suites::braid(ns)?,
        Suite::Square => suites::square(ns, explicit.as_ref(), k, e, b)?,
    };
    Ok(case_body(cases, &format!("rep-check {suite}")))
}

fn identities(config: &RunConfig, name: Option<IdentityName>) -> Result<Body, CliError> {
    let names: Vec<IdentityName> = name.map_or_else(|| IdentityName::ALL.to_vec(), |x| vec![x]);
    let max_n = config.n.max;
    let max_entry = config.flows.max_entry;
    let reports: Vec<IdentityReport> = names
        .into_iter()
        .map(|x| match x {
            IdentityName::EdZero => verify_ed_zero(&EdZeroGrid {
                max_n,
                max_entry,
                ..EdZeroGrid::default()
            }),
            IdentityName::SsprimeSs => verify_ssprime_ss(&SsGrid {
                max_n,
                max_entry,
                ..SsGrid::default()
            }),
            IdentityName::Vandermonde => verify_vandermonde(&VandermondeGrid::default()),
            IdentityName::Recurrence => verify_recurrence(&RecurrenceGrid::default()),
        })
        .collect();
    let failures = reports.iter().filter(|r| !r.passed()).count();
    let text = reports
        .iter()
        .map(|r| {
            format!(
                "{} {} ({}): {} cases, {} violations",
                if r.passed() { "PASS" } else { "FAIL" },
                r.name,
                r.grid,
                r.cases,
                r.violations.len()
            )
        })
        .collect();
    Ok(Body {
        cases: reports.len(),
        failures,
        results: serde_json::to_value(&reports).expect("reports serialize"),
        text,
    })
}

fn evaluate(config: &RunConfig, what: Evaluation) -> Result<Body, CliError> {
    let n = config.n.max;
    let (value, key) = match what {
        Evaluation::Circle { l } => (circle(n, l)?, format!("circle n={n} l={l}")),
        Evaluation::Bigon { k, l } => {
            let t = bigon(n, k, l, TagConvention::Plain)?;
            let id = EquivariantTensor::identity(n, RepObject::new(vec![Factor::plain(k)]));
            let v = t
                .ratio(&id)
                .ok_or_else(|| CliError::Failed("bigon is not a multiple of the identity".into()))?;
            let p = v
                .as_laurent()
                .cloned()
                .ok_or_else(|| CliError::Failed(format!("bigon value {v} is not a Laurent polynomial")))?;
            (p, format!("bigon n={n} k={k} l={l}"))
        }
    };
    Ok(Body {
        cases: 1,
        failures: 0,
        results: json!({ "case": key, "value": value.to_string() }),
        text: vec![value.to_string()],
    })
}
