//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::collections::BTreeSet;
use std::time::Instant;

use cli::suites::{expected_raw_nullity, identified_rank};
use cli::sweep::{canonical_flows, webs_on};
use identities::{verify_default, IdentityName};
use polygons::{Family, FlowPair, WebSum};
use qalgebra::{qbinom, LaurentPoly};
use rayon::prelude::*;
use relations::{
    apr_complement, apr_span, aqr_span, dgt_empty_pullback, golden, pair, ss_prime_span, ss_span,
    verify_kernel_inductive, RelationSpace,
};
use reporacle::{
    bigon, build_irrep, circle, commuting_square_check, copairing, crossing, d_map, d_matrix, dual_action,
    hopf_violations, kernel_rank, pairing, rep_websum, tau_diag, vin, vout, EquivariantTensor, Factor, Matrix,
    RepObject, Side, TagConvention, DEFAULT_BUDGET,
};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn hexagon() -> FlowPair {
    FlowPair::new(vec![0, 0, 0], vec![1, 1, 1]).unwrap()
}

fn flows(ns: std::ops::RangeInclusive<u32>, ks: &[usize], max_entry: impl Fn(usize) -> i64) -> Vec<(u32, FlowPair)> {
    ns.flat_map(|n| {
        ks.iter()
            .flat_map(|&k| canonical_flows(n, k, max_entry(k)))
            .map(move |f| (n, f))
            .collect::<Vec<_>>()
    })
    .collect()
}

fn id(n: u32, a: u32) -> EquivariantTensor {
    EquivariantTensor::identity(n, RepObject::new(vec![Factor::plain(a)]))
}

fn sign(e: u32) -> LaurentPoly {
    LaurentPoly::signed_q_pow(i64::from(e), 0)
}

fn identities() -> Verdict {
    let t = Instant::now();
    let reports: Vec<_> = IdentityName::ALL.iter().map(|&x| verify_default(x)).collect();
    let secs = t.elapsed().as_secs_f64();
    let summary: Vec<String> = reports
        .iter()
        .map(|r| format!("{} {}/{}", r.name, r.violations.len(), r.cases))
        .collect();
    let line = format!("violations {} in {secs:.1}s", summary.join(", "));
    if reports.iter().all(|r| r.passed()) && secs < 60.0 {
        Ok(line)
    } else {
        Err(line)
    }
}

fn golden_tables() -> Verdict {
    let cases = golden::tables();
    for c in &cases {
        let r = golden::check(c).map_err(err)?;
        check(r.passed, || format!("{}: expected {:?}, got {:?}", r.name, r.expected, r.generated))?;
    }
    Ok(format!("{} printed spanning sets reproduced exactly", cases.len()))
}

fn annihilated(space: &RelationSpace) -> Result<usize, String> {
    let mut count = 0;
    for x in space.raw() {
        let w = x.to_websum();
        if !rep_websum(&w, DEFAULT_BUDGET).map_err(err)?.is_zero() {
            return Err(format!("{:?} n={} {}: {w} is not killed", space.label(), space.n(), space.flows()));
        }
        count += 1;
    }
    for x in space.elements() {
        if !rep_websum(x, DEFAULT_BUDGET).map_err(err)?.is_zero() {
            return Err(format!("{:?} n={}: {x} is not killed", space.label(), space.n()));
        }
    }
    Ok(count)
}

fn semantic_kernel() -> Verdict {
    let squares = flows(2..=4, &[2], |_| 3);
    let ss: Vec<usize> = squares
        .par_iter()
        .map(|(n, f)| {
            let a = annihilated(&ss_span(*n, f).map_err(err)?)?;
            let b = annihilated(&ss_prime_span(*n, f).map_err(err)?)?;
            Ok(a + b)
        })
        .collect::<Result<_, String>>()?;
    let sweep = flows(1..=4, &[0, 1, 2, 3], |k| if k == 3 { 2 } else { 3 });
    let kek: Vec<usize> = sweep
        .par_iter()
        .map(|(n, f)| Ok(annihilated(&apr_span(*n, f))? + annihilated(&aqr_span(*n, f))?))
        .collect::<Result<_, String>>()?;
    let hex = apr_span(4, &hexagon());
    check(!hex.is_empty(), || "no hexagon relation at n = 4".into())?;
    Ok(format!(
        "{} SS/SS' and {} APR/AQR elements map to zero over {} flow sets",
        ss.iter().sum::<usize>(),
        kek.iter().sum::<usize>(),
        squares.len() + sweep.len()
    ))
}

fn exactness() -> Verdict {
    let f = hexagon();
    let r = kernel_rank(4, &f, &[Family::P], DEFAULT_BUDGET).map_err(err)?;
    let apr = apr_span(4, &f);
    let k = r.identified();
    let apr_dim = identified_rank(&k.webs, apr.elements());
    check(k.dim() == 1 && apr_dim == 1, || {
        format!("hexagon P kernel {} vs APR {apr_dim}", k.dim())
    })?;
    check(r.nullity() == expected_raw_nullity(&r, apr.raw()), || {
        format!("raw hexagon P nullity {} is not the APR span", r.nullity())
    })?;
    let squares = canonical_flows(4, 2, 3);
    for f in &squares {
        let r = kernel_rank(4, f, &[Family::P, Family::Q], DEFAULT_BUDGET).map_err(err)?;
        let ss = ss_span(4, f).map_err(err)?;
        let ident = r.identified();
        let want = identified_rank(&ident.webs, ss.elements());
        check(r.nullity() == expected_raw_nullity(&r, ss.raw()) && ident.dim() == want, || {
            format!("n=4 {f}: kernel {} vs SS {want}", ident.dim())
        })?;
    }
    Ok(format!("hexagon kernel 1 = APR; {} square flow sets have kernel = SS span", squares.len()))
}

fn inductive() -> Verdict {
    let mut spaces = Vec::new();
    for (n, f) in flows(3..=5, &[0, 1, 2, 3], |_| 2) {
        if f.k() == 2 {
            spaces.push(ss_span(n, &f).map_err(err)?);
        }
        spaces.push(apr_span(n, &f));
    }
    let reports: Vec<_> = spaces.par_iter().map(verify_kernel_inductive).collect();
    if let Some(r) = reports.iter().find(|r| !r.passed()) {
        return Err(format!("{} n={} {:?} {:?}: {:?}", r.label, r.n, r.a, r.b, r.failures));
    }
    let entries: usize = reports.iter().map(|r| r.entries_checked).sum();
    let witnesses: usize = reports.iter().map(|r| r.witnesses.len()).sum();
    check(entries == witnesses, || format!("{entries} entries but {witnesses} witnesses"))?;
    Ok(format!("{} spaces, {entries} dGT entries certified with witnesses", reports.len()))
}

fn commuting_square() -> Verdict {
    let webs: Vec<_> = flows(3..=4, &[2], |_| 3)
        .into_iter()
        .flat_map(|(n, f)| webs_on(n, &f))
        .collect();
    let reports = webs
        .par_iter()
        .map(|w| commuting_square_check(w, DEFAULT_BUDGET))
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    let mut units = BTreeSet::new();
    let mut entries = 0;
    for r in &reports {
        for e in &r.entries {
            entries += 1;
            match (&e.matches, &e.unit) {
                (true, _) => {
                    units.insert("1".to_owned());
                }
                (false, Some(u)) => {
                    units.insert(u.clone());
                }
                (false, None) => return Err(format!("{} at {:?}: not proportional", r.web, e.s)),
            }
        }
    }
    let units: Vec<String> = units.into_iter().collect();
    let line = format!("{} squares, {entries} entries, global unit {}", reports.len(), units.join(" / "));
    if units.len() == 1 {
        Ok(line)
    } else {
        Err(line)
    }
}

fn closed_values() -> Verdict {
    for n in 0..=5u32 {
        for l in 0..=n {
            let v = circle(n, l).map_err(err)?;
            check(v == qbinom(n.into(), l.into()), || format!("circle n={n} l={l} = {v}"))?;
        }
    }
    for conv in [TagConvention::Plain, TagConvention::Signed] {
        for n in 1..=4u32 {
            for k in 0..=n {
                for l in k..=n {
                    let t = bigon(n, k, l, conv).map_err(err)?;
                    let want = id(n, k).scale(&qbinom(i64::from(n - k), i64::from(l - k)));
                    check(t == want, || format!("{conv:?} bigon n={n} k={k} l={l}"))?;
                }
            }
        }
    }
    let kup = circle(3, 1).map_err(err)?.to_string();
    check(kup == "q^-2 + 1 + q^2", || format!("n=3 loop is {kup}"))?;
    Ok(format!("circles n<=5, bigons n<=4 both tag conventions, n=3 loop {kup}"))
}

fn representation_invariants() -> Verdict {
    let mut checks = 0usize;
    for n in 1..=5u32 {
        for a in 0..=n {
            let v = build_irrep(n, a).map_err(err)?;
            check(hopf_violations(v.action()).is_empty(), || format!("Hopf V_{a}^{n}"))?;
            check(hopf_violations(&dual_action(&v)).is_empty(), || format!("Hopf dual V_{a}^{n}"))?;
            checks += 2;
            if 0 < a && a < n {
                let (ni, ai) = (i64::from(n), i64::from(a));
                let t = tau_diag(n, a).map_err(err)?;
                let up = tau_diag(n - 1, a - 1).map_err(err)?;
                let lo = tau_diag(n - 1, a).map_err(err)?;
                let want: Vec<LaurentPoly> = up
                    .iter()
                    .map(|x| x * &LaurentPoly::q_pow(ni - ai))
                    .chain(lo.iter().map(|x| x * &LaurentPoly::q_pow(-ai)))
                    .collect();
                check(t.as_slice() == want.as_slice(), || format!("tau recursion n={n} a={a}"))?;
                checks += 1;
            }
            let d = d_matrix(n, a).map_err(err)?;
            let t = Matrix::diagonal(tau_diag(n, n - a).map_err(err)?.to_vec());
            let rhs = d_matrix(n, n - a).map_err(err)?.scale(&sign((n + 1) * a));
            check(d.transpose().mul(&t) == rhs, || format!("d sign law n={n} a={a}"))?;
            check(d_map(n, a).map_err(err)?.is_equivariant().map_err(err)?, || format!("d n={n} a={a}"))?;
            checks += 2;
        }
    }
    for n in 1..=4u32 {
        let ni = i64::from(n);
        for a in 0..=ni {
            for b in 0..=ni - a {
                let c = ni - a - b;
                let o = vout(n, a, b, c).map_err(err)?;
                let i = vin(n, a, b, c).map_err(err)?;
                check(o.is_equivariant().map_err(err)?, || format!("vout {n};{a},{b},{c}"))?;
                check(i.is_equivariant().map_err(err)?, || format!("vin {n};{a},{b},{c}"))?;
                checks += 2;
            }
        }
        for a in 0..=n {
            let id_v = id(n, a);
            let id_d = EquivariantTensor::identity(n, RepObject::new(vec![Factor::dual(a)]));
            let pl = pairing(n, a, Side::Left).map_err(err)?;
            let pr = pairing(n, a, Side::Right).map_err(err)?;
            let cl = copairing(n, a, Side::Left).map_err(err)?;
            let cr = copairing(n, a, Side::Right).map_err(err)?;
            for t in [&pl, &pr, &cl, &cr] {
                check(t.is_equivariant().map_err(err)?, || format!("pairing n={n} a={a}"))?;
            }
            let zigzags = [
                (pl.tensor(&id_d).and_then(|x| x.compose(&id_d.tensor(&cr)?)), &id_d),
                (id_v.tensor(&pl).and_then(|x| x.compose(&cr.tensor(&id_v)?)), &id_v),
                (pr.tensor(&id_v).and_then(|x| x.compose(&id_v.tensor(&cl)?)), &id_v),
                (id_d.tensor(&pr).and_then(|x| x.compose(&cl.tensor(&id_d)?)), &id_d),
            ];
            for (z, want) in zigzags {
                check(&z.map_err(err)? == want, || format!("zig-zag n={n} a={a}"))?;
            }
            checks += 8;
        }
    }
    for n in 2..=3u32 {
        let r = crossing(n).map_err(err)?;
        let one = id(n, 1);
        let r1 = r.tensor(&one).map_err(err)?;
        let r2 = one.tensor(&r).map_err(err)?;
        let lhs = r1.compose(&r2).and_then(|x| x.compose(&r1)).map_err(err)?;
        let rhs = r2.compose(&r1).and_then(|x| x.compose(&r2)).map_err(err)?;
        check(lhs == rhs && r.is_equivariant().map_err(err)?, || format!("braid n={n}"))?;
        checks += 1;
    }
    Ok(format!("{checks} exact matrix identities"))
}

fn orthogonality() -> Verdict {
    let sweep = flows(1..=5, &[0, 1, 2, 3], |k| if k == 3 { 3 } else { 4 });
    let (mut pairs, mut pulled) = (0usize, 0usize);
    for (n, f) in &sweep {
        let n = *n;
        let d = apr_span(n, f);
        for e in apr_complement(n, f) {
            for x in d.raw() {
                let p = pair(&e, x).map_err(err)?;
                check(p.is_zero(), || format!("<e_{}, d> = {p} at n={n} {f}", e.j_star()))?;
                pairs += 1;
            }
        }
        if n < 2 || !f.is_admissible(n - 1) || i64::from(n) - 1 + f.sum_a() - f.sum_b() < 0 {
            continue;
        }
        let upper = apr_complement(n, f);
        for g in apr_complement(n - 1, f) {
            let Some(e) = upper.iter().find(|e| e.j_star() == g.j_star()) else {
                continue;
            };
            let a1 = f.a().first().copied().unwrap_or(0);
            let want = e.scale(&LaurentPoly::q_pow(g.j_star() - a1 + f.sum_b()));
            check(dgt_empty_pullback(&g) == want, || format!("pullback n={n} {f} j*={}", g.j_star()))?;
            pulled += 1;
        }
    }
    Ok(format!("{pairs} pairings vanish, {pulled} pullbacks match over {} flow sets", sweep.len()))
}

fn negative_control() -> Verdict {
    let f = hexagon();
    let r = kernel_rank(4, &f, &[Family::P, Family::Q], DEFAULT_BUDGET).map_err(err)?;
    let k = r.identified();
    let apr = apr_span(4, &f);
    let aqr = aqr_span(4, &f);
    let both: Vec<WebSum> = apr.elements().iter().chain(aqr.elements()).cloned().collect();
    let (dp, dq) = (identified_rank(&k.webs, apr.elements()), identified_rank(&k.webs, aqr.elements()));
    let sum = identified_rank(&k.webs, &both);
    let overlap = dp + dq - sum;
    let mut raw = apr.raw().to_vec();
    raw.extend(aqr.raw().iter().cloned());
    check(r.nullity() == expected_raw_nullity(&r, &raw), || {
        format!("raw kernel {} exceeds APR + AQR + identifications", r.nullity())
    })?;
    let line = format!(
        "{} hexagon webs, kernel {} = APR {dp} + AQR {dq} - overlap {overlap}",
        k.webs.len(),
        k.dim()
    );
    if k.dim() == sum {
        Ok(line)
    } else {
        Err(line)
    }
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("q-identity sweeps", identities),
        ("golden tables", golden_tables),
        ("semantic kernel", semantic_kernel),
        ("exactness", exactness),
        ("inductive structure", inductive),
        ("commuting square", commuting_square),
        ("loop and bigon values", closed_values),
        ("representation invariants", representation_invariants),
        ("orthogonality and pullback", orthogonality),
        ("hexagon negative control", negative_control),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let v = f();
        let secs = t.elapsed().as_secs_f64();
        match v {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail} [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {detail} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
