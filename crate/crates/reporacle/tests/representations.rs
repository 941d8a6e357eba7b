use qalgebra::{qbinom, LaurentPoly};
use reporacle::*;

fn q(e: i64) -> LaurentPoly {
    LaurentPoly::q_pow(e)
}

fn sign(e: i64) -> LaurentPoly {
    LaurentPoly::signed_q_pow(e, 0)
}

#[test]
fn dimensions_and_branching() {
    assert_eq!(build_irrep(3, 1).unwrap().dim(), 3);
    for n in 1..=6u32 {
        for a in 0..=n {
            let v = build_irrep(n, a).unwrap();
            assert_eq!(v.dim(), dim(n, a.into()));
            if 0 < a && a < n {
                assert_eq!(v.dim(), dim(n - 1, i64::from(a) - 1) + dim(n - 1, a.into()));
            }
            // the i_{-1} block is exactly the labels containing n
            let o = off0(n, a.into());
            assert!(v.basis()[..o].iter().all(|s| s.contains(&n)));
            assert!(v.basis()[o..].iter().all(|s| !s.contains(&n)));
        }
    }
    assert!(matches!(build_irrep(3, 4), Err(OracleError::IndexOutOfRange { .. })));
}

#[test]
fn hopf_relations() {
    for n in 1..=5u32 {
        for a in 0..=n {
            let v = build_irrep(n, a).unwrap();
            assert!(hopf_violations(v.action()).is_empty(), "V_{a}^{n}: {:?}", hopf_violations(v.action()));
            let d = dual_action(&v);
            assert!(hopf_violations(&d).is_empty(), "V_{a}^{n}*: {:?}", hopf_violations(&d));
            for i in 1..n {
                assert!(v.gen(Generator::K(i)).is_diagonal());
            }
        }
    }
}

#[test]
fn dual_top_raising_operator() {
    // -q times the map from the i_{-1} block to the i_0 block
    let v = build_irrep(3, 1).unwrap();
    let d = dual_action(&v);
    let e = d.get(Generator::E(2));
    let o = off0(3, 1);
    let nz: Vec<_> = e.nonzeros().collect();
    assert!(!nz.is_empty());
    for (i, j, x) in nz {
        assert!(i >= o && j < o, "entry ({i},{j})");
        assert_eq!(x, &LaurentPoly::signed_q_pow(1, 1));
    }
    // trivial dual
    let t = build_irrep(3, 0).unwrap();
    assert_eq!(&dual_action(&t), t.action());
}

#[test]
fn double_dual_is_tau_conjugation() {
    for n in 2..=4u32 {
        for a in 0..=n {
            let v = build_irrep(n, a).unwrap();
            let dd = v.action().dual().dual();
            let t = tau(n, a).unwrap();
            let tinv = t.matrix().unit_inverse().unwrap();
            for g in Generator::all(n) {
                let want = t.matrix().mul(v.gen(g)).mul(&tinv);
                assert_eq!(dd.get(g), &want, "n={n} a={a} {g}");
            }
        }
    }
}

#[test]
fn tau_properties() {
    assert_eq!(tau_diag(3, 0).unwrap().as_slice(), &[LaurentPoly::one()]);
    // Π K_j^j on V_1^4
    let v = build_irrep(4, 1).unwrap();
    let mut prod = reporacle::Matrix::identity(4);
    for j in 1..4u32 {
        for _ in 0..j {
            prod = prod.mul(v.gen(Generator::K(j)));
        }
    }
    let o = off0(4, 1);
    for i in 0..4 {
        let want = if i < o { q(4 - 1) } else { q(-1) };
        assert_eq!(prod.get(i, i), &want);
    }
    for n in 1..=5u32 {
        for a in 0..=n {
            let t = tau_diag(n, a).unwrap();
            assert!(t.iter().all(|x| x.as_monomial().is_some_and(|(c, _)| *c == 1.into())));
            if 0 < a && a < n {
                // τ_n = q^{n-a} i_{-1} τ_{n-1} p_{-1} + q^{-a} i_0 τ_{n-1} p_0
                let (ni, ai) = (i64::from(n), i64::from(a));
                let up = tau_diag(n - 1, a - 1).unwrap();
                let lo = tau_diag(n - 1, a).unwrap();
                let want: Vec<LaurentPoly> = up
                    .iter()
                    .map(|x| x * &q(ni - ai))
                    .chain(lo.iter().map(|x| x * &q(-ai)))
                    .collect();
                assert_eq!(t.as_slice(), want.as_slice(), "n={n} a={a}");
            }
        }
    }
}

#[test]
fn d_maps() {
    for n in 0..=5u32 {
        assert_eq!(d_matrix(n, 0).unwrap().as_ref(), &reporacle::Matrix::identity(1));
        for a in 0..=n {
            let d = d_map(n, a).unwrap();
            assert!(d.is_equivariant().unwrap(), "d_{a},{n}");
            assert!(d.matrix().unit_inverse().is_some());
        }
    }
    for n in 3..=5u32 {
        for a in 0..=n {
            // dᵀ ∘ τ = (-1)^{(n+1)a} d_{n-a}
            let d = d_matrix(n, a).unwrap();
            let t = reporacle::Matrix::diagonal(tau_diag(n, n - a).unwrap().to_vec());
            let lhs = d.transpose().mul(&t);
            let rhs = d_matrix(n, n - a).unwrap().scale(&sign(i64::from((n + 1) * a)));
            assert_eq!(lhs, rhs, "n={n} a={a}");
        }
    }
}

#[test]
fn vertices() {
    let v0 = vout(0, 0, 0, 0).unwrap();
    assert_eq!(v0.matrix().data(), &[LaurentPoly::one()]);
    for n in 0..=4u32 {
        let ni = i64::from(n);
        for a in 0..=ni {
            for b in 0..=ni - a {
                let c = ni - a - b;
                let o = vout(n, a, b, c).unwrap();
                let i = vin(n, a, b, c).unwrap();
                assert!(o.is_equivariant().unwrap(), "vout {n};{a},{b},{c}");
                assert!(i.is_equivariant().unwrap(), "vin {n};{a},{b},{c}");
                let s = i.compose(&o).unwrap();
                assert!(!s.is_zero(), "vin∘vout vanishes for {n};{a},{b},{c}");
            }
        }
    }
    assert!(matches!(vout(3, 1, 1, 2), Err(OracleError::VertexLabels { .. })));
}

#[test]
fn pairings_and_zigzags() {
    for n in 1..=4u32 {
        for a in 0..=n {
            let id_v = EquivariantTensor::identity(n, RepObject::new(vec![Factor::plain(a)]));
            let id_d = EquivariantTensor::identity(n, RepObject::new(vec![Factor::dual(a)]));
            let pl = pairing(n, a, Side::Left).unwrap();
            let pr = pairing(n, a, Side::Right).unwrap();
            let cl = copairing(n, a, Side::Left).unwrap();
            let cr = copairing(n, a, Side::Right).unwrap();
            for t in [&pl, &pr, &cl, &cr] {
                assert!(t.is_equivariant().unwrap(), "n={n} a={a} {} → {}", t.source(), t.target());
            }
            let z1 = pl.tensor(&id_d).unwrap().compose(&id_d.tensor(&cr).unwrap()).unwrap();
            assert_eq!(z1, id_d);
            let z2 = id_v.tensor(&pl).unwrap().compose(&cr.tensor(&id_v).unwrap()).unwrap();
            assert_eq!(z2, id_v);
            let z3 = pr.tensor(&id_v).unwrap().compose(&id_v.tensor(&cl).unwrap()).unwrap();
            assert_eq!(z3, id_v);
            let z4 = id_d.tensor(&pr).unwrap().compose(&cl.tensor(&id_d).unwrap()).unwrap();
            assert_eq!(z4, id_d);
        }
    }
    for n in 0..=5u32 {
        for a in 0..=n {
            assert_eq!(circle(n, a).unwrap(), qbinom(n.into(), a.into()));
            if a == 0 {
                assert_eq!(circle(n, a).unwrap(), LaurentPoly::one());
            }
        }
    }
}

fn merge(n: u32, a: u32, b: u32, c: TagConvention) -> EquivariantTensor {
    flow_vertex(n, FlowKind::Merge, a, b, c).unwrap()
}

fn split(n: u32, a: u32, b: u32, c: TagConvention) -> EquivariantTensor {
    flow_vertex(n, FlowKind::Split, a, b, c).unwrap()
}

fn id(n: u32, a: u32) -> EquivariantTensor {
    EquivariantTensor::identity(n, RepObject::new(vec![Factor::plain(a)]))
}

#[test]
fn flow_vertices_equivariant_and_degenerate() {
    for conv in [TagConvention::Plain, TagConvention::Signed] {
        for n in 1..=4u32 {
            for a in 0..=n {
                for b in 0..=n - a {
                    assert!(merge(n, a, b, conv).is_equivariant().unwrap(), "{conv:?} merge {n};{a},{b}");
                    assert!(split(n, a, b, conv).is_equivariant().unwrap(), "{conv:?} split {n};{a},{b}");
                }
                let s = sign(i64::from((n + 1) * a));
                let (m0, s0) = (merge(n, a, 0, conv), split(n, a, 0, conv));
                match conv {
                    TagConvention::Signed => {
                        assert_eq!(m0.matrix(), id(n, a).matrix());
                        assert_eq!(s0.matrix(), id(n, a).matrix());
                    }
                    TagConvention::Plain => {
                        assert_eq!(m0.matrix(), &id(n, a).matrix().scale(&s));
                        assert_eq!(s0.matrix(), &id(n, a).matrix().scale(&s));
                    }
                }
            }
        }
    }
    assert!(flow_vertex(3, FlowKind::Merge, 2, 2, TagConvention::Plain).is_err());
}

#[test]
fn bigons() {
    for conv in [TagConvention::Plain, TagConvention::Signed] {
        for n in 1..=4u32 {
            for k in 0..=n {
                for m in 0..=n - k {
                    let want = id(n, k).scale(&qbinom(i64::from(n - k), m.into()));
                    assert_eq!(bigon(n, k, k + m, conv).unwrap(), want, "{conv:?} n={n} k={k} m={m}");
                }
            }
        }
    }
    // Temperley-Lieb bigon at n = 2
    let sm = split(2, 1, 1, TagConvention::Plain).compose(&merge(2, 1, 1, TagConvention::Plain)).unwrap();
    let trace = (0..4).fold(LaurentPoly::zero(), |acc, i| &acc + sm.matrix().get(i, i));
    let ms = merge(2, 1, 1, TagConvention::Plain).compose(&split(2, 1, 1, TagConvention::Plain)).unwrap();
    assert_eq!(trace, qalgebra::qint(2));
    assert_eq!(ms.matrix().data(), &[trace]);
}

#[test]
fn i_equals_h() {
    for n in 1..=4u32 {
        for a in 0..=n {
            for b in 0..=n - a {
                for c in 0..=n - a - b {
                    for conv in [TagConvention::Plain, TagConvention::Signed] {
                        let h = merge(n, a + b, c, conv).compose(&merge(n, a, b, conv).tensor(&id(n, c)).unwrap()).unwrap();
                        let i = merge(n, a, b + c, conv).compose(&id(n, a).tensor(&merge(n, b, c, conv)).unwrap()).unwrap();
                        let e = match conv {
                            TagConvention::Plain => a,
                            TagConvention::Signed => c,
                        };
                        assert_eq!(i, h.scale(&sign(i64::from((n + 1) * e))), "{conv:?} n={n} {a},{b},{c}");
                    }
                }
            }
        }
    }
}

#[test]
fn crossing_braid_relation() {
    for n in 2..=4u32 {
        let r = crossing(n).unwrap();
        assert!(r.is_equivariant().unwrap(), "n={n}");
        let one = id(n, 1);
        let r1 = r.tensor(&one).unwrap();
        let r2 = one.tensor(&r).unwrap();
        let lhs = r1.compose(&r2).unwrap().compose(&r1).unwrap();
        let rhs = r2.compose(&r1).unwrap().compose(&r2).unwrap();
        assert_eq!(lhs, rhs, "n={n}");
    }
    assert!(crossing(1).is_err());
}

#[test]
fn budget_refusal() {
    let big = RepObject::new(vec![Factor::plain(2); 8]);
    assert!(matches!(
        EquivariantTensor::zeros(4, RepObject::unit(), big, DEFAULT_BUDGET),
        Err(OracleError::BudgetExceeded { .. })
    ));
}
