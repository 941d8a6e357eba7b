use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use qalgebra::LaurentPoly;
use serde::Serialize;

use crate::irrep::{build_irrep, cached, dim, off0, Generator};
use crate::matrix::Matrix;
use crate::tensor::{EquivariantTensor, Factor, RepObject};
use crate::OracleError;

type Cache<K, V> = OnceLock<std::sync::Mutex<HashMap<K, Arc<V>>>>;

/// Nonzero entries of a three-leg vertex tensor.
pub type Sparse3 = Vec<([usize; 3], LaurentPoly)>;

fn check_index(n: u32, a: i64) -> Result<u32, OracleError> {
    if a < 0 || a > i64::from(n) {
        Err(OracleError::IndexOutOfRange { n, a })
    } else {
        Ok(a as u32)
    }
}

/// Diagonal of `τ_n = Π_j K_j^{j(n-j)}` on `V_a^n`.
pub fn tau_diag(n: u32, a: u32) -> Result<Arc<Vec<LaurentPoly>>, OracleError> {
    let rep = build_irrep(n, a)?;
    static CACHE: Cache<(u32, u32), Vec<LaurentPoly>> = OnceLock::new();
    Ok(cached(&CACHE, (n, a), || {
        let mut t = vec![LaurentPoly::one(); rep.dim()];
        for j in 1..n {
            let e = i64::from(j) * i64::from(n - j);
            let k = rep.gen(Generator::K(j));
            for (i, x) in t.iter_mut().enumerate() {
                let kij = k.get(i, i);
                let (_, p) = kij.as_monomial().expect("K is diagonal with monomial entries");
                *x = x.shift(p * e);
            }
        }
        t
    }))
}

pub fn tau(n: u32, a: u32) -> Result<EquivariantTensor, OracleError> {
    let d = tau_diag(n, a)?;
    let obj = RepObject::new(vec![Factor::plain(a)]);
    EquivariantTensor::new(n, obj.clone(), obj, Matrix::diagonal(d.to_vec()))
}

/// `d_{a,n}: V_a → V_{n-a}^*` as a `C(n, n-a) × C(n, a)` matrix.
pub fn d_matrix(n: u32, a: u32) -> Result<Arc<Matrix>, OracleError> {
    if a > n {
        return Err(OracleError::IndexOutOfRange { n, a: i64::from(a) });
    }
    static CACHE: Cache<(u32, u32), Matrix> = OnceLock::new();
    Ok(cached(&CACHE, (n, a), || {
        if a == 0 || a == n {
            return Matrix::identity(1);
        }
        let ai = i64::from(a);
        let mut m = Matrix::zeros(dim(n, i64::from(n - a)), dim(n, ai));
        // source i_{-1} block lands in the target i_0 block
        let up = d_matrix(n - 1, a - 1).expect("in range");
        let shift = off0(n, i64::from(n - a));
        for (j, i, x) in up.nonzeros() {
            m.add_at(j + shift, i, x);
        }
        let lo = d_matrix(n - 1, a).expect("in range");
        let c = LaurentPoly::signed_q_pow(ai, -ai);
        let shift = off0(n, ai);
        for (j, i, x) in lo.nonzeros() {
            m.add_at(j, i + shift, &(x * &c));
        }
        m
    }))
}

pub fn d_map(n: u32, a: u32) -> Result<EquivariantTensor, OracleError> {
    let m = d_matrix(n, a)?;
    EquivariantTensor::new(
        n,
        RepObject::new(vec![Factor::plain(a)]),
        RepObject::new(vec![Factor::dual(n - a)]),
        (*m).clone(),
    )
}

fn vertex_labels(n: u32, a: i64, b: i64, c: i64) -> Result<(u32, u32, u32), OracleError> {
    if a + b + c != i64::from(n) || a.min(b).min(c) < 0 {
        return Err(OracleError::VertexLabels { n, a, b, c });
    }
    Ok((a as u32, b as u32, c as u32))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Vertex {
    Out,
    In,
}

fn vertex_sparse(kind: Vertex, n: u32, a: u32, b: u32, c: u32) -> Arc<Sparse3> {
    static OUT: Cache<(u32, u32, u32, u32), Sparse3> = OnceLock::new();
    static IN: Cache<(u32, u32, u32, u32), Sparse3> = OnceLock::new();
    let cell = match kind {
        Vertex::Out => &OUT,
        Vertex::In => &IN,
    };
    cached(cell, (n, a, b, c), || {
        if n == 0 {
            return vec![([0, 0, 0], LaurentPoly::one())];
        }
        let (ai, bi, ci) = (i64::from(a), i64::from(b), i64::from(c));
        let (oa, ob, oc) = (off0(n, ai), off0(n, bi), off0(n, ci));
        let mut acc: HashMap<[usize; 3], LaurentPoly> = HashMap::new();
        let mut add = |sub: Arc<Sparse3>, coef: LaurentPoly, sh: [usize; 3]| {
            for (k, v) in sub.iter() {
                let key = [k[0] + sh[0], k[1] + sh[1], k[2] + sh[2]];
                *acc.entry(key).or_insert_with(LaurentPoly::zero) += &(v * &coef);
            }
        };
        let coefs = match kind {
            Vertex::Out => [
                LaurentPoly::signed_q_pow(ci, bi + ci),
                LaurentPoly::signed_q_pow(ai, ci),
                LaurentPoly::signed_q_pow(bi, 0),
            ],
            Vertex::In => [
                LaurentPoly::signed_q_pow(ci, 0),
                LaurentPoly::signed_q_pow(ai, -ai),
                LaurentPoly::signed_q_pow(bi, -ai - bi),
            ],
        };
        let [ca, cb, cc] = coefs;
        if a >= 1 {
            add(vertex_sparse(kind, n - 1, a - 1, b, c), ca, [0, ob, oc]);
        }
        if b >= 1 {
            add(vertex_sparse(kind, n - 1, a, b - 1, c), cb, [oa, 0, oc]);
        }
        if c >= 1 {
            add(vertex_sparse(kind, n - 1, a, b, c - 1), cc, [oa, ob, 0]);
        }
        let mut out: Sparse3 = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        out.sort_by_key(|x| x.0);
        out
    })
}

/// Entries of `v_out^n_{a,b,c} ∈ V_a ⊗ V_b ⊗ V_c`.
pub fn vout_sparse(n: u32, a: i64, b: i64, c: i64) -> Result<Arc<Sparse3>, OracleError> {
    let (a, b, c) = vertex_labels(n, a, b, c)?;
    Ok(vertex_sparse(Vertex::Out, n, a, b, c))
}

/// Entries of `v_in^n_{a,b,c}: V_a ⊗ V_b ⊗ V_c → 1`.
pub fn vin_sparse(n: u32, a: i64, b: i64, c: i64) -> Result<Arc<Sparse3>, OracleError> {
    let (a, b, c) = vertex_labels(n, a, b, c)?;
    Ok(vertex_sparse(Vertex::In, n, a, b, c))
}

fn three(n: u32, a: u32, b: u32, c: u32, entries: &Sparse3) -> Matrix {
    let (db, dc) = (dim(n, i64::from(b)), dim(n, i64::from(c)));
    let mut m = Matrix::zeros(dim(n, i64::from(a)) * db * dc, 1);
    for (k, v) in entries {
        m.set((k[0] * db + k[1]) * dc + k[2], 0, v.clone());
    }
    m
}

pub fn vout(n: u32, a: i64, b: i64, c: i64) -> Result<EquivariantTensor, OracleError> {
    let (ua, ub, uc) = vertex_labels(n, a, b, c)?;
    let m = three(n, ua, ub, uc, &vertex_sparse(Vertex::Out, n, ua, ub, uc));
    let word = RepObject::new(vec![Factor::plain(ua), Factor::plain(ub), Factor::plain(uc)]);
    EquivariantTensor::new(n, RepObject::unit(), word, m)
}

pub fn vin(n: u32, a: i64, b: i64, c: i64) -> Result<EquivariantTensor, OracleError> {
    let (ua, ub, uc) = vertex_labels(n, a, b, c)?;
    let m = three(n, ua, ub, uc, &vertex_sparse(Vertex::In, n, ua, ub, uc)).transpose();
    let word = RepObject::new(vec![Factor::plain(ua), Factor::plain(ub), Factor::plain(uc)]);
    EquivariantTensor::new(n, word, RepObject::unit(), m)
}

/// Which side of the strand the dual factor sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    Left,
    Right,
}

/// Caps. `Left`: `V_a^* ⊗ V_a → 1`, `f ⊗ v ↦ f(v)`.
/// `Right`: `V_a ⊗ V_a^* → 1`, `v ⊗ f ↦ f(τv)`.
pub fn pairing(n: u32, a: u32, side: Side) -> Result<EquivariantTensor, OracleError> {
    let d = build_irrep(n, a)?.dim();
    let t = tau_diag(n, a)?;
    let mut m = Matrix::zeros(1, d * d);
    for i in 0..d {
        let v = match side {
            Side::Left => LaurentPoly::one(),
            Side::Right => t[i].clone(),
        };
        m.set(0, i * d + i, v);
    }
    let word = match side {
        Side::Left => vec![Factor::dual(a), Factor::plain(a)],
        Side::Right => vec![Factor::plain(a), Factor::dual(a)],
    };
    EquivariantTensor::new(n, RepObject::new(word), RepObject::unit(), m)
}

/// Cups. `Right`: `1 → V_a ⊗ V_a^*`, `Σ e_i ⊗ f_i`.
/// `Left`: `1 → V_a^* ⊗ V_a`, `Σ f_i ⊗ τ^-1 e_i`.
pub fn copairing(n: u32, a: u32, side: Side) -> Result<EquivariantTensor, OracleError> {
    let d = build_irrep(n, a)?.dim();
    let t = tau_diag(n, a)?;
    let mut m = Matrix::zeros(d * d, 1);
    for i in 0..d {
        let v = match side {
            Side::Right => LaurentPoly::one(),
            Side::Left => crate::matrix::inv_unit(&t[i]).expect("τ is a monomial"),
        };
        m.set(i * d + i, 0, v);
    }
    let word = match side {
        Side::Left => vec![Factor::dual(a), Factor::plain(a)],
        Side::Right => vec![Factor::plain(a), Factor::dual(a)],
    };
    EquivariantTensor::new(n, RepObject::unit(), RepObject::new(word), m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FlowKind {
    Merge,
    Split,
}

/// How the hidden tag on a flow vertex is resolved.
///
/// `Plain` contracts the trivalent vertex with `d^{±1}` and nothing else; the
/// I=H relation then carries the sign `(-1)^{(n+1)a}`, and a zero leg gives
/// `(-1)^{(n+1)a}·id`. `Signed` multiplies by `(-1)^{(n+1)(a+b)}` so that a
/// zero leg on the right degenerates to the identity exactly; I=H then
/// carries `(-1)^{(n+1)c}` instead.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub enum TagConvention {
    #[default]
    Plain,
    Signed,
}

/// Merge `V_a ⊗ V_b → V_{a+b}` or split `V_{a+b} → V_a ⊗ V_b`.
pub fn flow_vertex(
    n: u32,
    kind: FlowKind,
    a: u32,
    b: u32,
    convention: TagConvention,
) -> Result<EquivariantTensor, OracleError> {
    let s = a + b;
    if s > n {
        return Err(OracleError::VertexLabels {
            n,
            a: i64::from(a),
            b: i64::from(b),
            c: i64::from(n) - i64::from(s),
        });
    }
    let c = n - s;
    let (da, db, ds) = (dim(n, a.into()), dim(n, b.into()), dim(n, s.into()));
    let sign = match convention {
        TagConvention::Plain => LaurentPoly::one(),
        TagConvention::Signed => LaurentPoly::signed_q_pow(i64::from((n + 1) * s), 0),
    };
    let pair = RepObject::new(vec![Factor::plain(a), Factor::plain(b)]);
    let thick = RepObject::new(vec![Factor::plain(s)]);
    match kind {
        FlowKind::Merge => {
            // d_{s,n}^{-1}: V_c^* → V_s
            let dinv = d_matrix(n, s)?.unit_inverse().expect("d is a signed permutation");
            let mut m = Matrix::zeros(ds, da * db);
            for (k, v) in vin_sparse(n, a.into(), b.into(), c.into())?.iter() {
                let col = k[0] * db + k[1];
                for o in 0..ds {
                    let x = dinv.get(o, k[2]);
                    if !x.is_zero() {
                        m.add_at(o, col, &(&(x * v) * &sign));
                    }
                }
            }
            EquivariantTensor::new(n, pair, thick, m)
        }
        FlowKind::Split => {
            let d = d_matrix(n, s)?;
            let mut m = Matrix::zeros(da * db, ds);
            for (k, v) in vout_sparse(n, c.into(), a.into(), b.into())?.iter() {
                let row = k[1] * db + k[2];
                for x in 0..ds {
                    let y = d.get(k[0], x);
                    if !y.is_zero() {
                        m.add_at(row, x, &(&(y * v) * &sign));
                    }
                }
            }
            EquivariantTensor::new(n, thick, pair, m)
        }
    }
}

/// Positive crossing on `V_1 ⊗ V_1`: `q^{n-1}·Id - q^n·p` with `p` the
/// composite through a `V_2` edge.
pub fn crossing(n: u32) -> Result<EquivariantTensor, OracleError> {
    if n < 2 {
        return Err(OracleError::IndexOutOfRange { n, a: 2 });
    }
    let ni = i64::from(n);
    let d = n as usize;
    let vi = vin_sparse(n, 1, 1, ni - 2)?;
    let vo = vout_sparse(n, ni - 2, 1, 1)?;
    let mut p = Matrix::zeros(d * d, d * d);
    for (x, v) in vi.iter() {
        for (y, w) in vo.iter().filter(|(y, _)| y[0] == x[2]) {
            p.add_at(y[1] * d + y[2], x[0] * d + x[1], &(v * w));
        }
    }
    let r = Matrix::identity(d * d)
        .scale(&LaurentPoly::q_pow(ni - 1))
        .sub(&p.scale(&LaurentPoly::q_pow(ni)));
    let obj = RepObject::new(vec![Factor::plain(1), Factor::plain(1)]);
    EquivariantTensor::new(n, obj.clone(), obj, r)
}

pub(crate) fn index_of(n: u32, a: i64) -> Result<u32, OracleError> {
    check_index(n, a)
}
