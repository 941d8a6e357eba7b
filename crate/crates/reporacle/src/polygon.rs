use std::collections::HashMap;
use std::sync::Arc;

use polygons::{Family, PolygonWeb, WebSum};
use qalgebra::LaurentPoly;

use crate::maps::{d_matrix, index_of, tau_diag, vin_sparse, vout_sparse};
use crate::matrix::{inv_unit, Matrix};
use crate::tensor::{check_budget, EquivariantTensor, RepObject, DEFAULT_BUDGET};
use crate::OracleError;

/// A vertex of the polygon with legs (left internal, boundary, right internal),
/// its entries grouped by the left index.
struct Corner {
    left: i64,
    /// Weight the following internal edge by `τ` (after `+`-type vertices).
    twist: bool,
    by_left: HashMap<usize, Vec<(usize, usize, LaurentPoly)>>,
}

impl Corner {
    fn new(left: i64, twist: bool, entries: impl IntoIterator<Item = ([usize; 3], LaurentPoly)>) -> Self {
        let mut by_left: HashMap<usize, Vec<(usize, usize, LaurentPoly)>> = HashMap::new();
        for (k, v) in entries {
            if !v.is_zero() {
                by_left.entry(k[0]).or_default().push((k[1], k[2], v));
            }
        }
        Self { left, twist, by_left }
    }
}

/// `D · t` on the middle leg.
fn twist_middle(
    t: &[([usize; 3], LaurentPoly)],
    m: &Matrix,
    order: impl Fn([usize; 3]) -> [usize; 3],
) -> Vec<([usize; 3], LaurentPoly)> {
    let mut acc: HashMap<[usize; 3], LaurentPoly> = HashMap::new();
    for (k, v) in t {
        let k = order(*k);
        for j in 0..m.rows() {
            let x = m.get(j, k[1]);
            if !x.is_zero() {
                *acc.entry([k[0], j, k[2]]).or_insert_with(LaurentPoly::zero) += &(x * v);
            }
        }
    }
    acc.into_iter().collect()
}

fn p_corners(w: &PolygonWeb) -> Result<Vec<Corner>, OracleError> {
    let n = w.n();
    let ni = i64::from(n);
    let (f, l) = (w.flows(), w.l());
    let k = f.k();
    let mut out = Vec::with_capacity(2 * k);
    for i in (1..=k).rev() {
        let (ai, bi, ai1) = (f.a_at(i), f.b_at(i), f.a_at(i + 1));
        // incoming boundary edge b_i - a_{i+1}
        let (lt, bt, rt) = (ni + ai1 - l, bi - ai1, l - bi);
        let vi = vin_sparse(n, rt, bt, lt)?;
        out.push(Corner::new(lt, false, vi.iter().map(|(x, v)| ([x[2], x[1], x[0]], v.clone()))));
        // outgoing boundary edge b_i - a_i
        let (lt, bt, rt) = (l - bi, bi - ai, ni + ai - l);
        let vo = vout_sparse(n, lt, bt, rt)?;
        out.push(Corner::new(lt, true, vo.iter().cloned()));
    }
    Ok(out)
}

fn q_corners(w: &PolygonWeb) -> Result<Vec<Corner>, OracleError> {
    let n = w.n();
    let ni = i64::from(n);
    let (f, l) = (w.flows(), w.l());
    let k = f.k();
    let mut out = Vec::with_capacity(2 * k);
    for i in (1..=k).rev() {
        let (ai, bi, ai1) = (f.a_at(i), f.b_at(i), f.a_at(i + 1));
        // split at the incoming edge b_i - a_{i+1}
        let x = bi - ai1;
        let (lt, rt) = (l - ai1, bi - l);
        let vo = vout_sparse(n, lt, ni - x, rt)?;
        let d = d_matrix(n, index_of(n, ni - x)?)?;
        out.push(Corner::new(lt, true, twist_middle(&vo, &d, |k| k)));
        // merge at the outgoing edge b_i - a_i
        let x = bi - ai;
        let (lt, rt) = (bi - l, l - ai);
        let vi = vin_sparse(n, rt, ni - x, lt)?;
        let dinv = d_matrix(n, index_of(n, x)?)?
            .unit_inverse()
            .expect("d is a signed permutation")
            .scale(&LaurentPoly::signed_q_pow((ni + 1) * x, 0));
        out.push(Corner::new(lt, false, twist_middle(&vi, &dinv, |k| [k[2], k[1], k[0]])));
    }
    Ok(out)
}

/// Tensor of a polygon web: an invariant vector in its boundary word.
pub fn rep_polygon(w: &PolygonWeb, budget: usize) -> Result<EquivariantTensor, OracleError> {
    let n = w.n();
    let target = RepObject::from_boundary(n, &w.boundary())?;
    if !polygons::l_range(w.family(), n, w.flows()).contains(&w.l()) || !w.flows().is_admissible(n) {
        return Err(OracleError::NotAdmissible(w.to_string()));
    }
    let dims = target.dims(n);
    let total: usize = dims.iter().product();
    check_budget(total, budget)?;
    if w.flows().k() == 0 {
        let t = tau_diag(n, index_of(n, w.l())?)?;
        let circle: LaurentPoly = t.iter().sum();
        return EquivariantTensor::new(n, RepObject::unit(), target, Matrix::from_data(1, 1, vec![circle]));
    }
    let corners = match w.family() {
        Family::P => p_corners(w)?,
        Family::Q => q_corners(w)?,
    };
    // state: (first left index, boundary indices so far, current right index)
    let mut state: HashMap<(usize, Vec<usize>, usize), LaurentPoly> = HashMap::new();
    for (x, rest) in &corners[0].by_left {
        for (y, z, v) in rest {
            state.insert((*x, vec![*y], *z), v.clone());
        }
    }
    for p in 1..corners.len() {
        let c = &corners[p];
        let weight: Option<Arc<Vec<LaurentPoly>>> = if corners[p - 1].twist {
            Some(tau_diag(n, index_of(n, c.left)?)?)
        } else {
            None
        };
        let mut next: HashMap<(usize, Vec<usize>, usize), LaurentPoly> = HashMap::new();
        for ((first, bs, r), v) in state {
            let Some(rows) = c.by_left.get(&r) else { continue };
            let v = match &weight {
                Some(t) => &v * &t[r],
                None => v,
            };
            for (y, z, u) in rows {
                let mut key = bs.clone();
                key.push(*y);
                *next.entry((first, key, *z)).or_insert_with(LaurentPoly::zero) += &(&v * u);
            }
        }
        next.retain(|_, v| !v.is_zero());
        check_budget(next.len(), budget)?;
        state = next;
    }
    // close the cycle across the first internal edge
    let closing = tau_diag(n, index_of(n, corners[0].left)?)?;
    let mut data = vec![LaurentPoly::zero(); total];
    for ((first, bs, r), v) in state {
        if first != r {
            continue;
        }
        let wgt = match w.family() {
            Family::P => &closing[r] * &closing[r],
            Family::Q => inv_unit(&closing[r]).expect("τ is a monomial"),
        };
        let at = crate::tensor::flatten(&dims, &bs);
        data[at] += &(&v * &wgt);
    }
    EquivariantTensor::new(n, RepObject::unit(), target, Matrix::from_data(total, 1, data))
}

/// Tensor of a linear combination of polygons on a common boundary.
pub fn rep_websum(x: &WebSum, budget: usize) -> Result<EquivariantTensor, OracleError> {
    let n = x.n();
    let target = RepObject::from_boundary(n, x.boundary())?;
    let mut total = EquivariantTensor::zeros(n, RepObject::unit(), target, budget)?;
    for (w, c) in x.terms() {
        total = total.add(&rep_polygon(w, budget)?.scale(c))?;
    }
    Ok(total)
}

pub fn rep_web(w: &PolygonWeb) -> Result<EquivariantTensor, OracleError> {
    rep_polygon(w, DEFAULT_BUDGET)
}
