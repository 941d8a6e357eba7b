use qalgebra::LaurentPoly;

use crate::maps::{copairing, flow_vertex, pairing, FlowKind, Side, TagConvention};
use crate::tensor::{EquivariantTensor, Factor, RepObject};
use crate::OracleError;

/// A closed loop labelled `a`, evaluated with the τ-weighted cap.
pub fn circle(n: u32, a: u32) -> Result<LaurentPoly, OracleError> {
    let t = pairing(n, a, Side::Right)?.compose(&copairing(n, a, Side::Right)?)?;
    Ok(t.matrix().data()[0].clone())
}

/// The bigon on `V_k` with total label `l`: merge `V_k ⊗ V_{l-k}` into
/// `V_l`, split back and close the `l - k` strand on the right.
pub fn bigon(n: u32, k: u32, l: u32, convention: TagConvention) -> Result<EquivariantTensor, OracleError> {
    if k > l || l > n {
        return Err(OracleError::NotAdmissible(format!("bigon ({k}, {l}) at n = {n}")));
    }
    let m = l - k;
    let merge = flow_vertex(n, FlowKind::Merge, k, m, convention)?;
    let split = flow_vertex(n, FlowKind::Split, k, m, convention)?;
    let id_k = EquivariantTensor::identity(n, RepObject::new(vec![Factor::plain(k)]));
    let id_md = EquivariantTensor::identity(n, RepObject::new(vec![Factor::dual(m)]));
    let cup = id_k.tensor(&copairing(n, m, Side::Right)?)?;
    let cap = id_k.tensor(&pairing(n, m, Side::Right)?)?;
    cap.compose(&split.compose(&merge)?.tensor(&id_md)?)?.compose(&cup)
}
