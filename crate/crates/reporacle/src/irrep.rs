use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use qalgebra::LaurentPoly;
use serde::Serialize;

use crate::matrix::{inv_unit, Matrix};
use crate::OracleError;

/// Chevalley generators `E_i = X_i^+`, `F_i = X_i^-`, `K_i` and `K_i^{-1}`, `i = 1..n-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Generator {
    E(u32),
    F(u32),
    K(u32),
    KInv(u32),
}

impl Generator {
    pub fn index(self) -> u32 {
        match self {
            Generator::E(i) | Generator::F(i) | Generator::K(i) | Generator::KInv(i) => i,
        }
    }

    /// `E_i, F_i, K_i` for every `i`; enough to test equivariance.
    pub fn all(n: u32) -> impl Iterator<Item = Generator> {
        (1..n).flat_map(|i| [Generator::E(i), Generator::F(i), Generator::K(i)])
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::E(i) => write!(f, "E{i}"),
            Generator::F(i) => write!(f, "F{i}"),
            Generator::K(i) => write!(f, "K{i}"),
            Generator::KInv(i) => write!(f, "K{i}^-1"),
        }
    }
}

/// Matrices of the generators on some module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Action {
    n: u32,
    dim: usize,
    e: Vec<Matrix>,
    f: Vec<Matrix>,
    k: Vec<Matrix>,
    kinv: Vec<Matrix>,
}

impl Action {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, g: Generator) -> &Matrix {
        let i = g.index() as usize - 1;
        match g {
            Generator::E(_) => &self.e[i],
            Generator::F(_) => &self.f[i],
            Generator::K(_) => &self.k[i],
            Generator::KInv(_) => &self.kinv[i],
        }
    }

    fn trivial(n: u32) -> Self {
        let z = Matrix::zeros(1, 1);
        let one = Matrix::identity(1);
        let m = n.saturating_sub(1) as usize;
        Self {
            n,
            dim: 1,
            e: vec![z.clone(); m],
            f: vec![z; m],
            k: vec![one.clone(); m],
            kinv: vec![one; m],
        }
    }
}

/// The fundamental representation `V_a^n = Λ^a C^n` in its Gel'fand-Tsetlin basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irrep {
    a: u32,
    basis: Vec<Vec<u32>>,
    action: Action,
}

impl Irrep {
    pub fn n(&self) -> u32 {
        self.action.n
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn dim(&self) -> usize {
        self.action.dim
    }

    /// GT labels as `a`-subsets of `1..=n`; those containing `n` come first.
    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn action(&self) -> &Action {
        &self.action
    }

    pub fn gen(&self, g: Generator) -> &Matrix {
        self.action.get(g)
    }
}

pub fn dim(n: u32, a: i64) -> usize {
    if a < 0 || a > i64::from(n) {
        return 0;
    }
    let (n, a) = (n as u64, a as u64);
    let mut c: u64 = 1;
    for i in 0..a {
        c = c * (n - i) / (i + 1);
    }
    c as usize
}

/// Size of the `i_{-1}` block of `V_a^n`, i.e. the offset of the `i_0` block.
pub fn off0(n: u32, a: i64) -> usize {
    if n == 0 {
        0
    } else {
        dim(n - 1, a - 1)
    }
}

type Cache<K, V> = OnceLock<Mutex<HashMap<K, Arc<V>>>>;

pub(crate) fn cached<K, V>(cell: &'static Cache<K, V>, key: K, build: impl FnOnce() -> V) -> Arc<V>
where
    K: std::hash::Hash + Eq,
{
    let map = cell.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = map.lock().expect("cache poisoned").get(&key) {
        return v.clone();
    }
    // built outside the lock: constructions recurse into the same cache
    let v = Arc::new(build());
    map.lock().expect("cache poisoned").entry(key).or_insert(v).clone()
}

fn block_diag(upper: &Matrix, lower: &Matrix) -> Matrix {
    let (d1, d0) = (upper.rows(), lower.rows());
    let mut m = Matrix::zeros(d1 + d0, d1 + d0);
    for (i, j, x) in upper.nonzeros() {
        m.set(i, j, x.clone());
    }
    for (i, j, x) in lower.nonzeros() {
        m.set(d1 + i, d1 + j, x.clone());
    }
    m
}

pub fn build_irrep(n: u32, a: u32) -> Result<Arc<Irrep>, OracleError> {
    if a > n {
        return Err(OracleError::IndexOutOfRange { n, a: i64::from(a) });
    }
    static CACHE: Cache<(u32, u32), Irrep> = OnceLock::new();
    Ok(cached(&CACHE, (n, a), || construct(n, a)))
}

fn construct(n: u32, a: u32) -> Irrep {
    if a == 0 || a == n {
        let basis = vec![(1..=a).collect()];
        return Irrep {
            a,
            basis,
            action: Action::trivial(n),
        };
    }
    let up = build_irrep(n - 1, a - 1).expect("a - 1 <= n - 1");
    let lo = build_irrep(n - 1, a).expect("a <= n - 1");
    let basis: Vec<Vec<u32>> = up
        .basis
        .iter()
        .map(|s| {
            let mut t = s.clone();
            t.push(n);
            t
        })
        .chain(lo.basis.iter().cloned())
        .collect();
    let d = basis.len();
    let mut act = Action {
        n,
        dim: d,
        e: Vec::new(),
        f: Vec::new(),
        k: Vec::new(),
        kinv: Vec::new(),
    };
    for i in 1..n - 1 {
        for (dst, g) in [
            (&mut act.e, Generator::E(i)),
            (&mut act.f, Generator::F(i)),
            (&mut act.k, Generator::K(i)),
            (&mut act.kinv, Generator::KInv(i)),
        ] {
            dst.push(block_diag(up.gen(g), lo.gen(g)));
        }
    }
    // top generator: moves n to n-1
    let index: HashMap<&[u32], usize> = basis.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let mut e = Matrix::zeros(d, d);
    let mut f = Matrix::zeros(d, d);
    let mut k = vec![LaurentPoly::one(); d];
    for (si, s) in basis.iter().enumerate() {
        if s.contains(&n) && !s.contains(&(n - 1)) {
            let mut t: Vec<u32> = s.iter().copied().filter(|&x| x != n).collect();
            t.push(n - 1);
            t.sort_unstable();
            let ti = index[t.as_slice()];
            e.set(si, ti, LaurentPoly::one());
            f.set(ti, si, LaurentPoly::one());
            k[si] = LaurentPoly::q_pow(1);
            k[ti] = LaurentPoly::q_pow(-1);
        }
    }
    let kinv: Vec<LaurentPoly> = k.iter().map(|x| inv_unit(x).expect("monomial")).collect();
    act.e.push(e);
    act.f.push(f);
    act.k.push(Matrix::diagonal(k));
    act.kinv.push(Matrix::diagonal(kinv));
    Irrep { a, basis, action: act }
}

/// `ρ*(Z) = ρ(S(Z))ᵀ` with `S(K) = K^-1`, `S(E) = -E K^-1`, `S(F) = -K F`.
pub fn dual_action(rep: &Irrep) -> Action {
    rep.action.dual()
}

impl Action {
    /// The contragredient action, see [`dual_action`].
    pub fn dual(&self) -> Action {
        let m = self.e.len();
        let mut out = Action {
            n: self.n,
            dim: self.dim,
            e: Vec::with_capacity(m),
            f: Vec::with_capacity(m),
            k: Vec::with_capacity(m),
            kinv: Vec::with_capacity(m),
        };
        for i in 0..m {
            out.e.push(self.e[i].mul(&self.kinv[i]).neg().transpose());
            out.f.push(self.k[i].mul(&self.f[i]).neg().transpose());
            out.k.push(self.kinv[i].transpose());
            out.kinv.push(self.k[i].transpose());
        }
        out
    }
}

pub(crate) fn factor_action(n: u32, a: u32, dual: bool) -> Result<Arc<Action>, OracleError> {
    static PLAIN: Cache<(u32, u32), Action> = OnceLock::new();
    static DUAL: Cache<(u32, u32), Action> = OnceLock::new();
    let rep = build_irrep(n, a)?;
    Ok(if dual {
        cached(&DUAL, (n, a), || dual_action(&rep))
    } else {
        cached(&PLAIN, (n, a), || rep.action.clone())
    })
}

fn cartan(i: u32, j: u32) -> i64 {
    match i.abs_diff(j) {
        0 => 2,
        1 => -1,
        _ => 0,
    }
}

/// Every defining relation of `U_q(sl_n)` that fails on `act`, by name.
pub fn hopf_violations(act: &Action) -> Vec<String> {
    let n = act.n;
    let mut bad = Vec::new();
    let id = Matrix::identity(act.dim);
    let qmq = qalgebra::q_minus_qinv();
    let qi2 = qalgebra::qint(2);
    for i in 1..n {
        let (ei, fi, ki, kinv) = (
            act.get(Generator::E(i)),
            act.get(Generator::F(i)),
            act.get(Generator::K(i)),
            act.get(Generator::KInv(i)),
        );
        if ki.mul(kinv) != id {
            bad.push(format!("K{i} K{i}^-1 = 1"));
        }
        for j in 1..n {
            let (ej, fj, kj) = (act.get(Generator::E(j)), act.get(Generator::F(j)), act.get(Generator::K(j)));
            let c = cartan(i, j);
            if ki.mul(kj) != kj.mul(ki) {
                bad.push(format!("K{i} K{j} = K{j} K{i}"));
            }
            if ki.mul(ej).mul(kinv) != ej.scale(&LaurentPoly::q_pow(c)) {
                bad.push(format!("K{i} E{j} K{i}^-1 = q^{c} E{j}"));
            }
            if ki.mul(fj).mul(kinv) != fj.scale(&LaurentPoly::q_pow(-c)) {
                bad.push(format!("K{i} F{j} K{i}^-1 = q^{} F{j}", -c));
            }
            let comm = ei.mul(fj).sub(&fj.mul(ei)).scale(&qmq);
            let want = if i == j { ki.sub(kinv) } else { Matrix::zeros(act.dim, act.dim) };
            if comm != want {
                bad.push(format!("[E{i}, F{j}]"));
            }
            if c == -1 {
                for (x, y, name) in [(ei, ej, "E"), (fi, fj, "F")] {
                    let serre = x.mul(x).mul(y).sub(&x.mul(y).mul(x).scale(&qi2)).add(&y.mul(x).mul(x));
                    if !serre.is_zero() {
                        bad.push(format!("Serre {name}{i} {name}{j}"));
                    }
                }
            } else if c == 0 {
                if ei.mul(ej) != ej.mul(ei) {
                    bad.push(format!("E{i} E{j} = E{j} E{i}"));
                }
                if fi.mul(fj) != fj.mul(fi) {
                    bad.push(format!("F{i} F{j} = F{j} F{i}"));
                }
            }
        }
    }
    bad
}
