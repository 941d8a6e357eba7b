//! Exhaustive checks of the q-binomial identities used by the relation
//! spaces. Each identity is summed exactly at every point of a finite grid;
//! a report lists the grid points with a nonzero residual.

use std::borrow::Cow;
use std::fmt;
use std::sync::OnceLock;

use qalgebra::{qbinom, LaurentPoly};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub name: String,
    pub grid: String,
    /// Names of the entries of each violation tuple.
    pub parameters: Vec<String>,
    pub cases: usize,
    pub violations: Vec<Vec<i64>>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityName {
    EdZero,
    SsprimeSs,
    Vandermonde,
    Recurrence,
}

impl IdentityName {
    pub const ALL: [IdentityName; 4] = [
        IdentityName::EdZero,
        IdentityName::SsprimeSs,
        IdentityName::Vandermonde,
        IdentityName::Recurrence,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityName::EdZero => "ed-zero",
            IdentityName::SsprimeSs => "ssprime-ss",
            IdentityName::Vandermonde => "vandermonde",
            IdentityName::Recurrence => "recurrence",
        }
    }
}

impl fmt::Display for IdentityName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for IdentityName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| format!("unknown identity {s:?}"))
    }
}

/// Grid for the triple-binomial identity: flow vectors of the given lengths
/// with entries in `0..=max_entry`, and `1 <= n <= max_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdZeroGrid {
    pub max_n: u32,
    pub lengths: Vec<usize>,
    pub max_entry: i64,
}

impl Default for EdZeroGrid {
    fn default() -> Self {
        Self {
            max_n: 5,
            lengths: vec![2, 3],
            max_entry: 4,
        }
    }
}

impl fmt::Display for EdZeroGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "1 <= n <= {}, lengths {:?}, entries in [0, {}]",
            self.max_n, self.lengths, self.max_entry
        )
    }
}

/// Grid for the SS'/SS inversion identity: `a, b` of length 2 with entries in
/// `min_entry..=max_entry`, `n + Σa - Σb > 0`, and `m, m'` ranging over
/// `[max a - margin, min b + margin]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SsGrid {
    pub max_n: u32,
    pub min_entry: i64,
    pub max_entry: i64,
    pub margin: i64,
}

impl Default for SsGrid {
    fn default() -> Self {
        Self {
            max_n: 5,
            min_entry: -2,
            max_entry: 4,
            margin: 2,
        }
    }
}

impl fmt::Display for SsGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "1 <= n <= {}, entries in [{}, {}], n+Σa-Σb > 0, m, m' in [max a - {m}, min b + {m}]",
            self.max_n,
            self.min_entry,
            self.max_entry,
            m = self.margin
        )
    }
}

/// `0 <= x, y <= max` and `-margin <= z <= x + y + margin`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VandermondeGrid {
    pub max: i64,
    pub margin: i64,
}

impl Default for VandermondeGrid {
    fn default() -> Self {
        Self { max: 8, margin: 0 }
    }
}

impl fmt::Display for VandermondeGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0 <= x, y <= {}, -{m} <= z <= x + y + {m}", self.max, m = self.margin)
    }
}

/// `0 <= k <= m`, `1 <= m <= max`. At `m = 0` the right side is zero by the
/// hard-zero convention, so that point is the base case rather than an instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceGrid {
    pub max: i64,
}

impl Default for RecurrenceGrid {
    fn default() -> Self {
        Self { max: 12 }
    }
}

impl fmt::Display for RecurrenceGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0 <= k <= m, 1 <= m <= {}", self.max)
    }
}

const TABLE_MAX: i64 = 48;

fn table() -> &'static [Vec<LaurentPoly>] {
    static T: OnceLock<Vec<Vec<LaurentPoly>>> = OnceLock::new();
    T.get_or_init(|| (0..=TABLE_MAX).map(|m| (0..=m).map(|k| qbinom(m, k)).collect()).collect())
}

/// `qbinom(m, k)`, or `None` when it is zero by convention.
fn binom(m: i64, k: i64) -> Option<Cow<'static, LaurentPoly>> {
    if m < 0 || k < 0 || k > m {
        None
    } else if m <= TABLE_MAX {
        Some(Cow::Borrowed(&table()[m as usize][k as usize]))
    } else {
        Some(Cow::Owned(qbinom(m, k)))
    }
}

fn add_signed(acc: &mut LaurentPoly, parity: i64, x: &LaurentPoly) {
    if parity.rem_euclid(2) == 0 {
        *acc = &*acc + x;
    } else {
        *acc = &*acc - x;
    }
}

/// `Σb - max b` and `Σa - min a`.
fn hats(a: &[i64], b: &[i64]) -> (i64, i64) {
    let sb: i64 = b.iter().sum();
    let sa: i64 = a.iter().sum();
    (
        sb - b.iter().max().copied().unwrap_or(0),
        sa - a.iter().min().copied().unwrap_or(0),
    )
}

/// The triple-binomial sum over `k` whose vanishing makes the `e` functionals
/// annihilate the Kekulé relations.
pub fn ed_zero_sum(n: i64, a: &[i64], b: &[i64], j: i64, jstar: i64) -> LaurentPoly {
    let (sa, sb): (i64, i64) = (a.iter().sum(), b.iter().sum());
    let (sumhat_b, sumtah_a) = hats(a, b);
    let max_b = b.iter().max().copied().unwrap_or(0);
    let min_a = a.iter().min().copied().unwrap_or(0);
    let lo = (-sumhat_b).max(sb + jstar - j);
    let hi = (-sumtah_a + 1).min(jstar - j + n + sa);
    let mut acc = LaurentPoly::zero();
    for k in lo..=hi {
        let (Some(x), Some(y), Some(z)) = (
            binom(j + k - max_b, j - sb),
            binom(min_a + n - j - k, sa + n - 1 - j),
            binom(n + sa - sb, j - jstar + k - sb),
        ) else {
            continue;
        };
        add_signed(&mut acc, j + k, &(&(&*x * &*y) * &*z));
    }
    acc
}

/// `δ_{mm'} - (-1)^{m+n+Σa} Σ_l (-1)^l [m+l-1-Σb, m+l-n-Σa] [n+Σa-Σb, m'+l-Σb]`,
/// with `l` from `n + Σa - min b` to `n + min a`.
pub fn ss_residual(n: i64, a: [i64; 2], b: [i64; 2], m: i64, m2: i64) -> LaurentPoly {
    let (sa, sb) = (a[0] + a[1], b[0] + b[1]);
    let (min_a, min_b) = (a[0].min(a[1]), b[0].min(b[1]));
    let mut sum = LaurentPoly::zero();
    for l in n + sa - min_b..=n + min_a {
        let (Some(x), Some(y)) = (binom(m + l - 1 - sb, m + l - n - sa), binom(n + sa - sb, m2 + l - sb)) else {
            continue;
        };
        add_signed(&mut sum, l, &(&*x * &*y));
    }
    let mut r = if m == m2 { LaurentPoly::one() } else { LaurentPoly::zero() };
    add_signed(&mut r, m + n + sa + 1, &sum);
    r
}

/// `[x+y, z] - q^{yz} Σ_{i=0}^{y} q^{-(x+y)i} [y, i] [x, z-i]`.
pub fn vandermonde_residual(x: i64, y: i64, z: i64) -> LaurentPoly {
    let mut rhs = LaurentPoly::zero();
    for i in 0..=y {
        if let (Some(u), Some(v)) = (binom(y, i), binom(x, z - i)) {
            rhs = &rhs + &(&*u * &*v).shift(y * z - (x + y) * i);
        }
    }
    &qbinom(x + y, z) - &rhs
}

/// `[m, k] - q^k [m-1, k] - q^{k-m} [m-1, k-1]`.
pub fn recurrence_residual(m: i64, k: i64) -> LaurentPoly {
    &(&qbinom(m, k) - &qbinom(m - 1, k).shift(k)) - &qbinom(m - 1, k - 1).shift(k - m)
}

fn vectors(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::with_capacity(len)];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (lo..=hi).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Runs `check` over `points` in parallel; results keep the order of `points`.
fn sweep<P, F>(points: Vec<P>, check: F) -> (usize, Vec<Vec<i64>>)
where
    P: Sync,
    F: Fn(&P) -> (usize, Vec<Vec<i64>>) + Sync + Send,
{
    let parts: Vec<(usize, Vec<Vec<i64>>)> = points.par_iter().map(&check).collect();
    parts.into_iter().fold((0, Vec::new()), |(c, mut v), (c2, v2)| {
        v.extend(v2);
        (c + c2, v)
    })
}

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

pub fn verify_ed_zero(grid: &EdZeroGrid) -> IdentityReport {
    let mut points = Vec::new();
    for n in 1..=i64::from(grid.max_n) {
        for &len in &grid.lengths {
            for a in vectors(len, 0, grid.max_entry) {
                points.push((n, a));
            }
        }
    }
    let (cases, violations) = sweep(points, |(n, a)| {
        let mut cases = 0;
        let mut bad = Vec::new();
        for b in vectors(a.len(), 0, grid.max_entry) {
            let (sa, sb): (i64, i64) = (a.iter().sum(), b.iter().sum());
            let (sumhat_b, sumtah_a) = hats(a, &b);
            for j in sb..=sa + n - 1 {
                for jstar in -sumhat_b..=-sumtah_a {
                    cases += 1;
                    if !ed_zero_sum(*n, a, &b, j, jstar).is_zero() {
                        let mut t = vec![*n];
                        t.extend(a);
                        t.extend(&b);
                        t.extend([j, jstar]);
                        bad.push(t);
                    }
                }
            }
        }
        (cases, bad)
    });
    IdentityReport {
        name: IdentityName::EdZero.to_string(),
        grid: grid.to_string(),
        parameters: names(&["n", "a...", "b...", "j", "j*"]),
        cases,
        violations,
    }
}

pub fn verify_ssprime_ss(grid: &SsGrid) -> IdentityReport {
    let mut points = Vec::new();
    for n in 1..=i64::from(grid.max_n) {
        for a in vectors(2, grid.min_entry, grid.max_entry) {
            points.push((n, [a[0], a[1]]));
        }
    }
    let (cases, violations) = sweep(points, |&(n, a)| {
        let mut cases = 0;
        let mut bad = Vec::new();
        for b in vectors(2, grid.min_entry, grid.max_entry) {
            let b = [b[0], b[1]];
            if n + a[0] + a[1] - b[0] - b[1] <= 0 {
                continue;
            }
            let (lo, hi) = (a[0].max(a[1]) - grid.margin, b[0].min(b[1]) + grid.margin);
            for m in lo..=hi {
                for m2 in lo..=hi {
                    cases += 1;
                    if !ss_residual(n, a, b, m, m2).is_zero() {
                        bad.push(vec![n, a[0], a[1], b[0], b[1], m, m2]);
                    }
                }
            }
        }
        (cases, bad)
    });
    IdentityReport {
        name: IdentityName::SsprimeSs.to_string(),
        grid: grid.to_string(),
        parameters: names(&["n", "a1", "a2", "b1", "b2", "m", "m'"]),
        cases,
        violations,
    }
}

pub fn verify_vandermonde(grid: &VandermondeGrid) -> IdentityReport {
    let points: Vec<(i64, i64)> = (0..=grid.max).flat_map(|x| (0..=grid.max).map(move |y| (x, y))).collect();
    let (cases, violations) = sweep(points, |&(x, y)| {
        let zs = -grid.margin..=x + y + grid.margin;
        let bad = zs
            .clone()
            .filter(|&z| !vandermonde_residual(x, y, z).is_zero())
            .map(|z| vec![x, y, z])
            .collect();
        (zs.count(), bad)
    });
    IdentityReport {
        name: IdentityName::Vandermonde.to_string(),
        grid: grid.to_string(),
        parameters: names(&["x", "y", "z"]),
        cases,
        violations,
    }
}

pub fn verify_recurrence(grid: &RecurrenceGrid) -> IdentityReport {
    let points: Vec<(i64, i64)> = (1..=grid.max).flat_map(|m| (0..=m).map(move |k| (m, k))).collect();
    let (cases, violations) = sweep(points, |&(m, k)| {
        let bad = if recurrence_residual(m, k).is_zero() {
            Vec::new()
        } else {
            vec![vec![m, k]]
        };
        (1, bad)
    });
    IdentityReport {
        name: IdentityName::Recurrence.to_string(),
        grid: grid.to_string(),
        parameters: names(&["m", "k"]),
        cases,
        violations,
    }
}

/// Runs the named identity at its default grid.
pub fn verify_default(name: IdentityName) -> IdentityReport {
    match name {
        IdentityName::EdZero => verify_ed_zero(&EdZeroGrid::default()),
        IdentityName::SsprimeSs => verify_ssprime_ss(&SsGrid::default()),
        IdentityName::Vandermonde => verify_vandermonde(&VandermondeGrid::default()),
        IdentityName::Recurrence => verify_recurrence(&RecurrenceGrid::default()),
    }
}
