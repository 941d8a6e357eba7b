use polygons::{l_range, make_web_raw, Family, FlowPair, PolygonWeb};

/// Admissible flows of length `k` at level `n` with `min a = 0` and entries
/// in `0..=max_entry`, in lexicographic order of `(a, b)`. Every flow pair is
/// a constant shift of exactly one of these.
pub fn canonical_flows(n: u32, k: usize, max_entry: i64) -> Vec<FlowPair> {
    if k == 0 {
        return vec![FlowPair::loops()];
    }
    let mut out = Vec::new();
    let mut cur = vec![0i64; 2 * k];
    loop {
        let (a, b) = cur.split_at(k);
        if a.contains(&0) {
            let f = FlowPair::new(a.to_vec(), b.to_vec()).expect("equal lengths");
            if f.is_admissible(n) {
                out.push(f);
            }
        }
        // odometer, last entry fastest
        let mut i = cur.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] <= max_entry {
                break;
            }
            cur[i] = 0;
        }
    }
}

/// `(n, flows)` for every level in `n_min..=n_max` and `k` in `ks`.
pub fn flow_sweep(n_min: u32, n_max: u32, ks: &[usize], max_entry: i64) -> Vec<(u32, FlowPair)> {
    let mut out = Vec::new();
    for n in n_min..=n_max {
        for &k in ks {
            out.extend(canonical_flows(n, k, max_entry).into_iter().map(|f| (n, f)));
        }
    }
    out
}

/// All admissible P and Q webs on `flows`, P first, each in order of `l`.
pub fn webs_on(n: u32, flows: &FlowPair) -> Vec<PolygonWeb> {
    [Family::P, Family::Q]
        .into_iter()
        .flat_map(|fam| l_range(fam, n, flows).filter_map(move |l| make_web_raw(fam, n, flows, l).polygon().cloned()))
        .collect()
}
