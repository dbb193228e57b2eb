//! Brute-force oracles written without the library's algorithms.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use circlenum_core::Diagram;

fn tuples(d: &Diagram) -> Vec<[u32; 4]> {
    d.crossings().iter().map(|x| x.ends).collect()
}

/// Connected components of an undirected graph given as an edge list.
fn components(nodes: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut adj = vec![Vec::new(); nodes];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut comp = vec![usize::MAX; nodes];
    let mut next = 0;
    for s in 0..nodes {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        comp[s] = next;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    comp
}

fn component_count(nodes: usize, edges: &[(usize, usize)]) -> usize {
    components(nodes, edges)
        .into_iter()
        .max()
        .map_or(0, |m| m + 1)
}

/// Circles of the state `bits` (bit set = B) by depth-first search on the
/// graph whose vertices are arc labels.
pub fn circles(d: &Diagram, bits: u64) -> usize {
    let t = tuples(d);
    let mut index: HashMap<u32, usize> = HashMap::new();
    for x in &t {
        for &l in x {
            let k = index.len();
            index.entry(l).or_insert(k);
        }
    }
    let mut edges = Vec::new();
    for (c, x) in t.iter().enumerate() {
        let l = x.map(|a| index[&a]);
        if bits >> c & 1 == 0 {
            edges.push((l[0], l[1]));
            edges.push((l[2], l[3]));
        } else {
            edges.push((l[0], l[3]));
            edges.push((l[1], l[2]));
        }
    }
    component_count(index.len(), &edges) + d.free_loops()
}

/// Kauffman bracket by direct state sum with `i128` coefficients, as sorted
/// `(exponent, coefficient)` pairs without zeros.
pub fn bracket(d: &Diagram) -> Vec<(i64, i64)> {
    let n = d.crossing_count();
    // delta^j for j up to the largest possible loop count.
    let mut delta_pow: Vec<BTreeMap<i64, i128>> = vec![BTreeMap::from([(0, 1)])];
    for _ in 0..n + d.free_loops() + 1 {
        let prev = delta_pow.last().unwrap();
        let mut next: BTreeMap<i64, i128> = BTreeMap::new();
        for (&e, &c) in prev {
            *next.entry(e + 2).or_default() -= c;
            *next.entry(e - 2).or_default() -= c;
        }
        delta_pow.push(next);
    }
    let mut total: BTreeMap<i64, i128> = BTreeMap::new();
    for bits in 0..1u64 << n {
        let b = bits.count_ones() as i64;
        let a = n as i64 - b;
        let loops = circles(d, bits);
        for (&e, &c) in &delta_pow[loops - 1] {
            *total.entry(e + a - b).or_default() += c;
        }
    }
    total
        .into_iter()
        .filter(|&(_, c)| c != 0)
        .map(|(e, c)| (e, i64::try_from(c).expect("fits")))
        .collect()
}

fn alternating(t: &[[u32; 4]]) -> bool {
    // Each arc must be over at exactly one of its two ends.
    let mut over_at: HashMap<u32, Vec<bool>> = HashMap::new();
    for x in t {
        for (p, &l) in x.iter().enumerate() {
            over_at.entry(l).or_default().push(p % 2 == 1);
        }
    }
    over_at.values().all(|v| v[0] != v[1])
}

/// Fewest crossing switches that make the diagram alternating, by trying
/// every subset.
pub fn min_switches(d: &Diagram) -> usize {
    let t = tuples(d);
    let n = t.len();
    let mut best = usize::MAX;
    for mask in 0u64..1 << n {
        let w = mask.count_ones() as usize;
        if w >= best {
            continue;
        }
        let switched: Vec<[u32; 4]> = t
            .iter()
            .enumerate()
            .map(|(i, &[a, b, c, e])| {
                if mask >> i & 1 == 1 {
                    [b, c, e, a]
                } else {
                    [a, b, c, e]
                }
            })
            .collect();
        if alternating(&switched) {
            best = w;
        }
    }
    best
}

/// Whether smoothing the crossings in `smoothed` (bit set = B in `choice`,
/// indexed by position in `smoothed`) leaves a connected diagram. Ends of the
/// remaining crossings are glued through each crossing; a component with no
/// remaining crossing is a free circle.
pub fn connected_after_smoothing(d: &Diagram, smoothed: &[usize], choice: u64) -> bool {
    let t = tuples(d);
    let n = t.len();
    let mut first: HashMap<u32, usize> = HashMap::new();
    let mut edges = Vec::new();
    for (c, x) in t.iter().enumerate() {
        for (p, &l) in x.iter().enumerate() {
            let e = 4 * c + p;
            match first.remove(&l) {
                Some(o) => edges.push((o, e)),
                None => {
                    first.insert(l, e);
                }
            }
        }
    }
    let mut kept = vec![true; n];
    for (j, &c) in smoothed.iter().enumerate() {
        kept[c] = false;
        let e = 4 * c;
        if choice >> j & 1 == 0 {
            edges.extend([(e, e + 1), (e + 2, e + 3)]);
        } else {
            edges.extend([(e, e + 3), (e + 1, e + 2)]);
        }
    }
    for c in (0..n).filter(|&c| kept[c]) {
        let e = 4 * c;
        edges.extend([(e, e + 1), (e, e + 2), (e, e + 3)]);
    }
    let comp = components(4 * n, &edges);
    let count = comp.iter().max().map_or(0, |m| m + 1);
    let free = d.free_loops()
        + (0..count)
            .filter(|&k| (0..n).all(|c| !kept[c] || comp[4 * c] != k))
            .count();
    let with_crossings = count + d.free_loops() - free;
    if with_crossings == 0 {
        free == 1
    } else {
        with_crossings == 1 && free == 0
    }
}

/// Every smoothing of the dealternators leaves a connected diagram.
pub fn dealternator_connected(d: &Diagram, dealternators: &[usize]) -> bool {
    (0..1u64 << dealternators.len()).all(|i| connected_after_smoothing(d, dealternators, i))
}

/// All compositions of `total` into at least two positive parts.
pub fn compositions(total: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for cuts in 1u64..1 << (total - 1) {
        let mut parts = Vec::new();
        let mut run = 1;
        for i in 0..total - 1 {
            if cuts >> i & 1 == 1 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        out.push(parts);
    }
    out
}
