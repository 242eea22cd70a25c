//! Independent brute-force oracles for small cubic graphs, used to check
//! the generators and the canonical labelling. Nothing here depends on
//! girthgen-core.

use std::collections::BTreeSet;

pub type Adjacency = Vec<[usize; 3]>;

/// One adjacency structure per isomorphism class of connected cubic graphs
/// on `n` vertices, enumerated by building breadth-first labelled graphs and
/// deduplicating with [`oracle_code`].
pub fn connected_cubic_graphs(n: usize) -> Vec<Adjacency> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    build(n, 0, 1, &mut adj, &mut |adj| {
        let a: Adjacency = adj.iter().map(|l| [l[0], l[1], l[2]]).collect();
        if seen.insert(oracle_code(&a)) {
            out.push(a);
        }
    });
    out
}

fn build(
    n: usize,
    v: usize,
    next: usize,
    adj: &mut Vec<Vec<usize>>,
    emit: &mut dyn FnMut(&Vec<Vec<usize>>),
) {
    if v == n {
        emit(adj);
        return;
    }
    if v >= next {
        return; // disconnected
    }
    let need = 3 - adj[v].len();
    let candidates: Vec<usize> = (v + 1..next)
        .filter(|&w| adj[w].len() < 3 && !adj[v].contains(&w))
        .collect();
    for fresh in 0..=need {
        if next + fresh > n || need - fresh > candidates.len() {
            continue;
        }
        for subset in combinations(&candidates, need - fresh) {
            let mut chosen = subset.clone();
            chosen.extend(next..next + fresh);
            for &w in &chosen {
                adj[v].push(w);
                adj[w].push(v);
            }
            build(n, v + 1, next + fresh, adj, emit);
            for &w in &chosen {
                adj[v].pop();
                adj[w].pop();
            }
        }
    }
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, items[i]);
            out.push(rest);
        }
    }
    out
}

/// Lexicographically smallest row code (sorted neighbour labels per label)
/// over all breadth-first labellings. Two connected cubic graphs are
/// isomorphic iff their codes agree.
pub fn oracle_code(adj: &Adjacency) -> Vec<[u8; 3]> {
    let n = adj.len();
    let mut best: Option<Vec<[u8; 3]>> = None;
    for s in 0..n {
        let mut label = vec![usize::MAX; n];
        let mut order = vec![s];
        label[s] = 0;
        let mut rows = Vec::with_capacity(n);
        bfs_code(adj, 0, &mut label, &mut order, &mut rows, true, &mut best);
    }
    best.unwrap()
}

fn bfs_code(
    adj: &Adjacency,
    p: usize,
    label: &mut Vec<usize>,
    order: &mut Vec<usize>,
    rows: &mut Vec<[u8; 3]>,
    tied: bool,
    best: &mut Option<Vec<[u8; 3]>>,
) {
    let n = adj.len();
    if p == n {
        if best.as_ref().is_none_or(|b| *rows < *b) {
            *best = Some(rows.clone());
        }
        return;
    }
    if p >= order.len() {
        return;
    }
    let x = order[p];
    let fresh: Vec<usize> = adj[x]
        .iter()
        .copied()
        .filter(|&w| label[w] == usize::MAX)
        .collect();
    let next = order.len();
    let mut row: Vec<usize> = adj[x]
        .iter()
        .filter(|&&w| label[w] != usize::MAX)
        .map(|&w| label[w])
        .collect();
    row.extend(next..next + fresh.len());
    row.sort_unstable();
    let row = [row[0] as u8, row[1] as u8, row[2] as u8];
    let mut still_tied = tied;
    if tied {
        if let Some(b) = best.as_ref() {
            match row.cmp(&b[p]) {
                std::cmp::Ordering::Greater => return,
                std::cmp::Ordering::Less => still_tied = false,
                std::cmp::Ordering::Equal => {}
            }
        }
    }
    for perm in permutations(&fresh) {
        for (i, &w) in perm.iter().enumerate() {
            label[w] = next + i;
            order.push(w);
        }
        rows.push(row);
        // a new best found below resets the comparison for later siblings
        let before = best.clone();
        bfs_code(adj, p + 1, label, order, rows, still_tied, best);
        if *best != before {
            still_tied = true;
        }
        rows.pop();
        for &w in &perm {
            label[w] = usize::MAX;
            order.pop();
        }
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Number of automorphisms by exhaustive extension of partial maps.
pub fn automorphism_count(adj: &Adjacency) -> u128 {
    let n = adj.len();
    let mut count = 0;
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend_map(adj, 0, &mut map, &mut used, &mut count);
    count
}

fn extend_map(
    adj: &Adjacency,
    v: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    count: &mut u128,
) {
    let n = adj.len();
    if v == n {
        *count += 1;
        return;
    }
    for img in 0..n {
        if used[img] {
            continue;
        }
        let ok = adj[v]
            .iter()
            .all(|&w| w > v || map[w] == usize::MAX || adj[img].contains(&map[w]))
            && (0..v).all(|u| {
                let a = adj[v].contains(&u);
                let b = adj[img].contains(&map[u]);
                a == b
            });
        if ok {
            map[v] = img;
            used[img] = true;
            extend_map(adj, v + 1, map, used, count);
            used[img] = false;
            map[v] = usize::MAX;
        }
    }
}

/// Girth by breadth-first search from every vertex.
pub fn girth(adj: &Adjacency) -> usize {
    let n = adj.len();
    let mut best = usize::MAX;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    best = best.min(dist[v] + dist[w] + 1);
                }
            }
        }
    }
    best
}

/// Every simple cycle as a sorted vertex list plus its length.
pub fn all_cycles(adj: &Adjacency, max_len: usize) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut out = BTreeSet::new();
    fn go(
        adj: &Adjacency,
        s: usize,
        path: &mut Vec<usize>,
        max_len: usize,
        out: &mut BTreeSet<Vec<usize>>,
    ) {
        let v = *path.last().unwrap();
        for &w in &adj[v] {
            if w == s && path.len() >= 3 {
                // store as the canonical rotation/reflection
                let mut c = path.clone();
                let m = c.iter().enumerate().min_by_key(|x| x.1).unwrap().0;
                c.rotate_left(m);
                if c[1] > c[c.len() - 1] {
                    c[1..].reverse();
                }
                out.insert(c);
            } else if !path.contains(&w) && path.len() < max_len {
                path.push(w);
                go(adj, s, path, max_len, out);
                path.pop();
            }
        }
    }
    for s in 0..n {
        go(adj, s, &mut vec![s], max_len, &mut out);
    }
    out.into_iter().collect()
}

/// Edges `(u, v)` with `u < v` in lexicographic order.
pub fn edges(adj: &Adjacency) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (u, nb) in adj.iter().enumerate() {
        for &v in nb {
            if u < v {
                out.push((u, v));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Whether a Hamiltonian cycle exists among the vertices with
/// `alive[v]`, by depth-first path extension from the first alive vertex.
pub fn hamiltonian_within(adj: &Adjacency, alive: &[bool]) -> bool {
    let total = alive.iter().filter(|&&a| a).count();
    let Some(s) = alive.iter().position(|&a| a) else {
        return false;
    };
    fn go(
        adj: &Adjacency,
        alive: &[bool],
        s: usize,
        v: usize,
        seen: &mut Vec<bool>,
        len: usize,
        total: usize,
    ) -> bool {
        if len == total {
            return adj[v].contains(&s);
        }
        for &w in &adj[v] {
            if alive[w] && !seen[w] {
                seen[w] = true;
                if go(adj, alive, s, w, seen, len + 1, total) {
                    return true;
                }
                seen[w] = false;
            }
        }
        false
    }
    let mut seen = vec![false; adj.len()];
    seen[s] = true;
    total >= 3 && go(adj, alive, s, s, &mut seen, 1, total)
}

pub fn is_hamiltonian(adj: &Adjacency) -> bool {
    hamiltonian_within(adj, &vec![true; adj.len()])
}

/// Whether the edges can be properly coloured with `k` colours.
pub fn edge_colourable(adj: &Adjacency, k: u8) -> bool {
    let es = edges(adj);
    let mut col = vec![u8::MAX; es.len()];
    fn go(es: &[(usize, usize)], col: &mut Vec<u8>, i: usize, k: u8) -> bool {
        if i == es.len() {
            return true;
        }
        let (u, v) = es[i];
        for c in 0..k {
            let clash = (0..i).any(|j| {
                col[j] == c && (es[j].0 == u || es[j].1 == u || es[j].0 == v || es[j].1 == v)
            });
            if !clash {
                col[i] = c;
                if go(es, col, i + 1, k) {
                    return true;
                }
            }
        }
        col[i] = u8::MAX;
        false
    }
    go(&es, &mut col, 0, k)
}

/// Every 2-factor as the set of its edges, by testing all edge subsets of
/// size `n`. Only for small graphs.
pub fn two_factors(adj: &Adjacency) -> Vec<Vec<(usize, usize)>> {
    let es = edges(adj);
    let n = adj.len();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << es.len()) {
        if mask.count_ones() as usize != n {
            continue;
        }
        let mut deg = vec![0; n];
        for (i, &(u, v)) in es.iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        if deg.iter().all(|&d| d == 2) {
            out.push(
                es.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect(),
            );
        }
    }
    out
}

/// Least number of odd cycles over all 2-factors.
pub fn oddness(adj: &Adjacency) -> Option<usize> {
    let n = adj.len();
    two_factors(adj)
        .iter()
        .map(|f| {
            let mut comp: Vec<usize> = (0..n).collect();
            fn find(c: &mut Vec<usize>, x: usize) -> usize {
                if c[x] != x {
                    let r = find(c, c[x]);
                    c[x] = r;
                }
                c[x]
            }
            for &(u, v) in f {
                let (a, b) = (find(&mut comp, u), find(&mut comp, v));
                comp[a] = b;
            }
            let mut sizes = vec![0; n];
            for v in 0..n {
                let r = find(&mut comp, v);
                sizes[r] += 1;
            }
            sizes.iter().filter(|&&s| s % 2 == 1).count()
        })
        .min()
}

/// Whether vertices and edges together admit a proper colouring with `k`
/// colours: adjacent vertices, incident edges, and a vertex and its edges
/// all differ.
pub fn total_colourable(adj: &Adjacency, k: u8) -> bool {
    let n = adj.len();
    let es = edges(adj);
    // elements 0..n are vertices, n.. are edges
    let m = n + es.len();
    let conflicts = |a: usize, b: usize| -> bool {
        match (a < n, b < n) {
            (true, true) => adj[a].contains(&b),
            (true, false) => es[b - n].0 == a || es[b - n].1 == a,
            (false, true) => es[a - n].0 == b || es[a - n].1 == b,
            (false, false) => {
                let (x, y) = (es[a - n], es[b - n]);
                x.0 == y.0 || x.0 == y.1 || x.1 == y.0 || x.1 == y.1
            }
        }
    };
    let mut col = vec![u8::MAX; m];
    fn go(
        i: usize,
        m: usize,
        k: u8,
        col: &mut Vec<u8>,
        conflicts: &dyn Fn(usize, usize) -> bool,
    ) -> bool {
        if i == m {
            return true;
        }
        for c in 0..k {
            if (0..i).all(|j| col[j] != c || !conflicts(i, j)) {
                col[i] = c;
                if go(i + 1, m, k, col, conflicts) {
                    return true;
                }
            }
        }
        col[i] = u8::MAX;
        false
    }
    go(0, m, k, &mut col, &conflicts)
}

/// Smallest number of edges whose removal leaves two components that both
/// contain a cycle, over all vertex bipartitions; `None` if no such cut
/// exists.
pub fn cyclic_edge_connectivity(adj: &Adjacency) -> Option<usize> {
    let n = adj.len();
    let has_cycle = |side: u64| -> bool {
        // an induced subgraph has a cycle iff edges >= vertices - components + 1
        let verts: Vec<usize> = (0..n).filter(|&v| side >> v & 1 == 1).collect();
        let e = verts
            .iter()
            .map(|&v| adj[v].iter().filter(|&&w| side >> w & 1 == 1).count())
            .sum::<usize>()
            / 2;
        let mut seen = 0u64;
        let mut comps = 0;
        for &s in &verts {
            if seen >> s & 1 == 1 {
                continue;
            }
            comps += 1;
            let mut stack = vec![s];
            seen |= 1 << s;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if side >> w & 1 == 1 && seen >> w & 1 == 0 {
                        seen |= 1 << w;
                        stack.push(w);
                    }
                }
            }
        }
        e + comps > verts.len()
    };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best: Option<usize> = None;
    // vertex 0 on the first side fixes each bipartition once
    for rest in 0u64..(1u64 << (n - 1)) {
        let side = 1 | (rest << 1);
        if side == all || !has_cycle(side) || !has_cycle(all & !side) {
            continue;
        }
        let cut = (0..n)
            .filter(|&v| side >> v & 1 == 1)
            .map(|v| adj[v].iter().filter(|&&w| side >> w & 1 == 0).count())
            .sum();
        best = Some(best.map_or(cut, |b: usize| b.min(cut)));
    }
    best
}

/// Whether some cycle has an endpoint of every edge on it.
pub fn has_dominating_cycle(adj: &Adjacency) -> bool {
    let es = edges(adj);
    all_cycles(adj, adj.len())
        .iter()
        .any(|c| es.iter().all(|&(u, v)| c.contains(&u) || c.contains(&v)))
}

/// Tripod expansion: subdivide the three edges with new vertices
/// `n, n + 1, n + 2` and join them to a new vertex `n + 3`.
pub fn tripod_expand(adj: &Adjacency, es: [(usize, usize); 3]) -> Adjacency {
    let n = adj.len();
    let mut out: Vec<Vec<usize>> = adj.iter().map(|nb| nb.to_vec()).collect();
    for (i, &(a, b)) in es.iter().enumerate() {
        let s = n + i;
        out[a].retain(|&x| x != b);
        out[b].retain(|&x| x != a);
        out[a].push(s);
        out[b].push(s);
        out.push(vec![a, b, n + 3]);
    }
    out.push(vec![n, n + 1, n + 2]);
    out.into_iter().map(|l| [l[0], l[1], l[2]]).collect()
}

/// H expansion: subdivide `e1, e2` with vertices joined to `n + 4` and
/// `e3, e4` with vertices joined to `n + 5`, then join `n + 4, n + 5`.
pub fn h_expand(adj: &Adjacency, es: [(usize, usize); 4]) -> Adjacency {
    let n = adj.len();
    let mut out: Vec<Vec<usize>> = adj.iter().map(|nb| nb.to_vec()).collect();
    for (i, &(a, b)) in es.iter().enumerate() {
        let s = n + i;
        out[a].retain(|&x| x != b);
        out[b].retain(|&x| x != a);
        out[a].push(s);
        out[b].push(s);
        out.push(vec![a, b, if i < 2 { n + 4 } else { n + 5 }]);
    }
    out.push(vec![n, n + 1, n + 5]);
    out.push(vec![n + 2, n + 3, n + 4]);
    out.into_iter().map(|l| [l[0], l[1], l[2]]).collect()
}

/// Whether the (multi)graph given by the adjacency is simple.
pub fn is_simple(adj: &Adjacency) -> bool {
    adj.iter()
        .enumerate()
        .all(|(v, nb)| !nb.contains(&v) && nb[0] != nb[1] && nb[0] != nb[2] && nb[1] != nb[2])
}
