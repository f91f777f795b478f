//! Root polytopes of bipartite graphs: the convex hulls of `e_i - e_{j}`
//! over the edges, their triangulations by spanning-tree simplices, the
//! left/right degree-vector bijections, the induced fine mixed
//! subdivisions of weighted simplex sums (Cayley trick), and the central
//! decomposition of the full root polytope of a transitive graph on `[n]`.
//!
//! Left vertices are `1..m`, right vertices `1..n`; an edge `(i, j)` joins
//! left `i` to right `j`.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num::{One, Zero};

use crate::algebra::{factorial, Int, Rational};
use crate::minkowski::{self, SubsetFamily};
use crate::{Error, Result};

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

/// Bipartite graph with `m` left and `n` right vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    pub m: usize,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(m: usize, n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::Domain("both sides must be nonempty".into()));
        }
        let mut es: Vec<(usize, usize)> = Vec::new();
        for &(i, j) in edges {
            if i == 0 || i > m || j == 0 || j > n {
                return Err(Error::Domain(format!("edge ({i}, {j}) out of range")));
            }
            es.push((i, j));
        }
        es.sort_unstable();
        es.dedup();
        Ok(BipartiteGraph { m, n, edges: es })
    }

    pub fn complete(m: usize, n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (1..=m)
            .flat_map(|i| (1..=n).map(move |j| (i, j)))
            .collect();
        Self::new(m, n, &edges).expect("complete bipartite graph is valid")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        #[derive(serde::Deserialize)]
        struct J {
            m: usize,
            n: usize,
            edges: Vec<(usize, usize)>,
        }
        let j: J = serde_json::from_value(value.clone())
            .map_err(|e| Error::Domain(format!("bad bipartite graph JSON: {e}")))?;
        Self::new(j.m, j.n, &j.edges)
    }

    /// The subset family `I_i = { j : (i, j) in G }` with unit weights.
    pub fn subset_family(&self) -> Result<SubsetFamily> {
        let mut subsets = vec![0u64; self.m];
        for &(i, j) in &self.edges {
            subsets[i - 1] |= 1 << (j - 1);
        }
        if subsets.iter().any(|&s| s == 0) {
            return Err(Error::Domain("isolated left vertex".into()));
        }
        SubsetFamily::new(self.n, subsets, vec![Rational::one(); self.m])
    }

    /// Vertex index helpers: left i -> i-1, right j -> m+j-1.
    fn l(&self, i: usize) -> usize {
        i - 1
    }
    fn r(&self, j: usize) -> usize {
        self.m + j - 1
    }

    pub fn is_connected(&self) -> bool {
        let total = self.m + self.n;
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); total];
        for &(i, j) in &self.edges {
            adj[self.l(i)].push(self.r(j));
            adj[self.r(j)].push(self.l(i));
        }
        let mut seen = vec![false; total];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// A spanning tree of a bipartite graph, stored as a sorted edge list.
pub type SpanningTree = Vec<(usize, usize)>;

fn is_spanning_tree(g: &BipartiteGraph, edges: &[(usize, usize)]) -> bool {
    if edges.len() != g.m + g.n - 1 {
        return false;
    }
    let total = g.m + g.n;
    let mut dsu: Vec<usize> = (0..total).collect();
    fn find(p: &mut Vec<usize>, i: usize) -> usize {
        if p[i] != i {
            let r = find(p, p[i]);
            p[i] = r;
        }
        p[i]
    }
    for &(i, j) in edges {
        let (a, b) = (find(&mut dsu, g.l(i)), find(&mut dsu, g.r(j)));
        if a == b {
            return false;
        }
        dsu[a] = b;
    }
    true
}

/// All spanning trees in canonical (lexicographic edge-list) order; refuses
/// past one million trees.
pub fn spanning_trees(g: &BipartiteGraph) -> Result<Vec<SpanningTree>> {
    let k = g.m + g.n - 1;
    if g.edges.len() < k {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for combo in g.edges.iter().copied().combinations(k) {
        if is_spanning_tree(g, &combo) {
            out.push(combo);
            if out.len() > 1_000_000 {
                return Err(Error::Resource(
                    "more than 10^6 spanning trees; refusing".into(),
                ));
            }
        }
    }
    Ok(out)
}

/// Left and right degree vectors of a spanning tree: vertex degree minus
/// one on each side.  The left entries sum to `n-1`, the right to `m-1`.
pub fn degree_vectors(g: &BipartiteGraph, t: &SpanningTree) -> Result<(Vec<usize>, Vec<usize>)> {
    if !is_spanning_tree(g, t) {
        return Err(Error::Domain("edge set is not a spanning tree".into()));
    }
    let mut ld = vec![0usize; g.m];
    let mut rd = vec![0usize; g.n];
    for &(i, j) in t {
        ld[i - 1] += 1;
        rd[j - 1] += 1;
    }
    for d in ld.iter_mut().chain(rd.iter_mut()) {
        *d -= 1;
    }
    Ok((ld, rd))
}

/// Compatibility of two spanning-tree simplices: contract the common
/// forest, orient remaining `T`-edges left-to-right and `T'`-edges
/// right-to-left, and test the contracted directed graph for acyclicity.
pub fn trees_compatible(g: &BipartiteGraph, t: &SpanningTree, t2: &SpanningTree) -> bool {
    let total = g.m + g.n;
    let common: Vec<(usize, usize)> = t.iter().copied().filter(|e| t2.contains(e)).collect();
    let mut dsu: Vec<usize> = (0..total).collect();
    fn find(p: &mut Vec<usize>, i: usize) -> usize {
        if p[i] != i {
            let r = find(p, p[i]);
            p[i] = r;
        }
        p[i]
    }
    for &(i, j) in &common {
        let (a, b) = (find(&mut dsu, g.l(i)), find(&mut dsu, g.r(j)));
        if a != b {
            dsu[a] = b;
        }
    }
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for &(i, j) in t {
        if !common.contains(&(i, j)) {
            arcs.push((find(&mut dsu, g.l(i)), find(&mut dsu, g.r(j))));
        }
    }
    for &(i, j) in t2 {
        if !common.contains(&(i, j)) {
            arcs.push((find(&mut dsu, g.r(j)), find(&mut dsu, g.l(i))));
        }
    }
    // cycle detection by iterative three-color DFS
    let mut succ: HashMap<usize, Vec<usize>> = HashMap::new();
    for &(a, b) in &arcs {
        succ.entry(a).or_default().push(b);
    }
    let mut color: HashMap<usize, u8> = HashMap::new();
    for &(start, _) in &arcs {
        if color.get(&start).copied().unwrap_or(0) != 0 {
            continue;
        }
        // stack of (node, next-child-index)
        let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
        color.insert(start, 1);
        while let Some(&mut (node, ref mut idx)) = stack.last_mut() {
            let children = succ.get(&node).map(|v| v.as_slice()).unwrap_or(&[]);
            if *idx < children.len() {
                let child = children[*idx];
                *idx += 1;
                match color.get(&child).copied().unwrap_or(0) {
                    0 => {
                        color.insert(child, 1);
                        stack.push((child, 0));
                    }
                    1 => return false, // back edge: directed cycle
                    _ => {}
                }
            } else {
                color.insert(node, 2);
                stack.pop();
            }
        }
    }
    true
}

/// A pairwise-compatible set of spanning-tree simplices covering the root
/// polytope.
#[derive(Clone, Debug)]
pub struct Triangulation {
    pub trees: Vec<SpanningTree>,
}

/// Build a triangulation of the root polytope: greedily accept spanning
/// trees (canonical order) compatible with everything accepted so far, and
/// fall back to depth-first backtracking if the greedy pass misses the
/// known target size.  Verifies that the right-degree vectors hit every
/// lattice point of the trimmed simplex sum exactly once.
pub fn triangulate(g: &BipartiteGraph) -> Result<Triangulation> {
    if !g.is_connected() {
        return Err(Error::Domain("graph must be connected".into()));
    }
    let family = g.subset_family()?;
    let target_int = minkowski::lattice_points(&family, true, false)?;
    let target = usize::try_from(&target_int)
        .map_err(|_| Error::Resource("triangulation size exceeds usize".into()))?;
    let trees = spanning_trees(g)?;

    let mut accepted: Vec<usize> = Vec::new();
    for (idx, t) in trees.iter().enumerate() {
        if accepted
            .iter()
            .all(|&a| trees_compatible(g, &trees[a], t))
        {
            accepted.push(idx);
        }
    }
    if accepted.len() != target {
        accepted.clear();
        if !backtrack(g, &trees, 0, target, &mut accepted) {
            return Err(Error::Internal(
                "no compatible tree family of the required size exists".into(),
            ));
        }
    }
    let chosen: Vec<SpanningTree> = accepted.into_iter().map(|i| trees[i].clone()).collect();

    // certificate: RD vectors are exactly the trimmed lattice points
    let mut rds: Vec<Vec<i64>> = Vec::new();
    for t in &chosen {
        let (_, rd) = degree_vectors(g, t)?;
        rds.push(rd.iter().map(|&d| d as i64).collect());
    }
    rds.sort();
    let zp = minkowski::trim_z(&minkowski::z_from_y(&family));
    let mut pts = minkowski::lattice_points_brute_z(&zp)?;
    pts.sort();
    if rds != pts {
        return Err(Error::Internal(
            "right-degree vectors do not match the trimmed lattice points".into(),
        ));
    }
    Ok(Triangulation { trees: chosen })
}

fn backtrack(
    g: &BipartiteGraph,
    trees: &[SpanningTree],
    pos: usize,
    target: usize,
    accepted: &mut Vec<usize>,
) -> bool {
    if accepted.len() == target {
        return true;
    }
    if pos == trees.len() || accepted.len() + (trees.len() - pos) < target {
        return false;
    }
    if accepted
        .iter()
        .all(|&a| trees_compatible(g, &trees[a], &trees[pos]))
    {
        accepted.push(pos);
        if backtrack(g, trees, pos + 1, target, accepted) {
            return true;
        }
        accepted.pop();
    }
    backtrack(g, trees, pos + 1, target, accepted)
}

/// Normalized volume of the root polytope: the trimmed lattice-point count
/// divided by `(m+n-2)!`, cross-checked against the triangulation size.
pub fn volume_root_polytope(g: &BipartiteGraph) -> Result<Rational> {
    let tri = triangulate(g)?;
    let family = g.subset_family()?;
    let count = minkowski::lattice_points(&family, true, false)?;
    if Int::from(tri.trees.len() as u64) != count {
        return Err(Error::Internal(format!(
            "triangulation size {} disagrees with lattice count {count}",
            tri.trees.len()
        )));
    }
    Ok(Rational::new(count, factorial(g.m + g.n - 2)))
}

/// The bijection `RD(T) -> LD(T)` induced by a triangulation, from the
/// lattice points of the trimmed sum for `G` to those for the mirrored
/// family.
pub fn rd_ld_bijection(
    g: &BipartiteGraph,
    tri: &Triangulation,
) -> Result<BTreeMap<Vec<usize>, Vec<usize>>> {
    let mut map = BTreeMap::new();
    let mut lds: Vec<Vec<usize>> = Vec::new();
    for t in &tri.trees {
        let (ld, rd) = degree_vectors(g, t)?;
        if map.insert(rd, ld.clone()).is_some() {
            return Err(Error::Internal("repeated right-degree vector".into()));
        }
        lds.push(ld);
    }
    lds.sort();
    let before = lds.len();
    lds.dedup();
    if lds.len() != before {
        return Err(Error::Internal("repeated left-degree vector".into()));
    }
    // codomain check: LD vectors are the trimmed lattice points of the dual
    let dual = g.subset_family()?.dual()?;
    let zp = minkowski::trim_z(&minkowski::z_from_y(&dual));
    let mut pts = minkowski::lattice_points_brute_z(&zp)?;
    pts.sort();
    let lds_i64: Vec<Vec<i64>> = lds
        .iter()
        .map(|v| v.iter().map(|&d| d as i64).collect())
        .collect();
    if lds_i64 != pts {
        return Err(Error::Internal(
            "left-degree vectors do not match the dual trimmed lattice points".into(),
        ));
    }
    Ok(map)
}

// ---------------------------------------------------------------------------
// Fine mixed subdivisions
// ---------------------------------------------------------------------------

/// One cell of a fine mixed subdivision: the tuple `(J_1, ..., J_m)` of
/// per-index subsets read off a spanning tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedCell {
    pub subsets: Vec<u64>,
    pub ld: Vec<usize>,
    pub rd: Vec<usize>,
}

/// The fine mixed subdivision of `sum_i y_i Delta_{I_i}` induced by a
/// triangulation of the root polytope: each tree `T` yields the cell with
/// `J_i = { j : (i, j) in T }`.  The cell volumes `prod y_i^{LD_i}/LD_i!`
/// sum to the volume of the weighted Minkowski sum.
pub fn fine_mixed_subdivision(
    f: &SubsetFamily,
    g: &BipartiteGraph,
    tri: &Triangulation,
) -> Result<Vec<MixedCell>> {
    if f.n != g.n || f.m() != g.m {
        return Err(Error::Domain("family and graph sizes disagree".into()));
    }
    let mut family_subsets = vec![0u64; g.m];
    for &(i, j) in &g.edges {
        family_subsets[i - 1] |= 1 << (j - 1);
    }
    if family_subsets != f.subsets {
        return Err(Error::Domain("family does not match the graph".into()));
    }
    let mut cells = Vec::new();
    for t in &tri.trees {
        let mut subsets = vec![0u64; g.m];
        for &(i, j) in t {
            subsets[i - 1] |= 1 << (j - 1);
        }
        let (ld, rd) = degree_vectors(g, t)?;
        cells.push(MixedCell { subsets, ld, rd });
    }
    // volume certificate
    let mut total = Rational::zero();
    for cell in &cells {
        let mut term = Rational::one();
        for (i, &d) in cell.ld.iter().enumerate() {
            for _ in 0..d {
                term *= &f.weights[i];
            }
            term /= Rational::from_integer(factorial(d));
        }
        total += term;
    }
    let direct = minkowski::volume(f, false)?;
    if total != direct {
        return Err(Error::Internal(format!(
            "cell volumes sum to {total}, expected {direct}"
        )));
    }
    Ok(cells)
}

/// Check that the unit-weight cell of a tree contains the shifted simplex
/// `RD(T) + Delta_{[n]}`: every vertex `RD(T) + e_j` must satisfy the
/// facet description of `sum_i Delta_{J_i}`.
pub fn cell_contains_shift(cell: &MixedCell, n: usize) -> Result<bool> {
    let f = SubsetFamily::new(n, cell.subsets.clone(), vec![Rational::one(); cell.subsets.len()])?;
    let zp = minkowski::z_from_y(&f);
    let full = (1usize << n) - 1;
    for j in 0..n {
        let mut t: Vec<i64> = cell.rd.iter().map(|&d| d as i64).collect();
        t[j] += 1;
        let total: i64 = t.iter().sum();
        if Rational::from_integer(Int::from(total)) != zp.z[full] {
            return Ok(false);
        }
        for mask in 1..full as u64 {
            let s: i64 = bits(mask).map(|i| t[i]).sum();
            if Rational::from_integer(Int::from(s)) < zp.z[mask as usize] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Central decompositions of non-bipartite root polytopes
// ---------------------------------------------------------------------------

/// Graph on `[n]` given by edges `(i, j)` with `i < j` after normalization.
#[derive(Clone, Debug)]
pub struct OrderedGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl OrderedGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut es = Vec::new();
        for &(a, b) in edges {
            if a == 0 || b == 0 || a > n || b > n || a == b {
                return Err(Error::Domain(format!("bad edge ({a}, {b})")));
            }
            es.push((a.min(b), a.max(b)));
        }
        es.sort_unstable();
        es.dedup();
        Ok(OrderedGraph { n, edges: es })
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        Self::new(n, &edges).expect("complete graph is valid")
    }

    fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }
}

/// One part of a central decomposition: the split `[n] = L ∪ R` and the
/// bipartite graph of increasing edges across it.
#[derive(Clone, Debug)]
pub struct CentralPart {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub graph: BipartiteGraph,
}

/// Decompose the full root polytope of a transitive graph on `[n]` into
/// the parts indexed by splits `L ∪ R` with `1 in L`, `n in R`, keeping
/// only splits whose crossing graph is connected.  The summed simplex
/// counts give the total normalized volume `(sum counts)/(n-1)!`.
pub fn central_decomposition(g: &OrderedGraph) -> Result<Vec<CentralPart>> {
    // transitivity: (i,j), (j,k) edges with i<j<k force (i,k)
    for i in 1..=g.n {
        for j in i + 1..=g.n {
            for k in j + 1..=g.n {
                if g.has_edge(i, j) && g.has_edge(j, k) && !g.has_edge(i, k) {
                    return Err(Error::Domain(format!(
                        "transitivity violated at ({i}, {j}, {k})"
                    )));
                }
            }
        }
    }
    if g.n < 2 {
        return Err(Error::Domain("need at least two vertices".into()));
    }
    let middle: Vec<usize> = (2..g.n).collect();
    let mut parts = Vec::new();
    for mask in 0u64..(1 << middle.len()) {
        let mut left = vec![1usize];
        let mut right = Vec::new();
        for (b, &v) in middle.iter().enumerate() {
            if mask >> b & 1 == 1 {
                left.push(v);
            } else {
                right.push(v);
            }
        }
        right.push(g.n);
        let mut edges = Vec::new();
        for (li, &a) in left.iter().enumerate() {
            for (rj, &b) in right.iter().enumerate() {
                if a < b && g.has_edge(a, b) {
                    edges.push((li + 1, rj + 1));
                }
            }
        }
        let part = BipartiteGraph::new(left.len(), right.len(), &edges)?;
        if part.edges.is_empty() || !part.is_connected() {
            continue;
        }
        parts.push(CentralPart {
            left,
            right,
            graph: part,
        });
    }
    Ok(parts)
}

/// Total normalized volume of the full root polytope via the central
/// decomposition: each part contributes its triangulation size, and every
/// simplex (a pyramid with apex at the origin) has volume `1/(n-1)!`.
pub fn q_tilde_volume(g: &OrderedGraph) -> Result<Rational> {
    let mut simplices = Int::zero();
    for part in central_decomposition(g)? {
        let tri = triangulate(&part.graph)?;
        simplices += Int::from(tri.trees.len() as u64);
    }
    Ok(Rational::new(simplices, factorial(g.n - 1)))
}

/// Noncrossing spanning trees of a bipartite crossing graph whose vertices
/// carry positions on a line: arcs `(a, b)` and `(c, d)` cross when
/// `a < c < b < d` in position order.
pub fn noncrossing_spanning_trees(part: &CentralPart) -> Result<usize> {
    let g = &part.graph;
    let arcs: Vec<(usize, usize)> = g
        .edges
        .iter()
        .map(|&(i, j)| {
            let a = part.left[i - 1];
            let b = part.right[j - 1];
            (a.min(b), a.max(b))
        })
        .collect();
    let crossing = |x: (usize, usize), y: (usize, usize)| -> bool {
        let (a, b) = x;
        let (c, d) = y;
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    };
    let mut count = 0usize;
    for tree in spanning_trees(g)? {
        let chosen: Vec<(usize, usize)> = tree
            .iter()
            .map(|&(i, j)| {
                let a = part.left[i - 1];
                let b = part.right[j - 1];
                (a.min(b), a.max(b))
            })
            .collect();
        let ok = (0..chosen.len())
            .all(|x| (x + 1..chosen.len()).all(|y| !crossing(chosen[x], chosen[y])));
        if ok {
            count += 1;
        }
        let _ = &arcs;
    }
    Ok(count)
}

/// Noncrossing alternating spanning trees of the complete graph on `[n]`:
/// every vertex is a local minimum or maximum, and no two edges cross.
pub fn noncrossing_alternating_trees(n: usize) -> Result<Vec<Vec<(usize, usize)>>> {
    if n > 8 {
        return Err(Error::Resource("tree enumeration refused past n = 8".into()));
    }
    let all_edges: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for combo in all_edges.iter().copied().combinations(n - 1) {
        // spanning tree check
        let mut dsu: Vec<usize> = (0..n).collect();
        fn find(p: &mut Vec<usize>, i: usize) -> usize {
            if p[i] != i {
                let r = find(p, p[i]);
                p[i] = r;
            }
            p[i]
        }
        let mut acyclic = true;
        for &(a, b) in &combo {
            let (ra, rb) = (find(&mut dsu, a - 1), find(&mut dsu, b - 1));
            if ra == rb {
                acyclic = false;
                break;
            }
            dsu[ra] = rb;
        }
        if !acyclic {
            continue;
        }
        // alternating: no vertex has both a smaller and a larger neighbor
        let alternating = (1..=n).all(|v| {
            let smaller = combo.iter().any(|&(a, b)| b == v && a < v);
            let larger = combo.iter().any(|&(a, b)| a == v && b > v);
            !(smaller && larger)
        });
        if !alternating {
            continue;
        }
        let noncrossing = (0..combo.len()).all(|x| {
            (x + 1..combo.len()).all(|y| {
                let (a, b) = combo[x];
                let (c, d) = combo[y];
                !((a < c && c < b && b < d) || (c < a && a < d && d < b))
            })
        });
        if noncrossing {
            out.push(combo);
        }
    }
    Ok(out)
}
