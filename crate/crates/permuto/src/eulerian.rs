//! Mixed Eulerian numbers via three independent routes, the weighted
//! plane-binary-tree volume formula, cyclic-class identities, and the
//! cyclic symmetrization of the volume polynomial.
//!
//! Throughout, `u_i = x_i - x_{i+1}` are the edge-length coordinates of a
//! permutohedron in `R^{n+1}`; its volume is `sum_c A_c u^c / prod c_i!`
//! over compositions `c` of `n` into `n` nonnegative parts, which defines
//! the mixed Eulerian numbers `A_c`.

use std::collections::BTreeMap;

use num::{One, Signed, Zero};

use crate::algebra::{
    binomial, catalan, compositions_of, descent_set, factorial, indexed_vars, permutations,
    Int, Rational, RationalPolynomial,
};
use crate::minkowski::{self, SubsetFamily};
use crate::permutohedron;
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Plane binary trees with the binary-search labeling
// ---------------------------------------------------------------------------

/// Plane binary tree on nodes `1..=n` carrying the binary-search labeling:
/// the descendants of node `j` (including `j`) form the consecutive
/// interval `[l_j, r_j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneBinaryTree {
    pub n: usize,
    pub root: usize,
    /// 1-based child maps; index 0 unused.
    pub left: Vec<Option<usize>>,
    pub right: Vec<Option<usize>>,
    /// Descendant interval bounds, 1-based.
    pub l: Vec<usize>,
    pub r: Vec<usize>,
}

enum Shape {
    Node(usize, Option<Box<Shape>>, Option<Box<Shape>>),
}

fn shapes(a: usize, b: usize) -> Vec<Box<Shape>> {
    // all binary-search trees on the label interval [a, b]; caller handles
    // the empty interval
    let mut out = Vec::new();
    for root in a..=b {
        let lefts: Vec<Option<Box<Shape>>> = if root == a {
            vec![None]
        } else {
            shapes(a, root - 1).into_iter().map(Some).collect()
        };
        let rights: Vec<Option<Box<Shape>>> = if root == b {
            vec![None]
        } else {
            shapes(root + 1, b).into_iter().map(Some).collect()
        };
        for lf in &lefts {
            for rt in &rights {
                out.push(Box::new(Shape::Node(root, clone_shape(lf), clone_shape(rt))));
            }
        }
    }
    out
}

fn clone_shape(s: &Option<Box<Shape>>) -> Option<Box<Shape>> {
    s.as_ref().map(|b| {
        let Shape::Node(root, l, r) = b.as_ref();
        Box::new(Shape::Node(*root, clone_shape(l), clone_shape(r)))
    })
}

impl PlaneBinaryTree {
    /// All plane binary trees on `n` nodes (a Catalan number of them).
    pub fn enumerate(n: usize) -> Result<Vec<PlaneBinaryTree>> {
        if n == 0 {
            return Err(Error::Domain("need at least one node".into()));
        }
        if n > 10 {
            return Err(Error::Resource("tree enumeration refused past n = 10".into()));
        }
        let mut out = Vec::new();
        for shape in shapes(1, n) {
            let mut t = PlaneBinaryTree {
                n,
                root: 0,
                left: vec![None; n + 1],
                right: vec![None; n + 1],
                l: vec![0; n + 1],
                r: vec![0; n + 1],
            };
            t.root = t.fill(&shape, 1, n);
            out.push(t);
        }
        Ok(out)
    }

    fn fill(&mut self, s: &Shape, a: usize, b: usize) -> usize {
        let Shape::Node(root, lf, rt) = s;
        self.l[*root] = a;
        self.r[*root] = b;
        if let Some(lf) = lf {
            self.left[*root] = Some(self.fill(lf, a, *root - 1));
        }
        if let Some(rt) = rt {
            self.right[*root] = Some(self.fill(rt, *root + 1, b));
        }
        *root
    }

    /// Hook length of node `j`: the size of its descendant interval.
    pub fn hook(&self, j: usize) -> usize {
        self.r[j] - self.l[j] + 1
    }

    /// Product of all hook lengths.
    pub fn hook_product(&self) -> Int {
        (1..=self.n).map(|j| Int::from(self.hook(j) as u64)).product()
    }
}

/// All increasing labelings of the tree: bijections `v` on `[n]` with
/// `v(i) >= v(j)` whenever `i` is a descendant of `j`.  There are
/// `n! / prod h_j` of them.
pub fn increasing_labelings(t: &PlaneBinaryTree) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut v = vec![0usize; t.n + 1];
    let values: Vec<usize> = (1..=t.n).collect();
    assign(t, t.root, &values, &mut v, &mut out);
    out
}

fn assign(
    t: &PlaneBinaryTree,
    node: usize,
    values: &[usize],
    v: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    // the subtree root takes the smallest available value; the rest split
    // between the branches in every possible way
    v[node] = values[0];
    let rest = &values[1..];
    let left_size = node - t.l[node];
    match (t.left[node], t.right[node]) {
        (None, None) => out.push(v.clone()),
        (Some(lf), None) => assign(t, lf, rest, v, out),
        (None, Some(rt)) => assign(t, rt, rest, v, out),
        (Some(lf), Some(rt)) => {
            for picked in subsets_of_size(rest.len(), left_size) {
                let lvals: Vec<usize> = picked.iter().map(|&i| rest[i]).collect();
                let rvals: Vec<usize> = (0..rest.len())
                    .filter(|i| !picked.contains(i))
                    .map(|i| rest[i])
                    .collect();
                let before = out.len();
                assign(t, lf, &lvals, v, out);
                // each left labeling produced above must be completed on the
                // right branch; re-run the left enumeration pairing instead
                let left_done: Vec<Vec<usize>> = out.drain(before..).collect();
                for labeled in left_done {
                    *v = labeled;
                    assign(t, rt, &rvals, v, out);
                }
            }
        }
    }
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..n).combinations(k).collect()
}

/// An increasing binary tree: a plane binary tree together with an
/// increasing labeling of its nodes.
#[derive(Clone, Debug)]
pub struct IncreasingBinaryTree {
    pub tree: PlaneBinaryTree,
    pub v: Vec<usize>,
}

/// The node weight `wt(i, j)` for `i` in the descendant interval
/// `[l, r]` of `j`: `(i-l+1)/(j-l+1)` when `i <= j`, else
/// `(r-i+1)/(r-j+1)` (the minimum of the two ratios).
pub fn node_weight(i: usize, j: usize, l: usize, r: usize) -> Rational {
    debug_assert!(l <= i && i <= r && l <= j && j <= r);
    if i <= j {
        Rational::new(Int::from((i - l + 1) as u64), Int::from((j - l + 1) as u64))
    } else {
        Rational::new(Int::from((r - i + 1) as u64), Int::from((r - j + 1) as u64))
    }
}

// ---------------------------------------------------------------------------
// Volume of the permutohedron over plane binary trees
// ---------------------------------------------------------------------------

/// Volume of the permutohedron in `R^{n+1}` with edge lengths `u`, as the
/// sum over plane binary trees of
/// `(n!/prod h_j) * prod_j (sum_{i in desc(j)} wt(i,j) u_i)`.
pub fn volume_binary_trees(u: &[Rational]) -> Result<Rational> {
    let n = u.len();
    let mut total = Rational::zero();
    for t in PlaneBinaryTree::enumerate(n)? {
        let mut term = Rational::new(factorial(n), t.hook_product());
        for j in 1..=n {
            let mut factor = Rational::zero();
            for i in t.l[j]..=t.r[j] {
                factor += node_weight(i, j, t.l[j], t.r[j]) * &u[i - 1];
            }
            term *= factor;
        }
        total += term;
    }
    Ok(total)
}

/// The permutohedron volume polynomial in the edge-length variables
/// `u_1, ..., u_n`, obtained from the signed-descent polynomial in the
/// vertex coordinates by `x_i = u_i + ... + u_n`.  Cached on disk keyed by
/// `n` since the symbolic expansion dominates the running time.
pub fn volume_polynomial_u(n: usize) -> Result<RationalPolynomial> {
    let uvars = indexed_vars("u", n);
    let path = std::env::temp_dir().join(format!("permuto-volume-u-{n}.json"));
    if let Ok(text) = std::fs::read_to_string(&path) {
        if let Ok(val) = serde_json::from_str::<serde_json::Value>(&text) {
            if let Ok(p) = RationalPolynomial::from_json(&val) {
                if p.vars() == uvars.as_slice() {
                    return Ok(p);
                }
            }
        }
    }
    let vx = permutohedron::volume_symbolic(n + 1)?;
    let xvars = indexed_vars("x", n + 1);
    let assignments: Vec<(String, RationalPolynomial)> = (0..n + 1)
        .map(|i| {
            let mut p = RationalPolynomial::zero(&uvars);
            for k in i..n {
                p = p.add(&RationalPolynomial::var(&uvars, &uvars[k]));
            }
            (xvars[i].clone(), p)
        })
        .collect();
    let p = vx.substitute(&assignments);
    if let Ok(text) = serde_json::to_string(&p.to_json()) {
        let _ = std::fs::write(&path, text);
    }
    Ok(p)
}

// ---------------------------------------------------------------------------
// Mixed Eulerian numbers: three routes
// ---------------------------------------------------------------------------

fn check_composition(c: &[usize]) -> Result<usize> {
    let n = c.len();
    if n == 0 || c.iter().sum::<usize>() != n {
        return Err(Error::Domain(
            "need n nonnegative parts summing to n".into(),
        ));
    }
    Ok(n)
}

fn coefficient_route(poly: &RationalPolynomial, c: &[usize]) -> Result<Int> {
    let exp: Vec<u32> = c.iter().map(|&ci| ci as u32).collect();
    let mut coeff = poly.coefficient(&exp);
    for &ci in c {
        coeff *= Rational::from_integer(factorial(ci));
    }
    if !coeff.denom().is_one() {
        return Err(Error::Internal(format!("non-integer coefficient {coeff}")));
    }
    Ok(coeff.numer().clone())
}

/// All `i`-compatible increasing binary trees with their weights
/// `prod_j wt(i_{v(j)}, j)`; every `n! * weight` is a positive integer.
pub fn i_compatible_trees(idx: &[usize]) -> Result<Vec<(IncreasingBinaryTree, Rational)>> {
    let n = idx.len();
    if idx.iter().any(|&i| i == 0 || i > n) {
        return Err(Error::Domain("indices must lie in 1..=n".into()));
    }
    let nfact = factorial(n);
    let mut out = Vec::new();
    for t in PlaneBinaryTree::enumerate(n)? {
        for v in increasing_labelings(&t) {
            let mut weight = Rational::one();
            let mut ok = true;
            for j in 1..=n {
                let i = idx[v[j] - 1];
                if i < t.l[j] || i > t.r[j] {
                    ok = false;
                    break;
                }
                weight *= node_weight(i, j, t.l[j], t.r[j]);
            }
            if ok {
                let scaled = &weight * Rational::from_integer(nfact.clone());
                if !scaled.denom().is_one() || !scaled.numer().is_positive() {
                    return Err(Error::Internal(format!(
                        "n! * weight = {scaled} is not a positive integer"
                    )));
                }
                out.push((IncreasingBinaryTree { tree: t.clone(), v }, weight));
            }
        }
    }
    Ok(out)
}

fn tree_route(c: &[usize], idx: &[usize]) -> Result<Int> {
    let n = c.len();
    // the index sequence must realize the monomial u^c
    let mut counts = vec![0usize; n];
    for &i in idx {
        counts[i - 1] += 1;
    }
    if counts != c {
        return Err(Error::Domain("index sequence does not realize c".into()));
    }
    let nfact = Rational::from_integer(factorial(n));
    let mut total = Rational::zero();
    for (_, w) in i_compatible_trees(idx)? {
        total += w * &nfact;
    }
    if !total.denom().is_one() {
        return Err(Error::Internal("tree sum is not an integer".into()));
    }
    Ok(total.numer().clone())
}

/// The linear expressions for the simplex weights `y_2, ..., y_{n+1}` in
/// the variables `u_1, ..., u_n`:
/// `y_{k+1} = sum_{i=0}^{k-1} (-1)^i C(k-1, i) u_{k-i}`.
fn y_in_u(n: usize) -> Vec<RationalPolynomial> {
    let uvars = indexed_vars("u", n);
    (1..=n)
        .map(|k| {
            let mut p = RationalPolynomial::zero(&uvars);
            for i in 0..k {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                let coeff = Rational::from_integer(binomial(k - 1, i) * Int::from(sign));
                p.add_term(
                    (0..n).map(|t| u32::from(t == k - i - 1)).collect(),
                    coeff,
                );
            }
            p
        })
        .collect()
}

/// Volume polynomial in `u` via the simplex-sum route: the permutohedron
/// in `R^{n+1}` is the weighted sum of the simplices on all subsets of
/// size at least 2, with weight depending only on the size.
fn simplex_route_polynomial(n: usize) -> Result<RationalPolynomial> {
    let ground = n + 1;
    let masks: Vec<u64> = (1u64..(1 << ground))
        .filter(|m| m.count_ones() >= 2)
        .collect();
    let family = SubsetFamily::new(ground, masks.clone(), vec![Rational::one(); masks.len()])?;
    let vy = minkowski::volume_symbolic(&family, true)?;
    let yvars = indexed_vars("y", masks.len());
    let ys = y_in_u(n);
    let assignments: Vec<(String, RationalPolynomial)> = masks
        .iter()
        .enumerate()
        .map(|(t, m)| {
            let size = m.count_ones() as usize;
            (yvars[t].clone(), ys[size - 2].clone())
        })
        .collect();
    Ok(vy.substitute(&assignments))
}

/// The mixed Eulerian number `A_c` for a composition of `n` into `n`
/// nonnegative parts, computed by up to three independent routes
/// (coefficient extraction from the signed-descent volume polynomial, the
/// weighted-tree sum, and for `n <= 4` the simplex-sum polynomial), which
/// must agree.
pub fn mixed_eulerian(c: &[usize]) -> Result<Int> {
    let n = check_composition(c)?;
    let a = coefficient_route(&volume_polynomial_u(n)?, c)?;

    // weakly increasing default realization of u^c
    let idx: Vec<usize> = (1..=n).flat_map(|i| std::iter::repeat(i).take(c[i - 1])).collect();
    let b = tree_route(c, &idx)?;
    if a != b {
        return Err(Error::Internal(format!(
            "coefficient route {a} disagrees with tree route {b} at {c:?}"
        )));
    }
    if n <= 4 {
        let d = coefficient_route(&simplex_route_polynomial(n)?, c)?;
        if a != d {
            return Err(Error::Internal(format!(
                "coefficient route {a} disagrees with simplex route {d} at {c:?}"
            )));
        }
    }
    Ok(a)
}

/// Per-route values of the mixed Eulerian number, labeled, without
/// asserting agreement (the caller compares them).
pub fn mixed_eulerian_routes(c: &[usize]) -> Result<Vec<(String, Int)>> {
    let n = check_composition(c)?;
    let mut out = vec![(
        "volume-coefficient".to_string(),
        coefficient_route(&volume_polynomial_u(n)?, c)?,
    )];
    let idx: Vec<usize> = (1..=n).flat_map(|i| std::iter::repeat(i).take(c[i - 1])).collect();
    out.push(("weighted-trees".to_string(), tree_route(c, &idx)?));
    if n <= 4 {
        out.push((
            "simplex-sum".to_string(),
            coefficient_route(&simplex_route_polynomial(n)?, c)?,
        ));
    }
    Ok(out)
}

/// The number of permutations of `[n]` with exactly `k - 1` descents.
pub fn eulerian_number(n: usize, k: usize) -> Int {
    let mut count = Int::zero();
    for w in permutations(n) {
        if descent_set(&w).len() == k - 1 {
            count += 1;
        }
    }
    count
}

/// The full table of mixed Eulerian numbers for compositions of `n`,
/// verified against the classical identities: positivity, reversal
/// symmetry, Eulerian specializations, the `(n+1)^{n-1}` and `n! C_n`
/// sums, the adjacent-pair permutation counts, `A_{1..1} = n!`,
/// `A_{k,0,..,0,n-k} = C(n,k)`, and the falling-product values on the
/// class representatives with large partial sums.
pub fn mixed_eulerian_table(n: usize) -> Result<BTreeMap<Vec<usize>, Int>> {
    if n == 0 || n > 6 {
        return Err(Error::Resource("table supported for 1 <= n <= 6".into()));
    }
    let poly = volume_polynomial_u(n)?;
    let mut table = BTreeMap::new();
    for c in compositions_of(n, n) {
        let a = coefficient_route(&poly, &c.parts)?;
        table.insert(c.parts, a);
    }
    check_table_properties(n, &table)?;
    Ok(table)
}

fn check_table_properties(n: usize, table: &BTreeMap<Vec<usize>, Int>) -> Result<()> {
    let fail = |msg: String| Err(Error::Internal(msg));
    // positivity
    if table.values().any(|a| !a.is_positive()) {
        return fail("non-positive entry".into());
    }
    // reversal symmetry
    for (c, a) in table {
        let rev: Vec<usize> = c.iter().rev().copied().collect();
        if table[&rev] != *a {
            return fail(format!("reversal symmetry fails at {c:?}"));
        }
    }
    // Eulerian specialization
    for k in 1..=n {
        let mut c = vec![0usize; n];
        c[k - 1] = n;
        if table[&c] != eulerian_number(n, k) {
            return fail(format!("Eulerian specialization fails at k = {k}"));
        }
    }
    // weighted sum (n+1)^{n-1}
    let mut weighted = Rational::zero();
    let mut plain = Int::zero();
    for (c, a) in table {
        let mut denom = Int::one();
        for &ci in c {
            denom *= factorial(ci);
        }
        weighted += Rational::new(a.clone(), denom);
        plain += a;
    }
    if weighted != Rational::from_integer(Int::from((n as u64 + 1).pow(n as u32 - 1))) {
        return fail("weighted sum differs from (n+1)^(n-1)".into());
    }
    // plain sum n! C_n
    if plain != factorial(n) * catalan(n) {
        return fail("plain sum differs from n! C_n".into());
    }
    // adjacent-pair values against direct permutation counts
    let perms = permutations(n + 1);
    let mut pairs: Vec<(usize, usize)> = (1..n).flat_map(|k| (0..=n).map(move |i| (k, i))).collect();
    pairs.push((n, 0));
    for (k, i) in pairs {
        let mut c = vec![0usize; n];
        c[k - 1] = n - i;
        if i > 0 {
            c[k] = i;
        }
        let count = perms
            .iter()
            .filter(|w| descent_set(w).len() == k && w.apply(n + 1) == i + 1)
            .count();
        if table[&c] != Int::from(count as u64) {
            return fail(format!("adjacent-pair count fails at k = {k}, i = {i}"));
        }
    }
    // A_{1,..,1} = n!
    if table[&vec![1usize; n]] != factorial(n) {
        return fail("all-ones entry differs from n!".into());
    }
    // A_{k,0,..,0,n-k} = C(n,k)
    for k in 0..=n {
        let mut c = vec![0usize; n];
        c[0] += k;
        c[n - 1] += n - k;
        if table[&c] != binomial(n, k) {
            return fail(format!("endpoint entry fails at k = {k}"));
        }
    }
    // falling-product values on large-partial-sum representatives
    for (c, a) in table {
        let mut partial = 0usize;
        let dominant = c.iter().enumerate().all(|(i, &ci)| {
            partial += ci;
            partial >= i + 1
        });
        if dominant {
            let product: Int = c
                .iter()
                .enumerate()
                .map(|(i, &ci)| Int::from((i as u64 + 1).pow(ci as u32)))
                .product();
            if *a != product {
                return fail(format!("product formula fails at {c:?}"));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Cyclic equivalence classes
// ---------------------------------------------------------------------------

/// The cyclic class of a composition: all distinct compositions `c'` such
/// that `(c', 0)` is a cyclic shift of `(c, 0)`.
pub fn cyclic_class(c: &[usize]) -> Result<Vec<Vec<usize>>> {
    let n = check_composition(c)?;
    let mut padded: Vec<usize> = c.to_vec();
    padded.push(0);
    let mut class = Vec::new();
    for t in 0..=n {
        let rotated: Vec<usize> = (0..=n).map(|k| padded[(k + t) % (n + 1)]).collect();
        if rotated[n] == 0 {
            class.push(rotated[..n].to_vec());
        }
    }
    class.sort();
    class.dedup();
    Ok(class)
}

/// Verify the class identities for the class of `c`: the class sum of
/// mixed Eulerian numbers is `n!`, the number of classes for this `n` is
/// the Catalan number, and the unique member with partial sums
/// `c_1 + ... + c_i >= i` has value `1^{c_1} 2^{c_2} ... n^{c_n}`.
/// Returns the class members and their sum.
pub fn cyclic_class_check(c: &[usize]) -> Result<(Vec<Vec<usize>>, Int)> {
    let n = check_composition(c)?;
    let poly = volume_polynomial_u(n)?;
    let class = cyclic_class(c)?;
    let mut sum = Int::zero();
    for member in &class {
        sum += coefficient_route(&poly, member)?;
    }
    if sum != factorial(n) {
        return Err(Error::Internal(format!("class sum {sum} differs from n!")));
    }
    // number of classes over all compositions of n
    let mut reps: Vec<Vec<usize>> = Vec::new();
    for comp in compositions_of(n, n) {
        let cls = cyclic_class(&comp.parts)?;
        let rep = cls.into_iter().min().expect("class is nonempty");
        if !reps.contains(&rep) {
            reps.push(rep);
        }
    }
    if Int::from(reps.len() as u64) != catalan(n) {
        return Err(Error::Internal(format!(
            "{} classes found, expected the Catalan number",
            reps.len()
        )));
    }
    // the dominant representative and its product formula
    let mut dominant = None;
    for member in &class {
        let mut partial = 0usize;
        if member.iter().enumerate().all(|(i, &ci)| {
            partial += ci;
            partial >= i + 1
        }) {
            if dominant.replace(member.clone()).is_some() {
                return Err(Error::Internal("two dominant members in one class".into()));
            }
        }
    }
    let dominant =
        dominant.ok_or_else(|| Error::Internal("class has no dominant member".into()))?;
    let product: Int = dominant
        .iter()
        .enumerate()
        .map(|(i, &ci)| Int::from((i as u64 + 1).pow(ci as u32)))
        .product();
    if coefficient_route(&poly, &dominant)? != product {
        return Err(Error::Internal(format!(
            "product formula fails on the dominant member {dominant:?}"
        )));
    }
    Ok((class, sum))
}

// ---------------------------------------------------------------------------
// Cyclic symmetrization
// ---------------------------------------------------------------------------

/// Verify that the `n+1` cyclic shifts of the volume polynomial (viewed
/// in `u_1, ..., u_{n+1}`, the last variable absent) sum to
/// `(u_1 + ... + u_{n+1})^n`, and check the companion numerical identity:
/// symmetrizing `(1/n!) (sum_k (lambda_{w(1)}+...+lambda_{w(k)}) u_k)^n /
/// prod (lambda_{w(k)} - lambda_{w(k+1)})` over all permutations `w` and
/// all cyclic shifts of `u` gives the same power sum, at 10 random
/// rational points.
pub fn cyclic_symmetrization_check(n: usize, seed: u64) -> Result<bool> {
    use rand::{Rng, SeedableRng};
    if n == 0 || n > 5 {
        return Err(Error::Resource("supported for 1 <= n <= 5".into()));
    }
    let wide = indexed_vars("u", n + 1);
    let base = volume_polynomial_u(n)?.remap(&wide);
    let mut total = RationalPolynomial::zero(&wide);
    for t in 0..=n {
        let assignments: Vec<(String, RationalPolynomial)> = (0..=n)
            .map(|k| {
                (
                    wide[k].clone(),
                    RationalPolynomial::var(&wide, &wide[(k + t) % (n + 1)]),
                )
            })
            .collect();
        total = total.add(&base.substitute(&assignments));
    }
    let mut linear = RationalPolynomial::zero(&wide);
    for k in 0..=n {
        linear = linear.add(&RationalPolynomial::var(&wide, &wide[k]));
    }
    if total != linear.pow(n) {
        return Ok(false);
    }

    // numerical companion identity
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let perms = permutations(n + 1);
    for _ in 0..10 {
        let mut lambda: Vec<Rational>;
        loop {
            lambda = (0..=n)
                .map(|_| {
                    Rational::new(Int::from(rng.gen_range(-30i64..=30)), Int::from(1u32))
                })
                .collect();
            let mut sorted = lambda.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() == n + 1 {
                break;
            }
        }
        let u: Vec<Rational> = (0..=n)
            .map(|_| {
                Rational::new(
                    Int::from(rng.gen_range(-9i64..=9)),
                    Int::from(rng.gen_range(1i64..=4)),
                )
            })
            .collect();
        let mut sum = Rational::zero();
        for w in &perms {
            let mut denom = Rational::one();
            for k in 1..=n {
                denom *= &lambda[w.apply(k) - 1] - &lambda[w.apply(k + 1) - 1];
            }
            for t in 0..=n {
                let mut inner = Rational::zero();
                let mut prefix = Rational::zero();
                for k in 1..=n + 1 {
                    prefix += &lambda[w.apply(k) - 1];
                    inner += &prefix * &u[(k - 1 + t) % (n + 1)];
                }
                let mut power = Rational::one();
                for _ in 0..n {
                    power *= &inner;
                }
                sum += power / &denom;
            }
        }
        sum /= Rational::from_integer(factorial(n));
        let mut usum = Rational::zero();
        for ui in &u {
            usum += ui;
        }
        let mut expected = Rational::one();
        for _ in 0..n {
            expected *= &usum;
        }
        if sum != expected {
            return Ok(false);
        }
    }
    Ok(true)
}
