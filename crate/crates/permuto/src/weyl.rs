//! Root systems from symmetrizable Cartan matrices, weight-polytope
//! volumes via rooted trees on the Dynkin diagram, mixed Eulerian numbers
//! for arbitrary types, the facet-derivative volume recurrence, and
//! finite-rank verification of the Weyl-group vertex-sum formulas for
//! volumes and lattice-point generating functions.
//!
//! Volumes are normalized so the parallelepiped spanned by the simple
//! roots has volume 1.  Weights are written either in fundamental-weight
//! coordinates (`omega` basis) or simple-root coordinates (`alpha` basis).

use std::collections::BTreeSet;

use num::{One, Signed, Zero};

use crate::algebra::{
    factorial, indexed_vars, permutations, Int, Rational, RationalPolynomial,
};
use crate::genperm::{graphical_building, BForest, SimpleGraph};
use crate::{Error, Result};

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

// ---------------------------------------------------------------------------
// Exact linear algebra helpers
// ---------------------------------------------------------------------------

fn mat_inverse(m: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::Domain("singular matrix".into()))?;
        a.swap(col, pivot_row);
        inv.swap(col, pivot_row);
        let pivot = a[col][col].clone();
        for c in 0..n {
            a[col][c] = &a[col][c] / &pivot;
            inv[col][c] = &inv[col][c] / &pivot;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..n {
                    let s1 = &f * &a[col][c];
                    a[r][c] = &a[r][c] - &s1;
                    let s2 = &f * &inv[col][c];
                    inv[r][c] = &inv[r][c] - &s2;
                }
            }
        }
    }
    Ok(inv)
}

fn is_positive_definite(g: &[Vec<Rational>]) -> bool {
    // leading principal minors all positive, by exact elimination
    let n = g.len();
    let mut a: Vec<Vec<Rational>> = g.to_vec();
    for k in 0..n {
        if !a[k][k].is_positive() {
            return false;
        }
        let pivot = a[k][k].clone();
        for r in k + 1..n {
            if !a[r][k].is_zero() {
                let f = &a[r][k] / &pivot;
                for c in k..n {
                    let s = &f * &a[k][c];
                    a[r][c] = &a[r][c] - &s;
                }
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Root systems
// ---------------------------------------------------------------------------

/// A finite root system presented by a symmetrizable Cartan matrix, with
/// exact Gram data and the Weyl-group order.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub n: usize,
    pub cartan: Vec<Vec<i64>>,
    /// Symmetrizers `d_i > 0` with `d_i a_ij = d_j a_ji`, normalized so
    /// the minimum is 1; `(alpha_i, alpha_i) = 2 d_i`.
    pub d: Vec<Rational>,
    /// `(alpha_i, alpha_j) = d_i a_ij`.
    pub gram_simple: Vec<Vec<Rational>>,
    /// `(omega_i, omega_j)` for the fundamental weights.
    pub gram_fundamental: Vec<Vec<Rational>>,
    /// Rows express each fundamental weight in the simple-root basis.
    pub omega_in_alpha: Vec<Vec<Rational>>,
    pub weyl_order: Int,
}

/// All Weyl-group elements as integer matrices acting on simple-root
/// coordinates (column `i` is the image of `alpha_i`).
pub fn weyl_elements(cartan: &[Vec<i64>]) -> Result<Vec<Vec<Vec<i64>>>> {
    let n = cartan.len();
    let mut gens: Vec<Vec<Vec<i64>>> = Vec::new();
    for i in 0..n {
        // the reflection in alpha_i sends alpha_j to alpha_j - a_ij alpha_i
        let mut m: Vec<Vec<i64>> = (0..n)
            .map(|r| (0..n).map(|c| i64::from(r == c)).collect())
            .collect();
        for j in 0..n {
            m[i][j] -= cartan[i][j];
        }
        gens.push(m);
    }
    let identity: Vec<Vec<i64>> = (0..n)
        .map(|r| (0..n).map(|c| i64::from(r == c)).collect())
        .collect();
    let mut seen: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
    seen.insert(identity.clone());
    let mut frontier = vec![identity];
    while let Some(w) = frontier.pop() {
        for g in &gens {
            let mut prod = vec![vec![0i64; n]; n];
            for r in 0..n {
                for c in 0..n {
                    for k in 0..n {
                        prod[r][c] += g[r][k] * w[k][c];
                    }
                }
            }
            if seen.insert(prod.clone()) {
                frontier.push(prod);
            }
        }
        if seen.len() > 10_000_000 {
            return Err(Error::Domain(
                "reflection closure exceeds the cap; not a finite type".into(),
            ));
        }
    }
    Ok(seen.into_iter().collect())
}

/// Build the root system from a Cartan matrix: validates shape, solves for
/// the symmetrizers, checks positive definiteness, and closes the simple
/// reflections to obtain the Weyl-group order.
pub fn build_root_system(cartan: &[Vec<i64>]) -> Result<RootSystem> {
    let n = cartan.len();
    if n == 0 || cartan.iter().any(|row| row.len() != n) {
        return Err(Error::Domain("Cartan matrix must be square".into()));
    }
    for i in 0..n {
        if cartan[i][i] != 2 {
            return Err(Error::Domain("diagonal entries must be 2".into()));
        }
        for j in 0..n {
            if i != j {
                if cartan[i][j] > 0 {
                    return Err(Error::Domain("off-diagonal entries must be <= 0".into()));
                }
                if (cartan[i][j] == 0) != (cartan[j][i] == 0) {
                    return Err(Error::Domain("zero pattern must be symmetric".into()));
                }
            }
        }
    }
    // symmetrizers: propagate along Dynkin edges, then check globally
    let mut d: Vec<Option<Rational>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Rational::one());
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let di = d[i].clone().expect("assigned before push");
            for j in 0..n {
                if i != j && cartan[i][j] != 0 && d[j].is_none() {
                    // d_i a_ij = d_j a_ji
                    d[j] = Some(
                        &di * Rational::new(Int::from(cartan[i][j]), Int::from(cartan[j][i])),
                    );
                    stack.push(j);
                }
            }
        }
    }
    let mut d: Vec<Rational> = d.into_iter().map(|x| x.expect("all reached")).collect();
    for i in 0..n {
        for j in 0..n {
            if &d[i] * Rational::from_integer(Int::from(cartan[i][j]))
                != &d[j] * Rational::from_integer(Int::from(cartan[j][i]))
            {
                return Err(Error::Domain("Cartan matrix is not symmetrizable".into()));
            }
        }
    }
    let dmin = d.iter().cloned().min().expect("nonempty");
    if !dmin.is_positive() {
        return Err(Error::Domain("symmetrizers must be positive".into()));
    }
    for di in &mut d {
        *di = &*di / &dmin;
    }
    let gram_simple: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| &d[i] * Rational::from_integer(Int::from(cartan[i][j])))
                .collect()
        })
        .collect();
    if !is_positive_definite(&gram_simple) {
        return Err(Error::Domain(
            "root-length form is not positive definite; not a finite type".into(),
        ));
    }
    // omega_k = sum_i m_ki alpha_i with M = (A^T)^{-1}
    let at: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| Rational::from_integer(Int::from(cartan[j][i]))).collect())
        .collect();
    let omega_in_alpha = mat_inverse(&at)?;
    let gram_fundamental: Vec<Vec<Rational>> = (0..n)
        .map(|k| {
            (0..n)
                .map(|l| {
                    let mut s = Rational::zero();
                    for i in 0..n {
                        for j in 0..n {
                            s += &omega_in_alpha[k][i]
                                * &omega_in_alpha[l][j]
                                * &gram_simple[i][j];
                        }
                    }
                    s
                })
                .collect()
        })
        .collect();
    let weyl_order = Int::from(weyl_elements(cartan)?.len() as u64);
    Ok(RootSystem {
        n,
        cartan: cartan.to_vec(),
        d,
        gram_simple,
        gram_fundamental,
        omega_in_alpha,
        weyl_order,
    })
}

/// Parse `{"cartan": [[2,-1],[-1,2]]}`.
pub fn root_system_from_json(value: &serde_json::Value) -> Result<RootSystem> {
    #[derive(serde::Deserialize)]
    struct J {
        cartan: Vec<Vec<i64>>,
    }
    let j: J = serde_json::from_value(value.clone())
        .map_err(|e| Error::Domain(format!("bad Cartan JSON: {e}")))?;
    build_root_system(&j.cartan)
}

impl RootSystem {
    /// Dynkin-diagram edges (0-based pairs).
    pub fn dynkin_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.cartan[i][j] != 0 {
                    edges.push((i, j));
                }
            }
        }
        edges
    }

    fn components(&self, indices: &[usize]) -> Vec<Vec<usize>> {
        let mut remaining: Vec<usize> = indices.to_vec();
        let mut comps = Vec::new();
        while let Some(start) = remaining.first().copied() {
            let mut comp = vec![start];
            let mut frontier = vec![start];
            remaining.retain(|&x| x != start);
            while let Some(i) = frontier.pop() {
                let newly: Vec<usize> = remaining
                    .iter()
                    .copied()
                    .filter(|&j| self.cartan[i][j] != 0)
                    .collect();
                for j in newly {
                    remaining.retain(|&x| x != j);
                    comp.push(j);
                    frontier.push(j);
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Gram matrix of the parabolic fundamental weights for the subsystem
    /// on `indices`, using the restriction of the global inner product.
    /// Entry `(s, t)` is `(omega^I_{indices[s]}, omega^I_{indices[t]})`.
    pub fn parabolic_gram(&self, indices: &[usize]) -> Result<Vec<Vec<Rational>>> {
        let k = indices.len();
        let at: Vec<Vec<Rational>> = (0..k)
            .map(|s| {
                (0..k)
                    .map(|t| Rational::from_integer(Int::from(self.cartan[indices[t]][indices[s]])))
                    .collect()
            })
            .collect();
        let m = mat_inverse(&at)?;
        Ok((0..k)
            .map(|s| {
                (0..k)
                    .map(|t| {
                        let mut acc = Rational::zero();
                        for a in 0..k {
                            for b in 0..k {
                                acc += &m[s][a]
                                    * &m[t][b]
                                    * &self.gram_simple[indices[a]][indices[b]];
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect())
    }

    fn sub_weyl_order(&self, indices: &[usize]) -> Result<Int> {
        let k = indices.len();
        if k == 0 {
            return Ok(Int::one());
        }
        let sub: Vec<Vec<i64>> = indices
            .iter()
            .map(|&i| indices.iter().map(|&j| self.cartan[i][j]).collect())
            .collect();
        Ok(Int::from(weyl_elements(&sub)?.len() as u64))
    }
}

// ---------------------------------------------------------------------------
// Trees on the Dynkin diagram and the volume polynomial
// ---------------------------------------------------------------------------

/// All rooted trees on the Dynkin nodes whose descendant sets induce
/// connected subdiagrams, with no incomparable pair whose union is
/// connected (the building-set trees of the Dynkin graph).
pub fn phi_trees(rs: &RootSystem) -> Result<Vec<BForest>> {
    let edges: Vec<(usize, usize)> = rs
        .dynkin_edges()
        .into_iter()
        .map(|(i, j)| (i + 1, j + 1))
        .collect();
    let graph = SimpleGraph::new(rs.n, &edges)?;
    Ok(graphical_building(&graph)?.b_forests())
}

fn trees_on_component(rs: &RootSystem, comp: &[usize]) -> Result<Vec<BForest>> {
    // build the induced subgraph on positions 1..=k, take its trees
    let k = comp.len();
    let mut edges = Vec::new();
    for s in 0..k {
        for t in s + 1..k {
            if rs.cartan[comp[s]][comp[t]] != 0 {
                edges.push((s + 1, t + 1));
            }
        }
    }
    let graph = SimpleGraph::new(k, &edges)?;
    Ok(graphical_building(&graph)?.b_forests())
}

/// Weight-polytope volume polynomial in `u_1, ..., u_n` over the subsystem
/// on `indices` (the remaining `u` variables do not occur), as the
/// product over Dynkin components of the tree sums
/// `(2^k |W| / prod (alpha_i, alpha_i)) sum_T prod_j f_{desc(j), j}`.
pub fn volume_symbolic_sub(rs: &RootSystem, indices: &[usize]) -> Result<RationalPolynomial> {
    let uvars = indexed_vars("u", rs.n);
    let mut result = RationalPolynomial::constant(&uvars, Rational::one());
    for comp in rs.components(indices) {
        let mut comp_sum = RationalPolynomial::zero(&uvars);
        for tree in trees_on_component(rs, &comp)? {
            let mut term = RationalPolynomial::constant(&uvars, Rational::one());
            for pos in 1..=comp.len() {
                // descendant positions within the component, as global indices
                let desc: Vec<usize> =
                    bits(tree.descendants(pos)).map(|b| comp[b]).collect();
                let j_global = comp[pos - 1];
                let gram = rs.parabolic_gram(&desc)?;
                let j_local = desc.iter().position(|&g| g == j_global).expect("j in desc");
                let mut f = RationalPolynomial::zero(&uvars);
                let size = Rational::new(Int::one(), Int::from(desc.len() as u64));
                for (i_local, &i_global) in desc.iter().enumerate() {
                    let coeff = &size * &gram[i_local][j_local];
                    let mut exp = vec![0u32; rs.n];
                    exp[i_global] = 1;
                    f.add_term(exp, coeff);
                }
                term = term.mul(&f);
            }
            comp_sum = comp_sum.add(&term);
        }
        // 2^k |W_comp| / prod 2 d_i = |W_comp| / prod d_i
        let mut pref = Rational::from_integer(rs.sub_weyl_order(&comp)?);
        for &i in &comp {
            pref /= &rs.d[i];
        }
        result = result.mul(&comp_sum.scale(&pref));
    }
    Ok(result)
}

/// Volume polynomial of the full weight polytope in `u_1, ..., u_n`.
pub fn volume_symbolic(rs: &RootSystem) -> Result<RationalPolynomial> {
    let all: Vec<usize> = (0..rs.n).collect();
    volume_symbolic_sub(rs, &all)
}

/// Volume of the weight polytope of `u_1 omega_1 + ... + u_n omega_n`.
pub fn weight_polytope_volume(rs: &RootSystem, u: &[Rational]) -> Result<Rational> {
    if u.len() != rs.n {
        return Err(Error::Domain("coefficient count must equal the rank".into()));
    }
    Ok(volume_symbolic(rs)?.evaluate(u))
}

// ---------------------------------------------------------------------------
// Mixed Eulerian numbers for arbitrary types
// ---------------------------------------------------------------------------

fn increasing_labelings_forest(tree: &BForest, n: usize) -> Vec<Vec<usize>> {
    // v(i) >= v(j) whenever i is a descendant of j; v stored 1-based
    let descs: Vec<u64> = (1..=n).map(|j| tree.descendants(j)).collect();
    let mut out = Vec::new();
    for w in permutations(n) {
        let ok = (1..=n).all(|j| bits(descs[j - 1]).all(|i| w.apply(i + 1) >= w.apply(j)));
        if ok {
            let mut v = vec![0usize; n + 1];
            for j in 1..=n {
                v[j] = w.apply(j);
            }
            out.push(v);
        }
    }
    out
}

/// The mixed Eulerian number `A_c` for this root system: the coefficient
/// `prod c_i! [u^c]` of the volume polynomial, computed independently via
/// compatible increasing trees on the Dynkin diagram (for two different
/// realizations of the monomial) and cross-checked.
pub fn mixed_phi_eulerian(rs: &RootSystem, c: &[usize]) -> Result<Rational> {
    let n = rs.n;
    if c.len() != n || c.iter().sum::<usize>() != n {
        return Err(Error::Domain("need n parts summing to the rank".into()));
    }
    if rs.components(&(0..n).collect::<Vec<_>>()).len() != 1 {
        return Err(Error::Domain("Dynkin diagram must be connected".into()));
    }
    if n > 6 {
        return Err(Error::Resource("rank capped at 6".into()));
    }
    let poly = volume_symbolic(rs)?;
    let exp: Vec<u32> = c.iter().map(|&ci| ci as u32).collect();
    let mut target = poly.coefficient(&exp);
    for &ci in c {
        target *= Rational::from_integer(factorial(ci));
    }

    let default: Vec<usize> = (1..=n)
        .flat_map(|i| std::iter::repeat(i).take(c[i - 1]))
        .collect();
    let mut alternative = default.clone();
    alternative.reverse();
    for idx in [&default, &alternative] {
        let via_trees = phi_eulerian_tree_sum(rs, idx)?;
        if via_trees != target {
            return Err(Error::Internal(format!(
                "tree sum {via_trees} for realization {idx:?} disagrees with coefficient {target}"
            )));
        }
    }
    Ok(target)
}

fn phi_eulerian_tree_sum(rs: &RootSystem, idx: &[usize]) -> Result<Rational> {
    let n = rs.n;
    let mut pref = Rational::from_integer(rs.weyl_order.clone());
    for i in 0..n {
        pref /= &rs.d[i]; // 2^n / prod (alpha_i, alpha_i)
    }
    let mut sum = Rational::zero();
    for tree in phi_trees(rs)? {
        let descs: Vec<Vec<usize>> = (1..=n)
            .map(|j| bits(tree.descendants(j)).collect::<Vec<usize>>())
            .collect();
        let grams: Vec<Vec<Vec<Rational>>> = descs
            .iter()
            .map(|d| rs.parabolic_gram(d))
            .collect::<Result<_>>()?;
        for v in increasing_labelings_forest(&tree, n) {
            let mut weight = Rational::one();
            let mut ok = true;
            for j in 1..=n {
                let i_global = idx[v[j] - 1] - 1;
                let desc = &descs[j - 1];
                let Some(i_local) = desc.iter().position(|&g| g == i_global) else {
                    ok = false;
                    break;
                };
                let j_local = desc.iter().position(|&g| g == j - 1).expect("j in desc");
                weight *= &grams[j - 1][i_local][j_local];
            }
            if ok {
                sum += weight;
            }
        }
    }
    Ok(sum * pref)
}

// ---------------------------------------------------------------------------
// Volume recurrence
// ---------------------------------------------------------------------------

/// Verify symbolically that for every `i`,
/// `d/du_i V = sum_j (|W| / |W_(j)|) (omega_i, omega_j)/(alpha_j, omega_j)
/// V_(j)` where the `j`-th Dynkin node is deleted on the right; for
/// type-A chains additionally verify the binomial-weighted product form
/// with `wt = min(i/j, (n+1-i)/(n+1-j))`.
pub fn volume_recurrence_check(rs: &RootSystem) -> Result<bool> {
    let n = rs.n;
    if n > 4 {
        return Err(Error::Resource("rank capped at 4".into()));
    }
    let uvars = indexed_vars("u", n);
    let v = volume_symbolic(rs)?;
    for i in 0..n {
        let lhs = v.partial_derivative(&uvars[i]);
        let mut rhs = RationalPolynomial::zero(&uvars);
        for j in 0..n {
            let rest: Vec<usize> = (0..n).filter(|&k| k != j).collect();
            let facet_count =
                Rational::new(rs.weyl_order.clone(), rs.sub_weyl_order(&rest)?);
            // (alpha_j, omega_j) = d_j
            let scale = facet_count * &rs.gram_fundamental[i][j] / &rs.d[j];
            rhs = rhs.add(&volume_symbolic_sub(rs, &rest)?.scale(&scale));
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    if is_type_a_chain(rs) && !type_a_recurrence_check(n)? {
        return Ok(false);
    }
    Ok(true)
}

fn is_type_a_chain(rs: &RootSystem) -> bool {
    let n = rs.n;
    (0..n).all(|i| {
        (0..n).all(|j| {
            let expected = if i == j {
                2
            } else if i.abs_diff(j) == 1 {
                -1
            } else {
                0
            };
            rs.cartan[i][j] == expected
        })
    })
}

fn type_a_recurrence_check(n: usize) -> Result<bool> {
    use crate::algebra::binomial;
    let uvars = indexed_vars("u", n);
    let v = crate::eulerian::volume_polynomial_u(n)?;
    // V_k in a shifted variable window: remap u_1..u_{k-1} to offset..
    let window = |k: usize, offset: usize| -> Result<RationalPolynomial> {
        if k <= 1 {
            return Ok(RationalPolynomial::constant(&uvars, Rational::one()));
        }
        let small = crate::eulerian::volume_polynomial_u(k - 1)?;
        let small_vars = indexed_vars("u", k - 1);
        let assignments: Vec<(String, RationalPolynomial)> = (0..k - 1)
            .map(|t| {
                (
                    small_vars[t].clone(),
                    RationalPolynomial::var(&uvars, &uvars[offset + t]),
                )
            })
            .collect();
        Ok(small.substitute(&assignments).remap(&uvars))
    };
    for i in 1..=n {
        let lhs = v.partial_derivative(&uvars[i - 1]);
        let mut rhs = RationalPolynomial::zero(&uvars);
        for j in 1..=n {
            let wt = {
                let a = Rational::new(Int::from(i as u64), Int::from(j as u64));
                let b = Rational::new(
                    Int::from((n + 1 - i) as u64),
                    Int::from((n + 1 - j) as u64),
                );
                a.min(b)
            };
            let scale = Rational::from_integer(binomial(n + 1, j))
                * Rational::new(
                    Int::from((j * (n + 1 - j)) as u64),
                    Int::from((n + 1) as u64),
                )
                * wt;
            let product = window(j, 0)?.mul(&window(n - j + 1, j)?);
            rhs = rhs.add(&product.scale(&scale));
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Lattice points of weight polytopes
// ---------------------------------------------------------------------------

fn lambda_alpha_coords(rs: &RootSystem, lambda: &[Int]) -> Vec<Rational> {
    (0..rs.n)
        .map(|k| {
            let mut s = Rational::zero();
            for i in 0..rs.n {
                s += Rational::from_integer(lambda[i].clone()) * &rs.omega_in_alpha[i][k];
            }
            s
        })
        .collect()
}

fn pairing_with_coroot(rs: &RootSystem, mu_alpha: &[Rational], i: usize) -> Rational {
    // <mu, alpha_i^vee> = (mu, alpha_i) / d_i
    let mut ip = Rational::zero();
    for k in 0..rs.n {
        ip += &mu_alpha[k] * &rs.gram_simple[k][i];
    }
    ip / &rs.d[i]
}

fn dominant_representative(rs: &RootSystem, mu_alpha: &[Rational]) -> Vec<Rational> {
    let mut mu = mu_alpha.to_vec();
    loop {
        let Some(i) = (0..rs.n).find(|&i| pairing_with_coroot(rs, &mu, i).is_negative()) else {
            return mu;
        };
        let c = pairing_with_coroot(rs, &mu, i);
        mu[i] = &mu[i] - &c;
    }
}

/// All weights of the root-lattice coset of a dominant integral `lambda`
/// (given in fundamental-weight coordinates) lying in its weight
/// polytope, returned in fundamental-weight coordinates.  Membership: the
/// dominant representative `mu+` must satisfy `lambda - mu+` nonnegative
/// in simple-root coordinates.
pub fn weight_polytope_lattice_points(rs: &RootSystem, lambda: &[Int]) -> Result<Vec<Vec<Int>>> {
    let n = rs.n;
    if lambda.len() != n {
        return Err(Error::Domain("weight length must equal the rank".into()));
    }
    if lambda.iter().any(|l| l.is_negative()) {
        return Err(Error::Domain("weight must be dominant".into()));
    }
    if n > 3 {
        return Err(Error::Resource("rank capped at 3".into()));
    }
    let la = lambda_alpha_coords(rs, lambda);
    // box bounds from the orbit: every point is lambda - sum k_i alpha_i
    // with 0 <= k_i <= max over the orbit of the coordinate drop
    let elements = weyl_elements(&rs.cartan)?;
    if elements.len() > 100_000 {
        return Err(Error::Resource("Weyl orbit too large".into()));
    }
    let mut bounds = vec![Int::zero(); n];
    for w in &elements {
        for k in 0..n {
            let mut wk = Rational::zero();
            for c in 0..n {
                wk += Rational::from_integer(Int::from(w[k][c])) * &la[c];
            }
            let drop = &la[k] - wk;
            let floor = drop.floor().numer().clone();
            if floor > bounds[k] {
                bounds[k] = floor;
            }
        }
    }
    let mut box_size = Int::one();
    for b in &bounds {
        box_size *= b + 1;
    }
    if box_size > Int::from(1_000_000u64) {
        return Err(Error::Resource("candidate box too large".into()));
    }
    let limits: Vec<i64> = bounds
        .iter()
        .map(|b| i64::try_from(b).expect("bound fits after box guard"))
        .collect();
    let mut out = Vec::new();
    let mut k = vec![0i64; n];
    loop {
        let mu: Vec<Rational> = (0..n)
            .map(|t| &la[t] - Rational::from_integer(Int::from(k[t])))
            .collect();
        let plus = dominant_representative(rs, &mu);
        let inside = (0..n).all(|t| !(&la[t] - &plus[t]).is_negative());
        if inside {
            // convert to fundamental-weight coordinates: mu_omega = A^T mu_alpha
            let mu_omega: Vec<Int> = (0..n)
                .map(|i| {
                    let mut s = Rational::zero();
                    for t in 0..n {
                        s += Rational::from_integer(Int::from(rs.cartan[i][t])) * &mu[t];
                    }
                    debug_assert!(s.denom().is_one());
                    s.numer().clone()
                })
                .collect();
            out.push(mu_omega);
        }
        // advance the odometer
        let mut pos = 0;
        loop {
            if pos == n {
                out.sort();
                return Ok(out);
            }
            k[pos] += 1;
            if k[pos] <= limits[pos] {
                break;
            }
            k[pos] = 0;
            pos += 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Weyl-group vertex sums: volume and exponent sums
// ---------------------------------------------------------------------------

fn inner_alpha(rs: &RootSystem, a: &[Rational], b: &[Rational]) -> Rational {
    let mut s = Rational::zero();
    for i in 0..rs.n {
        for j in 0..rs.n {
            s += &a[i] * &b[j] * &rs.gram_simple[i][j];
        }
    }
    s
}

fn apply_w(w: &[Vec<i64>], v: &[Rational]) -> Vec<Rational> {
    (0..w.len())
        .map(|r| {
            let mut s = Rational::zero();
            for c in 0..w.len() {
                s += Rational::from_integer(Int::from(w[r][c])) * &v[c];
            }
            s
        })
        .collect()
}

fn series_mul(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for i in 0..len.min(a.len()) {
        if a[i].is_zero() {
            continue;
        }
        for j in 0..(len - i).min(b.len()) {
            out[i + j] += &a[i] * &b[j];
        }
    }
    out
}

fn series_exp(s: &Rational, len: usize) -> Vec<Rational> {
    // exp(s t) truncated
    let mut out = Vec::with_capacity(len);
    let mut term = Rational::one();
    for j in 0..len {
        if j > 0 {
            term = term * s / Rational::from_integer(Int::from(j as u64));
        }
        out.push(term.clone());
    }
    out
}

fn series_inverse(a: &[Rational], len: usize) -> Vec<Rational> {
    // multiplicative inverse of a power series with nonzero constant term
    let mut out = vec![Rational::zero(); len];
    out[0] = Rational::one() / &a[0];
    for k in 1..len {
        let mut acc = Rational::zero();
        for j in 1..=k.min(a.len() - 1) {
            acc += &a[j] * &out[k - j];
        }
        out[k] = -(acc / &a[0]);
    }
    out
}

fn edge_factor(s: &Rational, len: usize) -> Vec<Rational> {
    // t / (1 - exp(-s t)) as an analytic series: invert
    // (1 - exp(-s t))/t = s - s^2 t/2! + s^3 t^2/3! - ...
    let mut base = Vec::with_capacity(len);
    let mut power = s.clone();
    for j in 0..len {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        base.push(
            &power * Rational::new(Int::from(sign), factorial(j + 1)),
        );
        power = power * s;
    }
    series_inverse(&base, len)
}

/// Verify the two Weyl vertex-sum formulas for a dominant integral
/// weight `lambda` (fundamental-weight coordinates):
/// the `1/r! sum_w (mu, w(lambda))^r / prod (mu, w(alpha_i))` volume
/// formula at a generic rational `mu`, and the exponent-sum identity
/// `sum_{lattice points} e^p = sum_w e^{w(lambda)} / prod (1 -
/// e^{-w(alpha_i)})` specialized along a generic linear form and compared
/// as truncated power series.
pub fn brion_weight_checks(rs: &RootSystem, lambda: &[Int], seed: u64) -> Result<bool> {
    use rand::{Rng, SeedableRng};
    let n = rs.n;
    if n > 3 {
        return Err(Error::Resource("rank capped at 3".into()));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let elements = weyl_elements(&rs.cartan)?;
    let la = lambda_alpha_coords(rs, lambda);
    let alphas: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|k| {
                    if k == i {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();

    // volume via the vertex sum at a generic auxiliary weight
    let u: Vec<Rational> = lambda.iter().map(|l| Rational::from_integer(l.clone())).collect();
    let direct = weight_polytope_volume(rs, &u)?;
    let mut attempts = 0;
    let vertex_volume = loop {
        attempts += 1;
        if attempts > 5 {
            return Err(Error::Internal("no generic auxiliary weight found".into()));
        }
        let mu: Vec<Rational> = (0..n)
            .map(|_| Rational::from_integer(Int::from(rng.gen_range(-40i64..=40))))
            .collect();
        let mut sum = Rational::zero();
        let mut degenerate = false;
        for w in &elements {
            let mut denom = Rational::one();
            for a in &alphas {
                let x = inner_alpha(rs, &mu, &apply_w(w, a));
                if x.is_zero() {
                    degenerate = true;
                    break;
                }
                denom *= x;
            }
            if degenerate {
                break;
            }
            let num = inner_alpha(rs, &mu, &apply_w(w, &la));
            let mut power = Rational::one();
            for _ in 0..n {
                power *= &num;
            }
            sum += power / denom;
        }
        if !degenerate {
            break sum / Rational::from_integer(factorial(n));
        }
    };
    if vertex_volume != direct {
        return Ok(false);
    }

    // exponent sum via a generic linear form on root coordinates
    let points = weight_polytope_lattice_points(rs, lambda)?;
    let len = n + 3;
    let mut attempts = 0;
    loop {
        attempts += 1;
        if attempts > 5 {
            return Err(Error::Internal("no generic linear form found".into()));
        }
        let h: Vec<Rational> = (0..n)
            .map(|_| Rational::from_integer(Int::from(rng.gen_range(-20i64..=20))))
            .collect();
        let hdot = |v: &[Rational]| -> Rational {
            let mut s = Rational::zero();
            for t in 0..n {
                s += &h[t] * &v[t];
            }
            s
        };
        let mut degenerate = false;
        let mut lhs = vec![Rational::zero(); len];
        for w in &elements {
            let mut term = series_exp(&hdot(&apply_w(w, &la)), len);
            for a in &alphas {
                let s = hdot(&apply_w(w, a));
                if s.is_zero() {
                    degenerate = true;
                    break;
                }
                term = series_mul(&term, &edge_factor(&s, len), len);
            }
            if degenerate {
                break;
            }
            for (acc, t) in lhs.iter_mut().zip(term) {
                *acc += t;
            }
        }
        if degenerate {
            continue;
        }
        // finite side: t^n * sum over lattice points of exp(h(p) t)
        let mut rhs = vec![Rational::zero(); len];
        for p_omega in &points {
            let p_alpha = lambda_alpha_coords(
                rs,
                &p_omega.iter().cloned().collect::<Vec<Int>>(),
            );
            let e = series_exp(&hdot(&p_alpha), len);
            for k in n..len {
                rhs[k] += &e[k - n];
            }
        }
        return Ok(lhs == rhs);
    }
}

// ---------------------------------------------------------------------------
// Standard Cartan matrices
// ---------------------------------------------------------------------------

pub fn cartan_a(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        2
                    } else if i.abs_diff(j) == 1 {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

/// Type B: chain with the last simple root short (`a_{n-1,n} = -2`).
pub fn cartan_b(n: usize) -> Vec<Vec<i64>> {
    let mut m = cartan_a(n);
    if n >= 2 {
        m[n - 1][n - 2] = -2;
    }
    m
}

/// Type D: chain on the first `n-1` nodes with node `n` attached to
/// node `n-2`.
pub fn cartan_d(n: usize) -> Vec<Vec<i64>> {
    assert!(n >= 3);
    let mut m = cartan_a(n);
    m[n - 1][n - 2] = 0;
    m[n - 2][n - 1] = 0;
    m[n - 1][n - 3] = -1;
    m[n - 3][n - 1] = -1;
    m
}

pub fn cartan_g2() -> Vec<Vec<i64>> {
    vec![vec![2, -3], vec![-1, 2]]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{catalan, rat, ratio};
    use crate::permutohedron;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn weyl_orders_and_gram_data() {
        let a1 = build_root_system(&cartan_a(1)).unwrap();
        assert_eq!(a1.weyl_order, Int::from(2u32));

        let a2 = build_root_system(&cartan_a(2)).unwrap();
        assert_eq!(a2.weyl_order, Int::from(6u32));
        assert_eq!(
            a2.gram_fundamental,
            vec![
                vec![ratio(2, 3), ratio(1, 3)],
                vec![ratio(1, 3), ratio(2, 3)]
            ]
        );

        let b2 = build_root_system(&cartan_b(2)).unwrap();
        assert_eq!(b2.weyl_order, Int::from(8u32));
        assert_eq!(b2.d, vec![rat(2), rat(1)]);

        let g2 = build_root_system(&cartan_g2()).unwrap();
        assert_eq!(g2.weyl_order, Int::from(12u32));

        assert_eq!(
            build_root_system(&cartan_a(3)).unwrap().weyl_order,
            Int::from(24u32)
        );
        assert_eq!(
            build_root_system(&cartan_b(3)).unwrap().weyl_order,
            Int::from(48u32)
        );
        assert_eq!(
            build_root_system(&cartan_d(4)).unwrap().weyl_order,
            Int::from(192u32)
        );

        // an affine matrix is rejected via positive definiteness
        let affine = vec![vec![2, -2], vec![-2, 2]];
        assert!(build_root_system(&affine).is_err());
    }

    #[test]
    fn phi_tree_counts() {
        assert_eq!(
            phi_trees(&build_root_system(&cartan_a(1)).unwrap())
                .unwrap()
                .len(),
            1
        );
        for n in 2..=4usize {
            let rs = build_root_system(&cartan_a(n)).unwrap();
            assert_eq!(
                Int::from(phi_trees(&rs).unwrap().len() as u64),
                catalan(n),
                "chain on {n} nodes"
            );
            // edge multiplicities do not change the underlying graph
            let rsb = build_root_system(&cartan_b(n)).unwrap();
            assert_eq!(phi_trees(&rsb).unwrap().len(), phi_trees(&rs).unwrap().len());
        }
        let d4 = build_root_system(&cartan_d(4)).unwrap();
        assert_eq!(phi_trees(&d4).unwrap().len(), 16);
        // increasing trees count n!
        let rs = build_root_system(&cartan_d(4)).unwrap();
        let total: usize = phi_trees(&rs)
            .unwrap()
            .iter()
            .map(|t| increasing_labelings_forest(t, 4).len())
            .sum();
        assert_eq!(Int::from(total as u64), factorial(4));
    }

    #[test]
    fn basic_volumes() {
        let a1 = build_root_system(&cartan_a(1)).unwrap();
        let v = volume_symbolic(&a1).unwrap();
        assert_eq!(v.coefficient(&[1]), rat(1));
        assert_eq!(v.num_terms(), 1);

        let a2 = build_root_system(&cartan_a(2)).unwrap();
        assert_eq!(
            weight_polytope_volume(&a2, &[rat(1), rat(1)]).unwrap(),
            rat(3)
        );
    }

    #[test]
    fn type_a_volume_matches_permutohedron() {
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        for n in 1..=4usize {
            let rs = build_root_system(&cartan_a(n)).unwrap();
            let v = volume_symbolic(&rs).unwrap();
            let reference = crate::eulerian::volume_polynomial_u(n).unwrap();
            assert_eq!(v, reference, "rank {n} polynomials");
            for _ in 0..20 {
                // positive u: compare against the chamber formula directly
                let u: Vec<Rational> = (0..n)
                    .map(|_| ratio(rng.gen_range(0i64..=6), 1))
                    .collect();
                let x = permutohedron::coords_u_to_x(&u);
                let direct = permutohedron::volume_numeric_symmetrization(
                    &permutohedron::PermutohedronSpec::new(x).unwrap(),
                );
                assert_eq!(v.evaluate(&u), direct);
            }
        }
    }

    #[test]
    fn scale_invariance_of_volume() {
        // doubling the symmetrizers leaves the tree-sum volume unchanged
        for cartan in [cartan_a(3), cartan_b(3), cartan_d(4)] {
            let rs = build_root_system(&cartan).unwrap();
            let mut scaled = rs.clone();
            for di in &mut scaled.d {
                *di = &*di * rat(2);
            }
            for row in &mut scaled.gram_simple {
                for x in row.iter_mut() {
                    *x = &*x * rat(2);
                }
            }
            for row in &mut scaled.gram_fundamental {
                for x in row.iter_mut() {
                    *x = &*x * rat(2);
                }
            }
            assert_eq!(
                volume_symbolic(&rs).unwrap(),
                volume_symbolic(&scaled).unwrap()
            );
        }
    }

    #[test]
    fn mixed_eulerian_cross_checks() {
        let a1 = build_root_system(&cartan_a(1)).unwrap();
        assert_eq!(mixed_phi_eulerian(&a1, &[1]).unwrap(), rat(1));

        for n in 2..=4usize {
            let rs = build_root_system(&cartan_a(n)).unwrap();
            for (c, expected) in crate::eulerian::mixed_eulerian_table(n).unwrap() {
                assert_eq!(
                    mixed_phi_eulerian(&rs, &c).unwrap(),
                    Rational::from_integer(expected),
                    "type A rank {n}, c = {c:?}"
                );
            }
        }
    }

    #[test]
    fn b2_mixed_eulerian_against_dilation_oracle() {
        let b2 = build_root_system(&cartan_b(2)).unwrap();
        let a20 = mixed_phi_eulerian(&b2, &[2, 0]).unwrap();
        // Ehrhart oracle for the weight polytope of omega_1: counts at
        // t = 0, 1, 2 determine the quadratic, whose leading coefficient
        // is half the coefficient we want
        let counts: Vec<Rational> = (0..3i64)
            .map(|t| {
                let pts = weight_polytope_lattice_points(&b2, &[Int::from(t), Int::zero()])
                    .unwrap();
                Rational::from_integer(Int::from(pts.len() as u64))
            })
            .collect();
        let pts: Vec<(Rational, Rational)> = counts
            .into_iter()
            .enumerate()
            .map(|(t, c)| (rat(t as i64), c))
            .collect();
        let coeffs = crate::algebra::lagrange_interpolate(&pts);
        assert_eq!(coeffs.len(), 3);
        assert_eq!(a20, rat(2) * coeffs[2].clone());
    }

    #[test]
    fn volume_recurrences_hold() {
        for cartan in [cartan_a(2), cartan_a(3), cartan_a(4), cartan_b(2), cartan_b(3)] {
            let rs = build_root_system(&cartan).unwrap();
            assert!(volume_recurrence_check(&rs).unwrap());
        }
    }

    #[test]
    fn euler_homogeneity_and_facet_counts() {
        for cartan in [cartan_a(3), cartan_b(3), cartan_d(4)] {
            let rs = build_root_system(&cartan).unwrap();
            let uvars = indexed_vars("u", rs.n);
            let v = volume_symbolic(&rs).unwrap();
            let mut sum = RationalPolynomial::zero(&uvars);
            for i in 0..rs.n {
                let mut term = RationalPolynomial::var(&uvars, &uvars[i]);
                term = term.mul(&v.partial_derivative(&uvars[i]));
                sum = sum.add(&term);
            }
            assert_eq!(sum, v.scale(&rat(rs.n as i64)));
            for j in 0..rs.n {
                let rest: Vec<usize> = (0..rs.n).filter(|&k| k != j).collect();
                let sub = rs.sub_weyl_order(&rest).unwrap();
                assert!((rs.weyl_order.clone() % sub).is_zero());
            }
        }
    }

    #[test]
    fn lattice_points_examples() {
        let a1 = build_root_system(&cartan_a(1)).unwrap();
        let pts = weight_polytope_lattice_points(&a1, &[Int::from(2u32)]).unwrap();
        assert_eq!(
            pts,
            vec![
                vec![Int::from(-2i64)],
                vec![Int::from(0u32)],
                vec![Int::from(2u32)]
            ]
        );

        let a2 = build_root_system(&cartan_a(2)).unwrap();
        let hexagon =
            weight_polytope_lattice_points(&a2, &[Int::one(), Int::one()]).unwrap();
        assert_eq!(hexagon.len(), 7);
        assert!(hexagon.contains(&vec![Int::zero(), Int::zero()]));

        let triangle =
            weight_polytope_lattice_points(&a2, &[Int::one(), Int::zero()]).unwrap();
        assert_eq!(triangle.len(), 3);
    }

    #[test]
    fn lattice_points_match_convex_hull_rank2() {
        // cross-validate the dominance criterion against exact membership
        // in the convex hull of the orbit
        for (cartan, lambda) in [
            (cartan_a(2), vec![2i64, 1]),
            (cartan_b(2), vec![1i64, 2]),
            (cartan_g2(), vec![1i64, 1]),
        ] {
            let rs = build_root_system(&cartan).unwrap();
            let lam: Vec<Int> = lambda.iter().map(|&l| Int::from(l)).collect();
            let la = lambda_alpha_coords(&rs, &lam);
            let elements = weyl_elements(&rs.cartan).unwrap();
            let orbit: Vec<Vec<Rational>> =
                elements.iter().map(|w| apply_w(w, &la)).collect();
            let accepted = weight_polytope_lattice_points(&rs, &lam).unwrap();
            // re-enumerate the candidate box and compare verdicts
            let mut bounds = vec![0i64; rs.n];
            for p in &orbit {
                for k in 0..rs.n {
                    let drop = (&la[k] - &p[k]).floor();
                    let b = i64::try_from(drop.numer()).unwrap();
                    bounds[k] = bounds[k].max(b);
                }
            }
            let mut checked = 0usize;
            let mut k = vec![0i64; rs.n];
            'outer: loop {
                let mu: Vec<Rational> = (0..rs.n)
                    .map(|t| &la[t] - rat(k[t]))
                    .collect();
                let in_hull = hull_contains(&orbit, &mu);
                let mu_omega: Vec<Int> = (0..rs.n)
                    .map(|i| {
                        let mut s = Rational::zero();
                        for t in 0..rs.n {
                            s += rat(rs.cartan[i][t]) * &mu[t];
                        }
                        s.numer().clone()
                    })
                    .collect();
                assert_eq!(in_hull, accepted.contains(&mu_omega), "mu = {mu:?}");
                checked += 1;
                let mut pos = 0;
                loop {
                    if pos == rs.n {
                        break 'outer;
                    }
                    k[pos] += 1;
                    if k[pos] <= bounds[pos] {
                        break;
                    }
                    k[pos] = 0;
                    pos += 1;
                }
            }
            assert!(checked > 0);
        }
    }

    fn hull_contains(points: &[Vec<Rational>], target: &[Rational]) -> bool {
        use itertools::Itertools;
        let dim = target.len();
        for size in 1..=dim + 1 {
            for combo in points.iter().combinations(size) {
                if affine_combination_in(&combo, target) {
                    return true;
                }
            }
        }
        false
    }

    fn affine_combination_in(points: &[&Vec<Rational>], target: &[Rational]) -> bool {
        // solve sum c_i p_i = target, sum c_i = 1, c_i >= 0 exactly
        let dim = target.len();
        let rows = dim + 1;
        let cols = points.len();
        let mut m: Vec<Vec<Rational>> = (0..rows)
            .map(|r| {
                let mut row: Vec<Rational> = (0..cols)
                    .map(|c| {
                        if r < dim {
                            points[c][r].clone()
                        } else {
                            Rational::one()
                        }
                    })
                    .collect();
                row.push(if r < dim {
                    target[r].clone()
                } else {
                    Rational::one()
                });
                row
            })
            .collect();
        // Gaussian elimination with pivot tracking
        let mut pivot_cols = Vec::new();
        let mut rank = 0usize;
        for col in 0..cols {
            let Some(pr) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, pr);
            let piv = m[rank][col].clone();
            for c in 0..=cols {
                m[rank][c] = &m[rank][c] / &piv;
            }
            for r in 0..rows {
                if r != rank && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in 0..=cols {
                        let s = &f * &m[rank][c];
                        m[r][c] = &m[r][c] - &s;
                    }
                }
            }
            pivot_cols.push(col);
            rank += 1;
            if rank == rows {
                break;
            }
        }
        // consistency
        for r in rank..rows {
            if !m[r][cols].is_zero() {
                return false;
            }
        }
        // basic solution: free variables zero
        let mut sol = vec![Rational::zero(); cols];
        for (r, &col) in pivot_cols.iter().enumerate() {
            sol[col] = m[r][cols].clone();
        }
        sol.iter().all(|c| !c.is_negative())
    }

    #[test]
    fn vertex_sum_checks() {
        let a1 = build_root_system(&cartan_a(1)).unwrap();
        assert!(brion_weight_checks(&a1, &[Int::from(2u32)], 61).unwrap());

        let a2 = build_root_system(&cartan_a(2)).unwrap();
        assert!(brion_weight_checks(&a2, &[Int::one(), Int::one()], 62).unwrap());
        // a non-regular weight: vertices of the orbit merge
        assert!(brion_weight_checks(&a2, &[Int::from(2u32), Int::zero()], 63).unwrap());

        let b2 = build_root_system(&cartan_b(2)).unwrap();
        assert!(brion_weight_checks(&b2, &[Int::one(), Int::one()], 64).unwrap());
    }

    #[test]
    fn json_parsing() {
        let v: serde_json::Value =
            serde_json::from_str(r#"{"cartan":[[2,-1],[-1,2]]}"#).unwrap();
        let rs = root_system_from_json(&v).unwrap();
        assert_eq!(rs.weyl_order, Int::from(6u32));
    }
}
