//! The classical permutohedron `P_n(x_1, ..., x_n)`: the convex hull of all
//! coordinate permutations of `x`.  Provides the coordinate changes used by
//! the other modules, majorization-based membership, two independent exact
//! volume formulas (divided symmetrization and the signed descent-number
//! sum), and brute-force lattice-point / Ehrhart oracles.

use num::{One, Zero};
use serde::Deserialize;

use crate::algebra::{
    binomial, compositions_of, descent_count, factorial, indexed_vars, lagrange_interpolate,
    permutations, rat, Composition, Int, Rational, RationalPolynomial,
};
use crate::{Error, Result};

/// The defining data of `P_n(x_1, ..., x_n)`.  No ordering of `x` is
/// required; the polytope is symmetric in the entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutohedronSpec {
    pub x: Vec<Rational>,
}

#[derive(Deserialize)]
struct SpecJson {
    x: Vec<String>,
}

impl PermutohedronSpec {
    pub fn new(x: Vec<Rational>) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::Domain("need at least one coordinate".into()));
        }
        Ok(PermutohedronSpec { x })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let sj: SpecJson = serde_json::from_value(value.clone())
            .map_err(|e| Error::Domain(format!("bad permutohedron JSON: {e}")))?;
        let x = sj
            .x
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(x)
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    /// Total coordinate sum `c = x_1 + ... + x_n`.
    pub fn coordinate_sum(&self) -> Rational {
        self.x.iter().sum()
    }

    /// All distinct coordinate permutations of `x` (the vertex set when the
    /// entries are distinct).
    pub fn vertices(&self) -> Vec<Vec<Rational>> {
        use std::collections::BTreeSet;
        let mut out: BTreeSet<Vec<Rational>> = BTreeSet::new();
        for w in permutations(self.n()) {
            out.insert((1..=self.n()).map(|i| self.x[w.apply(i) - 1].clone()).collect());
        }
        out.into_iter().collect()
    }
}

/// Parse a rational from `"p"` or `"p/q"` decimal strings.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let parse_int = |t: &str| -> Result<Int> {
        t.trim()
            .parse()
            .map_err(|_| Error::Domain(format!("bad integer {t:?}")))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::Domain("zero denominator".into()));
            }
            Ok(Rational::new(parse_int(p)?, den))
        }
    }
}

// ---------------------------------------------------------------------------
// Coordinate systems
// ---------------------------------------------------------------------------

/// Alternating-binomial change of coordinates:
/// `y_k = sum_{i=0}^{k-1} (-1)^{i+1} C(k-1, i) x_{k-i}`
/// so `y_1 = -x_1`, `y_2 = -x_2 + x_1`, `y_3 = -x_3 + 2x_2 - x_1`, ...
pub fn coords_x_to_y(x: &[Rational]) -> Vec<Rational> {
    (1..=x.len())
        .map(|k| {
            let mut y = Rational::zero();
            for i in 0..k {
                let sign = if i % 2 == 0 { -1 } else { 1 };
                y += Rational::from_integer(binomial(k - 1, i) * Int::from(sign)) * &x[k - i - 1];
            }
            y
        })
        .collect()
}

/// Inverse of [`coords_x_to_y`], solving the triangular system.
pub fn coords_y_to_x(y: &[Rational]) -> Vec<Rational> {
    let mut x: Vec<Rational> = Vec::with_capacity(y.len());
    for k in 1..=y.len() {
        // y_k = -x_k + sum_{i=1}^{k-1} (-1)^{i+1} C(k-1,i) x_{k-i}
        let mut rest = Rational::zero();
        for i in 1..k {
            let sign = if i % 2 == 0 { -1 } else { 1 };
            rest += Rational::from_integer(binomial(k - 1, i) * Int::from(sign)) * &x[k - i - 1];
        }
        x.push(rest - &y[k - 1]);
    }
    x
}

/// Consecutive differences `u_i = x_i - x_{i+1}`; one entry shorter than `x`.
pub fn coords_x_to_u(x: &[Rational]) -> Vec<Rational> {
    x.windows(2).map(|w| &w[0] - &w[1]).collect()
}

/// Recover `x` from `u` with the normalization `x_{last} = 0`:
/// `x_i = u_i + u_{i+1} + ... `; one entry longer than `u`.
pub fn coords_u_to_x(u: &[Rational]) -> Vec<Rational> {
    let mut x = vec![Rational::zero(); u.len() + 1];
    for i in (0..u.len()).rev() {
        x[i] = &u[i] + &x[i + 1];
    }
    x
}

/// Interval weights `y_2, ..., y_{n+1}` from the difference coordinates:
/// `y_{k+1} = sum_{i=0}^{k-1} (-1)^i C(k-1, i) u_{k-i}`
/// so `y_2 = u_1`, `y_3 = u_2 - u_1`, `y_4 = u_3 - 2u_2 + u_1`, ...
pub fn coords_u_to_y(u: &[Rational]) -> Vec<Rational> {
    (1..=u.len())
        .map(|k| {
            let mut y = Rational::zero();
            for i in 0..k {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                y += Rational::from_integer(binomial(k - 1, i) * Int::from(sign)) * &u[k - i - 1];
            }
            y
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Membership
// ---------------------------------------------------------------------------

/// Majorization membership test: `t` lies in `P_n(x)` iff the totals agree
/// and, for every `k < n`, the sum of the `k` largest entries of `t` is at
/// most the sum of the `k` largest entries of `x` (which dominates the sum
/// over every `k`-element subset).
pub fn contains_point(p: &PermutohedronSpec, t: &[Rational]) -> Result<bool> {
    if t.len() != p.n() {
        return Err(Error::Domain(format!(
            "point has {} coordinates, polytope has {}",
            t.len(),
            p.n()
        )));
    }
    let total_t: Rational = t.iter().sum();
    if total_t != p.coordinate_sum() {
        return Ok(false);
    }
    let mut xs = p.x.clone();
    let mut ts = t.to_vec();
    xs.sort();
    ts.sort();
    let mut sx = Rational::zero();
    let mut st = Rational::zero();
    for k in 1..p.n() {
        sx += &xs[p.n() - k];
        st += &ts[p.n() - k];
        if st > sx {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Descent index sets and the signed-descent volume formula
// ---------------------------------------------------------------------------

/// A composition `c` of `n-1` into `n` parts together with the subset
/// `I ⊆ [n-1]` read off its lattice path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentIndexSet {
    pub c: Composition,
    pub epsilon: Vec<i8>,
    pub indices: Vec<usize>,
}

/// Replace each part `c_i` by `1, ..., 1, -1` (`c_i` ones), drop the final
/// `-1`, and return `I = { i : eps_1 + ... + eps_{2i-1} < 0 }`.
pub fn descent_index_set(c: &Composition) -> Result<DescentIndexSet> {
    let n = c.len();
    if n == 0 || c.total() != n - 1 {
        return Err(Error::Domain(format!(
            "composition {:?} must have n parts with total n-1",
            c.parts
        )));
    }
    let mut epsilon: Vec<i8> = Vec::with_capacity(2 * n - 1);
    for &ci in &c.parts {
        epsilon.extend(std::iter::repeat(1).take(ci));
        epsilon.push(-1);
    }
    epsilon.pop();
    debug_assert_eq!(epsilon.len(), 2 * n - 2);
    let mut indices = Vec::new();
    for i in 1..n {
        let partial: i32 = epsilon[..2 * i - 1].iter().map(|&e| e as i32).sum();
        if partial < 0 {
            indices.push(i);
        }
    }
    Ok(DescentIndexSet {
        c: c.clone(),
        epsilon,
        indices,
    })
}

/// The volume polynomial `V_n(x_1, ..., x_n)`: the sum over compositions
/// `c` of `n-1` into `n` parts of
/// `(-1)^{|I_c|} * D_n(I_c) * prod_i x_i^{c_i}/c_i!`,
/// where `D_n(I)` counts permutations with descent set exactly `I`.
pub fn volume_symbolic(n: usize) -> Result<RationalPolynomial> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    let vars = indexed_vars("x", n);
    let mut v = RationalPolynomial::zero(&vars);
    for c in compositions_of(n - 1, n) {
        let dis = descent_index_set(&c)?;
        let d = descent_count(n, &dis.indices)?;
        let sign = if dis.indices.len() % 2 == 0 { 1 } else { -1 };
        let mut denom = Int::one();
        for &ci in &c.parts {
            denom *= factorial(ci);
        }
        let coeff = Rational::new(d * Int::from(sign), denom);
        let exp: Vec<u32> = c.parts.iter().map(|&ci| ci as u32).collect();
        v.add_term(exp, coeff);
    }
    Ok(v)
}

// ---------------------------------------------------------------------------
// Divided symmetrization
// ---------------------------------------------------------------------------

/// Divided symmetrization of the monomial `lambda^c` over all permutations
/// of the supplied distinct `lambda` values:
/// `sum_w prod_i lambda_{w(i)}^{c_i} / prod_{i<n} (lambda_{w(i)} - lambda_{w(i+1)})`.
pub fn divided_symmetrization_monomial(c: &[usize], lambda: &[Rational]) -> Result<Rational> {
    let n = lambda.len();
    if c.len() != n {
        return Err(Error::Domain("exponent/value arity mismatch".into()));
    }
    for i in 0..n {
        for j in i + 1..n {
            if lambda[i] == lambda[j] {
                return Err(Error::Domain("lambda values must be distinct".into()));
            }
        }
    }
    let mut total = Rational::zero();
    for w in permutations(n) {
        let mut num = Rational::one();
        for (i, &ci) in c.iter().enumerate() {
            let l = &lambda[w.apply(i + 1) - 1];
            for _ in 0..ci {
                num *= l;
            }
        }
        let mut den = Rational::one();
        for i in 1..n {
            den *= &lambda[w.apply(i) - 1] - &lambda[w.apply(i + 1) - 1];
        }
        total += num / den;
    }
    Ok(total)
}

/// Exact volume by divided symmetrization with `lambda_i := i`:
/// `Vol = (1/(n-1)!) sum_w (lambda_{w(1)} x_1 + ... + lambda_{w(n)} x_n)^{n-1}
///        / prod_i (lambda_{w(i)} - lambda_{w(i+1)})`.
pub fn volume_numeric_symmetrization(p: &PermutohedronSpec) -> Rational {
    let n = p.n();
    let mut total = Rational::zero();
    for w in permutations(n) {
        let mut lin = Rational::zero();
        for i in 1..=n {
            lin += rat(w.apply(i) as i64) * &p.x[i - 1];
        }
        let mut num = Rational::one();
        for _ in 0..n - 1 {
            num *= &lin;
        }
        let mut den = Rational::one();
        for i in 1..n {
            den *= rat(w.apply(i) as i64 - w.apply(i + 1) as i64);
        }
        total += num / den;
    }
    total / Rational::from_integer(factorial(n - 1))
}

// ---------------------------------------------------------------------------
// Lattice-point oracles
// ---------------------------------------------------------------------------

fn integer_coords(p: &PermutohedronSpec) -> Result<Vec<i64>> {
    p.x.iter()
        .map(|r| {
            if !r.denom().is_one() {
                return Err(Error::Domain("coordinates must be integers".into()));
            }
            i64::try_from(r.numer().clone())
                .map_err(|_| Error::Resource("coordinate exceeds i64 range".into()))
        })
        .collect()
}

/// All integer points of `P_n(x)` for integer `x`, by scanning the bounding
/// box restricted to the coordinate-sum hyperplane and filtering with the
/// majorization test.
pub fn lattice_points_brute(p: &PermutohedronSpec) -> Result<Vec<Vec<Int>>> {
    let x = integer_coords(p)?;
    let n = x.len();
    let lo = *x.iter().min().unwrap();
    let hi = *x.iter().max().unwrap();
    let total: i64 = x.iter().sum();
    let mut sorted_desc = x.clone();
    sorted_desc.sort_unstable_by(|a, b| b.cmp(a));
    let prefix: Vec<i64> = sorted_desc
        .iter()
        .scan(0i64, |s, &v| {
            *s += v;
            Some(*s)
        })
        .collect();

    let mut out = Vec::new();
    let mut t = vec![0i64; n];
    scan(&mut t, 0, total, lo, hi, &prefix, &mut out);
    Ok(out
        .into_iter()
        .map(|v| v.into_iter().map(Int::from).collect())
        .collect())
}

fn scan(
    t: &mut Vec<i64>,
    pos: usize,
    remaining: i64,
    lo: i64,
    hi: i64,
    prefix: &[i64],
    out: &mut Vec<Vec<i64>>,
) {
    let n = t.len();
    if pos == n {
        if remaining == 0 && majorized(t, prefix) {
            out.push(t.clone());
        }
        return;
    }
    let slots = (n - pos - 1) as i64;
    for v in lo..=hi {
        let rest = remaining - v;
        if rest < slots * lo || rest > slots * hi {
            continue;
        }
        t[pos] = v;
        scan(t, pos + 1, rest, lo, hi, prefix, out);
    }
}

fn majorized(t: &[i64], prefix: &[i64]) -> bool {
    let mut s = t.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    let mut acc = 0i64;
    for (k, v) in s.iter().enumerate() {
        acc += v;
        if acc > prefix[k] {
            return false;
        }
    }
    true
}

pub fn lattice_count(p: &PermutohedronSpec) -> Result<Int> {
    Ok(Int::from(lattice_points_brute(p)?.len()))
}

/// Independent volume oracle: count lattice points of the dilates `tP` for
/// `t = 0..n-1`, interpolate the degree-`n-1` counting polynomial exactly,
/// and return its leading coefficient (the normalized volume).
pub fn volume_oracle_ehrhart(p: &PermutohedronSpec) -> Result<Rational> {
    let n = p.n();
    let mut pts: Vec<(Rational, Rational)> = vec![(rat(0), rat(1))];
    for t in 1..n {
        let dilated = PermutohedronSpec::new(
            p.x.iter().map(|xi| xi * rat(t as i64)).collect(),
        )?;
        let count = lattice_count(&dilated)?;
        pts.push((rat(t as i64), Rational::from_integer(count)));
    }
    let coeffs = lagrange_interpolate(&pts);
    coeffs
        .last()
        .cloned()
        .ok_or_else(|| Error::Internal("empty interpolation".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;
    use num::Signed;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(xs: &[i64]) -> PermutohedronSpec {
        PermutohedronSpec::new(xs.iter().map(|&v| rat(v)).collect()).unwrap()
    }

    #[test]
    fn coordinate_change_x_to_y() {
        let y = coords_x_to_y(&[rat(2), rat(1), rat(0)]);
        assert_eq!(y, vec![rat(-2), rat(1), rat(0)]);
        let y = coords_x_to_y(&[rat(5), rat(5), rat(5), rat(5)]);
        assert_eq!(y, vec![rat(-5), rat(0), rat(0), rat(0)]);
    }

    #[test]
    fn coordinate_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let n = rng.gen_range(1..=6);
            let x: Vec<Rational> = (0..n)
                .map(|_| ratio(rng.gen_range(-20..=20), rng.gen_range(1..=7)))
                .collect();
            assert_eq!(coords_y_to_x(&coords_x_to_y(&x)), x);
            // u -> x with last coordinate pinned to zero
            if *x.last().unwrap() == rat(0) {
                assert_eq!(coords_u_to_x(&coords_x_to_u(&x)), x);
            }
        }
    }

    #[test]
    fn coordinate_change_u_to_y() {
        assert_eq!(coords_u_to_y(&[rat(1), rat(1)]), vec![rat(1), rat(0)]);
        assert_eq!(
            coords_u_to_y(&[rat(1), rat(0), rat(0)]),
            vec![rat(1), rat(-1), rat(1)]
        );
    }

    #[test]
    fn u_to_y_consistent_with_x_to_y() {
        // For x with x_{n+1} arbitrary, y-of-x entries 2.. match y-of-u of
        // the difference vector.
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..100 {
            let n = rng.gen_range(2..=6);
            let x: Vec<Rational> = (0..n)
                .map(|_| ratio(rng.gen_range(-20..=20), rng.gen_range(1..=5)))
                .collect();
            let u = coords_x_to_u(&x);
            let yu = coords_u_to_y(&u);
            let yx = coords_x_to_y(&x);
            assert_eq!(&yx[1..], yu.as_slice());
        }
    }

    #[test]
    fn membership_examples() {
        let hex = p(&[2, 1, 0]);
        assert!(contains_point(&hex, &[rat(0), rat(1), rat(2)]).unwrap());
        assert!(contains_point(&hex, &[rat(1), rat(1), rat(1)]).unwrap());
        assert!(!contains_point(&hex, &[rat(1), rat(1), rat(0)]).unwrap());
        assert!(!contains_point(&hex, &[rat(3), rat(0), rat(0)]).unwrap());
        assert!(contains_point(&hex, &[ratio(3, 2), ratio(3, 2), rat(0)]).unwrap());
        assert!(contains_point(&hex, &[rat(2), ratio(1, 2), ratio(1, 2)]).unwrap());
        assert!(contains_point(&hex, &[ratio(5, 2), ratio(1, 2), rat(0)])
            .unwrap()
            .eq(&false));
        assert!(contains_point(&hex, &[rat(1), rat(1)]).is_err());
    }

    #[test]
    fn descent_index_set_examples() {
        let dis =
            descent_index_set(&Composition::new(vec![2, 0, 1, 1, 0, 1])).unwrap();
        assert_eq!(dis.epsilon, vec![1, 1, -1, -1, 1, -1, 1, -1, -1, 1]);
        let dis = descent_index_set(&Composition::new(vec![1, 0, 1])).unwrap();
        assert_eq!(dis.indices, vec![2]);
        let dis = descent_index_set(&Composition::new(vec![3, 0, 0, 0])).unwrap();
        assert_eq!(dis.indices, Vec::<usize>::new());
        assert!(descent_index_set(&Composition::new(vec![1, 1])).is_err());
    }

    #[test]
    fn volume_polynomials_small() {
        let vars2 = indexed_vars("x", 2);
        let v2 = volume_symbolic(2).unwrap();
        let x1 = RationalPolynomial::var(&vars2, "x1");
        let x2 = RationalPolynomial::var(&vars2, "x2");
        assert_eq!(v2, x1.sub(&x2));

        let vars3 = indexed_vars("x", 3);
        let v3 = volume_symbolic(3).unwrap();
        let x1 = RationalPolynomial::var(&vars3, "x1");
        let x2 = RationalPolynomial::var(&vars3, "x2");
        let x3 = RationalPolynomial::var(&vars3, "x3");
        let expected = x1
            .pow(2)
            .scale(&ratio(1, 2))
            .add(&x1.mul(&x2))
            .sub(&x1.mul(&x3).scale(&rat(2)))
            .sub(&x2.pow(2))
            .add(&x2.mul(&x3))
            .add(&x3.pow(2).scale(&ratio(1, 2)));
        assert_eq!(v3, expected);
        assert_eq!(v3.evaluate(&[rat(2), rat(1), rat(0)]), rat(3));
    }

    #[test]
    fn symmetrization_examples() {
        assert_eq!(volume_numeric_symmetrization(&p(&[2, 1, 0])), rat(3));
        assert_eq!(volume_numeric_symmetrization(&p(&[1, 1, 0])), ratio(1, 2));
        assert_eq!(volume_numeric_symmetrization(&p(&[4, 4, 4])), rat(0));
    }

    #[test]
    fn symmetrization_matches_symbolic_on_random_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..50 {
            let n = rng.gen_range(1..=5);
            let x: Vec<Rational> = (0..n)
                .map(|_| ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
                .collect();
            let spec = PermutohedronSpec::new(x.clone()).unwrap();
            let direct = volume_numeric_symmetrization(&spec);
            let poly = volume_symbolic(n).unwrap().evaluate(&x);
            assert_eq!(direct, poly, "x = {x:?}");
        }
    }

    #[test]
    fn divided_symmetrization_is_lambda_independent() {
        for n in 2..=5usize {
            let l1: Vec<Rational> = (1..=n).map(|i| rat(i as i64)).collect();
            let l2: Vec<Rational> = (1..=n).map(|i| rat(2 * i as i64)).collect();
            for c in compositions_of(n - 1, n) {
                let a = divided_symmetrization_monomial(&c.parts, &l1).unwrap();
                let b = divided_symmetrization_monomial(&c.parts, &l2).unwrap();
                assert_eq!(a, b, "c = {:?}", c.parts);
                let dis = descent_index_set(&c).unwrap();
                let d = descent_count(n, &dis.indices).unwrap();
                let sign = if dis.indices.len() % 2 == 0 { 1 } else { -1 };
                assert_eq!(a, Rational::from_integer(d * Int::from(sign)));
            }
        }
    }

    #[test]
    fn divided_symmetrization_kills_low_degree() {
        for n in 2..=5usize {
            for total in 0..n - 1 {
                for c in compositions_of(total, n) {
                    let l: Vec<Rational> = (1..=n).map(|i| rat(i as i64)).collect();
                    let v = divided_symmetrization_monomial(&c.parts, &l).unwrap();
                    assert_eq!(v, rat(0), "c = {:?}", c.parts);
                }
            }
        }
    }

    /// Spanning-forest count on n labeled vertices by enumerating acyclic
    /// subgraphs of the complete graph (union-find cycle check).
    fn forest_count(n: usize) -> u64 {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let m = edges.len();
        let mut count = 0u64;
        'outer: for mask in 0u32..(1 << m) {
            let mut parent: Vec<usize> = (0..n).collect();
            fn find(p: &mut Vec<usize>, i: usize) -> usize {
                if p[i] != i {
                    let r = find(p, p[i]);
                    p[i] = r;
                }
                p[i]
            }
            for (e, &(a, b)) in edges.iter().enumerate() {
                if mask >> e & 1 == 1 {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    if ra == rb {
                        continue 'outer;
                    }
                    parent[ra] = rb;
                }
            }
            count += 1;
        }
        count
    }

    #[test]
    fn regular_permutohedron_volume_and_lattice_points() {
        for n in 2..=5usize {
            let x: Vec<i64> = (0..n as i64).rev().collect();
            let spec = p(&x);
            let vol = volume_numeric_symmetrization(&spec);
            let expected = (n as i64).pow(n as u32 - 2);
            assert_eq!(vol, rat(expected), "n = {n}");
            let count = lattice_count(&spec).unwrap();
            assert_eq!(count, Int::from(forest_count(n)), "n = {n}");
        }
    }

    #[test]
    fn lattice_point_examples() {
        assert_eq!(lattice_count(&p(&[2, 1, 0])).unwrap(), Int::from(7));
        assert_eq!(lattice_count(&p(&[3, 2, 1, 0])).unwrap(), Int::from(38));
        let pts = lattice_points_brute(&p(&[1, 0])).unwrap();
        assert_eq!(
            pts,
            vec![
                vec![Int::from(0), Int::from(1)],
                vec![Int::from(1), Int::from(0)]
            ]
        );
    }

    #[test]
    fn ehrhart_oracle() {
        assert_eq!(volume_oracle_ehrhart(&p(&[2, 1, 0])).unwrap(), rat(3));
        assert_eq!(volume_oracle_ehrhart(&p(&[1, 0])).unwrap(), rat(1));
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..50 {
            let n = rng.gen_range(2..=5);
            // The volume formulas are polynomials on the chamber of weakly
            // decreasing x; the true (Ehrhart) volume matches them there.
            let mut x: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=4)).collect();
            x.sort_unstable_by(|a, b| b.cmp(a));
            let spec = p(&x);
            assert_eq!(
                volume_oracle_ehrhart(&spec).unwrap(),
                volume_numeric_symmetrization(&spec),
                "x = {x:?}"
            );
        }
    }

    /// Exact convex-hull membership by Caratheodory: search for an affinely
    /// independent subset of at most dim+1 points whose nonnegative
    /// barycentric combination equals `m`.
    fn convex_hull_contains(points: &[&Vec<Rational>], m: &[Rational]) -> bool {
        let n = m.len();
        // Solve the (n+1) x k system [P; 1] lambda = [m; 1] by Gaussian
        // elimination; accept when consistent, fully determined, and the
        // solution is nonnegative.
        let solves = |idx: &[usize]| -> bool {
            let k = idx.len();
            let mut a: Vec<Vec<Rational>> = (0..n + 1)
                .map(|r| {
                    let mut row: Vec<Rational> = idx
                        .iter()
                        .map(|&j| {
                            if r < n {
                                points[j][r].clone()
                            } else {
                                Rational::one()
                            }
                        })
                        .collect();
                    row.push(if r < n { m[r].clone() } else { Rational::one() });
                    row
                })
                .collect();
            let mut pivot_rows = Vec::new();
            let mut row = 0;
            for col in 0..k {
                let Some(pr) = (row..n + 1).find(|&r| !a[r][col].is_zero()) else {
                    return false; // rank-deficient subset: a smaller one wins
                };
                a.swap(row, pr);
                let pv = a[row][col].clone();
                for c in col..=k {
                    a[row][c] = &a[row][c] / &pv;
                }
                for r in 0..n + 1 {
                    if r != row && !a[r][col].is_zero() {
                        let f = a[r][col].clone();
                        for c in col..=k {
                            a[r][c] = &a[r][c] - &f * &a[row][c];
                        }
                    }
                }
                pivot_rows.push(row);
                row += 1;
            }
            // consistency of the remaining rows
            if (row..n + 1).any(|r| !a[r][k].is_zero()) {
                return false;
            }
            (0..k).all(|i| !a[i][k].is_negative())
        };
        let max_size = (n + 1).min(points.len());
        fn subsets(start: usize, left: usize, total: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
            if left == 0 {
                return f(cur);
            }
            for i in start..total {
                cur.push(i);
                if subsets(i + 1, left - 1, total, cur, f) {
                    return true;
                }
                cur.pop();
            }
            false
        }
        for k in 1..=max_size {
            let mut cur = Vec::new();
            if subsets(0, k, points.len(), &mut cur, &mut |idx| solves(idx)) {
                return true;
            }
        }
        false
    }

    #[test]
    fn vertices_are_in_convex_position_with_edge_structure() {
        // With distinct x, all n! coordinate permutations are vertices
        // (each uniquely maximizes a strict linear functional), and two
        // vertices share an edge iff they differ by swapping two entries
        // that are adjacent in sorted order.  Non-edges are certified by
        // finding a second vertex pair with the same midpoint.
        for n in 2..=4usize {
            let x: Vec<Rational> = (0..n).map(|i| rat((1i64 << i) - 1)).collect();
            let spec = PermutohedronSpec::new(x.clone()).unwrap();
            let verts = spec.vertices();
            assert_eq!(verts.len(), (1..=n).product::<usize>());
            // unique maximization of the functional t . v for t matching v's
            // own ordering
            for v in &verts {
                let mut best = 0usize;
                let score = |w: &Vec<Rational>| -> Rational {
                    w.iter().zip(v).map(|(a, b)| a * b).sum()
                };
                let sv = score(v);
                for w in &verts {
                    if w != v && score(w) >= sv {
                        best += 1;
                    }
                }
                assert_eq!(best, 0, "vertex {v:?} not uniquely maximal");
            }
            let mut sorted = x.clone();
            sorted.sort();
            for (a, va) in verts.iter().enumerate() {
                for vb in verts.iter().skip(a + 1) {
                    let diff: Vec<usize> =
                        (0..n).filter(|&i| va[i] != vb[i]).collect();
                    let is_adjacent_swap = diff.len() == 2 && {
                        let (i, j) = (diff[0], diff[1]);
                        va[i] == vb[j] && va[j] == vb[i] && {
                            let pa = sorted.iter().position(|v| *v == va[i]).unwrap();
                            let pb = sorted.iter().position(|v| *v == va[j]).unwrap();
                            pa.abs_diff(pb) == 1
                        }
                    };
                    if is_adjacent_swap {
                        continue; // genuine edge
                    }
                    // Certify the non-edge: the segment midpoint must lie in
                    // the convex hull of the remaining vertices (if [va,vb]
                    // were a face, no such representation could exist).
                    let mid: Vec<Rational> = (0..n)
                        .map(|i| (&va[i] + &vb[i]) * ratio(1, 2))
                        .collect();
                    let others: Vec<&Vec<Rational>> =
                        verts.iter().filter(|v| *v != va && *v != vb).collect();
                    assert!(
                        convex_hull_contains(&others, &mid),
                        "no non-edge certificate for {va:?}, {vb:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn json_parsing() {
        let v: serde_json::Value = serde_json::from_str(r#"{"x":["2","1","0"]}"#).unwrap();
        let spec = PermutohedronSpec::from_json(&v).unwrap();
        assert_eq!(spec.x, vec![rat(2), rat(1), rat(0)]);
        let v: serde_json::Value = serde_json::from_str(r#"{"x":["1/2","-3"]}"#).unwrap();
        let spec = PermutohedronSpec::from_json(&v).unwrap();
        assert_eq!(spec.x, vec![ratio(1, 2), rat(-3)]);
        let v: serde_json::Value = serde_json::from_str(r#"{"x":[]}"#).unwrap();
        assert!(PermutohedronSpec::from_json(&v).is_err());
    }
}
