//! Weighted Minkowski sums of coordinate simplices `P = sum_i y_i Delta_{I_i}`:
//! the matching-theoretic non-degeneracy test (three equivalent routes), the
//! draconian-sequence volume and lattice-point formulas, trimming, the
//! z-coordinate facet description with Moebius inversion, the two
//! permutation-sum volume formulas, and left/right duality.

use std::collections::HashMap;

use num::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{
    compositions_of, descent_count, factorial, indexed_vars, permutations, rat, rising_power, Int,
    Rational, RationalPolynomial,
};
use crate::permutohedron::parse_rational;
use crate::{Error, Result};

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

fn elems_to_mask(n: usize, elems: &[usize]) -> Result<u64> {
    let mut m = 0u64;
    for &e in elems {
        if e == 0 || e > n {
            return Err(Error::Domain(format!("element {e} outside [1, {n}]")));
        }
        m |= 1 << (e - 1);
    }
    if m == 0 {
        return Err(Error::Domain("subsets must be nonempty".into()));
    }
    Ok(m)
}

/// An ordered family of nonempty subsets `I_1, ..., I_m` of `[n]` with
/// nonnegative rational weights; encodes the bipartite graph with edges
/// `(i, j)` for `j` in `I_i` and the polytope `sum_i y_i Delta_{I_i}`.
#[derive(Clone, Debug)]
pub struct SubsetFamily {
    pub n: usize,
    pub subsets: Vec<u64>,
    pub weights: Vec<Rational>,
}

impl SubsetFamily {
    pub fn new(n: usize, subsets: Vec<u64>, weights: Vec<Rational>) -> Result<Self> {
        if n == 0 || n > 63 {
            return Err(Error::Domain("ground size must be in [1, 63]".into()));
        }
        if subsets.len() != weights.len() {
            return Err(Error::Domain("one weight per subset required".into()));
        }
        let full = (1u64 << n) - 1;
        for &s in &subsets {
            if s == 0 || s & !full != 0 {
                return Err(Error::Domain("subsets must be nonempty within [n]".into()));
            }
        }
        Ok(SubsetFamily { n, subsets, weights })
    }

    pub fn from_elems(n: usize, subsets: &[Vec<usize>], weights: Vec<Rational>) -> Result<Self> {
        let masks = subsets
            .iter()
            .map(|s| elems_to_mask(n, s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, masks, weights)
    }

    pub fn unit_weights(n: usize, subsets: &[Vec<usize>]) -> Result<Self> {
        let w = vec![Rational::one(); subsets.len()];
        Self::from_elems(n, subsets, w)
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        #[derive(serde::Deserialize)]
        struct J {
            n: usize,
            subsets: Vec<Vec<usize>>,
            weights: Option<Vec<String>>,
        }
        let j: J = serde_json::from_value(value.clone())
            .map_err(|e| Error::Domain(format!("bad subset-family JSON: {e}")))?;
        let weights = match j.weights {
            Some(ws) => ws.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?,
            None => vec![Rational::one(); j.subsets.len()],
        };
        Self::from_elems(j.n, &j.subsets, weights)
    }

    pub fn m(&self) -> usize {
        self.subsets.len()
    }

    /// The mirrored family on the other side of the bipartition:
    /// `J_j = { i : j in I_i }` as subsets of `[m]`.
    pub fn dual(&self) -> Result<SubsetFamily> {
        let m = self.m();
        let mut duals = Vec::with_capacity(self.n);
        for j in 0..self.n {
            let mut mask = 0u64;
            for (i, &s) in self.subsets.iter().enumerate() {
                if s >> j & 1 == 1 {
                    mask |= 1 << i;
                }
            }
            if mask == 0 {
                return Err(Error::Domain(format!(
                    "element {} appears in no subset; dual undefined",
                    j + 1
                )));
            }
            duals.push(mask);
        }
        SubsetFamily::new(m, duals, vec![Rational::one(); self.n])
    }
}

// ---------------------------------------------------------------------------
// Non-degeneracy (dragon marriage) check
// ---------------------------------------------------------------------------

/// Maximum bipartite matching size (Kuhn's augmenting paths): left nodes
/// have adjacency masks over right nodes `0..n_right`.
fn max_matching(adj: &[u64], n_right: usize) -> usize {
    let mut match_right: Vec<Option<usize>> = vec![None; n_right];
    let mut size = 0;
    for left in 0..adj.len() {
        let mut visited = vec![false; n_right];
        if augment(left, adj, &mut match_right, &mut visited) {
            size += 1;
        }
    }
    size
}

fn augment(left: usize, adj: &[u64], match_right: &mut Vec<Option<usize>>, visited: &mut Vec<bool>) -> bool {
    for r in bits(adj[left]) {
        if visited[r] {
            continue;
        }
        visited[r] = true;
        if match_right[r].is_none()
            || augment(match_right[r].unwrap(), adj, match_right, visited)
        {
            match_right[r] = Some(left);
            return true;
        }
    }
    false
}

/// Non-degeneracy test for `n-1` nonempty subsets of `[n]` via systems of
/// distinct representatives: for every `j` the family must have an SDR
/// avoiding `j` (n maximum-matching computations).
pub fn dragon_marriage_check(n: usize, js: &[u64]) -> Result<bool> {
    if js.len() + 1 != n {
        return Err(Error::Domain(format!(
            "need exactly {} subsets for ground size {n}",
            n - 1
        )));
    }
    if js.iter().any(|&j| j == 0 || j >> n != 0) {
        return Err(Error::Domain("subsets must be nonempty within [n]".into()));
    }
    for avoid in 0..n {
        let adj: Vec<u64> = js.iter().map(|&j| j & !(1u64 << avoid)).collect();
        if max_matching(&adj, n) < n - 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Verification-mode test evaluating all three equivalent conditions —
/// union-cardinality bounds, SDRs avoiding each element, and 2-element
/// representatives forming a spanning tree — and asserting they agree.
pub fn dragon_marriage_check_full(n: usize, js: &[u64]) -> Result<bool> {
    let by_matching = dragon_marriage_check(n, js)?;

    // (1) for every nonempty index set S: |union of J_i, i in S| >= |S| + 1
    let m = js.len();
    let mut by_union = true;
    'outer: for s in 1u64..(1 << m) {
        let mut u = 0u64;
        for i in bits(s) {
            u |= js[i];
        }
        if (u.count_ones() as u64) < s.count_ones() as u64 + 1 {
            by_union = false;
            break 'outer;
        }
    }

    // (3) choose a 2-element subset of each J_i so the pairs form a
    // spanning tree of [n] (backtracking with union-find)
    let by_tree = spanning_tree_choice(n, js, 0, &mut (0..n).collect());

    if by_matching != by_union || by_matching != by_tree {
        return Err(Error::Internal(format!(
            "non-degeneracy routes disagree: matching={by_matching}, union={by_union}, tree={by_tree}"
        )));
    }
    Ok(by_matching)
}

fn spanning_tree_choice(n: usize, js: &[u64], idx: usize, dsu: &mut Vec<usize>) -> bool {
    fn find(p: &mut Vec<usize>, i: usize) -> usize {
        if p[i] != i {
            let r = find(p, p[i]);
            p[i] = r;
        }
        p[i]
    }
    if idx == js.len() {
        return true;
    }
    let elems: Vec<usize> = bits(js[idx]).collect();
    for (a, &ea) in elems.iter().enumerate() {
        for &eb in &elems[a + 1..] {
            let (ra, rb) = (find(dsu, ea), find(dsu, eb));
            if ra == rb {
                continue;
            }
            let saved = dsu.clone();
            dsu[ra] = rb;
            if spanning_tree_choice(n, js, idx + 1, dsu) {
                return true;
            }
            *dsu = saved;
        }
    }
    false
}

/// Number of `(n-1)`-tuples of nonempty subsets of `[n]` passing the
/// non-degeneracy check, by direct enumeration; cross-checked against
/// `(n-1)! * Vol P_n(-1, -2, -4, ..., -2^{n-1})`.
pub fn count_dragon_families(n: usize) -> Result<Int> {
    if n < 2 {
        return Err(Error::Domain("need n >= 2".into()));
    }
    if n > 5 {
        return Err(Error::Resource(format!(
            "enumeration of (2^{n}-1)^{} tuples refused for n > 5",
            n - 1
        )));
    }
    let subsets: Vec<u64> = (1..(1u64 << n)).collect();
    let m = n - 1;
    let mut count = Int::zero();
    let mut js = vec![0u64; m];
    fn rec(
        subsets: &[u64],
        js: &mut Vec<u64>,
        pos: usize,
        n: usize,
        count: &mut Int,
    ) -> Result<()> {
        if pos == js.len() {
            if dragon_marriage_check(n, js)? {
                *count += 1;
            }
            return Ok(());
        }
        for &s in subsets {
            js[pos] = s;
            rec(subsets, js, pos + 1, n, count)?;
        }
        Ok(())
    }
    rec(&subsets, &mut js, 0, n, &mut count)?;

    let x: Vec<Rational> = (0..n).map(|k| rat(-(1i64 << k))).collect();
    let spec = crate::permutohedron::PermutohedronSpec::new(x)?;
    let vol = crate::permutohedron::volume_numeric_symmetrization(&spec);
    let via_volume = vol * Rational::from_integer(factorial(n - 1));
    if Rational::from_integer(count.clone()) != via_volume {
        return Err(Error::Internal(format!(
            "family count {count} disagrees with volume route {via_volume}"
        )));
    }
    Ok(count)
}

/// Mixed volume of the coordinate simplices `Delta_{J_1}, ..., Delta_{J_{n-1}}`:
/// `1/(n-1)!` when the non-degeneracy check passes, else 0.  Independently
/// verified by the generic-coefficient route: all `n` maximal minors of a
/// pseudo-random matrix supported on the family are nonzero exactly when
/// the check holds.
pub fn mixed_volume_simplices(n: usize, js: &[u64], seed: u64) -> Result<Rational> {
    let dmc = dragon_marriage_check_full(n, js)?;
    let generic = |seed: u64| -> bool {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rows: Vec<Vec<Rational>> = js
            .iter()
            .map(|&j| {
                (0..n)
                    .map(|col| {
                        if j >> col & 1 == 1 {
                            rat(rng.gen_range(1..=1_000_003))
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        (0..n).all(|drop_col| {
            let minor: Vec<Vec<Rational>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != drop_col)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            !determinant(minor).is_zero()
        })
    };
    let mut nonzero = generic(seed);
    if nonzero != dmc {
        // a vanishing minor can be an unlucky coefficient draw; resample once
        nonzero = generic(seed.wrapping_add(0x9e3779b97f4a7c15));
        if nonzero != dmc {
            return Err(Error::Internal(format!(
                "generic-minor route ({nonzero}) disagrees with matching route ({dmc})"
            )));
        }
    }
    if dmc {
        Ok(Rational::new(Int::one(), factorial(n - 1)))
    } else {
        Ok(Rational::zero())
    }
}

fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pr) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pr != col {
            m.swap(col, pr);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if !m[r][col].is_zero() {
                let f = &m[r][col] / &pivot;
                for c in col..n {
                    let sub = &f * &m[col][c];
                    m[r][c] = &m[r][c] - &sub;
                }
            }
        }
    }
    det
}

// ---------------------------------------------------------------------------
// Draconian sequences, volume, lattice points
// ---------------------------------------------------------------------------

/// Estimated atomic-check count for draconian enumeration; used by the
/// resource guard.
fn draconian_cost(f: &SubsetFamily) -> u128 {
    let m = f.m() as u32;
    let n = f.n as u32;
    // compositions of n-1 into m parts, each with up to 2^(n-1) subset checks
    let mut comps: u128 = 1;
    for i in 0..m.saturating_sub(1) {
        comps = comps.saturating_mul((n - 1 + i) as u128 + 1) / (i as u128 + 1);
    }
    comps.saturating_mul(1u128 << (n - 1).min(40))
}

/// All weight sequences `a` with `sum a_i = n - 1` such that for every
/// index set `S` (it suffices to take `S` inside the support of `a`)
/// `|union_{i in S} I_i| >= sum_{i in S} a_i + 1`.  Lexicographically
/// descending order.
pub fn g_draconian_sequences(f: &SubsetFamily, force: bool) -> Result<Vec<Vec<usize>>> {
    if !force && draconian_cost(f) > 1 << 22 {
        return Err(Error::Resource(
            "draconian enumeration exceeds the atomic-check budget; pass force to override".into(),
        ));
    }
    let mut out = Vec::new();
    for c in compositions_of(f.n - 1, f.m()) {
        if is_draconian(f, &c.parts) {
            out.push(c.parts);
        }
    }
    Ok(out)
}

fn is_draconian(f: &SubsetFamily, a: &[usize]) -> bool {
    // indices outside the support only enlarge the union, so only subsets
    // of the support are binding
    let support: Vec<usize> = (0..a.len()).filter(|&i| a[i] > 0).collect();
    let k = support.len();
    for s in 1u64..(1 << k) {
        let mut union = 0u64;
        let mut asum = 0usize;
        for i in bits(s) {
            union |= f.subsets[support[i]];
            asum += a[support[i]];
        }
        if (union.count_ones() as usize) < asum + 1 {
            return false;
        }
    }
    true
}

/// Normalized volume `sum over draconian a of prod y_i^{a_i} / a_i!`.
pub fn volume(f: &SubsetFamily, force: bool) -> Result<Rational> {
    let mut total = Rational::zero();
    for a in g_draconian_sequences(f, force)? {
        let mut term = Rational::one();
        for (i, &ai) in a.iter().enumerate() {
            for _ in 0..ai {
                term *= &f.weights[i];
            }
            term /= Rational::from_integer(factorial(ai));
        }
        total += term;
    }
    Ok(total)
}

/// Normalized volume as a polynomial in the weight variables `y1, ..., ym`.
pub fn volume_symbolic(f: &SubsetFamily, force: bool) -> Result<RationalPolynomial> {
    let vars = indexed_vars("y", f.m());
    let mut p = RationalPolynomial::zero(&vars);
    for a in g_draconian_sequences(f, force)? {
        let mut denom = Int::one();
        for &ai in &a {
            denom *= factorial(ai);
        }
        let exp: Vec<u32> = a.iter().map(|&ai| ai as u32).collect();
        p.add_term(exp, Rational::new(Int::one(), denom));
    }
    Ok(p)
}

/// Lattice-point count by the raising-power formula:
/// trimmed `P^- = P - Delta_{[n]}` counts `sum over draconian a of
/// prod (y_i)_{a_i}/a_i!`; the untrimmed count needs `I_1 = [n]` (prepended
/// with weight 0 when absent) and replaces `y_1` by `y_1 + 1`.
pub fn lattice_points(f: &SubsetFamily, trimmed: bool, force: bool) -> Result<Int> {
    for w in &f.weights {
        if !w.denom().is_one() || w.is_negative() {
            return Err(Error::Domain(
                "lattice counting needs nonnegative integer weights".into(),
            ));
        }
    }
    let full = (1u64 << f.n) - 1;
    let mut g = f.clone();
    if !trimmed {
        if g.subsets.first() != Some(&full) {
            g.subsets.insert(0, full);
            g.weights.insert(0, Rational::zero());
        }
        g.weights[0] += Rational::one();
    }
    let mut total = Rational::zero();
    for a in g_draconian_sequences(&g, force)? {
        let mut term = Rational::one();
        for (i, &ai) in a.iter().enumerate() {
            term *= rising_power(&g.weights[i], ai) / Rational::from_integer(factorial(ai));
        }
        total += term;
    }
    if !total.denom().is_one() || total.is_negative() {
        return Err(Error::Internal(format!(
            "lattice count came out non-integral: {total}"
        )));
    }
    Ok(total.numer().clone())
}

// ---------------------------------------------------------------------------
// z-coordinates
// ---------------------------------------------------------------------------

/// Facet parameters indexed by subset mask (index 0 unused): the polytope
/// is `{ t : sum_{i in I} t_i >= z_I for all I, with equality at [n] }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZParameters {
    pub n: usize,
    pub z: Vec<Rational>,
}

/// `z_I = sum over family members J contained in I of y_J`.
pub fn z_from_y(f: &SubsetFamily) -> ZParameters {
    let size = 1usize << f.n;
    let mut z = vec![Rational::zero(); size];
    for mask in 1..size as u64 {
        for (i, &s) in f.subsets.iter().enumerate() {
            if s & !mask == 0 {
                z[mask as usize] += &f.weights[i];
            }
        }
    }
    ZParameters { n: f.n, z }
}

/// Moebius inversion `y_I = sum_{J subset of I} (-1)^{|I \ J|} z_J`.
pub fn moebius_y_from_z(zp: &ZParameters) -> Vec<Rational> {
    let size = 1usize << zp.n;
    let mut y = vec![Rational::zero(); size];
    for mask in 1u64..size as u64 {
        let elems: Vec<usize> = bits(mask).collect();
        let k = elems.len();
        let mut acc = Rational::zero();
        for sub in 0u64..(1 << k) {
            let mut j = 0u64;
            for (b, &e) in elems.iter().enumerate() {
                if sub >> b & 1 == 1 {
                    j |= 1 << e;
                }
            }
            if j == 0 {
                continue; // z is defined on nonempty subsets only
            }
            let sign = if (k - j.count_ones() as usize) % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            acc += sign * &zp.z[j as usize];
        }
        y[mask as usize] = acc;
    }
    y
}

/// Brute-force lattice points of the polytope described by z-parameters
/// (integer z): `t_i >= z_{i}`, partial sums bounded below by `z_I`, total
/// fixed to `z_{[n]}`.
pub fn lattice_points_brute_z(zp: &ZParameters) -> Result<Vec<Vec<i64>>> {
    let n = zp.n;
    let full = (1u64 << n) - 1;
    let to_i64 = |r: &Rational| -> Result<i64> {
        if !r.denom().is_one() {
            return Err(Error::Domain("z must be integral for lattice scan".into()));
        }
        i64::try_from(r.numer().clone()).map_err(|_| Error::Resource("z exceeds i64".into()))
    };
    let z: Vec<i64> = zp.z.iter().map(to_i64).collect::<Result<_>>()?;
    let total = z[full as usize];
    // t_i ranges over [z_{i}, z_{[n]} - z_{[n] minus i}]
    let lows: Vec<i64> = (0..n).map(|i| z[1 << i]).collect();
    let highs: Vec<i64> = (0..n).map(|i| total - z[(full & !(1 << i)) as usize]).collect();
    let mut out = Vec::new();
    let mut t = vec![0i64; n];
    fn rec(
        t: &mut Vec<i64>,
        pos: usize,
        remaining: i64,
        lows: &[i64],
        highs: &[i64],
        z: &[i64],
        full: u64,
        out: &mut Vec<Vec<i64>>,
    ) {
        let n = t.len();
        if pos == n {
            if remaining != 0 {
                return;
            }
            for mask in 1..full {
                let s: i64 = bits(mask).map(|i| t[i]).sum();
                if s < z[mask as usize] {
                    return;
                }
            }
            out.push(t.clone());
            return;
        }
        let rest_low: i64 = lows[pos + 1..].iter().sum();
        let rest_high: i64 = highs[pos + 1..].iter().sum();
        for v in lows[pos]..=highs[pos] {
            let rem = remaining - v;
            if rem < rest_low || rem > rest_high {
                continue;
            }
            t[pos] = v;
            rec(t, pos + 1, rem, lows, highs, z, full, out);
        }
    }
    if lows.iter().zip(&highs).all(|(l, h)| l <= h) {
        rec(&mut t, 0, total, &lows, &highs, &z, full, &mut out);
    }
    Ok(out)
}

/// z-parameters of the trimmed polytope `P - Delta_{[n]}`: all proper-set
/// parameters unchanged, the total reduced by one.
pub fn trim_z(zp: &ZParameters) -> ZParameters {
    let mut z = zp.z.clone();
    let full = (1usize << zp.n) - 1;
    z[full] -= Rational::one();
    ZParameters { n: zp.n, z }
}

// ---------------------------------------------------------------------------
// Permutation-sum volume formulas
// ---------------------------------------------------------------------------

/// Weight map over all nonempty subsets of `[n]`, indexed by mask (index 0
/// unused); absent subsets have weight 0.
pub fn weight_map(f: &SubsetFamily) -> Vec<Rational> {
    let mut y = vec![Rational::zero(); 1 << f.n];
    for (i, &s) in f.subsets.iter().enumerate() {
        y[s as usize] += &f.weights[i];
    }
    y
}

/// Volume as a sum over all permutations with `lambda_i := i`:
/// `(1/(n-1)!) sum_w (sum_I y_I lambda_{w(min I)})^{n-1} /
///  prod_i (lambda_{w(i)} - lambda_{w(i+1)})`.
pub fn volume_vertex_sum(n: usize, y: &[Rational]) -> Result<Rational> {
    if y.len() != 1 << n {
        return Err(Error::Domain("weight map must cover all subsets of [n]".into()));
    }
    let supported: Vec<(u64, &Rational)> = (1..1u64 << n)
        .filter(|&m| !y[m as usize].is_zero())
        .map(|m| (m, &y[m as usize]))
        .collect();
    let mut total = Rational::zero();
    for w in permutations(n) {
        // Each subset I contributes lambda_{w(min I)} y_{w(I)}; grouping by
        // the image m = w(I), the coefficient of y_m is lambda at the
        // element of m whose position under w is earliest.
        let mut lin = Rational::zero();
        for &(mask, weight) in &supported {
            let first = (1..=n)
                .find(|&i| mask >> (w.apply(i) - 1) & 1 == 1)
                .expect("nonempty subset");
            lin += rat(w.apply(first) as i64) * weight;
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
    Ok(total / Rational::from_integer(factorial(n - 1)))
}

/// Volume as a signed sum over `(n-1)`-tuples of nonempty subsets: each
/// tuple contributes `(-1)^{|I_a|} sum over w with descent set I_a of
/// prod_k y_{w(J_k)}`, where `a_i` counts tuple entries with minimum `i`.
pub fn volume_descent_sum(n: usize, y: &[Rational]) -> Result<Rational> {
    if y.len() != 1 << n {
        return Err(Error::Domain("weight map must cover all subsets of [n]".into()));
    }
    if n > 4 {
        return Err(Error::Resource(
            "descent-sum enumeration refused beyond n = 4".into(),
        ));
    }
    let perms = permutations(n);
    // group permutations by descent set for reuse
    let mut by_descents: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for (i, w) in perms.iter().enumerate() {
        by_descents
            .entry(crate::algebra::descent_set(w))
            .or_default()
            .push(i);
    }
    let subsets: Vec<u64> = (1..1u64 << n).collect();
    let mut total = Rational::zero();
    let mut tuple = vec![0u64; n - 1];
    fn rec(
        tuple: &mut Vec<u64>,
        pos: usize,
        subsets: &[u64],
        n: usize,
        perms: &[crate::algebra::Permutation],
        by_descents: &HashMap<Vec<usize>, Vec<usize>>,
        y: &[Rational],
        total: &mut Rational,
    ) -> Result<()> {
        if pos < tuple.len() {
            for &s in subsets {
                tuple[pos] = s;
                rec(tuple, pos + 1, subsets, n, perms, by_descents, y, total)?;
            }
            return Ok(());
        }
        // composition a: a_i = number of tuple entries with minimum i
        let mut a = vec![0usize; n];
        for &j in tuple.iter() {
            a[bits(j).next().unwrap()] += 1;
        }
        let dis = crate::permutohedron::descent_index_set(&crate::algebra::Composition::new(a))?;
        let sign = if dis.indices.len() % 2 == 0 { 1 } else { -1 };
        let Some(ws) = by_descents.get(&dis.indices) else {
            return Ok(());
        };
        let mut inner = Rational::zero();
        for &wi in ws {
            let w = &perms[wi];
            let mut prod = Rational::one();
            for &j in tuple.iter() {
                let mut image = 0u64;
                for e in bits(j) {
                    image |= 1 << (w.apply(e + 1) - 1);
                }
                let weight = &y[image as usize];
                if weight.is_zero() {
                    prod = Rational::zero();
                    break;
                }
                prod *= weight;
            }
            inner += prod;
        }
        *total += Rational::from_integer(Int::from(sign)) * inner;
        Ok(())
    }
    rec(
        &mut tuple,
        0,
        &subsets,
        n,
        &perms,
        &by_descents,
        y,
        &mut total,
    )?;
    // sanity guard: descent counts must tile the permutations
    debug_assert_eq!(
        by_descents.values().map(|v| v.len()).sum::<usize>(),
        perms.len()
    );
    let _ = descent_count(n, &[]);
    // Ordered tuples over-count each multiset of subsets by
    // (n-1)!/prod(multiplicities!), while the expansion of the
    // permutation-sum formula wants 1/prod(multiplicities!); the uniform
    // correction is a division by (n-1)!.
    Ok(total / Rational::from_integer(factorial(n - 1)))
}

/// Trimmed lattice counts for the family and its mirror; the two are
/// asserted equal.
pub fn duality_check(f: &SubsetFamily, force: bool) -> Result<(Int, Int)> {
    let unit = SubsetFamily::new(
        f.n,
        f.subsets.clone(),
        vec![Rational::one(); f.m()],
    )?;
    let count_g = lattice_points(&unit, true, force)?;
    let count_dual = lattice_points(&unit.dual()?, true, force)?;
    if count_g != count_dual {
        return Err(Error::Internal(format!(
            "duality violated: {count_g} vs {count_dual}"
        )));
    }
    Ok((count_g, count_dual))
}
