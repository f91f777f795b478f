//! Vertex-cone summation for simple rational polytopes: half-open
//! parallelepiped points, lattice counting and volume via per-vertex
//! rational-function specialization, and the Todd-operator evaluation of
//! lattice counts from the deformation volume polynomial of generalized
//! permutohedra.

use num::{One, Signed, Zero};

use crate::algebra::{
    factorial, indexed_vars, permutations, Int, Rational, RationalPolynomial,
};
use crate::minkowski::{self, SubsetFamily};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Truncated one-variable power series
// ---------------------------------------------------------------------------

/// A power series in one variable truncated at a fixed length; all
/// arithmetic keeps the same truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    pub coefficients: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn zero(len: usize) -> Self {
        Self {
            coefficients: vec![Rational::zero(); len],
        }
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Rational::is_zero)
    }

    /// `exp(s t)` truncated.
    pub fn exp(s: &Rational, len: usize) -> Self {
        let mut coefficients = Vec::with_capacity(len);
        let mut term = Rational::one();
        for j in 0..len {
            if j > 0 {
                term = term * s / Rational::from_integer(Int::from(j as u64));
            }
            coefficients.push(term.clone());
        }
        Self { coefficients }
    }

    /// `t / (1 - exp(-s t))` for nonzero `s`, an analytic series.
    pub fn edge_factor(s: &Rational, len: usize) -> Result<Self> {
        if s.is_zero() {
            return Err(Error::Domain("edge factor needs a nonzero slope".into()));
        }
        // (1 - exp(-s t)) / t has coefficients (-1)^j s^{j+1} / (j+1)!
        let mut base = Vec::with_capacity(len);
        let mut power = s.clone();
        for j in 0..len {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            base.push(&power * Rational::new(Int::from(sign), factorial(j + 1)));
            power = power * s;
        }
        Ok(Self { coefficients: base }.inverse())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let len = self.len();
        let mut out = vec![Rational::zero(); len];
        for i in 0..len {
            if self.coefficients[i].is_zero() {
                continue;
            }
            for j in 0..len - i {
                out[i + j] += &self.coefficients[i] * &other.coefficients[j];
            }
        }
        Self { coefficients: out }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (a, b) in self.coefficients.iter_mut().zip(&other.coefficients) {
            *a += b;
        }
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Self {
        let len = self.len();
        let mut out = vec![Rational::zero(); len];
        out[0] = Rational::one() / &self.coefficients[0];
        for k in 1..len {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coefficients[j] * &out[k - j];
            }
            out[k] = -(acc / &self.coefficients[0]);
        }
        Self { coefficients: out }
    }
}

// ---------------------------------------------------------------------------
// Simple-polytope vertex-cone representation
// ---------------------------------------------------------------------------

/// A simple rational polytope given by its vertices and, at each vertex,
/// the `n` primitive integer edge generators of its tangent cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplePolytopeRep {
    pub vertices: Vec<Vec<Rational>>,
    pub cones: Vec<Vec<Vec<i64>>>,
}

impl SimplePolytopeRep {
    pub fn new(vertices: Vec<Vec<Rational>>, cones: Vec<Vec<Vec<i64>>>) -> Result<Self> {
        if vertices.is_empty() || vertices.len() != cones.len() {
            return Err(Error::Domain(
                "need one generator list per vertex".into(),
            ));
        }
        let n = vertices[0].len();
        for (v, gens) in vertices.iter().zip(&cones) {
            if v.len() != n || gens.len() != n || gens.iter().any(|g| g.len() != n) {
                return Err(Error::Domain(
                    "every vertex needs n coordinates and n generators of length n".into(),
                ));
            }
            if det_i64(gens) == 0 {
                return Err(Error::Domain("cone generators must be independent".into()));
            }
        }
        Ok(Self { vertices, cones })
    }

    pub fn dim(&self) -> usize {
        self.vertices[0].len()
    }

    /// Parse `{"vertices": [["1/2", 0], ...], "cones": [[[1,0],[0,1]], ...]}`;
    /// vertex coordinates may be integers or rational strings.
    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Domain("expected a JSON object".into()))?;
        let vertices = obj
            .get("vertices")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::Domain("missing vertices array".into()))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::Domain("vertex must be an array".into()))?
                    .iter()
                    .map(|c| match c {
                        serde_json::Value::Number(x) => x
                            .as_i64()
                            .map(|i| Rational::from_integer(Int::from(i)))
                            .ok_or_else(|| Error::Domain("non-integer number".into())),
                        serde_json::Value::String(s) => {
                            crate::permutohedron::parse_rational(s)
                        }
                        _ => Err(Error::Domain("bad coordinate".into())),
                    })
                    .collect::<Result<Vec<Rational>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let cones: Vec<Vec<Vec<i64>>> = serde_json::from_value(
            obj.get("cones")
                .cloned()
                .ok_or_else(|| Error::Domain("missing cones array".into()))?,
        )
        .map_err(|e| Error::Domain(format!("bad cones: {e}")))?;
        Self::new(vertices, cones)
    }
}

fn det_i64(rows: &[Vec<i64>]) -> i64 {
    let n = rows.len();
    match n {
        1 => rows[0][0],
        2 => rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0],
        _ => {
            let mut det = 0i64;
            for j in 0..n {
                let minor: Vec<Vec<i64>> = rows[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                det += sign * rows[0][j] * det_i64(&minor);
            }
            det
        }
    }
}

fn rational_inverse_matrix(gens: &[Vec<i64>]) -> Result<Vec<Vec<Rational>>> {
    // inverse of the matrix whose columns are the generators
    let n = gens.len();
    let m: Vec<Vec<Rational>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| Rational::from_integer(Int::from(gens[c][r])))
                .collect()
        })
        .collect();
    let mut a = m;
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pr = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::Domain("generators are dependent".into()))?;
        a.swap(col, pr);
        inv.swap(col, pr);
        let piv = a[col][col].clone();
        for c in 0..n {
            a[col][c] = &a[col][c] / &piv;
            inv[col][c] = &inv[col][c] / &piv;
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

/// Integer points of the half-open parallelepiped
/// `{ v + c_1 g_1 + ... + c_n g_n : 0 <= c_i < 1 }`, found by scanning a
/// bounding box and testing the inverse coordinates exactly.
pub fn parallelepiped_points(v: &[Rational], generators: &[Vec<i64>]) -> Result<Vec<Vec<Int>>> {
    let n = v.len();
    if generators.len() != n {
        return Err(Error::Domain("need n generators in dimension n".into()));
    }
    let inv = rational_inverse_matrix(generators)?;
    // bounding box from the 2^n corners (c_i in {0,1})
    let mut lo = vec![Rational::zero(); n];
    let mut hi = vec![Rational::zero(); n];
    for mask in 0u64..1 << n {
        let corner: Vec<Rational> = (0..n)
            .map(|r| {
                let mut x = v[r].clone();
                for i in 0..n {
                    if mask >> i & 1 == 1 {
                        x += Rational::from_integer(Int::from(generators[i][r]));
                    }
                }
                x
            })
            .collect();
        for r in 0..n {
            if mask == 0 || corner[r] < lo[r] {
                lo[r] = lo[r].clone().min(corner[r].clone());
            }
            if mask == 0 || corner[r] > hi[r] {
                hi[r] = hi[r].clone().max(corner[r].clone());
            }
        }
    }
    let lo: Vec<i64> = lo
        .iter()
        .map(|x| i64::try_from(x.ceil().numer()).map_err(|_| Error::Resource("box too large".into())))
        .collect::<Result<_>>()?;
    let hi: Vec<i64> = hi
        .iter()
        .map(|x| i64::try_from(x.floor().numer()).map_err(|_| Error::Resource("box too large".into())))
        .collect::<Result<_>>()?;
    let mut box_size = 1i64;
    for r in 0..n {
        box_size = box_size.saturating_mul((hi[r] - lo[r] + 1).max(0));
        if box_size > 1_000_000 {
            return Err(Error::Resource("parallelepiped bounding box too large".into()));
        }
    }
    let mut out = Vec::new();
    let mut p = lo.clone();
    if (0..n).any(|r| lo[r] > hi[r]) {
        return Ok(out);
    }
    loop {
        // c = G^{-1} (p - v); keep the point when all c_i in [0, 1)
        let diff: Vec<Rational> = (0..n)
            .map(|r| Rational::from_integer(Int::from(p[r])) - &v[r])
            .collect();
        let inside = (0..n).all(|i| {
            let mut c = Rational::zero();
            for r in 0..n {
                c += &inv[i][r] * &diff[r];
            }
            !c.is_negative() && c < Rational::one()
        });
        if inside {
            out.push(p.iter().map(|&x| Int::from(x)).collect());
        }
        let mut pos = 0;
        loop {
            if pos == n {
                out.sort();
                return Ok(out);
            }
            p[pos] += 1;
            if p[pos] <= hi[pos] {
                break;
            }
            p[pos] = lo[pos];
            pos += 1;
        }
    }
}

/// The structured rational expression for the exponent sum of a simple
/// cone: numerator lattice points over the denominator generator list.
pub fn cone_s_representation(
    v: &[Rational],
    generators: &[Vec<i64>],
) -> Result<(Vec<Vec<Int>>, Vec<Vec<i64>>)> {
    Ok((parallelepiped_points(v, generators)?, generators.to_vec()))
}

fn h_form(h: &[i64], int_vec: &[i64]) -> i64 {
    h.iter().zip(int_vec).map(|(a, b)| a * b).sum()
}

fn h_form_rational(h: &[i64], v: &[Rational]) -> Rational {
    let mut s = Rational::zero();
    for (a, b) in h.iter().zip(v) {
        s += Rational::from_integer(Int::from(*a)) * b;
    }
    s
}

/// A deterministic generic linear form `(1, M, M^2, ...)` with the
/// smallest `M >= 1` that avoids all cone generators' kernels.
pub fn generic_form(rep: &SimplePolytopeRep) -> Result<Vec<i64>> {
    let n = rep.dim();
    for m in 1i64..=1000 {
        let mut h = Vec::with_capacity(n);
        let mut p = 1i64;
        for _ in 0..n {
            h.push(p);
            p = p.saturating_mul(m);
        }
        if rep
            .cones
            .iter()
            .all(|gens| gens.iter().all(|g| h_form(&h, g) != 0))
        {
            return Ok(h);
        }
    }
    Err(Error::Internal("no generic linear form found".into()))
}

fn brion_series(rep: &SimplePolytopeRep, h: &[i64]) -> Result<TruncatedSeries> {
    let n = rep.dim();
    let len = n + 1;
    let mut total = TruncatedSeries::zero(len);
    for (v, gens) in rep.vertices.iter().zip(&rep.cones) {
        let mut term = TruncatedSeries::zero(len);
        for a in parallelepiped_points(v, gens)? {
            let ha: Vec<i64> = a
                .iter()
                .map(|x| i64::try_from(x).expect("box-bounded point"))
                .collect();
            term.add_assign(&TruncatedSeries::exp(
                &Rational::from_integer(Int::from(h_form(h, &ha))),
                len,
            ));
        }
        for g in gens {
            // t / (1 - e^{t h(g)}) = edge factor at slope -h(g)
            let s = Rational::from_integer(Int::from(-h_form(h, g)));
            term = term.mul(&TruncatedSeries::edge_factor(&s, len)?);
        }
        total.add_assign(&term);
    }
    Ok(total)
}

/// Number of lattice points of a simple polytope as the top coefficient
/// of the vertex-cone exponential series.
pub fn lattice_count_brion(rep: &SimplePolytopeRep) -> Result<Int> {
    let n = rep.dim();
    let h = generic_form(rep)?;
    let series = brion_series(rep, &h)?;
    let c = &series.coefficients[n];
    if !c.denom().is_one() || c.is_negative() {
        return Err(Error::Internal(format!(
            "lattice count came out as {c}; the vertex-cone data is inconsistent"
        )));
    }
    Ok(c.numer().clone())
}

/// Volume of a simple polytope as
/// `(1/n!) sum_v |det g| h(v)^n / ((-1)^n prod h(g))`.
pub fn volume_brion(rep: &SimplePolytopeRep) -> Result<Rational> {
    let n = rep.dim();
    let h = generic_form(rep)?;
    let mut sum = Rational::zero();
    for (v, gens) in rep.vertices.iter().zip(&rep.cones) {
        let mut denom = Rational::one();
        for g in gens {
            denom *= Rational::from_integer(Int::from(h_form(h.as_slice(), g)));
        }
        if n % 2 == 1 {
            denom = -denom;
        }
        let hv = h_form_rational(&h, v);
        let mut power = Rational::one();
        for _ in 0..n {
            power *= &hv;
        }
        let det = Rational::from_integer(Int::from(det_i64(gens).abs()));
        sum += det * power / denom;
    }
    Ok(sum / Rational::from_integer(factorial(n)))
}

// ---------------------------------------------------------------------------
// Vertex-cone representations of (generalized) permutohedra
// ---------------------------------------------------------------------------

/// Vertex-cone representation of the permutohedron with strictly
/// decreasing coordinate multiset `x`, projected to the first `n-1`
/// coordinates (a unimodular chart of its ambient hyperplane).  The
/// vertex for `w` places `x_k` at position `w(k)`; its edge generators
/// are the projections of `e_{w(k+1)} - e_{w(k)}`.
pub fn permutohedron_rep(x: &[Rational]) -> Result<SimplePolytopeRep> {
    let n = x.len();
    if n < 2 {
        return Err(Error::Domain("need at least two coordinates".into()));
    }
    for k in 0..n - 1 {
        if x[k] <= x[k + 1] {
            return Err(Error::Domain("coordinates must be strictly decreasing".into()));
        }
    }
    let mut vertices = Vec::new();
    let mut cones = Vec::new();
    for w in permutations(n) {
        let mut v = vec![Rational::zero(); n - 1];
        for k in 1..=n {
            let pos = w.apply(k); // x_k sits at coordinate w(k)
            if pos < n {
                v[pos - 1] = x[k - 1].clone();
            }
        }
        let mut gens = Vec::new();
        for k in 1..n {
            let mut g = vec![0i64; n - 1];
            if w.apply(k + 1) < n {
                g[w.apply(k + 1) - 1] = 1;
            }
            if w.apply(k) < n {
                g[w.apply(k) - 1] = -1;
            }
            gens.push(g);
        }
        vertices.push(v);
        cones.push(gens);
    }
    SimplePolytopeRep::new(vertices, cones)
}

/// Vertex-cone representation of a Minkowski sum of coordinate simplices
/// whose normal fan is the full permutohedral fan (generic nonnegative
/// weights), projected to the first `n-1` coordinates.  The vertex for
/// `w` picks, from each simplex, the member appearing earliest in
/// `w(1), ..., w(n)`.
pub fn genperm_rep(f: &SubsetFamily) -> Result<SimplePolytopeRep> {
    let n = f.n;
    if n < 2 {
        return Err(Error::Domain("need n >= 2".into()));
    }
    let mut vertices = Vec::new();
    let mut cones = Vec::new();
    for w in permutations(n) {
        let mut v = vec![Rational::zero(); n - 1];
        for (j, &mask) in f.subsets.iter().enumerate() {
            let first = (1..=n)
                .map(|k| w.apply(k))
                .find(|&i| mask >> (i - 1) & 1 == 1)
                .expect("nonempty subset");
            if first < n {
                v[first - 1] += &f.weights[j];
            }
        }
        let mut gens = Vec::new();
        for k in 1..n {
            let mut g = vec![0i64; n - 1];
            if w.apply(k + 1) < n {
                g[w.apply(k + 1) - 1] = 1;
            }
            if w.apply(k) < n {
                g[w.apply(k) - 1] = -1;
            }
            gens.push(g);
        }
        vertices.push(v);
        cones.push(gens);
    }
    SimplePolytopeRep::new(vertices, cones)
}

// ---------------------------------------------------------------------------
// Todd-operator lattice counting for generalized permutohedra
// ---------------------------------------------------------------------------

fn todd_coefficients(len: usize) -> Vec<Rational> {
    // q / (1 - e^{-q}) = 1 + q/2 + q^2/12 - q^4/720 + ...
    let base: Vec<Rational> = (0..len)
        .map(|j| {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            Rational::new(Int::from(sign), factorial(j + 1))
        })
        .collect();
    TruncatedSeries { coefficients: base }.inverse().coefficients
}

/// Count the lattice points of the generalized permutohedron of a
/// weighted simplex family by applying the product of Todd operators
/// `Todd(-d/dz_I)` over proper nonempty `I` to the deformation volume
/// polynomial written in facet parameters `z_I`, then evaluating at the
/// family's support values; cross-checked against the direct count.
pub fn todd_count_genperm(f: &SubsetFamily) -> Result<Int> {
    let n = f.n;
    if !(3..=4).contains(&n) {
        return Err(Error::Domain("supported for n = 3 or 4".into()));
    }
    for w in &f.weights {
        if !w.denom().is_one() || w.is_negative() {
            return Err(Error::Domain("needs nonnegative integer weights".into()));
        }
    }
    // deformation volume polynomial over all subsets of size >= 2
    let all: Vec<u64> = (1..1u64 << n).filter(|m| m.count_ones() >= 2).collect();
    let family = SubsetFamily::new(n, all.clone(), vec![Rational::one(); all.len()])?;
    let vy = minkowski::volume_symbolic(&family, true)?;
    let num_z = (1usize << n) - 1;
    let zvars = indexed_vars("z", num_z); // variable z{mask} at index mask - 1
    let yvars = indexed_vars("y", all.len());
    let assignments: Vec<(String, RationalPolynomial)> = all
        .iter()
        .enumerate()
        .map(|(j, &mask)| {
            // y_I = sum_{nonempty J subset I} (-1)^{|I| - |J|} z_J
            let elems: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let k = elems.len();
            let mut poly = RationalPolynomial::zero(&zvars);
            for sub in 1u64..1 << k {
                let mut j_mask = 0u64;
                for (b, &e) in elems.iter().enumerate() {
                    if sub >> b & 1 == 1 {
                        j_mask |= 1 << e;
                    }
                }
                let sign = if (k - sub.count_ones() as usize) % 2 == 0 {
                    Rational::one()
                } else {
                    -Rational::one()
                };
                let mut exp = vec![0u32; num_z];
                exp[j_mask as usize - 1] = 1;
                poly.add_term(exp, sign);
            }
            (yvars[j].clone(), poly)
        })
        .collect();
    let mut vz = vy.substitute(&assignments).remap(&zvars);
    // apply Todd(-d/dz_I) for each proper nonempty I, truncated at the
    // polynomial degree n - 1
    let todd = todd_coefficients(n);
    let full_mask = (1u64 << n) - 1;
    for mask in 1..=full_mask {
        if mask == full_mask {
            continue;
        }
        let var = &zvars[mask as usize - 1];
        let mut result = RationalPolynomial::zero(&zvars);
        let mut derivative = vz.clone();
        for (k, coeff) in todd.iter().enumerate().take(n) {
            let signed = if k % 2 == 0 {
                coeff.clone()
            } else {
                -coeff.clone()
            };
            result = result.add(&derivative.scale(&signed));
            derivative = derivative.partial_derivative(var);
        }
        vz = result;
    }
    let zp = minkowski::z_from_y(f);
    let point: Vec<Rational> = (1..=num_z).map(|mask| zp.z[mask].clone()).collect();
    let value = vz.evaluate(&point);
    if !value.denom().is_one() || value.is_negative() {
        return Err(Error::Internal(format!(
            "Todd evaluation came out as {value}"
        )));
    }
    let direct = minkowski::lattice_points(f, false, true)?;
    if *value.numer() != direct {
        return Err(Error::Internal(format!(
            "Todd count {value} disagrees with the direct count {direct}"
        )));
    }
    Ok(value.numer().clone())
}

/// Representation-level check that the exponent-sum of a line vanishes:
/// the two half-line cones covering an integer line specialize to
/// series that cancel exactly.
pub fn periodic_kill_check(len: usize) -> bool {
    // line R e_1 = (cone at 0 along +e_1) + (cone at -e_1 along -e_1);
    // specialized along h = (1): t/(1 - e^t) + e^{-t} t/(1 - e^{-t})
    let up = TruncatedSeries::edge_factor(&-Rational::one(), len).expect("nonzero slope");
    let down = TruncatedSeries::exp(&-Rational::one(), len)
        .mul(&TruncatedSeries::edge_factor(&Rational::one(), len).expect("nonzero slope"));
    let mut sum = up;
    sum.add_assign(&down);
    sum.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::permutohedron::{self, PermutohedronSpec};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn int_points(pts: &[Vec<Int>]) -> Vec<Vec<i64>> {
        pts.iter()
            .map(|p| p.iter().map(|x| i64::try_from(x).unwrap()).collect())
            .collect()
    }

    #[test]
    fn parallelepiped_examples() {
        let origin = vec![rat(0), rat(0)];
        let unit = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(
            int_points(&parallelepiped_points(&origin, &unit).unwrap()),
            vec![vec![0, 0]]
        );
        let skew = vec![vec![1, 0], vec![1, 2]];
        assert_eq!(
            int_points(&parallelepiped_points(&origin, &skew).unwrap()),
            vec![vec![0, 0], vec![1, 1]]
        );
    }

    #[test]
    fn parallelepiped_count_is_determinant() {
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        let mut done = 0;
        while done < 50 {
            let n = rng.gen_range(1..=3usize);
            let gens: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.gen_range(-3i64..=3)).collect())
                .collect();
            let det = det_i64(&gens);
            if det == 0 {
                continue;
            }
            let v: Vec<Rational> = (0..n).map(|_| rat(rng.gen_range(-2i64..=2))).collect();
            let pts = parallelepiped_points(&v, &gens).unwrap();
            assert_eq!(pts.len() as i64, det.abs());
            done += 1;
        }
    }

    #[test]
    fn cone_representation_examples() {
        // a unimodular quadrant: numerator is the vertex alone
        let (num, den) = cone_s_representation(
            &[rat(1), rat(0)],
            &[vec![1, 0], vec![0, 1]],
        )
        .unwrap();
        assert_eq!(int_points(&num), vec![vec![1, 0]]);
        assert_eq!(den, vec![vec![1, 0], vec![0, 1]]);
        // index-2 cone: two numerator points
        let (num, _) = cone_s_representation(
            &[rat(0), rat(0)],
            &[vec![1, 0], vec![1, 2]],
        )
        .unwrap();
        assert_eq!(num.len(), 2);
    }

    #[test]
    fn segment_and_square() {
        let segment = SimplePolytopeRep::new(
            vec![vec![rat(0)], vec![rat(1)]],
            vec![vec![vec![1]], vec![vec![-1]]],
        )
        .unwrap();
        assert_eq!(lattice_count_brion(&segment).unwrap(), Int::from(2u32));
        assert_eq!(volume_brion(&segment).unwrap(), rat(1));

        let square = SimplePolytopeRep::new(
            vec![
                vec![rat(0), rat(0)],
                vec![rat(1), rat(0)],
                vec![rat(0), rat(1)],
                vec![rat(1), rat(1)],
            ],
            vec![
                vec![vec![1, 0], vec![0, 1]],
                vec![vec![-1, 0], vec![0, 1]],
                vec![vec![1, 0], vec![0, -1]],
                vec![vec![-1, 0], vec![0, -1]],
            ],
        )
        .unwrap();
        assert_eq!(lattice_count_brion(&square).unwrap(), Int::from(4u32));
        assert_eq!(volume_brion(&square).unwrap(), rat(1));
    }

    #[test]
    fn hexagon_count_and_volume() {
        let rep = permutohedron_rep(&[rat(2), rat(1), rat(0)]).unwrap();
        assert_eq!(lattice_count_brion(&rep).unwrap(), Int::from(7u32));
        assert_eq!(volume_brion(&rep).unwrap(), rat(3));
    }

    #[test]
    fn permutohedron_p4_count() {
        let x = vec![rat(3), rat(2), rat(1), rat(0)];
        let rep = permutohedron_rep(&x).unwrap();
        let count = lattice_count_brion(&rep).unwrap();
        assert_eq!(count, Int::from(38u32));
        let spec = PermutohedronSpec::new(x).unwrap();
        assert_eq!(count, permutohedron::lattice_count(&spec).unwrap());
        assert_eq!(
            volume_brion(&rep).unwrap(),
            permutohedron::volume_numeric_symmetrization(&spec)
        );
    }

    #[test]
    fn random_generalized_permutohedra_agree_with_direct_counts() {
        let mut rng = ChaCha8Rng::seed_from_u64(72);
        for _ in 0..20 {
            let subsets = vec![0b011u64, 0b101, 0b110, 0b111];
            let weights: Vec<Rational> = (0..4)
                .map(|j| {
                    if j < 3 {
                        rat(rng.gen_range(1i64..=4))
                    } else {
                        rat(rng.gen_range(0i64..=3))
                    }
                })
                .collect();
            let f = SubsetFamily::new(3, subsets, weights).unwrap();
            let rep = genperm_rep(&f).unwrap();
            assert_eq!(
                lattice_count_brion(&rep).unwrap(),
                minkowski::lattice_points(&f, false, true).unwrap()
            );
            assert_eq!(
                volume_brion(&rep).unwrap(),
                minkowski::volume(&f, true).unwrap()
            );
        }
    }

    #[test]
    fn form_independence() {
        // two different generic forms give the same count
        let rep = permutohedron_rep(&[rat(2), rat(1), rat(0)]).unwrap();
        let h1 = generic_form(&rep).unwrap();
        let h2: Vec<i64> = vec![3, 7];
        assert!(rep
            .cones
            .iter()
            .all(|gens| gens.iter().all(|g| h_form(&h2, g) != 0)));
        assert_ne!(h1, h2);
        assert_eq!(
            brion_series(&rep, &h1).unwrap().coefficients[2],
            brion_series(&rep, &h2).unwrap().coefficients[2]
        );
    }

    #[test]
    fn dilation_polynomial_and_volume() {
        // counts of the dilated hexagon fit a quadratic whose leading
        // coefficient is the volume
        let base = [rat(1), rat(1), rat(1)];
        let counts: Vec<(Rational, Rational)> = (1..=3i64)
            .map(|k| {
                let f = SubsetFamily::new(
                    3,
                    vec![0b011, 0b101, 0b110],
                    base.iter().map(|w| w * rat(k)).collect(),
                )
                .unwrap();
                let rep = genperm_rep(&f).unwrap();
                (
                    rat(k),
                    Rational::from_integer(lattice_count_brion(&rep).unwrap()),
                )
            })
            .collect();
        let coeffs = crate::algebra::lagrange_interpolate(&counts);
        assert_eq!(coeffs.len(), 3);
        let f1 = SubsetFamily::unit_weights(3, &[vec![1, 2], vec![1, 3], vec![2, 3]]).unwrap();
        assert_eq!(coeffs[2], volume_brion(&genperm_rep(&f1).unwrap()).unwrap());
    }

    #[test]
    fn todd_counts() {
        // a single full simplex
        let simplex = SubsetFamily::unit_weights(3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(todd_count_genperm(&simplex).unwrap(), Int::from(3u32));
        // the hexagon
        let hex = SubsetFamily::unit_weights(3, &[vec![1, 2], vec![1, 3], vec![2, 3]]).unwrap();
        assert_eq!(todd_count_genperm(&hex).unwrap(), Int::from(7u32));
        // random integer-weight families
        let mut rng = ChaCha8Rng::seed_from_u64(73);
        for _ in 0..10 {
            let subsets: Vec<u64> = (1u64..8).filter(|m| m.count_ones() >= 2).collect();
            let weights: Vec<Rational> =
                (0..subsets.len()).map(|_| rat(rng.gen_range(0i64..=3))).collect();
            let f = SubsetFamily::new(3, subsets, weights).unwrap();
            // the operation itself asserts agreement with the direct count
            todd_count_genperm(&f).unwrap();
        }
    }

    #[test]
    fn todd_count_dimension_four() {
        let f = SubsetFamily::unit_weights(4, &[vec![1, 2, 3, 4]]).unwrap();
        assert_eq!(todd_count_genperm(&f).unwrap(), Int::from(4u32));
    }

    #[test]
    fn periodic_kill() {
        assert!(periodic_kill_check(8));
    }

    #[test]
    fn json_round_trip() {
        let v: serde_json::Value = serde_json::from_str(
            r#"{"vertices": [[0], ["1/1"]], "cones": [[[1]], [[-1]]]}"#,
        )
        .unwrap();
        let rep = SimplePolytopeRep::from_json(&v).unwrap();
        assert_eq!(lattice_count_brion(&rep).unwrap(), Int::from(2u32));
    }
}
