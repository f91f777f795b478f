//! Diagonal vectors of standard shifted Young tableaux of staircase
//! shape: the product generating function over pairs, per-vector counts,
//! the associahedron lattice-point correspondence, and the rectangle
//! subdivisions of the staircase attached to plane binary trees.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::algebra::{factorial, indexed_vars, Int, Rational, RationalPolynomial};
use crate::eulerian::PlaneBinaryTree;
use crate::{Error, Result};

/// The diagonal entries of a standard shifted staircase tableau:
/// strictly increasing, starting at 1 and ending at `n(n+1)/2`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DiagonalVector {
    pub d: Vec<usize>,
}

impl DiagonalVector {
    pub fn new(d: Vec<usize>) -> Result<Self> {
        let n = d.len();
        if n == 0 || d[0] != 1 || d[n - 1] != n * (n + 1) / 2 {
            return Err(Error::Domain(
                "diagonal vector must run from 1 to n(n+1)/2".into(),
            ));
        }
        if d.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Domain("diagonal vector must be strictly increasing".into()));
        }
        Ok(Self { d })
    }

    /// Gap vector `a_i = d_{i+1} - d_i - 1`.
    pub fn gaps(&self) -> Vec<usize> {
        self.d.windows(2).map(|w| w[1] - w[0] - 1).collect()
    }
}

/// The generating polynomial `prod_{1<=i<j<=n} (t_i + ... + t_{j-1}) / (j-i)`
/// in `t_1, ..., t_{n-1}`; the coefficient of `t^a / prod a_i!` counts the
/// tableaux with gap vector `a`.
pub fn diagonal_generating_function(n: usize) -> Result<RationalPolynomial> {
    if n < 2 {
        return Err(Error::Domain("need n >= 2".into()));
    }
    if n > 9 {
        return Err(Error::Resource("n capped at 9".into()));
    }
    let vars = indexed_vars("t", n - 1);
    let mut p = RationalPolynomial::constant(&vars, Rational::one());
    for i in 1..n {
        for j in i + 1..=n {
            let mut factor = RationalPolynomial::zero(&vars);
            let coeff = Rational::new(Int::one(), Int::from((j - i) as u64));
            for k in i..j {
                let mut exp = vec![0u32; n - 1];
                exp[k - 1] = 1;
                factor.add_term(exp, coeff.clone());
            }
            p = p.mul(&factor);
        }
    }
    Ok(p)
}

/// Number of distinct diagonal vectors of shifted staircase tableaux:
/// the number of monomials of the generating polynomial.
pub fn count_diagonal_vectors(n: usize) -> Result<usize> {
    if n == 1 {
        return Ok(1);
    }
    Ok(diagonal_generating_function(n)?.num_terms())
}

/// All gap vectors with a positive count, with their counts.
pub fn diagonal_count_map(n: usize) -> Result<BTreeMap<Vec<usize>, Int>> {
    let mut out = BTreeMap::new();
    if n == 1 {
        out.insert(Vec::new(), Int::one());
        return Ok(out);
    }
    let p = diagonal_generating_function(n)?;
    for (exp, coeff) in p.terms() {
        let a: Vec<usize> = exp.iter().map(|&e| e as usize).collect();
        let mut value = coeff.clone();
        for &ai in &a {
            value *= Rational::from_integer(factorial(ai));
        }
        if !value.denom().is_one() {
            return Err(Error::Internal(format!(
                "non-integral tableau count {value} at {a:?}"
            )));
        }
        out.insert(a, value.numer().clone());
    }
    Ok(out)
}

/// Number of shifted staircase tableaux with gap vector `a` (length
/// `n-1`, summing to `n(n-1)/2`); zero when the vector is not realized.
pub fn tableaux_count(a: &[usize]) -> Result<Int> {
    let n = a.len() + 1;
    if a.iter().sum::<usize>() != n * (n - 1) / 2 {
        return Err(Error::Domain(
            "gap entries must sum to n(n-1)/2".into(),
        ));
    }
    if n == 1 {
        return Ok(Int::one());
    }
    let p = diagonal_generating_function(n)?;
    let exp: Vec<u32> = a.iter().map(|&ai| ai as u32).collect();
    let mut value = p.coefficient(&exp);
    for &ai in a {
        value *= Rational::from_integer(factorial(ai));
    }
    if !value.denom().is_one() {
        return Err(Error::Internal(format!("non-integral count {value}")));
    }
    Ok(value.numer().clone())
}

// ---------------------------------------------------------------------------
// Brute-force shifted staircase tableaux
// ---------------------------------------------------------------------------

/// Histogram of diagonal vectors over all standard shifted staircase
/// tableaux with rows `(n, n-1, ..., 1)`, by direct backtracking.
pub fn shifted_staircase_diagonals(n: usize) -> Result<BTreeMap<Vec<usize>, Int>> {
    if n > 5 {
        return Err(Error::Resource("brute force capped at n = 5".into()));
    }
    // row i (0-based) occupies columns i .. n-1
    let total = n * (n + 1) / 2;
    let mut filled = vec![vec![0usize; n]; n];
    let mut hist: BTreeMap<Vec<usize>, Int> = BTreeMap::new();
    fn place(
        value: usize,
        total: usize,
        n: usize,
        filled: &mut Vec<Vec<usize>>,
        hist: &mut BTreeMap<Vec<usize>, Int>,
    ) {
        if value > total {
            let d: Vec<usize> = (0..n).map(|i| filled[i][i]).collect();
            *hist.entry(d).or_insert_with(Int::zero) += 1;
            return;
        }
        for row in 0..n {
            for col in row..n {
                if filled[row][col] != 0 {
                    continue;
                }
                let left_ok = col == row || filled[row][col - 1] != 0;
                let up_ok = row == 0 || col == row || filled[row - 1][col] != 0;
                // the first cell of a row sits under a diagonal cell
                let diag_ok = row == 0 || col > row || filled[row - 1][col] != 0;
                if left_ok && up_ok && diag_ok {
                    filled[row][col] = value;
                    place(value + 1, total, n, filled, hist);
                    filled[row][col] = 0;
                }
            }
        }
    }
    place(1, total, n, &mut filled, &mut hist);
    Ok(hist)
}

// ---------------------------------------------------------------------------
// Rectangle subdivisions of the staircase
// ---------------------------------------------------------------------------

/// One rectangle of the staircase subdivision attached to a plane binary
/// tree: it touches the `corner`-th outer corner and spans
/// `rows x cols` boxes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rectangle {
    pub corner: usize,
    pub rows: usize,
    pub cols: usize,
}

impl Rectangle {
    pub fn area(&self) -> usize {
        self.rows * self.cols
    }

    /// Standard Young tableaux of this rectangle by the hook-length
    /// formula.
    pub fn syt_count(&self) -> Int {
        let mut denom = Int::one();
        for a in 0..self.rows {
            for b in 0..self.cols {
                denom *= Int::from(((self.rows - a) + (self.cols - b) - 1) as u64);
            }
        }
        let mut numer = factorial(self.area());
        debug_assert!((numer.clone() % &denom).is_zero());
        numer /= denom;
        numer
    }
}

/// The rectangle subdivision of the staircase shape `(n, ..., 1)` read
/// off a plane binary tree: node `i` with descendant interval `[l, r]`
/// contributes the `(i - l + 1) x (r - i + 1)` rectangle at corner `i`.
pub fn rectangle_subdivision(t: &PlaneBinaryTree) -> Vec<Rectangle> {
    (1..=t.n)
        .map(|i| Rectangle {
            corner: i,
            rows: i - t.l[i] + 1,
            cols: t.r[i] - i + 1,
        })
        .collect()
}

/// The gap vector of the associahedron vertex attached to a plane
/// binary tree: the rectangle areas.
pub fn vertex_gap_vector(t: &PlaneBinaryTree) -> Vec<usize> {
    rectangle_subdivision(t).iter().map(Rectangle::area).collect()
}

/// Closed form for the tableau count at a tree vertex:
/// `prod (rows_i * cols_i)! / (1! 2! ... n!)` over the tree's rectangles.
pub fn vertex_tableaux_count(t: &PlaneBinaryTree) -> Int {
    let mut numer = Int::one();
    for rect in rectangle_subdivision(t) {
        numer *= factorial(rect.area());
    }
    let mut denom = Int::one();
    for k in 1..=t.n {
        denom *= factorial(k);
    }
    debug_assert!((numer.clone() % &denom).is_zero());
    numer / denom
}
