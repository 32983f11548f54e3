//! Longest increasing subsequences, the Robinson-Schensted correspondence
//! (integer and real-valued), Greene invariants with a brute-force oracle,
//! and Plancherel sampling.

use crate::seed::Seed;
use crate::{Error, Result};
use rand::Rng;
use serde::{Deserialize, Serialize};

/// A permutation of `{1, ..., N}`, stored one-line as `sigma[i] = sigma(i+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    sigma: Vec<usize>,
}

impl Permutation {
    pub fn new(sigma: Vec<usize>) -> Result<Self> {
        let n = sigma.len();
        let mut seen = vec![false; n + 1];
        for &v in &sigma {
            if v < 1 || v > n || seen[v] {
                return Err(Error::InvalidInput(format!(
                    "not a permutation of 1..{n}: {sigma:?}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { sigma })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { sigma: (1..=n).collect() }
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.sigma
    }

    /// Uniform draw from S_N by Fisher-Yates with the shared seeded generator.
    pub fn random(n: usize, seed: Seed) -> Self {
        let mut rng = seed.rng();
        let mut sigma: Vec<usize> = (1..=n).collect();
        for i in (1..n).rev() {
            let j = rng.gen_range(0..=i);
            sigma.swap(i, j);
        }
        Permutation { sigma }
    }

    /// One-line CSV form, e.g. `2,3,1,5,4`.
    pub fn to_csv(&self) -> String {
        self.sigma
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Integer partition in weakly decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    lambda: Vec<usize>,
}

impl Partition {
    pub fn new(lambda: Vec<usize>) -> Result<Self> {
        if lambda.iter().any(|&x| x == 0) || lambda.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("not a partition: {lambda:?}")));
        }
        Ok(Partition { lambda })
    }

    pub fn parts(&self) -> &[usize] {
        &self.lambda
    }

    /// Row length, zero beyond the last row.
    pub fn row(&self, i: usize) -> usize {
        self.lambda.get(i).copied().unwrap_or(0)
    }

    pub fn rows(&self) -> usize {
        self.lambda.len()
    }

    pub fn size(&self) -> usize {
        self.lambda.iter().sum()
    }
}

/// Ragged row-major tableau with entries of type `T`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tableau<T> {
    rows: Vec<Vec<T>>,
}

/// Standard Young tableau: entries `1..=N`, rows and columns strictly increasing.
pub type StandardTableau = Tableau<usize>;
/// Real-valued tableau: rows and columns strictly increasing reals.
pub type RealTableau = Tableau<f64>;

impl<T: PartialOrd + Copy> Tableau<T> {
    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition { lambda: self.rows.iter().map(|r| r.len()).collect() }
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    fn rows_and_columns_strict(&self) -> bool {
        for r in 0..self.rows.len() {
            if self.rows[r].windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            if r > 0 {
                if self.rows[r].len() > self.rows[r - 1].len() {
                    return false;
                }
                for c in 0..self.rows[r].len() {
                    if self.rows[r - 1][c] >= self.rows[r][c] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Insert `x` by row-bumping starting at the first row; returns the
    /// `(row, column)` where a new cell was created.
    fn bump(&mut self, x: T) -> (usize, usize) {
        let mut carry = x;
        for r in 0.. {
            if r == self.rows.len() {
                self.rows.push(vec![carry]);
                return (r, 0);
            }
            let row = &mut self.rows[r];
            // smallest entry strictly larger than carry
            match row.iter().position(|&e| e > carry) {
                None => {
                    row.push(carry);
                    return (r, row.len() - 1);
                }
                Some(c) => {
                    std::mem::swap(&mut row[c], &mut carry);
                }
            }
        }
        unreachable!()
    }
}

impl Tableau<usize> {
    /// Check the standard-tableau invariants for `N = size`.
    pub fn is_standard(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for row in &self.rows {
            for &e in row {
                if e < 1 || e > n || seen[e] {
                    return false;
                }
                seen[e] = true;
            }
        }
        self.rows_and_columns_strict()
    }

    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Tableau { rows };
        if t.is_standard() {
            Ok(t)
        } else {
            Err(Error::InvalidInput("not a standard Young tableau".into()))
        }
    }

    /// JSON form `{"shape":[...],"rows":[[...],...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "shape": self.shape().parts(),
            "rows": self.rows,
        })
    }
}

/// Length of the longest strictly increasing subsequence, by patience
/// sorting on pile tops with binary search.
pub fn lis_length(seq: &[f64]) -> Result<usize> {
    let mut sorted: Vec<f64> = seq.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidInput("duplicate entries in sequence".into()));
    }
    Ok(lis_length_unchecked(seq))
}

fn lis_length_unchecked(seq: &[f64]) -> usize {
    let mut tops: Vec<f64> = Vec::new();
    for &x in seq {
        match tops.partition_point(|&t| t < x) {
            p if p == tops.len() => tops.push(x),
            p => tops[p] = x,
        }
    }
    tops.len()
}

/// Robinson-Schensted: permutation to a pair of same-shape standard tableaux.
///
/// `P` is built by row-bumping the values `sigma(1), ..., sigma(N)`; `Q`
/// records the order in which cells were created.
pub fn rsk(sigma: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut p: StandardTableau = Tableau::empty();
    let mut q: StandardTableau = Tableau::empty();
    for (i, &v) in sigma.as_slice().iter().enumerate() {
        let (r, _c) = p.bump(v);
        if r == q.rows.len() {
            q.rows.push(Vec::new());
        }
        q.rows[r].push(i + 1);
    }
    (p, q)
}

/// Inverse Robinson-Schensted, by reverse row-bumping in decreasing order of
/// the `Q` entries.
pub fn rsk_inverse(p: &StandardTableau, q: &StandardTableau) -> Result<Permutation> {
    if !p.is_standard() || !q.is_standard() {
        return Err(Error::InvalidInput("tableaux must be standard".into()));
    }
    if p.shape() != q.shape() {
        return Err(Error::InvalidInput("P and Q must have the same shape".into()));
    }
    let n = p.size();
    let mut p = p.clone();
    // position of each Q entry
    let mut pos = vec![(0usize, 0usize); n + 1];
    for (r, row) in q.rows().iter().enumerate() {
        for (c, &e) in row.iter().enumerate() {
            pos[e] = (r, c);
        }
    }
    let mut sigma = vec![0usize; n];
    for i in (1..=n).rev() {
        let (r, c) = pos[i];
        let mut carry = p.rows[r].remove(c);
        if p.rows[r].is_empty() {
            p.rows.pop();
        }
        // reverse bump upward
        for rr in (0..r).rev() {
            let row = &mut p.rows[rr];
            // largest entry strictly smaller than carry
            let j = row.partition_point(|&e| e < carry) - 1;
            std::mem::swap(&mut row[j], &mut carry);
        }
        sigma[i - 1] = carry;
    }
    Permutation::new(sigma)
}

/// Robinson-Schensted on planar points: `i -> z_i`, `sigma(i) -> y_i`.
///
/// Points are processed in increasing `z`; `P` row-bumps the `y` values and
/// `Q` records the `z` value at each cell creation. Inputs must be in
/// general position (pairwise distinct in both coordinates).
pub fn rsk_real(points: &[(f64, f64)]) -> Result<(RealTableau, RealTableau)> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].1.partial_cmp(&points[b].1).unwrap());
    for w in order.windows(2) {
        if points[w[0]].1 == points[w[1]].1 {
            return Err(Error::InvalidInput("tied z coordinates".into()));
        }
    }
    let mut ys: Vec<f64> = points.iter().map(|p| p.0).collect();
    ys.sort_by(|a, b| a.partial_cmp(b).unwrap());
    if ys.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidInput("tied y coordinates".into()));
    }

    let mut p: RealTableau = Tableau::empty();
    let mut q: RealTableau = Tableau::empty();
    for &idx in &order {
        let (y, z) = points[idx];
        let (r, _c) = p.bump(y);
        if r == q.rows.len() {
            q.rows.push(Vec::new());
        }
        q.rows[r].push(z);
    }
    Ok((p, q))
}

/// The comparison permutation of a point set in general position: label
/// points by increasing `z`, then `sigma(i)` is the rank of `y_i`.
pub fn comparison_permutation(points: &[(f64, f64)]) -> Result<Permutation> {
    let n = points.len();
    let mut by_z: Vec<usize> = (0..n).collect();
    by_z.sort_by(|&a, &b| points[a].1.partial_cmp(&points[b].1).unwrap());
    let mut by_y: Vec<usize> = (0..n).collect();
    by_y.sort_by(|&a, &b| points[a].0.partial_cmp(&points[b].0).unwrap());
    let mut y_rank = vec![0usize; n];
    for (rank, &idx) in by_y.iter().enumerate() {
        y_rank[idx] = rank + 1;
    }
    Permutation::new(by_z.iter().map(|&idx| y_rank[idx]).collect())
}

const GREENE_MAX_N: usize = 10;

/// Greene invariant `a_k(sigma)` by exhaustive search: the maximal total
/// length of a union of `k` disjoint increasing subsequences.
///
/// Oracle use only; refuses `N > 10`.
pub fn greene_bruteforce(sigma: &Permutation, k: usize) -> Result<usize> {
    let n = sigma.len();
    if n > GREENE_MAX_N {
        return Err(Error::InvalidInput(format!(
            "greene oracle is bounded at N <= {GREENE_MAX_N}, got {n}"
        )));
    }
    if k == 0 {
        return Ok(0);
    }
    // Assign each position to one of k increasing chains (or drop it), keeping
    // every chain increasing; maximize the number of assigned positions.
    // State: current top value of each chain (sorted to dedup symmetric states).
    use std::collections::HashMap;
    let vals = sigma.as_slice();
    let mut memo: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
    fn go(
        i: usize,
        tops: &mut Vec<usize>,
        vals: &[usize],
        memo: &mut HashMap<(usize, Vec<usize>), usize>,
    ) -> usize {
        if i == vals.len() {
            return 0;
        }
        let mut key_tops = tops.clone();
        key_tops.sort_unstable();
        if let Some(&v) = memo.get(&(i, key_tops.clone())) {
            return v;
        }
        // skip vals[i]
        let mut best = go(i + 1, tops, vals, memo);
        // or extend some chain whose top is smaller
        for c in 0..tops.len() {
            if tops[c] < vals[i] {
                let saved = tops[c];
                tops[c] = vals[i];
                best = best.max(1 + go(i + 1, tops, vals, memo));
                tops[c] = saved;
            }
        }
        memo.insert((i, key_tops), best);
        best
    }
    let mut tops = vec![0usize; k];
    Ok(go(0, &mut tops, vals, &mut memo))
}

const COUNT_MAX_N: usize = 20;

/// Number of standard Young tableaux of shape `lambda`.
///
/// Uses the hook length formula for `N <= 20`; the formula is validated
/// against the exhaustive backtracking oracle
/// [`count_standard_tableaux_bruteforce`] in the test suite.
pub fn count_standard_tableaux(lambda: &Partition) -> Result<u64> {
    let n = lambda.size();
    if n > COUNT_MAX_N {
        return Err(Error::InvalidInput(format!(
            "tableau counting is bounded at N <= {COUNT_MAX_N}, got {n}"
        )));
    }
    // column lengths
    let cols = lambda.row(0);
    let mut col_len = vec![0usize; cols];
    for r in 0..lambda.rows() {
        for item in col_len.iter_mut().take(lambda.row(r)) {
            *item += 1;
        }
    }
    // d = N! / prod(hooks); accumulate as exact integer division along the way
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    let mut k: u128 = 0;
    for r in 0..lambda.rows() {
        for c in 0..lambda.row(r) {
            k += 1;
            num *= k;
            let hook = (lambda.row(r) - c) + (col_len[c] - r) - 1;
            den *= hook as u128;
        }
    }
    Ok((num / den) as u64)
}

/// Exhaustive backtracking count of standard fillings, for shapes with
/// `N <= 10`. Independent oracle for [`count_standard_tableaux`].
pub fn count_standard_tableaux_bruteforce(lambda: &Partition) -> Result<u64> {
    let n = lambda.size();
    if n > GREENE_MAX_N {
        return Err(Error::InvalidInput(format!(
            "bruteforce tableau counting is bounded at N <= {GREENE_MAX_N}, got {n}"
        )));
    }
    // fill 1..N in order; each value goes to some row whose next free cell is valid
    fn go(next: usize, n: usize, fill: &mut Vec<usize>, lambda: &Partition) -> u64 {
        if next > n {
            return 1;
        }
        let mut total = 0;
        for r in 0..lambda.rows() {
            if fill[r] < lambda.row(r) && (r == 0 || fill[r - 1] > fill[r]) {
                fill[r] += 1;
                total += go(next + 1, n, fill, lambda);
                fill[r] -= 1;
            }
        }
        total
    }
    let mut fill = vec![0usize; lambda.rows()];
    Ok(go(1, n, &mut fill, lambda))
}

/// All partitions of `n`, in no particular order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { lambda: prefix.clone() });
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Draw a partition of `N` from the Plancherel measure, as the RSK shape of
/// a uniform permutation.
pub fn plancherel_sample(n: usize, seed: Seed) -> Result<Partition> {
    if n == 0 {
        return Err(Error::InvalidParameter("N must be at least 1".into()));
    }
    let sigma = Permutation::random(n, seed);
    let (p, _q) = rsk(&sigma);
    Ok(p.shape())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    /// Exhaustive LIS by scanning all subsequences; oracle for small inputs.
    fn lis_bruteforce(seq: &[f64]) -> usize {
        let n = seq.len();
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let picked: Vec<f64> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| seq[i]).collect();
            if picked.windows(2).all(|w| w[0] < w[1]) {
                best = best.max(picked.len());
            }
        }
        best
    }

    fn all_permutations(n: usize) -> Vec<Permutation> {
        fn go(rest: &mut Vec<usize>, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rest.is_empty() {
                out.push(prefix.clone());
                return;
            }
            for i in 0..rest.len() {
                let v = rest.remove(i);
                prefix.push(v);
                go(rest, prefix, out);
                prefix.pop();
                rest.insert(i, v);
            }
        }
        let mut out = Vec::new();
        go(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
        out.into_iter().map(|v| Permutation::new(v).unwrap()).collect()
    }

    #[test]
    fn lis_known_values() {
        assert_eq!(lis_length(&[2.0, 3.0, 1.0, 5.0, 4.0]).unwrap(), 3);
        let id: Vec<f64> = (1..=10).map(|i| i as f64).collect();
        assert_eq!(lis_length(&id).unwrap(), 10);
        assert_eq!(lis_length(&[]).unwrap(), 0);
        assert!(lis_length(&[1.0, 1.0]).is_err());
    }

    #[test]
    fn lis_matches_bruteforce_on_s8() {
        for s in 0..200 {
            let sigma = Permutation::random(8, Seed::new(s));
            let seq: Vec<f64> = sigma.as_slice().iter().map(|&v| v as f64).collect();
            assert_eq!(lis_length(&seq).unwrap(), lis_bruteforce(&seq));
        }
    }

    #[test]
    fn rsk_table_example() {
        let (p, q) = rsk(&perm(&[2, 3, 1, 5, 4]));
        assert_eq!(p.rows(), &[vec![1, 3, 4], vec![2, 5]]);
        assert_eq!(q.rows(), &[vec![1, 2, 4], vec![3, 5]]);
    }

    #[test]
    fn rsk_three_element_example() {
        let (p, q) = rsk(&perm(&[2, 3, 1]));
        assert_eq!(p.rows(), &[vec![1, 3], vec![2]]);
        assert_eq!(q.rows(), &[vec![1, 2], vec![3]]);
    }

    #[test]
    fn rsk_identity_is_single_row() {
        let (p, q) = rsk(&Permutation::identity(6));
        assert_eq!(p.rows(), &[vec![1, 2, 3, 4, 5, 6]]);
        assert_eq!(q.rows(), &[vec![1, 2, 3, 4, 5, 6]]);
    }

    #[test]
    fn rsk_inverse_table_example() {
        let p = Tableau::from_rows(vec![vec![1, 3, 4], vec![2, 5]]).unwrap();
        let q = Tableau::from_rows(vec![vec![1, 2, 4], vec![3, 5]]).unwrap();
        assert_eq!(rsk_inverse(&p, &q).unwrap(), perm(&[2, 3, 1, 5, 4]));
    }

    #[test]
    fn rsk_inverse_single_row_is_identity() {
        let p = Tableau::from_rows(vec![vec![1, 2, 3, 4]]).unwrap();
        assert_eq!(rsk_inverse(&p, &p).unwrap(), Permutation::identity(4));
    }

    #[test]
    fn rsk_inverse_rejects_bad_input() {
        let p = Tableau::from_rows(vec![vec![1, 3], vec![2]]).unwrap();
        let q = Tableau::from_rows(vec![vec![1, 2, 3]]).unwrap();
        assert!(rsk_inverse(&p, &q).is_err());
        let not_standard = Tableau { rows: vec![vec![3, 1], vec![2]] };
        assert!(rsk_inverse(&not_standard, &not_standard).is_err());
    }

    #[test]
    fn rsk_bijection_exhaustive_s5() {
        for sigma in all_permutations(5) {
            let (p, q) = rsk(&sigma);
            assert_eq!(p.shape(), q.shape());
            assert!(p.is_standard() && q.is_standard());
            assert_eq!(rsk_inverse(&p, &q).unwrap(), sigma);
        }
    }

    #[test]
    fn rsk_bijection_random_s50() {
        for s in 0..200 {
            let sigma = Permutation::random(50, Seed::new(s));
            let (p, q) = rsk(&sigma);
            assert_eq!(rsk_inverse(&p, &q).unwrap(), sigma);
        }
    }

    #[test]
    fn first_row_equals_lis() {
        for s in 0..100 {
            let sigma = Permutation::random(50, Seed::new(s));
            let seq: Vec<f64> = sigma.as_slice().iter().map(|&v| v as f64).collect();
            let (p, _) = rsk(&sigma);
            assert_eq!(p.shape().row(0), lis_length(&seq).unwrap());
        }
    }

    #[test]
    fn rsk_real_matches_comparison_permutation() {
        use crate::pointfield::{sample_poisson, Region};
        for s in 0..50 {
            let f = sample_poisson(Region::Rectangle { a: 4.0, b: 4.0 }, 1.0, Seed::new(s)).unwrap();
            let (p, q) = rsk_real(&f.points).unwrap();
            assert_eq!(p.shape(), q.shape());
            let sigma = comparison_permutation(&f.points).unwrap();
            let (pi, _) = rsk(&sigma);
            assert_eq!(p.shape(), pi.shape());
        }
    }

    #[test]
    fn rsk_real_edge_cases() {
        let (p, q) = rsk_real(&[]).unwrap();
        assert_eq!(p.size(), 0);
        assert_eq!(q.size(), 0);
        let (p, q) = rsk_real(&[(1.5, 2.5)]).unwrap();
        assert_eq!(p.rows(), &[vec![1.5]]);
        assert_eq!(q.rows(), &[vec![2.5]]);
        assert!(rsk_real(&[(1.0, 2.0), (1.0, 3.0)]).is_err());
    }

    #[test]
    fn greene_matches_table_example() {
        let sigma = perm(&[2, 3, 1, 5, 4]);
        assert_eq!(greene_bruteforce(&sigma, 1).unwrap(), 3);
        assert_eq!(greene_bruteforce(&sigma, 2).unwrap(), 5);
        assert_eq!(greene_bruteforce(&sigma, 3).unwrap(), 5);
    }

    #[test]
    fn greene_identity_on_s6() {
        for sigma in all_permutations(6) {
            let (p, _) = rsk(&sigma);
            let shape = p.shape();
            // a_1 = LIS
            let seq: Vec<f64> = sigma.as_slice().iter().map(|&v| v as f64).collect();
            assert_eq!(greene_bruteforce(&sigma, 1).unwrap(), lis_length(&seq).unwrap());
            // a_k = N once k covers all rows
            assert_eq!(greene_bruteforce(&sigma, shape.rows()).unwrap(), 6);
        }
    }

    #[test]
    fn greene_refuses_large_n() {
        assert!(greene_bruteforce(&Permutation::identity(11), 1).is_err());
    }

    #[test]
    fn tableau_counts() {
        assert_eq!(count_standard_tableaux(&Partition::new(vec![7]).unwrap()).unwrap(), 1);
        assert_eq!(count_standard_tableaux(&Partition::new(vec![2, 1]).unwrap()).unwrap(), 2);
        assert_eq!(
            count_standard_tableaux_bruteforce(&Partition::new(vec![2, 1]).unwrap()).unwrap(),
            2
        );
        assert!(count_standard_tableaux(&Partition::new(vec![21]).unwrap()).is_err());
    }

    #[test]
    fn hook_formula_matches_backtracking_oracle() {
        for n in 1..=9 {
            for lambda in partitions_of(n) {
                assert_eq!(
                    count_standard_tableaux(&lambda).unwrap(),
                    count_standard_tableaux_bruteforce(&lambda).unwrap(),
                    "shape {lambda:?}"
                );
            }
        }
    }

    #[test]
    fn plancherel_normalization() {
        // sum of d_lambda^2 over partitions of n equals n!
        for n in 1..=6 {
            let total: u64 = partitions_of(n)
                .iter()
                .map(|l| {
                    let d = count_standard_tableaux(l).unwrap();
                    d * d
                })
                .sum();
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn plancherel_small_n() {
        assert_eq!(plancherel_sample(1, Seed::new(0)).unwrap().parts(), &[1]);
        // N=2: shapes (2) and (1,1) each with probability 1/2
        let n_draws = 10_000;
        let mut flat = 0;
        for s in 0..n_draws {
            let shape = plancherel_sample(2, Seed::new(s)).unwrap();
            if shape.parts() == [2] {
                flat += 1;
            }
        }
        let freq = flat as f64 / n_draws as f64;
        let sigma3 = 3.0 * (0.25f64 / n_draws as f64).sqrt();
        assert!((freq - 0.5).abs() < sigma3, "freq {freq}");
    }

    #[test]
    fn tableau_json_shape() {
        let (p, _) = rsk(&perm(&[2, 3, 1]));
        let v = p.to_json();
        assert_eq!(v["shape"], serde_json::json!([2, 1]));
        assert_eq!(v["rows"], serde_json::json!([[1, 3], [2]]));
    }
}
