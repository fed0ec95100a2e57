//! Linear codes over GF(q): enumeration, weight distributions, the inverse
//! weight transform, minimum and external distance, duals and extension.
//!
//! Weight counts are big integers because a code of dimension k has q^k
//! words even when only its q^{n-k} dual words are ever enumerated.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{weight, Matrix};
use crate::util::{binomial, pow_u128};

/// A linear [n, k] code presented by a parity check matrix.
///
/// The stored parity matrix is kept exactly as given (it may be rank
/// deficient); `parity_basis` is the canonical row basis actually used for
/// syndromes, and the generator spans the null space of the parity matrix.
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Arc<Field>,
    n: usize,
    k: usize,
    generator: Matrix,
    parity: Matrix,
    parity_basis: Matrix,
}

impl LinearCode {
    /// The code {v : H v^T = 0}. Fails with `EmptyCode` when H has full
    /// column rank.
    pub fn from_parity(h: Matrix) -> Result<LinearCode> {
        let n = h.cols();
        let parity_basis = h.row_basis();
        let rank = parity_basis.rows();
        if rank == n {
            return Err(Error::EmptyCode);
        }
        let generator = h.null_space();
        debug_assert_eq!(generator.rows(), n - rank);
        Ok(LinearCode {
            field: h.field().clone(),
            n,
            k: n - rank,
            generator,
            parity: h,
            parity_basis,
        })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn q(&self) -> u16 {
        self.field.q()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Redundancy n - k: the dimension of the syndrome space.
    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    /// The parity check matrix exactly as the code was built.
    pub fn parity(&self) -> &Matrix {
        &self.parity
    }

    /// Canonical full-rank row basis of the parity matrix.
    pub fn parity_basis(&self) -> &Matrix {
        &self.parity_basis
    }

    /// The dual code: generated by the parity rows, checked by the
    /// generator.
    pub fn dual(&self) -> LinearCode {
        LinearCode {
            field: self.field.clone(),
            n: self.n,
            k: self.n - self.k,
            generator: self.parity_basis.clone(),
            parity: self.generator.clone(),
            parity_basis: self.generator.row_basis(),
        }
    }

    /// Appends an overall parity coordinate: each word gains one entry
    /// making its coordinate sum zero. Length grows by one, dimension is
    /// unchanged.
    pub fn extend(&self) -> LinearCode {
        let f = &self.field;
        let ext_rows: Vec<Vec<u8>> = self
            .generator
            .iter_rows()
            .map(|row| {
                let mut out = row.to_vec();
                let sum = row.iter().fold(0u8, |acc, &e| f.add(acc, e));
                out.push(f.neg(sum));
                out
            })
            .collect();
        let generator = Matrix::from_rows(f.clone(), &ext_rows).expect("rows share a length");
        let parity_rows: Vec<Vec<u8>> = self
            .parity
            .iter_rows()
            .map(|row| {
                let mut out = row.to_vec();
                out.push(0);
                out
            })
            .chain(std::iter::once(vec![1u8; self.n + 1]))
            .collect();
        let parity = Matrix::from_rows(f.clone(), &parity_rows).expect("rows share a length");
        let parity_basis = parity.row_basis();
        debug_assert_eq!(parity_basis.rows(), self.n + 1 - self.k);
        LinearCode {
            field: self.field.clone(),
            n: self.n + 1,
            k: self.k,
            generator,
            parity,
            parity_basis,
        }
    }

    /// Number of codewords as an exact integer.
    pub fn size(&self) -> BigUint {
        BigUint::from(self.q()).pow(self.k as u32)
    }

    /// Visits every codeword once, in message order.
    pub fn for_each_codeword<F: FnMut(&[u8])>(&self, mut f: F) {
        let mut acc = vec![0u8; self.n];
        self.walk(0, &mut acc, &mut f);
    }

    fn walk<F: FnMut(&[u8])>(&self, level: usize, acc: &mut Vec<u8>, f: &mut F) {
        if level == self.k {
            f(acc);
            return;
        }
        let field = &self.field;
        let q = field.q();
        self.walk(level + 1, acc, f);
        for t in 1..q {
            // Move this row's coefficient from t-1 to t. Stepping by the
            // field difference (not by repeated addition) keeps the walk
            // correct over prime-power fields, where adding a row q times
            // does not return to zero.
            let delta = field.sub(t as u8, (t - 1) as u8);
            let row = self.generator.row(level);
            for (a, &r) in acc.iter_mut().zip(row) {
                *a = field.add(*a, field.mul(delta, r));
            }
            // borrow of self.generator ends before the recursive call
            self.walk(level + 1, acc, f);
        }
        let delta = field.neg((q - 1) as u8);
        let row = self.generator.row(level);
        for (a, &r) in acc.iter_mut().zip(row) {
            *a = field.add(*a, field.mul(delta, r));
        }
    }

    /// Weight distribution by direct enumeration of the q^k codewords.
    /// `TooLarge` means: enumerate the dual and transform instead.
    pub fn weight_distribution(&self, budget: &Budget) -> Result<WeightDistribution> {
        budget.check_words(pow_u128(self.q(), self.k))?;
        let mut counts = vec![0u64; self.n + 1];
        self.for_each_codeword(|w| counts[weight(w)] += 1);
        Ok(WeightDistribution::from_u64(&counts))
    }

    /// Weight distribution via whichever side is enumerable: the code
    /// itself, or the dual followed by the inverse transform.
    pub fn full_weight_distribution(&self, budget: &Budget) -> Result<WeightDistribution> {
        if budget.check_words(pow_u128(self.q(), self.k)).is_ok() {
            return self.weight_distribution(budget);
        }
        let dual_dist = self.dual().weight_distribution(budget)?;
        macwilliams(&dual_dist, self.n, self.n - self.k, self.q())
    }

    /// Weight distribution of the dual code.
    pub fn dual_weight_distribution(&self, budget: &Budget) -> Result<WeightDistribution> {
        if budget.check_words(pow_u128(self.q(), self.n - self.k)).is_ok() {
            return self.dual().weight_distribution(budget);
        }
        let own = self.weight_distribution(budget)?;
        macwilliams(&own, self.n, self.k, self.q())
    }

    /// Minimum distance: by enumeration when q^k fits the budget, otherwise
    /// by searching for a dependent set of at most 5 parity columns.
    pub fn min_distance(&self, budget: &Budget) -> Result<usize> {
        if budget.check_words(pow_u128(self.q(), self.k)).is_ok() {
            let mut min = usize::MAX;
            self.for_each_codeword(|w| {
                let wt = weight(w);
                if wt > 0 && wt < min {
                    min = wt;
                }
            });
            return Ok(min);
        }
        self.min_distance_by_columns()
            .ok_or(Error::TooLarge {
                required: pow_u128(self.q(), self.k),
                budget: budget.words,
            })
    }

    /// Smallest dependent column set of the parity basis, sizes 1..=5.
    fn min_distance_by_columns(&self) -> Option<usize> {
        let f = &self.field;
        let cols: Vec<Vec<u8>> = (0..self.n).map(|j| self.parity_basis.column(j)).collect();
        if cols.iter().any(|c| c.iter().all(|&e| e == 0)) {
            return Some(1);
        }
        // d = 2: two projectively equal columns
        let mut singles: HashMap<Vec<u8>, Vec<usize>> = HashMap::new();
        for (j, col) in cols.iter().enumerate() {
            let key = normalize(f, col);
            let entry = singles.entry(key).or_default();
            if !entry.is_empty() {
                return Some(2);
            }
            entry.push(j);
        }
        // d = 3: col_i + b col_j proportional to a third column
        let q = self.q();
        for i in 0..self.n {
            for j in i + 1..self.n {
                for b in 1..q as u8 {
                    let s = add_scaled(f, &cols[i], &cols[j], b);
                    if let Some(hits) = singles.get(&normalize(f, &s)) {
                        if hits.iter().any(|&h| h != i && h != j) {
                            return Some(3);
                        }
                    }
                }
            }
        }
        // d = 4: left pair (coefficient 1 on the first column) against all
        // scaled right pairs
        let mut pairs: HashMap<Vec<u8>, Vec<(usize, usize)>> = HashMap::new();
        for kx in 0..self.n {
            for l in kx + 1..self.n {
                for c in 1..q as u8 {
                    for d in 1..q as u8 {
                        let mut s = scale(f, &cols[kx], c);
                        for (t, &e) in s.iter_mut().zip(&cols[l]) {
                            *t = f.add(*t, f.mul(d, e));
                        }
                        pairs.entry(s).or_default().push((kx, l));
                    }
                }
            }
        }
        for i in 0..self.n {
            for j in i + 1..self.n {
                for b in 1..q as u8 {
                    let s = add_scaled(f, &cols[i], &cols[j], b);
                    let target: Vec<u8> = s.iter().map(|&e| f.neg(e)).collect();
                    if let Some(hits) = pairs.get(&target) {
                        if hits
                            .iter()
                            .any(|&(kx, l)| kx != i && kx != j && l != i && l != j)
                        {
                            return Some(4);
                        }
                    }
                }
            }
        }
        // d = 5: triple (coefficient 1 on the first column) against all
        // scaled right pairs
        for i in 0..self.n {
            for j in i + 1..self.n {
                for mm in j + 1..self.n {
                    for b in 1..q as u8 {
                        for c in 1..q as u8 {
                            let mut s = add_scaled(f, &cols[i], &cols[j], b);
                            for (t, &x) in s.iter_mut().zip(&cols[mm]) {
                                *t = f.add(*t, f.mul(c, x));
                            }
                            let target: Vec<u8> = s.iter().map(|&x| f.neg(x)).collect();
                            if let Some(hits) = pairs.get(&target) {
                                if hits.iter().any(|&(kx, l)| {
                                    kx != i && kx != j && kx != mm && l != i && l != j && l != mm
                                }) {
                                    return Some(5);
                                }
                            }
                        }
                    }
                }
            }
        }
        None
    }

    /// External distance: the number of distinct nonzero dual weights.
    pub fn external_distance(&self, budget: &Budget) -> Result<usize> {
        let dual = self.dual_weight_distribution(budget)?;
        Ok(dual.support().len())
    }

    /// Packing radius e = floor((d - 1) / 2).
    pub fn packing_radius(&self, budget: &Budget) -> Result<usize> {
        Ok((self.min_distance(budget)? - 1) / 2)
    }

    /// All codewords of the given weight. Uses direct enumeration when the
    /// code is small, otherwise reconstructs the words from dependent
    /// parity column sets (supported for w <= 4).
    pub fn codewords_of_weight(&self, w: usize, budget: &Budget) -> Result<Vec<Vec<u8>>> {
        if budget.check_words(pow_u128(self.q(), self.k)).is_ok() {
            let mut out = Vec::new();
            self.for_each_codeword(|word| {
                if weight(word) == w {
                    out.push(word.to_vec());
                }
            });
            out.sort();
            return Ok(out);
        }
        if w > 4 {
            return Err(Error::TooLarge {
                required: pow_u128(self.q(), self.k),
                budget: budget.words,
            });
        }
        let mut set = std::collections::BTreeSet::new();
        for word in self.low_weight_words(w) {
            // include every scalar multiple: each is a distinct codeword
            for b in 1..self.q() as u8 {
                let scaled: Vec<u8> = word.iter().map(|&e| self.field.mul(b, e)).collect();
                set.insert(scaled);
            }
        }
        Ok(set.into_iter().collect())
    }

    /// Weight-w codewords, one representative per scalar class, via
    /// meet-in-the-middle over parity basis columns. w <= 4.
    fn low_weight_words(&self, w: usize) -> Vec<Vec<u8>> {
        let f = &self.field;
        let q = self.q();
        let cols: Vec<Vec<u8>> = (0..self.n).map(|j| self.parity_basis.column(j)).collect();
        let mut found = Vec::new();
        match w {
            0 => {}
            1 => {
                for (j, col) in cols.iter().enumerate() {
                    if col.iter().all(|&e| e == 0) {
                        let mut word = vec![0u8; self.n];
                        word[j] = 1;
                        found.push(word);
                    }
                }
            }
            2 => {
                for i in 0..self.n {
                    for j in i + 1..self.n {
                        for b in 1..q as u8 {
                            let s = add_scaled(f, &cols[i], &cols[j], b);
                            if s.iter().all(|&e| e == 0) {
                                let mut word = vec![0u8; self.n];
                                word[i] = 1;
                                word[j] = b;
                                found.push(word);
                            }
                        }
                    }
                }
            }
            3 => {
                for i in 0..self.n {
                    for j in i + 1..self.n {
                        for b in 1..q as u8 {
                            let s = add_scaled(f, &cols[i], &cols[j], b);
                            if s.iter().all(|&e| e == 0) {
                                continue;
                            }
                            for kx in j + 1..self.n {
                                for c in 1..q as u8 {
                                    let t = add_scaled(f, &s, &cols[kx], c);
                                    if t.iter().all(|&e| e == 0) {
                                        let mut word = vec![0u8; self.n];
                                        word[i] = 1;
                                        word[j] = b;
                                        word[kx] = c;
                                        found.push(word);
                                    }
                                }
                            }
                        }
                    }
                }
            }
            4 => {
                let mut right: HashMap<Vec<u8>, Vec<(usize, usize, u8, u8)>> = HashMap::new();
                for kx in 0..self.n {
                    for l in kx + 1..self.n {
                        for c in 1..q as u8 {
                            for d in 1..q as u8 {
                                let mut s = scale(f, &cols[kx], c);
                                for (t, &e) in s.iter_mut().zip(&cols[l]) {
                                    *t = f.add(*t, f.mul(d, e));
                                }
                                right.entry(s).or_default().push((kx, l, c, d));
                            }
                        }
                    }
                }
                for i in 0..self.n {
                    for j in i + 1..self.n {
                        for b in 1..q as u8 {
                            let s = add_scaled(f, &cols[i], &cols[j], b);
                            let target: Vec<u8> = s.iter().map(|&e| f.neg(e)).collect();
                            let Some(hits) = right.get(&target) else {
                                continue;
                            };
                            for &(kx, l, c, d) in hits {
                                if kx > j && l > j && kx != i && l != i {
                                    let mut word = vec![0u8; self.n];
                                    word[i] = 1;
                                    word[j] = b;
                                    word[kx] = c;
                                    word[l] = d;
                                    found.push(word);
                                }
                            }
                        }
                    }
                }
            }
            _ => unreachable!("low_weight_words only handles w <= 4"),
        }
        found
    }
}

fn normalize(f: &Field, v: &[u8]) -> Vec<u8> {
    match v.iter().find(|&&e| e != 0) {
        None => v.to_vec(),
        Some(&lead) => {
            let inv = f.inv(lead).expect("lead is nonzero");
            v.iter().map(|&e| f.mul(inv, e)).collect()
        }
    }
}

fn scale(f: &Field, v: &[u8], by: u8) -> Vec<u8> {
    v.iter().map(|&e| f.mul(by, e)).collect()
}

fn add_scaled(f: &Field, a: &[u8], b: &[u8], by: u8) -> Vec<u8> {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| f.add(x, f.mul(by, y)))
        .collect()
}

/// Exact weight distribution A_0..A_n of a code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    counts: Vec<BigUint>,
}

impl WeightDistribution {
    pub fn from_counts(counts: Vec<BigUint>) -> WeightDistribution {
        WeightDistribution { counts }
    }

    pub fn from_u64(counts: &[u64]) -> WeightDistribution {
        WeightDistribution {
            counts: counts.iter().map(|&c| BigUint::from(c)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn count(&self, w: usize) -> &BigUint {
        &self.counts[w]
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// Count at weight w as u64 when it fits.
    pub fn count_u64(&self, w: usize) -> Option<u64> {
        u64::try_from(self.counts[w].clone()).ok()
    }

    /// Nonzero weights with a nonzero count, ascending.
    pub fn support(&self) -> Vec<usize> {
        (1..self.counts.len())
            .filter(|&w| !self.counts[w].is_zero())
            .collect()
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    pub fn min_nonzero_weight(&self) -> Option<usize> {
        self.support().first().copied()
    }

    /// (weight, count) pairs over the support.
    pub fn spectrum(&self) -> Vec<(usize, BigUint)> {
        self.support()
            .into_iter()
            .map(|w| (w, self.counts[w].clone()))
            .collect()
    }
}

/// Weight distribution of the dual code from the distribution of a code of
/// length n and dimension k over GF(q):
///
///   A'_j = q^{-k} * sum_i A_i K_j(i),
///   K_j(i) = sum_s (-1)^s (q-1)^{j-s} C(i, s) C(n-i, j-s).
///
/// Fails with `NonIntegerOutput` when the input is not the weight
/// distribution of any [n, k] code.
pub fn macwilliams(
    w: &WeightDistribution,
    n: usize,
    k: usize,
    q: u16,
) -> Result<WeightDistribution> {
    assert_eq!(w.len(), n + 1, "distribution length must be n + 1");
    let qk = BigInt::from(q).pow(k as u32);
    let mut pow_qm1 = Vec::with_capacity(n + 1);
    pow_qm1.push(BigInt::one());
    for _ in 0..n {
        pow_qm1.push(pow_qm1.last().unwrap() * BigInt::from(q - 1));
    }
    let binom: Vec<Vec<BigInt>> = (0..=n)
        .map(|a| {
            (0..=n)
                .map(|b| BigInt::from_biguint(Sign::Plus, binomial(a, b)))
                .collect()
        })
        .collect();
    let counts_signed: Vec<BigInt> = w
        .counts()
        .iter()
        .map(|c| BigInt::from_biguint(Sign::Plus, c.clone()))
        .collect();
    let mut out = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut acc = BigInt::zero();
        for (i, a_i) in counts_signed.iter().enumerate() {
            if a_i.is_zero() {
                continue;
            }
            let mut kraw = BigInt::zero();
            for s in 0..=j.min(i) {
                if j - s > n - i {
                    continue;
                }
                let term = &pow_qm1[j - s] * &binom[i][s] * &binom[n - i][j - s];
                if s % 2 == 0 {
                    kraw += term;
                } else {
                    kraw -= term;
                }
            }
            acc += a_i * kraw;
        }
        if acc.is_negative() || (&acc % &qk) != BigInt::zero() {
            return Err(Error::NonIntegerOutput(j));
        }
        out.push((acc / &qk).to_biguint().unwrap());
    }
    Ok(WeightDistribution::from_counts(out))
}

/// On-disk JSON form of a code: field, parameters, parity matrix, and the
/// construction it came from.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CodeDocument {
    pub p: u16,
    pub m: u32,
    pub n: usize,
    pub k: usize,
    #[serde(rename = "H")]
    pub parity: Vec<Vec<u8>>,
    pub family: String,
    pub params: serde_json::Value,
}

impl CodeDocument {
    pub fn from_code(code: &LinearCode, family: &str, params: serde_json::Value) -> CodeDocument {
        CodeDocument {
            p: code.field().p(),
            m: code.field().m(),
            n: code.n(),
            k: code.k(),
            parity: code.parity.iter_rows().map(|r| r.to_vec()).collect(),
            family: family.to_string(),
            params,
        }
    }

    /// Rebuilds the code and cross-checks the stated parameters.
    pub fn build(&self) -> Result<LinearCode> {
        let field = Field::new(self.p, self.m)?;
        let h = Matrix::from_rows(field, &self.parity)?;
        let code = LinearCode::from_parity(h)?;
        if code.n() != self.n {
            return Err(Error::DocumentMismatch {
                field: "n",
                stated: self.n,
                computed: code.n(),
            });
        }
        if code.k() != self.k {
            return Err(Error::DocumentMismatch {
                field: "k",
                stated: self.k,
                computed: code.k(),
            });
        }
        Ok(code)
    }
}
