//! Exhaustive coset analysis: covering radius, complete regularity,
//! intersection arrays, and uniformly-packed parameters.
//!
//! Two independent routes produce the same report. The fast route works in
//! the syndrome space GF(q)^{n-k}: every coset is one syndrome, the
//! distance from a vector to the code equals the graph distance of its
//! syndrome from zero (stepping by nonzero multiples of parity columns),
//! and the neighbor profile of a vector depends only on its syndrome. The
//! slow route enumerates all q^n vectors, runs a multi-source breadth
//! first search from the codewords themselves, and checks on the way that
//! distances and profiles really are constant on each coset. Agreement of
//! the two reports is itself a correctness check used by the tests.

use serde_json::json;
use std::fmt;

use crate::budget::Budget;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::util::pow_u128;

/// Syndrome of a vector: H v^T over the given parity matrix.
pub fn syndrome(h: &Matrix, v: &[u8]) -> Result<Vec<u8>> {
    h.mul_vec(v)
}

/// Per-coset distance data for a code, indexed by syndrome.
///
/// Syndrome digits s_0..s_{r-1} (one per parity basis row) are packed into
/// the index sum(s_i q^i).
#[derive(Clone, Debug)]
pub struct CosetAnalysis {
    q: u16,
    n: usize,
    redundancy: usize,
    leader_weights: Vec<u8>,
    coset_counts: Vec<u64>,
}

impl CosetAnalysis {
    /// Covering radius: the largest coset leader weight.
    pub fn covering_radius(&self) -> usize {
        self.coset_counts.len() - 1
    }

    /// Leader weight of each coset, indexed by syndrome.
    pub fn leader_weights(&self) -> &[u8] {
        &self.leader_weights
    }

    /// Number of cosets of each leader weight, 0..=covering_radius.
    pub fn coset_counts(&self) -> &[u64] {
        &self.coset_counts
    }

    pub fn num_syndromes(&self) -> u64 {
        self.leader_weights.len() as u64
    }

    pub fn redundancy(&self) -> usize {
        self.redundancy
    }

    /// Alphabet size of the analyzed code.
    pub fn q(&self) -> u16 {
        self.q
    }

    /// Length of the analyzed code.
    pub fn n(&self) -> usize {
        self.n
    }

    fn counts_from_weights(leader_weights: &[u8]) -> Vec<u64> {
        let rho = *leader_weights.iter().max().expect("at least one coset") as usize;
        let mut counts = vec![0u64; rho + 1];
        for &w in leader_weights {
            counts[w as usize] += 1;
        }
        counts
    }
}

/// Intersection numbers of a completely regular code: for a vector at
/// distance l from the code, c_l neighbors are closer, b_l are farther,
/// and a_l = degree - b_l - c_l stay at distance l.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionArray {
    /// Graph degree (q - 1) n.
    pub degree: u64,
    /// b_0..b_{rho-1}.
    pub b: Vec<u64>,
    /// c_1..c_rho.
    pub c: Vec<u64>,
}

impl IntersectionArray {
    pub fn rho(&self) -> usize {
        self.b.len()
    }

    /// b_l, defined for l = 0..rho (b_rho = 0).
    pub fn b_at(&self, l: usize) -> u64 {
        if l < self.b.len() {
            self.b[l]
        } else {
            0
        }
    }

    /// c_l, defined for l = 0..=rho (c_0 = 0).
    pub fn c_at(&self, l: usize) -> u64 {
        if l == 0 {
            0
        } else {
            self.c[l - 1]
        }
    }

    /// a_l = degree - b_l - c_l.
    pub fn a_at(&self, l: usize) -> u64 {
        self.degree - self.b_at(l) - self.c_at(l)
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[u64]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

/// Outcome of a complete-regularity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrReport {
    pub is_cr: bool,
    /// Covering radius.
    pub rho: usize,
    /// Present exactly when the code is completely regular.
    pub ia: Option<IntersectionArray>,
    /// Cosets per leader weight, 0..=rho.
    pub coset_counts: Vec<u64>,
    /// When not completely regular: syndrome indices of the first profile
    /// clash, as (first coset of that leader weight, conflicting coset).
    pub witness: Option<(u64, u64)>,
}

impl CrReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "is_cr": self.is_cr,
            "rho": self.rho,
            "b": self.ia.as_ref().map(|ia| ia.b.clone()),
            "c": self.ia.as_ref().map(|ia| ia.c.clone()),
            "coset_counts": self.coset_counts,
            "witness": self.witness.map(|(a, b)| vec![a, b]),
        })
    }
}

fn index_to_digits(mut idx: u64, q: u64, out: &mut [u8]) {
    for d in out.iter_mut() {
        *d = (idx % q) as u8;
        idx /= q;
    }
    debug_assert_eq!(idx, 0);
}

fn digits_to_index(digits: &[u8], q: u64) -> u64 {
    digits
        .iter()
        .rev()
        .fold(0u64, |acc, &d| acc * q + u64::from(d))
}

/// Leader weight of every syndrome, by breadth first search from syndrome
/// zero stepping by nonzero multiples of parity basis columns.
pub fn analyze_cosets(code: &LinearCode, budget: &Budget) -> Result<CosetAnalysis> {
    let q = code.q();
    let r = code.redundancy();
    budget.check_syndromes(pow_u128(q, r))?;
    let num = (q as u64).pow(r as u32);
    let field = code.field().clone();
    let h = code.parity_basis();

    // syndrome deltas for adding b e_j, packed as indices
    let xor_path = field.p() == 2;
    let mut deltas: Vec<Vec<u8>> = Vec::with_capacity(code.n() * (q as usize - 1));
    let mut delta_indices: Vec<u64> = Vec::new();
    for j in 0..code.n() {
        let col = h.column(j);
        for b in 1..q as u8 {
            let scaled: Vec<u8> = col.iter().map(|&e| field.mul(b, e)).collect();
            if xor_path {
                delta_indices.push(digits_to_index(&scaled, q as u64));
            }
            deltas.push(scaled);
        }
    }

    let mut lw = vec![u8::MAX; num as usize];
    lw[0] = 0;
    let mut frontier = vec![0u64];
    let mut digits = vec![0u8; r];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &s in &frontier {
            let reach = lw[s as usize] + 1;
            if !xor_path {
                index_to_digits(s, q as u64, &mut digits);
            }
            for (di, delta) in deltas.iter().enumerate() {
                let t = if xor_path {
                    s ^ delta_indices[di]
                } else {
                    let sum: Vec<u8> = digits
                        .iter()
                        .zip(delta)
                        .map(|(&a, &b)| field.add(a, b))
                        .collect();
                    digits_to_index(&sum, q as u64)
                };
                if lw[t as usize] == u8::MAX {
                    lw[t as usize] = reach;
                    next.push(t);
                }
            }
        }
        frontier = next;
    }
    assert!(
        lw.iter().all(|&w| w != u8::MAX),
        "parity basis columns must span the syndrome space"
    );

    let coset_counts = CosetAnalysis::counts_from_weights(&lw);
    Ok(CosetAnalysis {
        q,
        n: code.n(),
        redundancy: r,
        leader_weights: lw,
        coset_counts,
    })
}

/// Builds the report shared by both verification routes from per-coset
/// leader weights and neighbor profiles (c, a, b), both indexed by
/// syndrome. The witness rule is fixed: scan syndromes in ascending index
/// order, remember the first profile seen for each leader weight, and
/// report the first clash.
fn assemble_report(q: u16, n: usize, lw: &[u8], profiles: &[(u64, u64, u64)]) -> CrReport {
    let coset_counts = CosetAnalysis::counts_from_weights(lw);
    let rho = coset_counts.len() - 1;
    let mut class: Vec<Option<((u64, u64, u64), u64)>> = vec![None; rho + 1];
    let mut witness = None;
    'scan: for (s, &p) in profiles.iter().enumerate() {
        let l = lw[s] as usize;
        match class[l] {
            None => class[l] = Some((p, s as u64)),
            Some((first, first_idx)) => {
                if first != p {
                    witness = Some((first_idx, s as u64));
                    break 'scan;
                }
            }
        }
    }
    let is_cr = witness.is_none();
    let ia = if is_cr {
        let degree = (q as u64 - 1) * n as u64;
        let b: Vec<u64> = (0..rho)
            .map(|l| class[l].expect("every leader weight occurs").0 .2)
            .collect();
        let c: Vec<u64> = (1..=rho)
            .map(|l| class[l].expect("every leader weight occurs").0 .0)
            .collect();
        debug_assert_eq!(class[0].unwrap().0 .0, 0);
        debug_assert_eq!(class[rho].unwrap().0 .2, 0);
        Some(IntersectionArray { degree, b, c })
    } else {
        None
    };
    CrReport {
        is_cr,
        rho,
        ia,
        coset_counts,
        witness,
    }
}

/// Decides complete regularity by working entirely in the syndrome space.
///
/// The neighbor profile of a vector x (how many of its (q-1)n Hamming
/// neighbors lie closer to / as far from / farther from the code) is a
/// function of the syndrome of x alone, so the code is completely regular
/// exactly when cosets of equal leader weight have equal profiles.
pub fn verify_completely_regular(code: &LinearCode, budget: &Budget) -> Result<CrReport> {
    let analysis = analyze_cosets(code, budget)?;
    let q = code.q();
    let r = analysis.redundancy;
    let field = code.field().clone();
    let h = code.parity_basis();
    let lw = &analysis.leader_weights;

    let xor_path = field.p() == 2;
    let mut deltas: Vec<Vec<u8>> = Vec::new();
    let mut delta_indices: Vec<u64> = Vec::new();
    for j in 0..code.n() {
        let col = h.column(j);
        for b in 1..q as u8 {
            let scaled: Vec<u8> = col.iter().map(|&e| field.mul(b, e)).collect();
            if xor_path {
                delta_indices.push(digits_to_index(&scaled, q as u64));
            }
            deltas.push(scaled);
        }
    }

    let mut profiles = vec![(0u64, 0u64, 0u64); lw.len()];
    let mut digits = vec![0u8; r];
    for s in 0..lw.len() as u64 {
        let here = lw[s as usize];
        if !xor_path {
            index_to_digits(s, q as u64, &mut digits);
        }
        let mut profile = (0u64, 0u64, 0u64);
        for (di, delta) in deltas.iter().enumerate() {
            let t = if xor_path {
                s ^ delta_indices[di]
            } else {
                let sum: Vec<u8> = digits
                    .iter()
                    .zip(delta)
                    .map(|(&a, &b)| field.add(a, b))
                    .collect();
                digits_to_index(&sum, q as u64)
            };
            let there = lw[t as usize];
            match there.cmp(&here) {
                std::cmp::Ordering::Less => profile.0 += 1,
                std::cmp::Ordering::Equal => profile.1 += 1,
                std::cmp::Ordering::Greater => profile.2 += 1,
            }
        }
        profiles[s as usize] = profile;
    }
    Ok(assemble_report(q, code.n(), lw, &profiles))
}

/// Decides complete regularity by brute force over all q^n vectors.
///
/// Distances come from a multi-source breadth first search started at all
/// codewords in the Hamming graph on GF(q)^n; profiles are computed per
/// vector and checked to be constant on every coset before the per-coset
/// report is assembled. Requires q^n within the vector budget.
pub fn verify_cr_bruteforce(code: &LinearCode, budget: &Budget) -> Result<CrReport> {
    let q = code.q() as u64;
    let n = code.n();
    budget.check_vectors(pow_u128(code.q(), n))?;
    let total = q.pow(n as u32) as usize;
    let field = code.field().clone();
    let pow_q: Vec<u64> = (0..n).map(|i| q.pow(i as u32)).collect();

    // multi-source BFS from the codewords
    let mut dist = vec![u8::MAX; total];
    let mut frontier = Vec::new();
    code.for_each_codeword(|w| {
        let idx = digits_to_index(w, q);
        dist[idx as usize] = 0;
        frontier.push(idx);
    });
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &v in &frontier {
            let reach = dist[v as usize] + 1;
            for i in 0..n {
                let d = (v / pow_q[i]) % q;
                let base = v - d * pow_q[i];
                for dd in 0..q {
                    if dd == d {
                        continue;
                    }
                    let u = base + dd * pow_q[i];
                    if dist[u as usize] == u8::MAX {
                        dist[u as usize] = reach;
                        next.push(u);
                    }
                }
            }
        }
        frontier = next;
    }

    // syndrome of every vector, maintained incrementally along the
    // odometer enumeration: stepping from index v to v+1 rolls low digits
    // q-1 -> 0 and increments the next one, adding parity columns as it
    // goes
    let r = code.redundancy();
    let num_syn = q.pow(r as u32) as usize;
    budget.check_syndromes(pow_u128(code.q(), r))?;
    let h = code.parity_basis();
    let cols: Vec<Vec<u8>> = (0..n).map(|j| h.column(j)).collect();
    let mut syn_of = vec![0u32; total];
    let mut vec_digits = vec![0u8; n];
    let mut syn_digits = vec![0u8; r];
    for v in 0..total {
        syn_of[v] = digits_to_index(&syn_digits, q) as u32;
        // advance the odometer
        for i in 0..n {
            let old = vec_digits[i];
            let new = if u64::from(old) + 1 == q { 0 } else { old + 1 };
            vec_digits[i] = new;
            let diff = field.sub(new, old);
            for (sd, &ce) in syn_digits.iter_mut().zip(&cols[i]) {
                *sd = field.add(*sd, field.mul(diff, ce));
            }
            if new != 0 {
                break;
            }
        }
    }

    // per-vector profiles, folded per coset with consistency checks
    let mut lw = vec![u8::MAX; num_syn];
    let mut profiles = vec![None::<(u64, u64, u64)>; num_syn];
    for v in 0..total {
        let here = dist[v];
        let mut profile = (0u64, 0u64, 0u64);
        let vu = v as u64;
        for i in 0..n {
            let d = (vu / pow_q[i]) % q;
            let base = vu - d * pow_q[i];
            for dd in 0..q {
                if dd == d {
                    continue;
                }
                let there = dist[(base + dd * pow_q[i]) as usize];
                match there.cmp(&here) {
                    std::cmp::Ordering::Less => profile.0 += 1,
                    std::cmp::Ordering::Equal => profile.1 += 1,
                    std::cmp::Ordering::Greater => profile.2 += 1,
                }
            }
        }
        let s = syn_of[v] as usize;
        if lw[s] == u8::MAX {
            lw[s] = here;
            profiles[s] = Some(profile);
        } else {
            assert_eq!(lw[s], here, "distance to code must be constant per coset");
            assert_eq!(
                profiles[s],
                Some(profile),
                "neighbor profile must be constant per coset"
            );
        }
    }
    let profiles: Vec<(u64, u64, u64)> = profiles
        .into_iter()
        .map(|p| p.expect("every coset holds at least one vector"))
        .collect();
    assert!(lw.iter().all(|&w| w != u8::MAX));
    Ok(assemble_report(code.q(), n, &lw, &profiles))
}

/// Number of weight-w vectors in each coset, indexed by syndrome.
pub fn coset_weight_slice(code: &LinearCode, w: usize, budget: &Budget) -> Result<Vec<u64>> {
    let q = code.q();
    let n = code.n();
    let r = code.redundancy();
    budget.check_syndromes(pow_u128(q, r))?;
    let enumeration = crate::util::binomial(n, w)
        * num_bigint::BigUint::from((q - 1) as u64).pow(w as u32);
    let enumeration_u128 = u128::try_from(enumeration).unwrap_or(u128::MAX);
    budget.check_vectors(enumeration_u128)?;

    let field = code.field().clone();
    let h = code.parity_basis();
    let cols: Vec<Vec<u8>> = (0..n).map(|j| h.column(j)).collect();
    let mut slice = vec![0u64; (q as u64).pow(r as u32) as usize];
    let mut syn_digits = vec![0u8; r];

    // choose support positions left to right, each with a nonzero value
    fn walk(
        field: &crate::field::Field,
        cols: &[Vec<u8>],
        q: u16,
        start: usize,
        remaining: usize,
        syn_digits: &mut Vec<u8>,
        slice: &mut [u64],
    ) {
        if remaining == 0 {
            slice[digits_to_index(syn_digits, q as u64) as usize] += 1;
            return;
        }
        let n = cols.len();
        for j in start..=(n - remaining) {
            for b in 1..q as u8 {
                for (sd, &ce) in syn_digits.iter_mut().zip(&cols[j]) {
                    *sd = field.add(*sd, field.mul(b, ce));
                }
                walk(field, cols, q, j + 1, remaining - 1, syn_digits, slice);
                for (sd, &ce) in syn_digits.iter_mut().zip(&cols[j]) {
                    *sd = field.sub(*sd, field.mul(b, ce));
                }
            }
        }
    }
    walk(&field, &cols, q, 0, w, &mut syn_digits, &mut slice);
    Ok(slice)
}

/// Uniformly-packed parameters (lambda, mu) of a quasi-perfect code:
/// lambda counts codewords at distance e+1 from a vector at distance e,
/// mu from a vector at distance e+1. Both counts equal the number of
/// weight-(e+1) vectors in the vector's coset, so each must be constant
/// over the cosets of its leader weight; `None` reports that one is not.
/// Fails with `NotQuasiPerfect` when the covering radius is not e+1.
pub fn uniformly_packed_params(
    code: &LinearCode,
    budget: &Budget,
) -> Result<Option<(u64, u64)>> {
    let e = code.packing_radius(budget)?;
    let analysis = analyze_cosets(code, budget)?;
    let rho = analysis.covering_radius();
    if rho != e + 1 {
        return Err(Error::NotQuasiPerfect { rho, e });
    }
    let slice = coset_weight_slice(code, e + 1, budget)?;
    let mut lambda = None;
    let mut mu = None;
    for (s, &count) in slice.iter().enumerate() {
        let l = analysis.leader_weights[s] as usize;
        let target = if l == e {
            &mut lambda
        } else if l == e + 1 {
            &mut mu
        } else {
            continue;
        };
        match *target {
            None => *target = Some(count),
            Some(seen) if seen != count => return Ok(None),
            Some(_) => {}
        }
    }
    Ok(Some((
        lambda.expect("a coset of leader weight e exists"),
        mu.expect("a coset of leader weight e + 1 exists"),
    )))
}
