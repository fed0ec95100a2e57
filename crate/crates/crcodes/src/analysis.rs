//! Closed-form predictions for the constructed families and the design /
//! extension counting checks that tie enumerated data back to them.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::budget::Budget;
use crate::code::LinearCode;
use crate::constructions::hamming_length;
use crate::cosets::IntersectionArray;
use crate::error::{Error, Result};
use crate::matrix::weight;
use crate::util::binomial;

/// The two concatenation families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    I,
    II,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s {
            "I" | "i" | "1" => Ok(Family::I),
            "II" | "ii" | "2" => Ok(Family::II),
            other => Err(Error::UnknownId(other.to_string())),
        }
    }
}

fn qk_pow(q: u16, e: usize) -> u64 {
    (u64::from(q)).pow(e as u32)
}

/// Predicted intersection array of a family code with covering radius 2:
///
///   family I  (2 <= c <= n):   {(q-1)nc, ((q-1)n-c+2)(c-1); 1, c(c-1)}
///   family II (1 <= c <= n-1): {(q-1)(c+3)n, (c+2)((q-1)n-1-c);
///                               1, (c+2)(c+3)}
///
/// The parameter points where the construction degenerates to a Hamming
/// code (family I with c = 1; family II with q = 2, c = n - 1) fall
/// outside these formulas and are rejected as `OutOfRange`.
pub fn predicted_ia(family: Family, q: u16, k: usize, c: usize) -> Result<IntersectionArray> {
    let n = hamming_length(q, k)? as u64;
    let qm1 = u64::from(q) - 1;
    let c = c as u64;
    match family {
        Family::I => {
            if c < 2 || c > n {
                return Err(Error::OutOfRange);
            }
            Ok(IntersectionArray {
                degree: qm1 * n * c,
                b: vec![qm1 * n * c, (qm1 * n - c + 2) * (c - 1)],
                c: vec![1, c * (c - 1)],
            })
        }
        Family::II => {
            if c < 1 || c > n - 1 || (q == 2 && c == n - 1) {
                return Err(Error::OutOfRange);
            }
            Ok(IntersectionArray {
                degree: qm1 * (c + 3) * n,
                b: vec![qm1 * (c + 3) * n, (c + 2) * (qm1 * n - 1 - c)],
                c: vec![1, (c + 2) * (c + 3)],
            })
        }
    }
}

/// Predicted number of weight-3 codewords:
///
///   family I:  (q-1)cn [(q-1)(n-1) + (c-1)(c-2)] / 6
///   family II: (c+3)n(q-1) [(n-1)(q-1) + (c+1)(c+2)] / 6
pub fn predicted_c3(family: Family, q: u16, k: usize, c: usize) -> Result<u64> {
    let n = hamming_length(q, k)? as u128;
    let qm1 = u128::from(q) - 1;
    let c = c as u128;
    let product = match family {
        Family::I => {
            if c < 1 || c > n {
                return Err(Error::OutOfRange);
            }
            // (c-1)(c-2) vanishes for c in {1, 2}; signed to avoid the
            // c = 1 underflow
            let tail = ((c as i128 - 1) * (c as i128 - 2)) as u128;
            qm1 * c * n * (qm1 * (n - 1) + tail)
        }
        Family::II => {
            if c < 1 || c > n - 1 {
                return Err(Error::OutOfRange);
            }
            (c + 3) * n * qm1 * ((n - 1) * qm1 + (c + 1) * (c + 2))
        }
    };
    assert_eq!(product % 6, 0, "the weight-3 count formula is integral");
    Ok((product / 6) as u64)
}

/// Predicted nonzero dual weights, ascending, each with its codeword count
/// when the closed form provides one:
///
///   family I (c >= 2): (c-1)q^{k-1} with count c(q^k - 1), and cq^{k-1}
///     with count q^{2k} - c(q^k - 1) - 1.
///   family II: (c+2)q^{k-1} and (c+3)q^{k-1}, counts not predicted --
///     except for q = 2, c = n - 1 where the single weight 2^{2k-1}
///     carries all 2^{2k} - 1 nonzero dual words.
pub fn predicted_dual_weights(
    family: Family,
    q: u16,
    k: usize,
    c: usize,
) -> Result<Vec<(usize, Option<u64>)>> {
    let n = hamming_length(q, k)?;
    let qk1 = qk_pow(q, k - 1) as usize;
    let qk = qk_pow(q, k);
    match family {
        Family::I => {
            if c < 2 || c > n {
                return Err(Error::OutOfRange);
            }
            let low_count = c as u64 * (qk - 1);
            let high_count = qk_pow(q, 2 * k) - low_count - 1;
            Ok(vec![
                ((c - 1) * qk1, Some(low_count)),
                (c * qk1, Some(high_count)),
            ])
        }
        Family::II => {
            if c < 1 || c > n - 1 {
                return Err(Error::OutOfRange);
            }
            if q == 2 && c == n - 1 {
                let w = qk_pow(2, 2 * k - 1) as usize;
                return Ok(vec![(w, Some(qk_pow(2, 2 * k) - 1))]);
            }
            Ok(vec![((c + 2) * qk1, None), ((c + 3) * qk1, None)])
        }
    }
}

/// Intersection array of the extended second-family binary code with
/// c = 2^{k-1} - 2, k >= 3: a [N, N - 2k - 1, 4; 3] code with
/// N = 2^{2k-1} + 2^{k-1} and
///
///   {N, N-1, 2^{2k-2}; 1, 2^{k-1}(2^{k-1} + 1), N}.
pub fn predicted_ia_extended_ii(k: usize) -> Result<IntersectionArray> {
    if k < 3 {
        return Err(Error::OutOfRange);
    }
    let n_ext = qk_pow(2, 2 * k - 1) + qk_pow(2, k - 1);
    Ok(IntersectionArray {
        degree: n_ext,
        b: vec![n_ext, n_ext - 1, qk_pow(2, 2 * k - 2)],
        c: vec![1, qk_pow(2, k - 1) * (qk_pow(2, k - 1) + 1), n_ext],
    })
}

/// Predicted number of weight-4 words in the extended second-family code:
/// 2^{k-1} (2^{2k-2} - 1)(2^{2k} - 1)(2^{k-2} + 1) / 12.
pub fn predicted_extended_ii_c4(k: usize) -> Result<u64> {
    if k < 3 {
        return Err(Error::OutOfRange);
    }
    let p = |e: usize| u128::from(qk_pow(2, e));
    let product = p(k - 1) * (p(2 * k - 2) - 1) * (p(2 * k) - 1) * (p(k - 2) + 1);
    assert_eq!(product % 12, 0, "the weight-4 count formula is integral");
    Ok((product / 12) as u64)
}

/// Lambda of the 2-(N, 4, lambda) design formed by those weight-4 words:
/// (2^{2k-2} - 1)(2^k - 1)(2^{k-2} + 1) / (2^{k-1}(2^k + 1) - 1).
pub fn predicted_extended_ii_design_lambda(k: usize) -> Result<u64> {
    if k < 3 {
        return Err(Error::OutOfRange);
    }
    let p = |e: usize| u128::from(qk_pow(2, e));
    let numerator = (p(2 * k - 2) - 1) * (p(k) - 1) * (p(k - 2) + 1);
    let denominator = p(k - 1) * (p(k) + 1) - 1;
    assert_eq!(
        numerator % denominator,
        0,
        "the design lambda formula is integral"
    );
    Ok((numerator / denominator) as u64)
}

/// Derived design index: in a t-(v, w, lambda) design every i-subset of
/// points (i <= t) lies in exactly
///
///   lambda_i = lambda C(v-i, t-i) / C(w-i, t-i)
///
/// blocks. `NotIntegral` reports the i at which the division fails, which
/// rules the claimed design out.
pub fn design_lambda_i(t: usize, v: usize, w: usize, lambda: u64, i: usize) -> Result<u64> {
    if i > t || t > w || w > v {
        return Err(Error::OutOfRange);
    }
    let numerator = BigUint::from(lambda) * binomial(v - i, t - i);
    let denominator = binomial(w - i, t - i);
    if (&numerator % &denominator) != BigUint::zero() {
        return Err(Error::NotIntegral(i));
    }
    Ok(u64::try_from(numerator / denominator).expect("design counts fit in u64"))
}

/// Checks whether constant-weight words form a t-design in the q-ary
/// sense: every weight-t vector is at distance w - t from the same number
/// lambda of the given words (for binary words this is the classical
/// "every t-subset of points lies in lambda blocks"). Returns
/// `Some(lambda)` when constant, `None` when not. The words must all have
/// one weight w (`MixedWeights` otherwise) with t <= w (`OutOfRange`).
pub fn verify_design(
    q: u16,
    words: &[Vec<u8>],
    t: usize,
    budget: &Budget,
) -> Result<Option<u64>> {
    let Some(first) = words.first() else {
        return Err(Error::OutOfRange);
    };
    let n = first.len();
    let w = weight(first);
    if words.iter().any(|x| weight(x) != w || x.len() != n) {
        return Err(Error::MixedWeights);
    }
    if t > w {
        return Err(Error::OutOfRange);
    }
    let space = binomial(n, t) * BigUint::from(u64::from(q) - 1).pow(t as u32);
    budget.check_vectors(u128::try_from(&space).unwrap_or(u128::MAX))?;

    // a weight-t vector y is at distance w - t from x exactly when x
    // agrees with y on all of y's support, so covered vectors are the
    // t-subvectors of the words
    let mut counts: BTreeMap<Vec<u8>, u64> = BTreeMap::new();
    let mut support = Vec::with_capacity(w);
    for x in words {
        support.clear();
        support.extend(x.iter().enumerate().filter(|(_, &e)| e != 0).map(|(i, _)| i));
        let mut pick = vec![0usize; t];
        subsets(&support, t, &mut pick, 0, 0, &mut |chosen| {
            let mut y = vec![0u8; n];
            for &pos in chosen {
                y[pos] = x[pos];
            }
            *counts.entry(y).or_insert(0) += 1;
        });
    }
    // vectors covered zero times count too: the design is constant only
    // if every weight-t vector appears
    if BigUint::from(counts.len() as u64) != space {
        return Ok(None);
    }
    let mut values = counts.values();
    let lambda = *values.next().expect("at least one covered vector");
    Ok(values.all(|&v| v == lambda).then_some(lambda))
}

fn subsets(
    items: &[usize],
    t: usize,
    pick: &mut Vec<usize>,
    start: usize,
    depth: usize,
    f: &mut impl FnMut(&[usize]),
) {
    if depth == t {
        f(pick);
        return;
    }
    for i in start..=items.len() - (t - depth) {
        pick[depth] = items[i];
        subsets(items, t, pick, i + 1, depth + 1, f);
    }
}

/// Weight-count identities tying a binary code to its extension: for all
/// odd w,
///
///   |C*_{w+1}| (w+1) = (n+1) |C_w|   and   (n-w) |C_w| = (w+1) |C_{w+1}|.
///
/// These hold whenever the extension is completely regular with minimum
/// distance at least 4. `NotExtensionPair` rejects inputs where the
/// second code is not the extension of the first or the field is not
/// GF(2).
pub fn check_estesos(
    code: &LinearCode,
    extended: &LinearCode,
    budget: &Budget,
) -> Result<bool> {
    let n = code.n();
    if code.q() != 2
        || extended.q() != 2
        || extended.n() != n + 1
        || extended.k() != code.k()
        || !code
            .extend()
            .generator()
            .row_space_equal(extended.generator())?
    {
        return Err(Error::NotExtensionPair);
    }
    let own = code.full_weight_distribution(budget)?;
    let ext = extended.full_weight_distribution(budget)?;
    let zero = BigUint::zero();
    let count = |dist: &crate::code::WeightDistribution, w: usize| {
        if w < dist.len() {
            dist.count(w).clone()
        } else {
            zero.clone()
        }
    };
    for w in (1..=n).step_by(2) {
        let c_w = count(&own, w);
        let c_w1 = count(&own, w + 1);
        let ext_w1 = count(&ext, w + 1);
        if ext_w1 * BigUint::from(w as u64 + 1) != BigUint::from(n as u64 + 1) * &c_w {
            return Ok(false);
        }
        if BigUint::from((n - w) as u64) * &c_w != BigUint::from(w as u64 + 1) * c_w1 {
            return Ok(false);
        }
    }
    Ok(true)
}
