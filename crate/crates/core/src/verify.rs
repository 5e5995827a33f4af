//! Self-check harness behind `springer verify`: each criterion compares a
//! structural computation against an independent count.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::finfield::{
    count_complete_flags, count_component_points, count_fixed_flags, enumerate_fixed_flags, stratum_flags, FieldError,
    NilpotentOp, PrimeField,
};
use crate::grothendieck::{flag_class, MotiveClass};
use crate::strata::{enumerate_strata, fiber_class};
use crate::tableau::{enumerate_standard, induced_tableau, OrderedPair, TwoColumnTableau};
use crate::tower::{motive_of, normalize, tower_of};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub fields: Vec<u32>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 5,
            fields: vec![2, 3],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub max_n: usize,
    pub fields: Vec<u32>,
    pub criteria: Vec<CriterionResult>,
}

impl VerificationSummary {
    pub fn all_passed(&self) -> bool {
        self.criteria.iter().all(|c| c.passed)
    }
}

/// Outcome of one criterion: pass/fail and a one-line explanation.
type Check = Result<(bool, String), FieldError>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

/// Runs every criterion in a fixed order. Field and capacity problems abort
/// the run; mismatches are reported as failed criteria.
pub fn run_verification(config: &VerifyConfig) -> Result<VerificationSummary, FieldError> {
    let fields = config
        .fields
        .iter()
        .map(|&t| PrimeField::new(t))
        .collect::<Result<Vec<_>, _>>()?;
    let n = config.max_n;
    let checks: [Criterion<'_>; 9] = [
        ("component census", Box::new(move || census(n))),
        ("fiber point counts", Box::new(|| fiber_counts(n.min(5), &fields))),
        ("component point counts", Box::new(|| component_counts(n.min(5), &fields))),
        ("polynomial identification", Box::new(polynomial_identification)),
        ("tower law", Box::new(move || tower_law(n))),
        ("alternating case", Box::new(|| alternating(n, &fields))),
        ("flag-variety counts", Box::new(|| flag_counts(n.min(4), &fields))),
        ("stratification partition", Box::new(|| strata_partition(n.min(5), &fields))),
        ("worked pair examples", Box::new(worked_pairs)),
    ];
    let mut criteria = Vec::with_capacity(checks.len());
    for (i, (name, check)) in checks.iter().enumerate() {
        let (passed, detail) = check()?;
        criteria.push(CriterionResult {
            id: i as u8 + 1,
            name: name.to_string(),
            passed,
            detail,
        });
    }
    Ok(VerificationSummary {
        max_n: config.max_n,
        fields: config.fields.clone(),
        criteria,
    })
}

/// Two-block types `(p, q)` with `q >= min_q` and `p + q <= max_n`.
fn types(max_n: usize, min_q: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=max_n).flat_map(move |n| (min_q..=n / 2).map(move |q| (n - q, q)))
}

/// Words over {1, 2} with `p` ones and `q` twos whose every suffix has at least
/// as many 1s as 2s, counted from the right end.
fn ballot_count(p: usize, q: usize) -> u64 {
    let mut g = vec![vec![0u64; q + 1]; p + 1];
    for i in 0..=p {
        for j in 0..=q.min(i) {
            g[i][j] = if i == 0 && j == 0 {
                1
            } else {
                (if i > 0 && j < i { g[i - 1][j] } else { 0 }) + (if j > 0 { g[i][j - 1] } else { 0 })
            };
        }
    }
    g[p][q]
}

fn mismatch(what: String) -> Check {
    Ok((false, what))
}

fn census(max_n: usize) -> Check {
    let mut checked = 0;
    for (p, q) in types(max_n, 0) {
        let tableaux = enumerate_standard(p, q).map_err(|_| FieldError::BadPartition(vec![p, q]))?.len() as u64;
        let top = enumerate_strata(p, q)
            .map_err(|_| FieldError::BadPartition(vec![p, q]))?
            .iter()
            .filter(|w| w.dim() == q)
            .count() as u64;
        let expected = ballot_count(p, q);
        if tableaux != expected || top != expected {
            return mismatch(format!("type ({p},{q}): {tableaux} tableaux, {top} top strata, {expected} ballot words"));
        }
        checked += 1;
    }
    Ok((true, format!("{checked} types with p+q <= {max_n}")))
}

fn fiber_counts(max_n: usize, fields: &[PrimeField]) -> Check {
    let mut checked = 0;
    for (p, q) in types(max_n, 1) {
        let class = fiber_class(p, q).expect("types() yields valid types");
        for &f in fields {
            let count = count_fixed_flags(&NilpotentOp::two_block(p, q, f)?)?;
            let expected = class.specialize(f.order() as u64);
            if BigInt::from(count) != expected {
                return mismatch(format!("type ({p},{q}) over {f}: {count} flags, class gives {expected}"));
            }
            checked += 1;
        }
    }
    Ok((true, format!("{checked} (type, field) cases")))
}

fn component_counts(max_n: usize, fields: &[PrimeField]) -> Check {
    let mut checked = 0;
    for (p, q) in types(max_n, 1) {
        for t in enumerate_standard(p, q).expect("types() yields valid types") {
            for &f in fields {
                let count = count_component_points(&t, f)?;
                let expected = (1 + f.order() as u64).pow(q as u32);
                if count != expected {
                    return mismatch(format!("{} over {f}: {count} points, expected {expected}", t.psi_string()));
                }
                checked += 1;
            }
        }
    }
    Ok((true, format!("{checked} (tableau, field) cases")))
}

/// Coefficients of the polynomial of degree `< xs.len()` through the points,
/// or `None` if they are not integers.
pub fn interpolate(xs: &[i128], ys: &[i128]) -> Option<Vec<i128>> {
    let k = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..k {
        for i in (level..k).rev() {
            let num = dd[i] - dd[i - 1];
            let den = xs[i] - xs[i - level];
            if num % den != 0 {
                return None;
            }
            dd[i] = num / den;
        }
    }
    // Expand the Newton form from the innermost coefficient outwards.
    let mut poly = vec![0i128; k];
    for i in (0..k).rev() {
        let mut next = vec![0i128; k];
        for (d, &c) in poly.iter().enumerate() {
            if c != 0 {
                next[d + 1] += c;
                next[d] -= c * xs[i];
            }
        }
        next[0] += dd[i];
        poly = next;
    }
    while poly.len() > 1 && poly.last() == Some(&0) {
        poly.pop();
    }
    Some(poly)
}

fn polynomial_identification() -> Check {
    let t = TwoColumnTableau::from_psi(&[2, 2, 1, 1]).expect("2211 is a ballot word");
    let xs = [2i128, 3, 5];
    let mut ys = Vec::new();
    for &x in &xs {
        ys.push(count_component_points(&t, PrimeField::new(x as u32)?)? as i128);
    }
    let poly = interpolate(&xs, &ys);
    if poly.as_deref() != Some(&[1, 2, 1][..]) {
        return mismatch(format!("counts {ys:?} interpolate to {poly:?}"));
    }
    let class = motive_of(&t);
    let betti = class.poincare().expect("tower classes have nonnegative coefficients");
    let expected: Vec<BigInt> = [1, 0, 2, 0, 1].into_iter().map(BigInt::from).collect();
    if betti != expected || class.euler_characteristic() != BigInt::from(4) {
        return mismatch(format!("Betti {betti:?}, Euler {}", class.euler_characteristic()));
    }
    Ok((true, "counts 9, 16, 36 fit 1 + 2*t + t^2; Betti (1,0,2,0,1), Euler 4".to_string()))
}

fn tower_law(max_n: usize) -> Check {
    let mut checked = 0;
    for (p, q) in types(max_n, 0) {
        for t in enumerate_standard(p, q).expect("types() yields valid types") {
            let tower = tower_of(&t);
            let mut right = t.tableau().columns().get(1).cloned().unwrap_or_default();
            right.sort_unstable();
            if tower.p1_positions() != right || tower.q() != q {
                return mismatch(format!("{}: tower {tower}", t.psi_string()));
            }
            checked += 1;
        }
    }
    Ok((true, format!("{checked} tableaux with p+q <= {max_n}")))
}

fn alternating(max_n: usize, fields: &[PrimeField]) -> Check {
    let mut checked = 0;
    for q in 1..=max_n / 2 {
        let psi: Vec<u8> = [2, 1].repeat(q);
        let t = TwoColumnTableau::from_psi(&psi).expect("alternating words are ballot words");
        let nf = normalize(&t);
        let leaves_ok = nf.leaves().len() == q && nf.leaves().iter().all(|l| l.jordan_type() == (1, 1));
        if !leaves_ok || nf.split_count() != q - 1 {
            return mismatch(format!("q = {q}: normal form {nf}"));
        }
        if motive_of(&t) != MotiveClass::projective_line().pow(q) {
            return mismatch(format!("q = {q}: class {}", motive_of(&t)));
        }
        for &f in fields {
            let count = count_component_points(&t, f)?;
            if count != (1 + f.order() as u64).pow(q as u32) {
                return mismatch(format!("q = {q} over {f}: {count} points"));
            }
        }
        checked += 1;
    }
    Ok((true, format!("q = 1..={}", checked)))
}

fn flag_counts(max_m: usize, fields: &[PrimeField]) -> Check {
    for m in 1..=max_m {
        for &f in fields {
            let count = count_complete_flags(m, f)?;
            let expected = flag_class(m).specialize(f.order() as u64);
            if BigInt::from(count) != expected {
                return mismatch(format!("m = {m} over {f}: {count} flags, class gives {expected}"));
            }
        }
    }
    Ok((true, format!("m <= {max_m}")))
}

fn strata_partition(max_n: usize, fields: &[PrimeField]) -> Check {
    use std::collections::HashSet;
    let mut checked = 0;
    for (p, q) in types(max_n, 1) {
        for &f in fields {
            let op = NilpotentOp::two_block(p, q, f)?;
            let all: HashSet<_> = enumerate_fixed_flags(&op)?.into_iter().collect();
            let mut seen = HashSet::with_capacity(all.len());
            for w in enumerate_strata(p, q).expect("types() yields valid types") {
                for flag in stratum_flags(&op, &w)? {
                    if !seen.insert(flag) {
                        return mismatch(format!("type ({p},{q}) over {f}: stratum {w} meets an earlier one"));
                    }
                }
            }
            if seen != all {
                return mismatch(format!("type ({p},{q}) over {f}: strata cover {} of {} flags", seen.len(), all.len()));
            }
            checked += 1;
        }
    }
    Ok((true, format!("{checked} (type, field) cases")))
}

fn worked_pairs() -> Check {
    let first = OrderedPair::from_map(&[(1, 1), (2, 1), (3, 2), (4, 2), (5, 3)]).expect("valid pair");
    let second = OrderedPair::from_map(&[(1, 2), (4, 2), (2, 3), (5, 1), (3, 1)]).expect("valid pair");
    let (a, b) = (induced_tableau(&first), induced_tableau(&second));
    let ok = a.is_young() && !a.is_standard() && b.is_young() && b.is_standard();
    Ok((ok, format!("{a}: young, not standard; {b}: standard")))
}
